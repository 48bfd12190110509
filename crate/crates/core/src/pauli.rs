//! Faithful representation of the zeon algebra on `n` generators by
//! `2ⁿ × 2ⁿ` complex matrices, `ζ_i ↦ σ₀^{⊗(i−1)} ⊗ η ⊗ σ₀^{⊗(n−i)}` with
//! `η = [[0, 1], [0, 0]]`.
//!
//! Row and column indices are bit strings with generator 1 in the most
//! significant position, so `ζ_I` moves basis state `r` to `r ∪ I` whenever
//! `r ∩ I = ∅`.

use num_complex::Complex64;

use crate::blade::Blade;
use crate::cmat;
use crate::element::Zeon;
use crate::error::{Result, ZeonError};
use crate::tol;

/// Largest generator count the dense representation accepts.
pub const MAX_N: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl RepMatrix {
    pub fn identity(n: usize) -> Result<RepMatrix> {
        represent(&Zeon::one(), n)
    }

    /// Wraps a dense `2ⁿ × 2ⁿ` row-major matrix.
    pub fn from_dense(n: usize, data: Vec<Complex64>) -> Result<RepMatrix> {
        check_n(n)?;
        let dim = 1usize << n;
        if data.len() != dim * dim {
            return Err(ZeonError::DimMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        Ok(RepMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim() + c]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn mul(&self, other: &RepMatrix) -> Result<RepMatrix> {
        if self.n != other.n {
            return Err(ZeonError::DimMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let d = self.dim();
        let mut out = vec![Complex64::default(); d * d];
        for i in 0..d {
            for l in 0..d {
                let x = self.data[i * d + l];
                if x == Complex64::default() {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += x * other.data[l * d + j];
                }
            }
        }
        Ok(RepMatrix { n: self.n, data: out })
    }

    /// Dense complex inverse, `None` when singular.
    pub fn inverse(&self) -> Option<RepMatrix> {
        let d = self.dim();
        let rows: cmat::CMat = (0..d).map(|i| self.data[i * d..(i + 1) * d].to_vec()).collect();
        let inv = cmat::inverse(&rows, tol::MAX_CONDITION)?;
        Some(RepMatrix {
            n: self.n,
            data: inv.into_iter().flatten().collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &RepMatrix) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(ZeonError::TooLarge {
            what: "generator count",
            value: n,
            limit: MAX_N,
        });
    }
    Ok(())
}

/// Blade whose generators occupy the set bits of the index `mask`.
fn blade_of_index(mask: usize, n: usize) -> Blade {
    Blade::from_indices((1..=n).filter(|&i| mask & (1 << (n - i)) != 0))
}

fn index_of_blade(b: Blade, n: usize) -> usize {
    b.indices().map(|i| 1usize << (n - i)).sum()
}

pub fn represent(u: &Zeon, n: usize) -> Result<RepMatrix> {
    check_n(n)?;
    if let Some(index) = u.support().indices().find(|&i| i > n) {
        return Err(ZeonError::GeneratorOutOfRange { index, n });
    }
    let d = 1usize << n;
    let mut data = vec![Complex64::default(); d * d];
    for (b, x) in u.terms() {
        let shift = index_of_blade(b, n);
        for r in 0..d {
            if r & shift == 0 {
                data[r * d + (r | shift)] = x;
            }
        }
    }
    Ok(RepMatrix { n, data })
}

/// Inverse of [`represent`] on its image; the coefficient of `ζ_I` is
/// read from the first row.
pub fn unrepresent(m: &RepMatrix) -> Result<Zeon> {
    let d = m.dim();
    let u = Zeon::from_terms((0..d).map(|c| (blade_of_index(c, m.n), m.get(0, c))));
    let back = represent(&u, m.n)?;
    let scale = m.data.iter().map(|x| x.norm()).fold(1.0, f64::max);
    if back.max_abs_diff(m) > 1e-12 * scale {
        return Err(ZeonError::NotInImage);
    }
    Ok(u)
}
