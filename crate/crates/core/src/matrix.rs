//! Dense matrices and vectors over the zeon algebra.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmat::{self, CMat};
use crate::element::{re, Zeon};
use crate::error::{Result, ZeonError};
use crate::exec;
use crate::poly::ZeonPoly;
use crate::tol;

/// Row-major `rows × cols` zeon matrix.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "MatrixRepr", try_from = "MatrixRepr")]
pub struct ZeonMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Zeon>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    dim: [usize; 2],
    entries: Vec<Zeon>,
}

impl From<ZeonMatrix> for MatrixRepr {
    fn from(m: ZeonMatrix) -> Self {
        MatrixRepr {
            dim: [m.rows, m.cols],
            entries: m.data,
        }
    }
}

impl TryFrom<MatrixRepr> for ZeonMatrix {
    type Error = String;
    fn try_from(r: MatrixRepr) -> std::result::Result<Self, String> {
        let [rows, cols] = r.dim;
        if r.entries.len() != rows * cols {
            return Err(format!(
                "dim {rows}x{cols} needs {} entries, found {}",
                rows * cols,
                r.entries.len()
            ));
        }
        Ok(ZeonMatrix {
            rows,
            cols,
            data: r.entries,
        })
    }
}

/// Column vector of zeons.
#[derive(Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZeonVector(pub Vec<Zeon>);

/// Output of [`ZeonMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: ZeonMatrix,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
    /// Columns without an invertible pivot.
    pub free: Vec<usize>,
    /// `det(reduced) = det_factor · det(A)` for square `A`.
    pub det_factor: Zeon,
}

/// One term `λ π` of a spectral decomposition.
#[derive(Clone, Debug)]
pub struct SpectralTerm {
    pub eigenvalue: Zeon,
    pub eigenvector: ZeonVector,
    pub projector: ZeonMatrix,
}

impl ZeonMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ZeonMatrix {
        ZeonMatrix {
            rows,
            cols,
            data: vec![Zeon::zero(); rows * cols],
        }
    }

    pub fn identity(m: usize) -> ZeonMatrix {
        Self::diagonal(&vec![Zeon::one(); m])
    }

    pub fn diagonal(entries: &[Zeon]) -> ZeonMatrix {
        let m = entries.len();
        let mut out = Self::zeros(m, m);
        for (i, e) in entries.iter().enumerate() {
            out[(i, i)] = e.clone();
        }
        out
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Zeon>>) -> ZeonMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ZeonMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Zeon) -> ZeonMatrix {
        ZeonMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|k| f(k / cols, k % cols)).collect(),
        }
    }

    fn from_cmat(c: &CMat) -> ZeonMatrix {
        let cols = c.first().map_or(0, Vec::len);
        Self::from_fn(c.len(), cols, |i, j| Zeon::scalar(c[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Side length of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Zeon] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> ZeonVector {
        ZeonVector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn entries(&self) -> &[Zeon] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zeon::is_zero)
    }

    /// Entrywise scalar parts `𝔠A`.
    pub fn scalar_part(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Zeon::scalar_part).collect())
            .collect()
    }

    /// Entrywise dual parts `𝔡A`.
    pub fn dual_part(&self) -> ZeonMatrix {
        self.map(Zeon::dual_part)
    }

    pub fn map(&self, f: impl Fn(&Zeon) -> Zeon) -> ZeonMatrix {
        ZeonMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Union of all generators appearing in any entry.
    pub fn support(&self) -> crate::Blade {
        self.data
            .iter()
            .fold(crate::Blade::SCALAR, |b, e| b.union(e.support()))
    }

    pub fn transpose(&self) -> ZeonMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose `A†`.
    pub fn adjoint(&self) -> ZeonMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: &Zeon) -> ZeonMatrix {
        self.map(|e| e * s)
    }

    pub fn add(&self, other: &ZeonMatrix) -> Result<ZeonMatrix> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &ZeonMatrix) -> Result<ZeonMatrix> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &ZeonMatrix, f: impl Fn(&Zeon, &Zeon) -> Zeon) -> ZeonMatrix {
        ZeonMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn same_shape(&self, other: &ZeonMatrix) -> Result<()> {
        if self.rows != other.rows {
            return Err(ZeonError::DimMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(ZeonError::DimMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        Ok(())
    }

    /// `A B`, rows computed in parallel.
    pub fn mul(&self, other: &ZeonMatrix) -> Result<ZeonMatrix> {
        if self.cols != other.rows {
            return Err(ZeonError::DimMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let n = other.cols;
        let rows = exec::map_range(self.rows, |i| {
            let mut out = vec![Zeon::zero(); n];
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.row(l).iter().enumerate() {
                    if !b.is_zero() {
                        out[j] += &(a * b);
                    }
                }
            }
            out
        });
        Ok(ZeonMatrix {
            rows: self.rows,
            cols: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &ZeonVector) -> Result<ZeonVector> {
        if self.cols != x.len() {
            return Err(ZeonError::DimMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(ZeonVector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&x.0)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        ))
    }

    pub fn pow(&self, k: usize) -> Result<ZeonMatrix> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Zeon {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ZeonError::DimMismatch {
                expected: self.rows,
                found: self.cols,
            })
        }
    }

    /// Largest entrywise coefficient distance.
    pub fn dist(&self, other: &ZeonMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.dist(b))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ZeonMatrix, tol: f64) -> bool {
        self.dist(other) <= tol
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.is_square() && self.approx_eq(&self.adjoint(), tol)
    }

    /// Determinant by elimination on the invertible entry of largest scalar
    /// part in each column, expanding by cofactors along any column that
    /// has no invertible entry.
    pub fn determinant(&self) -> Result<Zeon> {
        self.require_square()?;
        let rows: Vec<Vec<Zeon>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        Ok(det_rec(rows))
    }

    /// `A⁻¹ = (𝔠A)⁻¹ Σ_ℓ (−1)^ℓ (𝔡A (𝔠A)⁻¹)^ℓ`.
    pub fn inverse(&self) -> Result<ZeonMatrix> {
        self.require_square()?;
        let m = self.rows;
        let c_inv = cmat::inverse(&self.scalar_part(), tol::MAX_CONDITION).ok_or(ZeonError::Singular)?;
        let c_inv = Self::from_cmat(&c_inv);
        let ratio = self.dual_part().mul(&c_inv)?.scale(&Zeon::scalar(-1.0));
        let mut term = Self::identity(m);
        let mut sum = Self::identity(m);
        let bound = m * (self.support().grade() + 1) + 1;
        for _ in 0..bound {
            term = term.mul(&ratio)?;
            if term.is_zero() {
                return c_inv.mul(&sum);
            }
            sum = sum.add(&term)?;
        }
        Err(ZeonError::NotNilpotent("dual part of matrix".into()))
    }

    /// Gauss–Jordan reduction using only invertible pivots, columns
    /// visited in `order`.
    pub fn rref_with_order(&self, order: &[usize]) -> Rref {
        let mut a = self.clone();
        let mut det_factor = Zeon::one();
        let mut pivots = Vec::new();
        let mut free = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == a.rows {
                free.push(c);
                continue;
            }
            let best = (r..a.rows)
                .max_by(|&x, &y| {
                    a[(x, c)]
                        .scalar_part()
                        .norm()
                        .total_cmp(&a[(y, c)].scalar_part().norm())
                })
                .expect("nonempty row range");
            if !a[(best, c)].is_invertible() {
                free.push(c);
                continue;
            }
            if best != r {
                a.swap_rows(best, r);
                det_factor = -det_factor;
            }
            let inv = a[(r, c)].inverse().expect("invertible pivot");
            for j in 0..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            a[(r, c)] = Zeon::one();
            det_factor = &det_factor * &inv;
            let pivot_row: Vec<Zeon> = a.row(r).to_vec();
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for (j, p) in pivot_row.iter().enumerate() {
                    if !p.is_zero() {
                        let v = &a[(i, j)] - &(&f * p);
                        a[(i, j)] = v;
                    }
                }
                a[(i, c)] = Zeon::zero();
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: a,
            pivots,
            free,
            det_factor,
        }
    }

    pub fn rref(&self) -> Rref {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `χ_A(t) = |tI − A|` by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Result<ZeonPoly> {
        self.require_square()?;
        let m = self.rows;
        let mut coeffs = vec![Zeon::zero(); m + 1];
        coeffs[m] = Zeon::one();
        let mut mk = Self::zeros(m, m);
        for k in 1..=m {
            for i in 0..m {
                let v = &mk[(i, i)] + &coeffs[m - k + 1];
                mk[(i, i)] = v;
            }
            let amk = self.mul(&mk)?;
            coeffs[m - k] = amk.trace().scale(-1.0 / k as f64);
            mk = amk;
        }
        Ok(ZeonPoly::new(coeffs))
    }

    /// The spectrally simple eigenpair above the simple eigenvalue `lambda0`
    /// of `𝔠A`. The eigenvector has component 1 at `pin` (0-based), or at
    /// the column left free by elimination when `pin` is `None`.
    pub fn eigenpair(&self, lambda0: Complex64, pin: Option<usize>) -> Result<(Zeon, ZeonVector)> {
        let chi = self.char_poly()?;
        let lambda = chi.zeon_root(lambda0)?;
        let v = self.eigenvector(&lambda, pin)?;
        Ok((lambda, v))
    }

    /// Solves `(A − λI) v = 0` with `v_pin = 1`.
    pub fn eigenvector(&self, lambda: &Zeon, pin: Option<usize>) -> Result<ZeonVector> {
        self.require_square()?;
        let m = self.rows;
        let shifted = self.sub(&Self::identity(m).scale(lambda))?;
        let order: Vec<usize> = match pin {
            Some(p) => (0..m).filter(|&c| c != p).chain([p]).collect(),
            None => (0..m).collect(),
        };
        let red = shifted.rref_with_order(&order);
        if red.free.len() != 1 {
            return Err(ZeonError::DegenerateSpectrum(format!(
                "{} free columns at eigenvalue {lambda}",
                red.free.len()
            )));
        }
        let f = red.free[0];
        if pin.is_some_and(|p| p != f) {
            return Err(ZeonError::DegenerateSpectrum(format!(
                "component {} cannot be pinned",
                pin.unwrap_or_default()
            )));
        }
        let mut v = vec![Zeon::zero(); m];
        v[f] = Zeon::one();
        for (r, &c) in red.pivots.iter().enumerate() {
            v[c] = -&red.reduced[(r, f)];
        }
        let v = ZeonVector(v);
        let residual = shifted.mul_vec(&v)?;
        let scale = 1.0 + self.max_abs() + lambda.max_abs();
        let worst = residual.max_abs();
        if worst > tol::RESIDUAL * scale {
            return Err(ZeonError::InconsistentSystem(worst));
        }
        Ok(v)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Zeon::max_abs).fold(0.0, f64::max)
    }

    /// Orthogonal spectral decomposition `A = Σ λᵢ vᵢ vᵢ†` of a
    /// self-adjoint matrix whose scalar part has distinct eigenvalues.
    pub fn spectral_decomposition(&self) -> Result<Vec<SpectralTerm>> {
        self.require_square()?;
        if !self.is_self_adjoint(tol::RESIDUAL) {
            return Err(ZeonError::NotSelfAdjoint);
        }
        let chi = self.char_poly()?;
        let roots = chi.induced().roots()?;
        if roots.len() != self.rows || roots.iter().any(|r| !r.is_simple()) {
            return Err(ZeonError::DegenerateSpectrum(format!(
                "{} distinct eigenvalues for dimension {}",
                roots.len(),
                self.rows
            )));
        }
        exec::par_map(&roots, |root| {
            let lambda = chi.zeon_root(re(root.value.re))?;
            let v = self.eigenvector(&lambda, None)?.normalize()?;
            let projector = v.outer(&v);
            Ok(SpectralTerm {
                eigenvalue: lambda,
                eigenvector: v,
                projector,
            })
        })
        .into_iter()
        .collect()
    }

    /// `exp A = Σ Aⁿ/n!` for `A` with nilpotent scalar part.
    pub fn exp(&self) -> Result<ZeonMatrix> {
        self.require_square()?;
        let m = self.rows;
        let bound = m * (self.support().grade() + 1);
        let mut term = Self::identity(m);
        let mut sum = Self::identity(m);
        for n in 1..=bound + 1 {
            term = term.mul(self)?.scale(&Zeon::scalar(1.0 / n as f64));
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&term)?;
        }
        Err(ZeonError::NotNilpotent(format!(
            "matrix powers survive past {bound}"
        )))
    }
}

fn det_rec(mut a: Vec<Vec<Zeon>>) -> Zeon {
    let n = a.len();
    match n {
        0 => return Zeon::one(),
        1 => return a[0][0].clone(),
        2 => return &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]),
        _ => {}
    }
    let best = (0..n)
        .max_by(|&x, &y| {
            a[x][0]
                .scalar_part()
                .norm()
                .total_cmp(&a[y][0].scalar_part().norm())
        })
        .expect("nonempty");
    if a[best][0].is_invertible() {
        let sign = if best != 0 {
            a.swap(0, best);
            -1.0
        } else {
            1.0
        };
        let pivot = a[0][0].clone();
        let inv = pivot.inverse().expect("invertible pivot");
        let top = a[0].clone();
        let minor: Vec<Vec<Zeon>> = a[1..]
            .iter()
            .map(|row| {
                let f = &row[0] * &inv;
                (1..n)
                    .map(|j| {
                        if f.is_zero() || top[j].is_zero() {
                            row[j].clone()
                        } else {
                            &row[j] - &(&f * &top[j])
                        }
                    })
                    .collect()
            })
            .collect();
        return (&pivot * &det_rec(minor)).scale(sign);
    }
    let mut acc = Zeon::zero();
    for r in 0..n {
        if a[r][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Zeon>> = a
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = &a[r][0] * &det_rec(minor);
        if r % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

impl Index<(usize, usize)> for ZeonMatrix {
    type Output = Zeon;
    fn index(&self, (i, j): (usize, usize)) -> &Zeon {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ZeonMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Zeon {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ZeonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ZeonVector {
    pub fn zeros(m: usize) -> ZeonVector {
        ZeonVector(vec![Zeon::zero(); m])
    }

    /// The Dirac vector `|j⟩` (0-based).
    pub fn basis(m: usize, j: usize) -> ZeonVector {
        let mut v = Self::zeros(m);
        v.0[j] = Zeon::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scalar_part(&self) -> Vec<Complex64> {
        self.0.iter().map(Zeon::scalar_part).collect()
    }

    pub fn scale(&self, s: &Zeon) -> ZeonVector {
        ZeonVector(self.0.iter().map(|e| e * s).collect())
    }

    pub fn sub(&self, other: &ZeonVector) -> ZeonVector {
        ZeonVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(Zeon::max_abs).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &ZeonVector) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.dist(b))
            .fold(0.0, f64::max)
    }

    /// `⟨x|y⟩ = y† x = Σ ȳᵢ xᵢ`.
    pub fn inner(&self, y: &ZeonVector) -> Zeon {
        self.0.iter().zip(&y.0).map(|(x, y)| &y.conj() * x).sum()
    }

    /// `|x|_⋆ = (𝔠⟨x|x⟩)^{1/2}`.
    pub fn seminorm(&self) -> f64 {
        self.inner(self).scalar_part().re.max(0.0).sqrt()
    }

    pub fn is_null(&self) -> bool {
        self.seminorm() <= tol::SINGULAR.sqrt()
    }

    /// `⟨x|x⟩^{−1/2} x`.
    pub fn normalize(&self) -> Result<ZeonVector> {
        if self.is_null() {
            return Err(ZeonError::NullVector);
        }
        let s = self.inner(self).inv_sqrt()?;
        Ok(self.scale(&s))
    }

    /// `x y†`.
    pub fn outer(&self, y: &ZeonVector) -> ZeonMatrix {
        ZeonMatrix::from_fn(self.len(), y.len(), |i, j| &self.0[i] * &y.0[j].conj())
    }
}

impl fmt::Debug for ZeonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})ᵀ", cells.join(", "))
    }
}

/// Gram–Schmidt with respect to `⟨·|·⟩`; every output is normalized.
pub fn orthogonalize(basis: &[ZeonVector]) -> Result<Vec<ZeonVector>> {
    let mut out: Vec<ZeonVector> = Vec::with_capacity(basis.len());
    for (k, v) in basis.iter().enumerate() {
        let mut w = v.clone();
        for u in &out {
            w = w.sub(&u.scale(&w.inner(u)));
        }
        if w.is_null() {
            return Err(ZeonError::DeficientSpan(k));
        }
        out.push(w.normalize()?);
    }
    Ok(out)
}
