//! Zeon polynomials, their induced complex polynomials, and spectrally
//! simple zeon zeros.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{re, Zeon};
use crate::error::{Result, ZeonError};
use crate::tol;

/// Complex polynomial with ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly(pub Vec<Complex64>);

/// A root of a [`ComplexPoly`] after clustering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexRoot {
    pub value: Complex64,
    pub multiplicity: usize,
    /// Another root lies within ten clustering radii.
    pub near_collision: bool,
}

impl ComplexRoot {
    pub fn is_simple(&self) -> bool {
        self.multiplicity == 1
    }
}

impl ComplexPoly {
    pub fn from_real(coeffs: &[f64]) -> ComplexPoly {
        ComplexPoly(coeffs.iter().map(|&v| re(v)).collect())
    }

    /// Degree after trimming exact zero leading coefficients.
    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .rposition(|c| *c != Complex64::default())
            .unwrap_or(0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::default(), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> ComplexPoly {
        ComplexPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `|f'(z0)| > SIMPLE_ROOT · max|coeff|`.
    pub fn is_simple_root(&self, z0: Complex64) -> bool {
        self.derivative().eval(z0).norm() > tol::SIMPLE_ROOT * self.max_abs_coeff()
    }

    /// All roots by Aberth–Ehrlich iteration, clustered into distinct roots
    /// with multiplicities and sorted by real then imaginary part.
    pub fn roots(&self) -> Result<Vec<ComplexRoot>> {
        self.roots_seeded(0x5eed)
    }

    pub fn roots_seeded(&self, seed: u64) -> Result<Vec<ComplexRoot>> {
        let n = self.degree();
        if n == 0 {
            return Err(ZeonError::DegreeZero);
        }
        let coeffs = &self.0[..=n];
        let raw = aberth(coeffs, seed);
        Ok(cluster(raw))
    }
}

fn aberth(coeffs: &[Complex64], seed: u64) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let p = ComplexPoly(monic);
    let dp = p.derivative();
    let center = -p.0[n - 1] / n as f64;
    // Geometric mean of root moduli about the centroid, bounded away from 0.
    let shifted0 = p.eval(center).norm();
    let radius = if shifted0 > 0.0 {
        shifted0.powf(1.0 / n as f64).max(1e-3)
    } else {
        1.0
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset: f64 = rng.gen_range(0.0..TAU);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let jitter: f64 = rng.gen_range(-0.1..0.1);
            let theta = offset + TAU * (k as f64 + 0.5 + jitter) / n as f64;
            center + Complex64::from_polar(radius * (1.0 + jitter), theta)
        })
        .collect();

    let backward = |w: Complex64| -> f64 {
        let r = w.norm();
        p.0.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    };
    for _ in 0..tol::ABERTH_MAX_ITER {
        let mut done = true;
        for k in 0..n {
            let pz = p.eval(z[k]);
            if pz.norm() <= f64::EPSILON * backward(z[k]) {
                continue;
            }
            let ratio = pz / dp.eval(z[k]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[k] -= step;
            if step.norm() > tol::ABERTH_RESIDUAL * z[k].norm().max(1.0) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    z
}

fn cluster(raw: Vec<Complex64>) -> Vec<ComplexRoot> {
    let n = raw.len();
    let radius = |a: Complex64, b: Complex64| tol::ROOT_CLUSTER * a.norm().max(b.norm()).max(1.0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (raw[i] - raw[j]).norm() <= radius(raw[i], raw[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, members)) => members.push(raw[i]),
            None => groups.push((r, vec![raw[i]])),
        }
    }
    let mut roots: Vec<ComplexRoot> = groups
        .into_iter()
        .map(|(_, members)| ComplexRoot {
            value: members.iter().sum::<Complex64>() / members.len() as f64,
            multiplicity: members.len(),
            near_collision: false,
        })
        .collect();
    for i in 0..roots.len() {
        for j in 0..roots.len() {
            if i != j
                && (roots[i].value - roots[j].value).norm()
                    <= 10.0 * radius(roots[i].value, roots[j].value)
            {
                roots[i].near_collision = true;
            }
        }
    }
    roots.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    roots
}

/// `φ(u) = Σ_ℓ α_ℓ u^ℓ` with zeon coefficients, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeonPoly {
    coeffs: Vec<Zeon>,
}

/// Outcome of the zeon Newton iteration, with the residual `φ(λ_k)` seen at
/// each step.
#[derive(Clone, Debug)]
pub struct NewtonTrace {
    pub root: Zeon,
    pub residuals: Vec<Zeon>,
}

impl ZeonPoly {
    /// Trailing zero coefficients are dropped; the zero polynomial keeps a
    /// single zero coefficient.
    pub fn new(mut coeffs: Vec<Zeon>) -> ZeonPoly {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zeon::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Zeon::zero());
        }
        ZeonPoly { coeffs }
    }

    /// `lead · Π (u − rᵢ)`.
    pub fn from_roots(lead: &Zeon, roots: &[Zeon]) -> ZeonPoly {
        let mut coeffs = vec![lead.clone()];
        for r in roots {
            let mut next = vec![Zeon::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * r);
            }
            coeffs = next;
        }
        ZeonPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Zeon] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Zeon {
        self.coeffs.last().expect("nonempty")
    }

    /// Horner evaluation.
    pub fn eval(&self, u: &Zeon) -> Zeon {
        self.coeffs
            .iter()
            .rev()
            .fold(Zeon::zero(), |acc, c| &(&acc * u) + c)
    }

    pub fn derivative(&self) -> ZeonPoly {
        ZeonPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(k as f64))
                .collect(),
        )
    }

    /// `f_φ(z) = Σ_ℓ 𝔠α_ℓ z^ℓ`.
    pub fn induced(&self) -> ComplexPoly {
        ComplexPoly(self.coeffs.iter().map(Zeon::scalar_part).collect())
    }

    /// Largest coefficient distance to `other`.
    pub fn dist(&self, other: &ZeonPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Zeon::zero();
        (0..n)
            .map(|k| {
                self.coeffs
                    .get(k)
                    .unwrap_or(&zero)
                    .dist(other.coeffs.get(k).unwrap_or(&zero))
            })
            .fold(0.0, f64::max)
    }

    /// The unique zeon zero `λ` with `𝔠λ = λ0`, for `λ0` a simple zero of
    /// the induced polynomial.
    pub fn zeon_root(&self, lambda0: Complex64) -> Result<Zeon> {
        self.newton(&Zeon::scalar(lambda0), lambda0).map(|t| t.root)
    }

    /// Zeon Newton iteration `λ ← λ − φ(λ)·φ'(λ)⁻¹` from an arbitrary seed
    /// whose scalar part is (close to) `lambda0`.
    pub fn newton(&self, seed: &Zeon, lambda0: Complex64) -> Result<NewtonTrace> {
        if self.degree() == 0 {
            return Err(ZeonError::DegreeZero);
        }
        if !self.leading().is_invertible() {
            return Err(ZeonError::NotInvertible(format!(
                "leading coefficient {}",
                self.leading()
            )));
        }
        let induced = self.induced();
        if !induced.is_simple_root(lambda0) {
            return Err(ZeonError::NotSimpleRoot(format!("{lambda0}")));
        }
        let dphi = self.derivative();
        // Rounding floor for a Horner evaluation at |λ| scaled by 1/|f'(λ0)|.
        let abs_eval = |r: f64| {
            self.coeffs
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * r + c.max_abs())
        };
        let slope = induced.derivative().eval(lambda0).norm();

        let mut lambda = seed.clone();
        let mut residuals = Vec::new();
        let mut last_step = f64::INFINITY;
        const MAX_STEPS: usize = 100;
        for _ in 0..MAX_STEPS {
            let r = self.eval(&lambda);
            residuals.push(r.clone());
            if r.is_zero() {
                return Ok(NewtonTrace {
                    root: lambda,
                    residuals,
                });
            }
            let step = &r * &dphi.eval(&lambda).inverse()?;
            let size = step.max_abs();
            let scale = 1.0 + lambda.max_abs();
            let floor = 1e3 * f64::EPSILON * abs_eval(scale) / slope;
            if size >= last_step && size <= 1e-6 * scale {
                // Stalled at the rounding floor; the previous iterate stands.
                return Ok(NewtonTrace {
                    root: lambda,
                    residuals,
                });
            }
            lambda = &lambda - &step;
            if size <= floor.max(1e-15 * scale) {
                residuals.push(self.eval(&lambda));
                return Ok(NewtonTrace {
                    root: lambda,
                    residuals,
                });
            }
            last_step = size;
        }
        Err(ZeonError::NoConvergence {
            iterations: MAX_STEPS,
            residual: residuals.last().map_or(f64::NAN, Zeon::max_abs),
        })
    }

    /// Zeon zeros above every simple root of the induced polynomial, in the
    /// order of [`ComplexPoly::roots`]. When all roots are simple this is a
    /// full spectral splitting.
    pub fn simple_zeon_roots(&self) -> Result<Vec<Zeon>> {
        self.induced()
            .roots()?
            .into_iter()
            .filter(ComplexRoot::is_simple)
            .map(|r| self.zeon_root(r.value))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> Zeon {
        Zeon::generator(i)
    }

    fn poly(coeffs: &[Zeon]) -> ZeonPoly {
        ZeonPoly::new(coeffs.to_vec())
    }

    #[test]
    fn evaluation() {
        let p = poly(&[Zeon::scalar(-1.0), Zeon::zero(), Zeon::one()]);
        let u = Zeon::one() + z(1);
        assert!(p.eval(&u).approx_eq(&z(1).scale(2.0), 1e-12));
        let id = poly(&[Zeon::zero(), Zeon::one()]);
        assert_eq!(id.eval(&Zeon::blade(&[1, 2])), Zeon::blade(&[1, 2]));
        let three = poly(&[Zeon::scalar(3.0)]);
        assert_eq!(three.eval(&(z(4) + Zeon::scalar(7.0))), Zeon::scalar(3.0));
    }

    #[test]
    fn induced_polynomials() {
        let p = poly(&[Zeon::zero(), -(Zeon::one() + z(1)), Zeon::one()]);
        assert_eq!(p.induced(), ComplexPoly::from_real(&[0.0, -1.0, 1.0]));
        let q = poly(&[Zeon::scalar(2.0), z(1)]);
        assert_eq!(q.induced(), ComplexPoly::from_real(&[2.0, 0.0]));
        let cube = poly(&[Zeon::zero(), Zeon::zero(), Zeon::zero(), Zeon::one()]);
        assert_eq!(cube.induced(), ComplexPoly::from_real(&[0.0, 0.0, 0.0, 1.0]));
    }

    #[test]
    fn complex_roots_and_multiplicity() {
        let r = ComplexPoly::from_real(&[2.0, -3.0, 1.0]).roots().unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].value - re(1.0)).norm() < 1e-10 && r[0].is_simple());
        assert!((r[1].value - re(2.0)).norm() < 1e-10 && r[1].is_simple());

        let d = ComplexPoly::from_real(&[1.0, -2.0, 1.0]).roots().unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].multiplicity, 2);
        assert!((d[0].value - re(1.0)).norm() < 1e-7);

        let i = ComplexPoly::from_real(&[1.0, 0.0, 1.0]).roots().unwrap();
        assert_eq!(i.len(), 2);
        assert!((i[0].value - Complex64::new(0.0, -1.0)).norm() < 1e-10);
        assert!((i[1].value - Complex64::new(0.0, 1.0)).norm() < 1e-10);

        assert_eq!(
            ComplexPoly::from_real(&[5.0]).roots(),
            Err(ZeonError::DegreeZero)
        );
    }

    #[test]
    fn higher_degree_roots() {
        // (z-1)(z-2)…(z-8)
        let roots: Vec<Zeon> = (1..=8).map(|k| Zeon::scalar(k as f64)).collect();
        let p = ZeonPoly::from_roots(&Zeon::one(), &roots).induced();
        let found = p.roots().unwrap();
        assert_eq!(found.len(), 8);
        for (k, r) in found.iter().enumerate() {
            assert!((r.value - re(k as f64 + 1.0)).norm() < 1e-8, "{:?}", r);
        }
    }

    #[test]
    fn zeon_roots() {
        let p = poly(&[-(Zeon::one() + z(1).scale(2.0)), Zeon::zero(), Zeon::one()]);
        let root = p.zeon_root(re(1.0)).unwrap();
        assert!(root.approx_eq(&(Zeon::one() + z(1)), 1e-12), "{root}");

        let lin = poly(&[-(Zeon::scalar(3.0) + Zeon::blade(&[1, 2])), Zeon::one()]);
        assert!(lin
            .zeon_root(re(3.0))
            .unwrap()
            .approx_eq(&(Zeon::scalar(3.0) + Zeon::blade(&[1, 2])), 1e-12));

        let sq = poly(&[Zeon::zero(), Zeon::zero(), Zeon::one()]);
        assert!(matches!(sq.zeon_root(re(0.0)), Err(ZeonError::NotSimpleRoot(_))));
    }

    #[test]
    fn non_invertible_leading_coefficient() {
        let p = poly(&[Zeon::one(), z(1)]);
        assert!(matches!(p.zeon_root(re(1.0)), Err(ZeonError::NotInvertible(_))));
    }

    #[test]
    fn from_roots_expands() {
        let p = ZeonPoly::from_roots(&Zeon::one(), &[Zeon::scalar(1.0) + z(1), Zeon::scalar(2.0)]);
        // (u − 1 − ζ1)(u − 2) = u² − (3 + ζ1)u + 2 + 2ζ1
        let want = poly(&[
            Zeon::scalar(2.0) + z(1).scale(2.0),
            -(Zeon::scalar(3.0) + z(1)),
            Zeon::one(),
        ]);
        assert!(p.dist(&want) < 1e-12);
    }
}
