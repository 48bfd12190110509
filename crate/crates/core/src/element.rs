//! Elements of the complex zeon algebra `CZ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use rustc_hash::FxHashMap;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::blade::{Blade, MAX_GENERATORS};
use crate::error::{Result, ZeonError};
use crate::tol;

/// A zeon element `u = Σ_I u_I ζ_I` with finitely many nonzero complex
/// coefficients.
///
/// Terms are kept sorted by [`Blade`] order (grade, then mask) and are
/// pruned after every arithmetic operation: a coefficient is dropped when
/// its magnitude is at most [`tol::PRUNE_REL`] times the summed magnitudes
/// of the operand contributions that produced it, i.e. when it is the
/// residue of cancellation. Values are immutable once built.
#[derive(Clone, PartialEq, Default)]
pub struct Zeon {
    terms: Vec<(Blade, Complex64)>,
}

impl Zeon {
    pub fn zero() -> Zeon {
        Zeon { terms: Vec::new() }
    }

    pub fn one() -> Zeon {
        Zeon::scalar(1.0)
    }

    pub fn scalar(value: impl Into<Complex64>) -> Zeon {
        Zeon::term(Blade::SCALAR, value)
    }

    /// The generator `ζ_i` (1-indexed).
    pub fn generator(i: usize) -> Zeon {
        Zeon::term(Blade::generator(i), 1.0)
    }

    /// `ζ_I` for a list of 1-based indices.
    pub fn blade(indices: &[usize]) -> Zeon {
        Zeon::term(Blade::from_indices(indices.iter().copied()), 1.0)
    }

    pub fn term(blade: Blade, coeff: impl Into<Complex64>) -> Zeon {
        let coeff = coeff.into();
        if coeff == Complex64::new(0.0, 0.0) {
            Zeon::zero()
        } else {
            Zeon {
                terms: vec![(blade, coeff)],
            }
        }
    }

    /// Sums repeated blades; exact zeros are dropped.
    pub fn from_terms<I, C>(terms: I) -> Zeon
    where
        I: IntoIterator<Item = (Blade, C)>,
        C: Into<Complex64>,
    {
        let mut acc = Accumulator::default();
        for (b, v) in terms {
            acc.add(b, v.into());
        }
        acc.finish()
    }

    /// Iterates `(blade, coefficient)` in storage order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (Blade, Complex64)> + '_ {
        self.terms.iter().copied()
    }

    /// Terms sorted by grade and then lexicographic index list.
    pub fn terms_lex(&self) -> Vec<(Blade, Complex64)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| a.0.lex_cmp(&b.0));
        t
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `ζ_I`, i.e. `⟨u, ζ_I⟩`.
    pub fn coeff(&self, blade: Blade) -> Complex64 {
        self.terms
            .binary_search_by(|(b, _)| b.cmp(&blade))
            .map(|k| self.terms[k].1)
            .unwrap_or_default()
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max)
    }

    /// OR of every blade carrying a nonzero coefficient.
    pub fn support(&self) -> Blade {
        self.terms
            .iter()
            .fold(Blade::SCALAR, |acc, (b, _)| acc.union(*b))
    }

    /// Lowest grade carrying a nonzero coefficient.
    pub fn min_grade(&self) -> Option<usize> {
        self.terms.first().map(|(b, _)| b.grade())
    }

    pub fn scalar_part(&self) -> Complex64 {
        match self.terms.first() {
            Some((b, v)) if b.is_scalar() => *v,
            _ => Complex64::default(),
        }
    }

    pub fn dual_part(&self) -> Zeon {
        let skip = usize::from(matches!(self.terms.first(), Some((b, _)) if b.is_scalar()));
        Zeon {
            terms: self.terms[skip..].to_vec(),
        }
    }

    /// `(𝔠u, 𝔡u)`.
    pub fn decompose(&self) -> (Complex64, Zeon) {
        (self.scalar_part(), self.dual_part())
    }

    /// `⟨u⟩_k`, the grade-`k` part.
    pub fn grade_part(&self, k: usize) -> Zeon {
        Zeon {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .copied()
                .collect(),
        }
    }

    pub fn conj(&self) -> Zeon {
        Zeon {
            terms: self.terms.iter().map(|(b, v)| (*b, v.conj())).collect(),
        }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.terms.iter().all(|(_, v)| v.im.abs() <= tol)
    }

    /// `⟨u, v⟩ = Σ_I u_I conj(v_I)`.
    pub fn inner(&self, other: &Zeon) -> Complex64 {
        let (mut i, mut j) = (0, 0);
        let mut acc = Complex64::default();
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (self.terms[i], other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += a.1 * b.1.conj();
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// `𝔠u` vanishes within [`tol::SCALAR`].
    pub fn is_nilpotent(&self) -> bool {
        self.scalar_part().norm() <= tol::SCALAR
    }

    pub fn is_invertible(&self) -> bool {
        !self.is_nilpotent()
    }

    pub fn scale(&self, factor: impl Into<Complex64>) -> Zeon {
        let factor = factor.into();
        if factor == Complex64::default() {
            return Zeon::zero();
        }
        Zeon {
            terms: self.terms.iter().map(|(b, v)| (*b, v * factor)).collect(),
        }
    }

    fn merge(&self, other: &Zeon, sign: f64) -> Zeon {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let mut push = |b: Blade, v: Complex64| out.push((b, v));
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    push(self.terms[i].0, self.terms[i].1);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    push(other.terms[j].0, other.terms[j].1 * sign);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (x, y) = (self.terms[i].1, other.terms[j].1 * sign);
                    let v = x + y;
                    if !cancelled(v, x.norm() + y.norm()) {
                        push(self.terms[i].0, v);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Zeon { terms: out }
    }

    fn product(&self, other: &Zeon) -> Zeon {
        if self.is_zero() || other.is_zero() {
            return Zeon::zero();
        }
        if self.terms.len() == 1 && self.terms[0].0.is_scalar() {
            return other.scale(self.terms[0].1);
        }
        if other.terms.len() == 1 && other.terms[0].0.is_scalar() {
            return self.scale(other.terms[0].1);
        }
        let mut acc = Accumulator::with_capacity(self.terms.len() * other.terms.len() / 2);
        for &(a, x) in &self.terms {
            for &(b, y) in &other.terms {
                if a.is_disjoint(b) {
                    acc.add(a.union(b), x * y);
                }
            }
        }
        acc.finish()
    }

    /// `Σ αᵢ uᵢ`.
    pub fn linear_combine(pairs: &[(Complex64, Zeon)]) -> Zeon {
        let mut acc = Accumulator::default();
        for (a, u) in pairs {
            for (b, v) in u.terms() {
                acc.add(b, a * v);
            }
        }
        acc.finish()
    }

    pub fn pow(&self, k: usize) -> Zeon {
        let mut acc = Zeon::one();
        for _ in 0..k {
            acc = &acc * self;
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Least `κ ≥ 1` with `u^κ = 0`; `κ(0) = 1`.
    pub fn nilpotency_index(&self) -> Result<usize> {
        if !self.is_nilpotent() {
            return Err(ZeonError::NotNilpotent(format!("{}", self.scalar_part())));
        }
        let d = self.dual_part();
        let mut power = d.clone();
        let mut k = 1;
        while !power.is_zero() {
            power = &power * &d;
            k += 1;
            debug_assert!(k <= MAX_GENERATORS + 1);
        }
        Ok(k)
    }

    /// `u⁻¹ = (1/𝔠u) Σ_{j<κ} (−1)^j (𝔠u)^{−j} (𝔡u)^j`.
    pub fn inverse(&self) -> Result<Zeon> {
        let (s, d) = self.decompose();
        if s.norm() <= tol::SCALAR {
            return Err(ZeonError::NotInvertible(format!("{self}")));
        }
        let ratio = d.scale(-1.0 / s);
        let mut term = Zeon::one();
        let mut acc = Zeon::one();
        loop {
            term = &term * &ratio;
            if term.is_zero() {
                break;
            }
            acc += &term;
        }
        Ok(acc.scale(1.0 / s))
    }

    /// `e^{𝔠u} Σ_k (𝔡u)^k / k!`, a finite sum.
    pub fn exp(&self) -> Zeon {
        let (s, d) = self.decompose();
        let mut term = Zeon::one();
        let mut acc = Zeon::one();
        let mut k = 0.0;
        loop {
            k += 1.0;
            term = (&term * &d).scale(1.0 / k);
            if term.is_zero() {
                break;
            }
            acc += &term;
        }
        acc.scale(s.exp())
    }

    /// `u^{−1/2}` on the principal branch, for `𝔠u` real and positive:
    /// `(𝔠u)^{−1/2} Σ_k C(−½, k) (𝔡u/𝔠u)^k`.
    pub fn inv_sqrt(&self) -> Result<Zeon> {
        let (s, d) = self.decompose();
        if s.re <= tol::SCALAR || s.im.abs() > tol::SCALAR * s.re.max(1.0) {
            return Err(ZeonError::NotInvertible(format!(
                "inverse square root needs a positive real scalar part, got {s}"
            )));
        }
        let x = d.scale(1.0 / s.re);
        let mut coeff = 1.0;
        let mut power = Zeon::one();
        let mut acc = Zeon::one();
        let mut k = 0.0;
        loop {
            coeff *= (-0.5 - k) / (k + 1.0);
            k += 1.0;
            power = &power * &x;
            if power.is_zero() {
                break;
            }
            acc += &power.scale(coeff);
        }
        Ok(acc.scale(s.re.powf(-0.5)))
    }

    /// Largest coefficient magnitude of `self − other`.
    pub fn dist(&self, other: &Zeon) -> f64 {
        let (mut i, mut j) = (0, 0);
        let mut worst: f64 = 0.0;
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            let diff = match ord {
                std::cmp::Ordering::Less => {
                    i += 1;
                    self.terms[i - 1].1.norm()
                }
                std::cmp::Ordering::Greater => {
                    j += 1;
                    other.terms[j - 1].1.norm()
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (self.terms[i - 1].1 - other.terms[j - 1].1).norm()
                }
            };
            worst = worst.max(diff);
        }
        worst
    }

    pub fn approx_eq(&self, other: &Zeon, tol: f64) -> bool {
        self.dist(other) <= tol
    }

    /// Drops coefficients with magnitude at most `tol`.
    pub fn chop(&self, tol: f64) -> Zeon {
        Zeon {
            terms: self
                .terms
                .iter()
                .filter(|(_, v)| v.norm() > tol)
                .copied()
                .collect(),
        }
    }
}

fn cancelled(v: Complex64, magnitude: f64) -> bool {
    v == Complex64::default() || v.norm() <= tol::PRUNE_REL * magnitude
}

/// Per-blade running sums together with the summed magnitude of every
/// contribution, so that cancellation residue can be recognised.
#[derive(Default)]
struct Accumulator {
    sums: FxHashMap<Blade, (Complex64, f64)>,
}

impl Accumulator {
    fn with_capacity(n: usize) -> Self {
        let mut sums = FxHashMap::default();
        sums.reserve(n);
        Accumulator { sums }
    }

    fn add(&mut self, b: Blade, v: Complex64) {
        let e = self.sums.entry(b).or_default();
        e.0 += v;
        e.1 += v.norm();
    }

    fn finish(self) -> Zeon {
        let mut terms: Vec<_> = self
            .sums
            .into_iter()
            .filter(|(_, (v, mag))| !cancelled(*v, *mag))
            .map(|(b, (v, _))| (b, v))
            .collect();
        terms.sort_unstable_by_key(|t| t.0);
        Zeon { terms }
    }
}

impl From<f64> for Zeon {
    fn from(v: f64) -> Zeon {
        Zeon::scalar(v)
    }
}

impl From<Complex64> for Zeon {
    fn from(v: Complex64) -> Zeon {
        Zeon::scalar(v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Zeon> for &Zeon {
            type Output = Zeon;
            fn $m(self, rhs: &Zeon) -> Zeon {
                $body(self, rhs)
            }
        }
        impl $tr<Zeon> for Zeon {
            type Output = Zeon;
            fn $m(self, rhs: Zeon) -> Zeon {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Zeon> for Zeon {
            type Output = Zeon;
            fn $m(self, rhs: &Zeon) -> Zeon {
                $body(&self, rhs)
            }
        }
        impl $tr<Zeon> for &Zeon {
            type Output = Zeon;
            fn $m(self, rhs: Zeon) -> Zeon {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Zeon, b: &Zeon| a.merge(b, 1.0));
binop!(Sub, sub, |a: &Zeon, b: &Zeon| a.merge(b, -1.0));
binop!(Mul, mul, |a: &Zeon, b: &Zeon| a.product(b));

impl Mul<f64> for &Zeon {
    type Output = Zeon;
    fn mul(self, rhs: f64) -> Zeon {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for &Zeon {
    type Output = Zeon;
    fn mul(self, rhs: Complex64) -> Zeon {
        self.scale(rhs)
    }
}

impl AddAssign<&Zeon> for Zeon {
    fn add_assign(&mut self, rhs: &Zeon) {
        *self = self.merge(rhs, 1.0);
    }
}

impl SubAssign<&Zeon> for Zeon {
    fn sub_assign(&mut self, rhs: &Zeon) {
        *self = self.merge(rhs, -1.0);
    }
}

impl Neg for &Zeon {
    type Output = Zeon;
    fn neg(self) -> Zeon {
        self.scale(-1.0)
    }
}

impl Neg for Zeon {
    type Output = Zeon;
    fn neg(self) -> Zeon {
        self.scale(-1.0)
    }
}

impl std::iter::Sum for Zeon {
    fn sum<I: Iterator<Item = Zeon>>(iter: I) -> Zeon {
        iter.fold(Zeon::zero(), |a, b| a + b)
    }
}

fn fmt_real(v: f64) -> String {
    let r = v.round();
    if (v - r).abs() < 1e-12 {
        format!("{}", r as i64)
    } else {
        format!("{}", v)
    }
}

fn fmt_coeff(v: Complex64) -> (bool, String) {
    if v.im == 0.0 {
        (v.re < 0.0, fmt_real(v.re.abs()))
    } else if v.re == 0.0 {
        (v.im < 0.0, format!("{}i", fmt_real(v.im.abs())))
    } else {
        (false, format!("({}{:+}i)", fmt_real(v.re), v.im))
    }
}

impl fmt::Display for Zeon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (b, v)) in self.terms_lex().into_iter().enumerate() {
            let (neg, mag) = fmt_coeff(v);
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if b.is_scalar() {
                f.write_str(&mag)?;
            } else {
                if mag != "1" {
                    f.write_str(&mag)?;
                }
                write!(f, "ζ{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Zeon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zeon({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    indices: Vec<usize>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct ZeonRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for Zeon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ZeonRepr {
            terms: self
                .terms_lex()
                .into_iter()
                .map(|(b, v)| TermRepr {
                    indices: b.index_vec(),
                    re: v.re,
                    im: v.im,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Zeon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Zeon, D::Error> {
        let repr = ZeonRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let mut blade = Blade::SCALAR;
            for i in t.indices {
                if !(1..=MAX_GENERATORS).contains(&i) {
                    return Err(D::Error::custom(format!("generator index {i} outside 1..=64")));
                }
                if blade.contains(i) {
                    return Err(D::Error::custom(format!("repeated generator index {i}")));
                }
                blade = blade.with(i);
            }
            terms.push((blade, Complex64::new(t.re, t.im)));
        }
        Ok(Zeon::from_terms(terms))
    }
}

/// Shorthand for a real scalar as a complex number.
pub(crate) fn re(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> Zeon {
        Zeon::generator(i)
    }

    fn approx(a: &Zeon, b: &Zeon) {
        assert!(a.approx_eq(b, 1e-12), "{a} != {b}");
    }

    #[test]
    fn null_square_and_cross_terms() {
        let u = Zeon::one() + z(1);
        approx(&(&u * &u), &(Zeon::one() + z(1).scale(2.0)));
        let s = z(1) + z(2);
        approx(&(&s * &s), &Zeon::blade(&[1, 2]).scale(2.0));
        assert!((Zeon::blade(&[1, 2]) * Zeon::blade(&[2, 3])).is_zero());
    }

    #[test]
    fn linear_combinations() {
        let one = re(1.0);
        assert!(Zeon::linear_combine(&[(one, z(1)), (-one, z(1))]).is_zero());
        approx(
            &Zeon::linear_combine(&[(re(2.0), Zeon::one()), (re(3.0), z(2))]),
            &(Zeon::scalar(2.0) + z(2).scale(3.0)),
        );
        let i = Complex64::new(0.0, 1.0);
        assert_eq!(
            Zeon::linear_combine(&[(i, Zeon::blade(&[1, 2]))]).coeff(Blade::from_indices([1, 2])),
            i
        );
    }

    #[test]
    fn decompose_and_grades() {
        let u = Zeon::scalar(5.0) + z(1) + Zeon::blade(&[2, 3]);
        let (s, d) = u.decompose();
        assert_eq!(s, re(5.0));
        approx(&d, &(z(1) + Zeon::blade(&[2, 3])));
        assert_eq!(Zeon::zero().decompose(), (re(0.0), Zeon::zero()));
        let i3 = Zeon::scalar(Complex64::new(0.0, 3.0));
        assert_eq!(i3.decompose(), (Complex64::new(0.0, 3.0), Zeon::zero()));

        let v = Zeon::one() + z(1) + Zeon::blade(&[1, 2]).scale(2.0);
        approx(&v.grade_part(1), &z(1));
        approx(&v.grade_part(2), &Zeon::blade(&[1, 2]).scale(2.0));
        assert!(z(1).grade_part(0).is_zero());
    }

    #[test]
    fn conjugation() {
        let u = z(1).scale(Complex64::new(2.0, 1.0));
        assert_eq!(u.conj().coeff(Blade::generator(1)), Complex64::new(2.0, -1.0));
        let real = Zeon::scalar(3.0) + z(4);
        assert_eq!(real.conj(), real);
        let i = Zeon::scalar(Complex64::new(0.0, 1.0));
        assert_eq!(i.conj().scalar_part(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn inner_product_extracts_coefficients() {
        let u = Zeon::blade(&[1, 2]).scale(3.0) + z(1);
        assert_eq!(u.inner(&Zeon::blade(&[1, 2])), re(3.0));
        let iz = z(1).scale(Complex64::new(0.0, 1.0));
        assert_eq!(iz.inner(&iz), re(1.0));
        assert_eq!(z(1).inner(&z(2)), re(0.0));
    }

    #[test]
    fn nilpotency_indices() {
        assert_eq!(z(1).nilpotency_index(), Ok(2));
        assert_eq!((z(1) + z(2)).nilpotency_index(), Ok(3));
        assert_eq!(Zeon::zero().nilpotency_index(), Ok(1));
        assert!(matches!(
            (Zeon::one() + z(1)).nilpotency_index(),
            Err(ZeonError::NotNilpotent(_))
        ));
    }

    #[test]
    fn inverses() {
        let u = Zeon::scalar(2.0) + z(1);
        approx(&u.inverse().unwrap(), &(Zeon::scalar(0.5) - z(1).scale(0.25)));
        let v = Zeon::one() + z(1) + z(2);
        let expected = Zeon::one() - z(1) - z(2) + Zeon::blade(&[1, 2]).scale(2.0);
        approx(&v.inverse().unwrap(), &expected);
        assert!(matches!(z(1).inverse(), Err(ZeonError::NotInvertible(_))));
    }

    #[test]
    fn exponentials() {
        approx(&z(1).exp(), &(Zeon::one() + z(1)));
        approx(
            &(z(1) + z(2)).exp(),
            &(Zeon::one() + z(1) + z(2) + Zeon::blade(&[1, 2])),
        );
        approx(&Zeon::zero().exp(), &Zeon::one());
        let u = Zeon::scalar(0.5) + z(3);
        assert!((u.exp().scalar_part() - re(0.5f64.exp())).norm() < 1e-15);
    }

    #[test]
    fn inverse_square_roots() {
        let u = Zeon::scalar(4.0) + z(1).scale(4.0);
        let r = u.inv_sqrt().unwrap();
        approx(&r, &(Zeon::scalar(0.5) - z(1).scale(0.25)));
        approx(&(&(&r * &r) * &u), &Zeon::one());
        approx(&Zeon::one().inv_sqrt().unwrap(), &Zeon::one());
        assert!(z(1).inv_sqrt().is_err());
        assert!(Zeon::scalar(-1.0).inv_sqrt().is_err());
        assert!(Zeon::scalar(Complex64::new(1.0, 1.0)).inv_sqrt().is_err());
    }

    #[test]
    fn cancellation_prunes_to_exact_zero() {
        let third = Zeon::scalar(1.0 / 3.0) + z(1).scale(0.1);
        let diff = &(&third.scale(3.0) - &Zeon::one()) - &z(1).scale(0.3);
        assert!(diff.is_zero(), "{diff:?}");
    }

    #[test]
    fn display_uses_lexicographic_order() {
        let u = Zeon::scalar(2.0) + Zeon::blade(&[2, 3]) - Zeon::blade(&[1, 4]).scale(0.5);
        assert_eq!(u.to_string(), "2 - 0.5ζ{1,4} + ζ{2,3}");
        assert_eq!(Zeon::zero().to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let u = Zeon::one() + Zeon::blade(&[1, 5]) + z(2).scale(Complex64::new(0.0, -2.0));
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"indices":[],"re":1.0,"im":0.0},{"indices":[2],"re":0.0,"im":-2.0},{"indices":[1,5],"re":1.0,"im":0.0}]}"#
        );
        let back: Zeon = serde_json::from_str(&json).unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<Zeon>(r#"{"terms":[{"indices":[0],"re":1,"im":0}]}"#).is_err());
        assert!(serde_json::from_str::<Zeon>(r#"{"terms":[{"indices":[2,2],"re":1,"im":0}]}"#).is_err());
    }
}
