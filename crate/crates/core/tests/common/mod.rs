#![allow(dead_code)]

use rand::Rng;
use zeon::{Blade, Complex64, Graph, Zeon, ZeonMatrix};

/// Every labeled graph on at most five vertices, then fifty seeded random
/// graphs on six to eight vertices.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=5).flat_map(Graph::all_labeled).collect();
    out.extend(random_corpus());
    out
}

pub fn random_corpus() -> Vec<Graph> {
    (0..50u64)
        .map(|seed| Graph::random(6 + (seed % 3) as usize, 0.5, 1000 + seed).unwrap())
        .collect()
}

pub fn complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random element on generators `1..=n` with about `density` of all blades
/// present.
pub fn element(rng: &mut impl Rng, n: usize, density: f64) -> Zeon {
    Zeon::from_terms((0..1u64 << n).filter_map(|mask| {
        if rng.gen_bool(density) {
            Some((Blade(mask), complex(rng)))
        } else {
            None
        }
    }))
}

/// Random element whose scalar part has modulus at least `0.5`.
pub fn invertible(rng: &mut impl Rng, n: usize, density: f64) -> Zeon {
    let u = element(rng, n, density).dual_part();
    let r: f64 = rng.gen_range(0.5..2.0);
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    u + Zeon::scalar(Complex64::from_polar(r, theta))
}

pub fn nilpotent(rng: &mut impl Rng, n: usize, density: f64) -> Zeon {
    element(rng, n, density).dual_part()
}

pub fn matrix(rng: &mut impl Rng, m: usize, n: usize, density: f64) -> ZeonMatrix {
    let entries: Vec<Vec<Zeon>> = (0..m).map(|_| (0..m).map(|_| element(rng, n, density)).collect()).collect();
    ZeonMatrix::from_rows(entries)
}

/// `Σ coeff·ζ_I` from `(indices, numerator, denominator)` triples.
pub fn rational(scalar: f64, terms: &[(&[usize], i64, i64)]) -> Zeon {
    let mut out = Zeon::scalar(scalar);
    for (ix, num, den) in terms {
        out += &Zeon::blade(ix).scale(*num as f64 / *den as f64);
    }
    out
}

/// Dense Kronecker product.
pub fn kron(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a[0].len(), b[0].len());
    let mut out = vec![vec![Complex64::default(); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn dense_mul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let mut out = vec![vec![Complex64::default(); b[0].len()]; n];
    for i in 0..n {
        for (l, x) in a[i].iter().enumerate() {
            for (j, y) in b[l].iter().enumerate() {
                out[i][j] += x * y;
            }
        }
    }
    out
}

pub fn dense_add(a: &[Vec<Complex64>], b: &[Vec<Complex64>], s: Complex64) -> Vec<Vec<Complex64>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + s * y).collect())
        .collect()
}

pub fn dense_identity(d: usize) -> Vec<Vec<Complex64>> {
    (0..d)
        .map(|i| (0..d).map(|j| Complex64::new((i == j) as u8 as f64, 0.0)).collect())
        .collect()
}

/// `σ₀^{⊗(i−1)} ⊗ η ⊗ σ₀^{⊗(n−i)}` with `η = ½(σx + iσy)`.
pub fn generator_rep(i: usize, n: usize) -> Vec<Vec<Complex64>> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let sx = vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]];
    let sy = vec![vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]];
    let eta: Vec<Vec<Complex64>> = dense_add(&sx, &sy, c(0.0, 1.0))
        .into_iter()
        .map(|r| r.into_iter().map(|x| x * 0.5).collect())
        .collect();
    let mut out = vec![vec![c(1.0, 0.0)]];
    for k in 1..=n {
        let f = if k == i { eta.clone() } else { dense_identity(2) };
        out = kron(&out, &f);
    }
    out
}

/// Representation of `u` assembled from Kronecker products of generators.
pub fn kron_rep(u: &Zeon, n: usize) -> Vec<Vec<Complex64>> {
    let d = 1 << n;
    let mut out = vec![vec![Complex64::default(); d]; d];
    for (b, x) in u.terms() {
        let mut blade = dense_identity(d);
        for i in b.indices() {
            blade = dense_mul(&blade, &generator_rep(i, n));
        }
        out = dense_add(&out, &blade, x);
    }
    out
}
