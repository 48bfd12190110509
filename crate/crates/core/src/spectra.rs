//! Nilpotent adjacency matrices, zeon Laplacians, and the walk censuses
//! carried by their powers, exponentials, eigenvalues and eigenvectors.

use crate::blade::{Blade, MAX_GENERATORS};
use crate::census::{CensusKind, WalkCensus};
use crate::element::{re, Zeon};
use crate::error::{Result, ZeonError};
use crate::graph::{Graph, LabelKind, Labeling};
use crate::matrix::{ZeonMatrix, ZeonVector};
use crate::oracle;
use crate::poly::ZeonPoly;
use crate::tol;

/// `ψ_ij = ζ_j` for every edge `{v_i, v_j}`.
pub fn nilpotent_adjacency(g: &Graph) -> Result<ZeonMatrix> {
    if g.m() > MAX_GENERATORS {
        return Err(ZeonError::TooLarge {
            what: "vertex count",
            value: g.m(),
            limit: MAX_GENERATORS,
        });
    }
    Ok(ZeonMatrix::from_fn(g.m(), g.m(), |i, j| {
        if g.has_edge(i + 1, j + 1) {
            Zeon::generator(j + 1)
        } else {
            Zeon::zero()
        }
    }))
}

fn label_diagonal(g: &Graph, lab: &Labeling) -> Result<ZeonMatrix> {
    if lab.len() != g.m() {
        return Err(ZeonError::DimMismatch {
            expected: g.m(),
            found: lab.len(),
        });
    }
    let d: Vec<Zeon> = lab.values.iter().map(|&x| Zeon::scalar(x)).collect();
    Ok(ZeonMatrix::diagonal(&d))
}

/// `Λ = diag(labels) − Ψ`.
pub fn laplacian(g: &Graph, lab: &Labeling) -> Result<ZeonMatrix> {
    label_diagonal(g, lab)?.sub(&nilpotent_adjacency(g)?)
}

/// `Λ_sym = diag(labels) − (Ψ + Ψ†)`.
pub fn symmetric_laplacian(g: &Graph, lab: &Labeling) -> Result<ZeonMatrix> {
    let psi = nilpotent_adjacency(g)?;
    label_diagonal(g, lab)?.sub(&psi.add(&psi.adjoint())?)
}

/// `Λ_q = diag(q) − (Ψ + Ψ†)` for distinct positive `q`.
pub fn q_laplacian(g: &Graph, q: &Labeling) -> Result<ZeonMatrix> {
    let checked = Labeling::q(q.values.clone())?;
    symmetric_laplacian(g, &checked)
}

/// `ϰ_v = Π_{j ∈ I∖{v}} (label(v) − label(j))`.
pub fn kappa_factor(lab: &Labeling, v: usize, set: Blade) -> f64 {
    set.indices()
        .filter(|&j| j != v)
        .map(|j| lab.value(v) - lab.value(j))
        .product()
}

/// Census read off `Ψᵏ`: paths `i → j` from `⟨ζ_i|Ψᵏ|j⟩` when `i ≠ j`,
/// cycles from `⟨i|Ψᵏ|i⟩` otherwise.
pub fn census_from_power(power: &ZeonMatrix, i: usize, j: usize) -> Result<WalkCensus> {
    let entry = &power[(i - 1, j - 1)];
    if i == j {
        let mut c = WalkCensus::new(CensusKind::Cycles, i, i);
        for (b, v) in entry.terms() {
            c.add_decoded(b, v)?;
        }
        Ok(c)
    } else {
        let mut c = WalkCensus::new(CensusKind::Paths, i, j);
        for (b, v) in (&Zeon::generator(i) * entry).terms() {
            c.add_decoded(b.without(i), v)?;
        }
        Ok(c)
    }
}

/// `Ψ, Ψ², …, Ψᵐ`.
pub fn psi_powers(g: &Graph) -> Result<Vec<ZeonMatrix>> {
    let psi = nilpotent_adjacency(g)?;
    let mut out = vec![psi.clone()];
    for _ in 1..g.m() {
        let next = out.last().expect("nonempty").mul(&psi)?;
        out.push(next);
    }
    Ok(out)
}

/// `k`-paths `i → j` or `k`-cycles at `i` from `Ψᵏ`.
pub fn walk_census_from_powers(g: &Graph, k: usize, i: usize, j: usize) -> Result<WalkCensus> {
    if k == 0 || k > g.m() {
        return Err(ZeonError::TooLarge {
            what: "walk length",
            value: k,
            limit: g.m(),
        });
    }
    census_from_power(&nilpotent_adjacency(g)?.pow(k)?, i, j)
}

/// Cycles at `v` from `|I|! ⟨⟨v|e^Ψ|v⟩, ζ_I⟩`.
pub fn cycle_census_from_exp(g: &Graph, v: usize) -> Result<WalkCensus> {
    let e = nilpotent_adjacency(g)?.exp()?;
    cycle_census_from_exp_diag(&e[(v - 1, v - 1)], v)
}

pub(crate) fn cycle_census_from_exp_diag(entry: &Zeon, v: usize) -> Result<WalkCensus> {
    let mut c = WalkCensus::new(CensusKind::Cycles, v, v);
    for (b, x) in entry.terms().filter(|(b, _)| !b.is_scalar()) {
        c.add_decoded(b, x * factorial(b.grade()))?;
    }
    Ok(c)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// The `i`-th row sum of the degree Laplacian and the identities it obeys.
#[derive(Clone, Debug)]
pub struct RowSum {
    pub sum: Zeon,
    pub degree: usize,
    /// `(𝔡r)^deg = (−1)^deg · deg! · ζ_N`.
    pub dual_power_ok: bool,
    /// `κ(𝔡r) = deg + 1`.
    pub nilpotency_ok: bool,
    /// `r⁻¹ = (1/d) Σ_{k≤d} (−𝔡r/d)^k`, checked for `d > 0`.
    pub inverse_ok: bool,
    /// `exp r = Σ_{k≤d} e^d (𝔡r)^k / k!`.
    pub exp_ok: bool,
}

impl RowSum {
    pub fn all_ok(&self) -> bool {
        self.dual_power_ok && self.nilpotency_ok && self.inverse_ok && self.exp_ok
    }
}

pub fn row_sum(g: &Graph, i: usize) -> Result<RowSum> {
    let lap = laplacian(g, &Labeling::degree(g))?;
    let sum: Zeon = lap.row(i - 1).iter().cloned().sum();
    let d = g.degree(i);
    let df = d as f64;
    let dual = sum.dual_part();
    let sign = if d.is_multiple_of(2) { 1.0 } else { -1.0 };
    let want_power = Zeon::term(g.neighborhood(i), sign * factorial(d));
    let dual_power_ok = dual.pow(d).approx_eq(&want_power, tol::SCALAR);
    let nilpotency_ok = dual.nilpotency_index()? == d + 1;
    let inverse_ok = if d == 0 {
        !sum.is_invertible()
    } else {
        let step = dual.scale(-1.0 / df);
        let series: Zeon = (0..=d).map(|k| step.pow(k)).sum::<Zeon>().scale(1.0 / df);
        let inv = sum.inverse()?;
        inv.approx_eq(&series, tol::SCALAR) && (&inv * &sum).approx_eq(&Zeon::one(), tol::SCALAR)
    };
    let series: Zeon = (0..=d)
        .map(|k| dual.pow(k).scale(df.exp() / factorial(k)))
        .sum();
    let exp = sum.exp();
    let exp_ok = exp.dist(&series) <= tol::SCALAR * df.exp().max(1.0);
    Ok(RowSum {
        sum,
        degree: d,
        dual_power_ok,
        nilpotency_ok,
        inverse_ok,
        exp_ok,
    })
}

/// A Laplacian-type matrix with its labeling and cached characteristic
/// polynomial. The eigenvalue above vertex `v` is the zeon root of `χ`
/// whose scalar part is `label(v)`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub labeling: Labeling,
    pub matrix: ZeonMatrix,
    pub chi: ZeonPoly,
}

impl Spectrum {
    pub fn new(matrix: ZeonMatrix, labeling: Labeling) -> Result<Spectrum> {
        let chi = matrix.char_poly()?;
        Ok(Spectrum {
            labeling,
            matrix,
            chi,
        })
    }

    /// `Δ − Ψ`.
    pub fn laplacian(g: &Graph, lab: &Labeling) -> Result<Spectrum> {
        Spectrum::new(laplacian(g, lab)?, lab.clone())
    }

    /// `Δ − (Ψ + Ψ†)`.
    pub fn symmetric(g: &Graph, lab: &Labeling) -> Result<Spectrum> {
        Spectrum::new(symmetric_laplacian(g, lab)?, lab.clone())
    }

    pub fn q(g: &Graph, q: &Labeling) -> Result<Spectrum> {
        Spectrum::new(q_laplacian(g, q)?, q.clone())
    }

    pub fn m(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eigenvalue(&self, v: usize) -> Result<Zeon> {
        self.labeling.require_unique(v)?;
        self.chi.zeon_root(re(self.labeling.value(v)))
    }

    /// Eigenvector with component `v` pinned to 1.
    pub fn eigenvector(&self, v: usize, lambda: &Zeon) -> Result<ZeonVector> {
        self.matrix.eigenvector(lambda, Some(v - 1))
    }

    pub fn eigenpair(&self, v: usize) -> Result<(Zeon, ZeonVector)> {
        let lambda = self.eigenvalue(v)?;
        let mu = self.eigenvector(v, &lambda)?;
        Ok((lambda, mu))
    }
}

/// Cycles at `v` decoded from its eigenvalue:
/// `count(I) = (−1)^{|I|} ⟨λ, ζ_I⟩ ϰ_v(I)`.
pub fn decode_eigenvalue(lab: &Labeling, v: usize, lambda: &Zeon) -> Result<WalkCensus> {
    let mut c = WalkCensus::new(CensusKind::Cycles, v, v);
    for (b, x) in lambda.dual_part().terms() {
        let sign = if b.grade() % 2 == 0 { 1.0 } else { -1.0 };
        c.add_decoded(b, x * (sign * kappa_factor(lab, v, b)))?;
    }
    Ok(c)
}

/// Paths and paths with an initial cycle `v_ℓ → v` decoded from component
/// `ℓ` of the pinned eigenvector:
/// `count(I) = (−1)^{|I|} ⟨μ_ℓ, ζ_I⟩ (label(v) − label(ℓ)) ϰ_v(I)`.
pub fn decode_eigenvector_component(lab: &Labeling, v: usize, l: usize, mu_l: &Zeon) -> Result<WalkCensus> {
    let mut c = WalkCensus::new(CensusKind::PathsAndPwics, l, v);
    let lead = lab.value(v) - lab.value(l);
    for (b, x) in mu_l.terms() {
        let sign = if b.grade() % 2 == 0 { 1.0 } else { -1.0 };
        c.add_decoded(b, x * (sign * lead * kappa_factor(lab, v, b)))?;
    }
    Ok(c)
}

/// Eigenvalue above vertex `v` and the cycle census it encodes.
pub fn vertex_eigenvalue(g: &Graph, lab: &Labeling, v: usize) -> Result<(Zeon, WalkCensus)> {
    lab.require_unique(v)?;
    let lambda = Spectrum::laplacian(g, lab)?.eigenvalue(v)?;
    let census = decode_eigenvalue(lab, v, &lambda)?;
    Ok((lambda, census))
}

/// Pinned eigenvector above vertex `v` and, for every other vertex `ℓ` in
/// increasing order, the census of walks `v_ℓ → v` its component encodes.
pub fn vertex_eigenvector(g: &Graph, lab: &Labeling, v: usize) -> Result<(ZeonVector, Vec<WalkCensus>)> {
    lab.require_unique(v)?;
    let (_, mu) = Spectrum::laplacian(g, lab)?.eigenpair(v)?;
    let censuses = decode_eigenvector(lab, v, &mu)?;
    Ok((mu, censuses))
}

pub fn decode_eigenvector(lab: &Labeling, v: usize, mu: &ZeonVector) -> Result<Vec<WalkCensus>> {
    (1..=mu.len())
        .filter(|&l| l != v)
        .map(|l| decode_eigenvector_component(lab, v, l, &mu.0[l - 1]))
        .collect()
}

/// `d − Σ_{j ∼ v} ζ_j μ_j`, which equals the eigenvalue.
pub fn eigenvalue_from_eigenvector(g: &Graph, lab: &Labeling, v: usize, mu: &ZeonVector) -> Zeon {
    let mut acc = Zeon::scalar(lab.value(v));
    for j in g.neighbors(v) {
        acc -= &(&Zeon::generator(j) * &mu.0[j - 1]);
    }
    acc
}

/// Eigenpairs of `Λ` and `Λ_sym` above one vertex.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    pub lambda: Zeon,
    pub nu: ZeonVector,
    pub lambda_star: Zeon,
    pub xi: ZeonVector,
}

impl SymmetricPair {
    /// Largest coefficient of `λ* − (𝔠λ + 2𝔡λ)`.
    pub fn doubling_error(&self) -> f64 {
        let doubled = Zeon::scalar(self.lambda.scalar_part()) + self.lambda.dual_part().scale(2.0);
        self.lambda_star.dist(&doubled)
    }

    /// Largest coefficient of `ζ_v ξ − Γν`.
    pub fn gamma_nu_error(&self, v: usize) -> f64 {
        let zv = Zeon::generator(v);
        (0..self.xi.len())
            .map(|j| (&zv * &self.xi.0[j]).dist(&(&Zeon::generator(j + 1) * &self.nu.0[j])))
            .fold(0.0, f64::max)
    }
}

/// Computes both eigenpairs independently and checks `λ* = 𝔠λ + 2𝔡λ` and
/// `ζ_v ξ = Γν`.
pub fn symmetric_eigenpair(g: &Graph, lab: &Labeling, v: usize) -> Result<SymmetricPair> {
    let lap = Spectrum::laplacian(g, lab)?;
    let sym = Spectrum::symmetric(g, lab)?;
    let pair = symmetric_pair_from(&lap, &sym, v)?;
    check_symmetric_pair(&pair, v)?;
    Ok(pair)
}

pub fn symmetric_pair_from(lap: &Spectrum, sym: &Spectrum, v: usize) -> Result<SymmetricPair> {
    let (lambda, nu) = lap.eigenpair(v)?;
    let (lambda_star, xi) = sym.eigenpair(v)?;
    Ok(SymmetricPair {
        lambda,
        nu,
        lambda_star,
        xi,
    })
}

pub fn check_symmetric_pair(pair: &SymmetricPair, v: usize) -> Result<()> {
    let e = pair.doubling_error();
    if e > tol::RESIDUAL {
        return Err(ZeonError::violation(
            "symmetric-doubling",
            format!("vertex {v}: λ* = {} vs λ = {} (error {e:e})", pair.lambda_star, pair.lambda),
        ));
    }
    let e = pair.gamma_nu_error(v);
    if e > tol::RESIDUAL {
        return Err(ZeonError::violation(
            "gamma-nu",
            format!("vertex {v}: ζ_v ξ differs from Γν by {e:e}"),
        ));
    }
    Ok(())
}

/// Census of `(Ψ + Ψ†)ᵏ`: paths off the diagonal, twice the cycles on it.
/// Also checks `(Ψ + Ψ†)ᵏ = Σ_j Ψ†ʲ Ψ^{k−j}`.
pub fn symmetric_walk_census(g: &Graph, k: usize, i: usize, j: usize) -> Result<WalkCensus> {
    if k == 0 || k > g.m() {
        return Err(ZeonError::TooLarge {
            what: "walk length",
            value: k,
            limit: g.m(),
        });
    }
    let psi = nilpotent_adjacency(g)?;
    let dag = psi.adjoint();
    let power = psi.add(&dag)?.pow(k)?;
    let mut split = ZeonMatrix::zeros(g.m(), g.m());
    for a in 0..=k {
        split = split.add(&dag.pow(a)?.mul(&psi.pow(k - a)?)?)?;
    }
    if !power.approx_eq(&split, tol::SCALAR) {
        return Err(ZeonError::violation(
            "symmetric-nil-structure",
            format!("(Ψ+Ψ†)^{k} differs from Σ Ψ†^j Ψ^(k-j)"),
        ));
    }
    let mut c = census_from_power(&power, i, j)?;
    if i == j {
        c.kind = CensusKind::SymmetricCycles;
    }
    Ok(c)
}

/// `q_v + 2 Σ_I ω_I ζ_I / ϰ_v(I)` with `(−1)^{|I|} ω_I` the brute-force
/// cycle counts at `v`.
pub fn q_expectation_formula(g: &Graph, q: &Labeling, v: usize) -> Zeon {
    let cycles = oracle::all_cycles(g, v);
    let mut acc = Zeon::scalar(q.value(v));
    for (b, &count) in &cycles.table {
        let sign = if b.grade() % 2 == 0 { 1.0 } else { -1.0 };
        acc += &Zeon::term(*b, 2.0 * sign * count as f64 / kappa_factor(q, v, *b));
    }
    acc
}

/// `⟨ξ̂|Λ_q|ξ̂⟩` for the normalized eigenvector above `v`, checked against
/// [`q_expectation_formula`].
pub fn q_expectation(g: &Graph, q: &Labeling, v: usize) -> Result<Zeon> {
    if q.kind != LabelKind::Q {
        Labeling::q(q.values.clone())?;
    }
    let spec = Spectrum::q(g, q)?;
    let (_, xi) = spec.eigenpair(v)?;
    let value = expectation(&spec.matrix, &xi.normalize()?)?;
    let want = q_expectation_formula(g, q, v);
    let e = value.dist(&want);
    if e > tol::RESIDUAL {
        return Err(ZeonError::violation(
            "q-expectation",
            format!("vertex {v}: ⟨ξ|Λ_q|ξ⟩ = {value}, expected {want}"),
        ));
    }
    Ok(value)
}

/// `⟨x|A|x⟩ = x† A x`.
pub fn expectation(a: &ZeonMatrix, x: &ZeonVector) -> Result<Zeon> {
    Ok(a.mul_vec(x)?.inner(x))
}
