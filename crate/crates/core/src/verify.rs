//! Per-graph verification of every walk-census identity against the
//! brute-force oracle.

use serde::Serialize;

use crate::census::WalkCensus;
use crate::element::Zeon;
use crate::error::{Result, ZeonError};
use crate::exec;
use crate::graph::{Graph, Labeling};
use crate::matrix::{ZeonMatrix, ZeonVector};
use crate::oracle;
use crate::spectra::{self, Spectrum, SymmetricPair};
use crate::tol;

/// Largest graph `verify_graph` accepts.
pub const MAX_VERIFY_M: usize = 12;

pub const NIL_STRUCTURE: &str = "nil-structure";
pub const EXP_CENSUS: &str = "exp-census";
pub const EIGENVALUE_CENSUS: &str = "eigenvalue-census";
pub const EIGENVECTOR_CENSUS: &str = "eigenvector-census";
pub const SYMMETRIC_DOUBLING: &str = "symmetric-doubling";
pub const GAMMA_NU: &str = "gamma-nu";
pub const SYMMETRIC_NIL_STRUCTURE: &str = "symmetric-nil-structure";
pub const SPECTRAL_RECONSTRUCTION: &str = "spectral-reconstruction";
pub const ROW_SUMS: &str = "row-sums";

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub m: usize,
    pub edges: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Labeling for the eigen checks; `fᵢ = i` when absent.
    pub labeling: Option<Labeling>,
    /// Perturbs one entry of `Ψ` before the nil-structure check.
    pub corrupt_psi: bool,
}

fn fail(name: &'static str, detail: impl Into<String>) -> ZeonError {
    ZeonError::violation(name, detail)
}

fn wrap(name: &'static str, e: ZeonError) -> ZeonError {
    match e {
        ZeonError::TheoremViolation { .. } => e,
        other => fail(name, other.to_string()),
    }
}

/// Prefixes the detail of a violation with where it occurred.
fn within(name: &'static str, place: String, e: ZeonError) -> ZeonError {
    match e {
        ZeonError::TheoremViolation { detail, .. } => fail(name, format!("{place}: {detail}")),
        other => fail(name, format!("{place}: {other}")),
    }
}

fn compare(name: &'static str, got: &WalkCensus, want: &WalkCensus) -> Result<()> {
    if got.same_counts(want) {
        Ok(())
    } else {
        Err(fail(name, format!("algebra {got:?} but oracle {want:?}")))
    }
}

fn first_error(results: Vec<Result<()>>) -> Result<()> {
    results.into_iter().collect()
}

/// Adds `ζ_2` to `ψ_12`, or `ζ_1` to `ψ_11` on a single vertex.
pub fn corrupt(psi: &ZeonMatrix) -> ZeonMatrix {
    let mut out = psi.clone();
    let (i, j) = if psi.rows() >= 2 { (0, 1) } else { (0, 0) };
    out[(i, j)] = &out[(i, j)] + &Zeon::generator(j + 1);
    out
}

/// `⟨ζ_i|Ψᵏ|j⟩` and `⟨i|Ψᵏ|i⟩` against DFS for every `k ≤ m` and pair.
pub fn check_nil_structure(g: &Graph, psi: &ZeonMatrix) -> Result<()> {
    let m = g.m();
    let mut power = psi.clone();
    for k in 1..=m {
        if k > 1 {
            power = power.mul(psi)?;
        }
        let pw = &power;
        first_error(exec::map_range(m * m, |idx| {
            let (i, j) = (idx / m + 1, idx % m + 1);
            let got = spectra::census_from_power(pw, i, j).map_err(|e| wrap(NIL_STRUCTURE, e))?;
            let want = if i == j {
                oracle::cycles(g, i, k)
            } else {
                oracle::paths(g, i, j, k)
            };
            compare(NIL_STRUCTURE, &got, &want)
                .map_err(|e| within(NIL_STRUCTURE, format!("k={k}, ({i},{j})"), e))
        }))?;
    }
    Ok(())
}

/// `|I|! ⟨⟨v|e^Ψ|v⟩, ζ_I⟩` against DFS cycle counts.
pub fn check_exp_census(g: &Graph, psi: &ZeonMatrix) -> Result<()> {
    let e = psi.exp().map_err(|e| wrap(EXP_CENSUS, e))?;
    first_error(exec::map_range(g.m(), |i| {
        let v = i + 1;
        let got = spectra::cycle_census_from_exp_diag(&e[(i, i)], v).map_err(|e| wrap(EXP_CENSUS, e))?;
        compare(EXP_CENSUS, &got, &oracle::all_cycles(g, v))
    }))
}

/// Eigenpairs of `Λ` above every uniquely labeled vertex.
pub struct EigenData {
    pub labeling: Labeling,
    pub vertices: Vec<usize>,
    pub pairs: Vec<Result<(Zeon, ZeonVector)>>,
}

pub fn eigen_data(g: &Graph, lab: &Labeling) -> Result<EigenData> {
    let spec = Spectrum::laplacian(g, lab)?;
    let vertices: Vec<usize> = (1..=g.m()).filter(|&v| lab.is_unique(v)).collect();
    let pairs = exec::par_map(&vertices, |&v| spec.eigenpair(v));
    Ok(EigenData {
        labeling: lab.clone(),
        vertices,
        pairs,
    })
}

pub fn check_eigenvalue_census(g: &Graph, data: &EigenData) -> Result<()> {
    for (&v, pair) in data.vertices.iter().zip(&data.pairs) {
        let (lambda, _) = pair.as_ref().map_err(|e| wrap(EIGENVALUE_CENSUS, e.clone()))?;
        let got = spectra::decode_eigenvalue(&data.labeling, v, lambda).map_err(|e| wrap(EIGENVALUE_CENSUS, e))?;
        compare(EIGENVALUE_CENSUS, &got, &oracle::all_cycles(g, v))
            .map_err(|e| within(EIGENVALUE_CENSUS, format!("vertex {v}"), e))?;
        if !lambda.dual_part().pow(2).is_zero() || !(&Zeon::generator(v) * &lambda.dual_part()).is_zero() {
            return Err(fail(EIGENVALUE_CENSUS, format!("vertex {v}: dual part not square-zero")));
        }
    }
    Ok(())
}

pub fn check_eigenvector_census(g: &Graph, data: &EigenData) -> Result<()> {
    for (&v, pair) in data.vertices.iter().zip(&data.pairs) {
        let (lambda, mu) = pair.as_ref().map_err(|e| wrap(EIGENVECTOR_CENSUS, e.clone()))?;
        let censuses = spectra::decode_eigenvector(&data.labeling, v, mu).map_err(|e| wrap(EIGENVECTOR_CENSUS, e))?;
        for got in &censuses {
            compare(EIGENVECTOR_CENSUS, got, &oracle::paths_and_pwics(g, got.from, v))
                .map_err(|e| within(EIGENVECTOR_CENSUS, format!("component {} of vertex {v}", got.from), e))?;
        }
        let back = spectra::eigenvalue_from_eigenvector(g, &data.labeling, v, mu);
        let e = back.dist(lambda);
        if e > tol::RESIDUAL {
            return Err(fail(
                EIGENVECTOR_CENSUS,
                format!("vertex {v}: d − Σ ζ_j μ_j misses λ by {e:e}"),
            ));
        }
    }
    Ok(())
}

/// Eigenpairs of `Λ_sym` paired with those of `Λ`.
pub fn symmetric_pairs(g: &Graph, data: &EigenData) -> Result<Vec<(usize, SymmetricPair)>> {
    let sym = Spectrum::symmetric(g, &data.labeling)?;
    let jobs: Vec<(usize, &Result<(Zeon, ZeonVector)>)> = data.vertices.iter().copied().zip(&data.pairs).collect();
    exec::par_map(&jobs, |(v, pair)| {
        let (lambda, nu) = pair.as_ref().map_err(Clone::clone)?;
        let (lambda_star, xi) = sym.eigenpair(*v)?;
        Ok((
            *v,
            SymmetricPair {
                lambda: lambda.clone(),
                nu: nu.clone(),
                lambda_star,
                xi,
            },
        ))
    })
    .into_iter()
    .collect()
}

pub fn check_doubling(pairs: &[(usize, SymmetricPair)]) -> Result<()> {
    for (v, p) in pairs {
        let e = p.doubling_error();
        if e > tol::RESIDUAL {
            return Err(fail(SYMMETRIC_DOUBLING, format!("vertex {v}: error {e:e}")));
        }
    }
    Ok(())
}

pub fn check_gamma_nu(pairs: &[(usize, SymmetricPair)]) -> Result<()> {
    for (v, p) in pairs {
        let e = p.gamma_nu_error(*v);
        if e > tol::RESIDUAL {
            return Err(fail(GAMMA_NU, format!("vertex {v}: error {e:e}")));
        }
    }
    Ok(())
}

/// `(Ψ+Ψ†)ᵏ = Σ_j Ψ†ʲΨ^{k−j}`, path counts off the diagonal and doubled
/// cycle counts on it.
pub fn check_symmetric_nil_structure(g: &Graph) -> Result<()> {
    let m = g.m();
    let psi = spectra::nilpotent_adjacency(g)?;
    let dag = psi.adjoint();
    let s = psi.add(&dag)?;
    let mut psi_pow = vec![ZeonMatrix::identity(m)];
    let mut dag_pow = vec![ZeonMatrix::identity(m)];
    for k in 1..=m {
        psi_pow.push(psi_pow[k - 1].mul(&psi)?);
        dag_pow.push(dag_pow[k - 1].mul(&dag)?);
    }
    let mut power = ZeonMatrix::identity(m);
    for k in 1..=m {
        power = power.mul(&s)?;
        let mut split = ZeonMatrix::zeros(m, m);
        for a in 0..=k {
            split = split.add(&dag_pow[a].mul(&psi_pow[k - a])?)?;
        }
        let e = power.dist(&split);
        if e > tol::SCALAR {
            return Err(fail(SYMMETRIC_NIL_STRUCTURE, format!("k={k}: splitting error {e:e}")));
        }
        for i in 1..=m {
            for j in 1..=m {
                let got = spectra::census_from_power(&power, i, j).map_err(|e| wrap(SYMMETRIC_NIL_STRUCTURE, e))?;
                let want = if i == j {
                    let mut c = oracle::cycles(g, i, k);
                    c.table.values_mut().for_each(|n| *n *= 2);
                    c
                } else {
                    oracle::paths(g, i, j, k)
                };
                compare(SYMMETRIC_NIL_STRUCTURE, &got, &want)
                    .map_err(|e| within(SYMMETRIC_NIL_STRUCTURE, format!("k={k}, ({i},{j})"), e))?;
            }
        }
    }
    Ok(())
}

/// Worst errors of the spectral decomposition of `Λ_q`.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SpectralErrors {
    pub reconstruction: f64,
    pub orthogonality: f64,
    pub realness: f64,
}

pub fn spectral_errors(g: &Graph, q: &Labeling) -> Result<SpectralErrors> {
    let lq = spectra::q_laplacian(g, q)?;
    let terms = lq.spectral_decomposition()?;
    let mut sum = ZeonMatrix::zeros(g.m(), g.m());
    for t in &terms {
        sum = sum.add(&t.projector.scale(&t.eigenvalue))?;
    }
    let mut out = SpectralErrors {
        reconstruction: sum.dist(&lq),
        ..Default::default()
    };
    for (a, ta) in terms.iter().enumerate() {
        out.realness = out.realness.max(ta.eigenvalue.dist(&ta.eigenvalue.conj()));
        for tb in &terms[a + 1..] {
            out.orthogonality = out.orthogonality.max(ta.eigenvector.inner(&tb.eigenvector).max_abs());
        }
    }
    Ok(out)
}

pub fn check_spectral_reconstruction(g: &Graph) -> Result<()> {
    let e = spectral_errors(g, &Labeling::identity_q(g.m())).map_err(|e| wrap(SPECTRAL_RECONSTRUCTION, e))?;
    if e.reconstruction > 1e-7 || e.orthogonality > tol::RESIDUAL || e.realness > tol::RESIDUAL {
        return Err(fail(SPECTRAL_RECONSTRUCTION, format!("{e:?}")));
    }
    Ok(())
}

pub fn check_row_sums(g: &Graph) -> Result<()> {
    for v in 1..=g.m() {
        let r = spectra::row_sum(g, v).map_err(|e| wrap(ROW_SUMS, e))?;
        if !r.all_ok() {
            return Err(fail(ROW_SUMS, format!("vertex {v}: {r:?}")));
        }
    }
    Ok(())
}

/// Runs every check on `g`.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> Result<Report> {
    if g.m() > MAX_VERIFY_M {
        return Err(ZeonError::TooLarge {
            what: "vertex count for verify",
            value: g.m(),
            limit: MAX_VERIFY_M,
        });
    }
    let lab = match &opts.labeling {
        Some(l) => l.clone(),
        None => Labeling::identity_f(g.m()),
    };
    let psi = spectra::nilpotent_adjacency(g)?;
    let tested = if opts.corrupt_psi { corrupt(&psi) } else { psi.clone() };
    let mut checks = Vec::new();
    let mut record = |name: &'static str, r: Result<()>| {
        checks.push(match r {
            Ok(()) => CheckResult {
                name,
                passed: true,
                detail: String::new(),
            },
            Err(ZeonError::TheoremViolation { detail, .. }) => CheckResult {
                name,
                passed: false,
                detail,
            },
            Err(e) => CheckResult {
                name,
                passed: false,
                detail: e.to_string(),
            },
        })
    };
    record(NIL_STRUCTURE, check_nil_structure(g, &tested));
    record(EXP_CENSUS, check_exp_census(g, &psi));
    match eigen_data(g, &lab) {
        Ok(data) => {
            record(EIGENVALUE_CENSUS, check_eigenvalue_census(g, &data));
            record(EIGENVECTOR_CENSUS, check_eigenvector_census(g, &data));
            match symmetric_pairs(g, &data) {
                Ok(pairs) => {
                    record(SYMMETRIC_DOUBLING, check_doubling(&pairs));
                    record(GAMMA_NU, check_gamma_nu(&pairs));
                }
                Err(e) => {
                    record(SYMMETRIC_DOUBLING, Err(e.clone()));
                    record(GAMMA_NU, Err(e));
                }
            }
        }
        Err(e) => {
            for name in [EIGENVALUE_CENSUS, EIGENVECTOR_CENSUS, SYMMETRIC_DOUBLING, GAMMA_NU] {
                record(name, Err(e.clone()));
            }
        }
    }
    record(SYMMETRIC_NIL_STRUCTURE, check_symmetric_nil_structure(g));
    record(SPECTRAL_RECONSTRUCTION, check_spectral_reconstruction(g));
    record(ROW_SUMS, check_row_sums(g));
    Ok(Report {
        m: g.m(),
        edges: g.edge_count(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs_pass() {
        for g in [Graph::complete(4), Graph::path(4), Graph::cycle(5), Graph::star(4)] {
            let r = verify_graph(&g, &VerifyOptions::default()).unwrap();
            assert!(r.all_passed(), "{g:?}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn corruption_is_caught() {
        let g = Graph::cycle(4);
        let r = verify_graph(
            &g,
            &VerifyOptions {
                corrupt_psi: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.first_failure().map(|c| c.name), Some(NIL_STRUCTURE));
    }

    #[test]
    fn size_cap() {
        let g = Graph::path(13);
        assert!(matches!(
            verify_graph(&g, &VerifyOptions::default()),
            Err(ZeonError::TooLarge { .. })
        ));
    }
}
