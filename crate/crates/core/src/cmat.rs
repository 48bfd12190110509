//! Small dense complex matrices for scalar parts of zeon matrices.

use num_complex::Complex64;

pub(crate) type CMat = Vec<Vec<Complex64>>;

pub(crate) fn identity(n: usize) -> CMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect()
}

#[cfg(test)]
pub(crate) fn mul(a: &CMat, b: &CMat) -> CMat {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![Complex64::default(); m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == Complex64::default() {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

/// Maximum absolute column sum.
pub(crate) fn norm1(a: &CMat) -> f64 {
    let m = a.first().map_or(0, Vec::len);
    (0..m)
        .map(|j| a.iter().map(|row| row[j].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Gauss–Jordan inverse with partial pivoting; `None` when a pivot
/// vanishes or the 1-norm condition number exceeds `max_condition`.
pub(crate) fn inverse(a: &CMat, max_condition: f64) -> Option<CMat> {
    let n = a.len();
    let mut work = a.clone();
    let mut inv = identity(n);
    let scale = norm1(a);
    if scale == 0.0 {
        return if n == 0 { Some(inv) } else { None };
    }
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| work[x][col].norm().total_cmp(&work[y][col].norm()))?;
        if work[piv][col].norm() <= f64::EPSILON * scale {
            return None;
        }
        work.swap(col, piv);
        inv.swap(col, piv);
        let p = work[col][col].inv();
        for j in 0..n {
            work[col][j] *= p;
            inv[col][j] *= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = work[r][col];
            if f == Complex64::default() {
                continue;
            }
            for j in 0..n {
                let (w, v) = (work[col][j], inv[col][j]);
                work[r][j] -= f * w;
                inv[r][j] -= f * v;
            }
        }
    }
    if scale * norm1(&inv) > max_condition {
        return None;
    }
    Some(inv)
}

/// Numerical rank by Gaussian elimination with partial pivoting.
#[cfg(test)]
pub(crate) fn rank(a: &CMat, tol: f64) -> usize {
    let mut work = a.clone();
    let rows = work.len();
    let cols = work.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let piv = (r..rows)
            .max_by(|&x, &y| work[x][c].norm().total_cmp(&work[y][c].norm()))
            .unwrap();
        if work[piv][c].norm() <= tol {
            continue;
        }
        work.swap(r, piv);
        for i in r + 1..rows {
            let f = work[i][c] / work[r][c];
            for j in c..cols {
                let v = work[r][j];
                work[i][j] -= f * v;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> CMat {
        rows.iter()
            .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
            .collect()
    }

    #[test]
    fn inverse_roundtrip() {
        let a = real(&[&[2.0, 1.0], &[1.0, 3.0]]);
        let inv = inverse(&a, 1e12).unwrap();
        let p = mul(&a, &inv);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((p[i][j].re - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn singular_and_ill_conditioned() {
        assert!(inverse(&real(&[&[1.0, 2.0], &[2.0, 4.0]]), 1e12).is_none());
        assert!(inverse(&real(&[&[1.0, 0.0], &[0.0, 1e-14]]), 1e12).is_none());
        assert_eq!(rank(&real(&[&[1.0, 2.0], &[2.0, 4.0]]), 1e-12), 1);
    }
}
