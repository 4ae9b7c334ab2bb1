//! Dense helpers for the small symmetric systems used across the crate.
//!
//! Everything here targets p ~ 9 variables, so plain O(p^3) routines are
//! the right tool; no external LAPACK backend is pulled in.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
/// Returns `None` when a pivot is not strictly positive.
pub fn cholesky(a: &ArrayView2<f64>) -> Option<Array2<f64>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "matrix must be square");
    let mut l = Array2::<f64>::zeros((n, n));
    for j in 0..n {
        let mut d = a[[j, j]];
        for k in 0..j {
            d -= l[[j, k] ] * l[[j, k]];
        }
        if d <= 0.0 || !d.is_finite() {
            return None;
        }
        let dj = d.sqrt();
        l[[j, j]] = dj;
        for i in (j + 1)..n {
            let mut s = a[[i, j]];
            for k in 0..j {
                s -= l[[i, k]] * l[[j, k]];
            }
            l[[i, j]] = s / dj;
        }
    }
    Some(l)
}

/// Solves L y = b for lower-triangular L.
pub fn solve_lower(l: &ArrayView2<f64>, b: &ArrayView1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut y = Array1::<f64>::zeros(n);
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[[i, k]] * y[k];
        }
        y[i] = s / l[[i, i]];
    }
    y
}

/// Solves L^T x = y for lower-triangular L.
pub fn solve_lower_transpose(l: &ArrayView2<f64>, y: &ArrayView1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut x = Array1::<f64>::zeros(n);
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[[k, i]] * x[k];
        }
        x[i] = s / l[[i, i]];
    }
    x
}

/// Solves (L L^T) x = b given the Cholesky factor L.
pub fn solve_cholesky(l: &ArrayView2<f64>, b: &ArrayView1<f64>) -> Array1<f64> {
    let y = solve_lower(l, b);
    solve_lower_transpose(l, &y.view())
}

/// Column means of an N x p matrix.
pub fn column_means(x: &ArrayView2<f64>) -> Array1<f64> {
    let n = x.nrows() as f64;
    x.sum_axis(ndarray::Axis(0)) / n
}

/// Sample covariance (N-1 denominator) of an N x p matrix.
pub fn sample_covariance(x: &ArrayView2<f64>) -> Array2<f64> {
    let n = x.nrows();
    let p = x.ncols();
    assert!(n >= 2, "covariance needs at least two rows");
    let mu = column_means(x);
    let mut cov = Array2::<f64>::zeros((p, p));
    for row in x.rows() {
        for i in 0..p {
            let di = row[i] - mu[i];
            for j in i..p {
                cov[[i, j]] += di * (row[j] - mu[j]);
            }
        }
    }
    let denom = (n - 1) as f64;
    for i in 0..p {
        for j in i..p {
            let v = cov[[i, j]] / denom;
            cov[[i, j]] = v;
            cov[[j, i]] = v;
        }
    }
    cov
}

/// Eigen-decomposition of a symmetric matrix by the cyclic Jacobi method.
/// Returns (eigenvalues, eigenvectors) with eigenvectors in columns.
pub fn jacobi_eigh(a: &ArrayView2<f64>) -> (Array1<f64>, Array2<f64>) {
    let n = a.nrows();
    let mut m = a.to_owned();
    let mut v = Array2::<f64>::eye(n);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[[i, j]] * m[[i, j]];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if m[[p, q]].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[[q, q]] - m[[p, p]]) / (2.0 * m[[p, q]]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = c * mkp - s * mkq;
                    m[[k, q]] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = c * mpk - s * mqk;
                    m[[q, k]] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = c * vkp - s * vkq;
                    v[[k, q]] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eig = Array1::from_iter((0..n).map(|i| m[[i, i]]));
    (eig, v)
}

/// Projects a symmetric matrix onto the positive semi-definite cone by
/// clipping its eigenvalues at `floor`, then restores a unit diagonal if
/// `as_correlation` is set.
pub fn nearest_psd(a: &ArrayView2<f64>, floor: f64, as_correlation: bool) -> Array2<f64> {
    let n = a.nrows();
    let (eig, vects) = jacobi_eigh(a);
    let mut out = Array2::<f64>::zeros((n, n));
    for k in 0..n {
        let lam = eig[k].max(floor);
        for i in 0..n {
            for j in 0..n {
                out[[i, j]] += lam * vects[[i, k]] * vects[[j, k]];
            }
        }
    }
    // Symmetrize against round-off.
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (out[[i, j]] + out[[j, i]]);
            out[[i, j]] = v;
            out[[j, i]] = v;
        }
    }
    if as_correlation {
        let d: Vec<f64> = (0..n).map(|i| out[[i, i]].sqrt()).collect();
        for i in 0..n {
            for j in 0..n {
                out[[i, j]] /= d[i] * d[j];
            }
        }
    }
    out
}

/// Euclidean norm.
pub fn norm2(v: &ArrayView1<f64>) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Infinity norm.
pub fn norm_inf(v: &ArrayView1<f64>) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}
