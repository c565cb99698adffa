//! Shared numeric kernels: deterministic summation, dense determinants,
//! extrapolation, and derivative rules for analytic kernels.

use ndarray::Array2;
use num_complex::Complex64;
use num_traits::Zero;

pub type C64 = Complex64;

/// Deterministic pairwise reduction. Order-independent for exact scalars and
/// keeps float error growth at O(log n).
pub fn pairwise_sum<T>(mut values: Vec<T>) -> T
where
    T: Zero + std::ops::Add<Output = T> + Clone,
{
    if values.is_empty() {
        return T::zero();
    }
    while values.len() > 1 {
        let mut next = Vec::with_capacity(values.len() / 2 + 1);
        let mut it = values.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        values = next;
    }
    values.pop().unwrap()
}

/// Determinant by LU with partial pivoting on a dense complex matrix.
pub fn det_complex(m: &Array2<C64>) -> C64 {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "determinant needs a square matrix");
    if n == 0 {
        return C64::new(1.0, 0.0);
    }
    let mut a = m.clone();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let mut pivot = col;
        let mut best = a[[col, col]].norm();
        for row in col + 1..n {
            let v = a[[row, col]].norm();
            if v > best {
                best = v;
                pivot = row;
            }
        }
        if best == 0.0 {
            return C64::zero();
        }
        if pivot != col {
            for k in 0..n {
                let tmp = a[[col, k]];
                a[[col, k]] = a[[pivot, k]];
                a[[pivot, k]] = tmp;
            }
            det = -det;
        }
        let d = a[[col, col]];
        det *= d;
        for row in col + 1..n {
            let factor = a[[row, col]] / d;
            for k in col..n {
                let sub = factor * a[[col, k]];
                a[[row, k]] -= sub;
            }
        }
    }
    det
}

pub fn det_f64(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let arr = Array2::from_shape_fn((n, n), |(i, j)| C64::new(m[i][j], 0.0));
    det_complex(&arr).re
}

/// Neville polynomial extrapolation of `(x, f(x))` samples to `x = 0`.
/// Used for Richardson limits of parameter-perturbed quantities.
pub fn extrapolate_to_zero(points: &[(f64, C64)]) -> C64 {
    let n = points.len();
    assert!(n >= 1);
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let mut tab: Vec<C64> = points.iter().map(|p| p.1).collect();
    for level in 1..n {
        for i in 0..n - level {
            let xi = xs[i];
            let xj = xs[i + level];
            // value at 0 of the interpolant through nodes i..=i+level
            tab[i] = (tab[i] * xj - tab[i + 1] * xi) / (xj - xi);
        }
    }
    tab[0]
}

/// Derivatives `f^(0..=max_order)(center)` of an analytic function via the
/// Cauchy integral on a circle of the given radius, evaluated by the
/// trapezoidal rule (spectrally accurate). The radius must stay clear of
/// singularities of `f`.
pub fn cauchy_derivatives<F>(
    f: F,
    center: C64,
    radius: f64,
    nodes: usize,
    max_order: usize,
) -> Vec<C64>
where
    F: Fn(C64) -> C64,
{
    assert!(radius > 0.0 && nodes > 0);
    let samples: Vec<C64> = (0..nodes)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (nodes as f64);
            f(center + C64::from_polar(radius, theta))
        })
        .collect();
    let mut out = Vec::with_capacity(max_order + 1);
    let mut factorial = 1.0f64;
    for m in 0..=max_order {
        if m > 0 {
            factorial *= m as f64;
        }
        let mut acc = Vec::with_capacity(nodes);
        for (j, s) in samples.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (nodes as f64);
            acc.push(s * C64::from_polar(1.0, -(m as f64) * theta));
        }
        let avg = pairwise_sum(acc) / nodes as f64;
        out.push(avg * factorial / radius.powi(m as i32));
    }
    out
}

/// Central-difference derivative of order `m` with an (m+1)-point stencil,
/// accuracy O(h^2). Kept as the low-tech cross-check for `cauchy_derivatives`.
pub fn central_derivative<F>(f: F, center: f64, m: usize, h: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    if m == 0 {
        return f(center);
    }
    let mut acc = 0.0;
    let mut binom = 1.0f64;
    for k in 0..=m {
        if k > 0 {
            binom *= (m - k + 1) as f64 / k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let x = center + (m as f64 / 2.0 - k as f64) * h;
        acc += sign * binom * f(x);
    }
    acc / h.powi(m as i32)
}

/// FNV-1a of a byte string; used for timestamp-free run identifiers.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}
