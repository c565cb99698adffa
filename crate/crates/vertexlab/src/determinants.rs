//! Determinantal partition-function representations: the inhomogeneous
//! Izergin–Korepin determinant, its homogeneous derivative form, the U-turn
//! matrix, and the exact series-coefficient determinant for the twenty-vertex
//! count.

use crate::numeric::{cauchy_derivatives, central_derivative, det_complex, C64};
use crate::rational::{det_rat, Rat};
use ndarray::Array2;
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum DeterminantError {
    #[error("degenerate spectral parameters: {0}")]
    DegenerateParams(String),
    #[error("kernel singular near the evaluation point (|{0}| below tolerance)")]
    KernelSingular(f64),
    #[error("spectral parameter lists must have equal positive length")]
    BadShape,
}

const DEGENERACY_TOL: f64 = 1e-12;

/// The weight functions entering determinant entries. The paper leaves the
/// functional forms open; the default realization is trigonometric.
pub trait WeightFns {
    fn a(&self, lambda: C64, nu: C64) -> C64;
    fn b(&self, lambda: C64, nu: C64) -> C64;
    fn c(&self) -> C64;
    fn d(&self, lambda: C64, mu: C64) -> C64;
}

/// a = sin(λ−ν+η), b = sin(λ−ν−η), c = sin(2η), d = sin(λ−μ).
#[derive(Clone, Copy, Debug)]
pub struct TrigWeightFns {
    pub eta: f64,
}

impl WeightFns for TrigWeightFns {
    fn a(&self, lambda: C64, nu: C64) -> C64 {
        (lambda - nu + self.eta).sin()
    }

    fn b(&self, lambda: C64, nu: C64) -> C64 {
        (lambda - nu - self.eta).sin()
    }

    fn c(&self) -> C64 {
        C64::new((2.0 * self.eta).sin(), 0.0)
    }

    fn d(&self, lambda: C64, mu: C64) -> C64 {
        (lambda - mu).sin()
    }
}

/// Inhomogeneity lists and the crossing parameter.
#[derive(Clone, Debug)]
pub struct SpectralParams {
    pub lambdas: Vec<C64>,
    pub nus: Vec<C64>,
    pub eta: f64,
}

impl SpectralParams {
    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    /// Guards every denominator of the determinant representation.
    pub fn validate(&self, fns: &dyn WeightFns) -> Result<(), DeterminantError> {
        if self.lambdas.is_empty() || self.lambdas.len() != self.nus.len() {
            return Err(DeterminantError::BadShape);
        }
        for &l in &self.lambdas {
            for &v in &self.nus {
                if fns.a(l, v).norm() < DEGENERACY_TOL || fns.b(l, v).norm() < DEGENERACY_TOL {
                    return Err(DeterminantError::DegenerateParams(format!(
                        "a or b vanishes at (λ, ν) = ({l}, {v})"
                    )));
                }
            }
        }
        for (i, &x) in self.lambdas.iter().enumerate() {
            for &y in self.lambdas.iter().skip(i + 1) {
                if fns.d(x, y).norm() < DEGENERACY_TOL {
                    return Err(DeterminantError::DegenerateParams(format!(
                        "coincident λ pair near {x}"
                    )));
                }
            }
        }
        for (i, &x) in self.nus.iter().enumerate() {
            for &y in self.nus.iter().skip(i + 1) {
                if fns.d(x, y).norm() < DEGENERACY_TOL {
                    return Err(DeterminantError::DegenerateParams(format!(
                        "coincident ν pair near {x}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// M_{αk} = c / (a(λ_α, ν_k) · b(λ_α, ν_k)).
pub fn ik_matrix(
    p: &SpectralParams,
    fns: &dyn WeightFns,
) -> Result<Array2<C64>, DeterminantError> {
    p.validate(fns)?;
    let n = p.n();
    let c = fns.c();
    Ok(Array2::from_shape_fn((n, n), |(alpha, k)| {
        let l = p.lambdas[alpha];
        let v = p.nus[k];
        c / (fns.a(l, v) * fns.b(l, v))
    }))
}

/// Z = (∏_{α,k} a·b / (∏_{β<α} d(λ_β, λ_α) ∏_{j<k} d(ν_j, ν_k))) · det M.
pub fn ik_partition(p: &SpectralParams, fns: &dyn WeightFns) -> Result<C64, DeterminantError> {
    let m = ik_matrix(p, fns)?;
    let n = p.n();
    let mut prefactor = C64::one();
    for &l in &p.lambdas {
        for &v in &p.nus {
            prefactor *= fns.a(l, v) * fns.b(l, v);
        }
    }
    let mut denom = C64::one();
    for alpha in 0..n {
        for beta in alpha + 1..n {
            denom *= fns.d(p.lambdas[beta], p.lambdas[alpha]);
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            denom *= fns.d(p.nus[j], p.nus[k]);
        }
    }
    Ok(prefactor / denom * det_complex(&m))
}

/// Kernel and prefactor pair of the homogeneous derivative determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HomogeneousKernel {
    /// φ(λ) = c / (a(λ, ν) b(λ, ν)), prefactor base a(λ, ν) b(λ, ν). This is
    /// the actual λ_α → λ, ν_k → ν limit of the Izergin–Korepin form.
    #[default]
    Limit,
    /// φ(λ) = sin(2η) / (sin(λ−η) sin(λ+ν)), prefactor base
    /// sin(λ−ν) sin(λ+ν), exactly as displayed. Kept for regression records;
    /// it does not reproduce the homogeneous limit.
    AsPrinted,
}

#[derive(Clone, Copy, Debug)]
pub enum DerivScheme {
    /// Cauchy-ring differentiation; spectrally accurate for analytic kernels.
    Cauchy { radius: f64, nodes: usize },
    /// Central differences with an (m+1)-point stencil per order m.
    Central { step: f64 },
}

impl Default for DerivScheme {
    fn default() -> Self {
        DerivScheme::Cauchy {
            radius: 0.25,
            nodes: 256,
        }
    }
}

/// Homogeneous partition function
/// prefactor^{N²} / ∏_{m=1}^{N−1} (m!)² · det[∂^{α+k−2}_λ φ(λ)].
pub fn homogeneous_partition(
    lambda: f64,
    nu: f64,
    eta: f64,
    n: usize,
    kernel: HomogeneousKernel,
    scheme: DerivScheme,
) -> Result<C64, DeterminantError> {
    let lam = C64::new(lambda, 0.0);
    let nuc = C64::new(nu, 0.0);
    let fns = TrigWeightFns { eta };
    let (phi, base): (Box<dyn Fn(C64) -> C64>, C64) = match kernel {
        HomogeneousKernel::Limit => {
            let c = fns.c();
            (
                Box::new(move |z: C64| c / ((z - nuc + eta).sin() * (z - nuc - eta).sin())),
                fns.a(lam, nuc) * fns.b(lam, nuc),
            )
        }
        HomogeneousKernel::AsPrinted => {
            let c = fns.c();
            (
                Box::new(move |z: C64| c / ((z - eta).sin() * (z + nuc).sin())),
                (lam - nuc).sin() * (lam + nuc).sin(),
            )
        }
    };
    homogeneous_partition_with(&*phi, base, lam, n, scheme)
}

/// The derivative determinant with a caller-supplied analytic kernel.
pub fn homogeneous_partition_with(
    phi: &dyn Fn(C64) -> C64,
    prefactor_base: C64,
    lambda: C64,
    n: usize,
    scheme: DerivScheme,
) -> Result<C64, DeterminantError> {
    if prefactor_base.norm() < DEGENERACY_TOL {
        return Err(DeterminantError::KernelSingular(prefactor_base.norm()));
    }
    let probe = phi(lambda);
    if !probe.re.is_finite() || !probe.im.is_finite() {
        return Err(DeterminantError::KernelSingular(0.0));
    }
    let max_order = 2 * n - 2;
    let derivs: Vec<C64> = match scheme {
        DerivScheme::Cauchy { radius, nodes } => {
            cauchy_derivatives(phi, lambda, radius, nodes, max_order)
        }
        DerivScheme::Central { step } => (0..=max_order)
            .map(|m| {
                let re = central_derivative(|x| phi(C64::new(x, lambda.im)).re, lambda.re, m, step);
                let im = central_derivative(|x| phi(C64::new(x, lambda.im)).im, lambda.re, m, step);
                C64::new(re, im)
            })
            .collect(),
    };
    let mat = Array2::from_shape_fn((n, n), |(alpha, k)| derivs[alpha + k]);
    let mut fact_sq = 1.0f64;
    for m in 1..n {
        let mut f = 1.0f64;
        for j in 1..=m {
            f *= j as f64;
        }
        fact_sq *= f * f;
    }
    Ok(prefactor_base.powu((n * n) as u32) / fact_sq * det_complex(&mat))
}

/// U-turn matrix entries
/// M'_{ij} = 1/(a b)(z_i, w_j) − 1/(a b)(1, z_i w_j), with every weight
/// function evaluated through the substitution (z, w) ↦ (q z, q⁻¹ w).
pub fn uturn_matrix(
    z: &[C64],
    w: &[C64],
    fns: &dyn WeightFns,
    q: C64,
) -> Result<Array2<C64>, DeterminantError> {
    if z.is_empty() || z.len() != w.len() {
        return Err(DeterminantError::BadShape);
    }
    if q.norm() < DEGENERACY_TOL {
        return Err(DeterminantError::DegenerateParams("q must be nonzero".into()));
    }
    let one = C64::one();
    let term = |x: C64, y: C64| -> Result<C64, DeterminantError> {
        let ab = fns.a(q * x, y / q) * fns.b(q * x, y / q);
        if ab.norm() < DEGENERACY_TOL {
            return Err(DeterminantError::DegenerateParams(format!(
                "a·b vanishes at substituted ({x}, {y})"
            )));
        }
        Ok(ab.inv())
    };
    let n = z.len();
    let mut out = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            out[[i, j]] = term(z[i], w[j])? - term(one, z[i] * w[j])?;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Exact series-coefficient determinant
// ---------------------------------------------------------------------------

/// Truncated bivariate power series over exact rationals,
/// `c[i][j] = [u^i v^j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries {
    pub deg: usize,
    pub c: Vec<Vec<Rat>>,
}

impl BiSeries {
    pub fn zero(deg: usize) -> Self {
        BiSeries {
            deg,
            c: vec![vec![Rat::zero(); deg + 1]; deg + 1],
        }
    }

    pub fn from_terms(deg: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = BiSeries::zero(deg);
        for &(i, j, v) in terms {
            if i <= deg && j <= deg {
                s.c[i][j] += Rat::from_integer(v.into());
            }
        }
        s
    }

    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let deg = self.deg.min(other.deg);
        let mut out = BiSeries::zero(deg);
        for i in 0..=deg {
            for j in 0..=deg {
                if self.c[i][j].is_zero() {
                    continue;
                }
                for k in 0..=deg - i {
                    for l in 0..=deg - j {
                        if other.c[k][l].is_zero() {
                            continue;
                        }
                        let add = &self.c[i][j] * &other.c[k][l];
                        out.c[i + k][j + l] += add;
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> BiSeries {
        assert!(
            self.c[0][0].is_one() || !self.c[0][0].is_zero(),
            "series inverse needs an invertible constant term"
        );
        let deg = self.deg;
        let mut inv = BiSeries::zero(deg);
        let d00 = self.c[0][0].clone();
        // graded order: total degree, then i
        let mut order: Vec<(usize, usize)> = (0..=deg)
            .flat_map(|i| (0..=deg).map(move |j| (i, j)))
            .collect();
        order.sort_by_key(|&(i, j)| (i + j, i));
        for (i, j) in order {
            let mut acc = if i == 0 && j == 0 {
                Rat::one()
            } else {
                Rat::zero()
            };
            // subtract Σ_{(k,l) < (i,j)} self[i-k][j-l] * inv[k][l]
            for k in 0..=i {
                for l in 0..=j {
                    if k == i && l == j {
                        continue;
                    }
                    if inv.c[k][l].is_zero() || self.c[i - k][j - l].is_zero() {
                        continue;
                    }
                    let sub = &self.c[i - k][j - l] * &inv.c[k][l];
                    acc -= sub;
                }
            }
            inv.c[i][j] = acc / d00.clone();
        }
        inv
    }
}

/// Exact table of mixed Taylor coefficients of
/// F(u, v) = (1+u²)(1+2u−u²) / ((1−u²v)[(1−u)² − v(1+u)²]).
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCoeffTable {
    pub n: usize,
    pub coeffs: Vec<Vec<Rat>>,
}

pub fn series_coeffs(n: usize) -> SeriesCoeffTable {
    assert!(n >= 1);
    let deg = 2 * n; // headroom beyond the (n-1, n-1) corner
    let numerator = BiSeries::from_terms(deg, &[(0, 0, 1), (2, 0, 1)]).mul(&BiSeries::from_terms(
        deg,
        &[(0, 0, 1), (1, 0, 2), (2, 0, -1)],
    ));
    let d1 = BiSeries::from_terms(deg, &[(0, 0, 1), (2, 1, -1)]);
    // (1-u)^2 - v(1+u)^2 = 1 - 2u + u² - v - 2uv - u²v
    let d2 = BiSeries::from_terms(
        deg,
        &[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1), (1, 1, -2), (2, 1, -1)],
    );
    let f = numerator.mul(&d1.inverse()).mul(&d2.inverse());
    let coeffs = (0..n)
        .map(|i| (0..n).map(|j| f.c[i][j].clone()).collect())
        .collect();
    SeriesCoeffTable { n, coeffs }
}

/// det over exact rationals of the coefficient table; equals the
/// domain-wall twenty-vertex partition function at the combinatorial point.
pub fn difrancesco_partition(n: usize) -> Rat {
    let table = series_coeffs(n);
    det_rat(&table.coeffs)
}
