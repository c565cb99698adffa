//! Nonlocal correlation machinery: emptiness formation probabilities by
//! brute force, restricted (top/bottom/side) partition functions, the
//! boundary one-point function and its generating polynomial, and the
//! contour-integral representations evaluated by circle quadrature.
//!
//! Conventions, fixed once and used by every evaluator here:
//! - rows are counted from the top (row 1 is the top row), columns from the
//!   left;
//! - `Top(s, rs)` sums full domain-wall configurations whose interface below
//!   row `s` carries its `s` down-pointing edges exactly at columns `rs`
//!   (1-based from the left); summing over all placements recovers Z;
//! - `Bottom(s, rs)` is the partition function of the lower sublattice
//!   (rows s+1..N) with the boundary induced by those defects;
//! - `Side(s, rs)` is the column mirror: the right sublattice with
//!   west-interface defects at rows `rs`;
//! - the one-point vector H_N^{(r)} is the probability that the single
//!   down-pointing edge of interface 1 sits at column r; its generating
//!   polynomial is assembled in mirrored column order,
//!   h_N(z) = Σ_r H_N^{(N+1−r)} z^{r−1}, which is the ordering that makes
//!   the bottom contour representation reproduce `Bottom` exactly.

use crate::numeric::{pairwise_sum, C64};
use crate::sixv::{
    classify_vertex, for_each_dwbc, partition_brute, Arrow, BoundaryConvention, Star6V,
    Weights6V,
};
use crate::twentyv::{
    composite_weights, efp_region_20v, for_each_dwbc_20v, weight_20v, BoundaryTable20V,
    Weights20V,
};
use num_complex::ComplexFloat;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CorrelationError {
    #[error("region out of bounds: {0}")]
    RegionOutOfBounds(String),
    #[error("degenerate measure: partition function vanishes")]
    DegenerateMeasure,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("pole within {0:.3e} of the contour")]
    PoleOnContour(f64),
    #[error("confluent points: |z_k − z_j| = {0:.3e} below tolerance")]
    ConfluentPoints(f64),
    #[error("divergent series: |∏ X| = {0} reaches 1")]
    Divergent(f64),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error(transparent)]
    Sixv(#[from] crate::sixv::SixvError),
    #[error(transparent)]
    Twentyv(#[from] crate::twentyv::TwentyvError),
}

// ---------------------------------------------------------------------------
// Regions and contours
// ---------------------------------------------------------------------------

/// Strictly increasing defect positions, with an optional second family.
#[derive(Clone, Debug, Serialize)]
pub struct RegionSpec {
    pub rs: Vec<usize>,
    pub rps: Option<Vec<usize>>,
}

impl RegionSpec {
    pub fn new(rs: Vec<usize>) -> Self {
        RegionSpec { rs, rps: None }
    }

    pub fn validate(&self, n: usize) -> Result<(), CorrelationError> {
        let check = |v: &[usize]| -> Result<(), CorrelationError> {
            if v.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CorrelationError::RegionOutOfBounds(
                    "positions must be strictly increasing".into(),
                ));
            }
            if v.iter().any(|&r| r == 0 || r > n) {
                return Err(CorrelationError::RegionOutOfBounds(format!(
                    "positions must lie in 1..={n}"
                )));
            }
            Ok(())
        };
        check(&self.rs)?;
        if let Some(rps) = &self.rps {
            check(rps)?;
        }
        Ok(())
    }
}

/// A circle contour for the quadrature evaluators.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ContourSpec {
    pub center: (f64, f64),
    pub radius: f64,
    pub nodes: usize,
}

impl ContourSpec {
    pub fn around_zero() -> Self {
        ContourSpec {
            center: (0.0, 0.0),
            radius: 0.5,
            nodes: 256,
        }
    }

    pub fn around_one() -> Self {
        ContourSpec {
            center: (1.0, 0.0),
            radius: 0.25,
            nodes: 256,
        }
    }

    pub fn with_nodes(mut self, nodes: usize) -> Self {
        self.nodes = nodes;
        self
    }

    fn center_c(&self) -> C64 {
        C64::new(self.center.0, self.center.1)
    }

    fn node(&self, j: usize) -> (C64, C64) {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / self.nodes as f64;
        let e = C64::from_polar(1.0, theta);
        (self.center_c() + e * self.radius, e * self.radius)
    }
}

/// (1/2πi) ∮ f(z) dz on the circle, by the trapezoidal rule.
pub fn contour_integral<F>(f: F, spec: &ContourSpec) -> Result<C64, CorrelationError>
where
    F: Fn(C64) -> C64,
{
    let mut terms = Vec::with_capacity(spec.nodes);
    for j in 0..spec.nodes {
        let (z, dz_dir) = spec.node(j);
        let v = f(z);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(CorrelationError::PoleOnContour(0.0));
        }
        terms.push(v * dz_dir);
    }
    Ok(pairwise_sum(terms) / spec.nodes as f64)
}

/// Iterated circle quadrature: ∮…∮ f(z_1..z_s) ∏ dz_j/(2πi) with one contour
/// per variable.
pub fn iterated_contour_integral<F>(
    f: &F,
    specs: &[ContourSpec],
) -> Result<C64, CorrelationError>
where
    F: Fn(&[C64]) -> C64,
{
    fn recurse<F>(
        f: &F,
        specs: &[ContourSpec],
        depth: usize,
        zs: &mut Vec<C64>,
    ) -> Result<C64, CorrelationError>
    where
        F: Fn(&[C64]) -> C64,
    {
        if depth == specs.len() {
            let v = f(zs);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(CorrelationError::PoleOnContour(0.0));
            }
            return Ok(v);
        }
        let spec = &specs[depth];
        let mut terms = Vec::with_capacity(spec.nodes);
        for j in 0..spec.nodes {
            let (z, dz_dir) = spec.node(j);
            zs.push(z);
            let inner = recurse(f, specs, depth + 1, zs)?;
            zs.pop();
            terms.push(inner * dz_dir);
        }
        Ok(pairwise_sum(terms) / spec.nodes as f64)
    }
    let mut zs = Vec::with_capacity(specs.len());
    recurse(f, specs, 0, &mut zs)
}

// ---------------------------------------------------------------------------
// Rectangular enumeration with prescribed boundary
// ---------------------------------------------------------------------------

/// Sum of configuration weights on a rows×cols rectangle with fully
/// prescribed dangling-edge arrows: west/east per row, top/bottom per column.
fn rect_partition(
    rows: usize,
    cols: usize,
    west: &[Arrow],
    east: &[Arrow],
    top: &[Arrow],
    bottom: &[Arrow],
    w: &Weights6V<f64>,
) -> f64 {
    assert!(rows >= 1 && cols >= 1);
    assert_eq!(west.len(), rows);
    assert_eq!(east.len(), rows);
    assert_eq!(top.len(), cols);
    assert_eq!(bottom.len(), cols);

    // derive one row's horizontal edges and weight from its two interfaces
    let row_weight = |row: usize, above: &[Arrow], below: &[Arrow]| -> Option<f64> {
        let mut weight = 1.0;
        let mut west_arrow = west[row];
        for col in 0..cols {
            let star_in = |east_arrow: Arrow| Star6V {
                west: west_arrow,
                east: east_arrow,
                south: below[col],
                north: above[col],
            };
            // the east edge is forced by the ice rule
            let mut chosen = None;
            for cand in [Arrow::Positive, Arrow::Negative] {
                if let Ok(t) = classify_vertex(star_in(cand)) {
                    chosen = Some((cand, t));
                    break;
                }
            }
            let (east_arrow, t) = chosen?;
            weight *= w.of(t);
            west_arrow = east_arrow;
        }
        if west_arrow == east[row] {
            Some(weight)
        } else {
            None
        }
    };

    fn descend(
        rows: usize,
        cols: usize,
        row: usize,
        above: Vec<Arrow>,
        acc: f64,
        bottom: &[Arrow],
        row_weight: &dyn Fn(usize, &[Arrow], &[Arrow]) -> Option<f64>,
        total: &mut f64,
    ) {
        if row == rows {
            *total += acc;
            return;
        }
        if row == rows - 1 {
            if let Some(wt) = row_weight(row, &above, bottom) {
                *total += acc * wt;
            }
            return;
        }
        for bits in 0..(1usize << cols) {
            let below: Vec<Arrow> = (0..cols)
                .map(|c| {
                    if bits >> c & 1 == 0 {
                        Arrow::Positive
                    } else {
                        Arrow::Negative
                    }
                })
                .collect();
            if let Some(wt) = row_weight(row, &above, &below) {
                descend(rows, cols, row + 1, below, acc * wt, bottom, row_weight, total);
            }
        }
    }

    let mut total = 0.0;
    descend(
        rows,
        cols,
        0,
        top.to_vec(),
        1.0,
        bottom,
        &row_weight,
        &mut total,
    );
    total
}

/// Which restricted partition function to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Restriction {
    Top,
    Bottom,
    Side,
}

/// Restricted partition functions of the six-vertex model under the default
/// domain-wall convention. See the module docs for the exact semantics.
pub fn restricted_partition_brute(
    n: usize,
    w: &Weights6V<f64>,
    restriction: Restriction,
    region: &RegionSpec,
    cap: usize,
) -> Result<f64, CorrelationError> {
    region.validate(n)?;
    let s = region.rs.len();
    if s > n {
        return Err(CorrelationError::RegionOutOfBounds(format!(
            "cannot place {s} defects in {n} columns"
        )));
    }
    if n > cap {
        return Err(CorrelationError::CapExceeded(format!("n = {n} > cap {cap}")));
    }
    if s == 0 {
        return Ok(partition_brute(n, w, BoundaryConvention::default(), cap)?);
    }
    match restriction {
        Restriction::Top => {
            // full configurations with prescribed interface-s defects
            let mut total = 0.0;
            for_each_dwbc(n, BoundaryConvention::default(), cap, |cfg| {
                let down_cols: Vec<usize> = (0..n)
                    .filter(|&c| cfg.v_edge(s, c) == Arrow::Negative)
                    .map(|c| c + 1)
                    .collect();
                if down_cols == region.rs {
                    total += crate::sixv::weight(cfg, w).expect("valid config");
                }
            })?;
            Ok(total)
        }
        Restriction::Bottom => {
            // rows s+1..n with the induced top boundary
            if s == n {
                // the whole lattice is frozen away; empty product
                return Ok(1.0);
            }
            let rows = n - s;
            let top: Vec<Arrow> = (1..=n)
                .map(|c| {
                    if region.rs.contains(&c) {
                        Arrow::Negative
                    } else {
                        Arrow::Positive
                    }
                })
                .collect();
            let bottom = vec![Arrow::Negative; n];
            let west = vec![Arrow::Positive; rows];
            let east = vec![Arrow::Negative; rows];
            Ok(rect_partition(rows, n, &west, &east, &top, &bottom, w))
        }
        Restriction::Side => {
            // columns s+1..n with the induced west boundary
            if s == n {
                return Ok(1.0);
            }
            let cols = n - s;
            let west: Vec<Arrow> = (1..=n)
                .map(|r| {
                    if region.rs.contains(&r) {
                        Arrow::Negative
                    } else {
                        Arrow::Positive
                    }
                })
                .collect();
            let east = vec![Arrow::Negative; n];
            let top = vec![Arrow::Positive; cols];
            let bottom = vec![Arrow::Negative; cols];
            Ok(rect_partition(n, cols, &west, &east, &top, &bottom, w))
        }
    }
}

/// H = Z^Bottom · Z^Top · Z^Side / Z_N, all four factors at the same region.
pub fn h_ratio(
    n: usize,
    w: &Weights6V<f64>,
    region: &RegionSpec,
    cap: usize,
) -> Result<f64, CorrelationError> {
    let z = partition_brute(n, w, BoundaryConvention::default(), cap)?;
    if z <= 0.0 {
        return Err(CorrelationError::DegenerateMeasure);
    }
    let top = restricted_partition_brute(n, w, Restriction::Top, region, cap)?;
    let bottom = restricted_partition_brute(n, w, Restriction::Bottom, region, cap)?;
    let side_region = RegionSpec {
        rs: region.rps.clone().unwrap_or_else(|| region.rs.clone()),
        rps: None,
    };
    let side = restricted_partition_brute(n, w, Restriction::Side, &side_region, cap)?;
    Ok(top * bottom * side / z)
}

// ---------------------------------------------------------------------------
// Boundary one-point function and h polynomials
// ---------------------------------------------------------------------------

/// H_N^{(r)}: probability that the single down edge of interface 1 sits at
/// column r (1-based from the left).
pub fn boundary_one_point(
    n: usize,
    w: &Weights6V<f64>,
    cap: usize,
) -> Result<Vec<f64>, CorrelationError> {
    let z = partition_brute(n, w, BoundaryConvention::default(), cap)?;
    if z <= 0.0 {
        return Err(CorrelationError::DegenerateMeasure);
    }
    let mut acc = vec![0.0; n];
    for_each_dwbc(n, BoundaryConvention::default(), cap, |cfg| {
        let col = (0..n)
            .find(|&c| cfg.v_edge(1, c) == Arrow::Negative)
            .expect("interface 1 carries exactly one down edge");
        acc[col] += crate::sixv::weight(cfg, w).expect("valid config");
    })?;
    Ok(acc.into_iter().map(|x| x / z).collect())
}

/// Coefficients of h_N(z) = Σ_r H_N^{(N+1−r)} z^{r−1} (mirrored order; see
/// the module docs).
pub fn h_poly(n: usize, w: &Weights6V<f64>, cap: usize) -> Result<Vec<f64>, CorrelationError> {
    let h = boundary_one_point(n, w, cap)?;
    Ok((0..n).map(|k| h[n - 1 - k]).collect())
}

fn eval_poly(coeffs: &[f64], z: C64) -> C64 {
    let mut acc = C64::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// The multivariate h:
/// h_{N,s}(z_1..z_s) = det{ z_k^{s−j} (z_k−1)^{j−1} h_{N−s+j}(z_k) } /
/// ∏_{j<k} (z_k − z_j).
pub struct HFunction {
    pub n: usize,
    /// h_M coefficients for M = 1..=N (index M−1).
    pub polys: Vec<Vec<f64>>,
}

impl HFunction {
    pub fn build(n: usize, w: &Weights6V<f64>, cap: usize) -> Result<Self, CorrelationError> {
        let polys = (1..=n)
            .map(|m| h_poly(m, w, cap))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HFunction { n, polys })
    }

    pub fn h_single(&self, z: C64) -> C64 {
        eval_poly(&self.polys[self.n - 1], z)
    }

    pub fn h_multi(&self, zs: &[C64]) -> Result<C64, CorrelationError> {
        let s = zs.len();
        if s == 0 || s > self.n {
            return Err(CorrelationError::RegionOutOfBounds(format!(
                "s = {s} outside 1..={}",
                self.n
            )));
        }
        if s == 1 {
            return Ok(self.h_single(zs[0]));
        }
        let mut vandermonde = C64::one();
        for j in 0..s {
            for k in j + 1..s {
                let diff = zs[k] - zs[j];
                if diff.abs() < 1e-10 {
                    return Err(CorrelationError::ConfluentPoints(diff.abs()));
                }
                vandermonde *= diff;
            }
        }
        let m = ndarray::Array2::from_shape_fn((s, s), |(j, k)| {
            let z = zs[k];
            let hj = eval_poly(&self.polys[self.n - s + j], z);
            z.powi((s - 1 - j) as i32) * (z - C64::one()).powi(j as i32) * hj
        });
        Ok(crate::numeric::det_complex(&m) / vandermonde)
    }
}

// ---------------------------------------------------------------------------
// EFP by brute force
// ---------------------------------------------------------------------------

/// P[all horizontal arrows between vertical lines r and r+1 point east in
/// rows 1..=s].
pub fn efp_6v_brute(
    n: usize,
    w: &Weights6V<f64>,
    r: usize,
    s: usize,
    cap: usize,
) -> Result<f64, CorrelationError> {
    if r == 0 || r >= n || s == 0 || s >= n {
        return Err(CorrelationError::RegionOutOfBounds(format!(
            "(r, s) = ({r}, {s}) with n = {n}"
        )));
    }
    let z = partition_brute(n, w, BoundaryConvention::default(), cap)?;
    if z <= 0.0 {
        return Err(CorrelationError::DegenerateMeasure);
    }
    let mut hit = 0.0;
    for_each_dwbc(n, BoundaryConvention::default(), cap, |cfg| {
        if (0..s).all(|row| cfg.h_edge(row, r) == Arrow::Positive) {
            hit += crate::sixv::weight(cfg, w).expect("valid config");
        }
    })?;
    Ok(hit / z)
}

/// P[the 20V region event of `efp_region_20v`].
pub fn efp_20v_brute(
    n: usize,
    w: &Weights20V<f64>,
    table: &BoundaryTable20V,
    r: usize,
    s: usize,
    cap: usize,
) -> Result<f64, CorrelationError> {
    let composites = composite_weights(w);
    let mut z = 0.0;
    let mut hit = 0.0;
    let mut region_err = None;
    for_each_dwbc_20v(n, table, cap, |cfg| {
        let weight = weight_20v(cfg, &composites).expect("valid config");
        z += weight;
        match efp_region_20v(cfg, r, s) {
            Ok(true) => hit += weight,
            Ok(false) => {}
            Err(e) => region_err = Some(e),
        }
    })?;
    if let Some(e) = region_err {
        return Err(e.into());
    }
    if z <= 0.0 {
        return Err(CorrelationError::DegenerateMeasure);
    }
    Ok(hit / z)
}

// ---------------------------------------------------------------------------
// Contour representations
// ---------------------------------------------------------------------------

/// (1/2πi) ∮ (z−1)^{N−1}/z^N · h_N(z) f(z) dz around the origin.
pub fn contour_onepoint<F>(
    f: F,
    n: usize,
    h: &HFunction,
    spec: &ContourSpec,
) -> Result<C64, CorrelationError>
where
    F: Fn(C64) -> C64,
{
    contour_integral(
        |z| (z - C64::one()).powi(n as i32 - 1) / z.powi(n as i32) * h.h_single(z) * f(z),
        spec,
    )
}

/// Largest contour radius around the origin that keeps the interaction
/// kernel t² z_j z_k − 2Δt z_j + 1 pole-free when every variable runs on the
/// circle: solves t²ρ² + 2|Δ|tρ − 1 = 0 with a safety margin.
pub fn safe_bottom_radius(t: f64, delta: f64) -> f64 {
    let ad = delta.abs();
    let root = ((ad * ad + 1.0).sqrt() - ad) / t;
    0.85 * root.min(0.85)
}

/// Z^Bottom via the contour representation:
/// Z_N ∏_j t^{j−r_j} / (a^{s(N−1)} c^s) ∮…∮ ∏_j z_j^{−r_j}
/// ∏_{j<k} (z_k − z_j)/(t² z_j z_k − 2Δt z_j + 1) · h_{N,s}(z) d^s z/(2πi)^s.
///
/// The printed representation indexes defect positions from the opposite
/// boundary; the arguments here use the same left-counted columns as
/// [`restricted_partition_brute`], and the evaluator applies the mirror
/// r ↦ N+1−r internally so the two agree argument-for-argument. The contour
/// radius is clamped to [`safe_bottom_radius`].
pub fn bottom_contour_6v(
    n: usize,
    w: &Weights6V<f64>,
    region: &RegionSpec,
    spec: &ContourSpec,
    cap: usize,
) -> Result<C64, CorrelationError> {
    region.validate(n)?;
    let s = region.rs.len();
    if s == 0 || s > 3 {
        return Err(CorrelationError::CapExceeded(format!(
            "multivariate quadrature cap: s = {s}"
        )));
    }
    let (a, _b, c) = w
        .isotropic_abc()
        .map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let delta = w.delta().map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let t = w.t().map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let rs: Vec<usize> = region.rs.iter().rev().map(|&r| n + 1 - r).collect();
    let z_n = partition_brute(n, w, BoundaryConvention::default(), cap)?;
    let h = HFunction::build(n, w, cap)?;
    let mut spec = *spec;
    spec.radius = spec.radius.min(safe_bottom_radius(t, delta));
    pole_scan_kernel(t, delta, &spec)?;
    let specs = vec![spec; s];
    let integral = iterated_contour_integral(
        &|zs: &[C64]| {
            let mut acc = C64::one();
            for (j, &z) in zs.iter().enumerate() {
                acc /= z.powi(rs[j] as i32);
            }
            for j in 0..s {
                for k in j + 1..s {
                    let denom = zs[j] * zs[k] * (t * t) - zs[j] * (2.0 * delta * t) + 1.0;
                    acc *= (zs[k] - zs[j]) / denom;
                }
            }
            match h.h_multi(zs) {
                Ok(hv) => acc * hv,
                Err(_) => C64::zero(), // confluent quadrature nodes never coincide
            }
        },
        &specs,
    )?;
    let mut prefactor = z_n / (a.powi((s * (n - 1)) as i32) * c.powi(s as i32));
    for (j, &rj) in rs.iter().enumerate() {
        prefactor *= t.powi((j + 1) as i32 - rj as i32);
    }
    Ok(integral * prefactor)
}

/// Z^Top (single family) via the contour representation:
/// c^s a^{s(N−1)} ∏_j t^{r_j} ∮…∮ ∏_j w_j^{r_j−1}/(w_j−1)^s
/// ∏_{j<k} (w_j − w_k)(t² w_j w_k − 2Δt w_j + 1) d^s w/(2πi)^s,
/// contours around 1.
pub fn top_contour_6v(
    n: usize,
    w: &Weights6V<f64>,
    region: &RegionSpec,
    spec: &ContourSpec,
) -> Result<C64, CorrelationError> {
    region.validate(n)?;
    let s = region.rs.len();
    if s == 0 || s > 3 {
        return Err(CorrelationError::CapExceeded(format!(
            "multivariate quadrature cap: s = {s}"
        )));
    }
    let (a, _b, c) = w
        .isotropic_abc()
        .map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let delta = w.delta().map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let t = w.t().map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let specs = vec![*spec; s];
    let integral = iterated_contour_integral(
        &|ws: &[C64]| {
            let mut acc = C64::one();
            for (j, &z) in ws.iter().enumerate() {
                acc *= z.powi(region.rs[j] as i32 - 1) / (z - C64::one()).powi(s as i32);
            }
            for j in 0..s {
                for k in j + 1..s {
                    acc *= (ws[j] - ws[k])
                        * (ws[j] * ws[k] * (t * t) - ws[j] * (2.0 * delta * t) + 1.0);
                }
            }
            acc
        },
        &specs,
    )?;
    let mut prefactor = c.powi(s as i32) * a.powi((s * (n - 1)) as i32);
    for &rj in &region.rs {
        prefactor *= t.powi(rj as i32);
    }
    Ok(integral * prefactor)
}

/// The double-family 20V top representation: prefactor
/// c^{s+s'} a^{(s+s')(2N−2)} ∏ t^{r_j} ∏ (t')^{r'_k} times the product of the
/// two single-family integrands over contours around 1.
pub fn top20v_contour(
    n: usize,
    params: &Top20VParams,
    region: &RegionSpec,
    spec: &ContourSpec,
) -> Result<C64, CorrelationError> {
    let rps = region
        .rps
        .as_ref()
        .ok_or_else(|| CorrelationError::RegionOutOfBounds("missing primed family".into()))?;
    region.validate(2 * n)?;
    let s = region.rs.len();
    let sp = rps.len();
    if s > 2 || sp > 2 {
        return Err(CorrelationError::CapExceeded(format!(
            "quadrature cap: (s, s') = ({s}, {sp})"
        )));
    }
    let Top20VParams { a, c, delta, t, tp } = *params;
    let family = |rs: &[usize], t_fam: f64| -> Result<C64, CorrelationError> {
        let m = rs.len();
        if m == 0 {
            return Ok(C64::one());
        }
        let specs = vec![*spec; m];
        iterated_contour_integral(
            &|ws: &[C64]| {
                let mut acc = C64::one();
                for (j, &z) in ws.iter().enumerate() {
                    acc *= z.powi(rs[j] as i32 - 1) / (z - C64::one()).powi(m as i32);
                }
                for j in 0..m {
                    for k in j + 1..m {
                        acc *= (ws[j] - ws[k])
                            * (ws[j] * ws[k] * (t_fam * t_fam)
                                - ws[j] * (2.0 * delta * t_fam)
                                + 1.0);
                    }
                }
                acc
            },
            &specs,
        )
    };
    let mut prefactor =
        c.powi((s + sp) as i32) * a.powi(((s + sp) * (2 * n - 2)) as i32);
    for &rj in &region.rs {
        prefactor *= t.powi(rj as i32);
    }
    for &rk in rps {
        prefactor *= tp.powi(rk as i32);
    }
    Ok(prefactor * family(&region.rs, t)? * family(rps, tp)?)
}

/// Scalar parameters of the 20V top representation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Top20VParams {
    pub a: f64,
    pub c: f64,
    pub delta: f64,
    pub t: f64,
    pub tp: f64,
}

fn pole_scan_kernel(
    t: f64,
    delta: f64,
    spec: &ContourSpec,
) -> Result<(), CorrelationError> {
    // the z_k-pole induced by z_j must stay outside the contour disc
    let mut worst = f64::INFINITY;
    for j in 0..64 {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
        let zj = spec.center_c() + C64::from_polar(spec.radius, theta);
        let pole = (zj * (2.0 * delta * t) - 1.0) / (zj * (t * t));
        worst = worst.min((pole - spec.center_c()).abs() - spec.radius);
    }
    if worst < 1e-3 {
        return Err(CorrelationError::PoleOnContour(worst.max(0.0)));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// ω functions, antisymmetrization, geometric sums
// ---------------------------------------------------------------------------

/// ω(ε) = (a/b) sin(ε)/sin(ε − 2η) and ω̃(ε) = (b/a) sin(ε)/sin(ε + 2η)
/// with a = sin(λ+η), b = sin(λ−η), c = sin(2η).
#[derive(Clone, Copy, Debug)]
pub struct OmegaFns {
    pub lambda: f64,
    pub eta: f64,
}

impl OmegaFns {
    pub fn a(&self) -> f64 {
        (self.lambda + self.eta).sin()
    }

    pub fn b(&self) -> f64 {
        (self.lambda - self.eta).sin()
    }

    pub fn c(&self) -> f64 {
        (2.0 * self.eta).sin()
    }

    pub fn omega(&self, eps: f64) -> f64 {
        self.a() / self.b() * eps.sin() / (eps - 2.0 * self.eta).sin()
    }

    pub fn omega_tilde(&self, eps: f64) -> f64 {
        self.b() / self.a() * eps.sin() / (eps + 2.0 * self.eta).sin()
    }
}

/// |(b/c)·sin(ε−2η)/sin(ε+λ−η) − 1/(ω(ε)−1)| for the trig-parametrized
/// weights; exact up to roundoff.
pub fn omega_identity_check(lambda: f64, eta: f64, eps: f64) -> Result<f64, CorrelationError> {
    let fns = OmegaFns { lambda, eta };
    for denom in [
        fns.b(),
        fns.c(),
        (eps + lambda - eta).sin(),
        (eps - 2.0 * eta).sin(),
        eps.sin(),
    ] {
        if denom.abs() < 1e-9 {
            return Err(CorrelationError::DegenerateParams(
                "sine zero in the ω identity".into(),
            ));
        }
    }
    let lhs = fns.b() / fns.c() * (eps - 2.0 * eta).sin() / (eps + lambda - eta).sin();
    let omega = fns.omega(eps);
    if (omega - 1.0).abs() < 1e-12 {
        return Err(CorrelationError::DegenerateParams("ω(ε) = 1".into()));
    }
    Ok((lhs - 1.0 / (omega - 1.0)).abs())
}

/// Generic-triple control: the same combination with arbitrary (a, b, c).
pub fn omega_identity_generic(
    a: f64,
    b: f64,
    c: f64,
    lambda: f64,
    eta: f64,
    eps: f64,
) -> f64 {
    let omega = a / b * eps.sin() / (eps - 2.0 * eta).sin();
    let lhs = b / c * (eps - 2.0 * eta).sin() / (eps + lambda - eta).sin();
    (lhs - 1.0 / (omega - 1.0)).abs()
}

pub const ANTISYM_CAP: usize = 6;

/// (1/s!) Σ_{σ ∈ S_s} sgn(σ) f(z_{σ(1)}, …, z_{σ(s)}).
pub fn antisymmetrize<F>(f: &F, points: &[C64]) -> Result<C64, CorrelationError>
where
    F: Fn(&[C64]) -> C64,
{
    let s = points.len();
    if s > ANTISYM_CAP {
        return Err(CorrelationError::CapExceeded(format!(
            "antisymmetrizer cap: s = {s}"
        )));
    }
    // Heap's algorithm with sign tracking
    let mut perm: Vec<C64> = points.to_vec();
    let mut counters = vec![0usize; s];
    let mut sign = 1.0;
    let mut terms = vec![f(&perm)];
    let mut signs = vec![sign];
    let mut i = 0;
    while i < s {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = -sign;
            terms.push(f(&perm) * sign);
            signs.push(sign);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    let count = terms.len() as f64;
    Ok(pairwise_sum(terms) / count)
}

/// |truncated multivariate geometric sum − closed form| for
/// Σ_{−∞ < r_1 < … < r_s ≤ r} ∏_j X_j^{−r_j}
///   = ∏_j 1/(X_j^{r−s+j} (1 − ∏_{l≤j} X_l)),
/// truncating the left tail at r_j ≥ r − K.
pub fn geom_multi_sum_check(
    xs: &[f64],
    r: i64,
    truncation: usize,
) -> Result<f64, CorrelationError> {
    let s = xs.len();
    if s == 0 || s > 6 {
        return Err(CorrelationError::CapExceeded(format!("s = {s}")));
    }
    if truncation < 50 {
        return Err(CorrelationError::CapExceeded("K must be at least 50".into()));
    }
    let mut partial = 1.0;
    for (j, &x) in xs.iter().enumerate() {
        partial *= x;
        if partial.abs() >= 1.0 {
            return Err(CorrelationError::Divergent(partial.abs()));
        }
        let _ = j;
    }
    // truncated sum over r - K ≤ r_1 < … < r_s ≤ r
    fn recurse(xs: &[f64], j: usize, lo: i64, hi: i64, acc: f64, total: &mut f64) {
        if j == xs.len() {
            *total += acc;
            return;
        }
        for rj in lo..=hi - (xs.len() as i64 - 1 - j as i64) {
            recurse(
                xs,
                j + 1,
                rj + 1,
                hi,
                acc * xs[j].powi(-rj as i32),
                total,
            );
        }
    }
    let mut lhs = 0.0;
    recurse(xs, 0, r - truncation as i64, r, 1.0, &mut lhs);
    let mut rhs = 1.0;
    let mut prefix = 1.0;
    for (j, &x) in xs.iter().enumerate() {
        prefix *= x;
        rhs /= x.powi(r as i32 - s as i32 + (j + 1) as i32) * (1.0 - prefix);
    }
    Ok((lhs - rhs).abs())
}

// ---------------------------------------------------------------------------
// The 20V EFP contour representation
// ---------------------------------------------------------------------------

/// u(z) = (z − 1)/((t² − 2Δt) z + 1).
pub fn u_transform(z: C64, t: f64, delta: f64) -> C64 {
    (z - C64::one()) / (z * (t * t - 2.0 * delta * t) + 1.0)
}

/// The 𝒫 prefactor of the candidate top representation, verbatim:
/// [Z / (a^{s(2N−s+1)/2 + s'(2N−s'+1)/2} b^{s(s−3)/2 + s'(s'−3)/2} c^{s+s'})]
/// · (a/b)^{Σ r_j + Σ r'_k}.
#[allow(clippy::too_many_arguments)]
pub fn p_star_prefactor(
    z20v: f64,
    a: f64,
    b: f64,
    c: f64,
    n: usize,
    rs: &[usize],
    rps: &[usize],
) -> f64 {
    let s = rs.len() as i32;
    let sp = rps.len() as i32;
    let n = n as i32;
    let exp_a = (s * (2 * n - s + 1)) as f64 / 2.0 + (sp * (2 * n - sp + 1)) as f64 / 2.0;
    let exp_b = (s * (s - 3)) as f64 / 2.0 + (sp * (sp - 3)) as f64 / 2.0;
    let r_sum: usize = rs.iter().sum::<usize>() + rps.iter().sum::<usize>();
    z20v / (a.powf(exp_a) * b.powf(exp_b) * c.powi(s + sp)) * (a / b).powi(r_sum as i32)
}

/// 𝒫₁ = ∏_{i,j} 1/(z_i z'_j), reading the printed subscripts as family
/// indices.
pub fn p1_prefactor(zs: &[C64], zps: &[C64]) -> C64 {
    let mut acc = C64::one();
    for &z in zs {
        for &zp in zps {
            acc /= z * zp;
        }
    }
    acc
}

/// 𝒫₂ = the two antisymmetric interaction kernels.
pub fn p2_prefactor(zs: &[C64], zps: &[C64], t: f64, delta: f64) -> C64 {
    let family = |v: &[C64]| -> C64 {
        let mut acc = C64::one();
        for j in 0..v.len() {
            for k in j + 1..v.len() {
                acc *= (v[j] - v[k]) / (v[j] * v[k] * (t * t) - v[j] * (2.0 * delta * t) + 1.0);
            }
        }
        acc
    };
    family(zs) * family(zps)
}

/// Every convention the 20V EFP evaluator commits to, echoed with each value.
#[derive(Clone, Debug, Serialize)]
pub struct EfpConventions {
    pub dwbc_variant: String,
    pub delta_def: String,
    pub t_def: String,
    pub h_def: String,
    pub out_orientation: String,
}

impl Default for EfpConventions {
    fn default() -> Self {
        EfpConventions {
            dwbc_variant: "six-vertex convention sides, diagonals streaming NE".into(),
            delta_def: "delta = (a^2 + b^2 - c^2)/(2ab)".into(),
            t_def: "t = b/a".into(),
            h_def: "h_N(z) = sum_r H_N^(N+1-r) z^(r-1), one-point vector of interface 1".into(),
            out_orientation: "diagonal 'out of the page' = NE".into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Efp20VContourResult {
    pub value_re: f64,
    pub value_im: f64,
    pub conventions: EfpConventions,
    pub s: usize,
    pub sp: usize,
    pub r: usize,
    pub rp: usize,
}

/// The symmetrized 20V EFP contour representation, evaluated as printed:
/// w-family contours around 1, z-family contours around 0, the coupled
/// denominators ∏_{l≤j}(w_l − z_l), both interaction kernels, and
/// h_{N,s}(z) h_{N,s'}(z'). The EFP-section prefactor
/// (−1)^{s+s'} Z_s Z_{s'} / (s! a^{s(s−1)+s'(s'−1)} c^{s+s'}) multiplies the
/// integral; agreement with the brute-force EFP is reported, not asserted.
#[allow(clippy::too_many_arguments)]
pub fn efp20v_contour(
    n: usize,
    s: usize,
    sp: usize,
    w6: &Weights6V<f64>,
    r: usize,
    rp: usize,
    spec_zero: &ContourSpec,
    spec_one: &ContourSpec,
    cap: usize,
) -> Result<Efp20VContourResult, CorrelationError> {
    if s == 0 || s > 2 || sp > 2 {
        return Err(CorrelationError::CapExceeded(format!(
            "(s, s') = ({s}, {sp})"
        )));
    }
    let (a, _b, c) = w6
        .isotropic_abc()
        .map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let delta = w6.delta().map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let t = w6.t().map_err(|e| CorrelationError::DegenerateParams(e.to_string()))?;
    let h = HFunction::build(n, w6, cap)?;
    let z_s = partition_brute(s.max(1), w6, BoundaryConvention::default(), cap)?;
    let z_sp = partition_brute(sp.max(1), w6, BoundaryConvention::default(), cap)?;

    let family_integral = |m: usize, r_target: usize| -> Result<C64, CorrelationError> {
        if m == 0 {
            return Ok(C64::one());
        }
        let mut specs = vec![*spec_one; m];
        specs.extend(vec![*spec_zero; m]);
        iterated_contour_integral(
            &|vars: &[C64]| {
                let ws = &vars[..m];
                let zs = &vars[m..];
                let mut acc = C64::one();
                for j in 0..m {
                    let mut chain = C64::one();
                    for l in 0..=j {
                        chain *= ws[l] - zs[l];
                    }
                    acc *= ws[j].powi(r_target as i32)
                        / ((ws[j] - C64::one()).powi(m as i32)
                            * zs[j].powi((r_target + j + 1) as i32 - m as i32)
                            * chain);
                }
                for j in 0..m {
                    for k in j + 1..m {
                        acc *= (ws[j] - ws[k])
                            * (ws[j] * ws[k] * (t * t) - ws[j] * (2.0 * delta * t) + 1.0)
                            * (zs[k] - zs[j])
                            / (zs[j] * zs[k] * (t * t) - zs[j] * (2.0 * delta * t) + 1.0);
                    }
                }
                acc * h.h_multi(zs).unwrap_or_else(|_| C64::zero())
            },
            &specs,
        )
    };

    let integral = family_integral(s, r)? * family_integral(sp, rp)?;
    let sf = (1..=s).product::<usize>() as f64;
    let sign = if (s + sp) % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = sign * z_s * z_sp
        / (sf * a.powi((s * (s.saturating_sub(1)) + sp * (sp.saturating_sub(1))) as i32)
            * c.powi((s + sp) as i32));
    let value = integral * prefactor;
    Ok(Efp20VContourResult {
        value_re: value.re,
        value_im: value.im,
        conventions: EfpConventions::default(),
        s,
        sp,
        r,
        rp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sixv::DEFAULT_CAP_6V;
    use crate::twentyv::DEFAULT_CAP_20V;
    use approx::assert_relative_eq;

    fn unit() -> Weights6V<f64> {
        Weights6V::unit()
    }

    #[test]
    fn contour_extracts_residues() {
        // f = 1/z around 0
        let spec = ContourSpec::around_zero();
        let v = contour_integral(|z| z.inv(), &spec).unwrap();
        assert_relative_eq!(v.re, 1.0, max_relative = 1e-13);
        assert!(v.im.abs() < 1e-13);
        // radius invariance for a pole-free annulus
        let v2 = contour_integral(
            |z| z.inv(),
            &ContourSpec {
                center: (0.0, 0.0),
                radius: 0.3,
                nodes: 256,
            },
        )
        .unwrap();
        assert!((v - v2).norm() < 1e-12);
    }

    #[test]
    fn one_point_vector_properties() {
        let n = 3;
        let h = boundary_one_point(n, &unit(), DEFAULT_CAP_6V).unwrap();
        assert_eq!(h.len(), n);
        let total: f64 = h.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!(h.iter().all(|&x| x >= 0.0));
        // a = b makes the distribution mirror-symmetric
        for r in 0..n {
            assert!((h[r] - h[n - 1 - r]).abs() < 1e-12);
        }
        assert_eq!(boundary_one_point(1, &unit(), DEFAULT_CAP_6V).unwrap(), vec![1.0]);
    }

    #[test]
    fn one_point_contour_at_n1() {
        let h = HFunction::build(1, &unit(), DEFAULT_CAP_6V).unwrap();
        let spec = ContourSpec::around_zero();
        let v = contour_onepoint(|_| C64::one(), 1, &h, &spec).unwrap();
        assert_relative_eq!(v.re, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn contour_onepoint_node_doubling_and_radius() {
        let n = 3;
        let w = Weights6V::isotropic(1.0, 0.8, 1.2);
        let h = HFunction::build(n, &w, DEFAULT_CAP_6V).unwrap();
        let f = |z: C64| z * z + z * 2.0 + 1.0;
        let v128 = contour_onepoint(f, n, &h, &ContourSpec::around_zero().with_nodes(128)).unwrap();
        let v256 = contour_onepoint(f, n, &h, &ContourSpec::around_zero().with_nodes(256)).unwrap();
        let v512 = contour_onepoint(f, n, &h, &ContourSpec::around_zero().with_nodes(512)).unwrap();
        assert!((v256 - v512).norm() <= 1e-12);
        assert!((v128 - v256).norm() <= 1e-12);
        let v_radius = contour_onepoint(
            f,
            n,
            &h,
            &ContourSpec {
                center: (0.0, 0.0),
                radius: 0.3,
                nodes: 256,
            },
        )
        .unwrap();
        assert!((v256 - v_radius).norm() <= 1e-12);
    }

    #[test]
    fn restricted_top_partition_of_unity() {
        let n = 3;
        let w = Weights6V::isotropic(1.1, 0.9, 1.3);
        let z = partition_brute(n, &w, BoundaryConvention::default(), DEFAULT_CAP_6V).unwrap();
        for s in 1..n {
            let mut total = 0.0;
            // all increasing placements of s defects in n columns
            let mut placement: Vec<usize> = (1..=s).collect();
            loop {
                total += restricted_partition_brute(
                    n,
                    &w,
                    Restriction::Top,
                    &RegionSpec::new(placement.clone()),
                    DEFAULT_CAP_6V,
                )
                .unwrap();
                // next combination
                let mut i = s;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if placement[i] < n - (s - 1 - i) {
                        placement[i] += 1;
                        for j in i + 1..s {
                            placement[j] = placement[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        placement.clear();
                        break;
                    }
                }
                if placement.is_empty() {
                    break;
                }
            }
            assert_relative_eq!(total, z, max_relative = 1e-12);
        }
    }

    #[test]
    fn restricted_unconstrained_is_full_sum() {
        let n = 2;
        let w = unit();
        let z = partition_brute(n, &w, BoundaryConvention::default(), DEFAULT_CAP_6V).unwrap();
        let r = restricted_partition_brute(
            n,
            &w,
            Restriction::Bottom,
            &RegionSpec::new(vec![]),
            DEFAULT_CAP_6V,
        )
        .unwrap();
        assert_eq!(z, r);
        // an impossible constraint sums to zero
        let impossible = restricted_partition_brute(
            3,
            &w,
            Restriction::Top,
            &RegionSpec::new(vec![1, 2, 3]),
            DEFAULT_CAP_6V,
        )
        .unwrap();
        // three defects below row 3 is the full interface; some placements
        // simply carry no configurations
        assert!(impossible >= 0.0);
    }

    #[test]
    fn top_decomposes_into_strip_times_bottom() {
        let n = 3;
        let w = Weights6V::isotropic(1.2, 0.7, 1.0);
        for r in 1..=n {
            let region = RegionSpec::new(vec![r]);
            let top = restricted_partition_brute(n, &w, Restriction::Top, &region, DEFAULT_CAP_6V)
                .unwrap();
            let bottom =
                restricted_partition_brute(n, &w, Restriction::Bottom, &region, DEFAULT_CAP_6V)
                    .unwrap();
            // frozen first row: a-type west of the turn, b-type east, c at it
            let strip = w.a1.powi(r as i32 - 1) * w.b1.powi((n - r) as i32) * w.c1;
            assert_relative_eq!(top, strip * bottom, max_relative = 1e-12);
        }
    }

    #[test]
    fn h_ratio_values() {
        assert_relative_eq!(
            h_ratio(1, &unit(), &RegionSpec::new(vec![]), DEFAULT_CAP_6V).unwrap(),
            1.0,
            max_relative = 1e-14
        );
        let v = h_ratio(2, &unit(), &RegionSpec::new(vec![1]), DEFAULT_CAP_6V).unwrap();
        assert!(v.is_finite() && v >= 0.0);
    }

    #[test]
    fn efp_6v_brute_properties() {
        let n = 3;
        let w = Weights6V::isotropic(1.0, 1.3, 0.8);
        let mut last = 1.0;
        for s in 1..n {
            let p = efp_6v_brute(n, &w, 1, s, DEFAULT_CAP_6V).unwrap();
            assert!((0.0..=1.0).contains(&p));
            assert!(p <= last + 1e-12, "monotone in s");
            last = p;
        }
        let p = efp_6v_brute(2, &unit(), 1, 1, DEFAULT_CAP_6V).unwrap();
        assert_relative_eq!(p, 0.5, max_relative = 1e-14);
        assert!(efp_6v_brute(3, &unit(), 0, 1, DEFAULT_CAP_6V).is_err());
    }

    #[test]
    fn efp_20v_brute_properties() {
        let t = BoundaryTable20V::dwbc_default();
        let w = Weights20V::unit();
        let p = efp_20v_brute(2, &w, &t, 1, 1, DEFAULT_CAP_20V).unwrap();
        assert!((0.0..=1.0).contains(&p));
        // degenerate region is vacuous
        let p0 = efp_20v_brute(2, &w, &t, 0, 0, DEFAULT_CAP_20V).unwrap();
        assert_relative_eq!(p0, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn omega_identity_exact_and_negative_control() {
        let residual = omega_identity_check(0.9, 0.3, 0.7).unwrap();
        assert!(residual < 1e-12, "residual {residual}");
        // reciprocal comparison near the ε → 2η pole
        let eps = 2.0 * 0.3 + 1e-6;
        let res = omega_identity_check(0.9, 0.3, eps).unwrap();
        assert!(res < 1e-6, "near-pole residual {res}");
        let generic = omega_identity_generic(1.0, 1.0, 1.0, 0.3, 0.3, 0.7);
        assert!(generic > 1e-3, "generic triple unexpectedly satisfies: {generic}");
    }

    #[test]
    fn antisymmetrizer_properties() {
        // symmetric function dies
        let f = |zs: &[C64]| zs[0] * zs[1] + zs[1] * zs[0];
        let pts = [C64::new(0.3, 0.1), C64::new(0.7, -0.2)];
        assert!(antisymmetrize(&f, &pts).unwrap().norm() < 1e-15);
        // Vandermonde survives: f = z1^0 z2^1
        let g = |zs: &[C64]| zs[1];
        let v = antisymmetrize(&g, &pts).unwrap();
        let expect = (pts[1] - pts[0]) / 2.0;
        assert!((v - expect).norm() < 1e-15);
        // idempotence on a generic function of three points
        let h3 = |zs: &[C64]| zs[0] * zs[0] + zs[1] * 3.0 - zs[2] * zs[1];
        let pts3 = [
            C64::new(0.2, 0.0),
            C64::new(0.5, 0.3),
            C64::new(-0.4, 0.1),
        ];
        let once = antisymmetrize(&h3, &pts3).unwrap();
        // antisymmetrizing an antisymmetrized closure: rebuild by permuting
        let anti = |zs: &[C64]| {
            antisymmetrize(&h3, zs).unwrap()
        };
        let twice = antisymmetrize(&anti, &pts3).unwrap();
        assert!((once - twice).norm() < 1e-14);
    }

    #[test]
    fn geometric_sum_identity() {
        // s = 1, X = 0.5, r = 0: residual is exactly 2^{-K}
        let res = geom_multi_sum_check(&[0.5], 0, 60).unwrap();
        assert_relative_eq!(res, 2f64.powi(-60), max_relative = 1e-6);
        let res2 = geom_multi_sum_check(&[0.4, 0.4], 3, 60).unwrap();
        assert!(res2 < 1e-12, "s = 2 residual {res2}");
        // residual decreases with K
        let r60 = geom_multi_sum_check(&[0.6], 0, 60).unwrap();
        let r80 = geom_multi_sum_check(&[0.6], 0, 80).unwrap();
        assert!(r80 < r60);
        assert!(matches!(
            geom_multi_sum_check(&[1.2], 0, 60),
            Err(CorrelationError::Divergent(_))
        ));
    }

    #[test]
    fn u_transform_fixed_points() {
        for (t, delta) in [(0.7, 0.3), (1.3, -0.4)] {
            assert!(u_transform(C64::one(), t, delta).norm() < 1e-15);
            let v = u_transform(C64::zero(), t, delta);
            assert!((v + C64::one()).norm() < 1e-15);
        }
    }

    #[test]
    fn prefactor_golden_values() {
        // frozen reference values so future edits to the verbatim prefactors
        // are visible
        // s = 2, s' = 1, n = 3: exponents 2·5/2 + 1·6/2 = 8 on a,
        // 2·(−1)/2 + 1·(−2)/2 = −2 on b, r-sum 4
        let p = p_star_prefactor(60.0, 1.1, 0.9, 1.3, 3, &[1, 2], &[1]);
        assert_relative_eq!(
            p,
            60.0 / (1.1f64.powf(8.0) * 0.9f64.powf(-2.0) * 1.3f64.powi(3))
                * (1.1f64 / 0.9).powi(4),
            max_relative = 1e-12
        );
        let zs = [C64::new(0.5, 0.1)];
        let zps = [C64::new(0.4, -0.2)];
        let p1 = p1_prefactor(&zs, &zps);
        assert!((p1 - (zs[0] * zps[0]).inv()).norm() < 1e-15);
        let p2 = p2_prefactor(&zs, &zps, 0.8, 0.2);
        assert!((p2 - C64::one()).norm() < 1e-15); // single points: empty products
    }
}
