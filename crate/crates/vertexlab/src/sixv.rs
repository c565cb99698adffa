//! Six-vertex configurations on an N×N square lattice with domain-wall
//! boundary conditions: validation, exhaustive enumeration, and brute-force
//! partition functions.
//!
//! Lattice conventions (fixed once, used everywhere):
//! - vertices `(row, col)` with `row 0` the top row and `col 0` the leftmost
//!   column;
//! - `h_edges[row][k]` is the horizontal edge west of vertex `(row, k)`
//!   (`k = n` is the east dangling edge); positive arrows point east;
//! - `v_edges[i][col]` is the vertical edge on interface `i` (interface 0 is
//!   above row 0, interface n below row n-1); positive arrows point north.
//!
//! Default DWBC orientation: horizontal boundary edges point inward, vertical
//! boundary edges point outward. `BoundaryConvention::Flipped` mirrors both.

use crate::numeric::pairwise_sum;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SixvError {
    #[error("ice rule violated: {inward} inward arrows at vertex ({row}, {col})")]
    IceRuleViolation {
        row: usize,
        col: usize,
        inward: usize,
    },
    #[error("lattice size {n} exceeds enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("degenerate measure: partition function vanishes")]
    DegenerateMeasure,
    #[error("invalid weight bundle: {0}")]
    InvalidWeights(String),
    #[error("malformed configuration: {0}")]
    Malformed(String),
}

/// Edge arrow along the positive axis of its family (east for horizontal
/// edges, north for vertical ones).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrow {
    Positive,
    Negative,
}

impl Arrow {
    pub fn flip(self) -> Arrow {
        match self {
            Arrow::Positive => Arrow::Negative,
            Arrow::Negative => Arrow::Positive,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Arrow::Positive => 1,
            Arrow::Negative => -1,
        }
    }

    pub fn from_sign(s: i8) -> Option<Arrow> {
        match s {
            1 => Some(Arrow::Positive),
            -1 => Some(Arrow::Negative),
            _ => None,
        }
    }
}

/// The six ice-rule vertex classes.
///
/// Pattern table, as `(W, E, S, N)` arrows (`+` = east/north):
///
/// | type | W | E | S | N | picture                       |
/// |------|---|---|---|---|-------------------------------|
/// | A1   | + | + | + | + | both lines pass through NE    |
/// | A2   | - | - | - | - | both lines pass through SW    |
/// | B1   | + | + | - | - | east-through, south-through   |
/// | B2   | - | - | + | + | west-through, north-through   |
/// | C1   | + | - | - | + | horizontal sink, vertical source |
/// | C2   | - | + | + | - | horizontal source, vertical sink |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexType6V {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
}

impl VertexType6V {
    pub const ALL: [VertexType6V; 6] = [
        VertexType6V::A1,
        VertexType6V::A2,
        VertexType6V::B1,
        VertexType6V::B2,
        VertexType6V::C1,
        VertexType6V::C2,
    ];
}

/// A 4-edge vertex neighborhood, `(west, east, south, north)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Star6V {
    pub west: Arrow,
    pub east: Arrow,
    pub south: Arrow,
    pub north: Arrow,
}

impl Star6V {
    /// Number of arrows pointing into the vertex.
    pub fn inward_count(&self) -> usize {
        let mut c = 0;
        if self.west == Arrow::Positive {
            c += 1;
        }
        if self.east == Arrow::Negative {
            c += 1;
        }
        if self.south == Arrow::Positive {
            c += 1;
        }
        if self.north == Arrow::Negative {
            c += 1;
        }
        c
    }
}

/// Classify a 4-edge star. Errors unless exactly two arrows point inward.
pub fn classify_vertex(star: Star6V) -> Result<VertexType6V, SixvError> {
    use Arrow::*;
    let inward = star.inward_count();
    if inward != 2 {
        return Err(SixvError::IceRuleViolation {
            row: 0,
            col: 0,
            inward,
        });
    }
    let t = match (star.west, star.east, star.south, star.north) {
        (Positive, Positive, Positive, Positive) => VertexType6V::A1,
        (Negative, Negative, Negative, Negative) => VertexType6V::A2,
        (Positive, Positive, Negative, Negative) => VertexType6V::B1,
        (Negative, Negative, Positive, Positive) => VertexType6V::B2,
        (Positive, Negative, Negative, Positive) => VertexType6V::C1,
        (Negative, Positive, Positive, Negative) => VertexType6V::C2,
        _ => unreachable!("all other patterns fail the inward-count test"),
    };
    Ok(t)
}

/// Which way the fixed boundary arrows point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum BoundaryConvention {
    /// Horizontal boundary edges inward, vertical outward.
    #[default]
    HorizontalIn,
    /// Horizontal boundary edges outward, vertical inward.
    Flipped,
}

/// An edge-arrow field on the N×N lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration6V {
    n: usize,
    /// `n` rows of `n + 1` horizontal edges.
    h_edges: Vec<Vec<Arrow>>,
    /// `n + 1` interfaces of `n` vertical edges.
    v_edges: Vec<Vec<Arrow>>,
}

impl Configuration6V {
    pub fn new(
        n: usize,
        h_edges: Vec<Vec<Arrow>>,
        v_edges: Vec<Vec<Arrow>>,
    ) -> Result<Self, SixvError> {
        if n == 0 {
            return Err(SixvError::Malformed("n must be positive".into()));
        }
        if h_edges.len() != n || h_edges.iter().any(|r| r.len() != n + 1) {
            return Err(SixvError::Malformed(format!(
                "h_edges must be {n} rows of {} entries",
                n + 1
            )));
        }
        if v_edges.len() != n + 1 || v_edges.iter().any(|r| r.len() != n) {
            return Err(SixvError::Malformed(format!(
                "v_edges must be {} interfaces of {n} entries",
                n + 1
            )));
        }
        let cfg = Configuration6V {
            n,
            h_edges,
            v_edges,
        };
        cfg.validate_ice()?;
        Ok(cfg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h_edge(&self, row: usize, k: usize) -> Arrow {
        self.h_edges[row][k]
    }

    pub fn v_edge(&self, interface: usize, col: usize) -> Arrow {
        self.v_edges[interface][col]
    }

    pub fn star(&self, row: usize, col: usize) -> Star6V {
        Star6V {
            west: self.h_edges[row][col],
            east: self.h_edges[row][col + 1],
            south: self.v_edges[row + 1][col],
            north: self.v_edges[row][col],
        }
    }

    pub fn vertex_type(&self, row: usize, col: usize) -> Result<VertexType6V, SixvError> {
        classify_vertex(self.star(row, col)).map_err(|_| SixvError::IceRuleViolation {
            row,
            col,
            inward: self.star(row, col).inward_count(),
        })
    }

    fn validate_ice(&self) -> Result<(), SixvError> {
        for row in 0..self.n {
            for col in 0..self.n {
                self.vertex_type(row, col)?;
            }
        }
        Ok(())
    }

    /// True when the fixed boundary arrows match the convention.
    pub fn satisfies_dwbc(&self, convention: BoundaryConvention) -> bool {
        let (h_west, h_east, v_top, v_bottom) = dwbc_boundary(convention);
        (0..self.n).all(|r| self.h_edges[r][0] == h_west && self.h_edges[r][self.n] == h_east)
            && (0..self.n)
                .all(|c| self.v_edges[0][c] == v_top && self.v_edges[self.n][c] == v_bottom)
    }

    /// Per-type vertex counts `(n_a1, n_a2, n_b1, n_b2, n_c1, n_c2)`.
    pub fn type_counts(&self) -> Result<[usize; 6], SixvError> {
        let mut counts = [0usize; 6];
        for row in 0..self.n {
            for col in 0..self.n {
                let t = self.vertex_type(row, col)?;
                counts[t as usize] += 1;
            }
        }
        Ok(counts)
    }
}

/// Boundary arrows `(west h, east h, top v, bottom v)` for a convention.
fn dwbc_boundary(convention: BoundaryConvention) -> (Arrow, Arrow, Arrow, Arrow) {
    match convention {
        // west edge east-pointing (in), east edge west-pointing (in),
        // top edge north-pointing (out), bottom edge south-pointing (out)
        BoundaryConvention::HorizontalIn => (
            Arrow::Positive,
            Arrow::Negative,
            Arrow::Positive,
            Arrow::Negative,
        ),
        BoundaryConvention::Flipped => (
            Arrow::Negative,
            Arrow::Positive,
            Arrow::Negative,
            Arrow::Positive,
        ),
    }
}

/// JSON wire form: arrows as ±1 in the grid layout documented on
/// [`Configuration6V`].
#[derive(Serialize, Deserialize)]
pub struct Configuration6VWire {
    pub n: usize,
    pub h_edges: Vec<Vec<i8>>,
    pub v_edges: Vec<Vec<i8>>,
}

impl From<&Configuration6V> for Configuration6VWire {
    fn from(c: &Configuration6V) -> Self {
        Configuration6VWire {
            n: c.n,
            h_edges: c
                .h_edges
                .iter()
                .map(|r| r.iter().map(|a| a.sign()).collect())
                .collect(),
            v_edges: c
                .v_edges
                .iter()
                .map(|r| r.iter().map(|a| a.sign()).collect())
                .collect(),
        }
    }
}

impl TryFrom<Configuration6VWire> for Configuration6V {
    type Error = SixvError;

    fn try_from(w: Configuration6VWire) -> Result<Self, SixvError> {
        let conv = |grid: Vec<Vec<i8>>| -> Result<Vec<Vec<Arrow>>, SixvError> {
            grid.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|s| {
                            Arrow::from_sign(s)
                                .ok_or_else(|| SixvError::Malformed(format!("bad arrow sign {s}")))
                        })
                        .collect()
                })
                .collect()
        };
        Configuration6V::new(w.n, conv(w.h_edges)?, conv(w.v_edges)?)
    }
}

/// Boltzmann weight bundle. Scalar type is pluggable: exact rationals when
/// every input is rational, floats otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights6V<T> {
    pub a1: T,
    pub a2: T,
    pub b1: T,
    pub b2: T,
    pub c1: T,
    pub c2: T,
}

impl<T: Clone> Weights6V<T> {
    pub fn isotropic(a: T, b: T, c: T) -> Self {
        Weights6V {
            a1: a.clone(),
            a2: a,
            b1: b.clone(),
            b2: b,
            c1: c.clone(),
            c2: c,
        }
    }

    pub fn of(&self, t: VertexType6V) -> T {
        match t {
            VertexType6V::A1 => self.a1.clone(),
            VertexType6V::A2 => self.a2.clone(),
            VertexType6V::B1 => self.b1.clone(),
            VertexType6V::B2 => self.b2.clone(),
            VertexType6V::C1 => self.c1.clone(),
            VertexType6V::C2 => self.c2.clone(),
        }
    }
}

impl<T: Clone + PartialEq> Weights6V<T> {
    pub fn is_isotropic(&self) -> bool {
        self.a1 == self.a2 && self.b1 == self.b2 && self.c1 == self.c2
    }
}

impl Weights6V<f64> {
    pub fn unit() -> Self {
        Weights6V::isotropic(1.0, 1.0, 1.0)
    }

    pub fn validate(&self) -> Result<(), SixvError> {
        let all = [self.a1, self.a2, self.b1, self.b2, self.c1, self.c2];
        if all.iter().any(|w| *w < 0.0 || !w.is_finite()) {
            return Err(SixvError::InvalidWeights(
                "weights must be finite and nonnegative".into(),
            ));
        }
        if all.iter().all(|w| *w == 0.0) {
            return Err(SixvError::InvalidWeights("all weights are zero".into()));
        }
        Ok(())
    }

    /// Δ = (a² + b² − c²) / (2ab) for an isotropic bundle with a, b > 0.
    pub fn delta(&self) -> Result<f64, SixvError> {
        let (a, b, c) = self.isotropic_abc()?;
        Ok((a * a + b * b - c * c) / (2.0 * a * b))
    }

    /// t = b / a for an isotropic bundle.
    pub fn t(&self) -> Result<f64, SixvError> {
        let (a, b, _) = self.isotropic_abc()?;
        Ok(b / a)
    }

    pub fn isotropic_abc(&self) -> Result<(f64, f64, f64), SixvError> {
        if !self.is_isotropic() {
            return Err(SixvError::InvalidWeights(
                "Δ and t are defined for isotropic bundles".into(),
            ));
        }
        if self.a1 <= 0.0 || self.b1 <= 0.0 {
            return Err(SixvError::InvalidWeights(
                "Δ and t need strictly positive a, b".into(),
            ));
        }
        Ok((self.a1, self.b1, self.c1))
    }
}

/// External-field parametrization of a weight bundle.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct FieldParams {
    pub a: f64,
    pub c: f64,
    pub h_field: f64,
    pub v_field: f64,
    /// c-weight asymmetry λ ≥ 1.
    pub lambda_c: f64,
    /// The printed parametrization has no b prefactor on b1, b2. Setting this
    /// supplies one (see module docs on open questions).
    pub b_prefactor: Option<f64>,
}

/// Weight bundle from field parameters:
/// a1 = a·e^{H+V}, a2 = a·e^{−H−V}, b1 = e^{H−V}, b2 = e^{−H+V},
/// c1 = cλ, c2 = c/λ.
pub fn field_weights(p: &FieldParams) -> Weights6V<f64> {
    let b0 = p.b_prefactor.unwrap_or(1.0);
    Weights6V {
        a1: p.a * (p.h_field + p.v_field).exp(),
        a2: p.a * (-p.h_field - p.v_field).exp(),
        b1: b0 * (p.h_field - p.v_field).exp(),
        b2: b0 * (-p.h_field + p.v_field).exp(),
        c1: p.c * p.lambda_c,
        c2: p.c / p.lambda_c,
    }
}

pub const DEFAULT_CAP_6V: usize = 6;

/// Visit every DWBC configuration of size `n` exactly once, in a fixed
/// deterministic order (row-major depth-first over the free vertical-edge
/// interfaces; within an interface, `Positive` sorts before `Negative`).
pub fn for_each_dwbc<F>(
    n: usize,
    convention: BoundaryConvention,
    cap: usize,
    mut f: F,
) -> Result<(), SixvError>
where
    F: FnMut(&Configuration6V),
{
    if n == 0 || n > cap {
        return Err(SixvError::CapExceeded { n, cap });
    }
    let (h_west, h_east, v_top, v_bottom) = dwbc_boundary(convention);
    let mut v_edges = vec![vec![Arrow::Positive; n]; n + 1];
    v_edges[0] = vec![v_top; n];
    v_edges[n] = vec![v_bottom; n];
    let mut h_edges = vec![vec![h_west; n + 1]; n];

    // Fill row `row`'s horizontal edges from its two interfaces; west edge is
    // fixed, each east edge is forced by the ice rule.
    fn derive_row(
        n: usize,
        row: usize,
        v_edges: &[Vec<Arrow>],
        h_row: &mut [Arrow],
        h_west: Arrow,
        h_east: Arrow,
    ) -> bool {
        h_row[0] = h_west;
        for col in 0..n {
            let north = v_edges[row][col];
            let south = v_edges[row + 1][col];
            let mut inward = 0;
            if h_row[col] == Arrow::Positive {
                inward += 1;
            }
            if south == Arrow::Positive {
                inward += 1;
            }
            if north == Arrow::Negative {
                inward += 1;
            }
            // east edge must supply 2 - inward additional inward arrows
            match inward {
                1 => h_row[col + 1] = Arrow::Negative, // east points west: inward
                2 => h_row[col + 1] = Arrow::Positive, // east points east: outward
                _ => return false,
            }
        }
        h_row[n] == h_east
    }

    // Interfaces 1..n-1 are free; interface n is fixed by DWBC, after which
    // row n-1 is derived and checked.
    fn recurse<F>(
        n: usize,
        interface: usize,
        v_edges: &mut Vec<Vec<Arrow>>,
        h_edges: &mut Vec<Vec<Arrow>>,
        bounds: (Arrow, Arrow),
        f: &mut F,
    ) where
        F: FnMut(&Configuration6V),
    {
        let (h_west, h_east) = bounds;
        if interface == n {
            // final interface is already fixed by DWBC; derive last row
            let mut row = h_edges[n - 1].clone();
            if derive_row(n, n - 1, v_edges, &mut row, h_west, h_east) {
                h_edges[n - 1] = row;
                let cfg = Configuration6V {
                    n,
                    h_edges: h_edges.clone(),
                    v_edges: v_edges.clone(),
                };
                debug_assert!(cfg.validate_ice().is_ok());
                f(&cfg);
            }
            return;
        }
        for bits in 0..(1usize << n) {
            for col in 0..n {
                v_edges[interface][col] = if bits >> col & 1 == 0 {
                    Arrow::Positive
                } else {
                    Arrow::Negative
                };
            }
            let mut row = h_edges[interface - 1].clone();
            if derive_row(n, interface - 1, v_edges, &mut row, h_west, h_east) {
                h_edges[interface - 1] = row;
                recurse(n, interface + 1, v_edges, h_edges, bounds, f);
            }
        }
    }

    recurse(n, 1, &mut v_edges, &mut h_edges, (h_west, h_east), &mut f);
    Ok(())
}

/// Materialized enumeration; prefer [`for_each_dwbc`] for large sweeps.
pub fn enumerate_dwbc(
    n: usize,
    convention: BoundaryConvention,
    cap: usize,
) -> Result<Vec<Configuration6V>, SixvError> {
    let mut out = Vec::new();
    for_each_dwbc(n, convention, cap, |c| out.push(c.clone()))?;
    Ok(out)
}

/// Independent counting oracle: memoized interface-to-interface transfer.
/// Shares no code with the depth-first enumerator.
pub fn count_dwbc_transfer(n: usize, convention: BoundaryConvention) -> u64 {
    let (h_west, h_east, v_top, v_bottom) = dwbc_boundary(convention);
    let top_state: usize = (0..n).fold(0, |acc, c| {
        acc | ((v_top == Arrow::Negative) as usize) << c
    });
    let bottom_state: usize = (0..n).fold(0, |acc, c| {
        acc | ((v_bottom == Arrow::Negative) as usize) << c
    });
    let states = 1usize << n;
    // row_ok[above][below]: is there a valid single-row filling?
    let row_ok = |above: usize, below: usize| -> bool {
        let mut west = h_west;
        for col in 0..n {
            let north = if above >> col & 1 == 0 {
                Arrow::Positive
            } else {
                Arrow::Negative
            };
            let south = if below >> col & 1 == 0 {
                Arrow::Positive
            } else {
                Arrow::Negative
            };
            let mut inward = 0;
            if west == Arrow::Positive {
                inward += 1;
            }
            if south == Arrow::Positive {
                inward += 1;
            }
            if north == Arrow::Negative {
                inward += 1;
            }
            west = match inward {
                1 => Arrow::Negative,
                2 => Arrow::Positive,
                _ => return false,
            };
        }
        west == h_east
    };
    let mut current = vec![0u64; states];
    current[top_state] = 1;
    for _row in 0..n {
        let mut next = vec![0u64; states];
        for (above, &ways) in current.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            for below in 0..states {
                if row_ok(above, below) {
                    next[below] += ways;
                }
            }
        }
        current = next;
    }
    current[bottom_state]
}

/// Product of vertex weights over the configuration.
pub fn weight<T>(config: &Configuration6V, w: &Weights6V<T>) -> Result<T, SixvError>
where
    T: Clone + One + std::ops::Mul<Output = T>,
{
    let mut acc = T::one();
    for row in 0..config.n() {
        for col in 0..config.n() {
            acc = acc * w.of(config.vertex_type(row, col)?);
        }
    }
    Ok(acc)
}

/// Weight with a per-site weight function (used by the inhomogeneous oracle).
pub fn weight_with<T, F>(config: &Configuration6V, site_weight: F) -> Result<T, SixvError>
where
    T: Clone + One + std::ops::Mul<Output = T>,
    F: Fn(usize, usize, VertexType6V) -> T,
{
    let mut acc = T::one();
    for row in 0..config.n() {
        for col in 0..config.n() {
            acc = acc * site_weight(row, col, config.vertex_type(row, col)?);
        }
    }
    Ok(acc)
}

/// Z = Σ over DWBC configurations of the weight product.
pub fn partition_brute<T>(
    n: usize,
    w: &Weights6V<T>,
    convention: BoundaryConvention,
    cap: usize,
) -> Result<T, SixvError>
where
    T: Clone + Zero + One + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    let mut terms = Vec::new();
    for_each_dwbc(n, convention, cap, |cfg| {
        terms.push(weight(cfg, w).expect("enumerated configurations satisfy the ice rule"));
    })?;
    Ok(pairwise_sum(terms))
}

/// Z with per-site weights `f(row, col, vertex_type)`.
pub fn partition_brute_with<T, F>(
    n: usize,
    convention: BoundaryConvention,
    cap: usize,
    site_weight: F,
) -> Result<T, SixvError>
where
    T: Clone + Zero + One + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
    F: Fn(usize, usize, VertexType6V) -> T,
{
    let mut terms = Vec::new();
    for_each_dwbc(n, convention, cap, |cfg| {
        terms.push(
            weight_with(cfg, &site_weight)
                .expect("enumerated configurations satisfy the ice rule"),
        );
    })?;
    Ok(pairwise_sum(terms))
}

/// P[config] = w(config) / Z.
pub fn probability(
    config: &Configuration6V,
    w: &Weights6V<f64>,
    convention: BoundaryConvention,
    cap: usize,
) -> Result<f64, SixvError> {
    let z = partition_brute(config.n(), w, convention, cap)?;
    if z <= 0.0 {
        return Err(SixvError::DegenerateMeasure);
    }
    Ok(weight(config, w)? / z)
}
