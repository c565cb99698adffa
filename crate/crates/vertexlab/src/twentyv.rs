//! Twenty-vertex configurations on a rhombic n×n volume of the triangular
//! lattice: validation, enumeration under domain-wall boundary conditions,
//! and brute-force partition functions with the composite weight bundle.
//!
//! Lattice conventions: vertices `(row, col)` with row 0 on top; three edge
//! families — horizontal (positive = east), vertical (positive = north), and
//! diagonal along NE–SW lines of constant `row + col` (positive = toward NE).
//! Diagonal edges are stored per line: `d_edges[s][p]` is the p-th edge of
//! line `s = row + col`, counted from the SW end.
//!
//! Each of the twenty admissible stars is classified by the state of its
//! three lines (through, or a sink/source exchange between two lines); the
//! class-to-weight map sends a star to one of the seven composite weights,
//! with family 1 attached to the horizontal–vertical crossing, family 2 to
//! horizontal–diagonal, family 3 to vertical–diagonal.

use crate::numeric::pairwise_sum;
use crate::sixv::Arrow;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TwentyvError {
    #[error("ice rule violated: {inward} inward arrows at vertex ({row}, {col})")]
    IceRuleViolation {
        row: usize,
        col: usize,
        inward: usize,
    },
    #[error("volume size {n} exceeds enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("degenerate measure: partition function vanishes")]
    DegenerateMeasure,
    #[error("region out of bounds: {0}")]
    RegionOutOfBounds(String),
    #[error("malformed configuration: {0}")]
    Malformed(String),
}

/// A 6-edge vertex neighborhood:
/// `(west, east, south, north, sw, ne)`, positives pointing east/north/NE.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Star20V {
    pub west: Arrow,
    pub east: Arrow,
    pub south: Arrow,
    pub north: Arrow,
    pub sw: Arrow,
    pub ne: Arrow,
}

impl Star20V {
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
        if self.sw == Arrow::Positive {
            c += 1;
        }
        if self.ne == Arrow::Negative {
            c += 1;
        }
        c
    }

    /// Bit code with bit k set when the k-th edge (W, E, S, N, SW, NE order)
    /// is positive. Used for the canonical class indexing.
    pub fn code(&self) -> u8 {
        let edges = [self.west, self.east, self.south, self.north, self.sw, self.ne];
        edges
            .iter()
            .enumerate()
            .fold(0u8, |acc, (k, &a)| acc | ((a == Arrow::Positive) as u8) << k)
    }

    pub fn from_code(code: u8) -> Star20V {
        let arrow = |bit: u8| {
            if code >> bit & 1 == 1 {
                Arrow::Positive
            } else {
                Arrow::Negative
            }
        };
        Star20V {
            west: arrow(0),
            east: arrow(1),
            south: arrow(2),
            north: arrow(3),
            sw: arrow(4),
            ne: arrow(5),
        }
    }
}

/// Per-line flow state of a star: each line is either transported through
/// (with a sign) or exchanges flow with another line at the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LineState {
    ThroughPositive,
    ThroughNegative,
    Sink,
    Source,
}

fn line_state(upstream: Arrow, downstream: Arrow) -> LineState {
    match (upstream, downstream) {
        (Arrow::Positive, Arrow::Positive) => LineState::ThroughPositive,
        (Arrow::Negative, Arrow::Negative) => LineState::ThroughNegative,
        (Arrow::Positive, Arrow::Negative) => LineState::Sink,
        (Arrow::Negative, Arrow::Positive) => LineState::Source,
    }
}

/// Sorted bit codes of the twenty admissible stars; the class index of a
/// star is its rank in this table.
pub fn admissible_star_codes() -> Vec<u8> {
    (0u8..64)
        .filter(|&code| Star20V::from_code(code).inward_count() == 3)
        .collect()
}

/// Classify a star into its class index `0..20`.
pub fn classify_vertex_20v(star: Star20V) -> Result<usize, TwentyvError> {
    let inward = star.inward_count();
    if inward != 3 {
        return Err(TwentyvError::IceRuleViolation {
            row: 0,
            col: 0,
            inward,
        });
    }
    let code = star.code();
    let rank = admissible_star_codes()
        .iter()
        .position(|&c| c == code)
        .expect("3-in stars are admissible by construction");
    Ok(rank)
}

/// Composite-weight slot (0..7 for w0..w6) of an admissible star.
///
/// Through patterns by relative line signs: all equal → w0, σV opposite →
/// w1, σH opposite or σD opposite → w6. Exchange patterns by which pair of
/// lines swaps flow: {H,V} → w4 (the c1 slot), {V,D} → w2 (the c3 slot),
/// {H,D} → w5 (c2) when the vertical line is transported negatively, and
/// {H,D} with a positively transported vertical line → w3, the doubled
/// composite. With the default boundary table and unit weights this map
/// reproduces the series-determinant values 1, 4, 60 for n = 1, 2, 3.
pub fn star_weight_slot(star: Star20V) -> Result<usize, TwentyvError> {
    let inward = star.inward_count();
    if inward != 3 {
        return Err(TwentyvError::IceRuleViolation {
            row: 0,
            col: 0,
            inward,
        });
    }
    let h = line_state(star.west, star.east);
    let v = line_state(star.south, star.north);
    let d = line_state(star.sw, star.ne);
    use LineState::*;
    let is_through = |s: LineState| matches!(s, ThroughPositive | ThroughNegative);
    let slot = if is_through(h) && is_through(v) && is_through(d) {
        let same = |x: LineState, y: LineState| {
            matches!(
                (x, y),
                (ThroughPositive, ThroughPositive) | (ThroughNegative, ThroughNegative)
            )
        };
        match (same(h, v), same(h, d)) {
            (true, true) => 0,   // w0 = a1 a2 a3
            (false, true) => 1,  // w1 = b1 a2 b3
            (true, false) => 6,  // σD opposite
            (false, false) => 6, // w6 = b1 b2 a3
        }
    } else {
        let turns: Vec<usize> = [h, v, d]
            .iter()
            .enumerate()
            .filter(|(_, s)| !is_through(**s))
            .map(|(i, _)| i)
            .collect();
        debug_assert_eq!(turns.len(), 2);
        match (turns[0], turns[1]) {
            (0, 1) => 4, // H–V exchange: w4 = c1 a2 a3
            (1, 2) => 2, // V–D exchange: w2 = b1 a2 c3
            (0, 2) => {
                if v == ThroughPositive {
                    3 // w3 = a1 b2 b3 + c1 c2 c3, the doubled slot
                } else {
                    5 // w5 = b1 c2 a3
                }
            }
            _ => unreachable!(),
        }
    };
    Ok(slot)
}

/// The nine per-family Boltzmann weights: family 1 is the
/// horizontal–vertical sub-model, 2 horizontal–diagonal, 3 vertical–diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights20V<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub b1: T,
    pub b2: T,
    pub b3: T,
    pub c1: T,
    pub c2: T,
    pub c3: T,
}

impl<T: Clone> Weights20V<T> {
    pub fn uniform(v: T) -> Self {
        Weights20V {
            a1: v.clone(),
            a2: v.clone(),
            a3: v.clone(),
            b1: v.clone(),
            b2: v.clone(),
            b3: v.clone(),
            c1: v.clone(),
            c2: v.clone(),
            c3: v,
        }
    }
}

impl Weights20V<f64> {
    pub fn unit() -> Self {
        Weights20V::uniform(1.0)
    }
}

/// The seven composite weights
/// (w0, …, w6) = (a1a2a3, b1a2b3, b1a2c3, a1b2b3 + c1c2c3, c1a2a3, b1c2a3, b1b2a3).
#[derive(Clone, Debug, PartialEq)]
pub struct CompositeWeights20V<T> {
    pub w: [T; 7],
}

pub fn composite_weights<T>(weights: &Weights20V<T>) -> CompositeWeights20V<T>
where
    T: Clone + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    let m = |x: &T, y: &T, z: &T| x.clone() * y.clone() * z.clone();
    let w0 = m(&weights.a1, &weights.a2, &weights.a3);
    let w1 = m(&weights.b1, &weights.a2, &weights.b3);
    let w2 = m(&weights.b1, &weights.a2, &weights.c3);
    let w3 = m(&weights.a1, &weights.b2, &weights.b3) + m(&weights.c1, &weights.c2, &weights.c3);
    let w4 = m(&weights.c1, &weights.a2, &weights.a3);
    let w5 = m(&weights.b1, &weights.c2, &weights.a3);
    let w6 = m(&weights.b1, &weights.b2, &weights.a3);
    CompositeWeights20V {
        w: [w0, w1, w2, w3, w4, w5, w6],
    }
}

/// Unit basis vectors of the three lattice directions.
#[derive(Clone, Copy, Debug)]
pub struct TriangularBasis {
    pub up: [f64; 3],
    pub right: [f64; 3],
    pub down: [f64; 3],
}

impl Default for TriangularBasis {
    fn default() -> Self {
        let h = 3f64.sqrt() / 2.0;
        TriangularBasis {
            up: [h, 0.5, 0.0],
            right: [h, -0.5, 0.0],
            down: [0.0, 0.0, 1.0],
        }
    }
}

/// Boundary arrows, one entry per boundary side and family: `1` fixes the
/// positive orientation, `-1` the negative one, `0` leaves the dangling edge
/// free (its state is then forced vertex-by-vertex; a free dangler is the
/// same thing as deleting the edge, which truncates boundary vertices to the
/// pentagonal ones).
///
/// Diagonal danglers split by which side they touch; a line's SW dangler
/// belongs to the left side when `s ≤ n−1`, to the bottom otherwise, and its
/// NE dangler to the top when `s ≤ n−1`, to the right otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTable20V {
    pub h_west: i8,
    pub h_east: i8,
    pub v_top: i8,
    pub v_bottom: i8,
    pub d_sw_left: i8,
    pub d_sw_bottom: i8,
    pub d_ne_top: i8,
    pub d_ne_right: i8,
    /// Overrides for the two corner diagonal danglers (the SW dangler of the
    /// bottom-left vertex and the NE dangler of the top-right vertex), which
    /// sit at the junction of two sides. `None` inherits the side value.
    #[serde(default)]
    pub d_sw_corner: Option<i8>,
    #[serde(default)]
    pub d_ne_corner: Option<i8>,
}

impl BoundaryTable20V {
    fn side(sign: i8) -> Option<Arrow> {
        match sign {
            0 => None,
            s if s > 0 => Some(Arrow::Positive),
            _ => Some(Arrow::Negative),
        }
    }

    fn sw_dangler(&self, n: usize, s: usize) -> i8 {
        if s == n - 1 {
            self.d_sw_corner.unwrap_or(self.d_sw_left)
        } else if s < n - 1 {
            self.d_sw_left
        } else {
            self.d_sw_bottom
        }
    }

    fn ne_dangler(&self, n: usize, s: usize) -> i8 {
        if s == n - 1 {
            self.d_ne_corner.unwrap_or(self.d_ne_top)
        } else if s < n - 1 {
            self.d_ne_top
        } else {
            self.d_ne_right
        }
    }

    /// The default domain-wall table: horizontal danglers inward, vertical
    /// danglers outward (the six-vertex convention), diagonal danglers
    /// uniformly NE-ward. Plain configuration counts under this table are
    /// 1, 3, 29, 901 for n = 1..4.
    pub fn dwbc_default() -> Self {
        BoundaryTable20V {
            h_west: 1,
            h_east: -1,
            v_top: 1,
            v_bottom: -1,
            d_sw_left: 1,
            d_sw_bottom: 1,
            d_ne_top: 1,
            d_ne_right: 1,
            d_sw_corner: None,
            d_ne_corner: None,
        }
    }
}

pub const DEFAULT_CAP_20V: usize = 3;

/// Edge-arrow field on the rhombic n×n volume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration20V {
    n: usize,
    h_edges: Vec<Vec<Arrow>>,
    v_edges: Vec<Vec<Arrow>>,
    /// `d_edges[s]` holds line `s = row + col` from SW to NE.
    d_edges: Vec<Vec<Arrow>>,
}

/// Number of vertices on diagonal line `s` for volume size `n`.
fn d_line_len(n: usize, s: usize) -> usize {
    let r_hi = s.min(n - 1);
    let r_lo = s.saturating_sub(n - 1);
    r_hi - r_lo + 1
}

/// Index of the vertex `(row, col)` along its diagonal line, from the SW end.
fn d_pos(n: usize, row: usize, col: usize) -> usize {
    let s = row + col;
    s.min(n - 1) - row
}

impl Configuration20V {
    pub fn new(
        n: usize,
        h_edges: Vec<Vec<Arrow>>,
        v_edges: Vec<Vec<Arrow>>,
        d_edges: Vec<Vec<Arrow>>,
    ) -> Result<Self, TwentyvError> {
        if n == 0 {
            return Err(TwentyvError::Malformed("n must be positive".into()));
        }
        if h_edges.len() != n || h_edges.iter().any(|r| r.len() != n + 1) {
            return Err(TwentyvError::Malformed("bad h_edges shape".into()));
        }
        if v_edges.len() != n + 1 || v_edges.iter().any(|r| r.len() != n) {
            return Err(TwentyvError::Malformed("bad v_edges shape".into()));
        }
        if d_edges.len() != 2 * n - 1 {
            return Err(TwentyvError::Malformed("bad d_edges line count".into()));
        }
        for (s, line) in d_edges.iter().enumerate() {
            if line.len() != d_line_len(n, s) + 1 {
                return Err(TwentyvError::Malformed(format!("bad d line {s} length")));
            }
        }
        let cfg = Configuration20V {
            n,
            h_edges,
            v_edges,
            d_edges,
        };
        cfg.validate_ice()?;
        Ok(cfg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn star(&self, row: usize, col: usize) -> Star20V {
        let s = row + col;
        let p = d_pos(self.n, row, col);
        Star20V {
            west: self.h_edges[row][col],
            east: self.h_edges[row][col + 1],
            south: self.v_edges[row + 1][col],
            north: self.v_edges[row][col],
            sw: self.d_edges[s][p],
            ne: self.d_edges[s][p + 1],
        }
    }

    pub fn h_edge(&self, row: usize, k: usize) -> Arrow {
        self.h_edges[row][k]
    }

    pub fn v_edge(&self, interface: usize, col: usize) -> Arrow {
        self.v_edges[interface][col]
    }

    pub fn d_edge(&self, s: usize, p: usize) -> Arrow {
        self.d_edges[s][p]
    }

    pub fn class_at(&self, row: usize, col: usize) -> Result<usize, TwentyvError> {
        classify_vertex_20v(self.star(row, col)).map_err(|_| TwentyvError::IceRuleViolation {
            row,
            col,
            inward: self.star(row, col).inward_count(),
        })
    }

    fn validate_ice(&self) -> Result<(), TwentyvError> {
        for row in 0..self.n {
            for col in 0..self.n {
                self.class_at(row, col)?;
            }
        }
        Ok(())
    }

    /// Counts per composite-weight slot.
    pub fn slot_counts(&self) -> Result<[usize; 7], TwentyvError> {
        let mut counts = [0usize; 7];
        for row in 0..self.n {
            for col in 0..self.n {
                counts[star_weight_slot(self.star(row, col)).map_err(|_| {
                    TwentyvError::IceRuleViolation {
                        row,
                        col,
                        inward: self.star(row, col).inward_count(),
                    }
                })?] += 1;
            }
        }
        Ok(counts)
    }
}

#[derive(Serialize, Deserialize)]
pub struct Configuration20VWire {
    pub n: usize,
    pub h_edges: Vec<Vec<i8>>,
    pub v_edges: Vec<Vec<i8>>,
    pub d_edges: Vec<Vec<i8>>,
}

impl From<&Configuration20V> for Configuration20VWire {
    fn from(c: &Configuration20V) -> Self {
        let conv = |g: &Vec<Vec<Arrow>>| -> Vec<Vec<i8>> {
            g.iter()
                .map(|row| row.iter().map(|a| a.sign()).collect())
                .collect()
        };
        Configuration20VWire {
            n: c.n,
            h_edges: conv(&c.h_edges),
            v_edges: conv(&c.v_edges),
            d_edges: conv(&c.d_edges),
        }
    }
}

impl TryFrom<Configuration20VWire> for Configuration20V {
    type Error = TwentyvError;

    fn try_from(w: Configuration20VWire) -> Result<Self, TwentyvError> {
        let conv = |g: Vec<Vec<i8>>| -> Result<Vec<Vec<Arrow>>, TwentyvError> {
            g.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|s| {
                            Arrow::from_sign(s).ok_or_else(|| {
                                TwentyvError::Malformed(format!("bad arrow sign {s}"))
                            })
                        })
                        .collect()
                })
                .collect()
        };
        Configuration20V::new(w.n, conv(w.h_edges)?, conv(w.v_edges)?, conv(w.d_edges)?)
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct EdgeSlot {
    set: bool,
    arrow: Arrow,
}

struct Enumerator<'a, F: FnMut(&Configuration20V)> {
    n: usize,
    table: BoundaryTable20V,
    h: Vec<Vec<EdgeSlot>>,
    v: Vec<Vec<EdgeSlot>>,
    d: Vec<Vec<EdgeSlot>>,
    visit: &'a mut F,
}

#[derive(Clone, Copy)]
enum EdgeRef {
    H(usize, usize),
    V(usize, usize),
    D(usize, usize),
}

impl<'a, F: FnMut(&Configuration20V)> Enumerator<'a, F> {
    fn slot(&mut self, e: EdgeRef) -> &mut EdgeSlot {
        match e {
            EdgeRef::H(r, k) => &mut self.h[r][k],
            EdgeRef::V(i, c) => &mut self.v[i][c],
            EdgeRef::D(s, p) => &mut self.d[s][p],
        }
    }

    /// Boundary constraint for an edge: `Some(side)` when dangling, where
    /// `side = None` marks a free dangler.
    fn boundary(&self, e: EdgeRef) -> Option<Option<Arrow>> {
        let n = self.n;
        let t = &self.table;
        match e {
            EdgeRef::H(_, k) if k == 0 => Some(BoundaryTable20V::side(t.h_west)),
            EdgeRef::H(_, k) if k == n => Some(BoundaryTable20V::side(t.h_east)),
            EdgeRef::V(i, _) if i == 0 => Some(BoundaryTable20V::side(t.v_top)),
            EdgeRef::V(i, _) if i == n => Some(BoundaryTable20V::side(t.v_bottom)),
            EdgeRef::D(s, p) if p == 0 => Some(BoundaryTable20V::side(t.sw_dangler(n, s))),
            EdgeRef::D(s, p) if p == d_line_len(n, s) => {
                Some(BoundaryTable20V::side(t.ne_dangler(n, s)))
            }
            _ => None,
        }
    }

    /// The six edges of vertex (r, c), in (W, E, S, N, SW, NE) order.
    fn vertex_edges(&self, r: usize, c: usize) -> [EdgeRef; 6] {
        let s = r + c;
        let p = d_pos(self.n, r, c);
        [
            EdgeRef::H(r, c),
            EdgeRef::H(r, c + 1),
            EdgeRef::V(r + 1, c),
            EdgeRef::V(r, c),
            EdgeRef::D(s, p),
            EdgeRef::D(s, p + 1),
        ]
    }

    /// Column-major order: all edges of earlier columns are decided.
    fn next_vertex(&self, idx: usize) -> (usize, usize) {
        (idx % self.n, idx / self.n)
    }

    fn run(&mut self) {
        // pre-set the fixed dangling edges; free danglers are branched at
        // their vertex like interior edges
        let n = self.n;
        let mut fixed: Vec<(EdgeRef, Arrow)> = Vec::new();
        for r in 0..n {
            for &k in &[0usize, n] {
                if let Some(Some(a)) = self.boundary(EdgeRef::H(r, k)) {
                    fixed.push((EdgeRef::H(r, k), a));
                }
            }
        }
        for c in 0..n {
            for &i in &[0usize, n] {
                if let Some(Some(a)) = self.boundary(EdgeRef::V(i, c)) {
                    fixed.push((EdgeRef::V(i, c), a));
                }
            }
        }
        for s in 0..2 * n - 1 {
            let len = d_line_len(n, s);
            for &p in &[0usize, len] {
                if let Some(Some(a)) = self.boundary(EdgeRef::D(s, p)) {
                    fixed.push((EdgeRef::D(s, p), a));
                }
            }
        }
        for (e, a) in fixed {
            *self.slot(e) = EdgeSlot { set: true, arrow: a };
        }
        self.descend(0);
    }

    fn descend(&mut self, idx: usize) {
        let n = self.n;
        if idx == n * n {
            let conv = |g: &Vec<Vec<EdgeSlot>>| -> Vec<Vec<Arrow>> {
                g.iter().map(|row| row.iter().map(|e| e.arrow).collect()).collect()
            };
            let cfg = Configuration20V {
                n,
                h_edges: conv(&self.h),
                v_edges: conv(&self.v),
                d_edges: conv(&self.d),
            };
            debug_assert!(cfg.validate_ice().is_ok());
            (self.visit)(&cfg);
            return;
        }
        let (r, c) = self.next_vertex(idx);
        let edges = self.vertex_edges(r, c);
        let mut unset: Vec<usize> = Vec::with_capacity(3);
        for (k, &e) in edges.iter().enumerate() {
            if !self.slot(e).set {
                unset.push(k);
            }
        }
        let m = unset.len();
        for bits in 0..(1usize << m) {
            for (j, &k) in unset.iter().enumerate() {
                let arrow = if bits >> j & 1 == 0 {
                    Arrow::Positive
                } else {
                    Arrow::Negative
                };
                let e = edges[k];
                *self.slot(e) = EdgeSlot { set: true, arrow };
            }
            let star = Star20V {
                west: self.slot(edges[0]).arrow,
                east: self.slot(edges[1]).arrow,
                south: self.slot(edges[2]).arrow,
                north: self.slot(edges[3]).arrow,
                sw: self.slot(edges[4]).arrow,
                ne: self.slot(edges[5]).arrow,
            };
            if star.inward_count() == 3 {
                self.descend(idx + 1);
            }
        }
        for &k in &unset {
            let e = edges[k];
            self.slot(e).set = false;
        }
    }
}

/// Visit every DWBC configuration exactly once, in deterministic
/// column-major depth-first order.
pub fn for_each_dwbc_20v<F>(
    n: usize,
    table: &BoundaryTable20V,
    cap: usize,
    mut f: F,
) -> Result<(), TwentyvError>
where
    F: FnMut(&Configuration20V),
{
    if n == 0 || n > cap {
        return Err(TwentyvError::CapExceeded { n, cap });
    }
    let blank = || EdgeSlot {
        set: false,
        arrow: Arrow::Positive,
    };
    let mut en = Enumerator {
        n,
        table: *table,
        h: (0..n).map(|_| (0..=n).map(|_| blank()).collect()).collect(),
        v: (0..=n).map(|_| (0..n).map(|_| blank()).collect()).collect(),
        d: (0..2 * n - 1)
            .map(|s| (0..=d_line_len(n, s)).map(|_| blank()).collect())
            .collect(),
        visit: &mut f,
    };
    en.run();
    Ok(())
}

pub fn enumerate_dwbc_20v(
    n: usize,
    table: &BoundaryTable20V,
    cap: usize,
) -> Result<Vec<Configuration20V>, TwentyvError> {
    let mut out = Vec::new();
    for_each_dwbc_20v(n, table, cap, |c| out.push(c.clone()))?;
    Ok(out)
}

/// Independent counting oracle: memoized transfer over column interfaces.
/// The interface state packs the n horizontal arrows crossing a vertical cut
/// together with the n−1 diagonal arrows crossing it. Free boundary sides
/// are summed over.
pub fn count_dwbc_20v_transfer(n: usize, table: &BoundaryTable20V) -> u64 {
    assert!(n >= 1);
    let h_bits = n;
    let d_bits = n - 1;
    let states = 1usize << (h_bits + d_bits);
    let arrow_of = |bit: bool| if bit { Arrow::Positive } else { Arrow::Negative };

    // A cut state is admissible against a side constraint when every packed
    // arrow matches; free sides admit everything.
    let side_admits = |state: usize, h_side: i8, d_side: i8| -> bool {
        (0..h_bits).all(|i| match BoundaryTable20V::side(h_side) {
            Some(a) => arrow_of(state >> i & 1 == 1) == a,
            None => true,
        }) && (0..d_bits).all(|i| match BoundaryTable20V::side(d_side) {
            Some(a) => arrow_of(state >> (h_bits + i) & 1 == 1) == a,
            None => true,
        })
    };

    // Left-cut diag arrow i (i = 0..n-2) is the SW edge of vertex (i, c);
    // right-cut diag arrow i is the NE edge of vertex (i+1, c).
    let column_ok = |c: usize, left: usize, right: usize| -> u64 {
        let h_left = |r: usize| arrow_of(left >> r & 1 == 1);
        let h_right = |r: usize| arrow_of(right >> r & 1 == 1);
        let d_left = |i: usize| arrow_of(left >> (h_bits + i) & 1 == 1);
        let d_right = |i: usize| arrow_of(right >> (h_bits + i) & 1 == 1);
        // column danglers: the SW edge of vertex (n-1, c) — line s = n-1+c,
        // "left" only when c = 0 — and the NE edge of vertex (0, c), always
        // on a "top" line; plus the two vertical danglers.
        let sw_side = table.sw_dangler(n, n - 1 + c);
        let ne_side = table.ne_dangler(n, c);
        let slots = [table.v_top, table.v_bottom, sw_side, ne_side];
        let free_count = slots.iter().filter(|s| **s == 0).count();
        let mut ways = 0u64;
        for free_bits in 0..(1usize << free_count) {
            let mut free_iter = 0usize;
            let mut resolve = |side: i8| -> Arrow {
                match BoundaryTable20V::side(side) {
                    Some(a) => a,
                    None => {
                        let a = arrow_of(free_bits >> free_iter & 1 == 1);
                        free_iter += 1;
                        a
                    }
                }
            };
            let v_top = resolve(table.v_top);
            let v_bottom = resolve(table.v_bottom);
            let sw_bottom = resolve(sw_side);
            let ne_top = resolve(ne_side);
            for bits in 0..(1usize << (n - 1)) {
                let v_edge = |i: usize| -> Arrow {
                    if i == 0 {
                        v_top
                    } else if i == n {
                        v_bottom
                    } else {
                        arrow_of(bits >> (i - 1) & 1 == 1)
                    }
                };
                let mut ok = true;
                for r in 0..n {
                    let star = Star20V {
                        west: h_left(r),
                        east: h_right(r),
                        south: v_edge(r + 1),
                        north: v_edge(r),
                        sw: if r == n - 1 { sw_bottom } else { d_left(r) },
                        ne: if r == 0 { ne_top } else { d_right(r - 1) },
                    };
                    if star.inward_count() != 3 {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    ways += 1;
                }
            }
        }
        ways
    };

    let mut current = vec![0u64; states];
    for state in 0..states {
        if side_admits(state, table.h_west, table.d_sw_left) {
            current[state] = 1;
        }
    }
    for c in 0..n {
        let mut next = vec![0u64; states];
        for left in 0..states {
            if current[left] == 0 {
                continue;
            }
            for right in 0..states {
                let w = column_ok(c, left, right);
                if w > 0 {
                    next[right] += current[left] * w;
                }
            }
        }
        current = next;
    }
    (0..states)
        .filter(|&s| side_admits(s, table.h_east, table.d_ne_right))
        .map(|s| current[s])
        .sum()
}

/// Product over vertices of the composite weight of the vertex class.
pub fn weight_20v<T>(
    config: &Configuration20V,
    composites: &CompositeWeights20V<T>,
) -> Result<T, TwentyvError>
where
    T: Clone + One + std::ops::Mul<Output = T>,
{
    let mut acc = T::one();
    for row in 0..config.n() {
        for col in 0..config.n() {
            let slot = star_weight_slot(config.star(row, col)).map_err(|_| {
                TwentyvError::IceRuleViolation {
                    row,
                    col,
                    inward: config.star(row, col).inward_count(),
                }
            })?;
            acc = acc * composites.w[slot].clone();
        }
    }
    Ok(acc)
}

pub fn partition_brute_20v<T>(
    n: usize,
    weights: &Weights20V<T>,
    table: &BoundaryTable20V,
    cap: usize,
) -> Result<T, TwentyvError>
where
    T: Clone + Zero + One + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    let composites = composite_weights(weights);
    let mut terms = Vec::new();
    for_each_dwbc_20v(n, table, cap, |cfg| {
        terms.push(weight_20v(cfg, &composites).expect("enumerated configs are ice-valid"));
    })?;
    Ok(pairwise_sum(terms))
}

/// The region event: all horizontal arrows between vertical lines `r` and
/// `r+1` point east, and all diagonal arrows crossing the horizontal gap
/// between lines `s` and `s+1` point NE ("out of the page" convention).
/// Lines are 1-based; `r = 0` or `r = n` (and likewise `s`) denote the empty
/// edge set and the event holds vacuously.
pub fn efp_region_20v(
    config: &Configuration20V,
    r: usize,
    s: usize,
) -> Result<bool, TwentyvError> {
    let n = config.n();
    if r > n || s > n {
        return Err(TwentyvError::RegionOutOfBounds(format!(
            "(r, s) = ({r}, {s}) with n = {n}"
        )));
    }
    if r >= 1 && r < n {
        for row in 0..n {
            if config.h_edges[row][r] != Arrow::Positive {
                return Ok(false);
            }
        }
    }
    if s >= 1 && s < n {
        // diagonal edges crossing between rows s-1 and s (0-based): the SW
        // edges of vertices in row s-1... these are the NE edges of row s
        // vertices; equivalently edges (row s, col) -> (row s-1, col+1).
        for col in 0..n {
            let row = s; // vertex (s, col): its NE edge crosses the gap
            let line = row + col;
            let p = d_pos(n, row, col);
            if config.d_edges[line][p + 1] != Arrow::Positive {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_admissible_stars() {
        let codes = admissible_star_codes();
        assert_eq!(codes.len(), 20);
        for &code in &codes {
            let star = Star20V::from_code(code);
            assert_eq!(star.inward_count(), 3);
            let class = classify_vertex_20v(star).unwrap();
            assert_eq!(codes[class], code);
        }
    }

    #[test]
    fn all_inward_star_is_rejected() {
        let star = Star20V {
            west: Arrow::Positive,
            east: Arrow::Negative,
            south: Arrow::Positive,
            north: Arrow::Negative,
            sw: Arrow::Positive,
            ne: Arrow::Negative,
        };
        assert!(matches!(
            classify_vertex_20v(star),
            Err(TwentyvError::IceRuleViolation { inward: 6, .. })
        ));
        assert!(star_weight_slot(star).is_err());
    }

    #[test]
    fn straight_through_maps_to_w0_and_map_is_total_surjective() {
        let all_through = Star20V {
            west: Arrow::Positive,
            east: Arrow::Positive,
            south: Arrow::Positive,
            north: Arrow::Positive,
            sw: Arrow::Positive,
            ne: Arrow::Positive,
        };
        assert_eq!(star_weight_slot(all_through).unwrap(), 0);
        let mut seen = [0usize; 7];
        for &code in &admissible_star_codes() {
            let slot = star_weight_slot(Star20V::from_code(code)).unwrap();
            seen[slot] += 1;
        }
        assert_eq!(seen, [2, 2, 4, 2, 4, 2, 4]);
    }

    #[test]
    fn reversal_fixes_slots_except_the_doubled_pair() {
        for &code in &admissible_star_codes() {
            let star = Star20V::from_code(code);
            let reversed = Star20V {
                west: star.west.flip(),
                east: star.east.flip(),
                south: star.south.flip(),
                north: star.north.flip(),
                sw: star.sw.flip(),
                ne: star.ne.flip(),
            };
            let a = star_weight_slot(star).unwrap();
            let b = star_weight_slot(reversed).unwrap();
            match a {
                3 => assert_eq!(b, 5),
                5 => assert_eq!(b, 3),
                _ => assert_eq!(a, b),
            }
        }
    }

    #[test]
    fn default_table_counts_match_transfer_oracle() {
        let t = BoundaryTable20V::dwbc_default();
        let expect = [1u64, 3, 29];
        for (i, &want) in expect.iter().enumerate() {
            let n = i + 1;
            let mut count = 0u64;
            for_each_dwbc_20v(n, &t, DEFAULT_CAP_20V, |_| count += 1).unwrap();
            assert_eq!(count, want, "n = {n}");
            assert_eq!(count_dwbc_20v_transfer(n, &t), want, "transfer, n = {n}");
        }
    }

    #[test]
    fn unit_weight_partition_values() {
        let t = BoundaryTable20V::dwbc_default();
        let w = Weights20V::unit();
        let z: Vec<f64> = (1..=3)
            .map(|n| partition_brute_20v(n, &w, &t, DEFAULT_CAP_20V).unwrap())
            .collect();
        assert_eq!(z, vec![1.0, 4.0, 60.0]);
    }

    #[test]
    fn every_enumerated_vertex_classifies() {
        let t = BoundaryTable20V::dwbc_default();
        for_each_dwbc_20v(2, &t, DEFAULT_CAP_20V, |cfg| {
            for r in 0..2 {
                for c in 0..2 {
                    cfg.class_at(r, c).unwrap();
                }
            }
        })
        .unwrap();
    }

    #[test]
    fn cap_is_enforced_20v() {
        let t = BoundaryTable20V::dwbc_default();
        assert!(matches!(
            enumerate_dwbc_20v(4, &t, DEFAULT_CAP_20V),
            Err(TwentyvError::CapExceeded { .. })
        ));
    }

    #[test]
    fn partition_scaling_is_cubic_in_the_nine_weights() {
        let t = BoundaryTable20V::dwbc_default();
        let base = Weights20V {
            a1: 0.9, a2: 1.1, a3: 0.8,
            b1: 1.3, b2: 0.7, b3: 1.2,
            c1: 0.6, c2: 1.4, c3: 1.0,
        };
        let kappa = 1.7f64;
        let mut scaled = base.clone();
        for f in [
            &mut scaled.a1, &mut scaled.a2, &mut scaled.a3,
            &mut scaled.b1, &mut scaled.b2, &mut scaled.b3,
            &mut scaled.c1, &mut scaled.c2, &mut scaled.c3,
        ] {
            *f *= kappa;
        }
        let n = 2;
        let z = partition_brute_20v(n, &base, &t, DEFAULT_CAP_20V).unwrap();
        let zs = partition_brute_20v(n, &scaled, &t, DEFAULT_CAP_20V).unwrap();
        let expect = kappa.powi(3 * (n * n) as i32);
        assert!((zs / z - expect).abs() < 1e-10 * expect);
    }

    #[test]
    fn c_zero_partition_counts_surviving_slots() {
        let t = BoundaryTable20V::dwbc_default();
        let mut w = Weights20V::unit();
        w.c1 = 0.0;
        w.c2 = 0.0;
        w.c3 = 0.0;
        let z = partition_brute_20v(2, &w, &t, DEFAULT_CAP_20V).unwrap();
        // independent path: filter enumeration by zero-weight classes
        let composites = composite_weights(&w);
        let mut expect = 0.0;
        for_each_dwbc_20v(2, &t, DEFAULT_CAP_20V, |cfg| {
            expect += weight_20v(cfg, &composites).unwrap();
        })
        .unwrap();
        assert_eq!(z, expect);
    }

    #[test]
    fn wire_round_trip_20v() {
        let t = BoundaryTable20V::dwbc_default();
        for cfg in enumerate_dwbc_20v(2, &t, DEFAULT_CAP_20V).unwrap() {
            let wire = Configuration20VWire::from(&cfg);
            let json = serde_json::to_string(&wire).unwrap();
            let back: Configuration20VWire = serde_json::from_str(&json).unwrap();
            let cfg2 = Configuration20V::try_from(back).unwrap();
            assert_eq!(cfg, cfg2);
        }
    }

    #[test]
    fn efp_region_event_semantics() {
        let t = BoundaryTable20V::dwbc_default();
        let cfgs = enumerate_dwbc_20v(2, &t, DEFAULT_CAP_20V).unwrap();
        for cfg in &cfgs {
            // degenerate regions hold vacuously
            assert!(efp_region_20v(cfg, 0, 0).unwrap());
            // conjunction of per-edge indicators
            let direct = (0..2).all(|row| cfg.h_edge(row, 1) == Arrow::Positive)
                && (0..2).all(|col| {
                    let line = 1 + col;
                    let p = d_pos(2, 1, col);
                    cfg.d_edge(line, p + 1) == Arrow::Positive
                });
            assert_eq!(efp_region_20v(cfg, 1, 1).unwrap(), direct);
        }
        let frac = cfgs
            .iter()
            .filter(|c| efp_region_20v(c, 1, 1).unwrap())
            .count() as f64
            / cfgs.len() as f64;
        assert!((0.0..=1.0).contains(&frac));
        assert!(matches!(
            efp_region_20v(&cfgs[0], 5, 0),
            Err(TwentyvError::RegionOutOfBounds(_))
        ));
    }

    #[test]
    fn composite_weight_values() {
        let w = composite_weights(&Weights20V::uniform(1.0f64));
        assert_eq!(w.w, [1.0, 1.0, 1.0, 2.0, 1.0, 1.0, 1.0]);
        let mut zeroed_c = Weights20V::uniform(1.0f64);
        zeroed_c.c1 = 0.0;
        zeroed_c.c2 = 0.0;
        zeroed_c.c3 = 0.0;
        let w = composite_weights(&zeroed_c);
        assert_eq!(w.w[3], 1.0); // a1 b2 b3
        assert_eq!(w.w[2], 0.0);
        assert_eq!(w.w[4], 0.0);
    }

    #[test]
    fn composite_weights_are_degree_three() {
        use crate::rational::Rat;
        let kappa = Rat::new(7.into(), 3.into());
        let base = Weights20V {
            a1: Rat::new(1.into(), 2.into()),
            a2: Rat::new(2.into(), 3.into()),
            a3: Rat::new(5.into(), 7.into()),
            b1: Rat::new(3.into(), 4.into()),
            b2: Rat::new(1.into(), 5.into()),
            b3: Rat::new(4.into(), 3.into()),
            c1: Rat::new(6.into(), 5.into()),
            c2: Rat::new(2.into(), 7.into()),
            c3: Rat::new(8.into(), 9.into()),
        };
        let mut scaled = base.clone();
        for f in [
            &mut scaled.a1, &mut scaled.a2, &mut scaled.a3,
            &mut scaled.b1, &mut scaled.b2, &mut scaled.b3,
            &mut scaled.c1, &mut scaled.c2, &mut scaled.c3,
        ] {
            *f *= kappa.clone();
        }
        let w = composite_weights(&base);
        let ws = composite_weights(&scaled);
        let k3 = &kappa * &kappa * &kappa;
        for i in 0..7 {
            assert_eq!(ws.w[i], &w.w[i] * &k3);
        }
    }

    #[test]
    fn triangular_basis_invariants() {
        let b = TriangularBasis::default();
        let norm = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let dot = |x: [f64; 3], y: [f64; 3]| x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
        assert!((norm(b.up) - 1.0).abs() < 1e-15);
        assert!((norm(b.right) - 1.0).abs() < 1e-15);
        assert!((norm(b.down) - 1.0).abs() < 1e-15);
        assert!(dot(b.up, b.down).abs() < 1e-15);
        assert!(dot(b.right, b.down).abs() < 1e-15);
    }
}
