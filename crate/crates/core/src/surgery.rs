//! Segment algebra on oriented cycles and reroutes that splice external
//! paths into a cycle.
//!
//! Every transformation goes through [`assemble`], which concatenates the
//! pieces of a [`SurgeryPlan`] and validates the result against the host
//! graph, so whatever comes back is a checked cycle certificate.

use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// along the orientation
    Forward,
    /// against the orientation
    Backward,
}

/// Number of edges on the path from `u` to `v` following the orientation.
pub fn dist_along(c: &OrientedCycle, u: usize, v: usize) -> Result<usize> {
    let (pu, pv) = (c.position(u)?, c.position(v)?);
    Ok((pv + c.len() - pu) % c.len())
}

/// Vertices of the segment `from →C to` (or `from ←C to`), endpoints
/// included.
pub fn segment(c: &OrientedCycle, from: usize, to: usize, dir: Direction) -> Result<Vec<usize>> {
    let steps = match dir {
        Direction::Forward => dist_along(c, from, to)?,
        Direction::Backward => dist_along(c, to, from)?,
    };
    let sign = if dir == Direction::Forward { 1 } else { -1 };
    (0..=steps as isize)
        .map(|i| c.step(from, sign * i))
        .collect()
}

/// Interior `V(from⁺ →C to⁻)` of the forward segment; empty when `to` is
/// `from` or its successor.
pub fn interior(c: &OrientedCycle, from: usize, to: usize) -> Result<VertexSet> {
    let seg = segment(c, from, to, Direction::Forward)?;
    if seg.len() <= 2 {
        return Ok(VertexSet::EMPTY);
    }
    Ok(seg[1..seg.len() - 1].iter().copied().collect())
}

/// `L_u^+(k)` for `Forward`, `L_u^-(k)` for `Backward`: the `k` vertices
/// following (preceding) `u`, capped at the rest of the cycle.
pub fn l_set(c: &OrientedCycle, u: usize, k: usize, dir: Direction) -> Result<VertexSet> {
    c.position(u)?;
    let k = k.min(c.len() - 1);
    let sign = if dir == Direction::Forward { 1 } else { -1 };
    (1..=k as isize).map(|i| c.step(u, sign * i)).collect()
}

/// Integer width used for a segment of order `t + 2` when `t` is rational:
/// `⌈t + 2⌉`.
pub fn width_for(t: Rational) -> Result<usize> {
    let w = (t + Rational::from_int(2))
        .ceil()
        .ok_or_else(|| Error::InvalidParameter("width of an infinite segment".into()))?;
    usize::try_from(w).map_err(|_| Error::InvalidParameter(format!("negative width {w}")))
}

fn check_chord(g: &Graph, c: &OrientedCycle, (a, b): (usize, usize)) -> Result<()> {
    c.position(a)?;
    c.position(b)?;
    let consecutive = c.successor(a)? == b || c.predecessor(a)? == b;
    if a == b || consecutive || !g.has_edge(a, b) {
        return Err(Error::NotAChord(a, b));
    }
    Ok(())
}

/// Whether chords `ux` and `vy` cross, i.e. `u, x, v, y` appear along the
/// orientation as `u, v, x, y` or `u, y, x, v`.
pub fn is_crossing(
    g: &Graph,
    c: &OrientedCycle,
    (u, x): (usize, usize),
    (v, y): (usize, usize),
) -> Result<bool> {
    check_chord(g, c, (u, x))?;
    check_chord(g, c, (v, y))?;
    for w in [v, y] {
        if w == u || w == x {
            return Err(Error::SharedEndpoint(w));
        }
    }
    let px = dist_along(c, u, x)?;
    let pv = dist_along(c, u, v)?;
    let py = dist_along(c, u, y)?;
    Ok((pv < px && px < py) || (py < px && px < pv))
}

/// One piece of a rerouted cycle. Consecutive pieces, and the last and first
/// piece, are joined by an edge of the host graph; that junction is how a
/// chord gets traversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    /// `from →C to` or `from ←C to` on the plan's base cycle.
    Segment {
        from: usize,
        to: usize,
        dir: Direction,
    },
    /// Explicit walk, typically through vertices off the cycle.
    Path(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SurgeryPlan<'c> {
    pub base: &'c OrientedCycle,
    pub pieces: Vec<Piece>,
}

impl<'c> SurgeryPlan<'c> {
    pub fn new(base: &'c OrientedCycle) -> Self {
        SurgeryPlan {
            base,
            pieces: Vec::new(),
        }
    }

    #[must_use]
    pub fn forward(mut self, from: usize, to: usize) -> Self {
        self.pieces.push(Piece::Segment {
            from,
            to,
            dir: Direction::Forward,
        });
        self
    }

    #[must_use]
    pub fn backward(mut self, from: usize, to: usize) -> Self {
        self.pieces.push(Piece::Segment {
            from,
            to,
            dir: Direction::Backward,
        });
        self
    }

    #[must_use]
    pub fn path(mut self, vertices: &[usize]) -> Self {
        self.pieces.push(Piece::Path(vertices.to_vec()));
        self
    }
}

/// Concatenates the plan and validates it as a cycle of `g`.
pub fn assemble(g: &Graph, plan: &SurgeryPlan<'_>) -> Result<OrientedCycle> {
    let mut seq: Vec<usize> = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for piece in &plan.pieces {
        let part = match piece {
            Piece::Segment { from, to, dir } => segment(plan.base, *from, *to, *dir)?,
            Piece::Path(p) => p.clone(),
        };
        for (i, &v) in part.iter().enumerate() {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: g.order(),
                });
            }
            if let Some(&prev) = if i == 0 { seq.last() } else { part.get(i - 1) } {
                if !g.has_edge(prev, v) {
                    return Err(Error::NonEdgeJunction(prev, v));
                }
            }
            if seen.contains(v) {
                return Err(Error::RepeatedVertex(v));
            }
            seen = seen.with(v);
            seq.push(v);
        }
    }
    match (seq.first(), seq.last()) {
        (Some(&first), Some(&last)) if seq.len() >= 3 => {
            if !g.has_edge(last, first) {
                return Err(Error::InvalidCycle(format!(
                    "plan does not close: {last} and {first} are not adjacent"
                )));
            }
        }
        _ => {
            return Err(Error::InvalidCycle(format!(
                "plan yields {} vertices",
                seq.len()
            )))
        }
    }
    OrientedCycle::new(g, seq)
}

fn check_external_path(g: &Graph, c: &OrientedCycle, p: &[usize]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::InvalidParameter("external path is empty".into()));
    }
    for &w in p {
        if w >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: g.order(),
            });
        }
        if c.contains(w) {
            return Err(Error::PathTouchesCycle(w));
        }
    }
    Ok(())
}

/// `u ←C v · P`: walk backwards from `u` to `v`, then through the external
/// path `p` (first vertex adjacent to `v`, last to `u`) back to `u`. The
/// interior of `u →C v` is dropped.
pub fn reroute_detour(
    g: &Graph,
    c: &OrientedCycle,
    u: usize,
    v: usize,
    p: &[usize],
) -> Result<OrientedCycle> {
    c.position(u)?;
    c.position(v)?;
    if u == v {
        return Err(Error::InvalidParameter("detour endpoints coincide".into()));
    }
    check_external_path(g, c, p)?;
    assemble(g, &SurgeryPlan::new(c).backward(u, v).path(p))
}

/// `u ←C y · x →C v · P` for `u, x, v, y` in this order along `C` and a
/// chord `xy`. The interiors `V(u⁺ →C x⁻)` and `V(v⁺ →C y⁻)` are dropped and
/// the external path `p` runs from a neighbor of `v` to a neighbor of `u`.
pub fn reroute_crossing(
    g: &Graph,
    c: &OrientedCycle,
    u: usize,
    x: usize,
    v: usize,
    y: usize,
    p: &[usize],
) -> Result<OrientedCycle> {
    let px = dist_along(c, u, x)?;
    let pv = dist_along(c, u, v)?;
    let py = dist_along(c, u, y)?;
    if !(0 < px && px < pv && pv < py) {
        return Err(Error::OrderViolated(vec![u, x, v, y]));
    }
    if !g.has_edge(x, y) {
        return Err(Error::NonEdgeJunction(y, x));
    }
    check_external_path(g, c, p)?;
    assemble(g, &SurgeryPlan::new(c).backward(u, y).forward(x, v).path(p))
}
