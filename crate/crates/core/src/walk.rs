//! Walks as alternating vertex/edge sequences, the five walk kinds, and
//! canonical forms used to identify a walk with its reversal.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::graph::{EdgeId, MultiGraph, VertexId};

/// Alternating sequence `v0, e1, v1, ..., el, vl` with `l >= 0`.
///
/// A walk owns its id sequences only; incidence against a host graph is
/// checked by [`Walk::validate_in`] and by the classifying predicates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Walk {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::TooShort { need: 1, got: 0 });
        }
        if vertices.len() != edges.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "walk needs one more vertex than edges, got {} vertices and {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        Ok(Walk { vertices, edges })
    }

    pub fn single(v: VertexId) -> Self {
        Walk {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Walk { vertices, edges }
    }

    /// Subwalk spanning vertex positions `from ..= to`.
    pub fn window(&self, from: usize, to: usize) -> Walk {
        Walk {
            vertices: self.vertices[from..=to].to_vec(),
            edges: self.edges[from..to].to_vec(),
        }
    }

    /// Extends by one step at the back; the caller vouches for incidence.
    pub fn push_back(&mut self, e: EdgeId, v: VertexId) {
        self.edges.push(e);
        self.vertices.push(v);
    }

    /// Extends by one step at the front.
    pub fn push_front(&mut self, v: VertexId, e: EdgeId) {
        self.edges.insert(0, e);
        self.vertices.insert(0, v);
    }

    pub fn pop_back(&mut self) {
        if !self.edges.is_empty() {
            self.edges.pop();
            self.vertices.pop();
        }
    }

    /// True when the walk returns to its start; length 0 never counts.
    pub fn is_closed(&self) -> bool {
        self.len() >= 1 && self.first() == self.last()
    }

    /// Checks that every edge joins its two surrounding vertices in `g`.
    pub fn validate_in(&self, g: &MultiGraph) -> Result<(), Error> {
        for &v in &self.vertices {
            if !g.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        for (i, &e) in self.edges.iter().enumerate() {
            let (a, b) = g.endpoints(e)?;
            let (u, v) = (self.vertices[i], self.vertices[i + 1]);
            let ok = (a, b) == if u <= v { (u, v) } else { (v, u) };
            if !ok {
                return Err(Error::Incidence {
                    index: i,
                    edge: e,
                    from: u,
                    to: v,
                });
            }
        }
        Ok(())
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    /// How many walk edges join the unordered pair `{u, v}` (loops when equal).
    pub fn pair_multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                let (a, b) = (self.vertices[i], self.vertices[i + 1]);
                (if a <= b { (a, b) } else { (b, a) }) == key
            })
            .count()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (i, e) in self.edges.iter().enumerate() {
            write!(f, " -{}- {}", e, self.vertices[i + 1])?;
        }
        Ok(())
    }
}

/// The five walk types, ordered from least to most restrictive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WalkKind {
    /// Any walk.
    Walk,
    /// All edges distinct.
    Trail,
    /// All vertices distinct (closed variant: distinct except the endpoints,
    /// with distinct edges).
    Path,
    /// Path whose subgraph equals the induced subgraph on its vertices.
    Induced,
    /// Induced path whose subgraph preserves all host distances.
    Isometric,
}

impl WalkKind {
    pub const ALL: [WalkKind; 5] = [
        WalkKind::Walk,
        WalkKind::Trail,
        WalkKind::Path,
        WalkKind::Induced,
        WalkKind::Isometric,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            WalkKind::Walk => "wlk",
            WalkKind::Trail => "trl",
            WalkKind::Path => "pth",
            WalkKind::Induced => "ind",
            WalkKind::Isometric => "iso",
        }
    }

    pub fn from_tag(tag: &str) -> Option<WalkKind> {
        WalkKind::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Does `w` qualify as a `kind` walk in `g`?
///
/// Closed walks use cycle semantics: a closed path has distinct edges and
/// distinct vertices except for the repeated endpoint, so a single loop is a
/// 1-cycle and a parallel pair is a 2-cycle. A closed induced walk must have
/// its subgraph equal to the subgraph induced on its vertices, counting edge
/// multiplicities.
pub fn classify(g: &MultiGraph, w: &Walk, kind: WalkKind) -> Result<bool, Error> {
    w.validate_in(g)?;
    Ok(match kind {
        WalkKind::Walk => true,
        WalkKind::Trail => edges_distinct(w),
        WalkKind::Path => is_path(w),
        WalkKind::Induced => is_induced(g, w),
        WalkKind::Isometric => {
            is_induced(g, w) && g.is_isometric_subgraph(&w.vertex_set(), &w.edge_set())?
        }
    })
}

fn edges_distinct(w: &Walk) -> bool {
    let set: BTreeSet<EdgeId> = w.edges.iter().copied().collect();
    set.len() == w.edges.len()
}

fn is_path(w: &Walk) -> bool {
    if w.is_closed() {
        let inner = &w.vertices[..w.vertices.len() - 1];
        let set: BTreeSet<VertexId> = inner.iter().copied().collect();
        set.len() == inner.len() && edges_distinct(w)
    } else {
        let set: BTreeSet<VertexId> = w.vertices.iter().copied().collect();
        set.len() == w.vertices.len()
    }
}

fn is_induced(g: &MultiGraph, w: &Walk) -> bool {
    if !is_path(w) {
        return false;
    }
    // The walk's subgraph must match the induced subgraph on its vertices:
    // for every vertex pair (including loops) the number of walk edges
    // equals the host multiplicity.
    let vs: Vec<VertexId> = w.vertex_set().into_iter().collect();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i..] {
            if w.pair_multiplicity(a, b) != g.multiplicity(a, b) {
                return false;
            }
        }
    }
    true
}

/// A walk identified with its reversal. Comparison is lexicographic on the
/// vertex sequence, edges breaking ties.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalWalk(Walk);

impl CanonicalWalk {
    /// Canonical form under reversal. Rotations of closed walks are kept
    /// distinct here: a closed trail and its rotation can have different
    /// extensions, so predicates may not identify them.
    pub fn of(w: &Walk) -> CanonicalWalk {
        CanonicalWalk(min_by_seq(vec![w.clone(), w.reversed()]))
    }

    /// Canonical form under reversal and, for closed walks, rotation. Used
    /// only to deduplicate enumeration output and cycle sets.
    pub fn of_cyclic(w: &Walk) -> CanonicalWalk {
        if !w.is_closed() {
            return CanonicalWalk::of(w);
        }
        let mut candidates = Vec::new();
        for base in [w.clone(), w.reversed()] {
            let n = base.len();
            for s in 0..n {
                let mut vertices = Vec::with_capacity(n + 1);
                let mut edges = Vec::with_capacity(n);
                for i in 0..n {
                    let j = (s + i) % n;
                    vertices.push(base.vertices[j]);
                    edges.push(base.edges[j]);
                }
                vertices.push(base.vertices[s]);
                candidates.push(Walk { vertices, edges });
            }
        }
        CanonicalWalk(min_by_seq(candidates))
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn into_walk(self) -> Walk {
        self.0
    }
}

fn min_by_seq(candidates: Vec<Walk>) -> Walk {
    candidates
        .into_iter()
        .min_by(|a, b| {
            a.vertices
                .cmp(&b.vertices)
                .then_with(|| a.edges.cmp(&b.edges))
        })
        .unwrap()
}

/// All `kind` walks in `g` with exactly `len` edges, one representative per
/// canonical class, in sorted order.
///
/// With `closed = true` only closed walks are produced. With `closed =
/// false` every walk of the kind is produced, including those that happen
/// to be closed.
pub fn enumerate_walks(
    g: &MultiGraph,
    kind: WalkKind,
    len: usize,
    closed: bool,
) -> Result<Vec<Walk>, Error> {
    let mut out: BTreeSet<CanonicalWalk> = BTreeSet::new();
    if !closed {
        let metric = if matches!(kind, WalkKind::Isometric) {
            Some(all_pairs(g)?)
        } else {
            None
        };
        for start in g.vertices() {
            let mut w = Walk::single(start);
            extend_open(g, kind, len, metric.as_ref(), &mut w, &mut out)?;
        }
    }
    if len >= 1 {
        enumerate_closed_into(g, kind, len, &mut out)?;
    }
    Ok(out.into_iter().map(CanonicalWalk::into_walk).collect())
}

fn enumerate_closed_into(
    g: &MultiGraph,
    kind: WalkKind,
    len: usize,
    out: &mut BTreeSet<CanonicalWalk>,
) -> Result<(), Error> {
    if matches!(kind, WalkKind::Isometric) {
        // Sub-arcs of an isometric cycle longer than half the cycle are not
        // isometric subgraphs themselves, so plain prefix pruning would
        // discard valid cycles; the dedicated search handles them.
        let mut budget = crate::avoid::Budget::search_default();
        for c in crate::avoid::isometric_cycles(g, &mut budget)? {
            if c.len() == len {
                out.insert(CanonicalWalk::of_cyclic(&c));
            }
        }
        return Ok(());
    }
    for start in g.vertices() {
        let mut w = Walk::single(start);
        extend_closed(g, kind, len, &mut w, out)?;
    }
    Ok(())
}

type Distances = std::collections::BTreeMap<VertexId, std::collections::BTreeMap<VertexId, usize>>;

fn all_pairs(g: &MultiGraph) -> Result<Distances, Error> {
    g.vertices().map(|v| Ok((v, g.bfs_distances(v)?))).collect()
}

/// Open enumeration: prefix pruning keeps only extendable prefixes, so every
/// completed sequence is already a valid open `kind` walk.
fn extend_open(
    g: &MultiGraph,
    kind: WalkKind,
    len: usize,
    metric: Option<&Distances>,
    w: &mut Walk,
    out: &mut BTreeSet<CanonicalWalk>,
) -> Result<(), Error> {
    if w.len() == len {
        if !w.is_closed() {
            out.insert(CanonicalWalk::of(w));
        }
        return Ok(());
    }
    let at = w.last();
    for &e in g.incident_edges(at)? {
        let next = g.other_endpoint(e, at)?;
        let ok = match kind {
            WalkKind::Walk => true,
            WalkKind::Trail => !w.edges.contains(&e),
            WalkKind::Path => !w.vertices.contains(&next),
            WalkKind::Induced | WalkKind::Isometric => {
                induced_open_step_ok(g, w, next)
                    && match (kind, metric) {
                        (WalkKind::Isometric, Some(m)) => {
                            // Sub-paths of an isometric path are isometric.
                            w.vertices.iter().enumerate().all(|(i, &v)| {
                                m[&v].get(&next) == Some(&(w.len() + 1 - i))
                            })
                        }
                        _ => true,
                    }
            }
        };
        if ok {
            w.push_back(e, next);
            extend_open(g, kind, len, metric, w, out)?;
            w.pop_back();
        }
    }
    Ok(())
}

fn induced_open_step_ok(g: &MultiGraph, w: &Walk, next: VertexId) -> bool {
    if w.vertices.contains(&next) || g.has_loop_at(next) {
        return false;
    }
    if g.multiplicity(w.last(), next) != 1 {
        return false;
    }
    w.vertices[..w.vertices.len() - 1]
        .iter()
        .all(|&v| g.multiplicity(v, next) == 0)
}

/// Closed enumeration for walks, trails, paths, and induced paths. Every
/// completed sequence is validated by `classify`, so pruning only needs to
/// be sound, not exact.
fn extend_closed(
    g: &MultiGraph,
    kind: WalkKind,
    len: usize,
    w: &mut Walk,
    out: &mut BTreeSet<CanonicalWalk>,
) -> Result<(), Error> {
    if w.len() == len {
        if w.is_closed() && classify(g, w, kind)? {
            out.insert(CanonicalWalk::of_cyclic(w));
        }
        return Ok(());
    }
    let at = w.last();
    for &e in g.incident_edges(at)? {
        let next = g.other_endpoint(e, at)?;
        let ok = match kind {
            WalkKind::Walk => true,
            WalkKind::Trail => !w.edges.contains(&e),
            WalkKind::Path | WalkKind::Induced => {
                if w.edges.contains(&e) {
                    false
                } else if w.vertices.contains(&next) && next != w.first() {
                    false
                } else if matches!(kind, WalkKind::Induced) {
                    // Chordless so far; the (first, current) pair may close.
                    w.vertices
                        .iter()
                        .enumerate()
                        .all(|(i, &v)| {
                            i == 0 || i + 1 == w.vertices.len() || g.multiplicity(v, next) == 0
                        })
                } else {
                    true
                }
            }
            WalkKind::Isometric => unreachable!("closed isometric walks use the cycle search"),
        };
        if ok {
            w.push_back(e, next);
            extend_closed(g, kind, len, w, out)?;
            w.pop_back();
        }
    }
    Ok(())
}
