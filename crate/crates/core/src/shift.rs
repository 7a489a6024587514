//! The shift relation on equal-length walks, a breadth-first reachability
//! oracle, and the constructive procedures that shift a walk to an avoidable
//! one: the recursive scheme for induced paths, the DFS-tree scheme for
//! paths, a line-graph reduction for paths, and window sliding for walks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::avoid::{
    is_avoidable_budgeted, non_closable_extension, oriented_extensions, Budget, Extension, Mode,
};
use crate::error::Error;
use crate::graph::{DfsTree, EdgeId, MultiGraph, VertexId};
use crate::report::VerificationReport;
use crate::walk::{classify, CanonicalWalk, Walk, WalkKind};

/// Instrumentation collected while producing a shift sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShiftStats {
    /// Number of shifts, i.e. steps minus one.
    pub shifts: usize,
    /// Deepest recursion reached by the induced-path procedure.
    pub max_recursion_depth: usize,
    /// Budget units consumed.
    pub budget_used: u64,
}

/// A nonempty sequence of equal-length walks of one kind in a fixed host
/// graph, each consecutive pair related by a shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSequence {
    pub kind: WalkKind,
    steps: Vec<Walk>,
    pub stats: ShiftStats,
}

impl ShiftSequence {
    pub fn new(kind: WalkKind, first: Walk) -> Self {
        ShiftSequence {
            kind,
            steps: vec![first],
            stats: ShiftStats::default(),
        }
    }

    pub fn from_steps(kind: WalkKind, steps: Vec<Walk>) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::InvalidParameter(
                "a shift sequence needs at least one step".into(),
            ));
        }
        let mut s = ShiftSequence::new(kind, steps[0].clone());
        s.steps = steps;
        s.stats.shifts = s.steps.len() - 1;
        Ok(s)
    }

    pub fn steps(&self) -> &[Walk] {
        &self.steps
    }

    pub fn first(&self) -> &Walk {
        &self.steps[0]
    }

    pub fn last(&self) -> &Walk {
        self.steps.last().unwrap()
    }

    pub fn shift_count(&self) -> usize {
        self.steps.len() - 1
    }

    fn push(&mut self, w: Walk, budget: &mut Budget) -> Result<(), Error> {
        budget.charge(1, "shift steps")?;
        self.steps.push(w);
        Ok(())
    }

    fn extend_steps(&mut self, tail: Vec<Walk>, budget: &mut Budget) -> Result<(), Error> {
        for w in tail {
            self.push(w, budget)?;
        }
        Ok(())
    }

    fn finish(&mut self, budget: &Budget, depth: usize) {
        self.stats.shifts = self.steps.len() - 1;
        self.stats.budget_used = budget.used();
        self.stats.max_recursion_depth = depth;
    }
}

/// Are `a` and `b` shifts of each other: is their union a `kind` walk one
/// longer than both? Orientation-free.
pub fn is_shift_pair(g: &MultiGraph, a: &Walk, b: &Walk, kind: WalkKind) -> Result<bool, Error> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let ell = a.len();
    if ell == 0 {
        for &e in g.incident_edges(a.first())? {
            if g.other_endpoint(e, a.first())? == b.first() {
                let u = Walk::new(vec![a.first(), b.first()], vec![e])?;
                if classify(g, &u, kind)? {
                    return Ok(true);
                }
            }
        }
        return Ok(false);
    }
    for a2 in [a.clone(), a.reversed()] {
        for b2 in [b.clone(), b.reversed()] {
            if a2.vertices()[1..] == b2.vertices()[..ell]
                && a2.edges()[1..] == b2.edges()[..ell - 1]
            {
                let mut union = a2.clone();
                union.push_back(b2.edges()[ell - 1], b2.vertices()[ell]);
                if classify(g, &union, kind)? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Every walk obtainable from `w` by one shift, canonicalized and
/// deduplicated, excluding `w` itself.
pub fn shifts_of(g: &MultiGraph, w: &Walk, kind: WalkKind) -> Result<Vec<Walk>, Error> {
    if !classify(g, w, kind)? {
        return Err(Error::NotOfKind(kind));
    }
    let me = CanonicalWalk::of(w);
    let mut out: BTreeSet<CanonicalWalk> = BTreeSet::new();
    // Extend at the back, drop the front; then the mirror image.
    for oriented in [w.clone(), w.reversed()] {
        for &e in g.incident_edges(oriented.last())? {
            let next = g.other_endpoint(e, oriented.last())?;
            let mut union = oriented.clone();
            union.push_back(e, next);
            if !classify(g, &union, kind)? {
                continue;
            }
            let candidate = union.window(1, union.vertices().len() - 1);
            if !classify(g, &candidate, kind)? {
                continue;
            }
            let c = CanonicalWalk::of(&candidate);
            if c != me {
                out.insert(c);
            }
        }
    }
    Ok(out.into_iter().map(CanonicalWalk::into_walk).collect())
}

/// Breadth-first search over the shift class of `from`, returning a
/// shortest sequence to a walk satisfying `target`, or `None` when the
/// class holds no such walk.
pub fn shift_reachable<F>(
    g: &MultiGraph,
    from: &Walk,
    kind: WalkKind,
    mut target: F,
) -> Result<Option<ShiftSequence>, Error>
where
    F: FnMut(&Walk) -> Result<bool, Error>,
{
    if !classify(g, from, kind)? {
        return Err(Error::NotOfKind(kind));
    }
    let start = CanonicalWalk::of(from);
    let mut parent: BTreeMap<CanonicalWalk, CanonicalWalk> = BTreeMap::new();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut goal: Option<CanonicalWalk> = None;
    if target(start.walk())? {
        goal = Some(start);
    }
    while goal.is_none() {
        let Some(cur) = queue.pop_front() else {
            break;
        };
        for next in shifts_of(g, cur.walk(), kind)? {
            let c = CanonicalWalk::of(&next);
            if !seen.insert(c.clone()) {
                continue;
            }
            parent.insert(c.clone(), cur.clone());
            if target(c.walk())? {
                goal = Some(c);
                break;
            }
            queue.push_back(c);
        }
    }
    let Some(goal) = goal else {
        return Ok(None);
    };
    let mut chain = vec![goal.walk().clone()];
    let mut cur = goal;
    while let Some(p) = parent.get(&cur) {
        chain.push(p.walk().clone());
        cur = p.clone();
    }
    chain.reverse();
    let mut seq = ShiftSequence::from_steps(kind, chain)?;
    seq.stats.budget_used = 0;
    Ok(Some(seq))
}

/// Slides a window of `width` edges along a host walk: the classic way to
/// shift one walk to another through their concatenation.
pub fn walk_shifting(g: &MultiGraph, from: &Walk, to: &Walk) -> Result<ShiftSequence, Error> {
    from.validate_in(g)?;
    to.validate_in(g)?;
    if from.len() != to.len() {
        return Err(Error::InvalidParameter(format!(
            "walks must have equal length, got {} and {}",
            from.len(),
            to.len()
        )));
    }
    if CanonicalWalk::of(from) == CanonicalWalk::of(to) {
        return ShiftSequence::from_steps(WalkKind::Walk, vec![from.clone()]);
    }
    let connector = g
        .shortest_path(from.last(), to.first())?
        .ok_or(Error::DifferentComponents)?;
    let mut host = from.clone();
    for i in 0..connector.len() {
        host.push_back(connector.edges()[i], connector.vertices()[i + 1]);
    }
    for i in 0..to.len() {
        host.push_back(to.edges()[i], to.vertices()[i + 1]);
    }
    let width = from.len();
    let mut steps = Vec::new();
    for s in 0..=(host.len() - width) {
        steps.push(host.window(s, s + width));
    }
    ShiftSequence::from_steps(WalkKind::Walk, steps)
}

/// Checks every structural invariant of a shift sequence and, on request,
/// that the final step is avoidable (oracle closability). Violations are
/// reported, not raised.
pub fn verify_shift_sequence(
    g: &MultiGraph,
    s: &ShiftSequence,
    require_avoidable_end: bool,
) -> VerificationReport {
    let claim = "shift-sequence";
    let instance = format!("{} steps of kind {}", s.steps().len(), s.kind);
    let len = s.first().len();
    for (i, w) in s.steps().iter().enumerate() {
        if w.len() != len {
            return VerificationReport::fail(
                claim,
                &instance,
                format!("step {i} has length {} instead of {len}", w.len()),
                vec![w.to_string()],
            );
        }
        match classify(g, w, s.kind) {
            Ok(true) => {}
            Ok(false) => {
                return VerificationReport::fail(
                    claim,
                    &instance,
                    format!("step {i} is not a {} walk", s.kind),
                    vec![w.to_string()],
                );
            }
            Err(e) => {
                return VerificationReport::fail(
                    claim,
                    &instance,
                    format!("step {i} is invalid: {e}"),
                    vec![w.to_string()],
                );
            }
        }
    }
    for i in 1..s.steps().len() {
        match is_shift_pair(g, &s.steps()[i - 1], &s.steps()[i], s.kind) {
            Ok(true) => {}
            Ok(false) => {
                return VerificationReport::fail(
                    claim,
                    &instance,
                    format!("steps {} and {} are not shifts of each other", i - 1, i),
                    vec![s.steps()[i - 1].to_string(), s.steps()[i].to_string()],
                );
            }
            Err(e) => {
                return VerificationReport::fail(
                    claim,
                    &instance,
                    format!("shift check failed at step {i}: {e}"),
                    vec![s.steps()[i].to_string()],
                );
            }
        }
    }
    if require_avoidable_end {
        let mut budget = Budget::search_default();
        match is_avoidable_budgeted(g, s.last(), s.kind, Mode::Oracle, &mut budget) {
            Ok(true) => {}
            Ok(false) => {
                return VerificationReport::fail(
                    claim,
                    &instance,
                    "final step is not avoidable".to_string(),
                    vec![s.last().to_string()],
                );
            }
            Err(e) => {
                return VerificationReport::fail(
                    claim,
                    &instance,
                    format!("avoidability check failed: {e}"),
                    vec![s.last().to_string()],
                );
            }
        }
    }
    VerificationReport::pass(claim, &instance, "all steps valid")
}

fn pick_extension(exts: Vec<Extension>) -> Option<Extension> {
    exts.into_iter()
        .min_by_key(|e| (e.prefix.0, e.suffix.1, e.prefix.1, e.suffix.0))
}

/// Shifts an induced path to one that is avoidable: if the path has an
/// extension, reverse it and hand it to the refinement recursion; a path
/// with no extension is already avoidable.
pub fn shifting_induced(g: &MultiGraph, p: &Walk) -> Result<ShiftSequence, Error> {
    shifting_induced_budgeted(g, p, &mut Budget::steps_default())
}

pub fn shifting_induced_budgeted(
    g: &MultiGraph,
    p: &Walk,
    budget: &mut Budget,
) -> Result<ShiftSequence, Error> {
    if !classify(g, p, WalkKind::Induced)? || p.is_closed() {
        return Err(Error::NotInduced);
    }
    let mut seq = ShiftSequence::new(WalkKind::Induced, p.clone());
    let mut depth = 0usize;
    if let Some(ext) = pick_extension(oriented_extensions(g, p, WalkKind::Induced)?) {
        let reversed = ext.extended.reversed();
        let tail = refined_rec(g, &reversed, budget, 1, &mut depth)?;
        seq.extend_steps(tail, budget)?;
    }
    seq.finish(budget, depth);
    Ok(seq)
}

/// The refinement recursion on an induced path `p1 .. p_{k+2}` with
/// `k >= 1`: produces a sequence of induced paths inside the graph with
/// `N[p_{k+2}]` deleted, shifting `p1 .. pk` to a path avoidable in `g`.
pub fn refined_shifting(g: &MultiGraph, p: &Walk) -> Result<ShiftSequence, Error> {
    refined_shifting_budgeted(g, p, &mut Budget::steps_default())
}

pub fn refined_shifting_budgeted(
    g: &MultiGraph,
    p: &Walk,
    budget: &mut Budget,
) -> Result<ShiftSequence, Error> {
    let mut depth = 0usize;
    let steps = refined_rec(g, p, budget, 1, &mut depth)?;
    let mut seq = ShiftSequence::from_steps(WalkKind::Induced, steps)?;
    seq.finish(budget, depth);
    Ok(seq)
}

fn refined_rec(
    g: &MultiGraph,
    p: &Walk,
    budget: &mut Budget,
    depth: usize,
    max_depth: &mut usize,
) -> Result<Vec<Walk>, Error> {
    *max_depth = (*max_depth).max(depth);
    if p.vertices().len() < 3 {
        return Err(Error::TooShort {
            need: 3,
            got: p.vertices().len(),
        });
    }
    if !classify(g, p, WalkKind::Induced)? || p.is_closed() {
        return Err(Error::NotInduced);
    }
    let n = p.vertices().len();
    let hidden = p.vertices()[n - 1]; // p_{k+2}
    let prefix = p.window(0, n - 3); // p1 .. pk

    budget.charge(1, "induced shifting")?;
    let mut steps = vec![prefix.clone()];

    // Shift the prefix inside the graph with N[p_{k+2}] removed.
    let reduced = g.delete_closed_neighborhood(&BTreeSet::from([hidden]))?;
    if let Some(ext) = pick_extension(oriented_extensions(&reduced, &prefix, WalkKind::Induced)?) {
        let sub = refined_rec(&reduced, &ext.extended, budget, depth + 1, max_depth)?;
        budget.charge(sub.len() as u64, "induced shifting")?;
        steps.extend(sub);
    }

    // The end path may still have an extension in g touching N(p_{k+2}) on
    // exactly one side; contract that side away and recurse.
    let end = steps.last().unwrap().clone();
    let hidden_nbrs = g.neighbors(hidden)?;
    let mut candidates: Vec<(VertexId, VertexId, EdgeId, EdgeId, Walk)> = Vec::new();
    for ext in oriented_extensions(g, &end, WalkKind::Induced)? {
        let (pv, pe) = ext.prefix;
        let (se, sv) = ext.suffix;
        match (hidden_nbrs.contains(&pv), hidden_nbrs.contains(&sv)) {
            // Orient the end path so the neighbor side comes last.
            (false, true) => candidates.push((pv, sv, pe, se, end.clone())),
            (true, false) => candidates.push((sv, pv, se, pe, end.reversed())),
            _ => {}
        }
    }
    candidates.sort_by_key(|&(x, y, ex, ey, _)| (x, y, ex, ey));
    let Some((x, y, ex, ey, oriented_end)) = candidates.into_iter().next() else {
        return Ok(steps);
    };

    let contract_edge = g.edges_between(hidden, y)[0];
    let merged = g.next_vertex_id();
    let contracted = g.contract_edge(contract_edge, merged)?;

    let mut arg = oriented_end.clone();
    arg.push_front(x, ex);
    arg.push_back(ey, merged);
    let sub = refined_rec(&contracted, &arg, budget, depth + 1, max_depth)?;
    budget.charge(sub.len() as u64, "induced shifting")?;
    steps.extend(sub);
    Ok(steps)
}

fn walk_along_tree(tree: &DfsTree, start: &Walk, descent: &[VertexId]) -> Walk {
    let mut host = start.clone();
    for &v in descent {
        let (_, e) = tree.parent(v).expect("descent vertices have parents");
        host.push_back(e, v);
    }
    host
}

fn slide_append(
    seq: &mut ShiftSequence,
    host: &Walk,
    width: usize,
    budget: &mut Budget,
) -> Result<Walk, Error> {
    debug_assert_eq!(
        CanonicalWalk::of(&host.window(0, width)),
        CanonicalWalk::of(seq.last())
    );
    for s in 1..=(host.len() - width) {
        seq.push(host.window(s, s + width), budget)?;
    }
    Ok(host.window(host.len() - width, host.len()))
}

/// Depth-first-tree path shifting.
///
/// Builds a DFS tree seeded with the path, slides the path to the bottom of
/// the deepest branch through it, migrates into deeper branches while the
/// window can retract past the fork, and finally, on a non-closable
/// extension, slides into the offending descendant branch, which pins the
/// window to a simplicial position. Configurations the single tree cannot
/// finish (a deep branch forking too close to the root) restart on a fresh
/// tree seeded at the reversed window.
pub fn path_shifting_dfs(g: &MultiGraph, p: &Walk) -> Result<ShiftSequence, Error> {
    if !classify(g, p, WalkKind::Path)? || p.is_closed() {
        return Err(Error::NotAPath);
    }
    let ell = p.len();
    let mut budget = Budget::steps_default();
    let mut seq = ShiftSequence::new(WalkKind::Path, p.clone());
    let mut current = p.clone();
    let restart_cap = 2 * g.vertex_count() + 8;
    for _round in 0..restart_cap {
        let tree = g.dfs_tree(&current)?;

        // Slide to the bottom of the deepest root-to-leaf branch through
        // the current window.
        let descent = tree.deepest_path_from(current.last());
        let host = walk_along_tree(&tree, &current, &descent[1..]);
        let mut w = slide_append(&mut seq, &host, ell, &mut budget)?;

        // Migrate towards deeper branches while the window can retract far
        // enough to re-enter them.
        loop {
            let top = w.first();
            let height = tree.subtree_height(top);
            debug_assert!(height >= ell);
            if height <= ell {
                break;
            }
            let deepest = tree.deepest_path_from(top);
            let mut fork = 0usize;
            while fork + 1 < w.vertices().len()
                && fork + 1 < deepest.len()
                && deepest[fork + 1] == w.vertices()[fork + 1]
            {
                fork += 1;
            }
            let fork_depth = tree.depth(deepest[fork]).expect("fork in tree");
            if fork_depth < ell {
                break; // not enough room above the fork to turn around
            }
            for _ in 0..(ell - fork) {
                let (parent, pe) = tree.parent(w.first()).expect("room checked");
                let mut up = w.clone();
                up.pop_back();
                up.push_front(parent, pe);
                seq.push(up.clone(), &mut budget)?;
                w = up;
            }
            let host = walk_along_tree(&tree, &w, &deepest[fork + 1..]);
            w = slide_append(&mut seq, &host, ell, &mut budget)?;
        }

        // End game: no extension means simplicial, all extensions closable
        // means avoidable; otherwise follow a non-closable extension into
        // the descendant branch it exposes.
        let exts = oriented_extensions(g, &w, WalkKind::Path)?;
        if exts.is_empty() {
            seq.finish(&budget, 0);
            return Ok(seq);
        }
        let mut bad = Vec::new();
        for ext in exts {
            if !crate::avoid::is_closable_budgeted(
                g,
                &ext.extended,
                WalkKind::Path,
                Mode::Fast,
                &mut budget,
            )? {
                bad.push(ext);
            }
        }
        if bad.is_empty() {
            seq.finish(&budget, 0);
            return Ok(seq);
        }
        let top = w.first();
        let pick = bad
            .into_iter()
            .filter(|ext| ext.prefix.0 != top && tree.is_ancestor(top, ext.prefix.0))
            .min_by_key(|ext| (ext.prefix.0, ext.suffix.1, ext.prefix.1, ext.suffix.0));
        if let Some(ext) = pick {
            let (x, xe) = ext.prefix;
            let mut host = w.reversed();
            host.push_back(xe, x);
            let descent = tree.deepest_path_from(x);
            let host = walk_along_tree(&tree, &host, &descent[1..]);
            let w3 = slide_append(&mut seq, &host, ell, &mut budget)?;
            if non_closable_extension(g, &w3, WalkKind::Path, Mode::Fast, &mut budget)?.is_none() {
                seq.finish(&budget, 0);
                return Ok(seq);
            }
            current = w3.reversed();
        } else {
            current = w.reversed();
        }
    }
    Err(Error::budget("path shifting restarts", restart_cap as u64))
}

/// Path shifting through the line graph: the path's edge sequence is an
/// induced path there, the induced-path procedure shifts it, and the result
/// maps back edge by edge. Each pulled-back step is re-derived from edge
/// ids and re-validated rather than trusted.
pub fn path_shifting_via_line_graph(g: &MultiGraph, p: &Walk) -> Result<ShiftSequence, Error> {
    if !classify(g, p, WalkKind::Path)? || p.is_closed() {
        return Err(Error::NotAPath);
    }
    if p.is_empty() {
        return vertex_shift_to_removable(g, p);
    }
    let (lg, back) = g.line_graph();
    let fwd: BTreeMap<EdgeId, VertexId> = back.iter().map(|(&v, &e)| (e, v)).collect();
    let mut lvertices = Vec::new();
    for &e in p.edges() {
        lvertices.push(fwd[&e]);
    }
    let mut ledges = Vec::new();
    for pair in lvertices.windows(2) {
        let between = lg.edges_between(pair[0], pair[1]);
        ledges.push(between[0]);
    }
    let lwalk = Walk::new(lvertices, ledges)?;
    let lseq = shifting_induced(&lg, &lwalk)?;

    let mut steps = vec![p.clone()];
    for step in &lseq.steps()[1..] {
        let edge_ids: Vec<EdgeId> = step.vertices().iter().map(|v| back[v]).collect();
        steps.push(path_from_edge_sequence(g, &edge_ids)?);
    }
    let mut seq = ShiftSequence::from_steps(WalkKind::Path, steps)?;
    for i in 1..seq.steps().len() {
        let a = &seq.steps()[i - 1];
        let b = &seq.steps()[i];
        if !classify(g, b, WalkKind::Path)? || !is_shift_pair(g, a, b, WalkKind::Path)? {
            return Err(Error::InvalidParameter(format!(
                "line-graph route produced an invalid step: {b}"
            )));
        }
    }
    seq.stats = lseq.stats;
    seq.stats.shifts = seq.steps().len() - 1;
    Ok(seq)
}

/// Length-0 paths: slide the vertex along the DFS tree to a leaf, whose
/// removal keeps the component connected, making it avoidable.
fn vertex_shift_to_removable(g: &MultiGraph, p: &Walk) -> Result<ShiftSequence, Error> {
    let tree = g.dfs_tree(p)?;
    let leaf = tree
        .vertices()
        .filter(|&v| tree.is_leaf(v))
        .min()
        .expect("tree is nonempty");
    let route = tree.path_from_root(leaf);
    let steps = route.into_iter().map(Walk::single).collect();
    ShiftSequence::from_steps(WalkKind::Path, steps)
}

/// Rebuilds the unique path realizing a chordless edge sequence. Fails on
/// sequences that do not realize a path, which can only happen when the
/// host has parallel edges or loops.
fn path_from_edge_sequence(g: &MultiGraph, edges: &[EdgeId]) -> Result<Walk, Error> {
    if edges.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    if edges.len() == 1 {
        let (u, v) = g.endpoints(edges[0])?;
        if u == v {
            return Err(Error::InvalidParameter(format!(
                "edge {} is a loop and does not realize a path",
                edges[0]
            )));
        }
        return Walk::new(vec![u, v], vec![edges[0]]);
    }
    let mut shared = Vec::new();
    for pair in edges.windows(2) {
        let (a1, a2) = g.endpoints(pair[0])?;
        let (b1, b2) = g.endpoints(pair[1])?;
        let mut common: Vec<VertexId> = [a1, a2]
            .into_iter()
            .filter(|&x| x == b1 || x == b2)
            .collect();
        common.dedup();
        if common.len() != 1 {
            return Err(Error::InvalidParameter(format!(
                "edges {} and {} do not share exactly one endpoint",
                pair[0], pair[1]
            )));
        }
        shared.push(common[0]);
    }
    let (f1, f2) = g.endpoints(edges[0])?;
    let first = if f1 == shared[0] { f2 } else { f1 };
    let (l1, l2) = g.endpoints(edges[edges.len() - 1])?;
    let last = if l1 == shared[shared.len() - 1] { l2 } else { l1 };
    let mut vertices = vec![first];
    vertices.extend(shared);
    vertices.push(last);
    Walk::new(vertices, edges.to_vec())
}

/// Does every induced path on `k` vertices in the graph with `N[v]` deleted
/// shift, inside that subgraph, to a path avoidable in `g`?
pub fn check_hr(g: &MultiGraph, k: usize, v: VertexId) -> Result<bool, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let reduced = g.delete_closed_neighborhood(&BTreeSet::from([v]))?;
    for p in crate::walk::enumerate_walks(&reduced, WalkKind::Induced, k - 1, false)? {
        if p.is_closed() {
            continue;
        }
        let reached = shift_reachable(&reduced, &p, WalkKind::Induced, |w| {
            crate::avoid::is_avoidable(g, w, WalkKind::Induced, Mode::Fast)
        })?;
        if reached.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
