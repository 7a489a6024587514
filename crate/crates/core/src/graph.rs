//! Finite undirected multigraphs with loops and parallel edges.
//!
//! Vertices and edges carry stable integer identifiers that survive the
//! derivation operations (vertex deletion, edge contraction, products,
//! line graphs). All derivations are pure: they return a new graph and
//! leave the input untouched, and equal inputs always produce identical
//! identifier assignments.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::Error;
use crate::walk::Walk;

/// Stable vertex identifier, unique within one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Stable edge identifier, unique within one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected multigraph. Loops (both endpoints equal) and parallel edges
/// (same endpoint pair, distinct ids) are first-class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertices: BTreeMap<VertexId, Option<String>>,
    /// Endpoints stored with the smaller id first.
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    /// Incident edge ids per vertex, sorted; a loop appears once.
    incidence: BTreeMap<VertexId, Vec<EdgeId>>,
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex with the smallest unused id.
    pub fn add_vertex(&mut self) -> VertexId {
        let id = self.next_vertex_id();
        self.vertices.insert(id, None);
        self.incidence.insert(id, Vec::new());
        id
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> VertexId {
        let id = self.add_vertex();
        self.vertices.insert(id, Some(label.into()));
        id
    }

    pub fn add_vertex_with_id(
        &mut self,
        id: VertexId,
        label: Option<String>,
    ) -> Result<(), Error> {
        if self.vertices.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        self.vertices.insert(id, label);
        self.incidence.insert(id, Vec::new());
        Ok(())
    }

    /// Adds an edge between `u` and `v` (`u == v` makes a loop) with the
    /// smallest unused edge id.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, Error> {
        let id = self.next_edge_id();
        self.add_edge_with_id(id, u, v)?;
        Ok(id)
    }

    pub fn add_edge_with_id(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<(), Error> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        if !self.vertices.contains_key(&u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.vertices.contains_key(&v) {
            return Err(Error::UnknownVertex(v));
        }
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.edges.insert(id, (a, b));
        let ins = |list: &mut Vec<EdgeId>| {
            let pos = list.binary_search(&id).unwrap_err();
            list.insert(pos, id);
        };
        ins(self.incidence.get_mut(&a).unwrap());
        if a != b {
            ins(self.incidence.get_mut(&b).unwrap());
        }
        Ok(())
    }

    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(
            self.vertices
                .keys()
                .next_back()
                .map(|v| v.0 + 1)
                .unwrap_or(0),
        )
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.keys().next_back().map(|e| e.0 + 1).unwrap_or(0))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.vertices.get(&v).and_then(|l| l.as_deref())
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<(), Error> {
        match self.vertices.get_mut(&v) {
            Some(slot) => {
                *slot = Some(label.into());
                Ok(())
            }
            None => Err(Error::UnknownVertex(v)),
        }
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), Error> {
        self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool, Error> {
        let (u, v) = self.endpoints(e)?;
        Ok(u == v)
    }

    /// Given one endpoint of `e`, returns the other (the same vertex for a loop).
    pub fn other_endpoint(&self, e: EdgeId, at: VertexId) -> Result<VertexId, Error> {
        let (u, v) = self.endpoints(e)?;
        if at == u {
            Ok(v)
        } else if at == v {
            Ok(u)
        } else {
            Err(Error::NotIncident { edge: e, vertex: at })
        }
    }

    /// Incident edge ids in ascending order; loops listed once.
    pub fn incident_edges(&self, v: VertexId) -> Result<&[EdgeId], Error> {
        self.incidence
            .get(&v)
            .map(|e| e.as_slice())
            .ok_or(Error::UnknownVertex(v))
    }

    /// All edges joining `u` and `v`, ascending. `u == v` selects loops.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        match self.incidence.get(&a) {
            Some(list) => list
                .iter()
                .copied()
                .filter(|&e| self.edges[&e] == (a, b))
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges_between(u, v).len()
    }

    pub fn has_loop_at(&self, v: VertexId) -> bool {
        self.multiplicity(v, v) > 0
    }

    /// Adjacent vertices in ascending order. A loop makes a vertex adjacent
    /// to itself.
    pub fn neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>, Error> {
        let mut out = BTreeSet::new();
        for &e in self.incident_edges(v)? {
            out.insert(self.other_endpoint(e, v)?);
        }
        Ok(out)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, Error> {
        // A loop contributes 2 to the degree.
        let mut d = 0;
        for &e in self.incident_edges(v)? {
            d += if self.is_loop(e)? { 2 } else { 1 };
        }
        Ok(d)
    }

    /// Closed neighborhood of a vertex set: the set itself plus every vertex
    /// joined to it by an edge.
    pub fn closed_neighborhood(&self, seeds: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, Error> {
        let mut out = seeds.clone();
        for &s in seeds {
            out.extend(self.neighbors(s)?);
        }
        Ok(out)
    }

    /// Induced subgraph on `keep`; ids and labels are preserved.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Result<MultiGraph, Error> {
        for &v in keep {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let mut g = MultiGraph::new();
        for &v in keep {
            g.add_vertex_with_id(v, self.vertices[&v].clone())?;
        }
        for (e, u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.add_edge_with_id(e, u, v)?;
            }
        }
        Ok(g)
    }

    /// Removes the closed neighborhood of `seeds` and returns the induced
    /// subgraph on the remaining vertices.
    pub fn delete_closed_neighborhood(&self, seeds: &BTreeSet<VertexId>) -> Result<MultiGraph, Error> {
        for &s in seeds {
            if !self.has_vertex(s) {
                return Err(Error::UnknownVertex(s));
            }
        }
        let banned = self.closed_neighborhood(seeds)?;
        let keep: BTreeSet<VertexId> = self.vertices().filter(|v| !banned.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Contracts a non-loop edge, merging its endpoints into `new_vertex`.
    ///
    /// Loops arising at `new_vertex` are dropped, and all edges between
    /// `new_vertex` and any single neighbor are collapsed to one edge (the
    /// one with the smallest id). Edges not incident to the merged pair are
    /// preserved verbatim, so the contracted vertex always ends up with
    /// simple, loop-free adjacency.
    pub fn contract_edge(&self, e: EdgeId, new_vertex: VertexId) -> Result<MultiGraph, Error> {
        let (u, v) = self.endpoints(e)?;
        if u == v {
            return Err(Error::LoopContraction(e));
        }
        if self.has_vertex(new_vertex) {
            return Err(Error::DuplicateVertex(new_vertex));
        }
        let mut g = MultiGraph::new();
        for (w, label) in &self.vertices {
            if *w != u && *w != v {
                g.add_vertex_with_id(*w, label.clone())?;
            }
        }
        g.add_vertex_with_id(new_vertex, None)?;
        // Smallest edge id per surviving neighbor of the merged vertex.
        let mut merged: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
        for (id, a, b) in self.edges() {
            let touches_a = a == u || a == v;
            let touches_b = b == u || b == v;
            if touches_a && touches_b {
                continue; // becomes a loop at new_vertex
            }
            if touches_a || touches_b {
                let other = if touches_a { b } else { a };
                let slot = merged.entry(other).or_insert(id);
                if id < *slot {
                    *slot = id;
                }
            } else {
                g.add_edge_with_id(id, a, b)?;
            }
        }
        for (other, id) in merged {
            g.add_edge_with_id(id, new_vertex, other)?;
        }
        Ok(g)
    }

    /// Cartesian product of two simple loop-free graphs.
    ///
    /// Product vertices get fresh consecutive ids in row-major order of the
    /// factor id pairs, labeled `"(a,b)"` from the factor labels (falling
    /// back to factor ids). Edges copy the second factor within each first
    /// factor vertex, then the first factor within each second factor vertex.
    pub fn cartesian_product(&self, other: &MultiGraph) -> Result<MultiGraph, Error> {
        for g in [self, other] {
            for (e, u, v) in g.edges() {
                if u == v {
                    return Err(Error::MultigraphFactor(e));
                }
                if g.multiplicity(u, v) > 1 {
                    return Err(Error::MultigraphFactor(e));
                }
            }
        }
        let name = |g: &MultiGraph, v: VertexId| {
            g.label(v).map(str::to_owned).unwrap_or_else(|| v.to_string())
        };
        let mut g = MultiGraph::new();
        let mut index: BTreeMap<(VertexId, VertexId), VertexId> = BTreeMap::new();
        for a in self.vertices() {
            for b in other.vertices() {
                let id = g.add_labeled_vertex(format!("({},{})", name(self, a), name(other, b)));
                index.insert((a, b), id);
            }
        }
        for a in self.vertices() {
            for (_, x, y) in other.edges() {
                g.add_edge(index[&(a, x)], index[&(a, y)])?;
            }
        }
        for b in other.vertices() {
            for (_, x, y) in self.edges() {
                g.add_edge(index[&(x, b)], index[&(y, b)])?;
            }
        }
        Ok(g)
    }

    /// Line graph: one vertex per edge of `self`, two distinct edges adjacent
    /// exactly when they share an endpoint. The result is simple. Also
    /// returns the map from line-graph vertices back to the original edges.
    pub fn line_graph(&self) -> (MultiGraph, BTreeMap<VertexId, EdgeId>) {
        let mut g = MultiGraph::new();
        let mut back = BTreeMap::new();
        let mut fwd: BTreeMap<EdgeId, VertexId> = BTreeMap::new();
        for (e, _, _) in self.edges() {
            let v = g.add_labeled_vertex(format!("e{e}"));
            back.insert(v, e);
            fwd.insert(e, v);
        }
        let ids: Vec<EdgeId> = self.edges.keys().copied().collect();
        for (i, &a) in ids.iter().enumerate() {
            let (a1, a2) = self.edges[&a];
            for &b in &ids[i + 1..] {
                let (b1, b2) = self.edges[&b];
                if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
                    g.add_edge(fwd[&a], fwd[&b]).expect("vertices exist");
                }
            }
        }
        (g, back)
    }

    /// Breadth-first distances from `src` over the whole component.
    pub fn bfs_distances(&self, src: VertexId) -> Result<BTreeMap<VertexId, usize>, Error> {
        if !self.has_vertex(src) {
            return Err(Error::UnknownVertex(src));
        }
        let mut dist = BTreeMap::new();
        dist.insert(src, 0usize);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &e in self.incident_edges(v)? {
                let w = self.other_endpoint(e, v)?;
                if !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length between two vertices; `None` when disconnected.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>, Error> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.bfs_distances(u)?.get(&v).copied())
    }

    /// One shortest path as alternating vertex/edge sequences, or `None`.
    /// Deterministic: prefers smaller edge ids.
    pub fn shortest_path(&self, u: VertexId, v: VertexId) -> Result<Option<Walk>, Error> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut prev: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
        let mut seen = BTreeSet::from([u]);
        self.has_vertex(u)
            .then_some(())
            .ok_or(Error::UnknownVertex(u))?;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &e in self.incident_edges(x)? {
                let w = self.other_endpoint(e, x)?;
                if seen.insert(w) {
                    prev.insert(w, (x, e));
                    queue.push_back(w);
                }
            }
        }
        if !seen.contains(&v) {
            return Ok(None);
        }
        let mut vertices = vec![v];
        let mut edges = Vec::new();
        let mut cur = v;
        while cur != u {
            let (p, e) = prev[&cur];
            edges.push(e);
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        edges.reverse();
        Ok(Some(Walk::new(vertices, edges).expect("consistent path")))
    }

    /// Whether `(h_vertices, h_edges)` forms a subgraph whose internal
    /// distances all equal the distances in `self`.
    pub fn is_isometric_subgraph(
        &self,
        h_vertices: &BTreeSet<VertexId>,
        h_edges: &BTreeSet<EdgeId>,
    ) -> Result<bool, Error> {
        for &v in h_vertices {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        for &e in h_edges {
            let (u, v) = self.endpoints(e)?;
            if !h_vertices.contains(&u) || !h_vertices.contains(&v) {
                return Err(Error::NotASubgraph(e));
            }
        }
        let mut h = MultiGraph::new();
        for &v in h_vertices {
            h.add_vertex_with_id(v, None)?;
        }
        for &e in h_edges {
            let (u, v) = self.endpoints(e)?;
            h.add_edge_with_id(e, u, v)?;
        }
        for &v in h_vertices {
            let in_h = h.bfs_distances(v)?;
            let in_g = self.bfs_distances(v)?;
            for &w in h_vertices {
                if in_h.get(&w) != in_g.get(&w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Depth-first search tree of the component containing `seed`, rooted at
    /// the seed's first vertex. The seed path is traversed first, after which
    /// exploration follows ascending edge ids.
    pub fn dfs_tree(&self, seed: &Walk) -> Result<DfsTree, Error> {
        seed.validate_in(self)?;
        if seed.is_closed() || !crate::walk::classify(self, seed, crate::walk::WalkKind::Path)? {
            return Err(Error::NotAPath);
        }
        let root = seed.first();
        let mut parent: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
        let mut order: BTreeMap<VertexId, usize> = BTreeMap::new();
        order.insert(root, 0);
        for i in 1..seed.vertices().len() {
            let v = seed.vertices()[i];
            parent.insert(v, (seed.vertices()[i - 1], seed.edges()[i - 1]));
            order.insert(v, i);
        }
        // Continue the traversal from the deepest seed vertex back up.
        let mut stack: Vec<(VertexId, Vec<EdgeId>)> = seed
            .vertices()
            .iter()
            .map(|&v| (v, self.incidence[&v].clone()))
            .collect();
        while let Some((v, pending)) = stack.last_mut() {
            let v = *v;
            match pending.first().copied() {
                None => {
                    stack.pop();
                }
                Some(e) => {
                    pending.remove(0);
                    let w = self.other_endpoint(e, v)?;
                    if !order.contains_key(&w) {
                        let rank = order.len();
                        order.insert(w, rank);
                        parent.insert(w, (v, e));
                        stack.push((w, self.incidence[&w].clone()));
                    }
                }
            }
        }
        Ok(DfsTree::new(root, parent, order))
    }

    /// Vertices of the connected component containing `v`.
    pub fn component_of(&self, v: VertexId) -> Result<BTreeSet<VertexId>, Error> {
        Ok(self.bfs_distances(v)?.into_keys().collect())
    }
}

/// Rooted DFS tree of one connected component. Every non-tree edge of the
/// component joins a vertex to one of its ancestors.
#[derive(Clone, Debug)]
pub struct DfsTree {
    root: VertexId,
    parent: BTreeMap<VertexId, (VertexId, EdgeId)>,
    order: BTreeMap<VertexId, usize>,
    children: BTreeMap<VertexId, Vec<VertexId>>,
    depth: BTreeMap<VertexId, usize>,
}

impl DfsTree {
    fn new(
        root: VertexId,
        parent: BTreeMap<VertexId, (VertexId, EdgeId)>,
        order: BTreeMap<VertexId, usize>,
    ) -> Self {
        let mut children: BTreeMap<VertexId, Vec<VertexId>> =
            order.keys().map(|&v| (v, Vec::new())).collect();
        for (&c, &(p, _)) in &parent {
            children.get_mut(&p).unwrap().push(c);
        }
        let mut depth = BTreeMap::from([(root, 0usize)]);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let d = depth[&v];
            for &c in &children[&v] {
                depth.insert(c, d + 1);
                stack.push(c);
            }
        }
        DfsTree {
            root,
            parent,
            order,
            children,
            depth,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.order.contains_key(&v)
    }

    pub fn parent(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        self.parent.get(&v).copied()
    }

    pub fn discovery_rank(&self, v: VertexId) -> Option<usize> {
        self.order.get(&v).copied()
    }

    pub fn depth(&self, v: VertexId) -> Option<usize> {
        self.depth.get(&v).copied()
    }

    /// Children in ascending vertex id order.
    pub fn children(&self, v: VertexId) -> &[VertexId] {
        self.children.get(&v).map(|c| c.as_slice()).unwrap_or(&[])
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.order.keys().copied()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children(v).is_empty()
    }

    /// True when `a` lies on the tree path from the root to `b` (inclusive).
    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        let mut cur = b;
        loop {
            if cur == a {
                return true;
            }
            match self.parent(cur) {
                Some((p, _)) => cur = p,
                None => return false,
            }
        }
    }

    /// Longest downward distance from `v` to a leaf of its subtree.
    pub fn subtree_height(&self, v: VertexId) -> usize {
        self.children(v)
            .iter()
            .map(|&c| 1 + self.subtree_height(c))
            .max()
            .unwrap_or(0)
    }

    /// Deepest downward path starting at `v`; ties broken towards the
    /// lexicographically least vertex id sequence.
    pub fn deepest_path_from(&self, v: VertexId) -> Vec<VertexId> {
        let mut best: Option<Vec<VertexId>> = None;
        for &c in self.children(v) {
            let cand = self.deepest_path_from(c);
            let better = match &best {
                None => true,
                Some(b) => cand.len() > b.len() || (cand.len() == b.len() && cand < *b),
            };
            if better {
                best = Some(cand);
            }
        }
        let mut path = vec![v];
        if let Some(tail) = best {
            path.extend(tail);
        }
        path
    }

    /// Tree path from the root to `v`.
    pub fn path_from_root(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some((p, _)) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::Walk;

    pub(crate) fn path_graph(n: u32) -> MultiGraph {
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
        for w in vs.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
        g
    }

    pub(crate) fn cycle_graph(n: u32) -> MultiGraph {
        let mut g = path_graph(n);
        g.add_edge(VertexId(n - 1), VertexId(0)).unwrap();
        g
    }

    pub(crate) fn complete_graph(n: u32) -> MultiGraph {
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                g.add_edge(vs[i], vs[j]).unwrap();
            }
        }
        g
    }

    pub(crate) fn wheel6() -> MultiGraph {
        let mut g = cycle_graph(6);
        let hub = g.add_vertex();
        for i in 0..6 {
            g.add_edge(VertexId(i), hub).unwrap();
        }
        g
    }

    #[test]
    fn neighborhood_deletion_on_paths() {
        let g = path_graph(3);
        let r = g
            .delete_closed_neighborhood(&BTreeSet::from([VertexId(1)]))
            .unwrap();
        assert_eq!(r.vertex_count(), 0);

        let g = path_graph(5);
        let r = g
            .delete_closed_neighborhood(&BTreeSet::from([VertexId(0)]))
            .unwrap();
        assert_eq!(
            r.vertices().collect::<Vec<_>>(),
            vec![VertexId(2), VertexId(3), VertexId(4)]
        );
        assert_eq!(r.edge_count(), 2);
        // Input untouched.
        assert_eq!(g.vertex_count(), 5);
    }

    #[test]
    fn neighborhood_deletion_of_universal_hub_empties_wheel() {
        let g = wheel6();
        let hub = VertexId(6);
        // Direct enumeration: the hub's closed neighborhood covers everything.
        let closed = g.closed_neighborhood(&BTreeSet::from([hub])).unwrap();
        assert_eq!(closed.len(), 7);
        let r = g.delete_closed_neighborhood(&BTreeSet::from([hub])).unwrap();
        assert_eq!(r.vertex_count(), 0);
    }

    #[test]
    fn neighborhood_deletion_rejects_unknown_vertex() {
        let g = path_graph(2);
        assert!(matches!(
            g.delete_closed_neighborhood(&BTreeSet::from([VertexId(9)])),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn contraction_collapses_parallel_edges() {
        // Triangle: contracting one edge leaves a single edge.
        let g = complete_graph(3);
        let e = g.edges_between(VertexId(0), VertexId(1))[0];
        let r = g.contract_edge(e, VertexId(10)).unwrap();
        assert_eq!(r.vertex_count(), 2);
        assert_eq!(r.edge_count(), 1);
        assert_eq!(r.multiplicity(VertexId(10), VertexId(2)), 1);
        assert!(!r.has_loop_at(VertexId(10)));

        // Path a-b-c: contracting ab leaves the edge a'-c.
        let g = path_graph(3);
        let e = g.edges_between(VertexId(0), VertexId(1))[0];
        let r = g.contract_edge(e, VertexId(7)).unwrap();
        assert_eq!(r.vertex_count(), 2);
        assert_eq!(r.multiplicity(VertexId(7), VertexId(2)), 1);

        // 4-cycle: contraction yields a triangle.
        let g = cycle_graph(4);
        let e = g.edges_between(VertexId(0), VertexId(1))[0];
        let r = g.contract_edge(e, VertexId(9)).unwrap();
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(r.edge_count(), 3);
    }

    #[test]
    fn contraction_rejects_loops_and_taken_ids() {
        let mut g = path_graph(2);
        let lp = g.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert!(matches!(
            g.contract_edge(lp, VertexId(5)),
            Err(Error::LoopContraction(_))
        ));
        let e = g.edges_between(VertexId(0), VertexId(1))[0];
        assert!(matches!(
            g.contract_edge(e, VertexId(1)),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn contraction_drops_vertex_count_by_one() {
        let g = complete_graph(5);
        let e = g.edges_between(VertexId(1), VertexId(3))[0];
        let r = g.contract_edge(e, VertexId(99)).unwrap();
        assert_eq!(r.vertex_count(), g.vertex_count() - 1);
        assert!(!r.has_loop_at(VertexId(99)));
    }

    #[test]
    fn product_counts_and_shape() {
        let p2 = path_graph(2);
        let sq = p2.cartesian_product(&p2).unwrap();
        assert_eq!(sq.vertex_count(), 4);
        assert_eq!(sq.edge_count(), 4); // 4-cycle
        for v in sq.vertices() {
            assert_eq!(sq.degree(v).unwrap(), 2);
        }

        let p7 = path_graph(7);
        let c7 = cycle_graph(7);
        let t = p7.cartesian_product(&c7).unwrap();
        assert_eq!(t.vertex_count(), 49);
        assert_eq!(t.edge_count(), 7 * 7 + 7 * 6);
    }

    #[test]
    fn product_rejects_multigraph_factors() {
        let mut g = path_graph(2);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let h = path_graph(2);
        assert!(matches!(
            g.cartesian_product(&h),
            Err(Error::MultigraphFactor(_))
        ));
        let mut l = path_graph(2);
        l.add_edge(VertexId(1), VertexId(1)).unwrap();
        assert!(matches!(
            h.cartesian_product(&l),
            Err(Error::MultigraphFactor(_))
        ));
    }

    #[test]
    fn line_graph_small_cases() {
        // P4 has 3 edges; its line graph is P3.
        let (lg, back) = path_graph(4).line_graph();
        assert_eq!(lg.vertex_count(), 3);
        assert_eq!(lg.edge_count(), 2);
        assert_eq!(back.len(), 3);

        // K3 maps to K3.
        let (lg, _) = complete_graph(3).line_graph();
        assert_eq!(lg.vertex_count(), 3);
        assert_eq!(lg.edge_count(), 3);

        // K4: six edges, each meeting four others.
        let (lg, _) = complete_graph(4).line_graph();
        assert_eq!(lg.vertex_count(), 6);
        assert_eq!(lg.edge_count(), 12);
        for v in lg.vertices() {
            assert_eq!(lg.degree(v).unwrap(), 4);
        }
    }

    #[test]
    fn line_graph_adjacency_matches_shared_endpoints() {
        // Oracle: compare adjacency against the definition, pair by pair.
        for g in [complete_graph(4), wheel6(), cycle_graph(5)] {
            let (lg, back) = g.line_graph();
            let vs: Vec<VertexId> = lg.vertices().collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    let (a1, a2) = g.endpoints(back[&a]).unwrap();
                    let (b1, b2) = g.endpoints(back[&b]).unwrap();
                    let share = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
                    assert_eq!(lg.multiplicity(a, b) == 1, share);
                }
            }
        }
    }

    #[test]
    fn line_graph_with_loops_and_parallels() {
        let mut g = MultiGraph::new();
        let u = g.add_vertex();
        let v = g.add_vertex();
        g.add_edge(u, v).unwrap();
        g.add_edge(u, v).unwrap(); // parallel, shares both endpoints
        g.add_edge(u, u).unwrap(); // loop shares u with both
        let (lg, _) = g.line_graph();
        assert_eq!(lg.vertex_count(), 3);
        assert_eq!(lg.edge_count(), 3);
    }

    #[test]
    fn distances() {
        let g = path_graph(4);
        assert_eq!(g.distance(VertexId(0), VertexId(0)).unwrap(), Some(0));
        assert_eq!(g.distance(VertexId(0), VertexId(3)).unwrap(), Some(3));

        let mut two = MultiGraph::new();
        let a = two.add_vertex();
        let b = two.add_vertex();
        assert_eq!(two.distance(a, b).unwrap(), None);

        // Grid-times-ring metric: the coordinates add up.
        let t = path_graph(7).cartesian_product(&cycle_graph(7)).unwrap();
        let find = |lbl: &str| t.vertices().find(|&v| t.label(v) == Some(lbl)).unwrap();
        let u = find("(0,0)");
        let v = find("(2,3)");
        assert_eq!(t.distance(u, v).unwrap(), Some(2 + 3));

        assert!(g.distance(VertexId(0), VertexId(17)).is_err());
    }

    #[test]
    fn isometric_subgraph_checks() {
        // The rim 6-cycle inside the wheel is not isometric (hub shortcuts).
        let g = wheel6();
        let rim: BTreeSet<VertexId> = (0..6).map(VertexId).collect();
        let rim_edges: BTreeSet<EdgeId> = g
            .edges()
            .filter(|&(_, u, v)| rim.contains(&u) && rim.contains(&v))
            .map(|(e, _, _)| e)
            .collect();
        assert_eq!(rim_edges.len(), 6);
        assert!(!g.is_isometric_subgraph(&rim, &rim_edges).unwrap());

        // Any single edge of a connected graph is isometric.
        let (e, u, v) = g.edges().next().unwrap();
        assert!(g
            .is_isometric_subgraph(&BTreeSet::from([u, v]), &BTreeSet::from([e]))
            .unwrap());

        // Edge set outside the vertex set is rejected.
        assert!(g
            .is_isometric_subgraph(&BTreeSet::from([u]), &BTreeSet::from([e]))
            .is_err());
    }

    #[test]
    fn perimeter_of_grid_is_not_isometric() {
        let grid = path_graph(3).cartesian_product(&path_graph(3)).unwrap();
        let center = grid
            .vertices()
            .find(|&v| grid.label(v) == Some("(1,1)"))
            .unwrap();
        let ring: BTreeSet<VertexId> = grid.vertices().filter(|&v| v != center).collect();
        let ring_edges: BTreeSet<EdgeId> = grid
            .edges()
            .filter(|&(_, u, v)| ring.contains(&u) && ring.contains(&v))
            .map(|(e, _, _)| e)
            .collect();
        assert_eq!(ring.len(), 8);
        assert_eq!(ring_edges.len(), 8);
        assert!(!grid.is_isometric_subgraph(&ring, &ring_edges).unwrap());
    }

    #[test]
    fn dfs_tree_follows_seed_then_edge_ids() {
        // Forced case on a path.
        let g = path_graph(4);
        let seed = Walk::new(
            vec![VertexId(1), VertexId(2)],
            vec![g.edges_between(VertexId(1), VertexId(2))[0]],
        )
        .unwrap();
        let t = g.dfs_tree(&seed).unwrap();
        assert_eq!(t.root(), VertexId(1));
        assert_eq!(t.parent(VertexId(2)).unwrap().0, VertexId(1));
        assert_eq!(t.parent(VertexId(3)).unwrap().0, VertexId(2));
        assert_eq!(t.parent(VertexId(0)).unwrap().0, VertexId(1));

        // DFS of a complete graph from a single vertex is a path.
        let g = complete_graph(3);
        let t = g.dfs_tree(&Walk::single(VertexId(0))).unwrap();
        assert_eq!(t.subtree_height(VertexId(0)), 2);
        assert_eq!(t.deepest_path_from(VertexId(0)).len(), 3);

        // On a cycle the non-tree edge closes back to the root.
        let g = cycle_graph(5);
        let seed = Walk::new(
            vec![VertexId(0), VertexId(1)],
            vec![g.edges_between(VertexId(0), VertexId(1))[0]],
        )
        .unwrap();
        let t = g.dfs_tree(&seed).unwrap();
        let deepest = t.deepest_path_from(VertexId(0));
        assert_eq!(
            deepest,
            vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3), VertexId(4)]
        );
        assert!(t.is_ancestor(VertexId(0), VertexId(4)));
    }

    #[test]
    fn dfs_tree_rejects_non_path_seed() {
        let mut g = path_graph(2);
        let lp = g.add_edge(VertexId(0), VertexId(0)).unwrap();
        let w = Walk::new(vec![VertexId(0), VertexId(0)], vec![lp]).unwrap();
        assert!(matches!(g.dfs_tree(&w), Err(Error::NotAPath)));
    }

    #[test]
    fn derivations_are_deterministic() {
        let g = wheel6();
        let h = wheel6();
        assert_eq!(
            g.cartesian_product(&g).unwrap(),
            h.cartesian_product(&h).unwrap()
        );
        assert_eq!(g.line_graph().0, h.line_graph().0);
        let e = g.edges_between(VertexId(0), VertexId(1))[0];
        assert_eq!(
            g.contract_edge(e, VertexId(20)).unwrap(),
            h.contract_edge(e, VertexId(20)).unwrap()
        );
    }
}
