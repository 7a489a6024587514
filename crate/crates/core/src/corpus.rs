//! Test corpora: every connected simple graph up to seven vertices (one
//! representative per isomorphism class) and a seeded random multigraph
//! collection with loops and parallel edges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use crate::graph::{MultiGraph, VertexId};

/// Upper-triangle adjacency mask for graphs on at most 8 vertices.
type Mask = u64;

fn bit(i: usize, j: usize) -> Mask {
    debug_assert!(i < j);
    1 << (i * 8 + j)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn apply_perm(mask: Mask, n: usize, perm: &[usize]) -> Mask {
    let mut out = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask & bit(i, j) != 0 {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                out |= bit(a, b);
            }
        }
    }
    out
}

fn canonical(mask: Mask, n: usize, perms: &[Vec<usize>]) -> Mask {
    perms
        .iter()
        .map(|p| apply_perm(mask, n, p))
        .min()
        .unwrap_or(mask)
}

fn mask_to_graph(mask: Mask, n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
    for i in 0..n {
        for j in i + 1..n {
            if mask & bit(i, j) != 0 {
                g.add_edge(vs[i], vs[j]).expect("fresh edge");
            }
        }
    }
    g
}

/// All connected simple graphs with `min_n ..= max_n` vertices, one per
/// isomorphism class, built by augmenting each smaller graph with a new
/// vertex attached to every possible nonempty neighborhood.
pub fn connected_graphs(min_n: usize, max_n: usize) -> Vec<MultiGraph> {
    assert!(max_n <= 8, "mask representation holds at most 8 vertices");
    let mut out = Vec::new();
    let mut level: Vec<Mask> = vec![0]; // the one-vertex graph
    if min_n <= 1 && max_n >= 1 {
        out.push(mask_to_graph(0, 1));
    }
    for n in 2..=max_n {
        let perms = permutations(n);
        let mut next: BTreeSet<Mask> = BTreeSet::new();
        for &parent in &level {
            for nbrs in 1u32..(1 << (n - 1)) {
                let mut mask = parent;
                for i in 0..n - 1 {
                    if nbrs & (1 << i) != 0 {
                        mask |= bit(i, n - 1);
                    }
                }
                next.insert(canonical(mask, n, &perms));
            }
        }
        level = next.into_iter().collect();
        if n >= min_n {
            out.extend(level.iter().map(|&m| mask_to_graph(m, n)));
        }
    }
    out
}

/// `count` connected multigraphs on 3 to 6 vertices with random extra
/// edges, parallel duplicates, and loops. Fully determined by the seed.
pub fn random_multigraphs(count: usize, seed: u64) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(3..=6u32);
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
        // Random spanning tree keeps the graph connected.
        for i in 1..n as usize {
            let p = rng.gen_range(0..i);
            g.add_edge(vs[p], vs[i]).expect("tree edge");
        }
        let extra = rng.gen_range(0..=n as usize);
        for _ in 0..extra {
            let a = rng.gen_range(0..n as usize);
            let b = rng.gen_range(0..n as usize);
            if a != b {
                g.add_edge(vs[a], vs[b]).expect("extra edge");
            }
        }
        // A parallel duplicate of an existing edge, sometimes twice.
        for _ in 0..rng.gen_range(0..=2) {
            let edges: Vec<(VertexId, VertexId)> = g
                .edges()
                .filter(|&(_, u, v)| u != v)
                .map(|(_, u, v)| (u, v))
                .collect();
            if !edges.is_empty() {
                let (u, v) = edges[rng.gen_range(0..edges.len())];
                g.add_edge(u, v).expect("parallel edge");
            }
        }
        for _ in 0..rng.gen_range(0..=2) {
            let v = vs[rng.gen_range(0..n as usize)];
            g.add_edge(v, v).expect("loop");
        }
        out.push(g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts_match_the_known_sequence() {
        // Connected simple graphs per order: 1, 1, 2, 6, 21, 112, 853.
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (n, &want) in expected.iter().enumerate() {
            let n = n + 1;
            if n > 7 {
                break;
            }
            let got = connected_graphs(n, n).len();
            assert_eq!(got, want, "graph count for {n} vertices");
        }
        assert_eq!(connected_graphs(1, 7).len(), 996);
    }

    #[test]
    fn generated_graphs_are_connected_and_simple() {
        for g in connected_graphs(1, 5) {
            let first = g.vertices().next().unwrap();
            assert_eq!(g.component_of(first).unwrap().len(), g.vertex_count());
            for (_, u, v) in g.edges() {
                assert_ne!(u, v);
                assert_eq!(g.multiplicity(u, v), 1);
            }
        }
    }

    #[test]
    fn random_corpus_is_deterministic_and_connected() {
        let a = random_multigraphs(50, 7);
        let b = random_multigraphs(50, 7);
        assert_eq!(a, b);
        let c = random_multigraphs(50, 8);
        assert_ne!(a, c);
        let mut saw_loop = false;
        let mut saw_parallel = false;
        for g in &a {
            let first = g.vertices().next().unwrap();
            assert_eq!(g.component_of(first).unwrap().len(), g.vertex_count());
            saw_loop |= g.vertices().any(|v| g.has_loop_at(v));
            saw_parallel |= g
                .edges()
                .any(|(_, u, v)| u != v && g.multiplicity(u, v) > 1);
        }
        assert!(saw_loop && saw_parallel);
    }
}
