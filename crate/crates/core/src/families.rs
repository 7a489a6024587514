//! Generators for the graph families used by the verification suites, and
//! the exhaustive negative-result checkers built on top of them.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::avoid::{isometric_cycles, non_closable_extension, Budget, Mode};
use crate::error::Error;
use crate::graph::{MultiGraph, VertexId};
use crate::report::VerificationReport;
use crate::walk::{classify, enumerate_walks, CanonicalWalk, Walk, WalkKind};

/// A graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Two vertices joined by an edge, a loop on each.
    LoopPair,
    /// Two vertices joined by `m` parallel edges.
    Dipole(u32),
    Complete(u32),
    CompleteBipartite(u32, u32),
    /// Cycle on `n` vertices plus a universal hub.
    Wheel(u32),
    PathGraph(u32),
    CycleGraph(u32),
    /// Cartesian product of two paths.
    GridProduct(u32, u32),
    /// Cartesian product of a path and a cycle on `n` vertices each,
    /// `n` odd.
    TorusStrip(u32),
}

impl FamilySpec {
    pub fn name(&self) -> String {
        match self {
            FamilySpec::LoopPair => "loop-pair".into(),
            FamilySpec::Dipole(m) => format!("dipole({m})"),
            FamilySpec::Complete(n) => format!("complete({n})"),
            FamilySpec::CompleteBipartite(a, b) => format!("complete-bipartite({a},{b})"),
            FamilySpec::Wheel(n) => format!("wheel({n})"),
            FamilySpec::PathGraph(n) => format!("path({n})"),
            FamilySpec::CycleGraph(n) => format!("cycle({n})"),
            FamilySpec::GridProduct(a, b) => format!("grid({a},{b})"),
            FamilySpec::TorusStrip(n) => format!("torus-strip({n})"),
        }
    }
}

/// Builds the family deterministically: vertex ids are consecutive from 0,
/// factor vertices are labeled `1..n`, and product vertices `"(i,j)"`.
pub fn build(spec: FamilySpec) -> Result<MultiGraph, Error> {
    let param = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(msg.to_string()))
        }
    };
    match spec {
        FamilySpec::LoopPair => {
            let mut g = MultiGraph::new();
            let u = g.add_labeled_vertex("u");
            let v = g.add_labeled_vertex("v");
            g.add_edge(u, v)?;
            g.add_edge(u, u)?;
            g.add_edge(v, v)?;
            Ok(g)
        }
        FamilySpec::Dipole(m) => {
            param(m >= 1, "dipole needs at least one edge")?;
            let mut g = MultiGraph::new();
            let u = g.add_labeled_vertex("u");
            let v = g.add_labeled_vertex("v");
            for _ in 0..m {
                g.add_edge(u, v)?;
            }
            Ok(g)
        }
        FamilySpec::Complete(n) => {
            param(n >= 1, "complete graph needs at least one vertex")?;
            let mut g = MultiGraph::new();
            let vs: Vec<VertexId> = (1..=n).map(|i| g.add_labeled_vertex(i.to_string())).collect();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    g.add_edge(vs[i], vs[j])?;
                }
            }
            Ok(g)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            param(a >= 1 && b >= 1, "both sides need at least one vertex")?;
            let mut g = MultiGraph::new();
            let left: Vec<VertexId> = (1..=a).map(|i| g.add_labeled_vertex(format!("a{i}"))).collect();
            let right: Vec<VertexId> = (1..=b).map(|i| g.add_labeled_vertex(format!("b{i}"))).collect();
            for &u in &left {
                for &v in &right {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        FamilySpec::Wheel(n) => {
            param(n >= 3, "wheel rim needs at least three vertices")?;
            let mut g = build(FamilySpec::CycleGraph(n))?;
            let hub = g.add_labeled_vertex("hub");
            for i in 0..n {
                g.add_edge(VertexId(i), hub)?;
            }
            Ok(g)
        }
        FamilySpec::PathGraph(n) => {
            param(n >= 1, "path needs at least one vertex")?;
            let mut g = MultiGraph::new();
            let vs: Vec<VertexId> = (1..=n).map(|i| g.add_labeled_vertex(i.to_string())).collect();
            for w in vs.windows(2) {
                g.add_edge(w[0], w[1])?;
            }
            Ok(g)
        }
        FamilySpec::CycleGraph(n) => {
            param(n >= 3, "cycle needs at least three vertices")?;
            let mut g = build(FamilySpec::PathGraph(n))?;
            g.add_edge(VertexId(n - 1), VertexId(0))?;
            Ok(g)
        }
        FamilySpec::GridProduct(a, b) => {
            let p = build(FamilySpec::PathGraph(a))?;
            let q = build(FamilySpec::PathGraph(b))?;
            p.cartesian_product(&q)
        }
        FamilySpec::TorusStrip(n) => {
            param(n >= 3 && n % 2 == 1, "torus strip needs an odd n >= 3")?;
            let p = build(FamilySpec::PathGraph(n))?;
            let c = build(FamilySpec::CycleGraph(n))?;
            p.cartesian_product(&c)
        }
    }
}

/// The path-times-cycle host in which no isometric path of length `len` is
/// avoidable: the smallest odd order exceeding `2 * len + 4`.
pub fn iso_counterexample(len: usize) -> Result<MultiGraph, Error> {
    if len == 0 {
        return Err(Error::InvalidParameter(
            "length 0 uses wheel(6) instead of a product".into(),
        ));
    }
    build(FamilySpec::TorusStrip(2 * len as u32 + 5))
}

/// Exhaustively checks that the graph contains `kind` walks of length
/// `len` but none of them is avoidable (oracle closability). The report
/// carries one non-closable extension per inspected walk, capped for
/// readability.
pub fn verify_no_avoidable(g: &MultiGraph, kind: WalkKind, len: usize) -> VerificationReport {
    let claim = format!("no-avoidable.{}.len{}", kind, len);
    let instance = format!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    let started = Instant::now();
    let mut budget = Budget::search_default();
    let mut inner = || -> Result<VerificationReport, Error> {
        let walks = enumerate_walks(g, kind, len, false)?;
        if walks.is_empty() {
            return Ok(VerificationReport::fail(
                &claim,
                &instance,
                format!("no {kind} walk of length {len} exists"),
                vec!["empty walk set".into()],
            ));
        }
        let mut witnesses = Vec::new();
        for w in &walks {
            match non_closable_extension(g, w, kind, Mode::Oracle, &mut budget)? {
                Some(ext) => {
                    if witnesses.len() < 8 {
                        witnesses.push(format!("{} blocked by {}", w, ext.extended));
                    }
                }
                None => {
                    return Ok(VerificationReport::fail(
                        &claim,
                        &instance,
                        format!("avoidable walk found among {}", walks.len()),
                        vec![w.to_string()],
                    ));
                }
            }
        }
        let mut r = VerificationReport::pass(
            &claim,
            &instance,
            format!("{} walks, none avoidable", walks.len()),
        );
        r.witnesses = witnesses;
        Ok(r)
    };
    let mut report = match inner() {
        Ok(r) => r,
        Err(e) => VerificationReport::fail(&claim, &instance, format!("error: {e}"), vec![]),
    };
    report.elapsed_ms = started.elapsed().as_millis();
    report.budget_used = budget.used();
    report
}

fn coordinates(g: &MultiGraph, v: VertexId) -> Result<(i64, i64), Error> {
    let label = g
        .label(v)
        .ok_or_else(|| Error::InvalidParameter(format!("vertex {v} has no coordinate label")))?;
    let stripped = label
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidParameter(format!("label {label:?} is not a pair")))?;
    let mut parts = stripped.splitn(2, ',');
    let a = parts
        .next()
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::InvalidParameter(format!("bad coordinate in {label:?}")))?;
    let b = parts
        .next()
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::InvalidParameter(format!("bad coordinate in {label:?}")))?;
    Ok((a, b))
}

/// Coordinate characterization of short isometric paths in a path-times-
/// cycle product: a path of length at most `len + 2` is isometric exactly
/// when, in each coordinate, equal values only occur contiguously along
/// the path. Values are compared literally; "between" follows path order.
pub fn coordinate_isometry_check(g: &MultiGraph, w: &Walk, len: usize) -> Result<bool, Error> {
    if !classify(g, w, WalkKind::Path)? {
        return Err(Error::NotAPath);
    }
    if w.len() > len + 2 {
        return Err(Error::InvalidParameter(format!(
            "path of length {} exceeds the bound {}",
            w.len(),
            len + 2
        )));
    }
    let n = (g.vertex_count() as f64).sqrt().round() as usize;
    if n * n != g.vertex_count() || n % 2 == 0 || n <= 2 * len + 4 {
        return Err(Error::InvalidParameter(format!(
            "host must be a product of odd order above {}",
            2 * len + 4
        )));
    }
    let coords: Vec<(i64, i64)> = w
        .vertices()
        .iter()
        .map(|&v| coordinates(g, v))
        .collect::<Result<_, _>>()?;
    for axis in 0..2 {
        let value = |i: usize| if axis == 0 { coords[i].0 } else { coords[i].1 };
        for i in 0..coords.len() {
            for j in i + 2..coords.len() {
                if value(i) == value(j) {
                    for m in i + 1..j {
                        if value(m) != value(i) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Census of all isometric cycles in the odd path-times-cycle product:
/// they must be exactly the unit squares and the ring cycles that are
/// constant in the path coordinate.
pub fn isometric_cycle_census(n: u32) -> Result<VerificationReport, Error> {
    let claim = format!("iso-cycle-census.n{n}");
    let started = Instant::now();
    let g = build(FamilySpec::TorusStrip(n))?;
    let instance = format!("torus-strip({n})");
    let mut budget = Budget::search_default();
    let found: BTreeSet<CanonicalWalk> = isometric_cycles(&g, &mut budget)?
        .iter()
        .map(CanonicalWalk::of_cyclic)
        .collect();

    let lookup = |i: i64, j: i64| -> VertexId {
        let jj = (j - 1).rem_euclid(n as i64) + 1;
        let label = format!("({i},{jj})");
        g.vertices()
            .find(|&v| g.label(v) == Some(label.as_str()))
            .expect("product labels cover the grid")
    };
    let cycle_through = |points: &[VertexId]| -> Walk {
        let mut vertices = points.to_vec();
        vertices.push(points[0]);
        let edges = vertices
            .windows(2)
            .map(|p| g.edges_between(p[0], p[1])[0])
            .collect();
        Walk::new(vertices, edges).expect("cycle shape")
    };

    let mut expected: BTreeSet<CanonicalWalk> = BTreeSet::new();
    let mut squares = 0usize;
    for i in 1..n as i64 {
        for j in 1..=n as i64 {
            let square = [
                lookup(i, j),
                lookup(i + 1, j),
                lookup(i + 1, j + 1),
                lookup(i, j + 1),
            ];
            expected.insert(CanonicalWalk::of_cyclic(&cycle_through(&square)));
            squares += 1;
        }
    }
    let mut rings = 0usize;
    for i in 1..=n as i64 {
        let ring: Vec<VertexId> = (1..=n as i64).map(|j| lookup(i, j)).collect();
        expected.insert(CanonicalWalk::of_cyclic(&cycle_through(&ring)));
        rings += 1;
    }

    let report = if found == expected {
        VerificationReport::pass(
            &claim,
            &instance,
            format!("{squares} squares plus {rings} ring cycles, nothing else"),
        )
    } else {
        let extra: Vec<String> = found
            .difference(&expected)
            .take(4)
            .map(|c| c.walk().to_string())
            .collect();
        let missing: Vec<String> = expected
            .difference(&found)
            .take(4)
            .map(|c| c.walk().to_string())
            .collect();
        VerificationReport::fail(
            &claim,
            &instance,
            format!(
                "cycle census mismatch: {} found, {} expected",
                found.len(),
                expected.len()
            ),
            extra.into_iter().chain(missing).collect(),
        )
    };
    Ok(report.with_timing(started.elapsed().as_millis(), budget.used()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let g = build(FamilySpec::LoopPair).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_loop_at(VertexId(0)) && g.has_loop_at(VertexId(1)));

        let g = build(FamilySpec::Dipole(5)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(VertexId(0), VertexId(1)), 5);

        let g = build(FamilySpec::Wheel(6)).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 12);

        assert!(build(FamilySpec::TorusStrip(6)).is_err());
        assert!(build(FamilySpec::Dipole(0)).is_err());
    }

    #[test]
    fn build_is_deterministic() {
        for spec in [
            FamilySpec::Wheel(6),
            FamilySpec::TorusStrip(5),
            FamilySpec::CompleteBipartite(2, 3),
        ] {
            assert_eq!(build(spec).unwrap(), build(spec).unwrap());
        }
    }

    #[test]
    fn counterexample_hosts_grow_with_length() {
        assert!(iso_counterexample(0).is_err());
        let g = iso_counterexample(1).unwrap();
        assert_eq!(g.vertex_count(), 49);
        let g = iso_counterexample(2).unwrap();
        assert_eq!(g.vertex_count(), 81);
    }

    #[test]
    fn coordinate_check_examples() {
        let g = build(FamilySpec::TorusStrip(7)).unwrap();
        let by_label = |s: &str| g.vertices().find(|&v| g.label(v) == Some(s)).unwrap();
        let straight = Walk::new(
            vec![by_label("(2,1)"), by_label("(2,2)"), by_label("(2,3)")],
            vec![
                g.edges_between(by_label("(2,1)"), by_label("(2,2)"))[0],
                g.edges_between(by_label("(2,2)"), by_label("(2,3)"))[0],
            ],
        )
        .unwrap();
        assert!(coordinate_isometry_check(&g, &straight, 1).unwrap());

        let stair = Walk::new(
            vec![
                by_label("(1,1)"),
                by_label("(2,1)"),
                by_label("(2,2)"),
                by_label("(1,2)"),
            ],
            vec![
                g.edges_between(by_label("(1,1)"), by_label("(2,1)"))[0],
                g.edges_between(by_label("(2,1)"), by_label("(2,2)"))[0],
                g.edges_between(by_label("(2,2)"), by_label("(1,2)"))[0],
            ],
        )
        .unwrap();
        assert!(!coordinate_isometry_check(&g, &stair, 1).unwrap());
    }

    #[test]
    fn dipole_negative_results_for_odd_lengths() {
        for len in [1usize, 3] {
            let g = build(FamilySpec::Dipole(len as u32 + 2)).unwrap();
            let r = verify_no_avoidable(&g, WalkKind::Trail, len);
            assert!(r.pass, "{}", r.detail);
        }
    }
}
