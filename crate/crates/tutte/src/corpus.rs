//! Deterministic corpus of small connected multigraphs for cross-method
//! checks, plus gluing helpers that assemble graphs with known 2-cuts.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::MultiGraph;

pub struct CorpusEntry {
    pub name: String,
    pub graph: MultiGraph,
}

fn entry(name: &str, graph: MultiGraph) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        graph,
    }
}

/// Connected multigraphs with at most 12 edges: structured families plus
/// seeded random graphs with loops and parallel edges. Order and content are
/// stable across runs.
pub fn small_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    out.push(entry("k2", MultiGraph::path(1)));
    for n in 2..=4 {
        out.push(entry(&format!("path-{}", n), MultiGraph::path(n)));
    }
    for n in 2..=8 {
        out.push(entry(&format!("cycle-{}", n), MultiGraph::cycle(n)));
    }
    for k in 2..=5 {
        out.push(entry(&format!("dipole-{}", k), MultiGraph::dipole(k)));
    }
    out.push(entry("complete-4", MultiGraph::complete(4)));
    out.push(entry("complete-5", MultiGraph::complete(5)));
    for n in 3..=5u32 {
        // Hub 0 joined to the path 1..n.
        let mut edges: Vec<(u32, u32)> = (1..=n).map(|i| (0, i)).collect();
        edges.extend((1..n).map(|i| (i, i + 1)));
        out.push(entry(
            &format!("fan-{}", n),
            MultiGraph::new(n + 1, edges).unwrap(),
        ));
        // Same with the rim closed.
        let mut edges: Vec<(u32, u32)> = (1..=n).map(|i| (0, i)).collect();
        edges.extend((1..=n).map(|i| (i, if i == n { 1 } else { i + 1 })));
        out.push(entry(
            &format!("wheel-{}", n),
            MultiGraph::new(n + 1, edges).unwrap(),
        ));
    }
    out.push(entry("theta", {
        let c6 = MultiGraph::cycle(6);
        c6.add_edge(0, 3).unwrap()
    }));
    out.push(entry(
        "bowtie",
        MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
    ));
    out.push(entry(
        "diamond",
        MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]).unwrap(),
    ));
    out.push(entry(
        "looped-triangle",
        MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 0)]).unwrap(),
    ));
    out.push(entry(
        "lolly",
        MultiGraph::new(2, vec![(0, 1), (1, 1)]).unwrap(),
    ));
    out.push(entry(
        "doubled-triangle",
        MultiGraph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)]).unwrap(),
    ));
    out.push(entry("cube", {
        let edges = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ];
        MultiGraph::new(8, edges).unwrap()
    }));

    let mut rng = ChaCha8Rng::seed_from_u64(0x7457e);
    for idx in 0..25 {
        let n: u32 = rng.gen_range(3..=7);
        // Random spanning tree keeps the graph connected by construction.
        let mut edges: Vec<(u32, u32)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let budget = 12 - edges.len();
        let extra = rng.gen_range(1..=budget.min(6));
        for _ in 0..extra {
            let roll: f64 = rng.gen();
            if roll < 0.15 {
                let v = rng.gen_range(0..n);
                edges.push((v, v));
            } else if roll < 0.35 {
                let e = rng.gen_range(0..edges.len());
                edges.push(edges[e]);
            } else {
                edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
            }
        }
        out.push(entry(
            &format!("random-{:02}", idx),
            MultiGraph::new(n, edges).unwrap(),
        ));
    }
    out
}

/// Union of two graphs overlapping in exactly the two pinned vertices:
/// `pins2` of h2 land on `pins1` of h1, everything else stays disjoint.
pub fn glue_on_two(
    h1: &MultiGraph,
    pins1: (u32, u32),
    h2: &MultiGraph,
    pins2: (u32, u32),
) -> MultiGraph {
    let mut map = vec![u32::MAX; h2.vertex_count() as usize];
    map[pins2.0 as usize] = pins1.0;
    map[pins2.1 as usize] = pins1.1;
    let mut next = h1.vertex_count();
    for slot in map.iter_mut() {
        if *slot == u32::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = h1.edges().to_vec();
    edges.extend(
        h2.edges()
            .iter()
            .map(|&(a, b)| (map[a as usize], map[b as usize])),
    );
    MultiGraph::new(next, edges).unwrap()
}

/// Union of two graphs sharing exactly one vertex (`anchors.0` of each),
/// plus a link edge between their respective `anchors.1` vertices.
pub fn glue_shared_vertex_with_edge(
    h1: &MultiGraph,
    anchors1: (u32, u32),
    h2: &MultiGraph,
    anchors2: (u32, u32),
) -> MultiGraph {
    let mut map = vec![u32::MAX; h2.vertex_count() as usize];
    map[anchors2.0 as usize] = anchors1.0;
    let mut next = h1.vertex_count();
    for slot in map.iter_mut() {
        if *slot == u32::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = h1.edges().to_vec();
    edges.extend(
        h2.edges()
            .iter()
            .map(|&(a, b)| (map[a as usize], map[b as usize])),
    );
    edges.push((anchors1.1, map[anchors2.1 as usize]));
    MultiGraph::new(next, edges).unwrap()
}

/// Pieces with marked vertex pairs for splitting checks.
pub fn split_pieces() -> Vec<(String, MultiGraph, (u32, u32))> {
    vec![
        ("k2".into(), MultiGraph::path(1), (0, 1)),
        ("path-2".into(), MultiGraph::path(2), (0, 2)),
        ("path-3".into(), MultiGraph::path(3), (0, 3)),
        ("cycle-4".into(), MultiGraph::cycle(4), (0, 2)),
        ("triangle".into(), MultiGraph::cycle(3), (0, 1)),
        ("dipole-2".into(), MultiGraph::dipole(2), (0, 1)),
        (
            "diamond".into(),
            MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]).unwrap(),
            (0, 3),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_connected_and_bounded() {
        let corpus = small_corpus();
        assert!(corpus.len() >= 50, "only {} entries", corpus.len());
        for e in &corpus {
            assert!(e.graph.is_connected(), "{} disconnected", e.name);
            assert!(e.graph.edge_count() <= 12, "{} too large", e.name);
        }
        let loops = corpus
            .iter()
            .any(|e| (0..e.graph.edge_count()).any(|i| e.graph.is_loop(i).unwrap()));
        let parallels = corpus.iter().any(|e| {
            let mut seen = std::collections::HashSet::new();
            e.graph
                .edges()
                .iter()
                .any(|&(a, b)| !seen.insert((a.min(b), a.max(b))))
        });
        assert!(loops && parallels, "corpus must exercise multigraph cases");
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = small_corpus();
        let b = small_corpus();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.graph.edges(), y.graph.edges());
        }
    }

    #[test]
    fn gluing_shapes() {
        let k2 = MultiGraph::path(1);
        let c2 = glue_on_two(&k2, (0, 1), &k2, (0, 1));
        assert_eq!(c2.vertex_count(), 2);
        assert_eq!(c2.edge_count(), 2);
        let p3 = MultiGraph::path(2);
        let c4 = glue_on_two(&p3, (0, 2), &p3, (0, 2));
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        let tri = glue_shared_vertex_with_edge(&k2, (0, 1), &k2, (0, 1));
        assert_eq!(tri.vertex_count(), 3);
        assert_eq!(tri.edge_count(), 3);
    }
}
