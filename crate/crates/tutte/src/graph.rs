//! Labeled multigraphs with loops and parallel edges.
//!
//! All rewrites (deletion, contraction, identification) return new values.
//! After a merge, the merged vertex takes the smallest index of the merged
//! set and the remaining labels are compacted to 0..n-1 in order, so rewrite
//! chains produce deterministic labelings.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} does not exist")]
    UnknownEdge(usize),
    #[error("vertex {0} does not exist")]
    UnknownVertex(u32),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Edge ids are positions in the edge list; rewrites renumber densely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

impl MultiGraph {
    pub fn new(vertex_count: u32, edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        for &(a, b) in &edges {
            let bad = if a >= vertex_count {
                Some(a)
            } else if b >= vertex_count {
                Some(b)
            } else {
                None
            };
            if let Some(v) = bad {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(MultiGraph {
            vertex_count,
            edges,
        })
    }

    /// Cycle on n >= 1 vertices; n = 1 is a single loop, n = 2 a double edge.
    pub fn cycle(n: u32) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph {
            vertex_count: n,
            edges,
        }
    }

    /// Path with n edges (n + 1 vertices).
    pub fn path(n: u32) -> Self {
        let edges = (0..n).map(|i| (i, i + 1)).collect();
        MultiGraph {
            vertex_count: n + 1,
            edges,
        }
    }

    /// Two vertices joined by k parallel edges.
    pub fn dipole(k: u32) -> Self {
        MultiGraph {
            vertex_count: 2,
            edges: (0..k).map(|_| (0, 1)).collect(),
        }
    }

    pub fn complete(n: u32) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                edges.push((a, b));
            }
        }
        MultiGraph {
            vertex_count: n,
            edges,
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(u32, u32), GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn is_loop(&self, e: usize) -> Result<bool, GraphError> {
        let (a, b) = self.edge(e)?;
        Ok(a == b)
    }

    pub fn is_bridge(&self, e: usize) -> Result<bool, GraphError> {
        self.edge(e)?;
        Ok(self.bridge_flags()[e])
    }

    /// Bridge status of every edge in one DFS pass (parallel edges and loops
    /// are never bridges).
    pub fn bridge_flags(&self) -> Vec<bool> {
        let n = self.vertex_count as usize;
        let m = self.edges.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                adj[a as usize].push((b as usize, id));
                adj[b as usize].push((a as usize, id));
            }
        }
        let mut flags = vec![false; m];
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut timer = 0;
        // Iterative DFS: (vertex, entering edge id, next adjacency index).
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for start in 0..n {
            if disc[start] != usize::MAX {
                continue;
            }
            disc[start] = timer;
            low[start] = timer;
            timer += 1;
            stack.push((start, usize::MAX, 0));
            while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
                if *idx < adj[v].len() {
                    let (to, id) = adj[v][*idx];
                    *idx += 1;
                    if id == pe {
                        continue;
                    }
                    if disc[to] == usize::MAX {
                        disc[to] = timer;
                        low[to] = timer;
                        timer += 1;
                        stack.push((to, id, 0));
                    } else {
                        low[v] = low[v].min(disc[to]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (parent, _, _)) = stack.last_mut() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            flags[pe] = true;
                        }
                    }
                }
            }
        }
        flags
    }

    pub fn delete_edge(&self, e: usize) -> Result<MultiGraph, GraphError> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(MultiGraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Copy of the graph with one more edge, appended last in id order.
    pub fn add_edge(&self, a: u32, b: u32) -> Result<MultiGraph, GraphError> {
        let check = |t: u32| {
            if t >= self.vertex_count {
                Err(GraphError::UnknownVertex(t))
            } else {
                Ok(())
            }
        };
        check(a)?;
        check(b)?;
        let mut edges = self.edges.clone();
        edges.push((a, b));
        Ok(MultiGraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Contract e: remove it and merge its endpoints. A parallel edge of e
    /// becomes a loop; contracting a loop is the same as deleting it.
    pub fn contract_edge(&self, e: usize) -> Result<MultiGraph, GraphError> {
        let (a, b) = self.edge(e)?;
        let deleted = self.delete_edge(e)?;
        if a == b {
            return Ok(deleted);
        }
        deleted.identify_vertices(&[a, b])
    }

    /// Merge a vertex set into one vertex; all edges remain (edges inside the
    /// set become loops).
    pub fn identify_vertices(&self, set: &[u32]) -> Result<MultiGraph, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        for &v in set {
            if v >= self.vertex_count {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        let target = *set.iter().min().unwrap();
        let mut remap: Vec<u32> = (0..self.vertex_count).collect();
        for &v in set {
            remap[v as usize] = target;
        }
        // Compact surviving labels, preserving order.
        let mut next = 0u32;
        let mut compact = vec![u32::MAX; self.vertex_count as usize];
        for v in 0..self.vertex_count {
            if remap[v as usize] == v {
                compact[v as usize] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                (
                    compact[remap[a as usize] as usize],
                    compact[remap[b as usize] as usize],
                )
            })
            .collect();
        Ok(MultiGraph {
            vertex_count: next,
            edges,
        })
    }

    /// Disjoint union with vg and vh identified. Keeps self's labels; the
    /// other graph's vertices follow in order, with vh mapped onto vg.
    pub fn one_point_join(
        &self,
        vg: u32,
        other: &MultiGraph,
        vh: u32,
    ) -> Result<MultiGraph, GraphError> {
        if vg >= self.vertex_count {
            return Err(GraphError::UnknownVertex(vg));
        }
        if vh >= other.vertex_count {
            return Err(GraphError::UnknownVertex(vh));
        }
        let mut map = vec![0u32; other.vertex_count as usize];
        let mut next = self.vertex_count;
        for v in 0..other.vertex_count {
            if v == vh {
                map[v as usize] = vg;
            } else {
                map[v as usize] = next;
                next += 1;
            }
        }
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|&(a, b)| (map[a as usize], map[b as usize])),
        );
        Ok(MultiGraph {
            vertex_count: next,
            edges,
        })
    }

    /// Number of connected components of (V, A) for an edge subset A.
    pub fn component_count(&self, edge_subset: &[usize]) -> Result<usize, GraphError> {
        let mut uf = UnionFind::new(self.vertex_count as usize);
        for &e in edge_subset {
            let (a, b) = self.edge(e)?;
            uf.union(a as usize, b as usize);
        }
        Ok(uf.component_count())
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count as usize);
        for &(a, b) in &self.edges {
            uf.union(a as usize, b as usize);
        }
        uf.component_count() == 1
    }

    /// Biconnected blocks of a connected graph. Bridges and loops are their
    /// own blocks; the Tutte polynomial of the whole is the product over
    /// blocks. Non-loop blocks come in DFS completion order, then loop blocks
    /// in edge order; each block's vertices are relabeled 0..k ascending.
    pub fn blocks(&self) -> Result<Vec<MultiGraph>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.vertex_count as usize;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                adj[a as usize].push((b as usize, id));
                adj[b as usize].push((a as usize, id));
            }
        }
        let mut out = Vec::new();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut timer = 0;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        stack.push((0, usize::MAX, 0));
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let (to, id) = adj[v][*idx];
                *idx += 1;
                if id == pe {
                    continue;
                }
                if disc[to] == usize::MAX {
                    disc[to] = timer;
                    low[to] = timer;
                    timer += 1;
                    edge_stack.push(id);
                    stack.push((to, id, 0));
                } else if disc[to] < disc[v] {
                    edge_stack.push(id);
                    low[v] = low[v].min(disc[to]);
                }
            } else {
                stack.pop();
                if let Some(&mut (parent, _, _)) = stack.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        // Everything stacked since the tree edge into v is one block.
                        let mut ids = Vec::new();
                        while let Some(&top) = edge_stack.last() {
                            ids.push(top);
                            edge_stack.pop();
                            if top == pe {
                                break;
                            }
                        }
                        out.push(self.subgraph_of_edges(&mut ids));
                    }
                }
            }
        }
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                out.push(self.subgraph_of_edges(&mut [id]));
            }
        }
        Ok(out)
    }

    fn subgraph_of_edges(&self, ids: &mut [usize]) -> MultiGraph {
        ids.sort_unstable();
        let mut verts: Vec<u32> = ids
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.edges[e];
                [a, b]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let relabel = |v: u32| verts.binary_search(&v).unwrap() as u32;
        MultiGraph {
            vertex_count: verts.len() as u32,
            edges: ids
                .iter()
                .map(|&e| {
                    let (a, b) = self.edges[e];
                    (relabel(a), relabel(b))
                })
                .collect(),
        }
    }

    /// Text format: a `vertices N` header then one `u v` line per edge.
    /// Lines starting with `#` are comments.
    pub fn parse_text(text: &str) -> Result<MultiGraph, GraphError> {
        let mut vertex_count: Option<u32> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if vertex_count.is_none() {
                let rest = line.strip_prefix("vertices").ok_or(GraphError::Parse {
                    line: lineno,
                    msg: "expected `vertices N` header".to_string(),
                })?;
                let n = rest.trim().parse().map_err(|_| GraphError::Parse {
                    line: lineno,
                    msg: "bad vertex count".to_string(),
                })?;
                vertex_count = Some(n);
                continue;
            }
            let mut it = line.split_whitespace();
            let (a, b) = (it.next(), it.next());
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: "expected `u v`".to_string(),
                });
            }
            match (
                a.and_then(|s| s.parse().ok()),
                b.and_then(|s| s.parse().ok()),
            ) {
                (Some(a), Some(b)) => edges.push((a, b)),
                _ => {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: "expected `u v`".to_string(),
                    })
                }
            }
        }
        let vertex_count = vertex_count.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `vertices N` header".to_string(),
        })?;
        MultiGraph::new(vertex_count, edges).map_err(|e| GraphError::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count);
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Sorted degree sequence (loops count twice).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count as usize];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg.sort_unstable();
        deg
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub(crate) fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.components -= 1;
        true
    }

    pub(crate) fn component_count(&self) -> usize {
        self.components
    }
}
