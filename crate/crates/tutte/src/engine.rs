//! Tutte polynomial computation: subset expansion, deletion-contraction,
//! two-vertex splitting, and a Kirchhoff spanning-tree oracle.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{GraphError, MultiGraph, UnionFind};
use crate::poly::{Poly, PolyError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("subset expansion over {edges} edges exceeds the limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Default cap for the 2^|E| subset oracle (~4M subsets).
pub const DEFAULT_SUBSET_EDGE_LIMIT: usize = 22;

/// Rank-nullity subset expansion:
/// T(G) = sum over A of (x-1)^(r(E)-r(A)) * (y-1)^(|A|-r(A)),
/// with r(A) = |V| - (number of components of (V, A)).
pub fn tutte_subset(g: &MultiGraph) -> Result<Poly, EngineError> {
    tutte_subset_with_limit(g, DEFAULT_SUBSET_EDGE_LIMIT)
}

pub fn tutte_subset_with_limit(g: &MultiGraph, limit: usize) -> Result<Poly, EngineError> {
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    let m = g.edge_count();
    if m > limit {
        return Err(EngineError::TooManyEdges { edges: m, limit });
    }
    let n = g.vertex_count() as usize;
    let rank_full = n - 1;
    // counts[i][j] = number of subsets with corank i and nullity j.
    let mut counts = vec![vec![0u64; m + 1]; n];
    let edges = g.edges();
    for mask in 0u64..(1u64 << m) {
        let mut uf = UnionFind::new(n);
        let mut size = 0usize;
        for (e, &(a, b)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                size += 1;
                uf.union(a as usize, b as usize);
            }
        }
        let rank = n - uf.component_count();
        counts[rank_full - rank][size - rank] += 1;
    }
    let xm1 = Poly::x().sub(&Poly::one());
    let ym1 = Poly::y().sub(&Poly::one());
    let mut xp = vec![Poly::one()];
    for i in 1..n {
        xp.push(xp[i - 1].mul(&xm1));
    }
    let mut yp = vec![Poly::one()];
    for j in 1..=m {
        yp.push(yp[j - 1].mul(&ym1));
    }
    let mut out = Poly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                out = out.add(&xp[i].mul(&yp[j]).scale(c));
            }
        }
    }
    Ok(out)
}

/// Which eligible edge the deletion-contraction recursion branches on.
/// The secondary heuristic exists to cross-check order independence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchRule {
    /// First edge in id order that is neither a loop nor a bridge.
    FirstEligible,
    /// Eligible edge with the most parallel copies (ties by id order).
    MaxMultiplicity,
}

/// Deletion-contraction with memoization, factored through biconnected
/// blocks. Loops contribute y factors, bridges x factors, and the recursion
/// branches only on ordinary edges.
pub fn tutte_delcon(g: &MultiGraph) -> Result<Poly, EngineError> {
    tutte_delcon_with_rule(g, BranchRule::FirstEligible)
}

pub fn tutte_delcon_with_rule(g: &MultiGraph, rule: BranchRule) -> Result<Poly, EngineError> {
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    let mut memo: HashMap<MemoKey, Poly> = HashMap::new();
    let mut out = Poly::one();
    for block in g.blocks()? {
        out = out.mul(&delcon_connected(&block, rule, &mut memo));
    }
    Ok(out)
}

/// Memo key: the edge multiset with endpoints normalized (a <= b) and sorted.
/// No isomorphism canonicalization — hits are best-effort, correctness does
/// not depend on them.
#[derive(PartialEq, Eq, Hash)]
struct MemoKey {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

fn memo_key(g: &MultiGraph) -> MemoKey {
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    MemoKey {
        vertex_count: g.vertex_count(),
        edges,
    }
}

fn delcon_connected(g: &MultiGraph, rule: BranchRule, memo: &mut HashMap<MemoKey, Poly>) -> Poly {
    // Peel loops and bridges without branching: T(G) = y*T(G-loop),
    // T(G) = x*T(G/bridge).
    let mut g = g.clone();
    let mut x_exp = 0u32;
    let mut y_exp = 0u32;
    loop {
        if let Some(e) = (0..g.edge_count()).find(|&e| g.is_loop(e).unwrap()) {
            y_exp += 1;
            g = g.delete_edge(e).unwrap();
            continue;
        }
        let bridges = g.bridge_flags();
        if let Some(e) = bridges.iter().position(|&b| b) {
            x_exp += 1;
            g = g.contract_edge(e).unwrap();
            continue;
        }
        break;
    }
    let factor = Poly::term(1, x_exp, y_exp);
    if g.edge_count() == 0 {
        return factor;
    }
    // Every remaining edge is ordinary; pick the branch edge per the rule.
    let branch = match rule {
        BranchRule::FirstEligible => 0,
        BranchRule::MaxMultiplicity => {
            let mut mult: HashMap<(u32, u32), usize> = HashMap::new();
            for &(a, b) in g.edges() {
                *mult.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
            (0..g.edge_count())
                .max_by_key(|&e| {
                    let (a, b) = g.edges()[e];
                    (mult[&(a.min(b), a.max(b))], usize::MAX - e)
                })
                .unwrap()
        }
    };
    let key = memo_key(&g);
    if let Some(hit) = memo.get(&key) {
        return factor.mul(hit);
    }
    let deleted = delcon_connected(&g.delete_edge(branch).unwrap(), rule, memo);
    let contracted = delcon_connected(&g.contract_edge(branch).unwrap(), rule, memo);
    let value = deleted.add(&contracted);
    memo.insert(key, value.clone());
    factor.mul(&value)
}

/// The four polynomials of the two-vertex splitting formulas:
/// T(H1), T(H1/{v,u}), T(H2), T(H2/{v,u}).
#[derive(Clone, Debug)]
pub struct SplitParts {
    pub t_h1: Poly,
    pub t_h1_merged: Poly,
    pub t_h2: Poly,
    pub t_h2_merged: Poly,
}

impl SplitParts {
    /// Assemble the parts by deletion-contraction from the two pieces and
    /// their shared (or designated) vertex pairs.
    pub fn from_graphs(
        h1: &MultiGraph,
        marks1: (u32, u32),
        h2: &MultiGraph,
        marks2: (u32, u32),
    ) -> Result<SplitParts, EngineError> {
        Ok(SplitParts {
            t_h1: tutte_delcon(h1)?,
            t_h1_merged: tutte_delcon(&h1.identify_vertices(&[marks1.0, marks1.1])?)?,
            t_h2: tutte_delcon(h2)?,
            t_h2_merged: tutte_delcon(&h2.identify_vertices(&[marks2.0, marks2.1])?)?,
        })
    }
}

/// xy - x - y, the common denominator of the splitting formulas and the
/// transfer coefficients.
pub(crate) fn splitting_denominator() -> Poly {
    Poly::parse("xy - x - y").unwrap()
}

/// T of a graph glued from H1 and H2 along exactly the two vertices v, u:
/// [(y-1) T1 T2 + (x-1) T1' T2' - T1 T2' - T1' T2] / (xy - x - y).
pub fn split_two_cut(parts: &SplitParts) -> Result<Poly, EngineError> {
    let ym1 = Poly::y().sub(&Poly::one());
    let xm1 = Poly::x().sub(&Poly::one());
    let num = ym1
        .mul(&parts.t_h1)
        .mul(&parts.t_h2)
        .add(&xm1.mul(&parts.t_h1_merged).mul(&parts.t_h2_merged))
        .sub(&parts.t_h1.mul(&parts.t_h2_merged))
        .sub(&parts.t_h1_merged.mul(&parts.t_h2));
    Ok(num.div_exact(&splitting_denominator())?)
}

/// Variant for two pieces sharing one vertex v plus a connecting edge u1-u2,
/// with each part merged over its own {v, u_i}:
/// [(xy-x-1) T1 T2 + (x-1) T1' T2' - T1 T2' - T1' T2] / (xy - x - y).
pub fn split_two_cut_with_edge(parts: &SplitParts) -> Result<Poly, EngineError> {
    let lead = Poly::parse("xy - x - 1").unwrap();
    let xm1 = Poly::x().sub(&Poly::one());
    let num = lead
        .mul(&parts.t_h1)
        .mul(&parts.t_h2)
        .add(&xm1.mul(&parts.t_h1_merged).mul(&parts.t_h2_merged))
        .sub(&parts.t_h1.mul(&parts.t_h2_merged))
        .sub(&parts.t_h1_merged.mul(&parts.t_h2));
    Ok(num.div_exact(&splitting_denominator())?)
}

/// Spanning trees by the matrix-tree theorem: any cofactor of the integer
/// Laplacian, via fraction-free (Bareiss) elimination. Loops are ignored.
pub fn count_spanning_trees_kirchhoff(g: &MultiGraph) -> Result<BigInt, EngineError> {
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    let n = g.vertex_count() as usize;
    if n == 1 {
        return Ok(BigInt::one());
    }
    // Laplacian minor: strike row/column 0.
    let k = n - 1;
    let mut m = vec![vec![BigInt::zero(); k]; k];
    for &(a, b) in g.edges() {
        let (a, b) = (a as usize, b as usize);
        if a == b {
            continue;
        }
        if a > 0 {
            m[a - 1][a - 1] += 1;
        }
        if b > 0 {
            m[b - 1][b - 1] += 1;
        }
        if a > 0 && b > 0 {
            m[a - 1][b - 1] -= 1;
            m[b - 1][a - 1] -= 1;
        }
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for step in 0..k {
        if m[step][step].is_zero() {
            let swap = (step + 1..k).find(|&r| !m[r][step].is_zero());
            match swap {
                Some(r) => {
                    m.swap(step, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in step + 1..k {
            for j in step + 1..k {
                let t = &m[i][j] * &m[step][step] - &m[i][step] * &m[step][j];
                m[i][j] = t / &prev;
            }
            m[i][step] = BigInt::zero();
        }
        prev = m[step][step].clone();
    }
    Ok((sign * &m[k - 1][k - 1]).abs())
}

/// Theorem-of-duality check: T(g; x, y) = T(d; y, x).
pub fn verify_duality(g: &MultiGraph, d: &MultiGraph) -> Result<bool, EngineError> {
    Ok(tutte_delcon(g)? == tutte_delcon(d)?.swap_vars())
}
