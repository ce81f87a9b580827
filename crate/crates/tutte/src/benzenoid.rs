//! Benzenoid chains: linear chains of hexagons, pyrene chains, and
//! triphenylene chains, with closed-form Tutte polynomials obtained through
//! their fan-like planar duals and exact spanning-tree counts.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;
use serde::Deserialize;

use crate::engine::splitting_denominator;
use crate::fanlike::{FamilyError, MarkedGraph, RecurrenceKernel};
use crate::graph::MultiGraph;
use crate::poly::Poly;

/// The three chain families: hexagons in a row, pyrene units in a row, and
/// triphenylene units in a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainFamily {
    Linear,
    Pyrene,
    Triphenylene,
}

/// T(chain_n) = head*S_n + tail*S_{n-1} over the kernel's S sequence.
#[derive(Clone, Debug)]
pub struct FamilyClosedForm {
    pub head: Poly,
    pub tail: Poly,
    pub kernel: RecurrenceKernel,
}

impl FamilyClosedForm {
    pub fn evaluate(&self, n: usize) -> Poly {
        let mut prev = Poly::zero();
        let mut cur = Poly::one();
        for _ in 1..n {
            let next = self.kernel.trace.mul(&cur).sub(&self.kernel.det.mul(&prev));
            prev = cur;
            cur = next;
        }
        self.head.mul(&cur).add(&self.tail.mul(&prev))
    }
}

/// The three building-block polynomials of the pyrene and triphenylene
/// closed forms. Fixed constants of each family; see the literals below.
#[derive(Clone, Debug)]
pub struct IJKConstants {
    pub i: Poly,
    pub j: Poly,
    pub k: Poly,
}

// The building-block constants, stored verbatim in canonical text. They are
// tied to the reconstructed dual bases by the identities (D = dual base,
// with its marks v, u, w):
//   I     = T(D; y, x)
//   J     = T(D/{v,u}; y, x)
//   J + K = T((D + vw)/{v,u}; y, x)
// which the tests check coefficientwise.
const PYRENE_I: &str = "x^13 + 4*x^12 + 10*x^11 + 20*x^10 + 2*x^9*y + 33*x^9 + 8*x^8*y + 46*x^8 + 18*x^7*y + 56*x^7 + x^6*y^2 + 31*x^6*y + 60*x^6 + 6*x^5*y^2 + 42*x^5*y + 56*x^5 + 11*x^4*y^2 + 49*x^4*y + 44*x^4 + 2*x^3*y^3 + 17*x^3*y^2 + 44*x^3*y + 29*x^3 + 2*x^2*y^3 + 17*x^2*y^2 + 34*x^2*y + 15*x^2 + 4*x*y^3 + 17*x*y^2 + 19*x*y + 4*x + y^4 + 5*y^3 + 8*y^2 + 4*y";
const PYRENE_J: &str = "x^14 + 3*x^13 + 6*x^12 + 10*x^11 + x^10*y + 14*x^10 + 4*x^9*y + 16*x^9 + 7*x^8*y + 16*x^8 + 10*x^7*y + 14*x^7 + 2*x^6*y^2 + 11*x^6*y + 10*x^6 + 2*x^5*y^2 + 10*x^5*y + 6*x^5 + 3*x^4*y^2 + 7*x^4*y + 3*x^4 + 3*x^3*y^2 + 4*x^3*y + x^3 + x^2*y^3 + 2*x^2*y^2 + x^2*y";
const PYRENE_K: &str = "x^15 + 2*x^14 + 3*x^13 + 4*x^12 + 5*x^11 + 2*x^10*y + 4*x^10 + 2*x^9*y + 3*x^9 + 2*x^8*y + 2*x^8 + 2*x^7*y + x^7 + 2*x^6*y + x^5*y^2";
const TRIPHENYLENE_I: &str = "x^15 + 4*x^14 + 10*x^13 + 20*x^12 + 2*x^11*y + 33*x^11 + 8*x^10*y + 46*x^10 + 18*x^9*y + 56*x^9 + 32*x^8*y + 60*x^8 + 3*x^7*y^2 + 46*x^7*y + 56*x^7 + 9*x^6*y^2 + 53*x^6*y + 46*x^6 + 15*x^5*y^2 + 52*x^5*y + 33*x^5 + x^4*y^3 + 20*x^4*y^2 + 43*x^4*y + 20*x^4 + 3*x^3*y^3 + 21*x^3*y^2 + 28*x^3*y + 10*x^3 + 4*x^2*y^3 + 15*x^2*y^2 + 15*x^2*y + 4*x^2 + 4*x*y^3 + 9*x*y^2 + 6*x*y + x + y^4 + 3*y^3 + 3*y^2 + y";
const TRIPHENYLENE_J: &str = "x^16 + 3*x^15 + 6*x^14 + 10*x^13 + x^12*y + 14*x^12 + 4*x^11*y + 16*x^11 + 7*x^10*y + 16*x^10 + 10*x^9*y + 14*x^9 + x^8*y^2 + 12*x^8*y + 10*x^8 + 3*x^7*y^2 + 10*x^7*y + 6*x^7 + 3*x^6*y^2 + 7*x^6*y + 3*x^6 + 3*x^5*y^2 + 4*x^5*y + x^5 + x^4*y^3 + 2*x^4*y^2 + x^4*y";
const TRIPHENYLENE_K: &str = "x^17 + 2*x^16 + 3*x^15 + 4*x^14 + 5*x^13 + 2*x^12*y + 4*x^12 + 2*x^11*y + 3*x^11 + 2*x^10*y + 2*x^10 + 2*x^9*y + x^9 + x^8*y^2 + x^8*y";

pub fn pyrene_constants() -> IJKConstants {
    IJKConstants {
        i: Poly::parse(PYRENE_I).unwrap(),
        j: Poly::parse(PYRENE_J).unwrap(),
        k: Poly::parse(PYRENE_K).unwrap(),
    }
}

pub fn triphenylene_constants() -> IJKConstants {
    IJKConstants {
        i: Poly::parse(TRIPHENYLENE_I).unwrap(),
        j: Poly::parse(TRIPHENYLENE_J).unwrap(),
        k: Poly::parse(TRIPHENYLENE_K).unwrap(),
    }
}

// ---- chain construction on the hex grid ----

// Pointy-top axial coordinates. Each hexagon cell (q, r) owns six corners in
// two rows; corners are shared between adjacent cells.
type Corner = (bool, i32, i32);

fn hex_corners(q: i32, r: i32) -> [Corner; 6] {
    [
        (true, q, r),
        (false, q + 1, r - 1),
        (true, q, r + 1),
        (false, q, r),
        (true, q - 1, r + 1),
        (false, q, r - 1),
    ]
}

/// Simple plane graph of a set of hexagon cells: shared corners become
/// shared vertices, shared sides become single edges. Vertices are numbered
/// in first-visit order, which is deterministic in the cell order.
fn benzenoid_graph(cells: &[(i32, i32)]) -> MultiGraph {
    use std::collections::HashMap;
    let mut ids: HashMap<Corner, u32> = HashMap::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen: std::collections::HashSet<(u32, u32)> = std::collections::HashSet::new();
    for &(q, r) in cells {
        let corners = hex_corners(q, r);
        let mut ring = [0u32; 6];
        for (slot, c) in corners.iter().enumerate() {
            let next = ids.len() as u32;
            ring[slot] = *ids.entry(*c).or_insert(next);
        }
        for s in 0..6 {
            let (a, b) = (ring[s], ring[(s + 1) % 6]);
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push((a, b));
            }
        }
    }
    MultiGraph::new(ids.len() as u32, edges).unwrap()
}

fn unit_cells(family: ChainFamily) -> (&'static [(i32, i32)], (i32, i32)) {
    match family {
        ChainFamily::Linear => (&[(0, 0)], (1, 0)),
        ChainFamily::Pyrene => (&[(0, 0), (1, 0), (1, -1), (0, 1)], (2, 0)),
        ChainFamily::Triphenylene => (&[(0, 0), (1, 0), (-1, 1), (0, -1)], (-3, 1)),
    }
}

/// The chain with n units as a simple plane graph.
pub fn build_chain(family: ChainFamily, n: usize) -> Result<MultiGraph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadN { n, min: 1 });
    }
    let (unit, delta) = unit_cells(family);
    let mut cells = Vec::with_capacity(unit.len() * n);
    for k in 0..n as i32 {
        for &(q, r) in unit {
            cells.push((q + k * delta.0, r + k * delta.1));
        }
    }
    Ok(benzenoid_graph(&cells))
}

/// The marked multigraph base whose fan-like family is the planar dual of
/// the chain: FPlusPlus for the linear chain, PlusGPlus for the other two.
/// The hub mark is the outer face.
pub fn build_dual_base(family: ChainFamily) -> MarkedGraph {
    match family {
        // One hexagon sees the outer face across four sides between its
        // chain neighbors; the end hexagons gain one more via the anchors.
        ChainFamily::Linear => MarkedGraph::new(MultiGraph::dipole(4), 0, 1, None),
        // Faces of one pyrene unit: two side hexagons (1, 2) touching both
        // central ones, top (3) and bottom (4).
        ChainFamily::Pyrene => {
            let edges = vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (0, 1),
                (0, 1),
                (0, 2),
                (0, 2),
                (0, 3),
                (0, 3),
                (0, 3),
                (0, 3),
                (0, 4),
                (0, 4),
                (0, 4),
                (0, 4),
            ];
            MarkedGraph::new(MultiGraph::new(5, edges).unwrap(), 0, 1, Some(2))
        }
        // Faces of one triphenylene unit: the central hexagon (1) and three
        // outer ones (2, 3, 4), of which 2 and 3 carry the chain links.
        ChainFamily::Triphenylene => {
            let edges = vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 2),
                (0, 2),
                (0, 2),
                (0, 2),
                (0, 3),
                (0, 3),
                (0, 3),
                (0, 3),
                (0, 4),
                (0, 4),
                (0, 4),
                (0, 4),
                (0, 4),
            ];
            MarkedGraph::new(MultiGraph::new(5, edges).unwrap(), 0, 2, Some(3))
        }
    }
    .unwrap()
}

/// Closed form of the family, in the chain's own variables.
pub fn closed_form(family: ChainFamily) -> Result<FamilyClosedForm, FamilyError> {
    match family {
        ChainFamily::Linear => Ok(FamilyClosedForm {
            head: Poly::parse("x^5 + x^4 + x^3 + x^2 + x + y").unwrap(),
            tail: Poly::parse("-x^5*y").unwrap(),
            kernel: RecurrenceKernel {
                trace: Poly::parse("x^4 + x^3 + x^2 + x + 1 + y").unwrap(),
                det: Poly::parse("x^4*y").unwrap(),
            },
        }),
        ChainFamily::Pyrene => ijk_closed_form(&pyrene_constants()),
        ChainFamily::Triphenylene => ijk_closed_form(&triphenylene_constants()),
    }
}

/// The pyrene/triphenylene closed form from its I, J, K constants. The
/// transfer entries absorb a y factor because the formula lives on the chain
/// side of the duality, not the dual side.
fn ijk_closed_form(c: &IJKConstants) -> Result<FamilyClosedForm, FamilyError> {
    let denom = splitting_denominator();
    let xm1 = Poly::x().sub(&Poly::one());
    let ym1 = Poly::y().sub(&Poly::one());
    let ij = c.i.add(&c.j);
    let jk = c.j.add(&c.k);
    let head = ij.add(&jk);
    let a = Poly::y().mul(&xm1.mul(&c.i).sub(&c.j)).div_exact(&denom)?;
    let b = ym1.mul(&c.j).sub(&c.i).div_exact(&denom)?;
    let cc = Poly::y().mul(&xm1.mul(&ij).sub(&jk)).div_exact(&denom)?;
    let d = ym1.mul(&jk).sub(&ij).div_exact(&denom)?;
    let tail = cc.mul(&ij).sub(&a.mul(&head));
    let kernel = RecurrenceKernel {
        trace: a.add(&d),
        det: a.mul(&d).sub(&b.mul(&cc)),
    };
    Ok(FamilyClosedForm { head, tail, kernel })
}

/// T(chain_n) by the closed form.
pub fn closed_chain(family: ChainFamily, n: usize) -> Result<Poly, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadN { n, min: 1 });
    }
    Ok(closed_form(family)?.evaluate(n))
}

/// Spanning trees of chain_n: the closed form collapses to an integer
/// recurrence at (1, 1), seeded from the first two members.
pub fn tau_chain(family: ChainFamily, n: usize) -> Result<BigInt, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadN { n, min: 1 });
    }
    let one = BigInt::one();
    let form = closed_form(family)?;
    let trace = form.kernel.trace.eval(&one, &one);
    let det = form.kernel.det.eval(&one, &one);
    let mut prev = form.evaluate(1).eval(&one, &one);
    if n == 1 {
        return Ok(prev);
    }
    let mut cur = form.evaluate(2).eval(&one, &one);
    for _ in 2..n {
        let next = &trace * &cur - &det * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

// ---- golden reference fixtures ----

/// The stored reference polynomials (first two members of the pyrene and
/// triphenylene families, in canonical text) and the spanning-tree table,
/// loaded from the data files shipped with the crate.
pub struct ReferenceFixtures {
    pub pyrene: [Poly; 2],
    pub triphenylene: [Poly; 2],
    pub pyrene_tau: [BigInt; 4],
    pub triphenylene_tau: [BigInt; 4],
}

#[derive(Deserialize)]
struct Manifest {
    polynomials: Vec<ManifestEntry>,
    spanning_trees: SpanningTrees,
}

#[derive(Deserialize)]
struct ManifestEntry {
    family: String,
    n: usize,
    file: String,
}

#[derive(Deserialize)]
struct SpanningTrees {
    pyrene: Vec<u64>,
    triphenylene: Vec<u64>,
}

const MANIFEST: &str = include_str!("../data/manifest.json");

fn fixture_file(name: &str) -> &'static str {
    match name {
        "pyrene_1.txt" => include_str!("../data/pyrene_1.txt"),
        "pyrene_2.txt" => include_str!("../data/pyrene_2.txt"),
        "triphenylene_1.txt" => include_str!("../data/triphenylene_1.txt"),
        "triphenylene_2.txt" => include_str!("../data/triphenylene_2.txt"),
        other => panic!("manifest names unshipped fixture file {other:?}"),
    }
}

pub fn reference_fixtures() -> &'static ReferenceFixtures {
    static FIXTURES: OnceLock<ReferenceFixtures> = OnceLock::new();
    FIXTURES.get_or_init(|| {
        let manifest: Manifest =
            serde_json::from_str(MANIFEST).expect("fixture manifest must parse");
        let mut pyrene: Vec<Poly> = Vec::new();
        let mut triphenylene: Vec<Poly> = Vec::new();
        for entry in &manifest.polynomials {
            let poly = Poly::parse(fixture_file(&entry.file).trim())
                .expect("fixture polynomial must parse");
            match entry.family.as_str() {
                "pyrene" => {
                    assert_eq!(entry.n, pyrene.len() + 1, "fixtures out of order");
                    pyrene.push(poly);
                }
                "triphenylene" => {
                    assert_eq!(entry.n, triphenylene.len() + 1, "fixtures out of order");
                    triphenylene.push(poly);
                }
                other => panic!("manifest names unknown family {other:?}"),
            }
        }
        let taus = |v: &[u64]| -> [BigInt; 4] {
            assert_eq!(v.len(), 4);
            [0, 1, 2, 3].map(|i| BigInt::from(v[i]))
        };
        ReferenceFixtures {
            pyrene: pyrene.try_into().expect("two pyrene fixtures"),
            triphenylene: triphenylene.try_into().expect("two triphenylene fixtures"),
            pyrene_tau: taus(&manifest.spanning_trees.pyrene),
            triphenylene_tau: taus(&manifest.spanning_trees.triphenylene),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{
        count_spanning_trees_kirchhoff, tutte_delcon, tutte_subset, verify_duality,
    };
    use crate::fanlike::{build_family, Family};

    const FAMILIES: [ChainFamily; 3] = [
        ChainFamily::Linear,
        ChainFamily::Pyrene,
        ChainFamily::Triphenylene,
    ];

    #[test]
    fn chain_sizes() {
        for n in 1..=3usize {
            let l = build_chain(ChainFamily::Linear, n).unwrap();
            assert_eq!(l.vertex_count() as usize, 4 * n + 2);
            assert_eq!(l.edge_count(), 5 * n + 1);
            let r = build_chain(ChainFamily::Pyrene, n).unwrap();
            assert_eq!(r.vertex_count() as usize, 14 * n + 2);
            assert_eq!(r.edge_count(), 18 * n + 1);
            let t = build_chain(ChainFamily::Triphenylene, n).unwrap();
            assert_eq!(t.vertex_count() as usize, 16 * n + 2);
            assert_eq!(t.edge_count(), 20 * n + 1);
        }
        assert!(build_chain(ChainFamily::Linear, 0).is_err());
    }

    #[test]
    fn single_hexagon_is_a_cycle() {
        let l1 = build_chain(ChainFamily::Linear, 1).unwrap();
        assert_eq!(
            tutte_delcon(&l1).unwrap(),
            tutte_subset(&MultiGraph::cycle(6)).unwrap()
        );
        assert_eq!(
            closed_chain(ChainFamily::Linear, 1).unwrap(),
            Poly::parse("x^5 + x^4 + x^3 + x^2 + x + y").unwrap()
        );
    }

    #[test]
    fn linear_closed_form_matches_direct() {
        for n in 1..=3 {
            assert_eq!(
                closed_chain(ChainFamily::Linear, n).unwrap(),
                tutte_delcon(&build_chain(ChainFamily::Linear, n).unwrap()).unwrap(),
                "n = {}",
                n
            );
        }
    }

    #[test]
    fn golden_fixture_equality() {
        let fx = reference_fixtures();
        for n in [1, 2] {
            assert_eq!(
                closed_chain(ChainFamily::Pyrene, n).unwrap(),
                fx.pyrene[n - 1],
                "pyrene n = {}",
                n
            );
            assert_eq!(
                closed_chain(ChainFamily::Triphenylene, n).unwrap(),
                fx.triphenylene[n - 1],
                "triphenylene n = {}",
                n
            );
        }
        // Spot values straight off the stored fixtures.
        assert_eq!(fx.pyrene[0].coefficient(6, 2), BigInt::from(5));
        assert_eq!(fx.triphenylene[0].coefficient(0, 1), BigInt::from(1));
    }

    #[test]
    fn constants_match_dual_bases() {
        for (family, c) in [
            (ChainFamily::Pyrene, pyrene_constants()),
            (ChainFamily::Triphenylene, triphenylene_constants()),
        ] {
            let base = build_dual_base(family);
            let g = base.base();
            let i = tutte_delcon(g).unwrap().swap_vars();
            let j = tutte_delcon(&g.identify_vertices(&[base.v(), base.u()]).unwrap())
                .unwrap()
                .swap_vars();
            let anchored = g.add_edge(base.v(), base.w().unwrap()).unwrap();
            let jk = tutte_delcon(&anchored.identify_vertices(&[base.v(), base.u()]).unwrap())
                .unwrap()
                .swap_vars();
            assert_eq!(i, c.i);
            assert_eq!(j, c.j);
            assert_eq!(jk, c.j.add(&c.k));
        }
    }

    #[test]
    fn chain_duality_first_members() {
        for family in FAMILIES {
            let base = build_dual_base(family);
            let shape = if family == ChainFamily::Linear {
                Family::FPlusPlus
            } else {
                Family::PlusGPlus
            };
            for n in [1, 2] {
                let chain = build_chain(family, n).unwrap();
                let dual = build_family(&base, shape, n).unwrap();
                assert!(
                    verify_duality(&chain, &dual).unwrap(),
                    "{:?} n = {}",
                    family,
                    n
                );
            }
        }
    }

    #[test]
    fn unit_closed_forms_match_direct() {
        for family in [ChainFamily::Pyrene, ChainFamily::Triphenylene] {
            for n in 1..=3 {
                assert_eq!(
                    closed_chain(family, n).unwrap(),
                    tutte_delcon(&build_chain(family, n).unwrap()).unwrap(),
                    "{:?} n = {}",
                    family,
                    n
                );
            }
        }
    }

    #[test]
    fn tau_three_way_agreement() {
        let one = BigInt::one();
        for family in FAMILIES {
            for n in 1..=4usize {
                let by_recurrence = tau_chain(family, n).unwrap();
                let by_closed = closed_chain(family, n).unwrap().eval(&one, &one);
                let by_kirchhoff =
                    count_spanning_trees_kirchhoff(&build_chain(family, n).unwrap()).unwrap();
                assert_eq!(by_recurrence, by_closed, "{:?} n = {}", family, n);
                assert_eq!(by_recurrence, by_kirchhoff, "{:?} n = {}", family, n);
            }
        }
    }

    #[test]
    fn tau_reference_values() {
        let fx = reference_fixtures();
        for n in 1..=4usize {
            assert_eq!(
                tau_chain(ChainFamily::Pyrene, n).unwrap(),
                fx.pyrene_tau[n - 1]
            );
            assert_eq!(
                tau_chain(ChainFamily::Triphenylene, n).unwrap(),
                fx.triphenylene_tau[n - 1]
            );
            // The triphenylene chain always has strictly more spanning trees.
            assert!(fx.triphenylene_tau[n - 1] > fx.pyrene_tau[n - 1]);
        }
        assert_eq!(tau_chain(ChainFamily::Linear, 1).unwrap(), BigInt::from(6));
        assert_eq!(
            tau_chain(ChainFamily::Pyrene, 4).unwrap(),
            BigInt::from(1278043619328u64)
        );
        assert_eq!(
            tau_chain(ChainFamily::Triphenylene, 3).unwrap(),
            BigInt::from(1579253616u64)
        );
    }

    #[test]
    fn tau_recurrence_kernels_at_one_one() {
        let at11 = |family| {
            let k = closed_form(family).unwrap().kernel;
            let one = BigInt::one();
            (k.trace.eval(&one, &one), k.det.eval(&one, &one))
        };
        assert_eq!(
            at11(ChainFamily::Linear),
            (BigInt::from(6), BigInt::from(1))
        );
        assert_eq!(
            at11(ChainFamily::Pyrene),
            (BigInt::from(1056), BigInt::from(2304))
        );
        assert_eq!(
            at11(ChainFamily::Triphenylene),
            (BigInt::from(1153), BigInt::from(36))
        );
    }
}
