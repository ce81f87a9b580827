//! Self-check suites behind the `verify` CLI command. Every check returns
//! the first counterexample it finds, so a failure report names a concrete
//! graph or index.

use num_bigint::BigInt;
use num_traits::One;

use crate::benzenoid::{
    build_chain, build_dual_base, closed_chain, closed_form, reference_fixtures, tau_chain,
    ChainFamily,
};
use crate::corpus::{glue_on_two, glue_shared_vertex_with_edge, small_corpus, split_pieces};
use crate::engine::{
    count_spanning_trees_kirchhoff, split_two_cut, split_two_cut_with_edge, tutte_delcon,
    tutte_delcon_with_rule, tutte_subset, verify_duality, BranchRule, SplitParts,
};
use crate::fanlike::{
    build_family, closed_family, s_sequence, s_sum_form, transfer_coeffs, Family, MarkedGraph,
    RecurrenceKernel,
};
use crate::graph::MultiGraph;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Oracles,
    Appendix,
    Duality,
    Corollaries,
}

pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

type Check = (&'static str, fn() -> Result<(), String>);

const ORACLE_CHECKS: &[Check] = &[
    ("subset-vs-delcon", subset_vs_delcon),
    (
        "specialization-spanning-trees",
        specialization_spanning_trees,
    ),
    (
        "specialization-subgraph-count",
        specialization_subgraph_count,
    ),
    ("known-closed-forms", known_closed_forms),
    ("block-multiplicativity", block_multiplicativity),
    ("splitting-two-cut", splitting_two_cut),
    ("splitting-shared-vertex-edge", splitting_shared_vertex_edge),
    ("branch-rule-invariance", branch_rule_invariance),
];

const APPENDIX_CHECKS: &[Check] = &[
    ("pyrene-reference-polynomials", pyrene_reference_polynomials),
    (
        "triphenylene-reference-polynomials",
        triphenylene_reference_polynomials,
    ),
    ("pyrene-spanning-tree-table", pyrene_spanning_tree_table),
    (
        "triphenylene-spanning-tree-table",
        triphenylene_spanning_tree_table,
    ),
];

const DUALITY_CHECKS: &[Check] = &[
    ("cycle-dipole-duality", cycle_dipole_duality),
    ("wheel-self-duality", wheel_self_duality),
    ("chain-family-duality", chain_family_duality),
];

const COROLLARY_CHECKS: &[Check] = &[
    ("s-sum-form", s_sum_form_check),
    ("fan-closed-form", fan_closed_form),
    ("wheel-closed-form", wheel_closed_form),
    ("family-closed-vs-direct", family_closed_vs_direct),
    ("coupled-recurrences", coupled_recurrences),
    ("chain-closed-vs-direct", chain_closed_vs_direct),
    ("chain-tau-three-way", chain_tau_three_way),
    ("chain-tau-kernels", chain_tau_kernels),
];

pub fn run_scope(scope: Scope) -> Vec<CheckReport> {
    let mut selected: Vec<&Check> = Vec::new();
    let mut push = |list: &'static [Check]| selected.extend(list.iter());
    match scope {
        Scope::All => {
            push(ORACLE_CHECKS);
            push(APPENDIX_CHECKS);
            push(DUALITY_CHECKS);
            push(COROLLARY_CHECKS);
        }
        Scope::Oracles => push(ORACLE_CHECKS),
        Scope::Appendix => push(APPENDIX_CHECKS),
        Scope::Duality => push(DUALITY_CHECKS),
        Scope::Corollaries => push(COROLLARY_CHECKS),
    }
    selected
        .into_iter()
        .map(|(name, f)| match f() {
            Ok(()) => CheckReport {
                name,
                passed: true,
                detail: None,
            },
            Err(detail) => CheckReport {
                name,
                passed: false,
                detail: Some(detail),
            },
        })
        .collect()
}

// ---- oracle equivalences on the corpus ----

fn subset_vs_delcon() -> Result<(), String> {
    for e in small_corpus() {
        let a = tutte_subset(&e.graph).map_err(|err| format!("{}: {}", e.name, err))?;
        let b = tutte_delcon(&e.graph).map_err(|err| format!("{}: {}", e.name, err))?;
        if a != b {
            return Err(format!("{}: subset and delcon disagree", e.name));
        }
    }
    Ok(())
}

fn specialization_spanning_trees() -> Result<(), String> {
    let one = BigInt::one();
    for e in small_corpus() {
        let t = tutte_delcon(&e.graph).map_err(|err| format!("{}: {}", e.name, err))?;
        let tau = count_spanning_trees_kirchhoff(&e.graph)
            .map_err(|err| format!("{}: {}", e.name, err))?;
        if t.eval(&one, &one) != tau {
            return Err(format!(
                "{}: T(1,1) = {} but Kirchhoff gives {}",
                e.name,
                t.eval(&one, &one),
                tau
            ));
        }
    }
    Ok(())
}

fn specialization_subgraph_count() -> Result<(), String> {
    for e in small_corpus() {
        let t = tutte_delcon(&e.graph).map_err(|err| format!("{}: {}", e.name, err))?;
        let count = t.eval_i64(2, 2);
        let expected = BigInt::one() << e.graph.edge_count();
        if count != expected {
            return Err(format!(
                "{}: T(2,2) = {} but the graph has {} edges",
                e.name,
                count,
                e.graph.edge_count()
            ));
        }
    }
    Ok(())
}

fn known_closed_forms() -> Result<(), String> {
    let check = |name: &str, g: &MultiGraph, want: &Poly| -> Result<(), String> {
        let got = tutte_delcon(g).map_err(|err| format!("{}: {}", name, err))?;
        if &got != want {
            return Err(format!(
                "{}: expected {}, got {}",
                name,
                want.to_canonical_text(),
                got.to_canonical_text()
            ));
        }
        Ok(())
    };
    check(
        "loop",
        &MultiGraph::new(1, vec![(0, 0)]).unwrap(),
        &Poly::y(),
    )?;
    for k in 1..=4u32 {
        let bouquet = MultiGraph::new(1, vec![(0, 0); k as usize]).unwrap();
        check(&format!("bouquet-{}", k), &bouquet, &Poly::y().pow(k))?;
    }
    for n in 1..=4u32 {
        check(
            &format!("path-{}", n),
            &MultiGraph::path(n),
            &Poly::x().pow(n),
        )?;
    }
    for n in 2..=8u32 {
        let mut want = Poly::y();
        for i in 1..n {
            want = want.add(&Poly::x().pow(i));
        }
        check(&format!("cycle-{}", n), &MultiGraph::cycle(n), &want)?;
    }
    for k in 2..=6u32 {
        let mut want = Poly::x();
        for i in 1..k {
            want = want.add(&Poly::y().pow(i));
        }
        check(&format!("dipole-{}", k), &MultiGraph::dipole(k), &want)?;
    }
    Ok(())
}

fn block_multiplicativity() -> Result<(), String> {
    for e in small_corpus() {
        let whole = tutte_subset(&e.graph).map_err(|err| format!("{}: {}", e.name, err))?;
        let blocks = e
            .graph
            .blocks()
            .map_err(|err| format!("{}: {}", e.name, err))?;
        let mut product = Poly::one();
        for b in &blocks {
            product = product.mul(&tutte_delcon(b).map_err(|err| format!("{}: {}", e.name, err))?);
        }
        if product != whole {
            return Err(format!(
                "{}: product over {} blocks differs from the whole",
                e.name,
                blocks.len()
            ));
        }
    }
    Ok(())
}

fn splitting_two_cut() -> Result<(), String> {
    let pieces = split_pieces();
    for (n1, h1, m1) in &pieces {
        for (n2, h2, m2) in &pieces {
            let glued = glue_on_two(h1, *m1, h2, *m2);
            let parts = SplitParts::from_graphs(h1, *m1, h2, *m2)
                .map_err(|err| format!("{} + {}: {}", n1, n2, err))?;
            let by_formula =
                split_two_cut(&parts).map_err(|err| format!("{} + {}: {}", n1, n2, err))?;
            let direct = tutte_delcon(&glued).map_err(|err| format!("{} + {}: {}", n1, n2, err))?;
            if by_formula != direct {
                return Err(format!("{} + {}: splitting formula disagrees", n1, n2));
            }
        }
    }
    Ok(())
}

fn splitting_shared_vertex_edge() -> Result<(), String> {
    let pieces = split_pieces();
    for (n1, h1, m1) in &pieces {
        for (n2, h2, m2) in &pieces {
            let glued = glue_shared_vertex_with_edge(h1, *m1, h2, *m2);
            let parts = SplitParts::from_graphs(h1, *m1, h2, *m2)
                .map_err(|err| format!("{} + {}: {}", n1, n2, err))?;
            let by_formula = split_two_cut_with_edge(&parts)
                .map_err(|err| format!("{} + {}: {}", n1, n2, err))?;
            let direct = tutte_delcon(&glued).map_err(|err| format!("{} + {}: {}", n1, n2, err))?;
            if by_formula != direct {
                return Err(format!(
                    "{} + {}: linked splitting formula disagrees",
                    n1, n2
                ));
            }
        }
    }
    Ok(())
}

fn branch_rule_invariance() -> Result<(), String> {
    for e in small_corpus() {
        let a = tutte_delcon_with_rule(&e.graph, BranchRule::FirstEligible)
            .map_err(|err| format!("{}: {}", e.name, err))?;
        let b = tutte_delcon_with_rule(&e.graph, BranchRule::MaxMultiplicity)
            .map_err(|err| format!("{}: {}", e.name, err))?;
        if a != b {
            return Err(format!("{}: branch rules disagree", e.name));
        }
    }
    Ok(())
}

// ---- reference fixtures ----

fn reference_polynomials(family: ChainFamily, stored: &[Poly; 2]) -> Result<(), String> {
    for (idx, want) in stored.iter().enumerate() {
        let n = idx + 1;
        let got = closed_chain(family, n).map_err(|err| format!("n={}: {}", n, err))?;
        if &got != want {
            return Err(format!(
                "n={}: closed form differs from the stored fixture",
                n
            ));
        }
    }
    Ok(())
}

fn pyrene_reference_polynomials() -> Result<(), String> {
    reference_polynomials(ChainFamily::Pyrene, &reference_fixtures().pyrene)
}

fn triphenylene_reference_polynomials() -> Result<(), String> {
    reference_polynomials(
        ChainFamily::Triphenylene,
        &reference_fixtures().triphenylene,
    )
}

fn spanning_tree_table(family: ChainFamily, stored: &[BigInt; 4]) -> Result<(), String> {
    for (idx, want) in stored.iter().enumerate() {
        let n = idx + 1;
        let got = tau_chain(family, n).map_err(|err| format!("n={}: {}", n, err))?;
        if &got != want {
            return Err(format!(
                "n={}: expected {} spanning trees, got {}",
                n, want, got
            ));
        }
    }
    Ok(())
}

fn pyrene_spanning_tree_table() -> Result<(), String> {
    spanning_tree_table(ChainFamily::Pyrene, &reference_fixtures().pyrene_tau)
}

fn triphenylene_spanning_tree_table() -> Result<(), String> {
    spanning_tree_table(
        ChainFamily::Triphenylene,
        &reference_fixtures().triphenylene_tau,
    )
}

// ---- duality spot checks ----

fn cycle_dipole_duality() -> Result<(), String> {
    for k in 2..=6u32 {
        let ok = verify_duality(&MultiGraph::cycle(k), &MultiGraph::dipole(k))
            .map_err(|err| format!("k={}: {}", k, err))?;
        if !ok {
            return Err(format!("k={}: cycle and dipole fail the swap identity", k));
        }
    }
    Ok(())
}

fn wheel_self_duality() -> Result<(), String> {
    let k2 = MarkedGraph::new(MultiGraph::path(1), 0, 1, None).unwrap();
    for n in 3..=5 {
        let t = closed_family(&k2, Family::W, n).map_err(|err| format!("n={}: {}", n, err))?;
        if t != t.swap_vars() {
            return Err(format!("n={}: wheel polynomial is not self-dual", n));
        }
    }
    Ok(())
}

fn chain_family_duality() -> Result<(), String> {
    let cases = [
        (ChainFamily::Linear, Family::FPlusPlus, "linear"),
        (ChainFamily::Pyrene, Family::PlusGPlus, "pyrene"),
        (ChainFamily::Triphenylene, Family::PlusGPlus, "triphenylene"),
    ];
    for (chain, family, name) in cases {
        let dual_base = build_dual_base(chain);
        for n in 1..=2 {
            let built =
                build_chain(chain, n).map_err(|err| format!("{} n={}: {}", name, n, err))?;
            let dual = build_family(&dual_base, family, n)
                .map_err(|err| format!("{} n={}: {}", name, n, err))?;
            let ok = verify_duality(&built, &dual)
                .map_err(|err| format!("{} n={}: {}", name, n, err))?;
            if !ok {
                return Err(format!("{} n={}: chain is not dual to its family", name, n));
            }
        }
    }
    Ok(())
}

// ---- closed-form corollaries ----

fn s_sum_form_check() -> Result<(), String> {
    let kernels = [
        RecurrenceKernel {
            trace: Poly::parse("x + y + 1").unwrap(),
            det: Poly::parse("xy").unwrap(),
        },
        closed_form(ChainFamily::Linear).unwrap().kernel,
        closed_form(ChainFamily::Pyrene).unwrap().kernel,
    ];
    for (ki, k) in kernels.iter().enumerate() {
        for n in 0..=8 {
            // The binomial sum solves the recurrence one step ahead of S.
            if s_sum_form(k, n) != s_sequence(k, n + 1) {
                return Err(format!("kernel {} at n={}: sum form disagrees", ki, n));
            }
        }
    }
    Ok(())
}

fn fan_closed_form() -> Result<(), String> {
    let k2 = MarkedGraph::new(MultiGraph::path(1), 0, 1, None).unwrap();
    let kernel = RecurrenceKernel {
        trace: Poly::parse("x + y + 1").unwrap(),
        det: Poly::parse("xy").unwrap(),
    };
    let tail_factor = Poly::y().mul(&Poly::one().sub(&Poly::x()));
    for n in 1..=6 {
        let closed = closed_family(&k2, Family::F, n).map_err(|err| format!("n={}: {}", n, err))?;
        let formula = Poly::x()
            .mul(&s_sequence(&kernel, n))
            .add(&tail_factor.mul(&s_sequence(&kernel, n - 1)));
        if closed != formula {
            return Err(format!("n={}: fan corollary formula disagrees", n));
        }
        if n <= 4 {
            let direct = tutte_delcon(&build_family(&k2, Family::F, n).unwrap())
                .map_err(|err| format!("n={}: {}", n, err))?;
            if closed != direct {
                return Err(format!("n={}: fan closed form disagrees with delcon", n));
            }
        }
    }
    Ok(())
}

fn wheel_closed_form() -> Result<(), String> {
    let k2 = MarkedGraph::new(MultiGraph::path(1), 0, 1, None).unwrap();
    let kernel = RecurrenceKernel {
        trace: Poly::parse("x + y + 1").unwrap(),
        det: Poly::parse("xy").unwrap(),
    };
    let s_term = Poly::parse("xy - x^2 y - x y^2").unwrap();
    let s_next = Poly::parse("x^2 + x + y + y^2").unwrap();
    let base = Poly::parse("x^2 + x + xy + y + y^2").unwrap();
    for n in 3..=6 {
        let closed = closed_family(&k2, Family::W, n).map_err(|err| format!("n={}: {}", n, err))?;
        let mut formula = base.clone();
        for i in 2..n {
            formula = formula
                .add(&s_term.mul(&s_sequence(&kernel, i - 1)))
                .add(&s_next.mul(&s_sequence(&kernel, i)));
        }
        if closed != formula {
            return Err(format!("n={}: wheel corollary formula disagrees", n));
        }
        if n <= 5 {
            let direct = tutte_delcon(&build_family(&k2, Family::W, n).unwrap())
                .map_err(|err| format!("n={}: {}", n, err))?;
            if closed != direct {
                return Err(format!("n={}: wheel closed form disagrees with delcon", n));
            }
        }
    }
    Ok(())
}

fn family_closed_vs_direct() -> Result<(), String> {
    let bases = [
        (
            "k2",
            MarkedGraph::new(MultiGraph::path(1), 0, 1, None).unwrap(),
        ),
        (
            "path-2",
            MarkedGraph::new(MultiGraph::path(2), 0, 2, Some(1)).unwrap(),
        ),
        (
            "triangle",
            MarkedGraph::new(MultiGraph::cycle(3), 0, 1, Some(2)).unwrap(),
        ),
    ];
    let families = [
        Family::F,
        Family::FPlusPlus,
        Family::W,
        Family::G,
        Family::PlusGPlus,
    ];
    for (name, g) in &bases {
        for family in families {
            if family.needs_w() && g.w().is_none() {
                continue;
            }
            let lo = family.min_n();
            for n in lo..=3 {
                let closed = closed_family(g, family, n)
                    .map_err(|err| format!("{} {:?} n={}: {}", name, family, n, err))?;
                let direct = tutte_delcon(&build_family(g, family, n).unwrap())
                    .map_err(|err| format!("{} {:?} n={}: {}", name, family, n, err))?;
                if closed != direct {
                    return Err(format!(
                        "{} {:?} n={}: closed form disagrees with delcon",
                        name, family, n
                    ));
                }
            }
        }
    }
    Ok(())
}

fn coupled_recurrences() -> Result<(), String> {
    let bases = [
        (
            "path-2",
            MarkedGraph::new(MultiGraph::path(2), 0, 2, Some(1)).unwrap(),
        ),
        (
            "triangle",
            MarkedGraph::new(MultiGraph::cycle(3), 0, 1, Some(2)).unwrap(),
        ),
    ];
    for (name, g) in &bases {
        let fco = transfer_coeffs(g, Family::F).map_err(|e| format!("{}: {}", name, e))?;
        let gco = transfer_coeffs(g, Family::G).map_err(|e| format!("{}: {}", name, e))?;
        let gd = gco.d.as_ref().unwrap();
        let pco = transfer_coeffs(g, Family::PlusGPlus).map_err(|e| format!("{}: {}", name, e))?;
        let pd = pco.d.as_ref().unwrap();
        for n in 2..=3 {
            let t = |fam, m| tutte_delcon(&build_family(g, fam, m).unwrap()).unwrap();
            let merged = |m: usize| {
                let built = build_family(g, Family::G, m).unwrap();
                let label = g.placed_label(0, g.u());
                tutte_delcon(&built.identify_vertices(&[0, label]).unwrap()).unwrap()
            };
            let ladder: [(&str, Poly, Poly); 6] = [
                (
                    "u-linked",
                    t(Family::F, n),
                    fco.a
                        .mul(&t(Family::F, n - 1))
                        .add(&fco.b.mul(&t(Family::FPlus, n - 1))),
                ),
                (
                    "u-linked companion",
                    t(Family::FPlus, n),
                    fco.a
                        .mul(&t(Family::F, n - 1))
                        .add(&fco.c.mul(&t(Family::FPlus, n - 1))),
                ),
                (
                    "anchored u-linked",
                    t(Family::FPlus, n),
                    fco.a
                        .mul(&t(Family::FPlus, n - 1))
                        .add(&fco.b.mul(&t(Family::FPlusPlus, n - 1))),
                ),
                (
                    "anchored u-linked companion",
                    t(Family::FPlusPlus, n),
                    fco.a
                        .mul(&t(Family::FPlus, n - 1))
                        .add(&fco.c.mul(&t(Family::FPlusPlus, n - 1))),
                ),
                (
                    "w-linked",
                    t(Family::G, n),
                    gco.a
                        .mul(&t(Family::G, n - 1))
                        .add(&gco.b.mul(&merged(n - 1))),
                ),
                (
                    "w-linked companion",
                    merged(n),
                    gco.c.mul(&t(Family::G, n - 1)).add(&gd.mul(&merged(n - 1))),
                ),
            ];
            for (label, lhs, rhs) in &ladder {
                if lhs != rhs {
                    return Err(format!("{} {} at n={}: recurrence fails", name, label, n));
                }
            }
            let plus = t(Family::PlusG, n);
            let plus_rhs = pco
                .a
                .mul(&t(Family::PlusG, n - 1))
                .add(&pco.b.mul(&t(Family::PlusGPlus, n - 1)));
            if plus != plus_rhs {
                return Err(format!(
                    "{} anchored w-linked at n={}: recurrence fails",
                    name, n
                ));
            }
            let plus2 = t(Family::PlusGPlus, n);
            let plus2_rhs = pco
                .c
                .mul(&t(Family::PlusG, n - 1))
                .add(&pd.mul(&t(Family::PlusGPlus, n - 1)));
            if plus2 != plus2_rhs {
                return Err(format!(
                    "{} anchored w-linked companion at n={}: recurrence fails",
                    name, n
                ));
            }
        }
    }
    Ok(())
}

fn chain_closed_vs_direct() -> Result<(), String> {
    let cases = [
        (ChainFamily::Linear, 3usize, "linear"),
        (ChainFamily::Pyrene, 2, "pyrene"),
        (ChainFamily::Triphenylene, 2, "triphenylene"),
    ];
    for (family, max_n, name) in cases {
        for n in 1..=max_n {
            let closed =
                closed_chain(family, n).map_err(|err| format!("{} n={}: {}", name, n, err))?;
            let direct = tutte_delcon(&build_chain(family, n).unwrap())
                .map_err(|err| format!("{} n={}: {}", name, n, err))?;
            if closed != direct {
                return Err(format!(
                    "{} n={}: closed form disagrees with delcon",
                    name, n
                ));
            }
        }
    }
    Ok(())
}

fn chain_tau_three_way() -> Result<(), String> {
    let one = BigInt::one();
    let families = [
        (ChainFamily::Linear, "linear"),
        (ChainFamily::Pyrene, "pyrene"),
        (ChainFamily::Triphenylene, "triphenylene"),
    ];
    for (family, name) in families {
        let form = closed_form(family).unwrap();
        for n in 1..=3 {
            let by_recurrence =
                tau_chain(family, n).map_err(|err| format!("{} n={}: {}", name, n, err))?;
            let by_eval = form.evaluate(n).eval(&one, &one);
            let by_kirchhoff = count_spanning_trees_kirchhoff(&build_chain(family, n).unwrap())
                .map_err(|err| format!("{} n={}: {}", name, n, err))?;
            if by_recurrence != by_eval || by_recurrence != by_kirchhoff {
                return Err(format!(
                    "{} n={}: recurrence {}, eval {}, Kirchhoff {}",
                    name, n, by_recurrence, by_eval, by_kirchhoff
                ));
            }
        }
    }
    Ok(())
}

fn chain_tau_kernels() -> Result<(), String> {
    let one = BigInt::one();
    let want: [(ChainFamily, &str, i64, i64); 3] = [
        (ChainFamily::Linear, "linear", 6, 1),
        (ChainFamily::Pyrene, "pyrene", 1056, 2304),
        (ChainFamily::Triphenylene, "triphenylene", 1153, 36),
    ];
    for (family, name, trace, det) in want {
        let kernel = closed_form(family).unwrap().kernel;
        let t = kernel.trace.eval(&one, &one);
        let d = kernel.det.eval(&one, &one);
        if t != BigInt::from(trace) || d != BigInt::from(det) {
            return Err(format!(
                "{}: kernel at (1,1) is ({}, {}), expected ({}, {})",
                name, t, d, trace, det
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_scopes_pass() {
        for scope in [
            Scope::Oracles,
            Scope::Appendix,
            Scope::Duality,
            Scope::Corollaries,
        ] {
            for report in run_scope(scope) {
                assert!(
                    report.passed,
                    "{} failed: {}",
                    report.name,
                    report.detail.unwrap_or_default()
                );
            }
        }
    }

    #[test]
    fn all_scope_is_the_union() {
        let all = run_scope(Scope::All);
        let total = ORACLE_CHECKS.len()
            + APPENDIX_CHECKS.len()
            + DUALITY_CHECKS.len()
            + COROLLARY_CHECKS.len();
        assert_eq!(all.len(), total);
    }
}
