//! Acceptance suite: one test per product criterion, each printing a
//! PASS line (visible with `--nocapture`). All checks are exact integer
//! comparisons; the oracle-based criteria compare against the naive
//! enumerations in `common`.

mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rcpg_core::coloring::is_rainbow_connected;
use rcpg_core::group::{Group, GroupSpec};
use rcpg_core::power_graph::PowerGraph;
use rcpg_core::solver::{rc_decide, rc_exact, Budget, DecideOutcome, LowerReason, RcStatus};
use rcpg_core::verifier::{verify_catalog, Catalog, Verdict};

fn build(spec: &str) -> (Group, PowerGraph) {
    let g = GroupSpec::parse(spec).unwrap().build().unwrap();
    let pg = PowerGraph::from_group(&g);
    (g, pg)
}

fn solve(spec: &str) -> rcpg_core::solver::RcReport {
    let (g, pg) = build(spec);
    rc_exact(&pg, &g, &Budget::default(), spec)
}

#[test]
fn criterion_01_dihedral_family() {
    for n in 3..=8usize {
        let spec = format!("D:{}", 2 * n);
        let report = solve(&spec);
        assert_eq!(report.exact, Some(n as u32), "{spec}");
        assert_eq!(report.status, RcStatus::Exact, "{spec}");
        assert_eq!(report.lower_reason, LowerReason::PendantCount, "{spec}");
        assert_eq!(report.nodes, 0, "{spec}: must close without search");
    }
    println!("ACCEPTANCE 1 (dihedral family rc = n): PASS");
}

#[test]
fn criterion_02_elementary_abelian() {
    for r in 2..=4u32 {
        let spec = format!("E2:{r}");
        let report = solve(&spec);
        assert_eq!(report.exact, Some((1 << r) - 1), "{spec}");
        assert_eq!(report.status, RcStatus::Exact, "{spec}");
        assert_eq!(report.nodes, 0, "{spec}: must close without search");
    }
    println!("ACCEPTANCE 2 (elementary abelian rc = 2^r - 1): PASS");
}

#[test]
fn criterion_03_cyclic_dichotomy() {
    for n in 3..=60u64 {
        let spec = format!("Z:{n}");
        let report = solve(&spec);
        let expected = if rcpg_core::arith::is_prime_power(n) { 1 } else { 2 };
        assert_eq!(report.exact, Some(expected), "{spec}");
        assert_eq!(report.status, RcStatus::Exact, "{spec}");
        assert_eq!(report.nodes, 0, "{spec}: must close without search");
        if expected == 2 {
            assert_eq!(report.lower_reason, LowerReason::NotComplete, "{spec}");
        }
    }
    println!("ACCEPTANCE 3 (cyclic rc = 1 iff prime power, else 2): PASS");
}

#[test]
fn criterion_04_generalized_quaternion() {
    // edge counts by direct enumeration of the power relation
    for (n, edges) in [(3usize, 28), (4, 48), (5, 66)] {
        let spec = format!("Q:{}", 4 * n);
        let report = solve(&spec);
        assert_eq!(report.edges, edges, "{spec}");
        assert_eq!(report.exact, Some(3), "{spec}");
        assert_eq!(report.status, RcStatus::Exact, "{spec}");
        assert!(
            report.nodes > 0,
            "{spec}: the k=2 refutation requires search"
        );
        assert!(
            report.nodes <= Budget::default().max_nodes,
            "{spec}: refutation must fit the default budget"
        );
    }
    println!("ACCEPTANCE 4 (generalized quaternion rc = 3 via exhaustion): PASS");
}

#[test]
fn criterion_05_quaternion_products() {
    for spec in ["Q:8", "Q:8 x Z:3", "Q:8 x Z:5"] {
        let report = solve(spec);
        assert_eq!(report.exact, Some(2), "{spec}");
        assert_eq!(report.status, RcStatus::Exact, "{spec}");
        assert_eq!(report.nodes, 0, "{spec}: must close without search");
        assert_eq!(report.lower_reason, LowerReason::NotComplete, "{spec}");
    }
    println!("ACCEPTANCE 5 (Q8 x Z_n rc = 2, search-free): PASS");
}

#[test]
fn criterion_06_semidirect_order_189() {
    let report = solve("SD:27,7,2");
    assert_eq!(report.order, 189);
    assert_eq!(report.exact, Some(2));
    assert_eq!(report.status, RcStatus::Exact);
    assert_eq!(report.nodes, 0, "must close search-free");
    println!("ACCEPTANCE 6 (order-189 semidirect product rc = 2): PASS");
}

#[test]
fn criterion_07_subgroup_count_congruence() {
    for entry in &Catalog::builtin().entries {
        let (g, _) = build(&entry.spec);
        for (p, s) in g.subgroup_counts_by_prime() {
            assert_eq!(s % p, 1, "{}: s_{p} = {s}", entry.spec);
        }
    }
    println!("ACCEPTANCE 7 (s_p = 1 mod p across the catalog): PASS");
}

#[test]
fn criterion_08_pendants_are_maximal_involutions() {
    for entry in &Catalog::builtin().entries {
        let (g, pg) = build(&entry.spec);
        if g.order() >= 3 {
            assert_eq!(
                pg.pendant_vertices(),
                g.maximal_involutions(),
                "{}",
                entry.spec
            );
        }
    }
    println!("ACCEPTANCE 8 (pendant vertices = maximal involutions): PASS");
}

#[test]
fn criterion_09_catalog_implication_suite() {
    let catalog = Catalog::builtin();
    // required coverage
    let specs: Vec<&str> = catalog.entries.iter().map(|e| e.spec.as_str()).collect();
    for n in 3..=30 {
        assert!(specs.contains(&format!("Z:{n}").as_str()), "missing Z:{n}");
    }
    for n in 3..=8 {
        let d = format!("D:{}", 2 * n);
        assert!(specs.contains(&d.as_str()), "missing {d}");
    }
    for n in 2..=5 {
        let q = format!("Q:{}", 4 * n);
        assert!(specs.contains(&q.as_str()), "missing {q}");
    }
    for r in 2..=4 {
        let e = format!("E2:{r}");
        assert!(specs.contains(&e.as_str()), "missing {e}");
    }
    for s in ["Q:8 x Z:3", "Q:8 x Z:5", "SD:27,7,2", "Z:2 x Z:4"] {
        assert!(specs.contains(&s), "missing {s}");
    }
    // every entry passes, which includes the per-entry implications:
    // rc = 2 forces unique prime-order subgroups; maximal involutions pin
    // the value; cyclic and noncyclic branches; nilpotent classification
    let report = verify_catalog(&catalog, &Budget::default(), None);
    for r in &report.records {
        assert_eq!(
            r.verdict,
            Verdict::Pass,
            "{}: {:?} ({:?})",
            r.spec,
            r.verdict,
            r.notes
        );
    }
    assert_eq!(report.count(Verdict::Pass), report.records.len());
    println!("ACCEPTANCE 9 (implication suite over the full catalog): PASS");
}

#[test]
fn criterion_10a_decider_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let budget = Budget::default();
    for case in 0..20 {
        let n = rng.random_range(4..=6);
        let mut edges = Vec::new();
        // random spanning tree keeps the graph connected
        for v in 1..n {
            edges.push((rng.random_range(0..v), v));
        }
        while edges.len() < 10 {
            let u = rng.random_range(0..n - 1);
            let v = rng.random_range(u + 1..n);
            if !edges.contains(&(u, v)) && rng.random_range(0..3) > 0 {
                edges.push((u, v));
            } else if rng.random_range(0..4) == 0 {
                break;
            }
        }
        let graph = PowerGraph::from_edge_list(n, &edges);
        assert!(graph.edge_count() <= 10);
        for k in 1..=3u32 {
            let expected = common::brute_force_has_rainbow_coloring(&graph, k);
            let got = match rc_decide(&graph, k, &budget).outcome {
                DecideOutcome::Colored(c) => {
                    assert!(
                        common::naive_rainbow_connected(&graph, &c),
                        "case {case} k={k}: reported coloring fails the naive oracle"
                    );
                    true
                }
                DecideOutcome::NoColoring => false,
                DecideOutcome::BudgetExceeded => {
                    panic!("case {case} k={k}: tiny instance exceeded budget")
                }
            };
            assert_eq!(got, expected, "case {case} k={k} edges={edges:?}");
        }
    }
    println!("ACCEPTANCE 10a (decision procedure = brute force on 20 random graphs): PASS");
}

#[test]
fn criterion_10b_checker_matches_naive_oracle() {
    // every group of order at most 8, i.e. every power graph on <= 8 vertices
    let small = [
        "Z:1", "Z:2", "Z:3", "Z:4", "E2:2", "Z:5", "Z:6", "D:6", "Z:7", "Z:8",
        "Z:2 x Z:4", "E2:3", "D:8", "Q:8",
    ];
    for spec in small {
        let (_, pg) = build(spec);
        let m = pg.edge_count();
        if m == 0 {
            continue;
        }
        for k in 1..=3u32 {
            for seed in 0..6u32 {
                let coloring = common::scrambled_coloring(m, k, seed);
                let fast = is_rainbow_connected(&pg, &coloring).is_connected();
                let naive = common::naive_rainbow_connected(&pg, &coloring);
                assert_eq!(fast, naive, "{spec} k={k} seed={seed}");
            }
        }
    }
    println!("ACCEPTANCE 10b (checker = naive all-paths oracle, |V| <= 8): PASS");
}
