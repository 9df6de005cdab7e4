//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test --test acceptance -- --nocapture --test-threads 1`.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;
use std::process::Command;

use ccelab::conditions::holds_c_and_cprime;
use ccelab::dk::stratum_witness;
use ccelab::format::{parse_digraph, write_digraph};
use ccelab::sweeps::{clique_violation, foot_inclusion_violation, monotonicity_violation, verify_monotonicity_random};
use ccelab::{
    caps, cce_graph, competition_graph, double_competition_number, interval_order_from, isolated_vertices,
    niche_graph, recognize_interval_order, recognize_semiorder, semiorder_from, sweeps, verify_theorem_acyclic,
    verify_theorem_kr, verify_theorem_loopless, verify_theorem_main0, witness_loopless, Caps, Digraph, KrIqShape,
    SearchMode, SimpleGraph, SweepOutcome,
};
use common::{criterion, ensure};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn loopless_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let arcs = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a);
        Digraph::from_arcs(n, arcs).unwrap()
    })
}

fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    (0..1u64 << (n * n)).map(move |mask| {
        let arcs = (0..n * n).filter(|i| mask >> i & 1 == 1).map(|i| (i / n, i % n));
        Digraph::from_arcs(n, arcs).unwrap()
    })
}

/// Which of `shapes` are isomorphic to some image of the oracle-recognized
/// order models; fails if an image matches none of them.
fn oracle_family(
    n: usize,
    member: fn(&Digraph) -> bool,
    derive: fn(&Digraph) -> SimpleGraph,
    shapes: &[KrIqShape],
) -> Result<BTreeSet<KrIqShape>, String> {
    let mut images: HashSet<BTreeSet<(usize, usize)>> = HashSet::new();
    for d in loopless_digraphs(n) {
        if common::is_strict_order(&common::adjacency_matrix(&d)) && member(&d) {
            images.insert(derive(&d).edge_set());
        }
    }
    let mut found = BTreeSet::new();
    for edges in images {
        let g = SimpleGraph::from_edges(n, edges).unwrap();
        let shape = shapes
            .iter()
            .find(|s| common::isomorphic_brute(&s.to_graph(), &g))
            .ok_or_else(|| format!("image {:?} matches no admissible shape", g.edge_set()))?;
        found.insert(*shape);
    }
    Ok(found)
}

fn shapes(list: &[(usize, usize)]) -> Vec<KrIqShape> {
    list.iter().map(|&(r, q)| KrIqShape { r, q }).collect()
}

fn family_criterion(
    verify: fn(usize, &Caps) -> ccelab::Result<SweepOutcome>,
    derive: fn(&Digraph) -> SimpleGraph,
    expected: &[(usize, &[(usize, usize)])],
) -> Result<String, String> {
    let caps = Caps::default();
    let mut detail = Vec::new();
    for &(n, want) in expected {
        let want = shapes(want);
        let outcome = verify(n, &caps).map_err(|e| e.to_string())?;
        ensure(outcome.holds(), || format!("n = {n}: {:?}", outcome.counterexample))?;
        ensure(outcome.shapes == want, || format!("n = {n}: shapes {:?}", outcome.shapes))?;
        let want_set: BTreeSet<KrIqShape> = want.iter().copied().collect();
        let semi = oracle_family(n, common::semiorder_oracle, derive, &want)?;
        let interval = oracle_family(n, common::interval_oracle, derive, &want)?;
        ensure(semi == want_set && interval == want_set, || {
            format!("n = {n}: oracle families {semi:?} / {interval:?}")
        })?;
        detail.push(format!("n={n}: {} classes", want.len()));
    }
    Ok(detail.join(", "))
}

#[test]
fn criterion_01_cce_of_semiorders_and_interval_orders() {
    criterion(1, "CCE images of semiorders = interval orders = K_r ∪ I_q (r>=2 => q>=2)", || {
        family_criterion(
            verify_theorem_main0,
            common::cce_oracle,
            &[(3, &[(0, 3)]), (4, &[(0, 4), (2, 2)]), (5, &[(0, 5), (2, 3), (3, 2)])],
        )
    });
}

#[test]
fn criterion_02_competition_graphs_of_orders() {
    criterion(2, "competition images of semiorders = interval orders = K_r ∪ I_q (r>=2 => q>=1)", || {
        family_criterion(
            verify_theorem_kr,
            common::competition_oracle,
            &[
                (2, &[(0, 2)]),
                (3, &[(0, 3), (2, 1)]),
                (4, &[(0, 4), (2, 2), (3, 1)]),
                (5, &[(0, 5), (2, 3), (3, 2), (4, 1)]),
            ],
        )
    });
}

#[test]
fn criterion_03_loopless_classification() {
    criterion(3, "loopless digraphs under C(p), C'(p): K_r ∪ I_q with r>=p, q>=2", || {
        let caps = Caps::default();
        let mut checked = 0;
        for p in [2, 3] {
            for n in 0..=5 {
                let outcome = verify_theorem_loopless(p, n, &caps).map_err(|e| e.to_string())?;
                ensure(outcome.holds(), || format!("p = {p}, n = {n}: {:?}", outcome.counterexample))?;
                checked += outcome.checked;
            }
            for total in 4..=8 {
                for r in p..=total - 2 {
                    let q = total - r;
                    let d = witness_loopless(r, q).map_err(|e| e.to_string())?;
                    let g = cce_graph(&d);
                    ensure(d.is_loopless(), || format!("witness ({r},{q}) has a loop"))?;
                    ensure(g == SimpleGraph::clique_plus_isolated(r, q), || format!("witness ({r},{q}) CCE {g:?}"))?;
                    ensure(common::cce_oracle(&d) == g, || format!("witness ({r},{q}) oracle mismatch"))?;
                    for pp in 2..=total {
                        ensure(holds_c_and_cprime(&d, pp), || format!("witness ({r},{q}) fails C/C' at p = {pp}"))?;
                    }
                }
            }
        }
        Ok(format!("{checked} digraphs and witnesses checked"))
    });
}

#[test]
fn criterion_04_acyclic_classification() {
    criterion(4, "acyclic digraphs under C(p), C'(p): shapes (a), (b) or (c) with q >= dk(H)", || {
        let caps = Caps::default();
        for p in [2, 3] {
            for n in 0..=5 {
                let outcome = verify_theorem_acyclic(p, n, &caps).map_err(|e| e.to_string())?;
                ensure(outcome.holds(), || format!("p = {p}, n = {n}: {:?}", outcome.counterexample))?;
                if n == 5 {
                    ensure(outcome.checked == 29_281, || format!("{} DAGs at n = 5", outcome.checked))?;
                }
            }
        }
        Ok("p in {2,3}, n <= 5, 29281 DAGs at n = 5".into())
    });
}

#[test]
fn criterion_05_monotonicity_and_foot_inclusion() {
    criterion(5, "C(p) => C(q), C'(p) => C'(q); F-(U) ⊆ F-(T ∪ U)", || {
        let mut exhaustive = 0u64;
        for n in 0..=4 {
            for d in all_digraphs(n) {
                exhaustive += 1;
                if let Some(why) = monotonicity_violation(&d) {
                    return Err(format!("{d:?}: {why}"));
                }
                if let Some(why) = foot_inclusion_violation(&d) {
                    return Err(format!("foot inclusion on {d:?}: {why}"));
                }
            }
        }
        for (n, seed) in [(5, 5u64), (6, 6)] {
            let outcome = verify_monotonicity_random(n, 10_000, seed);
            ensure(outcome.checked == 10_000 && outcome.holds(), || {
                format!("random n = {n}: {:?}", outcome.counterexample)
            })?;
        }
        Ok(format!("{exhaustive} digraphs exhaustively, 2 x 10^4 random"))
    });
}

#[test]
fn criterion_06_clique_property() {
    criterion(6, "non-isolated CCE part is a clique under C(p), C'(p)", || {
        let mut qualifying = 0;
        for d in all_digraphs(4) {
            for p in [2, 3] {
                if let Some(why) = clique_violation(&d, p) {
                    return Err(format!("{d:?}: {why}"));
                }
                if d.is_loopless() && holds_c_and_cprime(&d, p) {
                    let g = cce_graph(&d);
                    if g.n() - isolated_vertices(&g).len() >= p {
                        qualifying += 1;
                    }
                }
            }
        }
        Ok(format!("{qualifying} qualifying loopless (digraph, p) pairs at n = 4"))
    });
}

#[test]
fn criterion_07_double_competition_numbers() {
    criterion(7, "dk(I_q) = 0, dk(K_2) = dk(K_3) = 2, pruned search = naive oracle", || {
        let caps = Caps::default();
        let dk = |g: &SimpleGraph, k_max| {
            double_competition_number(g, k_max, &caps, SearchMode::Deterministic).map(|r| r.map(|r| r.k))
        };
        for q in 0..=5 {
            ensure(dk(&SimpleGraph::edgeless(q), 2) == Ok(Some(0)), || format!("dk(I_{q})"))?;
        }
        ensure(dk(&SimpleGraph::complete(2), 4) == Ok(Some(2)), || "dk(K_2)".into())?;
        ensure(dk(&SimpleGraph::complete(3), 4) == Ok(Some(2)), || "dk(K_3)".into())?;

        // naive oracle: CCE graphs of every DAG on N vertices
        let mut compared = 0;
        for total in 0..=5 {
            let realizable: HashSet<BTreeSet<(usize, usize)>> =
                common::all_dags(total).iter().map(|d| common::cce_oracle(d).edge_set()).collect();
            for n in 0..=total {
                let k = total - n;
                for g in common::all_graphs(n) {
                    let naive = realizable.contains(&g.edge_set());
                    let found = stratum_witness(&g, k, &caps, SearchMode::Deterministic).map_err(|e| e.to_string())?;
                    ensure(naive == found.is_some(), || format!("G = {g:?}, k = {k}: naive {naive}"))?;
                    if let Some(w) = found {
                        ensure(w.is_acyclic() && common::cce_oracle(&w) == g.with_isolated(k), || {
                            format!("invalid witness for {g:?}, k = {k}")
                        })?;
                    }
                    compared += 1;
                }
            }
        }
        Ok(format!("{compared} (G, k) strata compared"))
    });
}

#[test]
fn criterion_08_recognition_matches_oracle() {
    criterion(8, "semiorder / interval-order recognition agrees with representation search", || {
        let mut orders = [0u64; 2];
        let mut total = 0u64;
        for n in 0..=5 {
            for d in all_digraphs(n) {
                total += 1;
                let semi = recognize_semiorder(&d);
                let interval = recognize_interval_order(&d);
                // looped digraphs are rejected by both definitions outright
                let (semi_truth, interval_truth) = if d.is_loopless() {
                    (common::semiorder_oracle(&d), common::interval_oracle(&d))
                } else {
                    (false, false)
                };
                ensure(semi.is_some() == semi_truth, || format!("semiorder verdict on {d:?}"))?;
                ensure(interval.is_some() == interval_truth, || format!("interval verdict on {d:?}"))?;
                if let Some(rep) = semi {
                    ensure(semiorder_from(&rep, n).as_ref() == Ok(&d), || format!("semiorder rep for {d:?}"))?;
                    orders[0] += 1;
                }
                if let Some(rep) = interval {
                    ensure(interval_order_from(&rep, n).as_ref() == Ok(&d), || format!("interval rep for {d:?}"))?;
                    orders[1] += 1;
                }
            }
        }
        Ok(format!("{total} digraphs, {} semiorders, {} interval orders", orders[0], orders[1]))
    });
}

#[test]
fn criterion_09_operator_sanity() {
    criterion(9, "cce ⊆ competition ⊆ niche, reversal invariance, definitional oracles", || {
        let mut total = 0;
        for n in 0..=4 {
            for d in all_digraphs(n) {
                total += 1;
                let (c, e, nn) = (competition_graph(&d), cce_graph(&d), niche_graph(&d));
                ensure(e.edge_set().is_subset(&c.edge_set()) && c.edge_set().is_subset(&nn.edge_set()), || {
                    format!("containment on {d:?}")
                })?;
                let r = d.reversed();
                ensure(cce_graph(&r) == e && niche_graph(&r) == nn, || format!("reversal on {d:?}"))?;
                ensure(
                    c == common::competition_oracle(&d) && e == common::cce_oracle(&d) && nn == common::niche_oracle(&d),
                    || format!("oracle mismatch on {d:?}"),
                )?;
            }
        }
        Ok(format!("{total} digraphs"))
    });
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

fn ccelab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ccelab"))
        .args(args)
        .env_remove(caps::CAP_ENV)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn criterion_10_cli_contract() {
    criterion(10, "CLI golden files, exit codes, parse ∘ serialize identity", || {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let tmp = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
        let g = |name: &str| golden(name).to_string_lossy().into_owned();
        let mut cases = 0;
        let mut expect = |args: Vec<String>, code: i32, stdout: Option<&str>| -> Result<(String, String), String> {
            let refs: Vec<&str> = args.iter().map(String::as_str).collect();
            let (c, out, err) = ccelab(&refs);
            cases += 1;
            ensure(c == code, || format!("{args:?}: exit {c}, expected {code}; stderr {err}"))?;
            if let Some(want) = stdout {
                ensure(out == want, || format!("{args:?}: stdout {out:?}, expected {want:?}"))?;
            }
            Ok((out, err))
        };
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();

        // derive
        for (kind, input, want) in [
            ("cce", "diamond.digraph", "diamond.cce.graph"),
            ("competition", "empty3.digraph", "empty3.competition.graph"),
            ("niche", "shared_prey.digraph", "shared_prey.niche.graph"),
        ] {
            let out = tmp(&format!("{kind}.graph"));
            expect(s(&["derive", "--kind", kind, "--in", &g(input), "--out", &out]), 0, Some(""))?;
            let written = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
            ensure(written == read_golden(want), || format!("derive {kind}: {written:?}"))?;
        }
        // check
        expect(s(&["check", "--condition", "C", "--p", "2", "--in", &g("interval.digraph")]), 0, None)?;
        let (out, _) = expect(s(&["check", "--condition", "C", "--p", "2", "--in", &g("two_cycle.digraph")]), 1, None)?;
        ensure(out.contains("{0,1}"), || format!("check witness: {out}"))?;
        expect(s(&["check", "--condition", "Cp", "--p", "3", "--in", &g("loopless_3_2.digraph")]), 0, None)?;
        expect(s(&["check", "--condition", "C", "--p", "1", "--in", &g("two_cycle.digraph")]), 2, None)?;
        // recognize
        expect(
            s(&["recognize", "--model", "semiorder", "--in", &g("chain3.digraph")]),
            0,
            Some(&read_golden("chain3.semiorder")),
        )?;
        expect(s(&["recognize", "--model", "interval", "--in", &g("two_plus_two.digraph")]), 1, None)?;
        // witness
        expect(
            s(&["witness", "--shape", "2,2", "--model", "semiorder"]),
            0,
            Some(&read_golden("witness_2_2.semiorder")),
        )?;
        expect(s(&["witness", "--shape", "2,2"]), 0, Some(&read_golden("witness_2_2.digraph")))?;
        expect(s(&["witness", "--shape", "1,2"]), 2, None)?;
        // dk
        let witness = tmp("k2.witness");
        expect(s(&["dk", "--in", &g("k2.graph"), "--kmax", "3", "--out", &witness]), 0, Some("dk = 2\n"))?;
        let w = parse_digraph(&std::fs::read_to_string(&witness).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(w.is_acyclic() && cce_graph(&w) == SimpleGraph::clique_plus_isolated(2, 2), || format!("dk witness {w:?}"))?;
        expect(s(&["dk", "--in", &g("k2.graph"), "--kmax", "1"]), 1, Some("dk > 1\n"))?;
        // verify and explore
        expect(s(&["verify", "--theorem", "main0", "--n", "4"]), 0, None)?;
        expect(s(&["verify", "--theorem", "loopless", "--n", "4", "--p", "2"]), 0, None)?;
        expect(s(&["verify", "--theorem", "main0", "--n", "9"]), 4, None)?;
        let (out, _) = expect(s(&["explore", "--problem", "1", "--p", "3", "--n", "4"]), 0, None)?;
        ensure(out.contains("2 classes") && out.contains("edges {2-3}"), || format!("explore output lacks K_2 ∪ I_2: {out}"))?;
        // parse and I/O failures
        let (_, err) = expect(s(&["derive", "--kind", "cce", "--in", &g("malformed.digraph")]), 2, None)?;
        ensure(err.contains("line 3, column 1"), || format!("diagnostic: {err}"))?;
        expect(s(&["derive", "--kind", "cce", "--in", &tmp("missing.digraph")]), 3, None)?;
        expect(s(&["frobnicate"]), 2, None)?;

        // parse ∘ serialize on fuzzed digraphs
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..50 {
            let n = rand::Rng::gen_range(&mut rng, 0..12);
            let d = sweeps::random_digraph(&mut rng, n, false);
            let back = parse_digraph(&write_digraph(&d)).map_err(|e| e.to_string())?;
            ensure(back == d, || format!("roundtrip {d:?}"))?;
        }
        Ok(format!("{cases} CLI invocations, 50 fuzzed round trips"))
    });
}

