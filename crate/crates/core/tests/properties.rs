use proptest::prelude::*;

use ihara_sectors::edge_space::{GaugeSign, OrientedEdgeSpace};
use ihara_sectors::graph::random::{random_connected, random_permutation, seeded};
use ihara_sectors::linalg::charpoly::eval_matrix_poly;
use ihara_sectors::linalg::{charpoly, det_resolvent, int, ExactMatrix, PowerSeries, RatPoly};
use ihara_sectors::screen::{group_fingerprints, load_store, run_screen, InputSource, ScreenConfig};
use ihara_sectors::shadows::{fingerprint, shadow_set};
use ihara_sectors::zeta::{bass_det, hashimoto_det, power_traces};
use ihara_sectors::{encode_graph6, parse_graph6, Graph};

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 0..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.2f64..0.7).prop_map(|(n, seed, p)| random_connected(&mut seeded(seed), n, p))
}

fn int_matrix(max_n: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n).map(|c| c.to_vec()).collect();
            ExactMatrix::from_i64_rows(&rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in any_graph(12)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_long_form(n in 63usize..80, seed in any::<u64>()) {
        let g = random_connected(&mut seeded(seed), n, 0.05);
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn cayley_hamilton(m in int_matrix(6)) {
        let p = charpoly(&m).unwrap();
        prop_assert!(eval_matrix_poly(&p, &m).unwrap().is_zero());
    }

    #[test]
    fn log_trace_on_integer_matrices(m in int_matrix(5)) {
        // log det(I - wX) = -sum tr(X^k) w^k / k
        let order = 7;
        let d = det_resolvent(&m, &int(1)).unwrap();
        let lhs = PowerSeries::from_poly(&d, order).log().unwrap();
        let tr = power_traces(&m, order);
        let mut c = vec![int(0)];
        for k in 1..=order {
            c.push(-&tr[k - 1] / int(k as i64));
        }
        prop_assert_eq!(lhs, PowerSeries::new(order, c));
    }

    #[test]
    fn sector_identity_and_bass(g in connected_graph(1, 8)) {
        let es = OrientedEdgeSpace::new(&g);
        prop_assert!(es.verify_sector_identity().is_ok());
        prop_assert!(es.verify_cross_antisymmetry().is_ok());
        prop_assert_eq!(bass_det(&g).unwrap(), hashimoto_det(&g));
    }

    #[test]
    fn bass_on_arbitrary_graphs(g in any_graph(7)) {
        prop_assert_eq!(bass_det(&g).unwrap(), hashimoto_det(&g));
    }

    #[test]
    fn gauge_invariance(g in connected_graph(2, 8), seed in any::<u64>()) {
        let es = OrientedEdgeSpace::new(&g);
        let m = es.sector_blocks().m;
        let signs = ihara_sectors::graph::random::random_signs(&mut seeded(seed), g.m());
        let sigma = GaugeSign::new(signs).unwrap();
        let re = es.regauge(&sigma).unwrap();
        let m2 = re.sector_blocks().m;
        prop_assert_eq!(&m2, &(&m * &sigma.matrix()));
        prop_assert_eq!(&m2 * &m2.transpose(), &m * &m.transpose());
        prop_assert_eq!(shadow_set(&re, 2), shadow_set(&es, 2));
        // the Hashimoto determinant never depended on the gauge
        prop_assert!(re.verify_sector_identity().is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn isomorphism_invariance(g in connected_graph(2, 8), seed in any::<u64>()) {
        let base = fingerprint(&g, 8, 2);
        let mut rng = seeded(seed);
        for _ in 0..10 {
            let p = random_permutation(&mut rng, g.n());
            let h = g.relabel(&p);
            prop_assert!(fingerprint(&h, 8, 2).same_invariants(&base));
        }
    }
}

fn census_lines(seed: u64, count: usize) -> Vec<String> {
    let mut rng = seeded(seed);
    let mut lines: Vec<String> = (0..count)
        .map(|i| encode_graph6(&random_connected(&mut rng, 4 + i % 4, 0.5)))
        .collect();
    // guarantee at least one nontrivial class
    lines.push("H?ABePt".into());
    lines.push("H?B@`jh".into());
    lines
}

#[test]
fn screen_output_independent_of_worker_count() {
    let lines = census_lines(3, 60);
    let mut cfg = ScreenConfig::new(InputSource::Lines(lines));
    cfg.order = 8;
    let one = run_screen(&cfg).unwrap();
    for jobs in [2, 4, 7] {
        cfg.jobs = jobs;
        let many = run_screen(&cfg).unwrap();
        assert_eq!(many, one, "jobs = {jobs}");
    }
    assert!(one.classes.iter().any(|c| c.members.contains(&"H?ABePt".to_string())));
}

#[test]
fn store_round_trip_reproduces_grouping() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fp.jsonl");
    let mut cfg = ScreenConfig::new(InputSource::Builtin(5));
    cfg.order = 8;
    cfg.store = Some(path.clone());
    cfg.key = ihara_sectors::screen::parse_key("A").unwrap();
    let out = run_screen(&cfg).unwrap();
    let stored = load_store(&path).unwrap();
    assert_eq!(stored, out.fingerprints);
    let (classes, _, _) = group_fingerprints(&stored, &cfg.key, cfg.pair_cap);
    assert_eq!(classes, out.classes);

    // append-only: a second run doubles the store, grouping sees duplicates
    run_screen(&cfg).unwrap();
    assert_eq!(load_store(&path).unwrap().len(), 2 * stored.len());

    std::fs::write(&path, "{not json}\n").unwrap();
    assert!(load_store(&path).is_err());
}

#[test]
fn line_factor_is_reversed_charpoly() {
    let g = Graph::petersen();
    let l = OrientedEdgeSpace::new(&g).sector_blocks().l;
    let chi = charpoly(&l).unwrap();
    let m = g.m();
    let rev: Vec<_> = (0..=m).map(|k| chi.coeff(m - k) / int(1i64 << k)).collect();
    assert_eq!(ihara_sectors::zeta::line_factor(&g), RatPoly::new(rev));
}
