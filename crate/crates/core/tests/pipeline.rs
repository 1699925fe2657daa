use girthforge::construction::{
    edge_scale_for_degree, event_a_check, run_pipeline, verify_construction, ConstructionParams,
    VerifyOptions, DEFAULT_CYCLE_CAP,
};
use girthforge::format::{
    parse_curves, parse_graph, parse_layered, parse_poset, write_curves, write_graph, write_layered,
    write_poset, Meta,
};
use girthforge::curve::realize_height2;
use girthforge::poset::{covers_from_order, is_uniquely_generated, random_height2};
use girthforge::Exec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn repaired_graphs_verify(seed in any::<u64>(), triple in 0usize..3) {
        let (k, m, r) = [(4usize, 24usize, 5usize), (5, 20, 6), (6, 16, 7)][triple];
        let params = ConstructionParams::desk(k, m, r, seed).with_scale(edge_scale_for_degree(k, 6.0));
        let out = run_pipeline(&params, DEFAULT_CYCLE_CAP, Exec::Parallel).unwrap();
        let ea = event_a_check(&out.layered);
        let report = verify_construction(&out.gprime, r, m, &ea, &VerifyOptions::default());
        prop_assert!(report.passed(), "{}", report);
        let cd = covers_from_order(&out.poset);
        prop_assert!(is_uniquely_generated(&cd));
        prop_assert_eq!(cd.edges().collect::<Vec<_>>(), out.gprime.edges().collect::<Vec<_>>());
        prop_assert_eq!(out.gprime.n() + out.repair.deleted.len(), k * m);
    }

    #[test]
    fn pipeline_is_deterministic_across_exec(seed in any::<u64>()) {
        let params = ConstructionParams::desk(4, 24, 5, seed);
        let a = run_pipeline(&params, DEFAULT_CYCLE_CAP, Exec::Sequential).unwrap();
        let b = run_pipeline(&params, DEFAULT_CYCLE_CAP, Exec::Parallel).unwrap();
        prop_assert_eq!(a.layered, b.layered);
        prop_assert_eq!(a.gprime, b.gprime);
        prop_assert_eq!(a.repair.deleted, b.repair.deleted);
    }

    #[test]
    fn formats_round_trip(seed in any::<u64>(), a in 0usize..6, b in 0usize..6) {
        let params = ConstructionParams::desk(3, 6, 4, seed);
        let out = run_pipeline(&params, DEFAULT_CYCLE_CAP, Exec::Sequential).unwrap();
        let meta = Meta::new().with("seed", seed);

        let text = write_layered(&out.layered, &meta);
        let (lg, m2) = parse_layered(&text).unwrap();
        prop_assert_eq!(&lg, &out.layered);
        let seed_text = seed.to_string();
        prop_assert_eq!(m2.get("seed"), Some(seed_text.as_str()));

        let text = write_graph(&out.gprime, &meta);
        prop_assert_eq!(parse_graph(&text).unwrap().0, out.gprime.clone());

        let cd = covers_from_order(&out.poset);
        let text = write_poset(&cd, Some(out.poset.extension()), &meta);
        let pf = parse_poset(&text).unwrap();
        let p = pf.poset().unwrap();
        prop_assert_eq!(p.relations().collect::<Vec<_>>(), out.poset.relations().collect::<Vec<_>>());
        prop_assert_eq!(write_poset(&covers_from_order(&p), Some(p.extension()), &meta), text);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h2 = random_height2(a, b, 0.5, &mut rng);
        let fam = realize_height2(&h2).unwrap();
        let text = write_curves(&fam, &meta);
        let (back, _) = parse_curves(&text).unwrap();
        prop_assert_eq!(write_curves(&back, &meta), text);
    }
}

#[test]
fn truncated_files_are_rejected() {
    let params = ConstructionParams::desk(3, 6, 4, 11);
    let out = run_pipeline(&params, DEFAULT_CYCLE_CAP, Exec::Sequential).unwrap();
    assert!(out.gprime.edge_count() > 0);
    let text = write_graph(&out.gprime, &Meta::new());
    let lines: Vec<&str> = text.lines().collect();
    let shorter = lines[..lines.len() - 1].join("\n");
    assert!(parse_graph(&shorter).is_err());
}
