//! One-off stress pass: fresh seeds, larger counts, all cross-oracle checks.
use oddchrom::cluster::{solve_distance_to_cluster, ClusterInstance};
use oddchrom::cocluster::{solve_distance_to_cocluster, CoClusterInstance};
use oddchrom::cograph::{build_cotree, cograph_chi_odd_coloring, cograph_invariants};
use oddchrom::coloring::verify_odd_coloring;
use oddchrom::gen::{self, Rng};
use oddchrom::interval::{chi_odd_proper_interval, color_interval_graph, omega};
use oddchrom::kernel::{kernelize, oracle_decision, DcliqueInstance};
use oddchrom::nd::{compute_nd_partition, solve_neighborhood_diversity};
use oddchrom::oracle::Oracle;
use oddchrom::split::{chi_odd_split, split_partition};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(987654321);
    let oracle = Oracle::new();
    let mut rng = Rng::new(seed);

    let mut count = 0;
    while count < 150 {
        let t = rng.range(0, 3);
        let parts = rng.range(1, 4);
        let sizes: Vec<usize> = (0..parts).map(|_| rng.range(1, 4)).collect();
        let (g, x) = gen::random_cluster_plus(&sizes, t, 1, 2, &mut rng);
        if g.n() > 12 {
            continue;
        }
        let s = solve_distance_to_cluster(&ClusterInstance::new(g.clone(), x, g.n())).unwrap();
        assert_eq!(
            s.result.value,
            oracle.chi_odd(&g).unwrap().value,
            "cluster {g:?}"
        );
        count += 1;
    }
    println!("cluster: 150 ok");

    let mut count = 0;
    while count < 150 {
        let t = rng.range(0, 3);
        let parts = rng.range(1, 4);
        let sizes: Vec<usize> = (0..parts).map(|_| rng.range(1, 4)).collect();
        let (g, x) = gen::random_cocluster_plus(&sizes, t, 1, 2, &mut rng);
        if g.n() > 12 {
            continue;
        }
        let s = solve_distance_to_cocluster(&CoClusterInstance::new(g.clone(), x, g.n())).unwrap();
        assert_eq!(
            s.result.value,
            oracle.chi_odd(&g).unwrap().value,
            "cocluster {g:?}"
        );
        count += 1;
    }
    println!("cocluster: 150 ok");

    let mut count = 0;
    while count < 150 {
        let t = rng.range(1, 4);
        let n = rng.range(t.max(2), 12);
        if n < t {
            continue;
        }
        let g = gen::random_nd_graph(t, n, &mut rng);
        if compute_nd_partition(&g).t() > 4 {
            continue;
        }
        let s = solve_neighborhood_diversity(&g, n).unwrap();
        assert_eq!(
            s.result.value,
            oracle.chi_odd(&g).unwrap().value,
            "nd {g:?}"
        );
        count += 1;
    }
    println!("nd: 150 ok");

    for _ in 0..300 {
        let k = rng.range(2, 6);
        let l = rng.range(0, 7);
        let g = gen::random_split(k, l, &mut rng);
        let sp = split_partition(&g).unwrap();
        let s = chi_odd_split(&g, &sp);
        assert_eq!(
            s.result.value,
            oracle.chi_odd(&g).unwrap().value,
            "split {g:?}"
        );
        assert!(!s.fallback, "split fallback on {g:?}");
    }
    println!("split: 300 ok, zero fallbacks");

    for _ in 0..300 {
        let g = gen::random_cograph(rng.range(2, 8), &mut rng);
        let t = build_cotree(&g).unwrap();
        let tup = cograph_invariants(&t);
        assert_eq!(
            tup.chi_odd,
            oracle.chi_odd(&g).unwrap().value,
            "cograph {g:?}"
        );
        assert_eq!(tup.chi_odd_strong, oracle.chi_odd_strong(&g).unwrap().value);
        assert_eq!(tup.chi_strong, oracle.chi_strong(&g).unwrap().value);
        if let Some(w) = cograph_chi_odd_coloring(&t, &g) {
            assert!(verify_odd_coloring(&g, &w).is_valid());
        }
    }
    println!("cograph: 300 ok");

    let mut count = 0;
    while count < 120 {
        let d = rng.range(0, 3);
        let n = rng.range(d + 2, 15);
        let (g, x) = gen::random_clique_plus(n, d, &mut rng);
        let base = n - d;
        let k = rng.range(base.saturating_sub(1).max(1), base + 3);
        let inst = DcliqueInstance::new(g, x, k);
        let before = oracle_decision(&inst, &oracle).unwrap();
        let out = kernelize(&inst);
        let after = match out.verdict {
            Some(v) => v,
            None => oracle_decision(&out.reduced, &oracle).unwrap(),
        };
        assert_eq!(before, after, "kernel decision changed");
        assert!(out.size_bound_ok());
        count += 1;
    }
    println!("kernel: 120 ok");

    let mut count = 0;
    let mut fb = 0;
    while count < 300 {
        let n = rng.range(2, 45);
        let ir = gen::random_intervals(n, &mut rng);
        let g = ir.companion_graph();
        if g.has_isolated_vertex() {
            continue;
        }
        let out = color_interval_graph(&ir);
        assert!(out.coloring.colors_used() <= omega(&ir) + 1);
        fb += out.fallbacks;
        count += 1;
    }
    println!("interval general: 300 ok, {fb} fallbacks");

    let mut count = 0;
    while count < 120 {
        let n = rng.range(2, 11);
        let ir = gen::random_unit_intervals(n, (n * 3 / 2).max(2), &mut rng);
        let g = ir.companion_graph();
        let r = chi_odd_proper_interval(&ir).unwrap();
        if g.has_isolated_vertex() {
            assert!(r.witness.is_none());
        } else {
            assert_eq!(
                r.value,
                oracle.chi_odd(&g).unwrap().value,
                "proper interval"
            );
        }
        count += 1;
    }
    println!("proper interval: 120 ok");
    println!("stress pass complete (seed {seed})");
}
