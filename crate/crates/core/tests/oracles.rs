mod common;

use common::*;
use egr::harness::{default_corpus, run_suite, SuiteOptions, Theorem};
use egr::lattice::{annihilator, ideal_product, zero_divisors};
use egr::ring::{build_ring, factorize, parse_ring_spec, RingSpec};
use egr::solvers::{
    chromatic_number, clique_number, compute_invariants, twin_free_clique_number, EdgeClass,
    SolverOptions,
};
use egr::{detect_shape, Graph, IdealLattice, Shape, Structure};
use proptest::prelude::*;

fn corpus_structures() -> Vec<(String, Structure)> {
    default_corpus()
        .into_iter()
        .map(|s| {
            let st = Structure::parse(&s).unwrap();
            (s, st)
        })
        .collect()
}

fn rad(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Z/n against number theory: ideals are (d) for d | n, |(d)| = n/d.

fn zn_divisor_of(lat: &IdealLattice, n: u64, id: usize) -> u64 {
    n / lat.ideal(id).size() as u64
}

#[test]
fn zn_lattice_matches_divisors() {
    for n in 2..=120u64 {
        let ring = build_ring(&RingSpec::ZMod(n)).unwrap();
        let lat = IdealLattice::enumerate(&ring).unwrap();
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(lat.len(), divisors.len(), "Z/{n}");
        for k in 0..lat.len() {
            let d = zn_divisor_of(&lat, n, k);
            let expected: Vec<usize> = (0..n).filter(|a| a % d == 0).map(|a| a as usize).collect();
            assert_eq!(
                lat.ideal(k).elements().collect::<Vec<_>>(),
                expected,
                "Z/{n} ({d})"
            );
            // Ann((d)) = (n/d)
            assert_eq!(zn_divisor_of(&lat, n, lat.annihilator[k]), n / d);
            // nilpotent iff rad(n) | d
            assert_eq!(lat.nilpotent[k], d.is_multiple_of(rad(n)), "Z/{n} ({d})");
            // essential iff d | n / rad(n)
            assert_eq!(
                lat.is_essential(k),
                (n / rad(n)).is_multiple_of(d),
                "Z/{n} ({d})"
            );
            for j in 0..lat.len() {
                let e = zn_divisor_of(&lat, n, j);
                let p = lat.product_id(&ring, k, j);
                assert_eq!(zn_divisor_of(&lat, n, p), gcd(d * e, n));
            }
        }
    }
}

#[test]
fn zn_graph_matches_divisor_rule() {
    // vertices: 1 < d < n; d -- e iff rad(n) | d*e
    for n in 2..=200u64 {
        let s = Structure::parse(&format!("Z/{n}")).unwrap();
        let ds: Vec<u64> =
            s.eg.vertices
                .iter()
                .map(|&id| zn_divisor_of(&s.lattice, n, id))
                .collect();
        let mut expected_vertices: Vec<u64> = (2..n).filter(|d| n % d == 0).collect();
        let mut got = ds.clone();
        got.sort_unstable();
        expected_vertices.sort_unstable();
        assert_eq!(got, expected_vertices, "Z/{n}");
        let r = rad(n);
        for (a, &d) in ds.iter().enumerate() {
            for (b, &e) in ds.iter().enumerate() {
                if a != b {
                    assert_eq!(
                        s.graph().has_edge(a, b),
                        (d * e) % r == 0,
                        "Z/{n}: {d}, {e}"
                    );
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// rings

#[test]
fn crt_isomorphism_exhaustive() {
    for (m, n) in [(2u64, 3u64), (4, 9), (8, 27), (16, 25), (7, 11), (99, 100)] {
        let big = build_ring(&RingSpec::ZMod(m * n)).unwrap();
        let prod = build_ring(&RingSpec::Product(vec![
            RingSpec::ZMod(m),
            RingSpec::ZMod(n),
        ]))
        .unwrap();
        let f = |a: u64| prod.from_components(&[(a % m) as usize, (a % n) as usize]);
        let mut seen = vec![false; prod.order()];
        for a in 0..m * n {
            let fa = f(a);
            assert!(!seen[fa], "not injective");
            seen[fa] = true;
            // additive on the generator, hence a ring map since 1 -> 1
            assert_eq!(f((a + 1) % (m * n)), prod.add(fa, prod.one()));
            assert_eq!(
                f(a),
                prod.from_components(&[(a % m) as usize, (a % n) as usize])
            );
        }
        assert_eq!(f(1), prod.one());
        assert_eq!(big.order(), prod.order());
    }
}

#[test]
fn galois_fields_have_cyclic_unit_groups() {
    for q in [4u64, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125] {
        let r = build_ring(&RingSpec::GaloisField(q)).unwrap();
        let order = q - 1;
        let proper: Vec<u64> = (1..order).filter(|d| order % d == 0).collect();
        let generator = (1..r.order()).find(|&a| proper.iter().all(|&d| r.pow(a, d) != r.one()));
        assert!(generator.is_some(), "GF({q})");
        assert!((1..r.order()).all(|a| r.pow(a, order) == r.one()));
    }
}

#[test]
fn element_indexing_is_deterministic() {
    for text in ["Z/3[x]/(x^2) x Z/2", "GF(4) x GF(9)", "Z/4 x Z/81"] {
        let a = build_ring(&parse_ring_spec(text).unwrap()).unwrap();
        let b = build_ring(&parse_ring_spec(text).unwrap()).unwrap();
        for x in 0..a.order() {
            assert_eq!(a.coordinates(x), b.coordinates(x));
            assert_eq!(a.label(x), b.label(x));
            assert_eq!(a.mul(x, a.order() - 1 - x), b.mul(x, b.order() - 1 - x));
        }
    }
}

fn small_spec() -> impl Strategy<Value = RingSpec> {
    let atom = prop_oneof![
        (2u64..40).prop_map(RingSpec::ZMod),
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]).prop_map(RingSpec::GaloisField),
        prop::sample::select(vec![
            (2u64, vec![0u64, 0, 1]),
            (3, vec![0, 0, 1]),
            (2, vec![0, 0, 0, 1]),
            (2, vec![1, 1, 1]),
            (4, vec![0, 0, 1]),
        ])
        .prop_map(|(base, modulus)| RingSpec::QuotientPoly { base, modulus }),
    ];
    prop::collection::vec(atom, 1..=3)
        .prop_filter("order at most 10^4", |v| {
            v.iter().map(|s| s.order()).product::<u128>() <= 10_000
        })
        .prop_map(|mut v| {
            if v.len() == 1 {
                v.pop().unwrap()
            } else {
                RingSpec::Product(v)
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_on_random_triples(spec in small_spec(), seeds in prop::collection::vec(any::<u64>(), 60)) {
        let r = build_ring(&spec).unwrap();
        let n = r.order() as u64;
        for t in seeds.chunks(3) {
            let (a, b, c) = ((t[0] % n) as usize, (t[1] % n) as usize, (t[2] % n) as usize);
            prop_assert_eq!(r.add(a, b), r.add(b, a));
            prop_assert_eq!(r.mul(a, b), r.mul(b, a));
            prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
            prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
            prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
            prop_assert_eq!(r.mul(a, r.one()), a);
            prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        }
    }

    #[test]
    fn lattice_identities_on_random_rings(spec in small_spec()) {
        let s = Structure::from_spec(&spec, egr::Limits::default()).unwrap();
        let (ring, lat) = (&s.ring, &s.lattice);
        prop_assert_eq!(&lat.min_primes, &lat.maximal_ideals);
        prop_assert_eq!(lat.nilradical, lat.min_prime_intersection());
        prop_assert_eq!(lat.socle, lat.essential_intersection());
        for k in 0..lat.len() {
            let i = lat.ideal(k);
            let ann = annihilator(ring, i);
            prop_assert_eq!(lat.id_of(&ann), Some(lat.annihilator[k]));
            let ann_ess = lat.is_essential(lat.annihilator[k]);
            prop_assert_eq!(lat.nilpotent[k], ann_ess);
            prop_assert_eq!(lat.nilpotent[k], lat.contains(lat.nilradical, k));
            prop_assert_eq!(lat.is_essential(k), lat.is_essential_by_scan(k));
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_omega_or_chi(seed in any::<u64>(), u in 0usize..10, v in 0usize..10) {
        let g = random_graphs(1, 10, seed).pop().unwrap();
        let n = g.order();
        let (u, v) = (u % n, v % n);
        let mut h = g.clone();
        h.add_edge(u, v);
        prop_assert!(clique_number(&h).size >= clique_number(&g).size);
        prop_assert!(chromatic_number(&h).colors >= chromatic_number(&g).colors);
    }
}

// ---------------------------------------------------------------------------
// graph laws on the corpus

#[test]
fn reduced_edge_law() {
    for (name, s) in corpus_structures() {
        if !s.lattice.is_reduced() {
            continue;
        }
        let g = s.graph();
        for (a, &i) in s.eg.vertices.iter().enumerate() {
            for (b, &j) in s.eg.vertices.iter().enumerate() {
                if a == b {
                    continue;
                }
                let p = ideal_product(&s.ring, s.lattice.ideal(i), s.lattice.ideal(j)).unwrap();
                assert_eq!(g.has_edge(a, b), p.is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn nilpotent_vertices_are_universal() {
    for (name, s) in corpus_structures() {
        let n = s.eg.order();
        for v in s.nilpotent_vertices() {
            assert_eq!(s.graph().degree(v), n - 1, "{name}");
        }
    }
}

#[test]
fn bipartite_implies_complete_bipartite() {
    for (name, s) in corpus_structures() {
        let g = s.graph();
        if g.order() >= 2 && g.is_bipartite() {
            assert!(egr::eg::complete_bipartite_parts(g).is_some(), "{name}");
        }
    }
}

#[test]
fn completeness_criterion() {
    for (name, s) in corpus_structures() {
        let g = s.graph();
        if g.order() == 0 {
            continue;
        }
        let complete = detect_shape(g) == Shape::Complete(g.order());
        let two_fields = s.lattice.is_reduced() && s.lattice.maximal_ideals.len() == 2;
        let z_is_nil = &zero_divisors(&s.ring) == s.lattice.nilradical_ideal().members();
        if s.lattice.is_reduced() {
            assert_eq!(
                complete,
                g.order() <= 2 && g.edge_count() == g.order() * (g.order() - 1) / 2,
                "{name}"
            );
        } else {
            assert_eq!(complete, z_is_nil || two_fields, "{name}");
        }
    }
}

#[test]
fn squarefree_zn_is_reduced() {
    for n in 2..=300u64 {
        let s = Structure::parse(&format!("Z/{n}")).unwrap();
        let squarefree = factorize(n).iter().all(|&(_, e)| e == 1);
        assert_eq!(s.lattice.is_reduced(), squarefree, "Z/{n}");
    }
}

// ---------------------------------------------------------------------------
// solvers against brute force

fn check_against_oracles(g: &Graph, what: &str) {
    let inv = compute_invariants(g, &SolverOptions::default());
    inv.validate(g).unwrap_or_else(|e| panic!("{what}: {e}"));
    assert_eq!(inv.omega, naive_omega(g), "{what}: omega");
    assert_eq!(inv.chi, naive_chi(g), "{what}: chi");
    assert_eq!(
        inv.twin_free_omega,
        naive_twin_free_omega(g),
        "{what}: twin-free omega"
    );
    let class1 = naive_is_class1(g);
    let expected = if class1 {
        EdgeClass::Class1
    } else {
        EdgeClass::Class2
    };
    assert_eq!(inv.edge_class, expected, "{what}: edge class");
}

#[test]
fn random_graphs_match_brute_force() {
    for (i, g) in random_graphs(200, 12, 0x5eed).iter().enumerate() {
        check_against_oracles(g, &format!("random graph {i}"));
    }
}

#[test]
fn corpus_graphs_match_brute_force() {
    for (name, s) in corpus_structures() {
        if s.graph().order() <= 12 {
            check_against_oracles(s.graph(), &name);
        }
    }
}

#[test]
fn corpus_witnesses_validate() {
    for (name, s) in corpus_structures() {
        let inv = compute_invariants(s.graph(), &SolverOptions::default());
        inv.validate(s.graph())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(inv.omega, inv.chi, "{name}: weak perfectness");
        assert_eq!(twin_free_clique_number(s.graph()).size, inv.twin_free_omega);
    }
}

#[test]
fn suite_is_independent_of_worker_count() {
    let corpus: Vec<String> = ["Z/36", "Z/12", "Z/2 x Z/3 x Z/5", "Z/2[x]/(x^3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let opts = SuiteOptions::default();
    let many = run_suite(&corpus, &Theorem::ALL, &opts);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let one = pool.install(|| run_suite(&corpus, &Theorem::ALL, &opts));
    assert_eq!(many, one);
}

#[test]
fn failures_carry_checkable_counterexamples() {
    let results = run_suite(&default_corpus(), &Theorem::ALL, &SuiteOptions::default());
    for r in results
        .iter()
        .filter(|r| r.verdict == egr::harness::Verdict::Fail)
    {
        let cx = r
            .counterexample
            .as_ref()
            .expect("failure without counterexample");
        let s = Structure::parse(&r.ring_spec).unwrap();
        assert!(cx.vertices.iter().all(|&v| v < s.graph().order()));
        if r.theorem_id == "twin-free" {
            assert!(egr::solvers::validate::is_twin_free_clique(
                s.graph(),
                &cx.vertices
            ));
        }
    }
}
