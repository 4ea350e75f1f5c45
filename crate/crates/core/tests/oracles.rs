mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toughham_core::graph::{complete_bipartite, cycle, petersen};
use toughham_core::hamiltonian::hamiltonian_cycle;
use toughham_core::invariants::{independence_number, max_independent_set, sigma2, toughness};
use toughham_core::{Graph, Rational};

fn oracle_tau(g: &Graph) -> Rational {
    match common::toughness(g) {
        Some((s, c)) => Rational::new(s, c),
        None => Rational::Infinity,
    }
}

#[test]
fn hamiltonian_matches_backtracking() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut yes = 0;
    let mut total = 0;
    for n in 5..=12 {
        for p in [0.2, 0.5, 0.8] {
            for _ in 0..25 {
                let g = common::random_graph(&mut rng, n, p);
                let found = hamiltonian_cycle(&g);
                assert_eq!(found.is_some(), common::is_hamiltonian(&g), "{g:?}");
                if let Some(c) = found {
                    assert_eq!(c.len(), n);
                    c.validate(&g).unwrap();
                    yes += 1;
                }
                total += 1;
            }
        }
    }
    assert_eq!(total, 600);
    assert!(
        yes > 100 && yes < 500,
        "sample should mix both outcomes, got {yes}"
    );
}

#[test]
fn invariants_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=9 {
        for p in [0.15, 0.4, 0.7, 0.9] {
            for _ in 0..12 {
                let g = common::random_graph(&mut rng, n, p);
                let t = toughness(&g);
                assert_eq!(t.value, oracle_tau(&g), "{g:?}");
                assert!(t.verify_witness(&g));
                assert_eq!(independence_number(&g), common::independence_number(&g));
                let mis = max_independent_set(&g);
                assert!(g.is_independent(mis));
                assert_eq!(mis.len(), common::independence_number(&g));
                let s2 = common::sigma2(&g).map_or(Rational::Infinity, Rational::from);
                assert_eq!(sigma2(&g), s2);
            }
        }
    }
}

#[test]
fn known_toughness_values() {
    assert_eq!(toughness(&petersen()).value, oracle_tau(&petersen()));
    assert_eq!(oracle_tau(&petersen()), Rational::new(4, 3));
    for n in [5, 7, 9, 11] {
        let g = complete_bipartite((n - 1) / 2, n.div_ceil(2)).unwrap();
        assert_eq!(
            toughness(&g).value,
            Rational::new(n as i64 - 1, n as i64 + 1)
        );
    }
    assert_eq!(toughness(&cycle(9).unwrap()).value, Rational::ONE);
}
