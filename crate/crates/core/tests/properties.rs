mod common;

use std::collections::BTreeSet;

use common::*;
use ndd_hull::codec::{rho, Word};
use ndd_hull::hull::{hull_rho, HullEngine};
use ndd_hull::lang::{
    enumerate, enumerate_ndd, ndd_to_regex, parse_ndd, to_chains, Ndd, DEFAULT_MAX_CHAINS,
};
use ndd_hull::oracle::{cloud, direction_check, finite_hull, polytope_bound};
use ndd_hull::poly::{cone_contains, equal, includes, minimize, rays_to_hrep};
use ndd_hull::{Regex, Ray, RaySet};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn chains_language(e: &Regex, b: ndd_hull::Basis, k: usize) -> BTreeSet<Word> {
    let chains = to_chains(e, b, DEFAULT_MAX_CHAINS).unwrap();
    for c in &chains {
        for s in &c.segments {
            assert!(!s.body.is_empty_language(), "empty body in {c}");
        }
    }
    let union = chains
        .iter()
        .map(|c| c.to_regex())
        .fold(Regex::Empty, Regex::union);
    enumerate(&union, b, k)
}

fn random_ndd(rng: &mut TestRng, b: ndd_hull::Basis) -> Ndd {
    let n = rng.gen_range(1..=4u64);
    let mut a = Ndd::new(b);
    for s in 0..n {
        a.add_state(s, s == 0 || rng.gen_bool(0.2), rng.gen_bool(0.4));
    }
    for _ in 0..rng.gen_range(0..=7) {
        let (f, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        a.add_transition(f, random_letter(rng, b), t).unwrap();
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chains_preserve_language(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = rng(seed);
        let b = basis(2, m);
        let e = random_regex(&mut rng, b, 10, 3);
        let k = if m == 1 { 8 } else { 5 };
        prop_assert_eq!(chains_language(&e, b, k), enumerate(&e, b, k));
    }

    #[test]
    fn automaton_to_regex_preserves_language(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = rng(seed);
        let a = random_ndd(&mut rng, basis(2, m));
        let e = ndd_to_regex(&a);
        prop_assert_eq!(enumerate(&e, a.basis(), 6), enumerate_ndd(&a, 6));
        prop_assert_eq!(parse_ndd(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn member_agrees_with_lp(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let b = basis(2, rng.gen_range(1..=3));
        let mut rays = random_ray_set(&mut rng, b, 8, 4);
        rays.insert(Ray::point(vec![BigInt::from(0); b.dim()]));
        let p = rays_to_hrep(&rays);
        let gens: Vec<Vec<BigInt>> = rays.iter().map(Ray::lifted).collect();
        for _ in 0..20 {
            let x: Vec<i64> = (0..b.dim()).map(|_| rng.gen_range(-6..=6)).collect();
            let x = ints(&x);
            let mut lifted = x.clone();
            lifted.push(BigInt::from(1));
            prop_assert_eq!(p.member(&x), cone_contains(&gens, &lifted), "{:?} vs {}", x, rays);
        }
    }

    #[test]
    fn minimize_is_idempotent(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let b = basis(2, rng.gen_range(1..=3));
        let mut rays = random_ray_set(&mut rng, b, 8, 5);
        rays.insert(Ray::point(vec![BigInt::from(1); b.dim()]));
        let once = minimize(&rays);
        prop_assert!(once.len() <= rays.len());
        prop_assert_eq!(minimize(&once), once.clone());
        prop_assert!(equal(&once, &rays));
        prop_assert!(includes(&rays, &rays_to_hrep(&once)));
    }

    #[test]
    fn hull_is_sound(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = rng(seed);
        let b = basis(2, m);
        let e = random_regex(&mut rng, b, 12, 3);
        let p = rays_to_hrep(&hull_rho(&e, b).unwrap());
        for x in &cloud(&e, b, if m == 1 { 10 } else { 6 }).points {
            prop_assert!(p.member(x), "{} at {:?}", e, x);
        }
    }
}

#[test]
fn bounded_hulls_match_finite_hull() {
    let mut rng = rng(11);
    let mut seen = 0;
    for i in 0..200 {
        let b = basis(2, 1 + i % 2);
        let e = random_regex(&mut rng, b, 10, 0);
        let r = hull_rho(&e, b).unwrap();
        let chains = to_chains(&e, b, DEFAULT_MAX_CHAINS).unwrap();
        let pc = cloud(&e, b, polytope_bound(&chains));
        if pc.is_empty() {
            assert!(r.is_empty(), "{e}");
            continue;
        }
        assert!(equal(&r, &finite_hull(&pc).unwrap()), "{e}");
        seen += 1;
    }
    assert!(seen > 100);
}

#[test]
fn single_word_stars_point_in_the_right_direction() {
    let b = basis(2, 2);
    for text in [&[[1, 0], [0, 1]][..], &[[1, 1]], &[[0, 1], [1, 1], [0, 0]]] {
        let w = Word::from_digits(b, text.iter().copied()).unwrap();
        let e = Regex::star(Regex::from_word(&w));
        let r = hull_rho(&e, b).unwrap();
        let dir = Ray::normalize({
            let mut v = rho(&w);
            v.push(BigInt::from(0));
            v
        })
        .unwrap()
        .unwrap();
        assert!(r.contains(&dir), "{e}: {r}");
        assert!(direction_check(&r, &cloud(&e, b, 20), 1e-6), "{e}");
    }
}

#[test]
fn aplus_fixture_language() {
    let a = parse_ndd(&std::fs::read_to_string(fixture("aplus.ndd")).unwrap()).unwrap();
    let e = ndd_to_regex(&a);
    assert_eq!(enumerate(&e, a.basis(), 6), enumerate_ndd(&a, 6));
    for w in enumerate_ndd(&a, 6) {
        let x = rho(&w);
        assert_eq!(&x[0] + &x[1], x[2]);
    }
    // every triple with small x, y is reached
    let points: BTreeSet<Vec<BigInt>> = enumerate_ndd(&a, 6).iter().map(rho).collect();
    for x in 0..16i64 {
        for y in 0..16i64 {
            assert!(points.contains(&ints(&[x, y, x + y])), "({x},{y})");
        }
    }
}

#[test]
fn hull_is_deterministic() {
    for (b, e) in regex_suite(3, 40) {
        let first = hull_rho(&e, b).unwrap();
        let mut engine = HullEngine::new(b);
        let again = engine.hull_rho(&e).unwrap();
        assert_eq!(first, again);
        assert_eq!(first.to_string(), hull_rho(&e, b).unwrap().to_string());
        assert_eq!(
            rays_to_hrep(&first).to_string(),
            rays_to_hrep(&again).to_string()
        );
    }
}

#[test]
fn empty_inputs() {
    let b = basis(3, 2);
    assert!(hull_rho(&Regex::Empty, b).unwrap().is_empty());
    assert_eq!(hull_rho(&Regex::Epsilon, b).unwrap(), RaySet::origin(b));
    assert!(rays_to_hrep(&RaySet::empty(b)).is_empty());
}
