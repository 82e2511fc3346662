#![allow(dead_code)]

use ndd_hull::codec::{Basis, DigitVector, Word};
use ndd_hull::hull::{Ray, RaySet};
use ndd_hull::Regex;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn basis(r: u32, m: usize) -> Basis {
    Basis::new(r, m).unwrap()
}

pub fn random_letter(rng: &mut TestRng, basis: Basis) -> DigitVector {
    let digits = (0..basis.dim()).map(|_| rng.gen_range(0..basis.radix())).collect();
    DigitVector::new(basis, digits).unwrap()
}

pub fn random_word(rng: &mut TestRng, basis: Basis, min_len: usize, max_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len);
    let letters = (0..len).map(|_| random_letter(rng, basis)).collect();
    Word::new(basis, letters).unwrap()
}

/// Random regex with at most `budget` nodes and star height at most `stars`.
pub fn random_regex(rng: &mut TestRng, basis: Basis, budget: usize, stars: usize) -> Regex {
    let leaf = |rng: &mut TestRng| match rng.gen_range(0..20) {
        0 => Regex::Epsilon,
        1 => Regex::Empty,
        _ => Regex::Letter(random_letter(rng, basis)),
    };
    if budget < 2 || (budget == 2 && stars == 0) {
        return leaf(rng);
    }
    let kind = rng.gen_range(0..10);
    if budget == 2 || (kind < 3 && stars > 0) {
        return Regex::star(random_regex(rng, basis, budget - 1, stars - 1));
    }
    let left = rng.gen_range(1..=budget - 2);
    let a = random_regex(rng, basis, left, stars);
    let b = random_regex(rng, basis, budget - 1 - left, stars);
    if kind < 6 {
        Regex::concat(a, b)
    } else {
        Regex::union(a, b)
    }
}

/// The regression suite: `count` regexes over r = 2, m ∈ {1, 2}.
pub fn regex_suite(seed: u64, count: usize) -> Vec<(Basis, Regex)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let b = basis(2, 1 + i % 2);
            let budget = rng.gen_range(1..=12);
            (b, random_regex(&mut rng, b, budget, 3))
        })
        .collect()
}

pub fn random_ray(rng: &mut TestRng, m: usize, span: i64) -> Option<Ray> {
    let alpha: Vec<i64> = (0..m).map(|_| rng.gen_range(-span..=span)).collect();
    let c = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=5) };
    Ray::from_ints(&alpha, c).unwrap()
}

pub fn random_ray_set(rng: &mut TestRng, basis: Basis, max_rays: usize, span: i64) -> RaySet {
    let n = rng.gen_range(1..=max_rays);
    RaySet::from_rays(basis, (0..n).filter_map(|_| random_ray(rng, basis.dim(), span)))
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}
