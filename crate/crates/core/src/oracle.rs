//! Brute-force references for validating hulls on small inputs.
//!
//! Everything here works from enumerated words and finite point sets; none of
//! it goes through chain decomposition or the ray transforms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::codec::{rho, Basis, Word};
use crate::hull::{Ray, RaySet};
use crate::lang::{for_each_word, for_each_word_ndd, Ndd, Regex};
use crate::poly::{minimize, Polyhedron};
use crate::{Error, Result};

/// `{ρ(σ) : σ accepted, |σ| ≤ bound}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCloud {
    pub basis: Basis,
    pub points: BTreeSet<Vec<BigInt>>,
    pub bound: usize,
}

impl PointCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn cloud(e: &Regex, basis: Basis, bound: usize) -> PointCloud {
    let mut points = BTreeSet::new();
    for_each_word(e, basis, bound, |w| {
        points.insert(rho(&Word::from_letters_unchecked(basis, w.to_vec())));
    });
    PointCloud {
        basis,
        points,
        bound,
    }
}

pub fn cloud_ndd(a: &Ndd, bound: usize) -> PointCloud {
    let basis = a.basis();
    let mut points = BTreeSet::new();
    for_each_word_ndd(a, bound, |w| {
        points.insert(rho(&Word::from_letters_unchecked(basis, w.to_vec())));
    });
    PointCloud {
        basis,
        points,
        bound,
    }
}

/// Exact hull of a finite point set: its vertices as `c = 1` rays.
pub fn finite_hull(pc: &PointCloud) -> Result<RaySet> {
    if pc.is_empty() {
        return Err(Error::EmptyCloud);
    }
    let rays = RaySet::from_rays(pc.basis, pc.points.iter().cloned().map(Ray::point));
    Ok(minimize(&rays))
}

/// Points of the cloud outside `p`.
pub fn soundness_violations<'a>(pc: &'a PointCloud, p: &Polyhedron) -> Vec<&'a Vec<BigInt>> {
    pc.points.iter().filter(|x| !p.member(x)).collect()
}

fn to_f64(v: &[BigInt]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Angle between two nonzero vectors, stable near zero.
pub fn angle(x: &[f64], y: &[f64]) -> f64 {
    let (nx, ny) = (norm(x), norm(y));
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| a / nx - b / ny).collect();
    let sum: Vec<f64> = x.iter().zip(y).map(|(a, b)| a / nx + b / ny).collect();
    2.0 * norm(&diff).atan2(norm(&sum))
}

/// Every `c = 0` ray of `rays` is approached, within `tol` radians, by some
/// cloud point of Euclidean norm at least 4. Vacuously true without directions.
pub fn direction_check(rays: &RaySet, pc: &PointCloud, tol: f64) -> bool {
    let far: Vec<Vec<f64>> = pc
        .points
        .iter()
        .map(|p| to_f64(p))
        .filter(|p| norm(p) >= 4.0)
        .collect();
    rays.directions().all(|d| {
        let d = to_f64(d.alpha());
        far.iter().any(|p| angle(p, &d) < tol)
    })
}

/// Enumeration bound that reaches every vertex of a bounded hull: the total
/// letter count of all chain skeletons plus 4.
pub fn polytope_bound(chains: &[crate::lang::Chain]) -> usize {
    chains.iter().map(|c| c.word_length()).sum::<usize>() + 4
}

/// Every constraint of `p` holds with equality at some cloud point.
pub fn tight_somewhere(pc: &PointCloud, p: &Polyhedron) -> bool {
    p.constraints()
        .iter()
        .all(|c| pc.points.iter().any(|x| c.is_tight_at(x)))
}

/// `ρ(w) / (1 − r^|w|)` as a ray, computed directly from the definition.
pub fn xi_point(w: &Word) -> Option<Ray> {
    if w.is_empty() {
        return None;
    }
    let denom = w.basis().power(w.len()) - BigInt::one();
    let alpha = rho(w).into_iter().map(|v| -v).collect();
    Ray::normalize_infallible(alpha, denom)
}
