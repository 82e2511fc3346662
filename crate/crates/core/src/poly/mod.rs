//! Exact polyhedra: conversion between rays and constraints, membership,
//! inclusion, equality, and generator minimization.
//!
//! A ray set `R` over dimension `m` generates a cone in `R^(m+1)`; its
//! polyhedron is the slice at last coordinate 1. Facets of that cone come
//! from double description on the dual, and are then reduced modulo the
//! equalities so the output is canonical.

mod dd;
mod lp;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::codec::Basis;
use crate::hull::{Ray, RaySet};

pub use lp::cone_contains;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

/// `⟨a, x⟩ ≥ b` or `⟨a, x⟩ = b`, with `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub a: Vec<BigInt>,
    pub b: BigInt,
    pub rel: Relation,
}

impl Constraint {
    pub fn new(mut a: Vec<BigInt>, mut b: BigInt, rel: Relation) -> Constraint {
        let mut all = a.clone();
        all.push(b.clone());
        dd::primitive(&mut all);
        b = all.pop().expect("nonempty");
        a = all;
        if rel == Relation::Eq {
            if let Some(first) = a.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    a.iter_mut().for_each(|x| *x = -&*x);
                    b = -b;
                }
            }
        }
        Constraint { a, b, rel }
    }

    pub fn from_ints(a: &[i64], b: i64, rel: Relation) -> Constraint {
        Constraint::new(a.iter().map(|&x| BigInt::from(x)).collect(), b.into(), rel)
    }

    pub fn is_satisfied_by(&self, x: &[BigInt]) -> bool {
        let lhs = dd::dot(&self.a, x);
        match self.rel {
            Relation::Ge => lhs >= self.b,
            Relation::Eq => lhs == self.b,
        }
    }

    /// For `c > 0`, whether the point `α / c` satisfies the constraint; for
    /// `c = 0`, whether `α` is a recession direction of its half-space.
    pub fn admits(&self, ray: &Ray) -> bool {
        let lhs = dd::dot(&self.a, ray.alpha());
        let rhs = &self.b * ray.c();
        match self.rel {
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    /// Whether some satisfying point makes `⟨a, x⟩ = b`.
    pub fn is_tight_at(&self, x: &[BigInt]) -> bool {
        dd::dot(&self.a, x) == self.b
    }

    fn sort_key(&self) -> (Relation, std::cmp::Reverse<Vec<BigInt>>, BigInt) {
        (self.rel, std::cmp::Reverse(self.a.clone()), self.b.clone())
    }
}

impl fmt::Display for Constraint {
    /// `x1 + 2x2 - x3 >= 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coef = if mag.is_one() { String::new() } else { mag.to_string() };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{coef}x{}", i + 1)?,
                (true, true) => write!(f, "-{coef}x{}", i + 1)?,
                (false, false) => write!(f, " + {coef}x{}", i + 1)?,
                (false, true) => write!(f, " - {coef}x{}", i + 1)?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " {} {}", self.rel.symbol(), self.b)
    }
}

/// A finite intersection of closed half-spaces and hyperplanes in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    dim: usize,
    constraints: Vec<Constraint>,
    empty: bool,
}

impl Polyhedron {
    pub fn empty(dim: usize) -> Polyhedron {
        Polyhedron {
            dim,
            constraints: Vec::new(),
            empty: true,
        }
    }

    /// Builds a polyhedron from arbitrary constraints; emptiness is decided exactly.
    pub fn from_constraints(dim: usize, constraints: Vec<Constraint>) -> Polyhedron {
        let mut p = Polyhedron {
            dim,
            constraints,
            empty: false,
        };
        p.canonicalize_order();
        let basis = Basis::new(2, dim.max(1)).expect("valid dimension");
        if !hrep_to_rays(&p, basis).has_point() {
            return Polyhedron::empty(dim);
        }
        p
    }

    fn canonicalize_order(&mut self) {
        self.constraints.sort_by_key(Constraint::sort_key);
        self.constraints.dedup();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn member(&self, x: &[BigInt]) -> bool {
        debug_assert_eq!(x.len(), self.dim);
        !self.empty && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }

    /// Membership of the rational point `α / c` (for `c > 0`), or recession
    /// direction test (for `c = 0`).
    pub fn admits(&self, ray: &Ray) -> bool {
        !self.empty && self.constraints.iter().all(|c| c.admits(ray))
    }
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return writeln!(f, "empty");
        }
        if self.constraints.is_empty() {
            return writeln!(f, "universe");
        }
        for c in &self.constraints {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Minimal H-representation of `P(R) = {x : (x, 1) ∈ C(R)}`.
pub fn rays_to_hrep(rays: &RaySet) -> Polyhedron {
    let m = rays.dim();
    if !rays.has_point() {
        return Polyhedron::empty(m);
    }
    let generators: Vec<Vec<BigInt>> = rays.iter().map(Ray::lifted).collect();
    // The dual cone: its lineality gives equalities, its extreme rays facets.
    let dual = dd::solve(&generators, m + 1);

    // Fraction-free reduced echelon form of the equalities, pivoting on the
    // last coordinates first so `x + y - z = 0` keeps `z` as pivot.
    let mut eqs = dual.lineality;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in (0..m).rev() {
        let Some(found) = (row..eqs.len()).find(|&i| !eqs[i][col].is_zero()) else {
            continue;
        };
        eqs.swap(row, found);
        let pivot = eqs[row].clone();
        for (i, e) in eqs.iter_mut().enumerate() {
            if i != row && !e[col].is_zero() {
                *e = reduce(e, &pivot, col);
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    debug_assert_eq!(row, eqs.len(), "equalities involve the point coordinates");

    let mut constraints = Vec::new();
    for e in &eqs {
        constraints.push(Constraint::new(
            e[..m].to_vec(),
            -e[m].clone(),
            Relation::Eq,
        ));
    }
    for h in dual.rays {
        let mut h = h;
        for &(r, col) in &pivots {
            if !h[col].is_zero() {
                h = reduce(&h, &eqs[r], col);
            }
        }
        dd::primitive(&mut h);
        if h[..m].iter().all(Zero::is_zero) {
            // the face at infinity, t ≥ 0
            debug_assert!(!h[m].is_negative());
            continue;
        }
        constraints.push(Constraint::new(h[..m].to_vec(), -h[m].clone(), Relation::Ge));
    }
    let mut p = Polyhedron {
        dim: m,
        constraints,
        empty: false,
    };
    p.canonicalize_order();
    p
}

/// Eliminates column `col` from `v` using `pivot`, scaling `v` by a positive factor.
fn reduce(v: &[BigInt], pivot: &[BigInt], col: usize) -> Vec<BigInt> {
    let p = &pivot[col];
    let (scale, factor) = if p.is_negative() {
        (-p, -&v[col])
    } else {
        (p.clone(), v[col].clone())
    };
    let mut out: Vec<BigInt> = v
        .iter()
        .zip(pivot)
        .map(|(x, y)| &scale * x - &factor * y)
        .collect();
    dd::primitive(&mut out);
    out
}

/// Generators of a polyhedron: lines appear as pairs of opposite directions.
pub fn hrep_to_rays(p: &Polyhedron, basis: Basis) -> RaySet {
    let m = p.dim();
    debug_assert_eq!(basis.dim(), m);
    if p.is_empty() {
        return RaySet::empty(basis);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for c in p.constraints() {
        let mut row = c.a.clone();
        row.push(-c.b.clone());
        if c.rel == Relation::Eq {
            rows.push(row.iter().map(|x| -x).collect());
        }
        rows.push(row);
    }
    let mut t = vec![BigInt::zero(); m + 1];
    t[m] = BigInt::one();
    rows.push(t);

    let cone = dd::solve(&rows, m + 1);
    let mut out = RaySet::empty(basis);
    for l in cone.lineality {
        let neg = l.iter().map(|x| -x).collect();
        out.insert_raw(l).expect("lineality has zero last coordinate");
        out.insert_raw(neg).expect("lineality has zero last coordinate");
    }
    for r in cone.rays {
        out.insert_raw(r).expect("t ≥ 0 is among the constraints");
    }
    out.canonical()
}

/// `P(R) ⊆ P2`, checked on generators since `P2` is closed and convex.
pub fn includes(rays: &RaySet, p: &Polyhedron) -> bool {
    if !rays.has_point() {
        return true;
    }
    !p.is_empty() && rays.iter().all(|r| p.admits(r))
}

pub fn equal(r1: &RaySet, r2: &RaySet) -> bool {
    includes(r1, &rays_to_hrep(r2)) && includes(r2, &rays_to_hrep(r1))
}

/// Greedily drops generators lying in the cone of the remaining ones.
pub fn minimize(rays: &RaySet) -> RaySet {
    let mut kept: Vec<Ray> = rays.iter().cloned().collect();
    let mut i = 0;
    while i < kept.len() {
        let others: Vec<Vec<BigInt>> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r.lifted())
            .collect();
        if cone_contains(&others, &kept[i].lifted()) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    RaySet::from_rays(rays.basis(), kept)
}
