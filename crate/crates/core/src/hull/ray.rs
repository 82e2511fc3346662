use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::codec::Basis;
use crate::{Error, Result};

/// A generator `(alpha, c)` of a cone in `R^m × R_+`, kept primitive
/// (gcd of all components is 1). With `c > 0` it stands for the point
/// `alpha / c`; with `c = 0` it is a recession direction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    alpha: Vec<BigInt>,
    c: BigInt,
}

impl Ray {
    /// Divides `(alpha..., c)` by its gcd. The zero tuple spans nothing and
    /// yields `None`.
    pub fn normalize(mut raw: Vec<BigInt>) -> Result<Option<Ray>> {
        let c = raw.pop().expect("raw ray has at least the c component");
        if c.is_negative() {
            return Err(Error::NegativeC(c.to_string()));
        }
        let g = raw.iter().fold(c.clone(), |g, v| g.gcd(v));
        if g.is_zero() {
            return Ok(None);
        }
        Ok(Some(Ray {
            alpha: raw.into_iter().map(|v| v / &g).collect(),
            c: c / &g,
        }))
    }

    pub fn point(coords: Vec<BigInt>) -> Ray {
        Self::normalize_infallible(coords, BigInt::from(1)).expect("c = 1")
    }

    pub fn from_ints(alpha: &[i64], c: i64) -> Result<Option<Ray>> {
        let mut raw: Vec<BigInt> = alpha.iter().map(|&a| BigInt::from(a)).collect();
        raw.push(BigInt::from(c));
        Self::normalize(raw)
    }

    pub(crate) fn normalize_infallible(mut alpha: Vec<BigInt>, c: BigInt) -> Option<Ray> {
        alpha.push(c);
        Self::normalize(alpha).expect("c is nonnegative by construction")
    }

    pub fn alpha(&self) -> &[BigInt] {
        &self.alpha
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_point(&self) -> bool {
        self.c.is_positive()
    }

    pub fn is_direction(&self) -> bool {
        self.c.is_zero()
    }

    /// `(alpha..., c)` as one homogeneous vector.
    pub fn lifted(&self) -> Vec<BigInt> {
        let mut v = self.alpha.clone();
        v.push(self.c.clone());
        v
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ") {}", self.c)
    }
}

/// A finite set of rays over one basis, iterated in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RaySet {
    basis: Basis,
    rays: BTreeSet<Ray>,
}

impl RaySet {
    pub fn empty(basis: Basis) -> Self {
        RaySet {
            basis,
            rays: BTreeSet::new(),
        }
    }

    /// The single point `0`.
    pub fn origin(basis: Basis) -> Self {
        let mut s = Self::empty(basis);
        s.insert(Ray::point(vec![BigInt::zero(); basis.dim()]));
        s
    }

    pub fn from_rays<I: IntoIterator<Item = Ray>>(basis: Basis, rays: I) -> Self {
        let mut s = Self::empty(basis);
        for r in rays {
            s.insert(r);
        }
        s
    }

    /// Convenience constructor from `(alpha, c)` pairs; zero tuples are dropped.
    pub fn from_ints(basis: Basis, rays: &[(&[i64], i64)]) -> Result<Self> {
        let mut s = Self::empty(basis);
        for (alpha, c) in rays {
            if alpha.len() != basis.dim() {
                return Err(Error::ArityMismatch {
                    expected: basis.dim(),
                    found: alpha.len(),
                });
            }
            if let Some(r) = Ray::from_ints(alpha, *c)? {
                s.insert(r);
            }
        }
        Ok(s)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn insert(&mut self, ray: Ray) -> bool {
        debug_assert_eq!(ray.dim(), self.basis.dim());
        self.rays.insert(ray)
    }

    /// Normalizes and inserts a raw homogeneous vector.
    pub fn insert_raw(&mut self, raw: Vec<BigInt>) -> Result<()> {
        if let Some(r) = Ray::normalize(raw)? {
            self.insert(r);
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Ray> {
        self.rays.iter()
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn contains(&self, ray: &Ray) -> bool {
        self.rays.contains(ray)
    }

    /// `P(R)` is nonempty exactly when some ray has `c > 0`.
    pub fn has_point(&self) -> bool {
        self.rays.iter().any(Ray::is_point)
    }

    pub fn directions(&self) -> impl Iterator<Item = &Ray> {
        self.rays.iter().filter(|r| r.is_direction())
    }

    /// Union of generator sets: represents `cl∘conv(P(R1) ∪ P(R2))`.
    pub fn union(&self, other: &RaySet) -> Result<RaySet> {
        self.basis.check_same(&other.basis)?;
        let mut out = self.clone();
        out.rays.extend(other.rays.iter().cloned());
        Ok(out)
    }

    pub(crate) fn extend(&mut self, other: RaySet) {
        debug_assert_eq!(self.basis, other.basis);
        self.rays.extend(other.rays);
    }

    /// Replaces a set denoting the empty polyhedron (no `c > 0` ray) by `∅`.
    pub fn canonical(mut self) -> RaySet {
        if !self.has_point() {
            self.rays.clear();
        }
        self
    }
}

impl fmt::Display for RaySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.has_point() {
            return writeln!(f, "empty");
        }
        for r in &self.rays {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
