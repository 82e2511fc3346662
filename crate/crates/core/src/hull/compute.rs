//! Recursive hull computation over chain decompositions.

use std::collections::HashMap;

use crate::codec::{xi_ray, Basis};
use crate::hull::{gamma_inv_rays, gamma_rays, neg_cone_closure, RaySet};
use crate::lang::{to_chains, Regex, DEFAULT_MAX_CHAINS};
use crate::Result;

/// Computes closed convex hulls for regexes over one basis.
///
/// `hull_xi` results are memoized per structurally identical sub-regex, since
/// distributing concatenation over union duplicates star bodies across chains.
pub struct HullEngine {
    basis: Basis,
    max_chains: usize,
    memo: HashMap<Regex, RaySet>,
}

impl HullEngine {
    pub fn new(basis: Basis) -> Self {
        Self::with_max_chains(basis, DEFAULT_MAX_CHAINS)
    }

    pub fn with_max_chains(basis: Basis, max_chains: usize) -> Self {
        HullEngine {
            basis,
            max_chains,
            memo: HashMap::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Rays of `cl∘conv∘ξ(L(e) \ {ε})`.
    pub fn hull_xi(&mut self, e: &Regex) -> Result<RaySet> {
        if let Some(hit) = self.memo.get(e) {
            return Ok(hit.clone());
        }
        let out = match e {
            Regex::Empty | Regex::Epsilon => RaySet::empty(self.basis),
            // conv∘ξ(L*) = conv∘ξ(L)
            Regex::Star(body) => self.hull_xi(body)?,
            _ => {
                let mut acc = RaySet::empty(self.basis);
                for chain in to_chains(e, self.basis, self.max_chains)? {
                    let skeleton = chain.skeleton();
                    if !skeleton.is_empty() {
                        acc.insert(xi_ray(&skeleton)?);
                    }
                    for (seg, suffix) in chain.segments.iter().zip(chain.suffixes()) {
                        let inner = self.hull_xi(&seg.body)?;
                        acc.extend(gamma_inv_rays(&suffix, &inner)?);
                    }
                }
                acc
            }
        };
        self.memo.insert(e.clone(), out.clone());
        Ok(out)
    }

    /// Rays of `cl∘conv∘ρ(L(e))`; the empty set when `L(e) = ∅`.
    pub fn hull_rho(&mut self, e: &Regex) -> Result<RaySet> {
        let mut acc = RaySet::empty(self.basis);
        for chain in to_chains(e, self.basis, self.max_chains)? {
            let mut local = RaySet::origin(self.basis);
            for (seg, suffix) in chain.segments.iter().zip(chain.suffixes()) {
                // L_i* may be replaced by L_i under ξ
                let inner = self.hull_xi(&seg.body)?;
                local.extend(neg_cone_closure(&gamma_inv_rays(&suffix, &inner)?));
            }
            acc.extend(gamma_rays(&chain.skeleton(), &local)?);
        }
        Ok(acc.canonical())
    }
}

pub fn hull_xi(e: &Regex, basis: Basis) -> Result<RaySet> {
    HullEngine::new(basis).hull_xi(e)
}

pub fn hull_rho(e: &Regex, basis: Basis) -> Result<RaySet> {
    HullEngine::new(basis).hull_rho(e)
}
