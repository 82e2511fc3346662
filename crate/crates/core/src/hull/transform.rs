//! Images of ray sets under the affine maps attached to words.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::codec::{gamma_params, Word};
use crate::hull::{Ray, RaySet};
use crate::Result;

/// Rays of `Γ_w(P(R))`: each `(α, c)` becomes `(r^|w|·α + c·ρ(w), c)`.
pub fn gamma_rays(w: &Word, rays: &RaySet) -> Result<RaySet> {
    w.basis().check_same(&rays.basis())?;
    let g = gamma_params(w);
    Ok(RaySet::from_rays(
        rays.basis(),
        rays.iter().filter_map(|ray| {
            let alpha = ray
                .alpha()
                .iter()
                .zip(&g.offset)
                .map(|(a, o)| &g.scale * a + ray.c() * o)
                .collect();
            Ray::normalize_infallible(alpha, ray.c().clone())
        }),
    ))
}

/// Rays of `Γ_w⁻¹(P(R))`: each `(α, c)` becomes `(α − c·ρ(w), r^|w|·c)`.
pub fn gamma_inv_rays(w: &Word, rays: &RaySet) -> Result<RaySet> {
    w.basis().check_same(&rays.basis())?;
    let g = gamma_params(w);
    Ok(RaySet::from_rays(
        rays.basis(),
        rays.iter().filter_map(|ray| {
            let alpha = ray
                .alpha()
                .iter()
                .zip(&g.offset)
                .map(|(a, o)| a - ray.c() * o)
                .collect();
            Ray::normalize_infallible(alpha, &g.scale * ray.c())
        }),
    ))
}

/// Rays of `cl(R_-·P(R))`: the origin plus the direction `−α` of every generator.
pub fn neg_cone_closure(rays: &RaySet) -> RaySet {
    let mut out = RaySet::origin(rays.basis());
    for ray in rays.iter() {
        let neg: Vec<BigInt> = ray.alpha().iter().map(|a| -a).collect();
        if let Some(r) = Ray::normalize_infallible(neg, BigInt::zero()) {
            out.insert(r);
        }
    }
    out
}
