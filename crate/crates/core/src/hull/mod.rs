//! Ray sets and the closed convex hull of `ρ(L)` and `ξ(L)`.

mod compute;
mod ray;
mod transform;

pub use compute::{hull_rho, hull_xi, HullEngine};
pub use ray::{Ray, RaySet};
pub use transform::{gamma_inv_rays, gamma_rays, neg_cone_closure};
