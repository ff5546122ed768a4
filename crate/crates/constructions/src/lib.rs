//! Named extremal families. Every constructor validates its side
//! conditions and refuses degenerate parameters.

mod appendix;
mod named;
mod tag;

pub use appendix::{appendix_family, AppendixId};
pub use named::{
    full_star, g_family, g_family_default, hm_family, j_family, j_family_default, k2_family,
    k2_family_default, sunflower_family, t3_family, triple_family,
};
pub use tag::{build, Construction, ConstructionParams, ConstructionTag};
