//! Families of subsets of `[n]`: intersection predicates, shifting,
//! links, disjointness families, lexicographic families and
//! isomorphism up to relabeling of the ground set.

mod family;
mod iso;
mod links;
mod shift;
mod text;

pub use family::{is_cross_intersecting, is_ekr, is_t_intersecting, is_trivial_free, Family};
pub use iso::{
    canonical_form, canonical_form_with_limit, canonical_pair, canonical_pair_with_limit,
    embeds_up_to_iso, embeds_up_to_iso_with_limit, is_isomorphic, is_pair_isomorphic,
    CanonicalForm, CanonicalPair, DEFAULT_ISO_LIMIT,
};
pub use links::{
    delete, disjointness_family, double_delete, double_link, lex_family, link, link_delete,
    max_cross_partner,
};
pub use shift::{full_shift, is_shifted, shift};
pub use text::{parse_family, write_family};

pub use setfam_sets::{Error, KSet, Result};
