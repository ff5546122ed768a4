//! Registry of the bounds: exact formulas over binomials, parameter
//! domains, hypothesis predicates and the families that attain them.

mod crossover;
mod formula;
mod id;
mod params;
mod registry;
pub mod structure;

pub use crossover::{crossover_compare, j3_size, k2_size, Crossover};
pub use formula::{render_numeric, Formula, Lin, Term, TermValue};
pub use id::TheoremId;
pub use params::Params;
pub use registry::{
    bound_i64, bound_value, extremal_catalog, lem52_core, registry, self_check, singleton_pair,
    spec, two_set_pair, Assessment, CatalogEntry, Direction, Extremal, Objective, Relation,
    TheoremSpec,
};
