//! Exhaustive and branch-and-bound searches that compute true optima at
//! desk scale and compare them against the bound registry.

mod bits;
mod budget;
mod certificate;
mod cross;
mod driver;
mod lemmas;
mod problem;
mod restricted;
mod search;

pub use certificate::{
    certificate_json, check_certificate, parse_certificate, CertVerdict, Certificate,
    CertificateReport,
};
pub use lemmas::{
    check_params, default_instances, default_suite, verify_instance, verify_lemma, Inventory,
    LemmaId, LemmaInstance, LemmaParams, LemmaReport, LemmaRun, Method, DEFAULT_SAMPLES,
    EXHAUSTIVE_LIMIT,
};
pub use problem::{
    Budget, Exclusion, ExtremalClass, ExtremalReport, Mode, SearchKind, SearchProblem,
    SearchReport, Stats, TwoMissing, Verdict, BUDGET_ENV, DEFAULT_ENUM_CAP, MAX_CANDIDATES,
};
pub use restricted::{first_failure, satisfies};
pub use search::{
    classes_of, enumerate_extremal, max_cross_pair, max_restricted_intersecting, run_search,
    run_search_with_configs, two_missing_branch, Config, ENUM_ISO_LIMIT,
};
