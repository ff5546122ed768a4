use proptest::prelude::*;
use setfam_bounds::{Params, TheoremId};
use setfam_constructions::{full_star, triple_family};
use setfam_family::{max_cross_partner, Family};
use setfam_sets::KSet;
use setfam_verifier::{certificate_json, check_certificate, CertVerdict};

#[test]
fn triple_attains_main51() {
    let (f, g) = triple_family(10, 4, 1).unwrap();
    let text = certificate_json(TheoremId::Main51, &Params::new(10, 4, 1), &f, Some(&g));
    let r = check_certificate(&text).unwrap();
    assert_eq!(r.verdict, CertVerdict::Attains);
    assert_eq!(r.value, r.bound);
}

#[test]
fn full_star_fails_non_ekr_hypothesis() {
    let f = full_star(7, 3, 1).unwrap();
    let r = check_certificate(&certificate_json(
        TheoremId::HmStab,
        &Params::new(7, 3, 0),
        &f,
        None,
    ))
    .unwrap();
    assert_eq!(r.verdict, CertVerdict::HypothesisFailed);
    assert!(r.failed.iter().any(|m| m.contains("EKR")), "{:?}", r.failed);
}

#[test]
fn disjoint_pair_fails_cross_intersection() {
    let text = r#"{"n": 6, "k": 3, "t": 0, "theorem": "F16", "family_f": [[1,2,3]], "family_g": [[4,5,6]]}"#;
    let r = check_certificate(text).unwrap();
    assert_eq!(r.verdict, CertVerdict::HypothesisFailed);
    assert!(r.failed.iter().any(|m| m.contains("cross-intersecting")));
}

#[test]
fn fm_lower_bound_reports_above() {
    // a star has the smallest disjointness family; a spread-out family has more
    let f = Family::from_labels(
        7,
        &[
            &[1, 2, 3],
            &[4, 5, 6],
            &[1, 4, 7],
            &[2, 5, 7],
            &[3, 6, 7],
            &[1, 5, 6],
        ],
    )
    .unwrap();
    let p = Params::new(7, 3, 0).with_rl(1, 3);
    let r = check_certificate(&certificate_json(TheoremId::Fm, &p, &f, None));
    // |F| must equal C(6,2) = 15 for the hypothesis
    assert_eq!(r.unwrap().verdict, CertVerdict::HypothesisFailed);
    let star = full_star(7, 3, 1).unwrap();
    assert_eq!(
        check_certificate(&certificate_json(TheoremId::Fm, &p, &star, None))
            .unwrap()
            .verdict,
        CertVerdict::Attains
    );
}

#[test]
fn malformed_certificates_are_parse_errors() {
    for text in [
        r#"{"n": 6, "k": 3, "t": 0, "theorem": "F16", "family_f": [[1,2,9]]}"#,
        r#"{"n": 6, "k": 3, "t": 0, "theorem": "F16", "family_f": [[2,3,4],[1,2,3]]}"#,
        r#"{"n": 6, "k": 3, "t": 0, "theorem": "F16", "family_f": [[1,2,3]], "note": 1}"#,
        r#"{"n": 6, "k": 3, "t": 0, "theorem": "NOPE", "family_f": [[1,2,3]]}"#,
        r#"{"n": 6, "k": 3"#,
    ] {
        assert!(
            matches!(
                check_certificate(text),
                Err(setfam_sets::Error::Parse { .. })
            ),
            "{text}"
        );
    }
}

proptest! {
    #[test]
    fn certificate_value_is_pair_size(n in 5usize..=8, bits in any::<u64>()) {
        let sets: Vec<KSet> = setfam_sets::ksubsets(n, 2).unwrap().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, s)| s).collect();
        let f = Family::new(n, sets).unwrap();
        let g = max_cross_partner(&f, 2).unwrap();
        let r = check_certificate(&certificate_json(TheoremId::Mainh, &Params::new(n, 2, 0), &f, Some(&g))).unwrap();
        prop_assert_eq!(r.value as usize, f.len() + g.len());
        prop_assert!(r.verdict != CertVerdict::Violates);
    }
}
