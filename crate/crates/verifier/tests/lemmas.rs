mod common;

use setfam_bounds::{bound_i64, Params, TheoremId};
use setfam_constructions::{appendix_family, AppendixId};
use setfam_family::{is_shifted, is_t_intersecting, max_cross_partner, Family};
use setfam_verifier::{
    default_instances, verify_instance, verify_lemma, LemmaId, LemmaParams, LemmaRun, Method,
};

#[test]
fn small_instances_hold() {
    let run = LemmaRun::default();
    for id in LemmaId::ALL {
        let ps: Vec<LemmaParams> = default_instances(id)
            .into_iter()
            .filter(|p| p.n <= 6)
            .collect();
        let r = verify_lemma(id, &ps, &run).unwrap();
        assert!(r.holds, "{id}: {:?}", r.instances);
    }
}

#[test]
fn fm_inventory_is_the_stars() {
    let p = LemmaParams::new(7, 3, 0).with_l(3).with_r(1);
    let i = verify_instance(LemmaId::FM, &p, &LemmaRun::default()).unwrap();
    assert_eq!(i.method, Method::Pruned);
    let inv = i.inventory.unwrap();
    assert_eq!(inv.classes.len(), 1);
    assert_eq!(inv.classes[0].catalog.as_deref(), Some("R-star"));
}

#[test]
fn sampling_is_seeded() {
    let p = LemmaParams::new(7, 3, 0);
    let run = LemmaRun {
        samples: 500,
        seed: 3,
        limit: 1000,
    };
    let a = verify_instance(LemmaId::PR5, &p, &run).unwrap();
    assert_eq!(a.method, Method::Sampled);
    assert_eq!(a, verify_instance(LemmaId::PR5, &p, &run).unwrap());
}

/// Four-sets through {1,2} against three-sets meeting {1,2}: every stated
/// hypothesis holds at n = 8 and the sum passes the bound by n - 7.
#[test]
fn thick_star_exceeds_hp51_bound_at_eight() {
    let n = 8;
    let f = Family::filter_ksubsets(n, 4, |s| s.contains(1) && s.contains(2)).unwrap();
    let g = max_cross_partner(&f, 3).unwrap();
    assert_eq!(
        g,
        Family::filter_ksubsets(n, 3, |s| s.contains(1) || s.contains(2)).unwrap()
    );
    assert!(is_t_intersecting(&f, 2) && is_shifted(&f) && is_shifted(&g) && f.len() >= 3);
    let union = f.union(&g).unwrap();
    assert!(!common::brute_embeds(
        n,
        &union,
        &appendix_family(AppendixId::C, n, None).unwrap()
    ));
    // C(8,3) - C(4,3) - C(3,2) - C(2,1) + 3
    let bound = 56 - 4 - 3 - 2 + 3;
    assert_eq!(
        bound_i64(TheoremId::HP51, &Params::new(n, 3, 1)),
        Some(bound)
    );
    assert_eq!(f.len() + g.len(), 51);
    let i = verify_instance(
        LemmaId::HP51,
        &LemmaParams::new(n, 3, 1),
        &LemmaRun::default(),
    )
    .unwrap();
    assert_eq!(i.counterexamples, 1);
    assert_eq!(i.max_value, Some(51));
}
