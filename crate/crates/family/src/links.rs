use setfam_sets::{binom_u64, ksubsets, Error, KSet, Result};

use crate::Family;

fn check_label(f: &Family, i: usize) -> Result<()> {
    if i == 0 || i > f.ground_n() {
        return Err(Error::param(format!(
            "label {i} outside [1, {}]",
            f.ground_n()
        )));
    }
    Ok(())
}

fn check_two(f: &Family, i: usize, j: usize) -> Result<()> {
    check_label(f, i)?;
    check_label(f, j)?;
    if i == j {
        return Err(Error::param(format!("labels must differ, got {i} twice")));
    }
    Ok(())
}

fn collect(f: &Family, drop: usize, sets: impl Iterator<Item = KSet>) -> Family {
    let mut v: Vec<KSet> = sets.collect();
    v.sort_unstable();
    Family::from_sorted_unchecked(
        f.ground_n(),
        v,
        f.uniform_k().and_then(|k| k.checked_sub(drop)),
    )
}

/// `F(i) = {F \ {i} : i in F}`.
pub fn link(f: &Family, i: usize) -> Result<Family> {
    check_label(f, i)?;
    Ok(collect(
        f,
        1,
        f.iter().filter(|s| s.contains(i)).map(|s| s.without(i)),
    ))
}

/// `F(i bar) = {F : i not in F}`.
pub fn delete(f: &Family, i: usize) -> Result<Family> {
    check_label(f, i)?;
    Ok(collect(f, 0, f.iter().filter(|s| !s.contains(i)).copied()))
}

/// `F(i, j) = {F \ {i, j} : i, j in F}`.
pub fn double_link(f: &Family, i: usize, j: usize) -> Result<Family> {
    check_two(f, i, j)?;
    Ok(collect(
        f,
        2,
        f.iter()
            .filter(|s| s.contains(i) && s.contains(j))
            .map(|s| s.without(i).without(j)),
    ))
}

/// `F(i, j bar) = {F \ {i} : i in F, j not in F}`.
pub fn link_delete(f: &Family, i: usize, j: usize) -> Result<Family> {
    check_two(f, i, j)?;
    Ok(collect(
        f,
        1,
        f.iter()
            .filter(|s| s.contains(i) && !s.contains(j))
            .map(|s| s.without(i)),
    ))
}

/// `F(i bar, j bar) = {F : i, j not in F}`.
pub fn double_delete(f: &Family, i: usize, j: usize) -> Result<Family> {
    check_two(f, i, j)?;
    Ok(collect(
        f,
        0,
        f.iter()
            .filter(|s| !s.contains(i) && !s.contains(j))
            .copied(),
    ))
}

fn check_ell(f: &Family, ell: usize) -> Result<()> {
    if ell > f.ground_n() {
        return Err(Error::param(format!(
            "set size {ell} exceeds ground size {}",
            f.ground_n()
        )));
    }
    Ok(())
}

/// `D_l(F)`: the l-sets disjoint from at least one member.
pub fn disjointness_family(f: &Family, ell: usize) -> Result<Family> {
    check_ell(f, ell)?;
    let sets = ksubsets(f.ground_n(), ell)?.filter(|d| f.iter().any(|s| !s.meets(d)));
    Family::uniform(f.ground_n(), ell, sets)
}

/// The l-sets meeting every member: the largest l-uniform family
/// cross-intersecting with `f`.
pub fn max_cross_partner(f: &Family, ell: usize) -> Result<Family> {
    check_ell(f, ell)?;
    let sets = ksubsets(f.ground_n(), ell)?.filter(|d| f.iter().all(|s| s.meets(d)));
    Family::uniform(f.ground_n(), ell, sets)
}

/// `L(n, k, m)`: the first `m` k-sets in lex order.
pub fn lex_family(n: usize, k: usize, m: u64) -> Result<Family> {
    let it = ksubsets(n, k)?;
    let total = binom_u64(n as u32, k as u32);
    if m > total {
        return Err(Error::param(format!("m={m} exceeds C({n},{k})={total}")));
    }
    Family::uniform(n, k, it.take(m as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, s: &[&[usize]]) -> Family {
        Family::from_labels(n, s).unwrap()
    }

    #[test]
    fn link_examples() {
        let l = link(&fam(3, &[&[1, 2], &[2, 3]]), 2).unwrap();
        assert_eq!(l, fam(3, &[&[1], &[3]]));
        assert_eq!(l.uniform_k(), Some(1));
        assert_eq!(
            double_delete(&fam(4, &[&[1, 2], &[3, 4]]), 1, 2).unwrap(),
            fam(4, &[&[3, 4]])
        );
        assert!(double_link(&fam(4, &[&[1, 2]]), 1, 1).is_err());
        assert!(link(&fam(4, &[&[1, 2]]), 5).is_err());
    }

    #[test]
    fn mixed_links() {
        let f = fam(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[2, 3, 5]]);
        assert_eq!(double_link(&f, 1, 2).unwrap(), fam(5, &[&[3], &[4]]));
        assert_eq!(link_delete(&f, 1, 2).unwrap(), fam(5, &[&[4, 5]]));
        assert_eq!(double_delete(&f, 1, 2).unwrap().len(), 0);
        assert_eq!(double_delete(&f, 1, 2).unwrap().uniform_k(), Some(3));
    }

    #[test]
    fn disjointness_examples() {
        let d = disjointness_family(&fam(4, &[&[1, 2]]), 2).unwrap();
        assert_eq!(d, fam(4, &[&[3, 4]]));
        assert!(disjointness_family(&Family::empty(4).unwrap(), 2)
            .unwrap()
            .is_empty());
        assert_eq!(
            max_cross_partner(&Family::empty(4).unwrap(), 2)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            max_cross_partner(&fam(6, &[&[1, 2, 3]]), 3).unwrap().len(),
            19
        );
    }

    #[test]
    fn lex_family_examples() {
        assert_eq!(
            lex_family(4, 2, 3).unwrap(),
            fam(4, &[&[1, 2], &[1, 3], &[1, 4]])
        );
        assert!(lex_family(4, 2, 0).unwrap().is_empty());
        assert_eq!(lex_family(5, 2, 10).unwrap().len(), 10);
        assert!(lex_family(5, 2, 11).is_err());
    }
}
