use setfam_family::{max_cross_partner, Family};
use setfam_sets::{Error, KSet, Result};

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n || n > 64 {
        return Err(Error::param(format!(
            "need 1 <= k <= n <= 64, got n={n}, k={k}"
        )));
    }
    Ok(())
}

fn check_label(n: usize, x: usize) -> Result<()> {
    if x == 0 || x > n {
        return Err(Error::param(format!("label {x} outside [1, {n}]")));
    }
    Ok(())
}

/// All k-sets containing `x`.
pub fn full_star(n: usize, k: usize, x: usize) -> Result<Family> {
    check_nk(n, k)?;
    check_label(n, x)?;
    Family::filter_ksubsets(n, k, |s| s.contains(x))
}

/// `{F : 1 in F, F meets [2, k+1]} + {[2, k+1]}`.
pub fn hm_family(n: usize, k: usize) -> Result<Family> {
    check_nk(n, k)?;
    if n < k + 1 {
        return Err(Error::param(format!(
            "HM(n,k) needs n >= k+1, got n={n}, k={k}"
        )));
    }
    let e = KSet::interval(n, 2, k + 1)?;
    let mut v: Vec<KSet> = Family::filter_ksubsets(n, k, |s| s.contains(1) && s.meets(&e))?
        .sets()
        .to_vec();
    v.push(e);
    Family::uniform(n, k, v)
}

/// `{F in C([n],3) : |F & [3]| >= 2}`.
pub fn t3_family(n: usize) -> Result<Family> {
    if n < 3 {
        return Err(Error::param(format!("T(n,3) needs n >= 3, got {n}")));
    }
    let core = KSet::interval(n, 1, 3)?;
    Family::filter_ksubsets(n, 3, |s| s.intersection_size(&core) >= 2)
}

/// `J_i(n,k)`: sets through `x0` meeting `E + {j}` for each `j in J`,
/// plus the sets `E + {j}`.
pub fn j_family(n: usize, k: usize, i: usize, e: KSet, x0: usize, j: KSet) -> Result<Family> {
    check_nk(n, k)?;
    check_label(n, x0)?;
    if k < 2 || i == 0 || i > k - 1 {
        return Err(Error::param(format!(
            "J_i(n,k) needs 1 <= i <= k-1, got i={i}, k={k}"
        )));
    }
    if e.ground_n() != n || j.ground_n() != n {
        return Err(Error::param("E and J must live on [n]"));
    }
    if e.len() != k - 1 {
        return Err(Error::param(format!(
            "|E| must be k-1={}, got {}",
            k - 1,
            e.len()
        )));
    }
    if e.contains(x0) {
        return Err(Error::param(format!("x0={x0} must lie outside E")));
    }
    if j.len() != i || j.meets(&e) || j.contains(x0) {
        return Err(Error::param(format!(
            "J must be {i} labels outside E and x0"
        )));
    }
    let legs: Vec<KSet> = j.labels().into_iter().map(|y| e.with(y)).collect();
    let mut v: Vec<KSet> =
        Family::filter_ksubsets(n, k, |s| s.contains(x0) && legs.iter().all(|l| s.meets(l)))?
            .sets()
            .to_vec();
    v.extend(legs);
    Family::uniform(n, k, v)
}

/// `J_i(n,k)` with `E = [2,k]`, `x0 = 1`, `J = {k+1, ..., k+i}`.
pub fn j_family_default(n: usize, k: usize, i: usize) -> Result<Family> {
    check_nk(n, k)?;
    if k + i > n {
        return Err(Error::param(format!("J_{i}(n,{k}) defaults need n >= k+i")));
    }
    let e = KSet::interval(n, 2, k)?;
    let j = KSet::interval(n, k + 1, k + i)?;
    j_family(n, k, i, e, 1, j)
}

/// `G_i(n,k)`: sets containing `E`, plus sets through `x0` meeting `E`.
pub fn g_family(n: usize, k: usize, i: usize, e: KSet, x0: usize) -> Result<Family> {
    check_nk(n, k)?;
    check_label(n, x0)?;
    if i < 2 || i > k {
        return Err(Error::param(format!(
            "G_i(n,k) needs 2 <= i <= k, got i={i}, k={k}"
        )));
    }
    if e.ground_n() != n || e.len() != i {
        return Err(Error::param(format!("|E| must be i={i}")));
    }
    if e.contains(x0) {
        return Err(Error::param(format!("x0={x0} must lie outside E")));
    }
    Family::filter_ksubsets(n, k, |s| e.is_subset(s) || (s.contains(x0) && s.meets(&e)))
}

/// `G_i(n,k)` with `E = [2, i+1]`, `x0 = 1`.
pub fn g_family_default(n: usize, k: usize, i: usize) -> Result<Family> {
    check_nk(n, k)?;
    if i + 1 > n {
        return Err(Error::param(format!("G_{i}(n,{k}) defaults need n >= i+1")));
    }
    g_family(n, k, i, KSet::interval(n, 2, i + 1)?, 1)
}

/// `K_2(n,k)`: sets through `x0` meeting both `E1` and `E2`, plus `E1, E2`.
pub fn k2_family(n: usize, k: usize, e1: KSet, e2: KSet, x0: usize) -> Result<Family> {
    check_nk(n, k)?;
    check_label(n, x0)?;
    if k < 2 {
        return Err(Error::param("K_2(n,k) needs k >= 2"));
    }
    if e1.ground_n() != n || e2.ground_n() != n || e1.len() != k || e2.len() != k {
        return Err(Error::param(format!("E1, E2 must be {k}-sets on [{n}]")));
    }
    if e1.intersection_size(&e2) != k - 2 {
        return Err(Error::param(format!(
            "|E1 & E2| must be k-2={}, got {}",
            k - 2,
            e1.intersection_size(&e2)
        )));
    }
    if e1.contains(x0) || e2.contains(x0) {
        return Err(Error::param(format!("x0={x0} must lie outside E1 and E2")));
    }
    let mut v: Vec<KSet> =
        Family::filter_ksubsets(n, k, |s| s.contains(x0) && s.meets(&e1) && s.meets(&e2))?
            .sets()
            .to_vec();
    v.push(e1);
    v.push(e2);
    Family::uniform(n, k, v)
}

/// `K_2(n,k)` with `x0 = 1`, `E1 = [2, k+1]`, `E2 = [2, k-1] + {k+2, k+3}`.
pub fn k2_family_default(n: usize, k: usize) -> Result<Family> {
    check_nk(n, k)?;
    if n < k + 3 || k < 2 {
        return Err(Error::param("K_2(n,k) defaults need k >= 2, n >= k+3"));
    }
    let e1 = KSet::interval(n, 2, k + 1)?;
    let e2 = KSet::interval(n, 2, k - 1)?.with(k + 2).with(k + 3);
    k2_family(n, k, e1, e2, 1)
}

/// `F = {[k+t-1] + {k+t-1+i} : i in [3]}` with its largest k-uniform
/// cross-intersecting partner.
pub fn triple_family(n: usize, k: usize, t: usize) -> Result<(Family, Family)> {
    check_nk(n, k)?;
    if k < 2 {
        return Err(Error::param(
            "triple family needs k >= 2 to be (t+1)-intersecting",
        ));
    }
    if n < 2 * k + t || n < k + t + 2 {
        return Err(Error::param("triple family needs n >= max(2k+t, k+t+2)"));
    }
    let core = KSet::interval(n, 1, k + t - 1)?;
    let f = Family::uniform(n, k + t, (1..=3).map(|i| core.with(k + t - 1 + i)))?;
    let g = max_cross_partner(&f, k)?;
    Ok((f, g))
}

/// `F = {core + {i} : i > core_size}` with `G` the k-sets meeting the
/// core, where `core = [core_size]` and `k = core_size - t + 1`.
pub fn sunflower_family(
    n: usize,
    k: usize,
    t: usize,
    core_size: usize,
) -> Result<(Family, Family)> {
    check_nk(n, k)?;
    if !(t + 1..=t + 3).contains(&core_size) || k + t != core_size + 1 {
        return Err(Error::param(format!(
            "sunflower needs core_size in [t+1, t+3] and k = core_size - t + 1, got k={k}, t={t}, core={core_size}"
        )));
    }
    if n < core_size + 1 {
        return Err(Error::param("sunflower needs n > core_size"));
    }
    let core = KSet::interval(n, 1, core_size)?;
    let f = Family::uniform(n, k + t, (core_size + 1..=n).map(|i| core.with(i)))?;
    let g = Family::filter_ksubsets(n, k, |s| s.meets(&core))?;
    Ok((f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use setfam_family::{is_cross_intersecting, is_ekr, is_t_intersecting};

    #[test]
    fn star_examples() {
        assert_eq!(full_star(6, 3, 1).unwrap().len(), 10);
        let s = full_star(5, 2, 5).unwrap();
        assert_eq!(
            s.to_label_lists(),
            vec![vec![1, 5], vec![2, 5], vec![3, 5], vec![4, 5]]
        );
        assert!(full_star(5, 2, 6).is_err());
    }

    #[test]
    fn hm_sizes() {
        assert_eq!(hm_family(7, 3).unwrap().len(), 13);
        assert_eq!(hm_family(5, 2).unwrap().len(), 3);
        let h = hm_family(9, 4).unwrap();
        assert!(is_t_intersecting(&h, 1) && !is_ekr(&h));
    }

    #[test]
    fn t3_examples() {
        assert_eq!(t3_family(5).unwrap().len(), 7);
        assert_eq!(t3_family(3).unwrap().to_label_lists(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn side_conditions_rejected() {
        let n = 9;
        let e = KSet::interval(n, 2, 4).unwrap();
        assert!(j_family(n, 4, 1, e, 2, KSet::new(n, &[5]).unwrap()).is_err());
        assert!(j_family(n, 4, 4, e, 1, KSet::new(n, &[5, 6, 7, 8]).unwrap()).is_err());
        assert!(j_family(n, 4, 1, e, 1, KSet::new(n, &[3]).unwrap()).is_err());
        assert!(g_family(n, 4, 1, KSet::new(n, &[2]).unwrap(), 1).is_err());
        let e1 = KSet::new(n, &[2, 3, 4, 5]).unwrap();
        let e2 = KSet::new(n, &[2, 3, 4, 6]).unwrap();
        assert!(k2_family(n, 4, e1, e2, 1).is_err());
        assert!(sunflower_family(9, 4, 0, 2).is_err());
    }

    #[test]
    fn pairs_cross_intersect() {
        let (f, g) = triple_family(9, 4, 0).unwrap();
        assert_eq!(f.len() + g.len(), 117);
        assert!(is_cross_intersecting(&f, &g).unwrap());
        let (f, g) = sunflower_family(9, 4, 0, 3).unwrap();
        assert_eq!(f.len() + g.len(), 117);
        assert!(is_t_intersecting(&f, 1));
    }
}
