use super::{from_permutation_generators, Group, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

fn check_cap(what: &str, order: usize) -> Result<()> {
    if order > DEFAULT_ORDER_CAP {
        return Err(Error::OrderLimitExceeded {
            what: what.to_string(),
            cap: DEFAULT_ORDER_CAP,
        });
    }
    Ok(())
}

/// Cyclic group `Z_n`; element `k` is the `k`-th power of the generator 1.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::NotAGroup("cyclic group of order 0".into()));
    }
    check_cap("cyclic", n)?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        table.extend((0..n).map(|b| ((a + b) % n) as u32));
    }
    Ok(Group::from_trusted_table(
        n,
        table,
        format!("Z{n}"),
        format!("family cyclic {n}"),
    ))
}

/// Dihedral group of order `2n`, `⟨r, s | rⁿ, s², srs = r⁻¹⟩`.
///
/// Index `k < n` is `rᵏ`, index `n + k` is `s·rᵏ`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::NotAGroup("dihedral group with n = 0".into()));
    }
    let order = 2 * n;
    check_cap("dihedral", order)?;
    let enc = |flip: bool, k: usize| (if flip { n } else { 0 } + k % n) as u32;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (fx, a) = (x >= n, x % n);
        for y in 0..order {
            let (fy, b) = (y >= n, y % n);
            // rᵃ·s = s·r⁻ᵃ
            let z = match (fx, fy) {
                (false, false) => enc(false, a + b),
                (false, true) => enc(true, b + n - a),
                (true, false) => enc(true, a + b),
                (true, true) => enc(false, b + n - a),
            };
            table.push(z);
        }
    }
    Ok(Group::from_trusted_table(
        order,
        table,
        format!("D{n}"),
        format!("family dihedral {n}"),
    ))
}

/// Dicyclic group of order `4n`, `⟨a, x | a²ⁿ, x² = aⁿ, x a x⁻¹ = a⁻¹⟩`.
///
/// Index `k < 2n` is `aᵏ`, index `2n + k` is `x·aᵏ`. `dicyclic(2)` is `Q8`.
pub fn dicyclic(n: usize) -> Result<Group> {
    if n < 1 {
        return Err(Error::NotAGroup("dicyclic group with n = 0".into()));
    }
    let m = 2 * n;
    let order = 2 * m;
    check_cap("dicyclic", order)?;
    let enc = |xpart: bool, k: usize| (if xpart { m } else { 0 } + k % m) as u32;
    let mut table = Vec::with_capacity(order * order);
    for u in 0..order {
        let (fu, j) = (u >= m, u % m);
        for v in 0..order {
            let (fv, k) = (v >= m, v % m);
            let z = match (fu, fv) {
                (false, false) => enc(false, j + k),
                (false, true) => enc(true, k + m - j),
                (true, false) => enc(true, j + k),
                (true, true) => enc(false, n + k + m - j),
            };
            table.push(z);
        }
    }
    Ok(Group::from_trusted_table(
        order,
        table,
        format!("Dic{n}"),
        format!("family dicyclic {n}"),
    ))
}

/// Symmetric group on `n ≤ 6` points.
pub fn symmetric(n: usize) -> Result<Group> {
    if n > 6 {
        return Err(Error::OrderLimitExceeded {
            what: format!("symmetric({n})"),
            cap: 720,
        });
    }
    let degree = n.max(1);
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
    }
    if n >= 3 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    let g = from_permutation_generators(degree, &gens, format!("S{n}"))?;
    Ok(g.with_provenance(format!("family symmetric {n}")))
}

/// Alternating group on `n ≤ 6` points, generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<Group> {
    if n > 6 {
        return Err(Error::OrderLimitExceeded {
            what: format!("alternating({n})"),
            cap: 360,
        });
    }
    let degree = n.max(1);
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            p
        })
        .collect();
    let g = from_permutation_generators(degree, &gens, format!("A{n}"))?;
    Ok(g.with_provenance(format!("family alternating {n}")))
}

/// Direct product `A × B`; the pair `(a, b)` has index `a·|B| + b`.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    let order = na
        .checked_mul(nb)
        .filter(|&o| o <= DEFAULT_ORDER_CAP)
        .ok_or_else(|| Error::OrderLimitExceeded {
            what: format!("{} x {}", a.name(), b.name()),
            cap: DEFAULT_ORDER_CAP,
        })?;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..order {
            let (ya, yb) = (y / nb, y % nb);
            table.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    Ok(Group::from_trusted_table(
        order,
        table,
        format!("{}x{}", a.name(), b.name()),
        format!("product {} {}", a.name(), b.name()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families_validate() {
        for g in [
            cyclic(1).unwrap(),
            cyclic(12).unwrap(),
            dihedral(5).unwrap(),
            dihedral(1).unwrap(),
            dicyclic(2).unwrap(),
            dicyclic(5).unwrap(),
            symmetric(4).unwrap(),
            alternating(5).unwrap(),
        ] {
            g.validate(true).unwrap();
        }
    }

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(dicyclic(3).unwrap().order(), 12);
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert!(matches!(
            symmetric(7),
            Err(Error::OrderLimitExceeded { .. })
        ));
        assert!(matches!(
            alternating(7),
            Err(Error::OrderLimitExceeded { .. })
        ));
    }

    #[test]
    fn dihedral_relations() {
        let n = 7;
        let g = dihedral(n).unwrap();
        let (r, s) = (1, n);
        assert_eq!(g.element_order(r), n);
        assert_eq!(g.element_order(s), 2);
        assert_eq!(g.mul(g.mul(s, r), s), g.inverse(r));
    }

    #[test]
    fn dicyclic_has_unique_involution() {
        for n in 2..8 {
            let g = dicyclic(n).unwrap();
            let inv = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
            assert_eq!(inv, 1, "Dic{n}");
        }
    }

    #[test]
    fn z12_generator_order() {
        let g = cyclic(12).unwrap();
        assert_eq!(g.element_order(1), 12);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(4), 3);
    }

    #[test]
    fn product_with_trivial() {
        let p = direct_product(&cyclic(2).unwrap(), &cyclic(1).unwrap()).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.to_rows(), cyclic(2).unwrap().to_rows());
    }

    #[test]
    fn product_orders() {
        let a4 = alternating(4).unwrap();
        let s3 = symmetric(3).unwrap();
        let z5 = cyclic(5).unwrap();
        let p = direct_product(&a4, &z5).unwrap();
        assert_eq!(p.order(), 60);
        p.validate(true).unwrap();
        assert_eq!(direct_product(&s3, &z5).unwrap().order(), 30);
        let big = cyclic(200).unwrap();
        assert!(matches!(
            direct_product(&big, &big),
            Err(Error::OrderLimitExceeded { .. })
        ));
    }
}
