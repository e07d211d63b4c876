use super::{Group, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// A homomorphism from `acting` into the automorphism group of `normal`.
///
/// `image(h)` is the permutation of `normal`'s element indices induced by
/// `h`. Composition follows `image(h₁·h₂) = image(h₁) ∘ image(h₂)`.
#[derive(Debug, Clone)]
pub struct SemidirectAction {
    normal: Group,
    acting: Group,
    images: Vec<Vec<u32>>,
}

impl SemidirectAction {
    /// Validates an action given explicitly for every element of `acting`.
    pub fn new(normal: Group, acting: Group, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() != acting.order() {
            return Err(Error::NotAHomomorphism(format!(
                "expected {} images, got {}",
                acting.order(),
                images.len()
            )));
        }
        let images = images
            .iter()
            .map(|img| to_automorphism(&normal, img))
            .collect::<Result<Vec<_>>>()?;
        let action = Self {
            normal,
            acting,
            images,
        };
        action.check_homomorphism()?;
        Ok(action)
    }

    /// Extends automorphisms given on a generating set of `acting` to a full
    /// action, failing if the assignments are inconsistent or do not generate.
    pub fn from_generators(
        normal: Group,
        acting: Group,
        generators: &[(usize, Vec<usize>)],
    ) -> Result<Self> {
        let h = acting.order();
        let mut gens = Vec::with_capacity(generators.len());
        for (x, img) in generators {
            if *x >= h {
                return Err(Error::NotAHomomorphism(format!(
                    "acting element {x} out of range for order {h}"
                )));
            }
            gens.push((*x, to_automorphism(&normal, img)?));
        }

        let identity: Vec<u32> = (0..normal.order() as u32).collect();
        let mut images: Vec<Option<Vec<u32>>> = vec![None; h];
        images[0] = Some(identity);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (g, phi_g) in &gens {
                let y = acting.mul(x, *g);
                let phi_x = images[x].as_ref().expect("queued elements have images");
                let composed: Vec<u32> = phi_g.iter().map(|&n| phi_x[n as usize]).collect();
                match &images[y] {
                    Some(existing) if *existing != composed => {
                        return Err(Error::NotAHomomorphism(format!(
                            "conflicting images for acting element {y}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        images[y] = Some(composed);
                        queue.push(y);
                    }
                }
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| {
                    Error::NotAHomomorphism(format!("acting element {i} is not generated"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let action = Self {
            normal,
            acting,
            images,
        };
        action.check_homomorphism()?;
        Ok(action)
    }

    pub fn trivial(normal: Group, acting: Group) -> Self {
        let identity: Vec<u32> = (0..normal.order() as u32).collect();
        let images = vec![identity; acting.order()];
        Self {
            normal,
            acting,
            images,
        }
    }

    pub fn normal(&self) -> &Group {
        &self.normal
    }

    pub fn acting(&self) -> &Group {
        &self.acting
    }

    /// Image of `n` under the automorphism induced by `h`.
    #[inline]
    pub fn apply(&self, h: usize, n: usize) -> usize {
        self.images[h][n] as usize
    }

    fn check_homomorphism(&self) -> Result<()> {
        let nn = self.normal.order();
        if self.images[0]
            .iter()
            .enumerate()
            .any(|(i, &x)| x as usize != i)
        {
            return Err(Error::NotAHomomorphism(
                "identity does not act trivially".into(),
            ));
        }
        for a in 0..self.acting.order() {
            for b in 0..self.acting.order() {
                let ab = self.acting.mul(a, b);
                if (0..nn).any(|n| self.apply(ab, n) != self.apply(a, self.apply(b, n))) {
                    return Err(Error::NotAHomomorphism(format!(
                        "image({a}*{b}) != image({a}) o image({b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn to_automorphism(normal: &Group, img: &[usize]) -> Result<Vec<u32>> {
    let n = normal.order();
    if img.len() != n {
        return Err(Error::NotAnAutomorphism(format!(
            "image array has length {}, expected {n}",
            img.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in img {
        if x >= n || seen[x] {
            return Err(Error::NotAnAutomorphism(format!(
                "{img:?} is not a bijection"
            )));
        }
        seen[x] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if img[normal.mul(a, b)] != normal.mul(img[a], img[b]) {
                return Err(Error::NotAnAutomorphism(format!(
                    "{img:?} does not preserve {a}*{b}"
                )));
            }
        }
    }
    Ok(img.iter().map(|&x| x as u32).collect())
}

/// `N ⋊ H` with `(n₁,h₁)(n₂,h₂) = (n₁·φ_{h₁}(n₂), h₁h₂)`.
///
/// The pair `(n, h)` has index `h·|N| + n`.
pub fn semidirect_product(action: &SemidirectAction, name: impl Into<String>) -> Result<Group> {
    let (nn, nh) = (action.normal.order(), action.acting.order());
    let order = nn
        .checked_mul(nh)
        .filter(|&o| o <= DEFAULT_ORDER_CAP)
        .ok_or_else(|| Error::OrderLimitExceeded {
            what: "semidirect product".into(),
            cap: DEFAULT_ORDER_CAP,
        })?;
    let normal = &action.normal;
    let acting = &action.acting;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (h1, n1) = (x / nn, x % nn);
        for y in 0..order {
            let (h2, n2) = (y / nn, y % nn);
            let n = normal.mul(n1, action.apply(h1, n2));
            let h = acting.mul(h1, h2);
            table.push((h * nn + n) as u32);
        }
    }
    Ok(Group::from_trusted_table(
        order,
        table,
        name,
        format!("semidirect {} {}", normal.name(), acting.name()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product};

    fn inversion(n: usize) -> Vec<usize> {
        (0..n).map(|x| (n - x) % n).collect()
    }

    #[test]
    fn trivial_action_matches_direct_product_table() {
        let n = cyclic(3).unwrap();
        let h = cyclic(4).unwrap();
        let sd =
            semidirect_product(&SemidirectAction::trivial(n.clone(), h.clone()), "Z3xZ4").unwrap();
        // direct_product(H, N) uses the same (h, n) -> h·|N| + n layout.
        let dp = direct_product(&h, &n).unwrap();
        assert_eq!(sd.to_rows(), dp.to_rows());
    }

    #[test]
    fn z3_by_z4_has_one_involution() {
        let action = SemidirectAction::from_generators(
            cyclic(3).unwrap(),
            cyclic(4).unwrap(),
            &[(1, inversion(3))],
        )
        .unwrap();
        let g = semidirect_product(&action, "Z3:Z4").unwrap();
        g.validate(true).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        assert_eq!((0..12).filter(|&x| g.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn v4_by_z9() {
        let z2 = cyclic(2).unwrap();
        let v4 = direct_product(&z2, &z2).unwrap();
        let action =
            SemidirectAction::from_generators(v4, cyclic(9).unwrap(), &[(1, vec![0, 2, 3, 1])])
                .unwrap();
        let g = semidirect_product(&action, "Z2^2:Z9").unwrap();
        g.validate(true).unwrap();
        assert_eq!(g.order(), 36);
        assert!(!g.is_abelian());
    }

    #[test]
    fn rejects_non_automorphism() {
        // x -> x + 1 on Z3 moves the identity.
        let r = SemidirectAction::from_generators(
            cyclic(3).unwrap(),
            cyclic(2).unwrap(),
            &[(1, vec![1, 2, 0])],
        );
        assert!(matches!(r, Err(Error::NotAnAutomorphism(_))));
        let r = SemidirectAction::from_generators(
            cyclic(3).unwrap(),
            cyclic(2).unwrap(),
            &[(1, vec![0, 0, 1])],
        );
        assert!(matches!(r, Err(Error::NotAnAutomorphism(_))));
    }

    #[test]
    fn rejects_non_homomorphism() {
        // Z3 has no order-3 automorphism that Z3's generator could map to
        // consistently with an inversion: inversion has order 2, not dividing 3.
        let r = SemidirectAction::from_generators(
            cyclic(3).unwrap(),
            cyclic(3).unwrap(),
            &[(1, inversion(3))],
        );
        assert!(matches!(r, Err(Error::NotAHomomorphism(_))));
        // Generator set that does not generate the acting group.
        let r = SemidirectAction::from_generators(
            cyclic(3).unwrap(),
            cyclic(4).unwrap(),
            &[(2, inversion(3))],
        );
        assert!(matches!(r, Err(Error::NotAHomomorphism(_))));
        // Explicit full map that is not multiplicative.
        let id: Vec<usize> = (0..3).collect();
        let r = SemidirectAction::new(
            cyclic(3).unwrap(),
            cyclic(2).unwrap(),
            vec![inversion(3), id],
        );
        assert!(matches!(r, Err(Error::NotAHomomorphism(_))));
    }
}
