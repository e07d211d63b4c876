//! Structural class deciders: abelian, cyclic, nilpotent, solvable,
//! supersolvable, CLT.

use crate::group::Group;
use crate::lattice::{
    commutator_subgroup, derived_subgroup, prime_divisors, Subgroup, SubgroupLattice,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_supersolvable: bool,
    pub is_clt: bool,
    /// Why the first failing property fails, when one does.
    pub witness: Option<String>,
}

impl PropertyProfile {
    pub fn compute(group: &Group, lattice: &SubgroupLattice) -> Self {
        let is_cyclic = is_cyclic(group);
        let is_abelian = is_cyclic || group.is_abelian();
        let is_nilpotent = is_abelian || is_nilpotent(group);
        let is_solvable = is_nilpotent || is_solvable(group);
        let ss_witness = if is_solvable {
            supersolvability_witness(lattice)
        } else {
            Some("not solvable".to_string())
        };
        let is_supersolvable = ss_witness.is_none();
        let missing = missing_subgroup_order(group, lattice);
        let is_clt = missing.is_none();

        let witness = if !is_solvable {
            Some("derived series stalls above the trivial subgroup".to_string())
        } else if let Some(w) = ss_witness {
            Some(w)
        } else if !is_nilpotent {
            Some("some Sylow subgroup is not normal".to_string())
        } else {
            missing.map(|d| format!("no subgroup of order {d}"))
        };
        Self {
            is_abelian,
            is_cyclic,
            is_nilpotent,
            is_solvable,
            is_supersolvable,
            is_clt,
            witness,
        }
    }

    /// cyclic ⇒ abelian ⇒ nilpotent ⇒ supersolvable ⇒ solvable, and
    /// supersolvable ⇒ CLT.
    pub fn implication_chain_holds(&self) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.is_cyclic, self.is_abelian)
            && imp(self.is_abelian, self.is_nilpotent)
            && imp(self.is_nilpotent, self.is_supersolvable)
            && imp(self.is_supersolvable, self.is_solvable)
            && imp(self.is_supersolvable, self.is_clt)
    }
}

pub fn is_cyclic(group: &Group) -> bool {
    let n = group.order();
    (0..n).any(|x| group.element_order(x) == n)
}

/// `G ⊇ G' ⊇ G'' ⊇ …` until it stabilises.
pub fn derived_series(group: &Group) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(group)];
    let mut current = derived_subgroup(group);
    while current.order() < series.last().expect("non-empty").order() {
        series.push(current.clone());
        current = commutator_subgroup(group, &current, &current);
    }
    series
}

pub fn is_solvable(group: &Group) -> bool {
    derived_series(group)
        .last()
        .is_some_and(Subgroup::is_trivial)
}

/// `G = γ₁ ⊇ γ₂ = [G, G] ⊇ γ₃ = [G, γ₂] ⊇ …` until it stabilises.
pub fn lower_central_series(group: &Group) -> Vec<Subgroup> {
    let whole = Subgroup::whole(group);
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = commutator_subgroup(group, &whole, last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent_by_central_series(group: &Group) -> bool {
    lower_central_series(group)
        .last()
        .is_some_and(Subgroup::is_trivial)
}

/// Every Sylow subgroup is normal. A Sylow `p`-subgroup is normal iff it is
/// the only one, iff the elements of `p`-power order number exactly the
/// `p`-part of `|G|`.
pub fn is_nilpotent_by_sylow(group: &Group) -> bool {
    let n = group.order();
    prime_divisors(n).into_iter().all(|p| {
        let mut part = 1;
        while n.is_multiple_of(part * p) {
            part *= p;
        }
        let p_elements = (0..n)
            .filter(|&x| is_power_of(group.element_order(x), p))
            .count();
        p_elements == part
    })
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

pub fn is_nilpotent(group: &Group) -> bool {
    is_nilpotent_by_sylow(group)
}

/// The first maximal subgroup of non-prime index, if any.
fn supersolvability_witness(lattice: &SubgroupLattice) -> Option<String> {
    let n = lattice.group_order();
    lattice.maximal_indices().into_iter().find_map(|i| {
        let index = n / lattice.get(i).order();
        (!crate::lattice::is_prime(index)).then(|| {
            format!(
                "maximal subgroup #{i} of order {} has index {index}",
                lattice.get(i).order()
            )
        })
    })
}

/// Every maximal subgroup has prime index.
pub fn is_supersolvable(lattice: &SubgroupLattice) -> bool {
    supersolvability_witness(lattice).is_none()
}

fn missing_subgroup_order(group: &Group, lattice: &SubgroupLattice) -> Option<usize> {
    let n = group.order();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| !lattice.has_order(d))
}

/// A subgroup exists for every divisor of `|G|`.
pub fn is_clt(group: &Group, lattice: &SubgroupLattice) -> bool {
    missing_subgroup_order(group, lattice).is_none()
}
