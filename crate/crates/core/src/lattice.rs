//! Subgroups as element bit masks, and the full subgroup lattice.

use std::cmp::Ordering;
use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::Group;

/// Default cap on the number of subgroups enumerated for one group.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;

/// A subgroup of an ambient group, stored as a bit mask over its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
}

impl Subgroup {
    /// Wraps a mask that is already known to be closed.
    fn from_mask(members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        Self { members, order }
    }

    pub fn trivial(group: &Group) -> Self {
        let mut m = FixedBitSet::with_capacity(group.order());
        m.insert(0);
        Self::from_mask(m)
    }

    pub fn whole(group: &Group) -> Self {
        let mut m = FixedBitSet::with_capacity(group.order());
        m.insert_range(..);
        Self::from_mask(m)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Order of the ambient group.
    pub fn ambient_order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.members.len()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    /// Total order used for lattice output: by order, then by the mask read
    /// as a binary number with element `i` weighing `2^i`.
    pub fn lattice_cmp(&self, other: &Subgroup) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| mask_cmp(&self.members, &other.members))
    }

    /// Checks the closure invariant against `group`'s table.
    pub fn is_closed_in(&self, group: &Group) -> bool {
        if !self.contains(0) || self.ambient_order() != group.order() {
            return false;
        }
        let elems: Vec<usize> = self.elements().collect();
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| self.contains(group.mul(a, b))))
    }
}

fn mask_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    let (sa, sb) = (a.as_slice(), b.as_slice());
    debug_assert_eq!(sa.len(), sb.len());
    for (x, y) in sa.iter().rev().zip(sb.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Smallest subgroup containing every element of `seed`.
pub fn generated_subgroup(group: &Group, seed: &FixedBitSet) -> Subgroup {
    let gens: Vec<usize> = seed.ones().filter(|&x| x != 0).collect();
    generated_by(group, &gens)
}

/// Smallest subgroup containing `gens`.
pub fn generated_by(group: &Group, gens: &[usize]) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(group.order());
    mask.insert(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let row = group.row(x);
        for &g in gens {
            let y = row[g] as usize;
            if !mask.put(y) {
                queue.push(y);
            }
        }
    }
    Subgroup::from_mask(mask)
}

/// `⟨H, x⟩`, built as a union of right cosets of `H`.
fn join_element(group: &Group, h: &Subgroup, h_gens: &[usize], x: usize) -> Subgroup {
    let h_elems: Vec<usize> = h.elements().collect();
    let mut mask = h.members.clone();
    let mut reps = vec![0usize];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head];
        head += 1;
        let row = group.row(r);
        for &s in h_gens.iter().chain(std::iter::once(&x)) {
            let y = row[s] as usize;
            if !mask.contains(y) {
                for &k in &h_elems {
                    mask.insert(group.mul(k, y));
                }
                reps.push(y);
            }
        }
    }
    Subgroup::from_mask(mask)
}

/// `H ∩ K`; always a subgroup.
pub fn intersect(h: &Subgroup, k: &Subgroup) -> Subgroup {
    let mut m = h.members.clone();
    m.intersect_with(&k.members);
    Subgroup::from_mask(m)
}

/// Size of the set `HK`, by `|H||K| / |H ∩ K|`.
pub fn product_size(h: &Subgroup, k: &Subgroup) -> usize {
    let common = h.members.intersection_count(&k.members);
    h.order * k.order / common
}

/// `gHg⁻¹`.
pub fn conjugate(group: &Group, h: &Subgroup, g: usize) -> Subgroup {
    let mut m = FixedBitSet::with_capacity(group.order());
    for x in h.elements() {
        m.insert(group.conjugate_element(x, g));
    }
    Subgroup {
        members: m,
        order: h.order,
    }
}

/// All distinct conjugates of `H`, in lattice order.
pub fn conjugacy_class(group: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut seen: HashMap<FixedBitSet, Subgroup> = HashMap::new();
    for g in 0..group.order() {
        let c = conjugate(group, h, g);
        seen.entry(c.members.clone()).or_insert(c);
    }
    let mut out: Vec<Subgroup> = seen.into_values().collect();
    out.sort_by(|a, b| a.lattice_cmp(b));
    out
}

/// `N_G(H) = {g : gHg⁻¹ = H}`.
pub fn normalizer(group: &Group, h: &Subgroup) -> Subgroup {
    let mut m = FixedBitSet::with_capacity(group.order());
    for g in 0..group.order() {
        if h.elements()
            .all(|x| h.contains(group.conjugate_element(x, g)))
        {
            m.insert(g);
        }
    }
    Subgroup::from_mask(m)
}

pub fn is_normal(group: &Group, h: &Subgroup) -> bool {
    (0..group.order()).all(|g| {
        h.elements()
            .all(|x| h.contains(group.conjugate_element(x, g)))
    })
}

/// `Z(G)`.
pub fn center(group: &Group) -> Subgroup {
    let n = group.order();
    let mut m = FixedBitSet::with_capacity(n);
    for g in 0..n {
        if (0..n).all(|x| group.mul(g, x) == group.mul(x, g)) {
            m.insert(g);
        }
    }
    Subgroup::from_mask(m)
}

/// `[A, B] = ⟨a⁻¹b⁻¹ab : a ∈ A, b ∈ B⟩`.
pub fn commutator_subgroup(group: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seed = FixedBitSet::with_capacity(group.order());
    seed.insert(0);
    for x in a.elements() {
        for y in b.elements() {
            seed.insert(group.commutator(x, y));
        }
    }
    generated_subgroup(group, &seed)
}

/// `G' = [G, G]`.
pub fn derived_subgroup(group: &Group) -> Subgroup {
    let whole = Subgroup::whole(group);
    commutator_subgroup(group, &whole, &whole)
}

/// Restricts the group law to the subgroup `H`, producing a standalone
/// group whose element `i` is the `i`-th member of `H` in index order.
pub fn subgroup_as_group(group: &Group, h: &Subgroup, name: impl Into<String>) -> Group {
    let elems: Vec<usize> = h.elements().collect();
    let mut pos = vec![u32::MAX; group.order()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i as u32;
    }
    let m = elems.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            table.push(pos[group.mul(a, b)]);
        }
    }
    Group::from_trusted_table(m, table, name, format!("subgroup of {}", group.name()))
}

/// Every subgroup of a group, with maximality flags and conjugacy classes.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    maximal: Vec<bool>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    index: HashMap<FixedBitSet, usize>,
}

impl SubgroupLattice {
    /// Enumerates all subgroups with the default cap.
    pub fn enumerate(group: &Group) -> Result<Self> {
        Self::enumerate_capped(group, DEFAULT_LATTICE_CAP)
    }

    /// Cyclic subgroups first, then closure under joins with cyclic
    /// subgroups until nothing new appears. Every subgroup is the join of
    /// its cyclic subgroups, so the fixpoint is the whole lattice.
    pub fn enumerate_capped(group: &Group, cap: usize) -> Result<Self> {
        let n = group.order();
        let mut found: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();

        let mut cyclic: Vec<usize> = Vec::new(); // one generator per cyclic subgroup
        for x in 0..n {
            let c = generated_by(group, &[x]);
            if !index.contains_key(&c.members) {
                if found.len() >= cap {
                    return Err(Error::LatticeLimitExceeded { cap });
                }
                index.insert(c.members.clone(), found.len());
                cyclic.push(x);
                let gens = if x == 0 { vec![] } else { vec![x] };
                found.push((c, gens));
            }
        }

        let mut head = 0;
        while head < found.len() {
            for &x in &cyclic {
                if found[head].0.contains(x) {
                    continue;
                }
                let (h, h_gens) = &found[head];
                let j = join_element(group, h, h_gens, x);
                if index.contains_key(&j.members) {
                    continue;
                }
                if found.len() >= cap {
                    return Err(Error::LatticeLimitExceeded { cap });
                }
                let mut gens = h_gens.clone();
                gens.push(x);
                index.insert(j.members.clone(), found.len());
                found.push((j, gens));
            }
            head += 1;
        }

        let mut subgroups: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
        subgroups.sort_by(|a, b| a.lattice_cmp(b));
        Ok(Self::from_sorted(group, subgroups))
    }

    fn from_sorted(group: &Group, subgroups: Vec<Subgroup>) -> Self {
        let index: HashMap<FixedBitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members.clone(), i))
            .collect();

        let n = group.order();
        let maximal: Vec<bool> = subgroups
            .iter()
            .map(|h| {
                h.order < n
                    && !subgroups.iter().any(|k| {
                        k.order > h.order && k.order < n && k.order % h.order == 0 && h.is_subset(k)
                    })
            })
            .collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for g in 0..n {
                let c = conjugate(group, &subgroups[i], g);
                let j = index[&c.members];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        Self {
            group_order: n,
            subgroups,
            maximal,
            classes,
            class_of,
            index,
        }
    }

    /// `Sub(G)`, counting the trivial subgroup and `G`.
    pub fn count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(&h.members).copied()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.count()).filter(|&i| self.maximal[i]).collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<&Subgroup> {
        self.maximal_indices()
            .into_iter()
            .map(|i| &self.subgroups[i])
            .collect()
    }

    /// Conjugacy classes as lists of lattice indices.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn are_conjugate(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }

    /// `Φ(G)`, the intersection of all maximal subgroups.
    pub fn frattini(&self) -> Result<Subgroup> {
        let mut it = self.maximal_indices().into_iter();
        let first = it.next().ok_or(Error::NoProperSubgroups)?;
        let mut m = self.subgroups[first].members.clone();
        for i in it {
            m.intersect_with(&self.subgroups[i].members);
        }
        Ok(Subgroup::from_mask(m))
    }

    /// Subgroups whose order is the full `p`-part of `|G|`. Empty when `p`
    /// does not divide `|G|`.
    pub fn sylow_subgroups(&self, p: usize) -> Vec<&Subgroup> {
        if p < 2 || !self.group_order.is_multiple_of(p) {
            return Vec::new();
        }
        let mut pk = 1;
        while self.group_order.is_multiple_of(pk * p) {
            pk *= p;
        }
        self.subgroups.iter().filter(|s| s.order == pk).collect()
    }

    /// Subgroup orders present in the lattice.
    pub fn has_order(&self, d: usize) -> bool {
        self.subgroups.iter().any(|s| s.order == d)
    }

    /// Lattice indices of the normal subgroups.
    pub fn normal_indices(&self) -> Vec<usize> {
        (0..self.count())
            .filter(|&i| self.classes[self.class_of[i]].len() == 1)
            .collect()
    }
}

/// Prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}
