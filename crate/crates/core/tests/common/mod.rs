//! Slow, obviously-correct reference computations.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use comaximal::{catalog, BitGraph, Group, SubgroupLattice};

pub fn bundled_groups() -> Vec<Group> {
    catalog::bundled_catalog()
        .build_all()
        .expect("bundled catalog builds")
}

/// Adjacency as plain sets.
pub fn adjacency_sets(g: &BitGraph) -> Vec<BTreeSet<usize>> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).ones().collect())
        .collect()
}

fn masks(g: &BitGraph) -> Vec<u32> {
    assert!(
        g.vertex_count() <= 24,
        "exhaustive oracles need a small graph"
    );
    adjacency_sets(g)
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect()
}

/// Independence number by trying every vertex subset.
pub fn exhaustive_alpha(g: &BitGraph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    let mut best = 0;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        if (0..n).all(|v| set & (1 << v) == 0 || adj[v] & set == 0) {
            best = size;
        }
    }
    best
}

/// Domination number by trying every vertex subset.
pub fn exhaustive_gamma(g: &BitGraph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut best = n;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as usize;
        if size >= best {
            continue;
        }
        let covered = (0..n)
            .filter(|&v| set & (1 << v) != 0)
            .fold(set, |c, v| c | adj[v]);
        if covered == full {
            best = size;
        }
    }
    best
}

type Mask = u128;

fn close(g: &Group, seed: Mask) -> Mask {
    let mut set = seed | 1;
    loop {
        let mut next = set;
        for a in 0..g.order() {
            if set >> a & 1 == 0 {
                continue;
            }
            for b in 0..g.order() {
                if set >> b & 1 == 1 {
                    next |= 1 << g.mul(a, b);
                }
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Every subgroup, as a bitmask: cyclic subgroups, then closures of
/// pairwise unions until nothing new appears.
pub fn naive_subgroups(g: &Group) -> BTreeSet<Mask> {
    assert!(g.order() <= 128);
    let mut found: BTreeSet<Mask> = (0..g.order()).map(|x| close(g, 1 << x)).collect();
    let mut frontier: Vec<Mask> = found.iter().copied().collect();
    while !frontier.is_empty() {
        let known: Vec<Mask> = found.iter().copied().collect();
        let mut fresh = Vec::new();
        for &a in &frontier {
            for &b in &known {
                let j = close(g, a | b);
                if found.insert(j) {
                    fresh.push(j);
                }
            }
        }
        frontier = fresh;
    }
    found
}

pub fn lattice_masks(l: &SubgroupLattice) -> BTreeSet<Mask> {
    l.subgroups()
        .iter()
        .map(|h| h.elements().fold(0, |m, x| m | (1 << x)))
        .collect()
}

fn elements(m: Mask) -> Vec<usize> {
    (0..128).filter(|&i| m >> i & 1 == 1).collect()
}

fn is_normal(g: &Group, h: Mask) -> bool {
    (0..g.order()).all(|x| {
        elements(h)
            .iter()
            .all(|&y| h >> g.mul(g.mul(x, y), g.inverse(x)) & 1 == 1)
    })
}

/// `big / small` is cyclic, for `small ⊴ big`.
fn cyclic_quotient(g: &Group, small: Mask, big: Mask) -> bool {
    let index = big.count_ones() / small.count_ones();
    elements(big).into_iter().any(|x| {
        let mut p = x;
        let mut k = 1;
        while small >> p & 1 == 0 {
            p = g.mul(p, x);
            k += 1;
        }
        k == index
    })
}

/// Supersolvable iff a chain `1 = N0 < N1 < … < G` of normal subgroups of
/// `G` has cyclic factors. Searched directly over the normal subgroups.
pub fn supersolvable_by_normal_series(g: &Group, l: &SubgroupLattice) -> bool {
    let normal: Vec<Mask> = lattice_masks(l)
        .into_iter()
        .filter(|&h| is_normal(g, h))
        .collect();
    let whole = *normal
        .iter()
        .max_by_key(|m| m.count_ones())
        .expect("G is normal");
    let mut seen = HashSet::new();
    let mut stack = vec![1 as Mask];
    while let Some(n) = stack.pop() {
        if n == whole {
            return true;
        }
        if !seen.insert(n) {
            continue;
        }
        for &m in &normal {
            if m != n && m & n == n && cyclic_quotient(g, n, m) {
                stack.push(m);
            }
        }
    }
    false
}

pub type Fingerprint = (Vec<(usize, usize, usize)>, Vec<(usize, usize)>);

/// Isomorphism invariant: sorted (element order, centraliser size, count)
/// plus the number of subgroups of each order.
pub fn fingerprint(g: &Group, l: &SubgroupLattice) -> Fingerprint {
    let mut classes = std::collections::BTreeMap::new();
    for x in 0..g.order() {
        let cent = (0..g.order())
            .filter(|&y| g.mul(x, y) == g.mul(y, x))
            .count();
        *classes.entry((g.element_order(x), cent)).or_insert(0) += 1;
    }
    let mut orders = std::collections::BTreeMap::new();
    for h in l.subgroups() {
        *orders.entry(h.order()).or_insert(0) += 1;
    }
    (
        classes.into_iter().map(|((o, c), k)| (o, c, k)).collect(),
        orders.into_iter().collect(),
    )
}
