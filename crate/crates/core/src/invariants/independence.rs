use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use fixedbitset::FixedBitSet;

use super::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{BitGraph, ComaximalGraph};
use crate::par;

/// Outcome of a maximum independent set search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceResult {
    /// `α` when `exact`, otherwise the best lower bound found.
    pub alpha: usize,
    /// Sorted vertex indices of an independent set of size `alpha`.
    pub certificate: Vec<usize>,
    pub exact: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Exact independence number.
///
/// Isolated vertices are taken outright; each remaining connected component
/// is solved separately by branch and bound on the max-degree vertex
/// (exclude first, then include), pruned by a greedy clique-cover bound.
pub fn independence_number(graph: &BitGraph, budget: Budget) -> IndependenceResult {
    let meter = Meter::new(budget);
    let mut certificate = graph.isolated();

    let active: Vec<usize> = (0..graph.vertex_count())
        .filter(|&v| graph.degree(v) > 0)
        .collect();
    let core = graph.induced(&active);
    for comp in core.components() {
        let local = core.induced(&comp);
        let best = MisSearch::new(&local, &meter, None).run();
        certificate.extend(best.into_iter().map(|v| active[comp[v]]));
    }
    certificate.sort_unstable();
    assert!(
        graph.is_independent(&certificate),
        "independent set certificate failed verification"
    );

    IndependenceResult {
        alpha: certificate.len(),
        certificate,
        exact: !meter.exhausted(),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    }
}

/// Certifies `α(Γ) ≥ target` without a full search when possible.
///
/// Seeds: every isolated vertex, plus one maximal vertex-subgroup `M` with
/// all vertex-subgroups inside it (pairwise non-adjacent, since their
/// products stay inside `M`), extended greedily. Falls back to a bounded
/// branch and bound that stops as soon as the target is met.
pub fn independence_lower_bound(
    gamma: &ComaximalGraph,
    target: usize,
) -> Result<IndependenceResult> {
    let meter = Meter::new(Budget::nodes(2_000_000));
    if target == 0 {
        return Ok(IndependenceResult {
            alpha: 0,
            certificate: Vec::new(),
            exact: false,
            nodes_explored: 0,
            elapsed: meter.elapsed(),
        });
    }
    let graph = gamma.graph();
    let n = graph.vertex_count();
    let isolated = graph.isolated();

    let maximal: Vec<usize> = (0..n)
        .filter(|&m| {
            let s = gamma.subgroup(m);
            !(0..n).any(|k| {
                k != m && gamma.subgroup(k).order() > s.order() && s.is_subset(gamma.subgroup(k))
            })
        })
        .collect();

    let mut best: Vec<usize> = Vec::new();
    for &m in &maximal {
        let top = gamma.subgroup(m);
        let mut chosen = FixedBitSet::with_capacity(n);
        for &v in &isolated {
            chosen.insert(v);
        }
        for v in 0..n {
            if gamma.subgroup(v).is_subset(top) {
                chosen.insert(v);
            }
        }
        let mut blocked = FixedBitSet::with_capacity(n);
        for v in chosen.ones() {
            blocked.union_with(graph.neighbors(v));
        }
        for v in 0..n {
            if !chosen.contains(v) && !blocked.contains(v) {
                chosen.insert(v);
                blocked.union_with(graph.neighbors(v));
            }
        }
        if chosen.count_ones(..) > best.len() {
            best = chosen.ones().collect();
        }
        meter.tick();
        if best.len() >= target {
            break;
        }
    }

    if best.len() < target {
        let active: Vec<usize> = (0..n).filter(|&v| graph.degree(v) > 0).collect();
        let core = graph.induced(&active);
        let need = target.saturating_sub(isolated.len());
        let found = MisSearch::new(&core, &meter, Some(need)).run();
        if isolated.len() + found.len() > best.len() {
            best = isolated
                .iter()
                .copied()
                .chain(found.into_iter().map(|v| active[v]))
                .collect();
        }
    }
    best.sort_unstable();
    assert!(
        graph.is_independent(&best),
        "independent set certificate failed verification"
    );

    if best.len() < target {
        return Err(Error::TargetNotReached {
            target,
            best: best.len(),
        });
    }
    Ok(IndependenceResult {
        alpha: best.len(),
        certificate: best,
        exact: false,
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

struct MisSearch<'a> {
    graph: &'a BitGraph,
    meter: &'a Meter,
    best_size: AtomicUsize,
    best: Mutex<Vec<usize>>,
    target: Option<usize>,
    done: AtomicBool,
}

impl<'a> MisSearch<'a> {
    fn new(graph: &'a BitGraph, meter: &'a Meter, target: Option<usize>) -> Self {
        Self {
            graph,
            meter,
            best_size: AtomicUsize::new(0),
            best: Mutex::new(Vec::new()),
            target,
            done: AtomicBool::new(false),
        }
    }

    /// Splits the search by the first included vertex in a fixed order
    /// (sub-problem `i` includes `order[i]` and excludes `order[..i]`) and
    /// explores the sub-problems on the worker pool with a shared incumbent.
    fn run(self) -> Vec<usize> {
        let m = self.graph.vertex_count();
        if m == 0 {
            return Vec::new();
        }
        let mut all = FixedBitSet::with_capacity(m);
        all.insert_range(..);
        self.offer(&self.greedy(all));

        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.graph.degree(v)));
        par::for_each_index(m, |i| {
            let v = order[i];
            let mut p = FixedBitSet::with_capacity(m);
            for &w in &order[i + 1..] {
                p.insert(w);
            }
            p.difference_with(self.graph.neighbors(v));
            let mut cur = vec![v];
            self.expand(p, &mut cur);
        });
        self.best.into_inner().expect("no worker panicked")
    }

    fn greedy(&self, mut p: FixedBitSet) -> Vec<usize> {
        let mut out = Vec::new();
        while let Some(v) = p
            .ones()
            .min_by_key(|&v| self.graph.neighbors(v).intersection_count(&p))
        {
            out.push(v);
            p.remove(v);
            p.difference_with(self.graph.neighbors(v));
        }
        out
    }

    fn offer(&self, cur: &[usize]) {
        if cur.len() <= self.best_size.load(Ordering::Relaxed) {
            return;
        }
        let mut best = self.best.lock().expect("no worker panicked");
        if cur.len() > best.len() {
            *best = cur.to_vec();
            self.best_size.store(cur.len(), Ordering::Relaxed);
        }
        if self.target.is_some_and(|t| best.len() >= t) {
            self.done.store(true, Ordering::Relaxed);
        }
    }

    fn expand(&self, mut p: FixedBitSet, cur: &mut Vec<usize>) {
        if self.done.load(Ordering::Relaxed) || !self.meter.tick() {
            return;
        }
        let base = cur.len();
        // Vertices of degree ≤ 1 in G[P] lie in some maximum independent set.
        loop {
            let mut forced = None;
            for u in p.ones() {
                if self.graph.neighbors(u).intersection_count(&p) <= 1 {
                    forced = Some(u);
                    break;
                }
            }
            let Some(u) = forced else { break };
            cur.push(u);
            p.remove(u);
            p.difference_with(self.graph.neighbors(u));
        }
        let remaining = p.count_ones(..);
        let best = self.best_size.load(Ordering::Relaxed);
        if remaining == 0 {
            self.offer(cur);
        } else if cur.len() + remaining > best
            && cur.len() + self.clique_cover(&p, best - cur.len().min(best)) > best
        {
            let v = p
                .ones()
                .max_by_key(|&u| self.graph.neighbors(u).intersection_count(&p))
                .expect("p is non-empty");
            let mut excluded = p.clone();
            excluded.remove(v);
            self.expand(excluded, cur);

            p.remove(v);
            p.difference_with(self.graph.neighbors(v));
            cur.push(v);
            self.expand(p, cur);
            cur.pop();
        }
        cur.truncate(base);
    }

    /// Greedy partition of `p` into cliques; returns the number of cliques,
    /// stopping early once it exceeds `limit`.
    fn clique_cover(&self, p: &FixedBitSet, limit: usize) -> usize {
        let mut commons: Vec<FixedBitSet> = Vec::new();
        for v in p.ones() {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(self.graph.neighbors(v)),
                None => {
                    if commons.len() > limit {
                        return commons.len() + 1;
                    }
                    commons.push(self.graph.neighbors(v).clone());
                }
            }
        }
        commons.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, b: usize, isolated: usize) -> BitGraph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        BitGraph::from_edges(a + b + isolated, &edges)
    }

    #[test]
    fn edgeless() {
        let r = independence_number(&BitGraph::empty(9), Budget::default());
        assert_eq!(r.alpha, 9);
        assert!(r.exact);
    }

    #[test]
    fn empty_graph() {
        let r = independence_number(&BitGraph::empty(0), Budget::default());
        assert_eq!(r.alpha, 0);
        assert!(r.exact);
    }

    #[test]
    fn k5_12_plus_40() {
        let r = independence_number(&complete_bipartite(5, 12, 40), Budget::default());
        assert_eq!(r.alpha, 52);
        assert!(r.exact);
    }

    #[test]
    fn star_k13() {
        let r = independence_number(&complete_bipartite(1, 3, 0), Budget::default());
        assert_eq!(r.alpha, 3);
    }

    #[test]
    fn odd_cycle_and_clique() {
        let c7 = BitGraph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>());
        assert_eq!(independence_number(&c7, Budget::default()).alpha, 3);
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        assert_eq!(
            independence_number(&BitGraph::from_edges(6, &edges), Budget::default()).alpha,
            1
        );
    }

    #[test]
    fn tiny_budget_is_inexact_but_valid() {
        // Petersen graph, α = 4.
        let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = BitGraph::from_edges(10, &edges);
        let r = independence_number(&g, Budget::nodes(1));
        assert!(!r.exact);
        assert!(g.is_independent(&r.certificate));
        assert!(r.alpha <= 4);
        assert_eq!(independence_number(&g, Budget::default()).alpha, 4);
    }
}
