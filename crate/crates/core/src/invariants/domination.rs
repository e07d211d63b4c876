use std::time::Duration;

use fixedbitset::FixedBitSet;

use super::{Budget, Meter};
use crate::graph::BitGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    /// `γ` when `exact`, otherwise the size of the best dominating set found.
    pub gamma: usize,
    /// Sorted vertex indices of a dominating set of size `gamma`.
    pub certificate: Vec<usize>,
    pub exact: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Exact domination number. Isolated vertices are forced into the set;
/// every other component is solved by branching on the dominators of the
/// hardest-to-cover vertex. The empty graph has `γ = 0`.
pub fn domination_number(graph: &BitGraph, budget: Budget) -> DominationResult {
    let meter = Meter::new(budget);
    let mut certificate = graph.isolated();
    let active: Vec<usize> = (0..graph.vertex_count())
        .filter(|&v| graph.degree(v) > 0)
        .collect();
    let core = graph.induced(&active);
    for comp in core.components() {
        let local = core.induced(&comp);
        let best = DomSearch::new(&local, &meter).run();
        certificate.extend(best.into_iter().map(|v| active[comp[v]]));
    }
    certificate.sort_unstable();
    assert!(
        graph.is_dominating(&certificate),
        "dominating set certificate failed verification"
    );
    DominationResult {
        gamma: certificate.len(),
        certificate,
        exact: !meter.exhausted(),
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    }
}

struct DomSearch<'a> {
    closed: Vec<FixedBitSet>,
    meter: &'a Meter,
    best: Vec<usize>,
}

impl<'a> DomSearch<'a> {
    fn new(graph: &BitGraph, meter: &'a Meter) -> Self {
        let closed = (0..graph.vertex_count())
            .map(|v| {
                let mut c = graph.neighbors(v).clone();
                c.insert(v);
                c
            })
            .collect();
        Self {
            closed,
            meter,
            best: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        let m = self.closed.len();
        let mut all = FixedBitSet::with_capacity(m);
        all.insert_range(..);
        self.best = self.greedy(all.clone());
        let mut allowed = FixedBitSet::with_capacity(m);
        allowed.insert_range(..);
        let mut chosen = Vec::new();
        self.expand(all, allowed, &mut chosen);
        self.best
    }

    fn greedy(&self, mut undominated: FixedBitSet) -> Vec<usize> {
        let mut out = Vec::new();
        while !undominated.is_clear() {
            let w = (0..self.closed.len())
                .max_by_key(|&w| self.closed[w].intersection_count(&undominated))
                .expect("graph is non-empty");
            out.push(w);
            undominated.difference_with(&self.closed[w]);
        }
        out
    }

    fn lower_bound(&self, undominated: &FixedBitSet, allowed: &FixedBitSet) -> usize {
        let left = undominated.count_ones(..);
        let reach = allowed
            .ones()
            .map(|w| self.closed[w].intersection_count(undominated))
            .max()
            .unwrap_or(0);
        if reach == 0 {
            usize::MAX / 2
        } else {
            left.div_ceil(reach)
        }
    }

    /// `allowed` shrinks along sibling branches so each set is tried once.
    fn expand(
        &mut self,
        undominated: FixedBitSet,
        mut allowed: FixedBitSet,
        chosen: &mut Vec<usize>,
    ) {
        if !self.meter.tick() {
            return;
        }
        if undominated.is_clear() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.lower_bound(&undominated, &allowed) >= self.best.len() {
            return;
        }
        // The undominated vertex with the fewest remaining dominators.
        let Some(u) = undominated
            .ones()
            .min_by_key(|&u| self.closed[u].intersection_count(&allowed))
        else {
            return;
        };
        let mut candidates: Vec<usize> = self.closed[u].intersection(&allowed).collect();
        candidates
            .sort_by_key(|&w| std::cmp::Reverse(self.closed[w].intersection_count(&undominated)));
        for w in candidates {
            let mut next = undominated.clone();
            next.difference_with(&self.closed[w]);
            chosen.push(w);
            self.expand(next, allowed.clone(), chosen);
            chosen.pop();
            allowed.remove(w);
            if self.meter.exhausted() {
                return;
            }
        }
    }
}
