//! Finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..order`; index 0 is always the identity. Every
//! constructor in this module either builds the table from a known group law
//! (and so needs no checking) or validates it before returning.

mod families;
mod perm;
mod semidirect;

pub use families::{alternating, cyclic, dicyclic, dihedral, direct_product, symmetric};
pub use perm::{from_permutation_generators, from_permutation_generators_capped};
pub use semidirect::{semidirect_product, SemidirectAction};

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of elements any constructor will produce.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Tables up to this order get a full O(n³) associativity sweep on ingestion.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

/// A finite group given by its complete multiplication table.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    name: String,
    provenance: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl Group {
    /// Builds a group from a table whose law is known to be a group law.
    /// The identity must already sit at index 0.
    pub(crate) fn from_trusted_table(
        order: usize,
        table: Vec<u32>,
        name: impl Into<String>,
        provenance: impl Into<String>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&x| x == 0)
                .expect("row contains identity");
            inverses[a] = b as u32;
        }
        Self {
            order,
            table,
            inverses,
            name: name.into(),
            provenance: provenance.into(),
        }
    }

    /// Ingests an arbitrary Cayley table, relocating the identity to index 0
    /// and checking every group axiom.
    pub fn from_cayley_table(table: &[Vec<usize>], name: impl Into<String>) -> Result<Self> {
        Self::from_cayley_table_checked(table, name, false)
    }

    /// As [`Group::from_cayley_table`], optionally forcing the full
    /// associativity sweep for tables past [`FULL_ASSOCIATIVITY_LIMIT`].
    pub fn from_cayley_table_checked(
        table: &[Vec<usize>],
        name: impl Into<String>,
        full_associativity: bool,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::OrderLimitExceeded {
                what: "cayley table".into(),
                cap: DEFAULT_ORDER_CAP,
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!(
                    "row {i} has entry {x} out of range"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;

        // Swap labels `identity` and 0.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }

        check_latin(&flat, n)?;
        let full = full_associativity || n <= FULL_ASSOCIATIVITY_LIMIT;
        if let Some((a, b, c)) = find_nonassociative(&flat, n, full) {
            return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
        }
        // A Latin square with identity has one-sided inverses; check two-sidedness.
        let g = Self::from_trusted_table(n, flat, name, "cayley-table");
        for a in 0..n {
            let b = g.inverse(a);
            if g.mul(b, a) != 0 {
                return Err(Error::NotAGroup(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        let provenance = format!("table {n}");
        Ok(Self { provenance, ..g })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The construction recipe this group was built from.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Row `a` of the table: `row(a)[b] = a·b`.
    #[inline]
    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conjugate_element(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// `x⁻¹·y⁻¹·x·y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xi = self.inverse(x);
        let yi = self.inverse(y);
        self.mul(self.mul(xi, yi), self.mul(x, y))
    }

    /// Smallest `k ≥ 1` with `xᵏ = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != 0 {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Table as nested rows, for export and round-trips.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// Re-runs every axiom check on the stored table.
    pub fn validate(&self, full_associativity: bool) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::NotAGroup(format!("identity law fails at {x}")));
            }
        }
        check_latin(&self.table, n)?;
        let full = full_associativity || n <= FULL_ASSOCIATIVITY_LIMIT;
        if let Some((a, b, c)) = find_nonassociative(&self.table, n, full) {
            return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
        }
        for a in 0..n {
            let b = self.inverse(a);
            if self.mul(a, b) != 0 || self.mul(b, a) != 0 {
                return Err(Error::NotAGroup(format!("bad inverse for {a}")));
            }
        }
        Ok(())
    }
}

fn check_latin(flat: &[u32], n: usize) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let x = flat[a * n + b] as usize;
            if seen[x] == a {
                return Err(Error::NotAGroup(format!("row {a} repeats {x}")));
            }
            seen[x] = a;
        }
    }
    seen.fill(usize::MAX);
    for b in 0..n {
        for a in 0..n {
            let x = flat[a * n + b] as usize;
            if seen[x] == b {
                return Err(Error::NotAGroup(format!("column {b} repeats {x}")));
            }
            seen[x] = b;
        }
    }
    Ok(())
}

fn find_nonassociative(flat: &[u32], n: usize, full: bool) -> Option<(usize, usize, usize)> {
    let m = |a: usize, b: usize| flat[a * n + b] as usize;
    let check = |a: usize, b: usize, c: usize| m(m(a, b), c) != m(a, m(b, c));
    if full {
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        return None;
    }
    // Deterministic sample: every row/column pair along a stride, all c.
    let stride = (n / 64).max(1);
    for a in (0..n).step_by(stride) {
        for b in (0..n).step_by(stride) {
            for c in 0..n {
                if check(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}
