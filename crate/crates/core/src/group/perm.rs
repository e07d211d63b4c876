use std::collections::HashMap;

use super::{Group, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// Closure of a set of permutations of `0..degree`.
///
/// Permutations are image arrays (`p[i]` is the image of `i`). The product
/// `a·b` applies `a` first, then `b`. Elements are indexed in breadth-first
/// discovery order from the identity, so the identity is index 0.
pub fn from_permutation_generators(
    degree: usize,
    generators: &[Vec<usize>],
    name: impl Into<String>,
) -> Result<Group> {
    from_permutation_generators_capped(degree, generators, name, DEFAULT_ORDER_CAP)
}

pub fn from_permutation_generators_capped(
    degree: usize,
    generators: &[Vec<usize>],
    name: impl Into<String>,
    cap: usize,
) -> Result<Group> {
    if degree == 0 {
        return Err(Error::NotAPermutation {
            degree,
            detail: "degree must be positive".into(),
        });
    }
    let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
    for g in generators {
        if g.len() != degree {
            return Err(Error::NotAPermutation {
                degree,
                detail: format!("image array has length {}", g.len()),
            });
        }
        let mut seen = vec![false; degree];
        for &x in g {
            if x >= degree || seen[x] {
                return Err(Error::NotAPermutation {
                    degree,
                    detail: format!("{g:?}"),
                });
            }
            seen[x] = true;
        }
        gens.push(g.iter().map(|&x| x as u32).collect());
    }

    let k = gens.len();
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u32>, u32> = HashMap::from([(identity, 0)]);
    // right[x * k + j] = index of elements[x]·gens[j]
    let mut right: Vec<u32> = Vec::new();
    // parent[b] = (p, j) with elements[b] = elements[p]·gens[j]
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];

    let mut head = 0;
    while head < elements.len() {
        for (j, g) in gens.iter().enumerate() {
            let prod: Vec<u32> = elements[head].iter().map(|&x| g[x as usize]).collect();
            let next = match index.get(&prod) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::OrderLimitExceeded {
                            what: "permutation closure".into(),
                            cap,
                        });
                    }
                    let i = elements.len() as u32;
                    index.insert(prod.clone(), i);
                    elements.push(prod);
                    parent.push((head as u32, j as u32));
                    i
                }
            };
            right.push(next);
        }
        head += 1;
    }

    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let row = &mut table[a * n..(a + 1) * n];
        row[0] = a as u32;
        for b in 1..n {
            let (p, j) = parent[b];
            row[b] = right[row[p as usize] as usize * k + j as usize];
        }
    }
    let provenance = {
        let mut s = format!("perm {degree}");
        for g in generators {
            s.push_str(" |");
            for x in g {
                s.push_str(&format!(" {x}"));
            }
        }
        s
    };
    Ok(Group::from_trusted_table(n, table, name, provenance))
}
