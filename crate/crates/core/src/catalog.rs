//! Line-based group definition files.
//!
//! ```text
//! # complete-order 12
//! group Z3:Z4
//! semidirect Z3 Z4
//! act 1 : 0 2 1
//! tag exception:nilpotent
//! end
//! ```
//!
//! An entry opens with `group <name>`, holds exactly one recipe, any number
//! of `tag <text>` lines, and closes with `end`. Recipes:
//!
//! * `family <cyclic|dihedral|dicyclic|symmetric|alternating> <n>`
//! * `perm <degree>` followed by one or more `gen <img0> … <img_{degree-1}>`
//! * `table <n>` followed by `n` rows of `n` element indices
//! * `product <A> <B>`
//! * `semidirect <N> <H>` followed by `act <h> : <img…>` lines giving the
//!   automorphism of `N` induced by each listed element of `H`
//!
//! Referenced names must be defined earlier. `#` starts a comment line;
//! `# complete-order <n>…` declares that the catalog holds every group of
//! those orders up to isomorphism.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{self, Group, SemidirectAction};

/// The catalog shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../catalog/bundled.catalog");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
}

impl Family {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "cyclic" => Self::Cyclic,
            "dihedral" => Self::Dihedral,
            "dicyclic" => Self::Dicyclic,
            "symmetric" => Self::Symmetric,
            "alternating" => Self::Alternating,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Cyclic => "cyclic",
            Self::Dihedral => "dihedral",
            Self::Dicyclic => "dicyclic",
            Self::Symmetric => "symmetric",
            Self::Alternating => "alternating",
        }
    }

    fn build(self, n: usize) -> Result<Group> {
        match self {
            Self::Cyclic => group::cyclic(n),
            Self::Dihedral => group::dihedral(n),
            Self::Dicyclic => group::dicyclic(n),
            Self::Symmetric => group::symmetric(n),
            Self::Alternating => group::alternating(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Family {
        family: Family,
        n: usize,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        rows: Vec<Vec<usize>>,
    },
    Product {
        left: String,
        right: String,
    },
    Semidirect {
        normal: String,
        acting: String,
        actions: Vec<(usize, Vec<usize>)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub tags: Vec<String>,
}

impl CatalogEntry {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// One-line description of the recipe, as written in the file.
    pub fn recipe_line(&self) -> String {
        match &self.recipe {
            Recipe::Family { family, n } => format!("family {} {n}", family.as_str()),
            Recipe::Permutation { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| join(g)).collect();
                format!("perm {degree} [{}]", gens.join(" | "))
            }
            Recipe::Table { rows } => format!("table {}", rows.len()),
            Recipe::Product { left, right } => format!("product {left} {right}"),
            Recipe::Semidirect {
                normal,
                acting,
                actions,
            } => {
                let acts: Vec<String> = actions
                    .iter()
                    .map(|(h, img)| format!("{h} : {}", join(img)))
                    .collect();
                format!("semidirect {normal} {acting} [{}]", acts.join(" | "))
            }
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    complete_orders: BTreeSet<usize>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Orders for which the catalog declares every isomorphism class present.
    pub fn complete_orders(&self) -> &BTreeSet<usize> {
        &self.complete_orders
    }

    /// Appends entries parsed from another file; names may not be redefined.
    pub fn extend(&mut self, other: Catalog) -> Result<()> {
        for e in &other.entries {
            if self.get(&e.name).is_some() {
                return Err(Error::DuplicateName(e.name.clone()));
            }
        }
        self.entries.extend(other.entries);
        self.complete_orders.extend(other.complete_orders);
        Ok(())
    }

    /// Builds every entry, in file order.
    pub fn build_all(&self) -> Result<Vec<Group>> {
        let mut built: HashMap<&str, Group> = HashMap::new();
        let mut out = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let g = build_entry(e, &built)?;
            built.insert(&e.name, g.clone());
            out.push(g);
        }
        Ok(out)
    }

    /// Builds one entry and whatever it references.
    pub fn build(&self, name: &str) -> Result<Group> {
        let mut built: HashMap<&str, Group> = HashMap::new();
        self.build_into(name, &mut built)
    }

    fn build_into<'a>(&'a self, name: &str, built: &mut HashMap<&'a str, Group>) -> Result<Group> {
        if let Some(g) = built.get(name) {
            return Ok(g.clone());
        }
        let e = self
            .entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
        match &e.recipe {
            Recipe::Product { left, right } => {
                self.build_into(left, built)?;
                self.build_into(right, built)?;
            }
            Recipe::Semidirect { normal, acting, .. } => {
                self.build_into(normal, built)?;
                self.build_into(acting, built)?;
            }
            _ => {}
        }
        let g = build_entry(e, built)?;
        built.insert(&e.name, g.clone());
        Ok(g)
    }

    /// Serialises in the file format; parsing the output yields `self`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.complete_orders.is_empty() {
            let orders: Vec<usize> = self.complete_orders.iter().copied().collect();
            let _ = writeln!(out, "# complete-order {}", join(&orders));
        }
        for e in &self.entries {
            let _ = writeln!(out, "group {}", e.name);
            match &e.recipe {
                Recipe::Family { family, n } => {
                    let _ = writeln!(out, "family {} {n}", family.as_str());
                }
                Recipe::Permutation { degree, generators } => {
                    let _ = writeln!(out, "perm {degree}");
                    for g in generators {
                        let _ = writeln!(out, "gen {}", join(g));
                    }
                }
                Recipe::Table { rows } => {
                    let _ = writeln!(out, "table {}", rows.len());
                    for r in rows {
                        let _ = writeln!(out, "{}", join(r));
                    }
                }
                Recipe::Product { left, right } => {
                    let _ = writeln!(out, "product {left} {right}");
                }
                Recipe::Semidirect {
                    normal,
                    acting,
                    actions,
                } => {
                    let _ = writeln!(out, "semidirect {normal} {acting}");
                    for (h, img) in actions {
                        let _ = writeln!(out, "act {h} : {}", join(img));
                    }
                }
            }
            for t in &e.tags {
                let _ = writeln!(out, "tag {t}");
            }
            out.push_str("end\n");
        }
        out
    }
}

fn build_entry(e: &CatalogEntry, built: &HashMap<&str, Group>) -> Result<Group> {
    let lookup = |n: &str| {
        built
            .get(n)
            .ok_or_else(|| Error::UnknownGroup(n.to_string()))
    };
    let g = match &e.recipe {
        Recipe::Family { family, n } => family.build(*n)?,
        Recipe::Permutation { degree, generators } => {
            group::from_permutation_generators(*degree, generators, &e.name)?
        }
        Recipe::Table { rows } => Group::from_cayley_table(rows, &e.name)?,
        Recipe::Product { left, right } => group::direct_product(lookup(left)?, lookup(right)?)?,
        Recipe::Semidirect {
            normal,
            acting,
            actions,
        } => {
            let action = SemidirectAction::from_generators(
                lookup(normal)?.clone(),
                lookup(acting)?.clone(),
                actions,
            )?;
            group::semidirect_product(&action, &e.name)?
        }
    };
    Ok(g.with_name(&e.name).with_provenance(e.recipe_line()))
}

/// Parses a catalog file. References must resolve to earlier entries.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    parse_catalog_after(text, &Catalog::default())
}

/// Parses a catalog whose entries may also reference names in `prior`.
pub fn parse_catalog_after(text: &str, prior: &Catalog) -> Result<Catalog> {
    Parser::new(text, prior).run()
}

struct Pending {
    name: String,
    line: usize,
    recipe: Option<Recipe>,
    tags: Vec<String>,
    /// Rows still expected for a `table` recipe.
    rows_left: usize,
}

struct Parser<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    prior: &'a Catalog,
    catalog: Catalog,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn nums(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| perr(line, format!("expected a non-negative integer, got `{t}`")))
        })
        .collect()
}

fn one_num(line: usize, toks: &[&str], what: &str) -> Result<usize> {
    match toks {
        [t] => t
            .parse()
            .map_err(|_| perr(line, format!("bad {what} `{t}`"))),
        _ => Err(perr(line, format!("expected exactly one {what}"))),
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, prior: &'a Catalog) -> Self {
        Self {
            lines: text.lines().enumerate(),
            prior,
            catalog: Catalog::default(),
        }
    }

    fn known(&self, name: &str) -> bool {
        self.catalog.get(name).is_some() || self.prior.get(name).is_some()
    }

    fn run(mut self) -> Result<Catalog> {
        let mut pending: Option<Pending> = None;
        while let Some((i, raw)) = self.lines.next() {
            let line = i + 1;
            let text = raw.trim();
            if text.is_empty() {
                continue;
            }
            if let Some(comment) = text.strip_prefix('#') {
                let mut toks = comment.split_whitespace();
                if toks.next() == Some("complete-order") {
                    let orders = nums(line, &toks.collect::<Vec<_>>())?;
                    self.catalog.complete_orders.extend(orders);
                }
                continue;
            }
            let toks: Vec<&str> = text.split_whitespace().collect();
            let Some(p) = pending.as_mut() else {
                match toks.as_slice() {
                    ["group", name] => {
                        if self.known(name) {
                            return Err(Error::DuplicateName(name.to_string()));
                        }
                        pending = Some(Pending {
                            name: name.to_string(),
                            line,
                            recipe: None,
                            tags: Vec::new(),
                            rows_left: 0,
                        });
                        continue;
                    }
                    _ => return Err(perr(line, format!("expected `group <name>`, got `{text}`"))),
                }
            };

            if p.rows_left > 0 {
                let Some(Recipe::Table { rows }) = p.recipe.as_mut() else {
                    unreachable!("rows_left is only set for tables")
                };
                let row = nums(line, &toks)?;
                rows.push(row);
                p.rows_left -= 1;
                continue;
            }

            let (head, rest) = (toks[0], &toks[1..]);
            match head {
                "end" => {
                    let p = pending.take().expect("inside an entry");
                    let recipe = p
                        .recipe
                        .ok_or_else(|| perr(line, format!("group `{}` has no recipe", p.name)))?;
                    Self::finish_recipe(&recipe, line)?;
                    self.catalog.entries.push(CatalogEntry {
                        name: p.name,
                        recipe,
                        tags: p.tags,
                    });
                }
                "tag" => {
                    if rest.is_empty() {
                        return Err(perr(line, "empty tag"));
                    }
                    p.tags.push(rest.join(" "));
                }
                "gen" => match p.recipe.as_mut() {
                    Some(Recipe::Permutation { degree, generators }) => {
                        let img = nums(line, rest)?;
                        let mut seen = vec![false; *degree];
                        let ok = img.len() == *degree
                            && img
                                .iter()
                                .all(|&x| x < *degree && !std::mem::replace(&mut seen[x], true));
                        if !ok {
                            return Err(Error::NotAPermutation {
                                degree: *degree,
                                detail: format!("line {line}: {}", join(&img)),
                            });
                        }
                        generators.push(img);
                    }
                    _ => return Err(perr(line, "`gen` outside a `perm` recipe")),
                },
                "act" => match p.recipe.as_mut() {
                    Some(Recipe::Semidirect { actions, .. }) => {
                        let (h, img) = match rest {
                            [h, ":", img @ ..] => (*h, img),
                            _ => return Err(perr(line, "expected `act <h> : <images…>`")),
                        };
                        let h = h
                            .parse()
                            .map_err(|_| perr(line, format!("bad element index `{h}`")))?;
                        actions.push((h, nums(line, img)?));
                    }
                    _ => return Err(perr(line, "`act` outside a `semidirect` recipe")),
                },
                "family" | "perm" | "table" | "product" | "semidirect" => {
                    if p.recipe.is_some() {
                        return Err(perr(
                            line,
                            format!("group `{}` already has a recipe", p.name),
                        ));
                    }
                    let recipe = match head {
                        "family" => match rest {
                            [f, n] => {
                                let family = Family::parse(f)
                                    .ok_or_else(|| perr(line, format!("unknown family `{f}`")))?;
                                let n = one_num(line, &[n], "family parameter")?;
                                Recipe::Family { family, n }
                            }
                            _ => return Err(perr(line, "expected `family <name> <n>`")),
                        },
                        "perm" => {
                            let degree = one_num(line, rest, "degree")?;
                            if degree == 0 {
                                return Err(perr(line, "degree must be positive"));
                            }
                            Recipe::Permutation {
                                degree,
                                generators: Vec::new(),
                            }
                        }
                        "table" => {
                            let n = one_num(line, rest, "table size")?;
                            if n == 0 {
                                return Err(perr(line, "table size must be positive"));
                            }
                            p.rows_left = n;
                            Recipe::Table { rows: Vec::new() }
                        }
                        _ => {
                            let [a, b] = rest else {
                                return Err(perr(line, format!("expected `{head} <name> <name>`")));
                            };
                            for r in [a, b] {
                                if !(self.catalog.get(r).is_some() || self.prior.get(r).is_some()) {
                                    return Err(Error::UnresolvedReference {
                                        name: r.to_string(),
                                        line,
                                    });
                                }
                            }
                            if head == "product" {
                                Recipe::Product {
                                    left: a.to_string(),
                                    right: b.to_string(),
                                }
                            } else {
                                Recipe::Semidirect {
                                    normal: a.to_string(),
                                    acting: b.to_string(),
                                    actions: Vec::new(),
                                }
                            }
                        }
                    };
                    p.recipe = Some(recipe);
                }
                other => return Err(perr(line, format!("unknown directive `{other}`"))),
            }
        }
        if let Some(p) = pending {
            return Err(perr(
                p.line,
                format!("group `{}` is not closed by `end`", p.name),
            ));
        }
        Ok(self.catalog)
    }

    fn finish_recipe(recipe: &Recipe, line: usize) -> Result<()> {
        match recipe {
            Recipe::Table { rows } if rows.iter().any(|r| r.len() != rows.len()) => {
                Err(perr(line, "table rows must have exactly n entries"))
            }
            _ => Ok(()),
        }
    }
}

/// The bundled catalog, parsed.
pub fn bundled_catalog() -> Catalog {
    parse_catalog(BUNDLED_CATALOG).expect("bundled catalog parses")
}
