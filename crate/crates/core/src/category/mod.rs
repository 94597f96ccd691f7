//! Finite categories given by explicit composition tables.
//!
//! A [`FinCategory`] is immutable once built, and every constructor checks the
//! unit, associativity and endpoint laws, so holding one is proof of validity.
//! Cloning is cheap: the tables live behind an [`Arc`].

mod constructions;
mod functor;
mod structure;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use constructions::{monoid_to_category, poset_to_category, Poset};
pub use functor::{Functor, FunctorError};
pub use structure::EndomorphismReport;

pub type ObjectId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate object `{0}`")]
    DuplicateObject(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown object `{name}` ({context})")]
    UnknownObject { name: String, context: String },
    #[error("unknown arrow `{name}` ({context})")]
    UnknownArrow { name: String, context: String },
    #[error("object `{0}` has no identity")]
    MissingIdentity(String),
    #[error("identity of `{object}` is `{arrow}`, which is not an endomorphism of it")]
    IdentityNotEndo { object: String, arrow: String },
    #[error("compose[{position}]: pair ({g}, {f}) listed twice")]
    DuplicateComposite { position: usize, g: String, f: String },
    #[error("compose[{position}]: `{g}` ∘ `{f}` is not composable")]
    NotComposable { position: usize, g: String, f: String },
    #[error("composite `{g}` ∘ `{f}` is missing")]
    MissingComposite { g: String, f: String },
    #[error("`{g}` ∘ `{f}` = `{composite}` has the wrong endpoints")]
    EndpointViolation { g: String, f: String, composite: String },
    #[error("unit law fails: {identity} ∘ {arrow} = {result}")]
    LeftUnitViolation { identity: String, arrow: String, result: String },
    #[error("unit law fails: {arrow} ∘ {identity} = {result}")]
    RightUnitViolation { identity: String, arrow: String, result: String },
    #[error("associativity fails for ({h}, {g}, {f}): {left} vs {right}")]
    AssociativityViolation {
        h: String,
        g: String,
        f: String,
        left: String,
        right: String,
    },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("enumeration budget of {limit} exceeded")]
    BudgetExceeded { limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

/// The JSON file form of a category.
///
/// `compose` lists `[g, f, g∘f]` for every composable pair exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryData {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowData>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowData {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// Outcome of [`validate_category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationReport {
    Valid,
    /// The first violated law, with witnesses.
    Invalid(CategoryError),
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid)
    }
}

/// Checks category data against every law; reports the first failure.
pub fn validate_category(data: &CategoryData) -> ValidationReport {
    match FinCategory::from_data(data) {
        Ok(_) => ValidationReport::Valid,
        Err(e) => ValidationReport::Invalid(e),
    }
}

/// A directed multigraph with named edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Arrow>,
}

impl DirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Arrow>) -> Result<Self, CategoryError> {
        for e in &edges {
            for v in [e.src, e.tgt] {
                if v >= vertices.len() {
                    return Err(CategoryError::UnknownObject {
                        name: v.to_string(),
                        context: format!("endpoint of edge `{}`", e.name),
                    });
                }
            }
        }
        Ok(DirectedGraph { vertices, edges })
    }

    /// Graph on vertices `0..n` with edges given as `(src, tgt)` pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, CategoryError> {
        DirectedGraph::new(
            (0..n).map(|i| format!("v{i}")).collect(),
            edges
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| Arrow {
                    name: format!("e{k}"),
                    src: s,
                    tgt: t,
                })
                .collect(),
        )
    }

    /// `counts[a][b]` = number of edges `a → b`.
    pub fn edge_counts(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let mut counts = vec![vec![0u64; n]; n];
        for e in &self.edges {
            counts[e.src][e.tgt] += 1;
        }
        counts
    }

    /// Edges as a multiset of `(src, tgt)` pairs, for shape comparisons.
    pub fn shape(&self) -> Vec<(ObjectId, ObjectId)> {
        let mut s: Vec<_> = self.edges.iter().map(|e| (e.src, e.tgt)).collect();
        s.sort_unstable();
        s
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<ArrowId>,
    // g * |Arr| + f  ↦  g ∘ f
    compose: Vec<Option<ArrowId>>,
    // (a, b) ↦ arrows a → b, index a * |Ob| + b
    homs: Vec<Vec<ArrowId>>,
    // f ↦ all (g, h) with h ∘ g = f
    factorizations: Vec<Vec<(ArrowId, ArrowId)>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory(Arc<Inner>);

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.0.objects)
            .field("arrows", &self.0.arrows.iter().map(|a| &a.name).collect::<Vec<_>>())
            .finish()
    }
}

impl FinCategory {
    /// Builds and validates a category from index-based tables.
    ///
    /// `compose(g, f)` is only called for composable pairs (`tgt f = src g`).
    pub fn build<F>(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrowId>,
        mut compose: F,
    ) -> Result<Self, CategoryError>
    where
        F: FnMut(ArrowId, ArrowId) -> ArrowId,
    {
        let n_arr = arrows.len();
        let mut table = vec![None; n_arr * n_arr];
        for (g, ga) in arrows.iter().enumerate() {
            for (f, fa) in arrows.iter().enumerate() {
                if fa.tgt == ga.src {
                    let h = compose(g, f);
                    if h >= n_arr {
                        return Err(CategoryError::UnknownArrow {
                            name: h.to_string(),
                            context: format!("composite of `{}` and `{}`", ga.name, fa.name),
                        });
                    }
                    table[g * n_arr + f] = Some(h);
                }
            }
        }
        Self::from_table(objects, arrows, identities, table)
    }

    fn from_table(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrowId>,
        compose: Vec<Option<ArrowId>>,
    ) -> Result<Self, CategoryError> {
        let n_ob = objects.len();
        let n_arr = arrows.len();
        check_unique(&objects, CategoryError::DuplicateObject)?;
        check_unique(
            &arrows.iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
            CategoryError::DuplicateArrow,
        )?;
        for a in &arrows {
            for v in [a.src, a.tgt] {
                if v >= n_ob {
                    return Err(CategoryError::UnknownObject {
                        name: v.to_string(),
                        context: format!("endpoint of arrow `{}`", a.name),
                    });
                }
            }
        }
        if identities.len() != n_ob {
            return Err(CategoryError::MalformedInput(format!(
                "{} identities for {} objects",
                identities.len(),
                n_ob
            )));
        }
        for (ob, &id) in identities.iter().enumerate() {
            if id >= n_arr || arrows[id].src != ob || arrows[id].tgt != ob {
                return Err(CategoryError::IdentityNotEndo {
                    object: objects[ob].clone(),
                    arrow: arrows.get(id).map(|a| a.name.clone()).unwrap_or_default(),
                });
            }
        }

        let name = |a: ArrowId| arrows[a].name.clone();
        for (g, ga) in arrows.iter().enumerate() {
            for (f, fa) in arrows.iter().enumerate() {
                if fa.tgt != ga.src {
                    continue;
                }
                let h = compose[g * n_arr + f].ok_or_else(|| CategoryError::MissingComposite {
                    g: name(g),
                    f: name(f),
                })?;
                if arrows[h].src != fa.src || arrows[h].tgt != ga.tgt {
                    return Err(CategoryError::EndpointViolation {
                        g: name(g),
                        f: name(f),
                        composite: name(h),
                    });
                }
            }
        }
        for (f, fa) in arrows.iter().enumerate() {
            let left = identities[fa.tgt];
            let r = compose[left * n_arr + f].expect("checked above");
            if r != f {
                return Err(CategoryError::LeftUnitViolation {
                    identity: name(left),
                    arrow: name(f),
                    result: name(r),
                });
            }
            let right = identities[fa.src];
            let r = compose[f * n_arr + right].expect("checked above");
            if r != f {
                return Err(CategoryError::RightUnitViolation {
                    identity: name(right),
                    arrow: name(f),
                    result: name(r),
                });
            }
        }

        let mut homs = vec![Vec::new(); n_ob * n_ob];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.src * n_ob + a.tgt].push(i);
        }
        // associativity, walking f : a → b, g : b → c, h : c → d via hom lists
        for f in 0..n_arr {
            let b = arrows[f].tgt;
            for c in 0..n_ob {
                for &g in &homs[b * n_ob + c] {
                    let gf = compose[g * n_arr + f].expect("checked above");
                    for d in 0..n_ob {
                        for &h in &homs[c * n_ob + d] {
                            let hg = compose[h * n_arr + g].expect("checked above");
                            let left = compose[h * n_arr + gf].expect("checked above");
                            let right = compose[hg * n_arr + f].expect("checked above");
                            if left != right {
                                return Err(CategoryError::AssociativityViolation {
                                    h: name(h),
                                    g: name(g),
                                    f: name(f),
                                    left: name(left),
                                    right: name(right),
                                });
                            }
                        }
                    }
                }
            }
        }

        let mut factorizations = vec![Vec::new(); n_arr];
        for g in 0..n_arr {
            for h in 0..n_arr {
                if let Some(f) = compose[h * n_arr + g] {
                    factorizations[f].push((g, h));
                }
            }
        }

        Ok(FinCategory(Arc::new(Inner {
            objects,
            arrows,
            identities,
            compose,
            homs,
            factorizations,
        })))
    }

    /// Parses the JSON form, with positional error messages.
    pub fn from_data(data: &CategoryData) -> Result<Self, CategoryError> {
        let objects = data.objects.clone();
        check_unique(&objects, CategoryError::DuplicateObject)?;
        let ob_index: HashMap<&str, ObjectId> =
            objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let lookup_ob = |name: &str, context: String| {
            ob_index
                .get(name)
                .copied()
                .ok_or_else(|| CategoryError::UnknownObject {
                    name: name.to_string(),
                    context,
                })
        };

        let mut arrows = Vec::with_capacity(data.arrows.len());
        for (k, a) in data.arrows.iter().enumerate() {
            arrows.push(Arrow {
                name: a.name.clone(),
                src: lookup_ob(&a.src, format!("arrows[{k}].src"))?,
                tgt: lookup_ob(&a.tgt, format!("arrows[{k}].tgt"))?,
            });
        }
        check_unique(
            &arrows.iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
            CategoryError::DuplicateArrow,
        )?;
        let arr_index: HashMap<&str, ArrowId> = data
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.as_str(), i))
            .collect();
        let lookup_arr = |name: &str, context: String| {
            arr_index
                .get(name)
                .copied()
                .ok_or_else(|| CategoryError::UnknownArrow {
                    name: name.to_string(),
                    context,
                })
        };

        for key in data.identities.keys() {
            lookup_ob(key, "identities".into())?;
        }
        let mut identities = Vec::with_capacity(objects.len());
        for o in &objects {
            let arrow = data
                .identities
                .get(o)
                .ok_or_else(|| CategoryError::MissingIdentity(o.clone()))?;
            identities.push(lookup_arr(arrow, format!("identities[{o}]"))?);
        }

        let n_arr = arrows.len();
        let mut table = vec![None; n_arr * n_arr];
        for (k, [g, f, h]) in data.compose.iter().enumerate() {
            let gi = lookup_arr(g, format!("compose[{k}][0]"))?;
            let fi = lookup_arr(f, format!("compose[{k}][1]"))?;
            let hi = lookup_arr(h, format!("compose[{k}][2]"))?;
            if arrows[fi].tgt != arrows[gi].src {
                return Err(CategoryError::NotComposable {
                    position: k,
                    g: g.clone(),
                    f: f.clone(),
                });
            }
            let slot = &mut table[gi * n_arr + fi];
            if slot.is_some() {
                return Err(CategoryError::DuplicateComposite {
                    position: k,
                    g: g.clone(),
                    f: f.clone(),
                });
            }
            *slot = Some(hi);
        }
        Self::from_table(objects, arrows, identities, table)
    }

    pub fn to_data(&self) -> CategoryData {
        let name = |o: ObjectId| self.0.objects[o].clone();
        CategoryData {
            objects: self.0.objects.clone(),
            arrows: self
                .0
                .arrows
                .iter()
                .map(|a| ArrowData {
                    name: a.name.clone(),
                    src: name(a.src),
                    tgt: name(a.tgt),
                })
                .collect(),
            identities: self
                .0
                .identities
                .iter()
                .enumerate()
                .map(|(o, &a)| (name(o), self.0.arrows[a].name.clone()))
                .collect(),
            compose: self
                .composable_pairs()
                .map(|(g, f)| {
                    [
                        self.arrow_name(g).to_string(),
                        self.arrow_name(f).to_string(),
                        self.arrow_name(self.compose(g, f).expect("composable")).to_string(),
                    ]
                })
                .collect(),
        }
    }

    pub fn num_objects(&self) -> usize {
        self.0.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.0.arrows.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.0.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.0.arrows
    }

    pub fn object_name(&self, o: ObjectId) -> &str {
        &self.0.objects[o]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.0.arrows[a].name
    }

    pub fn object_index(&self, name: &str) -> Option<ObjectId> {
        self.0.objects.iter().position(|o| o == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<ArrowId> {
        self.0.arrows.iter().position(|a| a.name == name)
    }

    pub fn src(&self, a: ArrowId) -> ObjectId {
        self.0.arrows[a].src
    }

    pub fn tgt(&self, a: ArrowId) -> ObjectId {
        self.0.arrows[a].tgt
    }

    pub fn identity(&self, o: ObjectId) -> ArrowId {
        self.0.identities[o]
    }

    pub fn identities(&self) -> &[ArrowId] {
        &self.0.identities
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        let arrow = &self.0.arrows[a];
        arrow.src == arrow.tgt && self.0.identities[arrow.src] == a
    }

    /// `g ∘ f`, or `None` when `tgt f ≠ src g`.
    pub fn compose(&self, g: ArrowId, f: ArrowId) -> Option<ArrowId> {
        self.0.compose[g * self.num_arrows() + f]
    }

    pub fn hom(&self, a: ObjectId, b: ObjectId) -> &[ArrowId] {
        &self.0.homs[a * self.num_objects() + b]
    }

    /// All `(g, h)` with `h ∘ g = f`.
    pub fn factorizations(&self, f: ArrowId) -> &[(ArrowId, ArrowId)] {
        &self.0.factorizations[f]
    }

    /// All `(g, f)` with `g ∘ f` defined.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (ArrowId, ArrowId)> + '_ {
        let n = self.num_arrows();
        (0..n).flat_map(move |g| {
            (0..n).filter_map(move |f| self.compose(g, f).map(|_| (g, f)))
        })
    }

    pub fn underlying_graph(&self) -> DirectedGraph {
        DirectedGraph {
            vertices: self.0.objects.clone(),
            edges: self.0.arrows.clone(),
        }
    }

    /// Whether some arrow `a → b` exists.
    pub fn has_arrow(&self, a: ObjectId, b: ObjectId) -> bool {
        !self.hom(a, b).is_empty()
    }
}

/// Underlying directed graph: all arrows, identities included.
pub fn underlying_graph(c: &FinCategory) -> DirectedGraph {
    c.underlying_graph()
}

fn check_unique(names: &[String], err: fn(String) -> CategoryError) -> Result<(), CategoryError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(err(n.clone()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn data(json: &str) -> CategoryData {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn terminal_is_valid() {
        let d = data(r#"{"objects":["*"],"arrows":[{"name":"1","src":"*","tgt":"*"}],
            "identities":{"*":"1"},"compose":[["1","1","1"]]}"#);
        assert!(validate_category(&d).is_valid());
        let c = FinCategory::from_data(&d).unwrap();
        let g = c.underlying_graph();
        assert_eq!((g.vertices.len(), g.edges.len()), (1, 1));
        assert_eq!(c.to_data(), d);
    }

    #[test]
    fn endpoint_violation_is_reported() {
        // x : a → b, y : b → b non-identity, and y ∘ x declared as 1_b
        let d = data(r#"{"objects":["a","b"],
            "arrows":[{"name":"1a","src":"a","tgt":"a"},{"name":"1b","src":"b","tgt":"b"},
                      {"name":"x","src":"a","tgt":"b"}],
            "identities":{"a":"1a","b":"1b"},
            "compose":[["1a","1a","1a"],["1b","1b","1b"],["x","1a","x"],["1b","x","1b"]]}"#);
        match validate_category(&d) {
            ValidationReport::Invalid(CategoryError::EndpointViolation { g, f, composite }) => {
                assert_eq!((g.as_str(), f.as_str(), composite.as_str()), ("1b", "x", "1b"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parser_positional_errors() {
        let dup = data(r#"{"objects":["*"],"arrows":[{"name":"1","src":"*","tgt":"*"}],
            "identities":{"*":"1"},"compose":[["1","1","1"],["1","1","1"]]}"#);
        assert!(matches!(
            FinCategory::from_data(&dup),
            Err(CategoryError::DuplicateComposite { position: 1, .. })
        ));
        let missing = data(r#"{"objects":["*"],"arrows":[{"name":"1","src":"*","tgt":"*"}],
            "identities":{"*":"1"},"compose":[]}"#);
        assert!(matches!(
            FinCategory::from_data(&missing),
            Err(CategoryError::MissingComposite { .. })
        ));
        let unknown = data(r#"{"objects":["*"],"arrows":[{"name":"1","src":"*","tgt":"q"}],
            "identities":{"*":"1"},"compose":[]}"#);
        match FinCategory::from_data(&unknown) {
            Err(CategoryError::UnknownObject { context, .. }) => assert_eq!(context, "arrows[0].tgt"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn associativity_violation_detected() {
        // monoid {1, x, y} with a non-associative table: x·x = y, x·y = 1, y·x = x, y·y = y
        let names = ["1", "x", "y"];
        let table = [[0, 1, 2], [1, 2, 0], [2, 1, 2]];
        let arrows = names
            .iter()
            .map(|n| Arrow { name: n.to_string(), src: 0, tgt: 0 })
            .collect();
        let r = FinCategory::build(vec!["*".into()], arrows, vec![0], |g, f| table[g][f]);
        assert!(matches!(r, Err(CategoryError::AssociativityViolation { .. })));
    }

    #[test]
    fn retract_example_closes_with_five_arrows() {
        let c = corpus::retract_example();
        assert_eq!(c.num_arrows(), 5);
        assert_eq!(c.underlying_graph().edges.len(), 5);
        assert_eq!(c.underlying_graph().vertices.len(), 2);
        assert_eq!(c.hom(0, 0).len(), 2);
        assert!(validate_category(&c.to_data()).is_valid());
    }

    #[test]
    fn factorization_lists() {
        let c = corpus::chain(2);
        let f = c.hom(0, 1)[0];
        // 1_b ∘ f and f ∘ 1_a
        assert_eq!(c.factorizations(f).len(), 2);
    }
}
