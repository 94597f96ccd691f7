//! Standard ways of producing new finite categories from old ones.

use std::collections::HashMap;

use super::{Arrow, ArrowId, CategoryError, DirectedGraph, FinCategory, Functor, ObjectId};

/// A finite partial order given by its full `≤` relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<bool>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(names: Vec<String>, leq: Vec<bool>) -> Result<Self, CategoryError> {
        let n = names.len();
        if leq.len() != n * n {
            return Err(CategoryError::MalformedInput(format!(
                "relation has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let at = |i: usize, j: usize| leq[i * n + j];
        for i in 0..n {
            if !at(i, i) {
                return Err(CategoryError::MalformedInput(format!(
                    "relation is not reflexive at `{}`",
                    names[i]
                )));
            }
            for j in 0..n {
                if i != j && at(i, j) && at(j, i) {
                    return Err(CategoryError::MalformedInput(format!(
                        "relation is not antisymmetric at `{}`, `{}`",
                        names[i], names[j]
                    )));
                }
                for k in 0..n {
                    if at(i, j) && at(j, k) && !at(i, k) {
                        return Err(CategoryError::MalformedInput(format!(
                            "relation is not transitive at `{}`, `{}`, `{}`",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        Ok(Poset { names, leq })
    }

    pub fn from_fn<F: Fn(usize, usize) -> bool>(names: Vec<String>, leq: F) -> Result<Self, CategoryError> {
        let n = names.len();
        let rel = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        Poset::new(names, rel)
    }

    /// Reflexive-transitive closure of the given strict relations.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, CategoryError> {
        let n = names.len();
        let mut rel = vec![false; n * n];
        for i in 0..n {
            rel[i * n + i] = true;
        }
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(CategoryError::MalformedInput(format!("cover ({i}, {j}) out of range")));
            }
            rel[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i * n + k] {
                    for j in 0..n {
                        if rel[k * n + j] {
                            rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Poset::new(names, rel)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn to_category(&self) -> FinCategory {
        poset_like(&self.names, |i, j| self.leq(i, j))
    }
}

/// One arrow `i → j` per related pair; arrow names are `i->j`.
pub fn poset_to_category(poset: &Poset) -> FinCategory {
    poset.to_category()
}

/// The one-object category of a finite monoid.
///
/// `table[x][y]` is the product `x·y`, read as the composite `x ∘ y`. The unit
/// is located in the table; its arrow becomes the identity.
pub fn monoid_to_category(names: Vec<String>, table: &[Vec<usize>]) -> Result<FinCategory, CategoryError> {
    let n = names.len();
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(CategoryError::MalformedInput("monoid table is not square".into()));
    }
    if table.iter().flatten().any(|&x| x >= n) {
        return Err(CategoryError::MalformedInput("monoid table entry out of range".into()));
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| CategoryError::MalformedInput("monoid table has no unit".into()))?;
    let arrows = names
        .iter()
        .map(|m| Arrow {
            name: m.clone(),
            src: 0,
            tgt: 0,
        })
        .collect();
    FinCategory::build(vec!["*".into()], arrows, vec![unit], |g, f| table[g][f]).map_err(|e| match e {
        CategoryError::AssociativityViolation { .. } => {
            CategoryError::MalformedInput(format!("monoid table is not associative: {e}"))
        }
        other => other,
    })
}

impl FinCategory {
    pub fn terminal() -> Self {
        FinCategory::discrete(&["*".to_string()])
    }

    pub fn empty() -> Self {
        FinCategory::discrete(&[])
    }

    /// Only identity arrows.
    pub fn discrete(names: &[String]) -> Self {
        let arrows = names
            .iter()
            .enumerate()
            .map(|(i, n)| Arrow {
                name: format!("1_{n}"),
                src: i,
                tgt: i,
            })
            .collect();
        FinCategory::build(names.to_vec(), arrows, (0..names.len()).collect(), |g, _| g)
            .expect("discrete category")
    }

    /// Exactly one arrow per ordered pair of objects.
    pub fn codiscrete(names: &[String]) -> Self {
        poset_like(names, |_, _| true)
    }

    /// `C(A)` with the identity-on-objects functor `A → C(A)`.
    pub fn codiscrete_completion(&self) -> (FinCategory, Functor) {
        let target = FinCategory::codiscrete(self.objects());
        let n = self.num_objects();
        let arrow_map = self
            .arrows()
            .iter()
            .map(|a| a.src * n + a.tgt)
            .collect();
        let f = Functor::new(self.clone(), target.clone(), (0..n).collect(), arrow_map)
            .expect("collapse is a functor");
        (target, f)
    }

    /// `P(A)`: one arrow `a → b` iff `A(a, b)` is nonempty.
    pub fn preorder_reflection(&self) -> (FinCategory, Functor) {
        let target = poset_like(self.objects(), |a, b| self.has_arrow(a, b));
        let arrow_map = self
            .arrows()
            .iter()
            .map(|a| {
                target
                    .hom(a.src, a.tgt)
                    .first()
                    .copied()
                    .expect("nonempty hom")
            })
            .collect();
        let f = Functor::new(
            self.clone(),
            target.clone(),
            (0..self.num_objects()).collect(),
            arrow_map,
        )
        .expect("reflection is a functor");
        (target, f)
    }

    /// Cartesian product; objects and arrows are indexed `i * |other| + j`.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (n2, m2) = (other.num_objects(), other.num_arrows());
        let objects = self
            .objects()
            .iter()
            .flat_map(|a| other.objects().iter().map(move |b| format!("({a},{b})")))
            .collect();
        let mut arrows = Vec::with_capacity(self.num_arrows() * m2);
        for f in self.arrows() {
            for g in other.arrows() {
                arrows.push(Arrow {
                    name: format!("({},{})", f.name, g.name),
                    src: f.src * n2 + g.src,
                    tgt: f.tgt * n2 + g.tgt,
                });
            }
        }
        let identities = (0..self.num_objects())
            .flat_map(|a| (0..n2).map(move |b| (a, b)))
            .map(|(a, b)| self.identity(a) * m2 + other.identity(b))
            .collect();
        FinCategory::build(objects, arrows, identities, |g, f| {
            let left = self.compose(g / m2, f / m2).expect("componentwise composable");
            let right = other.compose(g % m2, f % m2).expect("componentwise composable");
            left * m2 + right
        })
        .expect("product of categories")
    }

    /// Disjoint union; the second summand's indices are shifted.
    pub fn coproduct(&self, other: &FinCategory) -> FinCategory {
        let (n1, m1) = (self.num_objects(), self.num_arrows());
        let objects = self
            .objects()
            .iter()
            .map(|o| format!("{o}.0"))
            .chain(other.objects().iter().map(|o| format!("{o}.1")))
            .collect();
        let arrows = self
            .arrows()
            .iter()
            .map(|a| Arrow {
                name: format!("{}.0", a.name),
                src: a.src,
                tgt: a.tgt,
            })
            .chain(other.arrows().iter().map(|a| Arrow {
                name: format!("{}.1", a.name),
                src: a.src + n1,
                tgt: a.tgt + n1,
            }))
            .collect();
        let identities = self
            .identities()
            .iter()
            .copied()
            .chain(other.identities().iter().map(|&i| i + m1))
            .collect();
        FinCategory::build(objects, arrows, identities, |g, f| {
            if g < m1 {
                self.compose(g, f).expect("composable")
            } else {
                other.compose(g - m1, f - m1).expect("composable") + m1
            }
        })
        .expect("coproduct of categories")
    }

    /// Objects `c` with maps `a → c → b`, in object order.
    pub fn patch_objects(&self, a: ObjectId, b: ObjectId) -> Vec<ObjectId> {
        (0..self.num_objects())
            .filter(|&c| self.has_arrow(a, c) && self.has_arrow(c, b))
            .collect()
    }

    /// The patch `⌈a, b⌉`: the full subcategory on [`FinCategory::patch_objects`].
    pub fn patch(&self, a: ObjectId, b: ObjectId) -> Result<FinCategory, CategoryError> {
        for o in [a, b] {
            if o >= self.num_objects() {
                return Err(CategoryError::UnknownObject {
                    name: o.to_string(),
                    context: "patch endpoint".into(),
                });
            }
        }
        Ok(self.full_subcategory(&self.patch_objects(a, b)))
    }

    /// Patch by object names.
    pub fn patch_named(&self, a: &str, b: &str) -> Result<FinCategory, CategoryError> {
        let find = |n: &str| {
            self.object_index(n).ok_or_else(|| CategoryError::UnknownObject {
                name: n.to_string(),
                context: "patch endpoint".into(),
            })
        };
        self.patch(find(a)?, find(b)?)
    }

    /// Full subcategory on the listed objects (kept in the given order).
    pub fn full_subcategory(&self, objects: &[ObjectId]) -> FinCategory {
        let arrows: Vec<ArrowId> = objects
            .iter()
            .flat_map(|&a| objects.iter().flat_map(move |&b| self.hom(a, b).iter().copied()))
            .collect();
        self.subcategory(objects, &arrows)
            .expect("full subcategories are closed")
    }

    /// The subcategory on the given objects and arrows.
    ///
    /// Identities of the listed objects are added automatically; fails if an
    /// arrow's endpoint is missing or a composite leaves the arrow set.
    pub fn subcategory(&self, objects: &[ObjectId], arrows: &[ArrowId]) -> Result<FinCategory, CategoryError> {
        let mut ob_pos = vec![None; self.num_objects()];
        for (i, &o) in objects.iter().enumerate() {
            ob_pos[o] = Some(i);
        }
        let mut keep: Vec<ArrowId> = Vec::new();
        let mut arr_pos = vec![None; self.num_arrows()];
        let mut push = |a: ArrowId, keep: &mut Vec<ArrowId>| {
            if arr_pos[a].is_none() {
                arr_pos[a] = Some(keep.len());
                keep.push(a);
            }
        };
        for &o in objects {
            push(self.identity(o), &mut keep);
        }
        for &a in arrows {
            push(a, &mut keep);
        }
        let mut new_arrows = Vec::with_capacity(keep.len());
        for &a in &keep {
            let (s, t) = (self.src(a), self.tgt(a));
            match (ob_pos[s], ob_pos[t]) {
                (Some(s), Some(t)) => new_arrows.push(Arrow {
                    name: self.arrow_name(a).to_string(),
                    src: s,
                    tgt: t,
                }),
                _ => {
                    return Err(CategoryError::MalformedInput(format!(
                        "arrow `{}` has an endpoint outside the subcategory",
                        self.arrow_name(a)
                    )))
                }
            }
        }
        for &g in &keep {
            for &f in &keep {
                if let Some(h) = self.compose(g, f) {
                    if arr_pos[h].is_none() {
                        return Err(CategoryError::MalformedInput(format!(
                            "composite `{}` ∘ `{}` leaves the subcategory",
                            self.arrow_name(g),
                            self.arrow_name(f)
                        )));
                    }
                }
            }
        }
        let identities = objects
            .iter()
            .map(|&o| arr_pos[self.identity(o)].expect("identity kept"))
            .collect();
        FinCategory::build(
            objects.iter().map(|&o| self.object_name(o).to_string()).collect(),
            new_arrows,
            identities,
            |g, f| arr_pos[self.compose(keep[g], keep[f]).expect("composable")].expect("closed"),
        )
    }

    /// Inclusion functor of a subcategory built by [`FinCategory::subcategory`].
    pub fn inclusion(&self, sub: &FinCategory) -> Result<Functor, CategoryError> {
        let objects = sub
            .objects()
            .iter()
            .map(|n| self.object_index(n))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CategoryError::MalformedInput("not a subcategory".into()))?;
        let arrows = sub
            .arrows()
            .iter()
            .map(|a| self.arrow_index(&a.name))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CategoryError::MalformedInput("not a subcategory".into()))?;
        Functor::new(sub.clone(), self.clone(), objects, arrows)
            .map_err(|e| CategoryError::MalformedInput(e.to_string()))
    }

    /// The coslice `x/A` and its projection to `A`.
    ///
    /// Objects are arrows `u : x → c`; arrows `u → v` are the `g` with
    /// `g ∘ u = v`.
    pub fn coslice(&self, x: ObjectId) -> (FinCategory, Functor) {
        let objs: Vec<ArrowId> = (0..self.num_arrows()).filter(|&u| self.src(u) == x).collect();
        let mut pos = vec![usize::MAX; self.num_arrows()];
        for (i, &u) in objs.iter().enumerate() {
            pos[u] = i;
        }
        let mut arrows = Vec::new();
        let mut base = Vec::new();
        let mut index = HashMap::new();
        for (i, &u) in objs.iter().enumerate() {
            for g in 0..self.num_arrows() {
                if let Some(v) = self.compose(g, u) {
                    index.insert((i, g), arrows.len());
                    arrows.push(Arrow {
                        name: format!("{}/{}", self.arrow_name(g), self.arrow_name(u)),
                        src: i,
                        tgt: pos[v],
                    });
                    base.push(g);
                }
            }
        }
        let identities = objs
            .iter()
            .enumerate()
            .map(|(i, &u)| index[&(i, self.identity(self.tgt(u)))])
            .collect();
        let srcs: Vec<usize> = arrows.iter().map(|a| a.src).collect();
        let slice = FinCategory::build(
            objs.iter().map(|&u| self.arrow_name(u).to_string()).collect(),
            arrows,
            identities,
            |g, f| {
                let h = self.compose(base[g], base[f]).expect("composable");
                index[&(srcs[f], h)]
            },
        )
        .expect("coslice category");
        let object_map = objs.iter().map(|&u| self.tgt(u)).collect();
        let proj = Functor::new(slice.clone(), self.clone(), object_map, base)
            .expect("coslice projection");
        (slice, proj)
    }

    /// The free category on an acyclic graph.
    ///
    /// Arrows are paths, named by their edge sequence; identities are `1_v`.
    pub fn free_on_acyclic(graph: &DirectedGraph) -> Result<FinCategory, CategoryError> {
        let n = graph.vertices.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (k, e) in graph.edges.iter().enumerate() {
            out[e.src].push(k);
        }
        // paths by DFS; a path longer than n edges proves a cycle
        let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        for v in 0..n {
            paths.push((v, v, Vec::new()));
            let mut stack = vec![(v, Vec::new())];
            while let Some((at, path)) = stack.pop() {
                for &e in &out[at] {
                    let mut p: Vec<usize> = path.clone();
                    p.push(e);
                    if p.len() > n {
                        return Err(CategoryError::MalformedInput("graph has a cycle".into()));
                    }
                    let t = graph.edges[e].tgt;
                    paths.push((v, t, p.clone()));
                    stack.push((t, p));
                }
            }
        }
        paths.sort_by(|a, b| (a.2.len(), &a.2, a.0).cmp(&(b.2.len(), &b.2, b.0)));
        let index: HashMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .enumerate()
            .map(|(i, (s, _, p))| ((*s, p.clone()), i))
            .collect();
        let mut identities = vec![0; n];
        let arrows = paths
            .iter()
            .enumerate()
            .map(|(i, (s, t, p))| {
                let name = if p.is_empty() {
                    identities[*s] = i;
                    format!("1_{}", graph.vertices[*s])
                } else {
                    p.iter()
                        .map(|&e| graph.edges[e].name.as_str())
                        .collect::<Vec<_>>()
                        .join(".")
                };
                Arrow { name, src: *s, tgt: *t }
            })
            .collect();
        FinCategory::build(graph.vertices.clone(), arrows, identities, |g, f| {
            let mut p = paths[f].2.clone();
            p.extend_from_slice(&paths[g].2);
            index[&(paths[f].0, p)]
        })
    }

    /// Opposite category; arrow and object indices are unchanged.
    pub fn opposite(&self) -> FinCategory {
        let arrows = self
            .arrows()
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                src: a.tgt,
                tgt: a.src,
            })
            .collect();
        FinCategory::build(self.objects().to_vec(), arrows, self.identities().to_vec(), |g, f| {
            self.compose(f, g).expect("composable")
        })
        .expect("opposite category")
    }
}

fn poset_like<F: Fn(usize, usize) -> bool>(names: &[String], rel: F) -> FinCategory {
    let n = names.len();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    let mut identities = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            if rel(i, j) {
                if i == j {
                    identities[i] = arrows.len();
                }
                index.insert((i, j), arrows.len());
                arrows.push(Arrow {
                    name: if i == j {
                        format!("1_{}", names[i])
                    } else {
                        format!("{}->{}", names[i], names[j])
                    },
                    src: i,
                    tgt: j,
                });
            }
        }
    }
    let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.src, a.tgt)).collect();
    FinCategory::build(names.to_vec(), arrows, identities, |g, f| index[&(ends[f].0, ends[g].1)])
        .expect("transitive reflexive relation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn divisors_of_six() {
        let c = corpus::divisor_poset(6);
        assert_eq!(c.num_objects(), 4);
        assert_eq!(c.num_arrows(), 9);
        let p = c.patch_named("2", "6").unwrap();
        assert_eq!(p.objects(), &names(&["2", "6"]));
    }

    #[test]
    fn monoids() {
        let trivial = monoid_to_category(names(&["e"]), &[vec![0]]).unwrap();
        assert_eq!((trivial.num_objects(), trivial.num_arrows()), (1, 1));
        let c2 = corpus::cyclic_group(2);
        assert_eq!((c2.num_objects(), c2.num_arrows()), (1, 2));
        assert!(matches!(
            monoid_to_category(names(&["a", "b"]), &[vec![1, 1], vec![1, 1]]),
            Err(CategoryError::MalformedInput(_))
        ));
    }

    #[test]
    fn invalid_poset_rejected() {
        let r = Poset::from_fn(names(&["a", "b"]), |i, j| i == j || (i, j) == (0, 1) || (i, j) == (1, 0));
        assert!(matches!(r, Err(CategoryError::MalformedInput(_))));
        let r = Poset::new(names(&["a"]), vec![false]);
        assert!(r.is_err());
    }

    #[test]
    fn codiscrete_and_reflection() {
        let two = FinCategory::discrete(&names(&["a", "b"]));
        let (c, f) = two.codiscrete_completion();
        assert_eq!(c.num_arrows(), 4);
        assert_eq!(f.object_map(), &[0, 1]);
        let (t, _) = FinCategory::terminal().codiscrete_completion();
        assert_eq!(t.num_arrows(), 1);

        let (p, _) = corpus::cyclic_group(3).preorder_reflection();
        assert_eq!(p.num_arrows(), 1);

        let retract = corpus::retract_example();
        let (c, collapse) = retract.codiscrete_completion();
        assert_eq!(c.num_arrows(), 4);
        let e = retract.arrow_index("is").unwrap();
        assert_eq!(collapse.map_arrow(e), c.identity(0));
        let (p, _) = retract.preorder_reflection();
        assert_eq!(p.num_arrows(), 4);

        let chain = corpus::chain(3);
        let (p, _) = chain.preorder_reflection();
        assert_eq!(p.num_arrows(), chain.num_arrows());
    }

    #[test]
    fn products_and_coproducts() {
        let a = corpus::chain(2);
        let square = a.product(&a);
        assert_eq!(square.num_objects(), 4);
        assert_eq!(square.num_arrows(), 9);
        let same = a.product(&FinCategory::terminal());
        assert_eq!((same.num_objects(), same.num_arrows()), (2, 3));
        let b = corpus::cyclic_group(2);
        assert_eq!(a.coproduct(&b).num_arrows(), a.num_arrows() + b.num_arrows());
    }

    #[test]
    fn chain_patches() {
        let c = corpus::chain(3);
        assert_eq!(c.patch(0, 2).unwrap().num_objects(), 3);
        assert_eq!(c.patch(2, 0).unwrap().num_objects(), 0);
        assert!(matches!(c.patch(0, 7), Err(CategoryError::UnknownObject { .. })));
    }

    #[test]
    fn coslice_of_chain() {
        let c = corpus::chain(3);
        let (s, p) = c.coslice(1);
        // objects: 1→1, 1→2
        assert_eq!(s.num_objects(), 2);
        assert_eq!(s.num_arrows(), 3);
        assert_eq!(p.object_map(), &[1, 2]);
    }

    #[test]
    fn free_category_on_dag() {
        let g = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = FinCategory::free_on_acyclic(&g).unwrap();
        // 3 identities, 3 edges, 1 path of length two
        assert_eq!(f.num_arrows(), 7);
        assert_eq!(f.hom(0, 2).len(), 2);
        let cyclic = DirectedGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert!(FinCategory::free_on_acyclic(&cyclic).is_err());
    }

    #[test]
    fn opposite_swaps_homs() {
        let c = corpus::retract_example();
        let op = c.opposite();
        assert_eq!(op.hom(0, 1).len(), c.hom(1, 0).len());
        assert_eq!(op.opposite(), c);
    }
}
