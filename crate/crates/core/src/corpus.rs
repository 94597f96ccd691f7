//! Named example categories and seeded random generators.
//!
//! Everything here is deterministic given a seed, so property checks that
//! draw from the corpus are reproducible.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{
    monoid_to_category, Arrow, ArrowId, CategoryError, DirectedGraph, FinCategory, Functor, ObjectId, Poset,
};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Objects `a`, `b`; arrows `s : a → b`, `i : b → a` with `s ∘ i = 1_b`, and
/// the idempotent `is = i ∘ s`.
pub fn retract_example() -> FinCategory {
    let arrows = vec![
        Arrow { name: "1_a".into(), src: 0, tgt: 0 },
        Arrow { name: "1_b".into(), src: 1, tgt: 1 },
        Arrow { name: "s".into(), src: 0, tgt: 1 },
        Arrow { name: "i".into(), src: 1, tgt: 0 },
        Arrow { name: "is".into(), src: 0, tgt: 0 },
    ];
    let (id_a, id_b, s, i, e) = (0, 1, 2, 3, 4);
    FinCategory::build(vec!["a".into(), "b".into()], arrows, vec![id_a, id_b], |g, f| {
        match (g, f) {
            (g, f) if g == id_a || g == id_b => f,
            (g, f) if f == id_a || f == id_b => g,
            (2, 3) => id_b,
            (3, 2) => e,
            (2, 4) => s,
            (4, 3) => i,
            (4, 4) => e,
            _ => unreachable!("not composable: {g} after {f}"),
        }
    })
    .expect("retract example is a category")
}

/// The chain `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FinCategory {
    Poset::from_fn(names(n), |i, j| i <= j).expect("chain").to_category()
}

/// The chain as a poset.
pub fn chain_poset(n: usize) -> Poset {
    Poset::from_fn(names(n), |i, j| i <= j).expect("chain")
}

/// Divisors of `n` under divisibility, in increasing order.
pub fn divisor_poset(n: u64) -> FinCategory {
    let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    Poset::from_fn(divs.iter().map(|d| d.to_string()).collect(), |i, j| divs[j].is_multiple_of(divs[i]))
        .expect("divisibility")
        .to_category()
}

/// Subsets of a `k`-element set under inclusion, indexed by bitmask.
pub fn boolean_lattice(k: usize) -> FinCategory {
    let n = 1usize << k;
    Poset::from_fn(names(n), |i, j| i & j == i).expect("boolean lattice").to_category()
}

/// The cyclic group `ℤ/n` as a one-object category.
pub fn cyclic_group(n: usize) -> FinCategory {
    let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    monoid_to_category((0..n).map(|k| format!("g{k}")).collect(), &table).expect("cyclic group")
}

/// `{1, e}` with `e·e = e`.
pub fn idempotent_monoid() -> FinCategory {
    monoid_to_category(vec!["1".into(), "e".into()], &[vec![0, 1], vec![1, 1]]).expect("monoid")
}

/// The commutative square `(a < b) × (a < b)`.
pub fn square() -> FinCategory {
    chain(2).product(&chain(2))
}

/// A random poset on `n` elements: each pair `i < j` is a cover with
/// probability `p`, then closed transitively.
pub fn random_poset(rng: &mut CorpusRng, n: usize, p: f64) -> Poset {
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                covers.push((i, j));
            }
        }
    }
    // shuffle labels so that the natural order is not always a linear extension
    let mut perm: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        perm.swap(k, rng.gen_range(0..=k));
    }
    let covers: Vec<_> = covers.into_iter().map(|(i, j)| (perm[i], perm[j])).collect();
    Poset::from_covers(names(n), &covers).expect("closure of an acyclic relation")
}

/// A concrete category: objects are small finite sets, arrows are functions
/// generated by random maps and closed under composition. Returns `None` when
/// the closure exceeds `max_arrows`.
pub fn random_concrete(
    rng: &mut CorpusRng,
    n_objects: usize,
    n_generators: usize,
    max_arrows: usize,
) -> Option<FinCategory> {
    let sizes: Vec<usize> = (0..n_objects).map(|_| rng.gen_range(1..=3)).collect();
    let mut gens = Vec::new();
    for _ in 0..n_generators {
        let s = rng.gen_range(0..n_objects);
        let t = rng.gen_range(0..n_objects);
        let func: Vec<u8> = (0..sizes[s]).map(|_| rng.gen_range(0..sizes[t] as u8)).collect();
        gens.push((s, t, func));
    }
    concrete_closure(&sizes, &gens, max_arrows)
}

/// Closes a set of functions between finite sets under composition.
pub fn concrete_closure(
    sizes: &[usize],
    generators: &[(ObjectId, ObjectId, Vec<u8>)],
    max_arrows: usize,
) -> Option<FinCategory> {
    type Key = (ObjectId, ObjectId, Vec<u8>);
    let mut arrows: Vec<Key> = Vec::new();
    let mut index: HashMap<Key, ArrowId> = HashMap::new();
    let mut add = |k: Key, arrows: &mut Vec<Key>| -> bool {
        if index.contains_key(&k) {
            return false;
        }
        index.insert(k.clone(), arrows.len());
        arrows.push(k);
        true
    };
    for (o, &n) in sizes.iter().enumerate() {
        add((o, o, (0..n as u8).collect()), &mut arrows);
    }
    for g in generators {
        add(g.clone(), &mut arrows);
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = arrows.clone();
        for (gs, gt, gf) in &snapshot {
            for (fs, ft, ff) in &snapshot {
                if ft != gs {
                    continue;
                }
                let h: Vec<u8> = ff.iter().map(|&x| gf[x as usize]).collect();
                if add((*fs, *gt, h), &mut arrows) {
                    changed = true;
                    if arrows.len() > max_arrows {
                        return None;
                    }
                }
            }
        }
    }
    let lookup: HashMap<Key, ArrowId> = arrows.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let n_ob = sizes.len();
    let objects = (0..n_ob).map(|o| format!("X{o}")).collect();
    let named = arrows
        .iter()
        .enumerate()
        .map(|(i, (s, t, _))| Arrow {
            name: if i < n_ob { format!("1_X{i}") } else { format!("f{i}") },
            src: *s,
            tgt: *t,
        })
        .collect();
    FinCategory::build(objects, named, (0..n_ob).collect(), |g, f| {
        let (_, gt, gf) = &arrows[g];
        let (fs, _, ff) = &arrows[f];
        let h: Vec<u8> = ff.iter().map(|&x| gf[x as usize]).collect();
        lookup[&(*fs, *gt, h)]
    })
    .ok()
}

/// A random small finite category, drawn from several families.
pub fn random_category(rng: &mut CorpusRng) -> FinCategory {
    loop {
        let pick = rng.gen_range(0..10);
        let c = match pick {
            0..=3 => {
                let n = rng.gen_range(1..=6);
                Some(random_poset(rng, n, 0.4).to_category())
            }
            4..=7 => {
                let n_ob = rng.gen_range(1..=3);
                let n_gen = rng.gen_range(1..=3);
                random_concrete(rng, n_ob, n_gen, 14)
            }
            8 => {
                let k = rng.gen_range(1..=3);
                let a = random_poset(rng, k, 0.5).to_category();
                let b = random_concrete(rng, 1, 1, 4);
                b.map(|b| a.product(&b))
            }
            _ => {
                let k = rng.gen_range(1..=3);
                let a = random_poset(rng, k, 0.5).to_category();
                let b = random_concrete(rng, 2, 2, 8);
                b.map(|b| a.coproduct(&b))
            }
        };
        if let Some(c) = c {
            if c.num_objects() > 0 && c.num_arrows() <= 40 {
                return c;
            }
        }
    }
}

/// Every composition law on a fixed graph.
///
/// `loops_and_edges` lists the non-identity arrows as `(name, src, tgt)`;
/// identities are added per object. All tables satisfying the endpoint and
/// unit laws are searched and the associative ones returned, up to `limit`.
pub fn all_compositions(
    objects: &[&str],
    non_identities: &[(&str, ObjectId, ObjectId)],
    limit: usize,
) -> Result<Vec<FinCategory>, CategoryError> {
    let n_ob = objects.len();
    let mut arrows: Vec<Arrow> = objects
        .iter()
        .enumerate()
        .map(|(o, n)| Arrow { name: format!("1_{n}"), src: o, tgt: o })
        .collect();
    arrows.extend(non_identities.iter().map(|&(n, s, t)| Arrow { name: n.into(), src: s, tgt: t }));
    let n_arr = arrows.len();

    let mut pairs = Vec::new();
    let mut options = Vec::new();
    for g in n_ob..n_arr {
        for f in n_ob..n_arr {
            if arrows[f].tgt == arrows[g].src {
                let (s, t) = (arrows[f].src, arrows[g].tgt);
                let choices: Vec<ArrowId> = (0..n_arr)
                    .filter(|&h| arrows[h].src == s && arrows[h].tgt == t)
                    .collect();
                if choices.is_empty() {
                    return Ok(Vec::new());
                }
                pairs.push((g, f));
                options.push(choices);
            }
        }
    }
    let total: u128 = options.iter().map(|o| o.len() as u128).product();
    if total > 5_000_000 {
        return Err(CategoryError::BudgetExceeded { limit });
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; pairs.len()];
    loop {
        let table: HashMap<(ArrowId, ArrowId), ArrowId> = pairs
            .iter()
            .zip(&choice)
            .zip(&options)
            .map(|((&p, &c), opts)| (p, opts[c]))
            .collect();
        let r = FinCategory::build(objects.iter().map(|s| s.to_string()).collect(), arrows.clone(), (0..n_ob).collect(), |g, f| {
            if g < n_ob {
                f
            } else if f < n_ob {
                g
            } else {
                table[&(g, f)]
            }
        });
        if let Ok(c) = r {
            if out.len() == limit {
                return Err(CategoryError::BudgetExceeded { limit });
            }
            out.push(c);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Hasse diagram of a poset as a graph (covers only).
pub fn hasse_graph(p: &Poset) -> DirectedGraph {
    let n = p.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && p.leq(i, j) && !(0..n).any(|k| k != i && k != j && p.leq(i, k) && p.leq(k, j)) {
                edges.push(Arrow {
                    name: format!("{}->{}", p.names()[i], p.names()[j]),
                    src: i,
                    tgt: j,
                });
            }
        }
    }
    DirectedGraph::new(p.names().to_vec(), edges).expect("valid graph")
}

/// The evaluation functor from the free category on the Hasse diagram.
pub fn hasse_evaluation(p: &Poset) -> Functor {
    let target = p.to_category();
    let free = FinCategory::free_on_acyclic(&hasse_graph(p)).expect("Hasse diagrams are acyclic");
    let arrow_map = free
        .arrows()
        .iter()
        .map(|a| target.hom(a.src, a.tgt)[0])
        .collect();
    Functor::new(free.clone(), target, (0..p.len()).collect(), arrow_map).expect("evaluation functor")
}

/// The unique functor to the terminal category.
pub fn to_terminal(c: &FinCategory) -> Functor {
    Functor::new(c.clone(), FinCategory::terminal(), vec![0; c.num_objects()], vec![0; c.num_arrows()])
        .expect("terminal functor")
}

/// First projection of a product.
pub fn first_projection(a: &FinCategory, b: &FinCategory) -> Functor {
    let p = a.product(b);
    let (n2, m2) = (b.num_objects(), b.num_arrows());
    Functor::new(
        p,
        a.clone(),
        (0..a.num_objects() * n2).map(|i| i / n2).collect(),
        (0..a.num_arrows() * m2).map(|i| i / m2).collect(),
    )
    .expect("projection")
}

/// Inclusion of the first summand of a coproduct.
pub fn first_injection(a: &FinCategory, b: &FinCategory) -> Functor {
    Functor::new(
        a.clone(),
        a.coproduct(b),
        (0..a.num_objects()).collect(),
        (0..a.num_arrows()).collect(),
    )
    .expect("injection")
}

/// The discrete category on the objects of `c`, included into `c`.
pub fn discrete_inclusion(c: &FinCategory) -> Functor {
    let d = FinCategory::discrete(c.objects());
    Functor::new(d, c.clone(), (0..c.num_objects()).collect(), c.identities().to_vec()).expect("inclusion")
}

/// Group homomorphism `ℤ/n → ℤ/m`, `k ↦ k·step`.
pub fn cyclic_hom(n: usize, m: usize, step: usize) -> Option<Functor> {
    Functor::new(
        cyclic_group(n),
        cyclic_group(m),
        vec![0],
        (0..n).map(|k| (k * step) % m).collect(),
    )
    .ok()
}

/// A labelled corpus of functors mixing bijective-on-objects, ULF, both, and
/// neither.
pub fn functor_corpus() -> Vec<(String, Functor)> {
    let mut out: Vec<(String, Functor)> = Vec::new();
    let bases: Vec<(String, FinCategory)> = vec![
        ("chain3".into(), chain(3)),
        ("div12".into(), divisor_poset(12)),
        ("square".into(), square()),
        ("retract".into(), retract_example()),
        ("C2".into(), cyclic_group(2)),
        ("C3".into(), cyclic_group(3)),
        ("idem".into(), idempotent_monoid()),
        ("bool2".into(), boolean_lattice(2)),
    ];
    for (name, c) in &bases {
        out.push((format!("id({name})"), Functor::identity(c)));
        out.push((format!("codiscrete({name})"), c.codiscrete_completion().1));
        out.push((format!("reflection({name})"), c.preorder_reflection().1));
        out.push((format!("discrete->{name}"), discrete_inclusion(c)));
        out.push((format!("{name}->1"), to_terminal(c)));
        for x in 0..c.num_objects().min(2) {
            out.push((format!("coslice({name},{x})"), c.coslice(x).1));
        }
        out.push((format!("inj({name},C2)"), first_injection(c, &cyclic_group(2))));
        out.push((format!("proj({name},chain2)"), first_projection(c, &chain(2))));
        out.push((format!("proj({name},1)"), first_projection(c, &FinCategory::terminal())));
    }
    for (label, p) in [("chain3", chain_poset(3)), ("div12", divisor_poset_order(12))] {
        out.push((format!("hasse({label})"), hasse_evaluation(&p)));
    }
    for (n, m, step) in [(4, 2, 1), (2, 4, 2), (6, 3, 1), (3, 6, 2)] {
        if let Some(f) = cyclic_hom(n, m, step) {
            out.push((format!("Z{n}->Z{m}"), f));
        }
    }
    out
}

/// Divisibility order on the divisors of `n`.
pub fn divisor_poset_order(n: u64) -> Poset {
    let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    Poset::from_fn(divs.iter().map(|d| d.to_string()).collect(), |i, j| divs[j].is_multiple_of(divs[i]))
        .expect("divisibility")
}

/// Named categories used across the test suites.
pub fn named_categories() -> Vec<(String, FinCategory)> {
    vec![
        ("terminal".into(), FinCategory::terminal()),
        ("discrete3".into(), FinCategory::discrete(&names(3))),
        ("chain4".into(), chain(4)),
        ("square".into(), square()),
        ("div6".into(), divisor_poset(6)),
        ("div12".into(), divisor_poset(12)),
        ("bool3".into(), boolean_lattice(3)),
        ("retract".into(), retract_example()),
        ("C2".into(), cyclic_group(2)),
        ("C3".into(), cyclic_group(3)),
        ("idem".into(), idempotent_monoid()),
        ("codiscrete2".into(), FinCategory::codiscrete(&names(2))),
    ]
}

/// The named categories followed by `count` seeded random ones.
pub fn category_corpus(seed: u64, count: usize) -> Vec<(String, FinCategory)> {
    let mut out = named_categories();
    let mut r = rng(seed);
    for k in 0..count {
        out.push((format!("random#{k}"), random_category(&mut r)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a: Vec<_> = (0..5).map(|_| ()).scan(rng(7), |r, _| Some(random_category(r))).collect();
        let b: Vec<_> = (0..5).map(|_| ()).scan(rng(7), |r, _| Some(random_category(r))).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn three_element_monoids() {
        // one object with two non-identity loops
        let cats = all_compositions(&["*"], &[("x", 0, 0), ("y", 0, 0)], 100).unwrap();
        assert!(!cats.is_empty());
        // the cyclic group of order 3 is among them
        assert!(cats.iter().any(|c| c.endomorphism_report().nontrivial_isos.len() == 2));
    }

    #[test]
    fn concrete_closure_contains_retract() {
        // a = {0,1}, b = {0}; s : a → b, i : b → a picks 0
        let c = concrete_closure(&[2, 1], &[(0, 1, vec![0, 0]), (1, 0, vec![0])], 20).unwrap();
        assert_eq!(c.num_arrows(), 5);
        assert_eq!(c.endomorphism_report().nontrivial_idempotents.len(), 1);
    }

    #[test]
    fn functor_corpus_builds() {
        assert!(functor_corpus().len() > 40);
    }
}
