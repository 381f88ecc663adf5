#![allow(dead_code)]

use std::collections::BTreeSet;

use hhkit_core::combinat::{Arrow, Poset, Quiver, QuiverPresentation};
use hhkit_core::FieldSpec;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn arrow(name: &str, src: &str, tgt: &str) -> Arrow {
    Arrow { name: name.into(), src: src.into(), tgt: tgt.into() }
}

pub fn presentation(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]], field: FieldSpec) -> QuiverPresentation {
    let q = Quiver::new(labels(vertices), arrows.iter().map(|(n, s, t)| arrow(n, s, t)).collect()).unwrap();
    let rels = relations.iter().map(|r| labels(r)).collect();
    QuiverPresentation::new(q, rels, field).unwrap()
}

/// The cyclic triangle with the relation αβ = 0.
pub fn triangle(field: FieldSpec) -> QuiverPresentation {
    presentation(&["1", "2", "3"], &[("α", "1", "2"), ("β", "2", "3"), ("γ", "3", "1")], &[&["α", "β"]], field)
}

pub fn circle() -> Poset {
    poset_from(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
}

pub fn poset_from(elements: &[&str], covers: &[(&str, &str)]) -> Poset {
    let covers: Vec<(String, String)> = covers.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    Poset::from_covers(labels(elements), &covers).unwrap()
}

/// Quiver presentations with finite-dimensional monomial quotients.
pub fn quiver_catalogue(field: FieldSpec) -> Vec<(&'static str, QuiverPresentation)> {
    vec![
        ("A2", presentation(&["1", "2"], &[("a", "1", "2")], &[], field)),
        ("A3", presentation(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[], field)),
        ("A3 with ab = 0", presentation(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[&["a", "b"]], field)),
        ("triangle", triangle(field)),
        (
            "triangle with ab = bc = 0",
            presentation(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")], &[&["a", "b"], &["b", "c"]], field),
        ),
        ("Kronecker", presentation(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[], field)),
        ("loop x^2 = 0", presentation(&["1"], &[("x", "1", "1")], &[&["x", "x"]], field)),
        (
            "loop with a tail",
            presentation(&["1", "2"], &[("x", "1", "1"), ("a", "1", "2")], &[&["x", "x"], &["x", "a"]], field),
        ),
        (
            "two-cycle radical square zero",
            presentation(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"], &["b", "a"]], field),
        ),
        (
            "A4 with bc = 0",
            presentation(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")], &[&["b", "c"]], field),
        ),
        (
            "diamond with one zero path",
            presentation(
                &["1", "2", "3", "4"],
                &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
                &[&["a", "b"]],
                field,
            ),
        ),
        ("crown n = 2, l = 3", QuiverPresentation::truncated_crown(2, 3, field).unwrap()),
        ("crown n = 3, l = 2", QuiverPresentation::truncated_crown(3, 2, field).unwrap()),
        (
            "star into 2",
            presentation(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")], &[], field),
        ),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Every poset with `1..=max_n` elements, one per isomorphism class,
/// as strict relations `i < j` on `0..n`.
pub fn all_posets(max_n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let rel: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p).collect();
            let has = |a: usize, b: usize| rel.contains(&(a, b));
            let transitive = rel.iter().all(|&(a, b)| rel.iter().filter(|&&(c, _)| c == b).all(|&(_, d)| has(a, d)));
            if !transitive {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|p| {
                    let mut r: Vec<(usize, usize)> = rel.iter().map(|&(a, b)| (p[a], p[b])).collect();
                    r.sort_unstable();
                    r
                })
                .min()
                .unwrap();
            if seen.insert(canonical) {
                out.push((n, rel));
            }
        }
    }
    out
}

pub fn poset_of(n: usize, rel: &[(usize, usize)]) -> Poset {
    let elements: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let covers: Vec<(String, String)> = rel.iter().map(|&(a, b)| (elements[a].clone(), elements[b].clone())).collect();
    Poset::from_covers(elements, &covers).unwrap()
}

pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let rel: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(density)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let rel: Vec<(usize, usize)> = rel.iter().map(|&(a, b)| (order[a], order[b])).collect();
    poset_of(n, &rel)
}

/// A random quiver on `n` vertices in which every path of length `l` is a
/// relation, plus a few random relations of length two.
pub fn random_presentation(rng: &mut impl Rng, field: FieldSpec) -> QuiverPresentation {
    let n = rng.gen_range(1..=3);
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let count = rng.gen_range(1..=4);
    let arrows: Vec<Arrow> = (0..count)
        .map(|k| {
            let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
            Arrow { name: format!("a{k}"), src: vertices[s].clone(), tgt: vertices[t].clone() }
        })
        .collect();
    let l = rng.gen_range(2..=3);
    let mut paths: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    let arrows = &arrows;
    for _ in 1..l {
        paths = paths
            .iter()
            .flat_map(|p| {
                let last = &arrows[*p.last().unwrap()];
                (0..arrows.len()).filter(move |&b| arrows[b].src == last.tgt).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    let mut relations: Vec<Vec<String>> = paths.iter().map(|p| p.iter().map(|&a| arrows[a].name.clone()).collect()).collect();
    for a in 0..arrows.len() {
        for b in 0..arrows.len() {
            if arrows[a].tgt == arrows[b].src && rng.gen_bool(0.3) {
                relations.push(vec![arrows[a].name.clone(), arrows[b].name.clone()]);
            }
        }
    }
    QuiverPresentation::new(Quiver::new(vertices, arrows.clone()).unwrap(), relations, field).unwrap()
}
