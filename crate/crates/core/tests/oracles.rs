//! Library results against brute force on raw image vectors.
//!
//! Nothing here goes through `FiniteGroup` indices: groups are closed as
//! `BTreeSet<Vec<usize>>`, products are `x` then `y`, and the star sets are
//! built straight from their definitions.

use std::collections::BTreeSet;
use std::sync::Arc;

use starcomm::corpus::builtin;
use starcomm::star::{gamma_star_set, star_subgroup, StarVariant};
use starcomm::structure::{derived_series, fitting_height, lower_central_series, normal_subgroups};
use starcomm::sylow_hall::sylow_subgroup;
use starcomm::FiniteGroup;

type P = Vec<usize>;
type Set = BTreeSet<P>;

fn then(x: &P, y: &P) -> P {
    x.iter().map(|&i| y[i]).collect()
}

fn inv(x: &P) -> P {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn comm(a: &P, b: &P) -> P {
    then(&then(&then(&inv(a), &inv(b)), a), b)
}

fn id(n: usize) -> P {
    (0..n).collect()
}

fn order(x: &P) -> u64 {
    let mut y = x.clone();
    let mut k = 1;
    while y != id(x.len()) {
        y = then(&y, x);
        k += 1;
    }
    k
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn close(n: usize, gens: &Set) -> Set {
    let mut out: Set = [id(n)].into();
    loop {
        let mut grew = false;
        for x in out.clone() {
            for g in gens {
                grew |= out.insert(then(&x, g));
            }
        }
        if !grew {
            return out;
        }
    }
}

fn powers(set: &Set) -> Set {
    let mut out = Set::new();
    for s in set {
        let mut x = s.clone();
        for _ in 0..order(s) {
            out.insert(x.clone());
            x = then(&x, s);
        }
    }
    out
}

fn sweep(left: &Set, right: &Set) -> Set {
    let mut out = Set::new();
    for a in left {
        for b in right {
            if gcd(order(a), order(b)) == 1 {
                out.insert(comm(a, b));
            }
        }
    }
    out
}

fn gamma_sets(all: &Set, k_max: usize) -> Vec<Set> {
    let mut levels = vec![Set::new(), all.clone()];
    for _ in 2..=k_max {
        let next = sweep(&powers(levels.last().unwrap()), all);
        levels.push(next);
    }
    levels
}

fn delta_sets(all: &Set, k_max: usize) -> Vec<Set> {
    let mut levels = vec![all.clone()];
    for _ in 1..=k_max {
        let base = powers(levels.last().unwrap());
        let next = sweep(&base, &base);
        levels.push(next);
    }
    levels
}

fn raw(g: &FiniteGroup) -> Set {
    g.elements().iter().map(|p| p.images()).collect()
}

fn lib_set(g: &FiniteGroup, set: impl Iterator<Item = usize>) -> Set {
    set.map(|a| g.element(a).images()).collect()
}

fn group(name: &str) -> Arc<FiniteGroup> {
    builtin(name, 2000).unwrap()
}

const SMALL: &[&str] = &[
    "cyclic:6",
    "dihedral:4",
    "quaternion8",
    "symmetric:3",
    "dihedral:5",
    "alternating:4",
    "frobenius21",
    "sl23",
    "symmetric:4",
    "product(symmetric:3,cyclic:2)",
];

#[test]
fn closure_matches_oracle() {
    for name in SMALL.iter().chain(&["alternating:5"]) {
        let g = group(name);
        let gens: Set = g.generators().iter().map(|p| p.images()).collect();
        assert_eq!(close(g.degree(), &gens), raw(&g), "{name}");
    }
}

#[test]
fn star_sets_match_definitions() {
    for name in SMALL {
        let g = group(name);
        let all = raw(&g);
        let gammas = gamma_sets(&all, 4);
        let deltas = delta_sets(&all, 4);
        for k in 1..=4 {
            let lib = gamma_star_set(&g, k).unwrap();
            assert_eq!(lib_set(&g, lib.commutators.iter()), gammas[k], "{name} gamma {k}");
            let gen = close(g.degree(), &gammas[k]);
            assert_eq!(star_subgroup(&g, StarVariant::Gamma, k).unwrap().order(), gen.len());
        }
        for k in 0..=4 {
            let lib = starcomm::star::delta_star_set(&g, k).unwrap();
            assert_eq!(lib_set(&g, lib.commutators.iter()), deltas[k], "{name} delta {k}");
            let gen = close(g.degree(), &deltas[k]);
            assert_eq!(star_subgroup(&g, StarVariant::Delta, k).unwrap().order(), gen.len());
        }
    }
}

#[test]
fn sym4_delta_tower_and_sym3_gamma() {
    let s4 = group("symmetric:4");
    let deltas = delta_sets(&raw(&s4), 4);
    let orders: Vec<usize> = deltas.iter().map(|s| close(4, s).len()).collect();
    assert_eq!(orders, vec![24, 12, 4, 1, 1]);
    let s3 = group("symmetric:3");
    let gammas = gamma_sets(&raw(&s3), 5);
    for k in 2..=5 {
        assert_eq!(close(3, &gammas[k]).len(), 3);
    }
}

#[test]
fn alt5_every_element_is_a_coprime_commutator() {
    let g = group("alternating:5");
    let all = raw(&g);
    assert_eq!(sweep(&all, &all).len(), 60);
    assert_eq!(gamma_star_set(&g, 2).unwrap().size(), 60);
}

fn commutator_closure(n: usize, a: &Set, b: &Set) -> Set {
    let mut values = Set::new();
    for x in a {
        for y in b {
            values.insert(comm(x, y));
        }
    }
    close(n, &values)
}

#[test]
fn series_match_oracle() {
    for name in SMALL.iter().chain(&["alternating:5"]) {
        let g = group(name);
        let all = raw(&g);
        let mut lcs = vec![all.clone()];
        let mut der = vec![all.clone()];
        loop {
            let next = commutator_closure(g.degree(), lcs.last().unwrap(), &all);
            if &next == lcs.last().unwrap() {
                break;
            }
            lcs.push(next);
        }
        loop {
            let last = der.last().unwrap();
            let next = commutator_closure(g.degree(), last, last);
            if &next == last {
                break;
            }
            der.push(next);
        }
        let lib_lcs: Vec<Set> =
            lower_central_series(&g).terms.iter().map(|t| lib_set(&g, t.elements())).collect();
        let lib_der: Vec<Set> =
            derived_series(&g).terms.iter().map(|t| lib_set(&g, t.elements())).collect();
        // the library may repeat the stable term once
        assert_eq!(&lib_lcs[..lcs.len()], &lcs[..], "{name}");
        assert!(lib_lcs[lcs.len()..].iter().all(|t| t == lcs.last().unwrap()));
        assert_eq!(&lib_der[..der.len()], &der[..], "{name}");
        assert!(lib_der[der.len()..].iter().all(|t| t == der.last().unwrap()));
    }
}

/// Normal subgroups: every union of classes containing 1 that is closed.
fn normal_oracle(g: &FiniteGroup) -> BTreeSet<Set> {
    let all = raw(g);
    let mut classes: Vec<Set> = Vec::new();
    let mut seen = Set::new();
    for x in &all {
        if seen.contains(x) {
            continue;
        }
        let class: Set = all.iter().map(|y| then(&then(&inv(y), x), y)).collect();
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    let nontrivial: Vec<&Set> = classes.iter().filter(|c| !c.contains(&id(g.degree()))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << nontrivial.len()) {
        let mut s: Set = [id(g.degree())].into();
        for (i, c) in nontrivial.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.extend(c.iter().cloned());
            }
        }
        if s.iter().all(|x| s.iter().all(|y| s.contains(&then(x, y)))) {
            out.insert(s);
        }
    }
    out
}

#[test]
fn normal_subgroups_match_oracle() {
    for name in SMALL {
        let g = group(name);
        let lattice = normal_subgroups(&g);
        assert!(lattice.exhaustive);
        let lib: BTreeSet<Set> = lattice.subgroups.iter().map(|n| lib_set(&g, n.elements())).collect();
        assert_eq!(lib.len(), lattice.subgroups.len());
        assert_eq!(lib, normal_oracle(&g), "{name}");
    }
}

fn is_nilpotent_oracle(n: usize, h: &Set) -> bool {
    let mut term = h.clone();
    loop {
        let next = commutator_closure(n, &term, h);
        if next == term {
            return next.len() == 1;
        }
        term = next;
    }
}

/// Fitting height by peeling: F(G) is the largest nilpotent normal subgroup,
/// found among the normal subgroups; repeat on the preimage chain.
fn fitting_height_oracle(g: &FiniteGroup) -> Option<usize> {
    let all = raw(g);
    let normals = normal_oracle(g);
    let n = g.degree();
    let mut current: Set = [id(n)].into();
    let mut height = 0;
    while current != all {
        // largest normal L ⊇ current with L/current nilpotent
        let next = normals
            .iter()
            .filter(|l| current.is_subset(l))
            .filter(|l| {
                // L/current nilpotent iff the lower central series of L reaches into current
                let mut term = (*l).clone();
                loop {
                    let c = commutator_closure(n, &term, l);
                    if c.is_subset(&current) {
                        return true;
                    }
                    if c == term {
                        return false;
                    }
                    term = c;
                }
            })
            .max_by_key(|l| l.len())
            .unwrap()
            .clone();
        if next == current {
            return None;
        }
        current = next;
        height += 1;
    }
    Some(height)
}

#[test]
fn fitting_heights_match_oracle() {
    for name in SMALL.iter().chain(&["alternating:5"]) {
        let g = group(name);
        assert_eq!(fitting_height(&g), fitting_height_oracle(&g), "{name}");
    }
    assert_eq!(fitting_height(&group("symmetric:4")), Some(3));
    assert_eq!(fitting_height(&group("frobenius21")), Some(2));
    assert_eq!(fitting_height(&group("alternating:5")), None);
    assert!(is_nilpotent_oracle(8, &raw(&group("quaternion8"))));
}

#[test]
fn sylow_orders_and_shape() {
    for name in SMALL.iter().chain(&["alternating:5"]) {
        let g = group(name);
        for p in [2u64, 3, 5, 7] {
            let s = sylow_subgroup(&g, p).unwrap();
            let mut part = 1;
            let mut m = g.order();
            while m % p as usize == 0 {
                part *= p as usize;
                m /= p as usize;
            }
            assert_eq!(s.order(), part, "{name} p={p}");
            assert!(lib_set(&g, s.elements()).iter().all(|x| (0..10).any(|e| p.pow(e) == order(x))));
        }
    }
}
