use std::collections::BTreeSet;

use crate::arith::{coprime, gcd, is_power_of, p_prime_part, prime_divisors};
use crate::group::FiniteGroup;
use crate::quotient::QuotientMap;
use crate::set::ElemSet;
use crate::star::{delta_star_set, gamma_star_set, lift_commutator_from_quotient, star_set, star_subgroup, StarVariant};
use crate::structure::{
    fitting_height, gamma_infinity, is_metanilpotent, is_simple_nonabelian, is_soluble,
    normal_subgroups,
};
use crate::subgroup::Subgroup;
use crate::sylow_hall::{
    commutator_subgroup, commutator_with_element, hall_prime_complement, iterated_commutator_subgroup,
    sylow_subgroup,
};

use super::{CheckId, CheckReport, CorpusEntry};

fn cycles(g: &FiniteGroup, a: usize) -> String {
    g.element(a).to_cycle_string()
}

/// `[N, H, H] = [N, H]` for `H` acting by conjugation on a normal `N` of coprime order.
pub fn check_coprime_action(entry: &CorpusEntry, n: &Subgroup, h: &Subgroup) -> CheckReport {
    let report = CheckReport::new(CheckId::CoprimeAction, entry)
        .metric("n_order", n.order() as u64)
        .metric("h_order", h.order() as u64);
    if !n.same_parent(h) || !n.is_normalized_by(h.generators().iter().copied()) {
        return report.skip("H does not normalize N");
    }
    if !coprime(n.order() as u64, h.order() as u64) {
        return report.skip("|N| and |H| not coprime");
    }
    let nh = commutator_subgroup(n, h).expect("same parent");
    let nhh = commutator_subgroup(&nh, h).expect("same parent");
    report
        .metric("subgroup_order", nh.order() as u64)
        .verdict(nh == nhh, || format!("|[N,H]|={} |[N,H,H]|={}", nh.order(), nhh.order()))
}

/// `[N, A]` is generated by the subgroups `[N, b₁, …, b_k]`, `bᵢ ∈ B`, for a
/// normal subset `B` generating `A`.
pub fn check_normal_subset_generation(
    entry: &CorpusEntry,
    n: &Subgroup,
    a: &Subgroup,
    b: &ElemSet,
    k: usize,
) -> CheckReport {
    let g = &entry.group;
    let report = CheckReport::new(CheckId::NormalSubsetGeneration, entry)
        .param("k", k)
        .metric("b_size", b.len() as u64);
    if k == 0 {
        return report.skip("k must be at least 1");
    }
    if !n.same_parent(a) || !n.is_normalized_by(a.generators().iter().copied()) {
        return report.skip("A does not normalize N");
    }
    if !coprime(n.order() as u64, a.order() as u64) {
        return report.skip("|A| and |N| not coprime");
    }
    if !b.is_subset(a.members()) {
        return report.skip("B is not contained in A");
    }
    let closed = b.iter().all(|x| a.generators().iter().all(|&y| b.contains(g.conj(x, y))));
    if !closed {
        return report.skip("B is not a normal subset of A");
    }
    if g.subgroup_generated(b.iter()) != *a {
        return report.skip("B does not generate A");
    }

    let lhs = commutator_subgroup(n, a).expect("same parent");
    let mut layer: Vec<Subgroup> = vec![n.clone()];
    for _ in 0..k {
        let mut next: Vec<Subgroup> = Vec::new();
        let mut seen: BTreeSet<ElemSet> = BTreeSet::new();
        for sub in &layer {
            for x in b.iter() {
                let c = commutator_with_element(sub, x);
                if seen.insert(c.members().clone()) {
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    let rhs = layer
        .iter()
        .fold(g.trivial_subgroup(), |acc, s| acc.join(s).expect("same parent"));
    report
        .metric("subgroup_order", lhs.order() as u64)
        .verdict(lhs == rhs, || format!("|[N,A]|={} |generated|={}", lhs.order(), rhs.order()))
}

/// `δₖ*(δ₁*(G)) = δₖ₊₁*(G)`.
pub fn check_delta_recursion(entry: &CorpusEntry, k: usize) -> CheckReport {
    let g = &entry.group;
    let d1 = star_subgroup(g, StarVariant::Delta, 1).expect("valid level");
    let inner = star_subgroup(d1.as_group(), StarVariant::Delta, k).expect("valid level");
    let lhs = d1.lift(&inner).expect("materialized subgroup");
    let rhs = star_subgroup(g, StarVariant::Delta, k + 1).expect("valid level");
    let m = delta_star_set(g, k + 1).expect("valid level").size();
    CheckReport::new(CheckId::DeltaRecursion, entry)
        .param("k", k)
        .metric("m", m as u64)
        .metric("subgroup_order", rhs.order() as u64)
        .verdict(lhs == rhs, || {
            format!("|delta*_k(delta*_1(G))|={} |delta*_(k+1)(G)|={}", lhs.order(), rhs.order())
        })
}

/// `P = [P, H]` for `P` a Sylow p-subgroup of γ∞(G) and `H` a Hall p′-subgroup
/// of a metanilpotent `G`.
pub fn check_metanilpotent_ph(entry: &CorpusEntry, p: u64, seed: u64) -> CheckReport {
    let g = &entry.group;
    let report = CheckReport::new(CheckId::MetanilpotentPH, entry).param("p", p).param("seed", seed);
    if !is_soluble(g) {
        return report.skip("G insoluble");
    }
    if !is_metanilpotent(g) {
        return report.skip("G not metanilpotent");
    }
    let k = gamma_infinity(g);
    if !(k.order() as u64).is_multiple_of(p) {
        return report.skip("p does not divide |gamma_inf(G)|");
    }
    let p_sub = match sylow_subgroup(k.as_group(), p) {
        Ok(s) => k.lift(&s).expect("materialized subgroup"),
        Err(e) => return report.fail(format!("sylow search: {e}")),
    };
    let h = match hall_prime_complement(g, p, seed) {
        Ok(h) => h,
        Err(e) => return report.fail(format!("hall search: {e}")),
    };
    let ph = commutator_subgroup(&p_sub, &h).expect("same parent");
    report
        .metric("subgroup_order", p_sub.order() as u64)
        .metric("h_order", h.order() as u64)
        .verdict(ph == p_sub, || format!("|P|={} |[P,H]|={}", p_sub.order(), ph.order()))
}

/// `2^m` saturated at `u64::MAX`.
fn two_pow(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        1u64 << m
    }
}

/// `|[P,ᵢ A]| ≤ 2^m` with `m = |{[x, a₁, …, aᵢ]}|` for an abelian p-group `P`
/// normalized by a p′-group `A`. Whether equality holds is recorded, not asserted.
pub fn check_abelian_bound(entry: &CorpusEntry, p_sub: &Subgroup, a: &Subgroup, i: usize) -> CheckReport {
    let g = &entry.group;
    let report = CheckReport::new(CheckId::AbelianBound, entry).param("i", i);
    if i == 0 {
        return report.skip("i must be at least 1");
    }
    if !p_sub.same_parent(a) {
        return report.skip("P and A live in different groups");
    }
    let order = p_sub.order() as u64;
    let primes = prime_divisors(order);
    if primes.len() > 1 {
        return report.skip("P is not a p-group");
    }
    if !p_sub.is_abelian() {
        return report.skip("P is not abelian");
    }
    if gcd(order, a.order() as u64) != 1 {
        return report.skip("A is not a p'-group");
    }
    if !p_sub.is_normalized_by(a.generators().iter().copied()) {
        return report.skip("A does not normalize P");
    }

    let mut values = p_sub.members().clone();
    for _ in 0..i {
        let mut next = g.empty_set();
        for x in values.iter() {
            for y in a.elements() {
                next.insert(g.commutator(x, y));
            }
        }
        values = next;
    }
    let m = values.len();
    let sub = iterated_commutator_subgroup(p_sub, a, i).expect("same parent");
    let bound = two_pow(m);
    let size = sub.order() as u64;
    report
        .metric("m", m as u64)
        .metric("subgroup_order", size)
        .metric("two_pow_m", bound)
        .metric("equality", (size == bound) as u64)
        .verdict(size <= bound, || format!("|[P,_i A]|={size} exceeds 2^{m}"))
}

/// `P ∩ δₖ*(G)` is generated by the n-th powers of δₖ*-commutators that lie
/// in `P`, where `|G| = pᵃ n` with `p ∤ n`.
pub fn check_focal_delta(entry: &CorpusEntry, p: u64, k: usize) -> CheckReport {
    let g = &entry.group;
    let report = CheckReport::new(CheckId::FocalDelta, entry).param("p", p).param("k", k);
    if !is_soluble(g) {
        return report.skip("G insoluble");
    }
    if !(g.order() as u64).is_multiple_of(p) {
        return report.skip("p does not divide |G|");
    }
    let n = p_prime_part(g.order() as u64, p);
    let p_sub = match sylow_subgroup(g, p) {
        Ok(s) => s,
        Err(e) => return report.skip(e.to_string()),
    };
    let set = delta_star_set(g, k).expect("valid level");
    let lhs = p_sub.intersect(&set.subgroup()).expect("same parent");
    let powers: Vec<usize> =
        set.commutators.iter().map(|c| g.pow(c, n)).filter(|&x| p_sub.contains(x)).collect();
    let rhs = g.subgroup_generated(powers.iter().copied());
    report
        .metric("m", set.size() as u64)
        .metric("subgroup_order", lhs.order() as u64)
        .metric("n", n)
        .verdict(lhs == rhs, || {
            format!("|P cap delta*_k(G)|={} |<n-th powers in P>|={}", lhs.order(), rhs.order())
        })
}

/// If `P̄ ∩ L̄ = ⟨P̄ ∩ X̄⟩` in `G/N` then `P ∩ L = ⟨P ∩ X, P ∩ N⟩`.
pub fn check_focal_patch(
    entry: &CorpusEntry,
    p: u64,
    n: &Subgroup,
    l: &Subgroup,
    x: &ElemSet,
) -> CheckReport {
    let g = &entry.group;
    let report = CheckReport::new(CheckId::FocalPatch, entry).param("p", p);
    if !n.is_subgroup_of(l) || !n.is_normal() || !l.is_normal() {
        return report.skip("need N <= L, both normal");
    }
    if !g.is_normal_subset(x) {
        return report.skip("X is not a normal subset");
    }
    if !x.iter().all(|a| is_power_of(g.order_of(a), p)) {
        return report.skip("X contains non-p-elements");
    }
    let p_sub = match sylow_subgroup(g, p) {
        Ok(s) => s,
        Err(e) => return report.skip(e.to_string()),
    };
    let q = QuotientMap::new(n).expect("N normal");
    let p_bar = q.project_subgroup(&p_sub).expect("same parent");
    let l_bar = q.project_subgroup(l).expect("same parent");
    let x_bar = q.project_set(x);
    let hyp_lhs = p_bar.intersect(&l_bar).expect("same parent");
    let hyp_rhs = q.image().subgroup_generated(p_bar.members().intersection(&x_bar).iter());
    if hyp_lhs != hyp_rhs {
        return report.skip("quotient hypothesis fails");
    }
    let lhs = p_sub.intersect(l).expect("same parent");
    let mut seed = p_sub.members().intersection(x);
    seed.union_with(&p_sub.members().intersection(n.members()));
    let rhs = g.subgroup_generated(seed.iter());
    report
        .metric("subgroup_order", lhs.order() as u64)
        .verdict(lhs == rhs, || format!("|P cap L|={} |<P cap X, P cap N>|={}", lhs.order(), rhs.order()))
}

/// For δₖ*-commutators `y₁..yₖ` normalizing `N` with orders coprime to `|N|`,
/// every `[x, y₁, …, yₖ]` with `x ∈ N` is a δₖ₊₁*-commutator.
pub fn check_delta_chain_commutator(entry: &CorpusEntry, n: &Subgroup, ys: &[usize], k: usize) -> CheckReport {
    let g = &entry.group;
    let ys_text: Vec<String> = ys.iter().map(|&y| cycles(g, y)).collect();
    let report = CheckReport::new(CheckId::DeltaChainCommutator, entry)
        .param("k", k)
        .param("ys", ys_text.join(" "));
    if ys.len() != k || k == 0 {
        return report.skip("need exactly k >= 1 elements y_i");
    }
    let level_k = delta_star_set(g, k).expect("valid level");
    if !ys.iter().all(|&y| level_k.contains(y)) {
        return report.skip("some y_i is not a delta*_k-commutator");
    }
    if !n.is_normalized_by(ys.iter().copied()) {
        return report.skip("some y_i does not normalize N");
    }
    if !ys.iter().all(|&y| coprime(g.order_of(y), n.order() as u64)) {
        return report.skip("some |y_i| not coprime to |N|");
    }
    let next = delta_star_set(g, k + 1).expect("valid level");
    let bad = n.elements().find(|&x| !next.contains(g.iterated_commutator(x, ys)));
    let report = report.metric("m", next.size() as u64).metric("checked", n.order() as u64);
    match bad {
        None => report.pass(),
        Some(x) => report.fail(format!(
            "x={} gives {} outside the delta*_(k+1) set",
            cycles(g, x),
            cycles(g, g.iterated_commutator(x, ys))
        )),
    }
}

/// The nilpotency and Fitting-height criteria plus the two identifications
/// with nilpotent residuals, for every level `1..=k_max`.
pub fn check_theorem_criteria(entry: &CorpusEntry, k_max: usize) -> CheckReport {
    let g = &entry.group;
    let gamma_inf = gamma_infinity(g);
    let nilpotent = gamma_inf.is_trivial();
    let soluble = is_soluble(g);
    let height = fitting_height(g);
    let mut report = CheckReport::new(CheckId::TheoremCriteria, entry).param("k_max", k_max);
    if let Some(h) = height {
        report.set_metric("fitting_height", h as u64);
    }
    let mut failures = Vec::new();
    for k in 1..=k_max {
        let gamma_k = star_subgroup(g, StarVariant::Gamma, k).expect("valid level");
        if k >= 2 {
            if gamma_k != gamma_inf {
                failures.push(format!("k={k}: |gamma*_k|={} != |gamma_inf|={}", gamma_k.order(), gamma_inf.order()));
            }
            if gamma_k.is_trivial() != nilpotent {
                failures.push(format!("k={k}: gamma*_k trivial={} but nilpotent={nilpotent}", gamma_k.is_trivial()));
            }
        }
        let delta_k = star_subgroup(g, StarVariant::Delta, k).expect("valid level");
        let prev = star_subgroup(g, StarVariant::Delta, k - 1).expect("valid level");
        let residual = prev.lift(&gamma_infinity(prev.as_group())).expect("materialized subgroup");
        if delta_k != residual {
            failures.push(format!(
                "k={k}: |delta*_k|={} != |gamma_inf(delta*_(k-1))|={}",
                delta_k.order(),
                residual.order()
            ));
        }
        match height {
            Some(h) if delta_k.is_trivial() != (h <= k) => failures.push(format!(
                "k={k}: delta*_k trivial={} but Fitting height {h}",
                delta_k.is_trivial()
            )),
            None if delta_k.is_trivial() => {
                failures.push(format!("k={k}: delta*_k trivial in an insoluble group"))
            }
            _ => {}
        }
    }
    debug_assert_eq!(soluble, height.is_some());
    if failures.is_empty() {
        report.pass()
    } else {
        report.fail(failures.join("; "))
    }
}

/// Every star-commutator of every quotient `G/N` lifts to a star-commutator
/// of `G` at the same level.
pub fn check_quotient_lifting(entry: &CorpusEntry, k_max: usize) -> CheckReport {
    let g = &entry.group;
    let lattice = normal_subgroups(g);
    let mut lifted = 0u64;
    let report = CheckReport::new(CheckId::QuotientLifting, entry)
        .param("k_max", k_max)
        .metric("normal_subgroups", lattice.subgroups.len() as u64);
    for (ni, n) in lattice.subgroups.iter().enumerate() {
        let q = QuotientMap::new(n).expect("normal subgroup");
        for variant in [StarVariant::Gamma, StarVariant::Delta] {
            for k in variant.base_level()..=k_max {
                let target = star_set(q.image(), variant, k).expect("valid level");
                for x_bar in target.commutators.iter() {
                    match lift_commutator_from_quotient(&q, x_bar, variant, k) {
                        Ok(_) => lifted += 1,
                        Err(_) => {
                            let rep = q.section(x_bar);
                            return report.fail(format!(
                                "N#{ni} (order {}), {variant}*_{k}: coset of {} has no lift",
                                n.order(),
                                cycles(g, rep)
                            ));
                        }
                    }
                }
            }
        }
    }
    report.metric("lifted", lifted).pass()
}

/// In a nonabelian simple group every element is a commutator of elements of
/// coprime orders.
pub fn check_coprime_ore(entry: &CorpusEntry) -> CheckReport {
    let g = &entry.group;
    let report = CheckReport::new(CheckId::CoprimeOre, entry);
    if !is_simple_nonabelian(g) {
        return report.skip("G is not nonabelian simple");
    }
    let set = gamma_star_set(g, 2).expect("valid level");
    let missing = (0..g.order()).find(|&a| !set.contains(a));
    report
        .metric("m", set.size() as u64)
        .metric("subgroup_order", g.order() as u64)
        .verdict(missing.is_none(), || {
            format!("{} is not a coprime commutator", cycles(g, missing.unwrap()))
        })
}
