//! Sylow subgroups, Hall p′-subgroups of soluble groups, and commutator
//! subgroups `[K, H]`, `[K,ᵢ H]`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{coprime, is_power_of, is_prime, p_part, PrimeSet};
use crate::group::FiniteGroup;
use crate::set::ElemSet;
use crate::structure::is_soluble;
use crate::subgroup::Subgroup;
use crate::{Error, Result};

pub const DEFAULT_HALL_BUDGET: usize = 10_000;

/// Unproductive samples tolerated before the randomized search restarts.
const RESTART_AFTER: usize = 64;

/// `[K, H] = ⟨[k, h] : k ∈ K, h ∈ H⟩`.
pub fn commutator_subgroup(k: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    if !k.same_parent(h) {
        return Err(Error::ParentMismatch);
    }
    let g = k.parent();
    let mut values = g.empty_set();
    for x in k.elements() {
        for y in h.elements() {
            values.insert(g.commutator(x, y));
        }
    }
    Ok(g.subgroup_generated(values.iter()))
}

/// `[K,ᵢ H] = [[K,ᵢ₋₁ H], H]` with `[K,₁ H] = [K, H]`.
pub fn iterated_commutator_subgroup(k: &Subgroup, h: &Subgroup, i: usize) -> Result<Subgroup> {
    let mut current = k.clone();
    for _ in 0..i {
        current = commutator_subgroup(&current, h)?;
    }
    Ok(current)
}

/// `[K, b] = ⟨[x, b] : x ∈ K⟩` for a single element `b`.
pub fn commutator_with_element(k: &Subgroup, b: usize) -> Subgroup {
    let g = k.parent();
    g.subgroup_generated(k.elements().map(|x| g.commutator(x, b)))
}

/// A Sylow p-subgroup, grown one p-element at a time inside normalizers.
///
/// Starts from the cyclic subgroup of the least nontrivial p-element and at
/// each step adjoins the least p-element of `N_G(P) ∖ P`.
pub fn sylow_subgroup(g: &Arc<FiniteGroup>, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order() as u64, p) as usize;
    let p_elements = g.p_elements(p);
    let mut current = g.trivial_subgroup();
    while current.order() < target {
        let normalizer = g.normalizer(&current);
        let next = p_elements
            .iter()
            .find(|&a| normalizer.contains(a) && !current.contains(a))
            .expect("a p-element outside a non-Sylow p-subgroup normalizes it");
        let seed: Vec<usize> = current.generators().iter().copied().chain([next]).collect();
        current = g.subgroup_generated(seed);
        debug_assert!(is_power_of(current.order() as u64, p));
    }
    Ok(current)
}

/// A Hall p′-subgroup of a soluble group.
///
/// Seeded randomized growth: p′-elements are sampled and adjoined while the
/// generated subgroup keeps p′ order, restarting from the trivial subgroup
/// after a run of unproductive samples. If the sample budget runs out, an
/// exhaustive search over subgroups generated by at most three p′-elements
/// takes over.
pub fn hall_prime_complement(g: &Arc<FiniteGroup>, p: u64, seed: u64) -> Result<Subgroup> {
    hall_prime_complement_with_budget(g, p, seed, DEFAULT_HALL_BUDGET)
}

pub fn hall_prime_complement_with_budget(
    g: &Arc<FiniteGroup>,
    p: u64,
    seed: u64,
    budget: usize,
) -> Result<Subgroup> {
    let pi = PrimeSet::excluding(p)?;
    if !is_soluble(g) {
        return Err(Error::Insoluble);
    }
    let target = pi.part_of(g.order() as u64) as usize;
    if target == 1 {
        return Ok(g.trivial_subgroup());
    }
    if target == g.order() {
        return Ok(g.whole());
    }
    let candidates: Vec<usize> =
        (1..g.order()).filter(|&a| pi.is_pi_number(g.order_of(a))).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = g.trivial_subgroup();
    let mut stale = 0;
    for _ in 0..budget {
        let x = candidates[rng.gen_range(0..candidates.len())];
        if !current.contains(x) {
            let seed_elems: Vec<usize> = current.generators().iter().copied().chain([x]).collect();
            let grown = g.subgroup_generated(seed_elems);
            if coprime(grown.order() as u64, p) {
                current = grown;
                stale = 0;
                if current.order() == target {
                    return Ok(current);
                }
                continue;
            }
        }
        stale += 1;
        if stale >= RESTART_AFTER {
            current = g.trivial_subgroup();
            stale = 0;
        }
    }
    exhaustive_hall(g, p, target, &candidates).ok_or(Error::HallSearchExhausted { attempts: budget })
}

fn exhaustive_hall(g: &Arc<FiniteGroup>, p: u64, target: usize, candidates: &[usize]) -> Option<Subgroup> {
    // Hall p′-subgroups of soluble groups are conjugate, so the first
    // generator can range over class representatives.
    let firsts: Vec<usize> = candidates.iter().copied().filter(|&a| g.class_of(a)[0] == a).collect();
    let p_prime = |s: &ElemSet| coprime(s.len() as u64, p);
    for &a in &firsts {
        let one = g.closure([a]);
        if one.len() == target {
            return Some(g.subgroup_generated([a]));
        }
        for &b in candidates {
            if one.contains(b) {
                continue;
            }
            let two = g.closure([a, b]);
            if !p_prime(&two) {
                continue;
            }
            if two.len() == target {
                return Some(g.subgroup_generated([a, b]));
            }
            for &c in candidates {
                if two.contains(c) {
                    continue;
                }
                let three = g.closure([a, b, c]);
                if three.len() == target {
                    return Some(g.subgroup_generated([a, b, c]));
                }
            }
        }
    }
    None
}
