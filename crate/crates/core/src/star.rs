//! Coprime commutator sets.
//!
//! Level 1 of the γ* family and level 0 of the δ* family are the whole
//! group. Above that, with `B` the power closure of the previous level,
//!
//! * γₖ* = `{[a, b] : a ∈ B, b ∈ G, gcd(|a|, |b|) = 1}`
//! * δₖ* = `{[a, b] : a, b ∈ B, gcd(|a|, |b|) = 1}`
//!
//! Levels are memoized per group. Pairs are enumerated bucketed by element
//! order so that non-coprime order classes are skipped wholesale.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::coprime;
use crate::group::FiniteGroup;
use crate::quotient::QuotientMap;
use crate::set::ElemSet;
use crate::subgroup::Subgroup;
use crate::{Error, Result};

/// Pair count above which the sweep is split across threads.
const PARALLEL_PAIRS: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StarVariant {
    Gamma,
    Delta,
}

impl StarVariant {
    /// The level at which the set is the whole group.
    pub fn base_level(self) -> usize {
        match self {
            StarVariant::Gamma => 1,
            StarVariant::Delta => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StarVariant::Gamma => "gamma",
            StarVariant::Delta => "delta",
        }
    }
}

impl fmt::Display for StarVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for StarVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gamma" => Ok(StarVariant::Gamma),
            "delta" => Ok(StarVariant::Delta),
            other => Err(format!("unknown variant `{other}` (expected gamma or delta)")),
        }
    }
}

struct StarLevel {
    commutators: ElemSet,
    base: ElemSet,
}

#[derive(Default)]
pub(crate) struct StarCache(Mutex<HashMap<(StarVariant, usize), Arc<StarLevel>>>);

/// The level-`k` star-commutators of a group together with the power-closed
/// set they were built from.
#[derive(Clone)]
pub struct StarCommutatorSet {
    pub variant: StarVariant,
    pub level: usize,
    pub commutators: ElemSet,
    pub base: ElemSet,
    pub group: Arc<FiniteGroup>,
}

impl StarCommutatorSet {
    /// Number of star-commutators (the identity included).
    pub fn size(&self) -> usize {
        self.commutators.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.commutators.contains(a)
    }

    pub fn subgroup(&self) -> Subgroup {
        self.group.subgroup_generated(self.commutators.iter())
    }
}

impl fmt::Debug for StarCommutatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*_{} set of size {}", self.variant, self.level, self.size())
    }
}

/// `{sʲ : s ∈ S, 0 ≤ j < |s|}`; always contains the identity.
pub fn power_closure(g: &FiniteGroup, set: &ElemSet) -> ElemSet {
    let mut out = g.empty_set();
    out.insert(g.identity());
    for s in set.iter() {
        let mut x = s;
        while x != g.identity() {
            out.insert(x);
            x = g.mul(x, s);
        }
    }
    out
}

fn by_order(g: &FiniteGroup, set: &ElemSet) -> BTreeMap<u64, Vec<usize>> {
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for a in set.iter() {
        buckets.entry(g.order_of(a)).or_default().push(a);
    }
    buckets
}

/// All `[a, b]` with `a ∈ left`, `b ∈ right` of coprime orders.
fn coprime_sweep(g: &FiniteGroup, left: &ElemSet, right: &ElemSet) -> ElemSet {
    let lb = by_order(g, left);
    let rb = by_order(g, right);
    let mut work: Vec<(usize, Vec<&[usize]>)> = Vec::new();
    let mut pairs = 0;
    for (&oa, as_) in &lb {
        let partners: Vec<&[usize]> =
            rb.iter().filter(|(&ob, _)| coprime(oa, ob)).map(|(_, v)| v.as_slice()).collect();
        let width: usize = partners.iter().map(|p| p.len()).sum();
        for &a in as_ {
            pairs += width;
            work.push((a, partners.clone()));
        }
    }
    let sweep_one = |mut acc: ElemSet, (a, partners): &(usize, Vec<&[usize]>)| {
        for bs in partners {
            for &b in *bs {
                acc.insert(g.commutator(*a, b));
            }
        }
        acc
    };
    if pairs >= PARALLEL_PAIRS {
        work.par_iter()
            .fold(|| g.empty_set(), sweep_one)
            .reduce(|| g.empty_set(), |a, b| a.union(&b))
    } else {
        work.iter().fold(g.empty_set(), sweep_one)
    }
}

fn level(g: &FiniteGroup, variant: StarVariant, k: usize) -> Result<Arc<StarLevel>> {
    let base_level = variant.base_level();
    if k < base_level {
        return Err(Error::InvalidLevel { variant: variant.name(), level: k });
    }
    if let Some(hit) = g.star_cache.0.lock().unwrap().get(&(variant, k)) {
        return Ok(hit.clone());
    }
    let computed = if k == base_level {
        let full = g.full_set();
        StarLevel { commutators: full.clone(), base: full }
    } else {
        let prev = level(g, variant, k - 1)?;
        let base = power_closure(g, &prev.commutators);
        let commutators = if k - 1 > base_level && prev.base == base {
            // the sweep depends only on the base set
            prev.commutators.clone()
        } else {
            match variant {
                StarVariant::Gamma => coprime_sweep(g, &base, &g.full_set()),
                StarVariant::Delta => coprime_sweep(g, &base, &base),
            }
        };
        StarLevel { commutators, base }
    };
    let entry = Arc::new(computed);
    g.star_cache.0.lock().unwrap().insert((variant, k), entry.clone());
    Ok(entry)
}

pub fn star_set(g: &Arc<FiniteGroup>, variant: StarVariant, k: usize) -> Result<StarCommutatorSet> {
    let lvl = level(g, variant, k)?;
    Ok(StarCommutatorSet {
        variant,
        level: k,
        commutators: lvl.commutators.clone(),
        base: lvl.base.clone(),
        group: g.clone(),
    })
}

/// γₖ*-commutators, `k ≥ 1`.
pub fn gamma_star_set(g: &Arc<FiniteGroup>, k: usize) -> Result<StarCommutatorSet> {
    star_set(g, StarVariant::Gamma, k)
}

/// δₖ*-commutators, `k ≥ 0`.
pub fn delta_star_set(g: &Arc<FiniteGroup>, k: usize) -> Result<StarCommutatorSet> {
    star_set(g, StarVariant::Delta, k)
}

/// γₖ*(G) or δₖ*(G): the subgroup generated by the level-`k` set.
pub fn star_subgroup(g: &Arc<FiniteGroup>, variant: StarVariant, k: usize) -> Result<Subgroup> {
    Ok(star_set(g, variant, k)?.subgroup())
}

/// A level-`k` star-commutator of the source group lying over `x_bar`.
///
/// The least such element is returned.
pub fn lift_commutator_from_quotient(
    q: &QuotientMap,
    x_bar: usize,
    variant: StarVariant,
    k: usize,
) -> Result<usize> {
    let set = star_set(q.source(), variant, k)?;
    let found = set.commutators.iter().find(|&y| q.project(y) == x_bar);
    found.ok_or(Error::NoLift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }
    fn sym(n: usize) -> Arc<FiniteGroup> {
        let long: Vec<usize> = (0..n).collect();
        FiniteGroup::generate(n, vec![cyc(n, &[&[0, 1]]), cyc(n, &[&long])]).unwrap()
    }

    #[test]
    fn power_closures() {
        let g = sym(3);
        let id = ElemSet::from_indices(6, [0]);
        assert_eq!(power_closure(&g, &id), id);
        let c = g.index_of(&cyc(3, &[&[0, 1, 2]])).unwrap();
        let closed = power_closure(&g, &ElemSet::from_indices(6, [c]));
        assert_eq!(closed.len(), 3);
        assert!(closed.contains(g.inv(c)));
        let transpositions = ElemSet::from_indices(6, (0..6).filter(|&a| g.order_of(a) == 2));
        let closed = power_closure(&g, &transpositions);
        assert_eq!(closed.len(), 4);
        assert!(transpositions.is_subset(&closed));
    }

    #[test]
    fn level_validation() {
        let g = sym(3);
        assert!(gamma_star_set(&g, 0).is_err());
        assert!(delta_star_set(&g, 0).is_ok());
    }

    #[test]
    fn base_levels_are_the_whole_group() {
        let g = sym(4);
        assert_eq!(gamma_star_set(&g, 1).unwrap().size(), 24);
        assert_eq!(delta_star_set(&g, 0).unwrap().size(), 24);
    }

    #[test]
    fn sym3_gamma_two() {
        let g = sym(3);
        let s = gamma_star_set(&g, 2).unwrap();
        let orders: Vec<u64> = s.commutators.iter().map(|a| g.order_of(a)).collect();
        assert_eq!(orders, vec![1, 3, 3]);
    }

    #[test]
    fn abelian_collapses() {
        let g = FiniteGroup::generate(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(gamma_star_set(&g, 2).unwrap().size(), 1);
        assert_eq!(delta_star_set(&g, 1).unwrap().size(), 1);
    }

    #[test]
    fn sym4_delta_tower() {
        let g = sym(4);
        let sizes: Vec<usize> =
            (0..=4).map(|k| star_subgroup(&g, StarVariant::Delta, k).unwrap().order()).collect();
        assert_eq!(sizes, vec![24, 12, 4, 1, 1]);
        let d2 = delta_star_set(&g, 2).unwrap();
        assert_eq!(d2.size(), 4);
    }

    #[test]
    fn sets_are_normal_subsets() {
        let g = sym(4);
        for k in 1..4 {
            let s = gamma_star_set(&g, k).unwrap();
            assert!(g.is_normal_subset(&s.commutators));
            assert!(s.contains(0));
            let d = delta_star_set(&g, k).unwrap();
            assert!(g.is_normal_subset(&d.commutators));
        }
    }

    #[test]
    fn lifting_through_v4() {
        let g = sym(4);
        let v4 = g
            .subgroup_generated_by(&[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])])
            .unwrap();
        let q = QuotientMap::new(&v4).unwrap();
        let quotient_set = gamma_star_set(q.image(), 2).unwrap();
        assert_eq!(quotient_set.size(), 3);
        for x_bar in quotient_set.commutators.iter() {
            let y = lift_commutator_from_quotient(&q, x_bar, StarVariant::Gamma, 2).unwrap();
            assert_eq!(q.project(y), x_bar);
            assert!(gamma_star_set(&g, 2).unwrap().contains(y));
        }
        let whole = QuotientMap::new(&g.whole()).unwrap();
        assert_eq!(lift_commutator_from_quotient(&whole, 0, StarVariant::Delta, 3).unwrap(), 0);
    }
}
