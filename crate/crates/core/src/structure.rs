//! Series, nilpotency and solubility, p-cores, the Fitting chain and the
//! normal subgroup lattice.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::arith::{coprime, is_power_of, is_prime, prime_divisors};
use crate::group::FiniteGroup;
use crate::quotient::QuotientMap;
use crate::set::ElemSet;
use crate::subgroup::Subgroup;
use crate::sylow_hall::{commutator_subgroup, sylow_subgroup};
use crate::{Error, Result};

/// Default number of conjugacy classes up to which the normal subgroup
/// lattice is enumerated exhaustively.
pub const DEFAULT_CLASS_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    FittingAscending,
}

#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    /// The series became constant before reaching its natural end (the
    /// trivial subgroup for descending series, the whole group for the
    /// Fitting chain). The repeated term is kept as the final entry.
    pub stabilized: bool,
}

impl SeriesRecord {
    pub fn last(&self) -> &Subgroup {
        self.terms.last().expect("series has at least one term")
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

fn descending(g: &Arc<FiniteGroup>, kind: SeriesKind, step: impl Fn(&Subgroup) -> Subgroup) -> SeriesRecord {
    let mut terms = vec![g.whole()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            return SeriesRecord { kind, terms, stabilized: false };
        }
        let next = step(last);
        let repeated = next == *last;
        terms.push(next);
        if repeated {
            return SeriesRecord { kind, terms, stabilized: true };
        }
    }
}

/// `γ₁ = G`, `γᵢ₊₁ = [γᵢ, G]`.
pub fn lower_central_series(g: &Arc<FiniteGroup>) -> SeriesRecord {
    let whole = g.whole();
    descending(g, SeriesKind::LowerCentral, |term| {
        commutator_subgroup(term, &whole).expect("same parent")
    })
}

/// `G ≥ G′ ≥ G″ ≥ …`.
pub fn derived_series(g: &Arc<FiniteGroup>) -> SeriesRecord {
    descending(g, SeriesKind::Derived, |term| commutator_subgroup(term, term).expect("same parent"))
}

/// The nilpotent residual, last term of the lower central series.
pub fn gamma_infinity(g: &Arc<FiniteGroup>) -> Subgroup {
    lower_central_series(g).last().clone()
}

pub fn is_nilpotent(g: &Arc<FiniteGroup>) -> bool {
    gamma_infinity(g).is_trivial()
}

pub fn is_soluble(g: &Arc<FiniteGroup>) -> bool {
    !derived_series(g).stabilized
}

/// Metanilpotent iff the nilpotent residual is nilpotent.
pub fn is_metanilpotent(g: &Arc<FiniteGroup>) -> bool {
    is_nilpotent(gamma_infinity(g).as_group())
}

/// True when `g` is nonabelian and has no normal subgroups besides 1 and itself.
pub fn is_simple_nonabelian(g: &Arc<FiniteGroup>) -> bool {
    if g.is_abelian() {
        return false;
    }
    g.conjugacy_classes()
        .iter()
        .skip(1)
        .all(|class| g.normal_closure(class.iter().copied()).is_whole())
}

/// Largest normal p-subgroup: the intersection of the conjugates of a Sylow p-subgroup.
pub fn p_core(g: &Arc<FiniteGroup>, p: u64) -> Result<Subgroup> {
    let sylow = sylow_subgroup(g, p)?;
    let mut core = sylow.members().clone();
    for x in 0..g.order() {
        if core.len() == 1 {
            break;
        }
        let conjugate = ElemSet::from_indices(g.order(), sylow.elements().map(|a| g.conj(a, x)));
        core.intersect_with(&conjugate);
    }
    Ok(Subgroup::from_members(g, core).expect("intersection of subgroups"))
}

/// Largest normal subgroup of order coprime to `p`.
///
/// Fixpoint over classes of p′-elements: a class is absorbed whenever the
/// normal closure of the current core and that class still has p′ order.
pub fn p_prime_core(g: &Arc<FiniteGroup>, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut core = g.trivial_subgroup();
    let candidates: Vec<&Vec<usize>> = g
        .conjugacy_classes()
        .iter()
        .filter(|c| coprime(g.order_of(c[0]), p))
        .collect();
    loop {
        let mut grew = false;
        for class in &candidates {
            if core.contains(class[0]) {
                continue;
            }
            let seed: Vec<usize> = core.generators().iter().chain(class.iter()).copied().collect();
            let candidate = g.normal_closure(seed);
            if coprime(candidate.order() as u64, p) {
                core = candidate;
                grew = true;
            }
        }
        if !grew {
            return Ok(core);
        }
    }
}

/// Join of the p-cores over the primes dividing the order.
pub fn fitting_subgroup(g: &Arc<FiniteGroup>) -> Subgroup {
    let mut fit = g.trivial_subgroup();
    for p in prime_divisors(g.order() as u64) {
        let core = p_core(g, p).expect("prime divisor");
        fit = fit.join(&core).expect("same parent");
    }
    fit
}

/// Ascending Fitting chain `1 = F₀ < F₁ < …` with `Fᵢ₊₁/Fᵢ = F(G/Fᵢ)`.
pub fn fitting_series(g: &Arc<FiniteGroup>) -> SeriesRecord {
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let last = terms.last().unwrap();
        if last.is_whole() {
            return SeriesRecord { kind: SeriesKind::FittingAscending, terms, stabilized: false };
        }
        let q = QuotientMap::new(last).expect("Fitting terms are normal");
        let fit = fitting_subgroup(q.image());
        let next = q.preimage(&fit).expect("image subgroup");
        let repeated = next == *last;
        terms.push(next);
        if repeated {
            return SeriesRecord { kind: SeriesKind::FittingAscending, terms, stabilized: true };
        }
    }
}

/// Least `h` with `F_h = G`; `None` for insoluble groups. The trivial group has height 0.
pub fn fitting_height(g: &Arc<FiniteGroup>) -> Option<usize> {
    let series = fitting_series(g);
    if series.stabilized {
        None
    } else {
        Some(series.terms.len() - 1)
    }
}

/// Normal subgroups together with a flag telling whether the list is exhaustive.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    pub subgroups: Vec<Subgroup>,
    pub exhaustive: bool,
}

/// Normal subgroups with the default class cap.
pub fn normal_subgroups(g: &Arc<FiniteGroup>) -> NormalLattice {
    normal_subgroups_with_cap(g, DEFAULT_CLASS_CAP)
}

/// All normal subgroups, as joins of normal closures of single classes,
/// ordered by (order, member list).
///
/// With more than `class_cap` classes only pairwise joins of the class
/// closures are formed and the result is flagged non-exhaustive.
pub fn normal_subgroups_with_cap(g: &Arc<FiniteGroup>, class_cap: usize) -> NormalLattice {
    let cached = g.normal_cache.lock().unwrap().get(&class_cap).cloned();
    let (sets, exhaustive) = match cached {
        Some(entry) => entry,
        None => {
            let entry = enumerate_normal(g, class_cap);
            g.normal_cache.lock().unwrap().insert(class_cap, entry.clone());
            entry
        }
    };
    NormalLattice {
        subgroups: sets.into_iter().map(|s| Subgroup::new_unchecked(g.clone(), s)).collect(),
        exhaustive,
    }
}

fn enumerate_normal(g: &Arc<FiniteGroup>, class_cap: usize) -> (Vec<ElemSet>, bool) {
    let mut atoms: Vec<Subgroup> = Vec::new();
    for class in g.conjugacy_classes() {
        let closure = g.normal_closure(class.iter().copied());
        if !atoms.contains(&closure) {
            atoms.push(closure);
        }
    }
    let exhaustive = g.conjugacy_classes().len() <= class_cap;

    let mut found: BTreeSet<(usize, ElemSet)> = BTreeSet::new();
    let mut all: Vec<Subgroup> = Vec::new();
    let mut push = |s: Subgroup, all: &mut Vec<Subgroup>| {
        if found.insert((s.order(), s.members().clone())) {
            all.push(s);
        }
    };
    push(g.trivial_subgroup(), &mut all);
    for a in &atoms {
        push(a.clone(), &mut all);
    }
    if exhaustive {
        let mut i = 0;
        while i < all.len() {
            let current = all[i].clone();
            for a in &atoms {
                if !a.is_subgroup_of(&current) {
                    push(current.join(a).expect("same parent"), &mut all);
                }
            }
            i += 1;
        }
    } else {
        for (i, a) in atoms.iter().enumerate() {
            for b in &atoms[i + 1..] {
                push(a.join(b).expect("same parent"), &mut all);
            }
        }
        push(g.whole(), &mut all);
    }
    (found.into_iter().map(|(_, s)| s).collect(), exhaustive)
}

/// True for groups of prime-power order (the trivial group included).
pub fn is_p_group(g: &FiniteGroup, p: u64) -> bool {
    is_power_of(g.order() as u64, p)
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
    fn alt(n: usize) -> Arc<FiniteGroup> {
        let gens = (2..n).map(|i| cyc(n, &[&[0, 1, i]])).collect();
        FiniteGroup::generate(n, gens).unwrap()
    }
    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let long: Vec<usize> = (0..n).collect();
        FiniteGroup::generate(n, vec![cyc(n, &[&long])]).unwrap()
    }
    fn d8() -> Arc<FiniteGroup> {
        FiniteGroup::generate(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap()
    }

    #[test]
    fn lower_central_examples() {
        assert_eq!(lower_central_series(&cyclic(6)).orders(), vec![6, 1]);
        let s3 = lower_central_series(&sym(3));
        assert_eq!(s3.orders(), vec![6, 3, 3]);
        assert!(s3.stabilized);
        assert_eq!(lower_central_series(&alt(4)).orders(), vec![12, 4, 4]);
    }

    #[test]
    fn gamma_infinity_examples() {
        assert!(gamma_infinity(&d8()).is_trivial());
        assert_eq!(gamma_infinity(&sym(4)).order(), 12);
        assert_eq!(gamma_infinity(&alt(5)).order(), 60);
    }

    #[test]
    fn derived_examples() {
        assert_eq!(derived_series(&cyclic(5)).orders(), vec![5, 1]);
        assert!(is_soluble(&cyclic(5)));
        assert_eq!(derived_series(&sym(4)).orders(), vec![24, 12, 4, 1]);
        assert!(is_soluble(&sym(4)));
        assert_eq!(derived_series(&alt(5)).orders(), vec![60, 60]);
        assert!(!is_soluble(&alt(5)));
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&d8()));
        assert!(!is_nilpotent(&sym(3)));
        assert!(is_nilpotent(&cyclic(6)));
        assert!(is_nilpotent(&FiniteGroup::trivial(1)));
    }

    #[test]
    fn cores() {
        let d = d8();
        assert_eq!(p_core(&d, 2).unwrap().order(), 8);
        assert!(p_prime_core(&sym(3), 3).unwrap().is_trivial());
        assert_eq!(p_core(&sym(3), 3).unwrap().order(), 3);
        assert_eq!(p_core(&sym(4), 2).unwrap().order(), 4);
        assert_eq!(p_prime_core(&sym(3), 2).unwrap().order(), 3);
        assert!(p_core(&sym(4), 4).is_err());
        assert!(p_prime_core(&sym(4), 1).is_err());
    }

    #[test]
    fn fitting() {
        assert_eq!(fitting_height(&d8()), Some(1));
        assert_eq!(fitting_height(&sym(4)), Some(3));
        assert_eq!(fitting_series(&sym(4)).orders(), vec![1, 4, 12, 24]);
        assert_eq!(fitting_height(&alt(5)), None);
        assert!(fitting_subgroup(&alt(5)).is_trivial());
        assert_eq!(fitting_height(&FiniteGroup::trivial(1)), Some(0));
        assert_eq!(fitting_height(&sym(3)), Some(2));
    }

    #[test]
    fn normal_lattices() {
        let a5 = normal_subgroups(&alt(5));
        assert_eq!(a5.subgroups.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 60]);
        assert!(a5.exhaustive);
        let s4 = normal_subgroups(&sym(4));
        assert_eq!(s4.subgroups.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 4, 12, 24]);
        assert_eq!(normal_subgroups(&cyclic(6)).subgroups.len(), 4);
    }

    #[test]
    fn metanilpotency() {
        assert!(is_metanilpotent(&d8()));
        assert!(is_metanilpotent(&alt(4)));
        assert!(!is_metanilpotent(&sym(4)));
    }

    #[test]
    fn simplicity() {
        assert!(is_simple_nonabelian(&alt(5)));
        assert!(!is_simple_nonabelian(&sym(5)));
        assert!(!is_simple_nonabelian(&cyclic(5)));
    }
}
