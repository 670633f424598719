use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{coprime, prime_divisors};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::set::ElemSet;
use crate::star::delta_star_set;
use crate::structure::{is_soluble, normal_subgroups, p_core};
use crate::subgroup::Subgroup;
use crate::sylow_hall::{hall_prime_complement, sylow_subgroup};

use super::checks::*;
use super::{CheckReport, CorpusEntry, Status};

/// Instance generation for lemma-specific levels stays below these bounds
/// even when the suite runs with a larger `k_max`.
const SUBSET_GENERATION_MAX_K: usize = 2;
const FOCAL_MAX_K: usize = 2;
const RECURSION_MAX_K: usize = 3;
const LIFTING_MAX_K: usize = 3;
const CHAIN_MAX_K: usize = 2;

/// Class representatives tried as each `y_i` in the chain-commutator check.
const CHAIN_REPS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    CoprimeAction,
    NormalSubsetGeneration,
    DeltaRecursion,
    MetanilpotentPH,
    AbelianBound,
    FocalDelta,
    FocalPatch,
    DeltaChainCommutator,
    TheoremCriteria,
    QuotientLifting,
    CoprimeOre,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::CoprimeAction,
        CheckId::NormalSubsetGeneration,
        CheckId::DeltaRecursion,
        CheckId::MetanilpotentPH,
        CheckId::AbelianBound,
        CheckId::FocalDelta,
        CheckId::FocalPatch,
        CheckId::DeltaChainCommutator,
        CheckId::TheoremCriteria,
        CheckId::QuotientLifting,
        CheckId::CoprimeOre,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::CoprimeAction => "check_coprime_action",
            CheckId::NormalSubsetGeneration => "check_normal_subset_generation",
            CheckId::DeltaRecursion => "check_delta_recursion",
            CheckId::MetanilpotentPH => "check_metanilpotent_PH",
            CheckId::AbelianBound => "check_abelian_bound",
            CheckId::FocalDelta => "check_focal_delta",
            CheckId::FocalPatch => "check_focal_patch",
            CheckId::DeltaChainCommutator => "check_delta_chain_commutator",
            CheckId::TheoremCriteria => "check_theorem_criteria",
            CheckId::QuotientLifting => "check_quotient_lifting",
            CheckId::CoprimeOre => "check_coprime_ore",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub k_max: usize,
    pub seed: u64,
    pub checks: Vec<CheckId>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { k_max: 5, seed: 0, checks: CheckId::ALL.to_vec() }
    }
}

/// An abelian p-group `P` with a p′-group `A` acting on it, both inside `entry`.
#[derive(Clone, Debug)]
pub struct AbelianFixture {
    pub entry: CorpusEntry,
    pub p: Subgroup,
    pub a: Subgroup,
}

fn fixture(id: &str, degree: usize, p_gens: &[&[&[usize]]], a_gens: &[&[&[usize]]]) -> AbelianFixture {
    let perms = |gens: &[&[&[usize]]]| -> Vec<Permutation> {
        gens.iter().map(|c| Permutation::from_cycles(degree, c).expect("fixture cycle")).collect()
    };
    let p_perms = perms(p_gens);
    let a_perms = perms(a_gens);
    let all: Vec<Permutation> = p_perms.iter().chain(&a_perms).cloned().collect();
    let group = FiniteGroup::generate(degree, all).expect("fixture group");
    let p = group.subgroup_generated_by(&p_perms).expect("members");
    let a = group.subgroup_generated_by(&a_perms).expect("members");
    AbelianFixture { entry: CorpusEntry::new(id, group), p, a }
}

/// V4⋊C3, C3⋊C2, C5⋊C4 and C7⋊C3, each as (normal abelian P, complement A).
pub fn abelian_action_fixtures() -> Vec<AbelianFixture> {
    vec![
        fixture("semidirect:V4:C3", 4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]], &[&[&[0, 1, 2]]]),
        fixture("semidirect:C3:C2", 3, &[&[&[0, 1, 2]]], &[&[&[0, 1]]]),
        // x ↦ x + 1 and x ↦ 2x on Z/5
        fixture("semidirect:C5:C4", 5, &[&[&[0, 1, 2, 3, 4]]], &[&[&[1, 2, 4, 3]]]),
        // x ↦ x + 1 and x ↦ 2x on Z/7
        fixture("semidirect:C7:C3", 7, &[&[&[0, 1, 2, 3, 4, 5, 6]]], &[&[&[1, 2, 4], &[3, 6, 5]]]),
    ]
}

fn levels(from: usize, cap: usize, k_max: usize) -> std::ops::RangeInclusive<usize> {
    from..=cap.min(k_max)
}

fn run_check(check: CheckId, entry: &CorpusEntry, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let g = &entry.group;
    let primes = prime_divisors(g.order() as u64);
    let mut out = Vec::new();
    match check {
        CheckId::CoprimeAction => {
            let lattice = normal_subgroups(g);
            let soluble = is_soluble(g);
            for (ni, n) in lattice.subgroups.iter().enumerate().filter(|(_, n)| !n.is_trivial()) {
                for &q in &primes {
                    let sylow = sylow_subgroup(g, q).expect("prime");
                    out.push(check_coprime_action(entry, n, &sylow).param("N", ni).param("H", format!("sylow:{q}")));
                    if soluble {
                        if let Ok(hall) = hall_prime_complement(g, q, cfg.seed) {
                            out.push(
                                check_coprime_action(entry, n, &hall)
                                    .param("N", ni)
                                    .param("H", format!("hall:{q}'"))
                                    .param("seed", cfg.seed),
                            );
                        }
                    }
                }
            }
        }
        CheckId::NormalSubsetGeneration => {
            let lattice = normal_subgroups(g);
            for (ni, n) in lattice.subgroups.iter().enumerate().filter(|(_, n)| !n.is_trivial()) {
                for &q in &primes {
                    let a = sylow_subgroup(g, q).expect("prime");
                    let b_all = ElemSet::from_indices(g.order(), a.elements().filter(|&x| x != g.identity()));
                    let inner = a.as_group();
                    let gen_classes = inner.conjugation_closure(inner.generator_indices().iter().copied());
                    let b_gen = a.lift_set(&gen_classes);
                    for k in levels(1, SUBSET_GENERATION_MAX_K, cfg.k_max) {
                        for (label, b) in [("nontrivial", &b_all), ("generator_classes", &b_gen)] {
                            out.push(
                                check_normal_subset_generation(entry, n, &a, b, k)
                                    .param("N", ni)
                                    .param("A", format!("sylow:{q}"))
                                    .param("B", label),
                            );
                        }
                    }
                }
            }
        }
        CheckId::DeltaRecursion => {
            for k in levels(0, RECURSION_MAX_K, cfg.k_max) {
                out.push(check_delta_recursion(entry, k));
            }
        }
        CheckId::MetanilpotentPH => {
            for &p in &primes {
                out.push(check_metanilpotent_ph(entry, p, cfg.seed));
            }
        }
        CheckId::AbelianBound => {
            let soluble = is_soluble(g);
            for &p in &primes {
                let core = p_core(g, p).expect("prime");
                if core.is_trivial() {
                    continue;
                }
                let mut actors: Vec<(String, Subgroup)> = Vec::new();
                if soluble {
                    if let Ok(h) = hall_prime_complement(g, p, cfg.seed) {
                        actors.push((format!("hall:{p}'"), h));
                    }
                }
                for &q in primes.iter().filter(|&&q| q != p) {
                    actors.push((format!("sylow:{q}"), sylow_subgroup(g, q).expect("prime")));
                }
                for (label, a) in &actors {
                    for i in 1..=2 {
                        out.push(
                            check_abelian_bound(entry, &core, a, i)
                                .param("P", format!("core:{p}"))
                                .param("A", label),
                        );
                    }
                }
            }
        }
        CheckId::FocalDelta => {
            for &p in &primes {
                for k in levels(0, FOCAL_MAX_K, cfg.k_max) {
                    out.push(check_focal_delta(entry, p, k));
                }
            }
        }
        CheckId::FocalPatch => {
            let lattice = normal_subgroups(g);
            for &p in &primes {
                for k in levels(0, FOCAL_MAX_K, cfg.k_max) {
                    let set = delta_star_set(g, k).expect("valid level");
                    let x = set.commutators.intersection(&g.p_elements(p));
                    for (ni, n) in lattice.subgroups.iter().enumerate() {
                        for (li, l) in lattice.subgroups.iter().enumerate() {
                            if !n.is_subgroup_of(l) {
                                continue;
                            }
                            out.push(
                                check_focal_patch(entry, p, n, l, &x)
                                    .param("N", ni)
                                    .param("L", li)
                                    .param("X", format!("delta*_{k}")),
                            );
                        }
                    }
                }
            }
        }
        CheckId::DeltaChainCommutator => {
            let lattice = normal_subgroups(g);
            for k in levels(1, CHAIN_MAX_K, cfg.k_max) {
                let set = delta_star_set(g, k).expect("valid level");
                for (ni, n) in lattice.subgroups.iter().enumerate().filter(|(_, n)| !n.is_trivial()) {
                    let reps: Vec<usize> = set
                        .commutators
                        .iter()
                        .filter(|&y| y != g.identity() && g.class_of(y)[0] == y)
                        .filter(|&y| coprime(g.order_of(y), n.order() as u64))
                        .take(CHAIN_REPS)
                        .collect();
                    if reps.is_empty() {
                        out.push(
                            CheckReport::new(CheckId::DeltaChainCommutator, entry)
                                .param("k", k)
                                .param("N", ni)
                                .skip("no nontrivial delta*_k-commutator of order coprime to |N|"),
                        );
                        continue;
                    }
                    for tuple in tuples(&reps, k) {
                        out.push(check_delta_chain_commutator(entry, n, &tuple, k).param("N", ni));
                    }
                }
            }
        }
        CheckId::TheoremCriteria => out.push(check_theorem_criteria(entry, cfg.k_max)),
        CheckId::QuotientLifting => {
            out.push(check_quotient_lifting(entry, LIFTING_MAX_K.min(cfg.k_max)))
        }
        CheckId::CoprimeOre => out.push(check_coprime_ore(entry)),
    }
    out
}

fn tuples(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                items.iter().map(move |&x| {
                    let mut next = t.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// Runs the selected checks over every entry (and, for the abelian bound,
/// over the built-in semidirect fixtures). Output is in canonical order
/// regardless of scheduling.
pub fn run_suite(entries: &[CorpusEntry], cfg: &SuiteConfig) -> Vec<CheckReport> {
    let tasks: Vec<(CheckId, &CorpusEntry)> = entries
        .iter()
        .flat_map(|e| cfg.checks.iter().map(move |&c| (c, e)))
        .collect();
    let mut reports: Vec<CheckReport> =
        tasks.par_iter().flat_map_iter(|&(c, e)| run_check(c, e, cfg)).collect();
    if cfg.checks.contains(&CheckId::AbelianBound) {
        for f in abelian_action_fixtures() {
            for i in 1..=2 {
                reports.push(check_abelian_bound(&f.entry, &f.p, &f.a, i).param("P", "normal").param("A", "complement"));
            }
        }
    }
    reports.sort_by(|a, b| a.canonical_cmp(b));
    reports
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check_id: String,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl CheckSummary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }

    /// Fraction of instances whose hypotheses held.
    pub fn hit_rate(&self) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            (self.pass + self.fail) as f64 / self.total() as f64
        }
    }
}

/// Per-check status counts, ordered by check id.
pub fn summarize(reports: &[CheckReport]) -> Vec<CheckSummary> {
    let mut by_check: BTreeMap<&str, CheckSummary> = BTreeMap::new();
    for r in reports {
        let s = by_check
            .entry(&r.check_id)
            .or_insert_with(|| CheckSummary { check_id: r.check_id.clone(), ..Default::default() });
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped => s.skipped += 1,
        }
    }
    by_check.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
        }
        assert!("check_nothing".parse::<CheckId>().is_err());
    }

    #[test]
    fn fixtures_have_expected_shapes() {
        let shapes: Vec<(usize, usize, usize)> = abelian_action_fixtures()
            .iter()
            .map(|f| (f.entry.group.order(), f.p.order(), f.a.order()))
            .collect();
        assert_eq!(shapes, vec![(12, 4, 3), (6, 3, 2), (20, 5, 4), (21, 7, 3)]);
        for f in abelian_action_fixtures() {
            assert!(f.p.is_normal());
        }
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(tuples(&[1, 2], 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(tuples(&[5], 0), vec![Vec::<usize>::new()]);
    }
}
