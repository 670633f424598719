//! Fully enumerated permutation groups.
//!
//! Every group stores all of its elements sorted lexicographically by image
//! array. Elements are addressed by their position in that order, so index 0
//! is always the identity and ascending index order is the canonical order
//! used for representatives, reports and tie-breaking.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::perm::Permutation;
use crate::set::ElemSet;
use crate::star::StarCache;
use crate::subgroup::Subgroup;
use crate::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 2000;
pub const MAX_ELEMENT_CAP: usize = 20000;

/// Groups up to this order get a cached multiplication table.
const TABLE_LIMIT: usize = 1024;

pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    table: OnceLock<Option<Vec<u32>>>,
    classes: OnceLock<Classes>,
    pub(crate) star_cache: StarCache,
    pub(crate) normal_cache: Mutex<HashMap<usize, (Vec<ElemSet>, bool)>>,
}

struct Classes {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Closure of `generators` with the default element cap.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Arc<FiniteGroup>> {
        FiniteGroup::generate_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first closure under right multiplication by the generators.
    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Arc<FiniteGroup>> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut elements = vec![identity];
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            next += 1;
            for g in &generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    elements.push(y);
                    if elements.len() > cap {
                        return Err(Error::CapExceeded { cap, reached: elements.len() });
                    }
                }
            }
        }
        elements.sort_unstable();
        Ok(Arc::new(FiniteGroup::from_sorted(degree, generators, elements)))
    }

    /// Assembles a group from an already closed, sorted element list.
    pub(crate) fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> FiniteGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        let generator_indices = generators.iter().map(|g| index[g]).collect();
        FiniteGroup {
            degree,
            generators,
            generator_indices,
            elements,
            index,
            inverses,
            orders,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            star_cache: StarCache::default(),
            normal_cache: Mutex::new(HashMap::new()),
        }
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_sorted(degree, Vec::new(), vec![Permutation::identity(degree)]))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Element indices for a list of permutations, failing on non-members.
    pub fn indices_of(&self, perms: &[Permutation]) -> Result<Vec<usize>> {
        perms.iter().map(|p| self.index_of(p).ok_or(Error::NotInGroup)).collect()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn order_of(&self, a: usize) -> u64 {
        self.orders[a]
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                if n > TABLE_LIMIT {
                    return None;
                }
                let mut t = Vec::with_capacity(n * n);
                for a in &self.elements {
                    for b in &self.elements {
                        t.push(self.index[&a.then(b)] as u32);
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// `a` then `b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let left = self.mul(self.inv(a), self.inv(b));
        self.mul(left, self.mul(a, b))
    }

    /// Left-normed `[x, ys[0], ys[1], ...]`.
    pub fn iterated_commutator(&self, x: usize, ys: &[usize]) -> usize {
        ys.iter().fold(x, |acc, &y| self.commutator(acc, y))
    }

    /// `by⁻¹ a by`.
    pub fn conj(&self, a: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), a), by)
    }

    pub fn pow(&self, a: usize, exp: u64) -> usize {
        let mut result = self.identity();
        let mut base = a;
        let mut e = exp % self.order_of(a);
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.order())
    }

    /// Smallest subgroup containing every seed element, as an element set.
    pub(crate) fn closure(&self, seed: impl IntoIterator<Item = usize>) -> ElemSet {
        self.closure_with_gens(seed).0
    }

    /// Closure plus the seed elements that were actually needed to reach it.
    pub(crate) fn closure_with_gens(
        &self,
        seed: impl IntoIterator<Item = usize>,
    ) -> (ElemSet, Vec<usize>) {
        let mut set = ElemSet::empty(self.order());
        set.insert(self.identity());
        let mut elems = vec![self.identity()];
        let mut gens: Vec<usize> = Vec::new();
        for s in seed {
            if set.contains(s) {
                continue;
            }
            gens.push(s);
            let old_len = elems.len();
            for i in 0..old_len {
                let y = self.mul(elems[i], s);
                if set.insert(y) {
                    elems.push(y);
                }
            }
            let mut i = old_len;
            while i < elems.len() {
                let x = elems[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if set.insert(y) {
                        elems.push(y);
                    }
                }
                i += 1;
            }
        }
        (set, gens)
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup::new_unchecked(self.clone(), self.full_set())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::new_unchecked(self.clone(), ElemSet::from_indices(self.order(), [0]))
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated(self: &Arc<Self>, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        Subgroup::new_unchecked(self.clone(), self.closure(seed))
    }

    /// As [`subgroup_generated`](Self::subgroup_generated), from permutations.
    pub fn subgroup_generated_by(self: &Arc<Self>, seed: &[Permutation]) -> Result<Subgroup> {
        let idx = self.indices_of(seed)?;
        Ok(self.subgroup_generated(idx))
    }

    fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                class_of[start] = id;
                let mut class = vec![start];
                let mut i = 0;
                while i < class.len() {
                    let x = class[i];
                    for &g in &self.generator_indices {
                        let y = self.conj(x, g);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            class.push(y);
                        }
                    }
                    i += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            Classes { classes, class_of }
        })
    }

    /// Conjugacy classes, each sorted, listed by their least element.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes().classes
    }

    pub fn class_index_of(&self, a: usize) -> usize {
        self.classes().class_of[a]
    }

    pub fn class_of(&self, a: usize) -> &[usize] {
        &self.classes().classes[self.class_index_of(a)]
    }

    /// Union of the conjugacy classes meeting `set`.
    pub fn conjugation_closure(&self, set: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut out = self.empty_set();
        for a in set {
            if !out.contains(a) {
                for &c in self.class_of(a) {
                    out.insert(c);
                }
            }
        }
        out
    }

    /// True when `set` is a union of conjugacy classes.
    pub fn is_normal_subset(&self, set: &ElemSet) -> bool {
        set.iter().all(|a| {
            self.generator_indices.iter().all(|&g| set.contains(self.conj(a, g)))
        })
    }

    /// `{g : gs = sg for all s}`.
    pub fn centralizer(self: &Arc<Self>, set: impl IntoIterator<Item = usize>) -> Subgroup {
        let s: Vec<usize> = set.into_iter().collect();
        let members = ElemSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g))),
        );
        Subgroup::new_unchecked(self.clone(), members)
    }

    pub fn center(self: &Arc<Self>) -> Subgroup {
        let gens = self.generator_indices.clone();
        self.centralizer(gens)
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(self: &Arc<Self>, set: impl IntoIterator<Item = usize>) -> Subgroup {
        let classes = self.conjugation_closure(set);
        self.subgroup_generated(classes.iter())
    }

    /// `{g : H^g = H}`.
    pub fn normalizer(self: &Arc<Self>, h: &Subgroup) -> Subgroup {
        let gens = h.generators();
        let members = ElemSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| gens.iter().all(|&x| h.contains(self.conj(x, g)))),
        );
        Subgroup::new_unchecked(self.clone(), members)
    }

    /// Elements whose order is a power of `p` (the identity included).
    pub fn p_elements(&self, p: u64) -> ElemSet {
        ElemSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&a| crate::arith::is_power_of(self.order_of(a), p)),
        )
    }

    /// Direct product on disjoint point sets, `self` on the low points.
    pub fn direct_product(&self, other: &FiniteGroup, cap: usize) -> Result<Arc<FiniteGroup>> {
        let predicted = self.order() * other.order();
        if predicted > cap {
            return Err(Error::CapExceeded { cap, reached: predicted });
        }
        let degree = self.degree + other.degree;
        let generators = self
            .generators
            .iter()
            .map(|g| g.shifted(0, degree))
            .chain(other.generators.iter().map(|g| g.shifted(self.degree, degree)))
            .collect();
        FiniteGroup::generate_with_cap(degree, generators, cap)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn sym(n: usize) -> Arc<FiniteGroup> {
        let mut gens = vec![];
        if n >= 2 {
            gens.push(cyc(n, &[&[0, 1]]));
            let long: Vec<usize> = (0..n).collect();
            gens.push(cyc(n, &[&long]));
        }
        FiniteGroup::generate(n, gens).unwrap()
    }

    /// All 24 permutations of 4 points by direct enumeration.
    fn all_perms(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Permutation>) {
            if prefix.len() == n {
                out.push(Permutation::from_images(prefix.clone()).unwrap());
                return;
            }
            for x in 0..n {
                if !prefix.contains(&x) {
                    prefix.push(x);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = vec![];
        rec(&mut vec![], n, &mut out);
        out
    }

    #[test]
    fn trivial_and_empty_generators() {
        let g = FiniteGroup::generate(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.whole().is_trivial());
        assert_eq!(FiniteGroup::trivial(3).order(), 1);
    }

    #[test]
    fn sym4_matches_enumeration() {
        let g = sym(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.elements(), all_perms(4).as_slice());
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn alt5_from_five_and_three_cycle() {
        let g = FiniteGroup::generate(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])])
            .unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2, 3, 4, 5]])];
        match FiniteGroup::generate_with_cap(6, gens, 100) {
            Err(Error::CapExceeded { cap: 100, reached }) => assert!(reached > 100),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn generate_rejects_wrong_degree() {
        assert!(FiniteGroup::generate(3, vec![Permutation::identity(4)]).is_err());
    }

    #[test]
    fn generate_is_idempotent() {
        let g = sym(4);
        let again = FiniteGroup::generate(4, g.elements().to_vec()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn table_and_direct_products_agree() {
        let g = sym(4);
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).then(g.element(b)));
            }
            assert!(g.element(g.mul(a, g.inv(a))).is_identity());
        }
    }

    #[test]
    fn subgroup_generation_examples() {
        let g = sym(4);
        assert!(g.subgroup_generated([]).is_trivial());
        assert_eq!(g.subgroup_generated(g.generator_indices().to_vec()).order(), 24);
        let three_cycles: Vec<usize> = (0..24).filter(|&a| g.order_of(a) == 3).collect();
        assert_eq!(g.subgroup_generated(three_cycles).order(), 12);
        let stranger = cyc(5, &[&[0, 4]]);
        assert!(matches!(g.subgroup_generated_by(&[stranger]), Err(Error::DegreeMismatch { .. }) | Err(Error::NotInGroup)));
    }

    #[test]
    fn classes_of_sym3() {
        let g = sym(3);
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(g.class_of(0), &[0]);
        let total: usize = sizes.iter().sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = FiniteGroup::generate(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(g.conjugacy_classes().len(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn centralizers() {
        let g = sym(3);
        assert_eq!(g.centralizer([0]).order(), 6);
        assert!(g.centralizer(0..6).is_trivial());
        let c = g.index_of(&cyc(3, &[&[0, 1, 2]])).unwrap();
        let cent = g.centralizer([c]);
        assert_eq!(cent.order(), 3);
        // brute-force oracle on raw permutations
        let p = g.element(c).clone();
        let expected: Vec<&Permutation> =
            g.elements().iter().filter(|x| x.then(&p) == p.then(x)).collect();
        assert_eq!(expected.len(), 3);
    }

    #[test]
    fn normal_closures() {
        let g = sym(4);
        assert!(g.normal_closure([]).is_trivial());
        let c = g.index_of(&cyc(4, &[&[0, 1, 2]])).unwrap();
        assert_eq!(g.normal_closure([c]).order(), 12);
        let d8 = FiniteGroup::generate(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap();
        let z = d8.index_of(&cyc(4, &[&[0, 2], &[1, 3]])).unwrap();
        assert_eq!(d8.normal_closure([z]).order(), 2);
    }

    #[test]
    fn direct_products() {
        let c2 = FiniteGroup::generate(2, vec![cyc(2, &[&[0, 1]])]).unwrap();
        let c3 = FiniteGroup::generate(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        let c6 = c2.direct_product(&c3, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(c6.order(), 6);
        assert!((0..6).any(|a| c6.order_of(a) == 6));
        let g = sym(3).direct_product(&FiniteGroup::trivial(1), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(sym(4).direct_product(&sym(4), 500).is_err());
    }
}
