use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::group::FiniteGroup;
use crate::set::ElemSet;
use crate::{Error, Result};

/// A subgroup of a parent group, identified by its member set.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: ElemSet,
    lazy: Arc<Lazy>,
}

#[derive(Default)]
struct Lazy {
    generators: OnceLock<Vec<usize>>,
    group: OnceLock<Arc<FiniteGroup>>,
    positions: OnceLock<Vec<usize>>,
}

impl Subgroup {
    /// `members` must already be a subgroup of `parent`.
    pub(crate) fn new_unchecked(parent: Arc<FiniteGroup>, members: ElemSet) -> Subgroup {
        debug_assert_eq!(members.universe(), parent.order());
        debug_assert!(members.contains(0));
        Subgroup { parent, members, lazy: Arc::default() }
    }

    /// Validates closure before wrapping.
    pub fn from_members(parent: &Arc<FiniteGroup>, members: ElemSet) -> Result<Subgroup> {
        if members.universe() != parent.order() || parent.closure(members.iter()) != members {
            return Err(Error::NotInGroup);
        }
        Ok(Subgroup::new_unchecked(parent.clone(), members))
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// A small generating set, chosen greedily in canonical order.
    pub fn generators(&self) -> &[usize] {
        self.lazy.generators.get_or_init(|| self.parent.closure_with_gens(self.members.iter()).1)
    }

    /// The subgroup as a standalone group acting on the same points.
    ///
    /// Element `i` of the returned group is the `i`-th member of `self` in
    /// canonical order.
    pub fn as_group(&self) -> &Arc<FiniteGroup> {
        self.lazy.group.get_or_init(|| {
            let gens = self.generators().iter().map(|&g| self.parent.element(g).clone()).collect();
            let elements = self.members.iter().map(|a| self.parent.element(a).clone()).collect();
            Arc::new(FiniteGroup::from_sorted(self.parent.degree(), gens, elements))
        })
    }

    fn positions(&self) -> &[usize] {
        self.lazy.positions.get_or_init(|| self.members.to_vec())
    }

    /// Maps an element of [`as_group`](Self::as_group) back into the parent.
    pub fn lift_element(&self, inner: usize) -> usize {
        self.positions()[inner]
    }

    /// Maps an element set of [`as_group`](Self::as_group) into the parent.
    pub fn lift_set(&self, inner: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.parent.order(), inner.iter().map(|i| self.lift_element(i)))
    }

    /// Maps a subgroup of [`as_group`](Self::as_group) into the parent.
    pub fn lift(&self, inner: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(inner.parent(), self.as_group()) {
            return Err(Error::ParentMismatch);
        }
        Ok(Subgroup::new_unchecked(self.parent.clone(), self.lift_set(inner.members())))
    }

    /// Pulls a parent-level subgroup contained in `self` down to [`as_group`](Self::as_group).
    pub fn restrict(&self, outer: &Subgroup) -> Result<Subgroup> {
        self.check_parent(outer)?;
        let inner = self.as_group();
        let members = ElemSet::from_indices(
            inner.order(),
            self.positions()
                .iter()
                .enumerate()
                .filter(|(_, &a)| outer.contains(a))
                .map(|(i, _)| i),
        );
        Ok(Subgroup::new_unchecked(inner.clone(), members))
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        Ok(Subgroup::new_unchecked(self.parent.clone(), self.members.intersection(&other.members)))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(other)?;
        let seed: Vec<usize> = self.generators().iter().chain(other.generators()).copied().collect();
        Ok(self.parent.subgroup_generated(seed))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members.is_subset(&other.members)
    }

    /// Normal in the parent group.
    pub fn is_normal(&self) -> bool {
        let gens = self.generators();
        self.parent
            .generator_indices()
            .iter()
            .all(|&g| gens.iter().all(|&x| self.contains(self.parent.conj(x, g))))
    }

    /// Normalized by every element of `by`.
    pub fn is_normalized_by(&self, by: impl IntoIterator<Item = usize>) -> bool {
        let gens = self.generators();
        by.into_iter().all(|g| gens.iter().all(|&x| self.contains(self.parent.conj(x, g))))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        let g = &self.parent;
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Cycle notation of every member, canonical order.
    pub fn describe(&self) -> Vec<String> {
        self.members.iter().map(|a| self.parent.element(a).to_cycle_string()).collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order(), self.parent.order())
    }
}
