//! Quotients realized as permutation groups on cosets.

use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::set::ElemSet;
use crate::subgroup::Subgroup;
use crate::{Error, Result};

/// `G → G/N`, with the image acting on the cosets of `N`.
///
/// Cosets are numbered by their least element, so coset 0 is `N` itself.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Arc<FiniteGroup>,
    kernel: Subgroup,
    image: Arc<FiniteGroup>,
    projection: Vec<usize>,
    section: Vec<usize>,
}

impl QuotientMap {
    pub fn new(kernel: &Subgroup) -> Result<QuotientMap> {
        if !kernel.is_normal() {
            return Err(Error::NotNormal);
        }
        let g = kernel.parent().clone();
        let n = g.order();

        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for k in kernel.elements() {
                coset_of[g.mul(a, k)] = id;
            }
        }
        let index = reps.len();

        let action = |h: usize| -> Permutation {
            let images = reps.iter().map(|&r| coset_of[g.mul(r, h)]).collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = g.generator_indices().iter().map(|&h| action(h)).collect();
        let image = FiniteGroup::generate_with_cap(index, gens, usize::MAX)?;
        debug_assert_eq!(image.order(), index);

        let projection: Vec<usize> = (0..n)
            .map(|h| image.index_of(&action(h)).expect("image element"))
            .collect();
        let mut section = vec![usize::MAX; image.order()];
        for (h, &img) in projection.iter().enumerate() {
            if section[img] == usize::MAX {
                section[img] = h;
            }
        }

        Ok(QuotientMap { source: g, kernel: kernel.clone(), image, projection, section })
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &Arc<FiniteGroup> {
        &self.image
    }

    pub fn project(&self, a: usize) -> usize {
        self.projection[a]
    }

    /// Least element of the coset mapping to `img`.
    pub fn section(&self, img: usize) -> usize {
        self.section[img]
    }

    pub fn project_set(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.image.order(), set.iter().map(|a| self.project(a)))
    }

    pub fn project_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(h.parent(), &self.source) {
            return Err(Error::ParentMismatch);
        }
        Ok(self.image.subgroup_generated(h.generators().iter().map(|&a| self.project(a))))
    }

    /// Full preimage of an image-level subgroup.
    pub fn preimage(&self, h: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(h.parent(), &self.image) {
            return Err(Error::ParentMismatch);
        }
        let members = ElemSet::from_indices(
            self.source.order(),
            (0..self.source.order()).filter(|&a| h.contains(self.project(a))),
        );
        Ok(Subgroup::new_unchecked(self.source.clone(), members))
    }
}
