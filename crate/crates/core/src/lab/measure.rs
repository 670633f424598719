use rayon::prelude::*;
use serde::Serialize;

use crate::star::{star_set, StarVariant};

use super::CorpusEntry;

/// Size `m` of a star-commutator set next to the order of the subgroup it generates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcisenessRow {
    pub group_id: String,
    pub order: usize,
    pub variant: StarVariant,
    pub k: usize,
    pub m: usize,
    pub subgroup_order: usize,
}

/// Rows for γ levels `1..=k_max` followed by δ levels `0..=k_max`.
pub fn measure_conciseness(entry: &CorpusEntry, k_max: usize) -> Vec<ConcisenessRow> {
    let mut rows = Vec::new();
    for variant in [StarVariant::Gamma, StarVariant::Delta] {
        for k in variant.base_level()..=k_max {
            let set = star_set(&entry.group, variant, k).expect("level at or above base");
            rows.push(ConcisenessRow {
                group_id: entry.id.clone(),
                order: entry.group.order(),
                variant,
                k,
                m: set.size(),
                subgroup_order: set.subgroup().order(),
            });
        }
    }
    rows
}

pub fn conciseness_table(entries: &[CorpusEntry], k_max: usize) -> Vec<ConcisenessRow> {
    let per_entry: Vec<Vec<ConcisenessRow>> =
        entries.par_iter().map(|e| measure_conciseness(e, k_max)).collect();
    per_entry.into_iter().flatten().collect()
}
