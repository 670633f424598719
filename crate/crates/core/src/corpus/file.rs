//! JSON group files.
//!
//! ```json
//! {"group_id": "s3", "degree": 3, "generators": [[1,0,2],[1,2,0]],
//!  "metadata": {"name": "Sym(3)", "expected_order": 6}}
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::lab::CorpusEntry;
use crate::perm::Permutation;
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub group_id: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub metadata: GroupMetadata,
}

impl GroupFile {
    pub fn from_entry(entry: &CorpusEntry) -> GroupFile {
        GroupFile {
            group_id: entry.id.clone(),
            degree: entry.group.degree(),
            generators: entry.group.generators().iter().map(Permutation::images).collect(),
            metadata: GroupMetadata { name: None, expected_order: Some(entry.group.order()) },
        }
    }

    /// Enumerates the group, validating every row and the expected order.
    pub fn into_entry(self, cap: usize) -> Result<CorpusEntry> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for row in self.generators {
            if row.len() != self.degree {
                return Err(Error::DegreeMismatch { left: self.degree, right: row.len() });
            }
            gens.push(Permutation::from_images(row)?);
        }
        let group = FiniteGroup::generate_with_cap(self.degree, gens, cap)?;
        if let Some(expected) = self.metadata.expected_order {
            if expected != group.order() {
                return Err(Error::OrderMismatch { expected, actual: group.order() });
            }
        }
        Ok(CorpusEntry::new(self.group_id, group))
    }
}

fn json_error(path: &Path) -> impl FnOnce(serde_json::Error) -> Error + '_ {
    move |source| Error::Json { path: path.to_path_buf(), source }
}

pub fn load_group(path: impl AsRef<Path>, cap: usize) -> Result<CorpusEntry> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let file: GroupFile = serde_json::from_str(&text).map_err(json_error(path))?;
    file.into_entry(cap)
}

pub fn save_group(entry: &CorpusEntry, path: impl AsRef<Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&GroupFile::from_entry(entry))?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Every `*.json` file in `dir`, in file-name order.
pub fn load_dir(dir: impl AsRef<Path>, cap: usize) -> Result<Vec<CorpusEntry>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    paths.iter().map(|p| load_group(p, cap)).collect()
}
