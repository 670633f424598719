//! Group corpora: built-in families and JSON group files.

mod builtin;
mod file;

use std::path::PathBuf;

use crate::group::{DEFAULT_ELEMENT_CAP, MAX_ELEMENT_CAP};
use crate::lab::CorpusEntry;
use crate::{Error, Result};

pub use builtin::builtin;
pub use file::{load_dir, load_group, save_group, GroupFile, GroupMetadata};

/// The default built-in corpus; every member has order at most 200.
pub const CORE_CORPUS: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:4",
    "cyclic:6",
    "cyclic:8",
    "product(cyclic:2,cyclic:2)",
    "dihedral:4",
    "quaternion8",
    "dihedral:8",
    "product(cyclic:3,cyclic:3)",
    "symmetric:3",
    "dihedral:5",
    "dihedral:6",
    "dihedral:9",
    "alternating:4",
    "frobenius21",
    "sl23",
    "symmetric:4",
    "product(symmetric:3,cyclic:3)",
    "product(symmetric:3,symmetric:3)",
    "product(alternating:4,cyclic:2)",
    "product(symmetric:4,cyclic:2)",
    "product(symmetric:4,cyclic:3)",
    "product(sl23,cyclic:2)",
    "product(frobenius21,cyclic:2)",
    "alternating:5",
    "product(alternating:5,cyclic:2)",
    "product(quaternion8,symmetric:3)",
];

/// Larger groups added when the element cap is raised explicitly.
pub const EXTENDED_CORPUS: &[&str] = &["symmetric:5", "alternating:6"];

/// Where a corpus comes from and how large its members may be.
#[derive(Clone, Debug)]
pub struct CorpusConfig {
    /// Builtin names; members whose order exceeds `max_order` are dropped.
    pub builtins: Vec<String>,
    /// Directory of group files, loaded after the builtins.
    pub dir: Option<PathBuf>,
    /// Element cap for enumeration.
    pub max_order: usize,
}

impl CorpusConfig {
    /// The core built-in corpus, plus the extended tier when `max_order`
    /// was chosen explicitly.
    pub fn builtin_corpus(max_order: Option<usize>) -> Self {
        let mut builtins: Vec<String> = CORE_CORPUS.iter().map(|s| s.to_string()).collect();
        if max_order.is_some() {
            builtins.extend(EXTENDED_CORPUS.iter().map(|s| s.to_string()));
        }
        CorpusConfig { builtins, dir: None, max_order: max_order.unwrap_or(DEFAULT_ELEMENT_CAP) }
    }

    pub fn directory(dir: impl Into<PathBuf>, max_order: Option<usize>) -> Self {
        CorpusConfig {
            builtins: Vec::new(),
            dir: Some(dir.into()),
            max_order: max_order.unwrap_or(DEFAULT_ELEMENT_CAP),
        }
    }

    pub fn load(&self) -> Result<Vec<CorpusEntry>> {
        if self.max_order == 0 || self.max_order > MAX_ELEMENT_CAP {
            return Err(Error::BadParameter {
                name: "max_order".into(),
                reason: format!("must lie in 1..={MAX_ELEMENT_CAP}"),
            });
        }
        let mut entries = Vec::new();
        for name in &self.builtins {
            match builtin(name, self.max_order) {
                Ok(g) => entries.push(CorpusEntry::new(name.clone(), g)),
                Err(Error::CapExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        if let Some(dir) = &self.dir {
            entries.extend(load_dir(dir, self.max_order)?);
        }
        Ok(entries)
    }
}
