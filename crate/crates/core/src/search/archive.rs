use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::format::write_record;
use crate::multigraph::{CanonicalForm, Multigraph};

/// An archived multigraph (in canonical labelling) with the extension
/// steps that first reached it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub graph: Multigraph,
    pub provenance: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub opened: u64,
    pub gate_failed: u64,
    pub recorded: u64,
    pub cache_hits: u64,
    pub solved_hits: u64,
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "opened {} gate-fail {} recorded {} cache-hit {} solved-hit {}",
            self.opened, self.gate_failed, self.recorded, self.cache_hits, self.solved_hits
        )
    }
}

/// The recorded family, keyed and ordered by canonical form.
#[derive(Debug, Clone, Default)]
pub struct FamilyArchive {
    pub members: BTreeMap<CanonicalForm, Member>,
    /// False when the budget ran out before every branch closed.
    pub complete: bool,
    pub stats: SearchStats,
}

impl FamilyArchive {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn forms(&self) -> BTreeSet<CanonicalForm> {
        self.members.keys().cloned().collect()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Multigraph> {
        self.members.values().map(|m| &m.graph)
    }

    /// Record name of the `i`-th member.
    pub fn name(i: usize) -> String {
        format!("F{:04}", i + 1)
    }

    /// Records in canonical order, each preceded by a provenance comment.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.members.values().enumerate() {
            out.push_str(&format!("# {}\n", m.provenance.join("; ")));
            out.push_str(&write_record(&Self::name(i), &m.graph));
            out.push('\n');
        }
        out
    }
}
