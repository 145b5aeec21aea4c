use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The linear structures the crate knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    Symplectic,
    Presymplectic,
    Cosymplectic,
    Precosymplectic,
    KSymplectic,
    KPresymplectic,
    KCosymplectic,
    KPrecosymplectic,
    Multisymplectic,
}

impl StructureKind {
    pub const ALL: [StructureKind; 9] = [
        StructureKind::Symplectic,
        StructureKind::Presymplectic,
        StructureKind::Cosymplectic,
        StructureKind::Precosymplectic,
        StructureKind::KSymplectic,
        StructureKind::KPresymplectic,
        StructureKind::KCosymplectic,
        StructureKind::KPrecosymplectic,
        StructureKind::Multisymplectic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Symplectic => "symplectic",
            StructureKind::Presymplectic => "presymplectic",
            StructureKind::Cosymplectic => "cosymplectic",
            StructureKind::Precosymplectic => "precosymplectic",
            StructureKind::KSymplectic => "k-symplectic",
            StructureKind::KPresymplectic => "k-presymplectic",
            StructureKind::KCosymplectic => "k-cosymplectic",
            StructureKind::KPrecosymplectic => "k-precosymplectic",
            StructureKind::Multisymplectic => "multisymplectic",
        }
    }

    /// Whether the structure carries one-forms `η^α`.
    pub fn has_etas(self) -> bool {
        matches!(
            self,
            StructureKind::Cosymplectic
                | StructureKind::Precosymplectic
                | StructureKind::KCosymplectic
                | StructureKind::KPrecosymplectic
        )
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown structure kind {0:?}")]
pub struct UnknownKind(pub String);

impl FromStr for StructureKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}
