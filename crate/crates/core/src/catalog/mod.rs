//! Finite-type Dynkin diagrams, the non-admissible families, and labeled
//! graph isomorphism.

mod finite;
mod inadmissible;
mod iso;

use thiserror::Error;

pub use finite::{build_finite, DynkinType, Family};
pub use inadmissible::{build_inadmissible, InadmissibleFamilyId, TriParams, TriVariant};
pub use iso::{graphs_isomorphic, NodeRelabeling};

use crate::gcm::GcmGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("rank out of range for {0}")]
    RankOutOfRange(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("graph is not connected")]
    NotConnected,
}

/// Identifies `g` as a finite-type diagram. The relabeling maps each node of
/// `g` to its number in [`build_finite`].
pub fn classify_finite(g: &GcmGraph) -> Result<Option<(DynkinType, NodeRelabeling)>, CatalogError> {
    if !g.is_connected() {
        return Err(CatalogError::NotConnected);
    }
    for t in DynkinType::all_of_rank(g.n()) {
        if let Some(sigma) = graphs_isomorphic(g, &build_finite(t)) {
            return Ok(Some((t, sigma)));
        }
    }
    Ok(None)
}

/// Either kind of catalog graph, addressed by its stable string id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogId {
    Finite(DynkinType),
    Inadmissible(InadmissibleFamilyId),
}

impl CatalogId {
    pub fn parse(s: &str) -> Result<Self, CatalogError> {
        match s.parse::<DynkinType>() {
            Ok(t) => Ok(CatalogId::Finite(t)),
            Err(CatalogError::RankOutOfRange(e)) => Err(CatalogError::RankOutOfRange(e)),
            Err(_) => s.parse().map(CatalogId::Inadmissible),
        }
    }

    pub fn build(self) -> Result<GcmGraph, CatalogError> {
        match self {
            CatalogId::Finite(t) => Ok(build_finite(t)),
            CatalogId::Inadmissible(id) => build_inadmissible(id),
        }
    }
}

impl std::fmt::Display for CatalogId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogId::Finite(t) => t.fmt(f),
            CatalogId::Inadmissible(id) => id.fmt(f),
        }
    }
}
