//! Exact numbers games on generalized Cartan matrix graphs.
//!
//! [`game`] plays games with exact rational arithmetic, [`catalog`] builds
//! the finite-type diagrams and the non-admissible families, [`strategies`]
//! produces the convergent firing sequences of the finite types, and
//! [`divergence`] holds and machine-checks the certificates showing that the
//! non-admissible graphs admit games that never end.

pub mod catalog;
pub mod divergence;
pub mod game;
pub mod gcm;
pub mod position;
pub mod rational;
pub mod strategies;

pub use catalog::{
    build_finite, build_inadmissible, classify_finite, graphs_isomorphic, CatalogError, CatalogId,
    DynkinType, Family, InadmissibleFamilyId, NodeRelabeling, TriParams, TriVariant,
};
pub use divergence::{
    certificate_catalog, verify_all, verify_certificate, DivergenceCertificate, DivergenceError,
    VerifyAllReport,
};
pub use game::{
    fire, firing_map, legal_moves, play_sequence, run_game, run_outcome, FiringSequence, GameError,
    GameOutcome, GameTrace, Step, Strategy,
};
pub use gcm::{AmplitudeMatrix, GcmError, GcmGraph};
pub use position::Position;
pub use rational::Rational;
