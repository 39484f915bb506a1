//! Decides whether a quiver setting `(Q, d)` has finitely or infinitely many
//! isomorphism classes of representations, with checkable certificates.
//!
//! Two independent routes answer the question and are cross-checked:
//!
//! * [`euclid::find_euclidean_witness`] searches `Q` directly for a Euclidean
//!   subquiver `Q'` whose radical vector fits under `d`;
//! * [`tits::decide_by_tits`] looks for a nonzero `d' ≤ d` with non-positive
//!   Tits form and reduces it to such a subquiver.
//!
//! [`algebra`] applies the classification to radical-square-zero algebras and
//! [`fq`] counts orbits over small prime fields as an empirical check.

pub mod algebra;
pub mod budget;
pub mod classify;
pub mod error;
pub mod euclid;
pub mod format;
pub mod fq;
pub mod quiver;
pub mod tits;
pub mod witness;

pub use algebra::{
    algebra_to_setting, check_or_conditions, finitely_many_orbits, is_distributive, setting_to_algebra, AlgebraSpec,
    BipartiteSetting, MultTable, OrReport,
};
pub use budget::Budget;
pub use classify::{classify, is_minimal_infinite, Mode};
pub use error::{Error, Result};
pub use euclid::{find_euclidean_witness, radical_vector, recognize_euclidean, EuclideanType};
pub use format::{parse_algebra, parse_setting, serialize_setting};
pub use fq::{count_orbits, growth_signal, Growth};
pub use quiver::{Arrow, DimVector, Embedding, Quiver, QuiverSetting};
pub use tits::{decide_by_tits, find_subroot, reduce_to_radical};
pub use witness::{EuclideanWitness, SubrootWitness, Verdict, Witness};
