//! Dimension bookkeeping for spaces of cuspidal nilpotent-supported
//! invariant functions on p-adic Lie algebras, and their endoscopic transfer.

pub mod arith;
pub mod cases;
pub mod depth;
pub mod diagrams;
pub mod endoscopy;
pub mod error;
pub mod fc_finite;
pub mod transfer_maps;

pub use arith::{QParam, Sign};
pub use diagrams::{AffineDiagram, DynkinType, Series};
pub use error::*;
pub use cases::{dim_fc, dim_fc_st, enumerate_X, enumerate_Y, x_st, CaseId, GroupCase, Label, XEntry, YEntry};
pub use depth::{depth_point, depth_r, DepthQuery, Rational};
pub use endoscopy::{centre_criterion, dim_fc_endo, enumerate_endo, extension_exists, EndoDatum, ExtensionQuery, Verdict};
pub use transfer_maps::{automorphism_sign, classical_dpp, order_le, phi, SignRule};
