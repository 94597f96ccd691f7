//! Möbius inversion for finite categories, generic over the coefficient rig.
//!
//! The crate is organised bottom-up: coefficient rigs and matrices, finite
//! categories and functors, the three incidence algebras, patchwise inversion
//! for locally finite infinite categories, enriched zeta functions, functorial
//! transfer of incidence algebras, and determinants over rigs.

pub mod category;
pub mod cli;
pub mod corpus;
pub mod enriched;
pub mod functoriality;
pub mod incidence;
pub mod infinite;
pub mod matrix;
pub mod matrixrig;
pub mod par;
pub mod rig;
