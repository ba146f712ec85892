//! Finite groups, wreath products and the embeddings of groups with a
//! normal subgroup (or a subgroup of finite index) into them, together with
//! exact multiquadratic field arithmetic and wreath size formulas.

pub mod action;
pub mod checks;
pub mod embeddings;
pub mod error;
pub mod fields;
pub mod group;
pub mod sizes;
pub mod wreath;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupHom, Section};
