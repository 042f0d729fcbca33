//! Finite-field linear algebra, polynomial tools and matrix-group
//! enumeration for verifying explicit (2,3)-generating pairs of `SL_n(q)` and
//! `SU_n(q^2)` in dimensions 3 and 5.

pub mod engine;
pub mod error;
pub mod ff;
pub mod matgrp;
pub mod paperlib;
pub mod polyring;
pub mod report;
pub mod reptools;

pub use error::{Error, Result};
pub use ff::{Elem, Field};
pub use matgrp::Matrix;
pub use polyring::{BivarPoly, FieldPoly, IntPoly};
pub use report::{Check, ClaimReport};
