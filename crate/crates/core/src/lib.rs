//! Exact computation of extended quotients for finite groups acting on
//! complex tori, with the Weyl-group, Clifford-theory and Springer machinery
//! needed to label the unramified principal series of split reductive groups.

pub mod cli;
pub mod clifford;
pub mod cyclotomic;
pub mod error;
pub mod exquo;
pub mod fingrp;
pub mod intlat;
pub mod langlands;
pub mod torus;
pub mod weyl;

pub use error::{Error, Result};
