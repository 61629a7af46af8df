//! Open-system dynamics of Unruh–DeWitt qubit pairs near a Kerr black hole:
//! horizon geometry, the thermal bath seen by a static detector, Markovian
//! master equations for three coupling scenarios, and the correlation
//! measures evaluated on their states.

// `!(x > 0.0)` guards are written that way so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod common_bath;
pub mod error;
pub mod geometry;
pub mod measures;
pub mod spectrum;
pub mod state;
pub mod superop;
pub mod transient;
pub mod two_bath;

pub use error::{Error, Result};
