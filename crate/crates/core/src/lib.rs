//! Combinatorial engine for the Lickorish curve system on closed orientable
//! surfaces: ribbon-graph neighbourhoods, interval enclosures, nerve and join
//! homology, and fixed-point certificates with an independent checker.

pub mod bootstrap;
pub mod curve;
pub mod lickorish;
pub mod nervecplx;
pub mod surface;

pub use curve::{Curve, CurveError, CurveSet, MAX_GENUS};
