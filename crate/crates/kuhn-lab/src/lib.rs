//! A desk-scale laboratory for three-player, one-third-street Kuhn poker.
//!
//! The crate is organised around four subsystems:
//!
//! - [`game`] — deals, the betting tree, terminal payoffs and exact
//!   ex-showdown expectations (closed forms plus an enumeration oracle,
//!   both available in `f64` and exact rational arithmetic).
//! - [`equilibrium`] — the closed-form equilibrium families of the full
//!   game and its simplified variant (SKP), a numeric support-enumeration
//!   scan over constraint branches, equilibrium expectations, and the
//!   restricted maxmin table.
//! - [`ode`] — the continuous-time frequency-adjustment model: adaptive
//!   Runge-Kutta integration, fixed-point classification, an in-plane
//!   conserved quantity, and stable-manifold tracing.
//! - [`sim`] — the discrete repeated-play model: seeded dealing over the
//!   twelve simulation deals, sliding observation windows, frequency
//!   estimators, and the difference-equation strategy updates.
//!
//! [`io`] holds the CSV/JSON readers and writers shared with the CLI.

pub mod equilibrium;
pub mod game;
pub mod io;
pub mod ode;
pub mod scalar;
pub mod sim;

pub use scalar::{Rational, Scalar};
