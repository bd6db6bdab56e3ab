//! Executable forms of the counting lemmas, observations and product bounds.
//!
//! Every comparison is carried out on exact rationals. Each check yields a
//! [`CheckReport`] holding one [`CheckOutcome`] per inequality instance (the
//! global form plus every per-fiber form), with a locator pointing at the
//! fiber or cell involved.

mod checks;
mod rational;

pub use checks::*;
pub use rational::Rational;
