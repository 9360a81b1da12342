//! An exactly-evaluable laboratory for imitation learning on tabular MDPs.
//!
//! Everything here is small enough to compute in closed form: occupancy
//! measures by forward recursion, policy values by backward induction,
//! optimal experts by dynamic programming, and matching objectives by
//! direct summation. That makes the usual debates about deep imitation
//! learning — does the saddle-point objective beat plain behavioral
//! cloning? what does environment interaction actually buy? — checkable
//! by computation instead of benchmark anecdote.
//!
//! The crate is organized around that goal:
//!
//! * [`mdp`] — episodic tabular MDPs, policies, occupancy measures, exact
//!   policy evaluation (two independent routes, cross-checked).
//! * [`envs`] — four small environment families with known structure and
//!   an exact optimal-expert solver.
//! * [`datasets`] — demonstration collection, subsampling, visitation
//!   counts, and a plain-text serialization format.
//! * [`bc`] — behavioral cloning: counting estimators and a linear-softmax
//!   maximum-likelihood trainer.
//! * [`valuedice`] — the saddle-point distribution-matching objective in
//!   offline, γ = 0, and mixed online forms, with an alternating
//!   descent-ascent solver and exact diagnostics.
//! * [`matching`] — ℓ1 occupancy matching, cost-to-go decompositions, and
//!   a brute-force certificate that counting is the unique optimum.
//! * [`experiments`] — the configured experiment suite behind the `ilab`
//!   command-line tool.

pub mod bc;
pub mod datasets;
pub mod envs;
pub mod error;
pub mod experiments;
pub mod matching;
pub mod mdp;
pub mod valuedice;

pub use error::{Error, Result};
