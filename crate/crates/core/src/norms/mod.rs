//! The concrete norm constructions: the Phi-perturbed l1 norm whose unit
//! ball is `B_l1 + S_Phi(B_l2)`, the smooth base norm whose dual is
//! `||f||_1 + ||Df||_2`, and the l1-sum norm over level blocks.
//!
//! Both nontrivial gauges are evaluated exactly: the unit ball is a
//! Minkowski sum of a polytope with a diagonal ellipsoid, so the optimal
//! split of the argument is a (weighted) soft-threshold with a scalar
//! threshold, and the gauge solves a per-active-set quadratic. Each
//! evaluation returns the norming functional of the dual sphere as a
//! certificate, which downstream solvers consume as the gradient.

mod base;
mod phi;
mod wspace;

pub use base::{
    base_dual_norm, base_gauge_with_cert, base_has_sup_tie, base_norm, BaseGaugeSolution, BaseMode,
    SmoothBaseNormSpec,
};
pub use phi::{
    dual_norm_phi, phi_gauge_with_cert, primal_norm_phi, support_point_phi, PhiGaugeSolution,
    PhiSequence, SumNormSpec, SupportPoint,
};
pub use wspace::{w_dual_norm, w_norm, w_norm_with_certs, WVector};
