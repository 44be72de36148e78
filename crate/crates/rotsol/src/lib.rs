//! Exact rotational solution families for the 3-D compressible and
//! incompressible Euler equations (and their Navier-Stokes counterparts),
//! together with the machinery to verify them and to use them as manufactured
//! solutions:
//!
//! * [`exact`] — the solution families as evaluable fields with closed-form
//!   derivative jets, support geometry, and ball-integral diagnostics.
//! * [`residual`] — PDE residual assembly from field jets, a finite-difference
//!   jet oracle, and seeded bulk residual scans.
//! * [`sym`] — exact multivariate polynomial algebra over rationals used to
//!   prove the residual identities are identically zero.
//! * [`ansatz`] — reduction of the general linear velocity ansatz
//!   u = a(t) + B(t)x to quadratic-potential constraints.
//! * [`blowup`] — global-existence / finite-time-blowup classification.
//! * [`solver`] — a first-order finite-volume solver for the isentropic
//!   compressible Euler equations driven by the exact solutions, with a
//!   grid-convergence harness.

pub mod ansatz;
pub mod blowup;
pub mod exact;
pub mod linalg;
pub mod rational;
pub mod residual;
pub mod solver;
pub mod sym;

pub use exact::{
    classify_support, integrate_diagnostics, mass_ode_solve, AbcFlow, BallDiagnostics,
    BoundaryKind, CompressibleIsothermal, CompressiblePoly, DensityProfile, EvalError, FamilyTag,
    FieldJet, FluidState, IncompressibleA, IncompressibleB, PressureCoefficients, Pressureless,
    QuadratureResolution, QuadricClassification, SolutionFamily, TimeFunction, TimeJet,
};
pub use rational::Rational;
