//! SL(2,ℂ) character varieties of torus knot groups `G(m,n) = ⟨x, y | xᵐ = yⁿ⟩`.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`]: complex 2×2 arithmetic, eigen-decomposition, projective brackets.
//! * [`modular`]: knot types, component enumeration, and the CRT bookkeeping that
//!   locates where irreducible lines meet the reducible line.
//! * [`reps`]: explicit representation families, the reducibility classifier,
//!   semisimplification and cross-ratio recovery.
//! * [`variety`]: the trace embedding `ρ ↦ (tr A, tr B, tr AB)`, full
//!   enumeration, tangents and point classification.
//! * [`tool`]: the randomized verification suite, JSON/SVG output and the CLI.
//!
//! ```
//! use torus_charvar::{modular::KnotType, variety::enumerate_variety};
//!
//! let trefoil = KnotType::new(2, 3).unwrap();
//! let v = enumerate_variety(trefoil).unwrap();
//! assert_eq!(v.counts.irr_lines, 1);
//! assert_eq!(v.counts.intersection_points, 2);
//! ```

pub mod error;
pub mod matrix;
pub mod modular;
pub mod reps;
pub mod tool;
pub mod variety;

pub use error::{Error, Result};
pub use matrix::Complex;

/// Absolute tolerances shared by every module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// `|det − 1|` accepted when building a unimodular matrix.
    pub construct: f64,
    /// `|tr² − 4|` at or below which eigenvalues are treated as repeated.
    pub degenerate: f64,
    /// Entrywise comparison against `±Id`.
    pub entry: f64,
    /// `‖Aᵐ − Bⁿ‖_max` accepted for a representation, scaled by the squared
    /// entry size of the generators once it exceeds 1.
    pub relation: f64,
    /// Relative `|[Bv, v]| / (|Bv||v|)` below which `v` counts as an eigenvector of `B`.
    pub eigenline: f64,
    /// Distance of an eigenvalue from the nearest admissible root of unity.
    pub root_of_unity: f64,
    /// Membership in a component, measured in trace coordinates.
    pub membership: f64,
    /// Merging of reducible solutions by their `s` coordinate.
    pub dedup: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            construct: 1e-9,
            degenerate: 1e-12,
            entry: 1e-9,
            relation: 1e-8,
            eigenline: 1e-8,
            root_of_unity: 1e-8,
            membership: 1e-9,
            dedup: 1e-9,
        }
    }
}
