//! Minimal positive standardizers of curve systems on the punctured disk and
//! of parabolic subgroups of spherical Artin–Tits groups.
//!
//! * [`coxeter`] enumerates finite Coxeter groups.
//! * [`garside`] is the normal-form engine over such a group.
//! * [`braid`] holds type A helpers (permutation braids, `s(i,j,k)`).
//! * [`curves`] implements Dynnikov coordinates and the rounding algorithm.
//! * [`parabolic`] computes central elements, ribbons and standardizers.
//! * [`oracle`] brute-forces the same answers for cross-checking.

pub mod atoms;
pub mod braid;
pub mod coxeter;
pub mod curves;
pub mod garside;
pub mod oracle;
pub mod parabolic;

pub use atoms::{format_word, inverse_word, parse_word, AtomSet, ParseError, Word};
pub use braid::{s_braid, BraidError, PermutationBraid};
pub use coxeter::{
    classify, is_spherical, CoxeterElement, CoxeterError, CoxeterMatrix, CoxeterTable, CoxeterType, Side, DEFAULT_CAP,
};
pub use curves::{Census, CurveError, DynnikovCoords};
pub use garside::{ArtinGroup, GarsideElement, GarsideError, LatticeOp, Order, RightNormalForm, Simple, Stats};
pub use oracle::{EnumerationBudget, OracleError, OracleMinimum};
pub use parabolic::{CentralElement, ParabolicError, ParabolicPresentation};
