//! Exact arithmetic for the reciprocal quintinomial family
//!
//! ```text
//!     F[n,A,B](x) = x^(2^n) + A x^(3·2^(n-2)) + B x^(2^(n-1)) + A x^(2^(n-2)) + 1
//! ```
//!
//! with `n >= 2` and `A·B != 0`.  Everything is computed over the integers —
//! no floating point is involved anywhere, so every verdict this crate emits
//! is exact and (where feasible) comes with a checkable witness.
//!
//! The main capabilities, by module:
//!
//! * [`poly`] — dense integer polynomials, subresultant resultants and
//!   discriminants.
//! * [`modp`] — polynomials over prime fields and seeded Cantor–Zassenhaus
//!   factorization.
//! * [`quin`] — construction of the family, the invariants `W1, W2, W3`,
//!   the closed-form discriminant, and irreducibility decisions that return
//!   explicit factorizations as certificates.
//! * [`dedekind`] — Dedekind's index criterion at a prime, and the budgeted
//!   monogenicity verdicts built on top of it.
//! * [`galois`] — Galois class of the quartic (`C4` vs `D4`) and of the octic
//!   (wreath class), with square-test or Frobenius evidence.
//! * [`density`] — local obstruction scans, truncated squarefree density
//!   constants, and squarefree counts along prime arguments.
//! * [`lucas`] — Lucas/Fibonacci numbers, the Pell equation `X² − 5Y² = −4`,
//!   and the fixed point/residual tables used by the uniqueness arguments.
//! * [`search`] — grid classification and the one-parameter monogenic `D4`
//!   family, with field-discriminant partitioning.
//! * [`verify`] — the self-check suite: every headline claim above is
//!   re-derived at runtime against independent brute-force oracles.
//!
//! The `examples/` directory of this crate is the best starting point; each
//! example is runnable on its own, e.g.
//!
//! ```text
//! cargo run --release --example monogenic_quartics
//! cargo run --release --example squarefree_density
//! ```
//!
//! A thin command-line binary exposes the same functionality as subcommands
//! (`classify`, `search`, `family`, `density`, `pell`, `verify`); run
//! `quintinomial --help` for the surface.

pub mod arith;
pub mod cli;
pub mod dedekind;
pub mod density;
pub mod error;
pub mod galois;
pub mod lucas;
pub mod modp;
pub mod oracle;
pub mod poly;
pub mod quin;
pub mod search;
pub mod verify;

pub use error::Error;
pub use poly::IntPoly;
pub use quin::{QuinInvariants, QuinParams};

/// Convenient alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, Error>;
