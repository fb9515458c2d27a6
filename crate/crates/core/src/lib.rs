//! Exact combinatorics of Dyck graphs and regular nilpotent Hessenberg
//! varieties.
//!
//! * [`hessenberg`]: Hessenberg functions and their Dyck graphs, Dyck words,
//!   staircase partitions and 312-avoiding permutations.
//! * [`symfunc`]: symmetric functions over `Z[t]` in the `m`, `e`, `h`, `s`
//!   bases, `ω`, the Hall scalar product and modified Hall–Littlewood functions.
//! * [`chromatic`]: chromatic quasisymmetric functions `X_G(t)`.
//! * [`orientations`]: acyclic orientations, their posets and linear extensions.
//! * [`tymoczko`]: Tymoczko fillings, `h`-inversions and Poincaré polynomials.
//! * [`flags`]: brute-force flag counts over prime fields.

pub mod chromatic;
pub mod flags;
pub mod hessenberg;
pub mod orientations;
pub mod partition;
pub mod poly;
pub mod symfunc;
pub mod tymoczko;

pub use hessenberg::{DyckGraph, HessenbergFunction};
pub use partition::Partition;
pub use poly::Poly;
pub use symfunc::{Basis, QSymF, SymF};
