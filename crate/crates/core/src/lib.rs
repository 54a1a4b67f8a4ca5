//! Exact computation of the weighted quasisymmetric enumerator `F_q(C(P))`
//! of a poset cone.
//!
//! The crate is organised bottom-up:
//!
//! * [`poset`]: finite posets on `{1..n}`, flags of ideals, quotients,
//!   linear extensions, positivity of subposets, canonical forms and
//!   exhaustive generation of small isomorphism classes.
//! * [`qsym`]: quasisymmetric functions over `ℤ[q]` in the monomial basis,
//!   with the quasi-shuffle and concatenation products, the deconcatenation
//!   coproduct, the antipode, the fundamental basis, principal
//!   specialization and expansion in finitely many variables.
//! * [`enumerator`]: `F_q(C(P))` as a sum over flags of ideals, its `q = 0`
//!   part `F(P)`, f-polynomials, P-partitions and the identities relating
//!   them.
//! * [`oracle`]: brute-force geometry used to check the enumerator: integer
//!   points of the normal fan and face lattices.
//!
//! ```
//! use poset_cone::{enumerator::fq_poset_cone, poset::Poset};
//!
//! let k22 = Poset::complete_bipartite(2, 2);
//! assert_eq!(
//!     fq_poset_cone(&k22).to_string(),
//!     "q^3*M[4] + 2q^2*M[1,3] + M[2,2] + 2q^2*M[3,1] + 2*M[1,1,2] + 4q*M[1,2,1] + 2*M[2,1,1] + 4*M[1,1,1,1]"
//! );
//! ```
//!
//! The exhaustive kernels run on rayon when the `parallel` feature (on by
//! default) is enabled; see [`par::Strategy`].

pub mod enumerator;
pub mod error;
pub mod oracle;
pub mod par;
pub mod poset;
pub mod qsym;
pub mod survey;
pub mod verify;

pub use error::{Error, Result};
