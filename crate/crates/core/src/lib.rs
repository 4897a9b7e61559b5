//! Exact computations with finite commutative rings: extensions, lattices of
//! intermediate subalgebras, minimal extensions, closures, CRT families,
//! idealizations and the related counting results.

pub mod closures;
pub mod combinatorics;
pub mod crt;
pub mod elemset;
pub mod error;
pub mod extension;
pub mod ideal;
pub mod idealization;
pub mod lattice;
pub mod limits;
pub mod minimal;
pub mod module;
pub mod poly;
pub mod predicates;
pub mod ring;
pub mod spectrum;
pub mod suite;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use ideal::{all_ideals, colon, ideal_generated, Ideal};
pub use poly::Poly;
pub use ring::{FiniteRing, RingElem, RingHom};
pub use extension::{Extension, SubExtension, Subalgebra};
pub use lattice::{intermediate_algebras, LatticeReport};
