//! Graded commutative-algebra kernel.
//!
//! Exact multivariate polynomial arithmetic over the rationals or a prime
//! field, Groebner bases for submodules of graded free modules, Koszul
//! complexes and their homology, minimal graded free resolutions, and the
//! homological invariants built on top of them (depth, grade, projective
//! dimension, Ext, Bass numbers, local-cohomology Hilbert functions).
//!
//! The crate is `no_std`-compatible (`alloc` required); everything that
//! touches the filesystem or the process environment lives in the companion
//! CLI crate. The one extension point is [`groebner::GbStore`], a key/value
//! trait the companion implements with an on-disk cache.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod complex;
pub mod degreewise;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod module;
pub mod parse;
pub mod poly;
pub mod presented;
pub mod resolution;
pub mod ring;
pub mod syzygy;
pub mod verifier;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp64, Rationals};
pub use ring::{Monomial, MonomialOrder, Ring, RingData, RingSpec};
