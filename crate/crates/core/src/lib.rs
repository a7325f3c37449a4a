//! Exact monomial characters of the wreath products `G(n,d) = Z/dZ ≀ S_n`.
//!
//! Values are computed two ways: by expanding determinant/permanent generating
//! functions built from the twisted variable matrices `Q_k`, and by a direct
//! induction from Young subgroups. Everything is exact over `Z[ζ_d]`.

pub mod characters;
pub mod combinatorics;
pub mod cyclotomic;
pub mod error;
pub mod genfun;
pub mod poly;
pub mod ring;
pub mod verify;
pub mod wreath;

pub use characters::{induced_char_oracle, Beta, CharacterSpec, GroupAlgebraElement, InductionOracle, OneDimChar};
pub use combinatorics::{DPartition, OrderedSetPartition, Partition};
pub use cyclotomic::CyclotomicInt;
pub use error::{Error, Result};
pub use genfun::{char_from_genfun, main_theorem_rhs, GeneratingFunction, QMatrix, SquareMatrix, Strategy};
pub use poly::{ImmPolynomial, Monomial, VarIndex};
pub use ring::ExactRing;
pub use wreath::{TwistedLetter, WreathElement, YoungSubgroupSpec};
