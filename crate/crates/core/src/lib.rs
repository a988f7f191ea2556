//! Equivariant Tor of symmetric monomial ideals.
//!
//! An ideal `I ⊆ k[x_1,…,x_n]` stable under permuting variables is given by
//! its minimal generating partitions. For each homological index `i` and
//! partition `μ`, the orbit component `Tor_i(I)_⟨μ⟩` is a sum of induced
//! hook-shaped Specht modules whose multiplicities are reduced homology
//! dimensions of small simplicial complexes on the distinct parts of `μ`.
//!
//! ```
//! use equitor::{equivariant::equivariant_tor, FieldSpec, Partition, SymIdeal};
//!
//! let gens = vec![Partition::new(vec![4, 1, 1])?, Partition::new(vec![5, 2, 0])?];
//! let ideal = SymIdeal::new(3, gens)?;
//! let tor = equivariant_tor(&ideal, FieldSpec::RATIONALS)?;
//! assert_eq!(tor.graded_betti().totals(), vec![9, 12, 4]);
//! # Ok::<(), equitor::Error>(())
//! ```

pub mod cli;
pub mod duality;
pub mod equivariant;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod oracle;
pub mod partition;
pub mod specht;
pub mod stability;

pub use equivariant::{BettiTable, EquivariantTor, OrbitComponent};
pub use error::{Error, Result};
pub use homology::{FieldSpec, HomologyProfile, SimplicialComplex};
pub use ideal::{PlainIdeal, SymIdeal};
pub use partition::{Entry, ExtendedPartition, Multidegree, Partition};
pub use specht::{BlockSignature, Hook};
