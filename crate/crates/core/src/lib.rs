//! Exact computation of generalized `ℓ`-blocks for symmetric groups, the
//! normalizer `N_{S_ℓ}(Z_ℓ)`, and wreath products `H ≀ S_w`.
//!
//! All character values live in cyclotomic fields and are handled exactly
//! ([`Cyclotomic`]); block membership is a zero/nonzero decision on exact
//! contributions, never a floating point threshold.
//!
//! The main entry points are:
//!
//! * [`partition`]: partitions, hooks, `ℓ`-cores and `ℓ`-quotients on the abacus;
//! * [`symmetric`]: character tables of `S_n` via Murnaghan–Nakayama;
//! * [`normalizer`]: the group `Z_ℓ ⋊ Aut(Z_ℓ)` and its Clifford-theoretic table;
//! * [`wreath`]: classes and characters of `H ≀ S_w`, plus a brute-force oracle;
//! * [`blocks`]: contributions and block partitions;
//! * [`isometry`]: the isometry checks between principal blocks.

pub mod blocks;
pub mod cyclotomic;
pub mod error;
pub mod group_spec;
pub mod isometry;
pub mod normalizer;
pub mod numtheory;
pub mod partition;
pub mod sylow;
pub mod symmetric;
pub mod table;
pub mod wreath;

pub use blocks::{block_partition, contribution, BlockPartition, ContributionMatrix};
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use partition::{HookCell, MultiPartition, Partition};
pub use table::{CharacterTable, GroupData, Label};
