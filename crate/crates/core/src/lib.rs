//! Three-dimensional combinatorial maps ("pavings") on `n` darts and the
//! free subgroups of `Z2 * Z2 * Z2` they encode.
//!
//! * [`perm`]: permutations, orbit counting, involution streams.
//! * [`map2d`]: oriented 2D maps and their Euler characteristic.
//! * [`paving`]: pavings, f-vectors, canonical forms, coset graphs and the
//!   mirror-double construction.
//! * [`enumerate`]: the exhaustive oracle over involution triples.
//! * [`series`]: exact counting series (rooted, unlabelled) and asymptotics.
//! * [`format`]: JSON files and OEIS b-files.
//! * [`verify`]: the cross-method consistency suite.

pub mod enumerate;
pub mod fixtures;
pub mod format;
pub mod map2d;
pub mod paving;
pub mod perm;
pub mod series;
pub mod verify;

pub use enumerate::{
    count_conjugacy_classes, count_free_subgroups, enumerate_pavings, EnumerateConfig, EnumerationReport,
};
pub use map2d::{Map2D, MapStats};
pub use paving::{CosetGraph, Paving, PavingStats};
pub use perm::{CycleType, Permutation};
pub use series::Series;
