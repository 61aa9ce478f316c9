//! Data files shipped in the repository's `fixtures/` directory, embedded
//! at compile time.

use std::path::PathBuf;

use crate::map2d::Map2D;
use crate::paving::Paving;

pub const P1_JSON: &str = include_str!("../../../fixtures/p1.json");
pub const P2_JSON: &str = include_str!("../../../fixtures/p2.json");
pub const P3_JSON: &str = include_str!("../../../fixtures/p3.json");
pub const P4_JSON: &str = include_str!("../../../fixtures/p4.json");
pub const P5_JSON: &str = include_str!("../../../fixtures/p5.json");
/// Figure-eight gluing of two tetrahedra, in quadruple form on 24 darts.
pub const THURSTON_JSON: &str = include_str!("../../../fixtures/thurston.json");

pub const TETRAHEDRON_MAP_JSON: &str = include_str!("../../../fixtures/maps/tetrahedron.json");
pub const SINGLE_EDGE_MAP_JSON: &str = include_str!("../../../fixtures/maps/single_edge.json");
pub const TORUS_MAP_JSON: &str = include_str!("../../../fixtures/maps/torus.json");

/// Rooted counts, `n` = half the number of darts.
pub const A005411_BFILE: &str = include_str!("../../../fixtures/A005411.txt");
/// Unlabelled counts, `n` = half the number of darts.
pub const A002831_BFILE: &str = include_str!("../../../fixtures/A002831.txt");

/// Source location of the fixture directory.
pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn paving(json: &str) -> Paving {
    serde_json::from_str(json).expect("shipped fixture is a valid paving")
}

fn map(json: &str) -> Map2D {
    serde_json::from_str(json).expect("shipped fixture is a valid map")
}

/// The five pavings on at most four darts, in order `P₁ … P₅`.
pub fn small_pavings() -> [Paving; 5] {
    [P1_JSON, P2_JSON, P3_JSON, P4_JSON, P5_JSON].map(paving)
}

/// Expected f-vectors of [`small_pavings`].
pub const SMALL_PAVING_F_VECTORS: [[usize; 4]; 5] =
    [[1, 1, 1, 1], [2, 2, 1, 1], [1, 1, 1, 1], [1, 1, 2, 2], [2, 1, 1, 2]];

pub fn thurston() -> Paving {
    paving(THURSTON_JSON)
}

pub fn tetrahedron_map() -> Map2D {
    map(TETRAHEDRON_MAP_JSON)
}

pub fn single_edge_map() -> Map2D {
    map(SINGLE_EDGE_MAP_JSON)
}

pub fn torus_map() -> Map2D {
    map(TORUS_MAP_JSON)
}
