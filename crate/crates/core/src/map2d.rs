//! Oriented two-dimensional combinatorial maps `⟨D; α, σ⟩`.
//!
//! `α` pairs darts into edges, `σ` rotates darts around vertices and the
//! faces are the cycles of `σ⁻¹α`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{self, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("alpha is not an involution")]
    AlphaNotInvolution,
    #[error("declared dart count {declared} but {which} acts on {found} darts")]
    DartCount {
        declared: usize,
        which: &'static str,
        found: usize,
    },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A 2D oriented combinatorial map. `alpha` may have fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Map2D {
    n: usize,
    alpha: Permutation,
    sigma: Permutation,
}

#[derive(Deserialize)]
struct RawMap {
    n: usize,
    alpha: Permutation,
    sigma: Permutation,
}

impl<'de> Deserialize<'de> for Map2D {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawMap::deserialize(deserializer)?;
        Map2D::with_darts(raw.n, raw.alpha, raw.sigma).map_err(serde::de::Error::custom)
    }
}

impl Map2D {
    pub fn new(alpha: Permutation, sigma: Permutation) -> Result<Self, MapError> {
        Self::with_darts(alpha.len(), alpha, sigma)
    }

    pub fn with_darts(n: usize, alpha: Permutation, sigma: Permutation) -> Result<Self, MapError> {
        for (which, p) in [("alpha", &alpha), ("sigma", &sigma)] {
            if p.len() != n {
                return Err(MapError::DartCount {
                    declared: n,
                    which,
                    found: p.len(),
                });
            }
        }
        if !alpha.is_involution() {
            return Err(MapError::AlphaNotInvolution);
        }
        Ok(Map2D { n, alpha, sigma })
    }

    pub fn darts(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// The face permutation `σ⁻¹α`.
    pub fn face_permutation(&self) -> Permutation {
        self.sigma
            .inverse()
            .compose(&self.alpha)
            .expect("alpha and sigma share a dart set")
    }

    pub fn is_connected(&self) -> bool {
        perm::is_transitive(&[&self.alpha, &self.sigma], self.n).expect("validated sizes")
    }

    /// Simultaneous conjugation `(π⁻¹απ, π⁻¹σπ)`.
    pub fn conjugate(&self, by: &Permutation) -> Result<Map2D, MapError> {
        Ok(Map2D {
            n: self.n,
            alpha: self.alpha.conjugate(by)?,
            sigma: self.sigma.conjugate(by)?,
        })
    }

    /// Dart sets of the connected components, each sorted, ordered by
    /// smallest dart.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = perm::orbit_partition(&[&self.alpha, &self.sigma], self.n).expect("validated sizes");
        let labels = uf.labels();
        let mut out = vec![Vec::new(); uf.classes()];
        for (dart, &c) in labels.iter().enumerate() {
            out[c].push(dart);
        }
        out
    }

    /// The sub-map carried by `darts`, relabelled `0..darts.len()` in the
    /// given order. `darts` must be a union of components.
    pub fn restrict(&self, darts: &[usize]) -> Map2D {
        let mut index = vec![usize::MAX; self.n];
        for (k, &d) in darts.iter().enumerate() {
            index[d] = k;
        }
        let pick = |p: &Permutation| {
            Permutation::from_images_unchecked(darts.iter().map(|&d| index[p.apply(d)]).collect())
        };
        Map2D {
            n: darts.len(),
            alpha: pick(&self.alpha),
            sigma: pick(&self.sigma),
        }
    }

    pub fn stats(&self) -> MapStats {
        map_stats(self)
    }

    /// Isomorphism-class representative of a connected map; `None` when
    /// the map is empty or disconnected.
    pub fn canonical_form(&self) -> Option<Map2D> {
        if !self.is_connected() {
            return None;
        }
        let mut gens = perm::canonical_labeling(&[&self.alpha, &self.sigma]).gens;
        let sigma = gens.pop()?;
        let alpha = gens.pop()?;
        Some(Map2D {
            n: self.n,
            alpha,
            sigma,
        })
    }

    /// The same map with reversed orientation, `⟨D; α, σ⁻¹⟩`.
    pub fn mirror(&self) -> Map2D {
        Map2D {
            n: self.n,
            alpha: self.alpha.clone(),
            sigma: self.sigma.inverse(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub euler_characteristic: i64,
    /// Genus of each component in component order; `None` if some
    /// component has odd or positive-above-2 characteristic.
    pub genus_per_component: Option<Vec<usize>>,
}

fn counts(m: &Map2D) -> (usize, usize, usize) {
    let faces = perm::orbit_count(&[&m.face_permutation()], m.n).expect("validated sizes");
    let edges = perm::orbit_count(&[&m.alpha], m.n).expect("validated sizes");
    let vertices = perm::orbit_count(&[&m.sigma], m.n).expect("validated sizes");
    (vertices, edges, faces)
}

pub fn map_stats(m: &Map2D) -> MapStats {
    let (vertices, edges, faces) = counts(m);
    let components = m.components();
    let genus_per_component = components
        .iter()
        .map(|darts| {
            let (v, e, f) = counts(&m.restrict(darts));
            let chi = f as i64 - e as i64 + v as i64;
            (chi <= 2 && chi % 2 == 0).then(|| ((2 - chi) / 2) as usize)
        })
        .collect();
    MapStats {
        vertices,
        edges,
        faces,
        components: components.len(),
        euler_characteristic: faces as i64 - edges as i64 + vertices as i64,
        genus_per_component,
    }
}

pub fn is_connected(m: &Map2D) -> bool {
    m.is_connected()
}
