//! Three-dimensional combinatorial maps ("pavings").
//!
//! A paving on `n` darts is a triple `(α, β, γ)` of fixed-point-free
//! involutions. The equivalent quadruple form `⟨D; α, σ, φ⟩` is recovered
//! with `φ = αβ` and `σ = γαβ`; conversely `β = αφ` and `γ = σφ⁻¹`.
//! Both forms are accepted and both are kept on the value.
//!
//! Cell counts of the realised complex:
//!
//! | cells | orbits of   |
//! |-------|-------------|
//! | f₃    | `⟨α, σ⟩`    |
//! | f₂    | `⟨σ⁻¹α, φ⁻¹σ⟩` |
//! | f₁    | `⟨α, φ⟩`    |
//! | f₀    | `⟨σ, φ⟩`    |

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map2d::{Map2D, MapError};
use crate::perm::{self, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PavingError {
    #[error("{0} is not a fixed-point-free involution")]
    NotFpfInvolution(&'static str),
    #[error("axiom I-1 violated: alpha*phi is not an involution")]
    AxiomI1,
    #[error("axiom I-2 violated: phi*sigma^-1 is not an involution")]
    AxiomI2,
    #[error("axiom FP violated: {0} has a fixed point")]
    AxiomFp(&'static str),
    #[error("declared dart count {declared} but {which} acts on {found} darts")]
    DartCount {
        declared: usize,
        which: &'static str,
        found: usize,
    },
    #[error("paving is not connected")]
    Disconnected,
    #[error("map is not connected")]
    MapDisconnected,
    #[error("map edge involution has fixed points")]
    MapAlphaFixedPoints,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Paving {
    n: usize,
    alpha: Permutation,
    beta: Permutation,
    gamma: Permutation,
    sigma: Permutation,
    phi: Permutation,
}

fn check_len(n: usize, which: &'static str, p: &Permutation) -> Result<(), PavingError> {
    if p.len() != n {
        return Err(PavingError::DartCount {
            declared: n,
            which,
            found: p.len(),
        });
    }
    Ok(())
}

impl Paving {
    /// Triple form. Each of `alpha`, `beta`, `gamma` must be a
    /// fixed-point-free involution on the same dart set.
    pub fn from_involutions(
        alpha: Permutation,
        beta: Permutation,
        gamma: Permutation,
    ) -> Result<Paving, PavingError> {
        let n = alpha.len();
        Self::from_involutions_with_darts(n, alpha, beta, gamma)
    }

    pub fn from_involutions_with_darts(
        n: usize,
        alpha: Permutation,
        beta: Permutation,
        gamma: Permutation,
    ) -> Result<Paving, PavingError> {
        for (which, p) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            check_len(n, which, p)?;
            if !p.is_fpf_involution() {
                return Err(PavingError::NotFpfInvolution(which));
            }
        }
        let phi = alpha.compose(&beta)?;
        let sigma = gamma.compose(&phi)?;
        Ok(Paving {
            n,
            alpha,
            beta,
            gamma,
            sigma,
            phi,
        })
    }

    /// Quadruple form `⟨D; α, σ, φ⟩`, checked against I-1, I-2 and FP.
    /// `alpha` must also be a fixed-point-free involution.
    pub fn from_quadruple(
        alpha: Permutation,
        sigma: Permutation,
        phi: Permutation,
    ) -> Result<Paving, PavingError> {
        let n = alpha.len();
        Self::from_quadruple_with_darts(n, alpha, sigma, phi)
    }

    pub fn from_quadruple_with_darts(
        n: usize,
        alpha: Permutation,
        sigma: Permutation,
        phi: Permutation,
    ) -> Result<Paving, PavingError> {
        check_len(n, "alpha", &alpha)?;
        check_len(n, "sigma", &sigma)?;
        check_len(n, "phi", &phi)?;
        if !alpha.is_fpf_involution() {
            return Err(PavingError::NotFpfInvolution("alpha"));
        }
        let beta = alpha.compose(&phi)?;
        if !beta.is_involution() {
            return Err(PavingError::AxiomI1);
        }
        let i2 = phi.compose(&sigma.inverse())?;
        if !i2.is_involution() {
            return Err(PavingError::AxiomI2);
        }
        if beta.fixed_points().next().is_some() {
            return Err(PavingError::AxiomFp("alpha*phi"));
        }
        if i2.fixed_points().next().is_some() {
            return Err(PavingError::AxiomFp("phi*sigma^-1"));
        }
        // σφ⁻¹ = (φσ⁻¹)⁻¹ = φσ⁻¹
        let gamma = i2;
        Ok(Paving {
            n,
            alpha,
            beta,
            gamma,
            sigma,
            phi,
        })
    }

    pub fn darts(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn gamma(&self) -> &Permutation {
        &self.gamma
    }

    /// `σ = γαβ`.
    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// `φ = αβ`.
    pub fn phi(&self) -> &Permutation {
        &self.phi
    }

    pub fn involutions(&self) -> [&Permutation; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    pub fn is_connected(&self) -> bool {
        perm::is_transitive(&self.involutions(), self.n).expect("validated sizes")
    }

    /// Simultaneous conjugation of the three involutions by `by`.
    pub fn conjugate(&self, by: &Permutation) -> Result<Paving, PavingError> {
        Paving::from_involutions_with_darts(
            self.n,
            self.alpha.conjugate(by)?,
            self.beta.conjugate(by)?,
            self.gamma.conjugate(by)?,
        )
    }

    pub fn stats(&self) -> PavingStats {
        paving_stats(self)
    }

    pub fn underlying_map(&self) -> Map2D {
        underlying_map(self)
    }

    pub fn canonical_form(&self) -> Result<Paving, PavingError> {
        canonical_form(self)
    }

    pub fn automorphism_count(&self) -> Result<usize, PavingError> {
        automorphism_count(self)
    }

    pub fn coset_graph(&self) -> Result<CosetGraph, PavingError> {
        coset_graph(self)
    }

    fn from_canonical(n: usize, mut gens: Vec<Permutation>) -> Paving {
        let gamma = gens.pop().expect("three generators");
        let beta = gens.pop().expect("three generators");
        let alpha = gens.pop().expect("three generators");
        Paving::from_involutions_with_darts(n, alpha, beta, gamma)
            .expect("relabelling preserves the paving axioms")
    }
}

impl fmt::Debug for Paving {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Paving(n={}, {self})", self.n)
    }
}

impl fmt::Display for Paving {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Canonical pavings sort by their triple of image arrays.
impl PartialOrd for Paving {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Paving {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.alpha, &self.beta, &self.gamma).cmp(&(other.n, &other.alpha, &other.beta, &other.gamma))
    }
}

/// Serialized form. A file carries either the triple or the quadruple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PavingRepr {
    Triple {
        n: usize,
        alpha: Permutation,
        beta: Permutation,
        gamma: Permutation,
    },
    Quadruple {
        n: usize,
        alpha: Permutation,
        sigma: Permutation,
        phi: Permutation,
    },
}

impl PavingRepr {
    pub fn build(self) -> Result<Paving, PavingError> {
        match self {
            PavingRepr::Triple { n, alpha, beta, gamma } => {
                Paving::from_involutions_with_darts(n, alpha, beta, gamma)
            }
            PavingRepr::Quadruple { n, alpha, sigma, phi } => {
                Paving::from_quadruple_with_darts(n, alpha, sigma, phi)
            }
        }
    }
}

impl From<&Paving> for PavingRepr {
    fn from(p: &Paving) -> Self {
        PavingRepr::Triple {
            n: p.n,
            alpha: p.alpha.clone(),
            beta: p.beta.clone(),
            gamma: p.gamma.clone(),
        }
    }
}

impl Serialize for Paving {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PavingRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Paving {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        PavingRepr::deserialize(deserializer)?
            .build()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PavingStats {
    /// `(f₀, f₁, f₂, f₃)`: vertices, edges, faces, 3-cells.
    pub f_vector: [usize; 4],
    /// `f₃ − f₂ + f₁ − f₀`.
    pub complexity: i64,
    /// `f₀ − f₁ + f₂ − f₃`, always `−complexity`.
    pub euler_characteristic: i64,
    pub connected: bool,
}

pub fn paving_stats(p: &Paving) -> PavingStats {
    let n = p.n;
    let zeta = |gens: &[&Permutation]| perm::orbit_count(gens, n).expect("validated sizes");
    let sigma_inv = p.sigma.inverse();
    let phi_inv = p.phi.inverse();
    let face_a = sigma_inv.compose(&p.alpha).expect("validated sizes");
    let face_b = phi_inv.compose(&p.sigma).expect("validated sizes");

    let f3 = zeta(&[&p.alpha, &p.sigma]);
    let f2 = zeta(&[&face_a, &face_b]);
    let f1 = zeta(&[&p.alpha, &p.phi]);
    let f0 = zeta(&[&p.sigma, &p.phi]);
    let complexity = f3 as i64 - f2 as i64 + f1 as i64 - f0 as i64;
    PavingStats {
        f_vector: [f0, f1, f2, f3],
        complexity,
        euler_characteristic: -complexity,
        connected: p.is_connected(),
    }
}

pub fn underlying_map(p: &Paving) -> Map2D {
    Map2D::new(p.alpha.clone(), p.sigma.clone()).expect("alpha is an involution")
}

fn require_connected(p: &Paving) -> Result<(), PavingError> {
    if p.is_connected() {
        Ok(())
    } else {
        Err(PavingError::Disconnected)
    }
}

/// Isomorphism-class representative: the least traversal relabelling
/// (generator priority α, β, γ) over all start darts.
pub fn canonical_form(p: &Paving) -> Result<Paving, PavingError> {
    require_connected(p)?;
    let labeling = perm::canonical_labeling(&p.involutions());
    Ok(Paving::from_canonical(p.n, labeling.gens))
}

/// Order of the centralizer of `⟨α, β, γ⟩` in the symmetric group on the
/// darts. It acts freely, so it divides `n`.
pub fn automorphism_count(p: &Paving) -> Result<usize, PavingError> {
    require_connected(p)?;
    Ok(perm::canonical_labeling(&p.involutions()).automorphisms)
}

/// Generator of `Z2 * Z2 * Z2`, sent to α, β, γ respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        };
        write!(f, "{c}")
    }
}

/// Freely reduced word in `a`, `b`, `c` (no two equal adjacent letters).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter, cancelling `xx = 1`.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Inverse in the free product: every letter is an involution, so this
    /// is the reversed word.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Schreier coset graph of the stabilizer of dart 0 in `Z2 * Z2 * Z2`.
///
/// Cosets are identified with darts; coset `0` is the subgroup itself and
/// the letters act on the right, `dart · a = α(dart)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetGraph {
    pub n: usize,
    /// Actions of `a`, `b`, `c` on the cosets.
    pub actions: [Permutation; 3],
    pub root: usize,
}

impl CosetGraph {
    pub fn index(&self) -> usize {
        self.n
    }

    pub fn action(&self, l: Letter) -> &Permutation {
        &self.actions[l.index()]
    }

    /// Image of `coset` under the right action of `word`.
    pub fn act(&self, coset: usize, word: &Word) -> usize {
        word.letters()
            .iter()
            .fold(coset, |c, &l| self.action(l).apply(c))
    }

    /// A subgroup is free iff it meets no conjugate of a generator, i.e.
    /// no letter fixes a coset.
    pub fn is_free(&self) -> bool {
        self.actions.iter().all(|a| a.fixed_points().next().is_none())
    }

    /// Spanning-tree coset representatives: `transversal[v]` is the
    /// breadth-first path word from the root to coset `v`.
    pub fn transversal(&self) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.n];
        if self.n == 0 {
            return Vec::new();
        }
        words[self.root] = Some(Word::identity());
        let mut queue = std::collections::VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            let wu = words[u].clone().expect("visited");
            for l in Letter::ALL {
                let v = self.action(l).apply(u);
                if words[v].is_none() {
                    let mut w = wu.clone();
                    w.push(l);
                    words[v] = Some(w);
                    queue.push_back(v);
                }
            }
        }
        words.into_iter().map(|w| w.expect("connected graph")).collect()
    }

    /// Schreier generators `t_u · x · t_v⁻¹` of the subgroup, one per
    /// undirected non-tree edge `u -x-> v`, freely reduced. Trivial words
    /// (tree edges) are dropped. For a free subgroup these form a free
    /// basis, so their number is the rank.
    pub fn schreier_generators(&self) -> Vec<Word> {
        let t = self.transversal();
        let mut gens = Vec::new();
        for l in Letter::ALL {
            let act = self.action(l);
            for u in 0..self.n {
                let v = act.apply(u);
                if v < u {
                    continue;
                }
                let mut w = t[u].clone();
                w.push(l);
                let w = w.concat(&t[v].inverse());
                if !w.is_empty() {
                    gens.push(w);
                }
            }
        }
        gens
    }

    pub fn to_paving(&self) -> Result<Paving, PavingError> {
        let [a, b, c] = self.actions.clone();
        Paving::from_involutions_with_darts(self.n, a, b, c)
    }
}

/// The coset action of `Z2 * Z2 * Z2` on the darts of a connected paving,
/// rooted at dart 0.
pub fn coset_graph(p: &Paving) -> Result<CosetGraph, PavingError> {
    require_connected(p)?;
    Ok(CosetGraph {
        n: p.n,
        actions: [p.alpha.clone(), p.beta.clone(), p.gamma.clone()],
        root: 0,
    })
}

/// Glues a connected map and its mirror image along their common surface.
///
/// Darts `0..n` carry `(α, σ)`; dart `i + n` is the mirror of dart `i`
/// with `α′(i+n) = α(i)+n` and `σ′(i+n) = σ⁻¹(i)+n`. The face pairing is
/// `φ(i) = i + n mod 2n`. The result has two 3-cells and complexity `2g`,
/// `g` the genus of the map.
pub fn mirror_double(m: &Map2D) -> Result<Paving, PavingError> {
    if !m.is_connected() {
        return Err(PavingError::MapDisconnected);
    }
    if !m.alpha().is_fpf_involution() {
        return Err(PavingError::MapAlphaFixedPoints);
    }
    let n = m.darts();
    let sigma_inv = m.sigma().inverse();
    let mut alpha = m.alpha().images().to_vec();
    alpha.extend(m.alpha().images().iter().map(|&x| x + n));
    let mut sigma = m.sigma().images().to_vec();
    sigma.extend(sigma_inv.images().iter().map(|&x| x + n));
    let phi: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
    Paving::from_quadruple(
        Permutation::from_images(alpha)?,
        Permutation::from_images(sigma)?,
        Permutation::from_images(phi)?,
    )
}
