//! Permutations of `{0, …, n-1}` and the handful of group operations the
//! rest of the crate needs: composition, inversion, conjugation, orbit
//! counting and enumeration of fixed-point-free involutions.
//!
//! Composition order is fixed crate-wide: `p.compose(&q)` is the map
//! `i ↦ p(q(i))`, i.e. the right factor is applied first. With this
//! convention a paving's face-pairing is `φ = αβ = alpha.compose(&beta)`.
//!
//! Darts are 0-based in memory. Serialized permutations are 1-based image
//! arrays: `(1,2)(3,4)` is written `[2,1,4,3]`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("size mismatch: expected {expected} points, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a bijection: image {0} repeated or out of range")]
    NotBijective(usize),
    #[error("cycle notation refers to point {0}, outside 1..={1}")]
    PointOutOfRange(usize, usize),
}

/// A bijection of `{0, …, n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(x));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images (the serialized form).
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermError> {
        let mut zero = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(PermError::NotBijective(0));
            }
            zero.push(x - 1);
        }
        Self::from_images(zero)
    }

    /// Builds a permutation on `n` points from 1-based disjoint cycles,
    /// e.g. `from_cycles(4, &[&[1, 2], &[3, 4]])` is `(1,2)(3,4)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n {
                    return Err(PermError::PointOutOfRange(point, n));
                }
                if touched[point - 1] {
                    return Err(PermError::NotBijective(point - 1));
                }
                touched[point - 1] = true;
                images[point - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// Wraps an image array that the caller guarantees is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    fn check_size(&self, other: &Permutation) -> Result<(), PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_size(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `by⁻¹ ∘ self ∘ by`.
    pub fn conjugate(&self, by: &Permutation) -> Result<Permutation, PermError> {
        self.check_size(by)?;
        let inv = by.inverse();
        Ok(Permutation {
            images: by.images.iter().map(|&j| inv.images[self.images[j]]).collect(),
        })
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x] == i)
    }

    pub fn is_fpf_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x != i && self.images[x] == i)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x)
            .map(|(i, _)| i)
    }

    /// Disjoint cycles, each starting at its smallest point, in order of
    /// that point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = Vec::new();
        for cycle in self.cycles() {
            let len = cycle.len();
            if counts.len() < len {
                counts.resize(len, 0);
            }
            counts[len - 1] += 1;
        }
        CycleType { counts }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// 1-based cycle notation; fixed points are omitted and the identity
/// prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&images).map_err(serde::de::Error::custom)
    }
}

/// `counts[k]` is the number of cycles of length `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CycleType {
    pub counts: Vec<usize>,
}

impl CycleType {
    pub fn degree(&self) -> usize {
        self.counts.iter().enumerate().map(|(k, c)| (k + 1) * c).sum()
    }

    pub fn count(&self, length: usize) -> usize {
        if length == 0 {
            return 0;
        }
        self.counts.get(length - 1).copied().unwrap_or(0)
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            classes: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.classes -= 1;
        true
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    /// Class index in `0..classes()` for every point, numbered by first
    /// occurrence.
    pub fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let r = self.find(i);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = next;
                next += 1;
            }
            out.push(label_of_root[r]);
        }
        out
    }
}

fn check_gens(gens: &[&Permutation], n: usize) -> Result<(), PermError> {
    for g in gens {
        if g.len() != n {
            return Err(PermError::SizeMismatch {
                expected: n,
                found: g.len(),
            });
        }
    }
    Ok(())
}

/// Orbit partition of `{0, …, n-1}` under the group generated by `gens`.
pub fn orbit_partition(gens: &[&Permutation], n: usize) -> Result<UnionFind, PermError> {
    check_gens(gens, n)?;
    let mut uf = UnionFind::new(n);
    for g in gens {
        for i in 0..n {
            uf.union(i, g.apply(i));
        }
    }
    Ok(uf)
}

/// Number of orbits of `⟨gens⟩` acting on `{0, …, n-1}`.
pub fn orbit_count(gens: &[&Permutation], n: usize) -> Result<usize, PermError> {
    Ok(orbit_partition(gens, n)?.classes())
}

/// True iff `⟨gens⟩` has exactly one orbit. The empty action (`n = 0`)
/// is not transitive.
pub fn is_transitive(gens: &[&Permutation], n: usize) -> Result<bool, PermError> {
    Ok(n > 0 && orbit_count(gens, n)? == 1)
}

/// `(n-1)!!` for even `n`, 0 for odd `n`, 1 for `n = 0`.
pub fn fpf_involution_count(n: usize) -> u64 {
    if n % 2 == 1 {
        return 0;
    }
    (1..n as u64).step_by(2).product()
}

/// Lazy enumeration of the fixed-point-free involutions of `{0, …, n-1}`.
///
/// Involutions are built as perfect matchings: the smallest unmatched
/// point is paired with each larger unmatched point in increasing order.
/// The output order is therefore lexicographic in the image array.
#[derive(Debug, Clone)]
pub struct FpfInvolutions {
    n: usize,
    // choice[k] = index, among the currently unmatched points above the
    // k-th pivot, of the partner chosen for that pivot.
    choice: Vec<usize>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl FpfInvolutions {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(n, &[])
    }

    /// Restricts the stream to involutions whose first pivots take the
    /// given partner choices. `with_prefix(n, &[j])` yields exactly the
    /// involutions pairing point 0 with point `j + 1`, which is how the
    /// stream is split for parallel consumers.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Self {
        let pairs = n / 2;
        let mut it = FpfInvolutions {
            n,
            choice: vec![0; pairs],
            fixed: prefix.len(),
            started: false,
            done: n % 2 == 1 || prefix.len() > pairs,
        };
        if !it.done {
            for (k, &c) in prefix.iter().enumerate() {
                // pivot k has n - 2k - 1 candidates
                if c >= n - 2 * k - 1 {
                    it.done = true;
                }
                it.choice[k] = c;
            }
        }
        it
    }

    fn build(&self) -> Vec<usize> {
        let n = self.n;
        let mut images = vec![usize::MAX; n];
        let mut free: Vec<usize> = (0..n).collect();
        for &c in &self.choice {
            let pivot = free.remove(0);
            let partner = free.remove(c);
            images[pivot] = partner;
            images[partner] = pivot;
        }
        images
    }

    fn advance(&mut self) -> bool {
        // odometer over choice[fixed..], digit k has radix n - 2k - 1
        let n = self.n;
        let mut k = self.choice.len();
        while k > self.fixed {
            k -= 1;
            let radix = n - 2 * k - 1;
            if self.choice[k] + 1 < radix {
                self.choice[k] += 1;
                for digit in self.choice.iter_mut().skip(k + 1) {
                    *digit = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for FpfInvolutions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Permutation::from_images_unchecked(self.build()))
    }
}

/// Every fixed-point-free involution on `n` points, exactly once.
pub fn fpf_involutions(n: usize) -> FpfInvolutions {
    FpfInvolutions::new(n)
}

/// Breadth-first relabelling of a transitive action: dart `start` gets
/// label 0 and the remaining darts are numbered in first-visit order,
/// expanding each visited dart through `gens` in the given priority.
/// Returns `order`, where `order[k]` is the old dart that receives label `k`.
pub fn traversal_order(gens: &[&Permutation], start: usize) -> Vec<usize> {
    let n = gens.first().map_or(0, |g| g.len());
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[start] = 0;
    order.push(start);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for g in gens {
            let e = g.apply(d);
            if label[e] == usize::MAX {
                label[e] = order.len();
                order.push(e);
            }
        }
    }
    order
}

/// Transports every generator along the relabelling `order` (as returned by
/// [`traversal_order`]), i.e. conjugates them by the dart renaming.
pub fn relabel(gens: &[&Permutation], order: &[usize]) -> Vec<Permutation> {
    let n = order.len();
    let mut label = vec![0; n];
    for (k, &d) in order.iter().enumerate() {
        label[d] = k;
    }
    gens.iter()
        .map(|g| Permutation::from_images_unchecked(order.iter().map(|&d| label[g.apply(d)]).collect()))
        .collect()
}

/// Canonical representative of a transitive tuple of permutations under
/// simultaneous conjugation, together with the number of start darts that
/// reproduce it (the order of the centralizer of the tuple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLabeling {
    pub gens: Vec<Permutation>,
    pub automorphisms: usize,
}

/// Lexicographically least traversal relabelling over all start darts.
/// Callers must ensure `⟨gens⟩` is transitive and non-empty.
pub fn canonical_labeling(gens: &[&Permutation]) -> CanonicalLabeling {
    let n = gens.first().map_or(0, |g| g.len());
    debug_assert!(n > 0 && is_transitive(gens, n).unwrap_or(false));
    let mut best: Option<Vec<Permutation>> = None;
    let mut automorphisms = 0;
    for start in 0..n {
        let order = traversal_order(gens, start);
        let candidate = relabel(gens, &order);
        match &best {
            Some(b) if candidate > *b => {}
            Some(b) if candidate == *b => automorphisms += 1,
            _ => {
                best = Some(candidate);
                automorphisms = 1;
            }
        }
    }
    CanonicalLabeling {
        gens: best.unwrap_or_default(),
        automorphisms,
    }
}
