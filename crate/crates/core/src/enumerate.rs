//! Exhaustive oracle: every triple of fixed-point-free involutions on `n`
//! darts is generated, transitive triples are counted, and (optionally)
//! their isomorphism classes are collected by canonical form.
//!
//! Nothing here depends on the series machinery, so the counts serve as an
//! independent check of it.
//!
//! Two loop shapes are available:
//!
//! * the plain loop over all `(α, β, γ)`, partitioned over `α`;
//! * `fix_alpha`, which keeps `α = (0 1)(2 3)…` only. Conjugation acts
//!   transitively on fixed-point-free involutions and preserves
//!   transitivity, so every `α` sees the same number of transitive
//!   `(β, γ)` and the total is that number times `(n−1)!!`. Every
//!   isomorphism class also has a representative with this `α`.
//!
//! In the plain loop only triples whose breadth-first relabelling from
//! dart 0 is the identity are canonicalised; there is one such triple per
//! rooted paving, and every class's canonical form is one of them.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::paving::{Paving, PavingStats};
use crate::perm::{fpf_involution_count, fpf_involutions, Permutation};

/// Default guard on the oracle size. `n = 12` has about `1.1·10^12` triples.
pub const DEFAULT_LIMIT: usize = 10;

/// Largest dart count the packed representation supports.
pub const MAX_DARTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("pavings need an even number of darts, got {0}")]
    OddDarts(usize),
    #[error("{n} darts exceeds the configured limit of {limit}")]
    BeyondLimit { n: usize, limit: usize },
    #[error("{0} darts exceeds the supported maximum of {MAX_DARTS}")]
    TooLarge(usize),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateConfig {
    /// Collect isomorphism classes.
    pub classify: bool,
    /// Return one canonical representative per class (implies `classify`).
    pub representatives: bool,
    /// Enumerate only `α = (0 1)(2 3)…` and scale.
    pub fix_alpha: bool,
    pub limit: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumerateConfig {
    fn default() -> Self {
        EnumerateConfig {
            classify: false,
            representatives: false,
            fix_alpha: false,
            limit: DEFAULT_LIMIT,
            threads: None,
        }
    }
}

impl EnumerateConfig {
    pub fn classify() -> Self {
        EnumerateConfig {
            classify: true,
            representatives: true,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRepresentative {
    pub paving: Paving,
    pub stats: PavingStats,
    pub automorphisms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub total_triples: u64,
    pub transitive_triples: u64,
    /// `transitive_triples / (n−1)!`.
    pub rooted_count: u64,
    pub iso_classes: Option<u64>,
    pub class_representatives: Option<Vec<ClassRepresentative>>,
}

type Images = [u8; MAX_DARTS];
type Key = [u8; 3 * MAX_DARTS];

#[derive(Clone)]
struct Involution {
    images: Images,
    pairs: Vec<(u8, u8)>,
}

impl Involution {
    fn new(p: &Permutation) -> Self {
        let mut images = [0u8; MAX_DARTS];
        let mut pairs = Vec::with_capacity(p.len() / 2);
        for i in 0..p.len() {
            let j = p.apply(i);
            images[i] = j as u8;
            if i < j {
                pairs.push((i as u8, j as u8));
            }
        }
        Involution { images, pairs }
    }
}

/// Tiny union-find on at most `MAX_DARTS` points.
struct SmallUf {
    parent: [u8; MAX_DARTS],
    classes: usize,
}

impl SmallUf {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; MAX_DARTS];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        SmallUf { parent, classes: n }
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
            self.classes -= 1;
        }
    }
}

/// Orbit labels of `⟨α, β⟩` on the darts, and their number.
fn pair_components(n: usize, a: &Involution, b: &Involution) -> ([u8; MAX_DARTS], usize) {
    let mut uf = SmallUf::new(n);
    for &(i, j) in a.pairs.iter().chain(&b.pairs) {
        uf.union(i, j);
    }
    let mut label = [u8::MAX; MAX_DARTS];
    let mut root_label = [u8::MAX; MAX_DARTS];
    let mut next = 0u8;
    for i in 0..n {
        let r = uf.find(i as u8) as usize;
        if root_label[r] == u8::MAX {
            root_label[r] = next;
            next += 1;
        }
        label[i] = root_label[r];
    }
    (label, next as usize)
}

fn joins_components(comp: &[u8; MAX_DARTS], classes: usize, g: &Involution) -> bool {
    if classes == 1 {
        return true;
    }
    let mut uf = SmallUf::new(classes);
    for &(i, j) in &g.pairs {
        uf.union(comp[i as usize], comp[j as usize]);
        if uf.classes == 1 {
            return true;
        }
    }
    false
}

/// Breadth-first relabelling from `start`, generator priority α, β, γ,
/// written as the concatenated relabelled image arrays.
fn traversal_key(n: usize, gens: [&Images; 3], start: usize) -> Key {
    let mut label = [u8::MAX; MAX_DARTS];
    let mut order = [0u8; MAX_DARTS];
    label[start] = 0;
    order[0] = start as u8;
    let mut len = 1;
    let mut head = 0;
    while head < len {
        let d = order[head] as usize;
        head += 1;
        for g in gens {
            let e = g[d] as usize;
            if label[e] == u8::MAX {
                label[e] = len as u8;
                order[len] = e as u8;
                len += 1;
            }
        }
    }
    let mut key = [0u8; 3 * MAX_DARTS];
    for (gi, g) in gens.iter().enumerate() {
        for k in 0..n {
            key[gi * n + k] = label[g[order[k] as usize] as usize];
        }
    }
    key
}

/// Whether the relabelling from dart 0 is the identity.
fn is_traversal_normal(n: usize, gens: [&Images; 3]) -> bool {
    let mut next = 1u8;
    let mut seen = [false; MAX_DARTS];
    seen[0] = true;
    for d in 0..n {
        for g in gens {
            let e = g[d];
            if !seen[e as usize] {
                if e != next {
                    return false;
                }
                seen[e as usize] = true;
                next += 1;
            }
        }
    }
    true
}

fn canonical_key(n: usize, gens: [&Images; 3]) -> Key {
    (0..n)
        .map(|s| traversal_key(n, gens, s))
        .min()
        .expect("n > 0")
}

fn key_to_paving(n: usize, key: &Key) -> Paving {
    let part = |g: usize| {
        Permutation::from_images(key[g * n..(g + 1) * n].iter().map(|&x| x as usize).collect())
            .expect("relabelled involution")
    };
    Paving::from_involutions(part(0), part(1), part(2)).expect("relabelled triple is a paving")
}

#[derive(Default)]
struct Partial {
    transitive: u64,
    normal: u64,
    keys: HashSet<Key>,
}

impl Partial {
    fn merge(mut self, mut other: Partial) -> Partial {
        self.transitive += other.transitive;
        self.normal += other.normal;
        if self.keys.len() < other.keys.len() {
            std::mem::swap(&mut self.keys, &mut other.keys);
        }
        self.keys.extend(other.keys);
        self
    }
}

fn scan_alpha(n: usize, a: &Involution, invs: &[Involution], classify: bool, canonicalise_all: bool) -> Partial {
    let mut out = Partial::default();
    for b in invs {
        let (comp, classes) = pair_components(n, a, b);
        for g in invs {
            if !joins_components(&comp, classes, g) {
                continue;
            }
            out.transitive += 1;
            if !classify {
                continue;
            }
            let gens = [&a.images, &b.images, &g.images];
            if canonicalise_all {
                out.keys.insert(canonical_key(n, gens));
            } else if is_traversal_normal(n, gens) {
                out.normal += 1;
                out.keys.insert(canonical_key(n, gens));
            }
        }
    }
    out
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Runs the oracle on `n` darts.
pub fn enumerate_pavings(n: usize, config: &EnumerateConfig) -> Result<EnumerationReport, EnumerateError> {
    if n % 2 == 1 {
        return Err(EnumerateError::OddDarts(n));
    }
    if n > MAX_DARTS {
        return Err(EnumerateError::TooLarge(n));
    }
    if n > config.limit {
        return Err(EnumerateError::BeyondLimit { n, limit: config.limit });
    }
    let classify = config.classify || config.representatives;
    let per = fpf_involution_count(n);
    let total_triples = per * per * per;
    if n == 0 {
        // the empty action is not transitive
        return Ok(EnumerationReport {
            n,
            total_triples,
            transitive_triples: 0,
            rooted_count: 0,
            iso_classes: classify.then_some(0),
            class_representatives: config.representatives.then(Vec::new),
        });
    }

    let invs: Vec<Involution> = fpf_involutions(n).map(|p| Involution::new(&p)).collect();
    let run = || -> Partial {
        if config.fix_alpha {
            let a = invs
                .iter()
                .find(|a| (0..n).all(|i| a.images[i] as usize == i ^ 1))
                .expect("(0 1)(2 3)… is a fixed-point-free involution");
            let part = invs
                .par_iter()
                .map(|b| scan_alpha_fixed(n, a, b, &invs, classify))
                .reduce(Partial::default, Partial::merge);
            Partial {
                transitive: part.transitive * per,
                ..part
            }
        } else {
            invs.par_iter()
                .map(|a| scan_alpha(n, a, &invs, classify, false))
                .reduce(Partial::default, Partial::merge)
        }
    };
    let partial = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| EnumerateError::Pool(e.to_string()))?
            .install(run),
        None => run(),
    };

    let rooted_count = partial.transitive / factorial_u64(n - 1);
    debug_assert_eq!(rooted_count * factorial_u64(n - 1), partial.transitive);
    debug_assert!(!classify || config.fix_alpha || partial.normal == rooted_count);

    let iso_classes = classify.then_some(partial.keys.len() as u64);
    let class_representatives = config.representatives.then(|| {
        let mut reps: Vec<Paving> = partial.keys.iter().map(|k| key_to_paving(n, k)).collect();
        reps.sort();
        reps.into_iter()
            .map(|paving| {
                let stats = paving.stats();
                let automorphisms = paving.automorphism_count().expect("transitive");
                ClassRepresentative {
                    paving,
                    stats,
                    automorphisms,
                }
            })
            .collect()
    });
    Ok(EnumerationReport {
        n,
        total_triples,
        transitive_triples: partial.transitive,
        rooted_count,
        iso_classes,
        class_representatives,
    })
}

fn scan_alpha_fixed(n: usize, a: &Involution, b: &Involution, invs: &[Involution], classify: bool) -> Partial {
    let mut out = Partial::default();
    let (comp, classes) = pair_components(n, a, b);
    for g in invs {
        if !joins_components(&comp, classes, g) {
            continue;
        }
        out.transitive += 1;
        if classify {
            out.keys.insert(canonical_key(n, [&a.images, &b.images, &g.images]));
        }
    }
    out
}

/// Number of free subgroups of index `n` in `Z2 * Z2 * Z2`, i.e. rooted
/// connected pavings on `n` darts, counted by the oracle. Zero for odd `n`
/// and for `n = 0`.
pub fn count_free_subgroups(n: usize) -> Result<u64, EnumerateError> {
    if n % 2 == 1 || n == 0 {
        return Ok(0);
    }
    let config = EnumerateConfig {
        fix_alpha: true,
        ..Default::default()
    };
    Ok(enumerate_pavings(n, &config)?.rooted_count)
}

/// Number of conjugacy classes of free subgroups of index `n`, i.e.
/// isomorphism classes of connected pavings on `n` darts, by the oracle.
pub fn count_conjugacy_classes(n: usize) -> Result<u64, EnumerateError> {
    if n % 2 == 1 || n == 0 {
        return Ok(0);
    }
    let config = EnumerateConfig {
        fix_alpha: true,
        classify: true,
        ..Default::default()
    };
    Ok(enumerate_pavings(n, &config)?.iso_classes.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_darts() {
        let r = enumerate_pavings(2, &EnumerateConfig::classify()).unwrap();
        assert_eq!((r.total_triples, r.transitive_triples, r.rooted_count), (1, 1, 1));
        assert_eq!(r.iso_classes, Some(1));
        let reps = r.class_representatives.unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].automorphisms, 2);
    }

    #[test]
    fn four_darts() {
        let r = enumerate_pavings(4, &EnumerateConfig::classify()).unwrap();
        assert_eq!((r.total_triples, r.transitive_triples, r.rooted_count), (27, 24, 4));
        assert_eq!(r.iso_classes, Some(4));
        let mut fs: Vec<_> = r
            .class_representatives
            .unwrap()
            .iter()
            .map(|c| c.stats.f_vector)
            .collect();
        fs.sort();
        assert_eq!(fs, vec![[1, 1, 1, 1], [1, 1, 2, 2], [2, 1, 1, 2], [2, 2, 1, 1]]);
    }

    #[test]
    fn six_darts_both_loops() {
        let plain = enumerate_pavings(6, &EnumerateConfig::classify()).unwrap();
        assert_eq!(plain.transitive_triples, 3000);
        assert_eq!(plain.rooted_count, 25);
        assert_eq!(plain.iso_classes, Some(11));
        let fixed = enumerate_pavings(
            6,
            &EnumerateConfig {
                fix_alpha: true,
                ..EnumerateConfig::classify()
            },
        )
        .unwrap();
        assert_eq!(fixed, plain);
    }

    #[test]
    fn errors() {
        assert_eq!(
            enumerate_pavings(3, &EnumerateConfig::default()).unwrap_err(),
            EnumerateError::OddDarts(3)
        );
        assert_eq!(
            enumerate_pavings(12, &EnumerateConfig::default()).unwrap_err(),
            EnumerateError::BeyondLimit { n: 12, limit: 10 }
        );
        let big = EnumerateConfig {
            limit: 100,
            ..Default::default()
        };
        assert_eq!(enumerate_pavings(18, &big).unwrap_err(), EnumerateError::TooLarge(18));
    }

    #[test]
    fn empty_dart_set() {
        let r = enumerate_pavings(0, &EnumerateConfig::classify()).unwrap();
        assert_eq!(r.total_triples, 1);
        assert_eq!(r.transitive_triples, 0);
        assert_eq!(r.iso_classes, Some(0));
    }

    #[test]
    fn group_theoretic_aliases() {
        assert_eq!(count_free_subgroups(2), Ok(1));
        assert_eq!(count_free_subgroups(3), Ok(0));
        assert_eq!(count_free_subgroups(8), Ok(208));
        assert_eq!(count_conjugacy_classes(2), Ok(1));
        assert_eq!(count_conjugacy_classes(4), Ok(4));
        assert_eq!(count_conjugacy_classes(8), Ok(60));
    }

    #[test]
    fn packed_key_matches_canonical_form() {
        for rep in enumerate_pavings(6, &EnumerateConfig::classify())
            .unwrap()
            .class_representatives
            .unwrap()
        {
            assert_eq!(rep.paving.canonical_form().unwrap(), rep.paving);
            let p = &rep.paving;
            let imgs: Vec<Involution> = p.involutions().iter().map(|q| Involution::new(q)).collect();
            let key = canonical_key(6, [&imgs[0].images, &imgs[1].images, &imgs[2].images]);
            assert_eq!(key_to_paving(6, &key), *p);
        }
    }

    #[test]
    fn explicit_thread_count() {
        let cfg = EnumerateConfig {
            threads: Some(2),
            ..EnumerateConfig::default()
        };
        assert_eq!(enumerate_pavings(6, &cfg).unwrap().rooted_count, 25);
    }
}
