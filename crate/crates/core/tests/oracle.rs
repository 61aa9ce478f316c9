//! The exhaustive oracle against Burnside's lemma and the counting series.

use num_bigint::BigUint;
use pavings::enumerate::{count_conjugacy_classes, enumerate_pavings, EnumerateConfig};
use pavings::perm::{fpf_involutions, is_transitive};
use pavings::series::{rooted_by_recurrence, rooted_by_series, unlabeled_by_cycle_index};
use pavings::Permutation;

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Orbits of simultaneous conjugation on transitive triples, by Burnside.
fn burnside_classes(n: usize) -> u64 {
    let invs: Vec<Permutation> = fpf_involutions(n).collect();
    let mut triples = Vec::new();
    for a in &invs {
        for b in &invs {
            for c in &invs {
                if is_transitive(&[a, b, c], n).unwrap() {
                    triples.push([a, b, c]);
                }
            }
        }
    }
    let perms = all_permutations(n);
    let fixed: u64 = perms
        .iter()
        .map(|pi| {
            triples
                .iter()
                .filter(|t| t.iter().all(|g| g.conjugate(pi).unwrap() == **g))
                .count() as u64
        })
        .sum();
    assert_eq!(fixed % perms.len() as u64, 0);
    fixed / perms.len() as u64
}

#[test]
fn burnside_matches_canonical_forms() {
    for n in [2usize, 4, 6] {
        let r = enumerate_pavings(n, &EnumerateConfig::classify()).unwrap();
        assert_eq!(r.iso_classes, Some(burnside_classes(n)), "n = {n}");
    }
}

#[test]
fn oracle_agrees_with_series_up_to_ten() {
    let rec = rooted_by_recurrence(5);
    let ser = rooted_by_series(10);
    let unl = unlabeled_by_cycle_index(10).unwrap();
    for n in (2..=10).step_by(2) {
        let cfg = EnumerateConfig {
            fix_alpha: n == 10,
            classify: n <= 8,
            ..Default::default()
        };
        let r = enumerate_pavings(n, &cfg).unwrap();
        assert_eq!(BigUint::from(r.rooted_count), rec[n / 2], "n = {n}");
        assert_eq!(BigUint::from(r.rooted_count), ser[n], "n = {n}");
        if let Some(k) = r.iso_classes {
            assert_eq!(BigUint::from(k), unl[n], "n = {n}");
        }
    }
    assert_eq!(count_conjugacy_classes(10), Ok(318));
}

#[test]
fn report_is_independent_of_partitioning() {
    let one = EnumerateConfig {
        threads: Some(1),
        ..EnumerateConfig::classify()
    };
    let three = EnumerateConfig {
        threads: Some(3),
        ..EnumerateConfig::classify()
    };
    assert_eq!(enumerate_pavings(8, &one).unwrap(), enumerate_pavings(8, &three).unwrap());
}

#[test]
fn representatives_are_connected_canonical_pavings() {
    let r = enumerate_pavings(6, &EnumerateConfig::classify()).unwrap();
    let reps = r.class_representatives.unwrap();
    assert_eq!(reps.len(), 11);
    assert!(reps.windows(2).all(|w| w[0].paving < w[1].paving));
    for c in reps {
        assert!(c.paving.is_connected());
        assert_eq!(c.paving.canonical_form().unwrap(), c.paving);
        assert_eq!(c.stats, c.paving.stats());
    }
}
