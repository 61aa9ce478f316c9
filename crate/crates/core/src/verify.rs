//! Cross-method consistency suite: every count is obtained at least two
//! independent ways and compared exactly.
//!
//! Each check compares an expected list of values with a computed one. A
//! fault can be injected into any named check, which perturbs its computed
//! side; this exists so callers can confirm that failures propagate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_pavings, EnumerateConfig, EnumerateError, DEFAULT_LIMIT};
use crate::fixtures;
use crate::format::parse_bfile;
use crate::paving::mirror_double;
use crate::series::{
    hypergeom_ode_residual, riccati_residual, rooted_by_recurrence, rooted_by_series, series_p_star,
    unlabeled_by_cycle_index, DEFAULT_ORDER,
};

pub const CHECK_NAMES: [&str; 13] = [
    "rooted-recurrence-vs-series",
    "rooted-vs-A005411",
    "unlabeled-vs-A002831",
    "p-star-closed-form",
    "riccati-residual",
    "hypergeometric-ode-residual",
    "small-pavings",
    "thurston",
    "mirror-double",
    "oracle-rooted",
    "oracle-iso-classes",
    "orbit-stabilizer",
    "coset-graphs",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Largest dart count for the oracle-based checks.
    pub max_darts: usize,
    /// Truncation order for the series identities.
    pub series_order: usize,
    pub threads: Option<usize>,
    /// Name of a check whose computed values are perturbed.
    pub fault: Option<String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_darts: 8,
            series_order: DEFAULT_ORDER,
            threads: None,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_darts: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Suite<'a> {
    fault: Option<&'a str>,
    checks: Vec<CheckOutcome>,
}

impl Suite<'_> {
    fn compare<T: ToString>(&mut self, name: &str, what: &str, expected: Vec<T>, found: Vec<T>) {
        let expected: Vec<String> = expected.iter().map(T::to_string).collect();
        let mut found: Vec<String> = found.iter().map(T::to_string).collect();
        if self.fault == Some(name) {
            match found.first_mut() {
                Some(v) => v.push_str("+1"),
                None => found.push("injected".into()),
            }
        }
        let passed = expected == found;
        let detail = if passed && expected.is_empty() {
            format!("no {what}")
        } else if passed {
            format!("{} {what} agree", expected.len())
        } else {
            let i = (0..expected.len().max(found.len()))
                .find(|&i| expected.get(i) != found.get(i))
                .unwrap_or(0);
            format!(
                "{what}: entry {i} expected {} found {}",
                expected.get(i).map_or("nothing", String::as_str),
                found.get(i).map_or("nothing", String::as_str)
            )
        };
        self.checks.push(CheckOutcome {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn even_up_to(n: usize) -> impl Iterator<Item = usize> {
    (2..=n).step_by(2)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Runs the suite. Errors only on configurations the oracle refuses.
pub fn run_verification(options: &VerifyOptions) -> Result<VerifyReport, EnumerateError> {
    let n_max = options.max_darts - options.max_darts % 2;
    if n_max > DEFAULT_LIMIT {
        return Err(EnumerateError::BeyondLimit {
            n: n_max,
            limit: DEFAULT_LIMIT,
        });
    }
    let mut s = Suite {
        fault: options.fault.as_deref(),
        checks: Vec::new(),
    };

    let series_darts = n_max.max(24);
    let recurrence = rooted_by_recurrence(series_darts / 2);
    let series = rooted_by_series(series_darts);
    s.compare(
        "rooted-recurrence-vs-series",
        "rooted counts",
        recurrence.clone(),
        (0..=series_darts / 2).map(|k| series[2 * k].clone()).collect(),
    );

    let a005411 = parse_bfile(fixtures::A005411_BFILE).expect("shipped b-file parses");
    let rec = rooted_by_recurrence(a005411.last().map_or(0, |e| e.n));
    s.compare(
        "rooted-vs-A005411",
        "b-file terms",
        a005411.iter().map(|e| e.value.clone()).collect(),
        a005411.iter().map(|e| rec[e.n].clone()).collect(),
    );

    let a002831 = parse_bfile(fixtures::A002831_BFILE).expect("shipped b-file parses");
    let max_unlabeled = a002831.last().map_or(0, |e| 2 * e.n).max(n_max);
    let unlabeled = unlabeled_by_cycle_index(max_unlabeled).expect("cycle-index counts are natural");
    s.compare(
        "unlabeled-vs-A002831",
        "b-file terms",
        a002831.iter().map(|e| e.value.clone()).collect(),
        a002831.iter().map(|e| unlabeled[2 * e.n].clone()).collect(),
    );

    let p_star = series_p_star(30);
    s.compare(
        "p-star-closed-form",
        "involution triple counts",
        (0..=15usize)
            .map(|k| {
                let df: BigUint = (1..2 * k).step_by(2).map(BigUint::from).product();
                BigRational::from_integer(BigInt::from(&df * &df * &df))
            })
            .collect(),
        (0..=15usize)
            .map(|k| p_star.coeff(2 * k).expect("within order") * BigRational::from_integer(factorial(2 * k).into()))
            .collect(),
    );

    let nonzero = |r: crate::series::Series| -> Vec<String> {
        r.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("x^{i}: {c}"))
            .collect()
    };
    s.compare(
        "riccati-residual",
        "nonzero residual coefficients",
        Vec::<String>::new(),
        nonzero(riccati_residual(options.series_order)),
    );
    s.compare(
        "hypergeometric-ode-residual",
        "nonzero residual coefficients",
        Vec::<String>::new(),
        nonzero(hypergeom_ode_residual(options.series_order)),
    );

    let small = fixtures::small_pavings();
    s.compare(
        "small-pavings",
        "f-vectors and Euler characteristics",
        fixtures::SMALL_PAVING_F_VECTORS.iter().map(|f| format!("{f:?} chi=0")).collect(),
        small
            .iter()
            .map(|p| {
                let st = p.stats();
                format!("{:?} chi={}", st.f_vector, st.euler_characteristic)
            })
            .collect(),
    );

    let thurston = fixtures::thurston();
    let ts = thurston.stats();
    let map = thurston.underlying_map();
    let comps: Vec<String> = map
        .components()
        .iter()
        .map(|c| {
            let m = map.restrict(c).stats();
            format!("V={} E={} F={} g={:?}", m.vertices, m.edges, m.faces, m.genus_per_component)
        })
        .collect();
    let mut found = vec![format!("{:?} chi={} connected={}", ts.f_vector, ts.euler_characteristic, ts.connected)];
    found.extend(comps);
    s.compare(
        "thurston",
        "invariants",
        vec![
            "[1, 2, 4, 2] chi=1 connected=true".to_string(),
            "V=4 E=6 F=4 g=Some([0])".to_string(),
            "V=4 E=6 F=4 g=Some([0])".to_string(),
        ],
        found,
    );

    let maps = [fixtures::single_edge_map(), fixtures::tetrahedron_map(), fixtures::torus_map()];
    let mut expected = Vec::new();
    let mut found = Vec::new();
    for m in &maps {
        let g = m.stats().genus_per_component.expect("orientable")[0];
        expected.push(format!("f3=2 c={} comps=2", 2 * g));
        found.push(match mirror_double(m) {
            Ok(p) => {
                let st = p.stats();
                format!("f3={} c={} comps={}", st.f_vector[3], st.complexity, p.underlying_map().stats().components)
            }
            Err(e) => e.to_string(),
        });
    }
    s.compare("mirror-double", "doubled maps", expected, found);

    // oracle checks
    let mut rooted_expected = Vec::new();
    let mut rooted_found = Vec::new();
    let mut iso_expected = Vec::new();
    let mut iso_found = Vec::new();
    let mut orbit_expected = Vec::new();
    let mut orbit_found = Vec::new();
    let mut coset_expected = Vec::new();
    let mut coset_found = Vec::new();
    for n in even_up_to(n_max) {
        let small = n <= 6;
        let config = EnumerateConfig {
            classify: true,
            representatives: small,
            fix_alpha: n >= 10,
            threads: options.threads,
            ..Default::default()
        };
        let r = enumerate_pavings(n, &config)?;
        let k = n / 2;
        rooted_expected.push(format!("n={n}: {} / {}", recurrence[k], &recurrence[k] * factorial(n - 1)));
        rooted_found.push(format!("n={n}: {} / {}", r.rooted_count, r.transitive_triples));
        iso_expected.push(format!("n={n}: {}", unlabeled[n]));
        iso_found.push(format!("n={n}: {}", r.iso_classes.unwrap_or(0)));
        if let Some(reps) = r.class_representatives {
            let sum: BigRational = reps
                .iter()
                .map(|c| BigRational::new(BigInt::from(n), BigInt::from(c.automorphisms)))
                .sum();
            orbit_expected.push(format!("n={n}: {}", recurrence[k]));
            orbit_found.push(format!("n={n}: {sum}"));
            for c in &reps {
                let rank_ok = c.paving.coset_graph().is_ok_and(|g| {
                    g.is_free()
                        && g.schreier_generators().len() == 1 + n / 2
                        && g.to_paving().as_ref() == Ok(&c.paving)
                });
                coset_expected.push(format!("{}: free, rank {}", c.paving, 1 + n / 2));
                coset_found.push(if rank_ok {
                    format!("{}: free, rank {}", c.paving, 1 + n / 2)
                } else {
                    format!("{}: bad coset graph", c.paving)
                });
            }
        }
    }
    s.compare("oracle-rooted", "rooted and transitive counts", rooted_expected, rooted_found);
    s.compare("oracle-iso-classes", "isomorphism class counts", iso_expected, iso_found);
    s.compare("orbit-stabilizer", "class sums of n/|Aut|", orbit_expected, orbit_found);
    s.compare("coset-graphs", "class representatives", coset_expected, coset_found);

    debug_assert_eq!(s.checks.len(), CHECK_NAMES.len());
    Ok(VerifyReport {
        max_darts: n_max,
        checks: s.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let opts = VerifyOptions {
            max_darts: 6,
            series_order: 20,
            ..Default::default()
        };
        let r = run_verification(&opts).unwrap();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECK_NAMES);
        for c in &r.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn every_fault_is_caught() {
        for name in CHECK_NAMES {
            let opts = VerifyOptions {
                max_darts: 4,
                series_order: 8,
                fault: Some(name.to_string()),
                ..Default::default()
            };
            let r = run_verification(&opts).unwrap();
            let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
            assert_eq!(failed, vec![name]);
        }
    }

    #[test]
    fn odd_bound_rounds_down_and_large_bound_is_refused() {
        let opts = VerifyOptions {
            max_darts: 3,
            series_order: 4,
            ..Default::default()
        };
        assert_eq!(run_verification(&opts).unwrap().max_darts, 2);
        let opts = VerifyOptions {
            max_darts: 12,
            ..Default::default()
        };
        assert!(run_verification(&opts).is_err());
    }
}
