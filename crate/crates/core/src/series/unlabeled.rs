//! Unlabelled counting through the cycle index of the paving species.
//!
//! The cycle index of fixed-point-free involutions separates into a
//! product of one-variable factors `T_m(z_m)`; the triple product of
//! species becomes a weighted Hadamard cube of each factor, and connected
//! structures come from the Möbius-weighted plethystic logarithm. After
//! specialising `z_m = z^m`:
//!
//! ```text
//! P̃(z) = Σ_{m ≥ 1} Σ_{k ≥ 1} μ(k)/k · log H_m(z^{mk}),
//! H_m  = (T_m ⊙ T_m ⊙ T_m) with weights m^{j} j! on z_m^j
//! ```

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factorial, rat, Series, SeriesError};

/// Möbius function by trial division.
pub fn moebius(n: u64) -> Result<i8, SeriesError> {
    if n == 0 {
        return Err(SeriesError::MoebiusZero);
    }
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// `T_m(y) = exp(y²/(2m) + y/m)` for even `m`, `exp(y²/(2m))` for odd `m`,
/// expanded in its single variable `y` up to `order`.
pub fn cycle_index_t(m: usize, order: usize) -> Series {
    assert!(m >= 1, "cycle length must be positive");
    let m_i = m as i64;
    let mut arg = Series::monomial(rat(1, 2 * m_i), 2, order);
    if m % 2 == 0 {
        arg = arg
            .add(&Series::monomial(rat(1, m_i), 1, order))
            .expect("same order");
    }
    arg.exp().expect("argument has no constant term")
}

/// Weighted triple Hadamard product of a one-variable factor `t` of the
/// cycle index attached to cycle length `m`: the coefficient of `y^j`
/// becomes `t_j³ · (j!)² · m^{2j}`.
pub fn triple_hadamard_weighted(t: &Series, m: usize) -> Series {
    let m2 = BigInt::from(m * m);
    let mut weight_m = BigInt::one();
    let coeffs = t
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if j > 0 {
                weight_m *= &m2;
            }
            let fj = factorial(j);
            c * c * c * BigRational::from_integer(&fj * &fj * &weight_m)
        })
        .collect();
    Series::from_coeffs(coeffs, t.order())
}

/// Ordinary generating function of isomorphism classes of connected
/// pavings, truncated at `order`. Coefficients are integers.
pub fn series_p_tilde(order: usize) -> Series {
    let mut total = Series::zero(order);
    for m in 1..=order {
        let inner_order = order / m;
        let h = triple_hadamard_weighted(&cycle_index_t(m, inner_order), m);
        let log_h = h.log().expect("H_m has constant term 1");
        for k in 1..=order / m {
            let mu = moebius(k as u64).expect("k >= 1");
            if mu == 0 {
                continue;
            }
            let term = log_h
                .substitute_power(m * k, order)
                .scale(&rat(mu as i64, k as i64));
            let term = Series::from_coeffs(term.coeffs().to_vec(), order);
            total = total.add(&term).expect("same order");
        }
    }
    total
}

/// Counts of connected pavings up to isomorphism, indexed by dart number
/// `0..=max_darts`.
pub fn unlabeled_by_cycle_index(max_darts: usize) -> Result<Vec<BigUint>, SeriesError> {
    let s = series_p_tilde(max_darts);
    let out = s.to_naturals()?;
    debug_assert!(out.first().is_none_or(Zero::is_zero));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), Ok(1));
        assert_eq!(moebius(2), Ok(-1));
        assert_eq!(moebius(4), Ok(0));
        assert_eq!(moebius(6), Ok(1));
        assert_eq!(moebius(30), Ok(-1));
        assert_eq!(moebius(49), Ok(0));
        assert_eq!(moebius(97), Ok(-1));
        assert_eq!(moebius(0), Err(SeriesError::MoebiusZero));
    }

    #[test]
    fn moebius_sums_vanish() {
        // Σ_{d | n} μ(d) = [n = 1]
        for n in 1..200u64 {
            let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| moebius(d).unwrap() as i64).sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn t_factors() {
        let t1 = cycle_index_t(1, 6);
        assert_eq!(t1.coeff(2).unwrap(), &rat(1, 2));
        assert!(t1.coeff(1).unwrap().is_zero());
        let t2 = cycle_index_t(2, 6);
        assert_eq!(t2.coeff(1).unwrap(), &rat(1, 2));
        let t3 = cycle_index_t(3, 9);
        for k in (1..=9).step_by(2) {
            assert!(t3.coeff(k).unwrap().is_zero());
        }
        assert_eq!(t3.coeff(2).unwrap(), &rat(1, 6));
    }

    #[test]
    fn weighted_hadamard() {
        let h1 = triple_hadamard_weighted(&cycle_index_t(1, 4), 1);
        assert!(h1.coeff(1).unwrap().is_zero());
        // j = 2: (1/2)³ · (2!)² = 1/2
        assert_eq!(h1.coeff(2).unwrap(), &rat(1, 2));
        let h2 = triple_hadamard_weighted(&cycle_index_t(2, 4), 2);
        assert_eq!(h2.coeff(1).unwrap(), &rat(1, 2));
        assert!(h2.coeff(0).unwrap() == &rat(1, 1));
    }

    #[test]
    fn p_tilde_initial_terms() {
        let c = unlabeled_by_cycle_index(14).unwrap();
        let expected = [0u64, 0, 1, 0, 4, 0, 11, 0, 60, 0, 318, 0, 2806, 0, 29359];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(c[n], BigUint::from(e), "n = {n}");
        }
    }

    #[test]
    fn p_tilde_is_stable_under_order() {
        let low = series_p_tilde(10);
        let high = series_p_tilde(16);
        assert_eq!(high.truncate(10), low);
    }
}
