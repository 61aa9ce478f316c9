//! Labelled counting: fixed-point-free involutions, all pavings, connected
//! pavings and rooted connected pavings.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factorial, rat, Series};

/// EGF of fixed-point-free involutions: `Σ z^{2k} / (2^k k!)`.
pub fn series_s2(order: usize) -> Series {
    let mut s = Series::zero(order);
    let mut denom = BigInt::one();
    for k in 0..=order / 2 {
        if k > 0 {
            denom *= BigInt::from(2 * k);
        }
        s = s.add(&Series::monomial(BigRational::new(BigInt::one(), denom.clone()), 2 * k, order))
            .expect("same order");
    }
    s
}

/// EGF of all (possibly disconnected) labelled pavings, `S₂ ⊙ S₂ ⊙ S₂`.
pub fn series_p_star(order: usize) -> Series {
    let s2 = series_s2(order);
    s2.hadamard(&s2)
        .and_then(|h| h.hadamard(&s2))
        .expect("same order")
}

/// EGF of connected labelled pavings, `log P*`.
pub fn series_p(order: usize) -> Series {
    series_p_star(order).log().expect("P* has constant term 1")
}

/// Ordinary generating function of rooted connected pavings,
/// `z·d/dz log P*`. Its coefficients are integers.
pub fn series_p_rooted(order: usize) -> Series {
    let s = series_p(order).theta();
    debug_assert!(s.is_integral());
    s
}

/// Rooted connected paving counts indexed by dart number `0..=max_darts`,
/// read off [`series_p_rooted`].
pub fn rooted_by_series(max_darts: usize) -> Vec<BigUint> {
    series_p_rooted(max_darts)
        .to_naturals()
        .expect("rooted counts are natural numbers")
}

/// `a_k` = number of rooted connected pavings on `2k` darts for
/// `k = 0..=max_k`, from
/// `a_0 = 0, a_1 = 1, a_{k+1} = 2(k+1)·a_k + Σ_{i=1}^{k-1} a_i·a_{k−i}`.
pub fn rooted_by_recurrence(max_k: usize) -> Vec<BigUint> {
    let mut a: Vec<BigUint> = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let next = match k {
            0 => BigUint::zero(),
            1 => BigUint::one(),
            _ => {
                let prev = k - 1;
                let mut acc = BigUint::from(2 * k) * &a[prev];
                for i in 1..prev {
                    acc += &a[i] * &a[prev - i];
                }
                acc
            }
        };
        a.push(next);
    }
    a
}

/// `f_k = ((2k)!/k!)² / 16^k` for `k = 0..=max_k`: the EGF coefficients of
/// `f(x) = ₂F₀(½, ½; x)`, with `P*(z) = f(2z²)`.
pub fn hypergeom_2f0_coeffs(max_k: usize) -> Vec<BigRational> {
    (0..=max_k)
        .map(|k| {
            let ratio = factorial(2 * k) / factorial(k);
            BigRational::new(&ratio * &ratio, BigInt::from(16).pow(k as u32))
        })
        .collect()
}

/// `θf − x(θ + ½)²f` for the ₂F₀ series, truncated at `order`; vanishes
/// identically.
pub fn hypergeom_ode_residual(order: usize) -> Series {
    let plain = hypergeom_2f0_coeffs(order)
        .into_iter()
        .enumerate()
        .map(|(k, fk)| fk / BigRational::from_integer(factorial(k)))
        .collect();
    let f = Series::from_coeffs(plain, order);
    let half = rat(1, 2);
    // (θ + ½)² f = θ²f + θf + f/4
    let shifted = f.theta().theta().add(&f.theta()).and_then(|s| s.add(&f.scale(&(&half * &half))));
    let rhs = shifted.expect("same order").shift(1);
    f.theta().sub(&rhs).expect("same order")
}

/// `w(x)` with `P°(z) = 2w(x)` under `x = 2z²`:
/// `[x^k] w = pav_r(2k) / 2^{k+1}`.
pub fn riccati_w(order: usize) -> Series {
    let rooted = rooted_by_series(2 * order);
    let coeffs = (0..=order)
        .map(|k| BigRational::new(BigInt::from(rooted[2 * k].clone()), BigInt::from(2).pow(k as u32 + 1)))
        .collect();
    Series::from_coeffs(coeffs, order)
}

/// `x²w′ − (1 − x)w + x·w² + x/4`, truncated at the order of `w`.
pub fn riccati_residual_of(w: &Series) -> Series {
    let n = w.order();
    let x2_wprime = w.theta().shift(1);
    let one_minus_x = Series::from_integers([1, -1], n);
    let linear = one_minus_x.mul(w).expect("same order");
    let quadratic = w.mul(w).expect("same order").shift(1);
    let constant = Series::monomial(rat(1, 4), 1, n);
    x2_wprime
        .sub(&linear)
        .and_then(|s| s.add(&quadratic))
        .and_then(|s| s.add(&constant))
        .expect("same order")
}

/// The Riccati residual of the rooted paving series, truncated at `order`
/// in `x`; vanishes identically.
pub fn riccati_residual(order: usize) -> Series {
    riccati_residual_of(&riccati_w(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn double_factorial_odd(n: usize) -> BigInt {
        // (n-1)!! for even n
        (1..n).step_by(2).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
    }

    #[test]
    fn s2_coefficients() {
        let s = series_s2(7);
        assert_eq!(s.coeff(0).unwrap(), &rat(1, 1));
        assert_eq!(s.coeff(2).unwrap(), &rat(1, 2));
        assert_eq!(s.coeff(6).unwrap(), &rat(1, 48));
        for k in [1, 3, 5, 7] {
            assert!(s.coeff(k).unwrap().is_zero());
        }
    }

    #[test]
    fn p_star_counts_involution_triples() {
        let p = series_p_star(30);
        assert_eq!(p.coeff(2).unwrap(), &rat(1, 2));
        for k in 0..=15 {
            let n = 2 * k;
            let total = p.coeff(n).unwrap() * BigRational::from_integer(factorial(n));
            let df = double_factorial_odd(n);
            assert_eq!(total, BigRational::from_integer(&df * &df * &df), "n = {n}");
            // closed form ((2k)!)² / (2^{3k} (k!)³)
            let fk = factorial(k);
            let closed = BigRational::new(
                factorial(n) * factorial(n),
                BigInt::from(2).pow(3 * k as u32) * &fk * &fk * &fk,
            );
            assert_eq!(p.coeff(n).unwrap(), &closed);
        }
    }

    #[test]
    fn p_star_is_2f0_at_2z_squared() {
        let f = hypergeom_2f0_coeffs(12);
        let p = series_p_star(24);
        for (k, fk) in f.iter().enumerate() {
            let expected = fk * BigRational::from_integer(BigInt::from(2).pow(k as u32))
                / BigRational::from_integer(factorial(k));
            assert_eq!(p.coeff(2 * k).unwrap(), &expected);
        }
    }

    #[test]
    fn rooted_series_matches_known_values() {
        let expected: [u64; 12] = [
            1, 4, 25, 208, 2146, 26368, 375733, 6092032, 110769550, 2232792064, 49426061818,
            1192151302144,
        ];
        let r = rooted_by_series(24);
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(r[2 * k + 2], BigUint::from(e));
        }
        for n in (1..=24).step_by(2) {
            assert!(r[n].is_zero());
        }
        assert!(r[0].is_zero());
    }

    #[test]
    fn recurrence_values() {
        let a = rooted_by_recurrence(10);
        assert_eq!(a[0], BigUint::zero());
        assert_eq!(a[1], BigUint::one());
        assert_eq!(a[2], BigUint::from(4u32));
        assert_eq!(a[3], BigUint::from(25u32));
        assert_eq!(a[10], BigUint::from(2232792064u64));
        assert!(rooted_by_recurrence(0).len() == 1);
    }

    #[test]
    fn recurrence_agrees_with_series() {
        let a = rooted_by_recurrence(30);
        let r = rooted_by_series(60);
        for k in 0..=30 {
            assert_eq!(a[k], r[2 * k], "k = {k}");
        }
    }

    #[test]
    fn raising_the_order_keeps_coefficients() {
        let low = series_p_rooted(12);
        let high = series_p_rooted(20);
        assert_eq!(high.truncate(12), low);
    }

    #[test]
    fn hypergeometric_coefficients() {
        let f = hypergeom_2f0_coeffs(20);
        assert_eq!(f[0], rat(1, 1));
        assert_eq!(f[1], rat(1, 4));
        for k in 0..20 {
            let half = rat(2 * k as i64 + 1, 2);
            assert_eq!(&f[k + 1] / &f[k], &half * &half);
        }
    }

    #[test]
    fn ode_and_riccati_residuals_vanish() {
        assert!(hypergeom_ode_residual(20).is_zero());
        assert!(riccati_residual(20).is_zero());
    }

    #[test]
    fn riccati_is_sensitive_to_a_single_value() {
        let w = riccati_w(12);
        let mut coeffs = w.coeffs().to_vec();
        // bump pav_r(10) by one
        coeffs[5] += BigRational::new(BigInt::one(), BigInt::from(2).pow(6));
        let bumped = Series::from_coeffs(coeffs, 12);
        let r = riccati_residual_of(&bumped);
        assert!(!r.is_zero());
        let first = r.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        assert_eq!(first.to_i64(), Some(5));
    }
}
