//! Truncated formal power series with exact rational coefficients, and the
//! counting series built on top of them.
//!
//! A [`Series`] of order `N` knows the coefficients of `z^0 … z^N`; nothing
//! beyond `N` is represented. All arithmetic is exact, so recomputing at a
//! higher order never changes lower coefficients.

mod asymptotic;
mod rooted;
mod unlabeled;

pub use asymptotic::{
    asymptote_rooted, asymptote_unlabeled, asymptotic_rooted, asymptotic_table, asymptotic_unlabeled,
    AsymptoticReport, ASYMPTOTIC_PRECISION_BITS,
};
pub use rooted::{
    hypergeom_2f0_coeffs, hypergeom_ode_residual, riccati_residual, riccati_residual_of, riccati_w,
    rooted_by_recurrence, rooted_by_series, series_p, series_p_rooted, series_p_star, series_s2,
};
pub use unlabeled::{cycle_index_t, moebius, series_p_tilde, triple_hadamard_weighted, unlabeled_by_cycle_index};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default truncation order for series constructors.
pub const DEFAULT_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("log needs constant term 1, found {0}")]
    LogConstantTerm(String),
    #[error("exp needs constant term 0, found {0}")]
    ExpConstantTerm(String),
    #[error("coefficient of z^{0} is not an integer: {1}")]
    NotIntegral(usize, String),
    #[error("coefficient of z^{0} is negative: {1}")]
    Negative(usize, String),
    #[error("moebius function is undefined at 0")]
    MoebiusZero,
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl Series {
    pub fn zero(order: usize) -> Series {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Series {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c·z^k`, truncated at `order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Series {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients `z^0 …` padded with zeros or truncated to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Series {
        coeffs.resize(order + 1, BigRational::zero());
        Series { coeffs }
    }

    pub fn from_integers<I: Into<BigInt>>(values: impl IntoIterator<Item = I>, order: usize) -> Series {
        Self::from_coeffs(values.into_iter().map(|v| BigRational::from_integer(v.into())).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Series {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    fn check_order(&self, other: &Series) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i + k <= n {
                out.coeffs[i + k] = a.clone();
            }
        }
        out
    }

    /// `d/dz`; the result has order one less (at least 0).
    pub fn derivative(&self) -> Series {
        let n = self.order();
        let coeffs = (1..=n)
            .map(|k| &self.coeffs[k] * BigRational::from_integer(BigInt::from(k)))
            .collect::<Vec<_>>();
        Self::from_coeffs(coeffs, n.saturating_sub(1))
    }

    /// The Euler operator `z·d/dz`; keeps the order.
    pub fn theta(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| a * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        }
    }

    /// Substitutes `z ↦ z^m` and truncates at `order`. Coefficients above
    /// `self.order()` are treated as unknown, so `order` should not exceed
    /// `m · self.order()` (it is clamped there).
    pub fn substitute_power(&self, m: usize, order: usize) -> Series {
        assert!(m >= 1, "substitution exponent must be positive");
        let order = order.min(m * self.order());
        let mut out = Self::zero(order);
        for (k, a) in self.coeffs.iter().enumerate() {
            if k * m > order {
                break;
            }
            out.coeffs[k * m] = a.clone();
        }
        out
    }

    /// EGF Hadamard product: with `a_n = n!·[z^n]A`, `b_n = n!·[z^n]B`,
    /// the product has `n!·[z^n] = a_n b_n`, i.e. plain coefficient
    /// `[z^n]A · [z^n]B · n!`.
    pub fn hadamard(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let mut fact = BigInt::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, (a, b)) in self.coeffs.iter().zip(&other.coeffs).enumerate() {
            if n > 0 {
                fact *= BigInt::from(n);
            }
            coeffs.push(a * b * BigRational::from_integer(fact.clone()));
        }
        Ok(Series { coeffs })
    }

    /// Formal logarithm of a series with constant term 1, via
    /// `n·b_n = n·a_n − Σ_{k<n} k·b_k·a_{n−k}`.
    pub fn log(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut b = vec![BigRational::zero(); n + 1];
        for m in 1..=n {
            let mut acc = &self.coeffs[m] * BigRational::from_integer(BigInt::from(m));
            for k in 1..m {
                if !b[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc -= &b[k] * &self.coeffs[m - k] * BigRational::from_integer(BigInt::from(k));
                }
            }
            b[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        Ok(Series { coeffs: b })
    }

    /// Formal exponential of a series with constant term 0, via
    /// `n·e_n = Σ_{k=1..n} k·c_k·e_{n−k}`.
    pub fn exp(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut e = vec![BigRational::zero(); n + 1];
        e[0] = BigRational::one();
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !e[m - k].is_zero() {
                    acc += &self.coeffs[k] * &e[m - k] * BigRational::from_integer(BigInt::from(k));
                }
            }
            e[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        Ok(Series { coeffs: e })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// All coefficients as integers, or the first non-integral index.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NotIntegral(k, c.to_string()))
                }
            })
            .collect()
    }

    /// All coefficients as naturals (counting sequences).
    pub fn to_naturals(&self) -> Result<Vec<BigUint>, SeriesError> {
        self.to_integers()?
            .into_iter()
            .enumerate()
            .map(|(k, c)| c.to_biguint().ok_or_else(|| SeriesError::Negative(k, c.to_string())))
            .collect()
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

/// Human-readable sum of the nonzero terms, lowest degree first, followed
/// by `O(z^{N+1})`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{abs}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// `{ "order": N, "coeffs": ["p/q", …] }`; integers are written without a
/// denominator.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(|_| SeriesError::BadCoefficient(s.clone())))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if coeffs.len() > repr.order + 1 {
            return Err(serde::de::Error::custom("more coefficients than the order allows"));
        }
        Ok(Series::from_coeffs(coeffs, repr.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(s: &Series) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn mul_and_shift() {
        let a = Series::from_integers([1, 1], 4); // 1 + z
        let sq = a.mul(&a).unwrap();
        assert_eq!(ints(&sq), vec![1, 2, 1, 0, 0]);
        assert_eq!(ints(&sq.shift(3)), vec![0, 0, 0, 1, 2]);
        assert!(a.mul(&Series::one(3)).is_err());
    }

    #[test]
    fn exp_log_inverse() {
        // exp(z) has coefficients 1/k!
        let z = Series::monomial(BigRational::one(), 1, 8);
        let e = z.exp().unwrap();
        for k in 0..=8 {
            assert_eq!(e.coeff(k).unwrap(), &BigRational::new(BigInt::one(), factorial(k)));
        }
        assert_eq!(e.log().unwrap(), z);

        // log(1/(1-z)) = Σ z^k / k
        let geometric = Series::from_integers(vec![1; 7], 6);
        let l = geometric.log().unwrap();
        for k in 1..=6 {
            assert_eq!(l.coeff(k).unwrap(), &rat(1, k as i64));
        }
        assert!(matches!(z.log(), Err(SeriesError::LogConstantTerm(_))));
        assert!(matches!(e.exp(), Err(SeriesError::ExpConstantTerm(_))));
    }

    #[test]
    fn hadamard_unit_is_exp() {
        let z = Series::monomial(BigRational::one(), 1, 10);
        let unit = z.exp().unwrap();
        let x = Series::from_coeffs((0..=10).map(|k| rat(k * k - 3, k + 2)).collect(), 10);
        assert_eq!(unit.hadamard(&x).unwrap(), x);
        assert_eq!(x.hadamard(&unit).unwrap(), x);
    }

    #[test]
    fn derivative_and_theta() {
        let s = Series::from_integers([5, 1, 2, 3], 3);
        assert_eq!(ints(&s.derivative()), vec![1, 4, 9]);
        assert_eq!(ints(&s.theta()), vec![0, 1, 4, 9]);
    }

    #[test]
    fn substitute_power() {
        let s = Series::from_integers([1, 2, 3, 4], 3);
        assert_eq!(ints(&s.substitute_power(2, 6)), vec![1, 0, 2, 0, 3, 0, 4]);
        assert_eq!(ints(&s.substitute_power(3, 5)), vec![1, 0, 0, 2, 0, 0]);
        assert_eq!(s.substitute_power(2, 100).order(), 6);
    }

    #[test]
    fn display() {
        let s = Series::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(-1, 2), rat(3, 1)], 4);
        assert_eq!(s.to_string(), "z - 1/2*z^2 + 3*z^3 + O(z^5)");
        assert_eq!(Series::zero(2).to_string(), "0 + O(z^3)");
    }

    #[test]
    fn json_round_trip() {
        let s = Series::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(-1, 2)], 2);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":2,"coeffs":["1","0","-1/2"]}"#);
        assert_eq!(serde_json::from_str::<Series>(&text).unwrap(), s);
        assert!(serde_json::from_str::<Series>(r#"{"order":0,"coeffs":["1","2"]}"#).is_err());
        assert!(serde_json::from_str::<Series>(r#"{"order":1,"coeffs":["x"]}"#).is_err());
    }

    #[test]
    fn integrality() {
        let s = Series::from_coeffs(vec![rat(1, 1), rat(1, 2)], 1);
        assert_eq!(s.to_integers().unwrap_err(), SeriesError::NotIntegral(1, "1/2".into()));
        let s = Series::from_integers([1, -2], 1);
        assert!(matches!(s.to_naturals(), Err(SeriesError::Negative(1, _))));
    }
}
