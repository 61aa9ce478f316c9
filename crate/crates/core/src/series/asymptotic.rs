//! Leading-order asymptotics for the rooted and unlabelled counts,
//! evaluated in 128-bit binary floating point and compared with the exact
//! values.
//!
//! ```text
//! pav_r(2k) ~ 2·√(2/π)·(2/e)^k·k^{k+1/2}
//! pav(2k)   ~   √(2/π)·(2/e)^k·k^{k−1/2}
//! ```
//!
//! Both are evaluated as `exp` of a logarithm so nothing overflows.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{rooted_by_recurrence, unlabeled_by_cycle_index};

/// Mantissa width used for the asymptotic formulas.
pub const ASYMPTOTIC_PRECISION_BITS: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone)]
pub struct AsymptoticReport {
    pub k: usize,
    pub exact: BigUint,
    pub asymptote: BigFloat,
    /// `exact / asymptote`.
    pub ratio: f64,
}

impl AsymptoticReport {
    pub fn asymptote_string(&self) -> String {
        self.asymptote.to_string()
    }
}

impl Serialize for AsymptoticReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AsymptoticReport", 4)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("exact", &self.exact.to_string())?;
        s.serialize_field("asymptote", &self.asymptote_string())?;
        s.serialize_field("ratio", &self.ratio)?;
        s.end()
    }
}

struct Ctx {
    p: usize,
    cc: Consts,
}

impl Ctx {
    fn new() -> Ctx {
        Ctx {
            p: ASYMPTOTIC_PRECISION_BITS,
            cc: Consts::new().expect("constant cache"),
        }
    }

    fn int(&self, x: u64) -> BigFloat {
        BigFloat::from_u64(x, self.p)
    }

    fn half(&self) -> BigFloat {
        self.int(1).div(&self.int(2), self.p, RM)
    }

    /// `ln(c·√(2/π)·(2/e)^k·k^{k+e})` with `e = ±½`.
    fn log_asymptote(&mut self, k: usize, leading: u64, plus_half: bool) -> BigFloat {
        let p = self.p;
        let ln2 = self.cc.ln_2(p, RM);
        let pi = self.cc.pi(p, RM);
        let ln_pi = pi.ln(p, RM, &mut self.cc);
        let kf = self.int(k as u64);
        let ln_k = kf.ln(p, RM, &mut self.cc);
        let half = self.half();

        let ln_sqrt = ln2.sub(&ln_pi, p, RM).mul(&half, p, RM);
        let ln_base = ln2.sub(&self.int(1), p, RM).mul(&kf, p, RM);
        let exponent = if plus_half { kf.add(&half, p, RM) } else { kf.sub(&half, p, RM) };
        let ln_power = exponent.mul(&ln_k, p, RM);
        let ln_lead = self.int(leading).ln(p, RM, &mut self.cc);
        ln_lead.add(&ln_sqrt, p, RM).add(&ln_base, p, RM).add(&ln_power, p, RM)
    }

    fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.p, RM, &mut self.cc)
    }

    fn ratio(&mut self, exact: &BigUint, asymptote: &BigFloat) -> f64 {
        let exact = BigFloat::parse(&exact.to_string(), Radix::Dec, self.p, RM, &mut self.cc);
        let r = exact.div(asymptote, self.p, RM);
        r.format(Radix::Dec, RM, &mut self.cc)
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .unwrap_or(f64::NAN)
    }
}

/// `2·√(2/π)·(2/e)^k·k^{k+1/2}`.
pub fn asymptote_rooted(k: usize) -> BigFloat {
    let mut ctx = Ctx::new();
    let l = ctx.log_asymptote(k, 2, true);
    ctx.exp(&l)
}

/// `√(2/π)·(2/e)^k·k^{k−1/2}`.
pub fn asymptote_unlabeled(k: usize) -> BigFloat {
    let mut ctx = Ctx::new();
    let l = ctx.log_asymptote(k, 1, false);
    ctx.exp(&l)
}

fn report(ctx: &mut Ctx, k: usize, exact: BigUint, rooted: bool) -> AsymptoticReport {
    let l = if rooted { ctx.log_asymptote(k, 2, true) } else { ctx.log_asymptote(k, 1, false) };
    let asymptote = ctx.exp(&l);
    let ratio = ctx.ratio(&exact, &asymptote);
    AsymptoticReport {
        k,
        exact,
        asymptote,
        ratio,
    }
}

/// Exact rooted count on `2k` darts (by recurrence) against its asymptote.
pub fn asymptotic_rooted(k: usize) -> AsymptoticReport {
    assert!(k >= 1, "k must be positive");
    let exact = rooted_by_recurrence(k).pop().expect("non-empty");
    report(&mut Ctx::new(), k, exact, true)
}

/// Exact unlabelled count on `2k` darts (by cycle index) against its
/// asymptote.
pub fn asymptotic_unlabeled(k: usize) -> AsymptoticReport {
    assert!(k >= 1, "k must be positive");
    let exact = unlabeled_by_cycle_index(2 * k)
        .expect("cycle-index counts are natural")
        .swap_remove(2 * k);
    report(&mut Ctx::new(), k, exact, false)
}

/// Rooted and unlabelled reports for `k = 1..=max_k`, sharing the exact
/// computations.
pub fn asymptotic_table(max_k: usize) -> (Vec<AsymptoticReport>, Vec<AsymptoticReport>) {
    let rooted = rooted_by_recurrence(max_k);
    let unlabeled = unlabeled_by_cycle_index(2 * max_k).expect("cycle-index counts are natural");
    let mut ctx = Ctx::new();
    let mut r = Vec::with_capacity(max_k);
    let mut u = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        r.push(report(&mut ctx, k, rooted[k].clone(), true));
        u.push(report(&mut ctx, k, unlabeled[2 * k].clone(), false));
    }
    (r, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_f64(x: &BigFloat) -> f64 {
        x.to_string().parse().unwrap()
    }

    #[test]
    fn small_k_against_f64_formula() {
        for k in 1..=20usize {
            let kf = k as f64;
            let direct = 2.0
                * (2.0 / std::f64::consts::PI).sqrt()
                * (2.0 / std::f64::consts::E).powf(kf)
                * kf.powf(kf + 0.5);
            let hp = to_f64(&asymptote_rooted(k));
            assert!((hp / direct - 1.0).abs() < 1e-12, "k = {k}: {hp} vs {direct}");
        }
    }

    #[test]
    fn unlabeled_is_rooted_over_2k() {
        let mut cc = Consts::new().unwrap();
        let p = ASYMPTOTIC_PRECISION_BITS;
        for k in [1usize, 5, 17, 40] {
            let r = asymptote_rooted(k);
            let u = asymptote_unlabeled(k);
            let q = r.div(&u, p, RM).div(&BigFloat::from_u64(2 * k as u64, p), p, RM);
            let err = q.sub(&BigFloat::from_u64(1, p), p, RM);
            let e: f64 = err.format(Radix::Dec, RM, &mut cc).unwrap().parse().unwrap();
            // agreement well beyond f64 precision
            assert!(e.abs() < 1e-30, "k = {k}: {e}");
        }
    }

    #[test]
    fn rooted_ratio_at_ten() {
        let r = asymptotic_rooted(10);
        assert_eq!(r.exact, BigUint::from(2232792064u64));
        assert!(r.ratio > 0.9 && r.ratio < 1.1, "{}", r.ratio);
    }

    #[test]
    fn table_matches_single_reports() {
        let (r, u) = asymptotic_table(6);
        assert_eq!(r.len(), 6);
        assert_eq!(r[5].exact, asymptotic_rooted(6).exact);
        assert_eq!(u[2].exact, BigUint::from(11u32));
        assert_eq!(u[5].exact, asymptotic_unlabeled(6).exact);
        let json = serde_json::to_value(&r[0]).unwrap();
        assert_eq!(json["k"], 1);
        assert_eq!(json["exact"], "1");
    }
}
