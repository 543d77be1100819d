//! The degree functions `β` and `γ`:
//! `β(d) = d` for odd `d`, `β(d) = β(d(d−1)/2)` for even `d`, and
//! `γ(d) = max_{1≤e≤d} β(2e)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{rat, rational_to_string, Rational};

/// Memoized `β`. Values grow doubly exponentially along each even chain, so
/// everything is arbitrary precision.
#[derive(Default)]
pub struct BetaTable {
    memo: HashMap<BigUint, BigUint>,
}

impl BetaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn beta(&mut self, d: &BigUint) -> BigUint {
        let mut path = Vec::new();
        let mut cur = d.clone();
        let value = loop {
            if let Some(v) = self.memo.get(&cur) {
                break v.clone();
            }
            if cur.is_odd() {
                break cur.clone();
            }
            let next = &cur * (&cur - 1u32) / 2u32;
            path.push(cur);
            cur = next;
        };
        for p in path {
            self.memo.insert(p, value.clone());
        }
        value
    }

    pub fn gamma(&mut self, d: u64) -> BigUint {
        (1..=d)
            .map(|e| self.beta(&BigUint::from(2 * e)))
            .max()
            .unwrap_or_else(BigUint::zero)
    }
}

/// `β(d)` for `d ≥ 1`.
pub fn beta(d: u64) -> BigUint {
    BetaTable::new().beta(&BigUint::from(d))
}

/// `γ(d)` for `d ≥ 1`.
pub fn gamma(d: u64) -> BigUint {
    BetaTable::new().gamma(d)
}

fn ser_big<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_opt_rat<S: Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(r) => s.serialize_str(&rational_to_string(r)),
        None => s.serialize_none(),
    }
}

/// `β(d)`, `γ(d)` and the explicit bounds around them. Bounds that only
/// apply for `d ≥ 4` are `None` below that.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBoundReport {
    pub d: u64,
    /// `d = 2^k s` with `s` odd.
    pub k: u32,
    pub s: u64,
    #[serde(serialize_with = "ser_big")]
    pub beta: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub gamma: BigUint,
    /// `(8/3)(¾ 2^{k−1} s)^{2^k}`
    #[serde(serialize_with = "ser_opt_rat")]
    pub beta_lower: Option<Rational>,
    /// `2 (2^{k−1} s)^{2^k}`
    #[serde(serialize_with = "ser_opt_rat")]
    pub beta_upper: Option<Rational>,
    /// `2 (d/2)^d`
    #[serde(serialize_with = "ser_opt_rat")]
    pub beta_upper_loose: Option<Rational>,
    /// `(3/8)^{d−1} d^d`
    #[serde(serialize_with = "ser_opt_rat")]
    pub gamma_lower: Option<Rational>,
    /// `2 d^{2d}`
    #[serde(serialize_with = "ser_opt_rat")]
    pub gamma_upper: Option<Rational>,
    pub d_squared: u64,
}

fn rpow(x: &Rational, e: u64) -> Rational {
    Pow::pow(x, e as u32)
}

fn big(x: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(x.clone()))
}

/// Evaluates `β(d)`, `γ(d)` and the bounds, and checks
/// `(8/3)(¾ 2^{k−1}s)^{2^k} ≤ β(d) ≤ 2(2^{k−1}s)^{2^k} ≤ 2(d/2)^d`,
/// `(3/8)^{d−1} d^d < (8/3)(¾ 2^{k'})^{2^{k'+1}} ≤ β(2^{k'+1}) ≤ γ(d) ≤ 2 d^{2d}`
/// (with `k' = ⌊log₂ d⌋`) for `d ≥ 4`, and `d² ≤ γ(d)` for all `d ≥ 1`.
pub fn bound_check(d: u64) -> Result<DegreeBoundReport> {
    if d == 0 || d > u32::MAX as u64 {
        return Err(Error::InvalidArgument(format!("d must be in 1..=2^32-1, got {d}")));
    }
    let mut table = BetaTable::new();
    let beta_d = table.beta(&BigUint::from(d));
    let gamma_d = table.gamma(d);
    let k = d.trailing_zeros();
    let s = d >> k;
    let violation = |what: &str| Err(Error::InequalityViolation(format!("{what} at d = {d}")));
    if gamma_d < BigUint::from(d) * d {
        return violation("d^2 <= gamma(d)");
    }
    let mut report = DegreeBoundReport {
        d,
        k,
        s,
        beta: beta_d.clone(),
        gamma: gamma_d.clone(),
        beta_lower: None,
        beta_upper: None,
        beta_upper_loose: None,
        gamma_lower: None,
        gamma_upper: None,
        d_squared: d * d,
    };
    if d < 4 {
        return Ok(report);
    }
    let e = 1u64 << k;
    // 2^{k-1} s = d / 2
    let half_d = rat(d as i64, 2);
    let lower = rat(8, 3) * rpow(&(rat(3, 4) * &half_d), e);
    let upper = rat(2, 1) * rpow(&half_d, e);
    let loose = rat(2, 1) * rpow(&half_d, d);
    let (b, g) = (big(&beta_d), big(&gamma_d));
    if !(lower <= b && b <= upper && upper <= loose) {
        return violation("beta sandwich");
    }
    let dr = Rational::from_integer(d.into());
    let g_upper = rat(2, 1) * rpow(&dr, 2 * d);
    let g_lower = rpow(&rat(3, 8), d - 1) * rpow(&dr, d);
    let kp = 63 - d.leading_zeros() as u64;
    let pow2 = 1u64 << (kp + 1);
    let mid_bound = rat(8, 3) * rpow(&(rat(3, 4) * Rational::from_integer((1u64 << kp).into())), pow2);
    let beta_pow2 = big(&table.beta(&BigUint::from(pow2)));
    if !(g_lower < mid_bound && mid_bound <= beta_pow2 && beta_pow2 <= g && g <= g_upper) {
        return violation("gamma bounds");
    }
    report.beta_lower = Some(lower);
    report.beta_upper = Some(upper);
    report.beta_upper_loose = Some(loose);
    report.gamma_lower = Some(g_lower);
    report.gamma_upper = Some(g_upper);
    Ok(report)
}

/// `β(d)` as `u64` when it fits; handy in tests and tables.
pub fn beta_u64(d: u64) -> Option<u64> {
    beta(d).to_u64()
}
