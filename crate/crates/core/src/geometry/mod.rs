//! Exact geometric models: pointed intervals (MPT), hooks and sticks, and the
//! interval models behind the 132 construction.
//!
//! Coordinates are [`BigRational`]s throughout. Nothing here uses floating
//! point; the renderers round only when printing pixel positions.

mod hook;
mod interval;
mod mpt;
pub mod render;

pub use hook::{
    hook_intersection_graph, hook_to_mpt, hook_word, mpt_to_hook, unit_interval_to_hooks, Hook,
    HookModel,
};
pub use interval::{
    build_co132_interval_model, co132_anchors, co132_word, Co132IntervalModel,
};
pub use mpt::{
    build_mpt_model, nested_pair, unit_adjust, unit_adjust_intervals, validate_mpt, MptModel,
    PointedInterval,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form: always `num/den`, e.g. `5/1`, `-2/3`.
pub fn fmt_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a plain integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (d != BigInt::from(0)).then(|| BigRational::new(n, d))
}

/// Decimal rendering with `digits` fractional digits, rounded half away from zero.
pub(crate) fn fmt_decimal(q: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = q * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let (whole, frac) = (&abs / &scale, &abs % &scale);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let frac = frac.to_string();
        let frac = format!("{}{frac}", "0".repeat(digits as usize - frac.len()));
        let frac = frac.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text() {
        assert_eq!(fmt_rational(&ratio(31, 6)), "31/6");
        assert_eq!(fmt_rational(&int(5)), "5/1");
        assert_eq!(fmt_rational(&ratio(2, -4)), "-1/2");
        assert_eq!(parse_rational("-1/2"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(fmt_decimal(&ratio(1, 3), 3), "0.333");
        assert_eq!(fmt_decimal(&ratio(2, 3), 3), "0.667");
        assert_eq!(fmt_decimal(&ratio(-5, 2), 3), "-2.5");
        assert_eq!(fmt_decimal(&int(40), 3), "40");
    }
}
