//! Arbitrary-precision rationals.
//!
//! `Rat` is a reduced fraction with positive denominator; `num-rational`
//! maintains that invariant through every operation, so equality of values
//! is representation equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

pub type Rat = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` (optionally signed). Floats are rejected: the
/// input convention everywhere is exact strings.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let t = s.trim();
    let bad = || ExactError::BadRational(s.to_string());
    match t.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn render_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// If `q = b^k` for a rational `b`, returns `b` (the real k-th root when it
/// is rational). Even `k` requires `q >= 0` and returns the nonnegative root.
pub fn kth_root(q: &Rat, k: u32) -> Option<Rat> {
    assert!(k >= 1);
    if q.is_zero() {
        return Some(Rat::zero());
    }
    if k % 2 == 0 && q.is_negative() {
        return None;
    }
    let (neg, numer) = if q.numer().is_negative() {
        (true, -q.numer())
    } else {
        (false, q.numer().clone())
    };
    let rn = num_integer::Roots::nth_root(&numer, k);
    let rd = num_integer::Roots::nth_root(q.denom(), k);
    if num_traits::pow(rn.clone(), k as usize) != numer
        || num_traits::pow(rd.clone(), k as usize) != *q.denom()
    {
        return None;
    }
    let root = Rat::new(if neg { -rn } else { rn }, rd);
    Some(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["3", "-7", "25/4", "-35/8", "0"] {
            let q = parse_rat(s).unwrap();
            assert_eq!(render_rat(&q), s);
        }
        assert_eq!(render_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert_eq!(render_rat(&parse_rat("-6/-4").unwrap()), "3/2");
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn kth_roots() {
        assert_eq!(kth_root(&rat(25, 4), 2), Some(rat(5, 2)));
        assert_eq!(kth_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(kth_root(&rat(-4, 1), 2), None);
        assert_eq!(kth_root(&rat(5, 1), 2), None);
        assert_eq!(kth_root(&rat(0, 1), 5), Some(rat(0, 1)));
        assert_eq!(kth_root(&rat(1, 32), 5), Some(rat(1, 2)));
    }
}
