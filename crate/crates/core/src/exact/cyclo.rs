//! The cyclotomic field `Q(zeta_s)`, realized as residues modulo the s-th
//! cyclotomic polynomial `Phi_s(t)`. For `s = 2` this collapses to `Q`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{render_rat, Rat};
use super::ExactError;

/// Euler's totient.
pub fn euler_phi(s: u32) -> u32 {
    assert!(s >= 1);
    let mut n = s;
    let mut result = s;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_monic_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let lead = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - dd;
        if !lead.is_zero() {
            quot[shift] = lead.clone();
            for (k, c) in den.iter().enumerate() {
                let idx = shift + k;
                let delta = c * &lead;
                rem[idx] -= delta;
            }
        }
        debug_assert!(rem.last().unwrap().is_zero());
        rem.pop();
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// The s-th cyclotomic polynomial `Phi_s(t)` as dense integer coefficients,
/// constant term first. Monic of degree `phi(s)`; the product of `Phi_d`
/// over all `d | s` is `t^s - 1`.
pub fn cyclotomic_polynomial(s: u32) -> Vec<BigInt> {
    assert!(s >= 1);
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&s) {
        return hit.as_ref().clone();
    }
    // Phi_s = (t^s - 1) / prod_{d | s, d < s} Phi_d.
    let mut num = vec![BigInt::zero(); s as usize + 1];
    num[0] = -BigInt::one();
    num[s as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..s {
        if s % d == 0 {
            den = poly_mul_int(&den, &cyclotomic_polynomial(d));
        }
    }
    let phi = poly_div_monic_int(&num, &den);
    debug_assert_eq!(phi.len() as u32 - 1, euler_phi(s));
    cache.lock().unwrap().insert(s, Arc::new(phi.clone()));
    phi
}

/// An element of `Q(zeta_s)`: coefficients of `1, zeta, ..., zeta^{phi(s)-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElem {
    order: u32,
    coeffs: Vec<Rat>,
}

impl CycloElem {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 2);
        let phi = euler_phi(order) as usize;
        CycloElem {
            order,
            coeffs: vec![Rat::zero(); phi],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat(order, Rat::one())
    }

    pub fn from_rat(order: u32, q: Rat) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = q;
        e
    }

    pub fn from_i64(order: u32, n: i64) -> Self {
        Self::from_rat(order, Rat::from_integer(BigInt::from(n)))
    }

    /// The primitive root of unity `zeta_s` itself.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// `zeta_s^k`, reduced to the canonical representative.
    pub fn zeta_pow(order: u32, k: u32) -> Self {
        assert!(order >= 2);
        let k = (k % order) as usize;
        let mut raw = vec![Rat::zero(); k + 1];
        raw[k] = Rat::one();
        Self::reduce(order, raw)
    }

    fn reduce(order: u32, mut raw: Vec<Rat>) -> Self {
        let phi_poly = cyclotomic_polynomial(order);
        let deg = phi_poly.len() - 1;
        // Long division by the monic Phi_s with rational coefficients.
        while raw.len() > deg {
            let lead = raw.last().unwrap().clone();
            let shift = raw.len() - 1 - deg;
            if !lead.is_zero() {
                for (k, c) in phi_poly.iter().enumerate().take(deg) {
                    let delta = Rat::from_integer(c.clone()) * &lead;
                    raw[shift + k] -= delta;
                }
            }
            raw.pop();
        }
        raw.resize(deg, Rat::zero());
        CycloElem {
            order,
            coeffs: raw,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// `Some(q)` when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic order mismatch: {} vs {}",
            self.order, other.order
        );
    }

    pub fn scale(&self, q: &Rat) -> Self {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_s` in `Q[t]`.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInverse(self.order));
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rat(self.order, q.recip()));
        }
        let modulus: Vec<Rat> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(Rat::from_integer)
            .collect();
        // Invariants: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi).
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![];
        let mut s1 = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, rem) = poly_divmod_rat(&r0, &r1);
            let s_next = poly_sub_rat(&s0, &poly_mul_rat(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
        }
        // r0 is a nonzero constant: gcd(a, Phi_s) since Phi_s is irreducible.
        assert_eq!(r0.len(), 1, "Phi_s must be coprime to any nonzero residue");
        let scale = r0[0].recip();
        let inv_raw: Vec<Rat> = s0.iter().map(|c| c * &scale).collect();
        Ok(Self::reduce(self.order, inv_raw))
    }

    /// Canonical text form, e.g. `-1/2`, `zeta`, `2*zeta^2 - zeta + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_mag = mag.is_one();
            if k == 0 || !unit_mag {
                out.push_str(&render_rat(&mag));
            }
            if k > 0 {
                if !unit_mag {
                    out.push('*');
                }
                out.push_str("zeta");
                if k > 1 {
                    out.push_str(&format!("^{}", k));
                }
            }
        }
        out
    }

    /// True when the element has more than one nonzero coordinate or its
    /// single term is not a plain rational; used to decide parenthesization.
    pub fn needs_parens(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
            || (self.as_rational().is_none())
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_mul_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn poly_sub_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

fn poly_divmod_rat(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!den.is_empty());
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = den.last().unwrap().recip();
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    while rem.len() > dd {
        let q = rem.last().unwrap() * &lead_inv;
        let shift = rem.len() - 1 - dd;
        if !q.is_zero() {
            quot[shift] = q.clone();
            for (k, c) in den.iter().enumerate() {
                let delta = c * &q;
                rem[shift + k] -= delta;
            }
        }
        rem.pop();
        rem = trim(rem);
        if rem.len() <= dd {
            break;
        }
    }
    (trim(quot), trim(rem))
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_order(rhs);
        CycloElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_order(rhs);
        CycloElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_order(rhs);
        let raw = poly_mul_rat(&self.coeffs, &rhs.coeffs);
        CycloElem::reduce(self.order, raw)
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem(s={}, {})", self.order, self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int_poly(&[1, 0, 1]));
        // Derived via the Moebius product below as well.
        assert_eq!(cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    /// Independent oracle: prod_{d|s} Phi_d(t) = t^s - 1, and the Moebius
    /// product for Phi_6 specifically.
    #[test]
    fn cyclotomic_product_oracle() {
        for s in 1..=30u32 {
            let mut prod = vec![BigInt::one()];
            let mut phi_sum = 0;
            for d in 1..=s {
                if s % d == 0 {
                    prod = poly_mul_int(&prod, &cyclotomic_polynomial(d));
                    phi_sum += euler_phi(d);
                }
            }
            let mut target = vec![BigInt::zero(); s as usize + 1];
            target[0] = -BigInt::one();
            target[s as usize] = BigInt::one();
            assert_eq!(prod, target, "product of Phi_d != t^{} - 1", s);
            assert_eq!(phi_sum, s, "sum of phi(d) over d|{} != {}", s, s);
        }
        // Moebius form for s = 6: (t^6-1)(t^1-1) / ((t^2-1)(t^3-1)).
        let num = poly_mul_int(&int_poly(&[-1, 0, 0, 0, 0, 0, 1]), &int_poly(&[-1, 1]));
        let den = poly_mul_int(&int_poly(&[-1, 0, 1]), &int_poly(&[-1, 0, 0, 1]));
        let q = poly_div_monic_int(&num, &den);
        assert_eq!(q, int_poly(&[1, -1, 1]));
    }

    #[test]
    fn zeta_power_reduction() {
        for s in 2..=12u32 {
            assert!(CycloElem::zeta_pow(s, s).is_one(), "zeta^s != 1 for s={}", s);
            let z = CycloElem::zeta(s);
            assert!(z.pow(s).is_one());
        }
    }

    #[test]
    fn invert_unit_root_s4() {
        // i^{-1} = -i.
        let z = CycloElem::zeta(4);
        let inv = z.inv().unwrap();
        assert_eq!(inv, -&z);
        assert!((&z * &inv).is_one());
    }

    #[test]
    fn invert_one_plus_zeta_s3() {
        // (1 + zeta)^{-1} = -zeta, because (1+zeta)(-zeta) = -zeta - zeta^2 = 1.
        let one = CycloElem::one(3);
        let z = CycloElem::zeta(3);
        let a = &one + &z;
        let inv = a.inv().unwrap();
        assert_eq!(inv, -&z);
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn invert_rational_scalar() {
        for s in [2u32, 3, 4, 5, 6] {
            let two = CycloElem::from_i64(s, 2);
            assert_eq!(
                two.inv().unwrap(),
                CycloElem::from_rat(s, rat(1, 2))
            );
        }
        assert!(matches!(
            CycloElem::zero(5).inv(),
            Err(ExactError::ZeroInverse(5))
        ));
    }

    #[test]
    fn render_forms() {
        let z = CycloElem::zeta(5);
        let e = &(&z * &z) - &CycloElem::from_rat(5, rat(1, 2));
        assert_eq!(e.render(), "zeta^2 - 1/2");
        assert_eq!(CycloElem::zero(3).render(), "0");
        assert_eq!(CycloElem::from_i64(2, -3).render(), "-3");
        // s = 2 collapses to Q: zeta_2 = -1.
        assert_eq!(CycloElem::zeta(2), CycloElem::from_i64(2, -1));
    }
}
