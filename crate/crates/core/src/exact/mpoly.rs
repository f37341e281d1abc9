//! Sparse multivariate polynomials over `Q(zeta_s)` with a graded
//! lexicographic term order, plus the univariate Euclidean toolbox
//! (gcd, derivative, squarefree test) and exact multivariate division.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Signed;

use super::cyclo::CycloElem;
use super::rat::render_rat;
use super::ExactError;

/// An ordered list of variable names shared by all polynomials of a ring.
#[derive(Clone, Eq)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        Vars(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vars({})", self.0.join(","))
    }
}

/// Exponent vector. The order is graded lexicographic: higher total degree
/// first, ties broken by the exponent of the highest-ranked variable (the
/// last one in the `Vars` list), so `x_1 < ... < x_n < y_1 < ... < y_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vars,
    order: u32,
    terms: BTreeMap<Monomial, CycloElem>,
}

impl MPoly {
    pub fn zero(vars: &Vars, order: u32) -> Self {
        MPoly {
            vars: vars.clone(),
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars, order: u32) -> Self {
        Self::constant(vars, CycloElem::one(order))
    }

    pub fn constant(vars: &Vars, c: CycloElem) -> Self {
        let order = c.order();
        let mut p = Self::zero(vars, order);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &Vars, order: u32, idx: usize) -> Self {
        Self::var_pow(vars, order, idx, 1)
    }

    pub fn var_pow(vars: &Vars, order: u32, idx: usize, exp: u32) -> Self {
        let mut p = Self::zero(vars, order);
        if exp == 0 {
            return Self::one(vars, order);
        }
        p.terms
            .insert(Monomial::var(vars.len(), idx, exp), CycloElem::one(order));
        p
    }

    pub fn monomial(vars: &Vars, c: CycloElem, m: Monomial) -> Self {
        let order = c.order();
        let mut p = Self::zero(vars, order);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn as_constant(&self) -> Option<CycloElem> {
        if self.is_zero() {
            return Some(CycloElem::zero(self.order));
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Leading term in the graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &CycloElem)> {
        self.terms.iter().next_back()
    }

    /// Indices of variables that actually occur.
    pub fn vars_used(&self) -> Vec<usize> {
        let nv = self.vars.len();
        let mut used = vec![false; nv];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..nv).filter(|&i| used[i]).collect()
    }

    /// True when no variable in `range` occurs.
    pub fn is_free_of(&self, range: std::ops::Range<usize>) -> bool {
        self.terms
            .keys()
            .all(|m| m.0[range.clone()].iter().all(|&e| e == 0))
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.vars == other.vars && self.order == other.order,
            "polynomials from different rings"
        );
    }

    fn insert_term(&mut self, m: Monomial, c: CycloElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars, self.order);
        }
        let mut out = Self::zero(&self.vars, self.order);
        for (m, a) in &self.terms {
            out.insert_term(m.clone(), a * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &CycloElem) -> Self {
        let mut out = Self::zero(&self.vars, self.order);
        if c.is_zero() {
            return out;
        }
        for (mm, a) in &self.terms {
            out.insert_term(mm.mul(m), a * c);
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars, self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Exact multivariate division: `Some(q)` with `self = q * d`, else `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.assert_compatible(d);
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (dm, dc) = d.leading().unwrap();
        let dc_inv = dc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars, self.order);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(dm)?;
            let qc = rc * &dc_inv;
            let piece = d.mul_monomial(&qm, &qc);
            quot.insert_term(qm, qc);
            rem = &rem - &piece;
        }
        Some(quot)
    }

    /// Dense univariate view: `(variable index, coefficients constant-first)`.
    /// Constants are reported in the variable `fallback_var`.
    pub fn to_univariate(&self, fallback_var: Option<usize>) -> Result<(usize, Vec<CycloElem>), ExactError> {
        let used = self.vars_used();
        let idx = match used.len() {
            0 => fallback_var.unwrap_or(0),
            1 => used[0],
            _ => return Err(ExactError::Multivariate),
        };
        let deg = self.degree_in(idx) as usize;
        let mut coeffs = vec![CycloElem::zero(self.order); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[idx] as usize] = c.clone();
        }
        Ok((idx, coeffs))
    }

    pub fn from_univariate(vars: &Vars, order: u32, idx: usize, coeffs: &[CycloElem]) -> Self {
        let mut p = Self::zero(vars, order);
        for (k, c) in coeffs.iter().enumerate() {
            p.insert_term(Monomial::var(vars.len(), idx, k as u32), c.clone());
        }
        p
    }

    /// Formal derivative with respect to one variable.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars, self.order);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] = e - 1;
            out.insert_term(m2, c.scale(&crate::exact::rat::rat_int(e as i64)));
        }
        out
    }

    /// Canonical text rendering: terms in descending graded-lex order,
    /// explicit `^` exponents, `*` between factors.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let (sign_neg, body) = render_term(&self.vars, m, c);
            if out.is_empty() {
                if sign_neg {
                    out.push('-');
                }
            } else if sign_neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

/// Renders one term as `(is_negative, magnitude_text)`.
fn render_term(vars: &Vars, m: &Monomial, c: &CycloElem) -> (bool, String) {
    let mut factors: Vec<String> = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            factors.push(vars.name(i).to_string());
        } else {
            factors.push(format!("{}^{}", vars.name(i), e));
        }
    }
    if let Some(q) = c.as_rational() {
        let neg = q.is_negative();
        let mag = q.abs();
        let mut body = String::new();
        if factors.is_empty() {
            body.push_str(&render_rat(&mag));
        } else {
            if !mag.is_one() {
                body.push_str(&render_rat(&mag));
                body.push('*');
            }
            body.push_str(&factors.join("*"));
        }
        (neg, body)
    } else {
        // Full cyclotomic coefficient: keep it parenthesized, sign inside.
        let mut body = format!("({})", c.render());
        if !factors.is_empty() {
            body.push('*');
            body.push_str(&factors.join("*"));
        }
        (false, body)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.assert_compatible(rhs);
        let mut out = MPoly::zero(&self.vars, self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let mut out = MPoly::zero(&self.vars, self.order);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c);
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self.render())
    }
}

/// Monic gcd of two univariate polynomials over `Q(zeta_s)` by the
/// Euclidean algorithm. Rejects genuinely multivariate input.
pub fn poly_gcd(a: &MPoly, b: &MPoly) -> Result<MPoly, ExactError> {
    a.assert_compatible(b);
    let used: Vec<usize> = {
        let mut u = a.vars_used();
        u.extend(b.vars_used());
        u.sort_unstable();
        u.dedup();
        u
    };
    if used.len() > 1 {
        return Err(ExactError::Multivariate);
    }
    let idx = used.first().copied().unwrap_or(0);
    let (_, mut r0) = a.to_univariate(Some(idx))?;
    let (_, mut r1) = b.to_univariate(Some(idx))?;
    r0 = trim_univ(r0);
    r1 = trim_univ(r1);
    while !r1.is_empty() {
        let rem = univ_rem(&r0, &r1);
        r0 = r1;
        r1 = rem;
    }
    if r0.is_empty() {
        return Ok(MPoly::zero(a.vars(), a.order()));
    }
    // Normalize to a monic representative.
    let lead_inv = r0.last().unwrap().inv().expect("nonzero leading coefficient");
    let monic: Vec<CycloElem> = r0.iter().map(|c| c * &lead_inv).collect();
    Ok(MPoly::from_univariate(a.vars(), a.order(), idx, &monic))
}

fn trim_univ(mut v: Vec<CycloElem>) -> Vec<CycloElem> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn univ_rem(num: &[CycloElem], den: &[CycloElem]) -> Vec<CycloElem> {
    let dd = den.len() - 1;
    let lead_inv = den.last().unwrap().inv().expect("nonzero leading coefficient");
    let mut rem = num.to_vec();
    while rem.len() > dd {
        let q = rem.last().unwrap() * &lead_inv;
        let shift = rem.len() - 1 - dd;
        if !q.is_zero() {
            for (k, c) in den.iter().enumerate() {
                let delta = c * &q;
                rem[shift + k] = &rem[shift + k] - &delta;
            }
        }
        rem.pop();
        rem = trim_univ(rem);
        if rem.len() <= dd {
            break;
        }
    }
    trim_univ(rem)
}

/// `f` univariate over `Q(zeta_s)` is squarefree iff `gcd(f, f') = 1`.
pub fn squarefree_check(f: &MPoly) -> Result<bool, ExactError> {
    let used = f.vars_used();
    if used.len() > 1 {
        return Err(ExactError::Multivariate);
    }
    let idx = used.first().copied().unwrap_or(0);
    let g = poly_gcd(f, &f.derivative(idx))?;
    Ok(g.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat_int;

    fn ring() -> (Vars, u32) {
        (Vars::new(vec!["x"]), 2)
    }

    fn univ(coeffs: &[i64]) -> MPoly {
        let (vars, s) = ring();
        let cs: Vec<CycloElem> = coeffs
            .iter()
            .map(|&c| CycloElem::from_i64(s, c))
            .collect();
        MPoly::from_univariate(&vars, s, 0, &cs)
    }

    #[test]
    fn grlex_order_and_render() {
        let vars = Vars::new(vec!["x_1", "x_2"]);
        let s = 2;
        let x1 = MPoly::var(&vars, s, 0);
        let x2 = MPoly::var(&vars, s, 1);
        // x_2 > x_1 (later variable ranks higher), degree dominates.
        let p = &(&(&x1 * &x1) + &x2) + &MPoly::constant(&vars, CycloElem::from_i64(s, 3));
        assert_eq!(p.render(), "x_1^2 + x_2 + 3");
        let q = &(&x1 * &x2) - &x1.pow(2);
        assert_eq!(q.render(), "x_1*x_2 - x_1^2");
    }

    #[test]
    fn render_matches_spec_forms() {
        // f(x) = x^3 - x in the canonical rendering.
        let f = univ(&[0, -1, 0, 1]);
        assert_eq!(f.render(), "x^3 - x");
        let g = univ(&[1, 0, 0, 0, 1]);
        assert_eq!(g.render(), "x^4 + 1");
        let h = univ(&[2, -3]);
        assert_eq!(h.render(), "-3*x + 2");
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2, 2x) = x (monic).
        let a = univ(&[0, 0, 1]);
        let b = univ(&[0, 2]);
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g.render(), "x");
        // Coprime: gcd(x^3 - x, 3x^2 - 1) = 1.
        let f = univ(&[0, -1, 0, 1]);
        let fp = univ(&[-1, 0, 3]);
        assert!(poly_gcd(&f, &fp).unwrap().is_one());
    }

    #[test]
    fn squarefree_examples() {
        // Oracle for x^3 - x: disc(x^3 + px + q) = -4p^3 - 27q^2 = 4 != 0.
        assert!(squarefree_check(&univ(&[0, -1, 0, 1])).unwrap());
        // x^2(x-1) has the repeated factor x.
        assert!(!squarefree_check(&univ(&[0, 0, -1, 1])).unwrap());
        assert!(squarefree_check(&univ(&[1, 0, 0, 0, 1])).unwrap());
        // x^5 - x, derivative 5x^4 - 1, coprime.
        assert!(squarefree_check(&univ(&[0, -1, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn multivariate_rejected() {
        let vars = Vars::new(vec!["x", "y"]);
        let p = &MPoly::var(&vars, 2, 0) * &MPoly::var(&vars, 2, 1);
        assert!(matches!(
            squarefree_check(&p),
            Err(ExactError::Multivariate)
        ));
        assert!(matches!(
            poly_gcd(&p, &p),
            Err(ExactError::Multivariate)
        ));
    }

    #[test]
    fn exact_division() {
        let f = univ(&[0, -1, 0, 1]); // x^3 - x
        let d = univ(&[1, 1]); // x + 1
        let q = f.exact_div(&d).unwrap();
        assert_eq!(q.render(), "x^2 - x");
        let nd = univ(&[2, 1]); // x + 2 does not divide
        assert!(f.exact_div(&nd).is_none());
        // Scalar content divides too.
        let two = MPoly::constant(f.vars(), CycloElem::from_i64(2, 2));
        let h = f.scale(&CycloElem::from_rat(2, rat_int(2).into()));
        assert_eq!(h.exact_div(&two).unwrap(), f);
    }
}
