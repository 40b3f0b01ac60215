//! Exact arithmetic in Z-coefficient Laurent polynomials in `q` and their
//! fraction field Q(q), together with the q-integers `[n]_q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rat = BigRational;

pub fn rat(p: i64, r: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(r))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from(BigInt::from(p))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QFieldError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("specialization at q0 = {0} is forbidden (0 and roots of unity excluded)")]
    ForbiddenQ0(Rat),
    #[error("denominator vanishes at q0 = {0}")]
    PoleAtQ0(Rat),
}

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored as a map from exponent to coefficient; zero coefficients are never
/// stored, and the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolyQ {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPolyQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn q() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(Rat::is_one)
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    /// Lowest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Exact evaluation at q = q0 (q0 must be nonzero when negative exponents occur).
    pub fn eval(&self, q0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.coeffs {
            acc += c * rat_pow(q0, *e);
        }
        acc
    }

    /// Euclidean division for ordinary polynomials (min_exp >= 0 on both sides).
    fn div_rem(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero());
        debug_assert!(self.min_exp().map_or(true, |e| e >= 0));
        debug_assert!(den.min_exp().map_or(true, |e| e >= 0));
        let dd = den.max_exp().unwrap();
        let dl = den.leading_coeff();
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(rd) = rem.max_exp() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) / &dl;
            let m = Self::monomial(rd - dd, c);
            rem = rem.sub(&m.mul(den));
            quo = quo.add(&m);
        }
        (quo, rem)
    }

    /// Monic gcd over Q[q] for ordinary polynomials.
    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lc = a.leading_coeff();
            a.scale(&(Rat::one() / lc))
        }
    }
}

fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let b = if exp < 0 {
        Rat::one() / base
    } else {
        base.clone()
    };
    let mut acc = Rat::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Element of Q(q) as a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial (lowest exponent 0)
/// with nonzero constant term, monic, and coprime to the q-power-free part of
/// the numerator over Q[q]. Equal values have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: LaurentPolyQ,
    den: LaurentPolyQ,
}

impl RatFuncQ {
    pub fn new(num: LaurentPolyQ, den: LaurentPolyQ) -> Result<Self, QFieldError> {
        if den.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPolyQ, den: LaurentPolyQ) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self {
                num: LaurentPolyQ::zero(),
                den: LaurentPolyQ::one(),
            };
        }
        // Polynomial coefficients (the overwhelmingly common case) are
        // already canonical; skip the gcd machinery.
        if den.is_one() {
            return Self { num, den };
        }
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let n0 = num.shift(-a);
        let d0 = den.shift(-b);
        let g = n0.gcd(&d0);
        let (n1, r1) = n0.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (d1, r2) = d0.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lc = d1.leading_coeff();
        let inv_lc = Rat::one() / lc;
        Self {
            num: n1.scale(&inv_lc).shift(a - b),
            den: d1.scale(&inv_lc),
        }
    }

    pub fn from_poly(p: LaurentPolyQ) -> Self {
        Self::reduced(p, LaurentPolyQ::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPolyQ::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPolyQ::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(LaurentPolyQ::monomial(0, r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// q^k as a field element.
    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPolyQ::monomial(k, Rat::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn numerator(&self) -> &LaurentPolyQ {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolyQ {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self {
                num: self.num.add(&other.num),
                den: LaurentPolyQ::one(),
            };
        }
        Self::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self {
                num: self.num.mul(&other.num),
                den: LaurentPolyQ::one(),
            };
        }
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self, QFieldError> {
        if self.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, QFieldError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact rational value at q = q0; q0 in {0, 1, -1} is rejected outright.
    pub fn specialize(&self, q0: &Rat) -> Result<Rat, QFieldError> {
        if q0.is_zero() || q0.abs().is_one() {
            return Err(QFieldError::ForbiddenQ0(q0.clone()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QFieldError::PoleAtQ0(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

/// The q-integer [n]_q = (q^n - q^-n)/(q - q^-1), computed as the closed
/// summation q^{n-1} + q^{n-3} + ... + q^{1-n}.
pub fn bracket(n: i64) -> RatFuncQ {
    if n == 0 {
        return RatFuncQ::zero();
    }
    let m = n.unsigned_abs() as i64;
    let mut p = LaurentPolyQ::zero();
    let mut e = m - 1;
    while e >= 1 - m {
        p.add_term(e, Rat::one());
        e -= 2;
    }
    if n < 0 {
        p = p.neg();
    }
    RatFuncQ::from_poly(p)
}

/// The integer binomial (l+1 choose 2) embedded in Q(q).
pub fn binom2(l: u64) -> RatFuncQ {
    let v = BigInt::from(l) * BigInt::from(l + 1) / BigInt::from(2);
    RatFuncQ::from_rat(Rat::from(v))
}

fn fmt_rat(c: &Rat) -> String {
    format!("{}", c)
}

impl fmt::Display for LaurentPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", fmt_rat(&mag))?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl LaurentPolyQ {
    fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub(crate) fn fmt_atom(&self) -> String {
        if self.is_monomial() || self.is_zero() {
            format!("{}", self)
        } else {
            format!("({})", self)
        }
    }
}

impl RatFuncQ {
    /// Rendering suitable as a multiplicative factor: non-monomial numerators
    /// are parenthesized so `<coeff>*A*B` reparses unambiguously.
    pub fn fmt_factor(&self) -> String {
        if self.den == LaurentPolyQ::one() {
            self.num.fmt_atom()
        } else {
            format!("{}/{}", self.num.fmt_atom(), self.den.fmt_atom())
        }
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPolyQ::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num.fmt_atom(), self.den.fmt_atom())
        }
    }
}

/// Shorthand builders used throughout the crate and its tests.
pub mod scalars {
    use super::*;

    /// q - q^-1
    pub fn q_minus_qinv() -> RatFuncQ {
        RatFuncQ::q_pow(1).sub(&RatFuncQ::q_pow(-1))
    }

    /// q + q^-1
    pub fn q_plus_qinv() -> RatFuncQ {
        RatFuncQ::q_pow(1).add(&RatFuncQ::q_pow(-1))
    }

    /// q^2 - q^-2
    pub fn q2_minus_q2inv() -> RatFuncQ {
        RatFuncQ::q_pow(2).sub(&RatFuncQ::q_pow(-2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFuncQ {
        RatFuncQ::q_pow(1)
    }

    #[test]
    fn add_identity_and_inverse() {
        let x = bracket(5);
        assert_eq!(RatFuncQ::zero().add(&x), x);
        let a = scalars::q_minus_qinv();
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn add_cross_multiplication() {
        // 1/(q-q^-1) + 1/(q+q^-1) = 2q/((q-q^-1)(q+q^-1))
        let a = scalars::q_minus_qinv().inv().unwrap();
        let b = scalars::q_plus_qinv().inv().unwrap();
        let want = RatFuncQ::from_int(2)
            .mul(&q())
            .div(&scalars::q_minus_qinv().mul(&scalars::q_plus_qinv()))
            .unwrap();
        assert_eq!(a.add(&b), want);
    }

    #[test]
    fn mul_expansion() {
        // (q-q^-1)(q+q^-1) = q^2 - q^-2
        assert_eq!(
            scalars::q_minus_qinv().mul(&scalars::q_plus_qinv()),
            scalars::q2_minus_q2inv()
        );
    }

    #[test]
    fn inv_monomial_and_field_axiom() {
        assert_eq!(RatFuncQ::q_pow(2).inv().unwrap(), RatFuncQ::q_pow(-2));
        let a = RatFuncQ::q_pow(3)
            .sub(&RatFuncQ::from_int(2))
            .add(&RatFuncQ::q_pow(-3));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(RatFuncQ::zero().inv(), Err(QFieldError::DivisionByZero));
    }

    #[test]
    fn bracket_small_values() {
        assert!(bracket(0).is_zero());
        assert!(bracket(1).is_one());
        let want = RatFuncQ::q_pow(2)
            .add(&RatFuncQ::one())
            .add(&RatFuncQ::q_pow(-2));
        assert_eq!(bracket(3), want);
        // [3]_q agrees with the defining fraction
        let frac = RatFuncQ::q_pow(3)
            .sub(&RatFuncQ::q_pow(-3))
            .div(&scalars::q_minus_qinv())
            .unwrap();
        assert_eq!(bracket(3), frac);
    }

    #[test]
    fn bracket_antisymmetry() {
        for n in -15..=15 {
            assert_eq!(bracket(-n), bracket(n).neg());
        }
    }

    #[test]
    fn specialize_values() {
        assert_eq!(bracket(3).specialize(&rat_int(2)).unwrap(), rat(21, 4));
        assert_eq!(q().specialize(&rat(3, 2)).unwrap(), rat(3, 2));
        let a = scalars::q_minus_qinv().inv().unwrap();
        assert_eq!(
            a.specialize(&rat_int(1)),
            Err(QFieldError::ForbiddenQ0(rat_int(1)))
        );
        assert_eq!(
            a.specialize(&rat_int(0)),
            Err(QFieldError::ForbiddenQ0(rat_int(0)))
        );
    }

    #[test]
    fn specialize_pole() {
        // 1/(q - 2) has a pole at q0 = 2
        let a = q().sub(&RatFuncQ::from_int(2)).inv().unwrap();
        assert_eq!(a.specialize(&rat_int(2)), Err(QFieldError::PoleAtQ0(rat_int(2))));
    }

    #[test]
    fn binom2_values() {
        assert!(binom2(0).is_zero());
        assert!(binom2(1).is_one());
        assert_eq!(binom2(3), RatFuncQ::from_int(6));
    }

    #[test]
    fn canonical_form_uniqueness() {
        // same value built two ways is representation-equal
        let a = bracket(4).mul(&bracket(6)).div(&bracket(2)).unwrap();
        let b = bracket(6).div(&bracket(2)).unwrap().mul(&bracket(4));
        assert_eq!(a, b);
        // denominator is monic with nonzero constant term
        assert_eq!(a.denominator().min_exp().unwrap_or(0), 0);
    }

    #[test]
    fn display_matches_convention() {
        let x = scalars::q2_minus_q2inv()
            .div(&RatFuncQ::q_pow(4).add(&RatFuncQ::one()))
            .unwrap();
        assert_eq!(format!("{}", x), "(q^2 - q^-2)/(q^4 + 1)");
    }
}
