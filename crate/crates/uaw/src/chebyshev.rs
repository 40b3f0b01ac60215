//! Chebyshev polynomials of the second kind in the monic normalization
//! (U0 = 1, U1 = x, x U_n = U_{n+1} + U_{n-1}, U_n = 0 for n < 0), their
//! evaluation at the generator C, and truncated-series checks of the
//! generating-function identities.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, BasisForm, CentralMono, Generator, Word};
use crate::qfield::{bracket, rat_int, RatFuncQ, Rat};

/// Univariate polynomial over Q, keyed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn monomial(deg: u32, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(deg, coeff);
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> Rat {
        self.coeffs.get(&deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Rat)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, deg: u32, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let e = self.coeffs.entry(deg).or_insert_with(Rat::zero);
        *e += coeff;
        if e.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

/// The n-th monic Chebyshev polynomial of the second kind; zero for n < 0.
pub fn u_poly(n: i64) -> UPoly {
    if n < 0 {
        return UPoly::zero();
    }
    let mut prev = UPoly::one(); // U_0
    if n == 0 {
        return prev;
    }
    let mut cur = UPoly::x(); // U_1
    let x = UPoly::x();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// U_n by the alternating binomial sum over x^{n-2i}.
pub fn u_closed_sum(n: u32) -> UPoly {
    let mut out = UPoly::zero();
    let mut binom = Rat::one(); // C(n - i, i)
    for i in 0..=(n / 2) {
        let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
        out.add_term(n - 2 * i, sign * &binom);
        // C(n-i-1, i+1) = C(n-i, i) * (n-2i)(n-2i-1) / ((i+1)(n-i))
        if n >= 2 * i + 2 {
            binom = binom * rat_int((n - 2 * i) as i64) * rat_int((n - 2 * i - 1) as i64)
                / (rat_int((i + 1) as i64) * rat_int((n - i) as i64));
        }
    }
    out
}

/// Symmetric Laurent polynomial in z (fixed under z -> z^-1).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymmetricLaurent {
    coeffs: BTreeMap<i64, Rat>,
}

impl SymmetricLaurent {
    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(it: I) -> Self {
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        let out = Self { coeffs };
        debug_assert!(out.is_symmetric());
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeff(-e) == *c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        Self::from_terms(terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, k)| (*e, k * c)))
    }
}

/// U_n under the identification x = z + z^-1: z^n + z^{n-2} + ... + z^{-n}.
pub fn u_via_z(n: u32) -> SymmetricLaurent {
    let n = n as i64;
    SymmetricLaurent::from_terms((0..=n).map(|i| (n - 2 * i, Rat::one())))
}

/// Push a polynomial in x through x -> z + z^-1.
pub fn substitute_z(p: &UPoly) -> SymmetricLaurent {
    let x = SymmetricLaurent::from_terms([(1, Rat::one()), (-1, Rat::one())]);
    let mut out = SymmetricLaurent::default();
    let mut xpow = SymmetricLaurent::from_terms([(0, Rat::one())]);
    let mut cur_deg = 0u32;
    for (d, c) in p.terms() {
        while cur_deg < *d {
            xpow = xpow.mul(&x);
            cur_deg += 1;
        }
        out = out.add(&xpow.scale(c));
    }
    out
}

/// coeff * U_n(C) as an algebra element (powers of C are basis monomials).
pub fn u_at_c(n: i64, coeff: &RatFuncQ) -> AlgebraElement {
    let p = u_poly(n);
    let mut out = AlgebraElement::zero();
    for (d, c) in p.terms() {
        let word = Word(vec![Generator::C; *d as usize]);
        out.add_term(word, CentralMono::one(), RatFuncQ::from_rat(c.clone()).mul(coeff));
    }
    out.with_form(BasisForm::PreNormal)
}

/// Polynomial in x with coefficients in Q(q); the coefficient domain of the
/// truncated generating-function series.
pub type XPoly = BTreeMap<u32, RatFuncQ>;

fn xp_zero() -> XPoly {
    XPoly::new()
}

fn xp_scalar(c: RatFuncQ) -> XPoly {
    let mut p = XPoly::new();
    if !c.is_zero() {
        p.insert(0, c);
    }
    p
}

fn xp_x() -> XPoly {
    let mut p = XPoly::new();
    p.insert(1, RatFuncQ::one());
    p
}

fn xp_from_upoly(p: &UPoly) -> XPoly {
    p.terms()
        .map(|(d, c)| (*d, RatFuncQ::from_rat(c.clone())))
        .collect()
}

fn xp_add_assign(a: &mut XPoly, b: &XPoly) {
    for (d, c) in b {
        let cur = a.entry(*d).or_insert_with(RatFuncQ::zero);
        let s = cur.add(c);
        if s.is_zero() {
            a.remove(d);
        } else {
            *cur = s;
        }
    }
}

fn xp_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = xp_zero();
    for (d1, c1) in a {
        for (d2, c2) in b {
            let prod = c1.mul(c2);
            if prod.is_zero() {
                continue;
            }
            let cur = out.entry(d1 + d2).or_insert_with(RatFuncQ::zero);
            let s = cur.add(&prod);
            if s.is_zero() {
                out.remove(&(d1 + d2));
            } else {
                *cur = s;
            }
        }
    }
    out
}

fn xp_scale(a: &XPoly, c: &RatFuncQ) -> XPoly {
    if c.is_zero() {
        return xp_zero();
    }
    a.iter().map(|(d, k)| (*d, k.mul(c))).collect()
}

/// Truncated formal series in t with XPoly coefficients, exponents 0..=order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: i64,
    coeffs: BTreeMap<i64, XPoly>,
}

impl TruncatedSeries {
    pub fn new(order: i64) -> Self {
        Self {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, exp: i64, p: XPoly) {
        if exp <= self.order && !p.is_empty() {
            self.coeffs.insert(exp, p);
        }
    }

    pub fn coeff(&self, exp: i64) -> XPoly {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Multiply by a finite polynomial in t (nonnegative t-exponents), keeping
    /// the truncation order; exact through t^order.
    pub fn mul_poly(&self, poly: &[(i64, XPoly)]) -> Self {
        let mut out = Self::new(self.order);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in poly {
                debug_assert!(*e2 >= 0);
                let e = e1 + e2;
                if e > self.order {
                    continue;
                }
                let prod = xp_mul(c1, c2);
                let entry = out.coeffs.entry(e).or_insert_with(xp_zero);
                xp_add_assign(entry, &prod);
                if entry.is_empty() {
                    out.coeffs.remove(&e);
                }
            }
        }
        out
    }

    pub fn equals_poly(&self, poly: &[(i64, XPoly)]) -> bool {
        let mut want: BTreeMap<i64, XPoly> = BTreeMap::new();
        for (e, c) in poly {
            if !c.is_empty() && *e <= self.order {
                want.insert(*e, c.clone());
            }
        }
        self.coeffs == want
    }
}

/// The eight generating-function identities verified in denominator-cleared
/// polynomial form at a finite truncation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesId {
    /// sum t^n U_n(x) * (1 - tx + t^2) = 1
    Gf,
    /// sum (-1)^n q^n t^n U_{n-1}(x) * (qt^2 + xt + q^-1) = -t
    VarPlus,
    /// sum (-1)^n q^-n t^n U_{n-1}(x) * (q^-1 t^2 + xt + q) = -t
    VarMinus,
    /// sum (-1)^n [n]_q t^n U_{n-1}(x) * (qt^2+xt+q^-1)(q^-1 t^2+xt+q) = t^3 - t
    Tbrack,
    /// sum t^{2l} * (t^2 - 1) = -1
    SumEven,
    /// sum l t^{2l} * (t^2 - 1)^2 = t^2
    SumEll,
    /// sum l^2 t^{2l} * t(t^2 - 1)^3 = -t^5 - t^3
    SumEllSq,
    /// sum C(l+1, 2) t^{2l+1} * (t^2 - 1)^3 = -t^3
    SumBinom,
}

impl SeriesId {
    pub const ALL: [SeriesId; 8] = [
        SeriesId::Gf,
        SeriesId::VarPlus,
        SeriesId::VarMinus,
        SeriesId::Tbrack,
        SeriesId::SumEven,
        SeriesId::SumEll,
        SeriesId::SumEllSq,
        SeriesId::SumBinom,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SeriesId::Gf => "gf",
            SeriesId::VarPlus => "var-plus",
            SeriesId::VarMinus => "var-minus",
            SeriesId::Tbrack => "tbrack",
            SeriesId::SumEven => "sum-even",
            SeriesId::SumEll => "sum-ell",
            SeriesId::SumEllSq => "sum-ellsq",
            SeriesId::SumBinom => "sum-binom",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|id| id.name() == s)
    }
}

fn sign(n: i64) -> RatFuncQ {
    if n % 2 == 0 {
        RatFuncQ::one()
    } else {
        RatFuncQ::from_int(-1)
    }
}

/// Check one generating-function identity through t-order `order`.
pub fn check_series_identity(id: SeriesId, order: u32) -> bool {
    let n = order as i64;
    let q = |k: i64| RatFuncQ::q_pow(k);
    let one = || xp_scalar(RatFuncQ::one());
    let neg_one = || xp_scalar(RatFuncQ::from_int(-1));
    match id {
        SeriesId::Gf => {
            let mut s = TruncatedSeries::new(n);
            for m in 0..=n {
                s.set(m, xp_from_upoly(&u_poly(m)));
            }
            let d = vec![(0, one()), (1, xp_scale(&xp_x(), &RatFuncQ::from_int(-1))), (2, one())];
            s.mul_poly(&d).equals_poly(&[(0, one())])
        }
        SeriesId::VarPlus | SeriesId::VarMinus => {
            let e = if id == SeriesId::VarPlus { 1 } else { -1 };
            let mut s = TruncatedSeries::new(n);
            for m in 0..=n {
                s.set(m, xp_scale(&xp_from_upoly(&u_poly(m - 1)), &sign(m).mul(&q(e * m))));
            }
            let d = vec![(0, xp_scalar(q(-e))), (1, xp_x()), (2, xp_scalar(q(e)))];
            s.mul_poly(&d).equals_poly(&[(1, neg_one())])
        }
        SeriesId::Tbrack => {
            let mut s = TruncatedSeries::new(n);
            for m in 0..=n {
                s.set(m, xp_scale(&xp_from_upoly(&u_poly(m - 1)), &sign(m).mul(&bracket(m))));
            }
            let d1 = vec![(0, xp_scalar(q(-1))), (1, xp_x()), (2, xp_scalar(q(1)))];
            let d2 = vec![(0, xp_scalar(q(1))), (1, xp_x()), (2, xp_scalar(q(-1)))];
            s.mul_poly(&d1)
                .mul_poly(&d2)
                .equals_poly(&[(1, neg_one()), (3, one())])
        }
        SeriesId::SumEven => {
            let mut s = TruncatedSeries::new(n);
            for l in 0..=(n / 2) {
                s.set(2 * l, one());
            }
            let d = vec![(0, neg_one()), (2, one())];
            s.mul_poly(&d).equals_poly(&[(0, neg_one())])
        }
        SeriesId::SumEll => {
            let mut s = TruncatedSeries::new(n);
            for l in 0..=(n / 2) {
                s.set(2 * l, xp_scalar(RatFuncQ::from_int(l)));
            }
            // (t^2 - 1)^2 = t^4 - 2t^2 + 1
            let d = vec![
                (0, one()),
                (2, xp_scalar(RatFuncQ::from_int(-2))),
                (4, one()),
            ];
            s.mul_poly(&d).equals_poly(&[(2, one())])
        }
        SeriesId::SumEllSq => {
            let mut s = TruncatedSeries::new(n);
            for l in 0..=(n / 2) {
                s.set(2 * l, xp_scalar(RatFuncQ::from_int(l * l)));
            }
            // t (t^2 - 1)^3 = t^7 - 3t^5 + 3t^3 - t
            let d = vec![
                (1, neg_one()),
                (3, xp_scalar(RatFuncQ::from_int(3))),
                (5, xp_scalar(RatFuncQ::from_int(-3))),
                (7, one()),
            ];
            s.mul_poly(&d)
                .equals_poly(&[(3, neg_one()), (5, neg_one())])
        }
        SeriesId::SumBinom => {
            let mut s = TruncatedSeries::new(n);
            let mut l = 0;
            while 2 * l + 1 <= n {
                s.set(2 * l + 1, xp_scalar(crate::qfield::binom2(l as u64)));
                l += 1;
            }
            // (t^2 - 1)^3 = t^6 - 3t^4 + 3t^2 - 1
            let d = vec![
                (0, neg_one()),
                (2, xp_scalar(RatFuncQ::from_int(3))),
                (4, xp_scalar(RatFuncQ::from_int(-3))),
                (6, one()),
            ];
            s.mul_poly(&d).equals_poly(&[(3, neg_one())])
        }
    }
}
