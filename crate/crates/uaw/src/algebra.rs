//! Elements of the universal Askey-Wilson algebra as linear combinations of
//! noncommutative words in A, B, C times central monomials Omega^l a^r b^s g^t,
//! with coefficients in Q(q).

use std::collections::BTreeMap;
use std::fmt;

use crate::qfield::{scalars, RatFuncQ};

/// The three algebra generators, totally ordered A < B < C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
}

impl Generator {
    pub fn letter(self) -> char {
        match self {
            Generator::A => 'A',
            Generator::B => 'B',
            Generator::C => 'C',
        }
    }
}

/// A finite word over the generators; the empty word is the identity.
///
/// Ordered by (length, lexicographic) so that term iteration is graded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Exponents (i, j, k) of A, B, C; only meaningful for sorted words.
    pub fn abc_exponents(&self) -> (u32, u32, u32) {
        let mut e = [0u32; 3];
        for g in &self.0 {
            e[*g as usize] += 1;
        }
        (e[0], e[1], e[2])
    }

    /// A^i B^j C^k.
    pub fn sorted_power(i: u32, j: u32, k: u32) -> Word {
        let mut v = Vec::with_capacity((i + j + k) as usize);
        v.extend(std::iter::repeat(Generator::A).take(i as usize));
        v.extend(std::iter::repeat(Generator::B).take(j as usize));
        v.extend(std::iter::repeat(Generator::C).take(k as usize));
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

/// Central monomial Omega^omega alpha^alpha beta^beta gamma^gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CentralMono {
    pub omega: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl CentralMono {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        CentralMono {
            omega: self.omega + other.omega,
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
            gamma: self.gamma + other.gamma,
        }
    }
}

/// Representation tag: raw, or one of the two normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisForm {
    Raw,
    /// Sorted words A^i B^j C^k, no Omega factor.
    PreNormal,
    /// Sorted words with ijk = 0; Omega exponent free.
    MainNormal,
}

pub type TermKey = (Word, CentralMono);

/// A finite Q(q)-linear combination of (word, central monomial) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<TermKey, RatFuncQ>,
    form: BasisForm,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
            form: BasisForm::Raw,
        }
    }

    pub fn one() -> Self {
        Self::term(Word::empty(), CentralMono::one(), RatFuncQ::one())
    }

    pub fn scalar(c: RatFuncQ) -> Self {
        Self::term(Word::empty(), CentralMono::one(), c)
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Word::single(g), CentralMono::one(), RatFuncQ::one())
    }

    pub fn central(cm: CentralMono) -> Self {
        Self::term(Word::empty(), cm, RatFuncQ::one())
    }

    pub fn alpha() -> Self {
        Self::central(CentralMono { alpha: 1, ..Default::default() })
    }

    pub fn beta() -> Self {
        Self::central(CentralMono { beta: 1, ..Default::default() })
    }

    pub fn gamma() -> Self {
        Self::central(CentralMono { gamma: 1, ..Default::default() })
    }

    pub fn omega() -> Self {
        Self::central(CentralMono { omega: 1, ..Default::default() })
    }

    pub fn term(word: Word, cm: CentralMono, coeff: RatFuncQ) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((word, cm), coeff);
        }
        AlgebraElement {
            terms,
            form: BasisForm::Raw,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, CentralMono, RatFuncQ)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (w, cm, c) in it {
            out.add_term(w, cm, c);
        }
        out
    }

    pub fn form(&self) -> BasisForm {
        self.form
    }

    pub fn with_form(mut self, form: BasisForm) -> Self {
        debug_assert!(self.check_form(form));
        self.form = form;
        self
    }

    /// Structural validation of a claimed form tag.
    pub fn check_form(&self, form: BasisForm) -> bool {
        match form {
            BasisForm::Raw => true,
            BasisForm::PreNormal => self
                .terms
                .keys()
                .all(|(w, cm)| w.is_sorted() && cm.omega == 0),
            BasisForm::MainNormal => self.terms.keys().all(|(w, _)| {
                if !w.is_sorted() {
                    return false;
                }
                let (i, j, k) = w.abc_exponents();
                i == 0 || j == 0 || k == 0
            }),
        }
    }

    pub fn is_structurally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &RatFuncQ)> {
        self.terms.iter()
    }

    /// Terms with the highest word first; the order used by all renderers.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&TermKey, &RatFuncQ)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, word: &Word, cm: &CentralMono) -> RatFuncQ {
        self.terms
            .get(&(word.clone(), *cm))
            .cloned()
            .unwrap_or_else(RatFuncQ::zero)
    }

    pub(crate) fn add_term(&mut self, word: Word, cm: CentralMono, coeff: RatFuncQ) {
        if coeff.is_zero() {
            return;
        }
        let key = (word, cm);
        match self.terms.get_mut(&key) {
            Some(c) => {
                let s = c.add(&coeff);
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Coefficientwise sum. The form tag is preserved when both operands share
    /// a normal form (normal forms are closed under addition), else raw.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((w, cm), c) in &other.terms {
            out.add_term(w.clone(), *cm, c.clone());
        }
        out.form = if self.form == other.form && self.form != BasisForm::Raw {
            self.form
        } else {
            BasisForm::Raw
        };
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.neg()))
                .collect(),
            form: self.form,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(c)))
                .collect(),
            form: self.form,
        }
    }

    /// Free-product multiplication: words concatenate, central exponents add.
    /// Relations are imposed by the normal-form routines, not here.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((w1, cm1), c1) in &self.terms {
            for ((w2, cm2), c2) in &other.terms {
                out.add_term(w1.concat(w2), cm1.mul(cm2), c1.mul(c2));
            }
        }
        out
    }

    /// uv - vu.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Total word degree of the highest term, 0 for scalars and zero.
    pub fn word_degree(&self) -> usize {
        self.terms.keys().map(|(w, _)| w.len()).max().unwrap_or(0)
    }
}

/// The defining expansion of the Casimir element:
/// qABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - qA alpha - q^-1 B beta - qC gamma.
pub fn casimir_expansion() -> AlgebraElement {
    use Generator::*;
    let q = |k: i64| RatFuncQ::q_pow(k);
    let cm = CentralMono::one;
    let a1 = CentralMono { alpha: 1, ..Default::default() };
    let b1 = CentralMono { beta: 1, ..Default::default() };
    let g1 = CentralMono { gamma: 1, ..Default::default() };
    AlgebraElement::from_terms([
        (Word(vec![A, B, C]), cm(), q(1)),
        (Word(vec![A, A]), cm(), q(2)),
        (Word(vec![B, B]), cm(), q(-2)),
        (Word(vec![C, C]), cm(), q(2)),
        (Word(vec![A]), a1, q(1).neg()),
        (Word(vec![B]), b1, q(-1).neg()),
        (Word(vec![C]), g1, q(1).neg()),
    ])
}

/// Which derived generator to expand in terms of A, B and centrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivedCentral {
    Alpha,
    Beta,
    Gamma,
    C,
}

/// The expression of C, alpha or beta through the generators A, B and gamma:
///   C     = gamma/(q+q^-1) - (qAB - q^-1 BA)/(q^2 - q^-2)
///   alpha = (B^2A - (q^2+q^-2)BAB + AB^2 + (q^2-q^-2)^2 A + (q-q^-1)^2 B gamma) / ((q-q^-1)(q^2-q^-2))
///   beta  = (A^2B - (q^2+q^-2)ABA + BA^2 + (q^2-q^-2)^2 B + (q-q^-1)^2 A gamma) / ((q-q^-1)(q^2-q^-2))
/// `Gamma` returns the generator itself (gamma is primitive in this presentation).
pub fn derived_central(which: DerivedCentral) -> AlgebraElement {
    use Generator::*;
    let q = |k: i64| RatFuncQ::q_pow(k);
    let g1 = CentralMono { gamma: 1, ..Default::default() };
    let cm = CentralMono::one;
    let d = scalars::q_minus_qinv().mul(&scalars::q2_minus_q2inv());
    match which {
        DerivedCentral::Gamma => AlgebraElement::gamma(),
        DerivedCentral::C => {
            let inv_pq = scalars::q_plus_qinv().inv().unwrap();
            let inv_d2 = scalars::q2_minus_q2inv().inv().unwrap();
            AlgebraElement::from_terms([
                (Word::empty(), g1, inv_pq),
                (Word(vec![A, B]), cm(), q(1).neg().mul(&inv_d2)),
                (Word(vec![B, A]), cm(), q(-1).mul(&inv_d2)),
            ])
        }
        DerivedCentral::Alpha => {
            let q2q2 = q(2).add(&q(-2));
            let sq = scalars::q2_minus_q2inv().mul(&scalars::q2_minus_q2inv());
            let sg = scalars::q_minus_qinv().mul(&scalars::q_minus_qinv());
            AlgebraElement::from_terms([
                (Word(vec![B, B, A]), cm(), RatFuncQ::one()),
                (Word(vec![B, A, B]), cm(), q2q2.neg()),
                (Word(vec![A, B, B]), cm(), RatFuncQ::one()),
                (Word(vec![A]), cm(), sq),
                (Word(vec![B]), g1, sg),
            ])
            .scale(&d.inv().unwrap())
        }
        DerivedCentral::Beta => {
            let q2q2 = q(2).add(&q(-2));
            let sq = scalars::q2_minus_q2inv().mul(&scalars::q2_minus_q2inv());
            let sg = scalars::q_minus_qinv().mul(&scalars::q_minus_qinv());
            AlgebraElement::from_terms([
                (Word(vec![A, A, B]), cm(), RatFuncQ::one()),
                (Word(vec![A, B, A]), cm(), q2q2.neg()),
                (Word(vec![B, A, A]), cm(), RatFuncQ::one()),
                (Word(vec![B]), cm(), sq),
                (Word(vec![A]), g1, sg),
            ])
            .scale(&d.inv().unwrap())
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((w, cm), c) in self.terms.iter().rev() {
            let negative = c.numerator().leading_coeff().is_negative();
            let mag = if negative { c.neg() } else { c.clone() };
            let trivial_mono = w.is_empty() && cm.is_one();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            if !(mag.is_one() && !trivial_mono) {
                write!(f, "{}", mag.fmt_factor())?;
                if !trivial_mono {
                    write!(f, "*")?;
                }
            }
            let mut parts: Vec<String> = Vec::new();
            let mut i = 0;
            while i < w.0.len() {
                let g = w.0[i];
                let mut run = 1;
                while i + run < w.0.len() && w.0[i + run] == g {
                    run += 1;
                }
                parts.push(if run == 1 {
                    g.letter().to_string()
                } else {
                    format!("{}^{}", g.letter(), run)
                });
                i += run;
            }
            for (name, e) in [
                ("Omega", cm.omega),
                ("alpha", cm.alpha),
                ("beta", cm.beta),
                ("gamma", cm.gamma),
            ] {
                if e == 1 {
                    parts.push(name.to_string());
                } else if e > 1 {
                    parts.push(format!("{}^{}", name, e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn gen(g: Generator) -> AlgebraElement {
        AlgebraElement::generator(g)
    }

    #[test]
    fn add_basics() {
        let a = gen(A);
        assert_eq!(a.add(&AlgebraElement::zero()), a);
        assert!(a.add(&a.neg()).is_structurally_zero());
        // like-term collection: qAB + q^-1 AB = (q+q^-1) AB
        let ab = gen(A).mul(&gen(B));
        let lhs = ab.scale(&RatFuncQ::q_pow(1)).add(&ab.scale(&RatFuncQ::q_pow(-1)));
        assert_eq!(lhs, ab.scale(&scalars::q_plus_qinv()));
    }

    #[test]
    fn mul_basics() {
        let v = gen(A).mul(&gen(B)).add(&gen(C).scale(&RatFuncQ::q_pow(3)));
        assert_eq!(AlgebraElement::one().mul(&v), v);
        assert_eq!(
            gen(A).mul(&gen(B)),
            AlgebraElement::term(Word(vec![A, B]), CentralMono::one(), RatFuncQ::one())
        );
        // distributivity
        let lhs = gen(A).add(&gen(B)).mul(&gen(C));
        let rhs = gen(A).mul(&gen(C)).add(&gen(B).mul(&gen(C)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_basics() {
        assert!(gen(A).commutator(&gen(A)).is_structurally_zero());
        assert!(AlgebraElement::one().commutator(&gen(B)).is_structurally_zero());
        let c = gen(B).commutator(&gen(A));
        assert_eq!(c.coeff(&Word(vec![B, A]), &CentralMono::one()), RatFuncQ::one());
        assert_eq!(
            c.coeff(&Word(vec![A, B]), &CentralMono::one()),
            RatFuncQ::one().neg()
        );
    }

    #[test]
    fn casimir_coefficients() {
        let cas = casimir_expansion();
        assert_eq!(cas.coeff(&Word(vec![A, B, C]), &CentralMono::one()), RatFuncQ::q_pow(1));
        let a1 = CentralMono { alpha: 1, ..Default::default() };
        assert_eq!(cas.coeff(&Word(vec![A]), &a1), RatFuncQ::q_pow(1).neg());
        assert!(cas.coeff(&Word::empty(), &CentralMono::one()).is_zero());
        assert_eq!(cas.num_terms(), 7);
        // omega exponent is zero everywhere
        assert!(cas.terms().all(|((_, cm), _)| cm.omega == 0));
    }

    #[test]
    fn derived_central_coefficients() {
        let c = derived_central(DerivedCentral::C);
        let want = RatFuncQ::q_pow(1)
            .neg()
            .div(&scalars::q2_minus_q2inv())
            .unwrap();
        assert_eq!(c.coeff(&Word(vec![A, B]), &CentralMono::one()), want);

        let alpha = derived_central(DerivedCentral::Alpha);
        let num = RatFuncQ::q_pow(2).add(&RatFuncQ::q_pow(-2)).neg();
        let den = scalars::q_minus_qinv().mul(&scalars::q2_minus_q2inv());
        assert_eq!(
            alpha.coeff(&Word(vec![B, A, B]), &CentralMono::one()),
            num.div(&den).unwrap()
        );

        let beta = derived_central(DerivedCentral::Beta);
        let g1 = CentralMono { gamma: 1, ..Default::default() };
        let want = scalars::q_minus_qinv().div(&scalars::q2_minus_q2inv()).unwrap();
        assert_eq!(beta.coeff(&Word(vec![A]), &g1), want);
    }

    #[test]
    fn central_exponents_add_under_mul() {
        let u = AlgebraElement::term(
            Word(vec![A]),
            CentralMono { omega: 1, alpha: 2, beta: 0, gamma: 1 },
            RatFuncQ::one(),
        );
        let v = AlgebraElement::term(
            Word(vec![B]),
            CentralMono { omega: 0, alpha: 1, beta: 3, gamma: 0 },
            RatFuncQ::q_pow(2),
        );
        let p = u.mul(&v);
        let ((_, cm), _) = p.terms().next().unwrap();
        assert_eq!(*cm, CentralMono { omega: 1, alpha: 3, beta: 3, gamma: 1 });
    }
}
