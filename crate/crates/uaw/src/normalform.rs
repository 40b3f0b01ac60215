//! Reduction of algebra elements to the two normal forms: sorted words
//! A^i B^j C^k with central alpha/beta/gamma monomials (the Omega-free basis),
//! and the Omega-augmented basis restricted to ijk = 0.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::algebra::{casimir_expansion, AlgebraElement, BasisForm, CentralMono, Generator, Word};
use crate::qfield::{scalars, RatFuncQ};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("element carries an Omega factor; expand it first or use to_main_basis")]
    OmegaPresent,
    #[error("rewrite worklist exceeded the safety bound (internal bug)")]
    NontermGuard,
}

/// Rewrite rule for one descending adjacent pair. Each rule either keeps the
/// word degree while strictly reducing inversions (the sorted leading term)
/// or strictly reduces the word degree, so rewriting terminates.
fn rewrite_pair(left: Generator, right: Generator) -> Vec<(Word, CentralMono, RatFuncQ)> {
    use Generator::*;
    let q = |k: i64| RatFuncQ::q_pow(k);
    let d1 = scalars::q_minus_qinv();
    let d2 = scalars::q2_minus_q2inv();
    let alpha1 = CentralMono { alpha: 1, ..Default::default() };
    let beta1 = CentralMono { beta: 1, ..Default::default() };
    let gamma1 = CentralMono { gamma: 1, ..Default::default() };
    let one = CentralMono::one();
    match (left, right) {
        // BA = q^2 AB + q(q^2-q^-2) C - q(q-q^-1) gamma
        (B, A) => vec![
            (Word(vec![A, B]), one, q(2)),
            (Word(vec![C]), one, q(1).mul(&d2)),
            (Word::empty(), gamma1, q(1).mul(&d1).neg()),
        ],
        // CA = q^-2 AC - q^-1(q^2-q^-2) B + q^-1(q-q^-1) beta
        (C, A) => vec![
            (Word(vec![A, C]), one, q(-2)),
            (Word(vec![B]), one, q(-1).mul(&d2).neg()),
            (Word::empty(), beta1, q(-1).mul(&d1)),
        ],
        // CB = q^2 BC + q(q^2-q^-2) A - q(q-q^-1) alpha
        (C, B) => vec![
            (Word(vec![B, C]), one, q(2)),
            (Word(vec![A]), one, q(1).mul(&d2)),
            (Word::empty(), alpha1, q(1).mul(&d1).neg()),
        ],
        _ => unreachable!("not a descending pair"),
    }
}

/// Sort every word by the three rewrite rules. Central factors (including
/// Omega) ride along untouched; the result has all words nondecreasing.
fn sort_words(u: &AlgebraElement) -> AlgebraElement {
    // Like terms are merged after every rewrite round; without the merge the
    // 3-way branching of the rules blows up combinatorially on long words.
    let mut out = AlgebraElement::zero();
    let mut cur: BTreeMap<(Word, CentralMono), RatFuncQ> = u
        .terms()
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect();
    while !cur.is_empty() {
        let mut next: BTreeMap<(Word, CentralMono), RatFuncQ> = BTreeMap::new();
        for ((word, cm), coeff) in cur {
            if coeff.is_zero() {
                continue;
            }
            let pos = word
                .0
                .windows(2)
                .position(|p| p[0] > p[1]);
            match pos {
                None => out.add_term(word, cm, coeff),
                Some(i) => {
                    let prefix = &word.0[..i];
                    let suffix = &word.0[i + 2..];
                    for (rw, rcm, rc) in rewrite_pair(word.0[i], word.0[i + 1]) {
                        let mut w =
                            Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
                        w.extend_from_slice(prefix);
                        w.extend_from_slice(&rw.0);
                        w.extend_from_slice(suffix);
                        let key = (Word(w), cm.mul(&rcm));
                        let add = coeff.mul(&rc);
                        match next.get_mut(&key) {
                            Some(c) => *c = c.add(&add),
                            None => {
                                next.insert(key, add);
                            }
                        }
                    }
                }
            }
        }
        cur = next;
    }
    out
}

/// Reduce to the Omega-free normal form (sorted words, alpha/beta/gamma
/// centrals only). Elements carrying an Omega factor are rejected.
pub fn normalize_pre(u: &AlgebraElement) -> Result<AlgebraElement, NormalizeError> {
    if u.terms().any(|((_, cm), _)| cm.omega > 0) {
        return Err(NormalizeError::OmegaPresent);
    }
    Ok(sort_words(u).with_form(BasisForm::PreNormal))
}

/// normalize_pre after expanding every Omega factor.
pub fn normalize_pre_expanding(u: &AlgebraElement) -> AlgebraElement {
    normalize_pre(&expand_omega(u)).expect("omega was expanded")
}

/// Replace every Omega^l factor by the l-th power of the Casimir expansion.
pub fn expand_omega(u: &AlgebraElement) -> AlgebraElement {
    let max_l = u.terms().map(|((_, cm), _)| cm.omega).max().unwrap_or(0);
    if max_l == 0 {
        return u.clone();
    }
    let mut powers = vec![AlgebraElement::one(), casimir_expansion()];
    for l in 2..=max_l {
        let next = powers[(l - 1) as usize].mul(&casimir_expansion());
        powers.push(next);
    }
    let mut out = AlgebraElement::zero();
    for ((w, cm), c) in u.terms() {
        let stripped = AlgebraElement::term(
            w.clone(),
            CentralMono { omega: 0, ..*cm },
            c.clone(),
        );
        out = out.add(&stripped.mul(&powers[cm.omega as usize]));
    }
    out
}

/// Omega * A^{i-1}B^{j-1}C^{k-1} in sorted Omega-free coordinates, leading
/// coefficient on the word A^i B^j C^k split off. Memoized: the table is
/// reused heavily by the PBW recursions.
fn omega_times_reduced(i: u32, j: u32, k: u32) -> (RatFuncQ, AlgebraElement) {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32, u32), (RatFuncQ, AlgebraElement)>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(i, j, k)) {
        return hit.clone();
    }
    let m = AlgebraElement::term(
        Word::sorted_power(i - 1, j - 1, k - 1),
        CentralMono::one(),
        RatFuncQ::one(),
    );
    let full = sort_words(&m.mul(&casimir_expansion()));
    let lead_word = Word::sorted_power(i, j, k);
    let c0 = full.coeff(&lead_word, &CentralMono::one());
    debug_assert!(!c0.is_zero());
    debug_assert_eq!(
        c0,
        RatFuncQ::q_pow(1 + 2 * (j as i64 - 1))
    );
    let rest = full.sub(&AlgebraElement::term(
        lead_word,
        CentralMono::one(),
        c0.clone(),
    ));
    let entry = (c0, rest);
    cache
        .lock()
        .unwrap()
        .insert((i, j, k), entry.clone());
    entry
}

const MAIN_BASIS_STEP_BOUND: usize = 5_000_000;

/// Reduce to the Omega-augmented normal form: sorted words with at least one
/// of A, B, C absent, arbitrary Omega exponent.
///
/// Words with all three letters present are eliminated through
/// Omega * A^{i-1}B^{j-1}C^{k-1} = c0 * A^i B^j C^k + (lower terms); each step
/// lowers (word degree, sum of min exponents) lexicographically.
pub fn to_main_basis(u: &AlgebraElement) -> Result<AlgebraElement, NormalizeError> {
    let mut cur = sort_words(u);
    let mut steps = 0usize;
    loop {
        let offending = cur
            .terms()
            .filter(|((w, _), _)| {
                let (i, j, k) = w.abc_exponents();
                i > 0 && j > 0 && k > 0
            })
            .max_by_key(|((w, _), _)| w.len())
            .map(|((w, cm), c)| (w.clone(), *cm, c.clone()));
        let Some((word, cm, coeff)) = offending else {
            return Ok(cur.with_form(BasisForm::MainNormal));
        };
        steps += 1;
        if steps > MAIN_BASIS_STEP_BOUND {
            return Err(NormalizeError::NontermGuard);
        }
        let (i, j, k) = word.abc_exponents();
        let (c0, rest) = omega_times_reduced(i, j, k);
        let scale = coeff.div(&c0).expect("leading coefficient is a unit");
        // remove the offending term
        cur = cur.sub(&AlgebraElement::term(word, cm, coeff));
        // add scale * M * Omega^{l+1}
        cur = cur.add(&AlgebraElement::term(
            Word::sorted_power(i - 1, j - 1, k - 1),
            CentralMono { omega: cm.omega + 1, ..cm },
            scale.clone(),
        ));
        // subtract scale * rest (central factors of the original term carry over)
        for ((w, rcm), c) in rest.terms() {
            cur = cur.sub(&AlgebraElement::term(
                w.clone(),
                CentralMono {
                    omega: cm.omega + rcm.omega,
                    alpha: cm.alpha + rcm.alpha,
                    beta: cm.beta + rcm.beta,
                    gamma: cm.gamma + rcm.gamma,
                },
                scale.mul(c),
            ));
        }
    }
}

/// Inverse conversion: expand Omega, then sort into the Omega-free basis.
pub fn from_main_basis(u: &AlgebraElement) -> AlgebraElement {
    normalize_pre_expanding(u)
}

/// True iff the element represents zero in the algebra.
pub fn is_zero(u: &AlgebraElement) -> bool {
    to_main_basis(u)
        .expect("normalization terminates")
        .is_structurally_zero()
}

/// The q-Dolan/Grady relation lhs - rhs in generators x, y:
/// x^3 y - [3] x^2 y x + [3] x y x^2 - y x^3 - (q^2-q^-2)^2 (yx - xy).
pub fn dolan_grady_defect(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let b3 = crate::qfield::bracket(3);
    let d2 = scalars::q2_minus_q2inv();
    let x2 = x.mul(x);
    let x3 = x2.mul(x);
    let lhs = x3
        .mul(y)
        .sub(&x2.mul(y).mul(x).scale(&b3))
        .add(&x.mul(y).mul(&x2).scale(&b3))
        .sub(&y.mul(&x3));
    let rhs = y.mul(x).sub(&x.mul(y)).scale(&d2.mul(&d2));
    lhs.sub(&rhs)
}
