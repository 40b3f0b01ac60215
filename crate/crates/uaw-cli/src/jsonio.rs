//! JSON import/export of algebra elements.
//!
//! Schema:
//! ```json
//! { "form": "raw|pre|main",
//!   "terms": [ { "word": "AAB", "omega": 0, "alpha": 0, "beta": 0,
//!                "gamma": 0,
//!                "coeff": { "num": [[2, "1"], [0, "-3/4"]],
//!                           "den": [[0, "1"]] } } ] }
//! ```
//! Term order follows the deterministic element order; exponent lists are in
//! increasing order; rationals are exact decimal-free strings.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use uaw::algebra::{AlgebraElement, BasisForm, CentralMono, Generator, Word};
use uaw::qfield::{LaurentPolyQ, RatFuncQ};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Serde(#[from] serde_json::Error),
    #[error("bad element data: {0}")]
    Data(String),
}

#[derive(Serialize, Deserialize)]
pub struct ElementJson {
    pub form: String,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub omega: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub coeff: CoeffJson,
}

#[derive(Serialize, Deserialize)]
pub struct CoeffJson {
    pub num: Vec<(i64, String)>,
    pub den: Vec<(i64, String)>,
}

fn poly_to_json(p: &LaurentPolyQ) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (*e, c.to_string())).collect()
}

fn poly_from_json(v: &[(i64, String)]) -> Result<LaurentPolyQ, JsonError> {
    let mut terms = Vec::with_capacity(v.len());
    for (e, s) in v {
        let c: BigRational = s
            .parse()
            .map_err(|_| JsonError::Data(format!("bad rational `{s}`")))?;
        terms.push((*e, c));
    }
    Ok(LaurentPolyQ::from_terms(terms))
}

fn form_name(form: BasisForm) -> &'static str {
    match form {
        BasisForm::Raw => "raw",
        BasisForm::PreNormal => "pre",
        BasisForm::MainNormal => "main",
    }
}

fn form_from_name(s: &str) -> Result<BasisForm, JsonError> {
    match s {
        "raw" => Ok(BasisForm::Raw),
        "pre" => Ok(BasisForm::PreNormal),
        "main" => Ok(BasisForm::MainNormal),
        _ => Err(JsonError::Data(format!("unknown form `{s}`"))),
    }
}

pub fn to_json(el: &AlgebraElement) -> ElementJson {
    let terms = el
        .terms_desc()
        .map(|((w, cm), c)| TermJson {
            word: w.0.iter().map(|g| g.letter()).collect(),
            omega: cm.omega,
            alpha: cm.alpha,
            beta: cm.beta,
            gamma: cm.gamma,
            coeff: CoeffJson {
                num: poly_to_json(c.numerator()),
                den: poly_to_json(c.denominator()),
            },
        })
        .collect();
    ElementJson {
        form: form_name(el.form()).to_string(),
        terms,
    }
}

pub fn from_json(doc: &ElementJson) -> Result<AlgebraElement, JsonError> {
    let form = form_from_name(&doc.form)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        let mut letters = Vec::with_capacity(t.word.len());
        for ch in t.word.chars() {
            letters.push(match ch {
                'A' => Generator::A,
                'B' => Generator::B,
                'C' => Generator::C,
                _ => {
                    return Err(JsonError::Data(format!(
                        "bad letter `{ch}` in word `{}`",
                        t.word
                    )))
                }
            });
        }
        let num = poly_from_json(&t.coeff.num)?;
        let den = poly_from_json(&t.coeff.den)?;
        let coeff = RatFuncQ::new(num, den)
            .map_err(|e| JsonError::Data(format!("bad coefficient: {e}")))?;
        terms.push((
            Word(letters),
            CentralMono {
                omega: t.omega,
                alpha: t.alpha,
                beta: t.beta,
                gamma: t.gamma,
            },
            coeff,
        ));
    }
    let el = AlgebraElement::from_terms(terms);
    if !el.check_form(form) {
        return Err(JsonError::Data(format!(
            "terms do not satisfy the `{}` form",
            doc.form
        )));
    }
    Ok(el.with_form(form))
}

pub fn render(el: &AlgebraElement) -> String {
    serde_json::to_string_pretty(&to_json(el)).expect("serializable")
}

pub fn parse(src: &str) -> Result<AlgebraElement, JsonError> {
    let doc: ElementJson = serde_json::from_str(src)?;
    from_json(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use uaw::normalform::to_main_basis;

    #[test]
    fn round_trip_is_bit_exact() {
        let el = crate::expr::parse_element("q^-2*B*A*C - [3]_q*alpha + Omega").unwrap();
        let main = to_main_basis(&el).unwrap();
        for e in [el, main] {
            let back = parse(&render(&e)).unwrap();
            assert_eq!(back, e);
            assert_eq!(back.form(), e.form());
        }
    }

    #[test]
    fn rejects_mislabelled_form() {
        let el = crate::expr::parse_element("B*A").unwrap();
        let mut doc = to_json(&el);
        doc.form = "main".into();
        let src = serde_json::to_string(&doc).unwrap();
        assert!(parse(&src).is_err());
    }
}
