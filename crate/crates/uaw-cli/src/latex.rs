//! LaTeX rendering of coefficients and elements, following the conventions
//! q^{-1}, \alpha, \beta, \gamma, \Omega.

use num_traits::{One, Signed};
use uaw::algebra::AlgebraElement;
use uaw::qfield::{LaurentPolyQ, RatFuncQ};

fn rat_tex(c: &num_rational::BigRational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        let a = c.abs();
        format!("{sign}\\tfrac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

pub fn poly_tex(p: &LaurentPolyQ) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (e, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let (sign, mag) = if c.is_negative() {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if first {
            if sign == "-" {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let show_coeff = !mag.is_one() || *e == 0;
        if show_coeff {
            out.push_str(&rat_tex(&mag));
        }
        match *e {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&format!("q^{{{e}}}")),
        }
    }
    out
}

fn is_monomial(p: &LaurentPolyQ) -> bool {
    p.terms().count() == 1
}

pub fn coeff_tex(c: &RatFuncQ) -> String {
    if c.denominator() == &LaurentPolyQ::one() {
        poly_tex(c.numerator())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            poly_tex(c.numerator()),
            poly_tex(c.denominator())
        )
    }
}

/// Multiplicative-position rendering: sums are parenthesized.
fn coeff_tex_factor(c: &RatFuncQ) -> String {
    if c.denominator() == &LaurentPolyQ::one() && !is_monomial(c.numerator()) {
        format!("\\left({}\\right)", poly_tex(c.numerator()))
    } else {
        coeff_tex(c)
    }
}

pub fn element_tex(el: &AlgebraElement) -> String {
    if el.is_structurally_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for ((w, cm), c) in el.terms_desc() {
        let negative = c.numerator().leading_coeff().is_negative();
        let mag = if negative { c.neg() } else { c.clone() };
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let trivial_mono = w.is_empty() && cm.is_one();
        if !(mag.is_one() && !trivial_mono) {
            out.push_str(&coeff_tex_factor(&mag));
            if !trivial_mono {
                out.push_str(" \\, ");
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
                format!("{}^{{{run}}}", g.letter())
            });
            i += run;
        }
        for (name, e) in [
            ("\\Omega", cm.omega),
            ("\\alpha", cm.alpha),
            ("\\beta", cm.beta),
            ("\\gamma", cm.gamma),
        ] {
            if e == 1 {
                parts.push(name.to_string());
            } else if e > 1 {
                parts.push(format!("{name}^{{{e}}}"));
            }
        }
        out.push_str(&parts.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_commutator_normal_form() {
        let el = crate::expr::parse_element("B*A").unwrap();
        let main = uaw::normalform::to_main_basis(&el).unwrap();
        let tex = element_tex(&main);
        assert_eq!(
            tex,
            "q^{2} \\, A B + \\left(q^{3} - q^{-1}\\right) \\, C - \\left(q^{2} - 1\\right) \\, \\gamma"
        );
    }
}
