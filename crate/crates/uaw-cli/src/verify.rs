//! Verification suites aggregating the library's identities into a report.

use std::time::Instant;

use serde::Serialize;
use uaw::algebra::{casimir_expansion, AlgebraElement, DerivedCentral};
use uaw::chebyshev::{
    check_series_identity, substitute_z, u_closed_sum, u_poly, u_via_z, SeriesId,
};
use uaw::normalform::{
    dolan_grady_defect, expand_omega, from_main_basis, is_zero, normalize_pre_expanding,
    to_main_basis,
};
use uaw::pbw::{
    check_center_membership, check_fix_property, pbw_real_alt, un_times_generator,
    Automorphism, DeltaMethod, PbwContext, RealFamily, RealMethod,
};
use uaw::qfield::{bracket, RatFuncQ};
use uaw::Generator;

#[derive(Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub params: String,
    pub pass: bool,
    pub millis: u128,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerifyReport {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
            overall: true,
        }
    }

    fn run(&mut self, id: &str, params: String, f: impl FnOnce() -> bool) {
        let start = Instant::now();
        let pass = f();
        self.checks.push(Check {
            id: id.to_string(),
            params,
            pass,
            millis: start.elapsed().as_millis(),
        });
        self.overall &= pass;
    }

    fn absorb(&mut self, other: VerifyReport) {
        self.overall &= other.overall;
        self.checks.extend(other.checks);
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        for c in &self.checks {
            out.push_str(&format!(
                "{}  {} ({})  {} ms\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.params,
                c.millis
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.overall { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub const SUITES: &[&str] = &[
    "field",
    "chebyshev",
    "relations",
    "automorphisms",
    "closed-forms",
    "delta-commute",
    "tca",
];

fn default_max_n(suite: &str) -> u32 {
    match suite {
        "field" => 20,
        "chebyshev" => 20,
        "relations" | "automorphisms" => 1,
        "closed-forms" => 12,
        "delta-commute" => 6,
        "tca" => 8,
        _ => 1,
    }
}

pub fn run_suite(suite: &str, max_n: Option<u32>) -> Option<VerifyReport> {
    if suite == "all" {
        let mut report = VerifyReport::new("all");
        for s in SUITES {
            report.absorb(run_suite(s, max_n).expect("known suite"));
        }
        return Some(report);
    }
    let n = max_n.unwrap_or_else(|| default_max_n(suite));
    let mut r = VerifyReport::new(suite);
    match suite {
        "field" => suite_field(&mut r, n as i64),
        "chebyshev" => suite_chebyshev(&mut r, n),
        "relations" => suite_relations(&mut r),
        "automorphisms" => suite_automorphisms(&mut r),
        "closed-forms" => suite_closed_forms(&mut r, n),
        "delta-commute" => suite_delta_commute(&mut r, n),
        "tca" => suite_tca(&mut r, n),
        _ => return None,
    }
    Some(r)
}

fn suite_field(r: &mut VerifyReport, max_n: i64) {
    r.run("bracket-recurrence", format!("|n| <= {max_n}"), || {
        (-max_n..=max_n).all(|n| {
            bracket(n + 1)
                == bracket(2).mul(&bracket(n)).sub(&bracket(n - 1))
        })
    });
    r.run("bracket-antisymmetry", format!("|n| <= {max_n}"), || {
        (-max_n..=max_n).all(|n| bracket(-n) == bracket(n).neg())
    });
    let s_range = max_n.min(10);
    r.run(
        "bracket-addition",
        format!("|r|,|s| <= {s_range}"),
        || {
            (-s_range..=s_range).all(|a| {
                (-s_range..=s_range).all(|b| {
                    bracket(a + b)
                        == bracket(a)
                            .mul(&RatFuncQ::q_pow(b))
                            .add(&RatFuncQ::q_pow(-a).mul(&bracket(b)))
                })
            })
        },
    );
    r.run("specialize-homomorphism", "q0 = 3/2".to_string(), || {
        let q0 = uaw::qfield::rat(3, 2);
        (1..=max_n.min(12)).all(|n| {
            let a = bracket(n);
            let b = bracket(n + 1);
            let sum_ok = a.add(&b).specialize(&q0).unwrap()
                == a.specialize(&q0).unwrap() + b.specialize(&q0).unwrap();
            let prod_ok = a.mul(&b).specialize(&q0).unwrap()
                == a.specialize(&q0).unwrap() * b.specialize(&q0).unwrap();
            sum_ok && prod_ok
        })
    });
}

fn suite_chebyshev(r: &mut VerifyReport, max_n: u32) {
    r.run(
        "representations-agree",
        format!("n <= {max_n}"),
        || {
            (0..=max_n).all(|n| {
                let p = u_poly(n as i64);
                p == u_closed_sum(n) && substitute_z(&p) == u_via_z(n)
            })
        },
    );
    r.run("recurrence", format!("n <= {max_n}"), || {
        (1..=max_n as i64).all(|n| {
            let lhs = u_poly(n).mul(&uaw::chebyshev::UPoly::x());
            let rhs = u_poly(n + 1).add(&u_poly(n - 1));
            lhs == rhs
        })
    });
    for id in SeriesId::ALL {
        r.run(
            &format!("series-{}", id.name()),
            format!("order {}", max_n.max(20)),
            || check_series_identity(id, max_n.max(20)),
        );
    }
}

fn suite_relations(r: &mut VerifyReport) {
    let a = AlgebraElement::generator(Generator::A);
    let b = AlgebraElement::generator(Generator::B);
    r.run("q-dolan-grady-1", "x=A, y=B".into(), || {
        is_zero(&dolan_grady_defect(&a, &b))
    });
    r.run("q-dolan-grady-2", "x=B, y=A".into(), || {
        is_zero(&dolan_grady_defect(&b, &a))
    });
    r.run("degree-4-gamma-relation", "".into(), || {
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        let lhs = a
            .mul(&a)
            .mul(&b)
            .mul(&b)
            .sub(&b.mul(&b).mul(&a).mul(&a))
            .add(
                &AlgebraElement::scalar(
                    RatFuncQ::q_pow(2).add(&RatFuncQ::q_pow(-2)),
                )
                .mul(&ba.mul(&ba).sub(&ab.mul(&ab))),
            );
        let s = uaw::qfield::scalars::q_minus_qinv();
        let rhs = ba
            .sub(&ab)
            .mul(&AlgebraElement::gamma())
            .scale(&s.mul(&s));
        is_zero(&lhs.sub(&rhs))
    });
    r.run("centrality", "alpha,beta,gamma,Omega vs A,B,C".into(), || {
        let centrals = [
            AlgebraElement::alpha(),
            AlgebraElement::beta(),
            AlgebraElement::gamma(),
            casimir_expansion(),
        ];
        let gens = [Generator::A, Generator::B, Generator::C]
            .map(AlgebraElement::generator);
        centrals
            .iter()
            .all(|z| gens.iter().all(|g| is_zero(&z.commutator(g))))
    });
    r.run("casimir-round-trip", "".into(), || {
        let round = from_main_basis(&to_main_basis(&casimir_expansion()).unwrap());
        normalize_pre_expanding(&round) == normalize_pre_expanding(&casimir_expansion())
    });
    r.run("derived-generators", "".into(), || {
        [
            (DerivedCentral::Alpha, AlgebraElement::alpha()),
            (DerivedCentral::Beta, AlgebraElement::beta()),
            (DerivedCentral::Gamma, AlgebraElement::gamma()),
            (
                DerivedCentral::C,
                AlgebraElement::generator(Generator::C),
            ),
        ]
        .iter()
        .all(|(w, prim)| {
            let d = uaw::algebra::derived_central(*w);
            is_zero(&d.sub(prim))
        })
    });
}

fn suite_automorphisms(r: &mut VerifyReport) {
    let rho = Automorphism::rho();
    let sigma = Automorphism::sigma();
    let id = Automorphism::identity();
    r.run("rho-cubed", "".into(), || {
        rho.compose(&rho).compose(&rho).agrees_with(&id)
    });
    r.run("sigma-squared", "".into(), || {
        sigma.compose(&sigma).agrees_with(&id)
    });
    r.run("t0-inverse", "t0 . t0^-1 = id".into(), || {
        Automorphism::t0().compose(&Automorphism::t0_inv()).agrees_with(&id)
            && Automorphism::t0_inv().compose(&Automorphism::t0()).agrees_with(&id)
    });
    r.run("t1-inverse", "t1 . t1^-1 = id".into(), || {
        Automorphism::t1().compose(&Automorphism::t1_inv()).agrees_with(&id)
            && Automorphism::t1_inv().compose(&Automorphism::t1()).agrees_with(&id)
    });
    r.run("fix-b-delta", "t0 t1 and t1^-1 t0^-1".into(), check_fix_property);
}

fn suite_closed_forms(r: &mut VerifyReport, max_n: u32) {
    let mut ctx = PbwContext::new();
    for family in [RealFamily::Alpha0, RealFamily::Alpha1] {
        let name = match family {
            RealFamily::Alpha0 => "alpha0",
            RealFamily::Alpha1 => "alpha1",
        };
        r.run(
            &format!("closed-vs-recursive-{name}"),
            format!("n <= {max_n}"),
            || {
                (0..=max_n).all(|n| {
                    ctx.pbw_real(family, n, RealMethod::Closed).value
                        == ctx.pbw_real(family, n, RealMethod::Recursive).value
                })
            },
        );
        let mut ctx2 = PbwContext::new();
        r.run(
            &format!("alternative-form-{name}"),
            format!("n <= {max_n}"),
            || {
                (0..=max_n).all(|n| {
                    pbw_real_alt(family, n).value
                        == ctx2.pbw_real(family, n, RealMethod::Closed).value
                })
            },
        );
    }
}

fn suite_delta_commute(r: &mut VerifyReport, max_n: u32) {
    let mut ctx = PbwContext::new();
    r.run("delta-three-way", format!("1 <= n <= {max_n}"), || {
        (1..=max_n).all(|n| {
            let a = ctx.pbw_delta(n, DeltaMethod::RecursiveA1).value;
            let b = ctx.pbw_delta(n, DeltaMethod::RecursiveA0).value;
            let c = ctx.pbw_delta(n, DeltaMethod::Closed).value;
            a == b && b == c
        })
    });
    let mut ctx2 = PbwContext::new();
    r.run(
        "mutual-commutativity",
        format!("1 <= m < n <= {max_n}"),
        || {
            let vals: Vec<_> = (1..=max_n)
                .map(|n| expand_omega(&ctx2.pbw_delta(n, DeltaMethod::Closed).value))
                .collect();
            (0..vals.len()).all(|i| {
                (i + 1..vals.len()).all(|j| is_zero(&vals[i].commutator(&vals[j])))
            })
        },
    );
    let mut ctx3 = PbwContext::new();
    r.run("pure-c-power-words", format!("1 <= n <= {max_n}"), || {
        (1..=max_n).all(|n| check_center_membership(&mut ctx3, n))
    });
}

fn suite_tca(r: &mut VerifyReport, max_n: u32) {
    for g in [Generator::A, Generator::B] {
        r.run(
            &format!("chebyshev-word-times-{}", g.letter()),
            format!("1 <= n <= {max_n}"),
            || {
                (1..=max_n).all(|n| {
                    let lhs = to_main_basis(
                        &uaw::chebyshev::u_at_c(n as i64, &RatFuncQ::one())
                            .mul(&AlgebraElement::generator(g)),
                    )
                    .unwrap();
                    lhs == un_times_generator(n, g)
                })
            },
        );
    }
}
