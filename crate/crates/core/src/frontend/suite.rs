//! Named verification suites, plus the single-purpose reports behind the CLI
//! verbs.

use serde_json::{json, Value};

use super::report::{InstanceSummary, Report, Verdict};
use crate::autos::{
    apply_auto, auto_constraints, auto_order, build_auto, compose, inner_auto, AutoDescriptor, AutoOrder, RingMap,
};
use crate::dext::{DivisionVerdict, Element, ExtAlgebra, FSubspace, Which};
use crate::error::{Condition, Error, Result};
use crate::sample::{Sampler, SAMPLE_DEGREE};
use crate::scalars::RatFunc;
use crate::towers::{minimal_p_polynomial, p_polynomial_of_exponent, verify_annihilates, DerivedField, DiffRing, DEFAULT_MAX_E};

pub const SUITES: [&str; 6] = ["ring", "vops", "nuclei", "autos", "inner", "division"];

type Alg = ExtAlgebra<DerivedField>;

/// Each suite draws from its own stream so that running one suite alone
/// reproduces the same checks as running it inside `all`.
fn sampler(alg: &Alg, seed: u64, suite: &str) -> Sampler {
    let salt = suite.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    Sampler::new(alg.characteristic(), seed ^ salt)
}

fn nonzero_sample(alg: &Alg, s: &mut Sampler) -> Element<DerivedField> {
    loop {
        let u = alg.sample(s, 2);
        if !u.is_zero() {
            return u;
        }
    }
}

fn basis_strings(alg: &Alg, v: &FSubspace) -> Vec<String> {
    v.basis().iter().map(|row| alg.from_coords(row).to_string()).collect()
}

fn error_witness(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

pub fn run_suite(alg: &Alg, suite: &str, seed: u64, degree_bound: usize) -> Result<Report> {
    let mut report = Report::new(InstanceSummary::of(alg, seed, degree_bound));
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    for name in names {
        let mut s = sampler(alg, seed, name);
        match name {
            "ring" => ring(alg, &mut s, seed, &mut report),
            "vops" => vops(alg, &mut s, &mut report),
            "nuclei" => nuclei(alg, &mut report),
            "autos" => autos(alg, &mut s, &mut report),
            "inner" => inner(alg, &mut s, &mut report),
            "division" => division(alg, &mut s, degree_bound, &mut report)?,
            _ => unreachable!(),
        }
    }
    Ok(report)
}

fn ring(alg: &Alg, s: &mut Sampler, seed: u64, report: &mut Report) {
    let k = alg.base();
    report.run("ring.g_annihilates", || match verify_annihilates(k, alg.g(), 20, seed) {
        Ok(()) => (Verdict::Pass, json!({ "g": alg.g().to_string() })),
        Err(e) => (Verdict::Fail, error_witness(&e)),
    });
    report.run("ring.g_minimal", || {
        let e = alg.g().exponent();
        let below = e.checked_sub(1).map(|e1| p_polynomial_of_exponent(k, e1));
        match (minimal_p_polynomial(k, DEFAULT_MAX_E.max(e)), below) {
            (Ok(m), Some(Err(Error::NoSolution))) if m == *alg.g() => {
                (Verdict::Pass, json!({ "exponent": e, "none_below": true }))
            }
            (Ok(m), _) => (Verdict::Unknown, json!({ "minimal": m.to_string(), "declared": alg.g().to_string() })),
            (Err(err), _) => (Verdict::Unknown, error_witness(&err)),
        }
    });
    report.run("ring.division_contract", || {
        let r = alg.ring();
        let n = 100;
        for _ in 0..n {
            let a = sample_poly(alg, s, 4);
            let b = loop {
                let b = sample_poly(alg, s, 3);
                if !b.is_zero() {
                    break b;
                }
            };
            let (q, rem) = match r.right_divide(&a, &b) {
                Ok(qr) => qr,
                Err(e) => return (Verdict::Fail, error_witness(&e)),
            };
            let ok = r.add(&r.mul(&q, &b), &rem) == a && rem.degree().is_none_or(|d| Some(d) < b.degree());
            if !ok {
                return (Verdict::Fail, json!({ "g": a.to_string(), "f": b.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("ring.structure_constants", || {
        let n = 20;
        for _ in 0..n {
            let (u, v) = (alg.sample(s, SAMPLE_DEGREE), alg.sample(s, SAMPLE_DEGREE));
            if alg.coords(&alg.mul(&u, &v)) != alg.mul_coords(&alg.coords(&u), &alg.coords(&v)) {
                return (Verdict::Fail, json!({ "u": u.to_string(), "v": v.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("ring.associativity_criterion", || {
        let assoc = alg.is_associative();
        let constant = alg.d_is_constant();
        match alg.ring().is_right_invariant(alg.f()) {
            Ok(inv) => (
                Verdict::from_bool(assoc == constant && constant == inv),
                json!({ "associative": assoc, "d_constant": constant, "f_right_invariant": inv }),
            ),
            Err(e) => (Verdict::Fail, error_witness(&e)),
        }
    });
}

fn sample_poly(alg: &Alg, s: &mut Sampler, max_deg: usize) -> crate::diffpoly::Poly<DerivedField> {
    let deg = s.index(max_deg + 1);
    let coeffs = (0..=deg).map(|_| s.ratfunc(2)).collect();
    alg.ring().from_coeffs(coeffs)
}

fn vops(alg: &Alg, s: &mut Sampler, report: &mut Report) {
    let k = alg.base();
    let r = alg.ring();
    let p = alg.characteristic() as usize;
    let e = alg.g().exponent().max(1);
    let n = 40;
    report.run("vops.skew_identity", || {
        for _ in 0..n {
            let b = s.ratfunc(SAMPLE_DEGREE);
            for level in 1..=e {
                if let Err(err) = r.v_p_tower(&b, level) {
                    return (Verdict::Fail, json!({ "b": b.to_string(), "error": err.to_string() }));
                }
            }
            let closed = &b.pow(p as i64).expect("nonnegative power") + &k.derivation_power(&b, p - 1);
            if r.v_p(&b) != closed {
                return (Verdict::Fail, json!({ "b": b.to_string(), "closed_form": closed.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n, "levels": e }))
    });
    report.run("vops.additivity", || {
        for _ in 0..n {
            let (a, b) = (s.ratfunc(SAMPLE_DEGREE), s.ratfunc(SAMPLE_DEGREE));
            if r.v_g(&(&a + &b), alg.g()) != &r.v_g(&a, alg.g()) + &r.v_g(&b, alg.g()) {
                return (Verdict::Fail, json!({ "a": a.to_string(), "b": b.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("vops.constant_image", || {
        for _ in 0..n {
            let b = s.ratfunc(SAMPLE_DEGREE);
            let v = r.v_g(&b, alg.g());
            if !k.is_constant(&v) {
                return (Verdict::Fail, json!({ "b": b.to_string(), "v_g": v.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("vops.log_derivatives", || {
        for _ in 0..n {
            let u = s.nonzero_ratfunc(SAMPLE_DEGREE);
            let c = k.log_derivative(&u).expect("nonzero");
            if !r.v_g(&c, alg.g()).is_zero() {
                return (Verdict::Fail, json!({ "u": u.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
}

fn nuclei(alg: &Alg, report: &mut Report) {
    let assoc = alg.is_associative();
    let k = alg.coefficient_subspace();
    let whole = FSubspace::kernel_of(crate::linalg::RatFuncField { p: alg.characteristic() }, alg.dim(), Vec::new());
    let expected = if assoc { &whole } else { &k };
    for (name, which) in [
        ("nuclei.left", Which::Left),
        ("nuclei.middle", Which::Middle),
        ("nuclei.right", Which::Right),
        ("nuclei.full", Which::Full),
    ] {
        report.run(name, || {
            let n = alg.nucleus(which);
            (
                Verdict::from_bool(n == *expected),
                json!({ "dimension": n.dim(), "basis": basis_strings(alg, &n) }),
            )
        });
    }
    report.run("nuclei.center", || {
        let c = alg.center();
        let one = alg.subspace_of(&[alg.one()]);
        let verdict = if c == one {
            Verdict::Pass
        } else if assoc {
            Verdict::Unknown
        } else {
            Verdict::Fail
        };
        (verdict, json!({ "dimension": c.dim(), "basis": basis_strings(alg, &c) }))
    });
    report.run("nuclei.centralizer_of_k", || {
        let gens: Vec<_> = alg.base().f_basis().into_iter().map(|z| alg.from_coeff(z)).collect();
        let c = alg.centralizer(&gens);
        let verdict = if c == k {
            Verdict::Pass
        } else if alg.g().is_degree_p() {
            Verdict::Fail
        } else {
            Verdict::Unknown
        };
        (verdict, json!({ "dimension": c.dim(), "basis": basis_strings(alg, &c) }))
    });
}

fn autos(alg: &Alg, s: &mut Sampler, report: &mut Report) {
    let k = alg.base();
    let p = alg.characteristic() as usize;
    let x = k.x();
    report.run("autos.constraints", || match auto_constraints(alg) {
        Ok(c) => (
            Verdict::from_bool(c.tau_is_identity && c.eps_is_one),
            json!({ "summary": c.summary(), "tau_is_identity": c.tau_is_identity, "eps_is_one": c.eps_is_one }),
        ),
        Err(e) => (Verdict::Fail, error_witness(&e)),
    });
    let gen_c = k.log_derivative(&x).expect("x is nonzero");
    let generator = build_auto(alg, RingMap::Identity, gen_c.clone(), RatFunc::one(p as u32));
    report.run("autos.order_p_generator", || match &generator {
        Ok(h) => match auto_order(alg, h, p + 1) {
            AutoOrder::Order(n) => (Verdict::from_bool(n == p), json!({ "generator": h.to_string(), "order": n })),
            AutoOrder::ExceedsBound(b) => (Verdict::Fail, json!({ "generator": h.to_string(), "exceeds": b })),
        },
        Err(e) => (Verdict::Fail, json!({ "c": gen_c.to_string(), "error": e.to_string() })),
    });
    let n = 10;
    report.run("autos.multiplicative", || {
        for _ in 0..n {
            let c = k.log_derivative(&s.nonzero_ratfunc(2)).expect("nonzero");
            let h = match build_auto(alg, RingMap::Identity, c.clone(), RatFunc::one(p as u32)) {
                Ok(h) => h,
                Err(e) => return (Verdict::Fail, json!({ "c": c.to_string(), "error": e.to_string() })),
            };
            let (u, v) = (alg.sample(s, 2), alg.sample(s, 2));
            if apply_auto(alg, &h, &alg.mul(&u, &v)) != alg.mul(&apply_auto(alg, &h, &u), &apply_auto(alg, &h, &v)) {
                return (Verdict::Fail, json!({ "c": c.to_string(), "u": u.to_string(), "v": v.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("autos.composition", || {
        for _ in 0..n {
            let c1 = k.log_derivative(&s.nonzero_ratfunc(2)).expect("nonzero");
            let c2 = k.log_derivative(&s.nonzero_ratfunc(2)).expect("nonzero");
            let (h1, h2) = (AutoDescriptor::shift(k, c1.clone()), AutoDescriptor::shift(k, c2.clone()));
            let h12 = compose(k, &h1, &h2);
            let agrees = alg
                .basis()
                .iter()
                .all(|b| apply_auto(alg, &h12, b) == apply_auto(alg, &h1, &apply_auto(alg, &h2, b)));
            if h12 != AutoDescriptor::shift(k, &c1 + &c2) || !agrees {
                return (Verdict::Fail, json!({ "c1": c1.to_string(), "c2": c2.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("autos.rejects_invalid_shift", || {
        let v = alg.ring().v_g(&x, alg.g());
        let got = build_auto(alg, RingMap::Identity, x.clone(), RatFunc::one(p as u32));
        let ok = match &got {
            Err(Error::ConditionFailed(Condition::FixesF)) => !v.is_zero(),
            Ok(_) => v.is_zero(),
            Err(_) => false,
        };
        let outcome = match &got {
            Ok(_) => "valid".to_string(),
            Err(e) => e.to_string(),
        };
        (Verdict::from_bool(ok), json!({ "c": x.to_string(), "v_g": v.to_string(), "outcome": outcome }))
    });
    report.run("autos.rejects_eps", || {
        let got = build_auto(alg, RingMap::Identity, RatFunc::zero(p as u32), x.clone());
        let ok = got == Err(Error::ConditionFailed(Condition::Eq1));
        (Verdict::from_bool(ok), json!({ "eps": x.to_string() }))
    });
}

fn inner(alg: &Alg, s: &mut Sampler, report: &mut Report) {
    let k = alg.base();
    let n = 10;
    report.run("inner.conjugation", || {
        for _ in 0..n {
            let a0 = s.nonzero_ratfunc(SAMPLE_DEGREE);
            let a = alg.from_coeff(a0.clone());
            let ai = alg.from_coeff(a0.inv().expect("nonzero"));
            let h = match inner_auto(alg, &a) {
                Ok(h) => h,
                Err(e) => return (Verdict::Fail, json!({ "a": a0.to_string(), "error": e.to_string() })),
            };
            let c = k.log_derivative(&a0).expect("nonzero");
            if h != AutoDescriptor::shift(k, c) {
                return (Verdict::Fail, json!({ "a": a0.to_string(), "descriptor": h.to_string() }));
            }
            for _ in 0..5 {
                let u = alg.sample(s, 2);
                if alg.mul(&alg.mul(&ai, &u), &a) != apply_auto(alg, &h, &u) {
                    return (Verdict::Fail, json!({ "a": a0.to_string(), "u": u.to_string() }));
                }
            }
        }
        (Verdict::Pass, json!({ "samples": n }))
    });
    report.run("inner.rejects_t", || {
        let expected = if alg.is_associative() { Error::NotInCoefficientRing } else { Error::NotNuclear };
        match inner_auto(alg, &alg.t()) {
            Err(e) => (Verdict::from_bool(e == expected), error_witness(&e)),
            Ok(h) => (Verdict::Fail, json!({ "descriptor": h.to_string() })),
        }
    });
}

fn division(alg: &Alg, s: &mut Sampler, bound: usize, report: &mut Report) -> Result<()> {
    let verdict = alg.division_verdict(bound)?;
    let mut check = verdict_check(&verdict);
    report.run("division.verdict", || check.take().expect("runs once"));
    report.run("division.left_injectivity", || match &verdict {
        DivisionVerdict::NotDivision { b } => {
            // f = q·(t − b), so q∘(t − b) = 0 in S_f.
            let r = alg.ring();
            let lin = r.from_coeffs(vec![-b, RatFunc::one(alg.characteristic())]);
            match r.right_divide(alg.f(), &lin) {
                Ok((q, _)) => {
                    let q = alg.element(q);
                    (Verdict::from_bool(!alg.left_mul_is_injective(&q)), json!({ "zero_divisor": q.to_string() }))
                }
                Err(e) => (Verdict::Fail, error_witness(&e)),
            }
        }
        other => {
            let n = 30;
            for _ in 0..n {
                let u = nonzero_sample(alg, s);
                if !alg.left_mul_is_injective(&u) {
                    let v = if *other == DivisionVerdict::DivisionProved { Verdict::Fail } else { Verdict::Pass };
                    return (v, json!({ "zero_divisor": u.to_string() }));
                }
            }
            let v = if *other == DivisionVerdict::DivisionProved { Verdict::Pass } else { Verdict::Unknown };
            (v, json!({ "injective_samples": n }))
        }
    });
    report.run("division.shift_isomorphism", || {
        let x = alg.base().x();
        let (iso, back) = match alg.iso_shift(&x).and_then(|i| i.inverse().map(|b| (i, b))) {
            Ok(pair) => pair,
            Err(e) => return (Verdict::Fail, error_witness(&e)),
        };
        let n = 20;
        for _ in 0..n {
            let (u, v) = (alg.sample(s, 2), alg.sample(s, 2));
            let mult = iso.apply(&alg.mul(&u, &v)) == iso.target().mul(&iso.apply(&u), &iso.apply(&v));
            if !mult || back.apply(&iso.apply(&u)) != u {
                return (Verdict::Fail, json!({ "u": u.to_string(), "v": v.to_string() }));
            }
        }
        (Verdict::Pass, json!({ "shift": x.to_string(), "target_d": iso.target().d().to_string(), "samples": n }))
    });
    Ok(())
}

fn verdict_check(v: &DivisionVerdict) -> Option<(Verdict, Value)> {
    let witness = json!({ "verdict": v.to_string() });
    Some(match v {
        DivisionVerdict::DivisionProved | DivisionVerdict::NotDivision { .. } => (Verdict::Pass, witness),
        DivisionVerdict::Unknown { .. } => (Verdict::Unknown, witness),
    })
}

/// `build`: `g`, `f` and the dimensions.
pub fn build_report(alg: &Alg, seed: u64, degree_bound: usize) -> Report {
    let mut report = Report::new(InstanceSummary::of(alg, seed, degree_bound));
    report.run("build", || {
        (
            Verdict::Pass,
            json!({
                "g": alg.g().to_string(),
                "f": alg.f().to_string(),
                "degree": alg.degree(),
                "dimension_over_f": alg.dim(),
                "dimension_over_k": alg.degree(),
                "associative": alg.is_associative(),
            }),
        )
    });
    report
}

pub fn parse_which(s: &str) -> Option<Which> {
    match s {
        "left" => Some(Which::Left),
        "middle" => Some(Which::Middle),
        "right" => Some(Which::Right),
        "full" => Some(Which::Full),
        _ => None,
    }
}

/// `nucleus`: a basis of the requested nucleus.
pub fn nucleus_report(alg: &Alg, which: Which, seed: u64, degree_bound: usize) -> Report {
    let mut report = Report::new(InstanceSummary::of(alg, seed, degree_bound));
    let name = format!("nucleus.{}", format!("{which:?}").to_lowercase());
    report.run(&name, || {
        let n = alg.nucleus(which);
        (Verdict::Pass, json!({ "dimension": n.dim(), "basis": basis_strings(alg, &n) }))
    });
    report
}

/// `autos`: the constraint report, optionally testing a shift `c` and
/// computing the order of `H_{id,c}`.
pub fn autos_report(
    alg: &Alg,
    check_c: Option<&RatFunc>,
    order: Option<&RatFunc>,
    seed: u64,
    degree_bound: usize,
) -> Report {
    let mut report = Report::new(InstanceSummary::of(alg, seed, degree_bound));
    let one = RatFunc::one(alg.characteristic());
    report.run("autos.constraints", || match auto_constraints(alg) {
        Ok(c) => (Verdict::from_bool(c.tau_is_identity && c.eps_is_one), json!({ "summary": c.summary() })),
        Err(e) => (Verdict::Fail, error_witness(&e)),
    });
    if let Some(c) = check_c {
        report.run("autos.check_c", || match build_auto(alg, RingMap::Identity, c.clone(), one.clone()) {
            Ok(h) => (Verdict::Pass, json!({ "descriptor": h.to_string() })),
            Err(e) => (Verdict::Fail, json!({ "c": c.to_string(), "error": e.to_string() })),
        });
    }
    if let Some(c) = order {
        report.run("autos.order", || match build_auto(alg, RingMap::Identity, c.clone(), one.clone()) {
            Ok(h) => match auto_order(alg, &h, 64) {
                AutoOrder::Order(n) => (Verdict::Pass, json!({ "descriptor": h.to_string(), "order": n })),
                AutoOrder::ExceedsBound(b) => (Verdict::Unknown, json!({ "descriptor": h.to_string(), "exceeds": b })),
            },
            Err(e) => (Verdict::Fail, json!({ "c": c.to_string(), "error": e.to_string() })),
        });
    }
    report
}

/// `inner`: the descriptor of `G_a`.
pub fn inner_report(alg: &Alg, a: &RatFunc, seed: u64, degree_bound: usize) -> Report {
    let mut report = Report::new(InstanceSummary::of(alg, seed, degree_bound));
    report.run("inner", || match inner_auto(alg, &alg.from_coeff(a.clone())) {
        Ok(h) => (Verdict::Pass, json!({ "a": a.to_string(), "descriptor": h.to_string() })),
        Err(e) => (Verdict::Fail, json!({ "a": a.to_string(), "error": e.to_string() })),
    });
    report
}

/// `divcheck`: the three-valued division verdict.
pub fn divcheck_report(alg: &Alg, bound: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new(InstanceSummary::of(alg, seed, bound));
    let mut check = verdict_check(&alg.division_verdict(bound)?);
    report.run("division.verdict", || check.take().expect("runs once"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::load_instance_str;

    fn alg(text: &str) -> Alg {
        load_instance_str(text).unwrap().alg
    }

    const I1: &str = "p = 2\ndelta_of_x = x\nd = x\n";
    const I2: &str = "p = 2\ndelta_of_x = x\nd = x^2\n";
    const I3: &str = "p = 3\ndelta_of_x = x\nd = x\n";
    const I4: &str = "p = 2\ndelta_of_x = 1\nd = x\n";

    #[test]
    fn unknown_suite() {
        assert_eq!(run_suite(&alg(I1), "fuzz", 1, 4), Err(Error::UnknownSuite("fuzz".into())));
    }

    #[test]
    fn nuclei_on_i1_is_k() {
        let r = run_suite(&alg(I1), "nuclei", 1, 4).unwrap();
        assert!(!r.has_failures());
        let full = r.check("nuclei.full").unwrap();
        assert_eq!(full.verdict, Verdict::Pass);
        assert_eq!(full.witness["basis"], json!(["1", "x"]));
    }

    #[test]
    fn autos_find_an_order_p_generator() {
        for (text, p) in [(I1, 2), (I3, 3), (I4, 2)] {
            let r = run_suite(&alg(text), "autos", 1, 4).unwrap();
            assert!(!r.has_failures(), "{}", r.table());
            assert_eq!(r.check("autos.order_p_generator").unwrap().witness["order"], json!(p));
        }
    }

    #[test]
    fn division_on_i1_is_proved() {
        let r = run_suite(&alg(I1), "division", 1, 4).unwrap();
        assert!(!r.has_failures());
        assert_eq!(r.check("division.verdict").unwrap().witness["verdict"], "division (proved)");
        let r = run_suite(&alg(I2), "division", 1, 1).unwrap();
        assert!(!r.has_failures(), "{}", r.table());
        let w = &r.check("division.verdict").unwrap().witness["verdict"];
        assert_eq!(*w, "not division (witness t - (x))");
    }

    #[test]
    fn all_suites_pass_on_the_target_instances() {
        for text in [I1, I2, I3, I4] {
            let r = run_suite(&alg(text), "all", 3, 2).unwrap();
            assert!(!r.has_failures(), "{}", r.table());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = alg(I3);
        let mut r1 = run_suite(&a, "all", 5, 2).unwrap();
        let mut r2 = run_suite(&a, "all", 5, 2).unwrap();
        r1.clear_timings();
        r2.clear_timings();
        assert_eq!(r1.to_json(), r2.to_json());
        let mut one = run_suite(&a, "vops", 5, 2).unwrap();
        one.clear_timings();
        for c in &one.checks {
            assert_eq!(Some(c), r1.check(&c.name));
        }
    }

    #[test]
    fn verb_reports() {
        let a = alg(I1);
        let r = build_report(&a, 1, 4);
        assert_eq!(r.checks[0].witness["f"], "t^2 + t + x");
        let r = nucleus_report(&a, Which::Left, 1, 4);
        assert_eq!(r.check("nucleus.left").unwrap().witness["dimension"], 2);
        let x = RatFunc::x(2);
        let r = autos_report(&a, Some(&x), Some(&RatFunc::one(2)), 1, 4);
        assert_eq!(r.check("autos.check_c").unwrap().verdict, Verdict::Fail);
        assert_eq!(r.check("autos.order").unwrap().witness["order"], 2);
        let r = inner_report(&a, &x, 1, 4);
        assert_eq!(r.checks[0].witness["descriptor"], "H(tau = id, c = 1, eps = 1)");
        let r = divcheck_report(&a, 4, 1).unwrap();
        assert!(!r.has_failures());
    }
}
