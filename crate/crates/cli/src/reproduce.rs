//! Fixed worked examples, recomputed from scratch.

use crate::commands::Ctx;
use crate::error::CliError;
use clap::ValueEnum;
use quatalg::field::{Field, Rationals};
use quatalg::linearize::{linearize, verify_linearization, Case, HomogeneousForm};
use quatalg::ncpoly::{coimage_algorithm, GeneralPoly, StandardPoly};
use quatalg::quaternion::{Quat, Quaternion};
use quatalg::realpoly::RealPoly;
use quatalg::solver::{pure_imaginary_roots, solve_cubic_with_imaginary_root};
use num_traits::{One, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    /// z³ + (2+ij)z + (i−j): split, norm cubic, roots and factorization.
    CubicExample,
    /// Conjugating a root of z² + jz + 1 + ij by −i−2j.
    TransportedRoot,
    /// Linearization of a² + 2ab + b².
    Notirred,
    /// Linearization of ab.
    Notrank,
    /// Closed forms for the four variables under the co-image iteration.
    Coimage,
    /// (z−j)(z+j) evaluated at i in the general ring.
    SubstitutionWitness,
    /// Pure-imaginary root families of z²+1 and z²−(i+j)z+ij.
    Infinitude,
}

fn q(s: &str) -> Quaternion {
    s.parse().expect("literal quaternion")
}

fn in_n(p: &RealPoly) -> String {
    p.to_string().replace('x', "N")
}

/// Text of a quaternion with polynomial coordinates, in the variable N.
fn quat_poly_text(p: &Quat<RealPoly>) -> String {
    let mut out = String::new();
    for (c, u) in p.coords().iter().zip(["", "i", "j", "ij"]) {
        if c.is_zero() {
            continue;
        }
        let text = in_n(c);
        let term = match (u, c.degree()) {
            ("", _) => text,
            (_, Some(0)) if text == "1" => u.to_string(),
            (_, Some(0)) if text == "-1" => format!("-{u}"),
            (_, Some(0)) => format!("{text}{u}"),
            _ => format!("({text}){u}"),
        };
        match term.strip_prefix('-') {
            Some(rest) if !out.is_empty() => out += &format!(" - {rest}"),
            _ if !out.is_empty() => out += &format!(" + {term}"),
            _ => out = term,
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn product_of_linears(roots: &[Quaternion]) -> StandardPoly {
    roots.iter().fold(StandardPoly::constant(Quaternion::one()), |acc, a| {
        acc.mul(&StandardPoly::linear(a)).expect("low degree")
    })
}

pub fn run(ctx: &Ctx, ex: Example) -> Result<Value, CliError> {
    match ex {
        Example::CubicExample => cubic(ctx),
        Example::TransportedRoot => Ok(transported()),
        Example::Notirred => form(ctx, json!({"d": "2", "n": "2", "coeffs": {"2,0": "1", "1,1": "2", "0,2": "1"}})),
        Example::Notrank => form(ctx, json!({"d": "2", "n": "2", "coeffs": {"1,1": "1"}})),
        Example::Coimage => {
            let polys = (1..=4)
                .map(|k| {
                    let p = coimage_algorithm(k)?;
                    Ok(json!({"variable": format!("x{k}"), "text": p.to_string(), "poly": p.to_json()}))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(json!({"coimage": polys}))
        }
        Example::SubstitutionWitness => {
            let (lj, lmj) = (StandardPoly::linear(&q("j")), StandardPoly::linear(&q("-j")));
            let general = GeneralPoly::from_standard(&lj).mul(&GeneralPoly::from_standard(&lmj))?;
            let standard = lj.mul(&lmj)?;
            let at = q("i");
            Ok(json!({
                "general_product": general.to_string(),
                "general_value_at_i": general.eval(&at).to_json(),
                "standard_product": standard.to_string(),
                "standard_value_at_i": standard.eval(&at).to_json(),
                "differ": general.eval(&at) != standard.eval(&at),
            }))
        }
        Example::Infinitude => {
            let mut out = Vec::new();
            for coeffs in [["1", "0", "1"], ["ij", "-i - j", "1"]] {
                let f = StandardPoly::parse(&coeffs)?;
                let im = pure_imaginary_roots(&f)?;
                out.push(json!({
                    "polynomial": f.to_string(),
                    "infinitely_many_pure_imaginary_roots": !im.report.families.is_empty(),
                    "detail": im.to_json(&ctx.width),
                }));
            }
            Ok(json!({"cases": out}))
        }
    }
}

fn cubic(ctx: &Ctx) -> Result<Value, CliError> {
    let f = StandardPoly::parse(&["i - j", "2 + ij", "0", "1"])?;
    let rep = solve_cubic_with_imaginary_root(&f)?;
    let im = &rep.imaginary;
    let fac = rep.factorization.clone().unwrap_or_default();
    let reference = [q("-1 - i - ij"), q("i"), q("j")];
    Ok(json!({
        "polynomial": f.to_string(),
        "g": quat_poly_text(&im.g),
        "h": quat_poly_text(&im.h),
        "norm_equation": format!("{} = 0", in_n(&im.norm_poly)),
        "roots": rep.report.exact_roots().iter().map(Quaternion::to_string).collect::<Vec<_>>(),
        "factorization": fac.iter().map(|a| format!("(z - ({a}))")).collect::<String>(),
        "factorization_holds": !fac.is_empty() && product_of_linears(&fac) == f,
        "reference_factorization": "(z + 1 + i + ij)(z - i)(z - j)",
        "reference_factorization_holds": product_of_linears(&reference) == f,
        "detail": rep.to_json(&ctx.width),
    }))
}

fn transported() -> Value {
    let a = q("-i - 2j");
    let b = q("-i - j");
    let t = &(&a * &b) * &a.inv().expect("nonzero");
    let p = StandardPoly::parse(&["1 + ij", "j", "1"]).expect("literal polynomial");
    let reference = Quaternion::from_json(&json!(["0", "2/5", "4/5", "0"])).expect("literal");
    json!({
        "polynomial": p.to_string(),
        "conjugate": t.to_string(),
        "value_at_conjugate": p.eval(&t).to_string(),
        "conjugate_is_root": p.eval(&t).is_zero(),
        "reference": reference.to_string(),
        "reference_equals_conjugate": reference == t,
        "value_at_reference": p.eval(&reference).to_string(),
        "reference_is_root": p.eval(&reference).is_zero(),
    })
}

fn form(ctx: &Ctx, v: Value) -> Result<Value, CliError> {
    let f = Rationals;
    let form = HomogeneousForm::from_json(&f, &v)?;
    let rep = linearize(&f, &form, Case::Graded)?;
    let verdict = verify_linearization(&f, &rep, &form, ctx.samples, &mut ctx.rng());
    Ok(json!({
        "form": form.to_json(&f),
        "representation": rep.to_json(&f),
        "verification": verdict.to_json(&f),
        "field": f.name(),
    }))
}
