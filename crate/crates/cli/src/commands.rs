use crate::error::CliError;
use crate::fields::{default_root_field, parse_field, with_field, AnyField};
use crate::input::{element, key_values, quaternion, read_json, u64_of, Rat};
use quatalg::algebra::{
    brute_force_d_central, build_vk, cyclic_charp_algebra, is_d_central_space, matrix_algebra, symbol_algebra,
    symbol_tensor, tensor_product, AlgebraError, StructureAlgebra,
};
use quatalg::chain::{canonical_quadruple, expected_symbol, quadruple_step, verify_quadruple, GeneratorQuadruple, QuadStep};
use quatalg::eigen::{characteristic_general_poly, eigen_condition_4x4, left_eigenvalues_2x2, QuatMatrix};
use quatalg::field::{Field, FiniteField};
use quatalg::linearize::{linearize, verify_linearization, Case, HomogeneousForm};
use quatalg::ncpoly::{wedderburn_factor, StandardPoly};
use quatalg::solver::{pure_imaginary_roots, solve_cubic_with_imaginary_root, solve_quadratic};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::path::Path;

pub struct Ctx {
    pub seed: u64,
    pub samples: usize,
    pub width: Rat,
}

impl Ctx {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn poly(arg: &str) -> Result<StandardPoly, CliError> {
    Ok(StandardPoly::from_json(&read_json(arg)?)?)
}

fn matrix(arg: &str) -> Result<QuatMatrix, CliError> {
    Ok(QuatMatrix::from_json(&read_json(arg)?)?)
}

pub fn solve_quadratic_cmd(ctx: &Ctx, a: &str, b: &str) -> Result<Value, CliError> {
    Ok(solve_quadratic(&quaternion(a)?, &quaternion(b)?).to_json(&ctx.width))
}

pub fn solve_cubic_cmd(ctx: &Ctx, p: &str) -> Result<Value, CliError> {
    Ok(solve_cubic_with_imaginary_root(&poly(p)?)?.to_json(&ctx.width))
}

pub fn roots_imaginary_cmd(ctx: &Ctx, p: &str) -> Result<Value, CliError> {
    Ok(pure_imaginary_roots(&poly(p)?)?.to_json(&ctx.width))
}

pub fn factor_cmd(p: &str, root: &str) -> Result<Value, CliError> {
    let f = poly(p)?;
    let a = quaternion(root)?;
    let left = wedderburn_factor(&f, &a)?;
    let right = StandardPoly::linear(&a);
    Ok(json!({
        "polynomial": f.to_json(),
        "left_factor": left.to_json(),
        "right_factor": right.to_json(),
        "text": format!("({left})({right})"),
    }))
}

pub fn eigen_2x2_cmd(ctx: &Ctx, m: &str) -> Result<Value, CliError> {
    Ok(left_eigenvalues_2x2(&matrix(m)?)?.to_json(&ctx.width))
}

pub fn eigen_check4_cmd(m: &str, lambda: &str) -> Result<Value, CliError> {
    Ok(eigen_condition_4x4(&matrix(m)?, &quaternion(lambda)?)?.to_json())
}

pub fn eigen_charpoly_cmd(m: &str) -> Result<Value, CliError> {
    Ok(json!({"charpoly": characteristic_general_poly(&matrix(m)?)?.to_json()}))
}

pub fn linearize_cmd(ctx: &Ctx, form: &str, case: u32, field: Option<&str>, emit: Option<&Path>) -> Result<Value, CliError> {
    let form = read_json(form)?;
    let case = Case::from_number(case)?;
    let d = u64_of(&form, "d")?;
    let any = match field {
        Some(s) => parse_field(&read_json(s)?)?,
        None if case == Case::Characteristic => AnyField::Finite(FiniteField::new(d, 1)?),
        None => default_root_field(d)?,
    };
    let out = with_field!(any, f => linearize_in(ctx, &f, &form, case)?);
    if let Some(path) = emit {
        let matrices = json!({"matrices": out["representation"]["matrices"].clone()});
        write_json(path, &matrices)?;
    }
    Ok(out)
}

fn linearize_in<F: Field>(ctx: &Ctx, f: &F, form: &Value, case: Case) -> Result<Value, CliError> {
    let form = HomogeneousForm::from_json(f, form)?;
    let rep = linearize(f, &form, case)?;
    let verdict = verify_linearization(f, &rep, &form, ctx.samples, &mut ctx.rng());
    Ok(json!({
        "form": form.to_json(f),
        "representation": rep.to_json(f),
        "verification": verdict.to_json(f),
    }))
}

pub fn write_json(path: &Path, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    std::fs::write(path, text + "\n").map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// The field named by an algebra spec, or the natural default for its kind.
fn spec_field(spec: &Value) -> Result<AnyField, CliError> {
    if let Some(f) = spec.get("field") {
        return parse_field(f);
    }
    match spec.get("kind").and_then(Value::as_str) {
        Some("symbol") => default_root_field(u64_of(spec, "d")?),
        Some("cyclic") => Ok(AnyField::Finite(FiniteField::new(u64_of(spec, "p")?, 1)?)),
        Some("tensor") => {
            let first = spec.get("factors").and_then(|v| v.get(0)).ok_or_else(|| CliError::Input("empty tensor".into()))?;
            spec_field(first)
        }
        _ => parse_field(&json!({"kind": "rational"})),
    }
}

fn spec_elem<F: Field>(f: &F, spec: &Value, key: &str) -> Result<F::Elem, CliError> {
    let v = spec.get(key).ok_or_else(|| CliError::Input(format!("missing {key}")))?;
    Ok(f.from_json(v)?)
}

/// Builds `{"kind":"symbol"|"cyclic"|"matrix"|"tensor", ...}`.
fn build_algebra<F: Field>(f: &F, spec: &Value) -> Result<StructureAlgebra<F>, CliError> {
    match spec.get("kind").and_then(Value::as_str) {
        Some("symbol") => {
            let d = u64_of(spec, "d")?;
            let rho = f.root_of_unity(d).ok_or(AlgebraError::BadRootOrder(d))?;
            Ok(symbol_algebra(f, d, &rho, &spec_elem(f, spec, "alpha")?, &spec_elem(f, spec, "beta")?)?.algebra)
        }
        Some("cyclic") => {
            let p = u64_of(spec, "p")?;
            Ok(cyclic_charp_algebra(f, p, &spec_elem(f, spec, "alpha")?, &spec_elem(f, spec, "beta")?)?.algebra)
        }
        Some("matrix") => Ok(matrix_algebra(f, u64_of(spec, "n")? as usize)?),
        Some("tensor") => {
            let factors = spec.get("factors").and_then(Value::as_array).ok_or_else(|| CliError::Input("factors".into()))?;
            let mut it = factors.iter();
            let first = it.next().ok_or_else(|| CliError::Input("empty tensor".into()))?;
            let mut acc = build_algebra(f, first)?;
            for s in it {
                acc = tensor_product(&acc, &build_algebra(f, s)?)?;
            }
            Ok(acc)
        }
        other => Err(CliError::Input(format!("unknown algebra kind {other:?}"))),
    }
}

pub fn algebra_build_cmd(spec: &str) -> Result<Value, CliError> {
    let spec = read_json(spec)?;
    with_field!(spec_field(&spec)?, f => {
        let alg = build_algebra(&f, &spec)?;
        Ok(json!({"algebra": alg.descriptor(), "center_dim": alg.center_basis().len().to_string()}))
    })
}

pub fn algebra_dcentral_cmd(ctx: &Ctx, spec: &str, space: &str, d: u32, oracle: bool) -> Result<Value, CliError> {
    let spec = read_json(spec)?;
    let space = read_json(space)?;
    with_field!(spec_field(&spec)?, f => {
        let alg = build_algebra(&f, &spec)?;
        let basis = space
            .as_array()
            .ok_or_else(|| CliError::Input("space must be a list of coordinate vectors".into()))?
            .iter()
            .map(|v| alg.element_from_json(v))
            .collect::<Result<Vec<_>, _>>()?;
        let verdict = is_d_central_space(&alg, &basis, d, &mut ctx.rng());
        let mut out = verdict.to_json(&alg);
        if oracle {
            let samples = [f.zero(), f.one(), f.neg(&f.one())];
            out["brute_force"] = json!(brute_force_d_central(&alg, &basis, d as u64, &samples));
        }
        Ok(out)
    })
}

pub fn algebra_vk_cmd(ctx: &Ctx, d: u64, k: usize, field: Option<&str>) -> Result<Value, CliError> {
    let any = match field {
        Some(s) => parse_field(&read_json(s)?)?,
        None => default_root_field(d)?,
    };
    with_field!(any, f => {
        let rho = f.root_of_unity(d).ok_or(AlgebraError::BadRootOrder(d))?;
        let params: Vec<_> = (0..k as i64).map(|i| (f.from_int(i + 2), f.from_int(i + 3))).collect();
        let st = symbol_tensor(&f, d, &rho, &params)?;
        let basis = build_vk(&st, k)?;
        let verdict = is_d_central_space(&st.algebra, &basis, d as u32, &mut ctx.rng());
        Ok(json!({
            "d": d.to_string(),
            "k": k.to_string(),
            "ambient_dim": st.algebra.dim().to_string(),
            "dim": st.algebra.rank_of(&basis).to_string(),
            "basis": basis.iter().map(|b| st.algebra.format(b)).collect::<Vec<_>>(),
            "verdict": verdict.to_json(&st.algebra),
        }))
    })
}

fn state_field(state: &Value) -> Result<AnyField, CliError> {
    parse_field(state.get("field").ok_or_else(|| CliError::Input("state needs a field".into()))?)
}

pub fn chain_init_cmd(field: &str, params: &str) -> Result<Value, CliError> {
    let kv = key_values(params)?;
    with_field!(parse_field(&read_json(field)?)?, f => {
        let get = |n: &str| -> Result<_, CliError> {
            let s = kv.iter().find(|(k, _)| k == n).ok_or_else(|| CliError::Input(format!("missing {n}")))?;
            element(&f, &s.1)
        };
        let q = canonical_quadruple(&f, &get("alpha")?, &get("beta")?, &get("gamma")?, &get("delta")?)?;
        Ok(q.to_json())
    })
}

pub fn chain_step_cmd(kind: &str, params: &str, gen: Option<&str>, state: &str) -> Result<Value, CliError> {
    let state = read_json(state)?;
    let kv = key_values(params)?;
    with_field!(state_field(&state)?, f => {
        let q = GeneratorQuadruple::from_json(&f, &state)?;
        let step = QuadStep::from_parts(&f, kind, gen, |k| {
            kv.iter().find(|(n, _)| n == k).map(|(_, v)| element(&f, v).map_err(|e| quatalg::chain::ChainError::Parse(e.to_string())))
        })?;
        let before = verify_quadruple(&q);
        let bq = before.symbol.ok_or_else(|| CliError::Input("state does not satisfy the relations".into()))?;
        let expected = expected_symbol(&f, &bq, &step)?;
        let next = quadruple_step(&q, &step)?;
        let after = verify_quadruple(&next);
        let mut out = next.to_json();
        out["step"] = json!(step.kind());
        out["verification"] = after.to_json(&f);
        out["expected_symbol"] = expected.to_json(&f);
        out["symbol_matches"] = json!(after.symbol.as_ref() == Some(&expected));
        Ok(out)
    })
}

pub fn chain_verify_cmd(state: &str) -> Result<Value, CliError> {
    let state = read_json(state)?;
    with_field!(state_field(&state)?, f => {
        let q = GeneratorQuadruple::from_json(&f, &state)?;
        Ok(verify_quadruple(&q).to_json(&f))
    })
}
