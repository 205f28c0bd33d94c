//! One function per subcommand: JSON payload in, JSON report out.

use azumaya_core::higgsing::{
    classify_deformation, fundamental_solutions, ode_residual, solvability_check, spectral_contains, spectral_curve,
    weyl_commutator_check, Branch, HiggsProblem, HiggsSolution, WeylTrunc, DEFAULT_DEGREE_CAP,
};
use azumaya_core::kahler::{pullback, pullback_form, trace_form};
use azumaya_core::orbit::{filtration_ranks, jordan_data, maximal_orbit, minimal_orbit, precede, JordanData};
use azumaya_core::point::{
    hilbert_chow, image_ideal_univar, intertwiner_space, is_conjugate_seeded, pushforward, rep_check, support_length,
    vanishing_ideal, AffinePresentation, Conjugacy, RepPoint,
};
use azumaya_core::torus::{
    amalgamate, cancel, is_special_lagrangian, pushforward_cycle, slag_representative, total_class, validate_profile,
    SurrogateClass,
};
use azumaya_core::{Matrix, MultiPoly, UniPoly, GR};
use serde_json::{json, Value};

use crate::error::{malformed, CliError};
use crate::json::{self, *};

/// Settings shared by all commands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub degree_bound: Option<u32>,
}

/// Every command path accepted by [`dispatch`].
pub const COMMANDS: &[&str] = &[
    "rep-check",
    "image",
    "pushforward",
    "hilbert-chow",
    "conjugate",
    "orbit-compare",
    "orbit-extremes",
    "higgsing solve",
    "spectral-curve",
    "weyl-check",
    "torus class",
    "torus amalgamate",
    "torus slag",
    "torus cancel",
    "torus validate-profile",
    "kahler trace",
    "kahler pullback",
];

pub fn dispatch(command: &str, input: &Value, opts: &Options) -> Result<Value, CliError> {
    match command {
        "rep-check" => rep_check_cmd(input),
        "image" => image(input, opts),
        "pushforward" => pushforward_cmd(input),
        "hilbert-chow" => hilbert_chow_cmd(input),
        "conjugate" => conjugate(input, opts),
        "orbit-compare" => orbit_compare(input),
        "orbit-extremes" => orbit_extremes(input),
        "higgsing solve" => higgsing_solve(input),
        "spectral-curve" => spectral(input),
        "weyl-check" => weyl_check(input),
        "torus class" => torus_class(input),
        "torus amalgamate" => torus_pair(input, false),
        "torus slag" => torus_slag(input),
        "torus cancel" => torus_pair(input, true),
        "torus validate-profile" => torus_validate(input),
        "kahler trace" => kahler_trace(input),
        "kahler pullback" => kahler_pullback(input),
        other => Err(malformed(format!("unknown command {:?}", other))),
    }
}

/// The payload under `key`, or the whole payload when `key` is absent.
fn nested<'a>(v: &'a Value, key: &str) -> &'a Value {
    v.get(key).unwrap_or(v)
}

fn rep_check_cmd(v: &Value) -> Result<Value, CliError> {
    let t = rep_point(nested(v, "point"))?;
    let pres = match v.get("presentation") {
        Some(p) => presentation(p)?,
        None => AffinePresentation::free(t.vars().to_vec()),
    };
    Ok(json!({ "rep_check": rep_check(&t, &pres)? }))
}

fn image(v: &Value, opts: &Options) -> Result<Value, CliError> {
    let t = rep_point(nested(v, "point"))?;
    let bound = opts.degree_bound.unwrap_or(t.rank() as u32);
    let ideal: Vec<Value> = vanishing_ideal(&t, bound)?.iter().map(|f| multipoly_out(f, t.arity())).collect();
    let mut out = json!({ "vars": t.vars(), "degree_bound": bound, "vanishing_ideal": ideal });
    if t.arity() == 1 {
        out["min_poly"] = unipoly_out(&image_ideal_univar(&t)?);
    }
    Ok(out)
}

fn pushforward_cmd(v: &Value) -> Result<Value, CliError> {
    let t = rep_point(nested(v, "point"))?;
    let module = pushforward(&t)?;
    let entries: Vec<Value> = module
        .entries
        .iter()
        .map(|e| json!({ "point": point_out(&e.point), "length": e.length, "filtration_ranks": e.filtration_ranks }))
        .collect();
    Ok(json!({ "entries": entries, "rank": t.rank() }))
}

fn hilbert_chow_cmd(v: &Value) -> Result<Value, CliError> {
    let m = matrix(nested(v, "matrix"))?;
    let hc = hilbert_chow(&m)?;
    let mut out = json!({ "char_poly": unipoly_out(&hc.char_poly) });
    if let Some(roots) = hc.roots {
        out["roots"] = roots.iter().map(|(r, k)| json!({ "root": text(r), "mult": k })).collect();
    }
    Ok(out)
}

fn conjugate(v: &Value, opts: &Options) -> Result<Value, CliError> {
    let (a, b) = (rep_point(field(v, "left")?)?, rep_point(field(v, "right")?)?);
    let status = match is_conjugate_seeded(&a, &b, opts.seed)? {
        Conjugacy::Conjugate => "conjugate",
        Conjugacy::NotConjugate => "not_conjugate",
        Conjugacy::ProbablyNotConjugate => "probably_not_conjugate",
    };
    Ok(json!({ "status": status, "intertwiner_dim": intertwiner_space(&a, &b)?.len() }))
}

/// Jordan data given directly, or computed from a single matrix.
fn jordan_input(v: &Value) -> Result<JordanData, CliError> {
    match v.get("matrix") {
        Some(m) => Ok(jordan_data(&single(matrix(m)?)?)?),
        None => json::jordan_data(v),
    }
}

fn single(m: Matrix) -> Result<RepPoint, CliError> {
    RepPoint::single(m).map_err(|e| malformed(e.to_string()))
}

fn orbit_compare(v: &Value) -> Result<Value, CliError> {
    let (a, b) = (jordan_input(field(v, "left")?)?, jordan_input(field(v, "right")?)?);
    Ok(json!({
        "left": jordan_out(&a),
        "right": jordan_out(&b),
        "left_precedes_right": precede(&a, &b),
        "right_precedes_left": precede(&b, &a),
    }))
}

fn orbit_extremes(v: &Value) -> Result<Value, CliError> {
    let s = match v.get("matrix") {
        Some(m) => support_length(&single(matrix(m)?)?)?,
        None => support(nested(v, "support"))?,
    };
    let (top, bottom) = (maximal_orbit(&s), minimal_orbit(&s));
    let ranks = |j: &JordanData| -> Value {
        filtration_ranks(j).iter().map(|(p, r)| json!({ "point": point_out(p), "ranks": r })).collect()
    };
    Ok(json!({
        "support": support_out(&s),
        "maximal": jordan_out(&top.jordan),
        "minimal": jordan_out(&bottom.jordan),
        "maximal_filtration": ranks(&top.jordan),
        "minimal_filtration": ranks(&bottom.jordan),
    }))
}

fn branch_out(b: &Branch) -> Value {
    let kernel = |k: &[UniPoly]| Value::Array(k.iter().map(unipoly_out).collect());
    match b {
        Branch::Split { eigenvalues, kernels } => json!({
            "case": "split",
            "eigenvalues": [text(&eigenvalues[0]), text(&eigenvalues[1])],
            "kernels": [kernel(&kernels[0]), kernel(&kernels[1])],
        }),
        Branch::Scalar { eigenvalue } => json!({ "case": "scalar", "eigenvalue": text(eigenvalue) }),
        Branch::Nilpotent { eigenvalue, kernel: k } => {
            json!({ "case": "nilpotent", "eigenvalue": text(eigenvalue), "kernel": kernel(k) })
        }
    }
}

/// `{"A", "lambda", "bhat": [4]}`, or `{"A", "lambda", "B"}` to classify a
/// given `B`.
fn higgsing_solve(v: &Value) -> Result<Value, CliError> {
    let a = polymatrix(field(v, "A")?)?;
    let lambda = scalar(field(v, "lambda")?)?;
    let p = HiggsProblem::new(a, lambda)?;
    let mut out = json!({ "solvable": solvability_check(&p) });
    let s = match (v.get("B"), v.get("bhat")) {
        (Some(b), _) => HiggsSolution::from_matrix(polymatrix(b)?),
        (None, Some(bhat)) => {
            let bhat: [GR; 4] = scalars(bhat, "bhat")?.try_into().map_err(|_| malformed("bhat needs 4 scalars"))?;
            let sols = fundamental_solutions(&p)?;
            out["fundamental_solutions"] = sols.iter().map(polymatrix_out).collect();
            HiggsSolution::combine(&p, bhat)?
        }
        (None, None) => return Err(malformed("missing field \"bhat\" (or \"B\")")),
    };
    let residual = ode_residual(&p, &s.b)?;
    out["B"] = polymatrix_out(&s.b);
    out["B0"] = matrix_out(&s.b0);
    out["residual"] = polymatrix_out(&residual);
    out["residual_zero"] = json!(residual.is_zero());
    if residual.is_zero() {
        let report = classify_deformation(&p, &s)?;
        out["char_poly_b0"] = unipoly_out(&report.char_poly_b0);
        out["char_poly_matches"] = json!(report.char_poly_matches);
        out["kernel_ideal"] = unipoly_out(&report.kernel_ideal);
        out["branch"] = branch_out(&report.branch);
    }
    Ok(out)
}

/// `{"phi": M, "points": [z0...]}`; `points` is optional.
fn spectral(v: &Value) -> Result<Value, CliError> {
    let phi = polymatrix(field(v, "phi")?)?;
    let curve = spectral_curve(&phi)?;
    let mut out = json!({ "curve": multipoly_out(&curve, 2), "text": curve.to_text(&["z", "lambda"]) });
    if let Some(points) = v.get("points") {
        let checks = scalars(points, "points")?
            .iter()
            .map(|z| Ok(json!({ "z": text(z), "contained": spectral_contains(&phi, &curve, z)? })))
            .collect::<Result<Vec<Value>, CliError>>()?;
        out["points"] = Value::Array(checks);
    }
    Ok(out)
}

/// `{"cap": N, "rank": r}`, both optional.
fn weyl_check(v: &Value) -> Result<Value, CliError> {
    let cap = v.get("cap").map_or(Ok(DEFAULT_DEGREE_CAP as u64), |c| count(c, "cap"))? as usize;
    let rank = v.get("rank").map_or(Ok(1), |r| count(r, "rank"))? as usize;
    let w = WeylTrunc::new(cap, rank)?;
    Ok(json!({ "cap": cap, "rank": rank, "holds": weyl_commutator_check(&w) }))
}

fn surrogate_out(s: &SurrogateClass) -> Value {
    json!([s.r, s.p, s.q])
}

fn torus_class(v: &Value) -> Result<Value, CliError> {
    let phi = morphism(nested(v, "morphism"))?;
    let (s, c) = total_class(&phi);
    Ok(json!({
        "surrogate": surrogate_out(&s),
        "class": class_out(&c),
        "rank": phi.rank(),
        "special_lagrangian": is_special_lagrangian(&phi),
        "cycle": cycle_out(&pushforward_cycle(&phi)),
    }))
}

fn torus_pair(v: &Value, then_cancel: bool) -> Result<Value, CliError> {
    let (a, b) = (morphism(field(v, "left")?)?, morphism(field(v, "right")?)?);
    let out = if then_cancel { cancel(&a, &b)? } else { amalgamate(&a, &b)? };
    Ok(json!({
        "morphism": morphism_out(&out),
        "surrogate": surrogate_out(&total_class(&out).0),
        "cycle": cycle_out(&pushforward_cycle(&out)),
    }))
}

/// `{"tau", "target": [r, p, q]}`.
fn torus_slag(v: &Value) -> Result<Value, CliError> {
    let g = geometry(v)?;
    let target = match array_of(field(v, "target")?)?.as_slice() {
        [r, p, q] => SurrogateClass::new(count(r, "r")?, integer(p, "p")?, integer(q, "q")?),
        _ => return Err(malformed("target must be [r, p, q]")),
    };
    let phi = slag_representative(&target, &g)?;
    Ok(json!({
        "morphism": morphism_out(&phi),
        "surrogate": surrogate_out(&total_class(&phi).0),
        "special_lagrangian": is_special_lagrangian(&phi),
        "cycle": cycle_out(&pushforward_cycle(&phi)),
    }))
}

fn array_of(v: &Value) -> Result<&Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| malformed("expected an array"))
}

fn torus_validate(v: &Value) -> Result<Value, CliError> {
    let phi = morphism(nested(v, "morphism"))?;
    Ok(json!({ "valid": validate_profile(&phi)? }))
}

fn kahler_trace(v: &Value) -> Result<Value, CliError> {
    let w = formal_form(nested(v, "form"))?;
    Ok(json!({ "trace": commutative_out(&trace_form(&w)?, form_width(&w)) }))
}

/// `{"phi": {"vars", "images"}, "form": [f_1, ...], "function": f}`; `form`
/// holds the coefficients of `sum f_k dy_k`, and `function` is optional.
fn kahler_pullback(v: &Value) -> Result<Value, CliError> {
    let phi = morphism_to_affine(field(v, "phi")?)?;
    let coeffs = array_of(field(v, "form")?)?.iter().map(multipoly).collect::<Result<Vec<_>, _>>()?;
    let w = pullback_form(&phi, &coeffs)?;
    // number of source variables the images mention
    let n = phi.images().iter().flat_map(|m| m.entries()).map(MultiPoly::width).max().unwrap_or(0);
    let mut out = json!({ "form": formal_form_out(&w), "trace": commutative_out(&trace_form(&w)?, n) });
    if let Some(f) = v.get("function") {
        out["function"] = multipoly_matrix_out(&pullback(&phi, &multipoly(f)?)?, n);
    }
    Ok(out)
}
