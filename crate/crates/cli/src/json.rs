//! JSON encoding of exact values.
//!
//! Input is lenient: a scalar may be a JSON integer, canonical text such as
//! `"1/2-3i"`, or an object `{"re": "1/2", "im": "-3"}`. Output is canonical:
//! inside coefficient and matrix arrays a real integer is a plain number and
//! anything else a `{"re", "im"}` object in lowest terms; scalars standing
//! alone under a named key (roots, points, offsets) are canonical text.
//! Object keys come out sorted because `serde_json::Map` is a `BTreeMap`.

use azumaya_core::kahler::{CommutativeForm, FormTerm, FormalForm, MorphismToAffine, MultiPolyMatrix};
use azumaya_core::orbit::{JordanData, OrbitLabel, Partition};
use azumaya_core::point::{AffinePresentation, RepPoint, SupportLengthData};
use azumaya_core::scalar::rational_text;
use azumaya_core::torus::{AzCircleMorphism, Component, HomologyClass, TorusGeometry, WeightedCycle};
use azumaya_core::{Mat, Matrix, Monomial, MultiPoly, PolyMatrix, Rational, UniPoly, GR};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{malformed, CliError};

pub type Parsed<T> = Result<T, CliError>;

pub fn field<'a>(v: &'a Value, key: &str) -> Parsed<&'a Value> {
    v.get(key).ok_or_else(|| malformed(format!("missing field {:?}", key)))
}

fn array<'a>(v: &'a Value, what: &str) -> Parsed<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("{} must be an array", what)))
}

pub fn count(v: &Value, what: &str) -> Parsed<u64> {
    v.as_u64().ok_or_else(|| malformed(format!("{} must be a nonnegative integer", what)))
}

pub fn integer(v: &Value, what: &str) -> Parsed<i64> {
    v.as_i64().ok_or_else(|| malformed(format!("{} must be an integer", what)))
}

fn rational(v: &Value) -> Parsed<Rational> {
    let g = scalar(v)?;
    if !g.is_real() {
        return Err(malformed(format!("expected a real number, got {}", g)));
    }
    Ok(g.re().clone())
}

pub fn scalar(v: &Value) -> Parsed<GR> {
    match v {
        Value::Number(n) => {
            if let Some(k) = n.as_i64() {
                Ok(GR::from(k))
            } else if let Some(k) = n.as_u64() {
                Ok(GR::from_real(Rational::from_integer(k.into())))
            } else {
                Err(malformed(format!("{} is not exact; write fractions as text like \"1/3\"", n)))
            }
        }
        Value::String(s) => s.parse().map_err(|_| malformed(format!("cannot parse scalar {:?}", s))),
        Value::Object(o) => {
            let part = |k: &str| o.get(k).map_or(Ok(Rational::from_integer(0.into())), rational);
            Ok(GR::new(part("re")?, part("im")?))
        }
        _ => Err(malformed(format!("expected a scalar, got {}", v))),
    }
}

/// Array-element form: number for small real integers, else `{"re","im"}`.
pub fn scalar_out(c: &GR) -> Value {
    if c.is_integer() {
        if let Ok(k) = i64::try_from(c.re().to_integer()) {
            return json!(k);
        }
    }
    json!({ "re": rational_text(c.re()), "im": rational_text(c.im()) })
}

pub fn text(c: &GR) -> Value {
    Value::String(c.to_string())
}

pub fn scalars(v: &Value, what: &str) -> Parsed<Vec<GR>> {
    array(v, what)?.iter().map(scalar).collect()
}

fn grid<T>(v: &Value, what: &str, entry: impl Fn(&Value) -> Parsed<T>) -> Parsed<Vec<Vec<T>>> {
    let rows = array(v, what)?;
    let rows = rows
        .iter()
        .map(|r| array(r, what)?.iter().map(&entry).collect::<Parsed<Vec<T>>>())
        .collect::<Parsed<Vec<_>>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(malformed(format!("{} rows differ in length", what)));
    }
    Ok(rows)
}

pub fn matrix(v: &Value) -> Parsed<Matrix> {
    let rows = grid(v, "matrix", scalar)?;
    if rows.is_empty() {
        return Err(malformed("matrix has no rows"));
    }
    Matrix::from_rows(rows).map_err(|e| malformed(e.to_string()))
}

fn grid_out<T>(m: &Mat<T>, entry: impl Fn(&T) -> Value) -> Value
where
    T: azumaya_core::Ring,
{
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(&entry).collect())).collect())
}

pub fn matrix_out(m: &Matrix) -> Value {
    grid_out(m, scalar_out)
}

/// Coefficients lowest degree first.
pub fn unipoly(v: &Value) -> Parsed<UniPoly> {
    Ok(UniPoly::new(scalars(v, "polynomial")?))
}

pub fn unipoly_out(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_out).collect())
}

/// Entries are coefficient arrays, or bare scalars for constants.
pub fn polymatrix(v: &Value) -> Parsed<PolyMatrix> {
    let entry = |e: &Value| if e.is_array() { unipoly(e) } else { Ok(UniPoly::constant(scalar(e)?)) };
    let rows = grid(v, "polynomial matrix", entry)?;
    if rows.is_empty() {
        return Err(malformed("polynomial matrix has no rows"));
    }
    PolyMatrix::from_rows(rows).map_err(|e| malformed(e.to_string()))
}

pub fn polymatrix_out(m: &PolyMatrix) -> Value {
    grid_out(m, unipoly_out)
}

/// A list of `{"exps": [...], "coef": c}` terms, or a bare scalar.
pub fn multipoly(v: &Value) -> Parsed<MultiPoly> {
    let Some(terms) = v.as_array() else {
        return Ok(MultiPoly::constant(scalar(v)?));
    };
    let mut f = MultiPoly::zero();
    for t in terms {
        let exps = array(field(t, "exps")?, "exps")?
            .iter()
            .map(|e| e.as_u64().and_then(|k| u32::try_from(k).ok()).ok_or_else(|| malformed("bad exponent")))
            .collect::<Parsed<Vec<u32>>>()?;
        f = f + MultiPoly::term(Monomial::new(exps), scalar(field(t, "coef")?)?);
    }
    Ok(f)
}

/// Terms in descending graded lexicographic order, exponents padded to `n`.
pub fn multipoly_out(f: &MultiPoly, n: usize) -> Value {
    Value::Array(f.terms().rev().map(|(m, c)| json!({ "exps": m.padded(n), "coef": scalar_out(c) })).collect())
}

pub fn multipoly_matrix(v: &Value) -> Parsed<MultiPolyMatrix> {
    let rows = grid(v, "polynomial matrix", multipoly)?;
    if rows.is_empty() {
        return Err(malformed("polynomial matrix has no rows"));
    }
    Mat::from_rows(rows).map_err(|e| malformed(e.to_string()))
}

pub fn multipoly_matrix_out(m: &MultiPolyMatrix, n: usize) -> Value {
    grid_out(m, |f| multipoly_out(f, n))
}

fn names(v: &Value, what: &str) -> Parsed<Vec<String>> {
    array(v, what)?
        .iter()
        .map(|s| s.as_str().map(String::from).ok_or_else(|| malformed(format!("{} must be strings", what))))
        .collect()
}

/// `{"r": r, "vars": [...], "matrices": [...]}`; `r` and `vars` are optional.
pub fn rep_point(v: &Value) -> Parsed<RepPoint> {
    let matrices = array(field(v, "matrices")?, "matrices")?.iter().map(matrix).collect::<Parsed<Vec<_>>>()?;
    let t = match v.get("vars") {
        Some(vars) => RepPoint::with_vars(names(vars, "vars")?, matrices),
        None => RepPoint::new(matrices),
    }
    .map_err(|e| malformed(e.to_string()))?;
    if let Some(r) = v.get("r") {
        if count(r, "r")? != t.rank() as u64 {
            return Err(malformed(format!("declared r = {} but matrices are {}x{}", r, t.rank(), t.rank())));
        }
    }
    Ok(t)
}

pub fn presentation(v: &Value) -> Parsed<AffinePresentation> {
    let vars = names(field(v, "vars")?, "vars")?;
    let relators = match v.get("relators") {
        Some(rs) => array(rs, "relators")?.iter().map(multipoly).collect::<Parsed<Vec<_>>>()?,
        None => Vec::new(),
    };
    AffinePresentation::new(vars, relators).map_err(|e| malformed(e.to_string()))
}

fn point(v: &Value) -> Parsed<Vec<GR>> {
    if v.is_array() {
        scalars(v, "point")
    } else {
        Ok(vec![scalar(v)?])
    }
}

pub fn point_out(p: &[GR]) -> Value {
    Value::Array(p.iter().map(text).collect())
}

fn partition(v: &Value) -> Parsed<Partition> {
    let parts = array(v, "partition")?.iter().map(|k| count(k, "part").map(|k| k as usize)).collect::<Parsed<_>>()?;
    Partition::new(parts).map_err(|e| malformed(e.to_string()))
}

/// `[{"point": [...], "partition": [...]}]`.
pub fn jordan_data(v: &Value) -> Parsed<JordanData> {
    let entries = array(v, "Jordan data")?
        .iter()
        .map(|e| Ok((point(field(e, "point")?)?, partition(field(e, "partition")?)?)))
        .collect::<Parsed<Vec<_>>>()?;
    JordanData::new(entries).map_err(|e| malformed(e.to_string()))
}

pub fn jordan_out(j: &JordanData) -> Value {
    Value::Array(
        j.entries().iter().map(|(p, part)| json!({ "point": point_out(p), "partition": part.parts() })).collect(),
    )
}

/// `[{"point": [...], "length": l}]`.
pub fn support(v: &Value) -> Parsed<SupportLengthData> {
    let entries = array(v, "support")?
        .iter()
        .map(|e| Ok((point(field(e, "point")?)?, count(field(e, "length")?, "length")? as usize)))
        .collect::<Parsed<Vec<_>>>()?;
    SupportLengthData::new(entries).map_err(|e| malformed(e.to_string()))
}

pub fn support_out(s: &SupportLengthData) -> Value {
    Value::Array(s.entries().iter().map(|(p, l)| json!({ "point": point_out(p), "length": l })).collect())
}

pub fn class(v: &Value) -> Parsed<HomologyClass> {
    match array(v, "class")?.as_slice() {
        [p, q] => Ok(HomologyClass::new(integer(p, "p")?, integer(q, "q")?)),
        _ => Err(malformed("class must be [p, q]")),
    }
}

pub fn class_out(c: &HomologyClass) -> Value {
    json!([c.p, c.q])
}

pub fn geometry(v: &Value) -> Parsed<TorusGeometry> {
    TorusGeometry::new(scalar(field(v, "tau")?)?).map_err(|e| malformed(e.to_string()))
}

fn component(v: &Value) -> Parsed<Component> {
    let d = count(field(v, "d")?, "d")?;
    let wrap = v.get("wrap").map_or(Ok(1), |w| count(w, "wrap"))? as i64;
    let offset = v.get("offset").map_or(Ok(GR::from(0)), scalar)?;
    let fr = v.get("fiber_rank").map_or(Ok(1), |f| count(f, "fiber_rank"))?;
    let wrap_class = class(field(v, "class")?)?.scale(wrap);
    Component::new(d, wrap_class, offset, fr).map_err(|e| malformed(e.to_string()))
}

/// `{"tau", "components": [{"d", "class", "wrap", "offset", "fiber_rank"}], "profile"}`.
pub fn morphism(v: &Value) -> Parsed<AzCircleMorphism> {
    let g = geometry(v)?;
    let components = match v.get("components") {
        Some(cs) => array(cs, "components")?.iter().map(component).collect::<Parsed<Vec<_>>>()?,
        None => Vec::new(),
    };
    let phi = AzCircleMorphism::new(g, components);
    match v.get("profile") {
        Some(p) => {
            let labels =
                array(p, "profile")?.iter().map(|j| jordan_data(j).map(OrbitLabel::new)).collect::<Parsed<_>>()?;
            Ok(phi.with_profile(labels))
        }
        None => Ok(phi),
    }
}

pub fn morphism_out(phi: &AzCircleMorphism) -> Value {
    let components: Vec<Value> = phi
        .components
        .iter()
        .map(|c| {
            json!({
                "d": c.d,
                "class": class_out(&c.class),
                "wrap": c.wrap,
                "offset": text(&c.offset),
                "fiber_rank": c.fiber_rank,
            })
        })
        .collect();
    let mut out = json!({ "tau": text(phi.geometry.tau()), "components": components });
    if let Some(profile) = &phi.profile {
        out["profile"] = Value::Array(profile.iter().map(|o| jordan_out(&o.jordan)).collect());
    }
    out
}

pub fn cycle_out(w: &WeightedCycle) -> Value {
    let terms: Vec<Value> = w
        .terms
        .iter()
        .map(|t| {
            json!({
                "class": class_out(&t.class),
                "offset": text(&t.offset),
                "winding": t.winding,
                "multiplicity": t.multiplicity,
            })
        })
        .collect();
    let points: Vec<Value> = w.points.iter().map(|(p, l)| json!({ "point": text(p), "length": l })).collect();
    json!({
        "terms": terms,
        "points": points,
        "total_class": class_out(&w.total_class()),
        "total_rank": w.total_rank(),
    })
}

/// `{"rank", "degree", "terms": [{"coeffs": [M...], "diffs": [M...]}]}`; rank
/// and degree may be left out when there is at least one term. A term
/// `m_0 d(m_1) m_2 ... d(m_s) m_s'` lists `s + 1` coefficients; leaving
/// `coeffs` out means identities, i.e. the plain word `d(m_1) ... d(m_s)`.
pub fn formal_form(v: &Value) -> Parsed<FormalForm> {
    let terms = array(field(v, "terms")?, "terms")?
        .iter()
        .map(|t| {
            let mats = |k: &str| array(field(t, k)?, k)?.iter().map(multipoly_matrix).collect::<Parsed<Vec<_>>>();
            let diffs = mats("diffs")?;
            let coeffs = match t.get("coeffs") {
                Some(_) => mats("coeffs")?,
                None => {
                    let r = diffs.first().map(|m| m.rows()).ok_or_else(|| malformed("a term needs diffs or coeffs"))?;
                    vec![Mat::identity(r); diffs.len() + 1]
                }
            };
            Ok(FormTerm { coeffs, diffs })
        })
        .collect::<Parsed<Vec<_>>>()?;
    let rank = match (v.get("rank"), terms.first()) {
        (Some(r), _) => count(r, "rank")? as usize,
        (None, Some(t)) => t.diffs.first().or(t.coeffs.first()).map_or(0, |m| m.rows()),
        (None, None) => return Err(malformed("an empty form needs \"rank\" and \"degree\"")),
    };
    let degree = match (v.get("degree"), terms.first()) {
        (Some(s), _) => count(s, "degree")? as usize,
        (None, Some(t)) => t.diffs.len(),
        (None, None) => return Err(malformed("an empty form needs \"rank\" and \"degree\"")),
    };
    FormalForm::from_terms(rank, degree, terms).map_err(|e| malformed(e.to_string()))
}

pub fn form_width(w: &FormalForm) -> usize {
    w.terms()
        .iter()
        .flat_map(|t| t.coeffs.iter().chain(&t.diffs))
        .flat_map(|m| m.entries().iter().map(MultiPoly::width))
        .max()
        .unwrap_or(0)
}

pub fn formal_form_out(w: &FormalForm) -> Value {
    let n = form_width(w);
    let mats = |ms: &[MultiPolyMatrix]| Value::Array(ms.iter().map(|m| multipoly_matrix_out(m, n)).collect());
    let terms: Vec<Value> =
        w.terms().iter().map(|t| json!({ "coeffs": mats(&t.coeffs), "diffs": mats(&t.diffs) })).collect();
    json!({ "rank": w.rank(), "degree": w.degree(), "terms": terms })
}

/// `[{"index": [k...], "coef": f}]` in index order, exponents padded to at
/// least `n` variables.
pub fn commutative_out(c: &CommutativeForm, n: usize) -> Value {
    let widest = c.coeffs.iter().map(|(k, f)| f.width().max(k.iter().max().map_or(0, |&i| i + 1)));
    let n = widest.fold(n, usize::max);
    Value::Array(c.coeffs.iter().map(|(k, f)| json!({ "index": k, "coef": multipoly_out(f, n) })).collect())
}

/// `{"vars": [...], "images": [M...]}`.
pub fn morphism_to_affine(v: &Value) -> Parsed<MorphismToAffine> {
    let images = array(field(v, "images")?, "images")?.iter().map(multipoly_matrix).collect::<Parsed<Vec<_>>>()?;
    let vars = match v.get("vars") {
        Some(vs) => names(vs, "vars")?,
        None => (1..=images.len()).map(|i| format!("y{}", i)).collect(),
    };
    Ok(MorphismToAffine::new(vars, images)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_forms() {
        assert_eq!(scalar(&json!(3)).unwrap(), GR::from(3));
        assert_eq!(scalar(&json!("1/2-i")).unwrap(), GR::frac(1, 2) - GR::i());
        assert_eq!(scalar(&json!({"re": "1/2", "im": -1})).unwrap(), GR::frac(1, 2) - GR::i());
        assert!(scalar(&json!(0.5)).is_err());
        assert_eq!(scalar_out(&GR::from(-4)), json!(-4));
        assert_eq!(scalar_out(&GR::frac(2, 4)), json!({"re": "1/2", "im": "0"}));
    }

    #[test]
    fn multipoly_round_trip() {
        let v = json!([{"exps": [1, 0], "coef": 1}, {"exps": [0, 1], "coef": "-i"}, {"exps": [0, 0], "coef": 2}]);
        let f = multipoly(&v).unwrap();
        assert_eq!(multipoly(&multipoly_out(&f, 2)).unwrap(), f);
        assert_eq!(multipoly_out(&f, 2)[0], json!({"exps": [1, 0], "coef": 1}));
    }

    #[test]
    fn ragged_matrix_is_malformed() {
        assert!(matches!(matrix(&json!([[1, 2], [3]])), Err(CliError::Malformed(_))));
    }
}
