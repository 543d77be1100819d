//! JSON input parsing and output rendering. Rationals travel as strings
//! (`"3"`, `"-7/2"`); JSON integers are accepted on input, floats never.

use serde_json::{json, Value};

use crate::cauchy::{var_at, SigmaTauChain};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, rational_to_string, BiPoly, ComplexUniPoly, GaussianRational, Poly, Rational, UniPoly};

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

pub fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        Value::Number(n) => Err(Error::Parse(format!("floating point literal {n} is not exact"))),
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON array, got {v}")))
}

/// `[[re, im], ...]` in ascending powers of Z.
pub fn parse_complex_poly(v: &Value) -> Result<ComplexUniPoly> {
    let coeffs = array(v, "complex polynomial")?
        .iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([re, im]) => Ok(GaussianRational::new(rational_from_value(re)?, rational_from_value(im)?)),
            _ => Err(Error::Parse(format!("coefficient must be a [re, im] pair, got {pair}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexUniPoly::new(coeffs))
}

/// `[c0, c1, ...]` in ascending powers.
pub fn parse_real_poly(v: &Value) -> Result<UniPoly> {
    let coeffs = array(v, "polynomial")?
        .iter()
        .map(rational_from_value)
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// `[[c00, c01, ...], [c10, ...], ...]`: row `i` holds the Y-coefficients
/// of `X^i`.
pub fn parse_bivariate(v: &Value) -> Result<BiPoly> {
    let rows = array(v, "bivariate polynomial")?
        .iter()
        .map(parse_real_poly)
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(rows))
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(rational_to_string(x))
}

pub fn real_poly_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

pub fn bivariate_json(p: &BiPoly) -> Value {
    Value::Array(p.coeffs().iter().map(real_poly_json).collect())
}

pub fn complex_poly_json(f: &ComplexUniPoly) -> Value {
    Value::Array(
        f.coeffs()
            .iter()
            .map(|c| json!([rational_json(&c.re), rational_json(&c.im)]))
            .collect(),
    )
}

/// The chain with its weights and the sign table at both ends, enough to
/// recompute `Σ ε_i Var_a^b(S_{i−1}, S_i)` by hand.
pub fn chain_json(chain: &SigmaTauChain, a: &Rational, b: &Rational) -> Value {
    let signs = |x: &Rational| chain.polys.iter().map(|p| p.sign_at(x)).collect::<Vec<_>>();
    let terms: Vec<String> = chain
        .polys
        .windows(2)
        .zip(&chain.epsilon)
        .map(|(w, &e)| ((var_at(&w[0], &w[1], a) - var_at(&w[0], &w[1], b)) * i64::from(e)).to_string())
        .collect();
    json!({
        "polys": chain.polys.iter().map(real_poly_json).collect::<Vec<_>>(),
        "sigma": chain.sigma,
        "tau": chain.tau,
        "epsilon": chain.epsilon,
        "signs_at_a": signs(a),
        "signs_at_b": signs(b),
        "weighted_variations": terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn rationals() {
        assert_eq!(rational_from_value(&json!("-7/2")).unwrap(), rat(-7, 2));
        assert_eq!(rational_from_value(&json!(12)).unwrap(), int(12));
        assert!(matches!(rational_from_value(&json!(1.5)), Err(Error::Parse(_))));
        assert!(matches!(rational_from_value(&json!("1.5")), Err(Error::Parse(_))));
        assert!(matches!(rational_from_value(&json!(null)), Err(Error::Parse(_))));
    }

    #[test]
    fn polynomials_round_trip() {
        let v = json!([["-1", "0"], ["0", "0"], ["1", "0"]]);
        let f = parse_complex_poly(&v).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert_eq!(complex_poly_json(&f), v);
        let p = parse_real_poly(&json!(["1/2", 0, "-3"])).unwrap();
        assert_eq!(real_poly_json(&p), json!(["1/2", "0", "-3"]));
        let b = parse_bivariate(&json!([["0", "1"], [], ["2"]])).unwrap();
        assert_eq!(bivariate_json(&b), json!([["0", "1"], [], ["2"]]));
        assert!(parse_complex_poly(&json!([["1"]])).is_err());
    }
}
