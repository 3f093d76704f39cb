//! JSON encodings. Every number is an exact decimal string.

use num_bigint::BigInt;
use serde_json::{json, Value};

use projgl_core::cyclo::{CycNum, CycPoly};
use projgl_core::ffpoly::FpPoly;
use projgl_core::glring::{RingElt, TensorElt};
use projgl_core::oracle::ClassFn;
use projgl_core::poincare::{KernelReport, MolienCheck, RatSeries};
use projgl_core::linalg::Matrix;

pub fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

/// {"m", "num": [...], "den": [...]}: coefficient i on zeta_m^i is num[i]/den[i],
/// in lowest terms, over the power basis of length phi(m).
pub fn cyc(x: &CycNum) -> Value {
    let coeffs = x.coefficients();
    json!({
        "m": x.order(),
        "num": coeffs.iter().map(|c| c.numer().to_string()).collect::<Vec<_>>(),
        "den": coeffs.iter().map(|c| c.denom().to_string()).collect::<Vec<_>>(),
        "text": x.to_text(),
    })
}

pub fn cyc_list(xs: &[CycNum]) -> Value {
    Value::Array(xs.iter().map(cyc).collect())
}

pub fn cyc_poly(f: &CycPoly) -> Value {
    cyc_list(f.coeffs())
}

pub fn poly(f: &FpPoly) -> Value {
    Value::String(f.to_digits())
}

pub fn poly_list(fs: &[FpPoly]) -> Value {
    Value::Array(fs.iter().map(poly).collect())
}

pub fn ring(x: &RingElt) -> Value {
    Value::Array(
        x.terms()
            .iter()
            .map(|(f, c)| json!({"basis": f.to_digits(), "coeff": cyc(c)}))
            .collect(),
    )
}

pub fn tensor(x: &TensorElt) -> Value {
    Value::Array(
        x.terms()
            .iter()
            .map(|((a, b), c)| json!({"left": a.to_digits(), "right": b.to_digits(), "coeff": cyc(c)}))
            .collect(),
    )
}

pub fn class_fn(x: &ClassFn) -> Value {
    ring(&x.to_ring_elt())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| cyc_list(r)).collect())
}

pub fn series(s: &RatSeries) -> Value {
    json!({
        "numerator": cyc_poly(s.numerator()),
        "denominator": cyc_poly(s.denominator()),
        "order": s.order(),
        "coefficients": cyc_list(s.coefficients()),
    })
}

pub fn molien(c: &MolienCheck) -> Value {
    json!({
        "k": c.k,
        "class": poly(&c.class),
        "equal": c.equal(),
        "first_mismatch": c.first_mismatch,
        "formula": cyc_list(&c.formula),
        "molien": cyc_list(&c.molien),
    })
}

pub fn kernel(r: &KernelReport, with_elements: bool) -> Value {
    let mut v = json!({
        "polys": poly_list(&r.polys),
        "omitted": poly_list(&r.omitted),
        "dimension": r.dimension,
        "relations": r.relations.iter().map(|a| cyc_list(a)).collect::<Vec<_>>(),
        "residual_zero": r.residual_zero,
        "series_order": r.series_order,
        "series_zero": r.series_zero,
        "t_fixed": r.t_fixed,
    });
    if with_elements {
        v["ring_elements"] = Value::Array(
            r.ring_elements
                .iter()
                .map(|x| json!({"terms": ring(x), "text": x.to_text()}))
                .collect(),
        );
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use projgl_core::cyclo::CycField;
    use std::sync::Arc;

    #[test]
    fn cyc_encoding() {
        let f = Arc::new(CycField::new(3).unwrap());
        let x = CycNum::zeta_pow(&f, 1).scale(&BigRational::new(1.into(), 2.into()));
        let v = cyc(&x);
        assert_eq!(v["m"], 3);
        assert_eq!(v["num"], json!(["0", "1"]));
        assert_eq!(v["den"], json!(["1", "2"]));
        let minus = cyc(&CycNum::from_int(&f, -7));
        assert_eq!(minus["num"], json!(["-7", "0"]));
    }
}
