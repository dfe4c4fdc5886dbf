//! JSON views of the library types.
//!
//! `CycLaurent` values are serialized as
//! `{"conductor": N, "terms": [[u_power, ["a/b", ...]], ...]}` with the
//! coefficient vectors in the reduced power basis of `zeta_N`.

use charsheaf::exactalg::cyclo::{CycLaurent, LaurentFraction};
use charsheaf::exactalg::Partition;
use charsheaf::green::IntPolynomial;
use serde_json::{json, Value};

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|e| format!("bad partition '{s}': {e}"))?;
    Partition::new(parts).map_err(|e| format!("bad partition '{s}': {e}"))
}

pub fn cyclaurent_json(v: &CycLaurent) -> Value {
    let conductor = v.conductor();
    let terms: Vec<Value> = v
        .terms()
        .map(|(e, c)| {
            let lifted = c.lift(conductor);
            let coeffs: Vec<String> = lifted.coeffs().iter().map(|r| r.to_string()).collect();
            json!([e, coeffs])
        })
        .collect();
    json!({"conductor": conductor, "terms": terms})
}

pub fn fraction_json(f: &LaurentFraction) -> Value {
    json!({
        "num": cyclaurent_json(&f.num),
        "den": cyclaurent_json(&f.den),
    })
}

pub fn int_polynomial_json(p: &IntPolynomial) -> Value {
    json!(p.coeffs)
}

pub fn parse_zeta(s: &str) -> Result<CycLaurent, String> {
    match s {
        "symbolic" | "1" => Ok(CycLaurent::one()),
        "-1" => Ok(CycLaurent::from_int(-1)),
        "i" => Ok(CycLaurent::root_of_unity(4, 1)),
        "-i" => Ok(CycLaurent::root_of_unity(4, 3)),
        _ => Err(format!("bad zeta '{s}': expected symbolic, 1, -1, i, -i")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use charsheaf::exactalg::cyclo::rat;

    #[test]
    fn laurent_serialization_shape() {
        let v = CycLaurent::root_of_unity(3, 1)
            .scale(&rat(1, 2))
            .mul(&CycLaurent::u_pow(-1));
        let j = cyclaurent_json(&v);
        assert_eq!(j["conductor"], 3);
        assert_eq!(j["terms"][0][0], -1);
        assert_eq!(j["terms"][0][1], serde_json::json!(["0", "1/2"]));
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(parse_partition("3,1").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("0,1").is_err());
        assert!(parse_partition("x").is_err());
    }
}
