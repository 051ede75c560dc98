//! JSON serialization of Pauli-sum Hamiltonians:
//! {"n_qubits": M, "terms": [{"pauli": "Z0 Z1", "coeff": {"re": "...", "im": "..."}}]}
//! with coefficient sides rendered in the exact-coefficient grammar (or as
//! plain decimals in float mode).

use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, ExactComplex, SymbolBindings, SymbolicCoeff};
use crate::parser;
use crate::pauli::PauliSum;
use crate::{AlgebraKind, Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CoeffJson {
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct HamTerm {
    pub pauli: String,
    pub coeff: CoeffJson,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct HamiltonianFile {
    pub n_qubits: usize,
    pub terms: Vec<HamTerm>,
}

pub fn to_file(sum: &PauliSum) -> HamiltonianFile {
    let terms = sum
        .labeled_terms()
        .into_iter()
        .map(|(p, c)| {
            let coeff = match c {
                Coeff::Exact(e) => CoeffJson {
                    re: parser::format_symbolic(&e.re),
                    im: parser::format_symbolic(&e.im),
                },
                Coeff::Float(z) => CoeffJson {
                    re: z.re.to_string(),
                    im: z.im.to_string(),
                },
            };
            HamTerm {
                pauli: p.label(),
                coeff,
            }
        })
        .collect();
    HamiltonianFile {
        n_qubits: sum.n_qubits(),
        terms,
    }
}

fn parse_side(text: &str) -> Result<Coeff> {
    let c = parser::parse_coeff(text)?;
    if let Coeff::Exact(e) = &c {
        if !e.im.is_zero() {
            return Err(Error::Invalid(format!(
                "coefficient side `{text}` is not real"
            )));
        }
    }
    Ok(c)
}

pub fn from_file(file: &HamiltonianFile) -> Result<PauliSum> {
    let mut sum = PauliSum::zero(file.n_qubits);
    for term in &file.terms {
        let parsed = parser::parse(&term.pauli, AlgebraKind::Pauli, Some(file.n_qubits))?;
        let parser::AnySum::Pauli(p) = parsed else {
            unreachable!()
        };
        let mut labeled = p.labeled_terms();
        if labeled.len() != 1 {
            return Err(Error::Invalid(format!(
                "`{}` is not a single Pauli string",
                term.pauli
            )));
        }
        let (string, unit) = labeled.pop().unwrap();
        if unit != Coeff::one() {
            return Err(Error::Invalid(format!(
                "`{}` carries an embedded coefficient",
                term.pauli
            )));
        }
        let re = parse_side(&term.coeff.re)?;
        let im = parse_side(&term.coeff.im)?;
        sum.add_string(&string, re.add(&im.mul_i_pow(1)));
    }
    Ok(sum)
}

pub fn to_json_string(sum: &PauliSum) -> String {
    serde_json::to_string_pretty(&to_file(sum)).expect("serialization cannot fail")
}

pub fn from_json_str(text: &str) -> Result<PauliSum> {
    let file: HamiltonianFile = serde_json::from_str(text)
        .map_err(|e| Error::Invalid(format!("bad Hamiltonian JSON: {e}")))?;
    from_file(&file)
}

/// Integral bindings file: a flat {"h00": -1.25, ...} object.
pub fn bindings_from_json(text: &str) -> Result<SymbolBindings> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad bindings JSON: {e}")))
}

/// Evaluate every coefficient to a float with the given bindings.
pub fn to_float_sum(sum: &PauliSum, bindings: &SymbolBindings) -> Result<PauliSum> {
    let mut out = PauliSum::zero(sum.n_qubits());
    for (p, c) in sum.terms() {
        out.add_string(&p, c.to_float(bindings)?);
    }
    Ok(out)
}

#[allow(dead_code)]
fn real_coeff(s: SymbolicCoeff) -> Coeff {
    Coeff::Exact(ExactComplex {
        re: s,
        im: SymbolicCoeff::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::pauli::{Axis, PauliString};

    #[test]
    fn round_trip_exact() {
        let mut sum = PauliSum::zero(2);
        let zz = PauliString::from_axes(2, &[(0, Axis::Z), (1, Axis::Z)]).unwrap();
        let y0 = PauliString::single(2, 0, Axis::Y).unwrap();
        sum.add_string(&zz, Coeff::from_symbol("v0101").scale(rat(1, 4)));
        sum.add_string(&y0, Coeff::from_int(2).mul_i_pow(1));
        let json = to_json_string(&sum);
        let back = from_json_str(&json).unwrap();
        assert_eq!(back, sum);
        // bit-identical second pass
        assert_eq!(to_json_string(&back), json);
    }

    #[test]
    fn round_trip_float() {
        let mut sum = PauliSum::zero(1);
        sum.add_string(
            &PauliString::single(1, 0, Axis::X).unwrap(),
            Coeff::Float(num_complex::Complex64::new(0.25, -1.5)),
        );
        let json = to_json_string(&sum);
        let back = from_json_str(&json).unwrap();
        assert_eq!(back, sum);
    }

    #[test]
    fn rejects_malformed_terms() {
        let text = r#"{"n_qubits": 1, "terms": [{"pauli": "Z0 + X0", "coeff": {"re": "1", "im": "0"}}]}"#;
        assert!(from_json_str(text).is_err());
        let text = r#"{"n_qubits": 1, "terms": [{"pauli": "Z9", "coeff": {"re": "1", "im": "0"}}]}"#;
        assert!(from_json_str(text).is_err());
    }

    #[test]
    fn bindings_parse() {
        let b = bindings_from_json(r#"{"h00": -1.25, "v0101": 0.67}"#).unwrap();
        assert_eq!(b["h00"], -1.25);
    }
}
