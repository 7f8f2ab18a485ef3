//! JSON wire format: a flat array `[a, d, bx, by, bz, cx, cy, cz]`.
//!
//! Numbers are written with the shortest decimal that parses back to the
//! same `f64`, so `parse(serialize(p))` is bit-exact, including `-0`.

use paravector::Paravector;
use thiserror::Error;

pub const PARAVECTOR_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WireError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("expected {expected} numbers, found {found}")]
    Arity { expected: usize, found: usize },
}

/// Parses a JSON array of exactly `n` finite numbers.
pub fn parse_array(text: &str, n: usize) -> Result<Vec<f64>, WireError> {
    let values: Vec<f64> = serde_json::from_str(text.trim()).map_err(|e| {
        let message = e.to_string();
        // serde_json appends the position to its message
        let message = message.split(" at line ").next().unwrap_or(&message).to_string();
        WireError::Parse { line: e.line(), column: e.column(), message }
    })?;
    if values.len() != n {
        return Err(WireError::Arity { expected: n, found: values.len() });
    }
    Ok(values)
}

pub fn parse(text: &str) -> Result<Paravector, WireError> {
    let values = parse_array(text, PARAVECTOR_LEN)?;
    let mut c = [0.0; PARAVECTOR_LEN];
    c.copy_from_slice(&values);
    // JSON has no literal for NaN or infinities and out-of-range numbers are
    // rejected by the parser, so every value here is finite.
    Ok(Paravector::from_components(c).expect("JSON numbers are finite"))
}

pub fn format_number(x: f64) -> String {
    let magnitude = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&magnitude) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn format_array(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().copied().map(format_number).collect();
    format!("[{}]", parts.join(","))
}

pub fn serialize(p: &Paravector) -> String {
    format_array(&p.to_components())
}

#[cfg(test)]
mod tests {
    use paravector::{CVector3, ComplexScalar};
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse("[1,0,0,0,0,0,0,0]").unwrap(), Paravector::ONE);
        let p = parse("[1,1,1,0,0,0,0,0]").unwrap();
        assert_eq!(p.scalar(), ComplexScalar::new(1.0, 1.0));
        assert_eq!(p.vector(), CVector3::real([1.0, 0.0, 0.0]));
    }

    #[test]
    fn wrong_length() {
        assert_eq!(parse("[1,0,0]"), Err(WireError::Arity { expected: 8, found: 3 }));
    }

    #[test]
    fn reports_position() {
        match parse("[1,0,0,\n0,x,0,0,0]") {
            Err(WireError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("[1,2"), Err(WireError::Parse { .. })));
        assert!(matches!(parse("[1e999,0,0,0,0,0,0,0]"), Err(WireError::Parse { .. })));
        assert!(matches!(parse("{\"a\":1}"), Err(WireError::Parse { .. })));
    }

    #[test]
    fn canonical_output() {
        let p = parse(" [1.0, -0, 2.50, 0, 1e-7, 3e20, -4, 0.1] ").unwrap();
        assert_eq!(serialize(&p), "[1,-0,2.5,0,1e-7,3e20,-4,0.1]");
    }

    fn any_finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            any::<f64>().prop_filter("finite", |x| x.is_finite()),
            -2.0f64..2.0,
            Just(-0.0),
            Just(f64::MIN_POSITIVE),
            Just(5e-324),
            Just(f64::MAX),
        ]
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(c in prop::array::uniform8(any_finite())) {
            let p = Paravector::from_components(c).unwrap();
            let back = parse(&serialize(&p)).unwrap().to_components();
            for (x, y) in c.iter().zip(back) {
                prop_assert_eq!(x.to_bits(), y.to_bits());
            }
        }

        #[test]
        fn serialization_is_canonical(c in prop::array::uniform8(any_finite())) {
            let text = serialize(&Paravector::from_components(c).unwrap());
            prop_assert_eq!(serialize(&parse(&text).unwrap()), text);
        }
    }
}
