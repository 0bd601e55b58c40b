use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Rational;

use super::arrangement::{Arrangement, ArrangementError};
use super::stretched::StretchedArrangement;

/// Wire format for arrangement files. A stretched arrangement adds
/// `multiplicities` and `coefficients` to the simple schema.
#[derive(Serialize, Deserialize)]
pub struct ArrangementJson {
    pub k: usize,
    pub forms: Vec<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Vec<Rational>>>,
}

/// Either kind of validated input arrangement.
#[derive(Debug)]
pub enum InputArrangement {
    Simple(Arrangement),
    Stretched(StretchedArrangement),
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid arrangement: {0}")]
    Invalid(#[from] ArrangementError),
    #[error("stretched input needs both multiplicities and coefficients")]
    HalfStretched,
}

pub fn parse_arrangement_json(text: &str) -> Result<InputArrangement, LoadError> {
    let raw: ArrangementJson = serde_json::from_str(text)?;
    match (raw.multiplicities, raw.coefficients) {
        (None, None) => Ok(InputArrangement::Simple(Arrangement::new(
            raw.k, raw.forms, raw.labels,
        )?)),
        (Some(mult), Some(coeffs)) => {
            let support = Arrangement::new(raw.k, raw.forms, raw.labels)?;
            Ok(InputArrangement::Stretched(StretchedArrangement::new(
                support, mult, coeffs,
            )?))
        }
        _ => Err(LoadError::HalfStretched),
    }
}

pub fn simple_to_json(a: &Arrangement) -> ArrangementJson {
    ArrangementJson {
        k: a.k(),
        forms: a.forms().to_vec(),
        labels: a.labels().map(|l| l.to_vec()),
        multiplicities: None,
        coefficients: None,
    }
}

pub fn stretched_to_json(b: &StretchedArrangement) -> ArrangementJson {
    ArrangementJson {
        k: b.support().k(),
        forms: b.support().forms().to_vec(),
        labels: b.support().labels().map(|l| l.to_vec()),
        multiplicities: Some(b.multiplicities().to_vec()),
        coefficients: Some(b.coefficients().to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_arrangement() {
        let text = r#"{"k":2,"forms":[["1","0"],["0","1"],["1","1"]],"labels":["l1","l2","l3"]}"#;
        let InputArrangement::Simple(a) = parse_arrangement_json(text).unwrap() else {
            panic!("expected simple arrangement");
        };
        assert_eq!(a.k(), 2);
        assert_eq!(a.n(), 3);
        assert_eq!(a.labels().unwrap()[2], "l3");
    }

    #[test]
    fn parse_stretched_arrangement() {
        let text = r#"{"k":2,"forms":[["1","0"],["0","1"]],"multiplicities":[2,1],"coefficients":[["1","2"],["1"]]}"#;
        let InputArrangement::Stretched(b) = parse_arrangement_json(text).unwrap() else {
            panic!("expected stretched arrangement");
        };
        assert_eq!(b.total_multiplicity(), 3);
        assert_eq!(b.coefficients()[0][1], Rational::integer(2));
    }

    #[test]
    fn named_diagnostics() {
        let zero = r#"{"k":2,"forms":[["1","0"],["0","1"],["0","0"]]}"#;
        let err = parse_arrangement_json(zero).unwrap_err();
        assert!(err.to_string().contains("zero form at index 2"), "{err}");

        let proportional = r#"{"k":2,"forms":[["1","0"],["2","0"]]}"#;
        let err = parse_arrangement_json(proportional).unwrap_err();
        assert!(err.to_string().contains("stretched"), "{err}");

        let malformed = "{\"k\":2,";
        assert!(matches!(
            parse_arrangement_json(malformed),
            Err(LoadError::Json(_))
        ));
    }

    #[test]
    fn round_trip_preserves_forms() {
        let a = Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, -2]]).unwrap();
        let text = serde_json::to_string(&simple_to_json(&a)).unwrap();
        let InputArrangement::Simple(b) = parse_arrangement_json(&text).unwrap() else {
            panic!()
        };
        assert_eq!(a, b);
    }
}
