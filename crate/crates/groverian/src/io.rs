//! The on-disk state format: `{"n": 2, "d": 3, "amps": [[re, im], ...]}` with
//! amplitudes in flat index order, party 0 most significant.

use std::fs;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::state::{NormPolicy, PureState};

#[derive(Serialize, Deserialize)]
struct StateFile {
    n: usize,
    d: usize,
    amps: Vec<[f64; 2]>,
}

/// Parse a state document. Validation follows `PureState::new`, so the
/// policy decides whether slightly off-norm files are rejected or rescaled.
pub fn state_from_json(text: &str, policy: NormPolicy) -> Result<PureState> {
    let file: StateFile = serde_json::from_str(text)?;
    let amps = file
        .amps
        .iter()
        .map(|[re, im]| C64::new(*re, *im))
        .collect();
    PureState::new(file.n, file.d, amps, policy)
}

pub fn read_state_file(path: &Path, policy: NormPolicy) -> Result<PureState> {
    let text = fs::read_to_string(path)?;
    state_from_json(&text, policy)
}

pub fn state_to_json(state: &PureState) -> String {
    let file = StateFile {
        n: state.n(),
        d: state.d(),
        amps: state.amps().iter().map(|a| [a.re, a.im]).collect(),
    };
    serde_json::to_string(&file).expect("state serializes")
}

pub fn write_state_file(path: &Path, state: &PureState) -> Result<()> {
    fs::write(path, state_to_json(state))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn round_trip() {
        let s = PureState::uniform(2, 3).unwrap();
        let parsed = state_from_json(&state_to_json(&s), NormPolicy::Strict).unwrap();
        assert_eq!(parsed.n(), 2);
        assert_eq!(parsed.d(), 3);
        for (a, b) in s.amps().iter().zip(parsed.amps()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(matches!(
            state_from_json("{\"n\": 2", NormPolicy::Strict),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            state_from_json("{\"n\":1,\"d\":3}", NormPolicy::Strict),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn wrong_amplitude_count_is_an_error() {
        let text = r#"{"n":2,"d":3,"amps":[[1.0,0.0]]}"#;
        assert!(matches!(
            state_from_json(text, NormPolicy::Strict),
            Err(Error::AmplitudeCount {
                expected: 9,
                got: 1
            })
        ));
    }

    #[test]
    fn off_norm_file_needs_the_normalize_policy() {
        // eight-digit truncation of 1/3: norm falls 5e-9 short
        let amps: Vec<String> = (0..9).map(|_| "[0.33333333,0.0]".to_string()).collect();
        let text = format!("{{\"n\":2,\"d\":3,\"amps\":[{}]}}", amps.join(","));
        assert!(matches!(
            state_from_json(&text, NormPolicy::Strict),
            Err(Error::NotNormalized { .. })
        ));
        let s = state_from_json(&text, NormPolicy::Normalize).unwrap();
        assert!((s.amp(0).re - 1.0 / 3.0).abs() < 1e-8);
        let norm: f64 = s.amps().iter().map(|a| a.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
