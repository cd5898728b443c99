//! State files and deterministic JSON output.
//!
//! A state file is `{"n": 4, "amplitudes": [[re, im], ...]}` with 16
//! amplitude pairs in decimal index order (8 pairs with `"n": 3`). Each
//! coordinate is either a JSON number or a rational string `"p/q"`; both
//! forms are accepted in both modes, so files written by the exact mode
//! can be consumed by the float mode and vice versa.

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};
use crate::state::{FourQubitState, ThreeQubitState};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::Value;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

#[derive(Deserialize)]
struct RawStateFile {
    n: u8,
    amplitudes: Vec<[RawCoord; 2]>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoord {
    Num(f64),
    Frac(String),
}

fn coord_to_rational(coord: &RawCoord) -> Result<BigRational> {
    match coord {
        RawCoord::Num(v) => BigRational::from_float(*v).ok_or(Error::NonFiniteEmbedding(*v)),
        RawCoord::Frac(s) => BigRational::from_str(s.trim())
            .map_err(|e| Error::InvalidStateFile(format!("bad rational {s:?}: {e}"))),
    }
}

fn coord_to_f64(coord: &RawCoord) -> Result<f64> {
    match coord {
        RawCoord::Num(v) => Ok(*v),
        RawCoord::Frac(s) => {
            let q = BigRational::from_str(s.trim())
                .map_err(|e| Error::InvalidStateFile(format!("bad rational {s:?}: {e}")))?;
            q.to_f64()
                .ok_or_else(|| Error::InvalidStateFile(format!("rational {s:?} has no float value")))
        }
    }
}

/// A parsed state file: either a four-qubit or a three-qubit state.
#[derive(Clone, Debug)]
pub enum StateData<T: Scalar> {
    Four(FourQubitState<T>),
    Three(ThreeQubitState<T>),
}

impl<T: Scalar> StateData<T> {
    pub fn qubit_count(&self) -> u8 {
        match self {
            StateData::Four(_) => 4,
            StateData::Three(_) => 3,
        }
    }
}

fn parse_raw(text: &str) -> Result<RawStateFile> {
    let raw: RawStateFile = serde_json::from_str(text)?;
    let expected = match raw.n {
        4 => 16,
        3 => 8,
        other => {
            return Err(Error::InvalidStateFile(format!(
                "unsupported qubit count n = {other} (expected 3 or 4)"
            )))
        }
    };
    if raw.amplitudes.len() != expected {
        return Err(Error::AmplitudeCount {
            expected,
            got: raw.amplitudes.len(),
        });
    }
    Ok(raw)
}

/// Parses a state file in float mode.
pub fn parse_state_json_float(text: &str) -> Result<StateData<Complex64>> {
    let raw = parse_raw(text)?;
    let mut amps = Vec::with_capacity(raw.amplitudes.len());
    for pair in &raw.amplitudes {
        amps.push(Complex64::new(coord_to_f64(&pair[0])?, coord_to_f64(&pair[1])?));
    }
    Ok(match raw.n {
        4 => StateData::Four(FourQubitState::from_amplitudes(
            amps.try_into().expect("length checked"),
        )?),
        _ => StateData::Three(ThreeQubitState::from_amplitudes(
            amps.try_into().expect("length checked"),
        )?),
    })
}

/// Parses a state file in exact mode. JSON numbers embed losslessly (every
/// finite double is a rational); `"p/q"` strings are parsed exactly.
pub fn parse_state_json_exact(text: &str) -> Result<StateData<GaussianRational>> {
    let raw = parse_raw(text)?;
    let mut amps = Vec::with_capacity(raw.amplitudes.len());
    for pair in &raw.amplitudes {
        amps.push(GaussianRational::new(
            coord_to_rational(&pair[0])?,
            coord_to_rational(&pair[1])?,
        ));
    }
    Ok(match raw.n {
        4 => StateData::Four(FourQubitState::from_amplitudes(
            amps.try_into().expect("length checked"),
        )?),
        _ => StateData::Three(ThreeQubitState::from_amplitudes(
            amps.try_into().expect("length checked"),
        )?),
    })
}

/// Reads and parses a state file in float mode.
pub fn read_state_file_float(path: &Path) -> Result<StateData<Complex64>> {
    parse_state_json_float(&std::fs::read_to_string(path)?)
}

/// Reads and parses a state file in exact mode.
pub fn read_state_file_exact(path: &Path) -> Result<StateData<GaussianRational>> {
    parse_state_json_exact(&std::fs::read_to_string(path)?)
}

/// The file-format JSON value for a four-qubit state.
pub fn four_qubit_json<T: Scalar>(state: &FourQubitState<T>) -> Value {
    serde_json::json!({
        "n": 4,
        "amplitudes": state.amplitudes().iter().map(|a| a.to_json()).collect::<Vec<_>>(),
    })
}

/// The file-format JSON value for a three-qubit state.
pub fn three_qubit_json<T: Scalar>(state: &ThreeQubitState<T>) -> Value {
    serde_json::json!({
        "n": 3,
        "amplitudes": state.amplitudes().iter().map(|a| a.to_json()).collect::<Vec<_>>(),
    })
}

/// Pretty formatter that writes every float with 17 significant digits
/// (`{:.16e}`), so output is deterministic and round-trips exactly.
struct SciFormatter {
    inner: PrettyFormatter<'static>,
}

impl SciFormatter {
    fn new() -> Self {
        SciFormatter {
            inner: PrettyFormatter::new(),
        }
    }
}

impl Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_array(writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object(writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object_key(writer, first)
    }

    fn end_object_key<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object_key(writer)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object_value(writer)
    }
}

/// Serializes a JSON value with sorted keys, two-space indentation, and
/// 17-significant-digit floats.
pub fn to_pretty_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter::new());
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn float_round_trip_preserves_every_bit() {
        let state = crate::state::random_state(11, true);
        let text = to_pretty_string(&four_qubit_json(&state));
        match parse_state_json_float(&text).unwrap() {
            StateData::Four(back) => assert_eq!(back.amplitudes(), state.amplitudes()),
            _ => panic!("expected four-qubit state"),
        }
    }

    #[test]
    fn exact_round_trip_is_lossless() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let state = crate::state::random_rational_state_with(&mut rng);
        let text = to_pretty_string(&four_qubit_json(&state));
        match parse_state_json_exact(&text).unwrap() {
            StateData::Four(back) => assert_eq!(back.amplitudes(), state.amplitudes()),
            _ => panic!("expected four-qubit state"),
        }
    }

    #[test]
    fn float_mode_reads_rational_strings() {
        let text = r#"{"n": 3, "amplitudes": [["1/2", 0], [0, "-3/4"], [0,0], [0,0], [0,0], [0,0], [0,0], [1, 0]]}"#;
        match parse_state_json_float(text).unwrap() {
            StateData::Three(state) => {
                assert_eq!(*state.amplitude(0), Complex64::new(0.5, 0.0));
                assert_eq!(*state.amplitude(1), Complex64::new(0.0, -0.75));
            }
            _ => panic!("expected three-qubit state"),
        }
    }

    #[test]
    fn exact_mode_embeds_json_numbers_losslessly() {
        let text = r#"{"n": 3, "amplitudes": [[0.375, 0], [0,0], [0,0], [0,0], [0,0], [0,0], [0,0], [0,0]]}"#;
        match parse_state_json_exact(text).unwrap() {
            StateData::Three(state) => {
                assert_eq!(*state.amplitude(0), GaussianRational::ratio(3, 8));
                assert!(state.amplitude(1).is_zero());
            }
            _ => panic!("expected three-qubit state"),
        }
    }

    #[test]
    fn wrong_length_and_wrong_n_are_rejected() {
        let short = r#"{"n": 4, "amplitudes": [[1, 0]]}"#;
        assert!(matches!(
            parse_state_json_float(short),
            Err(Error::AmplitudeCount { expected: 16, got: 1 })
        ));
        let bad_n = r#"{"n": 5, "amplitudes": []}"#;
        assert!(matches!(
            parse_state_json_float(bad_n),
            Err(Error::InvalidStateFile(_))
        ));
        assert!(parse_state_json_float("not json").is_err());
        let bad_frac = r#"{"n": 3, "amplitudes": [["x/y", 0], [0,0], [0,0], [0,0], [0,0], [0,0], [0,0], [0,0]]}"#;
        assert!(matches!(
            parse_state_json_exact(bad_frac),
            Err(Error::InvalidStateFile(_))
        ));
    }

    #[test]
    fn pretty_floats_use_scientific_17_digit_form() {
        let v = serde_json::json!({"x": 0.1});
        let text = to_pretty_string(&v);
        assert!(text.contains("1.0000000000000001e-1"), "{text}");
    }
}
