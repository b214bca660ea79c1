//! Parsing and printing of scalar command-line values.
//!
//! Complex values are written `a+bi` or `a-bi`: `2`, `-1.5`, `2+1i`,
//! `1e-3-2e-4i`, `0.5i`, `i`. A value without a trailing `i` is real.

use gammazeta::ComplexScalar;

/// Parse a real or complex literal.
pub fn parse_complex(text: &str) -> Result<ComplexScalar, String> {
    let t = text.trim();
    let bad = || {
        format!("cannot parse {text:?} as a number (expected forms: 2, -1.5, 2+1i, 1e-3-2e-4i)")
    };
    if t.is_empty() {
        return Err(bad());
    }
    if !t.ends_with('i') {
        return t
            .parse::<f64>()
            .map(|re| ComplexScalar::new(re, 0.0))
            .map_err(|_| bad());
    }
    let body = &t[..t.len() - 1];
    // Split at the sign separating the real part from the imaginary part:
    // the last +/- that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    for idx in (1..bytes.len()).rev() {
        let ch = bytes[idx];
        if (ch == b'+' || ch == b'-') && bytes[idx - 1] != b'e' && bytes[idx - 1] != b'E' {
            let re: f64 = body[..idx].parse().map_err(|_| bad())?;
            let imag = &body[idx..];
            let im: f64 = match imag {
                "+" => 1.0,
                "-" => -1.0,
                _ => imag.parse().map_err(|_| bad())?,
            };
            return Ok(ComplexScalar::new(re, im));
        }
    }
    // No separator: the whole body is the imaginary coefficient.
    let im: f64 = match body {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => body.parse().map_err(|_| bad())?,
    };
    Ok(ComplexScalar::new(0.0, im))
}

/// Shortest round-trip rendering, `a` for real values and `a+bi` otherwise.
pub fn format_complex(v: ComplexScalar) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im.is_sign_negative() {
        format!("{}-{}i", v.re, -v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_real_forms() {
        assert_eq!(parse_complex("2").unwrap(), ComplexScalar::new(2.0, 0.0));
        assert_eq!(
            parse_complex("-1.5").unwrap(),
            ComplexScalar::new(-1.5, 0.0)
        );
        assert_eq!(
            parse_complex(" 1e-3 ").unwrap(),
            ComplexScalar::new(1e-3, 0.0)
        );
    }

    #[test]
    fn parses_complex_forms() {
        assert_eq!(parse_complex("2+1i").unwrap(), ComplexScalar::new(2.0, 1.0));
        assert_eq!(
            parse_complex("2-1.5i").unwrap(),
            ComplexScalar::new(2.0, -1.5)
        );
        assert_eq!(
            parse_complex("-0.5-2i").unwrap(),
            ComplexScalar::new(-0.5, -2.0)
        );
        assert_eq!(
            parse_complex("1e-3+2e-4i").unwrap(),
            ComplexScalar::new(1e-3, 2e-4)
        );
        assert_eq!(parse_complex("3i").unwrap(), ComplexScalar::new(0.0, 3.0));
        assert_eq!(parse_complex("i").unwrap(), ComplexScalar::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), ComplexScalar::new(0.0, -1.0));
        assert_eq!(parse_complex("2+i").unwrap(), ComplexScalar::new(2.0, 1.0));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "abc", "2+", "1+2j", "2++3i", "1i2", "--help"] {
            assert!(parse_complex(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn formats_round_trip() {
        for v in [
            ComplexScalar::new(1.6449340668482264, 0.0),
            ComplexScalar::new(-2.5, 0.125),
            ComplexScalar::new(0.0, -3.75),
        ] {
            let shown = format_complex(v);
            assert_eq!(parse_complex(&shown).unwrap(), v, "through {shown:?}");
        }
    }
}
