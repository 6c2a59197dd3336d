//! Number formatting shared by the CSV and JSON writers.

/// Rounds to 12 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    let r: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Plain decimal with 12 significant digits and no trailing zeros.
pub fn fmt_float(v: f64) -> String {
    format!("{}", round_sig(v))
}

/// JSON number rounded to 12 significant digits.
pub fn json_float(v: f64) -> serde_json::Value {
    serde_json::Number::from_f64(round_sig(v))
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(fmt_float(1.75), "1.75");
        assert_eq!(fmt_float(1.5), "1.5");
        assert_eq!(fmt_float(0.853_553_390_593_273_7), "0.853553390593");
        assert_eq!(fmt_float(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_float(-0.0), "0");
        assert_eq!(fmt_float(-1e-17), "-0.00000000000000001");
        assert_eq!(json_float(0.25).to_string(), "0.25");
    }

    #[test]
    fn round_trip_within_tolerance() {
        for v in [
            std::f64::consts::TAU,
            1.0 / 3.0,
            -2.5e-3,
            123.456_789_012_345,
        ] {
            let back: f64 = fmt_float(v).parse().unwrap();
            assert!((back - v).abs() <= 1e-10 * v.abs().max(1.0));
        }
    }
}
