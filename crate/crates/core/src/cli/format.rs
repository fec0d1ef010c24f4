use serde_json::Value;

/// Significant digits in machine-readable output.
pub const JSON_DIGITS: usize = 12;
/// Significant digits in human-readable output.
pub const HUMAN_DIGITS: usize = 6;

/// `x` rounded to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// JSON number rounded to 12 significant digits; non-finite values become null.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x, JSON_DIGITS)).map_or(Value::Null, Value::Number)
}

/// Pretty JSON with sorted keys. Parsing the output and printing it again
/// yields the same bytes.
pub fn canonical_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

pub fn human(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let r = round_sig(x, HUMAN_DIGITS);
    if r == 0.0 || (1e-4..1e9).contains(&r.abs()) {
        r.to_string()
    } else {
        format!("{:.*e}", HUMAN_DIGITS - 1, x)
    }
}
