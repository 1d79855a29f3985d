//! Number formatting shared by the CSV writers.

/// Formats `v` with 10 significant digits: fixed notation for magnitudes in
/// `[1e-5, 1e10)`, scientific otherwise.
pub fn sig10(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.9e}");
    // exponent after rounding to 10 digits, so 9.9999999999 becomes 1e1
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..10).contains(&exp) {
        let decimals = (9 - exp) as usize;
        format!("{v:.decimals$}")
    } else {
        sci
    }
}
