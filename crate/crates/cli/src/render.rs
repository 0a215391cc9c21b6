//! Stable text rendering: floats at 17 significant digits in scientific
//! notation, booleans as 0/1, LF line endings. Identical configs produce
//! byte-identical output.

/// 17-significant-digit scientific rendering (one leading digit plus 16
/// after the point). Negative zero is normalized away.
pub fn g17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// CSV boolean cell.
pub fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}
