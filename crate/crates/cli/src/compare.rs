//! Tolerance comparison for golden files: numeric tokens within a small
//! absolute tolerance, everything else byte-equal. Exists because last-ulp
//! differences between math libraries can perturb full-precision output.

use crate::error::CliError;

/// Absolute tolerance of the `--tolerance-compare` mode.
pub const COMPARE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Text(String),
}

/// Splits a line into numeric and literal tokens. A numeric token is the
/// longest slice matching [-+]?digits[.digits][e[-+]digits].
fn tokenize(line: &str) -> Vec<Token> {
    let bytes = line.as_bytes();
    let mut tokens = Vec::new();
    let mut text = String::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let starts_number = c.is_ascii_digit()
            || ((c == '-' || c == '+') && bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit()));
        if starts_number {
            let start = i;
            if c == '-' || c == '+' {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'.' {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < bytes.len()
                && (bytes[i] == b'e' || bytes[i] == b'E')
                && bytes
                    .get(i + 1)
                    .is_some_and(|&b| b.is_ascii_digit() || b == b'-' || b == b'+')
            {
                i += 2;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if !text.is_empty() {
                tokens.push(Token::Text(core::mem::take(&mut text)));
            }
            let number: f64 = line[start..i].parse().expect("scanned a valid float");
            tokens.push(Token::Number(number));
        } else {
            text.push(c);
            i += 1;
        }
    }
    if !text.is_empty() {
        tokens.push(Token::Text(text));
    }
    tokens
}

/// Compares two renderings. `Ok(())` when all literal text matches exactly
/// and every number pair agrees within [`COMPARE_TOL`] absolutely.
pub fn tolerance_compare(actual: &str, reference: &str) -> Result<(), CliError> {
    let mismatch =
        |line: usize, msg: String| Err(CliError::CompareMismatch(format!("line {line}: {msg}")));

    let a_lines: Vec<&str> = actual.lines().collect();
    let r_lines: Vec<&str> = reference.lines().collect();
    if a_lines.len() != r_lines.len() {
        return Err(CliError::CompareMismatch(format!(
            "line counts differ: {} vs {} in reference",
            a_lines.len(),
            r_lines.len()
        )));
    }

    for (idx, (a, r)) in a_lines.iter().zip(&r_lines).enumerate() {
        let line = idx + 1;
        let (at, rt) = (tokenize(a), tokenize(r));
        if at.len() != rt.len() {
            return mismatch(line, format!("token counts differ: {a:?} vs {r:?}"));
        }
        for (ta, tr) in at.iter().zip(&rt) {
            match (ta, tr) {
                (Token::Text(x), Token::Text(y)) if x == y => {}
                (Token::Number(x), Token::Number(y)) if (x - y).abs() <= COMPARE_TOL => {}
                (Token::Number(x), Token::Number(y)) => {
                    return mismatch(
                        line,
                        format!("{x} vs {y} differ by {:e} > {COMPARE_TOL:e}", (x - y).abs()),
                    )
                }
                _ => return mismatch(line, format!("structure differs: {a:?} vs {r:?}")),
            }
        }
    }
    Ok(())
}
