//! Parsing of user-facing algebra descriptors and exact element literals.
//!
//! Descriptors name a cubic Jordan algebra in the notation used throughout
//! the library: `R`, `Gamma_{m,n}`, `R+Gamma_{m,n}`, `J3^A` and
//! `J_{1,2}^A`, where `A` ranges over the seven composition algebras
//! (`R, C, H, O` and the split `C_s, H_s, O_s`).  Braces, parentheses and
//! whitespace are all optional, so `J3^Os`, `Gamma(5,3)` and
//! `R + Gamma_{4,4}` parse the same as their canonical spellings.
//!
//! Elements are passed on the command line as JSON arrays whose entries are
//! integers or exact fraction strings such as `"-1/2"`; no floating point
//! is accepted, keeping the whole pipeline exact.

use std::str::FromStr;

use exlie_core::composition_algebra::CompLabel;
use exlie_core::exact_arith::Rat;
use exlie_core::jordan_core::JordanKind;

/// Parse a Jordan-algebra descriptor.  Returns `None` on anything that is
/// not a recognized algebra.
#[must_use]
pub fn parse_jordan(src: &str) -> Option<JordanKind> {
    // Normalize: drop whitespace and brace/parenthesis decoration.
    let s: String = src.chars().filter(|c| !c.is_whitespace() && !"{}()".contains(*c)).collect();
    if s.eq_ignore_ascii_case("R") {
        return Some(JordanKind::RealField);
    }
    let lower = s.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("r+gamma_").or_else(|| lower.strip_prefix("r+gamma")) {
        let (m, n) = parse_pair(rest)?;
        return Some(JordanKind::SpinFactor { m, n });
    }
    if let Some(rest) = lower.strip_prefix("gamma_").or_else(|| lower.strip_prefix("gamma")) {
        let (m, n) = parse_pair(rest)?;
        return Some(JordanKind::Gamma { m, n });
    }
    if let Some(rest) = s.strip_prefix("J3^").or_else(|| s.strip_prefix("j3^")) {
        return Some(JordanKind::Hermitian3(CompLabel::parse(rest)?));
    }
    for prefix in ["J_1,2^", "J1,2^", "J12^", "j_1,2^", "j1,2^", "j12^"] {
        if let Some(rest) = s.strip_prefix(prefix) {
            return Some(JordanKind::Lorentzian(CompLabel::parse(rest)?));
        }
    }
    None
}

/// Parse `"m,n"` into a pair of small non-negative integers.
fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (m, n) = s.split_once(',')?;
    Some((m.parse().ok()?, n.parse().ok()?))
}

/// Parse an exact element literal: a JSON array of integers and/or fraction
/// strings, checked against the expected dimension.
pub fn parse_element(src: &str, dim: usize) -> Result<Vec<Rat>, String> {
    let value: serde_json::Value =
        serde_json::from_str(src).map_err(|e| format!("element is not valid JSON: {e}"))?;
    let arr = value.as_array().ok_or("element must be a JSON array")?;
    if arr.len() != dim {
        return Err(format!("element has {} entries, algebra has dimension {dim}", arr.len()));
    }
    arr.iter()
        .map(|v| match v {
            serde_json::Value::Number(n) => {
                let i = n.as_i64().ok_or_else(|| {
                    format!("entry {n} is not an exact integer; use a fraction string")
                })?;
                Ok(Rat::from_integer(i.into()))
            }
            serde_json::Value::String(s) => Rat::from_str(s.trim())
                .map_err(|_| format!("cannot parse {s:?} as an exact rational")),
            other => Err(format!("entry {other} must be an integer or a fraction string")),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exlie_core::exact_arith::rat;

    #[test]
    fn descriptor_spellings() {
        assert_eq!(parse_jordan("R"), Some(JordanKind::RealField));
        assert_eq!(parse_jordan("J3^Os"), Some(JordanKind::Hermitian3(CompLabel::Os)));
        assert_eq!(parse_jordan("J3^O_s"), Some(JordanKind::Hermitian3(CompLabel::Os)));
        assert_eq!(parse_jordan("Gamma_{5,3}"), Some(JordanKind::Gamma { m: 5, n: 3 }));
        assert_eq!(parse_jordan("Gamma(5,3)"), Some(JordanKind::Gamma { m: 5, n: 3 }));
        assert_eq!(parse_jordan("R + Gamma_{4,4}"), Some(JordanKind::SpinFactor { m: 4, n: 4 }));
        assert_eq!(parse_jordan("J_{1,2}^O"), Some(JordanKind::Lorentzian(CompLabel::O)));
        assert_eq!(parse_jordan("nonsense"), None);
    }

    #[test]
    fn element_literals() {
        let v = parse_element(r#"[1, "-1/2", 0]"#, 3).unwrap();
        assert_eq!(v, vec![rat(1, 1), rat(-1, 2), rat(0, 1)]);
        assert!(parse_element("[1.5]", 1).is_err());
        assert!(parse_element("[1]", 2).is_err());
    }
}
