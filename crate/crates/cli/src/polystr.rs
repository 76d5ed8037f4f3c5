//! Polynomial strings: integer coefficients, terms by descending degree,
//! explicit `*` and `^`, e.g. `2*t^2 - 1`. Printing is `IntPolynomial`'s
//! `Display`; this module parses the same grammar back.

use num_bigint::BigInt;
use qpencil_core::poly::IntPolynomial;

/// Parses a polynomial in the variable `t`. Whitespace is ignored; terms
/// may come in any order and repeated degrees are summed.
pub fn parse_poly(s: &str) -> Result<IntPolynomial, String> {
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i > 0 {
            return Err(format!("expected '+' or '-' at offset {i}"));
        }
        let end = src[i..].find(['+', '-']).map_or(src.len(), |k| i + k);
        let (c, d) = parse_term(&src[i..end]).map_err(|m| format!("{m} at offset {i}"))?;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigInt::from(0));
        }
        coeffs[d] += c * sign;
        i = end;
    }
    Ok(IntPolynomial::new(coeffs))
}

fn parse_term(term: &str) -> Result<(BigInt, usize), String> {
    let number = |s: &str| s.parse::<BigInt>().map_err(|_| format!("bad coefficient {s:?}"));
    let (coef, mono) = match term.split_once('*') {
        Some((c, m)) => (number(c)?, m),
        None if term.starts_with('t') => (BigInt::from(1), term),
        None => return Ok((number(term)?, 0)),
    };
    let rest = mono.strip_prefix('t').ok_or_else(|| format!("expected t in {term:?}"))?;
    let deg = match rest.strip_prefix('^') {
        Some(k) => k.parse::<usize>().map_err(|_| format!("bad exponent in {term:?}"))?,
        None if rest.is_empty() => 1,
        None => return Err(format!("unexpected {rest:?}")),
    };
    Ok((coef, deg))
}
