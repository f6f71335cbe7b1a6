//! Text form of polynomials: integer or rational coefficients, one variable
//! (`q`, `X`, or `r`), operators `+ - * ^`. Whitespace is insignificant.
//! Example: `5*q^4+12*q^3+2*q^2+3*q+14`.

use super::RatPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const VARS: [char; 3] = ['q', 'X', 'r'];

/// Parse a polynomial; returns the poly and the variable letter that occurred
/// (if any). Mixing different variable letters in one polynomial is an error.
pub fn parse_poly(input: &str) -> Result<(RatPoly, Option<char>)> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bytes: Vec<char> = s.chars().collect();
    let mut pos = 0usize;
    let mut var_seen: Option<char> = None;
    let mut acc = RatPoly::zero();

    fn read_uint(bytes: &[char], pos: &mut usize) -> Option<BigInt> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        let digits: String = bytes[start..*pos].iter().collect();
        Some(digits.parse().expect("digits parse"))
    }

    while pos < bytes.len() {
        let mut negative = false;
        while pos < bytes.len() && (bytes[pos] == '+' || bytes[pos] == '-') {
            if bytes[pos] == '-' {
                negative = !negative;
            }
            pos += 1;
        }
        if pos >= bytes.len() {
            return Err(Error::Parse("trailing sign".into()));
        }
        // coefficient
        let mut coeff = BigRational::one();
        let mut have_coeff = false;
        if let Some(n) = read_uint(&bytes, &mut pos) {
            have_coeff = true;
            let mut c = BigRational::from_integer(n);
            if pos < bytes.len() && bytes[pos] == '/' {
                pos += 1;
                let d = read_uint(&bytes, &mut pos)
                    .ok_or_else(|| Error::Parse("missing denominator".into()))?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                c /= BigRational::from_integer(d);
            }
            coeff = c;
        }
        // optional '*' then variable
        let mut exp = 0usize;
        if pos < bytes.len() && (bytes[pos] == '*' || VARS.contains(&bytes[pos])) {
            if bytes[pos] == '*' {
                pos += 1;
            } else if have_coeff {
                // implicit product like `2q`
            }
            if pos >= bytes.len() || !VARS.contains(&bytes[pos]) {
                return Err(Error::Parse(format!("expected variable at position {pos}")));
            }
            let v = bytes[pos];
            match var_seen {
                None => var_seen = Some(v),
                Some(prev) if prev != v => {
                    return Err(Error::Parse(format!("mixed variables `{prev}` and `{v}`")))
                }
                _ => {}
            }
            pos += 1;
            exp = 1;
            if pos < bytes.len() && bytes[pos] == '^' {
                pos += 1;
                let e = read_uint(&bytes, &mut pos)
                    .ok_or_else(|| Error::Parse("missing exponent".into()))?;
                exp = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            }
        } else if !have_coeff {
            return Err(Error::Parse(format!("unexpected character at position {pos}")));
        }
        if negative {
            coeff = -coeff;
        }
        let mut term = vec![BigRational::zero(); exp + 1];
        term[exp] = coeff;
        acc = acc.add(&RatPoly::new(term));
    }
    Ok((acc, var_seen))
}

/// Render with explicit `*` and `^`, parseable back by [`parse_poly`].
pub fn format_rat_poly(p: &RatPoly, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = if c.numer().sign() == num_bigint::Sign::Minus { -c } else { c.clone() };
        let neg = c.numer().sign() == num_bigint::Sign::Minus;
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { "-" } else { "+" });
        }
        let coeff_one = mag.is_one();
        if k == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !coeff_one {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push(var);
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    out
}

/// Integer-poly convenience wrapper around [`format_rat_poly`].
pub fn format_poly(p: &super::IntPoly, var: char) -> String {
    format_rat_poly(&p.to_rat(), var)
}
