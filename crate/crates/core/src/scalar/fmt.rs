//! Shared sum-of-terms literal grammar for exact scalars.
//!
//! A literal is a signed sum of terms such as `-1/2+i/2`, `2v/3`, `-tv/3`,
//! `w`, `0`. Each term is an optional rational coefficient followed by an
//! optional run of unit tokens (multiplied left to right, which matters for
//! quaternions) and an optional `/denominator`.

use num_traits::{One, Zero};

use super::Rational;
use crate::error::Error;

/// Parse a literal over the token alphabet provided by `token`.
pub fn parse_terms<S, F>(input: &str, token: F) -> Result<S, Error>
where
    S: Clone + Zero + One + From<Rational> + std::ops::Neg<Output = S> + std::ops::Mul<Output = S>,
    F: Fn(char) -> Option<S>,
{
    let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar literal".into()));
    }
    let mut pos = 0;
    let mut total = S::zero();
    let mut first = true;
    while pos < s.len() {
        let negative = match s[pos] {
            '-' => {
                pos += 1;
                true
            }
            '+' => {
                pos += 1;
                false
            }
            _ if first => false,
            c => return Err(Error::Parse(format!("expected sign, found `{c}` in `{input}`"))),
        };
        first = false;

        let digits = |pos: &mut usize| -> Option<i64> {
            let start = *pos;
            while *pos < s.len() && s[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == start {
                None
            } else {
                s[start..*pos].iter().collect::<String>().parse().ok()
            }
        };

        let mut numer = None;
        let mut denom: i64 = 1;
        if let Some(n) = digits(&mut pos) {
            numer = Some(n);
            if pos < s.len() && s[pos] == '/' {
                pos += 1;
                denom = digits(&mut pos)
                    .ok_or_else(|| Error::Parse(format!("missing denominator in `{input}`")))?;
            }
        }

        let mut unit: Option<S> = None;
        while pos < s.len() {
            match token(s[pos]) {
                Some(u) => {
                    unit = Some(match unit {
                        None => u,
                        Some(acc) => acc * u,
                    });
                    pos += 1;
                }
                None => break,
            }
        }
        if pos < s.len() && s[pos] == '/' {
            pos += 1;
            let d = digits(&mut pos)
                .ok_or_else(|| Error::Parse(format!("missing denominator in `{input}`")))?;
            denom = denom
                .checked_mul(d)
                .ok_or_else(|| Error::Parse(format!("denominator overflow in `{input}`")))?;
        }

        if numer.is_none() && unit.is_none() {
            return Err(Error::Parse(format!("empty term in `{input}`")));
        }
        let coeff = Rational::new(numer.unwrap_or(1), denom);
        // The coefficient is central, so it may multiply from the left even
        // over the quaternions.
        let mut term = S::from(coeff) * unit.unwrap_or_else(S::one);
        if negative {
            term = -term;
        }
        total = total + term;
    }
    Ok(total)
}

/// One rendered term of a canonical display.
pub struct Term {
    pub coeff: Rational,
    pub tokens: &'static str,
}

/// Render nonzero terms as a canonical sum; an empty list renders as `0`.
pub fn render_terms(terms: &[Term]) -> String {
    let mut out = String::new();
    for term in terms {
        if term.coeff.is_zero() {
            continue;
        }
        let negative = term.coeff.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        let mag = term.coeff.abs();
        let mut num = String::new();
        mag.key(&mut num);
        let (n, d) = match num.split_once('/') {
            Some((n, d)) => (n.to_string(), Some(d.to_string())),
            None => (num, None),
        };
        if term.tokens.is_empty() {
            out.push_str(&n);
        } else {
            if n != "1" {
                out.push_str(&n);
            }
            out.push_str(term.tokens);
        }
        if let Some(d) = d {
            out.push('/');
            out.push_str(&d);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
