//! The algebra definition text format and the small expression grammars
//! used on the command line.
//!
//! An algebra file looks like
//!
//! ```text
//! algebra sl2
//! basis e h f
//! bracket [e,f] = h
//! bracket [h,e] = 2e
//! bracket [h,f] = -2f
//! grade e = (1)
//! grade h = (0)
//! grade f = (-1)
//! ```
//!
//! Unspecified brackets are zero. Coefficients are integers or `p/q`
//! fractions juxtaposed with the basis symbol (`2e - 1/3h + f`). `grade`
//! lines are optional but must cover every basis symbol when present.
//! Blank lines and `#` comments are allowed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::grading::Grading;
use crate::lie::{LieAlgebra, Vector};
use crate::scalar::Scalar;
use crate::uea::NCPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Parse an algebra file into the algebra and its optional grading.
pub fn parse_algebra(text: &str) -> Result<(LieAlgebra, Option<Grading>), ParseError> {
    let mut name: Option<String> = None;
    let mut basis: Vec<String> = Vec::new();
    let mut brackets: Vec<(usize, usize, Vector)> = Vec::new();
    let mut grades: Vec<(usize, Vec<i64>, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        match keyword {
            "algebra" => {
                if name.is_some() {
                    return err(line, 1, "duplicate algebra line");
                }
                if rest.is_empty() {
                    return err(line, 1, "algebra line needs a name");
                }
                name = Some(rest.to_string());
            }
            "basis" => {
                if !basis.is_empty() {
                    return err(line, 1, "duplicate basis line");
                }
                for sym in rest.split_whitespace() {
                    if basis.iter().any(|s| s == sym) {
                        return err(line, 1, format!("repeated basis symbol '{}'", sym));
                    }
                    if !is_symbol(sym) {
                        return err(line, 1, format!("bad basis symbol '{}'", sym));
                    }
                    basis.push(sym.to_string());
                }
                if basis.is_empty() {
                    return err(line, 1, "basis line needs at least one symbol");
                }
            }
            "bracket" => {
                if basis.is_empty() {
                    return err(line, 1, "bracket before basis");
                }
                let (pair, rhs) = match rest.split_once('=') {
                    Some((p, r)) => (p.trim(), r.trim()),
                    None => return err(line, 1, "bracket line needs '='"),
                };
                let inner = pair
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or(ParseError {
                        line,
                        column: 1,
                        message: "bracket pair must look like [a,b]".into(),
                    })?;
                let (a, b) = inner.split_once(',').ok_or(ParseError {
                    line,
                    column: 1,
                    message: "bracket pair must look like [a,b]".into(),
                })?;
                let i = lookup(&basis, a.trim(), line)?;
                let j = lookup(&basis, b.trim(), line)?;
                if i == j {
                    return err(line, 1, "bracket of a symbol with itself is zero");
                }
                let v = parse_combination_of(rhs, &basis, line)?;
                if i < j {
                    brackets.push((i, j, v));
                } else {
                    brackets.push((j, i, v.iter().map(|c| -c).collect()));
                }
            }
            "grade" => {
                if basis.is_empty() {
                    return err(line, 1, "grade before basis");
                }
                let (sym, rhs) = match rest.split_once('=') {
                    Some((s, r)) => (s.trim(), r.trim()),
                    None => return err(line, 1, "grade line needs '='"),
                };
                let i = lookup(&basis, sym, line)?;
                let inner = rhs
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or(ParseError {
                        line,
                        column: 1,
                        message: "grade must look like (c1,...,cn)".into(),
                    })?;
                let mut deg = Vec::new();
                for part in inner.split(',') {
                    match part.trim().parse::<i64>() {
                        Ok(c) => deg.push(c),
                        Err(_) => return err(line, 1, format!("bad integer '{}'", part.trim())),
                    }
                }
                grades.push((i, deg, line));
            }
            other => return err(line, 1, format!("unknown keyword '{}'", other)),
        }
    }
    let name = name.ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing algebra line".into(),
    })?;
    if basis.is_empty() {
        return err(1, 1, "missing basis line");
    }
    let refs: Vec<&str> = basis.iter().map(|s| s.as_str()).collect();
    let algebra = LieAlgebra::new(&name, &refs, &brackets);
    let grading = if grades.is_empty() {
        None
    } else {
        let rank = grades[0].1.len();
        let mut degrees: Vec<Option<Vec<i64>>> = vec![None; basis.len()];
        for (i, deg, line) in grades {
            if deg.len() != rank {
                return err(line, 1, "grade vectors must share one rank");
            }
            if degrees[i].is_some() {
                return err(line, 1, format!("duplicate grade for '{}'", basis[i]));
            }
            degrees[i] = Some(deg);
        }
        let mut out = Vec::with_capacity(basis.len());
        for (i, d) in degrees.into_iter().enumerate() {
            match d {
                Some(d) => out.push(d),
                None => {
                    return err(
                        1,
                        1,
                        format!("grade lines present but '{}' has none", basis[i]),
                    )
                }
            }
        }
        Some(Grading::new(rank, out))
    };
    Ok((algebra, grading))
}

fn lookup(basis: &[String], sym: &str, line: usize) -> Result<usize, ParseError> {
    basis
        .iter()
        .position(|s| s == sym)
        .ok_or(ParseError {
            line,
            column: 1,
            message: format!("unknown symbol '{}'", sym),
        })
}

fn is_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `2e - 1/3h + f` over the given basis, producing a coordinate vector;
/// `0` is the zero vector.
pub fn parse_combination_of(
    text: &str,
    basis: &[String],
    line: usize,
) -> Result<Vector, ParseError> {
    let terms = parse_combination_terms(text, line)?;
    let mut v = vec![Scalar::zero(); basis.len()];
    for (coeff, sym, col) in terms {
        match sym {
            None => {
                if !coeff.is_zero() {
                    return err(line, col, "constant term in a linear combination");
                }
            }
            Some(sym) => {
                let i = basis.iter().position(|s| *s == sym).ok_or(ParseError {
                    line,
                    column: col,
                    message: format!("unknown symbol '{}'", sym),
                })?;
                v[i] += coeff;
            }
        }
    }
    Ok(v)
}

/// Split a combination into (coefficient, optional symbol, column) terms.
fn parse_combination_terms(
    text: &str,
    line: usize,
) -> Result<Vec<(Scalar, Option<String>, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut terms = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return err(line, pos + 1, "empty expression");
    }
    let mut first = true;
    while pos < chars.len() {
        let col = pos + 1;
        let mut sign = Scalar::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return err(line, col, "expected '+' or '-' between terms");
        }
        first = false;
        let (coeff, advanced) = take_rational(&chars, &mut pos);
        skip_ws(&mut pos);
        let sym = take_symbol(&chars, &mut pos);
        if !advanced && sym.is_none() {
            return err(line, pos + 1, "expected a coefficient or symbol");
        }
        terms.push((sign * coeff, sym, col));
        skip_ws(&mut pos);
    }
    Ok(terms)
}

fn take_rational(chars: &[char], pos: &mut usize) -> (Scalar, bool) {
    let start = *pos;
    let mut digits = String::new();
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        digits.push(chars[*pos]);
        *pos += 1;
    }
    if digits.is_empty() {
        return (Scalar::one(), false);
    }
    let numer: BigInt = digits.parse().unwrap();
    if *pos < chars.len() && chars[*pos] == '/' {
        let save = *pos;
        *pos += 1;
        let mut den = String::new();
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            den.push(chars[*pos]);
            *pos += 1;
        }
        if den.is_empty() {
            *pos = save;
        } else {
            let d: BigInt = den.parse().unwrap();
            if d.is_zero() {
                // surface as 0/0 -> caller rejects via zero denominator
                *pos = start;
                return (Scalar::one(), false);
            }
            return (Scalar::new(numer, d), true);
        }
    }
    (Scalar::from_integer(numer), true)
}

fn take_symbol(chars: &[char], pos: &mut usize) -> Option<String> {
    if *pos >= chars.len() || !chars[*pos].is_ascii_alphabetic() {
        return None;
    }
    let mut s = String::new();
    while *pos < chars.len() && (chars[*pos].is_ascii_alphanumeric() || chars[*pos] == '_') {
        s.push(chars[*pos]);
        *pos += 1;
    }
    Some(s)
}

/// Product expressions for the enveloping algebra: terms joined by +/-,
/// each term a `*`-separated product of rationals, symbols and powers
/// `sym^k`, e.g. `2*e^2*f - 1/3*h`.
pub fn parse_expression(text: &str, l: &LieAlgebra) -> Result<NCPoly, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let dim = l.dim();
    let mut out = NCPoly::zero(dim);
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return err(1, pos + 1, "empty expression");
    }
    let mut first = true;
    while pos < chars.len() {
        let mut sign = Scalar::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return err(1, pos + 1, "expected '+' or '-' between terms");
        }
        first = false;
        // one term: factors separated by '*'
        let mut coeff = sign;
        let mut word: Vec<u8> = Vec::new();
        loop {
            skip_ws(&mut pos);
            let (c, got_number) = take_rational(&chars, &mut pos);
            if got_number {
                coeff *= c;
            } else if let Some(sym) = take_symbol(&chars, &mut pos) {
                let i = l.basis_index(&sym).ok_or(ParseError {
                    line: 1,
                    column: pos,
                    message: format!("unknown symbol '{}'", sym),
                })?;
                let mut exp = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let (e, ok) = take_rational(&chars, &mut pos);
                    if !ok || !e.denom().is_one() {
                        return err(1, pos + 1, "power must be a nonnegative integer");
                    }
                    exp = e
                        .numer()
                        .try_into()
                        .map_err(|_| ParseError {
                            line: 1,
                            column: pos,
                            message: "power out of range".into(),
                        })?;
                }
                for _ in 0..exp {
                    word.push(i as u8);
                }
            } else {
                return err(1, pos + 1, "expected a factor");
            }
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        out.add_term(word, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    const SL2: &str = "algebra sl2\nbasis e h f\nbracket [e,f] = h\nbracket [h,e] = 2e\nbracket [h,f] = -2f\ngrade e = (1)\ngrade h = (0)\ngrade f = (-1)\n";

    #[test]
    fn parses_the_sl2_file() {
        let (l, g) = parse_algebra(SL2).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.check_axioms().passed());
        assert_eq!(l.bracket(&l.basis_vector(0), &l.basis_vector(2)).unwrap(), l.basis_vector(1));
        let g = g.unwrap();
        assert!(g.respects(&l));
    }

    #[test]
    fn reports_unknown_symbols_with_location() {
        let text = "algebra t\nbasis a b\nbracket [a,c] = b\n";
        let e = parse_algebra(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("'c'"));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_algebra("algebra x\nbasis a b\nbracket [a,b] = 2q\n").is_err());
        assert!(parse_algebra("basis a\n").is_err());
        assert!(parse_algebra("algebra x\nbracket [a,b] = a\n").is_err());
        assert!(parse_algebra("algebra x\nbasis a b\nfrob [a,b] = a\n").is_err());
        assert!(parse_algebra("algebra x\nbasis a b\ngrade a = (1)\n").is_err());
    }

    #[test]
    fn combination_grammar() {
        let basis: Vec<String> = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
        let v = parse_combination_of("2e - 1/3h + f", &basis, 1).unwrap();
        assert_eq!(v, vec![rat(2), ratio(-1, 3), rat(1)]);
        let zero = parse_combination_of("0", &basis, 1).unwrap();
        assert_eq!(zero, vec![rat(0), rat(0), rat(0)]);
        assert!(parse_combination_of("2e + 5", &basis, 1).is_err());
        assert!(parse_combination_of("e f", &basis, 1).is_err());
    }

    #[test]
    fn expression_grammar() {
        let l = crate::algebras::sl2();
        let p = parse_expression("f*e*e", &l).unwrap();
        assert_eq!(p, NCPoly::word(3, &[2, 0, 0]));
        let q = parse_expression("2*e^2*f - 1/3*h", &l).unwrap();
        assert_eq!(q.terms().len(), 2);
        assert_eq!(q.terms().get(&vec![0, 0, 2][..].to_vec()), Some(&rat(2)));
        assert_eq!(q.terms().get(&vec![1][..].to_vec()), Some(&ratio(-1, 3)));
        assert!(parse_expression("e**f", &l).is_err());
        assert!(parse_expression("q", &l).is_err());
        let unit = parse_expression("1", &l).unwrap();
        assert_eq!(unit, NCPoly::unit(3));
    }
}
