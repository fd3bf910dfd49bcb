//! Text form `c_k*x^k + ... + c_1*x + c_0`. Unit coefficients are omitted on
//! non-constant terms; extension-field coefficients print as coordinate lists.

use std::fmt;

use super::{Poly, PolyError};
use crate::field::{FieldCtx, FieldElem};

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "{var}")?,
                _ => write!(f, "{c}*{var}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Parses the text form; `-` between terms and a bare `X` are accepted too.
    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<Poly, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        let mut acc = Poly::zero(ctx);
        for (negative, term) in split_terms(s)? {
            let mut t = parse_term(ctx, term)?;
            if negative {
                t = -&t;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, PolyError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let term = s[start..i].trim();
                if term.is_empty() {
                    // only a leading sign may stand without a term before it
                    if !out.is_empty() || start != 0 {
                        return Err(PolyError::Parse(format!("dangling sign in '{s}'")));
                    }
                } else {
                    out.push((negative, term));
                }
                negative = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    let term = s[start..].trim();
    if term.is_empty() {
        return Err(PolyError::Parse(format!("dangling sign in '{s}'")));
    }
    out.push((negative, term));
    Ok(out)
}

fn parse_term(ctx: &FieldCtx, term: &str) -> Result<Poly, PolyError> {
    let lower = term.replace('X', "x");
    let Some(xpos) = lower.find('x') else {
        let c = FieldElem::parse(ctx, term).map_err(|e| PolyError::Parse(e.to_string()))?;
        return Ok(Poly::constant(c));
    };
    let coeff_part = lower[..xpos].trim().trim_end_matches('*').trim();
    let var_part = lower[xpos + 1..].trim();
    let coeff = if coeff_part.is_empty() {
        ctx.one()
    } else {
        FieldElem::parse(ctx, coeff_part).map_err(|e| PolyError::Parse(e.to_string()))?
    };
    let exp = if var_part.is_empty() {
        1
    } else {
        var_part
            .strip_prefix('^')
            .and_then(|e| e.trim().parse::<usize>().ok())
            .ok_or_else(|| PolyError::Parse(format!("invalid exponent in '{term}'")))?
    };
    Ok(Poly::monomial(coeff, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_form() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(Poly::from_ints(&f3, &[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(Poly::from_ints(&f3, &[2, 1, 1]).to_string(), "x^2 + x + 2");
        assert_eq!(Poly::from_ints(&f3, &[0, 2]).to_string(), "2*x");
        assert_eq!(Poly::zero(&f3).to_string(), "0");
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(Poly::from_ints(&f5, &[2, 1]).to_string(), "x + 2");
    }

    #[test]
    fn parses_variants() {
        let f5 = FieldCtx::prime(5).unwrap();
        let expect = Poly::from_ints(&f5, &[1, 0, 3, 1]);
        for s in [
            "x^3 + 3*x^2 + 1",
            "X^3+3x^2+1",
            "x^3 - 2*x^2 + 1",
            "1 + 3*x^2 + x^3",
        ] {
            assert_eq!(Poly::parse(&f5, s).unwrap(), expect, "{s}");
        }
        assert_eq!(
            Poly::parse(&f5, "-x").unwrap(),
            Poly::from_ints(&f5, &[0, 4])
        );
        assert!(Poly::parse(&f5, "x^").is_err());
        assert!(Poly::parse(&f5, "x +").is_err());
        assert!(Poly::parse(&f5, "").is_err());
    }

    #[test]
    fn round_trips_extension_coefficients() {
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let g = f9.generator().unwrap();
        let p = &Poly::binomial(4, &g) * &Poly::binomial(1, &g.square());
        let text = p.to_string();
        assert_eq!(Poly::parse(&f9, &text).unwrap(), p);
    }
}
