//! Polynomial text grammar.
//!
//! `poly := ['-'] term (('+'|'-') term)*`
//! `term := factor ('*' factor)*`
//! `factor := INT | VAR ('^' INT)?`
//!
//! Integer coefficients, explicit `*` (juxtaposition is rejected), `^` for
//! powers, unary minus at term start. Printing is canonical: terms descending
//! in the ring order, coefficient first in each term, `1*` suppressed.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::{monomial_text, Monomial, Ring};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(usize, Tok)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let c = self.src[self.pos] as char;
        match c {
            '+' => {
                self.pos += 1;
                Ok((start, Tok::Plus))
            }
            '-' => {
                self.pos += 1;
                Ok((start, Tok::Minus))
            }
            '*' => {
                self.pos += 1;
                Ok((start, Tok::Star))
            }
            '^' => {
                self.pos += 1;
                Ok((start, Tok::Caret))
            }
            '0'..='9' => {
                let mut end = self.pos;
                while end < self.src.len() && (self.src[end] as char).is_ascii_digit() {
                    end += 1;
                }
                let s = core::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Ok((start, Tok::Int(s.parse::<BigInt>().unwrap())))
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len() {
                    let ch = self.src[end] as char;
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        end += 1;
                    } else {
                        break;
                    }
                }
                let s = core::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                Ok((start, Tok::Var(s)))
            }
            other => Err(Error::Parse { pos: start, msg: alloc::format!("unexpected character '{other}'") }),
        }
    }
}

/// Parse a polynomial in the text grammar over `ring`.
pub fn parse_polynomial<K: Field>(ring: &Ring<K>, src: &str) -> Result<Polynomial<K>> {
    let mut lx = Lexer::new(src);
    let mut terms: Vec<(Monomial, K::Elem)> = Vec::new();
    let (pos0, mut tok) = lx.next()?;
    if tok == Tok::End {
        return Err(Error::Parse { pos: pos0, msg: String::from("empty polynomial") });
    }
    let mut sign_negative = false;
    if tok == Tok::Minus {
        sign_negative = true;
        tok = lx.next()?.1;
    }
    loop {
        // Parse one term: factor ('*' factor)*.
        let mut coeff = BigInt::one();
        let mut exps: Vec<u16> = alloc::vec![0; ring.nvars()];
        loop {
            match tok {
                Tok::Int(ref n) => {
                    coeff *= n;
                }
                Tok::Var(ref name) => {
                    let idx = ring.var_index(name).ok_or_else(|| Error::Parse {
                        pos: lx.pos,
                        msg: alloc::format!("unknown variable '{name}'"),
                    })?;
                    let mut exp: u16 = 1;
                    // Look for '^INT'.
                    let save = lx.pos;
                    let (_, t2) = lx.next()?;
                    if t2 == Tok::Caret {
                        let (p3, t3) = lx.next()?;
                        match t3 {
                            Tok::Int(e) => {
                                exp = u16::try_from(&e).map_err(|_| Error::Parse {
                                    pos: p3,
                                    msg: String::from("exponent too large"),
                                })?;
                            }
                            _ => {
                                return Err(Error::Parse {
                                    pos: p3,
                                    msg: String::from("expected integer exponent after '^'"),
                                })
                            }
                        }
                    } else {
                        lx.pos = save;
                    }
                    let (new_e, overflow) = exps[idx].overflowing_add(exp);
                    if overflow {
                        return Err(Error::Parse { pos: lx.pos, msg: String::from("exponent overflow") });
                    }
                    exps[idx] = new_e;
                }
                _ => {
                    return Err(Error::Parse {
                        pos: lx.pos,
                        msg: String::from("expected a coefficient or variable"),
                    })
                }
            }
            // After a factor: '*', '+', '-' or end.
            let (p, t) = lx.next()?;
            match t {
                Tok::Star => {
                    tok = lx.next()?.1;
                    continue;
                }
                Tok::Plus | Tok::Minus | Tok::End => {
                    tok = t;
                    break;
                }
                _ => {
                    return Err(Error::Parse {
                        pos: p,
                        msg: String::from("expected '*', '+', '-' or end of input"),
                    })
                }
            }
        }
        if sign_negative {
            coeff = -coeff;
        }
        let c = ring.field.from_bigint(&coeff);
        terms.push((Monomial::from_exps(&ring.weights, &exps), c));

        match tok {
            Tok::End => break,
            Tok::Plus => {
                sign_negative = false;
                tok = lx.next()?.1;
            }
            Tok::Minus => {
                sign_negative = true;
                tok = lx.next()?.1;
            }
            _ => unreachable!(),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Canonical text of a polynomial whose coefficients have been pre-scaled to
/// integers with the given common factor (see [`Field::integer_scaling`]).
pub fn polynomial_text_scaled<K: Field>(p: &Polynomial<K>, scale: &K::Elem) -> String {
    let ring = p.ring();
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let n: BigInt = ring.field.elem_to_scaled_bigint(c, scale);
        let neg = n.is_negative();
        let mag = n.magnitude().to_string();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono = monomial_text(m, &ring.vars);
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Canonical text with per-polynomial normalization: over the rationals the
/// coefficients are scaled to primitive integers with positive lead; over a
/// prime field they print as canonical residues.
pub fn polynomial_text<K: Field>(p: &Polynomial<K>) -> String {
    let field = &p.ring().field;
    let scale = field.integer_scaling(p.terms().iter().map(|(_, c)| c));
    polynomial_text_scaled(p, &scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp64, Rationals};
    use crate::ring::{MonomialOrder, RingData};

    fn qxy() -> Ring<Rationals> {
        RingData::standard(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn parse_spec_example() {
        let r = qxy();
        let p = parse_polynomial(&r, "3*x^2*y - 2*y^3").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(polynomial_text(&p), "3*x^2*y - 2*y^3");
    }

    #[test]
    fn unary_minus_and_constants() {
        let r = qxy();
        let p = parse_polynomial(&r, "-x + 1").unwrap();
        assert_eq!(polynomial_text(&p), "-x + 1");
        let q = parse_polynomial(&r, "0").unwrap();
        assert!(q.is_zero());
        assert_eq!(polynomial_text(&q), "0");
    }

    #[test]
    fn juxtaposition_rejected() {
        let r = qxy();
        assert!(matches!(parse_polynomial(&r, "3 x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x y"), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_variable_rejected() {
        let r = qxy();
        assert!(matches!(parse_polynomial(&r, "x + z"), Err(Error::Parse { .. })));
    }

    #[test]
    fn roundtrip_integer_polynomials() {
        let r = qxy();
        for s in ["x^2*y - y^3", "2*x - 3*y + 5", "-4*x*y", "x", "7"] {
            let p = parse_polynomial(&r, s).unwrap();
            assert_eq!(polynomial_text(&p), s, "canonical print of {s}");
            let q = parse_polynomial(&r, &polynomial_text(&p)).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn fp_prints_residues() {
        let f = Fp64::new(7).unwrap();
        let r = RingData::standard(f, &["x"], MonomialOrder::Lex).unwrap();
        let p = parse_polynomial(&r, "-x + 9").unwrap();
        assert_eq!(polynomial_text(&p), "6*x + 2");
    }

    #[test]
    fn error_positions() {
        let r = qxy();
        match parse_polynomial(&r, "x + ?") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
