//! Text format: `3*l1^2*m2 - 8*t`, `u1^-2`, `1/2*p1`.

use super::{Coeff, Monomial, PolyError, Polynomial, Var};

pub fn format_poly<C: Coeff>(p: &Polynomial<C>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{a}*{m}"));
        }
    }
    out
}

pub fn parse_poly<C: Coeff>(s: &str) -> Result<Polynomial<C>, PolyError> {
    let mut p = Parser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        src: s,
    };
    if p.chars.is_empty() {
        return Err(p.error("empty input"));
    }
    let mut out = Polynomial::zero();
    let mut first = true;
    while p.pos < p.chars.len() {
        let sign = match p.peek() {
            Some('+') => {
                p.pos += 1;
                1
            }
            Some('-') => {
                p.pos += 1;
                -1
            }
            _ if first => 1,
            _ => return Err(p.error("expected + or -")),
        };
        first = false;
        let (m, c): (Monomial, C) = p.term()?;
        let c = if sign < 0 { -c } else { c };
        out.add_term(m, &c);
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{msg} at position {} in {:?}", self.pos, self.src))
    }

    fn term<C: Coeff>(&mut self) -> Result<(Monomial, C), PolyError> {
        let mut coeff = C::one();
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number()?;
                    let n = if self.peek() == Some('/') {
                        self.pos += 1;
                        let d = self.number()?;
                        format!("{n}/{d}")
                    } else {
                        n
                    };
                    let v: C = n
                        .parse()
                        .map_err(|_| self.error("coefficient not in ring"))?;
                    coeff = coeff * v;
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                        self.pos += 1;
                    }
                    let name: String = self.chars[start..self.pos].iter().collect();
                    let mut e = 1i32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let neg = self.peek() == Some('-');
                        if neg {
                            self.pos += 1;
                        }
                        let n = self.number()?;
                        e = n.parse().map_err(|_| self.error("exponent too large"))?;
                        if neg {
                            e = -e;
                        }
                    }
                    pairs.push((Var::new(&name), e));
                }
                _ => return Err(self.error("expected a number or a variable")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }

    fn number(&mut self) -> Result<String, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

impl<C: Coeff> std::str::FromStr for Polynomial<C> {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::{QPoly, ZPoly};

    #[test]
    fn canonical_printing() {
        let p: ZPoly = "-8*t + 3*m2*l1^2".parse().unwrap();
        assert_eq!(p.to_string(), "3*l1^2*m2 - 8*t");
        let q: ZPoly = "u1^-2 + u1^2 + 1".parse().unwrap();
        assert_eq!(q.to_string(), "u1^2 + 1 + u1^-2");
        assert_eq!(ZPoly::zero().to_string(), "0");
        let r: QPoly = "1/2*p1 - 3/6".parse().unwrap();
        assert_eq!(r.to_string(), "1/2*p1 - 1/2");
    }

    #[test]
    fn round_trip() {
        for s in [
            "3*l1^2*m2 - 8*t",
            "-x^3 + 2*x*y - 7",
            "u1*u2^-1*v3^-2 + 5",
            "l10 + l2",
        ] {
            let p: ZPoly = s.parse().unwrap();
            let again: ZPoly = p.to_string().parse().unwrap();
            assert_eq!(p, again);
            assert_eq!(again.to_string(), p.to_string());
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("3*".parse::<ZPoly>().is_err());
        assert!("1/2*x".parse::<ZPoly>().is_err());
        assert!("".parse::<ZPoly>().is_err());
        assert!("x + + y".parse::<ZPoly>().is_err());
    }
}
