//! Text form of polynomials.
//!
//! ```text
//! poly    = [sign] term { sign term }
//! term    = coeff | [coeff "*"] varpart
//! coeff   = int | int "/" posint
//! varpart = var { "*" var }
//! var     = ("z" | "e") index [ "^" exp ]
//! ```
//!
//! Whitespace is ignored everywhere. Indices are one based. Error positions are
//! byte offsets into the original text.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::poly::{Poly, Space};
use crate::rational::Rational;
use crate::{Error, Result};

pub fn parse_poly(text: &str, nvars: usize, space: Space) -> Result<Poly> {
    if nvars == 0 {
        return Err(Error::VariableOutOfRange { index: 0, nvars });
    }
    let mut parser = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        end: text.len(),
        nvars,
        space,
    };
    parser.poly()
}

/// Which space a polynomial text is written in, judged by its first variable.
///
/// Texts without variables default to `Z`.
pub fn detect_space(text: &str) -> Space {
    match text.chars().find(|c| *c == 'z' || *c == 'e') {
        Some('e') => Space::E,
        _ => Space::Z,
    }
}

/// Largest variable index mentioned in the text (zero if none parse).
pub fn max_variable_index(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'z' || bytes[i] == b'e' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = text[start..j].parse::<usize>() {
                best = best.max(v);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    nvars: usize,
    space: Space,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn err(&self, message: &'static str) -> Error {
        Error::Syntax {
            position: self.offset(),
            message,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars, self.space);
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
            match self.peek() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.nvars];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                if !self.eat('*') {
                    return Ok((Monomial::new(exps), coeff));
                }
                coeff
            }
            Some('z' | 'e') => Rational::one(),
            _ => return Err(self.err("expected coefficient or variable")),
        };
        loop {
            self.var(&mut exps)?;
            if !self.eat('*') {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.eat('/') {
            let den_pos = self.offset();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    position: den_pos,
                    message: "zero denominator",
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        digits
            .parse::<BigInt>()
            .map_err(|_| self.err("malformed integer"))
    }

    fn small(&mut self, what: &'static str) -> Result<usize> {
        let at = self.offset();
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| Error::Syntax {
            position: at,
            message: what,
        })
    }

    fn var(&mut self, exps: &mut [u32]) -> Result<()> {
        let at = self.offset();
        let letter = match self.peek() {
            Some(c @ ('z' | 'e')) => c,
            _ => return Err(self.err("expected variable")),
        };
        if letter != self.space.letter() {
            return Err(Error::WrongSpace { position: at });
        }
        self.pos += 1;
        let index = self.small("variable index too large")?;
        if index == 0 || index > self.nvars {
            return Err(Error::VariableOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let exp = if self.eat('^') {
            u32::try_from(self.small("exponent too large")?)
                .map_err(|_| self.err("exponent too large"))?
        } else {
            1
        };
        exps[index - 1] += exp;
        Ok(())
    }
}

/// Render in the grammar accepted by [`parse_poly`], largest monomial first.
pub fn render_poly(p: &Poly) -> String {
    let mut s = String::new();
    let _ = write_poly(&mut s, p);
    s
}

fn write_poly<W: Write>(w: &mut W, p: &Poly) -> fmt::Result {
    if p.is_zero() {
        return w.write_char('0');
    }
    for (k, (m, c)) in p.terms().enumerate() {
        match (k, c.is_negative()) {
            (0, true) => w.write_char('-')?,
            (0, false) => {}
            (_, true) => w.write_str(" - ")?,
            (_, false) => w.write_str(" + ")?,
        }
        let magnitude = c.abs();
        let constant = m.degree() == 0;
        if constant || !magnitude.is_one() {
            write!(w, "{}", magnitude)?;
            if !constant {
                w.write_char('*')?;
            }
        }
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                w.write_char('*')?;
            }
            first = false;
            write!(w, "{}{}", p.space().letter(), i + 1)?;
            if e > 1 {
                write!(w, "^{}", e)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self)
    }
}
