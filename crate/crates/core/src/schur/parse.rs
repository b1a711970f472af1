//! Compact text syntax for bundles on `Gr(k, n)`.
//!
//! ```text
//! sum     := term (("+" | "⊕") term)*
//! term    := [count] product
//! product := factor (["x" | "⊗"] factor)*
//! factor  := "O" ["(" int ")"]
//!          | "T"                        tangent bundle U* x Q
//!          | "E[" int ("," int)* "]"    irreducible E_ω, ω in fundamental weights
//!          | [power] ("U" | "Q") ["*"]
//!          | "(" int ")"                twist by O(int)
//! power   := "L" int | "S" int | "S[" int ("," int)* "]"
//! ```
//!
//! Examples: `L3 U* (-3)`, `U(-2) x L3 U*`, `L2 U (-1) + S2 U (-1)`, `E[1,0,0,0,0,1]`.

use crate::bott::ParabolicSpace;
use crate::error::{Error, Result};
use crate::root_system::Weight;

use super::label::{tensor, BundleLabel, BundleSum};
use super::partition::Partition;

pub fn parse_bundle(input: &str, k: usize, n: usize) -> Result<BundleSum> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        k,
        n,
        input,
    };
    let sum = p.sum()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(sum)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    k: usize,
    n: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.input))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+') | Some('−')) {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos]
            .iter()
            .map(|&c| if c == '−' { '-' } else { c })
            .collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn sum(&mut self) -> Result<BundleSum> {
        let mut total = BundleSum::zero(self.k, self.n)?;
        loop {
            let count = self.count()?;
            let product = self.product()?;
            for (label, m) in product.summands() {
                total.add(label.clone(), m * count)?;
            }
            if !(self.eat('+') || self.eat('⊕')) {
                return Ok(total);
            }
        }
    }

    /// Optional leading multiplicity: digits followed by whitespace.
    fn count(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Ok(1);
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| self.error("bad multiplicity"))
    }

    fn product(&mut self) -> Result<BundleSum> {
        let mut acc = BundleSum::trivial(self.k, self.n)?;
        loop {
            if !matches!(self.peek(), Some('O' | 'T' | 'E' | 'L' | 'S' | 'U' | 'Q' | '(')) {
                return Err(self.error("expected a bundle"));
            }
            let factor = self.factor()?;
            acc = tensor(&acc, &factor)?;
            let separated = self.eat('x') || self.eat('⊗');
            let next_is_factor = matches!(self.peek(), Some('O' | 'T' | 'E' | 'L' | 'S' | 'U' | 'Q' | '('));
            if !separated && !next_is_factor {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<BundleSum> {
        let (k, n) = (self.k, self.n);
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.int()?;
                self.expect(')')?;
                Ok(BundleLabel::line(k, n, t)?.into())
            }
            Some('O') => {
                self.pos += 1;
                Ok(BundleLabel::trivial(k, n)?.into())
            }
            Some('T') => {
                self.pos += 1;
                Ok(BundleLabel::tangent(k, n)?.into())
            }
            Some('E') => {
                self.pos += 1;
                self.expect('[')?;
                let w = Weight::new(self.int_list()?);
                let space = ParabolicSpace::grassmannian(k, n)?;
                Ok(BundleLabel::from_weight(&space, &w)?.into())
            }
            _ => {
                let power = self.power()?;
                let generator = self.peek();
                if !matches!(generator, Some('U') | Some('Q')) {
                    return Err(self.error("expected U or Q"));
                }
                self.pos += 1;
                let dual = self.eat('*');
                let label = if generator == Some('U') {
                    BundleLabel::schur_u(k, n, power, dual)?
                } else {
                    BundleLabel::schur_q(k, n, power, dual)?
                };
                Ok(label.into())
            }
        }
    }

    fn power(&mut self) -> Result<Partition> {
        match self.peek() {
            Some('L') => {
                self.pos += 1;
                let j = self.nonneg()?;
                Ok(Partition::column(j as usize))
            }
            Some('S') => {
                self.pos += 1;
                if self.eat('[') {
                    let parts = self.int_list()?;
                    Partition::try_from(parts)
                } else {
                    Ok(Partition::row(self.nonneg()? as u32))
                }
            }
            _ => Ok(Partition::column(1)),
        }
    }

    fn nonneg(&mut self) -> Result<u64> {
        let v = self.int()?;
        u64::try_from(v).map_err(|_| self.error("expected a nonnegative integer"))
    }
}
