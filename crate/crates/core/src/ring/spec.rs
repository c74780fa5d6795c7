//! Textual ring specifications.
//!
//! ```text
//! ring := atom ( " x " atom )*
//! atom := "Z/" nat | "GF(" nat ")" | "Z/" nat "[x]/(" poly ")"
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// Abstract syntax of a ring specification.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    ZMod(u64),
    GaloisField(u64),
    /// `Z/base[x]/(f)` with `modulus` listing the coefficients of `f` from the
    /// constant term upward; the last coefficient is 1.
    QuotientPoly {
        base: u64,
        modulus: Vec<u64>,
    },
    Product(Vec<RingSpec>),
}

impl RingSpec {
    /// Builds a product, flattening nested products and keeping factor order.
    pub fn product(factors: Vec<RingSpec>) -> RingSpec {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            RingSpec::Product(flat)
        }
    }

    /// The direct factors (a single atom is its own only factor).
    pub fn factors(&self) -> Vec<&RingSpec> {
        match self {
            RingSpec::Product(fs) => fs.iter().collect(),
            atom => vec![atom],
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::ZMod(n) => {
                if *n < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "Z/{n}: modulus must be at least 2"
                    )));
                }
            }
            RingSpec::GaloisField(q) => {
                if prime_power(*q).is_none() {
                    return Err(Error::InvalidParameter(format!(
                        "GF({q}): {q} is not a prime power"
                    )));
                }
            }
            RingSpec::QuotientPoly { base, modulus } => {
                if *base < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "Z/{base}[x]: modulus must be at least 2"
                    )));
                }
                if modulus.len() < 2 {
                    return Err(Error::InvalidParameter(
                        "quotient polynomial must have degree at least 1".into(),
                    ));
                }
                if modulus.last() != Some(&1) || modulus.iter().any(|c| c >= base) {
                    return Err(Error::InvalidParameter(format!(
                        "quotient polynomial over Z/{base} must be monic with reduced coefficients"
                    )));
                }
            }
            RingSpec::Product(fs) => {
                if fs.len() < 2 {
                    return Err(Error::InvalidParameter(
                        "a product needs at least two factors".into(),
                    ));
                }
                for f in fs {
                    if matches!(f, RingSpec::Product(_)) {
                        return Err(Error::InvalidParameter("nested product".into()));
                    }
                    f.validate()?;
                }
            }
        }
        Ok(())
    }

    /// Exact order, computed in 128-bit arithmetic (saturating).
    pub fn order(&self) -> u128 {
        match self {
            RingSpec::ZMod(n) | RingSpec::GaloisField(n) => *n as u128,
            RingSpec::QuotientPoly { base, modulus } => {
                let mut o: u128 = 1;
                for _ in 1..modulus.len() {
                    o = o.saturating_mul(*base as u128);
                }
                o
            }
            RingSpec::Product(fs) => fs
                .iter()
                .fold(1u128, |acc, f| acc.saturating_mul(f.order())),
        }
    }

    /// True when every factor is syntactically a field (`GF(q)` or `Z/p`).
    pub fn is_field_atom(&self) -> bool {
        match self {
            RingSpec::GaloisField(_) => true,
            RingSpec::ZMod(n) => prime_power(*n).is_some_and(|(_, k)| k == 1),
            _ => false,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ZMod(n) => write!(f, "Z/{n}"),
            RingSpec::GaloisField(q) => write!(f, "GF({q})"),
            RingSpec::QuotientPoly { base, modulus } => {
                write!(f, "Z/{base}[x]/({})", format_poly(modulus))
            }
            RingSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

/// Renders coefficients (constant term first) as `x^2+x+1`.
pub fn format_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (deg, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Returns `(p, k)` with `q = p^k`, `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = factorize(q);
    if factors.len() == 1 {
        Some(factors[0])
    } else {
        None
    }
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let mut factors = vec![p.atom()?];
    loop {
        let before = p.pos;
        let ws = p.skip_ws();
        if p.at_end() {
            break;
        }
        if ws == 0 || !p.eat(b"x") {
            p.pos = before.max(p.pos);
            return Err(p.err("\" x \" separator or end of input"));
        }
        if p.skip_ws() == 0 {
            return Err(p.err("whitespace after \"x\" separator"));
        }
        factors.push(p.atom()?);
    }
    let spec = RingSpec::product(factors);
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, expected: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> usize {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn eat(&mut self, lit: &[u8]) -> bool {
        if self.s[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit.as_bytes()) {
            Ok(())
        } else {
            Err(self.err(&format!("\"{lit}\"")))
        }
    }

    fn nat(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("natural number"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        digits
            .parse::<u64>()
            .map_err(|_| Error::InvalidParameter(format!("number {digits} is too large")))
    }

    fn atom(&mut self) -> Result<RingSpec> {
        if self.eat(b"GF(") {
            let q = self.nat()?;
            self.expect(")")?;
            return Ok(RingSpec::GaloisField(q));
        }
        if self.eat(b"Z/") {
            let n = self.nat()?;
            if self.eat(b"[x]/(") {
                let terms = self.poly()?;
                self.expect(")")?;
                return build_quotient(n, terms);
            }
            return Ok(RingSpec::ZMod(n));
        }
        Err(self.err("\"Z/\" or \"GF(\""))
    }

    /// Returns (coefficient, degree) terms in written order.
    fn poly(&mut self) -> Result<Vec<(u64, u32)>> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.eat(b"+") {
                self.skip_ws();
                terms.push(self.term()?);
            } else {
                return Ok(terms);
            }
        }
    }

    fn term(&mut self) -> Result<(u64, u32)> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.nat()?;
            if !self.eat(b"*") && self.peek() != Some(b'x') {
                return Ok((c, 0));
            }
            c
        } else {
            1
        };
        if !self.eat(b"x") {
            return Err(self.err("\"x\" or coefficient"));
        }
        let deg = if self.eat(b"^") {
            let d = self.nat()?;
            u32::try_from(d)
                .map_err(|_| Error::InvalidParameter(format!("degree {d} is too large")))?
        } else {
            1
        };
        Ok((coeff, deg))
    }
}

fn build_quotient(base: u64, terms: Vec<(u64, u32)>) -> Result<RingSpec> {
    if base < 2 {
        return Err(Error::InvalidParameter(format!(
            "Z/{base}[x]: modulus must be at least 2"
        )));
    }
    let degree = terms.iter().map(|t| t.1).max().unwrap_or(0) as usize;
    if degree == 0 {
        return Err(Error::InvalidParameter(
            "quotient polynomial must have degree at least 1".into(),
        ));
    }
    if degree > 64 {
        return Err(Error::InvalidParameter(format!(
            "degree {degree} is too large"
        )));
    }
    let mut coeffs = vec![0u64; degree + 1];
    for (c, d) in terms {
        let slot = &mut coeffs[d as usize];
        *slot = ((*slot as u128 + c as u128) % base as u128) as u64;
    }
    if coeffs[degree] != 1 {
        return Err(Error::InvalidParameter(format!(
            "quotient polynomial {} is not monic over Z/{base}",
            format_poly(&coeffs)
        )));
    }
    Ok(RingSpec::QuotientPoly {
        base,
        modulus: coeffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_atoms_and_products() {
        assert_eq!(parse_ring_spec("Z/36").unwrap(), RingSpec::ZMod(36));
        assert_eq!(
            parse_ring_spec("Z/9 x Z/25").unwrap(),
            RingSpec::Product(vec![RingSpec::ZMod(9), RingSpec::ZMod(25)])
        );
        assert_eq!(
            parse_ring_spec("Z/2[x]/(x^2+x+1)").unwrap(),
            RingSpec::QuotientPoly {
                base: 2,
                modulus: vec![1, 1, 1]
            }
        );
        assert_eq!(
            parse_ring_spec("  GF(4) x GF(9)  ").unwrap().to_string(),
            "GF(4) x GF(9)"
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            parse_ring_spec("GF(6)"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_ring_spec("Z/1"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_ring_spec("Z/4[x]/(2x^2+1)"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_ring_spec("Z/4[x]/(3)"),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_ring_spec("Z/9xZ/25"),
            Err(Error::Syntax {
                pos: 3,
                expected: "\" x \" separator or end of input".into()
            })
        );
        match parse_ring_spec("Q/5") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_ring_spec("Z/4 x "),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_ring_spec("GF(4"),
            Err(Error::Syntax { pos: 4, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "Z/6",
            "Z/2[x]/(x^2)",
            "Z/3[x]/(x^2) x Z/2",
            "Z/2 x Z/3 x Z/5",
            "Z/5[x]/(x^3+2x+4)",
        ] {
            assert_eq!(parse_ring_spec(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn factorisation() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
    }
}
