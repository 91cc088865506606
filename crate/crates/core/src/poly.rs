//! Sparse multivariate (Laurent) polynomials with exact rational
//! coefficients, a small text parser and a canonical printer.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! poly   := sign? term (("+" | "-") term)*
//! term   := coeff ("*" factor)* | factor ("*" factor)*
//! factor := var ("^" "-"? int)?
//! var    := "x" int | "x" | "y" | "z"
//! coeff  := int ("/" int)?
//! ```
//!
//! The aliases `x, y, z` stand for `x1, x2, x3` and are accepted only when
//! the ambient dimension is at most 3.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::latgeo::{point, FaceId, Polytope};

/// An exponent vector `v` of a monomial `x^v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Graded lexicographic comparison.
    pub fn cmp_grlex(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ambient_dim: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
    laurent: bool,
}

impl Polynomial {
    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining
    /// like terms and dropping zeros. The result may have no terms.
    pub fn from_terms<I>(ambient_dim: usize, laurent: bool, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Vec<i64>, BigRational)>,
    {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut map: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
        for (v, c) in terms {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
            if !laurent && v.iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent { pos: 0 });
            }
            *map.entry(ExponentVector(v)).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial { ambient_dim, terms: map, laurent })
    }

    /// Parses `text`; see the module docs for the grammar.
    pub fn parse(text: &str, ambient_dim: usize, laurent: bool) -> Result<Polynomial> {
        if ambient_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let terms = Parser { src: text.as_bytes(), pos: 0, n: ambient_dim, laurent }.poly()?;
        let p = Polynomial::from_terms(ambient_dim, laurent, terms)?;
        if p.terms.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(p)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, v: &[i64]) -> Option<&BigRational> {
        self.terms.get(&ExponentVector(v.to_vec()))
    }

    /// `supp f`, in lexicographic order.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().map(|k| k.0.clone()).collect()
    }

    pub fn constant_term(&self) -> Option<&BigRational> {
        self.coefficient(&vec![0; self.ambient_dim])
    }

    /// `f_γ`: the terms whose exponents lie on the face `id` of `polytope`.
    ///
    /// The polytope must be one built from this polynomial's support; a face
    /// with a vertex that is neither the origin nor a support point is
    /// rejected.
    pub fn face_part(&self, polytope: &Polytope, id: FaceId) -> Result<Polynomial> {
        if polytope.ambient_dim() != self.ambient_dim || id >= polytope.faces().len() {
            return Err(Error::ForeignFace);
        }
        let face = polytope.face(id);
        for &v in &face.vertex_ids {
            let x = &polytope.vertices()[v];
            let known = x.iter().all(|c| c.is_zero())
                || self.terms.keys().any(|k| point(&k.0) == *x);
            if !known {
                return Err(Error::ForeignFace);
            }
        }
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| polytope.face_contains_point(id, &point(&k.0)))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        Ok(Polynomial { ambient_dim: self.ambient_dim, terms, laurent: self.laurent })
    }

    /// Restriction to `{x_n = 0}`: drops every term involving the last
    /// variable and forgets that coordinate.
    pub fn restrict_last(&self) -> Result<Polynomial> {
        if self.ambient_dim < 2 {
            return Err(Error::ZeroDimension);
        }
        let n = self.ambient_dim;
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.0[n - 1] == 0)
            .map(|(k, c)| (k.0[..n - 1].to_vec(), c.clone()));
        Polynomial::from_terms(n - 1, self.laurent, terms)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Polynomial {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect()
        };
        Polynomial { ambient_dim: self.ambient_dim, terms, laurent: self.laurent }
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms_grlex(&self) -> Vec<(&ExponentVector, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_grlex(a.0));
        v
    }
}

fn var_name(i: usize, n: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (v, c)) in self.terms_grlex().into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            let monomial = v.0.iter().any(|&e| e != 0);
            if !a.is_one() || !monomial {
                parts.push(a.to_string());
            }
            for (i, &e) in v.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(var_name(i, self.ambient_dim)),
                    _ => parts.push(format!("{}^{}", var_name(i, self.ambient_dim), e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    laurent: bool,
}

type Term = (Vec<i64>, BigRational);

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn poly(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return Err(self.err("empty input")),
            _ => 1,
        };
        loop {
            let (v, c) = self.term()?;
            out.push((v, if sign < 0 { -c } else { c }));
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => return Err(self.err(format!("unexpected character '{}'", ch as char))),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut exps = vec![0i64; self.n];
        let mut coeff = BigRational::one();
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                coeff = self.coeff()?;
            }
            Some(b'x' | b'y' | b'z') => self.factor(&mut exps)?,
            Some(ch) => return Err(self.err(format!("expected a term, found '{}'", ch as char))),
            None => return Err(self.err("expected a term")),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let num: BigInt = self.digits()?.parse().expect("digits parse as an integer");
        if self.peek() != Some(b'/') {
            return Ok(BigRational::from_integer(num));
        }
        self.pos += 1;
        let at = self.pos;
        let den: BigInt = self.digits()?.parse().expect("digits parse as an integer");
        if den.is_zero() {
            return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
        }
        Ok(BigRational::new(num, den))
    }

    fn factor(&mut self, exps: &mut [i64]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        let index = self.var()?;
        let mut e: i64 = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.pos;
            let mag: i64 = self
                .digits()?
                .parse()
                .map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })?;
            e = if neg { -mag } else { mag };
            if neg && mag > 0 && !self.laurent {
                return Err(Error::NegativeExponent { pos: start });
            }
        }
        exps[index] = exps[index]
            .checked_add(e)
            .ok_or_else(|| Error::Syntax { pos: start, msg: "exponent too large".into() })?;
        Ok(())
    }

    /// Zero-based variable index.
    fn var(&mut self) -> Result<usize> {
        let ch = self.peek().ok_or_else(|| self.err("expected a variable"))?;
        let start = self.pos;
        let alias = match ch {
            b'x' => 1,
            b'y' => 2,
            b'z' => 3,
            _ => return Err(self.err(format!("expected a variable, found '{}'", ch as char))),
        };
        self.pos += 1;
        let indexed = ch == b'x' && self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit());
        let index = if indexed {
            let at = self.pos;
            self.digits()?
                .parse::<usize>()
                .map_err(|_| Error::Syntax { pos: at, msg: "variable index too large".into() })?
        } else {
            if self.n > 3 {
                return Err(Error::Syntax {
                    pos: start,
                    msg: "variable aliases x, y, z need n <= 3; use x1..xn".into(),
                });
            }
            alias
        };
        if index == 0 || index > self.n {
            return Err(Error::VariableOutOfRange { index, n: self.n, pos: start });
        }
        Ok(index - 1)
    }
}
