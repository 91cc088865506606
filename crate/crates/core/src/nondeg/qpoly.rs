//! Univariate polynomials over `Q`, just enough for square-free tests.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> QPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    /// `Σ c_i t^{e_i}` from sparse terms with nonnegative exponents.
    pub fn from_sparse(terms: &[(u64, BigRational)]) -> QPoly {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0) as usize;
        let mut c = vec![BigRational::zero(); deg + 1];
        for (e, x) in terms {
            c[*e as usize] += x;
        }
        QPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn rem(&self, b: &QPoly) -> QPoly {
        let db = b.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let lc = b.0[db].clone();
        while r.len() > db {
            let top = r.len() - 1;
            let c = &r[top] / &lc;
            for (j, bj) in b.0.iter().enumerate() {
                let t = &c * bj;
                r[top - db + j] -= t;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        QPoly::new(r)
    }

    pub fn monic(&self) -> QPoly {
        match self.0.last() {
            Some(lc) => QPoly(self.0.iter().map(|c| c / lc).collect()),
            None => self.clone(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}
