//! Dense univariate polynomials over a prime field `F_p`, `p < 2^32`.
//! Coefficients are stored low degree first with no trailing zeros.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use num_prime::nt_funcs::is_prime64;
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
}

pub type UPoly = Vec<u64>;

impl Field {
    pub fn new(p: u64) -> Field {
        assert!(p > 2 && p < (1 << 32), "prime out of range");
        Field { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_int(&self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((x % &p) + &p) % &p;
        r.to_u64().expect("residue fits")
    }

    /// Reduction of a rational; `None` when `p` divides the numerator or
    /// the denominator (the prime is then unsuitable).
    pub fn from_rational(&self, x: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        if (x.numer() % &p).is_zero() || (x.denom() % &p).is_zero() {
            return None;
        }
        Some(self.mul(self.from_int(x.numer()), self.inv(self.from_int(x.denom()))))
    }

    pub fn random(&self, rng: &mut impl Rng) -> u64 {
        rng.random_range(0..self.p)
    }

    pub fn random_nonzero(&self, rng: &mut impl Rng) -> u64 {
        rng.random_range(1..self.p)
    }

    pub fn trim(&self, mut a: UPoly) -> UPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> UPoly {
        let mut r = vec![0; a.len().max(b.len())];
        for (i, x) in r.iter_mut().enumerate() {
            *x = self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0));
        }
        self.trim(r)
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> UPoly {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> UPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = self.add(r[i + j], self.mul(x, y));
            }
        }
        self.trim(r)
    }

    pub fn eval(&self, a: &[u64], x: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// `(q, r)` with `a = q b + r`, `deg r < deg b`; `b` nonzero.
    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (UPoly, UPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), self.trim(r));
        }
        let inv = self.inv(*b.last().unwrap());
        let mut q = vec![0; r.len() - b.len() + 1];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + b.len() - 1], inv);
            q[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[i + j] = self.sub(r[i + j], self.mul(c, bj));
                }
            }
        }
        r.truncate(b.len() - 1);
        (self.trim(q), self.trim(r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> UPoly {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let (_, r) = self.divrem(&a, &b);
            a = b;
            b = r;
        }
        match a.last() {
            Some(&lc) => self.poly_scale(&a, self.inv(lc)),
            None => a,
        }
    }

    /// Resultant of two polynomials taken with their actual degrees.
    pub fn resultant(&self, a: &[u64], b: &[u64]) -> u64 {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        if a.is_empty() || b.is_empty() {
            return 0;
        }
        let mut acc = 1u64;
        loop {
            let (da, db) = (a.len() - 1, b.len() - 1);
            if db == 0 {
                return self.mul(acc, self.pow(b[0], da as u64));
            }
            let (_, r) = self.divrem(&a, &b);
            if r.is_empty() {
                return 0;
            }
            let dr = r.len() - 1;
            if (da * db) % 2 == 1 {
                acc = self.neg(acc);
            }
            acc = self.mul(acc, self.pow(*b.last().unwrap(), (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// The polynomial of degree `< xs.len()` through `(xs[i], ys[i])`.
    pub fn interpolate(&self, xs: &[u64], ys: &[u64]) -> UPoly {
        // Newton divided differences, then expansion.
        let n = xs.len();
        let mut c = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = self.sub(c[i], c[i - 1]);
                let den = self.sub(xs[i], xs[i - j]);
                c[i] = self.mul(num, self.inv(den));
            }
        }
        let mut r: UPoly = Vec::new();
        for i in (0..n).rev() {
            r = self.poly_mul(&r, &[self.neg(xs[i]), 1]);
            r = self.poly_add(&r, &[c[i]]);
        }
        r
    }
}

/// The largest prime `<= n`.
pub fn prev_prime(n: u64) -> u64 {
    if is_prime64(n) {
        return n;
    }
    num_prime::nt_funcs::prev_prime(&n, None).expect("a prime below n")
}

/// `count` distinct primes just below `2^31`, chosen by `rng`.
pub fn random_primes(rng: &mut impl Rng, count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    while out.len() < count {
        let p = prev_prime((1 << 31) - rng.random_range(1..(1u64 << 24)));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 2_147_483_647;

    fn signed_residue(f: &Field, x: i64) -> u64 {
        x.rem_euclid(f.modulus() as i64) as u64
    }

    #[test]
    fn primes_below() {
        assert_eq!(prev_prime(P), P);
        assert_eq!(prev_prime(100), 97);
    }

    #[test]
    fn gcd_and_division() {
        let f = Field::new(P);
        let a = f.poly_mul(&[1, 1], &[signed_residue(&f, -2), 1]);
        let b = f.poly_mul(&[1, 1], &[3, 1]);
        assert_eq!(f.gcd(&a, &b), vec![1, 1]);
        let (q, r) = f.divrem(&a, &[1, 1]);
        assert_eq!(q, vec![signed_residue(&f, -2), 1]);
        assert!(r.is_empty());
    }

    #[test]
    fn resultant_detects_common_root() {
        let f = Field::new(P);
        let a = vec![signed_residue(&f, -1), 0, 1];
        assert_eq!(f.resultant(&a, &[1, 1]), 0);
        // Res(t^2 - 1, t - 2) = (2 - 1)(2 + 1) = 3
        assert_eq!(f.resultant(&a, &[signed_residue(&f, -2), 1]), 3);
        // Res(t - a, c) = c
        assert_eq!(f.resultant(&[5, 1], &[7]), 7);
    }

    #[test]
    fn interpolation_round_trip() {
        let f = Field::new(P);
        let poly = vec![3, 0, 5, 1];
        let xs: Vec<u64> = (0..4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| f.eval(&poly, x)).collect();
        assert_eq!(f.interpolate(&xs, &ys), poly);
    }
}
