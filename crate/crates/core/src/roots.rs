//! Roots of unity as reduced fractions and finite unions of `μ_d`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// `e^{2πi k/d}` with `gcd(k, d) = 1` and `0 <= k < d`; `1` is `0/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    k: u64,
    d: u64,
}

impl RootOfUnity {
    /// Reduces `k/d` modulo 1. Panics if `d == 0`.
    pub fn new(k: i64, d: u64) -> RootOfUnity {
        assert!(d > 0, "order must be positive");
        let k = k.rem_euclid(d as i64) as u64;
        let g = k.gcd(&d);
        RootOfUnity { k: k / g, d: d / g }
    }

    pub fn one() -> RootOfUnity {
        RootOfUnity { k: 0, d: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.k
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn is_one(&self) -> bool {
        self.d == 1
    }

    /// `λ^m = 1`.
    pub fn is_root_of(&self, m: u64) -> bool {
        m % self.d == 0
    }

    pub fn conjugate(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.k as i64), self.d)
    }

    /// The exponent `k` in `λ = ζ_e^k`, `0 <= k < e`; requires `λ^e = 1`.
    pub fn exponent_in(&self, e: u64) -> Option<u64> {
        self.is_root_of(e).then(|| self.k * (e / self.d))
    }

    /// All primitive `d`-th roots of unity, ascending in `k`.
    pub fn primitive(d: u64) -> impl Iterator<Item = RootOfUnity> {
        (0..d).filter(move |k| k.gcd(&d) == 1).map(move |k| RootOfUnity { k, d })
    }
}

impl Ord for RootOfUnity {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.d, self.k).cmp(&(other.d, other.k))
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.d)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidEigenvalue(s.to_string());
        let (k, d) = s.split_once('/').ok_or_else(bad)?;
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(RootOfUnity::new(k, d))
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `{1} ∪ ⋃_{d ∈ D} μ_d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EigenvalueSet {
    pub orders: BTreeSet<u64>,
    pub includes_one: bool,
}

impl EigenvalueSet {
    pub fn with_one() -> EigenvalueSet {
        EigenvalueSet { orders: BTreeSet::new(), includes_one: true }
    }

    pub fn insert_order(&mut self, d: u64) {
        self.orders.insert(d);
    }

    pub fn union(&mut self, other: &EigenvalueSet) {
        self.orders.extend(other.orders.iter().copied());
        self.includes_one |= other.includes_one;
    }

    pub fn contains(&self, lambda: &RootOfUnity) -> bool {
        (lambda.is_one() && self.includes_one) || self.orders.iter().any(|&d| lambda.is_root_of(d))
    }

    /// Every member, sorted by order then numerator.
    pub fn eigenvalues(&self) -> Vec<RootOfUnity> {
        let mut seen = BTreeSet::new();
        if self.includes_one {
            seen.insert(RootOfUnity::one());
        }
        for &d in &self.orders {
            for k in 0..d {
                seen.insert(RootOfUnity::new(k as i64, d));
            }
        }
        seen.into_iter().collect()
    }
}

impl Serialize for EigenvalueSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EigenvalueSet", 2)?;
        st.serialize_field("orders", &self.orders)?;
        st.serialize_field("eigenvalues", &self.eigenvalues())?;
        st.end()
    }
}

impl fmt::Display for EigenvalueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.eigenvalues().iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m % i == 0 {
            small.push(i);
            if i * i != m {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
