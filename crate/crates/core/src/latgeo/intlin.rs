//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Everything works on `i128` with overflow checks enabled in every build
//! profile, so a result is either exact or the process aborts.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rat = Ratio<i128>;

pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn gcd_all(v: &[i128]) -> i128 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// Divides out the content; the zero vector is returned unchanged.
pub fn primitive(v: &mut [i128]) {
    let g = gcd_all(v);
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

pub fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_i128(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

pub fn to_i64(v: &[i128]) -> Vec<i64> {
    v.iter()
        .map(|&x| i64::try_from(x).expect("coordinate exceeds i64 range"))
        .collect()
}

/// Rank via fraction-free elimination.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let a = m[r][c];
            let b = m[i][c];
            let g = gcd(a, b);
            let (fa, fb) = (a / g, b / g);
            for j in c..ncols {
                m[i][j] = fa * m[i][j] - fb * m[r][j];
            }
            primitive(&mut m[i]);
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant by Bareiss elimination.
pub fn det(matrix: &[Vec<i128>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut m = matrix.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// A Z-basis of `{x in Z^ncols : rows * x = 0}`, in Hermite normal form.
pub fn integer_kernel(rows: &[Vec<i128>], ncols: usize) -> Vec<Vec<i128>> {
    // Column operations on [A; U] keep A = M * U with U unimodular.
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut u: Vec<Vec<i128>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut col = 0;
    for i in 0..a.len() {
        if col == ncols {
            break;
        }
        for j in (col + 1)..ncols {
            let y = a[i][j];
            if y == 0 {
                continue;
            }
            let x = a[i][col];
            let (g, s, t) = egcd(x, y);
            let (xg, yg) = (x / g, y / g);
            let apply = |m: &mut Vec<Vec<i128>>| {
                for row in m.iter_mut() {
                    let (cc, cj) = (row[col], row[j]);
                    row[col] = s * cc + t * cj;
                    row[j] = -yg * cc + xg * cj;
                }
            };
            apply(&mut a);
            apply(&mut u);
        }
        if a[i][col] != 0 {
            col += 1;
        }
    }
    let basis: Vec<Vec<i128>> = (col..ncols).map(|j| u.iter().map(|row| row[j]).collect()).collect();
    hermite_rows(&basis)
}

/// Row-style Hermite normal form of a set of linearly independent rows:
/// echelon form, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    if m.is_empty() {
        return m;
    }
    let ncols = m[0].len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        for i in (r + 1)..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (x, y) = (m[r][c], m[i][c]);
            let (g, s, t) = egcd(x, y);
            let (xg, yg) = (x / g, y / g);
            for j in 0..ncols {
                let (p, q) = (m[r][j], m[i][j]);
                m[r][j] = s * p + t * q;
                m[i][j] = -yg * p + xg * q;
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            for x in m[r].iter_mut() {
                *x = -*x;
            }
        }
        let piv = m[r][c];
        for i in 0..r {
            let q = Integer::div_floor(&m[i][c], &piv);
            if q != 0 {
                for j in 0..ncols {
                    m[i][j] -= q * m[r][j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    m
}

/// HNF basis of the saturated lattice `Z^n ∩ span_Q(vectors)`.
pub fn saturated_basis(vectors: &[Vec<i128>], n: usize) -> Vec<Vec<i128>> {
    if vectors.iter().all(|v| v.iter().all(|&x| x == 0)) {
        return Vec::new();
    }
    let complement = integer_kernel(vectors, n);
    integer_kernel(&complement, n)
}

/// Rational coordinates `c` with `sum c_j basis_j = v`, or `None` when `v`
/// is outside the span. `basis` must be linearly independent.
pub fn solve_coords(basis: &[Vec<i128>], v: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    let n = v.len();
    // Augmented n x (k+1) system, columns are basis vectors.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| Rat::from_integer(b[i])).collect();
            row.push(v[i]);
            row
        })
        .collect();
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..=k {
            m[r][j] *= inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in c..=k {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut out = vec![Rat::zero(); k];
    for (row, &c) in pivot_cols.iter().enumerate() {
        out[c] = m[row][k];
    }
    Some(out)
}

/// Integer coordinates of an integer vector in a lattice basis.
pub fn int_coords(basis: &[Vec<i128>], v: &[i128]) -> Option<Vec<i128>> {
    let rv: Vec<Rat> = v.iter().map(|&x| Rat::from_integer(x)).collect();
    let c = solve_coords(basis, &rv)?;
    c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

/// Reduced row echelon form over Q with rows scaled to primitive integers.
pub fn rref_primitive(rows: &[Vec<Rat>]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    if m.is_empty() {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in 0..ncols {
            m[r][j] *= inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..ncols {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.iter().map(|row| clear_denominators(row)).collect()
}

/// Smallest positive multiple of a rational vector that is a primitive
/// integer vector (sign preserved).
pub fn clear_denominators(v: &[Rat]) -> Vec<i128> {
    let l = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<i128> = v.iter().map(|x| (x * Rat::from_integer(l)).to_integer()).collect();
    primitive(&mut out);
    out
}

/// Orthogonal projection of `v` onto the orthogonal complement of the
/// row space of `eqs` (rows linearly independent).
pub fn project_out(v: &[Rat], eqs: &[Vec<i128>]) -> Vec<Rat> {
    if eqs.is_empty() {
        return v.to_vec();
    }
    let k = eqs.len();
    let eqr: Vec<Vec<Rat>> = eqs.iter().map(|e| e.iter().map(|&x| Rat::from_integer(x)).collect()).collect();
    let rdot = |a: &[Rat], b: &[Rat]| a.iter().zip(b).fold(Rat::zero(), |s, (x, y)| s + x * y);
    // Solve Gram * t = E v.
    let mut m: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rat> = (0..k).map(|j| rdot(&eqr[i], &eqr[j])).collect();
            row.push(rdot(&eqr[i], v));
            row
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&i| !m[i][c].is_zero()).expect("equations must be independent");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for j in c..=k {
            m[c][j] *= inv;
        }
        for i in 0..k {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in c..=k {
                    let t = m[c][j] * f;
                    m[i][j] -= t;
                }
            }
        }
    }
    let mut out = v.to_vec();
    for i in 0..k {
        let t = m[i][k];
        for (o, e) in out.iter_mut().zip(&eqr[i]) {
            *o -= t * e;
        }
    }
    out
}

pub fn rat_vec(v: &[i128]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(x)).collect()
}

pub fn rat_is_positive(x: &Rat) -> bool {
    x.is_positive()
}

pub fn one() -> Rat {
    Rat::one()
}
