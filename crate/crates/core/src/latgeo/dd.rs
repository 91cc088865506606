//! Double description method for polyhedral cones `{x : A x >= 0}`.
//!
//! Constraints are inserted one at a time. The lineality space is tracked
//! explicitly and the pointed part is kept as a list of extreme rays with
//! their incidence sets; adjacency uses the combinatorial test.

use super::intlin::{dot, primitive};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Minimal generators of a cone: it equals `span(lineality) + cone(rays)`.
#[derive(Clone, Debug)]
pub struct ConeGenerators {
    pub lineality: Vec<Vec<i128>>,
    pub rays: Vec<Vec<i128>>,
}

struct Ray {
    v: Vec<i128>,
    zero: Bits,
}

/// Generators of `{x in R^dim : row . x >= 0 for every row}`.
pub fn generators(rows: &[Vec<i128>], dim: usize) -> ConeGenerators {
    let nrows = rows.len();
    let mut lineality: Vec<Vec<i128>> = (0..dim)
        .map(|i| (0..dim).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ri, h) in rows.iter().enumerate() {
        if let Some(li) = lineality.iter().position(|l| dot(h, l) != 0) {
            let mut l = lineality.swap_remove(li);
            if dot(h, &l) < 0 {
                l.iter_mut().for_each(|x| *x = -*x);
            }
            let hl = dot(h, &l);
            for other in lineality.iter_mut() {
                let ho = dot(h, other);
                if ho != 0 {
                    for (o, x) in other.iter_mut().zip(&l) {
                        *o = hl * *o - ho * x;
                    }
                    primitive(other);
                }
            }
            for r in rays.iter_mut() {
                let hr = dot(h, &r.v);
                if hr != 0 {
                    for (o, x) in r.v.iter_mut().zip(&l) {
                        *o = hl * *o - hr * x;
                    }
                    primitive(&mut r.v);
                }
                r.zero.set(ri);
            }
            // l is tight on every earlier row because it was lineality.
            let mut zero = Bits::new(nrows);
            for k in 0..ri {
                zero.set(k);
            }
            rays.push(Ray { v: l, zero });
            continue;
        }

        let vals: Vec<i128> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < 0).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.and(&rays[q].zero);
                let adjacent = !(0..rays.len())
                    .any(|k| k != p && k != q && common.subset_of(&rays[k].zero));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (vals[p], -vals[q]);
                let mut v: Vec<i128> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(a, b)| vq * a + vp * b)
                    .collect();
                primitive(&mut v);
                let mut zero = common;
                zero.set(ri);
                fresh.push(Ray { v, zero });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i] == 0 {
                r.zero.set(ri);
                kept.push(r);
            } else if vals[i] > 0 {
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    ConeGenerators {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_orthant() {
        let g = generators(&[vec![1, 0], vec![0, 1]], 2);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn halfspace_keeps_lineality() {
        let g = generators(&[vec![1, 1, 0]], 3);
        assert_eq!(g.lineality.len(), 2);
        assert_eq!(g.rays.len(), 1);
        assert!(dot(&g.rays[0], &[1, 1, 0]) > 0);
    }

    #[test]
    fn square_pyramid_apex_cone() {
        // Cone over a square: four generators, four facets.
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]];
        let g = generators(&rows, 3);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 4);
        for r in &g.rays {
            assert!(rows.iter().all(|h| dot(h, r) >= 0));
        }
    }

    #[test]
    fn redundant_constraint_is_harmless() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let g = generators(&rows, 2);
        assert_eq!(g.rays.len(), 2);
    }
}
