use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point n ∈ Z^d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(d: usize) -> Self {
        LatticePoint(vec![0; d])
    }

    /// The unit vector e_k, with k counted from 1.
    pub fn unit(k: usize, d: usize) -> Self {
        let mut v = vec![0; d];
        v[k - 1] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn norm2(&self) -> f64 {
        self.0.iter().map(|&c| (c * c) as f64).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn norm_inf(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &LatticePoint) -> Self {
        LatticePoint(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &LatticePoint) -> Self {
        LatticePoint(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&c| c as f64).collect()
    }

    /// Swaps coordinates i and j (0-based).
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i, j);
        LatticePoint(v)
    }

    /// All points of the cube max|n_i| ≤ r in lexicographic order.
    pub fn cube(d: usize, r: i64) -> Vec<LatticePoint> {
        let mut out = vec![Vec::with_capacity(d)];
        for _ in 0..d {
            let mut next = Vec::with_capacity(out.len() * (2 * r as usize + 1));
            for p in &out {
                for c in -r..=r {
                    let mut q: Vec<i64> = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
            out = next;
        }
        out.into_iter().map(LatticePoint).collect()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

/// Finitely supported real function on Z^d. Zero values are never stored.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Sequence {
    d: usize,
    support: BTreeMap<LatticePoint, f64>,
}

impl Sequence {
    pub fn new(d: usize) -> Self {
        Sequence { d, support: BTreeMap::new() }
    }

    pub fn delta(n: LatticePoint) -> Self {
        let mut s = Sequence::new(n.dim());
        s.set(n, 1.0);
        s
    }

    /// Builds a sequence from (point, value) pairs, summing repeated points.
    pub fn from_pairs(d: usize, pairs: impl IntoIterator<Item = (LatticePoint, f64)>) -> Result<Self> {
        let mut s = Sequence::new(d);
        for (n, v) in pairs {
            if n.dim() != d {
                return Err(Error::Domain(format!("point {n} is not in Z^{d}")));
            }
            let cur = s.get(&n);
            s.set(n, cur + v);
        }
        Ok(s)
    }

    /// One dimensional sequence with values `vals` starting at index `start`.
    pub fn from_slice_1d(start: i64, vals: &[f64]) -> Self {
        let mut s = Sequence::new(1);
        for (i, &v) in vals.iter().enumerate() {
            s.set(LatticePoint(vec![start + i as i64]), v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, n: &LatticePoint) -> f64 {
        self.support.get(n).copied().unwrap_or(0.0)
    }

    pub fn set(&mut self, n: LatticePoint, v: f64) {
        debug_assert_eq!(n.dim(), self.d);
        if v == 0.0 {
            self.support.remove(&n);
        } else {
            self.support.insert(n, v);
        }
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Entries in lexicographic order of the lattice point.
    pub fn iter(&self) -> impl Iterator<Item = (&LatticePoint, f64)> + '_ {
        self.support.iter().map(|(k, v)| (k, *v))
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut s = Sequence::new(self.d);
        for (n, v) in self.iter() {
            s.set(n.clone(), c * v);
        }
        s
    }

    pub fn add(&self, o: &Sequence) -> Self {
        let mut s = self.clone();
        for (n, v) in o.iter() {
            let cur = s.get(n);
            s.set(n.clone(), cur + v);
        }
        s
    }

    pub fn shift(&self, by: &LatticePoint) -> Self {
        let mut s = Sequence::new(self.d);
        for (n, v) in self.iter() {
            s.set(n.add(by), v);
        }
        s
    }

    pub fn sum(&self) -> f64 {
        self.support.values().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.support.values().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest |n|∞ over the support.
    pub fn radius(&self) -> i64 {
        self.support.keys().map(|n| n.norm_inf()).max().unwrap_or(0)
    }
}
