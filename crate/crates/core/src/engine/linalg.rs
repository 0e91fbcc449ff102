//! Row spaces over a prime field, kept in reduced row echelon form.

use std::fmt;

/// Modular inverse for a prime modulus.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    // p is tiny, scan
    (1..p)
        .find(|&x| (a as u64 * x as u64) % p as u64 == 1)
        .expect("nonzero element of F_p")
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// A subspace of `F_p^n` as a reduced row echelon basis; equality of values
/// is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u32,
    ambient_dim: usize,
    rows: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero(p: u32, ambient_dim: usize) -> Self {
        Subspace {
            p,
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<u32>>>(
        p: u32,
        ambient_dim: usize,
        vecs: I,
    ) -> Self {
        let mut s = Subspace::zero(p, ambient_dim);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn pivot(row: &[u32]) -> Option<usize> {
        row.iter().position(|&x| x != 0)
    }

    fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        for row in &self.rows {
            let c = Self::pivot(row).unwrap();
            if v[c] != 0 {
                let factor = v[c]; // rows are normalized to pivot 1
                for (x, &r) in v.iter_mut().zip(row.iter()) {
                    *x = (*x + (self.p - factor) * r) % self.p;
                }
            }
        }
        v
    }

    /// Inserts a vector; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        debug_assert!(v.iter().all(|&x| x < self.p));
        let mut v = self.reduce(v);
        let Some(c) = Self::pivot(&v) else {
            return false;
        };
        let inv = inv_mod(v[c], self.p);
        for x in v.iter_mut() {
            *x = (*x as u64 * inv as u64 % self.p as u64) as u32;
        }
        // clear the new pivot column in the existing rows
        for row in &mut self.rows {
            let factor = row[c];
            if factor != 0 {
                for (r, &w) in row.iter_mut().zip(v.iter()) {
                    *r = (*r + (self.p - factor) * w) % self.p;
                }
            }
        }
        let at = self.rows.iter().position(|r| Self::pivot(r).unwrap() > c);
        self.rows.insert(at.unwrap_or(self.rows.len()), v);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Dimension of `self + other` without mutating either.
    pub fn dim_sum(&self, other: &Subspace) -> usize {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s.dim()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of F_{}^{})",
            self.dim(),
            self.p,
            self.ambient_dim
        )
    }
}
