//! Integer matrices for the action on the abelianization, and signed
//! permutations for certifying finite matrix groups.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zero(n: usize) -> Self {
        IntegerMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[Vec<i64>]) -> Self {
        let n = columns.len();
        let mut m = Self::zero(n);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "column {j} has wrong length");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
            m.entries[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.n + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    /// Re-expresses the matrix in the basis `order[0], order[1], ...`.
    pub fn reorder(&self, order: &[usize]) -> IntegerMatrix {
        let mut m = Self::zero(self.n);
        for (i, &r) in order.iter().enumerate() {
            for (j, &c) in order.iter().enumerate() {
                m.set(i, j, self.get(r, c));
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    /// Upper triangular with ones on the diagonal.
    pub fn is_upper_unipotent(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.get(i, i) == 1)
    }

    pub fn is_signed_diagonal(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x == 1 || x == -1
                } else {
                    x == 0
                }
            })
        })
    }

    /// Nonzero entries off the diagonal.
    pub fn off_diagonal(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.get(i, j) != 0 {
                    out.push((i, j, self.get(i, j)));
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = self.rows().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut m = IntegerMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        m
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix sending basis vector `e_j` to `sign[j] · e_{image[j]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    image: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            image: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    /// Returns `None` unless every column has exactly one nonzero entry, ±1,
    /// in distinct rows.
    pub fn from_matrix(m: &IntegerMatrix) -> Option<Self> {
        let n = m.size();
        let mut image = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for j in 0..n {
            let nonzero: Vec<usize> = (0..n).filter(|&i| m.get(i, j) != 0).collect();
            let [i] = nonzero[..] else { return None };
            let x = m.get(i, j);
            if (x != 1 && x != -1) || used[i] {
                return None;
            }
            used[i] = true;
            image.push(i);
            sign.push(x as i8);
        }
        Some(SignedPermutation { image, sign })
    }

    pub fn to_matrix(&self) -> IntegerMatrix {
        let n = self.image.len();
        let mut m = IntegerMatrix::zero(n);
        for j in 0..n {
            m.set(self.image[j], j, self.sign[j] as i64);
        }
        m
    }

    /// `self · other` as matrices.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let image = other.image.iter().map(|&k| self.image[k]).collect();
        let sign = other
            .image
            .iter()
            .zip(&other.sign)
            .map(|(&k, &s)| s * self.sign[k])
            .collect();
        SignedPermutation { image, sign }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j) && self.sign.iter().all(|&s| s == 1)
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.compose(self);
            k += 1;
        }
        k
    }
}

/// All elements of the group generated by `gens`, by breadth-first closure.
/// The ambient signed permutation group is finite, so this terminates.
pub fn signed_permutation_closure(n: usize, gens: &[SignedPermutation]) -> HashSet<SignedPermutation> {
    let mut seen = HashSet::new();
    let id = SignedPermutation::identity(n);
    let mut queue = VecDeque::from([id.clone()]);
    seen.insert(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}
