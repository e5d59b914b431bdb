//! Integer matrices, row Hermite normal form and integer kernels.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rectangular matrix of arbitrary-precision integers, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged integer matrix");
        Self { rows: rows.len(), cols, entries: rows }
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i]
    }

    pub fn row_vecs(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j][i] = self.entries[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out.entries[i][j] += a * &o.entries[k][j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Entries as `i64`, or `None` on overflow.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.entries.iter().map(|r| r.iter().map(|x| x.to_i64()).collect()).collect()
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.entries[i].iter().all(Zero::is_zero)
    }

    /// Determinant of a square matrix (Bareiss fraction-free elimination).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }

    fn row_sub_mul(&mut self, target: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (t, s) = if target < src {
            let (lo, hi) = self.entries.split_at_mut(src);
            (&mut lo[target], &hi[0])
        } else {
            let (lo, hi) = self.entries.split_at_mut(target);
            (&mut hi[0], &lo[src])
        };
        for (x, y) in t.iter_mut().zip(s) {
            *x -= q * y;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.entries[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row Hermite normal form: returns `(H, U)` with `H = U·M`, `U` unimodular,
/// `H` in row echelon form with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, and zero rows last.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        loop {
            let Some(k) = (r..m.rows)
                .filter(|&i| !h.entries[i][c].is_zero())
                .min_by(|&a, &b| h.entries[a][c].abs().cmp(&h.entries[b][c].abs()))
            else {
                break;
            };
            h.entries.swap(k, r);
            u.entries.swap(k, r);
            let mut clean = true;
            for i in r + 1..m.rows {
                if h.entries[i][c].is_zero() {
                    continue;
                }
                let q = h.entries[i][c].div_floor(&h.entries[r][c]);
                h.row_sub_mul(i, r, &q);
                u.row_sub_mul(i, r, &q);
                if !h.entries[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.entries[r][c].is_zero() {
            continue;
        }
        if h.entries[r][c].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.entries[i][c].div_floor(&h.entries[r][c]);
            h.row_sub_mul(i, r, &q);
            u.row_sub_mul(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Rank of an integer matrix.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hnf(m);
    (0..h.rows).filter(|&i| !h.is_zero_row(i)).count()
}

/// The nonzero rows of the Hermite normal form of the lattice spanned by `vectors`.
pub fn lattice_hnf(dim: usize, vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (h, _) = hnf(&IntMatrix::from_rows(dim, vectors.to_vec()));
    (0..h.rows).filter(|&i| !h.is_zero_row(i)).map(|i| h.entries[i].clone()).collect()
}

/// A `ℤ`-basis of `{a : M·a = 0}`, in Hermite normal form. Empty iff the
/// kernel is trivial.
pub fn zkernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = m.cols;
    if n == 0 {
        return Vec::new();
    }
    let (h, u) = hnf(&m.transpose());
    let raw: Vec<Vec<BigInt>> =
        (0..n).filter(|&i| h.is_zero_row(i)).map(|i| u.entries[i].clone()).collect();
    lattice_hnf(n, &raw)
}

/// `zkernel` for small integer data.
pub fn zkernel_i64(cols: usize, rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    zkernel(&IntMatrix::from_i64_rows(cols, rows))
        .into_iter()
        .map(|v| v.iter().map(|x| x.to_i64().expect("kernel entry fits in i64")).collect())
        .collect()
}

/// Whether `v` lies in the lattice spanned by the rows of an echelon-form basis.
pub fn in_lattice(basis_hnf: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut rest = v.to_vec();
    for row in basis_hnf {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if rest[..p].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, r) = rest[p].div_rem(&row[p]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    rest.iter().all(Zero::is_zero)
}
