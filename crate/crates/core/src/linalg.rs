//! Small exact linear algebra: integer matrices, Hermite normal form and
//! integer linear systems, rational elimination, and division-free
//! characteristic polynomials over [`Scalar`].

use num::{BigInt, Integer, One, Signed, Zero};

use crate::scalar::Scalar;
use crate::upoly::Rational;

/// A dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds from rows; returns `None` if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| **a != 0)
                    .fold(Rational::zero(), |acc, (a, b)| acc + b * Rational::from_integer((*a).into()))
            })
            .collect()
    }

    pub fn apply_scalar(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| **a != 0)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + b.mul_int(*a))
            })
            .collect()
    }

    /// Inverse over the integers, if the matrix is unimodular.
    pub fn inverse(&self) -> Option<IntMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = self.row(i).iter().map(|&x| Rational::from_integer(x.into())).collect();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x = &*x / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..2 * n {
                        let sub = &f * &a[col][c];
                        a[r][c] -= sub;
                    }
                }
            }
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = &a[i][n + j];
                if !x.is_integer() {
                    return None;
                }
                inv[(i, j)] = i64::try_from(x.to_integer()).ok()?;
            }
        }
        Some(inv)
    }

    pub fn pow(&self, k: usize) -> IntMatrix {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rational(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, &y)| acc + x * Rational::from_integer(y.into()))
}

pub fn dot_scalar(a: &[Scalar], b: &[i64]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(_, y)| **y != 0)
        .fold(Scalar::zero(), |acc, (x, &y)| acc + x.mul_int(y))
}

/// Row-style Hermite normal form: returns `(h, u)` with `u * m = h`, `u`
/// unimodular and `h` in row echelon form with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`.
pub fn hermite(m: &[Vec<BigInt>], cols: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rows = m.len();
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclid on column `col` among rows pivot_row..
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !h[r][col].is_zero()
                    && best.is_none_or(|b| h[r][col].abs() < h[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                for c in 0..cols {
                    let t = &q * &h[pivot_row][c];
                    h[r][c] -= t;
                }
                for c in 0..rows {
                    let t = &q * &u[pivot_row][c];
                    u[r][c] -= t;
                }
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            for x in h[pivot_row].iter_mut() {
                *x = -&*x;
            }
            for x in u[pivot_row].iter_mut() {
                *x = -&*x;
            }
        }
        for r in 0..pivot_row {
            let q = h[r][col].div_floor(&h[pivot_row][col]);
            if q.is_zero() {
                continue;
            }
            for c in 0..cols {
                let t = &q * &h[pivot_row][c];
                h[r][c] -= t;
            }
            for c in 0..rows {
                let t = &q * &u[pivot_row][c];
                u[r][c] -= t;
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

fn pivots(h: &[Vec<BigInt>]) -> Vec<(usize, usize)> {
    h.iter()
        .enumerate()
        .filter_map(|(r, row)| row.iter().position(|x| !x.is_zero()).map(|c| (r, c)))
        .collect()
}

/// Solves `a x = b` over the integers (`a` is `m × n`).
///
/// The returned solution is canonical: writing the solution set as
/// `x0 + L`, `x` is reduced against the Hermite basis of the kernel lattice
/// `L`, so each kernel pivot coordinate lies in `[0, pivot)`.
pub fn solve_integer(a: &[Vec<i64>], b: &[i64], n: usize) -> Option<Vec<i64>> {
    let m = a.len();
    assert_eq!(m, b.len());
    // transpose: n × m
    let at: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..m).map(|i| BigInt::from(a[i][j])).collect())
        .collect();
    let (h, u) = hermite(&at, m);
    // A Uᵀ = Hᵀ, so x = Uᵀ y with Hᵀ y = b.
    let piv = pivots(&h);
    let rank = piv.len();
    let mut y: Vec<BigInt> = vec![BigInt::zero(); n];
    for (k, &(r, c)) in piv.iter().enumerate() {
        debug_assert_eq!(r, k);
        let mut rhs = BigInt::from(b[c]);
        for (j, yj) in y.iter().enumerate().take(k) {
            rhs -= &h[j][c] * yj;
        }
        let (q, rem) = rhs.div_rem(&h[k][c]);
        if !rem.is_zero() {
            return None;
        }
        y[k] = q;
    }
    for (i, &bi) in b.iter().enumerate() {
        let lhs: BigInt = (0..rank).map(|j| &h[j][i] * &y[j]).sum();
        if lhs != BigInt::from(bi) {
            return None;
        }
    }
    let mut x: Vec<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| &u[j][i] * &y[j]).sum())
        .collect();
    // kernel vectors are rows rank.. of u
    let kernel: Vec<Vec<BigInt>> = u[rank..].to_vec();
    if !kernel.is_empty() {
        let (kh, _) = hermite(&kernel, n);
        for (r, c) in pivots(&kh) {
            let q = x[c].div_floor(&kh[r][c]);
            for (i, xi) in x.iter_mut().enumerate() {
                *xi -= &q * &kh[r][i];
            }
        }
    }
    x.into_iter().map(|v| i64::try_from(v).ok()).collect()
}

/// Reduced row echelon form over the rationals; returns the rank.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[rank][col];
            for c in col..cols {
                let t = &f * &a[rank][c];
                a[r][c] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients `c` with `Σ c_i basis_i = target`, assuming the basis is
/// linearly independent; `None` if the target is outside the span.
pub fn express_in_basis(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = target.len();
    // augmented n × (k + 1) system
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|v| Rational::from_integer(v[i].into())).collect();
            row.push(Rational::from_integer(target[i].into()));
            row
        })
        .collect();
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..k {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pv = a[rank][col].clone();
        for x in a[rank].iter_mut() {
            *x = &*x / &pv;
        }
        for r in 0..n {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=k {
                    let t = &f * &a[rank][c];
                    a[r][c] -= t;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if a[rank..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut out = vec![Rational::zero(); k];
    for (r, &c) in pivot_cols.iter().enumerate() {
        out[c] = a[r][k].clone();
    }
    Some(out)
}

/// A square matrix over [`Scalar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    n: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(ScalarMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(n: usize) -> Self {
        ScalarMatrix {
            n,
            data: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.n.max(1)).map(<[Scalar]>::to_vec).take(self.n).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        ScalarMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<E>(&self, f: impl Fn(&Scalar) -> Result<Scalar, E>) -> Result<Self, E> {
        Ok(ScalarMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += &t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.n, other.n);
        ScalarMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub_scalar_identity(&self, c: &Scalar) -> ScalarMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m[(i, i)] = &m[(i, i)] - c;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)].is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<Scalar> {
        (0..self.n).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn block_diagonal(a: &ScalarMatrix, b: &ScalarMatrix) -> ScalarMatrix {
        let n = a.n + b.n;
        let mut m = Self::zeros(n);
        for i in 0..a.n {
            for j in 0..a.n {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                m[(a.n + i, a.n + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn kronecker(a: &ScalarMatrix, b: &ScalarMatrix) -> ScalarMatrix {
        let n = a.n * b.n;
        let mut m = Self::zeros(n);
        for i in 0..a.n {
            for j in 0..a.n {
                for k in 0..b.n {
                    for l in 0..b.n {
                        m[(i * b.n + k, j * b.n + l)] = &a[(i, j)] * &b[(k, l)];
                    }
                }
            }
        }
        m
    }

    /// `a ⊗ 1 + 1 ⊗ b`.
    pub fn kronecker_sum(a: &ScalarMatrix, b: &ScalarMatrix) -> ScalarMatrix {
        let ia = Self::identity(a.n);
        let ib = Self::identity(b.n);
        Self::kronecker(a, &ib).add(&Self::kronecker(&ia, b))
    }

    /// Coefficients of `det(x·1 − m)`, highest degree first (leading `1`).
    ///
    /// Berkowitz's algorithm; division free, so it is valid over family rings.
    pub fn charpoly(&self) -> Vec<Scalar> {
        let n = self.n;
        if n == 0 {
            return vec![Scalar::one()];
        }
        let mut v = vec![Scalar::one(), -&self[(0, 0)]];
        for r in 1..n {
            // leading (r+1)×(r+1) block [[M, C], [R, a]]
            let a = &self[(r, r)];
            let col: Vec<Scalar> = (0..r).map(|i| self[(i, r)].clone()).collect();
            let row: Vec<Scalar> = (0..r).map(|j| self[(r, j)].clone()).collect();
            let mut t = vec![Scalar::one(), -a];
            let mut mc = col;
            for _ in 0..r {
                let rc: Scalar = row.iter().zip(&mc).map(|(x, y)| x * y).sum();
                t.push(-rc);
                // M · mc
                mc = (0..r)
                    .map(|i| (0..r).map(|j| &self[(i, j)] * &mc[j]).sum())
                    .collect();
            }
            let mut next = vec![Scalar::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate() {
                    if j <= i && i - j < t.len() {
                        *slot += &(&t[i - j] * vj);
                    }
                }
            }
            v = next;
        }
        v
    }
}

impl std::ops::Index<(usize, usize)> for ScalarMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ScalarMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.n + j]
    }
}

/// Evaluates a polynomial (coefficients highest degree first) at a matrix.
pub fn eval_poly_at_matrix(coeffs: &[Scalar], m: &ScalarMatrix) -> ScalarMatrix {
    let n = m.dim();
    let mut acc = ScalarMatrix::zeros(n);
    for c in coeffs {
        acc = acc.mul(m);
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn berkowitz_small_cases() {
        let m = ScalarMatrix::from_rows(vec![vec![s(2), s(1)], vec![s(0), s(3)]]).unwrap();
        assert_eq!(m.charpoly(), vec![s(1), s(-5), s(6)]);
        let m = ScalarMatrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(4), s(5), s(6)],
            vec![s(7), s(8), s(10)],
        ])
        .unwrap();
        // det(xI - M) = x^3 - 16x^2 - 12x + 3  (trace 16, det -3)
        assert_eq!(m.charpoly(), vec![s(1), s(-16), s(-12), s(3)]);
    }

    #[test]
    fn charpoly_annihilates_matrix() {
        let m = ScalarMatrix::from_rows(vec![
            vec![s(0), s(1), s(-2), s(3)],
            vec![s(5), s(1), s(0), s(1)],
            vec![s(-1), s(4), s(2), s(2)],
            vec![s(1), s(1), s(1), s(-3)],
        ])
        .unwrap();
        assert!(eval_poly_at_matrix(&m.charpoly(), &m).is_zero());
    }

    #[test]
    fn integer_systems() {
        // x0 - x1 = 1, x1 - x2 = 1 : GL3 twisting system
        let a = vec![vec![1, -1, 0], vec![0, 1, -1]];
        assert_eq!(solve_integer(&a, &[1, 1], 3), Some(vec![0, -1, -2]));
        // 2x = 1 has no integer solution
        assert_eq!(solve_integer(&[vec![2]], &[1], 1), None);
        assert_eq!(solve_integer(&[vec![1]], &[1], 1), Some(vec![1]));
        // x + y = 1 in rank 2 with the type C2 second coroot
        let a = vec![vec![1, -1], vec![0, 1]];
        assert_eq!(solve_integer(&a, &[1, 1], 2), Some(vec![2, 1]));
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), IntMatrix::identity(2));
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(m.inverse().is_none());
    }

    #[test]
    fn basis_expansion() {
        let basis = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let c = express_in_basis(&basis, &[1, 0, -1]).unwrap();
        assert_eq!(c, vec![Rational::one(), Rational::one()]);
        assert!(express_in_basis(&basis, &[1, 0, 0]).is_none());
    }
}
