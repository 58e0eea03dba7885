//! Exact rational scalars and graded linear algebra over ℚ.
//!
//! Everything here is exact: row reduction never rounds, so rank and
//! nondegeneracy decisions are decisions, not estimates. Matrices act on
//! column vectors, so column `j` of a matrix is the coordinate image of
//! basis vector `e_j`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Range};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector over the canonical basis.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as an exact scalar. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational literal of the form `p` or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |why: &str| Error::Input(format!("malformed rational literal {text:?}: {why}"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// `acc += v` when `negate` is false, `acc -= v` otherwise.
pub fn add_signed(acc: &mut [Scalar], negate: bool, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if x.is_zero() {
            continue;
        }
        if negate {
            *a -= x;
        } else {
            *a += x;
        }
    }
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Element of ℤ₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Whether the Koszul factor `(-1)^{|a||b|}` is `-1`.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A ℤ₂-graded space with its basis in canonical order (even vectors first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    parities: Vec<Parity>,
}

impl GradedSpace {
    pub fn new(parities: Vec<Parity>) -> Result<Self> {
        if let Some(pos) = parities.windows(2).position(|w| w[0] == Parity::Odd && w[1] == Parity::Even) {
            return Err(Error::Input(format!(
                "basis is not in canonical order: odd vector {pos} precedes even vector {}; list all even basis vectors first",
                pos + 1
            )));
        }
        Ok(GradedSpace { parities })
    }

    pub fn from_counts(even: usize, odd: usize) -> Self {
        let mut parities = vec![Parity::Even; even];
        parities.extend(std::iter::repeat_n(Parity::Odd, odd));
        GradedSpace { parities }
    }

    /// Purely even space of dimension `n`.
    pub fn even(n: usize) -> Self {
        Self::from_counts(n, 0)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    /// Index range of the basis vectors of parity `p`.
    pub fn block(&self, p: Parity) -> Range<usize> {
        let e = self.even_dim();
        match p {
            Parity::Even => 0..e,
            Parity::Odd => e..self.dim(),
        }
    }

    /// Parity of a homogeneous vector; `None` if it mixes blocks. Zero counts as even.
    pub fn parity_of(&self, v: &[Scalar]) -> Option<Parity> {
        let even = self.block(Parity::Even).any(|i| !v[i].is_zero());
        let odd = self.block(Parity::Odd).any(|i| !v[i].is_zero());
        match (even, odd) {
            (true, true) => None,
            (false, true) => Some(Parity::Odd),
            _ => Some(Parity::Even),
        }
    }
}

/// Dense matrix over ℚ, row-major storage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: zeros(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {c}",
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let m = &self[(i, j)];
                if !m.is_zero() {
                    *o += m * x;
                }
            }
        }
        out
    }

    pub fn checked_mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok(self.mul_vec(v))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vec(c, &self.data),
        }
    }

    /// `self^n` for a square matrix; `n = 0` gives the identity.
    pub fn pow(&self, n: u32) -> Matrix {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut out = Matrix::identity(self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form and the pivot columns.
fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..a.cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..a.cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let d = &factor * &a[(r, j)];
                a[(i, j)] -= d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Dimension of the column space.
pub fn image_dim(m: &Matrix) -> usize {
    rank(m)
}

/// Null-space basis in the canonical form: one vector per free column, with a 1
/// in that column and zeros in the other free columns.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(m.cols);
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect()
}

/// Null space of `m`, as a subspace of an all-even space of dimension `cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace {
        ambient: GradedSpace::even(m.cols),
        basis: kernel_basis(m),
    }
}

/// Null space of a parity-preserving constraint matrix whose columns are indexed
/// by the basis of `space`. The kernel is solved separately on the even and odd
/// column blocks, so every basis vector is homogeneous.
pub fn kernel_graded(space: &GradedSpace, m: &Matrix) -> Result<Subspace> {
    if m.cols != space.dim() {
        return Err(Error::Dimension(format!(
            "constraint matrix has {} columns but the space has dimension {}",
            m.cols,
            space.dim()
        )));
    }
    let mut basis = Vec::new();
    for p in Parity::BOTH {
        let block = space.block(p);
        let sub = Matrix::from_fn(m.rows, block.len(), |i, j| m[(i, block.start + j)].clone());
        for v in kernel_basis(&sub) {
            let mut full = zeros(space.dim());
            for (j, x) in v.into_iter().enumerate() {
                full[block.start + j] = x;
            }
            basis.push(full);
        }
    }
    if basis.len() + rank(m) != m.cols {
        return Err(Error::Input(
            "constraint system is not parity-preserving; its kernel is not graded".into(),
        ));
    }
    Ok(Subspace {
        ambient: space.clone(),
        basis,
    })
}

/// Solves `m x = b`, returning the solution with every free variable set to zero,
/// or `None` if the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vector>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = zeros(m.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols)].clone();
    }
    Ok(Some(x))
}

/// Exact inverse, or `None` when `m` is singular or not square.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
}

/// Whether `m` maps each parity block of `space` into itself.
pub fn is_even_map(space: &GradedSpace, m: &Matrix) -> Result<bool> {
    if !m.is_square() || m.rows != space.dim() {
        return Err(Error::Dimension(format!(
            "expected a {0}x{0} matrix, got {1}x{2}",
            space.dim(),
            m.rows,
            m.cols
        )));
    }
    Ok((0..m.rows).all(|i| {
        (0..m.cols).all(|j| space.parity(i) == space.parity(j) || m[(i, j)].is_zero())
    }))
}

/// A subspace given by a basis of homogeneous, linearly independent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: GradedSpace,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: &GradedSpace) -> Self {
        Subspace {
            ambient: ambient.clone(),
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: &GradedSpace) -> Self {
        Subspace {
            ambient: ambient.clone(),
            basis: (0..ambient.dim()).map(|i| unit(ambient.dim(), i)).collect(),
        }
    }

    /// Smallest graded subspace containing `vectors`: each vector is split into
    /// its even and odd components and each block is reduced independently.
    pub fn span(ambient: &GradedSpace, vectors: &[Vector]) -> Self {
        let n = ambient.dim();
        let mut basis = Vec::new();
        for p in Parity::BOTH {
            let block = ambient.block(p);
            let rows: Vec<Vector> = vectors
                .iter()
                .map(|v| v[block.clone()].to_vec())
                .filter(|v| !is_zero_vec(v))
                .collect();
            if rows.is_empty() {
                continue;
            }
            let m = Matrix::from_rows(rows).expect("rows share the block length");
            let (r, pivots) = rref(&m);
            for row in 0..pivots.len() {
                let mut full = zeros(n);
                for (j, x) in r.row(row).iter().enumerate() {
                    full[block.start + j] = x.clone();
                }
                basis.push(full);
            }
        }
        Subspace {
            ambient: ambient.clone(),
            basis,
        }
    }

    pub fn ambient(&self) -> &GradedSpace {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if is_zero_vec(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(rows).expect("vectors share the ambient dimension");
        rank(&m) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Equality as subspaces (independent of the chosen bases).
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }
}

/// Largest absolute numerator or denominator among `values`.
pub fn height<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values
        .into_iter()
        .map(|v| v.numer().abs().max(v.denom().clone()))
        .max()
        .unwrap_or_else(BigInt::one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn solve_examples() {
        let x = solve(&Matrix::identity(2), &[int(3), frac(5, 2)]).unwrap();
        assert_eq!(x, Some(vec![int(3), frac(5, 2)]));
        assert_eq!(solve(&m(&[&[1, 1], &[2, 2]]), &[int(1), int(3)]).unwrap(), None);
        assert_eq!(solve(&m(&[&[2]]), &[int(1)]).unwrap(), Some(vec![frac(1, 2)]));
        assert!(matches!(solve(&m(&[&[2]]), &[int(1), int(2)]), Err(Error::Dimension(_))));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::zeros(2, 2)).dim(), 2);
        assert_eq!(kernel(&Matrix::identity(3)).dim(), 0);
        // x + 2y = 0 => (-2, 1)
        let k = kernel(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.basis(), &[vec![int(-2), int(1)]]);
    }

    #[test]
    fn image_dim_examples() {
        assert_eq!(image_dim(&Matrix::identity(3)), 3);
        assert_eq!(image_dim(&Matrix::zeros(3, 2)), 0);
        assert_eq!(image_dim(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn even_map_examples() {
        let sp = GradedSpace::from_counts(1, 1);
        assert!(is_even_map(&sp, &Matrix::diagonal(&[int(3), int(-1)])).unwrap());
        assert!(!is_even_map(&sp, &m(&[&[1, 1], &[0, 1]])).unwrap());
        let sp3 = GradedSpace::from_counts(2, 1);
        assert!(is_even_map(&sp3, &m(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]])).unwrap());
        assert!(is_even_map(&sp3, &Matrix::identity(2)).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&Matrix::identity(3)), Some(Matrix::identity(3)));
        assert_eq!(invert(&m(&[&[2]])), Some(Matrix::from_rows(vec![vec![frac(1, 2)]]).unwrap()));
        assert_eq!(invert(&m(&[&[1, 1], &[2, 2]])), None);
        assert_eq!(invert(&Matrix::zeros(0, 0)), Some(Matrix::zeros(0, 0)));
    }

    #[test]
    fn graded_space_rejects_non_canonical_order() {
        assert!(GradedSpace::new(vec![Parity::Odd, Parity::Even]).is_err());
        let sp = GradedSpace::new(vec![Parity::Even, Parity::Odd, Parity::Odd]).unwrap();
        assert_eq!(sp.block(Parity::Odd), 1..3);
    }

    #[test]
    fn graded_kernel_is_homogeneous() {
        let sp = GradedSpace::from_counts(1, 1);
        let k = kernel_graded(&sp, &Matrix::zeros(1, 2)).unwrap();
        assert_eq!(k.dim(), 2);
        assert!(k.basis().iter().all(|v| sp.parity_of(v).is_some()));
        // x_even + x_odd = 0 mixes the blocks
        assert!(kernel_graded(&sp, &m(&[&[1, 1]])).is_err());
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-4").unwrap(), int(-4));
        assert_eq!(parse_scalar("2/-4").unwrap(), frac(-1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
    }

    #[test]
    fn span_splits_blocks() {
        let sp = GradedSpace::from_counts(1, 1);
        let s = Subspace::span(&sp, &[vec![int(1), int(1)]]);
        assert_eq!(s.dim(), 2);
        assert!(s.same_as(&Subspace::whole(&sp)));
    }
}
