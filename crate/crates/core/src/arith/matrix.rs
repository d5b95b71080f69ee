//! Dense exact matrices, Gauss-Jordan elimination over fields and
//! fraction-free (Bareiss) elimination over polynomial entries.

use std::fmt;

use super::{MultiPoly, RatFunc, Scalar};
use crate::exec::{self, Strategy};
use crate::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<S: Clone> Matrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix with the given vectors as columns, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::<S>::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c).clone() + a.clone() * b.clone();
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(S::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc + a.clone() * b.clone() })
            })
            .collect())
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Dimension("vstack with different column counts".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols, data })
    }

    pub fn hstack(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack with different row counts".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn echelon(&self) -> Echelon<S> {
        S::echelon(self)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        self.echelon().kernel()
    }

    /// Solve `self * x = b`; `None` when inconsistent. Free variables are 0.
    pub fn solve(&self, b: &[S]) -> Result<Option<Vec<S>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()]))?;
        let ech = aug.echelon();
        if ech.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![S::zero(); self.cols];
        for (i, &c) in ech.pivots.iter().enumerate() {
            x[c] = ech.reduced.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<S>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let ech = self.hstack(&Matrix::identity(n)).ok()?.echelon();
        if ech.rank() < n || ech.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| ech.reduced.get(i, n + j).clone()))
    }

    /// Determinant via elimination; entries must come from a field.
    pub fn det(&self) -> Result<S> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("determinant of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a.get(r, c).try_inv().is_some()) else {
                return Ok(S::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            let inv = piv.try_inv().expect("pivot invertible");
            det = det * piv;
            for r in (c + 1)..n {
                let f = a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                let f = f * inv.clone();
                for j in c..n {
                    let v = a.get(r, j).clone() - f.clone() * a.get(c, j).clone();
                    a.set(r, j, v);
                }
            }
        }
        Ok(det)
    }
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    /// RREF: pivot entries are one and pivot columns are otherwise zero.
    /// Only the first `rank` rows are meaningful.
    pub reduced: Matrix<S>,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.reduced.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.reduced.cols()).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn kernel(&self) -> Vec<Vec<S>> {
        let n = self.reduced.cols();
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![S::zero(); n];
                v[f] = S::one();
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced.get(i, f).clone();
                }
                v
            })
            .collect()
    }
}

/// Gauss-Jordan elimination choosing the first invertible entry of each
/// column as pivot.
pub fn gaussian_echelon<S: Scalar>(m: &Matrix<S>) -> Echelon<S> {
    gaussian_echelon_with(m, Strategy::default())
}

pub fn gaussian_echelon_with<S: Scalar>(m: &Matrix<S>, strategy: Strategy) -> Echelon<S> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a.get(i, c).try_inv().is_some()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).try_inv().expect("pivot invertible");
        let pivot_row: Vec<S> = a.row(r).iter().map(|x| x.clone() * inv.clone()).collect();
        let pr = r;
        exec::for_each_row(strategy, &mut a.data, cols, |i, row| {
            if i == pr {
                row.clone_from_slice(&pivot_row);
                return;
            }
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].clone() - f.clone() * pivot_row[j].clone();
                }
            }
        });
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

/// Multiply each row by the product of its distinct denominators so that
/// all entries become polynomials. Returns the polynomial matrix and the
/// row multipliers.
fn clear_row_denominators<F: Scalar>(m: &Matrix<RatFunc<F>>) -> (Matrix<MultiPoly<F>>, Vec<MultiPoly<F>>) {
    let mut out = Vec::with_capacity(m.rows * m.cols);
    let mut mults = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut dens: Vec<&MultiPoly<F>> = Vec::new();
        for x in m.row(r) {
            if x.is_zero() || x.is_polynomial() {
                continue;
            }
            if !dens.iter().any(|d| *d == x.denominator()) {
                dens.push(x.denominator());
            }
        }
        let lcm = dens.iter().fold(MultiPoly::one(), |acc, d| &acc * *d);
        for x in m.row(r) {
            if x.is_zero() {
                out.push(MultiPoly::zero());
            } else {
                let cof = lcm.div_exact(x.denominator()).expect("denominator divides row multiplier");
                out.push(x.numerator() * &cof);
            }
        }
        mults.push(lcm);
    }
    (Matrix { rows: m.rows, cols: m.cols, data: out }, mults)
}

/// Fraction-free Gauss-Jordan on a polynomial matrix, in place. Every
/// division is exact; on return the pivot rows hold `D * RREF` with `D`
/// the last pivot. Returns `(pivot columns, D)`.
fn bareiss_jordan<F: Scalar>(a: &mut Matrix<MultiPoly<F>>) -> (Vec<usize>, MultiPoly<F>) {
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = MultiPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // smallest nonzero candidate keeps intermediate growth down
        let Some(p) = (r..rows).filter(|&i| !a.get(i, c).is_zero()).min_by_key(|&i| a.get(i, c).len()) else {
            continue;
        };
        a.swap_rows(p, r);
        let piv = a.get(r, c).clone();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let t = &(&piv * a.get(i, j)) - &(&f * a.get(r, j));
                let v = t.div_exact(&prev).expect("fraction-free step divides exactly");
                a.set(i, j, v);
            }
            a.set(i, c, MultiPoly::zero());
        }
        // earlier pivot entries now equal `piv`
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (pivots, prev)
}

/// Reduced echelon form over rational functions computed without
/// intermediate fractions.
pub fn fraction_free_echelon<F: Scalar>(m: &Matrix<RatFunc<F>>) -> Echelon<RatFunc<F>> {
    let (mut p, _) = clear_row_denominators(m);
    let (pivots, d) = bareiss_jordan(&mut p);
    let mut reduced = Matrix::zeros(m.rows, m.cols);
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..m.cols {
            let v = if j == pc {
                RatFunc::one()
            } else if pivots.contains(&j) {
                RatFunc::zero()
            } else {
                RatFunc::new(p.get(i, j).clone(), d.clone())
            };
            reduced.set(i, j, v);
        }
    }
    Echelon { reduced, pivots }
}

/// Exact determinant of a square matrix of rational functions.
pub fn det_fraction_free<F: Scalar>(m: &Matrix<RatFunc<F>>) -> Result<RatFunc<F>> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!("determinant of {}x{} matrix", m.rows, m.cols)));
    }
    if m.rows == 0 {
        return Ok(RatFunc::one());
    }
    let (mut p, mults) = clear_row_denominators(m);
    let n = p.rows;
    let mut prev = MultiPoly::one();
    let mut sign = false;
    for c in 0..n {
        let Some(r) = (c..n).filter(|&i| !p.get(i, c).is_zero()).min_by_key(|&i| p.get(i, c).len()) else {
            return Ok(RatFunc::zero());
        };
        if r != c {
            p.swap_rows(r, c);
            sign = !sign;
        }
        let piv = p.get(c, c).clone();
        for i in (c + 1)..n {
            let f = p.get(i, c).clone();
            for j in (c + 1)..n {
                let t = &(&piv * p.get(i, j)) - &(&f * p.get(c, j));
                p.set(i, j, t.div_exact(&prev).expect("Bareiss step divides exactly"));
            }
            p.set(i, c, MultiPoly::zero());
        }
        prev = piv;
    }
    let den = mults.iter().fold(MultiPoly::one(), |acc, d| &acc * d);
    let det = RatFunc::new(prev, den);
    Ok(if sign { -det } else { det })
}
