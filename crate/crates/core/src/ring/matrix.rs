use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

use super::poly::{Polynomial, Ring};
use super::scalar::Scalar;

/// An element of the free module `O^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingVector {
    ring: Ring,
    entries: Vec<Polynomial>,
}

impl RingVector {
    pub fn new(ring: &Ring, entries: Vec<Polynomial>) -> Result<RingVector> {
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::SessionMismatch);
        }
        Ok(RingVector {
            ring: ring.clone(),
            entries,
        })
    }

    pub fn zero(ring: &Ring, rank: usize) -> RingVector {
        RingVector {
            ring: ring.clone(),
            entries: vec![ring.zero(); rank],
        }
    }

    pub fn unit(ring: &Ring, rank: usize, index: usize) -> RingVector {
        let mut v = RingVector::zero(ring, rank);
        v.entries[index] = ring.one();
        v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<Polynomial> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    fn check(&self, other: &RingVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SessionMismatch);
        }
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingVector) -> Result<RingVector> {
        self.check(other)?;
        Ok(RingVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &RingVector) -> Result<RingVector> {
        self.check(other)?;
        Ok(RingVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul_poly(&self, p: &Polynomial) -> RingVector {
        RingVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> RingVector {
        RingVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Inner product `sum self_i * other_i`.
    pub fn dot(&self, other: &RingVector) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(self.ring.zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    pub fn as_column(&self) -> RingMatrix {
        RingMatrix::from_columns(&self.ring, self.rank(), std::slice::from_ref(self))
            .expect("single column")
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Row-major matrix of polynomials. As a map it sends `O^cols -> O^rows`;
/// as a generating set its columns are the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl RingMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> RingMatrix {
        RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> RingMatrix {
        let mut m = RingMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// `c * Id`.
    pub fn scalar_diagonal(ring: &Ring, n: usize, p: &Polynomial) -> RingMatrix {
        let mut m = RingMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<RingMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Shape("rows of unequal length".into()));
            }
            for p in row {
                if p.ring() != ring {
                    return Err(Error::SessionMismatch);
                }
                data.push(p);
            }
        }
        Ok(RingMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors; `rows` fixes the shape
    /// when the list is empty.
    pub fn from_columns(ring: &Ring, rows: usize, cols: &[RingVector]) -> Result<RingMatrix> {
        let mut m = RingMatrix::zero(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.ring() != ring {
                return Err(Error::SessionMismatch);
            }
            if c.rank() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    found: c.rank(),
                });
            }
            for (i, e) in c.entries().iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> RingVector {
        RingVector::new(&self.ring, (0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .expect("same ring")
    }

    pub fn columns(&self) -> Vec<RingVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> RingVector {
        RingVector::new(&self.ring, self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .expect("same ring")
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut t = RingMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn try_mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ring != other.ring {
            return Err(Error::SessionMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RingMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_mul_vector(&self, v: &RingVector) -> Result<RingVector> {
        Ok(self.try_mul(&v.as_column())?.column(0))
    }

    fn check_same_shape(&self, other: &RingMatrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SessionMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(RingMatrix { data, ..self.clone() })
    }

    pub fn try_sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(RingMatrix { data, ..self.clone() })
    }

    pub fn mul_poly(&self, p: &Polynomial) -> RingMatrix {
        RingMatrix {
            data: self.data.iter().map(|e| e * p).collect(),
            ..self.clone()
        }
    }

    /// Columns of `self` followed by those of `other`.
    pub fn hconcat(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.rows != other.rows {
            return Err(Error::Shape("hconcat with different row counts".into()));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        RingMatrix::from_columns(&self.ring, self.rows, &cols)
    }

    /// Block diagonal matrix.
    pub fn direct_sum(&self, other: &RingMatrix) -> RingMatrix {
        let mut m = RingMatrix::zero(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> RingMatrix {
        let mut m = RingMatrix::zero(&self.ring, rows.len(), self.cols);
        for (a, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                m.set(a, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> RingMatrix {
        let mut m = RingMatrix::zero(&self.ring, self.rows, cols.len());
        for i in 0..self.rows {
            for (b, &j) in cols.iter().enumerate() {
                m.set(i, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Exact determinant by cofactor expansion with memoised minors.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let all: Vec<usize> = (0..self.cols).collect();
        let mut memo = HashMap::new();
        Ok(self.minor_det(0, &all, &mut memo))
    }

    /// Determinant of the submatrix on `rows x cols` (equal lengths).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let sub = self.select_rows(rows).select_columns(cols);
        sub.det().expect("square minor")
    }

    fn minor_det(
        &self,
        row: usize,
        cols: &[usize],
        memo: &mut HashMap<Vec<usize>, Polynomial>,
    ) -> Polynomial {
        if cols.is_empty() {
            return self.ring.one();
        }
        if let Some(v) = memo.get(cols) {
            return v.clone();
        }
        let mut acc = self.ring.zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.minor_det(row + 1, &rest, memo);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        memo.insert(cols.to_vec(), acc.clone());
        acc
    }

    /// The `k`-th exterior power in the lexicographically ordered basis of
    /// `k`-subsets: entry `(S, T)` is the minor on rows `S`, columns `T`.
    pub fn exterior_power(&self, k: usize) -> RingMatrix {
        let rs = subsets(self.rows, k);
        let cs = subsets(self.cols, k);
        let mut m = RingMatrix::zero(&self.ring, rs.len(), cs.len());
        for (a, s) in rs.iter().enumerate() {
            for (b, t) in cs.iter().enumerate() {
                m.set(a, b, self.minor(s, t));
            }
        }
        m
    }

    /// Moves every entry into `ring` (same variables and field).
    pub fn to_ring(&self, ring: &Ring) -> Result<RingMatrix> {
        let data = self.data.iter().map(|p| p.to_ring(ring)).collect::<Result<_>>()?;
        Ok(RingMatrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}
