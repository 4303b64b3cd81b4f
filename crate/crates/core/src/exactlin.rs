//! Dense linear algebra over the rationals.
//!
//! Elimination is fraction-free: each row is first cleared of denominators,
//! then reduced with Bareiss' update so intermediate entries stay integral
//! minors of the input. Only the final back-substitution divides.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Builds `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds from nested rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let owned = rows
            .iter()
            .map(|row| row.iter().map(|&x| int(x)).collect())
            .collect();
        Self::from_rows(owned).expect("rectangular literal")
    }

    /// Column vector (n x 1).
    pub fn column(v: &[Rat]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.entries
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
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
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        Ok(self.mul(&Self::column(v))?.entries)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        Ok(Self::from_fn(self.rows, cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        }))
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rat).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Integer row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn bareiss(m: &RatMatrix) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|r| clear_denominators(m.row(r))).collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m.rows {
            for j in c + 1..m.cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Reduced row echelon form: rows with leading 1 in each pivot column and
/// zeros above and below it. Zero rows are dropped.
pub fn rref(m: &RatMatrix) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let ech = bareiss(m);
    let mut rows: Vec<Vec<Rat>> = ech
        .rows
        .into_iter()
        .map(|row| row.into_iter().map(Rat::from_integer).collect())
        .collect();
    let pivots = ech.pivots;
    for k in (0..pivots.len()).rev() {
        let pc = pivots[k];
        let lead = rows[k][pc].clone();
        for x in rows[k].iter_mut() {
            *x /= &lead;
        }
        let (above, rest) = rows.split_at_mut(k);
        let pivot_row = &rest[0];
        for row in above {
            let factor = row[pc].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in row[pc..].iter_mut().zip(&pivot_row[pc..]) {
                *x -= &factor * p;
            }
        }
    }
    (rows, pivots)
}

pub fn rank(m: &RatMatrix) -> usize {
    bareiss(m).pivots.len()
}

/// Returns some `x` with `a * x = b`, or `Ok(None)` when the system is inconsistent.
pub fn solve(a: &RatMatrix, b: &RatMatrix) -> Result<Option<RatMatrix>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve: a has {} rows, b has {}",
            a.rows, b.rows
        )));
    }
    let aug = a.hstack(b)?;
    let (rows, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = RatMatrix::zeros(a.cols, b.cols);
    for (k, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x[(pc, j)] = rows[k][a.cols + j].clone();
        }
    }
    Ok(Some(x))
}

/// Basis of the right null space, as plain vectors.
pub fn kernel_vectors(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let (rows, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rat::zero(); m.cols];
            v[free] = Rat::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[k][free].clone();
            }
            v
        })
        .collect()
}

/// Basis of the right null space, each vector as a column matrix.
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatMatrix> {
    kernel_vectors(m)
        .iter()
        .map(|v| RatMatrix::column(v))
        .collect()
}

/// Basis (in reduced echelon form) of the span of `vectors`, each of length `len`.
pub fn span_basis(vectors: &[Vec<Rat>], len: usize) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m =
        RatMatrix::new(vectors.len(), len, vectors.concat()).expect("vectors must share a length");
    rref(&m).0
}

pub fn inverse(m: &RatMatrix) -> Result<Option<RatMatrix>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(
            "inverse of non-square matrix".into(),
        ));
    }
    if rank(m) < m.rows {
        return Ok(None);
    }
    solve(m, &RatMatrix::identity(m.rows))
}

pub fn kron(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    RatMatrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
        &a[(r / b.rows, c / b.cols)] * &b[(r % b.rows, c % b.cols)]
    })
}

/// True when `x` is a nonnegative perfect square; returns its root.
pub fn exact_sqrt(x: usize) -> Option<usize> {
    let r = (x as f64).sqrt().round() as usize;
    (r.checked_mul(r) == Some(x)).then_some(r)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rat::zero(), |s, t| s + t)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64(rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(2)), 2);
        assert_eq!(rank(&RatMatrix::zeros(2, 2)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn rank_with_fractions_and_skipped_columns() {
        let a = RatMatrix::from_rows(vec![
            vec![int(0), rat(1, 2), int(1), int(3)],
            vec![int(0), rat(1, 3), rat(2, 3), int(2)],
            vec![int(0), int(1), int(0), int(5)],
        ])
        .unwrap();
        // row 2 = (2/3) * row 1
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn solve_examples() {
        let b = m(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(solve(&RatMatrix::identity(3), &b).unwrap().unwrap(), b);

        let x = solve(&m(&[&[2]]), &m(&[&[1]])).unwrap().unwrap();
        assert_eq!(x[(0, 0)], rat(1, 2));

        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &m(&[&[0], &[1]]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn solve_underdetermined_checks_back() {
        let a = m(&[&[1, 2, 3], &[0, 1, 1]]);
        let b = m(&[&[7], &[2]]);
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let err = solve(&RatMatrix::identity(2), &RatMatrix::zeros(3, 1)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMatrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&RatMatrix::zeros(2, 3)).len(), 3);

        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        let v = k[0].col(0);
        assert_eq!(&v[0], &(-v[1].clone()));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            kron(&RatMatrix::identity(2), &RatMatrix::identity(3)),
            RatMatrix::identity(6)
        );
        let b = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(kron(&m(&[&[2]]), &b), b.scale(&int(2)));

        let swap = m(&[&[0, 1], &[1, 0]]);
        let expected = m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(kron(&swap, &RatMatrix::identity(2)), expected);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&a).unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).unwrap().is_none());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-4").unwrap(), int(-4));
        assert_eq!(parse_rat(" 2/-4 ").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("0.5").is_err());
        assert_eq!(format_rat(&rat(2, 4)), "1/2");
        assert_eq!(format_rat(&int(0)), "0");
        assert_eq!(format_rat(&rat(-6, 3)), "-2");
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(exact_sqrt(9), Some(3));
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(8), None);
    }
}
