//! Fraction-free exact linear algebra over the rationals.
//!
//! All scalars are arbitrary-precision rationals ([`Rat`]). Elimination is
//! fraction-free in the Bareiss style: rows are cleared to primitive integer
//! vectors and every reduction step `r ← lead·r − r[p]·pivot_row` is followed
//! by division by the row content, so entries stay integral and as small as
//! the arithmetic allows. Pivoting is deterministic (first nonzero column,
//! rows kept in pivot order), which makes every result — including the choice
//! of nullspace basis — reproducible across runs and platforms.
//!
//! The module deliberately contains no modular-arithmetic shortcuts, no
//! sparse solver and no floating-point fallback: it is the exact substrate
//! the rest of the crate builds on. Arithmetic uses a machine-word (`i128`)
//! fast path and transparently falls back to big integers on overflow; the
//! results are identical either way.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// The rational `n`.
#[must_use]
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `n / d` (`d ≠ 0`).
#[must_use]
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Dense matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    /// Zero matrix of the given shape.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    /// Identity matrix of size `n`.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from a list of equal-length rows.
    ///
    /// # Panics
    /// Panics if the rows have inconsistent lengths.
    #[must_use]
    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Number of rows.
    #[must_use]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[must_use]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`.
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    /// Set entry at `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Borrow row `i` as a slice.
    #[must_use]
    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix–vector product.
    ///
    /// # Panics
    /// Panics if `v.len() != self.ncols()`.
    #[must_use]
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// integer rows with i128 fast path
// ---------------------------------------------------------------------------

/// A primitive integer row: machine-word representation with a big-integer
/// fallback on overflow. Both representations behave identically.
#[derive(Clone, Debug)]
enum IRow {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl IRow {
    fn len(&self) -> usize {
        match self {
            IRow::Small(v) => v.len(),
            IRow::Big(v) => v.len(),
        }
    }

    fn is_zero_at(&self, j: usize) -> bool {
        match self {
            IRow::Small(v) => v[j] == 0,
            IRow::Big(v) => v[j].is_zero(),
        }
    }

    fn first_nonzero(&self) -> Option<usize> {
        (0..self.len()).find(|&j| !self.is_zero_at(j))
    }

    fn to_big(&self) -> Vec<BigInt> {
        match self {
            IRow::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            IRow::Big(v) => v.clone(),
        }
    }

    fn big_at(&self, j: usize) -> BigInt {
        match self {
            IRow::Small(v) => BigInt::from(v[j]),
            IRow::Big(v) => v[j].clone(),
        }
    }

    /// Divide by the gcd of the entries and make the leading entry positive.
    fn normalize(&mut self) {
        match self {
            IRow::Small(v) => {
                let mut g: i128 = 0;
                for &x in v.iter() {
                    g = g.gcd(&x);
                }
                if g > 1 {
                    for x in v.iter_mut() {
                        *x /= g;
                    }
                }
                if let Some(j) = v.iter().position(|&x| x != 0) {
                    if v[j] < 0 {
                        for x in v.iter_mut() {
                            *x = -*x;
                        }
                    }
                }
            }
            IRow::Big(v) => {
                let mut g = BigInt::zero();
                for x in v.iter() {
                    g = g.gcd(x);
                }
                if g > BigInt::one() {
                    for x in v.iter_mut() {
                        *x = &*x / &g;
                    }
                }
                if let Some(j) = v.iter().position(|x| !x.is_zero()) {
                    if v[j].is_negative() {
                        for x in v.iter_mut() {
                            *x = -x.clone();
                        }
                    }
                }
            }
        }
    }

    /// `self ← lead·self − c·other` (the fraction-free reduction step).
    fn reduce_by(&mut self, other: &IRow, pivot: usize) {
        if let (IRow::Small(a), IRow::Small(b)) = (&*self, other) {
            // machine-word fast path; abandoned wholesale on any overflow
            let lead = b[pivot];
            let c = a[pivot];
            let mut out = Vec::with_capacity(a.len());
            let mut ok = true;
            for (x, y) in a.iter().zip(b.iter()) {
                match lead
                    .checked_mul(*x)
                    .and_then(|lx| c.checked_mul(*y).and_then(|cy| lx.checked_sub(cy)))
                {
                    Some(t) => out.push(t),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                *self = IRow::Small(out);
                self.normalize();
                return;
            }
        }
        // big fallback
        let a = self.to_big();
        let b = other.to_big();
        let lead = b[pivot].clone();
        let c = a[pivot].clone();
        let out: Vec<BigInt> =
            a.iter().zip(b.iter()).map(|(x, y)| &lead * x - &c * y).collect();
        *self = IRow::Big(out);
        self.normalize();
    }
}

/// Clear denominators of a rational vector to a primitive integer row.
fn clear_denominators(v: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn big_row(v: Vec<BigInt>) -> IRow {
    let small: Option<Vec<i128>> = v.iter().map(|x| i128::try_from(x).ok()).collect();
    match small {
        Some(s) => IRow::Small(s),
        None => IRow::Big(v),
    }
}

// ---------------------------------------------------------------------------
// echelon form
// ---------------------------------------------------------------------------

/// Incremental fraction-free row echelon form.
///
/// Rows are inserted one at a time; each is reduced against the current
/// echelon (rows ordered by pivot column) and kept only if independent.
/// Supports rank queries and exact nullspace extraction at any point.
pub struct Echelon {
    cols: usize,
    /// echelon rows, sorted by ascending pivot column
    rows: Vec<IRow>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// Empty echelon over `cols` columns.
    #[must_use]
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Current rank.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in ascending order.
    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Insert a rational row (denominators are cleared first).
    /// Returns `true` if the row was independent of the span so far.
    ///
    /// # Panics
    /// Panics if `row.len()` differs from the column count.
    pub fn insert(&mut self, row: &[Rat]) -> bool {
        assert_eq!(row.len(), self.cols);
        self.insert_irow(big_row(clear_denominators(row)))
    }

    /// Insert an integer row. Returns `true` if independent.
    ///
    /// # Panics
    /// Panics if `row.len()` differs from the column count.
    pub fn insert_ints(&mut self, row: Vec<i128>) -> bool {
        assert_eq!(row.len(), self.cols);
        self.insert_irow(IRow::Small(row))
    }

    fn insert_irow(&mut self, mut r: IRow) -> bool {
        r.normalize();
        for (k, &p) in self.pivots.iter().enumerate() {
            if !r.is_zero_at(p) {
                let other = self.rows[k].clone();
                r.reduce_by(&other, p);
            }
        }
        match r.first_nonzero() {
            None => false,
            Some(p) => {
                let at = self.pivots.partition_point(|&q| q < p);
                self.pivots.insert(at, p);
                self.rows.insert(at, r);
                true
            }
        }
    }

    /// Exact basis of the nullspace of the inserted row span, one vector per
    /// free column in ascending column order. Each vector is primitive
    /// integral with positive entry at its free column.
    #[must_use]
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let pivset: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&j| !pivset[j]).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Rat::zero(); self.cols];
            x[f] = Rat::one();
            // back-substitute pivot variables from the bottom row up
            for k in (0..self.rows.len()).rev() {
                let p = self.pivots[k];
                if p > f {
                    continue; // row involves only columns ≥ p > f, all zero in x
                }
                let mut acc = Rat::zero();
                for j in (p + 1)..self.cols {
                    if !self.rows[k].is_zero_at(j) && !x[j].is_zero() {
                        acc += Rat::from_integer(self.rows[k].big_at(j)) * &x[j];
                    }
                }
                x[p] = -acc / Rat::from_integer(self.rows[k].big_at(p));
            }
            normalize_primitive(&mut x);
            // make the free coordinate positive for determinism
            if x[f].is_negative() {
                for e in &mut x {
                    *e = -e.clone();
                }
            }
            out.push(x);
        }
        out
    }
}

/// Scale a rational vector to a primitive integer vector (clear denominators,
/// divide by content). The zero vector is left untouched.
pub fn normalize_primitive(v: &mut [Rat]) {
    let mut l = BigInt::one();
    for x in v.iter() {
        l = l.lcm(x.denom());
    }
    let mut g = BigInt::zero();
    let nums: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    for n in &nums {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return;
    }
    for (x, n) in v.iter_mut().zip(nums) {
        *x = Rat::from_integer(n / &g);
    }
}

/// Rank of a matrix.
#[must_use]
pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new(m.ncols());
    for i in 0..m.nrows() {
        e.insert(m.row(i));
    }
    e.rank()
}

/// Exact nullspace basis of a matrix (kernel of the row-span), deterministic.
#[must_use]
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rat>> {
    let mut e = Echelon::new(m.ncols());
    for i in 0..m.nrows() {
        e.insert(m.row(i));
    }
    e.kernel()
}

/// Dimension of the span of a set of vectors.
///
/// # Panics
/// Panics if the vectors have inconsistent lengths.
#[must_use]
pub fn span_dimension(vectors: &[Vec<Rat>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut e = Echelon::new(first.len());
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Solve `A·x = b` exactly. Returns one solution (free variables set to
/// zero), or `None` if the system is inconsistent.
///
/// # Panics
/// Panics if `b.len() != a.nrows()`.
#[must_use]
pub fn solve(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(b.len(), a.nrows());
    let n = a.nrows();
    let c = a.ncols();
    // rational Gauss–Jordan on the augmented matrix, first-nonzero pivoting
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rat> = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut prow = 0;
    for col in 0..c {
        let Some(sel) = (prow..n).find(|&r| !aug[r][col].is_zero()) else { continue };
        aug.swap(prow, sel);
        let inv = aug[prow][col].clone();
        for e in &mut aug[prow] {
            *e = &*e / &inv;
        }
        for r in 0..n {
            if r != prow && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..=c {
                    let t = &aug[prow][j] * &f;
                    aug[r][j] = &aug[r][j] - t;
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
        if prow == n {
            break;
        }
    }
    // inconsistent if a zero row has nonzero rhs
    for r in prow..n {
        if !aug[r][c].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); c];
    for &(r, col) in &pivots {
        x[col] = aug[r][c].clone();
    }
    Some(x)
}

/// Exact inverse of a square matrix, or `None` if singular.
///
/// # Panics
/// Panics if the matrix is not square.
#[must_use]
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert_eq!(m.nrows(), m.ncols(), "inverse of non-square matrix");
    let n = m.nrows();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rat> = m.row(i).to_vec();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for col in 0..n {
        let sel = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, sel);
        let inv = aug[col][col].clone();
        for e in &mut aug[col] {
            *e = &*e / &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..2 * n {
                    let t = &aug[col][j] * &f;
                    aug[r][j] = &aug[r][j] - t;
                }
            }
        }
    }
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, aug[i][n + j].clone());
        }
    }
    Some(out)
}

/// Componentwise sum of two vectors.
///
/// # Panics
/// Panics if the vectors have different lengths.
#[must_use]
pub fn vadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference of two vectors.
///
/// # Panics
/// Panics if the vectors have different lengths.
#[must_use]
pub fn vsub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scalar multiple of a vector.
#[must_use]
pub fn vscale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// Dot product of two rational vectors.
///
/// # Panics
/// Panics if the vectors have different lengths.
#[must_use]
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            &rows.iter().map(|r| r.iter().map(|&x| rat_i(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_and_kernel_basics() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert!(nullspace(&Matrix::identity(3)).is_empty());
        let z = Matrix::zeros(2, 3);
        assert_eq!(rank(&z), 0);
        assert_eq!(nullspace(&z).len(), 3);
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = nullspace(&a);
        assert_eq!(ker.len(), 1);
        for i in 0..a.nrows() {
            assert!(dot(a.row(i), &ker[0]).is_zero());
        }
    }

    #[test]
    fn rank_nullity() {
        let a = m(&[&[1, -1, 0, 2], &[3, 0, 1, 0], &[4, -1, 1, 2], &[1, 1, 1, -2]]);
        let r = rank(&a);
        assert_eq!(r + nullspace(&a).len(), a.ncols());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[rat_i(5), rat_i(10)]).unwrap();
        assert_eq!(a.mul_vec(&x), alloc::vec![rat_i(5), rat_i(10)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv.mul_vec(&[rat_i(5), rat_i(10)]), x);
        // inconsistent
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(solve(&b, &[rat_i(0), rat_i(1)]).is_none());
        assert!(inverse(&b).is_none());
    }

    #[test]
    fn kernel_exactness_with_fractions() {
        let a = Matrix::from_rows(&[alloc::vec![rat(1, 2), rat(1, 3), rat_i(1)]]);
        let ker = nullspace(&a);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(dot(a.row(0), v).is_zero());
        }
    }

    #[test]
    fn big_fallback_is_exact() {
        // Hilbert-like ill-conditioned matrix exercises the BigInt path.
        let n = 9;
        let mut h = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                h.set(i, j, rat(1, (i + j + 1) as i64));
            }
        }
        assert_eq!(rank(&h), n);
        let inv = inverse(&h).unwrap();
        let e0: Vec<Rat> = (0..n).map(|j| if j == 0 { rat_i(1) } else { rat_i(0) }).collect();
        let x = inv.mul_vec(&e0);
        assert_eq!(h.mul_vec(&x), e0);
    }
}
