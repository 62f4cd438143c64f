//! Dense exact matrices, reduced row-echelon form, nullspaces and canonical
//! subspaces. Everything here is plain Gaussian elimination over a field;
//! exactness of the scalars makes rank and membership questions decidable.

use crate::{Error, Result, Scalar};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Matrix { rows: nr, cols: nc, data: rows.into_iter().flatten().collect() }
    }

    /// Column-as-image constructor: column `j` is `images[j]`.
    pub fn from_columns(images: &[Vec<S>]) -> Self {
        let nc = images.len();
        let nr = images.first().map_or(0, Vec::len);
        assert!(images.iter().all(|c| c.len() == nr), "ragged columns");
        Matrix::from_fn(nr, nc, |r, c| images[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Row-major flattening (used to embed endomorphisms in coordinate space).
    pub fn flatten(&self) -> Vec<S> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: &[S]) -> Self {
        Matrix::new(rows, cols, data.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn neg(&self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() + other.at(r, c).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - other.at(r, c).clone()
        })
    }

    pub fn scale(&self, k: &S) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).clone() * k.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                if !self.at(r, k).is_zero() && !other.at(k, c).is_zero() {
                    acc = acc + self.at(r, k).clone() * other.at(k, c).clone();
                }
            }
            acc
        })
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimMismatch { expected: self.cols, got: v.len() });
        }
        let mut out = vec![S::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.at(r, c);
                if !a.is_zero() {
                    out[r] = out[r].clone() + a.clone() * x.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Reduced row-echelon form plus pivot columns. Row space is preserved.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m: Vec<Vec<S>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = x.clone() / inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in 0..self.cols {
                        let v = m[r][k].clone();
                        m[i][k] = m[i][k].clone() - f.clone() * v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        (Matrix::from_rows(m), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`, as a canonical subspace of the column space.
    pub fn nullspace(&self) -> Subspace<S> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![S::zero(); self.cols];
            v[fc] = S::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -red.at(ri, fc).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis).expect("nullspace vectors have ambient length")
    }

    /// One solution of `self * x = rhs`, if the system is consistent.
    pub fn solve(&self, rhs: &[S]) -> Result<Option<Vec<S>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimMismatch { expected: self.rows, got: rhs.len() });
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols { self.at(r, c).clone() } else { rhs[r].clone() }
        });
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![S::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = red.at(ri, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// Subspace of a coordinate space, stored as the unique reduced-echelon basis.
///
/// Canonical form makes equality of spans literal `==`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| {
            let mut v = vec![S::zero(); ambient];
            v[i] = S::one();
            v
        }))
        .expect("unit vectors have ambient length")
    }

    /// Canonicalizes a spanning set (RREF of the stacked rows, zero rows dropped).
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<S>>) -> Result<Self> {
        let rows: Vec<Vec<S>> = vectors.into_iter().collect();
        for v in &rows {
            if v.len() != ambient {
                return Err(Error::DimMismatch { expected: ambient, got: v.len() });
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let (red, pivots) = Matrix::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[S]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimMismatch { expected: self.ambient, got: v.len() });
        }
        // Reduce against the echelon basis; membership iff the residue is zero.
        let mut res = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("no zero basis rows");
            if !res[pivot].is_zero() {
                let f = res[pivot].clone();
                for (a, b) in res.iter_mut().zip(row.iter()) {
                    *a = a.clone() - f.clone() * b.clone();
                }
            }
        }
        Ok(res.iter().all(|x| x.is_zero()))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Subspace::span(self.ambient, self.basis.iter().chain(other.basis.iter()).cloned())
    }

    /// Kernel-of-stacked-bases intersection: solve `sum x_i a_i = sum y_j b_j`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        let ka = self.dim();
        let kb = other.dim();
        if ka == 0 || kb == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let m = Matrix::from_fn(self.ambient, ka + kb, |r, c| {
            if c < ka {
                self.basis[c][r].clone()
            } else {
                -other.basis[c - ka][r].clone()
            }
        });
        let kernel = m.nullspace();
        let vectors = kernel.basis().iter().map(|coeffs| {
            let mut v = vec![S::zero(); self.ambient];
            for (i, a) in self.basis.iter().enumerate() {
                if !coeffs[i].is_zero() {
                    for (x, y) in v.iter_mut().zip(a.iter()) {
                        *x = x.clone() + coeffs[i].clone() * y.clone();
                    }
                }
            }
            v
        });
        Subspace::span(self.ambient, vectors.collect::<Vec<_>>())
    }
}

/// In-place `a += k * b`.
pub fn axpy<S: Scalar>(a: &mut [S], k: &S, b: &[S]) {
    debug_assert_eq!(a.len(), b.len());
    if k.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x = x.clone() + k.clone() * y.clone();
        }
    }
}

/// Componentwise difference.
pub fn vec_sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b.iter()).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn q(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn qv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id: Matrix<Rat> = Matrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_zero_is_fixed() {
        let z: Matrix<Rat> = Matrix::zeros(2, 2);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        // [[1,2,3],[2,4,6]] -> [[1,2,3],[0,0,0]], pivot column 0
        let m = Matrix::from_rows(vec![qv(&[1, 2, 3]), qv(&[2, 4, 6])]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_rows(vec![qv(&[1, 2, 3]), qv(&[0, 0, 0])]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn nullspace_of_identity_is_zero() {
        let id: Matrix<Rat> = Matrix::identity(3);
        assert_eq!(id.nullspace().dim(), 0);
    }

    #[test]
    fn nullspace_of_zero_is_full() {
        let z: Matrix<Rat> = Matrix::zeros(3, 3);
        assert_eq!(z.nullspace(), Subspace::full(3));
    }

    #[test]
    fn nullspace_residuals_vanish() {
        let m = Matrix::from_rows(vec![qv(&[1, 2, 3]), qv(&[2, 4, 6])]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 2);
        for v in ns.basis() {
            assert!(vec_is_zero(&m.mul_vec(v).unwrap()));
        }
        assert_eq!(m.rank() + ns.dim(), m.cols());
    }

    #[test]
    fn contains_basics() {
        let s = Subspace::span(3, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0])]).unwrap();
        assert!(s.contains(&qv(&[0, 0, 0])).unwrap());
        assert!(s.contains(&qv(&[3, -2, 0])).unwrap());
        assert!(!s.contains(&qv(&[1, 1, 1])).unwrap());
        assert!(Subspace::full(3).contains(&qv(&[7, 5, -1])).unwrap());
        assert!(s.contains(&qv(&[1, 1])).is_err());
    }

    #[test]
    fn sum_and_intersection_small() {
        let e1 = Subspace::span(2, vec![qv(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, vec![qv(&[0, 1])]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        assert_eq!(e1.intersection(&e2).unwrap().dim(), 0);
        let z = Subspace::zero(2);
        assert_eq!(e1.sum(&z).unwrap(), e1);
        assert_eq!(e1.intersection(&Subspace::full(2)).unwrap(), e1);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let s = Subspace::span(3, vec![qv(&[2, 4, 0]), qv(&[1, 2, 1])]).unwrap();
        let again = Subspace::span(3, s.basis().to_vec()).unwrap();
        assert_eq!(s, again);
        // a different spanning set of the same space canonicalizes identically
        let t = Subspace::span(3, vec![qv(&[1, 2, 1]), qv(&[3, 6, 1]), qv(&[4, 8, 2])]).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_rows(vec![qv(&[1, 2]), qv(&[2, 4])]);
        let x = m.solve(&qv(&[3, 6])).unwrap().expect("consistent");
        assert_eq!(m.mul_vec(&x).unwrap(), qv(&[3, 6]));
        assert!(m.solve(&qv(&[3, 5])).unwrap().is_none());
    }
}
