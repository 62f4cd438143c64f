//! Sparse trilinear structure tensors: a product is stored as the coordinate
//! vectors of its values on basis triples, absent triples meaning zero.

use std::collections::BTreeMap;

use crate::{linalg, Error, Result, Scalar};

/// Trilinear map `A ⊗ A ⊗ A → A` in structure-constant form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureTensor<S> {
    dim: usize,
    coeffs: BTreeMap<[usize; 3], Vec<S>>,
    zero: Vec<S>,
}

impl<S: Scalar> StructureTensor<S> {
    pub fn new(dim: usize) -> Self {
        StructureTensor { dim, coeffs: BTreeMap::new(), zero: vec![S::zero(); dim] }
    }

    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = ([usize; 3], Vec<S>)>,
    ) -> Result<Self> {
        let mut t = StructureTensor::new(dim);
        for (idx, v) in entries {
            t.insert(idx, v)?;
        }
        Ok(t)
    }

    /// Materializes a product given by a closure on basis triples.
    pub fn from_basis_fn(dim: usize, f: impl Fn(usize, usize, usize) -> Vec<S>) -> Self {
        let mut t = StructureTensor::new(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    debug_assert_eq!(v.len(), dim);
                    if !linalg::vec_is_zero(&v) {
                        t.coeffs.insert([i, j, k], v);
                    }
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds the given value to the stored coefficient vector of a triple.
    pub fn insert(&mut self, idx: [usize; 3], v: Vec<S>) -> Result<()> {
        if idx.iter().any(|&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange { index: idx, dim: self.dim });
        }
        if v.len() != self.dim {
            return Err(Error::DimMismatch { expected: self.dim, got: v.len() });
        }
        let entry = self.coeffs.entry(idx).or_insert_with(|| vec![S::zero(); self.dim]);
        for (a, b) in entry.iter_mut().zip(v) {
            *a = a.clone() + b;
        }
        if linalg::vec_is_zero(entry) {
            self.coeffs.remove(&idx);
        }
        Ok(())
    }

    /// Coefficient vector of a basis triple (the shared zero if absent).
    pub fn basis_product(&self, i: usize, j: usize, k: usize) -> &[S] {
        self.coeffs.get(&[i, j, k]).map_or(&self.zero, Vec::as_slice)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entry_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Stored entries in lexicographic triple order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &Vec<S>)> {
        self.coeffs.iter()
    }

    /// Full trilinear evaluation.
    pub fn eval(&self, x: &[S], y: &[S], z: &[S]) -> Result<Vec<S>> {
        for v in [x, y, z] {
            if v.len() != self.dim {
                return Err(Error::DimMismatch { expected: self.dim, got: v.len() });
            }
        }
        let mut out = vec![S::zero(); self.dim];
        for ([i, j, k], v) in &self.coeffs {
            if x[*i].is_zero() || y[*j].is_zero() || z[*k].is_zero() {
                continue;
            }
            let c = x[*i].clone() * y[*j].clone() * z[*k].clone();
            linalg::axpy(&mut out, &c, v);
        }
        Ok(out)
    }

    // Mixed basis/vector evaluations. These carry the identity checks: a
    // five-variable identity on basis tuples only ever substitutes one
    // previously computed product vector into one slot.

    pub fn eval_bbv(&self, i: usize, j: usize, z: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (k, c) in z.iter().enumerate() {
            if !c.is_zero() {
                linalg::axpy(&mut out, c, self.basis_product(i, j, k));
            }
        }
        out
    }

    pub fn eval_bvb(&self, i: usize, y: &[S], k: usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (j, c) in y.iter().enumerate() {
            if !c.is_zero() {
                linalg::axpy(&mut out, c, self.basis_product(i, j, k));
            }
        }
        out
    }

    pub fn eval_vbb(&self, x: &[S], j: usize, k: usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                linalg::axpy(&mut out, c, self.basis_product(i, j, k));
            }
        }
        out
    }

    /// First stored pair violating `t(i,j,k) = -t(j,i,k)`, with residual.
    pub fn first_skew12_violation(&self) -> Option<([usize; 3], Vec<S>)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let a = self.basis_product(i, j, k);
                    let b = self.basis_product(j, i, k);
                    let res: Vec<S> =
                        a.iter().zip(b.iter()).map(|(x, y)| x.clone() + y.clone()).collect();
                    if !linalg::vec_is_zero(&res) {
                        return Some(([i, j, k], res));
                    }
                }
            }
        }
        None
    }

    /// First triple violating full alternation (both adjacent transpositions).
    pub fn first_alternating_violation(&self) -> Option<([usize; 3], Vec<S>)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = self.basis_product(i, j, k);
                    for swapped in [[j, i, k], [i, k, j]] {
                        let w = self.basis_product(swapped[0], swapped[1], swapped[2]);
                        let res: Vec<S> =
                            v.iter().zip(w.iter()).map(|(x, y)| x.clone() + y.clone()).collect();
                        if !linalg::vec_is_zero(&res) {
                            return Some(([i, j, k], res));
                        }
                    }
                }
            }
        }
        None
    }

    /// Fills `(j,i,k) = -(i,j,k)` for every stored triple. Stored entries that
    /// contradict the rule (including nonzero `(i,i,k)`) are an error.
    pub fn complete_skew12(&self) -> Result<Self> {
        let mut out = self.clone();
        for ([i, j, k], v) in &self.coeffs {
            if i == j {
                return Err(Error::SkewInconsistent { at: [*i, *j, *k] });
            }
            let mirror = [*j, *i, *k];
            let want: Vec<S> = v.iter().map(|x| -x.clone()).collect();
            match self.coeffs.get(&mirror) {
                None => {
                    out.coeffs.insert(mirror, want);
                }
                Some(existing) if *existing == want => {}
                Some(_) => return Err(Error::SkewInconsistent { at: mirror }),
            }
        }
        Ok(out)
    }

    /// Like [`complete_skew12`], but only fills gaps: stored entries are kept
    /// verbatim, so inconsistent inputs survive for the verifier to flag.
    pub fn complete_skew12_lenient(&self) -> Self {
        let mut out = self.clone();
        for ([i, j, k], v) in &self.coeffs {
            if i == j {
                continue;
            }
            let mirror = [*j, *i, *k];
            if !self.coeffs.contains_key(&mirror) {
                out.coeffs.insert(mirror, v.iter().map(|x| -x.clone()).collect());
            }
        }
        out
    }

    /// Gap-filling variant of [`complete_alternating`].
    pub fn complete_alternating_lenient(&self) -> Self {
        let mut out = self.clone();
        for ([i, j, k], v) in &self.coeffs {
            if i == j || j == k || i == k {
                continue;
            }
            let orbit: [([usize; 3], bool); 5] = [
                ([*j, *i, *k], true),
                ([*i, *k, *j], true),
                ([*k, *j, *i], true),
                ([*j, *k, *i], false),
                ([*k, *i, *j], false),
            ];
            for (idx, negate) in orbit {
                if !self.coeffs.contains_key(&idx) && !out.coeffs.contains_key(&idx) {
                    let want: Vec<S> = if negate {
                        v.iter().map(|x| -x.clone()).collect()
                    } else {
                        v.clone()
                    };
                    out.coeffs.insert(idx, want);
                }
            }
        }
        out
    }

    /// Fills the full alternating orbit of every stored triple, with signs.
    pub fn complete_alternating(&self) -> Result<Self> {
        let mut out = self.clone();
        for ([i, j, k], v) in &self.coeffs {
            if i == j || j == k || i == k {
                return Err(Error::SkewInconsistent { at: [*i, *j, *k] });
            }
            let orbit: [([usize; 3], bool); 6] = [
                ([*i, *j, *k], false),
                ([*j, *i, *k], true),
                ([*i, *k, *j], true),
                ([*k, *j, *i], true),
                ([*j, *k, *i], false),
                ([*k, *i, *j], false),
            ];
            for (idx, negate) in orbit {
                let want: Vec<S> = if negate {
                    v.iter().map(|x| -x.clone()).collect()
                } else {
                    v.clone()
                };
                match out.coeffs.get(&idx) {
                    None => {
                        out.coeffs.insert(idx, want);
                    }
                    Some(existing) if *existing == want => {}
                    Some(_) => return Err(Error::SkewInconsistent { at: idx }),
                }
            }
        }
        Ok(out)
    }
}
