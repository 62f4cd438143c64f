//! Operator-driven constructions: O-operators, weight-zero Rota-Baxter
//! operators, induced 3-pre-Lie and 3-L-dendriform structures, symplectic
//! forms, commuting Rota-Baxter pairs and trace-induced brackets.
//!
//! Checked constructors enforce their preconditions and return
//! `Error::Precondition` with the failing check's name; every checked
//! constructor has an `_unchecked` twin that just applies the defining
//! formula. Construct-then-verify stays the caller's contract either way.

use std::collections::BTreeMap;

use crate::algebra::{
    cyclic_sum, horizontal_bracket, IdentityCheck, Kind, TernaryAlgebra, VerificationReport,
    Violation,
};
use crate::linalg::{vec_is_zero, Matrix};
use crate::rep::{PairMap, PreLieRep};
use crate::tensor::StructureTensor;
use crate::{Error, Result, Scalar};

/// O-operator check for a 3-Lie algebra: `T: V -> A` with
/// `[Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v)` on basis triples.
pub fn check_o_3lie<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rho: &PairMap<S>,
    t: &Matrix<S>,
) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreeLie)?;
    if t.rows() != a.dim() || t.cols() != rho.dim_v() || rho.dim_a() != a.dim() {
        return Err(Error::DimMismatch { expected: a.dim(), got: t.rows() });
    }
    let m = rho.dim_v();
    let bracket = a.t1();
    let mut check = IdentityCheck::new("o-operator");
    'outer: for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                if check.done() {
                    break 'outer;
                }
                let (tu, tv, tw) = (t.column(u), t.column(v), t.column(w));
                let lhs = bracket.eval(&tu, &tv, &tw)?;
                let inner = rho
                    .apply(&tu, &tv)
                    .column(w)
                    .into_iter()
                    .zip(rho.apply(&tv, &tw).column(u))
                    .zip(rho.apply(&tw, &tu).column(v))
                    .map(|((a, b), c)| a + b + c)
                    .collect::<Vec<_>>();
                let rhs = t.mul_vec(&inner)?;
                check.check(&[u, v, w], &lhs, &rhs);
            }
        }
    }
    Ok(VerificationReport::from_violations(check.violation.into_iter().collect()))
}

/// O-operator check for a 3-pre-Lie algebra:
/// `{Tu,Tv,Tw} = T(l(Tu,Tv)w - r(Tu,Tw)v + r(Tv,Tw)u)` on basis triples.
pub fn check_o_3prelie<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rep: &PreLieRep<S>,
    t: &Matrix<S>,
) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    if t.rows() != a.dim() || t.cols() != rep.dim_v() || rep.dim_a() != a.dim() {
        return Err(Error::DimMismatch { expected: a.dim(), got: t.rows() });
    }
    let m = rep.dim_v();
    let prod = a.t1();
    let mut check = IdentityCheck::new("o-operator");
    'outer: for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                if check.done() {
                    break 'outer;
                }
                let (tu, tv, tw) = (t.column(u), t.column(v), t.column(w));
                let lhs = prod.eval(&tu, &tv, &tw)?;
                let inner = rep
                    .l
                    .apply(&tu, &tv)
                    .column(w)
                    .into_iter()
                    .zip(rep.r.apply(&tu, &tw).column(v))
                    .zip(rep.r.apply(&tv, &tw).column(u))
                    .map(|((a, b), c)| a - b + c)
                    .collect::<Vec<_>>();
                let rhs = t.mul_vec(&inner)?;
                check.check(&[u, v, w], &lhs, &rhs);
            }
        }
    }
    Ok(VerificationReport::from_violations(check.violation.into_iter().collect()))
}

/// Weight-zero Rota-Baxter identity, with the brackets read as the algebra's
/// own product (3-Lie bracket or 3-pre-Lie product):
/// `P(Rx,Ry,Rz) = R(P(Rx,Ry,z) + P(Rx,y,Rz) + P(x,Ry,Rz))`.
pub fn check_rb<S: Scalar>(a: &TernaryAlgebra<S>, r: &Matrix<S>) -> Result<VerificationReport<S>> {
    if a.kind() == Kind::ThreeLDendriform {
        return Err(Error::KindMismatch { expected: Kind::ThreePreLie, got: a.kind() });
    }
    let n = a.dim();
    if t_shape_bad(r, n) {
        return Err(Error::DimMismatch { expected: n, got: r.rows() });
    }
    let prod = a.t1();
    let mut check = IdentityCheck::new("rota-baxter");
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if check.done() {
                    break 'outer;
                }
                let (rx, ry, rz) = (r.column(x), r.column(y), r.column(z));
                let lhs = prod.eval(&rx, &ry, &rz)?;
                let inner: Vec<S> = prod
                    .eval_bv_slot3(&rx, &ry, z)
                    .into_iter()
                    .zip(prod.eval_bv_slot2(&rx, y, &rz))
                    .zip(prod.eval_bv_slot1(x, &ry, &rz))
                    .map(|((a, b), c)| a + b + c)
                    .collect();
                let rhs = r.mul_vec(&inner)?;
                check.check(&[x, y, z], &lhs, &rhs);
            }
        }
    }
    Ok(VerificationReport::from_violations(check.violation.into_iter().collect()))
}

fn t_shape_bad<S: Scalar>(m: &Matrix<S>, n: usize) -> bool {
    m.rows() != n || m.cols() != n
}

// Two-vectors-one-basis evaluations used by the Rota-Baxter scan.
impl<S: Scalar> StructureTensor<S> {
    pub(crate) fn eval_bv_slot3(&self, x: &[S], y: &[S], k: usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    let c = a.clone() * b.clone();
                    crate::linalg::axpy(&mut out, &c, self.basis_product(i, j, k));
                }
            }
        }
        out
    }

    pub(crate) fn eval_bv_slot2(&self, x: &[S], j: usize, z: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in z.iter().enumerate() {
                if !b.is_zero() {
                    let c = a.clone() * b.clone();
                    crate::linalg::axpy(&mut out, &c, self.basis_product(i, j, k));
                }
            }
        }
        out
    }

    pub(crate) fn eval_bv_slot1(&self, i: usize, y: &[S], z: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim()];
        for (j, a) in y.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in z.iter().enumerate() {
                if !b.is_zero() {
                    let c = a.clone() * b.clone();
                    crate::linalg::axpy(&mut out, &c, self.basis_product(i, j, k));
                }
            }
        }
        out
    }
}

/// 3-pre-Lie structure on `V` induced by an O-operator on a 3-Lie algebra:
/// `{u,v,w} = rho(Tu,Tv)w`.
pub fn prelie_from_o<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rho: &PairMap<S>,
    t: &Matrix<S>,
) -> Result<TernaryAlgebra<S>> {
    if !check_o_3lie(a, rho, t)?.passed() {
        return Err(Error::Precondition { check: "o-operator" });
    }
    Ok(prelie_from_o_unchecked(rho, t))
}

pub fn prelie_from_o_unchecked<S: Scalar>(rho: &PairMap<S>, t: &Matrix<S>) -> TernaryAlgebra<S> {
    let m = rho.dim_v();
    TernaryAlgebra::three_pre_lie(StructureTensor::from_basis_fn(m, |u, v, w| {
        rho.apply(&t.column(u), &t.column(v)).column(w)
    }))
}

/// 3-L-dendriform structure on `V` induced by an O-operator on a 3-pre-Lie
/// algebra: `nw(u,v,w) = l(Tu,Tv)w`, `ne(u,v,w) = r(Tv,Tw)u`.
pub fn ldend_from_o<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rep: &PreLieRep<S>,
    t: &Matrix<S>,
) -> Result<TernaryAlgebra<S>> {
    if !check_o_3prelie(a, rep, t)?.passed() {
        return Err(Error::Precondition { check: "o-operator" });
    }
    Ok(ldend_from_o_unchecked(rep, t))
}

pub fn ldend_from_o_unchecked<S: Scalar>(rep: &PreLieRep<S>, t: &Matrix<S>) -> TernaryAlgebra<S> {
    let m = rep.dim_v();
    let nw = StructureTensor::from_basis_fn(m, |u, v, w| {
        rep.l.apply(&t.column(u), &t.column(v)).column(w)
    });
    let ne = StructureTensor::from_basis_fn(m, |u, v, w| {
        rep.r.apply(&t.column(v), &t.column(w)).column(u)
    });
    TernaryAlgebra::three_l_dendriform(nw, ne).expect("equal dims")
}

/// 3-L-dendriform structure split off a 3-pre-Lie product by a weight-zero
/// Rota-Baxter operator: `nw(x,y,z) = {Rx,Ry,z}`, `ne(x,y,z) = {x,Ry,Rz}`.
pub fn ldend_from_rb<S: Scalar>(
    a: &TernaryAlgebra<S>,
    r: &Matrix<S>,
) -> Result<TernaryAlgebra<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    if !check_rb(a, r)?.passed() {
        return Err(Error::Precondition { check: "rota-baxter" });
    }
    Ok(ldend_from_rb_unchecked(a, r))
}

pub fn ldend_from_rb_unchecked<S: Scalar>(
    a: &TernaryAlgebra<S>,
    r: &Matrix<S>,
) -> TernaryAlgebra<S> {
    let n = a.dim();
    let t = a.t1();
    let nw = StructureTensor::from_basis_fn(n, |x, y, z| {
        t.eval_bv_slot3(&r.column(x), &r.column(y), z)
    });
    let ne = StructureTensor::from_basis_fn(n, |x, y, z| {
        t.eval_bv_slot1(x, &r.column(y), &r.column(z))
    });
    TernaryAlgebra::three_l_dendriform(nw, ne).expect("equal dims")
}

/// 3-pre-Lie structure split off a 3-Lie bracket by a weight-zero Rota-Baxter
/// operator: `{x,y,z} = [Rx,Ry,z]` (the O-operator route along the adjoint).
pub fn prelie_from_rb<S: Scalar>(
    a: &TernaryAlgebra<S>,
    r: &Matrix<S>,
) -> Result<TernaryAlgebra<S>> {
    a.expect_kind(Kind::ThreeLie)?;
    if !check_rb(a, r)?.passed() {
        return Err(Error::Precondition { check: "rota-baxter" });
    }
    Ok(prelie_from_rb_unchecked(a, r))
}

pub fn prelie_from_rb_unchecked<S: Scalar>(
    a: &TernaryAlgebra<S>,
    r: &Matrix<S>,
) -> TernaryAlgebra<S> {
    let n = a.dim();
    let t = a.t1();
    TernaryAlgebra::three_pre_lie(StructureTensor::from_basis_fn(n, |x, y, z| {
        t.eval_bv_slot3(&r.column(x), &r.column(y), z)
    }))
}

/// 3-L-dendriform structure from a commuting pair of weight-zero Rota-Baxter
/// operators on a 3-Lie algebra:
/// `nw(x,y,z) = [R1R2 x, R1R2 y, z]`, `ne(x,y,z) = [R1 x, R1R2 y, R2 z]`.
pub fn ldend_from_rb_pair<S: Scalar>(
    a: &TernaryAlgebra<S>,
    r1: &Matrix<S>,
    r2: &Matrix<S>,
) -> Result<TernaryAlgebra<S>> {
    a.expect_kind(Kind::ThreeLie)?;
    if !r1.commutes_with(r2) {
        return Err(Error::Precondition { check: "commuting" });
    }
    if !check_rb(a, r1)?.passed() || !check_rb(a, r2)?.passed() {
        return Err(Error::Precondition { check: "rota-baxter" });
    }
    Ok(ldend_from_rb_pair_unchecked(a, r1, r2))
}

pub fn ldend_from_rb_pair_unchecked<S: Scalar>(
    a: &TernaryAlgebra<S>,
    r1: &Matrix<S>,
    r2: &Matrix<S>,
) -> TernaryAlgebra<S> {
    let n = a.dim();
    let t = a.t1();
    let r12 = r1.mul(r2);
    let nw = StructureTensor::from_basis_fn(n, |x, y, z| {
        t.eval_bv_slot3(&r12.column(x), &r12.column(y), z)
    });
    let ne = StructureTensor::from_basis_fn(n, |x, y, z| {
        t.eval(&r1.column(x), &r12.column(y), &r2.column(z)).expect("dims agree")
    });
    TernaryAlgebra::three_l_dendriform(nw, ne).expect("equal dims")
}

/// Skew bilinear form given by its Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewBilinearForm<S> {
    gram: Matrix<S>,
}

impl<S: Scalar> SkewBilinearForm<S> {
    pub fn new(gram: Matrix<S>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimMismatch { expected: gram.rows(), got: gram.cols() });
        }
        if gram != gram.transpose().neg() {
            return Err(Error::Precondition { check: "skew-form" });
        }
        Ok(SkewBilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }

    /// `B(x, y)` for coordinate vectors.
    pub fn pair(&self, x: &[S], y: &[S]) -> Result<S> {
        let gy = self.gram.mul_vec(y)?;
        if x.len() != gy.len() {
            return Err(Error::DimMismatch { expected: gy.len(), got: x.len() });
        }
        let mut acc = S::zero();
        for (a, b) in x.iter().zip(gy) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc + a.clone() * b;
            }
        }
        Ok(acc)
    }
}

/// Closedness of a skew form over a 3-pre-Lie algebra:
/// `B({x,y,z},w) - B(z,[x,y,w]^C) - B(y,{w,x,z}) + B(x,{w,y,z}) = 0`
/// on all basis four-tuples, plus nondegeneracy.
pub fn check_symplectic<S: Scalar>(
    a: &TernaryAlgebra<S>,
    b: &SkewBilinearForm<S>,
) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    if b.dim() != a.dim() {
        return Err(Error::DimMismatch { expected: a.dim(), got: b.dim() });
    }
    let n = a.dim();
    let t = a.t1();
    let basis = |i: usize| -> Vec<S> {
        let mut v = vec![S::zero(); n];
        v[i] = S::one();
        v
    };
    let mut closed = IdentityCheck::new("closedness");
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if closed.done() {
                        break 'outer;
                    }
                    let ew = basis(w);
                    let val = b.pair(t.basis_product(x, y, z), &ew)?
                        - b.pair(&basis(z), &cyclic_sum(t, x, y, w))?
                        - b.pair(&basis(y), t.basis_product(w, x, z))?
                        + b.pair(&basis(x), t.basis_product(w, y, z))?;
                    closed.check(&[x, y, z, w], &[val], &[S::zero()]);
                }
            }
        }
    }
    let mut violations: Vec<Violation<S>> = closed.violation.into_iter().collect();
    if !b.is_nondegenerate() {
        violations.push(Violation { identity: "nondegenerate", at: vec![], residual: vec![] });
    }
    Ok(VerificationReport::from_violations(violations))
}

/// Solution space of the closedness system, in upper-triangle Gram
/// coordinates. Closedness is linear in the form, so candidate symplectic
/// forms are exactly the nondegenerate members of this space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedFormSpace<S> {
    n: usize,
    space: crate::linalg::Subspace<S>,
}

impl<S: Scalar> ClosedFormSpace<S> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &crate::linalg::Subspace<S> {
        &self.space
    }

    /// Basis vectors materialized as skew Gram matrices.
    pub fn basis_grams(&self) -> Vec<Matrix<S>> {
        let pairs = upper_pairs(self.n);
        self.space
            .basis()
            .iter()
            .map(|coords| {
                let mut g = Matrix::zeros(self.n, self.n);
                for (&(i, j), c) in pairs.iter().zip(coords) {
                    g.set(i, j, c.clone());
                    g.set(j, i, -c.clone());
                }
                g
            })
            .collect()
    }
}

fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Solves the linear closedness system over all skew forms of the algebra.
pub fn closed_skew_forms<S: Scalar>(a: &TernaryAlgebra<S>) -> Result<ClosedFormSpace<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    let n = a.dim();
    let t = a.t1();
    let pairs = upper_pairs(n);
    let ncols = pairs.len();
    let index_of = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
    // B(u, v) = sum over i<j of b_ij (u_i v_j - u_j v_i)
    let add_pairing = |row: &mut [S], sign: &S, u: &[S], v: &[S]| {
        for (col, &(i, j)) in pairs.iter().enumerate() {
            let term = u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
            if !term.is_zero() {
                row[col] = row[col].clone() + sign.clone() * term;
            }
        }
    };
    let _ = index_of;
    let basis = |i: usize| -> Vec<S> {
        let mut v = vec![S::zero(); n];
        v[i] = S::one();
        v
    };
    let mut rows = Vec::new();
    let one = S::one();
    let minus = -S::one();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let mut row = vec![S::zero(); ncols];
                    add_pairing(&mut row, &one, t.basis_product(x, y, z), &basis(w));
                    add_pairing(&mut row, &minus, &basis(z), &cyclic_sum(t, x, y, w));
                    add_pairing(&mut row, &minus, &basis(y), t.basis_product(w, x, z));
                    add_pairing(&mut row, &one, &basis(x), t.basis_product(w, y, z));
                    if !vec_is_zero(&row) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let space = if rows.is_empty() {
        crate::linalg::Subspace::full(ncols)
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    Ok(ClosedFormSpace { n, space })
}

/// Compatible 3-L-dendriform structure of a symplectic 3-pre-Lie algebra,
/// defined through the pairing:
/// `B(nw(x,y,z), w) = B(z, [x,y,w]^C)` and `B(ne(x,y,z), w) = -B(x, {w,y,z})`.
pub fn ldend_from_symplectic<S: Scalar>(
    a: &TernaryAlgebra<S>,
    b: &SkewBilinearForm<S>,
) -> Result<TernaryAlgebra<S>> {
    if !check_symplectic(a, b)?.passed() {
        return Err(Error::Precondition { check: "symplectic" });
    }
    let n = a.dim();
    let t = a.t1();
    let gram_t = b.gram().transpose();
    let solve_triple = |rhs: Vec<S>| -> Vec<S> {
        gram_t
            .solve(&rhs)
            .expect("shape")
            .expect("nondegenerate gram solves uniquely")
    };
    let mut nw = StructureTensor::new(n);
    let mut ne = StructureTensor::new(n);
    let basis = |i: usize| -> Vec<S> {
        let mut v = vec![S::zero(); n];
        v[i] = S::one();
        v
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // value dotted against every basis vector via the form
                let nw_rhs: Vec<S> = (0..n)
                    .map(|w| b.pair(&basis(k), &cyclic_sum(t, i, j, w)).expect("dims"))
                    .collect();
                let ne_rhs: Vec<S> = (0..n)
                    .map(|w| -b.pair(&basis(i), t.basis_product(w, j, k)).expect("dims"))
                    .collect();
                nw.insert([i, j, k], solve_triple(nw_rhs)).expect("in range");
                ne.insert([i, j, k], solve_triple(ne_rhs)).expect("in range");
            }
        }
    }
    TernaryAlgebra::three_l_dendriform(nw, ne)
}

/// Second 3-pre-Lie product carried by a symplectic 3-pre-Lie algebra:
/// `B({x,y,z}', w) = B(z,[x,y,w]^C) - B(z,{w,x,y}) + B(z,{w,y,x})`.
pub fn prelie_prime_from_symplectic<S: Scalar>(
    a: &TernaryAlgebra<S>,
    b: &SkewBilinearForm<S>,
) -> Result<TernaryAlgebra<S>> {
    if !check_symplectic(a, b)?.passed() {
        return Err(Error::Precondition { check: "symplectic" });
    }
    let n = a.dim();
    let t = a.t1();
    let gram_t = b.gram().transpose();
    let basis = |i: usize| -> Vec<S> {
        let mut v = vec![S::zero(); n];
        v[i] = S::one();
        v
    };
    let mut prod = StructureTensor::new(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let rhs: Vec<S> = (0..n)
                    .map(|w| {
                        let ek = basis(k);
                        let c = b.pair(&ek, &cyclic_sum(t, i, j, w)).expect("dims");
                        let d = b.pair(&ek, t.basis_product(w, i, j)).expect("dims");
                        let e = b.pair(&ek, t.basis_product(w, j, i)).expect("dims");
                        c - d + e
                    })
                    .collect();
                let value = gram_t.solve(&rhs).expect("shape").expect("nondegenerate");
                prod.insert([i, j, k], value).expect("in range");
            }
        }
    }
    Ok(TernaryAlgebra::three_pre_lie(prod))
}

/// Binary Lie algebra in structure-constant form; skew-symmetry is completed
/// on construction and the Jacobi identity is verified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryLieAlgebra<S> {
    dim: usize,
    coeffs: BTreeMap<[usize; 2], Vec<S>>,
    zero: Vec<S>,
}

impl<S: Scalar> BinaryLieAlgebra<S> {
    pub fn new(dim: usize, entries: impl IntoIterator<Item = ([usize; 2], Vec<S>)>) -> Result<Self> {
        let mut coeffs: BTreeMap<[usize; 2], Vec<S>> = BTreeMap::new();
        for ([i, j], v) in entries {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfRange { index: [i, j, 0], dim });
            }
            if v.len() != dim {
                return Err(Error::DimMismatch { expected: dim, got: v.len() });
            }
            if vec_is_zero(&v) {
                continue;
            }
            if i == j {
                return Err(Error::SkewInconsistent { at: [i, j, 0] });
            }
            let neg: Vec<S> = v.iter().map(|x| -x.clone()).collect();
            for (key, want) in [([i, j], v), ([j, i], neg)] {
                if let Some(existing) = coeffs.get(&key) {
                    if *existing != want {
                        return Err(Error::SkewInconsistent { at: [key[0], key[1], 0] });
                    }
                } else {
                    coeffs.insert(key, want);
                }
            }
        }
        let alg = BinaryLieAlgebra { dim, coeffs, zero: vec![S::zero(); dim] };
        if let Some(at) = alg.first_jacobi_violation() {
            let _ = at;
            return Err(Error::Precondition { check: "jacobi" });
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        self.coeffs.get(&[i, j]).map_or(&self.zero, Vec::as_slice)
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimMismatch { expected: self.dim, got: v.len() });
            }
        }
        let mut out = vec![S::zero(); self.dim];
        for ([i, j], v) in &self.coeffs {
            if !x[*i].is_zero() && !y[*j].is_zero() {
                let c = x[*i].clone() * y[*j].clone();
                crate::linalg::axpy(&mut out, &c, v);
            }
        }
        Ok(out)
    }

    fn eval_bv(&self, i: usize, y: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (j, c) in y.iter().enumerate() {
            if !c.is_zero() {
                crate::linalg::axpy(&mut out, c, self.bracket_basis(i, j));
            }
        }
        out
    }

    fn first_jacobi_violation(&self) -> Option<[usize; 3]> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let s1 = self.eval_bv(i, self.bracket_basis(j, k));
                    let s2 = self.eval_bv(j, self.bracket_basis(k, i));
                    let s3 = self.eval_bv(k, self.bracket_basis(i, j));
                    let total: Vec<S> = s1
                        .into_iter()
                        .zip(s2)
                        .zip(s3)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if !vec_is_zero(&total) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }
}

/// Linear functional vanishing on all brackets; checked on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceFunction<S> {
    covector: Vec<S>,
}

impl<S: Scalar> TraceFunction<S> {
    pub fn new(g: &BinaryLieAlgebra<S>, covector: Vec<S>) -> Result<Self> {
        if covector.len() != g.dim() {
            return Err(Error::DimMismatch { expected: g.dim(), got: covector.len() });
        }
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let v = g.bracket_basis(i, j);
                let mut acc = S::zero();
                for (c, x) in covector.iter().zip(v) {
                    acc = acc + c.clone() * x.clone();
                }
                if !acc.is_zero() {
                    return Err(Error::Precondition { check: "trace-vanishing" });
                }
            }
        }
        Ok(TraceFunction { covector })
    }

    pub fn apply(&self, x: &[S]) -> S {
        let mut acc = S::zero();
        for (c, v) in self.covector.iter().zip(x) {
            acc = acc + c.clone() * v.clone();
        }
        acc
    }

    pub fn covector(&self) -> &[S] {
        &self.covector
    }
}

/// 3-Lie bracket induced by a trace function on a binary Lie algebra:
/// `[x,y,z] = tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y]`.
pub fn trace_induced_3lie<S: Scalar>(
    g: &BinaryLieAlgebra<S>,
    tau: &TraceFunction<S>,
) -> TernaryAlgebra<S> {
    trace_weighted_bracket(g, tau.covector())
}

/// Same formula for an arbitrary covector; without the trace property the
/// result need not satisfy the fundamental identity.
pub fn trace_induced_3lie_raw<S: Scalar>(
    g: &BinaryLieAlgebra<S>,
    covector: &[S],
) -> Result<TernaryAlgebra<S>> {
    if covector.len() != g.dim() {
        return Err(Error::DimMismatch { expected: g.dim(), got: covector.len() });
    }
    Ok(trace_weighted_bracket(g, covector))
}

fn trace_weighted_bracket<S: Scalar>(g: &BinaryLieAlgebra<S>, tau: &[S]) -> TernaryAlgebra<S> {
    let n = g.dim();
    TernaryAlgebra::three_lie(StructureTensor::from_basis_fn(n, |i, j, k| {
        let mut out = vec![S::zero(); n];
        crate::linalg::axpy(&mut out, &tau[i], g.bracket_basis(j, k));
        crate::linalg::axpy(&mut out, &tau[j], g.bracket_basis(k, i));
        crate::linalg::axpy(&mut out, &tau[k], g.bracket_basis(i, j));
        out
    }))
}

/// Default enumeration budget for [`search_rb`].
pub const DEFAULT_SEARCH_BUDGET: u128 = 1 << 20;

/// Exhaustively enumerates operators over a finite coefficient grid restricted
/// to a sparsity pattern, returning exactly those passing [`check_rb`], in
/// lexicographic assignment order.
pub fn search_rb<S: Scalar>(
    a: &TernaryAlgebra<S>,
    coeffs: &[S],
    support: Option<&[(usize, usize)]>,
    budget: u128,
) -> Result<Vec<Matrix<S>>> {
    if a.kind() == Kind::ThreeLDendriform {
        return Err(Error::KindMismatch { expected: Kind::ThreePreLie, got: a.kind() });
    }
    let n = a.dim();
    let mut cells: Vec<(usize, usize)> = match support {
        Some(cells) => {
            for &(r, c) in cells {
                if r >= n || c >= n {
                    return Err(Error::IndexOutOfRange { index: [r, c, 0], dim: n });
                }
            }
            cells.to_vec()
        }
        None => (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect(),
    };
    cells.sort_unstable();
    cells.dedup();
    let base = coeffs.len() as u128;
    let candidates = base.checked_pow(cells.len() as u32).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    let mut found = Vec::new();
    let mut odometer = vec![0usize; cells.len()];
    loop {
        let mut m = Matrix::zeros(n, n);
        for (cell, &digit) in cells.iter().zip(&odometer) {
            m.set(cell.0, cell.1, coeffs[digit].clone());
        }
        if check_rb(a, &m)?.passed() {
            found.push(m);
        }
        // odometer increment, most significant cell first
        let mut pos = cells.len();
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < coeffs.len() {
                break;
            }
            odometer[pos] = 0;
        }
        if cells.is_empty() {
            return Ok(found);
        }
    }
}

/// Entrywise equality of the horizontal bracket of a dendriform algebra,
/// transported through `t`, with a reference product. Used by compatibility
/// tests for invertible O-operators.
pub fn horizontal_transported_matches<S: Scalar>(
    d: &TernaryAlgebra<S>,
    t: &Matrix<S>,
    reference: &TernaryAlgebra<S>,
) -> Result<bool> {
    d.expect_kind(Kind::ThreeLDendriform)?;
    let n = d.dim();
    let (nw, ne) = (d.t1(), d.t2().expect("dendriform"));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = t.mul_vec(&horizontal_bracket(nw, ne, i, j, k))?;
                let rhs =
                    reference.t1().eval(&t.column(i), &t.column(j), &t.column(k))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
