//! Representations of 3-Lie and 3-pre-Lie algebras as matrix-valued pair
//! maps, their verification, semidirect products, induced and dual
//! representations.

use crate::algebra::{
    cyclic_sum, sub_adjacent_3lie_unchecked, IdentityCheck, Kind, TernaryAlgebra,
    VerificationReport,
};
use crate::linalg::Matrix;
use crate::tensor::StructureTensor;
use crate::{Error, Result, Scalar};

/// Bilinear map `A x A -> gl(V)` stored on the full basis-pair grid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairMap<S> {
    dim_a: usize,
    dim_v: usize,
    maps: Vec<Matrix<S>>,
}

impl<S: Scalar> PairMap<S> {
    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        PairMap { dim_a, dim_v, maps: vec![Matrix::zeros(dim_v, dim_v); dim_a * dim_a] }
    }

    pub fn from_fn(dim_a: usize, dim_v: usize, f: impl Fn(usize, usize) -> Matrix<S>) -> Self {
        let mut maps = Vec::with_capacity(dim_a * dim_a);
        for i in 0..dim_a {
            for j in 0..dim_a {
                let m = f(i, j);
                assert_eq!((m.rows(), m.cols()), (dim_v, dim_v), "pair map entry shape");
                maps.push(m);
            }
        }
        PairMap { dim_a, dim_v, maps }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn at(&self, i: usize, j: usize) -> &Matrix<S> {
        &self.maps[i * self.dim_a + j]
    }

    pub fn is_skew(&self) -> bool {
        for i in 0..self.dim_a {
            for j in 0..=i {
                if *self.at(i, j) != self.at(j, i).neg() {
                    return false;
                }
            }
        }
        true
    }

    /// Bilinear extension in the first slot: `sum_i x_i * M(i, j)`.
    pub fn apply_vb(&self, x: &[S], j: usize) -> Matrix<S> {
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.at(i, j).scale(c));
            }
        }
        out
    }

    /// Bilinear extension in the second slot.
    pub fn apply_bv(&self, i: usize, y: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (j, c) in y.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.at(i, j).scale(c));
            }
        }
        out
    }

    /// Full bilinear extension.
    pub fn apply(&self, x: &[S], y: &[S]) -> Matrix<S> {
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out = out.add(&self.at(i, j).scale(&(a.clone() * b.clone())));
                }
            }
        }
        out
    }
}

/// Representation data of a 3-pre-Lie algebra: a skew `l` and an
/// unconstrained `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PreLieRep<S> {
    pub l: PairMap<S>,
    pub r: PairMap<S>,
}

impl<S: Scalar> PreLieRep<S> {
    pub fn new(l: PairMap<S>, r: PairMap<S>) -> Result<Self> {
        if l.dim_a != r.dim_a || l.dim_v != r.dim_v {
            return Err(Error::AmbientMismatch { left: l.dim_v, right: r.dim_v });
        }
        Ok(PreLieRep { l, r })
    }

    pub fn dim_a(&self) -> usize {
        self.l.dim_a
    }

    pub fn dim_v(&self) -> usize {
        self.l.dim_v
    }

    /// `mu(x,y) = l(x,y) + r(x,y) - r(y,x)` on a basis pair.
    pub fn mu(&self, i: usize, j: usize) -> Matrix<S> {
        self.l.at(i, j).add(self.r.at(i, j)).sub(self.r.at(j, i))
    }
}

/// Adjoint pair map of a 3-Lie algebra: `(x,y) -> [x,y,-]`.
pub fn adjoint_3lie<S: Scalar>(a: &TernaryAlgebra<S>) -> Result<PairMap<S>> {
    a.expect_kind(Kind::ThreeLie)?;
    let t = a.t1();
    Ok(PairMap::from_fn(a.dim(), a.dim(), |i, j| {
        Matrix::from_fn(a.dim(), a.dim(), |r, c| t.basis_product(i, j, c)[r].clone())
    }))
}

/// Adjoint representation of a 3-pre-Lie algebra: left multiplication
/// `l(x,y) = {x,y,-}` and right multiplication `r(x,y) = {-,x,y}`.
pub fn adjoint_3prelie<S: Scalar>(a: &TernaryAlgebra<S>) -> Result<PreLieRep<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    let t = a.t1();
    let n = a.dim();
    let l = PairMap::from_fn(n, n, |i, j| {
        Matrix::from_fn(n, n, |r, c| t.basis_product(i, j, c)[r].clone())
    });
    let r = PairMap::from_fn(n, n, |i, j| {
        Matrix::from_fn(n, n, |rr, c| t.basis_product(c, i, j)[rr].clone())
    });
    PreLieRep::new(l, r)
}

fn check_matrix_identity<S: Scalar>(
    check: &mut IdentityCheck<S>,
    at: &[usize],
    lhs: &Matrix<S>,
    rhs: &Matrix<S>,
) {
    if check.done() {
        return;
    }
    let lf = lhs.flatten();
    let rf = rhs.flatten();
    check.check(at, &lf, &rf);
}

/// Checks the two defining conditions of a 3-Lie representation on all basis
/// four-tuples, plus skew-symmetry of the pair map.
pub fn verify_3lie_rep<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rho: &PairMap<S>,
) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreeLie)?;
    if rho.dim_a() != a.dim() {
        return Err(Error::DimMismatch { expected: a.dim(), got: rho.dim_a() });
    }
    Ok(verify_pairmap_as_rep(a.t1(), rho, ["rep-skew", "rep-commutator", "rep-action"]))
}

/// Same checks against an arbitrary bracket tensor (shared with the `l`-part
/// check of a 3-pre-Lie representation, which runs against the sub-adjacent
/// bracket).
fn verify_pairmap_as_rep<S: Scalar>(
    bracket: &StructureTensor<S>,
    rho: &PairMap<S>,
    names: [&'static str; 3],
) -> VerificationReport<S> {
    let n = bracket.dim();
    let mut skew = IdentityCheck::new(names[0]);
    'skew: for i in 0..n {
        for j in 0..n {
            let lhs = rho.at(i, j).flatten();
            let rhs = rho.at(j, i).neg().flatten();
            skew.check(&[i, j], &lhs, &rhs);
            if skew.done() {
                break 'skew;
            }
        }
    }
    let mut cond1 = IdentityCheck::new(names[1]);
    let mut cond2 = IdentityCheck::new(names[2]);
    'outer: for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                for a4 in 0..n {
                    if cond1.done() && cond2.done() {
                        break 'outer;
                    }
                    let at = [a1, a2, a3, a4];
                    let r12 = rho.at(a1, a2);
                    let r34 = rho.at(a3, a4);
                    let b123 = bracket.basis_product(a1, a2, a3);
                    let b124 = bracket.basis_product(a1, a2, a4);
                    let lhs1 = r12.commutator(r34);
                    let rhs1 = rho.apply_vb(b123, a4).sub(&rho.apply_vb(b124, a3));
                    check_matrix_identity(&mut cond1, &at, &lhs1, &rhs1);
                    let lhs2 = rho.apply_vb(b123, a4);
                    let rhs2 = r12
                        .mul(r34)
                        .add(&rho.at(a2, a3).mul(rho.at(a1, a4)))
                        .add(&rho.at(a3, a1).mul(rho.at(a2, a4)));
                    check_matrix_identity(&mut cond2, &at, &lhs2, &rhs2);
                }
            }
        }
    }
    let violations = [skew, cond1, cond2].into_iter().filter_map(|c| c.violation).collect();
    VerificationReport::from_violations(violations)
}

/// Checks that `l` represents the sub-adjacent 3-Lie algebra and that the
/// four pair-map compatibility identities hold on all basis four-tuples.
pub fn verify_3prelie_rep<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rep: &PreLieRep<S>,
) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    if rep.dim_a() != a.dim() {
        return Err(Error::DimMismatch { expected: a.dim(), got: rep.dim_a() });
    }
    let sub = sub_adjacent_3lie_unchecked(a);
    let l_report =
        verify_pairmap_as_rep(sub.t1(), &rep.l, ["l-skew", "l-commutator", "l-action"]);

    let t = a.t1();
    let n = a.dim();
    let mut checks: Vec<IdentityCheck<S>> =
        ["prelie-rep-1", "prelie-rep-2", "prelie-rep-3", "prelie-rep-4"]
            .into_iter()
            .map(IdentityCheck::new)
            .collect();
    let (l, r) = (&rep.l, &rep.r);
    'outer: for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                for a4 in 0..n {
                    if checks.iter().all(IdentityCheck::done) {
                        break 'outer;
                    }
                    let at = [a1, a2, a3, a4];
                    let c123 = cyclic_sum(t, a1, a2, a3);
                    let mu12 = rep.mu(a1, a2);
                    let l12r34 = l.at(a1, a2).mul(r.at(a3, a4));
                    let r34mu12 = r.at(a3, a4).mul(&mu12);

                    let rhs1 = r34mu12
                        .add(&r.apply_vb(&c123, a4))
                        .add(&r.apply_bv(a3, t.basis_product(a1, a2, a4)));
                    check_matrix_identity(&mut checks[0], &at, &l12r34, &rhs1);

                    let lhs2 = r.apply_vb(&c123, a4);
                    let rhs2 = l12r34
                        .add(&l.at(a2, a3).mul(r.at(a1, a4)))
                        .add(&l.at(a3, a1).mul(r.at(a2, a4)));
                    check_matrix_identity(&mut checks[1], &at, &lhs2, &rhs2);

                    let lhs3 = r.apply_bv(a1, t.basis_product(a2, a3, a4));
                    let rhs3 = r34mu12
                        .sub(&r.at(a2, a4).mul(&rep.mu(a1, a3)))
                        .add(&l.at(a2, a3).mul(r.at(a1, a4)));
                    check_matrix_identity(&mut checks[2], &at, &lhs3, &rhs3);

                    let rhs4 = l12r34
                        .sub(&r.apply_bv(a2, t.basis_product(a1, a3, a4)))
                        .add(&r.apply_bv(a1, t.basis_product(a2, a3, a4)));
                    check_matrix_identity(&mut checks[3], &at, &r34mu12, &rhs4);
                }
            }
        }
    }
    let own = VerificationReport::from_violations(
        checks.into_iter().filter_map(|c| c.violation).collect(),
    );
    Ok(VerificationReport::merge([l_report, own]))
}

/// Semidirect sum of a 3-Lie algebra with a representation.
pub fn semidirect_3lie<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rho: &PairMap<S>,
) -> Result<TernaryAlgebra<S>> {
    if !verify_3lie_rep(a, rho)?.passed() {
        return Err(Error::Precondition { check: "3-lie-representation" });
    }
    Ok(semidirect_3lie_unchecked(a, rho))
}

pub fn semidirect_3lie_unchecked<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rho: &PairMap<S>,
) -> TernaryAlgebra<S> {
    let n = a.dim();
    let m = rho.dim_v();
    let dim = n + m;
    let t = a.t1();
    let tensor = StructureTensor::from_basis_fn(dim, |i, j, k| {
        let mut out = vec![S::zero(); dim];
        match (i < n, j < n, k < n) {
            (true, true, true) => {
                for (l, c) in t.basis_product(i, j, k).iter().enumerate() {
                    out[l] = c.clone();
                }
            }
            // one module index: bracket with two algebra arguments acts on it
            (true, true, false) => fill_v(&mut out, n, &rho.at(i, j).column(k - n)),
            (true, false, true) => fill_v(&mut out, n, &rho.at(k, i).column(j - n)),
            (false, true, true) => fill_v(&mut out, n, &rho.at(j, k).column(i - n)),
            _ => {}
        }
        out
    });
    TernaryAlgebra::three_lie(tensor)
}

fn fill_v<S: Scalar>(out: &mut [S], offset: usize, col: &[S]) {
    for (l, c) in col.iter().enumerate() {
        out[offset + l] = c.clone();
    }
}

/// Semidirect product of a 3-pre-Lie algebra with a representation:
/// `{x1+u1, x2+u2, x3+u3} = {x1,x2,x3} + l(x1,x2)u3 - r(x1,x3)u2 + r(x2,x3)u1`.
pub fn semidirect_3prelie<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rep: &PreLieRep<S>,
) -> Result<TernaryAlgebra<S>> {
    if !verify_3prelie_rep(a, rep)?.passed() {
        return Err(Error::Precondition { check: "3-pre-lie-representation" });
    }
    Ok(semidirect_3prelie_unchecked(a, rep))
}

pub fn semidirect_3prelie_unchecked<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rep: &PreLieRep<S>,
) -> TernaryAlgebra<S> {
    let n = a.dim();
    let m = rep.dim_v();
    let dim = n + m;
    let t = a.t1();
    let tensor = StructureTensor::from_basis_fn(dim, |i, j, k| {
        let mut out = vec![S::zero(); dim];
        match (i < n, j < n, k < n) {
            (true, true, true) => {
                for (l, c) in t.basis_product(i, j, k).iter().enumerate() {
                    out[l] = c.clone();
                }
            }
            (true, true, false) => fill_v(&mut out, n, &rep.l.at(i, j).column(k - n)),
            (true, false, true) => {
                fill_v(&mut out, n, &rep.r.at(i, k).neg().column(j - n))
            }
            (false, true, true) => fill_v(&mut out, n, &rep.r.at(j, k).column(i - n)),
            _ => {}
        }
        out
    });
    TernaryAlgebra::three_pre_lie(tensor)
}

/// The representation of the sub-adjacent 3-Lie algebra induced by a
/// 3-pre-Lie representation: `(x,y) -> l(x,y) - r(y,x) + r(x,y)`, i.e. the
/// pair map `mu`.
pub fn induced_sub_adjacent_rep<S: Scalar>(
    a: &TernaryAlgebra<S>,
    rep: &PreLieRep<S>,
) -> Result<PairMap<S>> {
    if !verify_3prelie_rep(a, rep)?.passed() {
        return Err(Error::Precondition { check: "3-pre-lie-representation" });
    }
    Ok(induced_sub_adjacent_rep_unchecked(rep))
}

pub fn induced_sub_adjacent_rep_unchecked<S: Scalar>(rep: &PreLieRep<S>) -> PairMap<S> {
    PairMap::from_fn(rep.dim_a(), rep.dim_v(), |i, j| rep.mu(i, j))
}

/// Dual representation on coordinates of the dual basis. The star of an
/// operator is minus its transpose, which makes the dual pair
/// `(-mu^T, r^T)`.
pub fn dual_rep<S: Scalar>(a: &TernaryAlgebra<S>, rep: &PreLieRep<S>) -> Result<PreLieRep<S>> {
    if !verify_3prelie_rep(a, rep)?.passed() {
        return Err(Error::Precondition { check: "3-pre-lie-representation" });
    }
    Ok(dual_rep_unchecked(rep))
}

pub fn dual_rep_unchecked<S: Scalar>(rep: &PreLieRep<S>) -> PreLieRep<S> {
    let l = PairMap::from_fn(rep.dim_a(), rep.dim_v(), |i, j| rep.mu(i, j).transpose().neg());
    let r = PairMap::from_fn(rep.dim_a(), rep.dim_v(), |i, j| rep.r.at(i, j).transpose());
    PreLieRep::new(l, r).expect("dims preserved")
}

/// The three pair maps carried by a verified 3-L-dendriform algebra: the
/// north-west left multiplication, the north-east right multiplication, and
/// their recombination representing the associated 3-Lie algebra.
pub fn dendriform_reps<S: Scalar>(
    d: &TernaryAlgebra<S>,
) -> Result<(PairMap<S>, PairMap<S>, PairMap<S>)> {
    d.expect_kind(Kind::ThreeLDendriform)?;
    if !d.is_verified() {
        return Err(Error::Precondition { check: "verify:3-l-dendriform" });
    }
    Ok(dendriform_reps_unchecked(d))
}

pub fn dendriform_reps_unchecked<S: Scalar>(
    d: &TernaryAlgebra<S>,
) -> (PairMap<S>, PairMap<S>, PairMap<S>) {
    let n = d.dim();
    let nw = d.t1();
    let ne = d.t2().expect("dendriform");
    let l_nw = PairMap::from_fn(n, n, |i, j| {
        Matrix::from_fn(n, n, |r, c| nw.basis_product(i, j, c)[r].clone())
    });
    let r_ne = PairMap::from_fn(n, n, |i, j| {
        Matrix::from_fn(n, n, |r, c| ne.basis_product(c, i, j)[r].clone())
    });
    let rho = PairMap::from_fn(n, n, |i, j| {
        Matrix::from_fn(n, n, |r, c| {
            nw.basis_product(i, j, c)[r].clone() + ne.basis_product(c, i, j)[r].clone()
                - ne.basis_product(c, j, i)[r].clone()
        })
    });
    (l_nw, r_ne, rho)
}
