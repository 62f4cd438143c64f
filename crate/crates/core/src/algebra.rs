//! Ternary algebra kinds and exact verification of their defining identities.
//!
//! Every identity is multilinear, so checking it on all basis tuples decides
//! it on the whole space. Verifiers scan tuples in lexicographic order and
//! record, per identity, the first failing tuple together with the residual
//! vector (left side minus right side).

use std::fmt;

use crate::linalg::{vec_is_zero, vec_sub};
use crate::tensor::StructureTensor;
use crate::{Error, Result, Scalar};

/// The three algebra kinds handled by the workbench.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Kind {
    ThreeLie,
    ThreePreLie,
    ThreeLDendriform,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::ThreeLie => "3-lie",
            Kind::ThreePreLie => "3-pre-lie",
            Kind::ThreeLDendriform => "3-l-dendriform",
        })
    }
}

/// A finite-dimensional ternary algebra in structure-constant form.
///
/// `t1` holds the bracket (3-Lie), the product (3-pre-Lie) or the north-west
/// product of a 3-L-dendriform algebra; `t2` holds the north-east product and
/// is present exactly for the dendriform kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TernaryAlgebra<S> {
    kind: Kind,
    dim: usize,
    t1: StructureTensor<S>,
    t2: Option<StructureTensor<S>>,
}

impl<S: Scalar> TernaryAlgebra<S> {
    pub fn three_lie(t: StructureTensor<S>) -> Self {
        TernaryAlgebra { kind: Kind::ThreeLie, dim: t.dim(), t1: t, t2: None }
    }

    pub fn three_pre_lie(t: StructureTensor<S>) -> Self {
        TernaryAlgebra { kind: Kind::ThreePreLie, dim: t.dim(), t1: t, t2: None }
    }

    pub fn three_l_dendriform(nw: StructureTensor<S>, ne: StructureTensor<S>) -> Result<Self> {
        if nw.dim() != ne.dim() {
            return Err(Error::DimMismatch { expected: nw.dim(), got: ne.dim() });
        }
        Ok(TernaryAlgebra { kind: Kind::ThreeLDendriform, dim: nw.dim(), t1: nw, t2: Some(ne) })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Bracket / product / north-west tensor, depending on the kind.
    pub fn t1(&self) -> &StructureTensor<S> {
        &self.t1
    }

    /// North-east tensor (dendriform kind only).
    pub fn t2(&self) -> Option<&StructureTensor<S>> {
        self.t2.as_ref()
    }

    pub fn expect_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch { expected: kind, got: self.kind });
        }
        Ok(())
    }

    /// Runs the verifier matching the algebra's kind.
    pub fn verify(&self) -> VerificationReport<S> {
        match self.kind {
            Kind::ThreeLie => verify_3lie(self).expect("kind checked"),
            Kind::ThreePreLie => verify_3prelie(self).expect("kind checked"),
            Kind::ThreeLDendriform => verify_3ldendriform(self).expect("kind checked"),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verify().passed()
    }

    /// All product tensors of the algebra (one, or two for dendriform).
    pub fn products(&self) -> Vec<&StructureTensor<S>> {
        match &self.t2 {
            None => vec![&self.t1],
            Some(t2) => vec![&self.t1, t2],
        }
    }
}

/// A single identity failure: which identity, at which basis tuple, and the
/// nonzero residual (left minus right side re-evaluated there).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation<S> {
    pub identity: &'static str,
    pub at: Vec<usize>,
    pub residual: Vec<S>,
}

/// Outcome of a verifier run; passing means no violations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport<S> {
    pub violations: Vec<Violation<S>>,
}

impl<S: Scalar> VerificationReport<S> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn from_violations(mut violations: Vec<Violation<S>>) -> Self {
        violations.sort_by(|a, b| (a.identity, &a.at).cmp(&(b.identity, &b.at)));
        VerificationReport { violations }
    }

    pub(crate) fn merge(reports: impl IntoIterator<Item = VerificationReport<S>>) -> Self {
        VerificationReport::from_violations(
            reports.into_iter().flat_map(|r| r.violations).collect(),
        )
    }
}

/// Tracks the lexicographically first failing tuple for one identity.
pub(crate) struct IdentityCheck<S> {
    pub name: &'static str,
    pub violation: Option<Violation<S>>,
}

impl<S: Scalar> IdentityCheck<S> {
    pub fn new(name: &'static str) -> Self {
        IdentityCheck { name, violation: None }
    }

    pub fn done(&self) -> bool {
        self.violation.is_some()
    }

    /// Records `lhs - rhs` if nonzero. Returns true when already settled.
    pub fn check(&mut self, at: &[usize], lhs: &[S], rhs: &[S]) {
        if self.violation.is_some() {
            return;
        }
        let residual = vec_sub(lhs, rhs);
        if !vec_is_zero(&residual) {
            self.violation = Some(Violation { identity: self.name, at: at.to_vec(), residual });
        }
    }
}

fn collect<S: Scalar>(checks: Vec<IdentityCheck<S>>) -> VerificationReport<S> {
    VerificationReport::from_violations(checks.into_iter().filter_map(|c| c.violation).collect())
}

/// Cyclic three-commutator of a product with skew first pair:
/// `{i,j,k} + {j,k,i} + {k,i,j}` on a basis triple.
pub fn cyclic_sum<S: Scalar>(t: &StructureTensor<S>, i: usize, j: usize, k: usize) -> Vec<S> {
    let mut v = t.basis_product(i, j, k).to_vec();
    for (a, b) in v.iter_mut().zip(t.basis_product(j, k, i)) {
        *a = a.clone() + b.clone();
    }
    for (a, b) in v.iter_mut().zip(t.basis_product(k, i, j)) {
        *a = a.clone() + b.clone();
    }
    v
}

fn vec_add3<S: Scalar>(a: Vec<S>, b: Vec<S>, c: Vec<S>) -> Vec<S> {
    a.into_iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| x + y + z)
        .collect()
}

/// Checks full skew-symmetry and the fundamental identity on all basis tuples.
pub fn verify_3lie<S: Scalar>(a: &TernaryAlgebra<S>) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreeLie)?;
    let t = a.t1();
    let n = a.dim();
    let mut alt = IdentityCheck::new("alternating");
    if let Some((at, residual)) = t.first_alternating_violation() {
        alt.violation = Some(Violation { identity: alt.name, at: at.to_vec(), residual });
    }
    let mut fi = IdentityCheck::new("fundamental");
    'outer: for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                for a4 in 0..n {
                    for a5 in 0..n {
                        if fi.done() {
                            break 'outer;
                        }
                        let lhs = t.eval_bbv(a1, a2, t.basis_product(a3, a4, a5));
                        let rhs = vec_add3(
                            t.eval_vbb(t.basis_product(a1, a2, a3), a4, a5),
                            t.eval_bvb(a3, t.basis_product(a1, a2, a4), a5),
                            t.eval_bbv(a3, a4, t.basis_product(a1, a2, a5)),
                        );
                        fi.check(&[a1, a2, a3, a4, a5], &lhs, &rhs);
                    }
                }
            }
        }
    }
    Ok(collect(vec![alt, fi]))
}

/// Checks skew-symmetry in the first two slots and both five-variable
/// identities, expanding the three-commutator internally.
pub fn verify_3prelie<S: Scalar>(a: &TernaryAlgebra<S>) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreePreLie)?;
    let t = a.t1();
    let n = a.dim();
    let mut skew = IdentityCheck::new("skew-12");
    if let Some((at, residual)) = t.first_skew12_violation() {
        skew.violation = Some(Violation { identity: skew.name, at: at.to_vec(), residual });
    }
    let mut id1 = IdentityCheck::new("prelie-1");
    let mut id2 = IdentityCheck::new("prelie-2");
    'outer: for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                for a4 in 0..n {
                    for a5 in 0..n {
                        if id1.done() && id2.done() {
                            break 'outer;
                        }
                        let at = [a1, a2, a3, a4, a5];
                        if !id1.done() {
                            let lhs = t.eval_bbv(a1, a2, t.basis_product(a3, a4, a5));
                            let rhs = vec_add3(
                                t.eval_vbb(&cyclic_sum(t, a1, a2, a3), a4, a5),
                                t.eval_bvb(a3, &cyclic_sum(t, a1, a2, a4), a5),
                                t.eval_bbv(a3, a4, t.basis_product(a1, a2, a5)),
                            );
                            id1.check(&at, &lhs, &rhs);
                        }
                        if !id2.done() {
                            let lhs = t.eval_vbb(&cyclic_sum(t, a1, a2, a3), a4, a5);
                            let rhs = vec_add3(
                                t.eval_bbv(a1, a2, t.basis_product(a3, a4, a5)),
                                t.eval_bbv(a2, a3, t.basis_product(a1, a4, a5)),
                                t.eval_bbv(a3, a1, t.basis_product(a2, a4, a5)),
                            );
                            id2.check(&at, &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }
    Ok(collect(vec![skew, id1, id2]))
}

/// Horizontal recombination `{i,j,k}^h = nw(i,j,k) + ne(i,j,k) - ne(j,i,k)`.
pub fn horizontal_bracket<S: Scalar>(
    nw: &StructureTensor<S>,
    ne: &StructureTensor<S>,
    i: usize,
    j: usize,
    k: usize,
) -> Vec<S> {
    nw.basis_product(i, j, k)
        .iter()
        .zip(ne.basis_product(i, j, k))
        .zip(ne.basis_product(j, i, k))
        .map(|((a, b), c)| a.clone() + b.clone() - c.clone())
        .collect()
}

/// Vertical recombination `{i,j,k}^v = nw(i,j,k) + ne(k,i,j) - ne(k,j,i)`.
pub fn vertical_bracket<S: Scalar>(
    nw: &StructureTensor<S>,
    ne: &StructureTensor<S>,
    i: usize,
    j: usize,
    k: usize,
) -> Vec<S> {
    nw.basis_product(i, j, k)
        .iter()
        .zip(ne.basis_product(k, i, j))
        .zip(ne.basis_product(k, j, i))
        .map(|((a, b), c)| a.clone() + b.clone() - c.clone())
        .collect()
}

/// Cyclic sum of the horizontal bracket; coincides with the cyclic sum of the
/// vertical bracket as multilinear maps.
pub fn commutator_bracket<S: Scalar>(
    nw: &StructureTensor<S>,
    ne: &StructureTensor<S>,
    i: usize,
    j: usize,
    k: usize,
) -> Vec<S> {
    vec_add3(
        horizontal_bracket(nw, ne, i, j, k),
        horizontal_bracket(nw, ne, j, k, i),
        horizontal_bracket(nw, ne, k, i, j),
    )
}

/// Checks the north-west skew identity and the six five-variable compatibility
/// identities of a 3-L-dendriform algebra.
pub fn verify_3ldendriform<S: Scalar>(a: &TernaryAlgebra<S>) -> Result<VerificationReport<S>> {
    a.expect_kind(Kind::ThreeLDendriform)?;
    let nw = a.t1();
    let ne = a.t2().expect("dendriform kind carries two tensors");
    let n = a.dim();
    let mut skew = IdentityCheck::new("nw-skew-12");
    if let Some((at, residual)) = nw.first_skew12_violation() {
        skew.violation = Some(Violation { identity: skew.name, at: at.to_vec(), residual });
    }
    let mut ids: Vec<IdentityCheck<S>> =
        ["dend-1", "dend-2", "dend-3", "dend-4", "dend-5", "dend-6"]
            .into_iter()
            .map(IdentityCheck::new)
            .collect();
    let h = |i, j, k| horizontal_bracket(nw, ne, i, j, k);
    let v = |i, j, k| vertical_bracket(nw, ne, i, j, k);
    let c = |i, j, k| commutator_bracket(nw, ne, i, j, k);
    'outer: for a1 in 0..n {
        for a2 in 0..n {
            for a3 in 0..n {
                for a4 in 0..n {
                    for a5 in 0..n {
                        if ids.iter().all(IdentityCheck::done) {
                            break 'outer;
                        }
                        let at = [a1, a2, a3, a4, a5];
                        if !ids[0].done() {
                            let lhs = vec_sub(
                                &nw.eval_bbv(a1, a2, nw.basis_product(a3, a4, a5)),
                                &nw.eval_bbv(a3, a4, nw.basis_product(a1, a2, a5)),
                            );
                            let rhs = vec_sub(
                                &nw.eval_vbb(&c(a1, a2, a3), a4, a5),
                                &nw.eval_vbb(&c(a1, a2, a4), a3, a5),
                            );
                            ids[0].check(&at, &lhs, &rhs);
                        }
                        if !ids[1].done() {
                            let lhs = vec_sub(
                                &nw.eval_bbv(a1, a2, ne.basis_product(a5, a3, a4)),
                                &ne.eval_bbv(a5, a3, &h(a1, a2, a4)),
                            );
                            let rhs = {
                                let mut r = ne.eval_bvb(a5, &c(a1, a2, a3), a4);
                                for (x, y) in
                                    r.iter_mut().zip(ne.eval_vbb(&v(a1, a2, a5), a3, a4))
                                {
                                    *x = x.clone() + y;
                                }
                                r
                            };
                            ids[1].check(&at, &lhs, &rhs);
                        }
                        if !ids[2].done() {
                            let lhs = vec_sub(
                                &ne.eval_bbv(a5, a1, &h(a2, a3, a4)),
                                &nw.eval_bbv(a2, a3, ne.basis_product(a5, a1, a4)),
                            );
                            let rhs = vec_sub(
                                &ne.eval_vbb(&v(a1, a2, a5), a3, a4),
                                &ne.eval_vbb(&v(a1, a3, a5), a2, a4),
                            );
                            ids[2].check(&at, &lhs, &rhs);
                        }
                        if !ids[3].done() {
                            let lhs = nw.eval_vbb(&c(a1, a2, a3), a4, a5);
                            let rhs = vec_add3(
                                nw.eval_bbv(a1, a2, nw.basis_product(a3, a4, a5)),
                                nw.eval_bbv(a2, a3, nw.basis_product(a1, a4, a5)),
                                nw.eval_bbv(a3, a1, nw.basis_product(a2, a4, a5)),
                            );
                            ids[3].check(&at, &lhs, &rhs);
                        }
                        if !ids[4].done() {
                            let lhs = ne.eval_bvb(a5, &c(a1, a2, a3), a4);
                            let rhs = vec_add3(
                                nw.eval_bbv(a1, a2, ne.basis_product(a5, a3, a4)),
                                nw.eval_bbv(a2, a3, ne.basis_product(a5, a1, a4)),
                                nw.eval_bbv(a3, a1, ne.basis_product(a5, a2, a4)),
                            );
                            ids[4].check(&at, &lhs, &rhs);
                        }
                        if !ids[5].done() {
                            let lhs: Vec<S> = nw
                                .eval_bbv(a1, a2, ne.basis_product(a5, a3, a4))
                                .into_iter()
                                .zip(ne.eval_bbv(a5, a1, &h(a2, a3, a4)))
                                .map(|(x, y)| x + y)
                                .collect();
                            let rhs: Vec<S> = ne
                                .eval_bbv(a5, a2, &h(a1, a3, a4))
                                .into_iter()
                                .zip(ne.eval_vbb(&v(a1, a2, a5), a3, a4))
                                .map(|(x, y)| x + y)
                                .collect();
                            ids[5].check(&at, &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }
    let mut all = vec![skew];
    all.extend(ids);
    Ok(collect(all))
}

fn require_verified<S: Scalar>(a: &TernaryAlgebra<S>, check: &'static str) -> Result<()> {
    if !a.is_verified() {
        return Err(Error::Precondition { check });
    }
    Ok(())
}

/// Associated horizontal 3-pre-Lie algebra of a verified dendriform algebra.
pub fn horizontal_prelie<S: Scalar>(d: &TernaryAlgebra<S>) -> Result<TernaryAlgebra<S>> {
    d.expect_kind(Kind::ThreeLDendriform)?;
    require_verified(d, "verify:3-l-dendriform")?;
    Ok(horizontal_prelie_unchecked(d))
}

/// Horizontal recombination without the verification precondition.
pub fn horizontal_prelie_unchecked<S: Scalar>(d: &TernaryAlgebra<S>) -> TernaryAlgebra<S> {
    let (nw, ne) = (d.t1(), d.t2().expect("dendriform"));
    TernaryAlgebra::three_pre_lie(StructureTensor::from_basis_fn(d.dim(), |i, j, k| {
        horizontal_bracket(nw, ne, i, j, k)
    }))
}

/// Associated vertical 3-pre-Lie algebra of a verified dendriform algebra.
pub fn vertical_prelie<S: Scalar>(d: &TernaryAlgebra<S>) -> Result<TernaryAlgebra<S>> {
    d.expect_kind(Kind::ThreeLDendriform)?;
    require_verified(d, "verify:3-l-dendriform")?;
    Ok(vertical_prelie_unchecked(d))
}

pub fn vertical_prelie_unchecked<S: Scalar>(d: &TernaryAlgebra<S>) -> TernaryAlgebra<S> {
    let (nw, ne) = (d.t1(), d.t2().expect("dendriform"));
    TernaryAlgebra::three_pre_lie(StructureTensor::from_basis_fn(d.dim(), |i, j, k| {
        vertical_bracket(nw, ne, i, j, k)
    }))
}

/// Associated 3-Lie algebra of a verified dendriform algebra (cyclic sum of
/// either recombined bracket).
pub fn commutator_3lie<S: Scalar>(d: &TernaryAlgebra<S>) -> Result<TernaryAlgebra<S>> {
    d.expect_kind(Kind::ThreeLDendriform)?;
    require_verified(d, "verify:3-l-dendriform")?;
    Ok(commutator_3lie_unchecked(d))
}

pub fn commutator_3lie_unchecked<S: Scalar>(d: &TernaryAlgebra<S>) -> TernaryAlgebra<S> {
    let (nw, ne) = (d.t1(), d.t2().expect("dendriform"));
    TernaryAlgebra::three_lie(StructureTensor::from_basis_fn(d.dim(), |i, j, k| {
        commutator_bracket(nw, ne, i, j, k)
    }))
}

/// Sub-adjacent 3-Lie algebra of a verified 3-pre-Lie algebra.
pub fn sub_adjacent_3lie<S: Scalar>(p: &TernaryAlgebra<S>) -> Result<TernaryAlgebra<S>> {
    p.expect_kind(Kind::ThreePreLie)?;
    require_verified(p, "verify:3-pre-lie")?;
    Ok(sub_adjacent_3lie_unchecked(p))
}

pub fn sub_adjacent_3lie_unchecked<S: Scalar>(p: &TernaryAlgebra<S>) -> TernaryAlgebra<S> {
    let t = p.t1();
    TernaryAlgebra::three_lie(StructureTensor::from_basis_fn(p.dim(), |i, j, k| {
        cyclic_sum(t, i, j, k)
    }))
}

/// A 3-pre-Lie algebra is a 3-L-dendriform algebra with vanishing north-east
/// product; the horizontal recombination gives the product back.
pub fn embed_prelie_as_dendriform<S: Scalar>(p: &TernaryAlgebra<S>) -> Result<TernaryAlgebra<S>> {
    p.expect_kind(Kind::ThreePreLie)?;
    TernaryAlgebra::three_l_dendriform(p.t1().clone(), StructureTensor::new(p.dim()))
}
