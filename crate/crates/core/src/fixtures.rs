//! Reference algebras and operators used across the test suites and shipped
//! as committed fixture files.
//!
//! Basis indices are zero-based throughout. Tensors with a skew axiom are
//! stored fully completed, so every fixture is exactly what its file spells
//! out.

use num::BigInt;

use crate::linalg::Matrix;
use crate::oper::{BinaryLieAlgebra, SkewBilinearForm, TraceFunction};
use crate::tensor::StructureTensor;
use crate::{Rat, TernaryAlgebra};

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `c * e_i` in dimension `dim`.
pub fn scaled_basis_vec(dim: usize, i: usize, c: Rat) -> Vec<Rat> {
    let mut v = vec![rat_int(0); dim];
    v[i] = c;
    v
}

/// Basis vector `e_i` in dimension `dim`.
pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    scaled_basis_vec(dim, i, rat_int(1))
}

fn veci(entries: &[i64]) -> Vec<Rat> {
    entries.iter().map(|&n| rat_int(n)).collect()
}

/// Four-dimensional 3-Lie algebra with
/// `[e0,e1,e2]=e3, [e0,e1,e3]=e2, [e0,e2,e3]=e1, [e1,e2,e3]=e0`.
pub fn fix_l4() -> TernaryAlgebra<Rat> {
    let t = StructureTensor::from_entries(
        4,
        [
            ([0, 1, 2], basis_vec(4, 3)),
            ([0, 1, 3], basis_vec(4, 2)),
            ([0, 2, 3], basis_vec(4, 1)),
            ([1, 2, 3], basis_vec(4, 0)),
        ],
    )
    .unwrap()
    .complete_alternating()
    .unwrap();
    TernaryAlgebra::three_lie(t)
}

/// Four-dimensional product with `{e0,e1,e2} = -{e0,e1,e3} = e0+e1` and all
/// other products zero (up to the skew completion in the first two slots).
pub fn fix_p1() -> TernaryAlgebra<Rat> {
    let t = StructureTensor::from_entries(
        4,
        [
            ([0, 1, 2], veci(&[1, 1, 0, 0])),
            ([0, 1, 3], veci(&[-1, -1, 0, 0])),
        ],
    )
    .unwrap()
    .complete_skew12()
    .unwrap();
    TernaryAlgebra::three_pre_lie(t)
}

/// Four-dimensional 3-pre-Lie algebra with `{e0,e1,e2}=e3, {e0,e1,e3}=e2,
/// {e0,e2,e2}=-{e0,e3,e3}=e1, {e1,e2,e2}=-{e1,e3,e3}=e0`.
pub fn fix_p2() -> TernaryAlgebra<Rat> {
    let t = StructureTensor::from_entries(
        4,
        [
            ([0, 1, 2], basis_vec(4, 3)),
            ([0, 1, 3], basis_vec(4, 2)),
            ([0, 2, 2], basis_vec(4, 1)),
            ([0, 3, 3], scaled_basis_vec(4, 1, rat_int(-1))),
            ([1, 2, 2], basis_vec(4, 0)),
            ([1, 3, 3], scaled_basis_vec(4, 0, rat_int(-1))),
        ],
    )
    .unwrap()
    .complete_skew12()
    .unwrap();
    TernaryAlgebra::three_pre_lie(t)
}

/// Operator with `R(e0)=e0+e1, R(e1)=e2+e3, R(e2)=R(e3)=0`.
pub fn fix_r1() -> Matrix<Rat> {
    Matrix::from_columns(&[
        veci(&[1, 1, 0, 0]),
        veci(&[0, 0, 1, 1]),
        veci(&[0, 0, 0, 0]),
        veci(&[0, 0, 0, 0]),
    ])
}

/// Operator with `R(e0)=e1, R(e1)=-e0, R(e2)=e3, R(e3)=e2`.
pub fn fix_r2() -> Matrix<Rat> {
    Matrix::from_columns(&[
        veci(&[0, 1, 0, 0]),
        veci(&[-1, 0, 0, 0]),
        veci(&[0, 0, 0, 1]),
        veci(&[0, 0, 1, 0]),
    ])
}

/// The dendriform structure obtained by splitting `fix_p2` along `fix_r2`
/// (frozen from the exact construction; see the regression test pinning
/// `fix_d == ldend_from_rb_unchecked(fix_p2, fix_r2)`).
pub fn fix_d() -> TernaryAlgebra<Rat> {
    let nw = StructureTensor::from_entries(
        4,
        [
            ([0, 1, 2], basis_vec(4, 3)),
            ([0, 1, 3], basis_vec(4, 2)),
            ([0, 2, 3], scaled_basis_vec(4, 0, rat_int(-1))),
            ([0, 3, 2], basis_vec(4, 0)),
            ([1, 2, 3], basis_vec(4, 1)),
            ([1, 3, 2], scaled_basis_vec(4, 1, rat_int(-1))),
        ],
    )
    .unwrap()
    .complete_skew12()
    .unwrap();
    let ne = StructureTensor::from_entries(
        4,
        [
            ([0, 0, 2], basis_vec(4, 2)),
            ([0, 0, 3], basis_vec(4, 3)),
            ([0, 2, 2], scaled_basis_vec(4, 1, rat_int(-1))),
            ([0, 3, 3], basis_vec(4, 1)),
            ([1, 1, 2], basis_vec(4, 2)),
            ([1, 1, 3], basis_vec(4, 3)),
            ([1, 2, 2], scaled_basis_vec(4, 0, rat_int(-1))),
            ([1, 3, 3], basis_vec(4, 0)),
            ([2, 0, 3], scaled_basis_vec(4, 0, rat_int(-1))),
            ([2, 1, 3], basis_vec(4, 1)),
            ([3, 0, 2], basis_vec(4, 0)),
            ([3, 1, 2], scaled_basis_vec(4, 1, rat_int(-1))),
        ],
    )
    .unwrap();
    TernaryAlgebra::three_l_dendriform(nw, ne).unwrap()
}

/// The ten-product table as printed in the source example, skew-completed on
/// the north-west side. Misses twelve products of the actual construction and
/// fails four of the dendriform identities; kept as a negative fixture.
pub fn fix_d_as_printed() -> TernaryAlgebra<Rat> {
    let nw = StructureTensor::from_entries(
        4,
        [([0, 1, 2], basis_vec(4, 3)), ([0, 1, 3], basis_vec(4, 2))],
    )
    .unwrap()
    .complete_skew12()
    .unwrap();
    let ne = StructureTensor::from_entries(
        4,
        [
            ([0, 0, 2], basis_vec(4, 2)),
            ([0, 0, 3], basis_vec(4, 3)),
            ([0, 2, 2], scaled_basis_vec(4, 1, rat_int(-1))),
            ([0, 3, 3], basis_vec(4, 1)),
            ([1, 1, 2], basis_vec(4, 2)),
            ([1, 1, 3], basis_vec(4, 3)),
            ([1, 2, 2], scaled_basis_vec(4, 0, rat_int(-1))),
            ([1, 3, 3], basis_vec(4, 0)),
        ],
    )
    .unwrap();
    TernaryAlgebra::three_l_dendriform(nw, ne).unwrap()
}

/// Nilpotent four-dimensional 3-Lie algebra `[e0,e1,e2]=e3`.
pub fn nil4() -> TernaryAlgebra<Rat> {
    let t = StructureTensor::from_entries(4, [([0, 1, 2], basis_vec(4, 3))])
        .unwrap()
        .complete_alternating()
        .unwrap();
    TernaryAlgebra::three_lie(t)
}

/// `diag(1,1,1,1/3)`: a Rota-Baxter operator on [`nil4`] that commutes with
/// itself, giving a nonzero commuting pair.
pub fn nil4_rb_diag() -> Matrix<Rat> {
    Matrix::from_columns(&[
        basis_vec(4, 0),
        basis_vec(4, 1),
        basis_vec(4, 2),
        scaled_basis_vec(4, 3, rat(1, 3)),
    ])
}

/// Two-dimensional 3-pre-Lie algebra `{e0,e1,e0}=e1`. Every two-dimensional
/// 3-pre-Lie algebra is symplectic with the standard area form.
pub fn symp2() -> TernaryAlgebra<Rat> {
    let t = StructureTensor::from_entries(2, [([0, 1, 0], basis_vec(2, 1))])
        .unwrap()
        .complete_skew12()
        .unwrap();
    TernaryAlgebra::three_pre_lie(t)
}

/// The standard area form on two dimensions.
pub fn symp2_form() -> SkewBilinearForm<Rat> {
    SkewBilinearForm::new(Matrix::from_rows(vec![veci(&[0, 1]), veci(&[-1, 0])])).unwrap()
}

/// Heisenberg algebra `[e0,e1]=e2` in dimension three.
pub fn heisenberg3() -> BinaryLieAlgebra<Rat> {
    BinaryLieAlgebra::new(3, [([0, 1], basis_vec(3, 2))]).unwrap()
}

/// Solvable algebra `[e0,e1]=e1` in dimension three (third direction inert).
pub fn solvable3() -> BinaryLieAlgebra<Rat> {
    BinaryLieAlgebra::new(3, [([0, 1], basis_vec(3, 1))]).unwrap()
}

/// The covector `e2*`, a trace function for [`solvable3`] but not for
/// [`heisenberg3`].
pub fn tau_e2_star(g: &BinaryLieAlgebra<Rat>) -> crate::Result<TraceFunction<Rat>> {
    TraceFunction::new(g, basis_vec(3, 2))
}
