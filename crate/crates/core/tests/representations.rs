//! Representation-layer verdicts: adjoint representations, the
//! rep-iff-semidirect equivalences, induced and dual representations.

use ternalg::algebra::sub_adjacent_3lie_unchecked;
use ternalg::fixtures::{self, rat_int};
use ternalg::rep::{
    adjoint_3lie, adjoint_3prelie, dendriform_reps, dual_rep, dual_rep_unchecked,
    induced_sub_adjacent_rep, semidirect_3lie, semidirect_3prelie, semidirect_3prelie_unchecked,
    verify_3lie_rep, verify_3prelie_rep, PairMap, PreLieRep,
};
use ternalg::{Matrix, Rat};

#[test]
fn adjoint_of_l4_is_a_representation() {
    let l4 = fixtures::fix_l4();
    let ad = adjoint_3lie(&l4).unwrap();
    assert!(ad.is_skew());
    assert!(verify_3lie_rep(&l4, &ad).unwrap().passed());
}

#[test]
fn zero_rep_is_a_representation() {
    let l4 = fixtures::fix_l4();
    let zero = PairMap::<Rat>::zero(4, 2);
    assert!(verify_3lie_rep(&l4, &zero).unwrap().passed());
}

#[test]
fn perturbed_adjoint_fails() {
    let l4 = fixtures::fix_l4();
    let ad = adjoint_3lie(&l4).unwrap();
    let bad = PairMap::from_fn(4, 4, |i, j| {
        let mut m = ad.at(i, j).clone();
        if (i, j) == (0, 1) {
            m.set(0, 0, m.at(0, 0).clone() + rat_int(1));
        }
        if (i, j) == (1, 0) {
            m.set(0, 0, m.at(0, 0).clone() - rat_int(1));
        }
        m
    });
    assert!(bad.is_skew());
    assert!(!verify_3lie_rep(&l4, &bad).unwrap().passed());
}

#[test]
fn adjoint_of_p2_is_a_prelie_representation() {
    let p2 = fixtures::fix_p2();
    let rep = adjoint_3prelie(&p2).unwrap();
    let report = verify_3prelie_rep(&p2, &rep).unwrap();
    assert!(report.passed(), "violations: {:?}", report.violations);
}

#[test]
fn zero_prelie_rep_passes() {
    let p2 = fixtures::fix_p2();
    let rep = PreLieRep::new(PairMap::<Rat>::zero(4, 3), PairMap::zero(4, 3)).unwrap();
    assert!(verify_3prelie_rep(&p2, &rep).unwrap().passed());
}

// fix_p1 is not a 3-pre-Lie algebra, and its left/right multiplications are
// accordingly not a representation of it.
#[test]
fn adjoint_of_p1_fails_honestly() {
    let p1 = fixtures::fix_p1();
    let rep = adjoint_3prelie(&p1).unwrap();
    let report = verify_3prelie_rep(&p1, &rep).unwrap();
    assert!(!report.passed());
}

#[test]
fn semidirect_3lie_with_adjoint_passes() {
    let l4 = fixtures::fix_l4();
    let ad = adjoint_3lie(&l4).unwrap();
    let big = semidirect_3lie(&l4, &ad).unwrap();
    assert_eq!(big.dim(), 8);
    assert!(big.verify().passed());
}

#[test]
fn semidirect_3lie_with_zero_rep_keeps_module_central() {
    let l4 = fixtures::fix_l4();
    let zero = PairMap::<Rat>::zero(4, 1);
    let big = semidirect_3lie(&l4, &zero).unwrap();
    assert_eq!(big.dim(), 5);
    assert!(big.verify().passed());
    // any bracket touching the module coordinate vanishes
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                if i == 4 || j == 4 || k == 4 {
                    assert!(big.t1().basis_product(i, j, k).iter().all(|x| x == &rat_int(0)));
                }
            }
        }
    }
}

#[test]
fn semidirect_3prelie_with_adjoint_passes() {
    let p2 = fixtures::fix_p2();
    let rep = adjoint_3prelie(&p2).unwrap();
    let big = semidirect_3prelie(&p2, &rep).unwrap();
    assert_eq!(big.dim(), 8);
    assert!(big.verify().passed());
}

// The representation conditions and the semidirect verification are two
// routes to the same statement; a corrupted `r` must fail through both.
#[test]
fn corrupted_rep_fails_both_routes() {
    let p2 = fixtures::fix_p2();
    let rep = adjoint_3prelie(&p2).unwrap();
    let bad_r = PairMap::from_fn(4, 4, |i, j| {
        let mut m = rep.r.at(i, j).clone();
        if (i, j) == (2, 2) {
            m.set(1, 1, m.at(1, 1).clone() + rat_int(1));
        }
        m
    });
    let bad = PreLieRep::new(rep.l.clone(), bad_r).unwrap();
    assert!(!verify_3prelie_rep(&p2, &bad).unwrap().passed());
    let big = semidirect_3prelie_unchecked(&p2, &bad);
    assert!(!big.verify().passed());
    assert!(semidirect_3prelie(&p2, &bad).is_err());
}

#[test]
fn induced_rep_of_adjoint_passes_on_sub_adjacent() {
    let p2 = fixtures::fix_p2();
    let rep = adjoint_3prelie(&p2).unwrap();
    let mu = induced_sub_adjacent_rep(&p2, &rep).unwrap();
    let sub = sub_adjacent_3lie_unchecked(&p2);
    assert!(verify_3lie_rep(&sub, &mu).unwrap().passed());
}

#[test]
fn induced_rep_with_zero_r_is_l() {
    let p2 = fixtures::fix_p2();
    let rep = adjoint_3prelie(&p2).unwrap();
    let l_only = PreLieRep::new(rep.l.clone(), PairMap::zero(4, 4)).unwrap();
    let mu = ternalg::rep::induced_sub_adjacent_rep_unchecked(&l_only);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(mu.at(i, j), rep.l.at(i, j));
        }
    }
}

#[test]
fn dual_of_adjoint_passes_and_double_dual_is_identity() {
    let p2 = fixtures::fix_p2();
    let rep = adjoint_3prelie(&p2).unwrap();
    let dual = dual_rep(&p2, &rep).unwrap();
    assert!(verify_3prelie_rep(&p2, &dual).unwrap().passed());
    let double = dual_rep_unchecked(&dual);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(double.l.at(i, j), rep.l.at(i, j));
            assert_eq!(double.r.at(i, j), rep.r.at(i, j));
        }
    }
    // dual of the zero representation is zero
    let zero = PreLieRep::new(PairMap::<Rat>::zero(4, 2), PairMap::zero(4, 2)).unwrap();
    let dz = dual_rep_unchecked(&zero);
    assert_eq!(dz.l.at(0, 1), &Matrix::zeros(2, 2));
    assert_eq!(dz.r.at(3, 2), &Matrix::zeros(2, 2));
}

#[test]
fn dendriform_reps_of_fix_d_pass_all_three_targets() {
    let d = fixtures::fix_d();
    let (l_nw, r_ne, rho) = dendriform_reps(&d).unwrap();
    let h = ternalg::algebra::horizontal_prelie(&d).unwrap();
    let c = ternalg::algebra::commutator_3lie(&d).unwrap();
    let pair = PreLieRep::new(l_nw.clone(), r_ne).unwrap();
    assert!(verify_3prelie_rep(&h, &pair).unwrap().passed());
    assert!(verify_3lie_rep(&c, &l_nw).unwrap().passed());
    assert!(verify_3lie_rep(&c, &rho).unwrap().passed());
}

#[test]
fn dendriform_reps_of_embedded_prelie_collapse_to_l() {
    let p2 = fixtures::fix_p2();
    let d = ternalg::algebra::embed_prelie_as_dendriform(&p2).unwrap();
    let (l_nw, _r_ne, rho) = dendriform_reps(&d).unwrap();
    let rep = adjoint_3prelie(&p2).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(l_nw.at(i, j), rep.l.at(i, j));
            assert_eq!(rho.at(i, j), rep.l.at(i, j));
        }
    }
}
