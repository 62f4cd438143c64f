//! Independent brute-force oracles used by the test suites.
//!
//! The dense solver here deliberately avoids the production assembly path:
//! constraint matrices are built column by column, by evaluating the defining
//! identity at matrix-unit endomorphisms through full multilinear evaluation,
//! and the nullspace comes from a local elimination routine. Agreement with
//! the production solvers is asserted after both sides are canonicalized.

use ternalg::{Rat, Role, Subspace, TernaryAlgebra};

fn zero(n: usize) -> Vec<Rat> {
    vec![Rat::from_integer(0.into()); n]
}

fn basis(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zero(n);
    v[i] = Rat::from_integer(1.into());
    v
}

/// Applies the flattened endomorphism stored at component `p` of `tuple` to a
/// vector.
fn apply_component(tuple: &[Rat], p: usize, n: usize, v: &[Rat]) -> Vec<Rat> {
    let mut out = zero(n);
    for r in 0..n {
        for c in 0..n {
            let m = &tuple[p * n * n + r * n + c];
            out[r] += m.clone() * v[c].clone();
        }
    }
    out
}

/// Residual of the defining identity of `role` for the given tuple of
/// endomorphisms, concatenated over every product, basis triple and (for the
/// centroid families) slot equation.
fn residual(a: &TernaryAlgebra<Rat>, role: Role, tuple: &[Rat]) -> Vec<Rat> {
    let n = a.dim();
    let ap = |p: usize, v: &[Rat]| apply_component(tuple, p, n, v);
    let mut out = Vec::new();
    for t in a.products() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (basis(n, i), basis(n, j), basis(n, k));
                    let p = t.eval(&ei, &ej, &ek).unwrap();
                    let slot = |s: usize, m: usize| {
                        let (x, y, z) = match s {
                            0 => (ap(m, &ei), ej.clone(), ek.clone()),
                            1 => (ei.clone(), ap(m, &ej), ek.clone()),
                            _ => (ei.clone(), ej.clone(), ap(m, &ek)),
                        };
                        t.eval(&x, &y, &z).unwrap()
                    };
                    match role {
                        Role::Der => {
                            let lhs = ap(0, &p);
                            for l in 0..n {
                                out.push(
                                    lhs[l].clone()
                                        - slot(0, 0)[l].clone()
                                        - slot(1, 0)[l].clone()
                                        - slot(2, 0)[l].clone(),
                                );
                            }
                        }
                        Role::QDerPair => {
                            let lhs = ap(1, &p);
                            for l in 0..n {
                                out.push(
                                    lhs[l].clone()
                                        - slot(0, 0)[l].clone()
                                        - slot(1, 0)[l].clone()
                                        - slot(2, 0)[l].clone(),
                                );
                            }
                        }
                        Role::GDerQuad => {
                            let lhs = ap(3, &p);
                            for l in 0..n {
                                out.push(
                                    lhs[l].clone()
                                        - slot(0, 0)[l].clone()
                                        - slot(1, 1)[l].clone()
                                        - slot(2, 2)[l].clone(),
                                );
                            }
                        }
                        Role::Centroid => {
                            let lhs = ap(0, &p);
                            for s in 0..3 {
                                let rhs = slot(s, 0);
                                for l in 0..n {
                                    out.push(lhs[l].clone() - rhs[l].clone());
                                }
                            }
                        }
                        Role::QCentroid => {
                            for (s1, s2) in [(0, 1), (1, 2)] {
                                let (a1, a2) = (slot(s1, 0), slot(s2, 0));
                                for l in 0..n {
                                    out.push(a1[l].clone() - a2[l].clone());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Local Gauss-Jordan nullspace over the rationals; independent of the
/// production elimination.
fn local_nullspace(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    let zero_r = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for c in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][c] != zero_r) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][c].clone();
        for x in rows[rank].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != zero_r {
                let f = rows[r][c].clone();
                for k in 0..ncols {
                    let sub = f.clone() * rows[rank][k].clone();
                    rows[r][k] = rows[r][k].clone() - sub;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero_r.clone(); ncols];
        v[free] = one.clone();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[ri][free].clone();
        }
        out.push(v);
    }
    out
}

/// Dense brute-force solution space for any derivation-type family,
/// canonicalized so it can be compared literally with the production solver.
pub fn dense_solution_space(a: &TernaryAlgebra<Rat>, role: Role) -> Subspace<Rat> {
    let n = a.dim();
    let ncols = role.components() * n * n;
    // one column per matrix-unit unknown
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(ncols);
    for u in 0..ncols {
        let mut unit = zero(ncols);
        unit[u] = Rat::from_integer(1.into());
        columns.push(residual(a, role, &unit));
    }
    let nrows = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Rat>> =
        (0..nrows).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
    let basis = local_nullspace(rows, ncols);
    Subspace::span(ncols, basis).unwrap()
}
