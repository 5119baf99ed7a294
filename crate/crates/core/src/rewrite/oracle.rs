//! Normal forms read directly off 52×52 matrices, independent of the rewriter.

use super::engine::{e4, tau_normal_form, RewriteOptions};
use super::u1::U1Elem;
use super::word::Word;
use crate::chevalley::{self, h_index, in_parabolic_pj, GroupMatrix, Matrix, DIM, RANK};
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, QuadExtElem};
use crate::roots::{f4, RootId};

/// A fundamental root α_i with A_{α_i, r} odd, so that u_r(t)·h_{α_i} has t at e_r.
fn detecting_h(r: RootId) -> usize {
    let rs = f4();
    let fund = rs.fundamental();
    (0..RANK).find(|&i| rs.cartan(fund[i], r) % 2 != 0).expect("every root pairs oddly with some α_i")
}

/// A column c = r_j − r_k of e₄-height 2 − h(r_k) at which row r_j of u′ is N·t_k with N
/// odd, and no other factor of u′ in `sources` reaches c from a height-2 row. Returns (c, j).
fn reading_column(k: usize, sources: std::ops::Range<usize>) -> (usize, usize) {
    let rs = f4();
    let sc = chevalley::structure_constants();
    let rl = rs.r_list();
    let hits = |c: RootId| {
        (0..7)
            .flat_map(|j| sources.clone().map(move |k| (j, k)))
            .filter(|&(j, k)| rs.sum(rl[j], rs.neg(rl[k])) == Some(c) && sc.n(rl[k], c) % 2 != 0)
            .count()
    };
    (0..7)
        .find_map(|j| {
            let c = rs.sum(rl[j], rs.neg(rl[k]))?;
            (sc.n(rl[k], c) % 2 != 0 && hits(c) == 1).then_some((c, j))
        })
        .expect("every coordinate has a reading column")
}

/// M[i, c] / M[i, r] for the first row i with M[i, r] ≠ 0.
fn column_ratio(m: &Matrix, c: usize, r: usize) -> Result<QuadExtElem> {
    let i = (0..m.rows()).find(|&i| !m.get(i, r).is_zero()).ok_or(Error::DivisionByZero)?;
    m.get(i, c).div(m.get(i, r)).ok_or(Error::DivisionByZero)
}

/// U¹ coordinates from a 7×52 block M with M = A·u′[R₂, :] for an unknown invertible A,
/// where R₂ = (r₁, …, r₇) are the roots of e₄-height 2 and u′ ∈ U¹.
///
/// Since u′[R₂, R₂] is the identity, M[:, r_j] is column j of A. Over characteristic 2 the
/// columns of u′[R₂, :] of height 1 are t_s times a unit vector, so each half-root
/// coordinate is a ratio of two columns of M. After the half-root part is removed the same
/// holds for t₂, …, t₇ at height 0, and t₁ is read off a column h_{α_i}.
fn u1_from_rows(spec: &FieldSpec, m: &Matrix) -> Result<U1Elem> {
    let rs = f4();
    let rl = rs.r_list();
    let mut t: [QuadExtElem; 15] = std::array::from_fn(|_| spec.zero());
    for k in 7..15 {
        let (c, j) = reading_column(k, 7..15);
        t[k] = column_ratio(m, c, rl[j])?;
    }
    let mut m = m.clone();
    for k in (7..15).rev() {
        chevalley::mul_u_right(&mut m, rl[k], &t[k]);
    }
    for k in 1..7 {
        let (c, j) = reading_column(k, 0..7);
        t[k] = column_ratio(&m, c, rl[j])?;
    }
    // Column h_{α_i} is Σ_k A[:, k]·A_{α_i, r_k}·t_k.
    let i = detecting_h(rl[0]);
    let fund = rs.fundamental();
    let row = (0..7).find(|&row| !m.get(row, rl[0]).is_zero()).ok_or(Error::DivisionByZero)?;
    let mut rest = m.get(row, h_index(i)).clone();
    for k in (1..7).filter(|&k| rs.cartan(fund[i], rl[k]) % 2 != 0) {
        rest = rest.add(&m.get(row, rl[k]).mul(&t[k]));
    }
    t[0] = rest.div(m.get(row, rl[0])).ok_or(Error::DivisionByZero)?;
    U1Elem::from_coefficients(spec, &t)
}

/// The U¹ element whose canonical word evaluates to `m`.
pub fn u1_from_matrix(spec: &FieldSpec, m: &GroupMatrix) -> Result<U1Elem> {
    let u = u1_from_rows(spec, &m.submatrix(&f4().r_list()[..7], &(0..DIM).collect::<Vec<_>>()))?;
    if &u.canonical_word(spec)?.eval(spec)? != m {
        return Err(Error::Rewrite("matrix is not in U¹".into()));
    }
    Ok(u)
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub b: GroupMatrix,
    pub uprime: U1Elem,
}

/// g = b·n·u′ with b ∈ P_J and u′ ∈ U¹, by linear algebra on g.
///
/// Rows of g at the roots n(r_k), k ≤ 7, are A·u′[R₂, :] with A the block of b on
/// e₄-height −2, since b ∈ P_J does not lower heights.
pub fn decompose(spec: &FieldSpec, g: &GroupMatrix) -> Result<Decomposition> {
    let rs = f4();
    let n = e4();
    let rows: Vec<usize> = rs.r_list()[..7].iter().map(|&r| rs.reflect(n, r)).collect();
    let uprime = u1_from_rows(spec, &g.submatrix(&rows, &(0..DIM).collect::<Vec<_>>()))?;
    let mut b = g.clone();
    uprime.canonical_word(spec)?.inverse()?.mul_right(&mut b)?;
    chevalley::mul_n_right(&mut b, n, &spec.one())?;
    if !in_parabolic_pj(&b) {
        return Err(Error::Rewrite("b = g·(n·u′)⁻¹ is not in P_J".into()));
    }
    Ok(Decomposition { b, uprime })
}

/// The matrix of n·u·n.
pub fn conjugate_by_n(spec: &FieldSpec, u: &U1Elem) -> Result<GroupMatrix> {
    let mut m = u.canonical_word(spec)?.eval(spec)?;
    let one = spec.one();
    chevalley::mul_n_left(&mut m, e4(), &one)?;
    chevalley::mul_n_right(&mut m, e4(), &one)?;
    Ok(m)
}

/// Whether the rewriter and the matrix oracle decompose g = n·u·n identically.
pub fn unique_decomposition_check(spec: &FieldSpec, g: &Word, opts: RewriteOptions) -> bool {
    let check = || -> Result<bool> {
        let gm = g.eval(spec)?;
        let mut u = gm.clone();
        let one = spec.one();
        chevalley::mul_n_left(&mut u, e4(), &one)?;
        chevalley::mul_n_right(&mut u, e4(), &one)?;
        let u = u1_from_matrix(spec, &u)?;
        let nf = tau_normal_form(spec, &u, opts)?;
        let d = decompose(spec, &gm)?;
        Ok(nf.uprime == d.uprime && nf.b.eval(spec)? == d.b)
    };
    check().unwrap_or(false)
}
