//! Root elements, Weyl elements and torus elements as 52×52 matrices.
//!
//! Over characteristic 2 every u_r(t) is I + t·C₁ + t²·C₂ with C₁, C₂ fixed 0/1
//! matrices read off from the action rules. Products are built by row or
//! column operations instead of dense multiplication.

use std::sync::OnceLock;

use super::lie::{h_index, structure_constants, DIM, RANK};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, QuadExtElem};
use crate::roots::{f4, RootId, NUM_ROOTS};

pub type GroupMatrix = Matrix;

/// Off-diagonal entries (row, column) of C₁ and C₂ for one root.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pattern {
    pub c1: Vec<(usize, usize)>,
    pub c2: Vec<(usize, usize)>,
}

fn odd(x: i32) -> bool {
    x.rem_euclid(2) == 1
}

fn build_pattern(r: RootId) -> Pattern {
    let rs = f4();
    let sc = structure_constants();
    let nr = rs.neg(r);
    let mut p = Pattern::default();
    // u_r(t)·e_{−r} = e_{−r} + t h_r − t² e_r
    for (i, &c) in sc.coroot(r).iter().enumerate() {
        if odd(c) {
            p.c1.push((h_index(i), nr));
        }
    }
    p.c2.push((r, nr));
    // u_r(t)·e_s = Σ M_{r,s,i} tⁱ e_{ir+s}
    for s in 0..NUM_ROOTS {
        if s == r || s == nr {
            continue;
        }
        let mut cur = s;
        for i in 1..3 {
            let Some(next) = rs.sum(r, cur) else { break };
            if odd(sc.m(r, s, i)) {
                if i == 1 { p.c1.push((next, s)) } else { p.c2.push((next, s)) }
            }
            cur = next;
        }
    }
    // u_r(t)·h_s = h_s − A_{sr} t e_r for s fundamental
    for (i, &a) in rs.fundamental().iter().enumerate() {
        if odd(rs.cartan(a, r)) {
            p.c1.push((r, h_index(i)));
        }
    }
    p.c1.sort_unstable();
    p.c2.sort_unstable();
    p
}

/// The C₁/C₂ pattern of u_r(t), from the action rules with M_{r,s,i} reduced mod 2.
pub fn pattern(r: RootId) -> &'static Pattern {
    static PATTERNS: OnceLock<Vec<Pattern>> = OnceLock::new();
    &PATTERNS.get_or_init(|| (0..NUM_ROOTS).map(build_pattern).collect())[r]
}

/// The same pattern from exp(t·ad e_r): C₁ = ad e_r and C₂ = (ad e_r)²/2, mod 2.
pub fn pattern_from_exponential(r: RootId) -> Pattern {
    let ad = structure_constants().ad(r);
    let mut p = Pattern::default();
    for j in 0..DIM {
        for i in 0..DIM {
            if ad[j][i].rem_euclid(2) == 1 {
                p.c1.push((i, j));
            }
            let sq: i64 = (0..DIM).map(|k| ad[k][i] * ad[j][k]).sum();
            assert_eq!(sq % 2, 0, "ad² has odd entries");
            if (sq / 2).rem_euclid(2) == 1 {
                p.c2.push((i, j));
            }
            let cube: i64 = (0..DIM).map(|k| ad[k][i] * (0..DIM).map(|l| ad[l][k] * ad[j][l]).sum::<i64>()).sum();
            assert_eq!(cube, 0, "ad e_r is not nilpotent of order 3");
        }
    }
    p.c1.sort_unstable();
    p.c2.sort_unstable();
    p
}

/// Long roots need coefficients in K.
pub fn check_level(spec: &FieldSpec, r: RootId, t: &QuadExtElem) -> Result<()> {
    if f4().is_long(r) && !spec.in_big_k(t) {
        return Err(Error::NotInK(spec.format(t)));
    }
    Ok(())
}

/// m ← m·u_r(t).
pub fn mul_u_right(m: &mut Matrix, r: RootId, t: &QuadExtElem) {
    if t.is_zero() {
        return;
    }
    let t2 = t.square();
    let old = m.clone();
    let p = pattern(r);
    for (c, coeff) in [(&p.c1, t), (&p.c2, &t2)] {
        for &(k, j) in c.iter() {
            for i in 0..old.rows() {
                let x = old.get(i, k);
                if !x.is_zero() {
                    let v = m.get(i, j).add(&x.mul(coeff));
                    m.set(i, j, v);
                }
            }
        }
    }
}

/// m ← u_r(t)·m.
pub fn mul_u_left(m: &mut Matrix, r: RootId, t: &QuadExtElem) {
    if t.is_zero() {
        return;
    }
    let t2 = t.square();
    let old = m.clone();
    let p = pattern(r);
    for (c, coeff) in [(&p.c1, t), (&p.c2, &t2)] {
        for &(i, k) in c.iter() {
            for j in 0..old.cols() {
                let x = old.get(k, j);
                if !x.is_zero() {
                    let v = m.get(i, j).add(&x.mul(coeff));
                    m.set(i, j, v);
                }
            }
        }
    }
}

/// The eigenvalue λ^{A_{rs}} of h_r(λ) on e_s, for each basis vector (1 on H).
fn torus_diagonal(r: RootId, lambda: &QuadExtElem) -> Result<Vec<QuadExtElem>> {
    let rs = f4();
    let powers: Vec<QuadExtElem> =
        (-2..=2).map(|e| lambda.pow(e).ok_or(Error::DivisionByZero)).collect::<Result<_>>()?;
    Ok((0..DIM)
        .map(|s| if s < NUM_ROOTS { powers[(rs.cartan(r, s) + 2) as usize].clone() } else { lambda.one_like() })
        .collect())
}

/// m ← m·h_r(λ).
pub fn mul_h_right(m: &mut Matrix, r: RootId, lambda: &QuadExtElem) -> Result<()> {
    let d = torus_diagonal(r, lambda)?;
    for j in 0..DIM {
        if !d[j].is_one() {
            for i in 0..m.rows() {
                let v = m.get(i, j).mul(&d[j]);
                m.set(i, j, v);
            }
        }
    }
    Ok(())
}

/// m ← h_r(λ)·m.
pub fn mul_h_left(m: &mut Matrix, r: RootId, lambda: &QuadExtElem) -> Result<()> {
    let d = torus_diagonal(r, lambda)?;
    for i in 0..DIM {
        if !d[i].is_one() {
            for j in 0..m.cols() {
                let v = m.get(i, j).mul(&d[i]);
                m.set(i, j, v);
            }
        }
    }
    Ok(())
}

/// m ← m·n_r(t) with n_r(t) = u_r(t)u_{−r}(t⁻¹)u_r(t).
pub fn mul_n_right(m: &mut Matrix, r: RootId, t: &QuadExtElem) -> Result<()> {
    let ti = t.inv().ok_or(Error::DivisionByZero)?;
    mul_u_right(m, r, t);
    mul_u_right(m, f4().neg(r), &ti);
    mul_u_right(m, r, t);
    Ok(())
}

/// m ← n_r(t)·m.
pub fn mul_n_left(m: &mut Matrix, r: RootId, t: &QuadExtElem) -> Result<()> {
    let ti = t.inv().ok_or(Error::DivisionByZero)?;
    mul_u_left(m, r, t);
    mul_u_left(m, f4().neg(r), &ti);
    mul_u_left(m, r, t);
    Ok(())
}

pub fn identity(spec: &FieldSpec) -> GroupMatrix {
    Matrix::identity(DIM, spec.tower())
}

pub fn gen_u(spec: &FieldSpec, r: RootId, t: &QuadExtElem) -> Result<GroupMatrix> {
    check_level(spec, r, t)?;
    let mut m = identity(spec);
    mul_u_right(&mut m, r, t);
    Ok(m)
}

pub fn gen_n(spec: &FieldSpec, r: RootId, t: &QuadExtElem) -> Result<GroupMatrix> {
    check_level(spec, r, t)?;
    let mut m = identity(spec);
    mul_n_right(&mut m, r, t)?;
    Ok(m)
}

/// h_r(t) = n_r(t)n_r(−1), as a product of root elements.
pub fn gen_h(spec: &FieldSpec, r: RootId, t: &QuadExtElem) -> Result<GroupMatrix> {
    check_level(spec, r, t)?;
    let mut m = identity(spec);
    mul_n_right(&mut m, r, t)?;
    mul_n_right(&mut m, r, &spec.one())?;
    Ok(m)
}

/// h_r(λ) from its diagonal action e_s ↦ λ^{A_{rs}} e_s.
pub fn torus(spec: &FieldSpec, r: RootId, lambda: &QuadExtElem) -> Result<GroupMatrix> {
    let mut m = identity(spec);
    mul_h_right(&mut m, r, lambda)?;
    Ok(m)
}

/// The right-hand side of [u_r(x), u_s(y)] as a product of root elements
/// (its factors commute).
pub fn commutator_factors(r: RootId, s: RootId, x: &QuadExtElem, y: &QuadExtElem) -> Vec<(RootId, QuadExtElem)> {
    let rs = f4();
    let Some(rps) = rs.sum(r, s) else { return Vec::new() };
    match (rs.is_long(r), rs.is_long(s)) {
        (false, false) if rs.is_long(rps) => Vec::new(),
        (false, false) | (true, true) => vec![(rps, x.mul(y))],
        (false, true) => {
            let two_r_s = rs.sum(r, rps).expect("2r + s is a root");
            vec![(rps, x.mul(y)), (two_r_s, x.square().mul(y))]
        }
        (true, false) => {
            let r_two_s = rs.sum(s, rps).expect("r + 2s is a root");
            vec![(rps, x.mul(y)), (r_two_s, x.mul(&y.square()))]
        }
    }
}

/// Whether the matrix commutator u_r(x)⁻¹u_s(y)⁻¹u_r(x)u_s(y) equals the
/// product of the listed commutator factors.
pub fn check_commutator(spec: &FieldSpec, r: RootId, s: RootId, x: &QuadExtElem, y: &QuadExtElem) -> bool {
    let mut lhs = identity(spec);
    for _ in 0..2 {
        mul_u_right(&mut lhs, r, x);
        mul_u_right(&mut lhs, s, y);
    }
    let mut rhs = identity(spec);
    for (z, c) in commutator_factors(r, s, x, y) {
        mul_u_right(&mut rhs, z, &c);
    }
    lhs == rhs
}

/// Doubled e₄-coordinate of a basis vector (0 on H).
pub fn basis_height(i: usize) -> i8 {
    if i < NUM_ROOTS { f4().e4_height(i) } else { 0 }
}

/// Stabilises span(H ∪ {e_r : r ∈ Φ⁺ ∪ Φ_J}).
pub fn in_parabolic_pj(g: &GroupMatrix) -> bool {
    (0..DIM).all(|i| (0..DIM).all(|j| !(basis_height(j) >= 0 && basis_height(i) < 0) || g.get(i, j).is_zero()))
}

fn unitriangular_by_height(g: &GroupMatrix, below: impl Fn(i8, i8) -> bool) -> bool {
    (0..DIM).all(|i| {
        (0..DIM).all(|j| {
            let (hi, hj) = (basis_height(i), basis_height(j));
            let x = g.get(i, j);
            if hi == hj {
                if i == j { x.is_one() } else { x.is_zero() }
            } else if below(hi, hj) {
                x.is_zero()
            } else {
                true
            }
        })
    })
}

/// Preserves the filtration by e₄-height and is trivial on its quotients.
pub fn in_uj(g: &GroupMatrix) -> bool {
    unitriangular_by_height(g, |hi, hj| hi < hj)
}

/// The same for the opposite filtration.
pub fn in_uj_minus(g: &GroupMatrix) -> bool {
    unitriangular_by_height(g, |hi, hj| hi > hj)
}

/// Human-readable label of a basis vector.
pub fn basis_label(i: usize) -> String {
    if i < NUM_ROOTS {
        format!("e{}", f4().root(i))
    } else {
        format!("h{}", i - NUM_ROOTS + 1)
    }
}

const _: () = assert!(DIM == NUM_ROOTS + RANK);
