//! The involution σ: u_r(t) ↦ u_{σ(r)}(c_r t̄), and its B3 model in PGO(R).
//!
//! B3 matrices are 7×7 over L with rows and columns indexed 0, 1, −1, 2, −2, 3, −3.
//! R(x) = x₀² + x₁x₋₁ + x₂x₋₂ + x₃x₋₃.

use crate::chevalley::Matrix;
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, QuadExtElem};
use crate::rewrite::{Atom, Word};
use crate::roots::{f4, RootId, NUM_ROOTS};

pub type B3Matrix = Matrix;

/// c_r for every root.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    c: Vec<QuadExtElem>,
}

impl CoeffTable {
    /// Seeds c_{α₁} = α⁻¹β⁻¹, c_{α₂} = αβ, c_{α₃} = α⁻¹, c_{α₄} = αβ⁻¹, extended
    /// along build chains to Φ⁺ and by c_{−r} = c_r⁻¹ to Φ⁻.
    pub fn compute(spec: &FieldSpec) -> CoeffTable {
        let rs = f4();
        let a = spec.alpha();
        let b = spec.beta();
        let ai = a.inv().expect("α ≠ 0");
        let bi = b.inv().expect("β ≠ 0");
        let seeds = [ai.mul(&bi), a.mul(&b), ai.clone(), a.mul(&bi)];
        let mut c = vec![spec.one(); NUM_ROOTS];
        for r in 0..NUM_ROOTS {
            if rs.is_positive(r) {
                c[r] = rs.build_chain(r).iter().fold(spec.one(), |acc, &i| acc.mul(&seeds[i]));
            }
        }
        for r in 0..NUM_ROOTS {
            if !rs.is_positive(r) {
                c[r] = c[rs.neg(r)].inv().expect("nonzero");
            }
        }
        CoeffTable { c }
    }

    pub fn get(&self, r: RootId) -> &QuadExtElem {
        &self.c[r]
    }

    /// Roots where c̄_r·c_{σ(r)} ≠ 1.
    pub fn involution_failures(&self) -> Vec<RootId> {
        let rs = f4();
        (0..NUM_ROOTS).filter(|&r| !self.c[r].conj().mul(&self.c[rs.sigma(r)]).is_one()).collect()
    }

    /// Root pairs (r, s) whose commutator factors are not mapped to the commutator factors
    /// of (σ(r), σ(s)), i.e. c_r c_s ≠ c_{r+s} or c_r² c_s ≠ c_{2r+s} where these occur.
    pub fn commutator_failures(&self) -> Vec<(RootId, RootId)> {
        let rs = f4();
        let mut out = Vec::new();
        for r in 0..NUM_ROOTS {
            for s in 0..NUM_ROOTS {
                if s == r || s == rs.neg(r) {
                    continue;
                }
                let ok = crate::chevalley::commutator_factors(r, s, &self.c[r], &self.c[s])
                    .into_iter()
                    .all(|(z, v)| v == self.c[z]);
                if !ok {
                    out.push((r, s));
                }
            }
        }
        out
    }

    pub fn sigma_atom(&self, a: &Atom) -> Atom {
        let rs = f4();
        match a {
            Atom::Root { r, t } => Atom::Root { r: rs.sigma(*r), t: self.c[*r].mul(&t.conj()) },
            Atom::N { r, t } => Atom::N { r: rs.sigma(*r), t: self.c[*r].mul(&t.conj()) },
            Atom::Hua { r, lambda } => Atom::Hua { r: rs.sigma(*r), lambda: lambda.conj() },
        }
    }

    /// Atom-wise image of a word under σ.
    pub fn sigma_word(&self, w: &Word) -> Word {
        w.atoms().iter().map(|a| self.sigma_atom(a)).collect()
    }
}

/// Position of the basis index i ∈ {0, ±1, ±2, ±3} in the row/column order.
pub fn b3_pos(i: i32) -> usize {
    match i {
        0 => 0,
        i if i > 0 => (2 * i - 1) as usize,
        i => (-2 * i) as usize,
    }
}

/// E_{i,j} scaled by `x`, added into `m`.
fn add_e(m: &mut B3Matrix, i: i32, j: i32, x: &QuadExtElem) {
    let (p, q) = (b3_pos(i), b3_pos(j));
    let v = m.get(p, q).add(x);
    m.set(p, q, v);
}

/// The matrix of u_r(λ) for r ∈ Φ_J.
pub fn b3_generator(spec: &FieldSpec, r: RootId, lambda: &QuadExtElem) -> Result<B3Matrix> {
    let rs = f4();
    if !rs.in_phi_j(r) {
        return Err(Error::NotARoot(format!("{} is not in the B3 subsystem", rs.root(r))));
    }
    crate::chevalley::check_level(spec, r, lambda)?;
    let c = rs.root(r).coords();
    let mut m = Matrix::identity(7, spec.tower());
    let support: Vec<(i32, i32)> =
        (0..3).filter(|&k| c[k] != 0).map(|k| (k as i32 + 1, (c[k] / 2) as i32)).collect();
    match support.as_slice() {
        &[(i, si)] => {
            // ±e_i: I + λE_{0,∓i} + λ²E_{±i,∓i}
            let i = si * i;
            add_e(&mut m, 0, -i, lambda);
            add_e(&mut m, i, -i, &lambda.square());
        }
        &[(i, si), (j, sj)] => {
            let (i, j) = (si * i, sj * j);
            // e_i + e_j with signed indices: I + λ(E_{i,−j} + E_{j,−i})
            add_e(&mut m, i, -j, lambda);
            add_e(&mut m, j, -i, lambda);
        }
        _ => unreachable!("B3 roots have one or two nonzero coordinates"),
    }
    Ok(m)
}

/// The 7×7 matrix of a word in B3 root elements.
pub fn b3_matrix_of_word(spec: &FieldSpec, w: &Word) -> Result<B3Matrix> {
    let mut m = Matrix::identity(7, spec.tower());
    for a in w.atoms() {
        match a {
            Atom::Root { r, t } => m = m.mul(&b3_generator(spec, *r, t)?),
            _ => return Err(Error::Rewrite("only root elements have a B3 matrix".into())),
        }
    }
    Ok(m)
}

/// The upper-triangular matrix of R.
pub fn r_matrix(spec: &FieldSpec) -> B3Matrix {
    let mut m = Matrix::zeros(7, 7, spec.tower());
    let one = spec.one();
    add_e(&mut m, 0, 0, &one);
    for i in 1..=3 {
        add_e(&mut m, i, -i, &one);
    }
    m
}

fn transpose(a: &Matrix) -> Matrix {
    let entries = (0..a.cols()).flat_map(|j| (0..a.rows()).map(move |i| a.get(i, j).clone())).collect();
    Matrix::from_rows(a.cols(), a.rows(), entries)
}

/// R(v) for the column `j` of `a`.
fn r_value(a: &Matrix, j: usize) -> QuadExtElem {
    let x = |i: i32| a.get(b3_pos(i), j);
    (1..=3).fold(x(0).square(), |acc, i| acc.add(&x(i).mul(x(-i))))
}

/// Whether A preserves R: the values on all basis images and the polar form AᵗPA = P.
pub fn preserves_r(spec: &FieldSpec, a: &B3Matrix) -> bool {
    let id = Matrix::identity(7, spec.tower());
    if (0..7).any(|j| r_value(a, j) != r_value(&id, j)) {
        return false;
    }
    let r = r_matrix(spec);
    let rt = transpose(&r);
    let polar = Matrix::from_rows(7, 7, (0..49).map(|k| r.get(k / 7, k % 7).add(rt.get(k / 7, k % 7))).collect());
    transpose(a).mul(&polar).mul(a) == polar
}

/// The displayed transition matrix S.
pub fn s_matrix(spec: &FieldSpec) -> B3Matrix {
    let mut m = Matrix::zeros(7, 7, spec.tower());
    let g = spec.gamma();
    let gb = g.conj();
    let one = spec.one();
    let (a, b) = (spec.alpha(), spec.beta());
    add_e(&mut m, 0, 0, &one);
    for (i, c) in [(1, a.clone()), (2, b.clone()), (3, a.mul(&b))] {
        add_e(&mut m, i, i, &one);
        add_e(&mut m, i, -i, &g);
        add_e(&mut m, -i, i, &c);
        add_e(&mut m, -i, -i, &c.mul(&gb));
    }
    m
}

/// The displayed matrix M with antidiagonal blocks (0, c⁻¹; c, 0), c = α, β, αβ.
pub fn m_matrix(spec: &FieldSpec) -> B3Matrix {
    let mut m = Matrix::zeros(7, 7, spec.tower());
    let (a, b) = (spec.alpha(), spec.beta());
    add_e(&mut m, 0, 0, &spec.one());
    for (i, c) in [(1, a.clone()), (2, b.clone()), (3, a.mul(&b))] {
        add_e(&mut m, i, -i, &c.inv().expect("nonzero"));
        add_e(&mut m, -i, i, &c);
    }
    m
}

/// S̄S⁻¹ from the displayed S.
pub fn m_from_s(spec: &FieldSpec) -> Result<B3Matrix> {
    let s = s_matrix(spec);
    Ok(s.conj().mul(&s.inverse()?))
}

/// σ on PGO(R): A ↦ M⁻¹ĀM.
pub fn sigma_b3(spec: &FieldSpec, a: &B3Matrix) -> Result<B3Matrix> {
    let m = m_matrix(spec);
    Ok(m.inverse()?.mul(&a.conj()).mul(&m))
}

/// A scaled so that its first nonzero entry (row-major) is 1.
pub fn projective_normal(a: &B3Matrix) -> B3Matrix {
    let first = (0..a.rows() * a.cols()).map(|k| a.get(k / a.cols(), k % a.cols())).find(|x| !x.is_zero());
    match first.and_then(|x| x.inv()) {
        Some(inv) => a.scale(&inv),
        None => a.clone(),
    }
}

pub fn projectively_equal(a: &B3Matrix, b: &B3Matrix) -> bool {
    projective_normal(a) == projective_normal(b)
}

/// Whether `a` maps each span ⟨v_{s·1}⟩ ⊂ ⟨v_{s·1}, v_{s·2}⟩ ⊂ ⟨v_{s·1}, v_{s·2}, v_{s·3}⟩
/// into itself (s = +1: the standard flag; s = −1: the opposite one).
pub fn stabilises_flag(a: &B3Matrix, sign: i32) -> bool {
    (1..=3).all(|k| {
        let span: Vec<usize> = (1..=k).map(|i| b3_pos(sign * i)).collect();
        span.iter().all(|&j| (0..7).all(|i| span.contains(&i) || a.get(i, j).is_zero()))
    })
}
