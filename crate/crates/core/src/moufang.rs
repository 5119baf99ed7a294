//! The octonions O_ℓ = L⁴, the group (U, +) and the permutation τ in closed form,
//! and the change of coordinates φ that relates them to the algebraic F4 Moufang set.

use serde_json::json;

use crate::error::{Error, Result};
use crate::fields::{FieldSpec, Mode, QuadExtElem};
use crate::rewrite::U1Elem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion(pub [QuadExtElem; 4]);

impl Octonion {
    pub fn zero(spec: &FieldSpec) -> Octonion {
        Octonion(std::array::from_fn(|_| spec.zero()))
    }

    pub fn one(spec: &FieldSpec) -> Octonion {
        let mut x = Octonion::zero(spec);
        x.0[0] = spec.one();
        x
    }

    /// The scalar c·1.
    pub fn scalar(spec: &FieldSpec, c: QuadExtElem) -> Octonion {
        let mut x = Octonion::zero(spec);
        x.0[0] = c;
        x
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i].add(&o.0[i])))
    }

    pub fn scale(&self, c: &QuadExtElem) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i].mul(c)))
    }

    /// x̄ = (x̄₁, x₂, x₃, x₄).
    pub fn conj(&self) -> Octonion {
        let [x1, x2, x3, x4] = &self.0;
        Octonion([x1.conj(), x2.clone(), x3.clone(), x4.clone()])
    }

    /// N(x) = x₁x̄₁ + αx₂x̄₂ + βx₃x̄₃ + αβx₄x̄₄.
    pub fn norm(&self, spec: &FieldSpec) -> QuadExtElem {
        let w = weights(spec);
        let n = (0..4).fold(spec.zero().u().clone(), |acc, i| acc.add(&w[i].u().mul(&self.0[i].norm())));
        spec.base(n)
    }

    pub fn mul(&self, y: &Octonion, spec: &FieldSpec) -> Octonion {
        let (a, b) = (spec.alpha(), spec.beta());
        let ab = a.mul(&b);
        let [x1, x2, x3, x4] = &self.0;
        let [y1, y2, y3, y4] = &y.0;
        Octonion([
            x1.mul(y1).add(&a.mul(&x2.conj().mul(y2))).add(&b.mul(&x3.conj().mul(y3))).add(&ab.mul(&x4.mul(&y4.conj()))),
            x2.mul(y1).add(&x1.conj().mul(y2)).add(&b.mul(&x4.mul(&y3.conj()))).add(&b.mul(&x3.conj().mul(y4))),
            x3.mul(y1).add(&x1.conj().mul(y3)).add(&a.mul(&x4.mul(&y2.conj()))).add(&a.mul(&x2.conj().mul(y4))),
            x3.mul(y2).add(&x2.mul(y3)).add(&x4.mul(&y1.conj())).add(&x1.mul(y4)),
        ])
    }

    /// x⁻¹ = x̄/N(x).
    pub fn inv(&self, spec: &FieldSpec) -> Result<Octonion> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm(spec).inv().ok_or(Error::IsotropicVector)?;
        Ok(self.conj().scale(&n))
    }

    pub fn format(&self, spec: &FieldSpec) -> Vec<String> {
        self.0.iter().map(|c| spec.format(c)).collect()
    }
}

/// (1, α, β, αβ).
fn weights(spec: &FieldSpec) -> [QuadExtElem; 4] {
    let (a, b) = (spec.alpha(), spec.beta());
    let ab = a.mul(&b);
    [spec.one(), a, b, ab]
}

/// f(a) = (N(a), a₁a₂ + βā₃a₄, a₁a₃ + αā₂a₄, a₂a₃ + ā₁a₄).
pub fn f(spec: &FieldSpec, a: &Octonion) -> Octonion {
    let (al, be) = (spec.alpha(), spec.beta());
    let [a1, a2, a3, a4] = &a.0;
    Octonion([
        a.norm(spec),
        a1.mul(a2).add(&be.mul(&a3.conj().mul(a4))),
        a1.mul(a3).add(&al.mul(&a2.conj().mul(a4))),
        a2.mul(a3).add(&a1.conj().mul(a4)),
    ])
}

/// g(a, c) = ā₁c₁ + αā₂c₂ + βā₃c₃ + αβa₄c̄₄.
pub fn g(spec: &FieldSpec, a: &Octonion, c: &Octonion) -> QuadExtElem {
    let w = weights(spec);
    let [a1, a2, a3, a4] = &a.0;
    let [c1, c2, c3, c4] = &c.0;
    [a1.conj().mul(c1), a2.conj().mul(c2), a3.conj().mul(c3), a4.mul(&c4.conj())]
        .iter()
        .zip(&w)
        .fold(spec.zero(), |acc, (x, w)| acc.add(&w.mul(x)))
}

/// An element (a, b) of U = {(a, b) ∈ O_ℓ ⊕ O_mixed : N(a) + tr(b₁) = 0}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UElem {
    pub a: Octonion,
    pub b: Octonion,
}

impl UElem {
    pub fn zero(spec: &FieldSpec) -> UElem {
        UElem { a: Octonion::zero(spec), b: Octonion::zero(spec) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn validate(&self, spec: &FieldSpec) -> Result<()> {
        for (i, x) in self.b.0.iter().enumerate().skip(1) {
            if !spec.in_big_k(x) {
                return Err(Error::NotInK(format!("b{} = {}", i + 1, spec.format(x))));
            }
        }
        let d = self.a.norm(spec).u().add(&self.b.0[0].trace());
        if !d.is_zero() {
            return Err(Error::NormViolation(format!("N(a) + tr(b) = {}", spec.format_base(&d))));
        }
        Ok(())
    }

    /// (a, b) + (c, d) = (a + c, b + d + g(a, c)).
    pub fn add(&self, q: &UElem, spec: &FieldSpec) -> UElem {
        let b = self.b.add(&q.b).add(&Octonion::scalar(spec, g(spec, &self.a, &q.a)));
        UElem { a: self.a.add(&q.a), b }
    }

    /// −(a, b) = (a, b + g(a, a)).
    pub fn neg(&self, spec: &FieldSpec) -> UElem {
        UElem { a: self.a.clone(), b: self.b.add(&Octonion::scalar(spec, g(spec, &self.a, &self.a))) }
    }

    /// τ(a, b) = (a·c⁻¹, c⁻¹ + f(a·c⁻¹)) with c = b + f(a).
    pub fn tau(&self, spec: &FieldSpec) -> Result<UElem> {
        if self.is_zero() {
            return Err(Error::IdentityInput);
        }
        let ci = self.b.add(&f(spec, &self.a)).inv(spec)?;
        let a = self.a.mul(&ci, spec);
        let b = ci.add(&f(spec, &a));
        Ok(UElem { a, b })
    }

    /// u ↦ ((t₈, t₁₀, t₁₂, t₁₅), (t₁, t₂′, t₄′, t₆′)).
    pub fn from_u1(u: &U1Elem) -> UElem {
        UElem {
            a: Octonion([u.t8.clone(), u.t10.clone(), u.t12.clone(), u.t15.clone()]),
            b: Octonion([u.t1.clone(), u.t2.clone(), u.t4.clone(), u.t6.clone()]),
        }
    }

    pub fn to_u1(&self) -> U1Elem {
        let [a1, a2, a3, a4] = &self.a.0;
        let [b1, b2, b3, b4] = &self.b.0;
        U1Elem {
            t1: b1.clone(),
            t2: b2.clone(),
            t4: b3.clone(),
            t6: b4.clone(),
            t8: a1.clone(),
            t10: a2.clone(),
            t12: a3.clone(),
            t15: a4.clone(),
        }
    }

    /// φ(a, b) = (a, b + f(a)), defined in algebraic mode.
    pub fn phi(&self, spec: &FieldSpec) -> Result<UElem> {
        algebraic(spec)?;
        Ok(UElem { a: self.a.clone(), b: self.b.add(&f(spec, &self.a)) })
    }

    /// (x₁, y₁) +̃ (x₂, y₂) = (x₁ + x₂, y₁ + y₂ + x̄₂·x₁).
    pub fn tilde_add(&self, q: &UElem, spec: &FieldSpec) -> Result<UElem> {
        algebraic(spec)?;
        Ok(UElem { a: self.a.add(&q.a), b: self.b.add(&q.b).add(&q.a.conj().mul(&self.a, spec)) })
    }

    /// τ̃(x, y) = (x·y⁻¹, y⁻¹).
    pub fn tilde_tau(&self, spec: &FieldSpec) -> Result<UElem> {
        algebraic(spec)?;
        let yi = self.b.inv(spec)?;
        Ok(UElem { a: self.a.mul(&yi, spec), b: yi })
    }

    pub fn to_json(&self, spec: &FieldSpec) -> serde_json::Value {
        json!({ "a": self.a.format(spec), "b": self.b.format(spec) })
    }

    pub fn from_json(spec: &FieldSpec, v: &serde_json::Value) -> Result<UElem> {
        let oct = |key: &str| -> Result<Octonion> {
            let parts = v
                .get(key)
                .and_then(|x| x.as_array())
                .filter(|x| x.len() == 4)
                .ok_or_else(|| Error::Parse(format!("{key} must be an array of four field elements")))?;
            let mut out = Octonion::zero(spec);
            for (i, p) in parts.iter().enumerate() {
                let s = p.as_str().ok_or_else(|| Error::Parse(format!("{key}[{i}] must be a string")))?;
                out.0[i] = spec.parse(s)?;
            }
            Ok(out)
        };
        let u = UElem { a: oct("a")?, b: oct("b")? };
        u.validate(spec)?;
        Ok(u)
    }
}

fn algebraic(spec: &FieldSpec) -> Result<()> {
    if spec.mode() == Mode::Algebraic {
        Ok(())
    } else {
        Err(Error::ModeError)
    }
}
