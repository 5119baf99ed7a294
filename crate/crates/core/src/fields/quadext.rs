//! The Artin–Schreier extension ℓ(γ), γ² + γ = δ, and its subfield k(γ).

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use super::ratfunc::RatFunc;

/// Shared parameters of a quadratic extension.
#[derive(Debug, PartialEq, Eq)]
pub struct Tower {
    pub delta: RatFunc,
}

/// `u + v·γ` with `u, v ∈ ℓ`.
///
/// Whether an element lies in K or only in L is a property of its coordinates
/// (see [`super::FieldSpec::in_big_k`]), not a stored tag.
#[derive(Clone)]
pub struct QuadExtElem {
    u: RatFunc,
    v: RatFunc,
    tower: Arc<Tower>,
}

impl PartialEq for QuadExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u && self.v == other.v
    }
}

impl Eq for QuadExtElem {}

impl std::hash::Hash for QuadExtElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.u.hash(state);
        self.v.hash(state);
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})g", self.u, self.v)
    }
}

impl QuadExtElem {
    pub fn new(u: RatFunc, v: RatFunc, tower: &Arc<Tower>) -> Self {
        QuadExtElem { u, v, tower: tower.clone() }
    }

    pub fn from_base(u: RatFunc, tower: &Arc<Tower>) -> Self {
        QuadExtElem::new(u, RatFunc::zero(), tower)
    }

    pub fn zero(tower: &Arc<Tower>) -> Self {
        QuadExtElem::new(RatFunc::zero(), RatFunc::zero(), tower)
    }

    pub fn one(tower: &Arc<Tower>) -> Self {
        QuadExtElem::new(RatFunc::one(), RatFunc::zero(), tower)
    }

    pub fn gamma(tower: &Arc<Tower>) -> Self {
        QuadExtElem::new(RatFunc::zero(), RatFunc::one(), tower)
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn u(&self) -> &RatFunc {
        &self.u
    }

    pub fn v(&self) -> &RatFunc {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    pub fn zero_like(&self) -> Self {
        QuadExtElem::zero(&self.tower)
    }

    pub fn one_like(&self) -> Self {
        QuadExtElem::one(&self.tower)
    }

    pub fn base(&self, u: RatFunc) -> Self {
        QuadExtElem::from_base(u, &self.tower)
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        QuadExtElem::new(self.u.add(&o.u), self.v.add(&o.v), &self.tower)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.v.is_zero() {
            return QuadExtElem::new(self.u.mul(&o.u), self.u.mul(&o.v), &self.tower);
        }
        if o.v.is_zero() {
            return QuadExtElem::new(self.u.mul(&o.u), self.v.mul(&o.u), &self.tower);
        }
        // (u1 + v1γ)(u2 + v2γ) = u1u2 + δv1v2 + (u1v2 + v1u2 + v1v2)γ
        let uu = self.u.mul(&o.u);
        let vv = self.v.mul(&o.v);
        let cross = self.u.add(&self.v).mul(&o.u.add(&o.v));
        QuadExtElem::new(uu.add(&self.tower.delta.mul(&vv)), cross.add(&uu), &self.tower)
    }

    pub fn square(&self) -> Self {
        // (u + vγ)² = u² + v²(γ + δ)
        let v2 = self.v.square();
        QuadExtElem::new(self.u.square().add(&self.tower.delta.mul(&v2)), v2, &self.tower)
    }

    /// The nontrivial automorphism γ ↦ γ + 1.
    pub fn conj(&self) -> Self {
        QuadExtElem::new(self.u.add(&self.v), self.v.clone(), &self.tower)
    }

    /// x + x̄ = v.
    pub fn trace(&self) -> RatFunc {
        self.v.clone()
    }

    /// x·x̄ = u² + uv + δv².
    pub fn norm(&self) -> RatFunc {
        self.u
            .square()
            .add(&self.u.mul(&self.v))
            .add(&self.tower.delta.mul(&self.v.square()))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.v.is_zero() {
            return Some(self.base(self.u.inv()?));
        }
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(QuadExtElem::new(c.u.mul(&n), c.v.mul(&n), &self.tower))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        Some(acc)
    }
}

impl Add for &QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, rhs: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::add(self, rhs)
    }
}

impl Mul for &QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, rhs: &QuadExtElem) -> QuadExtElem {
        QuadExtElem::mul(self, rhs)
    }
}
