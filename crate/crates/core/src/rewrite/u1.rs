//! Elements of U¹ = U_J ∩ Fix(σ) in coordinates.

use rand::Rng;

use super::word::{Atom, Word};
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, QuadExtElem, RatFunc, Sampler};
use crate::roots::f4;

/// u_{r₁}(t₁)u_{r₂}(t₂′)u_{r₃}(αt̄₂′)⋯u_{r₁₄}(αβt̄₁₅)u_{r₁₅}(t₁₅).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U1Elem {
    pub t1: QuadExtElem,
    pub t2: QuadExtElem,
    pub t4: QuadExtElem,
    pub t6: QuadExtElem,
    pub t8: QuadExtElem,
    pub t10: QuadExtElem,
    pub t12: QuadExtElem,
    pub t15: QuadExtElem,
}

/// Which coordinates a sampled element is forced to have zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    /// Every coordinate random (each possibly zero).
    Generic,
    /// t₈ = t₁₀ = t₁₂ = t₁₅ = 0, t₁ ≠ 0.
    NoHalfRoots,
    /// t₁ = 0 (hence t₈ = … = t₁₅ = 0), t₂′ ≠ 0.
    T1Zero,
    /// t₁ = t₂′ = 0, t₄′ ≠ 0.
    T2Zero,
    /// t₁ = t₂′ = t₄′ = 0, t₆′ ≠ 0.
    T4Zero,
}

impl Stratum {
    pub const ALL: [Stratum; 5] =
        [Stratum::Generic, Stratum::NoHalfRoots, Stratum::T1Zero, Stratum::T2Zero, Stratum::T4Zero];
}

impl U1Elem {
    pub fn zero(spec: &FieldSpec) -> U1Elem {
        let z = spec.zero();
        U1Elem {
            t1: z.clone(),
            t2: z.clone(),
            t4: z.clone(),
            t6: z.clone(),
            t8: z.clone(),
            t10: z.clone(),
            t12: z.clone(),
            t15: z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.independent().iter().all(|x| x.is_zero())
    }

    /// (t₁, t₂′, t₄′, t₆′, t₈, t₁₀, t₁₂, t₁₅).
    pub fn independent(&self) -> [&QuadExtElem; 8] {
        [&self.t1, &self.t2, &self.t4, &self.t6, &self.t8, &self.t10, &self.t12, &self.t15]
    }

    /// tr(t₁) + N(t₈) + αN(t₁₀) + βN(t₁₂) + αβN(t₁₅); zero exactly when the norm relation holds.
    pub fn norm_defect(&self, spec: &FieldSpec) -> RatFunc {
        let a = spec.alpha().u().clone();
        let b = spec.beta().u().clone();
        self.t1
            .trace()
            .add(&self.t8.norm())
            .add(&a.mul(&self.t10.norm()))
            .add(&b.mul(&self.t12.norm()))
            .add(&a.mul(&b).mul(&self.t15.norm()))
    }

    pub fn validate(&self, spec: &FieldSpec) -> Result<()> {
        for (name, x) in [("t2", &self.t2), ("t4", &self.t4), ("t6", &self.t6)] {
            if !spec.in_big_k(x) {
                return Err(Error::NotInK(format!("{name} = {}", spec.format(x))));
            }
        }
        let d = self.norm_defect(spec);
        if !d.is_zero() {
            return Err(Error::NormViolation(format!("norm relation is off by {}", spec.format_base(&d))));
        }
        Ok(())
    }

    /// The coefficients of u_{r₁}, …, u_{r₁₅} in the canonical word.
    pub fn coefficients(&self, spec: &FieldSpec) -> [QuadExtElem; 15] {
        let a = spec.alpha();
        let b = spec.beta();
        let ab = a.mul(&b);
        [
            self.t1.clone(),
            self.t2.clone(),
            a.mul(&self.t2.conj()),
            self.t4.clone(),
            b.mul(&self.t4.conj()),
            self.t6.clone(),
            ab.mul(&self.t6.conj()),
            self.t8.clone(),
            self.t8.conj(),
            self.t10.clone(),
            a.mul(&self.t10.conj()),
            self.t12.clone(),
            b.mul(&self.t12.conj()),
            ab.mul(&self.t15.conj()),
            self.t15.clone(),
        ]
    }

    /// Recovers an element from all 15 coefficients, checking the dependent ones.
    pub fn from_coefficients(spec: &FieldSpec, c: &[QuadExtElem; 15]) -> Result<U1Elem> {
        let u = U1Elem {
            t1: c[0].clone(),
            t2: c[1].clone(),
            t4: c[3].clone(),
            t6: c[5].clone(),
            t8: c[7].clone(),
            t10: c[9].clone(),
            t12: c[11].clone(),
            t15: c[14].clone(),
        };
        let expect = u.coefficients(spec);
        if let Some(k) = (0..15).find(|&k| expect[k] != c[k]) {
            return Err(Error::Rewrite(format!(
                "coefficient of r{} is {}, expected {} from its σ-partner",
                k + 1,
                spec.format(&c[k]),
                spec.format(&expect[k])
            )));
        }
        u.validate(spec)?;
        Ok(u)
    }

    /// The canonical 15-factor word with zero factors omitted.
    pub fn canonical_word(&self, spec: &FieldSpec) -> Result<Word> {
        self.validate(spec)?;
        let rl = f4().r_list();
        Ok(self
            .coefficients(spec)
            .into_iter()
            .enumerate()
            .filter(|(_, t)| !t.is_zero())
            .map(|(k, t)| Atom::Root { r: rl[k], t })
            .collect())
    }

    /// A random element of the given stratum satisfying the norm relation.
    pub fn sample<R: Rng>(rng: &mut R, spec: &FieldSpec, sampler: &Sampler, stratum: Stratum) -> U1Elem {
        let z = spec.zero();
        let l_or_zero = |rng: &mut R| sampler.ext_or_zero(rng, spec, false, sampler.zero_prob);
        let k_or_zero = |rng: &mut R| sampler.ext_or_zero(rng, spec, true, sampler.zero_prob);
        let k = |rng: &mut R| sampler.ext(rng, spec, true);
        let mut u = U1Elem::zero(spec);
        match stratum {
            Stratum::Generic => {
                u.t2 = k_or_zero(rng);
                u.t4 = k_or_zero(rng);
                u.t6 = k_or_zero(rng);
                u.t8 = l_or_zero(rng);
                u.t10 = l_or_zero(rng);
                u.t12 = l_or_zero(rng);
                u.t15 = l_or_zero(rng);
            }
            Stratum::NoHalfRoots => {
                u.t2 = k_or_zero(rng);
                u.t4 = k_or_zero(rng);
                u.t6 = k_or_zero(rng);
            }
            Stratum::T1Zero => {
                u.t2 = k(rng);
                u.t4 = k_or_zero(rng);
                u.t6 = k_or_zero(rng);
            }
            Stratum::T2Zero => {
                u.t4 = k(rng);
                u.t6 = k_or_zero(rng);
            }
            Stratum::T4Zero => {
                u.t6 = k(rng);
            }
        }
        if matches!(stratum, Stratum::Generic | Stratum::NoHalfRoots) {
            // tr(x + cγ) = c, so t₁ = x + cγ with c the norm part.
            let c = u.norm_defect(spec);
            loop {
                let x = sampler.base(rng, spec, false, 0.25);
                let t1 = QuadExtElem::new(x, c.clone(), spec.tower());
                if !t1.is_zero() {
                    u.t1 = t1;
                    break;
                }
            }
        } else {
            u.t1 = z;
        }
        debug_assert!(u.validate(spec).is_ok());
        u
    }

    pub fn to_json(&self, spec: &FieldSpec) -> serde_json::Value {
        let names = ["t1", "t2", "t4", "t6", "t8", "t10", "t12", "t15"];
        let map = names.iter().zip(self.independent()).map(|(n, x)| (n.to_string(), spec.format(x).into())).collect();
        serde_json::Value::Object(map)
    }
}
