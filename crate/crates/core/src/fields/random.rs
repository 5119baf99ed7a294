//! Sparse random field elements.
//!
//! Samples are short polynomials with small exponents so that products of many
//! of them stay manageable. Elements meant to lie in k or K only use even powers
//! of the mixed variable.

use rand::Rng;

use super::poly::{Monomial, Poly};
use super::quadext::QuadExtElem;
use super::ratfunc::RatFunc;
use super::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Sampler {
    /// Maximum number of monomials per polynomial.
    pub max_terms: usize,
    /// Maximum exponent of each indeterminate.
    pub max_exp: u32,
    /// Probability that an optional coordinate of a group element is zero.
    pub zero_prob: f64,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler { max_terms: 2, max_exp: 2, zero_prob: 0.25 }
    }
}

impl Sampler {
    /// Constant coordinates, three quarters of them zero. Normal forms of inputs with
    /// polynomial coordinates swell past what a test run can afford.
    pub fn sparse_constants() -> Self {
        Sampler { max_terms: 1, max_exp: 0, zero_prob: 0.75 }
    }

    pub fn poly<R: Rng>(&self, rng: &mut R, spec: &FieldSpec, in_k: bool) -> Poly {
        let n = rng.gen_range(1..=self.max_terms.max(1));
        let nvars = spec.names().len();
        let monos = (0..n)
            .map(|_| {
                let exps: Vec<u32> = (0..nvars)
                    .map(|v| {
                        if in_k && spec.mixed_var() == Some(v) {
                            2 * rng.gen_range(0..=self.max_exp / 2)
                        } else {
                            rng.gen_range(0..=self.max_exp)
                        }
                    })
                    .collect();
                Monomial::from_exps(&exps)
            })
            .collect();
        Poly::from_monomials(monos)
    }

    pub fn nonzero_poly<R: Rng>(&self, rng: &mut R, spec: &FieldSpec, in_k: bool) -> Poly {
        loop {
            let p = self.poly(rng, spec, in_k);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// An element of ℓ, or of k when `in_k`; zero with probability `p_zero`.
    pub fn base<R: Rng>(&self, rng: &mut R, spec: &FieldSpec, in_k: bool, p_zero: f64) -> RatFunc {
        if rng.gen_bool(p_zero) {
            return RatFunc::zero();
        }
        RatFunc::from_poly(self.nonzero_poly(rng, spec, in_k))
    }

    /// A nonzero element of L, or of K when `in_k`. Each coordinate is zero with probability 1/4.
    pub fn ext<R: Rng>(&self, rng: &mut R, spec: &FieldSpec, in_k: bool) -> QuadExtElem {
        loop {
            let u = self.base(rng, spec, in_k, 0.25);
            let v = self.base(rng, spec, in_k, 0.25);
            let x = QuadExtElem::new(u, v, spec.tower());
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Like [`Sampler::ext`] but zero with probability `p_zero`.
    pub fn ext_or_zero<R: Rng>(&self, rng: &mut R, spec: &FieldSpec, in_k: bool, p_zero: f64) -> QuadExtElem {
        if rng.gen_bool(p_zero) {
            spec.zero()
        } else {
            self.ext(rng, spec, in_k)
        }
    }
}
