//! Exact arithmetic in characteristic-2 field towers.
//!
//! ℓ is the rational function field GF(2)(x₀, …) over the configured indeterminates.
//! In mixed mode k ⊂ ℓ is the subfield of functions that are even in the mixed
//! variable t, so ℓ² ≤ k < ℓ; in algebraic mode k = ℓ. The extensions are
//! L = ℓ(γ) and K = k(γ) with γ² + γ = δ.

mod eval;
mod modgcd;
mod parse;
mod poly;
mod quadext;
mod random;
mod ratfunc;

use std::sync::Arc;

pub use poly::{gcd, Monomial, Poly, MAX_VARS};
pub use quadext::{QuadExtElem, Tower};
pub use random::Sampler;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Mixed,
    Algebraic,
}

/// The field tower in use: indeterminates, mode, and the constants δ, α, β ∈ k.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    names: Vec<String>,
    mixed_var: Option<usize>,
    mode: Mode,
    delta: RatFunc,
    alpha: RatFunc,
    beta: RatFunc,
    tower: Arc<Tower>,
}

impl FieldSpec {
    /// Builds a spec from textual values of δ, α, β.
    pub fn new(
        names: &[&str],
        mode: Mode,
        mixed_var: Option<&str>,
        delta: &str,
        alpha: &str,
        beta: &str,
    ) -> Result<Self> {
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(Error::Config(format!("between 1 and {MAX_VARS} indeterminates are supported")));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || *n == parse::GAMMA {
                return Err(Error::Config(format!("invalid indeterminate name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Config(format!("duplicate indeterminate {n:?}")));
            }
        }
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mixed_var = match (mode, mixed_var) {
            (Mode::Mixed, Some(t)) => Some(
                names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| Error::Config(format!("mixed variable {t:?} is not an indeterminate")))?,
            ),
            (Mode::Mixed, None) => return Err(Error::Config("mixed mode needs a mixed variable".into())),
            (Mode::Algebraic, _) => None,
        };
        let parse_base = |s: &str| parse::parse_base(s, &names);
        let delta = parse_base(delta)?;
        let alpha = parse_base(alpha)?;
        let beta = parse_base(beta)?;
        let tower = Arc::new(Tower { delta: delta.clone() });
        let spec = FieldSpec { names, mixed_var, mode, delta, alpha, beta, tower };
        for (label, c) in [("delta", &spec.delta), ("alpha", &spec.alpha), ("beta", &spec.beta)] {
            if c.is_zero() || !spec.in_subfield_k(c) {
                return Err(Error::Config(format!("{label} must be a nonzero element of k")));
            }
        }
        Ok(spec)
    }

    /// ℓ = GF(2)(d, a, b, t), k even in t, δ = d, α = a, β = b.
    pub fn default_mixed() -> Self {
        FieldSpec::new(&["d", "a", "b", "t"], Mode::Mixed, Some("t"), "d", "a", "b").expect("valid default")
    }

    /// k = ℓ = GF(2)(d, a, b), δ = d, α = a, β = b.
    pub fn default_algebraic() -> Self {
        FieldSpec::new(&["d", "a", "b"], Mode::Algebraic, None, "d", "a", "b").expect("valid default")
    }

    pub fn default_for(mode: Mode) -> Self {
        match mode {
            Mode::Mixed => FieldSpec::default_mixed(),
            Mode::Algebraic => FieldSpec::default_algebraic(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn mixed_var(&self) -> Option<usize> {
        self.mixed_var
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn delta(&self) -> &RatFunc {
        &self.delta
    }

    pub fn alpha(&self) -> QuadExtElem {
        self.base(self.alpha.clone())
    }

    pub fn beta(&self) -> QuadExtElem {
        self.base(self.beta.clone())
    }

    pub fn zero(&self) -> QuadExtElem {
        QuadExtElem::zero(&self.tower)
    }

    pub fn one(&self) -> QuadExtElem {
        QuadExtElem::one(&self.tower)
    }

    pub fn gamma(&self) -> QuadExtElem {
        QuadExtElem::gamma(&self.tower)
    }

    pub fn base(&self, x: RatFunc) -> QuadExtElem {
        QuadExtElem::from_base(x, &self.tower)
    }

    /// The indeterminate called `name`, as an element of ℓ.
    pub fn var(&self, name: &str) -> Option<RatFunc> {
        self.names.iter().position(|n| n == name).map(RatFunc::var)
    }

    /// Whether `x ∈ ℓ` lies in k.
    ///
    /// With x = p/q reduced, x = pq/q² and q² is even in t, so x ∈ k exactly
    /// when pq has no odd-in-t part.
    pub fn in_subfield_k(&self, x: &RatFunc) -> bool {
        match self.mixed_var {
            None => true,
            Some(t) => x.num().mul(x.den()).is_even_in(t),
        }
    }

    /// Whether `x ∈ L` lies in K = k(γ).
    pub fn in_big_k(&self, x: &QuadExtElem) -> bool {
        self.in_subfield_k(x.u()) && self.in_subfield_k(x.v())
    }

    /// The unique split x = x₀ + t·x₁ with x₀, x₁ ∈ k (mixed mode only).
    pub fn split_k(&self, x: &RatFunc) -> Option<(RatFunc, RatFunc)> {
        let t = self.mixed_var?;
        let pq = x.num().mul(x.den());
        let q2 = x.den().square();
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for &m in pq.terms() {
            if m.is_even_in(t) {
                even.push(m);
            } else {
                odd.push(m.div_unchecked(Monomial::var(t, 1)));
            }
        }
        let x0 = RatFunc::new(Poly::from_monomials(even), q2.clone());
        let x1 = RatFunc::new(Poly::from_monomials(odd), q2);
        Some((x0, x1))
    }

    /// A sufficient criterion for x² + x + δ to be irreducible over k: some
    /// indeterminate has odd positive degree in δ, while f² + f always has
    /// even positive or non-positive degree.
    pub fn delta_irreducibility_witness(&self) -> Option<&str> {
        (0..self.names.len())
            .find(|&v| {
                let deg = self.delta.num().degree_in(v) as i64 - self.delta.den().degree_in(v) as i64;
                deg > 0 && deg % 2 == 1
            })
            .map(|v| self.names[v].as_str())
    }

    pub fn parse(&self, s: &str) -> Result<QuadExtElem> {
        parse::parse_elem(s, &self.names, &self.tower)
    }

    pub fn parse_base(&self, s: &str) -> Result<RatFunc> {
        parse::parse_base(s, &self.names)
    }

    pub fn format(&self, x: &QuadExtElem) -> String {
        parse::format_elem(x, &self.names)
    }

    pub fn format_base(&self, x: &RatFunc) -> String {
        x.fmt_with(&self.names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_squared() {
        let f = FieldSpec::default_mixed();
        let g = f.gamma();
        let d = f.base(f.delta().clone());
        assert_eq!(g.mul(&g), g.add(&d));
    }

    #[test]
    fn inverse_of_one_plus_gamma() {
        let f = FieldSpec::default_mixed();
        let x = f.one().add(&f.gamma());
        let expect = f.parse("(1)/(d)*g").unwrap();
        assert_eq!(x.inv().unwrap(), expect);
        assert!(x.mul(&expect).is_one());
    }

    #[test]
    fn subfield_membership() {
        let f = FieldSpec::default_mixed();
        let t = f.var("t").unwrap();
        assert!(!f.in_subfield_k(&t));
        assert!(f.in_subfield_k(&t.square()));
        let x = f.parse_base("(t^3 + t)/(t^2 + 1)").unwrap();
        assert_eq!(x, t);
        assert!(!f.in_subfield_k(&x));
        assert!(FieldSpec::default_algebraic().in_subfield_k(&RatFunc::var(0)));
    }

    #[test]
    fn split_recombines() {
        let f = FieldSpec::default_mixed();
        let x = f.parse_base("(t^3 + d*t + a)/(t + b)").unwrap();
        let (x0, x1) = f.split_k(&x).unwrap();
        assert!(f.in_subfield_k(&x0) && f.in_subfield_k(&x1));
        assert_eq!(x0.add(&f.var("t").unwrap().mul(&x1)), x);
    }

    #[test]
    fn delta_witness() {
        assert_eq!(FieldSpec::default_mixed().delta_irreducibility_witness(), Some("d"));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(FieldSpec::new(&["d", "g"], Mode::Algebraic, None, "d", "d", "d").is_err());
        assert!(FieldSpec::new(&["d", "t"], Mode::Mixed, Some("t"), "t", "d", "d").is_err());
        assert!(FieldSpec::new(&["d", "t"], Mode::Mixed, Some("s"), "d", "d", "d").is_err());
    }
}
