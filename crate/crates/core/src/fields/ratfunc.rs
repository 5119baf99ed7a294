//! Rational functions over GF(2), kept in lowest terms.

use super::poly::{gcd, Poly};

/// `num / den` with `gcd(num, den) = 1`; zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn var(v: usize) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Reduces `num / den`. Panics when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_exact(&g).unwrap(), den: den.div_exact(&g).unwrap() }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (n1, d1, n2, d2) = (&self.num, &self.den, &other.num, &other.den);
        if d1 == d2 {
            let n = n1.add(n2);
            if d1.is_one() {
                return RatFunc::from_poly(n);
            }
            return RatFunc::new(n, d1.clone());
        }
        if d1.is_one() {
            return RatFunc { num: n1.mul(d2).add(n2), den: d2.clone() };
        }
        if d2.is_one() {
            return RatFunc { num: n2.mul(d1).add(n1), den: d1.clone() };
        }
        let g = gcd(d1, d2);
        if g.is_one() {
            return RatFunc { num: n1.mul(d2).add(&n2.mul(d1)), den: d1.mul(d2) };
        }
        // Henrici: only the common part of the denominators can cancel.
        let d1g = d1.div_exact(&g).unwrap();
        let d2g = d2.div_exact(&g).unwrap();
        let num = n1.mul(&d2g).add(&n2.mul(&d1g));
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = d1.mul(&d2g);
        let h = gcd(&num, &g);
        if h.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_exact(&h).unwrap(), den: den.div_exact(&h).unwrap() }
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (n1, d1, n2, d2) = (&self.num, &self.den, &other.num, &other.den);
        let cross = |n: &Poly, d: &Poly| {
            if d.is_one() || n.is_one() {
                Poly::one()
            } else {
                gcd(n, d)
            }
        };
        let g1 = cross(n1, d2);
        let g2 = cross(n2, d1);
        let div = |p: &Poly, g: &Poly| if g.is_one() { p.clone() } else { p.div_exact(g).unwrap() };
        RatFunc {
            num: div(n1, &g1).mul(&div(n2, &g2)),
            den: div(d1, &g2).mul(&div(d2, &g1)),
        }
    }

    pub fn square(&self) -> RatFunc {
        RatFunc { num: self.num.square(), den: self.den.square() }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| RatFunc { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, other: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Option<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Some(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Whether every monomial of numerator and denominator has even degree in `var`.
    pub fn is_even_in(&self, var: usize) -> bool {
        self.num.is_even_in(var) && self.den.is_even_in(var)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.fmt_with(names)
        } else {
            format!("({})/({})", self.num.fmt_with(names), self.den.fmt_with(names))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let t = Poly::var(3);
        let x = RatFunc::new(t.pow(3).add(&t), t.square().add(&Poly::one()));
        assert_eq!(x, RatFunc::var(3));
    }

    #[test]
    fn add_and_mul_agree_with_common_denominator() {
        let a = RatFunc::new(Poly::one(), Poly::var(0).add(&Poly::one()));
        let b = RatFunc::new(Poly::var(1), Poly::var(0).square().add(&Poly::one()));
        let sum = a.add(&b);
        let expect = RatFunc::new(
            Poly::var(0).add(&Poly::one()).add(&Poly::var(1)),
            Poly::var(0).square().add(&Poly::one()),
        );
        assert_eq!(sum, expect);
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        assert!(sum.add(&sum).is_zero());
    }
}
