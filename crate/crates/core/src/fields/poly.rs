//! Sparse multivariate polynomials over GF(2).
//!
//! Monomials are packed into a `u128`: the top 16 bits hold the total degree and
//! the remaining 112 bits hold up to seven 16-bit exponents, first variable most
//! significant. Comparing the packed words therefore gives graded lexicographic
//! order, and multiplying monomials is a single addition.

use std::cell::RefCell;
use std::rc::Rc;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

use super::eval;

pub const MAX_VARS: usize = 7;

const BITS: u32 = 16;
const MASK: u128 = 0xFFFF;
const DEG_SHIFT: u32 = 112;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(u128);

#[inline]
fn shift(var: usize) -> u32 {
    BITS * (MAX_VARS as u32 - 1 - var as u32)
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(var: usize, exp: u32) -> Self {
        assert!(var < MAX_VARS, "variable index {var} out of range");
        assert!(exp <= 0xFFFF, "exponent overflow");
        let e = exp as u128;
        Monomial((e << DEG_SHIFT) | (e << shift(var)))
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        exps.iter()
            .enumerate()
            .fold(Monomial::ONE, |m, (v, &e)| if e == 0 { m } else { m * Monomial::var(v, e) })
    }

    #[inline]
    pub fn exp(self, var: usize) -> u32 {
        ((self.0 >> shift(var)) & MASK) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Bit `v` is set when variable `v` occurs.
    pub fn var_mask(self) -> u8 {
        (0..MAX_VARS).filter(|&v| self.exp(v) > 0).fold(0, |m, v| m | (1 << v))
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.degree() <= other.degree() && (0..MAX_VARS).all(|v| self.exp(v) <= other.exp(v))
    }

    /// `self / d`, assuming `d` divides `self`.
    #[inline]
    pub fn div_unchecked(self, d: Monomial) -> Monomial {
        Monomial(self.0 - d.0)
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut exps = [0u32; MAX_VARS];
        for (v, e) in exps.iter_mut().enumerate() {
            *e = self.exp(v).min(other.exp(v));
        }
        Monomial::from_exps(&exps)
    }

    /// Drops variable `var` entirely.
    pub fn without(self, var: usize) -> Monomial {
        let e = self.exp(var) as u128;
        Monomial(self.0 - (e << DEG_SHIFT) - (e << shift(var)))
    }

    pub fn is_even_in(self, var: usize) -> bool {
        self.exp(var) % 2 == 0
    }

    pub fn fmt_with(self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for (v, name) in names.iter().enumerate().take(MAX_VARS) {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;
    #[inline]
    fn mul(self, rhs: Monomial) -> Monomial {
        assert!(self.degree() + rhs.degree() <= 0xFFFF, "monomial degree overflow");
        Monomial(self.0 + rhs.0)
    }
}

/// A polynomial in GF(2)[x₀, …, x₆], stored as its monomials in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { terms: vec![Monomial::ONE] }
    }

    pub fn var(var: usize) -> Self {
        Poly::monomial(Monomial::var(var, 1))
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly { terms: vec![m] }
    }

    /// Builds a polynomial from monomials in any order; repeated monomials cancel in pairs.
    pub fn from_monomials(mut terms: Vec<Monomial>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Poly { terms: cancel_pairs(terms) }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead(&self) -> Option<Monomial> {
        self.terms.first().copied()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn var_mask(&self) -> u8 {
        self.terms.iter().fold(0, |m, t| m | t.var_mask())
    }

    pub fn is_even_in(&self, var: usize) -> bool {
        self.terms.iter().all(|m| m.is_even_in(var))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some(&first) = it.next() else { return Monomial::ONE };
        it.fold(first, |g, &m| g.gcd(m))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|&t| t * m).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.is_monomial() {
            return other.mul_monomial(self.terms[0]);
        }
        if other.is_monomial() {
            return self.mul_monomial(other.terms[0]);
        }
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for &a in &self.terms {
            for &b in &other.terms {
                prods.push(a * b);
            }
        }
        Poly::from_monomials(prods)
    }

    /// Squaring is additive in characteristic 2, so the square of a sum is the sum of squares.
    pub fn square(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|&m| m * m).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn div_monomial(&self, m: Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|&t| t.div_unchecked(m)).collect() }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let dl = d.terms[0];
        if d.is_monomial() {
            return self.terms.iter().all(|&t| dl.divides(t)).then(|| self.div_monomial(dl));
        }
        if self == d {
            return Some(Poly::one());
        }
        // Heap division: the heap holds one pending product d[i]·q[j] for each i ≥ 1.
        let mut heap: BinaryHeap<(Monomial, usize, usize)> = BinaryHeap::new();
        let mut waiting: Vec<usize> = (1..d.terms.len()).collect();
        let mut quot: Vec<Monomial> = Vec::new();
        let mut k = 0;
        loop {
            let m = match (self.terms.get(k), heap.peek()) {
                (None, None) => break,
                (Some(&a), None) => a,
                (None, Some(&(h, _, _))) => h,
                (Some(&a), Some(&(h, _, _))) => a.max(h),
            };
            let mut odd = false;
            if self.terms.get(k) == Some(&m) {
                odd = true;
                k += 1;
            }
            while let Some(&(h, i, j)) = heap.peek() {
                if h != m {
                    break;
                }
                heap.pop();
                odd = !odd;
                match quot.get(j + 1) {
                    Some(&q) => heap.push((d.terms[i] * q, i, j + 1)),
                    None => waiting.push(i),
                }
            }
            if odd {
                if !dl.divides(m) {
                    return None;
                }
                let q = m.div_unchecked(dl);
                let j = quot.len();
                quot.push(q);
                for i in waiting.drain(..) {
                    heap.push((d.terms[i] * q, i, j));
                }
            }
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `var`, indexed by degree; `var` is removed from them.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(var) as usize + 1];
        for &m in &self.terms {
            out[m.exp(var) as usize].terms.push(m.without(var));
        }
        out
    }

    pub fn from_coeffs(var: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            let x = Monomial::var(var, i as u32);
            terms.extend(c.terms.iter().map(|&m| m * x));
        }
        Poly::from_monomials(terms)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().map(|m| m.fmt_with(names)).collect::<Vec<_>>().join(" + ")
    }
}

fn cancel_pairs(sorted: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    let mut i = 0;
    while i < sorted.len() {
        let m = sorted[i];
        let mut j = i;
        while j < sorted.len() && sorted[j] == m {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(m);
        }
        i = j;
    }
    out
}

/// Greatest common divisor. Over GF(2) the only unit is 1, so the result is unique.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() || a == b {
        return a.clone();
    }
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    if a.is_monomial() {
        return Poly::monomial(a.terms[0].gcd(b.monomial_content()));
    }
    if b.is_monomial() {
        return Poly::monomial(b.terms[0].gcd(a.monomial_content()));
    }
    let (ca, cb) = (a.monomial_content(), b.monomial_content());
    let g = gcd_no_content(&a.div_monomial(ca), &b.div_monomial(cb));
    g.mul_monomial(ca.gcd(cb))
}

/// A cached factor with its specialisation in its variable of highest degree.
struct Factor {
    p: Poly,
    x: usize,
    image: Vec<u64>,
}

impl Factor {
    fn new(p: Poly) -> Factor {
        let x = (0..MAX_VARS).max_by_key(|&v| p.degree_in(v)).unwrap();
        let image = eval::specialise(&p, x, &eval::point(0));
        Factor { p, x, image }
    }
}

thread_local! {
    /// Nontrivial gcds found recently. Rational function arithmetic meets the same few
    /// factors over and over, and dividing them out first is far cheaper than a gcd.
    static FACTORS: RefCell<Vec<Rc<Factor>>> = const { RefCell::new(Vec::new()) };
}
const FACTOR_CACHE: usize = 64;

/// A polynomial being tested against cached factors, with its specialisations memoised.
struct Dividend {
    p: Poly,
    images: [Option<Vec<u64>>; MAX_VARS],
}

impl Dividend {
    fn new(p: Poly) -> Dividend {
        Dividend { p, images: Default::default() }
    }

    /// False when `f` certainly does not divide.
    fn may_divide(&mut self, f: &Factor) -> bool {
        let (mf, ma) = (f.p.var_mask(), self.p.var_mask());
        if mf & !ma != 0 || !f.p.terms[0].divides(self.p.terms[0]) {
            return false;
        }
        if (0..MAX_VARS).any(|v| mf & (1 << v) != 0 && f.p.degree_in(v) > self.p.degree_in(v)) {
            return false;
        }
        if f.image.iter().all(|&c| c == 0) {
            return true;
        }
        // A specialisation of a multiple of f is a multiple of the specialisation of f.
        let p = &self.p;
        let image = self.images[f.x].get_or_insert_with(|| eval::specialise(p, f.x, &eval::point(0)));
        eval::divides_univariate(&f.image, image)
    }
}

/// gcd of polynomials that have no monomial factor.
fn gcd_no_content(a: &Poly, b: &Poly) -> Poly {
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    let cached = FACTORS.with(|c| c.borrow().clone());
    let (mut a, mut b) = (Dividend::new(a.clone()), Dividend::new(b.clone()));
    let mut g = Poly::one();
    for f in &cached {
        while a.may_divide(f) && b.may_divide(f) {
            let (Some(qa), Some(qb)) = (a.p.div_exact(&f.p), b.p.div_exact(&f.p)) else { break };
            a = Dividend::new(qa);
            b = Dividend::new(qb);
            g = g.mul(&f.p);
        }
    }
    let rest = gcd_no_content_uncached(&a.p, &b.p);
    if !rest.is_one() {
        FACTORS.with(|c| {
            let mut c = c.borrow_mut();
            if !c.iter().any(|f| f.p == rest) {
                if c.len() == FACTOR_CACHE {
                    c.pop();
                }
                c.insert(0, Rc::new(Factor::new(rest.clone())));
            }
        });
    }
    rest.mul(&g)
}

fn gcd_no_content_uncached(a: &Poly, b: &Poly) -> Poly {
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let (ma, mb) = (a.var_mask(), b.var_mask());
    if ma & !mb != 0 {
        return gcd_with_coeffs(b, a, (ma & !mb).trailing_zeros() as usize);
    }
    if mb & !ma != 0 {
        return gcd_with_coeffs(a, b, (mb & !ma).trailing_zeros() as usize);
    }
    let vars: Vec<usize> = (0..MAX_VARS).filter(|&v| ma & (1 << v) != 0).collect();
    let bound: Vec<u32> = vars.iter().map(|&x| gcd_degree_bound(a, b, x)).collect();
    if bound.iter().all(|&d| d == 0) {
        return Poly::one();
    }
    for (p, q) in [(a, b), (b, a)] {
        if vars.iter().zip(&bound).all(|(&x, &d)| d == q.degree_in(x)) && p.div_exact(q).is_some() {
            return q.clone();
        }
    }
    if let Some(g) = super::modgcd::modular_gcd(a, b, &vars, &bound) {
        return g;
    }
    let (x, target) = vars
        .iter()
        .zip(&bound)
        .filter(|(_, &d)| d > 0)
        .min_by_key(|(&x, _)| a.degree_in(x).max(b.degree_in(x)))
        .map(|(&x, &d)| (x, d))
        .expect("some variable has a positive bound");
    let (ca, pa) = primitive(a.coeffs_in(x));
    let (cb, pb) = primitive(b.coeffs_in(x));
    let c = gcd(&ca, &cb);
    Poly::from_coeffs(x, &subresultant_gcd(x, pa, pb, target as usize)).mul(&c)
}


/// Upper bound for the degree in `x` of gcd(a, b), from a specialisation of the other variables.
fn gcd_degree_bound(a: &Poly, b: &Poly, x: usize) -> u32 {
    let trivial = a.degree_in(x).min(b.degree_in(x));
    for round in 0..2 {
        let pt = eval::point(round);
        let sa = eval::specialise(a, x, &pt);
        let sb = eval::specialise(b, x, &pt);
        if sa.last() != Some(&0) && sb.last() != Some(&0) {
            return eval::gcd_degree(&sa, &sb) as u32;
        }
    }
    trivial
}

/// gcd(p, q) where `p` does not involve `x` but `q` does.
fn gcd_with_coeffs(p: &Poly, q: &Poly, x: usize) -> Poly {
    let mut coeffs: Vec<Poly> = q.coeffs_in(x).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = p.clone();
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

type Univariate = Vec<Poly>;

fn trim(u: &mut Univariate) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn degree(u: &Univariate) -> usize {
    u.len() - 1
}

/// Content and primitive part of a univariate polynomial with polynomial coefficients.
fn primitive(u: Univariate) -> (Poly, Univariate) {
    let mut nonzero: Vec<&Poly> = u.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut content = Poly::zero();
    for c in nonzero {
        content = gcd(&content, c);
        if content.is_one() {
            return (content, u);
        }
    }
    let pp = u
        .iter()
        .map(|c| c.div_exact(&content).expect("content divides every coefficient"))
        .collect();
    (content, pp)
}

/// lc(b)^(deg a − deg b + 1)·a mod b.
fn prem(a: &Univariate, b: &Univariate) -> Univariate {
    let db = degree(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps_left = degree(a) + 1 - db;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let s = dr - db;
        if !lb.is_one() {
            for c in r.iter_mut() {
                *c = c.mul(lb);
            }
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[j + s] = r[j + s].add(&lr.mul(bj));
            }
        }
        trim(&mut r);
        steps_left -= 1;
    }
    if !lb.is_one() && steps_left > 0 && !r.is_empty() {
        let f = lb.pow(steps_left as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Primitive gcd of two primitive univariate polynomials via the subresultant PRS.
///
/// `target` bounds the degree of the gcd from above; when a remainder reaches it,
/// its primitive part is tried as the answer by exact division.
fn subresultant_gcd(x: usize, a: Univariate, b: Univariate, target: usize) -> Univariate {
    let (mut p, mut q) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let (p0, q0) = (Poly::from_coeffs(x, &p), Poly::from_coeffs(x, &q));
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        if degree(&q) == 0 {
            return vec![Poly::one()];
        }
        if degree(&q) == target {
            let (_, cand) = primitive(q.clone());
            let c = Poly::from_coeffs(x, &cand);
            if p0.div_exact(&c).is_some() && q0.div_exact(&c).is_some() {
                return cand;
            }
        }
        let delta = degree(&p) - degree(&q);
        let r = prem(&p, &q);
        if r.is_empty() {
            return primitive(q).1;
        }
        let divisor = g.mul(&h.pow(delta as u32));
        let r: Univariate = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        p = q;
        q = r;
        g = p[degree(&p)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta as u32).div_exact(&h.pow(delta as u32 - 1)).expect("exact"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize) -> Poly {
        Poly::var(v)
    }

    #[test]
    fn graded_order() {
        let a = Monomial::var(0, 1);
        let b = Monomial::var(1, 2);
        assert!(b > a);
        assert!(Monomial::var(0, 2) > Monomial::var(0, 1) * Monomial::var(1, 1));
    }

    #[test]
    fn square_is_frobenius() {
        let p = x(0).add(&x(1)).add(&Poly::one());
        assert_eq!(p.square(), p.mul(&p));
    }

    #[test]
    fn exact_division() {
        let p = x(0).add(&x(1));
        let q = x(2).add(&Poly::one()).add(&x(0).mul(&x(3)));
        let pq = p.mul(&q);
        assert_eq!(pq.div_exact(&p), Some(q.clone()));
        assert_eq!(pq.div_exact(&q), Some(p));
        assert_eq!(q.div_exact(&x(0)), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = x(0).mul(&x(1)).add(&x(2)).add(&Poly::one());
        let g = x(3).square().add(&x(0));
        let h = x(1).add(&x(2).mul(&x(3)));
        let a = f.mul(&g).mul(&x(1));
        let b = f.mul(&h).mul(&x(1)).mul(&x(1));
        assert_eq!(gcd(&a, &b), f.mul(&x(1)));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = x(0).add(&Poly::one());
        let b = x(0);
        assert!(gcd(&a, &b).is_one());
        let t = x(3);
        let num = t.pow(3).add(&t);
        let den = t.square().add(&Poly::one());
        assert_eq!(gcd(&num, &den), den);
    }
}
