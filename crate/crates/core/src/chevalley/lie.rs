//! The Chevalley basis of the F4 Lie algebra over ℤ.
//!
//! Basis vectors 0..48 are e_r (indexed by root id), 48..52 are h_{α₁}, …, h_{α₄}.
//! Signs of N_{rs} follow the extraspecial-pair convention: N_{αβ} = +(p+1) for
//! each extraspecial pair, everything else forced by the standard identities.

use std::sync::OnceLock;

use crate::roots::{f4, RootId, RootSystem, NUM_ROOTS};

pub const DIM: usize = 52;
pub const RANK: usize = 4;

/// Basis index of h_{αᵢ} (i zero-based).
pub const fn h_index(i: usize) -> usize {
    NUM_ROOTS + i
}

/// A sparse integral vector in the Chevalley basis.
pub type ZVec = Vec<(usize, i64)>;

pub struct StructureConstants {
    n: Vec<i32>,
    m: Vec<[i32; 3]>,
    coroot: Vec<[i32; RANK]>,
}

pub fn structure_constants() -> &'static StructureConstants {
    static SC: OnceLock<StructureConstants> = OnceLock::new();
    SC.get_or_init(StructureConstants::build)
}

struct NBuilder<'a> {
    rs: &'a RootSystem,
    memo: Vec<Option<i32>>,
}

impl NBuilder<'_> {
    fn norm(&self, r: RootId) -> i64 {
        self.rs.root(r).norm4() as i64
    }

    /// (α, β) with α the earliest positive root such that ξ − α is positive.
    fn extraspecial(&self, xi: RootId) -> (RootId, RootId) {
        (0..xi)
            .find_map(|a| self.rs.sum(xi, self.rs.neg(a)).filter(|&b| self.rs.is_positive(b)).map(|b| (a, b)))
            .expect("a non-simple positive root is a sum of two positive roots")
    }

    fn get(&mut self, r: RootId, s: RootId) -> i32 {
        let Some(xi) = self.rs.sum(r, s) else { return 0 };
        if let Some(v) = self.memo[r * NUM_ROOTS + s] {
            return v;
        }
        let v = self.compute(r, s, xi);
        self.memo[r * NUM_ROOTS + s] = Some(v);
        v
    }

    fn compute(&mut self, r: RootId, s: RootId, xi: RootId) -> i32 {
        let rs = self.rs;
        match (rs.is_positive(r), rs.is_positive(s)) {
            (true, true) => {
                let (a, b) = self.extraspecial(xi);
                let p1 = rs.root_string(a, b).expect("independent").0 as i32 + 1;
                if (r, s) == (a, b) {
                    return p1;
                }
                if (r, s) == (b, a) {
                    return -p1;
                }
                // r + s − α − β = 0 with no opposite pair.
                let (na, nb) = (rs.neg(a), rs.neg(b));
                let mut acc = 0i64;
                if let Some(x) = rs.sum(s, na) {
                    acc += (self.get(s, na) * self.get(r, nb)) as i64 * 8 / self.norm(x);
                }
                if let Some(x) = rs.sum(r, na) {
                    acc += (self.get(na, r) * self.get(s, nb)) as i64 * 8 / self.norm(x);
                }
                let num = -acc * self.norm(xi);
                let den = 8 * self.get(na, nb) as i64;
                assert_eq!(num % den, 0, "non-integral structure constant");
                (num / den) as i32
            }
            (false, false) => -self.get(rs.neg(r), rs.neg(s)),
            _ => {
                // N_{rs}/(θ,θ) = N_{s,−θ}/(r,r) = N_{−θ,r}/(s,s) with θ = r + s.
                let nt = rs.neg(xi);
                let (v, d) = if rs.is_positive(nt) == rs.is_positive(s) {
                    (self.get(s, nt) as i64, self.norm(r))
                } else {
                    (self.get(nt, r) as i64, self.norm(s))
                };
                let num = v * self.norm(xi);
                assert_eq!(num % d, 0, "non-integral structure constant");
                (num / d) as i32
            }
        }
    }
}

impl StructureConstants {
    fn build() -> StructureConstants {
        let rs = f4();
        let mut b = NBuilder { rs, memo: vec![None; NUM_ROOTS * NUM_ROOTS] };
        let mut n = vec![0i32; NUM_ROOTS * NUM_ROOTS];
        for r in 0..NUM_ROOTS {
            for s in 0..NUM_ROOTS {
                n[r * NUM_ROOTS + s] = b.get(r, s);
            }
        }
        let mut m = vec![[0i32; 3]; NUM_ROOTS * NUM_ROOTS];
        for r in 0..NUM_ROOTS {
            for s in 0..NUM_ROOTS {
                if s == r || s == rs.neg(r) {
                    continue;
                }
                let entry = &mut m[r * NUM_ROOTS + s];
                entry[0] = 1;
                let mut prod = 1i64;
                let mut cur = s;
                for i in 1..3 {
                    let Some(next) = rs.sum(r, cur) else { break };
                    prod *= n[r * NUM_ROOTS + cur] as i64;
                    let fact = if i == 2 { 2 } else { 1 };
                    assert_eq!(prod % fact, 0);
                    entry[i] = (prod / fact) as i32;
                    cur = next;
                }
            }
        }
        let fund = rs.fundamental();
        let coroot = (0..NUM_ROOTS)
            .map(|r| {
                let e = rs.expansion(r);
                let nr = rs.root(r).norm4();
                std::array::from_fn(|i| e[i] * rs.root(fund[i]).norm4() / nr)
            })
            .collect();
        StructureConstants { n, m, coroot }
    }

    /// N_{rs}, zero when r + s is not a root.
    pub fn n(&self, r: RootId, s: RootId) -> i32 {
        self.n[r * NUM_ROOTS + s]
    }

    /// M_{r,s,i} = N_{r,s}N_{r,r+s}⋯N_{r,(i−1)r+s}/i! for i ≤ 2 (zero past the end of the string).
    pub fn m(&self, r: RootId, s: RootId, i: usize) -> i32 {
        self.m[r * NUM_ROOTS + s][i]
    }

    /// Coefficients of h_r in the basis h_{α₁}, …, h_{α₄}.
    pub fn coroot(&self, r: RootId) -> [i32; RANK] {
        self.coroot[r]
    }

    /// [x, y] for basis vectors x, y.
    pub fn bracket(&self, x: usize, y: usize) -> ZVec {
        let rs = f4();
        let fund = rs.fundamental();
        match (x < NUM_ROOTS, y < NUM_ROOTS) {
            (true, true) => {
                if y == rs.neg(x) {
                    self.coroot[x]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (h_index(i), c as i64))
                        .collect()
                } else {
                    match rs.sum(x, y) {
                        Some(z) => vec![(z, self.n(x, y) as i64)],
                        None => Vec::new(),
                    }
                }
            }
            (false, true) => {
                let a = rs.cartan(fund[x - NUM_ROOTS], y);
                if a == 0 { Vec::new() } else { vec![(y, a as i64)] }
            }
            (true, false) => {
                let a = rs.cartan(fund[y - NUM_ROOTS], x);
                if a == 0 { Vec::new() } else { vec![(x, -a as i64)] }
            }
            (false, false) => Vec::new(),
        }
    }

    /// [x, v] for a basis vector x, added into `acc` with multiplier `k`.
    fn bracket_into(&self, x: usize, v: &[(usize, i64)], k: i64, acc: &mut [i64; DIM]) {
        for &(y, c) in v {
            for (z, d) in self.bracket(x, y) {
                acc[z] += k * c * d;
            }
        }
    }

    /// Number of basis pairs violating antisymmetry ([x,x] = 0 and [x,y] = −[y,x]).
    pub fn antisymmetry_failures(&self) -> usize {
        let mut fails = 0;
        for x in 0..DIM {
            for y in 0..DIM {
                let mut acc = [0i64; DIM];
                for (z, c) in self.bracket(x, y) {
                    acc[z] += c;
                }
                for (z, c) in self.bracket(y, x) {
                    acc[z] += c;
                }
                if acc.iter().any(|&c| c != 0) {
                    fails += 1;
                }
            }
        }
        fails
    }

    /// Number of basis triples violating the Jacobi identity, out of DIM³.
    pub fn jacobi_failures(&self) -> usize {
        let table: Vec<ZVec> = (0..DIM * DIM).map(|i| self.bracket(i / DIM, i % DIM)).collect();
        let br = |a: usize, b: usize| &table[a * DIM + b];
        let mut fails = 0;
        for x in 0..DIM {
            for y in 0..DIM {
                for z in 0..DIM {
                    let mut acc = [0i64; DIM];
                    self.bracket_into(x, br(y, z), 1, &mut acc);
                    self.bracket_into(y, br(z, x), 1, &mut acc);
                    self.bracket_into(z, br(x, y), 1, &mut acc);
                    if acc.iter().any(|&c| c != 0) {
                        fails += 1;
                    }
                }
            }
        }
        fails
    }

    /// Root pairs with r + s ∈ Φ where |N_{rs}| ≠ p + 1.
    pub fn chevalley_theorem_failures(&self) -> usize {
        let rs = f4();
        let mut fails = 0;
        for r in 0..NUM_ROOTS {
            for s in 0..NUM_ROOTS {
                if rs.sum(r, s).is_some() {
                    let p = rs.root_string(r, s).expect("independent").0 as i32;
                    if self.n(r, s).abs() != p + 1 {
                        fails += 1;
                    }
                }
            }
        }
        fails
    }

    /// ad(e_r) as a dense integral matrix (column y holds [e_r, y]).
    pub fn ad(&self, r: RootId) -> Vec<[i64; DIM]> {
        let mut cols = vec![[0i64; DIM]; DIM];
        for (y, col) in cols.iter_mut().enumerate() {
            for (z, c) in self.bracket(r, y) {
                col[z] += c;
            }
        }
        cols
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetric() {
        assert_eq!(structure_constants().antisymmetry_failures(), 0);
    }

    #[test]
    fn chevalley_absolute_values() {
        assert_eq!(structure_constants().chevalley_theorem_failures(), 0);
    }

    #[test]
    fn negated_pairs() {
        let rs = f4();
        let sc = structure_constants();
        for r in 0..NUM_ROOTS {
            for s in 0..NUM_ROOTS {
                assert_eq!(sc.n(rs.neg(r), rs.neg(s)), -sc.n(r, s));
            }
        }
    }

    #[test]
    fn coroot_of_simple_root() {
        let sc = structure_constants();
        let fund = f4().fundamental();
        for (i, &a) in fund.iter().enumerate() {
            let mut e = [0; RANK];
            e[i] = 1;
            assert_eq!(sc.coroot(a), e);
        }
        // e₄ is short: h_{e₄} = 2h₁ + 3h₂ + 4h₃ + 2h₄.
        let e4 = f4().expect_id(crate::roots::E4_POSITIVE[0]);
        assert_eq!(sc.coroot(e4), [2, 3, 4, 2]);
    }

    #[test]
    fn m_table_examples() {
        let rs = f4();
        let sc = structure_constants();
        let [a1, a2, a3, a4] = rs.fundamental();
        // The α₂-string through α₃ is α₃, e₂, e₂+e₃, so M_{α₂,α₃,2} = N_{α₂,α₃}N_{α₂,e₂}/2 = ±1.
        assert_eq!(sc.m(a2, a3, 1).abs(), 1);
        assert_eq!(sc.m(a2, a3, 2).abs(), 1);
        assert_eq!(sc.m(a3, a2, 2), 0);
        assert_eq!(sc.m(a1, a4, 1), 0);
    }
}
