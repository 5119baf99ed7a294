//! The root system of type F4 and its B3 subsystem.
//!
//! Roots are stored in doubled coordinates with respect to e₁, …, e₄, so the
//! half-integral roots are exact. The fundamental roots are
//! α₁ = ½(−e₁−e₂−e₃+e₄), α₂ = e₃, α₃ = e₂−e₃, α₄ = e₁−e₂; J = {α₂, α₃, α₄}
//! spans the B3 subsystem Φ_J of roots with zero e₄-coordinate.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Index of a root in [`RootSystem::roots`].
pub type RootId = usize;

pub const NUM_ROOTS: usize = 48;
pub const NUM_POSITIVE: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root(pub [i8; 4]);

impl Root {
    /// From ordinary (undoubled) coordinates given in halves.
    pub const fn doubled(c: [i8; 4]) -> Root {
        Root(c)
    }

    pub fn coords(self) -> [i8; 4] {
        self.0
    }

    /// Four times the inner product.
    pub fn dot4(self, o: Root) -> i32 {
        (0..4).map(|i| self.0[i] as i32 * o.0[i] as i32).sum()
    }

    /// Squared length in doubled coordinates: 4 for short roots, 8 for long ones.
    pub fn norm4(self) -> i32 {
        self.dot4(self)
    }

    pub fn is_long(self) -> bool {
        self.norm4() == 8
    }

    /// Doubled e₄-coordinate, in {−2, −1, 0, 1, 2}.
    pub fn e4_height(self) -> i8 {
        self.0[3]
    }

    pub fn neg(self) -> Root {
        Root(self.0.map(|c| -c))
    }

    pub fn plus(self, o: Root) -> Root {
        Root([0, 1, 2, 3].map(|i| self.0[i] + o.0[i]))
    }

    pub fn scaled(self, k: i8) -> Root {
        Root(self.0.map(|c| c * k))
    }

    /// The reflection w_self applied to `r`: r − (2(r,s)/(s,s))·s.
    pub fn reflect(self, r: Root) -> Root {
        let k = 2 * r.dot4(self) / self.norm4();
        r.plus(self.scaled(-k as i8))
    }

    /// σ: negate e₁, e₂, e₃ and fix e₄.
    pub fn sigma(self) -> Root {
        Root([-self.0[0], -self.0[1], -self.0[2], self.0[3]])
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        write!(f, "({},{},{},{})", c[0], c[1], c[2], c[3])
    }
}

impl std::str::FromStr for Root {
    type Err = Error;
    fn from_str(s: &str) -> Result<Root> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i8> = inner
            .split(',')
            .map(|p| p.trim().parse::<i8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad root {s:?}")))?;
        let arr: [i8; 4] = parts.try_into().map_err(|_| Error::Parse(format!("bad root {s:?}")))?;
        let r = Root(arr);
        if f4().id(r).is_none() {
            return Err(Error::NotARoot(s.to_string()));
        }
        Ok(r)
    }
}

/// The fundamental roots α₁, …, α₄ in doubled coordinates.
pub const FUNDAMENTAL: [Root; 4] = [
    Root([-1, -1, -1, 1]),
    Root([0, 0, 2, 0]),
    Root([0, 2, -2, 0]),
    Root([2, -2, 0, 0]),
];

/// r₁, …, r₁₅: the roots with positive e₄-coordinate, in the order used for U¹.
pub const E4_POSITIVE: [Root; 15] = [
    Root([0, 0, 0, 2]),
    Root([2, 0, 0, 2]),
    Root([-2, 0, 0, 2]),
    Root([0, 2, 0, 2]),
    Root([0, -2, 0, 2]),
    Root([0, 0, 2, 2]),
    Root([0, 0, -2, 2]),
    Root([1, 1, -1, 1]),
    Root([-1, -1, 1, 1]),
    Root([1, -1, 1, 1]),
    Root([-1, 1, -1, 1]),
    Root([-1, 1, 1, 1]),
    Root([1, -1, -1, 1]),
    Root([-1, -1, -1, 1]),
    Root([1, 1, 1, 1]),
];

pub struct RootSystem {
    roots: Vec<Root>,
    index: HashMap<Root, RootId>,
    expansion: Vec<[i32; 4]>,
    sigma: Vec<RootId>,
    r_list: [RootId; 15],
    r_pos: Vec<Option<usize>>,
}

pub fn f4() -> &'static RootSystem {
    static F4: OnceLock<RootSystem> = OnceLock::new();
    F4.get_or_init(RootSystem::build)
}

fn all_roots() -> Vec<Root> {
    let mut out = Vec::with_capacity(NUM_ROOTS);
    for i in 0..4 {
        for j in (i + 1)..4 {
            for si in [2i8, -2] {
                for sj in [2i8, -2] {
                    let mut c = [0i8; 4];
                    c[i] = si;
                    c[j] = sj;
                    out.push(Root(c));
                }
            }
        }
    }
    for i in 0..4 {
        for s in [2i8, -2] {
            let mut c = [0i8; 4];
            c[i] = s;
            out.push(Root(c));
        }
    }
    for mask in 0..16u8 {
        out.push(Root([0, 1, 2, 3].map(|i| if mask & (1 << i) == 0 { 1 } else { -1 })));
    }
    out
}

fn solve_expansion(r: Root) -> [i32; 4] {
    for n0 in -4..=4 {
        for n1 in -4..=4 {
            for n2 in -4..=4 {
                for n3 in -4..=4 {
                    let n = [n0, n1, n2, n3];
                    let sum = (0..4).fold(Root([0; 4]), |acc, i| acc.plus(FUNDAMENTAL[i].scaled(n[i] as i8)));
                    if sum == r {
                        return n;
                    }
                }
            }
        }
    }
    unreachable!("every root of F4 is an integral combination of the fundamental roots")
}

impl RootSystem {
    fn build() -> RootSystem {
        let mut pairs: Vec<(Root, [i32; 4])> = all_roots().into_iter().map(|r| (r, solve_expansion(r))).collect();
        let height = |n: &[i32; 4]| n.iter().sum::<i32>();
        let mut pos: Vec<(Root, [i32; 4])> = pairs.drain(..).filter(|(_, n)| n.iter().all(|&c| c >= 0)).collect();
        pos.sort_by(|a, b| height(&a.1).cmp(&height(&b.1)).then(b.1.cmp(&a.1)));
        let neg: Vec<(Root, [i32; 4])> = pos.iter().map(|(r, n)| (r.neg(), n.map(|c| -c))).collect();
        let all: Vec<(Root, [i32; 4])> = pos.into_iter().chain(neg).collect();
        assert_eq!(all.len(), NUM_ROOTS);
        let roots: Vec<Root> = all.iter().map(|p| p.0).collect();
        let expansion = all.iter().map(|p| p.1).collect();
        let index: HashMap<Root, RootId> = roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let sigma = roots.iter().map(|r| index[&r.sigma()]).collect();
        let r_list = E4_POSITIVE.map(|r| index[&r]);
        let mut r_pos = vec![None; NUM_ROOTS];
        for (k, &id) in r_list.iter().enumerate() {
            r_pos[id] = Some(k);
        }
        RootSystem { roots, index, expansion, sigma, r_list, r_pos }
    }

    /// All 48 roots: the positive ones by increasing height, then their negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> Root {
        self.roots[id]
    }

    pub fn id(&self, r: Root) -> Option<RootId> {
        self.index.get(&r).copied()
    }

    pub fn expect_id(&self, r: Root) -> RootId {
        self.id(r).unwrap_or_else(|| panic!("{r} is not a root"))
    }

    pub fn neg(&self, id: RootId) -> RootId {
        (id + NUM_POSITIVE) % NUM_ROOTS
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < NUM_POSITIVE
    }

    /// The id of `a + b` when it is a root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.id(self.roots[a].plus(self.roots[b]))
    }

    pub fn fundamental(&self) -> [RootId; 4] {
        FUNDAMENTAL.map(|r| self.index[&r])
    }

    /// Coefficients n₁, …, n₄ with r = Σ nᵢαᵢ.
    pub fn expansion(&self, id: RootId) -> [i32; 4] {
        self.expansion[id]
    }

    pub fn height(&self, id: RootId) -> i32 {
        self.expansion[id].iter().sum()
    }

    /// Fundamental-root indices i₁, i₂, … such that each partial sum ±(α_{i₁} + … + α_{i_k})
    /// is a root, ending at `id`. The sign is that of the root.
    pub fn build_chain(&self, id: RootId) -> Vec<usize> {
        let pos = if self.is_positive(id) { id } else { self.neg(id) };
        let fund = self.fundamental();
        let mut chain = Vec::new();
        let mut cur = pos;
        while self.height(cur) > 1 {
            let (i, prev) = (0..4)
                .find_map(|i| {
                    self.id(self.roots[cur].plus(self.roots[fund[i]].neg()))
                        .filter(|&p| self.is_positive(p))
                        .map(|p| (i, p))
                })
                .expect("a positive non-simple root has a positive predecessor");
            chain.push(i);
            cur = prev;
        }
        chain.push(fund.iter().position(|&f| f == cur).expect("height-one roots are fundamental"));
        chain.reverse();
        chain
    }

    pub fn sigma(&self, id: RootId) -> RootId {
        self.sigma[id]
    }

    pub fn reflect(&self, s: RootId, r: RootId) -> RootId {
        self.index[&self.roots[s].reflect(self.roots[r])]
    }

    /// A_{rs} = 2(r,s)/(r,r).
    pub fn cartan(&self, r: RootId, s: RootId) -> i32 {
        2 * self.roots[r].dot4(self.roots[s]) / self.roots[r].norm4()
    }

    /// (p, q) with p = max{i : s − ir ∈ Φ} and q = max{i : s + ir ∈ Φ}.
    pub fn root_string(&self, r: RootId, s: RootId) -> Result<(u32, u32)> {
        if r == s || self.neg(r) == s {
            return Err(Error::Degenerate);
        }
        let (rr, sr) = (self.roots[r], self.roots[s]);
        let count = |k: i8| (1..).take_while(|&i| self.id(sr.plus(rr.scaled(k * i))).is_some()).count() as u32;
        Ok((count(-1), count(1)))
    }

    pub fn in_phi_j(&self, id: RootId) -> bool {
        self.roots[id].e4_height() == 0
    }

    pub fn e4_height(&self, id: RootId) -> i8 {
        self.roots[id].e4_height()
    }

    /// r₁, …, r₁₅ (index k holds r_{k+1}).
    pub fn r_list(&self) -> &[RootId; 15] {
        &self.r_list
    }

    /// The zero-based position k of r_{k+1} in the U¹ ordering.
    pub fn r_position(&self, id: RootId) -> Option<usize> {
        self.r_pos[id]
    }

    pub fn is_long(&self, id: RootId) -> bool {
        self.roots[id].is_long()
    }

    /// Every long root has even coefficients at the short fundamental roots α₁, α₂.
    pub fn verify_lemma_long(&self) -> bool {
        (0..NUM_ROOTS)
            .filter(|&r| self.is_long(r))
            .all(|r| self.expansion[r][0] % 2 == 0 && self.expansion[r][1] % 2 == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(c: [i8; 4]) -> RootId {
        f4().expect_id(Root(c))
    }

    #[test]
    fn counts() {
        let rs = f4();
        assert_eq!(rs.roots().len(), 48);
        assert_eq!((0..48).filter(|&r| rs.is_positive(r) && rs.in_phi_j(r)).count(), 9);
        let up: Vec<RootId> = (0..48).filter(|&r| rs.e4_height(r) > 0).collect();
        assert_eq!(up.len(), 15);
        assert!(up.iter().all(|&r| rs.is_positive(r)));
        assert_eq!((0..48).filter(|&r| rs.is_long(r)).count(), 24);
    }

    #[test]
    fn reflections() {
        let e4 = Root([0, 0, 0, 2]);
        assert_eq!(e4.reflect(e4), e4.neg());
        assert_eq!(e4.reflect(Root([2, 0, 0, 2])), Root([2, 0, 0, -2]));
        assert_eq!(FUNDAMENTAL[2].reflect(FUNDAMENTAL[1]), Root([0, 2, 0, 0]));
    }

    #[test]
    fn sigma_examples() {
        let rs = f4();
        let a = rs.fundamental();
        assert_eq!(rs.expansion(rs.sigma(a[0])), [1, 3, 2, 1]);
        assert_eq!(rs.sigma(a[1]), rs.neg(a[1]));
        let e4 = id([0, 0, 0, 2]);
        assert_eq!(rs.sigma(e4), e4);
    }

    #[test]
    fn expansions() {
        let rs = f4();
        assert_eq!(rs.expansion(rs.fundamental()[1]), [0, 1, 0, 0]);
        assert_eq!(rs.expansion(id([1, 1, 1, 1])), [1, 3, 2, 1]);
        assert_eq!(rs.expansion(id([0, 0, 0, 2])), [2, 3, 2, 1]);
    }

    #[test]
    fn strings() {
        let rs = f4();
        let a = rs.fundamental();
        assert_eq!(rs.root_string(a[1], a[2]).unwrap(), (0, 2));
        assert_eq!(rs.root_string(a[2], a[1]).unwrap(), (0, 1));
        assert_eq!(rs.root_string(a[0], a[3]).unwrap(), (0, 0));
        assert!(rs.root_string(a[0], rs.neg(a[0])).is_err());
    }

    #[test]
    fn r13_is_sigma_of_r12() {
        let rs = f4();
        let r = rs.r_list();
        for (a, b) in [(7, 8), (9, 10), (11, 12), (13, 14), (1, 2), (3, 4), (5, 6)] {
            assert_eq!(rs.sigma(r[a]), r[b]);
        }
        assert_eq!(rs.sigma(r[0]), r[0]);
    }

    #[test]
    fn lemma_long() {
        assert!(f4().verify_lemma_long());
    }
}
