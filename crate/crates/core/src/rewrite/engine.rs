//! The normal form n·u·n = b·n·u′ with n = n_{e₄}, by moving every atom that does not
//! belong to U_J from the right of n to its left.
//!
//! The state is a triple (left, n, right). Atoms of `right` that may cross n are the
//! "bad" ones: torus elements, Weyl elements of Φ_J, and root elements of e₄-height ≤ 0.
//! The leftmost bad atom is carried to the front by swaps with the good atoms before it
//! and then crosses n. Good atoms are collected into the order r₁, …, r₁₅ in between.

use serde_json::json;

use super::rules;
use super::u1::U1Elem;
use super::word::{Atom, Word};
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, QuadExtElem};
use crate::roots::{f4, Root, RootId};

pub const DEFAULT_STEP_BOUND: usize = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct RewriteOptions {
    pub step_bound: usize,
    pub trace: bool,
}

impl Default for RewriteOptions {
    fn default() -> Self {
        RewriteOptions { step_bound: DEFAULT_STEP_BOUND, trace: false }
    }
}

#[derive(Clone, Debug)]
pub struct TraceEntry {
    pub step: usize,
    pub rule: &'static str,
    pub before: Vec<Atom>,
    pub after: Vec<Atom>,
}

impl TraceEntry {
    pub fn to_json(&self, spec: &FieldSpec) -> serde_json::Value {
        let atoms = |v: &[Atom]| v.iter().map(|a| a.to_json(spec)).collect::<Vec<_>>();
        json!({
            "step": self.step,
            "rule": self.rule,
            "before": atoms(&self.before),
            "after": atoms(&self.after),
        })
    }
}

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub b: Word,
    pub uprime: U1Elem,
    pub steps: usize,
    pub trace: Vec<TraceEntry>,
}

/// The root e₄ = r₁ whose Weyl element n = n_{e₄}(1) defines τ.
pub fn e4() -> RootId {
    f4().r_list()[0]
}

/// Weight of a bad atom in the termination measure; `None` for good atoms.
fn cost(a: &Atom) -> Option<usize> {
    match a {
        Atom::Hua { .. } | Atom::N { .. } => Some(0),
        Atom::Root { r, .. } => match f4().e4_height(*r) {
            h if h > 0 => None,
            h => Some((1 - h) as usize),
        },
    }
}

/// Counts of bad atoms by cost, highest cost first; compared lexicographically this is
/// the multiset ordering on costs.
fn measure(right: &[Atom]) -> [usize; 4] {
    let mut m = [0; 4];
    for c in right.iter().filter_map(cost) {
        m[3 - c] += 1;
    }
    m
}

struct Engine<'a> {
    spec: &'a FieldSpec,
    opts: RewriteOptions,
    left: Vec<Atom>,
    right: Vec<Atom>,
    steps: usize,
    measure: [usize; 4],
    trace: Vec<TraceEntry>,
}

impl Engine<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.opts.step_bound {
            return Err(Error::StepBound {
                steps: self.opts.step_bound,
                detail: format!(
                    "{} atoms right of n, bad-atom counts {:?}, leading atoms {}",
                    self.right.len(),
                    measure(&self.right),
                    Word(self.right.iter().take(4).cloned().collect()).display(self.spec)
                ),
            });
        }
        Ok(())
    }

    fn record(&mut self, rule: &'static str, before: &[Atom], after: &[Atom]) {
        if self.opts.trace {
            self.trace.push(TraceEntry { step: self.steps, rule, before: before.to_vec(), after: after.to_vec() });
        }
    }

    /// Moves right[0] across n.
    fn cross(&mut self) -> Result<()> {
        let a = self.right.remove(0);
        if let Atom::N { r, .. } = &a {
            if !f4().in_phi_j(*r) {
                return Err(Error::Rewrite(format!(
                    "Weyl element at {} reached n; it does not lie in P_J",
                    f4().root(*r)
                )));
            }
        }
        let img = rules::conjugate_by_n(e4(), &a);
        self.record("cross_n", std::slice::from_ref(&a), std::slice::from_ref(&img));
        self.left.push(img);
        let m = measure(&self.right);
        if m >= self.measure {
            return Err(Error::Rewrite(format!("termination measure did not decrease: {:?} → {m:?}", self.measure)));
        }
        self.measure = m;
        Ok(())
    }

    /// Index of the first adjacent pair of `right` not in final order.
    fn first_unsorted(&self) -> Option<usize> {
        let rs = f4();
        (0..self.right.len().saturating_sub(1)).find(|&i| {
            let key = |a: &Atom| match a {
                Atom::Root { r, .. } => rs.r_position(*r),
                _ => None,
            };
            match (key(&self.right[i]), key(&self.right[i + 1])) {
                (Some(p), Some(q)) => p >= q,
                _ => true,
            }
        })
    }

    fn apply(&mut self, i: usize) -> Result<()> {
        let (a, b) = (&self.right[i], &self.right[i + 1]);
        let rs = f4();
        let (rule, out): (&'static str, Vec<Atom>) = match b {
            Atom::Hua { .. } => ("swap_h", rules::swap_h(a, b)?),
            Atom::N { .. } => ("swap_past_n", rules::swap_past_n(a, b)?),
            Atom::Root { r: s, .. } if *s == a.root() => ("merge", rules::merge(a, b)?),
            Atom::Root { r: s, .. } if *s == rs.neg(a.root()) => ("split_opposite", rules::split_opposite(a, b)?),
            Atom::Root { .. } => ("swap_comm", rules::swap_comm(a, b)?),
        };
        let before = [a.clone(), b.clone()];
        self.record(rule, &before, &out);
        self.right.splice(i..i + 2, out);
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        loop {
            self.tick()?;
            if self.right.first().is_some_and(|a| cost(a).is_some()) {
                self.cross()?;
                continue;
            }
            match self.first_unsorted() {
                Some(i) => self.apply(i)?,
                None => return Ok(()),
            }
        }
    }
}

/// Sorts a word of root elements by `key` using commutator swaps and merges.
/// Opposite roots must not meet.
pub fn collect(word: Vec<Atom>, key: impl Fn(RootId) -> usize, step_bound: usize) -> Result<Vec<Atom>> {
    let mut w = word;
    let mut steps = 0;
    loop {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| key(w[i].root()) >= key(w[i + 1].root())) else {
            return Ok(w);
        };
        steps += 1;
        if steps > step_bound {
            return Err(Error::StepBound { steps: step_bound, detail: format!("collecting {} atoms", w.len()) });
        }
        let out =
            if w[i].root() == w[i + 1].root() { rules::merge(&w[i], &w[i + 1])? } else { rules::swap_comm(&w[i], &w[i + 1])? };
        w.splice(i..i + 2, out);
    }
}

/// The short root e_i (i = 1, 2, 3) of Φ_J.
fn e_i(i: usize) -> RootId {
    let mut c = [0i8; 4];
    c[i - 1] = 2;
    f4().expect_id(Root::doubled(c))
}

/// Computes b and u′ with n·u·n = b·n·u′.
///
/// For t₁ ≠ 0 the leading factor u_{−r₁}(t₁) of n·u·n is rewritten as
/// u_{r₁}(s)·h_{r₁}(s)·n·u_{r₁}(s), s = t₁⁻¹. For t₁ = 0 the element n·u·n lies in the
/// long-root part of U_J⁻, and conjugating it by l = u_{e_i}(1), with t′_{2i} ≠ 0,
/// produces a nonzero u_{−r₁} coefficient first.
pub fn tau_normal_form(spec: &FieldSpec, u: &U1Elem, opts: RewriteOptions) -> Result<NormalForm> {
    u.validate(spec)?;
    if u.is_zero() {
        return Err(Error::IdentityInput);
    }
    let rs = f4();
    let n = e4();
    let mut nun: Vec<Atom> = u.canonical_word(spec)?.0.iter().map(|a| rules::conjugate_by_n(n, a)).collect();
    let mut left = Vec::new();
    let mut tail = Vec::new();
    if u.t1.is_zero() {
        let i = [&u.t2, &u.t4, &u.t6].iter().position(|t| !t.is_zero()).expect("u ≠ 1") + 1;
        let l = Atom::Root { r: e_i(i), t: spec.one() };
        let mut w = vec![l.clone()];
        w.extend(nun);
        w.push(l.clone());
        let key = |r: RootId| rs.r_position(rs.reflect(n, r)).unwrap_or(usize::MAX);
        nun = collect(w, key, opts.step_bound)?;
        left.push(l.clone());
        tail.push(l);
    }
    let s = match nun.first() {
        Some(Atom::Root { r, t }) if *r == rs.neg(n) => t.inv().ok_or(Error::DivisionByZero)?,
        _ => return Err(Error::Rewrite("no u_{-e4} factor after preconditioning".into())),
    };
    left.push(Atom::Root { r: n, t: s.clone() });
    left.push(Atom::Hua { r: n, lambda: s.clone() });
    let mut right = vec![Atom::Root { r: n, t: s }];
    right.extend(nun.into_iter().skip(1));
    right.extend(tail);

    let m0 = measure(&right);
    let mut e = Engine { spec, opts, left, right, steps: 0, measure: m0, trace: Vec::new() };
    if opts.trace {
        let first = e.left.clone();
        e.trace.push(TraceEntry { step: 0, rule: "first_move", before: Vec::new(), after: first });
    }
    e.run()?;

    let mut coeffs: [QuadExtElem; 15] = std::array::from_fn(|_| spec.zero());
    for a in &e.right {
        let k = rs.r_position(a.root()).expect("only U_J roots remain");
        coeffs[k] = a.coeff().clone();
    }
    let uprime = U1Elem::from_coefficients(spec, &coeffs)?;
    Ok(NormalForm { b: Word(e.left), uprime, steps: e.steps, trace: e.trace })
}
