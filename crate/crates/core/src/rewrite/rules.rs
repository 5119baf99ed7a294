//! Two-atom rewrite rules. Each returns a word with the same matrix as its input.

use super::word::Atom;
use crate::chevalley::commutator_factors;
use crate::error::{Error, Result};
use crate::fields::QuadExtElem;
use crate::roots::f4;

fn expect_root(a: &Atom) -> Result<(usize, &QuadExtElem)> {
    match a {
        Atom::Root { r, t } => Ok((*r, t)),
        other => Err(Error::Rewrite(format!("expected a root element, got {}", other.kind()))),
    }
}

/// λ^e for a nonzero λ.
fn power(lambda: &QuadExtElem, e: i32) -> Result<QuadExtElem> {
    lambda.pow(e as i64).ok_or(Error::DivisionByZero)
}

/// n_s(t′)·u_r(t) = u_{w_s r}(t′^{−A_{s,r}}·t)·n_s(t′).
pub fn swap_n(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let Atom::N { r: s, t: tp } = a else {
        return Err(Error::Rewrite("swap_n expects a Weyl element first".into()));
    };
    let (r, t) = expect_root(b)?;
    let rs = f4();
    let c = power(tp, -rs.cartan(*s, r))?.mul(t);
    Ok(vec![Atom::Root { r: rs.reflect(*s, r), t: c }, a.clone()])
}

/// u_r(t)·n_s(t′) = n_s(t′)·u_{w_s r}(t′^{−A_{s,r}}·t).
pub fn swap_past_n(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let (r, t) = expect_root(a)?;
    let Atom::N { r: s, t: tp } = b else {
        return Err(Error::Rewrite("swap_past_n expects a Weyl element second".into()));
    };
    let rs = f4();
    let c = power(tp, -rs.cartan(*s, r))?.mul(t);
    Ok(vec![b.clone(), Atom::Root { r: rs.reflect(*s, r), t: c }])
}

/// u_r(t)·h_s(λ) = h_s(λ)·u_r(t·λ^{−A_{s,r}}).
pub fn swap_h(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let (r, t) = expect_root(a)?;
    let Atom::Hua { r: s, lambda } = b else {
        return Err(Error::Rewrite("swap_h expects a Hua element second".into()));
    };
    let c = t.mul(&power(lambda, -f4().cartan(*s, r))?);
    Ok(vec![b.clone(), Atom::Root { r, t: c }])
}

/// u_r(t)·u_s(t′) = u_s(t′)·u_r(t)·[u_r(t), u_s(t′)] for s ≠ ±r.
pub fn swap_comm(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let (r, t) = expect_root(a)?;
    let (s, tp) = expect_root(b)?;
    if s == r || s == f4().neg(r) {
        return Err(Error::Rewrite("swap_comm needs two roots that are not ± each other".into()));
    }
    let mut out = vec![b.clone(), a.clone()];
    out.extend(
        commutator_factors(r, s, t, tp)
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(z, c)| Atom::Root { r: z, t: c }),
    );
    Ok(out)
}

/// u_r(t)·u_{−r}(t′) = u_{−r}(t′/(tt′+1))·h_r(tt′+1)·u_r(t/(tt′+1)), and
/// n_r(t)·u_r(t) when tt′ = 1.
pub fn split_opposite(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let (r, t) = expect_root(a)?;
    let (s, tp) = expect_root(b)?;
    if s != f4().neg(r) {
        return Err(Error::Rewrite("split_opposite needs opposite roots".into()));
    }
    let d = t.mul(tp).add(&t.one_like());
    if d.is_zero() {
        return Ok(vec![Atom::N { r, t: t.clone() }, a.clone()]);
    }
    let di = d.inv().ok_or(Error::DivisionByZero)?;
    Ok(vec![
        Atom::Root { r: s, t: tp.mul(&di) },
        Atom::Hua { r, lambda: d },
        Atom::Root { r, t: t.mul(&di) },
    ])
}

/// u_r(t)·u_r(t′) = u_r(t+t′), dropped when the sum vanishes.
pub fn merge(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let (r, t) = expect_root(a)?;
    let (s, tp) = expect_root(b)?;
    if r != s {
        return Err(Error::Rewrite("merge needs equal roots".into()));
    }
    let c = t.add(tp);
    Ok(if c.is_zero() { Vec::new() } else { vec![Atom::Root { r, t: c }] })
}

/// The image of an atom under conjugation by n_s (= n_s(1)): n_s·a·n_s.
pub fn conjugate_by_n(s: usize, a: &Atom) -> Atom {
    let w = f4().reflect(s, a.root());
    match a {
        Atom::Root { t, .. } => Atom::Root { r: w, t: t.clone() },
        Atom::Hua { lambda, .. } => Atom::Hua { r: w, lambda: lambda.clone() },
        Atom::N { t, .. } => Atom::N { r: w, t: t.clone() },
    }
}
