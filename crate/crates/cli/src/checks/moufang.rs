use mixedf4::chevalley::in_uj_minus;
use mixedf4::fields::FieldSpec;
use mixedf4::moufang::{f, g, Octonion, UElem};
use mixedf4::rewrite::{e4, Atom, Stratum, U1Elem, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::rewrite::{tally_facets, THREE_WAY};
use super::{Check, Ctx, Kind, Tally};
use crate::config::Suite;

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check { name, suite: Suite::Moufang, kind: Kind::Sampled, run };
    vec![
        c("moufang.octonion_algebra", octonion_algebra),
        c("moufang.octonion_inverse", octonion_inverse),
        c("moufang.f_and_g", f_and_g),
        c("moufang.group_axioms", group_axioms),
        c("moufang.add_matches_words", add_matches_words),
        c("moufang.identification", identification),
        c("moufang.tau_involution", tau_involution),
        c("moufang.tau_three_way", tau_three_way),
        c("moufang.opposite_conjugation", opposite_conjugation),
        c("moufang.algebraic_reduction", algebraic_reduction),
        c("moufang.anisotropy", anisotropy),
    ]
}

/// Random vectors per algebra in the anisotropy check, per unit of the sample count.
pub const ANISOTROPY_FACTOR: usize = 10;

fn octonion(ctx: &Ctx, spec: &FieldSpec, rng: &mut ChaCha8Rng, in_k: [bool; 4]) -> Octonion {
    let s = &ctx.config.sampler;
    loop {
        let x = Octonion(std::array::from_fn(|i| s.ext_or_zero(rng, spec, in_k[i], s.zero_prob)));
        if !x.is_zero() {
            return x;
        }
    }
}

fn element(ctx: &Ctx, spec: &FieldSpec, rng: &mut ChaCha8Rng) -> UElem {
    let stratum = Stratum::ALL[rng.gen_range(0..Stratum::ALL.len())];
    UElem::from_u1(&U1Elem::sample(rng, spec, &ctx.config.sampler, stratum))
}

fn show(spec: &FieldSpec, p: &UElem) -> String {
    serde_json::to_string(&p.to_json(spec)).expect("json")
}

fn octonion_algebra(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let one = Octonion::one(spec);
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples {
        t.sample();
        let x = octonion(ctx, spec, rng, [false; 4]);
        let y = octonion(ctx, spec, rng, [false; 4]);
        t.expect(one.mul(&y, spec) == y && y.mul(&one, spec) == y, || "1 is not a unit".into());
        t.expect(x.mul(&x.conj(), spec) == Octonion::scalar(spec, x.norm(spec)), || "x·x̄ ≠ N(x)".into());
        t.expect(x.mul(&y, spec).norm(spec) == x.norm(spec).mul(&y.norm(spec)), || {
            format!("N(xy) ≠ N(x)N(y) at x = {:?}", x.format(spec))
        });
    }
    t
}

fn octonion_inverse(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let one = Octonion::one(spec);
    let mut t = Tally::new();
    let gamma = Octonion::scalar(spec, spec.gamma());
    let want = spec.gamma().conj().div(&spec.base(spec.delta().clone())).map(|c| Octonion::scalar(spec, c));
    t.expect(gamma.inv(spec).ok() == want, || "(γ,0,0,0)⁻¹ ≠ (γ̄/δ,0,0,0)".into());
    for _ in 0..ctx.config.samples {
        t.sample();
        let x = octonion(ctx, spec, rng, [false; 4]);
        if let Some(xi) = t.ok(x.inv(spec), || format!("inverse of {:?}", x.format(spec))) {
            t.expect(x.mul(&xi, spec) == one && xi.mul(&x, spec) == one, || format!("x·x⁻¹ at {:?}", x.format(spec)));
        }
    }
    t
}

fn f_and_g(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    t.expect(f(spec, &Octonion::zero(spec)).is_zero(), || "f(0) ≠ 0".into());
    for _ in 0..ctx.config.samples {
        t.sample();
        let a = octonion(ctx, spec, rng, [false; 4]);
        t.expect(f(spec, &a).0[0] == a.norm(spec), || "f(a)₁ ≠ N(a)".into());
        t.expect(g(spec, &a, &a).trace().is_zero(), || "tr g(a, a) ≠ 0".into());
    }
    t
}

fn group_axioms(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let zero = UElem::zero(spec);
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples {
        t.sample();
        let (p, q, r) = (element(ctx, spec, rng), element(ctx, spec, rng), element(ctx, spec, rng));
        t.expect(p.add(&zero, spec) == p && zero.add(&p, spec) == p, || format!("identity at {}", show(spec, &p)));
        let n = p.neg(spec);
        t.expect(p.add(&n, spec).is_zero() && n.add(&p, spec).is_zero(), || format!("inverse at {}", show(spec, &p)));
        let pq = p.add(&q, spec);
        for (what, x) in [("p + q", &pq), ("-p", &n)] {
            t.ok(x.validate(spec), || format!("{what} leaves U at {}", show(spec, &p)));
        }
        t.expect(pq.add(&r, spec) == p.add(&q.add(&r, spec), spec), || format!("associativity at {}", show(spec, &p)));
    }
    t
}

/// to_u1(p + q) evaluates to the product of the U¹ matrices of p and q.
fn add_matches_words(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples {
        t.sample();
        let (p, q) = (element(ctx, spec, rng), element(ctx, spec, rng));
        let res = (|| {
            let mut m = p.to_u1().canonical_word(spec)?.eval(spec)?;
            q.to_u1().canonical_word(spec)?.mul_right(&mut m)?;
            Ok(p.add(&q, spec).to_u1().canonical_word(spec)?.eval(spec)? == m)
        })();
        if let Some(ok) = t.ok(res, || show(spec, &p)) {
            t.expect(ok, || format!("p + q ≠ p·q for p = {}, q = {}", show(spec, &p), show(spec, &q)));
        }
    }
    t
}

fn identification(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples {
        t.sample();
        let p = element(ctx, spec, rng);
        t.expect(UElem::from_u1(&p.to_u1()) == p, || format!("round trip of {}", show(spec, &p)));
        let back = UElem::from_json(spec, &p.to_json(spec));
        if let Some(b) = t.ok(back, || show(spec, &p)) {
            t.expect(b == p, || format!("json round trip of {}", show(spec, &p)));
        }
    }
    t
}

fn tau_involution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples {
        t.sample();
        let p = element(ctx, spec, rng);
        let res = p.tau(spec).and_then(|q| {
            q.validate(spec)?;
            Ok(q.tau(spec)? == p)
        });
        if let Some(ok) = t.ok(res, || show(spec, &p)) {
            t.expect(ok, || format!("τ² ≠ id at {}", show(spec, &p)));
        }
    }
    t
}

fn tau_three_way(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    tally_facets(ctx, &THREE_WAY)
}

/// n·u·n lies in U_J⁻ and is σ-fixed.
fn opposite_conjugation(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    for i in 0..ctx.config.samples {
        t.sample();
        let u = U1Elem::sample(rng, spec, &ctx.config.sampler, Stratum::ALL[i % Stratum::ALL.len()]);
        let res = (|| {
            let n = Atom::N { r: e4(), t: spec.one() };
            let mut w = Word(vec![n.clone()]).concat(&u.canonical_word(spec)?);
            w.push(n);
            let m = w.eval(spec)?;
            Ok(in_uj_minus(&m) && ctx.table().sigma_word(&w).eval(spec)? == m)
        })();
        let p = UElem::from_u1(&u);
        if let Some(ok) = t.ok(res, || show(spec, &p)) {
            t.expect(ok, || format!("n·u·n at {}", show(spec, &p)));
        }
    }
    t
}

/// φ(p + q) = φ(p) +̃ φ(q) and φ(τ p) = τ̃(φ p) over k = ℓ with the configured constants.
fn algebraic_reduction(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    let Some(spec) = t.ok(ctx.config.field.algebraic().build(), || "algebraic field".into()) else {
        return t;
    };
    let spec = &spec;
    for _ in 0..ctx.config.samples {
        t.sample();
        let (p, q) = (element(ctx, spec, rng), element(ctx, spec, rng));
        let res = (|| {
            let hom = p.add(&q, spec).phi(spec)? == p.phi(spec)?.tilde_add(&q.phi(spec)?, spec)?;
            let conj = p.tau(spec)?.phi(spec)? == p.phi(spec)?.tilde_tau(spec)?;
            Ok((hom, conj))
        })();
        if let Some((hom, conj)) = t.ok(res, || show(spec, &p)) {
            t.expect(hom, || format!("φ(p + q) at {}", show(spec, &p)));
            t.expect(conj, || format!("φ∘τ at {}", show(spec, &p)));
        }
    }
    t
}

/// N ≠ 0 on random nonzero vectors of O_ℓ = L⁴ and O_mixed = L ⊕ K³.
fn anisotropy(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let n = ANISOTROPY_FACTOR * ctx.config.samples;
    let mut t = Tally::new();
    for (label, in_k) in [("O_l", [false; 4]), ("O_mixed", [false, true, true, true])] {
        for _ in 0..n {
            t.sample();
            let x = octonion(ctx, spec, rng, in_k);
            t.expect(!x.norm(spec).is_zero(), || format!("isotropic vector {:?} in {label}", x.format(spec)));
        }
    }
    t.note(format!("{n} nonzero vectors each of O_l and O_mixed; sampled evidence only"));
    t
}
