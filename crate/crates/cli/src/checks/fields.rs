use mixedf4::fields::{QuadExtElem, RatFunc};
use rand_chacha::ChaCha8Rng;

use super::{Check, Ctx, Kind, Tally};
use crate::config::Suite;

pub fn checks() -> Vec<Check> {
    let c = |name, kind, run| Check { name, suite: Suite::Fields, kind, run };
    vec![
        c("fields.ring_axioms", Kind::Sampled, ring_axioms),
        c("fields.conjugation_automorphism", Kind::Sampled, conjugation),
        c("fields.norm_multiplicative", Kind::Sampled, norm_multiplicative),
        c("fields.k_split", Kind::Sampled, k_split),
        c("fields.text_round_trip", Kind::Sampled, text_round_trip),
        c("fields.delta_witness", Kind::Table, delta_witness),
    ]
}

fn elements(ctx: &Ctx, rng: &mut ChaCha8Rng, n: usize) -> Vec<QuadExtElem> {
    (0..n).map(|_| ctx.config.sampler.ext(rng, &ctx.spec, false)).collect()
}

/// Twice the sample count, as pairs of field elements are cheap.
fn count(ctx: &Ctx) -> usize {
    2 * ctx.config.samples
}

fn ring_axioms(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    for _ in 0..count(ctx) {
        t.sample();
        let xs = elements(ctx, rng, 3);
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let show = || ctx.spec.format(x);
        t.expect(x.add(x).is_zero(), || format!("x + x ≠ 0 for {}", show()));
        t.expect(x.mul(y).mul(z) == x.mul(&y.mul(z)), || format!("associativity at {}", show()));
        t.expect(x.mul(&y.add(z)) == x.mul(y).add(&x.mul(z)), || format!("distributivity at {}", show()));
        t.expect(x.inv().is_some_and(|i| x.mul(&i).is_one()), || format!("x·x⁻¹ ≠ 1 for {}", show()));
    }
    t
}

fn conjugation(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    for _ in 0..count(ctx) {
        t.sample();
        let xs = elements(ctx, rng, 2);
        let (x, y) = (&xs[0], &xs[1]);
        let ok = x.mul(y).conj() == x.conj().mul(&y.conj())
            && x.add(y).conj() == x.conj().add(&y.conj())
            && x.conj().conj() == *x;
        t.expect(ok, || format!("conjugation at {}", ctx.spec.format(x)));
    }
    t
}

fn norm_multiplicative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    for _ in 0..count(ctx) {
        t.sample();
        let xs = elements(ctx, rng, 2);
        t.expect(xs[0].mul(&xs[1]).norm() == xs[0].norm().mul(&xs[1].norm()), || {
            format!("N(xy) ≠ N(x)N(y) at {}", ctx.spec.format(&xs[0]))
        });
    }
    t
}

fn k_split(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let Some(v) = spec.mixed_var() else {
        return Tally::skipped("mixed mode only");
    };
    let tvar = RatFunc::var(v);
    let mut t = Tally::new();
    for _ in 0..count(ctx) {
        t.sample();
        let xs = elements(ctx, rng, 2);
        let x = xs[0].u().add(&xs[1].u().inv().unwrap_or_else(RatFunc::one));
        let Some((x0, x1)) = spec.split_k(&x) else {
            t.fail("no split".into());
            continue;
        };
        let ok = spec.in_subfield_k(&x0)
            && spec.in_subfield_k(&x1)
            && x0.add(&tvar.mul(&x1)) == x
            && spec.in_subfield_k(&x) == x1.is_zero();
        t.expect(ok, || format!("split of {}", spec.format_base(&x)));
    }
    t
}

fn text_round_trip(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    for _ in 0..count(ctx) {
        t.sample();
        let xs = elements(ctx, rng, 3);
        let Some(x) = xs[0].div(&xs[1]).map(|q| q.add(&xs[2])) else { continue };
        let text = ctx.spec.format(&x);
        t.expect(ctx.spec.parse(&text).ok() == Some(x), || format!("round trip of {text}"));
    }
    t
}

fn delta_witness(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    match ctx.spec.delta_irreducibility_witness() {
        Some(v) => t.note(format!("x² + x + δ is irreducible over k: δ has odd degree in {v}")),
        None => t.note("no degree witness for the irreducibility of x² + x + δ; assumed by the configuration"),
    }
    t
}
