use mixedf4::chevalley::*;
use mixedf4::fields::QuadExtElem;
use mixedf4::roots::{f4, RootId, NUM_ROOTS};
use rand_chacha::ChaCha8Rng;

use super::{Check, Ctx, Kind, Tally};
use crate::config::Suite;

pub fn checks() -> Vec<Check> {
    let c = |name, kind, run| Check { name, suite: Suite::Chevalley, kind, run };
    vec![
        c("chevalley.lie_algebra", Kind::Table, lie_algebra),
        c("chevalley.action_rules", Kind::Table, action_rules),
        c("chevalley.commutator_relations", Kind::Sampled, commutator_relations),
        c("chevalley.weyl_conjugation", Kind::Sampled, weyl_conjugation),
        c("chevalley.generator_homomorphisms", Kind::Sampled, generator_homomorphisms),
    ]
}

/// Coefficient samples per root pair in the exhaustive relation checks.
pub const PER_PAIR: usize = 3;

fn coeff(ctx: &Ctx, rng: &mut ChaCha8Rng, r: RootId) -> QuadExtElem {
    ctx.config.sampler.ext(rng, &ctx.spec, f4().is_long(r))
}

fn lie_algebra(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let sc = structure_constants();
    let mut t = Tally::new();
    let anti = sc.antisymmetry_failures();
    let jacobi = sc.jacobi_failures();
    let chevalley = sc.chevalley_theorem_failures();
    t.expect(anti == 0, || format!("{anti} antisymmetry failures"));
    t.expect(jacobi == 0, || format!("{jacobi} Jacobi failures"));
    t.expect(chevalley == 0, || format!("{chevalley} pairs with |N_rs| ≠ p + 1"));
    t.add_samples(52 * 52 * 52);
    t.note("antisymmetry and Jacobi identity on all 52³ basis triples over ℤ");
    t
}

fn action_rules(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    for r in 0..NUM_ROOTS {
        t.sample();
        t.expect(pattern(r) == &pattern_from_exponential(r), || format!("action of u_r at {}", f4().root(r)));
    }
    t
}

fn commutator_relations(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let per_pair = ctx.config.samples.min(PER_PAIR);
    let mut t = Tally::new();
    for r in 0..NUM_ROOTS {
        for s in 0..NUM_ROOTS {
            if s == r || s == rs.neg(r) {
                continue;
            }
            for _ in 0..per_pair {
                t.sample();
                let x = coeff(ctx, rng, r);
                let y = coeff(ctx, rng, s);
                t.expect(check_commutator(&ctx.spec, r, s, &x, &y), || {
                    format!("[u_{}({}), u_{}({})]", rs.root(r), ctx.spec.format(&x), rs.root(s), ctx.spec.format(&y))
                });
            }
        }
    }
    t.note(format!("all 48×46 ordered pairs, {per_pair} coefficient samples each"));
    t
}

/// n_s·u_r(t)·n_s = u_{w_s r}(t) for every pair of roots.
fn weyl_conjugation(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let one = ctx.spec.one();
    let mut t = Tally::new();
    for s in 0..NUM_ROOTS {
        for r in 0..NUM_ROOTS {
            t.sample();
            let x = coeff(ctx, rng, r);
            let mut m = identity(&ctx.spec);
            let res = mul_n_right(&mut m, s, &one).and_then(|_| {
                mul_u_right(&mut m, r, &x);
                mul_n_right(&mut m, s, &one)?;
                gen_u(&ctx.spec, rs.reflect(s, r), &x)
            });
            if let Some(expect) = t.ok(res, || format!("n_{} u_{}", rs.root(s), rs.root(r))) {
                t.expect(m == expect, || format!("n_{}·u_{}(t)·n_{}", rs.root(s), rs.root(r), rs.root(s)));
            }
        }
    }
    t
}

/// u_r(x)u_r(y) = u_r(x + y) and h_r(x)h_r(y) = h_r(xy).
fn generator_homomorphisms(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let spec = &ctx.spec;
    let mut t = Tally::new();
    for r in 0..NUM_ROOTS {
        for _ in 0..ctx.config.samples.min(PER_PAIR) {
            t.sample();
            let x = coeff(ctx, rng, r);
            let y = coeff(ctx, rng, r);
            let res = (|| {
                let u = gen_u(spec, r, &x)?.mul(&gen_u(spec, r, &y)?) == gen_u(spec, r, &x.add(&y))?;
                let h = gen_h(spec, r, &x)?.mul(&gen_h(spec, r, &y)?) == gen_h(spec, r, &x.mul(&y))?;
                Ok((u, h))
            })();
            if let Some((u, h)) = t.ok(res, || format!("generators at {}", rs.root(r))) {
                t.expect(u, || format!("u_r additivity at {}", rs.root(r)));
                t.expect(h, || format!("h_r multiplicativity at {}", rs.root(r)));
            }
        }
    }
    t
}
