use mixedf4::chevalley::Matrix;
use mixedf4::fields::{FieldSpec, QuadExtElem};
use mixedf4::involution::*;
use mixedf4::rewrite::{Atom, Word};
use mixedf4::roots::{f4, RootId, NUM_ROOTS};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Check, Ctx, Kind, Tally};
use crate::config::{FieldConfig, Suite};

pub fn checks() -> Vec<Check> {
    let c = |name, kind, run| Check { name, suite: Suite::Involution, kind, run };
    vec![
        c("involution.coefficient_table", Kind::Table, coefficient_table),
        c("involution.commutator_compatibility", Kind::Table, commutator_compatibility),
        c("involution.random_specializations", Kind::Sampled, random_specializations),
        c("involution.sigma_on_words", Kind::Sampled, sigma_on_words),
        c("involution.b3_preserves_r", Kind::Sampled, b3_preserves_r),
        c("involution.m_from_s", Kind::Table, m_from_s_check),
        c("involution.sigma_b3", Kind::Sampled, sigma_b3_check),
        c("involution.flags", Kind::Sampled, flags),
    ]
}

/// Names of the checks making up the B3 cross-validation.
pub const B3_CHECKS: [&str; 4] =
    ["involution.b3_preserves_r", "involution.m_from_s", "involution.sigma_b3", "involution.flags"];

fn b3_roots() -> Vec<RootId> {
    (0..NUM_ROOTS).filter(|&r| f4().in_phi_j(r)).collect()
}

fn coeff(ctx: &Ctx, rng: &mut ChaCha8Rng, r: RootId) -> QuadExtElem {
    ctx.config.sampler.ext(rng, &ctx.spec, f4().is_long(r))
}

/// c_{r₁}, …, c_{r₁₅} as listed: 1, α, α⁻¹, β, β⁻¹, αβ, (αβ)⁻¹, 1, 1, α, α⁻¹, β, β⁻¹, (αβ)⁻¹, αβ.
pub fn listed_u1_coefficients(spec: &FieldSpec) -> [QuadExtElem; 15] {
    let (a, b) = (spec.alpha(), spec.beta());
    let ab = a.mul(&b);
    let inv = |x: &QuadExtElem| x.inv().expect("nonzero");
    let one = spec.one();
    [
        one.clone(),
        a.clone(),
        inv(&a),
        b.clone(),
        inv(&b),
        ab.clone(),
        inv(&ab),
        one.clone(),
        one,
        a.clone(),
        inv(&a),
        b.clone(),
        inv(&b),
        inv(&ab),
        ab,
    ]
}

fn coefficient_table(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let table = ctx.table();
    let mut t = Tally::new();
    for (k, (&r, want)) in f4().r_list().iter().zip(listed_u1_coefficients(spec)).enumerate() {
        t.sample();
        t.expect(table.get(r) == &want, || {
            format!("c_r{} = {}, listed {}", k + 1, spec.format(table.get(r)), spec.format(&want))
        });
    }
    let bad = table.involution_failures();
    t.add_samples(NUM_ROOTS);
    t.expect(bad.is_empty(), || format!("c̄_r·c_σ(r) ≠ 1 at {} roots, first {}", bad.len(), f4().root(bad[0])));
    t.note("15 listed values reproduced; c̄_r·c_σ(r) = 1 for all 48 roots");
    t
}

fn commutator_compatibility(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let bad = ctx.table().commutator_failures();
    let mut t = Tally::new();
    t.add_samples(NUM_ROOTS * (NUM_ROOTS - 2));
    t.expect(bad.is_empty(), || {
        format!("{} pairs, first ({}, {})", bad.len(), f4().root(bad[0].0), f4().root(bad[0].1))
    });
    t
}

/// The table invariants for random (α, β) ∈ k².
fn random_specializations(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let base = &ctx.spec;
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples.min(20) {
        t.sample();
        let a = ctx.config.sampler.nonzero_poly(rng, base, true).fmt_with(base.names());
        let b = ctx.config.sampler.nonzero_poly(rng, base, true).fmt_with(base.names());
        let cfg = FieldConfig { alpha: a.clone(), beta: b.clone(), ..ctx.config.field.clone() };
        let Some(spec) = t.ok(cfg.build(), || format!("α = {a}, β = {b}")) else { continue };
        let table = CoeffTable::compute(&spec);
        t.expect(table.involution_failures().is_empty() && table.commutator_failures().is_empty(), || {
            format!("table invariants at α = {a}, β = {b}")
        });
    }
    t
}

/// σ² = id on random words, compared as matrices.
fn sigma_on_words(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let (spec, table) = (&ctx.spec, ctx.table());
    let mut t = Tally::new();
    for _ in 0..ctx.config.samples.min(20) {
        t.sample();
        let w: Word = (0..4)
            .map(|k| {
                let r = rng.gen_range(0..NUM_ROOTS);
                let x = coeff(ctx, rng, r);
                match k % 3 {
                    0 => Atom::Root { r, t: x },
                    1 => Atom::N { r, t: x },
                    _ => Atom::Hua { r, lambda: x },
                }
            })
            .collect();
        let back = table.sigma_word(&table.sigma_word(&w));
        let res = back.eval(spec).and_then(|b| Ok(b == w.eval(spec)?));
        if let Some(ok) = t.ok(res, || w.display(spec)) {
            t.expect(ok, || format!("σ² ≠ id on {}", w.display(spec)));
        }
    }
    t
}

fn b3_preserves_r(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    let mut lone = Matrix::identity(7, spec.tower());
    lone.set(b3_pos(1), b3_pos(2), spec.one());
    t.expect(!preserves_r(spec, &lone), || "the test accepts a matrix that does not preserve R".into());
    for r in b3_roots() {
        for _ in 0..ctx.config.samples.min(5) {
            t.sample();
            let x = coeff(ctx, rng, r);
            if let Some(m) = t.ok(b3_generator(spec, r, &x), || format!("generator at {}", f4().root(r))) {
                t.expect(preserves_r(spec, &m), || format!("u_{}({}) does not preserve R", f4().root(r), spec.format(&x)));
            }
        }
    }
    t
}

fn m_from_s_check(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let mut t = Tally::new();
    t.add_samples(49);
    if let Some(m) = t.ok(m_from_s(spec), || "S̄S⁻¹".into()) {
        let want = m_matrix(spec);
        for k in 0..49 {
            let (i, j) = (k / 7, k % 7);
            t.expect(m.get(i, j) == want.get(i, j), || {
                format!("entry ({i},{j}): {} vs {}", spec.format(m.get(i, j)), spec.format(want.get(i, j)))
            });
        }
    }
    t.note("S̄S⁻¹ equals M entry for entry");
    t
}

fn sigma_b3_check(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let (spec, table) = (&ctx.spec, ctx.table());
    let mut t = Tally::new();
    for r in b3_roots() {
        for _ in 0..ctx.config.samples.min(10) {
            t.sample();
            let w = Word(vec![Atom::Root { r, t: coeff(ctx, rng, r) }]);
            let res = (|| {
                let m = b3_matrix_of_word(spec, &w)?;
                let direct = sigma_b3(spec, &m)?;
                let via_word = b3_matrix_of_word(spec, &table.sigma_word(&w))?;
                Ok(projectively_equal(&direct, &via_word) && projectively_equal(&sigma_b3(spec, &direct)?, &m))
            })();
            if let Some(ok) = t.ok(res, || w.display(spec)) {
                t.expect(ok, || format!("σ on {}", w.display(spec)));
            }
        }
    }
    t
}

/// Positive B3 generators fix the standard flag, their σ-images the opposite one.
fn flags(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let (spec, table) = (&ctx.spec, ctx.table());
    let mut t = Tally::new();
    for r in b3_roots().into_iter().filter(|&r| f4().is_positive(r)) {
        t.sample();
        let w = Word(vec![Atom::Root { r, t: coeff(ctx, rng, r) }]);
        let res = (|| Ok((b3_matrix_of_word(spec, &w)?, b3_matrix_of_word(spec, &table.sigma_word(&w))?)))();
        if let Some((m, s)) = t.ok(res, || w.display(spec)) {
            t.expect(stabilises_flag(&m, 1), || format!("{} moves the flag", w.display(spec)));
            t.expect(stabilises_flag(&s, -1), || format!("σ({}) moves the opposite flag", w.display(spec)));
        }
    }
    t
}
