use mixedf4::chevalley::{in_parabolic_pj, mul_n_right};
use mixedf4::fields::QuadExtElem;
use mixedf4::moufang::UElem;
use mixedf4::rewrite::*;
use mixedf4::roots::{f4, RootId, NUM_ROOTS};
use mixedf4::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{rng_for, Check, Ctx, Kind, Tally};
use crate::config::Suite;

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check { name, suite: Suite::Rewrite, kind: Kind::Sampled, run };
    vec![
        c("rewrite.rules_sound", rules_sound),
        c("rewrite.normal_form", normal_form),
        c("rewrite.tau_squared", tau_squared),
    ]
}

/// Facets of one normal-form computation, each true when it holds.
pub const NORMAL_FORM: [&str; 4] = ["matrix_equation", "b_in_pj", "b_sigma_fixed", "uprime_valid"];
pub const TAU_SQUARED: [&str; 2] = ["tau2_rewriter", "tau2_oracle"];
pub const THREE_WAY: [&str; 2] = ["closed_eq_rewriter", "oracle_eq_rewriter"];

/// One input of the shared normal-form pass.
pub struct TauSample {
    pub stratum: Stratum,
    pub input: U1Elem,
    pub facets: Vec<(&'static str, std::result::Result<bool, String>)>,
}

impl TauSample {
    fn facet(&self, name: &str) -> &std::result::Result<bool, String> {
        &self.facets.iter().find(|(n, _)| *n == name).expect("known facet").1
    }
}

pub fn options(ctx: &Ctx) -> RewriteOptions {
    RewriteOptions { step_bound: ctx.config.step_bound, trace: false }
}

/// Inputs cycle through the strata, so any five consecutive samples cover all of them.
pub fn tau_pass(ctx: &Ctx) -> Vec<TauSample> {
    let mut rng = rng_for(ctx.config.seed, "tau_pass");
    (0..ctx.config.samples)
        .map(|i| {
            let stratum = Stratum::ALL[i % Stratum::ALL.len()];
            let input = U1Elem::sample(&mut rng, &ctx.spec, &ctx.config.rewrite_sampler, stratum);
            let facets = facets(ctx, &input);
            TauSample { stratum, input, facets }
        })
        .collect()
}

fn facets(ctx: &Ctx, u: &U1Elem) -> Vec<(&'static str, std::result::Result<bool, String>)> {
    let spec = &ctx.spec;
    let opts = options(ctx);
    let all = NORMAL_FORM.iter().chain(&TAU_SQUARED).chain(&THREE_WAY);
    let nf = match tau_normal_form(spec, u, opts) {
        Ok(nf) => nf,
        Err(e) => return all.map(|&n| (n, Err(format!("rewriter: {e}")))).collect(),
    };
    let lhs = conjugate_by_n(spec, u);
    let b = nf.b.eval(spec);
    let one = spec.one();
    let eval = |name: &'static str, f: &dyn Fn() -> Result<bool>| (name, f().map_err(|e| e.to_string()));
    vec![
        eval("matrix_equation", &|| {
            let mut rhs = nf.b.eval(spec)?;
            mul_n_right(&mut rhs, e4(), &one)?;
            nf.uprime.canonical_word(spec)?.mul_right(&mut rhs)?;
            Ok(*lhs.as_ref().map_err(clone_err)? == rhs)
        }),
        eval("b_in_pj", &|| Ok(in_parabolic_pj(b.as_ref().map_err(clone_err)?))),
        eval("b_sigma_fixed", &|| Ok(ctx.table().sigma_word(&nf.b).eval(spec)? == *b.as_ref().map_err(clone_err)?)),
        eval("uprime_valid", &|| nf.uprime.validate(spec).map(|_| true)),
        eval("tau2_rewriter", &|| Ok(tau_normal_form(spec, &nf.uprime, opts)?.uprime == *u)),
        eval("tau2_oracle", &|| Ok(decompose(spec, &conjugate_by_n(spec, &nf.uprime)?)?.uprime == *u)),
        eval("closed_eq_rewriter", &|| Ok(UElem::from_u1(u).tau(spec)? == UElem::from_u1(&nf.uprime))),
        eval("oracle_eq_rewriter", &|| {
            let d = decompose(spec, lhs.as_ref().map_err(clone_err)?)?;
            Ok(d.uprime == nf.uprime && d.b == *b.as_ref().map_err(clone_err)?)
        }),
    ]
}

fn clone_err(e: &mixedf4::Error) -> mixedf4::Error {
    mixedf4::Error::Rewrite(e.to_string())
}

/// Tallies the given facets over the shared pass.
pub fn tally_facets(ctx: &Ctx, names: &[&str]) -> Tally {
    let samples = ctx.tau_samples();
    let mut t = Tally::new();
    let mut seen = [false; 5];
    for s in samples {
        t.sample();
        seen[Stratum::ALL.iter().position(|x| *x == s.stratum).expect("stratum")] = true;
        for &n in names {
            let input = || serde_json::to_string(&s.input.to_json(&ctx.spec)).expect("json");
            match s.facet(n) {
                Ok(true) => {}
                Ok(false) => t.fail(format!("{n} fails for {}", input())),
                Err(e) => t.fail(format!("{n} errs for {}: {e}", input())),
            }
        }
    }
    let covered = seen.iter().filter(|&&x| x).count();
    let sampler = &ctx.config.rewrite_sampler;
    t.note(format!(
        "{} inputs over {covered} of 5 strata (≤{} terms, exponents ≤{}, zero probability {})",
        samples.len(),
        sampler.max_terms,
        sampler.max_exp,
        sampler.zero_prob
    ));
    t
}

fn normal_form(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    tally_facets(ctx, &NORMAL_FORM)
}

fn tau_squared(ctx: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    tally_facets(ctx, &TAU_SQUARED)
}

fn coeff(ctx: &Ctx, rng: &mut ChaCha8Rng, r: RootId) -> QuadExtElem {
    ctx.config.sampler.ext(rng, &ctx.spec, f4().is_long(r))
}

/// Every rule kind on random instances: the words before and after evaluate to the same matrix.
fn rules_sound(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Tally {
    let spec = &ctx.spec;
    let rs = f4();
    let per_rule = ctx.config.samples.min(20);
    let mut t = Tally::new();
    let mut counts = [0usize; 6];
    while counts.iter().any(|&c| c < per_rule) {
        let r = rng.gen_range(0..NUM_ROOTS);
        let s = rng.gen_range(0..NUM_ROOTS);
        let x = coeff(ctx, rng, r);
        let y = coeff(ctx, rng, s);
        let u = |r, t: &QuadExtElem| Atom::Root { r, t: t.clone() };
        let mut cases: Vec<(usize, &'static str, Vec<Atom>, Result<Vec<Atom>>)> = Vec::new();
        let n = Atom::N { r: s, t: y.clone() };
        cases.push((0, "swap_n", vec![n.clone(), u(r, &x)], rules::swap_n(&n, &u(r, &x))));
        cases.push((1, "swap_past_n", vec![u(r, &x), n.clone()], rules::swap_past_n(&u(r, &x), &n)));
        let h = Atom::Hua { r: s, lambda: y.clone() };
        cases.push((2, "swap_h", vec![u(r, &x), h.clone()], rules::swap_h(&u(r, &x), &h)));
        if s != r && s != rs.neg(r) {
            cases.push((3, "swap_comm", vec![u(r, &x), u(s, &y)], rules::swap_comm(&u(r, &x), &u(s, &y))));
        }
        let z = coeff(ctx, rng, r);
        let opp = [u(r, &x), u(rs.neg(r), &z)];
        cases.push((4, "split_opposite", opp.to_vec(), rules::split_opposite(&opp[0], &opp[1])));
        let xi = x.inv().expect("nonzero sample");
        let degenerate = [u(r, &x), u(rs.neg(r), &xi)];
        cases.push((4, "split_opposite", degenerate.to_vec(), rules::split_opposite(&degenerate[0], &degenerate[1])));
        let w = coeff(ctx, rng, r);
        cases.push((5, "merge", vec![u(r, &x), u(r, &w)], rules::merge(&u(r, &x), &u(r, &w))));
        for (k, rule, before, after) in cases {
            if counts[k] >= per_rule {
                continue;
            }
            counts[k] += 1;
            t.sample();
            let res = after.and_then(|a| Ok(Word(before.clone()).eval(spec)? == Word(a).eval(spec)?));
            if let Some(ok) = t.ok(res, || format!("{rule} on {}", Word(before.clone()).display(spec))) {
                t.expect(ok, || format!("{rule} changes the value of {}", Word(before.clone()).display(spec)));
            }
        }
    }
    t.note(format!("{per_rule} instances of each rule kind"));
    t
}
