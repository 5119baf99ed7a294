use mixedf4::roots::{f4, NUM_POSITIVE, NUM_ROOTS};
use rand_chacha::ChaCha8Rng;

use super::{Check, Ctx, Kind, Tally};
use crate::config::Suite;

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check { name, suite: Suite::Roots, kind: Kind::Table, run };
    vec![
        c("roots.lemma_long", lemma_long),
        c("roots.closure", closure),
        c("roots.sigma_action", sigma_action),
        c("roots.long_short_sums", long_short_sums),
        c("roots.u1_list", u1_list),
    ]
}

fn lemma_long(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let mut t = Tally::new();
    for r in (0..NUM_ROOTS).filter(|&r| rs.is_long(r)) {
        t.sample();
        let e = rs.expansion(r);
        t.expect(e[0] % 2 == 0 && e[1] % 2 == 0, || format!("{} has expansion {e:?}", rs.root(r)));
    }
    t.expect(rs.verify_lemma_long(), || "verify_lemma_long".into());
    t.note("24 long roots, every short-fundamental coefficient even");
    t
}

fn closure(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let mut t = Tally::new();
    t.expect(rs.roots().len() == NUM_ROOTS, || "root count".into());
    t.expect((0..NUM_ROOTS).filter(|&r| rs.is_positive(r)).count() == NUM_POSITIVE, || "positive count".into());
    t.expect((0..NUM_ROOTS).filter(|&r| rs.is_long(r)).count() == 24, || "long count".into());
    for r in 0..NUM_ROOTS {
        for s in 0..NUM_ROOTS {
            t.sample();
            if s == rs.neg(r) {
                continue;
            }
            let sum = rs.root(r).plus(rs.root(s));
            t.expect(rs.sum(r, s) == rs.id(sum), || format!("{} + {}", rs.root(r), rs.root(s)));
        }
        let mut image: Vec<usize> = (0..NUM_ROOTS).map(|s| rs.reflect(r, s)).collect();
        image.sort();
        image.dedup();
        t.expect(image.len() == NUM_ROOTS, || format!("reflection in {} is not a permutation", rs.root(r)));
    }
    t
}

fn sigma_action(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let mut t = Tally::new();
    for r in 0..NUM_ROOTS {
        t.sample();
        let s = rs.sigma(r);
        t.expect(rs.sigma(s) == r, || format!("σ² ≠ id at {}", rs.root(r)));
        if rs.is_positive(r) {
            let ok = if rs.in_phi_j(r) { rs.in_phi_j(s) && !rs.is_positive(s) } else { !rs.in_phi_j(s) && rs.is_positive(s) };
            t.expect(ok, || format!("σ({}) = {}", rs.root(r), rs.root(s)));
        }
    }
    t
}

/// For short r and long s with r + s ∈ Φ, r + s is short and 2r + s is a long root.
fn long_short_sums(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let mut t = Tally::new();
    for r in (0..NUM_ROOTS).filter(|&r| !rs.is_long(r)) {
        for s in (0..NUM_ROOTS).filter(|&s| rs.is_long(s)) {
            let Some(rs_sum) = rs.sum(r, s) else { continue };
            t.sample();
            let twice = rs.sum(r, rs_sum);
            t.expect(!rs.is_long(rs_sum) && twice.is_some_and(|x| rs.is_long(x)), || {
                format!("{} + {}", rs.root(r), rs.root(s))
            });
        }
    }
    t
}

fn u1_list(_: &Ctx, _: &mut ChaCha8Rng) -> Tally {
    let rs = f4();
    let rl = rs.r_list();
    let mut t = Tally::new();
    t.add_samples(rl.len());
    for (k, &r) in rl.iter().enumerate() {
        t.expect(rs.e4_height(r) > 0, || format!("r{} has e4-height {}", k + 1, rs.e4_height(r)));
        // r₁ = e₄ and the half roots are short.
        t.expect(rs.is_long(r) == (1..7).contains(&k), || format!("r{} length", k + 1));
    }
    for k in 0..7 {
        let partner = match k {
            0 => 0,
            k if k % 2 == 1 => k + 1,
            k => k - 1,
        };
        t.expect(rs.sigma(rl[k]) == rl[partner], || format!("σ(r{})", k + 1));
    }
    for (a, b) in [(7, 8), (9, 10), (11, 12), (13, 14)] {
        t.expect(rs.sigma(rl[a]) == rl[b], || format!("σ(r{}) ≠ r{}", a + 1, b + 1));
    }
    t
}
