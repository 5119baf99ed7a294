use mixedf4::chevalley::*;
use mixedf4::fields::{FieldSpec, QuadExtElem, Sampler};
use mixedf4::roots::{f4, RootId, E4_POSITIVE, NUM_ROOTS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coeff(rng: &mut ChaCha8Rng, spec: &FieldSpec, r: RootId) -> QuadExtElem {
    Sampler::default().ext(rng, spec, f4().is_long(r))
}

#[test]
fn lie_algebra_is_a_lie_algebra() {
    let sc = structure_constants();
    assert_eq!(sc.antisymmetry_failures(), 0);
    assert_eq!(sc.jacobi_failures(), 0);
}

#[test]
fn action_rules_match_exponential() {
    for r in 0..NUM_ROOTS {
        assert_eq!(pattern(r), &pattern_from_exponential(r), "root {}", f4().root(r));
    }
}

#[test]
fn root_elements() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let id = identity(&spec);
    for r in [0, 5, 23, 24, 40] {
        assert_eq!(gen_u(&spec, r, &spec.zero()).unwrap(), id);
        let s = coeff(&mut rng, &spec, r);
        let t = coeff(&mut rng, &spec, r);
        let us = gen_u(&spec, r, &s).unwrap();
        let ut = gen_u(&spec, r, &t).unwrap();
        assert!(us.mul(&us).is_identity());
        assert_eq!(us.mul(&ut), gen_u(&spec, r, &s.add(&t)).unwrap());
    }
}

#[test]
fn column_of_negative_root() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let sc = structure_constants();
    let t = spec.parse("a + g").unwrap();
    for r in 0..NUM_ROOTS {
        if rs.is_long(r) {
            continue;
        }
        let u = gen_u(&spec, r, &t).unwrap();
        let nr = rs.neg(r);
        for i in 0..DIM {
            let expect = if i == nr {
                spec.one()
            } else if i == r {
                t.square()
            } else if i >= NUM_ROOTS && sc.coroot(r)[i - NUM_ROOTS] % 2 != 0 {
                t.clone()
            } else {
                spec.zero()
            };
            assert_eq!(u.get(i, nr), &expect);
        }
    }
}

#[test]
fn long_roots_reject_coefficients_outside_k() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let long = (0..NUM_ROOTS).find(|&r| rs.is_long(r)).unwrap();
    let short = (0..NUM_ROOTS).find(|&r| !rs.is_long(r)).unwrap();
    let t = spec.parse("t").unwrap();
    assert!(gen_u(&spec, long, &t).is_err());
    assert!(gen_u(&spec, short, &t).is_ok());
}

#[test]
fn weyl_and_torus_elements() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let e4 = rs.expect_id(E4_POSITIVE[0]);
    let n = gen_n(&spec, e4, &spec.one()).unwrap();
    assert!(n.mul(&n).is_identity());
    assert!(!in_parabolic_pj(&n));
    assert!(gen_n(&spec, e4, &spec.zero()).is_err());
    for r in [0, 3, 12, 30, 47] {
        assert!(gen_h(&spec, r, &spec.one()).unwrap().is_identity());
        let s = Sampler::default().ext(&mut rng, &spec, true);
        let t = Sampler::default().ext(&mut rng, &spec, true);
        let hs = gen_h(&spec, r, &s).unwrap();
        let ht = gen_h(&spec, r, &t).unwrap();
        assert_eq!(hs, torus(&spec, r, &s).unwrap());
        assert_eq!(hs.mul(&ht), gen_h(&spec, r, &s.mul(&t)).unwrap());
    }
}

#[test]
fn weyl_conjugation_permutes_root_groups() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let one = spec.one();
    for s in 0..NUM_ROOTS {
        for r in 0..NUM_ROOTS {
            let t = coeff(&mut rng, &spec, r);
            let mut m = identity(&spec);
            mul_n_right(&mut m, s, &one).unwrap();
            mul_u_right(&mut m, r, &t);
            mul_n_right(&mut m, s, &one).unwrap();
            assert_eq!(m, gen_u(&spec, rs.reflect(s, r), &t).unwrap());
        }
    }
}

#[test]
fn commutator_relations_sampled() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..150 {
        let r = rng.gen_range(0..NUM_ROOTS);
        let s = rng.gen_range(0..NUM_ROOTS);
        if s == r || s == rs.neg(r) {
            continue;
        }
        let x = coeff(&mut rng, &spec, r);
        let y = coeff(&mut rng, &spec, s);
        assert!(check_commutator(&spec, r, s, &x, &y), "{} {}", rs.root(r), rs.root(s));
    }
}

#[test]
fn commutator_factors_commute() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let x = spec.parse("a + g").unwrap();
    let y = spec.parse("d").unwrap();
    for r in 0..NUM_ROOTS {
        for s in 0..NUM_ROOTS {
            if s == r || s == rs.neg(r) || rs.is_long(r) {
                continue;
            }
            let f = commutator_factors(r, s, &x, &y);
            if f.len() == 2 {
                assert!(rs.sum(f[0].0, f[1].0).is_none());
            }
        }
    }
}

#[test]
fn subgroup_membership() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let id = identity(&spec);
    assert!(in_parabolic_pj(&id) && in_uj(&id) && in_uj_minus(&id));
    let t = spec.parse("a + b*g").unwrap();
    let r1 = rs.r_list()[0];
    let u = gen_u(&spec, r1, &t).unwrap();
    assert!(in_uj(&u) && in_parabolic_pj(&u) && !in_uj_minus(&u));
    let v = gen_u(&spec, rs.neg(r1), &t).unwrap();
    assert!(in_uj_minus(&v) && !in_uj(&v) && !in_parabolic_pj(&v));
    let levi = gen_u(&spec, rs.fundamental()[2], &spec.parse("a").unwrap()).unwrap();
    assert!(in_parabolic_pj(&levi) && !in_uj(&levi));
    let h = torus(&spec, r1, &t).unwrap();
    assert!(in_parabolic_pj(&h));
}

#[test]
fn matrix_inverse() {
    let spec = FieldSpec::default_mixed();
    let mut m = identity(&spec);
    mul_u_right(&mut m, 0, &spec.parse("a").unwrap());
    mul_u_right(&mut m, 30, &spec.parse("g").unwrap());
    mul_h_right(&mut m, 7, &spec.parse("b + g").unwrap()).unwrap();
    let inv = m.inverse().unwrap();
    assert!(m.mul(&inv).is_identity());
    let mut left = identity(&spec);
    mul_h_left(&mut left, 7, &spec.parse("b + g").unwrap()).unwrap();
    mul_u_left(&mut left, 30, &spec.parse("g").unwrap());
    mul_u_left(&mut left, 0, &spec.parse("a").unwrap());
    assert_eq!(left, m);
}
