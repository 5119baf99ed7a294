use mixedf4::chevalley::in_uj_minus;
use mixedf4::fields::{FieldSpec, Mode, Sampler};
use mixedf4::involution::CoeffTable;
use mixedf4::moufang::*;
use mixedf4::rewrite::{self, e4, Atom, RewriteOptions, Stratum, U1Elem, Word};
use mixedf4::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn octonion(rng: &mut ChaCha8Rng, spec: &FieldSpec) -> Octonion {
    Octonion(std::array::from_fn(|_| Sampler::default().ext_or_zero(rng, spec, false, 0.25)))
}

fn nonzero_octonion(rng: &mut ChaCha8Rng, spec: &FieldSpec) -> Octonion {
    loop {
        let x = octonion(rng, spec);
        if !x.is_zero() {
            return x;
        }
    }
}

fn element(rng: &mut ChaCha8Rng, spec: &FieldSpec, sampler: &Sampler) -> UElem {
    let stratum = Stratum::ALL[rng.gen_range(0..Stratum::ALL.len())];
    UElem::from_u1(&U1Elem::sample(rng, spec, sampler, stratum))
}

#[test]
fn octonion_product() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let one = Octonion::one(&spec);
    for _ in 0..100 {
        let x = octonion(&mut rng, &spec);
        let y = octonion(&mut rng, &spec);
        assert_eq!(one.mul(&y, &spec), y);
        assert_eq!(y.mul(&one, &spec), y);
        assert_eq!(x.mul(&x.conj(), &spec), Octonion::scalar(&spec, x.norm(&spec)));
        assert_eq!(x.mul(&y, &spec).norm(&spec), x.norm(&spec).mul(&y.norm(&spec)));
    }
}

#[test]
fn octonion_inverse() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let one = Octonion::one(&spec);
    assert_eq!(one.inv(&spec).unwrap(), one);
    let g = Octonion::scalar(&spec, spec.gamma());
    assert_eq!(g.inv(&spec).unwrap(), Octonion::scalar(&spec, spec.parse("(g + 1)/d").unwrap()));
    assert!(matches!(Octonion::zero(&spec).inv(&spec), Err(Error::DivisionByZero)));
    for _ in 0..100 {
        let x = nonzero_octonion(&mut rng, &spec);
        let xi = x.inv(&spec).unwrap();
        assert_eq!(x.mul(&xi, &spec), one);
        assert_eq!(xi.mul(&x, &spec), one);
    }
}

#[test]
fn isotropic_vectors_are_reported() {
    // With α = 1 the vector (1, 1, 0, 0) has norm 1 + α = 0.
    let spec = FieldSpec::new(&["d", "b"], Mode::Algebraic, None, "d", "1", "b").unwrap();
    let mut x = Octonion::one(&spec);
    x.0[1] = spec.one();
    assert!(x.norm(&spec).is_zero());
    assert!(matches!(x.inv(&spec), Err(Error::IsotropicVector)));
}

#[test]
fn f_and_g() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    assert!(f(&spec, &Octonion::zero(&spec)).is_zero());
    for _ in 0..100 {
        let a = octonion(&mut rng, &spec);
        assert_eq!(f(&spec, &a).0[0], a.norm(&spec));
        assert!(g(&spec, &a, &a).trace().is_zero());
    }
    let mut a = Octonion::zero(&spec);
    a.0[3] = spec.gamma();
    let mut c = Octonion::zero(&spec);
    c.0[3] = spec.one();
    assert_eq!(g(&spec, &a, &c), spec.parse("a*b*g").unwrap());
}

#[test]
fn group_law() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let zero = UElem::zero(&spec);
    for _ in 0..100 {
        let p = element(&mut rng, &spec, &Sampler::default());
        let q = element(&mut rng, &spec, &Sampler::default());
        let r = element(&mut rng, &spec, &Sampler::default());
        assert_eq!(p.add(&zero, &spec), p);
        assert_eq!(zero.add(&p, &spec), p);
        assert!(p.add(&p.neg(&spec), &spec).is_zero());
        assert!(p.neg(&spec).add(&p, &spec).is_zero());
        let pq = p.add(&q, &spec);
        pq.validate(&spec).unwrap();
        assert_eq!(pq.add(&r, &spec), p.add(&q.add(&r, &spec), &spec));
    }
}

#[test]
fn group_law_matches_u1_words() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..20 {
        let p = element(&mut rng, &spec, &Sampler::default());
        let q = element(&mut rng, &spec, &Sampler::default());
        let mut m = p.to_u1().canonical_word(&spec).unwrap().eval(&spec).unwrap();
        q.to_u1().canonical_word(&spec).unwrap().mul_right(&mut m).unwrap();
        let sum = p.add(&q, &spec).to_u1().canonical_word(&spec).unwrap().eval(&spec).unwrap();
        assert_eq!(sum, m);
    }
}

#[test]
fn identification_round_trip() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..50 {
        let u = U1Elem::sample(&mut rng, &spec, &Sampler::default(), Stratum::Generic);
        let p = UElem::from_u1(&u);
        assert_eq!(p.to_u1(), u);
        p.validate(&spec).unwrap();
        assert_eq!(UElem::from_json(&spec, &p.to_json(&spec)).unwrap(), p);
    }
}

#[test]
fn tau_is_an_involution() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    assert!(matches!(UElem::zero(&spec).tau(&spec), Err(Error::IdentityInput)));
    for _ in 0..100 {
        let p = element(&mut rng, &spec, &Sampler::default());
        let t = p.tau(&spec).unwrap();
        t.validate(&spec).unwrap();
        assert_eq!(t.tau(&spec).unwrap(), p);
    }
}

#[test]
fn tau_matches_the_rewriter() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(28);
    for stratum in Stratum::ALL {
        for _ in 0..4 {
            let u = U1Elem::sample(&mut rng, &spec, &Sampler::sparse_constants(), stratum);
            let closed = UElem::from_u1(&u).tau(&spec).unwrap();
            let nf = rewrite::tau_normal_form(&spec, &u, RewriteOptions::default()).unwrap();
            assert_eq!(UElem::from_u1(&nf.uprime), closed, "{stratum:?}");
        }
    }
}

#[test]
fn conjugates_by_n_lie_in_the_opposite_group() {
    let spec = FieldSpec::default_mixed();
    let table = CoeffTable::compute(&spec);
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for stratum in Stratum::ALL {
        let u = U1Elem::sample(&mut rng, &spec, &Sampler::default(), stratum);
        let n = Atom::N { r: e4(), t: spec.one() };
        let mut w = Word(vec![n.clone()]);
        w = w.concat(&u.canonical_word(&spec).unwrap());
        w.push(n);
        let m = w.eval(&spec).unwrap();
        assert!(in_uj_minus(&m));
        assert_eq!(table.sigma_word(&w).eval(&spec).unwrap(), m);
    }
}

#[test]
fn algebraic_reduction() {
    let spec = FieldSpec::default_algebraic();
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let zero = UElem::zero(&spec);
    assert!(zero.phi(&spec).unwrap().is_zero());
    for _ in 0..100 {
        let p = element(&mut rng, &spec, &Sampler::default());
        let q = element(&mut rng, &spec, &Sampler::default());
        let lhs = p.add(&q, &spec).phi(&spec).unwrap();
        let rhs = p.phi(&spec).unwrap().tilde_add(&q.phi(&spec).unwrap(), &spec).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = p.tau(&spec).unwrap().phi(&spec).unwrap();
        assert_eq!(lhs, p.phi(&spec).unwrap().tilde_tau(&spec).unwrap());
    }
}

#[test]
fn algebraic_maps_need_algebraic_mode() {
    let spec = FieldSpec::default_mixed();
    let p = UElem::zero(&spec);
    assert!(matches!(p.phi(&spec), Err(Error::ModeError)));
    assert!(matches!(p.tilde_add(&p, &spec), Err(Error::ModeError)));
    assert!(matches!(p.tilde_tau(&spec), Err(Error::ModeError)));
}
