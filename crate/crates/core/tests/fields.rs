use mixedf4::fields::{FieldSpec, QuadExtElem, Sampler};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample(seed: u64, n: usize, in_k: bool) -> (FieldSpec, Vec<QuadExtElem>) {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = Sampler { max_terms: 3, max_exp: 2, ..Sampler::default() };
    let xs = (0..n).map(|_| s.ext(&mut rng, &spec, in_k)).collect();
    (spec, xs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let (_, xs) = sample(seed, 3, false);
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        prop_assert!(x.add(x).is_zero());
        prop_assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
        prop_assert_eq!(x.mul(&y.add(z)), x.mul(y).add(&x.mul(z)));
        prop_assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation_is_an_automorphism(seed in any::<u64>()) {
        let (_, xs) = sample(seed, 2, false);
        let (x, y) = (&xs[0], &xs[1]);
        prop_assert_eq!(x.mul(y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.add(y).conj(), x.conj().add(&y.conj()));
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.norm(), x.mul(&x.conj()).u().clone());
        prop_assert!(x.mul(&x.conj()).v().is_zero());
        prop_assert_eq!(x.trace(), x.add(&x.conj()).u().clone());
    }

    #[test]
    fn norm_is_multiplicative(seed in any::<u64>()) {
        let (_, xs) = sample(seed, 2, false);
        prop_assert_eq!(xs[0].mul(&xs[1]).norm(), xs[0].norm().mul(&xs[1].norm()));
    }

    #[test]
    fn k_split_is_unique(seed in any::<u64>()) {
        let (spec, xs) = sample(seed, 2, false);
        let x = xs[0].u().add(&xs[1].u().inv().unwrap_or_else(mixedf4::fields::RatFunc::one));
        let (x0, x1) = spec.split_k(&x).unwrap();
        prop_assert!(spec.in_subfield_k(&x0) && spec.in_subfield_k(&x1));
        let t = spec.var("t").unwrap();
        prop_assert_eq!(x0.add(&t.mul(&x1)), x.clone());
        prop_assert_eq!(spec.in_subfield_k(&x), x1.is_zero());
    }

    #[test]
    fn big_k_is_closed(seed in any::<u64>()) {
        let (spec, xs) = sample(seed, 2, true);
        prop_assert!(xs.iter().all(|x| spec.in_big_k(x)));
        prop_assert!(spec.in_big_k(&xs[0].mul(&xs[1])));
        prop_assert!(spec.in_big_k(&xs[0].inv().unwrap()));
        let t = spec.base(spec.var("t").unwrap());
        prop_assert!(!spec.in_big_k(&xs[0].mul(&t)));
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let (spec, xs) = sample(seed, 3, false);
        let x = xs[0].div(&xs[1]).unwrap().add(&xs[2]);
        let text = spec.format(&x);
        prop_assert_eq!(spec.parse(&text).unwrap(), x);
    }
}

#[test]
fn worked_values() {
    let spec = FieldSpec::default_mixed();
    let g = spec.gamma();
    assert_eq!(spec.format(&g.mul(&g)), "d + g");
    assert_eq!(g.conj(), spec.parse("g + 1").unwrap());
    let a = spec.parse("a*d + 1").unwrap();
    assert!(a.trace().is_zero());
    let x = spec.parse("a + b*g").unwrap();
    assert_eq!(x.norm(), spec.parse_base("a^2 + a*b + d*b^2").unwrap());
    let p = spec.parse("d*a^2*t^3 + 1").unwrap();
    assert_eq!(spec.format(&p), "d*a^2*t^3 + 1");
    assert!(spec.parse("0").unwrap().is_zero());
    assert!(spec.parse("1/0").is_err());
    assert!(spec.parse("q + 1").is_err());
    assert!(spec.parse_base("g").is_err());
}
