use mixedf4::chevalley::Matrix;
use mixedf4::fields::{FieldSpec, QuadExtElem, Sampler};
use mixedf4::involution::*;
use mixedf4::rewrite::{Atom, Word};
use mixedf4::roots::{f4, RootId, NUM_ROOTS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn b3_roots() -> Vec<RootId> {
    (0..NUM_ROOTS).filter(|&r| f4().in_phi_j(r)).collect()
}

fn coeff(rng: &mut ChaCha8Rng, spec: &FieldSpec, r: RootId) -> QuadExtElem {
    Sampler::default().ext(rng, spec, f4().is_long(r))
}

#[test]
fn coefficients_of_the_u1_roots() {
    let spec = FieldSpec::default_mixed();
    let table = CoeffTable::compute(&spec);
    let expect = [
        "1", "a", "1/a", "b", "1/b", "a*b", "1/(a*b)", "1", "1", "a", "1/a", "b", "1/b", "1/(a*b)", "a*b",
    ];
    for (k, &r) in f4().r_list().iter().enumerate() {
        assert_eq!(table.get(r), &spec.parse(expect[k]).unwrap(), "c of r{}", k + 1);
    }
    let [a1, a2, a3, a4] = f4().fundamental();
    assert_eq!(table.get(a1), &spec.parse("1/(a*b)").unwrap());
    assert_eq!(table.get(a2), &spec.parse("a*b").unwrap());
    assert_eq!(table.get(a3), &spec.parse("1/a").unwrap());
    assert_eq!(table.get(a4), &spec.parse("a/b").unwrap());
}

#[test]
fn coefficient_table_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut specs = vec![FieldSpec::default_mixed(), FieldSpec::default_algebraic()];
    for _ in 0..20 {
        let s = FieldSpec::default_mixed();
        let a = Sampler::default().nonzero_poly(&mut rng, &s, true);
        let b = Sampler::default().nonzero_poly(&mut rng, &s, true);
        let names = s.names().iter().map(String::as_str).collect::<Vec<_>>();
        let fmt = |p: mixedf4::fields::Poly| p.fmt_with(s.names());
        specs.push(
            FieldSpec::new(&names, s.mode(), Some("t"), "d", &fmt(a), &fmt(b)).unwrap(),
        );
    }
    for spec in &specs {
        let table = CoeffTable::compute(spec);
        assert!(table.involution_failures().is_empty());
        assert!(table.commutator_failures().is_empty());
    }
}

#[test]
fn sigma_on_words() {
    let spec = FieldSpec::default_mixed();
    let table = CoeffTable::compute(&spec);
    let rs = f4();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    assert!(table.sigma_word(&Word::new()).is_empty());
    let a2 = rs.fundamental()[1];
    let t = spec.parse("d + g").unwrap();
    let img = table.sigma_atom(&Atom::Root { r: a2, t: t.clone() });
    assert_eq!(img, Atom::Root { r: rs.neg(a2), t: spec.parse("a*b").unwrap().mul(&t.conj()) });
    for _ in 0..10 {
        let w: Word = (0..4)
            .map(|k| {
                let r = rng.gen_range(0..NUM_ROOTS);
                let t = coeff(&mut rng, &spec, r);
                match k % 3 {
                    0 => Atom::Root { r, t },
                    1 if !t.is_zero() => Atom::N { r, t },
                    _ if !t.is_zero() => Atom::Hua { r, lambda: t },
                    _ => Atom::Root { r, t },
                }
            })
            .collect();
        let back = table.sigma_word(&table.sigma_word(&w));
        assert_eq!(back.eval(&spec).unwrap(), w.eval(&spec).unwrap());
    }
}

#[test]
fn b3_generators_preserve_r() {
    let spec = FieldSpec::default_mixed();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    assert!(preserves_r(&spec, &Matrix::identity(7, spec.tower())));
    for r in b3_roots() {
        assert!(b3_generator(&spec, r, &spec.zero()).unwrap().is_identity());
        for _ in 0..3 {
            let t = coeff(&mut rng, &spec, r);
            assert!(preserves_r(&spec, &b3_generator(&spec, r, &t).unwrap()));
        }
    }
    let mut lone = Matrix::identity(7, spec.tower());
    lone.set(b3_pos(1), b3_pos(2), spec.one());
    assert!(!preserves_r(&spec, &lone));
}

#[test]
fn b3_generator_shapes() {
    let spec = FieldSpec::default_mixed();
    let rs = f4();
    let lam = spec.parse("a + g").unwrap();
    let e1_minus_e2 = rs.fundamental()[3];
    let m = b3_generator(&spec, e1_minus_e2, &spec.parse("a").unwrap()).unwrap();
    let mut expect = Matrix::identity(7, spec.tower());
    expect.set(b3_pos(1), b3_pos(2), spec.parse("a").unwrap());
    expect.set(b3_pos(-2), b3_pos(-1), spec.parse("a").unwrap());
    assert_eq!(m, expect);
    let e2 = rs.expect_id("(0,2,0,0)".parse().unwrap());
    let m = b3_generator(&spec, e2, &lam).unwrap();
    let col = b3_pos(-2);
    for i in 0..7 {
        let want = if i == col {
            spec.one()
        } else if i == 0 {
            lam.clone()
        } else if i == b3_pos(2) {
            lam.square()
        } else {
            spec.zero()
        };
        assert_eq!(m.get(i, col), &want);
    }
    assert!(b3_generator(&spec, rs.r_list()[0], &lam).is_err());
}

#[test]
fn m_is_recomputed_from_s() {
    for spec in [FieldSpec::default_mixed(), FieldSpec::default_algebraic()] {
        assert_eq!(m_from_s(&spec).unwrap(), m_matrix(&spec));
    }
}

#[test]
fn sigma_b3_matches_sigma_word() {
    let spec = FieldSpec::default_mixed();
    let table = CoeffTable::compute(&spec);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for r in b3_roots() {
        for _ in 0..5 {
            let t = coeff(&mut rng, &spec, r);
            let w = Word(vec![Atom::Root { r, t }]);
            let direct = sigma_b3(&spec, &b3_matrix_of_word(&spec, &w).unwrap()).unwrap();
            let via_word = b3_matrix_of_word(&spec, &table.sigma_word(&w)).unwrap();
            assert!(projectively_equal(&direct, &via_word), "root {}", f4().root(r));
            let twice = sigma_b3(&spec, &direct).unwrap();
            assert!(projectively_equal(&twice, &b3_matrix_of_word(&spec, &w).unwrap()));
        }
    }
    let a3 = f4().fundamental()[2];
    let t = spec.parse("d*a").unwrap();
    let img = sigma_b3(&spec, &b3_generator(&spec, a3, &t).unwrap()).unwrap();
    let expect = b3_generator(&spec, f4().neg(a3), &spec.parse("d").unwrap()).unwrap();
    assert_eq!(img, expect);
}

#[test]
fn flags() {
    let spec = FieldSpec::default_mixed();
    let table = CoeffTable::compute(&spec);
    let rs = f4();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for r in b3_roots().into_iter().filter(|&r| rs.is_positive(r)) {
        let t = coeff(&mut rng, &spec, r);
        let w = Word(vec![Atom::Root { r, t }]);
        let m = b3_matrix_of_word(&spec, &w).unwrap();
        assert!(stabilises_flag(&m, 1));
        let s = b3_matrix_of_word(&spec, &table.sigma_word(&w)).unwrap();
        assert!(stabilises_flag(&s, -1));
        assert_eq!(s, sigma_b3(&spec, &m).unwrap());
    }
}
