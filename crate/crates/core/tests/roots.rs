use mixedf4::roots::{f4, Root, E4_POSITIVE, FUNDAMENTAL, NUM_ROOTS};
use mixedf4::Error;

#[test]
fn text_round_trip() {
    let rs = f4();
    for &r in rs.roots() {
        assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
    }
    assert_eq!("(0, 0, 2, 0)".parse::<Root>().unwrap(), FUNDAMENTAL[1]);
    assert!(matches!("(1,0,0,0)".parse::<Root>(), Err(Error::NotARoot(_))));
    assert!(matches!("(1,0)".parse::<Root>(), Err(Error::Parse(_))));
}

#[test]
fn sums_and_reflections_stay_in_the_system() {
    let rs = f4();
    for r in 0..NUM_ROOTS {
        for s in 0..NUM_ROOTS {
            let sum = rs.root(r).plus(rs.root(s));
            if s != rs.neg(r) {
                assert_eq!(rs.sum(r, s), rs.id(sum));
            }
            assert!(rs.id(rs.root(r).reflect(rs.root(s))).is_some());
        }
    }
}

#[test]
fn sigma() {
    let rs = f4();
    for r in 0..NUM_ROOTS {
        assert_eq!(rs.sigma(rs.sigma(r)), r);
        if rs.is_positive(r) && rs.in_phi_j(r) {
            assert!(!rs.is_positive(rs.sigma(r)));
        }
        if rs.is_positive(r) && !rs.in_phi_j(r) {
            assert!(rs.is_positive(rs.sigma(r)) && !rs.in_phi_j(rs.sigma(r)));
        }
    }
}

#[test]
fn short_plus_long() {
    let rs = f4();
    for r in (0..NUM_ROOTS).filter(|&r| !rs.is_long(r)) {
        for s in (0..NUM_ROOTS).filter(|&s| rs.is_long(s)) {
            if let Some(x) = rs.sum(r, s) {
                assert!(!rs.is_long(x));
                assert!(rs.sum(r, x).is_some_and(|y| rs.is_long(y)));
            }
        }
    }
}

#[test]
fn u1_roots() {
    let rs = f4();
    let rl = rs.r_list();
    for (k, &r) in rl.iter().enumerate() {
        assert_eq!(rs.root(r), E4_POSITIVE[k]);
        assert_eq!(rs.r_position(r), Some(k));
        assert_eq!(rs.is_long(r), (1..7).contains(&k));
    }
    assert!(rs.verify_lemma_long());
}
