//! Specialisation of GF(2) polynomials into GF(2⁶⁴).
//!
//! Used to bound the degree of a gcd in each variable: if the leading
//! coefficient survives the specialisation, the specialised gcd can only be
//! larger than the image of the true gcd.

use super::poly::{Poly, MAX_VARS};

/// x⁶⁴ ≡ x⁴ + x³ + x + 1.
const REDUCTION: u64 = 0x1B;

#[cfg(target_arch = "x86_64")]
fn clmul(a: u64, b: u64) -> u128 {
    use std::sync::OnceLock;
    static HW: OnceLock<bool> = OnceLock::new();
    if *HW.get_or_init(|| is_x86_feature_detected!("pclmulqdq") && is_x86_feature_detected!("sse2")) {
        // SAFETY: the required CPU features were detected at runtime.
        unsafe { clmul_hw(a, b) }
    } else {
        clmul_soft(a, b)
    }
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq,sse2")]
unsafe fn clmul_hw(a: u64, b: u64) -> u128 {
    use std::arch::x86_64::*;
    let r = _mm_clmulepi64_si128(_mm_set_epi64x(0, a as i64), _mm_set_epi64x(0, b as i64), 0);
    let lo = _mm_cvtsi128_si64(r) as u64;
    let hi = _mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)) as u64;
    ((hi as u128) << 64) | lo as u128
}

#[cfg(not(target_arch = "x86_64"))]
fn clmul(a: u64, b: u64) -> u128 {
    clmul_soft(a, b)
}

fn clmul_soft(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut b = b;
    let mut r = 0u128;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    r
}

fn reduce(r: u128) -> u64 {
    let hi = (r >> 64) as u64;
    let lo = r as u64;
    let t = clmul(hi, REDUCTION);
    let t_hi = (t >> 64) as u64;
    lo ^ (t as u64) ^ (clmul(t_hi, REDUCTION) as u64)
}

pub fn mul(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    reduce(clmul(a, b))
}

pub fn inv(a: u64) -> u64 {
    assert!(a != 0);
    // a^(2⁶⁴ − 2)
    let mut result = 1u64;
    let mut base = a;
    for _ in 1..64 {
        base = mul(base, base);
        result = mul(result, base);
    }
    result
}

pub fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Fixed evaluation points; correctness never depends on them, only speed.
pub fn point(round: u64) -> [u64; MAX_VARS] {
    std::array::from_fn(|v| splitmix(round * 31 + v as u64 + 1) | 1)
}

/// Coefficients (ascending) of `p` in variable `x` with every other variable specialised.
pub fn specialise(p: &Poly, x: usize, pt: &[u64; MAX_VARS]) -> Vec<u64> {
    let mut powers: Vec<Vec<u64>> = (0..MAX_VARS)
        .map(|v| {
            let d = if v == x { 0 } else { p.degree_in(v) as usize };
            let mut pw = Vec::with_capacity(d + 1);
            pw.push(1u64);
            for i in 0..d {
                pw.push(mul(pw[i], pt[v]));
            }
            pw
        })
        .collect();
    powers[x] = vec![1];
    let mut out = vec![0u64; p.degree_in(x) as usize + 1];
    for &m in p.terms() {
        let mut c = 1u64;
        for (v, pw) in powers.iter().enumerate() {
            if v != x {
                c = mul(c, pw[m.exp(v) as usize]);
            }
        }
        out[m.exp(x) as usize] ^= c;
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Monic gcd of two univariate polynomials over GF(2⁶⁴) (ascending coefficients);
/// empty when both are zero.
pub fn gcd_monic(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb_inv = inv(*b.last().unwrap());
        while a.len() >= b.len() {
            let c = mul(*a.last().unwrap(), lb_inv);
            let s = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[j + s] ^= mul(c, bj);
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        let li = inv(l);
        for c in a.iter_mut() {
            *c = mul(*c, li);
        }
    }
    a
}

/// Whether `f` divides `a` as univariate polynomials (ascending coefficients); `f` nonzero.
pub fn divides_univariate(f: &[u64], a: &[u64]) -> bool {
    let mut f = f.to_vec();
    let mut a = a.to_vec();
    trim(&mut f);
    trim(&mut a);
    let lf_inv = inv(*f.last().expect("nonzero divisor"));
    while a.len() >= f.len() {
        let c = mul(*a.last().unwrap(), lf_inv);
        let s = a.len() - f.len();
        for (j, &fj) in f.iter().enumerate() {
            a[j + s] ^= mul(c, fj);
        }
        trim(&mut a);
    }
    a.is_empty()
}

/// Degree of the gcd of two univariate polynomials over GF(2⁶⁴).
pub fn gcd_degree(a: &[u64], b: &[u64]) -> usize {
    gcd_monic(a, b).len().saturating_sub(1)
}

/// Interpolation at fixed nodes; the inverses of the node differences are shared
/// between all calls.
pub struct Interpolator {
    xs: Vec<u64>,
    /// inv(xs[i] − xs[i − j]) at index j·n + i.
    inv_diff: Vec<u64>,
}

impl Interpolator {
    pub fn new(xs: &[u64]) -> Interpolator {
        let n = xs.len();
        let mut inv_diff = vec![0u64; n * n];
        for j in 1..n {
            for i in j..n {
                inv_diff[j * n + i] = inv(xs[i] ^ xs[i - j]);
            }
        }
        Interpolator { xs: xs.to_vec(), inv_diff }
    }

    /// Coefficients, lowest first, of the polynomial of degree < n through (xs[i], ys[i]).
    pub fn apply(&self, ys: &[u64]) -> Vec<u64> {
        let (xs, n) = (&self.xs, self.xs.len());
        // Newton divided differences.
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = mul(dd[i] ^ dd[i - 1], self.inv_diff[j * n + i]);
            }
        }
        // Horner expansion of Σ dd[j]·Π_{i<j}(x − xs[i]).
        let mut c = vec![0u64; n];
        for j in (0..n).rev() {
            for k in (1..n).rev() {
                c[k] = c[k - 1] ^ mul(c[k], xs[j]);
            }
            c[0] = mul(c[0], xs[j]) ^ dd[j];
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn evaluate_univariate(p: &[u64], x: u64) -> u64 {
        p.iter().rev().fold(0, |acc, &c| mul(acc, x) ^ c)
    }

    #[test]
    fn field_inverse() {
        for a in [1u64, 2, 3, 0xDEAD_BEEF, u64::MAX] {
            assert_eq!(mul(a, inv(a)), 1);
        }
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let coeffs = [5u64, 0, 7, 1];
        let xs: Vec<u64> = (1..=4).map(|i| splitmix(i)).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| evaluate_univariate(&coeffs, x)).collect();
        assert_eq!(Interpolator::new(&xs).apply(&ys), coeffs);
    }

    #[test]
    fn hardware_and_software_products_agree() {
        let mut x = 0x0123_4567_89AB_CDEFu64;
        for _ in 0..100 {
            let y = splitmix(x);
            assert_eq!(clmul(x, y), clmul_soft(x, y));
            x = y;
        }
    }

    #[test]
    fn multiplication_is_associative() {
        let (a, b, c) = (0x1234_5678_9ABC_DEF0, 0x0FED_CBA9_8765_4321, 0xFFFF_0000_FFFF_0001);
        assert_eq!(mul(mul(a, b), c), mul(a, mul(b, c)));
    }
}
