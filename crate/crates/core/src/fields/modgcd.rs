//! Brown's dense modular gcd, with evaluations in GF(2⁶⁴).
//!
//! For a main variable x the gcd G of a and b is recovered from univariate gcds
//! at a grid of points for the other variables. Each image is only known up to a
//! scalar, so the images are scaled to H = γ·G/lc_x(G) with γ = gcd(lc_x a, lc_x b);
//! H has coefficients in GF(2) and G is its primitive part. The result is verified by
//! exact division, so an unlucky grid costs time, never correctness.

use super::eval::{gcd_monic, mul, splitmix, Interpolator};
use super::poly::{gcd, Monomial, Poly, MAX_VARS};

const ATTEMPTS: u64 = 3;
/// Grids larger than this are left to the subresultant algorithm.
const MAX_GRID: usize = 1 << 18;

/// A polynomial prepared for evaluation on the grid: per term, the exponent of the
/// main variable and of each grid axis.
struct Compiled {
    deg: usize,
    terms: Vec<(usize, [u16; MAX_VARS])>,
}

impl Compiled {
    fn new(p: &Poly, x: usize, others: &[usize]) -> Compiled {
        let terms = p
            .terms()
            .iter()
            .map(|&m| {
                let mut e = [0u16; MAX_VARS];
                for (j, &v) in others.iter().enumerate() {
                    e[j] = m.exp(v) as u16;
                }
                (m.exp(x) as usize, e)
            })
            .collect();
        Compiled { deg: p.degree_in(x) as usize, terms }
    }

    /// Coefficients in the main variable at the grid point whose axis powers are `pw`.
    fn eval(&self, pw: &[&[u64]]) -> Vec<u64> {
        let mut out = vec![0u64; self.deg + 1];
        for (ex, e) in &self.terms {
            let mut c = 1u64;
            for (j, p) in pw.iter().enumerate() {
                if e[j] > 0 {
                    c = mul(c, p[e[j] as usize]);
                }
            }
            out[*ex] ^= c;
        }
        out
    }
}

/// gcd(a, b) for polynomials without monomial content involving exactly `vars`,
/// given upper bounds for the degree of the gcd in each of them.
pub(super) fn modular_gcd(a: &Poly, b: &Poly, vars: &[usize], bound: &[u32]) -> Option<Poly> {
    // The main variable is the one giving the smallest grid.
    let (k, lc_gcd, dims) = (0..vars.len())
        .map(|k| {
            let x = vars[k];
            let lc = gcd(a.coeffs_in(x).last().unwrap(), b.coeffs_in(x).last().unwrap());
            let dims: Vec<usize> = (0..vars.len())
                .filter(|&i| i != k)
                .map(|i| (bound[i] + lc.degree_in(vars[i])) as usize + 1)
                .collect();
            (k, lc, dims)
        })
        .min_by_key(|(k, _, dims)| (dims.iter().product::<usize>(), std::cmp::Reverse(bound[*k])))?;
    let x = vars[k];
    let points: usize = dims.iter().product();
    if points > MAX_GRID {
        return None;
    }
    let others: Vec<usize> = vars.iter().copied().filter(|&v| v != x).collect();
    let (ca, cb) = (Compiled::new(a, x, &others), Compiled::new(b, x, &others));
    let cl = Compiled::new(&lc_gcd, x, &others);
    let max_exp: Vec<usize> = others
        .iter()
        .map(|&v| a.degree_in(v).max(b.degree_in(v)).max(lc_gcd.degree_in(v)) as usize)
        .collect();
    let mut target = bound[k] as usize;

    let mut attempt = 0;
    'grid: while attempt < ATTEMPTS {
        attempt += 1;
        let axes: Vec<Vec<u64>> = dims
            .iter()
            .enumerate()
            .map(|(j, &n)| (0..n).map(|i| splitmix((attempt << 40) ^ ((j as u64) << 32) ^ i as u64) | 1).collect())
            .collect();
        // powers[j][i][e] = axes[j][i]^e
        let powers: Vec<Vec<Vec<u64>>> = axes
            .iter()
            .zip(&max_exp)
            .map(|(axis, &d)| {
                axis.iter()
                    .map(|&p| {
                        let mut pw = vec![1u64; d + 1];
                        for e in 1..=d {
                            pw[e] = mul(pw[e - 1], p);
                        }
                        pw
                    })
                    .collect()
            })
            .collect();
        let width = target + 1;
        let mut values = vec![0u64; points * width];
        let mut idx = vec![0usize; others.len()];
        for p in 0..points {
            let pw: Vec<&[u64]> = idx.iter().enumerate().map(|(j, &i)| powers[j][i].as_slice()).collect();
            let sa = ca.eval(&pw);
            let sb = cb.eval(&pw);
            if sa[ca.deg] == 0 || sb[cb.deg] == 0 {
                continue 'grid;
            }
            let g = gcd_monic(&sa, &sb);
            match (g.len() - 1).cmp(&target) {
                std::cmp::Ordering::Greater => continue 'grid,
                std::cmp::Ordering::Less => {
                    target = g.len() - 1;
                    attempt = 0;
                    continue 'grid;
                }
                std::cmp::Ordering::Equal => {}
            }
            let scale = cl.eval(&pw)[0];
            for (i, c) in g.iter().enumerate() {
                values[p * width + i] = mul(*c, scale);
            }
            // next multi-index, last axis fastest
            for j in (0..idx.len()).rev() {
                idx[j] += 1;
                if idx[j] < dims[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
        // Interpolate along each axis in turn.
        let mut stride = width;
        for j in (0..others.len()).rev() {
            let n = dims[j];
            let interp = Interpolator::new(&axes[j]);
            let block = stride * n;
            let mut ys = vec![0u64; n];
            for base in (0..values.len()).step_by(block) {
                for off in 0..stride {
                    for (i, y) in ys.iter_mut().enumerate() {
                        *y = values[base + i * stride + off];
                    }
                    for (i, c) in interp.apply(&ys).into_iter().enumerate() {
                        values[base + i * stride + off] = c;
                    }
                }
            }
            stride = block;
        }
        if values.iter().any(|&c| c > 1) {
            continue;
        }
        let mut terms = Vec::new();
        let mut idx = vec![0usize; others.len()];
        for p in 0..points {
            for e in 0..width {
                if values[p * width + e] == 1 {
                    let mut exps = [0u32; MAX_VARS];
                    exps[x] = e as u32;
                    for (j, &v) in others.iter().enumerate() {
                        exps[v] = idx[j] as u32;
                    }
                    terms.push(Monomial::from_exps(&exps));
                }
            }
            for j in (0..idx.len()).rev() {
                idx[j] += 1;
                if idx[j] < dims[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
        let h = Poly::from_monomials(terms);
        let content = h.coeffs_in(x).iter().filter(|c| !c.is_zero()).fold(Poly::zero(), |g, c| gcd(&g, c));
        let Some(g) = h.div_exact(&content) else { continue };
        if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
            let mut c = Poly::zero();
            for coeff in a.coeffs_in(x).iter().chain(b.coeffs_in(x).iter()).filter(|c| !c.is_zero()) {
                c = gcd(&c, coeff);
                if c.is_one() {
                    break;
                }
            }
            return Some(g.mul(&c));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_poly(seed: u64, vars: usize, terms: u64, deg: u64) -> Poly {
        let ms = (0..terms).map(|i| {
            let exps: Vec<u32> = (0..MAX_VARS)
                .map(|v| if v < vars { (splitmix(seed * 1000 + i * 10 + v as u64) % (deg + 1)) as u32 } else { 0 })
                .collect();
            Monomial::from_exps(&exps)
        });
        Poly::from_monomials(ms.collect()).add(&Poly::one())
    }

    #[test]
    fn common_factor_is_recovered() {
        for seed in 0..8 {
            let c = random_poly(seed, 4, 4, 2);
            let a = random_poly(seed + 100, 4, 5, 2);
            let b = random_poly(seed + 200, 4, 5, 2);
            let g = gcd(&a.mul(&c), &b.mul(&c));
            assert_eq!(g, gcd(&a, &b).mul(&c));
        }
    }
}
