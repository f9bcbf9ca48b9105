//! Multifactor Hensel lifting from `F_p` to `Z / p^k`.
//!
//! Uses the quadratic two-factor step (each step squares the modulus) on a
//! balanced split of the modular factor list, recursing into both halves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::dense::{self, ZPoly};
use super::modp::{Field, PPoly};

/// Polynomial arithmetic modulo an integer `m`, residues in `[0, m)`.
struct ModRing<'a> {
    m: &'a BigInt,
}

impl ModRing<'_> {
    fn norm(&self, p: ZPoly) -> ZPoly {
        dense::trim(p.into_iter().map(|c| c.mod_floor(self.m)).collect())
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.norm(dense::mul(a, b))
    }

    fn add(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        self.norm(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.norm(dense::sub(a, b))
    }

    /// Division by a monic divisor.
    fn divrem_monic(&self, a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
        debug_assert!(dense::lc(b).is_one());
        if a.len() < b.len() {
            return (Vec::new(), self.norm(a.to_vec()));
        }
        let db = b.len() - 1;
        let mut rem = a.to_vec();
        let mut q = vec![BigInt::zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = rem[k + db].mod_floor(self.m);
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
            q[k] = c;
        }
        (self.norm(q), self.norm(rem))
    }
}

fn lift_ppoly(p: &[u64]) -> ZPoly {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

/// Number of quadratic steps needed so that `p^(2^steps) > bound`.
pub(crate) fn steps_for_bound(p: u64, bound: &BigInt) -> (u32, BigInt) {
    let mut m = BigInt::from(p);
    let mut steps = 0;
    while &m <= bound {
        m = &m * &m;
        steps += 1;
    }
    (steps, m)
}

/// Lifts `f ≡ lc(f) · ∏ factors (mod p)` to `f ≡ lc(f) · ∏ lifted (mod p^(2^steps))`.
///
/// `factors` must be monic, pairwise coprime modulo `p`, and `p` must not
/// divide `lc(f)`. The lifted factors are monic with residues in `[0, M)`.
pub(crate) fn multifactor_lift(
    f: &[BigInt],
    factors: &[PPoly],
    field: Field,
    steps: u32,
) -> Vec<ZPoly> {
    let p = BigInt::from(field.p);
    let modulus = (0..steps).fold(p.clone(), |m, _| &m * &m);
    lift_rec(f, factors, field, &p, steps, &modulus)
}

fn lift_rec(
    f: &[BigInt],
    factors: &[PPoly],
    field: Field,
    p: &BigInt,
    steps: u32,
    modulus: &BigInt,
) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let ring = ModRing { m: modulus };
        // f / lc(f) modulo M
        let lead = dense::lc(f).mod_floor(modulus);
        let inv = mod_inverse(&lead, modulus);
        return vec![ring.norm(dense::scale(f, &inv))];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let lead = field.reduce_int(dense::lc(f));
    let g0 = left
        .iter()
        .fold(vec![lead], |acc, u| field.mul(&acc, u));
    let h0 = right.iter().fold(vec![1u64], |acc, u| field.mul(&acc, u));
    let (gcd, s0, t0) = field.ext_gcd(&g0, &h0);
    assert_eq!(gcd, vec![1], "modular factors not coprime");
    // Normalise so that deg s < deg h and deg t < deg g.
    let (q, s0) = field.divrem(&s0, &h0);
    let t0 = field.add(&t0, &field.mul(&q, &g0));

    let mut g = lift_ppoly(&g0);
    let mut h = lift_ppoly(&h0);
    let mut s = lift_ppoly(&s0);
    let mut t = lift_ppoly(&t0);
    let mut m = p.clone();
    for _ in 0..steps {
        let m2 = &m * &m;
        let r = ModRing { m: &m2 };
        (g, h, s, t) = hensel_step(&r, f, &g, &h, &s, &t);
        m = m2;
    }
    debug_assert_eq!(&m, modulus);
    let mut out = lift_rec(&g, left, field, p, steps, modulus);
    out.extend(lift_rec(&h, right, field, p, steps, modulus));
    out
}

/// One quadratic Hensel step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` to the
/// same relations modulo `m²`, with `h` kept monic.
fn hensel_step(
    r: &ModRing,
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = r.sub(f, &r.mul(g, h));
    let (q, rem) = r.divrem_monic(&r.mul(s, &e), h);
    let g_new = r.add(&r.add(g, &r.mul(t, &e)), &r.mul(&q, g));
    let h_new = r.add(h, &rem);

    let b = r.sub(&r.add(&r.mul(s, &g_new), &r.mul(t, &h_new)), &[BigInt::one()]);
    let (c, d) = r.divrem_monic(&r.mul(s, &b), &h_new);
    let s_new = r.sub(s, &d);
    let t_new = r.sub(&r.sub(t, &r.mul(t, &b)), &r.mul(&c, &g_new));
    (g_new, h_new, s_new, t_new)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifted_product_matches_modulo_target() {
        // 3(x^2+1)(x^2-2)(x+5)
        let f = dense::mul(
            &dense::mul(&dense::from_i64(&[3, 0, 3]), &dense::from_i64(&[-2, 0, 1])),
            &dense::from_i64(&[5, 1]),
        );
        let field = Field::new(7);
        let fp = field.monic(&field.reduce(&f));
        let parts = field.berlekamp(&fp);
        let (steps, m) = steps_for_bound(7, &BigInt::from(100_000));
        let lifted = multifactor_lift(&f, &parts, field, steps);
        assert_eq!(lifted.len(), parts.len());
        let ring = ModRing { m: &m };
        let prod = lifted
            .iter()
            .fold(vec![BigInt::from(3)], |acc, u| ring.mul(&acc, u));
        assert_eq!(prod, ring.norm(f.clone()));
    }
}
