//! Complete factorisation over the integers (Zassenhaus).
//!
//! Pipeline: split off the integer content, take the squarefree part through
//! `gcd(f, f')`, factor modulo the first admissible prime with Berlekamp,
//! Hensel-lift past a Mignotte-type coefficient bound, recombine modular
//! factors by exhaustive subset search, and recover multiplicities by
//! repeated exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::{self, ZPoly};
use super::hensel;
use super::modp::Field;

/// Irreducible factors of `f` over `Z` with multiplicities, in no particular
/// order. Degree-zero entries are the prime factors of the content.
pub(crate) fn factor_zpoly(f: &[BigInt]) -> Vec<(ZPoly, u32)> {
    let mut out = Vec::new();
    let c = dense::content(f);
    for (q, m) in factor_integer(&c) {
        out.push((vec![q], m));
    }
    let prim = dense::primitive(f);
    if prim.len() <= 1 {
        return out;
    }
    let g = dense::gcd(&prim, &dense::derivative(&prim));
    let squarefree =
        dense::primitive(&dense::div_exact(&prim, &g).expect("gcd divides its argument"));
    for q in zassenhaus(&squarefree) {
        let mut rest = prim.clone();
        let mut m = 0;
        while let Some(next) = dense::div_exact(&rest, &q) {
            rest = next;
            m += 1;
        }
        debug_assert!(m > 0);
        out.push((q, m));
    }
    out
}

/// Prime factorisation of a positive integer by trial division.
fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2u32);
    while &d * &d <= n {
        let mut m = 0;
        while n.is_multiple_of(&d) {
            n /= &d;
            m += 1;
        }
        if m > 0 {
            out.push((d.clone(), m));
        }
        d += 1u32;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// First prime not dividing the leading coefficient for which `f mod p`
/// stays squarefree.
fn admissible_prime(f: &[BigInt]) -> Field {
    (2u64..)
        .filter(|&p| is_prime(p))
        .map(Field::new)
        .find(|field| {
            field.reduce_int(dense::lc(f)) != 0 && field.is_squarefree(&field.reduce(f))
        })
        .expect("a squarefree polynomial has admissible primes")
}

/// Bound on the coefficients of `lc(f) · g` for any factor `g` of `f`.
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let l2 = norm2.sqrt() + 1u32;
    let lead = dense::lc(f).abs();
    (BigInt::one() << n) * l2 * lead
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2u32 > *m {
        r - m
    } else {
        r
    }
}

/// Irreducible factors of a primitive squarefree polynomial of positive degree.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    if f.len() <= 2 {
        return vec![dense::primitive(f)];
    }
    let field = admissible_prime(f);
    let fp = field.monic(&field.reduce(f));
    let modular = field.berlekamp(&fp);
    if modular.len() == 1 {
        return vec![dense::primitive(f)];
    }
    let bound = coefficient_bound(f) * 2u32;
    let (steps, modulus) = hensel::steps_for_bound(field.p, &bound);
    let mut lifted = hensel::multifactor_lift(f, &modular, field, steps);

    let mut found = Vec::new();
    let mut rest = f.to_vec();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let hit = Combinations::new(lifted.len(), size).find_map(|subset| {
            let lead = dense::lc(&rest).clone();
            let prod = subset.iter().fold(vec![lead], |acc, &i| {
                dense::mul(&acc, &lifted[i])
                    .iter()
                    .map(|c| c.mod_floor(&modulus))
                    .collect()
            });
            let cand = dense::primitive(&dense::trim(
                prod.iter().map(|c| symmetric(c, &modulus)).collect(),
            ));
            if cand.len() < 2 {
                return None;
            }
            dense::div_exact(&rest, &cand).map(|quot| (subset, cand, quot))
        });
        match hit {
            Some((subset, cand, quot)) => {
                found.push(cand);
                rest = quot;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if rest.len() > 1 {
        found.push(dense::primitive(&rest));
    } else {
        debug_assert!(rest.len() == 1 && rest[0].abs().is_one() || rest.iter().all(Zero::is_zero));
    }
    found
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
