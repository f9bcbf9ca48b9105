//! Polynomials over a small prime field `F_p` and Berlekamp factorisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Dense polynomial over `F_p`, lowest degree first, trimmed.
pub(crate) type PPoly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p));
        Field { p }
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn reduce(&self, f: &[BigInt]) -> PPoly {
        trim(f.iter().map(|c| self.reduce_int(c)).collect())
    }

    fn mul_s(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn sub_s(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_s(r, a);
            }
            a = self.mul_s(a, a);
            e >>= 1;
        }
        r
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| self.sub_s(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
                .collect(),
        )
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PPoly {
        trim(a.iter().map(|&x| self.mul_s(x, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> PPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (PPoly, PPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = b.len() - 1;
        let inv = self.inv(*b.last().unwrap());
        let mut rem = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul_s(rem[k + db], inv);
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] = self.sub_s(rem[k + j], self.mul_s(c, bj));
            }
            q[k] = c;
        }
        (trim(q), trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PPoly {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (PPoly, PPoly, PPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let l = self.inv(*r0.last().expect("ext_gcd of two zero polynomials"));
        (self.scale(&r0, l), self.scale(&s0, l), self.scale(&t0, l))
    }

    pub fn derivative(&self, a: &[u64]) -> PPoly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul_s(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        if d.is_empty() {
            return a.len() <= 1;
        }
        self.gcd(a, &d).len() == 1
    }

    /// `x^e mod f` for polynomial base.
    fn powmod(&self, base: &[u64], mut e: u64, f: &[u64]) -> PPoly {
        let mut result = vec![1u64];
        let mut b = self.rem(base, f);
        while e > 0 {
            if e & 1 == 1 {
                result = self.rem(&self.mul(&result, &b), f);
            }
            b = self.rem(&self.mul(&b, &b), f);
            e >>= 1;
        }
        result
    }

    /// Complete factorisation of a monic squarefree polynomial into monic
    /// irreducibles (Berlekamp). Output order is deterministic.
    pub fn berlekamp(&self, f: &[u64]) -> Vec<PPoly> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        // Rows of Q: x^(i·p) mod f.
        let xp = self.powmod(&[0, 1], self.p, f);
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = self.rem(&self.mul(&cur, &xp), f);
        }
        // Solve v·(Q - I) = 0, i.e. (Q - I)^T v = 0.
        let mut a = vec![vec![0u64; n]; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &q) in row.iter().enumerate() {
                let entry = if i == j { self.sub_s(q, 1) } else { q };
                a[j][i] = entry;
            }
        }
        let basis = self.nullspace(a, n);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        if r == 1 {
            return factors;
        }
        for v in basis.iter().skip(1) {
            let v = trim(v.clone());
            let mut next = Vec::new();
            for u in factors {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let mut pending = u;
                for s in 0..self.p {
                    if pending.len() <= 2 {
                        break;
                    }
                    let g = self.gcd(&pending, &self.sub(&v, &[s]));
                    if g.len() > 1 && g.len() < pending.len() {
                        pending = self.divrem(&pending, &g).0;
                        next.push(g);
                    }
                }
                next.push(pending);
            }
            factors = next;
            if factors.len() == r {
                break;
            }
        }
        debug_assert_eq!(factors.len(), r);
        factors.sort();
        factors
    }

    fn nullspace(&self, mut a: Vec<Vec<u64>>, n: usize) -> Vec<Vec<u64>> {
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(piv) = (row..n).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, piv);
            let inv = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = self.mul_s(*x, inv);
            }
            for r in 0..n {
                if r != row && a[r][col] != 0 {
                    let c = a[r][col];
                    for k in 0..n {
                        let sub = self.mul_s(c, a[row][k]);
                        a[r][k] = self.sub_s(a[r][k], sub);
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        // Column 0 of (Q - I)^T is zero, so the first basis vector is the
        // constant polynomial 1.
        (0..n)
            .filter(|c| !pivot_cols.contains(c))
            .map(|fc| {
                let mut v = vec![0u64; n];
                v[fc] = 1;
                for (pr, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = self.sub_s(0, a[pr][fc]);
                }
                v
            })
            .collect()
    }
}

pub(crate) fn trim(mut p: PPoly) -> PPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(field: &Field, fs: &[PPoly]) -> PPoly {
        fs.iter().fold(vec![1], |acc, f| field.mul(&acc, f))
    }

    #[test]
    fn berlekamp_splits_into_irreducibles() {
        let f5 = Field::new(5);
        // (x+1)(x+2)(x^2+2) over F_5; x^2+2 has no roots mod 5.
        let parts = vec![vec![1, 1], vec![2, 1], vec![2, 0, 1]];
        let f = product(&f5, &parts);
        let mut got = f5.berlekamp(&f);
        got.sort();
        let mut want = parts.clone();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn berlekamp_over_two() {
        let f2 = Field::new(2);
        // x^4 + x + 1 is irreducible over F_2
        assert_eq!(f2.berlekamp(&[1, 1, 0, 0, 1]).len(), 1);
        // x^2 + x = x(x+1)
        assert_eq!(f2.berlekamp(&[0, 1, 1]).len(), 2);
    }

    #[test]
    fn ext_gcd_bezout() {
        let f7 = Field::new(7);
        let a = vec![1, 0, 1];
        let b = vec![3, 1];
        let (g, s, t) = f7.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(f7.add(&f7.mul(&s, &a), &f7.mul(&t, &b)), vec![1]);
    }
}
