//! Small finite fields `F_{p^k}` (`p <= 7`, `k <= 3`) with table-driven
//! arithmetic.
//!
//! Elements are encoded as residue polynomials over the prime field in
//! base-`p` digits; the defining polynomials are Conway-compatible
//! primitive polynomials shipped as repository data, so that
//! `x_small -> x_big^{(p^{km}-1)/(p^k-1)}` embeds `F_{p^k}` into
//! `F_{p^{km}}` norm-compatibly.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Defining polynomials, low coefficient first, leading 1 included.
/// Part of the repository data: Conway polynomials for p in {2,3,5,7},
/// k in {1,2,3}.
pub const POLY_TABLE: &[(u16, u8, &[u16])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
];

/// A finite field with precomputed operation tables.
pub struct Field {
    pub p: u16,
    pub k: u8,
    pub q: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
}

fn factor_prime_power(q: u32) -> Result<(u16, u8)> {
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        if q % p == 0 {
            let mut k = 0u8;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            if m == 1 {
                return Ok((p as u16, k));
            }
            return Err(Error::UnsupportedField);
        }
    }
    Err(Error::UnsupportedField)
}

impl Field {
    /// Builds `F_q` from the polynomial table.
    pub fn new(q: u32) -> Result<Field> {
        let (p, k) = factor_prime_power(q)?;
        let poly = POLY_TABLE
            .iter()
            .find(|&&(tp, tk, _)| tp == p && tk == k)
            .map(|&(_, _, c)| c)
            .ok_or(Error::UnsupportedField)?;
        Ok(Field::from_poly(p, k, poly))
    }

    fn from_poly(p: u16, k: u8, poly: &[u16]) -> Field {
        let q = (p as u32).pow(k as u32);
        let qs = q as usize;
        let digits = |mut e: u32| -> Vec<u16> {
            let mut d = vec![0u16; k as usize];
            for di in d.iter_mut() {
                *di = (e % p as u32) as u16;
                e /= p as u32;
            }
            d
        };
        let undigits = |d: &[u16]| -> u32 {
            let mut e = 0u32;
            for &c in d.iter().rev() {
                e = e * p as u32 + c as u32;
            }
            e
        };
        let mut add = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        for a in 0..q {
            let da = digits(a);
            neg[a as usize] = undigits(
                &da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(),
            ) as u16;
            for b in a..q {
                let db = digits(b);
                let ds: Vec<u16> = da.iter().zip(db.iter()).map(|(&x, &y)| (x + y) % p).collect();
                let s = undigits(&ds) as u16;
                add[(a * q + b) as usize] = s;
                add[(b * q + a) as usize] = s;
            }
        }
        // polynomial multiplication mod the defining polynomial
        let mut mul = vec![0u16; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in a..q {
                let db = digits(b);
                let mut prod = vec![0u16; 2 * k as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce: x^k = -(poly[0] + ... + poly[k-1] x^{k-1})
                for i in (k as usize..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for j in 0..k as usize {
                        let sub = (c * poly[j]) % p;
                        prod[i - k as usize + j] = (prod[i - k as usize + j] + p - sub) % p;
                    }
                }
                let m = undigits(&prod[..k as usize]) as u16;
                mul[(a * q + b) as usize] = m;
                mul[(b * q + a) as usize] = m;
            }
        }
        let mut inv = vec![0u16; qs];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u16;
                    break;
                }
            }
        }
        Field { p, k, q, add, mul, inv, neg }
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[(a as u32 * self.q + b as u32) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[(a as u32 * self.q + b as u32) as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        debug_assert_ne!(a, 0);
        self.inv[a as usize]
    }

    /// Embeds a prime-field residue.
    pub fn from_prime(&self, a: u32) -> u16 {
        (a % self.p as u32) as u16
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        let mut acc = 1u16;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The arithmetic Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: u16) -> u16 {
        self.pow(a, self.p as u64)
    }

    /// `a -> a^q0` for the Frobenius of a subfield structure `F_{q0}`.
    pub fn frobenius_power(&self, a: u16, q0: u32) -> u16 {
        self.pow(a, q0 as u64)
    }

    /// The class of `x` (a primitive element for the table polynomials).
    pub fn generator(&self) -> u16 {
        if self.k == 1 {
            // root of the degree-1 Conway polynomial x + c: the residue -c
            let poly = POLY_TABLE
                .iter()
                .find(|&&(tp, tk, _)| tp == self.p && tk == 1)
                .map(|&(_, _, c)| c)
                .unwrap();
            (self.p - poly[0]) % self.p
        } else {
            self.p // the polynomial "x"
        }
    }

    /// Multiplicative order of `a`.
    pub fn order(&self, a: u16) -> u32 {
        debug_assert_ne!(a, 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The embedding `F_{p^k} -> F_{p^{k*m}}` determined by the
    /// compatible generators; `self` is the small field.
    pub fn embed_into(&self, big: &Field) -> Result<Vec<u16>> {
        if big.p != self.p || big.k % self.k != 0 {
            return Err(Error::UnsupportedField);
        }
        if big.k == self.k {
            return Ok((0..self.q as u16).collect());
        }
        let exp = ((big.q as u64 - 1) / (self.q as u64 - 1)) as u64;
        let eta = big.pow(big.generator(), exp);
        // small element = sum c_i x^i -> sum c_i eta^i
        let mut map = vec![0u16; self.q as usize];
        for a in 0..self.q {
            let mut digits = Vec::new();
            let mut e = a;
            for _ in 0..self.k {
                digits.push((e % self.p as u32) as u16);
                e /= self.p as u32;
            }
            let mut acc = 0u16;
            let mut pw = 1u16;
            for &c in &digits {
                let mut term = 0u16;
                for _ in 0..c {
                    term = big.add(term, pw);
                }
                acc = big.add(acc, term);
                pw = big.mul(pw, eta);
            }
            map[a as usize] = acc;
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_and_primitivity() {
        for &(p, k, _) in POLY_TABLE {
            let q = (p as u32).pow(k as u32);
            let f = Field::new(q).unwrap();
            // distributivity spot check on all triples for small q,
            // random-ish subset for larger ones
            let step = if q > 30 { 7 } else { 1 };
            for a in (0..q as u16).step_by(step) {
                for b in (0..q as u16).step_by(step) {
                    for c in (0..q as u16).step_by(step) {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
            // inverses
            for a in 1..q as u16 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            // the generator is primitive (this is what the table must
            // guarantee for the embeddings to be norm-compatible)
            assert_eq!(f.order(f.generator()), q - 1, "p={p} k={k}");
        }
    }

    #[test]
    fn frobenius_is_additive() {
        // (x+y)^p = x^p + y^p for 1000 pseudo-random pairs per field
        for &(p, k, _) in POLY_TABLE {
            let q = (p as u32).pow(k as u32);
            let f = Field::new(q).unwrap();
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..1000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = ((state >> 16) % q as u64) as u16;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = ((state >> 16) % q as u64) as u16;
                assert_eq!(
                    f.frobenius(f.add(a, b)),
                    f.add(f.frobenius(a), f.frobenius(b))
                );
                assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            }
        }
    }

    #[test]
    fn embeddings_are_field_maps() {
        for (small_q, big_q) in [(2u32, 4u32), (2, 8), (3, 9), (3, 27), (4, 64)] {
            let (small, big) = match (Field::new(small_q), Field::new(big_q)) {
                (Ok(s), Ok(b)) => (s, b),
                _ => continue,
            };
            let map = small.embed_into(&big).unwrap();
            assert_eq!(map[0], 0);
            assert_eq!(map[1], 1);
            for a in 0..small_q as u16 {
                for b in 0..small_q as u16 {
                    assert_eq!(map[small.add(a, b) as usize], big.add(map[a as usize], map[b as usize]));
                    assert_eq!(map[small.mul(a, b) as usize], big.mul(map[a as usize], map[b as usize]));
                }
            }
            // the image is the fixed field of the q0-power Frobenius
            for a in 0..small_q as u16 {
                let im = map[a as usize];
                assert_eq!(big.frobenius_power(im, small_q), im);
            }
        }
    }
}
