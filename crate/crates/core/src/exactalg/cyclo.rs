//! Exact arithmetic in `Q(zeta_N)[u, u^-1]` where `u^2 = q`.
//!
//! Elements of the cyclotomic field are kept in the power basis of
//! `zeta_N`, always reduced modulo the cyclotomic polynomial `Phi_N`;
//! equality after reduction is the equality of the field.  The symbol `u`
//! is a formal positive square root of `q`, so complex conjugation fixes
//! `u` and numeric evaluation substitutes the positive root.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Euler totient.
pub fn phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of the cyclotomic polynomial `Phi_n`, low degree first.
/// Computed bottom-up over the divisors of `n` by exact division of
/// `x^d - 1` by the proper cyclotomic factors.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    let mut table: BTreeMap<u32, Vec<i128>> = BTreeMap::new();
    for &d in &divisors {
        let mut num = vec![0i128; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        for &e in &divisors {
            if e < d && d % e == 0 {
                num = poly_div_exact_int(&num, &table[&e]);
            }
        }
        table.insert(d, num);
    }
    table.remove(&n).unwrap()
}

fn poly_div_exact_int(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem: Vec<i128> = num.to_vec();
    let nd = rem.len() - 1;
    let mut quot = vec![0i128; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for j in 0..=dd {
                rem[k + j] -= c * den[j];
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// An element of `Q(zeta_N)` in the power basis of `zeta_N`,
/// reduced modulo `Phi_N` (so the stored degree is `< phi(N)`).
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rat>, // length phi(conductor), low power first
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if self.conductor == 4 && k == 1 {
                write!(f, "{c}*i")?;
            } else {
                write!(f, "{c}*z{}^{}", self.conductor, k)?;
            }
        }
        Ok(())
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0);
        let k = k.rem_euclid(n as i64) as usize;
        let mut power = vec![Rat::zero(); n as usize];
        power[k] = Rat::one();
        Cyclotomic::reduce_power_vector(n, power)
    }

    /// Reduces a vector of coefficients on `1, zeta, ..., zeta^{len-1}`
    /// (exponents taken mod N) modulo `Phi_N`.
    fn reduce_power_vector(conductor: u32, power: Vec<Rat>) -> Self {
        let n = conductor as usize;
        // First fold exponents mod N.
        let mut folded = vec![Rat::zero(); n];
        for (e, c) in power.into_iter().enumerate() {
            if !c.is_zero() {
                folded[e % n] += c;
            }
        }
        // Then divide by Phi_N and keep the remainder.
        let modulus = cyclotomic_polynomial(conductor);
        let deg = modulus.len() - 1; // = phi(N)
        let mut rem = folded;
        for k in (deg..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = rem[k].clone();
            rem[k] = Rat::zero();
            for (j, m) in modulus.iter().enumerate().take(deg) {
                if *m != 0 {
                    let t = &c * Rat::from(BigInt::from(*m));
                    rem[k - deg + j] -= t;
                }
            }
        }
        rem.truncate(deg);
        rem.resize(deg, Rat::zero());
        Cyclotomic {
            conductor,
            coeffs: rem,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients in the reduced power basis of `zeta_N`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-expresses the element in `Q(zeta_m)` for `conductor | m`.
    pub fn lift(&self, m: u32) -> Cyclotomic {
        assert_eq!(m % self.conductor, 0);
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut power = vec![Rat::zero(); m as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                power[e * step] += c.clone();
            }
        }
        Cyclotomic::reduce_power_vector(m, power)
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = a.conductor.lcm(&b.conductor);
        (a.lift(m), b.lift(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.conductor == other.conductor {
            let mut a = self.clone();
            for (x, y) in a.coeffs.iter_mut().zip(other.coeffs.iter()) {
                *x += y;
            }
            return a;
        }
        let (mut a, b) = Cyclotomic::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 && other.conductor == 1 {
            return Cyclotomic::from_rat(&self.coeffs[0] * &other.coeffs[0]);
        }
        let (a, b) = Cyclotomic::common(self, other);
        let n = a.conductor as usize;
        let mut power = vec![Rat::zero(); 2 * n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    power[i + j] += x * y;
                }
            }
        }
        Cyclotomic::reduce_power_vector(a.conductor, power)
    }

    pub fn scale(&self, r: &Rat) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Image under the Galois automorphism `zeta -> zeta^k`,
    /// `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.conductor as i64;
        let k = k.rem_euclid(n);
        assert_eq!(k.gcd(&n), 1, "galois exponent must be coprime");
        let mut power = vec![Rat::zero(); self.conductor as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                power[((e as i64 * k) % n) as usize] += c.clone();
            }
        }
        Cyclotomic::reduce_power_vector(self.conductor, power)
    }

    /// Complex conjugation `zeta -> zeta^-1`.
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor as i64 - 1)
    }

    /// Returns the element as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Trace to `Q`: the sum over all primitive embeddings.
    pub fn rational_trace(&self) -> Rat {
        let n = self.conductor as i64;
        let mut acc = Cyclotomic::zero();
        for k in 1..=n {
            if k.gcd(&n) == 1 {
                acc = acc.add(&self.galois(k));
            }
        }
        acc.as_rational().expect("trace must be rational")
    }

    /// Multiplicative inverse, available whenever `z * conj(z)` is a
    /// nonzero rational (true for all the units this crate inverts:
    /// rationals times roots of unity).
    pub fn try_inverse(&self) -> Result<Cyclotomic> {
        let norm = self.mul(&self.conj());
        let r = norm.as_rational().ok_or(Error::InvalidLabel)?;
        if r.is_zero() {
            return Err(Error::InvalidLabel);
        }
        Ok(self.conj().scale(&(Rat::one() / r)))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyclotomic {}

/// A Laurent polynomial in `u` (with `u^2 = q`) over cyclotomic
/// coefficients.  Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct CycLaurent {
    terms: BTreeMap<i64, Cyclotomic>,
}

impl fmt::Debug for CycLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *e == 0 {
                write!(f, "({c:?})")?;
            } else {
                write!(f, "({c:?})*u^{e}")?;
            }
        }
        Ok(())
    }
}

impl CycLaurent {
    pub fn zero() -> Self {
        CycLaurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        CycLaurent::from_cyclotomic(Cyclotomic::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        CycLaurent::from_cyclotomic(Cyclotomic::from_rat(r))
    }

    pub fn from_int(n: i64) -> Self {
        CycLaurent::from_rat(rat_int(n))
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        CycLaurent { terms }
    }

    /// `zeta_n^k` as a degree-0 value.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        CycLaurent::from_cyclotomic(Cyclotomic::root_of_unity(n, k))
    }

    /// `u^e`.
    pub fn u_pow(e: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(e, Cyclotomic::one());
        CycLaurent { terms }
    }

    /// `q^e = u^{2e}`.
    pub fn q_pow(e: i64) -> Self {
        CycLaurent::u_pow(2 * e)
    }

    /// `q^e - 1`, a factor of torus orders.
    pub fn q_pow_minus_one(e: i64) -> Self {
        CycLaurent::q_pow(e).sub(&CycLaurent::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Cyclotomic)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, e: i64) -> Cyclotomic {
        self.terms.get(&e).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// Smallest conductor housing every coefficient.
    pub fn conductor(&self) -> u32 {
        self.terms
            .values()
            .fold(1u32, |acc, c| acc.lcm(&c.conductor()))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert(&mut self, e: i64, c: Cyclotomic) {
        if !c.is_zero() {
            self.terms.insert(e, c);
        }
    }

    pub fn add(&self, other: &CycLaurent) -> CycLaurent {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let s = out.coefficient(*e).add(c);
            out.terms.remove(e);
            out.insert(*e, s);
        }
        out
    }

    pub fn sub(&self, other: &CycLaurent) -> CycLaurent {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycLaurent {
        CycLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &CycLaurent) -> CycLaurent {
        let mut out = CycLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let p = c1.mul(c2);
                let s = out.coefficient(e).add(&p);
                out.terms.remove(&e);
                out.insert(e, s);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> CycLaurent {
        if r.is_zero() {
            return CycLaurent::zero();
        }
        CycLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.scale(r))).collect(),
        }
    }

    pub fn shift_u(&self, e: i64) -> CycLaurent {
        CycLaurent {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// Applies a Galois automorphism coefficientwise (`u` is fixed).
    pub fn galois(&self, k: i64) -> CycLaurent {
        let n = self.conductor();
        CycLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.lift(n).galois(k)))
                .collect(),
        }
    }

    /// Complex conjugation: conjugates coefficients, fixes `u`.
    pub fn conj(&self) -> CycLaurent {
        CycLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// `z * conj(z)`.
    pub fn abs_sq(&self) -> CycLaurent {
        self.mul(&self.conj())
    }

    /// True when `z * conj(z) = 1`, i.e. the value is a unit of modulus
    /// one under every complex embedding.
    pub fn is_unitary(&self) -> bool {
        self.abs_sq() == CycLaurent::one()
    }

    /// Substitutes an exact rational value for `u`.
    pub fn eval_u(&self, s: &Rat) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (e, c) in &self.terms {
            let mut p = Rat::one();
            if *e >= 0 {
                for _ in 0..*e {
                    p *= s;
                }
            } else {
                for _ in 0..(-e) {
                    p /= s;
                }
            }
            acc = acc.add(&c.scale(&p));
        }
        acc
    }

    /// Substitutes `q` for `u^2`; every `u`-exponent must be even.
    pub fn eval_q(&self, q: &Rat) -> Result<Cyclotomic> {
        let mut acc = Cyclotomic::zero();
        for (e, c) in &self.terms {
            if e % 2 != 0 {
                return Err(Error::InvalidLabel);
            }
            let h = e / 2;
            let mut p = Rat::one();
            if h >= 0 {
                for _ in 0..h {
                    p *= q;
                }
            } else {
                for _ in 0..(-h) {
                    p /= q;
                }
            }
            acc = acc.add(&c.scale(&p));
        }
        Ok(acc)
    }

    /// Multiplicative inverse, available when `z * conj(z)` is a single
    /// `u`-monomial with rational coefficient (true for every unit this
    /// crate inverts: rationals times roots of unity times `u`-powers).
    pub fn try_inverse(&self) -> Result<CycLaurent> {
        let norm = self.abs_sq();
        let e = norm.min_degree().ok_or(Error::InvalidLabel)?;
        if norm.max_degree() != Some(e) {
            return Err(Error::InvalidLabel);
        }
        let c = norm.coefficient(e).as_rational().ok_or(Error::InvalidLabel)?;
        if c.is_zero() {
            return Err(Error::InvalidLabel);
        }
        Ok(self.conj().shift_u(-e).scale(&(Rat::one() / c)))
    }

    /// Quotient and remainder by a divisor whose leading coefficient is
    /// invertible (rational or root of unity).
    pub fn div_rem(&self, den: &CycLaurent) -> Result<(CycLaurent, CycLaurent)> {
        let dmax = den.max_degree().ok_or(Error::InvalidLabel)?;
        let dmin = den.min_degree().unwrap();
        let lead_inv = den.coefficient(dmax).try_inverse()?;
        let mut rem = self.clone();
        let mut quot = CycLaurent::zero();
        loop {
            let rmax = match rem.max_degree() {
                None => break,
                Some(m) => m,
            };
            // Stop once the remainder is "shorter" than the divisor.
            if rem.max_degree().unwrap() - rem.min_degree().unwrap() < dmax - dmin {
                break;
            }
            let c = rem.coefficient(rmax).mul(&lead_inv);
            let shift = rmax - dmax;
            let mono = CycLaurent {
                terms: {
                    let mut t = BTreeMap::new();
                    t.insert(shift, c);
                    t
                },
            };
            quot = quot.add(&mono);
            rem = rem.sub(&mono.mul(den));
        }
        Ok((quot, rem))
    }

    /// Exact division; errors when the division leaves a remainder.
    pub fn div_exact(&self, den: &CycLaurent) -> Result<CycLaurent> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NoSolution)
        }
    }
}

/// A reduced fraction of `u`-Laurent polynomials (e.g. `q/(q^2-1)`).
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    pub num: CycLaurent,
    pub den: CycLaurent,
}

impl LaurentFraction {
    pub fn zero() -> Self {
        LaurentFraction {
            num: CycLaurent::zero(),
            den: CycLaurent::one(),
        }
    }

    pub fn from_laurent(num: CycLaurent) -> Self {
        LaurentFraction {
            num,
            den: CycLaurent::one(),
        }
    }

    pub fn new(num: CycLaurent, den: CycLaurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = LaurentFraction { num, den };
        f.reduce();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &LaurentFraction) -> LaurentFraction {
        LaurentFraction::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &LaurentFraction) -> LaurentFraction {
        LaurentFraction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, r: &Rat) -> LaurentFraction {
        LaurentFraction {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    /// Cancels `u`-powers, rational content and common `q^i - 1` factors.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = CycLaurent::one();
            return;
        }
        // Shift so the denominator starts at u^0.
        let dmin = self.den.min_degree().unwrap();
        self.den = self.den.shift_u(-dmin);
        self.num = self.num.shift_u(-dmin);
        // Cancel common u-power present in both.
        let shared = self.num.min_degree().unwrap().min(self.den.min_degree().unwrap());
        if shared != 0 {
            self.num = self.num.shift_u(-shared);
            self.den = self.den.shift_u(-shared);
        }
        // Repeatedly cancel q^i - 1 factors of the denominator.
        let mut changed = true;
        while changed {
            changed = false;
            let span = self.den.max_degree().unwrap() - self.den.min_degree().unwrap();
            let max_i = span / 2;
            for i in (1..=max_i).rev() {
                let f = CycLaurent::q_pow_minus_one(i);
                if let (Ok(nq), Ok(dq)) = (self.num.div_exact(&f), self.den.div_exact(&f)) {
                    self.num = nq;
                    self.den = dq;
                    changed = true;
                    break;
                }
            }
            if self.den.max_degree() == Some(0) && self.den.min_degree() == Some(0) {
                break;
            }
        }
        // Normalize the denominator constant: make den monic if it is a
        // constant, otherwise scale so its leading rational part is 1
        // when possible.
        if let Some(c) = self.den.coefficient(self.den.max_degree().unwrap()).as_rational() {
            if !c.is_zero() {
                let inv = Rat::one() / c;
                self.num = self.num.scale(&inv);
                self.den = self.den.scale(&inv);
            }
        }
    }

    /// Exact numeric value at `u^2 = q` (requires even exponents).
    pub fn eval_q(&self, q: &Rat) -> Result<Rat> {
        let n = self.num.eval_q(q)?.as_rational().ok_or(Error::InvalidLabel)?;
        let d = self.den.eval_q(q)?.as_rational().ok_or(Error::InvalidLabel)?;
        if d.is_zero() {
            return Err(Error::NoSolution);
        }
        Ok(n / d)
    }

    /// True when the fraction is actually a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<CycLaurent> {
        self.num.div_exact(&self.den).ok()
    }
}

impl PartialEq for LaurentFraction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}
impl Eq for LaurentFraction {}

/// Returns `+1` when `r` is nonnegative (helper for sign bookkeeping).
pub fn rat_is_nonnegative(r: &Rat) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_relations() {
        // zeta_3^3 = 1 and 1 + zeta_3 + zeta_3^2 = 0.
        let z = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(z.mul(&z).mul(&z), Cyclotomic::one());
        let sum = Cyclotomic::one().add(&z).add(&z.mul(&z));
        assert!(sum.is_zero());
        // Equality across conductors: zeta_6^2 = zeta_3.
        let z6 = Cyclotomic::root_of_unity(6, 2);
        assert_eq!(z6, Cyclotomic::root_of_unity(3, 1));
    }

    #[test]
    fn conjugation_and_modulus() {
        let z = Cyclotomic::root_of_unity(5, 2);
        assert_eq!(z.mul(&z.conj()), Cyclotomic::one());
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.conj(), Cyclotomic::root_of_unity(4, 3));
    }

    #[test]
    fn laurent_arithmetic() {
        // (q - 1)(q + 1) = q^2 - 1
        let qm = CycLaurent::q_pow_minus_one(1);
        let qp = CycLaurent::q_pow(1).add(&CycLaurent::one());
        assert_eq!(qm.mul(&qp), CycLaurent::q_pow_minus_one(2));
        // division
        let prod = CycLaurent::q_pow_minus_one(2);
        assert_eq!(prod.div_exact(&qm).unwrap(), qp);
        assert!(CycLaurent::q_pow_minus_one(3).div_exact(&qp).is_err());
    }

    #[test]
    fn fraction_reduction() {
        // q^2 / (q (q^2-1)) = q / (q^2 - 1)
        let f = LaurentFraction::new(
            CycLaurent::q_pow(2),
            CycLaurent::q_pow(1).mul(&CycLaurent::q_pow_minus_one(2)),
        );
        assert_eq!(f.num, CycLaurent::q_pow(1));
        assert_eq!(f.den, CycLaurent::q_pow_minus_one(2));
        assert_eq!(f.eval_q(&rat_int(3)).unwrap(), rat(3, 8));
    }

    #[test]
    fn eval_with_chosen_square_root() {
        // u^3 at u = 2 (q = 4) gives 8.
        let v = CycLaurent::u_pow(3);
        assert_eq!(v.eval_u(&rat_int(2)).as_rational().unwrap(), rat_int(8));
    }

    #[test]
    fn norms_are_nonnegative_under_embeddings() {
        // for x, y built from roots of unity and u-powers, every
        // embedding of (x y) conj(x y) evaluated at u = 2 is a
        // nonnegative rational
        let x = CycLaurent::root_of_unity(5, 2).mul(&CycLaurent::u_pow(3));
        let y = CycLaurent::root_of_unity(8, 1).mul(&CycLaurent::u_pow(-1));
        let z = x.mul(&y).abs_sq();
        let n = z.conductor().max(40) as i64; // view inside Q(zeta_40)
        for k in 1..=n {
            if k.gcd(&n) == 1 {
                let v = z.galois(k).eval_u(&rat_int(2)).as_rational().unwrap();
                assert!(rat_is_nonnegative(&v));
            }
        }
        // for general sums, the rational trace of the norm at a chosen
        // positive square root is nonnegative
        let x = CycLaurent::one().add(&CycLaurent::root_of_unity(5, 1).mul(&CycLaurent::u_pow(1)));
        let y = CycLaurent::root_of_unity(8, 1)
            .mul(&CycLaurent::u_pow(-1))
            .add(&CycLaurent::from_int(2));
        let z = x.mul(&y).abs_sq();
        let w = z.eval_u(&rat_int(2));
        let tr = w.rational_trace();
        assert!(rat_is_nonnegative(&tr));
    }
}
