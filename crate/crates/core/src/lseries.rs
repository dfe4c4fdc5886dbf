//! Enumeration of F-stable semisimple classes of the dual group
//! `PGL_n` with stabilizer data, and the parameter sets for irreducible
//! and almost characters of `SL_n(F_q)`.
//!
//! Eigenvalues live in the multiplicative group of `F_{q^K}` for the
//! working exponent `K = lcm(1..n)`, encoded as exponents of a fixed
//! generator, i.e. residues mod `q^K - 1`.  Frobenius is multiplication
//! by `q` on exponents, scalars act by translation, and a geometric class
//! of `PGL_n` is an exponent multiset up to translation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::exactalg::Partition;
use crate::orbits::CyclicF;
use crate::{Error, Result};

/// Desk-scale caps for the enumeration.
pub const MAX_N: u32 = 4;
pub const MAX_Q: u32 = 9;

/// An F-stable geometric semisimple class of `PGL_n`, by its canonical
/// eigenvalue-exponent multiset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SemisimpleClassLabel {
    /// Modulus `q^K - 1` of the exponent arithmetic.
    pub modulus: i64,
    /// Canonical form: the lexicographically least translate among those
    /// containing exponent 0 (the modulo-center normalization).
    pub eigenvalues: Vec<i64>,
}

/// Stabilizer data `W_s = W_shat ⋊ Omega_s` of a semisimple class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerData {
    /// Multiplicities of the distinct eigenvalues: the factor sizes of
    /// `W_shat` (a product of symmetric groups).
    pub w_shat: Vec<u32>,
    /// The cyclic group `Omega_s` with its Frobenius multiplier.
    pub omega: CyclicF,
    /// Distinct eigenvalue exponents, sorted; index space for the
    /// actions below.
    pub distinct: Vec<i64>,
    /// Permutation of `distinct` induced by the Omega generator
    /// (translation by the stabilizer generator).
    pub omega_action: Vec<usize>,
    /// Permutation of `distinct` induced by the twisted Frobenius
    /// `e -> q e - z_F` (the `w_1`-coset bookkeeping).
    pub frobenius_action: Vec<usize>,
}

/// The parameter set of Eq.-(1.6.3) type attached to `(s, E)`:
/// `(Omega_{s,E}^{F'})^ x (Omega-tilde_{s,E})_{F'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSetBar {
    /// Order of `Omega_{s,E}` and the Frobenius multiplier on it.
    pub omega_se: CyclicF,
    /// Character indices of the fixed subgroup (size `gcd`).
    pub factor1: Vec<u32>,
    /// Coinvariant classes, listed as coset representatives relative to
    /// the base point `a_E` (size `gcd`).
    pub factor2: Vec<u32>,
    /// The least coset element `a_E` (index in `Omega_s`).
    pub a_e: u32,
}

impl ParamSetBar {
    pub fn size(&self) -> u64 {
        self.factor1.len() as u64 * self.factor2.len() as u64
    }
}

fn lcm_upto(n: u32) -> u32 {
    let mut acc = 1u32;
    for i in 2..=n {
        acc = acc.lcm(&i);
    }
    acc
}

fn check_caps(n: u32, q: u32) -> Result<()> {
    if n > MAX_N || q > MAX_Q || n < 2 {
        return Err(Error::CapExceeded {
            requested: (n as u64) << 32 | q as u64,
            cap: ((MAX_N as u64) << 32) | MAX_Q as u64,
        });
    }
    Ok(())
}

fn canonical_form(modulus: i64, multiset: &[i64]) -> Vec<i64> {
    let mut best: Option<Vec<i64>> = None;
    for &a in multiset {
        let mut shifted: Vec<i64> = multiset
            .iter()
            .map(|&x| (x - a).rem_euclid(modulus))
            .collect();
        shifted.sort_unstable();
        if best.as_ref().is_none_or(|b| &shifted < b) {
            best = Some(shifted);
        }
    }
    best.unwrap()
}

/// Enumerates the rational semisimple classes of `GL_n(F_q)` as
/// multisets of Frobenius orbits, then merges them into geometric
/// `PGL_n`-classes by scalar translation.
pub fn enumerate_semisimple_classes(
    n: u32,
    q: u32,
) -> Result<Vec<(SemisimpleClassLabel, StabilizerData)>> {
    check_caps(n, q)?;
    let k = lcm_upto(n);
    let modulus: i64 = (q as i64).pow(k) - 1;

    // Frobenius orbits of size s <= n lie in the subgroup of index
    // (q^K-1)/(q^s-1); enumerate orbits by size.
    let mut orbits_by_size: Vec<Vec<Vec<i64>>> = vec![Vec::new(); n as usize + 1];
    for s in 1..=n {
        let sub = (q as i64).pow(s) - 1;
        let step = modulus / sub;
        let mut seen: Vec<bool> = vec![false; sub as usize];
        for r in 0..sub {
            if seen[r as usize] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = r;
            loop {
                if seen[x as usize] {
                    break;
                }
                seen[x as usize] = true;
                orbit.push(x * step);
                x = (x * q as i64).rem_euclid(sub);
            }
            if orbit.len() == s as usize {
                orbit.sort_unstable();
                orbits_by_size[s as usize].push(orbit);
            }
        }
    }

    // multisets of orbits of total weighted size n
    let mut rational: Vec<Vec<i64>> = Vec::new();
    fn assemble(
        remaining: u32,
        min_size: usize,
        min_index: usize,
        orbits_by_size: &[Vec<Vec<i64>>],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if remaining == 0 {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        for s in min_size..=remaining as usize {
            let start = if s == min_size { min_index } else { 0 };
            for (i, orbit) in orbits_by_size[s].iter().enumerate().skip(start) {
                cur.extend_from_slice(orbit);
                assemble(remaining - s as u32, s, i, orbits_by_size, cur, out);
                cur.truncate(cur.len() - s);
            }
        }
    }
    assemble(n, 1, 0, &orbits_by_size, &mut Vec::new(), &mut rational);

    // merge into geometric classes by canonical form
    let mut geo: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    for m in rational {
        let c = canonical_form(modulus, &m);
        geo.entry(c).or_insert(m);
    }

    let mut out = Vec::new();
    for (canon, witness) in geo {
        let stab = stabilizer_data(modulus, q, &witness)?;
        out.push((
            SemisimpleClassLabel {
                modulus,
                eigenvalues: canon,
            },
            stab,
        ));
    }
    Ok(out)
}

fn stabilizer_data(modulus: i64, q: u32, multiset: &[i64]) -> Result<StabilizerData> {
    // distinct eigenvalues and multiplicities
    let mut distinct: Vec<i64> = multiset.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mults: Vec<u32> = distinct
        .iter()
        .map(|&d| multiset.iter().filter(|&&x| x == d).count() as u32)
        .collect();

    let same_multiset = |shift: i64| -> bool {
        let mut shifted: Vec<i64> = multiset
            .iter()
            .map(|&x| (x + shift).rem_euclid(modulus))
            .collect();
        shifted.sort_unstable();
        let mut orig = multiset.to_vec();
        orig.sort_unstable();
        shifted == orig
    };

    // stabilizer scalars: candidates are differences with a fixed element
    let a0 = multiset[0];
    let mut stab_shifts: Vec<i64> = Vec::new();
    for &b in multiset {
        let c = (b - a0).rem_euclid(modulus);
        if !stab_shifts.contains(&c) && same_multiset(c) {
            stab_shifts.push(c);
        }
    }
    stab_shifts.sort_unstable();
    let t = stab_shifts.len() as u32;
    // generator: the smallest positive shift (0 if trivial)
    let gen_shift = if t == 1 { 0 } else { stab_shifts[1] };

    // Frobenius normalization shift z_F with q*multiset = multiset + z_F
    let qm: Vec<i64> = {
        let mut v: Vec<i64> = multiset
            .iter()
            .map(|&x| (x * q as i64).rem_euclid(modulus))
            .collect();
        v.sort_unstable();
        v
    };
    let mut z_f = None;
    for &b in &qm {
        let cand = (b - {
            let mut o = multiset.to_vec();
            o.sort_unstable();
            o[0]
        })
        .rem_euclid(modulus);
        let shifted: Vec<i64> = {
            let mut v: Vec<i64> = multiset
                .iter()
                .map(|&x| (x + cand).rem_euclid(modulus))
                .collect();
            v.sort_unstable();
            v
        };
        if shifted == qm {
            z_f = Some(cand);
            break;
        }
    }
    let z_f = z_f.ok_or(Error::NoSolution)?; // the class is F-stable by construction

    let index_of = |e: i64| -> usize { distinct.binary_search(&e).unwrap() };
    let omega_action: Vec<usize> = distinct
        .iter()
        .map(|&d| index_of((d + gen_shift).rem_euclid(modulus)))
        .collect();
    let frobenius_action: Vec<usize> = distinct
        .iter()
        .map(|&d| index_of((d * q as i64 - z_f).rem_euclid(modulus)))
        .collect();

    Ok(StabilizerData {
        w_shat: mults,
        omega: CyclicF::new(t, q as u64),
        distinct,
        omega_action,
        frobenius_action,
    })
}

/// The special class of Eq.-(8.1.1) type: eigenvalues
/// `1, zeta, ..., zeta^{t-1}` each with multiplicity `n/t`.
pub fn special_class(n: u32, t: u32, q: u32) -> Result<(SemisimpleClassLabel, StabilizerData)> {
    if n % t != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let p = smallest_prime_factor(q);
    if t.gcd(&p) != 1 {
        return Err(Error::DivisibilityViolated);
    }
    let k = lcm_upto(n);
    let modulus: i64 = (q as i64).pow(k) - 1;
    if modulus % t as i64 != 0 {
        return Err(Error::OrderMismatch);
    }
    let step = modulus / t as i64;
    let mut multiset = Vec::new();
    for i in 0..t as i64 {
        for _ in 0..(n / t) {
            multiset.push(i * step);
        }
    }
    let stab = stabilizer_data(modulus, q, &multiset)?;
    debug_assert_eq!(stab.omega.order, t);
    Ok((
        SemisimpleClassLabel {
            modulus,
            eigenvalues: canonical_form(modulus, &multiset),
        },
        stab,
    ))
}

pub fn smallest_prime_factor(q: u32) -> u32 {
    for p in 2..=q {
        if q % p == 0 {
            return p;
        }
    }
    q
}

/// An `E`-orbit descriptor: a multipartition assigning a partition of
/// the multiplicity to each distinct eigenvalue.
pub type EAssignment = Vec<Partition>;

/// All characters of `W_shat`, i.e. multipartition assignments.
pub fn w_shat_characters(stab: &StabilizerData) -> Vec<EAssignment> {
    let mut out: Vec<EAssignment> = vec![Vec::new()];
    for &m in &stab.w_shat {
        let parts = Partition::all(m);
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for base in &out {
            for p in &parts {
                let mut b = base.clone();
                b.push(p.clone());
                next.push(b);
            }
        }
        out = next;
    }
    out
}

fn apply_action(e: &EAssignment, action: &[usize]) -> EAssignment {
    // the permuted assignment: value at position action[i] comes from i
    let mut out = e.clone();
    for (i, &j) in action.iter().enumerate() {
        out[j] = e[i].clone();
    }
    out
}

/// Stabilizer order of `E` in `Omega_s`.
pub fn omega_stabilizer_order(stab: &StabilizerData, e: &EAssignment) -> u32 {
    let t = stab.omega.order;
    let mut cur = e.clone();
    for count in 1..=t {
        cur = apply_action(&cur, &stab.omega_action);
        if &cur == e {
            // the orbit of e under the generator has length `count`, so
            // the stabilizer is the subgroup of that index
            return t / count;
        }
    }
    1
}

/// Whether the `Omega_s`-orbit of `E` is stable under the twisted
/// Frobenius, and if so the least coset element `a_E` (as a power of the
/// Omega generator with `x_E = gen^{a_E}` satisfying `E о F' = E о
/// gen^{a_E}`).
pub fn orbit_f_stable(stab: &StabilizerData, e: &EAssignment) -> Option<u32> {
    let fe = apply_action(e, &stab.frobenius_action);
    let mut cur = e.clone();
    for a in 0..stab.omega.order {
        if cur == fe {
            return Some(a);
        }
        cur = apply_action(&cur, &stab.omega_action);
    }
    None
}

/// `Mbar_{s,E}` for an F-stable orbit: the explicit product set.
pub fn param_set_bar(stab: &StabilizerData, e: &EAssignment) -> Result<ParamSetBar> {
    if e.len() != stab.w_shat.len() {
        return Err(Error::InvalidLabel);
    }
    for (p, &m) in e.iter().zip(stab.w_shat.iter()) {
        if p.size() != m {
            return Err(Error::InvalidLabel);
        }
    }
    let a_e = orbit_f_stable(stab, e).ok_or(Error::InvalidLabel)?;
    let ord = omega_stabilizer_order(stab, e);
    let omega_se = CyclicF::new(ord, stab.omega.multiplier as u64);
    let g = omega_se.invariant_size();
    Ok(ParamSetBar {
        omega_se,
        factor1: (0..g).collect(),
        factor2: (0..g).collect(),
        a_e,
    })
}

/// `Mbar_{s,N} = (Abar_lambda)_F x (Abar_lambda^F)^` for the orbit data,
/// built from the `Z^1_M`-quotient.  Pure gcd arithmetic in `t` and `q`.
pub fn param_set_bar_n(t: u32, mu: &Partition, q: u32) -> Result<ParamSetBar> {
    let abar = crate::orbits::zm1_quotient(mu, t, q as u64)?;
    let g = abar.invariant_size();
    Ok(ParamSetBar {
        omega_se: abar,
        factor1: (0..g).collect(),
        factor2: (0..g).collect(),
        a_e: 0,
    })
}

/// The pair of canonical isomorphisms of the cyclic-group level:
/// `f: (Omega_s^{F'})^ -> (Abar_lambda)_F` and
/// `h: (Omega_s)_{F'} -> (Abar_lambda^F)^`, realized on residue indices
/// (generator to generator, trivial to trivial).
#[derive(Clone, Debug)]
pub struct Bijection27 {
    /// Common invariant size of both sides.
    pub size: u32,
    pub omega: CyclicF,
    pub abar: CyclicF,
}

pub fn bijection_27(t: u32, q: u32) -> Result<Bijection27> {
    let omega = CyclicF::new(t, q as u64);
    let abar = CyclicF::new(t, q as u64);
    if omega.invariant_size() != abar.invariant_size() {
        return Err(Error::OrderMismatch);
    }
    Ok(Bijection27 {
        size: omega.invariant_size(),
        omega,
        abar,
    })
}

impl Bijection27 {
    /// `f`: index of a character of `Omega_s^{F'}` to a coinvariant
    /// class of `Abar_lambda`.
    pub fn f(&self, chi_index: u32) -> u32 {
        chi_index % self.size
    }

    /// `h`: a coinvariant class of `Omega_s` to a character index of
    /// `Abar_lambda^F`.
    pub fn h(&self, class: u32) -> u32 {
        class % self.size
    }

    /// Exhaustive pairing-compatibility check: for all
    /// `(eps, z)` and `(eps', z')`, `eps(z') = xi'(c)` and
    /// `eps'(z) = xi(c')` under `(f, h)`, through actual character
    /// values.
    pub fn pairing_identity_holds(&self) -> bool {
        use crate::exactalg::cyclo::CycLaurent;
        let a = self.size;
        // (eps, z) in M_{s,E}: eps an F'-stable character of Omega
        // (index (t/a)*j), z in the fixed subgroup (element (t/a)*k').
        let t = self.omega.order;
        let step = t / a;
        for j in 0..a {
            for kk in 0..a {
                // image (c, xi) in M_{s,N}: c = fixed element of Abar of
                // index j (same residue), xi = F-stable char of index kk.
                for l in 0..a {
                    for m in 0..a {
                        // (eps', z') in Mbar_{s,E}: eps' char of fixed
                        // subgroup (index l), z' coinvariant class m.
                        // image (c', xi') = (f(l), h(m)).
                        // eps(z') via stable char on coinvariants:
                        let lhs1 = self.omega.stable_char_on_coinvariants(step * j, m);
                        // xi'(c): xi' = h(m) as char of Abar^F; c = the
                        // fixed element of index j, i.e. (t/a)*j; pair as
                        // char index m on subgroup element j:
                        let rhs1 = CycLaurent::root_of_unity(a, m as i64 * j as i64);
                        if lhs1 != rhs1 {
                            return false;
                        }
                        // eps'(z): char l of fixed subgroup at element k
                        let lhs2 = CycLaurent::root_of_unity(a, l as i64 * kk as i64);
                        // xi(c'): xi = F-stable char index (t/a)*kk of
                        // Abar on coinvariant class f(l) = l
                        let rhs2 = self.abar.stable_char_on_coinvariants(step * kk, l);
                        if lhs2 != rhs2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The number of irreducible characters of `SL_n(F_q)`:
/// the sum over classes and F'-stable `E`-orbits of `|Mbar_{s,E}|`.
pub fn irr_count(n: u32, q: u32) -> Result<u64> {
    let classes = enumerate_semisimple_classes(n, q)?;
    let mut total = 0u64;
    for (_, stab) in &classes {
        let chars = w_shat_characters(stab);
        let mut seen_orbits: Vec<EAssignment> = Vec::new();
        for e in chars {
            // process each Omega-orbit once, via its least representative
            let mut orbit_rep = e.clone();
            let mut cur = e.clone();
            for _ in 0..stab.omega.order {
                cur = apply_action(&cur, &stab.omega_action);
                if cur < orbit_rep {
                    orbit_rep = cur.clone();
                }
            }
            if orbit_rep != e {
                continue;
            }
            if seen_orbits.contains(&e) {
                continue;
            }
            seen_orbits.push(e.clone());
            if orbit_f_stable(stab, &e).is_none() {
                continue;
            }
            let g = CyclicF::new(omega_stabilizer_order(stab, &e), q as u64).invariant_size() as u64;
            total += g * g;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_semisimple_classes(2, 3).unwrap().len(), 3);
        assert_eq!(enumerate_semisimple_classes(2, 5).unwrap().len(), 5);
        // q = 4: the central class, the ratio-omega class, and two
        // quintic regular classes (the parameter count is pinned by the
        // oracle cross-check irr_count(2,4) = 5 below)
        assert_eq!(enumerate_semisimple_classes(2, 4).unwrap().len(), 4);
    }

    #[test]
    fn sl2_q3_stabilizers() {
        let classes = enumerate_semisimple_classes(2, 3).unwrap();
        // central class: W_shat = S_2, Omega trivial
        // ratio -1 class: W_shat trivial, Omega = Z/2
        // nonsplit regular: both trivial
        let mut shapes: Vec<(Vec<u32>, u32)> = classes
            .iter()
            .map(|(_, s)| (s.w_shat.clone(), s.omega.order))
            .collect();
        shapes.sort();
        assert_eq!(
            shapes,
            vec![(vec![1, 1], 1), (vec![1, 1], 2), (vec![2], 1)]
        );
    }

    #[test]
    fn special_class_examples() {
        let (_, s) = special_class(2, 2, 3).unwrap();
        assert_eq!(s.omega.order, 2);
        assert_eq!(s.w_shat, vec![1, 1]);
        let (_, s) = special_class(4, 2, 3).unwrap();
        assert_eq!(s.omega.order, 2);
        assert_eq!(s.w_shat, vec![2, 2]);
        let (_, s) = special_class(3, 3, 4).unwrap();
        assert_eq!(s.omega.order, 3);
        assert_eq!(s.w_shat, vec![1, 1, 1]);
        assert!(special_class(4, 2, 4).is_err()); // t not prime to p
    }

    #[test]
    fn param_set_sizes() {
        let (_, s) = special_class(2, 2, 3).unwrap();
        let e = vec![
            Partition::new(vec![1]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        ];
        assert_eq!(param_set_bar(&s, &e).unwrap().size(), 4);
        let (_, s) = special_class(3, 3, 4).unwrap();
        let e = vec![
            Partition::new(vec![1]).unwrap(),
            Partition::new(vec![1]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        ];
        assert_eq!(param_set_bar(&s, &e).unwrap().size(), 9);
    }

    #[test]
    fn param_set_bar_n_examples() {
        let mu2 = Partition::new(vec![2]).unwrap();
        assert_eq!(param_set_bar_n(2, &mu2, 3).unwrap().size(), 4);
        assert_eq!(param_set_bar_n(2, &mu2, 4).unwrap().size(), 1);
        let mu3 = Partition::new(vec![3]).unwrap();
        assert_eq!(param_set_bar_n(3, &mu3, 4).unwrap().size(), 9);
    }

    #[test]
    fn bijection_identity() {
        for t in 1..=12u32 {
            for q in 2..=13u32 {
                if (q as i64).gcd(&(t as i64)) != 1 {
                    continue;
                }
                let b = bijection_27(t, q).unwrap();
                assert_eq!(b.f(0), 0);
                assert_eq!(b.h(0), 0);
                assert!(b.pairing_identity_holds(), "t={t} q={q}");
            }
        }
    }

    #[test]
    fn irr_counts_match_expected() {
        assert_eq!(irr_count(2, 3).unwrap(), 7);
        assert_eq!(irr_count(2, 4).unwrap(), 5);
        assert_eq!(irr_count(2, 5).unwrap(), 9);
    }
}
