//! Character-sheaf bookkeeping for `SL_n`: the cuspidal census, the
//! endomorphism-algebra shape of an induced complex, family parameters,
//! the linear characters carrying the `X_M`-action, the location rule
//! matching induced-complex summands with almost-character labels, and
//! the factored scalar record.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::exactalg::chars::{
    permutations, sn_char_value, wreath_embedded_cycle_type, CharTable, ExtendedCharLabel,
};
use crate::exactalg::cyclo::{rat, CycLaurent, Rat};
use crate::exactalg::{Partition, SnCharLabel};
use crate::orbits::{prime_to_p_part, CyclicF};
use crate::{Error, Result};

/// Label of an F-stable cuspidal character sheaf of `SL_n`: a central
/// component `z`, a faithful local-system index on the regular class,
/// and the (trivial, for `SL_n`) tame tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalLabel {
    /// Index of `z` in the fixed points of `Z_G/Z_G^0`.
    pub z: u32,
    /// Faithful F-stable character index of `A_G(z u_1) = Z/n`.
    pub eps: u32,
}

/// All F-stable cuspidal character-sheaf labels.
///
/// Nonempty only when `p` does not divide `n` (the cuspidal datum needs
/// a Coxeter-order cyclic `Omega`), in which case the count is
/// `|(Z/n)^F| * #(F-stable faithful characters)`.
pub fn cuspidal_census(n: u32, q: u64, p: u32) -> Vec<CuspidalLabel> {
    let n_prime = prime_to_p_part(n, p);
    if n_prime != n {
        return Vec::new();
    }
    let a = CyclicF::new(n, q);
    let mut out = Vec::new();
    for z in 0..a.invariant_size() {
        for eps in a.stable_char_indices() {
            if (eps as i64).gcd(&(n as i64)) == 1 {
                out.push(CuspidalLabel { z, eps });
            }
        }
    }
    out
}

/// Shape of the endomorphism algebra of the complex induced from a
/// cuspidal datum of the standard Levi with blocks of size `d`, in the
/// series of the order-`t` special class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoData {
    pub n: u32,
    pub t: u32,
    pub d: u32,
    pub q: u64,
    /// Degree of each symmetric-group factor: `n/t`.
    pub factor_degree: u32,
    /// Number of factors: `t/d`.
    pub factor_count: u32,
    /// `Omega_{theta_1} = Z/(t/d)` with the `F''`-multiplier.
    pub omega: CyclicF,
}

pub fn endomorphism_data(n: u32, t: u32, d: u32, q: u64) -> Result<EndoData> {
    if t == 0 || d == 0 || n % t != 0 || t % d != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let p = crate::lseries::smallest_prime_factor(q as u32);
    if (t as i64).gcd(&(p as i64)) != 1 {
        return Err(Error::DivisibilityViolated);
    }
    Ok(EndoData {
        n,
        t,
        d,
        q,
        factor_degree: n / t,
        factor_count: t / d,
        omega: CyclicF::new(t / d, q),
    })
}

/// `X_M = Z/(t/d)` with the `F''`-action.
pub fn xm_group(t: u32, d: u32, q: u64) -> Result<CyclicF> {
    if d == 0 || t % d != 0 {
        return Err(Error::DivisibilityViolated);
    }
    Ok(CyclicF::new(t / d, q))
}

/// The family parameter set `M_{L,E} = Omega_{L,E} x Omega_{L,E}^` with
/// its multiplicity pairing `(A : R) = |Omega|^-1 (-1)^{l(x_A)}
/// theta(x_A)^-1`.
#[derive(Clone, Debug)]
pub struct FamilyParam {
    /// Order of `Omega_{L,E}`.
    pub e: u32,
    /// Members `(x, theta)`.
    pub members: Vec<(u32, u32)>,
    /// `multiplicity[member][theta']`, exact values.
    pub multiplicity: Vec<Vec<CycLaurent>>,
}

/// Length (inversion count) in `S_n` of the `j`-th power of the block
/// shift `w_0` permuting `t` blocks of size `n/t` cyclically.
fn block_shift_length(n: u32, t: u32, j: u32) -> u64 {
    let m = (n / t) as usize;
    let t = t as usize;
    let j = j as usize % t;
    // point (b, r) -> position ((b + j) mod t) * m + r
    let perm: Vec<usize> = (0..n as usize)
        .map(|x| {
            let b = x / m;
            let r = x % m;
            ((b + j) % t) * m + r
        })
        .collect();
    let mut inv = 0u64;
    for a in 0..perm.len() {
        for b in (a + 1)..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// Builds the family parameter set for `Omega_{L,E}` of order
/// `stab_order` inside `Omega_L = Z/t`, with `w_0` the block shift of
/// `t` blocks of size `n/t`.
pub fn family_param(n: u32, t: u32, stab_order: u32) -> Result<FamilyParam> {
    if t == 0 || n % t != 0 || stab_order == 0 || t % stab_order != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let e = stab_order;
    let mut members = Vec::new();
    for x in 0..e {
        for th in 0..e {
            members.push((x, th));
        }
    }
    let multiplicity = members
        .iter()
        .map(|&(x, _)| {
            // x as the power w_0^{(t/e) x} of the block shift
            let len = block_shift_length(n, t, (t / e) * x % t);
            let sign: i64 = if len % 2 == 0 { 1 } else { -1 };
            (0..e)
                .map(|thp| {
                    CycLaurent::root_of_unity(e, -(thp as i64) * x as i64)
                        .scale(&rat(sign, e as i64))
                })
                .collect()
        })
        .collect();
    Ok(FamilyParam { e, members, multiplicity })
}

/// The linear character `Psi_x` of `Omega_{theta_1}`:
/// `y_0^j -> zeta_{t/d}^{-x j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiChar {
    pub modulus: u32,
    pub x: u32,
}

pub fn psi_character(x: u32, ctx: &EndoData) -> Result<PsiChar> {
    if x >= ctx.omega.order {
        return Err(Error::OrderMismatch);
    }
    Ok(PsiChar { modulus: ctx.omega.order, x })
}

impl PsiChar {
    pub fn value(&self, j: u32) -> CycLaurent {
        CycLaurent::root_of_unity(self.modulus, -((self.x as i64) * (j as i64)))
    }

    /// Character index of `Psi_x` in `(Z/(t/d))^`: `-x mod t/d`.
    pub fn char_index(&self) -> u32 {
        (self.modulus - self.x % self.modulus) % self.modulus
    }
}

/// The pull back `eps_1` of an order-`d` central character along
/// `Abar_lambda = Z/t -> Z/d`; returns its index in `(Z/t)^`.
pub fn eps1_pullback(eps: u32, mu: &Partition, t: u32, d: u32) -> Result<u32> {
    if d == 0 || t % d != 0 || eps >= d {
        return Err(Error::DivisibilityViolated);
    }
    for &part in mu.parts() {
        if part % t != 0 {
            return Err(Error::DivisibilityViolated);
        }
    }
    Ok((t / d) * eps)
}

/// Result of the location rule: the unique `x_E` in `X_M^{F''}` whose
/// `Psi`-twist matches the Springer label of the orbit, and its image
/// `z_E` in `Abar_lambda^F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Location {
    pub x_e: u32,
    pub z_e: u32,
}

/// Theorem-8.6-type location: computes
/// `<E (x) Psi_x, E_iota>_{W_{theta_1}}` for every `x` and asserts that
/// exactly one `x` gives 1 and the rest give 0 (hard failure otherwise).
///
/// `E` is the extension with base `E_2 = chi^beta` repeated `t/d` times
/// (optionally twisted); the orbit is `mu = t * beta` and the Springer
/// label of the block member supported there restricts to the test
/// character.  `z_E = d * x_E` in `Abar_lambda = Z/t`.
pub fn locate_ze(e: &ExtendedCharLabel, mu: &Partition, ctx: &EndoData) -> Result<Location> {
    let m = ctx.factor_degree as usize;
    let k = ctx.factor_count as usize;
    if e.base.n != ctx.factor_degree || e.repeats != ctx.factor_count {
        return Err(Error::InvalidLabel);
    }
    // the orbit determined by the base partition: mu = t * beta
    let expected = e.base.partition.scale(ctx.t);
    if mu != &expected {
        return Err(Error::InvalidLabel);
    }
    // E_iota: Springer label of the block-d member supported on O_mu,
    // as a character of S_{n/d}
    let lam_over_d = mu.unscale(ctx.d)?;
    let test_label = SnCharLabel::new(lam_over_d);

    if k == 1 {
        // W_{theta_1} is the symmetric group itself; the inner product
        // is a plain class sum
        let mut acc: Rat = rat(0, 1);
        for rho in Partition::all(ctx.factor_degree) {
            let a = sn_char_value(&e.base, &rho)?;
            let b = sn_char_value(&test_label, &rho)?;
            acc += rat(a * b, rho.centralizer_order() as i64);
        }
        if acc != rat(1, 1) {
            return Err(Error::UniquenessViolation);
        }
        return Ok(Location { x_e: 0, z_e: 0 });
    }

    let big = CharTable::build(ctx.n / ctx.d);
    let perms = permutations(m);
    let group_order: u64 = {
        let mut f = 1u64;
        for i in 1..=m as u64 {
            f *= i;
        }
        f.pow(k as u32) * k as u64
    };

    // accumulate, for each twist residue r mod k, the sum over the group
    // of model_value * zeta_k^{r j} * E_iota(embedded class)
    let mut sums: Vec<CycLaurent> = vec![CycLaurent::zero(); k];
    let mut idx = vec![0usize; k];
    'outer: loop {
        let ws: Vec<Vec<usize>> = idx.iter().map(|&i| perms[i].clone()).collect();
        for j in 0..k as u32 {
            let model = crate::exactalg::chars::extension_model_value(&e.base, j, &ws)?;
            if model != 0 {
                let embedded = wreath_embedded_cycle_type(j, &ws, m);
                let big_val = big.value(&test_label.partition, &embedded);
                if big_val != 0 {
                    for (r, sum) in sums.iter_mut().enumerate() {
                        let tw = CycLaurent::root_of_unity(k as u32, r as i64 * j as i64);
                        *sum = sum.add(&tw.scale(&rat(model * big_val, 1)));
                    }
                }
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            idx[i] += 1;
            if idx[i] < perms.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }

    // <E (x) Psi_x, E_iota> uses twist residue (e.twist - x)
    let inv_order = rat(1, group_order as i64);
    let mut hit: Option<u32> = None;
    for x in 0..k as u32 {
        let r = ((e.twist as i64 - x as i64).rem_euclid(k as i64)) as usize;
        let ip = sums[r].scale(&inv_order);
        if ip == CycLaurent::one() {
            if hit.is_some() {
                return Err(Error::UniquenessViolation);
            }
            hit = Some(x);
        } else if !ip.is_zero() {
            return Err(Error::UniquenessViolation);
        }
    }
    let x_e = hit.ok_or(Error::UniquenessViolation)?;
    // for an F''-stable E the located class is F''-stable too
    let stable = (e.twist as u64 * (ctx.omega.multiplier as u64 + ctx.omega.order as u64 - 1))
        % ctx.omega.order as u64
        == 0;
    if stable
        && (x_e as u64 * (ctx.omega.multiplier as u64 + ctx.omega.order as u64 - 1))
            % ctx.omega.order as u64
            != 0
    {
        return Err(Error::UniquenessViolation);
    }
    Ok(Location {
        x_e,
        z_e: (ctx.d * x_e) % ctx.t,
    })
}

/// The factored form of the scalar `nu_E`: sign, `zeta^-1`,
/// `eps(c_0)^-1`, the extension root `alpha_E`, and the central factor.
/// Factors are kept separate so alternative conventions rescale instead
/// of invalidating downstream results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarRecord {
    pub sign: i8,
    pub zeta_inv: CycLaurent,
    pub eps_c0_inv: CycLaurent,
    pub alpha_e: CycLaurent,
    pub central: CycLaurent,
}

impl ScalarRecord {
    pub fn product(&self) -> CycLaurent {
        let s = CycLaurent::from_int(self.sign as i64);
        s.mul(&self.zeta_inv)
            .mul(&self.eps_c0_inv)
            .mul(&self.alpha_e)
            .mul(&self.central)
    }
}

/// Assembles the scalar record; every input must be a unit of modulus 1
/// (checked exactly), and so is the product.
pub fn nu_scalar(
    zeta: &CycLaurent,
    eps_c0: &CycLaurent,
    alpha_e: &CycLaurent,
    central: &CycLaurent,
    sign: i8,
) -> Result<ScalarRecord> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidLabel);
    }
    for v in [zeta, eps_c0, alpha_e, central] {
        if !v.is_unitary() {
            return Err(Error::InvalidLabel);
        }
    }
    let rec = ScalarRecord {
        sign,
        zeta_inv: zeta.conj(),
        eps_c0_inv: eps_c0.conj(),
        alpha_e: alpha_e.clone(),
        central: central.clone(),
    };
    debug_assert!(rec.product().is_unitary());
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn census_examples() {
        assert_eq!(cuspidal_census(2, 3, 3).len(), 2);
        assert_eq!(cuspidal_census(2, 4, 2).len(), 0);
        assert_eq!(cuspidal_census(3, 4, 2).len(), 6);
        // n' = 1 always empty
        assert_eq!(cuspidal_census(4, 4, 2).len(), 0);
    }

    #[test]
    fn endo_examples() {
        let d = endomorphism_data(2, 2, 1, 3).unwrap();
        assert_eq!((d.factor_degree, d.factor_count, d.omega.order), (1, 2, 2));
        let d = endomorphism_data(4, 2, 2, 5).unwrap();
        assert_eq!((d.factor_degree, d.factor_count, d.omega.order), (2, 1, 1));
        let d = endomorphism_data(4, 4, 2, 5).unwrap();
        assert_eq!((d.factor_degree, d.factor_count, d.omega.order), (1, 2, 2));
        assert!(endomorphism_data(4, 3, 1, 5).is_err());
    }

    #[test]
    fn xm_examples() {
        assert_eq!(xm_group(2, 1, 3).unwrap().order, 2);
        assert_eq!(xm_group(4, 2, 5).unwrap().order, 2);
        assert_eq!(xm_group(6, 6, 7).unwrap().order, 1);
    }

    #[test]
    fn family_examples() {
        let f = family_param(2, 2, 1).unwrap();
        assert_eq!(f.members.len(), 1);
        assert_eq!(f.multiplicity[0][0], CycLaurent::one());
        // Omega = Z/2 inside S_2: 4 members, entries +-1/2
        let f = family_param(2, 2, 2).unwrap();
        assert_eq!(f.members.len(), 4);
        for row in &f.multiplicity {
            for e in row {
                let doubled = e.scale(&crate::exactalg::cyclo::rat_int(2));
                assert!(
                    doubled == CycLaurent::one() || doubled == CycLaurent::from_int(-1)
                );
            }
        }
        // Omega = Z/3 inside S_3: entries (1/3) zeta_3^k (no signs)
        let f = family_param(3, 3, 3).unwrap();
        assert_eq!(f.members.len(), 9);
        for row in &f.multiplicity {
            let mut norm = CycLaurent::zero();
            for e in row {
                norm = norm.add(&e.abs_sq());
            }
            // row l2-norm = |Omega|^-1; scaled by |Omega| it is 1
            assert_eq!(
                norm.scale(&crate::exactalg::cyclo::rat_int(3)),
                CycLaurent::one()
            );
        }
    }

    #[test]
    fn psi_examples() {
        let ctx = endomorphism_data(2, 2, 1, 3).unwrap();
        let psi0 = psi_character(0, &ctx).unwrap();
        assert_eq!(psi0.value(1), CycLaurent::one());
        let psi1 = psi_character(1, &ctx).unwrap();
        assert_eq!(psi1.value(1), CycLaurent::from_int(-1));
        let ctx = endomorphism_data(3, 3, 1, 4).unwrap();
        let psi1 = psi_character(1, &ctx).unwrap();
        assert_eq!(psi1.value(1), CycLaurent::root_of_unity(3, -1));
    }

    #[test]
    fn psi_bijection() {
        // {Psi_x : x in X_M^{F''}} = (Omega^)^{F''}, for all moduli <= 24
        for k in 1..=24u32 {
            for r in 1..=k {
                if (r as i64).gcd(&(k as i64)) != 1 {
                    continue;
                }
                let xm = CyclicF::new(k, r as u64);
                let stable_chars = xm.stable_char_indices();
                let mut images: Vec<u32> = xm
                    .fixed_points()
                    .iter()
                    .map(|&x| (k - x % k) % k)
                    .collect();
                images.sort_unstable();
                let mut expect = stable_chars.clone();
                expect.sort_unstable();
                assert_eq!(images, expect, "k={k} r={r}");
            }
        }
    }

    #[test]
    fn eps1_examples() {
        assert_eq!(eps1_pullback(0, &p(&[2]), 2, 1).unwrap(), 0);
        assert_eq!(eps1_pullback(1, &p(&[2]), 2, 2).unwrap(), 1);
        assert_eq!(eps1_pullback(1, &p(&[4]), 4, 2).unwrap(), 2); // order 2 in Z/4
        assert!(eps1_pullback(1, &p(&[3]), 2, 2).is_err());
    }

    #[test]
    fn locate_examples() {
        // n=2, t=2, d=1, q=3
        let ctx = endomorphism_data(2, 2, 1, 3).unwrap();
        let base = SnCharLabel::new(p(&[1]));
        let triv = ExtendedCharLabel::new(base.clone(), 2, 0);
        let loc = locate_ze(&triv, &p(&[2]), &ctx).unwrap();
        assert_eq!((loc.x_e, loc.z_e), (0, 0));
        let twisted = ExtendedCharLabel::new(base, 2, 1);
        let loc = locate_ze(&twisted, &p(&[2]), &ctx).unwrap();
        assert_eq!((loc.x_e, loc.z_e), (1, 1));
        // d = t: X_M trivial, z_E = 0
        let ctx = endomorphism_data(2, 2, 2, 3).unwrap();
        let e = ExtendedCharLabel::new(SnCharLabel::new(p(&[1])), 1, 0);
        let loc = locate_ze(&e, &p(&[2]), &ctx).unwrap();
        assert_eq!((loc.x_e, loc.z_e), (0, 0));
    }

    #[test]
    fn scalar_record_contract() {
        let i = CycLaurent::root_of_unity(4, 1);
        let one = CycLaurent::one();
        let rec = nu_scalar(&i, &one, &one, &one, 1).unwrap();
        assert_eq!(rec.product(), i.conj());
        assert!(rec.product().is_unitary());
        // cuspidal reduction: zeta^-1 eps(c0)^-1
        let epsv = CycLaurent::root_of_unity(3, 1);
        let rec = nu_scalar(&i, &epsv, &one, &one, 1).unwrap();
        assert_eq!(rec.product(), i.conj().mul(&epsv.conj()));
        // non-unit input rejected
        assert!(nu_scalar(&CycLaurent::from_int(2), &one, &one, &one, 1).is_err());
    }
}
