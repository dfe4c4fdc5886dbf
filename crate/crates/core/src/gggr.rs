//! Generalized Gelfand-Graev inner products against the `X`-basis of a
//! block: the regular-nilpotent closed form, the general closed form,
//! full projection coefficients, and `Y`-values on twisted nilpotents.

use alloc::vec::Vec;

use crate::exactalg::cyclo::{rat, CycLaurent, Rat};
use crate::exactalg::{sn_char_value, Partition, SnCharLabel};
use crate::green::{bp_at_q_inverse, torus_order};
use crate::orbits::{self, CyclicF};
use crate::springer::{block_contains, springer_inverse, springer_map, Block, PairLabel};
use crate::{Error, Result};

/// Label of a generalized Gelfand-Graev character: an orbit, a twist
/// class in the coinvariants of `A_lambda`, and optionally a character
/// of the fixed subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGGRLabel {
    pub orbit: Partition,
    pub twist: u32,
    pub xi: Option<u32>,
}

/// `Y_{iota''}` evaluated on the opposed twisted nilpotent:
/// `tau(c c_0)` for the F-stable local system `tau` of the pair, with
/// `c, c_0` coinvariant classes of `A_G(u)`.
pub fn y_value_on_twist(
    iota2: &PairLabel,
    a_group: &CyclicF,
    c: u32,
    c0: u32,
) -> Result<CycLaurent> {
    let g = a_group.invariant_size();
    if c >= g || c0 >= g {
        return Err(Error::InvalidLabel);
    }
    // tau must be F-stable to define a function over F_q
    if (iota2.tau as u64 * (a_group.multiplier as u64 + a_group.order as u64 - 1))
        % a_group.order as u64
        != 0
    {
        return Err(Error::InvalidLabel);
    }
    Ok(a_group.stable_char_on_coinvariants(iota2.tau, (c + c0) % g))
}

/// The component group of the orbit of a pair, with the Frobenius of the
/// ambient `F_q`-structure.
pub fn a_group_of(iota: &PairLabel, block: &Block, q: u64) -> CyclicF {
    orbits::component_groups(&iota.orbit, block.p, q).a_g_u
}

/// Lemma-5.11-type closed form for regular `N`:
/// `q^{(dim Z_L^0 - codim supp(iota))/2} zeta^-1 eps(c c_0)^-1`
/// when `E_iota` is the sign character of the relative Weyl group
/// (vacuously so for a singleton block), else 0.
pub fn gggr_x_inner_regular(
    c: u32,
    c0: u32,
    iota: &PairLabel,
    block: &Block,
    zeta: &CycLaurent,
    q: u64,
) -> Result<CycLaurent> {
    if !block_contains(block, iota) {
        return Err(Error::InvalidLabel);
    }
    let m = block.weyl_degree;
    let sign_label = Partition::new(alloc::vec![1; m as usize]).unwrap();
    let mubar = springer_inverse(block, iota)?;
    if mubar != sign_label {
        return Ok(CycLaurent::zero());
    }
    // eps as a character of A_G(N_reg) = Z/n'; it must be F-stable for
    // the block to be F-stable at all
    let a_group = CyclicF::new(block.n_prime, q);
    let g = a_group.invariant_size();
    if c >= g || c0 >= g {
        return Err(Error::InvalidLabel);
    }
    if (block.eps_index as u64 * (q - 1)) % block.n_prime as u64 != 0 {
        return Err(Error::InvalidLabel);
    }
    let eps_val_inv = a_group
        .stable_char_on_coinvariants(block.eps_index, (c + c0) % g)
        .conj();
    let exponent = block.dim_center_levi() as i64
        - orbits::orbit_dims(&iota.orbit).codim as i64;
    Ok(CycLaurent::u_pow(exponent)
        .mul(&zeta.conj())
        .mul(&eps_val_inv))
}

/// Lemma-5.12(i) closed form for arbitrary `N` of type `mu_n`:
/// `q^{g(iota',iota)} zeta^-1 BP_{iota'',iota'}(q^-1)
///  conj(Y_{iota''}(-N_c*))` where `E_iota = E_{iota'} (x) sign` and
/// `iota''` is the block member supported on `O_N` (result 0 when the
/// block has no such member or the supports are incomparable).
pub fn gggr_x_inner(
    c: u32,
    c0: u32,
    mu_n: &Partition,
    iota: &PairLabel,
    block: &Block,
    zeta: &CycLaurent,
    q: u64,
) -> Result<CycLaurent> {
    if !block_contains(block, iota) {
        return Err(Error::InvalidLabel);
    }
    // the block supports O_N iff every part is divisible by d
    let mubar2 = match mu_n.unscale(block.d) {
        Err(_) => return Ok(CycLaurent::zero()),
        Ok(m) => m,
    };
    let iota2 = springer_map(block, &mubar2);
    // iota' with E_iota = E_{iota'} (x) sign: the dual Weyl label
    let mubar = springer_inverse(block, iota)?;
    let iota1 = springer_map(block, &mubar.dual());
    let bp = bp_at_q_inverse(&iota2, &iota1, block)?;
    if bp.is_zero() {
        return Ok(CycLaurent::zero());
    }
    let a_group = a_group_of(&iota2, block, q);
    let y = y_value_on_twist(&iota2, &a_group, c, c0)?;
    // g(iota', iota) as a u-exponent
    let exp = -(orbits::orbit_dims(&iota1.orbit).codim as i64)
        + block.dim_center_levi() as i64
        + orbits::orbit_dims(&iota.orbit).dim_orbit as i64
        - orbits::orbit_dims(mu_n).dim_orbit as i64;
    Ok(CycLaurent::u_pow(exp)
        .mul(&zeta.conj())
        .mul(&bp)
        .mul(&y.conj()))
}

/// Theorem-5.6 projection of `Gamma_c` onto the block: the coefficient
/// of each `X_{iota_1}`.
pub fn gggr_projection_coeffs(
    c: u32,
    c0: u32,
    mu_n: &Partition,
    block: &Block,
    zeta: &CycLaurent,
    q: u64,
) -> Result<Vec<(PairLabel, CycLaurent)>> {
    let members = block.members();
    // the Y factor vanishes unless the block supports O_N
    let mubar2 = match mu_n.unscale(block.d) {
        Err(_) => {
            return Ok(members.into_iter().map(|m| (m, CycLaurent::zero())).collect());
        }
        Ok(m) => m,
    };
    let iota2 = springer_map(block, &mubar2);
    let a_group = a_group_of(&iota2, block, q);
    let ybar = y_value_on_twist(&iota2, &a_group, c, c0)?.conj();

    let m = block.weyl_degree;
    let dim_g_mod_z = (block.n as i64 * block.n as i64 - 1) - block.dim_center_levi() as i64;
    let dim_on = orbits::orbit_dims(mu_n).dim_orbit as i64;

    let mut out = Vec::with_capacity(members.len());
    for iota_1 in &members {
        let mubar1 = springer_inverse(block, iota_1)?;
        let e1_twisted = SnCharLabel::new(mubar1.dual()); // E_{iota_1} (x) sign
        let mut coeff = CycLaurent::zero();
        for iota in &members {
            let mubar = springer_inverse(block, iota)?;
            let bp = bp_at_q_inverse(&iota2, iota, block)?;
            if bp.is_zero() {
                continue;
            }
            // |W|^-1 sum_w Tr(w, E_iota) Tr(w, E_{iota_1} (x) eps) |Z^{0F}_{L_w}|
            let e = SnCharLabel::new(mubar.clone());
            let mut wsum = CycLaurent::zero();
            for rho in Partition::all(m) {
                let x1 = sn_char_value(&e, &rho)?;
                let x2 = sn_char_value(&e1_twisted, &rho)?;
                if x1 == 0 || x2 == 0 {
                    continue;
                }
                let w: Rat = rat(x1 * x2, rho.centralizer_order() as i64);
                wsum = wsum.add(&torus_order(&rho).scale(&w));
            }
            let f_exp = -(orbits::orbit_dims(&iota_1.orbit).dim_orbit as i64)
                + orbits::orbit_dims(&iota.orbit).dim_orbit as i64
                - dim_on
                + dim_g_mod_z;
            coeff = coeff.add(&CycLaurent::u_pow(f_exp).mul(&wsum).mul(&bp));
        }
        out.push((iota_1.clone(), coeff.mul(&zeta.conj()).mul(&ybar)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::springer::blocks;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn y_value_examples() {
        // trivial tau: always 1
        let a = CyclicF::new(2, 3);
        let iota = PairLabel { orbit: p(&[2]), tau: 0 };
        assert_eq!(y_value_on_twist(&iota, &a, 1, 0).unwrap(), CycLaurent::one());
        // faithful tau on the generator class: -1
        let iota = PairLabel { orbit: p(&[2]), tau: 1 };
        assert_eq!(
            y_value_on_twist(&iota, &a, 1, 0).unwrap(),
            CycLaurent::from_int(-1)
        );
        assert_eq!(y_value_on_twist(&iota, &a, 0, 0).unwrap(), CycLaurent::one());
    }

    #[test]
    fn regular_inner_examples() {
        let bs = blocks(2, 3);
        let principal = &bs[0];
        let twisted = &bs[1];
        let one = CycLaurent::one();
        // twisted block: its unique member is the sign label vacuously
        let cusp = springer_map(twisted, &p(&[1]));
        let v = gggr_x_inner_regular(0, 0, &cusp, twisted, &one, 3).unwrap();
        assert_eq!(v, CycLaurent::u_pow(-1));
        // with symbolic zeta = i: u^-1 * (-i)
        let i = CycLaurent::root_of_unity(4, 1);
        let v = gggr_x_inner_regular(0, 0, &cusp, twisted, &i, 3).unwrap();
        assert_eq!(v, CycLaurent::u_pow(-1).mul(&i.conj()));
        // principal block, sign label: q^-1
        let zero = springer_map(principal, &p(&[1, 1]));
        let v = gggr_x_inner_regular(0, 0, &zero, principal, &one, 3).unwrap();
        assert_eq!(v, CycLaurent::q_pow(-1));
        // principal block, trivial label: 0
        let reg = springer_map(principal, &p(&[2]));
        let v = gggr_x_inner_regular(0, 0, &reg, principal, &one, 3).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn general_inner_examples() {
        let bs = blocks(2, 3);
        let principal = &bs[0];
        let one = CycLaurent::one();
        let reg = springer_map(principal, &p(&[2]));
        // mu_N = (1,1): g = 0, BP = 1, Y = 1 -> 1
        let v = gggr_x_inner(0, 0, &p(&[1, 1]), &reg, principal, &one, 3).unwrap();
        assert_eq!(v, CycLaurent::one());
        // mu_N = (2): the support of iota'' is not below iota' -> 0
        let v = gggr_x_inner(0, 0, &p(&[2]), &reg, principal, &one, 3).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn projection_example() {
        // SL2 twisted block, mu_N = (2): single coefficient u * zeta^-1
        let bs = blocks(2, 3);
        let twisted = &bs[1];
        let i = CycLaurent::root_of_unity(4, 1);
        let coeffs = gggr_projection_coeffs(0, 0, &p(&[2]), twisted, &i, 3).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs[0].1, CycLaurent::u_pow(1).mul(&i.conj()));
        // block with no member on O_N (parts not divisible by d): zero map
        let coeffs = gggr_projection_coeffs(0, 0, &p(&[1, 1]), twisted, &i, 3).unwrap();
        assert!(coeffs.iter().all(|(_, c)| c.is_zero()));
    }

    #[test]
    fn regular_specialization_matches_general() {
        // Lemma 5.11 equals Lemma 5.12(i) for regular N, symbolically
        for (n, q) in [(2u32, 3u64), (3, 4), (4, 5)] {
            let p_char = crate::lseries::smallest_prime_factor(q as u32);
            let reg = Partition::new(alloc::vec![n]).unwrap();
            for b in blocks(n, p_char) {
                // all members, all twist classes
                let a_group = CyclicF::new(
                    orbits::component_groups(&reg, p_char, q).a_g_u.order,
                    q,
                );
                for iota in b.members() {
                    for c in 0..a_group.invariant_size() {
                        let zeta = CycLaurent::root_of_unity(4, 1);
                        let lhs =
                            gggr_x_inner_regular(c, 0, &iota, &b, &zeta, q).unwrap();
                        let rhs = gggr_x_inner(c, 0, &reg, &iota, &b, &zeta, q).unwrap();
                        assert_eq!(lhs, rhs, "n={n} block d={} iota={iota:?}", b.d);
                    }
                }
            }
        }
    }
}
