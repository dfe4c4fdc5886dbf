//! Kostka-Foulkes polynomials, intersection-cohomology matrix entries in
//! their rescaled form, torus and group orders, and the unipotent-support
//! inner product formulas.

pub mod hall_littlewood;
pub mod kostka;

use alloc::vec::Vec;

use crate::exactalg::cyclo::{CycLaurent, LaurentFraction, Rat};
use crate::exactalg::{sn_char_value, Partition, SnCharLabel};
use crate::springer::{block_contains, springer_inverse, Block, PairLabel};
use crate::{Error, Result};

pub use hall_littlewood::kostka_via_hall_littlewood;
pub use kostka::{charge, kostka, ssyt, ssyt_count, IntPolynomial};

/// The rescaled intersection-cohomology entry attached to a pair of
/// labels in a block: the polynomial `T(t)` with
/// `T(t) = t^{(dim supp(iota') - dim supp(iota''))/2} BP_{iota'',iota'}(t^-1)`,
/// which for supports `O_lambda ⊇ O_mu` equals the Kostka-Foulkes
/// polynomial `K_{lambda/d, mu/d}(t)`.
///
/// Zero when the supports are incomparable, `1` on the diagonal.
pub fn p_polynomial(
    iota2: &PairLabel, // iota'' (the smaller support)
    iota1: &PairLabel, // iota'
    block: &Block,
) -> Result<IntPolynomial> {
    if !block_contains(block, iota2) || !block_contains(block, iota1) {
        return Err(Error::InvalidLabel);
    }
    if iota2 == iota1 {
        return Ok(IntPolynomial::one());
    }
    if !iota1.orbit.dominates(&iota2.orbit) {
        return Ok(IntPolynomial::zero());
    }
    let lam = springer_inverse(block, iota1)?;
    let mu = springer_inverse(block, iota2)?;
    kostka(&lam, &mu)
}

/// `BP_{iota'',iota'}(q^-1)` as an exact Laurent value in `u`:
/// `q^{-(dim supp(iota') - dim supp(iota''))/2} K(q)`.
pub fn bp_at_q_inverse(iota2: &PairLabel, iota1: &PairLabel, block: &Block) -> Result<CycLaurent> {
    let k = p_polynomial(iota2, iota1, block)?;
    let d1 = crate::orbits::orbit_dims(&iota1.orbit).dim_orbit as i64;
    let d2 = crate::orbits::orbit_dims(&iota2.orbit).dim_orbit as i64;
    let mut acc = CycLaurent::zero();
    for (j, &c) in k.coeffs.iter().enumerate() {
        if c != 0 {
            // K(q) has q^j = u^{2j}; the prefactor is u^{-(d1-d2)}
            acc = acc.add(&CycLaurent::from_int(c).mul(&CycLaurent::u_pow(2 * j as i64 - (d1 - d2))));
        }
    }
    Ok(acc)
}

/// `BP_{iota'',iota'}(q)` as an exact Laurent value in `u`:
/// `q^{(dim supp(iota') - dim supp(iota''))/2} K(q^-1)`.
pub fn bp_at_q(iota2: &PairLabel, iota1: &PairLabel, block: &Block) -> Result<CycLaurent> {
    let k = p_polynomial(iota2, iota1, block)?;
    let d1 = crate::orbits::orbit_dims(&iota1.orbit).dim_orbit as i64;
    let d2 = crate::orbits::orbit_dims(&iota2.orbit).dim_orbit as i64;
    let mut acc = CycLaurent::zero();
    for (j, &c) in k.coeffs.iter().enumerate() {
        if c != 0 {
            acc = acc.add(&CycLaurent::from_int(c).mul(&CycLaurent::u_pow((d1 - d2) - 2 * j as i64)));
        }
    }
    Ok(acc)
}

/// `|Z^0_{L_w}{}^F|` for `w` of cycle type `rho` in the relative Weyl
/// group: `prod_i (q^{rho_i} - 1) / (q - 1)`.
pub fn torus_order(rho: &Partition) -> CycLaurent {
    let mut num = CycLaurent::one();
    for &r in rho.parts() {
        num = num.mul(&CycLaurent::q_pow_minus_one(r as i64));
    }
    num.div_exact(&CycLaurent::q_pow_minus_one(1))
        .expect("q - 1 always divides the product")
}

/// `|SL_n(F_q)| = q^{n(n-1)/2} prod_{i=2}^{n} (q^i - 1)`.
pub fn group_order(n: u32) -> CycLaurent {
    let mut acc = CycLaurent::q_pow((n as i64 * (n as i64 - 1)) / 2);
    for i in 2..=n as i64 {
        acc = acc.mul(&CycLaurent::q_pow_minus_one(i));
    }
    acc
}

/// Per-class data shared by all the inner products of one block: the
/// class, its centralizer order, and the exact polynomial quotient
/// `|G^F| / |Z^{0F}_{L_w}|` (every torus order divides the group order).
pub struct BlockClassData {
    pub classes: Vec<(Partition, u64, CycLaurent)>,
}

pub fn block_class_data(block: &Block) -> BlockClassData {
    let g = group_order(block.n);
    let classes = Partition::all(block.weyl_degree)
        .into_iter()
        .map(|rho| {
            let q = g
                .div_exact(&torus_order(&rho))
                .expect("torus orders divide the group order");
            let z = rho.centralizer_order();
            (rho, z, q)
        })
        .collect();
    BlockClassData { classes }
}

/// The inner-product kernel `omega_{iota,iota'}` of a block:
///
/// `|W|^-1 q^{-(codim C + codim C')/2 + dim Z_L^0} |G^F|
///    sum_w |Z^{0F}_{L_w}|^-1 Tr(w, E_iota) Tr(w, E_iota')`.
///
/// Zero for labels from different blocks.  The result is always a
/// Laurent polynomial in `u`.
pub fn omega(iota: &PairLabel, iota1: &PairLabel, block: &Block) -> Result<CycLaurent> {
    if !block_contains(block, iota) || !block_contains(block, iota1) {
        return Ok(CycLaurent::zero());
    }
    omega_with_data(iota, iota1, block, &block_class_data(block))
}

/// As [`omega`], with the per-block class data precomputed.
pub fn omega_with_data(
    iota: &PairLabel,
    iota1: &PairLabel,
    block: &Block,
    data: &BlockClassData,
) -> Result<CycLaurent> {
    if !block_contains(block, iota) || !block_contains(block, iota1) {
        return Ok(CycLaurent::zero());
    }
    let e1 = SnCharLabel::new(springer_inverse(block, iota)?);
    let e2 = SnCharLabel::new(springer_inverse(block, iota1)?);
    let mut acc = CycLaurent::zero();
    for (rho, z, quotient) in &data.classes {
        let x1 = sn_char_value(&e1, rho)?;
        let x2 = sn_char_value(&e2, rho)?;
        if x1 == 0 || x2 == 0 {
            continue;
        }
        let weight = Rat::new((x1 * x2).into(), (*z as i64).into());
        acc = acc.add(&quotient.scale(&weight));
    }
    let c1 = crate::orbits::orbit_dims(&iota.orbit).codim as i64;
    let c2 = crate::orbits::orbit_dims(&iota1.orbit).codim as i64;
    Ok(acc.shift_u(-(c1 + c2) + 2 * block.dim_center_levi() as i64))
}

/// `<X_iota, X_iota'> = |G^F|^-1 omega_{iota,iota'}`, as a reduced
/// fraction of `u`-Laurent polynomials.
pub fn x_inner(iota: &PairLabel, iota1: &PairLabel, block: &Block) -> Result<LaurentFraction> {
    if !block_contains(block, iota) || !block_contains(block, iota1) {
        return Ok(LaurentFraction::zero());
    }
    let w = omega(iota, iota1, block)?;
    Ok(LaurentFraction::new(w, group_order(block.n)))
}

/// All `(iota, iota')` entries of the block Gram matrix
/// `[<X_iota, X_iota'>]` in the member order of [`Block::members`].
pub fn x_gram(block: &Block) -> Result<Vec<Vec<LaurentFraction>>> {
    let members = block.members();
    let data = block_class_data(block);
    let order = group_order(block.n);
    let mut rows = Vec::with_capacity(members.len());
    for a in &members {
        let mut row = Vec::with_capacity(members.len());
        for b in &members {
            let w = omega_with_data(a, b, block, &data)?;
            row.push(LaurentFraction::new(w, order.clone()));
        }
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyclo::{rat, rat_int};
    use crate::springer::{blocks, springer_map};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn torus_order_examples() {
        assert_eq!(torus_order(&p(&[1, 1])), CycLaurent::q_pow_minus_one(1));
        let qp1 = CycLaurent::q_pow(1).add(&CycLaurent::one());
        assert_eq!(torus_order(&p(&[2])), qp1);
        let expect = CycLaurent::q_pow(2).add(&CycLaurent::q_pow(1)).add(&CycLaurent::one());
        assert_eq!(torus_order(&p(&[3])), expect);
    }

    #[test]
    fn group_order_examples() {
        let g2 = group_order(2);
        assert_eq!(g2.eval_q(&rat_int(3)).unwrap().as_rational().unwrap(), rat_int(24));
        assert_eq!(g2.eval_q(&rat_int(4)).unwrap().as_rational().unwrap(), rat_int(60));
        assert_eq!(
            group_order(3).eval_q(&rat_int(2)).unwrap().as_rational().unwrap(),
            rat_int(168)
        );
    }

    #[test]
    fn omega_sl2_examples() {
        let bs = blocks(2, 3);
        let principal = &bs[0];
        let reg = springer_map(principal, &p(&[2]));
        let zero = springer_map(principal, &p(&[1, 1]));
        assert_eq!(omega(&reg, &reg, principal).unwrap(), CycLaurent::q_pow(2));
        assert_eq!(omega(&reg, &zero, principal).unwrap(), CycLaurent::one());
        assert_eq!(omega(&zero, &zero, principal).unwrap(), CycLaurent::one());
        // mixed blocks vanish
        let twisted = &bs[1];
        let cusp = springer_map(twisted, &p(&[1]));
        assert_eq!(omega(&reg, &cusp, principal).unwrap(), CycLaurent::zero());
    }

    #[test]
    fn omega_symmetry_small() {
        for n in 2..=6u32 {
            for b in blocks(n, if n % 2 == 0 { 3 } else { 2 }) {
                let members = b.members();
                for x in &members {
                    for y in &members {
                        assert_eq!(omega(x, y, &b).unwrap(), omega(y, x, &b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn x_inner_examples() {
        let bs = blocks(2, 3);
        let principal = &bs[0];
        let reg = springer_map(principal, &p(&[2]));
        let f = x_inner(&reg, &reg, principal).unwrap();
        // q / (q^2 - 1)
        assert_eq!(f.num, CycLaurent::q_pow(1));
        assert_eq!(f.den, CycLaurent::q_pow_minus_one(2));
        assert_eq!(f.eval_q(&rat_int(3)).unwrap(), rat(3, 8));
    }

    #[test]
    fn p_polynomial_examples() {
        let bs = blocks(2, 3);
        let principal = &bs[0];
        let reg = springer_map(principal, &p(&[2]));
        let zero = springer_map(principal, &p(&[1, 1]));
        assert_eq!(
            p_polynomial(&reg, &reg, principal).unwrap(),
            IntPolynomial::one()
        );
        // K_{(2),(1,1)} = t, and BP = 1 after rescaling
        assert_eq!(
            p_polynomial(&zero, &reg, principal).unwrap(),
            IntPolynomial::monomial(1, 1)
        );
        assert_eq!(bp_at_q(&zero, &reg, principal).unwrap(), CycLaurent::one());
        assert_eq!(
            bp_at_q_inverse(&zero, &reg, principal).unwrap(),
            CycLaurent::one()
        );
        // incomparable supports
        assert!(p_polynomial(&reg, &zero, principal).unwrap().is_zero());
    }
}
