//! Pairings between the fixed-point and twisted parameter sets, the
//! almost-character transform matrix, and the closed-form inner products
//! of modified Gelfand-Graev characters against almost characters and
//! cuspidal characteristic functions.

use alloc::vec::Vec;

use crate::exactalg::cyclo::{rat, CycLaurent};
use crate::orbits::CyclicF;
use crate::{Error, Result};

/// A label `x = (eps, z)` of the fixed-point set `M`: an F-stable
/// character index and a fixed-subgroup element index, both in `Z/a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MLabel {
    pub chi: u32,
    pub elt: u32,
}

/// A label `y = (eps', z')` of the twisted set `Mbar`: a character of
/// the fixed subgroup and a coinvariant class, both in `Z/a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MBarLabel {
    pub chi: u32,
    pub class: u32,
}

/// The pairing `{x, y} = |Omega^{F'}|^-1 eps(z') eps'(z)`.
///
/// With the cyclic context of order `t` and multiplier `q`, both factors
/// are `a`-th roots of unity for `a = gcd(t, q-1)` and the pairing is
/// exactly `a^-1 zeta_a^{x.chi * y.class + y.chi * x.elt}`.
pub fn pairing(ctx: &CyclicF, x: &MLabel, y: &MBarLabel) -> Result<CycLaurent> {
    let a = ctx.invariant_size();
    if x.chi >= a || x.elt >= a || y.chi >= a || y.class >= a {
        return Err(Error::InvalidLabel);
    }
    let e = x.chi as i64 * y.class as i64 + y.chi as i64 * x.elt as i64;
    Ok(CycLaurent::root_of_unity(a, e).scale(&rat(1, a as i64)))
}

/// The full transform matrix `R_x = sum_y {x,y} rho_y`: rows indexed by
/// `M`, columns by `Mbar`, entries exact.
pub struct TransformMatrix {
    pub a: u32,
    pub rows: Vec<MLabel>,
    pub cols: Vec<MBarLabel>,
    pub entries: Vec<Vec<CycLaurent>>,
}

pub fn transform_matrix(ctx: &CyclicF) -> TransformMatrix {
    let a = ctx.invariant_size();
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    for i in 0..a {
        for j in 0..a {
            rows.push(MLabel { chi: i, elt: j });
            cols.push(MBarLabel { chi: i, class: j });
        }
    }
    let entries = rows
        .iter()
        .map(|x| cols.iter().map(|y| pairing(ctx, x, y).unwrap()).collect())
        .collect();
    TransformMatrix { a, rows, cols, entries }
}

impl TransformMatrix {
    /// Exact unitarity `M M* = I`, verified through the factored row
    /// inner products: the pairing is a product of two cyclic Fourier
    /// kernels, so the `y`-sum factors into two geometric sums
    /// `S(delta) = sum_m zeta_a^{delta m}`, precomputed once per residue.
    pub fn is_unitary(&self) -> bool {
        let a = self.a;
        let geom: Vec<CycLaurent> = (0..a)
            .map(|d| {
                let mut s = CycLaurent::zero();
                for m in 0..a {
                    s = s.add(&CycLaurent::root_of_unity(a, d as i64 * m as i64));
                }
                s
            })
            .collect();
        let inv_a2 = rat(1, (a as i64) * (a as i64));
        for x1 in &self.rows {
            for x2 in &self.rows {
                let d1 = ((x1.chi + a) - x2.chi) % a;
                let d2 = ((x1.elt + a) - x2.elt) % a;
                let prod = geom[d1 as usize].mul(&geom[d2 as usize]).scale(&inv_a2);
                let expect = if x1 == x2 { CycLaurent::one() } else { CycLaurent::zero() };
                if prod != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Row sums of `|entry|^2` (each must be exactly 1).
    pub fn row_norms(&self) -> Vec<CycLaurent> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .fold(CycLaurent::zero(), |acc, e| acc.add(&e.abs_sq()))
            })
            .collect()
    }
}

/// `<Gamma_{c,xi,theta'}, R_{z,eps}> = eps(c) xi(z) / |(Z_G/Z_G^0)^F|`
/// when the central characters match on `Z_G^{0F}`, else 0.
///
/// Labels: `c` a coinvariant class and `xi` a character of the fixed
/// subgroup (both mod `a`); `z` a fixed-subgroup element and `eps` an
/// F-stable character (both mod `a`), for `a = gcd(t, q-1)`.
pub fn gggr_vs_almost_inner(
    ctx: &CyclicF,
    c: u32,
    xi: u32,
    z: u32,
    eps: u32,
    theta_matches: bool,
) -> Result<CycLaurent> {
    let a = ctx.invariant_size();
    if c >= a || xi >= a || z >= a || eps >= a {
        return Err(Error::InvalidLabel);
    }
    if !theta_matches {
        return Ok(CycLaurent::zero());
    }
    let e = eps as i64 * c as i64 + xi as i64 * z as i64;
    Ok(CycLaurent::root_of_unity(a, e).scale(&rat(1, a as i64)))
}

/// `<Gamma_{c,xi,theta'}, chi_{E,z,eps}> = zeta^-1 xi(z) eps(c c_0)^-1
/// psi(z-hat^-1) theta'(z-dot) / |(Z_G/Z_G^0)^F|` on the matching
/// branch, else 0.
#[allow(clippy::too_many_arguments)]
pub fn cuspidal_charfun_inner(
    ctx: &CyclicF,
    c: u32,
    xi: u32,
    z: u32,
    eps: u32,
    zeta: &CycLaurent,
    c0: u32,
    central: &CycLaurent,
    theta_matches: bool,
) -> Result<CycLaurent> {
    let a = ctx.invariant_size();
    if c >= a || xi >= a || z >= a || eps >= a {
        return Err(Error::InvalidLabel);
    }
    if !zeta.is_unitary() || !central.is_unitary() {
        return Err(Error::InvalidLabel);
    }
    if !theta_matches {
        return Ok(CycLaurent::zero());
    }
    let zeta_inv = zeta.conj(); // inverse of a unitary value
    let e = xi as i64 * z as i64 - eps as i64 * (c as i64 + c0 as i64);
    Ok(CycLaurent::root_of_unity(a, e)
        .mul(&zeta_inv)
        .mul(central)
        .scale(&rat(1, a as i64)))
}

/// Extracts the scalar of the cuspidal case by comparing the two inner
/// products over every `(c, xi)` row: the ratio must be constant and
/// equal to `zeta^-1 eps(c_0)^-1` (times the configured central factor).
pub fn extract_cuspidal_scalar(
    ctx: &CyclicF,
    eps: u32,
    zeta: &CycLaurent,
    c0: u32,
    central: &CycLaurent,
) -> Result<CycLaurent> {
    let a = ctx.invariant_size();
    if eps >= a {
        return Err(Error::InvalidLabel);
    }
    // fix any (z, eps); the chi_{E,z,eps} side pairs against R_{z, eps^-1}
    let z = 0u32;
    let eps_inv = (a - eps) % a;
    let mut common: Option<CycLaurent> = None;
    for c in 0..a {
        for xi in 0..a {
            let lhs = cuspidal_charfun_inner(ctx, c, xi, z, eps, zeta, c0, central, true)?;
            let rhs = gggr_vs_almost_inner(ctx, c, xi, z, eps_inv, true)?;
            let ratio = lhs.mul(&rhs.mul(&CycLaurent::from_int(a as i64)).try_inverse()?)
                .mul(&CycLaurent::from_int(a as i64));
            match &common {
                None => common = Some(ratio),
                Some(prev) => {
                    if prev != &ratio {
                        return Err(Error::UniquenessViolation);
                    }
                }
            }
        }
    }
    common.ok_or(Error::NoSolution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyclo::rat_int;

    #[test]
    fn pairing_examples() {
        // size-a context, all-trivial labels -> 1/a
        let ctx = CyclicF::new(6, 7); // a = 6
        let v = pairing(&ctx, &MLabel { chi: 0, elt: 0 }, &MBarLabel { chi: 0, class: 0 }).unwrap();
        assert_eq!(v, CycLaurent::from_rat(rat(1, 6)));
        // t=2, q odd: (sign, 1) vs (sign, 1) -> 1/2
        let ctx = CyclicF::new(2, 3);
        let v = pairing(&ctx, &MLabel { chi: 1, elt: 0 }, &MBarLabel { chi: 1, class: 0 }).unwrap();
        assert_eq!(v, CycLaurent::from_rat(rat(1, 2)));
        // both nontrivial factors: (-1)(-1)/2 = 1/2
        let v = pairing(&ctx, &MLabel { chi: 1, elt: 1 }, &MBarLabel { chi: 1, class: 1 }).unwrap();
        assert_eq!(v, CycLaurent::from_rat(rat(1, 2)));
    }

    #[test]
    fn transform_examples() {
        // trivial context: [1]
        let m = transform_matrix(&CyclicF::new(1, 2));
        assert_eq!(m.entries.len(), 1);
        assert_eq!(m.entries[0][0], CycLaurent::one());
        // t=2, q=3: 4x4, entries +-1/2, unitary
        let m = transform_matrix(&CyclicF::new(2, 3));
        assert_eq!(m.entries.len(), 4);
        for row in &m.entries {
            for e in row {
                let doubled = e.scale(&rat_int(2));
                assert!(doubled == CycLaurent::one() || doubled == CycLaurent::from_int(-1));
            }
        }
        assert!(m.is_unitary());
        // t=3, q=4: 9x9 with entries (1/3) zeta_3^k
        let m = transform_matrix(&CyclicF::new(3, 4));
        assert_eq!(m.entries.len(), 9);
        assert!(m.is_unitary());
        for n in m.row_norms() {
            assert_eq!(n, CycLaurent::one());
        }
    }

    #[test]
    fn lemma_75_examples() {
        let ctx = CyclicF::new(2, 3);
        let v = gggr_vs_almost_inner(&ctx, 0, 0, 0, 0, true).unwrap();
        assert_eq!(v, CycLaurent::from_rat(rat(1, 2)));
        assert_eq!(
            gggr_vs_almost_inner(&ctx, 0, 0, 0, 0, false).unwrap(),
            CycLaurent::zero()
        );
        // generators and faithful characters: (-1)(-1)/2 = 1/2
        let v = gggr_vs_almost_inner(&ctx, 1, 1, 1, 1, true).unwrap();
        assert_eq!(v, CycLaurent::from_rat(rat(1, 2)));
    }

    #[test]
    fn lemma_77_examples() {
        let ctx = CyclicF::new(2, 3);
        let one = CycLaurent::one();
        let v = cuspidal_charfun_inner(&ctx, 0, 0, 0, 0, &one, 0, &one, true).unwrap();
        assert_eq!(v, CycLaurent::from_rat(rat(1, 2)));
        // symbolic fourth root: i^-1 / 2 = -i/2
        let i = CycLaurent::root_of_unity(4, 1);
        let v = cuspidal_charfun_inner(&ctx, 0, 0, 0, 0, &i, 0, &one, true).unwrap();
        assert_eq!(v, CycLaurent::root_of_unity(4, 3).scale(&rat(1, 2)));
    }

    #[test]
    fn scalar_extraction() {
        for (t, q) in [(2u32, 3u64), (3, 4)] {
            let ctx = CyclicF::new(t, q);
            let a = ctx.invariant_size();
            for zeta_pow in 0..4i64 {
                let zeta = CycLaurent::root_of_unity(4, zeta_pow);
                for c0 in 0..a {
                    for eps in 0..a {
                        let got = extract_cuspidal_scalar(&ctx, eps, &zeta, c0, &CycLaurent::one())
                            .unwrap();
                        let expect = zeta
                            .conj()
                            .mul(&CycLaurent::root_of_unity(a, -(eps as i64 * c0 as i64)));
                        assert_eq!(got, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn unitarity_small_sweep() {
        // the full t <= 24 sweep lives in the acceptance suite
        for t in 1..=8u32 {
            for r in 1..=t {
                if num_integer::Integer::gcd(&(r as i64), &(t as i64)) != 1 {
                    continue;
                }
                let m = transform_matrix(&CyclicF::new(t, r as u64));
                assert!(m.is_unitary(), "t={t} r={r}");
            }
        }
    }
}
