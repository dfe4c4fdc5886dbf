//! Block decomposition of the set of pairs (unipotent class, local
//! system) and the generalized Springer correspondence for `SL_n`.
//!
//! Orientation convention: within the block of the order-`d` central
//! character, the trivial character of the relative Weyl group `S_{n/d}`
//! corresponds to the regular orbit `(n)` and the partition label `mubar`
//! to the orbit `d*mubar`.  This is the choice validated by the
//! Kostka/closure-order consistency checks in the `green` module.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::exactalg::Partition;
use crate::orbits;
use crate::{Error, Result};

/// A pair (nilpotent orbit, equivariant local system), the local system
/// given by a character index of `A_G(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLabel {
    pub orbit: Partition,
    /// Character index mod `n'_mu` (the order of `A_G(u)`).
    pub tau: u32,
}

/// A block of the generalized Springer correspondence for `SL_n`,
/// attached to a character `eps` of `Z_G/Z_G^0` of order `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub n: u32,
    pub p: u32,
    /// Largest divisor of `n` prime to `p`; the order of `Z_G/Z_G^0`.
    pub n_prime: u32,
    /// Order of the attached central character.
    pub d: u32,
    /// Index of `eps` in `(Z/n')^` (a residue of order `d`).
    pub eps_index: u32,
    /// The cuspidal support: Levi of type `(A_{d-1})^{n/d}`, regular
    /// class `C_0` of Jordan type `(d^{n/d})`, local system of index
    /// `eps_0` on it.
    pub cuspidal_orbit: Partition,
    /// Degree of the relative Weyl group `S_{n/d}`.
    pub weyl_degree: u32,
}

impl Block {
    /// `dim Z_L` for the block Levi inside `SL_n`.
    pub fn dim_center_levi(&self) -> u64 {
        (self.n / self.d) as u64 - 1
    }

    /// `codim_L C_0` (the regular class of the Levi): always `n - 1`.
    pub fn codim_cuspidal(&self) -> u64 {
        self.n as u64 - 1
    }

    /// All pair labels in this block, ordered by the reverse-lex order of
    /// the relative Weyl group labels.
    pub fn members(&self) -> Vec<PairLabel> {
        Partition::all(self.n / self.d)
            .into_iter()
            .map(|mubar| springer_map(self, &mubar))
            .collect()
    }
}

/// Half-integer exponents attached to a pair in a block, stored as
/// `u`-exponents (`q^b = u^{2b}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BValues {
    /// `2 * b(iota)` with `b(iota) = (codim_G supp - codim_L C_0)/2`.
    pub b_iota_u: i64,
    /// `2 * b_0` with `b_0 = (codim_L C_0 - dim Z_L)/2`.
    pub b0_u: i64,
}

/// The blocks of `SL_n` in characteristic `p`: one per character of
/// `Z_G/Z_G^0 = Z/n'`, grouped by order `d | n'`.
pub fn blocks(n: u32, p: u32) -> Vec<Block> {
    let n_prime = orbits::prime_to_p_part(n, p);
    let mut out = Vec::new();
    for d in 1..=n_prime {
        if n_prime % d != 0 {
            continue;
        }
        // characters of Z/n' of exact order d: indices (n'/d) * u with
        // gcd(u, d) = 1
        for u in 0..d {
            if (u as i64).gcd(&(d as i64)) != 1 {
                continue;
            }
            let eps_index = (n_prime / d) * u;
            let m = n / d;
            let cuspidal_orbit = Partition::new(alloc::vec![d; m as usize]).unwrap();
            out.push(Block {
                n,
                p,
                n_prime,
                d,
                eps_index,
                cuspidal_orbit,
                weyl_degree: m,
            });
        }
    }
    out.sort_by_key(|b| (b.d, b.eps_index));
    out
}

/// The generalized Springer correspondence on one block:
/// `mubar |-> (orbit d*mubar, the unique local system tau over eps)`.
pub fn springer_map(block: &Block, mubar: &Partition) -> PairLabel {
    assert_eq!(mubar.size(), block.n / block.d, "label size must be n/d");
    let orbit = mubar.scale(block.d);
    // A_G(u) has order n'_lambda = gcd(n', parts of orbit); the unique
    // tau restricting to eps along Z/n' -> Z/n'_lambda has index
    // eps_index / (n' / n'_lambda).
    let mut nl = block.n_prime;
    for &part in orbit.parts() {
        nl = nl.gcd(&part);
    }
    debug_assert_eq!(nl % block.d, 0);
    let tau = block.eps_index / (block.n_prime / nl);
    PairLabel { orbit, tau }
}

/// Inverse of [`springer_map`]: recovers the Weyl-group label.
pub fn springer_inverse(block: &Block, iota: &PairLabel) -> Result<Partition> {
    let mubar = iota.orbit.unscale(block.d)?;
    let expect = springer_map(block, &mubar);
    if &expect == iota {
        Ok(mubar)
    } else {
        Err(Error::InvalidLabel)
    }
}

/// Membership test: the pair lies in the block iff every part of its
/// orbit is divisible by `d` and its local system is the induced one.
pub fn block_contains(block: &Block, iota: &PairLabel) -> bool {
    springer_inverse(block, iota).is_ok()
}

/// The exponents `b(iota)` and `b_0` of the block, as `u`-exponents.
pub fn b_values(iota: &PairLabel, block: &Block) -> Result<BValues> {
    if !block_contains(block, iota) {
        return Err(Error::InvalidLabel);
    }
    let dims = orbits::orbit_dims(&iota.orbit);
    let codim_l = block.codim_cuspidal() as i64;
    let b_iota_u = dims.codim as i64 - codim_l;
    let b0_u = codim_l - block.dim_center_levi() as i64;
    Ok(BValues { b_iota_u, b0_u })
}

/// The wave-front map: merge the components of the multipartition and
/// take the dual partition.
pub fn wave_front(beta: &crate::exactalg::Multipartition) -> Partition {
    beta.merged().dual()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Multipartition;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn blocks_examples() {
        let b = blocks(2, 3);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].d, 1);
        assert_eq!(b[1].d, 2);
        assert_eq!(b[0].members().len(), 2);
        assert_eq!(b[1].members().len(), 1);

        assert_eq!(blocks(2, 2).len(), 1);

        let b = blocks(4, 3);
        let ds: Vec<u32> = b.iter().map(|x| x.d).collect();
        assert_eq!(ds, vec![1, 2, 4, 4]);
        assert_eq!(b[0].members().len(), 5);
        assert_eq!(b[1].members().len(), 2);
        assert_eq!(b[2].members().len(), 1);
    }

    #[test]
    fn springer_map_examples() {
        let b = blocks(2, 3);
        let principal = &b[0];
        let twisted = &b[1];
        let reg = springer_map(principal, &p(&[2]));
        assert_eq!(reg, PairLabel { orbit: p(&[2]), tau: 0 });
        let cusp = springer_map(twisted, &p(&[1]));
        assert_eq!(cusp.orbit, p(&[2]));
        assert_eq!(cusp.tau, 1); // faithful character of Z/2
        let zero = springer_map(principal, &p(&[1, 1]));
        assert_eq!(zero, PairLabel { orbit: p(&[1, 1]), tau: 0 });
    }

    #[test]
    fn inverse_roundtrip() {
        for n in 1..=20u32 {
            for pr in [2u32, 3, 5, 7] {
                for b in blocks(n, pr) {
                    for mubar in Partition::all(n / b.d) {
                        let iota = springer_map(&b, &mubar);
                        for &part in iota.orbit.parts() {
                            assert_eq!(part % b.d, 0);
                        }
                        assert_eq!(springer_inverse(&b, &iota).unwrap(), mubar);
                    }
                }
            }
        }
    }

    #[test]
    fn census_identity() {
        // sum over mu of n'_mu = sum over d | n' of phi(d) p(n/d)
        for pr in [2u32, 3, 5, 7] {
            for n in 1..=30u32 {
                let n_prime = orbits::prime_to_p_part(n, pr);
                let mut lhs: u64 = 0;
                for mu in Partition::all(n) {
                    let mut g = n_prime;
                    for &part in mu.parts() {
                        g = g.gcd(&part);
                    }
                    lhs += g as u64;
                }
                let mut rhs: u64 = 0;
                for d in 1..=n_prime {
                    if n_prime % d == 0 {
                        rhs += crate::exactalg::cyclo::phi(d) as u64
                            * Partition::count(n / d);
                    }
                }
                assert_eq!(lhs, rhs, "n={n} p={pr}");
            }
        }
    }

    #[test]
    fn b_value_examples() {
        let bs = blocks(2, 3);
        let principal = &bs[0];
        let twisted = &bs[1];
        let reg = springer_map(principal, &p(&[2]));
        let v = b_values(&reg, principal).unwrap();
        assert_eq!((v.b_iota_u, v.b0_u), (0, 0));
        let cusp = springer_map(twisted, &p(&[1]));
        let v = b_values(&cusp, twisted).unwrap();
        assert_eq!((v.b_iota_u, v.b0_u), (0, 1)); // b0 = 1/2
        let zero = springer_map(principal, &p(&[1, 1]));
        let v = b_values(&zero, principal).unwrap();
        assert_eq!(v.b_iota_u, 2); // b = 1
    }

    #[test]
    fn b_nonnegative() {
        for n in 1..=15u32 {
            for b in blocks(n, 7) {
                for iota in b.members() {
                    let v = b_values(&iota, &b).unwrap();
                    assert!(v.b_iota_u >= 0);
                }
            }
        }
    }

    #[test]
    fn wave_front_examples() {
        let m = Multipartition::new(vec![p(&[2, 1])]);
        assert_eq!(wave_front(&m), p(&[2, 1]));
        let m = Multipartition::new(vec![p(&[1]), p(&[1])]);
        assert_eq!(wave_front(&m), p(&[2]));
        let m = Multipartition::new(vec![p(&[2]), p(&[2])]);
        assert_eq!(wave_front(&m), p(&[2, 2]));
    }
}
