//! Nilpotent-orbit combinatorics for `SL_n`: weighted Dynkin diagrams,
//! the Lagrangian root subset, orbit dimensions, the associated Levi and
//! the component groups with their Frobenius action.


use alloc::vec::Vec;

use num_integer::Integer;

use crate::exactalg::cyclo::CycLaurent;
use crate::exactalg::Partition;
use crate::{Error, Result};

/// A finite cyclic group with Frobenius acting by a fixed multiplier.
///
/// Models `Z_G/Z_G^0`, `A_G(u)`, `A_lambda`, `Abar_lambda`, `Omega_s`,
/// `Omega_{theta_1}` and `X_M`.  Elements are residues mod `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicF {
    pub order: u32,
    /// Frobenius acts by `x -> multiplier * x` (written additively).
    pub multiplier: u32,
}

impl CyclicF {
    pub fn new(order: u32, multiplier: u64) -> Self {
        assert!(order > 0);
        CyclicF {
            order,
            multiplier: (multiplier % order as u64) as u32,
        }
    }

    pub fn trivial() -> Self {
        CyclicF::new(1, 0)
    }

    /// `gcd(order, multiplier - 1)`: the common size of the fixed-point
    /// subgroup and of the coinvariant quotient.
    pub fn invariant_size(&self) -> u32 {
        let m = self.multiplier as i64;
        let t = self.order as i64;
        (m - 1).gcd(&t) as u32
    }

    /// Fixed points `{x : (m-1)x = 0}` as residues.
    pub fn fixed_points(&self) -> Vec<u32> {
        let t = self.order;
        let g = self.invariant_size();
        let step = t / g;
        (0..g).map(|k| k * step).collect()
    }

    /// The coinvariant class of `x`: residue mod `gcd(order, m-1)`.
    pub fn coinvariant_class(&self, x: u32) -> u32 {
        x % self.invariant_size()
    }

    /// Indices of Frobenius-stable characters: `j` with `(m-1)j = 0 mod
    /// order`, i.e. multiples of `order / invariant_size`.
    pub fn stable_char_indices(&self) -> Vec<u32> {
        let t = self.order;
        let g = self.invariant_size();
        let step = t / g;
        (0..g).map(|k| k * step).collect()
    }

    /// Value of the character of index `j` at element `x`.
    pub fn char_value(&self, j: u32, x: i64) -> CycLaurent {
        CycLaurent::root_of_unity(self.order, j as i64 * x)
    }

    /// An F-stable character (index `j`) is constant on Frobenius orbits
    /// and therefore defined on coinvariant classes; value at the class
    /// `c` of the coinvariant quotient.
    pub fn stable_char_on_coinvariants(&self, j: u32, c: u32) -> CycLaurent {
        let g = self.invariant_size();
        debug_assert_eq!((j as u64 * (self.multiplier as u64 + self.order as u64 - 1)) % self.order as u64 % self.order as u64 * 0, 0);
        debug_assert_eq!(j % (self.order / g), 0, "character must be F-stable");
        // j = (t/g) j'; value zeta_t^{j x} depends only on x mod g
        let jp = j / (self.order / g);
        CycLaurent::root_of_unity(g, jp as i64 * c as i64)
    }
}

/// Weighted Dynkin diagram of a nilpotent orbit of `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDynkin {
    pub n: u32,
    /// `h(alpha_i) = nu_i - nu_{i+1}`, length `n-1`.
    pub h: Vec<i64>,
    /// The level multiset, sorted decreasingly.
    pub levels: Vec<i64>,
}

/// A subset of the positive roots `eps_p - eps_q`, stored as pairs
/// `(p, q)` with `1 <= p < q <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSubset {
    pub n: u32,
    pub roots: Vec<(u32, u32)>,
}

impl RootSubset {
    /// Image under the graph automorphism
    /// `eps_p - eps_q -> eps_{n+1-q} - eps_{n+1-p}`.
    pub fn sigma(&self) -> RootSubset {
        let n = self.n;
        let mut roots: Vec<(u32, u32)> =
            self.roots.iter().map(|&(p, q)| (n + 1 - q, n + 1 - p)).collect();
        roots.sort_unstable();
        RootSubset { n, roots }
    }
}

/// Dimension data of the orbit labelled by a partition of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDims {
    pub dim_orbit: u64,
    pub codim: u64,
    pub dim_centralizer: u64,
}

/// Shape of the Levi subgroup `L_N` attached to the grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviShape {
    /// Multiset of block sizes, sorted decreasingly.
    pub blocks: Vec<u32>,
    /// `dim Z^0_{L_N}` inside `SL_n` (one less than the number of blocks).
    pub dim_center: u32,
}

/// Component groups attached to an orbit: `A_G(u)` together with the
/// `A_lambda` data of the modified Gelfand-Graev setup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentData {
    /// Largest divisor of `n` prime to `p`.
    pub n_prime: u32,
    /// `gcd(n', parts of mu)`.
    pub n_prime_mu: u32,
    pub a_g_u: CyclicF,
    pub a_lambda: CyclicF,
}

/// Weighted Dynkin diagram from the Jordan type.
pub fn weighted_dynkin(mu: &Partition) -> WeightedDynkin {
    let n = mu.size();
    let mut levels: Vec<i64> = Vec::with_capacity(n as usize);
    for &p in mu.parts() {
        let p = p as i64;
        let mut v = p - 1;
        while v >= -(p - 1) {
            levels.push(v);
            v -= 2;
        }
    }
    levels.sort_unstable_by(|a, b| b.cmp(a));
    let h = (0..n as usize - 1)
        .map(|i| levels[i] - levels[i + 1])
        .collect();
    WeightedDynkin { n, h, levels }
}

/// The set `Sigma_1` of positive roots of weight 1 for the diagram.
pub fn sigma_one(wd: &WeightedDynkin) -> RootSubset {
    let n = wd.n;
    let mut roots = Vec::new();
    for p in 1..=n {
        for q in (p + 1)..=n {
            if wd.levels[(p - 1) as usize] - wd.levels[(q - 1) as usize] == 1 {
                roots.push((p, q));
            }
        }
    }
    RootSubset { n, roots }
}

/// The Lagrangian half `Psi` of `Sigma_1`.
///
/// `Sigma_1` decomposes into blocks `Psi_i`, one per simple root of
/// weight 1; consecutive blocks are adjacent and the graph automorphism
/// pairs the i-th block with the mirror one.  Taking every other block,
/// starting with the lowest-indexed one, gives the unique representative
/// containing `Psi_{i_1}` with `Sigma_1 = Psi ⊔ sigma(Psi)`.
pub fn lagrangian_psi(mu: &Partition) -> RootSubset {
    let wd = weighted_dynkin(mu);
    let n = wd.n;
    // simple roots of weight 1, as indices i (1-based, alpha_i)
    let ones: Vec<u32> = (1..n)
        .filter(|&i| wd.h[(i - 1) as usize] == 1)
        .collect();
    let mut roots = Vec::new();
    for (a, &i) in ones.iter().enumerate() {
        if a % 2 != 0 {
            continue; // alternate blocks, keep the lowest-indexed one
        }
        // j: smallest > i with h > 0 (else n), k: largest < i with h > 0 (else 0)
        let j = ((i + 1)..n)
            .find(|&x| wd.h[(x - 1) as usize] > 0)
            .unwrap_or(n);
        let k = (1..i).rev().find(|&x| wd.h[(x - 1) as usize] > 0).unwrap_or(0);
        for p in (k + 1)..=i {
            for q in (i + 1)..=j {
                roots.push((p, q));
            }
        }
    }
    roots.sort_unstable();
    RootSubset { n, roots }
}

/// `dim O = n^2 - sum (mu*_i)^2`, codimension in `SL_n`, and the
/// dimension of the centralizer of the nilpotent element in `SL_n`.
pub fn orbit_dims(mu: &Partition) -> OrbitDims {
    let n = mu.size() as u64;
    let dual = mu.dual();
    let sq: u64 = dual.parts().iter().map(|&c| (c as u64) * (c as u64)).sum();
    let dim_orbit = n * n - sq;
    OrbitDims {
        dim_orbit,
        codim: (n * n - 1) - dim_orbit,
        dim_centralizer: sq - 1,
    }
}

/// Block sizes of the Levi `L_N` (multiplicities of the distinct levels)
/// and the dimension of its connected center in `SL_n`.
pub fn levi_of_n(mu: &Partition) -> LeviShape {
    let wd = weighted_dynkin(mu);
    let mut blocks: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < wd.levels.len() {
        let v = wd.levels[i];
        let mut m = 0u32;
        while i < wd.levels.len() && wd.levels[i] == v {
            m += 1;
            i += 1;
        }
        blocks.push(m);
    }
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    let dim_center = blocks.len() as u32 - 1;
    LeviShape { blocks, dim_center }
}

/// Largest divisor of `n` coprime to `p`.
pub fn prime_to_p_part(n: u32, p: u32) -> u32 {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n
}

/// Component groups `A_G(u)` and `A_lambda` for the orbit `mu` of `SL_n`
/// over a field of characteristic `p` with `q` elements.
pub fn component_groups(mu: &Partition, p: u32, q: u64) -> ComponentData {
    let n = mu.size();
    let n_prime = prime_to_p_part(n, p);
    let mut g = n_prime;
    for &part in mu.parts() {
        g = g.gcd(&part);
    }
    let a = CyclicF::new(g, q);
    ComponentData {
        n_prime,
        n_prime_mu: g,
        a_g_u: a,
        a_lambda: a,
    }
}

/// The quotient `Abar_lambda = Z_M(lambda)/Z^1_M(lambda)` of order `t`,
/// with the reduction map from `A_lambda`.
pub fn zm1_quotient(mu: &Partition, t: u32, q: u64) -> Result<CyclicF> {
    for &part in mu.parts() {
        if part % t != 0 {
            return Err(Error::DivisibilityViolated);
        }
    }
    Ok(CyclicF::new(t, q))
}
