//! Integer partitions and multipartitions.
//!
//! Partitions label everything in sight: Jordan types of nilpotent orbits,
//! irreducible characters of symmetric groups, Springer labels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Partition {
    /// Builds a partition, sorting the parts decreasingly.
    /// Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidLabel);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (dual) partition: transpose of the Young diagram.
    pub fn dual(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut d = vec![0u32; cols];
        for &p in &self.parts {
            for dj in d.iter_mut().take(p as usize) {
                *dj += 1;
            }
        }
        Partition { parts: d }
    }

    /// `n(lambda) = sum_i (i-1) lambda_i`, the b-invariant of the
    /// irreducible character labelled by this partition.
    pub fn b_invariant(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Multiplies every part by `a`.
    pub fn scale(&self, a: u32) -> Partition {
        assert!(a > 0, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * a).collect(),
        }
    }

    /// Divides every part by `a`; errors if some part is not divisible.
    pub fn unscale(&self, a: u32) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.parts.len());
        for &p in &self.parts {
            if p % a != 0 {
                return Err(Error::DivisibilityViolated);
            }
            parts.push(p / a);
        }
        Ok(Partition { parts })
    }

    /// Union of parts (rearranged decreasingly).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Dominance order: `self >= other` iff all prefix sums dominate.
    /// Only meaningful for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut a = 0u64;
        let mut b = 0u64;
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            a += *self.parts.get(i).unwrap_or(&0) as u64;
            b += *other.parts.get(i).unwrap_or(&0) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicity of the part `v`.
    pub fn multiplicity(&self, v: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == v).count() as u32
    }

    /// `z_rho`: the order of the centralizer of a permutation of cycle
    /// type `rho` in the symmetric group.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        let mut seen: Vec<u32> = Vec::new();
        for &p in &self.parts {
            if !seen.contains(&p) {
                let m = self.multiplicity(p) as u64;
                let mut fact = 1u64;
                for i in 1..=m {
                    fact *= i;
                }
                z *= fact * (p as u64).pow(m as u32);
                seen.push(p);
            }
        }
        z
    }

    /// All partitions of `n` in reverse lexicographic order
    /// (starting with `(n)`, ending with `(1^n)`).
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let top = max.min(n);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Number of partitions of `n`.
    pub fn count(n: u32) -> u64 {
        // Euler recurrence with pentagonal numbers.
        let n = n as usize;
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > m && g2 > m {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 <= m {
                    acc += sign * p[m - g1];
                }
                if g2 <= m {
                    acc += sign * p[m - g2];
                }
                k += 1;
            }
            p[m] = acc;
        }
        p[n] as u64
    }
}

/// A sequence of partitions, one per factor of a product of symmetric
/// groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    pub components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn total_size(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// Mixes and rearranges all parts into a single partition.
    pub fn merged(&self) -> Partition {
        let mut parts: Vec<u32> = Vec::new();
        for c in &self.components {
            parts.extend_from_slice(c.parts());
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}
