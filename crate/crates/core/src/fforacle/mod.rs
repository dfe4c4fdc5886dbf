//! Brute-force matrix-group oracle for tiny `SL_n(F_q)`: element
//! enumeration, conjugacy census, centralizer orders and the Frobenius
//! twist `c_0` of the opposed nilpotent.
//!
//! Conjugacy testing is done by orbit enumeration under transvection
//! generators; no character theory enters, so the oracle stays logically
//! independent of the combinatorial side of the crate.

pub mod field;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;



use crate::exactalg::Partition;
use crate::orbits::{self, CyclicF};
use crate::{Error, Result, DEFAULT_GROUP_ORDER_CAP};
pub use field::Field;

/// A square matrix over `F_q`, entries row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub e: Vec<u16>,
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat { n, e: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.e[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u16 {
        self.e[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.e[i * self.n + j] = v;
    }

    pub fn mul(&self, f: &Field, other: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b != 0 {
                        let cur = out.at(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, f: &Field) -> u16 {
        let n = self.n;
        let mut m = self.clone();
        let mut det = 1u16;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.at(r, col) != 0);
            let pivot = match pivot {
                None => return 0,
                Some(p) => p,
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.at(col, j);
                    let b = m.at(pivot, j);
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = f.neg(det);
            }
            let pv = m.at(col, col);
            det = f.mul(det, pv);
            let pv_inv = f.inv(pv);
            for r in (col + 1)..n {
                let factor = f.mul(m.at(r, col), pv_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.at(r, j), f.mul(factor, m.at(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.at(r, col) != 0)?;
            if pivot != col {
                for j in 0..n {
                    let (a, b) = (m.at(col, j), m.at(pivot, j));
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                    let (a, b) = (inv.at(col, j), inv.at(pivot, j));
                    inv.set(col, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let pv_inv = f.inv(m.at(col, col));
            for j in 0..n {
                m.set(col, j, f.mul(m.at(col, j), pv_inv));
                inv.set(col, j, f.mul(inv.at(col, j), pv_inv));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.at(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(m.at(r, j), f.mul(factor, m.at(col, j)));
                    m.set(r, j, v);
                    let v = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial coefficients via Faddeev-LeVerrier-free
    /// expansion: interpolation is overkill, use the direct minor
    /// expansion of `det(xI - A)` by dynamic programming over columns.
    /// For the tiny sizes here, Lagrange-free Leibniz expansion suffices.
    pub fn char_poly(&self, f: &Field) -> Vec<u16> {
        // det(xI - A) expanded over permutations with polynomial entries
        let n = self.n;
        // permanent-style recursion over rows with chosen columns bitmask
        fn rec(
            m: &Mat,
            f: &Field,
            row: usize,
            used: u32,
            coeffs: &mut Vec<u16>,
            cur: Vec<u16>,
            sign_swaps: u32,
        ) {
            let n = m.n;
            if row == n {
                // cur is the product polynomial; add with parity sign
                let negate = sign_swaps % 2 == 1;
                for (k, &c) in cur.iter().enumerate() {
                    let v = if negate { f.neg(c) } else { c };
                    coeffs[k] = f.add(coeffs[k], v);
                }
                return;
            }
            for col in 0..n {
                if used & (1 << col) != 0 {
                    continue;
                }
                // entry (row, col) of xI - A
                let a = f.neg(m.at(row, col));
                let diag = row == col;
                // multiply cur by (a + diag * x)
                let mut next = vec![0u16; cur.len()];
                if a != 0 {
                    for (k, &c) in cur.iter().enumerate() {
                        if c != 0 {
                            next[k] = f.add(next[k], f.mul(c, a));
                        }
                    }
                }
                if diag {
                    for k in 0..cur.len() - 1 {
                        if cur[k] != 0 {
                            next[k + 1] = f.add(next[k + 1], cur[k]);
                        }
                    }
                }
                if next.iter().any(|&c| c != 0) || row + 1 == n {
                    // count inversions contributed by picking col at row
                    let swaps = (0..col).filter(|&c| used & (1 << c) == 0).count() as u32;
                    rec(m, f, row + 1, used | (1 << col), coeffs, next, sign_swaps + swaps);
                }
            }
        }
        let mut coeffs = vec![0u16; n + 1];
        let mut one = vec![0u16; n + 1];
        one[0] = 1;
        rec(self, f, 0, 0, &mut coeffs, one, 0);
        coeffs
    }

    /// Rank over `F_q`.
    pub fn rank(&self, f: &Field) -> usize {
        let n = self.n;
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..n).find(|&r| m.at(r, col) != 0);
            let pivot = match pivot {
                None => continue,
                Some(p) => p,
            };
            if pivot != row {
                for j in 0..n {
                    let (a, b) = (m.at(row, j), m.at(pivot, j));
                    m.set(row, j, b);
                    m.set(pivot, j, a);
                }
            }
            let pv_inv = f.inv(m.at(row, col));
            for r in (row + 1)..n {
                let factor = f.mul(m.at(r, col), pv_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.at(r, j), f.mul(factor, m.at(row, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
            row += 1;
        }
        rank
    }

    fn encode(&self, q: u32) -> u128 {
        let mut acc = 0u128;
        for &v in self.e.iter().rev() {
            acc = acc * q as u128 + v as u128;
        }
        acc
    }

    fn decode(code: u128, n: usize, q: u32) -> Mat {
        let mut m = Mat::zero(n);
        let mut c = code;
        for i in 0..n * n {
            m.e[i] = (c % q as u128) as u16;
            c /= q as u128;
        }
        m
    }
}

/// `|SL_n(F_q)|` as an integer.
pub fn sl_order(n: u32, q: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..(n * (n - 1) / 2) {
        acc *= q as u128;
    }
    for i in 2..=n {
        acc *= (q as u128).pow(i) - 1;
    }
    acc
}

/// Enumeration handle over all of `SL_n(F_q)`.
pub struct GroupEnum {
    pub n: u32,
    pub q: u32,
    pub field: Field,
    pub order: u64,
    /// All elements, encoded, sorted.
    pub elements: Vec<u128>,
}

/// One conjugacy class of the census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub representative: Mat,
    pub size: u64,
    pub centralizer_order: u64,
}

/// Complete conjugacy census of `SL_n(F_q)`.
pub struct ClassCensus {
    pub n: u32,
    pub q: u32,
    pub group_order: u64,
    pub classes: Vec<ClassEntry>,
}

fn check_cap(n: u32, q: u64, cap: u64) -> Result<u64> {
    let order = sl_order(n, q);
    if order > cap as u128 {
        return Err(Error::CapExceeded {
            requested: u64::try_from(order).unwrap_or(u64::MAX),
            cap,
        });
    }
    Ok(order as u64)
}

/// Enumerates every element of `SL_n(F_q)` exactly once.
pub fn enumerate_group(n: u32, q: u32) -> Result<GroupEnum> {
    enumerate_group_capped(n, q, DEFAULT_GROUP_ORDER_CAP)
}

pub fn enumerate_group_capped(n: u32, q: u32, cap: u64) -> Result<GroupEnum> {
    let order = check_cap(n, q as u64, cap)?;
    let field = Field::new(q)?;
    let nn = (n * n) as usize;
    let scan: u128 = (q as u128).pow(nn as u32);
    if scan > 80_000_000 {
        return Err(Error::CapExceeded {
            requested: u64::try_from(scan).unwrap_or(u64::MAX),
            cap,
        });
    }
    let mut elements = Vec::with_capacity(order as usize);
    let mut m = Mat::zero(n as usize);
    let mut code: u128 = 0;
    loop {
        if m.det(&field) == 1 {
            elements.push(code);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == nn {
                debug_assert_eq!(elements.len() as u64, order);
                elements.sort_unstable();
                return Ok(GroupEnum { n, q, field, order, elements });
            }
            m.e[i] += 1;
            code += (q as u128).pow(i as u32);
            if (m.e[i] as u32) < q {
                break;
            }
            code -= (q as u128).pow(i as u32) * q as u128;
            m.e[i] = 0;
            i += 1;
        }
    }
}

/// Transvection generators `I + t E_{ij}` of `SL_n(F_q)`.
fn transvections(n: usize, f: &Field) -> Vec<(Mat, Mat)> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for t in 1..f.q as u16 {
                let mut g = Mat::identity(n);
                g.set(i, j, t);
                let mut ginv = Mat::identity(n);
                ginv.set(i, j, f.neg(t));
                gens.push((g, ginv));
            }
        }
    }
    gens
}

/// The full conjugacy census, refined from characteristic-polynomial
/// buckets by orbit enumeration.  Class representatives are the
/// lexicographically least matrices (in encoded order).
pub fn conjugacy_classes(n: u32, q: u32) -> Result<ClassCensus> {
    conjugacy_classes_capped(n, q, DEFAULT_GROUP_ORDER_CAP)
}

pub fn conjugacy_classes_capped(n: u32, q: u32, cap: u64) -> Result<ClassCensus> {
    let group = enumerate_group_capped(n, q, cap)?;
    let f = &group.field;
    let nu = n as usize;
    // bucket by characteristic polynomial
    let mut buckets: BTreeMap<Vec<u16>, Vec<u128>> = BTreeMap::new();
    for &code in &group.elements {
        let m = Mat::decode(code, nu, q);
        buckets.entry(m.char_poly(f)).or_default().push(code);
    }
    let gens = transvections(nu, f);
    let mut classes = Vec::new();
    for (_cp, codes) in buckets {
        let mut unvisited: BTreeSet<u128> = codes.into_iter().collect();
        while let Some(&seed) = unvisited.iter().next() {
            // BFS orbit under conjugation
            let mut orbit: BTreeSet<u128> = BTreeSet::new();
            let mut queue = vec![seed];
            orbit.insert(seed);
            while let Some(code) = queue.pop() {
                let m = Mat::decode(code, nu, q);
                for (g, ginv) in &gens {
                    let c = g.mul(f, &m).mul(f, ginv).encode(q);
                    if orbit.insert(c) {
                        queue.push(c);
                    }
                }
            }
            let size = orbit.len() as u64;
            let rep = *orbit.iter().next().unwrap();
            for c in &orbit {
                unvisited.remove(c);
            }
            classes.push(ClassEntry {
                representative: Mat::decode(rep, nu, q),
                size,
                centralizer_order: group.order / size,
            });
        }
    }
    classes.sort_by_key(|c| c.representative.encode(q));
    Ok(ClassCensus {
        n,
        q,
        group_order: group.order,
        classes,
    })
}

impl ClassCensus {
    /// Jordan type of a unipotent element from ranks of `(g-1)^k`.
    pub fn jordan_type(&self, f: &Field, g: &Mat) -> Option<Partition> {
        let n = self.n as usize;
        let mut nm = g.clone();
        for i in 0..n {
            nm.set(i, i, f.sub(nm.at(i, i), 1));
        }
        // g unipotent iff (g-1)^n = 0
        let mut pw = Mat::identity(n);
        let mut ranks = vec![n];
        for _ in 0..n {
            pw = pw.mul(f, &nm);
            ranks.push(pw.rank(f));
        }
        if ranks[n] != 0 {
            return None;
        }
        // multiplicity of Jordan blocks of size >= k is rank_{k-1}-rank_k
        let mut parts = Vec::new();
        for k in 1..=n {
            let m_ge_k = ranks[k - 1] - ranks[k];
            let m_ge_k1 = if k < n { ranks[k] - ranks[k + 1] } else { 0 };
            let mult = m_ge_k - m_ge_k1.min(m_ge_k);
            for _ in 0..mult {
                parts.push(k as u32);
            }
        }
        Partition::new(parts).ok()
    }

    /// Centralizer orders of the rational classes of unipotent type `mu`.
    pub fn unipotent_class_centralizers(&self, f: &Field, mu: &Partition) -> Vec<u64> {
        self.classes
            .iter()
            .filter(|c| self.jordan_type(f, &c.representative).as_ref() == Some(mu))
            .map(|c| c.centralizer_order)
            .collect()
    }
}

/// `|Z_{SL_n(F_q)}(u)|` for `u` the Jordan-form unipotent of type `mu`:
/// solve the commutation equations and count determinant-one points of
/// the solution space.
pub fn unipotent_centralizer_order(n: u32, q: u32, mu: &Partition) -> Result<u64> {
    unipotent_centralizer_order_capped(n, q, mu, DEFAULT_GROUP_ORDER_CAP)
}

pub fn unipotent_centralizer_order_capped(n: u32, q: u32, mu: &Partition, cap: u64) -> Result<u64> {
    if mu.size() != n {
        return Err(Error::SizeMismatch);
    }
    check_cap(n, q as u64, cap)?;
    let f = Field::new(q)?;
    let u = jordan_unipotent(&f, mu);
    let basis = commutant_basis(&f, &u, &u, false);
    count_det_one(&f, &basis)
}

fn jordan_unipotent(f: &Field, mu: &Partition) -> Mat {
    let n = mu.size() as usize;
    let mut m = Mat::identity(n);
    let mut start = 0usize;
    for &part in mu.parts() {
        for i in 0..(part as usize - 1) {
            m.set(start + i, start + i + 1, 1);
        }
        start += part as usize;
    }
    let _ = f;
    m
}

/// Jordan-form nilpotent `N` of type `mu` (superdiagonal ones).
pub fn jordan_nilpotent(mu: &Partition) -> Mat {
    let n = mu.size() as usize;
    let mut m = Mat::zero(n);
    let mut start = 0usize;
    for &part in mu.parts() {
        for i in 0..(part as usize - 1) {
            m.set(start + i, start + i + 1, 1);
        }
        start += part as usize;
    }
    m
}

/// The opposite member `N*` of the standard TDS triple `(N, N*, H)`:
/// per Jordan block, `N* = sum_j j (mu_i - j) E_{j+1,j}`.
/// Requires `p > n` so the coefficients are nonzero mod `p`.
pub fn tds_opposite(f: &Field, mu: &Partition) -> Result<Mat> {
    let n = mu.size();
    if f.p as u32 <= n {
        return Err(Error::UnsupportedField);
    }
    let mut m = Mat::zero(n as usize);
    let mut start = 0usize;
    for &part in mu.parts() {
        for j in 1..part as usize {
            let c = (j as u32 * (part as usize - j) as u32) % f.p as u32;
            m.set(start + j, start + j - 1, f.from_prime(c));
        }
        start += part as usize;
    }
    Ok(m)
}

/// Basis of `{ g : g A = B g }` (as a subspace of all matrices).
fn commutant_basis(f: &Field, a: &Mat, b: &Mat, negate_b: bool) -> Vec<Mat> {
    let n = a.n;
    let dim = n * n;
    // rows: equations (i,j); columns: unknowns g_{kl}
    // (gA - Bg)_{ij} = sum_l g_{il} A_{lj} - sum_k B_{ik} g_{kj}
    let mut rows: Vec<Vec<u16>> = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0u16; dim];
            for l in 0..n {
                let v = a.at(l, j);
                if v != 0 {
                    row[i * n + l] = f.add(row[i * n + l], v);
                }
            }
            for k in 0..n {
                let mut v = b.at(i, k);
                if negate_b {
                    v = f.neg(v);
                }
                if v != 0 {
                    row[k * n + j] = f.sub(row[k * n + j], v);
                }
            }
            rows.push(row);
        }
    }
    // Gaussian elimination to find the null space
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..dim {
        let piv = (r..rows.len()).find(|&rr| rows[rr][c] != 0);
        if let Some(piv) = piv {
            rows.swap(r, piv);
            let inv = f.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for rr in 0..rows.len() {
                if rr != r && rows[rr][c] != 0 {
                    let factor = rows[rr][c];
                    for cc in 0..dim {
                        let v = f.sub(rows[rr][cc], f.mul(factor, rows[r][cc]));
                        rows[rr][cc] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
    }
    // free columns parametrize the null space
    let mut basis = Vec::new();
    for c in 0..dim {
        if pivots.contains(&c) {
            continue;
        }
        let mut v = vec![0u16; dim];
        v[c] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            // row ri: x_pc + sum over free cols of coeff * x_free = 0
            let coeff = rows[ri][c];
            if coeff != 0 {
                v[pc] = f.neg(coeff);
            }
        }
        basis.push(Mat { n, e: v });
    }
    basis
}

/// Counts determinant-one elements in the span of `basis`.
fn count_det_one(f: &Field, basis: &[Mat]) -> Result<u64> {
    let dim = basis.len();
    let total = (f.q as u128).pow(dim as u32);
    if total > 40_000_000 {
        return Err(Error::CapExceeded {
            requested: u64::try_from(total).unwrap_or(u64::MAX),
            cap: 40_000_000,
        });
    }
    let n = basis.first().map(|m| m.n).unwrap_or(0);
    if n == 0 {
        return Ok(0);
    }
    let mut count = 0u64;
    let mut coeffs = vec![0u16; dim];
    loop {
        let mut m = Mat::zero(n);
        for (c, b) in coeffs.iter().zip(basis.iter()) {
            if *c == 0 {
                continue;
            }
            for (x, y) in m.e.iter_mut().zip(b.e.iter()) {
                *x = f.add(*x, f.mul(*c, *y));
            }
        }
        if m.det(f) == 1 {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(count);
            }
            coeffs[i] += 1;
            if (coeffs[i] as u32) < f.q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Finds one determinant-one solution of `g A = B g`, if any.
fn find_det_one(f: &Field, a: &Mat, b: &Mat) -> Result<Option<Mat>> {
    let basis = commutant_basis(f, a, b, false);
    let dim = basis.len();
    let total = (f.q as u128).pow(dim as u32);
    if total > 40_000_000 {
        return Err(Error::CapExceeded {
            requested: u64::try_from(total).unwrap_or(u64::MAX),
            cap: 40_000_000,
        });
    }
    let n = a.n;
    let mut coeffs = vec![0u16; dim];
    loop {
        let mut m = Mat::zero(n);
        for (c, bs) in coeffs.iter().zip(basis.iter()) {
            if *c == 0 {
                continue;
            }
            for (x, y) in m.e.iter_mut().zip(bs.e.iter()) {
                *x = f.add(*x, f.mul(*c, *y));
            }
        }
        if m.det(f) == 1 {
            return Ok(Some(m));
        }
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(None);
            }
            coeffs[i] += 1;
            if (coeffs[i] as u32) < f.q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Result of the `c_0` search: the twisting class, the component group
/// data, and the explicit conjugator certifying
/// `Ad(g) N_{c_0} = -N*` with `g` rational.
#[derive(Debug)]
pub struct TwistResult {
    /// Class of `c_0` in the coinvariants `(A_lambda)_F`.
    pub c0_class: u32,
    /// `(A_lambda)_F`-structure: `A_lambda` with its Frobenius.
    pub a_lambda: CyclicF,
    /// The rational conjugator.
    pub conjugator: Mat,
    /// The rational form `N_{c_0}` that `-N*` was matched against.
    pub matched_form: Mat,
}

/// Builds the twisted rational forms `N_c` for each coinvariant class
/// `c` and locates the one rationally conjugate to `-N*`.
///
/// Classes are labelled by the scalar construction: the form of class
/// `c` is `Ad(alpha) N` with `alpha^-1 F(alpha) = zeta_n^c * Id`.
pub fn solve_twist_c0(n: u32, q: u32, mu: &Partition) -> Result<TwistResult> {
    if mu.size() != n {
        return Err(Error::SizeMismatch);
    }
    let f = Field::new(q)?;
    if f.p as u32 <= n {
        return Err(Error::UnsupportedField); // the TDS triple needs p > n
    }
    let comp = orbits::component_groups(mu, f.p as u32, q as u64);
    let a_lambda = comp.a_g_u;
    let g_classes = a_lambda.invariant_size();

    let neg_nstar = {
        let m = tds_opposite(&f, mu)?;
        Mat {
            n: m.n,
            e: m.e.iter().map(|&v| f.neg(v)).collect(),
        }
    };
    let nil = jordan_nilpotent(mu);

    let mut found: Option<TwistResult> = None;
    for c in 0..g_classes {
        let form = twisted_form(&f, q, n, &nil, c)?;
        if let Some(g) = find_det_one(&f, &form, &neg_nstar)? {
            // certificate: g * form * g^-1 = -N*
            let ginv = g.inverse(&f).expect("det-one matrix is invertible");
            debug_assert_eq!(g.mul(&f, &form).mul(&f, &ginv), neg_nstar);
            if found.is_some() {
                return Err(Error::UniquenessViolation);
            }
            found = Some(TwistResult {
                c0_class: c,
                a_lambda,
                conjugator: g,
                matched_form: form,
            });
        }
    }
    found.ok_or(Error::NoSolution)
}

/// The rational form `N_c = Ad(alpha) N` with
/// `alpha = diag(beta^{1-n}, beta, ..., beta)`, `beta^{q-1} = zeta_n^c`.
fn twisted_form(f: &Field, q: u32, n: u32, nil: &Mat, c: u32) -> Result<Mat> {
    if c == 0 {
        return Ok(nil.clone());
    }
    // find the smallest extension F_{q^e} (e <= 3 supported) containing
    // beta with beta^{q-1} = zeta_n^c
    for e in 1..=3u8 {
        let kk = f.k as u32 * e as u32;
        if kk > 3 {
            break;
        }
        let big_q = (f.p as u32).pow(kk);
        let big = Field::new(big_q)?;
        let embed = f.embed_into(&big)?;
        // zeta_n in the big field: needs n | big_q - 1
        if (big_q - 1) % n != 0 {
            continue;
        }
        let zeta_n = big.pow(big.generator(), ((big_q - 1) / n) as u64);
        let zeta = big.pow(zeta_n, c as u64);
        // beta with beta^{q-1} = zeta
        let mut beta = None;
        for b in 1..big_q as u16 {
            if big.pow(b, (q - 1) as u64) == zeta {
                beta = Some(b);
                break;
            }
        }
        let beta = match beta {
            None => continue,
            Some(b) => b,
        };
        // alpha = diag(beta^{1-n}, beta, ..., beta); conjugate N
        let beta_inv = big.inv(beta);
        let mut first = 1u16;
        for _ in 0..(n - 1) {
            first = big.mul(first, beta_inv);
        }
        let nu = n as usize;
        let mut alpha = Mat::zero(nu);
        alpha.set(0, 0, first);
        for i in 1..nu {
            alpha.set(i, i, beta);
        }
        let alpha_inv = alpha.inverse(&big).unwrap();
        let nil_big = Mat {
            n: nu,
            e: nil.e.iter().map(|&v| embed[v as usize]).collect(),
        };
        let form_big = alpha.mul(&big, &nil_big).mul(&big, &alpha_inv);
        // the form must be rational: every entry in the image of F_q
        let mut back = vec![u16::MAX; big_q as usize];
        for (small, &bigv) in embed.iter().enumerate() {
            back[bigv as usize] = small as u16;
        }
        let mut form = Mat::zero(nu);
        let mut ok = true;
        for i in 0..nu * nu {
            let v = back[form_big.e[i] as usize];
            if v == u16::MAX {
                ok = false;
                break;
            }
            form.e[i] = v;
        }
        if ok {
            return Ok(form);
        }
    }
    Err(Error::UnsupportedField)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_group(2, 3).unwrap().order, 24);
        assert_eq!(enumerate_group(2, 4).unwrap().order, 60);
        assert_eq!(enumerate_group(3, 2).unwrap().order, 168);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            enumerate_group_capped(4, 5, DEFAULT_GROUP_ORDER_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn census_counts() {
        assert_eq!(conjugacy_classes(2, 3).unwrap().classes.len(), 7);
        assert_eq!(conjugacy_classes(2, 4).unwrap().classes.len(), 5);
        assert_eq!(conjugacy_classes(2, 5).unwrap().classes.len(), 9);
    }

    #[test]
    fn census_class_count_formula_sl2() {
        for q in [3u32, 5, 7] {
            let c = conjugacy_classes(2, q).unwrap();
            assert_eq!(c.classes.len() as u32, q + 4);
        }
        assert_eq!(conjugacy_classes(2, 4).unwrap().classes.len() as u32, 4 + 1);
    }

    #[test]
    fn census_sizes_consistent() {
        for (n, q) in [(2u32, 3u32), (2, 4), (2, 5), (3, 2), (3, 3)] {
            let c = conjugacy_classes(n, q).unwrap();
            let total: u64 = c.classes.iter().map(|e| e.size).sum();
            assert_eq!(total, c.group_order);
            for e in &c.classes {
                assert_eq!(e.size * e.centralizer_order, c.group_order);
                assert_eq!(c.group_order % e.size, 0);
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(unipotent_centralizer_order(2, 3, &p(&[2])).unwrap(), 6);
        assert_eq!(unipotent_centralizer_order(2, 3, &p(&[1, 1])).unwrap(), 24);
        assert_eq!(unipotent_centralizer_order(3, 2, &p(&[3])).unwrap(), 4);
    }

    #[test]
    fn twist_trivial_for_sl2() {
        for q in [3u32, 5, 7] {
            let r = solve_twist_c0(2, q, &p(&[2])).unwrap();
            assert_eq!(r.c0_class, 0, "q={q}");
            // certificate really conjugates
            let f = Field::new(q).unwrap();
            let ginv = r.conjugator.inverse(&f).unwrap();
            let neg_nstar = {
                let m = tds_opposite(&f, &p(&[2])).unwrap();
                Mat { n: m.n, e: m.e.iter().map(|&v| f.neg(v)).collect() }
            };
            assert_eq!(
                r.conjugator.mul(&f, &r.matched_form).mul(&f, &ginv),
                neg_nstar
            );
        }
        // zero orbit: trivial for free
        let r = solve_twist_c0(2, 3, &p(&[1, 1])).unwrap();
        assert_eq!(r.c0_class, 0);
    }

    #[test]
    fn class_splitting_matches_component_groups() {
        // number of rational classes in the geometric unipotent class of
        // type mu equals |(A_G(u))_F|
        for (n, q) in [(2u32, 3u32), (2, 5), (3, 2), (3, 4)] {
            let census = conjugacy_classes(n, q).unwrap();
            let f = Field::new(q).unwrap();
            for mu in Partition::all(n) {
                let forms = census.unipotent_class_centralizers(&f, &mu).len() as u32;
                let comp = orbits::component_groups(&mu, f.p as u32, q as u64);
                assert_eq!(
                    forms,
                    comp.a_g_u.invariant_size(),
                    "n={n} q={q} mu={mu:?}"
                );
            }
        }
    }
}
