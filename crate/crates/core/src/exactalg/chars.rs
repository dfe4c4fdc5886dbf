//! Symmetric-group characters and extended characters of wreath-type
//! groups `(S_m)^k ⋊ Z/k`.
//!
//! The labelling convention, used by every downstream module: the
//! partition `(n)` labels the trivial character and `(1^n)` the sign
//! character; tensoring with sign transposes the label.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::cyclo::CycLaurent;
use super::partition::Partition;
use crate::{Error, Result};

/// Label of an irreducible character of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SnCharLabel {
    pub n: u32,
    pub partition: Partition,
}

impl SnCharLabel {
    pub fn new(partition: Partition) -> Self {
        SnCharLabel {
            n: partition.size(),
            partition,
        }
    }
}

/// Label of an irreducible character of `(S_m)^k ⋊ Z/k` whose restriction
/// to the base subgroup is `E2 ⊠ ... ⊠ E2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedCharLabel {
    /// The repeated factor `E2`.
    pub base: SnCharLabel,
    /// Number of factors `k`.
    pub repeats: u32,
    /// Character index of `Z/k` twisting the canonical extension.
    pub twist: u32,
}

impl ExtendedCharLabel {
    pub fn new(base: SnCharLabel, repeats: u32, twist: u32) -> Self {
        ExtendedCharLabel {
            base,
            repeats,
            twist: twist % repeats.max(1),
        }
    }
}

fn beta_set(parts: &[u32], len: usize) -> Vec<i64> {
    // beta_i = lambda_i + (len - 1 - i), strictly decreasing
    (0..len)
        .map(|i| *parts.get(i).unwrap_or(&0) as i64 + (len - 1 - i) as i64)
        .collect()
}

fn partition_from_beta(mut beta: Vec<i64>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let mut parts = Vec::new();
    for (i, b) in beta.iter().enumerate() {
        let p = b - (len - 1 - i) as i64;
        debug_assert!(p >= 0);
        if p > 0 {
            parts.push(p as u32);
        }
    }
    parts
}

/// Murnaghan-Nakayama with a per-call memo table.
struct Mn {
    memo: BTreeMap<(Vec<u32>, usize), i64>,
    rho: Vec<u32>,
}

impl Mn {
    fn value(&mut self, lambda: Vec<u32>, k: usize) -> i64 {
        if k == self.rho.len() {
            return if lambda.is_empty() { 1 } else { 0 };
        }
        if let Some(v) = self.memo.get(&(lambda.clone(), k)) {
            return *v;
        }
        let r = self.rho[k] as i64;
        let len = lambda.len().max(1);
        let beta = beta_set(&lambda, len);
        let mut acc = 0i64;
        for (pos, &b) in beta.iter().enumerate() {
            let t = b - r;
            if t < 0 || beta.contains(&t) {
                continue;
            }
            // height = number of beta entries strictly between t and b
            let height = beta.iter().filter(|&&x| x > t && x < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut nb = beta.clone();
            nb[pos] = t;
            let sub = partition_from_beta(nb);
            acc += sign * self.value(sub, k + 1);
        }
        self.memo.insert((lambda, k), acc);
        acc
    }
}

/// The irreducible character value `chi^lambda(rho)`.
///
/// `chi^{(n)}` is the trivial character and `chi^{(1^n)}` the sign.
pub fn sn_char_value(label: &SnCharLabel, rho: &Partition) -> Result<i64> {
    if label.n != rho.size() {
        return Err(Error::SizeMismatch);
    }
    let mut mn = Mn {
        memo: BTreeMap::new(),
        rho: rho.parts().to_vec(),
    };
    Ok(mn.value(label.partition.parts().to_vec(), 0))
}

/// Full character table of `S_n`: `table[label_index][class_index]`, both
/// indexed by `Partition::all(n)` order.
pub struct CharTable {
    pub n: u32,
    pub labels: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn build(n: u32) -> CharTable {
        let labels = Partition::all(n);
        let classes = labels.clone();
        let values = labels
            .iter()
            .map(|l| {
                let lab = SnCharLabel::new(l.clone());
                classes
                    .iter()
                    .map(|c| sn_char_value(&lab, c).unwrap())
                    .collect()
            })
            .collect();
        CharTable {
            n,
            labels,
            classes,
            values,
        }
    }

    pub fn class_index(&self, rho: &Partition) -> usize {
        self.classes.iter().position(|c| c == rho).unwrap()
    }

    pub fn label_index(&self, lambda: &Partition) -> usize {
        self.labels.iter().position(|l| l == lambda).unwrap()
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.label_index(lambda)][self.class_index(rho)]
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Multiplicity of `⊠ factors` in the restriction of `E` to the Young
/// subgroup `S_{a_1} x ... x S_{a_r}` (a Littlewood-Richardson
/// coefficient), computed by exact character inner product.
pub fn restriction_multiplicity(e: &SnCharLabel, factors: &[SnCharLabel]) -> Result<u64> {
    let total: u32 = factors.iter().map(|f| f.n).sum();
    if total != e.n {
        return Err(Error::SizeMismatch);
    }
    // Sum over class tuples of the Young subgroup.
    let class_lists: Vec<Vec<Partition>> = factors.iter().map(|f| Partition::all(f.n)).collect();
    let subgroup_order: u64 = factors.iter().map(|f| factorial(f.n as u64)).product();
    let mut acc: i64 = 0;
    let mut idx = vec![0usize; factors.len()];
    loop {
        // class sizes and character values for this tuple
        let mut tuple_size: u64 = 1;
        let mut prod_vals: i64 = 1;
        let mut merged = Partition::empty();
        for (i, f) in factors.iter().enumerate() {
            let rho = &class_lists[i][idx[i]];
            tuple_size *= factorial(f.n as u64) / rho.centralizer_order();
            prod_vals *= sn_char_value(f, rho)?;
            merged = merged.union(rho);
        }
        let big = sn_char_value(e, &merged)?;
        acc += tuple_size as i64 * big * prod_vals;
        // advance multi-index
        let mut i = 0;
        loop {
            if i == idx.len() {
                let total = acc / subgroup_order as i64;
                debug_assert_eq!(acc % subgroup_order as i64, 0);
                debug_assert!(total >= 0);
                return Ok(total as u64);
            }
            idx[i] += 1;
            if idx[i] < class_lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------
// Permutation helpers shared with the wreath-group machinery.
// ---------------------------------------------------------------------

/// All permutations of `{0..m-1}` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        if m < 2 {
            break;
        }
        let mut i = m - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = m - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// `a * b`: apply `b` first, then `a`.
pub fn perm_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn perm_cycle_type(p: &[usize]) -> Partition {
    let m = p.len();
    let mut seen = vec![false; m];
    let mut parts = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        let mut len = 0u32;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).unwrap()
}

/// Canonical representative of a cycle type.
pub fn class_representative(rho: &Partition) -> Vec<usize> {
    let m = rho.size() as usize;
    let mut p: Vec<usize> = (0..m).collect();
    let mut start = 0usize;
    for &c in rho.parts() {
        let c = c as usize;
        for i in 0..c {
            p[start + i] = start + (i + 1) % c;
        }
        start += c;
    }
    p
}

/// Cycle type in `S_{m*k}` of the wreath element `(w_0,...,w_{k-1}) γ^j`,
/// where `γ` shifts the `k` blocks of size `m` cyclically.
pub fn wreath_embedded_cycle_type(j: u32, ws: &[Vec<usize>], m: usize) -> Partition {
    let k = ws.len();
    let j = j as usize % k;
    let mut parts: Vec<u32> = Vec::new();
    let mut seen = vec![false; k];
    for start in 0..k {
        if seen[start] {
            continue;
        }
        // the block cycle through `start` under i -> i + j
        let mut blocks = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            blocks.push(i);
            i = (i + j) % k;
        }
        let ell = blocks.len();
        // product along the cycle: w_{start} w_{start-j} ... (see below)
        // g(i,x) = (i+j, w_{i+j}(x)); g^ell fixes the block and acts by
        // w_{start} w_{start-j} w_{start-2j} ... w_{start+j}
        let mut prod: Vec<usize> = (0..m).collect();
        let mut b = start;
        for _ in 0..ell {
            prod = perm_mul(&ws[b], &prod);
            b = (b + k - j) % k;
        }
        for c in perm_cycle_type(&prod).parts() {
            parts.push(c * ell as u32);
        }
    }
    Partition::new(parts).unwrap()
}

/// Value of the canonical extension of `E2 ⊠ ... ⊠ E2` (twisted by the
/// chosen character of `Z/k`) at the element `γ^j (w_1,...,w_k)` given by
/// canonical class representatives.
///
/// On the base subgroup (`j = 0`) the value is the product of the factor
/// character values; on the generating coset it is
/// `chi_{E2}(w_1 w_2 ... w_k)` times the twist value.
pub fn extended_char_value(
    label: &ExtendedCharLabel,
    j: u32,
    classes: &[Partition],
) -> Result<CycLaurent> {
    let k = label.repeats as usize;
    if classes.len() != k {
        return Err(Error::InvalidLabel);
    }
    let m = label.base.n as usize;
    for c in classes {
        if c.size() as usize != m {
            return Err(Error::InvalidLabel);
        }
    }
    let ws: Vec<Vec<usize>> = classes.iter().map(class_representative).collect();
    let v = extension_model_value(&label.base, j, &ws)?;
    let twist = CycLaurent::root_of_unity(k as u32, label.twist as i64 * j as i64);
    Ok(CycLaurent::from_int(v).mul(&twist))
}

/// Untwisted canonical-model value at a raw wreath element.
pub fn extension_model_value(base: &SnCharLabel, j: u32, ws: &[Vec<usize>]) -> Result<i64> {
    let k = ws.len();
    let j = j as usize % k.max(1);
    let mut seen = vec![false; k];
    let mut value = 1i64;
    let m = base.n as usize;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut blocks = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            blocks.push(i);
            i = (i + j) % k;
        }
        let ell = blocks.len();
        let mut prod: Vec<usize> = (0..m).collect();
        let mut b = start;
        for _ in 0..ell {
            prod = perm_mul(&ws[b], &prod);
            b = (b + k - j) % k;
        }
        value *= sn_char_value(base, &perm_cycle_type(&prod))?;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyclo::rat_int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn mn_examples() {
        // trivial and sign characters
        assert_eq!(
            sn_char_value(&SnCharLabel::new(p(&[2])), &p(&[2])).unwrap(),
            1
        );
        assert_eq!(
            sn_char_value(&SnCharLabel::new(p(&[1, 1])), &p(&[2])).unwrap(),
            -1
        );
        // chi^{(2,1)} on a 3-cycle
        assert_eq!(
            sn_char_value(&SnCharLabel::new(p(&[2, 1])), &p(&[3])).unwrap(),
            -1
        );
        // size mismatch
        assert!(sn_char_value(&SnCharLabel::new(p(&[2])), &p(&[3])).is_err());
    }

    #[test]
    fn dimension_sum_of_squares() {
        for n in 1..=8u32 {
            let ones = p(&vec![1; n as usize]);
            let total: i64 = Partition::all(n)
                .iter()
                .map(|l| {
                    let d = sn_char_value(&SnCharLabel::new(l.clone()), &ones).unwrap();
                    d * d
                })
                .sum();
            assert_eq!(total as u64, factorial(n as u64));
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7u32 {
            let t = CharTable::build(n);
            for (i, rho) in t.classes.iter().enumerate() {
                for (j, _) in t.classes.iter().enumerate() {
                    let dot: i64 = (0..t.labels.len()).map(|l| t.values[l][i] * t.values[l][j]).sum();
                    if i == j {
                        assert_eq!(dot as u64, rho.centralizer_order());
                    } else {
                        assert_eq!(dot, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let e = SnCharLabel::new(p(&[2]));
        let f = [SnCharLabel::new(p(&[1])), SnCharLabel::new(p(&[1]))];
        assert_eq!(restriction_multiplicity(&e, &f).unwrap(), 1);
        let e = SnCharLabel::new(p(&[2, 1]));
        let f = [SnCharLabel::new(p(&[2])), SnCharLabel::new(p(&[1]))];
        assert_eq!(restriction_multiplicity(&e, &f).unwrap(), 1);
        let f = [SnCharLabel::new(p(&[1, 1])), SnCharLabel::new(p(&[1]))];
        assert_eq!(restriction_multiplicity(&e, &f).unwrap(), 1);
        // a zero: trivial of S_2 does not contain sign x sign... at S_4 level
        let e = SnCharLabel::new(p(&[4]));
        let f = [SnCharLabel::new(p(&[1, 1])), SnCharLabel::new(p(&[2]))];
        assert_eq!(restriction_multiplicity(&e, &f).unwrap(), 0);
    }

    #[test]
    fn extended_values() {
        // base trivial of S_2, k = 2, identity tuple on the coset
        let lab = ExtendedCharLabel::new(SnCharLabel::new(p(&[2])), 2, 0);
        let v = extended_char_value(&lab, 1, &[p(&[1, 1]), p(&[1, 1])]).unwrap();
        assert_eq!(v, CycLaurent::one());
        // sign-twisted: multiply by omega(1) = -1
        let lab = ExtendedCharLabel::new(SnCharLabel::new(p(&[2])), 2, 1);
        let v = extended_char_value(&lab, 1, &[p(&[1, 1]), p(&[1, 1])]).unwrap();
        assert_eq!(v, CycLaurent::from_int(-1));
        // on the base subgroup the value factorizes
        let lab = ExtendedCharLabel::new(SnCharLabel::new(p(&[1, 1])), 2, 1);
        let v = extended_char_value(&lab, 0, &[p(&[2]), p(&[1, 1])]).unwrap();
        assert_eq!(v, CycLaurent::from_int(-1)); // sign(transposition) * sign(id)
    }

    #[test]
    fn extension_norms_match_induction() {
        // sum over twists of <E_w, E_w> equals <Ind E1, Ind E1> = k
        for (m, k) in [(1usize, 2u32), (2, 2), (1, 3), (3, 2), (2, 3)] {
            let perms = permutations(m);
            let e2_list = Partition::all(m as u32);
            for base in &e2_list {
                let base = SnCharLabel::new(base.clone());
                let group_order = (factorial(m as u64).pow(k)) * k as u64;
                let mut total_norm = rat_int(0);
                for twist in 0..k {
                    let lab = ExtendedCharLabel::new(base.clone(), k, twist);
                    // <E,E> over the wreath group, exact
                    let mut acc = CycLaurent::zero();
                    let mut idx = vec![0usize; k as usize];
                    'outer: loop {
                        for j in 0..k {
                            let ws: Vec<Vec<usize>> =
                                idx.iter().map(|&i| perms[i].clone()).collect();
                            let v = extension_model_value(&base, j, &ws).unwrap();
                            let tw =
                                CycLaurent::root_of_unity(k, lab.twist as i64 * j as i64);
                            let val = CycLaurent::from_int(v).mul(&tw);
                            acc = acc.add(&val.abs_sq());
                        }
                        let mut i = 0;
                        loop {
                            if i == idx.len() {
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
                    let norm = acc
                        .eval_u(&rat_int(1))
                        .as_rational()
                        .unwrap()
                        / rat_int(group_order as i64);
                    assert_eq!(norm, rat_int(1), "m={m} k={k}");
                    total_norm += norm;
                }
                assert_eq!(total_norm, rat_int(k as i64));
            }
        }
    }
}
