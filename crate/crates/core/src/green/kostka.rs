//! Kostka-Foulkes polynomials by the charge statistic over semistandard
//! tableaux.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactalg::Partition;
use crate::{Error, Result};

/// A polynomial in `t` with integer coefficients, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    pub coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn monomial(deg: usize, c: i64) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn normalize(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        *self.coeffs.get(k).unwrap_or(&0)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        IntPolynomial { coeffs }.normalize()
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) - other.coeff(k))
            .collect();
        IntPolynomial { coeffs }.normalize()
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }.normalize()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// Enumerates semistandard tableaux of shape `lambda` and content `mu`
/// as chains of horizontal strips; each tableau is returned as a filling
/// `rows[i][j]` with entries `1..=len(mu)`.
pub fn ssyt(lambda: &Partition, mu: &Partition) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    if lambda.size() != mu.size() {
        return out;
    }
    let target: Vec<u32> = lambda.parts().to_vec();
    let content: Vec<u32> = mu.parts().to_vec();
    // state: current row lengths
    let rows = target.len();
    let mut shape = vec![0u32; rows];
    let mut filling: Vec<Vec<u8>> = target.iter().map(|&r| vec![0u8; r as usize]).collect();

    fn rec(
        level: usize,
        content: &[u32],
        target: &[u32],
        shape: &mut Vec<u32>,
        filling: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if level == content.len() {
            if shape.iter().zip(target.iter()).all(|(a, b)| a == b) {
                out.push(filling.clone());
            }
            return;
        }
        // add a horizontal strip of size content[level] with entry level+1
        let entry = (level + 1) as u8;
        let k = content[level];
        // choose additions a_i per row with sum k, new shape still a
        // partition, and strip condition new[i] <= old[i-1]
        fn place(
            row: usize,
            remaining: u32,
            entry: u8,
            target: &[u32],
            shape: &mut Vec<u32>,
            filling: &mut Vec<Vec<u8>>,
            cont: &mut dyn FnMut(&mut Vec<u32>, &mut Vec<Vec<u8>>),
        ) {
            if row == shape.len() {
                if remaining == 0 {
                    cont(shape, filling);
                }
                return;
            }
            let old = shape[row];
            let max_here = target[row];
            for add in 0..=remaining.min(max_here.saturating_sub(old)) {
                let new_len = old + add;
                // column-strict: new cells must sit strictly right of the
                // row below's future cells; enforced by: new_len <= old
                // length of row above (strip condition)
                let ok_above = if row == 0 {
                    true
                } else {
                    new_len <= filling[row - 1]
                        .iter()
                        .take_while(|&&c| c != 0 && c < entry)
                        .count() as u32
                };
                // weak decrease of the new shape
                let ok_shape = if row == 0 { true } else { new_len <= shape[row - 1] };
                if !(ok_above && ok_shape) {
                    continue;
                }
                shape[row] = new_len;
                for j in old..new_len {
                    filling[row][j as usize] = entry;
                }
                place(row + 1, remaining - add, entry, target, shape, filling, cont);
                for j in old..new_len {
                    filling[row][j as usize] = 0;
                }
                shape[row] = old;
            }
        }

        let mut cont = |shape: &mut Vec<u32>, filling: &mut Vec<Vec<u8>>| {
            rec(level + 1, content, target, shape, filling, out);
        };
        place(0, k, entry, target, shape, filling, &mut cont);
    }

    rec(0, &content, &target, &mut shape, &mut filling, &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda`, content `mu`
/// (the Kostka number).
pub fn ssyt_count(lambda: &Partition, mu: &Partition) -> u64 {
    ssyt(lambda, mu).len() as u64
}

/// Reading word: rows bottom to top, each left to right.
fn reading_word(t: &[Vec<u8>]) -> Vec<u8> {
    let mut w = Vec::new();
    for row in t.iter().rev() {
        w.extend(row.iter().copied());
    }
    w
}

/// Charge of a word of partition content (Lascoux-Schutzenberger).
pub fn charge(word: &[u8]) -> u64 {
    let mut remaining: Vec<(usize, u8)> = word.iter().copied().enumerate().collect();
    let mut total = 0u64;
    while !remaining.is_empty() {
        let max_letter = remaining.iter().map(|&(_, v)| v).max().unwrap();
        // extract one standard subword
        let mut chosen: Vec<usize> = Vec::new(); // indices into `remaining`
        // rightmost 1
        let mut pos = remaining
            .iter()
            .rposition(|&(_, v)| v == 1)
            .expect("word of partition content always has a 1");
        chosen.push(pos);
        for letter in 2..=max_letter {
            // scan left of `pos`, wrapping around
            let mut found = None;
            for i in (0..pos).rev() {
                if remaining[i].1 == letter && !chosen.contains(&i) {
                    found = Some(i);
                    break;
                }
            }
            if found.is_none() {
                for i in (pos..remaining.len()).rev() {
                    if remaining[i].1 == letter && !chosen.contains(&i) {
                        found = Some(i);
                        break;
                    }
                }
            }
            match found {
                Some(i) => {
                    chosen.push(i);
                    pos = i;
                }
                None => break, // content not a partition prefix; stop
            }
        }
        // charge of the standard subword in position order
        let mut sub: Vec<(usize, u8)> = chosen.iter().map(|&i| remaining[i]).collect();
        sub.sort_by_key(|&(i, _)| i);
        let position_of = |v: u8| sub.iter().position(|&(_, x)| x == v).unwrap();
        let mut idx = 0u64;
        let mut prev = position_of(1);
        for letter in 2..=sub.len() as u8 {
            let cur = position_of(letter);
            if cur > prev {
                idx += 1;
            }
            total += idx;
            prev = cur;
        }
        // remove chosen letters
        let mut keep = Vec::with_capacity(remaining.len() - chosen.len());
        for (i, item) in remaining.iter().enumerate() {
            if !chosen.contains(&i) {
                keep.push(*item);
            }
        }
        remaining = keep;
    }
    total
}

/// The Kostka-Foulkes polynomial `K_{lambda,mu}(t)`.
///
/// Zero unless `lambda` dominates `mu`; `K_{lambda,lambda} = 1`; the
/// degree is `n(mu) - n(lambda)`; the value at `t = 1` is the number of
/// semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<IntPolynomial> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch);
    }
    if lambda.is_empty() {
        return Ok(IntPolynomial::one());
    }
    if !lambda.dominates(mu) {
        return Ok(IntPolynomial::zero());
    }
    let deg = (mu.b_invariant() - lambda.b_invariant()) as usize;
    let mut coeffs = vec![0i64; deg + 1];
    for t in ssyt(lambda, mu) {
        let c = charge(&reading_word(&t)) as usize;
        debug_assert!(c <= deg);
        coeffs[c] += 1;
    }
    Ok(IntPolynomial { coeffs }.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[2, 1])).unwrap(), IntPolynomial::one());
        assert_eq!(
            kostka(&p(&[2]), &p(&[1, 1])).unwrap(),
            IntPolynomial::monomial(1, 1)
        );
        assert_eq!(
            kostka(&p(&[3]), &p(&[1, 1, 1])).unwrap(),
            IntPolynomial::monomial(3, 1)
        );
        // K_{(3,1),(2,1,1)} = t + t^2
        assert_eq!(
            kostka(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(),
            IntPolynomial { coeffs: vec![0, 1, 1] }
        );
        // K_{(2,1),(1,1,1)} = t + t^2
        assert_eq!(
            kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            IntPolynomial { coeffs: vec![0, 1, 1] }
        );
        // dominance vanishing
        assert!(kostka(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
    }

    #[test]
    fn kostka_structural() {
        for n in 1..=6u32 {
            let parts = Partition::all(n);
            for l in &parts {
                for m in &parts {
                    let k = kostka(l, m).unwrap();
                    if l == m {
                        assert_eq!(k, IntPolynomial::one());
                    }
                    if !l.dominates(m) {
                        assert!(k.is_zero());
                        continue;
                    }
                    assert_eq!(k.eval_at_one() as u64, ssyt_count(l, m));
                    if !k.is_zero() {
                        assert_eq!(
                            k.degree().unwrap() as u64,
                            m.b_invariant() - l.b_invariant()
                        );
                    }
                    // positive constant term only on the diagonal
                    if l != m && !k.is_zero() {
                        assert_eq!(k.coeff(0), 0);
                    }
                }
            }
        }
    }
}
