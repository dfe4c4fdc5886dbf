//! Independent route to the Kostka-Foulkes polynomials: build the
//! Hall-Littlewood polynomials `P_mu(x; t)` from their branching rule and
//! invert the transition matrix `s_lambda = sum_mu K_{lambda,mu}(t) P_mu`.
//!
//! This deliberately shares no code with the charge statistic; the two
//! routes are asserted equal for small sizes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::kostka::{ssyt_count, IntPolynomial};
use crate::exactalg::Partition;

/// Polynomial in x_1..x_m with `IntPolynomial` (in `t`) coefficients,
/// keyed by exponent vectors.
type MPoly = BTreeMap<Vec<u32>, IntPolynomial>;

fn mp_add_term(p: &mut MPoly, exp: Vec<u32>, c: IntPolynomial) {
    if c.is_zero() {
        return;
    }
    let entry = p.entry(exp).or_insert_with(IntPolynomial::zero);
    *entry = entry.add(&c);
    if entry.is_zero() {
        // keep maps free of zero entries
        let exps: Vec<Vec<u32>> = p
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        for e in exps {
            p.remove(&e);
        }
    }
}

/// Horizontal strips `mu/nu`: interlacing `mu_{i+1} <= nu_i <= mu_i`.
fn horizontal_strip_predecessors(mu: &Partition) -> Vec<Partition> {
    let parts = mu.parts();
    let rows = parts.len();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(i: usize, parts: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            let nz: Vec<u32> = cur.iter().copied().filter(|&x| x > 0).collect();
            out.push(Partition::new(nz).unwrap());
            return;
        }
        let hi = parts[i];
        let lo = if i + 1 < parts.len() { parts[i + 1] } else { 0 };
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, parts, cur, out);
            cur.pop();
        }
    }
    rec(0, parts, &mut cur, &mut out);
    let _ = rows;
    out
}

/// `psi_{mu/nu}(t) = prod over i with m_i(nu) = m_i(mu) + 1 of
/// (1 - t^{m_i(nu)})`.
fn psi(mu: &Partition, nu: &Partition) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    let max = mu.parts().first().copied().unwrap_or(0);
    for i in 1..=max {
        let mn = nu.multiplicity(i);
        if mn == mu.multiplicity(i) + 1 {
            // 1 - t^{mn}
            let f = IntPolynomial::one().sub(&IntPolynomial::monomial(mn as usize, 1));
            acc = acc.mul(&f);
        }
    }
    acc
}

/// `P_mu(x_1..x_m; t)` by the branching rule
/// `P_mu(x_1..x_j) = sum_nu psi_{mu/nu} P_nu(x_1..x_{j-1}) x_j^{|mu|-|nu|}`.
fn hall_littlewood_p(mu: &Partition, vars: usize, memo: &mut BTreeMap<(Partition, usize), MPoly>) -> MPoly {
    if let Some(p) = memo.get(&(mu.clone(), vars)) {
        return p.clone();
    }
    let mut out: MPoly = BTreeMap::new();
    if vars == 0 {
        if mu.is_empty() {
            mp_add_term(&mut out, Vec::new(), IntPolynomial::one());
        }
        memo.insert((mu.clone(), 0), out.clone());
        return out;
    }
    if mu.len() > vars {
        memo.insert((mu.clone(), vars), out.clone());
        return out; // too many rows for the variables
    }
    for nu in horizontal_strip_predecessors(mu) {
        let c = psi(mu, &nu);
        if c.is_zero() {
            continue;
        }
        let inner = hall_littlewood_p(&nu, vars - 1, memo);
        let e = mu.size() - nu.size();
        for (exp, coeff) in inner {
            let mut exp2 = exp.clone();
            exp2.push(e);
            mp_add_term(&mut out, exp2, coeff.mul(&c));
        }
    }
    memo.insert((mu.clone(), vars), out.clone());
    out
}

/// Coefficient of the monomial symmetric function `m_nu` in an `MPoly`:
/// the coefficient of the decreasing exponent vector.
fn monomial_coefficient(p: &MPoly, nu: &Partition, vars: usize) -> IntPolynomial {
    let mut exp: Vec<u32> = nu.parts().to_vec();
    exp.resize(vars, 0);
    // exponent vectors are (x_1, ..., x_m); the dominant representative
    // of the orbit is decreasing in that order
    exp.sort_unstable();
    exp.reverse();
    // keys were built with x_j appended last, i.e. key[j-1] = exponent of
    // x_j; any permutation works for a symmetric polynomial, use sorted
    // ascending? Keys are not sorted; look up the exact vector.
    p.get(&exp).cloned().unwrap_or_else(IntPolynomial::zero)
}

/// `K_{lambda,mu}(t)` by inverting the Hall-Littlewood transition matrix
/// in the monomial basis.  Exact, independent of the charge statistic.
pub fn kostka_via_hall_littlewood(lambda: &Partition, mu: &Partition) -> IntPolynomial {
    assert_eq!(lambda.size(), mu.size());
    let w = lambda.size();
    if w == 0 {
        return IntPolynomial::one();
    }
    let vars = w as usize;
    let parts = Partition::all(w); // reverse-lex refines dominance downwards
    let mut memo = BTreeMap::new();
    // coefficient matrix C[nu][mu'] = [m_nu] P_mu'
    let hl: Vec<MPoly> = parts
        .iter()
        .map(|m| hall_littlewood_p(m, vars, &mut memo))
        .collect();
    // s_lambda in the monomial basis: Kostka numbers
    let s_coeffs: Vec<IntPolynomial> = parts
        .iter()
        .map(|nu| {
            let k = ssyt_count(lambda, nu);
            if k == 0 {
                IntPolynomial::zero()
            } else {
                IntPolynomial { coeffs: vec![k as i64] }
            }
        })
        .collect();
    // triangular solve: iterate mu' from dominance-largest down
    let mut k_row: Vec<IntPolynomial> = vec![IntPolynomial::zero(); parts.len()];
    for (j, mu_j) in parts.iter().enumerate() {
        // residual coefficient of m_{mu_j}
        let mut r = s_coeffs[j].clone();
        for (j2, kpol) in k_row.iter().enumerate().take(j) {
            if kpol.is_zero() {
                continue;
            }
            let c = monomial_coefficient(&hl[j2], mu_j, vars);
            r = r.sub(&kpol.mul(&c));
        }
        // P_{mu_j} has m_{mu_j}-coefficient 1
        debug_assert_eq!(
            monomial_coefficient(&hl[j], mu_j, vars),
            IntPolynomial::one(),
            "P_mu must be monic in the monomial basis"
        );
        k_row[j] = r;
    }
    let pos = parts.iter().position(|x| x == mu).unwrap();
    k_row[pos].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::kostka::kostka;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hall_littlewood_base_cases() {
        let mut memo = BTreeMap::new();
        // P_(1,1)(x1,x2) = x1 x2
        let p11 = hall_littlewood_p(&p(&[1, 1]), 2, &mut memo);
        assert_eq!(p11.len(), 1);
        assert_eq!(p11.get(&vec![1, 1]), Some(&IntPolynomial::one()));
        // P_(2)(x1,x2) = m_2 + (1-t) m_11
        let p2 = hall_littlewood_p(&p(&[2]), 2, &mut memo);
        assert_eq!(p2.get(&vec![2, 0]), Some(&IntPolynomial::one()));
        assert_eq!(p2.get(&vec![0, 2]), Some(&IntPolynomial::one()));
        assert_eq!(
            p2.get(&vec![1, 1]),
            Some(&IntPolynomial { coeffs: vec![1, -1] })
        );
    }

    #[test]
    fn charge_equals_hall_littlewood_inversion() {
        for n in 1..=5u32 {
            let parts = Partition::all(n);
            for l in &parts {
                for m in &parts {
                    assert_eq!(
                        kostka(l, m).unwrap(),
                        kostka_via_hall_littlewood(l, m),
                        "lambda={l:?} mu={m:?}"
                    );
                }
            }
        }
    }
}
