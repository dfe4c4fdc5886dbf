//! Verification suites.  Each suite checks one acceptance criterion at
//! its full stated range, exactly (no tolerances: every comparison is an
//! identity of exact arithmetic objects).

use charsheaf::almost::{extract_cuspidal_scalar, transform_matrix};
use charsheaf::exactalg::cyclo::{rat, rat_int, CycLaurent, LaurentFraction, Rat};
use charsheaf::exactalg::{ExtendedCharLabel, Partition, SnCharLabel};
use charsheaf::fforacle;
use charsheaf::gggr;
use charsheaf::green;
use charsheaf::lseries;
use charsheaf::orbits::{component_groups, prime_to_p_part, CyclicF};
use charsheaf::sheaves;
use charsheaf::springer::{blocks, springer_map};
use num_integer::Integer;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub suite: String,
    pub pass: bool,
    pub details: Vec<String>,
}

impl CriterionReport {
    fn new(id: u32, suite: &str) -> Self {
        CriterionReport {
            id,
            suite: suite.into(),
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: String) {
        if !ok {
            self.pass = false;
            self.details.push(format!("FAIL: {detail}"));
        }
    }

    fn note(&mut self, detail: String) {
        self.details.push(detail);
    }
}

/// Smallest prime not dividing `n` (used where a criterion quantifies
/// over every block of `SL_n`: this makes `n' = n`).
fn coprime_p(n: u32) -> u32 {
    for p in [2u32, 3, 5, 7, 11, 13] {
        if n % p != 0 {
            return p;
        }
    }
    17
}

/// A prime power `q = 1 mod n` (every block and local system F-stable).
fn split_q(n: u32) -> u64 {
    match n {
        1 => 2,
        2 => 3,
        3 => 4,
        4 => 5,
        5 => 11,
        6 => 7,
        _ => panic!("no split q configured for n = {n}"),
    }
}

/// Criterion 1: the Eq-(1.6.4)-type parameter count equals the oracle
/// class count for (n, q) in {(2,3),(2,4),(2,5),(3,2),(3,4)}.
pub fn irr_count_suite() -> CriterionReport {
    let mut r = CriterionReport::new(1, "irr-count");
    let expected_sl2 = [(3u32, 7u64), (4, 5), (5, 9)];
    for (q, expect) in expected_sl2 {
        let got = lseries::irr_count(2, q).unwrap();
        r.check(got == expect, format!("irr_count(2,{q}) = {got}, frozen {expect}"));
    }
    for (n, q) in [(2u32, 3u32), (2, 4), (2, 5), (3, 2), (3, 4)] {
        let combinatorial = lseries::irr_count(n, q).unwrap();
        let oracle = fforacle::conjugacy_classes(n, q).unwrap().classes.len() as u64;
        r.check(
            combinatorial == oracle,
            format!("(n,q)=({n},{q}): parameter count {combinatorial} vs census {oracle}"),
        );
        r.note(format!("(n,q)=({n},{q}): {combinatorial} = {oracle}"));
    }
    r
}

/// Criterion 2: the Springer census identity
/// `sum_mu n'_mu = sum_{d | n'} phi(d) p(n/d)` for n <= 30,
/// p in {2,3,5,7}.
pub fn census_suite() -> CriterionReport {
    let mut r = CriterionReport::new(2, "census");
    for p in [2u32, 3, 5, 7] {
        for n in 1..=30u32 {
            let n_prime = prime_to_p_part(n, p);
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
                    rhs += charsheaf::exactalg::cyclo::phi(d) as u64 * Partition::count(n / d);
                }
            }
            r.check(lhs == rhs, format!("n={n} p={p}: {lhs} vs {rhs}"));
        }
    }
    r.note("all n <= 30, p in {2,3,5,7}".into());
    r
}

/// Criterion 3: Kostka suite for |lambda| <= 6.
pub fn kostka_suite() -> CriterionReport {
    let mut r = CriterionReport::new(3, "kostka");
    let mut pairs = 0u32;
    for n in 1..=6u32 {
        let parts = Partition::all(n);
        for l in &parts {
            for m in &parts {
                pairs += 1;
                let k = green::kostka(l, m).unwrap();
                if l == m {
                    r.check(k == green::IntPolynomial::one(), format!("K_{{{l:?},{l:?}}} != 1"));
                }
                if !l.dominates(m) {
                    r.check(k.is_zero(), format!("dominance vanishing {l:?} {m:?}"));
                } else {
                    r.check(
                        k.eval_at_one() as u64 == green::ssyt_count(l, m),
                        format!("K(1) vs tableau count at {l:?} {m:?}"),
                    );
                    if !k.is_zero() {
                        r.check(
                            k.degree().unwrap() as u64 == m.b_invariant() - l.b_invariant(),
                            format!("degree at {l:?} {m:?}"),
                        );
                    }
                }
                let hl = green::kostka_via_hall_littlewood(l, m);
                r.check(k == hl, format!("charge vs Hall-Littlewood at {l:?} {m:?}"));
            }
        }
    }
    r.note(format!("{pairs} pairs checked by both routes"));
    r
}

/// Criterion 4: the rescaled intersection-cohomology entries are
/// polynomials in t, divisible by t off the diagonal, on every block of
/// `SL_n`, n <= 12.
pub fn rescaling_suite() -> CriterionReport {
    let mut r = CriterionReport::new(4, "rescaling");
    let mut count = 0u64;
    for n in 1..=12u32 {
        let p = coprime_p(n);
        for b in blocks(n, p) {
            let members = b.members();
            for i2 in &members {
                for i1 in &members {
                    let k = green::p_polynomial(i2, i1, &b).unwrap();
                    count += 1;
                    if i2 == i1 {
                        r.check(
                            k == green::IntPolynomial::one(),
                            format!("diagonal entry n={n} d={} {i1:?}", b.d),
                        );
                    } else if !k.is_zero() {
                        r.check(
                            k.coeff(0) == 0,
                            format!("off-diagonal divisibility by t: n={n} d={} {i2:?} {i1:?}", b.d),
                        );
                    }
                    if !i1.orbit.dominates(&i2.orbit) {
                        r.check(
                            k.is_zero(),
                            format!("closure vanishing n={n} d={}", b.d),
                        );
                    }
                }
            }
        }
    }
    r.note(format!("{count} block pairs, n <= 12, all blocks"));
    r
}

/// Criterion 5: the regular-nilpotent closed form agrees with the
/// general closed form symbolically in u, over all blocks, n <= 6.
pub fn lemma511_512_suite() -> CriterionReport {
    let mut r = CriterionReport::new(5, "lemma511-512");
    for n in 2..=6u32 {
        let q = split_q(n);
        let p = lseries::smallest_prime_factor(q as u32);
        let reg = Partition::new(vec![n]).unwrap();
        let a = component_groups(&reg, p, q).a_g_u;
        for b in blocks(n, p) {
            for iota in b.members() {
                for c in 0..a.invariant_size() {
                    for zp in [0i64, 1] {
                        let zeta = CycLaurent::root_of_unity(4, zp);
                        let lhs = gggr::gggr_x_inner_regular(c, 0, &iota, &b, &zeta, q).unwrap();
                        let rhs = gggr::gggr_x_inner(c, 0, &reg, &iota, &b, &zeta, q).unwrap();
                        r.check(
                            lhs == rhs,
                            format!("n={n} d={} c={c} zeta=i^{zp} iota={iota:?}", b.d),
                        );
                    }
                }
            }
        }
    }
    r.note("n <= 6, all blocks, symbolic u, zeta in {1, i}".into());
    r
}

/// Criterion 6: omega symmetry, the frozen SL_2 values, and the Gram
/// factorization against oracle centralizer orders at q = 3.
pub fn omega_gram_suite() -> CriterionReport {
    let mut r = CriterionReport::new(6, "omega-gram");
    // symmetry over all blocks up to n = 8
    for n in 2..=8u32 {
        let p = coprime_p(n);
        for b in blocks(n, p) {
            let data = green::block_class_data(&b);
            let members = b.members();
            for x in &members {
                for y in &members {
                    let a = green::omega_with_data(x, y, &b, &data).unwrap();
                    let bb = green::omega_with_data(y, x, &b, &data).unwrap();
                    r.check(a == bb, format!("symmetry n={n} d={}", b.d));
                }
            }
        }
    }
    // frozen SL_2 values
    let bs = blocks(2, 3);
    let reg = springer_map(&bs[0], &Partition::new(vec![2]).unwrap());
    let w = green::omega(&reg, &reg, &bs[0]).unwrap();
    r.check(w == CycLaurent::q_pow(2), format!("omega(reg,reg) = {w:?}, expected q^2"));
    let f = green::x_inner(&reg, &reg, &bs[0]).unwrap();
    let expect = LaurentFraction::new(CycLaurent::q_pow(1), CycLaurent::q_pow_minus_one(2));
    r.check(f == expect, "x_inner(reg,reg) = q/(q^2-1)".into());
    r.check(
        f.eval_q(&rat_int(3)).unwrap() == rat(3, 8),
        "x_inner at q=3 is 3/8".into(),
    );
    // Gram factorization at q = 3, n in {2, 3}
    for n in [2u32, 3] {
        let q = 3u32;
        let census = fforacle::conjugacy_classes(n, q).unwrap();
        let field = fforacle::Field::new(q).unwrap();
        for b in blocks(n, q) {
            let members = b.members();
            let d_diag: Vec<Rat> = members
                .iter()
                .map(|m| {
                    let mut acc = rat(0, 1);
                    for z in census.unipotent_class_centralizers(&field, &m.orbit) {
                        acc += rat(1, z as i64);
                    }
                    acc
                })
                .collect();
            for a in &members {
                for bb in &members {
                    let lhs = green::x_inner(a, bb, &b)
                        .unwrap()
                        .eval_q(&rat_int(q as i64))
                        .unwrap();
                    let mut rhs = rat(0, 1);
                    for (k, c) in members.iter().enumerate() {
                        let p1 = green::bp_at_q(c, a, &b).unwrap();
                        let p2 = green::bp_at_q(c, bb, &b).unwrap();
                        if p1.is_zero() || p2.is_zero() {
                            continue;
                        }
                        rhs += p1.eval_q(&rat_int(q as i64)).unwrap().as_rational().unwrap()
                            * p2.eval_q(&rat_int(q as i64)).unwrap().as_rational().unwrap()
                            * d_diag[k].clone();
                    }
                    r.check(lhs == rhs, format!("Gram factorization n={n} d={}", b.d));
                }
            }
        }
    }
    r.note("symmetry n <= 8; SL_2 frozen values; Gram vs oracle q=3 n in {2,3}".into());
    r
}

/// Criterion 7: exact unitarity of the transform matrices for t <= 24
/// and all multipliers, plus the pairing compatibility for t <= 12.
pub fn unitarity_suite() -> CriterionReport {
    let mut r = CriterionReport::new(7, "unitarity");
    for t in 1..=24u32 {
        for m in 1..=t {
            if (m as i64).gcd(&(t as i64)) != 1 {
                continue;
            }
            let ctx = CyclicF::new(t, m as u64);
            let tm = transform_matrix(&ctx);
            r.check(tm.is_unitary(), format!("unitarity t={t} m={m}"));
            for (i, nrm) in tm.row_norms().iter().enumerate() {
                r.check(
                    *nrm == CycLaurent::one(),
                    format!("row norm t={t} m={m} row={i}"),
                );
            }
        }
    }
    for t in 1..=12u32 {
        for m in 1..=t {
            if (m as i64).gcd(&(t as i64)) != 1 {
                continue;
            }
            let b = lseries::bijection_27(t, m).unwrap();
            r.check(
                b.pairing_identity_holds(),
                format!("pairing compatibility t={t} m={m}"),
            );
        }
    }
    r.note("t <= 24 all multipliers; compatibility t <= 12".into());
    r
}

/// Criterion 8: the twist class is trivial for SL_2 at odd q <= 7, and
/// the scalar extracted from the two closed-form inner products equals
/// `zeta^-1 eps(c_0)^-1` symbolically for t in {2, 3}.
pub fn c0_scalar_suite() -> CriterionReport {
    let mut r = CriterionReport::new(8, "c0-scalar");
    let two = Partition::new(vec![2]).unwrap();
    for q in [3u32, 5, 7] {
        let res = fforacle::solve_twist_c0(2, q, &two).unwrap();
        r.check(res.c0_class == 0, format!("c0 trivial for SL_2(F_{q})"));
    }
    // t = 3 oracle (needs p > n): SL_3(F_7)
    let three = Partition::new(vec![3]).unwrap();
    let res3 = fforacle::solve_twist_c0(3, 7, &three).unwrap();
    r.note(format!("solve_twist_c0(3,7,(3)) = class {}", res3.c0_class));
    // symbolic extraction for t in {2, 3}
    for (t, q, c0) in [(2u32, 3u64, 0u32), (2, 7, 0), (3, 7, res3.c0_class), (3, 4, 0)] {
        let ctx = CyclicF::new(t, q);
        let a = ctx.invariant_size();
        for eps in 0..a {
            for zp in [0i64, 1] {
                let zeta = CycLaurent::root_of_unity(4, zp);
                let got =
                    extract_cuspidal_scalar(&ctx, eps, &zeta, c0 % a, &CycLaurent::one()).unwrap();
                let expect = zeta
                    .conj()
                    .mul(&CycLaurent::root_of_unity(a, -((eps as i64) * (c0 % a) as i64)));
                r.check(
                    got == expect,
                    format!("extraction t={t} q={q} eps={eps} zeta=i^{zp}"),
                );
            }
        }
    }
    r
}

/// Criterion 9: the location rule has a unique solution for every
/// admissible datum with n <= 8, and the Psi map is a bijection
/// `X_M^{F''} -> (Omega^)^{F''}` for all moduli <= 24.
pub fn ze_location_suite() -> CriterionReport {
    let mut r = CriterionReport::new(9, "ze-location");
    let mut tested = 0u64;
    for q in [3u64, 4, 5] {
        let p = lseries::smallest_prime_factor(q as u32);
        for n in 1..=8u32 {
            for t in 1..=n {
                if n % t != 0 || (t as i64).gcd(&(p as i64)) != 1 {
                    continue;
                }
                for d in 1..=t {
                    if t % d != 0 {
                        continue;
                    }
                    let ctx = sheaves::endomorphism_data(n, t, d, q).unwrap();
                    let k = ctx.factor_count;
                    for beta in Partition::all(n / t) {
                        let mu = beta.scale(t);
                        for twist in 0..k {
                            // F''-stable twists only
                            if (twist as u64 * (q + k as u64 - 1)) % k as u64 != 0 {
                                continue;
                            }
                            let e = ExtendedCharLabel::new(
                                SnCharLabel::new(beta.clone()),
                                k,
                                twist,
                            );
                            tested += 1;
                            match sheaves::locate_ze(&e, &mu, &ctx) {
                                Ok(loc) => {
                                    r.check(
                                        loc.z_e == (d * loc.x_e) % t,
                                        format!("z_E image n={n} t={t} d={d}"),
                                    );
                                }
                                Err(err) => {
                                    r.check(
                                        false,
                                        format!(
                                            "uniqueness failed n={n} t={t} d={d} q={q} beta={beta:?} twist={twist}: {err}"
                                        ),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Psi bijection for all moduli <= 24 and all multipliers
    for k in 1..=24u32 {
        for m in 1..=k {
            if (m as i64).gcd(&(k as i64)) != 1 {
                continue;
            }
            let xm = CyclicF::new(k, m as u64);
            let mut images: Vec<u32> = xm.fixed_points().iter().map(|&x| (k - x % k) % k).collect();
            images.sort_unstable();
            let mut expect = xm.stable_char_indices();
            expect.sort_unstable();
            r.check(images == expect, format!("Psi bijection k={k} m={m}"));
        }
    }
    r.note(format!("{tested} location data, hard-failure mode"));
    r
}

/// Criterion 10: assembled scalar records have exact modulus 1, and the
/// `d = t` reduction matches the criterion-8 extraction.
pub fn scalar_record_suite() -> CriterionReport {
    let mut r = CriterionReport::new(10, "scalar-record");
    for t in [2u32, 3, 4, 6] {
        for q in [3u64, 4, 5, 7] {
            let ctx = CyclicF::new(t, q);
            let a = ctx.invariant_size();
            for eps in 0..a {
                for c0 in 0..a {
                    for zp in 0..4i64 {
                        let zeta = CycLaurent::root_of_unity(4, zp);
                        let eps_c0 = CycLaurent::root_of_unity(a, eps as i64 * c0 as i64);
                        let alpha = CycLaurent::root_of_unity(8, 1);
                        let central = CycLaurent::one();
                        let rec = sheaves::nu_scalar(&zeta, &eps_c0, &alpha, &central, 1).unwrap();
                        r.check(
                            rec.product().is_unitary(),
                            format!("modulus 1: t={t} q={q} eps={eps} c0={c0}"),
                        );
                        // cuspidal reduction (alpha = central = 1)
                        let rec0 =
                            sheaves::nu_scalar(&zeta, &eps_c0, &CycLaurent::one(), &central, 1)
                                .unwrap();
                        let extracted =
                            extract_cuspidal_scalar(&ctx, eps, &zeta, c0, &central).unwrap();
                        r.check(
                            rec0.product() == extracted,
                            format!("d=t reduction: t={t} q={q} eps={eps} c0={c0} zeta=i^{zp}"),
                        );
                    }
                }
            }
        }
    }
    r.note("modulus-1 exact; cuspidal reduction equals the extraction".into());
    r
}

pub const SUITES: &[(&str, fn() -> CriterionReport)] = &[
    ("irr-count", irr_count_suite),
    ("census", census_suite),
    ("kostka", kostka_suite),
    ("rescaling", rescaling_suite),
    ("lemma511-512", lemma511_512_suite),
    ("omega-gram", omega_gram_suite),
    ("unitarity", unitarity_suite),
    ("c0-scalar", c0_scalar_suite),
    ("ze-location", ze_location_suite),
    ("scalar-record", scalar_record_suite),
];

pub fn run_suite(name: &str) -> Option<CriterionReport> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, f)| f())
}
