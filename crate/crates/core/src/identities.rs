//! The two closed-form telescoping sums over `n in [s, M]`, their direct
//! evaluation, and a replay of the telescoping argument through the
//! certificates in [`crate::wz`].
//!
//! Left-hand sides are summed term by term from fresh rising factorials and
//! right-hand sides are closed-form products; the two paths share nothing
//! but [`rising_factorial`].

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat, rising_factorial, sign_power, Rational};
use crate::wz::{Certificate, CertificateId, TermPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Alternating sum with cubic weight `(2ln+1)(l^2n^2+ln+1-l^2s^2)`.
    One,
    /// Positive sum with weight `(2ln+1)(2l^2n^2+2ln+1-l^2s^2)` and `(1/l)_n^2`.
    Two,
}

impl Theorem {
    pub const ALL: [Theorem; 2] = [Theorem::One, Theorem::Two];

    pub fn number(self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
        }
    }

    /// The certificate whose telescoping proves this sum.
    pub fn certificate(self) -> CertificateId {
        match self {
            Theorem::One => CertificateId::Wz,
            Theorem::Two => CertificateId::Zeilberger,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.number())
    }
}

/// `(l, s, M)` with `l >= 1`, `s >= 0`, `M >= s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdentityParams {
    ell: i64,
    s: i64,
    m: i64,
}

impl IdentityParams {
    pub fn new(ell: i64, s: i64, m: i64) -> Result<Self> {
        if ell < 1 || s < 0 || m < s {
            return Err(Error::InvalidParameters("need l >= 1, s >= 0, M >= s"));
        }
        Ok(IdentityParams { ell, s, m })
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn m(&self) -> i64 {
        self.m
    }
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(l={}, s={}, M={})", self.ell, self.s, self.m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub theorem: Theorem,
    pub params: IdentityParams,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
    /// Summands for `n = s..=M`, when requested.
    pub trace: Option<Vec<Rational>>,
}

impl IdentityReport {
    fn new(theorem: Theorem, params: IdentityParams, lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        IdentityReport {
            theorem,
            params,
            lhs,
            rhs,
            equal,
            trace: None,
        }
    }
}

fn weight(theorem: Theorem, ell: i64, s: i64, n: i64) -> Rational {
    let (l, s, n) = (int(ell), int(s), int(n));
    let linear = int(2) * &l * &n + int(1);
    let ln = &l * &n;
    let ls_sq = &l * &l * &s * &s;
    let quadratic = match theorem {
        Theorem::One => &ln * &ln + &ln + int(1) - ls_sq,
        Theorem::Two => int(2) * &ln * &ln + int(2) * &ln + int(1) - ls_sq,
    };
    linear * quadratic
}

/// `(a)_{n+s} (a)_{n-s} (a)_n^j`.
fn pochhammer_block(a: &Rational, n: i64, s: i64, power_of_n: u32) -> Rational {
    let rf = |m: i64| rising_factorial(a, m).expect("nonnegative index");
    let mut v = rf(n + s) * rf(n - s);
    let pn = rf(n);
    for _ in 0..power_of_n {
        v *= &pn;
    }
    v
}

fn n_power(theorem: Theorem) -> u32 {
    match theorem {
        Theorem::One => 1,
        Theorem::Two => 2,
    }
}

fn summand_with<W>(theorem: Theorem, p: &IdentityParams, n: i64, weight: W) -> Rational
where
    W: Fn(Theorem, i64, i64, i64) -> Rational,
{
    let inv_ell = rat(1, p.ell);
    let j = n_power(theorem);
    let ratio =
        pochhammer_block(&inv_ell, n, p.s, j) / pochhammer_block(&Rational::one(), n, p.s, j);
    let sign = match theorem {
        Theorem::One => sign_power(n),
        Theorem::Two => Rational::one(),
    };
    sign * weight(theorem, p.ell, p.s, n) * ratio
}

/// The `n`-th term of the left-hand sum, for `s <= n`.
pub fn summand(theorem: Theorem, p: &IdentityParams, n: i64) -> Rational {
    summand_with(theorem, p, n, weight)
}

pub(crate) fn lhs_with<W>(theorem: Theorem, p: &IdentityParams, weight: W) -> Rational
where
    W: Fn(Theorem, i64, i64, i64) -> Rational + Copy,
{
    (p.s..=p.m)
        .map(|n| summand_with(theorem, p, n, weight))
        .sum()
}

pub fn lhs(theorem: Theorem, p: &IdentityParams) -> Rational {
    lhs_with(theorem, p, weight)
}

/// Closed form `(+-1)^M (1+1/l)_{M+s} (1+1/l)_{M-s} (1+1/l)_M^j / [(1)_{M+s} (1)_{M-s} (1)_M^j]`.
pub fn rhs(theorem: Theorem, p: &IdentityParams) -> Rational {
    let a = rat(p.ell + 1, p.ell);
    let j = n_power(theorem);
    let value = pochhammer_block(&a, p.m, p.s, j) / pochhammer_block(&Rational::one(), p.m, p.s, j);
    match theorem {
        Theorem::One => sign_power(p.m) * value,
        Theorem::Two => value,
    }
}

pub fn lhs_theorem1(p: &IdentityParams) -> Rational {
    lhs(Theorem::One, p)
}

pub fn rhs_theorem1(p: &IdentityParams) -> Rational {
    rhs(Theorem::One, p)
}

pub fn lhs_theorem2(p: &IdentityParams) -> Rational {
    lhs(Theorem::Two, p)
}

pub fn rhs_theorem2(p: &IdentityParams) -> Rational {
    rhs(Theorem::Two, p)
}

pub fn verify_identity(theorem: Theorem, p: &IdentityParams) -> IdentityReport {
    IdentityReport::new(theorem, *p, lhs(theorem, p), rhs(theorem, p))
}

/// As [`verify_identity`], keeping every summand.
pub fn verify_identity_traced(theorem: Theorem, p: &IdentityParams) -> IdentityReport {
    let terms: Vec<Rational> = (p.s..=p.m).map(|n| summand(theorem, p, n)).collect();
    let total = terms.iter().cloned().sum();
    let mut report = IdentityReport::new(theorem, *p, total, rhs(theorem, p));
    report.trace = Some(terms);
    report
}

/// Outcome of replaying the telescoping argument for one parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct ReplayReport {
    /// `lhs` is the telescoped reconstruction `sum c {p F(n,0) - q F(n,1)}`,
    /// `rhs` is `c {G(M+1,1) - G(s,1)}`.
    pub report: IdentityReport,
    /// `c = l^2 (1/l)_{1+s} (1/l)_{1-s}`.
    pub multiplier: Rational,
    /// Each reconstructed term equals the corresponding summand.
    pub termwise: bool,
    /// Reconstructed left side equals the direct sum.
    pub lhs_matches: bool,
    /// Boundary term equals the closed form.
    pub rhs_matches: bool,
    /// `(1/l)_{1-s}` agrees with the reciprocal of `(1/l - (s-1))_{s-1}` and `G(s,1) = 0`.
    pub multiplier_consistent: bool,
    /// Every partial sum up to `m` equals `c {G(m+1,1) - G(s,1)}`.
    pub partial_sums: bool,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.report.equal
            && self.termwise
            && self.lhs_matches
            && self.rhs_matches
            && self.multiplier_consistent
            && self.partial_sums
    }
}

/// `c = l^2 (1/l)_{1+s} (1/l)_{1-s}`; a pole for `l = 1, s >= 2`.
pub fn telescoping_multiplier(p: &IdentityParams) -> Result<Rational> {
    let inv_ell = rat(1, p.ell);
    let ell = int(p.ell);
    Ok(&ell * &ell * rising_factorial(&inv_ell, 1 + p.s)? * rising_factorial(&inv_ell, 1 - p.s)?)
}

pub fn replay_telescoping_proof(theorem: Theorem, p: &IdentityParams) -> Result<ReplayReport> {
    let c = telescoping_multiplier(p)?;
    let cert = Certificate::new(theorem.certificate());
    let at_k1 = TermPoint::raw(p.ell, p.s, p.s, 1);
    let left = cert.left.eval(&at_k1.as_point())?;
    let right = cert.right.eval(&at_k1.as_point())?;

    let inv_ell = rat(1, p.ell);
    let shift = rising_factorial(&(&inv_ell - int(p.s - 1)), p.s - 1)?;
    let g_boundary = cert.eval_g(&TermPoint::raw(p.ell, p.s, p.s, 1))?;
    let multiplier_consistent = g_boundary.is_zero()
        && (p.s < 2 || rising_factorial(&inv_ell, 1 - p.s)? * shift == Rational::one());

    let mut termwise = true;
    let mut partial_sums = true;
    let mut reconstructed = Rational::zero();
    let mut direct = Rational::zero();
    for n in p.s..=p.m {
        let f0 = cert.eval_f(&TermPoint::raw(p.ell, p.s, n, 0))?;
        let f1 = cert.eval_f(&TermPoint::raw(p.ell, p.s, n, 1))?;
        let term = &c * (&left * f0 - &right * f1);
        let expected = summand(theorem, p, n);
        termwise &= term == expected;
        reconstructed += term;
        direct += expected;

        let g_next = cert.eval_g(&TermPoint::raw(p.ell, p.s, n + 1, 1))?;
        partial_sums &= direct == &c * (g_next - &g_boundary);
    }
    let g_end = cert.eval_g(&TermPoint::raw(p.ell, p.s, p.m + 1, 1))?;
    let boundary = &c * (g_end - &g_boundary);
    let rhs_matches = boundary == rhs(theorem, p);
    let lhs_matches = reconstructed == lhs(theorem, p);

    Ok(ReplayReport {
        report: IdentityReport::new(theorem, *p, reconstructed, boundary),
        multiplier: c,
        termwise,
        lhs_matches,
        rhs_matches,
        multiplier_consistent,
        partial_sums,
    })
}

/// Partial sums of the left side for `m = s..=M`.
pub fn partial_sums(theorem: Theorem, p: &IdentityParams) -> Vec<Rational> {
    let mut acc = Rational::zero();
    (p.s..=p.m)
        .map(|n| {
            acc += summand(theorem, p, n);
            acc.clone()
        })
        .collect()
}

/// The `s = 0` sums written without the `s` parameter, with their closed forms.
fn reduced_sum(theorem: Theorem, ell: i64, m: i64) -> (Rational, Rational) {
    let l = int(ell);
    let inv_ell = rat(1, ell);
    let mut total = Rational::zero();
    for n in 0..=m {
        let n_r = int(n);
        let ratio = rising_factorial(&inv_ell, n).expect("nonnegative index")
            / rising_factorial(&Rational::one(), n).expect("nonnegative index");
        let ln = &l * &n_r;
        let linear = int(2) * &ln + int(1);
        let term = match theorem {
            Theorem::One => {
                let r3 = &ratio * &ratio * &ratio;
                sign_power(n) * linear * (&ln * &ln + &ln + int(1)) * r3
            }
            Theorem::Two => {
                let r2 = &ratio * &ratio;
                linear * (int(2) * &ln * &ln + int(2) * &ln + int(1)) * &r2 * &r2
            }
        };
        total += term;
    }
    let closed_ratio = rising_factorial(&(&inv_ell + int(1)), m).expect("nonnegative index")
        / rising_factorial(&Rational::one(), m).expect("nonnegative index");
    let closed = match theorem {
        Theorem::One => sign_power(m) * &closed_ratio * &closed_ratio * &closed_ratio,
        Theorem::Two => {
            let sq = &closed_ratio * &closed_ratio;
            &sq * &sq
        }
    };
    (total, closed)
}

/// Checks that the `s = 0` case reproduces the earlier one-parameter sums.
/// `equal` holds only if the reduced sum matches its closed form and both
/// sides of the general identity at `s = 0` agree with them.
pub fn special_case_res(theorem: Theorem, ell: i64, m: i64) -> Result<IdentityReport> {
    let p = IdentityParams::new(ell, 0, m)?;
    let (sum, closed) = reduced_sum(theorem, ell, m);
    let general = verify_identity(theorem, &p);
    let agree = general.lhs == sum && general.rhs == closed;
    let mut report = IdentityReport::new(theorem, p, sum, closed);
    report.equal &= agree;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(ell: i64, s: i64, m: i64) -> IdentityParams {
        IdentityParams::new(ell, s, m).unwrap()
    }

    #[test]
    fn theorem_one_examples() {
        assert_eq!(lhs_theorem1(&params(1, 0, 0)), int(1));
        assert_eq!(lhs_theorem1(&params(1, 1, 1)), int(-6));
        assert_eq!(lhs_theorem1(&params(2, 0, 1)), rat(-27, 8));
        assert_eq!(rhs_theorem1(&params(1, 0, 0)), int(1));
        assert_eq!(rhs_theorem1(&params(1, 1, 1)), int(-6));
        assert_eq!(rhs_theorem1(&params(2, 0, 1)), rat(-27, 8));
    }

    #[test]
    fn theorem_two_examples() {
        assert_eq!(lhs_theorem2(&params(1, 0, 0)), int(1));
        assert_eq!(lhs_theorem2(&params(1, 1, 1)), int(12));
        assert_eq!(lhs_theorem2(&params(2, 0, 1)), rat(81, 16));
        assert_eq!(rhs_theorem2(&params(1, 0, 0)), int(1));
        assert_eq!(rhs_theorem2(&params(1, 1, 1)), int(12));
        assert_eq!(rhs_theorem2(&params(2, 0, 1)), rat(81, 16));
    }

    #[test]
    fn params_validation() {
        assert!(IdentityParams::new(0, 0, 0).is_err());
        assert!(IdentityParams::new(1, -1, 0).is_err());
        assert!(IdentityParams::new(1, 3, 2).is_err());
    }

    #[test]
    fn verify_identity_examples() {
        assert!(verify_identity(Theorem::One, &params(3, 2, 7)).equal);
        assert!(verify_identity(Theorem::Two, &params(4, 1, 9)).equal);
        let drop_shift = |t: Theorem, ell: i64, s: i64, n: i64| {
            let _ = s;
            weight(t, ell, 0, n)
        };
        let p = params(2, 1, 3);
        assert_ne!(lhs_with(Theorem::One, &p, drop_shift), rhs_theorem1(&p));
    }

    #[test]
    fn trace_sums_to_lhs() {
        let p = params(3, 1, 6);
        let r = verify_identity_traced(Theorem::Two, &p);
        assert!(r.equal);
        assert_eq!(r.trace.as_ref().unwrap().len(), 6);
        assert_eq!(r.lhs, lhs_theorem2(&p));
        assert!(verify_identity(Theorem::Two, &p).trace.is_none());
    }

    #[test]
    fn replay_examples() {
        let r = replay_telescoping_proof(Theorem::One, &params(2, 1, 4)).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = replay_telescoping_proof(Theorem::Two, &params(3, 0, 5)).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = replay_telescoping_proof(Theorem::One, &params(1, 0, 0)).unwrap();
        assert!(r.passed());
        assert_eq!(r.report.lhs, int(1));
    }

    #[test]
    fn replay_pole_for_unit_ell() {
        for s in 2..5 {
            assert_eq!(
                replay_telescoping_proof(Theorem::One, &params(1, s, s + 3)),
                Err(Error::Pole)
            );
        }
        // s = 1 is still finite: (1)_0 = 1
        assert!(replay_telescoping_proof(Theorem::Two, &params(1, 1, 5))
            .unwrap()
            .passed());
    }

    #[test]
    fn special_cases() {
        let r = special_case_res(Theorem::One, 2, 1).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, rat(-27, 8));
        let r = special_case_res(Theorem::Two, 2, 1).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs, rat(81, 16));
        let r = special_case_res(Theorem::One, 1, 0).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, int(1));
    }

    #[test]
    fn partial_sums_end_at_lhs() {
        let p = params(2, 2, 8);
        let sums = partial_sums(Theorem::One, &p);
        assert_eq!(sums.len(), 7);
        assert_eq!(sums.last().unwrap(), &lhs_theorem1(&p));
    }
}
