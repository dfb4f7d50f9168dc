//! The two certificate pairs `(F, G)` behind the telescoping identities.
//!
//! Each hypergeometric term is stored structurally: a sign exponent, a
//! polynomial prefactor, rising factorials in the numerator and rising
//! factorials whose reciprocals appear in the denominator. Reciprocal
//! factors go through [`inv_rising_factorial`], so `1/(1)_m = 0` for
//! negative `m` holds without special cases.
//!
//! The pair satisfies
//!
//! ```text
//! p(k) F(n,k-1) - q(k) F(n,k) = G(n+1,k) - G(n,k)
//! ```
//!
//! with `p = q = 1` for [`CertificateId::Wz`] and `p = Lk - L + 1`,
//! `q = Lk - L + 2` for [`CertificateId::Zeilberger`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, inv_rising_factorial, rat, rising_factorial, sign_power, Rational};
use crate::mpoly::{linear, point, MPoly, Point, RationalFunction, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertificateId {
    /// Plain WZ pair, `F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)`.
    Wz,
    /// Pair with polynomial multipliers `p(k), q(k)` found by Zeilberger's algorithm.
    Zeilberger,
}

impl CertificateId {
    pub const ALL: [CertificateId; 2] = [CertificateId::Wz, CertificateId::Zeilberger];

    pub fn name(self) -> &'static str {
        match self {
            CertificateId::Wz => "wz",
            CertificateId::Zeilberger => "zeilberger",
        }
    }
}

impl fmt::Display for CertificateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer evaluation point `(l, s, n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermPoint {
    pub ell: i64,
    pub s: i64,
    pub n: i64,
    pub k: i64,
}

impl TermPoint {
    /// Checked constructor: `l >= 1`, `s, k >= 0`, `n >= s`, `n >= k`.
    pub fn new(ell: i64, s: i64, n: i64, k: i64) -> Result<Self> {
        let pt = TermPoint::raw(ell, s, n, k);
        if !pt.is_admissible() {
            return Err(Error::InvalidParameters(
                "need l >= 1, s >= 0, k >= 0, n >= s, n >= k",
            ));
        }
        Ok(pt)
    }

    /// Unchecked point, for evaluating terms off the certificate domain.
    pub const fn raw(ell: i64, s: i64, n: i64, k: i64) -> Self {
        TermPoint { ell, s, n, k }
    }

    pub fn is_admissible(&self) -> bool {
        self.ell >= 1 && self.s >= 0 && self.k >= 0 && self.n >= self.s && self.n >= self.k
    }

    pub fn with_n(self, n: i64) -> Self {
        TermPoint { n, ..self }
    }

    pub fn with_k(self, k: i64) -> Self {
        TermPoint { k, ..self }
    }

    pub fn as_point(&self) -> Point {
        point([
            (Var::L, int(self.ell)),
            (Var::N, int(self.n)),
            (Var::K, int(self.k)),
            (Var::S, int(self.s)),
        ])
    }
}

impl fmt::Display for TermPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(l={}, s={}, n={}, k={})",
            self.ell, self.s, self.n, self.k
        )
    }
}

/// Affine integer index `n*n + k*k + s*s + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Index {
    pub n: i64,
    pub k: i64,
    pub s: i64,
    pub c: i64,
}

impl Index {
    pub const fn new(n: i64, k: i64, s: i64, c: i64) -> Self {
        Index { n, k, s, c }
    }

    pub fn at(&self, pt: &TermPoint) -> i64 {
        self.n * pt.n + self.k * pt.k + self.s * pt.s + self.c
    }

    pub fn shifted(self, by: i64) -> Self {
        Index {
            c: self.c + by,
            ..self
        }
    }

    fn as_poly(&self) -> MPoly {
        linear(0, self.n, self.k, self.s, self.c)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `1/l`
    InvEll,
    /// `1`
    One,
}

impl Base {
    pub fn value(self, ell: i64) -> Rational {
        match self {
            Base::InvEll => rat(1, ell),
            Base::One => Rational::one(),
        }
    }
}

/// Rising factorial `(base)_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pochhammer {
    pub base: Base,
    pub index: Index,
}

impl Pochhammer {
    pub const fn new(base: Base, index: Index) -> Self {
        Pochhammer { base, index }
    }
}

impl fmt::Display for Pochhammer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            Base::InvEll => "1/L",
            Base::One => "1",
        };
        write!(f, "({base})_({})", self.index)
    }
}

/// `(-1)^sign * prefactor * prod(rising) / prod(reciprocal)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperTerm {
    pub sign: Index,
    pub prefactor: MPoly,
    pub rising: Vec<Pochhammer>,
    pub reciprocal: Vec<Pochhammer>,
}

impl HyperTerm {
    /// Exact value at `pt`. Reciprocal factors are evaluated first; if any
    /// vanishes the term is zero.
    pub fn eval(&self, pt: &TermPoint) -> Result<Rational> {
        let mut value = Rational::one();
        for f in &self.reciprocal {
            let r = inv_rising_factorial(&f.base.value(pt.ell), f.index.at(pt))?;
            if r.is_zero() {
                return Ok(Rational::zero());
            }
            value *= r;
        }
        for f in &self.rising {
            value *= rising_factorial(&f.base.value(pt.ell), f.index.at(pt))?;
        }
        value *= self.prefactor.eval(&pt.as_point())?;
        Ok(value * sign_power(self.sign.at(pt)))
    }
}

impl fmt::Display for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(-1)^({}) * ({})", self.sign, self.prefactor)?;
        for p in &self.rising {
            write!(f, " * {p}")?;
        }
        f.write_str(" / [")?;
        for (i, p) in self.reciprocal.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Which half of the pair a mutation touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    F,
    G,
}

/// Single structural perturbation of a certificate, used to show that the
/// pointwise checks are sensitive to every element of the description.
#[derive(Clone, Debug, PartialEq)]
pub enum Mutation {
    FlipSign(Part),
    ShiftRising { part: Part, factor: usize, by: i64 },
    ShiftReciprocal { part: Part, factor: usize, by: i64 },
    ReplacePrefactor { part: Part, prefactor: MPoly },
    ScaleG(i64),
}

/// A certificate pair together with its recurrence multipliers.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub id: CertificateId,
    pub f: HyperTerm,
    pub g: HyperTerm,
    /// Multiplier of `F(n,k-1)`.
    pub left: MPoly,
    /// Multiplier of `F(n,k)`.
    pub right: MPoly,
}

const fn inv_ell(n: i64, k: i64, s: i64, c: i64) -> Pochhammer {
    Pochhammer::new(Base::InvEll, Index::new(n, k, s, c))
}

const fn one(n: i64, k: i64, s: i64, c: i64) -> Pochhammer {
    Pochhammer::new(Base::One, Index::new(n, k, s, c))
}

impl Certificate {
    pub fn new(id: CertificateId) -> Self {
        let ell = MPoly::var(Var::L);
        let two_ell_n_plus_1 = &(&ell * &MPoly::var(Var::N)).scale(&int(2)) + &MPoly::one();
        match id {
            CertificateId::Wz => Certificate {
                id,
                f: HyperTerm {
                    sign: Index::new(1, 1, 0, 0),
                    prefactor: two_ell_n_plus_1,
                    rising: vec![
                        inv_ell(1, 0, 1, 0),
                        inv_ell(1, 0, -1, 0),
                        inv_ell(1, 1, 0, 0),
                    ],
                    reciprocal: vec![
                        one(1, 0, 1, 0),
                        one(1, 0, -1, 0),
                        one(1, -1, 0, 0),
                        inv_ell(0, 1, 1, 0),
                        inv_ell(0, 1, -1, 0),
                    ],
                },
                g: HyperTerm {
                    sign: Index::new(1, 1, 0, 0),
                    prefactor: ell,
                    rising: vec![
                        inv_ell(1, 0, 1, 0),
                        inv_ell(1, 0, -1, 0),
                        inv_ell(1, 1, 0, -1),
                    ],
                    reciprocal: vec![
                        one(1, 0, 1, -1),
                        one(1, 0, -1, -1),
                        one(1, -1, 0, 0),
                        inv_ell(0, 1, 1, 0),
                        inv_ell(0, 1, -1, 0),
                    ],
                },
                left: MPoly::one(),
                right: MPoly::one(),
            },
            CertificateId::Zeilberger => Certificate {
                id,
                f: HyperTerm {
                    sign: Index::new(0, 1, 0, 0),
                    prefactor: two_ell_n_plus_1,
                    rising: vec![
                        inv_ell(1, 0, 1, 0),
                        inv_ell(1, 0, -1, 0),
                        inv_ell(1, 0, 0, 0),
                        inv_ell(1, 1, 0, 0),
                    ],
                    reciprocal: vec![
                        one(1, 0, 1, 0),
                        one(1, 0, -1, 0),
                        one(1, 0, 0, 0),
                        one(1, -1, 0, 0),
                        inv_ell(0, 1, 1, 0),
                        inv_ell(0, 1, -1, 0),
                    ],
                },
                g: HyperTerm {
                    sign: Index::new(0, 1, 0, -1),
                    prefactor: ell.pow(2),
                    rising: vec![
                        inv_ell(1, 0, 1, 0),
                        inv_ell(1, 0, -1, 0),
                        inv_ell(1, 0, 0, 0),
                        inv_ell(1, 1, 0, -1),
                    ],
                    reciprocal: vec![
                        one(1, 0, 1, -1),
                        one(1, 0, -1, -1),
                        one(1, 0, 0, -1),
                        one(1, -1, 0, 0),
                        inv_ell(0, 1, 1, 0),
                        inv_ell(0, 1, -1, 0),
                    ],
                },
                // Lk - L + 1 and Lk - L + 2
                left: &(&ell * &linear(0, 0, 1, 0, -1)) + &MPoly::one(),
                right: &(&ell * &linear(0, 0, 1, 0, -1)) + &MPoly::int(2),
            },
        }
    }

    fn part_mut(&mut self, part: Part) -> &mut HyperTerm {
        match part {
            Part::F => &mut self.f,
            Part::G => &mut self.g,
        }
    }

    pub fn mutated(&self, mutation: &Mutation) -> Self {
        let mut out = self.clone();
        match mutation {
            Mutation::FlipSign(part) => {
                let t = out.part_mut(*part);
                t.sign = t.sign.shifted(1);
            }
            Mutation::ShiftRising { part, factor, by } => {
                if let Some(p) = out.part_mut(*part).rising.get_mut(*factor) {
                    p.index = p.index.shifted(*by);
                }
            }
            Mutation::ShiftReciprocal { part, factor, by } => {
                if let Some(p) = out.part_mut(*part).reciprocal.get_mut(*factor) {
                    p.index = p.index.shifted(*by);
                }
            }
            Mutation::ReplacePrefactor { part, prefactor } => {
                out.part_mut(*part).prefactor = prefactor.clone();
            }
            Mutation::ScaleG(c) => {
                out.g.prefactor = out.g.prefactor.scale(&int(*c));
            }
        }
        out
    }

    pub fn eval_f(&self, pt: &TermPoint) -> Result<Rational> {
        self.f.eval(pt)
    }

    pub fn eval_g(&self, pt: &TermPoint) -> Result<Rational> {
        self.g.eval(pt)
    }

    /// Both sides of the recurrence at `pt`, without domain checks.
    pub fn recurrence_sides(&self, pt: &TermPoint) -> Result<(Rational, Rational)> {
        let at = pt.as_point();
        let lhs = self.left.eval(&at)? * self.eval_f(&pt.with_k(pt.k - 1))?
            - self.right.eval(&at)? * self.eval_f(pt)?;
        let rhs = self.eval_g(&pt.with_n(pt.n + 1))? - self.eval_g(pt)?;
        Ok((lhs, rhs))
    }

    /// Whether the recurrence holds exactly at an admissible point with `k >= 1`.
    pub fn check_recurrence(&self, pt: &TermPoint) -> Result<bool> {
        if !pt.is_admissible() || pt.k < 1 {
            return Err(Error::InvalidParameters(
                "recurrence is checked for n >= s, n >= k >= 1",
            ));
        }
        let (lhs, rhs) = self.recurrence_sides(pt)?;
        Ok(lhs == rhs)
    }

    /// Number of grid points where the recurrence fails or cannot be evaluated.
    pub fn grid_failures(&self, grid: &RecurrenceGrid) -> usize {
        grid.points()
            .filter(|pt| !matches!(self.check_recurrence(pt), Ok(true)))
            .count()
    }

    pub fn check_ratio_consistency(&self, pt: &TermPoint) -> Result<bool> {
        check_ratio_consistency_with(self, &ratio_triple(self.id), pt)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {}", self.id)?;
        writeln!(f, "  F(n,k) = {}", self.f)?;
        writeln!(f, "  G(n,k) = {}", self.g)?;
        write!(
            f,
            "  ({}) F(n,k-1) - ({}) F(n,k) = G(n+1,k) - G(n,k)",
            self.left, self.right
        )
    }
}

/// Rectangular parameter grid `l in [1, ell_max]`, `s in [0, s_max]`,
/// `n in [s, s + n_extent]`, `k in [1, n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecurrenceGrid {
    pub ell_max: i64,
    pub s_max: i64,
    pub n_extent: i64,
}

impl RecurrenceGrid {
    pub fn points(&self) -> impl Iterator<Item = TermPoint> + '_ {
        let (ell_max, s_max, extent) = (self.ell_max, self.s_max, self.n_extent);
        (1..=ell_max).flat_map(move |ell| {
            (0..=s_max).flat_map(move |s| {
                (s..=s + extent)
                    .flat_map(move |n| (1..=n).map(move |k| TermPoint::raw(ell, s, n, k)))
            })
        })
    }
}

pub fn eval_f(id: CertificateId, pt: &TermPoint) -> Result<Rational> {
    Certificate::new(id).eval_f(pt)
}

pub fn eval_g(id: CertificateId, pt: &TermPoint) -> Result<Rational> {
    Certificate::new(id).eval_g(pt)
}

pub fn check_recurrence_pointwise(id: CertificateId, pt: &TermPoint) -> Result<bool> {
    Certificate::new(id).check_recurrence(pt)
}

/// `F(n,k-1)/F(n,k)`, `G(n+1,k)/F(n,k)`, `G(n,k)/F(n,k)` as rational
/// functions of `(L, n, k, s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioTriple {
    pub r1: RationalFunction,
    pub r2: RationalFunction,
    pub r3: RationalFunction,
}

/// The ratios as displayed for each pair, with every `(1-L)/L` shift
/// multiplied through by `L` so that only polynomials appear.
pub fn ratio_triple(id: CertificateId) -> RatioTriple {
    let ell = MPoly::var(Var::L);
    // L*x + 1 - L for x = k+s, k-s, n+k
    let shifted = |n: i64, k: i64, s: i64| &(&ell * &linear(0, n, k, s, -1)) + &MPoly::one();
    let k_plus_s = shifted(0, 1, 1);
    let k_minus_s = shifted(0, 1, -1);
    let n_plus_k = shifted(1, 1, 0);
    let n_minus_k_plus_1 = linear(0, 1, -1, 0, 1);
    let two_ell_n_plus_1 = &(&ell * &MPoly::var(Var::N)).scale(&int(2)) + &MPoly::one();
    // L*n + 1 +- L*s
    let ell_n_1_plus_s = &(&ell * &linear(0, 1, 0, 1, 0)) + &MPoly::one();
    let ell_n_1_minus_s = &(&ell * &linear(0, 1, 0, -1, 0)) + &MPoly::one();
    let n_sq_minus_s_sq = &MPoly::var(Var::N).pow(2) - &MPoly::var(Var::S).pow(2);

    let r1 = RationalFunction::new(
        -(&k_plus_s * &k_minus_s),
        &(&ell * &n_plus_k) * &n_minus_k_plus_1,
    )
    .expect("nonzero denominator");

    let (r2, r3) = match id {
        CertificateId::Wz => (
            RationalFunction::new(
                -(&ell_n_1_plus_s * &ell_n_1_minus_s),
                &(&ell * &two_ell_n_plus_1) * &n_minus_k_plus_1,
            ),
            RationalFunction::new(
                &ell.pow(2) * &n_sq_minus_s_sq,
                &two_ell_n_plus_1 * &n_plus_k,
            ),
        ),
        CertificateId::Zeilberger => {
            let ell_n_1 = &(&ell * &MPoly::var(Var::N)) + &MPoly::one();
            (
                RationalFunction::new(
                    -(&(&ell_n_1_plus_s * &ell_n_1_minus_s) * &ell_n_1),
                    &(&ell * &two_ell_n_plus_1) * &n_minus_k_plus_1,
                ),
                RationalFunction::new(
                    -(&(&ell.pow(3) * &MPoly::var(Var::N)) * &n_sq_minus_s_sq),
                    &two_ell_n_plus_1 * &n_plus_k,
                ),
            )
        }
    };
    RatioTriple {
        r1,
        r2: r2.expect("nonzero denominator"),
        r3: r3.expect("nonzero denominator"),
    }
}

/// Cross-multiplied difference of `p*r1 - q` and `r2 - r3`; the zero
/// polynomial exactly when the ratio identity holds.
pub fn symbolic_residual(id: CertificateId, triple: &RatioTriple) -> MPoly {
    let cert = Certificate::new(id);
    let left = RationalFunction::from_poly(cert.left);
    let right = RationalFunction::from_poly(cert.right);
    let lhs = &(&left * &triple.r1) - &right;
    let rhs = &triple.r2 - &triple.r3;
    lhs.cross_difference(&rhs)
}

pub fn verify_certificate_symbolic(id: CertificateId) -> bool {
    symbolic_residual(id, &ratio_triple(id)).is_zero()
}

/// Compares the exact term ratios at `pt` against the symbolic triple.
pub fn check_ratio_consistency_with(
    cert: &Certificate,
    triple: &RatioTriple,
    pt: &TermPoint,
) -> Result<bool> {
    if !pt.is_admissible() || pt.k < 1 {
        return Err(Error::SkippedPoint("outside n >= s, n >= k >= 1"));
    }
    let f = cert.eval_f(pt)?;
    if f.is_zero() {
        return Err(Error::SkippedPoint("F(n,k) vanishes"));
    }
    let at = pt.as_point();
    let symbolic = |r: &RationalFunction| match r.eval(&at) {
        Err(Error::DivisionByZero) => Err(Error::SkippedPoint("ratio denominator vanishes")),
        other => other,
    };
    let s1 = symbolic(&triple.r1)?;
    let s2 = symbolic(&triple.r2)?;
    let s3 = symbolic(&triple.r3)?;
    let e1 = cert.eval_f(&pt.with_k(pt.k - 1))? / &f;
    let e2 = cert.eval_g(&pt.with_n(pt.n + 1))? / &f;
    let e3 = cert.eval_g(pt)? / &f;
    Ok(e1 == s1 && e2 == s2 && e3 == s3)
}

pub fn check_ratio_consistency(id: CertificateId, pt: &TermPoint) -> Result<bool> {
    Certificate::new(id).check_ratio_consistency(pt)
}

/// Ten single-element perturbations across both certificates.
pub fn canned_mutations() -> Vec<(CertificateId, Mutation, &'static str)> {
    use CertificateId::{Wz, Zeilberger};
    let ell = MPoly::var(Var::L);
    vec![
        (Wz, Mutation::FlipSign(Part::F), "wz: sign of F"),
        (Wz, Mutation::FlipSign(Part::G), "wz: sign of G"),
        (
            Wz,
            Mutation::ReplacePrefactor {
                part: Part::F,
                prefactor: &(&ell * &linear(0, 2, 0, 0, 0)) + &MPoly::int(2),
            },
            "wz: F prefactor 2Ln+1 -> 2Ln+2",
        ),
        (
            Wz,
            Mutation::ReplacePrefactor {
                part: Part::G,
                prefactor: ell.pow(2),
            },
            "wz: G prefactor L -> L^2",
        ),
        (
            Wz,
            Mutation::ShiftRising {
                part: Part::F,
                factor: 2,
                by: 1,
            },
            "wz: F (1/L)_(n+k) -> (1/L)_(n+k+1)",
        ),
        (
            Wz,
            Mutation::ShiftReciprocal {
                part: Part::G,
                factor: 1,
                by: 1,
            },
            "wz: G (1)_(n-s-1) -> (1)_(n-s)",
        ),
        (
            Zeilberger,
            Mutation::FlipSign(Part::F),
            "zeilberger: sign of F",
        ),
        (
            Zeilberger,
            Mutation::ReplacePrefactor {
                part: Part::G,
                prefactor: ell,
            },
            "zeilberger: G prefactor L^2 -> L",
        ),
        (
            Zeilberger,
            Mutation::ShiftRising {
                part: Part::F,
                factor: 2,
                by: 1,
            },
            "zeilberger: F (1/L)_n -> (1/L)_(n+1)",
        ),
        (
            Zeilberger,
            Mutation::ShiftReciprocal {
                part: Part::G,
                factor: 2,
                by: 1,
            },
            "zeilberger: G (1)_(n-1) -> (1)_n",
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn eval_f_examples() {
        assert_eq!(
            eval_f(CertificateId::Wz, &TermPoint::new(2, 0, 0, 0).unwrap()).unwrap(),
            int(1)
        );
        assert_eq!(
            eval_f(CertificateId::Wz, &TermPoint::new(1, 2, 2, 1).unwrap()).unwrap(),
            int(0)
        );
        assert_eq!(
            eval_f(
                CertificateId::Zeilberger,
                &TermPoint::new(1, 0, 1, 0).unwrap()
            )
            .unwrap(),
            int(3)
        );
    }

    #[test]
    fn eval_g_examples() {
        assert!(eval_g(CertificateId::Wz, &TermPoint::raw(3, 2, 2, 1))
            .unwrap()
            .is_zero());
        assert!(
            eval_g(CertificateId::Zeilberger, &TermPoint::raw(2, 1, 1, 1))
                .unwrap()
                .is_zero()
        );
        assert_eq!(
            eval_g(CertificateId::Wz, &TermPoint::raw(1, 0, 1, 1)).unwrap(),
            int(1)
        );
    }

    #[test]
    fn g_vanishes_at_lower_boundary() {
        for id in CertificateId::ALL {
            for ell in 1..=5 {
                for s in 0..=4 {
                    assert!(eval_g(id, &TermPoint::raw(ell, s, s, 1)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        assert!(check_recurrence_pointwise(
            CertificateId::Zeilberger,
            &TermPoint::new(1, 0, 2, 1).unwrap()
        )
        .unwrap());
        let bad = Certificate::new(CertificateId::Wz).mutated(&Mutation::ScaleG(2));
        assert!(!bad
            .check_recurrence(&TermPoint::new(1, 0, 2, 1).unwrap())
            .unwrap());
        assert!(
            check_recurrence_pointwise(CertificateId::Wz, &TermPoint::raw(1, 0, 2, 0)).is_err()
        );
    }

    #[test]
    fn recurrence_small_grid() {
        let grid = RecurrenceGrid {
            ell_max: 4,
            s_max: 3,
            n_extent: 6,
        };
        for id in CertificateId::ALL {
            assert_eq!(Certificate::new(id).grid_failures(&grid), 0, "{id}");
        }
    }

    #[test]
    fn ratio_values() {
        let at = |l, n, k, s| TermPoint::raw(l, s, n, k).as_point();
        let wz = ratio_triple(CertificateId::Wz);
        assert_eq!(wz.r3.eval(&at(1, 3, 1, 0)).unwrap(), rat(9, 28));
        assert_eq!(wz.r1.eval(&at(2, 2, 1, 0)).unwrap(), rat(-1, 20));
        let z = ratio_triple(CertificateId::Zeilberger);
        assert_eq!(z.r3.eval(&at(1, 2, 1, 1)).unwrap(), rat(-2, 5));
    }

    #[test]
    fn symbolic_certificates() {
        assert!(verify_certificate_symbolic(CertificateId::Wz));
        assert!(verify_certificate_symbolic(CertificateId::Zeilberger));
        let mut broken = ratio_triple(CertificateId::Wz);
        broken.r2 = broken.r3.clone();
        assert!(!symbolic_residual(CertificateId::Wz, &broken).is_zero());
    }

    #[test]
    fn ratio_consistency_examples() {
        assert!(
            check_ratio_consistency(CertificateId::Wz, &TermPoint::new(2, 1, 3, 2).unwrap())
                .unwrap()
        );
        assert!(check_ratio_consistency(
            CertificateId::Zeilberger,
            &TermPoint::new(3, 0, 4, 1).unwrap()
        )
        .unwrap());
        // l = 1, k < s makes F vanish through 1/(1)_(k-s)
        assert!(matches!(
            check_ratio_consistency(CertificateId::Wz, &TermPoint::new(1, 3, 4, 1).unwrap()),
            Err(Error::SkippedPoint(_))
        ));
    }

    #[test]
    fn rendering() {
        let cert = Certificate::new(CertificateId::Wz);
        assert_eq!(
            cert.f.to_string(),
            "(-1)^(n + k) * (2*L*n + 1) * (1/L)_(n + s) * (1/L)_(n - s) * (1/L)_(n + k) \
             / [(1)_(n + s) * (1)_(n - s) * (1)_(n - k) * (1/L)_(k + s) * (1/L)_(k - s)]"
        );
        let z = Certificate::new(CertificateId::Zeilberger).to_string();
        assert!(
            z.contains("(L*k - L + 1) F(n,k-1) - (L*k - L + 2) F(n,k)"),
            "{z}"
        );
    }
}
