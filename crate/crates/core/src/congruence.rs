//! Truncated binomial sums `sum w(n) C(2n,n)^d / base^n` and their
//! supercongruences modulo powers of an odd prime.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    central_binomial, int, mod_reduce, rat, rising_factorial, Integer, PrimePowerModulus, Rational,
};
use crate::mpoly::{MPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SumFamily {
    /// `C(2n,n)^3 / (-64)^n`
    B,
    /// `C(2n,n)^4 / 256^n`
    C,
}

impl SumFamily {
    pub fn power(self) -> u32 {
        match self {
            SumFamily::B => 3,
            SumFamily::C => 4,
        }
    }

    pub fn base(self) -> i64 {
        match self {
            SumFamily::B => -64,
            SumFamily::C => 256,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SumFamily::B => "B",
            SumFamily::C => "C",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightKind {
    /// `4n+1`
    Linear,
    /// `(4n+1)^3`
    Cube,
    /// `(4n+1)(4n^2+2n+1)`, family B only
    MixedB,
    /// `(4n+1)(8n^2+4n+1)`, family C only
    MixedC,
}

impl WeightKind {
    pub fn eval(self, n: u64) -> Integer {
        let n = Integer::from(n);
        let lin = Integer::from(4) * &n + 1u32;
        match self {
            WeightKind::Linear => lin,
            WeightKind::Cube => &lin * &lin * &lin,
            WeightKind::MixedB => {
                &lin * (Integer::from(4) * &n * &n + Integer::from(2) * &n + 1u32)
            }
            WeightKind::MixedC => {
                &lin * (Integer::from(8) * &n * &n + Integer::from(4) * &n + 1u32)
            }
        }
    }

    /// The weight as a polynomial in `n`.
    pub fn poly(self) -> MPoly {
        let n = MPoly::var(Var::N);
        let lin = &n.scale(&int(4)) + &MPoly::one();
        match self {
            WeightKind::Linear => lin,
            WeightKind::Cube => lin.pow(3),
            WeightKind::MixedB => {
                &lin * &(&(&n.pow(2).scale(&int(4)) + &n.scale(&int(2))) + &MPoly::one())
            }
            WeightKind::MixedC => {
                &lin * &(&(&n.pow(2).scale(&int(8)) + &n.scale(&int(4))) + &MPoly::one())
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Linear => "linear",
            WeightKind::Cube => "cube",
            WeightKind::MixedB => "mixed-b",
            WeightKind::MixedC => "mixed-c",
        }
    }
}

/// Upper summation limit: `(p^r-1)/2` or `p^r-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Range {
    Half,
    Full,
}

impl Range {
    pub fn name(self) -> &'static str {
        match self {
            Range::Half => "half",
            Range::Full => "full",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CongruenceSpec {
    family: SumFamily,
    weight: WeightKind,
    p: u64,
    r: u32,
    range: Range,
    forced: bool,
}

impl CongruenceSpec {
    /// Validated spec. Family C with the linear or cube weight is only
    /// stated for `p >= 5`.
    pub fn new(
        family: SumFamily,
        weight: WeightKind,
        p: u64,
        r: u32,
        range: Range,
    ) -> Result<Self> {
        let spec = CongruenceSpec::forced(family, weight, p, r, range)?;
        if spec.needs_override() {
            return Err(Error::UnsupportedSpec(
                "family C with linear or cube weight needs p >= 5",
            ));
        }
        Ok(CongruenceSpec {
            forced: false,
            ..spec
        })
    }

    /// Like [`CongruenceSpec::new`] but admits `p = 3` for every family.
    /// Reports for such specs are not asserted.
    pub fn forced(
        family: SumFamily,
        weight: WeightKind,
        p: u64,
        r: u32,
        range: Range,
    ) -> Result<Self> {
        PrimePowerModulus::new(p, 1)?;
        if r == 0 {
            return Err(Error::InvalidParameters("r must be at least 1"));
        }
        if p.checked_pow(r).is_none() {
            return Err(Error::InvalidParameters("p^r does not fit in 64 bits"));
        }
        match (family, weight) {
            (SumFamily::C, WeightKind::MixedB) | (SumFamily::B, WeightKind::MixedC) => {
                return Err(Error::InvalidParameters(
                    "mixed weight paired with the wrong family",
                ));
            }
            _ => {}
        }
        Ok(CongruenceSpec {
            family,
            weight,
            p,
            r,
            range,
            forced: true,
        })
    }

    fn needs_override(&self) -> bool {
        self.family == SumFamily::C
            && matches!(self.weight, WeightKind::Linear | WeightKind::Cube)
            && self.p < 5
    }

    /// False for specs admitted only through [`CongruenceSpec::forced`].
    pub fn asserted(&self) -> bool {
        !(self.forced && self.needs_override())
    }

    pub fn family(&self) -> SumFamily {
        self.family
    }

    pub fn weight(&self) -> WeightKind {
        self.weight
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn range(&self) -> Range {
        self.range
    }

    pub fn prime_power(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// Last summation index.
    pub fn upper(&self) -> u64 {
        let q = self.prime_power();
        match self.range {
            Range::Half => (q - 1) / 2,
            Range::Full => q - 1,
        }
    }
}

impl fmt::Display for CongruenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} p={} r={} {}",
            self.family.name(),
            self.weight.name(),
            self.p,
            self.r,
            self.range.name()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    /// Proved in the literature.
    Proven,
    /// Numerically checked only.
    Conjecture,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Proven => "PROVEN-REF",
            Status::Conjecture => "CONJECTURE",
        }
    }
}

/// One stated congruence. The variants name the sum family, the weight and
/// the strength of the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    /// `(-1)^((p-1)/2) p mod p^3`, `r = 1`.
    BLinearPrime,
    /// `p^r (-1)^((p-1)r/2) mod p^(r+2)`.
    BLinearPower,
    /// `-3p (-1)^((p-1)/2) mod p^2`, `r = 1`.
    BCubePrime,
    /// `-3p^r (-1)^((p-1)r/2) mod p^3`.
    BCubePower,
    /// `0 mod p^(r+2)`.
    BMixedVanishing,
    /// `p^(3r) mod p^(3r+1)`, either range.
    BMixedConjecture,
    /// `p mod p^4`, `r = 1`, `p >= 5`.
    CLinearPrime,
    /// `p^r mod p^(r+3)`.
    CLinearPower,
    /// `-p^r mod p^(r+3)`.
    CCubePower,
    /// `p^(4r) mod p^(4r+1)`, either range.
    CMixedConjecture,
}

impl Statement {
    pub const ALL: [Statement; 10] = [
        Statement::BLinearPrime,
        Statement::BLinearPower,
        Statement::BCubePrime,
        Statement::BCubePower,
        Statement::BMixedVanishing,
        Statement::BMixedConjecture,
        Statement::CLinearPrime,
        Statement::CLinearPower,
        Statement::CCubePower,
        Statement::CMixedConjecture,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Statement::BLinearPrime => "b-linear-prime",
            Statement::BLinearPower => "b-linear-power",
            Statement::BCubePrime => "b-cube-prime",
            Statement::BCubePower => "b-cube-power",
            Statement::BMixedVanishing => "b-mixed-vanishing",
            Statement::BMixedConjecture => "b-mixed-conjecture",
            Statement::CLinearPrime => "c-linear-prime",
            Statement::CLinearPower => "c-linear-power",
            Statement::CCubePower => "c-cube-power",
            Statement::CMixedConjecture => "c-mixed-conjecture",
        }
    }

    pub fn status(self) -> Status {
        match self {
            Statement::BMixedConjecture | Statement::CMixedConjecture => Status::Conjecture,
            _ => Status::Proven,
        }
    }

    pub fn applies_to(self, spec: &CongruenceSpec) -> bool {
        use SumFamily::{B, C};
        use WeightKind::*;
        let half = spec.range == Range::Half;
        let r1 = spec.r == 1;
        match self {
            Statement::BLinearPrime => spec.family == B && spec.weight == Linear && half && r1,
            Statement::BLinearPower => spec.family == B && spec.weight == Linear && half,
            Statement::BCubePrime => spec.family == B && spec.weight == Cube && half && r1,
            Statement::BCubePower => spec.family == B && spec.weight == Cube && half,
            Statement::BMixedVanishing => spec.family == B && spec.weight == MixedB && half,
            Statement::BMixedConjecture => spec.family == B && spec.weight == MixedB,
            Statement::CLinearPrime => spec.family == C && spec.weight == Linear && half && r1,
            Statement::CLinearPower => spec.family == C && spec.weight == Linear && half,
            Statement::CCubePower => spec.family == C && spec.weight == Cube && half,
            Statement::CMixedConjecture => spec.family == C && spec.weight == MixedC,
        }
    }

    /// Exponent `e` of the modulus `p^e`.
    pub fn exponent(self, r: u32) -> u32 {
        match self {
            Statement::BLinearPrime => 3,
            Statement::BLinearPower => r + 2,
            Statement::BCubePrime => 2,
            Statement::BCubePower => 3,
            Statement::BMixedVanishing => r + 2,
            Statement::BMixedConjecture => 3 * r + 1,
            Statement::CLinearPrime => 4,
            Statement::CLinearPower | Statement::CCubePower => r + 3,
            Statement::CMixedConjecture => 4 * r + 1,
        }
    }

    /// Right-hand side before reduction.
    pub fn right_side(self, p: u64, r: u32) -> Integer {
        let pi = Integer::from(p);
        let q: Integer = Pow::pow(&pi, r);
        // (-1)^((p-1)/2) and (-1)^((p-1)r/2)
        let sign = |e: u64| {
            if e.is_multiple_of(2) {
                Integer::one()
            } else {
                -Integer::one()
            }
        };
        let eps1 = sign((p - 1) / 2);
        let eps_r = sign((p - 1) / 2 * u64::from(r));
        match self {
            Statement::BLinearPrime => eps1 * pi,
            Statement::BLinearPower => eps_r * q,
            Statement::BCubePrime => Integer::from(-3) * pi * eps1,
            Statement::BCubePower => Integer::from(-3) * q * eps_r,
            Statement::BMixedVanishing => Integer::zero(),
            Statement::BMixedConjecture => Pow::pow(&pi, 3 * r),
            Statement::CLinearPrime => pi,
            Statement::CLinearPower => q,
            Statement::CCubePower => -q,
            Statement::CMixedConjecture => Pow::pow(&pi, 4 * r),
        }
    }

    /// `(residue in [0, p^e), e)`.
    pub fn expected(self, p: u64, r: u32) -> Result<(Integer, u32)> {
        let e = self.exponent(r);
        let m = PrimePowerModulus::new(p, e)?;
        Ok((m.reduce_integer(&self.right_side(p, r)), e))
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Every stated congruence covering `spec`, weakest modulus first.
pub fn statements(spec: &CongruenceSpec) -> Vec<Statement> {
    let mut out: Vec<Statement> = Statement::ALL
        .into_iter()
        .filter(|s| s.applies_to(spec))
        .collect();
    out.sort_by_key(|s| s.exponent(spec.r));
    out
}

/// The strongest statement covering `spec`.
pub fn primary_statement(spec: &CongruenceSpec) -> Result<Statement> {
    statements(spec)
        .last()
        .copied()
        .ok_or(Error::UnsupportedSpec(
            "no congruence stated for this weight and range",
        ))
}

pub fn expected_residue(spec: &CongruenceSpec) -> Result<(Integer, u32)> {
    primary_statement(spec)?.expected(spec.p, spec.r)
}

/// `sum_{n=0}^{n_max} w(n) C(2n,n)^d / base^n`.
///
/// Accumulated by Horner's rule over the common denominator `base^n_max`
/// with `C(2n,n)` updated by its ratio `2(2n-1)/n`, so the rational is
/// normalized once.
pub fn family_sum(family: SumFamily, weight: WeightKind, n_max: u64) -> Rational {
    let base = Integer::from(family.base());
    let d = family.power();
    let mut binom = Integer::one();
    let mut acc = Integer::zero();
    for n in 0..=n_max {
        if n > 0 {
            binom = binom * Integer::from(2 * (2 * n - 1)) / Integer::from(n);
            acc *= &base;
        }
        acc += weight.eval(n) * Pow::pow(&binom, d);
    }
    Rational::new(acc, Pow::pow(base, n_max))
}

pub fn exact_sum(spec: &CongruenceSpec) -> Rational {
    family_sum(spec.family, spec.weight, spec.upper())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceReport {
    pub spec: CongruenceSpec,
    pub statement: Statement,
    pub sum: Rational,
    pub modulus: PrimePowerModulus,
    pub residue: Integer,
    pub expected: Integer,
    pub pass: bool,
}

impl CongruenceReport {
    pub fn status(&self) -> Status {
        self.statement.status()
    }

    pub fn asserted(&self) -> bool {
        self.spec.asserted()
    }
}

/// Reduces a precomputed exact sum against one statement.
pub fn check_sum(
    spec: &CongruenceSpec,
    statement: Statement,
    sum: Rational,
) -> Result<CongruenceReport> {
    if !statement.applies_to(spec) {
        return Err(Error::UnsupportedSpec("statement does not cover this spec"));
    }
    let (expected, e) = statement.expected(spec.p, spec.r)?;
    let modulus = PrimePowerModulus::new(spec.p, e)?;
    let residue = mod_reduce(&sum, &modulus)?;
    Ok(CongruenceReport {
        spec: *spec,
        statement,
        pass: residue == expected,
        sum,
        modulus,
        residue,
        expected,
    })
}

pub fn check_statement(spec: &CongruenceSpec, statement: Statement) -> Result<CongruenceReport> {
    check_sum(spec, statement, exact_sum(spec))
}

pub fn check_congruence(spec: &CongruenceSpec) -> Result<CongruenceReport> {
    check_statement(spec, primary_statement(spec)?)
}

/// Checks `C(2n,n)^3/(base_b)^n = (-1)^n (1/2)_n^3/(1)_n^3` and
/// `C(2n,n)^4/(base_c)^n = (1/2)_n^4/(1)_n^4` for all `n <= n_max`.
pub fn bridge_check_with_bases(n_max: u64, base_b: i64, base_c: i64) -> bool {
    let half = rat(1, 2);
    let one = Rational::one();
    (0..=n_max).all(|n| {
        let m = n as i64;
        let ratio = rising_factorial(&half, m).expect("nonnegative index")
            / rising_factorial(&one, m).expect("nonnegative index");
        let binom = Rational::from_integer(central_binomial(n));
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        let b_side = Pow::pow(&binom, 3u32) / Pow::pow(int(base_b), n as u32);
        let c_side = Pow::pow(&binom, 4u32) / Pow::pow(int(base_c), n as u32);
        let r3 = &ratio * &ratio * &ratio;
        b_side == &sign * &r3 && c_side == &r3 * &ratio
    })
}

/// The rising-factorial form of both binomial families at `l = 2`.
pub fn bridge_check(n_max: u64) -> bool {
    bridge_check_with_bases(n_max, -64, 256)
}
