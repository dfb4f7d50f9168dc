//! Sparse polynomials and rational functions over the rationals in the four
//! fixed variables `L, n, k, s`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with `L > n > k > s`. No zero coefficient is ever
//! stored, so the zero polynomial is the empty map and structural equality
//! coincides with polynomial equality.
//!
//! [`RationalFunction`] equality is decided by cross-multiplication; no
//! polynomial gcd is needed because every identity checked here has small
//! degree.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    L,
    N,
    K,
    S,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::L, Var::N, Var::K, Var::S];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::L => "L",
            Var::N => "n",
            Var::K => "k",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector `(eL, en, ek, es)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.slot()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.slot()]
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Assignment of rational values to variables.
pub type Point = BTreeMap<Var, Rational>;

/// Builds a [`Point`] from `(variable, value)` pairs.
pub fn point<I>(values: I) -> Point
where
    I: IntoIterator<Item = (Var, Rational)>,
{
    values.into_iter().collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MPoly::monomial(c, Monomial::ONE)
    }

    pub fn int(c: i64) -> Self {
        MPoly::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(Rational::one(), Monomial::var(v))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term under the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: &Point) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let x = at.get(&v).ok_or(Error::MissingAssignment(v))?;
                for _ in 0..e {
                    value *= x;
                }
            }
            total += value;
        }
        Ok(total)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl<'a> Add<&'a MPoly> for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &'a MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical rendering, highest term first, e.g. `2*L*n + 1` or `-L*s^2`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

/// Quotient `num / den` of two polynomials with `den != 0`.
///
/// Stored with `den` monic under the graded lexicographic order.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MPoly,
    den: MPoly,
}

impl RationalFunction {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead = den
            .leading_term()
            .map(|(_, c)| c.recip())
            .unwrap_or_else(Rational::one);
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: MPoly) -> Self {
        RationalFunction {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, p: &MPoly) -> RationalFunction {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// `num_a * den_b - num_b * den_a`; zero exactly when the two functions agree.
    pub fn cross_difference(&self, other: &RationalFunction) -> MPoly {
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }

    pub fn eval(&self, at: &Point) -> Result<Rational> {
        let d = self.den.eval(at)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at)? / d)
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.cross_difference(other).is_zero()
    }
}

impl Eq for RationalFunction {}

impl From<MPoly> for RationalFunction {
    fn from(p: MPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl<'a> Sub<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl<'a> Mul<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Product of the given polynomial factors.
pub fn product<'a, I>(factors: I) -> MPoly
where
    I: IntoIterator<Item = &'a MPoly>,
{
    factors.into_iter().fold(MPoly::one(), |acc, p| &acc * p)
}

/// Linear polynomial `cL*L + cn*n + ck*k + cs*s + c0` with integer coefficients.
pub fn linear(cl: i64, cn: i64, ck: i64, cs: i64, c0: i64) -> MPoly {
    let coeffs = [cl, cn, ck, cs];
    let mut p = MPoly::int(c0);
    for (v, c) in Var::ALL.iter().zip(coeffs) {
        if c != 0 {
            p = &p + &MPoly::var(*v).scale(&Rational::from_integer(c.into()));
        }
    }
    p
}

/// Collects the variables that occur in `p`.
pub fn variables(p: &MPoly) -> Vec<Var> {
    Var::ALL
        .into_iter()
        .filter(|v| p.terms().any(|(m, _)| m.exponent(*v) > 0))
        .collect()
}
