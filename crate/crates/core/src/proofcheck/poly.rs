//! Polynomials in `k` over the rationals and their fraction field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `c0 + c1 k + c2 k^2 + ...` with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KPolynomial {
    coeffs: Vec<Rational>,
}

impl KPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        KPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        KPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `slope * k + intercept`.
    pub fn linear(slope: i64, intercept: i64) -> Self {
        Self::new(vec![rational(intercept), rational(slope)])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * k + c)
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let shift = rem.len() - 1 - d;
            let factor = rem.last().expect("nonempty") / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &KPolynomial {
    type Output = KPolynomial;

    fn add(self, other: &KPolynomial) -> KPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        KPolynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &KPolynomial {
    type Output = KPolynomial;

    fn neg(self) -> KPolynomial {
        KPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &KPolynomial {
    type Output = KPolynomial;

    fn sub(self, other: &KPolynomial) -> KPolynomial {
        self + &(-other)
    }
}

impl Mul for &KPolynomial {
    type Output = KPolynomial;

    fn mul(self, other: &KPolynomial) -> KPolynomial {
        if self.is_zero() || other.is_zero() {
            return KPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KPolynomial::new(out)
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational, power: usize, first: bool) -> fmt::Result {
    let negative = c.is_negative();
    if first {
        if negative {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if negative { "-" } else { "+" })?;
    }
    let abs = c.abs();
    if power == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        if abs.is_integer() {
            write!(f, "{abs}")?;
        } else {
            write!(f, "({abs})")?;
        }
    }
    if power == 1 {
        f.write_str("k")
    } else {
        write!(f, "k^{power}")
    }
}

/// Highest power first, e.g. `6k+5`, `-2k-1`, `k^2-1`.
impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_coeff(f, c, power, first)?;
            first = false;
        }
        Ok(())
    }
}

/// A ratio of polynomials in `k`, kept with a monic denominator and no common
/// factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: KPolynomial,
    den: KPolynomial,
}

impl RationalFunction {
    /// Panics when `den` is the zero polynomial.
    pub fn new(num: KPolynomial, den: KPolynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::from(KPolynomial::zero());
        }
        let g = KPolynomial::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").recip();
        RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn constant(v: i64) -> Self {
        Self::from(KPolynomial::constant(rational(v)))
    }

    pub fn linear(slope: i64, intercept: i64) -> Self {
        Self::from(KPolynomial::linear(slope, intercept))
    }

    pub fn numerator(&self) -> &KPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &KPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at `k`, or `None` at a pole.
    pub fn eval(&self, k: &Rational) -> Option<Rational> {
        let d = self.den.eval(k);
        (!d.is_zero()).then(|| self.num.eval(k) / d)
    }
}

impl From<KPolynomial> for RationalFunction {
    fn from(p: KPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: KPolynomial::one(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
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

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == KPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
