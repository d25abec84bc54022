//! Exact Gauss-Jordan elimination over any field.

use num_traits::{One, Zero};

use super::poly::{KPolynomial, Rational, RationalFunction};

pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on a zero element.
    fn recip(&self) -> Self;
    /// Polynomial that must not vanish for division by `self` to be valid at
    /// every parameter value; `None` for plain constants.
    fn pole_condition(&self) -> Option<KPolynomial> {
        None
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn recip(&self) -> Self {
        Rational::recip(self)
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::constant(0)
    }
    fn one() -> Self {
        RationalFunction::constant(1)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn recip(&self) -> Self {
        RationalFunction::recip(self)
    }
    fn pole_condition(&self) -> Option<KPolynomial> {
        (!self.numerator().is_constant()).then(|| self.numerator().monic())
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    /// 0-based pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
    /// Non-constant pivots divided by during elimination; the result holds
    /// wherever none of them vanishes.
    pub pole_conditions: Vec<KPolynomial>,
}

/// Reduced row echelon form. Each pivot is the first nonzero entry at or
/// below the current row in the leftmost column that has one.
pub fn rref<F: Field>(input: &[Vec<F>]) -> Rref<F> {
    let mut m: Matrix<F> = input.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut pole_conditions = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let pivot = m[r][col].clone();
        if let Some(cond) = pivot.pole_condition() {
            pole_conditions.push(cond);
        }
        let inv = pivot.recip();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub(&factor.mul(p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    Rref {
        matrix: m,
        pivots,
        pole_conditions,
    }
}

impl<F: Field> Rref<F> {
    /// Reduces `v` against the pivot rows; the result is zero exactly when
    /// `v` lies in the row space.
    pub fn residual(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &col) in self.matrix.iter().zip(&self.pivots) {
            if v[col].is_zero() {
                continue;
            }
            let factor = v[col].clone();
            for (x, p) in v.iter_mut().zip(row) {
                *x = x.sub(&factor.mul(p));
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.residual(v).iter().all(Field::is_zero)
    }

    /// For an augmented matrix: no pivot falls in the constant column.
    pub fn is_consistent(&self) -> bool {
        let last = self.matrix.first().map_or(0, Vec::len).saturating_sub(1);
        !self.pivots.contains(&last)
    }
}
