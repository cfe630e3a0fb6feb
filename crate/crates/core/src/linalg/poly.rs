use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Polynomial with integer coefficients, stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Coefficients lowest degree first; trailing zeros are dropped.
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(BigInt::zero());
        }
        Self { coefficients }
    }

    /// Coefficients highest degree first, as a polynomial is usually written.
    pub fn from_descending(coefficients: &[i64]) -> Self {
        Self::new(
            coefficients
                .iter()
                .rev()
                .map(|&c| BigInt::from(c))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coefficients.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder of division by `x - root`.
    fn divide_linear(&self, root: &BigInt) -> (IntPolynomial, BigInt) {
        let n = self.degree();
        if n == 0 {
            return (
                IntPolynomial::new(vec![BigInt::zero()]),
                self.coefficients[0].clone(),
            );
        }
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for i in (0..=n).rev() {
            let value = &self.coefficients[i] + &carry * root;
            if i == 0 {
                return (IntPolynomial::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coefficients
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    /// Number of distinct real roots strictly greater than `a`, by a Sturm sequence.
    pub fn real_roots_above(&self, a: &BigInt) -> usize {
        let p = self.to_rational().squarefree();
        if p.degree() == 0 {
            return 0;
        }
        let chain = p.sturm_chain();
        let at = BigRational::from_integer(a.clone());
        // a root exactly at `a` is skipped as a zero and therefore not counted
        let at_a = sign_changes(chain.iter().map(|q| q.eval(&at)));
        let at_infinity = sign_changes(chain.iter().map(|q| q.leading().clone()));
        at_a - at_infinity
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() && !(first && i == 0) {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI − M)` by the Faddeev–LeVerrier recurrence.
///
/// With `A₀ = 0` and `c_n = 1`, iterate `A_k = M A_{k-1} + c_{n-k+1} I` and
/// `c_{n-k} = −tr(M A_k) / k`. The divisions are exact over the integers.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    assert!(
        m.is_square(),
        "characteristic polynomial of a non-square matrix"
    );
    let n = m.rows();
    let mut coefficients = vec![BigInt::zero(); n + 1];
    coefficients[n] = BigInt::one();
    let mut acc = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&acc);
        for i in 0..n {
            let diag = next.get(i, i) + &coefficients[n - k + 1];
            next.set(i, i, diag);
        }
        let trace = m.mul(&next).trace();
        let (quotient, remainder) = trace.div_rem(&BigInt::from(k));
        debug_assert!(remainder.is_zero(), "Faddeev-LeVerrier division is exact");
        coefficients[n - k] = -quotient;
        acc = next;
    }
    IntPolynomial::new(coefficients)
}

/// Integer roots of a monic polynomial with their multiplicities, ascending.
///
/// Rational roots of a monic integer polynomial are integers dividing the lowest non-zero
/// coefficient. Candidates are limited by the bound `|z| ≤ 2 max_k |a_{n-k}|^{1/k}`.
pub fn integer_roots(p: &IntPolynomial) -> Vec<(BigInt, usize)> {
    assert!(p.is_monic(), "integer_roots expects a monic polynomial");
    let mut roots = Vec::new();
    let mut rest = p.clone();
    let mut zero_mult = 0;
    while rest.degree() > 0 && rest.coefficients[0].is_zero() {
        rest = IntPolynomial::new(rest.coefficients[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((BigInt::zero(), zero_mult));
    }
    let n = rest.degree();
    if n == 0 {
        return roots;
    }
    let mut bound = BigInt::zero();
    for k in 1..=n {
        let a = rest.coefficients[n - k].abs();
        let mut root = a.nth_root(k as u32);
        if root.pow(k as u32) < a {
            root += 1u32;
        }
        if root > bound {
            bound = root;
        }
    }
    bound *= 2u32;
    let constant = rest.coefficients[0].clone();
    let mut d = BigInt::one();
    while d <= bound {
        if constant.is_multiple_of(&d) {
            for candidate in [-d.clone(), d.clone()] {
                let mut mult = 0;
                loop {
                    let (q, r) = rest.divide_linear(&candidate);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((candidate, mult));
                }
            }
        }
        d += 1u32;
    }
    roots.sort();
    roots
}

fn sign_changes(values: impl Iterator<Item = BigRational>) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for v in values {
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if last.is_some_and(|l| l != positive) {
            count += 1;
        }
        last = Some(positive);
    }
    count
}

#[derive(Debug, Clone, PartialEq)]
struct RatPoly {
    c: Vec<BigRational>,
}

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigRational::zero());
        }
        Self { c }
    }

    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_zero()
    }

    fn leading(&self) -> &BigRational {
        &self.c[self.c.len() - 1]
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.c
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let mut rem = self.c.clone();
        if self.degree() < d.degree() {
            return (RatPoly::new(vec![BigRational::zero()]), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - d.degree() + 1];
        let lead = d.leading().clone();
        for i in (0..quot.len()).rev() {
            let factor = &rem[i + d.degree()] / &lead;
            for (j, dc) in d.c.iter().enumerate() {
                let delta = &factor * dc;
                rem[i + j] -= delta;
            }
            quot[i] = factor;
        }
        rem.truncate(d.degree().max(1));
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn squarefree(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                return chain;
            }
            chain.push(RatPoly::new(r.c.into_iter().map(|v| -v).collect()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(p: &IntPolynomial) -> Vec<(i64, usize)> {
        integer_roots(p)
            .into_iter()
            .map(|(r, m)| (i64::try_from(r).unwrap(), m))
            .collect()
    }

    #[test]
    fn char_poly_examples() {
        // a→aca, b→d, c→aba, d→c
        let m = IntMatrix::from_rows(&[&[2, 0, 2, 0], &[0, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 0]]);
        assert_eq!(
            char_poly(&m),
            IntPolynomial::from_descending(&[1, -2, -2, -1, 2])
        );
        // x→xzy, y→xx, z→yy
        let m = IntMatrix::from_rows(&[&[1, 2, 0], &[1, 0, 2], &[1, 0, 0]]);
        assert_eq!(
            char_poly(&m),
            IntPolynomial::from_descending(&[1, -1, -2, -4])
        );
        assert_eq!(
            char_poly(&IntMatrix::zeros(2, 2)),
            IntPolynomial::from_descending(&[1, 0, 0])
        );
    }

    #[test]
    fn integer_root_examples() {
        assert!(roots(&IntPolynomial::from_descending(&[1, -2, -2, -1, 2])).is_empty());
        assert_eq!(
            roots(&IntPolynomial::from_descending(&[1, -4, 4])),
            vec![(2, 2)]
        );
        assert!(roots(&IntPolynomial::from_descending(&[1, -7, 12, -8])).is_empty());
        assert_eq!(
            roots(&IntPolynomial::from_descending(&[1, 0, 0])),
            vec![(0, 2)]
        );
        // (x+3)(x-1)^2 x
        assert_eq!(
            roots(&IntPolynomial::from_descending(&[1, 1, -5, 3, 0])),
            vec![(-3, 1), (0, 1), (1, 2)]
        );
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_descending(&[1, -2, -2, -1, 2]);
        assert_eq!(alloc::format!("{p}"), "x^4 - 2x^3 - 2x^2 - x + 2");
        assert_eq!(
            alloc::format!("{}", IntPolynomial::from_descending(&[1, 0, 0])),
            "x^2"
        );
        assert_eq!(
            alloc::format!("{}", IntPolynomial::from_descending(&[0])),
            "0"
        );
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x-3)
        let p = IntPolynomial::from_descending(&[1, -6, 11, -6]);
        assert_eq!(p.real_roots_above(&BigInt::from(0)), 3);
        assert_eq!(p.real_roots_above(&BigInt::from(1)), 2);
        assert_eq!(p.real_roots_above(&BigInt::from(3)), 0);
        // x^2 + 1 has none
        assert_eq!(
            IntPolynomial::from_descending(&[1, 0, 1]).real_roots_above(&BigInt::from(-5)),
            0
        );
        // (x-2)^2 (x-5): repeated roots counted once
        let p = IntPolynomial::from_descending(&[1, -9, 24, -20]);
        assert_eq!(p.real_roots_above(&BigInt::from(0)), 2);
        // x^4 - 2x^3 - 2x^2 - x + 2 has real roots near 0.676 and 2.76
        let p = IntPolynomial::from_descending(&[1, -2, -2, -1, 2]);
        assert_eq!(p.real_roots_above(&BigInt::from(0)), 2);
        assert_eq!(p.real_roots_above(&BigInt::from(1)), 1);
        assert_eq!(p.real_roots_above(&BigInt::from(3)), 0);
    }
}
