use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Rational number with `i64` storage and `i128` intermediates.
///
/// Every result is reduced to lowest terms with a positive denominator.
/// Results that do not fit back into `i64` abort with a panic: the engine
/// never silently wraps.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q {
    num: i64,
    den: i64,
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    gcd_u128(a.unsigned_abs(), b.unsigned_abs()) as i128
}

pub(crate) fn narrow(v: i128) -> i64 {
    i64::try_from(v).unwrap_or_else(|_| panic!("rational overflow: {v} exceeds i64"))
}

impl Q {
    pub const ZERO: Q = Q { num: 0, den: 1 };
    pub const ONE: Q = Q { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Q {
        Q::from_i128(num as i128, den as i128)
    }

    pub fn int(n: i64) -> Q {
        Q { num: n, den: 1 }
    }

    pub(crate) fn from_i128(num: i128, den: i128) -> Q {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Q::ZERO;
        }
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Q { num: narrow(n), den: narrow(d) }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn inv(&self) -> Q {
        assert!(self.num != 0, "inverse of zero");
        Q::from_i128(self.den as i128, self.num as i128)
    }

    pub fn abs(&self) -> Q {
        Q { num: self.num.abs(), den: self.den }
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::ZERO
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::int(n)
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        if self.den == 1 && o.den == 1 {
            return Q::int(narrow(self.num as i128 + o.num as i128));
        }
        let n = self.num as i128 * o.den as i128 + o.num as i128 * self.den as i128;
        Q::from_i128(n, self.den as i128 * o.den as i128)
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        self + (-o)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q { num: -self.num, den: self.den }
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, o: Q) -> Q {
        if self.num == 0 || o.num == 0 {
            return Q::ZERO;
        }
        if self.den == 1 && o.den == 1 {
            return Q::int(narrow(self.num as i128 * o.num as i128));
        }
        Q::from_i128(self.num as i128 * o.num as i128, self.den as i128 * o.den as i128)
    }
}

impl Div for Q {
    type Output = Q;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Q) -> Q {
        self * o.inv()
    }
}

impl AddAssign for Q {
    fn add_assign(&mut self, o: Q) {
        *self = *self + o;
    }
}

impl SubAssign for Q {
    fn sub_assign(&mut self, o: Q) {
        *self = *self - o;
    }
}

impl MulAssign for Q {
    fn mul_assign(&mut self, o: Q) {
        *self = *self * o;
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.num as i128 * o.den as i128).cmp(&(o.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let q = Q::new(6, -4);
        assert_eq!((q.numer(), q.denom()), (-3, 2));
        assert_eq!(Q::new(0, -7), Q::ZERO);
    }

    #[test]
    fn field_operations() {
        let a = Q::new(1, 3);
        let b = Q::new(1, 6);
        assert_eq!(a + b, Q::new(1, 2));
        assert_eq!(a - b, b);
        assert_eq!(a * b, Q::new(1, 18));
        assert_eq!(a / b, Q::int(2));
        assert_eq!(a * a.inv(), Q::ONE);
        assert!(Q::new(-1, 2) < Q::new(1, 3));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let big = Q::int(i64::MAX);
        let _ = big * big;
    }
}
