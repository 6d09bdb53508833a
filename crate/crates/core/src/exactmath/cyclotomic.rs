use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use super::rational::{gcd_i128, narrow, Q};

/// Degree of the 24th cyclotomic polynomial x^8 - x^4 + 1.
pub const DEGREE: usize = 8;

/// Element of Q(z) with z a primitive 24th root of unity.
///
/// Stored as integer numerators over one positive common denominator,
/// reduced modulo x^8 - x^4 + 1. The representation is canonical (gcd of
/// all numerators and the denominator is 1), so equality is structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycNum {
    num: [i64; DEGREE],
    den: i64,
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("cyclotomic overflow")
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("cyclotomic overflow")
}

impl CycNum {
    pub const ZERO: CycNum = CycNum { num: [0; DEGREE], den: 1 };
    pub const ONE: CycNum = CycNum { num: [1, 0, 0, 0, 0, 0, 0, 0], den: 1 };

    fn normalize(num: [i128; DEGREE], den: i128) -> CycNum {
        debug_assert!(den != 0);
        let mut g = den;
        for &c in &num {
            if g == 1 {
                break;
            }
            g = gcd_i128(g, c);
        }
        if den < 0 {
            g = -g;
        }
        let mut out = [0i64; DEGREE];
        let mut nonzero = false;
        for (o, &c) in out.iter_mut().zip(num.iter()) {
            *o = narrow(c / g);
            nonzero |= c != 0;
        }
        if !nonzero {
            return CycNum::ZERO;
        }
        CycNum { num: out, den: narrow(den / g) }
    }

    pub fn from_q(q: Q) -> CycNum {
        let mut num = [0i64; DEGREE];
        num[0] = q.numer();
        CycNum { num, den: q.denom() }
    }

    pub fn int(n: i64) -> CycNum {
        CycNum::from_q(Q::int(n))
    }

    pub fn rational(num: i64, den: i64) -> CycNum {
        CycNum::from_q(Q::new(num, den))
    }

    /// Builds an element from its 8 rational coordinates in the power basis.
    pub fn from_coeffs(coeffs: [Q; DEGREE]) -> CycNum {
        let mut den: i128 = 1;
        for c in &coeffs {
            let d = c.denom() as i128;
            den = den / gcd_i128(den, d) * d;
        }
        let mut num = [0i128; DEGREE];
        for (n, c) in num.iter_mut().zip(coeffs.iter()) {
            *n = c.numer() as i128 * (den / c.denom() as i128);
        }
        CycNum::normalize(num, den)
    }

    /// Rational coordinate of z^k, `k < 8`.
    pub fn coeff(&self, k: usize) -> Q {
        Q::new(self.num[k], self.den)
    }

    pub fn coeffs(&self) -> [Q; DEGREE] {
        std::array::from_fn(|k| self.coeff(k))
    }

    /// z^k for any integer k.
    pub fn zeta(k: i64) -> CycNum {
        powers()[k.rem_euclid(24) as usize]
    }

    pub fn i() -> CycNum {
        CycNum::zeta(6)
    }

    pub fn omega() -> CycNum {
        CycNum::zeta(8)
    }

    /// Primitive 8th root of unity.
    pub fn xi() -> CycNum {
        CycNum::zeta(3)
    }

    pub fn sqrt3() -> CycNum {
        CycNum::zeta(2) + CycNum::zeta(-2)
    }

    pub fn sqrt2() -> CycNum {
        CycNum::zeta(3) + CycNum::zeta(-3)
    }

    pub fn is_zero(&self) -> bool {
        self.num == [0; DEGREE]
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|&c| c == 0)
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.coeff(0))
    }

    fn scale_int(&self, n: i128, d: i128) -> CycNum {
        let mut out = [0i128; DEGREE];
        for (o, &c) in out.iter_mut().zip(self.num.iter()) {
            *o = checked_mul(c as i128, n);
        }
        CycNum::normalize(out, checked_mul(self.den as i128, d))
    }

    pub fn scale(&self, q: Q) -> CycNum {
        self.scale_int(q.numer() as i128, q.denom() as i128)
    }

    /// Image under the field automorphism z -> z^k, `gcd(k, 24) = 1`.
    pub fn galois(&self, k: i64) -> CycNum {
        assert!(gcd_i128(k as i128, 24) == 1, "z -> z^{k} is not an automorphism");
        let mut acc = [0i128; DEGREE];
        for (j, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let p = CycNum::zeta(k * j as i64);
            for (a, &pc) in acc.iter_mut().zip(p.num.iter()) {
                *a = checked_add(*a, checked_mul(c as i128, pc as i128));
            }
        }
        CycNum::normalize(acc, self.den as i128)
    }

    /// Complex conjugation z -> z^-1.
    pub fn conj(&self) -> CycNum {
        self.galois(23)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Q {
        let mut p = *self;
        for k in [5, 7, 11, 13, 17, 19, 23] {
            p *= self.galois(k);
        }
        p.as_rational().expect("norm must be rational")
    }

    pub fn inv(&self) -> CycNum {
        assert!(!self.is_zero(), "inverse of zero");
        if self.is_rational() {
            return CycNum::from_q(self.coeff(0).inv());
        }
        let mut p = CycNum::ONE;
        for k in [5, 7, 11, 13, 17, 19, 23] {
            p *= self.galois(k);
        }
        let n = (*self * p).as_rational().expect("norm must be rational");
        p.scale(n.inv())
    }

    pub fn pow(&self, mut e: u64) -> CycNum {
        let mut base = *self;
        let mut acc = CycNum::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    pub fn powi(&self, e: i64) -> CycNum {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().pow(e.unsigned_abs())
        }
    }

    /// Returns k with self = z^k, if self is a 24th root of unity.
    pub fn root_of_unity_exponent(&self) -> Option<i64> {
        powers().iter().position(|p| p == self).map(|k| k as i64)
    }
}

fn powers() -> &'static [CycNum; 24] {
    static POWERS: OnceLock<[CycNum; 24]> = OnceLock::new();
    POWERS.get_or_init(|| {
        let mut out = [CycNum::ZERO; 24];
        let mut cur = [0i128; DEGREE];
        cur[0] = 1;
        for slot in out.iter_mut() {
            *slot = CycNum::normalize(cur, 1);
            // multiply by x and reduce x^8 = x^4 - 1
            let top = cur[DEGREE - 1];
            for k in (1..DEGREE).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = -top;
            cur[4] += top;
        }
        out
    })
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::ZERO
    }
}

impl From<Q> for CycNum {
    fn from(q: Q) -> CycNum {
        CycNum::from_q(q)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> CycNum {
        CycNum::int(n)
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, o: CycNum) -> CycNum {
        if o.is_zero() {
            return self;
        }
        if self.is_zero() {
            return o;
        }
        let mut out = [0i128; DEGREE];
        if self.den == o.den {
            for k in 0..DEGREE {
                out[k] = self.num[k] as i128 + o.num[k] as i128;
            }
            return CycNum::normalize(out, self.den as i128);
        }
        let (da, db) = (self.den as i128, o.den as i128);
        for k in 0..DEGREE {
            out[k] = checked_add(checked_mul(self.num[k] as i128, db), checked_mul(o.num[k] as i128, da));
        }
        CycNum::normalize(out, checked_mul(da, db))
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, o: CycNum) -> CycNum {
        self + (-o)
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let mut num = self.num;
        for c in num.iter_mut() {
            *c = -*c;
        }
        CycNum { num, den: self.den }
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, o: CycNum) -> CycNum {
        if self.is_zero() || o.is_zero() {
            return CycNum::ZERO;
        }
        if o.is_rational() {
            return self.scale_int(o.num[0] as i128, o.den as i128);
        }
        if self.is_rational() {
            return o.scale_int(self.num[0] as i128, self.den as i128);
        }
        let mut prod = [0i128; 2 * DEGREE - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.num.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = checked_add(prod[i + j], checked_mul(a as i128, b as i128));
                }
            }
        }
        for k in (DEGREE..2 * DEGREE - 1).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k - 4] = checked_add(prod[k - 4], c);
                prod[k - 8] = checked_add(prod[k - 8], -c);
            }
        }
        let mut out = [0i128; DEGREE];
        out.copy_from_slice(&prod[..DEGREE]);
        CycNum::normalize(out, checked_mul(self.den as i128, o.den as i128))
    }
}

impl Div for CycNum {
    type Output = CycNum;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: CycNum) -> CycNum {
        self * o.inv()
    }
}

impl AddAssign for CycNum {
    fn add_assign(&mut self, o: CycNum) {
        *self = *self + o;
    }
}

impl SubAssign for CycNum {
    fn sub_assign(&mut self, o: CycNum) {
        *self = *self - o;
    }
}

impl MulAssign for CycNum {
    fn mul_assign(&mut self, o: CycNum) {
        *self = *self * o;
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(k) = self.root_of_unity_exponent() {
            return match k {
                0 => write!(f, "1"),
                12 => write!(f, "-1"),
                6 => write!(f, "i"),
                18 => write!(f, "-i"),
                8 => write!(f, "w"),
                16 => write!(f, "w2"),
                _ => write!(f, "z^{k}"),
            };
        }
        let mut first = true;
        for k in 0..DEGREE {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn named_roots_of_unity() {
        let i = CycNum::i();
        let w = CycNum::omega();
        let xi = CycNum::xi();
        assert_eq!(i * i, CycNum::int(-1));
        assert_eq!(w * w + w + CycNum::ONE, CycNum::ZERO);
        assert_eq!(xi.pow(4), CycNum::int(-1));
        assert_eq!(xi.pow(8), CycNum::ONE);
        assert_eq!(CycNum::zeta(1).pow(24), CycNum::ONE);
        assert_eq!(CycNum::zeta(1).pow(12), CycNum::int(-1));
    }

    #[test]
    fn square_roots() {
        assert_eq!(CycNum::sqrt3() * CycNum::sqrt3(), CycNum::int(3));
        assert_eq!(CycNum::sqrt2() * CycNum::sqrt2(), CycNum::int(2));
    }

    #[test]
    fn conjugation_inverts_roots() {
        for k in 0..24 {
            assert_eq!(CycNum::zeta(k).conj(), CycNum::zeta(-k));
            assert_eq!(CycNum::zeta(k).root_of_unity_exponent(), Some(k));
        }
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        prop::array::uniform8((-4i64..5, 1i64..4))
            .prop_map(|cs| CycNum::from_coeffs(std::array::from_fn(|k| Q::new(cs[k].0, cs[k].1))))
    }

    proptest! {
        #[test]
        fn inverse_is_exact(a in arb_cyc()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a * a.inv(), CycNum::ONE);
        }

        #[test]
        fn ring_laws(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a - b) + b, a);
        }

        #[test]
        fn coefficients_round_trip(a in arb_cyc()) {
            prop_assert_eq!(CycNum::from_coeffs(a.coeffs()), a);
        }

        #[test]
        fn norm_is_multiplicative(
            ca in prop::array::uniform8(-1i64..2),
            cb in prop::array::uniform8(-1i64..2),
        ) {
            let a = CycNum::from_coeffs(ca.map(Q::int));
            let b = CycNum::from_coeffs(cb.map(Q::int));
            prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
        }
    }
}
