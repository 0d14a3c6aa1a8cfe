use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::Field;

/// An element `re + zc·ζ` of ℚ(ζ), where ζ is a primitive cube root of unity
/// (ζ² + ζ + 1 = 0).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Eisenstein {
    pub re: Rational,
    pub zc: Rational,
}

impl Eisenstein {
    pub fn new(re: Rational, zc: Rational) -> Self {
        Eisenstein { re, zc }
    }

    pub fn from_rational(re: Rational) -> Self {
        Eisenstein { re, zc: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zeta() -> Self {
        Eisenstein { re: Rational::zero(), zc: Rational::one() }
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::from_int(1),
            1 => Self::zeta(),
            _ => Eisenstein { re: int(-1), zc: int(-1) },
        }
    }

    /// The square root of −3 given by 1 + 2ζ.
    pub fn sqrt_minus3() -> Self {
        Eisenstein { re: int(1), zc: int(2) }
    }

    /// Complex conjugation: ζ ↦ ζ² = −1 − ζ.
    pub fn conj(&self) -> Self {
        Eisenstein { re: &self.re - &self.zc, zc: -&self.zc }
    }

    /// The field norm a² − ab + b², which is ≥ 0 and zero only at zero.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.zc + &self.zc * &self.zc
    }

    pub fn is_rational(&self) -> bool {
        self.zc.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.zc.is_zero() {
            Some(&self.re)
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Eisenstein { re: &self.re * r, zc: &self.zc * r }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zc.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}ζ", self.zc)
        } else {
            write!(f, "{} + {}ζ", self.re, self.zc)
        }
    }
}

impl<'a> Add<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein { re: &self.re + &o.re, zc: &self.zc + &o.zc }
    }
}

impl<'a> Sub<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein { re: &self.re - &o.re, zc: &self.zc - &o.zc }
    }
}

impl<'a> Mul<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    // (a + bζ)(c + dζ) = (ac − bd) + (ad + bc − bd)ζ
    fn mul(self, o: &Eisenstein) -> Eisenstein {
        if self.zc.is_zero() && o.zc.is_zero() {
            return Eisenstein::from_rational(&self.re * &o.re);
        }
        let bd = &self.zc * &o.zc;
        Eisenstein {
            re: &self.re * &o.re - &bd,
            zc: &self.re * &o.zc + &self.zc * &o.re - bd,
        }
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: Eisenstein) -> Eisenstein {
        &self + &o
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: Eisenstein) -> Eisenstein {
        &self - &o
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: Eisenstein) -> Eisenstein {
        &self * &o
    }
}

impl AddAssign<&Eisenstein> for Eisenstein {
    fn add_assign(&mut self, o: &Eisenstein) {
        self.re += &o.re;
        self.zc += &o.zc;
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein { re: -self.re, zc: -self.zc }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein { re: -&self.re, zc: -&self.zc }
    }
}

impl From<Rational> for Eisenstein {
    fn from(r: Rational) -> Self {
        Eisenstein::from_rational(r)
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.zc.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::from_int(1)
    }
}

impl Field for Eisenstein {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let inv = n.recip();
        Some(self.conj().scale(&inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use proptest::prelude::*;

    fn arb_eis() -> impl Strategy<Value = Eisenstein> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| Eisenstein::new(rat(a, b), rat(c, d)))
    }

    #[test]
    fn sqrt_minus3_squares_to_minus3() {
        let s = Eisenstein::sqrt_minus3();
        assert_eq!(&s * &s, Eisenstein::from_int(-3));
    }

    #[test]
    fn zeta_is_primitive_cube_root() {
        let z = Eisenstein::zeta();
        let z2 = &z * &z;
        assert_eq!(z2, Eisenstein::zeta_pow(2));
        assert_eq!(&z2 * &z, Eisenstein::from_int(1));
        assert_eq!(&(&z2 + &z) + &Eisenstein::from_int(1), Eisenstein::zero());
        assert_eq!(z.conj(), z2);
        assert_eq!(Eisenstein::zeta_pow(-1), z2);
    }

    #[test]
    fn norm_is_product_with_conjugate() {
        let x = Eisenstein::new(rat(3, 2), rat(-5, 7));
        let p = &x * &x.conj();
        assert!(p.is_rational());
        assert_eq!(p.re, x.norm());
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_eis(), b in arb_eis(), c in arb_eis()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!(a.norm() >= Rational::zero());
            if !Zero::is_zero(&a) {
                prop_assert_eq!(&a * &a.inv().unwrap(), Eisenstein::one());
                prop_assert!(a.norm() > Rational::zero());
            }
        }
    }
}
