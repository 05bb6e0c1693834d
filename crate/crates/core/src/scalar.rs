//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! A [`CycloScalar`] stores an element of `Q(zeta_n)` as an integer vector of
//! length `phi(n)` over a common positive denominator, reduced modulo the
//! cyclotomic polynomial `Phi_n`. Values of different orders are combined by
//! embedding both into the field of the least common order.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::parse;

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n > 0, "cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

struct FieldData {
    phi: usize,
    /// `powers[m]` is `zeta^m` reduced, for `m < 2 * order`.
    powers: Vec<Vec<i64>>,
    units: Vec<u32>,
}

impl FieldData {
    fn new(order: u32) -> Self {
        let cyc = cyclotomic_polynomial(order);
        let phi = cyc.len() - 1;
        let limit = (2 * order as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(limit);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..limit {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Phi_n
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * cyc[i];
            }
            cur[0] = -top * cyc[0];
        }
        let units = (1..=order.max(1))
            .filter(|j| order == 1 || j.gcd(&order) == 1)
            .filter(|&j| j < order || order == 1)
            .collect();
        FieldData {
            phi,
            powers,
            units,
        }
    }
}

thread_local! {
    static FIELDS: RefCell<HashMap<u32, Rc<FieldData>>> = RefCell::new(HashMap::new());
}

fn field(order: u32) -> Rc<FieldData> {
    FIELDS.with(|cache| {
        cache
            .borrow_mut()
            .entry(order)
            .or_insert_with(|| Rc::new(FieldData::new(order)))
            .clone()
    })
}

/// An exact element of `Q(zeta_n)`.
#[derive(Clone, Debug)]
pub struct CycloScalar {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloScalar {
    pub fn zero(order: u32) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        CycloScalar {
            order,
            num: vec![BigInt::zero(); totient(order) as usize],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, value: i64) -> Self {
        let mut s = Self::zero(order);
        s.num[0] = BigInt::from(value);
        s
    }

    pub fn from_bigint(order: u32, value: BigInt) -> Self {
        let mut s = Self::zero(order);
        s.num[0] = value;
        s
    }

    pub fn from_rational(order: u32, value: &BigRational) -> Self {
        let mut s = Self::zero(order);
        s.num[0] = value.numer().clone();
        s.den = value.denom().clone();
        s.normalize();
        s
    }

    pub fn from_ratio(order: u32, numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_rational(order, &BigRational::new(numer.into(), denom.into()))
    }

    /// The primitive root `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(order: u32) -> Self {
        Self::zeta_power(order, 1)
    }

    /// `zeta_n^m` for any integer `m`.
    pub fn zeta_power(order: u32, m: i64) -> Self {
        let fd = field(order);
        let e = m.rem_euclid(order as i64) as usize;
        CycloScalar {
            order,
            num: fd.powers[e].iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Coefficients (as rationals) of the reduced representative in the power basis.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Whether the value lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Rough size in bits, used to pick small pivots.
    pub fn height(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).sum::<u64>() + self.den.bits()
    }

    /// The same value viewed in `Q(zeta_target)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target % self.order == 0,
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        let fd = field(target);
        let step = (target / self.order) as usize;
        let mut num = vec![BigInt::zero(); fd.phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, &p) in fd.powers[i * step].iter().enumerate() {
                if p != 0 {
                    num[r] += c * p;
                }
            }
        }
        let mut out = CycloScalar {
            order: target,
            num,
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    fn common_order(&self, other: &Self) -> u32 {
        if self.order == other.order || other.order == 1 {
            self.order
        } else if self.order == 1 {
            other.order
        } else {
            self.order.lcm(&other.order)
        }
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self, u32) {
        let order = self.common_order(other);
        let a = if self.order == order {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed(order))
        };
        let b = if other.order == order {
            other.clone()
        } else if other.order == 1 {
            let mut b = CycloScalar::zero(order);
            b.num[0] = other.num[0].clone();
            b.den = other.den.clone();
            b
        } else {
            other.embed(order)
        };
        (a, b, order)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.order == other.order {
            return self.add_same(other, negate);
        }
        let (a, b, _) = self.aligned(other);
        a.add_same(&b, negate)
    }

    fn add_same(&self, other: &Self, negate: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect();
            (num, self.den.clone())
        } else {
            let l = self.den.lcm(&other.den);
            let fa = &l / &self.den;
            let fb = &l / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(x, y)| {
                    let x = x * &fa;
                    let y = y * &fb;
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, l)
        };
        let mut out = CycloScalar {
            order: self.order,
            num,
            den,
        };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if other.order == 1 || self.order == 1 {
            let (s, r) = if other.order == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let c = &r.num[0];
            let mut out = CycloScalar {
                order: s.order,
                num: s.num.iter().map(|x| x * c).collect(),
                den: &s.den * &r.den,
            };
            out.normalize();
            return out;
        }
        if self.order != other.order {
            let (a, b, _) = self.aligned(other);
            return a.mul_impl(&b);
        }
        let fd = field(self.order);
        let phi = fd.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut num: Vec<BigInt> = prod[..phi].to_vec();
        for (m, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (r, &p) in fd.powers[m].iter().enumerate() {
                if p != 0 {
                    num[r] += c * p;
                }
            }
        }
        let mut out = CycloScalar {
            order: self.order,
            num,
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }

    /// Image under the Galois automorphism `zeta -> zeta^j` (`gcd(j, n) = 1`).
    pub fn galois(&self, j: u32) -> Self {
        let fd = field(self.order);
        let n = self.order as usize;
        let mut num = vec![BigInt::zero(); fd.phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i * j as usize) % n.max(1);
            for (r, &p) in fd.powers[e].iter().enumerate() {
                if p != 0 {
                    num[r] += c * p;
                }
            }
        }
        let mut out = CycloScalar {
            order: self.order,
            num,
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        let fd = field(self.order);
        let mut acc = self.clone();
        for &j in fd.units.iter().filter(|&&j| j != 1) {
            acc = acc.mul_impl(&self.galois(j));
        }
        acc.to_rational().expect("norm is rational")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            let mut out = CycloScalar::zero(self.order);
            out.num[0] = self.den.clone();
            out.den = self.num[0].clone();
            out.normalize();
            return Ok(out);
        }
        let fd = field(self.order);
        let mut conj = CycloScalar::one(self.order);
        for &j in fd.units.iter().filter(|&&j| j != 1) {
            conj = conj.mul_impl(&self.galois(j));
        }
        let norm = self
            .mul_impl(&conj)
            .to_rational()
            .expect("product of all conjugates is rational");
        let scale = CycloScalar::from_rational(1, &norm.recip());
        Ok(conj.mul_impl(&scale))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycloScalar::one(self.order);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Parse the scalar syntax used in configuration files: integers,
    /// fractions `p/q`, and polynomials in `e` (standing for `zeta_order`).
    pub fn parse(text: &str, order: u32) -> Result<Self> {
        let poly = parse::parse_polynomial(text)?;
        let mut acc = CycloScalar::zero(order);
        for (mono, coeff) in poly {
            if mono.iter().enumerate().any(|(v, &e)| v != parse::VAR_E && e > 0) {
                return Err(Error::Parse(format!(
                    "scalar `{text}` may only contain the symbol `e`"
                )));
            }
            let term = CycloScalar::zeta_power(order, mono[parse::VAR_E] as i64)
                * CycloScalar::from_rational(1, &coeff);
            acc += term;
        }
        Ok(acc)
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b, _) = self.aligned(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycloScalar {}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, q) in self.coefficients().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let negative = q.is_negative();
            let abs = q.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "e")?;
                    } else {
                        write!(f, "e^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                let f: fn(&CycloScalar, &CycloScalar) -> CycloScalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero scalar"));

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl AddAssign<CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: CycloScalar) {
        *self = self.add_impl(&rhs, false);
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&CycloScalar> for CycloScalar {
    fn mul_assign(&mut self, rhs: &CycloScalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(mut self) -> CycloScalar {
        for c in &mut self.num {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -self.clone()
    }
}

/// Small integer view, when the value is an integer that fits.
pub fn as_small_int(s: &CycloScalar) -> Option<i64> {
    let q = s.to_rational()?;
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n) as usize);
        }
    }

    #[test]
    fn roots_of_unity() {
        assert!(CycloScalar::root_of_unity(1).is_one());
        let i = CycloScalar::root_of_unity(4);
        assert_eq!(&i * &i, CycloScalar::from_int(4, -1));
        let w = CycloScalar::root_of_unity(3);
        let s = &(&w * &w) + &w;
        assert_eq!(s + CycloScalar::one(3), CycloScalar::zero(3));
    }

    #[test]
    fn field_examples() {
        let z5 = CycloScalar::root_of_unity(5);
        assert!((&z5 * &z5.pow(4)).is_one());
        let i = CycloScalar::root_of_unity(4);
        let one = CycloScalar::one(4);
        assert_eq!(&(&one + &i) * &(&one - &i), CycloScalar::from_int(1, 2));
        let w = CycloScalar::root_of_unity(3);
        let inv = w.inv().unwrap();
        assert_eq!(inv, w.pow(2));
        assert_eq!(inv, -CycloScalar::one(3) - w.clone());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            CycloScalar::zero(5).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn mixed_orders_embed_into_lcm() {
        let i = CycloScalar::root_of_unity(4);
        let w = CycloScalar::root_of_unity(3);
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p, CycloScalar::zeta_power(12, 3 + 4));
        // zeta_6 = -zeta_3^2
        let z6 = CycloScalar::root_of_unity(6);
        assert_eq!(z6, -w.pow(2));
    }

    #[test]
    fn norm_of_one_plus_i() {
        let x = CycloScalar::one(4) + CycloScalar::root_of_unity(4);
        assert_eq!(x.norm(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn parse_and_display() {
        let s = CycloScalar::parse("1+e", 3).unwrap();
        assert_eq!(s, CycloScalar::one(3) + CycloScalar::root_of_unity(3));
        let t = CycloScalar::parse("-3/2*e", 5).unwrap();
        assert_eq!(t.to_string(), "-3/2*e");
        let u = CycloScalar::parse("e^3", 3).unwrap();
        assert!(u.is_one());
        let v = CycloScalar::parse("e^2", 4).unwrap();
        assert_eq!(v.to_string(), "-1");
        assert!(CycloScalar::parse("x+1", 3).is_err());
        let w = CycloScalar::parse("2 - 5*e + 7/3*e^2", 7).unwrap();
        assert_eq!(CycloScalar::parse(&w.to_string(), 7).unwrap(), w);
    }
}
