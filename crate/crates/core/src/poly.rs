//! Sparse multivariate polynomials over cyclotomic fields.
//!
//! `Poly<N>` is the shared engine behind ternary forms, the six-variable
//! biforms used for duality checks, and parsed fixtures. Terms are kept in a
//! `BTreeMap` keyed by exponent arrays; zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::CycloScalar;

pub type Exponent<const N: usize> = [u32; N];

/// Graded lexicographic comparison: total degree first, then lex with the
/// first variable largest.
pub fn grlex_cmp<const N: usize>(a: &Exponent<N>, b: &Exponent<N>) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<Exponent<N>, CycloScalar>,
}

impl<const N: usize> Default for Poly<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: CycloScalar) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn monomial(exp: Exponent<N>, c: CycloScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, CycloScalar::one(1))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Exponent<N>, CycloScalar)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Exponent<N>, CycloScalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Exponent<N>) -> Option<&CycloScalar> {
        self.terms.get(exp)
    }

    pub fn add_term(&mut self, exp: Exponent<N>, c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&Exponent<N>, &CycloScalar)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Cyclotomic order large enough for every coefficient.
    pub fn order(&self) -> u32 {
        self.terms
            .values()
            .map(|c| c.order())
            .fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Exponent<N>, CycloScalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(CycloScalar::one(1));
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[var] -= 1;
            out.add_term(ne, &(c * &CycloScalar::from_int(1, e[var] as i64)));
        }
        out
    }

    /// Evaluate at a point; powers of each coordinate are cached.
    pub fn evaluate(&self, point: &[CycloScalar; N]) -> CycloScalar {
        let order = point
            .iter()
            .map(|c| c.order())
            .fold(self.order(), |acc, o| acc.lcm(&o));
        let max_exp: Vec<u32> = (0..N)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<CycloScalar>> = (0..N)
            .map(|i| {
                let mut v = Vec::with_capacity(max_exp[i] as usize + 1);
                v.push(CycloScalar::one(1));
                for k in 1..=max_exp[i] as usize {
                    let next = &v[k - 1] * &point[i];
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = CycloScalar::zero(order);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..N {
                if e[i] > 0 {
                    t = &t * &powers[i][e[i] as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Compose with polynomials in `M` variables: `self(subs[0], ..., subs[N-1])`.
    pub fn substitute<const M: usize>(&self, subs: &[Poly<M>; N]) -> Poly<M> {
        let max_exp: Vec<u32> = (0..N)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Poly<M>>> = (0..N)
            .map(|i| {
                let mut v = vec![Poly::<M>::constant(CycloScalar::one(1))];
                for k in 1..=max_exp[i] as usize {
                    let next = v[k - 1].mul(&subs[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Poly::<M>::zero();
        for (e, c) in &self.terms {
            let mut t = Poly::<M>::constant(c.clone());
            for i in 0..N {
                if e[i] > 0 {
                    t = t.mul(&powers[i][e[i] as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact division `self / divisor` if the remainder is zero.
    ///
    /// Multivariate division by the graded-lex leading term; a nonzero
    /// remainder means the divisor does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading()?;
        let lead_e = *lead_e;
        let lead_inv = lead_c.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let mut qe = *e;
            for (x, y) in qe.iter_mut().zip(&lead_e) {
                *x -= y;
            }
            let qc = c * &lead_inv;
            let step = Self::monomial(qe, qc.clone());
            rem = rem.sub(&step.mul(divisor));
            quot.add_term(qe, &qc);
        }
        Some(quot)
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Content-free integer normalization for rational polynomials with a
    /// positive leading coefficient; falls back to [`Poly::monic`] otherwise.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let rationals: Option<Vec<_>> = self.terms.values().map(|c| c.to_rational()).collect();
        let Some(rationals) = rationals else {
            return self.monic();
        };
        let lcm_den = rationals
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = rationals
            .iter()
            .map(|q| q.numer() * (&lcm_den / q.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let lead_e = *self.leading().expect("nonzero").0;
        let lead_pos = self.terms.keys().position(|e| *e == lead_e).expect("present");
        let sign = if ints[lead_pos].is_negative() { -1 } else { 1 };
        let terms = self
            .terms
            .keys()
            .zip(ints)
            .map(|(e, v)| (*e, CycloScalar::from_bigint(1, v * sign / &g)))
            .collect();
        Poly { terms }
    }

    /// Equality up to a nonzero scalar factor.
    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        self.monic() == other.monic()
    }

    pub fn fmt_with(&self, names: &[&str; N], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| grlex_cmp(b.0, a.0));
        for (idx, (e, c)) in ordered.into_iter().enumerate() {
            let mono: Vec<String> = (0..N)
                .filter(|&i| e[i] > 0)
                .map(|i| {
                    if e[i] == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], e[i])
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (negative, coeff_text) = match c.to_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    let a = q.abs();
                    let txt = if a.is_integer() {
                        a.numer().to_string()
                    } else {
                        format!("{}/{}", a.numer(), a.denom())
                    };
                    (neg, txt)
                }
                None => (false, format!("({c})")),
            };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{coeff_text}")?;
            } else if coeff_text == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff_text}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Six-variable polynomial in `(x, y, z, a, b, c)`: a plane curve whose
/// coefficients depend polynomially on a point `(a, b, c)`.
pub type BiForm = Poly<6>;

pub struct Named<'a, const N: usize>(pub &'a Poly<N>, pub [&'static str; N]);

impl<const N: usize> fmt::Display for Named<'_, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(&self.1, f)
    }
}

pub const BIFORM_NAMES: [&str; 6] = ["x", "y", "z", "a", "b", "c"];

/// Parse a biform from text over `Q(zeta_order)`.
pub fn parse_biform(text: &str, order: u32) -> crate::Result<BiForm> {
    use crate::parse::{self, VAR_E, VAR_X};
    let raw = parse::parse_polynomial(text)?;
    let mut out = BiForm::zero();
    for (m, q) in raw {
        let mut e = [0u32; 6];
        e.copy_from_slice(&m[VAR_X..VAR_X + 6]);
        let c = CycloScalar::zeta_power(order, m[VAR_E] as i64) * CycloScalar::from_rational(1, &q);
        out.add_term(e, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(text: &str) -> Poly<3> {
        let b = parse_biform(text, 1).unwrap();
        Poly::from_terms(b.terms().iter().map(|(e, c)| ([e[0], e[1], e[2]], c.clone())))
    }

    #[test]
    fn multiply_and_divide() {
        let a = p3("x + y");
        let b = p3("x - y");
        let prod = a.mul(&b);
        assert_eq!(prod, p3("x^2 - y^2"));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(p3("x^2 + y^2").div_exact(&a), None);
    }

    #[test]
    fn primitive_normalization() {
        let p = p3("-2/3*x^2 + 4/9*y*z");
        assert_eq!(p.primitive(), p3("3*x^2 - 2*y*z"));
        assert!(p.equal_up_to_scalar(&p3("3*x^2 - 2*y*z")));
    }

    #[test]
    fn substitute_composes() {
        let p = p3("x^2*y");
        let swapped = p.substitute(&[p3("y"), p3("x"), p3("z")]);
        assert_eq!(swapped, p3("y^2*x"));
    }
}
