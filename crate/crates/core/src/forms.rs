//! Homogeneous forms in three variables, binary forms on a parametrized
//! line, projective points, and exponent multi-indices.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{BiForm, Poly};
use crate::scalar::CycloScalar;

/// Exponent triple `(i1, i2, i3)` of a monomial `x^i1 y^i2 z^i3`.
pub type MultiIndex = [u32; 3];

/// All multi-indices of total degree `k` in graded-lex order with `x > y > z`:
/// `(k,0,0), (k-1,1,0), (k-1,0,1), (k-2,2,0), ...`.
pub fn multi_indices(k: u32) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(((k + 1) * (k + 2) / 2) as usize);
    for i in (0..=k).rev() {
        for j in (0..=k - i).rev() {
            out.push([i, j, k - i - j]);
        }
    }
    out
}

/// Position of `idx` in [`multi_indices`] of its degree.
pub fn multi_index_position(idx: &MultiIndex) -> usize {
    let k = idx.iter().sum::<u32>();
    let i = idx[0];
    // indices with first entry > i come first
    let before: u32 = (i + 1..=k).map(|a| k - a + 1).sum();
    (before + (k - i - idx[1])) as usize
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn multinomial(idx: &MultiIndex) -> u64 {
    let k: u64 = idx.iter().map(|&v| v as u64).sum();
    binomial(k, idx[0] as u64) * binomial(k - idx[0] as u64, idx[1] as u64)
}

/// A point of the projective plane, normalized so the first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    coords: [CycloScalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [CycloScalar; 3]) -> Result<Self> {
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidInput("all coordinates are zero".into()))?;
        let inv = coords[pivot].inv()?;
        let coords = coords.map(|c| &c * &inv);
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new([
            CycloScalar::from_int(1, a),
            CycloScalar::from_int(1, b),
            CycloScalar::from_int(1, c),
        ])
    }

    pub fn coords(&self) -> &[CycloScalar; 3] {
        &self.coords
    }

    /// `a,b,c` with each coordinate in the scalar syntax.
    pub fn parse(text: &str, order: u32) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three comma-separated coordinates, got `{text}`"
            )));
        }
        let c0 = CycloScalar::parse(parts[0], order)?;
        let c1 = CycloScalar::parse(parts[1], order)?;
        let c2 = CycloScalar::parse(parts[2], order)?;
        Self::new([c0, c1, c2])
    }

    pub fn dot(&self, other: &ProjPoint) -> CycloScalar {
        dot(&self.coords, &other.coords)
    }

    /// The linear form `p x + q y + r z` dual to this point.
    pub fn dual_form(&self) -> TernaryForm {
        TernaryForm::linear(&self.coords)
    }

    pub fn is_same(&self, other: &ProjPoint) -> bool {
        self == other
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

pub fn dot(a: &[CycloScalar; 3], b: &[CycloScalar; 3]) -> CycloScalar {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub fn cross(a: &[CycloScalar; 3], b: &[CycloScalar; 3]) -> [CycloScalar; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// A homogeneous form in `x, y, z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    poly: Poly<3>,
}

pub const TERNARY_NAMES: [&str; 3] = ["x", "y", "z"];

impl TernaryForm {
    /// The zero form, tagged with a conventional degree.
    pub fn zero(degree: u32) -> Self {
        TernaryForm {
            degree,
            poly: Poly::zero(),
        }
    }

    pub fn constant(c: CycloScalar) -> Self {
        TernaryForm {
            degree: 0,
            poly: Poly::constant(c),
        }
    }

    pub fn var(i: usize) -> Self {
        TernaryForm {
            degree: 1,
            poly: Poly::var(i),
        }
    }

    pub fn linear(coeffs: &[CycloScalar; 3]) -> Self {
        let poly = Poly::from_terms(
            (0..3).map(|i| {
                let mut e = [0; 3];
                e[i] = 1;
                (e, coeffs[i].clone())
            }),
        );
        TernaryForm { degree: 1, poly }
    }

    pub fn from_poly(poly: Poly<3>) -> Result<Self> {
        if !poly.is_homogeneous() {
            return Err(Error::InvalidInput("polynomial is not homogeneous".into()));
        }
        let degree = poly.total_degree().unwrap_or(0);
        Ok(TernaryForm { degree, poly })
    }

    fn from_poly_with_degree(poly: Poly<3>, degree: u32) -> Self {
        debug_assert!(poly.terms().keys().all(|e| e.iter().sum::<u32>() == degree));
        TernaryForm { degree, poly }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Poly<3> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> Option<&CycloScalar> {
        self.poly.coeff(idx)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        if self.is_zero() {
            return Ok(if negate { other.neg() } else { other.clone() });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let poly = if negate {
            self.poly.sub(&other.poly)
        } else {
            self.poly.add(&other.poly)
        };
        Ok(Self::from_poly_with_degree(poly, self.degree))
    }

    pub fn neg(&self) -> Self {
        Self::from_poly_with_degree(self.poly.neg(), self.degree)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_poly_with_degree(self.poly.mul(&other.poly), self.degree + other.degree)
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        Self::from_poly_with_degree(self.poly.scale(c), self.degree)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::from_poly_with_degree(self.poly.pow(e), self.degree * e)
    }

    /// Formal partial derivative with respect to variable `var` (0 = x).
    pub fn differentiate(&self, var: usize) -> Self {
        assert!(var < 3, "variable index out of range");
        Self::from_poly_with_degree(self.poly.derivative(var), self.degree.saturating_sub(1))
    }

    pub fn evaluate(&self, p: &ProjPoint) -> CycloScalar {
        self.poly.evaluate(p.coords())
    }

    pub fn evaluate_at(&self, coords: &[CycloScalar; 3]) -> CycloScalar {
        self.poly.evaluate(coords)
    }

    /// `p(sx, sy, sz)` for linear forms `sx, sy, sz`.
    pub fn substitute_linear(&self, sx: &Self, sy: &Self, sz: &Self) -> Result<Self> {
        for s in [sx, sy, sz] {
            if s.degree != 1 && !s.is_zero() {
                return Err(Error::NonLinearSubstitution);
            }
        }
        let poly = self
            .poly
            .substitute(&[sx.poly.clone(), sy.poly.clone(), sz.poly.clone()]);
        Ok(Self::from_poly_with_degree(poly, self.degree))
    }

    /// The binary form `(l, m) -> p(l * p0 + m * p1)`.
    pub fn restrict_to_line(&self, p0: &ProjPoint, p1: &ProjPoint) -> Result<BinaryForm> {
        if p0.is_same(p1) {
            return Err(Error::CoincidentPoints);
        }
        Ok(self.restrict_raw(p0.coords(), p1.coords()))
    }

    /// Restriction along `l * u + m * v` without normalizing the points.
    pub fn restrict_raw(&self, u: &[CycloScalar; 3], v: &[CycloScalar; 3]) -> BinaryForm {
        let coords: Vec<BinaryForm> = (0..3)
            .map(|i| BinaryForm::from_coeffs(vec![v[i].clone(), u[i].clone()]))
            .collect();
        let max_exp: Vec<u32> = (0..3)
            .map(|i| self.poly.terms().keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<BinaryForm>> = (0..3)
            .map(|i| {
                let mut v = vec![BinaryForm::constant(CycloScalar::one(1))];
                for k in 1..=max_exp[i] as usize {
                    let next = v[k - 1].mul(&coords[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = BinaryForm::zero(self.degree);
        for (e, c) in self.poly.terms() {
            let t = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize])
                .scale(c);
            acc = acc.add(&t);
        }
        acc
    }

    /// Order of vanishing at `p`: the largest `m` such that all partial
    /// derivatives of order `< m` vanish there.
    pub fn multiplicity_at(&self, p: &ProjPoint) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        // Move p to the coordinate point e_r and read off the lowest order
        // in the remaining two variables.
        let c = p.coords();
        let r = c.iter().position(|v| !v.is_zero()).expect("normalized point");
        let subs: Vec<Self> = (0..3)
            .map(|s| {
                if s == r {
                    Self::var(r)
                } else {
                    Self::var(s)
                        .add(&Self::var(r).scale(&c[s]))
                        .expect("linear forms")
                }
            })
            .collect();
        let moved = self.substitute_linear(&subs[0], &subs[1], &subs[2])?;
        let top = moved
            .poly
            .terms()
            .keys()
            .map(|e| e[r])
            .max()
            .expect("nonzero");
        Ok(self.degree - top)
    }

    /// Whether `self` divides `other` exactly.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(other.poly.div_exact(&self.poly).is_some())
    }

    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.degree > self.degree && !self.is_zero() {
            return None;
        }
        let q = self.poly.div_exact(&divisor.poly)?;
        Some(Self::from_poly_with_degree(
            q,
            self.degree.saturating_sub(divisor.degree),
        ))
    }

    pub fn monic(&self) -> Self {
        Self::from_poly_with_degree(self.poly.monic(), self.degree)
    }

    pub fn primitive(&self) -> Self {
        Self::from_poly_with_degree(self.poly.primitive(), self.degree)
    }

    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        self.poly.equal_up_to_scalar(&other.poly)
    }

    /// Parse the textual syntax, e.g. `49*x^3*y - 49*x*y^3 + 168*x^2*y*z`.
    pub fn parse(text: &str, order: u32) -> Result<Self> {
        let bi = crate::poly::parse_biform(text, order)?;
        if bi.terms().keys().any(|e| e[3] + e[4] + e[5] > 0) {
            return Err(Error::Parse(format!(
                "form `{text}` may only use x, y, z and e"
            )));
        }
        Self::from_poly(Poly::from_terms(
            bi.terms()
                .iter()
                .map(|(e, c)| ([e[0], e[1], e[2]], c.clone())),
        ))
    }

    /// View as a six-variable polynomial not depending on `(a, b, c)`.
    pub fn to_biform(&self) -> BiForm {
        BiForm::from_terms(
            self.poly
                .terms()
                .iter()
                .map(|(e, c)| ([e[0], e[1], e[2], 0, 0, 0], c.clone())),
        )
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt_with(&TERNARY_NAMES, f)
    }
}

/// A homogeneous form in the two line parameters `(l, m)`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `l^i m^(deg - i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<CycloScalar>,
}

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            coeffs: vec![CycloScalar::zero(1); degree as usize + 1],
        }
    }

    pub fn constant(c: CycloScalar) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    pub fn from_coeffs(coeffs: Vec<CycloScalar>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    /// `l^i m^(deg-i)`.
    pub fn monomial(degree: u32, i: u32) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i as usize] = CycloScalar::one(1);
        f
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[CycloScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloScalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() && self.degree() != other.degree() {
            return other.clone();
        }
        if other.is_zero() && self.degree() != other.degree() {
            return self.clone();
        }
        assert_eq!(self.degree(), other.degree(), "binary form degree mismatch");
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out: Vec<Option<CycloScalar>> = vec![None; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                match &mut out[i + j] {
                    Some(v) => *v += p,
                    slot => *slot = Some(p),
                }
            }
        }
        BinaryForm {
            coeffs: out
                .into_iter()
                .map(|c| c.unwrap_or_else(|| CycloScalar::zero(1)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(CycloScalar::one(1));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn evaluate(&self, l: &CycloScalar, m: &CycloScalar) -> CycloScalar {
        // Horner in l over powers of m.
        let d = self.coeffs.len() - 1;
        let mut acc = CycloScalar::zero(1);
        let mut mpow = vec![CycloScalar::one(1)];
        for k in 1..=d {
            let next = &mpow[k - 1] * m;
            mpow.push(next);
        }
        for i in (0..=d).rev() {
            acc = &(&acc * l) + &(&self.coeffs[i] * &mpow[d - i]);
        }
        acc
    }

    /// Substitute linear ternary forms for the parameters.
    pub fn compose(&self, l: &TernaryForm, m: &TernaryForm) -> TernaryForm {
        let d = self.degree();
        let mut lp = vec![TernaryForm::constant(CycloScalar::one(1))];
        let mut mp = vec![TernaryForm::constant(CycloScalar::one(1))];
        for k in 1..=d as usize {
            let nl = lp[k - 1].mul(l);
            let nm = mp[k - 1].mul(m);
            lp.push(nl);
            mp.push(nm);
        }
        let mut acc = TernaryForm::zero(d * l.degree().max(m.degree()).max(1));
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = lp[i].mul(&mp[d as usize - i]).scale(c);
            acc = acc.add(&t).expect("same degree");
        }
        acc
    }

    /// Split off the monomial content `l^a m^b`, returning `(a, b, rest)`.
    fn strip_monomial(&self) -> (u32, u32, Vec<CycloScalar>) {
        let lo = self.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
        let hi = self.coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero");
        let d = self.degree() as usize;
        (lo as u32, (d - hi) as u32, self.coeffs[lo..=hi].to_vec())
    }

    /// Monic normalization: highest nonzero `l`-power coefficient set to 1.
    pub fn monic(&self) -> Self {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            None => self.clone(),
            Some(i) => self.scale(&self.coeffs[i].inv().expect("nonzero")),
        }
    }

    /// Greatest common divisor, normalized monic.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroForm);
        }
        let (la, ma, ra) = self.strip_monomial();
        let (lb, mb, rb) = other.strip_monomial();
        let g = univariate_gcd(ra, rb);
        let lpow = la.min(lb) as usize;
        let mpow = ma.min(mb) as usize;
        let gdeg = g.len() - 1;
        let mut coeffs = vec![CycloScalar::zero(1); lpow + gdeg + mpow + 1];
        for (i, c) in g.into_iter().enumerate() {
            coeffs[lpow + i] = c;
        }
        Ok(BinaryForm { coeffs }.monic())
    }

    /// Exact quotient by `divisor`, or `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let sd = self.degree() as usize;
        let dd = divisor.degree() as usize;
        if dd > sd {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero((sd - dd) as u32));
        }
        let (q, r) = univariate_divrem(&trim(self.coeffs.clone()), &trim(divisor.coeffs.clone()));
        if !is_zero_vec(&r) || q.len() > sd - dd + 1 {
            return None;
        }
        let mut coeffs = q;
        coeffs.resize(sd - dd + 1, CycloScalar::zero(1));
        Some(BinaryForm { coeffs })
    }
}

fn is_zero_vec(v: &[CycloScalar]) -> bool {
    v.iter().all(CycloScalar::is_zero)
}

/// Euclid over the field on coefficient vectors (lowest power first).
fn univariate_gcd(a: Vec<CycloScalar>, b: Vec<CycloScalar>) -> Vec<CycloScalar> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !is_zero_vec(&b) {
        let (_, r) = univariate_divrem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn trim(mut v: Vec<CycloScalar>) -> Vec<CycloScalar> {
    while v.len() > 1 && v.last().map_or(false, CycloScalar::is_zero) {
        v.pop();
    }
    v
}

/// Quotient and remainder of trimmed coefficient vectors; `b` nonzero.
fn univariate_divrem(a: &[CycloScalar], b: &[CycloScalar]) -> (Vec<CycloScalar>, Vec<CycloScalar>) {
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("trimmed nonzero divisor");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![CycloScalar::zero(1)], trim(r));
    }
    let mut q = vec![CycloScalar::zero(1); r.len() - db];
    for top in (db..r.len()).rev() {
        if r[top].is_zero() {
            continue;
        }
        let c = &r[top] * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                let idx = top - db + j;
                r[idx] -= &(&c * bc);
            }
        }
        q[top - db] = c;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let poly = Poly::<2>::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ([i as u32, d - i as u32], c.clone())),
        );
        poly.fmt_with(&["l", "m"], f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> TernaryForm {
        TernaryForm::parse(text, 1).unwrap()
    }

    fn q(a: i64) -> CycloScalar {
        CycloScalar::from_int(1, a)
    }

    #[test]
    fn multi_index_order() {
        assert_eq!(
            multi_indices(2),
            vec![[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
        );
        for k in 0..6 {
            let all = multi_indices(k);
            assert_eq!(all.len() as u64, binomial(k as u64 + 2, 2));
            for (i, idx) in all.iter().enumerate() {
                assert_eq!(multi_index_position(idx), i);
            }
        }
        assert_eq!(multinomial(&[1, 1, 0]), 2);
        assert_eq!(multinomial(&[2, 1, 1]), 12);
    }

    #[test]
    fn differentiate_examples() {
        assert_eq!(t("x^3").differentiate(0), t("3*x^2"));
        assert_eq!(t("x*y*z").differentiate(1), t("x*z"));
        let c = t("7");
        assert!(c.differentiate(0).is_zero());
    }

    #[test]
    fn euler_identity_on_small_arrangement() {
        let f = t("x*y*z*(x+y+z)");
        let euler = (0..3)
            .map(|i| TernaryForm::var(i).mul(&f.differentiate(i)))
            .reduce(|a, b| a.add(&b).unwrap())
            .unwrap();
        assert_eq!(euler, f.scale(&q(4)));
    }

    #[test]
    fn evaluate_examples() {
        assert!(t("x^2 - y^2")
            .evaluate(&ProjPoint::from_ints(1, 1, 0).unwrap())
            .is_zero());
        let w = CycloScalar::root_of_unity(3);
        let form = TernaryForm::parse("x + e*y", 3).unwrap();
        let p = ProjPoint::new([q(1), w.pow(2), q(0)]).unwrap();
        assert_eq!(form.evaluate(&p), q(2));
    }

    #[test]
    fn substitution_examples() {
        let swap = t("x^2").substitute_linear(&t("y"), &t("x"), &t("z")).unwrap();
        assert_eq!(swap, t("y^2"));
        // cross-product column for (alpha, beta, gamma) = (0, 0, 1)
        let (a, b, g) = (q(0), q(0), q(1));
        let sx = TernaryForm::linear(&[q(0), -g.clone(), b.clone()]);
        let sy = TernaryForm::linear(&[g.clone(), q(0), -a.clone()]);
        let sz = TernaryForm::linear(&[-b, a, q(0)]);
        assert_eq!(t("x").substitute_linear(&sx, &sy, &sz).unwrap(), t("-y"));
        let id = t("x+y+z")
            .substitute_linear(&t("x"), &t("y"), &t("z"))
            .unwrap();
        assert_eq!(id, t("x+y+z"));
        assert!(matches!(
            t("x").substitute_linear(&t("x^2"), &t("y"), &t("z")),
            Err(Error::NonLinearSubstitution)
        ));
    }

    #[test]
    fn restriction_examples() {
        let p0 = ProjPoint::from_ints(1, 0, 0).unwrap();
        let p1 = ProjPoint::from_ints(0, 1, 0).unwrap();
        let r = t("x").restrict_to_line(&p0, &p1).unwrap();
        assert_eq!(r, BinaryForm::monomial(1, 1));
        let r2 = t("x^2 - y^2")
            .restrict_to_line(
                &ProjPoint::from_ints(1, 1, 0).unwrap(),
                &ProjPoint::from_ints(0, 0, 1).unwrap(),
            )
            .unwrap();
        assert!(r2.is_zero());
        assert!(matches!(
            t("x").restrict_to_line(&p0, &p0),
            Err(Error::CoincidentPoints)
        ));
    }

    #[test]
    fn multiplicity_examples() {
        let f = t("x^2*y");
        assert_eq!(f.multiplicity_at(&ProjPoint::from_ints(0, 0, 1).unwrap()).unwrap(), 3);
        assert_eq!(f.multiplicity_at(&ProjPoint::from_ints(0, 1, 0).unwrap()).unwrap(), 2);
        assert_eq!(f.multiplicity_at(&ProjPoint::from_ints(1, 1, 1).unwrap()).unwrap(), 0);
        assert!(matches!(
            TernaryForm::zero(3).multiplicity_at(&ProjPoint::from_ints(1, 0, 0).unwrap()),
            Err(Error::ZeroForm)
        ));
    }

    #[test]
    fn gcd_and_divisibility() {
        let a = BinaryForm::monomial(3, 2); // l^2 m
        let b = BinaryForm::monomial(3, 1); // l m^2
        assert_eq!(a.gcd(&b).unwrap(), BinaryForm::monomial(2, 1));
        assert!(t("x+y").divides(&t("x^2-y^2")).unwrap());
        assert!(!t("x").divides(&t("y^2+x*z")).unwrap());
        // (l - m)(l + 2m) and (l - m)(3l + m)
        let lm = BinaryForm::from_coeffs(vec![q(-1), q(1)]);
        let f1 = lm.mul(&BinaryForm::from_coeffs(vec![q(2), q(1)]));
        let f2 = lm.mul(&BinaryForm::from_coeffs(vec![q(1), q(3)]));
        assert_eq!(f1.gcd(&f2).unwrap(), lm.monic());
        assert_eq!(f1.div_exact(&lm).unwrap(), BinaryForm::from_coeffs(vec![q(2), q(1)]));
        assert!(f1.div_exact(&BinaryForm::from_coeffs(vec![q(1), q(1)])).is_none());
    }

    #[test]
    fn display_round_trip() {
        let f = t("49*x^3*y - 49*x*y^3 + 168*x^2*y*z");
        assert_eq!(TernaryForm::parse(&f.to_string(), 1).unwrap(), f);
        let g = TernaryForm::parse("(1+e)*x^2 - e^2*y*z", 5).unwrap();
        assert_eq!(TernaryForm::parse(&g.to_string(), 5).unwrap(), g);
    }
}
