//! Syzygies of powers of the Jacobian ideal, restricted to a generic line,
//! and the Euler-type generators `E_{I'}`.

use rayon::prelude::*;

use crate::arrangements::{Arrangement, GenericLine};
use crate::error::{Error, Result};
use crate::forms::{multi_index_position, multi_indices, multinomial, BinaryForm, MultiIndex, TernaryForm};
use crate::linalg::{ExactMatrix, IncrementalBasis};
use crate::scalar::CycloScalar;

/// A tuple `(g_I)_{|I| = k}` of degree-`d` binary forms with
/// `sum_I g_I w^I = 0` on the line, where `w` is the restricted gradient of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVector {
    pub k: u32,
    pub d: u32,
    /// Indexed like [`multi_indices`]`(k)`.
    pub restricted: Vec<BinaryForm>,
    pub reduced: bool,
}

impl SyzygyVector {
    pub fn new(k: u32, restricted: Vec<BinaryForm>) -> Result<Self> {
        let n = multi_indices(k).len();
        if restricted.len() != n {
            return Err(Error::DegreeMismatch(format!(
                "expected {n} components for k = {k}, got {}",
                restricted.len()
            )));
        }
        let d = restricted[0].degree();
        if restricted.iter().any(|g| g.degree() != d) {
            return Err(Error::DegreeMismatch(
                "syzygy components have different degrees".into(),
            ));
        }
        let reduced = component_gcd(&restricted).map_or(false, |g| g.degree() == 0);
        Ok(SyzygyVector {
            k,
            d,
            restricted,
            reduced,
        })
    }

    pub fn component(&self, idx: &MultiIndex) -> &BinaryForm {
        &self.restricted[multi_index_position(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.restricted.iter().all(BinaryForm::is_zero)
    }

    /// Divide out the common factor of the components. Returns the reduced
    /// syzygy and the degree removed.
    pub fn reduce(&self) -> Result<(SyzygyVector, u32)> {
        let g = component_gcd(&self.restricted).ok_or(Error::ZeroForm)?;
        if g.degree() == 0 {
            return Ok((self.clone(), 0));
        }
        let parts = self
            .restricted
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(BinaryForm::zero(self.d - g.degree()))
                } else {
                    c.div_exact(&g)
                        .ok_or_else(|| Error::Inconsistency("gcd does not divide".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((SyzygyVector::new(self.k, parts)?, g.degree()))
    }
}

/// gcd of the nonzero components; `None` if all vanish.
fn component_gcd(parts: &[BinaryForm]) -> Option<BinaryForm> {
    let mut acc: Option<BinaryForm> = None;
    for p in parts.iter().filter(|p| !p.is_zero()) {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => g.gcd(p).expect("nonzero"),
        });
        if acc.as_ref().map_or(false, |g| g.degree() == 0) {
            break;
        }
    }
    acc
}

/// The gradient of `f` restricted to `L`, the restriction of `f`, and the
/// monomials `w^I`.
pub struct RestrictedGradient {
    pub w: [BinaryForm; 3],
    pub f: BinaryForm,
    /// `X(l, m) = l p0 + m p1`.
    pub point: [BinaryForm; 3],
    powers: Vec<Vec<BinaryForm>>,
}

impl RestrictedGradient {
    pub fn new(arr: &Arrangement, line: &GenericLine) -> Result<Self> {
        let (p0, p1) = line.span();
        let jac = arr.jacobian();
        let w = [
            jac[0].restrict_to_line(p0, p1)?,
            jac[1].restrict_to_line(p0, p1)?,
            jac[2].restrict_to_line(p0, p1)?,
        ];
        Ok(RestrictedGradient {
            w,
            f: arr.f().restrict_to_line(p0, p1)?,
            point: moving_point(line),
            powers: vec![vec![BinaryForm::constant(CycloScalar::one(1))]; 3],
        })
    }

    fn power(&mut self, m: usize, e: u32) -> BinaryForm {
        while self.powers[m].len() <= e as usize {
            let next = self.powers[m].last().expect("nonempty").mul(&self.w[m]);
            self.powers[m].push(next);
        }
        self.powers[m][e as usize].clone()
    }

    /// `w^I` for every `|I| = k`, in canonical order.
    pub fn monomials(&mut self, k: u32) -> Vec<BinaryForm> {
        multi_indices(k)
            .iter()
            .map(|i| self.power(0, i[0]).mul(&self.power(1, i[1])).mul(&self.power(2, i[2])))
            .collect()
    }

    /// `sum_I g_I w^I`.
    pub fn apply(&mut self, s: &SyzygyVector) -> BinaryForm {
        let wk = self.monomials(s.k);
        s.restricted
            .iter()
            .zip(&wk)
            .fold(BinaryForm::zero(s.d + wk[0].degree()), |acc, (g, w)| acc.add(&g.mul(w)))
    }

    /// Coefficient system of `sum_I g_I w^I = h f` in the unknowns `g_I`
    /// (slot-major) followed, if `modulo_f`, by the coefficients of `h`.
    fn system(&mut self, k: u32, d: u32, modulo_f: bool) -> ExactMatrix {
        let wk = self.monomials(k);
        let top = wk[0].degree() as usize + d as usize;
        let h_len = if modulo_f {
            (top + 1).saturating_sub(self.f.degree() as usize)
        } else {
            0
        };
        let g_cols = wk.len() * (d as usize + 1);
        let mut m = ExactMatrix::zeros(top + 1, g_cols + h_len);
        for (ii, w) in wk.iter().enumerate() {
            for i in 0..=d as usize {
                let col = ii * (d as usize + 1) + i;
                for (r, c) in w.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        m.set(r + i, col, c.clone());
                    }
                }
            }
        }
        for j in 0..h_len {
            for (r, c) in self.f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m.set(r + j, g_cols + j, -c);
                }
            }
        }
        m
    }

    /// Tuples `X * t` spanning the restricted `E_{I'}`-multiples of degree `d`.
    fn euler_part(&self, k: u32, d: u32) -> Vec<Vec<CycloScalar>> {
        if d == 0 {
            return Vec::new();
        }
        let width = d as usize + 1;
        let n = multi_indices(k).len();
        let mut out = Vec::new();
        for j in multi_indices(k - 1) {
            for i in 0..d {
                let mono = BinaryForm::monomial(d - 1, i);
                let mut v = vec![CycloScalar::zero(1); n * width];
                for m in 0..3 {
                    let mut up = j;
                    up[m] += 1;
                    let slot = multi_index_position(&up);
                    for (c, val) in self.point[m].mul(&mono).coeffs().iter().enumerate() {
                        v[slot * width + c] = val.clone();
                    }
                }
                out.push(v);
            }
        }
        out
    }
}

/// Dimension of the degree-`d` tuples with `sum_I g_I w^I = 0` exactly on `L`.
pub fn exact_syzygy_dimension(grad: &mut RestrictedGradient, k: u32, d: u32) -> usize {
    let m = grad.system(k, d, false);
    m.cols() - m.rank()
}

/// Dimension of the degree-`d` tuples with `sum_I g_I w^I` divisible by
/// `f|_L`, modulo the `E_{I'}`-multiples `X * t` (which have dimension
/// `C(k+1, 2) d`, multiplication by `X` being injective).
pub fn syzygy_class_dimension(grad: &mut RestrictedGradient, k: u32, d: u32) -> usize {
    let m = grad.system(k, d, true);
    let all = m.cols() - m.rank();
    all - multi_indices(k - 1).len() * d as usize
}

fn to_syzygy(k: u32, d: u32, v: &[CycloScalar]) -> Result<SyzygyVector> {
    let width = d as usize + 1;
    let parts = v[..multi_indices(k).len() * width]
        .chunks(width)
        .map(|c| BinaryForm::from_coeffs(c.to_vec()))
        .collect();
    SyzygyVector::new(k, parts)
}

/// A deterministic basis of the degree-`d` restricted syzygies of `J^k` on
/// `L` modulo `f`, taken modulo the `E_{I'}`-multiples (which give the zero
/// curve). Exact syzygies (`sum_I g_I w^I = 0`) come first, in reduced
/// echelon order; the remaining classes are completed from the reduced
/// echelon basis of the full solution space.
pub fn restricted_syzygies(
    arr: &Arrangement,
    line: &GenericLine,
    k: u32,
    d: u32,
) -> Result<Vec<SyzygyVector>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let mut grad = RestrictedGradient::new(arr, line)?;
    let g_cols = multi_indices(k).len() * (d as usize + 1);
    let exact = grad.system(k, d, false).kernel_basis();
    let full = grad.system(k, d, true).kernel_basis();
    let mut span = IncrementalBasis::new();
    for e in grad.euler_part(k, d) {
        span.insert(&e);
    }
    let mut out = Vec::new();
    for v in exact.iter().chain(full.iter()) {
        if span.insert(&v[..g_cols]) {
            out.push(to_syzygy(k, d, v)?);
        }
    }
    Ok(out)
}

/// `(g_I)` as ternary forms of equal degree; returns the degree.
fn common_degree(candidate: &[TernaryForm]) -> Result<u32> {
    let nonzero: Vec<&TernaryForm> = candidate.iter().filter(|c| !c.is_zero()).collect();
    match nonzero.first() {
        None => Ok(0),
        Some(first) => {
            if nonzero.iter().any(|c| c.degree() != first.degree()) {
                Err(Error::DegreeMismatch(
                    "candidate components have different degrees".into(),
                ))
            } else {
                Ok(first.degree())
            }
        }
    }
}

/// `sum_I candidate[I] (grad f)^I`.
pub fn apply_to_gradient(arr: &Arrangement, k: u32, candidate: &[TernaryForm]) -> Result<TernaryForm> {
    let idx = multi_indices(k);
    if candidate.len() != idx.len() {
        return Err(Error::DegreeMismatch(format!(
            "expected {} components for k = {k}, got {}",
            idx.len(),
            candidate.len()
        )));
    }
    let deg = common_degree(candidate)?;
    let jac = arr.jacobian();
    let terms: Vec<TernaryForm> = idx
        .par_iter()
        .zip(candidate.par_iter())
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| {
            g.mul(&jac[0].pow(i[0]))
                .mul(&jac[1].pow(i[1]))
                .mul(&jac[2].pow(i[2]))
        })
        .collect();
    let e = (arr.f().degree() - 1) * k + deg;
    terms
        .iter()
        .try_fold(TernaryForm::zero(e), |acc, t| acc.add(t))
}

/// Whether `candidate` is a syzygy of `J^k + (L)`: with
/// `R = sum_I candidate[I] (grad f)^I`, returns `(true, Some(g))` with
/// `g = -R / L` if `L` divides `R`.
pub fn verify_global_syzygy(
    arr: &Arrangement,
    line: &GenericLine,
    k: u32,
    candidate: &[TernaryForm],
) -> Result<(bool, Option<TernaryForm>)> {
    let r = apply_to_gradient(arr, k, candidate)?;
    if r.is_zero() {
        return Ok((true, Some(TernaryForm::zero(r.degree().saturating_sub(1)))));
    }
    match r.div_exact(&line.form()) {
        Some(q) => Ok((true, Some(q.neg()))),
        None => Ok((false, None)),
    }
}

/// Whether `f` divides `sum_I candidate[I] (grad f)^I`, i.e. `candidate` is a
/// syzygy of `J^k` modulo `f`.
pub fn is_syzygy_mod_f(arr: &Arrangement, k: u32, candidate: &[TernaryForm]) -> Result<bool> {
    let r = apply_to_gradient(arr, k, candidate)?;
    Ok(r.is_zero() || r.div_exact(arr.f()).is_some())
}

/// Restrict ternary components to `L`.
pub fn restrict_candidate(
    line: &GenericLine,
    k: u32,
    candidate: &[TernaryForm],
) -> Result<SyzygyVector> {
    let (p0, p1) = line.span();
    let deg = common_degree(candidate)?;
    let parts = candidate
        .iter()
        .map(|c| {
            if c.is_zero() {
                Ok(BinaryForm::zero(deg))
            } else {
                c.restrict_to_line(p0, p1)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SyzygyVector::new(k, parts)
}

/// Whether `sum_I g_I w^I = 0` exactly on `L`.
pub fn is_restricted_syzygy(
    arr: &Arrangement,
    line: &GenericLine,
    s: &SyzygyVector,
) -> Result<bool> {
    Ok(RestrictedGradient::new(arr, line)?.apply(s).is_zero())
}

/// Whether `f|_L` divides `sum_I g_I w^I`.
pub fn is_restricted_syzygy_mod_f(
    arr: &Arrangement,
    line: &GenericLine,
    s: &SyzygyVector,
) -> Result<bool> {
    let mut grad = RestrictedGradient::new(arr, line)?;
    let r = grad.apply(s);
    Ok(r.is_zero() || r.div_exact(&grad.f).is_some())
}

/// Ternary lifts of the components through the chart forms of `L`, with the
/// cofactor `g` such that `sum_I G_I (grad f)^I + g L = 0`.
pub fn lift_to_global(
    arr: &Arrangement,
    line: &GenericLine,
    s: &SyzygyVector,
) -> Result<(Vec<TernaryForm>, TernaryForm)> {
    let (l, m) = line.chart();
    let lifts: Vec<TernaryForm> = s.restricted.iter().map(|g| g.compose(l, m)).collect();
    match verify_global_syzygy(arr, line, s.k, &lifts)? {
        (true, Some(g)) => Ok((lifts, g)),
        _ => Err(Error::Inconsistency(
            "lift of a restricted syzygy is not divisible by L".into(),
        )),
    }
}

/// The coordinates `X(l, m) = l p0 + m p1` of the moving point of `L`.
fn moving_point(line: &GenericLine) -> [BinaryForm; 3] {
    let (p0, p1) = line.span();
    [0, 1, 2].map(|i| {
        BinaryForm::from_coeffs(vec![p1.coords()[i].clone(), p0.coords()[i].clone()])
    })
}

/// `multinomial(I) X^I`, the coefficients of `(X . (x,y,z))^k`.
fn veronese(line: &GenericLine, k: u32) -> Vec<BinaryForm> {
    let x = moving_point(line);
    multi_indices(k)
        .iter()
        .map(|i| {
            x[0].pow(i[0])
                .mul(&x[1].pow(i[1]))
                .mul(&x[2].pow(i[2]))
                .scale(&CycloScalar::from_int(1, multinomial(i) as i64))
        })
        .collect()
}

/// A parameter `(l : m)` on `L`, the point of the arrangement it lies on,
/// and the multiplicity of the root in the gcd of minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonDetermined {
    pub parameter: [CycloScalar; 2],
    /// Index into the configuration of the point whose dual line meets `L` here.
    pub point_index: usize,
    pub multiplicity: u32,
}

/// Parameters on `L` where the evaluated syzygy is proportional to the
/// coefficient tuple of `(a x + b y + c z)^k`, found as the roots of the gcd
/// of the 2x2 minors. Every root must be the intersection of `L` with a line
/// of the arrangement; otherwise certification fails.
pub fn non_determined_points(
    s: &SyzygyVector,
    arr: &Arrangement,
    line: &GenericLine,
) -> Result<Vec<NonDetermined>> {
    let v = veronese(line, s.k);
    let g = &s.restricted;
    let n = g.len();
    let mut h: Option<BinaryForm> = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            let minor = g[a].mul(&v[b]).sub(&g[b].mul(&v[a]));
            if minor.is_zero() {
                continue;
            }
            h = Some(match h {
                None => minor.monic(),
                Some(prev) => prev.gcd(&minor)?,
            });
            if h.as_ref().map_or(false, |f| f.degree() == 0) {
                break 'outer;
            }
        }
    }
    let Some(mut h) = h else {
        return Err(Error::CertificationFailure(
            "syzygy is proportional to the Veronese tuple everywhere on L".into(),
        ));
    };
    let mut out = Vec::new();
    for (idx, z) in arr.points().iter().enumerate() {
        if h.degree() == 0 {
            break;
        }
        let [lz, mz] = line.parameter_of(z);
        // linear factor vanishing at (lz : mz): mz * l - lz * m
        let factor = BinaryForm::from_coeffs(vec![-&lz, mz.clone()]);
        let mut mult = 0;
        while h.degree() > 0 && h.evaluate(&lz, &mz).is_zero() {
            h = h
                .div_exact(&factor)
                .ok_or_else(|| Error::Inconsistency("root without linear factor".into()))?;
            mult += 1;
        }
        if mult > 0 {
            let q = line.point_at(&[lz.clone(), mz.clone()])?;
            if !arr.f().evaluate(&q).is_zero() {
                return Err(Error::CertificationFailure(format!(
                    "non-determined point {q} is not on the arrangement"
                )));
            }
            out.push(NonDetermined {
                parameter: [lz, mz],
                point_index: idx,
                multiplicity: mult,
            });
        }
    }
    if h.degree() > 0 {
        return Err(Error::CertificationFailure(format!(
            "gcd of minors has a factor {h} off the arrangement"
        )));
    }
    Ok(out)
}

/// The tuple `E_{I'}` with the `m`-th variable in slot `I' + e_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerGenerator {
    pub k: u32,
    pub index: MultiIndex,
    pub components: Vec<TernaryForm>,
}

/// All `C(k+1, 2)` generators `E_{I'}`, `|I'| = k - 1`, in canonical order.
pub fn e_generators(k: u32) -> Result<Vec<DerGenerator>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let n = multi_indices(k).len();
    Ok(multi_indices(k - 1)
        .into_iter()
        .map(|idx| {
            let mut components = vec![TernaryForm::zero(1); n];
            for m in 0..3 {
                let mut up = idx;
                up[m] += 1;
                components[multi_index_position(&up)] = TernaryForm::var(m);
            }
            DerGenerator {
                k,
                index: idx,
                components,
            }
        })
        .collect())
}

/// `sum_I E[I] (grad f)^I = deg(f) f (grad f)^{I'}`.
pub fn phi_e_identity(arr: &Arrangement, gen: &DerGenerator) -> Result<bool> {
    let lhs = apply_to_gradient(arr, gen.k, &gen.components)?;
    let jac = arr.jacobian();
    let i = gen.index;
    let rhs = arr
        .f()
        .mul(&jac[0].pow(i[0]))
        .mul(&jac[1].pow(i[1]))
        .mul(&jac[2].pow(i[2]))
        .scale(&CycloScalar::from_int(1, arr.f().degree() as i64));
    Ok(lhs == rhs)
}

/// A deterministic basis of the degree-`d` tuples `(g_I)` of ternary forms
/// with `f | sum_I g_I (grad f)^I`, modulo the span of the `E_{I'}`-multiples.
/// Each representative has zero coordinates at the pivots of the
/// `E`-part and the set is in reduced echelon form, columns ordered
/// slot-major with monomials in [`multi_indices`] order.
pub fn global_syzygies(arr: &Arrangement, k: u32, d: u32) -> Result<Vec<Vec<TernaryForm>>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let slots = multi_indices(k);
    let monos = multi_indices(d);
    let jac = arr.jacobian();
    let powers: Vec<TernaryForm> = slots
        .par_iter()
        .map(|i| jac[0].pow(i[0]).mul(&jac[1].pow(i[1])).mul(&jac[2].pow(i[2])))
        .collect();
    let top = d + k * (arr.f().degree() - 1);
    let rows = multi_indices(top).len();
    let h_monos = if top >= arr.f().degree() {
        multi_indices(top - arr.f().degree())
    } else {
        Vec::new()
    };
    let g_cols = slots.len() * monos.len();
    let mut columns: Vec<(MultiIndex, &TernaryForm, CycloScalar)> = Vec::new();
    for p in &powers {
        for m in &monos {
            columns.push((*m, p, CycloScalar::one(1)));
        }
    }
    for m in &h_monos {
        columns.push((*m, arr.f(), -CycloScalar::one(1)));
    }
    let cols: Vec<Vec<(usize, CycloScalar)>> = columns
        .par_iter()
        .map(|(m, form, sign)| {
            form.poly()
                .terms()
                .iter()
                .map(|(e, c)| {
                    let idx = [e[0] + m[0], e[1] + m[1], e[2] + m[2]];
                    (multi_index_position(&idx), c * sign)
                })
                .collect()
        })
        .collect();
    let mut mat = ExactMatrix::zeros(rows, cols.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (r, c) in col {
            mat.set(r, j, c);
        }
    }
    let mut euler = IncrementalBasis::new();
    if d >= 1 {
        for gen in e_generators(k)? {
            for m in multi_indices(d - 1) {
                let shift = TernaryForm::var(0)
                    .pow(m[0])
                    .mul(&TernaryForm::var(1).pow(m[1]))
                    .mul(&TernaryForm::var(2).pow(m[2]));
                let tuple: Vec<TernaryForm> = gen.components.iter().map(|c| c.mul(&shift)).collect();
                euler.insert(&flatten(&tuple, &monos));
            }
        }
    }
    let mut classes = IncrementalBasis::new();
    for v in mat.kernel_basis() {
        classes.insert(&euler.reduce(&v[..g_cols]));
    }
    Ok(classes
        .echelon_rows()
        .iter()
        .map(|v| {
            v.chunks(monos.len())
                .map(|c| {
                    TernaryForm::from_poly(crate::poly::Poly::from_terms(
                        monos.iter().zip(c).map(|(m, x)| (*m, x.clone())),
                    ))
                    .map(|t| if t.is_zero() { TernaryForm::zero(d) } else { t })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?)
}

fn flatten(tuple: &[TernaryForm], monos: &[MultiIndex]) -> Vec<CycloScalar> {
    tuple
        .iter()
        .flat_map(|t| {
            monos
                .iter()
                .map(|m| t.coeff(m).cloned().unwrap_or_else(|| CycloScalar::zero(1)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{b3, make_generic_line};
    use crate::forms::ProjPoint;

    fn b3_arr() -> Arrangement {
        Arrangement::new(b3()).unwrap()
    }

    #[test]
    fn b3_k1_d3_is_one_dimensional() {
        let arr = b3_arr();
        let line = make_generic_line(arr.config(), 11, 20).unwrap();
        let basis = restricted_syzygies(&arr, &line, 1, 3).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].reduced);
        assert!(restricted_syzygies(&arr, &line, 1, 2).unwrap().is_empty());
        assert!(is_restricted_syzygy(&arr, &line, &basis[0]).unwrap());
    }

    #[test]
    fn b3_k2_d2_has_three_generators() {
        let arr = b3_arr();
        let line = GenericLine::for_config(arr.config(), ProjPoint::from_ints(-12, 10, 7).unwrap()).unwrap();
        let basis = restricted_syzygies(&arr, &line, 2, 2).unwrap();
        assert_eq!(basis.len(), 3);
        for s in &basis {
            assert!(is_restricted_syzygy_mod_f(&arr, &line, s).unwrap());
        }
    }

    #[test]
    fn zero_tuple_is_global_syzygy() {
        let arr = b3_arr();
        let line = make_generic_line(arr.config(), 1, 20).unwrap();
        let zero = vec![TernaryForm::zero(2); 3];
        let (ok, g) = verify_global_syzygy(&arr, &line, 1, &zero).unwrap();
        assert!(ok && g.unwrap().is_zero());
    }

    #[test]
    fn e_generators_match_euler_example() {
        let gens = e_generators(2).unwrap();
        assert_eq!(gens.len(), 3);
        let x = TernaryForm::var(0);
        let y = TernaryForm::var(1);
        let z = TernaryForm::var(2);
        let zero = TernaryForm::zero(1);
        assert_eq!(gens[0].components, vec![x.clone(), y.clone(), z.clone(), zero.clone(), zero.clone(), zero.clone()]);
        assert_eq!(gens[1].components, vec![zero.clone(), x.clone(), zero.clone(), y.clone(), z.clone(), zero.clone()]);
        assert_eq!(gens[2].components, vec![zero.clone(), zero.clone(), x, zero, y, z]);
        let euler = e_generators(1).unwrap();
        assert_eq!(euler.len(), 1);
        assert_eq!(euler[0].components, vec![TernaryForm::var(0), TernaryForm::var(1), TernaryForm::var(2)]);
    }

    #[test]
    fn phi_identity_on_b3() {
        let arr = b3_arr();
        for k in 1..=3 {
            for g in e_generators(k).unwrap() {
                assert!(phi_e_identity(&arr, &g).unwrap());
            }
        }
    }
}
