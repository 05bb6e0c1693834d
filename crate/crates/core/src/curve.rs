//! Plane curves built from restricted syzygies and a generic line, and
//! verification of their multiplicity profiles.

use rayon::prelude::*;

use crate::arrangements::{Arrangement, GenericLine, PointConfig};
use crate::error::{Error, Result};
use crate::forms::{multi_indices, ProjPoint, TernaryForm};
use crate::linalg::ExactMatrix;
use crate::poly::{BiForm, Poly};
use crate::scalar::CycloScalar;
use crate::syzygy::{non_determined_points, restrict_candidate, NonDetermined, SyzygyVector};

/// A constructed or externally supplied curve with its multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    /// Normalized: content-free with positive leading coefficient over `Q`,
    /// leading coefficient 1 otherwise.
    pub curve: TernaryForm,
    pub degree: u32,
    /// Degree of the common factor removed from the syzygy before construction.
    pub removed_degree: u32,
    pub point: ProjPoint,
    pub mult_at_point: u32,
    /// Multiplicity at each point of the configuration, in order.
    pub multiplicities: Vec<u32>,
    /// Lines through `P` dual to the non-determined parameters.
    pub line_components: Vec<TernaryForm>,
    pub non_determined: Vec<NonDetermined>,
}

impl CurveReport {
    /// Indices of points of `Z` where the curve is singular.
    pub fn singular_points(&self) -> Vec<usize> {
        (0..self.multiplicities.len())
            .filter(|&i| self.multiplicities[i] >= 2)
            .collect()
    }

    pub fn passes_through_all(&self) -> bool {
        self.multiplicities.iter().all(|&m| m >= 1)
    }
}

/// `sum_I g_I(lambda(X), mu(X)) X^I`.
pub fn assemble_curve(s: &SyzygyVector, line: &GenericLine) -> TernaryForm {
    let (lambda, mu) = line.lambda_mu();
    let parts: Vec<TernaryForm> = multi_indices(s.k)
        .par_iter()
        .zip(s.restricted.par_iter())
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| {
            let mono = TernaryForm::var(0)
                .pow(i[0])
                .mul(&TernaryForm::var(1).pow(i[1]))
                .mul(&TernaryForm::var(2).pow(i[2]));
            g.compose(lambda, mu).mul(&mono)
        })
        .collect();
    parts
        .iter()
        .try_fold(TernaryForm::zero(s.d + s.k), |acc, t| acc.add(t))
        .expect("homogeneous of degree d + k")
}

fn multiplicities(curve: &TernaryForm, z: &PointConfig) -> Result<Vec<u32>> {
    z.points()
        .par_iter()
        .map(|p| curve.multiplicity_at(p))
        .collect()
}

/// The curve of a restricted syzygy on `line`, with every report field
/// computed directly. A syzygy with a common factor is reduced first and
/// the removed degree recorded.
pub fn construct_curve(
    arr: &Arrangement,
    line: &GenericLine,
    s: &SyzygyVector,
) -> Result<CurveReport> {
    let (s, removed_degree) = s.reduce()?;
    let raw = assemble_curve(&s, line);
    if raw.is_zero() {
        return Err(Error::ZeroCurve);
    }
    let curve = raw.primitive();
    let p = line.dual_point().clone();
    let mult_at_point = curve.multiplicity_at(&p)?;
    if mult_at_point < s.d {
        return Err(Error::Inconsistency(format!(
            "multiplicity {mult_at_point} at the dual point is below d = {}",
            s.d
        )));
    }
    let multiplicities = multiplicities(&curve, arr.config())?;
    let non_determined = non_determined_points(&s, arr, line)?;
    let line_components = non_determined
        .iter()
        .map(|nd| Ok(line.point_at(&nd.parameter)?.dual_form()))
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveReport {
        degree: curve.degree(),
        curve,
        removed_degree,
        point: p,
        mult_at_point,
        multiplicities,
        line_components,
        non_determined,
    })
}

/// [`construct_curve`] for a tuple of ternary forms, via its restriction to `line`.
pub fn construct_curve_from_global(
    arr: &Arrangement,
    line: &GenericLine,
    k: u32,
    candidate: &[TernaryForm],
) -> Result<CurveReport> {
    let s = restrict_candidate(line, k, candidate)?;
    construct_curve(arr, line, &s)
}

/// Multiplicities of an externally supplied curve at `Z` and at `P`.
pub fn verify_curve(curve: &TernaryForm, z: &PointConfig, p: &ProjPoint) -> Result<CurveReport> {
    if curve.is_zero() {
        return Err(Error::ZeroCurve);
    }
    let curve = curve.primitive();
    Ok(CurveReport {
        degree: curve.degree(),
        removed_degree: 0,
        point: p.clone(),
        mult_at_point: curve.multiplicity_at(p)?,
        multiplicities: multiplicities(&curve, z)?,
        line_components: Vec::new(),
        non_determined: Vec::new(),
        curve,
    })
}

/// Every listed line component divides the curve exactly.
pub fn line_component_check(report: &CurveReport) -> bool {
    report
        .line_components
        .iter()
        .all(|l| report.curve.div_exact(l).is_some())
}

/// Substitute the general point `(a, b, c) := p` into a six-variable form.
pub fn instantiate(form: &BiForm, p: &ProjPoint) -> Result<TernaryForm> {
    let c = p.coords();
    let subs = [
        Poly::<3>::var(0),
        Poly::<3>::var(1),
        Poly::<3>::var(2),
        Poly::<3>::constant(c[0].clone()),
        Poly::<3>::constant(c[1].clone()),
        Poly::<3>::constant(c[2].clone()),
    ];
    TernaryForm::from_poly(form.substitute(&subs))
}

/// Partial derivatives of order `order` of `form` at `p`, in
/// [`multi_indices`] order.
fn partials_at(form: &TernaryForm, order: u32, p: &ProjPoint) -> Vec<CycloScalar> {
    multi_indices(order)
        .iter()
        .map(|m| {
            let mut g = form.clone();
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    g = g.differentiate(v);
                }
            }
            g.evaluate(p)
        })
        .collect()
}

/// Basis of the linear combinations of `curves` (all of one degree) having
/// multiplicity at least `m` at each `(point, m)`, as coefficient vectors.
pub fn combinations_with_multiplicities(
    curves: &[TernaryForm],
    conditions: &[(ProjPoint, u32)],
) -> Vec<Vec<CycloScalar>> {
    let mut rows: Vec<Vec<CycloScalar>> = Vec::new();
    for (p, m) in conditions {
        if *m == 0 {
            continue;
        }
        let cols: Vec<Vec<CycloScalar>> = curves.iter().map(|c| partials_at(c, m - 1, p)).collect();
        for r in 0..cols[0].len() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    if rows.is_empty() {
        return ExactMatrix::identity(curves.len()).kernel_basis();
    }
    ExactMatrix::from_rows(curves.len(), rows).kernel_basis()
}

/// `sum_i coeffs[i] curves[i]`.
pub fn combine(curves: &[TernaryForm], coeffs: &[CycloScalar]) -> TernaryForm {
    curves
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(TernaryForm::zero(curves[0].degree()), |acc, (f, c)| {
            acc.add(&f.scale(c)).expect("same degree")
        })
}

/// For a syzygy tuple given by ternary forms independent of the line, build
/// `C(X; P) = sum_I g_I(P x X) X^I` with `P = (a, b, c)` symbolic and compare,
/// for every derivative multi-index `m` with `|m| <= d`, the `X`-derivative at
/// `X := P` with the `P`-derivative at `P := X` (after renaming), up to one
/// global scalar.
pub fn duality_check(candidate: &[TernaryForm], k: u32, d: u32) -> Result<bool> {
    if k > 2 || d > 9 {
        return Err(Error::CaseTooLarge(format!(
            "duality check is limited to k <= 2 and d <= 9, got k = {k}, d = {d}"
        )));
    }
    let idx = multi_indices(k);
    if candidate.len() != idx.len() {
        return Err(Error::DegreeMismatch(format!(
            "expected {} components, got {}",
            idx.len(),
            candidate.len()
        )));
    }
    let v = |i: usize| BiForm::var(i);
    // Q = P x X with P = (a, b, c) = vars 3..6
    let q = [
        v(4).mul(&v(2)).sub(&v(5).mul(&v(1))),
        v(5).mul(&v(0)).sub(&v(3).mul(&v(2))),
        v(3).mul(&v(1)).sub(&v(4).mul(&v(0))),
    ];
    let mut c = BiForm::zero();
    for (i, g) in idx.iter().zip(candidate) {
        if g.is_zero() {
            continue;
        }
        let gq = g.poly().substitute(&q);
        let mono = v(0).pow(i[0]).mul(&v(1).pow(i[1])).mul(&v(2).pow(i[2]));
        c = c.add(&gq.mul(&mono));
    }
    let swap = [v(3), v(4), v(5), v(0), v(1), v(2)];
    let set_x_to_p = [v(3), v(4), v(5), v(3), v(4), v(5)];
    let mut ratio: Option<(BiForm, BiForm)> = None;
    for order in 0..=d {
        for m in multi_indices(order) {
            let mut dx = c.clone();
            let mut dp = c.clone();
            for (var, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    dx = dx.derivative(var);
                    dp = dp.derivative(var + 3);
                }
            }
            // both sides as polynomials in (a, b, c)
            let lhs = dx.substitute(&set_x_to_p);
            let rhs = dp.substitute(&swap).substitute(&set_x_to_p);
            match (lhs.is_zero(), rhs.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return Ok(false),
                _ => {}
            }
            match &ratio {
                None => ratio = Some((lhs, rhs)),
                Some((l0, r0)) => {
                    // lhs / rhs == l0 / r0
                    if lhs.mul(r0) != rhs.mul(l0) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    if let Some((l0, r0)) = &ratio {
        if !l0.equal_up_to_scalar(r0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::b3;

    fn b3_g() -> Vec<TernaryForm> {
        [
            "4*x^3 - 5*x*y^2 - 5*x*z^2",
            "-5*x^2*y + 4*y^3 - 5*y*z^2",
            "-5*x^2*z - 5*y^2*z + 4*z^3",
        ]
        .iter()
        .map(|t| TernaryForm::parse(t, 1).unwrap())
        .collect()
    }

    #[test]
    fn verify_simple_curve() {
        let z = PointConfig::new(1, vec![ProjPoint::from_ints(1, 0, 0).unwrap()]).unwrap();
        let c = TernaryForm::parse("x*y*z", 1).unwrap();
        let r = verify_curve(&c, &z, &ProjPoint::from_ints(0, 0, 1).unwrap()).unwrap();
        assert_eq!(r.multiplicities, vec![2]);
        assert_eq!(r.mult_at_point, 2);
    }

    #[test]
    fn b3_quartic_from_global_syzygy() {
        let arr = Arrangement::new(b3()).unwrap();
        let p = ProjPoint::from_ints(3, -7, 11).unwrap();
        let line = GenericLine::for_config(arr.config(), p.clone()).unwrap();
        let r = construct_curve_from_global(&arr, &line, 1, &b3_g()).unwrap();
        assert_eq!(r.degree, 4);
        assert!(r.mult_at_point >= 3);
        assert!(r.passes_through_all());
        assert!(line_component_check(&r));
    }

    #[test]
    fn duality_for_b3_k1() {
        assert!(duality_check(&b3_g(), 1, 3).unwrap());
        assert!(duality_check(&b3_g(), 3, 3).is_err());
    }

    #[test]
    fn wrong_line_component_detected() {
        let arr = Arrangement::new(b3()).unwrap();
        let line = GenericLine::for_config(arr.config(), ProjPoint::from_ints(3, -7, 11).unwrap()).unwrap();
        let mut r = construct_curve_from_global(&arr, &line, 1, &b3_g()).unwrap();
        r.line_components.push(TernaryForm::parse("x + 2*y + 5*z", 1).unwrap());
        assert!(!line_component_check(&r));
    }
}
