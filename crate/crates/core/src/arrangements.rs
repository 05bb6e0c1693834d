//! Point configurations in the dual plane, their line arrangements, and
//! generic lines.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{cross, dot, ProjPoint, TernaryForm};
use crate::scalar::CycloScalar;

/// A finite set of distinct points with coordinates in `Q(zeta_order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    order: u32,
    points: Vec<ProjPoint>,
}

/// On-disk form of a configuration: `{"order": n, "points": [["1","e","e^2"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointsFile {
    pub order: u32,
    pub points: Vec<[String; 3]>,
}

impl PointConfig {
    pub fn new(order: u32, points: Vec<ProjPoint>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("order must be positive".into()));
        }
        for i in 0..points.len() {
            if points[..i].iter().any(|q| q.is_same(&points[i])) {
                return Err(Error::DuplicatePoint(i));
            }
        }
        Ok(PointConfig { order, points })
    }

    pub fn from_file(file: &PointsFile) -> Result<Self> {
        let points = file
            .points
            .iter()
            .map(|[a, b, c]| {
                ProjPoint::new([
                    CycloScalar::parse(a, file.order)?,
                    CycloScalar::parse(b, file.order)?,
                    CycloScalar::parse(c, file.order)?,
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.order, points)
    }

    pub fn to_file(&self) -> PointsFile {
        PointsFile {
            order: self.order,
            points: self
                .points
                .iter()
                .map(|p| p.coords().clone().map(|c| c.to_string()))
                .collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The nine points dual to the lines of the B3 arrangement.
pub fn b3() -> PointConfig {
    let pts = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (1, -1, 0),
        (1, 0, 1),
        (1, 0, -1),
        (0, 1, 1),
        (0, 1, -1),
    ];
    let points = pts
        .iter()
        .map(|&(a, b, c)| ProjPoint::from_ints(a, b, c).expect("nonzero"))
        .collect();
    PointConfig::new(1, points).expect("distinct")
}

/// The `n^2 + 3` points dual to the factors of
/// `xyz * prod_{i,j} (x + e^i y + e^j z)`, `e` a primitive `n`-th root of unity.
pub fn fermat_dual(n: u32) -> Result<PointConfig> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "fermat_dual needs n >= 3, got {n}"
        )));
    }
    let mut points = vec![
        ProjPoint::from_ints(1, 0, 0)?,
        ProjPoint::from_ints(0, 1, 0)?,
        ProjPoint::from_ints(0, 0, 1)?,
    ];
    for i in 0..n {
        for j in 0..n {
            points.push(ProjPoint::new([
                CycloScalar::one(n),
                CycloScalar::zeta_power(n, i as i64),
                CycloScalar::zeta_power(n, j as i64),
            ])?);
        }
    }
    PointConfig::new(n, points)
}

/// `count` distinct points with small integer coordinates, drawn from `seed`.
pub fn random_config(seed: u64, count: usize, bound: i64) -> PointConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<ProjPoint> = Vec::with_capacity(count);
    while points.len() < count {
        let c = [0; 3].map(|_| rng.gen_range(-bound..=bound));
        let Ok(p) = ProjPoint::from_ints(c[0], c[1], c[2]) else {
            continue;
        };
        if !points.iter().any(|q| q.is_same(&p)) {
            points.push(p);
        }
    }
    PointConfig::new(1, points).expect("distinct by construction")
}

/// The dual line arrangement of a point configuration.
#[derive(Clone, Debug)]
pub struct Arrangement {
    config: PointConfig,
    linear_forms: Vec<TernaryForm>,
    f: TernaryForm,
    jacobian: [TernaryForm; 3],
}

impl Arrangement {
    pub fn new(config: PointConfig) -> Result<Self> {
        let linear_forms: Vec<TernaryForm> =
            config.points().iter().map(ProjPoint::dual_form).collect();
        let f = linear_forms
            .iter()
            .fold(TernaryForm::constant(CycloScalar::one(1)), |acc, l| {
                acc.mul(l)
            });
        let jacobian = [0, 1, 2].map(|v| f.differentiate(v));
        let arr = Arrangement {
            config,
            linear_forms,
            f,
            jacobian,
        };
        if !arr.euler_identity_holds() {
            return Err(Error::Inconsistency(
                "Euler identity fails for the defining polynomial".into(),
            ));
        }
        Ok(arr)
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn order(&self) -> u32 {
        self.config.order()
    }

    pub fn points(&self) -> &[ProjPoint] {
        self.config.points()
    }

    pub fn linear_forms(&self) -> &[TernaryForm] {
        &self.linear_forms
    }

    pub fn f(&self) -> &TernaryForm {
        &self.f
    }

    pub fn jacobian(&self) -> &[TernaryForm; 3] {
        &self.jacobian
    }

    /// `x f_x + y f_y + z f_z = deg(f) f`.
    pub fn euler_identity_holds(&self) -> bool {
        let mut lhs = TernaryForm::zero(self.f.degree());
        for (v, fv) in self.jacobian.iter().enumerate() {
            lhs = lhs.add(&TernaryForm::var(v).mul(fv)).expect("same degree");
        }
        let n = CycloScalar::from_int(1, self.f.degree() as i64);
        lhs == self.f.scale(&n)
    }
}

/// A line `L: alpha x + beta y + gamma z = 0` avoiding the special positions
/// of an arrangement, with a parametrization and the cross-product
/// coordinates `P x X = lambda(X) p0 + mu(X) p1`.
#[derive(Clone, Debug)]
pub struct GenericLine {
    dual_point: ProjPoint,
    p0: ProjPoint,
    p1: ProjPoint,
    lambda: TernaryForm,
    mu: TernaryForm,
    chart: [TernaryForm; 2],
}

impl GenericLine {
    /// The line with dual point `p`, with no genericity requirement beyond
    /// nonzero coordinates.
    pub fn from_dual_point(p: ProjPoint) -> Result<Self> {
        let [a, b, c] = p.coords().clone();
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::NonGenericLine(format!(
                "dual point {p} has a zero coordinate"
            )));
        }
        let zero = CycloScalar::zero(1);
        let p0 = ProjPoint::new([b.clone(), -&a, zero.clone()])?;
        let p1 = ProjPoint::new([zero, c.clone(), -&b])?;
        let (u, v) = (p0.coords(), p1.coords());
        // P x X, as three linear forms in X
        let basis = [0, 1, 2].map(|i| {
            let mut e = [0, 1, 2].map(|_| CycloScalar::zero(1));
            e[i] = CycloScalar::one(1);
            e
        });
        let col = basis.clone().map(|e| cross(p.coords(), &e));
        let comp = |r: usize| TernaryForm::linear(&[0, 1, 2].map(|i| col[i][r].clone()));
        // solve on two coordinates with an invertible 2x2 minor
        let (r, s) = [(0, 2), (0, 1), (1, 2)]
            .into_iter()
            .find(|&(r, s)| !(&(&u[r] * &v[s]) - &(&u[s] * &v[r])).is_zero())
            .expect("distinct span points");
        let det = &(&u[r] * &v[s]) - &(&u[s] * &v[r]);
        let dinv = det.inv()?;
        let (cr, cs) = (comp(r), comp(s));
        let lambda = cr
            .scale(&v[s])
            .sub(&cs.scale(&v[r]))?
            .scale(&dinv);
        let mu = cs
            .scale(&u[r])
            .sub(&cr.scale(&u[s]))?
            .scale(&dinv);
        // chart forms dual to (p0, p1), both vanishing at e_0 (off L as alpha != 0)
        let e0 = &basis[0];
        let l0 = cross(v, e0);
        let l1 = cross(u, e0);
        let chart = [
            TernaryForm::linear(&l0).scale(&dot(&l0, u).inv()?),
            TernaryForm::linear(&l1).scale(&dot(&l1, v).inv()?),
        ];
        let line = GenericLine {
            dual_point: p,
            p0,
            p1,
            lambda,
            mu,
            chart,
        };
        line.check_identities()?;
        Ok(line)
    }

    /// Like [`from_dual_point`](Self::from_dual_point), additionally rejecting
    /// lines through a vertex of the arrangement (the point dual to the line
    /// through two points of `config`).
    pub fn for_config(config: &PointConfig, p: ProjPoint) -> Result<Self> {
        if let Some((i, j)) = vertex_on_line(config, &p) {
            return Err(Error::NonGenericLine(format!(
                "line {p} passes through the vertex dual to points {i} and {j}"
            )));
        }
        Self::from_dual_point(p)
    }

    pub fn dual_point(&self) -> &ProjPoint {
        &self.dual_point
    }

    pub fn span(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.p0, &self.p1)
    }

    /// `(lambda, mu)` with `P x X = lambda(X) p0 + mu(X) p1`.
    pub fn lambda_mu(&self) -> (&TernaryForm, &TernaryForm) {
        (&self.lambda, &self.mu)
    }

    /// Linear forms `(l', m')` with `l'(p0) = m'(p1) = 1`, `l'(p1) = m'(p0) = 0`.
    /// Composing a binary form with them lifts it to a ternary form whose
    /// restriction to `L` is the original.
    pub fn chart(&self) -> (&TernaryForm, &TernaryForm) {
        (&self.chart[0], &self.chart[1])
    }

    /// The linear form defining `L`.
    pub fn form(&self) -> TernaryForm {
        self.dual_point.dual_form()
    }

    /// Line parameters `(l, m)` of the intersection of `L` with the line dual to `z`.
    pub fn parameter_of(&self, z: &ProjPoint) -> [CycloScalar; 2] {
        [self.lambda.evaluate(z), self.mu.evaluate(z)]
    }

    /// The point `l p0 + m p1`.
    pub fn point_at(&self, param: &[CycloScalar; 2]) -> Result<ProjPoint> {
        let (u, v) = (self.p0.coords(), self.p1.coords());
        ProjPoint::new([0, 1, 2].map(|i| &(&param[0] * &u[i]) + &(&param[1] * &v[i])))
    }

    fn check_identities(&self) -> Result<()> {
        let p = self.dual_point.coords();
        let on_line = dot(p, self.p0.coords()).is_zero() && dot(p, self.p1.coords()).is_zero();
        let vanish = self.lambda.evaluate(&self.dual_point).is_zero()
            && self.mu.evaluate(&self.dual_point).is_zero();
        // P x X - lambda p0 - mu p1 must vanish identically; check coefficientwise
        let identity = (0..3).all(|i| {
            let mut e = [0, 1, 2].map(|_| CycloScalar::zero(1));
            e[i] = CycloScalar::one(1);
            let c = cross(p, &e);
            let l = self.lambda.evaluate_at(&e);
            let m = self.mu.evaluate_at(&e);
            (0..3).all(|r| {
                (&c[r] - &(&(&l * &self.p0.coords()[r]) + &(&m * &self.p1.coords()[r])))
                    .is_zero()
            })
        });
        if on_line && vanish && identity {
            Ok(())
        } else {
            Err(Error::Inconsistency(
                "generic line parametrization identities fail".into(),
            ))
        }
    }
}

/// A random rational in `[-bound, bound] / [1, bound]`.
pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> CycloScalar {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    CycloScalar::from_ratio(1, num, den)
}

/// A line drawn at random from `seed` and accepted by the genericity filter.
pub fn make_generic_line(config: &PointConfig, seed: u64, bound: i64) -> Result<GenericLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_generic_line(config, &mut rng, bound)
}

/// Indices of two points of `config` whose joining line contains `p`, if any.
pub fn vertex_on_line(config: &PointConfig, p: &ProjPoint) -> Option<(usize, usize)> {
    let pts = config.points();
    (0..pts.len())
        .flat_map(|i| (i + 1..pts.len()).map(move |j| (i, j)))
        .find(|&(i, j)| dot(p.coords(), &cross(pts[i].coords(), pts[j].coords())).is_zero())
}

/// A point with nonzero coordinates off every line joining two points of `config`.
pub fn random_generic_point(
    config: &PointConfig,
    rng: &mut ChaCha8Rng,
    bound: i64,
) -> Result<ProjPoint> {
    const ATTEMPTS: usize = 1000;
    if bound < 2 {
        return Err(Error::InvalidInput("sampling bound must be at least 2".into()));
    }
    for _ in 0..ATTEMPTS {
        let c = [0; 3].map(|_| random_rational(rng, bound));
        if c.iter().any(CycloScalar::is_zero) {
            continue;
        }
        let p = ProjPoint::new(c)?;
        if vertex_on_line(config, &p).is_none() {
            return Ok(p);
        }
    }
    Err(Error::GenericLineExhausted(ATTEMPTS))
}

pub(crate) fn random_generic_line(
    config: &PointConfig,
    rng: &mut ChaCha8Rng,
    bound: i64,
) -> Result<GenericLine> {
    GenericLine::for_config(config, random_generic_point(config, rng, bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_triangle_gives_xyz() {
        let z = PointConfig::new(
            1,
            vec![
                ProjPoint::from_ints(1, 0, 0).unwrap(),
                ProjPoint::from_ints(0, 1, 0).unwrap(),
                ProjPoint::from_ints(0, 0, 1).unwrap(),
            ],
        )
        .unwrap();
        let a = Arrangement::new(z).unwrap();
        assert!(a.f().equal_up_to_scalar(&TernaryForm::parse("x*y*z", 1).unwrap()));
    }

    #[test]
    fn b3_defining_polynomial() {
        let a = Arrangement::new(b3()).unwrap();
        let expected =
            TernaryForm::parse("x*y*z*(x^2-y^2)*(x^2-z^2)*(y^2-z^2)", 1).unwrap();
        assert!(a.f().equal_up_to_scalar(&expected));
        assert_eq!(a.f().degree(), 9);
    }

    #[test]
    fn fermat_dual_sizes() {
        let z3 = fermat_dual(3).unwrap();
        assert_eq!(z3.len(), 12);
        assert_eq!(z3.order(), 3);
        assert_eq!(Arrangement::new(z3).unwrap().f().degree(), 12);
        assert_eq!(fermat_dual(5).unwrap().len(), 28);
        assert!(fermat_dual(2).is_err());
    }

    #[test]
    fn duplicate_points_rejected() {
        let p = ProjPoint::from_ints(1, 2, 3).unwrap();
        let q = ProjPoint::from_ints(-2, -4, -6).unwrap();
        assert!(matches!(
            PointConfig::new(1, vec![p, q]),
            Err(Error::DuplicatePoint(1))
        ));
    }

    #[test]
    fn paper_line_is_generic_for_b3() {
        let p = ProjPoint::from_ints(-12, 10, 7).unwrap();
        let line = GenericLine::for_config(&b3(), p.clone()).unwrap();
        let (l, m) = line.lambda_mu();
        assert!(l.evaluate(&p).is_zero() && m.evaluate(&p).is_zero());
    }

    #[test]
    fn line_through_vertex_rejected() {
        // (1,1,1) . ((1,0,0) x (0,1,1)) = (1,1,1).(0,-1,1) = 0
        let p = ProjPoint::from_ints(1, 1, 1).unwrap();
        assert!(matches!(
            GenericLine::for_config(&b3(), p),
            Err(Error::NonGenericLine(_))
        ));
    }

    #[test]
    fn seeded_lines_are_reproducible() {
        let z = b3();
        let a = make_generic_line(&z, 7, 20).unwrap();
        let b = make_generic_line(&z, 7, 20).unwrap();
        assert_eq!(a.dual_point(), b.dual_point());
    }

    #[test]
    fn chart_forms_are_dual_to_span() {
        let line = make_generic_line(&b3(), 3, 20).unwrap();
        let (p0, p1) = line.span();
        let (l, m) = line.chart();
        assert!(l.evaluate(p0).is_one() && l.evaluate(p1).is_zero());
        assert!(m.evaluate(p1).is_one() && m.evaluate(p0).is_zero());
    }

    #[test]
    fn points_file_round_trip() {
        let z = fermat_dual(3).unwrap();
        let back = PointConfig::from_file(&z.to_file()).unwrap();
        assert_eq!(z, back);
    }
}
