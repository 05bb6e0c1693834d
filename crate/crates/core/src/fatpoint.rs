//! Dimensions of linear systems of plane curves through a point set with a
//! fat point at a generic point.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arrangements::{random_generic_point, PointConfig};
use crate::error::{Error, Result};
use crate::forms::{binomial, cross, multi_indices, MultiIndex, ProjPoint};
use crate::linalg::ExactMatrix;
use crate::scalar::CycloScalar;

/// Coordinate bound used when sampling generic points.
pub const SAMPLE_BOUND: i64 = 30;

fn power_table(c: &[CycloScalar; 3], t: u32) -> [Vec<CycloScalar>; 3] {
    c.clone().map(|v| {
        let mut out = Vec::with_capacity(t as usize + 1);
        out.push(CycloScalar::one(1));
        for i in 1..=t as usize {
            let next = &out[i - 1] * &v;
            out.push(next);
        }
        out
    })
}

fn evaluation_row(c: &[CycloScalar; 3], monomials: &[MultiIndex], t: u32) -> Vec<CycloScalar> {
    let pw = power_table(c, t);
    monomials
        .iter()
        .map(|e| &(&pw[0][e[0] as usize] * &pw[1][e[1] as usize]) * &pw[2][e[2] as usize])
        .collect()
}

fn evaluation_matrix(points: &[[CycloScalar; 3]], monomials: &[MultiIndex], t: u32) -> ExactMatrix {
    let rows = points
        .par_iter()
        .map(|c| evaluation_row(c, monomials, t))
        .collect();
    ExactMatrix::from_rows(monomials.len(), rows)
}

fn coords(z: &PointConfig) -> Vec<[CycloScalar; 3]> {
    z.points().iter().map(|p| p.coords().clone()).collect()
}

/// `dim [I_Z]_t`.
pub fn ideal_dimension(z: &PointConfig, t: u32) -> usize {
    let monomials = multi_indices(t);
    monomials.len() - evaluation_matrix(&coords(z), &monomials, t).rank()
}

/// Whether `Z` imposes `|Z|` independent conditions on forms of degree `t`.
pub fn imposes_independent(z: &PointConfig, t: u32) -> bool {
    evaluation_matrix(&coords(z), &multi_indices(t), t).rank() == z.len()
}

fn falling(e: u32, m: u32) -> i64 {
    (e - m + 1..=e).map(|v| v as i64).product()
}

/// `dim [I_{Z + jP}]_t`, from the stacked matrix of evaluations at `Z` and
/// all partial derivatives of order `j - 1` at `P`.
pub fn fatpoint_dimension(z: &PointConfig, p: &ProjPoint, j: u32, t: u32) -> usize {
    if j > t + 1 {
        return 0;
    }
    let monomials = multi_indices(t);
    let mut m = evaluation_matrix(&coords(z), &monomials, t);
    if j > 0 {
        let pw = power_table(p.coords(), t);
        for d in multi_indices(j - 1) {
            let row = monomials
                .iter()
                .map(|e| {
                    if (0..3).any(|i| e[i] < d[i]) {
                        return CycloScalar::zero(1);
                    }
                    let c: i64 = (0..3).map(|i| falling(e[i], d[i])).product();
                    let v = &(&pw[0][(e[0] - d[0]) as usize] * &pw[1][(e[1] - d[1]) as usize])
                        * &pw[2][(e[2] - d[2]) as usize];
                    &v * &CycloScalar::from_int(1, c)
                })
                .collect();
            m.push_row(row);
        }
    }
    monomials.len() - m.rank()
}

/// Same value as [`fatpoint_dimension`], computed after a projective change of
/// coordinates moving `P` to `(0,0,1)`: the fat point then only removes the
/// monomials of `z`-degree above `t - j`.
pub fn fatpoint_dimension_local(z: &PointConfig, p: &ProjPoint, j: u32, t: u32) -> usize {
    if j > t {
        return 0;
    }
    let transformed = local_coordinates(z, p);
    let monomials: Vec<MultiIndex> = multi_indices(t)
        .into_iter()
        .filter(|e| e[0] + e[1] >= j)
        .collect();
    debug_assert_eq!(
        monomials.len() as u64,
        binomial(t as u64 + 2, 2) - binomial(j as u64 + 1, 2)
    );
    monomials.len() - evaluation_matrix(&transformed, &monomials, t).rank()
}

/// Coordinates of the points of `Z` in a frame whose third basis vector is `P`.
fn local_coordinates(z: &PointConfig, p: &ProjPoint) -> Vec<[CycloScalar; 3]> {
    let c = p.coords();
    let pivot = c.iter().position(|v| !v.is_zero()).expect("normalized point");
    let mut cols: Vec<[CycloScalar; 3]> = (0..3)
        .filter(|&i| i != pivot)
        .map(|i| {
            let mut e = [0, 1, 2].map(|_| CycloScalar::zero(1));
            e[i] = CycloScalar::one(1);
            e
        })
        .collect();
    cols.push(c.clone());
    // rows of the inverse, up to the determinant
    let inv = [
        cross(&cols[1], &cols[2]),
        cross(&cols[2], &cols[0]),
        cross(&cols[0], &cols[1]),
    ];
    z.points()
        .iter()
        .map(|q| inv.clone().map(|r| crate::forms::dot(&r, q.coords())))
        .collect()
}

/// `D(j) = dim [I_{Z + jP}]_{j+k}` for a generic `P`, certified by agreement
/// across independent samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub k: u32,
    /// `entries[j] = D(j)`.
    pub entries: Vec<usize>,
    pub samples: usize,
    /// Sampled points, in draw order (extra draws appended).
    pub points: Vec<ProjPoint>,
}

impl DimTable {
    /// `D(j) - D(j-1)`, with `D(-1) = 0`.
    pub fn differences(&self) -> Vec<i64> {
        let mut prev = 0i64;
        self.entries
            .iter()
            .map(|&v| {
                let d = v as i64 - prev;
                prev = v as i64;
                d
            })
            .collect()
    }

    pub fn is_convex(&self) -> bool {
        let diffs = self.differences();
        diffs.iter().all(|&d| d >= 0) && diffs.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Agree on one value from per-sample results, drawing one extra sample on
/// disagreement; the minimum is accepted if at least two samples attain it.
fn agree(
    j: u32,
    mut values: Vec<usize>,
    extra: impl FnOnce() -> Result<usize>,
) -> Result<usize> {
    let min = *values.iter().min().expect("at least one sample");
    if values.iter().all(|&v| v == min) {
        return Ok(min);
    }
    values.push(extra()?);
    let min = *values.iter().min().expect("nonempty");
    if values.iter().filter(|&&v| v == min).count() >= 2 {
        Ok(min)
    } else {
        Err(Error::GenericityDisagreement { j: j as usize, values })
    }
}

/// Compute `D(j)` at `samples` generic points for `j = 0, 1, ...` until
/// `D(j) - D(j-1) = k + 1` or `j > |Z| + k`.
pub fn dim_table(z: &PointConfig, k: u32, seed: u64, samples: usize) -> Result<DimTable> {
    let stop = |j: u32, e: &[usize]| {
        let n = e.len();
        let last = e[n - 1] as i64 - if n > 1 { e[n - 2] as i64 } else { 0 };
        last >= k as i64 + 1 || j > z.len() as u32 + k
    };
    dim_table_until(z, k, seed, samples, stop)
}

/// Like [`dim_table`] with entries `j = 0..=max_j`.
pub fn dim_table_range(
    z: &PointConfig,
    k: u32,
    seed: u64,
    samples: usize,
    max_j: u32,
) -> Result<DimTable> {
    dim_table_until(z, k, seed, samples, |j, _| j >= max_j)
}

fn dim_table_until(
    z: &PointConfig,
    k: u32,
    seed: u64,
    samples: usize,
    stop: impl Fn(u32, &[usize]) -> bool,
) -> Result<DimTable> {
    if samples < 2 {
        return Err(Error::InvalidInput("at least two samples are required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = (0..samples)
        .map(|_| random_generic_point(z, &mut rng, SAMPLE_BOUND))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    let mut j = 0u32;
    loop {
        let values: Vec<usize> = points[..samples]
            .par_iter()
            .map(|p| fatpoint_dimension_local(z, p, j, j + k))
            .collect();
        let value = agree(j, values, || {
            let p = random_generic_point(z, &mut rng, SAMPLE_BOUND)?;
            let v = fatpoint_dimension_local(z, &p, j, j + k);
            points.push(p);
            Ok(v)
        })?;
        entries.push(value);
        if stop(j, &entries) {
            break;
        }
        j += 1;
    }
    Ok(DimTable {
        k,
        entries,
        samples,
        points,
    })
}

/// `dim [I_{Z + jP}]_t` at a generic `P`, certified as in [`dim_table`].
pub fn generic_fatpoint_dimension(
    z: &PointConfig,
    j: u32,
    t: u32,
    seed: u64,
    samples: usize,
) -> Result<usize> {
    if samples < 2 {
        return Err(Error::InvalidInput("at least two samples are required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..samples)
        .map(|_| random_generic_point(z, &mut rng, SAMPLE_BOUND))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<usize> = points
        .par_iter()
        .map(|p| fatpoint_dimension_local(z, p, j, t))
        .collect();
    agree(j, values, || {
        let p = random_generic_point(z, &mut rng, SAMPLE_BOUND)?;
        Ok(fatpoint_dimension_local(z, &p, j, t))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{b3, fermat_dual};

    #[test]
    fn ideal_dimension_examples() {
        let one = PointConfig::new(1, vec![ProjPoint::from_ints(1, 2, 3).unwrap()]).unwrap();
        assert_eq!(ideal_dimension(&one, 1), 2);
        assert_eq!(ideal_dimension(&b3(), 10), 66 - 9);
    }

    #[test]
    fn collinear_points_are_dependent_on_lines() {
        let pts = (0..4)
            .map(|i| ProjPoint::from_ints(1, i, 0).unwrap())
            .collect();
        let z = PointConfig::new(1, pts).unwrap();
        assert!(!imposes_independent(&z, 1));
    }

    #[test]
    fn stacked_and_local_routes_agree() {
        let z = b3();
        let p = ProjPoint::from_ints(-12, 10, 7).unwrap();
        for t in 0..7 {
            for j in 0..=t + 2 {
                assert_eq!(
                    fatpoint_dimension(&z, &p, j, t),
                    fatpoint_dimension_local(&z, &p, j, t),
                    "j={j} t={t}"
                );
            }
        }
        assert_eq!(fatpoint_dimension(&z, &p, 0, 4), ideal_dimension(&z, 4));
    }

    #[test]
    fn df3_quartic_fat_point() {
        let z = fermat_dual(3).unwrap();
        assert_eq!(generic_fatpoint_dimension(&z, 4, 5, 1, 2).unwrap(), 1);
    }

    #[test]
    fn b3_table_k1() {
        let t = dim_table(&b3(), 1, 0, 2).unwrap();
        assert_eq!(t.entries, vec![0, 0, 0, 1, 2, 4]);
        let t = dim_table_range(&b3(), 1, 0, 2, 6).unwrap();
        assert_eq!(&t.entries[3..], &[1, 2, 4, 6]);
        assert!(t.entries[..3].iter().all(|&v| v == 0));
        assert!(t.is_convex());
    }

    #[test]
    fn agreement_rule() {
        assert_eq!(agree(0, vec![3, 3], || unreachable!()).unwrap(), 3);
        assert_eq!(agree(0, vec![3, 4], || Ok(3)).unwrap(), 3);
        assert!(matches!(
            agree(2, vec![3, 4], || Ok(5)),
            Err(Error::GenericityDisagreement { j: 2, .. })
        ));
    }
}
