//! Unexpected curves of type `(d + k, d)`, decided by direct dimension count
//! and by the two splitting-type criteria.

use std::fmt;

use crate::arrangements::PointConfig;
use crate::error::{Error, Result};
use crate::fatpoint::{generic_fatpoint_dimension, ideal_dimension, imposes_independent};
use crate::forms::binomial;
use crate::splitting::SplittingType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnexpectednessVerdict {
    pub d: u32,
    pub k: u32,
    /// `dim [I_{Z + dP}]_{d+k}` at a generic `P`.
    pub actual_dim: usize,
    pub expected_dim: usize,
    /// Whether `Z` imposes independent conditions in degree `d + k`.
    pub independent: bool,
    pub verdict_direct: bool,
    /// `(a_i + 1)(k + 1) <= sum a_j` for some `a_i = d`; `None` if no
    /// exponent equals `d` or no splitting type was supplied.
    pub verdict_simple: Option<bool>,
    /// The gap criterion at `d = a + eps_j`; `None` if `d` is not of that form.
    pub verdict_epsilon: Option<bool>,
    /// Unexpected although the conditions imposed by `Z` are dependent.
    pub starred: bool,
}

impl UnexpectednessVerdict {
    /// Whether the three routes agree where the criteria apply. The
    /// criteria assume independence, so dependent cases only require
    /// `simple => epsilon`.
    pub fn is_consistent(&self) -> bool {
        let implication = !(self.verdict_simple == Some(true) && self.verdict_epsilon == Some(false));
        let epsilon_matches =
            !self.independent || self.verdict_epsilon.is_none_or(|e| e == self.verdict_direct);
        let simple_sound =
            !self.independent || self.verdict_simple != Some(true) || self.verdict_direct;
        implication && epsilon_matches && simple_sound
    }
}

/// `max(0, dim [I_Z]_{d+k} - C(d+1, 2))`.
pub fn expected_dimension(z: &PointConfig, d: u32, k: u32) -> usize {
    let ideal = ideal_dimension(z, d + k) as u64;
    ideal.saturating_sub(binomial(d as u64 + 1, 2)) as usize
}

/// Direct comparison of the actual and expected dimensions; the criterion
/// fields are filled from `st` when given.
pub fn is_unexpected_direct(
    z: &PointConfig,
    d: u32,
    k: u32,
    st: Option<&SplittingType>,
    seed: u64,
    samples: usize,
) -> Result<UnexpectednessVerdict> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidInput("d and k must be at least 1".into()));
    }
    if let Some(st) = st {
        if st.k != k {
            return Err(Error::InvalidInput(format!(
                "splitting type is for k = {}, not {k}",
                st.k
            )));
        }
    }
    let actual_dim = generic_fatpoint_dimension(z, d, d + k, seed, samples)?;
    let expected_dim = expected_dimension(z, d, k);
    let independent = imposes_independent(z, d + k);
    let verdict_direct = actual_dim > expected_dim;
    let verdict_simple = st.and_then(|st| {
        let i = st.exponents.iter().position(|&a| a == d)?;
        Some(criterion_simple(st, i).expect("index in range"))
    });
    let verdict_epsilon = st.and_then(|st| {
        let dec = st.epsilon_decomposition();
        let j = dec.eps.iter().position(|&e| dec.base + e == d)?;
        Some(criterion_epsilon(st, j).expect("index in range"))
    });
    Ok(UnexpectednessVerdict {
        d,
        k,
        actual_dim,
        expected_dim,
        independent,
        verdict_direct,
        verdict_simple,
        verdict_epsilon,
        starred: verdict_direct && !independent,
    })
}

/// `(a_i + 1)(k + 1) <= sum_j a_j`, with `i` counted from 0.
pub fn criterion_simple(st: &SplittingType, i: usize) -> Result<bool> {
    let a = *st.exponents.get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        len: st.exponents.len(),
    })? as u64;
    Ok((a + 1) * (st.k as u64 + 1) <= st.sum())
}

/// `0 < sum_{i > j} t_i (eps_i - eps_j - 1)`, for the curve type
/// `(a + eps_j + k, a + eps_j)`; `j = 0` is the base value.
pub fn criterion_epsilon(st: &SplittingType, j: usize) -> Result<bool> {
    let dec = st.epsilon_decomposition();
    let ej = *dec.eps.get(j).ok_or(Error::IndexOutOfRange {
        index: j,
        len: dec.eps.len(),
    })? as i64;
    let total: i64 = dec.eps[j + 1..]
        .iter()
        .zip(&dec.mult[j + 1..])
        .map(|(&e, &t)| t as i64 * (e as i64 - ej - 1))
        .sum();
    Ok(total > 0)
}

/// One entry `(d + k, d)` of an unexpected-type column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveType {
    pub degree: u32,
    pub d: u32,
    /// `Z` imposes dependent conditions in degree `degree`.
    pub starred: bool,
    /// The direct dimension count agrees that the type is unexpected.
    pub confirmed: bool,
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.degree, self.d)?;
        if self.starred {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// The types `(a + eps_j + k, a + eps_j)`, `a + eps_j >= 1`, passing the gap
/// criterion, starred where `Z` imposes dependent conditions in degree
/// `a + eps_j + k`. Each is also checked by the direct count.
pub fn unexpected_types(
    z: &PointConfig,
    st: &SplittingType,
    seed: u64,
    samples: usize,
) -> Result<Vec<CurveType>> {
    let dec = st.epsilon_decomposition();
    let mut out = Vec::new();
    for (j, &e) in dec.eps.iter().enumerate() {
        let d = dec.base + e;
        if d == 0 || !criterion_epsilon(st, j)? {
            continue;
        }
        let v = is_unexpected_direct(z, d, st.k, Some(st), seed, samples)?;
        out.push(CurveType {
            degree: d + st.k,
            d,
            starred: !v.independent,
            confirmed: v.verdict_direct,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::fermat_dual;

    fn st(k: u32, a: &[u32], n: usize) -> SplittingType {
        SplittingType::new(k, a.to_vec(), n).unwrap()
    }

    #[test]
    fn simple_criterion() {
        assert!(criterion_simple(&st(2, &[7, 9, 9], 28), 0).unwrap());
        assert!(!criterion_simple(&st(2, &[3, 3, 3], 12), 0).unwrap());
        assert!(criterion_simple(&st(2, &[3, 3, 3], 12), 3).is_err());
    }

    #[test]
    fn epsilon_criterion() {
        let s = st(2, &[4, 5, 7], 19);
        assert!(criterion_epsilon(&s, 0).unwrap());
        assert!(criterion_epsilon(&s, 1).unwrap());
        assert!(!criterion_epsilon(&s, 2).unwrap());
        assert!(!criterion_epsilon(&st(6, &[0, 0, 0, 1, 1, 2, 3], 28), 2).unwrap());
    }

    #[test]
    fn df3_expected_dimension() {
        let z = fermat_dual(3).unwrap();
        assert_eq!(ideal_dimension(&z, 5), 9);
        assert_eq!(expected_dimension(&z, 4, 1), 0);
    }

    #[test]
    fn df3_quintic_is_unexpected() {
        let z = fermat_dual(3).unwrap();
        let s = st(1, &[4, 7], 12);
        let v = is_unexpected_direct(&z, 4, 1, Some(&s), 0, 2).unwrap();
        assert!(v.verdict_direct && !v.starred);
        assert_eq!(v.verdict_epsilon, Some(true));
        assert!(v.is_consistent());
        let types = unexpected_types(&z, &s, 0, 2).unwrap();
        assert_eq!(types.iter().map(|t| t.to_string()).collect::<Vec<_>>(), vec!["(5,4)"]);
    }
}
