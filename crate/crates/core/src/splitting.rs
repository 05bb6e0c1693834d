//! Splitting types recovered from fat-point dimension tables.

use crate::arrangements::PointConfig;
use crate::error::{Error, Result};
use crate::fatpoint::{dim_table, DimTable};

/// Exponents `a_1 <= ... <= a_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub k: u32,
    pub exponents: Vec<u32>,
    /// Whether `sum a_i = |Z| - k(k+1)/2`.
    pub consistent: bool,
}

/// `a + eps_i` occurs `t_i` times; `eps_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonDecomposition {
    pub base: u32,
    /// Gaps including the leading `0`.
    pub eps: Vec<u32>,
    pub mult: Vec<u32>,
}

impl EpsilonDecomposition {
    /// The nonzero gaps `eps_1, ..., eps_s`.
    pub fn gaps(&self) -> &[u32] {
        &self.eps[1..]
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.eps
            .iter()
            .zip(&self.mult)
            .flat_map(|(&e, &t)| std::iter::repeat(self.base + e).take(t as usize))
            .collect()
    }
}

impl SplittingType {
    pub fn new(k: u32, mut exponents: Vec<u32>, size_z: usize) -> Result<Self> {
        if exponents.len() != k as usize + 1 {
            return Err(Error::InvalidInput(format!(
                "splitting type for k = {k} needs {} exponents, got {}",
                k + 1,
                exponents.len()
            )));
        }
        exponents.sort_unstable();
        let mut st = SplittingType {
            k,
            exponents,
            consistent: false,
        };
        st.consistent = chern_sum_check(&st, size_z);
        Ok(st)
    }

    pub fn sum(&self) -> u64 {
        self.exponents.iter().map(|&a| a as u64).sum()
    }

    /// `sum_i max(0, j - a_i + 1)`.
    pub fn predicted_dimension(&self, j: u32) -> usize {
        self.exponents
            .iter()
            .map(|&a| (j + 1).saturating_sub(a) as usize)
            .sum()
    }

    pub fn epsilon_decomposition(&self) -> EpsilonDecomposition {
        epsilon_decomposition(self)
    }
}

pub fn epsilon_decomposition(st: &SplittingType) -> EpsilonDecomposition {
    let base = st.exponents[0];
    let mut eps: Vec<u32> = Vec::new();
    let mut mult: Vec<u32> = Vec::new();
    for &a in &st.exponents {
        let e = a - base;
        if eps.last() == Some(&e) {
            *mult.last_mut().expect("parallel vectors") += 1;
        } else {
            eps.push(e);
            mult.push(1);
        }
    }
    EpsilonDecomposition { base, eps, mult }
}

/// `sum a_i = |Z| - k(k+1)/2`.
pub fn chern_sum_check(st: &SplittingType, size_z: usize) -> bool {
    let k = st.k as i64;
    st.sum() as i64 == size_z as i64 - k * (k + 1) / 2
}

/// Whether `k(k+1)/2 < |Z|`, the range where recovery is expected to work.
pub fn in_valid_range(k: u32, size_z: usize) -> bool {
    (k as u64 * (k as u64 + 1) / 2) < size_z as u64
}

/// Read the exponents off a dimension table: `D(j) - D(j-1)` counts the
/// `a_i <= j`.
pub fn splitting_from_table(table: &DimTable, size_z: usize) -> Result<SplittingType> {
    let k = table.k;
    let nonconv = |reason: String| Error::NonConvergent {
        k: k as usize,
        reason,
    };
    let diffs = table.differences();
    let mut exponents = Vec::new();
    let mut prev = 0i64;
    for (j, &d) in diffs.iter().enumerate() {
        if d < prev {
            return Err(nonconv(format!(
                "first difference drops from {prev} to {d} at j = {j}"
            )));
        }
        if d > k as i64 + 1 {
            return Err(nonconv(format!(
                "first difference {d} at j = {j} exceeds k + 1 = {}",
                k + 1
            )));
        }
        exponents.extend(std::iter::repeat(j as u32).take((d - prev) as usize));
        prev = d;
        if d == k as i64 + 1 {
            let st = SplittingType::new(k, exponents, size_z)?;
            if !in_valid_range(k, size_z) {
                return Err(nonconv(format!(
                    "k(k+1)/2 = {} is not below |Z| = {size_z} (recovered {:?})",
                    k * (k + 1) / 2,
                    st.exponents
                )));
            }
            return Ok(st);
        }
    }
    Err(nonconv(format!(
        "first differences never reached k + 1 = {} up to j = {}",
        k + 1,
        diffs.len().saturating_sub(1)
    )))
}

/// The splitting type for `k`, from a certified dimension table.
pub fn splitting_type(z: &PointConfig, k: u32, seed: u64, samples: usize) -> Result<SplittingType> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let table = dim_table(z, k, seed, samples)?;
    splitting_from_table(&table, z.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::b3;

    fn st(k: u32, a: &[u32], n: usize) -> SplittingType {
        SplittingType::new(k, a.to_vec(), n).unwrap()
    }

    #[test]
    fn epsilon_examples() {
        let d = st(2, &[4, 5, 7], 19).epsilon_decomposition();
        assert_eq!((d.base, d.gaps(), &d.mult[..]), (4, &[1, 3][..], &[1, 1, 1][..]));
        let d = st(2, &[3, 3, 3], 12).epsilon_decomposition();
        assert_eq!((d.base, d.gaps(), &d.mult[..]), (3, &[][..], &[3][..]));
        let d = st(2, &[7, 9, 9], 28).epsilon_decomposition();
        assert_eq!((d.base, d.gaps(), &d.mult[..]), (7, &[2][..], &[1, 2][..]));
        assert_eq!(d.exponents(), vec![7, 9, 9]);
    }

    #[test]
    fn chern_examples() {
        assert!(st(1, &[4, 7], 12).consistent);
        assert!(st(3, &[3, 3, 3, 4], 19).consistent);
        assert!(st(2, &[2, 2, 2], 9).consistent);
        assert!(!st(5, &[0, 0, 0, 0, 0, 1], 12).consistent);
    }

    #[test]
    fn b3_splittings() {
        assert_eq!(splitting_type(&b3(), 1, 0, 2).unwrap().exponents, vec![3, 5]);
        assert_eq!(splitting_type(&b3(), 2, 0, 2).unwrap().exponents, vec![2, 2, 2]);
    }

    #[test]
    fn out_of_range_is_nonconvergent() {
        // k(k+1)/2 = 10 >= 9
        assert!(matches!(
            splitting_type(&b3(), 4, 0, 2),
            Err(Error::NonConvergent { k: 4, .. })
        ));
    }
}
