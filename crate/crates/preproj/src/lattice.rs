//! Root-lattice vectors, subsets of `{1, ..., n}` and their dominance
//! order, plus the Kostant partition function and weight multiplicities
//! used as counting cross-checks.
//!
//! Vectors of the root lattice are integer n-tuples summing to zero.
//! The simple root `alpha_i` is `(.., 0, 1, -1, 0, ..)` with the 1 in
//! position i, and a subset difference `A - B` means `1_A - 1_B`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Element of the root lattice: an integer n-tuple with zero sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::invalid("root vectors need n >= 2"));
        }
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::invalid("root vector coordinates must sum to zero"));
        }
        Ok(RootVector { coords })
    }

    pub fn zero(n: usize) -> Self {
        RootVector { coords: vec![0; n] }
    }

    /// The simple root `alpha_i`, `1 <= i <= n-1`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        assert!((1..n).contains(&i));
        let mut coords = vec![0; n];
        coords[i - 1] = 1;
        coords[i] = -1;
        RootVector { coords }
    }

    /// `alpha_v = sum_j v_j alpha_j` for a dimension vector `v` of
    /// length n-1; coordinate j is `v_j - v_{j-1}` with `v_0 = v_n = 0`.
    pub fn from_dimension_vector(v: &[usize]) -> Self {
        let n = v.len() + 1;
        let at = |j: usize| if j == 0 || j == n { 0 } else { v[j - 1] as i64 };
        RootVector {
            coords: (1..=n).map(|j| at(j) - at(j - 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coefficients when written as a sum of simple roots: the prefix
    /// sums of the coordinates.
    pub fn simple_root_coefficients(&self) -> Vec<i64> {
        let mut acc = 0;
        self.coords[..self.coords.len() - 1]
            .iter()
            .map(|x| {
                acc += x;
                acc
            })
            .collect()
    }

    /// True when the vector is a nonnegative integer combination of the
    /// simple roots, i.e. every prefix sum is nonnegative.
    pub fn is_nonneg_root_combination(&self) -> bool {
        self.simple_root_coefficients().iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.n(), other.n());
        RootVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Strictly increasing subset of `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetI {
    n: usize,
    elems: Vec<usize>,
}

impl SubsetI {
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("subsets need n >= 2"));
        }
        let increasing = elems.windows(2).all(|w| w[0] < w[1]);
        let in_range = elems.iter().all(|&e| (1..=n).contains(&e));
        if !increasing || !in_range {
            return Err(Error::invalid(format!(
                "{elems:?} is not a strictly increasing subset of 1..={n}"
            )));
        }
        Ok(SubsetI { n, elems })
    }

    /// The prefix `{1, ..., i}`.
    pub fn prefix(n: usize, i: usize) -> Self {
        assert!(i <= n);
        SubsetI {
            n,
            elems: (1..=i).collect(),
        }
    }

    /// Parses a comma-separated list such as `"3,6,7"`; the empty
    /// string is the empty subset.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return SubsetI::new(n, Vec::new());
        }
        let elems = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad subset element {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SubsetI::new(n, elems)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn indicator(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        for &e in &self.elems {
            v[e - 1] = 1;
        }
        v
    }

    /// True for intervals `{t-i+1, ..., t}`; the empty set counts.
    pub fn is_connected(&self) -> bool {
        self.elems.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn is_prefix(&self) -> bool {
        self.elems.iter().enumerate().all(|(k, &e)| e == k + 1)
    }

    /// `<1_A, x>` for a lattice vector `x`.
    pub fn pair_with(&self, x: &RootVector) -> i64 {
        assert_eq!(self.n, x.n());
        self.elems.iter().map(|&e| x.coords()[e - 1]).sum()
    }

    pub fn intersection_size(&self, other: &SubsetI) -> usize {
        self.elems.iter().filter(|e| other.contains(**e)).count()
    }
}

impl fmt::Display for SubsetI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elems.iter().join(","))
    }
}

fn check_same_frame(a: &SubsetI, b: &SubsetI) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::invalid(format!(
            "subsets live in different frames: n={} vs n={}",
            a.n(),
            b.n()
        )));
    }
    if a.size() != b.size() {
        return Err(Error::invalid(format!(
            "subsets have different sizes: {} vs {}",
            a.size(),
            b.size()
        )));
    }
    Ok(())
}

/// `A - B := 1_A - 1_B` as a root-lattice vector.
pub fn subset_diff(a: &SubsetI, b: &SubsetI) -> Result<RootVector> {
    check_same_frame(a, b)?;
    let coords = a
        .indicator()
        .iter()
        .zip(b.indicator())
        .map(|(x, y)| x - y)
        .collect();
    RootVector::new(coords)
}

/// Dominance order: `C <= B` iff `B - C` is a nonnegative combination
/// of simple roots, equivalently every prefix sum of `1_B - 1_C` is
/// nonnegative, equivalently `b_k <= c_k` elementwise.
pub fn dominance_leq(c: &SubsetI, b: &SubsetI) -> Result<bool> {
    check_same_frame(c, b)?;
    Ok(subset_diff(b, c)?.is_nonneg_root_combination())
}

/// Recovers the subset `A` with `alpha_v = 1_{1..i} - 1_A` from a
/// dimension vector satisfying the socle dimension conditions at `i`.
pub fn subset_from_dims(v: &[usize], i: usize) -> Result<SubsetI> {
    let n = v.len() + 1;
    if !(1..n).contains(&i) {
        return Err(Error::invalid(format!("vertex {i} out of range for n={n}")));
    }
    if !crate::maya::socle_dim_conditions(v, i) {
        return Err(Error::invalid(format!(
            "dimension vector {v:?} violates the socle dimension conditions at vertex {i}"
        )));
    }
    // x_j lies in {0,1} for j <= i and in {-1,0} for j > i, so
    // 1_{1..i} - x is an indicator with support
    // {j <= i : x_j = 0} u {j > i : x_j = -1}.
    let x = RootVector::from_dimension_vector(v);
    let elems: Vec<usize> = (1..=n)
        .filter(|&j| {
            if j <= i {
                x.coords()[j - 1] == 0
            } else {
                x.coords()[j - 1] == -1
            }
        })
        .collect();
    let a = SubsetI::new(n, elems)?;
    if a.size() != i {
        return Err(Error::invalid(format!(
            "dimension vector {v:?} does not yield a size-{i} subset"
        )));
    }
    if a.is_prefix() {
        return Err(Error::invalid(format!(
            "dimension vector {v:?} recovers the excluded prefix subset {a}"
        )));
    }
    Ok(a)
}

/// All interval subsets `{t-i+1, ..., t}` of `{1, ..., n}`, ordered by
/// size and then by starting point. With `admissible_only`, keeps only
/// proper intervals other than a prefix `{1, ..., i}`.
pub fn connected_subsets(n: usize, admissible_only: bool) -> Vec<SubsetI> {
    let mut out = Vec::new();
    for size in 1..=n {
        for start in 1..=(n - size + 1) {
            if admissible_only && (start == 1 || size == n) {
                continue;
            }
            out.push(SubsetI::new(n, (start..start + size).collect()).unwrap());
        }
    }
    out
}

/// Weight bookkeeping for a socle bound `w`: the highest weight
/// `lambda = sum_i w_i omega_i` and the weight `mu = lambda - alpha_v`,
/// both written as n-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub n: usize,
    pub w: Vec<usize>,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
}

pub fn weights_from(w: &[usize], v: &[usize]) -> Result<WeightData> {
    if w.len() != v.len() {
        return Err(Error::invalid("w and v must have the same length n-1"));
    }
    let n = w.len() + 1;
    // omega_i has 1s in the first i slots, so lambda_k = sum_{i >= k} w_i.
    let lambda: Vec<i64> = (1..=n)
        .map(|k| w[(k - 1).min(w.len())..].iter().map(|&x| x as i64).sum())
        .collect();
    let alpha_v = RootVector::from_dimension_vector(v);
    let mu = lambda
        .iter()
        .zip(alpha_v.coords())
        .map(|(l, x)| l - x)
        .collect();
    Ok(WeightData {
        n,
        w: w.to_vec(),
        lambda,
        mu,
    })
}

/// Positive roots of the type A root system on n coordinates, as
/// intervals of simple-root indices, in a fixed total order.
fn positive_root_supports(n: usize) -> Vec<(usize, usize)> {
    (0..n - 1)
        .flat_map(|s| (s..n - 1).map(move |e| (s, e)))
        .collect()
}

/// Kostant partition function: the number of multisets of positive
/// roots summing to `alpha`; zero off the positive root cone.
///
/// Memoized on the remaining vector and the largest root still allowed,
/// with roots in a fixed total order so each multiset is counted once.
pub fn kostant_partition(alpha: &RootVector) -> u64 {
    let coeffs = alpha.simple_root_coefficients();
    if coeffs.iter().any(|&c| c < 0) {
        return 0;
    }
    let roots = positive_root_supports(alpha.n());
    let mut memo: HashMap<(Vec<i64>, usize), u64> = HashMap::new();
    count_root_multisets(&coeffs, roots.len(), &roots, &mut memo)
}

fn count_root_multisets(
    rem: &[i64],
    allowed: usize,
    roots: &[(usize, usize)],
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if rem.iter().all(|&c| c == 0) {
        return 1;
    }
    if allowed == 0 {
        return 0;
    }
    let key = (rem.to_vec(), allowed);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (s, e) = roots[allowed - 1];
    let mut total = count_root_multisets(rem, allowed - 1, roots, memo);
    let mut reduced = rem.to_vec();
    loop {
        for c in &mut reduced[s..=e] {
            *c -= 1;
        }
        if reduced[s..=e].iter().any(|&c| c < 0) {
            break;
        }
        total += count_root_multisets(&reduced, allowed - 1, roots, memo);
    }
    memo.insert(key, total);
    total
}

/// Dimension of the `mu` weight space of the irreducible with highest
/// weight `lambda`, by the alternating Kostant sum over the symmetric
/// group with `rho = (n-1, ..., 1, 0)`. Equals the number of
/// semistandard tableaux of shape `lambda` and content `mu`.
pub fn weight_multiplicity(lambda: &[i64], mu: &[i64]) -> Result<u64> {
    let n = lambda.len();
    if n < 2 || mu.len() != n {
        return Err(Error::invalid("lambda and mu must be n-tuples, n >= 2"));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid("lambda must be weakly decreasing"));
    }
    if lambda.iter().sum::<i64>() != mu.iter().sum::<i64>() {
        return Ok(0);
    }
    let rho: Vec<i64> = (0..n).map(|k| (n - 1 - k) as i64).collect();
    let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(l, r)| l + r).collect();
    let mut total: i64 = 0;
    for perm in (0..n).permutations(n) {
        let coords: Vec<i64> = (0..n).map(|k| shifted[perm[k]] - mu[k] - rho[k]).collect();
        let Ok(arg) = RootVector::new(coords) else {
            continue;
        };
        let sign = if permutation_parity(&perm) { -1 } else { 1 };
        total += sign * kostant_partition(&arg) as i64;
    }
    if total < 0 {
        return Err(Error::violation(format!(
            "negative multiplicity {total} for lambda={lambda:?}, mu={mu:?}"
        )));
    }
    Ok(total as u64)
}

/// True for odd permutations.
fn permutation_parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(n: usize, elems: &[usize]) -> SubsetI {
        SubsetI::new(n, elems.to_vec()).unwrap()
    }

    #[test]
    fn subset_diff_examples() {
        let d = subset_diff(&subset(7, &[1, 2, 3]), &subset(7, &[3, 6, 7])).unwrap();
        assert_eq!(d.coords(), &[1, 1, 0, 0, 0, -1, -1]);

        let a = subset(5, &[2, 4]);
        assert_eq!(subset_diff(&a, &a).unwrap(), RootVector::zero(5));

        let d = subset_diff(&subset(3, &[1, 2]), &subset(3, &[2, 3])).unwrap();
        assert_eq!(d.coords(), &[1, 0, -1]);
        let a1a2 = RootVector::simple_root(3, 1).add(&RootVector::simple_root(3, 2));
        assert_eq!(d, a1a2);

        assert!(subset_diff(&subset(3, &[1]), &subset(3, &[2, 3])).is_err());
        assert!(subset_diff(&subset(3, &[1]), &subset(4, &[2])).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&subset(3, &[2, 3]), &subset(3, &[1, 3])).unwrap());
        assert!(dominance_leq(&subset(3, &[1, 3]), &subset(3, &[1, 3])).unwrap());
        assert!(!dominance_leq(&subset(3, &[1, 2]), &subset(3, &[2, 3])).unwrap());
    }

    #[test]
    fn dominance_is_elementwise_comparison() {
        // exhaustive over all size-matched pairs for n <= 8
        use itertools::Itertools;
        for n in 2..=8usize {
            for size in 1..=n {
                let subsets: Vec<SubsetI> = (1..=n)
                    .combinations(size)
                    .map(|e| SubsetI::new(n, e).unwrap())
                    .collect();
                for c in &subsets {
                    for b in &subsets {
                        let by_prefix = dominance_leq(c, b).unwrap();
                        let by_elements = b
                            .elements()
                            .iter()
                            .zip(c.elements())
                            .all(|(bk, ck)| bk <= ck);
                        assert_eq!(by_prefix, by_elements, "c={c} b={b} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn subset_from_dims_examples() {
        assert_eq!(
            subset_from_dims(&[1, 2, 2, 2, 2, 1], 3).unwrap(),
            subset(7, &[3, 6, 7])
        );
        assert_eq!(subset_from_dims(&[0, 1], 2).unwrap(), subset(3, &[1, 3]));
        assert_eq!(subset_from_dims(&[1, 0], 1).unwrap(), subset(3, &[2]));
        // the zero dimension vector would recover the excluded prefix
        assert!(subset_from_dims(&[0, 0], 1).is_err());
        // violates the conditions on the right of the socle vertex
        assert!(subset_from_dims(&[2, 0], 1).is_err());
    }

    #[test]
    fn connected_subsets_examples() {
        let admissible = connected_subsets(3, true);
        assert_eq!(
            admissible,
            vec![subset(3, &[2]), subset(3, &[3]), subset(3, &[2, 3])]
        );
        assert_eq!(connected_subsets(2, true), vec![subset(2, &[2])]);
        let all = connected_subsets(3, false);
        assert_eq!(
            all,
            vec![
                subset(3, &[1]),
                subset(3, &[2]),
                subset(3, &[3]),
                subset(3, &[1, 2]),
                subset(3, &[2, 3]),
                subset(3, &[1, 2, 3]),
            ]
        );
    }

    #[test]
    fn weights_from_examples() {
        let wd = weights_from(&[1, 1], &[1, 1]).unwrap();
        assert_eq!(wd.lambda, vec![2, 1, 0]);
        assert_eq!(wd.mu, vec![1, 1, 1]);

        let wd = weights_from(&[1, 0], &[0, 0]).unwrap();
        assert_eq!(wd.lambda, vec![1, 0, 0]);
        assert_eq!(wd.mu, vec![1, 0, 0]);

        let wd = weights_from(&[0, 1], &[0, 1]).unwrap();
        assert_eq!(wd.lambda, vec![1, 1, 0]);
        assert_eq!(wd.mu, vec![1, 0, 1]);
    }

    #[test]
    fn kostant_examples() {
        assert_eq!(kostant_partition(&RootVector::simple_root(2, 1)), 1);
        assert_eq!(kostant_partition(&RootVector::simple_root(4, 2)), 1);
        // alpha_1 + alpha_2: {a1+a2} and {a1, a2}
        assert_eq!(
            kostant_partition(&RootVector::from_dimension_vector(&[1, 1])),
            2
        );
        // 2 alpha_1 + alpha_2: {a1, a1+a2} and {a1, a1, a2}
        assert_eq!(
            kostant_partition(&RootVector::from_dimension_vector(&[2, 1])),
            2
        );
        // off the cone
        assert_eq!(
            kostant_partition(&RootVector::new(vec![-1, 1, 0]).unwrap()),
            0
        );
    }

    #[test]
    fn weight_multiplicity_examples() {
        assert_eq!(weight_multiplicity(&[2, 1, 0], &[1, 1, 1]).unwrap(), 2);
        assert_eq!(weight_multiplicity(&[2, 1, 0], &[2, 1, 0]).unwrap(), 1);
        assert_eq!(weight_multiplicity(&[1, 0, 0], &[0, 0, 1]).unwrap(), 1);
        assert_eq!(weight_multiplicity(&[1, 0, 0], &[0, 2, -1]).unwrap(), 0);
        assert!(weight_multiplicity(&[0, 1, 0], &[1, 0, 0]).is_err());
    }

    #[test]
    fn alpha_v_coefficients_roundtrip() {
        let v = [1, 2, 2, 2, 2, 1];
        let alpha = RootVector::from_dimension_vector(&v);
        assert_eq!(alpha.coords(), &[1, 1, 0, 0, 0, -1, -1]);
        let back: Vec<i64> = alpha.simple_root_coefficients();
        assert_eq!(back, v.iter().map(|&x| x as i64).collect::<Vec<_>>());
    }
}
