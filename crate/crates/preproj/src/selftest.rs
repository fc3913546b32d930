//! Built-in verification harness: runs every structural identity the
//! library promises, at a caller-chosen scale, and reports pass/fail
//! counts per suite. The closed-form computations are always compared
//! against an independent route (the linear-algebra solver for Hom
//! dimensions, explicit multiset enumeration for root partitions), so a
//! silent regression in either side surfaces as a failure here.

use itertools::Itertools;

use crate::lattice::{
    connected_subsets, dominance_leq, kostant_partition, subset_diff, subset_from_dims,
    weight_multiplicity, RootVector, SubsetI,
};
use crate::matrix::RatMatrix;
use crate::maya::{
    hom_basis_maya, hom_formula, identify_maya, max_intersection, maya_dims, maya_module,
    polytope_max, socle_dim_conditions, MayaSubset,
};
use crate::rational::Rational;
use crate::rep::{hom_space_basis, GradedRep, Intertwiner};
use crate::tableaux::{
    classify, f_value, g_count, generic_scalars, signature, ssyt_enumerate, type_t_module,
    BoxScalars, Tableau,
};

/// Outcome of one suite: how many cases ran and which ones failed.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

#[derive(Clone, Debug)]
pub struct SelfTestReport {
    pub max_n: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl SelfTestReport {
    pub fn total_cases(&self) -> u64 {
        self.suites.iter().map(|s| s.cases).sum()
    }

    pub fn total_failures(&self) -> u64 {
        self.suites.iter().map(|s| s.failures.len() as u64).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }
}

/// Tableau sweeps are capped independently of `max_n`; beyond this the
/// enumeration grows too fast for an interactive check.
const TABLEAU_MAX_N: usize = 4;
const TABLEAU_MAX_WEIGHT: usize = 6;
const SIGNATURE_MAX_WEIGHT: usize = 7;
const KOSTANT_MAX_N: usize = 5;
const KOSTANT_MAX_HEIGHT: usize = 6;

/// Runs every suite up to the given scale. `seed` feeds the randomized
/// pieces (basis scrambles and generic scalars) so runs are exactly
/// reproducible.
pub fn run(max_n: usize, seed: u64) -> SelfTestReport {
    let suites = vec![
        suite_maya_structure(max_n),
        suite_hom_formula(max_n),
        suite_polytope(max_n),
        suite_uniqueness(max_n, seed),
        suite_type_t_relations(max_n.min(TABLEAU_MAX_N), seed),
        suite_hom_counts_generic(max_n.min(TABLEAU_MAX_N), seed),
        suite_signatures(max_n.min(TABLEAU_MAX_N), seed),
        suite_counting(max_n),
    ];
    SelfTestReport {
        max_n,
        seed,
        suites,
    }
}

/// Weakly decreasing partitions of every weight `1..=max_weight` into
/// at most `max_parts` parts.
pub fn partitions_up_to(max_weight: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for weight in 1..=max_weight {
        let mut current = Vec::new();
        extend_partition(weight, weight, max_parts, &mut current, &mut out);
    }
    out
}

fn extend_partition(
    remaining: usize,
    cap: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        current.push(part);
        extend_partition(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

/// All tuples of `parts` nonnegative integers summing to `total`.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Counts multisets of positive roots summing to `alpha` by exhaustive
/// enumeration: walks the roots in order, materializing the partial
/// remainder, with no memoization shared with `kostant_partition`.
pub fn kostant_brute_force(alpha: &RootVector) -> u64 {
    let coeffs = alpha.simple_root_coefficients();
    if coeffs.iter().any(|&c| c < 0) {
        return 0;
    }
    let n = alpha.n();
    let roots: Vec<(usize, usize)> = (0..n - 1)
        .flat_map(|s| (s..n - 1).map(move |e| (s, e)))
        .collect();
    fn walk(rem: &mut Vec<i64>, idx: usize, roots: &[(usize, usize)]) -> u64 {
        if rem.iter().all(|&c| c == 0) {
            return 1;
        }
        if idx == roots.len() {
            return 0;
        }
        let (s, e) = roots[idx];
        let mut total = 0;
        let mut uses = 0;
        loop {
            total += walk(rem, idx + 1, roots);
            if rem[s..=e].iter().any(|&c| c == 0) {
                break;
            }
            for c in &mut rem[s..=e] {
                *c -= 1;
            }
            uses += 1;
        }
        for c in &mut rem[s..=e] {
            *c += uses;
        }
        total
    }
    walk(&mut coeffs.clone(), 0, &roots)
}

/// All semistandard tableaux with entries up to `n` and size up to
/// `max_weight`, together with their contents.
fn all_tableaux(n: usize, max_weight: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for shape in partitions_up_to(max_weight, n) {
        let total: usize = shape.iter().sum();
        for content in compositions(total, n) {
            let content: Vec<i64> = content.iter().map(|&c| c as i64).collect();
            out.extend(ssyt_enumerate(&shape, &content));
        }
    }
    out
}

fn flatten_all(phis: &[Intertwiner]) -> RatMatrix {
    let flats: Vec<Vec<Rational>> = phis.iter().map(Intertwiner::to_flat).collect();
    let height = flats.first().map_or(0, Vec::len);
    RatMatrix::from_fn(height, flats.len(), |r, c| flats[c][r].clone())
}

fn suite_maya_structure(max_n: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("maya-structure");
    for n in 2..=max_n {
        for a in MayaSubset::all_admissible(n) {
            let module = maya_module(&a);
            let label = || format!("A={{{}}} n={n}", a.subset());
            suite.check(module.check_preprojective(), || {
                format!("{}: relation fails", label())
            });
            let i = a.socle_vertex();
            let mut indicator = vec![0; n - 1];
            indicator[i - 1] = 1;
            suite.check(module.socle_dims() == indicator, || {
                format!("{}: socle is not simple at vertex {i}", label())
            });
            let dims = maya_dims(&a);
            suite.check(module.dims() == dims.as_slice(), || {
                format!("{}: constructed dims disagree with the count", label())
            });
            let alpha = RootVector::from_dimension_vector(&dims);
            let diff = subset_diff(&SubsetI::prefix(n, i), a.subset()).unwrap();
            suite.check(alpha == diff, || {
                format!("{}: dimension vector is not {{1..i}} - A", label())
            });
            suite.check(socle_dim_conditions(&dims, i), || {
                format!("{}: dimension conditions fail", label())
            });
            let recovered = subset_from_dims(&dims, i);
            suite.check(
                recovered.map(|s| &s == a.subset()).unwrap_or(false),
                || format!("{}: subset recovery fails", label()),
            );
        }
    }
    suite
}

fn suite_hom_formula(max_n: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("hom-formula-vs-oracle");
    for n in 3..=max_n {
        let subsets = MayaSubset::all_admissible(n);
        let modules: Vec<GradedRep> = subsets.iter().map(maya_module).collect();
        for (a, ma) in subsets.iter().zip(&modules) {
            for (b, mb) in subsets.iter().zip(&modules) {
                let label = || format!("A={{{}}} B={{{}}} n={n}", a.subset(), b.subset());
                let formula = hom_formula(a, b).unwrap();
                let oracle = hom_space_basis(ma, mb).unwrap();
                suite.check(formula == oracle.len(), || {
                    format!(
                        "{}: formula {formula} vs solver {}",
                        label(),
                        oracle.len()
                    )
                });
                let explicit = hom_basis_maya(a, b).unwrap();
                let all_commute = explicit.iter().all(|phi| phi.commutes(ma, mb));
                suite.check(all_commute, || {
                    format!("{}: explicit basis does not commute", label())
                });
                let independent = flatten_all(&explicit).rank() == explicit.len();
                suite.check(independent, || {
                    format!("{}: explicit basis is dependent", label())
                });
                let combined: Vec<Intertwiner> =
                    oracle.iter().chain(&explicit).cloned().collect();
                let spans = flatten_all(&combined).rank() == formula;
                suite.check(spans, || {
                    format!("{}: explicit basis does not span the solver space", label())
                });
            }
        }
    }
    suite
}

fn suite_polytope(max_n: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("polytope-identity");
    for n in 3..=max_n {
        let subsets = MayaSubset::all_admissible(n);
        for a in &subsets {
            for b in &subsets {
                let label = || format!("A={{{}}} B={{{}}} n={n}", a.subset(), b.subset());
                let formula = hom_formula(a, b).unwrap() as i64;
                let poly = polytope_max(a.subset(), b.subset()).unwrap();
                suite.check(poly == formula, || {
                    format!("{}: polytope max {poly} vs formula {formula}", label())
                });
                if a.subset().size() <= b.subset().size() {
                    let prefix = SubsetI::prefix(n, b.subset().size());
                    let decomposed = max_intersection(a.subset(), b.subset()).unwrap() as i64
                        - a.subset().intersection_size(&prefix) as i64;
                    suite.check(decomposed == formula, || {
                        format!("{}: decomposition {decomposed} vs {formula}", label())
                    });
                }
            }
        }
    }
    suite
}

fn suite_uniqueness(max_n: usize, seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("unique-socle-identification");
    for n in 2..=max_n {
        for a in MayaSubset::all_admissible(n) {
            let module = maya_module(&a);
            for offset in 0..3u64 {
                let scrambled = module.random_basis_change(seed.wrapping_add(offset));
                let label = || format!("A={{{}}} n={n} seed+{offset}", a.subset());
                match identify_maya(&scrambled) {
                    Ok((found, iso)) => {
                        suite.check(found == a, || format!("{}: wrong subset", label()));
                        let certified = iso.commutes(&scrambled, &maya_module(&a))
                            && iso.is_isomorphism();
                        suite.check(certified, || {
                            format!("{}: certificate is not an isomorphism", label())
                        });
                    }
                    Err(e) => suite.check(false, || format!("{}: {e}", label())),
                }
            }
        }
    }
    suite
}

fn suite_type_t_relations(max_n: usize, seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("type-t-relations");
    for n in 2..=max_n {
        for t in all_tableaux(n, TABLEAU_MAX_WEIGHT) {
            let label = || format!("T={:?} n={n}", t.rows());
            for scalars in [
                BoxScalars::zeros(&t),
                BoxScalars::ones(&t),
                generic_scalars(&t, seed),
            ] {
                match type_t_module(&t, &scalars) {
                    Ok(m) => suite.check(m.check_preprojective(), || {
                        format!("{}: relation fails", label())
                    }),
                    Err(e) => suite.check(false, || format!("{}: {e}", label())),
                }
            }
        }
    }
    suite
}

fn suite_hom_counts_generic(max_n: usize, seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("hom-counts-at-generic-points");
    for n in 2..=max_n {
        let intervals: Vec<MayaSubset> = connected_subsets(n, true)
            .into_iter()
            .map(|s| MayaSubset::new(s).unwrap())
            .collect();
        for t in all_tableaux(n, TABLEAU_MAX_WEIGHT) {
            let label = || format!("T={:?} n={n}", t.rows());
            // generic scalars: resample a few times before declaring failure
            let mut generic_ok = true;
            let mut attempts = 0;
            'resample: for attempt in 0..5u64 {
                attempts = attempt + 1;
                let m = type_t_module(&t, &generic_scalars(&t, seed.wrapping_add(attempt)))
                    .expect("generic scalars are well keyed");
                generic_ok = true;
                for a in &intervals {
                    let f = f_value(&m, a).unwrap();
                    let g = g_count(&t, a.subset()).unwrap();
                    if f != g {
                        generic_ok = false;
                        continue 'resample;
                    }
                }
                break;
            }
            suite.check(generic_ok, || {
                format!("{}: f != g after {attempts} draws", label())
            });

            // the socle bound w recovered from the shape holds generically
            let m = type_t_module(&t, &generic_scalars(&t, seed)).unwrap();
            let mut padded = t.shape().to_vec();
            padded.resize(n, 0);
            let w: Vec<usize> = (0..n - 1).map(|k| padded[k] - padded[k + 1]).collect();
            suite.check(m.in_rep_w(&w).unwrap(), || {
                format!("{}: socle exceeds the shape bound", label())
            });

            // degenerate scalars can only raise Hom dimensions
            let degenerate = type_t_module(&t, &BoxScalars::zeros(&t)).unwrap();
            for a in &intervals {
                let f = f_value(&degenerate, a).unwrap();
                let g = g_count(&t, a.subset()).unwrap();
                suite.check(f >= g, || {
                    format!("{}: zero scalars give f={f} < g={g} at {{{}}}", label(), a.subset())
                });
            }
        }
    }
    suite
}

fn suite_signatures(max_n: usize, seed: u64) -> SuiteReport {
    let mut suite = SuiteReport::new("signature-classification");
    for n in 2..=max_n {
        for shape in partitions_up_to(SIGNATURE_MAX_WEIGHT, n) {
            let total: usize = shape.iter().sum();
            for content in compositions(total, n) {
                let content: Vec<i64> = content.iter().map(|&c| c as i64).collect();
                let tableaux = ssyt_enumerate(&shape, &content);
                // signatures separate tableaux of a fixed shape and content
                for (s, t) in tableaux.iter().tuple_combinations() {
                    suite.check(signature(s) != signature(t), || {
                        format!(
                            "signature collision for {:?} and {:?} (n={n})",
                            s.rows(),
                            t.rows()
                        )
                    });
                }
                // classification inverts the construction at generic points
                if total <= TABLEAU_MAX_WEIGHT {
                    for t in &tableaux {
                        let mut found = None;
                        for attempt in 0..5u64 {
                            let m = type_t_module(
                                t,
                                &generic_scalars(t, seed.wrapping_add(attempt)),
                            )
                            .unwrap();
                            match classify(&m, &shape, &content) {
                                Ok(back) if &back == t => {
                                    found = Some(back);
                                    break;
                                }
                                _ => continue,
                            }
                        }
                        suite.check(found.is_some(), || {
                            format!("classification does not return {:?} (n={n})", t.rows())
                        });
                    }
                }
            }
        }
    }
    suite
}

fn suite_counting(max_n: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("counting-cross-checks");
    // Kostant partition values against explicit multiset enumeration
    for n in 2..=max_n.min(KOSTANT_MAX_N) {
        for height in 1..=KOSTANT_MAX_HEIGHT {
            for v in compositions(height, n - 1) {
                let alpha = RootVector::from_dimension_vector(&v);
                let fast = kostant_partition(&alpha);
                let brute = kostant_brute_force(&alpha);
                suite.check(fast == brute, || {
                    format!("kostant mismatch at v={v:?}: {fast} vs {brute}")
                });
            }
        }
    }
    // tableau counts against the weight multiplicity formula
    for n in 2..=max_n.min(TABLEAU_MAX_N) {
        for shape in partitions_up_to(TABLEAU_MAX_WEIGHT, n) {
            let total: usize = shape.iter().sum();
            let mut lambda: Vec<i64> = shape.iter().map(|&p| p as i64).collect();
            lambda.resize(n, 0);
            for content in compositions(total, n) {
                let content: Vec<i64> = content.iter().map(|&c| c as i64).collect();
                let count = ssyt_enumerate(&shape, &content).len() as u64;
                let mult = weight_multiplicity(&lambda, &content).unwrap();
                suite.check(count == mult, || {
                    format!(
                        "tableau count {count} vs multiplicity {mult} for shape {shape:?}, content {content:?}"
                    )
                });
            }
        }
    }
    // dominance order agrees with sorted elementwise comparison
    for n in 2..=max_n {
        for size in 1..=n {
            let all: Vec<SubsetI> = (1..=n)
                .combinations(size)
                .map(|e| SubsetI::new(n, e).unwrap())
                .collect();
            for c in &all {
                for b in &all {
                    let by_prefix = dominance_leq(c, b).unwrap();
                    let by_elems = b
                        .elements()
                        .iter()
                        .zip(c.elements())
                        .all(|(bk, ck)| bk <= ck);
                    suite.check(by_prefix == by_elems, || {
                        format!("dominance disagreement for C={{{c}}} B={{{b}}}")
                    });
                }
            }
        }
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_and_compositions() {
        assert_eq!(
            partitions_up_to(3, 2),
            vec![
                vec![1],
                vec![2],
                vec![1, 1],
                vec![3],
                vec![2, 1],
            ]
        );
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }

    #[test]
    fn brute_force_kostant_small_values() {
        assert_eq!(kostant_brute_force(&RootVector::simple_root(3, 1)), 1);
        assert_eq!(
            kostant_brute_force(&RootVector::from_dimension_vector(&[1, 1])),
            2
        );
        assert_eq!(
            kostant_brute_force(&RootVector::from_dimension_vector(&[2, 1])),
            2
        );
        assert_eq!(
            kostant_brute_force(&RootVector::from_dimension_vector(&[1, 1, 1])),
            4
        );
    }

    #[test]
    fn quick_full_run() {
        let report = run(3, 1);
        assert!(report.suites.len() >= 6);
        for suite in &report.suites {
            assert!(
                suite.failures.is_empty(),
                "suite {} failed: {:?}",
                suite.name,
                suite.failures
            );
            assert!(suite.cases > 0, "suite {} ran nothing", suite.name);
        }
    }
}
