//! Graded representations of the doubled type A quiver subject to the
//! preprojective relation, together with socle computations and a
//! brute-force solver for homomorphism spaces.
//!
//! A module is a vector space graded by the vertices `1..n-1` with a
//! rightward map out of every vertex `j` to `j+1` and a leftward map to
//! `j-1`; the boundary maps `(1 -> 0)` and `(n-1 -> n)` are identically
//! zero and are not stored. Vertices are 1-based throughout, matching
//! the usual indexing of the quiver; only array storage is 0-based.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// Finite-dimensional graded representation satisfying the relation
/// `(j+1 -> j)(j -> j+1) = (j-1 -> j)(j -> j-1)` at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRep {
    n: usize,
    dims: Vec<usize>,
    /// `right[j-1]` is the map `(j -> j+1)` for `j = 1..n-2`, with
    /// `dims[j]` rows and `dims[j-1]` columns.
    right: Vec<RatMatrix>,
    /// `left[j-2]` is the map `(j -> j-1)` for `j = 2..n-1`, with
    /// `dims[j-2]` rows and `dims[j-1]` columns.
    left: Vec<RatMatrix>,
}

impl GradedRep {
    /// Validating constructor for untrusted data: checks all shapes and
    /// the preprojective relation at every vertex.
    pub fn new(
        n: usize,
        dims: Vec<usize>,
        right: Vec<RatMatrix>,
        left: Vec<RatMatrix>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("modules need n >= 2"));
        }
        if dims.len() != n - 1 {
            return Err(Error::invalid(format!(
                "expected {} vertex dimensions, got {}",
                n - 1,
                dims.len()
            )));
        }
        let arrow_count = n.saturating_sub(2);
        if right.len() != arrow_count || left.len() != arrow_count {
            return Err(Error::invalid(format!(
                "expected {arrow_count} rightward and leftward maps"
            )));
        }
        for j in 1..=arrow_count {
            let r = &right[j - 1];
            if (r.rows(), r.cols()) != (dims[j], dims[j - 1]) {
                return Err(Error::invalid(format!(
                    "map ({j} -> {}) has shape {}x{}, expected {}x{}",
                    j + 1,
                    r.rows(),
                    r.cols(),
                    dims[j],
                    dims[j - 1]
                )));
            }
            let l = &left[j - 1];
            if (l.rows(), l.cols()) != (dims[j - 1], dims[j]) {
                return Err(Error::invalid(format!(
                    "map ({} -> {j}) has shape {}x{}, expected {}x{}",
                    j + 1,
                    l.rows(),
                    l.cols(),
                    dims[j - 1],
                    dims[j]
                )));
            }
        }
        let rep = GradedRep {
            n,
            dims,
            right,
            left,
        };
        if let Some(j) = rep.relation_failure() {
            return Err(Error::invalid(format!(
                "preprojective relation fails at vertex {j}"
            )));
        }
        Ok(rep)
    }

    /// Constructor for internally built modules whose structure holds
    /// by construction; the relation is still asserted in debug builds.
    pub(crate) fn from_parts(
        n: usize,
        dims: Vec<usize>,
        right: Vec<RatMatrix>,
        left: Vec<RatMatrix>,
    ) -> Self {
        let rep = GradedRep {
            n,
            dims,
            right,
            left,
        };
        debug_assert!(rep.relation_failure().is_none());
        rep
    }

    /// The zero module.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2);
        let dims = vec![0; n - 1];
        let arrows = n - 2;
        GradedRep {
            n,
            dims,
            right: vec![RatMatrix::zeros(0, 0); arrows],
            left: vec![RatMatrix::zeros(0, 0); arrows],
        }
    }

    /// The simple module supported at a single vertex.
    pub fn simple(n: usize, vertex: usize) -> Self {
        assert!((1..n).contains(&vertex));
        let mut dims = vec![0; n - 1];
        dims[vertex - 1] = 1;
        let right = (1..n - 1)
            .map(|j| RatMatrix::zeros(dims[j], dims[j - 1]))
            .collect();
        let left = (2..n)
            .map(|j| RatMatrix::zeros(dims[j - 2], dims[j - 1]))
            .collect();
        GradedRep::from_parts(n, dims, right, left)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, vertex: usize) -> usize {
        self.dims[vertex - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The stored map `(j -> j+1)` for `j = 1..n-2`.
    pub fn right_map(&self, j: usize) -> &RatMatrix {
        &self.right[j - 1]
    }

    /// The stored map `(j -> j-1)` for `j = 2..n-1`.
    pub fn left_map(&self, j: usize) -> &RatMatrix {
        &self.left[j - 2]
    }

    /// `(j -> j+1)` including the boundary zero map at `j = n-1`.
    fn right_or_boundary(&self, j: usize) -> RatMatrix {
        if j <= self.n - 2 {
            self.right[j - 1].clone()
        } else {
            RatMatrix::zeros(0, self.dims[j - 1])
        }
    }

    /// `(j -> j-1)` including the boundary zero map at `j = 1`.
    fn left_or_boundary(&self, j: usize) -> RatMatrix {
        if j >= 2 {
            self.left[j - 2].clone()
        } else {
            RatMatrix::zeros(0, self.dims[0])
        }
    }

    /// First vertex where the preprojective relation fails, if any.
    /// Boundary compositions through the missing vertices 0 and n are
    /// treated as zero.
    pub fn relation_failure(&self) -> Option<usize> {
        for j in 1..self.n {
            let d = self.dims[j - 1];
            let lhs = if j <= self.n - 2 {
                self.left_map(j + 1).mul(self.right_map(j))
            } else {
                RatMatrix::zeros(d, d)
            };
            let rhs = if j >= 2 {
                self.right_map(j - 1).mul(self.left_map(j))
            } else {
                RatMatrix::zeros(d, d)
            };
            if lhs != rhs {
                return Some(j);
            }
        }
        None
    }

    pub fn check_preprojective(&self) -> bool {
        self.relation_failure().is_none()
    }

    /// Basis of the joint kernel of the two arrows leaving each vertex,
    /// as one matrix of column vectors per vertex.
    pub fn socle_basis(&self) -> Vec<RatMatrix> {
        (1..self.n)
            .map(|j| {
                self.right_or_boundary(j)
                    .vstack(&self.left_or_boundary(j))
                    .kernel_basis()
            })
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_basis().iter().map(RatMatrix::cols).collect()
    }

    /// True when the socle dimension at every vertex is bounded by `w`.
    pub fn in_rep_w(&self, w: &[usize]) -> Result<bool> {
        if w.len() != self.n - 1 {
            return Err(Error::invalid(format!(
                "socle bound must have length {}",
                self.n - 1
            )));
        }
        Ok(self
            .socle_dims()
            .iter()
            .zip(w)
            .all(|(s, bound)| s <= bound))
    }

    pub fn direct_sum(&self, other: &GradedRep) -> Result<GradedRep> {
        if self.n != other.n {
            return Err(Error::invalid("direct sum needs matching n"));
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let right = self
            .right
            .iter()
            .zip(&other.right)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        let left = self
            .left
            .iter()
            .zip(&other.left)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(GradedRep::from_parts(self.n, dims, right, left))
    }

    /// Conjugates every vertex space by the given invertible matrices:
    /// the new map `(j -> j+1)` is `g_{j+1} (j -> j+1) g_j^{-1}`.
    pub fn conjugate(&self, conjugators: &[RatMatrix]) -> Result<GradedRep> {
        if conjugators.len() != self.n - 1 {
            return Err(Error::invalid("one conjugator per vertex required"));
        }
        let mut inverses = Vec::with_capacity(conjugators.len());
        for (idx, g) in conjugators.iter().enumerate() {
            if (g.rows(), g.cols()) != (self.dims[idx], self.dims[idx]) {
                return Err(Error::invalid(format!(
                    "conjugator at vertex {} has the wrong shape",
                    idx + 1
                )));
            }
            let inv = g.inverse().ok_or_else(|| {
                Error::invalid(format!("conjugator at vertex {} is singular", idx + 1))
            })?;
            inverses.push(inv);
        }
        let right = (1..=self.n.saturating_sub(2))
            .map(|j| conjugators[j].mul(self.right_map(j)).mul(&inverses[j - 1]))
            .collect();
        let left = (2..self.n)
            .map(|j| conjugators[j - 2].mul(self.left_map(j)).mul(&inverses[j - 1]))
            .collect();
        Ok(GradedRep::from_parts(
            self.n,
            self.dims.clone(),
            right,
            left,
        ))
    }

    /// Rewrites the module in a scrambled basis drawn deterministically
    /// from the seed. Conjugators are products of unit lower and upper
    /// triangular matrices with small integer entries, hence always
    /// invertible; the result is isomorphic to the input.
    pub fn random_basis_change(&self, seed: u64) -> GradedRep {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let conjugators: Vec<RatMatrix> = self
            .dims
            .iter()
            .map(|&d| {
                let lower = unit_triangular(&mut rng, d, false);
                let upper = unit_triangular(&mut rng, d, true);
                lower.mul(&upper)
            })
            .collect();
        self.conjugate(&conjugators)
            .expect("unit triangular conjugators are invertible")
    }
}

fn unit_triangular(rng: &mut ChaCha8Rng, d: usize, upper: bool) -> RatMatrix {
    RatMatrix::from_fn(d, d, |r, c| {
        if r == c {
            Rational::one()
        } else if (upper && r < c) || (!upper && r > c) {
            Rational::from_int(rng.random_range(-3..=3))
        } else {
            Rational::zero()
        }
    })
}

/// Vertex-wise family of matrices `phi_j : M_j -> N_j` intended to
/// commute with both arrow families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    phis: Vec<RatMatrix>,
}

impl Intertwiner {
    pub fn new(phis: Vec<RatMatrix>) -> Self {
        Intertwiner { phis }
    }

    pub fn phis(&self) -> &[RatMatrix] {
        &self.phis
    }

    pub fn phi(&self, vertex: usize) -> &RatMatrix {
        &self.phis[vertex - 1]
    }

    pub fn zero(source: &GradedRep, target: &GradedRep) -> Self {
        let phis = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&m, &n)| RatMatrix::zeros(n, m))
            .collect();
        Intertwiner { phis }
    }

    /// Checks both commutation equations against the given modules.
    pub fn commutes(&self, source: &GradedRep, target: &GradedRep) -> bool {
        if source.n() != target.n() || self.phis.len() != source.n() - 1 {
            return false;
        }
        let shapes_ok = self.phis.iter().enumerate().all(|(idx, phi)| {
            (phi.rows(), phi.cols()) == (target.dims()[idx], source.dims()[idx])
        });
        if !shapes_ok {
            return false;
        }
        let n = source.n();
        for j in 1..=n.saturating_sub(2) {
            let lhs = self.phis[j].mul(source.right_map(j));
            let rhs = target.right_map(j).mul(&self.phis[j - 1]);
            if lhs != rhs {
                return false;
            }
        }
        for j in 2..n {
            let lhs = self.phis[j - 2].mul(source.left_map(j));
            let rhs = target.left_map(j).mul(&self.phis[j - 1]);
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// True when every vertex matrix is invertible, which certifies an
    /// isomorphism once `commutes` holds.
    pub fn is_isomorphism(&self) -> bool {
        self.phis.iter().all(RatMatrix::is_invertible)
    }

    /// `self + coeff * other`, vertex by vertex.
    pub fn add_scaled(&self, other: &Intertwiner, coeff: &Rational) -> Intertwiner {
        let phis = self
            .phis
            .iter()
            .zip(&other.phis)
            .map(|(a, b)| a.add_scaled(b, coeff))
            .collect();
        Intertwiner { phis }
    }

    /// Flattens all vertex matrices into one coordinate vector, in the
    /// same layout the hom solver uses for its unknowns.
    pub fn to_flat(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for phi in &self.phis {
            for r in 0..phi.rows() {
                for c in 0..phi.cols() {
                    out.push(phi.entry(r, c).clone());
                }
            }
        }
        out
    }
}

/// Basis of `Hom(source, target)` found by solving the commutation
/// equations as one exact linear system in all matrix entries.
///
/// The unknowns are the entries of every `phi_j` in row-major order,
/// vertex by vertex; each kernel vector of the stacked system is read
/// back as one intertwiner. The returned length is the Hom dimension.
pub fn hom_space_basis(source: &GradedRep, target: &GradedRep) -> Result<Vec<Intertwiner>> {
    if source.n() != target.n() {
        return Err(Error::invalid("hom space needs matching n"));
    }
    let n = source.n();
    let m_dims = source.dims();
    let n_dims = target.dims();

    let mut offsets = Vec::with_capacity(n - 1);
    let mut unknowns = 0;
    for idx in 0..n - 1 {
        offsets.push(unknowns);
        unknowns += n_dims[idx] * m_dims[idx];
    }
    let index = |vertex: usize, row: usize, col: usize| {
        offsets[vertex - 1] + row * m_dims[vertex - 1] + col
    };

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut push_equation =
        |phi_out: usize, out_rows: usize, a: &RatMatrix, b: &RatMatrix, phi_in: usize| {
            // phi_out * a - b * phi_in = 0, an (out_rows x cols(a)) block
            for p in 0..out_rows {
                for c in 0..a.cols() {
                    let mut row = vec![Rational::zero(); unknowns];
                    for q in 0..a.rows() {
                        row[index(phi_out, p, q)] = a.entry(q, c).clone();
                    }
                    for q in 0..b.cols() {
                        let cur = &row[index(phi_in, q, c)] - b.entry(p, q);
                        row[index(phi_in, q, c)] = cur;
                    }
                    rows.push(row);
                }
            }
        };

    for j in 1..=n.saturating_sub(2) {
        push_equation(
            j + 1,
            n_dims[j],
            source.right_map(j),
            target.right_map(j),
            j,
        );
    }
    for j in 2..n {
        push_equation(
            j - 1,
            n_dims[j - 2],
            source.left_map(j),
            target.left_map(j),
            j,
        );
    }

    let system = if rows.is_empty() {
        RatMatrix::zeros(0, unknowns)
    } else {
        RatMatrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone())
    };
    let kernel = system.kernel_basis();

    let mut basis = Vec::with_capacity(kernel.cols());
    for k in 0..kernel.cols() {
        let flat = kernel.column(k);
        let phis = (0..n - 1)
            .map(|idx| {
                RatMatrix::from_fn(n_dims[idx], m_dims[idx], |r, c| {
                    flat[offsets[idx] + r * m_dims[idx] + c].clone()
                })
            })
            .collect();
        basis.push(Intertwiner::new(phis));
    }
    debug_assert!(basis.iter().all(|phi| phi.commutes(source, target)));
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maya::{maya_module, MayaSubset};

    fn maya(n: usize, elems: &[usize]) -> GradedRep {
        maya_module(&MayaSubset::from_elements(n, elems).unwrap())
    }

    #[test]
    fn relation_checker_examples() {
        assert!(maya(7, &[3, 6, 7]).check_preprojective());
        assert!(GradedRep::zero(4).check_preprojective());

        // right and left both nonzero between two 1-dim spaces breaks
        // the relation at vertex 1
        let bad = GradedRep::new(
            3,
            vec![1, 1],
            vec![RatMatrix::identity(1)],
            vec![RatMatrix::identity(1)],
        );
        match bad {
            Err(Error::InvalidInput(msg)) => assert!(msg.contains("vertex 1"), "{msg}"),
            other => panic!("expected invalid input, got {other:?}"),
        }
    }

    #[test]
    fn socle_examples() {
        assert_eq!(maya(7, &[3, 6, 7]).socle_dims(), vec![0, 0, 1, 0, 0, 0]);
        assert_eq!(maya(3, &[2, 3]).socle_dims(), vec![0, 1]);

        let s1 = GradedRep::simple(3, 1);
        let sum = s1.direct_sum(&s1).unwrap();
        assert_eq!(sum.socle_dims(), vec![2, 0]);
    }

    #[test]
    fn socle_of_direct_sum_is_sum_of_socles() {
        let pairs = [
            (maya(4, &[2, 4]), maya(4, &[3])),
            (maya(5, &[2, 3, 5]), maya(5, &[4])),
            (maya(3, &[2]), maya(3, &[1, 3])),
        ];
        for (a, b) in pairs {
            let sum = a.direct_sum(&b).unwrap();
            let expected: Vec<usize> = a
                .socle_dims()
                .iter()
                .zip(b.socle_dims())
                .map(|(x, y)| x + y)
                .collect();
            assert_eq!(sum.socle_dims(), expected);
        }
    }

    #[test]
    fn hom_oracle_examples() {
        let dim = |a: &GradedRep, b: &GradedRep| hom_space_basis(a, b).unwrap().len();
        assert_eq!(dim(&maya(3, &[3]), &maya(3, &[2, 3])), 1);
        let s1 = GradedRep::simple(3, 1);
        let s2 = GradedRep::simple(3, 2);
        assert_eq!(dim(&s1, &s1), 1);
        assert_eq!(dim(&s1, &s2), 0);
        assert!(hom_space_basis(&s1, &GradedRep::simple(4, 1)).is_err());
    }

    #[test]
    fn hom_basis_elements_commute() {
        let m = maya(5, &[2, 4, 5]);
        let nn = maya(5, &[3, 5]);
        for phi in hom_space_basis(&m, &nn).unwrap() {
            assert!(phi.commutes(&m, &nn));
        }
    }

    #[test]
    fn in_rep_w_examples() {
        assert!(maya(3, &[2, 3]).in_rep_w(&[1, 1]).unwrap());
        let s1 = GradedRep::simple(3, 1);
        let sum = s1.direct_sum(&s1).unwrap();
        assert!(!sum.in_rep_w(&[1, 1]).unwrap());
        assert!(GradedRep::zero(3).in_rep_w(&[0, 0]).unwrap());
        assert!(sum.in_rep_w(&[1]).is_err());
    }

    #[test]
    fn basis_change_preserves_structure() {
        let m = maya(7, &[3, 6, 7]);
        let scrambled = m.random_basis_change(11);
        assert!(scrambled.check_preprojective());
        assert_eq!(scrambled.dims(), m.dims());
        assert_eq!(scrambled.socle_dims(), m.socle_dims());
        // identity conjugators leave the module untouched
        let identity: Vec<RatMatrix> =
            m.dims().iter().map(|&d| RatMatrix::identity(d)).collect();
        assert_eq!(m.conjugate(&identity).unwrap(), m);
        // the zero module is fixed by any seed
        assert_eq!(
            GradedRep::zero(4).random_basis_change(5),
            GradedRep::zero(4)
        );
    }

    #[test]
    fn hom_dimension_is_isomorphism_invariant() {
        let m = maya(4, &[3]);
        let base = hom_space_basis(&m, &m).unwrap().len();
        for seed in [1, 2, 3] {
            let scrambled = m.random_basis_change(seed);
            assert_eq!(hom_space_basis(&scrambled, &m).unwrap().len(), base);
            assert_eq!(hom_space_basis(&m, &scrambled).unwrap().len(), base);
        }
    }
}
