//! Linear systems `|I_A(a,b)|` of forms on the flag threefold vanishing on a
//! configuration of conics, and the analysis of their members.

mod analysis;
mod reducible;
mod singular;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bipoly::{choose2, flag_h0, monomial_basis, reduced_basis, Monomial};
use crate::exact::Matrix;
use crate::geometry::{random, Configuration};
use crate::{BiForm, Error, ExactMatrix, GaussRat, Result};

pub use analysis::{
    analyze_surface, confirm_vertical_factor, divides, is_irreducible, vertical_gcd,
    vertical_vector, SurfaceAnalysis, VerticalFactor,
};
pub use reducible::reducible_members;
pub use singular::{
    contains_conic, contains_curve, is_singular_at, sample_surface_point, singular_along,
};

/// `(h0, h1, chi)` of `I_A(a,b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub h0: u64,
    pub h1: u64,
    pub chi: i64,
}

/// `|I_A(a,b)|` with its condition matrix and a basis of normal forms.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub config: Configuration,
    pub bidegree: (u32, u32),
    /// Rows: the `a+b+1` restriction coefficients per conic. Columns: the
    /// full monomial basis of bidegree `(a,b)`.
    pub condition_matrix: ExactMatrix,
    pub basis: Vec<BiForm>,
    pub dims: Dims,
}

fn condition_rows(config: &Configuration, bidegree: (u32, u32), monos: &[Monomial]) -> ExactMatrix {
    let mut m = Matrix::zeros(0, monos.len());
    for c in config.conics() {
        for row in c.param().restriction_rows(bidegree, monos) {
            m.push_row(row);
        }
    }
    m
}

impl LinearSystem {
    /// Builds the system. `h0` is the nullity of the condition matrix
    /// restricted to the `p0 l0`-free columns: every class modulo `Phi` has
    /// exactly one such representative and `Phi`-multiples restrict to zero,
    /// so that kernel is the space of sections itself.
    pub fn new(config: &Configuration, bidegree: (u32, u32)) -> Result<Self> {
        if !config.pairwise_disjoint {
            return Err(Error::NotDisjoint);
        }
        let (a, b) = bidegree;
        let full = monomial_basis(a, b);
        let condition_matrix = condition_rows(config, bidegree, &full);

        let reduced = reduced_basis(a, b);
        let reduced_matrix = condition_rows(config, bidegree, &reduced);
        let basis: Vec<BiForm> = reduced_matrix
            .nullspace()
            .iter()
            .map(|v| BiForm::from_vector(bidegree, &reduced, v))
            .collect();
        let h0 = basis.len();

        let chi = flag_h0(a, b) as i64 - (config.len() as i64) * (a + b + 1) as i64;
        let h1 = h0 as i64 - chi;
        assert!(h1 >= 0, "h1 = {h1} is negative");
        Ok(LinearSystem {
            config: config.clone(),
            bidegree,
            condition_matrix,
            basis,
            dims: Dims {
                h0: h0 as u64,
                h1: h1 as u64,
                chi,
            },
        })
    }

    /// `h0` by the second route: nullity of the full condition matrix minus
    /// the dimension `C(a+1,2) C(b+1,2)` of the `Phi`-multiples.
    pub fn h0_from_full_matrix(&self) -> u64 {
        let (a, b) = self.bidegree;
        let nullity = self.condition_matrix.cols() - self.condition_matrix.rank();
        nullity as u64 - choose2(a + 1) * choose2(b + 1)
    }

    pub fn h0(&self) -> u64 {
        self.dims.h0
    }

    pub fn h1(&self) -> u64 {
        self.dims.h1
    }

    pub fn chi(&self) -> i64 {
        self.dims.chi
    }

    /// Whether a form of the right bidegree is a member (up to `Phi`).
    pub fn contains(&self, f: &BiForm) -> bool {
        f.bidegree() == self.bidegree && in_span(&self.basis, f)
    }
}

pub fn ideal_dims(config: &Configuration, bidegree: (u32, u32)) -> Result<Dims> {
    LinearSystem::new(config, bidegree).map(|s| s.dims)
}

pub fn system_basis(config: &Configuration, bidegree: (u32, u32)) -> Result<Vec<BiForm>> {
    LinearSystem::new(config, bidegree).map(|s| s.basis)
}

/// Random combination of the basis with Gaussian integer coefficients.
pub fn random_member(basis: &[BiForm], seed: u64) -> Result<BiForm> {
    let first = basis.first().ok_or(Error::EmptySystem)?;
    let (a, b) = first.bidegree();
    let mut rng = random::rng(seed);
    loop {
        let coeffs: Vec<GaussRat> = basis.iter().map(|_| random::small_gauss_int(&mut rng, 9)).collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let f = basis
            .iter()
            .zip(&coeffs)
            .fold(BiForm::zero(a, b), |acc, (g, c)| acc.add(&g.scale(c)));
        if !f.vanishes_on_flag() {
            return Ok(f);
        }
    }
}

/// `f` lies in the span of `basis` modulo `Phi`.
pub fn in_span(basis: &[BiForm], f: &BiForm) -> bool {
    let (a, b) = f.bidegree();
    if basis.iter().any(|g| g.bidegree() != (a, b)) {
        return false;
    }
    let cols = reduced_basis(a, b);
    let rows: Vec<Vec<GaussRat>> = basis.iter().map(|g| g.normal_form().to_vector(&cols)).collect();
    let m = Matrix::from_rows(cols.len(), rows.clone());
    let mut with = rows;
    with.push(f.normal_form().to_vector(&cols));
    m.rank() == Matrix::from_rows(cols.len(), with).rank()
}

/// Bidegree of the intersection curve of two surfaces of bidegrees
/// `(a,b)` and `(c,d)`: `(ad + b(c+d), a(c+d) + bc)`.
pub fn bidegree_of_intersection((a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
    (a * d + b * (c + d), a * (c + d) + b * c)
}
