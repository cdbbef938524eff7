//! Divisibility modulo `Phi` and the vertical-gcd reducibility criterion for
//! forms of bidegree `(1, d)`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::RngCore;

use crate::bipoly::{monomial_basis, CoordMap};
use crate::exact::{gcd_homog, GcdDomain, Matrix, Poly};
use crate::geometry::{random, FlagPoint};
use crate::{BiForm, CurveParam, Error, GaussRat, HomogPoly3, Rational, Result};

use super::singular::{sample_surface_point, singular_with};

/// `Some(H)` when `F = G H + Phi K` for some `H, K`; `H` is returned in
/// normal form, which makes it unique.
pub fn divides(g: &BiForm, f: &BiForm) -> Result<Option<BiForm>> {
    if g.vanishes_on_flag() {
        return Err(Error::ZeroDivisor);
    }
    let (a, b) = f.bidegree();
    let (c, d) = g.bidegree();
    if c > a || d > b {
        return Ok(None);
    }
    let target = monomial_basis(a, b);
    let index: HashMap<_, _> = target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let h_monos = monomial_basis(a - c, b - d);
    let k_monos = if a >= 1 && b >= 1 {
        monomial_basis(a - 1, b - 1)
    } else {
        Vec::new()
    };
    let phi = BiForm::phi();
    let mut columns: Vec<BiForm> = h_monos
        .iter()
        .map(|m| g.mul(&BiForm::monomial(*m, GaussRat::one())))
        .collect();
    columns.extend(k_monos.iter().map(|m| phi.mul(&BiForm::monomial(*m, GaussRat::one()))));
    let mut mat = Matrix::zeros(target.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (m, x) in col.terms() {
            mat[(index[m], j)] = x.clone();
        }
    }
    let rhs = f.to_vector(&target);
    Ok(mat.solve(&rhs).map(|x| {
        BiForm::from_vector((a - c, b - d), &h_monos, &x[..h_monos.len()]).normal_form()
    }))
}

fn first_degree_one(f: &BiForm) -> Result<[HomogPoly3; 3]> {
    let (a, b) = f.bidegree();
    if a != 1 {
        return Err(Error::BadBidegree((a, b), "expected first degree 1"));
    }
    let nf = f.normal_form();
    if nf.is_zero() {
        return Err(Error::ZeroOnFlag);
    }
    Ok(nf.p_coefficients().expect("first degree is 1"))
}

/// `A(l) x l` for `F = p . A(l)`. Its common zeros are the `l` whose whole
/// fiber `{p : p . l = 0}` lies in the surface.
pub fn vertical_vector(f: &BiForm) -> Result<[HomogPoly3; 3]> {
    let a = first_degree_one(f)?;
    let l = [0, 1, 2].map(HomogPoly3::var);
    let c = [
        a[1].mul(&l[2]).sub(&a[2].mul(&l[1])),
        a[2].mul(&l[0]).sub(&a[0].mul(&l[2])),
        a[0].mul(&l[1]).sub(&a[1].mul(&l[0])),
    ];
    if c.iter().all(HomogPoly3::is_zero) {
        return Err(Error::VerticalVectorZero);
    }
    Ok(c)
}

/// Gcd of the vertical vector: the plane curve over which the surface
/// contains whole fibers. Constant iff the surface is irreducible.
pub fn vertical_gcd(f: &BiForm) -> Result<HomogPoly3> {
    let c = vertical_vector(f)?;
    if coprime_on_a_line(&c) {
        return Ok(HomogPoly3::constant(GaussRat::one()));
    }
    gcd_homog(&c)
}

/// Sufficient test for a constant gcd: a nonconstant common factor would
/// survive restriction to every line, so coprime restrictions to one line
/// certify coprimality. Tries a few fixed lines.
fn coprime_on_a_line(c: &[HomogPoly3; 3]) -> bool {
    const LINES: [([i64; 3], [i64; 3]); 3] = [
        ([1, 2, 3], [-2, 1, 5]),
        ([3, -1, 2], [1, 4, -3]),
        ([2, 5, -1], [-3, 2, 7]),
    ];
    let forms: Vec<BiForm> = c.iter().filter(|g| !g.is_zero()).map(BiForm::from_l_form).collect();
    LINES.iter().any(|(u, v)| {
        let to_vec = |x: &[i64; 3]| x.map(|k| GaussRat::from(Rational::from_integer(k.into())));
        let line = CurveParam {
            p: CoordMap::constant(&to_vec(&[1, 0, 0])),
            l: CoordMap::linear(&to_vec(u), &to_vec(v)),
        };
        let restricted: Vec<_> = forms.iter().map(|g| line.restrict(g)).collect();
        // a common root at s = 0 shows up as every top coefficient vanishing
        if restricted.iter().all(|r| r.coeffs().last().unwrap().is_zero()) {
            return false;
        }
        let g = restricted
            .iter()
            .map(|r| Poly::new(r.coeffs().to_vec()))
            .fold(Poly::zero(), |acc, p| acc.gcd(&p));
        g.degree() == Some(0)
    })
}

/// A (1,d) surface splits only as one (1,k) component plus pullbacks of
/// plane curves, and such pullbacks are exactly what the vertical gcd sees.
pub fn is_irreducible(f: &BiForm) -> Result<bool> {
    Ok(vertical_gcd(f)?.is_constant())
}

/// A confirmed factor `factor^power` of a surface, pulled back from `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalFactor {
    pub factor: HomogPoly3,
    pub power: u32,
    pub quotient: BiForm,
}

/// Confirms the vertical divisor `g` by division. When `g` itself does not
/// divide, falls back to its squarefree part and the largest power of it
/// that does.
pub fn confirm_vertical_factor(f: &BiForm, g: &HomogPoly3) -> Result<Option<VerticalFactor>> {
    if g.is_constant() {
        return Ok(None);
    }
    if let Some(h) = divides(&BiForm::from_l_form(g), f)? {
        return Ok(Some(VerticalFactor {
            factor: g.clone(),
            power: 1,
            quotient: h,
        }));
    }
    let mut parts = vec![g.clone()];
    parts.extend((0..3).map(|i| g.derivative(i)));
    let repeated = gcd_homog(&parts)?;
    let reduced = g.div_exact(&repeated).expect("gcd divides g").monic();
    let mut best = None;
    for e in 1..=f.bidegree().1 / reduced.degree().max(1) {
        match divides(&BiForm::from_l_form(&reduced.pow(e)), f)? {
            Some(h) => best = Some((e, h)),
            None => break,
        }
    }
    Ok(best.map(|(power, quotient)| VerticalFactor {
        factor: reduced,
        power,
        quotient,
    }))
}

/// Exact reducibility data plus a sampled singularity search.
#[derive(Debug, Clone)]
pub struct SurfaceAnalysis {
    pub form: BiForm,
    pub vertical_divisor: HomogPoly3,
    pub irreducible: bool,
    pub vertical_factor: Option<VerticalFactor>,
    pub samples_checked: usize,
    pub singular_points_found: Vec<FlagPoint>,
}

pub fn analyze_surface(f: &BiForm, samples: usize, seed: u64) -> Result<SurfaceAnalysis> {
    let g = vertical_gcd(f)?;
    let irreducible = g.is_constant();
    let vertical_factor = confirm_vertical_factor(f, &g)?;
    let mut rng = random::rng(seed);
    let mut singular_points_found = Vec::new();
    let gradient = f.gradient6();
    for _ in 0..samples {
        let x = sample_surface_point(f, rng.next_u64())?;
        if singular_with(f, &gradient, x.p.coords(), x.l.coords())? {
            singular_points_found.push(x);
        }
    }
    Ok(SurfaceAnalysis {
        form: f.clone(),
        vertical_divisor: g,
        irreducible,
        vertical_factor,
        samples_checked: samples,
        singular_points_found,
    })
}
