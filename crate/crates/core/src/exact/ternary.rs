//! Homogeneous polynomials in three variables and their gcd.

use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use super::poly::{GcdDomain, Poly};
use crate::error::{Error, Result};

/// Exponent triple; the derived lexicographic order restricted to a fixed
/// degree is graded lex with `x0 > x1 > x2`.
pub type Exp3 = [u32; 3];

/// Homogeneous polynomial of a fixed degree in `x0, x1, x2`.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryForm<F> {
    degree: u32,
    terms: BTreeMap<Exp3, F>,
}

fn exp_degree(e: &Exp3) -> u32 {
    e[0] + e[1] + e[2]
}

impl<F: Field> TernaryForm<F> {
    pub fn zero(degree: u32) -> Self {
        TernaryForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_terms(0, [([0, 0, 0], c)])
    }

    /// Variable `x_i` as a degree-one form.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::from_terms(1, [(e, F::one())])
    }

    /// Linear form `c0 x0 + c1 x1 + c2 x2`.
    pub fn linear(c: &[F; 3]) -> Self {
        Self::from_terms(
            1,
            [
                ([1, 0, 0], c[0].clone()),
                ([0, 1, 0], c[1].clone()),
                ([0, 0, 1], c[2].clone()),
            ],
        )
    }

    /// Sums repeated exponents; panics if an exponent has the wrong degree.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exp3, F)>) -> Self {
        let mut out = Self::zero(degree);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: Exp3, c: F) {
        assert_eq!(exp_degree(&e), self.degree, "monomial degree mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(F::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp3, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp3) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero of degree zero.
    pub fn is_constant(&self) -> bool {
        self.degree == 0 && !self.is_zero()
    }

    /// Leading term under graded lex with `x0 > x1 > x2`.
    pub fn leading(&self) -> Option<(&Exp3, &F)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(
            self.degree,
            self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())),
        )
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                out.add_term([e[0] + f[0], e[1] + f[1], e[2] + f[2]], a.clone() * b.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(F::one()), |acc, _| acc.mul(self))
    }

    pub fn evaluate(&self, x: &[F; 3]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t = t * xi.clone();
                }
            }
            acc + t
        })
    }

    pub fn derivative(&self, i: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let mut out = Self::zero(self.degree - 1);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            out.add_term(f, c.clone() * F::from_count(e[i]));
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (le, lc) = divisor.leading()?;
        let (le, lc) = (*le, lc.clone());
        let qdeg = self.degree.checked_sub(divisor.degree)?;
        let mut q = Self::zero(qdeg);
        let mut r = self.clone();
        while let Some((re, rc)) = r.leading() {
            if (0..3).any(|i| re[i] < le[i]) {
                return None;
            }
            let e = [re[0] - le[0], re[1] - le[1], re[2] - le[2]];
            let c = rc.clone() / lc.clone();
            let t = Self::from_terms(qdeg, [(e, c)]);
            r = r.sub(&t.mul(divisor));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Largest power of `x0` dividing a nonzero form.
    fn x0_valuation(&self) -> u32 {
        self.terms.keys().map(|e| e[0]).min().unwrap_or(0)
    }

    /// Sets `x0 = 1`: the result is a polynomial in `y = x2` with
    /// coefficients in `K[x1]`.
    fn dehomogenize(&self) -> Poly<Poly<F>> {
        let mut rows: BTreeMap<u32, BTreeMap<u32, F>> = BTreeMap::new();
        for (e, c) in &self.terms {
            rows.entry(e[2]).or_default().insert(e[1], c.clone());
        }
        let max_y = rows.keys().next_back().copied().unwrap_or(0);
        let coeffs = (0..=max_y)
            .map(|y| {
                let row = rows.get(&y);
                let max_x = row.and_then(|r| r.keys().next_back().copied()).unwrap_or(0);
                Poly::new(
                    (0..=max_x)
                        .map(|x| row.and_then(|r| r.get(&x).cloned()).unwrap_or_else(F::zero))
                        .collect(),
                )
            })
            .collect();
        Poly::new(coeffs)
    }

    fn rehomogenize(p: &Poly<Poly<F>>, x0_power: u32) -> Self {
        let mut degree = 0;
        for (y, cx) in p.coeffs().iter().enumerate() {
            for (x, c) in cx.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    degree = degree.max((x + y) as u32);
                }
            }
        }
        let mut out = Self::zero(degree + x0_power);
        for (y, cx) in p.coeffs().iter().enumerate() {
            for (x, c) in cx.coeffs().iter().enumerate() {
                let (x, y) = (x as u32, y as u32);
                out.add_term([degree - x - y + x0_power, x, y], c.clone());
            }
        }
        out
    }
}

/// Homogeneous gcd of a list of forms, normalized to leading coefficient one.
///
/// Powers of `x0` are split off first; the remaining forms are not divisible
/// by `x0`, so dehomogenizing at `x0 = 1` is injective on their divisors and
/// the bivariate gcd rehomogenizes to the homogeneous one.
pub fn gcd_homog<F: Field>(polys: &[TernaryForm<F>]) -> Result<TernaryForm<F>> {
    let nonzero: Vec<&TernaryForm<F>> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::AllZero);
    }
    let x0_power = nonzero.iter().map(|p| p.x0_valuation()).min().unwrap();
    let mut g: Option<Poly<Poly<F>>> = None;
    for p in &nonzero {
        let d = p.dehomogenize();
        g = Some(match g {
            None => d,
            Some(acc) => acc.gcd(&d),
        });
        if g.as_ref().is_some_and(|g| g.degree() == Some(0) && g.lc().degree() == Some(0)) {
            break;
        }
    }
    let g = TernaryForm::rehomogenize(&g.unwrap(), x0_power);
    Ok(g.monic())
}

impl<F: Field> fmt::Debug for TernaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryForm(deg {}; ", self.degree)?;
        for (e, c) in self.terms.iter().rev() {
            write!(f, "{c:?}*x{e:?} ")?;
        }
        write!(f, ")")
    }
}
