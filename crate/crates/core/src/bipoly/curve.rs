//! Rational curves `P1 -> F` and restriction of forms along them.

use crate::exact::Field;

use super::Bihomog;

/// Binary form of a fixed degree in `(s, t)`; `coeffs[k]` multiplies
/// `s^(degree-k) t^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm<F> {
    degree: u32,
    coeffs: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![F::zero(); degree as usize + 1],
        }
    }

    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs at least one coefficient");
        BinaryForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        BinaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn evaluate(&self, s: &F, t: &F) -> F {
        let d = self.degree as usize;
        self.coeffs.iter().enumerate().fold(F::zero(), |acc, (k, c)| {
            let mut term = c.clone();
            for _ in 0..d - k {
                term = term * s.clone();
            }
            for _ in 0..k {
                term = term * t.clone();
            }
            acc + term
        })
    }
}

/// Three coordinate forms of a common degree (0 or 1 for the curves used
/// here); a constant map has degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordMap<F> {
    pub coords: [BinaryForm<F>; 3],
}

impl<F: Field> CoordMap<F> {
    /// `s u + t v`.
    pub fn linear(u: &[F; 3], v: &[F; 3]) -> Self {
        CoordMap {
            coords: [0, 1, 2].map(|i| BinaryForm::new(vec![u[i].clone(), v[i].clone()])),
        }
    }

    pub fn constant(c: &[F; 3]) -> Self {
        CoordMap {
            coords: [0, 1, 2].map(|i| BinaryForm::new(vec![c[i].clone()])),
        }
    }

    pub fn degree(&self) -> u32 {
        self.coords[0].degree()
    }

    pub fn at(&self, s: &F, t: &F) -> [F; 3] {
        [0, 1, 2].map(|i| self.coords[i].evaluate(s, t))
    }

    /// No common root of the coordinate forms on `P1`. For degree one this
    /// is linear independence of the `s`- and `t`-coefficient vectors.
    pub fn is_nonvanishing(&self) -> bool {
        match self.degree() {
            0 => self.coords.iter().any(|c| !c.is_zero()),
            1 => {
                let u: Vec<F> = self.coords.iter().map(|c| c.coeffs()[0].clone()).collect();
                let v: Vec<F> = self.coords.iter().map(|c| c.coeffs()[1].clone()).collect();
                (0..3).any(|i| {
                    let j = (i + 1) % 3;
                    !(u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone()).is_zero()
                })
            }
            _ => unimplemented!("only constant and linear coordinate maps occur"),
        }
    }
}

/// A rational curve `[s:t] -> (p(s,t), l(s,t))` in `P2 x P2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCurve<F> {
    pub p: CoordMap<F>,
    pub l: CoordMap<F>,
}

impl<F: Field> RationalCurve<F> {
    pub fn at(&self, s: &F, t: &F) -> ([F; 3], [F; 3]) {
        (self.p.at(s, t), self.l.at(s, t))
    }

    /// `p(s,t) . l(s,t)` vanishes identically.
    pub fn lies_on_flag(&self) -> bool {
        (0..3)
            .map(|i| self.p.coords[i].mul(&self.l.coords[i]))
            .reduce(|a, b| a.add(&b))
            .unwrap()
            .is_zero()
    }

    pub fn is_valid(&self) -> bool {
        self.lies_on_flag() && self.p.is_nonvanishing() && self.l.is_nonvanishing()
    }

    /// Substitutes the parametrization into `f`. The result has degree
    /// `a deg(p) + b deg(l)`; it is zero iff the curve lies in `{f = 0}`.
    pub fn restrict(&self, f: &Bihomog<F>) -> BinaryForm<F> {
        let (a, b) = f.bidegree();
        let pp = powers(&self.p, a);
        let lp = powers(&self.l, b);
        let degree = a * self.p.degree() + b * self.l.degree();
        let mut out = BinaryForm::zero(degree);
        for (m, c) in f.terms() {
            let mut t = BinaryForm::new(vec![c.clone()]);
            for i in 0..3 {
                t = t.mul(&pp[i][m.p[i] as usize]).mul(&lp[i][m.l[i] as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Restriction coefficients of every monomial in `basis`, as columns:
    /// `result[k][j]` is coefficient `k` of monomial `j`.
    pub fn restriction_rows(&self, bidegree: (u32, u32), basis: &[super::Monomial]) -> Vec<Vec<F>> {
        let (a, b) = bidegree;
        let pp = powers(&self.p, a);
        let lp = powers(&self.l, b);
        let degree = a * self.p.degree() + b * self.l.degree();
        let mut rows = vec![vec![F::zero(); basis.len()]; degree as usize + 1];
        for (j, m) in basis.iter().enumerate() {
            let mut t = BinaryForm::new(vec![F::one()]);
            for i in 0..3 {
                t = t.mul(&pp[i][m.p[i] as usize]).mul(&lp[i][m.l[i] as usize]);
            }
            for (k, c) in t.coeffs().iter().enumerate() {
                rows[k][j] = c.clone();
            }
        }
        rows
    }
}

/// `powers[i][e]` is the `e`-th power of coordinate `i`, for `e <= max`.
fn powers<F: Field>(map: &CoordMap<F>, max: u32) -> [Vec<BinaryForm<F>>; 3] {
    [0, 1, 2].map(|i| {
        let mut v = vec![BinaryForm::new(vec![F::one()])];
        for e in 1..=max as usize {
            let next = v[e - 1].mul(&map.coords[i]);
            v.push(next);
        }
        v
    })
}
