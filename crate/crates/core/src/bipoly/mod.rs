//! Bihomogeneous forms on `P2 x P2` in the variables `p0, p1, p2` and
//! `l0, l1, l2`, reduced modulo the flag form `Phi = p0 l0 + p1 l1 + p2 l2`.

mod curve;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{Conjugate, Exp3, Field, GaussRatRepr, TernaryForm};
use crate::GaussRat;

pub use curve::{BinaryForm, CoordMap, RationalCurve};

/// A monomial `p^pexp l^lexp`. The derived order is lexicographic on
/// `(p0, p1, p2, l0, l1, l2)`, which is graded lex within a fixed bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub p: Exp3,
    pub l: Exp3,
}

impl Monomial {
    pub fn bidegree(&self) -> (u32, u32) {
        (self.p.iter().sum(), self.l.iter().sum())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            p: add3(&self.p, &other.p),
            l: add3(&self.l, &other.l),
        }
    }

    /// Divisible by `p0 l0`.
    pub fn hits_flag_relation(&self) -> bool {
        self.p[0] > 0 && self.l[0] > 0
    }
}

fn add3(a: &Exp3, b: &Exp3) -> Exp3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Exponent triples of total degree `d`, in decreasing lex order.
pub fn exponents(d: u32) -> Vec<Exp3> {
    let mut out = Vec::new();
    for e0 in (0..=d).rev() {
        for e1 in (0..=d - e0).rev() {
            out.push([e0, e1, d - e0 - e1]);
        }
    }
    out
}

/// All monomials of bidegree `(a, b)`, leading monomial first.
pub fn monomial_basis(a: u32, b: u32) -> Vec<Monomial> {
    let ls = exponents(b);
    exponents(a)
        .into_iter()
        .flat_map(|p| ls.iter().map(move |&l| Monomial { p, l }))
        .collect()
}

/// Monomials of bidegree `(a, b)` not divisible by `p0 l0`.
pub fn reduced_basis(a: u32, b: u32) -> Vec<Monomial> {
    monomial_basis(a, b)
        .into_iter()
        .filter(|m| !m.hits_flag_relation())
        .collect()
}

/// `C(n, 2)`, zero for `n < 2`.
pub fn choose2(n: u32) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// `h0(O_F(a,b)) = (a+1)(b+1)(a+b+2)/2`.
pub fn flag_h0(a: u32, b: u32) -> u64 {
    let (a, b) = (a as u64, b as u64);
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// Bihomogeneous form of a fixed bidegree.
#[derive(Clone, PartialEq, Eq)]
pub struct Bihomog<F> {
    bidegree: (u32, u32),
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Bihomog<F> {
    pub fn zero(a: u32, b: u32) -> Self {
        Bihomog {
            bidegree: (a, b),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_terms((0, 0), [(Monomial { p: [0; 3], l: [0; 3] }, c)])
    }

    /// Panics if a monomial has the wrong bidegree.
    pub fn from_terms(bidegree: (u32, u32), terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut out = Self::zero(bidegree.0, bidegree.1);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        Self::from_terms(m.bidegree(), [(m, c)])
    }

    /// Single variable `p_i`.
    pub fn p(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Monomial { p: e, l: [0; 3] }, F::one())
    }

    /// Single variable `l_i`.
    pub fn l(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(Monomial { p: [0; 3], l: e }, F::one())
    }

    /// `c . p`, bidegree (1,0).
    pub fn p_linear(c: &[F; 3]) -> Self {
        (0..3).fold(Self::zero(1, 0), |acc, i| acc.add(&Self::p(i).scale(&c[i])))
    }

    /// `c . l`, bidegree (0,1).
    pub fn l_linear(c: &[F; 3]) -> Self {
        (0..3).fold(Self::zero(0, 1), |acc, i| acc.add(&Self::l(i).scale(&c[i])))
    }

    /// The flag form `p0 l0 + p1 l1 + p2 l2`.
    pub fn phi() -> Self {
        (0..3).fold(Self::zero(1, 1), |acc, i| acc.add(&Self::p(i).mul(&Self::l(i))))
    }

    /// Pull back a form in `l` to bidegree `(0, deg)`.
    pub fn from_l_form(g: &TernaryForm<F>) -> Self {
        Self::from_terms(
            (0, g.degree()),
            g.terms().map(|(e, c)| (Monomial { p: [0; 3], l: *e }, c.clone())),
        )
    }

    /// Pull back a form in `p` to bidegree `(deg, 0)`.
    pub fn from_p_form(g: &TernaryForm<F>) -> Self {
        Self::from_terms(
            (g.degree(), 0),
            g.terms().map(|(e, c)| (Monomial { p: *e, l: [0; 3] }, c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        assert_eq!(m.bidegree(), self.bidegree, "monomial bidegree mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(F::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(
            self.bidegree,
            self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.bidegree, other.bidegree, "bidegree mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.bidegree;
        let (c, d) = other.bidegree;
        let mut out = Self::zero(a + c, b + d);
        for (m, x) in &self.terms {
            for (n, y) in &other.terms {
                out.add_term(m.mul(n), x.clone() * y.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(F::one()), |acc, _| acc.mul(self))
    }

    pub fn evaluate(&self, p: &[F; 3], l: &[F; 3]) -> F {
        // powers[k][i][e] = (p or l)_i^e, built once per call
        let table = |x: &[F; 3], d: u32| -> Vec<Vec<F>> {
            x.iter()
                .map(|xi| {
                    let mut v = vec![F::one()];
                    for _ in 0..d {
                        let next = v.last().unwrap().clone() * xi.clone();
                        v.push(next);
                    }
                    v
                })
                .collect()
        };
        let powers = [table(p, self.bidegree.0), table(l, self.bidegree.1)];
        self.terms.iter().fold(F::zero(), |acc, (m, c)| {
            let mut value: Option<F> = None;
            for (k, exps) in [&m.p, &m.l].into_iter().enumerate() {
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        let x = &powers[k][i][e as usize];
                        value = Some(match value {
                            Some(v) => v * x.clone(),
                            None => x.clone(),
                        });
                    }
                }
            }
            match value {
                Some(v) => acc + v * c.clone(),
                None => acc + c.clone(),
            }
        })
    }

    /// Unique representative modulo `Phi` with no monomial divisible by
    /// `p0 l0`. Each monomial `(p0 l0)^k r` is replaced in one step by
    /// `(-p1 l1 - p2 l2)^k r`, which is already reduced because one of the
    /// exponents of `p0`, `l0` in `r` is zero.
    pub fn normal_form(&self) -> Self {
        let mut out = Self::zero(self.bidegree.0, self.bidegree.1);
        for (m, c) in &self.terms {
            let k = m.p[0].min(m.l[0]);
            if k == 0 {
                out.add_term(*m, c.clone());
                continue;
            }
            let rest = Monomial {
                p: [m.p[0] - k, m.p[1], m.p[2]],
                l: [m.l[0] - k, m.l[1], m.l[2]],
            };
            let sign = if k % 2 == 0 { F::one() } else { -F::one() };
            let mut binom = 1u64;
            for j in 0..=k {
                // (p1 l1)^j (p2 l2)^(k-j) with coefficient C(k, j)
                let mono = Monomial {
                    p: [rest.p[0], rest.p[1] + j, rest.p[2] + k - j],
                    l: [rest.l[0], rest.l[1] + j, rest.l[2] + k - j],
                };
                let coeff = c.clone() * sign.clone() * F::from_count(binom as u32);
                out.add_term(mono, coeff);
                binom = binom * (k - j) as u64 / (j + 1) as u64;
            }
        }
        out
    }

    /// Zero on the flag threefold, i.e. a multiple of `Phi`.
    pub fn vanishes_on_flag(&self) -> bool {
        self.normal_form().is_zero()
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Same divisor on `F`: the normal forms are proportional.
    pub fn proportional(&self, other: &Self) -> bool {
        self.bidegree == other.bidegree && self.normal_form().monic() == other.normal_form().monic()
    }

    pub fn derivative_p(&self, i: usize) -> Self {
        self.derivative(i, true)
    }

    pub fn derivative_l(&self, i: usize) -> Self {
        self.derivative(i, false)
    }

    fn derivative(&self, i: usize, in_p: bool) -> Self {
        let (a, b) = self.bidegree;
        let (na, nb) = if in_p {
            (a.saturating_sub(1), b)
        } else {
            (a, b.saturating_sub(1))
        };
        let mut out = Self::zero(na, nb);
        for (m, c) in &self.terms {
            let mut m = *m;
            let e = if in_p { &mut m.p[i] } else { &mut m.l[i] };
            if *e == 0 {
                continue;
            }
            let k = *e;
            *e -= 1;
            out.add_term(m, c.clone() * F::from_count(k));
        }
        out
    }

    /// `(dF/dp0, dF/dp1, dF/dp2, dF/dl0, dF/dl1, dF/dl2)`.
    pub fn gradient6(&self) -> [Self; 6] {
        [
            self.derivative_p(0),
            self.derivative_p(1),
            self.derivative_p(2),
            self.derivative_l(0),
            self.derivative_l(1),
            self.derivative_l(2),
        ]
    }

    /// For a form of bidegree `(1, d)`, the forms `A_i(l)` with
    /// `F = p0 A0 + p1 A1 + p2 A2`. `None` for other bidegrees.
    pub fn p_coefficients(&self) -> Option<[TernaryForm<F>; 3]> {
        let (a, d) = self.bidegree;
        if a != 1 {
            return None;
        }
        let mut out = [
            TernaryForm::zero(d),
            TernaryForm::zero(d),
            TernaryForm::zero(d),
        ];
        for (m, c) in &self.terms {
            let i = m.p.iter().position(|&e| e == 1).expect("p-degree one");
            out[i].add_term(m.l, c.clone());
        }
        Some(out)
    }

    /// Coefficient vector against an explicit monomial list. Panics if a
    /// term is not in the list.
    pub fn to_vector(&self, basis: &[Monomial]) -> Vec<F> {
        let v: Vec<F> = basis.iter().map(|m| self.coeff(m)).collect();
        debug_assert!(self.terms.keys().all(|m| basis.contains(m)));
        v
    }

    pub fn from_vector(bidegree: (u32, u32), basis: &[Monomial], v: &[F]) -> Self {
        assert_eq!(basis.len(), v.len());
        Self::from_terms(bidegree, basis.iter().copied().zip(v.iter().cloned()))
    }
}

impl<F: Field + Conjugate> Bihomog<F> {
    /// Image under `j(p, l) = (conj l, conj p)`: swap the roles of `p` and
    /// `l` and conjugate every coefficient. Bidegree `(a, b)` becomes `(b, a)`.
    pub fn j_image(&self) -> Self {
        let (a, b) = self.bidegree;
        Self::from_terms(
            (b, a),
            self.terms
                .iter()
                .map(|(m, c)| (Monomial { p: m.l, l: m.p }, c.conjugate())),
        )
    }
}

impl<F: fmt::Debug> fmt::Debug for Bihomog<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bihomog{:?}[", self.bidegree)?;
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?}) p{:?} l{:?}", m.p, m.l)?;
        }
        write!(f, "]")
    }
}

/// Human-readable rendering such as `p1*l1 - p2*l2`.
pub fn display_form(f: &Bihomog<GaussRat>) -> String {
    use num_traits::{One, Signed, Zero};
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in f.terms.iter().rev().enumerate() {
        let mut vars = Vec::new();
        for (name, e) in [("p", &m.p), ("l", &m.l)] {
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => vars.push(format!("{name}{i}")),
                    _ => vars.push(format!("{name}{i}^{k}")),
                }
            }
        }
        let negative = c.im.is_zero() && c.re.is_negative();
        let c = if negative { -c.clone() } else { c.clone() };
        let sep = match (idx, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        let coeff = crate::exact::field::display_gauss(&c);
        let coeff = if c.im.is_zero() || c.re.is_zero() {
            coeff
        } else {
            format!("({coeff})")
        };
        if vars.is_empty() {
            out.push_str(&coeff);
        } else if c.is_one() {
            out.push_str(&vars.join("*"));
        } else {
            out.push_str(&format!("{coeff}*{}", vars.join("*")));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub pexp: [u32; 3],
    pub lexp: [u32; 3],
    pub coeff: GaussRatRepr,
}

/// Wire form of a bihomogeneous form: bidegree header plus term records,
/// leading term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiFormRepr {
    pub bidegree: [u32; 2],
    pub terms: Vec<TermRepr>,
}

impl From<&Bihomog<GaussRat>> for BiFormRepr {
    fn from(f: &Bihomog<GaussRat>) -> Self {
        BiFormRepr {
            bidegree: [f.bidegree.0, f.bidegree.1],
            terms: f
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermRepr {
                    pexp: m.p,
                    lexp: m.l,
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&BiFormRepr> for Bihomog<GaussRat> {
    type Error = String;

    fn try_from(r: &BiFormRepr) -> Result<Self, String> {
        let bidegree = (r.bidegree[0], r.bidegree[1]);
        let mut out = Bihomog::zero(bidegree.0, bidegree.1);
        for t in &r.terms {
            let m = Monomial { p: t.pexp, l: t.lexp };
            if m.bidegree() != bidegree {
                return Err(format!("term {:?}/{:?} does not have bidegree {bidegree:?}", t.pexp, t.lexp));
            }
            out.add_term(m, GaussRat::try_from(&t.coeff)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::gi;

    type B = Bihomog<GaussRat>;

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(1, 1).len(), 9);
        assert_eq!(monomial_basis(1, 2).len(), 18);
        assert_eq!(monomial_basis(0, 3).len(), 10);
        assert_eq!(reduced_basis(1, 2).len(), 15);
    }

    #[test]
    fn basis_is_sorted_descending() {
        let b = monomial_basis(2, 2);
        assert!(b.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(b[0], Monomial { p: [2, 0, 0], l: [2, 0, 0] });
    }

    #[test]
    fn phi_reduces_to_zero() {
        assert!(B::phi().normal_form().is_zero());
        let p0l0 = B::p(0).mul(&B::l(0));
        let expected = B::p(1).mul(&B::l(1)).add(&B::p(2).mul(&B::l(2))).neg();
        assert_eq!(p0l0.normal_form(), expected);
    }

    #[test]
    fn high_power_rewrite() {
        // (p0 l0)^3 -> (-p1 l1 - p2 l2)^3
        let f = B::p(0).mul(&B::l(0)).pow(3);
        let g = B::p(1).mul(&B::l(1)).add(&B::p(2).mul(&B::l(2))).neg().pow(3);
        assert_eq!(f.normal_form(), g);
    }

    #[test]
    fn j_examples() {
        assert_eq!(B::phi().j_image(), B::phi());
        let f = B::p(0).mul(&B::l(1)).scale(&gi(0, 1));
        let g = B::p(1).mul(&B::l(0)).scale(&gi(0, -1));
        assert_eq!(f.j_image(), g);
    }

    #[test]
    fn gradient_of_phi() {
        let g = B::phi().gradient6();
        let expected = [B::l(0), B::l(1), B::l(2), B::p(0), B::p(1), B::p(2)];
        assert_eq!(g, expected);
    }

    #[test]
    fn repr_round_trip() {
        let f = B::p(1).mul(&B::l(1)).sub(&B::p(2).mul(&B::l(2)).scale(&gi(3, -2)));
        let r = BiFormRepr::from(&f);
        assert_eq!(B::try_from(&r).unwrap(), f);
    }

    #[test]
    fn display() {
        let f = B::p(1).mul(&B::l(1)).sub(&B::p(2).mul(&B::l(2)));
        assert_eq!(display_form(&f), "p1*l1 - p2*l2");
    }
}
