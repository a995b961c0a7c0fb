use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::field::{Field, Rat};
use crate::monomial::{Monomial, MonomialOrder};
use crate::unipoly::UniPoly;

/// Ambient polynomial ring descriptor: the ordered variable names. Shared
/// behind an `Arc` so that every polynomial carries its ring cheaply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> RingRef {
        Arc::new(Ring {
            vars: vars.into_iter().map(Into::into).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A new ring with one extra variable appended.
    pub fn extended(&self, extra: &str) -> RingRef {
        let mut vars = self.vars.clone();
        vars.push(extra.to_string());
        Arc::new(Ring { vars })
    }

    /// A fresh variable name not colliding with the existing ones.
    pub fn fresh_var(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        for i in 1.. {
            let name = format!("{base}{i}");
            if self.var_index(&name).is_none() {
                return name;
            }
        }
        unreachable!()
    }
}

fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a.vars == b.vars
}

/// Exact multivariate polynomial over a computable field. Terms are kept in
/// a canonical map with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: F) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, F::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        assert!(i < ring.nvars());
        let mut p = Polynomial::zero(ring);
        p.terms.insert(Monomial::var(ring.nvars(), i), F::one());
        p
    }

    pub fn from_terms(
        ring: &RingRef,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.ring.nvars());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_term(&self) -> F {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &rhs.ring));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &rhs.ring));
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicity at the origin: the minimal total degree of a term.
    /// Infinity for the zero polynomial, 0 for nonzero constants.
    pub fn order(&self) -> ExtInt {
        match self.terms.keys().next() {
            Some(m) => ExtInt::Finite(m.deg() as u64),
            None => ExtInt::Infinity,
        }
    }

    /// Maximal total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.deg())
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => lo.deg() == hi.deg(),
            _ => true,
        }
    }

    /// The homogeneous part of minimal total degree.
    pub fn initial_form(&self) -> Result<Self> {
        let d = match self.order() {
            ExtInt::Finite(d) => d as u32,
            ExtInt::Infinity => return Err(Error::ZeroPolynomial),
        };
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .take_while(|(m, _)| m.deg() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u32> = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(
                Monomial::from_exps(exps),
                c.mul(&F::from_int(e as i64)),
            );
        }
        out
    }

    /// The gradient (∂p/∂z₁, …, ∂p/∂zₙ).
    pub fn partials(&self) -> Vec<Self> {
        (0..self.ring.nvars()).map(|i| self.partial(i)).collect()
    }

    /// Drops every term of total degree strictly above `d`.
    pub fn truncate_above_degree(&self, d: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .take_while(|(m, _)| m.deg() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Reinterprets the polynomial in `target`, sending variable `i` to
    /// variable `positions[i]`.
    pub fn embed(&self, target: &RingRef, positions: &[usize]) -> Polynomial<F> {
        assert_eq!(positions.len(), self.ring.nvars());
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[positions[i]] += e;
                }
                (Monomial::from_exps(exps), c.clone())
            }),
        )
    }

    /// Splits by the power of the last variable; the pieces live in `sub`,
    /// which must consist of all variables but the last.
    pub fn collect_by_last_var(&self, sub: &RingRef) -> BTreeMap<u32, Polynomial<F>> {
        let n = self.ring.nvars();
        assert_eq!(sub.nvars() + 1, n);
        let mut out: BTreeMap<u32, Polynomial<F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.exp(n - 1);
            let sub_mono = Monomial::from_exps(m.exps()[..n - 1].iter().copied());
            out.entry(k)
                .or_insert_with(|| Polynomial::zero(sub))
                .add_term(sub_mono, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// The largest term with respect to a division order.
    pub fn lead(&self, ord: MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    /// Canonical text form: terms in descending degrevlex, explicit `*` and
    /// `^`, coefficients over the base field.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut sorted: Vec<(&Monomial, &F)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| b.cmp_degrevlex(a));
        let mut out = String::new();
        for (m, c) in sorted {
            let (neg, mag) = match c.display_negate() {
                Some(mag) => (true, mag),
                None => (false, c.clone()),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_str = mag.to_string();
            let needs_parens = mag_str.contains(['+', '-', ' ']);
            let coeff_str = if needs_parens {
                format!("({mag_str})")
            } else {
                mag_str
            };
            if m.is_one() {
                out.push_str(&coeff_str);
                continue;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(coeff_str);
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(self.ring.var_name(i).to_string());
                } else {
                    factors.push(format!("{}^{e}", self.ring.var_name(i)));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Polynomial<Rat> {
    /// Exact composition with univariate components: variable `i` is
    /// replaced by `comps[i]`.
    pub fn substitute_components(&self, comps: &[UniPoly<Rat>]) -> Result<UniPoly<Rat>> {
        if comps.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: comps.len(),
            });
        }
        // Power ladders per variable, up to the largest exponent used.
        let mut max_exp = vec![0u32; comps.len()];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let ladders: Vec<Vec<UniPoly<Rat>>> = comps
            .iter()
            .zip(&max_exp)
            .map(|(c, &top)| {
                let mut l = Vec::with_capacity(top as usize + 1);
                l.push(UniPoly::one());
                for e in 1..=top {
                    let prev = &l[e as usize - 1];
                    l.push(prev.mul(c));
                }
                l
            })
            .collect();
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut term = UniPoly::constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&ladders[i][e as usize]);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xy() -> RingRef {
        Ring::new(["x", "y"])
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.iter().copied())
    }

    fn p(ring: &RingRef, terms: &[(&[u32], i64)]) -> Polynomial<Rat> {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(e, c)| (mono(e), <Rat as Field>::from_int(*c))),
        )
    }

    #[test]
    fn order_examples() {
        let r = ring_xy();
        // x^3 + y^5
        assert_eq!(
            p(&r, &[(&[3, 0], 1), (&[0, 5], 1)]).order(),
            ExtInt::Finite(3)
        );
        assert_eq!(
            Polynomial::constant(&r, <Rat as Field>::from_int(7)).order(),
            ExtInt::Finite(0)
        );
        // x^2*y + x*y^3 + y^7
        assert_eq!(
            p(&r, &[(&[2, 1], 1), (&[1, 3], 1), (&[0, 7], 1)]).order(),
            ExtInt::Finite(3)
        );
        assert_eq!(Polynomial::<Rat>::zero(&r).order(), ExtInt::Infinity);
    }

    #[test]
    fn initial_form_examples() {
        let r = ring_xy();
        let a = p(&r, &[(&[3, 0], 1), (&[0, 5], 1)]);
        assert_eq!(a.initial_form().unwrap(), p(&r, &[(&[3, 0], 1)]));
        let b = p(&r, &[(&[2, 1], 1), (&[0, 3], 1), (&[5, 0], 1)]);
        assert_eq!(
            b.initial_form().unwrap(),
            p(&r, &[(&[2, 1], 1), (&[0, 3], 1)])
        );
        let h = p(&r, &[(&[2, 1], 2), (&[1, 2], -5)]);
        assert_eq!(h.initial_form().unwrap(), h);
        assert_eq!(
            Polynomial::<Rat>::zero(&r).initial_form(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn partials_examples() {
        let r = ring_xy();
        let a = p(&r, &[(&[2, 1], 1)]);
        assert_eq!(
            a.partials(),
            vec![p(&r, &[(&[1, 1], 2)]), p(&r, &[(&[2, 0], 1)])]
        );
        let c = Polynomial::constant(&r, <Rat as Field>::from_int(5));
        assert!(c.partials().iter().all(Polynomial::is_zero));

        let r3 = Ring::new(["x", "y", "z"]);
        let f = Polynomial::from_terms(
            &r3,
            [
                (mono(&[5, 0, 0]), <Rat as Field>::from_int(1)),
                (mono(&[0, 0, 15]), <Rat as Field>::from_int(1)),
                (mono(&[0, 7, 1]), <Rat as Field>::from_int(1)),
            ],
        );
        let grads = f.partials();
        assert_eq!(grads[0].to_text(), "5*x^4");
        assert_eq!(grads[1].to_text(), "7*y^6*z");
        assert_eq!(grads[2].to_text(), "15*z^14 + y^7");
    }

    #[test]
    fn product_preserves_orders() {
        let r = ring_xy();
        let a = p(&r, &[(&[1, 0], 1), (&[0, 2], 3)]);
        let b = p(&r, &[(&[2, 0], 2), (&[0, 3], -1)]);
        let prod = a.mul(&b);
        assert_eq!(prod.order(), ExtInt::Finite(3));
        assert_eq!(
            prod.initial_form().unwrap(),
            a.initial_form().unwrap().mul(&b.initial_form().unwrap())
        );
    }

    #[test]
    fn text_is_descending_degrevlex() {
        let r = ring_xy();
        let q = p(&r, &[(&[0, 3], 1), (&[2, 1], 1)]);
        assert_eq!(q.to_text(), "x^2*y + y^3");
        assert_eq!(Polynomial::<Rat>::zero(&r).to_text(), "0");
        assert_eq!(p(&r, &[(&[0, 2], 1)]).to_text(), "y^2");
        assert_eq!(
            p(&r, &[(&[1, 0], -1), (&[0, 0], -2)]).to_text(),
            "-x - 2"
        );
    }

    #[test]
    fn substitution_examples() {
        // p = x^2 + t over (x, y, t) with z = (u, u), t = u.
        let r = Ring::new(["x", "y", "t"]);
        let pt = p(&r, &[(&[2, 0, 0], 1), (&[0, 0, 1], 1)]);
        let u = UniPoly::<Rat>::var();
        let got = pt
            .substitute_components(&[u.clone(), u.clone(), u.clone()])
            .unwrap();
        assert_eq!(got, UniPoly::from_ints(&[0, 1, 1]));

        // x^3 + y^3 at (u, u, 0) -> 2u^3.
        let q = p(&r, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1)]);
        let got = q
            .substitute_components(&[u.clone(), u, UniPoly::zero()])
            .unwrap();
        assert_eq!(got, UniPoly::from_ints(&[0, 0, 0, 2]));

        assert!(matches!(
            q.substitute_components(&[UniPoly::zero()]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn collect_by_last_var_splits_powers() {
        let rzt = Ring::new(["x", "y", "t"]);
        let rz = Ring::new(["x", "y"]);
        // x^3 + y^3 + t*x^2 + t^2*y
        let f = p(
            &rzt,
            &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[2, 0, 1], 1), (&[0, 1, 2], 1)],
        );
        let parts = f.collect_by_last_var(&rz);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&0], p(&rz, &[(&[3, 0], 1), (&[0, 3], 1)]));
        assert_eq!(parts[&1], p(&rz, &[(&[2, 0], 1)]));
        assert_eq!(parts[&2], p(&rz, &[(&[0, 1], 1)]));
    }
}
