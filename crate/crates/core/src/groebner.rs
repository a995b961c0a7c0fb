use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, RingRef};

/// Kernel representation: terms sorted strictly descending under the active
/// division order, so the leading term is `terms[0]`. Both supported orders
/// are compatible with multiplication, which keeps shifted copies sorted.
#[derive(Debug, Clone)]
struct KPoly<F: Field> {
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> KPoly<F> {
    fn from_poly(p: &Polynomial<F>, ord: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, F)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        KPoly { terms }
    }

    fn to_poly(&self, ring: &RingRef) -> Polynomial<F> {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, F) {
        &self.terms[0]
    }

    /// Degree spread between the tail and the leading monomial; the écart
    /// steering Mora's reduction.
    fn ecart(&self) -> u32 {
        let max = self.terms.iter().map(|(m, _)| m.deg()).max().unwrap();
        max - self.lead().0.deg()
    }

    fn scaled_shift(&self, c: &F, m: &Monomial) -> Self {
        KPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
    }

    fn sub(&self, rhs: &Self, ord: MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ord.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.neg()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.sub(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().map(|(m, c)| (m.clone(), c.neg())));
        KPoly { terms: out }
    }

    /// One division step: cancels the leading term of `self` against `g`.
    fn reduce_lead_by(&self, g: &Self, ord: MonomialOrder) -> Self {
        let (lm_h, lc_h) = self.lead();
        let (lm_g, lc_g) = g.lead();
        let factor = lc_h.div(lc_g);
        let shift = lm_g.div_into(lm_h);
        self.sub(&g.scaled_shift(&factor, &shift), ord)
    }

    /// Divides out the coefficient content; canonical primitive scale.
    fn strip_content(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let coeffs: Vec<F> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let content = F::content(&coeffs);
        if content.is_one() {
            return;
        }
        let inv = content
            .inv()
            .expect("content of a nonzero polynomial is nonzero");
        for (_, c) in &mut self.terms {
            *c = c.mul(&inv);
        }
    }

    fn monic(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let inv = self.lead().1.inv().unwrap();
        if inv.is_one() {
            return;
        }
        for (_, c) in &mut self.terms {
            *c = c.mul(&inv);
        }
    }
}

fn spoly<F: Field>(f: &KPoly<F>, g: &KPoly<F>, ord: MonomialOrder) -> KPoly<F> {
    let (lm_f, lc_f) = f.lead();
    let (lm_g, lc_g) = g.lead();
    let l = lm_f.lcm(lm_g);
    let a = f.scaled_shift(&lc_f.inv().unwrap(), &lm_f.div_into(&l));
    let b = g.scaled_shift(&lc_g.inv().unwrap(), &lm_g.div_into(&l));
    let mut s = a.sub(&b, ord);
    s.strip_content();
    s
}

/// Total reduction for global orders. With `rescale` the result is only
/// defined up to a nonzero scalar (intermediate results are kept primitive
/// while no remainder terms have been emitted); `normal_form` passes
/// `rescale = false` so that `p − result` lies in the ideal exactly.
fn reduce_global<F: Field>(
    p: KPoly<F>,
    basis: &[KPoly<F>],
    ord: MonomialOrder,
    rescale: bool,
) -> KPoly<F> {
    debug_assert!(ord.is_global());
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    let mut h = p;
    'outer: while !h.is_zero() {
        if rescale && rem.is_empty() {
            h.strip_content();
        }
        for g in basis {
            if !g.is_zero() && g.lead().0.divides(&h.lead().0) {
                h = h.reduce_lead_by(g, ord);
                continue 'outer;
            }
        }
        rem.push(h.terms.remove(0));
    }
    KPoly { terms: rem }
}

/// Mora weak normal form with écart-guided reducer selection; reducers are
/// drawn from the basis and from previously encountered intermediate
/// results. Terminates on polynomial input. The result's leading term is
/// irreducible; it is zero iff `p` lies in the ideal of the local ring.
fn mora_weak_nf<F: Field>(p: KPoly<F>, basis: &[KPoly<F>], ord: MonomialOrder) -> KPoly<F> {
    let mut h = p;
    let mut extra: Vec<KPoly<F>> = Vec::new();
    loop {
        if h.is_zero() {
            return h;
        }
        h.strip_content();
        let lm_h = h.lead().0.clone();
        let h_ecart = h.ecart();
        let candidate = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| !g.is_zero() && g.lead().0.divides(&lm_h))
            .min_by_key(|g| g.ecart())
            .cloned();
        let g = match candidate {
            Some(g) => g,
            None => return h,
        };
        if g.ecart() > h_ecart {
            extra.push(h.clone());
        }
        h = h.reduce_lead_by(&g, ord);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey(u32, Monomial, usize, usize);

/// Buchberger/Mora completion loop. Pair selection is degree-graded and
/// deterministic. The classical product and chain pair-elimination criteria
/// are applied for global orders; for the local order every pair is
/// processed (desk-scale inputs make elimination unnecessary, and the
/// classical justifications are stated for well-orders).
fn basis_loop<F: Field>(gens: &[KPoly<F>], ord: MonomialOrder) -> Vec<KPoly<F>> {
    let mut basis: Vec<KPoly<F>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let mut g = g.clone();
            g.strip_content();
            basis.push(g);
        }
    }
    fn enqueue<F: Field>(pairs: &mut BTreeSet<PairKey>, basis: &[KPoly<F>], i: usize, j: usize) {
        let l = basis[i].lead().0.lcm(&basis[j].lead().0);
        pairs.insert(PairKey(l.deg(), l, i, j));
    }
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&mut pairs, &basis, i, j);
        }
    }
    while let Some(key) = pairs.pop_first() {
        let PairKey(_, lcm, i, j) = key;
        if ord.is_global() {
            // Product criterion: coprime leading monomials reduce to zero.
            if basis[i].lead().0.is_coprime_with(&basis[j].lead().0) {
                done.insert((i, j));
                continue;
            }
            // Chain criterion, conservative form: both companion pairs must
            // be genuinely settled (reduced or product-eliminated), which
            // rules out circular elimination.
            let skip = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lead().0.divides(&lcm)
                    && done.contains(&(i.min(k), i.max(k)))
                    && done.contains(&(j.min(k), j.max(k)))
            });
            if skip {
                continue;
            }
        }
        let s = spoly(&basis[i], &basis[j], ord);
        let h = if ord.is_global() {
            reduce_global(s, &basis, ord, true)
        } else {
            mora_weak_nf(s, &basis, ord)
        };
        done.insert((i, j));
        if !h.is_zero() {
            let mut h = h;
            h.strip_content();
            basis.push(h);
            let new = basis.len() - 1;
            for i in 0..new {
                enqueue(&mut pairs, &basis, i, new);
            }
        }
    }
    basis
}

/// Keeps only elements whose leading monomial is not divisible by another
/// kept one. Candidates are visited in the intrinsic graded order, which
/// places divisors before their multiples for either division order.
fn minimalize<F: Field>(mut basis: Vec<KPoly<F>>) -> Vec<KPoly<F>> {
    basis.sort_by(|a, b| a.lead().0.cmp(&b.lead().0));
    let mut kept: Vec<KPoly<F>> = Vec::new();
    for g in basis {
        if !kept.iter().any(|k| k.lead().0.divides(&g.lead().0)) {
            kept.push(g);
        }
    }
    kept
}

fn reduced_groebner<F: Field>(gens: &[KPoly<F>], ord: MonomialOrder) -> Vec<KPoly<F>> {
    debug_assert!(ord.is_global());
    let basis = basis_loop(gens, ord);
    let minimal = minimalize(basis);
    // Tail-reduce each element against the others; leading terms are
    // pairwise non-dividing, so they survive.
    let mut reduced: Vec<KPoly<F>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<KPoly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let mut r = reduce_global(minimal[i].clone(), &others, ord, false);
            r.monic();
            r
        })
        .collect();
    reduced.sort_by(|a, b| ord.cmp(&b.lead().0, &a.lead().0));
    reduced
}

fn minimal_standard<F: Field>(gens: &[KPoly<F>], ord: MonomialOrder) -> Vec<KPoly<F>> {
    let basis = basis_loop(gens, ord);
    let mut minimal = minimalize(basis);
    for g in &mut minimal {
        g.strip_content();
    }
    minimal.sort_by(|a, b| ord.cmp(&b.lead().0, &a.lead().0));
    minimal
}

/// Ideal with cached bases. Values are immutable once a basis is cached, so
/// computed ideals can be shared freely across threads.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Vec<Polynomial<F>>>,
    sb: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
            sb: self.sb.clone(),
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef, gens: impl IntoIterator<Item = Polynomial<F>>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
            sb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    fn kernel_gens(&self, ord: MonomialOrder) -> Vec<KPoly<F>> {
        self.gens.iter().map(|g| KPoly::from_poly(g, ord)).collect()
    }

    /// Reduced Gröbner basis for the global degrevlex order; unique and
    /// idempotent.
    pub fn groebner_basis(&self) -> &[Polynomial<F>] {
        self.gb.get_or_init(|| {
            reduced_groebner(
                &self.kernel_gens(MonomialOrder::Degrevlex),
                MonomialOrder::Degrevlex,
            )
            .iter()
            .map(|k| k.to_poly(&self.ring))
            .collect()
        })
    }

    /// Minimal standard basis for the local negdegrevlex order, computed by
    /// Mora's tangent-cone algorithm. Leading terms generate the local
    /// leading ideal; tails are not reduced (full tail reduction need not
    /// terminate over a local order).
    pub fn standard_basis(&self) -> &[Polynomial<F>] {
        self.sb.get_or_init(|| {
            minimal_standard(
                &self.kernel_gens(MonomialOrder::NegDegrevlex),
                MonomialOrder::NegDegrevlex,
            )
            .iter()
            .map(|k| k.to_poly(&self.ring))
            .collect()
        })
    }

    pub fn basis(&self, ord: MonomialOrder) -> &[Polynomial<F>] {
        match ord {
            MonomialOrder::Degrevlex => self.groebner_basis(),
            MonomialOrder::NegDegrevlex => self.standard_basis(),
        }
    }

    pub fn leading_monomials(&self, ord: MonomialOrder) -> Vec<Monomial> {
        self.basis(ord)
            .iter()
            .filter_map(|g| g.lead(ord).map(|(m, _)| m.clone()))
            .collect()
    }

    /// Remainder of division by the cached basis. For the global order this
    /// is the unique total normal form with `p − result` in the ideal; for
    /// the local order it is Mora's weak normal form (leading term
    /// irreducible, result defined up to a local unit).
    pub fn normal_form(&self, p: &Polynomial<F>, ord: MonomialOrder) -> Polynomial<F> {
        let basis: Vec<KPoly<F>> = self
            .basis(ord)
            .iter()
            .map(|g| KPoly::from_poly(g, ord))
            .collect();
        let kp = KPoly::from_poly(p, ord);
        let r = if ord.is_global() {
            reduce_global(kp, &basis, ord, false)
        } else {
            mora_weak_nf(kp, &basis, ord)
        };
        r.to_poly(&self.ring)
    }

    /// Ideal membership: in the polynomial ring for the global order, in
    /// the local ring at the origin for the local one.
    pub fn contains(&self, p: &Polynomial<F>, ord: MonomialOrder) -> bool {
        self.normal_form(p, ord).is_zero()
    }

    /// Number of standard monomials of the local leading ideal: the
    /// dimension of the local quotient when finite. Infinite exactly when
    /// some variable has no pure power in the leading ideal.
    pub fn colength(&self) -> ExtInt {
        colength_of_leading(
            &self.leading_monomials(MonomialOrder::NegDegrevlex),
            self.ring.nvars(),
        )
    }

    /// For homogeneous generators: whether the vanishing locus is just the
    /// origin (equivalently, the global colength is finite).
    pub fn is_zero_dimensional_at_origin(&self) -> Result<bool> {
        if !self.gens.iter().all(Polynomial::is_homogeneous) {
            return Err(Error::NonHomogeneousInput);
        }
        let lms = self.leading_monomials(MonomialOrder::Degrevlex);
        Ok(colength_of_leading(&lms, self.ring.nvars()).is_finite())
    }
}

/// Counts the monomials outside the monomial ideal generated by `lms`.
pub(crate) fn colength_of_leading(lms: &[Monomial], nvars: usize) -> ExtInt {
    if lms.iter().any(Monomial::is_one) {
        return ExtInt::Finite(0);
    }
    let mut bounds = vec![None::<u32>; nvars];
    for lm in lms {
        if let Some((i, e)) = lm.pure_power() {
            let b = bounds[i].get_or_insert(e);
            *b = (*b).min(e);
        }
    }
    let bounds: Option<Vec<u32>> = bounds.into_iter().collect();
    let bounds = match bounds {
        Some(b) => b,
        None => return ExtInt::Infinity,
    };
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    loop {
        let mono = Monomial::from_exps(exps.iter().copied());
        if !lms.iter().any(|lm| lm.divides(&mono)) {
            count += 1;
        }
        // Odometer over the box Π [0, bounds_i).
        let mut i = 0;
        loop {
            if i == nvars {
                return ExtInt::Finite(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Radical membership p ∈ √I via the auxiliary-variable trick: V(I) ⊆ V(p)
/// iff 1 lies in I + (1 − w·p) in the ring extended by a fresh variable w.
pub fn radical_member<F: Field>(p: &Polynomial<F>, ideal: &Ideal<F>) -> bool {
    if p.is_zero() {
        return true;
    }
    let ring = ideal.ring();
    let wname = ring.fresh_var("w");
    let ext = ring.extended(&wname);
    let positions: Vec<usize> = (0..ring.nvars()).collect();
    let mut gens: Vec<Polynomial<F>> = ideal
        .generators()
        .iter()
        .map(|g| g.embed(&ext, &positions))
        .collect();
    let w = Polynomial::var(&ext, ext.nvars() - 1);
    let p_ext = p.embed(&ext, &positions);
    gens.push(Polynomial::one(&ext).sub(&w.mul(&p_ext)));
    let extended = Ideal::new(&ext, gens);
    extended.contains(&Polynomial::one(&ext), MonomialOrder::Degrevlex)
}

/// Checks that every S-polynomial of the basis reduces to zero — the
/// defining property of a Gröbner/standard basis. Used by the test suites.
pub fn is_self_saturated<F: Field>(basis: &[Polynomial<F>], ord: MonomialOrder) -> bool {
    let kb: Vec<KPoly<F>> = basis.iter().map(|g| KPoly::from_poly(g, ord)).collect();
    for i in 0..kb.len() {
        for j in (i + 1)..kb.len() {
            let s = spoly(&kb[i], &kb[j], ord);
            let r = if ord.is_global() {
                reduce_global(s, &kb, ord, true)
            } else {
                mora_weak_nf(s, &kb, ord)
            };
            if !r.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;
    use crate::poly::Ring;

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
    fn groebner_of_monomial_ideal_is_itself() {
        let r = Ring::new(["x", "y"]);
        let ideal = Ideal::new(&r, [p(&r, &[(&[2, 0], 1)]), p(&r, &[(&[1, 1], 1)])]);
        let gb = ideal.groebner_basis();
        let got: Vec<String> = gb.iter().map(|g| g.to_text()).collect();
        assert_eq!(got, vec!["x^2", "x*y"]);
        assert!(is_self_saturated(gb, MonomialOrder::Degrevlex));
    }

    #[test]
    fn groebner_of_unit_ideal() {
        let r = Ring::new(["x", "y"]);
        let ideal = Ideal::new(&r, [Polynomial::<Rat>::one(&r)]);
        let gb = ideal.groebner_basis();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], Polynomial::one(&r));
    }

    #[test]
    fn groebner_of_linear_span() {
        let r = Ring::new(["x", "y"]);
        let ideal = Ideal::new(
            &r,
            [
                p(&r, &[(&[1, 0], 1), (&[0, 1], 1)]),
                p(&r, &[(&[1, 0], 1), (&[0, 1], -1)]),
            ],
        );
        let gb = ideal.groebner_basis();
        let got: Vec<String> = gb.iter().map(|g| g.to_text()).collect();
        assert_eq!(got, vec!["x", "y"]);
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::new(["x", "y"]);
        let ideal = Ideal::new(&r, [p(&r, &[(&[2, 0], 1)]), p(&r, &[(&[1, 1], 1)])]);
        let nf = ideal.normal_form(&p(&r, &[(&[2, 3], 1)]), MonomialOrder::Degrevlex);
        assert!(nf.is_zero());
        let y3 = p(&r, &[(&[0, 3], 1)]);
        assert_eq!(ideal.normal_form(&y3, MonomialOrder::Degrevlex), y3);
        // Membership law: p ∈ I iff the normal form vanishes.
        let member = p(&r, &[(&[2, 1], 3), (&[1, 2], 2)]);
        assert!(ideal.contains(&member, MonomialOrder::Degrevlex));
        assert!(!ideal.contains(&y3, MonomialOrder::Degrevlex));
        // p − nf(p) lies in the ideal.
        let q = p(&r, &[(&[2, 3], 5), (&[0, 3], 1), (&[1, 0], 2)]);
        let nf = ideal.normal_form(&q, MonomialOrder::Degrevlex);
        assert!(ideal.contains(&q.sub(&nf), MonomialOrder::Degrevlex));
    }

    #[test]
    fn standard_basis_sees_local_units() {
        let r = Ring::new(["x", "y"]);
        // (3x^2 + 2x, y^2): locally 2 + 3x is a unit, so the leading ideal
        // is (x, y^2) and the colength is 2.
        let ideal = Ideal::new(
            &r,
            [
                p(&r, &[(&[2, 0], 3), (&[1, 0], 2)]),
                p(&r, &[(&[0, 2], 1)]),
            ],
        );
        let lms = ideal.leading_monomials(MonomialOrder::NegDegrevlex);
        assert_eq!(lms, vec![mono(&[1, 0]), mono(&[0, 2])]);
        assert_eq!(ideal.colength(), ExtInt::Finite(2));
        assert!(is_self_saturated(
            ideal.standard_basis(),
            MonomialOrder::NegDegrevlex
        ));
    }

    #[test]
    fn standard_basis_of_monomial_ideal() {
        let r = Ring::new(["x", "y"]);
        let ideal = Ideal::new(&r, [p(&r, &[(&[2, 0], 1)]), p(&r, &[(&[1, 1], 1)])]);
        let lms = ideal.leading_monomials(MonomialOrder::NegDegrevlex);
        assert_eq!(lms.len(), 2);
        assert!(lms.contains(&mono(&[2, 0])) && lms.contains(&mono(&[1, 1])));
        // No pure power of y: infinite colength.
        assert_eq!(ideal.colength(), ExtInt::Infinity);
    }

    #[test]
    fn standard_basis_strips_unit_factor() {
        let r = Ring::new(["x"]);
        let ideal = Ideal::new(&r, [p(&r, &[(&[1], 1), (&[2], 1)])]);
        assert_eq!(
            ideal.leading_monomials(MonomialOrder::NegDegrevlex),
            vec![mono(&[1])]
        );
    }

    #[test]
    fn colength_small_examples() {
        let r = Ring::new(["x", "y"]);
        let i1 = Ideal::new(&r, [p(&r, &[(&[1, 0], 1)]), p(&r, &[(&[0, 1], 1)])]);
        assert_eq!(i1.colength(), ExtInt::Finite(1));
        let i2 = Ideal::new(&r, [p(&r, &[(&[2, 0], 3)]), p(&r, &[(&[0, 2], 3)])]);
        assert_eq!(i2.colength(), ExtInt::Finite(4));
        let i3 = Ideal::new(&r, [p(&r, &[(&[1, 1], 2)]), p(&r, &[(&[2, 0], 1)])]);
        assert_eq!(i3.colength(), ExtInt::Infinity);
    }

    #[test]
    fn radical_membership_examples() {
        let r = Ring::new(["x", "y"]);
        let ideal = Ideal::new(&r, [p(&r, &[(&[2, 0], 1)]), p(&r, &[(&[1, 1], 1)])]);
        let x = p(&r, &[(&[1, 0], 1)]);
        let y = p(&r, &[(&[0, 1], 1)]);
        assert!(radical_member(&x, &ideal));
        assert!(!radical_member(&y, &ideal));
        let unit = Ideal::new(&r, [Polynomial::<Rat>::one(&r)]);
        assert!(radical_member(&Polynomial::zero(&r), &unit));
    }

    #[test]
    fn zero_dimensionality_at_origin() {
        let r = Ring::new(["x", "y", "z"]);
        let jac_fermat = Ideal::new(
            &r,
            [
                p(&r, &[(&[2, 0, 0], 3)]),
                p(&r, &[(&[0, 2, 0], 3)]),
                p(&r, &[(&[0, 0, 2], 3)]),
            ],
        );
        assert_eq!(jac_fermat.is_zero_dimensional_at_origin(), Ok(true));
        let coords = Ideal::new(&r, (0..3).map(|i| Polynomial::<Rat>::var(&r, i)));
        assert_eq!(coords.is_zero_dimensional_at_origin(), Ok(true));

        let r2 = Ring::new(["x", "y"]);
        let whitney = Ideal::new(&r2, [p(&r2, &[(&[1, 1], 2)]), p(&r2, &[(&[2, 0], 1)])]);
        assert_eq!(whitney.is_zero_dimensional_at_origin(), Ok(false));

        let nonhom = Ideal::new(&r2, [p(&r2, &[(&[1, 0], 1), (&[2, 0], 1)])]);
        assert_eq!(
            nonhom.is_zero_dimensional_at_origin(),
            Err(Error::NonHomogeneousInput)
        );
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let r = Ring::new(["x", "y", "z"]);
        let gens = [
            p(&r, &[(&[2, 0, 0], 1), (&[0, 1, 1], -1)]),
            p(&r, &[(&[1, 1, 0], 3), (&[0, 0, 2], 1)]),
            p(&r, &[(&[0, 2, 0], 1), (&[1, 0, 1], 2)]),
        ];
        let a = Ideal::new(&r, gens.clone());
        let mut rev = gens.to_vec();
        rev.reverse();
        let b = Ideal::new(&r, rev);
        assert_eq!(a.groebner_basis(), b.groebner_basis());
        // The local leading ideal is likewise canonical.
        assert_eq!(
            a.leading_monomials(MonomialOrder::NegDegrevlex),
            b.leading_monomials(MonomialOrder::NegDegrevlex)
        );
    }
}
