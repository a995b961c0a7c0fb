use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::field::{Field, Rat};
use crate::poly::Polynomial;
use crate::unipoly::UniPoly;

/// Default cap on the degree of arc components. Every arc appearing in the
/// certificate constructions is linear; the cap only guards user-supplied
/// arcs against runaway composition degrees.
pub const DEFAULT_ARC_DEGREE_CAP: usize = 8;

/// A polynomial arc germ γ(u) = (z₁(u), …, zₙ(u), t(u)) through the origin.
/// Valuations of composed functions along arcs are the raw material of the
/// Lê–Saito–Teissier refutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCurve {
    z: Vec<UniPoly<Rat>>,
    t: UniPoly<Rat>,
}

impl ArcCurve {
    pub fn new(z: Vec<UniPoly<Rat>>, t: UniPoly<Rat>) -> Result<Self> {
        Self::with_degree_cap(z, t, DEFAULT_ARC_DEGREE_CAP)
    }

    pub fn with_degree_cap(
        z: Vec<UniPoly<Rat>>,
        t: UniPoly<Rat>,
        cap: usize,
    ) -> Result<Self> {
        if z.is_empty() {
            return Err(Error::InvalidArc("no z components".into()));
        }
        let all = z.iter().chain(std::iter::once(&t));
        let mut any_nonzero = false;
        for c in all {
            if let Some(d) = c.degree() {
                any_nonzero = true;
                if d > cap {
                    return Err(Error::InvalidArc(format!(
                        "component degree {d} exceeds cap {cap}"
                    )));
                }
            }
            if !c.coeff(0).is_zero() {
                return Err(Error::InvalidArc(
                    "components must vanish at u = 0".into(),
                ));
            }
        }
        if !any_nonzero {
            return Err(Error::InvalidArc("all components are zero".into()));
        }
        Ok(ArcCurve { z, t })
    }

    /// The linear arc u ↦ (u·z₀, u·t₀).
    pub fn linear(z0: &[Rat], t0: &Rat) -> Result<Self> {
        ArcCurve::new(
            z0.iter()
                .map(|c| UniPoly::monomial(c.clone(), 1))
                .collect(),
            UniPoly::monomial(t0.clone(), 1),
        )
    }

    /// The arc u ↦ (u^p·z₀, u^q·t₀) with independent exponents. Not used by
    /// the default certificate search; exposed for experimentation.
    pub fn monomial_arc(z0: &[Rat], p: usize, t0: &Rat, q: usize) -> Result<Self> {
        if p == 0 || (q == 0 && !t0.is_zero()) {
            return Err(Error::InvalidArc(
                "monomial arc exponents must be positive".into(),
            ));
        }
        ArcCurve::new(
            z0.iter()
                .map(|c| UniPoly::monomial(c.clone(), p))
                .collect(),
            UniPoly::monomial(t0.clone(), q),
        )
    }

    pub fn nz(&self) -> usize {
        self.z.len()
    }

    pub fn z_components(&self) -> &[UniPoly<Rat>] {
        &self.z
    }

    pub fn t_component(&self) -> &UniPoly<Rat> {
        &self.t
    }

    /// Minimal u-order over all components.
    pub fn min_component_order(&self) -> ExtInt {
        self.z
            .iter()
            .chain(std::iter::once(&self.t))
            .map(UniPoly::u_order)
            .min()
            .unwrap()
    }

    /// All components in substitution order (z components, then t).
    pub fn components(&self) -> Vec<UniPoly<Rat>> {
        let mut all = self.z.clone();
        all.push(self.t.clone());
        all
    }
}

/// Exact composition p(z(u), t(u)) for p in the (z, t) ring. Realizes the
/// arc-order functions: `substitute_arc(p, γ).u_order()` is V(p), and
/// applying it to a polynomial without t-dependence gives v(p).
pub fn substitute_arc(p: &Polynomial<Rat>, arc: &ArcCurve) -> Result<UniPoly<Rat>> {
    if p.ring().nvars() != arc.nz() + 1 {
        return Err(Error::DimensionMismatch {
            expected: p.ring().nvars(),
            got: arc.nz() + 1,
        });
    }
    p.substitute_components(&arc.components())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn rat(n: i64) -> Rat {
        <Rat as Field>::from_int(n)
    }

    #[test]
    fn rejects_zero_and_nonvanishing_arcs() {
        assert!(matches!(
            ArcCurve::new(vec![UniPoly::zero(), UniPoly::zero()], UniPoly::zero()),
            Err(Error::InvalidArc(_))
        ));
        assert!(matches!(
            ArcCurve::new(vec![UniPoly::from_ints(&[1, 1])], UniPoly::zero()),
            Err(Error::InvalidArc(_))
        ));
        assert!(matches!(
            ArcCurve::with_degree_cap(
                vec![UniPoly::from_ints(&[0, 0, 0, 1])],
                UniPoly::zero(),
                2
            ),
            Err(Error::InvalidArc(_))
        ));
    }

    #[test]
    fn substitute_arc_checks_dimensions() {
        let r = Ring::new(["x", "y", "t"]);
        let p = Polynomial::var(&r, 0);
        let arc = ArcCurve::linear(&[rat(1)], &rat(0)).unwrap();
        assert!(matches!(
            substitute_arc(&p, &arc),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn linear_arc_composition() {
        // F_t of x^3+y^3+t*x^2 is x^2; along (u, u, 0) it is u^2.
        let r = Ring::new(["x", "y", "t"]);
        let x = Polynomial::<Rat>::var(&r, 0);
        let p = x.mul(&x);
        let arc = ArcCurve::linear(&[rat(1), rat(1)], &rat(0)).unwrap();
        let q = substitute_arc(&p, &arc).unwrap();
        assert_eq!(q.u_order(), ExtInt::Finite(2));
    }
}
