use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::field::{Field, Rat};
use crate::groebner::Ideal;
use crate::poly::{Polynomial, RingRef};

/// A hypersurface germ at the origin, represented by a nonzero polynomial.
/// Derived invariants (initial form, Jacobian ideal, Milnor number) are
/// computed on demand and cached; caches are write-once, so germs can be
/// shared across threads after construction.
#[derive(Debug)]
pub struct Germ<F: Field> {
    poly: Polynomial<F>,
    initial: OnceLock<Polynomial<F>>,
    jacobian: OnceLock<Ideal<F>>,
    cone_singular: OnceLock<Ideal<F>>,
    milnor: OnceLock<Result<ExtInt>>,
}

impl<F: Field> Clone for Germ<F> {
    fn clone(&self) -> Self {
        Germ {
            poly: self.poly.clone(),
            initial: self.initial.clone(),
            jacobian: self.jacobian.clone(),
            cone_singular: self.cone_singular.clone(),
            milnor: self.milnor.clone(),
        }
    }
}

impl<F: Field> PartialEq for Germ<F> {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl<F: Field> Eq for Germ<F> {}

impl<F: Field> Germ<F> {
    pub fn new(poly: Polynomial<F>) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroGerm);
        }
        Ok(Germ {
            poly,
            initial: OnceLock::new(),
            jacobian: OnceLock::new(),
            cone_singular: OnceLock::new(),
            milnor: OnceLock::new(),
        })
    }

    pub fn poly(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn ring(&self) -> &RingRef {
        self.poly.ring()
    }

    /// Multiplicity m(f): the order of vanishing at the origin.
    pub fn multiplicity(&self) -> u32 {
        self.poly.order().expect_finite("order of a nonzero polynomial") as u32
    }

    /// The lowest-degree homogeneous part; its zero set is the tangent cone.
    pub fn initial_form(&self) -> &Polynomial<F> {
        self.initial
            .get_or_init(|| self.poly.initial_form().expect("germ is nonzero"))
    }

    /// The Jacobian ideal (∂f/∂z₁, …, ∂f/∂zₙ).
    pub fn jacobian_ideal(&self) -> &Ideal<F> {
        self.jacobian
            .get_or_init(|| Ideal::new(self.poly.ring(), self.poly.partials()))
    }

    /// Milnor number: local colength of the Jacobian ideal. Infinity means
    /// the singularity is not isolated; callers decide whether that is an
    /// error. Requires the germ to vanish at the origin.
    pub fn milnor_number(&self) -> Result<ExtInt> {
        self.milnor
            .get_or_init(|| {
                if !self.poly.vanishes_at_origin() {
                    return Err(Error::DoesNotVanishAtOrigin);
                }
                Ok(self.jacobian_ideal().colength())
            })
            .clone()
    }

    /// Ideal cutting out Σ, the singular locus of the tangent cone: the
    /// Jacobian ideal of the initial form. In characteristic zero the Euler
    /// identity puts the initial form itself in this ideal, so it is not
    /// listed as a generator.
    pub fn cone_singular_ideal(&self) -> &Ideal<F> {
        self.cone_singular
            .get_or_init(|| Ideal::new(self.poly.ring(), self.initial_form().partials()))
    }

    /// Whether the tangent cone has an isolated singularity at the origin.
    pub fn cone_has_isolated_singularity(&self) -> bool {
        self.cone_singular_ideal()
            .is_zero_dimensional_at_origin()
            .expect("partials of a homogeneous form are homogeneous")
    }
}

impl Germ<Rat> {
    /// Searches for a nonzero rational point of Σ avoiding the hypersurface
    /// `excluded` (when `excluded` is nonzero). Bounded deterministic
    /// search: integer points by growing sup-norm shells, then points with
    /// one coordinate pinned to 1 and the rest rational of bounded height.
    /// `None` means the search was exhausted, not that no point exists.
    pub fn sigma_witness(
        &self,
        excluded: &Polynomial<Rat>,
        height: u32,
    ) -> Option<Vec<Rat>> {
        let gens = self.cone_singular_ideal().generators().to_vec();
        let n = self.ring().nvars();
        let ok = |point: &[Rat]| -> bool {
            gens.iter().all(|g| Field::is_zero(&g.eval(point)))
                && (excluded.is_zero() || !Field::is_zero(&excluded.eval(point)))
        };

        // Integer shells of growing sup-norm.
        for s in 1..=height as i64 {
            let mut point = vec![-s; n];
            loop {
                if point.iter().any(|&c| c.abs() == s) {
                    let rats: Vec<Rat> =
                        point.iter().map(|&c| <Rat as Field>::from_int(c)).collect();
                    if ok(&rats) {
                        return Some(rats);
                    }
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    point[i] += 1;
                    if point[i] <= s {
                        break;
                    }
                    point[i] = -s;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }

        // One coordinate pinned to 1, the others rational of height ≤ H.
        let mut fractions: Vec<Rat> = Vec::new();
        for q in 1..=height as i64 {
            for p in -(height as i64)..=height as i64 {
                let r = Rat::new(BigInt::from(p), BigInt::from(q));
                if !fractions.contains(&r) {
                    fractions.push(r);
                }
            }
        }
        for pinned in 0..n {
            let mut idx = vec![0usize; n - 1];
            loop {
                let mut point: Vec<Rat> = Vec::with_capacity(n);
                let mut it = idx.iter();
                for i in 0..n {
                    if i == pinned {
                        point.push(<Rat as Field>::from_int(1));
                    } else {
                        point.push(fractions[*it.next().unwrap()].clone());
                    }
                }
                if ok(&point) {
                    return Some(point);
                }
                let mut i = 0;
                loop {
                    if i == idx.len() {
                        break;
                    }
                    idx[i] += 1;
                    if idx[i] < fractions.len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == idx.len() {
                    break;
                }
            }
        }
        None
    }
}
