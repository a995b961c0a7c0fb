use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Power product of the ring variables, stored as a dense exponent vector
/// with the total degree cached. Ambient dimension is fixed per ring and
/// small (n ≤ 6 in every intended use), so dense vectors keep the ordering
/// comparisons in the basis kernels branch-light.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 6]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn from_exps(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: SmallVec<[u32; 6]> = exps.into_iter().collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps: SmallVec<[u32; 6]> = smallvec::smallvec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + rhs.deg,
        }
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        self.deg <= rhs.deg && self.exps.iter().zip(&rhs.exps).all(|(a, b)| a <= b)
    }

    /// rhs / self; caller guarantees divisibility.
    pub fn div_into(&self, rhs: &Self) -> Self {
        debug_assert!(self.divides(rhs));
        Monomial {
            exps: rhs
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
            deg: rhs.deg - self.deg,
        }
    }

    pub fn lcm(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        let exps: SmallVec<[u32; 6]> = self
            .exps
            .iter()
            .zip(&rhs.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime_with(&self, rhs: &Self) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If the monomial is a pure power of a single variable (or 1), returns
    /// `(variable index, exponent)`; 1 reports variable 0 with exponent 0.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut hit = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if hit.is_some() {
                    return None;
                }
                hit = Some((i, e));
            }
        }
        Some(hit.unwrap_or((0, 0)))
    }

    /// Appends extra zero exponents (ring extension).
    pub fn extend(&self, extra: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps, deg: self.deg }
    }

    /// Graded reverse lexicographic: higher total degree wins; on ties the
    /// monomial with the smaller exponent at the last differing variable
    /// is larger.
    pub fn cmp_degrevlex(&self, rhs: &Self) -> Ordering {
        match self.deg.cmp(&rhs.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&rhs.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Local (negative) graded reverse lexicographic: lower total degree
    /// wins, ties broken as in degrevlex. 1 is the largest monomial.
    pub fn cmp_negdegrevlex(&self, rhs: &Self) -> Ordering {
        match rhs.deg.cmp(&self.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&rhs.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

// The intrinsic order (graded, then exponent-lexicographic) fixes the
// canonical term layout inside `Polynomial`; it is unrelated to the
// division orders used by the basis kernels.
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The two division orders the kernels understand: global graded reverse
/// lexicographic (Gröbner bases) and its local negative variant (standard
/// bases at the origin).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Degrevlex,
    NegDegrevlex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Degrevlex => a.cmp_degrevlex(b),
            MonomialOrder::NegDegrevlex => a.cmp_negdegrevlex(b),
        }
    }

    pub fn is_global(&self) -> bool {
        matches!(self, MonomialOrder::Degrevlex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Degrevlex => write!(f, "degrevlex"),
            MonomialOrder::NegDegrevlex => write!(f, "negdegrevlex"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.iter().copied())
    }

    #[test]
    fn one_is_smallest_globally_largest_locally() {
        let one = Monomial::one(2);
        let x = m(&[1, 0]);
        assert_eq!(MonomialOrder::Degrevlex.cmp(&one, &x), Ordering::Less);
        assert_eq!(MonomialOrder::NegDegrevlex.cmp(&one, &x), Ordering::Greater);
    }

    #[test]
    fn degrevlex_tie_break() {
        // x^2*y vs x*y^2: same degree, last differing exponent favors x^2*y.
        let a = m(&[2, 1]);
        let b = m(&[1, 2]);
        assert_eq!(MonomialOrder::Degrevlex.cmp(&a, &b), Ordering::Greater);
        // Orders are compatible with multiplication.
        let c = m(&[0, 3]);
        assert_eq!(
            MonomialOrder::Degrevlex.cmp(&a.mul(&c), &b.mul(&c)),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::NegDegrevlex.cmp(&a.mul(&c), &b.mul(&c)),
            Ordering::Greater
        );
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 1]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.div_into(&b), m(&[1, 2]));
        assert_eq!(a.lcm(&m(&[0, 4])), m(&[1, 4]));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m(&[0, 3]).pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 3]).pure_power(), None);
        assert_eq!(Monomial::one(2).pure_power(), Some((0, 0)));
    }
}
