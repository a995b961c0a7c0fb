use std::fmt;

use crate::extint::ExtInt;
use crate::field::Field;

/// Dense univariate polynomial over a field, used for arc components
/// (polynomials in `u`) and for the `λ_j(t)` coefficients of Greuel-form
/// families. `coeffs[i]` is the coefficient of the i-th power; trailing
/// zeros are trimmed, so the leading coefficient is nonzero unless the
/// polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The variable x itself.
    pub fn var() -> Self {
        UniPoly::monomial(F::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; infinity for the zero
    /// polynomial. This is the valuation `V(·)` of arc analysis.
    pub fn u_order(&self) -> ExtInt {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => ExtInt::Finite(k as u64),
            None => ExtInt::Infinity,
        }
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = UniPoly::one();
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

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "univariate division by zero");
        let d = rhs.degree().unwrap();
        let lc_inv = rhs.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.leading_coeff().unwrap().mul(&lc_inv);
            let k = rd - d;
            quot[k] = c.clone();
            let mut coeffs = rem.coeffs;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[k + j] = coeffs[k + j].sub(&c.mul(b));
            }
            rem = UniPoly::new(coeffs);
        }
        (UniPoly::new(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }

    /// Monic scalar multiple.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Monic least common multiple.
    pub fn lcm(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        self.mul(rhs).div_exact(&self.gcd(rhs)).monic()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with an explicit variable name, highest power first.
    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mag_atom = !mag.contains(['+', '-', ' ']);
            match k {
                0 => {
                    if mag_atom {
                        out.push_str(&mag);
                    } else {
                        out.push_str(&format!("({mag})"));
                    }
                }
                _ => {
                    if mag != "1" {
                        if mag_atom {
                            out.push_str(&mag);
                        } else {
                            out.push_str(&format!("({mag})"));
                        }
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_var("u"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    type P = UniPoly<Rat>;

    #[test]
    fn u_order_examples() {
        // u^2 + u^5
        let p = P::from_ints(&[0, 0, 1, 0, 0, 1]);
        assert_eq!(p.u_order(), ExtInt::Finite(2));
        assert_eq!(P::zero().u_order(), ExtInt::Infinity);
        assert_eq!(P::from_ints(&[0, 3]).u_order(), ExtInt::Finite(1));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = P::from_ints(&[1, 0, -3, 4, 2]);
        let b = P::from_ints(&[2, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = P::from_ints(&[1, 1]).mul(&P::from_ints(&[-2, 1]));
        let b = P::from_ints(&[1, 1]).mul(&P::from_ints(&[3, 1]));
        assert_eq!(a.gcd(&b), P::from_ints(&[1, 1]));
    }

    #[test]
    fn display_descending() {
        let p = P::from_ints(&[-2, 0, 1]);
        assert_eq!(p.to_string_with_var("t"), "t^2 - 2");
    }
}
