use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::unipoly::UniPoly;

/// Exact rational numbers, the base coefficient field.
pub type Rat = num_rational::BigRational;

/// An abstract computable field. Implemented for ℚ and for the rational
/// function fields ℚ(t) and ℚ(a).
pub trait Field:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;
    fn from_rat(q: &Rat) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero field element"))
    }

    /// The adjoined formal parameter with the given name, if this field has
    /// one. ℚ has none; ℚ(t) answers to `t`, ℚ(a) to `a`.
    fn parameter(name: char) -> Option<Self> {
        let _ = name;
        None
    }

    /// The rational value of this element if it is a constant.
    fn to_rat(&self) -> Option<Rat>;

    /// A nonzero factor `c` such that dividing every coefficient by `c`
    /// yields the canonical primitive scale (integral, content one, first
    /// nonzero coefficient "positive"). The basis kernels divide polynomials
    /// by this to control coefficient growth.
    fn content(coeffs: &[Self]) -> Self;

    /// If the element should print with a leading minus, returns the
    /// positive magnitude; `None` means print as-is.
    fn display_negate(&self) -> Option<Self>;
}

fn rat_content(coeffs: &[Rat]) -> Rat {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    let mut sign_neg = None;
    for c in coeffs {
        if Zero::is_zero(c) {
            continue;
        }
        if sign_neg.is_none() {
            sign_neg = Some(c.numer().is_negative());
        }
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    if sign_neg.is_none() {
        return <Rat as One>::one();
    }
    let mut content = Rat::new(num_gcd, den_lcm);
    if sign_neg == Some(true) {
        content = -content;
    }
    content
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn content(coeffs: &[Self]) -> Self {
        rat_content(coeffs)
    }
    fn display_negate(&self) -> Option<Self> {
        self.is_negative().then(|| -self)
    }
}

/// Marker for the formal parameter adjoined by a rational function field.
pub trait FormalParam:
    Clone + Copy + PartialEq + Eq + fmt::Debug + Send + Sync + 'static
{
    const NAME: char;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamT;
impl FormalParam for ParamT {
    const NAME: char = 't';
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamA;
impl FormalParam for ParamA {
    const NAME: char = 'a';
}

/// Rational functions in one formal parameter over ℚ, stored as a reduced
/// fraction with monic denominator. The deformation parameter field ℚ(t)
/// and the constant field ℚ(a) of coefficient regrouping are the two
/// instantiations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc<P: FormalParam> {
    num: UniPoly<Rat>,
    den: UniPoly<Rat>,
    _p: PhantomData<P>,
}

pub type RatFuncT = RatFunc<ParamT>;
pub type RatFuncA = RatFunc<ParamA>;

impl<P: FormalParam> RatFunc<P> {
    pub fn new(num: UniPoly<Rat>, den: UniPoly<Rat>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: UniPoly::zero(),
                den: UniPoly::one(),
                _p: PhantomData,
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let lc = den.leading_coeff().unwrap().clone();
        if !Field::is_one(&lc) {
            let inv = Field::inv(&lc).unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc {
            num,
            den,
            _p: PhantomData,
        }
    }

    pub fn from_poly(num: UniPoly<Rat>) -> Self {
        RatFunc::new(num, UniPoly::one())
    }

    /// The parameter itself.
    pub fn gen() -> Self {
        RatFunc::from_poly(UniPoly::var())
    }

    pub fn numer(&self) -> &UniPoly<Rat> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<Rat> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Evaluates at a rational parameter value; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

impl<P: FormalParam> fmt::Display for RatFunc<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = P::NAME.to_string();
        if self.is_polynomial() {
            write!(f, "{}", self.num.to_string_with_var(&var))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.to_string_with_var(&var),
                self.den.to_string_with_var(&var)
            )
        }
    }
}

impl<P: FormalParam> Field for RatFunc<P> {
    fn zero() -> Self {
        RatFunc::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.degree() == Some(0) && self.num == UniPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
            _p: PhantomData,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_poly(UniPoly::constant(<Rat as Field>::from_int(n)))
    }
    fn from_rat(q: &Rat) -> Self {
        RatFunc::from_poly(UniPoly::constant(q.clone()))
    }
    fn parameter(name: char) -> Option<Self> {
        (name == P::NAME).then(RatFunc::gen)
    }
    fn to_rat(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(<Rat as Field>::zero());
        }
        if self.num.degree() == Some(0) && self.den.degree() == Some(0) {
            return Some(self.num.coeff(0) / self.den.coeff(0));
        }
        None
    }
    fn content(coeffs: &[Self]) -> Self {
        let nonzero: Vec<&Self> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Field::one();
        }
        let mut den_lcm = UniPoly::one();
        for c in &nonzero {
            den_lcm = den_lcm.lcm(&c.den);
        }
        let mut num_gcd = UniPoly::zero();
        for c in &nonzero {
            num_gcd = num_gcd.gcd(&c.num);
        }
        // Dividing by num_gcd/den_lcm clears denominators and strips the
        // common polynomial factor; what remains is a rational rescale.
        let scale = RatFunc::<P>::new(num_gcd, den_lcm);
        let mut residual_coeffs: Vec<Rat> = Vec::new();
        for c in &nonzero {
            let reduced = c.div(&scale);
            debug_assert!(reduced.is_polynomial());
            residual_coeffs.extend(reduced.num.coeffs().iter().cloned());
        }
        let rc = rat_content(&residual_coeffs);
        scale.mul(&RatFunc::from_rat(&rc))
    }
    fn display_negate(&self) -> Option<Self> {
        let lc = self.num.leading_coeff()?;
        lc.is_negative().then(|| self.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpoly(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn field_axioms_rat() {
        let vals: Vec<Rat> = [(3, 4), (-7, 2), (5, 1)]
            .iter()
            .map(|&(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        for a in &vals {
            assert!(Field::is_zero(&Field::add(a, &Field::neg(a))));
            assert!(Field::is_one(&Field::mul(a, &Field::inv(a).unwrap())));
        }
    }

    #[test]
    fn field_axioms_ratfunc() {
        let a = RatFuncT::new(tpoly(&[1, 2]), tpoly(&[3, 0, 1]));
        assert!(a.add(&a.neg()).is_zero());
        assert!(Field::is_one(&a.mul(&a.inv().unwrap())));
    }

    #[test]
    fn ratfunc_normalizes() {
        // (t^2 - 1)/(2t - 2) = (t + 1)/2
        let r = RatFuncT::new(tpoly(&[-1, 0, 1]), tpoly(&[-2, 2]));
        assert_eq!(r.numer(), &tpoly(&[1, 1]).scale(&Rat::new(1.into(), 2.into())));
        assert_eq!(r.denom(), &UniPoly::one());
        assert_eq!(r.to_string(), "1/2*t + 1/2");
    }

    #[test]
    fn ratfunc_eval_avoids_poles() {
        let r = RatFuncT::new(tpoly(&[1]), tpoly(&[-1, 1])); // 1/(t-1)
        assert!(r.eval(&<Rat as Field>::from_int(1)).is_none());
        assert_eq!(
            r.eval(&<Rat as Field>::from_int(3)).unwrap(),
            Rat::new(1.into(), 2.into())
        );
    }

    #[test]
    fn content_rat() {
        let coeffs: Vec<Rat> = vec![
            Rat::new((-4).into(), 3.into()),
            Rat::new(2.into(), 1.into()),
        ];
        let c = <Rat as Field>::content(&coeffs);
        // Dividing by the content gives integers with gcd 1, first one positive.
        let scaled: Vec<Rat> = coeffs.iter().map(|x| x / &c).collect();
        assert_eq!(scaled[0], <Rat as Field>::from_int(2));
        assert_eq!(scaled[1], <Rat as Field>::from_int(-3));
    }

    #[test]
    fn parameter_lookup() {
        assert!(<Rat as Field>::parameter('t').is_none());
        assert!(RatFuncT::parameter('t').is_some());
        assert!(RatFuncT::parameter('a').is_none());
        assert!(RatFuncA::parameter('a').is_some());
    }
}
