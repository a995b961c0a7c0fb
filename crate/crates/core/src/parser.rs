//! Text forms of polynomials and families.
//!
//! Grammar (whitespace insignificant, no implicit multiplication):
//!
//! ```text
//! expr   := '-'? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := ident | rational | '(' expr ')' | '-' base
//! rational := int ('/' nat)?
//! ```
//!
//! `t` (the deformation parameter) and `a` (a formal constant) are reserved
//! and cannot be declared as ring variables.
//!
//! A family source is a sequence of lines (newline- or `;`-separated, `#`
//! starts a comment):
//!
//! ```text
//! vars: x, y            optional; inferred alphabetically when absent
//! F: x^3 + y^3 + t*x^2  single-expression form, collected by powers of t
//! f: x^3 + y^3          block form
//! g[1]: x^2
//! lambda[1]: t^3 + a*t^2   Greuel form (paired with g[j] lines)
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::{Family, GreuelFamily};
use crate::field::{Field, Rat, RatFuncA};
use crate::poly::{Polynomial, Ring, RingRef};
use crate::unipoly::UniPoly;

pub const RESERVED: [&str; 2] = ["t", "a"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..i];
                toks.push((Tok::Int(digits.parse::<BigInt>().unwrap()), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
            }
            other => {
                return Err(Error::Syntax {
                    offset: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: src.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}

/// Expression tree; offsets point into the source for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var { name: String, offset: usize },
    Rational { value: Rat, offset: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut lx = lex(src)?;
    let e = expr(&mut lx)?;
    if let Some(_tok) = lx.peek() {
        return Err(Error::Syntax {
            offset: lx.offset(),
            message: "unexpected trailing input (implicit multiplication is not allowed)"
                .to_string(),
        });
    }
    Ok(e)
}

fn expr(lx: &mut Lexer) -> Result<Expr> {
    let mut acc = term(lx)?;
    loop {
        if lx.eat(&Tok::Plus) {
            acc = Expr::Add(Box::new(acc), Box::new(term(lx)?));
        } else if lx.eat(&Tok::Minus) {
            acc = Expr::Sub(Box::new(acc), Box::new(term(lx)?));
        } else {
            return Ok(acc);
        }
    }
}

fn term(lx: &mut Lexer) -> Result<Expr> {
    let mut acc = factor(lx)?;
    while lx.eat(&Tok::Star) {
        acc = Expr::Mul(Box::new(acc), Box::new(factor(lx)?));
    }
    Ok(acc)
}

fn factor(lx: &mut Lexer) -> Result<Expr> {
    let b = base(lx)?;
    if lx.eat(&Tok::Caret) {
        let off = lx.offset();
        match lx.bump() {
            Some(Tok::Int(n)) => {
                let e: u32 = n.try_into().map_err(|_| Error::Syntax {
                    offset: off,
                    message: "exponent too large".to_string(),
                })?;
                return Ok(Expr::Pow(Box::new(b), e));
            }
            Some(Tok::Minus) => return Err(Error::NegativeExponent { offset: off }),
            _ => {
                return Err(Error::Syntax {
                    offset: off,
                    message: "expected a non-negative integer exponent".to_string(),
                })
            }
        }
    }
    Ok(b)
}

fn base(lx: &mut Lexer) -> Result<Expr> {
    let off = lx.offset();
    match lx.bump() {
        Some(Tok::Minus) => Ok(Expr::Neg(Box::new(base(lx)?))),
        Some(Tok::Ident(name)) => Ok(Expr::Var { name, offset: off }),
        Some(Tok::Int(n)) => {
            // Rational literal p/q.
            if lx.peek() == Some(&Tok::Slash) {
                lx.pos += 1;
                let doff = lx.offset();
                match lx.bump() {
                    Some(Tok::Int(d)) => {
                        if d == BigInt::from(0) {
                            return Err(Error::Syntax {
                                offset: doff,
                                message: "zero denominator".to_string(),
                            });
                        }
                        Ok(Expr::Rational {
                            value: Rat::new(n, d),
                            offset: off,
                        })
                    }
                    _ => Err(Error::Syntax {
                        offset: doff,
                        message: "expected a denominator".to_string(),
                    }),
                }
            } else {
                Ok(Expr::Rational {
                    value: Rat::from_integer(n),
                    offset: off,
                })
            }
        }
        Some(Tok::LParen) => {
            let e = expr(lx)?;
            if !lx.eat(&Tok::RParen) {
                return Err(Error::Syntax {
                    offset: lx.offset(),
                    message: "expected `)`".to_string(),
                });
            }
            Ok(e)
        }
        _ => Err(Error::Syntax {
            offset: off,
            message: "expected a variable, a number or `(`".to_string(),
        }),
    }
}

fn eval<F: Field>(e: &Expr, ring: &RingRef) -> Result<Polynomial<F>> {
    match e {
        Expr::Var { name, offset } => {
            if let Some(i) = ring.var_index(name) {
                return Ok(Polynomial::var(ring, i));
            }
            if name.len() == 1 {
                if let Some(v) = F::parameter(name.chars().next().unwrap()) {
                    return Ok(Polynomial::constant(ring, v));
                }
            }
            Err(Error::UnknownVariable {
                name: name.clone(),
                offset: *offset,
            })
        }
        Expr::Rational { value, .. } => Ok(Polynomial::constant(ring, F::from_rat(value))),
        Expr::Neg(inner) => Ok(eval::<F>(inner, ring)?.neg()),
        Expr::Add(a, b) => Ok(eval::<F>(a, ring)?.add(&eval::<F>(b, ring)?)),
        Expr::Sub(a, b) => Ok(eval::<F>(a, ring)?.sub(&eval::<F>(b, ring)?)),
        Expr::Mul(a, b) => Ok(eval::<F>(a, ring)?.mul(&eval::<F>(b, ring)?)),
        Expr::Pow(a, e) => Ok(eval::<F>(a, ring)?.pow(*e)),
    }
}

/// Parses an expression into a polynomial of the given ring. Identifiers
/// must be ring variables or a formal parameter of the coefficient field.
pub fn parse_polynomial<F: Field>(src: &str, ring: &RingRef) -> Result<Polynomial<F>> {
    if src.trim().is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "empty expression".to_string(),
        });
    }
    eval(&parse_expr(src)?, ring)
}

/// Canonical text: descending degrevlex terms; `parse(print(p)) = p`.
pub fn print_polynomial<F: Field>(p: &Polynomial<F>) -> String {
    p.to_text()
}

/// A parsed family source: plain over ℚ, plain over ℚ(a), or Greuel form
/// over ℚ(a) (lowered by the caller when a is absent).
#[derive(Debug, Clone)]
pub enum ParsedFamily {
    Plain(Family<Rat>),
    Symbolic(Family<RatFuncA>),
    Greuel(GreuelFamily<RatFuncA>),
}

#[derive(Debug, Default)]
struct FamilySource {
    vars: Option<Vec<String>>,
    big_f: Option<String>,
    f: Option<String>,
    g: BTreeMap<u32, String>,
    lambda: BTreeMap<u32, String>,
    uses_a: bool,
}

fn split_lines(src: &str) -> Vec<String> {
    src.lines()
        .flat_map(|l| l.split(';'))
        .map(|l| match l.find('#') {
            Some(i) => &l[..i],
            None => l,
        })
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

fn indexed_key(key: &str, head: &str) -> Option<Result<u32>> {
    let rest = key.strip_prefix(head)?;
    let inner = rest.strip_prefix('[')?.strip_suffix(']')?;
    Some(inner.parse::<u32>().map_err(|_| Error::Syntax {
        offset: 0,
        message: format!("bad index in `{key}`"),
    }))
}

fn scan_source(src: &str) -> Result<FamilySource> {
    let mut out = FamilySource::default();
    for line in split_lines(src) {
        let (key, value) = match line.split_once(':') {
            Some((k, v)) => (k.trim().to_string(), v.trim().to_string()),
            None => {
                return Err(Error::Syntax {
                    offset: 0,
                    message: format!("expected `key: value` in line `{line}`"),
                })
            }
        };
        if value.is_empty() && key != "vars" {
            return Err(Error::Syntax {
                offset: 0,
                message: format!("empty value for `{key}`"),
            });
        }
        match key.as_str() {
            "vars" => {
                let names: Vec<String> = value
                    .split(',')
                    .map(str::trim)
                    .filter(|v| !v.is_empty())
                    .map(str::to_string)
                    .collect();
                for n in &names {
                    if RESERVED.contains(&n.as_str()) {
                        return Err(Error::Syntax {
                            offset: 0,
                            message: format!("`{n}` is reserved and cannot be a ring variable"),
                        });
                    }
                }
                out.vars = Some(names);
            }
            "F" => out.big_f = Some(value),
            "f" => out.f = Some(value),
            _ => {
                if let Some(k) = indexed_key(&key, "g") {
                    let k = k?;
                    if k == 0 {
                        return Err(Error::Syntax {
                            offset: 0,
                            message: "deformation index must be at least 1".to_string(),
                        });
                    }
                    out.g.insert(k, value);
                } else if let Some(j) = indexed_key(&key, "lambda") {
                    let j = j?;
                    if j == 0 {
                        return Err(Error::Syntax {
                            offset: 0,
                            message: "lambda index must be at least 1".to_string(),
                        });
                    }
                    out.lambda.insert(j, value);
                } else if key.starts_with("expect.") || key == "name" || key == "describe" {
                    // Corpus metadata lines are handled by the corpus layer.
                } else {
                    return Err(Error::Syntax {
                        offset: 0,
                        message: format!("unknown directive `{key}`"),
                    });
                }
            }
        }
    }
    // Does the source use the formal constant a?
    for text in out
        .big_f
        .iter()
        .chain(out.f.iter())
        .chain(out.g.values())
        .chain(out.lambda.values())
    {
        let lx = lex(text)?;
        if lx
            .toks
            .iter()
            .any(|(t, _)| matches!(t, Tok::Ident(n) if n == "a"))
        {
            out.uses_a = true;
        }
    }
    Ok(out)
}

fn collect_idents(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Var { name, .. } => {
            if !out.contains(name) {
                out.push(name.clone());
            }
        }
        Expr::Rational { .. } => {}
        Expr::Neg(a) => collect_idents(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            collect_idents(a, out);
            collect_idents(b, out);
        }
        Expr::Pow(a, _) => collect_idents(a, out),
    }
}

fn infer_vars(source: &FamilySource) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for text in source
        .big_f
        .iter()
        .chain(source.f.iter())
        .chain(source.g.values())
        .chain(source.lambda.values())
    {
        collect_idents(&parse_expr(text)?, &mut names);
    }
    let mut vars: Vec<String> = names
        .into_iter()
        .filter(|n| !RESERVED.contains(&n.as_str()))
        .collect();
    vars.sort();
    Ok(vars)
}

fn build_plain<F: Field>(source: &FamilySource, ring: &RingRef) -> Result<Family<F>> {
    if let Some(big_f) = &source.big_f {
        // Parse in the (z, t) ring and collect by powers of t.
        let zt = ring.extended("t");
        let total: Polynomial<F> = parse_polynomial(big_f, &zt)?;
        let mut parts = total.collect_by_last_var(ring);
        let f = parts.remove(&0).ok_or(Error::TDegreeZeroMissing)?;
        let defs: BTreeMap<u32, Polynomial<F>> = parts.into_iter().collect();
        Family::new(ring, f, defs)
    } else {
        let f_src = source.f.as_ref().ok_or(Error::EmptyFamily)?;
        let f: Polynomial<F> = parse_polynomial(f_src, ring)?;
        let mut defs = BTreeMap::new();
        for (k, text) in &source.g {
            defs.insert(*k, parse_polynomial(text, ring)?);
        }
        Family::new(ring, f, defs)
    }
}

fn build_greuel(source: &FamilySource, ring: &RingRef) -> Result<GreuelFamily<RatFuncA>> {
    let f_src = source.f.as_ref().ok_or(Error::TDegreeZeroMissing)?;
    let f: Polynomial<RatFuncA> = parse_polynomial(f_src, ring)?;
    if source.lambda.keys().ne(source.g.keys()) {
        return Err(Error::Syntax {
            offset: 0,
            message: "lambda[j] and g[j] lines must use the same indices".to_string(),
        });
    }
    let t_ring = Ring::new(["t"]);
    let mut pairs = Vec::new();
    for (j, lam_src) in &source.lambda {
        let lam_poly: Polynomial<RatFuncA> = parse_polynomial(lam_src, &t_ring)?;
        let mut coeffs: Vec<RatFuncA> = Vec::new();
        for (m, c) in lam_poly.terms() {
            let k = m.exp(0) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, <RatFuncA as Field>::zero());
            }
            coeffs[k] = c.clone();
        }
        let lambda = UniPoly::new(coeffs);
        let g: Polynomial<RatFuncA> = parse_polynomial(&source.g[j], ring)?;
        pairs.push((lambda, g));
    }
    GreuelFamily::new(ring, f, pairs)
}

/// Parses a family source (file contents or inline text). The `F:` form is
/// expanded and collected by powers of t; `lambda[j]`/`g[j]` lines build a
/// Greuel-form family over ℚ(a). Plain sources stay over ℚ unless they
/// mention the formal constant a.
pub fn parse_family(src: &str) -> Result<ParsedFamily> {
    let source = scan_source(src)?;
    if source.big_f.is_none()
        && source.f.is_none()
        && source.g.is_empty()
        && source.lambda.is_empty()
    {
        return Err(Error::EmptyFamily);
    }
    if source.big_f.is_some() && (source.f.is_some() || !source.g.is_empty()) {
        return Err(Error::Syntax {
            offset: 0,
            message: "give either a single `F:` expression or `f:`/`g[k]:` blocks, not both"
                .to_string(),
        });
    }
    if !source.lambda.is_empty() && source.big_f.is_some() {
        return Err(Error::Syntax {
            offset: 0,
            message: "lambda[j] lines require the block form with `f:`".to_string(),
        });
    }
    if source.lambda.is_empty() && !source.g.is_empty() && source.f.is_none() {
        return Err(Error::TDegreeZeroMissing);
    }
    let vars = match &source.vars {
        Some(v) => v.clone(),
        None => infer_vars(&source)?,
    };
    if vars.is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "no ring variables declared or inferred".to_string(),
        });
    }
    let ring = Ring::new(vars);
    if !source.lambda.is_empty() {
        return Ok(ParsedFamily::Greuel(build_greuel(&source, &ring)?));
    }
    if source.uses_a {
        Ok(ParsedFamily::Symbolic(build_plain::<RatFuncA>(
            &source, &ring,
        )?))
    } else {
        Ok(ParsedFamily::Plain(build_plain::<Rat>(&source, &ring)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extint::ExtInt;

    #[test]
    fn parses_reference_polynomial() {
        let r = Ring::new(["x", "y", "z"]);
        let p: Polynomial<Rat> = parse_polynomial("x^5 + z^15 + y^7*z", &r).unwrap();
        assert_eq!(p.nterms(), 3);
        assert_eq!(p.order(), ExtInt::Finite(5));
    }

    #[test]
    fn expansion_and_cancellation() {
        let r = Ring::new(["x", "y"]);
        let p: Polynomial<Rat> =
            parse_polynomial("(x + y)^2 - x^2 - 2*x*y", &r).unwrap();
        assert_eq!(p.to_text(), "y^2");
    }

    #[test]
    fn negative_exponent_is_rejected() {
        let r = Ring::new(["x"]);
        assert!(matches!(
            parse_polynomial::<Rat>("x^-1", &r),
            Err(Error::NegativeExponent { .. })
        ));
    }

    #[test]
    fn unknown_variable_and_syntax_errors_carry_offsets() {
        let r = Ring::new(["x"]);
        match parse_polynomial::<Rat>("x + q", &r) {
            Err(Error::UnknownVariable { name, offset }) => {
                assert_eq!(name, "q");
                assert_eq!(offset, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial::<Rat>("x + ", &r),
            Err(Error::Syntax { .. })
        ));
        // Implicit multiplication is not allowed.
        assert!(matches!(
            parse_polynomial::<Rat>("2 x", &r),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn unary_minus_binds_tighter_than_plus() {
        let r = Ring::new(["x", "y"]);
        let p: Polynomial<Rat> = parse_polynomial("-x + y", &r).unwrap();
        assert_eq!(p.to_text(), "-x + y");
        let q: Polynomial<Rat> = parse_polynomial("x - -2", &r).unwrap();
        assert_eq!(q.to_text(), "x + 2");
        let cube: Polynomial<Rat> = parse_polynomial("1/2*x - 3/4", &r).unwrap();
        assert_eq!(cube.to_text(), "1/2*x - 3/4");
    }

    #[test]
    fn family_from_single_expression() {
        let fam = match parse_family("F: x^3 + y^3 + t*x^2").unwrap() {
            ParsedFamily::Plain(f) => f,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(fam.base_germ().poly().to_text(), "x^3 + y^3");
        assert_eq!(fam.support(), vec![1]);
        assert_eq!(fam.deformation(1).unwrap().poly().to_text(), "x^2");
    }

    #[test]
    fn family_collects_missing_powers() {
        let fam = match parse_family("F: x^4 + y^4 + t^2*y^3").unwrap() {
            ParsedFamily::Plain(f) => f,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(fam.support(), vec![2]);
        assert_eq!(fam.deformation(2).unwrap().poly().to_text(), "y^3");
    }

    #[test]
    fn family_without_constant_part_is_rejected() {
        assert_eq!(
            parse_family("F: t*x^2").unwrap_err(),
            Error::TDegreeZeroMissing
        );
        assert_eq!(parse_family("vars: x").unwrap_err(), Error::EmptyFamily);
    }

    #[test]
    fn block_form_and_explicit_vars() {
        let src = "vars: x, y\nf: x^3 + y^3\ng[1]: x^2\ng[2]: y^3";
        let fam = match parse_family(src).unwrap() {
            ParsedFamily::Plain(f) => f,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(fam.support(), vec![1, 2]);
    }

    #[test]
    fn greuel_form_parses_over_the_constant_field() {
        let src = "vars: x, y\nf: x^4 + y^4\n\
                   lambda[1]: t^3 + a*t^2; g[1]: x*y + x^3 + y^4\n\
                   lambda[2]: t^4 + t^2;  g[2]: -a*x*y + y^3\n\
                   lambda[3]: a*t^4 - t^3; g[3]: x*y + x^3 + x^4";
        let gf = match parse_family(src).unwrap() {
            ParsedFamily::Greuel(g) => g,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(gf.pairs().len(), 3);
        assert_eq!(gf.nu(0), 2);
        assert_eq!(gf.nu(1), 2);
        assert_eq!(gf.nu(2), 3);
        // Regrouping reproduces the collected coefficients of t^2..t^4.
        let fam = gf.regroup().unwrap();
        assert_eq!(fam.support(), vec![2, 3, 4]);
    }

    #[test]
    fn print_parse_round_trip() {
        let r = Ring::new(["x", "y"]);
        for src in [
            "y^2",
            "x^2*y + y^3",
            "-x - 2",
            "1/2*x^2 - 7*y + 1/3",
            "x^2*y^3 + x*y + y + 1/5*x",
        ] {
            let p: Polynomial<Rat> = parse_polynomial(src, &r).unwrap();
            let printed = print_polynomial(&p);
            let back: Polynomial<Rat> = parse_polynomial(&printed, &r).unwrap();
            assert_eq!(back, p, "round trip failed for {src}");
        }
        assert_eq!(print_polynomial(&Polynomial::<Rat>::zero(&r)), "0");
    }

    #[test]
    fn family_text_round_trip() {
        let src = "F: x^3 + y^3 + t*x^2 + t^2*(y^3 - x^3)";
        let fam = match parse_family(src).unwrap() {
            ParsedFamily::Plain(f) => f,
            other => panic!("unexpected {other:?}"),
        };
        let printed = format!("F: {}", fam.to_text());
        let fam2 = match parse_family(&printed).unwrap() {
            ParsedFamily::Plain(f) => f,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(fam.total_polynomial(), fam2.total_polynomial());
    }

    #[test]
    fn symbolic_plain_family_over_a() {
        let fam = match parse_family("F: x^3 + y^3 + t*(a*x^2)").unwrap() {
            ParsedFamily::Symbolic(f) => f,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(fam.support(), vec![1]);
        assert_eq!(fam.m(), 3);
    }
}
