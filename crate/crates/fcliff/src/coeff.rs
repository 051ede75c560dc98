//! Coefficient arithmetic shared by all three algebras.
//!
//! Coefficients come in two modes: exact symbolic values (rational linear
//! combinations of named real symbols such as one- and two-electron
//! integrals, together with powers of i and an exact sqrt2 token) and
//! complex floating point. Mixing the two coerces to float.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{AlgebraKind, Error, Result};

pub type Rational = num_rational::Rational64;

/// Numeric values for the named symbols of an exact coefficient.
pub type SymbolBindings = BTreeMap<String, f64>;

/// The distinguished exact symbol with the rewrite rule sqrt2 * sqrt2 -> 2.
pub const SQRT2: &str = "sqrt2";

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Product of named real symbols, times an optional exact sqrt2 factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    symbols: BTreeMap<String, u32>,
    sqrt2: bool,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn symbol(name: &str) -> Self {
        if name == SQRT2 {
            return Monomial {
                symbols: BTreeMap::new(),
                sqrt2: true,
            };
        }
        let mut symbols = BTreeMap::new();
        symbols.insert(name.to_string(), 1);
        Monomial {
            symbols,
            sqrt2: false,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.symbols.is_empty() && !self.sqrt2
    }

    /// Multiply two monomials; the rational carry absorbs sqrt2 * sqrt2 -> 2.
    fn mul(&self, other: &Monomial) -> (Monomial, Rational) {
        let mut symbols = self.symbols.clone();
        for (s, p) in &other.symbols {
            *symbols.entry(s.clone()).or_insert(0) += p;
        }
        let carry = if self.sqrt2 && other.sqrt2 {
            Rational::from_integer(2)
        } else {
            Rational::one()
        };
        (
            Monomial {
                symbols,
                sqrt2: self.sqrt2 ^ other.sqrt2,
            },
            carry,
        )
    }

    fn eval(&self, bindings: &SymbolBindings) -> Result<f64> {
        let mut v = if self.sqrt2 {
            std::f64::consts::SQRT_2
        } else {
            1.0
        };
        for (s, p) in &self.symbols {
            let b = bindings
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnboundSymbol(s.clone()))?;
            v *= b.powi(*p as i32);
        }
        Ok(v)
    }

    pub fn factors(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.sqrt2 {
            out.push(SQRT2.to_string());
        }
        for (s, p) in &self.symbols {
            if *p == 1 {
                out.push(s.clone());
            } else {
                out.push(format!("{s}^{p}"));
            }
        }
        out
    }
}

/// Rational linear combination of monomials. The real scalar ring of the
/// exact coefficient mode.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymbolicCoeff {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymbolicCoeff {
    pub fn zero() -> Self {
        SymbolicCoeff::default()
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = SymbolicCoeff::zero();
        c.add_term(Monomial::unit(), r);
        c
    }

    pub fn from_symbol(name: &str) -> Self {
        let mut c = SymbolicCoeff::zero();
        c.add_term(Monomial::symbol(name), Rational::one());
        c
    }

    pub fn add_term(&mut self, mono: Monomial, r: Rational) {
        if r.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += r;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no named symbol occurs (rational plus sqrt2 terms only).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.symbols.is_empty())
    }

    pub fn add(&self, other: &SymbolicCoeff) -> SymbolicCoeff {
        let mut out = self.clone();
        for (m, r) in &other.terms {
            out.add_term(m.clone(), *r);
        }
        out
    }

    pub fn neg(&self) -> SymbolicCoeff {
        SymbolicCoeff {
            terms: self.terms.iter().map(|(m, r)| (m.clone(), -*r)).collect(),
        }
    }

    pub fn sub(&self, other: &SymbolicCoeff) -> SymbolicCoeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymbolicCoeff) -> SymbolicCoeff {
        let mut out = SymbolicCoeff::zero();
        for (ma, ra) in &self.terms {
            for (mb, rb) in &other.terms {
                let (m, carry) = ma.mul(mb);
                out.add_term(m, ra * rb * carry);
            }
        }
        out
    }

    pub fn scale(&self, r: Rational) -> SymbolicCoeff {
        if r.is_zero() {
            return SymbolicCoeff::zero();
        }
        SymbolicCoeff {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * r)).collect(),
        }
    }

    pub fn eval(&self, bindings: &SymbolBindings) -> Result<f64> {
        let mut v = 0.0;
        for (m, r) in &self.terms {
            v += r.to_f64().unwrap() * m.eval(bindings)?;
        }
        Ok(v)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }
}

/// Exact complex coefficient: a pair of real symbolic parts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExactComplex {
    pub re: SymbolicCoeff,
    pub im: SymbolicCoeff,
}

impl ExactComplex {
    pub fn zero() -> Self {
        ExactComplex::default()
    }

    pub fn one() -> Self {
        ExactComplex {
            re: SymbolicCoeff::from_rational(Rational::one()),
            im: SymbolicCoeff::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &ExactComplex) -> ExactComplex {
        ExactComplex {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn neg(&self) -> ExactComplex {
        ExactComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, other: &ExactComplex) -> ExactComplex {
        ExactComplex {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn conj(&self) -> ExactComplex {
        ExactComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// Multiply by i^k.
    pub fn mul_i_pow(&self, k: u8) -> ExactComplex {
        match k % 4 {
            0 => self.clone(),
            1 => ExactComplex {
                re: self.im.neg(),
                im: self.re.clone(),
            },
            2 => self.neg(),
            _ => ExactComplex {
                re: self.im.clone(),
                im: self.re.neg(),
            },
        }
    }

    pub fn eval(&self, bindings: &SymbolBindings) -> Result<Complex64> {
        Ok(Complex64::new(
            self.re.eval(bindings)?,
            self.im.eval(bindings)?,
        ))
    }
}

/// A coefficient in either exact or floating-point mode.
///
/// Arithmetic between the two modes coerces to float; this requires the
/// exact side to be free of named symbols (panics otherwise, since there is
/// no binding available at coercion time).
#[derive(Clone, PartialEq, Debug)]
pub enum Coeff {
    Exact(ExactComplex),
    Float(Complex64),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Exact(ExactComplex::zero())
    }

    pub fn one() -> Self {
        Coeff::Exact(ExactComplex::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Coeff::Exact(ExactComplex {
            re: SymbolicCoeff::from_rational(r),
            im: SymbolicCoeff::zero(),
        })
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_rational(Rational::from_integer(n))
    }

    pub fn from_symbol(name: &str) -> Self {
        Coeff::Exact(ExactComplex {
            re: SymbolicCoeff::from_symbol(name),
            im: SymbolicCoeff::zero(),
        })
    }

    pub fn from_complex(z: Complex64) -> Self {
        Coeff::Float(z)
    }

    /// i^k as an exact value.
    pub fn i_pow(k: u8) -> Self {
        Coeff::Exact(ExactComplex::one().mul_i_pow(k))
    }

    /// Exact 1/sqrt2 = sqrt2/2.
    pub fn inv_sqrt2() -> Self {
        let mut re = SymbolicCoeff::zero();
        re.add_term(Monomial::symbol(SQRT2), rat(1, 2));
        Coeff::Exact(ExactComplex {
            re,
            im: SymbolicCoeff::zero(),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Exact(e) => e.is_zero(),
            Coeff::Float(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Coeff::Exact(_))
    }

    fn constant_complex(&self) -> Complex64 {
        match self {
            Coeff::Float(z) => *z,
            Coeff::Exact(e) => e
                .eval(&SymbolBindings::new())
                .expect("cannot coerce an exact coefficient with unbound symbols to float"),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a.add(b)),
            _ => Coeff::Float(self.constant_complex() + other.constant_complex()),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Exact(e) => Coeff::Exact(e.neg()),
            Coeff::Float(z) => Coeff::Float(-z),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a.mul(b)),
            _ => Coeff::Float(self.constant_complex() * other.constant_complex()),
        }
    }

    pub fn conj(&self) -> Coeff {
        match self {
            Coeff::Exact(e) => Coeff::Exact(e.conj()),
            Coeff::Float(z) => Coeff::Float(z.conj()),
        }
    }

    pub fn mul_i_pow(&self, k: u8) -> Coeff {
        match self {
            Coeff::Exact(e) => Coeff::Exact(e.mul_i_pow(k)),
            Coeff::Float(z) => {
                let i = Complex64::new(0.0, 1.0);
                Coeff::Float(z * i.powu(k as u32 % 4))
            }
        }
    }

    pub fn scale(&self, r: Rational) -> Coeff {
        match self {
            Coeff::Exact(e) => Coeff::Exact(ExactComplex {
                re: e.re.scale(r),
                im: e.im.scale(r),
            }),
            Coeff::Float(z) => Coeff::Float(z * r.to_f64().unwrap()),
        }
    }

    pub fn to_complex(&self, bindings: &SymbolBindings) -> Result<Complex64> {
        match self {
            Coeff::Exact(e) => e.eval(bindings),
            Coeff::Float(z) => Ok(*z),
        }
    }

    pub fn to_float(&self, bindings: &SymbolBindings) -> Result<Coeff> {
        Ok(Coeff::Float(self.to_complex(bindings)?))
    }

    pub fn approx_eq(&self, other: &Coeff, tol: f64) -> bool {
        (self.constant_complex() - other.constant_complex()).norm() <= tol
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Float(z) => write!(f, "({},{})", z.re, z.im),
            Coeff::Exact(e) => {
                if e.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                let mut put =
                    |f: &mut fmt::Formatter<'_>, r: &Rational, m: &Monomial, imag: bool| {
                        let mut factors = Vec::new();
                        if imag {
                            factors.push("(0,1)".to_string());
                        }
                        let mag = r.abs();
                        if !mag.is_one() || (m.is_unit() && !imag) {
                            factors.push(mag.to_string());
                        }
                        factors.extend(m.factors());
                        if factors.is_empty() {
                            factors.push("1".to_string());
                        }
                        let body = factors.join("*");
                        let sign = r.is_negative();
                        let res = if first {
                            if sign {
                                write!(f, "-{body}")
                            } else {
                                write!(f, "{body}")
                            }
                        } else if sign {
                            write!(f, " - {body}")
                        } else {
                            write!(f, " + {body}")
                        };
                        first = false;
                        res
                    };
                for (m, r) in e.re.terms() {
                    put(f, r, m, false)?;
                }
                for (m, r) in e.im.terms() {
                    put(f, r, m, true)?;
                }
                Ok(())
            }
        }
    }
}

/// An angle: an exact rational multiple of pi, or a float in radians.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Angle {
    PiRational(Rational),
    Radians(f64),
}

impl Angle {
    pub fn pi_rational(n: i64, d: i64) -> Angle {
        Angle::PiRational(rat(n, d))
    }

    pub fn zero() -> Angle {
        Angle::PiRational(Rational::zero())
    }

    pub fn radians(v: f64) -> Angle {
        Angle::Radians(v)
    }

    /// Whether exponentials at this angle are Clifford for the given algebra:
    /// multiples of pi/4 for Pauli and Majorana strings, pi/2 for fermionic
    /// ones. Float angles are never certified.
    pub fn is_clifford(&self, kind: AlgebraKind) -> bool {
        match self {
            Angle::Radians(_) => false,
            Angle::PiRational(m) => {
                let grid = match kind {
                    AlgebraKind::Pauli | AlgebraKind::Majorana => 4,
                    AlgebraKind::Fermionic => 2,
                };
                (m * Rational::from_integer(grid)).is_integer()
            }
        }
    }

    pub fn value(&self) -> f64 {
        match self {
            Angle::PiRational(m) => m.to_f64().unwrap() * std::f64::consts::PI,
            Angle::Radians(v) => *v,
        }
    }

    pub fn double(&self) -> Angle {
        match self {
            Angle::PiRational(m) => Angle::PiRational(m * Rational::from_integer(2)),
            Angle::Radians(v) => Angle::Radians(2.0 * v),
        }
    }

    pub fn neg(&self) -> Angle {
        match self {
            Angle::PiRational(m) => Angle::PiRational(-m),
            Angle::Radians(v) => Angle::Radians(-v),
        }
    }

    /// Eighths-of-pi index when this angle lies on the pi/4 grid.
    fn eighths(&self) -> Option<i64> {
        match self {
            Angle::PiRational(m) => {
                let k = m * Rational::from_integer(4);
                if k.is_integer() {
                    Some(k.to_integer().rem_euclid(8))
                } else {
                    None
                }
            }
            Angle::Radians(_) => None,
        }
    }

    pub fn cos(&self) -> Coeff {
        match self.eighths() {
            Some(k) => grid_value([1, 2, 0, -2, -1, -2, 0, 2][k as usize]),
            None => Coeff::Float(Complex64::new(self.value().cos(), 0.0)),
        }
    }

    pub fn sin(&self) -> Coeff {
        match self.eighths() {
            Some(k) => grid_value([0, 2, 1, 2, 0, -2, -1, -2][k as usize]),
            None => Coeff::Float(Complex64::new(self.value().sin(), 0.0)),
        }
    }

    /// e^{i theta} = cos theta + i sin theta.
    pub fn exp_i(&self) -> Coeff {
        self.cos().add(&self.sin().mul_i_pow(1))
    }

    /// Accepts "pi/2", "3pi/4", "-pi", "2pi", "0.785" (radians), "0".
    pub fn parse(text: &str) -> Result<Angle> {
        let t = text.trim();
        if let Some(idx) = t.find("pi") {
            let (pre, post) = (&t[..idx], &t[idx + 2..]);
            let numer: i64 = match pre {
                "" | "+" => 1,
                "-" => -1,
                _ => pre
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad angle `{t}`")))?,
            };
            let denom: i64 = if post.is_empty() {
                1
            } else if let Some(d) = post.strip_prefix('/') {
                d.parse()
                    .map_err(|_| Error::Invalid(format!("bad angle `{t}`")))?
            } else {
                return Err(Error::Invalid(format!("bad angle `{t}`")));
            };
            Ok(Angle::PiRational(rat(numer, denom)))
        } else {
            let v: f64 = t
                .parse()
                .map_err(|_| Error::Invalid(format!("bad angle `{t}`")))?;
            Ok(Angle::Radians(v))
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::PiRational(m) => {
                if m.is_zero() {
                    write!(f, "0")
                } else if m.denom() == &1 {
                    write!(f, "{}pi", m.numer())
                } else if m.numer() == &1 {
                    write!(f, "pi/{}", m.denom())
                } else {
                    write!(f, "{}pi/{}", m.numer(), m.denom())
                }
            }
            Angle::Radians(v) => write!(f, "{v}"),
        }
    }
}

/// cos/sin values on the pi/4 grid encoded as 0, +-1, +-2 where +-2 stands
/// for +-sqrt2/2.
fn grid_value(code: i8) -> Coeff {
    match code {
        0 => Coeff::zero(),
        1 => Coeff::one(),
        -1 => Coeff::from_int(-1),
        2 => Coeff::inv_sqrt2(),
        -2 => Coeff::inv_sqrt2().neg(),
        _ => unreachable!(),
    }
}

/// The symbol names bound by the H2/MBS demo, in Table order.
pub const H2_SYMBOLS: [&str; 7] = ["h00", "h22", "v0101", "v2323", "v0202", "v0220", "v0123"];

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sym(name: &str) -> Coeff {
        Coeff::from_symbol(name)
    }

    #[test]
    fn exact_add_merges_symbols() {
        let two_h00 = sym("h00").add(&sym("h00"));
        assert_eq!(two_h00, sym("h00").scale(rat(2, 1)));
    }

    #[test]
    fn exact_add_cancels_to_zero() {
        let a = sym("v0101").scale(rat(1, 4));
        let b = sym("v0101").scale(rat(-1, 4));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn float_coercion() {
        let f = Coeff::Float(Complex64::new(0.5, 0.0));
        let e = Coeff::from_rational(rat(1, 2));
        assert_eq!(f.add(&e), Coeff::Float(Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let half = Coeff::inv_sqrt2().mul(&Coeff::inv_sqrt2());
        assert_eq!(half, Coeff::from_rational(rat(1, 2)));
    }

    #[test]
    fn clifford_angle_grid() {
        for k in -16..=16i64 {
            assert!(Angle::PiRational(rat(k, 4)).is_clifford(AlgebraKind::Pauli));
            assert!(Angle::PiRational(rat(2 * k + 1, 8)).is_clifford(AlgebraKind::Pauli) == false);
        }
        assert!(Angle::pi_rational(1, 4).is_clifford(AlgebraKind::Pauli));
        assert!(!Angle::pi_rational(1, 4).is_clifford(AlgebraKind::Fermionic));
        assert!(Angle::pi_rational(1, 2).is_clifford(AlgebraKind::Fermionic));
        assert!(!Angle::Radians(0.7853981).is_clifford(AlgebraKind::Pauli));
    }

    #[test]
    fn exact_trig_on_grid() {
        assert_eq!(Angle::pi_rational(1, 2).cos(), Coeff::zero());
        assert_eq!(Angle::pi_rational(1, 2).sin(), Coeff::one());
        assert_eq!(Angle::pi_rational(1, 4).cos(), Coeff::inv_sqrt2());
        assert_eq!(Angle::pi_rational(-3, 4).sin(), Coeff::inv_sqrt2().neg());
        assert_eq!(Angle::pi_rational(7, 1).cos(), Coeff::from_int(-1));
    }

    #[test]
    fn angle_parsing() {
        assert_eq!(Angle::parse("pi/2").unwrap(), Angle::pi_rational(1, 2));
        assert_eq!(Angle::parse("3pi/4").unwrap(), Angle::pi_rational(3, 4));
        assert_eq!(Angle::parse("-pi").unwrap(), Angle::pi_rational(-1, 1));
        assert_eq!(Angle::parse("2pi").unwrap(), Angle::pi_rational(2, 1));
        assert_eq!(Angle::parse("0.25").unwrap(), Angle::Radians(0.25));
        assert!(Angle::parse("pie").is_err());
    }

    #[test]
    fn display_matches_grammar() {
        let mut re = SymbolicCoeff::from_symbol("v0101").scale(rat(1, 4));
        re = re.add(&SymbolicCoeff::from_symbol("h00").scale(rat(-1, 2)));
        let mut im = SymbolicCoeff::zero();
        im.add_term(Monomial::unit(), rat(1, 8));
        let c = Coeff::Exact(ExactComplex { re, im });
        assert_eq!(c.to_string(), "-1/2*h00 + 1/4*v0101 + (0,1)*1/8");
    }

    fn arb_coeff() -> impl Strategy<Value = Coeff> {
        let mono = prop_oneof![
            Just(Monomial::unit()),
            Just(Monomial::symbol("h00")),
            Just(Monomial::symbol("v0101")),
            Just(Monomial::symbol(SQRT2)),
        ];
        proptest::collection::vec((mono, -8i64..8, 1i64..5), 0..4).prop_map(|terms| {
            let mut re = SymbolicCoeff::zero();
            let mut im = SymbolicCoeff::zero();
            for (i, (m, n, d)) in terms.into_iter().enumerate() {
                if i % 2 == 0 {
                    re.add_term(m, rat(n, d));
                } else {
                    im.add_term(m, rat(n, d));
                }
            }
            Coeff::Exact(ExactComplex { re, im })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn float_conversion_commutes(a in arb_coeff(), b in arb_coeff()) {
            let mut bind = SymbolBindings::new();
            bind.insert("h00".into(), -1.25);
            bind.insert("v0101".into(), 0.66);
            let add_then = a.add(&b).to_complex(&bind).unwrap();
            let then_add = a.to_complex(&bind).unwrap() + b.to_complex(&bind).unwrap();
            prop_assert!((add_then - then_add).norm() < 1e-12);
            let mul_then = a.mul(&b).to_complex(&bind).unwrap();
            let then_mul = a.to_complex(&bind).unwrap() * b.to_complex(&bind).unwrap();
            prop_assert!((mul_then - then_mul).norm() < 1e-12);
            let conj_then = a.conj().to_complex(&bind).unwrap();
            prop_assert!((conj_then - a.to_complex(&bind).unwrap().conj()).norm() < 1e-12);
        }
    }
}
