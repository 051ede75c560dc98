//! Unitary conjugation of fermionic strings.
//!
//! The general closed forms for e^{-theta A} O e^{theta A} (anti-Hermitian
//! A = F - F+) and e^{-i theta H} O e^{i theta H} (Hermitian H = F + F+)
//! need a single scalar alpha in {1, 4} fixed by which of A[O,A]A = 0 or
//! A[O,A]A = [O,A] holds. On the (2k+1) pi/2 grid the transformation maps a
//! string to a single string; the per-row analytic table implements that
//! fast path, with the general form as the arbiter. Number-operator
//! generators are Clifford at every angle and only ever contribute a phase.

use std::fmt;

use crate::coeff::{Angle, Coeff, Rational};
use crate::fermion::{FermionicString, FermionicSum, ModeOp};
use crate::{Error, Result};

/// Generator of a fermionic unitary: G = F - F+ (anti-Hermitian, unitary
/// e^{theta G}) or G = F + F+ (Hermitian, unitary e^{i theta G}).
#[derive(Clone, PartialEq, Debug)]
pub enum Generator {
    /// F = a+_p, the half-body generators a+_p -+ a_p.
    HalfBody { p: usize, herm: bool },
    /// F = a+_p a+_q with p < q, the pair creation/annihilation generators.
    PairCreate { p: usize, q: usize, herm: bool },
    /// F = a+_p a_q with p < q, the single-excitation generators.
    SingleExc { p: usize, q: usize, herm: bool },
    /// F = n_p; Hermitian, Clifford for every angle.
    Number { p: usize },
    /// An arbitrary base string for the general closed forms.
    Raw { f: FermionicString, herm: bool },
}

impl Generator {
    pub fn is_hermitian(&self) -> bool {
        match self {
            Generator::HalfBody { herm, .. }
            | Generator::PairCreate { herm, .. }
            | Generator::SingleExc { herm, .. } => *herm,
            Generator::Number { .. } => true,
            Generator::Raw { herm, .. } => *herm,
        }
    }

    /// The base string F.
    pub fn base_string(&self, n_modes: usize) -> Result<FermionicString> {
        match self {
            Generator::HalfBody { p, .. } => FermionicString::single(n_modes, *p, ModeOp::Cr),
            Generator::PairCreate { p, q, .. } => {
                check_pair(*p, *q)?;
                FermionicString::normalize(n_modes, &[(*p, ModeOp::Cr), (*q, ModeOp::Cr)], 0)
            }
            Generator::SingleExc { p, q, .. } => {
                check_pair(*p, *q)?;
                FermionicString::normalize(n_modes, &[(*p, ModeOp::Cr), (*q, ModeOp::An)], 0)
            }
            Generator::Number { p } => FermionicString::single(n_modes, *p, ModeOp::Num),
            Generator::Raw { f, .. } => {
                if f.phase_exp() != 0 {
                    return Err(Error::GeneratorPhase);
                }
                Ok(f.clone())
            }
        }
    }

    /// F - F+ or F + F+ as a sum.
    pub fn to_sum(&self, n_modes: usize) -> Result<FermionicSum> {
        let f = self.base_string(n_modes)?;
        let mut sum = FermionicSum::from_string(&f, Coeff::one());
        let fd = f.dagger();
        if self.is_hermitian() {
            sum.add_string(&fd, Coeff::one());
        } else {
            sum.add_string(&fd, Coeff::from_int(-1));
        }
        Ok(sum)
    }
}

fn check_pair(p: usize, q: usize) -> Result<()> {
    if p >= q {
        return Err(Error::Invalid(format!(
            "pair generator indices must satisfy p < q, got ({p},{q})"
        )));
    }
    Ok(())
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |h: bool| if h { '+' } else { '-' };
        match self {
            Generator::HalfBody { p, herm } => write!(f, "halfbody{}({p})", sign(*herm)),
            Generator::PairCreate { p, q, herm } => write!(f, "pair{}({p},{q})", sign(*herm)),
            Generator::SingleExc { p, q, herm } => write!(f, "exc{}({p},{q})", sign(*herm)),
            Generator::Number { p } => write!(f, "num({p})"),
            Generator::Raw { f: s, herm } => write!(f, "raw{}({s})", sign(*herm)),
        }
    }
}

/// The two possible values of the closed-form parameter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlphaClass {
    One,
    Four,
}

impl AlphaClass {
    pub fn value(self) -> u8 {
        match self {
            AlphaClass::One => 1,
            AlphaClass::Four => 4,
        }
    }
}

/// Decide alpha (beta) by computing A[O,A]A in the monoid and testing which
/// of the two dichotomy identities holds. The commuting case reports One.
/// For Hermitian generators on disjoint odd-length strings the sandwich
/// comes out as -[O,H]; the closed form still takes beta = 4 there, so the
/// test accepts either sign.
pub fn classify_alpha(o: &FermionicString, g: &Generator) -> Result<AlphaClass> {
    let gen = g.to_sum(o.n_modes())?;
    let o_sum = FermionicSum::from_string(o, Coeff::one());
    let k = o_sum.commutator(&gen)?;
    if k.is_empty() {
        return Ok(AlphaClass::One);
    }
    classify_from_commutator(&gen, &k)
}

fn classify_from_commutator(gen: &FermionicSum, k: &FermionicSum) -> Result<AlphaClass> {
    let aka = gen.mul(k)?.mul(gen)?;
    if aka.expand_holes().is_empty() {
        Ok(AlphaClass::One)
    } else if aka.equivalent(k) || aka.equivalent(&k.scale(&Coeff::from_int(-1))) {
        Ok(AlphaClass::Four)
    } else {
        Err(Error::AlphaDichotomy)
    }
}

/// theta = (2k+1) pi/2, the grid on which the tabulated transformations act.
pub fn clifford_theta(k: i64) -> Angle {
    Angle::PiRational(Rational::new(2 * k + 1, 2))
}

/// General similarity transformation of a single string by the exponential
/// of a generator. Exact when theta is a rational multiple of pi on the
/// quarter grid, floating point otherwise.
pub fn general_conjugate(
    o: &FermionicString,
    g: &Generator,
    theta: Angle,
) -> Result<FermionicSum> {
    let n = o.n_modes();
    if o.is_zero() {
        return Ok(FermionicSum::zero(n));
    }
    if let Generator::Number { p } = g {
        let (c, s) = number_phase_conjugate(o, *p, theta);
        return Ok(FermionicSum::from_string(&s, c));
    }
    let f = g.base_string(n)?;
    if !f.creations().is_empty() || !f.annihilations().is_empty() {
        return conjugate_dichotomy(o, g, theta);
    }
    // F is a product of number operators: A = 0 and the Hermitian unitary is
    // e^{i theta N} = I + (e^{i theta} - 1) N with N idempotent.
    if !g.is_hermitian() {
        return Ok(FermionicSum::from_string(o, Coeff::one()));
    }
    let n_sum = FermionicSum::from_string(&f, Coeff::one());
    let o_sum = FermionicSum::from_string(o, Coeff::one());
    let eplus = theta.exp_i().sub(&Coeff::one());
    let eminus = theta.neg().exp_i().sub(&Coeff::one());
    let two_less = Coeff::from_int(2).sub(&theta.cos().scale(Rational::from_integer(2)));
    let on = o_sum.mul(&n_sum)?;
    let no = n_sum.mul(&o_sum)?;
    let non = no.mul(&n_sum)?;
    o_sum
        .add(&on.scale(&eplus))?
        .add(&no.scale(&eminus))?
        .add(&non.scale(&two_less))
        .map(|s| s.simplified())
}

fn conjugate_dichotomy(
    o: &FermionicString,
    g: &Generator,
    theta: Angle,
) -> Result<FermionicSum> {
    let n = o.n_modes();
    let gen = g.to_sum(n)?;
    let o_sum = FermionicSum::from_string(o, Coeff::one());
    let k = o_sum.commutator(&gen)?;
    if k.is_empty() {
        return Ok(o_sum);
    }
    let alpha = classify_from_commutator(&gen, &k)?;
    let sqrt_alpha_theta = match alpha {
        AlphaClass::One => theta,
        AlphaClass::Four => theta.double(),
    };
    let inv_sqrt_alpha = match alpha {
        AlphaClass::One => Rational::from_integer(1),
        AlphaClass::Four => Rational::new(1, 2),
    };
    let inv_alpha = Rational::new(1, alpha.value() as i64);
    let kk = k.commutator(&gen)?;
    let (r1, r2) = if g.is_hermitian() {
        // O + i sin(sqrt(b) t)/sqrt(b) [O,H] + (cos(sqrt(b) t) - 1)/b [[O,H],H]
        (
            sqrt_alpha_theta.sin().scale(inv_sqrt_alpha).mul_i_pow(1),
            sqrt_alpha_theta.cos().sub(&Coeff::one()).scale(inv_alpha),
        )
    } else {
        // O + sin(sqrt(a) t)/sqrt(a) [O,A] + (1 - cos(sqrt(a) t))/a [[O,A],A]
        (
            sqrt_alpha_theta.sin().scale(inv_sqrt_alpha),
            Coeff::one().sub(&sqrt_alpha_theta.cos()).scale(inv_alpha),
        )
    };
    o_sum
        .add(&k.scale(&r1))?
        .add(&kk.scale(&r2))
        .map(|s| s.simplified())
}

/// Conjugate every term of a sum, merging the results.
pub fn conjugate_sum(h: &FermionicSum, g: &Generator, theta: Angle) -> Result<FermionicSum> {
    let mut out = FermionicSum::zero(h.n_modes());
    for (s, c) in h.terms() {
        let t = general_conjugate(s, g, theta)?;
        out = out.add(&t.scale(c))?;
    }
    Ok(out.simplified())
}

/// e^{-i theta n_p} O e^{i theta n_p}: multiplies O by e^{i theta} if it
/// contains a single a_p, by e^{-i theta} for a single a+_p, and leaves it
/// unchanged otherwise. Returns the phase factor and the phase-0 string.
pub fn number_phase_conjugate(
    o: &FermionicString,
    p: usize,
    theta: Angle,
) -> (Coeff, FermionicString) {
    let (bare, ph) = o.split_phase();
    let factor = match o.op_at(p) {
        Some(ModeOp::An) => theta.exp_i(),
        Some(ModeOp::Cr) => theta.neg().exp_i(),
        _ => Coeff::one(),
    };
    (factor.mul_i_pow(ph), bare)
}

/// Fermionic Clifford fast path: the tabulated analytic expressions for the
/// transformation at theta = (2k+1) pi/2. Returns the exact phase and the
/// single resulting string; agrees with `general_conjugate` at the same
/// angle for every row.
pub fn clifford_apply(
    o: &FermionicString,
    g: &Generator,
    k: i64,
) -> Result<(Coeff, FermionicString)> {
    if o.is_zero() {
        return Ok((Coeff::one(), o.clone()));
    }
    match g {
        Generator::Number { .. } => Err(Error::Invalid(
            "number generators take an arbitrary angle; use number_phase_conjugate".into(),
        )),
        Generator::Raw { .. } => Err(Error::Invalid(
            "tabulated Clifford rows cover the half-body and pair generators only".into(),
        )),
        Generator::HalfBody { p, herm } => half_body_row(o, *p, *herm),
        Generator::PairCreate { p, q, herm } => pair_row(o, *p, *q, *herm, k, PairKind::Create),
        Generator::SingleExc { p, q, herm } => pair_row(o, *p, *q, *herm, k, PairKind::Exc),
    }
}

fn parity_sign(e: i64) -> Coeff {
    if e.rem_euclid(2) == 0 {
        Coeff::one()
    } else {
        Coeff::from_int(-1)
    }
}

/// 1-based position of `mode` inside its printed (ascending) index block.
fn block_position(block: &[usize], mode: usize) -> i64 {
    block
        .iter()
        .position(|&m| m == mode)
        .map(|i| i as i64 + 1)
        .unwrap_or(0)
}

fn fold(sign: Coeff, s: FermionicString) -> (Coeff, FermionicString) {
    let (bare, ph) = s.split_phase();
    (sign.mul_i_pow(ph), bare)
}

fn half_body_row(o: &FermionicString, c: usize, herm: bool) -> Result<(Coeff, FermionicString)> {
    let lo = o.length() as i64;
    let res = match o.op_at(c) {
        None => (parity_sign(lo), o.clone()),
        Some(ModeOp::Num) => fold(
            parity_sign(lo),
            o.remove_then_append(c, Some((c, ModeOp::Hole))),
        ),
        Some(ModeOp::Hole) => fold(
            parity_sign(lo),
            o.remove_then_append(c, Some((c, ModeOp::Num))),
        ),
        Some(ModeOp::Cr) => {
            let i = block_position(&o.creations(), c);
            let sign = if herm { parity_sign(i + 1) } else { parity_sign(i) };
            fold(sign, o.remove_then_append(c, Some((c, ModeOp::An))))
        }
        Some(ModeOp::An) => {
            let i = block_position(&o.annihilations(), c);
            let sign = if herm {
                parity_sign(lo + i)
            } else {
                parity_sign(lo + i + 1)
            };
            fold(sign, o.remove_then_append(c, Some((c, ModeOp::Cr))))
        }
    };
    Ok(res)
}

#[derive(Clone, Copy, PartialEq)]
enum PairKind {
    Create,
    Exc,
}

fn pair_row(
    o: &FermionicString,
    p: usize,
    q: usize,
    herm: bool,
    k: i64,
    kind: PairKind,
) -> Result<(Coeff, FermionicString)> {
    check_pair(p, q)?;
    let p_in = o.op_at(p).is_some();
    let q_in = o.op_at(q).is_some();
    match (p_in, q_in) {
        (false, false) => Ok((Coeff::one(), o.clone())),
        (true, false) => pair_row_single(o, p, q, herm, k, kind, false),
        (false, true) => pair_row_single(o, q, p, herm, k, kind, true),
        (true, true) => {
            // Both generator indices occur: factor the higher-index occupant
            // out to the right (conjugation is an algebra morphism),
            // transform each factor with its one-common-index row, and
            // multiply back.
            let tail_op = o.op_at(q).unwrap();
            let odd_after = o
                .presentation()
                .iter()
                .skip_while(|&&(m, op)| (m, op) != (q, tail_op))
                .skip(1)
                .filter(|(_, op)| op.is_odd())
                .count() as i64;
            let split_sign = if tail_op.is_odd() {
                parity_sign(odd_after)
            } else {
                Coeff::one()
            };
            let head = o.remove_then_append(q, None);
            let tail = FermionicString::single(o.n_modes(), q, tail_op)?;
            let (c1, s1) = pair_row_single(&head, p, q, herm, k, kind, false)?;
            let (c2, s2) = pair_row_single(&tail, q, p, herm, k, kind, true)?;
            let prod = s1.mul(&s2)?;
            let sign = split_sign.mul(&c1).mul(&c2);
            Ok(fold(sign, prod))
        }
    }
}

/// One-common-index row for the pair-type generators. `common` is the index
/// shared with O, `other` the generator's remaining index; `flipped` is set
/// when the common index is the generator's second (d) index. Relabeling
/// c <-> d negates the pair-creation generators and the anti-Hermitian
/// single excitation (inverting every k-dependent sign), while the Hermitian
/// single excitation is symmetric under the swap and keeps its signs.
fn pair_row_single(
    o: &FermionicString,
    common: usize,
    other: usize,
    herm: bool,
    k: i64,
    kind: PairKind,
    flipped: bool,
) -> Result<(Coeff, FermionicString)> {
    let lo = o.length() as i64;
    let flip = i64::from(flipped && (kind == PairKind::Create || !herm));
    let res = match o.op_at(common) {
        None => (Coeff::one(), o.clone()),
        Some(ModeOp::Num) => {
            let new_op = match kind {
                PairKind::Create => ModeOp::Hole,
                PairKind::Exc => ModeOp::Num,
            };
            fold(
                Coeff::one(),
                o.remove_then_append(common, Some((other, new_op))),
            )
        }
        Some(ModeOp::Hole) => {
            let new_op = match kind {
                PairKind::Create => ModeOp::Num,
                PairKind::Exc => ModeOp::Hole,
            };
            fold(
                Coeff::one(),
                o.remove_then_append(common, Some((other, new_op))),
            )
        }
        Some(ModeOp::Cr) => {
            let i = block_position(&o.creations(), common);
            let new_op = match kind {
                PairKind::Create => ModeOp::An,
                PairKind::Exc => ModeOp::Cr,
            };
            let sign = if herm {
                parity_sign(lo + i + k + 1 + flip).mul_i_pow(1)
            } else {
                parity_sign(lo + i + k + flip)
            };
            fold(sign, o.remove_then_append(common, Some((other, new_op))))
        }
        Some(ModeOp::An) => {
            let i = block_position(&o.annihilations(), common);
            let new_op = match kind {
                PairKind::Create => ModeOp::Cr,
                PairKind::Exc => ModeOp::An,
            };
            let sign = if herm {
                parity_sign(k + i + 1 + flip).mul_i_pow(1)
            } else {
                parity_sign(k + i + 1 + flip)
            };
            fold(sign, o.remove_then_append(common, Some((other, new_op))))
        }
    };
    Ok(res)
}

/// e^{A} for A = sum_p theta_p (a+_p - a_p), or e^{iH} for the Hermitian
/// variant: cos(sqrt(c)) I + sin(sqrt(c))/sqrt(c) (i) G with c = sum theta^2.
pub fn sum_halfbody_exp(
    n_modes: usize,
    thetas: &[(usize, f64)],
    herm: bool,
) -> Result<FermionicSum> {
    let c: f64 = thetas.iter().map(|(_, t)| t * t).sum();
    if c == 0.0 {
        return Ok(FermionicSum::identity(n_modes));
    }
    let sc = c.sqrt();
    let mut sum = FermionicSum::scalar(n_modes, Coeff::from_complex(sc.cos().into()));
    let scale = sc.sin() / sc;
    for &(p, t) in thetas {
        if t == 0.0 {
            continue;
        }
        let g = Generator::HalfBody { p, herm };
        let mut coeff = Coeff::from_complex((scale * t).into());
        if herm {
            coeff = coeff.mul_i_pow(1);
        }
        sum = sum.add(&g.to_sum(n_modes)?.scale(&coeff))?;
    }
    Ok(sum)
}

/// Closed-form conjugation by the exponential of a sum of half-body
/// generators:
/// O + (1/2) sin(2 sqrt(c))/sqrt(c) sum_q theta_q [O, A^q]
///   + (1/2) sin^2(sqrt(c))/c sum_qr theta_q theta_r [[O, A^q], A^r],
/// with an extra i on the single commutator and a sign flip on the double
/// one in the Hermitian variant.
pub fn sum_halfbody_conjugate(
    o: &FermionicString,
    thetas: &[(usize, f64)],
    herm: bool,
) -> Result<FermionicSum> {
    let n = o.n_modes();
    let c: f64 = thetas.iter().map(|(_, t)| t * t).sum();
    let o_sum = FermionicSum::from_string(o, Coeff::one());
    if c == 0.0 {
        return Ok(o_sum);
    }
    let sc = c.sqrt();
    let r1 = 0.5 * (2.0 * sc).sin() / sc;
    let r2 = 0.5 * sc.sin().powi(2) / c;
    let gens: Vec<(f64, FermionicSum)> = thetas
        .iter()
        .filter(|(_, t)| *t != 0.0)
        .map(|&(p, t)| Ok((t, Generator::HalfBody { p, herm }.to_sum(n)?)))
        .collect::<Result<_>>()?;
    let mut out = o_sum.clone();
    let mut singles: Vec<(f64, FermionicSum)> = Vec::new();
    for (t, a) in &gens {
        let k = o_sum.commutator(a)?;
        let mut coeff = Coeff::from_complex((r1 * t).into());
        if herm {
            coeff = coeff.mul_i_pow(1);
        }
        out = out.add(&k.scale(&coeff))?;
        singles.push((*t, k));
    }
    for (tq, kq) in &singles {
        for (tr, ar) in &gens {
            let kk = kq.commutator(ar)?;
            let mut coeff = Coeff::from_complex((r2 * tq * tr).into());
            if herm {
                coeff = coeff.neg();
            }
            out = out.add(&kk.scale(&coeff))?;
        }
    }
    Ok(out.simplified())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use ModeOp::*;

    fn s(n: usize, raw: &[(usize, ModeOp)]) -> FermionicString {
        FermionicString::normalize(n, raw, 0).unwrap()
    }

    fn halfbody(p: usize) -> Generator {
        Generator::HalfBody { p, herm: false }
    }

    #[test]
    fn alpha_classification() {
        // n_p against its own half-body generator: alpha = 4
        let o = s(1, &[(0, Num)]);
        assert_eq!(classify_alpha(&o, &halfbody(0)).unwrap(), AlphaClass::Four);

        // a+_c a_b against pair(c,d): direct computation gives class One
        let o = s(3, &[(0, Cr), (1, An)]);
        let g = Generator::PairCreate {
            p: 0,
            q: 2,
            herm: false,
        };
        assert_eq!(classify_alpha(&o, &g).unwrap(), AlphaClass::One);

        // disjoint indices commute: class One with [O,A] = 0
        let o = s(2, &[(1, Num)]);
        assert_eq!(classify_alpha(&o, &halfbody(0)).unwrap(), AlphaClass::One);
    }

    #[test]
    fn identity_angle_is_trivial() {
        let o = s(2, &[(0, Cr), (1, Num)]);
        let out = general_conjugate(&o, &halfbody(0), Angle::zero()).unwrap();
        assert_eq!(out, FermionicSum::from_string(&o, Coeff::one()));
    }

    #[test]
    fn table_row_n_c_half_body() {
        // n_c -> cos^2 n_c + sin^2 h_c + sin(2t)/2 (a_c + a+_c)
        let theta = Angle::pi_rational(1, 8);
        let out = general_conjugate(&s(1, &[(0, Num)]), &halfbody(0), theta).unwrap();
        let cos2 = Coeff::one().add(&theta.double().cos()).scale(rat(1, 2));
        let sin2 = Coeff::one().sub(&theta.double().cos()).scale(rat(1, 2));
        let half_s2t = theta.double().sin().scale(rat(1, 2));
        assert_eq!(out.coeff_of(&s(1, &[(0, Num)])).unwrap(), cos2);
        assert_eq!(out.coeff_of(&s(1, &[(0, Hole)])).unwrap(), sin2);
        assert_eq!(out.coeff_of(&s(1, &[(0, An)])).unwrap(), half_s2t);
        assert_eq!(out.coeff_of(&s(1, &[(0, Cr)])).unwrap(), half_s2t);
    }

    #[test]
    fn table_row_n_c_single_excitation() {
        // n_c -> cos^2 n_c + sin^2 n_d + sin(2t)/2 (a+_c a_d + a+_d a_c);
        // the closed form leaves the diagonal part in an equivalent n/h
        // presentation, so the row is checked through the unique normal form
        let theta = Angle::pi_rational(1, 8);
        let g = Generator::SingleExc {
            p: 0,
            q: 1,
            herm: false,
        };
        let out = general_conjugate(&s(2, &[(0, Num)]), &g, theta).unwrap();
        let cos2 = Coeff::one().add(&theta.double().cos()).scale(rat(1, 2));
        let sin2 = Coeff::one().sub(&theta.double().cos()).scale(rat(1, 2));
        let half_s2t = theta.double().sin().scale(rat(1, 2));
        let mut expect = FermionicSum::zero(2);
        expect.add_string(&s(2, &[(0, Num)]), cos2);
        expect.add_string(&s(2, &[(1, Num)]), sin2);
        expect.add_string(&s(2, &[(0, Cr), (1, An)]), half_s2t.clone());
        expect.add_string(&s(2, &[(1, Cr), (0, An)]), half_s2t.clone());
        assert!(out.equivalent(&expect));
        assert_eq!(out.coeff_of(&s(2, &[(0, Cr), (1, An)])).unwrap(), half_s2t);
        assert_eq!(out.coeff_of(&s(2, &[(1, Cr), (0, An)])).unwrap(), half_s2t);
    }

    #[test]
    fn clifford_apply_examples() {
        // a+_c a_b under halfbody-(c) at k = 0 maps to a_c a_b
        let o = s(2, &[(0, Cr), (1, An)]);
        let (coeff, out) = clifford_apply(&o, &halfbody(0), 0).unwrap();
        // a_c a_b = a_0 a_1 = -(canonical a_1 a_0)
        assert_eq!(out, s(2, &[(1, An), (0, An)]));
        assert_eq!(coeff, Coeff::from_int(-1));

        // same string under pair-(c,d): (-1)^k a_d a_b
        for k in [-2i64, -1, 0, 1, 2] {
            let g = Generator::PairCreate {
                p: 0,
                q: 2,
                herm: false,
            };
            let o = s(3, &[(0, Cr), (1, An)]);
            let (coeff, out) = clifford_apply(&o, &g, k).unwrap();
            // a_d a_b = a_2 a_1, already canonical descending
            assert_eq!(out, s(3, &[(2, An), (1, An)]));
            assert_eq!(coeff, parity_sign(k), "k={k}");
        }

        // a_c under halfbody-(c) at k = 0: -a+_c
        let o = s(1, &[(0, An)]);
        let (coeff, out) = clifford_apply(&o, &halfbody(0), 0).unwrap();
        assert_eq!(out, s(1, &[(0, Cr)]));
        assert_eq!(coeff, Coeff::from_int(-1));
    }

    #[test]
    fn clifford_apply_matches_general_form() {
        let generators = [
            Generator::HalfBody { p: 0, herm: false },
            Generator::HalfBody { p: 1, herm: true },
            Generator::PairCreate {
                p: 0,
                q: 1,
                herm: false,
            },
            Generator::PairCreate {
                p: 0,
                q: 2,
                herm: true,
            },
            Generator::SingleExc {
                p: 0,
                q: 1,
                herm: false,
            },
            Generator::SingleExc {
                p: 1,
                q: 2,
                herm: true,
            },
        ];
        let strings = [
            s(3, &[(0, Num)]),
            s(3, &[(0, An)]),
            s(3, &[(0, Cr), (1, An)]),
            s(3, &[(0, Cr), (1, Cr)]),
            s(3, &[(0, Hole), (2, An)]),
            s(3, &[(0, Num), (1, Hole), (2, Cr)]),
            s(3, &[(1, An), (0, An), (2, Num)]),
        ];
        for g in &generators {
            for o in &strings {
                for k in -2..=2i64 {
                    let (coeff, string) = clifford_apply(o, g, k).unwrap();
                    let direct = general_conjugate(o, g, clifford_theta(k)).unwrap();
                    let fast = FermionicSum::from_string(&string, coeff.clone());
                    assert!(
                        direct.equivalent(&fast),
                        "mismatch g={g} o={o} k={k}: direct={direct:?} fast=({coeff:?},{string})"
                    );
                }
            }
        }
    }

    #[test]
    fn number_phase_rule() {
        let theta = Angle::pi_rational(1, 4);
        let o = s(2, &[(0, An)]);
        let (c, out) = number_phase_conjugate(&o, 0, theta);
        assert_eq!(c, theta.exp_i());
        assert_eq!(out, o);

        let o = s(2, &[(0, Num)]);
        let (c, out) = number_phase_conjugate(&o, 0, theta);
        assert_eq!(c, Coeff::one());
        assert_eq!(out, o);

        // the T-gate analogue on a+_p a_q picks up e^{-i theta}
        let o = s(2, &[(0, Cr), (1, An)]);
        let (c, _) = number_phase_conjugate(&o, 0, theta);
        assert_eq!(c, theta.neg().exp_i());
    }

    #[test]
    fn hamiltonian_particle_hole_demo() {
        // H = alpha n_p + beta n_q + gamma (a+_p a_q + a+_q a_p) conjugated by
        // halfbody-(p) at odd k gives alpha h_p + beta n_q + gamma (a_p a_q + a+_q a+_p)
        let (al, be, ga) = (
            Coeff::from_symbol("alpha"),
            Coeff::from_symbol("beta"),
            Coeff::from_symbol("gamma"),
        );
        let mut h = FermionicSum::zero(2);
        h.add_string(&s(2, &[(0, Num)]), al.clone());
        h.add_string(&s(2, &[(1, Num)]), be.clone());
        h.add_string(&s(2, &[(0, Cr), (1, An)]), ga.clone());
        h.add_string(&s(2, &[(1, Cr), (0, An)]), ga.clone());

        let out = conjugate_sum(&h, &halfbody(0), clifford_theta(0)).unwrap();
        let mut expect = FermionicSum::zero(2);
        expect.add_string(&s(2, &[(0, Hole)]), al);
        expect.add_string(&s(2, &[(1, Num)]), be);
        // gamma (a_p a_q) = gamma a_0 a_1 = -gamma (canonical a_1 a_0), and
        // gamma (a+_q a+_p) = gamma a+_1 a+_0 = -gamma (canonical a+_0 a+_1)
        expect.add_string(&s(2, &[(1, An), (0, An)]), ga.neg());
        expect.add_string(&s(2, &[(0, Cr), (1, Cr)]), ga.neg());
        assert_eq!(out, expect);
    }

    #[test]
    fn sum_halfbody_reduces_to_single_generator() {
        // thetas supported on one mode reproduce the single closed form
        let o = s(2, &[(0, An)]);
        let t = 0.3517;
        let sum = sum_halfbody_conjugate(&o, &[(0, t), (1, 0.0)], false).unwrap();
        let single = general_conjugate(&o, &halfbody(0), Angle::radians(t)).unwrap();
        for (key, c) in single.terms() {
            let got = sum.coeff_of(key).unwrap();
            assert!(got.approx_eq(c, 1e-12), "{key}: {got:?} vs {c:?}");
        }
        assert_eq!(sum.len(), single.len());
    }

    #[test]
    fn zero_theta_vector_is_identity() {
        let e = sum_halfbody_exp(2, &[(0, 0.0), (1, 0.0)], false).unwrap();
        assert_eq!(e, FermionicSum::identity(2));
        let o = s(2, &[(0, Cr)]);
        let conj = sum_halfbody_conjugate(&o, &[], false).unwrap();
        assert_eq!(conj, FermionicSum::from_string(&o, Coeff::one()));
    }

    #[test]
    fn sum_halfbody_exp_at_half_pi() {
        // thetas = {0: pi/2}: cos -> 0, sin -> 1, leaving the bare generator
        // (up to the ~1e-16 float residue on the identity term)
        let e = sum_halfbody_exp(1, &[(0, std::f64::consts::FRAC_PI_2)], false).unwrap();
        let cr = e.coeff_of(&s(1, &[(0, Cr)])).unwrap();
        let an = e.coeff_of(&s(1, &[(0, An)])).unwrap();
        assert!(cr.approx_eq(&Coeff::one(), 1e-12));
        assert!(an.approx_eq(&Coeff::from_int(-1), 1e-12));
        let id = e
            .coeff_of(&FermionicString::identity(1).unwrap())
            .unwrap_or(Coeff::zero());
        assert!(id.approx_eq(&Coeff::zero(), 1e-12));
    }
}
