//! The M-qubit Pauli group and its exponentials.
//!
//! A string is stored as X/Z bit masks plus a power of i: the operator is
//! i^phase * prod_q X_q^{x_q} Z_q^{z_q}, with the per-qubit factor ordered X
//! then Z. The textbook Y carries an extra i (Y = i X Z) which is folded into
//! the phase at construction, so the symplectic product formula stays
//! phase-exact with no floating point anywhere in the group operations.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Angle, Coeff};
use crate::{AlgebraKind, Error, Result};

pub const MAX_QUBITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliString {
    n_qubits: usize,
    x: u64,
    z: u64,
    phase_exp: u8,
}

impl PauliString {
    pub fn identity(n_qubits: usize) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::WidthTooLarge(n_qubits, MAX_QUBITS));
        }
        Ok(PauliString {
            n_qubits,
            x: 0,
            z: 0,
            phase_exp: 0,
        })
    }

    /// Textbook tensor product of single-qubit Paulis; duplicate qubits are
    /// rejected.
    pub fn from_axes(n_qubits: usize, axes: &[(usize, Axis)]) -> Result<Self> {
        let mut s = PauliString::identity(n_qubits)?;
        for &(q, a) in axes {
            if q >= n_qubits {
                return Err(Error::IndexOutOfRange {
                    index: q,
                    width: n_qubits,
                });
            }
            let bit = 1u64 << q;
            if (s.x | s.z) & bit != 0 {
                return Err(Error::Invalid(format!("qubit {q} listed twice")));
            }
            match a {
                Axis::X => s.x |= bit,
                Axis::Z => s.z |= bit,
                Axis::Y => {
                    s.x |= bit;
                    s.z |= bit;
                    s.phase_exp = (s.phase_exp + 1) % 4;
                }
            }
        }
        Ok(s)
    }

    pub fn single(n_qubits: usize, qubit: usize, axis: Axis) -> Result<Self> {
        PauliString::from_axes(n_qubits, &[(qubit, axis)])
    }

    pub fn from_bits(n_qubits: usize, x: u64, z: u64, phase_exp: u8) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::WidthTooLarge(n_qubits, MAX_QUBITS));
        }
        let mask = mask(n_qubits);
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::Invalid("bit outside register".into()));
        }
        Ok(PauliString {
            n_qubits,
            x,
            z,
            phase_exp: phase_exp % 4,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn is_identity_op(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Number of qubits carrying both X and Z (textbook Y sites).
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// Non-identity support as (qubit, axis) pairs, ascending.
    pub fn axes(&self) -> Vec<(usize, Axis)> {
        let mut out = Vec::new();
        for q in 0..self.n_qubits {
            let bit = 1u64 << q;
            match ((self.x & bit) != 0, (self.z & bit) != 0) {
                (true, true) => out.push((q, Axis::Y)),
                (true, false) => out.push((q, Axis::X)),
                (false, true) => out.push((q, Axis::Z)),
                (false, false) => {}
            }
        }
        out
    }

    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    /// Strip the phase: returns the phase-0 bit string and the i exponent
    /// that multiplies it.
    pub fn split_phase(&self) -> (PauliString, u8) {
        (
            PauliString {
                phase_exp: 0,
                ..self.clone()
            },
            self.phase_exp,
        )
    }

    /// P is Hermitian (equivalently an involution) iff the stored phase has
    /// the same parity as the Y-site count.
    pub fn is_hermitian(&self) -> bool {
        u32::from(self.phase_exp) % 2 == self.y_count() % 2
    }

    fn check_width(&self, other: &PauliString) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::WidthMismatch(self.n_qubits, other.n_qubits));
        }
        Ok(())
    }

    /// Exact group product. Commuting Z past X on each shared qubit
    /// contributes (-1), i.e. two units of the i exponent.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        self.check_width(other)?;
        let swaps = (self.z & other.x).count_ones() as u8;
        Ok(PauliString {
            n_qubits: self.n_qubits,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
            phase_exp: (self.phase_exp + other.phase_exp + 2 * (swaps % 2)) % 4,
        })
    }

    /// Symplectic inner product of the (x|z) vectors mod 2.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_width(other)?;
        let s = (self.x & other.z).count_ones() + (self.z & other.x).count_ones();
        Ok(s % 2 == 0)
    }

    pub fn dagger(&self) -> PauliString {
        // (i^p K)^dagger = i^{-p} (-1)^{y} K
        let y = self.y_count() as u8 % 2;
        PauliString {
            phase_exp: ((4 - self.phase_exp) + 2 * y) % 4,
            ..self.clone()
        }
    }

    /// The string multiplied by i^k.
    pub fn mul_i_pow(&self, k: u8) -> PauliString {
        PauliString {
            phase_exp: (self.phase_exp + k % 4) % 4,
            ..self.clone()
        }
    }

    /// Axes-only text form ("X0 Y3 Z5", identity rendered "I"), ignoring the
    /// phase.
    pub fn label(&self) -> String {
        let axes = self.axes();
        if axes.is_empty() {
            return "I".to_string();
        }
        axes.iter()
            .map(|(q, a)| {
                format!(
                    "{}{q}",
                    match a {
                        Axis::X => "X",
                        Axis::Y => "Y",
                        Axis::Z => "Z",
                    }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axes = self.axes();
        if self.phase_exp != 0 {
            write!(f, "i^{} * ", self.phase_exp)?;
        }
        if axes.is_empty() {
            return write!(f, "I");
        }
        let labels: Vec<String> = axes
            .iter()
            .map(|(q, a)| {
                format!(
                    "{}{q}",
                    match a {
                        Axis::X => "X",
                        Axis::Y => "Y",
                        Axis::Z => "Z",
                    }
                )
            })
            .collect();
        write!(f, "{}", labels.join(" "))
    }
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Linear combination of Pauli strings. Keys are phase-0 bit strings; all
/// phases live in the coefficients so merging is exact.
#[derive(Clone, PartialEq, Debug)]
pub struct PauliSum {
    n_qubits: usize,
    terms: BTreeMap<(u64, u64), Coeff>,
}

impl PauliSum {
    pub fn zero(n_qubits: usize) -> Self {
        PauliSum {
            n_qubits,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n_qubits: usize, c: Coeff) -> Self {
        let mut s = PauliSum::zero(n_qubits);
        s.add_key((0, 0), c);
        s
    }

    pub fn identity(n_qubits: usize) -> Self {
        PauliSum::scalar(n_qubits, Coeff::one())
    }

    pub fn from_string(p: &PauliString, c: Coeff) -> Self {
        let mut s = PauliSum::zero(p.n_qubits());
        s.add_string(p, c);
        s
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_key(&mut self, key: (u64, u64), c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let merged = old.add(&c);
                if !merged.is_zero() {
                    self.terms.insert(key, merged);
                }
            }
        }
    }

    /// Add c times the string (the string's own phase folds into c).
    pub fn add_string(&mut self, p: &PauliString, c: Coeff) {
        debug_assert_eq!(p.n_qubits(), self.n_qubits);
        self.add_key((p.x, p.z), c.mul_i_pow(p.phase_exp));
    }

    /// Terms as (phase-0 string, coefficient) pairs in key order.
    pub fn terms(&self) -> impl Iterator<Item = (PauliString, &Coeff)> + '_ {
        self.terms.iter().map(|(&(x, z), c)| {
            (
                PauliString {
                    n_qubits: self.n_qubits,
                    x,
                    z,
                    phase_exp: 0,
                },
                c,
            )
        })
    }

    /// Coefficient of the given string (its phase folded in), if present.
    pub fn coeff_of(&self, p: &PauliString) -> Option<Coeff> {
        self.terms
            .get(&(p.x, p.z))
            .map(|c| c.mul_i_pow((4 - p.phase_exp) % 4))
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::WidthMismatch(self.n_qubits, other.n_qubits));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_key(*k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PauliSum) -> Result<PauliSum> {
        self.add(&other.scale(&Coeff::from_int(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> PauliSum {
        let mut out = PauliSum::zero(self.n_qubits);
        for (k, v) in &self.terms {
            out.add_key(*k, v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &PauliSum) -> Result<PauliSum> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::WidthMismatch(self.n_qubits, other.n_qubits));
        }
        let mut out = PauliSum::zero(self.n_qubits);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let p = a.mul(&b)?;
                out.add_string(&p, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn dagger(&self) -> PauliSum {
        let mut out = PauliSum::zero(self.n_qubits);
        for (p, c) in self.terms() {
            // keys are phase-0 strings: K^dagger = (-1)^y K
            let y = p.y_count() as u8 % 2;
            out.add_string(&p, c.conj().mul_i_pow(2 * y));
        }
        out
    }

    /// Terms as (textbook Hermitian string, coefficient) pairs: the stored
    /// XZ factors are re-expressed through Y so the labels read naturally.
    pub fn labeled_terms(&self) -> Vec<(PauliString, Coeff)> {
        self.terms()
            .map(|(key, _)| {
                let textbook = key.mul_i_pow(key.y_count() as u8);
                let coeff = self.coeff_of(&textbook).unwrap();
                (textbook, coeff)
            })
            .collect()
    }
}

/// e^{i theta P} = cos(theta) I + i sin(theta) P for a Hermitian string P.
pub fn pauli_exp(theta: Angle, p: &PauliString) -> Result<PauliSum> {
    if !p.is_hermitian() {
        return Err(Error::NonHermitian);
    }
    let mut sum = PauliSum::zero(p.n_qubits());
    sum.add_key((0, 0), theta.cos());
    sum.add_string(p, theta.sin().mul_i_pow(1));
    Ok(sum)
}

/// Similarity transformation e^{-i theta P} O e^{i theta P}: O unchanged in
/// the commuting case, otherwise cos(2 theta) O + i sin(2 theta) O P. At
/// theta on the pi/4 grid this collapses to a single string.
pub fn pauli_conjugate(o: &PauliString, p: &PauliString, theta: Angle) -> Result<PauliSum> {
    if !p.is_hermitian() {
        return Err(Error::NonHermitian);
    }
    if o.commutes(p)? {
        return Ok(PauliSum::from_string(o, Coeff::one()));
    }
    let two = theta.double();
    let mut sum = PauliSum::zero(o.n_qubits());
    sum.add_string(o, two.cos());
    sum.add_string(&o.mul(p)?, two.sin().mul_i_pow(1));
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliffordGateKind {
    S,
    H,
    Cnot,
}

/// The S/H/CNOT gates built by multiplying out their exponential
/// factorizations into sums of Pauli strings.
pub fn clifford_gate(kind: CliffordGateKind, qubits: &[usize], n_qubits: usize) -> Result<PauliSum> {
    let quarter = Angle::pi_rational(1, 4);
    match kind {
        CliffordGateKind::S => {
            let &[i] = qubits else {
                return Err(Error::Invalid("S takes one qubit".into()));
            };
            let z = PauliString::single(n_qubits, i, Axis::Z)?;
            let gate = pauli_exp(quarter.neg(), &z)?;
            Ok(gate.scale(&quarter.exp_i()))
        }
        CliffordGateKind::H => {
            let &[i] = qubits else {
                return Err(Error::Invalid("H takes one qubit".into()));
            };
            let z = PauliString::single(n_qubits, i, Axis::Z)?;
            let x = PauliString::single(n_qubits, i, Axis::X)?;
            let u = pauli_exp(quarter, &z)?
                .mul(&pauli_exp(quarter, &x)?)?
                .mul(&pauli_exp(quarter, &z)?)?;
            Ok(u.scale(&Angle::pi_rational(3, 2).exp_i()))
        }
        CliffordGateKind::Cnot => {
            let &[i, j] = qubits else {
                return Err(Error::Invalid("CNOT takes two qubits".into()));
            };
            if i == j {
                return Err(Error::DegenerateCnot);
            }
            let zi = PauliString::single(n_qubits, i, Axis::Z)?;
            let xj = PauliString::single(n_qubits, j, Axis::X)?;
            let zx = PauliString::from_axes(n_qubits, &[(i, Axis::Z), (j, Axis::X)])?;
            let u = pauli_exp(quarter.neg(), &zi)?
                .mul(&pauli_exp(quarter.neg(), &xj)?)?
                .mul(&pauli_exp(quarter, &zx)?)?;
            Ok(u.scale(&quarter.exp_i()))
        }
    }
}

/// One-term sums at Clifford angles: the collapsed (coefficient, string).
pub fn single_term(sum: &PauliSum) -> Option<(Coeff, PauliString)> {
    if sum.len() != 1 {
        return None;
    }
    sum.terms().next().map(|(p, c)| (c.clone(), p))
}

pub fn is_clifford_angle(theta: Angle) -> bool {
    theta.is_clifford(AlgebraKind::Pauli)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn xs(n: usize, q: usize) -> PauliString {
        PauliString::single(n, q, Axis::X).unwrap()
    }
    fn ys(n: usize, q: usize) -> PauliString {
        PauliString::single(n, q, Axis::Y).unwrap()
    }
    fn zs(n: usize, q: usize) -> PauliString {
        PauliString::single(n, q, Axis::Z).unwrap()
    }

    #[test]
    fn x_times_y_is_i_z() {
        let p = xs(1, 0).mul(&ys(1, 0)).unwrap();
        let (bare, phase) = p.split_phase();
        assert_eq!(bare, zs(1, 0));
        assert_eq!(phase, 1);
    }

    #[test]
    fn identity_is_neutral() {
        let y = ys(3, 0);
        let id = PauliString::identity(3).unwrap();
        assert_eq!(id.mul(&y).unwrap(), y);
        assert_eq!(y.mul(&id).unwrap(), y);
    }

    #[test]
    fn xx_times_zz() {
        let xx = PauliString::from_axes(2, &[(0, Axis::X), (1, Axis::X)]).unwrap();
        let zz = PauliString::from_axes(2, &[(0, Axis::Z), (1, Axis::Z)]).unwrap();
        let yy = PauliString::from_axes(2, &[(0, Axis::Y), (1, Axis::Y)]).unwrap();
        // frozen from the dense 4x4 product: XX * ZZ = -YY
        let prod = xx.mul(&zz).unwrap();
        let minus_yy = PauliSum::from_string(&yy, Coeff::from_int(-1));
        assert_eq!(PauliSum::from_string(&prod, Coeff::one()), minus_yy);
    }

    #[test]
    fn width_mismatch_rejected() {
        assert!(xs(1, 0).mul(&xs(2, 0)).is_err());
        assert!(xs(1, 0).commutes(&xs(2, 0)).is_err());
    }

    #[test]
    fn commutation_examples() {
        let z0z1 = PauliString::from_axes(3, &[(0, Axis::Z), (1, Axis::Z)]).unwrap();
        let z0z2 = PauliString::from_axes(3, &[(0, Axis::Z), (2, Axis::Z)]).unwrap();
        assert!(z0z1.commutes(&z0z2).unwrap());
        assert!(!xs(1, 0).commutes(&zs(1, 0)).unwrap());
        // k = 2 non-trivial overlaps, even
        let yyxx = PauliString::from_axes(
            4,
            &[(0, Axis::Y), (1, Axis::Y), (2, Axis::X), (3, Axis::X)],
        )
        .unwrap();
        let zz = PauliString::from_axes(4, &[(0, Axis::Z), (1, Axis::Z)]).unwrap();
        assert!(yyxx.commutes(&zz).unwrap());
    }

    #[test]
    fn exp_at_zero_and_quarter() {
        let sum = pauli_exp(Angle::zero(), &xs(2, 0)).unwrap();
        assert_eq!(sum, PauliSum::identity(2));

        let sum = pauli_exp(Angle::pi_rational(1, 4), &zs(1, 0)).unwrap();
        assert_eq!(sum.len(), 2);
        assert_eq!(
            sum.coeff_of(&PauliString::identity(1).unwrap()).unwrap(),
            Coeff::inv_sqrt2()
        );
        assert_eq!(
            sum.coeff_of(&zs(1, 0)).unwrap(),
            Coeff::inv_sqrt2().mul_i_pow(1)
        );

        // e^{i pi/2 Y} = i Y, frozen from the 2x2 matrix exponential
        let sum = pauli_exp(Angle::pi_rational(1, 2), &ys(1, 0)).unwrap();
        assert_eq!(sum.len(), 1);
        assert_eq!(sum.coeff_of(&ys(1, 0)).unwrap(), Coeff::i_pow(1));
    }

    #[test]
    fn exp_rejects_non_hermitian() {
        let (xz, _) = xs(1, 0).mul(&zs(1, 0)).unwrap().split_phase();
        assert!(!xz.is_hermitian());
        assert!(pauli_exp(Angle::zero(), &xz).is_err());
    }

    #[test]
    fn conjugate_examples() {
        // frozen from e^{-i pi/4 Z} X e^{i pi/4 Z} in the dense oracle
        let sum = pauli_conjugate(&xs(1, 0), &zs(1, 0), Angle::pi_rational(1, 4)).unwrap();
        assert_eq!(sum, PauliSum::from_string(&ys(1, 0), Coeff::one()));

        // commuting case is trivial at any angle
        let sum = pauli_conjugate(&zs(2, 0), &zs(2, 1), Angle::Radians(0.37)).unwrap();
        assert_eq!(sum, PauliSum::from_string(&zs(2, 0), Coeff::one()));

        // frozen from the dense oracle at theta = pi/8
        let sum = pauli_conjugate(&xs(1, 0), &zs(1, 0), Angle::pi_rational(1, 8)).unwrap();
        assert_eq!(sum.coeff_of(&xs(1, 0)).unwrap(), Coeff::inv_sqrt2());
        assert_eq!(sum.coeff_of(&ys(1, 0)).unwrap(), Coeff::inv_sqrt2());
    }

    #[test]
    fn s_gate_two_term_form() {
        let s = clifford_gate(CliffordGateKind::S, &[0], 1).unwrap();
        assert_eq!(s.len(), 2);
        let half = Coeff::from_rational(rat(1, 2));
        let i_half = half.mul_i_pow(1);
        assert_eq!(
            s.coeff_of(&PauliString::identity(1).unwrap()).unwrap(),
            half.add(&i_half)
        );
        assert_eq!(s.coeff_of(&zs(1, 0)).unwrap(), half.sub(&i_half));
    }

    #[test]
    fn h_gate_reduces_to_x_plus_z() {
        let h = clifford_gate(CliffordGateKind::H, &[0], 1).unwrap();
        let mut expect = PauliSum::zero(1);
        expect.add_string(&xs(1, 0), Coeff::inv_sqrt2());
        expect.add_string(&zs(1, 0), Coeff::inv_sqrt2());
        assert_eq!(h, expect);
    }

    #[test]
    fn cnot_is_involution() {
        let cnot = clifford_gate(CliffordGateKind::Cnot, &[0, 1], 2).unwrap();
        assert_eq!(cnot.mul(&cnot).unwrap(), PauliSum::identity(2));
        assert!(clifford_gate(CliffordGateKind::Cnot, &[1, 1], 2).is_err());
    }

    #[test]
    fn clifford_closure_single_term() {
        // anticommuting pair at theta = k pi/4 with odd k collapses
        for k in [-3i64, -1, 1, 3, 5] {
            let sum =
                pauli_conjugate(&xs(1, 0), &zs(1, 0), Angle::PiRational(rat(k, 4))).unwrap();
            assert_eq!(sum.len(), 1, "k={k}");
        }
    }

    #[test]
    fn symplectic_consistency_random() {
        // commutes(a, b) agrees with comparing ab and ba exactly
        let mut seed = 0x12345u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            seed >> 33
        };
        for _ in 0..500 {
            let n = 4;
            let a = PauliString::from_bits(n, next() & 0xf, next() & 0xf, 0).unwrap();
            let b = PauliString::from_bits(n, next() & 0xf, next() & 0xf, 0).unwrap();
            let ab = a.mul(&b).unwrap();
            let ba = b.mul(&a).unwrap();
            assert_eq!(a.commutes(&b).unwrap(), ab == ba);
        }
    }

    #[test]
    fn group_inverse_up_to_phase() {
        let p = PauliString::from_axes(3, &[(0, Axis::Y), (2, Axis::X)]).unwrap();
        let sq = p.mul(&p).unwrap();
        assert!(sq.is_identity_op());
    }
}
