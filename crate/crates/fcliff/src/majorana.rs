//! Majorana strings on 2M modes.
//!
//! Linear index 2j addresses gamma_1 of fermionic mode j and 2j+1 its
//! gamma_2. Canonical order is ascending linear index; gamma_3 is a
//! constructor convenience that expands to i gamma_2 gamma_1 immediately, so
//! the stored length L always counts gamma_1/gamma_2 factors.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Angle, Coeff};
use crate::{AlgebraKind, Error, Result};

pub const MAX_MODES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hermiticity {
    /// L = 0, 1 mod 4: Gamma^dagger = Gamma, Gamma^2 = I.
    HermitianInvolution,
    /// L = 2, 3 mod 4: Gamma^dagger = -Gamma, Gamma^2 = -I.
    AntiHermitianSkewInvolution,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MajoranaString {
    n_modes: usize,
    occupied: u64,
    phase_exp: u8,
}

impl MajoranaString {
    pub fn identity(n_modes: usize) -> Result<Self> {
        if n_modes > MAX_MODES {
            return Err(Error::WidthTooLarge(n_modes, MAX_MODES));
        }
        Ok(MajoranaString {
            n_modes,
            occupied: 0,
            phase_exp: 0,
        })
    }

    /// Normalize a raw product of gamma factors: expands gamma_3, sorts to
    /// canonical order counting anticommutation transpositions, and cancels
    /// repeated factors through gamma^2 = I.
    pub fn normalize(n_modes: usize, raw: &[(usize, u8)], phase_exp: u8) -> Result<Self> {
        if n_modes > MAX_MODES {
            return Err(Error::WidthTooLarge(n_modes, MAX_MODES));
        }
        let mut seq: Vec<usize> = Vec::with_capacity(raw.len() * 2);
        let mut phase = phase_exp % 4;
        for &(mode, flavor) in raw {
            if mode >= n_modes {
                return Err(Error::IndexOutOfRange {
                    index: mode,
                    width: n_modes,
                });
            }
            match flavor {
                1 => seq.push(2 * mode),
                2 => seq.push(2 * mode + 1),
                3 => {
                    // gamma_3 = i gamma_2 gamma_1
                    phase = (phase + 1) % 4;
                    seq.push(2 * mode + 1);
                    seq.push(2 * mode);
                }
                _ => return Err(Error::Invalid(format!("bad Majorana flavor {flavor}"))),
            }
        }
        let (occupied, swaps) = sort_cancel(&seq);
        Ok(MajoranaString {
            n_modes,
            occupied,
            phase_exp: (phase + 2 * (swaps as u8 % 2)) % 4,
        })
    }

    pub fn from_linear(n_modes: usize, indices: &[usize], phase_exp: u8) -> Result<Self> {
        let raw: Vec<(usize, u8)> = indices
            .iter()
            .map(|&i| (i / 2, if i % 2 == 0 { 1 } else { 2 }))
            .collect();
        MajoranaString::normalize(n_modes, &raw, phase_exp)
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn occupied(&self) -> u64 {
        self.occupied
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    /// Number of gamma_1/gamma_2 factors.
    pub fn length(&self) -> u32 {
        self.occupied.count_ones()
    }

    pub fn is_identity_op(&self) -> bool {
        self.occupied == 0
    }

    /// Occupied linear indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        (0..2 * self.n_modes)
            .filter(|&i| self.occupied & (1u64 << i) != 0)
            .collect()
    }

    pub fn split_phase(&self) -> (MajoranaString, u8) {
        (
            MajoranaString {
                phase_exp: 0,
                ..self.clone()
            },
            self.phase_exp,
        )
    }

    fn check_width(&self, other: &MajoranaString) -> Result<()> {
        if self.n_modes != other.n_modes {
            return Err(Error::WidthMismatch(self.n_modes, other.n_modes));
        }
        Ok(())
    }

    /// Exact product in canonical form. The sign is the parity of crossings
    /// needed to merge the two ordered index sets, with equal indices
    /// cancelling via gamma^2 = I.
    pub fn mul(&self, other: &MajoranaString) -> Result<MajoranaString> {
        self.check_width(other)?;
        let mut swaps = 0u32;
        let mut bits = other.occupied;
        while bits != 0 {
            let j = bits.trailing_zeros();
            let above = if j >= 63 {
                0
            } else {
                self.occupied & !((1u64 << (j + 1)) - 1)
            };
            swaps += above.count_ones();
            bits &= bits - 1;
        }
        Ok(MajoranaString {
            n_modes: self.n_modes,
            occupied: self.occupied ^ other.occupied,
            phase_exp: (self.phase_exp + other.phase_exp + 2 * (swaps as u8 % 2)) % 4,
        })
    }

    /// Gamma_1 Gamma_2 = (-1)^{L_1 L_2 - c} Gamma_2 Gamma_1 with c the
    /// number of common factors.
    pub fn commutes(&self, other: &MajoranaString) -> Result<bool> {
        self.check_width(other)?;
        let c = (self.occupied & other.occupied).count_ones();
        Ok((self.length() * other.length() - c) % 2 == 0)
    }

    /// Hermiticity class of the bare string, determined by L mod 4.
    pub fn hermiticity(&self) -> Result<Hermiticity> {
        if self.phase_exp != 0 {
            return Err(Error::GeneratorPhase);
        }
        Ok(match self.length() % 4 {
            0 | 1 => Hermiticity::HermitianInvolution,
            _ => Hermiticity::AntiHermitianSkewInvolution,
        })
    }

    /// Parity-preserving strings have even length.
    pub fn is_parity_preserving(&self) -> bool {
        self.length() % 2 == 0
    }

    pub fn dagger(&self) -> MajoranaString {
        // reversing L factors costs L(L-1)/2 transpositions
        let l = self.length();
        let rev = (l * l.wrapping_sub(1) / 2) % 2;
        MajoranaString {
            phase_exp: ((4 - self.phase_exp) + 2 * rev as u8) % 4,
            ..self.clone()
        }
    }
}

fn sort_cancel(seq: &[usize]) -> (u64, u32) {
    let mut out: Vec<usize> = Vec::with_capacity(seq.len());
    let mut swaps = 0u32;
    for &idx in seq {
        let mut pos = out.len();
        while pos > 0 && out[pos - 1] > idx {
            pos -= 1;
            swaps += 1;
        }
        if pos > 0 && out[pos - 1] == idx {
            out.remove(pos - 1);
        } else {
            out.insert(pos, idx);
        }
    }
    let mut occ = 0u64;
    for idx in out {
        occ |= 1 << idx;
    }
    (occ, swaps)
}

impl fmt::Display for MajoranaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase_exp != 0 {
            write!(f, "i^{} * ", self.phase_exp)?;
        }
        if self.occupied == 0 {
            return write!(f, "I");
        }
        let labels: Vec<String> = self
            .indices()
            .iter()
            .map(|i| format!("g{}({})", if i % 2 == 0 { 1 } else { 2 }, i / 2))
            .collect();
        write!(f, "{}", labels.join(" "))
    }
}

/// Fermionic parity operator i^M prod_p gamma_2^(p) gamma_1^(p), canonical.
pub fn parity_operator(n_modes: usize) -> Result<MajoranaString> {
    let mut raw = Vec::new();
    for p in 0..n_modes {
        raw.push((p, 2u8));
        raw.push((p, 1u8));
    }
    MajoranaString::normalize(n_modes, &raw, (n_modes % 4) as u8)
}

/// Linear combination of Majorana strings, keys phase-normalized.
#[derive(Clone, PartialEq, Debug)]
pub struct MajoranaSum {
    n_modes: usize,
    terms: BTreeMap<u64, Coeff>,
}

impl MajoranaSum {
    pub fn zero(n_modes: usize) -> Self {
        MajoranaSum {
            n_modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n_modes: usize, c: Coeff) -> Self {
        let mut s = MajoranaSum::zero(n_modes);
        s.add_key(0, c);
        s
    }

    pub fn identity(n_modes: usize) -> Self {
        MajoranaSum::scalar(n_modes, Coeff::one())
    }

    pub fn from_string(g: &MajoranaString, c: Coeff) -> Self {
        let mut s = MajoranaSum::zero(g.n_modes());
        s.add_string(g, c);
        s
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_key(&mut self, key: u64, c: Coeff) {
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

    pub fn add_string(&mut self, g: &MajoranaString, c: Coeff) {
        debug_assert_eq!(g.n_modes(), self.n_modes);
        self.add_key(g.occupied, c.mul_i_pow(g.phase_exp));
    }

    pub fn terms(&self) -> impl Iterator<Item = (MajoranaString, &Coeff)> + '_ {
        self.terms.iter().map(|(&occ, c)| {
            (
                MajoranaString {
                    n_modes: self.n_modes,
                    occupied: occ,
                    phase_exp: 0,
                },
                c,
            )
        })
    }

    pub fn coeff_of(&self, g: &MajoranaString) -> Option<Coeff> {
        self.terms
            .get(&g.occupied)
            .map(|c| c.mul_i_pow((4 - g.phase_exp) % 4))
    }

    pub fn add(&self, other: &MajoranaSum) -> Result<MajoranaSum> {
        if self.n_modes != other.n_modes {
            return Err(Error::WidthMismatch(self.n_modes, other.n_modes));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_key(*k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MajoranaSum) -> Result<MajoranaSum> {
        self.add(&other.scale(&Coeff::from_int(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> MajoranaSum {
        let mut out = MajoranaSum::zero(self.n_modes);
        for (k, v) in &self.terms {
            out.add_key(*k, v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &MajoranaSum) -> Result<MajoranaSum> {
        if self.n_modes != other.n_modes {
            return Err(Error::WidthMismatch(self.n_modes, other.n_modes));
        }
        let mut out = MajoranaSum::zero(self.n_modes);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let g = a.mul(&b)?;
                out.add_string(&g, ca.mul(cb));
            }
        }
        Ok(out)
    }
}

/// Closed-form exponential of a bare Majorana string: e^{i theta Gamma} =
/// cos(theta) I + i sin(theta) Gamma for Hermitian strings, e^{theta Gamma} =
/// cos(theta) I + sin(theta) Gamma for anti-Hermitian ones.
pub fn maj_exp(theta: Angle, g: &MajoranaString) -> Result<MajoranaSum> {
    let class = g.hermiticity()?;
    let mut sum = MajoranaSum::zero(g.n_modes());
    sum.add_key(0, theta.cos());
    let s = theta.sin();
    match class {
        Hermiticity::HermitianInvolution => sum.add_string(g, s.mul_i_pow(1)),
        Hermiticity::AntiHermitianSkewInvolution => sum.add_string(g, s),
    }
    Ok(sum)
}

/// Similarity transformation of O by the unitary exponential of Gamma; the
/// unitary is e^{i theta Gamma} for Hermitian Gamma and e^{theta Gamma}
/// otherwise. Trivial in the commuting case; for anticommuting pairs rotates
/// O towards (i) O Gamma and collapses to one string on the pi/4 grid.
pub fn maj_conjugate(
    o: &MajoranaString,
    g: &MajoranaString,
    theta: Angle,
) -> Result<MajoranaSum> {
    let class = g.hermiticity()?;
    if o.commutes(g)? {
        return Ok(MajoranaSum::from_string(o, Coeff::one()));
    }
    let two = theta.double();
    let mut sum = MajoranaSum::zero(o.n_modes());
    sum.add_string(o, two.cos());
    let og = o.mul(g)?;
    match class {
        Hermiticity::HermitianInvolution => sum.add_string(&og, two.sin().mul_i_pow(1)),
        Hermiticity::AntiHermitianSkewInvolution => sum.add_string(&og, two.sin()),
    }
    Ok(sum)
}

pub fn is_clifford_angle(theta: Angle) -> bool {
    theta.is_clifford(AlgebraKind::Majorana)
}
