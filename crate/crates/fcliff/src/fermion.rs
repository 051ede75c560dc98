//! The fermionic monoid: normal-ordered strings over {a, a+, n, h} with a
//! distinguished zero element, monoid multiplication with per-mode absorption
//! rules, dagger, and commutators of linear combinations.
//!
//! Canonical product order inside a string is creations ascending, then
//! annihilations descending, then holes ascending, then numbers ascending;
//! all sign bookkeeping is relative to this order. A string's length L counts
//! elementary creation/annihilation factors (n and h count two each) and the
//! many-body rank is L/2.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coeff;
use crate::{Error, Result};

pub const MAX_MODES: usize = 64;

/// The single-mode occupant of a fermionic string.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ModeOp {
    /// Creation operator a+.
    Cr,
    /// Annihilation operator a.
    An,
    /// Hole number operator h = a a+.
    Hole,
    /// Particle number operator n = a+ a.
    Num,
}

impl ModeOp {
    /// Elementary operator count: n and h are products of two.
    pub fn length(self) -> u32 {
        match self {
            ModeOp::Cr | ModeOp::An => 1,
            ModeOp::Hole | ModeOp::Num => 2,
        }
    }

    pub fn is_odd(self) -> bool {
        self.length() % 2 == 1
    }

    pub fn dagger(self) -> ModeOp {
        match self {
            ModeOp::Cr => ModeOp::An,
            ModeOp::An => ModeOp::Cr,
            other => other,
        }
    }
}

/// Single-mode Cayley table; None is the vanished product.
fn mode_mul(a: ModeOp, b: ModeOp) -> Option<ModeOp> {
    use ModeOp::*;
    match (a, b) {
        (An, Cr) => Some(Hole),
        (An, Num) => Some(An),
        (Cr, An) => Some(Num),
        (Cr, Hole) => Some(Cr),
        (Num, Cr) => Some(Cr),
        (Num, Num) => Some(Num),
        (Hole, An) => Some(An),
        (Hole, Hole) => Some(Hole),
        _ => None,
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FermionicString {
    n_modes: usize,
    is_zero: bool,
    ops: BTreeMap<usize, ModeOp>,
    phase_exp: u8,
}

impl FermionicString {
    pub fn zero(n_modes: usize) -> Self {
        FermionicString {
            n_modes,
            is_zero: true,
            ops: BTreeMap::new(),
            phase_exp: 0,
        }
    }

    pub fn identity(n_modes: usize) -> Result<Self> {
        if n_modes > MAX_MODES {
            return Err(Error::WidthTooLarge(n_modes, MAX_MODES));
        }
        Ok(FermionicString {
            n_modes,
            is_zero: false,
            ops: BTreeMap::new(),
            phase_exp: 0,
        })
    }

    /// Build directly from per-mode occupants already in canonical form.
    pub fn from_map(n_modes: usize, ops: BTreeMap<usize, ModeOp>, phase_exp: u8) -> Result<Self> {
        if n_modes > MAX_MODES {
            return Err(Error::WidthTooLarge(n_modes, MAX_MODES));
        }
        if let Some(&m) = ops.keys().next_back() {
            if m >= n_modes {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    width: n_modes,
                });
            }
        }
        Ok(FermionicString {
            n_modes,
            is_zero: false,
            ops,
            phase_exp: phase_exp % 4,
        })
    }

    pub fn single(n_modes: usize, mode: usize, op: ModeOp) -> Result<Self> {
        let mut ops = BTreeMap::new();
        ops.insert(mode, op);
        FermionicString::from_map(n_modes, ops, 0)
    }

    /// Normalize a raw left-to-right product of elementary operators into
    /// canonical form, tracking anticommutation signs and applying the
    /// single-mode absorption rules. All raw sequences normalize; vanishing
    /// products return the zero element.
    pub fn normalize(n_modes: usize, raw: &[(usize, ModeOp)], phase_exp: u8) -> Result<Self> {
        if n_modes > MAX_MODES {
            return Err(Error::WidthTooLarge(n_modes, MAX_MODES));
        }
        for &(m, _) in raw {
            if m >= n_modes {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    width: n_modes,
                });
            }
        }
        // Stable-group by mode. Only crossings of two odd-length factors on
        // different modes carry a sign.
        let mut swaps = 0u32;
        for j in 1..raw.len() {
            if raw[j].1.is_odd() {
                for i in 0..j {
                    if raw[i].1.is_odd() && raw[i].0 > raw[j].0 {
                        swaps += 1;
                    }
                }
            }
        }
        // Left-to-right Cayley reduction within each mode.
        let mut ops: BTreeMap<usize, ModeOp> = BTreeMap::new();
        for &(m, op) in raw {
            match ops.get(&m) {
                None => {
                    ops.insert(m, op);
                }
                Some(&cur) => match mode_mul(cur, op) {
                    Some(next) => {
                        ops.insert(m, next);
                    }
                    None => return Ok(FermionicString::zero(n_modes)),
                },
            }
        }
        // Reorder the surviving odd factors from mode-ascending to canonical
        // (creations ascending, annihilations descending).
        let mode_asc: Vec<(usize, ModeOp)> = ops
            .iter()
            .filter(|(_, op)| op.is_odd())
            .map(|(&m, &op)| (m, op))
            .collect();
        let mut canonical: Vec<(usize, ModeOp)> = Vec::new();
        for (&m, &op) in ops.iter() {
            if op == ModeOp::Cr {
                canonical.push((m, op));
            }
        }
        for (&m, &op) in ops.iter().rev() {
            if op == ModeOp::An {
                canonical.push((m, op));
            }
        }
        swaps += permutation_inversions(&mode_asc, &canonical);
        Ok(FermionicString {
            n_modes,
            is_zero: false,
            ops,
            phase_exp: (phase_exp + 2 * (swaps as u8 % 2)) % 4,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    pub fn is_identity_op(&self) -> bool {
        !self.is_zero && self.ops.is_empty()
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn op_at(&self, mode: usize) -> Option<ModeOp> {
        if self.is_zero {
            None
        } else {
            self.ops.get(&mode).copied()
        }
    }

    pub fn modes_with(&self, op: ModeOp) -> Vec<usize> {
        self.ops
            .iter()
            .filter(|(_, &o)| o == op)
            .map(|(&m, _)| m)
            .collect()
    }

    pub fn creations(&self) -> Vec<usize> {
        self.modes_with(ModeOp::Cr)
    }

    pub fn annihilations(&self) -> Vec<usize> {
        self.modes_with(ModeOp::An)
    }

    pub fn holes(&self) -> Vec<usize> {
        self.modes_with(ModeOp::Hole)
    }

    pub fn numbers(&self) -> Vec<usize> {
        self.modes_with(ModeOp::Num)
    }

    /// Elementary operator count; the many-body rank is half of this.
    pub fn length(&self) -> u32 {
        self.ops.values().map(|op| op.length()).sum()
    }

    /// The factors of the string in canonical product order.
    pub fn presentation(&self) -> Vec<(usize, ModeOp)> {
        let mut seq = Vec::with_capacity(self.ops.len());
        for m in self.creations() {
            seq.push((m, ModeOp::Cr));
        }
        for m in self.annihilations().into_iter().rev() {
            seq.push((m, ModeOp::An));
        }
        for m in self.holes() {
            seq.push((m, ModeOp::Hole));
        }
        for m in self.numbers() {
            seq.push((m, ModeOp::Num));
        }
        seq
    }

    pub fn split_phase(&self) -> (FermionicString, u8) {
        (
            FermionicString {
                phase_exp: 0,
                ..self.clone()
            },
            self.phase_exp,
        )
    }

    fn check_width(&self, other: &FermionicString) -> Result<()> {
        if self.n_modes != other.n_modes {
            return Err(Error::WidthMismatch(self.n_modes, other.n_modes));
        }
        Ok(())
    }

    /// Monoid product: concatenate and renormalize. Always a single string
    /// (possibly zero) times a power of i.
    pub fn mul(&self, other: &FermionicString) -> Result<FermionicString> {
        self.check_width(other)?;
        if self.is_zero || other.is_zero {
            return Ok(FermionicString::zero(self.n_modes));
        }
        let mut seq = self.presentation();
        seq.extend(other.presentation());
        FermionicString::normalize(self.n_modes, &seq, (self.phase_exp + other.phase_exp) % 4)
    }

    /// Adjoint: swaps creation/annihilation factors and reverses the product
    /// order; involutive.
    pub fn dagger(&self) -> FermionicString {
        if self.is_zero {
            return self.clone();
        }
        let seq: Vec<(usize, ModeOp)> = self
            .presentation()
            .into_iter()
            .rev()
            .map(|(m, op)| (m, op.dagger()))
            .collect();
        FermionicString::normalize(self.n_modes, &seq, (4 - self.phase_exp) % 4)
            .expect("dagger preserves validity")
    }

    /// String with the occupant of `mode` removed from the presentation and
    /// an optional new factor appended at the end, then renormalized. The
    /// building block for the Clifford transformation tables.
    pub fn remove_then_append(
        &self,
        remove: usize,
        append: Option<(usize, ModeOp)>,
    ) -> FermionicString {
        let mut seq: Vec<(usize, ModeOp)> = self
            .presentation()
            .into_iter()
            .filter(|&(m, _)| m != remove)
            .collect();
        if let Some(item) = append {
            seq.push(item);
        }
        FermionicString::normalize(self.n_modes, &seq, self.phase_exp)
            .expect("modification preserves validity")
    }
}

/// Parity of the permutation taking `from` to `to` (same distinct items).
fn permutation_inversions(from: &[(usize, ModeOp)], to: &[(usize, ModeOp)]) -> u32 {
    debug_assert_eq!(from.len(), to.len());
    let perm: Vec<usize> = from
        .iter()
        .map(|item| to.iter().position(|t| t == item).expect("same items"))
        .collect();
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

impl fmt::Display for FermionicString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            return write!(f, "0");
        }
        if self.phase_exp != 0 {
            write!(f, "i^{} * ", self.phase_exp)?;
        }
        if self.ops.is_empty() {
            return write!(f, "I");
        }
        let labels: Vec<String> = self
            .presentation()
            .iter()
            .map(|&(m, op)| match op {
                ModeOp::Cr => format!("a{m}^"),
                ModeOp::An => format!("a{m}"),
                ModeOp::Hole => format!("h{m}"),
                ModeOp::Num => format!("n{m}"),
            })
            .collect();
        write!(f, "{}", labels.join(" "))
    }
}

/// Linear combination of fermionic strings. Keys are phase-normalized and
/// never zero; merging complementary n/h pairs with equal coefficients keeps
/// Clifford-angle conjugation results collapsed to single strings.
#[derive(Clone, PartialEq, Debug)]
pub struct FermionicSum {
    n_modes: usize,
    terms: BTreeMap<FermionicString, Coeff>,
}

impl FermionicSum {
    pub fn zero(n_modes: usize) -> Self {
        FermionicSum {
            n_modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n_modes: usize, c: Coeff) -> Self {
        let mut s = FermionicSum::zero(n_modes);
        s.add_string(&FermionicString::identity(n_modes).unwrap(), c);
        s
    }

    pub fn identity(n_modes: usize) -> Self {
        FermionicSum::scalar(n_modes, Coeff::one())
    }

    pub fn from_string(s: &FermionicString, c: Coeff) -> Self {
        let mut sum = FermionicSum::zero(s.n_modes());
        sum.add_string(s, c);
        sum
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

    pub fn add_string(&mut self, s: &FermionicString, c: Coeff) {
        debug_assert_eq!(s.n_modes(), self.n_modes);
        if s.is_zero() || c.is_zero() {
            return;
        }
        let (key, phase) = s.split_phase();
        let c = c.mul_i_pow(phase);
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

    pub fn terms(&self) -> impl Iterator<Item = (&FermionicString, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, s: &FermionicString) -> Option<Coeff> {
        let (key, phase) = s.split_phase();
        self.terms
            .get(&key)
            .map(|c| c.mul_i_pow((4 - phase) % 4))
    }

    pub fn add(&self, other: &FermionicSum) -> Result<FermionicSum> {
        if self.n_modes != other.n_modes {
            return Err(Error::WidthMismatch(self.n_modes, other.n_modes));
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_string(s, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FermionicSum) -> Result<FermionicSum> {
        self.add(&other.scale(&Coeff::from_int(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> FermionicSum {
        let mut out = FermionicSum::zero(self.n_modes);
        for (s, v) in &self.terms {
            out.add_string(s, v.mul(c));
        }
        out
    }

    pub fn dagger(&self) -> FermionicSum {
        let mut out = FermionicSum::zero(self.n_modes);
        for (s, c) in &self.terms {
            out.add_string(&s.dagger(), c.conj());
        }
        out
    }

    pub fn mul(&self, other: &FermionicSum) -> Result<FermionicSum> {
        if self.n_modes != other.n_modes {
            return Err(Error::WidthMismatch(self.n_modes, other.n_modes));
        }
        let mut out = FermionicSum::zero(self.n_modes);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let s = a.mul(b)?;
                out.add_string(&s, ca.mul(cb));
            }
        }
        Ok(out.simplified())
    }

    /// ab - ba with exact coefficients.
    pub fn commutator(&self, other: &FermionicSum) -> Result<FermionicSum> {
        Ok(self.mul(other)?.sub(&other.mul(self)?)?.simplified())
    }

    /// Merge complementary pairs: S n_p and S h_p with equal coefficients
    /// combine into S, since n + h = I on every mode. Iterates to a fixed
    /// point scanning keys and modes in ascending order.
    pub fn simplified(&self) -> FermionicSum {
        let mut sum = self.clone();
        'outer: loop {
            let keys: Vec<FermionicString> = sum.terms.keys().cloned().collect();
            for key in &keys {
                let c = match sum.terms.get(key) {
                    Some(c) => c.clone(),
                    None => continue,
                };
                for (&mode, &op) in key.ops.iter() {
                    let partner_op = match op {
                        ModeOp::Num => ModeOp::Hole,
                        ModeOp::Hole => ModeOp::Num,
                        _ => continue,
                    };
                    let mut partner = key.clone();
                    partner.ops.insert(mode, partner_op);
                    if sum.terms.get(&partner) == Some(&c) {
                        sum.terms.remove(key);
                        sum.terms.remove(&partner);
                        let mut merged = key.clone();
                        merged.ops.remove(&mode);
                        sum.add_string(&merged, c);
                        continue 'outer;
                    }
                }
            }
            return sum;
        }
    }

    /// Rewrite every hole operator through h = I - n, yielding the unique
    /// normal form over {I, a, a+, n} strings.
    pub fn expand_holes(&self) -> FermionicSum {
        let mut out = FermionicSum::zero(self.n_modes);
        for (s, c) in &self.terms {
            let holes = s.holes();
            // h and n are even factors, so no sign bookkeeping is needed
            for branch in 0..(1u64 << holes.len()) {
                let mut t = s.clone();
                let mut coeff = c.clone();
                for (i, &m) in holes.iter().enumerate() {
                    if branch & (1 << i) != 0 {
                        t.ops.insert(m, ModeOp::Num);
                        coeff = coeff.neg();
                    } else {
                        t.ops.remove(&m);
                    }
                }
                out.add_string(&t, coeff);
            }
        }
        out
    }

    /// Operator equality through the hole-expanded normal form.
    pub fn equivalent(&self, other: &FermionicSum) -> bool {
        self.expand_holes() == other.expand_holes()
    }

    pub fn max_length(&self) -> u32 {
        self.terms.keys().map(|s| s.length()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use ModeOp::*;

    fn s(n: usize, raw: &[(usize, ModeOp)]) -> FermionicString {
        FermionicString::normalize(n, raw, 0).unwrap()
    }

    #[test]
    fn absorption_examples() {
        assert_eq!(s(1, &[(0, Cr), (0, An)]), s(1, &[(0, Num)]));
        assert!(s(1, &[(0, An), (0, An)]).is_zero());
        assert_eq!(s(1, &[(0, An), (0, Cr)]), s(1, &[(0, Hole)]));
    }

    #[test]
    fn reordering_tracks_signs() {
        // a_1 a+_0 = - a+_0 a_1
        let t = s(2, &[(1, An), (0, Cr)]);
        assert_eq!(t.phase_exp(), 2);
        assert_eq!(t.op_at(0), Some(Cr));
        assert_eq!(t.op_at(1), Some(An));
    }

    #[test]
    fn single_mode_cayley_exhaustive() {
        // monoid closure over all 6^2 per-mode pairs (I and 0 included)
        let elems: Vec<Option<ModeOp>> = vec![None, Some(Cr), Some(An), Some(Num), Some(Hole)];
        for &a in &elems {
            for &b in &elems {
                let mut raw = Vec::new();
                if let Some(a) = a {
                    raw.push((0usize, a));
                }
                if let Some(b) = b {
                    raw.push((0usize, b));
                }
                let prod = s(1, &raw);
                // result is a single canonical string or zero, never a sum
                assert!(prod.is_zero() || prod.ops.len() <= 1);
            }
        }
        let zero = FermionicString::zero(1);
        for &a in &elems {
            let mut raw_zero_left = zero.clone();
            if let Some(a) = a {
                raw_zero_left = zero.mul(&s(1, &[(0, a)])).unwrap();
            }
            assert!(raw_zero_left.is_zero());
        }
    }

    #[test]
    fn mul_examples() {
        assert!(s(1, &[(0, Num)]).mul(&s(1, &[(0, Hole)])).unwrap().is_zero());

        let id = FermionicString::identity(3).unwrap();
        let cr2 = s(3, &[(2, Cr)]);
        assert_eq!(id.mul(&cr2).unwrap(), cr2);

        // frozen from the dense oracle on M = 2: (a+_0 a_1)(a+_1 a_0) = n_0 h_1
        let a = s(2, &[(0, Cr), (1, An)]);
        let b = s(2, &[(1, Cr), (0, An)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, s(2, &[(0, Num), (1, Hole)]));
        assert_eq!(prod.phase_exp(), 0);
    }

    #[test]
    fn dagger_examples() {
        let t = s(2, &[(0, Cr), (1, An)]);
        let td = t.dagger();
        assert_eq!(td.op_at(0), Some(An));
        assert_eq!(td.op_at(1), Some(Cr));
        assert_eq!(td.phase_exp(), 0);

        assert_eq!(s(1, &[(0, Num)]).dagger(), s(1, &[(0, Num)]));

        // (a+_2 a+_3 a_1 a_0)^dagger = a+_0 a+_1 a_3 a_2
        let t = s(4, &[(2, Cr), (3, Cr), (1, An), (0, An)]);
        let td = t.dagger();
        let expect = s(4, &[(0, Cr), (1, Cr), (3, An), (2, An)]);
        assert_eq!(td, expect);

        // involution on a few randomish strings
        for raw in [
            vec![(0, Cr), (2, An), (3, Num)],
            vec![(1, An), (2, An), (0, Hole)],
            vec![(0, Cr), (1, Cr), (2, Cr), (3, An)],
        ] {
            let t = s(4, &raw);
            assert_eq!(t.dagger().dagger(), t);
        }
    }

    #[test]
    fn length_and_rank() {
        let t = s(4, &[(0, Cr), (1, An), (2, Hole), (3, Num)]);
        assert_eq!(t.length(), 6);
        assert!(s(1, &[(0, Num)]).length() == 2);
    }

    #[test]
    fn commutator_examples() {
        let n0 = FermionicSum::from_string(&s(1, &[(0, Num)]), Coeff::one());
        let cr0 = FermionicSum::from_string(&s(1, &[(0, Cr)]), Coeff::one());
        assert_eq!(n0.commutator(&cr0).unwrap(), cr0);

        let n0 = FermionicSum::from_string(&s(2, &[(0, Num)]), Coeff::one());
        let n1 = FermionicSum::from_string(&s(2, &[(1, Num)]), Coeff::one());
        assert!(n0.commutator(&n1).unwrap().is_empty());

        // [A^0, A^1] = 2 (A^{01} - A^0_1)
        let a0 = FermionicSum::from_string(&s(2, &[(0, Cr)]), Coeff::one())
            .sub(&FermionicSum::from_string(&s(2, &[(0, An)]), Coeff::one()))
            .unwrap();
        let a1 = FermionicSum::from_string(&s(2, &[(1, Cr)]), Coeff::one())
            .sub(&FermionicSum::from_string(&s(2, &[(1, An)]), Coeff::one()))
            .unwrap();
        let comm = a0.commutator(&a1).unwrap();
        let two = Coeff::from_int(2);
        let mut expect = FermionicSum::zero(2);
        expect.add_string(&s(2, &[(0, Cr), (1, Cr)]), two.clone());
        expect.add_string(&s(2, &[(1, An), (0, An)]), two.neg());
        expect.add_string(&s(2, &[(0, Cr), (1, An)]), two.neg());
        expect.add_string(&s(2, &[(1, Cr), (0, An)]), two);
        assert_eq!(comm, expect);
    }

    #[test]
    fn simplify_merges_complementary_pairs() {
        let mut sum = FermionicSum::zero(2);
        let half = Coeff::from_rational(rat(1, 2));
        sum.add_string(&s(2, &[(0, Num), (1, Cr)]), half.clone());
        sum.add_string(&s(2, &[(0, Hole), (1, Cr)]), half.clone());
        let simp = sum.simplified();
        assert_eq!(simp.len(), 1);
        assert_eq!(simp.coeff_of(&s(2, &[(1, Cr)])), Some(half));

        // unequal coefficients stay separate
        let mut sum = FermionicSum::zero(1);
        sum.add_string(&s(1, &[(0, Num)]), Coeff::from_rational(rat(1, 3)));
        sum.add_string(&s(1, &[(0, Hole)]), Coeff::from_rational(rat(1, 2)));
        assert_eq!(sum.simplified().len(), 2);
    }

    #[test]
    fn expand_holes_normal_form() {
        // h_0 = I - n_0
        let sum = FermionicSum::from_string(&s(1, &[(0, Hole)]), Coeff::one());
        let ex = sum.expand_holes();
        assert_eq!(ex.len(), 2);
        assert_eq!(
            ex.coeff_of(&FermionicString::identity(1).unwrap()),
            Some(Coeff::one())
        );
        assert_eq!(ex.coeff_of(&s(1, &[(0, Num)])), Some(Coeff::from_int(-1)));

        // n + h = I in both representations
        let mut nh = FermionicSum::from_string(&s(1, &[(0, Num)]), Coeff::one());
        nh.add_string(&s(1, &[(0, Hole)]), Coeff::one());
        assert!(nh.equivalent(&FermionicSum::identity(1)));
    }

    #[test]
    fn parity_grading() {
        let strings = [
            s(3, &[(0, Cr)]),
            s(3, &[(0, An), (1, Cr)]),
            s(3, &[(1, Num), (2, An)]),
            s(3, &[(0, Hole), (1, An), (2, Cr)]),
        ];
        for a in &strings {
            for b in &strings {
                let p = a.mul(b).unwrap();
                if !p.is_zero() {
                    assert_eq!((a.length() + b.length()) % 2, p.length() % 2);
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(s(4, &[(0, Cr), (1, An), (2, Hole), (3, Num)]).to_string(), "a0^ a1 h2 n3");
        assert_eq!(FermionicString::zero(2).to_string(), "0");
        // canonical product order puts annihilations in descending order
        assert_eq!(s(2, &[(1, An), (0, An)]).to_string(), "a1 a0");
    }
}
