//! Exact translations between the three algebras: the Jordan-Wigner map from
//! fermionic and Majorana strings to Pauli strings, its inverse, and the
//! fermion <-> Majorana substitutions.
//!
//! One global mode ordering is shared by all maps (qubit q <-> spinorbital
//! q), with Z tails running over the earlier modes.

use crate::coeff::{rat, Coeff};
use crate::fermion::{FermionicString, FermionicSum, ModeOp};
use crate::majorana::{MajoranaString, MajoranaSum};
use crate::pauli::{Axis, PauliString, PauliSum};
use crate::{Error, Result};

fn z_tail(n_qubits: usize, p: usize, head: Axis) -> Result<PauliString> {
    let mut axes: Vec<(usize, Axis)> = (0..p).map(|q| (q, Axis::Z)).collect();
    axes.push((p, head));
    PauliString::from_axes(n_qubits, &axes)
}

/// Image of one elementary fermionic factor under the Jordan-Wigner map:
/// a_p -> (X_p + iY_p)/2 Z-tail, a+_p -> (X_p - iY_p)/2 Z-tail,
/// n_p -> (I - Z_p)/2, h_p -> (I + Z_p)/2.
fn jw_factor(n_qubits: usize, mode: usize, op: ModeOp) -> Result<PauliSum> {
    let half = Coeff::from_rational(rat(1, 2));
    let mut sum = PauliSum::zero(n_qubits);
    match op {
        ModeOp::An => {
            sum.add_string(&z_tail(n_qubits, mode, Axis::X)?, half.clone());
            sum.add_string(&z_tail(n_qubits, mode, Axis::Y)?, half.mul_i_pow(1));
        }
        ModeOp::Cr => {
            sum.add_string(&z_tail(n_qubits, mode, Axis::X)?, half.clone());
            sum.add_string(&z_tail(n_qubits, mode, Axis::Y)?, half.mul_i_pow(3));
        }
        ModeOp::Num => {
            sum.add_string(&PauliString::identity(n_qubits)?, half.clone());
            sum.add_string(
                &PauliString::single(n_qubits, mode, Axis::Z)?,
                half.neg(),
            );
        }
        ModeOp::Hole => {
            sum.add_string(&PauliString::identity(n_qubits)?, half.clone());
            sum.add_string(&PauliString::single(n_qubits, mode, Axis::Z)?, half);
        }
    }
    Ok(sum)
}

pub fn jw_fermion_to_pauli(f: &FermionicString, n_qubits: usize) -> Result<PauliSum> {
    if f.n_modes() > n_qubits {
        return Err(Error::WidthMismatch(f.n_modes(), n_qubits));
    }
    if f.is_zero() {
        return Ok(PauliSum::zero(n_qubits));
    }
    let mut acc = PauliSum::scalar(n_qubits, Coeff::i_pow(f.phase_exp()));
    for (mode, op) in f.presentation() {
        acc = acc.mul(&jw_factor(n_qubits, mode, op)?)?;
    }
    Ok(acc)
}

pub fn jw_fermion_sum_to_pauli(s: &FermionicSum, n_qubits: usize) -> Result<PauliSum> {
    let mut out = PauliSum::zero(n_qubits);
    for (f, c) in s.terms() {
        out = out.add(&jw_fermion_to_pauli(f, n_qubits)?.scale(c))?;
    }
    Ok(out)
}

/// gamma_1^(k) -> X_k Z-tail, gamma_2^(k) -> Y_k Z-tail. One-to-one on
/// strings, phases composed exactly.
pub fn jw_majorana_to_pauli(g: &MajoranaString, n_qubits: usize) -> Result<PauliString> {
    if g.n_modes() > n_qubits {
        return Err(Error::WidthMismatch(g.n_modes(), n_qubits));
    }
    let mut acc = PauliString::identity(n_qubits)?;
    for idx in g.indices() {
        let head = if idx % 2 == 0 { Axis::X } else { Axis::Y };
        acc = acc.mul(&z_tail(n_qubits, idx / 2, head)?)?;
    }
    Ok(acc.mul_i_pow(g.phase_exp()))
}

pub fn jw_majorana_sum_to_pauli(s: &MajoranaSum, n_qubits: usize) -> Result<PauliSum> {
    let mut out = PauliSum::zero(n_qubits);
    for (g, c) in s.terms() {
        out.add_string(&jw_majorana_to_pauli(&g, n_qubits)?, c.clone());
    }
    Ok(out)
}

/// a+_p = (g1 - i g2)/2, a_p = (g1 + i g2)/2, n_p = (I + i g1 g2)/2,
/// h_p = (I - i g1 g2)/2.
fn majorana_factor(n_modes: usize, mode: usize, op: ModeOp) -> Result<MajoranaSum> {
    let half = Coeff::from_rational(rat(1, 2));
    let g1 = MajoranaString::normalize(n_modes, &[(mode, 1)], 0)?;
    let g2 = MajoranaString::normalize(n_modes, &[(mode, 2)], 0)?;
    let g12 = MajoranaString::normalize(n_modes, &[(mode, 1), (mode, 2)], 0)?;
    let mut sum = MajoranaSum::zero(n_modes);
    match op {
        ModeOp::Cr => {
            sum.add_string(&g1, half.clone());
            sum.add_string(&g2, half.mul_i_pow(3));
        }
        ModeOp::An => {
            sum.add_string(&g1, half.clone());
            sum.add_string(&g2, half.mul_i_pow(1));
        }
        ModeOp::Num => {
            sum.add_string(&MajoranaString::identity(n_modes)?, half.clone());
            sum.add_string(&g12, half.mul_i_pow(1));
        }
        ModeOp::Hole => {
            sum.add_string(&MajoranaString::identity(n_modes)?, half.clone());
            sum.add_string(&g12, half.mul_i_pow(3));
        }
    }
    Ok(sum)
}

pub fn fermion_to_majorana(f: &FermionicString) -> Result<MajoranaSum> {
    let n = f.n_modes();
    if f.is_zero() {
        return Ok(MajoranaSum::zero(n));
    }
    let mut acc = MajoranaSum::scalar(n, Coeff::i_pow(f.phase_exp()));
    for (mode, op) in f.presentation() {
        acc = acc.mul(&majorana_factor(n, mode, op)?)?;
    }
    Ok(acc)
}

pub fn fermion_sum_to_majorana(s: &FermionicSum) -> Result<MajoranaSum> {
    let mut out = MajoranaSum::zero(s.n_modes());
    for (f, c) in s.terms() {
        out = out.add(&fermion_to_majorana(f)?.scale(c))?;
    }
    Ok(out)
}

/// gamma_1 = a+ + a and gamma_2 = i (a+ - a), followed by monoid
/// normalization; round-trips with `fermion_to_majorana`.
pub fn majorana_to_fermion(g: &MajoranaString) -> Result<FermionicSum> {
    let n = g.n_modes();
    let mut acc = FermionicSum::scalar(n, Coeff::i_pow(g.phase_exp()));
    for idx in g.indices() {
        let mode = idx / 2;
        let mut factor = FermionicSum::zero(n);
        let cr = FermionicString::single(n, mode, ModeOp::Cr)?;
        let an = FermionicString::single(n, mode, ModeOp::An)?;
        if idx % 2 == 0 {
            factor.add_string(&cr, Coeff::one());
            factor.add_string(&an, Coeff::one());
        } else {
            factor.add_string(&cr, Coeff::i_pow(1));
            factor.add_string(&an, Coeff::i_pow(3));
        }
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

pub fn majorana_sum_to_fermion(s: &MajoranaSum) -> Result<FermionicSum> {
    let mut out = FermionicSum::zero(s.n_modes());
    for (g, c) in s.terms() {
        out = out.add(&majorana_to_fermion(&g)?.scale(c))?;
    }
    Ok(out)
}

/// Image of the per-qubit factors under the inverse Jordan-Wigner map:
/// X_p -> (a+_p + a_p) prod_{q<p} (h_q - n_q), Z_p -> h_p - n_p, with the
/// stored XZ local factor mapped as image(X) image(Z).
fn inverse_factor(n_modes: usize, q: usize, x: bool, z: bool) -> Result<FermionicSum> {
    let mut acc = FermionicSum::identity(n_modes);
    if x {
        let mut head = FermionicSum::zero(n_modes);
        head.add_string(&FermionicString::single(n_modes, q, ModeOp::Cr)?, Coeff::one());
        head.add_string(&FermionicString::single(n_modes, q, ModeOp::An)?, Coeff::one());
        for r in 0..q {
            head = head.mul(&z_image(n_modes, r)?)?;
        }
        acc = acc.mul(&head)?;
    }
    if z {
        acc = acc.mul(&z_image(n_modes, q)?)?;
    }
    Ok(acc)
}

fn z_image(n_modes: usize, q: usize) -> Result<FermionicSum> {
    let mut sum = FermionicSum::zero(n_modes);
    sum.add_string(
        &FermionicString::single(n_modes, q, ModeOp::Hole)?,
        Coeff::one(),
    );
    sum.add_string(
        &FermionicString::single(n_modes, q, ModeOp::Num)?,
        Coeff::from_int(-1),
    );
    Ok(sum)
}

pub fn inverse_jw(p: &PauliString, n_modes: usize) -> Result<FermionicSum> {
    if p.n_qubits() > n_modes {
        return Err(Error::WidthMismatch(p.n_qubits(), n_modes));
    }
    let mut acc = FermionicSum::scalar(n_modes, Coeff::i_pow(p.phase_exp()));
    for q in 0..p.n_qubits() {
        let bit = 1u64 << q;
        let x = p.x_bits() & bit != 0;
        let z = p.z_bits() & bit != 0;
        if x || z {
            acc = acc.mul(&inverse_factor(n_modes, q, x, z)?)?;
        }
    }
    Ok(acc)
}

pub fn inverse_jw_sum(s: &PauliSum, n_modes: usize) -> Result<FermionicSum> {
    let mut out = FermionicSum::zero(n_modes);
    for (p, c) in s.terms() {
        out = out.add(&inverse_jw(&p, n_modes)?.scale(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::SymbolBindings;
    use crate::oracle;
    use ModeOp::*;

    fn fs(n: usize, raw: &[(usize, ModeOp)]) -> FermionicString {
        FermionicString::normalize(n, raw, 0).unwrap()
    }

    fn ms(n: usize, raw: &[(usize, u8)]) -> MajoranaString {
        MajoranaString::normalize(n, raw, 0).unwrap()
    }

    #[test]
    fn jw_annihilation_example() {
        // a_1 on two qubits -> 1/2 Z0 X1 + i/2 Z0 Y1
        let sum = jw_fermion_to_pauli(&fs(2, &[(1, An)]), 2).unwrap();
        assert_eq!(sum.len(), 2);
        let zx = PauliString::from_axes(2, &[(0, Axis::Z), (1, Axis::X)]).unwrap();
        let zy = PauliString::from_axes(2, &[(0, Axis::Z), (1, Axis::Y)]).unwrap();
        assert_eq!(sum.coeff_of(&zx).unwrap(), Coeff::from_rational(rat(1, 2)));
        assert_eq!(
            sum.coeff_of(&zy).unwrap(),
            Coeff::from_rational(rat(1, 2)).mul_i_pow(1)
        );
    }

    #[test]
    fn jw_number_and_identity() {
        let sum = jw_fermion_to_pauli(&fs(1, &[(0, Num)]), 1).unwrap();
        let z = PauliString::single(1, 0, Axis::Z).unwrap();
        assert_eq!(sum.coeff_of(&z).unwrap(), Coeff::from_rational(rat(-1, 2)));

        let id = FermionicString::identity(3).unwrap();
        assert_eq!(jw_fermion_to_pauli(&id, 3).unwrap(), PauliSum::identity(3));
    }

    #[test]
    fn jw_majorana_examples() {
        // gamma_1^(2) -> Z0 Z1 X2
        let p = jw_majorana_to_pauli(&ms(3, &[(2, 1)]), 3).unwrap();
        let expect =
            PauliString::from_axes(3, &[(0, Axis::Z), (1, Axis::Z), (2, Axis::X)]).unwrap();
        assert_eq!(p, expect);

        // gamma_2^(0) -> Y0
        let p = jw_majorana_to_pauli(&ms(1, &[(0, 2)]), 1).unwrap();
        assert_eq!(p, PauliString::single(1, 0, Axis::Y).unwrap());

        // gamma_1 gamma_2 on one mode -> X0 Y0 = i Z0
        let p = jw_majorana_to_pauli(&ms(1, &[(0, 1), (0, 2)]), 1).unwrap();
        let (bare, phase) = p.split_phase();
        assert_eq!(bare, PauliString::single(1, 0, Axis::Z).unwrap());
        assert_eq!(phase, 1);
    }

    #[test]
    fn fermion_to_majorana_examples() {
        // a+_0 = g1/2 - i g2/2
        let sum = fermion_to_majorana(&fs(1, &[(0, Cr)])).unwrap();
        assert_eq!(sum.len(), 2);
        assert_eq!(
            sum.coeff_of(&ms(1, &[(0, 1)])).unwrap(),
            Coeff::from_rational(rat(1, 2))
        );
        assert_eq!(
            sum.coeff_of(&ms(1, &[(0, 2)])).unwrap(),
            Coeff::from_rational(rat(1, 2)).mul_i_pow(3)
        );

        // n_0 = I/2 + i g1 g2 / 2
        let sum = fermion_to_majorana(&fs(1, &[(0, Num)])).unwrap();
        assert_eq!(
            sum.coeff_of(&MajoranaString::identity(1).unwrap()).unwrap(),
            Coeff::from_rational(rat(1, 2))
        );
        assert_eq!(
            sum.coeff_of(&ms(1, &[(0, 1), (0, 2)])).unwrap(),
            Coeff::from_rational(rat(1, 2)).mul_i_pow(1)
        );

        // a+_c a_b expands into the four-string combination
        let sum = fermion_to_majorana(&fs(2, &[(0, Cr), (1, An)])).unwrap();
        assert_eq!(sum.len(), 4);
        for (_, c) in sum.terms() {
            let quarter = Coeff::from_rational(rat(1, 4));
            let ok = [0u8, 1, 2, 3]
                .iter()
                .any(|&k| *c == quarter.mul_i_pow(k));
            assert!(ok);
        }
    }

    #[test]
    fn majorana_to_fermion_examples() {
        // gamma_1 = a+ + a
        let sum = majorana_to_fermion(&ms(1, &[(0, 1)])).unwrap();
        assert_eq!(sum.coeff_of(&fs(1, &[(0, Cr)])).unwrap(), Coeff::one());
        assert_eq!(sum.coeff_of(&fs(1, &[(0, An)])).unwrap(), Coeff::one());

        // gamma_1 gamma_2 = i(h - n), frozen against the inverse of the
        // n = (I + i g1 g2)/2 substitution
        let sum = majorana_to_fermion(&ms(1, &[(0, 1), (0, 2)])).unwrap();
        assert_eq!(sum.len(), 2);
        assert_eq!(
            sum.coeff_of(&fs(1, &[(0, Hole)])).unwrap(),
            Coeff::i_pow(1)
        );
        assert_eq!(sum.coeff_of(&fs(1, &[(0, Num)])).unwrap(), Coeff::i_pow(3));

        // identity maps to identity
        let sum = majorana_to_fermion(&MajoranaString::identity(2).unwrap()).unwrap();
        assert_eq!(sum, FermionicSum::identity(2));
    }

    #[test]
    fn inverse_jw_examples() {
        // Z0 -> h0 - n0
        let z0 = PauliString::single(1, 0, Axis::Z).unwrap();
        let sum = inverse_jw(&z0, 1).unwrap();
        assert_eq!(sum.coeff_of(&fs(1, &[(0, Hole)])).unwrap(), Coeff::one());
        assert_eq!(
            sum.coeff_of(&fs(1, &[(0, Num)])).unwrap(),
            Coeff::from_int(-1)
        );

        // X1 -> (a+_1 + a_1)(h0 - n0)
        let x1 = PauliString::single(2, 1, Axis::X).unwrap();
        let sum = inverse_jw(&x1, 2).unwrap();
        assert_eq!(sum.len(), 4);
        assert_eq!(
            sum.coeff_of(&fs(2, &[(1, Cr), (0, Hole)])).unwrap(),
            Coeff::one()
        );
        assert_eq!(
            sum.coeff_of(&fs(2, &[(1, Cr), (0, Num)])).unwrap(),
            Coeff::from_int(-1)
        );
    }

    #[test]
    fn round_trips() {
        let strings = [
            fs(3, &[(0, Cr), (1, An)]),
            fs(3, &[(0, Num), (2, Hole)]),
            fs(3, &[(0, An), (1, An), (2, Cr)]),
            fs(3, &[(1, Num)]),
        ];
        for f in &strings {
            let sum = FermionicSum::from_string(f, Coeff::from_rational(rat(3, 7)));
            let there = jw_fermion_sum_to_pauli(&sum, 3).unwrap();
            let back = inverse_jw_sum(&there, 3).unwrap();
            assert!(back.equivalent(&sum), "jw round trip failed for {f}");

            let there = fermion_sum_to_majorana(&sum).unwrap();
            let back = majorana_sum_to_fermion(&there).unwrap();
            assert!(back.equivalent(&sum), "majorana round trip failed for {f}");
        }

        // bijectivity on Pauli strings through the fermionic space
        let zz = PauliString::from_axes(2, &[(0, Axis::Z), (1, Axis::Z)]).unwrap();
        let back = jw_fermion_sum_to_pauli(&inverse_jw(&zz, 2).unwrap(), 2).unwrap();
        assert_eq!(back, PauliSum::from_string(&zz, Coeff::one()));
    }

    #[test]
    fn matrix_commutativity() {
        let bind = SymbolBindings::new();
        let strings = [
            fs(3, &[(0, Cr), (2, An)]),
            fs(3, &[(1, Num), (0, Hole)]),
            fs(3, &[(0, An), (1, Cr), (2, Num)]),
        ];
        for f in &strings {
            let direct = oracle::fermionic_matrix(f).unwrap();
            let via_pauli = oracle::pauli_sum_matrix(
                &jw_fermion_to_pauli(f, 3).unwrap(),
                &bind,
            )
            .unwrap();
            assert!(oracle::approx_eq(&direct, &via_pauli, 1e-12));

            let via_majorana =
                oracle::majorana_sum_matrix(&fermion_to_majorana(f).unwrap(), &bind).unwrap();
            assert!(oracle::approx_eq(&direct, &via_majorana, 1e-12));
        }

        let g = ms(3, &[(0, 1), (1, 2), (2, 1)]);
        let direct = oracle::majorana_matrix(&g).unwrap();
        let via_pauli =
            oracle::pauli_matrix(&jw_majorana_to_pauli(&g, 3).unwrap()).unwrap();
        assert!(oracle::approx_eq(&direct, &via_pauli, 1e-12));
    }

    #[test]
    fn clifford_generators_map_to_majorana_cliffords() {
        // fermionic Clifford generators at (2k+1) pi/2 substitute into
        // Majorana Clifford rotations on the pi/4 grid: check the diagram
        // U_f O U_f^dag -> M(U_f O U_f^dag) = U_m M(O) U_m^dag numerically
        use crate::clifford::{clifford_theta, general_conjugate, Generator};
        let bind = SymbolBindings::new();
        let o = fs(2, &[(0, Cr), (1, An)]);
        let g = Generator::SingleExc {
            p: 0,
            q: 1,
            herm: false,
        };
        let theta = clifford_theta(0);
        let transformed = general_conjugate(&o, &g, theta).unwrap();
        let lhs =
            oracle::majorana_sum_matrix(&fermion_sum_to_majorana(&transformed).unwrap(), &bind)
                .unwrap();

        let a = g.to_sum(2).unwrap();
        let a_m = oracle::majorana_sum_matrix(&fermion_sum_to_majorana(&a).unwrap(), &bind)
            .unwrap();
        let o_m =
            oracle::majorana_sum_matrix(&fermion_to_majorana(&o).unwrap(), &bind).unwrap();
        let rhs = oracle::conjugate_by_exponent(&o_m, &a_m, theta.value(), false);
        assert!(oracle::approx_eq(&lhs, &rhs, 1e-10));
    }
}
