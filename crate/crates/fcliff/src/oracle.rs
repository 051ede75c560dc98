//! Ground-truth numerical backend: dense complex matrices on the 2^M Fock
//! space for every string type and sum, matrix exponentials by Hermitian
//! eigendecomposition, conjugations, norms, and tolerance comparisons.
//!
//! Basis order is |n_0 n_1 ... n_{M-1}> with mode 0 most significant, i.e.
//! index = sum_p n_p 2^{M-1-p}. Every sign test in the crate depends on this
//! convention, so it is frozen here.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::coeff::SymbolBindings;
use crate::fermion::{FermionicString, FermionicSum, ModeOp};
use crate::majorana::{MajoranaString, MajoranaSum};
use crate::pauli::{PauliString, PauliSum};
use crate::{Error, Result};

pub type CMat = DMatrix<Complex64>;

pub const MAX_ORACLE_MODES: usize = 12;

fn guard(n: usize) -> Result<()> {
    if n > MAX_ORACLE_MODES {
        return Err(Error::OracleTooLarge(n, MAX_ORACLE_MODES));
    }
    Ok(())
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn local(entries: [[Complex64; 2]; 2]) -> CMat {
    CMat::from_row_slice(
        2,
        2,
        &[
            entries[0][0],
            entries[0][1],
            entries[1][0],
            entries[1][1],
        ],
    )
}

fn local_i() -> CMat {
    local([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]])
}
fn local_x() -> CMat {
    local([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}
fn local_y() -> CMat {
    local([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
}
fn local_z() -> CMat {
    local([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
}
fn local_xz() -> CMat {
    local([[c(0.0, 0.0), c(-1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}
fn local_an() -> CMat {
    local([[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]])
}
fn local_cr() -> CMat {
    local([[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}
fn local_n() -> CMat {
    local([[c(0.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]])
}
fn local_h() -> CMat {
    local([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]])
}

fn kron_chain(locals: &[CMat]) -> CMat {
    let mut out = CMat::identity(1, 1);
    for l in locals {
        out = out.kronecker(l);
    }
    out
}

fn i_pow(k: u8) -> Complex64 {
    match k % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    }
}

/// Jordan-Wigner-represented elementary fermionic operator: a Z tail on all
/// earlier modes, the local 2x2 factor at `mode`, identity after.
fn jw_elementary(n_modes: usize, mode: usize, op: ModeOp) -> CMat {
    let mut locals = Vec::with_capacity(n_modes);
    for q in 0..n_modes {
        locals.push(if q < mode {
            match op {
                ModeOp::Cr | ModeOp::An => local_z(),
                _ => local_i(),
            }
        } else if q == mode {
            match op {
                ModeOp::Cr => local_cr(),
                ModeOp::An => local_an(),
                ModeOp::Num => local_n(),
                ModeOp::Hole => local_h(),
            }
        } else {
            local_i()
        });
    }
    kron_chain(&locals)
}

pub fn pauli_matrix(p: &PauliString) -> Result<CMat> {
    guard(p.n_qubits())?;
    let mut locals = Vec::with_capacity(p.n_qubits());
    for q in 0..p.n_qubits() {
        let bit = 1u64 << q;
        let x = p.x_bits() & bit != 0;
        let z = p.z_bits() & bit != 0;
        locals.push(match (x, z) {
            (false, false) => local_i(),
            (true, false) => local_x(),
            (false, true) => local_z(),
            (true, true) => local_xz(),
        });
    }
    Ok(kron_chain(&locals) * i_pow(p.phase_exp()))
}

pub fn pauli_sum_matrix(s: &PauliSum, bindings: &SymbolBindings) -> Result<CMat> {
    guard(s.n_qubits())?;
    let dim = 1usize << s.n_qubits();
    let mut out = CMat::zeros(dim, dim);
    for (p, coeff) in s.terms() {
        out += pauli_matrix(&p)? * coeff.to_complex(bindings)?;
    }
    Ok(out)
}

fn gamma_matrix(n_modes: usize, linear: usize) -> CMat {
    let mode = linear / 2;
    let mut locals = Vec::with_capacity(n_modes);
    for q in 0..n_modes {
        locals.push(if q < mode {
            local_z()
        } else if q == mode {
            if linear % 2 == 0 {
                local_x()
            } else {
                local_y()
            }
        } else {
            local_i()
        });
    }
    kron_chain(&locals)
}

pub fn majorana_matrix(g: &MajoranaString) -> Result<CMat> {
    guard(g.n_modes())?;
    let dim = 1usize << g.n_modes();
    let mut out = CMat::identity(dim, dim);
    for idx in g.indices() {
        out *= gamma_matrix(g.n_modes(), idx);
    }
    Ok(out * i_pow(g.phase_exp()))
}

pub fn majorana_sum_matrix(s: &MajoranaSum, bindings: &SymbolBindings) -> Result<CMat> {
    guard(s.n_modes())?;
    let dim = 1usize << s.n_modes();
    let mut out = CMat::zeros(dim, dim);
    for (g, coeff) in s.terms() {
        out += majorana_matrix(&g)? * coeff.to_complex(bindings)?;
    }
    Ok(out)
}

pub fn fermionic_matrix(f: &FermionicString) -> Result<CMat> {
    guard(f.n_modes())?;
    let dim = 1usize << f.n_modes();
    if f.is_zero() {
        return Ok(CMat::zeros(dim, dim));
    }
    let mut out = CMat::identity(dim, dim);
    for (mode, op) in f.presentation() {
        out *= jw_elementary(f.n_modes(), mode, op);
    }
    Ok(out * i_pow(f.phase_exp()))
}

pub fn fermionic_sum_matrix(s: &FermionicSum, bindings: &SymbolBindings) -> Result<CMat> {
    guard(s.n_modes())?;
    let dim = 1usize << s.n_modes();
    let mut out = CMat::zeros(dim, dim);
    for (f, coeff) in s.terms() {
        out += fermionic_matrix(f)? * coeff.to_complex(bindings)?;
    }
    Ok(out)
}

/// Tr(X^dagger X).
pub fn frobenius_norm_sq(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

pub fn max_abs_dev(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn approx_eq(a: &CMat, b: &CMat, tol: f64) -> bool {
    max_abs_dev(a, b) <= tol
}

/// exp(scale * H) for Hermitian H, via eigendecomposition so the result is
/// unitary to machine precision whenever scale is imaginary.
pub fn matrix_exp_hermitian(h: &CMat, scale: Complex64) -> CMat {
    let se = h.clone().symmetric_eigen();
    let n = h.nrows();
    let mut d = CMat::zeros(n, n);
    for k in 0..n {
        d[(k, k)] = (scale * c(se.eigenvalues[k], 0.0)).exp();
    }
    &se.eigenvectors * d * se.eigenvectors.adjoint()
}

/// U^dagger O U with U = exp(i theta G) for Hermitian G, or U = exp(theta G)
/// for anti-Hermitian G.
pub fn conjugate_by_exponent(o: &CMat, generator: &CMat, theta: f64, hermitian: bool) -> CMat {
    let u = if hermitian {
        matrix_exp_hermitian(generator, c(0.0, theta))
    } else {
        // exp(theta G) = exp(-i theta (iG)) with iG Hermitian
        let ig = generator * c(0.0, 1.0);
        matrix_exp_hermitian(&ig, c(0.0, -theta))
    };
    u.adjoint() * o * u
}

/// Index of |n_0 n_1 ... n_{M-1}> in the frozen basis order.
pub fn basis_index(occupations: &[bool]) -> usize {
    occupations
        .iter()
        .fold(0usize, |acc, &n| (acc << 1) | usize::from(n))
}
