//! The qubit-tapering pipeline: Z2-symmetry detection over GF(2), tapering
//! Clifford construction, exact conjugation of Pauli-sum Hamiltonians,
//! sector substitution with qubit removal, and the minimum-basis H2
//! end-to-end demonstration.

use serde::Serialize;

use crate::coeff::{rat, Coeff, SymbolBindings};
use crate::fermion::{FermionicString, FermionicSum, ModeOp};
use crate::gf2::Gf2Matrix;
use crate::mappings::{inverse_jw_sum, jw_fermion_sum_to_pauli};
use crate::oracle;
use crate::pauli::{Axis, PauliString, PauliSum};
use crate::{Error, Result};

/// Independent generating set of the Z2 symmetry group of a Hamiltonian:
/// phase-0 Hermitian strings commuting with every term.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryGroup {
    pub n_qubits: usize,
    pub generators: Vec<PauliString>,
}

impl SymmetryGroup {
    /// Compare as GF(2) row spaces of the (x|z) vectors.
    pub fn same_group(&self, other: &SymmetryGroup) -> bool {
        if self.n_qubits != other.n_qubits {
            return false;
        }
        let rows = |g: &SymmetryGroup| {
            Gf2Matrix::new(
                2 * g.n_qubits,
                g.generators
                    .iter()
                    .map(|p| (p.x_bits() as u128) | ((p.z_bits() as u128) << g.n_qubits))
                    .collect(),
            )
        };
        rows(self).row_space_eq(&rows(other))
    }
}

/// Kernel of the symplectic-complement system of the Hamiltonian's terms:
/// all Pauli strings commuting with every term, as an independent basis.
/// Deterministic under the fixed leftmost-pivot elimination.
pub fn find_z2_symmetries(h: &PauliSum) -> SymmetryGroup {
    let m = h.n_qubits();
    let mut rows = Vec::new();
    for (p, _) in h.terms() {
        if !p.is_identity_op() {
            // constraint row (z_t | x_t) so that row . (x_v | z_v) is the
            // symplectic inner product
            rows.push((p.z_bits() as u128) | ((p.x_bits() as u128) << m));
        }
    }
    let kernel = Gf2Matrix::new(2 * m, rows).kernel_basis();
    let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let generators = kernel
        .into_iter()
        .map(|v| {
            let x = (v as u64) & mask;
            let z = ((v >> m) as u64) & mask;
            let y = (x & z).count_ones() as u8;
            // textbook Hermitian phase
            PauliString::from_bits(m, x, z, y % 4).unwrap()
        })
        .collect();
    SymmetryGroup {
        n_qubits: m,
        generators,
    }
}

#[derive(Clone, Debug)]
pub struct PlanEntry {
    /// Symmetry generator adapted to the target (Z on its own target, not on
    /// the others).
    pub generator: PauliString,
    pub target: usize,
    /// U_i = (X_target + generator)/sqrt(2), a Hermitian involution.
    pub clifford: PauliSum,
}

#[derive(Clone, Debug)]
pub struct TaperingPlan {
    pub n_qubits: usize,
    pub entries: Vec<PlanEntry>,
    /// One +-1 eigenvalue per entry.
    pub sector: Vec<i8>,
}

impl TaperingPlan {
    pub fn with_sector(&self, sector: &[i8]) -> Result<TaperingPlan> {
        if sector.len() != self.entries.len() {
            return Err(Error::Tapering(format!(
                "sector length {} does not match {} generators",
                sector.len(),
                self.entries.len()
            )));
        }
        Ok(TaperingPlan {
            sector: sector.to_vec(),
            ..self.clone()
        })
    }
}

/// Build the tapering Cliffords U_i = (X_{q_i} + tau_i)/sqrt(2).
///
/// When no targets are given, each generator picks the highest qubit where
/// it acts with Z and that no earlier generator has taken. The generator
/// basis is then re-adapted by GF(2) elimination so generator i is the only
/// one acting on target i; mutual commutation of the U_i and the involution
/// property are validated symbolically.
pub fn build_tapering_plan(
    group: &SymmetryGroup,
    targets: Option<&[usize]>,
    sector: &[i8],
) -> Result<TaperingPlan> {
    let m = group.n_qubits;
    let gens = &group.generators;
    if gens.is_empty() {
        return Err(Error::Tapering("no symmetry generators to taper".into()));
    }
    let targets: Vec<usize> = match targets {
        Some(t) => {
            if t.len() != gens.len() {
                return Err(Error::Tapering(format!(
                    "{} targets given for {} generators",
                    t.len(),
                    gens.len()
                )));
            }
            t.to_vec()
        }
        None => auto_targets(gens, m)?,
    };
    for &q in &targets {
        if q >= m {
            return Err(Error::IndexOutOfRange { index: q, width: m });
        }
    }
    if sector.len() != gens.len() {
        return Err(Error::Tapering(format!(
            "sector length {} does not match {} generators",
            sector.len(),
            gens.len()
        )));
    }
    if sector.iter().any(|s| *s != 1 && *s != -1) {
        return Err(Error::Tapering("sector entries must be +-1".into()));
    }

    // Adapt the basis: after elimination, generator i has Z on target i and
    // acts trivially on every other target.
    let mut rows: Vec<(u64, u64)> = gens.iter().map(|p| (p.x_bits(), p.z_bits())).collect();
    for (i, &q) in targets.iter().enumerate() {
        let bit = 1u64 << q;
        let Some(j) = (i..rows.len()).find(|&j| rows[j].1 & bit != 0 && rows[j].0 & bit == 0)
        else {
            return Err(Error::Tapering(format!(
                "no generator acts with Z on target qubit {q}; change the basis or targets"
            )));
        };
        rows.swap(i, j);
        for r in 0..rows.len() {
            if r != i && rows[r].1 & bit != 0 {
                rows[r].0 ^= rows[i].0;
                rows[r].1 ^= rows[i].1;
            }
        }
    }
    for (i, &(x, z)) in rows.iter().enumerate() {
        for (j, &q) in targets.iter().enumerate() {
            let bit = 1u64 << q;
            if x & bit != 0 || (i != j && z & bit != 0) {
                return Err(Error::Tapering(format!(
                    "generator {i} does not act as Z-only on its target after basis adaptation"
                )));
            }
        }
    }

    let mut entries = Vec::new();
    for (&(x, z), &q) in rows.iter().zip(&targets) {
        let y = (x & z).count_ones() as u8;
        let tau = PauliString::from_bits(m, x, z, y % 4)?;
        let mut clifford = PauliSum::zero(m);
        clifford.add_string(&PauliString::single(m, q, Axis::X)?, Coeff::inv_sqrt2());
        clifford.add_string(&tau, Coeff::inv_sqrt2());
        entries.push(PlanEntry {
            generator: tau,
            target: q,
            clifford,
        });
    }

    // U_i^2 = I and pairwise commutation, checked exactly.
    let id = PauliSum::identity(m);
    for (i, e) in entries.iter().enumerate() {
        if e.clifford.mul(&e.clifford)? != id {
            return Err(Error::Tapering(format!(
                "tapering unitary {i} is not an involution"
            )));
        }
        for other in entries.iter().skip(i + 1) {
            if e.clifford.mul(&other.clifford)? != other.clifford.mul(&e.clifford)? {
                return Err(Error::Tapering(
                    "tapering unitaries do not commute".into(),
                ));
            }
        }
    }

    Ok(TaperingPlan {
        n_qubits: m,
        entries,
        sector: sector.to_vec(),
    })
}

fn auto_targets(gens: &[PauliString], m: usize) -> Result<Vec<usize>> {
    let mut taken = vec![false; m];
    let mut targets = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let q = (0..m)
            .rev()
            .find(|&q| {
                let bit = 1u64 << q;
                g.z_bits() & bit != 0 && g.x_bits() & bit == 0 && !taken[q]
            })
            .ok_or_else(|| {
                Error::Tapering(format!("no free Z-acted qubit available for generator {i}"))
            })?;
        taken[q] = true;
        targets.push(q);
    }
    Ok(targets)
}

/// Exact U H U with U the product of the plan's Hermitian involutions; the
/// 1/sqrt(2) factors cancel pairwise in exact mode.
pub fn conjugate_hamiltonian(h: &PauliSum, plan: &TaperingPlan) -> Result<PauliSum> {
    if h.n_qubits() != plan.n_qubits {
        return Err(Error::WidthMismatch(h.n_qubits(), plan.n_qubits));
    }
    let mut u = PauliSum::identity(plan.n_qubits);
    for e in &plan.entries {
        u = u.mul(&e.clifford)?;
    }
    u.mul(h)?.mul(&u)
}

/// Substitute the plan's sector eigenvalues for the X gates on the target
/// qubits and delete those qubits. Every term must act on each target with
/// I or X only.
pub fn taper_qubits(h: &PauliSum, plan: &TaperingPlan) -> Result<PauliSum> {
    if h.n_qubits() != plan.n_qubits {
        return Err(Error::WidthMismatch(h.n_qubits(), plan.n_qubits));
    }
    let m = plan.n_qubits;
    let target_mask: u64 = plan.entries.iter().map(|e| 1u64 << e.target).sum();
    let kept: Vec<usize> = (0..m).filter(|q| target_mask & (1 << q) == 0).collect();
    let mut out = PauliSum::zero(kept.len());
    for (p, c) in h.terms() {
        if p.z_bits() & target_mask != 0 {
            return Err(Error::Tapering(format!(
                "term {} acts with Z or Y on a target qubit; transform the Hamiltonian first",
                p.label()
            )));
        }
        let mut coeff = c.clone();
        for (e, &s) in plan.entries.iter().zip(&plan.sector) {
            if p.x_bits() & (1 << e.target) != 0 && s == -1 {
                coeff = coeff.neg();
            }
        }
        let mut x = 0u64;
        let mut z = 0u64;
        for (new_q, &old_q) in kept.iter().enumerate() {
            if p.x_bits() & (1 << old_q) != 0 {
                x |= 1 << new_q;
            }
            if p.z_bits() & (1 << old_q) != 0 {
                z |= 1 << new_q;
            }
        }
        out.add_string(&PauliString::from_bits(kept.len(), x, z, 0)?, coeff);
    }
    Ok(out)
}

/// Sector of a computational basis state: the tau_i eigenvalue of
/// |n_0 n_1 ...>, which U turns into the X eigenvalue on the target.
pub fn sector_of_state(occupations: &[bool], plan: &TaperingPlan) -> Result<Vec<i8>> {
    if occupations.len() != plan.n_qubits {
        return Err(Error::WidthMismatch(occupations.len(), plan.n_qubits));
    }
    let occ_mask: u64 = occupations
        .iter()
        .enumerate()
        .filter(|(_, &n)| n)
        .map(|(q, _)| 1u64 << q)
        .sum();
    plan.entries
        .iter()
        .map(|e| {
            if e.generator.x_bits() != 0 {
                return Err(Error::Tapering(
                    "generator is not diagonal in the computational basis".into(),
                ));
            }
            let parity = (e.generator.z_bits() & occ_mask).count_ones() % 2;
            Ok(if parity == 0 { 1 } else { -1 })
        })
        .collect()
}

pub fn sector_label(signs: &[i8]) -> String {
    signs
        .iter()
        .map(|&s| if s == 1 { '+' } else { '-' })
        .collect()
}

pub fn parse_sector(label: &str) -> Result<Vec<i8>> {
    label
        .chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(Error::Invalid(format!("bad sector character `{c}`"))),
        })
        .collect()
}

/// The second-quantized electronic Hamiltonian of minimum-basis H2 on four
/// spinorbitals, with symbolic one- and two-electron integrals.
pub fn h2_hamiltonian() -> FermionicSum {
    use ModeOp::*;
    let n = 4;
    let sym = Coeff::from_symbol;
    let single = |p| FermionicString::single(n, p, Num).unwrap();
    let nn = |p, q| FermionicString::normalize(n, &[(p, Num), (q, Num)], 0).unwrap();
    let exc = |c1, c2, a2, a1| {
        FermionicString::normalize(n, &[(c1, Cr), (c2, Cr), (a2, An), (a1, An)], 0).unwrap()
    };

    let mut h = FermionicSum::zero(n);
    h.add_string(&single(0), sym("h00"));
    h.add_string(&single(1), sym("h00"));
    h.add_string(&single(2), sym("h22"));
    h.add_string(&single(3), sym("h22"));
    h.add_string(&nn(0, 1), sym("v0101"));
    h.add_string(&nn(2, 3), sym("v2323"));
    let direct_exchange = sym("v0202").sub(&sym("v0220"));
    h.add_string(&nn(0, 2), direct_exchange.clone());
    h.add_string(&nn(1, 3), direct_exchange);
    h.add_string(&nn(0, 3), sym("v0202"));
    h.add_string(&nn(1, 2), sym("v0202"));
    let v = sym("v0123");
    h.add_string(&exc(2, 3, 1, 0), v.clone());
    h.add_string(&exc(0, 3, 2, 1), v.neg());
    h.add_string(&exc(1, 2, 3, 0), v.neg());
    h.add_string(&exc(0, 1, 3, 2), v);
    h
}

#[derive(Debug, Clone, Serialize)]
pub struct TermReport {
    pub op: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SectorReport {
    pub sector: String,
    pub terms: Vec<TermReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericReport {
    pub integrals: SymbolBindings,
    pub tapered_spectrum: Vec<f64>,
    pub block_spectrum: Vec<f64>,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct H2Report {
    pub fermionic_terms_before: usize,
    pub pauli_terms: Vec<TermReport>,
    pub symmetry_generators: Vec<String>,
    pub transformed_terms: Vec<TermReport>,
    pub fermionic_terms_after: usize,
    pub sector_hamiltonians: Vec<SectorReport>,
    pub rhf_sector: String,
    pub tapered_fermionic_terms: Vec<TermReport>,
    pub matrix_element_h00: String,
    pub matrix_element_h11: String,
    pub matrix_element_h10: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericReport>,
}

fn pauli_term_reports(sum: &PauliSum) -> Vec<TermReport> {
    sum.labeled_terms()
        .into_iter()
        .map(|(p, c)| TermReport {
            op: p.label(),
            coeff: c.to_string(),
        })
        .collect()
}

fn fermion_term_reports(sum: &FermionicSum) -> Vec<TermReport> {
    sum.terms()
        .map(|(s, c)| TermReport {
            op: s.to_string(),
            coeff: c.to_string(),
        })
        .collect()
}

/// All eight tapering sectors in the listing order of the Fock-space
/// decomposition table.
pub const H2_SECTORS: [[i8; 3]; 8] = [
    [1, 1, 1],
    [-1, 1, 1],
    [1, -1, 1],
    [1, 1, -1],
    [-1, -1, 1],
    [-1, 1, -1],
    [1, -1, -1],
    [-1, -1, -1],
];

/// End-to-end minimum-basis H2 walkthrough. Symbolic by default; with
/// integral bindings it also compares the tapered two-level spectrum against
/// the matching block of the 16x16 original.
pub fn h2_demo(bindings: Option<&SymbolBindings>) -> Result<H2Report> {
    let ferm = h2_hamiltonian();
    let pauli = jw_fermion_sum_to_pauli(&ferm, 4)?;

    let group = find_z2_symmetries(&pauli);
    let plan = build_tapering_plan(&group, Some(&[1, 2, 3]), &[1, -1, -1])?;
    let transformed = conjugate_hamiltonian(&pauli, &plan)?;
    let ferm_after = inverse_jw_sum(&transformed, 4)?.expand_holes();

    let mut sector_hamiltonians = Vec::new();
    for signs in H2_SECTORS {
        let tapered = taper_qubits(&transformed, &plan.with_sector(&signs)?)?;
        sector_hamiltonians.push(SectorReport {
            sector: sector_label(&signs),
            terms: pauli_term_reports(&tapered),
        });
    }

    let rhf_sector = sector_of_state(&[true, true, false, false], &plan)?;
    let tapered = taper_qubits(&transformed, &plan.with_sector(&rhf_sector)?)?;
    let tapered_fermionic = inverse_jw_sum(&tapered, 1)?;

    // matrix elements of the original Hamiltonian over the two retained
    // determinants
    let h00 = Coeff::from_symbol("h00")
        .scale(rat(2, 1))
        .add(&Coeff::from_symbol("v0101"));
    let h11 = Coeff::from_symbol("h22")
        .scale(rat(2, 1))
        .add(&Coeff::from_symbol("v2323"));
    let h10 = Coeff::from_symbol("v0123");
    let half = rat(1, 2);
    let expect_const = h00.add(&h11).scale(half);
    let expect_z = h11.sub(&h00).scale(half);
    let id1 = PauliString::identity(1)?;
    let z0 = PauliString::single(1, 0, Axis::Z)?;
    let x0 = PauliString::single(1, 0, Axis::X)?;
    let got_const = tapered.coeff_of(&id1).unwrap_or(Coeff::zero());
    let got_z = tapered.coeff_of(&z0).unwrap_or(Coeff::zero());
    let got_x = tapered.coeff_of(&x0).unwrap_or(Coeff::zero());
    if got_const != expect_const || got_z != expect_z || got_x != h10 {
        return Err(Error::Tapering(
            "tapered Hamiltonian does not reproduce the two-determinant matrix elements".into(),
        ));
    }

    let numeric = match bindings {
        None => None,
        Some(bind) => {
            let (tapered_spectrum, block_spectrum) = h2_spectra(&tapered, &ferm, bind)?;
            let max_deviation = tapered_spectrum
                .iter()
                .zip(&block_spectrum)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            Some(NumericReport {
                integrals: bind.clone(),
                tapered_spectrum,
                block_spectrum,
                max_deviation,
            })
        }
    };

    Ok(H2Report {
        fermionic_terms_before: ferm.len(),
        pauli_terms: pauli_term_reports(&pauli),
        symmetry_generators: group.generators.iter().map(|g| g.label()).collect(),
        transformed_terms: pauli_term_reports(&transformed),
        fermionic_terms_after: ferm_after.len(),
        sector_hamiltonians,
        rhf_sector: sector_label(&rhf_sector),
        tapered_fermionic_terms: fermion_term_reports(&tapered_fermionic),
        matrix_element_h00: h00.to_string(),
        matrix_element_h11: h11.to_string(),
        matrix_element_h10: h10.to_string(),
        numeric,
    })
}

/// Spectrum of the tapered one-qubit Hamiltonian next to the spectrum of the
/// {|1100>, |0011>} block of the full 16x16 matrix.
pub fn h2_spectra(
    tapered: &PauliSum,
    ferm: &FermionicSum,
    bindings: &SymbolBindings,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let small = oracle::pauli_sum_matrix(tapered, bindings)?;
    let tapered_spectrum = hermitian_eigs(&small);

    let full = oracle::fermionic_sum_matrix(ferm, bindings)?;
    let i1100 = oracle::basis_index(&[true, true, false, false]);
    let i0011 = oracle::basis_index(&[false, false, true, true]);
    let mut block = oracle::CMat::zeros(2, 2);
    for (r, &ir) in [i1100, i0011].iter().enumerate() {
        for (c, &ic) in [i1100, i0011].iter().enumerate() {
            block[(r, c)] = full[(ir, ic)];
        }
    }
    let block_spectrum = hermitian_eigs(&block);
    Ok((tapered_spectrum, block_spectrum))
}

fn hermitian_eigs(m: &oracle::CMat) -> Vec<f64> {
    let mut eigs: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}
