//! Pseudo-metrics: parity for the two-level model and a twisted `η` whose
//! symmetry `S = (η⁻¹)†η` is non-trivial.

use quasiherm::spectral::{biorthogonal_system, spectral_map};
use quasiherm::symmetry::{check_eta_symmetry, check_pseudo_hermiticity};
use quasiherm::toy::{hamiltonian_at, parity_2x2, toy_metric, ToyParameters};
use quasiherm::{Complex64, Tolerance};

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    let alpha = 0.7;
    let h = hamiltonian_at(alpha, 1.0)?;
    let check = check_pseudo_hermiticity(&h, &parity_2x2(), &tol)?;
    println!(
        "parity: holds {} (residual {:.1e}, hermitian {})",
        check.holds, check.residual, check.eta_hermitian
    );

    let theta = toy_metric(&ToyParameters::with_xi(alpha, 0.2)?);
    let sys = biorthogonal_system(&h, &tol)?;
    let eta = &theta * &spectral_map(&sys, |e| (Complex64::i() * e * 0.5).exp());
    let sym = check_eta_symmetry(&h, &eta, &tol)?;
    println!(
        "twisted eta: commutes {}, nontrivial {}",
        sym.commutes, sym.nontrivial
    );
    println!("S =\n{:?}", sym.s_matrix);
    Ok(())
}
