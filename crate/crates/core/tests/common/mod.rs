#![allow(dead_code)]

pub mod strategies;

use std::path::PathBuf;
use std::process::Command;

use quasiherm::linalg::singular_values;
use quasiherm::{Complex64, ComplexMatrix, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

pub fn random_complex(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let entries = (0..n * n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::from_row_major(n, n, entries).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    random_complex(rng, n).hermitian_part()
}

fn condition(m: &ComplexMatrix) -> f64 {
    let s = singular_values(m);
    let max = s.iter().cloned().fold(0.0, f64::max);
    let min = s.iter().cloned().fold(f64::INFINITY, f64::min);
    max / min
}

/// A diagonalizable matrix with a real, well separated spectrum.
pub struct Sample {
    pub h: ComplexMatrix,
    pub eigenvalues: Vec<f64>,
}

/// `V·diag(λ)·V⁻¹` with distinct real `λ` (gaps ≥ 0.1) and `cond(V) < 1e3`.
pub fn real_spectrum_sample(rng: &mut impl Rng, n: usize) -> Sample {
    let v = loop {
        let v = random_complex(rng, n);
        if condition(&v) < 1e3 {
            break v;
        }
    };
    let eigenvalues = loop {
        let mut e: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
        e.sort_by(f64::total_cmp);
        if e.windows(2).all(|w| w[1] - w[0] >= 0.1) {
            break e;
        }
    };
    let vinv = v.inverse(&Tolerance::default()).unwrap();
    let h = &(&v * &ComplexMatrix::from_real_diagonal(&eigenvalues)) * &vinv;
    Sample { h, eigenvalues }
}

/// The fixed ensemble: 50 samples, N cycling through 2..=8.
pub fn ensemble(seed: u64) -> Vec<Sample> {
    let mut r = rng(seed);
    (0..50)
        .map(|k| real_spectrum_sample(&mut r, 2 + k % 7))
        .collect()
}

/// Dimension of `{Θ : ΘH = H†Θ}` over ℂ, by Gaussian elimination with full
/// pivoting on `Hᵀ ⊗ I − I ⊗ H†` acting on column-stacked `Θ`.
///
/// The solution set is closed under `Θ ↦ Θ†`, so this equals the real
/// dimension of its Hermitian part.
pub fn kronecker_nullity(h: &ComplexMatrix) -> usize {
    let n = h.nrows();
    let hd = h.adjoint();
    let size = n * n;
    let mut a = vec![vec![Complex64::new(0.0, 0.0); size]; size];
    // vec(ΘH)[i + n j] = Σ_k Θ[i,k] H[k,j];  vec(H†Θ)[i + n j] = Σ_k H†[i,k] Θ[k,j].
    for i in 0..n {
        for j in 0..n {
            let row = i + n * j;
            for k in 0..n {
                a[row][i + n * k] += h.get(k, j);
                a[row][k + n * j] -= hd.get(i, k);
            }
        }
    }
    size - gaussian_rank(a, 1e-9)
}

fn gaussian_rank(mut a: Vec<Vec<Complex64>>, rtol: f64) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let scale = a
        .iter()
        .flat_map(|r| r.iter().map(|z| z.norm()))
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let mut colperm: Vec<usize> = (0..cols).collect();
    let mut rank = 0;
    while rank < rows.min(cols) {
        let (mut pr, mut pc, mut best) = (rank, rank, 0.0);
        for (r, row) in a.iter().enumerate().skip(rank) {
            for c in rank..cols {
                let v = row[colperm[c]].norm();
                if v > best {
                    (pr, pc, best) = (r, c, v);
                }
            }
        }
        if best <= rtol * scale {
            break;
        }
        a.swap(rank, pr);
        colperm.swap(rank, pc);
        let pivot = a[rank][colperm[rank]];
        for r in rank + 1..rows {
            let f = a[r][colperm[rank]] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            for c in rank..cols {
                let sub = f * a[rank][colperm[c]];
                a[r][colperm[c]] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub struct CliCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const PI_3: &str = "1.0471975511965976";
const PI_2: &str = "1.5707963267948966";

pub const CLI_CASES: &[CliCase] = &[
    CliCase {
        name: "spectrum_toy_pi3",
        args: &["spectrum", "h_toy_pi3.json"],
        exit: 0,
    },
    CliCase {
        name: "spectrum_diag12",
        args: &["spectrum", "h_diag12.json"],
        exit: 0,
    },
    CliCase {
        name: "spectrum_alpha0",
        args: &["spectrum", "h_toy_alpha0.json"],
        exit: 0,
    },
    CliCase {
        name: "metrics_toy_pi3",
        args: &["metrics", "h_toy_pi3.json"],
        exit: 0,
    },
    CliCase {
        name: "metrics_toy_pi3_weights",
        args: &["metrics", "h_toy_pi3.json", "--weights", "1,1"],
        exit: 0,
    },
    CliCase {
        name: "metrics_b15_weights",
        args: &["metrics", "h_b15.json", "--weights", "1,1"],
        exit: 3,
    },
    CliCase {
        name: "charge_xi03",
        args: &[
            "charge",
            "h_toy_pi3.json",
            "--metric",
            "theta_xi03.json",
            "--parity",
            "parity.json",
        ],
        exit: 0,
    },
    CliCase {
        name: "charge_identity",
        args: &[
            "charge",
            "h_toy_pi3.json",
            "--metric",
            "identity2.json",
            "--parity",
            "identity2.json",
        ],
        exit: 0,
    },
    CliCase {
        name: "charge_pi2",
        args: &[
            "charge",
            "h_toy_pi2.json",
            "--metric",
            "identity2.json",
            "--parity",
            "parity.json",
        ],
        exit: 0,
    },
    CliCase {
        name: "fix_a1",
        args: &["fix", "h_toy_pi3.json", "--observables", "obs_a1.json"],
        exit: 0,
    },
    CliCase {
        name: "fix_empty",
        args: &["fix", "h_toy_pi3.json", "--observables", "obs_empty.json"],
        exit: 0,
    },
    CliCase {
        name: "fix_identity",
        args: &[
            "fix",
            "h_toy_pi3.json",
            "--observables",
            "obs_identity.json",
        ],
        exit: 0,
    },
    CliCase {
        name: "model_energies_pi3",
        args: &["model2x2", "energies", "--alpha", PI_3],
        exit: 0,
    },
    CliCase {
        name: "model_metric_pi2",
        args: &["model2x2", "metric", "--alpha", PI_2, "--xi", "0"],
        exit: 0,
    },
    CliCase {
        name: "model_charge_scan_pi3",
        args: &["model2x2", "charge-scan", "--alpha", PI_3],
        exit: 0,
    },
];

pub struct CliRun {
    pub stdout: String,
    pub exit: i32,
}

pub fn run_cli(args: &[&str]) -> CliRun {
    let out = Command::new(env!("CARGO_BIN_EXE_quasiherm"))
        .args(args)
        .current_dir(fixtures_dir())
        .output()
        .expect("binary runs");
    CliRun {
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        exit: out.status.code().unwrap_or(-1),
    }
}

pub fn expected_output(name: &str) -> String {
    let path = fixtures_dir().join("expected").join(format!("{name}.json"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
