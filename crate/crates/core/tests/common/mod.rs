//! Seeded generators shared by the integration suites.
#![allow(dead_code)]

use gravent_core::{ComplexMatrix, DensityMatrix, C64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Full-rank random density matrix `G G† / tr(G G†)` from a complex
/// Ginibre draw; its spectrum is simple with probability one.
pub fn random_mixed_density(rng: &mut ChaCha8Rng, n: usize) -> DensityMatrix {
    loop {
        let g = ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
        .unwrap();
        let gg = g.matmul(&g.dagger()).unwrap();
        let tr = gg.trace().re;
        if tr < 1e-6 {
            continue;
        }
        let rho = gg.scale(C64::new(1.0 / tr, 0.0));
        if let Ok(dm) = DensityMatrix::new(rho) {
            return dm;
        }
    }
}

/// Random normalized pure-state density matrix on `n` levels.
pub fn random_pure_density(rng: &mut ChaCha8Rng, n: usize) -> DensityMatrix {
    let mut amps: Vec<C64> = (0..n)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    let mat = ComplexMatrix::from_fn(n, n, |i, j| amps[i] * amps[j].conj()).unwrap();
    DensityMatrix::new(mat).unwrap()
}

/// Random Hermitian matrix with entries of order one.
pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
    .unwrap();
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = (g.get(i, j) + g.get(j, i).conj()) * C64::new(0.5, 0.0);
            h.set(i, j, v);
        }
    }
    h
}
