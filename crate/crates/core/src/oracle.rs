//! Brute-force reference implementations used by the test suites.
//!
//! Everything here is deliberately independent of the main code paths:
//! products are explicit index loops, 2x2 eigenvalues come from the
//! closed-form characteristic polynomial, and 4x4 eigenvalues are bisection
//! roots of the characteristic polynomial assembled from power traces.
//! Only the [`ComplexMatrix`] container is shared.

use num_complex::Complex64 as C64;

use crate::linalg::ComplexMatrix;
use crate::state::Subsystem;

fn mul_loops(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = ComplexMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..a.cols() {
                acc += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    out
}

fn trace_re(m: &ComplexMatrix) -> f64 {
    (0..m.rows()).map(|i| m.get(i, i).re).sum()
}

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic
/// polynomial, descending.
pub fn eig2_hermitian(m: &ComplexMatrix) -> [f64; 2] {
    assert_eq!(m.rows(), 2);
    assert_eq!(m.cols(), 2);
    let a = m.get(0, 0).re;
    let d = m.get(1, 1).re;
    let b = m.get(0, 1);
    let disc = ((a - d) * (a - d) + 4.0 * b.norm_sqr()).max(0.0).sqrt();
    [(a + d + disc) / 2.0, (a + d - disc) / 2.0]
}

/// Elementary symmetric functions `[e1, e2, e3, e4]` of the spectrum, so
/// `p(λ) = λ⁴ - e1 λ³ + e2 λ² - e3 λ + e4`, via Newton's identities on the
/// power traces; valid for any 4x4 matrix with a real spectrum.
pub fn charpoly4(m: &ComplexMatrix) -> [f64; 4] {
    assert_eq!(m.rows(), 4);
    assert_eq!(m.cols(), 4);
    let m2 = mul_loops(m, m);
    let m3 = mul_loops(&m2, m);
    let m4 = mul_loops(&m3, m);
    let s1 = trace_re(m);
    let s2 = trace_re(&m2);
    let s3 = trace_re(&m3);
    let s4 = trace_re(&m4);
    let e1 = s1;
    let e2 = (e1 * s1 - s2) / 2.0;
    let e3 = (e2 * s1 - e1 * s2 + s3) / 3.0;
    let e4 = (e3 * s1 - e2 * s2 + e1 * s3 - s4) / 4.0;
    [e1, e2, e3, e4]
}

fn eval_quartic(coeffs: &[f64; 4], x: f64) -> f64 {
    let [e1, e2, e3, e4] = *coeffs;
    (((x - e1) * x + e2) * x - e3) * x + e4
}

/// The four real roots of the characteristic polynomial of a 4x4 matrix
/// with a real, simple spectrum, found by scan plus bisection. Descending.
///
/// Panics if four sign-change brackets cannot be isolated; callers feed it
/// random full-rank states whose spectra are simple.
pub fn eig4_bisect(m: &ComplexMatrix) -> [f64; 4] {
    let coeffs = charpoly4(m);
    // Row-sum bound on the spectral radius.
    let mut bound = 0.0f64;
    for i in 0..4 {
        let row: f64 = (0..4).map(|j| m.get(i, j).norm()).sum();
        bound = bound.max(row);
    }
    bound += 1.0;

    let mut steps = 40_000usize;
    for _ in 0..4 {
        let mut roots = Vec::with_capacity(4);
        let mut prev_x = -bound;
        let mut prev_v = eval_quartic(&coeffs, prev_x);
        for k in 1..=steps {
            let x = -bound + 2.0 * bound * (k as f64) / (steps as f64);
            let v = eval_quartic(&coeffs, x);
            if prev_v == 0.0 {
                roots.push(prev_x);
            } else if prev_v * v < 0.0 {
                let (mut lo, mut hi) = (prev_x, x);
                let mut vlo = prev_v;
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    let vm = eval_quartic(&coeffs, mid);
                    if vm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if vlo * vm < 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                        vlo = vm;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_v = v;
        }
        if roots.len() == 4 {
            roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
            return [roots[0], roots[1], roots[2], roots[3]];
        }
        steps *= 8;
    }
    panic!("could not isolate four characteristic roots; spectrum too degenerate for bisection");
}

/// Partial trace over the complement of `keep`, explicit index loops.
pub fn partial_trace_explicit(m: &ComplexMatrix, keep: Subsystem) -> ComplexMatrix {
    assert_eq!(m.rows(), 4);
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..2 {
                acc += match keep {
                    Subsystem::A => m.get(i * 2 + k, j * 2 + k),
                    Subsystem::B => m.get(k * 2 + i, k * 2 + j),
                };
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// Partial transpose over one subsystem index, explicit four-index loops.
pub fn partial_transpose_explicit(m: &ComplexMatrix, on: Subsystem) -> ComplexMatrix {
    assert_eq!(m.rows(), 4);
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    let v = match on {
                        Subsystem::A => m.get(j * 2 + k, i * 2 + l),
                        Subsystem::B => m.get(i * 2 + l, j * 2 + k),
                    };
                    out.set(i * 2 + k, j * 2 + l, v);
                }
            }
        }
    }
    out
}

/// Sum of off-diagonal moduli.
pub fn l1_coherence_explicit(m: &ComplexMatrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                sum += (m.get(i, j).re.powi(2) + m.get(i, j).im.powi(2)).sqrt();
            }
        }
    }
    sum
}

/// Shannon entropy in bits of a spectrum, zeroing numerical dust.
pub fn entropy_bits_explicit(eigenvalues: &[f64]) -> f64 {
    let mut s = 0.0;
    for &l in eigenvalues {
        if l > 1e-14 {
            s -= l * l.log2();
        }
    }
    s
}

/// Von Neumann entropy of a Hermitian state via bisection (4x4) or the
/// closed-form characteristic polynomial (2x2).
pub fn von_neumann_entropy_explicit(m: &ComplexMatrix) -> f64 {
    match m.rows() {
        2 => entropy_bits_explicit(&eig2_hermitian(m)),
        4 => entropy_bits_explicit(&eig4_bisect(m)),
        n => panic!("unsupported dimension {n}"),
    }
}

/// `S(diag ρ) - S(ρ)` with the dephased entropy taken directly from the
/// diagonal probabilities.
pub fn relative_entropy_coherence_explicit(m: &ComplexMatrix) -> f64 {
    let probs: Vec<f64> = (0..m.rows()).map(|i| m.get(i, i).re).collect();
    entropy_bits_explicit(&probs) - von_neumann_entropy_explicit(m)
}

/// Negativity from the explicit partial transpose and bisection eigenvalues.
pub fn negativity_explicit(m: &ComplexMatrix) -> f64 {
    let pt = partial_transpose_explicit(m, Subsystem::A);
    let eigs = eig4_bisect(&pt);
    eigs.iter().map(|l| l.abs()).sum::<f64>() - 1.0
}

/// Concurrence from bisection roots of the characteristic polynomial of
/// `ρ (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`; the product has a real non-negative
/// spectrum. Roots below 1e-12 are zeroed before the square root, matching
/// the documented clip rule.
pub fn concurrence_explicit(m: &ComplexMatrix) -> f64 {
    assert_eq!(m.rows(), 4);
    // σ_y ⊗ σ_y is the real antidiagonal (-1, 1, 1, -1).
    let mut yy = ComplexMatrix::zeros(4, 4);
    yy.set(0, 3, C64::new(-1.0, 0.0));
    yy.set(1, 2, C64::new(1.0, 0.0));
    yy.set(2, 1, C64::new(1.0, 0.0));
    yy.set(3, 0, C64::new(-1.0, 0.0));

    let mut conj = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            conj.set(i, j, m.get(i, j).conj());
        }
    }
    let tilde = mul_loops(&mul_loops(&yy, &conj), &yy);
    let product = mul_loops(m, &tilde);
    let mut lambdas: Vec<f64> = eig4_bisect(&product)
        .iter()
        .map(|&mu| if mu <= 1e-12 { 0.0 } else { mu.sqrt() })
        .collect();
    lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0)
}

/// Entanglement entropy of a pure 4x4 state from the closed-form reduced
/// spectrum.
pub fn entanglement_entropy_pure_explicit(m: &ComplexMatrix) -> f64 {
    let reduced = partial_trace_explicit(m, Subsystem::A);
    entropy_bits_explicit(&eig2_hermitian(&reduced))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_recovers_a_known_diagonal_spectrum() {
        let m = ComplexMatrix::from_diagonal(&[
            C64::new(0.4, 0.0),
            C64::new(0.3, 0.0),
            C64::new(0.2, 0.0),
            C64::new(0.1, 0.0),
        ])
        .unwrap();
        let roots = eig4_bisect(&m);
        for (r, e) in roots.iter().zip([0.4, 0.3, 0.2, 0.1]) {
            assert!((r - e).abs() < 1e-10, "root {r} vs {e}");
        }
    }

    #[test]
    fn closed_form_2x2_matches_hand_computation() {
        let m = ComplexMatrix::from_vec(
            2,
            2,
            vec![
                C64::new(0.5, 0.0),
                C64::new(0.5, 0.0),
                C64::new(0.5, 0.0),
                C64::new(0.5, 0.0),
            ],
        )
        .unwrap();
        let [hi, lo] = eig2_hermitian(&m);
        assert!((hi - 1.0).abs() < 1e-15);
        assert!(lo.abs() < 1e-15);
    }
}
