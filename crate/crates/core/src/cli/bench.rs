//! Subresultants through the structure recursion versus one determinant per
//! coefficient, with a plain pseudo-remainder sequence for coefficient size.

use std::time::Instant;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Domain, Rational, UniPoly};
use crate::subres::{subresultants_naive, subresultants_structured, SubresSeq};

/// Largest degree the harness accepts.
pub const MAX_BENCH_DEGREE: usize = 24;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub degree: usize,
    pub trials: usize,
    pub structured_ms: f64,
    pub naive_ms: f64,
    /// Both methods returned the same sequence on every trial.
    pub identical: bool,
    /// Largest numerator or denominator bit length in the subresultants.
    pub max_bits_subres: u64,
    /// Same for the unreduced pseudo-remainder sequence.
    pub max_bits_prem: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchTable {
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    /// The table without wall-clock columns, which is what a seed fixes.
    pub fn deterministic_part(&self) -> Vec<(usize, usize, bool, u64, u64)> {
        self.rows
            .iter()
            .map(|r| (r.degree, r.trials, r.identical, r.max_bits_subres, r.max_bits_prem))
            .collect()
    }
}

fn bits(x: &Rational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

fn poly_bits(p: &UniPoly) -> u64 {
    p.coeffs().iter().map(bits).max().unwrap_or(0)
}

fn seq_bits(s: &SubresSeq<Rational>) -> u64 {
    s.polys.iter().map(poly_bits).max().unwrap_or(0)
}

/// `lc(B)^{deg A − deg B + 1} · A` reduced modulo `B`, iterated without
/// content removal.
fn prem_sequence_bits(p: &UniPoly, q: &UniPoly) -> u64 {
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut best = poly_bits(&a).max(poly_bits(&b));
    while !b.is_zero() && !b.is_constant() {
        let delta = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
        let lc = b.leading().expect("nonzero").abs();
        let r = a.scale(&Domain::pow(&lc, delta as u32)).rem(&b).expect("b nonzero");
        best = best.max(poly_bits(&r));
        a = b;
        b = r;
    }
    best
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> UniPoly {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9)).collect();
    while c[degree] == 0 {
        c[degree] = rng.gen_range(-9..=9);
    }
    UniPoly::from_ints(&c)
}

/// For each degree `2..=max_deg`, times both subresultant methods on
/// `trials` random integer pairs of degrees `(d, d−1)` drawn from `seed`.
pub fn bench_chains(max_deg: usize, trials: usize, seed: u64) -> Result<BenchTable> {
    if !(2..=MAX_BENCH_DEGREE).contains(&max_deg) {
        return Err(Error::InvalidArgument(format!(
            "max degree must be in 2..={MAX_BENCH_DEGREE}, got {max_deg}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for degree in 2..=max_deg {
        let pairs: Vec<(UniPoly, UniPoly)> = (0..trials)
            .map(|_| (random_poly(&mut rng, degree), random_poly(&mut rng, degree - 1)))
            .collect();

        let start = Instant::now();
        let structured = pairs
            .iter()
            .map(|(p, q)| subresultants_structured(p, q))
            .collect::<Result<Vec<_>>>()?;
        let structured_ms = start.elapsed().as_secs_f64() * 1e3;

        let start = Instant::now();
        let naive = pairs
            .iter()
            .map(|(p, q)| subresultants_naive(p, q))
            .collect::<Result<Vec<_>>>()?;
        let naive_ms = start.elapsed().as_secs_f64() * 1e3;

        rows.push(BenchRow {
            degree,
            trials,
            structured_ms,
            naive_ms,
            identical: structured == naive,
            max_bits_subres: structured.iter().map(seq_bits).max().unwrap_or(0),
            max_bits_prem: pairs.iter().map(|(p, q)| prem_sequence_bits(p, q)).max().unwrap_or(0),
        });
    }
    Ok(BenchTable { seed, rows })
}
