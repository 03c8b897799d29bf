//! Coloring counts and enumeration.
//!
//! Colorings by an Alexander quandle over ℤₙ are the solutions of a
//! homogeneous linear system `A·x ≡ 0 (mod n)`. With the Smith decomposition
//! `U·A·V = D` the substitution `x = V·y` splits the system into independent
//! congruences `dᵢ·yᵢ ≡ 0`, which have `gcd(dᵢ, n)` solutions each, while
//! the remaining coordinates are free. This stays exact when `n` is composite
//! and `1 − t` is a zero divisor.
//!
//! [`brute_force_colorings`] works for any finite quandle and serves as the
//! independent check on the linear route.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::presentation::QuandlePresentation;
use crate::quandle::{AlexanderParams, FiniteQuandle};
use crate::smith::smith_normal_form;
use crate::{BigSmithForm, IntMatrix};

/// Enumeration limit used when none is given.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// One coloring: `assignment[i]` is the color of arc `x{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub image_size: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let image_size = assignment.iter().collect::<BTreeSet<_>>().len();
        Coloring {
            assignment,
            image_size,
        }
    }

    /// Whether every relation holds under `q`.
    pub fn satisfies(&self, p: &QuandlePresentation, q: &FiniteQuandle) -> bool {
        p.relations().iter().all(|r| {
            let (a, b) = (
                self.assignment[r.input.index()],
                self.assignment[r.over.index()],
            );
            let value = if r.positive { q.op(a, b) } else { q.dual(a, b) };
            value == self.assignment[r.out.index()]
        })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assignment.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Integer coefficients of the coloring equations, one row per relation and
/// one column per arc. A positive relation `out = in ▷ over` contributes
/// `t` at `in`, `1 − t` at `over` and `−1` at `out`; negative relations use
/// `t⁻¹` instead of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSystem {
    matrix: IntMatrix,
    params: AlexanderParams,
}

impl ColoringSystem {
    pub fn new(matrix: IntMatrix, params: AlexanderParams) -> Self {
        ColoringSystem { matrix, params }
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn params(&self) -> AlexanderParams {
        self.params
    }

    pub fn smith(&self) -> BigSmithForm {
        smith_normal_form(&self.matrix)
    }

    /// The audit dump: the coefficient matrix, a blank line, then its Smith
    /// form. Each block starts with `rows cols n t`.
    pub fn dump(&self) -> String {
        let header = format!(
            "{} {} {} {}\n",
            self.rows(),
            self.cols(),
            self.params.n(),
            self.params.t()
        );
        format!(
            "{header}{}\n{header}{}",
            self.matrix,
            self.smith().reduced()
        )
    }
}

pub fn build_system(p: &QuandlePresentation, params: AlexanderParams) -> ColoringSystem {
    let t_pos = BigInt::from(params.t());
    let t_neg = BigInt::from(params.t_inverse());
    let mut matrix = IntMatrix::zeros(p.relations().len(), p.arc_count());
    for (row, r) in p.relations().iter().enumerate() {
        let t = if r.positive { &t_pos } else { &t_neg };
        matrix[(row, r.input.index())] += t;
        matrix[(row, r.over.index())] += BigInt::one() - t;
        matrix[(row, r.out.index())] -= 1;
    }
    ColoringSystem { matrix, params }
}

/// Number of solutions of `A·x ≡ 0 (mod n)`.
pub fn count_solutions(sys: &ColoringSystem, n: u64) -> BigUint {
    count_from_smith(&sys.smith(), sys.cols(), n)
}

fn count_from_smith(snf: &BigSmithForm, cols: usize, n: u64) -> BigUint {
    let modulus = BigInt::from(n);
    let free = (cols - snf.rank()) as u32;
    snf.invariant_factors()
        .iter()
        .map(|d| d.gcd(&modulus).to_biguint().expect("gcd is non-negative"))
        .fold(BigUint::from(n).pow(free), |acc, g| acc * g)
}

/// Every solution of `A·x ≡ 0 (mod n)`, sorted, as colorings of the arcs.
pub fn enumerate_solutions(
    sys: &ColoringSystem,
    n: u64,
    cap: u64,
) -> Result<Vec<Coloring>, SolverError> {
    let snf = sys.smith();
    let count = count_from_smith(&snf, sys.cols(), n);
    if count > BigUint::from(cap) {
        return Err(SolverError::CapExceeded { count, cap });
    }

    // y ranges over a box: torsion coordinates over multiples of n / gcd(dᵢ, n),
    // free coordinates over all of ℤₙ. Then x = V·y.
    let cols = sys.cols();
    let modulus = BigInt::from(n);
    let mut steps = Vec::with_capacity(cols);
    for d in snf.invariant_factors() {
        let g = d.gcd(&modulus).to_u64().expect("gcd divides n");
        steps.push((n / g, g));
    }
    for _ in snf.rank()..cols {
        steps.push((1, n));
    }
    let v = snf.right().reduced_mod(&modulus);
    let v: Vec<Vec<u128>> = (0..cols)
        .map(|i| {
            v.row(i)
                .iter()
                .map(|e| e.to_u128().expect("reduced entry"))
                .collect()
        })
        .collect();
    let n128 = u128::from(n);

    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut digits = vec![0u64; cols];
    loop {
        let y: Vec<u128> = digits
            .iter()
            .zip(&steps)
            .map(|(&k, &(step, _))| u128::from(k) * u128::from(step))
            .collect();
        let x: Vec<usize> = (0..cols)
            .map(|r| (v[r].iter().zip(&y).map(|(a, b)| a * b % n128).sum::<u128>() % n128) as usize)
            .collect();
        out.push(Coloring::new(x));

        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == cols {
                out.sort();
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < steps[i].1 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// All colorings of `p` by `q`, found by backtracking over the arcs in order.
/// The search is split across threads by the color of the first arc.
pub fn brute_force_colorings(
    p: &QuandlePresentation,
    q: &FiniteQuandle,
    cap: u64,
) -> Result<Vec<Coloring>, SolverError> {
    let stored = AtomicUsize::new(0);
    let cap_usize = usize::try_from(cap).unwrap_or(usize::MAX);
    let parts: Vec<(Vec<Coloring>, u64)> = (0..q.order())
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut total = 0u64;
            search(p, q, first, &mut |assignment| {
                total += 1;
                if stored.fetch_add(1, Ordering::Relaxed) < cap_usize {
                    found.push(Coloring::new(assignment.to_vec()));
                }
            });
            (found, total)
        })
        .collect();
    let total: u64 = parts.iter().map(|(_, t)| t).sum();
    if total > cap {
        return Err(SolverError::CapExceeded {
            count: BigUint::from(total),
            cap,
        });
    }
    let mut out: Vec<Coloring> = parts.into_iter().flat_map(|(f, _)| f).collect();
    out.sort();
    Ok(out)
}

/// Number of colorings of `p` by `q`, by the same search without storing them.
pub fn brute_force_count(p: &QuandlePresentation, q: &FiniteQuandle) -> BigUint {
    let total: u64 = (0..q.order())
        .into_par_iter()
        .map(|first| {
            let mut total = 0u64;
            search(p, q, first, &mut |_| total += 1);
            total
        })
        .sum();
    BigUint::from(total)
}

/// Depth-first search with arc 0 fixed to `first`. Each relation is checked
/// as soon as its last arc (in arc order) has a color.
fn search(
    p: &QuandlePresentation,
    q: &FiniteQuandle,
    first: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    let arcs = p.arc_count();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); arcs];
    for (i, r) in p.relations().iter().enumerate() {
        let last = r.out.index().max(r.input.index()).max(r.over.index());
        due[last].push(i);
    }
    let holds = |colors: &[usize], depth: usize| {
        due[depth].iter().all(|&i| {
            let r = &p.relations()[i];
            let (a, b) = (colors[r.input.index()], colors[r.over.index()]);
            let value = if r.positive { q.op(a, b) } else { q.dual(a, b) };
            value == colors[r.out.index()]
        })
    };

    let m = q.order();
    let mut colors = vec![0usize; arcs];
    colors[0] = first;
    if !holds(&colors, 0) {
        return;
    }
    if arcs == 1 {
        visit(&colors);
        return;
    }
    // colors[depth] is the next candidate at each open depth
    let mut depth = 1;
    colors[1] = 0;
    loop {
        if colors[depth] == m {
            depth -= 1;
            if depth == 0 {
                return;
            }
            colors[depth] += 1;
            continue;
        }
        if holds(&colors, depth) {
            if depth + 1 == arcs {
                visit(&colors);
            } else {
                depth += 1;
                colors[depth] = 0;
                continue;
            }
        }
        colors[depth] += 1;
    }
}
