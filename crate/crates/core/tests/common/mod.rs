//! Oracles that share no code with the solver: plain enumeration of every
//! assignment.

#![allow(dead_code)]

use std::collections::BTreeSet;

use quandle_core::diagram::{CatalogEntry, LinkDiagram};
use quandle_core::{FiniteQuandle, QuandlePresentation};

/// Solutions of `A·x ≡ 0 (mod n)` by trying all `n^cols` vectors.
pub fn exhaustive_count(rows: &[Vec<i64>], cols: usize, n: u64) -> u64 {
    let n_i = n as i64;
    let mut count = 0;
    let mut x = vec![0i64; cols];
    loop {
        if rows.iter().all(|r| {
            r.iter()
                .zip(&x)
                .map(|(a, b)| a * b)
                .sum::<i64>()
                .rem_euclid(n_i)
                == 0
        }) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == cols {
                return count;
            }
            x[i] += 1;
            if x[i] < n_i {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Every assignment of quandle elements to arcs that satisfies all relations.
pub fn exhaustive_colorings(p: &QuandlePresentation, q: &FiniteQuandle) -> BTreeSet<Vec<usize>> {
    let m = q.order();
    let arcs = p.arc_count();
    let mut out = BTreeSet::new();
    let mut x = vec![0usize; arcs];
    loop {
        let ok = p.relations().iter().all(|r| {
            let (a, b) = (x[r.input.index()], x[r.over.index()]);
            let v = if r.positive { q.op(a, b) } else { q.dual(a, b) };
            v == x[r.out.index()]
        });
        if ok {
            out.insert(x.clone());
        }
        let mut i = 0;
        loop {
            if i == arcs {
                return out;
            }
            x[i] += 1;
            if x[i] < m {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Catalog entries with at most six crossings.
pub fn small_catalog() -> Vec<(&'static str, LinkDiagram)> {
    CatalogEntry::all()
        .into_iter()
        .filter(|e| e.diagram.crossing_count() <= 6)
        .map(|e| (e.name, e.diagram))
        .collect()
}

pub fn units(n: u64) -> Vec<u64> {
    (1..n).filter(|&t| gcd(t, n) == 1).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
