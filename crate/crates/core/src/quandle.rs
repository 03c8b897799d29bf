//! Finite quandles given by their operation tables.
//!
//! Elements are `0..order`; `op(x, y)` is `x ▷ y` and `dual(x, y)` is
//! `x ▷⁻¹ y`. Alexander quandles remember their parameters so that coloring
//! counts can take the linear-algebra route.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::QuandleError;

/// Modulus `n ≥ 2` and unit `t` of ℤₙ for the Alexander quandle
/// `x ▷ y = t·x + (1 − t)·y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlexanderParams {
    n: u64,
    t: u64,
}

impl AlexanderParams {
    /// `t` is reduced into `0..n`; it must be coprime to `n`.
    pub fn new(n: u64, t: i64) -> Result<Self, QuandleError> {
        if n < 2 {
            return Err(QuandleError::InvalidModulus(n));
        }
        let reduced = i128::from(t).rem_euclid(i128::from(n)) as u64;
        if reduced.gcd(&n) != 1 {
            return Err(QuandleError::NotAUnit { t: reduced, n });
        }
        Ok(AlexanderParams { n, t: reduced })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `1 − t` reduced mod n.
    pub fn s(&self) -> u64 {
        (1 + self.n - self.t) % self.n
    }

    pub fn t_inverse(&self) -> u64 {
        let ext = i128::from(self.t).extended_gcd(&i128::from(self.n));
        ext.x.rem_euclid(i128::from(self.n)) as u64
    }

    /// Parameters of the dual operation `▷⁻¹`, which is again Alexander with
    /// `t⁻¹` in place of `t`.
    pub fn inverse(&self) -> AlexanderParams {
        AlexanderParams {
            n: self.n,
            t: self.t_inverse(),
        }
    }

    pub fn apply(&self, x: u64, y: u64) -> u64 {
        let n = u128::from(self.n);
        ((u128::from(self.t) * u128::from(x) + u128::from(self.s()) * u128::from(y)) % n) as u64
    }

    /// Whether `t² ≡ 1 (mod n)`.
    pub fn is_involutory(&self) -> bool {
        (u128::from(self.t) * u128::from(self.t)) % u128::from(self.n) == 1 % u128::from(self.n)
    }

    /// All units of ℤₙ in increasing order.
    pub fn units(n: u64) -> Vec<u64> {
        (1..n.max(1)).filter(|t| t.gcd(&n) == 1).collect()
    }

    /// Units with `t² ≡ 1 (mod n)`.
    pub fn involutory_units(n: u64) -> Vec<u64> {
        Self::units(n)
            .into_iter()
            .filter(|&t| u128::from(t) * u128::from(t) % u128::from(n) == 1)
            .collect()
    }
}

impl fmt::Display for AlexanderParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, t={})", self.n, self.t)
    }
}

#[derive(Clone, Debug)]
pub struct FiniteQuandle {
    order: usize,
    op: Vec<usize>,
    dual: Vec<usize>,
    alexander: Option<AlexanderParams>,
}

impl PartialEq for FiniteQuandle {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.op == other.op
    }
}

impl Eq for FiniteQuandle {}

impl FiniteQuandle {
    /// Checks the three quandle axioms on a square table, `rows[x][y] = x ▷ y`.
    pub fn validate(rows: &[Vec<u64>]) -> Result<Self, QuandleError> {
        let order = rows.len();
        if order == 0 {
            return Err(QuandleError::EmptyTable);
        }
        let mut op = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(QuandleError::NotSquare {
                    row: x,
                    expected: order,
                    got: row.len(),
                });
            }
            for (y, &value) in row.iter().enumerate() {
                if value >= order as u64 {
                    return Err(QuandleError::EntryOutOfRange {
                        row: x,
                        col: y,
                        value,
                        order,
                    });
                }
                op.push(value as usize);
            }
        }
        let dual = invert_columns(order, &op)?;
        let q = FiniteQuandle {
            order,
            op,
            dual,
            alexander: None,
        };
        if let Some(x) = (0..order).find(|&x| q.op(x, x) != x) {
            return Err(QuandleError::Axiom1Violation { x });
        }
        q.check_distributive()?;
        Ok(q)
    }

    fn check_distributive(&self) -> Result<(), QuandleError> {
        let m = self.order;
        for x in 0..m {
            for y in 0..m {
                let xy = self.op(x, y);
                for z in 0..m {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Err(QuandleError::Axiom3Violation { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Alexander quandle on ℤₙ: `x ▷ y = t·x + (1 − t)·y mod n`.
    pub fn alexander(n: u64, t: i64) -> Result<Self, QuandleError> {
        let params = AlexanderParams::new(n, t)?;
        let order = usize::try_from(n).expect("modulus fits in memory");
        let table = |p: AlexanderParams| {
            (0..order)
                .flat_map(|x| (0..order).map(move |y| p.apply(x as u64, y as u64) as usize))
                .collect::<Vec<_>>()
        };
        Ok(FiniteQuandle {
            order,
            op: table(params),
            dual: table(params.inverse()),
            alexander: Some(params),
        })
    }

    /// Takasaki quandle on ℤₙ: `x ▷ y = 2y − x mod n`, the Alexander quandle
    /// at `t = −1`.
    pub fn takasaki(n: u64) -> Result<Self, QuandleError> {
        Self::alexander(n, -1)
    }

    /// `x ▷ y = x` on `order` elements.
    pub fn trivial(order: usize) -> Self {
        assert!(order > 0, "a quandle needs at least one element");
        let op: Vec<usize> = (0..order)
            .flat_map(|x| std::iter::repeat_n(x, order))
            .collect();
        FiniteQuandle {
            order,
            dual: op.clone(),
            op,
            alexander: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    #[inline]
    pub fn dual(&self, x: usize, y: usize) -> usize {
        self.dual[x * self.order + y]
    }

    pub fn alexander_params(&self) -> Option<AlexanderParams> {
        self.alexander
    }

    /// Whether `(x ▷ y) ▷ y = x` for all `x, y`, read off the table.
    pub fn is_involutory(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.op(self.op(x, y), y) == x))
    }

    /// First `(x, y)` with `(x ▷ y) ▷ y ≠ x`.
    pub fn involution_witness(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|x| (0..self.order).map(move |y| (x, y)))
            .find(|&(x, y)| self.op(self.op(x, y), y) != x)
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.op
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as u64).collect())
            .collect()
    }

    /// Parses `order: m` followed by `m` rows of `m` integers.
    pub fn parse_table_file(text: &str) -> Result<Self, QuandleError> {
        let mut order: Option<usize> = None;
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| QuandleError::Syntax {
                line: i + 1,
                message,
            };
            match order {
                None => {
                    let value = line
                        .strip_prefix("order")
                        .and_then(|r| r.trim_start().strip_prefix(':'))
                        .ok_or_else(|| syntax("expected `order: <m>`".into()))?;
                    order = Some(
                        value
                            .trim()
                            .parse()
                            .map_err(|_| syntax("order is not an integer".into()))?,
                    );
                }
                Some(_) => {
                    let row = line
                        .split_whitespace()
                        .map(|w| {
                            w.parse()
                                .map_err(|_| syntax(format!("`{w}` is not an integer")))
                        })
                        .collect::<Result<Vec<u64>, _>>()?;
                    rows.push(row);
                }
            }
        }
        let order = order.ok_or(QuandleError::Syntax {
            line: 1,
            message: "missing `order:` header".into(),
        })?;
        if rows.len() != order {
            return Err(QuandleError::Syntax {
                line: text.lines().count(),
                message: format!("expected {order} rows, found {}", rows.len()),
            });
        }
        Self::validate(&rows)
    }

    pub fn to_table_text(&self) -> String {
        let mut out = format!("order: {}\n", self.order);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Inverts each column map `x ↦ x ▷ y`; fails on the first column that is not
/// a bijection.
fn invert_columns(order: usize, op: &[usize]) -> Result<Vec<usize>, QuandleError> {
    let mut dual = vec![usize::MAX; order * order];
    for y in 0..order {
        for x in 0..order {
            let v = op[x * order + y];
            if dual[v * order + y] != usize::MAX {
                return Err(QuandleError::Axiom2Violation { y });
            }
            dual[v * order + y] = x;
        }
    }
    Ok(dual)
}
