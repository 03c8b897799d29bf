//! Fundamental quandle presentations: one generator per arc, one relation per
//! crossing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{ArcId, Crossing, LinkDiagram, Sign};
use crate::unionfind::UnionFind;

/// `out = input ▷ over` when `positive`, `out = input ▷⁻¹ over` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingRelation {
    pub out: ArcId,
    pub input: ArcId,
    pub over: ArcId,
    pub positive: bool,
}

impl fmt::Display for CrossingRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.positive { '*' } else { '/' };
        write!(f, "{} = {} {} {}", self.out, self.input, op, self.over)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandlePresentation {
    arc_count: usize,
    relations: Vec<CrossingRelation>,
}

impl QuandlePresentation {
    /// Relations in crossing order.
    pub fn extract(d: &LinkDiagram) -> Self {
        let relations = d
            .crossings()
            .iter()
            .map(|c| CrossingRelation {
                out: c.under_out,
                input: c.under_in,
                over: c.over,
                positive: c.sign == Sign::Positive,
            })
            .collect();
        QuandlePresentation {
            arc_count: d.arc_count(),
            relations,
        }
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn relations(&self) -> &[CrossingRelation] {
        &self.relations
    }

    /// Arc classes forced equal by every relation when `▷` is trivial
    /// (`x ▷ y = x`): each relation ties its `input` to its `out`.
    pub fn trivial_t_classes(&self) -> Vec<Vec<ArcId>> {
        let mut uf = UnionFind::new(self.arc_count);
        for r in &self.relations {
            uf.union(r.input.index(), r.out.index());
        }
        uf.classes()
            .into_iter()
            .map(|class| class.into_iter().map(ArcId::from_index).collect())
            .collect()
    }

    /// Renders in the relations-file grammar. Trailing arcs that no relation
    /// mentions are declared as free circles.
    pub fn to_relations_text(&self) -> String {
        let referenced = self
            .relations
            .iter()
            .flat_map(|r| [r.out, r.input, r.over])
            .map(|a| a.label())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        if self.arc_count > referenced {
            out.push_str(&format!("circles: {}\n", self.arc_count - referenced));
        }
        for r in &self.relations {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// The crossings this presentation was read from.
    pub fn crossings(&self) -> Vec<Crossing> {
        self.relations
            .iter()
            .map(|r| {
                let sign = if r.positive {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                Crossing::new(sign, r.input, r.out, r.over)
            })
            .collect()
    }
}
