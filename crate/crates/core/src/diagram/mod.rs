//! Oriented link diagrams.
//!
//! A diagram is a list of signed crossings over numbered arcs. Arcs are held
//! 0-based in [`ArcId`] and always printed with their 1-based label (`x1`,
//! `x2`, ...). Arcs that no crossing references are free circles; they are
//! kept at the end of the numbering so that every diagram can be written back
//! out as a relations file.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DiagramError;
use crate::unionfind::UnionFind;

mod catalog;
mod moves;
mod pd;
mod relations;

pub use catalog::{catalog, CatalogEntry, CATALOG_NAMES};
pub use moves::{
    connected_sum, reidemeister_r1, reidemeister_r1_inverse, reidemeister_r2,
    reidemeister_r2_inverse,
};
pub use pd::parse_pd_code;
pub use relations::{parse_relations_file, parse_relations_file_with};

/// An arc of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "usize", try_from = "usize")]
pub struct ArcId(usize);

impl ArcId {
    pub fn from_index(index: usize) -> Self {
        ArcId(index)
    }

    /// `None` for label 0.
    pub fn from_label(label: usize) -> Option<Self> {
        label.checked_sub(1).map(ArcId)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn label(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.label())
    }
}

impl From<ArcId> for usize {
    fn from(arc: ArcId) -> usize {
        arc.label()
    }
}

impl TryFrom<usize> for ArcId {
    type Error = String;

    fn try_from(label: usize) -> Result<Self, Self::Error> {
        ArcId::from_label(label).ok_or_else(|| "arc labels start at 1".to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One crossing: the under-strand runs from `under_in` to `under_out` beneath
/// `over`. Positive crossings read `under_out = under_in ▷ over`, negative
/// ones use `▷⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub over: ArcId,
}

impl Crossing {
    pub fn new(sign: Sign, under_in: ArcId, under_out: ArcId, over: ArcId) -> Self {
        Crossing {
            sign,
            under_in,
            under_out,
            over,
        }
    }

    /// Positive crossing from 1-based labels, written in relation order
    /// `out = in ▷ over`.
    pub(crate) fn positive(out: usize, input: usize, over: usize) -> Self {
        Crossing {
            sign: Sign::Positive,
            under_in: ArcId(input - 1),
            under_out: ArcId(out - 1),
            over: ArcId(over - 1),
        }
    }

    fn arcs(&self) -> [ArcId; 3] {
        [self.under_in, self.under_out, self.over]
    }
}

/// How much structure a diagram has to carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Validation {
    /// Under-strands must close up: every arc touched by an under-crossing
    /// enters exactly one and leaves exactly one.
    #[default]
    Strict,
    /// Only index checks. Accepts crossing tables that are presentations
    /// rather than strand-consistent drawings.
    Lenient,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    arc_count: usize,
    crossings: Vec<Crossing>,
    free_circles: usize,
}

impl LinkDiagram {
    /// Builds a diagram over `referenced + free_circles` arcs, where the
    /// crossings must reference exactly the arcs `0..referenced`.
    pub fn new(
        crossings: Vec<Crossing>,
        free_circles: usize,
        validation: Validation,
    ) -> Result<Self, DiagramError> {
        let referenced = crossings
            .iter()
            .flat_map(|c| c.arcs())
            .map(|a| a.index() + 1)
            .max()
            .unwrap_or(0);
        let arc_count = referenced + free_circles;
        if arc_count == 0 {
            return Err(DiagramError::Empty);
        }
        let mut seen = vec![false; referenced];
        for c in &crossings {
            for a in c.arcs() {
                seen[a.index()] = true;
            }
        }
        if let Some(gap) = seen.iter().position(|s| !s) {
            return Err(DiagramError::ArcGap {
                arc: gap + 1,
                max: referenced,
            });
        }
        let diagram = LinkDiagram {
            arc_count,
            crossings,
            free_circles,
        };
        if validation == Validation::Strict {
            diagram.check_strands()?;
        }
        Ok(diagram)
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `k ≥ 1` disjoint circles with no crossings.
    pub fn unlink(k: usize) -> Self {
        assert!(k > 0, "an unlink needs at least one circle");
        LinkDiagram {
            arc_count: k,
            crossings: Vec::new(),
            free_circles: k,
        }
    }

    fn check_strands(&self) -> Result<(), DiagramError> {
        let n = self.arc_count;
        let mut entered: Vec<Option<usize>> = vec![None; n];
        let mut left: Vec<Option<usize>> = vec![None; n];
        for (i, c) in self.crossings.iter().enumerate() {
            if let Some(first) = left[c.under_out.index()] {
                return Err(DiagramError::DuplicateUnderOut {
                    arc: c.under_out.label(),
                    first: first + 1,
                    second: i + 1,
                });
            }
            left[c.under_out.index()] = Some(i);
            if let Some(first) = entered[c.under_in.index()] {
                return Err(DiagramError::DuplicateUnderIn {
                    arc: c.under_in.label(),
                    first: first + 1,
                    second: i + 1,
                });
            }
            entered[c.under_in.index()] = Some(i);
        }
        for a in 0..n {
            if left[a].is_some() != entered[a].is_some() {
                return Err(DiagramError::OpenStrand { arc: a + 1 });
            }
        }
        Ok(())
    }

    /// Whether the diagram passes [`Validation::Strict`].
    pub fn is_strand_consistent(&self) -> bool {
        self.check_strands().is_ok()
    }

    pub fn validation(&self) -> Validation {
        if self.is_strand_consistent() {
            Validation::Strict
        } else {
            Validation::Lenient
        }
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    pub fn arcs(&self) -> impl Iterator<Item = ArcId> {
        (0..self.arc_count).map(ArcId)
    }

    pub fn contains(&self, arc: ArcId) -> bool {
        arc.index() < self.arc_count
    }

    pub(crate) fn check_arc(&self, arc: ArcId) -> Result<(), DiagramError> {
        if self.contains(arc) {
            Ok(())
        } else {
            Err(DiagramError::ArcOutOfRange {
                arc: arc.label(),
                arc_count: self.arc_count,
            })
        }
    }

    /// Arcs grouped into link components, each class sorted, classes ordered
    /// by their smallest arc.
    ///
    /// Arcs joined by an under-crossing (entering and leaving it) belong to the
    /// same component. On strand-consistent diagrams the classes are exactly
    /// the under-strand cycles, plus one class per arc that never passes under
    /// anything (free circles and over-only loops).
    pub fn components(&self) -> Vec<Vec<ArcId>> {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c.under_in.index(), c.under_out.index());
        }
        uf.classes()
            .into_iter()
            .map(|class| class.into_iter().map(ArcId).collect())
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Relations-file rendering; parsing it back gives an equal diagram.
    pub fn to_relations_text(&self) -> String {
        let mut out = String::new();
        if self.free_circles > 0 {
            out.push_str(&format!("circles: {}\n", self.free_circles));
        }
        for c in &self.crossings {
            let op = match c.sign {
                Sign::Positive => '*',
                Sign::Negative => '/',
            };
            out.push_str(&format!(
                "{} = {} {} {}\n",
                c.under_out, c.under_in, op, c.over
            ));
        }
        out
    }

    /// Rebuilds a diagram after a local rewrite: arcs referenced by some
    /// crossing are renumbered first (keeping their relative order), the rest
    /// become trailing free circles.
    pub(crate) fn renumbered(arc_count: usize, mut crossings: Vec<Crossing>) -> Self {
        let used: BTreeSet<usize> = crossings
            .iter()
            .flat_map(|c| c.arcs())
            .map(|a| a.index())
            .collect();
        let mut relabel = vec![usize::MAX; arc_count];
        for (new, &old) in used.iter().enumerate() {
            relabel[old] = new;
        }
        for c in &mut crossings {
            c.under_in = ArcId(relabel[c.under_in.index()]);
            c.under_out = ArcId(relabel[c.under_out.index()]);
            c.over = ArcId(relabel[c.over.index()]);
        }
        LinkDiagram {
            arc_count,
            crossings,
            free_circles: arc_count - used.len(),
        }
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_relations_text())
    }
}
