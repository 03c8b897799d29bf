//! Built-in diagrams.

use super::{Crossing, LinkDiagram, Validation};
use crate::error::DiagramError;

pub const CATALOG_NAMES: [&str; 6] = [
    "unknot",
    "unlink2",
    "hopf",
    "trefoil",
    "hopf_sum",
    "allen_swenberg",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub diagram: LinkDiagram,
    pub expected_components: usize,
}

impl CatalogEntry {
    pub fn all() -> Vec<CatalogEntry> {
        CATALOG_NAMES
            .iter()
            .map(|name| Self::get(name).expect("catalog name"))
            .collect()
    }

    pub fn get(name: &str) -> Result<CatalogEntry, DiagramError> {
        let (name, diagram, expected_components) = match name {
            "unknot" => ("unknot", LinkDiagram::unknot(), 1),
            "unlink2" => ("unlink2", LinkDiagram::unlink(2), 2),
            "hopf" => ("hopf", strict(HOPF), 2),
            "trefoil" => ("trefoil", strict(TREFOIL), 1),
            "hopf_sum" => ("hopf_sum", strict(HOPF_SUM), 3),
            "allen_swenberg" => ("allen_swenberg", lenient(ALLEN_SWENBERG), 3),
            other => return Err(DiagramError::UnknownLink(other.to_string())),
        };
        Ok(CatalogEntry {
            name,
            diagram,
            expected_components,
        })
    }
}

pub fn catalog(name: &str) -> Result<LinkDiagram, DiagramError> {
    CatalogEntry::get(name).map(|e| e.diagram)
}

/// Rows are `(out, in, over)`: `x_out = x_in ▷ x_over`.
type Table = [(usize, usize, usize)];

fn crossings(table: &Table) -> Vec<Crossing> {
    table
        .iter()
        .map(|&(out, input, over)| Crossing::positive(out, input, over))
        .collect()
}

fn strict(table: &Table) -> LinkDiagram {
    LinkDiagram::new(crossings(table), 0, Validation::Strict).expect("catalog table is valid")
}

// The 45-row table reuses under-arcs (c4 and c9 both produce x3, for one), so
// it is a presentation rather than a strand-consistent drawing.
fn lenient(table: &Table) -> LinkDiagram {
    LinkDiagram::new(crossings(table), 0, Validation::Lenient).expect("catalog table is valid")
}

/// Two one-arc circles, each passing once under the other.
const HOPF: &Table = &[(1, 1, 2), (2, 2, 1)];

/// Right-handed trefoil.
const TREFOIL: &Table = &[(3, 1, 2), (2, 3, 1), (1, 2, 3)];

/// Connected sum of two Hopf links.
const HOPF_SUM: &Table = &[(2, 3, 1), (3, 2, 4), (1, 1, 3), (4, 4, 3)];

/// Allen-Swenberg link, crossings c1 through c45 in order.
const ALLEN_SWENBERG: &Table = &[
    (2, 1, 26),
    (26, 27, 1),
    (1, 2, 3),
    (3, 4, 1),
    (4, 5, 3),
    (5, 6, 7),
    (8, 7, 6),
    (29, 28, 6),
    (3, 6, 28),
    (9, 8, 7),
    (7, 10, 9),
    (11, 9, 10),
    (10, 12, 11),
    (13, 11, 12),
    (12, 14, 13),
    (19, 15, 14),
    (22, 15, 13),
    (20, 16, 14),
    (21, 16, 13),
    (14, 17, 21),
    (13, 18, 21),
    (20, 17, 22),
    (19, 18, 22),
    (21, 23, 20),
    (22, 24, 20),
    (26, 23, 19),
    (25, 24, 19),
    (30, 28, 29),
    (29, 31, 30),
    (32, 30, 31),
    (31, 33, 32),
    (34, 32, 33),
    (33, 35, 34),
    (40, 36, 35),
    (38, 36, 34),
    (41, 37, 35),
    (39, 37, 34),
    (35, 42, 39),
    (34, 43, 39),
    (41, 42, 38),
    (40, 43, 38),
    (25, 44, 40),
    (39, 44, 41),
    (27, 45, 40),
    (38, 45, 41),
];
