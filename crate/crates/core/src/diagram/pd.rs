//! Planar-diagram codes.
//!
//! Each term `X(a,b,c,d)` lists the four edges at a crossing counterclockwise,
//! starting from the incoming under-edge `a`; the under-strand leaves along
//! `c`. The crossing is positive when the over-strand runs from `d` to `b` and
//! negative when it runs from `b` to `d`. The over-strand direction is not
//! written down, so it is recovered by requiring every edge to leave one
//! crossing and enter another.

use std::collections::{BTreeMap, VecDeque};

use super::{ArcId, Crossing, LinkDiagram, Sign, Validation};
use crate::error::DiagramError;
use crate::unionfind::UnionFind;

pub fn parse_pd_code(text: &str) -> Result<LinkDiagram, DiagramError> {
    let quads = parse_terms(text)?;
    if quads.is_empty() {
        return Err(DiagramError::EmptyPd);
    }

    let mut occurrences: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, q) in quads.iter().enumerate() {
        for (pos, &edge) in q.iter().enumerate() {
            occurrences.entry(edge).or_default().push((i, pos));
        }
    }
    for (&edge, occ) in &occurrences {
        if occ.len() != 2 {
            return Err(DiagramError::EdgeMultiplicity {
                edge,
                count: occ.len(),
            });
        }
    }

    let forward = orient(quads.len(), &occurrences)?;

    // Arcs: edges joined by passing over a crossing.
    let edges: Vec<u64> = occurrences.keys().copied().collect();
    let slot = |e: u64| edges.binary_search(&e).expect("edge was collected");
    let mut uf = UnionFind::new(edges.len());
    for q in &quads {
        uf.union(slot(q[1]), slot(q[3]));
    }
    let mut arc_of = vec![0; edges.len()];
    for (arc, class) in uf.classes().into_iter().enumerate() {
        for e in class {
            arc_of[e] = arc;
        }
    }
    let arc = |e: u64| ArcId::from_index(arc_of[slot(e)]);

    let crossings = quads
        .iter()
        .zip(&forward)
        .map(|(q, &positive)| {
            let sign = if positive {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Crossing::new(sign, arc(q[0]), arc(q[2]), arc(q[1]))
        })
        .collect();
    LinkDiagram::new(crossings, 0, Validation::Strict)
}

/// Chooses, per crossing, whether the over-strand runs `d → b` (`true`).
fn orient(
    count: usize,
    occurrences: &BTreeMap<u64, Vec<(usize, usize)>>,
) -> Result<Vec<bool>, DiagramError> {
    // An occurrence enters its crossing either always (a), never (c), or
    // depending on the crossing's direction: `enters = dir ^ flip`.
    enum Enters {
        Fixed(bool),
        Var { crossing: usize, flip: bool },
    }
    let enters = |(crossing, pos): (usize, usize)| match pos {
        0 => Enters::Fixed(true),
        2 => Enters::Fixed(false),
        1 => Enters::Var {
            crossing,
            flip: true,
        },
        _ => Enters::Var {
            crossing,
            flip: false,
        },
    };

    let mut forced: Vec<Option<bool>> = vec![None; count];
    let mut links: Vec<Vec<(usize, bool)>> = vec![Vec::new(); count];
    let conflict = |crossing: usize| DiagramError::InconsistentOrientation {
        crossing: crossing + 1,
    };

    for occ in occurrences.values() {
        // exactly one of the two ends enters a crossing
        match (enters(occ[0]), enters(occ[1])) {
            (Enters::Fixed(x), Enters::Fixed(y)) => {
                if x == y {
                    return Err(conflict(occ[0].0));
                }
            }
            (Enters::Fixed(x), Enters::Var { crossing, flip })
            | (Enters::Var { crossing, flip }, Enters::Fixed(x)) => {
                let dir = !x ^ flip;
                match forced[crossing] {
                    Some(prev) if prev != dir => return Err(conflict(crossing)),
                    _ => forced[crossing] = Some(dir),
                }
            }
            (
                Enters::Var {
                    crossing: i,
                    flip: fi,
                },
                Enters::Var {
                    crossing: j,
                    flip: fj,
                },
            ) => {
                let parity = !(fi ^ fj);
                if i == j {
                    if parity {
                        return Err(conflict(i));
                    }
                } else {
                    links[i].push((j, parity));
                    links[j].push((i, parity));
                }
            }
        }
    }

    // Propagate: forced crossings first, then unconstrained loops default to d → b.
    let mut dir: Vec<Option<bool>> = vec![None; count];
    let seeds = (0..count)
        .filter_map(|i| forced[i].map(|d| (i, d)))
        .chain((0..count).map(|i| (i, true)));
    for (seed, value) in seeds {
        if dir[seed].is_some() {
            continue;
        }
        dir[seed] = Some(value);
        let mut queue = VecDeque::from([seed]);
        while let Some(i) = queue.pop_front() {
            let di = dir[i].expect("queued crossings are assigned");
            if forced[i].is_some_and(|f| f != di) {
                return Err(conflict(i));
            }
            for &(j, parity) in &links[i] {
                let want = di ^ parity;
                match dir[j] {
                    None => {
                        dir[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(d) if d != want => return Err(conflict(j)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(dir
        .into_iter()
        .map(|d| d.expect("every crossing is seeded"))
        .collect())
}

fn parse_terms(text: &str) -> Result<Vec<[u64; 4]>, DiagramError> {
    let bytes = text.as_bytes();
    let mut quads = Vec::new();
    let mut pos = 0;
    let malformed = |offset: usize, message: &str| DiagramError::MalformedQuadruple {
        offset,
        message: message.to_string(),
    };
    loop {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos == bytes.len() {
            return Ok(quads);
        }
        let start = pos;
        if bytes[pos] != b'X' {
            return Err(malformed(pos, "expected `X(`"));
        }
        pos += 1;
        if bytes.get(pos) != Some(&b'(') {
            return Err(malformed(pos, "expected `(` after `X`"));
        }
        pos += 1;
        let close = text[pos..]
            .find(')')
            .map(|i| pos + i)
            .ok_or_else(|| malformed(start, "unterminated term"))?;
        let fields: Vec<&str> = text[pos..close].split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(malformed(
                start,
                &format!("expected 4 labels, found {}", fields.len()),
            ));
        }
        let mut quad = [0u64; 4];
        for (slot, field) in quad.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| malformed(start, &format!("`{field}` is not an unsigned integer")))?;
        }
        quads.push(quad);
        pos = close + 1;
    }
}
