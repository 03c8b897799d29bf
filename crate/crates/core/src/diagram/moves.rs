//! Local rewrites: Reidemeister I and II insertions (and their removals) and
//! connected sums.
//!
//! Insertions happen at the far end of an arc, just before it passes under
//! its next crossing, so the arc keeps all of its over-crossings and the new
//! tail arc takes over the under-crossing. An arc that never passes under
//! anything is a closed loop, so a new crossing on it closes back onto itself.

use super::{ArcId, Crossing, LinkDiagram, Sign};
use crate::error::DiagramError;

/// Adds a kink on arc `a`: a new crossing `a′ = a ▷ a` (`▷⁻¹` for a negative
/// sign), appended after the existing crossings.
pub fn reidemeister_r1(d: &LinkDiagram, a: ArcId, sign: Sign) -> Result<LinkDiagram, DiagramError> {
    d.check_arc(a)?;
    let mut crossings = d.crossings.clone();
    let mut arc_count = d.arc_count;
    let tail = match terminal_crossing(&crossings, a) {
        Some(j) => {
            let tail = ArcId(arc_count);
            arc_count += 1;
            crossings[j].under_in = tail;
            tail
        }
        None => a,
    };
    crossings.push(Crossing::new(sign, a, tail, a));
    Ok(LinkDiagram::renumbered(arc_count, crossings))
}

/// Removes the kink at crossing `index` (0-based).
pub fn reidemeister_r1_inverse(d: &LinkDiagram, index: usize) -> Result<LinkDiagram, DiagramError> {
    let c = *crossing_at(d, index)?;
    if c.over != c.under_in && c.over != c.under_out {
        return Err(DiagramError::NotAKink {
            crossing: index + 1,
        });
    }
    let mut crossings = d.crossings.clone();
    crossings.remove(index);
    let merges = if c.under_in == c.under_out {
        vec![]
    } else {
        vec![(c.under_out, c.under_in)]
    };
    Ok(merge_arcs(d.arc_count, crossings, &merges))
}

/// Pushes arc `a` under arc `b`: new crossings `c = a ▷ b` and
/// `a″ = c ▷⁻¹ b`, appended in that order.
pub fn reidemeister_r2(d: &LinkDiagram, a: ArcId, b: ArcId) -> Result<LinkDiagram, DiagramError> {
    d.check_arc(a)?;
    d.check_arc(b)?;
    let mut crossings = d.crossings.clone();
    let mut arc_count = d.arc_count;
    let middle = ArcId(arc_count);
    arc_count += 1;
    let tail = match terminal_crossing(&crossings, a) {
        Some(j) => {
            let tail = ArcId(arc_count);
            arc_count += 1;
            crossings[j].under_in = tail;
            tail
        }
        None => a,
    };
    crossings.push(Crossing::new(Sign::Positive, a, middle, b));
    crossings.push(Crossing::new(Sign::Negative, middle, tail, b));
    Ok(LinkDiagram::renumbered(arc_count, crossings))
}

/// Removes the bigon formed by crossings `index` and `index + 1` (0-based).
pub fn reidemeister_r2_inverse(d: &LinkDiagram, index: usize) -> Result<LinkDiagram, DiagramError> {
    let first = *crossing_at(d, index)?;
    let second = *crossing_at(d, index + 1)?;
    let middle = first.under_out;
    let not_bigon = || DiagramError::NotABigon {
        first: index + 1,
        second: index + 2,
    };
    if first.sign == second.sign
        || first.over != second.over
        || second.under_in != middle
        || middle == first.under_in
        || middle == first.over
    {
        return Err(not_bigon());
    }
    let mut crossings = d.crossings.clone();
    crossings.drain(index..index + 2);
    if crossings.iter().any(|c| c.arcs().contains(&middle)) {
        return Err(not_bigon());
    }
    let head = first.under_in;
    let tail = second.under_out;
    let mut merges = vec![(middle, head)];
    if tail != head {
        merges.push((tail, head));
    }
    Ok(merge_arcs(d.arc_count, crossings, &merges))
}

/// Connected sum of `d1` and `d2`, banding arc `a1` of `d1` to arc `a2` of
/// `d2`. Arcs of `d2` are numbered after those of `d1`.
pub fn connected_sum(
    d1: &LinkDiagram,
    d2: &LinkDiagram,
    a1: ArcId,
    a2: ArcId,
) -> Result<LinkDiagram, DiagramError> {
    d1.check_arc(a1)?;
    d2.check_arc(a2)?;
    let shift = d1.arc_count;
    let shifted = |a: ArcId| ArcId(a.0 + shift);
    let mut crossings = d1.crossings.clone();
    crossings.extend(d2.crossings.iter().map(|c| Crossing {
        sign: c.sign,
        under_in: shifted(c.under_in),
        under_out: shifted(c.under_out),
        over: shifted(c.over),
    }));
    let arc_count = d1.arc_count + d2.arc_count;
    let (a, b) = (a1, shifted(a2));
    match (
        terminal_crossing(&crossings, a),
        terminal_crossing(&crossings, b),
    ) {
        // Each arc now runs on into the other's under-crossing.
        (Some(ja), Some(jb)) => {
            crossings[ja].under_in = b;
            crossings[jb].under_in = a;
            Ok(LinkDiagram::renumbered(arc_count, crossings))
        }
        // A loop with no under-crossings is absorbed into the other arc.
        _ => Ok(merge_arcs(arc_count, crossings, &[(b, a)])),
    }
}

fn terminal_crossing(crossings: &[Crossing], a: ArcId) -> Option<usize> {
    crossings.iter().position(|c| c.under_in == a)
}

fn crossing_at(d: &LinkDiagram, index: usize) -> Result<&Crossing, DiagramError> {
    d.crossings
        .get(index)
        .ok_or(DiagramError::CrossingOutOfRange {
            crossing: index + 1,
            count: d.crossings.len(),
        })
}

/// Replaces each `from` arc by its `to` arc, then deletes the `from` arcs
/// from the numbering.
fn merge_arcs(
    arc_count: usize,
    mut crossings: Vec<Crossing>,
    merges: &[(ArcId, ArcId)],
) -> LinkDiagram {
    for &(from, to) in merges {
        for c in &mut crossings {
            for arc in [&mut c.under_in, &mut c.under_out, &mut c.over] {
                if *arc == from {
                    *arc = to;
                }
            }
        }
    }
    let mut removed: Vec<usize> = merges.iter().map(|(from, _)| from.0).collect();
    removed.sort_unstable();
    let shift = |a: ArcId| ArcId(a.0 - removed.partition_point(|&r| r < a.0));
    for c in &mut crossings {
        c.under_in = shift(c.under_in);
        c.under_out = shift(c.under_out);
        c.over = shift(c.over);
    }
    LinkDiagram::renumbered(arc_count - removed.len(), crossings)
}
