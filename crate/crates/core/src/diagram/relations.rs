//! The line-oriented relations format:
//!
//! ```text
//! # connected sum of two Hopf links
//! circles: 0
//! x2 = x3 * x1
//! x3 = x2 / x4
//! ```
//!
//! `*` is a positive crossing (`▷`), `/` a negative one (`▷⁻¹`).

use super::{ArcId, Crossing, LinkDiagram, Sign, Validation};
use crate::error::DiagramError;

/// Parses a relations file with [`Validation::Strict`].
pub fn parse_relations_file(text: &str) -> Result<LinkDiagram, DiagramError> {
    parse_relations_file_with(text, Validation::Strict)
}

pub fn parse_relations_file_with(
    text: &str,
    validation: Validation,
) -> Result<LinkDiagram, DiagramError> {
    let mut crossings = Vec::new();
    let mut circles: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor {
            line,
            pos: 0,
            line_no: i + 1,
        };
        cur.skip_ws();
        if cur.rest().starts_with("circles") {
            if circles.is_some() {
                return Err(cur.error("`circles:` declared twice"));
            }
            if !crossings.is_empty() {
                return Err(cur.error("`circles:` must precede the relations"));
            }
            cur.pos += "circles".len();
            cur.skip_ws();
            cur.expect(':')?;
            cur.skip_ws();
            circles = Some(cur.uint()?);
        } else {
            let out = cur.arc()?;
            cur.skip_ws();
            cur.expect('=')?;
            cur.skip_ws();
            let input = cur.arc()?;
            cur.skip_ws();
            let sign = match cur.peek() {
                Some('*') => Sign::Positive,
                Some('/') => Sign::Negative,
                _ => return Err(cur.error("expected `*` or `/`")),
            };
            cur.pos += 1;
            cur.skip_ws();
            let over = cur.arc()?;
            crossings.push(Crossing::new(sign, input, out, over));
        }
        cur.skip_ws();
        if cur.peek().is_some() {
            return Err(cur.error("unexpected trailing input"));
        }
    }
    LinkDiagram::new(crossings, circles.unwrap_or(0), validation)
}

struct Cursor<'a> {
    line: &'a str,
    pos: usize,
    line_no: usize,
}

impl Cursor<'_> {
    fn rest(&self) -> &str {
        &self.line[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.line.len() - trimmed.len();
    }

    fn error(&self, message: &str) -> DiagramError {
        DiagramError::Syntax {
            line: self.line_no,
            column: self.line[..self.pos].chars().count() + 1,
            message: message.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DiagramError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn uint(&mut self) -> Result<usize, DiagramError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an unsigned integer"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn arc(&mut self) -> Result<ArcId, DiagramError> {
        self.expect('x')?;
        let start = self.pos;
        let label = self.uint()?;
        ArcId::from_label(label).ok_or_else(|| {
            self.pos = start;
            self.error("arc labels start at 1")
        })
    }
}
