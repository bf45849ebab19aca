//! The line-oriented `.apg` text format.
//!
//! ```text
//! # comment
//! vertices a b c
//! blue a b
//! red b c
//! ```
//!
//! The `vertices` line is optional; vertices first seen in an edge are
//! declared in order of appearance.

use std::collections::HashMap;

use thiserror::Error;

use crate::error::GameError;
use crate::game::Game;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

struct Names {
    list: Vec<String>,
    index: HashMap<String, usize>,
}

impl Names {
    fn declare(&mut self, name: &str, line: usize) -> Result<usize, FormatError> {
        if let Some(&i) = self.index.get(name) {
            return Ok(i);
        }
        if self.list.len() == MAX_VERTICES {
            return Err(err(line, GameError::TooManyVertices(MAX_VERTICES + 1).to_string()));
        }
        self.index.insert(name.to_string(), self.list.len());
        self.list.push(name.to_string());
        Ok(self.list.len() - 1)
    }
}

pub fn parse_apg(text: &str) -> Result<Game, FormatError> {
    let mut names = Names { list: Vec::new(), index: HashMap::new() };
    let mut declared = false;
    let mut seen_edge = false;
    let (mut blue, mut red) = (Vec::new(), Vec::new());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut words = t.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        match keyword {
            "vertices" => {
                if declared {
                    return Err(err(line, "second `vertices` line"));
                }
                if seen_edge {
                    return Err(err(line, "`vertices` must come before any edge"));
                }
                declared = true;
                for w in words {
                    if names.index.contains_key(w) {
                        return Err(err(line, GameError::DuplicateVertex(w.to_string()).to_string()));
                    }
                    names.declare(w, line)?;
                }
            }
            "blue" | "red" => {
                seen_edge = true;
                let mut e = VertexSet::EMPTY;
                for w in words {
                    e = e.with(names.declare(w, line)?);
                }
                if e.is_empty() {
                    return Err(err(line, format!("`{keyword}` edge has no vertices")));
                }
                if keyword == "blue" { &mut blue } else { &mut red }.push(e);
            }
            other => return Err(err(line, format!("unknown keyword `{other}`; expected vertices, blue or red"))),
        }
    }
    Game::from_sets(names.list, blue, red).map_err(|e| err(text.lines().count().max(1), e.to_string()))
}

/// Writes the `vertices` line, then blue edges, then red edges, in the
/// game's canonical order, so `parse_apg(&write_apg(g)) == g`.
pub fn write_apg(game: &Game) -> String {
    let mut out = String::from("vertices");
    for n in game.names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for (keyword, edges) in [("blue", game.blue()), ("red", game.red())] {
        for &e in edges {
            out.push_str(keyword);
            for n in game.names_of(e) {
                out.push(' ');
                out.push_str(n);
            }
            out.push('\n');
        }
    }
    out
}
