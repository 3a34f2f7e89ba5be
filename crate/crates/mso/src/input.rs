//! Resolving a command-line tree argument.

use std::path::Path;

use mso_core::families::build;
use mso_core::Tree;

use crate::error::Result;
use crate::{edgelist, graph6, specs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputKind {
    /// Family spec if it contains `:`, else a file (edge list, or graph6
    /// for `.g6`), else a graph6 string.
    Auto,
    Spec,
    Graph6,
    Edges,
}

/// A tree together with a label describing where it came from.
pub fn load(arg: &str, kind: InputKind) -> Result<(Tree, String)> {
    let kind = match kind {
        InputKind::Auto if arg.contains(':') && !Path::new(arg).exists() => InputKind::Spec,
        InputKind::Auto if Path::new(arg).is_file() => {
            if arg.ends_with(".g6") {
                let text = std::fs::read_to_string(arg)?;
                let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                return Ok((graph6::decode(line)?, arg.to_string()));
            }
            InputKind::Edges
        }
        InputKind::Auto => InputKind::Graph6,
        k => k,
    };
    let tree = match kind {
        InputKind::Spec => build(&specs::parse_spec(arg)?)?,
        InputKind::Graph6 => graph6::decode(arg)?,
        InputKind::Edges => edgelist::parse(&std::fs::read_to_string(arg)?)?,
        InputKind::Auto => unreachable!(),
    };
    Ok((tree, arg.to_string()))
}
