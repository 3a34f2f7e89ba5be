//! Edge-list text: one `u v` pair per line, `#` comments, blank lines ignored.

use mso_core::Tree;

use crate::error::{MsoError, Result};

fn token(line: usize, column: usize, word: &str) -> Result<usize> {
    word.parse().map_err(|_| {
        MsoError::parse(
            line,
            column,
            format!("expected a vertex id, found `{word}`"),
        )
    })
}

pub fn parse(text: &str) -> Result<Tree> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            match (ch.is_whitespace() || ch == ',', start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    words.push((s + 1, &content[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        match words.as_slice() {
            [] => {}
            [(cu, u), (cv, v)] => edges.push((token(line, *cu, u)?, token(line, *cv, v)?)),
            [(c, _)] => return Err(MsoError::parse(line, *c, "expected two vertex ids")),
            [_, _, (c, _), ..] => return Err(MsoError::parse(line, *c, "unexpected third field")),
        }
    }
    Ok(Tree::from_edges(&edges)?)
}

pub fn write(t: &Tree) -> String {
    t.edges()
        .iter()
        .map(|(u, v)| format!("{u} {v}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let t = parse("# a star\n0 1\n0 2\n\n0 3 # last\n").unwrap();
        assert_eq!(t, Tree::star(4));
        assert_eq!(parse(&write(&Tree::path(6))).unwrap(), Tree::path(6));
    }

    #[test]
    fn positions_in_errors() {
        match parse("0 1\n1 x\n") {
            Err(MsoError::Parse {
                line: 2, column: 3, ..
            }) => {}
            other => panic!("{other:?}"),
        }
        match parse("0 1\n  7\n") {
            Err(MsoError::Parse {
                line: 2, column: 3, ..
            }) => {}
            other => panic!("{other:?}"),
        }
        match parse("0 1 2\n") {
            Err(MsoError::Parse {
                line: 1, column: 5, ..
            }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_is_reported() {
        assert!(matches!(
            parse("0 1\n1 2\n2 0\n"),
            Err(MsoError::Core(mso_core::Error::CycleDetected(..)))
        ));
        assert!(matches!(
            parse(""),
            Err(MsoError::Core(mso_core::Error::EmptyInput))
        ));
    }
}
