//! The graph6 format, restricted to trees on read.

use mso_core::Tree;

use crate::error::{MsoError, Result};

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(t: &Tree) -> String {
    let n = t.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let bits = n * n.saturating_sub(1) / 2;
    let mut set = vec![false; bits];
    for (u, v) in t.edges() {
        let (i, j) = (u.min(v), u.max(v));
        set[j * (j - 1) / 2 + i] = true;
    }
    for chunk in set.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn bad(msg: impl Into<String>) -> MsoError {
    MsoError::Graph6(msg.into())
}

/// Decodes one graph6 line and checks that it is a tree.
pub fn decode(line: &str) -> Result<Tree> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    if let Some(pos) = s.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(format!(
            "byte {} at position {} is outside 63..=126",
            s[pos],
            pos + 1
        )));
    }
    let take = |from: usize, k: usize| -> Result<usize> {
        s.get(from..from + k)
            .ok_or_else(|| bad("truncated order field"))
            .map(|b| {
                b.iter()
                    .fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize)
            })
    };
    let (n, start) = match s.first() {
        None => return Err(bad("empty string")),
        Some(126) if s.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(126) => (take(1, 3)?, 4),
        Some(&c) => ((c - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let body = &s[start..];
    if body.len() != bits.div_ceil(6) {
        return Err(bad(format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let tail = bits % 6;
    if tail != 0 && (body[body.len() - 1] - 63) & ((1 << (6 - tail)) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    if n == 0 {
        return Err(MsoError::Core(mso_core::Error::EmptyInput));
    }
    Ok(Tree::with_order(n, &edges, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // P3 with edges 0-1, 1-2; K_{1,3} centered at 0
        assert_eq!(encode(&Tree::path(3)), "Bg");
        assert_eq!(encode(&Tree::star(4)), "Cs");
        assert_eq!(encode(&Tree::trivial()), "@");
        assert_eq!(decode("Bg").unwrap(), Tree::path(3));
        assert_eq!(decode(">>graph6<<Cs").unwrap(), Tree::star(4));
    }

    #[test]
    fn large_order_header() {
        let t = Tree::path(63);
        let s = encode(&t);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(decode(&s).unwrap(), t);
    }

    #[test]
    fn rejects_non_trees() {
        // triangle
        assert!(matches!(
            decode("Bw"),
            Err(MsoError::Core(mso_core::Error::CycleDetected(..)))
        ));
        // two isolated vertices
        assert!(decode("A?").is_err());
        assert!(decode("B").is_err());
        assert!(decode("B g").is_err());
    }
}
