//! Text grammar for family specs, search families and shards.
//!
//! ```text
//! path:5   star:4   aster:n=10,legs=3   baton:s=2,t=2   dds:n=12,r=2,s=4
//! bridge:s=1,t=0   stickman:p=5,q=5,ap=3,aq=3,h=2   caterpillar:5,0,1,0,5
//! glued:q=[0-1;1-2],v=0,n=7,s=3
//! ```

use std::collections::BTreeMap;

use mso_core::enumeration::{Family, Shard};
use mso_core::{FamilySpec, Tree};

use crate::error::{MsoError, Result};

fn err(column: usize, message: impl Into<String>) -> MsoError {
    MsoError::parse(1, column, message)
}

/// `key=value` pairs after the tag, with the column where each value starts.
fn pairs(body: &str, offset: usize) -> Result<BTreeMap<String, (usize, String)>> {
    let mut out = BTreeMap::new();
    let mut depth = 0usize;
    let mut start = 0;
    let chars: Vec<char> = body.chars().collect();
    let mut fields = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                fields.push((start, chars[start..i].iter().collect::<String>()));
                start = i + 1;
            }
            _ => {}
        }
    }
    fields.push((start, chars[start..].iter().collect::<String>()));
    for (at, field) in fields {
        let col = offset + at;
        let Some((k, v)) = field.split_once('=') else {
            return Err(err(col, format!("expected key=value, found `{field}`")));
        };
        if out
            .insert(
                k.trim().to_string(),
                (col + k.len() + 1, v.trim().to_string()),
            )
            .is_some()
        {
            return Err(err(col, format!("duplicate key `{k}`")));
        }
    }
    Ok(out)
}

struct Fields {
    map: BTreeMap<String, (usize, String)>,
    end: usize,
}

impl Fields {
    fn num(&mut self, key: &str) -> Result<usize> {
        let (col, v) = self
            .map
            .remove(key)
            .ok_or_else(|| err(self.end, format!("missing field `{key}`")))?;
        v.parse().map_err(|_| {
            err(
                col,
                format!("`{key}` must be a non-negative integer, found `{v}`"),
            )
        })
    }

    fn raw(&mut self, key: &str) -> Result<(usize, String)> {
        self.map
            .remove(key)
            .ok_or_else(|| err(self.end, format!("missing field `{key}`")))
    }

    fn done(self) -> Result<()> {
        match self.map.into_iter().next() {
            Some((k, (col, _))) => Err(err(col - k.len() - 1, format!("unknown field `{k}`"))),
            None => Ok(()),
        }
    }
}

fn number(s: &str, col: usize) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| err(col, format!("expected a non-negative integer, found `{s}`")))
}

fn edge_list(s: &str, col: usize) -> Result<Tree> {
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| err(col, "expected an edge list like [0-1;1-2]"))?;
    if inner.trim().is_empty() {
        return Ok(Tree::trivial());
    }
    let mut edges = Vec::new();
    let mut at = col + 1;
    for part in inner.split(';') {
        let (a, b) = part
            .split_once('-')
            .ok_or_else(|| err(at, format!("expected u-v, found `{part}`")))?;
        edges.push((number(a, at)?, number(b, at + a.len() + 1)?));
        at += part.len() + 1;
    }
    Ok(Tree::from_edges(&edges)?)
}

/// Parses and validates a family spec.
pub fn parse_spec(text: &str) -> Result<FamilySpec> {
    let text = text.trim();
    let (tag, body) = text
        .split_once(':')
        .ok_or_else(|| err(1, "expected <family>:<parameters>"))?;
    let offset = tag.len() + 2;
    let keyed = |body: &str| -> Result<Fields> {
        Ok(Fields {
            map: pairs(body, offset)?,
            end: text.len() + 1,
        })
    };
    let spec = match tag {
        "path" => FamilySpec::Path(number(body, offset)?),
        "star" => FamilySpec::Star(number(body, offset)?),
        "aster" => {
            let mut f = keyed(body)?;
            let spec = FamilySpec::BalancedAster {
                n: f.num("n")?,
                legs: f.num("legs")?,
            };
            f.done()?;
            spec
        }
        "baton" | "bridge" => {
            let mut f = keyed(body)?;
            let (s, t) = (f.num("s")?, f.num("t")?);
            f.done()?;
            if tag == "baton" {
                FamilySpec::Baton { s, t }
            } else {
                FamilySpec::Bridge { s, t }
            }
        }
        "dds" => {
            let mut f = keyed(body)?;
            let spec = FamilySpec::Dds {
                n: f.num("n")?,
                r: f.num("r")?,
                s: f.num("s")?,
            };
            f.done()?;
            spec
        }
        "stickman" => {
            let mut f = keyed(body)?;
            let spec = FamilySpec::Stickman {
                p: f.num("p")?,
                q: f.num("q")?,
                attach_p: f.num("ap")?,
                attach_q: f.num("aq")?,
                interior: f.num("h")?,
            };
            f.done()?;
            spec
        }
        "glued" => {
            let mut f = keyed(body)?;
            let (col, q) = f.raw("q")?;
            let spec = FamilySpec::Glued {
                q: edge_list(&q, col)?,
                v: f.num("v")?,
                path_len: f.num("n")?,
                position: f.num("s")?,
            };
            f.done()?;
            spec
        }
        "caterpillar" => {
            let mut leaves = Vec::new();
            let mut at = offset;
            for part in body.split(',') {
                leaves.push(number(part, at)?);
                at += part.len() + 1;
            }
            FamilySpec::Caterpillar { leaves }
        }
        other => return Err(err(1, format!("unknown family `{other}`"))),
    };
    spec.validate()?;
    Ok(spec)
}

/// Search families: `trees`, `caterpillars`, `batons`, `bridges`,
/// `dds:leaves=K`, `asters`, `asters:leaves=K`.
pub fn parse_family(text: &str) -> Result<Family> {
    let text = text.trim();
    let (tag, body) = match text.split_once(':') {
        Some((t, b)) => (t, Some(b)),
        None => (text, None),
    };
    let leaves = |body: Option<&str>| -> Result<Option<usize>> {
        match body {
            None => Ok(None),
            Some(b) => {
                let mut f = Fields {
                    map: pairs(b, tag.len() + 2)?,
                    end: text.len() + 1,
                };
                let k = f.num("leaves")?;
                f.done()?;
                Ok(Some(k))
            }
        }
    };
    match (tag, body) {
        ("trees" | "all", None) => Ok(Family::AllTrees),
        ("caterpillars", None) => Ok(Family::Caterpillars),
        ("batons", None) => Ok(Family::Batons),
        ("bridges", None) => Ok(Family::Bridges),
        ("asters", b) => Ok(Family::Asters { leaves: leaves(b)? }),
        ("dds", Some(_)) => Ok(Family::Dds {
            leaves: leaves(body)?.expect("body present"),
        }),
        ("dds", None) => Err(err(text.len() + 1, "dds needs leaves=K")),
        (_, Some(_)) if ["trees", "all", "caterpillars", "batons", "bridges"].contains(&tag) => {
            Err(err(tag.len() + 1, format!("`{tag}` takes no parameters")))
        }
        _ => Err(err(1, format!("unknown family `{tag}`"))),
    }
}

pub fn family_name(f: &Family) -> String {
    match f {
        Family::AllTrees => "trees".into(),
        Family::Caterpillars => "caterpillars".into(),
        Family::Batons => "batons".into(),
        Family::Bridges => "bridges".into(),
        Family::Dds { leaves } => format!("dds:leaves={leaves}"),
        Family::Asters { leaves: None } => "asters".into(),
        Family::Asters { leaves: Some(k) } => format!("asters:leaves={k}"),
    }
}

/// `k/K` with `0 ≤ k < K`.
pub fn parse_shard(text: &str) -> Result<Shard> {
    let (k, total) = text.split_once('/').ok_or_else(|| err(1, "expected k/K"))?;
    let k = number(k, 1)?;
    let total = number(total, k.to_string().len() + 2)?;
    Shard::new(k, total).map_err(|_| err(1, format!("shard {k}/{total} is out of range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_display() {
        let specs = [
            FamilySpec::Path(5),
            FamilySpec::Star(4),
            FamilySpec::BalancedAster { n: 10, legs: 3 },
            FamilySpec::Baton { s: 2, t: 2 },
            FamilySpec::Dds { n: 12, r: 2, s: 4 },
            FamilySpec::Bridge { s: 1, t: 0 },
            FamilySpec::Stickman {
                p: 5,
                q: 5,
                attach_p: 3,
                attach_q: 3,
                interior: 2,
            },
            FamilySpec::Glued {
                q: Tree::path(3),
                v: 0,
                path_len: 7,
                position: 3,
            },
            FamilySpec::Caterpillar {
                leaves: vec![5, 0, 1, 0, 5],
            },
        ];
        for spec in specs {
            assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn error_columns() {
        match parse_spec("baton:s=x,t=2") {
            Err(MsoError::Parse { column: 9, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_spec("baton:s=1,u=2") {
            Err(MsoError::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_spec("wheel:5").is_err());
        assert!(matches!(
            parse_spec("baton:s=0,t=1"),
            Err(MsoError::Core(_))
        ));
    }

    #[test]
    fn families_and_shards() {
        assert_eq!(parse_family("trees").unwrap(), Family::AllTrees);
        assert_eq!(
            parse_family("dds:leaves=6").unwrap(),
            Family::Dds { leaves: 6 }
        );
        assert_eq!(
            parse_family("asters:leaves=3").unwrap(),
            Family::Asters { leaves: Some(3) }
        );
        assert!(parse_family("dds").is_err());
        assert!(parse_family("batons:x=1").is_err());
        for f in [
            "trees",
            "caterpillars",
            "batons",
            "bridges",
            "dds:leaves=4",
            "asters",
            "asters:leaves=3",
        ] {
            assert_eq!(family_name(&parse_family(f).unwrap()), f);
        }
        assert_eq!(parse_shard("3/8").unwrap(), Shard::new(3, 8).unwrap());
        assert!(parse_shard("8/8").is_err());
        assert!(parse_shard("1").is_err());
    }
}
