//! Plain-text polytope files and bulk-dump import.
//!
//! ```text
//! # fanofiber polytopes
//! id 5
//! name P^2
//! dim 2
//! v -1 -1
//! v 0 1
//! v 1 0
//! ---
//! dim 1
//! v -1
//! v 1
//! ```
//!
//! `id` and `name` are optional and precede `dim`. Blank lines and `#`
//! comments are ignored. Vertices are stored in lexicographic order.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::polytope::{LatticeVector, Polytope, PolytopeError};

pub const HEADER: &str = "# fanofiber polytopes";
pub const FIXTURES_ENV: &str = "FANOFIBER_FIXTURES";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("record {record}: {source}")]
    InvariantViolation {
        record: String,
        #[source]
        source: PolytopeError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeRecord {
    pub id: Option<u64>,
    pub name: Option<String>,
    pub dim: usize,
    pub vertices: Vec<LatticeVector>,
}

impl PolytopeRecord {
    pub fn from_polytope(p: &Polytope, id: Option<u64>, name: Option<String>) -> Self {
        Self {
            id,
            name,
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        }
    }

    pub fn polytope(&self) -> Result<Polytope, PolytopeError> {
        Polytope::new(self.vertices.clone())
    }

    /// `#id`, the name, or the position in its file.
    pub fn label(&self, position: usize) -> String {
        match (&self.id, &self.name) {
            (Some(id), _) => format!("#{id}"),
            (None, Some(n)) => n.clone(),
            (None, None) => format!("record {}", position + 1),
        }
    }
}

#[derive(Default)]
struct Draft {
    id: Option<u64>,
    name: Option<String>,
    dim: Option<usize>,
    vertices: Vec<LatticeVector>,
    first_line: usize,
}

impl Draft {
    fn is_empty(&self) -> bool {
        self.id.is_none() && self.name.is_none() && self.dim.is_none() && self.vertices.is_empty()
    }

    fn finish(self, position: usize) -> Result<PolytopeRecord, IoError> {
        let Some(dim) = self.dim else {
            return Err(IoError::Parse {
                line: self.first_line,
                reason: "record has no `dim` line".into(),
            });
        };
        let mut rec = PolytopeRecord {
            id: self.id,
            name: self.name,
            dim,
            vertices: self.vertices,
        };
        let p = rec
            .polytope()
            .map_err(|source| IoError::InvariantViolation {
                record: rec.label(position),
                source,
            })?;
        rec.vertices = p.vertices().to_vec();
        Ok(rec)
    }
}

fn parse_ints(fields: &[&str], line: usize) -> Result<Vec<i64>, IoError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<i64>().map_err(|_| IoError::Parse {
                line,
                reason: format!("`{f}` is not an integer"),
            })
        })
        .collect()
}

pub fn parse_polytopes(text: &str) -> Result<Vec<PolytopeRecord>, IoError> {
    let mut out = Vec::new();
    let mut draft = Draft::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if s == "---" {
            if !draft.is_empty() {
                out.push(std::mem::take(&mut draft).finish(out.len())?);
            }
            continue;
        }
        if draft.is_empty() {
            draft.first_line = line;
        }
        let (key, rest) = s.split_once(' ').unwrap_or((s, ""));
        let rest = rest.trim();
        let err = |reason: String| IoError::Parse { line, reason };
        match key {
            "id" | "name" if draft.dim.is_some() => {
                return Err(err(format!("`{key}` must precede `dim`")));
            }
            "id" => {
                if draft.id.is_some() {
                    return Err(err("duplicate `id`".into()));
                }
                draft.id = Some(rest.parse().map_err(|_| err(format!("bad id `{rest}`")))?);
            }
            "name" => {
                if draft.name.is_some() {
                    return Err(err("duplicate `name`".into()));
                }
                if rest.is_empty() {
                    return Err(err("empty name".into()));
                }
                draft.name = Some(rest.to_string());
            }
            "dim" => {
                if draft.dim.is_some() {
                    return Err(err("duplicate `dim`".into()));
                }
                let d: usize = rest.parse().map_err(|_| err(format!("bad dim `{rest}`")))?;
                if d == 0 {
                    return Err(err("dim must be positive".into()));
                }
                draft.dim = Some(d);
            }
            "v" => {
                let Some(d) = draft.dim else {
                    return Err(err("`v` before `dim`".into()));
                };
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != d {
                    return Err(err(format!(
                        "expected {d} coordinates, found {}",
                        fields.len()
                    )));
                }
                draft.vertices.push(parse_ints(&fields, line)?);
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    if !draft.is_empty() {
        out.push(draft.finish(out.len())?);
    }
    Ok(out)
}

pub fn format_polytopes(records: &[PolytopeRecord]) -> String {
    let mut s = String::new();
    s.push_str(HEADER);
    s.push('\n');
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            s.push_str("---\n");
        }
        if let Some(id) = r.id {
            writeln!(s, "id {id}").unwrap();
        }
        if let Some(name) = &r.name {
            writeln!(s, "name {name}").unwrap();
        }
        writeln!(s, "dim {}", r.dim).unwrap();
        for v in &r.vertices {
            let coords: Vec<String> = v.iter().map(i64::to_string).collect();
            writeln!(s, "v {}", coords.join(" ")).unwrap();
        }
    }
    s
}

pub fn read_polytope_file(path: impl AsRef<Path>) -> Result<Vec<PolytopeRecord>, IoError> {
    parse_polytopes(&fs::read_to_string(path)?)
}

pub fn write_polytope_file(
    records: &[PolytopeRecord],
    path: impl AsRef<Path>,
) -> Result<(), IoError> {
    fs::write(path, format_polytopes(records))?;
    Ok(())
}

/// Reads an external dump: blocks of integer rows (optionally prefixed by
/// `v`) separated by blank lines or `---`. Lines starting with a letter other
/// than `v`, and `#` comments, are skipped. The 1-based block index becomes
/// the record id.
pub fn import_dump(text: &str) -> Result<Vec<PolytopeRecord>, IoError> {
    let mut out = Vec::new();
    let mut rows: Vec<LatticeVector> = Vec::new();
    let mut start = 0;
    let flush = |rows: &mut Vec<LatticeVector>, start: usize, out: &mut Vec<PolytopeRecord>| {
        if rows.is_empty() {
            return Ok(());
        }
        let dim = rows[0].len();
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(IoError::Parse {
                line: start,
                reason: format!(
                    "block row {} has {} coordinates, expected {dim}",
                    bad + 1,
                    rows[bad].len()
                ),
            });
        }
        let draft = Draft {
            id: Some(out.len() as u64 + 1),
            name: None,
            dim: Some(dim),
            vertices: std::mem::take(rows),
            first_line: start,
        };
        out.push(draft.finish(out.len())?);
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let s = raw.trim();
        if s.is_empty() || s == "---" {
            flush(&mut rows, start, &mut out)?;
            continue;
        }
        if s.starts_with('#') {
            continue;
        }
        let body = match s.strip_prefix("v ") {
            Some(b) => b,
            None if s.starts_with(|c: char| c.is_ascii_alphabetic()) => continue,
            None => s,
        };
        if rows.is_empty() {
            start = i + 1;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        rows.push(parse_ints(&fields, i + 1)?);
    }
    flush(&mut rows, start, &mut out)?;
    Ok(out)
}

/// `$FANOFIBER_FIXTURES`, else the `fixtures` directory of this crate.
pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

/// Records of a `.poly` file, or of every `.poly` file in a directory (by
/// file name).
pub fn read_path(path: impl AsRef<Path>) -> Result<Vec<PolytopeRecord>, IoError> {
    let path = path.as_ref();
    if !path.is_dir() {
        return read_polytope_file(path);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "poly"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        out.extend(read_polytope_file(&f)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{klyachko, simplex};

    #[test]
    fn parses_simplex() {
        let recs = parse_polytopes("dim 2\nv 1 0\nv 0 1\nv -1 -1\n").unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(
            recs[0].polytope().unwrap().vertices(),
            simplex(2).unwrap().vertices()
        );
        assert_eq!(recs[0].id, None);
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse_polytopes("dim 2\nv 1 0\nv 1 0\nv 0 1\nv -1 -1\n").unwrap_err();
        assert!(matches!(
            e,
            IoError::InvariantViolation {
                source: PolytopeError::DuplicateVertex(_),
                ..
            }
        ));
        let e = parse_polytopes("dim 2\nv 1 0\nv 1\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 3, .. }));
        let e = parse_polytopes("v 1 0\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 1, .. }));
        let e = parse_polytopes("dim 1\nid 3\nv 1\nv -1\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 2, .. }));
        let e = parse_polytopes("dim 1\nv 1\nv x\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 3, .. }));
        let e = parse_polytopes("name a\n---\n").unwrap_err();
        assert!(matches!(e, IoError::Parse { line: 1, .. }));
    }

    #[test]
    fn round_trips() {
        let p2 = PolytopeRecord::from_polytope(&simplex(2).unwrap(), Some(5), Some("P^2".into()));
        let w = PolytopeRecord::from_polytope(
            &klyachko(3, 6).unwrap(),
            Some(5817),
            Some("W_6^3".into()),
        );
        let text = format_polytopes(&[p2.clone(), w.clone()]);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 3 + 12);
        let back = parse_polytopes(&text).unwrap();
        assert_eq!(back, vec![p2, w]);
        assert_eq!(format_polytopes(&back), text);
        assert_eq!(format_polytopes(&[]), format!("{HEADER}\n"));
        assert!(parse_polytopes(&format_polytopes(&[])).unwrap().is_empty());
    }

    #[test]
    fn imports_dump_blocks() {
        let text = "# dump\n1 0\n0 1\n-1 -1\n\nv 1\nv -1\n---\n1 0\n-1 0\n0 1\n0 -1\n";
        let recs = import_dump(text).unwrap();
        assert_eq!(
            recs.iter().map(|r| r.id).collect::<Vec<_>>(),
            vec![Some(1), Some(2), Some(3)]
        );
        assert_eq!(
            recs.iter().map(|r| r.dim).collect::<Vec<_>>(),
            vec![2, 1, 2]
        );
        assert!(matches!(
            import_dump("1 0\n1\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
    }
}
