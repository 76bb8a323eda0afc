//! Line-based quiver and representation format.
//!
//! ```text
//! # the quiver 1 <- 2 -> 3
//! v 1
//! v 2
//! v 3
//! a a 2 1
//! a b 2 3
//! rep X
//! dim 1 1
//! dim 2 1
//! mat a 1
//! ```
//!
//! Vertices and arrows come first. Each `rep` block lists dimensions
//! (unlisted vertices have dimension 0) and row-major matrix entries, reduced
//! modulo the field chosen by the caller. Unlisted arrows are zero.

use std::sync::Arc;

use super::{Arrow, Quiver, QuiverRep};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

#[derive(Clone, Debug)]
pub struct QuiverFile {
    pub quiver: Arc<Quiver>,
    pub reps: Vec<(String, QuiverRep)>,
}

struct PendingRep {
    name: String,
    line: usize,
    dims: Vec<Option<usize>>,
    mats: Vec<Option<(usize, Vec<i64>)>>,
}

pub fn parse_quiver_file(text: &str, field: PrimeField) -> Result<QuiverFile> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut quiver: Option<Arc<Quiver>> = None;
    let mut pending: Vec<PendingRep> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let parts: Vec<&str> = content.split_whitespace().collect();
        match parts[0] {
            "v" | "a" if quiver.is_some() => {
                return Err(err("vertices and arrows must precede representations".into()))
            }
            "v" => match parts.as_slice() {
                [_, name] => vertices.push(name.to_string()),
                _ => return Err(err("expected `v <name>`".into())),
            },
            "a" => match parts.as_slice() {
                [_, name, src, dst] => {
                    arrows.push((name.to_string(), src.to_string(), dst.to_string(), line))
                }
                _ => return Err(err("expected `a <name> <src> <dst>`".into())),
            },
            "rep" => {
                let [_, name] = parts.as_slice() else {
                    return Err(err("expected `rep <name>`".into()));
                };
                if quiver.is_none() {
                    quiver = Some(Arc::new(finish_quiver(&vertices, &arrows)?));
                }
                let q = quiver.as_ref().unwrap();
                if pending.iter().any(|r| r.name == *name) {
                    return Err(err(format!("duplicate representation {name:?}")));
                }
                pending.push(PendingRep {
                    name: name.to_string(),
                    line,
                    dims: vec![None; q.vertex_count()],
                    mats: vec![None; q.arrows().len()],
                });
            }
            "dim" => {
                let (Some(q), Some(rep)) = (quiver.as_ref(), pending.last_mut()) else {
                    return Err(err("`dim` outside a representation".into()));
                };
                let [_, vertex, n] = parts.as_slice() else {
                    return Err(err("expected `dim <vertex> <n>`".into()));
                };
                let v = q
                    .vertex_index(vertex)
                    .ok_or_else(|| err(format!("unknown vertex {vertex:?}")))?;
                let n: usize = n.parse().map_err(|_| err(format!("bad dimension {n:?}")))?;
                if rep.dims[v].replace(n).is_some() {
                    return Err(err(format!("dimension of {vertex:?} given twice")));
                }
            }
            "mat" => {
                let (Some(q), Some(rep)) = (quiver.as_ref(), pending.last_mut()) else {
                    return Err(err("`mat` outside a representation".into()));
                };
                if parts.len() < 2 {
                    return Err(err("expected `mat <arrow> <entries...>`".into()));
                }
                let a = q
                    .arrow_index(parts[1])
                    .ok_or_else(|| err(format!("unknown arrow {:?}", parts[1])))?;
                let entries = parts[2..]
                    .iter()
                    .map(|e| e.parse::<i64>().map_err(|_| err(format!("bad entry {e:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                if rep.mats[a].replace((line, entries)).is_some() {
                    return Err(err(format!("matrix of {:?} given twice", parts[1])));
                }
            }
            other => return Err(err(format!("unknown directive {other:?}"))),
        }
    }

    let quiver = match quiver {
        Some(q) => q,
        None => Arc::new(finish_quiver(&vertices, &arrows)?),
    };
    let mut reps = Vec::with_capacity(pending.len());
    for rep in pending {
        let dims: Vec<usize> = rep.dims.iter().map(|d| d.unwrap_or(0)).collect();
        let mut mats = Vec::with_capacity(quiver.arrows().len());
        for (a, entry) in quiver.arrows().iter().zip(&rep.mats) {
            let (rows, cols) = (dims[a.target], dims[a.source]);
            let m = match entry {
                Some((line, entries)) => Matrix::from_row_major(rows, cols, entries, field)
                    .map_err(|e| Error::Parse {
                        line: *line,
                        message: format!("arrow {:?}: {e}", a.name),
                    })?,
                None => Matrix::zeros(rows, cols),
            };
            mats.push(m);
        }
        let built = QuiverRep::new(quiver.clone(), field, dims, mats).map_err(|e| Error::Parse {
            line: rep.line,
            message: e.to_string(),
        })?;
        reps.push((rep.name, built));
    }
    Ok(QuiverFile { quiver, reps })
}

fn finish_quiver(vertices: &[String], arrows: &[(String, String, String, usize)]) -> Result<Quiver> {
    let mut built = Vec::with_capacity(arrows.len());
    for (name, src, dst, line) in arrows {
        let lookup = |v: &str| {
            vertices.iter().position(|x| x == v).ok_or_else(|| Error::Parse {
                line: *line,
                message: format!("unknown vertex {v:?}"),
            })
        };
        built.push(Arrow {
            name: name.clone(),
            source: lookup(src)?,
            target: lookup(dst)?,
        });
    }
    Quiver::new(vertices.to_vec(), built)
}

/// Renders a quiver and named representations in the text format.
pub fn write_quiver_file(quiver: &Quiver, reps: &[(String, QuiverRep)]) -> String {
    let mut out = String::new();
    for v in quiver.vertices() {
        out.push_str(&format!("v {v}\n"));
    }
    for a in quiver.arrows() {
        out.push_str(&format!(
            "a {} {} {}\n",
            a.name,
            quiver.vertices()[a.source],
            quiver.vertices()[a.target]
        ));
    }
    for (name, rep) in reps {
        out.push_str(&format!("rep {name}\n"));
        for (v, d) in quiver.vertices().iter().zip(rep.dims()) {
            out.push_str(&format!("dim {v} {d}\n"));
        }
        for (a, m) in quiver.arrows().iter().zip(rep.mats()) {
            let entries: Vec<String> = m.data().iter().map(u32::to_string).collect();
            out.push_str(&format!("mat {} {}\n", a.name, entries.join(" ")).replace(" \n", "\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    const PAPER: &str = "\
# 1 <- 2 -> 3
v 1
v 2
v 3
a a 2 1
a b 2 3
rep X
dim 1 1
dim 2 1
dim 3 1
mat a 1
mat b 3   # reduced mod p
rep S2
dim 2 1
";

    #[test]
    fn parse_paper_quiver() {
        let file = parse_quiver_file(PAPER, f2()).unwrap();
        assert_eq!(*file.quiver, *Quiver::a3_paper());
        assert_eq!(file.reps.len(), 2);
        assert_eq!(file.reps[0].1, a3("111", f2()));
        assert_eq!(file.reps[1].1, a3("010", f2()));
    }

    #[test]
    fn round_trip() {
        let file = parse_quiver_file(PAPER, f2()).unwrap();
        let text = write_quiver_file(&file.quiver, &file.reps);
        let again = parse_quiver_file(&text, f2()).unwrap();
        assert_eq!(again.reps, file.reps);
    }

    #[test]
    fn errors() {
        let k = f2();
        assert!(parse_quiver_file("v 1\nv 1\n", k).is_err());
        assert!(parse_quiver_file("v 1\na x 1 2\n", k).is_err());
        assert!(parse_quiver_file("v 1\nv 2\na x 1 2\na y 2 1\n", k).is_err());
        assert!(parse_quiver_file("w 1\n", k).is_err());
        assert!(parse_quiver_file("dim 1 1\n", k).is_err());
        let wrong_count = "v 1\nv 2\na x 1 2\nrep R\ndim 1 1\ndim 2 1\nmat x 1 0\n";
        assert!(matches!(
            parse_quiver_file(wrong_count, k),
            Err(Error::Parse { line: 7, .. })
        ));
        let late_vertex = "v 1\nrep R\nv 2\n";
        assert!(matches!(
            parse_quiver_file(late_vertex, k),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
