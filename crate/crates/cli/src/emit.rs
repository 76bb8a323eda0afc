//! TSV, JSON and DOT renderings of a measured poset.

use std::fmt::Write as _;

use grmeasure::chain::NatChain;
use grmeasure::poset::{GRResult, MeasuredPoset};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Dot,
}

/// A representation measured outside the poset, e.g. a decomposable one.
pub struct ExtraRow {
    pub name: String,
    pub dims: String,
    pub length: usize,
    pub measure: NatChain,
}

pub struct Table<'a> {
    pub poset: &'a MeasuredPoset,
    pub result: &'a GRResult,
    /// Dimension vectors, for quiver output.
    pub dims: Option<Vec<String>>,
    pub extra: Vec<ExtraRow>,
}

#[derive(Serialize)]
struct JsonElement<'a> {
    name: &'a str,
    length: u32,
    measure: &'a [u32],
    class: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dims: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonRep<'a> {
    name: &'a str,
    dims: &'a str,
    length: usize,
    measure: &'a [u32],
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    elements: Vec<JsonElement<'a>>,
    classes: Vec<Vec<&'a str>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reps: Vec<JsonRep<'a>>,
}

impl Table<'_> {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.tsv(),
            Format::Json => self.json(),
            Format::Dot => self.dot(),
        }
    }

    fn tsv(&self) -> String {
        let mut out = String::from("element\tlength\tmeasure\tclass");
        if self.dims.is_some() {
            out.push_str("\tdims");
        }
        out.push('\n');
        for x in 0..self.poset.len() {
            write!(
                out,
                "{}\t{}\t{}\t{}",
                self.poset.name(x),
                self.poset.length(x),
                self.result.measure[x],
                self.result.class_of(x)
            )
            .unwrap();
            if let Some(dims) = &self.dims {
                write!(out, "\t{}", dims[x]).unwrap();
            }
            out.push('\n');
        }
        if !self.extra.is_empty() {
            out.push_str("\nrep\tlength\tmeasure\tdims\n");
            for r in &self.extra {
                writeln!(out, "{}\t{}\t{}\t{}", r.name, r.length, r.measure, r.dims).unwrap();
            }
        }
        out
    }

    fn json(&self) -> String {
        let output = JsonOutput {
            elements: (0..self.poset.len())
                .map(|x| JsonElement {
                    name: self.poset.name(x),
                    length: self.poset.length(x),
                    measure: self.result.measure[x].elements(),
                    class: self.result.class_of(x),
                    dims: self.dims.as_ref().map(|d| d[x].as_str()),
                })
                .collect(),
            classes: self
                .result
                .classes
                .iter()
                .map(|c| c.iter().map(|&x| self.poset.name(x)).collect())
                .collect(),
            reps: self
                .extra
                .iter()
                .map(|r| JsonRep {
                    name: &r.name,
                    dims: &r.dims,
                    length: r.length,
                    measure: r.measure.elements(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&output).expect("plain data serializes");
        s.push('\n');
        s
    }

    fn dot(&self) -> String {
        let mut out = String::from("digraph gr {\n  rankdir=BT;\n  node [shape=box];\n");
        for x in 0..self.poset.len() {
            writeln!(
                out,
                "  {} [label=\"{}\\n{}\"];",
                quote(self.poset.name(x)),
                escape(self.poset.name(x)),
                self.result.measure[x]
            )
            .unwrap();
        }
        for (a, b) in self.poset.covers() {
            writeln!(out, "  {} -> {};", quote(self.poset.name(a)), quote(self.poset.name(b))).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", escape(s))
}
