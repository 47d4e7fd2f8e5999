use serde_json::{Map, Value};

use crate::args::Format;

pub const SCHEMA: &str = "symchar-v1";

/// Rows for csv and text output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// A command result: the JSON payload, plus an optional tabular view.
#[derive(Debug, Clone)]
pub struct Report {
    pub payload: Map<String, Value>,
    pub table: Option<Table>,
}

impl Report {
    pub fn new(payload: Value) -> Self {
        let payload = match payload {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("result".into(), other);
                m
            }
        };
        Report { payload, table: None }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut m = Map::new();
                m.insert("schema".into(), Value::String(SCHEMA.into()));
                m.extend(self.payload.clone());
                let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serialisable");
                s.push('\n');
                s
            }
            Format::Csv => to_csv(&self.table.clone().unwrap_or_else(|| scalar_table(&self.payload))),
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.payload {
                    if is_scalar(v) {
                        out.push_str(&format!("{k}: {}\n", scalar_text(v)));
                    }
                }
                if let Some(t) = &self.table {
                    out.push_str(&to_text(t));
                }
                out
            }
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn scalar_table(payload: &Map<String, Value>) -> Table {
    let mut t = Table::new(["key", "value"]);
    for (k, v) in payload {
        let text = if is_scalar(v) { scalar_text(v) } else { v.to_string() };
        t.push(vec![k.clone(), text]);
    }
    t
}

pub fn to_csv(t: &Table) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(&t.headers).expect("in-memory write");
    for r in &t.rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_text(t: &Table) -> String {
    let cols = t.headers.len();
    let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.push('\n');
        s
    };
    let mut out = line(&t.headers);
    for r in &t.rows {
        out.push_str(&line(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(["lambda", "value"]);
        t.push(vec!["3,2".into(), "-1".into()]);
        assert_eq!(to_csv(&t), "lambda,value\n\"3,2\",-1\n");
    }

    #[test]
    fn json_has_schema() {
        let r = Report::new(json!({"omega": "2"}));
        let v: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["omega"], "2");
    }

    #[test]
    fn text_lists_scalars_then_table() {
        let mut t = Table::new(["a", "bb"]);
        t.push(vec!["10".into(), "2".into()]);
        let r = Report::new(json!({"n": 3})).with_table(t);
        assert_eq!(r.render(Format::Text), "n: 3\n a  bb\n10   2\n");
    }
}
