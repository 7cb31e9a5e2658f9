use serde_json::Value;

use crate::Format;

/// One command result, prepared in every output format.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub csv: String,
    pub json: Value,
}

impl Output {
    /// Builds the CSV form from a header and string rows.
    pub fn new<S: AsRef<str>>(text: impl Into<String>, header: &[&str], rows: &[Vec<S>], json: Value) -> Output {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).expect("writing to memory");
        for row in rows {
            w.write_record(row.iter().map(AsRef::as_ref)).expect("writing to memory");
        }
        let csv = String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is UTF-8");
        Output { text: text.into(), csv, json }
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = match format {
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize"),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_and_newlines() {
        let o = Output::new("x", &["a", "b"], &[vec!["1", "p, q"]], serde_json::json!({"a": 1}));
        assert_eq!(o.csv, "a,b\n1,\"p, q\"\n");
        assert_eq!(o.render(Format::Text), "x\n");
        assert_eq!(o.render(Format::Json), "{\n  \"a\": 1\n}\n");
    }
}
