//! Line-oriented `key=value` records with a JSON mirror.

use serde_json::{Map, Value};

/// Process status a command asks for after its report is printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verdict contradicted what the invocation asserted.
    Verdict,
}

#[derive(Debug)]
pub struct Report {
    /// Raw text emitted before the records, such as a table or a partition file.
    pub body: String,
    pub records: Vec<Vec<(String, Value)>>,
    /// Extra JSON fields that have no line form.
    pub extra: Map<String, Value>,
    pub status: Status,
}

impl Report {
    pub fn new() -> Report {
        Report {
            body: String::new(),
            records: Vec::new(),
            extra: Map::new(),
            status: Status::Ok,
        }
    }

    pub fn record(&mut self) -> RecordBuilder<'_> {
        self.records.push(Vec::new());
        RecordBuilder(self.records.last_mut().expect("just pushed"))
    }

    pub fn fail_if(&mut self, failed: bool) {
        if failed {
            self.status = Status::Verdict;
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = self.body.clone();
        for rec in &self.records {
            let fields: Vec<String> = rec
                .iter()
                .map(|(k, v)| format!("{k}={}", text_value(v)))
                .collect();
            out.push_str(&fields.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut root = self.extra.clone();
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|rec| Value::Object(rec.iter().cloned().collect()))
            .collect();
        root.insert("records".into(), Value::Array(records));
        let mut s =
            serde_json::to_string_pretty(&Value::Object(root)).expect("values are serializable");
        s.push('\n');
        s
    }
}

pub struct RecordBuilder<'a>(&'a mut Vec<(String, Value)>);

impl RecordBuilder<'_> {
    pub fn kv(self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }
}

/// Strings with spaces are quoted; arrays join with commas, nested arrays with `|`.
fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) if s.is_empty() || s.contains(char::is_whitespace) || s.contains('"') => {
            format!("{s:?}")
        }
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => {
            let nested = items.iter().any(Value::is_array);
            let parts: Vec<String> = items.iter().map(text_value).collect();
            parts.join(if nested { "|" } else { "," })
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_records() {
        let mut r = Report::new();
        r.record()
            .kv("valid", true)
            .kv("rank", 19)
            .kv("name", "two words")
            .kv("orbits", json!([[1, 2], [3]]))
            .kv("alt", Value::Null);
        assert_eq!(
            r.render_text(),
            "valid=true rank=19 name=\"two words\" orbits=1,2|3 alt=none\n"
        );
    }

    #[test]
    fn json_mirror() {
        let mut r = Report::new();
        r.record().kv("p", 5);
        r.extra.insert("group".into(), json!("C5"));
        let v: Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(v["records"][0]["p"], 5);
        assert_eq!(v["group"], "C5");
    }
}
