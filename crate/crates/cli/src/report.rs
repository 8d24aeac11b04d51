//! Findings and their two renderings. Both renderings are produced from the
//! same `Report`, so text and JSON always carry the same findings.

use serde_json::{json, Map, Value};

use osg_core::{ElementSubset, Partition, Witness};

pub struct Finding {
    pub kind: &'static str,
    pub structure: Option<String>,
    pub fields: Map<String, Value>,
}

impl Finding {
    pub fn new(kind: &'static str, structure: Option<String>) -> Self {
        Finding { kind, structure, fields: Map::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("kind".into(), json!(self.kind));
        if let Some(s) = &self.structure {
            obj.insert("structure".into(), json!(s));
        }
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.clone());
        }
        Value::Object(obj)
    }
}

pub struct Report {
    pub command: &'static str,
    pub options: Map<String, Value>,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, options: Map::new(), findings: Vec::new() }
    }

    pub fn option(&mut self, key: &str, value: impl Into<Value>) {
        self.options.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, finding: Finding) {
        self.findings.push(finding);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "options": Value::Object(self.options.clone()),
            "findings": self.findings.iter().map(Finding::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.findings {
            if f.kind == "summary" {
                if let Some(Value::String(msg)) = f.fields.get("message") {
                    out.push_str(msg);
                    out.push('\n');
                    continue;
                }
            }
            out.push_str(f.kind);
            if let Some(s) = &f.structure {
                out.push_str(&format!(" [{s}]"));
            }
            out.push('\n');
            for (k, v) in &f.fields {
                out.push_str(&format!("  {k}: {}\n", text_value(v)));
            }
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(text_value).collect();
            format!("[{}]", inner.join(", "))
        }
        Value::Object(map) => {
            let inner: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
            format!("{{{}}}", inner.join(", "))
        }
        other => other.to_string(),
    }
}

/// Element names for index lookups in witnesses and subsets.
pub struct Names<'a>(pub &'a [String]);

impl Names<'_> {
    pub fn tuple(&self, elements: &[usize]) -> Value {
        Value::Array(elements.iter().map(|&i| json!(self.0[i])).collect())
    }

    pub fn subset(&self, s: &ElementSubset) -> Value {
        self.tuple(&s.to_vec())
    }

    pub fn partition(&self, p: &Partition) -> Value {
        Value::Array(p.classes().iter().map(|c| self.subset(c)).collect())
    }

    pub fn witness(&self, w: &Option<Witness>) -> Value {
        match w {
            None => Value::Null,
            Some(w) => json!({ "clause": w.clause, "elements": self.tuple(&w.elements) }),
        }
    }
}
