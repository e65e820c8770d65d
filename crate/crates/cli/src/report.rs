use bck_core::Degree;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Everything a command prints. Text and JSON are built side by side so
/// they carry the same numbers.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub text: String,
    pub error: Option<String>,
    pub exit: u8,
}

impl Outcome {
    pub fn new(command: &'static str) -> Self {
        Outcome {
            command,
            inputs: Map::new(),
            results: Value::Null,
            text: String::new(),
            error: None,
            exit: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, s: String) {
        self.text.push_str(&s);
        self.text.push('\n');
    }

    pub fn emit(&self, format: Format) {
        match format {
            Format::Text => {
                print!("{}", self.text);
                if let Some(e) = &self.error {
                    eprintln!("error: {e}");
                }
            }
            Format::Json => {
                let mut v = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                    "exit_code": self.exit,
                });
                if let Some(e) = &self.error {
                    v["error"] = Value::String(e.clone());
                }
                println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
            }
        }
    }
}

/// `7/9 (count=7 total=9)`.
pub fn degree_text(d: &Degree) -> String {
    format!("{d} (count={} total={})", d.count(), d.total())
}

pub fn flag(on: bool, c: char) -> char {
    if on {
        c
    } else {
        '-'
    }
}
