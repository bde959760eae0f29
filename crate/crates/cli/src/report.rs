//! Plain-text and JSON rendering of command results.

use serde_json::{json, Map, Value};
use tropgame_core::io::format_vector;
use tropgame_core::io::Scalar;
use tropgame_core::Rational;

/// Ordered key/value report. Every entry has a text and a JSON rendering.
pub struct Report {
    verdict: Option<&'static str>,
    entries: Vec<(&'static str, String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report { verdict: None, entries: Vec::new() }
    }

    pub fn verdict(&mut self, word: &'static str) -> &mut Self {
        self.verdict = Some(word);
        self
    }

    pub fn scale(&mut self, scale: i128) -> &mut Self {
        if scale != 1 {
            self.entries.push(("scale", scale.to_string(), json!(scale.to_string())));
        }
        self
    }

    pub fn tokens<T: Scalar>(&mut self, key: &'static str, x: &[T]) -> &mut Self {
        let list: Vec<String> = x.iter().map(ToString::to_string).collect();
        self.entries.push((key, format_vector(x), json!(list)));
        self
    }

    /// 0-based indices shown 1-based.
    pub fn indices(&mut self, key: &'static str, idx: &[usize]) -> &mut Self {
        let one: Vec<usize> = idx.iter().map(|i| i + 1).collect();
        let text = one.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        self.entries.push((key, text, json!(one)));
        self
    }

    pub fn rationals(&mut self, key: &'static str, x: &[Rational]) -> &mut Self {
        let list: Vec<String> = x.iter().map(ToString::to_string).collect();
        self.entries.push((key, list.join(" "), json!(list)));
        self
    }

    pub fn number(&mut self, key: &'static str, v: usize) -> &mut Self {
        self.entries.push((key, v.to_string(), json!(v)));
        self
    }

    pub fn text(&mut self, key: &'static str, v: String) -> &mut Self {
        self.entries.push((key, v.clone(), json!(v)));
        self
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut map = Map::new();
            if let Some(v) = self.verdict {
                map.insert("verdict".into(), json!(v));
            }
            for (k, _, v) in &self.entries {
                map.insert((*k).into(), v.clone());
            }
            return serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes") + "\n";
        }
        let mut out = String::new();
        if let Some(v) = self.verdict {
            out.push_str(v);
            out.push('\n');
        }
        for (k, text, _) in &self.entries {
            out.push_str(&format!("{k}: {text}\n"));
        }
        out
    }
}
