//! Output helpers: JSON with full-precision floats and simple CSV.

/// JSON value restricted to what the reports need.
pub enum Json {
    Str(String),
    Float(f64),
    Int(u64),
    Bool(bool),
}

impl Json {
    fn emit(&self) -> String {
        match self {
            // 16 digits after the point = 17 significant digits, enough to
            // round-trip any f64 exactly.
            Json::Float(x) => format!("{x:.16e}"),
            Json::Int(x) => x.to_string(),
            Json::Bool(b) => b.to_string(),
            Json::Str(s) => json_string(s),
        }
    }
}

pub fn json_object(fields: &[(&str, Json)]) -> String {
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| format!("  {}: {}", json_string(k), v.emit()))
        .collect();
    format!("{{\n{}\n}}", body.join(",\n"))
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Quotes a CSV field only when it needs it.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
