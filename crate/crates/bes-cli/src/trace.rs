//! Append-only LDJSON run traces.
//!
//! Every stage the search passes through, including branches that exhaust,
//! becomes one JSON line with a frozen `"version": 1`. The trace goes to
//! stderr during searches and additionally to the file named by `--trace`,
//! so stdout stays reserved for results.

use std::fs::File;
use std::io::Write;
use std::time::Instant;

use bes_core::trace::TraceSink;

pub struct JsonTrace {
    to_stderr: bool,
    file: Option<File>,
    start: Instant,
}

impl JsonTrace {
    pub fn new(to_stderr: bool, file: Option<File>) -> Self {
        JsonTrace {
            to_stderr,
            file,
            start: Instant::now(),
        }
    }

    pub fn event(&mut self, event: &str, stage: &str, detail: &str) {
        let line = serde_json::json!({
            "version": 1,
            "event": event,
            "stage": stage,
            "detail": detail,
            "ms": self.start.elapsed().as_millis() as u64,
        });
        if self.to_stderr {
            let _ = writeln!(std::io::stderr(), "{line}");
        }
        if let Some(f) = &mut self.file {
            let _ = writeln!(f, "{line}");
        }
    }
}

impl TraceSink for JsonTrace {
    fn stage_start(&mut self, stage: &str) {
        self.event("stage_start", stage, "");
    }

    fn stage_end(&mut self, stage: &str, detail: &str) {
        self.event("stage_end", stage, detail);
    }

    fn note(&mut self, stage: &str, detail: &str) {
        self.event("note", stage, detail);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Read;

    #[test]
    fn trace_lines_are_versioned_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trace.ldjson");
        {
            let file = File::create(&path).unwrap();
            let mut trace = JsonTrace::new(false, Some(file));
            trace.stage_start("reduce");
            trace.stage_end("reduce", "linear");
            trace.note("rainbow", "copies found");
        }
        let mut text = String::new();
        File::open(&path)
            .unwrap()
            .read_to_string(&mut text)
            .unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        for line in lines {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["version"], 1);
            assert!(v["event"].is_string());
            assert!(v["ms"].is_u64());
        }
    }
}
