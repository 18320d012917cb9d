//! Stage tracing hooks.
//!
//! The search driver reports its progress through a [`TraceSink`] so that a
//! host application (the CLI, a test harness) can timestamp and record
//! stages without this crate depending on clocks or IO.

pub trait TraceSink {
    fn stage_start(&mut self, _stage: &str) {}
    fn stage_end(&mut self, _stage: &str, _detail: &str) {}
    /// One-off observation inside a stage.
    fn note(&mut self, _stage: &str, _detail: &str) {}
}

/// Discards all events.
pub struct NullTrace;

impl TraceSink for NullTrace {}
