//! Line-oriented run reports: the CLI's output format, parseable back
//! losslessly.

use std::fmt;

/// One output line as an ordered list of `key=value` fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskLine {
    pub fields: Vec<(String, String)>,
}

impl TaskLine {
    pub fn new() -> TaskLine {
        TaskLine { fields: Vec::new() }
    }

    pub fn push(mut self, key: &str, value: impl fmt::Display) -> TaskLine {
        let value = value.to_string();
        debug_assert!(!key.contains([' ', '=']) && !value.contains(' '));
        self.fields.push((key.to_string(), value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl Default for TaskLine {
    fn default() -> Self {
        TaskLine::new()
    }
}

impl fmt::Display for TaskLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.fields {
            if !first {
                f.write_str(" ")?;
            }
            // A field with an empty value is a bare flag.
            if v.is_empty() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}={v}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A whole run: the command echo, the task lines, and the exit code
/// (0 success, 1 verification failure or violation found, 2 input error,
/// 3 budget exceeded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub lines: Vec<TaskLine>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            lines: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("command {}\n", self.command);
        for line in &self.lines {
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out.push_str(&format!("exit {}\n", self.exit_code));
        out
    }

    pub fn parse(text: &str) -> Option<RunReport> {
        let mut lines = text.lines();
        let command = lines.next()?.strip_prefix("command ")?.to_string();
        let mut report = RunReport::new(command);
        let mut saw_exit = false;
        for line in lines {
            if let Some(code) = line.strip_prefix("exit ") {
                report.exit_code = code.parse().ok()?;
                saw_exit = true;
                break;
            }
            let mut task = TaskLine::new();
            for tok in line.split(' ') {
                match tok.split_once('=') {
                    Some((k, v)) => task = task.push(k, v),
                    None => task = task.push(tok, ""),
                }
            }
            report.lines.push(task);
        }
        saw_exit.then_some(report)
    }
}
