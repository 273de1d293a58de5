//! Report emission and terminal coloring.

use std::io::{IsTerminal, Write};
use std::path::Path;

const GREEN: &str = "\x1b[32m";
const RED: &str = "\x1b[31m";
const BOLD: &str = "\x1b[1m";
const RESET: &str = "\x1b[0m";

/// Coloring is forced by `BONDKIT_COLOR=1`, disabled by `BONDKIT_COLOR=0`,
/// and otherwise follows whether the stream is a terminal.
pub fn color_enabled(is_terminal: bool) -> bool {
    match std::env::var("BONDKIT_COLOR").as_deref() {
        Ok("1") => true,
        Ok("0") => false,
        _ => is_terminal,
    }
}

fn paint(word: &str, code: &str) -> String {
    format!("{code}{word}{RESET}")
}

/// Highlights status values and section headings of a text report.
pub fn colorize(text: &str) -> String {
    let good = ["holds", "true", "Goldberg linkage"];
    let bad = ["violated", "false", "degenerate", "inconsistent"];
    let mut out = String::with_capacity(text.len());
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches('\n');
        let nl = &line[body.len()..];
        if body.starts_with("== ") {
            out.push_str(&paint(body, BOLD));
        } else if let Some((key, value)) = body.split_once(": ") {
            if good.contains(&value) {
                out.push_str(&format!("{key}: {}", paint(value, GREEN)));
            } else if bad.contains(&value) {
                out.push_str(&format!("{key}: {}", paint(value, RED)));
            } else {
                out.push_str(body);
            }
        } else {
            out.push_str(body);
        }
        out.push_str(nl);
    }
    out
}

/// Writes the report to `out` or to standard output.
pub fn emit(report: &str, colored: bool, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, report),
        None => {
            let stdout = std::io::stdout();
            let text = if colored && color_enabled(stdout.is_terminal()) { colorize(report) } else { report.to_string() };
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()
        }
    }
}

pub fn error_line(msg: &str) -> String {
    let label = if color_enabled(std::io::stderr().is_terminal()) { paint("error", RED) } else { "error".to_string() };
    format!("bondkit: {label}: {msg}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colors_status_values_only() {
        let s = colorize("closure: holds\nverdict: degenerate\nname: holds x\n== bonds ==\n");
        assert!(s.contains("closure: \x1b[32mholds\x1b[0m\n"));
        assert!(s.contains("verdict: \x1b[31mdegenerate\x1b[0m\n"));
        assert!(s.contains("name: holds x\n"));
        assert!(s.contains("\x1b[1m== bonds ==\x1b[0m\n"));
    }
}
