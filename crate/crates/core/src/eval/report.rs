//! Per-formula verdicts of a suite run and their text renderings.

use std::fmt;
use std::time::Instant;

/// Outcome of checking one closed statement over a finite structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A falsifying assignment, variable name to printed value.
    Fails(Vec<(String, String)>),
    /// The quantifier budget ran out before a verdict was reached.
    Unknown { budget: u64 },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    /// `x=ab, y=b` for a failure, empty otherwise.
    pub fn assignment_text(&self) -> String {
        match self {
            Verdict::Fails(cex) => cex.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", "),
            _ => String::new(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(_) => write!(f, "fails"),
            Verdict::Unknown { budget } => write!(f, "unknown (budget {budget})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaOutcome {
    pub id: String,
    /// The statement checked, in formula syntax or plain words.
    pub statement: String,
    pub verdict: Verdict,
    pub micros: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    /// Universe parameters, e.g. `("max-len", "6")`.
    pub params: Vec<(String, String)>,
    pub outcomes: Vec<FormulaOutcome>,
}

impl CheckReport {
    pub fn new(suite: &str, params: &[(&str, String)]) -> CheckReport {
        CheckReport {
            suite: suite.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            outcomes: Vec::new(),
        }
    }

    /// Time `check` and record its verdict under `id`.
    pub fn record(&mut self, id: &str, statement: &str, check: impl FnOnce() -> Verdict) -> &Verdict {
        let start = Instant::now();
        let verdict = check();
        self.outcomes.push(FormulaOutcome {
            id: id.to_string(),
            statement: statement.to_string(),
            verdict,
            micros: start.elapsed().as_micros(),
        });
        &self.outcomes.last().expect("just pushed").verdict
    }

    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.verdict.holds())
    }

    pub fn outcome(&self, id: &str) -> Option<&FormulaOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FormulaOutcome> {
        self.outcomes.iter().filter(|o| !o.verdict.holds())
    }

    /// Append another report's outcomes, keeping this report's header.
    pub fn extend(&mut self, other: CheckReport) {
        self.outcomes.extend(other.outcomes);
    }

    fn params_text(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }

    /// Human-readable table with one row per statement.
    pub fn render_table(&self) -> String {
        let id_w = self.outcomes.iter().map(|o| o.id.chars().count()).max().unwrap_or(2).max(2);
        let v_w = self.outcomes.iter().map(|o| o.verdict.to_string().len()).max().unwrap_or(7).max(7);
        let mut out = format!("suite {} ({})\n", self.suite, self.params_text());
        out.push_str(&format!("{:<id_w$}  {:<v_w$}  {:>10}  counterexample\n", "id", "verdict", "micros"));
        for o in &self.outcomes {
            out.push_str(&format!(
                "{:<id_w$}  {:<v_w$}  {:>10}  {}\n",
                o.id,
                o.verdict.to_string(),
                o.micros,
                o.verdict.assignment_text()
            ));
        }
        let held = self.outcomes.iter().filter(|o| o.verdict.holds()).count();
        out.push_str(&format!("{held}/{} hold\n", self.outcomes.len()));
        out
    }

    /// Tab-separated lines: suite, id, verdict, counterexample, micros.
    pub fn render_lines(&self) -> String {
        self.outcomes
            .iter()
            .map(|o| {
                let verdict = match o.verdict {
                    Verdict::Holds => "holds",
                    Verdict::Fails(_) => "fails",
                    Verdict::Unknown { .. } => "unknown",
                };
                format!("{}\t{}\t{}\t{}\t{}\n", self.suite, o.id, verdict, o.verdict.assignment_text(), o.micros)
            })
            .collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_table())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut r = CheckReport::new("demo", &[("max-len", "3".into())]);
        r.record("one", "x = x", || Verdict::Holds);
        r.record("two", "x = a", || Verdict::Fails(vec![("x".into(), "b".into())]));
        assert!(!r.all_hold());
        assert_eq!(r.failures().count(), 1);
        let lines = r.render_lines();
        let rows: Vec<Vec<&str>> = lines.lines().map(|l| l.split('\t').collect()).collect();
        assert_eq!(rows[0][..4], ["demo", "one", "holds", ""]);
        assert_eq!(rows[1][..4], ["demo", "two", "fails", "x=b"]);
        let table = r.render_table();
        assert!(table.starts_with("suite demo (max-len=3)"));
        assert!(table.contains("1/2 hold"));
    }
}
