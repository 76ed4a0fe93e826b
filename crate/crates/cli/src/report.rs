//! Report rows and their text, JSON and CSV renderings.

use std::io::Write;

use serde::Serialize;

use crate::Format;

/// Gap lists longer than this are cut in the output; `gap_count` keeps the total.
pub const MAX_LISTED_GAPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubjectKind {
    Tuple,
    Form,
    Identity,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    pub bound: usize,
    pub verdict: Verdict,
    pub gaps: Vec<usize>,
    pub gap_count: usize,
    pub witness: Option<String>,
    pub source_quote: String,
}

impl Row {
    pub fn new(
        claim: impl Into<String>,
        kind: SubjectKind,
        subject: impl Into<String>,
        bound: usize,
    ) -> Self {
        let subject = Some(subject.into());
        let (tuple, form, identity) = match kind {
            SubjectKind::Tuple => (subject, None, None),
            SubjectKind::Form => (None, subject, None),
            SubjectKind::Identity => (None, None, subject),
        };
        Row {
            claim: claim.into(),
            tuple,
            form,
            identity,
            bound,
            verdict: Verdict::Pass,
            gaps: Vec::new(),
            gap_count: 0,
            witness: None,
            source_quote: String::new(),
        }
    }

    pub fn verdict(mut self, ok: bool) -> Self {
        self.verdict = Verdict::from_bool(ok);
        self
    }

    pub fn gaps(mut self, gaps: &[usize]) -> Self {
        self.gap_count = gaps.len();
        self.gaps = gaps.iter().take(MAX_LISTED_GAPS).copied().collect();
        self
    }

    pub fn witness(mut self, w: Option<impl ToString>) -> Self {
        self.witness = w.map(|w| w.to_string());
        self
    }

    pub fn source(mut self, s: impl Into<String>) -> Self {
        self.source_quote = s.into();
        self
    }

    fn subject(&self) -> (&'static str, &str) {
        if let Some(t) = &self.tuple {
            ("tuple", t)
        } else if let Some(f) = &self.form {
            ("form", f)
        } else {
            ("identity", self.identity.as_deref().unwrap_or(""))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub bound: usize,
    pub passed: usize,
    pub failed: usize,
    pub rows: Vec<Row>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, bound: usize, rows: Vec<Row>) -> Self {
        let passed = rows.iter().filter(|r| r.verdict == Verdict::Pass).count();
        Report {
            command: command.into(),
            bound,
            passed,
            failed: rows.len() - passed,
            rows,
            wall_time_ms: 0,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => self.write_csv(out)?,
            Format::Text => self.write_text(out)?,
        }
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> anyhow::Result<()> {
        for r in &self.rows {
            let (_, subject) = r.subject();
            write!(
                out,
                "{} {:<28} {:<24} N={}",
                r.verdict.label(),
                r.claim,
                subject,
                r.bound
            )?;
            if r.gap_count > 0 {
                let listed: Vec<String> = r.gaps.iter().take(10).map(usize::to_string).collect();
                let more = if r.gap_count > listed.len() {
                    ",..."
                } else {
                    ""
                };
                write!(out, " gaps[{}]={}{more}", r.gap_count, listed.join(","))?;
            }
            if let Some(w) = &r.witness {
                write!(out, " witness={w}")?;
            }
            writeln!(out)?;
        }
        writeln!(
            out,
            "{}: {} passed, {} failed",
            self.command, self.passed, self.failed
        )?;
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> anyhow::Result<()> {
        #[derive(Serialize)]
        struct Flat<'a> {
            claim: &'a str,
            kind: &'a str,
            subject: &'a str,
            bound: usize,
            verdict: Verdict,
            gap_count: usize,
            gaps: String,
            witness: &'a str,
            source_quote: &'a str,
        }
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            let (kind, subject) = r.subject();
            let gaps: Vec<String> = r.gaps.iter().map(usize::to_string).collect();
            w.serialize(Flat {
                claim: &r.claim,
                kind,
                subject,
                bound: r.bound,
                verdict: r.verdict,
                gap_count: r.gap_count,
                gaps: gaps.join(" "),
                witness: r.witness.as_deref().unwrap_or(""),
                source_quote: &r.source_quote,
            })?;
        }
        w.flush()?;
        Ok(())
    }
}
