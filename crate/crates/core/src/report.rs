//! Structured pass/fail reports shared by the verification routines and the CLI.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assertion {
    pub id: String,
    /// Human-readable statement of the property being checked.
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

impl Assertion {
    pub fn check(id: &str, anchor: &str, ok: bool, detail: impl Into<String>) -> Self {
        Assertion {
            id: id.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn skip(id: &str, anchor: &str, reason: impl Into<String>) -> Self {
        Assertion {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Skipped(reason.into()),
            detail: String::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS {} [{}]", self.id, self.anchor)?,
            Status::Fail => write!(f, "FAIL {} [{}]", self.id, self.anchor)?,
            Status::Skipped(why) => {
                return write!(f, "SKIP {} [{}] skipped: {why}", self.id, self.anchor)
            }
        }
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

/// Summary of the input digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digest {
    pub n: usize,
    pub m: usize,
    pub regularity: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub digest: Option<Digest>,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            digest: None,
            assertions: Vec::new(),
        }
    }

    pub fn push(&mut self, a: Assertion) {
        self.assertions.push(a);
    }

    pub fn extend(&mut self, other: Report) {
        self.assertions.extend(other.assertions);
    }

    /// No assertion failed; skipped ones do not count against it.
    pub fn passed(&self) -> bool {
        !self.assertions.iter().any(Assertion::failed)
    }

    pub fn exit_status(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "# {}", self.command)?;
        if let Some(d) = &self.digest {
            write!(f, " n={} m={}", d.n, d.m)?;
            match d.regularity {
                Some(k) => write!(f, " regular={k}")?,
                None => write!(f, " regular=no")?,
            }
        }
        writeln!(f)?;
        for a in &self.assertions {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}
