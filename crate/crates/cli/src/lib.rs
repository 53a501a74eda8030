//! Batch runner for the verification suites.

pub mod spec;
pub mod suites;

use cogroupoid::Certificate;
use serde::Serialize;
use spec::RunSpec;
use std::path::{Path, PathBuf};

pub const BUNDLE_FORMAT: &str = "cogroupoid-bundle/1";
pub const DEFAULT_DEGREE: u32 = 2;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILED: i32 = 1;
    /// Reserved for command-line usage errors.
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const SINGULAR: i32 = 4;
    pub const DEGREE_TOO_LARGE: i32 = 5;
    pub const OTHER: i32 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("degree {0} is too large (at most {1})")]
    DegreeTooLarge(u32, u32),
    #[error(transparent)]
    Core(cogroupoid::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<cogroupoid::Error> for CliError {
    fn from(e: cogroupoid::Error) -> Self {
        use cogroupoid::Error as E;
        match e {
            E::Parse(p) => CliError::Parse(p.to_string()),
            E::SingularMatrix(s) => CliError::Singular(s),
            E::DegreeTooLarge { degree, words, cap } => CliError::Core(E::DegreeTooLarge { degree, words, cap }),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Singular(_) => exit::SINGULAR,
            CliError::DegreeTooLarge(..) | CliError::Core(cogroupoid::Error::DegreeTooLarge { .. }) => exit::DEGREE_TOO_LARGE,
            CliError::Core(_) | CliError::Io(_) => exit::OTHER,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Presentation {
    pub name: String,
    pub text: String,
}

/// Everything written to `certificates.json`.
#[derive(Debug, Serialize)]
pub struct Bundle {
    pub format: String,
    pub suite: String,
    pub degree: u32,
    pub seed: u64,
    pub passed: bool,
    /// The run specification as given.
    pub spec: String,
    pub presentations: Vec<Presentation>,
    pub certificates: Vec<Certificate>,
}

impl Bundle {
    pub fn summary(&self) -> String {
        let mut s = format!("suite {} degree {} seed {}\n", self.suite, self.degree, self.seed);
        for c in &self.certificates {
            s.push_str(&c.summary_line());
            s.push('\n');
            for f in c.failures().take(5) {
                s.push_str(&format!("    failed: {} {}\n", f.label, f.residue.as_deref().unwrap_or("")));
            }
        }
        let bad = self.certificates.iter().filter(|c| !c.passed).count();
        s.push_str(&format!("{}: {}/{} certificates pass\n", if self.passed { "PASS" } else { "FAIL" }, self.certificates.len() - bad, self.certificates.len()));
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            exit::OK
        } else {
            exit::FAILED
        }
    }
}

/// Parse `text`, apply overrides and run the suite.
pub fn run_suite(text: &str, degree: Option<u32>, seed: Option<u64>) -> Result<Bundle, CliError> {
    let spec = RunSpec::parse(text)?;
    let degree = degree.or(spec.degree).unwrap_or(DEFAULT_DEGREE);
    if degree == 0 {
        return Err(CliError::Parse("degree must be at least 1".into()));
    }
    let seed = seed.or(spec.seed).unwrap_or(0);
    let out = suites::run(&suites::Context { spec: &spec, degree, seed })?;
    Ok(Bundle {
        format: BUNDLE_FORMAT.to_string(),
        suite: spec.suite.clone(),
        degree,
        seed,
        passed: out.certificates.iter().all(|c| c.passed),
        spec: text.to_string(),
        presentations: out.presentations.into_iter().map(|(name, text)| Presentation { name, text }).collect(),
        certificates: out.certificates,
    })
}

/// Output directory: the flag, else the `out` key of the run file, else `report`.
pub fn out_dir(flag: Option<PathBuf>, text: &str) -> PathBuf {
    flag.or_else(|| RunSpec::parse(text).ok().and_then(|s| s.out)).unwrap_or_else(|| PathBuf::from("report"))
}

pub fn write_reports(b: &Bundle, dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    let json = serde_json::to_string_pretty(b).expect("bundle serializes");
    std::fs::write(dir.join("certificates.json"), json + "\n")?;
    std::fs::write(dir.join("summary.txt"), b.summary())?;
    Ok(())
}
