use clap::Parser;
use cogroupoid_cli::{exit, out_dir, run_suite, spec, write_reports, CliError};
use std::path::PathBuf;

/// Run a verification suite and write certificates.json and summary.txt.
///
/// Exit codes: 0 all certificates pass, 1 some certificate fails, 2 usage
/// error, 3 parse error, 4 singular matrix, 5 degree too large, 6 other.
#[derive(Parser, Debug)]
#[command(name = "cogroupoid", version)]
struct Args {
    /// TOML run specification.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Truncation degree, overriding the run file.
    #[arg(long)]
    degree: Option<u32>,
    /// Random seed, overriding the run file.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Suite to run with its built-in spec, or to check against --spec.
    #[arg(long)]
    suite: Option<String>,
    /// Print the registered suites and exit.
    #[arg(long)]
    list_suites: bool,
}

fn load(args: &Args) -> Result<String, CliError> {
    match (&args.spec, &args.suite) {
        (Some(p), suite) => {
            let text = std::fs::read_to_string(p)?;
            if let Some(s) = suite {
                let parsed = spec::RunSpec::parse(&text)?;
                if &parsed.suite != s {
                    return Err(CliError::Parse(format!("spec is for suite `{}`, not `{}`", parsed.suite, s)));
                }
            }
            Ok(text)
        }
        (None, Some(s)) => spec::builtin(s).map(str::to_string).ok_or_else(|| CliError::Parse(format!("unknown suite `{}`", s))),
        (None, None) => Err(CliError::Parse("give --spec or --suite".into())),
    }
}

fn main() {
    let args = Args::parse();
    if args.list_suites {
        for (name, about) in spec::SUITES {
            println!("{:<12} {}", name, about);
        }
        std::process::exit(exit::OK);
    }
    let result = load(&args).and_then(|text| {
        let bundle = run_suite(&text, args.degree, args.seed)?;
        let dir = out_dir(args.out.clone(), &text);
        write_reports(&bundle, &dir)?;
        Ok(bundle)
    });
    match result {
        Ok(b) => {
            print!("{}", b.summary());
            std::process::exit(b.exit_code());
        }
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}
