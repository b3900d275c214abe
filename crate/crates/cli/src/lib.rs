//! Command-line front end: parses a session file, runs one command and
//! prints a JSON (or text) report.

pub mod commands;
pub mod report;
pub mod session;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

pub use commands::{run, Command, Options};
pub use report::{Report, Status};
pub use session::{parse_session, Session, SessionError};

#[derive(Parser, Debug)]
#[command(name = "locdual", version, about = "Certificates for local duality on polynomial modules")]
pub struct Cli {
    /// Session file; `-` reads standard input.
    #[arg(short, long, global = true, default_value = "-")]
    pub file: String,
    /// Seed for the complete-intersection search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Complete intersection to use as the level: a declared ideal or a
    /// comma-separated list of polynomials.
    #[arg(long = "fine-ci", global = true)]
    pub fine_ci: Option<String>,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Args, Debug)]
pub struct ModP {
    /// Name of a declared ideal or module.
    pub module: String,
    /// Codimension level.
    pub p: usize,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Free resolution of the module.
    Resolve {
        module: String,
        /// Minimize (graded input only).
        #[arg(long)]
        min: bool,
    },
    /// Presentation of Ext^k(M, O).
    Ext { module: String, k: usize },
    /// Equidimensional hull of the relations in codimension p.
    Hull(ModP),
    /// Pairing matrix, or the pairing values of one element.
    Pair {
        #[command(flatten)]
        target: ModP,
        /// Element of the free cover, `[p1, ..., pr]` or a polynomial.
        #[arg(long)]
        g: Option<String>,
    },
    /// Left kernel of the pairing against the hull.
    Kernel(ModP),
    /// Injectivity of Ext^p into the dual pairing.
    Inject(ModP),
    /// Serre's condition S_k for a module of pure codimension p.
    S2 {
        #[command(flatten)]
        target: ModP,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Purity of codimension p.
    Purity(ModP),
    /// The Roos map into the double Ext dual.
    Roos(ModP),
    /// Transformation law for f = A g.
    Transform { ideal: String, matrix: String },
    /// Every certificate for one input.
    Check(ModP),
}

impl Cmd {
    pub fn to_command(&self) -> Command {
        let mp = |t: &ModP| (t.module.clone(), t.p);
        match self {
            Cmd::Resolve { module, min } => Command::Resolve { module: module.clone(), min: *min },
            Cmd::Ext { module, k } => Command::Ext { module: module.clone(), k: *k },
            Cmd::Hull(t) => {
                let (module, p) = mp(t);
                Command::Hull { module, p }
            }
            Cmd::Pair { target, g } => {
                let (module, p) = mp(target);
                Command::Pair { module, p, g: g.clone() }
            }
            Cmd::Kernel(t) => {
                let (module, p) = mp(t);
                Command::Kernel { module, p }
            }
            Cmd::Inject(t) => {
                let (module, p) = mp(t);
                Command::Inject { module, p }
            }
            Cmd::S2 { target, k } => {
                let (module, p) = mp(target);
                Command::S2 { module, p, k: *k }
            }
            Cmd::Purity(t) => {
                let (module, p) = mp(t);
                Command::Purity { module, p }
            }
            Cmd::Roos(t) => {
                let (module, p) = mp(t);
                Command::Roos { module, p }
            }
            Cmd::Transform { ideal, matrix } => Command::Transform { ideal: ideal.clone(), matrix: matrix.clone() },
            Cmd::Check(t) => {
                let (module, p) = mp(t);
                Command::Check { module, p }
            }
        }
    }
}

/// Parses the session text and runs the command.
pub fn execute(cli: &Cli, source: &str) -> Report {
    let command = cli.command.to_command();
    let opts = Options {
        seed: cli.seed,
        fine_ci: cli.fine_ci.clone(),
    };
    match parse_session(source) {
        Ok(session) => run(&command, &session, &opts),
        Err(e) => commands::input_error_report(command.name(), cli.seed, &e),
    }
}

/// Entry point with injectable streams; returns the process exit code.
pub fn main_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::InputError as i32 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut source = String::new();
    let read = if cli.file == "-" {
        stdin.read_to_string(&mut source).map(|_| ())
    } else {
        std::fs::read_to_string(&cli.file).map(|s| source = s)
    };
    if let Err(e) = read {
        let _ = writeln!(stderr, "locdual: cannot read {}: {e}", cli.file);
        return Status::InputError as i32;
    }
    let report = execute(&cli, &source);
    let body = if cli.text { report.to_text() } else { report.to_json() + "\n" };
    let _ = stdout.write_all(body.as_bytes());
    report.status() as i32
}
