//! The `iyang` command line.

use crate::arith::Poly;
use crate::operators::{coset_constant, hhat_matrix_det, Mutation, OpContext, OpSymbol};
use crate::orbit::{
    compose_max, compose_set, enum_weights, enumerate_xi, oracle_compose_set, OrbitMatrix, ThetaElementary, WeightVec,
};
use crate::rep::ModuleElem;
use crate::verify::{verify_all, SuiteOptions};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "iyang", version, about = "Exact checks for the AIII_{2n} twisted Yangian representation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MutationArg {
    None,
    DropSqrtMinusOne,
    FlipQuarterInB,
    FlipHPrefactor,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::None => Mutation::None,
            MutationArg::DropSqrtMinusOne => Mutation::DropSqrtMinusOne,
            MutationArg::FlipQuarterInB => Mutation::FlipQuarterInB,
            MutationArg::FlipHPrefactor => Mutation::FlipHPrefactor,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every relation instance on all basis elements up to `--deg`.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 3)]
        rmax: usize,
        #[arg(long, default_value_t = 3)]
        deg: u32,
        /// Largest Serre mode `k1, k2, r` (defaults to `min(2, rmax)`).
        #[arg(long)]
        serre_max: Option<usize>,
        /// Truncation order of the series checks (defaults to `rmax + 2`).
        #[arg(long)]
        series_k: Option<usize>,
        #[arg(long, value_enum, default_value_t = MutationArg::None)]
        mutation: MutationArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the weights `Λ_{c,d}`.
    Weights {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// List the θ-symmetric orbit matrices `Ξ_d`, in matrix file format.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Print `M(A, B)` and `A∘B` for an elementary `A`.
    Compose {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
    },
    /// Compose orbits by counting flags over `F_q` and compare with `M(A, B)`.
    Oracle {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
        #[arg(long, default_value_t = 3)]
        q: u8,
    },
    /// Apply one operator to `poly` in `component`.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        component: String,
        #[arg(long)]
        poly: String,
    },
    /// A quick end-to-end smoke check.
    Selftest,
}

/// Runs the CLI on `argv` (including the program name); returns the exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_matrix(path: &Path) -> Result<OrbitMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.parse().map_err(|e| format!("{}: {e}", path.display()))
}

fn print_matrices(ms: &[OrbitMatrix]) {
    for m in ms {
        println!("{m}");
    }
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Verify { n, d, rmax, deg, serre_max, series_k, mutation, json } => {
            if n == 0 || d == 0 {
                return Err("n and d must be positive".into());
            }
            let mut opts = SuiteOptions::new(n, d, rmax, deg);
            if let Some(s) = serre_max {
                opts.serre_max = s;
            }
            if let Some(k) = series_k {
                opts.series_k = k;
            }
            opts.mutation = mutation.into();
            let report = verify_all(&opts).map_err(|e| e.to_string())?;
            for r in report.failures() {
                let w = r.witness.as_ref().expect("failure has a witness");
                println!("FAIL {} on [{}] {}: {} != {}", r.id, w.component, w.element, w.lhs, w.rhs);
            }
            println!("{} passed, {} failed", report.summary.pass, report.summary.fail);
            if let Some(path) = json {
                std::fs::write(&path, report.to_json() + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(if report.all_passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Weights { n, d } => {
            for v in enum_weights(n, d) {
                println!("{v}");
            }
            Ok(EXIT_PASS)
        }
        Command::Orbits { n, d } => {
            print_matrices(&enumerate_xi(n, d));
            Ok(EXIT_PASS)
        }
        Command::Compose { a, b } => {
            let a = ThetaElementary::recognize(&read_matrix(&a)?).map_err(|e| e.to_string())?;
            let b = read_matrix(&b)?;
            let set = compose_set(&a, &b).map_err(|e| e.to_string())?;
            let max = compose_max(&a, &b).map_err(|e| e.to_string())?;
            println!("M(A,B): {} matrices", set.len());
            print_matrices(&set);
            println!("A∘B:");
            print!("{max}");
            Ok(EXIT_PASS)
        }
        Command::Oracle { a, b, q } => {
            let am = read_matrix(&a)?;
            let bm = read_matrix(&b)?;
            let comb = compose_set(&ThetaElementary::recognize(&am).map_err(|e| e.to_string())?, &bm)
                .map_err(|e| e.to_string())?;
            let found = oracle_compose_set(&am, &bm, q).map_err(|e| e.to_string())?;
            println!("oracle over F_{q}: {} matrices", found.len());
            print_matrices(&found);
            let subset = found.iter().all(|m| comb.contains(m));
            println!("subset of M(A,B): {subset}");
            println!("equal to M(A,B): {}", found == comb);
            Ok(if subset { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Apply { op, component, poly } => {
            let op: OpSymbol = op.parse().map_err(|e: crate::operators::OperatorError| e.to_string())?;
            let v: WeightVec = component.parse().map_err(|e: crate::orbit::OrbitError| e.to_string())?;
            let f: Poly = poly.parse().map_err(|e: crate::arith::ArithError| e.to_string())?;
            let ctx = OpContext::new(v.n(), v.d());
            let e = ModuleElem::new(v, f).map_err(|e| e.to_string())?.to_pelem();
            let out = ctx.apply(&op, &e).map_err(|e| e.to_string())?;
            println!("{out}");
            Ok(EXIT_PASS)
        }
        Command::Selftest => Ok(selftest()),
    }
}

fn selftest() -> i32 {
    let mut ok = true;
    let mut line = |name: &str, pass: bool| {
        println!("{} {name}", if pass { "PASS" } else { "FAIL" });
        ok &= pass;
    };
    line("weights n=1 d=2", enum_weights(1, 2).len() == 3);
    line("constant at a=2", coset_constant(2, 3, 0).map(|c| c == crate::arith::GaussRat::from(3)).unwrap_or(false));
    line("determinant n=2", hhat_matrix_det(2) == 5);
    let report = verify_all(&SuiteOptions::new(1, 1, 1, 1));
    line("suite n=1 d=1 rmax=1 deg=1", report.map(|r| r.all_passed()).unwrap_or(false));
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
