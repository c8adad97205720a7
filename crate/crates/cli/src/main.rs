//! `braidlink` command-line front end.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidlink::braid::{family, FamilyKind};
use braidlink::closedforms::{sign_null_family, verify};
use braidlink::genskein::{
    block_identity_check, conway_skein_residual, det_relation_check, random_block_input, random_braid,
    relation_residual, seeded_rng, RelationKind, RelationSpec,
};
use braidlink::prohibitor::{curve_report, degree9_report, CurveQuery, SieveOptions};
use braidlink::seifert::invariants;
use braidlink::skeinpoly::{a_pm, a_pm_symbolic, det_closed_form, tilde_closed_form, tilde_reconciled, PmSign};
use braidlink::{BraidWord, Error, FamilyParams, SpliceDiagram};

#[derive(Parser)]
#[command(name = "braidlink", version, about = "Exact invariants of braid closures and iterated torus links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Seifert-matrix invariants of a braid closure.
    Invariants {
        #[arg(long)]
        strands: usize,
        /// Signed generator indices, e.g. "1,2,-1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Print a b or c family braid word.
    Family(FamilyArgs),
    /// Splice diagram evaluation.
    #[command(subcommand)]
    Splice(SpliceCmd),
    /// Skein-system polynomials.
    #[command(subcommand)]
    Skeinpoly(SkeinpolyCmd),
    /// Closed-form signature, nullity and determinant of a family braid.
    Closedform {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also run the Seifert-matrix computation.
        #[arg(long)]
        verify: bool,
    },
    /// Randomized skein-relation checks.
    #[command(subcommand)]
    Skein(SkeinCmd),
    /// Arithmetic prohibition of curve schemes.
    #[command(subcommand)]
    Prohibit(ProhibitCmd),
}

#[derive(Args)]
struct FamilyArgs {
    /// `b` or `c`.
    kind: FamilyKind,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long = "J")]
    j: usize,
    /// Comma-separated exponents; defaults to all ones.
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<u32>>,
}

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams> {
        let alpha = self.alpha.clone().unwrap_or_else(|| vec![1; self.j]);
        if alpha.len() != self.j {
            bail!("--alpha has {} entries but J = {}", alpha.len(), self.j);
        }
        Ok(FamilyParams::new(self.n, self.k, alpha)?)
    }
}

#[derive(Subcommand)]
enum SpliceCmd {
    /// Evaluate a splice diagram given as JSON.
    Eval {
        #[arg(long)]
        file: PathBuf,
        /// Print the multivariable potential as a factor list.
        #[arg(long)]
        multivariable: bool,
    },
}

#[derive(Subcommand)]
enum SkeinpolyCmd {
    /// `a_J^+` or `a_J^-` at a point, or its monomial expansion.
    A {
        #[arg(long = "J")]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        sign: PmSign,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<i64>>,
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    /// Crossing change, smoothing.
    Conway,
    /// Five powers of sigma_1 sigma_2.
    Delta3,
    /// Five powers of the square of the half twist on three strands.
    Delta3sq,
    /// Block-determinant identity on random Laurent matrices.
    Blocks,
}

#[derive(Subcommand)]
enum SkeinCmd {
    Verify {
        #[arg(long, value_enum)]
        relation: RelationArg,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long, default_value_t = 10)]
        maxlen: usize,
    },
}

#[derive(Subcommand)]
enum ProhibitCmd {
    /// Signature inequalities and Fiedler's rule for a curve with a deep nest.
    Curve {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        r: u32,
        /// Number of jumps; every admissible value is tried when omitted.
        #[arg(long = "J")]
        j: Option<u32>,
        /// Total number of ovals; must equal lambda-odd + lambda-even when given.
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long)]
        lambda_odd: u32,
        #[arg(long)]
        lambda_even: u32,
        #[arg(long)]
        lambda_plus: Option<u32>,
        #[arg(long)]
        lambda_minus: Option<u32>,
    },
    /// Complex-scheme sieve for `<J u alpha u 1<beta u 1<gamma>>>` in degree 9.
    Degree9 {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        beta: u32,
        #[arg(long)]
        gamma: u32,
        /// Require alpha + beta + gamma = 26.
        #[arg(long)]
        m_curve: bool,
        /// Assert |delta gamma| <= 1 whenever alpha > 0 and beta = 0.
        #[arg(long)]
        assume_gamma_balance: bool,
        /// Use the orientation relation with a positive right-hand side.
        #[arg(long)]
        positive_orientation_rhs: bool,
    },
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run_splice(file: &PathBuf, multivariable: bool) -> Result<Value> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let d: SpliceDiagram = serde_json::from_str(&text).context("parsing splice diagram")?;
    let nabla = || -> Result<_> { Ok(d.nabla_multivariable()?) };
    if multivariable {
        let f = nabla()?;
        return Ok(json!({ "nabla": f.to_string(), "factors": f }));
    }
    let (omega, method) = match d.omega_en() {
        Ok(o) => (o, "eisenbud-neumann"),
        Err(Error::EnInapplicable(_)) => (nabla()?.omega()?, "multivariable"),
        Err(e) => return Err(e.into()),
    };
    Ok(json!({ "omega": omega.to_string(), "det": omega.eval_at_i().to_string(), "method": method }))
}

fn run_skeinpoly(j: usize, sign: PmSign, x: Option<Vec<i64>>, symbolic: bool) -> Result<Value> {
    if symbolic {
        return Ok(json!({ "J": j, "sign": sign, "poly": a_pm_symbolic(j, sign)?.poly().to_string() }));
    }
    let x = x.context("--x is required unless --symbolic is given")?;
    if x.len() != j {
        bail!("--x has {} entries but J = {j}", x.len());
    }
    Ok(json!({ "J": j, "sign": sign, "x": x, "value": a_pm(sign, &x)?.to_string() }))
}

fn run_closedform(args: &FamilyArgs, check: bool) -> Result<Value> {
    let p = args.params()?;
    let (n, k, a) = (p.n, p.k, p.alphas.clone());
    let kind = args.kind;
    let mut out = json!({
        "closed_form": sign_null_family(kind, n, k, &a)?,
        "twisted_det": tilde_closed_form(kind, n, k, &a)?.to_string(),
        "twisted_det_reconciled": tilde_reconciled(kind, n, k, &a)?.to_string(),
        "det": det_closed_form(kind, n, k, &a)?.to_string(),
    });
    if check {
        out["verification"] = serde_json::to_value(verify(kind, n, k, &a)?)?;
    }
    Ok(out)
}

fn run_skein(relation: RelationArg, trials: usize, seed: u64, strands: usize, maxlen: usize) -> Result<(bool, Value)> {
    let mut rng = seeded_rng(seed);
    for trial in 0..trials {
        if let RelationArg::Blocks = relation {
            let input = random_block_input(&mut rng, trial % 4);
            let r = block_identity_check(&input);
            if !r.is_zero() {
                return Ok((false, json!({ "trial": trial, "residual": r.to_string() })));
            }
            continue;
        }
        let b: BraidWord = random_braid(&mut rng, strands, maxlen)?;
        let witness = |residual: String| json!({ "trial": trial, "strands": strands, "word": b.to_text(), "residual": residual });
        match relation {
            RelationArg::Conway => {
                for pos in 0..b.len() {
                    let r = conway_skein_residual(&b, pos)?;
                    if !r.is_zero() {
                        return Ok((false, witness(r.to_string())));
                    }
                }
            }
            RelationArg::Delta3 | RelationArg::Delta3sq => {
                let kind = match relation {
                    RelationArg::Delta3 => RelationKind::Delta3Order4,
                    _ => RelationKind::Delta3SqOrder4,
                };
                let r = relation_residual(&b, &RelationSpec::new(kind))?;
                let d = det_relation_check(&b, kind)?;
                if !r.is_zero() || !d.is_zero() {
                    return Ok((false, witness(r.to_string())));
                }
            }
            RelationArg::Blocks => unreachable!(),
        }
    }
    Ok((true, json!({ "trials": trials, "seed": seed, "residuals": "all zero" })))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Invariants { strands, word } => {
            let b = BraidWord::parse(strands, &word)?;
            let inv = invariants(&b);
            let mut v = serde_json::to_value(&inv)?;
            v["conway_text"] = json!(inv.conway.to_string());
            v["det"] = json!(inv.det.to_string());
            print(&v);
        }
        Command::Family(args) => {
            let b = family(args.kind, &args.params()?)?;
            println!("{}", b.to_text());
        }
        Command::Splice(SpliceCmd::Eval { file, multivariable }) => print(&run_splice(&file, multivariable)?),
        Command::Skeinpoly(SkeinpolyCmd::A { j, sign, x, symbolic }) => print(&run_skeinpoly(j, sign, x, symbolic)?),
        Command::Closedform { family, verify } => print(&run_closedform(&family, verify)?),
        Command::Skein(SkeinCmd::Verify { relation, trials, seed, strands, maxlen }) => {
            let (ok, v) = run_skein(relation, trials, seed, strands, maxlen)?;
            print(&v);
            return Ok(ok);
        }
        Command::Prohibit(ProhibitCmd::Curve { n, k, r, j, lambda, lambda_odd, lambda_even, lambda_plus, lambda_minus }) => {
            if let Some(l) = lambda {
                if l != lambda_odd + lambda_even {
                    bail!("--lambda {l} differs from lambda-odd + lambda-even = {}", lambda_odd + lambda_even);
                }
            }
            let q = CurveQuery { n, k, r, j, lambda_odd, lambda_even, lambda_plus, lambda_minus };
            print(&serde_json::to_value(curve_report(&q)?)?);
        }
        Command::Prohibit(ProhibitCmd::Degree9 { alpha, beta, gamma, m_curve, assume_gamma_balance, positive_orientation_rhs }) => {
            let opts = SieveOptions { gamma_balance: assume_gamma_balance, positive_orientation_rhs };
            let report = degree9_report(alpha, beta, gamma, m_curve, opts)?;
            let mut v = serde_json::to_value(&report)?;
            v["schemes_text"] = json!(report.schemes.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            print(&v);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
