//! Command-line front end for equivariant KL and Z-polynomials.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use equikl::cache;
use equikl::corpus::corpus;
use equikl::gamma::{is_gamma_positive, GammaVerdict};
use equikl::rep::{render_int_poly, GradedRepJson};
use equikl::verify::{self, Family, Suite, SurveyGroup, CORPUS_MAX_N};
use equikl::{Engine, EquivariantMatroid, Error, GradedVirtualRep, Result};

#[derive(Parser)]
#[command(name = "equikl", version, about = "Equivariant Kazhdan-Lusztig and Z-polynomials of matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Target {
    /// uniform:k,n | cycle:n | glued:a,b | lambda:r,k,h,n | pi:r,k,h,n | boolean:n | path to a matroid JSON file
    #[arg(long)]
    matroid: String,
    /// Young group blocks such as "{1..4}|{5}|{6..10}"; unlisted elements are fixed
    #[arg(long)]
    blocks: Option<String>,
}

impl Target {
    fn build(&self) -> Result<EquivariantMatroid> {
        let m = input::parse_matroid(&self.matroid)?;
        let w = input::parse_blocks(self.blocks.as_deref(), m.ground())?;
        EquivariantMatroid::new(m, w)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the equivariant KL polynomial P
    Kl {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
    },
    /// Print the equivariant Z-polynomial
    Z {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
    },
    /// Γ-expansion of Z (or of a graded representation read from JSON) and its positivity
    Gamma {
        #[arg(long, required_unless_present = "input")]
        matroid: Option<String>,
        #[arg(long)]
        blocks: Option<String>,
        /// Graded representation JSON file to expand instead of Z
        #[arg(long, conflicts_with = "matroid")]
        input: Option<PathBuf>,
        /// Palindromic degree of the input (default: its top degree)
        #[arg(long, requires = "input")]
        degree: Option<usize>,
    },
    /// P and Z over the stabilizer of an element via the deletion formula, cross-checked against the recursion
    Delete {
        #[arg(long, required_unless_present = "corpus")]
        matroid: Option<String>,
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, required_unless_present = "corpus")]
        element: Option<u32>,
        /// Check every non-coloop element of every bundled corpus matroid instead
        #[arg(long, conflicts_with_all = ["matroid", "element"])]
        corpus: bool,
        #[arg(long)]
        json: bool,
    },
    /// Integer P and Z under the trivial group
    Nonequivariant {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        json: bool,
    },
    /// Γ-positivity of Z across a family of matroids
    SurveyGamma {
        /// corank1 (U_{n-1,n}) or boolean (U_{n,n})
        #[arg(long, default_value = "corank1")]
        family: String,
        /// S2 (swapping 1 and 2), Sn or trivial
        #[arg(long, default_value = "S2")]
        group: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Run a verification suite: "paper" (reference values and closed forms) or "properties"
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn print_graded(p: &GradedVirtualRep, json: bool) -> Result<()> {
    if json {
        let text = serde_json::to_string_pretty(&p.to_json()).map_err(|e| Error::Internal(e.to_string()))?;
        println!("{text}");
    } else {
        for line in p.render_lines() {
            println!("{line}");
        }
    }
    Ok(())
}

fn print_gamma(v: &GammaVerdict) {
    for (j, g) in v.gammas.iter().enumerate() {
        println!("Γ_{j} = {g}");
    }
    println!("{}", verdict_line(v));
}

fn verdict_line(v: &GammaVerdict) -> String {
    match &v.witness {
        None => "Gamma-positive".to_string(),
        Some((j, g)) => format!("NOT Gamma-positive; witness Γ_{j} = {g}"),
    }
}

fn delete_corpus(engine: &Engine) -> Result<bool> {
    let mut cases = 0;
    let mut mismatches = 0;
    for entry in corpus(CORPUS_MAX_N)? {
        for em in entry.actions() {
            for &i in em.matroid().ground() {
                if em.matroid().coloops().contains(&i) {
                    continue;
                }
                let d = engine.deletion_formula(&em, i)?;
                let (p, z) = engine.kl_z(&em.stabilizer_of(i)?)?;
                cases += 1;
                if d.p != p || d.z != z {
                    mismatches += 1;
                    println!("MISMATCH {} under {} at {i}", entry.name, em.group());
                }
            }
        }
    }
    if mismatches == 0 {
        println!("MATCH ({cases} cases)");
    } else {
        println!("MISMATCH ({mismatches} of {cases} cases)");
    }
    Ok(mismatches == 0)
}

/// Runs the command. `Ok(false)` means a cross-check or suite failed.
fn run(command: Command, engine: &Engine) -> Result<bool> {
    match command {
        Command::Kl { target, json } => print_graded(&engine.kl(&target.build()?)?, json)?,
        Command::Z { target, json } => print_graded(&engine.z(&target.build()?)?, json)?,
        Command::Gamma { matroid, blocks, input, degree } => {
            let (f, d) = match (matroid, input) {
                (Some(matroid), _) => {
                    let em = Target { matroid, blocks }.build()?;
                    let d = em.matroid().rank();
                    (engine.z(&em)?, d)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)?;
                    let json: GradedRepJson =
                        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    let f = GradedVirtualRep::from_json(json)?;
                    let d = degree.unwrap_or_else(|| f.degree().unwrap_or(0));
                    (f, d)
                }
                (None, None) => return Err(Error::Invalid("need --matroid or --input".into())),
            };
            print_gamma(&is_gamma_positive(&f, d)?);
        }
        Command::Delete { corpus: true, .. } => return delete_corpus(engine),
        Command::Delete { matroid, blocks, element, json, .. } => {
            let (Some(matroid), Some(i)) = (matroid, element) else {
                return Err(Error::Invalid("need --matroid and --element".into()));
            };
            let em = Target { matroid, blocks }.build()?;
            let d = engine.deletion_formula(&em, i)?;
            let (p, z) = engine.kl_z(&em.stabilizer_of(i)?)?;
            if json {
                let out = serde_json::json!({ "p": d.p.to_json(), "z": d.z.to_json(), "match": d.p == p && d.z == z });
                println!("{}", serde_json::to_string_pretty(&out).map_err(|e| Error::Internal(e.to_string()))?);
            } else {
                println!("P:");
                print_graded(&d.p, false)?;
                println!("Z:");
                print_graded(&d.z, false)?;
                println!("{}", if d.p == p && d.z == z { "MATCH" } else { "MISMATCH" });
            }
            return Ok(d.p == p && d.z == z);
        }
        Command::Nonequivariant { matroid, json } => {
            let (p, z) = engine.nonequivariant(&input::parse_matroid(&matroid)?)?;
            if json {
                println!("{}", serde_json::json!({ "p": p, "z": z }));
            } else {
                println!("P: {}", render_int_poly(&p));
                println!("Z: {}", render_int_poly(&z));
            }
        }
        Command::SurveyGamma { family, group, max_n } => {
            let family: Family = family.parse()?;
            let group: SurveyGroup = group.parse()?;
            for row in verify::survey_gamma(family, group, max_n)? {
                println!("n = {}: {}", row.n, verdict_line(&row.verdict));
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let checks = verify::run_suite(suite)?;
            for c in &checks {
                println!("{c}");
            }
            return Ok(checks.iter().all(|c| c.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let engine = Engine::global();
    let cache_dir = cache::env_dir();
    if let Some(dir) = &cache_dir {
        if let Err(e) = cache::load(engine, dir) {
            eprintln!("warning: ignoring cache in {}: {e}", dir.display());
        }
    }
    let outcome = run(cli.command, engine);
    if let Some(dir) = &cache_dir {
        if let Err(e) = cache::save(engine, dir) {
            eprintln!("warning: could not save cache to {}: {e}", dir.display());
        }
    }
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
