use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context as _, Result};
use clap::{Parser, Subcommand};
use latmod::verify::{self, render_table, render_tsv, Context, Outcome};
use latmod::{
    classify_m, emit_dot, emit_latspec, gen_frame, gen_zn, parse_latspec, search, Elem, Family,
    FrameShape, LatSpecDocument, LatSpecError, LoadedInstance, SearchGoal, Side,
};

#[derive(Parser)]
#[command(
    name = "latmod",
    version,
    about = "Finite lattice modules and δ-primary elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the axioms of a LATSPEC instance
    Check { file: PathBuf },
    /// Classify elements of L or M
    Classify {
        file: PathBuf,
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value = "m")]
        side: Side,
    },
    /// Check registry theorems on an instance
    Verify {
        file: PathBuf,
        #[arg(long)]
        theorem: Option<String>,
        /// Tab-separated output instead of a table
        #[arg(long)]
        tsv: bool,
    },
    /// Write a generated instance to stdout
    #[command(subcommand)]
    Gen(Gen),
    /// Search a generated family for witnesses
    Search {
        #[arg(long)]
        goal: SearchGoal,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max: u64,
    },
    /// Hasse diagram in DOT format
    Dot {
        file: PathBuf,
        #[arg(long, default_value = "l")]
        side: Side,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Ideals of Z/nZ
    Zn {
        #[arg(long)]
        n: u64,
    },
    /// Boolean frame `boolean(k)` or chain `chain(k)` with meet as product
    Frame {
        #[arg(long)]
        shape: FrameShape,
    },
}

/// An error in how the tool was invoked rather than in the input data.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Check { file } => check(&file),
        Command::Classify {
            file,
            element,
            side,
        } => {
            let loaded = load(&file)?;
            print!("{}", classify(&loaded, element.as_deref(), side)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, theorem, tsv } => {
            let loaded = load(&file)?;
            let cx =
                Context::with_expansions(&loaded.bundle, loaded.expansions_m, loaded.expansions_l);
            let reports = match theorem {
                Some(id) => vec![verify::verify(&cx, &id).map_err(|e| Usage(e.to_string()))?],
                None => verify::verify_all(&cx),
            };
            print!(
                "{}",
                if tsv {
                    render_tsv(&reports)
                } else {
                    render_table(&reports)
                }
            );
            let failed = reports.iter().any(|r| r.outcome == Outcome::Fail);
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Gen(g) => {
            let bundle = match g {
                Gen::Zn { n } => gen_zn(n),
                Gen::Frame { shape } => gen_frame(shape),
            }
            .map_err(|e| Usage(e.to_string()))?;
            print!("{}", emit_latspec(&LatSpecDocument::from_instance(&bundle)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { goal, family, max } => {
            let hits = search(&goal, family, max).map_err(|e| Usage(e.to_string()))?;
            for h in hits {
                println!("{}\t{}", h.instance, h.witness);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { file, side } => {
            let loaded = load(&file)?;
            print!("{}", emit_dot(&loaded.bundle, side));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_doc(path: &Path) -> Result<LatSpecDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_latspec(&text).with_context(|| format!("parsing {}", path.display()))
}

fn instance_name(path: &Path) -> String {
    path.file_stem().map_or_else(
        || "instance".to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn load(path: &Path) -> Result<LoadedInstance> {
    let doc = read_doc(path)?;
    doc.to_instance(&instance_name(path))
        .with_context(|| format!("building {}", path.display()))
}

fn check(path: &Path) -> Result<ExitCode> {
    let doc = read_doc(path)?;
    match doc.to_instance(&instance_name(path)) {
        Ok(loaded) => {
            let m = loaded.bundle.module();
            let f = loaded.bundle.flags();
            println!(
                "ok: |L| = {}, |M| = {}",
                m.scalars().len(),
                m.carrier().len()
            );
            println!("faithful: {}", f.faithful);
            println!("multiplication module: {}", f.multiplication_module);
            println!("PG lattice: {}", f.pg_lattice);
            println!("PG module: {}", f.pg_module);
            println!(
                "expansions: {} on M, {} on L",
                loaded.expansions_m.len(),
                loaded.expansions_l.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(LatSpecError::Instance(err)) => {
            println!("{err}");
            Ok(ExitCode::from(1))
        }
        Err(err) => Err(anyhow!(err)),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(loaded: &LoadedInstance, element: Option<&str>, side: Side) -> Result<String> {
    let m = loaded.bundle.module();
    let s = m.scalars();
    let lat = match side {
        Side::Lattice => s.lattice(),
        Side::Module => m.carrier(),
    };
    let targets: Vec<Elem> = match element {
        Some(name) => vec![lat
            .elem(name)
            .ok_or_else(|| Usage(format!("no element `{name}` in the {side}")))?],
        None => lat.elements().collect(),
    };
    let l = s.lattice();
    let mut out = String::new();
    match side {
        Side::Module => {
            out.push_str(
                "element\tproper\tmaximal\tprime\tprimary\tsemiprime\tsemiprimary\tradical\tmeet-prime\t2-absorbing\t2-absorbing-primary\t(N:I_M)\tsqrt(N:I_M)\n",
            );
            for n in targets {
                let c = classify_m(m, n);
                let flags = [
                    c.proper,
                    c.maximal,
                    c.prime,
                    c.primary,
                    c.semiprime,
                    c.semiprimary,
                    c.radical_element,
                    c.meet_prime,
                    c.two_absorbing,
                    c.two_absorbing_primary,
                ];
                let cols: Vec<&str> = flags.iter().map(|&b| yes(b)).collect();
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    lat.name(n),
                    cols.join("\t"),
                    l.name(c.colon_im),
                    l.name(c.sqrt_colon_im)
                ));
            }
        }
        Side::Lattice => {
            out.push_str("element\tproper\tmaximal\tprime\tprimary\t2-absorbing\t2-absorbing-primary\tprincipal\tsqrt\n");
            for a in targets {
                let flags = [
                    s.is_proper(a),
                    s.is_maximal(a),
                    s.is_prime(a),
                    s.is_primary(a),
                    s.is_two_absorbing(a),
                    s.is_two_absorbing_primary(a),
                    s.is_principal(a),
                ];
                let cols: Vec<&str> = flags.iter().map(|&b| yes(b)).collect();
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    l.name(a),
                    cols.join("\t"),
                    l.name(s.radical(a))
                ));
            }
        }
    }
    Ok(out)
}
