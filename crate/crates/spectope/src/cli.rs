//! Command-line surface. Each command returns its stdout text and a verdict
//! so tests can drive it without a process.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use spectope_core::builders::{self, Route, Variant};
use spectope_core::spectra::{self, QnWitness};
use spectope_core::{bounds, enumerator, EmbeddedGraph};

use crate::io::{self, Emit};
use crate::{acceptance, data};

#[derive(Parser, Debug)]
#[command(name = "spectope", version, about = "Polytopes with a vertex of every degree 3..=n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of lower bounds and minimal orders.
    Bounds {
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
    /// Build one of the named graphs.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Check a graph for a property; exit 1 if it fails.
    Verify {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Dual graph of a polytope.
    Dual {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Every polytope up to an order, as graph6 lines.
    Enumerate {
        #[arg(long, default_value_t = enumerator::DEFAULT_CAP)]
        max_order: usize,
        /// `spectrum:N` keeps graphs with every degree 3..=N.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Write the frozen catalog and gadget templates as JSON data files.
    Export {
        #[arg(long)]
        dir: PathBuf,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// `r_n`, minimal order with every degree 3..=n.
    Rn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "stacked")]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        /// Also write the construction trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// `s_n`: `r_n` plus three vertices of degree n−1.
    Sn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        /// Also write an extended witness here.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Grow a seed with a triangle system by `steps` rounds.
    Tn {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "alg2")]
        variant: VariantArg,
        /// Witness for the seed; searched for when absent.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        /// Also write the final witness here.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Stacked,
    Gadget,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Stacked => Route::Stacked,
            RouteArg::Gadget => Route::Gadget,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Alg2,
    Lemma7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Pn,
    Qn,
    Rn,
    Faces,
}

/// What a command printed and whether its check passed.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub pass: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, pass: true }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn read_graph(path: &Path) -> anyhow::Result<EmbeddedGraph> {
    io::read_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_witness(path: &Path) -> anyhow::Result<QnWitness> {
    io::witness_from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn bounds_table(n_max: u64) -> anyhow::Result<String> {
    if n_max < 3 {
        bail!("--n-max must be at least 3");
    }
    let mut s = format!("{:>6} {:>10} {:>10} {:>10}\n", "n", "bound6", "bound4", "p_of");
    for n in 3..=n_max {
        let b4 = bounds::bound4(n).map_or_else(|_| String::from("-"), |b| b.to_string());
        s.push_str(&format!("{:>6} {:>10} {:>10} {:>10}\n", n, bounds::bound6(n)?, b4, bounds::p_of(n)?));
    }
    Ok(s)
}

/// `construct rn`: the graph and its trace.
pub fn construct_r(n: usize, route: Route) -> anyhow::Result<(EmbeddedGraph, spectope_core::ConstructionTrace)> {
    Ok(builders::build_r_route(n, route)?)
}

fn construct_t(
    seed: &EmbeddedGraph,
    l: usize,
    m: usize,
    steps: usize,
    variant: VariantArg,
    witness: Option<QnWitness>,
) -> anyhow::Result<(EmbeddedGraph, QnWitness)> {
    let variant = match variant {
        VariantArg::Alg2 => Variant::alg2(m)?,
        VariantArg::Lemma7 => {
            if m != 2 {
                bail!("the lemma7 variant needs --m 2");
            }
            Variant::Lemma7
        }
    };
    let w = match witness {
        // An extended witness, as `construct sn` writes it, carries one extra leading face.
        Some(w) if w.faces.len() == l.saturating_sub(3) / 2 + 1 => w.without_first(),
        Some(w) => w,
        None => spectra::find_q_witness(seed, l)
            .or_else(|| spectra::find_r_witness(seed, l, false).map(|w| w.without_first()))
            .context("the seed has no witness for --l")?,
    };
    let out = builders::extend_q(seed, &w, l, &variant, steps)?;
    Ok(match out.last() {
        Some(s) => (s.graph.clone(), s.witness.clone()),
        None => (seed.clone(), w),
    })
}

pub fn verify(g: &EmbeddedGraph, property: PropertyArg, n: usize, witness: Option<&QnWitness>) -> anyhow::Result<Outcome> {
    let report = match property {
        PropertyArg::Pn => spectra::check_p(g, n),
        PropertyArg::Qn => spectra::check_q(g, n, witness),
        PropertyArg::Rn => spectra::check_r(g, n, witness),
        PropertyArg::Faces => spectra::check_face_spectrum(g, n)?,
    };
    Ok(Outcome {
        stdout: io::verdict_json(&report),
        pass: report.pass,
    })
}

fn spectrum_filter(f: &str) -> anyhow::Result<usize> {
    let n = f
        .strip_prefix("spectrum:")
        .context("filter must look like spectrum:N")?;
    n.parse().context("spectrum:N needs an integer N")
}

pub fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Bounds { n_max } => Ok(Outcome::ok(bounds_table(n_max)?)),
        Command::Construct { what } => match what {
            Construct::Rn { n, route, emit, trace } => {
                let (g, t) = construct_r(n, route.into())?;
                if let Some(p) = trace {
                    write(&p, &io::trace_json(&t))?;
                }
                Ok(Outcome::ok(io::emit(&g, emit)))
            }
            Construct::Sn { n, emit, witness_out } => {
                let g = builders::build_s(n)?;
                if let Some(p) = witness_out {
                    let w = spectra::find_r_witness(&g, n, false).context("no extended witness found")?;
                    write(&p, &io::witness_to_json(&w))?;
                }
                Ok(Outcome::ok(io::emit(&g, emit)))
            }
            Construct::Tn {
                seed,
                l,
                m,
                steps,
                variant,
                witness,
                emit,
                witness_out,
            } => {
                let g = read_graph(&seed)?;
                let w = witness.as_deref().map(read_witness).transpose()?;
                let (g, w) = construct_t(&g, l, m, steps, variant, w)?;
                if let Some(p) = witness_out {
                    write(&p, &io::witness_to_json(&w))?;
                }
                Ok(Outcome::ok(io::emit(&g, emit)))
            }
        },
        Command::Verify {
            property,
            n,
            input,
            witness,
        } => {
            let g = read_graph(&input)?;
            let w = witness.as_deref().map(read_witness).transpose()?;
            verify(&g, property, n, w.as_ref())
        }
        Command::Dual { input, emit } => {
            let g = read_graph(&input)?;
            Ok(Outcome::ok(io::emit(&g.dualize()?, emit)))
        }
        Command::Enumerate { max_order, filter } => {
            let n = filter.as_deref().map(spectrum_filter).transpose()?;
            let mut s = String::new();
            for g in enumerator::enumerate_polytopes(max_order)? {
                if n.is_none_or(|n| spectra::has_degree_spectrum(&g, n)) {
                    s.push_str(&io::to_graph6(&g));
                    s.push('\n');
                }
            }
            Ok(Outcome::ok(s))
        }
        Command::Export { dir } => {
            std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let mut s = String::new();
            for (name, text) in data::export()? {
                write(&dir.join(name), &text)?;
                s.push_str(&format!("wrote {}\n", dir.join(name).display()));
            }
            Ok(Outcome::ok(s))
        }
        Command::Selftest => {
            let results = acceptance::run_all();
            let mut s = String::new();
            for r in &results {
                s.push_str(&r.line());
                s.push('\n');
            }
            Ok(Outcome {
                stdout: s,
                pass: results.iter().all(|r| r.pass),
            })
        }
    }
}
