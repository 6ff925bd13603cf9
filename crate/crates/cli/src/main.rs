use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use surfwidth::decomposition::{self, Decomposition, TreeMode};
use surfwidth::report::{self, ReportOptions};
use surfwidth::spanning::TreeSearchOptions;
use surfwidth::widths::{self, WidthKind};
use surfwidth::{assignment, generators, io as formats, EmbeddedGraph, Error, Graph};

/// Embeddings on surfaces, their duals, and width bounds between them.
#[derive(Parser)]
#[command(name = "surfwidth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated embedding (`.emb`).
    Gen {
        /// tetrahedron, cube, octahedron, dodecahedron, icosahedron, prism, torus, klein,
        /// k6-projective, k7-torus, double-torus, torus-klein, triple-torus
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print surface data and the polyhedrality verdict.
    Check { input: PathBuf },
    /// Write the dual embedding.
    Dual {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the face-subdivision embedding.
    Fs {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write an edge-assignment (`tau <face> <edge>` lines).
    Assign {
        input: PathBuf,
        /// Start from a Hamiltonian path instead of a low-excess spanning tree.
        #[arg(long)]
        ham: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Write the dual decomposition with its apex set removed.
    DecomposeDual {
        input: PathBuf,
        #[arg(long)]
        ham: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Write the radial-union decomposition with its apex set removed.
    DecomposeFs {
        input: PathBuf,
        #[arg(long)]
        ham: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exact pathwidth; the witness path decomposition goes to `--output`.
    Pw(WidthArgs),
    /// Exact treewidth; the witness tree decomposition goes to `--output`.
    Tw(WidthArgs),
    /// Compose a decomposition of F over G with a decomposition of G.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a decomposition against a graph derived from an embedding.
    Verify {
        embedding: PathBuf,
        decomposition: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Graph)]
        target: Target,
    },
    /// Print the bound table.
    Report {
        input: PathBuf,
        /// Instance name shown in the table (defaults to the file stem).
        #[arg(long)]
        name: Option<String>,
        /// Skip the Hamiltonian-path rows.
        #[arg(long)]
        no_ham: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Node budget for the tree and Hamiltonian path searches.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
}

impl SearchArgs {
    fn options(&self) -> TreeSearchOptions {
        TreeSearchOptions {
            node_budget: self.budget,
        }
    }
}

#[derive(clap::Args)]
struct WidthArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Target::Graph)]
    of: Target,
    /// Vertex limit (default from SURFWIDTH_LIMIT, else 22).
    #[arg(long)]
    limit: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Graph,
    Dual,
    Fs,
    Radial,
}

enum Failure {
    Usage(String),
    Check(String),
    Exhausted(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExhausted(_) => Failure::Exhausted(e.to_string()),
            Error::NotFound(_) | Error::Invariant(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read_input(path: &Path) -> std::result::Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn read_emb(path: &Path) -> std::result::Result<EmbeddedGraph, Failure> {
    let text = read_input(path)?;
    formats::parse_emb(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_dec(path: &Path) -> std::result::Result<Decomposition, Failure> {
    let text = read_input(path)?;
    formats::parse_dec(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) if p != Path::new("-") => fs::write(p, text)?,
        _ => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn target_graph(g: &EmbeddedGraph, target: Target) -> Result<Graph, Error> {
    match target {
        Target::Graph => Ok(g.graph()),
        Target::Dual => Ok(g.dual()?.graph.graph()),
        Target::Fs => g.face_subdivision(),
        Target::Radial => g.radial_union(),
    }
}

fn mode(ham: bool) -> TreeMode {
    if ham {
        TreeMode::HamPath
    } else {
        TreeMode::Tree3
    }
}

fn width(args: &WidthArgs, kind: WidthKind) -> Outcome {
    let g = read_emb(&args.input)?;
    let target = target_graph(&g, args.of)?;
    let limit = args.limit.unwrap_or_else(widths::vertex_limit);
    let cert = match kind {
        WidthKind::Pathwidth => widths::pathwidth_exact_with_limit(&target, limit)?,
        WidthKind::Treewidth => widths::treewidth_exact_with_limit(&target, limit)?,
    };
    let dec = widths::decomposition_from_certificate(&cert, &target)?;
    println!("{}", cert.value);
    if let Some(out) = &args.output {
        emit(Some(out), &formats::write_dec(&dec))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen {
            name,
            params,
            output,
        } => {
            let g = generators::by_name(&name, &params)?;
            emit(output.as_deref(), &formats::write_emb(&g))
        }
        Command::Check { input } => {
            let g = read_emb(&input)?;
            let s = g.surface();
            println!("vertices {}", g.vertex_count());
            println!("edges {}", g.edge_count());
            println!("faces {}", g.face_count());
            println!("chi {}", s.chi);
            println!("orientable {}", s.orientable);
            println!("surface {}", s.name());
            match g.check_polyhedral().violation {
                None => {
                    println!("polyhedral yes");
                    Ok(())
                }
                Some(v) => {
                    println!("polyhedral no");
                    Err(Failure::Check(v.to_string()))
                }
            }
        }
        Command::Dual { input, output } => {
            let g = read_emb(&input)?;
            emit(output.as_deref(), &formats::write_emb(&g.dual()?.graph))
        }
        Command::Fs { input, output } => {
            let g = read_emb(&input)?;
            emit(
                output.as_deref(),
                &formats::write_emb(&g.face_subdivision_embedding()?),
            )
        }
        Command::Assign {
            input,
            ham,
            output,
            search,
        } => {
            let g = read_emb(&input)?;
            let dd = decomposition::dual_decomposition(&g, mode(ham), search.options())?;
            let c = &dd.construction;
            let residual = assignment::residual_graph(&g, &c.tau)?;
            let mut text = format!(
                "# mode {}\n# chi {}\n# tree edges {}\n# avoided edges {}\n# residual edges {}\n",
                dd.mode.name(),
                dd.surface.chi,
                dd.tree.edge_count(),
                c.avoided.edge_count(),
                residual.edge_count()
            );
            text.push_str(&formats::write_assignment(&c.tau));
            emit(output.as_deref(), &text)
        }
        Command::DecomposeDual {
            input,
            ham,
            output,
            search,
        } => {
            let g = read_emb(&input)?;
            let dd = decomposition::dual_decomposition(&g, mode(ham), search.options())?;
            emit(output.as_deref(), &formats::write_dec(&dd.reduced))
        }
        Command::DecomposeFs {
            input,
            ham,
            output,
            search,
        } => {
            let g = read_emb(&input)?;
            let fs = decomposition::fs_decomposition(&g, mode(ham), search.options())?;
            emit(output.as_deref(), &formats::write_dec(&fs.reduced))
        }
        Command::Pw(args) => width(&args, WidthKind::Pathwidth),
        Command::Tw(args) => width(&args, WidthKind::Treewidth),
        Command::Compose {
            first,
            second,
            output,
        } => {
            let a = read_dec(&first)?;
            let b = read_dec(&second)?;
            emit(
                output.as_deref(),
                &formats::write_dec(&decomposition::compose(&a, &b)?),
            )
        }
        Command::Verify {
            embedding,
            decomposition: dec,
            target,
        } => {
            let g = read_emb(&embedding)?;
            let d = read_dec(&dec)?;
            let t = target_graph(&g, target)?;
            match decomposition::verify(&d, &t).violation {
                None => {
                    println!("OK {} width {}", d.kind.name(), d.width().map_or(0, |w| w));
                    Ok(())
                }
                Some(v) => {
                    println!("FAIL {}", v.condition());
                    Err(Failure::Check(v.to_string()))
                }
            }
        }
        Command::Report {
            input,
            name,
            no_ham,
            limit,
            search,
        } => {
            let g = read_emb(&input)?;
            let name = name.unwrap_or_else(|| {
                input
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .filter(|s| *s != "-")
                    .unwrap_or("stdin")
                    .to_string()
            });
            let options = ReportOptions {
                limit: limit.unwrap_or_else(widths::vertex_limit),
                search: search.options(),
                hamiltonian: !no_ham,
            };
            let rows = report::build_report(&name, &g, &options)?;
            print!("{}", report::render(&rows));
            if report::all_ok(&rows) {
                Ok(())
            } else {
                Err(Failure::Check("some rows FAIL".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Exhausted(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
