//! Thin command-line front end over the library. All output is JSON (JSONL
//! for `survey`); rationals print as exact "p/q" strings. Domain errors go
//! to stderr as `{"error":{"code","message"}}` with a nonzero exit.

use std::fs::File;
use std::io::{self, BufReader, BufWriter};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use tetlab::error::{Error, Result};
use tetlab::geom::{LatticeTetrahedron, StandardTet};

#[derive(Parser)]
#[command(name = "tetlab", about = "Exact lattice-tetrahedron toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a lattice tetrahedron to standard form
    Normalize {
        /// Four vertices as "x,y,z;x,y,z;x,y,z;x,y,z"
        #[arg(long)]
        vertices: String,
    },
    /// Brute-force lattice point census of a general tetrahedron
    Census {
        #[arg(long)]
        vertices: String,
    },
    /// Interior point count, points, and barycentric coordinates
    Count {
        /// Standard parameters as "a,b,n"
        #[arg(long)]
        tet: String,
    },
    /// Classify a clean standard tetrahedron by interior point count
    Classify {
        #[arg(long)]
        tet: String,
    },
    /// Decide unimodular equivalence of two standard tetrahedra
    Equiv {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
    },
    /// Exact lattice width
    Width {
        #[arg(long)]
        tet: String,
        /// Include all minimal directions and their occupancy profiles
        #[arg(long)]
        directions: bool,
    },
    /// Enumerate ripe quadruples up to a bound on the largest entry
    Ripe {
        #[arg(long, default_value_t = 20)]
        max: i64,
    },
    /// Build the tetrahedron realizing given barycentric numerators
    ConstructBc {
        /// Numerators as "d1,d2,d3,d4"; the denominator is their sum
        #[arg(long)]
        d: String,
    },
    /// Sweep all clean standard tetrahedra up to n-max, emit a JSONL catalog
    Survey {
        #[arg(long = "n-max")]
        n_max: i64,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
        /// Also write a flat CSV projection
        #[arg(long)]
        csv: Option<String>,
        /// Skip width computation for records with n above this
        #[arg(long, default_value_t = 200)]
        width_max_n: i64,
    },
    /// Check bounds and conjecture status over a JSONL catalog
    Check {
        #[arg(long)]
        catalog: String,
    },
}

fn parse_tet(s: &str) -> Result<StandardTet> {
    s.parse()
}

fn parse_quad(s: &str) -> Result<[i64; 4]> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidInput(format!("expected d1,d2,d3,d4, got {s:?}")))?;
    parts
        .try_into()
        .map_err(|_| Error::InvalidInput("expected exactly four numerators".into()))
}

fn io_err(e: io::Error) -> Error {
    Error::InvalidInput(format!("i/o error: {e}"))
}

fn run(cli: Cli) -> Result<serde_json::Value> {
    match cli.command {
        Command::Normalize { vertices } => {
            let t: LatticeTetrahedron = vertices.parse()?;
            let result = tetlab::normalize::to_standard(&t)?;
            Ok(json!({
                "a": result.standard.a(),
                "b": result.standard.b(),
                "n": result.standard.n(),
                "witness": result.witness,
                "vertex_permutation": result.vertex_permutation,
            }))
        }
        Command::Census { vertices } => {
            let t: LatticeTetrahedron = vertices.parse()?;
            let census = tetlab::pointcount::census(&t)?;
            Ok(serde_json::to_value(&census).expect("census serializes"))
        }
        Command::Count { tet } => {
            let t = parse_tet(&tet)?;
            let info = tetlab::classify::interior_point_info(&t)?;
            Ok(json!({
                "a": t.a(), "b": t.b(), "n": t.n(),
                "i": info.len(),
                "interior_points": info,
            }))
        }
        Command::Classify { tet } => {
            let t = parse_tet(&tet)?;
            let class = tetlab::classify::classify(&t)?;
            Ok(serde_json::to_value(&class).expect("class serializes"))
        }
        Command::Equiv { t1, t2 } => {
            let t1 = parse_tet(&t1)?;
            let t2 = parse_tet(&t2)?;
            let verdict = tetlab::equiv::equivalence_verdict(&t1, &t2)?;
            Ok(serde_json::to_value(&verdict).expect("verdict serializes"))
        }
        Command::Width { tet, directions } => {
            let t = parse_tet(&tet)?;
            if directions {
                let report = tetlab::width::lattice_width(&t)?;
                Ok(serde_json::to_value(&report).expect("report serializes"))
            } else {
                Ok(json!({ "width": tetlab::width::lattice_width_value(&t)? }))
            }
        }
        Command::Ripe { max } => {
            let quads = tetlab::classify::enumerate_ripe(max);
            Ok(serde_json::to_value(&quads).expect("quadruples serialize"))
        }
        Command::ConstructBc { d } => {
            let d = parse_quad(&d)?;
            let n_total: i64 = d.iter().sum();
            let (t, w) = tetlab::pointcount::construct_from_bc(&d, n_total)?;
            let bc = t.barycentric_of(&w)?;
            Ok(json!({
                "a": t.a(), "b": t.b(), "n": t.n(),
                "interior_point": w,
                "bc": bc,
            }))
        }
        Command::Survey { n_max, out, csv, width_max_n } => {
            let records = tetlab::survey::sweep_with_width_limit(n_max, width_max_n)?;
            match out {
                Some(path) => {
                    let f = BufWriter::new(File::create(&path).map_err(io_err)?);
                    tetlab::survey::write_jsonl(&records, f).map_err(io_err)?;
                }
                None => {
                    let stdout = io::stdout();
                    tetlab::survey::write_jsonl(&records, stdout.lock()).map_err(io_err)?;
                }
            }
            if let Some(path) = csv {
                let f = BufWriter::new(File::create(&path).map_err(io_err)?);
                tetlab::survey::write_csv(&records, f).map_err(io_err)?;
            }
            Ok(json!({ "records": records.len() }))
        }
        Command::Check { catalog } => {
            let f = BufReader::new(File::open(&catalog).map_err(io_err)?);
            let records = tetlab::survey::read_jsonl(f)?;
            let report = tetlab::survey::check_catalog(&records)?;
            Ok(serde_json::to_value(&report).expect("report serializes"))
        }
    }
}

fn main() -> ExitCode {
    // cap sweep parallelism; ignored if the pool is already built
    if let Ok(threads) = std::env::var("TETLAB_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
        }
    }
    let cli = Cli::parse();
    let surveyed = matches!(cli.command, Command::Survey { out: None, .. });
    match run(cli) {
        Ok(value) => {
            // survey already streamed its JSONL to stdout
            if !surveyed {
                println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let doc = json!({ "error": { "code": e.code(), "message": e.to_string() } });
            eprintln!("{doc}");
            ExitCode::FAILURE
        }
    }
}
