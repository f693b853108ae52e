use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fanofiber::constructions::{free_sum, klyachko, power, simplex, t_del_pezzo};
use fanofiber::io::{
    fixtures_dir, import_dump, read_path, read_polytope_file, write_polytope_file, PolytopeRecord,
};
use fanofiber::report::{analyze_record, classify_corpus, FanoReport, Outcome, Predicate};
use fanofiber::symmetry::{automorphism_group, lattice_isomorphism, report_of};
use fanofiber::Polytope;

#[derive(Parser)]
#[command(
    name = "fanofiber",
    version,
    about = "Smooth toric Fano polytope toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every predicate for each polytope in a file
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// exit with status 1 unless this predicate holds (single-record files)
        #[arg(long)]
        expect: Option<Predicate>,
    },
    /// Write a named polytope to a file
    Construct {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Evaluate predicates over a file or a directory of .poly files
    Classify {
        /// defaults to the fixture corpus
        path: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "fibre_like,recognize")]
        predicate: Vec<Predicate>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Search for a lattice isomorphism between the first polytopes of two files
    Isom { a: PathBuf, b: PathBuf },
    /// Automorphism group of the first polytope in a file
    Autgroup {
        file: PathBuf,
        #[arg(long)]
        orbits: bool,
    },
    /// Convert an external polytope dump into the native format
    Import {
        dump: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    Simplex { n: usize },
    Delpezzo { d: usize },
    Klyachko { k: usize, d: usize },
    Power { file: PathBuf, n: usize },
    Freesum { a: PathBuf, b: PathBuf },
}

type Failure = Box<dyn std::error::Error>;

fn first_polytope(path: &Path) -> Result<Polytope, Failure> {
    let recs = read_polytope_file(path)?;
    let rec = recs
        .first()
        .ok_or_else(|| format!("{}: no records", path.display()))?;
    Ok(rec.polytope()?)
}

fn show<T: std::fmt::Display>(o: &Option<Outcome<T>>) -> String {
    match o {
        None => "-".into(),
        Some(Outcome::Value(v)) => v.to_string(),
        Some(Outcome::Error { error }) => format!("error: {error}"),
    }
}

fn print_report(r: &FanoReport) {
    let title = match (&r.id, &r.name) {
        (Some(id), Some(n)) => format!("#{id} {n}"),
        (Some(id), None) => format!("#{id}"),
        (None, Some(n)) => n.clone(),
        (None, None) => "(unnamed)".into(),
    };
    println!("{title}: dim {}, {} vertices", r.dim, r.num_vertices);
    let rows = [
        ("smooth", show(&r.smooth)),
        ("reflexive", show(&r.reflexive)),
        ("terminal", show(&r.terminal)),
        ("simplicial", show(&r.simplicial)),
        ("centrally_symmetric", show(&r.centrally_symmetric)),
        ("two_neighbourly", show(&r.two_neighbourly)),
        ("vertex_transitive", show(&r.vertex_transitive)),
        ("t", show(&r.t)),
        ("k", show(&r.k)),
        ("fibre_like", show(&r.fibre_like)),
        ("picard_rank", show(&r.picard_rank)),
        ("fano_index", show(&r.fano_index)),
        ("recognized", show(&r.recognized)),
    ];
    for (k, v) in rows {
        println!("  {k:<20} {v}");
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze { file, json, expect } => {
            let recs = read_polytope_file(&file)?;
            let reports: Vec<FanoReport> = recs
                .iter()
                .map(|r| analyze_record(r, &Predicate::ALL))
                .collect();
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                reports.iter().for_each(print_report);
            }
            if let Some(p) = expect {
                let [r] = reports.as_slice() else {
                    return Err(format!(
                        "--expect needs exactly one record, found {}",
                        reports.len()
                    )
                    .into());
                };
                match r.flag(p) {
                    Some(true) => {}
                    Some(false) => return Ok(ExitCode::from(1)),
                    None => return Err(format!("{p} could not be evaluated").into()),
                }
            }
        }
        Command::Construct { family, output } => {
            let (p, name) = match family {
                Family::Simplex { n } => (simplex(n)?, format!("P^{n}")),
                Family::Delpezzo { d } => (t_del_pezzo(d)?, format!("V_{d}")),
                Family::Klyachko { k, d } => (klyachko(k, d)?, format!("W_{d}^{k}")),
                Family::Power { file, n } => {
                    (power(&first_polytope(&file)?, n)?, format!("power {n}"))
                }
                Family::Freesum { a, b } => (
                    free_sum(&first_polytope(&a)?, &first_polytope(&b)?),
                    "free sum".into(),
                ),
            };
            let rec = PolytopeRecord::from_polytope(&p, None, Some(name));
            match output {
                Some(path) => write_polytope_file(&[rec], path)?,
                None => print!("{}", fanofiber::io::format_polytopes(&[rec])),
            }
        }
        Command::Classify {
            path,
            predicate,
            json,
            threads,
        } => {
            let recs = read_path(path.unwrap_or_else(fixtures_dir))?;
            let report = classify_corpus(&recs, &predicate, threads);
            if json {
                println!("{}", report.to_json());
            } else {
                for r in &report.records {
                    let flags: Vec<String> = report
                        .predicates
                        .iter()
                        .map(|name| {
                            let p: Predicate = name.parse().expect("known predicate");
                            let v = r.flag(p).map_or("error".to_string(), |b| b.to_string());
                            format!("{name}={v}")
                        })
                        .collect();
                    let id = r.id.map_or("-".into(), |i| i.to_string());
                    println!(
                        "{:>8}  dim {} m {:>2}  {}",
                        id,
                        r.dim,
                        r.num_vertices,
                        flags.join(" ")
                    );
                }
                for (k, v) in &report.summary {
                    println!("{k}: {v}");
                }
                for row in &report.table {
                    let id = row.id.map_or("-".into(), |i| i.to_string());
                    println!(
                        "{} & {} & {} & {}",
                        row.dim, row.num_vertices, row.description, id
                    );
                }
            }
        }
        Command::Isom { a, b } => {
            let (p, q) = (first_polytope(&a)?, first_polytope(&b)?);
            match lattice_isomorphism(&p, &q)? {
                Some(map) => {
                    println!("isomorphic");
                    for row in &map.matrix {
                        let s: Vec<String> = row.iter().map(i64::to_string).collect();
                        println!("  {}", s.join(" "));
                    }
                }
                None => println!("not isomorphic"),
            }
        }
        Command::Autgroup { file, orbits } => {
            let p = first_polytope(&file)?;
            let g = automorphism_group(&p);
            let s = report_of(&g);
            println!("order {}", g.order());
            println!("generators {}", g.generators().len());
            println!(
                "orbits {} fixed_dim {} vertex_transitive {}",
                s.t, s.k, s.vertex_transitive
            );
            if orbits {
                for o in g.orbits() {
                    let vs: Vec<String> = o.iter().map(|&i| format!("{:?}", p.vertex(i))).collect();
                    println!("  {}", vs.join(" "));
                }
            }
        }
        Command::Import { dump, output } => {
            let recs = import_dump(&std::fs::read_to_string(&dump)?)?;
            write_polytope_file(&recs, &output)?;
            println!("{} records", recs.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fanofiber: {e}");
            ExitCode::from(2)
        }
    }
}
