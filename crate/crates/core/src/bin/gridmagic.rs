use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gridmagic::document::LabelingDocument;
use gridmagic::error::Error;
use gridmagic::grid::canonicalize;
use gridmagic::oracle::{exhaustive_search, SearchBudget, SearchMode, DEFAULT_BUDGET};
use gridmagic::render::{render, RenderStyle};
use gridmagic::verify::{verify_edge_magic, verify_supermagic, verify_vertex_magic, MagicReport};
use gridmagic::{closed_form_sums, LabelKind};

const EXIT_NOT_MAGIC: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "gridmagic", version, about = "Q_d-magic labelings of grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeling and write it as a document.
    Generate {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, default_value = "total")]
        kind: LabelKind,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a document over every unit cube ("-" reads stdin).
    Verify { file: String },
    /// Print the closed-form magic sums.
    Predict {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Enumerate all labelings of a tiny grid.
    Search {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, default_value = "supermagic")]
        mode: SearchMode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Render a document as TikZ, DOT or CSV.
    Render {
        file: String,
        #[arg(long)]
        style: RenderStyle,
    },
    /// Check that every edge lies in some unit cube.
    Cover {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Parse { .. } | Error::VersionMismatch { .. } => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn read_document(path: &str) -> Result<LabelingDocument, Error> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)?.read_to_string(&mut text)?;
    }
    LabelingDocument::from_json(&text)
}

fn report_lines(doc: &LabelingDocument, r: &MagicReport) -> String {
    let dims: Vec<String> = doc.dims().iter().map(|n| n.to_string()).collect();
    let sums: Vec<String> = r.cube_sum_values.iter().map(|s| s.to_string()).collect();
    let mut out = format!(
        "kind: {}\ngrid: {}\nbijective: {}\n",
        r.kind.as_str(),
        dims.join("x"),
        r.bijective
    );
    if let Some(ok) = r.vertex_range_ok {
        out.push_str(&format!("vertex labels 1..|V|: {ok}\n"));
    }
    out.push_str(&format!("distinct cube sums: {}\n", r.distinct_sums));
    out.push_str(&format!("cube sums: {}\n", sums.join(" ")));
    if let Some(p) = r.predicted_sum {
        out.push_str(&format!(
            "predicted: {p} ({})\n",
            if r.matches_prediction == Some(true) {
                "match"
            } else {
                "differs"
            }
        ));
    }
    match (r.is_valid(), r.magic_sum) {
        (true, Some(sum)) => out.push_str(&format!("MAGIC sum={sum}\n")),
        _ => out.push_str(&format!("NOT_MAGIC distinct={}\n", r.distinct_sums)),
    }
    out
}

fn verify(path: &str) -> Result<u8, Error> {
    let doc = read_document(path)?;
    let spec = doc.spec();
    let report = match doc.kind() {
        LabelKind::Vertex => verify_vertex_magic(spec, &doc.vertex_labeling().expect("checked on load"))?,
        LabelKind::Edge => verify_edge_magic(spec, &doc.edge_labeling().expect("checked on load"))?,
        LabelKind::Total => verify_supermagic(spec, &doc.total_labeling().expect("checked on load"))?,
    };
    print!("{}", report_lines(&doc, &report));
    Ok(if report.is_valid() { 0 } else { EXIT_NOT_MAGIC })
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Generate {
            dims,
            kind,
            out,
            format,
        } => {
            let doc = LabelingDocument::generate(&dims, kind)?;
            let text = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            match out {
                Some(path) => File::create(path)?.write_all(text.as_bytes())?,
                None => io::stdout().lock().write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Verify { file } => verify(&file),
        Command::Predict { dims } => {
            let (spec, _) = canonicalize(&dims)?;
            let p = closed_form_sums(&spec)?;
            println!(
                "c_vertex={} c_edge={} c_total={}",
                p.c_vertex, p.c_edge, p.c_total
            );
            Ok(0)
        }
        Command::Search { dims, mode, budget } => {
            let (spec, _) = canonicalize(&dims)?;
            let r = exhaustive_search(&spec, SearchBudget::new(mode, budget))?;
            println!("examined={} magic={}", r.examined, r.magic_count);
            println!("construction_found={}", r.construction_found);
            for (sum, count) in &r.sum_histogram {
                println!("sum={sum} count={count}");
            }
            Ok(0)
        }
        Command::Render { file, style } => {
            let doc = read_document(&file)?;
            print!("{}", render(&doc, style)?);
            Ok(0)
        }
        Command::Cover { dims } => {
            let (spec, _) = canonicalize(&dims)?;
            let covered = spec.check_h_covering();
            println!("covered={covered}");
            Ok(if covered { 0 } else { EXIT_NOT_MAGIC })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            // clap routes help to stdout and errors to stderr
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gridmagic: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
