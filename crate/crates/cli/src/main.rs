//! `circnot`: command-line front end for circular CNOT circuits.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use circular_cnot::circularize::{circularize_checked, JoinRecord};
use circular_cnot::cuts::{enumerate_cut_points, linearize, validate_cut_set, CutSet, Direction};
use circular_cnot::derive::{derive_combined, derive_transformations, derive_with_fault, search_cuts};
use circular_cnot::dot::{circular_dot, linear_dot};
use circular_cnot::icm::{gadget, inject_smgf, strip_and_circularize, translate_to_icm, GadgetKind};
use circular_cnot::model::{build_combined_model, build_model, BooleanModel, ModelKind};
use circular_cnot::parse::{
    format_circular, format_cuts, format_icm, format_linear, parse_circuit, parse_cuts, parse_fault, parse_icm,
    parse_program, ParsedCircuit,
};
use circular_cnot::{oracle_map, to_parity_system, CircularCircuit, Error, LinearCircuit, StabiliserMap};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "circnot", version, about = "Cut, model and verify circular CNOT circuits")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// `key=value` lines with JSON values.
    Kv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Cw,
    Ccw,
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Cw => Direction::Clockwise,
            Dir::Ccw => Direction::CounterClockwise,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    X,
    Z,
    Combined,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a circuit, ICM circuit or program file and print it back.
    Parse { file: PathBuf },
    /// List the cut points of a circular circuit or validate a cut set.
    Cuts {
        circuit: PathBuf,
        #[arg(long, conflicts_with = "validate", required_unless_present = "validate")]
        enumerate: bool,
        #[arg(long, value_name = "CUTS")]
        validate: Option<PathBuf>,
    },
    /// Cut a circular circuit into a linear one.
    Linearize {
        circuit: PathBuf,
        #[arg(long)]
        cuts: PathBuf,
        #[arg(long, value_enum)]
        dir: Option<Dir>,
    },
    /// Close a linear circuit into a circular one.
    Circularize { circuit: PathBuf },
    /// Print the Boolean model, optionally cut, or its parity system.
    Model {
        circuit: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::X)]
        kind: Kind,
        #[arg(long)]
        cuts: Option<PathBuf>,
        /// Select the X (true) or Z (false) part of the combined model.
        #[arg(long)]
        selector: Option<bool>,
        #[arg(long)]
        parity: bool,
    },
    /// Derive the stabiliser map of a cut circuit.
    Derive {
        circuit: PathBuf,
        #[arg(long)]
        cuts: PathBuf,
        #[arg(long, value_enum)]
        dir: Option<Dir>,
        /// Derive through the combined model instead of the X and Z models.
        #[arg(long)]
        combined: bool,
    },
    /// Find cut sets and directions realising a target map.
    Search {
        circuit: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        max_cuts: usize,
    },
    /// Build ICM circuits.
    Icm {
        #[command(subcommand)]
        action: IcmAction,
    },
    /// Derive a cut circuit with one gate missing.
    Fault {
        circuit: PathBuf,
        #[arg(long)]
        cuts: PathBuf,
        #[arg(long)]
        fault: PathBuf,
        #[arg(long, value_enum)]
        dir: Option<Dir>,
    },
    /// Emit a Graphviz description of a circuit.
    Export {
        circuit: PathBuf,
        #[arg(long)]
        cuts: Option<PathBuf>,
    },
    /// Compare derivations with the Pauli oracle on random circuits.
    Selfcheck {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum IcmAction {
    /// Print a fixed gadget.
    Gadget {
        #[arg(value_parser = gadget_kind)]
        name: GadgetKind,
    },
    /// Translate a Clifford+T program.
    Translate { program: PathBuf },
    /// Drop initialisations and measurements and circularize.
    Strip { icm: PathBuf },
}

fn gadget_kind(s: &str) -> Result<GadgetKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = GadgetKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

enum Failure {
    Domain(Error),
    Io(PathBuf, std::io::Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = Result<T, Failure>;

#[derive(Default)]
struct Report {
    text: String,
    kv: Vec<(String, Value)>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        if !s.as_ref().ends_with('\n') {
            self.text.push('\n');
        }
    }

    fn put(&mut self, key: impl Into<String>, v: Value) {
        self.kv.push((key.into(), v));
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Kv => self.kv.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
        }
    }
}

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn circular(path: &Path) -> Run<CircularCircuit> {
    match parse_circuit(&read(path)?)? {
        ParsedCircuit::Circular(c) => Ok(c),
        ParsedCircuit::Linear(_) => Err(Error::Syntax { line: 1, message: "expected a circular circuit".into() }.into()),
    }
}

fn linear(path: &Path) -> Run<LinearCircuit> {
    match parse_circuit(&read(path)?)? {
        ParsedCircuit::Linear(l) => Ok(l),
        ParsedCircuit::Circular(_) => Err(Error::Syntax { line: 1, message: "expected a linear circuit".into() }.into()),
    }
}

/// Cut set and direction; the flag wins over the file, clockwise otherwise.
fn cuts_and_dir(path: &Path, flag: Option<Dir>) -> Run<(CutSet, Direction)> {
    let (cuts, file_dir) = parse_cuts(&read(path)?)?;
    Ok((cuts, flag.map(Direction::from).or(file_dir).unwrap_or(Direction::Clockwise)))
}

fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    json!(pairs.iter().map(|&(c, t)| [c, t]).collect::<Vec<_>>())
}

fn gaps_json(cuts: &CutSet) -> Value {
    json!(cuts.iter().map(|g| [g.wire.0, g.index]).collect::<Vec<_>>())
}

fn map_kv(r: &mut Report, m: &StabiliserMap) {
    r.put("map.x", json!(m.x));
    r.put("map.z", json!(m.z));
}

fn joins_kv(r: &mut Report, j: &JoinRecord) {
    r.put("joins", json!(j.joins));
    r.put("wire_of", json!(j.wire_of));
    r.put("cross_joins", json!(j.cross_joins()));
}

fn run(cli: Cli) -> Run<Report> {
    let mut r = Report::default();
    match cli.command {
        Command::Parse { file } => {
            let text = read(&file)?;
            let head = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
            match head.and_then(|h| h.split([';', ' ']).next()) {
                Some("icm") => {
                    let icm = parse_icm(&text)?;
                    r.put("kind", json!("icm"));
                    r.put("qubits", json!(icm.qubit_count()));
                    r.put("gates", pairs_json(&icm.circuit().gate_pairs()));
                    r.put("measured", json!(icm.measured_qubits()));
                    r.line(format_icm(&icm));
                }
                Some("program") => {
                    let p = parse_program(&text)?;
                    r.put("kind", json!("program"));
                    r.put("qubits", json!(p.qubits));
                    r.put("gates", json!(p.gates.len()));
                    r.line(format!("program\nqubits {}", p.qubits));
                    for g in &p.gates {
                        let args: Vec<String> = g.qubits.iter().map(usize::to_string).collect();
                        r.line(format!("{} {}", g.kind.name(), args.join(" ")));
                    }
                }
                _ => match parse_circuit(&text)? {
                    ParsedCircuit::Circular(c) => {
                        r.put("kind", json!("circular"));
                        r.put("wires", json!(c.wire_count()));
                        r.put("gates", pairs_json(&c.gate_pairs()));
                        r.line(format_circular(&c));
                    }
                    ParsedCircuit::Linear(l) => {
                        r.put("kind", json!("linear"));
                        r.put("qubits", json!(l.qubit_count()));
                        r.put("gates", pairs_json(&l.gate_pairs()));
                        r.line(format_linear(&l));
                    }
                },
            }
        }
        Command::Cuts { circuit, validate, .. } => {
            let c = circular(&circuit)?;
            match validate {
                None => {
                    let points = enumerate_cut_points(&c);
                    for p in &points {
                        r.line(format!("cut {} {}", p.gap.wire, p.gap.index));
                    }
                    r.put("cut_points", json!(points.iter().map(|p| [p.gap.wire.0, p.gap.index]).collect::<Vec<_>>()));
                }
                Some(path) => {
                    let (cuts, _) = parse_cuts(&read(&path)?)?;
                    let angle = validate_cut_set(&c, &cuts)?;
                    let qubits = linearize(&c, &cuts, Direction::Clockwise)?.qubit_count();
                    r.line(format!("valid {cuts}\nradial angle {angle}\nqubits {qubits}"));
                    r.put("valid", json!(true));
                    r.put("cuts", gaps_json(&cuts));
                    r.put("angle", json!(angle));
                    r.put("qubits", json!(qubits));
                }
            }
        }
        Command::Linearize { circuit, cuts, dir } => {
            let c = circular(&circuit)?;
            let (cuts, d) = cuts_and_dir(&cuts, dir)?;
            let l = linearize(&c, &cuts, d)?;
            r.line(format_linear(&l));
            r.put("direction", json!(d.short()));
            r.put("qubits", json!(l.qubit_count()));
            r.put("gates", pairs_json(&l.gate_pairs()));
        }
        Command::Circularize { circuit } => {
            let l = linear(&circuit)?;
            let (c, j) = circularize_checked(&l)?;
            r.line(format_circular(&c));
            for (consumer, producer) in &j.joins {
                r.line(format!("# join {producer} -> {consumer}"));
            }
            r.put("wires", json!(c.wire_count()));
            r.put("gates", pairs_json(&c.gate_pairs()));
            joins_kv(&mut r, &j);
        }
        Command::Model { circuit, kind, cuts, selector, parity } => {
            let c = circular(&circuit)?;
            let mut m: BooleanModel = match kind {
                Kind::X => build_model(&c, ModelKind::X),
                Kind::Z => build_model(&c, ModelKind::Z),
                Kind::Combined => build_combined_model(&c),
            };
            if let Some(path) = cuts {
                let (cuts, _) = parse_cuts(&read(&path)?)?;
                m = m.apply_cuts(&cuts)?;
            }
            if let Some(x) = selector {
                m = m.with_selector(x);
            }
            r.put("variables", json!(m.variable_count()));
            r.put("cnot_clauses", json!(m.cnot_clause_count()));
            r.put("join_clauses", json!(m.join_clause_count()));
            if parity {
                let s = to_parity_system(&m)?;
                r.put("rows", json!(s.row_count()));
                r.put("rank", json!(s.rank()));
                r.line(s.dump());
            } else {
                r.line(m.dump());
            }
        }
        Command::Derive { circuit, cuts, dir, combined } => {
            let c = circular(&circuit)?;
            let (cuts, d) = cuts_and_dir(&cuts, dir)?;
            let der = derive_transformations(&c, &cuts, d)?;
            let map = if combined { derive_combined(&c, &cuts, d)? } else { der.map.clone() };
            r.line(format!("angle {}\ndirection {d}\nqubits {}", der.angle, der.linear.qubit_count()));
            r.line(map.report());
            r.put("angle", json!(der.angle));
            r.put("direction", json!(d.short()));
            r.put("gates", pairs_json(&der.linear.gate_pairs()));
            map_kv(&mut r, &map);
        }
        Command::Search { circuit, target, max_cuts } => {
            let c = circular(&circuit)?;
            let target = StabiliserMap::parse(&read(&target)?)?;
            let found = search_cuts(&c, &target, max_cuts)?;
            for (cuts, d) in &found {
                r.line(format!("{cuts} {d}"));
            }
            r.put("found", json!(found.len()));
            r.put(
                "results",
                json!(found.iter().map(|(k, d)| json!({"cuts": gaps_json(k), "direction": d.short()})).collect::<Vec<_>>()),
            );
        }
        Command::Icm { action } => match action {
            IcmAction::Gadget { name } => {
                let g = gadget(name);
                r.line(format_icm(&g));
                r.put("gadget", json!(name.name()));
                r.put("qubits", json!(g.qubit_count()));
                r.put("gates", pairs_json(&g.circuit().gate_pairs()));
            }
            IcmAction::Translate { program } => {
                let p = parse_program(&read(&program)?)?;
                let t = translate_to_icm(&p)?;
                r.line(format_icm(&t.icm));
                r.line(format!("# outputs {:?}", t.outputs));
                r.put("qubits", json!(t.icm.qubit_count()));
                r.put("gates", json!(t.icm.circuit().gates().len()));
                r.put("outputs", json!(t.outputs));
            }
            IcmAction::Strip { icm } => {
                let icm = parse_icm(&read(&icm)?)?;
                let (c, j) = strip_and_circularize(&icm).map_err(|e| Failure::Domain(e.error))?;
                r.line(format_circular(&c));
                r.line(format!("# {} qubits, {} cross joins, {} wires", icm.qubit_count(), j.cross_joins(), c.wire_count()));
                r.put("qubits", json!(icm.qubit_count()));
                r.put("wires", json!(c.wire_count()));
                joins_kv(&mut r, &j);
            }
        },
        Command::Fault { circuit, cuts, fault, dir } => {
            let c = circular(&circuit)?;
            let (base, d) = cuts_and_dir(&cuts, dir)?;
            let spec = parse_fault(&read(&fault)?)?;
            let (_, patch) = inject_smgf(&c, &base, spec)?;
            let fd = derive_with_fault(&c, &base, spec.gate, d)?;
            r.line(format!("# ancilla arc {}..{}", patch.arc.0, patch.arc.1));
            r.line(format_cuts(&fd.cuts, Some(d)));
            r.line(fd.map.report());
            r.put("gate", json!(spec.gate));
            r.put("cuts", gaps_json(&fd.cuts));
            r.put("added", json!(patch.added.iter().map(|g| [g.wire.0, g.index]).collect::<Vec<_>>()));
            r.put("reduced", pairs_json(&fd.reduced.gate_pairs()));
            map_kv(&mut r, &fd.map);
        }
        Command::Export { circuit, cuts } => {
            let dot = match parse_circuit(&read(&circuit)?)? {
                ParsedCircuit::Linear(l) => linear_dot(&l),
                ParsedCircuit::Circular(c) => {
                    let cuts = cuts.map(|p| read(&p).and_then(|t| Ok(parse_cuts(&t)?.0))).transpose()?;
                    circular_dot(&c, cuts.as_ref())
                }
            };
            r.line(&dot);
            r.put("dot", json!(dot));
        }
        Command::Selfcheck { seed, count } => {
            let checked = selfcheck(seed, count)?;
            r.line(format!("seed {seed}\nchecked {checked} derivations, all equal to the oracle"));
            r.put("seed", json!(seed));
            r.put("checked", json!(checked));
        }
    }
    Ok(r)
}

fn random_circuit(rng: &mut ChaCha8Rng) -> CircularCircuit {
    loop {
        let n = rng.gen_range(2..=4);
        let pairs: Vec<(usize, usize)> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let c = rng.gen_range(0..n);
                (c, (c + rng.gen_range(1..n)) % n)
            })
            .collect();
        if let Ok(c) = CircularCircuit::new(n, &pairs) {
            return c;
        }
    }
}

/// Random circuits cut radially plus a few extra gaps, derived in both
/// directions and compared with the Pauli oracle.
fn selfcheck(seed: u64, count: usize) -> Run<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for i in 0..count {
        let c = random_circuit(&mut rng);
        let mut cuts = CutSet::radial(&c, rng.gen_range(0..c.angle_count()));
        let points = enumerate_cut_points(&c);
        for _ in 0..rng.gen_range(0..3) {
            cuts.insert(points[rng.gen_range(0..points.len())].gap);
        }
        for d in Direction::BOTH {
            let der = derive_transformations(&c, &cuts, d)?;
            if der.map != oracle_map(&der.linear) {
                return Err(Failure::Check(format!("case {i}: {:?} cut {cuts} {d}", c.gate_pairs())));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(r) => {
            print!("{}", r.render(format));
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, message) = match f {
                Failure::Domain(e) => (e.code().to_string(), e.to_string()),
                Failure::Io(p, e) => ("Io".to_string(), format!("{}: {e}", p.display())),
                Failure::Check(m) => ("SelfCheckFailed".to_string(), m),
            };
            match format {
                Format::Kv => println!("error={}\nmessage={}", json!(code), json!(message)),
                Format::Text => eprintln!("error: {code}: {message}"),
            }
            ExitCode::from(1)
        }
    }
}
