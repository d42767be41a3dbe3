//! The `constella` command line. Exit codes: 0 valid or true, 1 invalid or
//! false, 2 usage, parse or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use constella_core::classify::{classify_constellation, classify_semigroupoid};
use constella_core::enumerate::{dedup_up_to_iso, enumerate_li_constellations, enumerate_lr_semigroupoids};
use constella_core::functor::{build_c, build_g, roundtrip_constellation, roundtrip_semigroupoid};
use constella_core::morphism::{
    check_inductive_preradiant, check_inductive_radiant, check_premorphism, check_restriction_morphism,
};
use constella_core::szendrei::{expand_constellation, expand_semigroupoid, extend, iota};
use constella_core::{LeftRestrictionSemigroupoid, OrderedConstellation, PartialTable, ValidationReport};

use crate::io::{
    parse_morphism, parse_structure, serialize, serialize_morphism, serialize_structure, single_line, Document, Kind,
    Structure,
};
use crate::report::{classification, Report};
use crate::theorems::{self, Limits};

#[derive(Parser, Debug)]
#[command(name = "constella", version, about = "Left restriction semigroupoids and li-constellations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom for the file's kind and print a report.
    Verify { file: PathBuf },
    /// Convert between the two kinds.
    Convert {
        #[arg(long, value_enum)]
        to: KindArg,
        file: PathBuf,
    },
    /// Check that converting twice gives the input back.
    Roundtrip { file: PathBuf },
    /// Print the Szendrei expansion.
    Expand {
        file: PathBuf,
        /// Also print the embedding as a morphism file.
        #[arg(long)]
        iota: bool,
    },
    /// Extend an inductive preradiant to its radiant from the expansion.
    Extend {
        #[arg(long)]
        phi: PathBuf,
    },
    /// Print the classification report.
    Classify { file: PathBuf },
    /// Check a morphism file against one morphism class.
    CheckMorphism {
        #[arg(long, value_enum)]
        kind: MorphismArg,
        file: PathBuf,
    },
    /// Enumerate every structure of one size.
    Enumerate {
        #[arg(long, value_enum)]
        kind: CensusArg,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Run the theorem suite.
    Theorems {
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Constellation,
    Semigroupoid,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MorphismArg {
    Rm,
    Pm,
    Ir,
    Ip,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CensusArg {
    Lrs,
    Lic,
}

/// A command outcome that is not a plain success.
enum Failure {
    /// Exit 1, with a report already written.
    False,
    /// Exit 2 with a message.
    Usage(String),
}

type Outcome = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn out_err(e: std::io::Error) -> Failure {
    usage(format!("write failed: {e}"))
}

/// Reads `CONSTELLA_CAP`: `<morphism_space>` or `<morphism_space>,<max_size>`.
pub fn limits_from(value: Option<&str>) -> Result<Limits, String> {
    let mut limits = Limits::default();
    let Some(value) = value else {
        return Ok(limits);
    };
    let bad = || format!("CONSTELLA_CAP must be <morphism_space>[,<max_size>], got {value:?}");
    let mut parts = value.split(',');
    let space = parts.next().unwrap_or("").trim();
    limits.morphism_cap = space.parse().map_err(|_| bad())?;
    if let Some(size) = parts.next() {
        limits.max_size = size.trim().parse().map_err(|_| bad())?;
    }
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(limits)
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = limits_from(cap).map_err(Failure::Usage).and_then(|l| dispatch(cli.command, l, out));
    match result {
        Ok(true) => 0,
        Ok(false) | Err(Failure::False) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "constella: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_structure(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn counts(report: Report, t: &PartialTable, projections: usize) -> Report {
    report
        .count("elements", t.len() as u64)
        .count("defined_pairs", t.defined_count() as u64)
        .count("projections", projections as u64)
}

fn print(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(out_err)
}

/// Validates `doc`, printing the failure report when it is invalid.
fn valid(doc: Document, out: &mut dyn Write) -> Result<Structure, Failure> {
    let table = doc.table.clone();
    doc.into_structure().or_else(|r: ValidationReport| {
        print(out, &Report::new(&r, &table).to_json())?;
        Err(Failure::False)
    })
}

fn as_semigroupoid(s: Structure) -> Result<LeftRestrictionSemigroupoid, Failure> {
    match s {
        Structure::Semigroupoid(s) => Ok(s),
        Structure::Constellation(t) => build_g(&t).map_err(|e| usage(e.to_string())),
    }
}

fn as_constellation(s: Structure) -> OrderedConstellation {
    match s {
        Structure::Semigroupoid(s) => build_c(&s),
        Structure::Constellation(t) => t,
    }
}

fn core<T>(r: Result<T, constella_core::Error>) -> Result<T, Failure> {
    r.map_err(|e| usage(e.to_string()))
}

fn dispatch(command: Command, limits: Limits, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Verify { file } => {
            let doc = load(&file)?;
            let r = doc.validate();
            let projections = doc.plus.image().len();
            let mut report = counts(Report::new(&r, &doc.table), &doc.table, projections);
            if r.is_valid() {
                let structure = doc.into_structure().expect("validated");
                report.classification = Some(classify_structure(&structure)?);
            }
            print(out, &report.to_json())?;
            Ok(r.is_valid())
        }
        Command::Convert { to, file } => {
            let s = valid(load(&file)?, out)?;
            let converted = match to {
                KindArg::Constellation => Structure::Constellation(as_constellation(s)),
                KindArg::Semigroupoid => Structure::Semigroupoid(as_semigroupoid(s)?),
            };
            print(out, &serialize_structure(&converted))?;
            Ok(true)
        }
        Command::Roundtrip { file } => {
            let ok = match valid(load(&file)?, out)? {
                Structure::Semigroupoid(s) => core(roundtrip_semigroupoid(&s))?,
                Structure::Constellation(t) => core(roundtrip_constellation(&t))?,
            };
            print(out, if ok { "roundtrip ok\n" } else { "roundtrip differs\n" })?;
            Ok(ok)
        }
        Command::Expand { file, iota: with_iota } => {
            let s = valid(load(&file)?, out)?;
            let (text, plus, from, to, sz_len) = match &s {
                Structure::Semigroupoid(s) => {
                    let sz = core(expand_semigroupoid(s))?;
                    let io = core(iota(s.restriction(), &sz))?;
                    let text = serialize_structure(&Structure::Semigroupoid(sz.structure.clone()));
                    (text, io, s.table().clone(), sz.structure.table().clone(), sz.len())
                }
                Structure::Constellation(t) => {
                    let sz = core(expand_constellation(t))?;
                    let io = core(iota(t.restriction(), &sz))?;
                    let text = serialize_structure(&Structure::Constellation(sz.structure.clone()));
                    (text, io, t.table().clone(), sz.structure.table().clone(), sz.len())
                }
            };
            debug_assert_eq!(to.len(), sz_len);
            print(out, &text)?;
            if with_iota {
                print(out, "---\n")?;
                print(out, &serialize_morphism(&file.display().to_string(), "-", &from, &to, &plus))?;
            }
            Ok(true)
        }
        Command::Extend { phi } => extend_command(&phi, limits, out),
        Command::Classify { file } => {
            let doc = load(&file)?;
            let table = doc.table.clone();
            let s = valid(doc, out)?;
            let mut report = Report::new(&ValidationReport::new(), &table);
            report.classification = Some(classify_structure(&s)?);
            print(out, &report.to_json())?;
            Ok(true)
        }
        Command::CheckMorphism { kind, file } => check_morphism(kind, &file, out),
        Command::Enumerate {
            kind,
            size,
            count_only,
            up_to_iso,
        } => {
            let lines: Vec<String> = match kind {
                CensusArg::Lrs => {
                    let mut all = core(enumerate_lr_semigroupoids(size, limits.max_size))?;
                    if up_to_iso {
                        all = dedup_up_to_iso(all);
                    }
                    all.iter().map(|s| single_line(&serialize(&Document::from(s)))).collect()
                }
                CensusArg::Lic => {
                    let mut all = core(enumerate_li_constellations(size, limits.max_size))?;
                    if up_to_iso {
                        all = dedup_up_to_iso(all);
                    }
                    all.iter().map(|t| single_line(&serialize(&Document::from(t)))).collect()
                }
            };
            if count_only {
                let name = match kind {
                    CensusArg::Lrs => "lrs",
                    CensusArg::Lic => "lic",
                };
                let report = Report::new(&ValidationReport::new(), &PartialTable::numbered(1).expect("one element"))
                    .count(name, lines.len() as u64)
                    .count("size", size as u64);
                print(out, &report.to_json())?;
            } else {
                for l in lines {
                    print(out, &(l + "\n"))?;
                }
            }
            Ok(true)
        }
        Command::Theorems { size } => {
            let mut all = true;
            for o in theorems::run_all(size, limits) {
                print(out, &(o.line() + "\n"))?;
                all &= o.passed;
            }
            Ok(all)
        }
    }
}

fn classify_structure(s: &Structure) -> Result<crate::report::ClassificationOut, Failure> {
    let c = match s {
        Structure::Semigroupoid(s) => core(classify_semigroupoid(s))?,
        Structure::Constellation(t) => core(classify_constellation(t))?,
    };
    Ok(classification(&c, s.table()))
}

/// Loads the two ends of a morphism file, paths taken relative to the file.
fn load_ends(file: &Path) -> Result<(crate::io::MorphismDocument, Document, Document, String), Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let m = parse_morphism(&text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let base = file.parent().unwrap_or(Path::new(""));
    let source = load(&base.join(&m.source))?;
    let target = load(&base.join(&m.target))?;
    let target_name = m.target.clone();
    Ok((m, source, target, target_name))
}

fn check_morphism(kind: MorphismArg, file: &Path, out: &mut dyn Write) -> Outcome {
    let (m, source, target, _) = load_ends(file)?;
    let (source, target) = (valid(source, out)?, valid(target, out)?);
    let phi = m
        .resolve(source.table(), target.table())
        .map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let report = match kind {
        MorphismArg::Rm | MorphismArg::Pm => {
            let (s, t) = (as_semigroupoid(source)?, as_semigroupoid(target)?);
            let r = if matches!(kind, MorphismArg::Rm) {
                check_restriction_morphism(&s, &t, &phi)
            } else {
                check_premorphism(&s, &t, &phi)
            };
            Report::new(&r, s.table())
        }
        MorphismArg::Ir | MorphismArg::Ip => {
            let (s, t) = (as_constellation(source), as_constellation(target));
            let r = if matches!(kind, MorphismArg::Ir) {
                check_inductive_radiant(&s, &t, &phi)
            } else {
                check_inductive_preradiant(&s, &t, &phi)
            };
            Report::new(&r, s.table())
        }
    };
    print(out, &report.to_json())?;
    Ok(report.valid)
}

fn extend_command(file: &Path, _limits: Limits, out: &mut dyn Write) -> Outcome {
    let (m, source, target, target_name) = load_ends(file)?;
    let (source, target) = (as_constellation(valid(source, out)?), as_constellation(valid(target, out)?));
    let phi = m
        .resolve(source.table(), target.table())
        .map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let r = check_inductive_preradiant(&source, &target, &phi);
    if !r.is_valid() {
        print(out, &Report::new(&r, source.table()).to_json())?;
        return Err(Failure::False);
    }
    let sz = core(expand_constellation(&source))?;
    let ext = core(extend(&phi, &target, &sz))?;
    print(out, &serialize_structure(&Structure::Constellation(sz.structure.clone())))?;
    print(out, "---\n")?;
    print(out, &serialize_morphism("-", &target_name, sz.structure.table(), target.table(), &ext))?;
    Ok(true)
}

impl Kind {
    pub fn file_extension(self) -> &'static str {
        match self {
            Kind::Semigroupoid => "sgpd",
            Kind::Constellation => "cnst",
        }
    }
}
