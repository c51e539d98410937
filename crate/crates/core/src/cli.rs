//! The `orchard` command line.
//!
//! Exit codes: 0 success, 1 other failure, 2 unparsable input or arguments,
//! 3 non-generic configuration, 4 illegal flip or pair not close,
//! 5 budget exhausted, 6 malformed database.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::census::{self, CensusTable, EnumerateOptions, TypeRecord};
use crate::error::{Error, Result};
use crate::families::{family_polygon_center, Family, FamilySpec};
use crate::format::{parse_chirotope, parse_points, write_chirotope, write_points};
use crate::geometry::{hull_indices, orchard_partition, Configuration};
use crate::ordertype::{canonical_key, chirotope_of, is_isomorphic, Chirotope};
use crate::render::{render_svg, RenderStyle};
use crate::transforms::{
    apply_flip_chi, apply_flip_geom, contract, double_point, find_flips, infinitesimal_pairs, minimal_representative,
    ClosePair, FlipMove,
};

#[derive(Parser, Debug)]
#[command(name = "orchard", version, about = "Order types and Orchard partitions of planar point sets")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Compare and key order types up to orientation-preserving relabeling.
    #[arg(long, global = true, conflicts_with = "unoriented")]
    oriented: bool,
    /// Allow mirror images too (default).
    #[arg(long, global = true)]
    unoriented: bool,
    /// Write the main output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Wall-clock limit for enumeration.
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Bytes per coordinate in database files.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    coord_bytes: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hull size, Orchard partition, colours and close pairs of a points file.
    Analyze { file: PathBuf },
    /// Generate a family member as a points file.
    Family {
        id: String,
        n: usize,
        /// Relative size of the small offsets, as `p/q`.
        #[arg(long)]
        scale: Option<String>,
    },
    /// Delete the smaller point of an infinitesimally close pair.
    Contract { file: PathBuf, r: usize, s: usize },
    /// Contract close pairs until none is left.
    Minrep { file: PathBuf },
    /// Add a point infinitesimally close to point `i` inside cone pair `cone`.
    Double { file: PathBuf, i: usize, cone: usize },
    /// Flip a triple: move a point geometrically, or negate a chirotope sign.
    Flip { file: PathBuf, a: usize, b: usize, c: usize },
    /// List the triples whose sign can be negated.
    Flips { file: PathBuf },
    /// Whether two inputs have the same order type.
    Same { first: PathBuf, second: PathBuf },
    /// Canonical key as hex.
    Canonical { file: PathBuf },
    /// Census table of all order types of `n` points.
    Census {
        n: usize,
        /// Read the types from a database file instead of enumerating.
        #[arg(long)]
        db: Option<PathBuf>,
        /// Also write one record per type to this file.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// List the monochromatic order types of `n` points.
    Mono {
        n: usize,
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Draw a configuration as SVG.
    Render {
        file: PathBuf,
        #[arg(long, default_value_t = 400)]
        width: u32,
        #[arg(long, default_value_t = 400)]
        height: u32,
        #[arg(long, default_value_t = 24)]
        margin: u32,
        #[arg(long, default_value_t = 6)]
        radius: u32,
    },
    /// Print one record per configuration of a database file.
    Ingest { path: PathBuf, n: usize },
}

/// Maps an error to the documented exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidChirotope(_) => 2,
        Error::NonGeneric { .. } | Error::NonGenericRecord { .. } => 3,
        Error::IllegalFlip { .. } | Error::NotClosePair { .. } => 4,
        Error::BudgetExceeded => 5,
        Error::MalformedFile(_) => 6,
        _ => 1,
    }
}

/// Runs the command line, writing to `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.common.output {
                Some(path) => fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn load_points(path: &Path) -> Result<Configuration> {
    parse_points(&read(path)?)
}

enum Input {
    Points(Configuration),
    Signs(Chirotope),
}

/// A chirotope file starts with `n=`; anything else is a points file.
fn load_any(path: &Path) -> Result<Input> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.starts_with("n=")) {
        Ok(Input::Signs(parse_chirotope(&text)?))
    } else {
        Ok(Input::Points(parse_points(&text)?))
    }
}

fn chirotope_from(input: Input) -> Result<Chirotope> {
    match input {
        Input::Points(c) => chirotope_of(&c),
        Input::Signs(chi) => Ok(chi),
    }
}

fn options(common: &Common) -> EnumerateOptions {
    EnumerateOptions {
        budget: common.budget_seconds.map(Duration::from_secs),
        threads: common.threads,
    }
}

fn records_for(n: usize, db: &Option<PathBuf>, common: &Common) -> Result<Vec<TypeRecord>> {
    match db {
        Some(path) => census::ingest_db(path, n, common.coord_bytes as usize)?
            .map(|c| c.and_then(|c| TypeRecord::from_configuration(&c)))
            .collect(),
        None => census::enumerate(n, &options(common)),
    }
}

fn parse_scale(s: &str) -> Result<num_rational::BigRational> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let bad = || Error::InvalidArgument(format!("bad scale {s:?}"));
    let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
    if q == 0.into() {
        return Err(bad());
    }
    Ok(num_rational::BigRational::new(p, q))
}

fn execute(cli: &Cli) -> Result<String> {
    let oriented = cli.common.oriented;
    match &cli.command {
        Command::Analyze { file } => analyze(&load_points(file)?),
        Command::Family { id, n, scale } => {
            let family: Family = id.parse()?;
            let mut spec = FamilySpec::new(family, *n);
            if let Some(s) = scale {
                spec = spec.with_scale(parse_scale(s)?);
            }
            let conf = spec.generate()?;
            let mut text = format!("# {family} {n}\n");
            if family == Family::PolygonCenter {
                let (_, (a, b)) = family_polygon_center(*n)?;
                text.push_str(&format!("# predicted partition ({a},{b})\n"));
            }
            text.push_str(&write_points(&conf));
            Ok(text)
        }
        Command::Contract { file, r, s } => {
            let c = load_points(file)?;
            let pair = ClosePair { r: *r.min(s), s: *r.max(s) };
            Ok(write_points(&contract(&c, &pair)?))
        }
        Command::Minrep { file } => Ok(write_points(&minimal_representative(&load_points(file)?)?)),
        Command::Double { file, i, cone } => Ok(write_points(&double_point(&load_points(file)?, *i, *cone)?)),
        Command::Flip { file, a, b, c } => {
            let m = FlipMove::new(*a, *b, *c);
            match load_any(file)? {
                Input::Points(conf) => Ok(write_points(&apply_flip_geom(&conf, &m)?)),
                Input::Signs(chi) => Ok(write_chirotope(&apply_flip_chi(&chi, &m)?)),
            }
        }
        Command::Flips { file } => {
            let chi = chirotope_from(load_any(file)?)?;
            let mut text = String::new();
            for m in find_flips(&chi)? {
                let [a, b, c] = m.triple;
                text.push_str(&format!("{a} {b} {c}\n"));
            }
            Ok(text)
        }
        Command::Same { first, second } => {
            let a = chirotope_from(load_any(first)?)?;
            let b = chirotope_from(load_any(second)?)?;
            Ok(if is_isomorphic(&a, &b, oriented)? {
                "isomorphic\n".into()
            } else {
                "not isomorphic\n".into()
            })
        }
        Command::Canonical { file } => {
            let chi = chirotope_from(load_any(file)?)?;
            Ok(format!("{}\n", canonical_key(&chi, oriented)?))
        }
        Command::Census { n, db, records } => {
            let recs = records_for(*n, db, &cli.common)?;
            if let Some(path) = records {
                let lines: String = recs.iter().map(|r| r.to_line() + "\n").collect();
                fs::write(path, lines).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            }
            Ok(CensusTable::from_records(*n, &recs)?.to_tsv())
        }
        Command::Mono { n, db } => {
            let recs = census::mono_records(&records_for(*n, db, &cli.common)?);
            Ok(recs.iter().map(|r| r.to_line() + "\n").collect())
        }
        Command::Render {
            file,
            width,
            height,
            margin,
            radius,
        } => {
            let style = RenderStyle {
                width: *width,
                height: *height,
                margin: *margin,
                radius: *radius,
            };
            render_svg(&load_points(file)?, &style)
        }
        Command::Ingest { path, n } => {
            let mut text = String::new();
            for c in census::ingest_db(path, *n, cli.common.coord_bytes as usize)? {
                text.push_str(&TypeRecord::from_configuration(&c?)?.to_line());
                text.push('\n');
            }
            Ok(text)
        }
    }
}

fn analyze(c: &Configuration) -> Result<String> {
    let partition = orchard_partition(c)?;
    let hull = hull_indices(c)?.len();
    let (a, b) = partition.sizes();
    let mut text = format!("n={} hull={hull} partition=({a},{b})", c.len());
    if partition.is_monochromatic() {
        text.push_str(" mono");
    }
    text.push('\n');
    let colors: Vec<String> = partition.colors().iter().map(u8::to_string).collect();
    text.push_str(&format!("colors: {}\n", colors.join(" ")));
    let pairs: Vec<String> = infinitesimal_pairs(c)?
        .iter()
        .map(|p| format!("({},{})", p.r, p.s))
        .collect();
    text.push_str(&format!("close pairs: {}\n", pairs.join(" ")));
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("orchard").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    #[test]
    fn analyze_square_and_collinear() {
        let dir = tempfile::tempdir().unwrap();
        let sq = file(&dir, "sq.txt", "0 0\n1 0\n1 1\n0 1\n");
        let (code, out, _) = call(&["analyze", &sq]);
        assert_eq!(code, 0);
        assert_eq!(out, "n=4 hull=4 partition=(2,2)\ncolors: 0 1 0 1\nclose pairs: (0,1) (0,3) (1,2) (2,3)\n");
        let line = file(&dir, "line.txt", "0 0\n1 1\n2 2\n5 0\n");
        let (code, _, err) = call(&["analyze", &line]);
        assert_eq!(code, 3);
        assert!(err.contains("[0, 1, 2]"), "{err}");
        let junk = file(&dir, "junk.txt", "0 0\n1 x\n");
        assert_eq!(call(&["analyze", &junk]).0, 2);
    }

    #[test]
    fn flip_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let inner = file(&dir, "in.txt", "0 0\n10 0\n5 4\n5 1\n");
        assert_eq!(call(&["flip", &inner, "0", "1", "2"]).0, 4);
        let sq = file(&dir, "sq.txt", "0 0\n1 0\n1 1\n0 1\n");
        assert_eq!(call(&["contract", &sq, "0", "2"]).0, 4);
        assert_eq!(call(&["contract", &sq, "0", "1"]), (0, "1 0\n1 1\n0 1\n".into(), String::new()));
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        assert_eq!(call(&["census", "7", "--coord-bytes", "3"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }
}
