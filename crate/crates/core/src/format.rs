//! Text formats.
//!
//! Points: optional `#` comment lines, then one point per line as `x y`, each
//! coordinate an integer or a fraction `p/q`. Chirotopes: `n=<int>` on the
//! first line, then one `+`/`-` per increasing triple in lexicographic order.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{Configuration, Point};
use crate::ordertype::Chirotope;

fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let err = |m: &str| Error::Parse {
        line,
        message: format!("{m}: {tok:?}"),
    };
    let (num, den) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

pub fn parse_points(text: &str) -> Result<Configuration> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two coordinates, found {}", toks.len()),
            });
        }
        points.push(Point::new(parse_rational(toks[0], line)?, parse_rational(toks[1], line)?));
    }
    if points.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no points".into(),
        });
    }
    Configuration::new(points)
}

pub fn write_points(c: &Configuration) -> String {
    let mut s = String::new();
    for p in c.points() {
        writeln!(s, "{} {}", p.x, p.y).unwrap();
    }
    s
}

pub fn parse_chirotope(text: &str) -> Result<Chirotope> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing n=<int> header".into(),
    })?;
    let n: usize = head
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or(Error::Parse {
            line: 1,
            message: format!("bad header {head:?}"),
        })?;
    let body = lines.next().unwrap_or("");
    let signs = body
        .chars()
        .map(|ch| match ch {
            '+' => Ok(1i8),
            '-' => Ok(-1i8),
            _ => Err(Error::Parse {
                line: 2,
                message: format!("unexpected sign character {ch:?}"),
            }),
        })
        .collect::<Result<Vec<i8>>>()?;
    Chirotope::from_triple_signs(n, &signs)
}

pub fn write_chirotope(chi: &Chirotope) -> String {
    let signs: String = chi
        .triple_signs()
        .into_iter()
        .map(|s| if s > 0 { '+' } else { '-' })
        .collect();
    format!("n={}\n{}\n", chi.len(), signs)
}
