//! Exhaustive enumeration of realizable order types by one-point extension,
//! census tables by hull size and Orchard partition, and database ingestion.

mod cells;
mod db;
mod pseudo;
pub(crate) mod realize;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use db::{ingest_db, write_db, DbReader};

use crate::error::{Error, Result};
use crate::exact::{self, HPoint, Int, IntPoint};
use crate::geometry::Configuration;
use crate::ordertype::{
    canonical_key_unchecked, chirotope_of, hull_size_chi_unchecked, orchard_partition_chi_unchecked, CanonicalKey,
    Chirotope,
};
use cells::{cell_samples, MAX_POINTS};

/// One unoriented order type with an explicit realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeRecord {
    pub key: CanonicalKey,
    pub representative: Configuration,
    pub hull_size: usize,
    pub partition: (usize, usize),
}

impl TypeRecord {
    pub fn from_configuration(c: &Configuration) -> Result<Self> {
        let chi = chirotope_of(c)?;
        Ok(Self::with_chirotope(c.clone(), &chi))
    }

    fn with_chirotope(representative: Configuration, chi: &Chirotope) -> Self {
        TypeRecord {
            key: canonical_key_unchecked(chi, false),
            representative,
            hull_size: hull_size_chi_unchecked(chi),
            partition: orchard_partition_chi_unchecked(chi).sizes(),
        }
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn is_monochromatic(&self) -> bool {
        self.partition.0 == 0
    }

    /// `key<TAB>hull<TAB>(a,b)<TAB>x y;x y;...`
    pub fn to_line(&self) -> String {
        let pts: Vec<String> = self.representative.points().iter().map(|p| format!("{} {}", p.x, p.y)).collect();
        format!(
            "{}\t{}\t({},{})\t{}",
            self.key.to_hex(),
            self.hull_size,
            self.partition.0,
            self.partition.1,
            pts.join(";")
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Wall-clock limit for the whole enumeration.
    pub budget: Option<Duration>,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

/// The triangle, the unique 3-point order type.
pub fn triangle() -> TypeRecord {
    TypeRecord::from_configuration(&Configuration::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap()).unwrap()
}

struct Candidate {
    key: CanonicalKey,
    parent: usize,
    sample: HPoint,
}

fn candidates_of(parent_idx: usize, conf: &Configuration) -> Vec<Candidate> {
    let pts = conf.ints();
    let chi = chirotope_of(conf).expect("records are generic");
    let mut local: HashMap<CanonicalKey, ()> = HashMap::new();
    let mut out = Vec::new();
    for cell in cell_samples(pts) {
        let ext = chi.extended(|a, b| cell.sign(pair_index(pts.len(), a, b)));
        let key = canonical_key_unchecked(&ext, false);
        if local.insert(key.clone(), ()).is_none() {
            out.push(Candidate {
                key,
                parent: parent_idx,
                sample: cell.point,
            });
        }
    }
    out
}

/// Index of pair `a < b` in lexicographic order of pairs of `0..n`.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Scales the parent by the sample's denominator, appends the sample and
/// shrinks coordinates while the order type is kept.
fn child_points(parent: &[IntPoint], s: &HPoint) -> Vec<IntPoint> {
    let mut pts: Vec<IntPoint> = parent
        .iter()
        .map(|p| IntPoint {
            x: p.x.mul(&s.w),
            y: p.y.mul(&s.w),
        })
        .collect();
    pts.push(IntPoint {
        x: s.x.clone(),
        y: s.y.clone(),
    });
    normalize(&mut pts);
    reduce(pts)
}

/// Translates to the nonnegative quadrant touching both axes and divides out the gcd.
fn normalize(pts: &mut [IntPoint]) {
    let minx = pts.iter().map(|p| p.x.clone()).min().unwrap();
    let miny = pts.iter().map(|p| p.y.clone()).min().unwrap();
    for p in pts.iter_mut() {
        p.x = p.x.sub(&minx);
        p.y = p.y.sub(&miny);
    }
    let g = pts.iter().fold(Int::zero(), |g, p| g.gcd(&p.x).gcd(&p.y));
    if g.signum() > 0 && g != Int::Small(1) {
        for p in pts.iter_mut() {
            p.x = p.x.div_exact(&g);
            p.y = p.y.div_exact(&g);
        }
    }
}

fn same_order_type(a: &[IntPoint], b: &[IntPoint]) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if exact::orient(&a[i], &a[j], &a[k]) != exact::orient(&b[i], &b[j], &b[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Coarsest power-of-two rounding of the coordinates that keeps every orientation.
fn reduce(pts: Vec<IntPoint>) -> Vec<IntPoint> {
    let bits = pts.iter().map(|p| p.x.bits().max(p.y.bits())).max().unwrap_or(0);
    for shift in (1..bits).rev() {
        let half = Int::Small(1).shl(shift - 1);
        let round = |v: &Int| Int::from_big((v.add(&half)).to_big() >> shift as usize);
        let cand: Vec<IntPoint> = pts
            .iter()
            .map(|p| IntPoint {
                x: round(&p.x),
                y: round(&p.y),
            })
            .collect();
        if same_order_type(&pts, &cand) {
            let mut cand = cand;
            normalize(&mut cand);
            return cand;
        }
    }
    pts
}

fn check_budget(start: Instant, opts: &EnumerateOptions) -> Result<()> {
    match opts.budget {
        Some(b) if start.elapsed() > b => Err(Error::BudgetExceeded),
        _ => Ok(()),
    }
}

/// All distinct unoriented order types obtained by adding one point to `rec`.
pub fn extend_all(rec: &TypeRecord) -> Result<Vec<TypeRecord>> {
    check_extendable(rec)?;
    let mut out: Vec<TypeRecord> = candidates_of(0, &rec.representative)
        .into_iter()
        .map(|c| TypeRecord::from_configuration(&child_configuration(&rec.representative, &c.sample)))
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

fn check_extendable(rec: &TypeRecord) -> Result<()> {
    let n = rec.len();
    if !(3..MAX_POINTS).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "extension needs a record with 3..{} points, got {n}",
            MAX_POINTS - 1
        )));
    }
    rec.representative.require_generic()
}

fn child_configuration(parent: &Configuration, sample: &HPoint) -> Configuration {
    Configuration::from_int_points(child_points(parent.ints(), sample)).expect("non-empty")
}

const CHUNK: usize = 64;

/// Realizations kept per type on intermediate levels. Which cells a
/// realization's arrangement has depends on its coordinates, so a single
/// realization per type can miss extensions.
const REALIZATIONS_PER_TYPE: usize = 4;

/// A type together with several realizations; `realizations[0]` is the representative.
struct Node {
    record: TypeRecord,
    realizations: Vec<Configuration>,
}

/// The next level: all types with one more point, sorted by key.
pub fn extend_level(parents: &[TypeRecord], opts: &EnumerateOptions) -> Result<Vec<TypeRecord>> {
    let start = Instant::now();
    for p in parents {
        check_extendable(p)?;
    }
    let nodes: Vec<Node> = parents
        .iter()
        .map(|r| Node {
            record: r.clone(),
            realizations: vec![r.representative.clone()],
        })
        .collect();
    let next = run_in_pool(opts, || extend_nodes(&nodes, 1, opts, start))?;
    Ok(next.into_iter().map(|n| n.record).collect())
}

fn run_in_pool<T: Send>(opts: &EnumerateOptions, f: impl FnOnce() -> T + Send) -> T {
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn extend_nodes(parents: &[Node], keep: usize, opts: &EnumerateOptions, start: Instant) -> Result<Vec<Node>> {
    let jobs: Vec<(usize, &Configuration)> = parents
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.realizations.iter().map(move |r| (i, r)))
        .collect();
    // The first candidates in (parent, realization, cell) order win, whatever
    // the schedule; at most one realization per parent type is kept.
    let mut winners: HashMap<CanonicalKey, Vec<Candidate>> = HashMap::new();
    for (ci, chunk) in jobs.chunks(CHUNK).enumerate() {
        check_budget(start, opts)?;
        let found: Vec<Vec<Candidate>> = chunk
            .par_iter()
            .enumerate()
            .map(|(i, (_, conf))| candidates_of(ci * CHUNK + i, conf))
            .collect();
        for c in found.into_iter().flatten() {
            let slot = winners.entry(c.key.clone()).or_default();
            let node = jobs[c.parent].0;
            if slot.len() < keep && slot.iter().all(|o| jobs[o.parent].0 != node) {
                slot.push(c);
            }
        }
    }
    check_budget(start, opts)?;
    let mut groups: Vec<Vec<Candidate>> = winners.into_values().collect();
    groups.sort_by(|a, b| a[0].key.cmp(&b[0].key));
    let mut out: Vec<Node> = groups
        .par_iter()
        .map(|group| {
            let mut realizations: Vec<Configuration> = Vec::with_capacity(group.len());
            for c in group {
                let conf = child_configuration(jobs[c.parent].1, &c.sample);
                if !realizations.contains(&conf) {
                    realizations.push(conf);
                }
            }
            let chi = chirotope_of(&realizations[0]).expect("reduction keeps genericity");
            let record = TypeRecord::with_chirotope(realizations[0].clone(), &chi);
            debug_assert_eq!(record.key, group[0].key);
            Node { record, realizations }
        })
        .collect();
    check_budget(start, opts)?;
    out.extend(realize_missing(parents, &out, opts, start)?);
    out.sort_by(|a, b| a.record.key.cmp(&b.record.key));
    Ok(out)
}

/// Attempts per parent when realizing a sign extension.
const REALIZE_ATTEMPTS: usize = 4;

/// Sign extensions of the parents that no sampled cell produced, realized by
/// direct search where possible. Those that resist stay out; at nine points
/// some valid chirotopes are not realizable at all.
fn realize_missing(parents: &[Node], found: &[Node], opts: &EnumerateOptions, start: Instant) -> Result<Vec<Node>> {
    let known: HashSet<&CanonicalKey> = found.iter().map(|n| &n.record.key).collect();
    // Every parent that admits the sign extension, in parent order.
    let mut missing: HashMap<CanonicalKey, Vec<(usize, Chirotope)>> = HashMap::new();
    for (ci, chunk) in parents.chunks(CHUNK).enumerate() {
        check_budget(start, opts)?;
        let exts: Vec<Vec<(usize, CanonicalKey, Chirotope)>> = chunk
            .par_iter()
            .enumerate()
            .map(|(i, node)| {
                let chi = chirotope_of(&node.record.representative).expect("records are generic");
                pseudo::sign_extensions(&chi)
                    .into_iter()
                    .map(|e| (ci * CHUNK + i, canonical_key_unchecked(&e, false), e))
                    .filter(|(_, k, _)| !known.contains(k))
                    .collect()
            })
            .collect();
        for (p, k, e) in exts.into_iter().flatten() {
            let slot = missing.entry(k).or_default();
            if slot.iter().all(|(q, _)| *q != p) {
                slot.push((p, e));
            }
        }
    }
    let mut missing: Vec<(CanonicalKey, Vec<(usize, Chirotope)>)> = missing.into_iter().collect();
    missing.sort_by(|a, b| a.0.cmp(&b.0));
    check_budget(start, opts)?;
    let realized: Vec<Option<Node>> = missing
        .par_iter()
        .enumerate()
        .map(|(idx, (key, sources))| {
            let mut rng = ChaCha8Rng::seed_from_u64(idx as u64);
            // The representative first, then the other stored realizations,
            // each with the extension relabeled to match it.
            for (p, ext) in sources {
                let node = &parents[*p];
                let first = std::iter::once((&node.record.representative, ext.clone()));
                let others = node.realizations.iter().skip(1).filter_map(|r| {
                    let chi = chirotope_of(r).expect("records are generic");
                    pseudo::sign_extensions(&chi)
                        .into_iter()
                        .find(|e| canonical_key_unchecked(e, false) == *key)
                        .map(|e| (r, e))
                });
                for (real, ext) in first.chain(others) {
                    let start_pts = starting_points(real, &ext);
                    if let Some(mut pts) = realize::realize_near(&ext, &start_pts, REALIZE_ATTEMPTS, &mut rng) {
                        normalize(&mut pts);
                        let conf = Configuration::from_int_points(reduce(pts)).expect("non-empty");
                        let chi = chirotope_of(&conf).expect("certified realization is generic");
                        let record = TypeRecord::with_chirotope(conf.clone(), &chi);
                        debug_assert_eq!(&record.key, key);
                        return Some(Node {
                            record,
                            realizations: vec![conf],
                        });
                    }
                }
            }
            None
        })
        .collect();
    Ok(realized.into_iter().flatten().collect())
}

/// The parent's points, plus the new point at a sample of the cell whose
/// sign column is closest to the one `ext` prescribes.
fn starting_points(parent: &Configuration, ext: &Chirotope) -> Vec<(f64, f64)> {
    let pts = parent.ints();
    let n = pts.len();
    let mut out: Vec<(f64, f64)> = pts.iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let best = cell_samples(pts)
        .into_iter()
        .min_by_key(|cell| {
            let mut off = 0;
            for a in 0..n {
                for b in a + 1..n {
                    off += (cell.sign(pair_index(n, a, b)) != ext.sign(a, b, n)) as usize;
                }
            }
            off
        })
        .expect("arrangements have cells");
    let w = best.point.w.to_f64();
    out.push((best.point.x.to_f64() / w, best.point.y.to_f64() / w));
    out
}

/// Keys of all valid (not necessarily realizable) chirotopes obtained by
/// adding one point to a parent, sorted. Up to eight points every such
/// chirotope is realizable.
pub fn sign_extension_keys(parents: &[TypeRecord]) -> Vec<CanonicalKey> {
    let keys: HashSet<CanonicalKey> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let chi = chirotope_of(&p.representative).expect("records are generic");
            pseudo::sign_extensions(&chi)
                .into_iter()
                .map(|e| canonical_key_unchecked(&e, false))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut v: Vec<_> = keys.into_iter().collect();
    v.sort();
    v
}

/// All unoriented order types of `n` points, sorted by key.
pub fn enumerate(n: usize, opts: &EnumerateOptions) -> Result<Vec<TypeRecord>> {
    enumerate_levels(n, opts, |_, _| ())
}

/// Like [`enumerate`], reporting each finished level to `on_level`.
pub fn enumerate_levels(
    n: usize,
    opts: &EnumerateOptions,
    mut on_level: impl FnMut(usize, &[TypeRecord]),
) -> Result<Vec<TypeRecord>> {
    if !(3..MAX_POINTS).contains(&n) {
        return Err(Error::InvalidArgument(format!("enumeration supports 3..{} points", MAX_POINTS - 1)));
    }
    let start = Instant::now();
    let tri = triangle();
    let mut level = vec![Node {
        realizations: vec![tri.representative.clone()],
        record: tri,
    }];
    let mut records: Vec<TypeRecord> = vec![level[0].record.clone()];
    on_level(3, &records);
    for m in 4..=n {
        let keep = if m == n { 1 } else { REALIZATIONS_PER_TYPE };
        level = run_in_pool(opts, || extend_nodes(&level, keep, opts, start))?;
        records = level.iter().map(|n| n.record.clone()).collect();
        on_level(m, &records);
    }
    Ok(records)
}

/// Type counts by hull size and Orchard partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub n: usize,
    pub counts: BTreeMap<(usize, (usize, usize)), usize>,
    pub total: usize,
}

impl CensusTable {
    pub fn from_records(n: usize, records: &[TypeRecord]) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for r in records {
            if r.len() != n {
                return Err(Error::InvalidArgument(format!("record with {} points in a {n}-point census", r.len())));
            }
            *counts.entry((r.hull_size, r.partition)).or_insert(0) += 1;
        }
        Ok(CensusTable {
            n,
            counts,
            total: records.len(),
        })
    }

    pub fn get(&self, hull: usize, partition: (usize, usize)) -> usize {
        self.counts.get(&(hull, partition)).copied().unwrap_or(0)
    }

    pub fn partitions(&self) -> Vec<(usize, usize)> {
        (0..=self.n / 2).map(|a| (a, self.n - a)).collect()
    }

    pub fn column_sum(&self, partition: (usize, usize)) -> usize {
        (3..=self.n).map(|h| self.get(h, partition)).sum()
    }

    /// Tab-separated: one row per hull size, one column per partition.
    pub fn to_tsv(&self) -> String {
        let parts = self.partitions();
        let mut s = String::from("hull");
        for &(a, b) in &parts {
            write!(s, "\t({a},{b})").unwrap();
            if a == 0 {
                s.push_str(" mono");
            }
        }
        s.push('\n');
        for h in 3..=self.n {
            write!(s, "{h}").unwrap();
            for &p in &parts {
                write!(s, "\t{}", self.get(h, p)).unwrap();
            }
            s.push('\n');
        }
        s.push_str("sum");
        for &p in &parts {
            write!(s, "\t{}", self.column_sum(p)).unwrap();
        }
        writeln!(s, "\ntotal\t{}", self.total).unwrap();
        s
    }
}

pub fn census_table(n: usize, opts: &EnumerateOptions) -> Result<CensusTable> {
    CensusTable::from_records(n, &enumerate(n, opts)?)
}

/// Monochromatic records, sorted by hull size then key.
pub fn mono_records(records: &[TypeRecord]) -> Vec<TypeRecord> {
    let mut out: Vec<TypeRecord> = records.iter().filter(|r| r.is_monochromatic()).cloned().collect();
    out.sort_by(|a, b| (a.hull_size, &a.key).cmp(&(b.hull_size, &b.key)));
    out
}

pub fn mono_list(n: usize, opts: &EnumerateOptions) -> Result<Vec<TypeRecord>> {
    Ok(mono_records(&enumerate(n, opts)?))
}
