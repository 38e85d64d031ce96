//! Census screening: ingest graphs, fingerprint them in parallel, group by an
//! exact invariant key and mine pairs within each class.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::generate::builtin_generate;
use crate::graph::graph6::parse_graph6;
use crate::graph::Graph;
use crate::shadows::{compare_fingerprints, fingerprint, Fingerprint, PairReport, DEFAULT_KMAX};
use crate::zeta::DEFAULT_ORDER;

/// Smallest series order a screen accepts; divergence orders up to 8 must
/// be visible in the pair reports.
pub const MIN_SCREEN_ORDER: usize = 8;
pub const DEFAULT_PAIR_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Stdin,
    /// All connected graphs on `n <= 7` vertices up to isomorphism.
    Builtin(usize),
    Lines(Vec<String>),
}

/// One component of a grouping key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KeyPart {
    A,
    L,
    S,
    Shadows,
    Hashimoto,
}

impl FromStr for KeyPart {
    type Err = Error;
    fn from_str(s: &str) -> Result<KeyPart> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(KeyPart::A),
            "l" => Ok(KeyPart::L),
            "s" => Ok(KeyPart::S),
            "shadows" => Ok(KeyPart::Shadows),
            "hashimoto" => Ok(KeyPart::Hashimoto),
            _ => Err(Error::Precondition(format!(
                "unknown key part {s:?} (expected A, L, S, shadows or hashimoto)"
            ))),
        }
    }
}

impl fmt::Display for KeyPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KeyPart::A => "A",
            KeyPart::L => "L",
            KeyPart::S => "S",
            KeyPart::Shadows => "shadows",
            KeyPart::Hashimoto => "hashimoto",
        })
    }
}

/// Parses a comma-separated key such as `A,L,S`.
pub fn parse_key(s: &str) -> Result<BTreeSet<KeyPart>> {
    let key = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(KeyPart::from_str)
        .collect::<Result<BTreeSet<_>>>()?;
    if key.is_empty() {
        return Err(Error::Precondition("grouping key is empty".into()));
    }
    Ok(key)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected_only: bool,
    pub irregular_only: bool,
    /// Every vertex degree must lie in `[min_degree, max_degree]`.
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        if self.connected_only && !g.is_connected() {
            return false;
        }
        if self.irregular_only && g.is_regular().is_some() {
            return false;
        }
        let deg = g.degrees();
        if let Some(lo) = self.min_degree {
            if deg.iter().any(|&d| d < lo) {
                return false;
            }
        }
        if let Some(hi) = self.max_degree {
            if deg.iter().any(|&d| d > hi) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenConfig {
    pub input: InputSource,
    pub filters: Filters,
    pub key: BTreeSet<KeyPart>,
    pub order: usize,
    pub kmax: usize,
    pub jobs: usize,
    /// Append-only fingerprint store.
    pub store: Option<PathBuf>,
    pub skip_malformed: bool,
    /// Most pair reports emitted per class.
    pub pair_cap: usize,
}

impl ScreenConfig {
    pub fn new(input: InputSource) -> ScreenConfig {
        ScreenConfig {
            input,
            filters: Filters::default(),
            key: [KeyPart::A, KeyPart::L, KeyPart::S].into_iter().collect(),
            order: DEFAULT_ORDER,
            kmax: DEFAULT_KMAX,
            jobs: 1,
            store: None,
            skip_malformed: false,
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.key.is_empty() {
            return Err(Error::Precondition("grouping key is empty".into()));
        }
        if self.order < MIN_SCREEN_ORDER {
            return Err(Error::Precondition(format!(
                "series order {} is below {MIN_SCREEN_ORDER}",
                self.order
            )));
        }
        if self.jobs == 0 {
            return Err(Error::Precondition("need at least one worker".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MalformedLine {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub schema: u32,
    /// SHA-256 of the exact key text, hex.
    pub key_digest: String,
    pub key: Vec<KeyPart>,
    pub members: Vec<String>,
    pub pairs: Vec<PairReport>,
    pub pairs_truncated: bool,
}

/// How many within-class pairs each invariant tells apart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationCounts {
    pub degrees: usize,
    pub a: usize,
    pub l: usize,
    pub s: usize,
    pub shadows: usize,
    pub hashimoto_det: usize,
    pub correction_series: usize,
    /// Pairs that agree on every recorded invariant.
    pub unseparated: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenSummary {
    pub graphs_read: usize,
    pub malformed: usize,
    pub filtered_out: usize,
    pub fingerprinted: usize,
    pub classes: usize,
    pub largest_class: usize,
    pub pairs_examined: usize,
    pub separated_by: SeparationCounts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenOutput {
    pub classes: Vec<ClassRecord>,
    pub summary: ScreenSummary,
    pub malformed: Vec<MalformedLine>,
    pub fingerprints: Vec<Fingerprint>,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Exact text of the invariants named in `key`.
pub fn key_text(fp: &Fingerprint, key: &BTreeSet<KeyPart>) -> String {
    let mut out = String::new();
    for part in key {
        let body = match part {
            KeyPart::A => json(&fp.charpoly_a),
            KeyPart::L => json(&fp.charpoly_l),
            KeyPart::S => json(&fp.charpoly_s),
            KeyPart::Shadows => json(&fp.shadows),
            KeyPart::Hashimoto => format!("{}|{}", json(&fp.hashimoto_det), json(&fp.correction_series)),
        };
        out.push_str(&format!("{part}={body};"));
    }
    out
}

pub fn key_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn read_numbered_lines(src: &InputSource) -> Result<Vec<(usize, String)>> {
    let text = match src {
        InputSource::File(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        InputSource::Stdin => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        InputSource::Lines(v) => v.join("\n"),
        InputSource::Builtin(_) => unreachable!("builtin input has no text form"),
    };
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.to_string()))
        .collect())
}

/// Parses the configured input; malformed lines either abort or are
/// collected, depending on `skip_malformed`.
pub fn read_input(src: &InputSource, skip_malformed: bool) -> Result<(Vec<Graph>, Vec<MalformedLine>)> {
    if let InputSource::Builtin(n) = src {
        return Ok((builtin_generate(*n)?, Vec::new()));
    }
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (line, text) in read_numbered_lines(src)? {
        match parse_graph6(&text) {
            Ok(g) => graphs.push(g),
            Err(e) if skip_malformed => bad.push(MalformedLine { line, message: e.to_string() }),
            Err(e) => return Err(Error::Line { line, message: e.to_string() }),
        }
    }
    Ok((graphs, bad))
}

/// Fingerprints in input order regardless of the worker count.
pub fn fingerprint_all(graphs: &[Graph], order: usize, kmax: usize, jobs: usize) -> Result<Vec<Fingerprint>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(pool.install(|| graphs.par_iter().map(|g| fingerprint(g, order, kmax)).collect()))
}

fn tally(r: &PairReport, c: &mut SeparationCounts) {
    let a = &r.agree;
    c.degrees += !a.degrees as usize;
    c.a += !a.a as usize;
    c.l += !a.l as usize;
    c.s += !a.s as usize;
    c.shadows += !a.all_shadows_agree() as usize;
    c.hashimoto_det += !a.hashimoto_det as usize;
    c.correction_series += !a.correction_series as usize;
    c.unseparated += a.everything() as usize;
}

/// Groups fingerprints into classes of size at least two. Classes appear in
/// order of their first member; members keep input order.
pub fn group_fingerprints(
    fps: &[Fingerprint],
    key: &BTreeSet<KeyPart>,
    pair_cap: usize,
) -> (Vec<ClassRecord>, SeparationCounts, usize) {
    // digest -> list of (exact key text, member indices); the text confirms
    // every digest match.
    let mut buckets: HashMap<String, Vec<(String, Vec<usize>)>> = HashMap::new();
    for (i, fp) in fps.iter().enumerate() {
        let text = key_text(fp, key);
        let digest = key_digest(&text);
        let bucket = buckets.entry(digest).or_default();
        match bucket.iter_mut().find(|(t, _)| *t == text) {
            Some((_, idx)) => idx.push(i),
            None => bucket.push((text, vec![i])),
        }
    }
    let mut groups: Vec<(String, Vec<usize>)> = buckets
        .into_iter()
        .flat_map(|(d, b)| b.into_iter().map(move |(_, idx)| (d.clone(), idx)))
        .filter(|(_, idx)| idx.len() >= 2)
        .collect();
    groups.sort_by_key(|(_, idx)| idx[0]);

    let mut counts = SeparationCounts::default();
    let mut examined = 0;
    let classes = groups
        .into_iter()
        .map(|(key_digest, idx)| {
            let mut pairs = Vec::new();
            let mut truncated = false;
            'outer: for (a, &i) in idx.iter().enumerate() {
                for &j in &idx[a + 1..] {
                    if pairs.len() == pair_cap {
                        truncated = true;
                        break 'outer;
                    }
                    let r = compare_fingerprints(&fps[i], &fps[j]);
                    tally(&r, &mut counts);
                    pairs.push(r);
                }
            }
            examined += pairs.len();
            ClassRecord {
                schema: crate::shadows::SCHEMA_VERSION,
                key_digest,
                key: key.iter().copied().collect(),
                members: idx.iter().map(|&i| fps[i].graph6.clone()).collect(),
                pairs,
                pairs_truncated: truncated,
            }
        })
        .collect();
    (classes, counts, examined)
}

pub fn run_screen(cfg: &ScreenConfig) -> Result<ScreenOutput> {
    cfg.validate()?;
    let (graphs, malformed) = read_input(&cfg.input, cfg.skip_malformed)?;
    let read = graphs.len() + malformed.len();
    let kept: Vec<Graph> = graphs.into_iter().filter(|g| cfg.filters.accepts(g)).collect();
    let filtered_out = read - malformed.len() - kept.len();
    let fingerprints = fingerprint_all(&kept, cfg.order, cfg.kmax, cfg.jobs)?;
    if let Some(path) = &cfg.store {
        append_store(path, &fingerprints)?;
    }
    let (classes, separated_by, pairs_examined) = group_fingerprints(&fingerprints, &cfg.key, cfg.pair_cap);
    let summary = ScreenSummary {
        graphs_read: read,
        malformed: malformed.len(),
        filtered_out,
        fingerprinted: fingerprints.len(),
        classes: classes.len(),
        largest_class: classes.iter().map(|c| c.members.len()).max().unwrap_or(0),
        pairs_examined,
        separated_by,
    };
    Ok(ScreenOutput { classes, summary, malformed, fingerprints })
}

/// Appends one JSON line per fingerprint.
pub fn append_store(path: &Path, fps: &[Fingerprint]) -> Result<()> {
    let mut f = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut buf = String::new();
    for fp in fps {
        buf.push_str(&fp.to_json_line());
        buf.push('\n');
    }
    f.write_all(buf.as_bytes())?;
    Ok(())
}

pub fn load_store(path: &Path) -> Result<Vec<Fingerprint>> {
    let f = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fp = Fingerprint::from_json_line(&line).map_err(|e| Error::Line {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(fp);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph6::encode_graph6;

    fn lines(v: &[&str]) -> InputSource {
        InputSource::Lines(v.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn example_a_forms_one_class() {
        let out = run_screen(&ScreenConfig::new(lines(&["H?ABePt", "H?B@`jh"]))).unwrap();
        assert_eq!(out.classes.len(), 1);
        let r = &out.classes[0].pairs[0];
        assert!(r.agree.all_shadows_differ());
        assert_eq!(r.divergence.det_first_diff_order, Some(8));
    }

    #[test]
    fn relabeled_k4_agrees_everywhere() {
        let k4 = Graph::complete(4);
        let p = k4.relabel(&[2, 0, 3, 1]);
        let src = InputSource::Lines(vec![encode_graph6(&k4), encode_graph6(&p)]);
        let out = run_screen(&ScreenConfig::new(src)).unwrap();
        assert_eq!(out.classes.len(), 1);
        assert!(out.classes[0].pairs[0].agree.everything());
        assert_eq!(out.summary.separated_by.unseparated, 1);
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let src = lines(&["Bw", "", "not graph6 at all~~~", "Bw"]);
        let mut cfg = ScreenConfig::new(src);
        match run_screen(&cfg) {
            Err(Error::Line { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        cfg.skip_malformed = true;
        let out = run_screen(&cfg).unwrap();
        assert_eq!(out.malformed.len(), 1);
        assert_eq!(out.malformed[0].line, 3);
        assert_eq!(out.summary.graphs_read, 3);
        assert_eq!(out.classes.len(), 1);
    }

    #[test]
    fn config_validation() {
        let mut cfg = ScreenConfig::new(InputSource::Builtin(3));
        cfg.order = 7;
        assert!(run_screen(&cfg).is_err());
        assert!(parse_key("").is_err());
        assert!(parse_key("A,Q").is_err());
        assert_eq!(parse_key("shadows,A").unwrap().len(), 2);
    }

    #[test]
    fn filters() {
        let mut cfg = ScreenConfig::new(InputSource::Builtin(4));
        cfg.filters.irregular_only = true;
        let out = run_screen(&cfg).unwrap();
        // C4 and K4 are the regular ones
        assert_eq!(out.summary.fingerprinted, 4);
        assert_eq!(out.summary.filtered_out, 2);
    }
}
