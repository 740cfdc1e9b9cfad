//! Hypergraphs, Steiner system validation and the built-in block tables.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex universe plus a list of distinct blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    blocks: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph; block members keep their given order.
    pub fn new<S: AsRef<str>>(vertices: &[S], blocks: &[Vec<S>]) -> Result<Self> {
        let mut h = Hypergraph { labels: Vec::new(), index: HashMap::new(), blocks: Vec::new() };
        for v in vertices {
            let v = v.as_ref();
            if h.index.contains_key(v) {
                return Err(Error::Format(format!("duplicate vertex {v}")));
            }
            h.index.insert(v.to_string(), h.labels.len());
            h.labels.push(v.to_string());
        }
        let mut seen = BTreeSet::new();
        for b in blocks {
            let mut ids = Vec::with_capacity(b.len());
            for x in b {
                let id =
                    h.index.get(x.as_ref()).copied().ok_or_else(|| Error::Format(format!("block member {} not a vertex", x.as_ref())))?;
                if ids.contains(&id) {
                    return Err(Error::Format(format!("repeated member {} in block", x.as_ref())));
                }
                ids.push(id);
            }
            if ids.len() < 2 {
                return Err(Error::Format("blocks need at least two vertices".into()));
            }
            let key: BTreeSet<usize> = ids.iter().copied().collect();
            if !seen.insert(key) {
                return Err(Error::Format("duplicate block".into()));
            }
            h.blocks.push(ids);
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.blocks[b].contains(&v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.blocks.iter().filter(|b| b.contains(&v)).count()
    }

    /// Display name of a block: member labels concatenated, comma-joined if any label is longer than one character.
    pub fn block_label(&self, b: usize) -> String {
        let parts: Vec<&str> = self.blocks[b].iter().map(|&v| self.labels[v].as_str()).collect();
        if parts.iter().all(|p| p.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    pub fn block_index(&self, label: &str) -> Option<usize> {
        (0..self.blocks.len()).find(|&b| self.block_label(b) == label)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.blocks.iter().all(|b| b.len() == k)
    }

    /// One block per line, labels separated by spaces.
    pub fn to_block_list(&self) -> String {
        self.blocks.iter().map(|b| b.iter().map(|&v| self.labels[v].as_str()).join(" ")).join("\n") + "\n"
    }
}

/// Parses a block list: one block per line, whitespace-separated labels, `#` comments.
/// Vertices are ordered by first appearance.
pub fn hypergraph_from_block_list(text: &str) -> Result<Hypergraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut blocks: Vec<Vec<String>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<String> = content.split_whitespace().map(str::to_string).collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() < 2 {
            return Err(Error::Parse { line: i + 1, msg: "a block needs at least two labels".into() });
        }
        for t in &toks {
            if !vertices.contains(t) {
                vertices.push(t.clone());
            }
        }
        blocks.push(toks);
    }
    Hypergraph::new(&vertices, &blocks)
}

/// Parameters `t < k < n` of a Steiner system `S(t,k,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinerDescriptor {
    pub t: usize,
    pub k: usize,
    pub n: usize,
}

impl SteinerDescriptor {
    pub fn new(t: usize, k: usize, n: usize) -> Result<Self> {
        if !(0 < t && t < k && k < n) {
            return Err(Error::Precondition(format!("need 0 < t < k < n, got ({t},{k},{n})")));
        }
        Ok(Self { t, k, n })
    }
}

/// Outcome of [`validate_steiner`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerValidation {
    pub valid: bool,
    /// A `t`-subset covered zero or several times, when that is the failure.
    pub witness: Option<Vec<String>>,
    pub reason: Option<String>,
}

impl SteinerValidation {
    fn fail(reason: String, witness: Option<Vec<String>>) -> Self {
        Self { valid: false, witness, reason: Some(reason) }
    }
}

/// Checks block sizes, vertex count and that every `t`-subset lies in exactly one block.
pub fn validate_steiner(h: &Hypergraph, d: SteinerDescriptor) -> SteinerValidation {
    if h.n() != d.n {
        return SteinerValidation::fail(format!("{} vertices, expected {}", h.n(), d.n), None);
    }
    if let Some(b) = (0..h.blocks().len()).find(|&b| h.blocks()[b].len() != d.k) {
        return SteinerValidation::fail(format!("block {} has size {}, expected {}", h.block_label(b), h.blocks()[b].len(), d.k), None);
    }
    let mut cover: HashMap<Vec<usize>, usize> = HashMap::new();
    for b in h.blocks() {
        let mut sorted = b.clone();
        sorted.sort_unstable();
        for sub in sorted.into_iter().combinations(d.t) {
            *cover.entry(sub).or_default() += 1;
        }
    }
    for sub in (0..h.n()).combinations(d.t) {
        let c = cover.get(&sub).copied().unwrap_or(0);
        if c != 1 {
            let w: Vec<String> = sub.iter().map(|&v| h.label(v).to_string()).collect();
            return SteinerValidation::fail(format!("subset covered {c} times"), Some(w));
        }
    }
    SteinerValidation { valid: true, witness: None, reason: None }
}

/// Names of the built-in block tables.
pub const BUILTIN_SYSTEMS: [&str; 5] = ["S237", "S239", "S348", "S3410", "PG3"];

const S237: [&str; 7] = ["123", "147", "156", "246", "257", "345", "367"];

const S239: [&str; 12] = ["123", "456", "789", "147", "258", "369", "159", "267", "348", "168", "249", "357"];

const S348: [&str; 14] = ["1248", "2358", "3468", "4578", "1568", "2678", "1378", "3567", "1467", "1257", "1236", "2347", "1345", "2456"];

const S3410: [&str; 30] = [
    "1245", "2356", "3467", "4578", "5689", "6790", "1780", "1289", "2390", "1340", "1237", "2348", "3459", "4560", "1567", "2678", "3789",
    "4890", "1590", "1260", "1358", "2469", "3570", "1468", "2579", "3680", "1479", "2580", "1369", "2470",
];

const PG3: [&str; 13] = ["ABCD", "A123", "A456", "A789", "B147", "B258", "B369", "C159", "C267", "C348", "D168", "D249", "D357"];

fn from_table(vertices: &str, table: &[&str]) -> Hypergraph {
    let vs: Vec<String> = vertices.chars().map(String::from).collect();
    let bs: Vec<Vec<String>> = table.iter().map(|b| b.chars().map(String::from).collect()).collect();
    Hypergraph::new(&vs, &bs).expect("built-in table is well formed")
}

/// Returns a built-in block table by name.
pub fn builtin_system(name: &str) -> Result<Hypergraph> {
    Ok(match name {
        "S237" => from_table("1234567", &S237),
        "S239" => from_table("123456789", &S239),
        "S348" => from_table("12345678", &S348),
        "S3410" => from_table("1234567890", &S3410),
        "PG3" => from_table("ABCD123456789", &PG3),
        _ => return Err(Error::UnknownSystem(name.to_string())),
    })
}

/// The Steiner parameters each built-in table realises.
pub fn builtin_descriptor(name: &str) -> Result<SteinerDescriptor> {
    let (t, k, n) = match name {
        "S237" => (2, 3, 7),
        "S239" => (2, 3, 9),
        "S348" => (3, 4, 8),
        "S3410" => (3, 4, 10),
        "PG3" => (2, 4, 13),
        _ => return Err(Error::UnknownSystem(name.to_string())),
    };
    SteinerDescriptor::new(t, k, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_block(h: &Hypergraph, s: &str) -> bool {
        let want: BTreeSet<String> = s.chars().map(String::from).collect();
        h.blocks().iter().any(|b| b.iter().map(|&v| h.label(v).to_string()).collect::<BTreeSet<_>>() == want)
    }

    #[test]
    fn builtins_validate() {
        for name in BUILTIN_SYSTEMS {
            let h = builtin_system(name).unwrap();
            let d = builtin_descriptor(name).unwrap();
            let r = validate_steiner(&h, d);
            assert!(r.valid, "{name}: {r:?}");
        }
    }

    #[test]
    fn block_counts() {
        let counts: Vec<usize> = BUILTIN_SYSTEMS.iter().map(|n| builtin_system(n).unwrap().blocks().len()).collect();
        assert_eq!(counts, vec![7, 12, 14, 30, 13]);
    }

    #[test]
    fn transcribed_blocks_present() {
        let s237 = builtin_system("S237").unwrap();
        for b in ["123", "246", "367"] {
            assert!(has_block(&s237, b));
        }
        let s3410 = builtin_system("S3410").unwrap();
        assert!(has_block(&s3410, "1245"));
        assert!(has_block(&s3410, "2580"));
        let pg3 = builtin_system("PG3").unwrap();
        assert!(has_block(&pg3, "ABCD"));
        assert!(has_block(&pg3, "A123"));
        assert!(pg3.is_uniform(4));
        assert!(s3410.index_of("0").is_some());
    }

    #[test]
    fn deleting_a_block_breaks_fano() {
        let h = builtin_system("S237").unwrap();
        let kept: Vec<Vec<String>> = h.blocks()[1..].iter().map(|b| b.iter().map(|&v| h.label(v).to_string()).collect()).collect();
        let broken = Hypergraph::new(h.labels(), &kept).unwrap();
        let r = validate_steiner(&broken, SteinerDescriptor::new(2, 3, 7).unwrap());
        assert!(!r.valid);
        let w = r.witness.unwrap();
        assert!(w.iter().all(|x| "123".contains(x.as_str())), "{w:?}");
    }

    #[test]
    fn wrong_parameters_fail() {
        let h = builtin_system("S348").unwrap();
        assert!(!validate_steiner(&h, SteinerDescriptor::new(2, 4, 8).unwrap()).valid);
        assert!(!validate_steiner(&h, SteinerDescriptor::new(3, 4, 9).unwrap()).valid);
        assert!(SteinerDescriptor::new(3, 3, 9).is_err());
    }

    #[test]
    fn unknown_builtin() {
        assert_eq!(builtin_system("S2313"), Err(Error::UnknownSystem("S2313".into())));
    }

    #[test]
    fn block_list_round_trip() {
        let h = builtin_system("S3410").unwrap();
        let text = h.to_block_list();
        let back = hypergraph_from_block_list(&text).unwrap();
        assert_eq!(back.blocks().len(), 30);
        assert!(validate_steiner(&back, SteinerDescriptor::new(3, 4, 10).unwrap()).valid);
    }

    #[test]
    fn block_list_rejects_singletons() {
        assert!(matches!(hypergraph_from_block_list("1 2\n3\n"), Err(Error::Parse { line: 2, .. })));
    }
}
