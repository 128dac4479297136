use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::enumerate::{enumerate_connected_bruteforce, enumerate_cyclic};
use crate::error::Result;
use crate::perm::{element_cap, Perm, PermGroup};
use crate::quandle::Quandle;

type Cache = Mutex<BTreeMap<(bool, usize), Arc<Vec<Quandle>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Searches run outside the lock; a racing duplicate search is discarded.
fn cached(
    cyclic: bool,
    n: usize,
    search: impl FnOnce() -> Result<Vec<Quandle>>,
) -> Result<Arc<Vec<Quandle>>> {
    if let Some(hit) = cache().lock().unwrap().get(&(cyclic, n)) {
        return Ok(hit.clone());
    }
    let found = Arc::new(search()?);
    Ok(cache()
        .lock()
        .unwrap()
        .entry((cyclic, n))
        .or_insert(found)
        .clone())
}

/// Cyclic-type quandles of size `n` up to isomorphism, computed once per
/// process.
pub fn cyclic_census(n: usize) -> Result<Arc<Vec<Quandle>>> {
    cached(true, n, || Ok(enumerate_cyclic(n)?.quandles))
}

/// Connected quandles of size `n ≤ 6` up to isomorphism, computed once per
/// process.
pub fn connected_census(n: usize) -> Result<Arc<Vec<Quandle>>> {
    cached(false, n, || {
        Ok(enumerate_connected_bruteforce(n, false)?.quandles)
    })
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub quandle: Quandle,
}

/// The quandles the lemma sweeps run over.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn push(&mut self, name: impl Into<String>, quandle: Quandle) {
        self.entries.push(CorpusEntry {
            name: name.into(),
            quandle,
        });
    }

    /// Connected quandles up to size 6, cyclic-type quandles up to `max_n`,
    /// trivial and dihedral quandles, and the conjugation quandles of every
    /// class of `S3`, `S4` and `A5`.
    pub fn standard(max_n: usize) -> Result<Corpus> {
        let mut corpus = Corpus::default();
        for n in 1..=crate::enumerate::DEFAULT_CONNECTED_MAX {
            for (i, q) in connected_census(n)?.iter().enumerate() {
                corpus.push(format!("connected-{n}-{i}"), q.clone());
            }
        }
        for n in 3..=max_n {
            for (i, q) in cyclic_census(n)?.iter().enumerate() {
                corpus.push(format!("cyclic-{n}-{i}"), q.clone());
            }
        }
        for n in 1..=4 {
            corpus.push(format!("trivial-{n}"), Quandle::trivial(n));
        }
        for n in 3..=8 {
            corpus.push(format!("R_{n}"), Quandle::dihedral(n));
        }
        for (name, group) in [
            ("S3", PermGroup::symmetric(3)),
            ("S4", PermGroup::symmetric(4)),
            ("A5", PermGroup::alternating(5)),
        ] {
            for class in group.conjugacy_classes(element_cap())? {
                let (q, _) = Quandle::conjugation(&group, &class.representative, class.size)?;
                corpus.push(
                    format!("conj-{name}-{}", display_rep(&class.representative)),
                    q,
                );
            }
        }
        Ok(corpus)
    }
}

fn display_rep(p: &Perm) -> String {
    p.to_string().replace(' ', "")
}
