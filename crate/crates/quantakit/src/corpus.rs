//! A small shared menagerie of instances: named base quantaloids and,
//! over each, a handful of named categories, all at desk scale. The
//! law suites, the acceptance checks and the command-line fixtures
//! all draw from this corpus so that results are reproducible.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enriched::{QCategory, TypedSet};
use crate::lattice::Lattice;
use crate::quantaloid::{bool2, random_quantaloid, rel_locale, tropical_trunc, Quantaloid};

/// Seed for the randomly generated base; fixed so that the whole
/// corpus is a constant.
pub const RANDOM_BASE_SEED: u64 = 142;

/// A base quantaloid together with the categories enriched in it.
#[derive(Debug, Clone)]
pub struct CorpusBase {
    pub name: String,
    pub base: Arc<Quantaloid>,
    /// Pairs of (category name, category); names are unique per base.
    pub cats: Vec<(String, Arc<QCategory>)>,
}

/// The whole fixture corpus.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub bases: Vec<CorpusBase>,
}

impl Corpus {
    /// The standard corpus: the two-element quantale, relations over
    /// the 3-chain and over the diamond locale, the truncated
    /// tropical quantale, and one seeded random two-object base.
    /// Categories have at most 4 objects each.
    pub fn standard() -> Corpus {
        let bases = vec![
            bool2_block(),
            relchain3_block(),
            reldiamond_block(),
            tropical3_block(),
            random_block(),
        ];
        Corpus { bases }
    }

    /// Every category in the corpus, labelled `base/cat`.
    pub fn all_cats(&self) -> impl Iterator<Item = (String, &Arc<QCategory>)> + '_ {
        self.bases.iter().flat_map(|b| {
            b.cats.iter().map(move |(n, c)| (format!("{}/{}", b.name, n), c))
        })
    }

    /// Look a category up by its `base/cat` label.
    pub fn cat(&self, label: &str) -> Option<&Arc<QCategory>> {
        let (b, c) = label.split_once('/')?;
        self.bases.iter().find(|cb| cb.name == b)?.cats.iter().find(|(n, _)| n == c).map(|(_, c)| c)
    }

    /// Look a base up by name.
    pub fn base(&self, name: &str) -> Option<&CorpusBase> {
        self.bases.iter().find(|b| b.name == name)
    }
}

fn cat(base: &Arc<Quantaloid>, names: &[&str], types: &[usize], hom: &[usize]) -> Arc<QCategory> {
    let objects = TypedSet::new(names.iter().map(|s| s.to_string()).collect(), types.to_vec());
    Arc::new(QCategory::new(Arc::clone(base), objects, hom.to_vec()).expect("corpus entries are valid"))
}

fn bool2_block() -> CorpusBase {
    let base = Arc::new(bool2());
    let cats = vec![
        // The 2-chain x <= y.
        ("chain2".to_string(), cat(&base, &["x", "y"], &[0, 0], &[1, 1, 0, 1])),
        // Two incomparable points; its full down-set has no supremum.
        ("antichain2".to_string(), cat(&base, &["x", "y"], &[0, 0], &[1, 0, 0, 1])),
        // Two isomorphic points below a third: not skeletal.
        ("twins3".to_string(), cat(&base, &["p", "q", "z"], &[0, 0, 0], &[1, 1, 1, 1, 1, 1, 0, 0, 1])),
        // The diamond order: a complete lattice, hence cocomplete.
        (
            "square4".to_string(),
            cat(
                &base,
                &["bot", "l", "r", "top"],
                &[0, 0, 0, 0],
                &[1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1],
            ),
        ),
    ];
    CorpusBase { name: "bool2".to_string(), base, cats }
}

fn relchain3_block() -> CorpusBase {
    let base = Arc::new(rel_locale(&Lattice::chain(3)).expect("a chain is a locale"));
    let id1 = base.id(1).elt;
    let cats = vec![
        // One object of a non-top type: carries a diverging Cauchy
        // presheaf, so it is not Cauchy complete.
        ("onepoint".to_string(), cat(&base, &["x"], &[1], &[id1])),
        // Two objects of different types joined one way only.
        ("mixed2".to_string(), cat(&base, &["u", "v"], &[1, 2], &[1, 1, 0, 2])),
        // Two top-typed objects with a partial arrow back.
        ("pair2".to_string(), cat(&base, &["x", "y"], &[2, 2], &[2, 2, 1, 2])),
    ];
    CorpusBase { name: "relchain3".to_string(), base, cats }
}

fn reldiamond_block() -> CorpusBase {
    let base = Arc::new(rel_locale(&Lattice::boolean(2)).expect("a powerset is a locale"));
    let cats = vec![
        // One point of type `a`, one of type `b`; the cross homs live
        // in the singleton lattice below a ∧ b = e.
        ("sides2".to_string(), cat(&base, &["u", "v"], &[1, 2], &[1, 0, 0, 1])),
        // Two top-typed points glued by the two middle elements.
        ("tops2".to_string(), cat(&base, &["x", "y"], &[3, 3], &[3, 1, 2, 3])),
    ];
    CorpusBase { name: "reldiamond".to_string(), base, cats }
}

fn tropical3_block() -> CorpusBase {
    let base = Arc::new(tropical_trunc(3));
    let cats = vec![
        // Two points with asymmetric costs.
        ("metric2".to_string(), cat(&base, &["x", "y"], &[0, 0], &[0, 2, 1, 0])),
        // Three points on a one-way road x -> y -> z.
        (
            "metric3".to_string(),
            cat(&base, &["x", "y", "z"], &[0, 0, 0], &[0, 3, 3, 1, 0, 3, 2, 1, 0]),
        ),
    ];
    CorpusBase { name: "tropical3".to_string(), base, cats }
}

fn random_block() -> CorpusBase {
    let base = Arc::new(
        random_quantaloid(RANDOM_BASE_SEED, 2, 4).expect("the pinned seed draws a valid base"),
    );
    assert_eq!(base.object_count(), 2, "the pinned seed yields two objects");
    let cats = vec![
        ("r2a".to_string(), random_category(&base, 1, 2)),
        ("r2b".to_string(), random_category(&base, 5, 2)),
    ];
    CorpusBase { name: "rand2".to_string(), base, cats }
}

/// A seeded random category on `n` objects: draw types and an
/// arbitrary hom matrix, force the identity inequalities, then close
/// under binary composition (`M := M ∨ M⊗M` to a fixpoint). The
/// closure of any seed matrix is a valid category.
pub fn random_category(base: &Arc<Quantaloid>, seed: u64, n: usize) -> Arc<QCategory> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let k = base.object_count();
    let types: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut m: Vec<usize> = (0..n * n)
        .map(|i| {
            let (a1, a0) = (i / n, i % n);
            rng.gen_range(0..base.hom(types[a0], types[a1]).len())
        })
        .collect();
    for a in 0..n {
        let id = base.id(types[a]);
        m[a * n + a] = base.join_arrow(base.arrow(types[a], types[a], m[a * n + a]), id).elt;
    }
    loop {
        let mut grown = false;
        for a2 in 0..n {
            for a0 in 0..n {
                let mut acc = base.arrow(types[a0], types[a2], m[a2 * n + a0]);
                for a1 in 0..n {
                    let g = base.arrow(types[a1], types[a2], m[a2 * n + a1]);
                    let f = base.arrow(types[a0], types[a1], m[a1 * n + a0]);
                    acc = base.join_arrow(acc, base.compose(g, f));
                }
                if acc.elt != m[a2 * n + a0] {
                    m[a2 * n + a0] = acc.elt;
                    grown = true;
                }
            }
        }
        if !grown {
            break;
        }
    }
    let names = (0..n).map(|i| format!("o{i}")).collect();
    let objects = TypedSet::new(names, types);
    Arc::new(QCategory::new(Arc::clone(base), objects, m).expect("closures are categories"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::is_cauchy_complete;
    use crate::completion::{is_cocomplete, Caps};

    #[test]
    fn the_standard_corpus_builds_and_has_the_advertised_shape() {
        let corpus = Corpus::standard();
        assert_eq!(corpus.bases.len(), 5);
        let names: Vec<&str> = corpus.bases.iter().map(|b| b.name.as_str()).collect();
        assert_eq!(names, ["bool2", "relchain3", "reldiamond", "tropical3", "rand2"]);
        for b in &corpus.bases {
            assert!(!b.cats.is_empty());
            for (_, c) in &b.cats {
                assert!(c.object_count() <= 4);
            }
        }
        let rand_base = &corpus.base("rand2").unwrap().base;
        assert_eq!(rand_base.object_count(), 2);
        for s in 0..2 {
            for t in 0..2 {
                assert!(rand_base.hom(s, t).len() <= 4);
            }
        }
    }

    #[test]
    fn corpus_instances_cover_both_sides_of_the_key_predicates() {
        let corpus = Corpus::standard();
        let caps = Caps::default();
        let chain2 = corpus.cat("bool2/chain2").unwrap();
        let antichain2 = corpus.cat("bool2/antichain2").unwrap();
        let onepoint = corpus.cat("relchain3/onepoint").unwrap();
        assert!(is_cocomplete(chain2, &caps).unwrap().holds);
        assert!(!is_cocomplete(antichain2, &caps).unwrap().holds);
        assert!(is_cocomplete(corpus.cat("bool2/square4").unwrap(), &caps).unwrap().holds);
        assert!(is_cauchy_complete(chain2, &caps).unwrap().holds);
        assert!(!is_cauchy_complete(onepoint, &caps).unwrap().holds);
        assert!(!corpus.cat("bool2/twins3").unwrap().is_skeletal());
    }

    #[test]
    fn random_categories_are_deterministic_in_the_seed() {
        let corpus = Corpus::standard();
        let base = &corpus.base("rand2").unwrap().base;
        assert_eq!(random_category(base, 1, 2), random_category(base, 1, 2));
        assert_ne!(random_category(base, 1, 2), random_category(base, 5, 2));
    }
}
