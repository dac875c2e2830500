//! Finite complete lattices (sup-lattices).
//!
//! These are the hom objects of every quantaloid in this crate: a
//! finite poset in which every subset has a least upper bound (hence,
//! finiteness granted, also a greatest lower bound). A lattice is
//! stored as an interned label table, a dense boolean order matrix,
//! and materialized binary join/meet tables, so all later algebra is
//! table lookup plus folds.
//!
//! Validation is exhaustive — every one of the `2^n` subsets is
//! checked for a least upper bound and a greatest lower bound — up to
//! [`EXHAUSTIVE_LIMIT`] elements. Above that it switches to the
//! equivalent finite criterion: all binary joins exist and a bottom
//! element exists (then arbitrary sups are folds of binary joins, and
//! infs are sups of lower bounds). The two paths are cross-checked in
//! the tests.

use thiserror::Error;

/// Index of an element within its owning lattice.
pub type Elt = usize;

/// Largest lattice size for which validation scans all subsets.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// A defect found while validating a would-be lattice.
///
/// Indices refer to positions in the label table handed to the
/// constructor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("order matrix has {got} entries, expected {want}")]
    SizeMismatch { got: usize, want: usize },
    #[error("order not reflexive at element {0}")]
    NotReflexive(Elt),
    #[error("order not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(Elt, Elt),
    #[error("order not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(Elt, Elt, Elt),
    #[error("subset {0:?} has no least upper bound")]
    NoJoin(Vec<Elt>),
    #[error("subset {0:?} has no greatest lower bound")]
    NoMeet(Vec<Elt>),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
}

/// A finite complete lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    labels: Vec<String>,
    /// Row-major order matrix: `leq[a * n + b]` means `a <= b`.
    leq: Vec<bool>,
    /// Binary join table, `join[a * n + b]`.
    join: Vec<Elt>,
    /// Binary meet table, `meet[a * n + b]`.
    meet: Vec<Elt>,
    bottom: Elt,
    top: Elt,
}

/// Least upper bound of `members` inside the order `leq`, by direct
/// scan: collect the upper bounds, then look for one below all others.
fn lub_scan(n: usize, leq: &[bool], members: &[Elt]) -> Option<Elt> {
    let ubs: Vec<Elt> = (0..n)
        .filter(|&c| members.iter().all(|&a| leq[a * n + c]))
        .collect();
    ubs.iter()
        .copied()
        .find(|&u| ubs.iter().all(|&v| leq[u * n + v]))
}

/// Greatest lower bound by direct scan, dual to [`lub_scan`].
fn glb_scan(n: usize, leq: &[bool], members: &[Elt]) -> Option<Elt> {
    let lbs: Vec<Elt> = (0..n)
        .filter(|&c| members.iter().all(|&a| leq[c * n + a]))
        .collect();
    lbs.iter()
        .copied()
        .find(|&u| lbs.iter().all(|&v| leq[v * n + u]))
}

/// Check a label table and order matrix for lattice-hood, collecting
/// every order-axiom defect plus the first missing join or meet.
pub fn validate_lattice(labels: &[String], leq: &[bool]) -> Vec<LatticeError> {
    let n = labels.len();
    let mut errs = Vec::new();
    if n == 0 {
        return vec![LatticeError::Empty];
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            errs.push(LatticeError::DuplicateLabel(l.clone()));
        }
    }
    if leq.len() != n * n {
        errs.push(LatticeError::SizeMismatch {
            got: leq.len(),
            want: n * n,
        });
        return errs;
    }
    for a in 0..n {
        if !leq[a * n + a] {
            errs.push(LatticeError::NotReflexive(a));
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if leq[a * n + b] && leq[b * n + a] {
                errs.push(LatticeError::NotAntisymmetric(a, b));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !leq[a * n + b] {
                continue;
            }
            for c in 0..n {
                if leq[b * n + c] && !leq[a * n + c] {
                    errs.push(LatticeError::NotTransitive(a, b, c));
                }
            }
        }
    }
    if !errs.is_empty() {
        return errs;
    }
    if n <= EXHAUSTIVE_LIMIT {
        // Ascending bitmask scan over all subsets, empty set included.
        for mask in 0u32..(1u32 << n) {
            let members: Vec<Elt> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if lub_scan(n, leq, &members).is_none() {
                errs.push(LatticeError::NoJoin(members));
                return errs;
            }
            if glb_scan(n, leq, &members).is_none() {
                errs.push(LatticeError::NoMeet(members));
                return errs;
            }
        }
    } else {
        if lub_scan(n, leq, &[]).is_none() {
            errs.push(LatticeError::NoJoin(vec![]));
            return errs;
        }
        if glb_scan(n, leq, &[]).is_none() {
            errs.push(LatticeError::NoMeet(vec![]));
            return errs;
        }
        for a in 0..n {
            for b in a..n {
                if lub_scan(n, leq, &[a, b]).is_none() {
                    errs.push(LatticeError::NoJoin(vec![a, b]));
                    return errs;
                }
            }
        }
        // Bottom plus all binary joins makes a finite poset complete:
        // the meet of a subset is the join of its lower bounds. No
        // further checks are needed, and the tests cross-validate this
        // criterion against the exhaustive scan on small instances.
    }
    errs
}

impl Lattice {
    /// Build a lattice from labels and a row-major order matrix
    /// (`leq[a * n + b]` meaning `a <= b`), validating completely.
    pub fn new(labels: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let errs = validate_lattice(&labels, &leq);
        if let Some(e) = errs.into_iter().next() {
            return Err(e);
        }
        let n = labels.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                join[a * n + b] = lub_scan(n, &leq, &[a, b]).expect("validated");
                meet[a * n + b] = glb_scan(n, &leq, &[a, b]).expect("validated");
            }
        }
        let bottom = lub_scan(n, &leq, &[]).expect("validated");
        let top = glb_scan(n, &leq, &[]).expect("validated");
        Ok(Lattice {
            labels,
            leq,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// Build a lattice from the reflexive-transitive closure of a list
    /// of `a <= b` pairs given by label.
    pub fn from_pairs<S: AsRef<str>>(labels: Vec<String>, pairs: &[(S, S)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let idx = |l: &str| -> Result<usize, LatticeError> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| LatticeError::UnknownLabel(l.to_string()))
        };
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for (a, b) in pairs {
            leq[idx(a.as_ref())? * n + idx(b.as_ref())?] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        Lattice::new(labels, leq)
    }

    /// Chain `0 < 1 < ... < n-1`, labelled by decimal index.
    pub fn chain(n: usize) -> Lattice {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in a..n {
                leq[a * n + b] = true;
            }
        }
        Lattice::new(labels, leq).expect("a chain is a lattice")
    }

    /// Powerset of `k` letters ordered by inclusion. Element `mask`
    /// is labelled by the letters it contains (`"a"`, `"ab"`, ...),
    /// with `"e"` for the empty set. `boolean(2)` is the diamond.
    pub fn boolean(k: usize) -> Lattice {
        assert!(k <= 6, "boolean lattice limited to 6 generators");
        let n = 1usize << k;
        let labels = (0..n)
            .map(|mask| {
                if mask == 0 {
                    "e".to_string()
                } else {
                    (0..k)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| (b'a' + i as u8) as char)
                        .collect()
                }
            })
            .collect();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a & b == a;
            }
        }
        Lattice::new(labels, leq).expect("a powerset is a lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elt) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<Elt> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: Elt, b: Elt) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn join(&self, a: Elt, b: Elt) -> Elt {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: Elt, b: Elt) -> Elt {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> Elt {
        self.bottom
    }

    pub fn top(&self) -> Elt {
        self.top
    }

    /// Join of arbitrarily many elements; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = Elt>>(&self, elems: I) -> Elt {
        elems.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    /// Meet of arbitrarily many elements; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = Elt>>(&self, elems: I) -> Elt {
        elems.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// Least upper bound by direct scan over the order matrix,
    /// independent of the materialized join table. Used as an oracle.
    pub fn join_by_scan(&self, members: &[Elt]) -> Option<Elt> {
        lub_scan(self.len(), &self.leq, members)
    }

    /// Greatest lower bound by direct scan, dual to [`Lattice::join_by_scan`].
    pub fn meet_by_scan(&self, members: &[Elt]) -> Option<Elt> {
        glb_scan(self.len(), &self.leq, members)
    }

    /// The same elements with the order reversed: joins become meets,
    /// bottom becomes top.
    pub fn opposite(&self) -> Lattice {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq[b * n + a];
            }
        }
        Lattice {
            labels: self.labels.clone(),
            leq,
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Does binary meet distribute over binary join? Returns the
    /// first offending triple `(x, y, z)` with
    /// `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)` if not.
    pub fn distributivity_defect(&self) -> Option<(Elt, Elt, Elt)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

/// Opposite lattice as a free function, matching the rest of the
/// constructor vocabulary.
pub fn opposite_lattice(l: &Lattice) -> Lattice {
    l.opposite()
}

/// A sup-preserving map between lattices, stored pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupMorphism {
    pub map: Vec<Elt>,
}

impl SupMorphism {
    /// Check sup-preservation by the finite criterion: bottom goes to
    /// bottom and binary joins are preserved.
    pub fn check(src: &Lattice, tgt: &Lattice, map: &[Elt]) -> bool {
        if map.len() != src.len() || map.iter().any(|&m| m >= tgt.len()) {
            return false;
        }
        if map[src.bottom()] != tgt.bottom() {
            return false;
        }
        for a in 0..src.len() {
            for b in 0..src.len() {
                if map[src.join(a, b)] != tgt.join(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Check sup-preservation against every subset of the source,
    /// feasible for sources up to [`EXHAUSTIVE_LIMIT`] elements.
    pub fn check_exhaustive(src: &Lattice, tgt: &Lattice, map: &[Elt]) -> bool {
        assert!(src.len() <= EXHAUSTIVE_LIMIT);
        if map.len() != src.len() || map.iter().any(|&m| m >= tgt.len()) {
            return false;
        }
        for mask in 0u32..(1u32 << src.len()) {
            let members: Vec<Elt> = (0..src.len()).filter(|&i| mask & (1 << i) != 0).collect();
            let lhs = map[src.join_all(members.iter().copied())];
            let rhs = tgt.join_all(members.iter().map(|&e| map[e]));
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    pub fn new(src: &Lattice, tgt: &Lattice, map: Vec<Elt>) -> Option<SupMorphism> {
        if SupMorphism::check(src, tgt, &map) {
            Some(SupMorphism { map })
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> Lattice {
        // 0 < a < b < 1 and 0 < c < 1, with {a, b} incomparable to c.
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Lattice::from_pairs(labels, &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
            .unwrap()
    }

    fn m3() -> Lattice {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Lattice::from_pairs(
            labels,
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        .unwrap()
    }

    #[test]
    fn chain_is_a_lattice() {
        let c = Lattice::chain(4);
        assert_eq!(c.bottom(), 0);
        assert_eq!(c.top(), 3);
        assert_eq!(c.join(1, 2), 2);
        assert_eq!(c.meet(1, 2), 1);
        assert_eq!(c.join_all([]), 0);
        assert_eq!(c.meet_all([]), 3);
    }

    #[test]
    fn diamond_is_boolean_two() {
        let d = Lattice::boolean(2);
        assert_eq!(d.len(), 4);
        let (e, a, b, ab) = (
            d.index_of("e").unwrap(),
            d.index_of("a").unwrap(),
            d.index_of("b").unwrap(),
            d.index_of("ab").unwrap(),
        );
        assert_eq!(d.join(a, b), ab);
        assert_eq!(d.meet(a, b), e);
        assert!(d.leq(e, a) && d.leq(a, ab) && !d.leq(a, b));
    }

    #[test]
    fn antichain_without_bounds_is_rejected() {
        let labels = ["x", "y"].map(String::from).to_vec();
        let leq = vec![true, false, false, true];
        let errs = validate_lattice(&labels, &leq);
        assert_eq!(errs, vec![LatticeError::NoJoin(vec![])]);
    }

    #[test]
    fn order_defects_are_all_collected() {
        let labels = ["x", "y"].map(String::from).to_vec();
        // x <= y and y <= x, and y not reflexive.
        let leq = vec![true, true, true, false];
        let errs = validate_lattice(&labels, &leq);
        assert!(errs.contains(&LatticeError::NotReflexive(1)));
        assert!(errs.contains(&LatticeError::NotAntisymmetric(0, 1)));
    }

    #[test]
    fn cycles_fail_antisymmetry_after_closure() {
        let labels = ["x", "y", "z"].map(String::from).to_vec();
        let err = Lattice::from_pairs(labels, &[("x", "y"), ("y", "z"), ("z", "x")]).unwrap_err();
        assert!(matches!(err, LatticeError::NotAntisymmetric(_, _)));
    }

    #[test]
    fn join_tables_match_the_scan_oracle() {
        for l in [Lattice::chain(5), Lattice::boolean(3), pentagon(), m3()] {
            let n = l.len();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(Some(l.join(a, b)), l.join_by_scan(&[a, b]));
                    assert_eq!(Some(l.meet(a, b)), l.meet_by_scan(&[a, b]));
                }
            }
            for mask in 0u32..(1 << n) {
                let members: Vec<Elt> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                assert_eq!(
                    Some(l.join_all(members.iter().copied())),
                    l.join_by_scan(&members),
                    "fold of binary joins must be the least upper bound"
                );
                assert_eq!(
                    Some(l.meet_all(members.iter().copied())),
                    l.meet_by_scan(&members)
                );
            }
        }
    }

    #[test]
    fn opposite_swaps_everything_and_is_involutive() {
        for l in [Lattice::chain(3), Lattice::boolean(2), pentagon()] {
            let o = l.opposite();
            assert_eq!(o.bottom(), l.top());
            assert_eq!(o.top(), l.bottom());
            for a in 0..l.len() {
                for b in 0..l.len() {
                    assert_eq!(o.leq(a, b), l.leq(b, a));
                    assert_eq!(o.join(a, b), l.meet(a, b));
                }
            }
            assert_eq!(o.opposite(), l);
        }
    }

    #[test]
    fn distributivity_holds_for_chains_and_powersets_only() {
        assert_eq!(Lattice::chain(4).distributivity_defect(), None);
        assert_eq!(Lattice::boolean(3).distributivity_defect(), None);
        assert!(pentagon().distributivity_defect().is_some());
        assert!(m3().distributivity_defect().is_some());
    }

    #[test]
    fn sup_morphism_binary_and_exhaustive_criteria_agree() {
        let srcs = [Lattice::chain(3), Lattice::boolean(2)];
        let tgts = [Lattice::chain(2), Lattice::boolean(2), pentagon()];
        for src in &srcs {
            for tgt in &tgts {
                // Odometer over all maps src -> tgt.
                let mut map = vec![0; src.len()];
                'odometer: loop {
                    assert_eq!(
                        SupMorphism::check(src, tgt, &map),
                        SupMorphism::check_exhaustive(src, tgt, &map),
                        "criteria disagree on {map:?}"
                    );
                    let mut i = 0;
                    loop {
                        if i == map.len() {
                            break 'odometer;
                        }
                        map[i] += 1;
                        if map[i] < tgt.len() {
                            break;
                        }
                        map[i] = 0;
                        i += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn large_lattice_takes_the_binary_criterion_path() {
        let c = Lattice::chain(EXHAUSTIVE_LIMIT + 3);
        assert_eq!(c.len(), 15);
        assert_eq!(c.join(4, 9), 9);
        assert_eq!(c.meet_by_scan(&[4, 9]), Some(4));
    }
}
