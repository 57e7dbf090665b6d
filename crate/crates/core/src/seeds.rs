//! Labeled seeds, walks in the n-regular tree and exchange-graph exploration.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::matrices::{ExchangeMatrix, IntMatrix};

/// A reduced word in the directions `0..n`: a walk from the root of the
/// n-regular tree with no immediate backtracking.
///
/// Letters are zero-based; `Display`, `FromStr` and serde use one-based
/// letters separated by commas.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePath(Vec<usize>);

impl TreePath {
    pub fn empty() -> Self {
        TreePath(Vec::new())
    }

    /// Rejects words with two equal consecutive letters.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if let Some(w) = word.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath(format!(
                "letter {} repeated consecutively",
                w[0] + 1
            )));
        }
        Ok(TreePath(word))
    }

    /// Free reduction: cancels `k, k` pairs until none remain.
    pub fn reduce(word: impl IntoIterator<Item = usize>) -> Self {
        let mut out = TreePath::empty();
        for k in word {
            out = out.then(k);
        }
        out
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// The walk extended by one edge; stepping back along the last edge
    /// shortens it instead.
    pub fn then(&self, k: usize) -> Self {
        let mut word = self.0.clone();
        if word.last() == Some(&k) {
            word.pop();
        } else {
            word.push(k);
        }
        TreePath(word)
    }

    /// The same tree vertex seen from the neighbour of the root across edge `k`.
    pub fn prepend(&self, k: usize) -> Self {
        if self.0.first() == Some(&k) {
            TreePath(self.0[1..].to_vec())
        } else {
            let mut word = Vec::with_capacity(self.0.len() + 1);
            word.push(k);
            word.extend_from_slice(&self.0);
            TreePath(word)
        }
    }

    /// The walk from the endpoint back to the root.
    pub fn reversed(&self) -> Self {
        TreePath(self.0.iter().rev().copied().collect())
    }

    pub fn parent(&self) -> Option<Self> {
        if self.0.is_empty() {
            None
        } else {
            Some(TreePath(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&k| k >= n) {
            Some(&k) => Err(Error::IndexOutOfRange { k, n }),
            None => Ok(()),
        }
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|k| k + 1).collect()
    }

    pub fn from_one_based(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidPath("letters are numbered from 1".into()));
        }
        Self::new(word.iter().map(|k| k - 1).collect())
    }

    /// All reduced words of length `<= max_depth` in shortlex order.
    pub fn all_up_to(n: usize, max_depth: usize) -> Vec<TreePath> {
        let mut out = vec![TreePath::empty()];
        let mut level = vec![TreePath::empty()];
        for _ in 0..max_depth {
            level = level
                .iter()
                .flat_map(|p| {
                    (0..n)
                        .filter(move |&k| p.last() != Some(k))
                        .map(move |k| TreePath(p.0.iter().copied().chain([k]).collect()))
                })
                .collect();
            out.extend(level.iter().cloned());
        }
        out
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "{}", letters.join(","))
    }
}

impl FromStr for TreePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(TreePath::empty());
        }
        let word = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad path letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_based(&word)
    }
}

impl Serialize for TreePath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TreePath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(d)?;
        TreePath::from_one_based(&word).map_err(serde::de::Error::custom)
    }
}

/// A labeled seed: exchange matrix and cluster, with the walk from the
/// initial seed that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    b: ExchangeMatrix,
    cluster: Vec<LaurentPolynomial>,
    path: TreePath,
}

impl Seed {
    /// The initial seed `(B0, (x1, ..., xn))`.
    pub fn initial(b0: &ExchangeMatrix) -> Self {
        let n = b0.rank();
        Seed {
            b: b0.clone(),
            cluster: (0..n).map(|i| LaurentPolynomial::variable(n, i)).collect(),
            path: TreePath::empty(),
        }
    }

    /// Seed at the endpoint of `path`, walking from `initial(b0)`.
    pub fn at(b0: &ExchangeMatrix, path: &TreePath) -> Result<Self> {
        path.validate(b0.rank())?;
        path.letters()
            .iter()
            .try_fold(Seed::initial(b0), |seed, &k| seed.mutate(k))
    }

    pub fn exchange_matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn cluster(&self) -> &[LaurentPolynomial] {
        &self.cluster
    }

    pub fn path(&self) -> &TreePath {
        &self.path
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    /// Seed mutation in direction `k` through the coefficient-free exchange
    /// relation.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let new_var = exchange(&self.b, &self.cluster, k)?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new_var;
        Ok(Seed { b: self.b.mutate(k)?, cluster, path: self.path.then(k) })
    }

    pub fn canonical_key(&self) -> CanonicalSeedKey {
        CanonicalSeedKey::of(&self.b, &self.cluster)
    }

    fn labeled_key(&self) -> (IntMatrix, Vec<LaurentPolynomial>) {
        (self.b.as_matrix().clone(), self.cluster.clone())
    }
}

/// The new cluster variable `x_k'` from
/// `x_k x_k' = prod x_l^[b_lk]_+ + prod x_l^[-b_lk]_+`.
///
/// The cluster entries may live in any Laurent ring, e.g. a specialization
/// of the initial variables, as long as they share an arity.
pub fn exchange(b: &ExchangeMatrix, cluster: &[LaurentPolynomial], k: usize) -> Result<LaurentPolynomial> {
    b.check_direction(k)?;
    if cluster.len() != b.rank() {
        return Err(Error::VariableCount(cluster.len(), b.rank()));
    }
    let nvars = cluster[k].nvars();
    let mut plus = LaurentPolynomial::one(nvars);
    let mut minus = LaurentPolynomial::one(nvars);
    for (l, x) in cluster.iter().enumerate() {
        let b = b.get(l, k);
        let e = u32::try_from(b.unsigned_abs()).map_err(|_| Error::Overflow("exchange exponent"))?;
        if b > 0 {
            plus = plus.checked_mul(&x.pow(e))?;
        } else if b < 0 {
            minus = minus.checked_mul(&x.pow(e))?;
        }
    }
    plus.checked_add(&minus)?.exact_div(&cluster[k])
}

/// Canonical form of a seed under simultaneous relabeling of its cluster
/// and exchange matrix.
///
/// Cluster variables of a seed are pairwise distinct, so sorting them fixes
/// the relabeling uniquely; the exchange matrix is permuted to match.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSeedKey {
    cluster: Vec<LaurentPolynomial>,
    b: IntMatrix,
}

impl CanonicalSeedKey {
    pub fn of(b: &ExchangeMatrix, cluster: &[LaurentPolynomial]) -> Self {
        let mut perm: Vec<usize> = (0..cluster.len()).collect();
        perm.sort_by(|&i, &j| cluster[i].cmp(&cluster[j]));
        debug_assert!(perm.windows(2).all(|w| cluster[w[0]] != cluster[w[1]]));
        CanonicalSeedKey {
            cluster: perm.iter().map(|&i| cluster[i].clone()).collect(),
            b: b.as_matrix().permuted(&perm),
        }
    }

    pub fn cluster(&self) -> &[LaurentPolynomial] {
        &self.cluster
    }

    pub fn exchange_matrix(&self) -> &IntMatrix {
        &self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExploreLimits {
    pub max_depth: usize,
    pub max_seeds: usize,
}

impl Default for ExploreLimits {
    fn default() -> Self {
        ExploreLimits { max_depth: 12, max_seeds: 100_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExploreStatus {
    Closed,
    DepthBound,
    SeedBound,
}

#[derive(Clone, Debug)]
pub struct ExploredSeed {
    pub key: CanonicalSeedKey,
    /// Shortest walk (first found in BFS order) reaching this seed.
    pub path: TreePath,
}

/// Result of a breadth-first exploration of the exchange graph.
///
/// Seeds are sorted by canonical key; `edges` index into `seeds`.
#[derive(Clone, Debug)]
pub struct Exploration {
    pub b0: ExchangeMatrix,
    pub status: ExploreStatus,
    pub seeds: Vec<ExploredSeed>,
    pub edges: Vec<(usize, usize)>,
    pub depth_reached: usize,
}

impl Exploration {
    pub fn closed(&self) -> bool {
        self.status == ExploreStatus::Closed
    }

    pub fn num_seeds(&self) -> usize {
        self.seeds.len()
    }

    /// Union of the clusters of all discovered seeds.
    pub fn distinct_cluster_variables(&self) -> BTreeSet<LaurentPolynomial> {
        self.seeds
            .iter()
            .flat_map(|s| s.key.cluster().iter().cloned())
            .collect()
    }

    /// Cluster variables with a non-positive coefficient. Expected to be empty.
    pub fn positivity_violations(&self) -> Vec<LaurentPolynomial> {
        self.distinct_cluster_variables()
            .into_iter()
            .filter(|x| !x.has_positive_coefficients())
            .collect()
    }

    pub fn report(&self) -> ExplorationReport {
        ExplorationReport {
            b0: self.b0.clone(),
            closed: self.closed(),
            status: self.status,
            num_seeds: self.num_seeds(),
            num_vars: self.distinct_cluster_variables().len(),
            num_edges: self.edges.len(),
            depth_reached: self.depth_reached,
            positivity_violations: self.positivity_violations().len(),
            witness_paths: self
                .seeds
                .iter()
                .enumerate()
                .map(|(i, s)| (i.to_string(), s.path.clone()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExplorationReport {
    #[serde(rename = "B0")]
    pub b0: ExchangeMatrix,
    pub closed: bool,
    pub status: ExploreStatus,
    pub num_seeds: usize,
    pub num_vars: usize,
    pub num_edges: usize,
    pub depth_reached: usize,
    pub positivity_violations: usize,
    pub witness_paths: BTreeMap<String, TreePath>,
}

/// Children of every frontier seed, in frontier order then direction order.
fn expand(frontier: &[Seed]) -> Result<Vec<Vec<(Seed, CanonicalSeedKey)>>> {
    frontier
        .par_iter()
        .map(|seed| {
            (0..seed.rank())
                .filter(|&k| seed.path().last() != Some(k))
                .map(|k| {
                    let child = seed.mutate(k)?;
                    let key = child.canonical_key();
                    Ok((child, key))
                })
                .collect()
        })
        .collect()
}

/// Breadth-first search over non-backtracking mutations, deduplicating
/// seeds up to relabeling.
///
/// Seeds at depth `max_depth` are still expanded once to decide whether the
/// graph is closed; a new seed found there marks the run as depth-bounded.
pub fn explore(b0: &ExchangeMatrix, limits: ExploreLimits) -> Result<Exploration> {
    if limits.max_seeds == 0 {
        return Err(Error::Unsupported("max_seeds must be positive".into()));
    }
    let root = Seed::initial(b0);
    let mut index: HashMap<CanonicalSeedKey, usize> = HashMap::new();
    let mut order: Vec<ExploredSeed> = Vec::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    index.insert(root.canonical_key(), 0);
    order.push(ExploredSeed { key: root.canonical_key(), path: TreePath::empty() });

    let mut frontier = vec![root];
    let mut frontier_ids = vec![0usize];
    let mut depth = 0;
    let mut status = ExploreStatus::Closed;

    'search: while !frontier.is_empty() {
        let children = expand(&frontier)?;
        let mut next = Vec::new();
        let mut next_ids = Vec::new();
        for (parent, kids) in frontier_ids.iter().zip(children) {
            for (child, key) in kids {
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if depth == limits.max_depth {
                            status = ExploreStatus::DepthBound;
                            break 'search;
                        }
                        if order.len() == limits.max_seeds {
                            status = ExploreStatus::SeedBound;
                            break 'search;
                        }
                        let id = order.len();
                        index.insert(key.clone(), id);
                        order.push(ExploredSeed { key, path: child.path().clone() });
                        next.push(child);
                        next_ids.push(id);
                        id
                    }
                };
                edges.insert((*parent.min(&id), *parent.max(&id)));
            }
        }
        if next.is_empty() {
            break;
        }
        depth += 1;
        frontier = next;
        frontier_ids = next_ids;
    }

    // sort by canonical key and renumber edges
    let mut perm: Vec<usize> = (0..order.len()).collect();
    perm.sort_by(|&a, &b| order[a].key.cmp(&order[b].key));
    let mut rank = vec![0; order.len()];
    for (new, &old) in perm.iter().enumerate() {
        rank[old] = new;
    }
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| {
            let (a, b) = (rank[a], rank[b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    let mut slots: Vec<Option<ExploredSeed>> = order.into_iter().map(Some).collect();
    let seeds = perm.iter().map(|&i| slots[i].take().expect("each seed once")).collect();

    Ok(Exploration { b0: b0.clone(), status, seeds, edges, depth_reached: depth })
}

/// Walks reaching every distinct labeled seed of the pattern, in BFS order.
/// `None` if more than `limits` allow.
pub fn labeled_closure(b0: &ExchangeMatrix, limits: ExploreLimits) -> Result<Option<Vec<TreePath>>> {
    let root = Seed::initial(b0);
    let mut seen: HashSet<(IntMatrix, Vec<LaurentPolynomial>)> = HashSet::new();
    seen.insert(root.labeled_key());
    let mut paths = vec![TreePath::empty()];
    let mut frontier = vec![root];
    let mut depth = 0;
    while !frontier.is_empty() {
        let children: Vec<Vec<Seed>> = frontier
            .par_iter()
            .map(|s| {
                (0..s.rank())
                    .filter(|&k| s.path().last() != Some(k))
                    .map(|k| s.mutate(k))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for child in children.into_iter().flatten() {
            if seen.contains(&child.labeled_key()) {
                continue;
            }
            if depth == limits.max_depth || paths.len() == limits.max_seeds {
                return Ok(None);
            }
            seen.insert(child.labeled_key());
            paths.push(child.path().clone());
            next.push(child);
        }
        depth += 1;
        frontier = next;
    }
    Ok(Some(paths))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap()
    }

    fn a3() -> ExchangeMatrix {
        ExchangeMatrix::from_rows(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]).unwrap()
    }

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn path_invariants() {
        assert!(TreePath::new(vec![0, 0]).is_err());
        let p = TreePath::new(vec![0, 1, 0]).unwrap();
        assert_eq!(p.then(0), TreePath::new(vec![0, 1]).unwrap());
        assert_eq!(p.then(2), TreePath::new(vec![0, 1, 0, 2]).unwrap());
        assert_eq!(p.prepend(0), TreePath::new(vec![1, 0]).unwrap());
        assert_eq!(p.prepend(1), TreePath::new(vec![1, 0, 1, 0]).unwrap());
        assert_eq!(TreePath::reduce([0, 1, 1, 0, 2]), TreePath::new(vec![2]).unwrap());
        assert_eq!(p.to_string(), "1,2,1");
        assert_eq!("1,2,1".parse::<TreePath>().unwrap(), p);
        assert_eq!("".parse::<TreePath>().unwrap(), TreePath::empty());
        assert!("1,1".parse::<TreePath>().is_err());
        assert!("0,1".parse::<TreePath>().is_err());
        assert!("a".parse::<TreePath>().is_err());
        assert!(p.validate(2).is_ok());
        assert!(p.validate(1).is_err());
    }

    #[test]
    fn path_enumeration_counts() {
        // 1 + n + n(n-1) + n(n-1)^2
        assert_eq!(TreePath::all_up_to(3, 3).len(), 1 + 3 + 6 + 12);
        let paths = TreePath::all_up_to(2, 4);
        assert!(paths.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
    }

    #[test]
    fn initial_seed_is_variables() {
        let s = Seed::initial(&a2());
        assert_eq!(s.cluster(), &[LaurentPolynomial::variable(2, 0), LaurentPolynomial::variable(2, 1)]);
        assert!(s.path().is_empty());
    }

    #[test]
    fn a2_exchange_relation() {
        let s = Seed::initial(&a2()).mutate(0).unwrap();
        assert_eq!(s.cluster()[0], poly(2, &[(&[-1, 0], 1), (&[-1, 1], 1)]));
        assert_eq!(s.cluster()[1], LaurentPolynomial::variable(2, 1));
        let t = Seed::at(&a2(), &TreePath::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(t.cluster()[1], poly(2, &[(&[-1, -1], 1), (&[0, -1], 1), (&[-1, 0], 1)]));
    }

    #[test]
    fn mutation_is_involution_on_seeds() {
        let s = Seed::initial(&a3()).mutate(1).unwrap().mutate(0).unwrap();
        let back = s.mutate(0).unwrap();
        assert_eq!(back, Seed::at(&a3(), &TreePath::new(vec![1]).unwrap()).unwrap());
    }

    #[test]
    fn a2_pentagon_relabels() {
        let start = Seed::initial(&a2());
        let mut seed = start.clone();
        let mut keys = BTreeSet::new();
        for &k in &[0, 1, 0, 1, 0] {
            seed = seed.mutate(k).unwrap();
            keys.insert(seed.canonical_key());
        }
        assert_eq!(keys.len(), 5);
        assert_eq!(seed.canonical_key(), start.canonical_key());
        assert_ne!(seed.cluster(), start.cluster());
    }

    #[test]
    fn explore_a2() {
        let e = explore(&a2(), ExploreLimits::default()).unwrap();
        assert!(e.closed());
        assert_eq!(e.num_seeds(), 5);
        assert_eq!(e.edges.len(), 5);
        let vars: Vec<_> = e.distinct_cluster_variables().into_iter().collect();
        let expected: BTreeSet<_> = [
            LaurentPolynomial::variable(2, 0),
            LaurentPolynomial::variable(2, 1),
            poly(2, &[(&[-1, 0], 1), (&[-1, 1], 1)]),
            poly(2, &[(&[-1, -1], 1), (&[0, -1], 1), (&[-1, 0], 1)]),
            poly(2, &[(&[0, -1], 1), (&[1, -1], 1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(vars.into_iter().collect::<BTreeSet<_>>(), expected);
        assert!(e.positivity_violations().is_empty());
    }

    #[test]
    fn explore_kronecker_does_not_close() {
        let b = ExchangeMatrix::from_rows(&[[0, 2], [-2, 0]]).unwrap();
        let e = explore(&b, ExploreLimits { max_depth: 10, max_seeds: 100_000 }).unwrap();
        assert_eq!(e.status, ExploreStatus::DepthBound);
        assert_eq!(e.depth_reached, 10);
        let e = explore(&b, ExploreLimits { max_depth: 50, max_seeds: 7 }).unwrap();
        assert_eq!(e.status, ExploreStatus::SeedBound);
        assert_eq!(e.num_seeds(), 7);
    }

    #[test]
    fn explore_rank_one() {
        let b = ExchangeMatrix::from_rows(&[[0]]).unwrap();
        let e = explore(&b, ExploreLimits::default()).unwrap();
        assert!(e.closed());
        assert_eq!(e.num_seeds(), 2);
        let vars: BTreeSet<_> = e.distinct_cluster_variables();
        let expected: BTreeSet<_> =
            [LaurentPolynomial::variable(1, 0), poly(1, &[(&[-1], 2)])].into_iter().collect();
        assert_eq!(vars, expected);
    }

    #[test]
    fn explore_a3_counts() {
        let e = explore(&a3(), ExploreLimits::default()).unwrap();
        assert!(e.closed());
        assert_eq!(e.num_seeds(), 14);
        assert_eq!(e.distinct_cluster_variables().len(), 9);
        // associahedron K5: 14 vertices, 21 edges
        assert_eq!(e.edges.len(), 21);
    }

    #[test]
    fn witness_paths_replay_to_keys() {
        let e = explore(&a3(), ExploreLimits::default()).unwrap();
        for s in &e.seeds {
            assert_eq!(Seed::at(&a3(), &s.path).unwrap().canonical_key(), s.key);
        }
    }

    #[test]
    fn equal_keys_have_equal_neighbourhoods() {
        // pentagon: the seed after 1,2,1,2,1 is the initial seed relabeled
        let b = a2();
        let p = TreePath::new(vec![0, 1, 0, 1, 0]).unwrap();
        let s = Seed::at(&b, &p).unwrap();
        let r = Seed::initial(&b);
        assert_eq!(s.canonical_key(), r.canonical_key());
        let neighbours = |seed: &Seed| -> BTreeSet<CanonicalSeedKey> {
            (0..seed.rank()).map(|k| seed.mutate(k).unwrap().canonical_key()).collect()
        };
        assert_eq!(neighbours(&s), neighbours(&r));
    }

    #[test]
    fn exploration_is_deterministic() {
        let a = explore(&a3(), ExploreLimits::default()).unwrap().report();
        let b = explore(&a3(), ExploreLimits::default()).unwrap().report();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn labeled_closure_a2() {
        // 5 unlabeled seeds, each with 2 labelings
        let paths = labeled_closure(&a2(), ExploreLimits::default()).unwrap().unwrap();
        assert_eq!(paths.len(), 10);
        let kron = ExchangeMatrix::from_rows(&[[0, 2], [-2, 0]]).unwrap();
        assert!(labeled_closure(&kron, ExploreLimits { max_depth: 6, max_seeds: 1000 })
            .unwrap()
            .is_none());
    }
}
