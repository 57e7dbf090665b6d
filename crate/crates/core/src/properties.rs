//! Checkers for the D-matrix duality (D), the initial-seed recursion (R),
//! the M-from-D formula (M), the row-replacement law, and the source-sink
//! forms of the initial-seed recursion.
//!
//! A checker evaluates both sides of an identity at one instance and returns
//! a [`PropertyReport`]; sweeps and searches run checkers over every walk up
//! to a depth in shortlex order, so the first reported violation is stable.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrices::{ExchangeMatrix, IntMatrix};
use crate::seeds::TreePath;
use crate::vectors::{row_replacement, Route, VectorOracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyId {
    /// `(D_t^{B0;t0})^T = D_{t0}^{(-B_t)^T;t}`
    D,
    /// `D_t^{B1;t1} = J_k D_t + max([B0^{k•}]_+ D_t, [-B0^{k•}]_+ D_t)`
    R,
    /// `M_t = -D_t + max([B0]_+ D_t, [-B0]_+ D_t)`
    M,
    /// `D_t^{B1;t1} = J_k D_t + [|B0^{k•}| D_t]_+` at a source or sink `k`
    RSourceSink,
    /// `D_t^{B1;t1} = sigma_k D_t` at a source or sink `k`
    Sigma,
    /// `D_t^{B1;t1}` is `D_t` with row `k` taken from `M_t`
    MdInit,
}

impl PropertyId {
    pub fn name(self) -> &'static str {
        match self {
            PropertyId::D => "D",
            PropertyId::R => "R",
            PropertyId::M => "M",
            PropertyId::RSourceSink => "R-source-sink",
            PropertyId::Sigma => "sigma",
            PropertyId::MdInit => "MDinit",
        }
    }

    /// Whether the property is stated per mutation direction of the initial seed.
    pub fn takes_direction(self) -> bool {
        !matches!(self, PropertyId::D | PropertyId::M)
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d" => Ok(PropertyId::D),
            "r" => Ok(PropertyId::R),
            "m" => Ok(PropertyId::M),
            "source-sink" | "r-source-sink" | "sourcesink" => Ok(PropertyId::RSourceSink),
            "sigma" => Ok(PropertyId::Sigma),
            "mdinit" | "md-init" => Ok(PropertyId::MdInit),
            _ => Err(Error::Parse(format!("unknown property {s:?}"))),
        }
    }
}

impl Serialize for PropertyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Outcome of one property check, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub b0: ExchangeMatrix,
    pub path: TreePath,
    pub k: Option<usize>,
    pub holds: bool,
    pub lhs: IntMatrix,
    pub rhs: IntMatrix,
}

impl PropertyReport {
    fn new(
        property: PropertyId,
        b0: &ExchangeMatrix,
        path: &TreePath,
        k: Option<usize>,
        lhs: IntMatrix,
        rhs: IntMatrix,
    ) -> Self {
        PropertyReport {
            property,
            b0: b0.clone(),
            path: path.clone(),
            k,
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }

    /// First differing entry, zero-based.
    pub fn mismatch(&self) -> Option<(usize, usize)> {
        self.lhs.first_difference(&self.rhs)
    }
}

#[derive(Serialize)]
struct PropertyReportJson<'a> {
    property: PropertyId,
    #[serde(rename = "B0")]
    b0: &'a IntMatrix,
    path: &'a TreePath,
    k: Option<usize>,
    holds: bool,
    lhs: &'a IntMatrix,
    rhs: &'a IntMatrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<[usize; 2]>,
}

impl Serialize for PropertyReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PropertyReportJson {
            property: self.property,
            b0: self.b0.as_matrix(),
            path: &self.path,
            k: self.k.map(|k| k + 1),
            holds: self.holds,
            lhs: &self.lhs,
            rhs: &self.rhs,
            mismatch: self.mismatch().map(|(i, j)| [i + 1, j + 1]),
        }
        .serialize(s)
    }
}

/// Simple-root coordinates `[beta : alpha_i]` of a root-lattice vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector(pub Vec<i64>);

impl From<Vec<i64>> for RootVector {
    fn from(v: Vec<i64>) -> Self {
        RootVector(v)
    }
}

/// Piecewise-linear modification of the simple reflection `s_k` for the
/// Cartan companion of `b0`:
/// `[sigma_k beta : alpha_k] = -[beta : alpha_k] + sum_l |b_kl| [[beta : alpha_l]]_+`,
/// all other coordinates fixed.
pub fn sigma_k(b0: &ExchangeMatrix, k: usize, v: &RootVector) -> Result<RootVector> {
    b0.check_direction(k)?;
    if v.0.len() != b0.rank() {
        return Err(Error::Shape(format!("root vector of length {} for rank {}", v.0.len(), b0.rank())));
    }
    let mut acc = v.0[k].checked_neg().ok_or(Error::Overflow("sigma_k"))?;
    for (l, &coord) in v.0.iter().enumerate() {
        acc = b0
            .get(k, l)
            .abs()
            .checked_mul(coord.max(0))
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("sigma_k"))?;
    }
    let mut out = v.0.clone();
    out[k] = acc;
    Ok(RootVector(out))
}

/// `sigma_k` applied to every column.
pub fn sigma_k_matrix(b0: &ExchangeMatrix, k: usize, d: &IntMatrix) -> Result<IntMatrix> {
    let columns = (0..d.cols())
        .map(|j| sigma_k(b0, k, &RootVector(d.column(j))).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_columns(&columns)
}

/// `J_k D + max([B0^{k•}]_+ D, [-B0^{k•}]_+ D)`.
pub fn initial_recursion_rhs(b0: &ExchangeMatrix, k: usize, d: &IntMatrix) -> Result<IntMatrix> {
    let row = b0.as_matrix().row_mask(k)?;
    let plus = row.positive_part().mul(d)?;
    let minus = row.neg()?.positive_part().mul(d)?;
    IntMatrix::j_matrix(b0.rank(), k)?.mul(d)?.add(&plus.entrywise_max(&minus)?)
}

/// `-D + max([B0]_+ D, [-B0]_+ D)`.
pub fn m_from_d(b0: &ExchangeMatrix, d: &IntMatrix) -> Result<IntMatrix> {
    let b = b0.as_matrix();
    let plus = b.positive_part().mul(d)?;
    let minus = b.neg()?.positive_part().mul(d)?;
    d.neg()?.add(&plus.entrywise_max(&minus)?)
}

/// `J_k D + [|B0^{k•}| D]_+`.
pub fn source_sink_rhs(b0: &ExchangeMatrix, k: usize, d: &IntMatrix) -> Result<IntMatrix> {
    let row = b0.as_matrix().row_mask(k)?.abs()?;
    IntMatrix::j_matrix(b0.rank(), k)?
        .mul(d)?
        .add(&row.mul(d)?.positive_part())
}

/// Both source-sink forms at one instance.
#[derive(Clone, Debug, Serialize)]
pub struct SourceSinkReport {
    pub abs_form: PropertyReport,
    pub sigma_form: PropertyReport,
    /// Whether `D_t^{B0;t0}` has signed columns.
    pub signed_columns: bool,
    /// Whether the two right-hand sides coincide.
    pub forms_agree: bool,
}

/// Result of sweeping D, R and M over all walks up to a depth.
#[derive(Clone, Debug, Serialize)]
pub struct DrmSummary {
    #[serde(rename = "B0")]
    pub b0: ExchangeMatrix,
    pub depth: usize,
    pub paths: usize,
    pub d_failures: Vec<TreePath>,
    /// `(path, one-based k)` pairs.
    pub r_failures: Vec<(TreePath, usize)>,
    pub m_failures: Vec<TreePath>,
    /// Instances where R and row `k` of M disagree. Always expected empty.
    pub r_iff_m_row_exceptions: Vec<(TreePath, usize)>,
    /// D held at `(B0, t0, t)` and `(B1, t1, t)` but R failed.
    pub d_implies_r_exceptions: Vec<(TreePath, usize)>,
    /// R held along every edge of the walk but D failed at its end.
    pub r_implies_d_exceptions: Vec<TreePath>,
}

impl DrmSummary {
    pub fn all_total(&self) -> bool {
        self.d_failures.is_empty() && self.r_failures.is_empty() && self.m_failures.is_empty()
    }

    pub fn all_violated(&self) -> bool {
        !self.d_failures.is_empty() && !self.r_failures.is_empty() && !self.m_failures.is_empty()
    }

    /// The general implications between the three properties held on every
    /// tested instance.
    pub fn implications_hold(&self) -> bool {
        self.r_iff_m_row_exceptions.is_empty()
            && self.d_implies_r_exceptions.is_empty()
            && self.r_implies_d_exceptions.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Found {
        /// Walk from the seed of the searched matrix to the witness's
        /// initial seed; the witness's `B0` is the matrix there.
        initial_walk: TreePath,
        witness: Box<PropertyReport>,
        examined: usize,
    },
    NoneFound {
        examined: usize,
        budget_exhausted: bool,
    },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&PropertyReport> {
        match self {
            SearchOutcome::Found { witness, .. } => Some(witness),
            SearchOutcome::NoneFound { .. } => None,
        }
    }
}

/// Property checker backed by a [`VectorOracle`].
#[derive(Debug)]
pub struct Checker {
    oracle: VectorOracle,
}

impl Default for Checker {
    fn default() -> Self {
        Checker::new(Route::Laurent)
    }
}

impl Checker {
    pub fn new(route: Route) -> Self {
        Checker { oracle: VectorOracle::new(route) }
    }

    pub fn route(&self) -> Route {
        self.oracle.route()
    }

    pub fn oracle(&self) -> &VectorOracle {
        &self.oracle
    }

    /// `D_t^{B1;t1}`: the seed at `path` measured from the initial seed
    /// mutated at `k`.
    fn d_from_mutated_initial(&self, b0: &ExchangeMatrix, k: usize, path: &TreePath) -> Result<IntMatrix> {
        let b1 = b0.mutate(k)?;
        self.oracle.d_matrix(&b1, &path.prepend(k))
    }

    /// Property D. The right side starts from `(-B_t)^T` at `t` and walks the
    /// reversed word back to `t0`.
    pub fn property_d(&self, b0: &ExchangeMatrix, path: &TreePath) -> Result<PropertyReport> {
        path.validate(b0.rank())?;
        let lhs = self.oracle.d_matrix(b0, path)?.transpose();
        let bt = b0.mutate_along(path.letters())?;
        let rhs = self.oracle.d_matrix(&bt.neg_transpose(), &path.reversed())?;
        Ok(PropertyReport::new(PropertyId::D, b0, path, None, lhs, rhs))
    }

    /// Property R for the edge `t0 --k-- t1`.
    pub fn property_r(&self, b0: &ExchangeMatrix, path: &TreePath, k: usize) -> Result<PropertyReport> {
        b0.check_direction(k)?;
        path.validate(b0.rank())?;
        let lhs = self.d_from_mutated_initial(b0, k, path)?;
        let rhs = initial_recursion_rhs(b0, k, &self.oracle.d_matrix(b0, path)?)?;
        Ok(PropertyReport::new(PropertyId::R, b0, path, Some(k), lhs, rhs))
    }

    /// Property M.
    pub fn property_m(&self, b0: &ExchangeMatrix, path: &TreePath) -> Result<PropertyReport> {
        path.validate(b0.rank())?;
        let lhs = self.oracle.m_matrix(b0, path)?;
        let rhs = m_from_d(b0, &self.oracle.d_matrix(b0, path)?)?;
        Ok(PropertyReport::new(PropertyId::M, b0, path, None, lhs, rhs))
    }

    /// Row-replacement law for the edge `t0 --k-- t1`; the right side is the
    /// formula, the left side a re-expansion from `mu_k(B0)`.
    pub fn md_init(&self, b0: &ExchangeMatrix, path: &TreePath, k: usize) -> Result<PropertyReport> {
        b0.check_direction(k)?;
        path.validate(b0.rank())?;
        let lhs = self.d_from_mutated_initial(b0, k, path)?;
        let rhs = row_replacement(&self.oracle.d_matrix(b0, path)?, &self.oracle.m_matrix(b0, path)?, k)?;
        Ok(PropertyReport::new(PropertyId::MdInit, b0, path, Some(k), lhs, rhs))
    }

    /// Both source-sink forms of the initial-seed recursion. Fails with
    /// [`Error::NotSourceSink`] unless row `k` of `b0` weakly agrees in sign.
    pub fn source_sink(&self, b0: &ExchangeMatrix, k: usize, path: &TreePath) -> Result<SourceSinkReport> {
        if !b0.is_source_sink(k)? {
            return Err(Error::NotSourceSink(k + 1));
        }
        path.validate(b0.rank())?;
        let d = self.oracle.d_matrix(b0, path)?;
        let lhs = self.d_from_mutated_initial(b0, k, path)?;
        let abs_rhs = source_sink_rhs(b0, k, &d)?;
        let sigma_rhs = sigma_k_matrix(b0, k, &d)?;
        let forms_agree = abs_rhs == sigma_rhs;
        Ok(SourceSinkReport {
            abs_form: PropertyReport::new(PropertyId::RSourceSink, b0, path, Some(k), lhs.clone(), abs_rhs),
            sigma_form: PropertyReport::new(PropertyId::Sigma, b0, path, Some(k), lhs, sigma_rhs),
            signed_columns: d.has_signed_columns(),
            forms_agree,
        })
    }

    /// Dispatch by property id. Direction-free properties ignore `k`.
    pub fn check(&self, property: PropertyId, b0: &ExchangeMatrix, path: &TreePath, k: usize) -> Result<PropertyReport> {
        match property {
            PropertyId::D => self.property_d(b0, path),
            PropertyId::M => self.property_m(b0, path),
            PropertyId::R => self.property_r(b0, path, k),
            PropertyId::MdInit => self.md_init(b0, path, k),
            PropertyId::RSourceSink => Ok(self.source_sink(b0, k, path)?.abs_form),
            PropertyId::Sigma => Ok(self.source_sink(b0, k, path)?.sigma_form),
        }
    }

    /// Every report of `property` at one walk: one per applicable direction,
    /// or a single report for direction-free properties.
    pub fn check_all_directions(
        &self,
        property: PropertyId,
        b0: &ExchangeMatrix,
        path: &TreePath,
    ) -> Result<Vec<PropertyReport>> {
        if !property.takes_direction() {
            return Ok(vec![self.check(property, b0, path, 0)?]);
        }
        let mut out = Vec::new();
        for k in 0..b0.rank() {
            let applicable = !matches!(property, PropertyId::RSourceSink | PropertyId::Sigma)
                || b0.is_source_sink(k)?;
            if applicable {
                out.push(self.check(property, b0, path, k)?);
            }
        }
        Ok(out)
    }

    /// Whether row `k` of the M-from-D identity holds at `path`.
    pub fn m_row_holds(&self, b0: &ExchangeMatrix, path: &TreePath, k: usize) -> Result<bool> {
        let report = self.property_m(b0, path)?;
        Ok(report.lhs.row(k) == report.rhs.row(k))
    }

    /// Sweeps D, R (all directions) and M over every walk of length
    /// `<= depth`, and cross-checks the implications between them.
    pub fn drm_equivalence(&self, b0: &ExchangeMatrix, depth: usize) -> Result<DrmSummary> {
        let n = b0.rank();
        let paths = TreePath::all_up_to(n, depth);

        struct PathResult {
            d_holds: bool,
            m: PropertyReport,
            r: Vec<bool>,
            d_after: Vec<bool>,
            r_along_walk: bool,
        }

        let results: Vec<PathResult> = paths
            .par_iter()
            .map(|path| -> Result<PathResult> {
                let d_holds = self.property_d(b0, path)?.holds;
                let m = self.property_m(b0, path)?;
                let mut r = Vec::with_capacity(n);
                let mut d_after = Vec::with_capacity(n);
                for k in 0..n {
                    r.push(self.property_r(b0, path, k)?.holds);
                    d_after.push(self.property_d(&b0.mutate(k)?, &path.prepend(k))?.holds);
                }
                // R across each edge t_{i-1} --k_i-- t_i of the walk, for the target t
                let letters = path.letters();
                let mut b = b0.clone();
                let mut r_along_walk = true;
                for i in 0..letters.len() {
                    let suffix = TreePath::new(letters[i..].to_vec())?;
                    if !self.property_r(&b, &suffix, letters[i])?.holds {
                        r_along_walk = false;
                        break;
                    }
                    b = b.mutate(letters[i])?;
                }
                Ok(PathResult { d_holds, m, r, d_after, r_along_walk })
            })
            .collect::<Result<_>>()?;

        let mut summary = DrmSummary {
            b0: b0.clone(),
            depth,
            paths: paths.len(),
            d_failures: Vec::new(),
            r_failures: Vec::new(),
            m_failures: Vec::new(),
            r_iff_m_row_exceptions: Vec::new(),
            d_implies_r_exceptions: Vec::new(),
            r_implies_d_exceptions: Vec::new(),
        };
        for (path, res) in paths.iter().zip(results) {
            if !res.d_holds {
                summary.d_failures.push(path.clone());
            }
            if !res.m.holds {
                summary.m_failures.push(path.clone());
            }
            for k in 0..n {
                if !res.r[k] {
                    summary.r_failures.push((path.clone(), k + 1));
                }
                let m_row = res.m.lhs.row(k) == res.m.rhs.row(k);
                if res.r[k] != m_row {
                    summary.r_iff_m_row_exceptions.push((path.clone(), k + 1));
                }
                if res.d_holds && res.d_after[k] && !res.r[k] {
                    summary.d_implies_r_exceptions.push((path.clone(), k + 1));
                }
            }
            if res.r_along_walk && !res.d_holds {
                summary.r_implies_d_exceptions.push(path.clone());
            }
        }
        Ok(summary)
    }

    /// First violation of `property` anywhere in the cluster pattern of `b0`.
    ///
    /// Instances are pairs `(w, p)`: the walk `w` from the seed of `b0` to an
    /// initial seed `t0`, then the walk `p` from `t0` to `t`, with
    /// `|w| + |p| <= depth`. They are swept by total length, then `|w|`, then
    /// `w` and `p` in shortlex order, then direction ascending. At most
    /// `budget` pairs are examined.
    pub fn search_counterexample(
        &self,
        b0: &ExchangeMatrix,
        property: PropertyId,
        depth: usize,
        budget: usize,
    ) -> Result<SearchOutcome> {
        const CHUNK: usize = 2048;
        let n = b0.rank();
        let mut levels = vec![vec![TreePath::empty()]];
        let mut examined = 0;
        for total in 0..=depth {
            if total > 0 {
                let next = levels[total - 1]
                    .iter()
                    .flat_map(|p| (0..n).filter(|&k| p.last() != Some(k)).map(|k| p.then(k)))
                    .collect();
                levels.push(next);
            }
            let mut pairs = (0..=total).flat_map(|i| {
                let tails = &levels[total - i];
                levels[i].iter().flat_map(move |w| tails.iter().map(move |p| (w, p)))
            });
            loop {
                let chunk: Vec<_> = pairs.by_ref().take(CHUNK.min(budget - examined)).collect();
                if chunk.is_empty() {
                    break;
                }
                let found = chunk
                    .par_iter()
                    .map(|(w, p)| -> Result<Option<PropertyReport>> {
                        let root = b0.mutate_along(w.letters())?;
                        Ok(self.check_all_directions(property, &root, p)?.into_iter().find(|r| !r.holds))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if let Some(pos) = found.iter().position(Option::is_some) {
                    let witness = found.into_iter().nth(pos).flatten().expect("found");
                    return Ok(SearchOutcome::Found {
                        initial_walk: chunk[pos].0.clone(),
                        witness: Box::new(witness),
                        examined: examined + pos + 1,
                    });
                }
                examined += chunk.len();
                if examined == budget {
                    let exhausted = pairs.next().is_some() || total < depth;
                    return Ok(SearchOutcome::NoneFound { examined, budget_exhausted: exhausted });
                }
            }
        }
        Ok(SearchOutcome::NoneFound { examined, budget_exhausted: false })
    }
}

/// Recomputes a report from scratch with Laurent expansions.
pub fn replay(report: &PropertyReport) -> Result<PropertyReport> {
    Checker::new(Route::Laurent).check(report.property, &report.b0, &report.path, report.k.unwrap_or(0))
}

pub fn check_property_d(b0: &ExchangeMatrix, path: &TreePath) -> Result<PropertyReport> {
    Checker::default().property_d(b0, path)
}

pub fn check_property_r(b0: &ExchangeMatrix, path: &TreePath, k: usize) -> Result<PropertyReport> {
    Checker::default().property_r(b0, path, k)
}

pub fn check_property_m(b0: &ExchangeMatrix, path: &TreePath) -> Result<PropertyReport> {
    Checker::default().property_m(b0, path)
}

pub fn check_source_sink(b0: &ExchangeMatrix, k: usize, path: &TreePath) -> Result<SourceSinkReport> {
    Checker::default().source_sink(b0, k, path)
}

pub fn check_drm_equivalence(b0: &ExchangeMatrix, depth: usize) -> Result<DrmSummary> {
    Checker::default().drm_equivalence(b0, depth)
}

pub fn search_counterexample(
    b0: &ExchangeMatrix,
    property: PropertyId,
    depth: usize,
    budget: usize,
) -> Result<SearchOutcome> {
    Checker::new(Route::Recursion).search_counterexample(b0, property, depth, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use proptest::prelude::*;

    fn path(word: &[usize]) -> TreePath {
        TreePath::new(word.to_vec()).unwrap()
    }

    fn a2() -> ExchangeMatrix {
        presets::preset("a2").unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_k(&a2(), 0, &vec![1, 1].into()).unwrap(), vec![0, 1].into());
        assert_eq!(sigma_k(&a2(), 0, &vec![-1, 0].into()).unwrap(), vec![1, 0].into());
        let k2 = ExchangeMatrix::from_rows(&[[0, 2], [-2, 0]]).unwrap();
        assert_eq!(sigma_k(&k2, 0, &vec![2, 3].into()).unwrap(), vec![4, 3].into());
        assert!(sigma_k(&a2(), 0, &vec![1].into()).is_err());
        assert!(sigma_k(&a2(), 2, &vec![1, 1].into()).is_err());
    }

    #[test]
    fn signed_predicates() {
        let neg_i = IntMatrix::identity(2).neg().unwrap();
        assert!(neg_i.has_signed_columns() && neg_i.has_signed_rows());
        let mixed = IntMatrix::from_rows(&[[1, -1], [-1, 1]]).unwrap();
        assert!(!mixed.has_signed_columns() && !mixed.has_signed_rows());
        let cols = IntMatrix::from_rows(&[[1, 0], [2, -1]]).unwrap();
        assert!(cols.has_signed_columns());
        assert!(!cols.has_signed_rows());
    }

    #[test]
    fn properties_hold_at_root() {
        for name in presets::NAMES {
            let b0 = presets::preset(name).unwrap();
            assert!(check_property_d(&b0, &TreePath::empty()).unwrap().holds, "{name}");
            assert!(check_property_m(&b0, &TreePath::empty()).unwrap().holds, "{name}");
            for k in 0..b0.rank() {
                let r = check_property_r(&b0, &TreePath::empty(), k).unwrap();
                assert!(r.holds, "{name} k={k}");
            }
        }
    }

    #[test]
    fn m_at_root_for_a2() {
        let r = check_property_m(&a2(), &TreePath::empty()).unwrap();
        assert_eq!(r.rhs, IntMatrix::identity(2));
    }

    #[test]
    fn m_after_one_mutation_for_a2() {
        let r = check_property_m(&a2(), &path(&[0])).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs.column(0), vec![-1, 1]);
    }

    #[test]
    fn a2_drm_total() {
        let s = check_drm_equivalence(&a2(), 6).unwrap();
        assert!(s.all_total(), "{s:?}");
        assert!(s.implications_hold());
    }

    #[test]
    fn rank_two_kronecker_r_holds() {
        let b = ExchangeMatrix::from_rows(&[[0, 2], [-2, 0]]).unwrap();
        let c = Checker::default();
        for len in 0..=8 {
            let word: Vec<usize> = (0..len).map(|i| i % 2).collect();
            for k in 0..2 {
                assert!(c.property_r(&b, &path(&word), k).unwrap().holds, "len {len} k {k}");
            }
        }
    }

    #[test]
    fn source_sink_requires_sign_agreement() {
        let cyc = ExchangeMatrix::from_rows(&[[0, 1, -1], [-1, 0, 1], [1, -1, 0]]).unwrap();
        assert_eq!(
            check_source_sink(&cyc, 0, &TreePath::empty()).unwrap_err(),
            Error::NotSourceSink(1)
        );
    }

    #[test]
    fn source_sink_a2() {
        for p in TreePath::all_up_to(2, 6) {
            let r = check_source_sink(&a2(), 0, &p).unwrap();
            assert!(r.abs_form.holds && r.sigma_form.holds, "{p}");
            if r.signed_columns {
                assert!(r.forms_agree);
            }
        }
    }

    #[test]
    fn routes_agree_on_reports() {
        let b0 = presets::preset("markov").unwrap();
        let laurent = Checker::new(Route::Laurent);
        let rec = Checker::new(Route::Recursion);
        for p in TreePath::all_up_to(3, 3) {
            assert_eq!(laurent.property_d(&b0, &p).unwrap(), rec.property_d(&b0, &p).unwrap());
            for k in 0..3 {
                assert_eq!(laurent.property_r(&b0, &p, k).unwrap(), rec.property_r(&b0, &p, k).unwrap());
            }
        }
    }

    #[test]
    fn a3_search_finds_nothing() {
        let out = search_counterexample(&presets::preset("a3").unwrap(), PropertyId::D, 8, 100_000).unwrap();
        assert!(matches!(out, SearchOutcome::NoneFound { budget_exhausted: false, .. }), "{out:?}");
    }

    #[test]
    fn search_budget_is_reported() {
        let out = search_counterexample(&presets::preset("a3").unwrap(), PropertyId::D, 8, 10).unwrap();
        assert!(matches!(out, SearchOutcome::NoneFound { examined: 10, budget_exhausted: true }));
    }

    #[test]
    fn atilde31_d_fails_away_from_acyclic_seed() {
        let b0 = presets::preset("atilde31").unwrap();
        // none with t0 at the acyclic seed itself
        let rec = Checker::new(Route::Recursion);
        assert!(TreePath::all_up_to(4, 6).iter().all(|p| rec.property_d(&b0, p).unwrap().holds));
        let out = search_counterexample(&b0, PropertyId::D, 10, 100_000).unwrap();
        let SearchOutcome::Found { initial_walk, witness, .. } = out else { panic!("{out:?}") };
        assert_eq!(witness.b0, b0.mutate_along(initial_walk.letters()).unwrap());
        let again = replay(&witness).unwrap();
        assert!(!again.holds);
        assert_eq!((again.lhs, again.rhs), (witness.lhs.clone(), witness.rhs.clone()));
    }

    #[test]
    fn rank_two_one_four_r_search() {
        let b = ExchangeMatrix::from_rows(&[[0, 1], [-4, 0]]).unwrap();
        let out = Checker::default().search_counterexample(&b, PropertyId::R, 8, 1000).unwrap();
        assert!(out.witness().is_none());
    }

    #[test]
    fn property_parsing() {
        assert_eq!("D".parse::<PropertyId>().unwrap(), PropertyId::D);
        assert_eq!("source-sink".parse::<PropertyId>().unwrap(), PropertyId::RSourceSink);
        assert_eq!("MDinit".parse::<PropertyId>().unwrap(), PropertyId::MdInit);
        assert!("X".parse::<PropertyId>().is_err());
    }

    #[test]
    fn report_json_is_one_based() {
        let r = check_property_r(&a2(), &path(&[0]), 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["property"], "R");
        assert_eq!(v["path"], serde_json::json!([1]));
        assert_eq!(v["k"], 2);
        assert_eq!(v["holds"], true);
        assert!(v.get("mismatch").is_none());
    }

    proptest! {
        #[test]
        fn sigma_involutive_on_nonnegative(v in proptest::collection::vec(0i64..20, 3), k in 0usize..3) {
            let b0 = presets::preset("markov").unwrap();
            let v = RootVector(v);
            prop_assert_eq!(sigma_k(&b0, k, &sigma_k(&b0, k, &v).unwrap()).unwrap(), v);
        }

        #[test]
        fn sigma_involutive_on_negative_simple_roots(i in 0usize..5, k in 0usize..5) {
            let b0 = presets::preset("dtilde4").unwrap();
            let mut v = vec![0; 5];
            v[i] = -1;
            let v = RootVector(v);
            prop_assert_eq!(sigma_k(&b0, k, &sigma_k(&b0, k, &v).unwrap()).unwrap(), v);
        }
    }
}
