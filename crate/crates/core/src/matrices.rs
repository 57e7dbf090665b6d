//! Integer matrices, exchange matrices and matrix mutation.
//!
//! Indices are zero-based throughout the library; the command line and the
//! JSON path fields are one-based.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 12;

/// Dense row-major integer matrix with overflow-checked arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("{rows}x{cols} matrix")));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Self::new(nrows, ncols, data)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let data = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        IntMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| 0)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| (i == j) as i64)
    }

    /// `J_k`: the identity with the `(k, k)` entry replaced by `-1`.
    pub fn j_matrix(n: usize, k: usize) -> Result<Self> {
        check_index(k, n)?;
        Ok(Self::from_fn(n, n, |i, j| match (i == j, i == k) {
            (true, true) => -1,
            (true, false) => 1,
            _ => 0,
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_columns(columns: &[Vec<i64>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape("ragged columns".into()));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("{rows}x{cols} matrix")));
        }
        Ok(Self::from_fn(rows, cols, |i, j| columns[j][i]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }

    fn checked_map(&self, what: &'static str, f: impl Fn(i64) -> Option<i64>) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|&a| f(a).ok_or(Error::Overflow(what)))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    fn zip_with(
        &self,
        other: &Self,
        what: &'static str,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow(what)))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn neg(&self) -> Result<Self> {
        self.checked_map("negation", i64::checked_neg)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "addition", i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "subtraction", i64::checked_sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i64 = 0;
                for l in 0..self.cols {
                    let a = self.get(i, l);
                    if a == 0 {
                        continue;
                    }
                    acc = a
                        .checked_mul(other.get(l, j))
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow("matrix product"))?;
                }
                data.push(acc);
            }
        }
        Ok(IntMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// `[A]_+`: every entry replaced by `max(a, 0)`.
    pub fn positive_part(&self) -> Self {
        self.map(|a| a.max(0))
    }

    /// `|A|`.
    pub fn abs(&self) -> Result<Self> {
        self.checked_map("absolute value", i64::checked_abs)
    }

    pub fn entrywise_max(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "max", |a, b| Some(a.max(b)))
    }

    /// `A^{k•}`: all rows other than `k` zeroed.
    pub fn row_mask(&self, k: usize) -> Result<Self> {
        check_index(k, self.rows)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| if i == k { self.get(i, j) } else { 0 }))
    }

    /// `A^{•k}`: all columns other than `k` zeroed.
    pub fn col_mask(&self, k: usize) -> Result<Self> {
        check_index(k, self.cols)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| if j == k { self.get(i, j) } else { 0 }))
    }

    /// Copy of `self` with row `k` taken from `other`.
    pub fn replace_row(&self, k: usize, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        check_index(k, self.rows)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            if i == k {
                other.get(i, j)
            } else {
                self.get(i, j)
            }
        }))
    }

    /// Every column is entirely `>= 0` or entirely `<= 0`.
    pub fn has_signed_columns(&self) -> bool {
        (0..self.cols).all(|j| is_signed((0..self.rows).map(|i| self.get(i, j))))
    }

    /// Every row is entirely `>= 0` or entirely `<= 0`.
    pub fn has_signed_rows(&self) -> bool {
        (0..self.rows).all(|i| is_signed(self.row(i).iter().copied()))
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|p| (p / self.cols, p % self.cols))
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert!(self.is_square() && perm.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]))
    }
}

fn is_signed(mut entries: impl Iterator<Item = i64> + Clone) -> bool {
    entries.clone().all(|a| a >= 0) || entries.all(|a| a <= 0)
}

fn check_index(k: usize, n: usize) -> Result<()> {
    if k >= n {
        Err(Error::IndexOutOfRange { k, n })
    } else {
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, a) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IntMatrix::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// Finds positive integers `d` with `d_i b_ij = -d_j b_ji`.
///
/// Ratios are propagated along the graph of nonzero entries; each connected
/// component is normalized to coprime entries, isolated vertices get `1`.
#[allow(clippy::needless_range_loop)]
pub fn skew_symmetrizer(b: &IntMatrix) -> Option<Vec<i64>> {
    if !b.is_square() {
        return None;
    }
    let n = b.rows();
    // d_i as a reduced fraction num/den
    let mut ratio: Vec<Option<(i128, i128)>> = vec![None; n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        ratio[root] = Some((1, 1));
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let (num, den) = ratio[i].expect("visited");
            for j in 0..n {
                let (bij, bji) = (b.get(i, j) as i128, b.get(j, i) as i128);
                if bij == 0 && bji == 0 {
                    continue;
                }
                if bij == 0 || bji == 0 || bij.signum() == bji.signum() {
                    return None;
                }
                // d_j = -d_i * b_ij / b_ji
                let (mut jn, mut jd) = (num * -bij, den * bji);
                if jd < 0 {
                    jn = -jn;
                    jd = -jd;
                }
                let g = jn.gcd(&jd);
                let (jn, jd) = (jn / g, jd / g);
                match ratio[j] {
                    None => {
                        ratio[j] = Some((jn, jd));
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != (jn, jd) => return None,
                    Some(_) => {}
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i128, |acc, &i| acc.lcm(&ratio[i].expect("visited").1));
        let scaled: Vec<i128> = component
            .iter()
            .map(|&i| {
                let (num, den) = ratio[i].expect("visited");
                num * (lcm / den)
            })
            .collect();
        let g = scaled.iter().fold(0i128, |acc, v| acc.gcd(v));
        for (&i, v) in component.iter().zip(scaled) {
            ratio[i] = Some((v / g, 1));
        }
    }
    ratio
        .into_iter()
        .map(|r| r.and_then(|(num, _)| i64::try_from(num).ok()))
        .collect()
}

/// Square skew-symmetrizable integer matrix of rank at most [`MAX_RANK`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    entries: IntMatrix,
    symmetrizer: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::Shape(format!(
                "exchange matrix must be square, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        if entries.rows() > MAX_RANK {
            return Err(Error::Rank(entries.rows()));
        }
        let symmetrizer = skew_symmetrizer(&entries).ok_or(Error::NotSkewSymmetrizable)?;
        Ok(ExchangeMatrix { entries, symmetrizer })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn rank(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries.get(i, j)
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.entries
    }

    /// The coprime positive symmetrizer `d`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn check_direction(&self, k: usize) -> Result<()> {
        check_index(k, self.rank())
    }

    /// Matrix mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        self.check_direction(k)?;
        let b = &self.entries;
        let n = self.rank();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let entry = if i == k || j == k {
                    b.get(i, j).checked_neg()
                } else {
                    let (bik, bkj) = (b.get(i, k), b.get(k, j));
                    bik.checked_mul(bkj)
                        .map(|p| p.max(0) * bik.signum())
                        .and_then(|t| b.get(i, j).checked_add(t))
                };
                data.push(entry.ok_or(Error::Overflow("matrix mutation"))?);
            }
        }
        Ok(ExchangeMatrix {
            entries: IntMatrix { rows: n, cols: n, data },
            symmetrizer: self.symmetrizer.clone(),
        })
    }

    /// Mutation along a word of directions.
    pub fn mutate_along(&self, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |b, &k| b.mutate(k))
    }

    pub fn neg(&self) -> Self {
        ExchangeMatrix {
            entries: self.entries.map(|a| -a),
            symmetrizer: self.symmetrizer.clone(),
        }
    }

    /// `(-B)^T`, the exchange matrix of the dual pattern. Its symmetrizer is
    /// `1/d`, rescaled to coprime integers.
    pub fn neg_transpose(&self) -> Self {
        let entries = self.entries.transpose().map(|a| -a);
        let symmetrizer = skew_symmetrizer(&entries).expect("(-B)^T is skew-symmetrizable");
        ExchangeMatrix { entries, symmetrizer }
    }

    /// Simultaneous relabeling of rows and columns.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ExchangeMatrix {
            entries: self.entries.permuted(perm),
            symmetrizer: perm.iter().map(|&p| self.symmetrizer[p]).collect(),
        }
    }

    /// Generalized Cartan matrix with `A_ii = 2`, `A_ij = -|b_ij|`.
    pub fn cartan_companion(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rank(), self.rank(), |i, j| {
            if i == j {
                2
            } else {
                -self.get(i, j).abs()
            }
        })
    }

    /// Row `k` is entry-wise `>= 0` or entry-wise `<= 0`.
    pub fn is_source_sink(&self, k: usize) -> Result<bool> {
        self.check_direction(k)?;
        Ok(is_signed(self.entries.row(k).iter().copied()))
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExchangeMatrix({})", self.entries)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.entries, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ExchangeMatrixJson {
    n: usize,
    #[serde(rename = "B")]
    b: Vec<Vec<i64>>,
}

impl Serialize for ExchangeMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExchangeMatrixJson { n: self.rank(), b: self.entries.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExchangeMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = ExchangeMatrixJson::deserialize(d)?;
        if json.b.len() != json.n {
            return Err(D::Error::custom(format!(
                "declared n = {} but {} rows given",
                json.n,
                json.b.len()
            )));
        }
        ExchangeMatrix::from_rows(&json.b).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn em(rows: &[[i64; 3]]) -> ExchangeMatrix {
        ExchangeMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn rank_two_mutation_negates() {
        let b = ExchangeMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap();
        assert_eq!(b.mutate(0).unwrap().as_matrix().to_rows(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn markov_round_trip() {
        let b = em(&[[0, 2, -2], [-2, 0, 2], [2, -2, 0]]);
        assert_eq!(b.mutate(1).unwrap().mutate(1).unwrap(), b);
        // Markov is mutation-invariant up to sign
        assert_eq!(b.mutate(1).unwrap(), b.neg());
    }

    #[test]
    fn a3_mutation_at_middle() {
        let b = em(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]);
        let expected = em(&[[0, -1, 1], [1, 0, -1], [-1, 1, 0]]);
        assert_eq!(b.mutate(1).unwrap(), expected);
    }

    #[test]
    fn mutation_rejects_bad_direction() {
        let b = em(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]);
        assert_eq!(b.mutate(3), Err(Error::IndexOutOfRange { k: 3, n: 3 }));
    }

    #[test]
    fn entrywise_operators() {
        let a = IntMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap();
        assert_eq!(a.positive_part().to_rows(), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(a.abs().unwrap().to_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(IntMatrix::j_matrix(2, 0).unwrap().to_rows(), vec![vec![-1, 0], vec![0, 1]]);
        let m = IntMatrix::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(m.row_mask(1).unwrap().to_rows(), vec![vec![0, 0], vec![3, 4]]);
        assert_eq!(m.col_mask(1).unwrap().to_rows(), vec![vec![0, 2], vec![0, 4]]);
        let other = IntMatrix::from_rows(&[[2, 0], [0, 5]]).unwrap();
        assert_eq!(m.entrywise_max(&other).unwrap().to_rows(), vec![vec![2, 2], vec![3, 5]]);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = IntMatrix::zeros(2, 2);
        let b = IntMatrix::zeros(3, 3);
        assert!(matches!(a.entrywise_max(&b), Err(Error::Shape(_))));
        assert!(matches!(a.mul(&b), Err(Error::Shape(_))));
        assert!(matches!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]), Err(Error::Shape(_))));
    }

    #[test]
    fn overflow_fails_loudly() {
        let a = IntMatrix::from_rows(&[[i64::MAX, 1], [1, 1]]).unwrap();
        assert_eq!(a.add(&a), Err(Error::Overflow("addition")));
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn cartan_companions() {
        let a2 = ExchangeMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap();
        assert_eq!(a2.cartan_companion().to_rows(), vec![vec![2, -1], vec![-1, 2]]);
        let k2 = ExchangeMatrix::from_rows(&[[0, 2], [-2, 0]]).unwrap();
        assert_eq!(k2.cartan_companion().to_rows(), vec![vec![2, -2], vec![-2, 2]]);
        let markov = em(&[[0, 2, -2], [-2, 0, 2], [2, -2, 0]]);
        let a = markov.cartan_companion();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), if i == j { 2 } else { -2 });
            }
        }
    }

    #[test]
    fn source_sink_rows() {
        let a2 = ExchangeMatrix::from_rows(&[[0, 1], [-1, 0]]).unwrap();
        assert!(a2.is_source_sink(0).unwrap());
        let cyc = em(&[[0, 1, -1], [-1, 0, 1], [1, -1, 0]]);
        assert!(!cyc.is_source_sink(0).unwrap());
        let markov = em(&[[0, 2, -2], [-2, 0, 2], [2, -2, 0]]);
        assert!((0..3).all(|k| !markov.is_source_sink(k).unwrap()));
    }

    #[test]
    fn symmetrizer_witnesses() {
        let b2 = IntMatrix::from_rows(&[[0, 1], [-2, 0]]).unwrap();
        assert_eq!(skew_symmetrizer(&b2), Some(vec![2, 1]));
        let bad = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(skew_symmetrizer(&bad), None);
        assert_eq!(skew_symmetrizer(&IntMatrix::zeros(2, 2)), Some(vec![1, 1]));
        let diag = IntMatrix::from_rows(&[[1, 0], [0, 0]]).unwrap();
        assert_eq!(skew_symmetrizer(&diag), None);
        // inconsistent ratios around a cycle
        let cyc = IntMatrix::from_rows(&[[0, 1, -1], [-2, 0, 1], [1, -1, 0]]).unwrap();
        assert_eq!(skew_symmetrizer(&cyc), None);
        assert!(matches!(
            ExchangeMatrix::new(bad),
            Err(Error::NotSkewSymmetrizable)
        ));
    }

    #[test]
    fn rank_limit_enforced() {
        assert_eq!(ExchangeMatrix::new(IntMatrix::zeros(13, 13)), Err(Error::Rank(13)));
    }

    #[test]
    fn json_schema() {
        let b = ExchangeMatrix::from_rows(&[[0, 1], [-2, 0]]).unwrap();
        let text = serde_json::to_string(&b).unwrap();
        assert_eq!(text, r#"{"n":2,"B":[[0,1],[-2,0]]}"#);
        let back: ExchangeMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<ExchangeMatrix>(r#"{"n":3,"B":[[0,1],[-1,0]]}"#).is_err());
        assert!(serde_json::from_str::<ExchangeMatrix>(r#"{"n":2,"B":[[0,1],[1,0]]}"#).is_err());
    }

    /// Random skew-symmetrizable matrices: `B = S D^{-1}`-style construction
    /// `b_ij = s_ij * d_j`, `b_ji = -s_ij * d_i` with `s` skew-symmetric.
    fn skew_symmetrizable() -> impl Strategy<Value = (ExchangeMatrix, Vec<i64>)> {
        (1usize..=6).prop_flat_map(|n| {
            (
                proptest::collection::vec(1i64..=3, n),
                proptest::collection::vec(-1i64..=1, n * n),
            )
                .prop_map(move |(d, s)| {
                    let m = IntMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => s[i * n + j] * d[j],
                        std::cmp::Ordering::Greater => -s[j * n + i] * d[j],
                        std::cmp::Ordering::Equal => 0,
                    });
                    (ExchangeMatrix::new(m).unwrap(), d)
                })
        })
    }

    proptest! {
        #[test]
        fn mutation_is_involution((b, _) in skew_symmetrizable(), k in 0usize..6) {
            let k = k % b.rank();
            prop_assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }

        #[test]
        fn mutation_preserves_symmetrizer((b, d) in skew_symmetrizable(), word in proptest::collection::vec(0usize..6, 0..5)) {
            let n = b.rank();
            let word: Vec<usize> = word.into_iter().map(|k| k % n).collect();
            let mutated = b.mutate_along(&word).unwrap();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(d[i] * mutated.get(i, j), -d[j] * mutated.get(j, i));
                }
            }
            prop_assert!(ExchangeMatrix::new(mutated.as_matrix().clone()).is_ok());
        }

        #[test]
        fn sign_split_identities(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-50i64..50, 16)) {
            let a = IntMatrix::from_fn(rows, cols, |i, j| seed[i * 4 + j]);
            let pos = a.positive_part();
            let negpos = a.neg().unwrap().positive_part();
            prop_assert_eq!(pos.sub(&negpos).unwrap(), a.clone());
            prop_assert_eq!(pos.add(&negpos).unwrap(), a.abs().unwrap());
        }
    }
}
