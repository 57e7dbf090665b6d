//! D-matrices and M-matrices.
//!
//! Every matrix here is available by two independent routes: read off the
//! Laurent expansions of a seed's cluster, or folded along the walk with the
//! final-seed mutation recursion. The two must agree.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::Result;
use crate::laurent::LaurentPolynomial;
use crate::matrices::{ExchangeMatrix, IntMatrix};
use crate::seeds::{exchange, Seed, TreePath};

/// Matrix whose column `j` is the d-vector of the `j`-th cluster variable:
/// minus the lowest power of each initial variable.
pub fn d_matrix_direct(seed: &Seed) -> IntMatrix {
    let columns: Vec<Vec<i64>> = seed
        .cluster()
        .iter()
        .map(|x| {
            x.min_exponents()
                .expect("cluster variables are nonzero")
                .into_iter()
                .map(|a| -a)
                .collect()
        })
        .collect();
    IntMatrix::from_columns(&columns).expect("square cluster")
}

/// Matrix whose column `j` is the m-vector of the `j`-th cluster variable:
/// the highest power of each initial variable.
pub fn m_matrix_direct(seed: &Seed) -> IntMatrix {
    let columns: Vec<Vec<i64>> = seed
        .cluster()
        .iter()
        .map(|x| x.max_exponents().expect("cluster variables are nonzero"))
        .collect();
    IntMatrix::from_columns(&columns).expect("square cluster")
}

/// One step of the final-seed recursion across the edge `t --k-- t'`:
/// `X J_k + max(X [B_t^{•k}]_+, X [(-B_t)^{•k}]_+)`.
pub fn mutate_vector_matrix(x: &IntMatrix, b_t: &ExchangeMatrix, k: usize) -> Result<IntMatrix> {
    let n = b_t.rank();
    let col = b_t.as_matrix().col_mask(k)?;
    let plus = x.mul(&col.positive_part())?;
    let minus = x.mul(&col.neg()?.positive_part())?;
    x.mul(&IntMatrix::j_matrix(n, k)?)?.add(&plus.entrywise_max(&minus)?)
}

fn fold_recursion(b0: &ExchangeMatrix, path: &TreePath, start: IntMatrix) -> Result<IntMatrix> {
    path.validate(b0.rank())?;
    let mut b = b0.clone();
    let mut x = start;
    for &k in path.letters() {
        x = mutate_vector_matrix(&x, &b, k)?;
        b = b.mutate(k)?;
    }
    Ok(x)
}

/// D-matrix at the end of `path`, folded from `-I`.
pub fn d_matrix_recursive(b0: &ExchangeMatrix, path: &TreePath) -> Result<IntMatrix> {
    fold_recursion(b0, path, IntMatrix::identity(b0.rank()).neg()?)
}

/// M-matrix at the end of `path`, folded from `I`.
pub fn m_matrix_recursive(b0: &ExchangeMatrix, path: &TreePath) -> Result<IntMatrix> {
    fold_recursion(b0, path, IntMatrix::identity(b0.rank()))
}

/// D- and M-matrices at the end of `path` from one-variable specializations:
/// row `i` comes from walking the exchange relation with `x_i` kept and every
/// other initial variable set to 1.
///
/// Cluster variables have positive coefficients, so collapsing the other
/// variables cannot cancel the lowest or highest power of `x_i`. The cost
/// grows with the degree in one variable rather than with the full Newton
/// polytope.
pub fn vector_matrices_specialized(b0: &ExchangeMatrix, path: &TreePath) -> Result<(IntMatrix, IntMatrix)> {
    let n = b0.rank();
    path.validate(n)?;
    let mut d = Vec::with_capacity(n);
    let mut m = Vec::with_capacity(n);
    for i in 0..n {
        let mut cluster: Vec<LaurentPolynomial> = (0..n)
            .map(|j| if j == i { LaurentPolynomial::variable(1, 0) } else { LaurentPolynomial::one(1) })
            .collect();
        let mut b = b0.clone();
        for &k in path.letters() {
            cluster[k] = exchange(&b, &cluster, k)?;
            b = b.mutate(k)?;
        }
        d.push(cluster.iter().map(|x| Ok(-x.min_exponents()?[0])).collect::<Result<Vec<_>>>()?);
        m.push(cluster.iter().map(|x| Ok(x.max_exponents()?[0])).collect::<Result<Vec<_>>>()?);
    }
    Ok((IntMatrix::from_rows(&d)?, IntMatrix::from_rows(&m)?))
}

/// Row-replacement law: the D-matrix of the same seed measured from the
/// initial seed mutated at `k` is `D_t` with row `k` replaced by row `k` of `M_t`.
pub fn row_replacement(d: &IntMatrix, m: &IntMatrix, k: usize) -> Result<IntMatrix> {
    d.replace_row(k, m)
}

/// D-matrix of the seed at `path` relative to the initial seed `mu_k(B0)`,
/// by row replacement on the expansions in the original initial cluster.
pub fn d_after_initial_mutation(b0: &ExchangeMatrix, k: usize, path: &TreePath) -> Result<IntMatrix> {
    b0.check_direction(k)?;
    let seed = Seed::at(b0, path)?;
    row_replacement(&d_matrix_direct(&seed), &m_matrix_direct(&seed), k)
}

/// Same quantity by re-expanding the seed from the mutated initial seed:
/// the walk from `t1` to `t` is the walk from `t0` with `k` prepended.
pub fn d_after_initial_mutation_direct(
    b0: &ExchangeMatrix,
    k: usize,
    path: &TreePath,
) -> Result<IntMatrix> {
    let b1 = b0.mutate(k)?;
    path.validate(b0.rank())?;
    Ok(d_matrix_direct(&Seed::at(&b1, &path.prepend(k))?))
}

/// How D- and M-matrices are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// From exact Laurent expansions.
    Laurent,
    /// From the final-seed mutation recursion.
    Recursion,
    /// From exact one-variable specializations of the expansions.
    Specialized,
}

/// Computes D/M matrices by a fixed route, memoizing seeds by
/// `(initial exchange matrix, walk)`. Safe to share across threads.
#[derive(Debug)]
pub struct VectorOracle {
    route: Route,
    seeds: RwLock<HashMap<(ExchangeMatrix, TreePath), Arc<Seed>>>,
}

impl VectorOracle {
    pub fn new(route: Route) -> Self {
        VectorOracle { route, seeds: RwLock::new(HashMap::new()) }
    }

    pub fn route(&self) -> Route {
        self.route
    }

    fn cached(&self, b0: &ExchangeMatrix, path: &TreePath) -> Option<Arc<Seed>> {
        self.seeds
            .read()
            .expect("seed cache poisoned")
            .get(&(b0.clone(), path.clone()))
            .cloned()
    }

    /// Seed at `path`, extending the longest memoized prefix.
    pub fn seed(&self, b0: &ExchangeMatrix, path: &TreePath) -> Result<Arc<Seed>> {
        path.validate(b0.rank())?;
        if let Some(s) = self.cached(b0, path) {
            return Ok(s);
        }
        let letters = path.letters();
        let mut start = 0;
        let mut seed = Arc::new(Seed::initial(b0));
        for len in (1..letters.len()).rev() {
            let prefix = TreePath::new(letters[..len].to_vec())?;
            if let Some(s) = self.cached(b0, &prefix) {
                start = len;
                seed = s;
                break;
            }
        }
        let mut fresh = Vec::new();
        for &k in &letters[start..] {
            seed = Arc::new(seed.mutate(k)?);
            fresh.push(seed.clone());
        }
        let mut cache = self.seeds.write().expect("seed cache poisoned");
        for s in fresh {
            cache.entry((b0.clone(), s.path().clone())).or_insert(s);
        }
        Ok(seed)
    }

    pub fn d_matrix(&self, b0: &ExchangeMatrix, path: &TreePath) -> Result<IntMatrix> {
        match self.route {
            Route::Laurent => Ok(d_matrix_direct(&*self.seed(b0, path)?)),
            Route::Recursion => d_matrix_recursive(b0, path),
            Route::Specialized => Ok(vector_matrices_specialized(b0, path)?.0),
        }
    }

    pub fn m_matrix(&self, b0: &ExchangeMatrix, path: &TreePath) -> Result<IntMatrix> {
        match self.route {
            Route::Laurent => Ok(m_matrix_direct(&*self.seed(b0, path)?)),
            Route::Recursion => m_matrix_recursive(b0, path),
            Route::Specialized => Ok(vector_matrices_specialized(b0, path)?.1),
        }
    }

    /// Number of memoized seeds.
    pub fn cached_seeds(&self) -> usize {
        self.seeds.read().expect("seed cache poisoned").len()
    }
}
