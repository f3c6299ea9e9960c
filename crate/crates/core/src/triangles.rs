//! Memoized `(n, k)` triangles: Stirling numbers of the second kind and the
//! noncentral Whitney numbers, plus the closed forms derived from them.
//!
//! Every family here obeys the same triangular recurrence
//!
//! ```text
//! T(n, k) = T(n-1, k-1) + (m k - a) T(n-1, k),   T(0, 0) = 1
//! ```
//!
//! with `(m, a) = (1, 0)` for Stirling numbers. For the noncentral family the
//! recurrence is checked against the binomial-Stirling sum
//! [`noncentral_whitney_sum`] in the test suite, and then serves as the fast path.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{binomial_rational, factorial_rational, rat, sign_pow};
use crate::error::{Error, Result};
use crate::scalar::powu;
use crate::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TriangleFamily {
    Stirling2,
    NoncentralWhitney { m: Rational, a: Rational },
}

impl TriangleFamily {
    fn weight(&self, k: usize) -> Rational {
        let k = rat(k as i64);
        match self {
            TriangleFamily::Stirling2 => k,
            TriangleFamily::NoncentralWhitney { m, a } => m * k - a,
        }
    }
}

type Row = Arc<[Rational]>;

#[derive(Default)]
struct Table {
    rows: RwLock<Vec<Row>>,
}

/// Process-lifetime store of triangle rows keyed by family and parameters.
///
/// Reads of already-built rows take a shared lock. Extending a table takes
/// that table's write lock, so each `(family, m, a)` key has a single writer.
/// Rows are never modified after they are pushed.
#[derive(Default)]
pub struct TriangleCache {
    tables: RwLock<HashMap<TriangleFamily, Arc<Table>>>,
}

impl TriangleCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Shared cache used by the free functions in this crate.
    pub fn global() -> &'static TriangleCache {
        static GLOBAL: OnceLock<TriangleCache> = OnceLock::new();
        GLOBAL.get_or_init(TriangleCache::new)
    }

    fn table(&self, family: &TriangleFamily) -> Arc<Table> {
        if let Some(t) = self.tables.read().unwrap().get(family) {
            return Arc::clone(t);
        }
        let mut tables = self.tables.write().unwrap();
        Arc::clone(tables.entry(family.clone()).or_default())
    }

    /// Row `n`, holding entries for `k = 0..=n`.
    pub fn row(&self, family: &TriangleFamily, n: u32) -> Row {
        let n = n as usize;
        let table = self.table(family);
        if let Some(row) = table.rows.read().unwrap().get(n) {
            return Arc::clone(row);
        }
        let mut rows = table.rows.write().unwrap();
        if rows.is_empty() {
            rows.push(Arc::from(vec![Rational::one()]));
        }
        while rows.len() <= n {
            let prev = Arc::clone(rows.last().unwrap());
            let len = prev.len() + 1;
            let next: Vec<Rational> = (0..len)
                .map(|k| {
                    let diagonal = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        Rational::zero()
                    };
                    let vertical = prev
                        .get(k)
                        .map(|v| family.weight(k) * v)
                        .unwrap_or_else(Rational::zero);
                    diagonal + vertical
                })
                .collect();
            rows.push(Arc::from(next));
        }
        Arc::clone(&rows[n])
    }

    /// Entry `(n, k)`; zero outside `0 <= k <= n`.
    pub fn entry(&self, family: &TriangleFamily, n: u32, k: u32) -> Rational {
        if k > n {
            return Rational::zero();
        }
        self.row(family, n)[k as usize].clone()
    }

    /// Number of rows currently materialized for `family`.
    pub fn cached_rows(&self, family: &TriangleFamily) -> usize {
        self.tables
            .read()
            .unwrap()
            .get(family)
            .map_or(0, |t| t.rows.read().unwrap().len())
    }
}

fn require_nonzero_m(m: &Rational) -> Result<()> {
    if m.is_zero() {
        Err(Error::domain("m must be nonzero"))
    } else {
        Ok(())
    }
}

/// Stirling number of the second kind.
pub fn stirling2(n: u32, k: u32) -> Integer {
    TriangleCache::global()
        .entry(&TriangleFamily::Stirling2, n, k)
        .to_integer()
}

pub fn stirling2_row(n: u32) -> Row {
    TriangleCache::global().row(&TriangleFamily::Stirling2, n)
}

fn stirling2_rational(n: u32, k: u32) -> Rational {
    TriangleCache::global().entry(&TriangleFamily::Stirling2, n, k)
}

/// Translated Whitney number `m^{n-k} S(n, k)`.
pub fn translated_whitney(m: &Rational, n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    powu(m, n - k) * stirling2_rational(n, k)
}

/// Alternating-sum form `(1 / (m^k k!)) sum_j (-1)^{k-j} C(k, j) (m j)^n`.
pub fn translated_whitney_explicit(m: &Rational, n: u32, k: u32) -> Result<Rational> {
    require_nonzero_m(m)?;
    let sum = (0..=k).fold(Rational::zero(), |acc, j| {
        acc + sign_pow(k - j) * binomial_rational(k, j) * powu(&(m * rat(j as i64)), n)
    });
    Ok(sum / (powu(m, k) * factorial_rational(k)))
}

/// Noncentral Whitney number of the second kind via the memoized recurrence.
pub fn noncentral_whitney(m: &Rational, a: &Rational, n: u32, k: u32) -> Result<Rational> {
    require_nonzero_m(m)?;
    Ok(TriangleCache::global().entry(&ncw_family(m, a), n, k))
}

pub fn noncentral_whitney_row(m: &Rational, a: &Rational, n: u32) -> Result<Row> {
    require_nonzero_m(m)?;
    Ok(TriangleCache::global().row(&ncw_family(m, a), n))
}

fn ncw_family(m: &Rational, a: &Rational) -> TriangleFamily {
    TriangleFamily::NoncentralWhitney {
        m: m.clone(),
        a: a.clone(),
    }
}

/// Noncentral Whitney number from its binomial-Stirling expansion
/// `sum_j C(n, j) (-a)^{n-j} m^{j-k} S(j, k)`. Kept as the reference path for
/// the recurrence.
pub fn noncentral_whitney_sum(m: &Rational, a: &Rational, n: u32, k: u32) -> Result<Rational> {
    require_nonzero_m(m)?;
    let neg_a = -a.clone();
    Ok((k..=n).fold(Rational::zero(), |acc, j| {
        acc + binomial_rational(n, j)
            * powu(&neg_a, n - j)
            * powu(m, j - k)
            * stirling2_rational(j, k)
    }))
}

/// Whitney number of the second kind of the Dowling lattice, `W̃_{m,-1}(n, k)`.
pub fn whitney(m: &Rational, n: u32, k: u32) -> Result<Rational> {
    noncentral_whitney(m, &-Rational::one(), n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use num_bigint::BigInt;

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 5), BigInt::from(0));
        for n in 0..10 {
            assert_eq!(stirling2(n, n), BigInt::from(1));
        }
        assert_eq!(stirling2_row(4).to_vec(), [0, 1, 7, 6, 1].map(rat).to_vec());
    }

    #[test]
    fn translated_whitney_examples() {
        assert_eq!(translated_whitney(&rat(2), 3, 2), rat(6));
        assert_eq!(translated_whitney(&rat(2), 4, 2), rat(28));
        assert_eq!(translated_whitney(&ratio(5, 3), 6, 6), rat(1));
        assert_eq!(translated_whitney_explicit(&rat(2), 4, 2).unwrap(), rat(28));
    }

    #[test]
    fn translated_whitney_recurrence_and_explicit_form() {
        for m in [rat(1), rat(2), rat(3), ratio(-2, 3)] {
            for n in 1..=10u32 {
                for k in 0..=n {
                    let diagonal = match k {
                        0 => rat(0),
                        _ => translated_whitney(&m, n - 1, k - 1),
                    };
                    let rec = diagonal + &m * rat(k as i64) * translated_whitney(&m, n - 1, k);
                    assert_eq!(translated_whitney(&m, n, k), rec, "m={m} n={n} k={k}");
                    assert_eq!(
                        translated_whitney_explicit(&m, n, k).unwrap(),
                        translated_whitney(&m, n, k)
                    );
                }
            }
        }
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(
                    translated_whitney(&rat(1), n, k),
                    Rational::from_integer(stirling2(n, k))
                );
            }
        }
    }

    #[test]
    fn noncentral_whitney_examples() {
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(
                    noncentral_whitney(&rat(1), &rat(0), n, k).unwrap(),
                    Rational::from_integer(stirling2(n, k))
                );
            }
        }
        assert_eq!(noncentral_whitney(&rat(2), &rat(1), 2, 1).unwrap(), rat(0));
        assert_eq!(
            noncentral_whitney_sum(&rat(2), &rat(1), 2, 1).unwrap(),
            rat(0)
        );
        assert_eq!(
            noncentral_whitney(&ratio(7, 2), &rat(-3), 0, 0).unwrap(),
            rat(1)
        );
        assert!(matches!(
            noncentral_whitney(&rat(0), &rat(1), 2, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn noncentral_whitney_boundaries() {
        let (m, a) = (rat(3), ratio(-1, 2));
        for n in 0..10u32 {
            assert_eq!(noncentral_whitney(&m, &a, n, n).unwrap(), rat(1));
            assert_eq!(
                noncentral_whitney(&m, &a, n, 0).unwrap(),
                powu(&-a.clone(), n)
            );
            assert_eq!(noncentral_whitney(&m, &a, n, n + 1).unwrap(), rat(0));
        }
    }

    #[test]
    fn whitney_examples() {
        assert_eq!(whitney(&rat(1), 2, 1).unwrap(), rat(3));
        assert_eq!(whitney(&rat(4), 0, 0).unwrap(), rat(1));
        assert_eq!(whitney(&rat(2), 2, 2).unwrap(), rat(1));
    }

    #[test]
    fn cache_rows_are_stable_and_shared_across_threads() {
        let cache = TriangleCache::new();
        let fam = ncw_family(&rat(2), &rat(1));
        let handles: Vec<_> = (0..8u32)
            .map(|t| {
                let cache = &cache;
                let fam = fam.clone();
                move || cache.row(&fam, 5 + t)
            })
            .collect();
        let rows: Vec<Row> = std::thread::scope(|s| {
            let joins: Vec<_> = handles.into_iter().map(|h| s.spawn(h)).collect();
            joins.into_iter().map(|j| j.join().unwrap()).collect()
        });
        assert_eq!(cache.cached_rows(&fam), 13);
        let early = cache.row(&fam, 5);
        assert!(Arc::ptr_eq(&early, &cache.row(&fam, 5)));
        assert_eq!(rows[0].to_vec(), early.to_vec());
    }
}
