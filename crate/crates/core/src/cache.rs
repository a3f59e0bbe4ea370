//! Write-once series cache keyed by `(key, order)`.
//!
//! A request is served by any finished entry of at least the requested order;
//! otherwise the entry for exactly that order is built once, and concurrent
//! requesters for the same key and order wait on the same cell.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::qseries::QSeries;
use crate::ring::Coeff;

type Cell<R> = Arc<OnceLock<Arc<QSeries<R>>>>;
type Slots<K, R> = HashMap<K, Vec<(usize, Cell<R>)>>;

pub(crate) struct SeriesCache<K, R: Coeff> {
    map: Mutex<Slots<K, R>>,
}

impl<K: Eq + Hash + Clone, R: Coeff> SeriesCache<K, R> {
    pub(crate) fn new() -> Self {
        SeriesCache { map: Mutex::new(HashMap::new()) }
    }

    /// A cached series of order at least `order`.
    pub(crate) fn get_or_build<E>(
        &self,
        key: K,
        order: usize,
        build: impl FnOnce() -> Result<QSeries<R>, E>,
    ) -> Result<Arc<QSeries<R>>, E> {
        let cell = {
            let mut map = self.map.lock().expect("cache lock");
            let entries = map.entry(key).or_default();
            if let Some(s) =
                entries.iter().filter(|(n, _)| *n >= order).filter_map(|(_, c)| c.get()).min_by_key(|s| s.order())
            {
                return Ok(s.clone());
            }
            match entries.iter().find(|(n, _)| *n == order) {
                Some((_, c)) => c.clone(),
                None => {
                    let c: Cell<R> = Arc::new(OnceLock::new());
                    entries.push((order, c.clone()));
                    c
                }
            }
        };
        if let Some(s) = cell.get() {
            return Ok(s.clone());
        }
        let built = Arc::new(build()?);
        Ok(cell.get_or_init(|| built).clone())
    }
}
