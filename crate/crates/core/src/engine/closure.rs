use rayon::prelude::*;
use rustc_hash::FxHashSet;

use super::pack::{Encoder, PackedKey};
use crate::error::{Error, Result};
use crate::matgrp::Matrix;

/// Default element cap for closures.
pub const DEFAULT_CAP: usize = 1 << 26;

const SHARDS: usize = 64;
const PAR_FRONTIER: usize = 1 << 12;
const CHUNK: usize = 1 << 12;

/// Sorted packed elements of an enumerated group.
#[derive(Clone, Debug)]
pub struct ElementStore {
    encoder: Encoder,
    keys: Keys,
}

#[derive(Clone, Debug)]
enum Keys {
    Narrow(Vec<u64>),
    Wide(Vec<u128>),
}

impl ElementStore {
    pub fn len(&self) -> usize {
        match &self.keys {
            Keys::Narrow(v) => v.len(),
            Keys::Wide(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encoder(&self) -> &Encoder {
        &self.encoder
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        if m.n() != self.encoder.n() || m.field() != self.encoder.field() {
            return false;
        }
        match &self.keys {
            Keys::Narrow(v) => v.binary_search(&self.encoder.encode::<u64>(m)).is_ok(),
            Keys::Wide(v) => v.binary_search(&self.encoder.encode::<u128>(m)).is_ok(),
        }
    }

    /// Packed keys widened to 128 bits, ascending.
    pub fn keys(&self) -> Vec<u128> {
        match &self.keys {
            Keys::Narrow(v) => v.iter().map(|&k| u128::from(k)).collect(),
            Keys::Wide(v) => v.clone(),
        }
    }

    /// Elements in ascending key order.
    pub fn matrices(&self) -> Vec<Matrix> {
        self.keys().into_iter().map(|k| self.encoder.decode(k)).collect()
    }
}

/// Outcome of a closure: the group order (a lower bound when truncated).
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub order: u64,
    pub scalar_subgroup_order: u64,
    pub truncated: bool,
    pub element_store: Option<ElementStore>,
}

impl ClosureResult {
    /// Order of the image modulo scalars.
    pub fn projective_order(&self) -> u64 {
        self.order / self.scalar_subgroup_order
    }

    /// Errors if the enumeration stopped at the cap.
    pub fn certified(self, cap: usize) -> Result<ClosureResult> {
        if self.truncated {
            return Err(Error::ClosureCapExceeded { cap });
        }
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClosureOptions {
    pub cap: usize,
    pub parallel: bool,
    pub keep_elements: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { cap: DEFAULT_CAP, parallel: true, keep_elements: false }
    }
}

impl ClosureOptions {
    pub fn with_cap(cap: usize) -> Self {
        ClosureOptions { cap, ..Default::default() }
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn keep(mut self) -> Self {
        self.keep_elements = true;
        self
    }
}

/// Order of the group generated by `gens`, with the default options.
pub fn closure(gens: &[Matrix], cap: usize) -> Result<ClosureResult> {
    closure_with(gens, ClosureOptions::with_cap(cap))
}

pub fn closure_with(gens: &[Matrix], opts: ClosureOptions) -> Result<ClosureResult> {
    let Some(first) = gens.first() else {
        return Err(Error::Precondition("closure needs at least one generator".into()));
    };
    let (field, n) = (first.field().clone(), first.n());
    for g in gens {
        if g.n() != n {
            return Err(Error::DimensionMismatch(format!("generators of size {n} and {}", g.n())));
        }
        if g.field() != &field {
            return Err(Error::FieldMismatch(format!("generators over {field} and {}", g.field())));
        }
        if g.det().is_zero() {
            return Err(Error::Singular);
        }
    }
    let enc = Encoder::new(&field, n)?;
    let tables: Vec<Vec<u32>> = gens.iter().map(|g| enc.right_table(g)).collect();
    if enc.fits_u64() {
        Ok(run::<u64>(&enc, &tables, opts))
    } else {
        Ok(run::<u128>(&enc, &tables, opts))
    }
}

struct ShardedSet<K> {
    shards: Vec<FxHashSet<K>>,
}

impl<K: PackedKey> ShardedSet<K> {
    fn new(n: usize) -> Self {
        ShardedSet { shards: (0..n).map(|_| FxHashSet::default()).collect() }
    }

    #[inline]
    fn shard(&self, k: K) -> usize {
        (k.mix() >> 32) as usize % self.shards.len()
    }

    fn insert(&mut self, k: K) -> bool {
        let s = self.shard(k);
        self.shards[s].insert(k)
    }

    fn contains(&self, k: K) -> bool {
        self.shards[self.shard(k)].contains(&k)
    }

    fn into_sorted(self) -> Vec<K> {
        let mut all: Vec<K> = self.shards.into_iter().flatten().collect();
        all.par_sort_unstable();
        all
    }
}

fn run<K: PackedKey>(enc: &Encoder, tables: &[Vec<u32>], opts: ClosureOptions) -> ClosureResult
where
    Keys: From<Vec<K>>,
{
    let field = enc.field().clone();
    let identity: K = enc.encode(&Matrix::identity(&field, enc.n()));
    let mut set = ShardedSet::<K>::new(if opts.parallel { SHARDS } else { 1 });
    set.insert(identity);
    let mut count = 1usize;
    let mut frontier = vec![identity];
    let mut truncated = false;
    while !frontier.is_empty() {
        let next = if opts.parallel && frontier.len() >= PAR_FRONTIER {
            expand_parallel(enc, tables, &frontier, &mut set)
        } else {
            let mut next = Vec::new();
            for &k in &frontier {
                for t in tables {
                    let p = enc.mul_key(k, t);
                    if set.insert(p) {
                        next.push(p);
                    }
                }
            }
            next
        };
        count += next.len();
        if count > opts.cap {
            truncated = true;
            break;
        }
        frontier = next;
    }
    let scalars = field
        .nonzero_elements()
        .filter(|&c| set.contains(enc.encode(&Matrix::scalar(&field, enc.n(), c))))
        .count() as u64;
    let element_store =
        opts.keep_elements.then(|| ElementStore { encoder: enc.clone(), keys: Keys::from(set.into_sorted()) });
    ClosureResult { order: count as u64, scalar_subgroup_order: scalars.max(1), truncated, element_store }
}

fn expand_parallel<K: PackedKey>(enc: &Encoder, tables: &[Vec<u32>], frontier: &[K], set: &mut ShardedSet<K>) -> Vec<K> {
    let nshards = set.shards.len();
    let buckets: Vec<Vec<Vec<K>>> = frontier
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut b = vec![Vec::new(); nshards];
            for &k in chunk {
                for t in tables {
                    let p = enc.mul_key(k, t);
                    b[(p.mix() >> 32) as usize % nshards].push(p);
                }
            }
            b
        })
        .collect();
    let fresh: Vec<Vec<K>> = set
        .shards
        .par_iter_mut()
        .enumerate()
        .map(|(s, shard)| {
            let mut out = Vec::new();
            for b in &buckets {
                for &p in &b[s] {
                    if shard.insert(p) {
                        out.push(p);
                    }
                }
            }
            out
        })
        .collect();
    fresh.concat()
}

impl From<Vec<u64>> for Keys {
    fn from(v: Vec<u64>) -> Self {
        Keys::Narrow(v)
    }
}

impl From<Vec<u128>> for Keys {
    fn from(v: Vec<u128>) -> Self {
        Keys::Wide(v)
    }
}
