//! Exhaustive generation of all semigroups of a small order, one canonical
//! representative per class, and the graph realizability search built on it.
//!
//! Tables are filled cell by cell in row-major order; a partial table is
//! abandoned as soon as some fully determined triple violates
//! associativity. A completed table is emitted iff it equals its own
//! canonical form, so the stream lists exactly the canonical representatives
//! in lexicographic order.

use crate::canonical::{canonical_flat, IsoModulus};
use crate::error::{Error, Result};
use crate::graphs::{graph_isomorphic, SimpleGraph};
use crate::semigroup::FiniteSemigroup;

const UNSET: usize = usize::MAX;

/// Largest order enumerable without the explicit override.
pub const DEFAULT_MAX_ORDER: usize = 5;

/// Knobs for an enumeration run. More than one job splits the search on
/// first-row prefixes; the merged output is identical for any job count.
#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub jobs: usize,
    pub allow_order_six: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            jobs: 1,
            allow_order_six: false,
        }
    }
}

/// A fixed prefix of table cells (the first row) delimiting one slice of the
/// backtracking space. Distinct prefixes are disjoint and all of them
/// together are exhaustive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchPartition {
    pub first_row: Vec<usize>,
}

/// Whether the triple (x, y, z) is consistent in a partially filled table:
/// vacuously true until all needed products are known.
#[inline]
fn triple_ok(t: &[usize], n: usize, x: usize, y: usize, z: usize) -> bool {
    let xy = t[x * n + y];
    if xy == UNSET {
        return true;
    }
    let yz = t[y * n + z];
    if yz == UNSET {
        return true;
    }
    let left = t[xy * n + z];
    if left == UNSET {
        return true;
    }
    let right = t[x * n + yz];
    if right == UNSET {
        return true;
    }
    left == right
}

/// Check every triple that may have become fully determined by filling the
/// cell (a, b). The four cells a triple consults are (x,y), (y,z), (xy,z)
/// and (x,yz); each case below matches (a, b) against one of them.
fn placement_ok(t: &[usize], n: usize, a: usize, b: usize) -> bool {
    for z in 0..n {
        // (a, b, z): the new cell is (x, y)
        if !triple_ok(t, n, a, b, z) {
            return false;
        }
        // (z, a, b): the new cell is (y, z)
        if !triple_ok(t, n, z, a, b) {
            return false;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if t[x * n + y] == a {
                // (x, y, b): the new cell is (xy, z) with xy = a, z = b
                if !triple_ok(t, n, x, y, b) {
                    return false;
                }
            }
            if t[x * n + y] == b {
                // (a, x, y): the new cell is (x, yz) with x = a, yz = b
                if !triple_ok(t, n, a, x, y) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(t: &mut Vec<usize>, n: usize, cell: usize, sink: &mut dyn FnMut(&[usize])) {
    if cell == n * n {
        sink(t);
        return;
    }
    let (a, b) = (cell / n, cell % n);
    for v in 0..n {
        t[cell] = v;
        if placement_ok(t, n, a, b) {
            search(t, n, cell + 1, sink);
        }
    }
    t[cell] = UNSET;
}

/// All associativity-consistent first rows, in lexicographic order.
pub fn first_row_partitions(n: usize) -> Vec<SearchPartition> {
    let mut out = Vec::new();
    let mut t = vec![UNSET; n * n];
    fn rec(t: &mut Vec<usize>, n: usize, cell: usize, out: &mut Vec<SearchPartition>) {
        if cell == n {
            out.push(SearchPartition {
                first_row: t[..n].to_vec(),
            });
            return;
        }
        for v in 0..n {
            t[cell] = v;
            if placement_ok(t, n, 0, cell) {
                rec(t, n, cell + 1, out);
            }
        }
        t[cell] = UNSET;
    }
    rec(&mut t, n, 0, &mut out);
    out
}

fn complete_partition(
    n: usize,
    partition: &SearchPartition,
    modulo: IsoModulus,
    out: &mut Vec<Vec<usize>>,
) {
    let mut t = vec![UNSET; n * n];
    t[..n].copy_from_slice(&partition.first_row);
    // re-check the prefix in case a caller fabricated an inconsistent one
    for b in 0..n {
        if !placement_ok(&t, n, 0, b) {
            return;
        }
    }
    search(&mut t, n, n, &mut |flat| {
        if canonical_flat(n, flat, modulo) == flat {
            out.push(flat.to_vec());
        }
    });
}

/// Enumerate one canonical representative per class of semigroups of order
/// n, in lexicographic table order. `modulo` picks the counting convention:
/// classes up to isomorphism, or up to isomorphism and anti-isomorphism.
pub fn enumerate_semigroups(n: usize, modulo: IsoModulus) -> Result<Vec<FiniteSemigroup>> {
    enumerate_semigroups_with(n, modulo, &EnumerateOptions::default())
}

pub fn enumerate_semigroups_with(
    n: usize,
    modulo: IsoModulus,
    opts: &EnumerateOptions,
) -> Result<Vec<FiniteSemigroup>> {
    if n == 0 {
        return Err(Error::MalformedTable("order must be positive".into()));
    }
    let max = if opts.allow_order_six {
        6
    } else {
        DEFAULT_MAX_ORDER
    };
    if n > max {
        return Err(Error::OrderTooLarge { order: n, max });
    }

    let partitions = first_row_partitions(n);
    let jobs = opts.jobs.max(1).min(partitions.len().max(1));
    let mut tables: Vec<Vec<usize>> = if jobs <= 1 {
        let mut out = Vec::new();
        for p in &partitions {
            complete_partition(n, p, modulo, &mut out);
        }
        out
    } else {
        let chunks: Vec<Vec<&SearchPartition>> = (0..jobs)
            .map(|w| partitions.iter().skip(w).step_by(jobs).collect())
            .collect();
        let mut results: Vec<Vec<Vec<usize>>> = Vec::with_capacity(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        for p in chunk {
                            complete_partition(n, p, modulo, &mut out);
                        }
                        out
                    })
                })
                .collect();
            for h in handles {
                results.push(h.join().expect("enumeration worker panicked"));
            }
        });
        results.into_iter().flatten().collect()
    };
    // deterministic regardless of job count
    tables.sort();
    tables
        .into_iter()
        .map(|flat| FiniteSemigroup::from_flat(n, flat, None))
        .collect()
}

/// First enumerated semigroup of the given order whose upper non-nilpotent
/// graph is isomorphic to `g`, or None once the stream is exhausted.
pub fn realizability_search(g: &SimpleGraph, order: usize) -> Result<Option<FiniteSemigroup>> {
    realizability_search_with(g, order, &EnumerateOptions::default())
}

pub fn realizability_search_with(
    g: &SimpleGraph,
    order: usize,
    opts: &EnumerateOptions,
) -> Result<Option<FiniteSemigroup>> {
    if g.order() != order {
        return Err(Error::MalformedTable(format!(
            "graph has {} vertices but the search order is {order}",
            g.order()
        )));
    }
    for s in enumerate_semigroups_with(order, IsoModulus::IsoAnti, opts)? {
        if graph_isomorphic(&s.upper_graph(), g)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
