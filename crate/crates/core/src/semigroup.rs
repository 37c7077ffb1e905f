//! Cayley-table semigroups: validated construction, products, substructure.

use crate::error::{Error, Result};

/// A finite semigroup given by its full multiplication table.
///
/// Elements are the indices `0..size`. The table is stored row-major with the
/// row as the left factor, so `table[a * size + b]` is the product `a*b`.
/// Associativity is checked exhaustively on construction, so every value of
/// this type is a genuine semigroup. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSemigroup(n={}", self.size)?;
        for a in 0..self.size {
            write!(f, "; ")?;
            for b in 0..self.size {
                if b > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.product(a, b))?;
            }
        }
        write!(f, ")")
    }
}

/// An element of S^1: either the formal identity adjoined for multiplier
/// positions, or an ordinary element of the semigroup.
///
/// The formal identity is skipped in sandwich products, so it behaves as a
/// two-sided identity without a table rebuild even when the semigroup already
/// has an identity element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplier {
    Identity,
    Element(usize),
}

impl Multiplier {
    pub fn display(&self, s: &FiniteSemigroup) -> String {
        match self {
            Multiplier::Identity => "1".to_string(),
            Multiplier::Element(i) => s.label(*i),
        }
    }
}

/// A subset of the elements of a particular semigroup.
///
/// `closed` records whether the subset is closed under the parent's product;
/// it is verified at construction time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementSubset {
    members: Vec<bool>,
    closed: bool,
}

impl ElementSubset {
    /// Build a subset of `parent` from a list of element indices.
    pub fn new(parent: &FiniteSemigroup, indices: &[usize]) -> Self {
        let mut members = vec![false; parent.size()];
        for &i in indices {
            assert!(i < parent.size(), "element index {i} out of range");
            members[i] = true;
        }
        Self::from_members(parent, members)
    }

    pub(crate) fn from_members(parent: &FiniteSemigroup, members: Vec<bool>) -> Self {
        assert_eq!(members.len(), parent.size());
        let closed = verify_closed(parent, &members);
        ElementSubset { members, closed }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    /// Member indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&i| self.members[i]).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// Whether the subset is closed under the parent product.
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn parent_size(&self) -> usize {
        self.members.len()
    }

    pub fn intersect(&self, other: &ElementSubset, parent: &FiniteSemigroup) -> ElementSubset {
        assert_eq!(self.members.len(), other.members.len());
        let members = (0..self.members.len())
            .map(|i| self.members[i] && other.members[i])
            .collect();
        ElementSubset::from_members(parent, members)
    }
}

fn verify_closed(parent: &FiniteSemigroup, members: &[bool]) -> bool {
    for a in 0..members.len() {
        if !members[a] {
            continue;
        }
        for b in 0..members.len() {
            if members[b] && !members[parent.product(a, b)] {
                return false;
            }
        }
    }
    true
}

/// The product-closure of a generating set: the induced subsemigroup together
/// with the map back to parent indices.
#[derive(Clone, Debug)]
pub struct SubSemigroup {
    /// The induced semigroup on the closure, with its own indices.
    pub semigroup: FiniteSemigroup,
    /// `to_parent[i]` is the parent index of local element `i`.
    pub to_parent: Vec<usize>,
    /// The closure as a subset of the parent.
    pub subset: ElementSubset,
}

impl FiniteSemigroup {
    /// Validate and construct a semigroup from a square table of element
    /// indices. Reports the first associativity violation in row-major order
    /// of the triple (a, b, c).
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::MalformedTable("table must be non-empty".into()));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (r, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!(
                    "row {r} has {} entries, expected {size}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(size, flat, labels)
    }

    /// As [`FiniteSemigroup::new`], from a row-major flat table.
    pub fn from_flat(size: usize, flat: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if size == 0 || flat.len() != size * size {
            return Err(Error::MalformedTable(format!(
                "flat table has {} entries, expected {}",
                flat.len(),
                size * size
            )));
        }
        if let Some(bad) = flat.iter().position(|&e| e >= size) {
            return Err(Error::MalformedTable(format!(
                "entry {} at cell ({}, {}) is out of range 0..{}",
                flat[bad],
                bad / size,
                bad % size,
                size
            )));
        }
        if let Some(labels) = &labels {
            if labels.len() != size {
                return Err(Error::MalformedTable(format!(
                    "{} labels given for {} elements",
                    labels.len(),
                    size
                )));
            }
        }
        check_associativity(size, &flat)?;
        Ok(FiniteSemigroup {
            size,
            table: flat,
            labels,
        })
    }

    /// Construct without the associativity scan. Callers must guarantee the
    /// table is associative (e.g. it is a relabeling of a valid table).
    pub(crate) fn from_flat_unchecked(
        size: usize,
        flat: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert!(check_associativity(size, &flat).is_ok());
        FiniteSemigroup {
            size,
            table: flat,
            labels,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, else its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }

    /// The product a*w*b, with the formal identity skipped.
    #[inline]
    pub fn sandwich(&self, a: usize, w: Multiplier, b: usize) -> usize {
        match w {
            Multiplier::Identity => self.product(a, b),
            Multiplier::Element(m) => self.product(self.product(a, m), b),
        }
    }

    /// All multipliers of S^1 in a fixed order: the formal identity first,
    /// then the elements by index.
    pub fn multipliers(&self) -> impl Iterator<Item = Multiplier> + '_ {
        std::iter::once(Multiplier::Identity).chain((0..self.size).map(Multiplier::Element))
    }

    /// The zero element (row and column constant equal to itself), if any.
    pub fn zero(&self) -> Option<usize> {
        (0..self.size).find(|&z| {
            (0..self.size).all(|x| self.product(z, x) == z && self.product(x, z) == z)
        })
    }

    /// The two-sided identity element, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| {
            (0..self.size).all(|x| self.product(e, x) == x && self.product(x, e) == x)
        })
    }

    pub fn idempotents(&self) -> ElementSubset {
        let members = (0..self.size).map(|x| self.product(x, x) == x).collect();
        ElementSubset::from_members(self, members)
    }

    /// Whether every element is idempotent.
    pub fn is_band(&self) -> bool {
        (0..self.size).all(|x| self.product(x, x) == x)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size)
            .all(|a| (a + 1..self.size).all(|b| self.product(a, b) == self.product(b, a)))
    }

    /// The center: elements commuting with everything.
    pub fn center(&self) -> ElementSubset {
        let members = (0..self.size)
            .map(|z| (0..self.size).all(|x| self.product(z, x) == self.product(x, z)))
            .collect();
        ElementSubset::from_members(self, members)
    }

    /// Whether the table is a group: a two-sided identity exists and every
    /// element has a two-sided inverse for it.
    pub fn is_group(&self) -> bool {
        let Some(e) = self.identity() else {
            return false;
        };
        (0..self.size).all(|a| {
            (0..self.size).any(|b| self.product(a, b) == e && self.product(b, a) == e)
        })
    }

    /// Smallest product-closed superset of `gens`, as an induced subsemigroup.
    ///
    /// Local indices are assigned deterministically: the generators first, in
    /// the given order, then new elements in the order their defining products
    /// are first encountered while scanning pairs level by level in index
    /// order.
    pub fn closure(&self, gens: &[usize]) -> SubSemigroup {
        assert!(!gens.is_empty(), "closure requires at least one generator");
        let mut seen = vec![false; self.size];
        let mut elems: Vec<usize> = Vec::new();
        for &g in gens {
            assert!(g < self.size, "generator index {g} out of range");
            if !seen[g] {
                seen[g] = true;
                elems.push(g);
            }
        }
        let mut frontier_start = 0;
        while frontier_start < elems.len() {
            let frontier_end = elems.len();
            for i in 0..frontier_end {
                for j in 0..frontier_end {
                    if i < frontier_start && j < frontier_start {
                        continue; // both factors scanned in an earlier level
                    }
                    let p = self.product(elems[i], elems[j]);
                    if !seen[p] {
                        seen[p] = true;
                        elems.push(p);
                    }
                }
            }
            frontier_start = frontier_end;
        }

        let mut local_of = vec![usize::MAX; self.size];
        for (local, &parent) in elems.iter().enumerate() {
            local_of[parent] = local;
        }
        let k = elems.len();
        let mut flat = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                flat.push(local_of[self.product(a, b)]);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| elems.iter().map(|&p| ls[p].clone()).collect());
        let semigroup = FiniteSemigroup::from_flat_unchecked(k, flat, labels);
        let subset = ElementSubset::new(self, &elems);
        SubSemigroup {
            semigroup,
            to_parent: elems,
            subset,
        }
    }

    /// Apply a relabeling permutation: element i becomes perm[i].
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        assert_eq!(perm.len(), self.size);
        let n = self.size;
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[perm[a] * n + perm[b]] = perm[self.product(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = vec![String::new(); n];
            for i in 0..n {
                out[perm[i]] = ls[i].clone();
            }
            out
        });
        FiniteSemigroup::from_flat_unchecked(n, flat, labels)
    }

    /// The opposite semigroup (transposed table).
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.size;
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = self.product(b, a);
            }
        }
        FiniteSemigroup::from_flat_unchecked(n, flat, self.labels.clone())
    }

    /// Re-run the exhaustive associativity scan on the stored table.
    pub fn recheck_associativity(&self) -> Result<()> {
        check_associativity(self.size, &self.table)
    }
}

fn check_associativity(size: usize, flat: &[usize]) -> Result<()> {
    for a in 0..size {
        for b in 0..size {
            let ab = flat[a * size + b];
            for c in 0..size {
                let left = flat[ab * size + c];
                let right = flat[a * size + flat[b * size + c]];
                if left != right {
                    return Err(Error::NotAssociative {
                        a,
                        b,
                        c,
                        left,
                        right,
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_zero(n: usize) -> FiniteSemigroup {
        let table = (0..n).map(|i| vec![i; n]).collect();
        FiniteSemigroup::new(table, None).unwrap()
    }

    #[test]
    fn trivial_semigroup_is_valid() {
        let s = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.product(0, 0), 0);
    }

    #[test]
    fn left_zero_three_is_valid() {
        let s = left_zero(3);
        assert!(s.is_band());
        assert!(!s.is_commutative());
    }

    #[test]
    fn first_violating_triple_is_reported_in_row_major_order() {
        // 0*0 = 1, everything else 0: (0*0)*1 = 0 but 0*(0*1) = 1.
        // All 8 triples checked by hand; (0,0,1) is the first row-major
        // violation.
        let err = FiniteSemigroup::new(vec![vec![1, 0], vec![0, 0]], None).unwrap_err();
        assert_eq!(
            err,
            Error::NotAssociative {
                a: 0,
                b: 0,
                c: 1,
                left: 0,
                right: 1
            }
        );
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 1]], None),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![2]], None),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0]], Some(vec!["a".into(), "b".into()])),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn sandwich_skips_the_formal_identity() {
        let s = left_zero(2);
        assert_eq!(s.sandwich(0, Multiplier::Identity, 1), 0);
        assert_eq!(s.sandwich(0, Multiplier::Element(1), 1), 0);
    }

    #[test]
    fn zero_and_identity_detection() {
        // Meet semilattice on {0, 1}: 0 is a zero, 1 an identity.
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.identity(), Some(1));
        assert!(left_zero(2).zero().is_none());
    }

    #[test]
    fn center_of_commutative_semigroup_is_everything() {
        let s = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert!(s.is_group());
        assert_eq!(s.center().indices(), vec![0, 1]);
    }

    #[test]
    fn closure_of_singleton_is_monogenic() {
        // Cyclic group of order 4 generated by 1.
        let table = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let s = FiniteSemigroup::new(table, None).unwrap();
        let sub = s.closure(&[1]);
        assert_eq!(sub.semigroup.size(), 4);
        assert!(sub.subset.is_closed());
        // Discovery order: 1, then 1*1=2, then 1*2=3, 2*2=0.
        assert_eq!(sub.to_parent, vec![1, 2, 3, 0]);
    }

    #[test]
    fn closure_is_idempotent() {
        let s = left_zero(3);
        let first = s.closure(&[0, 2]);
        let again = s.closure(&first.to_parent);
        assert_eq!(first.to_parent, again.to_parent);
    }

    #[test]
    fn subset_closure_flag_is_verified() {
        let table = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let s = FiniteSemigroup::new(table, None).unwrap();
        assert!(ElementSubset::new(&s, &[0, 2]).is_closed());
        assert!(!ElementSubset::new(&s, &[1]).is_closed());
    }

    #[test]
    fn relabel_round_trip() {
        let s = left_zero(3);
        let perm = [2, 0, 1];
        let t = s.relabel(&perm);
        let inv = [1, 2, 0];
        assert_eq!(t.relabel(&inv).flat_table(), s.flat_table());
    }

    #[test]
    fn opposite_of_left_zero_is_right_zero() {
        let s = left_zero(2);
        let t = s.opposite();
        assert_eq!(t.product(0, 1), 1);
        assert_eq!(t.product(1, 0), 0);
    }
}
