//! Canonical forms of multiplication tables under relabeling, used as the
//! identity key when counting semigroups up to isomorphism or up to
//! isomorphism and anti-isomorphism.

use crate::semigroup::FiniteSemigroup;

/// The symmetry group a canonical form is minimal under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoModulus {
    /// Relabelings only.
    Iso,
    /// Relabelings and the transpose (opposite semigroup).
    IsoAnti,
}

impl IsoModulus {
    pub fn as_str(&self) -> &'static str {
        match self {
            IsoModulus::Iso => "iso",
            IsoModulus::IsoAnti => "isoanti",
        }
    }
}

/// The lexicographically minimal row-major table over the declared symmetry
/// group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub flat: Vec<usize>,
    pub modulo: IsoModulus,
}

/// All permutations of 0..n in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(n: usize, depth: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if depth == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur[depth] = v;
                rec(n, depth + 1, cur, used, out);
                used[v] = false;
            }
        }
    }
    rec(n, 0, &mut cur, &mut used, &mut out);
    out
}

fn apply_perm(n: usize, flat: &[usize], perm: &[usize], out: &mut [usize]) {
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[flat[a * n + b]];
        }
    }
}

fn transpose(n: usize, flat: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[a * n + b] = flat[b * n + a];
        }
    }
    out
}

/// Minimal relabeled table. Factorial in n; intended for desk-scale orders.
pub(crate) fn canonical_flat(n: usize, flat: &[usize], modulo: IsoModulus) -> Vec<usize> {
    assert!(n <= 10, "canonical form minimization is factorial; order {n} unsupported");
    let mut best = flat.to_vec();
    let mut candidate = vec![0; n * n];
    let tables: Vec<Vec<usize>> = match modulo {
        IsoModulus::Iso => vec![flat.to_vec()],
        IsoModulus::IsoAnti => vec![flat.to_vec(), transpose(n, flat)],
    };
    for perm in permutations(n) {
        for t in &tables {
            apply_perm(n, t, &perm, &mut candidate);
            if candidate.as_slice() < best.as_slice() {
                best.copy_from_slice(&candidate);
            }
        }
    }
    best
}

/// Canonical form of a semigroup's table; with `include_anti` the transpose
/// is also in the orbit.
pub fn canonical_form(s: &FiniteSemigroup, include_anti: bool) -> CanonicalForm {
    let modulo = if include_anti {
        IsoModulus::IsoAnti
    } else {
        IsoModulus::Iso
    };
    CanonicalForm {
        flat: canonical_flat(s.size(), s.flat_table(), modulo),
        modulo,
    }
}

pub fn are_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    s.size() == t.size() && canonical_form(s, false) == canonical_form(t, false)
}

/// Whether some bijection reverses all products, i.e. s is isomorphic to the
/// opposite of t.
pub fn are_anti_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    s.size() == t.size() && canonical_form(s, false) == canonical_form(&t.opposite(), false)
}
