//! Builders for the semigroup families used throughout: Rees matrix
//! semigroups, trivial total ideal extensions and chains, star semigroups,
//! and the named example tables that anchor the verification suite.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Description of a Rees matrix semigroup M^0(G, I, Lambda; P) (or
/// M(G, I, Lambda; P) without zero).
///
/// Elements are written g_{i,lambda} with i indexing rows (|I| = `rows`) and
/// lambda indexing columns (|Lambda| = `cols`). The sandwich matrix is
/// Lambda x I: `sandwich[lambda][i]`, with `None` standing for the zero.
/// Multiplication: g_{i,l} * h_{j,m} = (g * p_{l,j} * h)_{i,m}, and any
/// product through a zero sandwich entry is the zero element.
#[derive(Clone, Debug)]
pub struct ReesMatrixDescriptor {
    pub group: FiniteSemigroup,
    pub rows: usize,
    pub cols: usize,
    pub sandwich: Vec<Vec<Option<usize>>>,
    pub with_zero: bool,
    /// When set together with `with_zero`, reject sandwich matrices with an
    /// all-zero row or column.
    pub require_regular: bool,
}

impl ReesMatrixDescriptor {
    pub fn new(
        group: FiniteSemigroup,
        rows: usize,
        cols: usize,
        sandwich: Vec<Vec<Option<usize>>>,
        with_zero: bool,
    ) -> Self {
        ReesMatrixDescriptor {
            group,
            rows,
            cols,
            sandwich,
            with_zero,
            require_regular: false,
        }
    }

    /// Whether every sandwich row and column has a non-zero entry.
    pub fn is_regular(&self) -> bool {
        let rows_ok = (0..self.cols).all(|l| self.sandwich[l].iter().any(Option::is_some));
        let cols_ok =
            (0..self.rows).all(|i| (0..self.cols).any(|l| self.sandwich[l][i].is_some()));
        rows_ok && cols_ok
    }
}

/// Element layout of the result: the g_{i,lambda} row-major over (g, i,
/// lambda) with i outermost, then the zero (when present) last.
pub fn rees_matrix(d: &ReesMatrixDescriptor) -> Result<FiniteSemigroup> {
    if !d.group.is_group() {
        return Err(Error::NotAGroup(
            "descriptor group table has no identity or misses inverses".into(),
        ));
    }
    if d.rows == 0 || d.cols == 0 {
        return Err(Error::MalformedTable("rows and cols must be positive".into()));
    }
    if d.sandwich.len() != d.cols || d.sandwich.iter().any(|r| r.len() != d.rows) {
        return Err(Error::MalformedTable(format!(
            "sandwich matrix must be {} x {}",
            d.cols, d.rows
        )));
    }
    let gn = d.group.size();
    for row in &d.sandwich {
        for &e in row {
            match e {
                Some(g) if g >= gn => {
                    return Err(Error::MalformedTable(format!(
                        "sandwich entry {g} outside group of order {gn}"
                    )))
                }
                None if !d.with_zero => {
                    return Err(Error::MalformedTable(
                        "zero sandwich entry requires with_zero".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    if d.with_zero && d.require_regular && !d.is_regular() {
        return Err(Error::NonRegularSandwich);
    }

    let nonzero = gn * d.rows * d.cols;
    let size = nonzero + usize::from(d.with_zero);
    let zero = nonzero; // valid index only when with_zero
    let idx = |g: usize, i: usize, l: usize| (g * d.rows + i) * d.cols + l;

    let mut flat = vec![0usize; size * size];
    for g in 0..gn {
        for i in 0..d.rows {
            for l in 0..d.cols {
                for h in 0..gn {
                    for j in 0..d.rows {
                        for m in 0..d.cols {
                            let a = idx(g, i, l);
                            let b = idx(h, j, m);
                            flat[a * size + b] = match d.sandwich[l][j] {
                                Some(p) => idx(d.group.product(d.group.product(g, p), h), i, m),
                                None => zero,
                            };
                        }
                    }
                }
            }
        }
    }
    if d.with_zero {
        for x in 0..size {
            flat[zero * size + x] = zero;
            flat[x * size + zero] = zero;
        }
    }

    let mut labels = Vec::with_capacity(size);
    for g in 0..gn {
        for i in 0..d.rows {
            for l in 0..d.cols {
                if gn == 1 {
                    labels.push(format!("e{}{}", i + 1, l + 1));
                } else {
                    labels.push(format!("{}_{}{}", d.group.label(g), i + 1, l + 1));
                }
            }
        }
    }
    if d.with_zero {
        labels.push("0".into());
    }
    FiniteSemigroup::from_flat(size, flat, Some(labels))
}

/// The trivial group on one element.
pub fn trivial_group() -> FiniteSemigroup {
    FiniteSemigroup::new(vec![vec![0]], Some(vec!["e".into()])).unwrap()
}

/// The cyclic group of order n under addition.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteSemigroup::new(table, None).unwrap()
}

/// The completely simple band M({e}, rows, cols; P) with every sandwich
/// entry e: e_{i,l} * e_{j,m} = e_{i,m}.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    let sandwich = vec![vec![Some(0); rows]; cols];
    rees_matrix(&ReesMatrixDescriptor::new(
        trivial_group(),
        rows,
        cols,
        sandwich,
        false,
    ))
    .unwrap()
}

/// M^0({e}, n, n; I_n): the Brandt-style aperiodic 0-simple semigroup with
/// identity sandwich matrix.
pub fn brandt_aperiodic(n: usize) -> FiniteSemigroup {
    let sandwich = (0..n)
        .map(|l| (0..n).map(|i| if i == l { Some(0) } else { None }).collect())
        .collect();
    rees_matrix(&ReesMatrixDescriptor::new(
        trivial_group(),
        n,
        n,
        sandwich,
        true,
    ))
    .unwrap()
}

/// The 7-element semigroup that is the disjoint union of M^0({e}, 2, 2; I_2)
/// and a cyclic group {1, u} of order two, glued by 1s = s1 = s,
/// e11*u = u*e22 = e12 and e22*u = u*e11 = e21. Right multiplication by u
/// swaps columns of the Rees part and left multiplication swaps rows; u
/// squares to 1. Generated by u and e11.
///
/// Element order: e11 e12 e21 e22, then 0, 1, u.
pub fn f7() -> FiniteSemigroup {
    let n = 7;
    let (theta, one, u) = (4usize, 5usize, 6usize);
    let e = |i: usize, j: usize| (i - 1) * 2 + (j - 1); // 1-based Rees coordinates
    let mut t = vec![vec![0usize; n]; n];
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    t[e(i, j)][e(k, l)] = if j == k { e(i, l) } else { theta };
                }
            }
        }
    }
    let swap = |x: usize| 3 - x;
    for i in 1..=2 {
        for j in 1..=2 {
            t[e(i, j)][u] = e(i, swap(j));
            t[u][e(i, j)] = e(swap(i), j);
            t[e(i, j)][one] = e(i, j);
            t[one][e(i, j)] = e(i, j);
        }
    }
    t[theta] = vec![theta; n];
    for row in t.iter_mut() {
        row[theta] = theta;
    }
    t[one][one] = one;
    t[one][u] = u;
    t[u][one] = u;
    t[u][u] = one;
    let labels = ["e11", "e12", "e21", "e22", "0", "1", "u"]
        .map(String::from)
        .to_vec();
    FiniteSemigroup::new(t, Some(labels)).expect("the f7 table is associative")
}

/// Partial column action of an adjoined element: `sigma[j]` is the new
/// column for e_{i, j+1} * x, `None` meaning the zero.
type PartialMap = [Option<usize>; 4];

struct AdjoinedElement {
    label: &'static str,
    sigma: PartialMap,
    tau: PartialMap,
}

/// Core of the two zero-union examples: M^0({e}, 4, 4; I_4) extended by
/// elements acting on the Rees part through partial row/column permutations.
/// e_{ij} * x = e_{i, sigma_x(j)} and x * e_{ij} = e_{tau_x(i), j}, zero when
/// the map is undefined; products among adjoined elements are given
/// explicitly. The exhaustive associativity check in the constructor is the
/// gate for this completion.
fn zero_union_extension(
    adjoined: &[AdjoinedElement],
    cross: &[(&'static str, &'static str, CrossTarget)],
) -> FiniteSemigroup {
    let theta = 16usize;
    let n = 17 + adjoined.len();
    let e = |i: usize, j: usize| i * 4 + j; // 0-based here
    let mut t = vec![vec![theta; n]; n];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    t[e(i, j)][e(k, l)] = if j == k { e(i, l) } else { theta };
                }
            }
        }
    }
    let adj_index = |label: &str| {
        17 + adjoined
            .iter()
            .position(|a| a.label == label)
            .expect("unknown adjoined label")
    };
    for (ai, a) in adjoined.iter().enumerate() {
        let x = 17 + ai;
        for i in 0..4 {
            for j in 0..4 {
                t[e(i, j)][x] = a.sigma[j].map_or(theta, |j2| e(i, j2));
                t[x][e(i, j)] = a.tau[i].map_or(theta, |i2| e(i2, j));
            }
        }
    }
    for &(x, y, target) in cross {
        let (xi, yi) = (adj_index(x), adj_index(y));
        t[xi][yi] = match target {
            CrossTarget::Zero => theta,
            CrossTarget::Rees(i, j) => e(i, j),
        };
    }
    t[theta] = vec![theta; n];
    for row in t.iter_mut() {
        row[theta] = theta;
    }
    let mut labels: Vec<String> = Vec::with_capacity(n);
    for i in 0..4 {
        for j in 0..4 {
            labels.push(format!("e{}{}", i + 1, j + 1));
        }
    }
    labels.push("0".into());
    for a in adjoined {
        labels.push(a.label.into());
    }
    debug_assert_eq!(labels.len(), n);
    FiniteSemigroup::new(t, Some(labels))
        .expect("zero-union extension table is associative")
}

#[derive(Clone, Copy)]
enum CrossTarget {
    Zero,
    Rees(usize, usize), // 0-based
}

fn w_element() -> AdjoinedElement {
    AdjoinedElement {
        label: "w",
        // columns: 1 -> 4, 2 -> 3; rows: 3 -> 2, 4 -> 1 (1-based)
        sigma: [Some(3), Some(2), None, None],
        tau: [None, None, Some(1), Some(0)],
    }
}

fn v_element() -> AdjoinedElement {
    AdjoinedElement {
        label: "v",
        // columns: 1 -> 3, 2 -> 4; rows: 3 -> 1, 4 -> 2
        sigma: [Some(2), Some(3), None, None],
        tau: [None, None, Some(0), Some(1)],
    }
}

fn q_element() -> AdjoinedElement {
    AdjoinedElement {
        label: "q",
        // columns: 2 -> 1, 4 -> 3; rows: 1 -> 2, 3 -> 4
        sigma: [None, Some(0), None, Some(2)],
        tau: [Some(1), None, Some(3), None],
    }
}

/// The zero-union of M^0({e}, 4, 4; I_4) with two column/row-permuting
/// elements w and v; its upper non-nilpotent graph is empty although the
/// semigroup is not nilpotent.
///
/// Element order: e11 e12 ... e44 row-major, then 0, w, v.
pub fn s18() -> FiniteSemigroup {
    zero_union_extension(
        &[w_element(), v_element()],
        &[
            ("w", "w", CrossTarget::Zero),
            ("v", "v", CrossTarget::Zero),
            ("w", "v", CrossTarget::Zero),
            ("v", "w", CrossTarget::Zero),
        ],
    )
}

/// [`s18`] with one further element q added as an ideal extension; the upper
/// non-nilpotent graph stays empty but the Neumann-Taylor condition fails.
///
/// Element order: e11 ... e44, 0, w, v, q.
pub fn t19() -> FiniteSemigroup {
    zero_union_extension(
        &[w_element(), v_element(), q_element()],
        &[
            ("w", "w", CrossTarget::Zero),
            ("v", "v", CrossTarget::Zero),
            ("w", "v", CrossTarget::Zero),
            ("v", "w", CrossTarget::Zero),
            ("q", "q", CrossTarget::Zero),
            ("w", "q", CrossTarget::Rees(0, 2)), // wq = e13
            ("v", "q", CrossTarget::Rees(1, 2)), // vq = e23
            ("q", "w", CrossTarget::Rees(1, 3)), // qw = e24
            ("q", "v", CrossTarget::Rees(1, 2)), // qv = e23
        ],
    )
}

/// The star semigroup T_n on elements x0..xn: x0 * xi = x0 and
/// xj * xi = x1 for every i and every j >= 1. Its upper non-nilpotent graph
/// is the star with center x0.
pub fn star_semigroup(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let size = n + 1;
    let mut t = vec![vec![1usize; size]; size];
    t[0] = vec![0; size];
    let labels = (0..size).map(|i| format!("x{i}")).collect();
    FiniteSemigroup::new(t, Some(labels)).expect("the star law is associative")
}

/// The trivial total ideal extension of `ideal` by `top`: the disjoint union
/// in which `ideal` absorbs, s*t = s = t*s for s in the ideal and t on top.
/// `top`'s elements come first in the result.
pub fn trivial_total_ideal_extension(
    top: &FiniteSemigroup,
    ideal: &FiniteSemigroup,
) -> FiniteSemigroup {
    chain_extension(&[top.clone(), ideal.clone()])
}

/// Left-fold of [`trivial_total_ideal_extension`] over a list: within-part
/// products are unchanged and a cross product of elements from different
/// parts is the element of the later part. Blocks are laid out in list
/// order.
pub fn chain_extension(parts: &[FiniteSemigroup]) -> FiniteSemigroup {
    assert!(!parts.is_empty(), "chain extension needs at least one part");
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.size();
            Some(o)
        })
        .collect();
    let size: usize = parts.iter().map(|p| p.size()).sum();
    let block_of = |x: usize| {
        (0..parts.len())
            .rfind(|&b| offsets[b] <= x)
            .expect("index in range")
    };
    let mut flat = vec![0usize; size * size];
    for a in 0..size {
        for b in 0..size {
            let (ba, bb) = (block_of(a), block_of(b));
            flat[a * size + b] = if ba == bb {
                offsets[ba] + parts[ba].product(a - offsets[ba], b - offsets[bb])
            } else if ba < bb {
                b
            } else {
                a
            };
        }
    }
    let labels = if parts.iter().all(|p| p.labels().is_some()) {
        let all: Vec<String> = parts
            .iter()
            .flat_map(|p| p.labels().unwrap().iter().cloned())
            .collect();
        let mut seen = std::collections::HashSet::new();
        all.iter().all(|l| seen.insert(l.clone())).then_some(all)
    } else {
        None
    };
    FiniteSemigroup::from_flat(size, flat, labels).expect("chain extension is associative")
}

/// A one-element semigroup with the given label.
pub fn singleton(label: &str) -> FiniteSemigroup {
    FiniteSemigroup::new(vec![vec![0]], Some(vec![label.into()])).unwrap()
}

/// A named example table together with the edge set its upper non-nilpotent
/// graph must have, as frozen expected values.
pub struct TableFixture {
    pub name: &'static str,
    pub semigroup: FiniteSemigroup,
    pub expected_upper_edges: Vec<(usize, usize)>,
}

fn labeled(table: Vec<Vec<usize>>, labels: &[&str]) -> FiniteSemigroup {
    FiniteSemigroup::new(table, Some(labels.iter().map(|s| s.to_string()).collect()))
        .expect("fixture tables are associative")
}

/// The small example tables with their expected upper graphs, worked out by
/// hand from the multiplication tables.
pub fn table_fixtures() -> Vec<TableFixture> {
    vec![
        // Left-zero on three elements: every pair is a non-commuting
        // self-loop pair, so the graph is the triangle C3.
        TableFixture {
            name: "c3",
            semigroup: labeled(
                vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]],
                &["a", "b", "c"],
            ),
            expected_upper_edges: vec![(0, 1), (0, 2), (1, 2)],
        },
        // Four elements whose graph is the cycle a-c-b-d-a.
        TableFixture {
            name: "c4",
            semigroup: labeled(
                vec![
                    vec![1, 1, 0, 1],
                    vec![1, 1, 1, 1],
                    vec![3, 3, 2, 3],
                    vec![3, 3, 3, 3],
                ],
                &["a", "b", "c", "d"],
            ),
            expected_upper_edges: vec![(0, 2), (0, 3), (1, 2), (1, 3)],
        },
        // A single edge between c and d, a and b isolated.
        TableFixture {
            name: "fig2_left",
            semigroup: labeled(
                vec![
                    vec![0, 0, 0, 0],
                    vec![0, 1, 0, 0],
                    vec![0, 0, 2, 2],
                    vec![0, 0, 3, 3],
                ],
                &["a", "b", "c", "d"],
            ),
            expected_upper_edges: vec![(2, 3)],
        },
        // Triangle a, b, d with the pendant c attached to a.
        TableFixture {
            name: "fig2_right",
            semigroup: labeled(
                vec![
                    vec![0, 0, 0, 0],
                    vec![1, 1, 1, 1],
                    vec![1, 1, 2, 3],
                    vec![3, 3, 3, 3],
                ],
                &["a", "b", "c", "d"],
            ),
            expected_upper_edges: vec![(0, 1), (0, 2), (0, 3), (1, 3)],
        },
        // Five elements; the subgraph induced on {b, c, d, e} is the path
        // c-e-d-b. The full graph also joins a to d and to e.
        TableFixture {
            name: "p4_induced_5",
            semigroup: labeled(
                vec![
                    vec![0, 0, 0, 0, 0],
                    vec![0, 1, 0, 0, 4],
                    vec![0, 0, 2, 3, 0],
                    vec![3, 3, 3, 3, 3],
                    vec![4, 4, 4, 4, 4],
                ],
                &["a", "b", "c", "d", "e"],
            ),
            expected_upper_edges: vec![(0, 3), (0, 4), (1, 3), (2, 4), (3, 4)],
        },
        // Not a band (a squares to b); b is isolated and {a, c, d} is a
        // complete triangle.
        TableFixture {
            name: "isolated_b",
            semigroup: labeled(
                vec![
                    vec![1, 0, 2, 3],
                    vec![0, 1, 2, 3],
                    vec![3, 2, 2, 3],
                    vec![2, 3, 2, 3],
                ],
                &["a", "b", "c", "d"],
            ),
            expected_upper_edges: vec![(0, 2), (0, 3), (2, 3)],
        },
    ]
}

/// Look up a built-in semigroup by fixture name.
pub fn fixture_by_name(name: &str) -> Option<FiniteSemigroup> {
    let base = name.strip_suffix("_table").unwrap_or(name);
    match base {
        "f7" => Some(f7()),
        "s18" => Some(s18()),
        "t19" => Some(t19()),
        _ => table_fixtures()
            .into_iter()
            .find(|f| f.name == base)
            .map(|f| f.semigroup),
    }
}

/// All fixture names, in a stable order.
pub fn fixture_names() -> Vec<&'static str> {
    let mut names = vec!["f7", "s18", "t19"];
    names.extend(table_fixtures().iter().map(|f| f.name));
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, graph_isomorphic, path_graph, star_graph};

    #[test]
    fn rectangular_band_is_a_band_of_the_right_size() {
        let s = rectangular_band(2, 3);
        assert_eq!(s.size(), 6);
        assert!(s.is_band());
        assert!(s.is_simple());
        // e_{ij} * e_{kl} = e_{il}
        assert_eq!(s.product(0, 4), 1); // e11 * e22 -> e12
    }

    #[test]
    fn brandt_5_is_a_nilpotent_inverse_semigroup() {
        let s = brandt_aperiodic(2);
        assert_eq!(s.size(), 5);
        assert!(s.is_inverse_semigroup());
        assert!(s.is_malcev_nilpotent());
    }

    #[test]
    fn rees_matrix_rejects_bad_descriptors() {
        let not_group = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 0]], None).unwrap();
        let d = ReesMatrixDescriptor::new(not_group, 1, 1, vec![vec![Some(0)]], false);
        assert!(matches!(rees_matrix(&d), Err(Error::NotAGroup(_))));

        let d = ReesMatrixDescriptor::new(trivial_group(), 1, 1, vec![vec![None]], false);
        assert!(matches!(rees_matrix(&d), Err(Error::MalformedTable(_))));

        let mut d = ReesMatrixDescriptor::new(
            trivial_group(),
            2,
            2,
            vec![vec![Some(0), Some(0)], vec![None, None]],
            true,
        );
        d.require_regular = true;
        assert_eq!(rees_matrix(&d), Err(Error::NonRegularSandwich));
        d.require_regular = false;
        assert!(rees_matrix(&d).is_ok());
    }

    #[test]
    fn f7_structure() {
        let s = f7();
        assert_eq!(s.size(), 7);
        let u = s.element_by_label("u").unwrap();
        let one = s.element_by_label("1").unwrap();
        let e11 = s.element_by_label("e11").unwrap();
        let e12 = s.element_by_label("e12").unwrap();
        let e21 = s.element_by_label("e21").unwrap();
        let e22 = s.element_by_label("e22").unwrap();
        assert_eq!(s.product(u, u), one);
        assert_eq!(s.product(e11, u), e12);
        assert_eq!(s.product(u, e22), e12);
        assert_eq!(s.product(e22, u), e21);
        assert_eq!(s.product(u, e11), e21);
        assert!(!s.is_band());
        // sandwich through u: e11 * u * e22 = e12 * e22 = e12
        assert_eq!(s.sandwich(e11, crate::Multiplier::Element(u), e22), e12);
        // generated by u and e11
        assert_eq!(s.closure(&[u, e11]).semigroup.size(), 7);
        assert!(!s.is_malcev_nilpotent());
    }

    #[test]
    fn s18_relations_hold() {
        let s = s18();
        assert_eq!(s.size(), 19);
        let el = |name: &str| s.element_by_label(name).unwrap();
        let (w, v, theta) = (el("w"), el("v"), el("0"));
        assert_eq!(s.product(w, w), theta);
        assert_eq!(s.product(v, v), theta);
        assert_eq!(s.product(w, v), theta);
        assert_eq!(s.product(v, w), theta);
        assert_eq!(s.product(el("e11"), w), el("e14"));
        assert_eq!(s.product(el("e22"), w), el("e23"));
        assert_eq!(s.product(el("e33"), w), theta);
        assert_eq!(s.product(el("e44"), v), theta);
        assert_eq!(s.product(el("e11"), v), el("e13"));
        assert_eq!(s.product(el("e22"), v), el("e24"));
        assert_eq!(s.product(w, el("e11")), theta);
        assert_eq!(s.product(v, el("e22")), theta);
        assert_eq!(s.product(w, el("e33")), el("e23"));
        assert_eq!(s.product(w, el("e44")), el("e14"));
        assert_eq!(s.product(v, el("e33")), el("e13"));
        assert_eq!(s.product(v, el("e44")), el("e24"));
    }

    #[test]
    fn t19_relations_hold() {
        let s = t19();
        assert_eq!(s.size(), 20);
        let el = |name: &str| s.element_by_label(name).unwrap();
        let (w, v, q, theta) = (el("w"), el("v"), el("q"), el("0"));
        assert_eq!(s.product(q, q), theta);
        assert_eq!(s.product(el("e11"), q), theta);
        assert_eq!(s.product(el("e33"), q), theta);
        assert_eq!(s.product(q, el("e22")), theta);
        assert_eq!(s.product(q, el("e44")), theta);
        assert_eq!(s.product(el("e22"), q), el("e21"));
        assert_eq!(s.product(el("e44"), q), el("e43"));
        assert_eq!(s.product(q, el("e11")), el("e21"));
        assert_eq!(s.product(q, el("e33")), el("e43"));
        assert_eq!(s.product(w, q), el("e13"));
        assert_eq!(s.product(v, q), el("e23"));
        assert_eq!(s.product(q, w), el("e24"));
        assert_eq!(s.product(q, v), el("e23"));
    }

    #[test]
    fn star_semigroup_law_and_graph() {
        for n in [1, 2, 3, 4] {
            let s = star_semigroup(n);
            assert_eq!(s.size(), n + 1);
            for j in 1..=n {
                for i in 0..=n {
                    assert_eq!(s.product(0, i), 0);
                    assert_eq!(s.product(j, i), 1);
                }
            }
            let g = s.upper_graph();
            assert!(g.is_star_graph());
            assert_eq!(g.star_center(), Some(0));
        }
        // nilpotentizer of the center is just the center
        let s = star_semigroup(3);
        assert_eq!(s.nilpotentizer(0).indices(), vec![0]);
    }

    #[test]
    fn chain_extension_absorbs_into_later_blocks() {
        let band = rectangular_band(2, 1);
        let s = trivial_total_ideal_extension(&band, &singleton("s"));
        assert_eq!(s.size(), 3);
        // cross products equal the ideal element
        assert_eq!(s.product(0, 2), 2);
        assert_eq!(s.product(2, 0), 2);
        let g = s.upper_graph();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.isolated_vertices(), vec![2]);
    }

    #[test]
    fn chain_extension_is_associative_as_a_list_operation() {
        let a = rectangular_band(2, 1);
        let b = rectangular_band(1, 2);
        let c = singleton("z");
        let folded = trivial_total_ideal_extension(&trivial_total_ideal_extension(&a, &b), &c);
        let chained = chain_extension(&[a.clone(), b.clone(), c.clone()]);
        assert_eq!(folded.flat_table(), chained.flat_table());
        // no cross edges between blocks in the upper graph
        let g = chained.upper_graph();
        for (i, j) in g.edges() {
            let block = |x: usize| if x < 2 { 0 } else if x < 4 { 1 } else { 2 };
            assert_eq!(block(i), block(j));
        }
    }

    #[test]
    fn star_chain_gives_star_plus_isolated_vertex() {
        let s = trivial_total_ideal_extension(&star_semigroup(2), &singleton("s"));
        let g = s.upper_graph();
        assert_eq!(g.isolated_vertices(), vec![3]);
        let comp = g.induced(&[0, 1, 2]);
        assert!(graph_isomorphic(&comp, &star_graph(3)).unwrap());
    }

    #[test]
    fn band_chain_gives_complete_plus_isolated_vertex() {
        let s = trivial_total_ideal_extension(&rectangular_band(3, 1), &singleton("s"));
        let g = s.upper_graph();
        assert_eq!(g.isolated_vertices(), vec![3]);
        assert!(graph_isomorphic(&g.induced(&[0, 1, 2]), &complete_graph(3)).unwrap());
    }

    #[test]
    fn table_fixtures_match_their_expected_graphs() {
        for fixture in table_fixtures() {
            let g = fixture.semigroup.upper_graph();
            assert_eq!(
                g.edges(),
                fixture.expected_upper_edges,
                "fixture {}",
                fixture.name
            );
        }
    }

    #[test]
    fn fig2_right_c_d_generate_only_themselves() {
        let s = fixture_by_name("fig2_right").unwrap();
        let (c, d) = (2, 3);
        assert_eq!(s.closure(&[c, d]).to_parent, vec![c, d]);
    }

    #[test]
    fn the_two_fig2_tables_are_not_isomorphic() {
        let left = fixture_by_name("fig2_left").unwrap();
        let right = fixture_by_name("fig2_right").unwrap();
        assert!(!crate::canonical::are_isomorphic(&left, &right));
    }

    #[test]
    fn rectangular_band_graphs_are_all_complete() {
        let s = rectangular_band(2, 3);
        assert!(s.upper_graph().is_complete());
        assert!(s.lower_graph().is_complete());
        assert!(s.noncommuting_graph().is_complete());
    }

    #[test]
    fn band_with_adjoined_identity_misses_exactly_one_edge() {
        // Left-zero band {e11, e21, e31} plus an element with x*1 = x and
        // 1*x = e11: every pair is joined except {1, e11}.
        let t = vec![
            vec![0, 0, 0, 0],
            vec![1, 1, 1, 1],
            vec![2, 2, 2, 2],
            vec![0, 0, 0, 3],
        ];
        let labels = vec!["e11".into(), "e21".into(), "e31".into(), "1".into()];
        let s = FiniteSemigroup::new(t, Some(labels)).unwrap();
        let g = s.upper_graph();
        assert!(!g.has_edge(0, 3));
        for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] {
            assert!(g.has_edge(i, j), "missing edge ({i}, {j})");
        }
        assert!(s.is_n_semigroup());
    }

    #[test]
    fn p4_induced_subgraph_is_a_path() {
        let s = fixture_by_name("p4_induced_5").unwrap();
        let g = s.upper_graph();
        let induced = g.induced(&[1, 2, 3, 4]);
        assert!(graph_isomorphic(&induced, &path_graph(4)).unwrap());
    }

    #[test]
    fn fixture_lookup_accepts_alias() {
        assert!(fixture_by_name("c3").is_some());
        assert!(fixture_by_name("c3_table").is_some());
        assert!(fixture_by_name("nope").is_none());
    }

    #[test]
    fn single_j_class_example_has_two_lower_edges() {
        // M^0({1}, 4, 2; P) with P = [[1,1,0,0],[0,0,1,1]]: one non-zero
        // J-class, and lower edges exactly {e11,e21} and {e32,e42}.
        let sandwich = vec![
            vec![Some(0), Some(0), None, None],
            vec![None, None, Some(0), Some(0)],
        ];
        let s = rees_matrix(&ReesMatrixDescriptor::new(
            trivial_group(),
            4,
            2,
            sandwich,
            true,
        ))
        .unwrap();
        assert_eq!(s.size(), 9);
        let j = s.j_classes();
        assert_eq!(j.class_count(), 2);
        let theta = s.element_by_label("0").unwrap();
        assert_eq!(j.classes()[j.class_of(theta)], vec![theta]);
        assert_eq!(j.classes()[j.class_of(0)].len(), 8);

        let el = |name: &str| s.element_by_label(name).unwrap();
        let g = s.lower_graph();
        assert_eq!(
            g.edges(),
            vec![(el("e11"), el("e21")), (el("e32"), el("e42"))]
        );
    }

    #[test]
    fn nilpotentizer_counterexample_is_not_an_n_semigroup() {
        // M^0({1}, 2, 3; P) with P = [[1,0],[0,1],[1,0]]: nil(e11) contains
        // e12 and e23 but not their product e13.
        let sandwich = vec![
            vec![Some(0), None],
            vec![None, Some(0)],
            vec![Some(0), None],
        ];
        let s = rees_matrix(&ReesMatrixDescriptor::new(
            trivial_group(),
            2,
            3,
            sandwich,
            true,
        ))
        .unwrap();
        let el = |name: &str| s.element_by_label(name).unwrap();
        let nil = s.nilpotentizer(el("e11"));
        assert!(nil.contains(el("e12")));
        assert!(nil.contains(el("e23")));
        assert_eq!(s.product(el("e12"), el("e23")), el("e13"));
        assert!(!nil.contains(el("e13")));
        assert!(!nil.is_closed());
        assert!(!s.is_n_semigroup());
    }
}
