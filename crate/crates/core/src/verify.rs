//! The built-in verification suite: structural invariants checked over the
//! exhaustive small-order corpus, fixture facts, enumeration counts against
//! an independent naive oracle, and the realizability facts for four-vertex
//! graphs.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{permutations, IsoModulus};
use crate::constructions::{fixture_by_name, star_semigroup, table_fixtures};
use crate::enumeration::{enumerate_semigroups, enumerate_semigroups_with, EnumerateOptions};
use crate::error::Result;
use crate::graphs::{canonical_edge_mask, cycle_graph, path_graph, SimpleGraph};
use crate::io::emit_cayley_table;
use crate::semigroup::{FiniteSemigroup, Multiplier};

/// One invariant checked per corpus member. `run` returns a witness message
/// on failure.
pub struct Check {
    pub name: &'static str,
    pub run: fn(&FiniteSemigroup) -> std::result::Result<(), String>,
}

#[derive(Clone, Debug)]
pub struct Failure {
    /// The offending table in canonical text form.
    pub table: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passes: usize,
    pub failures: usize,
    pub first_failure: Option<Failure>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn pass(name: impl Into<String>, passes: usize) -> Self {
        CheckOutcome {
            name: name.into(),
            passes,
            failures: 0,
            first_failure: None,
        }
    }

    fn from_result(
        name: impl Into<String>,
        r: std::result::Result<usize, Failure>,
    ) -> Self {
        match r {
            Ok(passes) => Self::pass(name, passes),
            Err(f) => CheckOutcome {
                name: name.into(),
                passes: 0,
                failures: 1,
                first_failure: Some(f),
            },
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

fn fail(detail: impl Into<String>) -> std::result::Result<(), String> {
    Err(detail.into())
}

fn edges_subset(a: &SimpleGraph, b: &SimpleGraph) -> Option<(usize, usize)> {
    a.edges().into_iter().find(|&(i, j)| !b.has_edge(i, j))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).all(|d| !n.is_multiple_of(d))
}

/// The per-semigroup invariants. Every check must hold for every finite
/// semigroup; a single failure anywhere is a build-stopping event.
pub fn corpus_checks() -> Vec<Check> {
    vec![
        Check {
            name: "lower-subgraph-of-upper-subgraph-of-noncommuting",
            run: |s| {
                let (l, n, m) = (s.lower_graph(), s.upper_graph(), s.noncommuting_graph());
                if let Some(e) = edges_subset(&l, &n) {
                    return fail(format!("lower edge {e:?} missing from upper graph"));
                }
                if let Some(e) = edges_subset(&n, &m) {
                    return fail(format!("upper edge {e:?} joins commuting elements"));
                }
                Ok(())
            },
        },
        Check {
            name: "band-upper-equals-noncommuting",
            run: |s| {
                if s.is_band() && s.upper_graph() != s.noncommuting_graph() {
                    return fail("band with distinct upper and non-commuting graphs");
                }
                Ok(())
            },
        },
        Check {
            name: "totally-connected-vertex-is-idempotent",
            run: |s| {
                let g = s.upper_graph();
                for v in 0..s.size() {
                    if g.degree(v) == s.size() - 1 && s.product(v, v) != v {
                        return fail(format!("vertex {v} totally connected, not idempotent"));
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "complete-graphs-iff-rectangular-band",
            run: |s| {
                let rect = s.is_band() && s.is_simple();
                let flags = [
                    s.upper_graph().is_complete(),
                    s.lower_graph().is_complete(),
                    s.noncommuting_graph().is_complete(),
                ];
                if flags.iter().any(|&f| f != rect) {
                    return fail(format!("completeness flags {flags:?} disagree with rectangular-band = {rect}"),
                    );
                }
                Ok(())
            },
        },
        Check {
            name: "empty-upper-implies-positively-engel",
            run: |s| {
                if s.upper_graph().is_empty_graph() && !s.is_positively_engel() {
                    return fail("empty upper graph but not positively Engel");
                }
                Ok(())
            },
        },
        Check {
            name: "empty-upper-implies-unique-inverses",
            run: |s| {
                if s.upper_graph().is_empty_graph() {
                    for a in 0..s.size() {
                        if s.inverses_of(a).len() > 1 {
                            return fail(format!("element {a} has several inverses"));
                        }
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "lower-components-within-one-j-class",
            run: |s| {
                let j = s.j_classes();
                for comp in s.lower_graph().components() {
                    let c0 = j.class_of(comp[0]);
                    if comp.iter().any(|&x| j.class_of(x) != c0) {
                        return fail(format!("component {comp:?} spans J-classes"));
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "prime-order-connected-lower-is-complete",
            run: |s| {
                if is_prime(s.size()) {
                    let l = s.lower_graph();
                    if l.is_connected() && !l.is_complete() {
                        return fail("connected but incomplete lower graph at prime order");
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "no-isolated-vertex-keeps-powers-in-one-component",
            run: |s| {
                let g = s.upper_graph();
                if !g.isolated_vertices().is_empty() {
                    return Ok(());
                }
                let comps = g.components();
                let comp_of = |v: usize| comps.iter().position(|c| c.contains(&v)).unwrap();
                for x in 0..s.size() {
                    let cx = comp_of(x);
                    for &p in &s.closure(&[x]).to_parent {
                        if comp_of(p) != cx {
                            return fail(format!("power {p} of {x} leaves its component"),
                            );
                        }
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "complete-components-give-band-and-chain-order",
            run: |s| {
                let g = s.upper_graph();
                let comps = g.components();
                if !g.all_components_complete() || comps.iter().any(|c| c.len() < 2) {
                    return Ok(());
                }
                if !s.is_band() {
                    return fail("complete components of size >= 2 but not a band");
                }
                for c in &comps {
                    let subset = crate::semigroup::ElementSubset::new(s, c);
                    if !subset.is_closed() {
                        return fail(format!("component {c:?} is not a subsemigroup"));
                    }
                }
                let absorbs = |i: usize, j: usize| {
                    comps[i].iter().all(|&x| {
                        comps[j]
                            .iter()
                            .all(|&y| s.product(x, y) == y && s.product(y, x) == y)
                    })
                };
                let k = comps.len();
                let found = permutations(k).into_iter().any(|sigma| {
                    (0..k).all(|i| (i + 1..k).all(|j| absorbs(sigma[i], sigma[j])))
                });
                if !found {
                    return fail("no chain ordering of the components exists");
                }
                Ok(())
            },
        },
        Check {
            name: "center-lies-in-every-nilpotentizer",
            run: |s| {
                let center = s.center();
                for x in 0..s.size() {
                    let nil = s.nilpotentizer(x);
                    for z in center.indices() {
                        if !nil.contains(z) {
                            return fail(format!("central {z} outside nil({x})"));
                        }
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "nilpotentizer-absorbs-central-factors",
            run: |s| {
                let center = s.center();
                for x in 0..s.size() {
                    let nil = s.nilpotentizer(x);
                    for y in nil.indices() {
                        for z in center.indices() {
                            if !nil.contains(s.product(y, z)) {
                                return fail(format!("{y} in nil({x}), {z} central, product escapes"),
                                );
                            }
                        }
                    }
                }
                Ok(())
            },
        },
        Check {
            name: "class-one-iff-commutative",
            run: |s| {
                let one = s.nilpotency_class() == Some(1);
                if one != s.is_commutative() {
                    return fail("class-1 flag disagrees with commutativity");
                }
                Ok(())
            },
        },
        Check {
            name: "completely-simple-matches-primitive-idempotent-rule",
            run: |s| {
                let by_rule = s.is_simple() && s.has_primitive_idempotent();
                if s.is_completely_simple() != by_rule {
                    return fail("completely-simple shortcut disagrees with the definition");
                }
                Ok(())
            },
        },
    ]
}

/// All semigroups of order 1..=max_order, one representative per class up to
/// isomorphism and anti-isomorphism. Every listed invariant is preserved by
/// relabeling and by reversal, so checking representatives covers all tables.
pub fn standard_corpus(max_order: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_semigroups(n, IsoModulus::IsoAnti)?);
    }
    Ok(out)
}

/// Run every check over every corpus member.
pub fn run_checks(corpus: &[FiniteSemigroup], checks: &[Check]) -> Vec<CheckOutcome> {
    checks
        .iter()
        .map(|c| {
            let mut outcome = CheckOutcome::pass(c.name, 0);
            for s in corpus {
                match (c.run)(s) {
                    Ok(()) => outcome.passes += 1,
                    Err(detail) => {
                        outcome.failures += 1;
                        if outcome.first_failure.is_none() {
                            outcome.first_failure = Some(Failure {
                                table: emit_cayley_table(s),
                                detail,
                            });
                        }
                    }
                }
            }
            outcome
        })
        .collect()
}

fn decode_table(n: usize, mut code: usize) -> Vec<usize> {
    let mut flat = vec![0usize; n * n];
    for cell in flat.iter_mut() {
        *cell = code % n;
        code /= n;
    }
    flat
}

fn flat_associative(n: usize, t: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            for c in 0..n {
                if t[ab * n + c] != t[a * n + t[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Independent counting oracle: filter all n^(n^2) tables for associativity
/// and bucket by pairwise relabeling (and reversal, under IsoAnti). Feasible
/// for n <= 3 only. Shares no code with the backtracking enumerator.
pub fn naive_class_count(n: usize, modulo: IsoModulus) -> usize {
    assert!(n <= 3, "the naive oracle enumerates n^(n^2) tables");
    let perms = permutations(n);
    let relabel = |t: &[usize], p: &[usize]| {
        let mut out = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                out[p[a] * n + p[b]] = p[t[a * n + b]];
            }
        }
        out
    };
    let reverse = |t: &[usize]| {
        let mut out = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                out[a * n + b] = t[b * n + a];
            }
        }
        out
    };
    let equivalent = |a: &[usize], b: &[usize]| {
        perms.iter().any(|p| {
            relabel(b, p) == a
                || (modulo == IsoModulus::IsoAnti && relabel(&reverse(b), p) == a)
        })
    };
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for code in 0..n.pow((n * n) as u32) {
        let flat = decode_table(n, code);
        if flat_associative(n, &flat) && !reps.iter().any(|r| equivalent(r, &flat)) {
            reps.push(flat);
        }
    }
    reps.len()
}

/// Seeded random relabelings of the order-4 classes, for sampled
/// cross-checks.
pub fn sample_order_four(seed: u64, count: usize) -> Result<Vec<FiniteSemigroup>> {
    let classes = enumerate_semigroups(4, IsoModulus::IsoAnti)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let s = &classes[(rng.next_u64() % classes.len() as u64) as usize];
        let mut perm: Vec<usize> = (0..4).collect();
        for i in (1..4).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        out.push(s.relabel(&perm));
    }
    Ok(out)
}

/// Agreement of the pair-system nilpotency decision with the
/// word-enumeration oracle: the complete corpus of orders 1..=3 plus seeded
/// order-4 samples.
pub fn oracle_agreement(seed: u64, samples: usize) -> Result<CheckOutcome> {
    let mut corpus = standard_corpus(3)?;
    corpus.extend(sample_order_four(seed, samples)?);
    let mut outcome = CheckOutcome::pass("nilpotency-agrees-with-word-enumeration", 0);
    for s in &corpus {
        let fast = s.is_malcev_nilpotent();
        let slow = s.is_nilpotent_bruteforce(s.bruteforce_word_bound());
        if fast == slow {
            outcome.passes += 1;
        } else {
            outcome.failures += 1;
            if outcome.first_failure.is_none() {
                outcome.first_failure = Some(Failure {
                    table: emit_cayley_table(s),
                    detail: format!("pair system says {fast}, word enumeration says {slow}"),
                });
            }
        }
    }
    Ok(outcome)
}

/// Enumeration counts: orders 2 and 3 against the naive oracle under both
/// counting conventions, and the expected 126 classes of order 4 up to
/// isomorphism and anti-isomorphism.
pub fn count_checks() -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        for modulo in [IsoModulus::Iso, IsoModulus::IsoAnti] {
            let got = enumerate_semigroups(n, modulo)?.len();
            let want = naive_class_count(n, modulo);
            let name = format!("count-order-{n}-{}", modulo.as_str());
            out.push(CheckOutcome::from_result(
                name,
                if got == want {
                    Ok(1)
                } else {
                    Err(Failure {
                        table: String::new(),
                        detail: format!("enumerated {got} classes, naive oracle found {want}"),
                    })
                },
            ));
        }
    }
    let got = enumerate_semigroups(4, IsoModulus::IsoAnti)?.len();
    out.push(CheckOutcome::from_result(
        "count-order-4-isoanti-126",
        if got == 126 {
            Ok(1)
        } else {
            Err(Failure {
                table: String::new(),
                detail: format!("expected 126 classes of order 4, found {got}"),
            })
        },
    ));
    Ok(out)
}

/// Realizability of four-vertex graphs: over the whole order-4 corpus, the
/// path on four vertices is never an upper graph, and every one of the other
/// ten isomorphism classes is realized.
pub fn p4_realizability_check() -> Result<CheckOutcome> {
    let corpus = enumerate_semigroups(4, IsoModulus::IsoAnti)?;
    let realized: std::collections::BTreeSet<u64> = corpus
        .iter()
        .map(|s| canonical_edge_mask(&s.upper_graph()))
        .collect();
    let p4 = canonical_edge_mask(&path_graph(4));
    let all: std::collections::BTreeSet<u64> = crate::graphs::all_graphs_on(4)
        .iter()
        .map(canonical_edge_mask)
        .collect();
    let mut missing: Vec<u64> = all
        .iter()
        .filter(|&&m| m != p4 && !realized.contains(&m))
        .copied()
        .collect();
    let detail = if realized.contains(&p4) {
        Some("a four-element semigroup realizes the path on four vertices".to_string())
    } else if !missing.is_empty() {
        missing.sort_unstable();
        Some(format!("unrealized graph classes: {missing:?}"))
    } else {
        None
    };
    Ok(CheckOutcome::from_result(
        "four-vertex-realizability",
        match detail {
            None => Ok(corpus.len()),
            Some(detail) => Err(Failure {
                table: String::new(),
                detail,
            }),
        },
    ))
}

fn named_fact(
    name: &'static str,
    holds: std::result::Result<(), String>,
) -> CheckOutcome {
    CheckOutcome::from_result(
        name,
        match holds {
            Ok(()) => Ok(1),
            Err(detail) => Err(Failure {
                table: String::new(),
                detail,
            }),
        },
    )
}

fn expect(cond: bool, msg: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// The fixture facts: the seconds-scale checks on the built-in examples.
pub fn fixture_suite() -> Vec<CheckOutcome> {
    let mut out = Vec::new();

    let f7 = fixture_by_name("f7").unwrap();
    let u = f7.element_by_label("u").unwrap();
    let e11 = f7.element_by_label("e11").unwrap();
    out.push(named_fact(
        "f7-not-nilpotent",
        expect(!f7.is_malcev_nilpotent(), "f7 must not be nilpotent"),
    ));
    out.push(named_fact(
        "f7-not-positively-engel",
        expect(!f7.is_positively_engel(), "f7 must not be positively Engel"),
    ));
    out.push(named_fact(
        "f7-upper-joins-u-and-e11",
        expect(f7.upper_graph().has_edge(u, e11), "missing edge {u, e11}"),
    ));
    out.push(named_fact(
        "f7-lower-empty",
        expect(f7.lower_graph().is_empty_graph(), "lower graph must be empty"),
    ));

    let s18 = fixture_by_name("s18").unwrap();
    let el = |s: &FiniteSemigroup, n: &str| s.element_by_label(n).unwrap();
    out.push(named_fact(
        "s18-upper-empty",
        expect(s18.upper_graph().is_empty_graph(), "upper graph must be empty"),
    ));
    out.push(named_fact(
        "s18-not-nilpotent",
        expect(!s18.is_malcev_nilpotent(), "must not be nilpotent"),
    ));
    out.push(named_fact(
        "s18-positively-engel",
        expect(s18.is_positively_engel(), "must be positively Engel"),
    ));
    let (e31, e42) = (el(&s18, "e31"), el(&s18, "e42"));
    let word = [
        Multiplier::Element(el(&s18, "w")),
        Multiplier::Element(el(&s18, "v")),
    ];
    out.push(named_fact(
        "s18-pair-cycle-under-w-v",
        expect(
            s18.lambda_rho(e31, e42, &word) == (e31, e42),
            "the pair (e31, e42) must return to itself under [w, v]",
        ),
    ));

    let t19 = fixture_by_name("t19").unwrap();
    out.push(named_fact(
        "t19-upper-empty",
        expect(t19.upper_graph().is_empty_graph(), "upper graph must be empty"),
    ));
    out.push(named_fact(
        "t19-not-neumann-taylor",
        expect(!t19.is_neumann_taylor(), "must not be Neumann-Taylor"),
    ));

    for n in [2usize, 3, 4] {
        let s = star_semigroup(n);
        let g = s.upper_graph();
        out.push(named_fact(
            match n {
                2 => "star-2-upper-is-star-centered-x0",
                3 => "star-3-upper-is-star-centered-x0",
                _ => "star-4-upper-is-star-centered-x0",
            },
            expect(
                g.is_star_graph() && g.star_center() == Some(0),
                "upper graph must be the star with center x0",
            ),
        ));
    }

    for fixture in table_fixtures() {
        let g = fixture.semigroup.upper_graph();
        let ok = g.edges() == fixture.expected_upper_edges;
        let name: &'static str = match fixture.name {
            "c3" => "table-c3-upper-is-the-triangle",
            "c4" => "table-c4-upper-is-the-four-cycle",
            "fig2_left" => "table-fig2-left-upper-is-a-single-edge",
            "fig2_right" => "table-fig2-right-upper-is-the-paw",
            "p4_induced_5" => "table-p4-induced-5-upper-edges",
            _ => "table-isolated-b-upper-edges",
        };
        out.push(named_fact(
            name,
            expect(ok, "upper graph differs from the expected edge set"),
        ));
    }

    let c3 = fixture_by_name("c3").unwrap();
    out.push(named_fact(
        "table-c3-upper-is-a-cycle-graph",
        expect(c3.upper_graph().is_cycle_graph(), "must be a 3-cycle"),
    ));
    let c4 = fixture_by_name("c4").unwrap();
    out.push(named_fact(
        "table-c4-upper-is-a-cycle-graph",
        expect(c4.upper_graph().is_cycle_graph(), "must be a 4-cycle"),
    ));

    let five = fixture_by_name("p4_induced_5").unwrap();
    let induced = five.upper_graph().induced(&[1, 2, 3, 4]);
    out.push(named_fact(
        "table-p4-induced-5-subgraph-is-a-path",
        match crate::graphs::graph_isomorphic(&induced, &path_graph(4)) {
            Ok(true) => Ok(()),
            Ok(false) => Err("induced subgraph on {b,c,d,e} is not a path".into()),
            Err(e) => Err(e.to_string()),
        },
    ));

    let iso_b = fixture_by_name("isolated_b").unwrap();
    let g = iso_b.upper_graph();
    out.push(named_fact(
        "table-isolated-b-shape-and-not-band",
        expect(
            g.isolated_vertices() == vec![1]
                && g.all_components_complete()
                && !iso_b.is_band(),
            "expected isolated b, a complete triangle, and a non-band",
        ),
    ));

    out
}

/// The optional long check: the order-5 corpus is complete and no member's
/// upper graph is the five-cycle.
pub fn order5_no_c5_check(jobs: usize) -> Result<CheckOutcome> {
    let corpus = enumerate_semigroups_with(
        5,
        IsoModulus::IsoAnti,
        &EnumerateOptions {
            jobs,
            allow_order_six: false,
        },
    )?;
    let c5 = canonical_edge_mask(&cycle_graph(5));
    for s in &corpus {
        if canonical_edge_mask(&s.upper_graph()) == c5 {
            return Ok(CheckOutcome::from_result(
                "order-5-no-five-cycle",
                Err(Failure {
                    table: emit_cayley_table(s),
                    detail: "upper graph is the five-cycle".into(),
                }),
            ));
        }
    }
    Ok(CheckOutcome::pass("order-5-no-five-cycle", corpus.len()))
}

/// Everything except the order-5 run: fixture facts, counting checks, the
/// order-(<= 4) corpus invariants, the oracle agreement, and the four-vertex
/// realizability facts.
pub fn fast_suite(seed: u64) -> Result<SuiteReport> {
    let mut checks = fixture_suite();
    checks.extend(count_checks()?);
    let corpus = standard_corpus(4)?;
    checks.extend(run_checks(&corpus, &corpus_checks()));
    checks.push(oracle_agreement(seed, 200)?);
    checks.push(p4_realizability_check()?);
    Ok(SuiteReport { checks })
}

/// The fast suite plus the order-5 batch check.
pub fn full_suite(seed: u64, jobs: usize) -> Result<SuiteReport> {
    let mut report = fast_suite(seed)?;
    report.checks.push(order5_no_c5_check(jobs)?);
    Ok(report)
}
