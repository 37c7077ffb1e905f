//! Nilpotency in the sense of Malcev, decided on the transition system of
//! ordered element pairs, plus the positively-Engel and Neumann-Taylor
//! conditions and nilpotentizers.
//!
//! The two-sided recursion is
//!   lam_0 = x, rho_0 = y,
//!   lam_{k+1} = lam_k * z_{k+1} * rho_k,
//!   rho_{k+1} = rho_k * z_{k+1} * lam_k,
//! with the z_k drawn from S^1. A finite semigroup fails to be nilpotent
//! exactly when some pair (x, y) with x != y returns to itself under a
//! non-empty multiplier word, i.e. when the pair transition system has a
//! cycle through non-diagonal states.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::semigroup::{ElementSubset, FiniteSemigroup, Multiplier};

/// Where a pair moves under one multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairTarget {
    /// The two products coincide; equal pairs stay equal forever.
    Diagonal,
    State(usize),
}

/// The directed transition structure on ordered pairs (a, b) with a != b,
/// with one move per multiplier w in S^1:
/// (a, b) -> (a*w*b, b*w*a).
pub struct PairTransitionSystem {
    n: usize,
    states: Vec<(usize, usize)>,
    state_id: Vec<Option<usize>>,
    succ: Vec<Vec<PairTarget>>,
}

impl PairTransitionSystem {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let n = s.size();
        let mut states = Vec::with_capacity(n * n.saturating_sub(1));
        let mut state_id = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    state_id[a * n + b] = Some(states.len());
                    states.push((a, b));
                }
            }
        }
        let mults: Vec<Multiplier> = s.multipliers().collect();
        let succ = states
            .iter()
            .map(|&(a, b)| {
                mults
                    .iter()
                    .map(|&w| {
                        let l = s.sandwich(a, w, b);
                        let r = s.sandwich(b, w, a);
                        if l == r {
                            PairTarget::Diagonal
                        } else {
                            PairTarget::State(state_id[l * n + r].unwrap())
                        }
                    })
                    .collect()
            })
            .collect();
        PairTransitionSystem {
            n,
            states,
            state_id,
            succ,
        }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// One move per element of S^1, the formal identity included.
    pub fn multiplier_count(&self) -> usize {
        self.n + 1
    }

    pub fn state(&self, id: usize) -> (usize, usize) {
        self.states[id]
    }

    pub fn state_id(&self, a: usize, b: usize) -> Option<usize> {
        self.state_id[a * self.n + b]
    }

    pub fn successor(&self, state: usize, multiplier_index: usize) -> PairTarget {
        self.succ[state][multiplier_index]
    }

    /// The multiplier at a given index: 0 is the formal identity, i+1 is
    /// element i.
    pub fn index_multiplier(i: usize) -> Multiplier {
        if i == 0 {
            Multiplier::Identity
        } else {
            Multiplier::Element(i - 1)
        }
    }

    /// First cycle found by depth-first search, as the entry state and the
    /// multiplier-index word carrying it back to itself. Deterministic: roots
    /// and edges are explored in index order.
    pub fn find_cycle(&self) -> Option<(usize, Vec<usize>)> {
        let m = self.states.len();
        let n_mults = self.multiplier_count();
        let mut color = vec![0u8; m]; // 0 white, 1 gray, 2 black
        for root in 0..m {
            if color[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            let mut edge_mults: Vec<usize> = Vec::new();
            color[root] = 1;
            while let Some(&(s, next)) = stack.last() {
                if next == n_mults {
                    color[s] = 2;
                    stack.pop();
                    if !stack.is_empty() {
                        edge_mults.pop();
                    }
                    continue;
                }
                stack.last_mut().unwrap().1 += 1;
                if let PairTarget::State(t) = self.succ[s][next] {
                    match color[t] {
                        0 => {
                            color[t] = 1;
                            stack.push((t, 0));
                            edge_mults.push(next);
                        }
                        1 => {
                            let p = stack.iter().position(|&(x, _)| x == t).unwrap();
                            let mut word = edge_mults[p..].to_vec();
                            word.push(next);
                            return Some((t, word));
                        }
                        _ => {}
                    }
                }
            }
        }
        None
    }

    /// States from which no cycle is reachable: every sufficiently long word
    /// from a safe state has hit the diagonal. Least fixpoint of "all
    /// successors diagonal or safe".
    pub fn safe_states(&self) -> Vec<bool> {
        let m = self.states.len();
        let mut safe = vec![false; m];
        loop {
            let mut changed = false;
            for s in 0..m {
                if safe[s] {
                    continue;
                }
                let ok = self.succ[s].iter().all(|t| match t {
                    PairTarget::Diagonal => true,
                    PairTarget::State(x) => safe[*x],
                });
                if ok {
                    safe[s] = true;
                    changed = true;
                }
            }
            if !changed {
                return safe;
            }
        }
    }

    /// For an acyclic system, the longest first-hit time of the diagonal per
    /// state: f(s) = 1 + max over moves of (0 if diagonal else f(target)).
    /// Returns None if a cycle exists.
    pub fn settle_depths(&self) -> Option<Vec<usize>> {
        if self.find_cycle().is_some() {
            return None;
        }
        let m = self.states.len();
        let mut memo: Vec<Option<usize>> = vec![None; m];
        fn depth(pts: &PairTransitionSystem, s: usize, memo: &mut Vec<Option<usize>>) -> usize {
            if let Some(d) = memo[s] {
                return d;
            }
            let mut worst = 0;
            for t in &pts.succ[s] {
                if let PairTarget::State(x) = t {
                    worst = worst.max(depth(pts, *x, memo));
                }
            }
            memo[s] = Some(1 + worst);
            1 + worst
        }
        for s in 0..m {
            depth(self, s, &mut memo);
        }
        Some(memo.into_iter().map(Option::unwrap).collect())
    }
}

/// A cycle of the pair transition system: replaying `word` from `pair`
/// returns to `pair`, certifying non-nilpotency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonNilpotentWitness {
    pub pair: (usize, usize),
    pub word: Vec<Multiplier>,
}

/// One step of the positively-Engel simulation: the current pair and the
/// power of c to be applied next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EngelSimulationState {
    pub lam: usize,
    pub rho: usize,
    pub next_multiplier: Multiplier,
}

fn multiplier_index(n: usize, m: Multiplier) -> usize {
    debug_assert!(match m {
        Multiplier::Identity => true,
        Multiplier::Element(x) => x < n,
    });
    match m {
        Multiplier::Identity => 0,
        Multiplier::Element(x) => x + 1,
    }
}

impl FiniteSemigroup {
    /// Evaluate the two-sided recursion for the given multiplier word.
    pub fn lambda_rho(&self, x: usize, y: usize, ws: &[Multiplier]) -> (usize, usize) {
        let mut lam = x;
        let mut rho = y;
        for &w in ws {
            let l = self.sandwich(lam, w, rho);
            let r = self.sandwich(rho, w, lam);
            lam = l;
            rho = r;
        }
        (lam, rho)
    }

    /// Whether the semigroup is nilpotent in the sense of Malcev: no ordered
    /// pair of distinct elements returns to itself under a multiplier word.
    pub fn is_malcev_nilpotent(&self) -> bool {
        PairTransitionSystem::new(self).find_cycle().is_none()
    }

    /// A replayable cycle certifying non-nilpotency, if one exists.
    pub fn non_nilpotent_witness(&self) -> Option<NonNilpotentWitness> {
        let pts = PairTransitionSystem::new(self);
        pts.find_cycle().map(|(sid, word)| NonNilpotentWitness {
            pair: pts.state(sid),
            word: word
                .into_iter()
                .map(PairTransitionSystem::index_multiplier)
                .collect(),
        })
    }

    /// The nilpotency class: the least n with lam_n = rho_n for all inputs.
    /// None when not nilpotent; the one-element semigroup has class 1.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let pts = PairTransitionSystem::new(self);
        if pts.state_count() == 0 {
            return Some(1);
        }
        let depths = pts.settle_depths()?;
        Some(depths.into_iter().max().unwrap())
    }

    /// The default word-length bound for [`Self::is_nilpotent_bruteforce`]:
    /// within size^2 + 1 steps a non-settling pair must repeat.
    pub fn bruteforce_word_bound(&self) -> usize {
        self.size() * self.size() + 1
    }

    /// Word-enumeration oracle for nilpotency: true iff every pair of
    /// distinct elements settles to the diagonal under every multiplier word
    /// of length `max_len`. Exponential in `max_len`; intended for small
    /// orders and sampled cross-checks. Agrees with
    /// [`Self::is_malcev_nilpotent`] whenever `max_len >= size^2 + 1`.
    pub fn is_nilpotent_bruteforce(&self, max_len: usize) -> bool {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                if x != y && !self.words_settle(x, y, max_len) {
                    return false;
                }
            }
        }
        true
    }

    fn words_settle(&self, lam: usize, rho: usize, remaining: usize) -> bool {
        if lam == rho {
            // equal pairs stay equal under the recursion
            return true;
        }
        if remaining == 0 {
            return false;
        }
        self.multipliers().all(|w| {
            self.words_settle(
                self.sandwich(lam, w, rho),
                self.sandwich(rho, w, lam),
                remaining - 1,
            )
        })
    }

    /// Whether the subsemigroup generated by x and y is nilpotent.
    pub fn is_two_gen_nilpotent(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true; // monogenic, hence commutative
        }
        self.closure(&[x, y]).semigroup.is_malcev_nilpotent()
    }

    /// Whether (x, y) returns to itself under some non-empty word with
    /// multipliers drawn from <x, y>^1 (not all of S^1).
    pub fn lower_edge(&self, x: usize, y: usize) -> Result<bool> {
        if x == y {
            return Err(Error::DistinctnessRequired(x));
        }
        let sub = self.closure(&[x, y]);
        // generators come first in closure order
        debug_assert_eq!(sub.to_parent[0], x);
        debug_assert_eq!(sub.to_parent[1], y);
        let pts = PairTransitionSystem::new(&sub.semigroup);
        let start = pts.state_id(0, 1).unwrap();
        let mut seen = vec![false; pts.state_count()];
        let mut queue = VecDeque::new();
        let push_successors = |s: usize, seen: &mut Vec<bool>, queue: &mut VecDeque<usize>| {
            for m in 0..pts.multiplier_count() {
                if let PairTarget::State(t) = pts.successor(s, m) {
                    if t == start {
                        return true;
                    }
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
            false
        };
        if push_successors(start, &mut seen, &mut queue) {
            return Ok(true);
        }
        while let Some(s) = queue.pop_front() {
            if push_successors(s, &mut seen, &mut queue) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether for some n >= 2, lam_n(a,b,1,1,c,c^2,...,c^{n-2}) =
    /// rho_n(a,b,1,1,c,...) for all a, b in S and c in S^1.
    pub fn is_positively_engel(&self) -> bool {
        self.positively_engel_violation().is_none()
    }

    /// A triple (a, b, c) whose Engel run revisits a state without reaching
    /// the diagonal, if any. Since the diagonal is absorbing, no violation
    /// means the first-hit times have a finite maximum, which serves as n.
    pub fn positively_engel_violation(&self) -> Option<(usize, usize, Multiplier)> {
        let n = self.size();
        let cap = n * n * (n + 1) + 1;
        let mut stamp = vec![0u32; n * n * (n + 1)];
        let mut round: u32 = 0;
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                for c in self.multipliers() {
                    round += 1;
                    // z_1 = 1; thereafter z_{k} = c^{k-2}, starting at c^0 = 1.
                    let mut state = EngelSimulationState {
                        lam: self.product(a, b),
                        rho: self.product(b, a),
                        next_multiplier: Multiplier::Identity,
                    };
                    let mut steps = 1usize;
                    while state.lam != state.rho {
                        let key = (state.lam * n + state.rho) * (n + 1)
                            + multiplier_index(n, state.next_multiplier);
                        if stamp[key] == round {
                            return Some((a, b, c));
                        }
                        stamp[key] = round;
                        let w = state.next_multiplier;
                        let l = self.sandwich(state.lam, w, state.rho);
                        let r = self.sandwich(state.rho, w, state.lam);
                        state.lam = l;
                        state.rho = r;
                        state.next_multiplier = match (state.next_multiplier, c) {
                            (p, Multiplier::Identity) => p,
                            (Multiplier::Identity, c) => c,
                            (Multiplier::Element(p), Multiplier::Element(e)) => {
                                Multiplier::Element(self.product(p, e))
                            }
                        };
                        steps += 1;
                        assert!(
                            steps <= cap + 1,
                            "Engel simulation exceeded its pigeonhole bound"
                        );
                    }
                }
            }
        }
        None
    }

    /// Whether for some n >= 2, lam_n(a,b,1,c_2,...,c_n) =
    /// rho_n(a,b,1,c_2,...,c_n) for all a, b in S and c_i in S^1: the first
    /// multiplier is forced to the identity, the rest are arbitrary.
    pub fn is_neumann_taylor(&self) -> bool {
        self.neumann_taylor_violation().is_none()
    }

    /// A pair (a, b) for which (a*b, b*a) can still reach a cycle of the
    /// pair transition system, if any.
    pub fn neumann_taylor_violation(&self) -> Option<(usize, usize)> {
        let pts = PairTransitionSystem::new(self);
        let safe = pts.safe_states();
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                let l = self.product(a, b);
                let r = self.product(b, a);
                if l == r {
                    continue;
                }
                if !safe[pts.state_id(l, r).unwrap()] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// All y such that <x, y> is nilpotent (x itself included).
    pub fn nilpotentizer(&self, x: usize) -> ElementSubset {
        let members = (0..self.size())
            .map(|y| self.is_two_gen_nilpotent(x, y))
            .collect();
        ElementSubset::from_members(self, members)
    }

    /// The intersection of all nilpotentizers.
    pub fn nil_of_semigroup(&self) -> ElementSubset {
        let mut members = vec![true; self.size()];
        for x in 0..self.size() {
            let nx = self.nilpotentizer(x);
            for (i, m) in members.iter_mut().enumerate() {
                *m = *m && nx.contains(i);
            }
        }
        ElementSubset::from_members(self, members)
    }

    /// Whether every nilpotentizer is a subsemigroup.
    pub fn is_n_semigroup(&self) -> bool {
        (0..self.size()).all(|x| self.nilpotentizer(x).is_closed())
    }
}
