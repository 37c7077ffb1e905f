//! Principal two-sided ideals, J-classes, simplicity, regularity, inverses.

use crate::semigroup::{ElementSubset, FiniteSemigroup};

/// The partition of a semigroup into J-classes: a and b share a class iff
/// S^1 a S^1 = S^1 b S^1, ordered by strict inclusion of principal ideals.
#[derive(Clone, Debug)]
pub struct GreensJDecomposition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    below: Vec<Vec<bool>>,
}

impl GreensJDecomposition {
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// The classes as sorted element lists, in order of first representative.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Strict order: class `i` is below class `j` iff the principal ideal of
    /// i's elements is properly contained in that of j's.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }
}

impl FiniteSemigroup {
    /// The principal two-sided ideal S^1 a S^1 as an element set.
    pub fn principal_ideal(&self, a: usize) -> ElementSubset {
        let mut members = vec![false; self.size()];
        for u in self.multipliers() {
            let ua = match u {
                crate::Multiplier::Identity => a,
                crate::Multiplier::Element(x) => self.product(x, a),
            };
            for v in self.multipliers() {
                let uav = match v {
                    crate::Multiplier::Identity => ua,
                    crate::Multiplier::Element(y) => self.product(ua, y),
                };
                members[uav] = true;
            }
        }
        ElementSubset::from_members(self, members)
    }

    /// J-classes computed by comparing principal ideals as element sets.
    pub fn j_classes(&self) -> GreensJDecomposition {
        let n = self.size();
        let ideals: Vec<Vec<usize>> = (0..n).map(|a| self.principal_ideal(a).indices()).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            match reps.iter().position(|&r| ideals[r] == ideals[x]) {
                Some(c) => class_of[x] = c,
                None => {
                    class_of[x] = reps.len();
                    reps.push(x);
                }
            }
        }
        let mut classes = vec![Vec::new(); reps.len()];
        for x in 0..n {
            classes[class_of[x]].push(x);
        }
        let below = reps
            .iter()
            .map(|&i| {
                reps.iter()
                    .map(|&j| {
                        ideals[i] != ideals[j] && ideals[i].iter().all(|e| ideals[j].contains(e))
                    })
                    .collect()
            })
            .collect();
        GreensJDecomposition {
            class_of,
            classes,
            below,
        }
    }

    /// Whether S^1 a S^1 = S for every a.
    pub fn is_simple(&self) -> bool {
        (0..self.size()).all(|a| self.principal_ideal(a).len() == self.size())
    }

    /// For finite semigroups, completely simple coincides with simple: every
    /// finite semigroup has a completely simple kernel, and a simple one
    /// equals its kernel.
    pub fn is_completely_simple(&self) -> bool {
        self.is_simple()
    }

    /// Whether a primitive idempotent exists: an idempotent e such that the
    /// only idempotent f with ef = fe = f is e itself.
    pub fn has_primitive_idempotent(&self) -> bool {
        let idem = self.idempotents().indices();
        idem.iter().any(|&e| {
            idem.iter().all(|&f| {
                let f_below_e = self.product(e, f) == f && self.product(f, e) == f;
                !f_below_e || f == e
            })
        })
    }

    /// Whether the semigroup has a zero and every product equals it.
    pub fn is_null(&self) -> bool {
        match self.zero() {
            Some(z) => (0..self.size())
                .all(|a| (0..self.size()).all(|b| self.product(a, b) == z)),
            None => false,
        }
    }

    /// The inverses of a: all b with aba = a and bab = b.
    pub fn inverses_of(&self, a: usize) -> ElementSubset {
        let members = (0..self.size())
            .map(|b| {
                self.product(self.product(a, b), a) == a
                    && self.product(self.product(b, a), b) == b
            })
            .collect();
        ElementSubset::from_members(self, members)
    }

    /// Whether every element has at least one inverse.
    pub fn is_regular(&self) -> bool {
        (0..self.size()).all(|a| !self.inverses_of(a).is_empty())
    }

    /// Whether every element has exactly one inverse.
    pub fn is_inverse_semigroup(&self) -> bool {
        (0..self.size()).all(|a| self.inverses_of(a).len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{f7, rectangular_band};
    use crate::FiniteSemigroup;

    fn left_zero(n: usize) -> FiniteSemigroup {
        let table = (0..n).map(|i| vec![i; n]).collect();
        FiniteSemigroup::new(table, None).unwrap()
    }

    #[test]
    fn rectangular_band_is_one_j_class_and_simple() {
        let s = rectangular_band(2, 3);
        let j = s.j_classes();
        assert_eq!(j.class_count(), 1);
        assert!(s.is_simple());
        assert!(s.is_completely_simple());
    }

    #[test]
    fn f7_j_classes_are_zero_rees_and_group() {
        // Elements: e11 e12 e21 e22 theta 1 u. Principal ideals by hand:
        // {theta} for theta, the five Rees elements for each e, all of F7
        // for 1 and u.
        let s = f7();
        let j = s.j_classes();
        assert_eq!(j.class_count(), 3);
        let theta = s.element_by_label("0").unwrap();
        let e11 = s.element_by_label("e11").unwrap();
        let one = s.element_by_label("1").unwrap();
        let u = s.element_by_label("u").unwrap();
        assert_eq!(j.classes()[j.class_of(theta)], vec![theta]);
        assert_eq!(j.classes()[j.class_of(e11)].len(), 4);
        assert_eq!(j.class_of(one), j.class_of(u));
        assert!(j.is_below(j.class_of(theta), j.class_of(e11)));
        assert!(j.is_below(j.class_of(e11), j.class_of(u)));
        assert!(!j.is_below(j.class_of(u), j.class_of(theta)));
        assert!(!s.is_simple());
    }

    #[test]
    fn two_element_null_semigroup_is_null() {
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 0]], None).unwrap();
        assert!(s.is_null());
        assert!(!left_zero(2).is_null());
    }

    #[test]
    fn band_elements_are_self_inverse() {
        let s = rectangular_band(2, 2);
        for a in 0..s.size() {
            assert!(s.inverses_of(a).contains(a));
        }
    }

    #[test]
    fn left_zero_two_has_two_inverses_per_element() {
        let s = left_zero(2);
        assert_eq!(s.inverses_of(0).len(), 2);
        assert_eq!(s.inverses_of(1).len(), 2);
        assert!(s.is_regular());
        assert!(!s.is_inverse_semigroup());
    }

    #[test]
    fn j_membership_is_an_equivalence_and_order_is_strict() {
        let s = f7();
        let j = s.j_classes();
        let mut count = 0;
        for c in j.classes() {
            count += c.len();
            for &x in c {
                assert_eq!(j.class_of(x), j.class_of(c[0]));
            }
        }
        assert_eq!(count, s.size());
        for i in 0..j.class_count() {
            assert!(!j.is_below(i, i));
            for k in 0..j.class_count() {
                assert!(!(j.is_below(i, k) && j.is_below(k, i)));
            }
        }
    }
}
