//! Test universes: all numerical semigroups up to a genus, and the
//! non-principal monomial ideals of a semigroup below a value bound.

use std::collections::HashSet;

use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;

/// Walks the genus tree breadth first, yielding every numerical semigroup of
/// genus `<= max_genus` exactly once, in order of genus.
pub struct Semigroups {
    level: Vec<NumericalSemigroup>,
    next: usize,
    genus: usize,
    max_genus: usize,
}

impl Iterator for Semigroups {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        loop {
            if let Some(s) = self.level.get(self.next) {
                self.next += 1;
                return Some(s.clone());
            }
            if self.genus >= self.max_genus || self.level.is_empty() {
                return None;
            }
            self.level = self.level.iter().flat_map(children).collect();
            self.next = 0;
            self.genus += 1;
        }
    }
}

/// Children of `s` in the genus tree.
pub fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let f = s.frobenius();
    s.min_generators()
        .iter()
        .filter(|&&g| g > f)
        .filter_map(|&g| s.remove_generator(g))
        .collect()
}

pub fn enumerate_semigroups(max_genus: usize) -> Semigroups {
    Semigroups { level: vec![NumericalSemigroup::naturals()], next: 0, genus: 0, max_genus }
}

/// Semigroups grouped by genus: entry `g` holds those of genus `g`.
pub fn semigroups_by_genus(max_genus: usize) -> Vec<Vec<NumericalSemigroup>> {
    let mut out = vec![Vec::new(); max_genus + 1];
    for s in enumerate_semigroups(max_genus) {
        out[s.genus() as usize].push(s);
    }
    out
}

/// The default generator bound `c + 2e`.
pub fn default_ideal_bound(s: &NumericalSemigroup) -> i64 {
    s.conductor() + 2 * s.multiplicity()
}

/// Every non-principal ideal `E ⊆ M` whose minimal generators lie in
/// `[e, value_bound]`, in lexicographic order of generator lists.
pub fn enumerate_ideals(s: &NumericalSemigroup, value_bound: i64) -> Vec<ValueIdeal> {
    if s.is_naturals() {
        return Vec::new();
    }
    let candidates: Vec<i64> = (s.multiplicity()..=value_bound).filter(|&z| s.contains(z)).collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut chosen = Vec::new();
    antichains(s, &candidates, 0, &mut chosen, &mut |gens| {
        if gens.len() < 2 {
            return;
        }
        let e = ValueIdeal::from_generators(s, gens).expect("non-empty");
        if seen.insert(e.clone()) {
            out.push(e);
        }
    });
    out
}

fn antichains(
    s: &NumericalSemigroup,
    candidates: &[i64],
    from: usize,
    chosen: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]),
) {
    visit(chosen);
    for k in from..candidates.len() {
        let z = candidates[k];
        if chosen.iter().all(|&x| !s.contains(z - x)) {
            chosen.push(z);
            antichains(s, candidates, k + 1, chosen, visit);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_semigroup;

    #[test]
    fn small_genus_counts() {
        let counts: Vec<usize> = semigroups_by_genus(7).iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39]);
        assert_eq!(enumerate_semigroups(0).collect::<Vec<_>>(), [NumericalSemigroup::naturals()]);
    }

    #[test]
    fn ideals_of_two_three() {
        let s = parse_semigroup("<2,3>").unwrap();
        let ideals = enumerate_ideals(&s, 5);
        let gens: Vec<Vec<i64>> = ideals.iter().map(|e| e.minimal_generators()).collect();
        assert_eq!(gens, [vec![2, 3], vec![3, 4], vec![4, 5]]);
        assert!(enumerate_ideals(&NumericalSemigroup::naturals(), 10).is_empty());
    }

    #[test]
    fn contains_the_three_generated_ideal() {
        let s = parse_semigroup("<5,21,32,48>").unwrap();
        let target = ValueIdeal::from_generators(&s, &[31, 32, 40]).unwrap();
        assert!(enumerate_ideals(&s, 41).contains(&target));
    }
}
