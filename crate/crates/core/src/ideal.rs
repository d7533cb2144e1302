//! Relative ideals of a numerical semigroup: sets `E ⊆ ℤ` that are bounded
//! below, contain every large integer, and satisfy `E + S ⊆ E`. These are the
//! value sets of monomial fractional ideals of `k[[t^S]]`; every length of
//! such modules is the size of a finite set difference.

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::{render_runs, NumericalSemigroup};

/// A relative ideal in canonical form: least member `min`, frontier `f`
/// (every integer `>= f` is a member and `f - 1` is not, unless `f == min`)
/// and the membership of `[min, f)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValueIdeal {
    carrier: NumericalSemigroup,
    min: i64,
    frontier: i64,
    window: Bits,
}

impl ValueIdeal {
    /// Canonicalizes a set known on `[lo, hi)` and containing all of
    /// `[hi, ∞)`.
    fn from_window(carrier: &NumericalSemigroup, lo: i64, hi: i64, bits: Bits) -> Self {
        debug_assert_eq!(bits.len() as i64, hi - lo);
        let Some(first) = bits.first_one() else {
            return ValueIdeal {
                carrier: carrier.clone(),
                min: hi,
                frontier: hi,
                window: Bits::zeros(0),
            };
        };
        let tail_start = bits.last_zero().map_or(0, |z| z + 1).max(first);
        let window = bits.slice(first, tail_start - first);
        ValueIdeal {
            carrier: carrier.clone(),
            min: lo + first as i64,
            frontier: lo + tail_start as i64,
            window,
        }
    }

    /// `z + ℕ`.
    pub fn cofinite_from(carrier: &NumericalSemigroup, z: i64) -> Self {
        ValueIdeal {
            carrier: carrier.clone(),
            min: z,
            frontier: z,
            window: Bits::zeros(0),
        }
    }

    /// The semigroup itself as an ideal over itself.
    pub fn whole(carrier: &NumericalSemigroup) -> Self {
        Self::principal(carrier, 0)
    }

    /// `g + S`.
    pub fn principal(carrier: &NumericalSemigroup, g: i64) -> Self {
        let c = carrier.conductor();
        let mut bits = Bits::zeros(c as usize);
        for &s in &carrier.small_elements()[..carrier.n()] {
            bits.set(s as usize);
        }
        Self::from_window(carrier, g, g + c, bits)
    }

    /// `⋃ (g + S)` over the given values.
    pub fn from_generators(carrier: &NumericalSemigroup, vals: &[i64]) -> Result<Self> {
        let (&first, rest) = vals.split_first().ok_or(Error::EmptyGenerators)?;
        let mut acc = Self::principal(carrier, first);
        for &g in rest {
            acc = acc.union(&Self::principal(carrier, g))?;
        }
        Ok(acc)
    }

    /// `S \ {0}`.
    pub fn maximal(carrier: &NumericalSemigroup) -> Self {
        let gens = carrier.min_generators().to_vec();
        Self::from_generators(carrier, &gens).expect("a semigroup has at least one generator")
    }

    /// Builds the set `{ z : pred(z) }` where `pred` is known to hold for all
    /// `z >= hi` and to fail for all `z < lo`. The caller guarantees
    /// closure under the carrier.
    pub(crate) fn from_predicate(
        carrier: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let mut bits = Bits::zeros((hi - lo) as usize);
        for z in lo..hi {
            if pred(z) {
                bits.set((z - lo) as usize);
            }
        }
        Self::from_window(carrier, lo, hi, bits)
    }

    pub fn carrier(&self) -> &NumericalSemigroup {
        &self.carrier
    }

    /// Least member.
    pub fn min(&self) -> i64 {
        self.min
    }

    /// Every integer `>=` this is a member.
    pub fn frontier(&self) -> i64 {
        self.frontier
    }

    pub fn contains(&self, z: i64) -> bool {
        if z >= self.frontier {
            true
        } else if z < self.min {
            false
        } else {
            self.window.get((z - self.min) as usize)
        }
    }

    /// Members in `[min, frontier)`.
    pub fn members_below_frontier(&self) -> Vec<i64> {
        self.window.iter_ones().map(|i| self.min + i as i64).collect()
    }

    /// 64 membership bits starting at absolute position `p`.
    #[inline]
    fn word_at(&self, p: i64) -> u64 {
        self.window.word_at(p - self.min, false, true)
    }

    fn check_carrier(&self, other: &Self) -> Result<()> {
        if self.carrier.same_as(&other.carrier) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    /// `E + F = { e + f }`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_carrier(other)?;
        let lo = self.min + other.min;
        let hi = (self.min + other.frontier).min(other.min + self.frontier);
        let mut bits = Bits::zeros((hi - lo) as usize);
        for y in other.members_below_frontier() {
            bits.or_words(|p| self.word_at(lo + p - y));
        }
        // Tail of `other` starts at other.frontier; it contributes only from
        // self.min + other.frontier >= hi.
        if other.min == other.frontier {
            bits.or_words(|p| self.word_at(lo + p - other.min));
        }
        Ok(Self::from_window(&self.carrier, lo, hi, bits))
    }

    /// `E − F = { z : z + F ⊆ E }`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_carrier(other)?;
        let lo = self.min - other.min;
        let hi = self.frontier - other.min;
        let mut bits = Bits::ones((hi - lo) as usize);
        // z + [other.frontier, ∞) ⊆ E  <=>  z >= self.frontier - other.frontier
        let tail_ok = self.frontier - other.frontier;
        bits.and_words(|p| {
            let start = lo + p;
            if start >= tail_ok {
                !0
            } else if start + 64 <= tail_ok {
                0
            } else {
                !((1u64 << (tail_ok - start)) - 1)
            }
        });
        for y in other.members_below_frontier() {
            bits.and_words(|p| self.word_at(lo + p + y));
        }
        Ok(Self::from_window(&self.carrier, lo, hi, bits))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_carrier(other)?;
        let lo = self.min.max(other.min);
        let hi = self.frontier.max(other.frontier).max(lo);
        let mut bits = Bits::zeros((hi - lo) as usize);
        bits.fill_words(|p| self.word_at(lo + p) & other.word_at(lo + p));
        Ok(Self::from_window(&self.carrier, lo, hi, bits))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_carrier(other)?;
        let lo = self.min.min(other.min);
        let hi = self.frontier.min(other.frontier).max(lo);
        let mut bits = Bits::zeros((hi - lo) as usize);
        bits.fill_words(|p| self.word_at(lo + p) | other.word_at(lo + p));
        Ok(Self::from_window(&self.carrier, lo, hi, bits))
    }

    /// `z + E`.
    pub fn shift(&self, z: i64) -> Self {
        ValueIdeal {
            carrier: self.carrier.clone(),
            min: self.min + z,
            frontier: self.frontier + z,
            window: self.window.clone(),
        }
    }

    /// Least element of `other \ self`, if any.
    fn first_outside(&self, other: &Self) -> Option<i64> {
        let lo = other.min;
        let hi = self.frontier.max(other.frontier).max(lo);
        let mut z = lo;
        while z < hi {
            let w = other.word_at(z) & !self.word_at(z);
            let valid = if hi - z >= 64 { !0 } else { (1u64 << (hi - z)) - 1 };
            let w = w & valid;
            if w != 0 {
                return Some(z + w.trailing_zeros() as i64);
            }
            z += 64;
        }
        None
    }

    /// `#(self \ other)` over the finite region where they can differ.
    fn difference_count(&self, other: &Self) -> i64 {
        let lo = self.min;
        let hi = self.frontier.max(other.frontier).max(lo);
        let mut n = 0i64;
        let mut z = lo;
        while z < hi {
            let valid = if hi - z >= 64 { !0 } else { (1u64 << (hi - z)) - 1 };
            n += (self.word_at(z) & !other.word_at(z) & valid).count_ones() as i64;
            z += 64;
        }
        n
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_carrier(other)?;
        Ok(self.first_outside(other).is_none())
    }

    /// `#(self \ other)` for `other ⊆ self`: the length of the quotient
    /// module.
    pub fn length_over(&self, other: &Self) -> Result<i64> {
        self.check_carrier(other)?;
        if let Some(witness) = self.first_outside(other) {
            return Err(Error::NotNested { witness });
        }
        Ok(self.difference_count(other))
    }

    /// Whether `self = g + S` for some `g`.
    pub fn is_principal(&self) -> bool {
        *self == Self::principal(&self.carrier, self.min)
    }

    /// Elements not in `self + M`; they generate `self` minimally.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let m = Self::maximal(&self.carrier);
        let em = self.sum(&m).expect("same carrier");
        (self.min..self.frontier.max(self.min) + self.carrier.multiplicity().max(1))
            .filter(|&z| self.contains(z) && !em.contains(z))
            .collect()
    }

    /// `ideal(g1,g2,...)` by minimal generators.
    pub fn generator_notation(&self) -> String {
        let gens: Vec<String> = self.minimal_generators().iter().map(|g| g.to_string()).collect();
        format!("ideal({})", gens.join(","))
    }

    /// Explicit notation such as `{10,12,20,22,24,30->}`.
    pub fn explicit_notation(&self) -> String {
        let mut parts = render_runs(&self.members_below_frontier());
        parts.push(format!("{}->", self.frontier));
        format!("{{{}}}", parts.join(","))
    }

    /// Checks `E + S ⊆ E` on the window where it can fail.
    pub fn is_closed_under_carrier(&self) -> bool {
        self.members_below_frontier().iter().all(|&x| {
            self.carrier.small_elements()[..self.carrier.n()]
                .iter()
                .all(|&s| self.contains(x + s))
        })
    }

    /// Whether the set is closed under its own addition and contains 0.
    pub fn is_semigroup(&self) -> bool {
        self.contains(0)
            && self.min == 0
            && self
                .sum(self)
                .map(|d| d == *self)
                .unwrap_or(false)
    }

    /// Reinterprets a semigroup-shaped ideal (`min == 0`, closed under
    /// addition) as a numerical semigroup in its own right.
    pub fn as_semigroup(&self) -> Option<NumericalSemigroup> {
        if !self.is_semigroup() {
            return None;
        }
        NumericalSemigroup::from_explicit(&self.members_below_frontier(), self.frontier).ok()
    }
}

/// `l(E/F) = #(E \ F)` for `F ⊆ E`.
pub fn length_between(e: &ValueIdeal, f: &ValueIdeal) -> Result<i64> {
    e.length_over(f)
}

impl fmt::Display for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.explicit_notation())
    }
}

impl fmt::Debug for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ValueIdeal{}", self.explicit_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn set(carrier: &NumericalSemigroup, below: &[i64], from: i64) -> ValueIdeal {
        ValueIdeal::from_predicate(carrier, below.first().copied().unwrap_or(from).min(from), from, |z| {
            below.contains(&z)
        })
    }

    #[test]
    fn generated_ideal_of_ten_twelve() {
        let r = NumericalSemigroup::from_explicit(&[0, 10, 12], 20).unwrap();
        let e = ValueIdeal::from_generators(&r, &[10, 12]).unwrap();
        assert_eq!(e, set(&r, &[10, 12, 20, 22, 24], 30));
        assert_eq!(e.explicit_notation(), "{10,12,20,22,24,30->}");
        assert_eq!(e.minimal_generators(), vec![10, 12]);
        assert!(e.is_closed_under_carrier());
    }

    #[test]
    fn zero_generates_the_ring() {
        let r = s(&[3, 5]);
        assert_eq!(ValueIdeal::from_generators(&r, &[0]).unwrap(), ValueIdeal::whole(&r));
        assert_eq!(ValueIdeal::from_generators(&r, &[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn maximal_ideals() {
        let r = s(&[3, 4, 5]);
        assert_eq!(ValueIdeal::maximal(&r), ValueIdeal::cofinite_from(&r, 3));
        let n = NumericalSemigroup::naturals();
        assert_eq!(ValueIdeal::maximal(&n), ValueIdeal::cofinite_from(&n, 1));
        let r = NumericalSemigroup::from_explicit(&[0, 5, 10, 11, 12, 15, 16, 17], 19).unwrap();
        let m = ValueIdeal::maximal(&r);
        assert_eq!(m.explicit_notation(), "{5,10-12,15-17,19->}");
        assert_eq!(r.min_generators(), &[5, 11, 12, 19]);
    }

    #[test]
    fn sums() {
        let r = s(&[3, 4]);
        let m = ValueIdeal::maximal(&r);
        assert_eq!(m.sum(&m).unwrap(), ValueIdeal::cofinite_from(&r, 6));
        let r = NumericalSemigroup::from_explicit(&[0, 10, 12], 20).unwrap();
        let m = ValueIdeal::maximal(&r);
        assert_eq!(m.sum(&m).unwrap().explicit_notation(), "{20,22,24,30->}");
        let e = ValueIdeal::from_generators(&r, &[10, 12]).unwrap();
        assert_eq!(e.sum(&ValueIdeal::whole(&r)).unwrap(), e);
    }

    #[test]
    fn quotients() {
        let r = s(&[3, 4, 5]);
        let m = ValueIdeal::maximal(&r);
        let q = ValueIdeal::whole(&r).quotient(&m).unwrap();
        assert_eq!(q, ValueIdeal::cofinite_from(&r, 0));
        assert_eq!(q.length_over(&ValueIdeal::whole(&r)).unwrap(), 2);
        let p = ValueIdeal::principal(&r, 7);
        assert_eq!(p.quotient(&p).unwrap(), ValueIdeal::whole(&r));
    }

    #[test]
    fn shift_intersect_contains() {
        let r = NumericalSemigroup::from_explicit(&[0, 10, 12], 20).unwrap();
        let nat = ValueIdeal::cofinite_from(&r, 0);
        assert_eq!(nat.shift(20), ValueIdeal::cofinite_from(&r, 20));
        let m = ValueIdeal::maximal(&r);
        assert_eq!(m.intersect(&m).unwrap(), m);
        assert!(ValueIdeal::whole(&r).contains_ideal(&m).unwrap());
        assert!(!m.contains_ideal(&ValueIdeal::whole(&r)).unwrap());
    }

    #[test]
    fn lengths() {
        let r = NumericalSemigroup::from_explicit(&[0, 10, 12], 20).unwrap();
        let nat = ValueIdeal::cofinite_from(&r, 0);
        assert_eq!(length_between(&nat, &ValueIdeal::whole(&r)).unwrap(), 17);
        let m = ValueIdeal::maximal(&r);
        assert_eq!(length_between(&m, &m).unwrap(), 0);
        assert_eq!(
            length_between(&m, &ValueIdeal::whole(&r)),
            Err(Error::NotNested { witness: 0 })
        );
    }

    #[test]
    fn carrier_mismatch() {
        let a = ValueIdeal::maximal(&s(&[2, 3]));
        let b = ValueIdeal::maximal(&s(&[2, 5]));
        assert_eq!(a.sum(&b), Err(Error::CarrierMismatch));
        assert_eq!(a.quotient(&b), Err(Error::CarrierMismatch));
    }

    #[test]
    fn empty_window_sets() {
        let r = s(&[2, 3]);
        let a = ValueIdeal::cofinite_from(&r, 4);
        let b = ValueIdeal::cofinite_from(&r, -1);
        assert_eq!(a.sum(&b).unwrap(), ValueIdeal::cofinite_from(&r, 3));
        assert_eq!(a.quotient(&b).unwrap(), ValueIdeal::cofinite_from(&r, 5));
        assert_eq!(b.quotient(&a).unwrap(), ValueIdeal::cofinite_from(&r, -5));
    }
}
