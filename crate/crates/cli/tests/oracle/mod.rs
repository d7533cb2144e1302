//! Brute-force arithmetic on cofinite integer sets, independent of the
//! library's bitset machinery. Slow but obviously correct.

#![allow(dead_code)]

/// `{ z : lo <= z < hi, bits[z - lo] } ∪ [hi, ∞)`, normalized so that `lo`
/// is the least member and `hi - 1` is not a member (unless `lo == hi`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Set {
    pub lo: i64,
    pub hi: i64,
    bits: Vec<bool>,
}

impl Set {
    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> Set {
        let mut lo = lo;
        let mut hi = hi.max(lo);
        while hi > lo && f(hi - 1) {
            hi -= 1;
        }
        while lo < hi && !f(lo) {
            lo += 1;
        }
        Set { lo, hi, bits: (lo..hi).map(&f).collect() }
    }

    pub fn has(&self, z: i64) -> bool {
        if z < self.lo {
            false
        } else if z >= self.hi {
            true
        } else {
            self.bits[(z - self.lo) as usize]
        }
    }

    pub fn naturals() -> Set {
        Set::from_fn(0, 0, |_| true)
    }

    /// The numerical semigroup generated by `gens`.
    pub fn generated(gens: &[i64]) -> Set {
        const N: usize = 4096;
        let mut m = vec![false; N];
        m[0] = true;
        for z in 1..N {
            m[z] = gens.iter().any(|&g| g as usize <= z && m[z - g as usize]);
        }
        let c = (0..N).rev().find(|&z| !m[z]).map_or(0, |f| f + 1);
        assert!(c + 64 < N, "conductor out of oracle range");
        Set::from_fn(0, c as i64, |z| m[z as usize])
    }

    pub fn members_below_hi(&self) -> Vec<i64> {
        (self.lo..self.hi).filter(|&z| self.has(z)).collect()
    }

    pub fn sum(&self, o: &Set) -> Set {
        let hi = (self.hi + o.lo).min(o.hi + self.lo);
        Set::from_fn(self.lo + o.lo, hi, |z| (self.lo..=z - o.lo).any(|x| self.has(x) && o.has(z - x)))
    }

    pub fn union(&self, o: &Set) -> Set {
        Set::from_fn(self.lo.min(o.lo), self.hi.max(o.hi), |z| self.has(z) || o.has(z))
    }

    /// `self − o = { z : z + o ⊆ self }`.
    pub fn quo(&self, o: &Set) -> Set {
        Set::from_fn(self.lo - o.lo, self.hi - o.lo, |z| {
            let top = o.hi.max(self.hi - z);
            (o.lo..top).all(|y| !o.has(y) || self.has(z + y))
        })
    }

    pub fn shift(&self, k: i64) -> Set {
        Set::from_fn(self.lo + k, self.hi + k, |z| self.has(z - k))
    }

    pub fn subset_of(&self, o: &Set) -> bool {
        (self.lo.min(o.lo)..self.hi.max(o.hi)).all(|z| !self.has(z) || o.has(z))
    }

    /// `#(self \ o)`, for `o ⊆ self`.
    pub fn len_over(&self, o: &Set) -> i64 {
        assert!(o.subset_of(self));
        (self.lo.min(o.lo)..self.hi.max(o.hi)).filter(|&z| self.has(z) && !o.has(z)).count() as i64
    }
}

/// The ideal generated by `gens` over `s`.
pub fn ideal(s: &Set, gens: &[i64]) -> Set {
    gens.iter().map(|&g| s.shift(g)).reduce(|a, b| a.union(&b)).expect("generators")
}

/// Every quantity in the headline identity, computed from definitions.
#[derive(Debug)]
pub struct Identity {
    pub e: i64,
    pub nu: i64,
    pub rho: i64,
    pub hilbert: Vec<i64>,
    pub lambda: Set,
    pub rl: Set,
    pub lambda_bidual: Set,
    pub power_nu: Set,
    pub type_sequence: Vec<i64>,
    pub gamma: Vec<usize>,
    pub d: i64,
    pub lhs: i64,
    pub rhs: i64,
}

pub fn type_sequence(s: &Set) -> Vec<i64> {
    let small: Vec<i64> = (0..=s.hi).filter(|&z| s.has(z)).collect();
    let tails: Vec<Set> = small.iter().map(|&x| Set::from_fn(x, x.max(s.hi), |z| z >= x && s.has(z))).collect();
    let duals: Vec<Set> = tails.iter().map(|t| s.quo(t)).collect();
    (1..small.len()).map(|i| duals[i].len_over(&duals[i - 1])).collect()
}

pub fn identity(s: &Set, gens: &[i64]) -> Identity {
    let e_ideal = ideal(s, gens);
    let a = e_ideal.lo;
    let mut powers = vec![s.clone()];
    loop {
        let k = powers.len() - 1;
        let next = powers[k].sum(&e_ideal);
        let stable = next == powers[k].shift(a) && k > 0;
        powers.push(next);
        if stable {
            break;
        }
        assert!(k < 200, "no reduction found");
    }
    let nu = (1..powers.len() - 1).find(|&k| powers[k + 1] == powers[k].shift(a)).unwrap();
    let hilbert: Vec<i64> = (0..=nu).map(|k| powers[k].len_over(&powers[k + 1])).collect();
    let rho = hilbert.iter().map(|h| a - h).sum();
    let p = &powers[nu];
    let lambda = p.quo(p);
    let rl = s.quo(&lambda);
    let lambda_bidual = s.quo(&rl);
    let ts = type_sequence(s);
    let small: Vec<i64> = (0..=s.hi).filter(|&z| s.has(z)).collect();
    let gamma: Vec<usize> = (1..small.len()).filter(|&i| rl.has(small[i - 1])).collect();
    let gamma_sum: i64 = gamma.iter().map(|&i| ts[i - 1]).sum();
    let d = Set::naturals().len_over(&lambda_bidual) - gamma_sum;
    let outside: i64 = (1..small.len()).filter(|i| !gamma.contains(i)).map(|i| ts[i - 1] - 1).sum();
    let lhs = 2 * rho;
    let rhs = a * nu as i64 + outside - d - lambda_bidual.len_over(&lambda) - rl.len_over(p);
    Identity {
        e: a,
        nu: nu as i64,
        rho,
        hilbert,
        lambda,
        rl,
        lambda_bidual,
        power_nu: p.clone(),
        type_sequence: ts,
        gamma,
        d,
        lhs,
        rhs,
    }
}

/// Per-genus counts of numerical semigroups: gap sets of size `g` inside
/// `[1, 2g)` whose complement is closed under addition.
pub fn genus_counts(max_genus: usize) -> Vec<usize> {
    (0..=max_genus)
        .map(|g| {
            if g == 0 {
                return 1;
            }
            let top = 2 * g - 1;
            (0u32..1 << top)
                .filter(|mask| mask.count_ones() as usize == g)
                .filter(|&mask| {
                    let gap = |z: usize| z >= 1 && z <= top && mask >> (z - 1) & 1 == 1;
                    (1..=top).all(|x| gap(x) || (1..=top - x).all(|y| gap(y) || !gap(x + y)))
                })
                .count()
        })
        .collect()
}

/// Distinct non-principal ideals generated by subsets of `S ∩ [e, bound]`.
pub fn ideal_count(s: &Set, bound: i64) -> usize {
    let e = (1..).find(|&z| s.has(z)).unwrap();
    let cands: Vec<i64> = (e..=bound).filter(|&z| s.has(z)).collect();
    assert!(cands.len() < 24);
    let mut seen = std::collections::HashSet::new();
    for mask in 1u32..1 << cands.len() {
        let gens: Vec<i64> = (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
        let id = ideal(s, &gens);
        let principal = id == s.shift(id.lo);
        if !principal {
            seen.insert((id.lo, id.hi, id.members_below_hi()));
        }
    }
    seen.len()
}
