//! Numerical semigroups: cofinite additive submonoids of the naturals.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A numerical semigroup `S ⊆ ℕ`, stored through its elements up to the
/// conductor. Clones share the underlying data.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

struct Inner {
    conductor: i64,
    genus: i64,
    /// Members of `S` in `[0, c]`.
    small_elements: Vec<i64>,
    min_generators: Vec<i64>,
    /// Membership of `[0, c)`.
    member: Vec<bool>,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    /// The semigroup of all naturals.
    pub fn naturals() -> Self {
        Self::from_membership(Vec::new())
    }

    /// Smallest numerical semigroup containing `gens`.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotCofinite(d));
        }
        let m = *gens.iter().min().unwrap() as usize;
        // Scan upward until m consecutive members appear; past that point
        // everything is reachable by adding the smallest generator.
        let mut member = vec![true];
        let mut run = 1usize;
        while run < m {
            let z = member.len() as i64;
            let is = gens.iter().any(|&g| g <= z && member[(z - g) as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        let keep = member.len() - run;
        member.truncate(keep);
        Ok(Self::from_membership(member))
    }

    /// Semigroup given as the explicit members below `arrow_from` together
    /// with every integer `>= arrow_from`.
    pub fn from_explicit(members: &[i64], arrow_from: i64) -> Result<Self> {
        if let Some(&z) = members.iter().find(|&&z| z < 0) {
            return Err(Error::NegativeMember(z));
        }
        let arrow = arrow_from.max(0);
        let mut member = vec![false; arrow as usize];
        for &z in members {
            if z < arrow {
                member[z as usize] = true;
            }
        }
        if arrow > 0 && !member[0] {
            return Err(Error::ZeroMissing);
        }
        let small: Vec<i64> = (0..arrow).filter(|&z| member[z as usize]).collect();
        for (i, &a) in small.iter().enumerate().skip(1) {
            for &b in &small[i..] {
                let s = a + b;
                if s >= arrow {
                    break;
                }
                if !member[s as usize] {
                    return Err(Error::NotClosed { a, b });
                }
            }
        }
        while member.last() == Some(&true) {
            member.pop();
        }
        Ok(Self::from_membership(member))
    }

    /// `member` is the membership of `[0, len)`, with `len - 1` a gap (or
    /// `len == 0`). Closure is assumed.
    fn from_membership(member: Vec<bool>) -> Self {
        let conductor = member.len() as i64;
        let genus = member.iter().filter(|&&b| !b).count() as i64;
        let mut small_elements: Vec<i64> = (0..conductor).filter(|&z| member[z as usize]).collect();
        small_elements.push(conductor);
        let contains = |z: i64| z >= conductor || (z >= 0 && member[z as usize]);
        let e = if conductor == 0 { 1 } else { small_elements[1] };
        let min_generators = (1..(conductor + e).max(2))
            .filter(|&s| contains(s))
            .filter(|&s| !(e..=s - e).any(|t| contains(t) && contains(s - t)))
            .collect();
        NumericalSemigroup(Arc::new(Inner {
            conductor,
            genus,
            small_elements,
            min_generators,
            member,
        }))
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.0.conductor || (z >= 0 && self.0.member[z as usize])
    }

    pub fn conductor(&self) -> i64 {
        self.0.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.0.conductor - 1
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.0.genus
    }

    /// `s_0 = 0 < s_1 < ... < s_n = c`.
    pub fn small_elements(&self) -> &[i64] {
        &self.0.small_elements
    }

    /// `n = c - δ`, the number of members below the conductor.
    pub fn n(&self) -> usize {
        self.0.small_elements.len() - 1
    }

    pub fn min_generators(&self) -> &[i64] {
        &self.0.min_generators
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        self.0.min_generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.0.min_generators.len()
    }

    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.0.conductor).filter(|&z| !self.contains(z))
    }

    pub fn is_naturals(&self) -> bool {
        self.0.conductor == 0
    }

    /// Removes a minimal generator larger than the Frobenius number, giving
    /// a child in the genus tree.
    pub fn remove_generator(&self, g: i64) -> Option<Self> {
        if g <= self.frobenius() || !self.0.min_generators.contains(&g) {
            return None;
        }
        let member: Vec<bool> = (0..=g).map(|z| z != g && self.contains(z)).collect();
        Some(Self::from_membership(member))
    }

    /// Explicit notation such as `{0,7,8,12-16,18->}`.
    pub fn explicit_notation(&self) -> String {
        let c = self.0.conductor;
        let below: Vec<i64> = self.0.small_elements[..self.n()].to_vec();
        let mut parts = render_runs(&below);
        parts.push(format!("{c}->"));
        format!("{{{}}}", parts.join(","))
    }

    /// Generator notation such as `<7,8,12,13,18>`.
    pub fn generator_notation(&self) -> String {
        let gens: Vec<String> = self.0.min_generators.iter().map(|g| g.to_string()).collect();
        format!("<{}>", gens.join(","))
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self == other
    }
}

/// Renders sorted integers, compressing runs of three or more as `a-b`.
pub(crate) fn render_runs(values: &[i64]) -> Vec<String> {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j + 1 < values.len() && values[j + 1] == values[j] + 1 {
            j += 1;
        }
        if j - i >= 2 {
            parts.push(format!("{}-{}", values[i], values[j]));
        } else {
            parts.extend(values[i..=j].iter().map(|v| v.to_string()));
        }
        i = j + 1;
    }
    parts
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.conductor == other.0.conductor && self.0.member == other.0.member)
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.conductor.hash(state);
        self.0.member.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.explicit_notation())
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{}", self.explicit_notation())
    }
}
