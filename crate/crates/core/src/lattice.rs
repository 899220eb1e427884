//! Closed-form subgroup arithmetic for the dihedral group `D_n` of order `2n`.
//!
//! Every subgroup of `D_n` is either a rotation subgroup `<a^r>` with `r | n`
//! (written `R(r)`, order `n/r`) or a dihedral subgroup `<a^r, a^i b>` with
//! `r | n` and `0 <= i < r` (written `D(r,i)`, order `2n/r`), and each appears
//! exactly once in that listing. `R(n)` is the trivial subgroup and `D(1,0)` is
//! the whole group; neither is a vertex candidate but both are valid values.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Rotation order `n` of `D_n`; the group has order `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupParam(u64);

impl GroupParam {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(n));
        }
        Ok(GroupParam(n))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn group_order(self) -> u64 {
        2 * self.0
    }
}

impl fmt::Display for GroupParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'de> Deserialize<'de> for GroupParam {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = u64::deserialize(d)?;
        GroupParam::new(n).map_err(serde::de::Error::custom)
    }
}

/// Canonical descriptor of a subgroup of `D_n`.
///
/// The derived ordering (all rotations by `r`, then dihedrals by `(r, i)`) is
/// the canonical vertex order used everywhere downstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Subgroup {
    Rotation { r: u64 },
    Dihedral { r: u64, i: u64 },
}

impl Subgroup {
    pub const fn rotation(r: u64) -> Self {
        Subgroup::Rotation { r }
    }

    pub const fn dihedral(r: u64, i: u64) -> Self {
        Subgroup::Dihedral { r, i }
    }

    /// The index parameter `r` (rotation step).
    pub fn step(&self) -> u64 {
        match *self {
            Subgroup::Rotation { r } | Subgroup::Dihedral { r, .. } => r,
        }
    }

    pub fn is_rotation(&self) -> bool {
        matches!(self, Subgroup::Rotation { .. })
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self, Subgroup::Dihedral { .. })
    }

    pub fn validate(&self, n: GroupParam) -> Result<()> {
        let n_val = n.get();
        let ok = match *self {
            Subgroup::Rotation { r } => r >= 1 && n_val % r == 0,
            Subgroup::Dihedral { r, i } => r >= 1 && n_val % r == 0 && i < r,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSubgroup { subgroup: *self, n: n_val })
        }
    }

    pub fn is_trivial(&self, n: GroupParam) -> bool {
        *self == Subgroup::Rotation { r: n.get() }
    }

    pub fn is_whole(&self) -> bool {
        *self == Subgroup::Dihedral { r: 1, i: 0 }
    }

    /// Generator notation, e.g. `<a^2, ab>`.
    pub fn notation(&self) -> String {
        fn pow(e: u64) -> String {
            match e {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{e}"),
            }
        }
        fn refl(i: u64) -> String {
            match i {
                0 => "b".to_string(),
                1 => "ab".to_string(),
                _ => format!("a^{i}b"),
            }
        }
        match *self {
            Subgroup::Rotation { r } => format!("<{}>", pow(r)),
            Subgroup::Dihedral { r, i } => format!("<{}, {}>", pow(r), refl(i)),
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Subgroup::Rotation { r } => write!(f, "R({r})"),
            Subgroup::Dihedral { r, i } => write!(f, "D({r},{i})"),
        }
    }
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let t = s.trim();
        let (kind, rest) = t.split_at(t.find('(').ok_or_else(err)?);
        let inner = rest.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(err)?;
        let nums: Vec<u64> =
            inner.split(',').map(|p| p.trim().parse::<u64>().map_err(|_| err())).collect::<Result<_>>()?;
        match (kind.trim(), nums.as_slice()) {
            ("R", [r]) => Ok(Subgroup::Rotation { r: *r }),
            ("D", [r, i]) => Ok(Subgroup::Dihedral { r: *r, i: *i }),
            _ => Err(err()),
        }
    }
}

/// Orders attached to a pair of subgroups: `|H|`, `|K|`, `|H ∩ K|` and `|HK|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupOrderPair {
    pub h_order: u64,
    pub k_order: u64,
    pub meet_order: u64,
    pub product_size: u64,
}

impl SubgroupOrderPair {
    pub fn new(h: Subgroup, k: Subgroup, n: GroupParam) -> Result<Self> {
        let h_order = subgroup_order(h, n)?;
        let k_order = subgroup_order(k, n)?;
        let meet_order = subgroup_order(intersect(h, k, n)?, n)?;
        let product_size = h_order * k_order / meet_order;
        debug_assert_eq!(product_size * meet_order, h_order * k_order);
        Ok(SubgroupOrderPair { h_order, k_order, meet_order, product_size })
    }
}

/// All proper nontrivial subgroups of `D_n` in canonical order.
pub fn enumerate_subgroups(n: GroupParam) -> Vec<Subgroup> {
    let n_val = n.get();
    let divs = arith::divisors(n_val);
    let rotations = divs.iter().filter(|&&r| r < n_val).map(|&r| Subgroup::Rotation { r });
    let dihedrals = divs.iter().filter(|&&r| r >= 2).flat_map(|&r| (0..r).map(move |i| Subgroup::Dihedral { r, i }));
    rotations.chain(dihedrals).collect()
}

pub fn subgroup_order(h: Subgroup, n: GroupParam) -> Result<u64> {
    h.validate(n)?;
    Ok(match h {
        Subgroup::Rotation { r } => n.get() / r,
        Subgroup::Dihedral { r, .. } => n.group_order() / r,
    })
}

/// `H ∩ K`. A trivial meet is reported as `R(n)`.
pub fn intersect(h: Subgroup, k: Subgroup, n: GroupParam) -> Result<Subgroup> {
    h.validate(n)?;
    k.validate(n)?;
    Ok(match (h, k) {
        (Subgroup::Rotation { r: r1 }, Subgroup::Rotation { r: r2 })
        | (Subgroup::Rotation { r: r1 }, Subgroup::Dihedral { r: r2, .. })
        | (Subgroup::Dihedral { r: r1, .. }, Subgroup::Rotation { r: r2 }) => Subgroup::Rotation { r: r1.lcm(&r2) },
        (Subgroup::Dihedral { r: r1, i }, Subgroup::Dihedral { r: r2, i: j }) => {
            let l = r1.lcm(&r2);
            // Common reflections a^s b need s ≡ i (mod r1) and s ≡ j (mod r2).
            match arith::crt(i, r1, j, r2) {
                Some(s) => Subgroup::Dihedral { r: l, i: s % l },
                None => Subgroup::Rotation { r: l },
            }
        }
    })
}

/// `|HK|` as a set product, via `|H||K| / |H ∩ K|`.
pub fn product_size(h: Subgroup, k: Subgroup, n: GroupParam) -> Result<u64> {
    Ok(SubgroupOrderPair::new(h, k, n)?.product_size)
}

/// Closed-form co-maximality rule; `is_comaximal` checks it against the
/// definitional product size in debug builds.
fn comaximal_closed_form(h: Subgroup, k: Subgroup) -> bool {
    match (h, k) {
        (Subgroup::Rotation { .. }, Subgroup::Rotation { .. }) => false,
        (Subgroup::Rotation { r: r1 }, Subgroup::Dihedral { r: r2, .. })
        | (Subgroup::Dihedral { r: r1, .. }, Subgroup::Rotation { r: r2 }) => r1.gcd(&r2) == 1,
        (Subgroup::Dihedral { r: r1, i }, Subgroup::Dihedral { r: r2, i: j }) => {
            let g = r1.gcd(&r2);
            g == 1 || (g == 2 && (i + j) % 2 == 1)
        }
    }
}

/// `HK = D_n` for distinct subgroups `H`, `K`.
pub fn is_comaximal(h: Subgroup, k: Subgroup, n: GroupParam) -> Result<bool> {
    h.validate(n)?;
    k.validate(n)?;
    if h == k {
        return Err(Error::InvalidPair(h));
    }
    let fast = comaximal_closed_form(h, k);
    debug_assert_eq!(
        fast,
        product_size(h, k, n)? == n.group_order(),
        "closed-form co-maximality disagrees for {h}, {k} in D_{n}"
    );
    Ok(fast)
}

/// Definitional check `|HK| = 2n`, without the closed-form shortcut.
pub fn is_comaximal_by_product(h: Subgroup, k: Subgroup, n: GroupParam) -> Result<bool> {
    if h == k {
        return Err(Error::InvalidPair(h));
    }
    Ok(product_size(h, k, n)? == n.group_order())
}

/// Subgroups that have at least one co-maximal partner, in canonical order.
///
/// Every dihedral subgroup pairs with `<a>`. A rotation subgroup `R(r)` has a
/// partner iff some prime divisor of `n` does not divide `r`.
pub fn vertex_set(n: GroupParam) -> Vec<Subgroup> {
    let primes = arith::prime_divisors(n.get());
    enumerate_subgroups(n)
        .into_iter()
        .filter(|h| match *h {
            Subgroup::Rotation { r } => primes.iter().any(|p| r % p != 0),
            Subgroup::Dihedral { .. } => true,
        })
        .collect()
}

pub fn num_distinct_prime_divisors(n: u64) -> usize {
    arith::num_distinct_prime_divisors(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(n: u64) -> GroupParam {
        GroupParam::new(n).unwrap()
    }

    const R: fn(u64) -> Subgroup = Subgroup::rotation;
    const D: fn(u64, u64) -> Subgroup = Subgroup::dihedral;

    #[test]
    fn rejects_small_n() {
        assert_eq!(GroupParam::new(1), Err(Error::InvalidParameter(1)));
        assert_eq!(GroupParam::new(0), Err(Error::InvalidParameter(0)));
    }

    #[test]
    fn enumerates_d4() {
        let subs = enumerate_subgroups(gp(4));
        assert_eq!(subs, vec![R(1), R(2), D(2, 0), D(2, 1), D(4, 0), D(4, 1), D(4, 2), D(4, 3)]);
    }

    #[test]
    fn enumerates_d2_and_d6() {
        assert_eq!(enumerate_subgroups(gp(2)), vec![R(1), D(2, 0), D(2, 1)]);
        assert_eq!(enumerate_subgroups(gp(6)).len(), 14);
    }

    #[test]
    fn enumeration_count_and_uniqueness() {
        for n in 2..=120 {
            let subs = enumerate_subgroups(gp(n));
            let expected = arith::divisor_count(n) - 1 + (arith::divisor_sum(n) - 1) as usize;
            assert_eq!(subs.len(), expected, "n = {n}");
            let mut sorted = subs.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, subs, "canonical order and no duplicates for n = {n}");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(subgroup_order(R(1), gp(4)), Ok(4));
        assert_eq!(subgroup_order(D(4, 0), gp(4)), Ok(2));
        assert_eq!(subgroup_order(D(2, 1), gp(6)), Ok(6));
        assert!(matches!(subgroup_order(R(3), gp(4)), Err(Error::InvalidSubgroup { .. })));
        assert!(subgroup_order(D(2, 2), gp(4)).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(intersect(D(2, 0), D(2, 1), gp(4)), Ok(R(2)));
        assert_eq!(intersect(R(2), D(2, 0), gp(4)), Ok(R(2)));
        assert_eq!(intersect(R(2), R(3), gp(6)), Ok(R(6)));
        assert!(intersect(R(2), R(3), gp(6)).unwrap().is_trivial(gp(6)));
        // <a^2, b> ∩ <a^3, ab> in D_6: reflections a^s b with s even and s ≡ 1 (mod 3) → s = 4.
        assert_eq!(intersect(D(2, 0), D(3, 1), gp(6)), Ok(D(6, 4)));
        assert!(intersect(D(3, 0), R(4), gp(6)).is_err());
    }

    #[test]
    fn product_sizes() {
        assert_eq!(product_size(R(1), D(4, 0), gp(4)), Ok(8));
        assert_eq!(product_size(R(2), R(3), gp(6)), Ok(6));
        assert_eq!(product_size(D(4, 1), D(2, 1), gp(4)), Ok(4));
    }

    #[test]
    fn comaximality() {
        assert_eq!(is_comaximal(R(1), D(4, 0), gp(4)), Ok(true));
        assert_eq!(is_comaximal(D(2, 0), D(2, 1), gp(4)), Ok(true));
        assert_eq!(is_comaximal(D(4, 0), D(2, 0), gp(4)), Ok(false));
        assert_eq!(is_comaximal(R(1), R(1), gp(4)), Err(Error::InvalidPair(R(1))));
    }

    #[test]
    fn closed_form_matches_product_rule() {
        for n in 2..=60 {
            let n = gp(n);
            let subs = enumerate_subgroups(n);
            for (a, &h) in subs.iter().enumerate() {
                for &k in &subs[a + 1..] {
                    assert_eq!(comaximal_closed_form(h, k), is_comaximal_by_product(h, k, n).unwrap(), "{h} {k} n={n}");
                }
            }
        }
    }

    #[test]
    fn vertex_sets() {
        let v4 = vertex_set(gp(4));
        assert_eq!(v4.len(), 7);
        assert!(!v4.contains(&R(2)));
        assert_eq!(vertex_set(gp(6)), enumerate_subgroups(gp(6)));
        let v8 = vertex_set(gp(8));
        assert_eq!(v8.iter().filter(|h| h.is_rotation()).collect::<Vec<_>>(), vec![&R(1)]);
    }

    #[test]
    fn vertex_set_is_everything_iff_square_free() {
        for n in 2..=60 {
            let all = enumerate_subgroups(gp(n)) == vertex_set(gp(n));
            assert_eq!(all, arith::is_square_free(n), "n = {n}");
        }
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(D(2, 1).to_string(), "D(2,1)");
        assert_eq!("R(2)".parse::<Subgroup>(), Ok(R(2)));
        assert_eq!(" D( 4, 3 ) ".parse::<Subgroup>(), Ok(D(4, 3)));
        assert!("X(1)".parse::<Subgroup>().is_err());
        assert!("D(2)".parse::<Subgroup>().is_err());
        assert_eq!(serde_json::to_string(&R(2)).unwrap(), r#"{"type":"rotation","r":2}"#);
        assert_eq!(serde_json::to_string(&D(2, 1)).unwrap(), r#"{"type":"dihedral","r":2,"i":1}"#);
        assert_eq!(D(2, 1).notation(), "<a^2, ab>");
        assert_eq!(R(1).notation(), "<a>");
        assert_eq!(D(4, 0).notation(), "<a^4, b>");
    }
}
