//! Sylow structure and the group-theoretic conditions used by the
//! obstruction arguments. Everything here is an exhaustive search over the
//! multiplication table.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{is_power_of, p_part, prime_divisors};

use super::{GroupTable, Subgroup};

fn require_prime(p: u64) -> Result<()> {
    if crate::primes::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// A Sylow `p`-subgroup, grown deterministically: repeatedly adjoin the
/// lowest-index `p`-element that keeps the subgroup a `p`-group.
pub fn sylow(g: &GroupTable, p: u64) -> Result<Subgroup<'_>> {
    require_prime(p)?;
    let target = p_part(g.order() as u64, p) as usize;
    let mut h = Subgroup::trivial(g);
    while h.order() < target {
        let next = g
            .elements()
            .filter(|&x| !h.contains(x) && is_power_of(g.element_order(x), p))
            .map(|x| h.join(&[x]))
            .find(|k| is_power_of(k.order() as u64, p));
        // a non-Sylow p-subgroup has a p-element of its normalizer outside it
        h = next.expect("normalizer growth always finds an extension");
    }
    Ok(h)
}

pub fn all_sylow_cyclic(g: &GroupTable) -> bool {
    prime_divisors(g.order() as u64)
        .into_iter()
        .all(|p| sylow(g, p).expect("prime divisor").is_cyclic())
}

/// No subgroup isomorphic to `Z_p x Z_p`.
pub fn p2_condition(g: &GroupTable, p: u64) -> Result<bool> {
    require_prime(p)?;
    let of_order_p: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == p).collect();
    for (i, &a) in of_order_p.iter().enumerate() {
        let span = Subgroup::generated(g, &[a]);
        for &b in &of_order_p[i + 1..] {
            if g.commute(a, b) && !span.contains(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every involution is central.
pub fn two_p_condition(g: &GroupTable) -> bool {
    g.elements()
        .filter(|&x| g.element_order(x) == 2)
        .all(|x| g.elements().all(|y| g.commute(x, y)))
}

/// Largest `k` such that `g` (a `p`-group) has a normal elementary abelian
/// subgroup of order `p^k`.
///
/// In a `p`-group every normal subgroup of order `p^(k+1)` contains a
/// normal subgroup of order `p^k`, so extending normal elementary abelian
/// subgroups one generator at a time reaches all of them.
pub fn normal_rank(g: &GroupTable, p: u64) -> Result<u32> {
    require_prime(p)?;
    if !is_power_of(g.order() as u64, p) {
        return Err(Error::NotPGroup {
            order: g.order(),
            p,
        });
    }
    let of_order_p: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == p).collect();
    let mut frontier = vec![Subgroup::trivial(g)];
    let mut rank = 0;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for &x in &of_order_p {
                if e.contains(x) || !e.elements().iter().all(|&y| g.commute(x, y)) {
                    continue;
                }
                let bigger = e.join(&[x]);
                if bigger.is_normal() && seen.insert(bigger.elements().to_vec()) {
                    next.push(bigger);
                }
            }
        }
        if !next.is_empty() {
            rank += 1;
        }
        frontier = next;
    }
    Ok(rank)
}

/// A normal subgroup `N` with `G = P N` and `P ∩ N = 1` for a Sylow
/// `p`-subgroup `P`.
///
/// Such an `N` is a normal Hall `p'`-subgroup, so it must be exactly the
/// set of elements of order prime to `p`; the search checks whether that
/// set is a subgroup of the right size.
pub fn normal_p_complement(g: &GroupTable, p: u64) -> Result<Option<Subgroup<'_>>> {
    require_prime(p)?;
    let complement_order = g.order() / p_part(g.order() as u64, p) as usize;
    let candidates: Vec<usize> = g
        .elements()
        .filter(|&x| !g.element_order(x).is_multiple_of(p))
        .collect();
    if candidates.len() != complement_order {
        return Ok(None);
    }
    Ok(Subgroup::from_elements(g, candidates).filter(|n| n.is_normal()))
}

/// Index of a largest cyclic subgroup: `|G| / max element order`.
pub fn min_cyclic_index(g: &GroupTable) -> u64 {
    g.order() as u64 / g.max_element_order()
}

#[derive(Debug)]
pub struct DavisDecomposition<'g> {
    /// Order `2^a` of the cyclic 2-part.
    pub two_part_order: u64,
    pub two_part: Subgroup<'g>,
    pub odd_part: Subgroup<'g>,
}

/// Decomposes `g` as an internal direct product `Z_{2^a} x Γ` with `Γ` of
/// odd order, when possible.
pub fn davis_decomposition(g: &GroupTable) -> Option<DavisDecomposition<'_>> {
    let two = sylow(g, 2).expect("2 is prime");
    if !two.is_cyclic() || !two.is_normal() {
        return None;
    }
    let odd = normal_p_complement(g, 2).expect("2 is prime")?;
    // both factors normal with trivial intersection, so they commute
    debug_assert!(two
        .elements()
        .iter()
        .all(|&a| odd.elements().iter().all(|&b| g.commute(a, b))));
    Some(DavisDecomposition {
        two_part_order: two.order() as u64,
        two_part: two,
        odd_part: odd,
    })
}

/// Everything `group analyze` reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: usize,
    /// Whether the Sylow subgroup is cyclic, per prime divisor.
    pub sylow: BTreeMap<u64, bool>,
    pub p2: BTreeMap<u64, bool>,
    pub min_cyclic_index: u64,
    /// Normal rank of the Sylow subgroup, per prime divisor.
    pub normal_rank: BTreeMap<u64, u32>,
    pub davis: Option<DavisSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DavisSummary {
    /// The cyclic 2-part has order `2^a`.
    pub a: u32,
    pub odd_order: usize,
}

pub fn summarize(g: &GroupTable) -> GroupSummary {
    let mut sylow_cyclic = BTreeMap::new();
    let mut p2 = BTreeMap::new();
    let mut ranks = BTreeMap::new();
    for p in prime_divisors(g.order() as u64) {
        let s = sylow(g, p).expect("prime divisor");
        sylow_cyclic.insert(p, s.is_cyclic());
        p2.insert(p, p2_condition(g, p).expect("prime divisor"));
        ranks.insert(
            p,
            normal_rank(&s.to_table(), p).expect("Sylow subgroup is a p-group"),
        );
    }
    GroupSummary {
        order: g.order(),
        sylow: sylow_cyclic,
        p2,
        min_cyclic_index: min_cyclic_index(g),
        normal_rank: ranks,
        davis: davis_decomposition(g).map(|d| DavisSummary {
            a: d.two_part_order.trailing_zeros(),
            odd_order: d.odd_part.order(),
        }),
    }
}

/// The five isomorphism types of groups of order 27.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order27 {
    Z27,
    Z9xZ3,
    Z3Cubed,
    Z9SemiZ3,
    U33,
}

pub fn classify_order_27(g: &GroupTable) -> Result<Order27> {
    if g.order() != 27 {
        return Err(Error::WrongOrder {
            expected: 27,
            actual: g.order(),
        });
    }
    Ok(match (g.is_abelian(), g.exponent()) {
        (true, 27) => Order27::Z27,
        (true, 9) => Order27::Z9xZ3,
        (true, _) => Order27::Z3Cubed,
        (false, 9) => Order27::Z9SemiZ3,
        (false, _) => Order27::U33,
    })
}

/// A normal subgroup of order `p` that no cyclic subgroup strictly contains.
pub fn maximal_cyclic_normal_of_order(g: &GroupTable, p: u64) -> Option<Subgroup<'_>> {
    g.elements()
        .filter(|&x| g.element_order(x) == p)
        .map(|x| Subgroup::generated(g, &[x]))
        .find(|h| h.is_normal() && h.is_maximal_cyclic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::{abelian, build_standard, cyclic, s3, u33, z9_semi_z3};

    #[test]
    fn sylow_examples() {
        let z12 = cyclic(12).unwrap();
        assert_eq!(sylow(&z12, 2).unwrap().order(), 4);
        let b = build_standard("Burnside(7,3,2)").unwrap();
        let s7 = sylow(&b, 7).unwrap();
        assert_eq!(s7.order(), 7);
        assert!(s7.is_normal());
        let z15 = cyclic(15).unwrap();
        assert_eq!(sylow(&z15, 7).unwrap().order(), 1);
        assert!(sylow(&z15, 4).is_err());
        // nonabelian Sylow subgroups are found too
        assert_eq!(sylow(&u33(), 3).unwrap().order(), 27);
        assert_eq!(sylow(&s3(), 2).unwrap().order(), 2);
    }

    #[test]
    fn sylow_cyclicity() {
        assert!(all_sylow_cyclic(
            &build_standard("Burnside(7,3,2)").unwrap()
        ));
        assert!(!all_sylow_cyclic(&abelian(&[3, 3]).unwrap()));
        assert!(all_sylow_cyclic(&cyclic(45).unwrap()));
    }

    #[test]
    fn p2_examples() {
        assert!(!p2_condition(&z9_semi_z3(), 3).unwrap());
        assert!(p2_condition(&cyclic(27).unwrap(), 3).unwrap());
        assert!(!p2_condition(&u33(), 3).unwrap());
        assert!(p2_condition(&s3(), 2).unwrap());
    }

    #[test]
    fn two_p_examples() {
        assert!(!two_p_condition(&s3()));
        assert!(two_p_condition(&cyclic(4).unwrap()));
        assert!(two_p_condition(&u33()));
    }

    #[test]
    fn normal_rank_examples() {
        assert_eq!(normal_rank(&cyclic(27).unwrap(), 3).unwrap(), 1);
        assert_eq!(normal_rank(&abelian(&[3, 3]).unwrap(), 3).unwrap(), 2);
        assert_eq!(normal_rank(&u33(), 3).unwrap(), 2);
        assert_eq!(normal_rank(&z9_semi_z3(), 3).unwrap(), 2);
        assert_eq!(normal_rank(&abelian(&[3, 3, 3]).unwrap(), 3).unwrap(), 3);
        assert_eq!(normal_rank(&cyclic(1).unwrap(), 3).unwrap(), 0);
        assert!(matches!(
            normal_rank(&s3(), 3),
            Err(Error::NotPGroup { .. })
        ));
    }

    #[test]
    fn complements() {
        let g = s3();
        let n = normal_p_complement(&g, 2).unwrap().unwrap();
        assert_eq!(n.order(), 3);
        assert!(n.is_normal());

        let b = build_standard("Burnside(7,3,2)").unwrap();
        let n = normal_p_complement(&b, 3).unwrap().unwrap();
        assert_eq!(n.order(), 7);
        let p = sylow(&b, 3).unwrap();
        assert_eq!(p.intersection(&n).order(), 1);

        let e = abelian(&[3, 3]).unwrap();
        assert_eq!(normal_p_complement(&e, 3).unwrap().unwrap().order(), 1);

        // S_3 has no normal 3-complement: the involutions do not form a subgroup
        assert!(normal_p_complement(&g, 3).unwrap().is_none());
    }

    #[test]
    fn cyclic_index() {
        assert_eq!(min_cyclic_index(&cyclic(12).unwrap()), 1);
        assert_eq!(
            min_cyclic_index(&build_standard("Burnside(7,3,2)").unwrap()),
            3
        );
        assert_eq!(min_cyclic_index(&abelian(&[3, 3]).unwrap()), 3);
    }

    #[test]
    fn davis_examples() {
        let z12 = cyclic(12).unwrap();
        let d = davis_decomposition(&z12).unwrap();
        assert_eq!(d.two_part_order, 4);
        assert_eq!(d.odd_part.order(), 3);

        let g = build_standard("Z6xBurnside(7,3,2)").unwrap();
        let d = davis_decomposition(&g).unwrap();
        assert_eq!(d.two_part_order, 2);
        assert_eq!(d.odd_part.order(), 63);

        assert!(davis_decomposition(&s3()).is_none());
        // Z2 x Z2 has a noncyclic Sylow 2-subgroup
        assert!(davis_decomposition(&abelian(&[2, 2]).unwrap()).is_none());
        let odd = build_standard("Burnside(7,3,2)").unwrap();
        assert_eq!(davis_decomposition(&odd).unwrap().two_part_order, 1);
    }

    #[test]
    fn order_27_labels() {
        assert_eq!(
            classify_order_27(&cyclic(27).unwrap()).unwrap(),
            Order27::Z27
        );
        assert_eq!(classify_order_27(&u33()).unwrap(), Order27::U33);
        assert_eq!(classify_order_27(&z9_semi_z3()).unwrap(), Order27::Z9SemiZ3);
        assert_eq!(
            classify_order_27(&abelian(&[9, 3]).unwrap()).unwrap(),
            Order27::Z9xZ3
        );
        assert_eq!(
            classify_order_27(&abelian(&[3, 3, 3]).unwrap()).unwrap(),
            Order27::Z3Cubed
        );
        assert!(classify_order_27(&cyclic(9).unwrap()).is_err());
    }

    #[test]
    fn maximal_cyclic_normal_order_three() {
        for g in [
            u33(),
            abelian(&[3, 3, 3]).unwrap(),
            abelian(&[9, 3]).unwrap(),
        ] {
            let h = maximal_cyclic_normal_of_order(&g, 3).unwrap();
            assert_eq!(h.index(), 9);
        }
        assert!(maximal_cyclic_normal_of_order(&cyclic(27).unwrap(), 3).is_none());
    }
}
