//! Embedding and isomorphism tests by generator-image search.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::is_prime;

use super::{catalog, GroupTable};

/// A generating set chosen greedily by descending element order, so that
/// few generators are needed and their images are tightly constrained.
pub fn small_generating_set(g: &GroupTable) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut size = 1;
    for x in by_order {
        if size == g.order() {
            break;
        }
        if member[x] {
            continue;
        }
        gens.push(x);
        let closure = super::Subgroup::generated(g, &gens);
        member.iter_mut().for_each(|m| *m = false);
        for &e in closure.elements() {
            member[e] = true;
        }
        size = closure.order();
    }
    gens
}

/// Tries to extend `gen_i -> images[i]` (for the first `images.len()`
/// generators) to a homomorphism on the subgroup they generate. Returns
/// the partial map when consistent and injective.
fn extend_map(
    source: &GroupTable,
    gens: &[usize],
    target: &GroupTable,
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let mut phi: Vec<Option<usize>> = vec![None; source.order()];
    let mut used = vec![false; target.order()];
    phi[0] = Some(0);
    used[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let fx = phi[x].unwrap();
        for (&g, &h) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let fy = target.mul(fx, h);
            match phi[y] {
                Some(v) if v != fy => return None,
                Some(_) => {}
                None => {
                    if used[fy] {
                        return None;
                    }
                    used[fy] = true;
                    phi[y] = Some(fy);
                    stack.push(y);
                }
            }
        }
    }
    Some(phi)
}

/// An injective homomorphism `pattern -> target`, if one exists, as the
/// image of every pattern element.
pub fn find_embedding(pattern: &GroupTable, target: &GroupTable) -> Option<Vec<usize>> {
    if !target.order().is_multiple_of(pattern.order()) {
        return None;
    }
    let gens = small_generating_set(pattern);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = pattern.element_order(g);
            target
                .elements()
                .filter(|&h| target.element_order(h) == o)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    fn search(
        pattern: &GroupTable,
        gens: &[usize],
        target: &GroupTable,
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let k = images.len();
        if k == gens.len() {
            let phi = extend_map(pattern, gens, target, images)?;
            return phi.into_iter().collect();
        }
        for &h in &candidates[k] {
            images.push(h);
            if extend_map(pattern, &gens[..=k], target, images).is_some() {
                if let Some(found) = search(pattern, gens, target, candidates, images) {
                    return Some(found);
                }
            }
            images.pop();
        }
        None
    }
    search(pattern, &gens, target, &candidates, &mut images)
}

/// Cheap invariants compared before any search.
fn invariants_match(a: &GroupTable, b: &GroupTable) -> bool {
    a.order() == b.order()
        && a.order_profile() == b.order_profile()
        && a.is_abelian() == b.is_abelian()
        && a.center_size() == b.center_size()
        && a.exponent() == b.exponent()
}

pub fn is_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    invariants_match(a, b) && find_embedding(a, b).is_some()
}

/// Subgroup shapes that structural queries look for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `Z_p x Z_p`
    ZpxZp(u64),
    Z9xZ3,
    Z3Cubed,
    U33,
    Z9SemiZ3,
}

impl Pattern {
    pub fn build(self) -> Result<GroupTable> {
        match self {
            Pattern::ZpxZp(p) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                catalog::abelian(&[p as usize, p as usize])
            }
            Pattern::Z9xZ3 => catalog::abelian(&[9, 3]),
            Pattern::Z3Cubed => catalog::abelian(&[3, 3, 3]),
            Pattern::U33 => Ok(catalog::u33()),
            Pattern::Z9SemiZ3 => Ok(catalog::z9_semi_z3()),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::ZpxZp(p) => write!(f, "Z{p}xZ{p}"),
            Pattern::Z9xZ3 => write!(f, "Z9xZ3"),
            Pattern::Z3Cubed => write!(f, "Z3xZ3xZ3"),
            Pattern::U33 => write!(f, "U33"),
            Pattern::Z9SemiZ3 => write!(f, "Z9semiZ3"),
        }
    }
}

/// Whether some subgroup of `g` is isomorphic to `pattern`.
pub fn contains_copy(g: &GroupTable, pattern: Pattern) -> Result<bool> {
    let p = pattern.build()?;
    Ok(find_embedding(&p, g).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::{abelian, build_standard, cyclic, u33};

    #[test]
    fn embeddings() {
        let z9z3 = abelian(&[9, 3]).unwrap();
        assert!(contains_copy(&z9z3, Pattern::ZpxZp(3)).unwrap());
        assert!(!contains_copy(&cyclic(27).unwrap(), Pattern::ZpxZp(3)).unwrap());
        assert!(!contains_copy(&u33(), Pattern::Z9xZ3).unwrap());
        assert!(contains_copy(&u33(), Pattern::ZpxZp(3)).unwrap());
        assert!(contains_copy(&abelian(&[3, 3, 3, 3]).unwrap(), Pattern::Z3Cubed).unwrap());
        assert!(contains_copy(&z9z3, Pattern::ZpxZp(4)).is_err());
    }

    #[test]
    fn isomorphism() {
        let a = build_standard("Z6").unwrap();
        let b = build_standard("Z2xZ3").unwrap();
        assert!(is_isomorphic(&a, &b));
        let c = build_standard("S3").unwrap();
        assert!(!is_isomorphic(&a, &c));
        let d = build_standard("Burnside(7,3,2)").unwrap();
        let e = build_standard("Burnside(7,3,4)").unwrap();
        assert!(is_isomorphic(&d, &e));
    }

    #[test]
    fn embedding_is_homomorphism() {
        let g = build_standard("Z6xBurnside(7,3,2)").unwrap();
        let p = build_standard("Burnside(7,3,2)").unwrap();
        let phi = find_embedding(&p, &g).unwrap();
        for a in p.elements() {
            for b in p.elements() {
                assert_eq!(phi[p.mul(a, b)], g.mul(phi[a], phi[b]));
            }
        }
    }
}
