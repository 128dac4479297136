use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Which side of Burnside's dichotomy a minimal normal subgroup of a doubly
/// transitive group falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BurnsideBranch {
    RegularElementaryAbelian,
    NonregularNonabelianSimple,
    /// Neither branch holds; the dichotomy would be violated.
    Neither,
}

#[derive(Clone, Debug)]
pub struct BurnsideReport {
    pub minimal_normal: PermGroup,
    pub order: u128,
    pub regular: bool,
    pub abelian: bool,
    pub elementary_abelian: bool,
    pub simple: bool,
    pub branch: BurnsideBranch,
}

fn commutator(a: &Perm, b: &Perm) -> Perm {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}

impl PermGroup {
    /// The smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Perm]) -> Result<PermGroup> {
        let n = self.degree();
        let mut gens: Vec<Perm> = elements
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return Ok(PermGroup::trivial(n));
        }
        let mut group = PermGroup::from_generators(&gens)?;
        let mut k = 0;
        while k < gens.len() {
            let mut grew = false;
            for t in self.generators() {
                let c = t.conjugate(&gens[k]);
                if !group.contains(&c) {
                    gens.push(c);
                    grew = true;
                }
            }
            if grew {
                group = PermGroup::from_generators(&gens)?;
            }
            k += 1;
        }
        Ok(group)
    }

    /// `[G, G]`, the normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let g = self.generators();
        let mut comms = Vec::new();
        for (i, a) in g.iter().enumerate() {
            for b in &g[i + 1..] {
                let c = commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let derived = self.normal_closure(&comms)?;
        debug_assert!(g
            .iter()
            .all(|a| g.iter().all(|b| derived.contains(&commutator(a, b)))));
        Ok(derived)
    }

    /// Whether `self` is simple: nontrivial, and every nontrivial element
    /// has normal closure equal to the whole group.
    pub fn is_simple(&self, cap: u128) -> Result<bool> {
        if self.is_trivial() {
            return Ok(false);
        }
        let order = self.order();
        for class in self.conjugacy_classes(cap)? {
            if class.representative.is_identity() {
                continue;
            }
            if self.normal_closure(&[class.representative])?.order() != order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Finds a minimal normal subgroup of a doubly transitive group and
    /// reports which side of Burnside's dichotomy it lies on.
    pub fn burnside_dichotomy_check(&self, cap: u128) -> Result<BurnsideReport> {
        if self.degree() < 2 || !self.is_k_transitive(2)? {
            return Err(Error::NotDoublyTransitive {
                what: "Burnside check",
            });
        }
        // The smallest normal closure of a single element is minimal normal.
        let mut best: Option<PermGroup> = None;
        for class in self.conjugacy_classes(cap)? {
            if class.representative.is_identity() {
                continue;
            }
            let ncl = self.normal_closure(&[class.representative])?;
            if best.as_ref().is_none_or(|b| ncl.order() < b.order()) {
                best = Some(ncl);
            }
        }
        let n = best.expect("doubly transitive group is nontrivial");
        let order = n.order();
        let regular = n.is_regular();
        let abelian = n.is_abelian();
        let elementary_abelian = abelian && {
            let orders: Vec<u64> = n
                .generators()
                .iter()
                .filter(|g| !g.is_identity())
                .map(Perm::order)
                .collect();
            orders.iter().all(|&o| o == orders[0] && is_prime(o))
        };
        let simple = !abelian && n.is_simple(cap)?;
        let branch = if regular && elementary_abelian {
            BurnsideBranch::RegularElementaryAbelian
        } else if !regular && !abelian && simple {
            BurnsideBranch::NonregularNonabelianSimple
        } else {
            BurnsideBranch::Neither
        };
        Ok(BurnsideReport {
            minimal_normal: n,
            order,
            regular,
            abelian,
            elementary_abelian,
            simple,
            branch,
        })
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_with_degree(s, n).unwrap()
    }

    #[test]
    fn derived_subgroups() {
        let s3 = PermGroup::symmetric(3);
        assert_eq!(s3.derived_subgroup().unwrap().order(), 3);
        assert!(PermGroup::cyclic(6)
            .derived_subgroup()
            .unwrap()
            .is_trivial());
        let a5 = PermGroup::alternating(5);
        assert_eq!(a5.derived_subgroup().unwrap().order(), 60);
        assert_eq!(
            PermGroup::symmetric(4).derived_subgroup().unwrap().order(),
            12
        );
    }

    #[test]
    fn simplicity() {
        assert!(PermGroup::alternating(5).is_simple(1000).unwrap());
        assert!(!PermGroup::alternating(4).is_simple(1000).unwrap());
        assert!(PermGroup::cyclic(5).is_simple(1000).unwrap());
        assert!(!PermGroup::trivial(3).is_simple(1000).unwrap());
    }

    #[test]
    fn burnside_branches() {
        let aff5 = PermGroup::from_generators(&[p("(0 1 2 3 4)", 5), p("(1 2 4 3)", 5)]).unwrap();
        let r = aff5.burnside_dichotomy_check(1000).unwrap();
        assert_eq!(r.order, 5);
        assert_eq!(r.branch, BurnsideBranch::RegularElementaryAbelian);

        let r = PermGroup::symmetric(5)
            .burnside_dichotomy_check(1000)
            .unwrap();
        assert_eq!(r.order, 60);
        assert_eq!(r.branch, BurnsideBranch::NonregularNonabelianSimple);

        let r = PermGroup::symmetric(3)
            .burnside_dichotomy_check(1000)
            .unwrap();
        assert_eq!(r.order, 3);
        assert_eq!(r.branch, BurnsideBranch::RegularElementaryAbelian);

        let r = PermGroup::symmetric(4)
            .burnside_dichotomy_check(1000)
            .unwrap();
        assert_eq!(r.order, 4);
        assert_eq!(r.branch, BurnsideBranch::RegularElementaryAbelian);

        assert!(PermGroup::cyclic(4).burnside_dichotomy_check(1000).is_err());
    }
}
