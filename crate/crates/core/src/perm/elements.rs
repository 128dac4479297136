//! Element-scan routines: center, centralizers and conjugacy classes.
//!
//! Each scan enumerates the group and is refused with
//! [`Error::CapExceeded`] when the order is above the element cap.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

pub const DEFAULT_ELEMENT_CAP: u128 = 10_000_000;

/// The element cap, overridable through `QLAB_ELEMENT_CAP`.
pub fn element_cap() -> u128 {
    std::env::var("QLAB_ELEMENT_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element of the class in the `Perm` ordering.
    pub representative: Perm,
    pub size: usize,
}

/// Generates a subgroup from a list of elements, skipping redundant ones.
fn subgroup_from_elements(degree: usize, elements: &[Perm]) -> Result<PermGroup> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut current = PermGroup::trivial(degree);
    for z in elements {
        if !current.contains(z) {
            gens.push(z.clone());
            current = PermGroup::from_generators(&gens)?;
        }
    }
    Ok(current)
}

impl PermGroup {
    pub fn center(&self) -> Result<PermGroup> {
        self.center_with_cap(element_cap())
    }

    /// `Z(G)`: elements commuting with every generator.
    pub fn center_with_cap(&self, cap: u128) -> Result<PermGroup> {
        let central: Vec<Perm> = self
            .elements(cap)?
            .into_iter()
            .filter(|z| self.generators().iter().all(|g| z.commutes_with(g)))
            .collect();
        subgroup_from_elements(self.degree(), &central)
    }

    /// `C_G(c)` for `c` an `(n−1)`-cycle of `G` fixing one point.
    ///
    /// Such a centralizer sits inside `⟨c⟩`, and this is asserted on the
    /// scanned result.
    pub fn centralizer_of_cycle(&self, c: &Perm) -> Result<PermGroup> {
        let n = self.degree();
        if c.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: c.degree(),
            });
        }
        let cycles = c.cycles();
        if n < 2 || cycles.len() != 1 || cycles[0].len() != n - 1 {
            return Err(Error::InvalidArgument(format!(
                "{c} is not an (n-1)-cycle on {n} points"
            )));
        }
        if !self.contains(c) {
            return Err(Error::NotInGroup);
        }
        let commuting: Vec<Perm> = self
            .elements(element_cap())?
            .into_iter()
            .filter(|z| z.commutes_with(c))
            .collect();
        let generated = PermGroup::from_generators(std::slice::from_ref(c))?;
        assert!(
            commuting.iter().all(|z| generated.contains(z)),
            "centralizer of an (n-1)-cycle escaped the cycle's powers"
        );
        subgroup_from_elements(n, &commuting)
    }

    /// All conjugacy classes, sorted by representative.
    pub fn conjugacy_classes(&self, element_cap: u128) -> Result<Vec<ConjugacyClass>> {
        let elements = self.elements(element_cap)?;
        let index: HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut visited = vec![false; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = &elements[members[k]];
                for s in self.generators() {
                    let y = s.conjugate(x);
                    let j = index[&y];
                    if !visited[j] {
                        visited[j] = true;
                        members.push(j);
                    }
                }
                k += 1;
            }
            let representative = members.iter().map(|&i| &elements[i]).min().unwrap().clone();
            classes.push(ConjugacyClass {
                representative,
                size: members.len(),
            });
        }
        classes.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(classes)
    }

    /// Sizes of the conjugacy classes, ascending.
    pub fn conjugacy_class_sizes(&self, element_cap: u128) -> Result<Vec<usize>> {
        let mut sizes: Vec<usize> = self
            .conjugacy_classes(element_cap)?
            .iter()
            .map(|c| c.size)
            .collect();
        sizes.sort_unstable();
        Ok(sizes)
    }

    /// The conjugacy class of `x`, in discovery order starting at `x`.
    pub fn conjugacy_class_of(&self, x: &Perm, size_cap: usize) -> Result<Vec<Perm>> {
        if !self.contains(x) {
            return Err(Error::NotInGroup);
        }
        let mut members = vec![x.clone()];
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(x.clone(), ());
        let mut k = 0;
        while k < members.len() {
            for s in self.generators() {
                let y = s.conjugate(&members[k]);
                if !seen.contains_key(&y) {
                    if members.len() >= size_cap {
                        return Err(Error::CapExceeded {
                            what: "conjugacy class",
                            needed: members.len() as u128 + 1,
                            cap: size_cap as u128,
                        });
                    }
                    seen.insert(y.clone(), ());
                    members.push(y);
                }
            }
            k += 1;
        }
        Ok(members)
    }
}
