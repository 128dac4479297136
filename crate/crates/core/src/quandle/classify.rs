use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::PermGroup;
use crate::quandle::Quandle;

/// Every classifier predicate for one quandle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierReport {
    pub n: usize,
    pub connected: bool,
    /// False for quandles with fewer than three points.
    pub cyclic_type: bool,
    pub transitivity_degree: usize,
    pub primitive: bool,
    pub simple: bool,
    pub inner_order: u128,
    pub inner_frobenius: bool,
}

fn is_full_cycle_off(perm: &crate::perm::Perm, n: usize) -> bool {
    let cycles = perm.cycles();
    cycles.len() == 1 && cycles[0].len() == n - 1
}

impl Quandle {
    /// `Inn(X)` acts transitively.
    pub fn is_connected(&self) -> bool {
        self.inner_group().is_transitive()
    }

    /// Every `φ_x` is a single `(n−1)`-cycle on `X ∖ {x}`.
    pub fn is_cyclic_type(&self) -> Result<bool> {
        let n = self.size();
        if n < 3 {
            return Err(Error::TooSmallForCyclicType(n));
        }
        Ok((0..n).all(|x| is_full_cycle_off(&self.phi(x).unwrap(), n)))
    }

    /// Connected, and `φ_0` is an `(n−1)`-cycle.
    pub fn cyclic_type_shortcut(&self) -> Result<bool> {
        let n = self.size();
        if n < 3 {
            return Err(Error::TooSmallForCyclicType(n));
        }
        Ok(is_full_cycle_off(&self.phi(0).unwrap(), n) && self.is_connected())
    }

    pub fn transitivity_degree(&self, cap: usize) -> usize {
        self.inner_group().transitivity_degree(cap)
    }

    /// Whether `Inn(X)` acts primitively; false for intransitive actions and
    /// for a single point.
    pub fn is_primitive(&self) -> bool {
        let g = self.inner_group();
        self.size() >= 2 && g.is_transitive() && g.is_primitive().unwrap()
    }

    /// `Inn(X)_x = ⟨φ_x⟩`, for quandles of cyclic type.
    pub fn stabilizer_is_generated_by_phi(&self, x: usize) -> Result<bool> {
        if !self.is_cyclic_type()? {
            return Err(Error::NotCyclicType);
        }
        let phi = self.phi(x)?;
        let stab = self.inner_group().stabilizer(x)?;
        let cyclic = PermGroup::from_generators(std::slice::from_ref(&phi))?;
        Ok(stab.order() == cyclic.order()
            && stab.contains(&phi)
            && cyclic.order() == self.size() as u128 - 1)
    }

    /// `φ_x` lies in and commutes with every generator of `Inn(X)_x`.
    pub fn phi_central_in_stabilizer(&self, x: usize) -> Result<bool> {
        let phi = self.phi(x)?;
        let stab = self.inner_group().stabilizer(x)?;
        Ok(stab.contains(&phi) && stab.generators().iter().all(|g| g.commutes_with(&phi)))
    }

    pub fn classify(&self) -> ClassifierReport {
        let n = self.size();
        let inner = self.inner_group();
        let connected = inner.is_transitive();
        let cyclic_type = n >= 3 && self.is_cyclic_type().unwrap();
        let transitivity_degree = inner.transitivity_degree(5);
        let primitive = n >= 2 && connected && inner.is_primitive().unwrap();
        let simple = self.is_simple();
        let inner_frobenius = n >= 2 && connected && inner.is_frobenius_action().unwrap();
        let report = ClassifierReport {
            n,
            connected,
            cyclic_type,
            transitivity_degree,
            primitive,
            simple,
            inner_order: inner.order(),
            inner_frobenius,
        };
        if n >= 3 {
            assert!(
                !report.cyclic_type || report.transitivity_degree >= 2,
                "{self:?}"
            );
            assert!(
                report.transitivity_degree < 2 || report.primitive,
                "{self:?}"
            );
            assert!(!report.primitive || report.simple, "{self:?}");
        }
        report
    }
}
