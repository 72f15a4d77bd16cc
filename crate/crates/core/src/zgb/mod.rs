//! Strong Gröbner bases over the integers (plain Gröbner bases over the
//! rationals), normal forms, and the additive group of a quotient ring.

mod buchberger;
mod dense;
mod quotient;
mod subring;

pub use buchberger::Budget;
pub use dense::MonomialOrder;
pub use quotient::{q_dimension, quotient_group_structure, standard_basis, FgQuotientGroup};
pub use subring::{express_in_subring, Expressibility, SubringMode};

use std::collections::HashSet;

use serde::Serialize;

use crate::exactmath::ExactError;
use crate::poly::{Coeff, Polynomial, RingTag, Var};
use buchberger::{buchberger, reduce_canonical};
use dense::DPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZgbError {
    #[error("resource budget exceeded after {steps} steps ({elapsed_ms} ms)")]
    BudgetExceeded { steps: u64, elapsed_ms: u64 },
    #[error("polynomial {0} is not in the declared variables (or is Laurent)")]
    UndeclaredVariable(String),
    #[error("quotient is not finitely generated as detected: no pure power of {0} is a unit leading monomial")]
    NotFinitelyGenerated(String),
    #[error("basis is not strong at monomial {0}")]
    NotStrong(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Generators of an ideal in a polynomial ring over the integers or rationals.
#[derive(Clone, Debug)]
pub struct IdealPresentation<C: Coeff> {
    pub variables: Vec<Var>,
    pub generators: Vec<Polynomial<C>>,
    pub order: MonomialOrder,
}

impl<C: Coeff> IdealPresentation<C> {
    pub fn new(variables: Vec<Var>, generators: Vec<Polynomial<C>>) -> Self {
        IdealPresentation {
            variables,
            generators,
            order: MonomialOrder::Grevlex,
        }
    }

    /// Declares the variables in the order they first appear in the generators.
    pub fn from_generators(generators: Vec<Polynomial<C>>) -> Self {
        let mut seen = HashSet::new();
        let mut vars: Vec<Var> = generators
            .iter()
            .flat_map(|g| g.variables())
            .filter(|v| seen.insert(*v))
            .collect();
        vars.sort_by(|a, b| a.name_cmp(*b));
        Self::new(vars, generators)
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }
}

/// A strong Gröbner basis: reduced, leading coefficients positive (monic over a field).
#[derive(Clone, Debug)]
pub struct StrongGB<C> {
    variables: Vec<Var>,
    order: MonomialOrder,
    basis: Vec<DPoly<C>>,
    pub steps: u64,
    pub pairs: u64,
}

#[derive(Serialize)]
struct GbJson {
    ring: RingTag,
    order: MonomialOrder,
    variables: Vec<String>,
    basis: Vec<String>,
}

pub fn strong_groebner<C: Coeff>(
    ideal: &IdealPresentation<C>,
    budget: Budget,
) -> Result<StrongGB<C>, ZgbError> {
    let gens = ideal
        .generators
        .iter()
        .map(|g| {
            DPoly::from_poly(g, &ideal.variables, ideal.order)
                .ok_or_else(|| ZgbError::UndeclaredVariable(g.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let run = buchberger(gens, ideal.order, budget)?;
    Ok(StrongGB {
        variables: ideal.variables.clone(),
        order: ideal.order,
        basis: run.basis,
        steps: run.steps,
        pairs: run.pairs,
    })
}

impl<C: Coeff> StrongGB<C> {
    pub fn variables(&self) -> &[Var] {
        &self.variables
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> RingTag {
        C::RING
    }

    pub fn basis(&self) -> Vec<Polynomial<C>> {
        self.basis
            .iter()
            .map(|g| g.to_poly(&self.variables))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis
            .iter()
            .any(|g| g.lm().iter().all(|&e| e == 0) && g.lc().is_unit())
    }

    pub(crate) fn dense(&self) -> &[DPoly<C>] {
        &self.basis
    }

    pub(crate) fn to_dense(&self, f: &Polynomial<C>) -> Result<DPoly<C>, ZgbError> {
        DPoly::from_poly(f, &self.variables, self.order)
            .ok_or_else(|| ZgbError::UndeclaredVariable(f.to_string()))
    }

    /// The canonical remainder of `f`; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, ZgbError> {
        let d = self.to_dense(f)?;
        Ok(reduce_canonical(d, &self.basis, self.order, None).to_poly(&self.variables))
    }

    /// Normal form computed with the basis elements visited in the given order.
    /// The result must not depend on `perm`.
    pub fn normal_form_permuted(
        &self,
        f: &Polynomial<C>,
        perm: &[usize],
    ) -> Result<Polynomial<C>, ZgbError> {
        let d = self.to_dense(f)?;
        let basis: Vec<DPoly<C>> = perm.iter().map(|&i| self.basis[i].clone()).collect();
        Ok(reduce_canonical(d, &basis, self.order, None).to_poly(&self.variables))
    }

    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool, ZgbError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GbJson {
            ring: C::RING,
            order: self.order,
            variables: self.variables.iter().map(|v| v.name()).collect(),
            basis: self.basis().iter().map(|p| p.to_string()).collect(),
        })
        .expect("serializable")
    }
}
