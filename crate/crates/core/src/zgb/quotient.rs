use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dense::{divides, quotient, DPoly, Exps, MonomialOrder};
use super::{StrongGB, ZgbError};
use crate::exactmath::{cokernel_group, element_order, ElementOrder, FinAbGroup, IntMatrix};
use crate::poly::{Coeff, Monomial, Polynomial, Var, ZPoly};

/// The additive group of `Z[x]/I`: free on the monomials outside the unit
/// leading monomials, modulo the rows of `relations`.
#[derive(Clone, Debug)]
pub struct FgQuotientGroup {
    pub monomial_generators: Vec<Monomial>,
    pub relations: IntMatrix,
    pub group: FinAbGroup,
    exps: Vec<Exps>,
    index: HashMap<Exps, usize>,
    unit_basis: Vec<DPoly<BigInt>>,
    variables: Vec<Var>,
    order: MonomialOrder,
}

fn standard_monomials<C: Coeff>(
    variables: &[Var],
    units: &[DPoly<C>],
    order: MonomialOrder,
) -> Result<Vec<Exps>, ZgbError> {
    let n = variables.len();
    if units.iter().any(|g| g.lm().iter().all(|&e| e == 0)) {
        return Ok(Vec::new());
    }
    for (i, v) in variables.iter().enumerate() {
        let pure = units.iter().any(|g| {
            let lm = g.lm();
            lm[i] > 0 && lm.iter().enumerate().all(|(j, &e)| j == i || e == 0)
        });
        if !pure {
            return Err(ZgbError::NotFinitelyGenerated(v.name()));
        }
    }
    let mut seen: HashSet<Exps> = HashSet::new();
    let mut queue = VecDeque::new();
    let start = vec![0u32; n];
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(e) = queue.pop_front() {
        for i in 0..n {
            let mut f = e.clone();
            f[i] += 1;
            if seen.contains(&f) || units.iter().any(|g| divides(g.lm(), &f)) {
                continue;
            }
            seen.insert(f.clone());
            queue.push_back(f);
        }
    }
    let mut out: Vec<Exps> = seen.into_iter().collect();
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(out)
}

/// Linear reduction by the unit-leading-coefficient elements only.
fn reduce_units<C: Coeff>(f: DPoly<C>, units: &[DPoly<C>], order: MonomialOrder) -> DPoly<C> {
    let mut rem = f;
    let mut idx = 0;
    while idx < rem.terms.len() {
        let m = rem.terms[idx].0.clone();
        match units.iter().find(|g| divides(g.lm(), &m)) {
            Some(g) => {
                let c = rem.terms[idx]
                    .1
                    .clone()
                    .try_div(g.lc())
                    .expect("unit leading coefficient");
                rem = rem.add_scaled(&-c, &quotient(&m, g.lm()), g, order);
            }
            None => idx += 1,
        }
    }
    rem
}

pub fn quotient_group_structure(gb: &StrongGB<BigInt>) -> Result<FgQuotientGroup, ZgbError> {
    let order = gb.order();
    let units: Vec<DPoly<BigInt>> = gb
        .dense()
        .iter()
        .filter(|g| g.lc().is_one())
        .cloned()
        .collect();
    let others: Vec<&DPoly<BigInt>> = gb.dense().iter().filter(|g| !g.lc().is_one()).collect();
    let exps = standard_monomials(gb.variables(), &units, order)?;
    let index: HashMap<Exps, usize> = exps
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();

    let mut rows = Vec::new();
    for m in &exps {
        let divisors: Vec<&&DPoly<BigInt>> = others.iter().filter(|g| divides(g.lm(), m)).collect();
        let Some(best) = divisors.iter().min_by(|a, b| a.lc().cmp(b.lc())) else {
            continue;
        };
        let c = best.lc();
        if divisors.iter().any(|g| !(g.lc() % c).is_zero()) {
            return Err(ZgbError::NotStrong(format!("{m:?}")));
        }
        let row = reduce_units(best.shift(&quotient(m, best.lm())), &units, order);
        rows.push(dense_to_vec(&row, &index)?);
    }
    let relations = IntMatrix::from_rows(exps.len(), rows)?;
    let group = cokernel_group(&relations, exps.len())?;
    let vars = gb.variables().to_vec();
    Ok(FgQuotientGroup {
        monomial_generators: exps.iter().map(|e| exps_to_monomial(e, &vars)).collect(),
        relations,
        group,
        exps,
        index,
        unit_basis: units,
        variables: vars,
        order,
    })
}

fn dense_to_vec(p: &DPoly<BigInt>, index: &HashMap<Exps, usize>) -> Result<Vec<BigInt>, ZgbError> {
    let mut v = vec![BigInt::zero(); index.len()];
    for (e, c) in &p.terms {
        let i = index.get(e).ok_or_else(|| {
            ZgbError::NotStrong(format!("reduced term {e:?} outside the standard monomials"))
        })?;
        v[*i] = c.clone();
    }
    Ok(v)
}

fn exps_to_monomial(e: &[u32], vars: &[Var]) -> Monomial {
    Monomial::from_pairs(
        vars.iter()
            .zip(e)
            .filter(|(_, &k)| k > 0)
            .map(|(&v, &k)| (v, k as i32)),
    )
}

impl FgQuotientGroup {
    pub fn generator_count(&self) -> usize {
        self.exps.len()
    }

    pub fn variables(&self) -> &[Var] {
        &self.variables
    }

    /// Coordinates of `f` on the monomial generators.
    pub fn coordinates(&self, f: &ZPoly) -> Result<Vec<BigInt>, ZgbError> {
        let d = DPoly::from_poly(f, &self.variables, self.order)
            .ok_or_else(|| ZgbError::UndeclaredVariable(f.to_string()))?;
        let r = reduce_units(d, &self.unit_basis, self.order);
        dense_to_vec(&r, &self.index)
    }

    pub fn from_coordinates(&self, v: &[BigInt]) -> ZPoly {
        Polynomial::from_terms(
            self.monomial_generators
                .iter()
                .zip(v)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Additive order of the class of `f`.
    pub fn element_order(&self, f: &ZPoly) -> Result<ElementOrder, ZgbError> {
        let v = self.coordinates(f)?;
        if self.relations.rows() == 0 {
            return Ok(if v.iter().all(Zero::is_zero) {
                ElementOrder::Finite(BigInt::one())
            } else {
                ElementOrder::Infinite
            });
        }
        Ok(element_order(&v, &self.relations)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "monomial_generators": self.monomial_generators.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "relations": self.relations.to_rows().iter().map(|r| r.iter().map(crate::exactmath::big_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "group": self.group,
        })
    }
}

/// Dimension over the rationals of `Q[x]/I`.
pub fn q_dimension(gb: &StrongGB<num_rational::BigRational>) -> Result<usize, ZgbError> {
    Ok(standard_monomials(gb.variables(), gb.dense(), gb.order())?.len())
}

/// Monomials outside the leading ideal of a basis over the rationals, in
/// increasing monomial order.
pub fn standard_basis(gb: &StrongGB<num_rational::BigRational>) -> Result<Vec<Monomial>, ZgbError> {
    let vars = gb.variables();
    Ok(standard_monomials(vars, gb.dense(), gb.order())?
        .iter()
        .map(|e| exps_to_monomial(e, vars))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;
    use crate::zgb::{strong_groebner, Budget, IdealPresentation};

    fn group_of(gens: &[&str]) -> FgQuotientGroup {
        let ideal = IdealPresentation::from_generators(
            gens.iter().map(|s| s.parse::<ZPoly>().unwrap()).collect(),
        );
        let gb = strong_groebner(&ideal, Budget::unlimited()).unwrap();
        quotient_group_structure(&gb).unwrap()
    }

    fn fab(rank: usize, t: &[i64]) -> FinAbGroup {
        FinAbGroup {
            rank,
            torsion: t.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    #[test]
    fn principal_variable() {
        let q = group_of(&["qx"]);
        assert_eq!(q.group, fab(1, &[]));
        assert_eq!(q.monomial_generators, vec![Monomial::one()]);
    }

    #[test]
    fn theta_with_eight_torsion() {
        let q = group_of(&["t^2 - 1", "8*t - 8"]);
        assert_eq!(q.group, fab(1, &[8]));
        assert_eq!(q.generator_count(), 2);
        assert_eq!(
            q.element_order(&"t - 1".parse().unwrap()).unwrap(),
            ElementOrder::Finite(8.into())
        );
    }

    #[test]
    fn mixed_monomial_ideal() {
        // standard monomials {1, x, y}; the only relation is 2x
        let q = group_of(&["qx^2", "qx*qy", "qy^2", "2*qx"]);
        assert_eq!(q.group, fab(2, &[2]));
    }

    #[test]
    fn infinite_quotient_rejected() {
        let ideal = IdealPresentation::from_generators(vec!["qx*qy".parse::<ZPoly>().unwrap()]);
        let gb = strong_groebner(&ideal, Budget::unlimited()).unwrap();
        assert!(matches!(
            quotient_group_structure(&gb),
            Err(ZgbError::NotFinitelyGenerated(_))
        ));
    }

    #[test]
    fn rational_dimensions() {
        let dim = |gens: &[&str]| {
            let ideal = IdealPresentation::from_generators(
                gens.iter().map(|s| s.parse::<QPoly>().unwrap()).collect(),
            );
            q_dimension(&strong_groebner(&ideal, Budget::unlimited()).unwrap()).unwrap()
        };
        assert_eq!(dim(&["qx^2", "qy^2"]), 4);
        assert_eq!(dim(&["qx"]), 1);
        assert_eq!(dim(&["p1 + q1", "p1*q1"]), 2);
    }
}
