use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::lattice::{hermite_rows, rank};
use super::smith::smith_normal_form;
use super::{ExactError, IntMatrix};

/// A finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dr`, with
/// `d1 | d2 | ... | dr` and every `di >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// The least common multiple of the torsion orders (1 for a torsion-free group).
    pub fn torsion_exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl Serialize for FinAbGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let factors: Vec<serde_json::Value> = self.torsion.iter().map(big_to_json).collect();
        let mut st = serializer.serialize_struct("FinAbGroup", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("invariant_factors", &factors)?;
        st.end()
    }
}

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as strings.
pub fn big_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `Z^generators / rowspan(relations)`.
pub fn cokernel_group(relations: &IntMatrix, generators: usize) -> Result<FinAbGroup, ExactError> {
    if relations.cols() != generators {
        return Err(ExactError::DimensionMismatch {
            expected: generators,
            found: relations.cols(),
            context: "relation columns vs generators".into(),
        });
    }
    if relations.rows() == 0 || generators == 0 {
        return Ok(FinAbGroup::free(generators));
    }
    let snf = smith_normal_form(relations)?;
    Ok(FinAbGroup {
        rank: generators - snf.rank(),
        torsion: snf
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect(),
    })
}

/// Additive order of an element of a presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl ElementOrder {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            ElementOrder::Finite(d) => Some(d),
            ElementOrder::Infinite => None,
        }
    }
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(d) => write!(f, "{d}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Least `d >= 1` with `d * vec` in the row span of `relations`.
pub fn element_order(vec: &[BigInt], relations: &IntMatrix) -> Result<ElementOrder, ExactError> {
    if vec.len() != relations.cols() {
        return Err(ExactError::DimensionMismatch {
            expected: relations.cols(),
            found: vec.len(),
            context: "element length vs relation columns".into(),
        });
    }
    if vec.iter().all(Zero::is_zero) {
        return Ok(ElementOrder::Finite(BigInt::one()));
    }
    if relations.rows() == 0 {
        return Ok(ElementOrder::Infinite);
    }
    let mut stacked = relations.clone();
    stacked.push_row(vec.to_vec())?;
    if rank(&stacked) > rank(relations) {
        return Ok(ElementOrder::Infinite);
    }
    // rowspan(A) = rowspan(S V^{-1}); v lies in it iff (v V)_i is divisible by s_i.
    let snf = smith_normal_form(relations)?;
    let mut order = BigInt::one();
    for (i, s) in snf.invariant_factors.iter().enumerate() {
        let w: BigInt = vec
            .iter()
            .enumerate()
            .map(|(k, x)| x * &snf.v[(k, i)])
            .sum();
        let need = s / s.gcd(&w);
        order = order.lcm(&need);
    }
    Ok(ElementOrder::Finite(order.abs()))
}

/// The subgroup `(span(gens) + span(rels)) / span(rels)` of `Z^n / span(rels)`.
pub fn subgroup_structure(gens: &IntMatrix, rels: &IntMatrix) -> Result<FinAbGroup, ExactError> {
    if gens.cols() != rels.cols() {
        return Err(ExactError::DimensionMismatch {
            expected: rels.cols(),
            found: gens.cols(),
            context: "subgroup generators vs relations".into(),
        });
    }
    let mut all = gens.clone();
    for r in rels.to_rows() {
        all.push_row(r)?;
    }
    let e = hermite_rows(&all, false);
    let r = e.rank();
    if r == 0 {
        return Ok(FinAbGroup::trivial());
    }
    let mut coords = Vec::with_capacity(rels.rows());
    for row in rels.to_rows() {
        let c = e
            .coordinates(&row)
            .ok_or_else(|| ExactError::Internal("relation outside its own lattice".into()))?;
        coords.push(c);
    }
    let rel_matrix = IntMatrix::from_rows(r, coords)?;
    cokernel_group(&rel_matrix, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn group(rank: usize, torsion: &[i64]) -> FinAbGroup {
        FinAbGroup {
            rank,
            torsion: big(torsion),
        }
    }

    #[test]
    fn cokernel_examples() {
        let z = IntMatrix::zeros(1, 3);
        assert_eq!(cokernel_group(&z, 3).unwrap(), group(3, &[]));
        let d = IntMatrix::from_i64(&[&[6, 0], &[0, 1]]);
        assert_eq!(cokernel_group(&d, 2).unwrap(), group(0, &[6]));
        let h = IntMatrix::from_i64(&[&[2, 2], &[0, 4]]);
        assert_eq!(cokernel_group(&h, 2).unwrap(), group(0, &[2, 4]));
        assert!(cokernel_group(&h, 3).is_err());
    }

    #[test]
    fn order_examples() {
        let r = IntMatrix::from_i64(&[&[2, 0]]);
        assert_eq!(
            element_order(&big(&[1, 0]), &r).unwrap(),
            ElementOrder::Finite(2.into())
        );
        assert_eq!(
            element_order(&big(&[0, 1]), &r).unwrap(),
            ElementOrder::Infinite
        );
        let r = IntMatrix::from_i64(&[&[4, 0], &[0, 6]]);
        assert_eq!(
            element_order(&big(&[1, 1]), &r).unwrap(),
            ElementOrder::Finite(12.into())
        );
        assert!(element_order(&big(&[1]), &r).is_err());
    }

    #[test]
    fn order_matches_brute_force_membership() {
        // d = 1..24 membership test for (1,1) against diag(4,6)
        let r = IntMatrix::from_i64(&[&[4, 0], &[0, 6]]);
        let brute = (1..=24).find(|d| d % 4 == 0 && d % 6 == 0).unwrap();
        assert_eq!(
            element_order(&big(&[1, 1]), &r).unwrap(),
            ElementOrder::Finite(brute.into())
        );
    }

    #[test]
    fn subgroup_of_cyclic() {
        // 2 * (Z/8) inside Z/8 is Z/4
        let rels = IntMatrix::from_i64(&[&[8]]);
        let gens = IntMatrix::from_i64(&[&[2]]);
        assert_eq!(subgroup_structure(&gens, &rels).unwrap(), group(0, &[4]));
    }

    #[test]
    fn json_shape() {
        let g = group(3, &[8, 8, 8]);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"rank":3,"invariant_factors":[8,8,8]}"#
        );
        assert_eq!(g.to_string(), "Z^3 + (Z/8)^3");
    }
}
