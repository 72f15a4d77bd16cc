use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Coeff, Monomial, PolyError, Var};

/// Exact multivariate (Laurent) polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

pub type ZPoly = Polynomial<BigInt>;
pub type QPoly = Polynomial<BigRational>;

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    /// Shorthand for `var(Var::new(name))`.
    pub fn named(name: &str) -> Self {
        Self::var(Var::new(name))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    /// True if some monomial carries a negative exponent.
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().any(Monomial::is_laurent)
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(C::to_rational)
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Ring-homomorphic substitution; every variable of `self` needs an image.
    /// A negative exponent requires the image to be a unit monomial.
    pub fn apply_hom(&self, images: &HashMap<Var, Polynomial<C>>) -> Result<Self, PolyError> {
        self.substitute_with(|v| images.get(&v).cloned(), true)
    }

    /// Like `apply_hom`, but variables without an image map to themselves.
    pub fn substitute(&self, images: &HashMap<Var, Polynomial<C>>) -> Result<Self, PolyError> {
        self.substitute_with(|v| images.get(&v).cloned(), false)
    }

    fn substitute_with(
        &self,
        image: impl Fn(Var) -> Option<Polynomial<C>>,
        strict: bool,
    ) -> Result<Self, PolyError> {
        let mut cache: HashMap<(Var, i32), Polynomial<C>> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for &(v, e) in m.pairs() {
                let f = match cache.get(&(v, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let base = match image(v) {
                            Some(p) => p,
                            None if strict => return Err(PolyError::MissingImage(v.name())),
                            None => Self::var(v),
                        };
                        let f = if e >= 0 {
                            base.pow(e as u32)
                        } else {
                            base.inverse_unit()
                                .ok_or_else(|| PolyError::NotInvertible(v.name()))?
                                .pow((-e) as u32)
                        };
                        cache.insert((v, e), f.clone());
                        f
                    }
                };
                t = &t * &f;
            }
            out = out + t;
        }
        Ok(out)
    }

    /// Inverse of a single unit-coefficient monomial.
    pub fn inverse_unit(&self) -> Option<Self> {
        let mut it = self.terms.iter();
        let (m, c) = it.next()?;
        if it.next().is_some() || !c.is_unit() {
            return None;
        }
        let inv = C::one().try_div(c)?;
        Some(Self::term(m.inverse(), inv))
    }

    /// Leading term for the lexicographic order on variable ids.
    pub fn lex_leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| a.0.lex_cmp(b.0))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.is_laurent() || d.is_laurent() {
            return None;
        }
        let (dm, dc) = d.lex_leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = rem.lex_leading() {
            let m = rm.divide(&dm)?;
            let c = rc.try_div(&dc)?;
            let t = Self::term(m, c);
            rem = rem - &t * d;
            q = q + t;
        }
        Some(q)
    }

    /// Terms sorted in canonical printing order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    pub fn evaluate(&self, values: &HashMap<Var, C>) -> Result<C, PolyError> {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = values
                    .get(&v)
                    .ok_or_else(|| PolyError::MissingImage(v.name()))?;
                let base = if e < 0 {
                    C::one()
                        .try_div(x)
                        .ok_or_else(|| PolyError::NotInvertible(v.name()))?
                } else {
                    x.clone()
                };
                for _ in 0..e.unsigned_abs() {
                    t = t * base.clone();
                }
            }
            total += &t;
        }
        Ok(total)
    }
}

impl QPoly {
    /// Converts to integer coefficients if every coefficient is integral.
    pub fn to_integer(&self) -> Option<ZPoly> {
        let mut out = ZPoly::zero();
        for (m, c) in self.terms() {
            if !c.is_integer() {
                return None;
            }
            out.add_term(m.clone(), &c.to_integer());
        }
        Some(out)
    }
}

impl<C: Coeff> Add<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<C: Coeff> Sub<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), &(x.clone() * y.clone()));
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$f(rhs)
            }
        }
        impl<C: Coeff> $tr<Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<C: Coeff> std::iter::Product for Polynomial<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_poly(self))
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> From<Var> for Polynomial<C> {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }
}
