use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::ChernError;
use crate::exactmath::{binomial, FinAbGroup};
use crate::ktheory::{
    build_presentation, eliminate_mu, hopf_class_order, hopf_order_bounds, k0_gb, lambda_var,
    mu_var, theta_var, GrassmannParams,
};
use crate::poly::{Monomial, Var, ZPoly};
use crate::zgb::{quotient_group_structure, strong_groebner, Budget, IdealPresentation, StrongGB};

/// Where the exponent `nu` of the base ring came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NuSource {
    Given,
    /// Exact order of `theta - 1` in `K^0` (`n = 0 mod 4`, `k` odd).
    HopfClassOrder,
    /// Upper bound `2l + 1` on the order of the Hopf class (`n` not divisible by 4).
    HopfOrderBound,
    /// The general bound `m + 1` (`n = 0 mod 4`, `k` even).
    GeneralBound,
}

pub fn default_nu(n: usize, k: usize) -> Result<(u32, NuSource), ChernError> {
    let p = GrassmannParams::new(n, k)?;
    if p.is_exact_case() {
        Ok((hopf_class_order(n, k)?.max(1), NuSource::HopfClassOrder))
    } else if p.j != 0 {
        Ok((hopf_order_bounds(n, k)?.1 as u32, NuSource::HopfOrderBound))
    } else {
        Ok((p.m as u32 + 1, NuSource::GeneralBound))
    }
}

/// `K_{n,k} = A[lambda_1..lambda_k, mu_1..mu_{n-k}] / I` over
/// `A = Z[theta] / (theta^2 - 1, 2^nu (1 - theta))`.
#[derive(Clone, Debug)]
pub struct KnkPresentation {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub nu: u32,
    pub nu_source: NuSource,
    pub theta: Var,
    /// `lambda_{k-p} - theta lambda_p` and `mu_{n-k-q} - theta mu_q`, in all variables.
    pub reflections: Vec<ZPoly>,
    /// `Q_r - (n choose r)` for `r = 1..=n`, in all variables.
    pub q_relations: Vec<ZPoly>,
}

fn full_class(p: usize, top: usize, var: fn(usize) -> Var) -> ZPoly {
    match p {
        0 => ZPoly::one(),
        _ if p <= top => ZPoly::var(var(p)),
        _ => ZPoly::zero(),
    }
}

pub fn build_knk(n: usize, k: usize) -> Result<KnkPresentation, ChernError> {
    build_knk_with(n, k, None)
}

pub fn build_knk_with(n: usize, k: usize, nu: Option<u32>) -> Result<KnkPresentation, ChernError> {
    if k == 0 || k >= n {
        return Err(ChernError::Params(format!("need 1 <= k < n, got ({n},{k})")));
    }
    let (nu, nu_source) = match nu {
        Some(0) => return Err(ChernError::Params("nu must be at least 1".into())),
        Some(v) => (v, NuSource::Given),
        None => default_nu(n, k)?,
    };
    let theta = ZPoly::var(theta_var());
    let mut reflections = Vec::new();
    for p in 1..=k {
        reflections.push(full_class(k - p, k, lambda_var) - &theta * full_class(p, k, lambda_var));
    }
    for q in 1..=n - k {
        reflections.push(full_class(n - k - q, n - k, mu_var) - &theta * full_class(q, n - k, mu_var));
    }
    let q_relations = (1..=n)
        .map(|r| {
            let q: ZPoly = (0..=r.min(k))
                .map(|p| full_class(p, k, lambda_var) * full_class(r - p, n - k, mu_var))
                .sum();
            q - ZPoly::constant(binomial(n as u64, r as u64))
        })
        .collect();
    Ok(KnkPresentation {
        n,
        k,
        s: k / 2,
        t: (n - k) / 2,
        nu,
        nu_source,
        theta: theta_var(),
        reflections,
        q_relations,
    })
}

impl KnkPresentation {
    /// `lambda_1..lambda_s, mu_1..mu_t, theta`: the generators left after the reflections.
    pub fn variables(&self) -> Vec<Var> {
        let mut v: Vec<Var> = (1..=self.s).map(lambda_var).collect();
        v.extend((1..=self.t).map(mu_var));
        v.push(self.theta);
        v
    }

    pub fn bar_variables(&self) -> Vec<Var> {
        let mut v = self.variables();
        v.pop();
        v
    }

    fn reflected(&self, p: usize, half: usize, top: usize, var: fn(usize) -> Var, theta: &ZPoly) -> ZPoly {
        match p {
            0 => ZPoly::one(),
            _ if p <= half => ZPoly::var(var(p)),
            _ if p <= top => theta * self.reflected(top - p, half, top, var, theta),
            _ => ZPoly::zero(),
        }
    }

    /// `lambda_p` in the generators, using `lambda_{k-p} = theta lambda_p`.
    pub fn lambda(&self, p: usize) -> ZPoly {
        self.reflected(p, self.s, self.k, lambda_var, &ZPoly::var(self.theta))
    }

    pub fn mu(&self, q: usize) -> ZPoly {
        self.reflected(q, self.t, self.n - self.k, mu_var, &ZPoly::var(self.theta))
    }

    /// The same classes with `theta = 1`.
    pub fn bar_lambda(&self, p: usize) -> ZPoly {
        self.reflected(p, self.s, self.k, lambda_var, &ZPoly::one())
    }

    pub fn bar_mu(&self, q: usize) -> ZPoly {
        self.reflected(q, self.t, self.n - self.k, mu_var, &ZPoly::one())
    }

    /// Sends `lambda_p` (`p > s`) and `mu_q` (`q > t`) to their reflected classes.
    pub fn reduction(&self) -> HashMap<Var, ZPoly> {
        let mut m = HashMap::new();
        for p in self.s + 1..=self.k {
            m.insert(lambda_var(p), self.lambda(p));
        }
        for q in self.t + 1..=self.n - self.k {
            m.insert(mu_var(q), self.mu(q));
        }
        m
    }

    pub fn base_relations(&self) -> Vec<ZPoly> {
        let theta = ZPoly::var(self.theta);
        vec![
            theta.pow(2) - ZPoly::one(),
            (ZPoly::one() - theta).scale(&(BigInt::one() << self.nu)),
        ]
    }

    /// Ideal generators in `variables()`.
    pub fn generators(&self) -> Vec<ZPoly> {
        let red = self.reduction();
        let mut g = self.base_relations();
        for f in self.reflections.iter().chain(&self.q_relations) {
            let r = f.substitute(&red).expect("substitution");
            if !r.is_zero() && !g.contains(&r) {
                g.push(r);
            }
        }
        g
    }

    /// Ideal generators of `Kbar = K tensor_A Z` in `bar_variables()`.
    pub fn bar_generators(&self) -> Vec<ZPoly> {
        let mut red = self.reduction();
        for v in red.values_mut() {
            *v = v.substitute(&HashMap::from([(self.theta, ZPoly::one())])).expect("substitution");
        }
        let mut g = Vec::new();
        for f in &self.q_relations {
            let r = f.substitute(&red).expect("substitution");
            if !r.is_zero() && !g.contains(&r) {
                g.push(r);
            }
        }
        g
    }

    pub fn groebner(&self, budget: Budget) -> Result<StrongGB<BigInt>, ChernError> {
        Ok(strong_groebner(&IdealPresentation::new(self.variables(), self.generators()), budget)?)
    }

    pub fn bar_groebner(&self, budget: Budget) -> Result<StrongGB<BigInt>, ChernError> {
        Ok(strong_groebner(
            &IdealPresentation::new(self.bar_variables(), self.bar_generators()),
            budget,
        )?)
    }

    /// `mu_1..mu_t` solved from `Q_1..Q_t` in terms of `lambda` and `theta`.
    pub fn mu_in_lambdas(&self) -> Vec<ZPoly> {
        let mut e: Vec<ZPoly> = vec![ZPoly::one()];
        for r in 1..=self.t {
            let mut x = ZPoly::constant(binomial(self.n as u64, r as u64));
            for p in 1..=r {
                x = x - self.lambda(p) * &e[r - p];
            }
            e.push(x);
        }
        e.remove(0);
        e
    }

    /// Every `mu_q` equals its expression in the `lambda` and `theta`.
    pub fn generated_by_lambdas(&self, gb: &StrongGB<BigInt>) -> Result<bool, ChernError> {
        for (i, e) in self.mu_in_lambdas().into_iter().enumerate() {
            if !gb.contains(&(ZPoly::var(mu_var(i + 1)) - e))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn report(&self, budget: Budget) -> Result<KnkReport, ChernError> {
        let gb = self.groebner(budget)?;
        let group = quotient_group_structure(&gb)?.group;
        let bar = quotient_group_structure(&self.bar_groebner(budget)?)?.group;
        let expected = binomial((self.s + self.t) as u64, self.s as u64);
        let bar_rank_ok = BigInt::from(bar.rank) == expected && bar.torsion.is_empty();
        let generated_by_lambdas = self.generated_by_lambdas(&gb)?;
        Ok(KnkReport {
            n: self.n,
            k: self.k,
            nu: self.nu,
            nu_source: self.nu_source,
            generators: self.generators().iter().map(|g| g.to_string()).collect(),
            group,
            bar_group: bar,
            expected_bar_rank: expected.try_into().expect("small binomial"),
            bar_rank_ok,
            generated_by_lambdas,
            pass: bar_rank_ok && generated_by_lambdas,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KnkReport {
    pub n: usize,
    pub k: usize,
    pub nu: u32,
    pub nu_source: NuSource,
    pub generators: Vec<String>,
    pub group: FinAbGroup,
    pub bar_group: FinAbGroup,
    pub expected_bar_rank: usize,
    pub bar_rank_ok: bool,
    pub generated_by_lambdas: bool,
    pub pass: bool,
}

struct BarRing {
    pres: KnkPresentation,
    gb: StrongGB<BigInt>,
}

impl BarRing {
    fn new(n: usize, k: usize) -> Result<Self, ChernError> {
        // nu plays no role once theta = 1
        let pres = build_knk_with(n, k, Some(1))?;
        let gb = pres.bar_groebner(Budget::unlimited())?;
        Ok(BarRing { pres, gb })
    }

    fn generator_classes(&self) -> Vec<(Var, ZPoly)> {
        let p = &self.pres;
        (1..=p.s)
            .map(|i| (lambda_var(i), p.bar_lambda(i)))
            .chain((1..=p.t).map(|j| (mu_var(j), p.bar_mu(j))))
            .collect()
    }

    fn equal(&self, a: &ZPoly, b: &ZPoly) -> Result<bool, ChernError> {
        Ok(self.gb.contains(&(a - b))?)
    }
}

/// A ring map given by the images of `lambda_1..lambda_s, mu_1..mu_t`.
type BarMap = HashMap<Var, ZPoly>;

fn apply(map: &BarMap, f: &ZPoly) -> Result<ZPoly, ChernError> {
    Ok(f.apply_hom(map)?)
}

fn well_defined(map: &BarMap, src: &BarRing, dst: &BarRing) -> Result<bool, ChernError> {
    for g in src.pres.bar_generators() {
        if !dst.gb.contains(&apply(map, &g)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fixes_generators(first: &BarMap, second: &BarMap, ring: &BarRing) -> Result<bool, ChernError> {
    for (_, g) in ring.generator_classes() {
        if !ring.equal(&apply(second, &apply(first, &g)?)?, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn alternating(class: impl Fn(usize) -> ZPoly, q: usize) -> ZPoly {
    (0..=q)
        .map(|j| {
            let c = class(j);
            if (q - j).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct Eq22Report {
    pub s: usize,
    pub t: usize,
    /// `(n, k)` of the three rings.
    pub rings: [(usize, usize); 3],
    pub ranks: [usize; 3],
    pub torsion_free: bool,
    pub expected_rank: usize,
    pub alpha0_well_defined: bool,
    pub beta0_well_defined: bool,
    pub alpha1_well_defined: bool,
    pub beta1_well_defined: bool,
    pub inverse0: bool,
    pub inverse1: bool,
    /// The shift formulas also hold for the reflected classes.
    pub formulas_all_indices: bool,
    pub pass: bool,
}

/// `Kbar(2s+2t+2, 2s+1) -> Kbar(2s+2t+1, 2s+1) -> Kbar(2s+2t, 2s)` are ring isomorphisms.
pub fn verify_eq22_chain(s: usize, t: usize) -> Result<Eq22Report, ChernError> {
    if s == 0 || t == 0 {
        return Err(ChernError::Params(format!("need s, t >= 1, got ({s},{t})")));
    }
    let dims = [(2 * s + 2 * t + 2, 2 * s + 1), (2 * s + 2 * t + 1, 2 * s + 1), (2 * s + 2 * t, 2 * s)];
    let [a, b, c] = dims.map(|(n, k)| BarRing::new(n, k));
    let (a, b, c) = (a?, b?, c?);

    let mut alpha0 = BarMap::new();
    let mut beta0 = BarMap::new();
    let mut alpha1 = BarMap::new();
    let mut beta1 = BarMap::new();
    for p in 1..=s {
        alpha0.insert(lambda_var(p), b.pres.bar_lambda(p));
        beta0.insert(lambda_var(p), a.pres.bar_lambda(p));
        alpha1.insert(lambda_var(p), c.pres.bar_lambda(p) + c.pres.bar_lambda(p - 1));
        beta1.insert(lambda_var(p), alternating(|j| b.pres.bar_lambda(j), p));
    }
    for q in 1..=t {
        alpha0.insert(mu_var(q), b.pres.bar_mu(q) + b.pres.bar_mu(q - 1));
        beta0.insert(mu_var(q), alternating(|j| a.pres.bar_mu(j), q));
        alpha1.insert(mu_var(q), c.pres.bar_mu(q));
        beta1.insert(mu_var(q), b.pres.bar_mu(q));
    }

    let mut formulas_all_indices = true;
    for q in 1..=a.pres.n - a.pres.k + 1 {
        let lhs = apply(&alpha0, &a.pres.bar_mu(q))?;
        formulas_all_indices &= b.equal(&lhs, &(b.pres.bar_mu(q) + b.pres.bar_mu(q - 1)))?;
    }
    for p in 1..=b.pres.k + 1 {
        let lhs = apply(&alpha1, &b.pres.bar_lambda(p))?;
        formulas_all_indices &= c.equal(&lhs, &(c.pres.bar_lambda(p) + c.pres.bar_lambda(p - 1)))?;
    }

    let groups = [&a, &b, &c].map(|r| quotient_group_structure(&r.gb).map(|g| g.group));
    let groups = [groups[0].clone()?, groups[1].clone()?, groups[2].clone()?];
    let expected: usize = binomial((s + t) as u64, s as u64).try_into().expect("small binomial");
    let ranks = groups.clone().map(|g| g.rank);
    let torsion_free = groups.iter().all(|g| g.torsion.is_empty());

    let alpha0_well_defined = well_defined(&alpha0, &a, &b)?;
    let beta0_well_defined = well_defined(&beta0, &b, &a)?;
    let alpha1_well_defined = well_defined(&alpha1, &b, &c)?;
    let beta1_well_defined = well_defined(&beta1, &c, &b)?;
    let inverse0 = fixes_generators(&alpha0, &beta0, &a)? && fixes_generators(&beta0, &alpha0, &b)?;
    let inverse1 = fixes_generators(&alpha1, &beta1, &b)? && fixes_generators(&beta1, &alpha1, &c)?;
    let pass = alpha0_well_defined
        && beta0_well_defined
        && alpha1_well_defined
        && beta1_well_defined
        && inverse0
        && inverse1
        && formulas_all_indices
        && torsion_free
        && ranks.iter().all(|&r| r == expected);
    Ok(Eq22Report {
        s,
        t,
        rings: dims,
        ranks,
        torsion_free,
        expected_rank: expected,
        alpha0_well_defined,
        beta0_well_defined,
        alpha1_well_defined,
        beta1_well_defined,
        inverse0,
        inverse1,
        formulas_all_indices,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub n: usize,
    pub k: usize,
    pub nu: u32,
    pub nu_source: NuSource,
    pub well_defined: bool,
    pub surjective: bool,
    pub knk_group: FinAbGroup,
    pub k0_group: FinAbGroup,
    pub ranks_equal: bool,
    pub pass: bool,
}

/// The map `kappa: K_{n,k} -> K^0 = S/I`, `lambda_p -> theta^p lambda_p`,
/// `mu_q -> theta^q mu_q`, `theta -> theta`.
pub fn compare_knk_k0(n: usize, k: usize) -> Result<CompareReport, ChernError> {
    GrassmannParams::exact(n, k)?;
    let knk = build_knk(n, k)?;
    let red = eliminate_mu(&build_presentation(n, k)?)?;
    let k0 = k0_gb(&red, Budget::unlimited())?;

    let theta = ZPoly::var(red.theta);
    let twist = |j: usize| theta.pow((j % 2) as u32);
    let mut kappa: HashMap<Var, ZPoly> = HashMap::new();
    for p in 1..=knk.s {
        kappa.insert(lambda_var(p), twist(p) * ZPoly::var(lambda_var(p)));
    }
    for q in 1..=knk.t {
        kappa.insert(mu_var(q), twist(q) * red.mu_images[q - 1].clone());
    }
    kappa.insert(knk.theta, theta.clone());

    let mut well_defined = true;
    for g in knk.generators() {
        well_defined &= k0.contains(&g.apply_hom(&kappa)?)?;
    }

    // lambda^a theta^e = kappa(lambda^a theta^(e + sum p a_p))
    let mut surjective = true;
    for m in &k0.group.monomial_generators {
        let shift: i32 = m
            .pairs()
            .iter()
            .filter(|(v, _)| *v != red.theta)
            .map(|(v, e)| {
                let p = red.lambdas.iter().position(|l| l == v).expect("lambda variable") + 1;
                p as i32 * e
            })
            .sum();
        let e = m.exponent(red.theta);
        let pairs = m
            .pairs()
            .iter()
            .copied()
            .filter(|(v, _)| *v != red.theta)
            .chain([(knk.theta, (shift + e) % 2)]);
        let pre = ZPoly::term(Monomial::from_pairs(pairs), BigInt::one());
        surjective &= k0.contains(&(pre.apply_hom(&kappa)? - ZPoly::term(m.clone(), BigInt::one())))?;
    }

    let knk_group = quotient_group_structure(&knk.groebner(Budget::unlimited())?)?.group;
    let k0_group = k0.group.group.clone();
    let ranks_equal = knk_group.rank == k0_group.rank;
    Ok(CompareReport {
        n,
        k,
        nu: knk.nu,
        nu_source: knk.nu_source,
        well_defined,
        surjective,
        ranks_equal,
        pass: well_defined && surjective && ranks_equal,
        knk_group,
        k0_group,
    })
}
