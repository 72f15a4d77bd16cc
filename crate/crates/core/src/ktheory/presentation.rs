use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{GrassmannParams, KError};
use crate::exactmath::binomial;
use crate::poly::{Var, ZPoly};

pub fn lambda_var(p: usize) -> Var {
    Var::indexed("lambda", p)
}

pub fn mu_var(q: usize) -> Var {
    Var::indexed("mu", q)
}

pub fn theta_var() -> Var {
    Var::new("theta")
}

pub fn delta_var() -> Var {
    Var::new("Delta")
}

fn theta() -> ZPoly {
    ZPoly::var(theta_var())
}

/// `lambda_p` with `lambda_0 = 1`, `lambda_{k-p} = lambda_p` and zero outside `[0, k]`.
pub fn lambda_class(params: &GrassmannParams, p: usize) -> ZPoly {
    reflected(p, params.s, params.k, lambda_var)
}

/// `mu_q` with `mu_0 = 1`, `mu_{n-k-q} = mu_q` and zero outside `[0, n-k]`.
pub fn mu_class(params: &GrassmannParams, q: usize) -> ZPoly {
    reflected(q, params.t, params.n - params.k, mu_var)
}

fn reflected(p: usize, half: usize, top: usize, var: fn(usize) -> Var) -> ZPoly {
    match p {
        0 => ZPoly::one(),
        _ if p <= half => ZPoly::var(var(p)),
        _ if p <= top => reflected(top - p, half, top, var),
        _ => ZPoly::zero(),
    }
}

/// `f_j = sum_{p+q=j} lambda_p mu_q`.
pub fn f_class(params: &GrassmannParams, j: usize) -> ZPoly {
    (0..=j)
        .map(|p| lambda_class(params, p) * mu_class(params, j - p))
        .sum()
}

/// `f_{s,t} = (sum_{p<=s} lambda_p)(sum_{q<=t} mu_q)`, the square of the spin class.
pub fn f_st(params: &GrassmannParams) -> ZPoly {
    let a: ZPoly = (0..=params.s).map(|p| lambda_class(params, p)).sum();
    let b: ZPoly = (0..=params.t).map(|q| mu_class(params, q)).sum();
    a * b
}

fn theta_pow(j: usize) -> ZPoly {
    theta().pow(j as u32)
}

/// The relation `f_j - (n choose j) theta^j`.
pub fn f_relation(params: &GrassmannParams, j: usize) -> ZPoly {
    f_class(params, j) - theta_pow(j).scale(&binomial(params.n as u64, j as u64))
}

/// `2^(m-1) (theta - 1)`
pub fn hopf_relation(params: &GrassmannParams) -> ZPoly {
    (theta() - ZPoly::one()).scale(&params.two_pow_m1())
}

fn theta_square_relation() -> ZPoly {
    theta_pow(2) - ZPoly::one()
}

/// `S / I` and `S / I~` for `S = Z[lambda_1..lambda_s, mu_1..mu_t, theta]`.
#[derive(Clone, Debug)]
pub struct KPresentation {
    pub params: GrassmannParams,
    pub lambdas: Vec<Var>,
    pub mus: Vec<Var>,
    pub theta: Var,
    /// `f_j - (n choose j) theta^j` for `j = 1..m-1`.
    pub f_relations: Vec<ZPoly>,
    pub ideal_i: Vec<ZPoly>,
    pub ideal_itilde: Vec<ZPoly>,
}

impl KPresentation {
    pub fn variables(&self) -> Vec<Var> {
        let mut v = self.lambdas.clone();
        v.extend(&self.mus);
        v.push(self.theta);
        v
    }

    /// Images under `theta -> 1`, `lambda_p -> (k choose p)`, `mu_q -> (n-k choose q)`.
    pub fn augmentation(&self) -> HashMap<Var, BigInt> {
        let p = &self.params;
        let mut values = HashMap::new();
        values.insert(self.theta, BigInt::from(1));
        for (i, &v) in self.lambdas.iter().enumerate() {
            values.insert(v, binomial(p.k as u64, i as u64 + 1));
        }
        for (i, &v) in self.mus.iter().enumerate() {
            values.insert(v, binomial((p.n - p.k) as u64, i as u64 + 1));
        }
        values
    }

    /// Generators of `I` that do not vanish under the augmentation.
    pub fn augmentation_failures(&self) -> Vec<ZPoly> {
        let values = self.augmentation();
        self.ideal_i
            .iter()
            .filter(|g| !g.evaluate(&values).map(|x| x.is_zero()).unwrap_or(false))
            .cloned()
            .collect()
    }
}

pub fn build_presentation(n: usize, k: usize) -> Result<KPresentation, KError> {
    let params = GrassmannParams::exact(n, k)?;
    let f_relations: Vec<ZPoly> = (1..params.m).map(|j| f_relation(&params, j)).collect();
    let mut ideal_itilde = vec![theta_square_relation()];
    ideal_itilde.extend(f_relations.iter().cloned());
    let mut ideal_i = vec![theta_square_relation(), hopf_relation(&params)];
    ideal_i.extend(f_relations.iter().cloned());
    let pres = KPresentation {
        params,
        lambdas: (1..=params.s).map(lambda_var).collect(),
        mus: (1..=params.t).map(mu_var).collect(),
        theta: theta_var(),
        f_relations,
        ideal_i,
        ideal_itilde,
    };
    let bad = pres.augmentation_failures();
    if !bad.is_empty() {
        return Err(KError::Internal(format!(
            "augmentation does not kill {}",
            bad[0]
        )));
    }
    Ok(pres)
}

/// The presentation after solving the first `t` relations for `mu_1..mu_t`.
#[derive(Clone, Debug)]
pub struct ReducedPresentation {
    pub params: GrassmannParams,
    pub lambdas: Vec<Var>,
    pub theta: Var,
    /// `mu_q` as a polynomial in `theta, lambda`, for `q = 1..t`.
    pub mu_images: Vec<ZPoly>,
    /// `g_j` for `j = t+1..m-1`.
    pub residual: Vec<ZPoly>,
}

impl ReducedPresentation {
    /// Ring variables with `theta` last.
    pub fn variables(&self) -> Vec<Var> {
        let mut v = self.lambdas.clone();
        v.push(self.theta);
        v
    }

    pub fn substitution(&self) -> HashMap<Var, ZPoly> {
        self.mu_images
            .iter()
            .enumerate()
            .map(|(i, e)| (mu_var(i + 1), e.clone()))
            .collect()
    }

    /// Image of a polynomial of `S` under the elimination map.
    pub fn map(&self, f: &ZPoly) -> ZPoly {
        f.substitute(&self.substitution())
            .expect("polynomial substitution")
    }

    pub fn itilde(&self) -> Vec<ZPoly> {
        let mut g = vec![theta_square_relation()];
        g.extend(self.residual.iter().cloned());
        g
    }

    pub fn ideal_i(&self) -> Vec<ZPoly> {
        let mut g = vec![theta_square_relation(), hopf_relation(&self.params)];
        g.extend(self.residual.iter().cloned());
        g
    }
}

pub fn eliminate_mu(pres: &KPresentation) -> Result<ReducedPresentation, KError> {
    let params = pres.params;
    let mut images: Vec<ZPoly> = Vec::with_capacity(params.t);
    // mu_j = (n choose j) theta^j - sum_{p>=1} lambda_p mu_{j-p}
    for j in 1..=params.t {
        let mut e = theta_pow(j).scale(&binomial(params.n as u64, j as u64));
        for p in 1..=j {
            let prev = if p == j {
                ZPoly::one()
            } else {
                images[j - p - 1].clone()
            };
            e = e - lambda_class(&params, p) * prev;
        }
        images.push(e);
    }
    let reduced = ReducedPresentation {
        params,
        lambdas: pres.lambdas.clone(),
        theta: pres.theta,
        mu_images: images,
        residual: Vec::new(),
    };
    let residual = pres.f_relations[params.t..]
        .iter()
        .map(|g| reduced.map(g))
        .collect();
    let reduced = ReducedPresentation {
        residual,
        ..reduced
    };
    check_elimination(pres, &reduced)?;
    Ok(reduced)
}

/// Both directions of the isomorphism `S/I~ = S'/I~'`: the elimination map
/// sends the first `t` relations to zero and the rest onto the residual ones,
/// and `mu_j - e_j` lies in the ideal of the first `j` relations by the identity
/// `rel_j = sum_{p=0}^{j} lambda_p (mu_{j-p} - e_{j-p})`.
fn check_elimination(pres: &KPresentation, red: &ReducedPresentation) -> Result<(), KError> {
    let params = pres.params;
    for (idx, g) in pres.f_relations.iter().enumerate() {
        let img = red.map(g);
        let ok = if idx < params.t {
            img.is_zero()
        } else {
            img == red.residual[idx - params.t]
        };
        if !ok {
            return Err(KError::Internal(format!(
                "elimination does not map relation {} correctly",
                idx + 1
            )));
        }
    }
    let diff = |q: usize| -> ZPoly {
        if q == 0 {
            ZPoly::zero()
        } else {
            ZPoly::var(mu_var(q)) - red.mu_images[q - 1].clone()
        }
    };
    for j in 1..=params.t {
        let combo: ZPoly = (0..=j)
            .map(|p| lambda_class(&params, p) * diff(j - p))
            .sum();
        if combo != pres.f_relations[j - 1] {
            return Err(KError::Internal(format!(
                "triangular certificate fails at j={j}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn first_relation_for_8_3() {
        let pres = build_presentation(8, 3).unwrap();
        assert_eq!(pres.f_relations[0], p("lambda1 + mu1 - 8*theta"));
        assert_eq!(pres.f_relations.len(), 3);
        assert_eq!(pres.ideal_i.len(), 5);
        assert_eq!(pres.ideal_itilde.len(), 4);
        let aug = pres.augmentation();
        assert_eq!(aug[&lambda_var(1)], BigInt::from(3));
        assert_eq!(aug[&mu_var(1)], BigInt::from(5));
    }

    #[test]
    fn reflections() {
        let params = GrassmannParams::exact(8, 3).unwrap();
        assert_eq!(lambda_class(&params, 2), p("lambda1"));
        assert_eq!(lambda_class(&params, 3), ZPoly::one());
        assert!(lambda_class(&params, 4).is_zero());
        assert_eq!(mu_class(&params, 3), p("mu2"));
        assert_eq!(mu_class(&params, 5), ZPoly::one());
        // f_3 = mu3 + l1 mu2 + l2 mu1 + l3 = mu2 + l1 mu2 + l1 mu1 + 1
        assert_eq!(
            f_class(&params, 3),
            p("mu2 + lambda1*mu2 + lambda1*mu1 + 1")
        );
    }

    #[test]
    fn presentation_12_5() {
        let pres = build_presentation(12, 5).unwrap();
        assert_eq!(pres.f_relations.len(), 5);
        let names: Vec<String> = pres.variables().iter().map(|v| v.name()).collect();
        assert_eq!(names, ["lambda1", "lambda2", "mu1", "mu2", "mu3", "theta"]);
    }

    #[test]
    fn unsupported_parity_is_rejected() {
        assert!(matches!(
            build_presentation(10, 3),
            Err(KError::UnsupportedParity { .. })
        ));
        assert!(matches!(
            build_presentation(12, 4),
            Err(KError::UnsupportedParity { .. })
        ));
    }

    #[test]
    fn elimination_for_8_3() {
        let pres = build_presentation(8, 3).unwrap();
        let red = eliminate_mu(&pres).unwrap();
        assert_eq!(red.mu_images[0], p("8*theta - lambda1"));
        assert_eq!(
            red.mu_images[1],
            p("lambda1^2 - 8*theta*lambda1 - lambda1 + 28*theta^2")
        );
        assert_eq!(red.residual.len(), 1);
        let vars: Vec<String> = red.variables().iter().map(|v| v.name()).collect();
        assert_eq!(vars, ["lambda1", "theta"]);
    }

    #[test]
    fn elimination_residual_counts() {
        for (n, k, s) in [(8, 3, 1), (12, 3, 1), (12, 5, 2), (16, 7, 3)] {
            let red = eliminate_mu(&build_presentation(n, k).unwrap()).unwrap();
            assert_eq!(red.residual.len(), s, "n={n} k={k}");
        }
    }
}
