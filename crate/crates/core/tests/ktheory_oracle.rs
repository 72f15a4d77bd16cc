//! An independent small-integer model of `S/I` for `k = 3`, used to pin the
//! full invariant factors of `K^0` and `K^1` that the paper only bounds.

use std::collections::BTreeMap;

use grassk::exactmath::FinAbGroup;
use grassk::ktheory::{compute_k0, compute_k1, Engine};
use num_bigint::BigInt;

// polynomials in lambda_1 and theta, theta^2 = 1 applied eagerly
type P = BTreeMap<(u32, u32), i128>;

fn add(a: &P, b: &P, sign: i128) -> P {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(*k).or_insert(0) += sign * v;
    }
    out.retain(|_, v| *v != 0);
    out
}

fn mul(a: &P, b: &P) -> P {
    let mut out = P::new();
    for ((i, e), x) in a {
        for ((j, f), y) in b {
            *out.entry((i + j, (e + f) % 2)).or_insert(0) += x * y;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn c(x: i128) -> P {
    P::from([((0, 0), x)])
}

fn mono(i: u32, e: u32) -> P {
    P::from([((i, e % 2), 1)])
}

fn binom(n: i128, k: i128) -> i128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `S/I~` for `k = 3`: returns the rewriting relation `g` of top lambda-degree `d`.
fn residual(n: u32) -> P {
    let k = 3u32;
    let t = (n - k - 1) / 2;
    let m = n / 2;
    let lam = |p: u32| -> P {
        match p {
            0 | 3 => c(1),
            1 | 2 => mono(1, 0),
            _ => P::new(),
        }
    };
    let mut mus: Vec<P> = vec![c(1)];
    for j in 1..=t {
        let mut e = P::from([((0, j % 2), binom(n as i128, j as i128))]);
        for p in 1..=j {
            e = add(&e, &mul(&lam(p), &mus[(j - p) as usize]), -1);
        }
        mus.push(e);
    }
    let mu = |q: u32| -> P {
        let top = n - k;
        if q <= t {
            mus[q as usize].clone()
        } else if q <= top {
            mus[(top - q) as usize].clone()
        } else {
            P::new()
        }
    };
    let j = m - 1;
    let mut f = P::new();
    for p in 0..=j {
        f = add(&f, &mul(&lam(p), &mu(j - p)), 1);
    }
    add(
        &f,
        &P::from([((0, j % 2), binom(n as i128, j as i128))]),
        -1,
    )
}

/// Rewrites lambda^d by the lower terms of `g` until every term has degree < d.
fn normal_form(mut f: P, g: &P) -> P {
    let d = g.keys().map(|k| k.0).max().unwrap();
    let lead: Vec<((u32, u32), i128)> = g
        .iter()
        .filter(|(k, _)| k.0 == d)
        .map(|(k, v)| (*k, *v))
        .collect();
    assert_eq!(lead.len(), 1, "leading form is a single unit term");
    let ((_, le), lc) = lead[0];
    assert!(lc == 1 || lc == -1);
    // lambda^d = -(lc theta^le)^{-1} (g - lead)
    let tail = add(g, &P::from([((d, le), lc)]), -1);
    let rule = mul(&P::from([((0, le), -lc)]), &tail);
    loop {
        let Some((&(i, e), &x)) = f.iter().rev().find(|(k, _)| k.0 >= d) else {
            return f;
        };
        f.remove(&(i, e));
        let repl = mul(&mul(&rule, &mono(i - d, e)), &c(x));
        f = add(&f, &repl, 1);
    }
}

fn smith_diagonal(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let (rows, cols) = (a.len(), a[0].len());
    let mut diag = Vec::new();
    for r in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in r..rows {
                for j in r..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return diag;
            };
            a.swap(r, bi);
            for row in a.iter_mut() {
                row.swap(r, bj);
            }
            let p = a[r][r];
            let mut clean = true;
            for i in r + 1..rows {
                let q = a[i][r] / p;
                for j in r..cols {
                    a[i][j] -= q * a[r][j];
                }
                clean &= a[i][r] == 0;
            }
            for j in r + 1..cols {
                let q = a[r][j] / p;
                for i in r..rows {
                    a[i][j] -= q * a[i][r];
                }
                clean &= a[r][j] == 0;
            }
            if clean {
                let bad = (r + 1..rows)
                    .flat_map(|i| (r + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in r..cols {
                            a[r][j] += a[i][j];
                        }
                    }
                    None => {
                        diag.push(p.abs());
                        break;
                    }
                }
            }
        }
    }
    diag
}

fn group_from(diag: Vec<i128>, gens: usize) -> FinAbGroup {
    let rank = gens - diag.len();
    let mut torsion: Vec<BigInt> = diag
        .into_iter()
        .filter(|&d| d != 1)
        .map(BigInt::from)
        .collect();
    torsion.sort();
    FinAbGroup { rank, torsion }
}

/// `(K^0, K^1)` for `(n, 3)` on the basis `{lambda^i, theta lambda^i}`, `i < m-1`.
fn oracle(n: u32) -> (FinAbGroup, FinAbGroup) {
    let m = n / 2;
    let g = residual(n);
    let d = g.keys().map(|k| k.0).max().unwrap();
    assert_eq!(d, m - 1);
    let basis: Vec<(u32, u32)> = (0..2).flat_map(|e| (0..d).map(move |i| (i, e))).collect();
    let coords = |f: &P| -> Vec<i128> { basis.iter().map(|k| *f.get(k).unwrap_or(&0)).collect() };
    let hopf = mul(&c(1 << (m - 1)), &add(&mono(0, 1), &c(1), -1));
    let plus = add(&mono(0, 1), &c(1), 1);
    let mut k0_rows = Vec::new();
    let mut k1_rows = Vec::new();
    for &(i, e) in &basis {
        // multiplying by lambda^d and reducing must not change the basis
        let b = mono(i, e);
        k0_rows.push(coords(&normal_form(mul(&hopf, &b), &g)));
        k1_rows.push(coords(&normal_form(mul(&plus, &b), &g)));
    }
    let k0 = group_from(smith_diagonal(k0_rows), basis.len());
    // K^1 is a subgroup of a free group: free of rank = rank of the image
    let k1_rank = smith_diagonal(k1_rows).len();
    (k0, FinAbGroup::free(k1_rank))
}

fn fab(rank: usize, t: &[i64]) -> FinAbGroup {
    FinAbGroup {
        rank,
        torsion: t.iter().map(|&x| BigInt::from(x)).collect(),
    }
}

#[test]
fn oracle_8_3_matches_frozen_values() {
    let (k0, k1) = oracle(8);
    assert_eq!(k0, fab(3, &[8, 8, 8]));
    assert_eq!(k1, fab(3, &[]));
}

#[test]
fn oracle_12_3_matches_frozen_values() {
    let (k0, k1) = oracle(12);
    assert_eq!(k0, fab(5, &[32; 5]));
    assert_eq!(k1, fab(5, &[]));
}

#[test]
fn engines_match_oracle() {
    for n in [8usize, 12] {
        let (k0, k1) = oracle(n as u32);
        for engine in [Engine::Gb, Engine::Schur] {
            assert_eq!(
                compute_k0(n, 3, engine).unwrap().group,
                k0,
                "n={n} {engine}"
            );
        }
        assert_eq!(compute_k1(n, 3).unwrap(), k1, "n={n}");
    }
}

#[test]
fn oracle_smith_sanity() {
    assert_eq!(smith_diagonal(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
    assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
}
