//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls into the library's linear algebra: the oracles work from
//! raw entries so that agreement is meaningful.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use adelink::linalg::IntMatrix;
use adelink::plumbing::{Edge, PlumbingGraph, Vertex};
use adelink::smale::Quaternion;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

type Dense = Vec<Vec<BigInt>>;

fn dense(a: &IntMatrix) -> Dense {
    a.to_rows()
}

fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum()).collect()).collect()
}

fn trace(a: &Dense) -> BigInt {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Faddeev–LeVerrier. Returns `(c, adj)` with `det(xI - A) = Σ c[k] x^k` and
/// `adj` the adjugate of `A`.
pub fn charpoly_and_adjugate(a: &IntMatrix) -> (Vec<BigInt>, Dense) {
    let n = a.rows();
    assert!(a.is_square() && n > 0);
    let a = dense(a);
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let ident: Dense =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut m = ident.clone();
    for k in 1..=n {
        if k > 1 {
            m = mat_mul(&a, &m);
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
        }
        let t = trace(&mat_mul(&a, &m));
        let (q, r) = (-t).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "non-integral Faddeev–LeVerrier coefficient");
        c[n - k] = q;
    }
    let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let adj = m.into_iter().map(|row| row.into_iter().map(|x| &sign * x).collect()).collect();
    (c, adj)
}

pub fn oracle_determinant(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    let (c, _) = charpoly_and_adjugate(a);
    if n.is_multiple_of(2) {
        c[0].clone()
    } else {
        -&c[0]
    }
}

fn sign_changes(coeffs: &[BigInt]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix from
/// Descartes' rule of signs, which is exact when every root is real.
pub fn oracle_inertia(a: &IntMatrix) -> (usize, usize, usize) {
    let (c, _) = charpoly_and_adjugate(a);
    let zero = c.iter().position(|x| !x.is_zero()).unwrap();
    let q = &c[zero..];
    let pos = sign_changes(q);
    let flipped: Vec<BigInt> = q.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() }).collect();
    let neg = sign_changes(&flipped);
    assert_eq!(pos + neg + zero, a.rows(), "characteristic polynomial is not real-rooted");
    (pos, neg, zero)
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of `Z^n / A Z^n` for nonsingular `A`, by enumerating the
/// cosets and counting elements of each prime-power order.
///
/// `v ↦ adj(A) v mod det` is injective on the quotient, so its image is a
/// faithful copy of the group.
pub fn oracle_cokernel_factors(a: &IntMatrix) -> Vec<u64> {
    let n = a.rows();
    let det = oracle_determinant(a).abs();
    assert!(!det.is_zero());
    let d = det.to_u64().unwrap();
    let (_, adj) = charpoly_and_adjugate(a);
    let gens: Vec<Vec<u64>> =
        (0..n).map(|j| (0..n).map(|i| adj[i][j].mod_floor(&det).to_u64().unwrap()).collect()).collect();

    let zero = vec![0u64; n];
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(x, y)| (x + y) % d).collect();
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    assert_eq!(seen.len() as u64, d, "coset count differs from |det|");

    let order = |v: &Vec<u64>| -> u64 { v.iter().fold(1u64, |acc, &x| acc.lcm(&(d / x.gcd(&d)))) };
    let orders: Vec<u64> = seen.iter().map(order).collect();

    // exponents[p] = partition of the p-part, largest first
    let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (p, e_total) in factorize(d) {
        let count = |j: u32| orders.iter().filter(|&&o| p.pow(j) % o == 0).count() as u64;
        // at_least[j-1] = number of cyclic factors of exponent >= j
        let mut at_least = Vec::new();
        for j in 1..=e_total {
            let ratio = count(j) / count(j - 1);
            at_least.push(ratio.ilog(p));
        }
        let m = at_least[0] as usize;
        let mut exps = vec![0u32; m];
        for (j, &k) in at_least.iter().enumerate() {
            for e in exps.iter_mut().take(k as usize) {
                *e = j as u32 + 1;
            }
        }
        parts.insert(p, exps);
    }
    let len = parts.values().map(Vec::len).max().unwrap_or(0);
    // factor k from the top takes the k-th largest exponent of every prime
    let mut factors: Vec<u64> =
        (0..len).map(|k| parts.iter().map(|(p, exps)| exps.get(k).map_or(1, |&e| p.pow(e))).product()).collect();
    factors.reverse();
    factors
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows * cols).map(|_| big(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-bound..=bound);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    IntMatrix::from_rows(&rows)
}

/// Random plumbing tree on at most `max_vertices` vertices with weights in
/// `[-4, -1]` and random edge signs, resampled until the form is negative
/// definite by the characteristic-polynomial oracle.
pub fn random_negative_definite_tree(rng: &mut impl Rng, max_vertices: usize) -> PlumbingGraph {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let vertices: Vec<Vertex> = (0..n).map(|i| Vertex { id: i as i64, weight: rng.gen_range(-4..=-1) }).collect();
        let edges: Vec<Edge> = (1..n)
            .map(|i| Edge { a: rng.gen_range(0..i) as i64, b: i as i64, sign: if rng.gen_bool(0.5) { 1 } else { -1 } })
            .collect();
        let g = PlumbingGraph::new(vertices, edges).unwrap();
        let (_, neg, _) = oracle_inertia(&g.intersection_matrix());
        if neg == n {
            return g;
        }
    }
}

/// Unit quaternion from inverse stereographic projection of a random rational point of `R³`.
pub fn random_unit_quaternion(rng: &mut impl Rng) -> Quaternion {
    let den = rng.gen_range(1..=7i64);
    let u: Vec<BigRational> = (0..3).map(|_| BigRational::new(big(rng.gen_range(-9..=9)), big(den))).collect();
    let s: BigRational = u.iter().map(|x| x * x).sum();
    let one = BigRational::one();
    let d = &s + &one;
    let two = BigRational::from_integer(big(2));
    let q = Quaternion::new((&s - &one) / &d, &two * &u[0] / &d, &two * &u[1] / &d, &two * &u[2] / &d);
    if rng.gen_bool(0.5) {
        -&q
    } else {
        q
    }
}

pub type RatMat4 = [[BigRational; 4]; 4];

pub fn rat_mat_mul(a: &RatMat4, b: &RatMat4) -> RatMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| &a[i][k] * &b[k][j]).sum()))
}

pub fn rat_transpose(a: &RatMat4) -> RatMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

pub fn rat_identity() -> RatMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
}

/// Determinant by Gaussian elimination over `Q`.
pub fn rat_det(a: &RatMat4) -> BigRational {
    let mut m = a.clone();
    let mut det = BigRational::one();
    for k in 0..4 {
        let Some(p) = (k..4).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= &m[k][k];
        for r in k + 1..4 {
            let f = &m[r][k] / &m[k][k];
            for c in k..4 {
                let sub = &f * &m[k][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

pub fn oracle_mul(a: &IntMatrix, b: &IntMatrix) -> Vec<Vec<BigInt>> {
    assert_eq!(a.cols(), b.rows());
    if a.rows() == 0 || b.cols() == 0 {
        return vec![Vec::new(); a.rows()];
    }
    if a.cols() == 0 {
        return vec![vec![BigInt::zero(); b.cols()]; a.rows()];
    }
    mat_mul(&dense(a), &dense(b))
}

/// Checks `U A V = S`, `det U, det V = ±1`, `S` diagonal with a nonnegative
/// divisibility chain followed by zeros.
pub fn check_smith(a: &IntMatrix) -> Result<(), String> {
    let d = adelink::linalg::smith_normal_form(a);
    let uav = oracle_mul(&IntMatrix::new(a.rows(), a.cols(), oracle_mul(&d.u, a).concat()).unwrap(), &d.v);
    if uav != d.s.to_rows() {
        return Err(format!("U A V != S for {a}"));
    }
    for (name, m) in [("U", &d.u), ("V", &d.v)] {
        if m.rows() > 0 && oracle_determinant(m).abs() != BigInt::one() {
            return Err(format!("{name} is not unimodular for {a}"));
        }
    }
    for i in 0..d.s.rows() {
        for j in 0..d.s.cols() {
            if i != j && !d.s[(i, j)].is_zero() {
                return Err(format!("S is not diagonal for {a}"));
            }
        }
    }
    let diag: Vec<BigInt> = (0..a.rows().min(a.cols())).map(|i| d.s[(i, i)].clone()).collect();
    if diag.iter().any(|x| x.is_negative()) {
        return Err(format!("negative diagonal entry for {a}"));
    }
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
        if !ok {
            return Err(format!("divisibility chain broken for {a}: {diag:?}"));
        }
    }
    Ok(())
}
