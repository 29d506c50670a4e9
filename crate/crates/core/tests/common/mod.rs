//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls the library's own derived quantities; the only
//! input taken from it is the Cartan matrix.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_traits::{One, Zero};
use rand::Rng;
use shimura::rootsys::{Family, RootSystemType};
use shimura::{QMatrix, Rational};

/// Highest roots read off the classification table, as coefficient vectors
/// in Bourbaki numbering. E8, F4 and G2 are from the standard plates.
pub fn table_highest_root(ty: RootSystemType) -> Vec<i64> {
    let n = ty.rank();
    match ty.family() {
        Family::A => vec![1; n],
        Family::B => (1..=n).map(|i| if i == 1 { 1 } else { 2 }).collect(),
        Family::C => (1..=n).map(|i| if i == n { 1 } else { 2 }).collect(),
        Family::D => (1..=n).map(|i| if i == 1 || i >= n - 1 { 1 } else { 2 }).collect(),
        Family::E => match n {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Family::F => vec![2, 3, 4, 2],
        Family::G => vec![3, 2],
    }
}

/// Special roots as listed in the classification table.
pub fn table_special_nodes(ty: RootSystemType) -> BTreeSet<usize> {
    let n = ty.rank();
    match (ty.family(), n) {
        (Family::A, _) => (1..=n).collect(),
        (Family::B, _) => [1].into(),
        (Family::C, _) => [n].into(),
        (Family::D, _) => [1, n - 1, n].into(),
        (Family::E, 6) => [1, 6].into(),
        (Family::E, 7) => [7].into(),
        _ => BTreeSet::new(),
    }
}

/// `(P : Q)` from the standard list, not from a determinant.
pub fn table_connection_index(ty: RootSystemType) -> u64 {
    let n = ty.rank() as u64;
    match (ty.family(), n) {
        (Family::A, _) => n + 1,
        (Family::B | Family::C, _) => 2,
        (Family::D, _) => 4,
        (Family::E, 6) => 3,
        (Family::E, 7) => 2,
        _ => 1,
    }
}

type IMat = Vec<Vec<i64>>;

fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Simple reflections acting on simple-root coordinates:
/// `s_i(x) = x − ⟨x, α_i^∨⟩ α_i` with `⟨x, α_i^∨⟩ = Σ_j cartan[i][j] x_j`.
fn simple_reflections(cartan: &[Vec<i64>]) -> Vec<IMat> {
    let n = cartan.len();
    (0..n)
        .map(|i| {
            let mut m: IMat = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
            for j in 0..n {
                m[i][j] -= cartan[i][j];
            }
            m
        })
        .collect()
}

/// The whole Weyl group as integer matrices, by breadth-first closure.
pub fn weyl_group(cartan: &[Vec<i64>]) -> Vec<IMat> {
    let n = cartan.len();
    let gens = simple_reflections(cartan);
    let id: IMat = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    let mut seen: HashSet<IMat> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let next = mat_mul(s, &w);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out
}

/// `τ` with `−w₀(α_j) = α_{τ(j)}`, from the element of the enumerated Weyl
/// group sending every simple root to a negative root.
pub fn opposition_from_weyl_group(cartan: &[Vec<i64>]) -> Vec<usize> {
    let n = cartan.len();
    let w0 = weyl_group(cartan)
        .into_iter()
        .find(|w| (0..n).all(|j| (0..n).all(|i| w[i][j] <= 0)))
        .expect("a longest element");
    (0..n)
        .map(|j| (0..n).position(|i| w0[i][j] == -1).expect("−w₀ permutes the simple roots") + 1)
        .collect()
}

/// `τ` without enumerating the group: reflect a regular dominant vector
/// until it is antidominant, accumulating `w₀`. Usable at any rank.
pub fn opposition_by_descent(cartan: &[Vec<i64>]) -> Vec<usize> {
    let n = cartan.len();
    let gens = simple_reflections(cartan);
    let mut w: IMat = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    let pair = |x: &[i64], i: usize| -> i64 { (0..n).map(|j| cartan[i][j] * x[j]).sum() };
    let mut x = regular_dominant(cartan);
    while let Some(i) = (0..n).find(|&i| pair(&x, i) > 0) {
        let c = pair(&x, i);
        x[i] -= c;
        w = mat_mul(&gens[i], &w);
    }
    (0..n)
        .map(|j| (0..n).position(|i| w[i][j] == -1).expect("−w₀ permutes the simple roots") + 1)
        .collect()
}

/// An integer vector `x` in root coordinates with `⟨x, α_i^∨⟩ > 0` for all
/// `i`: the smallest integral multiple of `A⁻¹·(1, …, 1)`.
fn regular_dominant(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let pair = |x: &[i64], i: usize| -> i64 { (0..n).map(|j| cartan[i][j] * x[j]).sum() };
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| Rational::from_integer(cartan[i][j].into())).collect();
            row.push(Rational::one());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("Cartan matrices are invertible");
        m.swap(c, p);
        let inv = Rational::one() / m[c][c].clone();
        for k in 0..=n {
            m[c][k] = m[c][k].clone() * inv.clone();
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..=n {
                    let t = m[c][k].clone() * f.clone();
                    m[r][k] = m[r][k].clone() - t;
                }
            }
        }
    }
    let sol: Vec<Rational> = (0..n).map(|r| m[r][n].clone()).collect();
    let den = sol.iter().fold(num_bigint::BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
    let x: Vec<i64> = sol
        .iter()
        .map(|q| i64::try_from(q.numer() * (&den / q.denom())).expect("small"))
        .collect();
    assert!((0..n).all(|i| pair(&x, i) > 0));
    x
}

/// All permutations `σ` of the nodes with `cartan[σi][σj] = cartan[i][j]`.
pub fn diagram_automorphisms(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        if (0..n).all(|i| (0..n).all(|j| cartan[p[i]][p[j]] == cartan[i][j])) {
            out.push(p.iter().map(|&k| k + 1).collect());
        }
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// For `V(ϖ_i)`, the set of values `⟨w, μ̄_s⟩` relative to the highest
/// weight, i.e. the `α_s`-depths of all weights. The weight set is
/// generated from `ϖ_i` by the `α_j`-strings, in Dynkin-label coordinates.
pub fn alpha_s_depths(cartan: &[Vec<i64>], i: usize, s: usize) -> BTreeSet<i64> {
    let n = cartan.len();
    // α_j in Dynkin labels is column j of the Cartan matrix
    let alpha = |j: usize| -> Vec<i64> { (0..n).map(|k| cartan[k][j]).collect() };
    let start: Vec<i64> = (0..n).map(|k| i64::from(k + 1 == i)).collect();
    let mut seen: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::from([(start.clone(), vec![0; n])]);
    let mut queue = VecDeque::from([start]);
    while let Some(mu) = queue.pop_front() {
        let depth = seen[&mu].clone();
        for j in 0..n {
            let a = alpha(j);
            // μ − kα_j for 1 ≤ k ≤ ⟨μ, α_j^∨⟩
            for k in 1..=mu[j].max(0) {
                let nu: Vec<i64> = (0..n).map(|t| mu[t] - k * a[t]).collect();
                if !seen.contains_key(&nu) {
                    let mut d = depth.clone();
                    d[j] += k;
                    seen.insert(nu.clone(), d);
                    queue.push_back(nu);
                }
            }
        }
    }
    seen.values().map(|d| d[s - 1]).collect()
}

/// The two-value criterion: `μ̄` takes exactly the values `a, a + 1` on the
/// weights of `V(ϖ_i)`.
pub fn two_value_spread(cartan: &[Vec<i64>], i: usize, s: usize) -> bool {
    alpha_s_depths(cartan, i, s) == BTreeSet::from([0, 1])
}

/// Euler's totient from the prime factorization.
pub fn totient(n: u64) -> u64 {
    let (mut m, mut out, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// `|SL_2(Z/N)| = N³ Π_{p | N} (1 − p⁻²)`.
pub fn sl2_order(n: u64) -> u64 {
    let (mut m, mut out, mut p) = (n, n * n * n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out = out / (p * p) * (p * p - 1);
        }
        p += 1;
    }
    if m > 1 {
        out = out / (m * m) * (m * m - 1);
    }
    out
}

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn qmat(rows: &[Vec<i64>]) -> QMatrix {
    QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
}

/// The standard alternating form `[[0, I], [−I, 0]]` and the complex
/// structure `J₀ = [[0, −I], [I, 0]]`, for which `ψ(x, J₀y)` is the
/// identity matrix.
pub fn standard_symplectic(n: usize) -> (QMatrix, QMatrix) {
    let psi = QMatrix::from_fn(2 * n, 2 * n, |r, c| {
        if c == r + n {
            q(1)
        } else if r == c + n {
            q(-1)
        } else {
            q(0)
        }
    });
    let j0 = QMatrix::from_fn(2 * n, 2 * n, |r, c| {
        if c == r + n {
            q(-1)
        } else if r == c + n {
            q(1)
        } else {
            q(0)
        }
    });
    (psi, j0)
}

/// A random rational symplectic space of dimension `2n` with a complex
/// structure `J` in `S(ψ)` from one of the two components: a random change
/// of basis `P` gives `ψ = Pᵀ Ω P`, and `J = P⁻¹ g J₀ g⁻¹ P` with `g` a
/// product of symplectic transvections `x ↦ x + c·Ω(x, v)·v`.
pub fn random_siegel_instance<R: Rng>(rng: &mut R, n: usize) -> (QMatrix, QMatrix) {
    let (omega, j0) = standard_symplectic(n);
    let dim = 2 * n;
    let mut g = QMatrix::identity(dim);
    for _ in 0..rng.gen_range(1..=4) {
        let v: Vec<Rational> = (0..dim).map(|_| q(rng.gen_range(-2..=2))).collect();
        let c = Rational::new(rng.gen_range(-3..=3i64).into(), rng.gen_range(1..=3i64).into());
        let omega_v = omega.mul_vec(&v);
        let t = QMatrix::from_fn(dim, dim, |r, k| {
            let delta = if r == k { q(1) } else { q(0) };
            delta + c.clone() * v[r].clone() * omega_v[k].clone()
        });
        g = &t * &g;
    }
    let p = loop {
        let p = QMatrix::from_fn(dim, dim, |r, k| q(if r == k { 1 } else { 0 } + rng.gen_range(-1..=1)));
        if !p.determinant().is_zero() {
            break p;
        }
    };
    let psi = &(&p.transpose() * &omega) * &p;
    let p_inv = p.inverse().expect("invertible");
    let g_inv = g.inverse().expect("symplectic");
    let j = &(&(&(&p_inv * &g) * &j0) * &g_inv) * &p;
    (psi, j)
}
