//! Independent reference computations. Nothing here goes through the
//! library's own linear algebra: matrices are plain vectors, walks are
//! enumerated directly, isomorphism is checked by brute force.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ihara_sectors::edge_space::{laplacian, OrientedEdgeSpace};
use ihara_sectors::graph::generate::builtin_generate;
use ihara_sectors::linalg::{charpoly, ExactMatrix, IntPoly, RatPoly, Rational};
use ihara_sectors::spectral::sym_spectrum;
use ihara_sectors::zeta::{factorize, hashimoto_det};
use ihara_sectors::{encode_graph6, lookup, parse_graph6, Graph};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Faddeev–LeVerrier: ascending coefficients of det(xI - A).
fn faddeev(a: &[Vec<Q>]) -> Vec<Q> {
    let n = a.len();
    let mut c = vec![Q::zero(); n + 1];
    c[n] = Q::one();
    let mut mk = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Q::zero();
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = Q::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        c[n - k] = -tr / q(k as i64);
    }
    c
}

fn plain(m: &ExactMatrix) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

fn as_rat(p: &RatPoly) -> Vec<Q> {
    p.coeffs().to_vec()
}

fn trimmed(mut v: Vec<Q>) -> Vec<Q> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn lcg(seed: &mut u64) -> i64 {
    *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    ((*seed >> 33) % 7) as i64 - 3
}

#[test]
fn hessenberg_matches_faddeev_leverrier() {
    let mut seed = 11u64;
    for n in 1..=12 {
        for _ in 0..3 {
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| lcg(&mut seed)).collect()).collect();
            let m = ExactMatrix::from_i64_rows(&rows);
            assert_eq!(as_rat(&charpoly(&m).unwrap()), trimmed(faddeev(&plain(&m))), "n = {n}");
        }
    }
    // rational entries
    let m = ExactMatrix::from_fn(5, 5, |i, j| Rational::new(BigInt::from(i as i64 - 2 * j as i64), BigInt::from(1 + i + j)));
    assert_eq!(as_rat(&charpoly(&m).unwrap()), trimmed(faddeev(&plain(&m))));
    // Hashimoto matrices up to dimension 12
    for g in [Graph::complete(3), Graph::cycle(5), Graph::complete(4), Graph::star(4)] {
        let t = OrientedEdgeSpace::new(&g).build_hashimoto();
        assert_eq!(as_rat(&charpoly(&t).unwrap()), trimmed(faddeev(&plain(&t))));
    }
}

// --- determinant by permutation expansion ---------------------------------

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// det(I - wX) for a 0/1 matrix, expanded over all permutations.
fn brute_det_resolvent(x: &[Vec<i64>]) -> Vec<i64> {
    let n = x.len();
    let mut total = vec![0i64; n + 1];
    for p in permutations(n) {
        let mut term = vec![sign(&p)];
        for (i, &j) in p.iter().enumerate() {
            let entry = [if i == j { 1 } else { 0 }, -x[i][j]];
            term = poly_mul(&term, &entry);
        }
        for (k, c) in term.iter().enumerate() {
            total[k] += c;
        }
    }
    while total.last() == Some(&0) && total.len() > 1 {
        total.pop();
    }
    total
}

fn int_rows(m: &ExactMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_integer().try_into().unwrap()).collect())
        .collect()
}

#[test]
fn ihara_determinant_by_permutation_expansion() {
    for g in [Graph::complete(3), Graph::path(3), Graph::complete(2), Graph::star(3)] {
        let t = OrientedEdgeSpace::new(&g).build_hashimoto();
        let brute = brute_det_resolvent(&int_rows(&t));
        assert_eq!(hashimoto_det(&g), IntPoly::from_i64(&brute), "{:?}", g.edges());
    }
    // closed form for the triangle
    assert_eq!(hashimoto_det(&Graph::complete(3)), IntPoly::from_i64(&[1, 0, 0, -2, 0, 0, 1]));
}

// --- closed non-backtracking walks -----------------------------------------

/// tr(T^k) for k = 1..=kmax by direct enumeration of cyclically
/// non-backtracking closed walks (no Hashimoto matrix involved).
fn nb_closed_walks(g: &Graph, kmax: usize) -> Vec<i64> {
    let nb = g.neighbors();
    let mut counts = vec![0i64; kmax + 1];
    fn go(nb: &[Vec<usize>], start: (usize, usize), prev: usize, cur: usize, len: usize, kmax: usize, counts: &mut [i64]) {
        // walk so far: start.0 -> start.1 -> ... -> prev -> cur, `len` steps
        if cur == start.0 && start.1 != prev {
            counts[len] += 1;
        }
        if len == kmax {
            return;
        }
        for &nx in &nb[cur] {
            if nx != prev {
                go(nb, start, cur, nx, len + 1, kmax, counts);
            }
        }
    }
    for u in 0..g.n() {
        for &v in &nb[u] {
            go(&nb, (u, v), u, v, 1, kmax, &mut counts);
        }
    }
    counts
}

/// Newton identities from power sums p_k to the coefficients of
/// prod(1 - lambda_i w).
fn newton(p: &[i64], kmax: usize) -> Vec<Q> {
    let mut c = vec![Q::one()];
    for k in 1..=kmax {
        let mut s = Q::zero();
        for i in 1..=k {
            s += q(p[i]) * &c[k - i];
        }
        c.push(-s / q(k as i64));
    }
    c
}

#[test]
fn walk_counts_reproduce_determinant_coefficients() {
    for name in ["holyG", "holyH", "exA_G1", "exA_H1", "K4", "Petersen"] {
        let g = lookup(name).unwrap().graph;
        let p = nb_closed_walks(&g, 8);
        let c = newton(&p, 8);
        let det = hashimoto_det(&g);
        for (k, ck) in c.iter().enumerate() {
            assert_eq!(ck, &Q::from_integer(det.coeff(k)), "{name} [w^{k}]");
        }
    }
}

#[test]
fn published_coefficients_via_walk_counts() {
    let cg = newton(&nb_closed_walks(&lookup("holyG").unwrap().graph, 6), 6);
    let ch = newton(&nb_closed_walks(&lookup("holyH").unwrap().graph, 6), 6);
    assert_eq!((cg[6].clone(), ch[6].clone()), (q(-28), q(-30)));
    let ca = newton(&nb_closed_walks(&parse_graph6("H?ABePt").unwrap(), 8), 8);
    let cb = newton(&nb_closed_walks(&parse_graph6("H?B@`jh").unwrap(), 8), 8);
    assert_eq!((ca[8].clone(), cb[8].clone()), (q(16), q(20)));
    assert_eq!(ca[..8], cb[..8]);
}

/// Line-graph adjacency straight from the edge list.
fn line_adjacency(g: &Graph) -> Vec<Vec<Q>> {
    let e = g.edges();
    (0..e.len())
        .map(|i| {
            (0..e.len())
                .map(|j| {
                    let (a, b) = e[i];
                    let (c, d) = e[j];
                    q((i != j && (a == c || a == d || b == c || b == d)) as i64)
                })
                .collect()
        })
        .collect()
}

#[test]
fn correction_coefficients_by_series_division() {
    for (name, expect) in [("holyG", (38663, 32)), ("holyH", (38599, 32))] {
        let g = lookup(name).unwrap().graph;
        let m = g.m();
        // det(I - (w/2) L) from the reversed characteristic polynomial
        let chi = faddeev(&line_adjacency(&g));
        let line: Vec<Q> = (0..=m).map(|k| &chi[m - k] / q(1 << k)).collect();
        let det = newton(&nb_closed_walks(&g, 6), 6);
        // c = det / line, truncated at order 6
        let mut c: Vec<Q> = Vec::new();
        for k in 0..=6 {
            let mut s = det[k].clone();
            for i in 1..=k.min(m) {
                s -= &line[i] * &c[k - i];
            }
            c.push(s);
        }
        assert_eq!(c[6], Q::new(BigInt::from(expect.0), BigInt::from(expect.1)), "{name}");
        let lib = factorize(&g, 6).correction_series;
        assert_eq!(lib.coeffs(), &c[..]);
    }
}

// --- generator counts -----------------------------------------------------

fn brute_census(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        if !g.is_connected() {
            continue;
        }
        // canonical form: smallest relabelled edge bitmask
        let best = perms
            .iter()
            .map(|p| {
                edges.iter().fold(0u32, |acc, &(a, b)| {
                    let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                    acc | 1 << pairs.iter().position(|&e| e == (x, y)).unwrap()
                })
            })
            .min()
            .unwrap();
        seen.insert(best);
    }
    seen.len()
}

#[test]
fn generator_counts_match_brute_force() {
    for n in 1..=6 {
        assert_eq!(builtin_generate(n).unwrap().len(), brute_census(n), "n = {n}");
    }
    assert_eq!(builtin_generate(4).unwrap().len(), 6);
    assert_eq!(builtin_generate(5).unwrap().len(), 21);
}

// --- graph6 by hand -------------------------------------------------------

#[test]
fn graph6_hand_encodings() {
    // n = 4 with the single edge 01: bits 100000 -> 32 + 63 = '_'
    assert_eq!(encode_graph6(&Graph::new(4, [(0, 1)]).unwrap()), "C_");
    // K3: bits 111 padded to 111000 -> 56 + 63 = 'w'
    assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
    assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
    assert_eq!(encode_graph6(&Graph::empty(1)), "@");
    assert_eq!(encode_graph6(&Graph::empty(0)), "?");
    // path 0-1-2: bits x01 x02 x12 = 1 0 1 -> 101000 = 40 + 63 = 'g'
    assert_eq!(encode_graph6(&Graph::path(3)), "Bg");
    // 63 vertices use the long size form: '~' then three 6-bit groups
    let big = encode_graph6(&Graph::empty(63));
    assert!(big.starts_with("~??~"));
}

// --- symmetric spectra against closed forms ---------------------------------

#[test]
fn cycle_laplacian_closed_form() {
    for n in [4usize, 5, 7, 9] {
        let ev = sym_spectrum(&laplacian(&Graph::cycle(n)), 1e-14).unwrap();
        let mut expect: Vec<f64> = (0..n)
            .map(|j| 2.0 - 2.0 * (std::f64::consts::TAU * j as f64 / n as f64).cos())
            .collect();
        expect.sort_by(f64::total_cmp);
        for (a, b) in ev.iter().zip(&expect) {
            assert!((a - b).abs() < 1e-10, "C{n}: {ev:?}");
        }
    }
    let k3 = OrientedEdgeSpace::new(&Graph::complete(3)).sector_blocks().l;
    let ev = sym_spectrum(&k3, 1e-14).unwrap();
    assert!(ev.iter().zip([-1.0, -1.0, 2.0]).all(|(a, b)| (a - b).abs() < 1e-10));
    assert!(ev.iter().all(|x| x.is_finite() && !x.is_nan()));
}
