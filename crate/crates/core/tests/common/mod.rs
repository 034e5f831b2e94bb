//! Slow, independent oracles and shared generators for the integration tests.
//!
//! Nothing here calls into handle reduction, the floor search, the periodic
//! certifier or the cover geometry code. Braid comparisons go through the
//! Artin action of `B_n` on the free group `F_n`, which is faithful and
//! detects the σ-ordering: with the right action
//! `x_i·σ_i = x_i x_{i+1} x_i⁻¹`, `x_{i+1}·σ_i = x_i`, a nontrivial braid is
//! σ-positive iff, for the first generator `x_k` it moves, the reduced word
//! `x_k·β` ends in `x_k⁻¹`.

#![allow(dead_code)]

pub mod checks;

use std::cmp::Ordering;

use fdtc::braid::BraidWord;
use fdtc::cover::MonodromyRep;
use fdtc::rational::Rational;
use proptest::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult<T> {
    pub value: T,
    pub trace: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    BoundTooSmall { bound: i64 },
    NotConnected,
}

/// Free group word: `k` is `x_k`, `-k` is `x_k⁻¹`, generators 1-based.
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, g: i32) {
    if out.last() == Some(&-g) {
        out.pop();
    } else {
        out.push(g);
    }
}

fn invert_free(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|g| -g).collect()
}

/// Applies the automorphism given by generator images to a word.
fn substitute(w: &[i32], images: &[FreeWord]) -> FreeWord {
    let mut out = Vec::with_capacity(w.len());
    for &g in w {
        let img = &images[(g.unsigned_abs() - 1) as usize];
        if g > 0 {
            for &h in img {
                push_reduced(&mut out, h);
            }
        } else {
            for &h in img.iter().rev() {
                push_reduced(&mut out, -h);
            }
        }
    }
    out
}

fn letter_images(n: usize, letter: i32) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|k| vec![k]).collect();
    let i = letter.abs();
    let (a, b) = (i, i + 1);
    if letter > 0 {
        images[(a - 1) as usize] = vec![a, b, -a];
        images[(b - 1) as usize] = vec![a];
    } else {
        images[(a - 1) as usize] = vec![b];
        images[(b - 1) as usize] = vec![-b, a, b];
    }
    images
}

/// Images `x_k·w` of all generators under the right Artin action.
pub fn artin_images(n: usize, word: &[i32]) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|k| vec![k]).collect();
    for &letter in word {
        let step = letter_images(n, letter);
        for img in images.iter_mut() {
            *img = substitute(img, &step);
        }
    }
    images
}

/// Images under `u·v` from the images under `u` and under `v`.
fn then(first: &[FreeWord], second: &[FreeWord]) -> Vec<FreeWord> {
    first.iter().map(|img| substitute(img, second)).collect()
}

/// `Less` for σ-negative, `Greater` for σ-positive, `Equal` for trivial.
fn sign_from_images(images: &[FreeWord]) -> Ordering {
    for (k, img) in images.iter().enumerate() {
        let x = k as i32 + 1;
        if img.as_slice() != [x] {
            return if img.last() == Some(&-x) { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

pub fn artin_sign(n: usize, word: &[i32]) -> Ordering {
    sign_from_images(&artin_images(n, word))
}

pub fn artin_trivial(n: usize, word: &[i32]) -> bool {
    artin_sign(n, word) == Ordering::Equal
}

/// `a < b` iff `a⁻¹b` is σ-positive.
pub fn artin_compare(n: usize, a: &[i32], b: &[i32]) -> Ordering {
    let mut w = invert_free(a);
    w.extend_from_slice(b);
    artin_sign(n, &w).reverse()
}

pub fn signed(w: &BraidWord) -> Vec<i32> {
    w.letters().iter().map(|l| l.signed()).collect()
}

/// `(σ_1 … σ_{n−1})^{n·k}` as a raw letter list.
pub fn twist_letters(n: usize, k: i64) -> Vec<i32> {
    let sign = if k >= 0 { 1 } else { -1 };
    let mut one: Vec<i32> = (1..n as i32).collect();
    if sign < 0 {
        one = one.iter().rev().map(|g| -g).collect();
    }
    let mut out = Vec::new();
    for _ in 0..(n as i64 * k.abs()) {
        out.extend_from_slice(&one);
    }
    out
}

/// Largest `m` in `[-bound, bound]` with `Δ^{2m} ⪯ w`, found by testing
/// every `m` against the definition.
pub fn floor_linear_scan(w: &BraidWord, bound: i64) -> Result<OracleResult<i64>, OracleError> {
    let n = w.strands();
    let w_images = artin_images(n, &signed(w));
    let mut below = Vec::new();
    for m in -bound..=bound {
        // Δ^{2m} ⪯ w iff Δ^{-2m} w is not σ-negative.
        let images = then(&artin_images(n, &twist_letters(n, -m)), &w_images);
        below.push((m, sign_from_images(&images) != Ordering::Less));
    }
    let holds: Vec<i64> = below.iter().filter(|(_, b)| *b).map(|(m, _)| *m).collect();
    let floor = match holds.last() {
        Some(&m) if m < bound => m,
        _ => return Err(OracleError::BoundTooSmall { bound }),
    };
    if holds.first() != Some(&-bound) || holds.len() as i64 != floor + bound + 1 {
        panic!("order is not compatible with the twist powers for {w}");
    }
    Ok(OracleResult { value: floor, trace: format!("linear scan over m = {}..={bound}", -bound) })
}

/// Smallest `N`, then the `M`, with `w^N = Δ^{2M}`, searching every pair.
pub fn periodic_exhaustive(w: &BraidWord, n_max: u64, m_max: i64) -> OracleResult<Option<(u64, i64)>> {
    let n = w.strands();
    let w_images = artin_images(n, &signed(w));
    let up = artin_images(n, &twist_letters(n, 1));
    let down = artin_images(n, &twist_letters(n, -1));
    let mut twist_images: Vec<(i64, Vec<FreeWord>)> = vec![(0, artin_images(n, &[]))];
    for m in 1..=m_max {
        let prev_up = twist_images.iter().find(|(k, _)| *k == m - 1).unwrap().1.clone();
        let prev_down = twist_images.iter().find(|(k, _)| *k == 1 - m).unwrap().1.clone();
        twist_images.push((m, then(&prev_up, &up)));
        twist_images.push((-m, then(&prev_down, &down)));
    }
    let mut power: Vec<FreeWord> = (1..=n as i32).map(|k| vec![k]).collect();
    for big_n in 1..=n_max {
        power = then(&power, &w_images);
        for (m, t) in &twist_images {
            if &power == t {
                return OracleResult {
                    value: Some((big_n, *m)),
                    trace: format!("w^{big_n} = twist^{m} found scanning N <= {n_max}, |M| <= {m_max}"),
                };
            }
        }
    }
    OracleResult { value: None, trace: format!("no pair with N <= {n_max}, |M| <= {m_max}") }
}

fn orbit_count(images: &[usize]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut count = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
        }
    }
    count
}

fn connected(degree: usize, perms: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; degree];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p[x];
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Euler characteristic of a branched cover of the disk by lifting a cell
/// structure: vertices at the branch points and one boundary vertex, arcs
/// from the boundary vertex to each branch point, the boundary loop, and a
/// single 2-cell.
pub fn euler_char_by_cycles(rep: &MonodromyRep) -> Result<OracleResult<i64>, OracleError> {
    let degree = rep.degree();
    let perms: Vec<Vec<usize>> = rep.branch_perms().iter().map(|p| p.images().to_vec()).collect();
    if !connected(degree, &perms) {
        return Err(OracleError::NotConnected);
    }
    let branch_vertices: usize = perms.iter().map(|p| orbit_count(p)).sum();
    let vertices = (branch_vertices + degree) as i64;
    let edges = (degree * (perms.len() + 1)) as i64;
    let faces = degree as i64;
    Ok(OracleResult {
        value: vertices - edges + faces,
        trace: format!("V = {vertices}, E = {edges}, F = {faces}"),
    })
}

/// `(σ_1^k)^2 = Δ^{2k}` in `B_2`.
pub fn b2_closed_form(k: i64) -> Rational {
    Rational::new(k, 2)
}

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::from_signed(n, letters).unwrap()
}

pub fn letters_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let top = n as i32 - 1;
    prop::collection::vec((1..=top, any::<bool>()).prop_map(|(i, p)| if p { i } else { -i }), 0..=max_len)
}

pub fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters_strategy(n, max_len).prop_map(move |l| word(n, &l))
}

/// A braid on 2..=max_n strands with at most `max_len` letters.
pub fn any_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| word_strategy(n, max_len))
}

/// Two braids on a shared strand count.
pub fn word_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word_strategy(n, max_len), word_strategy(n, max_len)))
}

pub fn word_triple(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word_strategy(n, max_len), word_strategy(n, max_len), word_strategy(n, max_len)))
}

/// A conjugate of `δ^a Δ^{2b}` or `ε^a Δ^{2b}` together with its FDTC, where
/// `δ = σ_1…σ_{n−1}` (so `δ^n = Δ²`) and `ε = σ_1 δ` (so `ε^{n−1} = Δ²`).
#[derive(Clone, Debug)]
pub struct PeriodicSample {
    pub word: BraidWord,
    pub core: BraidWord,
    pub expected: Rational,
}

pub fn periodic_sample(max_n: usize) -> impl Strategy<Value = PeriodicSample> {
    (3..=max_n)
        .prop_flat_map(|n| (Just(n), any::<bool>(), -(n as i64)..=(n as i64), -1i64..=1, letters_strategy(n, 4)))
        .prop_map(|(n, use_delta, a, b, conj)| {
            let root: Vec<i32> = if use_delta {
                (1..n as i32).collect()
            } else {
                std::iter::once(1).chain(1..n as i32).collect()
            };
            let order = if use_delta { n as i64 } else { n as i64 - 1 };
            let mut core = Vec::new();
            for _ in 0..a.abs() {
                if a > 0 {
                    core.extend_from_slice(&root);
                } else {
                    core.extend(root.iter().rev().map(|g| -g));
                }
            }
            core.extend(twist_letters(n, b));
            let mut full = invert_free(&conj);
            full.extend_from_slice(&core);
            full.extend_from_slice(&conj);
            PeriodicSample {
                word: word(n, &full),
                core: word(n, &core),
                expected: Rational::new(a, order) + Rational::integer(b),
            }
        })
}

/// Random transitive permutation representation over the disk.
pub fn transitive_rep() -> impl Strategy<Value = MonodromyRep> {
    (2usize..=6, 1usize..=5)
        .prop_flat_map(|(degree, n)| {
            let perm = Just((0..degree).collect::<Vec<usize>>()).prop_shuffle();
            prop::collection::vec(perm, n)
        })
        .prop_filter_map("transitive", |perms| {
            let degree = perms[0].len();
            if !connected(degree, &perms) {
                return None;
            }
            let perms = perms
                .into_iter()
                .map(|p| fdtc::perm::Permutation::from_images(p).unwrap())
                .collect();
            MonodromyRep::over_disk(degree, perms).ok()
        })
}
