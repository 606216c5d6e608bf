//! Exhaustive generation of staircase tableaux and the exact sums built on
//! it. Everything analytic in the crate is tested against this module.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::measure::{ClassTable, MeasureParams};
use crate::par::Exec;
use crate::rational::{int, pow, rising, Rational};
use crate::tableau::{weight_unchecked, Symbol, Tableau};

/// Enumeration size caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// α/β tableaux, `(n+1)!` of them.
    pub alpha_beta: usize,
    /// Four-symbol tableaux, `4^n n!` of them.
    pub full: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { alpha_beta: 9, full: 6 }
    }
}

impl Limits {
    /// Defaults, with `STAIRCASE_MAX_N` (if set to an integer) replacing both caps.
    pub fn from_env() -> Self {
        match std::env::var("STAIRCASE_MAX_N").ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Limits { alpha_beta: n, full: n },
            None => Limits::default(),
        }
    }

    pub fn check_alpha_beta(&self, n: usize) -> Result<()> {
        check(n, self.alpha_beta, "alpha/beta enumeration")
    }

    pub fn check_full(&self, n: usize) -> Result<()> {
        check(n, self.full, "four-symbol enumeration")
    }
}

fn check(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::SizeTooSmall { n, min: 1 })
    } else if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

/// Process-wide limits, read once from the environment.
pub fn limits() -> Limits {
    static LIMITS: OnceLock<Limits> = OnceLock::new();
    *LIMITS.get_or_init(Limits::from_env)
}

/// Column placements for the backtracking generator.
///
/// Columns are filled right to left. A β placed in row `i` empties the rest
/// of row `i` to its left, tracked in `blocked`. Within a column an α must be
/// the topmost symbol; β's may sit anywhere below it on unblocked rows, and
/// the diagonal box (the column's bottom) must be filled.
fn column_choices(n: usize, j: usize, blocked: u64) -> Vec<(Option<usize>, u64)> {
    let h = n + 1 - j;
    let mut out = Vec::new();
    let free = |r: usize| blocked >> r & 1 == 0;
    let alpha_rows = std::iter::once(None).chain((1..=h).filter(|&r| free(r)).map(Some));
    for alpha in alpha_rows {
        let lo = alpha.map_or(1, |r| r + 1);
        let rows: Vec<usize> = (lo..=h).filter(|&r| free(r)).collect();
        let diagonal_forced = alpha != Some(h);
        for subset in 0u64..(1 << rows.len()) {
            let mut mask = 0u64;
            for (k, &r) in rows.iter().enumerate() {
                if subset >> k & 1 == 1 {
                    mask |= 1 << r;
                }
            }
            if diagonal_forced && mask >> h & 1 == 0 {
                continue;
            }
            out.push((alpha, mask));
        }
    }
    out
}

#[derive(Clone)]
struct Partial {
    t: Tableau,
    blocked: u64,
    next_col: usize,
}

fn apply(p: &Partial, choice: (Option<usize>, u64)) -> Partial {
    let j = p.next_col;
    let h = p.t.size() + 1 - j;
    let mut t = p.t.clone();
    for r in 1..=h {
        t.set(r, j, Symbol::Empty);
    }
    if let Some(r) = choice.0 {
        t.set(r, j, Symbol::Alpha);
    }
    for r in 1..=h {
        if choice.1 >> r & 1 == 1 {
            t.set(r, j, Symbol::Beta);
        }
    }
    Partial { t, blocked: p.blocked | choice.1, next_col: j - 1 }
}

fn dfs<F: FnMut(&Tableau)>(n: usize, t: &mut Tableau, blocked: u64, j: usize, visit: &mut F) {
    if j == 0 {
        visit(t);
        return;
    }
    let h = n + 1 - j;
    for (alpha, mask) in column_choices(n, j, blocked) {
        for r in 1..=h {
            let s = if alpha == Some(r) {
                Symbol::Alpha
            } else if mask >> r & 1 == 1 {
                Symbol::Beta
            } else {
                Symbol::Empty
            };
            t.set(r, j, s);
        }
        dfs(n, t, blocked | mask, j - 1, visit);
    }
    for r in 1..=h {
        t.set(r, j, Symbol::Empty);
    }
}

/// Splits the search tree into independent subtrees by fixing the first
/// `depth` columns (rightmost first).
fn prefixes(n: usize, depth: usize) -> Vec<Partial> {
    let mut frontier = vec![Partial { t: Tableau::empty(n), blocked: 0, next_col: n }];
    for _ in 0..depth.min(n) {
        frontier = frontier
            .iter()
            .flat_map(|p| column_choices(n, p.next_col, p.blocked).into_iter().map(move |c| apply(p, c)))
            .collect();
    }
    frontier
}

fn split_depth(n: usize) -> usize {
    match n {
        0..=4 => 0,
        5..=6 => 2,
        _ => 3,
    }
}

/// Runs `per_subtree` over the partitioned search tree; results come back in
/// subtree order.
fn over_subtrees<R, F>(n: usize, exec: Exec, per_subtree: F) -> Vec<R>
where
    R: Send,
    F: Fn(&mut dyn FnMut(&mut dyn FnMut(&Tableau))) -> R + Sync + Send,
{
    let parts = prefixes(n, split_depth(n));
    exec.map(&parts, |p| {
        let mut t = p.t.clone();
        let mut run = |visit: &mut dyn FnMut(&Tableau)| dfs(n, &mut t, p.blocked, p.next_col, &mut |x: &Tableau| visit(x));
        per_subtree(&mut run)
    })
}

/// Visits every valid α/β tableau of size `n` in generation order.
pub fn visit_alpha_beta<F: FnMut(&Tableau)>(n: usize, mut visit: F) -> Result<()> {
    limits().check_alpha_beta(n)?;
    let mut t = Tableau::empty(n);
    dfs(n, &mut t, 0, n, &mut visit);
    Ok(())
}

/// Every valid α/β tableau of size `n`, each once, in canonical order.
pub fn enumerate_ab(n: usize) -> Result<Vec<Tableau>> {
    enumerate_ab_with(n, Exec::default())
}

pub fn enumerate_ab_with(n: usize, exec: Exec) -> Result<Vec<Tableau>> {
    limits().check_alpha_beta(n)?;
    let chunks = over_subtrees(n, exec, |run| {
        let mut v = Vec::new();
        run(&mut |t: &Tableau| v.push(t.clone()));
        v
    });
    let mut all: Vec<Tableau> = chunks.into_iter().flatten().collect();
    sort_canonical(&mut all, exec);
    Ok(all)
}

fn sort_canonical(v: &mut [Tableau], exec: Exec) {
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::slice::ParallelSliceMut;
            v.par_sort_unstable_by(Tableau::canonical_cmp)
        }
        _ => v.sort_unstable_by(Tableau::canonical_cmp),
    }
}

/// `|enumerate_ab(n)|` without materializing the tableaux.
pub fn count_ab(n: usize) -> Result<u64> {
    count_ab_with(n, Exec::default())
}

pub fn count_ab_with(n: usize, exec: Exec) -> Result<u64> {
    limits().check_alpha_beta(n)?;
    Ok(over_subtrees(n, exec, |run| {
        let mut c = 0u64;
        run(&mut |_| c += 1);
        c
    })
    .into_iter()
    .sum())
}

/// Folds over every α/β tableau of size `n` without materializing them;
/// subtrees are folded independently and merged with `merge`.
pub fn fold_ab<A, F, M>(n: usize, exec: Exec, init: A, f: F, merge: M) -> Result<A>
where
    A: Send + Clone + Sync,
    F: Fn(&mut A, &Tableau) + Sync + Send,
    M: Fn(A, A) -> A,
{
    limits().check_alpha_beta(n)?;
    let parts = over_subtrees(n, exec, |run| {
        let mut acc = init.clone();
        run(&mut |t: &Tableau| f(&mut acc, t));
        acc
    });
    Ok(parts.into_iter().fold(init.clone(), merge))
}

/// The `2^(Nα+Nβ)` four-symbol variants of an α/β tableau (α→α|γ, β→β|δ).
pub fn expand_four<F: FnMut(&Tableau)>(ab: &Tableau, mut visit: F) {
    let slots: Vec<usize> = ab
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(k, _)| k)
        .collect();
    let mut t = ab.clone();
    for bits in 0u64..(1 << slots.len()) {
        for (b, &k) in slots.iter().enumerate() {
            let base = ab.cells()[k];
            let alt = bits >> b & 1 == 1;
            t.cells_mut()[k] = match (base, alt) {
                (Symbol::Alpha, true) => Symbol::Gamma,
                (Symbol::Beta, true) => Symbol::Delta,
                (s, _) => s,
            };
        }
        visit(&t);
    }
}

/// Visits every valid four-symbol tableau of size `n`.
pub fn visit_full<F: FnMut(&Tableau)>(n: usize, mut visit: F) -> Result<()> {
    limits().check_full(n)?;
    let mut t = Tableau::empty(n);
    dfs(n, &mut t, 0, n, &mut |ab: &Tableau| expand_four(ab, &mut visit));
    Ok(())
}

/// Every valid four-symbol tableau of size `n`, in canonical order.
pub fn enumerate_full(n: usize) -> Result<Vec<Tableau>> {
    limits().check_full(n)?;
    let exec = Exec::default();
    let chunks = over_subtrees(n, exec, |run| {
        let mut v = Vec::new();
        run(&mut |ab: &Tableau| expand_four(ab, |t| v.push(t.clone())));
        v
    });
    let mut all: Vec<Tableau> = chunks.into_iter().flatten().collect();
    sort_canonical(&mut all, exec);
    Ok(all)
}

/// Counts of four-symbol tableaux by exponent vector `(Nα, Nβ, Nγ, Nδ)`.
pub fn full_weight_classes(n: usize) -> Result<HashMap<[usize; 4], u64>> {
    limits().check_full(n)?;
    let parts = over_subtrees(n, Exec::default(), |run| {
        let mut m: HashMap<[usize; 4], u64> = HashMap::new();
        run(&mut |ab: &Tableau| {
            expand_four(ab, |t| {
                let w = weight_unchecked(t);
                *m.entry([w.alpha, w.beta, w.gamma, w.delta]).or_default() += 1;
            })
        });
        m
    });
    Ok(merge_counts(parts))
}

pub(crate) fn merge_counts<K: std::hash::Hash + Eq>(parts: Vec<HashMap<K, u64>>) -> HashMap<K, u64> {
    let mut out = HashMap::new();
    for p in parts {
        for (k, c) in p {
            *out.entry(k).or_default() += c;
        }
    }
    out
}

/// Four-parameter weight point `(α, β, γ, δ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl Weights {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Self {
        Weights { alpha, beta, gamma, delta }
    }

    pub fn alpha_beta(alpha: Rational, beta: Rational) -> Self {
        Weights { alpha, beta, gamma: Rational::zero(), delta: Rational::zero() }
    }

    fn monomial(&self, e: [usize; 4]) -> Rational {
        pow(&self.alpha, e[0]) * pow(&self.beta, e[1]) * pow(&self.gamma, e[2]) * pow(&self.delta, e[3])
    }
}

/// `Z_n(α,β,γ,δ) = ∏_{i<n} (α + β + γ + δ + i (α+γ)(β+δ))`.
pub fn partition_function_product(n: usize, w: &Weights) -> Rational {
    let s = &w.alpha + &w.beta + &w.gamma + &w.delta;
    let p = (&w.alpha + &w.gamma) * (&w.beta + &w.delta);
    (0..n).fold(Rational::one(), |acc, i| acc * (&s + int(i as i64) * &p))
}

/// `α^n β^n (a+b)^(rising n)` with `a = 1/α`, `b = 1/β`; both must be positive.
pub fn partition_function_ab_closed(n: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let a = alpha.recip();
    let b = beta.recip();
    pow(alpha, n) * pow(beta, n) * rising(&(a + b), n)
}

/// `Σ wt(S)` over all four-symbol tableaux of size `n`.
pub fn partition_function_enumerated(n: usize, w: &Weights) -> Result<Rational> {
    let classes = full_weight_classes(n)?;
    Ok(classes.into_iter().map(|(e, c)| w.monomial(e) * int(c as i64)).sum())
}

/// `Σ wt(S)` over α/β tableaux of size `n`.
pub fn partition_function_ab_enumerated(n: usize, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let table = ClassTable::build(n)?;
    Ok(table
        .classes()
        .map(|((na, nb), c)| pow(alpha, na) * pow(beta, nb) * int(c as i64))
        .sum())
}

/// Both routes to `Z_n`; the enumerated one is `None` above the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFunction {
    pub product: Rational,
    pub enumerated: Option<Rational>,
}

impl PartitionFunction {
    pub fn agrees(&self) -> bool {
        self.enumerated.as_ref().is_none_or(|e| *e == self.product)
    }
}

pub fn partition_function(n: usize, w: &Weights) -> Result<PartitionFunction> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let product = partition_function_product(n, w);
    let enumerated = if n <= limits().full { Some(partition_function_enumerated(n, w)?) } else { None };
    Ok(PartitionFunction { product, enumerated })
}

/// `P(e(S))` under `S_{n,a,b}`, summed over the α/β enumeration.
pub fn exact_event_probability<E>(n: usize, params: &MeasureParams, event: E) -> Result<Rational>
where
    E: Fn(&Tableau) -> bool + Sync + Send,
{
    let table = ClassTable::build_filtered(n, &event)?;
    let full = ClassTable::build(n)?;
    let probs = full.class_probabilities(params)?;
    Ok(table.classes().map(|(cls, c)| probs.get(&cls).cloned().unwrap_or_default() * int(c as i64)).sum())
}
