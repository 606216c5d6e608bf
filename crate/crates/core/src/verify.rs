//! Verification suites: every closed form checked against exhaustive
//! enumeration, exactly.
//!
//! Oracle probabilities come from integer counts of tableaux grouped by a
//! feature and by the class `(Nα, Nβ)`; one enumeration pass then serves
//! every parameter point.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::asep::{verify_correspondence, verify_correspondence_with, AsepRates};
use crate::diagonal::{
    count_spread_sets, count_spread_sets_bruteforce, factorial_moment, factorial_moment_a, factorial_moment_a_summed,
    factorial_moment_x, factorial_moment_x_summed, falling_sum_bruteforce,
    falling_sum_closed, la_sum_bruteforce, la_sum_closed, p_alpha_joint, p_box, p_nonempty_joint, pmf_exact,
    pmf_from_formulas, vanishing_order, PositionSet, Stat,
};
use crate::enumerate::{self, limits, partition_function_ab_closed, partition_function_ab_enumerated, Weights};
use crate::error::{Error, Result};
use crate::measure::{check_corner_lemmas, check_subtableau_law, ClassTable, MeasureParams};
use crate::par::Exec;
use crate::rational::{frac, int, to_pq, Rational};
use crate::tableau::{Symbol, Tableau, TypeConvention};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Partition,
    BoxLaws,
    JointLaws,
    Identities,
    Moments,
    Symmetry,
    CornerLemmas,
    Subtableau,
    Asep,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Partition,
        Suite::BoxLaws,
        Suite::JointLaws,
        Suite::Identities,
        Suite::Moments,
        Suite::Symmetry,
        Suite::CornerLemmas,
        Suite::Subtableau,
        Suite::Asep,
    ];

    /// The suites about the second diagonal.
    pub const DIAGONALS: [Suite; 5] = [Suite::BoxLaws, Suite::JointLaws, Suite::Identities, Suite::Moments, Suite::Symmetry];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Partition => "partition",
            Suite::BoxLaws => "box-laws",
            Suite::JointLaws => "joint-laws",
            Suite::Identities => "identities",
            Suite::Moments => "moments",
            Suite::Symmetry => "symmetry",
            Suite::CornerLemmas => "corner-lemmas",
            Suite::Subtableau => "subtableau",
            Suite::Asep => "asep",
        }
    }

    /// A suite name, or the groups `diagonals` and `all`.
    pub fn parse_selection(s: &str) -> Option<Vec<Suite>> {
        match s {
            "all" => Some(Suite::ALL.to_vec()),
            "diagonals" => Some(Suite::DIAGONALS.to_vec()),
            _ => Suite::ALL.iter().find(|x| x.name() == s).map(|&x| vec![x]),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let scope = match self.suite {
            Suite::Identities => "index sums".to_string(),
            _ => format!("n <= {}", self.max_n),
        };
        format!("{:<14} {status}  {} checks, {} failures ({scope})", self.suite.name(), self.checks, self.failures.len())
    }
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn equal(&mut self, left: &Rational, right: &Rational, what: impl FnOnce() -> String) {
        self.check(left == right, || format!("{}: {} != {}", what(), to_pq(left), to_pq(right)));
    }

    fn finish(self, suite: Suite, max_n: usize) -> SuiteReport {
        SuiteReport { suite, max_n, checks: self.checks, failures: self.failures }
    }
}

/// Tableaux of size `n` counted by `(feature, Nα, Nβ)`, where `features`
/// lists the features a tableau carries.
pub struct FeatureCounts<K> {
    n: usize,
    classes: ClassTable,
    counts: HashMap<(K, (usize, usize)), u64>,
}

impl<K: Hash + Eq + Clone + Send + Sync> FeatureCounts<K> {
    pub fn build<F>(n: usize, features: F) -> Result<Self>
    where
        F: Fn(&Tableau) -> Vec<K> + Sync + Send,
    {
        let counts = enumerate::fold_ab(
            n,
            Exec::default(),
            HashMap::new(),
            |m: &mut HashMap<(K, (usize, usize)), u64>, t| {
                let class = (t.count(Symbol::Alpha), t.count(Symbol::Beta));
                for k in features(t) {
                    *m.entry((k, class)).or_default() += 1;
                }
            },
            |mut a, b| {
                for (k, c) in b {
                    *a.entry(k).or_default() += c;
                }
                a
            },
        )?;
        Ok(FeatureCounts { n, classes: ClassTable::build(n)?, counts })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Probability table for one parameter point.
    pub fn at(&self, params: &MeasureParams) -> Result<FeatureLaw<'_, K>> {
        Ok(FeatureLaw { counts: self, probs: self.classes.class_probabilities(params)? })
    }
}

pub struct FeatureLaw<'a, K> {
    counts: &'a FeatureCounts<K>,
    probs: HashMap<(usize, usize), Rational>,
}

impl<K: Hash + Eq> FeatureLaw<'_, K> {
    /// Probability that the tableau carries a feature accepted by `pred`.
    pub fn probability(&self, pred: impl Fn(&K) -> bool) -> Rational {
        let mut acc = Rational::zero();
        for ((k, class), &c) in &self.counts.counts {
            if pred(k) {
                if let Some(p) = self.probs.get(class) {
                    acc += p * Rational::from_integer(BigInt::from(c));
                }
            }
        }
        acc
    }
}

/// `(a, b)` points shared by several suites.
pub fn box_law_points() -> Vec<MeasureParams> {
    [(int(1), int(1)), (int(2), frac(1, 3)), (int(0), int(1)), (int(5), int(5))]
        .into_iter()
        .map(|(a, b)| MeasureParams::new(a, b).expect("admissible"))
        .collect()
}

fn law_points() -> Vec<MeasureParams> {
    [(int(1), int(1)), (int(2), frac(1, 3)), (frac(1, 2), int(3))]
        .into_iter()
        .map(|(a, b)| MeasureParams::new(a, b).expect("admissible"))
        .collect()
}

/// `(α, β, γ, δ)` points for the partition identities.
pub fn weight_points() -> Vec<Weights> {
    [
        [int(1), int(1), int(1), int(1)],
        [int(2), int(3), frac(1, 2), int(5)],
        [frac(1, 3), int(2), int(0), frac(7, 4)],
        [int(3), frac(1, 2), int(2), int(0)],
        [frac(5, 2), frac(4, 3), frac(3, 5), frac(1, 7)],
    ]
    .into_iter()
    .map(|[a, b, g, d]| Weights::new(a, b, g, d))
    .collect()
}

/// `(α, β, γ, δ, u, q)` points for the ASEP suite.
pub fn rate_points() -> Vec<AsepRates> {
    ["1,1,1,1,1,1", "2,1,1,3,1,1", "1,2,1/2,1,3,1", "2,1,0,3,1,2", "1/2,3,2,1/3,1,4", "3,1,1/2,0,2,1/3"]
        .into_iter()
        .map(|s| AsepRates::parse(s).expect("admissible"))
        .collect()
}

/// Runs one suite on sizes up to `max_n`, clipped to the enumeration caps.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<SuiteReport> {
    let lim = limits();
    let ab = max_n.min(lim.alpha_beta);
    let full = max_n.min(lim.full);
    match suite {
        Suite::Partition => partition(ab.min(7), full.min(5)),
        Suite::BoxLaws => box_laws(ab.min(6)),
        Suite::JointLaws => joint_laws(ab.min(7)),
        Suite::Identities => identities(),
        Suite::Moments => moments(ab.min(7)),
        Suite::Symmetry => symmetry(ab.min(7)),
        Suite::CornerLemmas => corner_lemmas(ab.min(6)),
        Suite::Subtableau => subtableau(ab.min(6)),
        Suite::Asep => asep(full.min(3)),
    }
}

/// Runs the suites concurrently; reports come back in the given order.
pub fn run_suites(suites: &[Suite], max_n: usize) -> Result<Vec<SuiteReport>> {
    Exec::default().map(suites, |&s| run_suite(s, max_n)).into_iter().collect()
}

fn partition(ab_max: usize, full_max: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 1..=full_max {
        let classes = enumerate::full_weight_classes(n)?;
        for w in weight_points() {
            let enumerated = evaluate_classes(&classes, &w);
            let product = enumerate::partition_function_product(n, &w);
            t.equal(&enumerated, &product, || format!("Z_{n} enumerated vs product at {}", describe(&w)));
            let collapsed = partition_function_ab_enumerated(n, &(&w.alpha + &w.gamma), &(&w.beta + &w.delta))?;
            t.equal(&enumerated, &collapsed, || format!("Z_{n} four-symbol vs collapsed at {}", describe(&w)));
        }
    }
    for n in 1..=ab_max {
        for w in weight_points() {
            let e = partition_function_ab_enumerated(n, &w.alpha, &w.beta)?;
            let c = partition_function_ab_closed(n, &w.alpha, &w.beta);
            t.equal(&e, &c, || format!("Z_{n}(alpha, beta) at {}", describe(&w)));
        }
    }
    Ok(t.finish(Suite::Partition, ab_max))
}

fn evaluate_classes(classes: &HashMap<[usize; 4], u64>, w: &Weights) -> Rational {
    use crate::rational::pow;
    classes
        .iter()
        .map(|(e, &c)| {
            pow(&w.alpha, e[0]) * pow(&w.beta, e[1]) * pow(&w.gamma, e[2]) * pow(&w.delta, e[3]) * Rational::from_integer(BigInt::from(c))
        })
        .sum()
}

fn describe(w: &Weights) -> String {
    [&w.alpha, &w.beta, &w.gamma, &w.delta].map(to_pq).join(",")
}

fn box_laws(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 1..=max_n {
        let fc = FeatureCounts::build(n, |x| x.symbols().collect())?;
        for params in box_law_points() {
            let law = fc.at(&params)?;
            for i in 1..=n {
                for j in 1..=n + 1 - i {
                    let l = p_box(n, &params, i, j)?;
                    let pa = law.probability(|&(b, s)| b == (i, j) && s == Symbol::Alpha);
                    let pb = law.probability(|&(b, s)| b == (i, j) && s == Symbol::Beta);
                    let pe = Rational::from_integer(1.into()) - &pa - &pb;
                    let tag = || format!("n={n} ({}) box ({i},{j})", params.describe());
                    t.equal(&l.alpha, &pa, || format!("{} alpha", tag()));
                    t.equal(&l.beta, &pb, || format!("{} beta", tag()));
                    t.equal(&l.empty, &pe, || format!("{} empty", tag()));
                }
            }
        }
    }
    Ok(t.finish(Suite::BoxLaws, max_n))
}

/// Second-diagonal masks: bit `j - 1` marks position `j`.
fn diagonal_masks(x: &Tableau) -> (u32, u32) {
    let n = x.size();
    let (mut alpha, mut beta) = (0u32, 0u32);
    for j in 1..n {
        match x.second_diagonal(j) {
            Symbol::Alpha => alpha |= 1 << (j - 1),
            Symbol::Beta => beta |= 1 << (j - 1),
            _ => {}
        }
    }
    (alpha, beta)
}

/// All increasing position sets in `1..=m` with at most `r_max` elements.
fn position_sets(r_max: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for j in 1..=m {
        let extended: Vec<Vec<usize>> =
            out.iter().filter(|s| s.len() < r_max).map(|s| s.iter().copied().chain([j]).collect()).collect();
        out.extend(extended);
    }
    out.sort();
    out
}

fn joint_laws(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 2..=max_n {
        let fc = FeatureCounts::build(n, |x| vec![diagonal_masks(x)])?;
        for params in box_law_points() {
            let law = fc.at(&params)?;
            for js in position_sets(3, n - 1) {
                let mask: u32 = js.iter().map(|j| 1u32 << (j - 1)).sum();
                let ps = PositionSet::new(js.clone(), n)?;
                let tag = || format!("n={n} ({}) {:?}", params.describe(), js);
                let oracle_alpha = law.probability(|&(a, _)| a & mask == mask);
                let oracle_nonempty = law.probability(|&(a, b)| (a | b) & mask == mask);
                match p_alpha_joint(n, &params, &ps) {
                    Ok(v) => t.equal(&v, &oracle_alpha, || format!("{} all alpha", tag())),
                    Err(e) => t.check(false, || format!("{} all alpha: {e}", tag())),
                }
                match p_nonempty_joint(n, &params, &ps) {
                    Ok(v) => t.equal(&v, &oracle_nonempty, || format!("{} all non-empty", tag())),
                    Err(e) => t.check(false, || format!("{} all non-empty: {e}", tag())),
                }
                if !ps.is_spread() {
                    t.check(oracle_nonempty.is_zero(), || format!("{} non-spread set has mass", tag()));
                }
            }
        }
    }
    Ok(t.finish(Suite::JointLaws, max_n))
}

fn identities() -> Result<SuiteReport> {
    let mut t = Tally::new();
    for r in 1..=5 {
        for m in 0..=14 {
            t.equal(&la_sum_bruteforce(r, m), &la_sum_closed(r, m), || format!("spread-set product sum r={r} m={m}"));
        }
    }
    for tt in 0..=8 {
        for m in 0..=20 {
            t.equal(&falling_sum_bruteforce(tt, m), &falling_sum_closed(tt, m), || format!("falling sum t={tt} m={m}"));
        }
    }
    for r in 0..=6 {
        for m in 0..=20 {
            let brute = count_spread_sets_bruteforce(r, m);
            let closed = count_spread_sets(r, m);
            t.check(closed == brute.into(), || format!("|J_{{{r},{m}}}| brute {brute} vs binomial {closed}"));
        }
    }
    Ok(t.finish(Suite::Identities, 0))
}

fn moments(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 2..=max_n {
        for params in law_points() {
            for stat in [Stat::A, Stat::B, Stat::X] {
                let exact = pmf_exact(n, &params, stat)?;
                let tag = || format!("n={n} ({}) {}", params.describe(), stat.name());
                for r in 0..=vanishing_order(n) + 1 {
                    let f = factorial_moment(n, &params, stat, r)?;
                    t.equal(&f, &exact.factorial_moment(r), || format!("{} moment r={r}", tag()));
                }
                for r in 0..=vanishing_order(n) {
                    let (closed, summed) = match stat {
                        Stat::A => (factorial_moment_a(n, &params, r)?, factorial_moment_a_summed(n, &params, r)?),
                        Stat::B => continue,
                        Stat::X => (factorial_moment_x(n, &params, r)?, factorial_moment_x_summed(n, &params, r)?),
                    };
                    t.equal(&closed, &summed, || format!("{} set-by-set moment r={r}", tag()));
                }
                let inverted = pmf_from_formulas(n, &params, stat)?;
                t.check(inverted == exact, || format!("{} inverted pmf differs from enumeration", tag()));
            }
        }
    }
    Ok(t.finish(Suite::Moments, max_n))
}

fn symmetry(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 2..=max_n {
        for params in law_points() {
            let b = pmf_exact(n, &params, Stat::B)?;
            let a = pmf_exact(n, &params.swapped(), Stat::A)?;
            t.check(a == b, || format!("n={n} ({}) B law differs from swapped A law", params.describe()));
        }
    }
    Ok(t.finish(Suite::Symmetry, max_n))
}

fn corner_lemmas(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 3..=max_n {
        for params in law_points() {
            for c in check_corner_lemmas(n, &params)? {
                t.check(c.holds(), || format!("{}: {:?}", c.name, c.outcome));
            }
        }
    }
    Ok(t.finish(Suite::CornerLemmas, max_n))
}

fn subtableau(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 1..=max_n {
        for params in law_points() {
            for i in 1..=n {
                for j in 1..=n + 1 - i {
                    let c = check_subtableau_law(n, &params, i, j)?;
                    t.check(c.holds(), || format!("{}: {:?}", c.name, c.outcome));
                }
            }
        }
    }
    Ok(t.finish(Suite::Subtableau, max_n))
}

fn asep(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 1..=max_n {
        for rates in rate_points() {
            let r = verify_correspondence(n, &rates)?;
            t.check(r.equal(), || format!("n={n} rates {}: max discrepancy {}", rates.describe(), to_pq(&r.max_discrepancy)));
        }
    }
    // reading γ as occupied breaks the correspondence already on one site
    let generic = AsepRates::parse("2,1,1,3,1,1")?;
    let r = verify_correspondence_with(1, &generic, TypeConvention::AlphaGamma)?;
    t.check(!r.equal(), || "alpha/gamma type reading unexpectedly matches at n=1".into());
    Ok(t.finish(Suite::Asep, max_n))
}

/// Turns a failed report list into an error message.
pub fn failures(reports: &[SuiteReport]) -> Option<Error> {
    let bad: Vec<String> =
        reports.iter().filter(|r| !r.passed()).flat_map(|r| r.failures.iter().map(move |f| format!("{}: {f}", r.suite))).collect();
    if bad.is_empty() {
        None
    } else {
        Some(Error::NotADistribution(bad.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selections() {
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 9);
        assert_eq!(Suite::parse_selection("diagonals").unwrap().len(), 5);
        assert_eq!(Suite::parse_selection("box-laws").unwrap(), vec![Suite::BoxLaws]);
        assert!(Suite::parse_selection("nope").is_none());
    }

    #[test]
    fn position_set_listing() {
        let s = position_sets(2, 3);
        assert_eq!(s.len(), 1 + 3 + 3);
        assert!(s.contains(&vec![1, 3]));
    }

    #[test]
    fn small_runs_pass() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 4).unwrap();
            assert!(r.passed(), "{}: {:?}", suite, r.failures);
            assert!(r.checks > 0);
        }
    }
}
