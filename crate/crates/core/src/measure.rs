//! The random α/β tableau `S_{n,α,β}` and its four-parameter extension.
//!
//! The measure is parameterized by `a = 1/α`, `b = 1/β`:
//!
//! ```text
//! P(S) = a^(n - Nα) b^(n - Nβ) / (a+b)^(rising n)
//! ```
//!
//! so the infinite-rate limits `α = ∞` / `β = ∞` are the boundary values
//! `a = 0` / `b = 0` (with `0^0 = 1`). The doubly infinite limit, where that
//! expression is `0/0`, is the separate [`MeasureParams::max_symbols`] mode:
//! uniform on the tableaux with the largest `Nα + Nβ`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{self, limits, merge_counts};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::rational::{int, pow, rising, to_pq, Rational};
use crate::tableau::{delete_row_col, subtableau, weight_unchecked, Symbol, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeasureParams {
    a: Rational,
    b: Rational,
    max_symbols: bool,
}

impl MeasureParams {
    /// `a, b >= 0`, not both zero.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::InadmissibleParams(format!("a={a}, b={b} must be non-negative")));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::InadmissibleParams("a = b = 0 needs the max-symbols mode".into()));
        }
        Ok(MeasureParams { a, b, max_symbols: false })
    }

    /// From rates `α, β > 0`.
    pub fn from_rates(alpha: &Rational, beta: &Rational) -> Result<Self> {
        if !alpha.is_positive() || !beta.is_positive() {
            return Err(Error::InadmissibleParams(format!("rates {alpha}, {beta} must be positive")));
        }
        MeasureParams::new(alpha.recip(), beta.recip())
    }

    /// The `α = β = ∞` limit.
    pub fn max_symbols() -> Self {
        MeasureParams { a: Rational::zero(), b: Rational::zero(), max_symbols: true }
    }

    /// `a = 0`/`b = 0` boundary values are allowed; `(0, 0)` maps to
    /// [`MeasureParams::max_symbols`].
    pub fn with_limits(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            Ok(MeasureParams::max_symbols())
        } else {
            MeasureParams::new(a, b)
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_max_symbols(&self) -> bool {
        self.max_symbols
    }

    /// `(a, b)` exchanged, the parameters of the involuted tableau.
    pub fn swapped(&self) -> Self {
        MeasureParams { a: self.b.clone(), b: self.a.clone(), max_symbols: self.max_symbols }
    }

    /// `(a + da, b + db)`, staying in max-symbols mode only if both shifts are zero.
    pub fn shifted(&self, da: usize, db: usize) -> Self {
        let a = &self.a + int(da as i64);
        let b = &self.b + int(db as i64);
        MeasureParams::with_limits(a, b).expect("shifting keeps parameters admissible")
    }

    pub fn describe(&self) -> String {
        if self.max_symbols {
            "max-symbols".to_string()
        } else {
            format!("a={}, b={}", to_pq(&self.a), to_pq(&self.b))
        }
    }
}

/// Tableau counts grouped by `(Nα, Nβ)`; under `S_{n,a,b}` the probability
/// of a tableau depends on nothing else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    n: usize,
    counts: BTreeMap<(usize, usize), u64>,
}

fn class_of(t: &Tableau) -> (usize, usize) {
    let w = weight_unchecked(t);
    (w.alpha, w.beta)
}

impl ClassTable {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_filtered(n, &|_: &Tableau| true)
    }

    /// Class counts restricted to the tableaux satisfying `keep`.
    pub fn build_filtered<E>(n: usize, keep: &E) -> Result<Self>
    where
        E: Fn(&Tableau) -> bool + Sync + Send,
    {
        let parts = enumerate::fold_ab(
            n,
            Exec::default(),
            HashMap::new(),
            |m: &mut HashMap<(usize, usize), u64>, t| {
                if keep(t) {
                    *m.entry(class_of(t)).or_default() += 1;
                }
            },
            |a, b| merge_counts(vec![a, b]),
        )?;
        Ok(ClassTable { n, counts: parts.into_iter().collect() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Largest `Nα + Nβ` present.
    pub fn max_symbols(&self) -> usize {
        self.counts.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    /// Probability of a single tableau in each class.
    pub fn class_probabilities(&self, params: &MeasureParams) -> Result<HashMap<(usize, usize), Rational>> {
        let n = self.n;
        if params.max_symbols {
            let top = self.max_symbols();
            let count: u64 = self.counts.iter().filter(|((a, b), _)| a + b == top).map(|(_, c)| c).sum();
            return Ok(self
                .counts
                .keys()
                .map(|&(a, b)| {
                    let p = if a + b == top { Rational::new(BigInt::one(), BigInt::from(count)) } else { Rational::zero() };
                    ((a, b), p)
                })
                .collect());
        }
        let z = rising(&(&params.a + &params.b), n);
        Ok(self
            .counts
            .keys()
            .map(|&(na, nb)| ((na, nb), pow(&params.a, n - na) * pow(&params.b, n - nb) / &z))
            .collect())
    }

    /// Unnormalized integer class weights sharing one denominator.
    fn integer_weights(&self, params: &MeasureParams) -> Vec<((usize, usize), BigUint)> {
        let n = self.n;
        if params.max_symbols {
            let top = self.max_symbols();
            return self
                .counts
                .keys()
                .map(|&(a, b)| ((a, b), if a + b == top { BigUint::one() } else { BigUint::zero() }))
                .collect();
        }
        let (pa, qa) = (params.a.numer().to_biguint().unwrap(), params.a.denom().to_biguint().unwrap());
        let (pb, qb) = (params.b.numer().to_biguint().unwrap(), params.b.denom().to_biguint().unwrap());
        // a^(n-Nα) b^(n-Nβ) scaled by qa^n qb^n
        self.counts
            .keys()
            .map(|&(na, nb)| {
                let w = num_traits::pow(pa.clone(), n - na)
                    * num_traits::pow(qa.clone(), na)
                    * num_traits::pow(pb.clone(), n - nb)
                    * num_traits::pow(qb.clone(), nb);
                ((na, nb), w)
            })
            .collect()
    }
}

/// `P(S_{n,a,b} = t)`.
pub fn tableau_probability(t: &Tableau, params: &MeasureParams) -> Result<Rational> {
    let v = crate::tableau::validate(t);
    if !v.is_empty() {
        return Err(Error::InvalidTableau(v));
    }
    if !t.is_alpha_beta() {
        return Err(Error::InadmissibleParams("tableau uses gamma/delta; the measure lives on alpha/beta tableaux".into()));
    }
    let n = t.size();
    let (na, nb) = class_of(t);
    if params.max_symbols {
        let table = ClassTable::build(n)?;
        return Ok(table.class_probabilities(params)?.remove(&(na, nb)).unwrap_or_default());
    }
    Ok(pow(&params.a, n - na) * pow(&params.b, n - nb) / rising(&(&params.a + &params.b), n))
}

/// Exact finite law over keys of type `K`; zero-mass keys are dropped.
pub type Law<K> = BTreeMap<K, Rational>;

/// The push-forward of `S_{n,a,b}` through `key`; tableaux mapped to `None`
/// are dropped (the result is then a sub-probability).
pub fn pushforward<K, F>(n: usize, params: &MeasureParams, key: F) -> Result<Law<K>>
where
    K: Ord + Send + Clone + Sync,
    F: Fn(&Tableau) -> Option<K> + Sync + Send,
{
    let tabs = enumerate::enumerate_ab(n)?;
    let probs = ClassTable::build(n)?.class_probabilities(params)?;
    let keyed: Vec<Option<(K, Rational)>> = Exec::default().map(&tabs, |t| {
        let k = key(t)?;
        let p = probs.get(&class_of(t)).cloned().unwrap_or_default();
        Some((k, p))
    });
    let mut law: Law<K> = BTreeMap::new();
    for (k, p) in keyed.into_iter().flatten() {
        *law.entry(k).or_default() += p;
    }
    law.retain(|_, p| !p.is_zero());
    Ok(law)
}

/// The law of `S_{n,a,b}` itself.
pub fn law(n: usize, params: &MeasureParams) -> Result<Law<Tableau>> {
    pushforward(n, params, |t| Some(t.clone()))
}

/// The law conditioned on `event`, or `None` when the event is null.
pub fn conditional_law<K, F, E>(n: usize, params: &MeasureParams, event: E, key: F) -> Result<Option<Law<K>>>
where
    K: Ord + Send + Clone + Sync,
    F: Fn(&Tableau) -> K + Sync + Send,
    E: Fn(&Tableau) -> bool + Sync + Send,
{
    let restricted = pushforward(n, params, |t| if event(t) { Some(key(t)) } else { None })?;
    let mass: Rational = restricted.values().sum();
    if mass.is_zero() {
        return Ok(None);
    }
    Ok(Some(restricted.into_iter().map(|(k, p)| (k, p / &mass)).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawOutcome {
    Equal,
    Different { mismatches: usize, max_abs_diff: Rational },
    /// The conditioning event has probability zero.
    NullCondition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub name: String,
    pub outcome: LawOutcome,
}

impl LawCheck {
    pub fn holds(&self) -> bool {
        self.outcome == LawOutcome::Equal
    }
}

/// Compares two finite laws key by key.
pub fn compare_laws<K: Ord>(left: &Law<K>, right: &Law<K>) -> LawOutcome {
    let zero = Rational::zero();
    let mut mismatches = 0;
    let mut max_abs_diff = Rational::zero();
    for k in left.keys().chain(right.keys()) {
        let d = (left.get(k).unwrap_or(&zero) - right.get(k).unwrap_or(&zero)).abs();
        if !d.is_zero() {
            mismatches += 1;
            if d > max_abs_diff {
                max_abs_diff = d;
            }
        }
    }
    if mismatches == 0 {
        LawOutcome::Equal
    } else {
        LawOutcome::Different { mismatches, max_abs_diff }
    }
}

/// `S_{n,a,b}[i,j]` against `S_{n-i-j+2, a+i-1, b+j-1}`.
pub fn check_subtableau_law(n: usize, params: &MeasureParams, i: usize, j: usize) -> Result<LawCheck> {
    if i == 0 || j == 0 || i + j > n + 1 {
        return Err(Error::BoxOutOfRange { n, i, j });
    }
    let pushed = pushforward(n, params, |t| Some(subtableau(t, i, j).expect("in range")))?;
    let target = law(n + 2 - i - j, &params.shifted(i - 1, j - 1))?;
    Ok(LawCheck {
        name: format!("subtableau n={n} ({}) [{i},{j}]", params.describe()),
        outcome: compare_laws(&pushed, &target),
    })
}

/// The two corner lemmas at box `(n-1, 1)`:
///
/// * given an α there, `S[1,3]` has the law of `S_{n-2,a,b}`;
/// * given a β there, deleting row `n-1` and column 2 leaves the law of
///   `S_{n-1,a,b}` conditioned on a β at its `(n-1, 1)`.
pub fn check_corner_lemmas(n: usize, params: &MeasureParams) -> Result<[LawCheck; 2]> {
    if n < 3 {
        return Err(Error::SizeTooSmall { n, min: 3 });
    }
    let corner = move |s: Symbol| move |t: &Tableau| t.get(n - 1, 1) == s;

    let alpha_side = match conditional_law(n, params, corner(Symbol::Alpha), |t| subtableau(t, 1, 3).expect("n >= 3"))? {
        None => LawOutcome::NullCondition,
        Some(cond) => compare_laws(&cond, &law(n - 2, params)?),
    };

    let beta_lhs = conditional_law(n, params, corner(Symbol::Beta), |t| delete_row_col(t, n - 1, 2).expect("n >= 3"))?;
    let beta_rhs = conditional_law(n - 1, params, |t: &Tableau| t.get(n - 1, 1) == Symbol::Beta, |t| t.clone())?;
    let beta_side = match (beta_lhs, beta_rhs) {
        (Some(l), Some(r)) => compare_laws(&l, &r),
        _ => LawOutcome::NullCondition,
    };

    let tag = params.describe();
    Ok([
        LawCheck { name: format!("corner alpha n={n} ({tag})"), outcome: alpha_side },
        LawCheck { name: format!("corner beta n={n} ({tag})"), outcome: beta_side },
    ])
}

/// Where a batch came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleSource {
    AlphaBeta(MeasureParams),
    FourSymbol { alpha: Rational, beta: Rational, gamma: Rational, delta: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleBatch {
    pub n: usize,
    pub source: SampleSource,
    pub seed: u64,
    pub tableaux: Vec<Tableau>,
}

impl SampleBatch {
    /// One-line JSON header with a fixed key order.
    pub fn header_json(&self) -> String {
        let params = match &self.source {
            SampleSource::AlphaBeta(p) => format!(
                "\"a\":\"{}\",\"b\":\"{}\",\"max_symbols\":{}",
                to_pq(p.a()),
                to_pq(p.b()),
                p.is_max_symbols()
            ),
            SampleSource::FourSymbol { alpha, beta, gamma, delta } => format!(
                "\"alpha\":\"{}\",\"beta\":\"{}\",\"gamma\":\"{}\",\"delta\":\"{}\"",
                to_pq(alpha),
                to_pq(beta),
                to_pq(gamma),
                to_pq(delta)
            ),
        };
        format!("{{\"n\":{},{},\"seed\":{},\"count\":{}}}", self.n, params, self.seed, self.tableaux.len())
    }

    /// Header line, blank line, then the tableau blocks.
    pub fn to_text(&self) -> String {
        format!("{}\n\n{}", self.header_json(), crate::text::write_blocks(&self.tableaux))
    }
}

const BLOCK: usize = 1024;

/// Uniform integer in `[0, bound)` by rejection on whole 64-bit words.
fn uniform_below(rng: &mut ChaCha8Rng, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero());
    let bits = bound.bits();
    let words = bits.div_ceil(64) as usize;
    let top_bits = bits - 64 * (words as u64 - 1);
    loop {
        let mut digits: Vec<u64> = (0..words).map(|_| rng.next_u64()).collect();
        if top_bits < 64 {
            digits[words - 1] &= (1u64 << top_bits) - 1;
        }
        let x = BigUint::from_slice(
            &digits.iter().flat_map(|d| [*d as u32, (*d >> 32) as u32]).collect::<Vec<u32>>(),
        );
        if &x < bound {
            return x;
        }
    }
}

/// Bernoulli(`p`) for a rational `p` in `[0, 1]`.
fn bernoulli(rng: &mut ChaCha8Rng, p: &Rational) -> bool {
    if p.is_zero() {
        return false;
    }
    if p >= &Rational::one() {
        return true;
    }
    let den = p.denom().to_biguint().unwrap();
    let num = p.numer().to_biguint().unwrap();
    uniform_below(rng, &den) < num
}

/// Exact sampler for `S_{n,a,b}`.
///
/// Built once from the enumeration: tableaux are grouped by `(Nα, Nβ)`,
/// a cumulative table of integer class weights picks the class, and a
/// uniform index picks the tableau inside it. Randomness comes from
/// ChaCha8 seeded with `seed`; draws are cut into blocks of 1024 and block
/// `k` uses stream `k`, so a batch does not depend on thread count.
#[derive(Debug, Clone)]
pub struct Sampler {
    n: usize,
    params: MeasureParams,
    classes: Vec<Vec<u32>>,
    cumulative: Vec<BigUint>,
    tableaux: Vec<Tableau>,
}

impl Sampler {
    pub fn new(n: usize, params: &MeasureParams) -> Result<Self> {
        limits().check_alpha_beta(n)?;
        let tableaux = enumerate::enumerate_ab(n)?;
        let table = ClassTable::build(n)?;
        let weights = table.integer_weights(params);
        let index: HashMap<(usize, usize), usize> = weights.iter().enumerate().map(|(k, (c, _))| (*c, k)).collect();
        let mut classes = vec![Vec::new(); weights.len()];
        for (k, t) in tableaux.iter().enumerate() {
            classes[index[&class_of(t)]].push(k as u32);
        }
        let mut acc = BigUint::zero();
        let cumulative = weights
            .iter()
            .zip(&classes)
            .map(|((_, w), members)| {
                acc += w * BigUint::from(members.len());
                acc.clone()
            })
            .collect();
        Ok(Sampler { n, params: params.clone(), classes, cumulative, tableaux })
    }

    pub fn params(&self) -> &MeasureParams {
        &self.params
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> &Tableau {
        let total = self.cumulative.last().expect("at least one class");
        let x = uniform_below(rng, total);
        let cls = self.cumulative.partition_point(|c| c <= &x);
        let members = &self.classes[cls];
        let k = uniform_below(rng, &BigUint::from(members.len())).to_usize().unwrap();
        &self.tableaux[members[k] as usize]
    }

    fn blocks<R: Send, F>(&self, seed: u64, count: usize, exec: Exec, f: F) -> Vec<R>
    where
        F: Fn(&mut ChaCha8Rng, &Tableau) -> R + Sync + Send,
    {
        let nblocks = count.div_ceil(BLOCK);
        exec.map_range(nblocks, |blk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(blk as u64);
            let len = BLOCK.min(count - blk * BLOCK);
            (0..len)
                .map(|_| {
                    let t = self.draw(&mut rng);
                    f(&mut rng, t)
                })
                .collect::<Vec<R>>()
        })
        .into_iter()
        .flatten()
        .collect()
    }

    pub fn sample(&self, seed: u64, count: usize) -> SampleBatch {
        self.sample_with(seed, count, Exec::default())
    }

    pub fn sample_with(&self, seed: u64, count: usize, exec: Exec) -> SampleBatch {
        let tableaux = self.blocks(seed, count, exec, |_, t| t.clone());
        SampleBatch { n: self.n, source: SampleSource::AlphaBeta(self.params.clone()), seed, tableaux }
    }
}

/// `count` i.i.d. draws from `S_{n,a,b}`.
pub fn sample(n: usize, params: &MeasureParams, seed: u64, count: usize) -> Result<SampleBatch> {
    Ok(Sampler::new(n, params)?.sample(seed, count))
}

/// Four-symbol draws: `S_{n, α+γ, β+δ}`, then each α independently becomes
/// γ with probability `γ/(α+γ)` and each β becomes δ with probability
/// `δ/(β+δ)`.
pub fn sample_four(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    seed: u64,
    count: usize,
) -> Result<SampleBatch> {
    if [alpha, beta, gamma, delta].iter().any(|x| x.is_negative()) {
        return Err(Error::InadmissibleParams("rates must be non-negative".into()));
    }
    let col = alpha + gamma;
    let row = beta + delta;
    let params = MeasureParams::from_rates(&col, &row)?;
    let to_gamma = gamma / &col;
    let to_delta = delta / &row;
    let sampler = Sampler::new(n, &params)?;
    let tableaux = sampler.blocks(seed, count, Exec::default(), |rng, t| {
        let mut out = t.clone();
        for cell in out.cells_mut() {
            match *cell {
                Symbol::Alpha if bernoulli(rng, &to_gamma) => *cell = Symbol::Gamma,
                Symbol::Beta if bernoulli(rng, &to_delta) => *cell = Symbol::Delta,
                _ => {}
            }
        }
        out
    });
    Ok(SampleBatch {
        n,
        source: SampleSource::FourSymbol {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            delta: delta.clone(),
        },
        seed,
        tableaux,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::tableau::fixtures::tab;
    use crate::tableau::involution;
    use Symbol::*;

    fn p(a: i64, b: i64) -> MeasureParams {
        MeasureParams::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn params_guard() {
        assert!(MeasureParams::new(int(0), int(0)).is_err());
        assert!(MeasureParams::new(int(-1), int(1)).is_err());
        assert!(MeasureParams::new(int(0), int(1)).is_ok());
        assert!(MeasureParams::with_limits(int(0), int(0)).unwrap().is_max_symbols());
        let m = MeasureParams::from_rates(&int(2), &frac(1, 3)).unwrap();
        assert_eq!((m.a(), m.b()), (&frac(1, 2), &int(3)));
        assert!(MeasureParams::max_symbols().shifted(1, 0) == MeasureParams::new(int(1), int(0)).unwrap());
    }

    #[test]
    fn probability_examples() {
        let one = p(1, 1);
        assert_eq!(tableau_probability(&tab(1, &[((1, 1), Alpha)]), &one).unwrap(), frac(1, 2));
        let t = tab(2, &[((1, 2), Alpha), ((2, 1), Beta), ((1, 1), Beta)]);
        assert_eq!(tableau_probability(&t, &one).unwrap(), frac(1, 6));
        assert!(tableau_probability(&Tableau::empty(2), &one).is_err());
    }

    #[test]
    fn alpha_infinite_concentrates_on_max_alpha() {
        let inf = MeasureParams::new(int(0), int(1)).unwrap();
        let mut total = Rational::zero();
        for t in enumerate::enumerate_ab(2).unwrap() {
            let pr = tableau_probability(&t, &inf).unwrap();
            if t.count(Alpha) < 2 {
                assert!(pr.is_zero());
            } else {
                assert!(pr.is_positive());
            }
            total += pr;
        }
        assert_eq!(total, int(1));
    }

    #[test]
    fn normalization_everywhere() {
        let points = [
            p(1, 1),
            MeasureParams::new(frac(2, 3), int(5)).unwrap(),
            MeasureParams::new(int(0), int(2)).unwrap(),
            MeasureParams::new(int(3), int(0)).unwrap(),
            MeasureParams::max_symbols(),
        ];
        for n in 1..=5 {
            for params in &points {
                let l = law(n, params).unwrap();
                let s: Rational = l.values().sum();
                assert_eq!(s, int(1), "n={n} {}", params.describe());
            }
        }
    }

    #[test]
    fn max_symbols_is_uniform_on_top_class() {
        for n in 1..=5 {
            let table = ClassTable::build(n).unwrap();
            assert_eq!(table.max_symbols(), 2 * n - 1);
            let l = law(n, &MeasureParams::max_symbols()).unwrap();
            let vals: Vec<&Rational> = l.values().collect();
            assert!(vals.windows(2).all(|w| w[0] == w[1]));
            assert!(l.keys().all(|t| t.count(Alpha) + t.count(Beta) == 2 * n - 1));
        }
    }

    #[test]
    fn involution_symmetry() {
        let params = MeasureParams::new(frac(1, 2), int(3)).unwrap();
        for t in enumerate::enumerate_ab(4).unwrap() {
            assert_eq!(
                tableau_probability(&t, &params).unwrap(),
                tableau_probability(&involution(&t), &params.swapped()).unwrap()
            );
        }
    }

    #[test]
    fn subtableau_law_examples() {
        assert!(check_subtableau_law(4, &p(1, 1), 1, 1).unwrap().holds());
        assert!(check_subtableau_law(4, &p(1, 1), 2, 1).unwrap().holds());
        let params = MeasureParams::new(frac(1, 2), int(2)).unwrap();
        assert!(check_subtableau_law(5, &params, 2, 2).unwrap().holds());
        assert!(check_subtableau_law(3, &params, 3, 2).is_err());
    }

    #[test]
    fn corner_lemma_examples() {
        let [a, b] = check_corner_lemmas(3, &p(1, 1)).unwrap();
        assert!(a.holds() && b.holds());
        let [a, _] = check_corner_lemmas(4, &p(1, 1)).unwrap();
        assert!(a.holds());
        let [_, b] = check_corner_lemmas(4, &MeasureParams::new(int(2), frac(1, 3)).unwrap()).unwrap();
        assert!(b.holds());
        // b = 0 makes an α at (n-1, 1) impossible
        let [a, _] = check_corner_lemmas(4, &MeasureParams::new(int(1), int(0)).unwrap()).unwrap();
        assert_eq!(a.outcome, LawOutcome::NullCondition);
        assert!(check_corner_lemmas(2, &p(1, 1)).is_err());
    }

    #[test]
    fn corner_alpha_law_at_three_is_size_one_law() {
        let params = MeasureParams::new(int(2), frac(1, 2)).unwrap();
        let cond = conditional_law(3, &params, |t: &Tableau| t.get(2, 1) == Alpha, |t| subtableau(t, 1, 3).unwrap())
            .unwrap()
            .unwrap();
        // S_1: α with probability b/(a+b)
        assert_eq!(cond.len(), 2);
        assert_eq!(cond[&tab(1, &[((1, 1), Alpha)])], frac(1, 5));
    }

    #[test]
    fn sampling_is_deterministic() {
        let params = p(1, 1);
        let a = sample(3, &params, 42, 3000).unwrap();
        let b = sample(3, &params, 42, 3000).unwrap();
        assert_eq!(a, b);
        let s = Sampler::new(3, &params).unwrap();
        assert_eq!(s.sample_with(42, 3000, Exec::Sequential), s.sample_with(42, 3000, Exec::Parallel));
        assert_ne!(sample(3, &params, 43, 3000).unwrap().tableaux, a.tableaux);
        assert!(a.header_json().starts_with("{\"n\":3,\"a\":\"1/1\""));
    }

    fn within_five_sigma(hits: usize, total: usize, p: f64) -> bool {
        let freq = hits as f64 / total as f64;
        let sigma = (p * (1.0 - p) / total as f64).sqrt();
        (freq - p).abs() <= 5.0 * sigma
    }

    #[test]
    fn sampler_frequencies() {
        let batch = sample(1, &p(1, 1), 7, 100_000).unwrap();
        let hits = batch.tableaux.iter().filter(|t| t.get(1, 1) == Alpha).count();
        assert!(within_five_sigma(hits, 100_000, 0.5));

        let batch = sample(3, &p(1, 1), 9, 100_000).unwrap();
        let hits = batch.tableaux.iter().filter(|t| t.get(2, 1) == Alpha).count();
        assert!(within_five_sigma(hits, 100_000, 1.0 / 12.0));
    }

    #[test]
    fn boundary_sampling_respects_support() {
        let params = MeasureParams::new(int(0), int(1)).unwrap();
        let batch = sample(3, &params, 1, 2000).unwrap();
        assert!(batch.tableaux.iter().all(|t| t.count(Alpha) == 3));
        let batch = sample(3, &MeasureParams::max_symbols(), 1, 2000).unwrap();
        assert!(batch.tableaux.iter().all(|t| t.count(Alpha) + t.count(Beta) == 5));
    }

    #[test]
    fn four_symbol_sampling() {
        let z = Rational::zero();
        let plain = sample(3, &MeasureParams::from_rates(&int(2), &int(3)).unwrap(), 5, 500).unwrap();
        let four = sample_four(3, &int(2), &int(3), &z, &z, 5, 500).unwrap();
        assert_eq!(plain.tableaux, four.tableaux);

        let one = int(1);
        let batch = sample_four(1, &one, &one, &one, &one, 3, 100_000).unwrap();
        for s in Symbol::SYMBOLS {
            let hits = batch.tableaux.iter().filter(|t| t.get(1, 1) == s).count();
            assert!(within_five_sigma(hits, 100_000, 0.25), "{s:?}: {hits}");
        }

        let batch = sample_four(2, &one, &one, &one, &one, 4, 100_000).unwrap();
        let target = tab(2, &[((1, 2), Gamma), ((2, 1), Delta)]);
        let hits = batch.tableaux.iter().filter(|t| **t == target).count();
        assert!(within_five_sigma(hits, 100_000, 1.0 / 32.0));
        assert!(batch.tableaux.iter().all(|t| t.is_valid()));
    }

    #[test]
    fn uniform_below_covers_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let bound = BigUint::from(5u32);
        let mut seen = [0usize; 5];
        for _ in 0..5000 {
            seen[uniform_below(&mut rng, &bound).to_usize().unwrap()] += 1;
        }
        assert!(seen.iter().all(|&c| c > 800));
        let big = BigUint::one() << 70usize;
        assert!(uniform_below(&mut rng, &big) < big);
    }
}
