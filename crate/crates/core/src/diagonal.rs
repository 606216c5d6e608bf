//! Closed-form laws for single boxes and for the second main diagonal,
//! the factorial-moment machinery, and exact PMFs of the diagonal counts.
//!
//! Second-diagonal position `j` (1..=n-1) is box `(n - j, j)`. The three
//! statistics are `A` (α's on the second diagonal), `B` (β's) and `X`
//! (non-empty boxes).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::enumerate::limits;
use crate::error::{Error, Result};
use crate::measure::{pushforward, MeasureParams, Sampler};
use crate::par::Exec;
use crate::rational::{binomial, factorial, falling, falling_int, int, Rational};
use crate::tableau::{Symbol, Tableau};

fn nonzero(den: Rational, what: &str) -> Result<Rational> {
    if den.is_zero() {
        Err(Error::Singular(what.to_string()))
    } else {
        Ok(den)
    }
}

/// Law of a single box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxLaw {
    pub alpha: Rational,
    pub beta: Rational,
    pub empty: Rational,
}

/// Single-box law of `S_{n,a,b}` at `(i, j)`.
///
/// On the main diagonal `P(α) = (n - i + b)/(n + a + b - 1)`; elsewhere
/// `P(α) = (j - 1 + b)/D` and `P(β) = (i - 1 + a)/D` with
/// `D = (i + j + a + b - 1)(i + j + a + b - 2)`.
pub fn p_box(n: usize, params: &MeasureParams, i: usize, j: usize) -> Result<BoxLaw> {
    if i == 0 || j == 0 || i + j > n + 1 {
        return Err(Error::BoxOutOfRange { n, i, j });
    }
    let (a, b) = (params.a(), params.b());
    if i + j == n + 1 {
        let den = nonzero(int(n as i64 - 1) + a + b, "main-diagonal box")?;
        let alpha = (int((n - i) as i64) + b) / den;
        let beta = Rational::one() - &alpha;
        return Ok(BoxLaw { alpha, beta, empty: Rational::zero() });
    }
    let s = int((i + j) as i64) + a + b;
    let den = nonzero((&s - int(1)) * (&s - int(2)), "off-diagonal box")?;
    let alpha = (int(j as i64 - 1) + b) / &den;
    let beta = (int(i as i64 - 1) + a) / &den;
    let empty = Rational::one() - &alpha - &beta;
    Ok(BoxLaw { alpha, beta, empty })
}

/// Strictly increasing positions on the second diagonal of a size-`n`
/// tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionSet {
    positions: Vec<usize>,
}

impl PositionSet {
    /// Positions must lie in `1..=n-1` and increase strictly.
    pub fn new(positions: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&j) = positions.iter().find(|&&j| j == 0 || j + 1 > n) {
            return Err(Error::PositionOutOfRange { j, max: n.saturating_sub(1) });
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::PositionsNotIncreasing);
        }
        Ok(PositionSet { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Consecutive positions at least two apart.
    pub fn is_spread(&self) -> bool {
        self.positions.windows(2).all(|w| w[0] + 2 <= w[1])
    }
}

/// `P(all positions hold α)`:
/// `∏_{k=1..r} (b + j_{r-k+1} - 2r + 2k - 1) / ((a+b+n-2r+2k-1)(a+b+n-2r+2k-2))`,
/// and zero unless the set is spread.
pub fn p_alpha_joint(n: usize, params: &MeasureParams, ps: &PositionSet) -> Result<Rational> {
    check_positions(n, ps)?;
    if !ps.is_spread() {
        return Ok(Rational::zero());
    }
    let (a, b) = (params.a(), params.b());
    let r = ps.len() as i64;
    let mut acc = Rational::one();
    for k in 1..=r {
        let j = ps.positions[(r - k) as usize] as i64;
        let num = b + int(j - 2 * r + 2 * k - 1);
        let s = a + b + int(n as i64 - 2 * r + 2 * k);
        let den = nonzero((&s - int(1)) * (&s - int(2)), "joint alpha law")?;
        acc *= num / den;
    }
    Ok(acc)
}

/// `P(all positions non-empty) = ∏_{k=1..r} 1/(n + a + b - r + k - 1)`,
/// and zero unless the set is spread.
pub fn p_nonempty_joint(n: usize, params: &MeasureParams, ps: &PositionSet) -> Result<Rational> {
    check_positions(n, ps)?;
    if !ps.is_spread() {
        return Ok(Rational::zero());
    }
    nonempty_product(n, params, ps.len())
}

fn nonempty_product(n: usize, params: &MeasureParams, r: usize) -> Result<Rational> {
    let base = params.a() + params.b() + int(n as i64 - r as i64 - 1);
    let mut acc = Rational::one();
    for k in 1..=r {
        acc /= nonzero(&base + int(k as i64), "joint non-empty law")?;
    }
    Ok(acc)
}

fn check_positions(n: usize, ps: &PositionSet) -> Result<()> {
    match ps.positions.iter().find(|&&j| j + 1 > n) {
        Some(&j) => Err(Error::PositionOutOfRange { j, max: n.saturating_sub(1) }),
        None => Ok(()),
    }
}

/// All spread sets of size `r` in `1..=m` (the family `J_{r,m}`), in
/// lexicographic order.
pub fn spread_sets(r: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, left: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        // the remaining `left` picks need 2(left-1) more room
        let mut j = start;
        while j + 2 * (left - 1) <= m {
            cur.push(j);
            go(j + 2, left - 1, m, cur, out);
            cur.pop();
            j += 1;
        }
    }
    let mut out = Vec::new();
    go(1, r, m, &mut Vec::new(), &mut out);
    out
}

/// `Σ_{J_{r,m}} ∏ j_k` by listing the sets.
pub fn la_sum_bruteforce(r: usize, m: usize) -> Rational {
    let s: BigInt = spread_sets(r, m).iter().map(|js| js.iter().map(|&j| BigInt::from(j)).product::<BigInt>()).sum();
    Rational::from_integer(s)
}

/// `(m+1)_{2r} / (2^r r!)`.
pub fn la_sum_closed(r: usize, m: usize) -> Rational {
    let num = falling_int(m as u64 + 1, 2 * r);
    let den = (BigInt::one() << r) * factorial(r);
    Rational::new(num, den)
}

/// `Σ_{j=0..m} (j)_t` summed term by term.
pub fn falling_sum_bruteforce(t: usize, m: usize) -> Rational {
    Rational::from_integer((0..=m as u64).map(|j| falling_int(j, t)).sum())
}

/// `(m+1)_{t+1} / (t+1)`.
pub fn falling_sum_closed(t: usize, m: usize) -> Rational {
    Rational::new(falling_int(m as u64 + 1, t + 1), BigInt::from(t + 1))
}

/// `|J_{r,m}|` by listing.
pub fn count_spread_sets_bruteforce(r: usize, m: usize) -> u64 {
    spread_sets(r, m).len() as u64
}

/// `|J_{r,m}| = C(m - r + 1, r)`.
pub fn count_spread_sets(r: usize, m: usize) -> BigUint {
    if r > m + 1 {
        return BigUint::zero();
    }
    binomial((m + 1 - r) as u64, r as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stat {
    /// α's on the second diagonal.
    A,
    /// β's on the second diagonal.
    B,
    /// Non-empty boxes on the second diagonal.
    X,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::A => "A",
            Stat::B => "B",
            Stat::X => "X",
        }
    }

    /// Limit intensity: 1/2 for `A` and `B`, 1 for `X`.
    pub fn poisson_limit(self) -> Rational {
        match self {
            Stat::A | Stat::B => Rational::new(BigInt::one(), BigInt::from(2)),
            Stat::X => Rational::one(),
        }
    }

    pub fn of(self, t: &Tableau) -> usize {
        let n = t.size();
        (1..n)
            .filter(|&j| {
                let s = t.second_diagonal(j);
                match self {
                    Stat::A => s == Symbol::Alpha,
                    Stat::B => s == Symbol::Beta,
                    Stat::X => !s.is_empty(),
                }
            })
            .count()
    }
}

impl std::str::FromStr for Stat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Stat::A),
            "B" | "b" => Ok(Stat::B),
            "X" | "x" => Ok(Stat::X),
            other => Err(format!("unknown statistic {other:?}, expected A, B or X")),
        }
    }
}

/// Largest `r` with a non-empty `J_{r, n-1}`; higher factorial moments vanish.
pub fn vanishing_order(n: usize) -> usize {
    n / 2
}

/// `E(A_n)_r = r! Σ_{J_{r,n-1}} p_alpha_joint`.
///
/// The denominators depend only on `k`, and with `i_l = j_l - 2(l - 1)` the
/// numerators become `b + i_l - 1` over weakly increasing `i` in
/// `1..=n - 2r + 1`. The sum is then the complete homogeneous polynomial
/// `h_r(b, b + 1, ..., b + n - 2r)`, built one variable at a time.
pub fn factorial_moment_a(n: usize, params: &MeasureParams, r: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    if r == 0 {
        return Ok(Rational::one());
    }
    if 2 * r > n {
        return Ok(Rational::zero());
    }
    let (a, b) = (params.a(), params.b());
    let mut h = vec![Rational::zero(); r + 1];
    h[0] = Rational::one();
    for t in 0..=(n - 2 * r) {
        let x = b + int(t as i64);
        for k in 1..=r {
            let add = &x * &h[k - 1];
            h[k] += add;
        }
    }
    let mut acc = h[r].clone() * Rational::from_integer(factorial(r));
    let (n, r) = (n as i64, r as i64);
    for k in 1..=r {
        let s = a + b + int(n - 2 * r + 2 * k);
        acc /= nonzero((&s - int(1)) * (&s - int(2)), "joint alpha law")?;
    }
    Ok(acc)
}

/// `r! Σ_{J_{r,n-1}} p_alpha_joint`, summed set by set.
pub fn factorial_moment_a_summed(n: usize, params: &MeasureParams, r: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let sets = spread_sets(r, n - 1);
    let terms: Vec<Result<Rational>> = Exec::default().map(&sets, |js| {
        p_alpha_joint(n, params, &PositionSet { positions: js.clone() })
    });
    let mut sum = Rational::zero();
    for t in terms {
        sum += t?;
    }
    Ok(sum * Rational::from_integer(factorial(r)))
}

/// `E(B_n)_r`, the α moment with `a` and `b` exchanged.
pub fn factorial_moment_b(n: usize, params: &MeasureParams, r: usize) -> Result<Rational> {
    factorial_moment_a(n, &params.swapped(), r)
}

/// `E(X_n)_r = r! |J_{r,n-1}| ∏_{k=1..r} 1/(n + a + b - r + k - 1)`.
pub fn factorial_moment_x(n: usize, params: &MeasureParams, r: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let count = count_spread_sets(r, n - 1);
    if count.is_zero() {
        return Ok(Rational::zero());
    }
    let count = Rational::from_integer(BigInt::from(count));
    Ok(Rational::from_integer(factorial(r)) * count * nonempty_product(n, params, r)?)
}

/// `r! Σ_{J_{r,n-1}} p_nonempty_joint`, the summed route to `E(X_n)_r`.
pub fn factorial_moment_x_summed(n: usize, params: &MeasureParams, r: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let mut sum = Rational::zero();
    for js in spread_sets(r, n - 1) {
        sum += p_nonempty_joint(n, params, &PositionSet { positions: js })?;
    }
    Ok(sum * Rational::from_integer(factorial(r)))
}

pub fn factorial_moment(n: usize, params: &MeasureParams, stat: Stat, r: usize) -> Result<Rational> {
    match stat {
        Stat::A => factorial_moment_a(n, params, r),
        Stat::B => factorial_moment_b(n, params, r),
        Stat::X => factorial_moment_x(n, params, r),
    }
}

/// Factorial moments `E(N)_0, E(N)_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentVector {
    values: Vec<Rational>,
}

impl MomentVector {
    /// `values[r] = E(N)_r`; `values[0]` must be 1.
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.first() != Some(&Rational::one()) {
            return Err(Error::NotADistribution("zeroth factorial moment must be 1".into()));
        }
        Ok(MomentVector { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, r: usize) -> Rational {
        self.values.get(r).cloned().unwrap_or_default()
    }
}

/// Factorial moments of `stat` up to the vanishing order.
pub fn moment_vector(n: usize, params: &MeasureParams, stat: Stat) -> Result<MomentVector> {
    let values = (0..=vanishing_order(n))
        .map(|r| factorial_moment(n, params, stat, r))
        .collect::<Result<Vec<_>>>()?;
    MomentVector::new(values)
}

/// Exact probability mass function on `0..=support_max()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pmf {
    masses: Vec<Rational>,
}

impl Pmf {
    /// Masses must be non-negative and sum to one; trailing zeros are dropped.
    pub fn new(mut masses: Vec<Rational>) -> Result<Self> {
        if let Some((k, _)) = masses.iter().enumerate().find(|(_, p)| p.is_negative()) {
            return Err(Error::NegativeMass { k });
        }
        let total: Rational = masses.iter().sum();
        if total != Rational::one() {
            return Err(Error::NotADistribution(format!("masses sum to {total}")));
        }
        while masses.len() > 1 && masses.last().is_some_and(Zero::is_zero) {
            masses.pop();
        }
        Ok(Pmf { masses })
    }

    /// Empirical law of `values`.
    pub fn from_observations(values: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut counts: Vec<u64> = Vec::new();
        let mut total = 0u64;
        for v in values {
            if counts.len() <= v {
                counts.resize(v + 1, 0);
            }
            counts[v] += 1;
            total += 1;
        }
        if total == 0 {
            return Err(Error::NotADistribution("no observations".into()));
        }
        Pmf::new(counts.into_iter().map(|c| Rational::new(BigInt::from(c), BigInt::from(total))).collect())
    }

    pub fn get(&self, k: usize) -> Rational {
        self.masses.get(k).cloned().unwrap_or_default()
    }

    pub fn masses(&self) -> &[Rational] {
        &self.masses
    }

    pub fn support_max(&self) -> usize {
        self.masses.len() - 1
    }

    /// `Σ_k (k)_r P(k)`.
    pub fn factorial_moment(&self, r: usize) -> Rational {
        self.masses.iter().enumerate().map(|(k, p)| falling(&int(k as i64), r) * p).sum()
    }
}

/// Inverts factorial moments:
/// `P(N = k) = Σ_{r >= k} (-1)^{r-k} C(r, k) E(N)_r / r!`.
///
/// Moments past the end of `mv` are taken to be zero. Any mass above
/// `support_max` is an error, as is a negative mass.
pub fn pmf_from_factorial_moments(mv: &MomentVector, support_max: usize) -> Result<Pmf> {
    let top = mv.values.len() - 1;
    let mut masses = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut acc = Rational::zero();
        for r in k..=top {
            let term = Rational::from_integer(BigInt::from(binomial(r as u64, k as u64))) * &mv.values[r]
                / Rational::from_integer(factorial(r));
            if (r - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc.is_negative() {
            return Err(Error::NegativeMass { k });
        }
        masses.push(acc);
    }
    if masses.iter().skip(support_max + 1).any(|p| !p.is_zero()) {
        return Err(Error::SupportExceeded { max: support_max });
    }
    Pmf::new(masses)
}

/// Law of `stat` from the closed-form factorial moments; valid for any `n`.
pub fn pmf_from_formulas(n: usize, params: &MeasureParams, stat: Stat) -> Result<Pmf> {
    let mv = moment_vector(n, params, stat)?;
    pmf_from_factorial_moments(&mv, vanishing_order(n))
}

/// Law of `stat` by enumeration.
pub fn pmf_exact(n: usize, params: &MeasureParams, stat: Stat) -> Result<Pmf> {
    law_to_pmf(pushforward(n, params, move |t| Some(stat.of(t)))?)
}

fn law_to_pmf(law: crate::measure::Law<usize>) -> Result<Pmf> {
    let top = law.keys().next_back().copied().unwrap_or(0);
    let mut masses = vec![Rational::zero(); top + 1];
    for (k, p) in law {
        masses[k] = p;
    }
    Pmf::new(masses)
}

/// How [`diagonal_pmf`] obtains its law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalMode {
    Exact,
    Empirical { samples: usize, seed: u64 },
}

/// Number of non-empty boxes on diagonal `d` (`i + j = d`).
pub fn diagonal_count(t: &Tableau, d: usize) -> usize {
    (1..d).filter(|&j| !t.get(d - j, j).is_empty()).count()
}

/// Law of the symbol count on diagonal `d`: exact by enumeration, or the
/// empirical law of a seeded sample.
pub fn diagonal_pmf(n: usize, params: &MeasureParams, d: usize, mode: DiagonalMode) -> Result<Pmf> {
    if d < 2 || d > n + 1 {
        return Err(Error::DiagonalOutOfRange { d, max: n + 1 });
    }
    match mode {
        DiagonalMode::Exact => law_to_pmf(pushforward(n, params, move |t| Some(diagonal_count(t, d)))?),
        DiagonalMode::Empirical { samples, seed } => {
            limits().check_alpha_beta(n)?;
            let batch = Sampler::new(n, params)?.sample(seed, samples);
            Pmf::from_observations(batch.tableaux.iter().map(|t| diagonal_count(t, d)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::exact_event_probability;
    use crate::rational::frac;

    fn unit() -> MeasureParams {
        MeasureParams::new(int(1), int(1)).unwrap()
    }

    fn ps(v: &[usize], n: usize) -> PositionSet {
        PositionSet::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn box_examples() {
        assert_eq!(p_box(2, &unit(), 1, 2).unwrap().alpha, frac(2, 3));
        let l = p_box(3, &unit(), 2, 1).unwrap();
        assert_eq!((l.alpha, l.beta), (frac(1, 12), frac(2, 12)));
        let params = MeasureParams::new(frac(2, 3), int(4)).unwrap();
        for n in 2..6 {
            for j in 1..n {
                let l = p_box(n, &params, n - j, j).unwrap();
                let expected = Rational::one() / (int(n as i64 - 1) + params.a() + params.b());
                assert_eq!(l.alpha + l.beta, expected);
            }
        }
        assert!(p_box(3, &unit(), 3, 2).is_err());
    }

    #[test]
    fn box_laws_against_enumeration() {
        let params = MeasureParams::new(int(2), frac(1, 3)).unwrap();
        let n = 4;
        for i in 1..=n {
            for j in 1..=n + 1 - i {
                let l = p_box(n, &params, i, j).unwrap();
                let pa = exact_event_probability(n, &params, |t| t.get(i, j) == Symbol::Alpha).unwrap();
                let pb = exact_event_probability(n, &params, |t| t.get(i, j) == Symbol::Beta).unwrap();
                assert_eq!((l.alpha, l.beta), (pa, pb), "({i},{j})");
            }
        }
    }

    #[test]
    fn position_sets() {
        assert!(PositionSet::new(vec![0], 3).is_err());
        assert!(PositionSet::new(vec![3], 3).is_err());
        assert!(PositionSet::new(vec![2, 1], 5).is_err());
        assert!(ps(&[1, 3], 5).is_spread());
        assert!(!ps(&[1, 2], 5).is_spread());
        assert!(ps(&[], 5).is_spread());
    }

    #[test]
    fn joint_examples() {
        assert_eq!(p_alpha_joint(5, &unit(), &ps(&[2, 3], 5)).unwrap(), Rational::zero());
        assert_eq!(p_alpha_joint(3, &unit(), &ps(&[1], 3)).unwrap(), frac(1, 12));
        let f = p_alpha_joint(5, &unit(), &ps(&[1, 3], 5)).unwrap();
        let o = exact_event_probability(5, &unit(), |t| t.get(4, 1) == Symbol::Alpha && t.get(2, 3) == Symbol::Alpha)
            .unwrap();
        assert_eq!(f, o);

        assert_eq!(p_nonempty_joint(3, &unit(), &ps(&[1], 3)).unwrap(), frac(1, 4));
        assert_eq!(p_nonempty_joint(5, &unit(), &ps(&[1, 3], 5)).unwrap(), frac(1, 30));
        let o = exact_event_probability(5, &unit(), |t| !t.get(4, 1).is_empty() && !t.get(2, 3).is_empty()).unwrap();
        assert_eq!(o, frac(1, 30));
        assert_eq!(p_nonempty_joint(5, &unit(), &ps(&[3, 4], 5)).unwrap(), Rational::zero());
        assert_eq!(p_alpha_joint(4, &unit(), &ps(&[], 4)).unwrap(), Rational::one());
    }

    #[test]
    fn singular_points_are_reported() {
        // α = β = ∞ at n = 2r, j_r = 2r - 1 gives 0/0
        let m = MeasureParams::max_symbols();
        assert!(matches!(p_alpha_joint(2, &m, &ps(&[1], 2)), Err(Error::Singular(_))));
        assert!(p_box(2, &m, 1, 1).is_err());
    }

    #[test]
    fn spread_set_sums() {
        assert_eq!(la_sum_bruteforce(1, 3), int(6));
        assert_eq!(la_sum_closed(1, 3), int(6));
        assert_eq!(la_sum_bruteforce(2, 3), int(3));
        assert_eq!(la_sum_closed(2, 3), int(3));
        assert_eq!(la_sum_bruteforce(3, 8), la_sum_closed(3, 8));
        assert_eq!(la_sum_bruteforce(3, 4), Rational::zero());
        assert_eq!(la_sum_closed(3, 4), Rational::zero());
        assert_eq!(falling_sum_bruteforce(2, 4), falling_sum_closed(2, 4));
        assert_eq!(falling_sum_closed(0, 5), int(6));
    }

    #[test]
    fn spread_counts() {
        assert_eq!(spread_sets(2, 4), vec![vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert_eq!(count_spread_sets_bruteforce(2, 4), 3);
        assert_eq!(count_spread_sets(2, 4), BigUint::from(3u32));
        assert_eq!(count_spread_sets(1, 9), BigUint::from(9u32));
        assert_eq!(count_spread_sets(0, 7), BigUint::one());
        assert_eq!(count_spread_sets_bruteforce(0, 0), 1);
        assert_eq!(count_spread_sets(4, 6), BigUint::zero());
    }

    #[test]
    fn moment_examples() {
        assert_eq!(factorial_moment_a(3, &unit(), 1).unwrap(), frac(1, 4));
        assert_eq!(factorial_moment_a(5, &unit(), 3).unwrap(), Rational::zero());
        assert_eq!(factorial_moment_a(4, &unit(), 0).unwrap(), Rational::one());
        assert_eq!(factorial_moment_x(3, &unit(), 1).unwrap(), frac(1, 2));
        assert_eq!(factorial_moment_x(3, &unit(), 0).unwrap(), Rational::one());
        assert_eq!(factorial_moment_x(60, &unit(), 1).unwrap(), frac(59, 61));
        let params = MeasureParams::new(frac(2, 3), int(5)).unwrap();
        for n in 1..14 {
            for r in 0..8 {
                assert_eq!(
                    factorial_moment_a(n, &params, r).unwrap(),
                    factorial_moment_a_summed(n, &params, r).unwrap(),
                    "n={n} r={r}"
                );
            }
        }
        for n in 2..9 {
            for r in 0..4 {
                assert_eq!(factorial_moment_x(n, &unit(), r).unwrap(), factorial_moment_x_summed(n, &unit(), r).unwrap());
            }
        }
    }

    #[test]
    fn inversion_examples() {
        let a3 = pmf_from_factorial_moments(&MomentVector::new(vec![int(1), frac(1, 4)]).unwrap(), 1).unwrap();
        assert_eq!(a3.masses(), &[frac(3, 4), frac(1, 4)]);
        assert_eq!(a3, pmf_exact(3, &unit(), Stat::A).unwrap());
        let x3 = pmf_from_factorial_moments(&MomentVector::new(vec![int(1), frac(1, 2)]).unwrap(), 1).unwrap();
        assert_eq!(x3.masses(), &[frac(1, 2), frac(1, 2)]);
        assert_eq!(x3, pmf_exact(3, &unit(), Stat::X).unwrap());
        // E(N)_1 = 2 on a 0/1 variable is impossible
        let bad = MomentVector::new(vec![int(1), int(2)]).unwrap();
        assert!(matches!(pmf_from_factorial_moments(&bad, 1), Err(Error::NegativeMass { .. })));
        let wide = MomentVector::new(vec![int(1), int(1), int(1)]).unwrap();
        assert!(matches!(pmf_from_factorial_moments(&wide, 1), Err(Error::SupportExceeded { .. })));
        assert!(MomentVector::new(vec![int(2)]).is_err());
    }

    #[test]
    fn inversion_of_truncated_poisson() {
        let mv = MomentVector::new(vec![int(1); 41]).unwrap();
        let pmf = pmf_from_factorial_moments(&mv, 40).unwrap();
        let mut fact = 1.0f64;
        for k in 0..20 {
            if k > 0 {
                fact *= k as f64;
            }
            let target = (-1.0f64).exp() / fact;
            assert!((crate::rational::to_f64(&pmf.get(k)) - target).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn pmf_exact_examples() {
        let params = MeasureParams::new(frac(1, 2), int(3)).unwrap();
        for n in 2..=5 {
            assert_eq!(pmf_exact(n, &params, Stat::B).unwrap(), pmf_exact(n, &params.swapped(), Stat::A).unwrap());
        }
        let x2 = pmf_exact(2, &params, Stat::X).unwrap();
        let one = Rational::one() / (int(1) + params.a() + params.b());
        assert_eq!(x2.masses(), &[Rational::one() - &one, one]);
        assert_eq!(pmf_exact(3, &unit(), Stat::X).unwrap().masses(), &[frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn pmf_guards() {
        assert!(Pmf::new(vec![frac(1, 2)]).is_err());
        assert!(Pmf::new(vec![frac(3, 2), frac(-1, 2)]).is_err());
        assert_eq!(Pmf::new(vec![int(1), int(0), int(0)]).unwrap().support_max(), 0);
        assert_eq!(Pmf::from_observations([0, 2, 2, 2]).unwrap().masses(), &[frac(1, 4), int(0), frac(3, 4)]);
    }

    #[test]
    fn diagonal_modes() {
        let params = unit();
        let full = diagonal_pmf(5, &params, 6, DiagonalMode::Exact).unwrap();
        assert_eq!(full.masses().len(), 6);
        assert_eq!(full.get(5), Rational::one());
        assert_eq!(diagonal_pmf(5, &params, 5, DiagonalMode::Exact).unwrap(), pmf_exact(5, &params, Stat::X).unwrap());
        let emp = diagonal_pmf(4, &params, 5, DiagonalMode::Empirical { samples: 100, seed: 3 }).unwrap();
        assert_eq!(emp.get(4), Rational::one());
        assert!(diagonal_pmf(4, &params, 6, DiagonalMode::Exact).is_err());
    }
}
