//! The open-boundary exclusion process on `n` sites and its stationary law.
//!
//! States are bit masks with bit `k - 1` standing for site `k`. Particles
//! enter site 1 at rate α and leave it at rate γ, enter site `n` at rate δ
//! and leave it at rate β, and hop right at rate `u` and left at rate `q`.
//! The chain runs in continuous time; its stationary vector is the same as
//! that of any uniformized discrete-time version.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::enumerate::{limits, visit_full};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::par::Exec;
use crate::rational::{pow, to_pq, Rational};
use crate::tableau::{asep_type_unchecked, fill_uq, AsepState, Monomial, TypeConvention};

/// Largest chain built.
pub const MAX_SITES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsepRates {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub u: Rational,
    pub q: Rational,
}

impl AsepRates {
    /// All rates must be non-negative, with some way in (α or δ) and some
    /// way out (β or γ).
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational, u: Rational, q: Rational) -> Result<Self> {
        let r = AsepRates { alpha, beta, gamma, delta, u, q };
        if r.all().iter().any(|x| x.is_negative()) {
            return Err(Error::InadmissibleRates("rates must be non-negative".into()));
        }
        if r.alpha.is_zero() && r.delta.is_zero() {
            return Err(Error::InadmissibleRates("no entry rate (alpha and delta are zero)".into()));
        }
        if r.beta.is_zero() && r.gamma.is_zero() {
            return Err(Error::InadmissibleRates("no exit rate (beta and gamma are zero)".into()));
        }
        Ok(r)
    }

    /// Parses `a,b,g,d,u,q`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s.split(',').map(|p| crate::rational::parse(p.trim())).collect::<Result<Vec<_>>>()?;
        let [a, b, g, d, u, q]: [Rational; 6] = parts
            .try_into()
            .map_err(|_| Error::InadmissibleRates(format!("expected six rates a,b,g,d,u,q, got {s:?}")))?;
        AsepRates::new(a, b, g, d, u, q)
    }

    fn all(&self) -> [&Rational; 6] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta, &self.u, &self.q]
    }

    /// Value of a monomial at these rates.
    pub fn evaluate(&self, m: &Monomial) -> Rational {
        pow(&self.alpha, m.alpha)
            * pow(&self.beta, m.beta)
            * pow(&self.gamma, m.gamma)
            * pow(&self.delta, m.delta)
            * pow(&self.u, m.u)
            * pow(&self.q, m.q)
    }

    pub fn describe(&self) -> String {
        self.all().iter().map(|x| to_pq(x)).collect::<Vec<_>>().join(",")
    }
}

/// Sparse generator: off-diagonal rates per row, diagonal is minus their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl GeneratorMatrix {
    pub fn sites(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Positive-rate transitions out of `from`, by target state.
    pub fn transitions(&self, from: usize) -> &[(usize, Rational)] {
        &self.rows[from]
    }

    pub fn entry(&self, from: usize, to: usize) -> Rational {
        if from == to {
            return -self.rows[from].iter().map(|(_, r)| r).sum::<Rational>();
        }
        self.rows[from].iter().filter(|(t, _)| *t == to).map(|(_, r)| r).sum()
    }

    /// `Σ_i π_i G[i][j]` for every `j`.
    pub fn left_multiply(&self, pi: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, r) in row {
                let flow = &pi[i] * r;
                out[*j] += &flow;
                out[i] -= flow;
            }
        }
        out
    }

    fn dense(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Every state reaches every other along positive rates.
    pub fn is_irreducible(&self) -> bool {
        let forward = reach(self.dim(), |s| self.rows[s].iter().map(|(t, _)| *t).collect());
        let mut back: Vec<Vec<usize>> = vec![Vec::new(); self.dim()];
        for (s, row) in self.rows.iter().enumerate() {
            for (t, _) in row {
                back[*t].push(s);
            }
        }
        let backward = reach(self.dim(), |s| back[s].clone());
        forward && backward
    }
}

fn reach(dim: usize, next: impl Fn(usize) -> Vec<usize>) -> bool {
    let mut seen = vec![false; dim];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(s) = queue.pop_front() {
        for t in next(s) {
            if !seen[t] {
                seen[t] = true;
                count += 1;
                queue.push_back(t);
            }
        }
    }
    count == dim
}

fn transitions_from(n: usize, rates: &AsepRates, s: usize) -> Vec<(usize, Rational)> {
    let occ = |k: usize| s >> (k - 1) & 1 == 1;
    let flip = |k: usize| s ^ (1 << (k - 1));
    let mut out: Vec<(usize, Rational)> = Vec::new();
    let mut add = |t: usize, r: &Rational| {
        if r.is_zero() {
            return;
        }
        match out.iter_mut().find(|(x, _)| *x == t) {
            Some((_, acc)) => *acc += r,
            None => out.push((t, r.clone())),
        }
    };
    if occ(1) {
        add(flip(1), &rates.gamma);
    } else {
        add(flip(1), &rates.alpha);
    }
    if occ(n) {
        add(flip(n), &rates.beta);
    } else {
        add(flip(n), &rates.delta);
    }
    for k in 1..n {
        match (occ(k), occ(k + 1)) {
            (true, false) => add(s ^ (0b11 << (k - 1)), &rates.u),
            (false, true) => add(s ^ (0b11 << (k - 1)), &rates.q),
            _ => {}
        }
    }
    out.sort_by_key(|(t, _)| *t);
    out
}

/// Generator of the chain on `n` sites.
pub fn build_generator(n: usize, rates: &AsepRates) -> Result<GeneratorMatrix> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    if n > MAX_SITES {
        return Err(Error::CapExceeded { what: "ASEP generator", n, cap: MAX_SITES });
    }
    let rows = Exec::default().map_range(1 << n, |s| transitions_from(n, rates, s));
    Ok(GeneratorMatrix { n, rows })
}

/// The probability vector `π` with `πG = 0`.
pub fn stationary_distribution(g: &GeneratorMatrix) -> Result<Vec<Rational>> {
    if !g.is_irreducible() {
        return Err(Error::ReducibleChain);
    }
    let dim = g.dim();
    let dense = g.dense();
    // transpose, with the last balance equation replaced by normalization
    let mut m: Vec<Vec<Rational>> = (0..dim).map(|j| (0..dim).map(|i| dense[i][j].clone()).collect()).collect();
    m[dim - 1] = vec![Rational::from_integer(1.into()); dim];
    let mut rhs = vec![Rational::zero(); dim];
    rhs[dim - 1] = Rational::from_integer(1.into());
    let pi = solve(&m, &rhs)?;
    debug_assert!(g.left_multiply(&pi).iter().all(Zero::is_zero));
    Ok(pi)
}

/// Stationary law predicted by the tableaux: the total six-parameter weight
/// of filled four-symbol tableaux of each type, over the total weight.
pub fn tableaux_steady_state(n: usize, rates: &AsepRates, convention: TypeConvention) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    limits().check_full(n)?;
    let mut by_type = vec![Rational::zero(); 1 << n];
    let mut failure = None;
    visit_full(n, |t| match fill_uq(t) {
        Ok(f) => by_type[asep_type_unchecked(t, convention).mask()] += rates.evaluate(&f.weight()),
        Err(e) => failure = Some(e),
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let z: Rational = by_type.iter().sum();
    if z.is_zero() {
        return Err(Error::Singular("total tableau weight is zero".into()));
    }
    Ok(by_type.into_iter().map(|w| w / &z).collect())
}

/// Outcome of comparing the chain's stationary law with the tableaux.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub n: usize,
    pub rates: AsepRates,
    pub chain: Vec<Rational>,
    pub tableaux: Vec<Rational>,
    pub max_discrepancy: Rational,
}

impl CorrespondenceReport {
    pub fn equal(&self) -> bool {
        self.max_discrepancy.is_zero()
    }

    /// JSON with both vectors keyed by state in site order (`1` = occupied).
    pub fn to_json(&self) -> String {
        let vector = |v: &[Rational]| {
            let entries: Vec<String> = v
                .iter()
                .enumerate()
                .map(|(s, p)| format!("\"{}\": \"{}\"", state_label(self.n, s), to_pq(p)))
                .collect();
            format!("{{{}}}", entries.join(", "))
        };
        format!(
            "{{\"n\": {}, \"rates\": \"{}\", \"chain\": {}, \"tableaux\": {}, \"max_discrepancy\": \"{}\", \"equal\": {}}}",
            self.n,
            self.rates.describe(),
            vector(&self.chain),
            vector(&self.tableaux),
            to_pq(&self.max_discrepancy),
            self.equal()
        )
    }
}

/// `"1010"`: site 1 first.
pub fn state_label(n: usize, mask: usize) -> String {
    AsepState::from_mask(n, mask).sites().iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn verify_correspondence(n: usize, rates: &AsepRates) -> Result<CorrespondenceReport> {
    verify_correspondence_with(n, rates, TypeConvention::default())
}

pub fn verify_correspondence_with(n: usize, rates: &AsepRates, convention: TypeConvention) -> Result<CorrespondenceReport> {
    let tableaux = tableaux_steady_state(n, rates, convention)?;
    let chain = stationary_distribution(&build_generator(n, rates)?)?;
    let max_discrepancy = chain
        .iter()
        .zip(&tableaux)
        .map(|(a, b)| (a - b).abs())
        .max()
        .unwrap_or_default();
    Ok(CorrespondenceReport { n, rates: rates.clone(), chain, tableaux, max_discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn rates(v: [i64; 6]) -> AsepRates {
        let [a, b, g, d, u, q] = v.map(int);
        AsepRates::new(a, b, g, d, u, q).unwrap()
    }

    #[test]
    fn rate_guards() {
        assert!(AsepRates::new(int(0), int(1), int(1), int(0), int(1), int(1)).is_err());
        assert!(AsepRates::new(int(1), int(0), int(0), int(0), int(1), int(1)).is_err());
        assert!(AsepRates::new(int(-1), int(1), int(1), int(1), int(1), int(1)).is_err());
        assert_eq!(AsepRates::parse("1,2,1/2,1,3,1").unwrap().gamma, frac(1, 2));
        assert!(AsepRates::parse("1,2,3").is_err());
    }

    #[test]
    fn generator_examples() {
        let g = build_generator(1, &rates([2, 3, 5, 7, 1, 1])).unwrap();
        assert_eq!(g.entry(0, 1), int(9));
        assert_eq!(g.entry(1, 0), int(8));
        let g = build_generator(2, &rates([1; 6])).unwrap();
        // (•,◦) is mask 0b01
        let out: Vec<usize> = g.transitions(0b01).iter().map(|(t, _)| *t).collect();
        assert_eq!(out, vec![0b00, 0b10, 0b11]);
        for s in 0..g.dim() {
            assert_eq!((0..g.dim()).map(|t| g.entry(s, t)).sum::<Rational>(), Rational::zero());
        }
        assert!(build_generator(13, &rates([1; 6])).is_err());
    }

    #[test]
    fn stationary_examples() {
        let pi = stationary_distribution(&build_generator(1, &rates([1; 6])).unwrap()).unwrap();
        assert_eq!(pi, vec![frac(1, 2), frac(1, 2)]);
        let pi = stationary_distribution(&build_generator(1, &rates([2, 1, 1, 0, 1, 1])).unwrap()).unwrap();
        assert_eq!(pi[1], frac(1, 2));
        let g = build_generator(3, &rates([1, 2, 0, 1, 3, 1])).unwrap();
        let pi = stationary_distribution(&g).unwrap();
        assert!(g.left_multiply(&pi).iter().all(Zero::is_zero));
        assert!(pi.iter().all(|p| p.is_positive()));
        // no hopping: interior sites never change
        let frozen = build_generator(3, &rates([1, 1, 1, 1, 0, 0])).unwrap();
        assert!(matches!(stationary_distribution(&frozen), Err(Error::ReducibleChain)));
    }

    #[test]
    fn tableaux_side() {
        let v = tableaux_steady_state(1, &rates([1; 6]), TypeConvention::AlphaDelta).unwrap();
        assert_eq!(v, vec![frac(1, 2), frac(1, 2)]);
        let v = tableaux_steady_state(3, &rates([1, 2, 3, 1, 2, 5]), TypeConvention::AlphaDelta).unwrap();
        assert_eq!(v.iter().sum::<Rational>(), int(1));
    }

    #[test]
    fn correspondence() {
        let r = verify_correspondence(1, &rates([2, 1, 1, 3, 1, 1])).unwrap();
        assert!(r.equal());
        assert_eq!(r.chain[1], frac(5, 7));
        for n in 2..=3 {
            assert!(verify_correspondence(n, &rates([1; 6])).unwrap().equal(), "n={n}");
        }
        let r = AsepRates::parse("1,2,1/2,1,3,1").unwrap();
        assert!(verify_correspondence(3, &r).unwrap().equal());
        assert!(verify_correspondence(4, &rates([2, 1, 0, 3, 1, 2])).unwrap().equal());
    }

    #[test]
    fn alpha_gamma_reading_fails() {
        let r = verify_correspondence_with(1, &rates([2, 1, 1, 3, 1, 1]), TypeConvention::AlphaGamma).unwrap();
        assert!(!r.equal());
    }
}
