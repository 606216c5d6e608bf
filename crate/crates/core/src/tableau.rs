//! Staircase tableaux: the grid, the placement rules, and the structural
//! operations (involution, u/q fill, subtableaux, type extraction).
//!
//! Boxes are addressed `(i, j)` with `i` the row counted from the top and
//! `j` the column counted from the left, both 1-based; box `(i, j)` exists
//! iff `i + j <= n + 1`. Diagonals are addressed by `d = i + j`: the main
//! diagonal is `d = n + 1` and the second main diagonal is `d = n`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(u8)]
pub enum Symbol {
    #[default]
    Empty,
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Symbol {
    pub const SYMBOLS: [Symbol; 4] = [Symbol::Alpha, Symbol::Beta, Symbol::Gamma, Symbol::Delta];

    pub fn is_empty(self) -> bool {
        self == Symbol::Empty
    }

    /// α and γ empty their column above them.
    pub fn blocks_column(self) -> bool {
        matches!(self, Symbol::Alpha | Symbol::Gamma)
    }

    /// β and δ empty their row to the left.
    pub fn blocks_row(self) -> bool {
        matches!(self, Symbol::Beta | Symbol::Delta)
    }

    /// The symbol under the row/column involution.
    pub fn swapped(self) -> Symbol {
        match self {
            Symbol::Alpha => Symbol::Beta,
            Symbol::Beta => Symbol::Alpha,
            Symbol::Gamma => Symbol::Delta,
            Symbol::Delta => Symbol::Gamma,
            Symbol::Empty => Symbol::Empty,
        }
    }

    /// Collapse γ onto α and δ onto β.
    pub fn collapsed(self) -> Symbol {
        match self {
            Symbol::Gamma => Symbol::Alpha,
            Symbol::Delta => Symbol::Beta,
            s => s,
        }
    }

    /// Serialization letter; `None` for an empty box.
    pub fn letter(self) -> Option<char> {
        match self {
            Symbol::Alpha => Some('A'),
            Symbol::Beta => Some('B'),
            Symbol::Gamma => Some('G'),
            Symbol::Delta => Some('D'),
            Symbol::Empty => None,
        }
    }

    pub fn from_letter(c: &str) -> Option<Symbol> {
        match c {
            "A" => Some(Symbol::Alpha),
            "B" => Some(Symbol::Beta),
            "G" => Some(Symbol::Gamma),
            "D" => Some(Symbol::Delta),
            _ => None,
        }
    }
}

/// Hop-rate marks written into the empty boxes by [`fill_uq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fill {
    U,
    Q,
}

/// Which diagonal symbols mark an occupied ASEP site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TypeConvention {
    /// α or δ occupied; β or γ empty. Agrees with the stationary law.
    #[default]
    AlphaDelta,
    /// α or γ occupied; β or δ empty.
    AlphaGamma,
}

impl TypeConvention {
    pub fn occupied(self, s: Symbol) -> bool {
        match self {
            TypeConvention::AlphaDelta => matches!(s, Symbol::Alpha | Symbol::Delta),
            TypeConvention::AlphaGamma => matches!(s, Symbol::Alpha | Symbol::Gamma),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Non-empty box above an α or γ.
    AboveColumnBlocker,
    /// Non-empty box left of a β or δ.
    LeftOfRowBlocker,
    /// Empty box on the main diagonal.
    EmptyDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule: Rule,
    /// The offending box.
    pub at: (usize, usize),
    /// The symbol box that forces `at` to be empty (`at` itself for rule 4).
    pub cause: (usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.at;
        let (ci, cj) = self.cause;
        match self.rule {
            Rule::AboveColumnBlocker => {
                write!(f, "rule-2 at ({i},{j}): non-empty above the alpha/gamma at ({ci},{cj})")
            }
            Rule::LeftOfRowBlocker => {
                write!(f, "rule-3 at ({i},{j}): non-empty left of the beta/delta at ({ci},{cj})")
            }
            Rule::EmptyDiagonal => write!(f, "rule-4 at ({i},{j}): empty main-diagonal box"),
        }
    }
}

#[inline]
fn row_offset(n: usize, i: usize) -> usize {
    // boxes in rows 1..i-1: sum of (n + 1 - r)
    (i - 1) * (n + 1) - (i - 1) * i / 2
}

/// A staircase tableau of shape `(n, n-1, ..., 1)`.
///
/// The type only guarantees the shape; placement rules are checked by
/// [`validate`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    cells: Box<[Symbol]>,
}

impl Tableau {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "tableau size must be positive");
        Tableau { n, cells: vec![Symbol::Empty; n * (n + 1) / 2].into_boxed_slice() }
    }

    /// Builds a tableau from its non-empty boxes.
    pub fn from_boxes<I>(n: usize, boxes: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Symbol)>,
    {
        if n == 0 {
            return Err(Error::SizeTooSmall { n, min: 1 });
        }
        let mut t = Tableau::empty(n);
        for ((i, j), s) in boxes {
            t.try_set(i, j, s)?;
        }
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i + j <= self.n + 1
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(self.contains(i, j));
        row_offset(self.n, i) + j - 1
    }

    /// Symbol at `(i, j)`. Panics outside the staircase.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Symbol {
        assert!(self.contains(i, j), "box ({i},{j}) outside size {}", self.n);
        self.cells[self.index(i, j)]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<Symbol> {
        if self.contains(i, j) {
            Ok(self.cells[self.index(i, j)])
        } else {
            Err(Error::BoxOutOfRange { n: self.n, i, j })
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, s: Symbol) {
        assert!(self.contains(i, j), "box ({i},{j}) outside size {}", self.n);
        let k = self.index(i, j);
        self.cells[k] = s;
    }

    pub fn try_set(&mut self, i: usize, j: usize, s: Symbol) -> Result<()> {
        if !self.contains(i, j) {
            return Err(Error::BoxOutOfRange { n: self.n, i, j });
        }
        self.set(i, j, s);
        Ok(())
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = ((usize, usize), Symbol)> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |i| (1..=n + 1 - i).map(move |j| ((i, j), self.get(i, j))))
    }

    /// Non-empty boxes in row-major order.
    pub fn symbols(&self) -> impl Iterator<Item = ((usize, usize), Symbol)> + '_ {
        self.boxes().filter(|(_, s)| !s.is_empty())
    }

    /// Count of boxes holding `s`.
    pub fn count(&self, s: Symbol) -> usize {
        self.cells.iter().filter(|&&c| c == s).count()
    }

    pub(crate) fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub(crate) fn cells_mut(&mut self) -> &mut [Symbol] {
        &mut self.cells
    }

    /// Main diagonal read from `(1, n)` down to `(n, 1)`.
    pub fn main_diagonal(&self) -> Vec<Symbol> {
        (1..=self.n).map(|k| self.get(k, self.n + 1 - k)).collect()
    }

    /// Symbol in second-diagonal position `j`, i.e. box `(n - j, j)`.
    pub fn second_diagonal(&self, j: usize) -> Symbol {
        self.get(self.n - j, j)
    }

    pub fn is_valid(&self) -> bool {
        validate(self).is_empty()
    }

    /// Orders tableaux lexicographically by their canonical serialization
    /// (non-empty boxes in row-major order as `i j LETTER` lines).
    pub fn canonical_cmp(&self, other: &Tableau) -> Ordering {
        let key = |t: &Tableau| {
            t.symbols().map(|((i, j), s)| (i, j, s.letter().unwrap() as u8)).collect::<Vec<_>>()
        };
        self.n.cmp(&other.n).then_with(|| key(self).cmp(&key(other)))
    }

    /// Whether the tableau only uses α and β.
    pub fn is_alpha_beta(&self) -> bool {
        self.cells.iter().all(|s| matches!(s, Symbol::Empty | Symbol::Alpha | Symbol::Beta))
    }

    /// γ replaced by α and δ by β.
    pub fn collapsed(&self) -> Tableau {
        Tableau { n: self.n, cells: self.cells.iter().map(|s| s.collapsed()).collect() }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({}:", self.n)?;
        for i in 1..=self.n {
            f.write_str(if i == 1 { " " } else { " / " })?;
            for j in 1..=self.n + 1 - i {
                let c = self.get(i, j).letter().unwrap_or('.');
                write!(f, "{c}")?;
            }
        }
        f.write_str(")")
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

/// Every broken placement rule, one record per offending box and cause.
pub fn validate(t: &Tableau) -> Vec<Violation> {
    let n = t.size();
    let mut out = Vec::new();
    for ((i, j), s) in t.symbols() {
        if s.blocks_column() {
            for above in 1..i {
                if !t.get(above, j).is_empty() {
                    out.push(Violation { rule: Rule::AboveColumnBlocker, at: (above, j), cause: (i, j) });
                }
            }
        }
        if s.blocks_row() {
            for left in 1..j {
                if !t.get(i, left).is_empty() {
                    out.push(Violation { rule: Rule::LeftOfRowBlocker, at: (i, left), cause: (i, j) });
                }
            }
        }
    }
    for k in 1..=n {
        let j = n + 1 - k;
        if t.get(k, j).is_empty() {
            out.push(Violation { rule: Rule::EmptyDiagonal, at: (k, j), cause: (k, j) });
        }
    }
    out
}

fn ensure_valid(t: &Tableau) -> Result<()> {
    let v = validate(t);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidTableau(v))
    }
}

/// Exponents of `α^a β^b γ^c δ^d u^e q^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub u: usize,
    pub q: usize,
}

impl Monomial {
    pub fn symbols(&self) -> usize {
        self.alpha + self.beta + self.gamma + self.delta
    }
}

fn count_symbols(t: &Tableau) -> Monomial {
    let mut m = Monomial::default();
    for &s in t.cells() {
        match s {
            Symbol::Alpha => m.alpha += 1,
            Symbol::Beta => m.beta += 1,
            Symbol::Gamma => m.gamma += 1,
            Symbol::Delta => m.delta += 1,
            Symbol::Empty => {}
        }
    }
    m
}

/// Symbol exponents of a valid tableau (`u` and `q` are zero).
pub fn weight(t: &Tableau) -> Result<Monomial> {
    ensure_valid(t)?;
    Ok(count_symbols(t))
}

/// Unchecked symbol counts, for callers that enumerate valid tableaux.
pub(crate) fn weight_unchecked(t: &Tableau) -> Monomial {
    count_symbols(t)
}

/// A tableau whose empty boxes carry `u` or `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilledTableau {
    base: Tableau,
    fill: Box<[Option<Fill>]>,
}

impl FilledTableau {
    pub fn base(&self) -> &Tableau {
        &self.base
    }

    pub fn fill_at(&self, i: usize, j: usize) -> Option<Fill> {
        self.fill[self.base.index(i, j)]
    }

    /// Filled boxes in row-major order.
    pub fn fills(&self) -> impl Iterator<Item = ((usize, usize), Fill)> + '_ {
        self.base.boxes().filter_map(|((i, j), _)| self.fill_at(i, j).map(|f| ((i, j), f)))
    }

    /// Full six-parameter weight exponents.
    pub fn weight(&self) -> Monomial {
        let mut m = count_symbols(&self.base);
        for f in self.fill.iter().flatten() {
            match f {
                Fill::U => m.u += 1,
                Fill::Q => m.q += 1,
            }
        }
        m
    }

    /// Rebuilds from a base tableau and explicit fills; the fills must cover
    /// exactly the empty boxes.
    pub fn from_parts<I>(base: Tableau, fills: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Fill)>,
    {
        let mut fill = vec![None; base.cells().len()].into_boxed_slice();
        for ((i, j), f) in fills {
            if !base.contains(i, j) {
                return Err(Error::BoxOutOfRange { n: base.size(), i, j });
            }
            if !base.get(i, j).is_empty() {
                return Err(Error::Parse { line: 0, msg: format!("fill on non-empty box ({i},{j})") });
            }
            fill[base.index(i, j)] = Some(f);
        }
        for ((i, j), s) in base.boxes() {
            if s.is_empty() && fill[base.index(i, j)].is_none() {
                return Err(Error::Parse { line: 0, msg: format!("empty box ({i},{j}) has no fill") });
            }
        }
        Ok(FilledTableau { base, fill })
    }
}

/// Fills the empty boxes with `u`/`q`.
///
/// First pass: empty boxes left of a β get `u`, left of a δ get `q`.
/// Second pass: a remaining empty box gets `u` when the first non-empty box
/// below it in its column holds α or δ, and `q` otherwise (β, γ, or nothing
/// below).
pub fn fill_uq(t: &Tableau) -> Result<FilledTableau> {
    ensure_valid(t)?;
    let n = t.size();
    let mut fill = vec![None; t.cells().len()].into_boxed_slice();
    for i in 1..=n {
        let width = n + 1 - i;
        // the rightmost row blocker decides the row; validity keeps
        // everything to its left empty
        if let Some(j) = (1..=width).rev().find(|&j| t.get(i, j).blocks_row()) {
            let mark = if t.get(i, j) == Symbol::Beta { Fill::U } else { Fill::Q };
            for left in 1..j {
                fill[t.index(i, left)] = Some(mark);
            }
        }
    }
    for j in 1..=n {
        let height = n + 1 - j;
        for i in 1..=height {
            let k = t.index(i, j);
            if !t.get(i, j).is_empty() || fill[k].is_some() {
                continue;
            }
            let below = (i + 1..=height)
                .map(|r| t.get(r, j))
                .find(|s| !s.is_empty())
                .is_some_and(|s| matches!(s, Symbol::Alpha | Symbol::Delta));
            fill[k] = Some(if below { Fill::U } else { Fill::Q });
        }
    }
    Ok(FilledTableau { base: t.clone(), fill })
}

/// Occupancy of the `n` ASEP sites; site `k` is read from box `(k, n+1-k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AsepState {
    sites: Vec<bool>,
}

impl AsepState {
    pub fn new(sites: Vec<bool>) -> Self {
        AsepState { sites }
    }

    /// State from a bit mask, bit `k-1` for site `k`.
    pub fn from_mask(n: usize, mask: usize) -> Self {
        AsepState { sites: (0..n).map(|k| mask >> k & 1 == 1).collect() }
    }

    pub fn mask(&self) -> usize {
        self.sites.iter().enumerate().fold(0, |m, (k, &b)| m | (usize::from(b) << k))
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn sites(&self) -> &[bool] {
        &self.sites
    }

    pub fn occupied(&self) -> usize {
        self.sites.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for AsepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.sites {
            f.write_str(if b { "•" } else { "◦" })?;
        }
        Ok(())
    }
}

/// The ASEP state encoded by the main diagonal.
pub fn asep_type(t: &Tableau, convention: TypeConvention) -> Result<AsepState> {
    ensure_valid(t)?;
    Ok(asep_type_unchecked(t, convention))
}

pub(crate) fn asep_type_unchecked(t: &Tableau, convention: TypeConvention) -> AsepState {
    AsepState { sites: t.main_diagonal().into_iter().map(|s| convention.occupied(s)).collect() }
}

/// Transposes rows and columns while swapping α↔β and γ↔δ.
pub fn involution(t: &Tableau) -> Tableau {
    let n = t.size();
    let mut out = Tableau::empty(n);
    for ((i, j), s) in t.boxes() {
        out.set(j, i, s.swapped());
    }
    out
}

/// `S[i, j]`: the size `n - i - j + 2` tableau left after deleting the first
/// `i - 1` rows and `j - 1` columns.
pub fn subtableau(t: &Tableau, i: usize, j: usize) -> Result<Tableau> {
    let n = t.size();
    if !t.contains(i, j) {
        return Err(Error::BoxOutOfRange { n, i, j });
    }
    let m = n + 2 - i - j;
    let mut out = Tableau::empty(m);
    for r in 1..=m {
        for c in 1..=m + 1 - r {
            out.set(r, c, t.get(r + i - 1, c + j - 1));
        }
    }
    Ok(out)
}

/// Removes row `i` and column `j`, renumbering what remains.
///
/// The remainder is a staircase of size `n - 1` exactly when
/// `i + j >= n + 1` (the deleted row and column meet on or beyond the main
/// diagonal); other positions are rejected as out of range.
pub fn delete_row_col(t: &Tableau, i: usize, j: usize) -> Result<Tableau> {
    let n = t.size();
    if n < 2 || i == 0 || j == 0 || i > n || j > n || i + j < n + 1 {
        return Err(Error::BoxOutOfRange { n, i, j });
    }
    let mut out = Tableau::empty(n - 1);
    for r in 1..n {
        for c in 1..=n - r {
            let src_r = if r < i { r } else { r + 1 };
            let src_c = if c < j { c } else { c + 1 };
            out.set(r, c, t.get(src_r, src_c));
        }
    }
    Ok(out)
}

/// Boxes `(i, j)` with `i + j = d`, by increasing column.
pub fn diagonal_cells(t: &Tableau, d: usize) -> Result<Vec<((usize, usize), Symbol)>> {
    let n = t.size();
    if d < 2 || d > n + 1 {
        return Err(Error::DiagonalOutOfRange { d, max: n + 1 });
    }
    Ok((1..d).map(|j| ((d - j, j), t.get(d - j, j))).collect())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The size-7 tableau with weight α²β³γ³δ² and type ••◦•◦◦◦.
    pub fn size_seven() -> Tableau {
        use Symbol::*;
        Tableau::from_boxes(
            7,
            [
                ((1, 1), Alpha),
                ((1, 4), Gamma),
                ((1, 7), Alpha),
                ((2, 6), Delta),
                ((3, 3), Beta),
                ((3, 5), Gamma),
                ((4, 4), Delta),
                ((5, 3), Beta),
                ((6, 2), Gamma),
                ((7, 1), Beta),
            ],
        )
        .unwrap()
    }

    pub fn tab(n: usize, boxes: &[((usize, usize), Symbol)]) -> Tableau {
        Tableau::from_boxes(n, boxes.iter().copied()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use Symbol::*;

    #[test]
    fn validate_small_cases() {
        assert!(tab(1, &[((1, 1), Alpha)]).is_valid());
        assert!(tab(2, &[((1, 2), Alpha), ((2, 1), Beta)]).is_valid());

        let t = tab(2, &[((1, 1), Alpha), ((1, 2), Alpha), ((2, 1), Alpha)]);
        let v = validate(&t);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, Rule::AboveColumnBlocker);
        assert_eq!(v[0].at, (1, 1));
        assert_eq!(v[0].cause, (2, 1));
    }

    #[test]
    fn validate_reports_each_rule() {
        let t = tab(2, &[((1, 1), Alpha), ((1, 2), Beta)]);
        let v = validate(&t);
        assert!(v.iter().any(|x| x.rule == Rule::LeftOfRowBlocker && x.at == (1, 1)));
        assert!(v.iter().any(|x| x.rule == Rule::EmptyDiagonal && x.at == (2, 1)));
        assert!(!v[0].to_string().is_empty());
    }

    #[test]
    fn size_seven_is_valid() {
        let t = size_seven();
        assert!(validate(&t).is_empty());
        let w = weight(&t).unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.delta), (2, 3, 3, 2));
    }

    #[test]
    fn weights() {
        let w = weight(&tab(1, &[((1, 1), Beta)])).unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.delta), (0, 1, 0, 0));
        let w = weight(&tab(2, &[((1, 2), Alpha), ((2, 1), Beta), ((1, 1), Beta)])).unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.delta, w.u, w.q), (1, 2, 0, 0, 0, 0));
        assert!(weight(&Tableau::empty(2)).is_err());
    }

    #[test]
    fn fill_matches_the_size_seven_grid() {
        let f = fill_uq(&size_seven()).unwrap();
        let grid = ["AqqGquA", "qqqqqD", "uuBuG", "qqqD", "uuB", "qG", "B"];
        for (r, row) in grid.iter().enumerate() {
            for (c, ch) in row.chars().enumerate() {
                let (i, j) = (r + 1, c + 1);
                match ch {
                    'u' => assert_eq!(f.fill_at(i, j), Some(Fill::U), "({i},{j})"),
                    'q' => assert_eq!(f.fill_at(i, j), Some(Fill::Q), "({i},{j})"),
                    _ => assert_eq!(f.fill_at(i, j), None),
                }
            }
        }
        let w = f.weight();
        assert_eq!((w.u, w.q), (6, 12));
    }

    #[test]
    fn fill_small() {
        let f = fill_uq(&tab(1, &[((1, 1), Alpha)])).unwrap();
        assert_eq!(f.fills().count(), 0);
        let f = fill_uq(&tab(2, &[((1, 2), Alpha), ((2, 1), Beta)])).unwrap();
        assert_eq!(f.fill_at(1, 1), Some(Fill::Q));
        // only the nearest symbol below counts: β shields the δ further down
        let t = tab(3, &[((1, 3), Alpha), ((2, 1), Beta), ((2, 2), Alpha), ((3, 1), Delta)]);
        let f = fill_uq(&t).unwrap();
        assert_eq!(f.fill_at(1, 1), Some(Fill::Q));
        assert_eq!(f.fill_at(1, 2), Some(Fill::U));
    }

    #[test]
    fn types() {
        let t = size_seven();
        let s = asep_type(&t, TypeConvention::AlphaDelta).unwrap();
        assert_eq!(s.sites(), &[true, true, false, true, false, false, false]);
        assert_eq!(s.to_string(), "••◦•◦◦◦");
        let s = asep_type(&tab(1, &[((1, 1), Beta)]), TypeConvention::AlphaDelta).unwrap();
        assert_eq!(s.sites(), &[false]);
        let s = asep_type(&tab(2, &[((1, 2), Alpha), ((2, 1), Beta)]), TypeConvention::default()).unwrap();
        assert_eq!(s.sites(), &[true, false]);
        let g = asep_type(&t, TypeConvention::AlphaGamma).unwrap();
        assert_eq!(g.sites(), &[true, false, true, false, false, true, false]);
        assert_eq!(AsepState::from_mask(3, s.mask()), AsepState::new(vec![true, false, false]));
    }

    #[test]
    fn involution_cases() {
        let t = size_seven();
        let inv = involution(&t);
        assert!(inv.is_valid());
        assert_eq!(involution(&inv), t);
        let w = weight(&inv).unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.delta), (3, 2, 2, 3));
        assert_eq!(involution(&tab(1, &[((1, 1), Alpha)])), tab(1, &[((1, 1), Beta)]));
    }

    #[test]
    fn subtableau_cases() {
        let t = size_seven();
        assert_eq!(subtableau(&t, 1, 1).unwrap(), t);
        let s = subtableau(&t, 1, 3).unwrap();
        let expect = tab(
            5,
            &[
                ((1, 2), Gamma),
                ((1, 5), Alpha),
                ((2, 4), Delta),
                ((3, 1), Beta),
                ((3, 3), Gamma),
                ((4, 2), Delta),
                ((5, 1), Beta),
            ],
        );
        assert_eq!(s, expect);
        let small = tab(3, &[((1, 3), Alpha), ((2, 2), Alpha), ((3, 1), Beta)]);
        assert_eq!(subtableau(&small, 1, 3).unwrap(), tab(1, &[((1, 1), Alpha)]));
        assert!(subtableau(&small, 2, 3).is_err());
    }

    #[test]
    fn delete_row_col_cases() {
        let t = tab(2, &[((1, 1), Beta), ((1, 2), Alpha), ((2, 1), Beta)]);
        let d = delete_row_col(&t, 2, 2).unwrap();
        assert_eq!(d, tab(1, &[((1, 1), Beta)]));
        let big = size_seven();
        assert_eq!(delete_row_col(&big, 6, 2).unwrap().size(), 6);
        assert!(delete_row_col(&big, 2, 2).is_err());
        assert!(delete_row_col(&tab(1, &[((1, 1), Beta)]), 1, 1).is_err());
    }

    #[test]
    fn diagonal_cells_cases() {
        let t = size_seven();
        let main = diagonal_cells(&t, 8).unwrap();
        assert_eq!(main.len(), 7);
        assert!(main.iter().all(|(_, s)| !s.is_empty()));
        // (6,1) (5,2) (4,3) (3,4) (2,5) (1,6) are all empty in this tableau
        let second = diagonal_cells(&t, 7).unwrap();
        assert_eq!(second.len(), 6);
        assert_eq!(second[0].0, (6, 1));
        assert_eq!(second[5].0, (1, 6));
        assert!(second.iter().all(|(_, s)| s.is_empty()));
        let d6 = diagonal_cells(&t, 6).unwrap();
        assert_eq!(d6[2], ((3, 3), Beta));
        let two = tab(2, &[((1, 2), Alpha), ((2, 1), Beta)]);
        assert_eq!(diagonal_cells(&two, 2).unwrap(), vec![((1, 1), Empty)]);
        assert!(diagonal_cells(&two, 1).is_err());
        assert!(diagonal_cells(&two, 4).is_err());
    }

    #[test]
    fn canonical_order() {
        let a = tab(1, &[((1, 1), Alpha)]);
        let b = tab(1, &[((1, 1), Beta)]);
        assert!(a < b);
        let g = tab(1, &[((1, 1), Gamma)]);
        let d = tab(1, &[((1, 1), Delta)]);
        assert!(b < d && d < g);
    }
}
