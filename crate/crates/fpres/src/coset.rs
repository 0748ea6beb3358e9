//! Todd-Coxeter coset enumeration.
//!
//! Enumerates the cosets of a finitely generated subgroup in a finitely
//! presented group. When the index is finite and the coset limit is
//! generous enough, the enumeration completes and the closed table gives
//! the index (the group order, for the trivial subgroup) and a faithful
//! transitive permutation representation. Hitting the limit yields
//! [`Outcome::Overflow`], which is *inconclusive*: enumeration can never
//! certify that a group is infinite.
//!
//! Two strategies are provided. Felsch is deduction-driven: every table
//! entry is tested against all relator rotations before any new coset is
//! defined, which keeps redundant cosets down on short-relator inputs and
//! is the default. HLT scans whole relators coset by coset, filling gaps
//! eagerly, and falls back to a definition-free lookahead pass when the
//! coset limit is hit.
//!
//! Coincidences (two provisional cosets discovered equal) are processed
//! immediately and exhaustively through a union-find with path compression;
//! the lowest-numbered coset always survives a merge, so runs are
//! deterministic for fixed strategy and input.

use crate::perm::Permutation;
use crate::presentation::Presentation;
use crate::word::Word;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CosetError {
    #[error("max_cosets must be at least 1")]
    CapZero,
    #[error("subgroup generator word references generator {index} but only {count} are declared")]
    WordOutOfRange { index: usize, count: usize },
    #[error("permutation representation requires a completed table")]
    IncompleteTable,
    #[error("coset table defect: {0}")]
    TableDefect(String),
}

/// Result of an enumeration attempt.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The table closed; the subgroup has this index.
    Completed(usize),
    /// Live cosets would have exceeded the cap; inconclusive.
    Overflow(usize),
}

impl Outcome {
    pub fn completed(&self) -> Option<usize> {
        match self {
            Outcome::Completed(n) => Some(*n),
            Outcome::Overflow(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Felsch,
    Hlt,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Total cosets ever defined, including coset 1 and later casualties.
    pub cosets_defined: usize,
    /// Number of coset merges performed while processing coincidences.
    pub coincidences: usize,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub outcome: Outcome,
    pub table: CosetTable,
    pub stats: EnumerationStats,
}

/// Partial action of the generators on cosets. Coset 1 is the subgroup
/// itself. Columns come in pairs: generator, then its inverse, in
/// declaration order. `0` marks an undefined entry; coincidences are
/// tracked by a union-find over coset ids.
#[derive(Clone, Debug)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<Vec<usize>>, // rows[0] is a dummy; coset ids are 1-based
    parent: Vec<usize>,
}

impl CosetTable {
    fn new(ngens: usize) -> Self {
        CosetTable { ngens, rows: vec![vec![], vec![0; 2 * ngens]], parent: vec![0, 1] }
    }

    pub fn generator_count(&self) -> usize {
        self.ngens
    }

    /// Number of live cosets.
    pub fn coset_count(&self) -> usize {
        (1..self.parent.len()).filter(|&c| self.parent[c] == c).count()
    }

    pub fn live_cosets(&self) -> Vec<usize> {
        (1..self.parent.len()).filter(|&c| self.parent[c] == c).collect()
    }

    pub fn is_live(&self, coset: usize) -> bool {
        coset >= 1 && coset < self.parent.len() && self.parent[coset] == coset
    }

    /// Representative of a coset under the coincidence union-find
    /// (read-only, no path compression).
    pub fn rep(&self, mut coset: usize) -> usize {
        while self.parent[coset] != coset {
            coset = self.parent[coset];
        }
        coset
    }

    fn find(&mut self, coset: usize) -> usize {
        let root = self.rep(coset);
        let mut c = coset;
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    /// Image of `coset` under a signed generator letter, if defined.
    pub fn lookup(&self, coset: usize, letter: i32) -> Option<usize> {
        let col = col_of(letter);
        match self.rows[self.rep(coset)].get(col) {
            Some(&0) | None => None,
            Some(&e) => Some(self.rep(e)),
        }
    }

    /// True when every live row is fully defined.
    pub fn is_complete(&self) -> bool {
        self.live_cosets().iter().all(|&c| self.rows[c].iter().all(|&e| e != 0))
    }

    /// Renumbers live cosets to 1..=k in increasing old-id order and
    /// resolves every entry to a representative.
    fn compress(&mut self) {
        let live = self.live_cosets();
        let mut new_id = vec![0usize; self.parent.len()];
        for (i, &c) in live.iter().enumerate() {
            new_id[c] = i + 1;
        }
        let mut rows = vec![vec![]];
        for &c in &live {
            let row: Vec<usize> =
                self.rows[c].iter().map(|&e| if e == 0 { 0 } else { new_id[self.rep(e)] }).collect();
            rows.push(row);
        }
        self.rows = rows;
        self.parent = (0..=live.len()).collect();
    }

    /// One line per live coset: the coset id followed by its image under
    /// each column (`-` when undefined). Columns are `g g^-1` pairs in
    /// declaration order, named in the header.
    pub fn dump(&self, symbols: &[&str]) -> String {
        let mut header = vec!["coset".to_string()];
        for s in symbols {
            header.push((*s).to_string());
            header.push(format!("{}^-1", s));
        }
        let mut out = header.join("\t");
        out.push('\n');
        for &c in &self.live_cosets() {
            let mut line = vec![c.to_string()];
            for &e in &self.rows[c] {
                line.push(if e == 0 { "-".to_string() } else { self.rep(e).to_string() });
            }
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    }
}

fn col_of(letter: i32) -> usize {
    let idx = letter.unsigned_abs() as usize;
    2 * (idx - 1) + usize::from(letter < 0)
}

fn inv_col(col: usize) -> usize {
    col ^ 1
}

fn word_cols(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|&l| col_of(l)).collect()
}

/// Enumerates cosets of the subgroup generated by `subgroup_generators`
/// (the whole-group order when empty) under the given strategy and coset
/// limit.
pub fn enumerate(
    p: &Presentation,
    subgroup_generators: &[Word],
    strategy: Strategy,
    max_cosets: usize,
) -> Result<EnumerationResult, CosetError> {
    if max_cosets == 0 {
        return Err(CosetError::CapZero);
    }
    for w in subgroup_generators {
        let m = w.max_generator();
        if m > p.generator_count() {
            return Err(CosetError::WordOutOfRange { index: m, count: p.generator_count() });
        }
    }

    let mut session = Session::new(p, subgroup_generators, strategy, max_cosets);
    let outcome = session.run();
    let mut table = session.table;
    if matches!(outcome, Outcome::Completed(_)) {
        table.compress();
        debug_assert!(verify_table(&table, p).is_ok());
    }
    Ok(EnumerationResult { outcome, table, stats: session.stats })
}

/// Order of the presented group: enumeration over the trivial subgroup
/// with the default (Felsch) strategy.
pub fn order(p: &Presentation, max_cosets: usize) -> Result<Outcome, CosetError> {
    enumerate(p, &[], Strategy::Felsch, max_cosets).map(|r| r.outcome)
}

/// Columns of a completed table as permutations of `0..index`, one per
/// generator in declaration order.
pub fn permutation_rep(table: &CosetTable) -> Result<Vec<Permutation>, CosetError> {
    if !table.is_complete() {
        return Err(CosetError::IncompleteTable);
    }
    let live = table.live_cosets();
    let mut position = vec![usize::MAX; table.parent.len()];
    for (i, &c) in live.iter().enumerate() {
        position[c] = i;
    }
    let mut perms = Vec::with_capacity(table.ngens);
    for g in 1..=table.ngens {
        let images: Vec<usize> = live
            .iter()
            .map(|&c| position[table.lookup(c, g as i32).expect("complete table")])
            .collect();
        perms.push(
            Permutation::from_images(images)
                .map_err(|_| CosetError::TableDefect(format!("column {g} is not a bijection")))?,
        );
    }
    Ok(perms)
}

/// Independent scanner for completed tables: checks that every live entry
/// is defined, that entries satisfy the bidirectional law
/// `c^g = d  =>  d^(g^-1) = c`, that every relator traces from every live
/// coset back to itself, and that the action is transitive. This is
/// deliberately separate from the enumeration machinery.
pub fn verify_table(table: &CosetTable, p: &Presentation) -> Result<(), CosetError> {
    let live = table.live_cosets();
    for &c in &live {
        for col in 0..2 * table.ngens {
            let e = table.rows[c][col];
            if e == 0 {
                return Err(CosetError::TableDefect(format!(
                    "coset {c} has no image under column {col}"
                )));
            }
            let e = table.rep(e);
            let back = table.rows[e][inv_col(col)];
            if back == 0 || table.rep(back) != c {
                return Err(CosetError::TableDefect(format!(
                    "entries for coset {c} under column {col} are not bidirectional"
                )));
            }
        }
    }
    for &c in &live {
        for (ri, r) in p.relators().iter().enumerate() {
            let mut at = c;
            for &l in r.letters() {
                at = table.lookup(at, l).ok_or_else(|| {
                    CosetError::TableDefect(format!("relator {} trace leaves the table", ri + 1))
                })?;
            }
            if at != c {
                return Err(CosetError::TableDefect(format!(
                    "relator {} does not close at coset {c}",
                    ri + 1
                )));
            }
        }
    }
    // Transitivity: coset 1 reaches everything.
    if !live.is_empty() {
        let mut seen = vec![false; table.parent.len()];
        let start = table.rep(1);
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for col in 0..2 * table.ngens {
                let e = table.rep(table.rows[c][col]);
                if !seen[e] {
                    seen[e] = true;
                    reached += 1;
                    queue.push_back(e);
                }
            }
        }
        if reached != live.len() {
            return Err(CosetError::TableDefect("action is not transitive".into()));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Enumeration session
// ---------------------------------------------------------------------------

/// Raised when a definition would push the live-coset count past the cap.
struct NeedSpace;

struct Session {
    table: CosetTable,
    live: usize,
    max_cosets: usize,
    definition_budget: usize,
    stats: EnumerationStats,
    strategy: Strategy,
    relators: Vec<Vec<usize>>,
    subgroup: Vec<Vec<usize>>,
    /// Cyclic rotations of all relators and their inverses, grouped by
    /// first column. Felsch scans these at every new table entry.
    rotations_by_col: Vec<Vec<Vec<usize>>>,
    deductions: Vec<(usize, usize)>,
}

impl Session {
    fn new(
        p: &Presentation,
        subgroup_generators: &[Word],
        strategy: Strategy,
        max_cosets: usize,
    ) -> Self {
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|r| word_cols(&r.cyclically_reduced().0))
            .filter(|w| !w.is_empty())
            .collect();
        let ncols = 2 * p.generator_count();
        let mut rotations_by_col: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols];
        for r in &relators {
            let inverse: Vec<usize> = r.iter().rev().map(|&c| inv_col(c)).collect();
            for w in [r, &inverse] {
                for start in 0..w.len() {
                    let mut rot = w[start..].to_vec();
                    rot.extend_from_slice(&w[..start]);
                    let bucket = &mut rotations_by_col[rot[0]];
                    if !bucket.contains(&rot) {
                        bucket.push(rot);
                    }
                }
            }
        }
        Session {
            table: CosetTable::new(p.generator_count()),
            live: 1,
            max_cosets,
            definition_budget: max_cosets.saturating_mul(20).max(1000),
            stats: EnumerationStats { cosets_defined: 1, coincidences: 0 },
            strategy,
            relators,
            subgroup: subgroup_generators
                .iter()
                .map(|w| word_cols(&w.reduced()))
                .filter(|w| !w.is_empty())
                .collect(),
            rotations_by_col,
            deductions: Vec::new(),
        }
    }

    fn run(&mut self) -> Outcome {
        let result = match self.strategy {
            Strategy::Felsch => self.felsch(),
            Strategy::Hlt => self.hlt(),
        };
        match result {
            Ok(()) => Outcome::Completed(self.live),
            Err(NeedSpace) => Outcome::Overflow(self.max_cosets),
        }
    }

    fn felsch(&mut self) -> Result<(), NeedSpace> {
        let subgroup = self.subgroup.clone();
        for w in &subgroup {
            self.scan(1, w, true)?;
            self.process_deductions();
        }
        loop {
            self.process_deductions();
            match self.first_undefined() {
                None => return Ok(()),
                Some((c, col)) => {
                    self.define(c, col)?;
                }
            }
        }
    }

    fn hlt(&mut self) -> Result<(), NeedSpace> {
        let subgroup = self.subgroup.clone();
        for w in &subgroup {
            self.with_lookahead(|s| s.scan(1, w, true))?;
        }
        let relators = self.relators.clone();
        let mut alpha = 1;
        while alpha < self.table.parent.len() {
            if self.table.is_live(alpha) {
                for r in &relators {
                    self.with_lookahead(|s| s.scan(alpha, r, true))?;
                    if !self.table.is_live(alpha) {
                        break;
                    }
                }
                if self.table.is_live(alpha) {
                    for col in 0..2 * self.table.ngens {
                        if self.table.rows[alpha][col] == 0 {
                            self.with_lookahead(|s| s.define(alpha, col).map(|_| ()))?;
                        }
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    /// Runs `op`; on exhaustion, performs one definition-free lookahead
    /// pass over all relators and retries once if it freed any cosets.
    fn with_lookahead(
        &mut self,
        mut op: impl FnMut(&mut Self) -> Result<(), NeedSpace>,
    ) -> Result<(), NeedSpace> {
        loop {
            match op(self) {
                Ok(()) => return Ok(()),
                Err(NeedSpace) => {
                    let before = self.live;
                    self.lookahead();
                    if self.live >= before && self.live >= self.max_cosets {
                        return Err(NeedSpace);
                    }
                }
            }
        }
    }

    fn lookahead(&mut self) {
        let relators = self.relators.clone();
        let mut alpha = 1;
        while alpha < self.table.parent.len() {
            if self.table.is_live(alpha) {
                for r in &relators {
                    self.scan(alpha, r, false).unwrap_or_else(|_| unreachable!());
                    if !self.table.is_live(alpha) {
                        break;
                    }
                }
            }
            alpha += 1;
        }
    }

    /// First undefined slot in deterministic order: lowest live coset,
    /// columns in declaration order with the positive letter first.
    fn first_undefined(&self) -> Option<(usize, usize)> {
        for c in 1..self.table.parent.len() {
            if !self.table.is_live(c) {
                continue;
            }
            for col in 0..2 * self.table.ngens {
                if self.table.rows[c][col] == 0 {
                    return Some((c, col));
                }
            }
        }
        None
    }

    /// Creates a new coset as the image of `c` under `col`.
    fn define(&mut self, c: usize, col: usize) -> Result<usize, NeedSpace> {
        if self.live >= self.max_cosets || self.stats.cosets_defined >= self.definition_budget {
            return Err(NeedSpace);
        }
        let new = self.table.parent.len();
        self.table.parent.push(new);
        self.table.rows.push(vec![0; 2 * self.table.ngens]);
        self.live += 1;
        self.stats.cosets_defined += 1;
        let c = self.table.find(c);
        debug_assert_eq!(self.table.rows[c][col], 0);
        self.table.rows[c][col] = new;
        self.table.rows[new][inv_col(col)] = c;
        if self.strategy == Strategy::Felsch {
            self.deductions.push((c, col));
            self.deductions.push((new, inv_col(col)));
        }
        Ok(new)
    }

    /// Records `a^col = b`, detecting coincidences against existing
    /// entries in either direction.
    fn deduce(&mut self, a: usize, col: usize, b: usize) {
        let a = self.table.find(a);
        let b = self.table.find(b);
        let existing = self.table.rows[a][col];
        if existing != 0 {
            let existing = self.table.find(existing);
            if existing != b {
                self.coincide(existing, b);
            }
            return;
        }
        self.table.rows[a][col] = b;
        if self.strategy == Strategy::Felsch {
            self.deductions.push((a, col));
        }
        let mirror = self.table.rows[b][inv_col(col)];
        if mirror == 0 {
            self.table.rows[b][inv_col(col)] = a;
            if self.strategy == Strategy::Felsch {
                self.deductions.push((b, inv_col(col)));
            }
        } else {
            let mirror = self.table.find(mirror);
            if mirror != a {
                self.coincide(mirror, a);
            }
        }
    }

    /// Merges two cosets and exhaustively processes the fallout. The
    /// lowest-numbered coset of each merged class survives.
    fn coincide(&mut self, a: usize, b: usize) {
        let mut queue: VecDeque<usize> = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for col in 0..2 * self.table.ngens {
                let e = self.table.rows[dead][col];
                if e == 0 {
                    continue;
                }
                self.table.rows[dead][col] = 0;
                // The mirror of this edge is cleared too; whichever endpoint
                // is processed first removes both cells and re-installs the
                // edge between representatives.
                if self.table.rows[e][inv_col(col)] == dead {
                    self.table.rows[e][inv_col(col)] = 0;
                }
                let mu = self.table.find(dead);
                let nu = self.table.find(e);
                let forward = self.table.rows[mu][col];
                if forward != 0 {
                    let forward = self.table.find(forward);
                    if forward != nu {
                        self.merge(forward, nu, &mut queue);
                    }
                } else {
                    let backward = self.table.rows[nu][inv_col(col)];
                    if backward != 0 {
                        let backward = self.table.find(backward);
                        if backward != mu {
                            self.merge(backward, mu, &mut queue);
                        }
                    } else {
                        self.table.rows[mu][col] = nu;
                        self.table.rows[nu][inv_col(col)] = mu;
                        if self.strategy == Strategy::Felsch {
                            self.deductions.push((mu, col));
                            self.deductions.push((nu, inv_col(col)));
                        }
                    }
                }
            }
        }
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let a = self.table.find(a);
        let b = self.table.find(b);
        if a == b {
            return;
        }
        let (keep, die) = if a < b { (a, b) } else { (b, a) };
        self.table.parent[die] = keep;
        self.live -= 1;
        self.stats.coincidences += 1;
        queue.push_back(die);
    }

    /// Traces the column word `w` from `start`. A completed or closed
    /// trace may raise coincidences or a deduction. With `fill`, missing
    /// entries are defined so the trace always completes (or the coset
    /// limit is hit); without it, a trace with a gap of two or more is
    /// left alone.
    fn scan(&mut self, start: usize, w: &[usize], fill: bool) -> Result<(), NeedSpace> {
        loop {
            let start = self.table.find(start);
            let mut f = start;
            let mut i = 0;
            while i < w.len() {
                let next = self.table.rows[f][w[i]];
                if next == 0 {
                    break;
                }
                f = self.table.find(next);
                i += 1;
            }
            if i == w.len() {
                if f != start {
                    self.coincide(f, start);
                }
                return Ok(());
            }
            let mut b = start;
            let mut j = w.len();
            while j > i {
                let prev = self.table.rows[b][inv_col(w[j - 1])];
                if prev == 0 {
                    break;
                }
                b = self.table.find(prev);
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                self.deduce(f, w[i], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.table.is_live(c) {
                continue;
            }
            let rotations = std::mem::take(&mut self.rotations_by_col[col]);
            for w in &rotations {
                self.scan(c, w, false).unwrap_or_else(|_| unreachable!());
                if !self.table.is_live(c) {
                    break;
                }
            }
            self.rotations_by_col[col] = rotations;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    fn pres(symbols: &[&str], relators: &[&[i32]]) -> Presentation {
        Presentation::new(
            symbols.iter().copied(),
            relators.iter().map(|r| w(r)).collect(),
        )
        .unwrap()
    }

    fn triangle_235() -> Presentation {
        Presentation::new(
            ["a", "b"],
            vec![w(&[1, 1]), w(&[2, 2, 2]), w(&[1, 2]).repeat(5)],
        )
        .unwrap()
    }

    #[test]
    fn cyclic_group_of_order_five() {
        let p = pres(&["a"], &[&[1, 1, 1, 1, 1]]);
        let r = enumerate(&p, &[], Strategy::Felsch, 100).unwrap();
        assert_eq!(r.outcome, Outcome::Completed(5));
        verify_table(&r.table, &p).unwrap();
    }

    #[test]
    fn triangle_group_has_order_sixty() {
        let r = enumerate(&triangle_235(), &[], Strategy::Felsch, 10_000).unwrap();
        assert_eq!(r.outcome, Outcome::Completed(60));
        verify_table(&r.table, &triangle_235()).unwrap();
    }

    #[test]
    fn symmetric_three_under_hlt() {
        let p = pres(&["a", "b"], &[&[1, 1], &[2, 2], &[1, 2, 1, 2, 1, 2]]);
        let r = enumerate(&p, &[], Strategy::Hlt, 1000).unwrap();
        assert_eq!(r.outcome, Outcome::Completed(6));
        verify_table(&r.table, &p).unwrap();
    }

    #[test]
    fn free_generator_overflows_the_cap() {
        let p = pres(&["a"], &[]);
        assert_eq!(order(&p, 50).unwrap(), Outcome::Overflow(50));
    }

    #[test]
    fn relator_a_gives_the_trivial_group() {
        let p = pres(&["a"], &[&[1]]);
        assert_eq!(order(&p, 100).unwrap(), Outcome::Completed(1));
    }

    #[test]
    fn permutation_rep_of_cyclic_five_is_a_five_cycle() {
        let p = pres(&["a"], &[&[1, 1, 1, 1, 1]]);
        let r = enumerate(&p, &[], Strategy::Felsch, 100).unwrap();
        let perms = permutation_rep(&r.table).unwrap();
        assert_eq!(perms.len(), 1);
        assert_eq!(perms[0].order(), 5);
        assert_eq!(perms[0].cycles().len(), 1);
    }

    #[test]
    fn permutation_rep_satisfies_relators_and_orders() {
        let p = triangle_235();
        let r = enumerate(&p, &[], Strategy::Felsch, 10_000).unwrap();
        let perms = permutation_rep(&r.table).unwrap();
        assert_eq!(perms[0].order(), 2);
        assert_eq!(perms[1].order(), 3);
        let a = crate::perm::Assignment::new(perms).unwrap();
        assert!(crate::perm::satisfies(&p, &a).unwrap());
    }

    #[test]
    fn permutation_rep_of_trivial_group_is_identity() {
        let p = pres(&["a"], &[&[1]]);
        let r = enumerate(&p, &[], Strategy::Felsch, 100).unwrap();
        let perms = permutation_rep(&r.table).unwrap();
        assert!(perms[0].is_identity());
    }

    #[test]
    fn incomplete_table_has_no_permutation_rep() {
        let p = pres(&["a"], &[]);
        let r = enumerate(&p, &[], Strategy::Felsch, 10).unwrap();
        assert_eq!(permutation_rep(&r.table), Err(CosetError::IncompleteTable));
    }

    #[test]
    fn subgroup_index_in_triangle_group() {
        // <a> has order 2 in the (2,3,5) triangle group, so index 30.
        let p = triangle_235();
        let r = enumerate(&p, &[w(&[1])], Strategy::Felsch, 10_000).unwrap();
        assert_eq!(r.outcome, Outcome::Completed(30));
    }

    #[test]
    fn both_strategies_agree_on_the_triangle_group() {
        let p = triangle_235();
        let f = enumerate(&p, &[], Strategy::Felsch, 10_000).unwrap();
        let h = enumerate(&p, &[], Strategy::Hlt, 10_000).unwrap();
        assert_eq!(f.outcome, h.outcome);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let p = triangle_235();
        let r1 = enumerate(&p, &[], Strategy::Felsch, 10_000).unwrap();
        let r2 = enumerate(&p, &[], Strategy::Felsch, 10_000).unwrap();
        assert_eq!(r1.stats, r2.stats);
        assert_eq!(r1.table.rows, r2.table.rows);
    }

    #[test]
    fn zero_cap_is_rejected() {
        let p = pres(&["a"], &[&[1]]);
        assert_eq!(order(&p, 0), Err(CosetError::CapZero));
    }

    #[test]
    fn subgroup_word_out_of_range_is_rejected() {
        let p = pres(&["a"], &[&[1]]);
        assert!(matches!(
            enumerate(&p, &[w(&[2])], Strategy::Felsch, 10),
            Err(CosetError::WordOutOfRange { .. })
        ));
    }

    #[test]
    fn overflow_cap_on_a_finite_group_is_inconclusive() {
        let p = triangle_235();
        assert_eq!(order(&p, 10).unwrap(), Outcome::Overflow(10));
    }

    #[test]
    fn table_dump_lists_live_cosets() {
        let p = pres(&["a"], &[&[1, 1, 1]]);
        let r = enumerate(&p, &[], Strategy::Felsch, 100).unwrap();
        let dump = r.table.dump(&["a"]);
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("coset"));
    }
}
