//! Small permutation-group engine: composition, breadth-first closure,
//! relator checking, and brute-force epimorphism search onto finite targets
//! given extensionally (degree + order + parity), e.g. the alternating group
//! on 5 points as "even permutations of 5 points, closure of order 60".
//!
//! Everything here is exhaustive and deterministic by design; group orders
//! stay in the low thousands.

use crate::presentation::Presentation;
use crate::word::Word;
use std::collections::HashSet;
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images are not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("permutations have mismatched degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("closure exceeded the cap of {0} elements")]
    ClosureOverflow(usize),
    #[error("word references generator {0} but only {1} are assigned")]
    UnassignedGenerator(usize, usize),
    #[error("epimorphism search exceeded the cap of {0} nodes")]
    SearchOverflow(u64),
}

/// A permutation of `0..degree`, stored by images.
///
/// Points are 0-based internally; [`fmt::Display`] prints 1-based cycle
/// notation, `()` for the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `0..degree` from disjoint cycles written with
    /// 1-based points, e.g. `from_cycles(5, &[&[1, 2], &[3, 4, 5]])`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k].checked_sub(1).ok_or(PermError::NotABijection(degree))?;
                let to = cycle[(k + 1) % cycle.len()] - 1;
                if from >= degree || to >= degree {
                    return Err(PermError::NotABijection(degree));
                }
                images[from] = to;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Left-to-right composition: `self.compose(q)` applies `self` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Element order: least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, l| {
            let l = l as u64;
            acc / gcd(acc, l) * l
        })
    }

    pub fn is_even(&self) -> bool {
        // Parity is the sum of (cycle length - 1) over all cycles.
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        transpositions % 2 == 0
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Nontrivial cycles with 1-based points, each rotated to start at its
    /// least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let inner: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", inner.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Breadth-first closure of a generating set under composition.
///
/// Returns the exact element set (identity included) in deterministic
/// discovery order, or an overflow error once more than `cap` elements have
/// been found.
pub fn closure(generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>, PermError> {
    let degree = match generators.first() {
        Some(g) => g.degree(),
        None => return Ok(vec![]),
    };
    for g in generators {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = p.compose(g).expect("uniform degree");
            if seen.insert(q.clone()) {
                if elements.len() >= cap {
                    return Err(PermError::ClosureOverflow(cap));
                }
                elements.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(elements)
}

/// A candidate homomorphism: one permutation per generator, uniform degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    perms: Vec<Permutation>,
}

impl Assignment {
    pub fn new(perms: Vec<Permutation>) -> Result<Self, PermError> {
        if let Some(first) = perms.first() {
            for p in &perms {
                if p.degree() != first.degree() {
                    return Err(PermError::DegreeMismatch(first.degree(), p.degree()));
                }
            }
        }
        Ok(Assignment { perms })
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn degree(&self) -> usize {
        self.perms.first().map(Permutation::degree).unwrap_or(0)
    }
}

/// Evaluates a word under an assignment: left-to-right product, inverse
/// letters mapped to inverse permutations.
pub fn evaluate(word: &Word, assignment: &Assignment) -> Result<Permutation, PermError> {
    let mut acc = Permutation::identity(assignment.degree());
    for &l in word.letters() {
        let idx = l.unsigned_abs() as usize;
        let p = assignment
            .perms
            .get(idx - 1)
            .ok_or(PermError::UnassignedGenerator(idx, assignment.perms.len()))?;
        let factor = if l > 0 { p.clone() } else { p.inverse() };
        acc = acc.compose(&factor)?;
    }
    Ok(acc)
}

/// True iff every relator of `p` evaluates to the identity under `a`.
pub fn satisfies(p: &Presentation, a: &Assignment) -> Result<bool, PermError> {
    for r in p.relators() {
        if !evaluate(r, a)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive search for a surjection of the presented group onto the group
/// of even permutations of `degree` points with exactly `target_order`
/// elements in the image closure.
///
/// Candidate images are enumerated in lexicographic image order and
/// generators are assigned in declaration order, so the returned witness is
/// the lexicographically least one. A relator that is a pure power `g^k`
/// prunes the candidates for `g` to elements whose order divides `k`.
/// Returns `Ok(None)` after exhausting the space, or an overflow error once
/// more than `cap` search nodes have been visited.
pub fn find_epimorphism(
    p: &Presentation,
    degree: usize,
    target_order: usize,
    cap: u64,
) -> Result<Option<Assignment>, PermError> {
    let even: Vec<Permutation> = all_permutations(degree)
        .into_iter()
        .filter(Permutation::is_even)
        .collect();

    // Per-generator candidate lists, pruned by pure-power relators.
    let mut candidates: Vec<Vec<Permutation>> = vec![even.clone(); p.generator_count()];
    for r in p.relators() {
        if let Some((g, k)) = r.as_pure_power() {
            let k = k.unsigned_abs();
            candidates[g - 1].retain(|perm| k % perm.order() == 0);
        }
    }

    // Relators become checkable as soon as every generator they mention is
    // assigned; checking early keeps the tree small without changing which
    // witness comes first.
    let check_at: Vec<Vec<&Word>> = (1..=p.generator_count())
        .map(|level| {
            p.relators().iter().filter(|r| r.max_generator() == level).collect()
        })
        .collect();

    let mut stack: Vec<Permutation> = Vec::with_capacity(p.generator_count());
    let mut visited = 0u64;
    search(&candidates, &check_at, target_order, cap, &mut stack, &mut visited)
}

fn search(
    candidates: &[Vec<Permutation>],
    check_at: &[Vec<&Word>],
    target_order: usize,
    cap: u64,
    stack: &mut Vec<Permutation>,
    visited: &mut u64,
) -> Result<Option<Assignment>, PermError> {
    let level = stack.len();
    if level == candidates.len() {
        let assignment = Assignment::new(stack.clone())?;
        match closure(assignment.perms(), target_order + 1) {
            Ok(elements) if elements.len() == target_order => return Ok(Some(assignment)),
            Ok(_) | Err(PermError::ClosureOverflow(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    for candidate in &candidates[level] {
        *visited += 1;
        if *visited > cap {
            return Err(PermError::SearchOverflow(cap));
        }
        stack.push(candidate.clone());
        let partial = Assignment::new(stack.clone())?;
        let ok = check_at[level]
            .iter()
            .all(|r| evaluate(r, &partial).map(|q| q.is_identity()).unwrap_or(false));
        if ok {
            if let Some(found) = search(candidates, check_at, target_order, cap, stack, visited)? {
                return Ok(Some(found));
            }
        }
        stack.pop();
    }
    Ok(None)
}

/// All permutations of `0..degree` in lexicographic image order.
fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..degree).collect();
    let mut out = vec![Permutation { images: current.clone() }];
    while next_permutation(&mut current) {
        out.push(Permutation { images: current.clone() });
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_cycle() -> Permutation {
        Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap()
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let c = five_cycle();
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let c = five_cycle();
        assert_eq!(Permutation::identity(5).compose(&c).unwrap(), c);
        assert_eq!(c.compose(&Permutation::identity(5)).unwrap(), c);
    }

    #[test]
    fn transposition_squares_to_identity() {
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn closure_of_a_five_cycle_has_five_elements() {
        assert_eq!(closure(&[five_cycle()], 100).unwrap().len(), 5);
    }

    #[test]
    fn closure_of_two_transpositions_is_symmetric_on_three_points() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        assert_eq!(closure(&[a, b], 100).unwrap().len(), 6);
    }

    #[test]
    fn closure_reports_overflow() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        assert_eq!(closure(&[a, b], 5), Err(PermError::ClosureOverflow(5)));
    }

    #[test]
    fn closure_generating_alternating_on_five_points() {
        let a = Permutation::from_cycles(5, &[&[1, 2], &[3, 4]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[1, 3, 5]]).unwrap();
        assert_eq!(closure(&[a, b], 1000).unwrap().len(), 60);
    }

    #[test]
    fn evaluate_is_left_to_right_and_inverts() {
        let a = Assignment::new(vec![five_cycle()]).unwrap();
        assert!(evaluate(&Word::empty(), &a).unwrap().is_identity());
        let w = Word::from_letters(vec![1, -1]).unwrap();
        assert!(evaluate(&w, &a).unwrap().is_identity());
    }

    #[test]
    fn order_two_and_three_images_kill_a2_b3() {
        let p = Presentation::new(
            ["a", "b"],
            vec![Word::from_letters(vec![1, 1]).unwrap(), Word::from_letters(vec![2, 2, 2]).unwrap()],
        )
        .unwrap();
        let a = Permutation::from_cycles(5, &[&[1, 2], &[3, 4]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[1, 3, 5]]).unwrap();
        let assignment = Assignment::new(vec![a, b]).unwrap();
        assert!(satisfies(&p, &assignment).unwrap());
    }

    #[test]
    fn identity_assignment_satisfies_everything() {
        let p = Presentation::new(["a"], vec![Word::from_letters(vec![1, 1]).unwrap()]).unwrap();
        let a = Assignment::new(vec![Permutation::identity(4)]).unwrap();
        assert!(satisfies(&p, &a).unwrap());
    }

    #[test]
    fn three_cycle_fails_an_order_two_relator() {
        let p = Presentation::new(["a"], vec![Word::from_letters(vec![1, 1]).unwrap()]).unwrap();
        let a = Assignment::new(vec![Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()]).unwrap();
        assert!(!satisfies(&p, &a).unwrap());
    }

    #[test]
    fn single_generator_cannot_surject_onto_order_sixty() {
        let p = Presentation::new(["a"], vec![Word::from_letters(vec![1, 1]).unwrap()]).unwrap();
        assert_eq!(find_epimorphism(&p, 5, 60, 1_000_000).unwrap(), None);
    }

    #[test]
    fn triangle_group_surjects_onto_alternating_five() {
        let p = Presentation::new(
            ["a", "b"],
            vec![
                Word::from_letters(vec![1, 1]).unwrap(),
                Word::from_letters(vec![2, 2, 2]).unwrap(),
                Word::from_letters(vec![1, 2]).unwrap().repeat(5),
            ],
        )
        .unwrap();
        let found = find_epimorphism(&p, 5, 60, 10_000_000).unwrap().expect("witness");
        assert!(satisfies(&p, &found).unwrap());
        assert_eq!(closure(found.perms(), 100).unwrap().len(), 60);
    }

    #[test]
    fn display_uses_cycle_notation() {
        let p = Permutation::from_cycles(5, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
