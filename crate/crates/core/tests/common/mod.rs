//! Shared helpers for the integration suites: seeded word generators, a
//! naive breadth-first oracle independent of the library's search, and
//! an independent enumeration of the defining relation instances.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use freebraid::diagram::{apply_artin_move, ArtinMove, BraidDiagram};
use freebraid::rewrite::neighbors;
use freebraid::word::{GroupContext, GroupKind, Letter, Parity, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random generator letter of the context.
pub fn random_letter(rng: &mut ChaCha8Rng, context: GroupContext) -> Letter {
    let generators = context.generators();
    generators[rng.random_range(0..generators.len())]
}

/// Random word of `len` letters; the identity when the context has no
/// generators.
pub fn random_word(rng: &mut ChaCha8Rng, context: GroupContext, len: usize) -> Word {
    if context.generators().is_empty() {
        return Word::identity(context);
    }
    let letters = (0..len).map(|_| random_letter(rng, context)).collect();
    Word::new(context, letters).expect("generators are valid")
}

/// Random dotted word with the requested crossing and dot budgets whose
/// dot counts are all even: leftover odd strands get one closing dot
/// each, drawn from the dot budget.
pub fn random_even_dot_word(
    rng: &mut ChaCha8Rng,
    n: usize,
    crossings: usize,
    dots: usize,
) -> Word {
    let context = GroupContext::dotted(n);
    let generators = context.generators();
    let crossing_pool: Vec<Letter> = generators.iter().copied().filter(Letter::is_crossing).collect();
    let dot_pool: Vec<Letter> = generators
        .iter()
        .copied()
        .filter(|l| !l.is_crossing())
        .collect();
    // leave room for up to n closing dots within the budget
    let free_dots = dots.saturating_sub(n);
    let mut letters = Vec::new();
    if !crossing_pool.is_empty() {
        for _ in 0..crossings {
            letters.push(crossing_pool[rng.random_range(0..crossing_pool.len())]);
        }
    }
    for _ in 0..free_dots {
        let at = rng.random_range(0..=letters.len());
        letters.insert(at, dot_pool[rng.random_range(0..dot_pool.len())]);
    }
    let word = Word::new(context, letters).unwrap();
    let counts = freebraid::maps::dot_counts(&word).unwrap();
    let mut letters = word.letters().to_vec();
    for (strand, count) in counts.iter() {
        if count % 2 == 1 {
            let at = rng.random_range(0..=letters.len());
            letters.insert(at, Letter::dot(strand));
        }
    }
    let word = Word::new(context, letters).unwrap();
    assert!(freebraid::maps::all_dots_even(&word).unwrap());
    word
}

/// Exhaustive class of `w` under single-rule moves, pruned at
/// `max_len`. This is the ground-truth oracle: a plain queue over
/// [`neighbors`], independent of the library's equivalence search.
pub fn naive_class(w: &Word, max_len: usize) -> HashSet<Word> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for next in neighbors(&current) {
            if next.len() <= max_len && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Ground-truth bounded connectivity: breadth-first from `u`, pruning
/// above `max_len`.
pub fn naive_connected(u: &Word, v: &Word, max_len: usize) -> bool {
    naive_class(u, max_len).contains(v)
}

/// Every defining relation instance of the context as a pair of equal
/// words, enumerated directly from the presentations (independently of
/// `rule_set`):
///
/// * squares of every generator,
/// * far commutativity of letters on disjoint strand pairs,
/// * the triangle relation in every index role (for parity kind, every
///   bit triple summing to zero mod 2),
/// * dot relations: dot squares, dot commutation, the dot conjugation
///   relation, dots past disjoint crossings,
/// * for the quotient kind, commutation of crossings sharing the last
///   strand.
pub fn defining_relations(context: GroupContext) -> Vec<(Word, Word)> {
    let n = context.n();
    let kind = context.kind();
    let mut out: Vec<(Vec<Letter>, Vec<Letter>)> = Vec::new();

    let crossings: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let plainlike = |out: &mut Vec<(Vec<Letter>, Vec<Letter>)>| {
        for &(i, j) in &crossings {
            let a = Letter::crossing(i, j);
            out.push((vec![a, a], vec![]));
        }
        for &(i, j) in &crossings {
            for &(k, l) in &crossings {
                if (i, j) < (k, l) && i != k && i != l && j != k && j != l {
                    let (a, b) = (Letter::crossing(i, j), Letter::crossing(k, l));
                    out.push((vec![a, b], vec![b, a]));
                }
            }
        }
        for x in 1..=n {
            for y in (x + 1)..=n {
                for z in (y + 1)..=n {
                    let g = [
                        Letter::crossing(x, y),
                        Letter::crossing(x, z),
                        Letter::crossing(y, z),
                    ];
                    for m in 0..3 {
                        let o: Vec<Letter> = (0..3).filter(|&k| k != m).map(|k| g[k]).collect();
                        out.push((vec![o[0], g[m], o[1]], vec![o[1], g[m], o[0]]));
                    }
                }
            }
        }
    };

    match kind {
        GroupKind::Plain => plainlike(&mut out),
        GroupKind::QuotientForbidden => {
            plainlike(&mut out);
            for i in 1..n {
                for j in (i + 1)..n {
                    let (a, b) = (Letter::crossing(i, n), Letter::crossing(j, n));
                    out.push((vec![a, b], vec![b, a]));
                }
            }
        }
        GroupKind::Parity => {
            let bits = [Parity::Even, Parity::Odd];
            for &(i, j) in &crossings {
                for &e in &bits {
                    let a = Letter::parity_crossing(i, j, e);
                    out.push((vec![a, a], vec![]));
                }
            }
            for &(i, j) in &crossings {
                for &(k, l) in &crossings {
                    if (i, j) < (k, l) && i != k && i != l && j != k && j != l {
                        for &e1 in &bits {
                            for &e2 in &bits {
                                let a = Letter::parity_crossing(i, j, e1);
                                let b = Letter::parity_crossing(k, l, e2);
                                out.push((vec![a, b], vec![b, a]));
                            }
                        }
                    }
                }
            }
            // the parity triangle relation is stated for x < y < z only;
            // other index roles are consequences, not defining instances
            for x in 1..=n {
                for y in (x + 1)..=n {
                    for z in (y + 1)..=n {
                        for exy in 0..2u8 {
                            for exz in 0..2u8 {
                                for eyz in 0..2u8 {
                                    if (exy + exz + eyz) % 2 != 0 {
                                        continue;
                                    }
                                    let xy =
                                        Letter::parity_crossing(x, y, Parity::from_bit(exy).unwrap());
                                    let xz =
                                        Letter::parity_crossing(x, z, Parity::from_bit(exz).unwrap());
                                    let yz =
                                        Letter::parity_crossing(y, z, Parity::from_bit(eyz).unwrap());
                                    out.push((vec![xy, xz, yz], vec![yz, xz, xy]));
                                }
                            }
                        }
                    }
                }
            }
        }
        GroupKind::Dotted => {
            plainlike(&mut out);
            for i in 1..=n {
                let t = Letter::dot(i);
                out.push((vec![t, t], vec![]));
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let (ti, tj) = (Letter::dot(i), Letter::dot(j));
                    out.push((vec![ti, tj], vec![tj, ti]));
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        let a = Letter::crossing(i, j);
                        let (ti, tj) = (Letter::dot(i), Letter::dot(j));
                        out.push((vec![ti, tj, a, tj, ti], vec![a]));
                    }
                }
            }
            for &(i, j) in &crossings {
                for k in 1..=n {
                    if k != i && k != j {
                        let (a, t) = (Letter::crossing(i, j), Letter::dot(k));
                        out.push((vec![a, t], vec![t, a]));
                    }
                }
            }
        }
    }

    out.into_iter()
        .map(|(l, r)| {
            (
                Word::new(context, l).unwrap(),
                Word::new(context, r).unwrap(),
            )
        })
        .collect()
}

/// Random pure diagram: random events followed by the transpositions
/// that sort the permutation back to the identity.
pub fn random_pure_diagram(rng: &mut ChaCha8Rng, n: usize, base_len: usize) -> BraidDiagram {
    assert!(n >= 2);
    let mut events: Vec<usize> = (0..base_len)
        .map(|_| rng.random_range(1..n))
        .collect();
    let mut occupant: Vec<usize> = (1..=n).collect();
    for &p in &events {
        occupant.swap(p - 1, p);
    }
    // bubble-sort the occupancy home, recording each swap as an event
    loop {
        let mut swapped = false;
        for p in 0..n - 1 {
            if occupant[p] > occupant[p + 1] {
                occupant.swap(p, p + 1);
                events.push(p + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let d = BraidDiagram::new(n, events).unwrap();
    assert!(d.is_pure());
    d
}

/// All Artin moves applicable to a diagram, square insertions capped to
/// keep the set finite.
pub fn applicable_moves(d: &BraidDiagram) -> Vec<ArtinMove> {
    let mut out = Vec::new();
    for index in 0..=d.events().len() {
        for position in 1..d.n() {
            out.push(ArtinMove::InsertSquare { index, position });
        }
    }
    for index in 0..d.events().len() {
        if apply_artin_move(d, &ArtinMove::DeleteSquare { index }).is_ok() {
            out.push(ArtinMove::DeleteSquare { index });
        }
        if apply_artin_move(d, &ArtinMove::FarCommute { index }).is_ok() {
            out.push(ArtinMove::FarCommute { index });
        }
        if apply_artin_move(d, &ArtinMove::Triangle { index }).is_ok() {
            out.push(ArtinMove::Triangle { index });
        }
    }
    out
}
