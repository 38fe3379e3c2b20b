//! Presentation relations as rewrite rules, one-step neighborhoods, and
//! a bounded equivalence oracle.
//!
//! Every relation of the active presentation is materialized as a pair
//! of oriented rules, so the rewrite graph on words is undirected. The
//! oracle [`bounded_equiv`] decides equality at desk scale: `Distinct`
//! verdicts come from invariant fingerprints only, `Equivalent`
//! verdicts always carry a replayable single-rule witness path, and
//! everything else is an honest `Unknown`. There is no claim of a
//! decision procedure; square insertions make the state space infinite
//! and the search is capped by length and state budgets.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::invariants::fingerprint;
use crate::normal;
use crate::search;
use crate::word::{GroupContext, GroupKind, Letter, Parity, Word};

/// Orientation of a rule relative to its presentation relation: for a
/// relation `l = r` the forward rule replaces `l` by `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }

    fn flipped(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// An oriented replacement of one contiguous letter block by another,
/// instantiating exactly one presentation relation with concrete
/// indices. Rules are stored symmetrically: whenever `lhs -> rhs` is in
/// a rule set, so is `rhs -> lhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RewriteRule {
    lhs: Vec<Letter>,
    rhs: Vec<Letter>,
    tag: &'static str,
    direction: Direction,
}

impl RewriteRule {
    fn new(tag: &'static str, direction: Direction, lhs: Vec<Letter>, rhs: Vec<Letter>) -> Self {
        RewriteRule {
            lhs,
            rhs,
            tag,
            direction,
        }
    }

    pub fn lhs(&self) -> &[Letter] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Letter] {
        &self.rhs
    }

    /// Relation identifier, e.g. `"plain-3"` or `"dotted-6"`.
    pub fn tag(&self) -> &'static str {
        self.tag
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// The opposite orientation of the same relation instance.
    pub fn reversed(&self) -> RewriteRule {
        RewriteRule {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            tag: self.tag,
            direction: self.direction.flipped(),
        }
    }

    /// True for pure commutation relations (two letters trading
    /// places).
    pub fn is_commutation(&self) -> bool {
        matches!(
            self.tag,
            "plain-2" | "parity-2" | "dotted-2" | "dotted-5" | "dotted-7" | "quotient-2"
                | "quotient-f"
        )
    }

    /// Shuffle steps rearrange or relabel without changing structure:
    /// commutations and the balanced-shift rule.
    pub(crate) fn is_shuffle(&self) -> bool {
        self.is_commutation() || self.tag == "dotted-6b"
    }
}

fn push_pair(rules: &mut Vec<RewriteRule>, tag: &'static str, lhs: Vec<Letter>, rhs: Vec<Letter>) {
    rules.push(RewriteRule::new(
        tag,
        Direction::Forward,
        lhs.clone(),
        rhs.clone(),
    ));
    rules.push(RewriteRule::new(tag, Direction::Backward, rhs, lhs));
}

fn strand_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push((i, j));
        }
    }
    out
}

fn disjoint(p: (usize, usize), q: (usize, usize)) -> bool {
    p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
}

/// Squares, far commutativity, and the triangle relation over plain
/// crossings; shared by the plain, dotted, and quotient rule sets.
fn crossing_rules(n: usize, tags: [&'static str; 3], rules: &mut Vec<RewriteRule>) {
    let pairs = strand_pairs(n);
    for &(i, j) in &pairs {
        let a = Letter::crossing(i, j);
        push_pair(rules, tags[0], vec![a, a], vec![]);
    }
    for (idx, &p) in pairs.iter().enumerate() {
        for &q in &pairs[idx + 1..] {
            if disjoint(p, q) {
                let a = Letter::crossing(p.0, p.1);
                let b = Letter::crossing(q.0, q.1);
                push_pair(rules, tags[1], vec![a, b], vec![b, a]);
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
                for middle in 0..3 {
                    let outer: Vec<Letter> =
                        (0..3).filter(|&k| k != middle).map(|k| g[k]).collect();
                    push_pair(
                        rules,
                        tags[2],
                        vec![outer[0], g[middle], outer[1]],
                        vec![outer[1], g[middle], outer[0]],
                    );
                }
            }
        }
    }
}

fn parity_rules(n: usize, rules: &mut Vec<RewriteRule>) {
    let pairs = strand_pairs(n);
    let bits = [Parity::Even, Parity::Odd];
    for &(i, j) in &pairs {
        for &e in &bits {
            let a = Letter::parity_crossing(i, j, e);
            push_pair(rules, "parity-1", vec![a, a], vec![]);
        }
    }
    for (idx, &p) in pairs.iter().enumerate() {
        for &q in &pairs[idx + 1..] {
            if disjoint(p, q) {
                for &e1 in &bits {
                    for &e2 in &bits {
                        let a = Letter::parity_crossing(p.0, p.1, e1);
                        let b = Letter::parity_crossing(q.0, q.1, e2);
                        push_pair(rules, "parity-2", vec![a, b], vec![b, a]);
                    }
                }
            }
        }
    }
    for x in 1..=n {
        for y in (x + 1)..=n {
            for z in (y + 1)..=n {
                for exy in 0..2u8 {
                    for exz in 0..2u8 {
                        for eyz in 0..2u8 {
                            if (exy + exz + eyz) % 2 != 0 {
                                continue;
                            }
                            let g = [
                                Letter::parity_crossing(x, y, Parity::from_bit(exy).unwrap()),
                                Letter::parity_crossing(x, z, Parity::from_bit(exz).unwrap()),
                                Letter::parity_crossing(y, z, Parity::from_bit(eyz).unwrap()),
                            ];
                            for middle in 0..3 {
                                let outer: Vec<Letter> =
                                    (0..3).filter(|&k| k != middle).map(|k| g[k]).collect();
                                push_pair(
                                    rules,
                                    "parity-3",
                                    vec![outer[0], g[middle], outer[1]],
                                    vec![outer[1], g[middle], outer[0]],
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

fn dotted_rules(n: usize, rules: &mut Vec<RewriteRule>) {
    crossing_rules(n, ["dotted-1", "dotted-2", "dotted-3"], rules);
    for i in 1..=n {
        let t = Letter::dot(i);
        push_pair(rules, "dotted-4", vec![t, t], vec![]);
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (ti, tj) = (Letter::dot(i), Letter::dot(j));
            push_pair(rules, "dotted-5", vec![ti, tj], vec![tj, ti]);
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let a = Letter::crossing(i, j);
            let (ti, tj) = (Letter::dot(i), Letter::dot(j));
            push_pair(rules, "dotted-6", vec![ti, tj, a, tj, ti], vec![a]);
        }
    }
    // derived balanced form of relation 6: t(i) a(i,j) t(i) = t(j) a(i,j) t(j)
    for i in 1..=n {
        for j in (i + 1)..=n {
            let a = Letter::crossing(i, j);
            let (ti, tj) = (Letter::dot(i), Letter::dot(j));
            push_pair(rules, "dotted-6b", vec![ti, a, ti], vec![tj, a, tj]);
        }
    }
    for &(i, j) in &strand_pairs(n) {
        for k in 1..=n {
            if k == i || k == j {
                continue;
            }
            let a = Letter::crossing(i, j);
            let t = Letter::dot(k);
            push_pair(rules, "dotted-7", vec![a, t], vec![t, a]);
        }
    }
}

/// Every instantiation over valid indices of the context's relations,
/// both orientations of each.
pub fn rule_set(context: GroupContext) -> Vec<RewriteRule> {
    let n = context.n();
    let mut rules = Vec::new();
    match context.kind() {
        GroupKind::Plain => crossing_rules(n, ["plain-1", "plain-2", "plain-3"], &mut rules),
        GroupKind::Parity => parity_rules(n, &mut rules),
        GroupKind::Dotted => dotted_rules(n, &mut rules),
        GroupKind::QuotientForbidden => {
            crossing_rules(n, ["quotient-1", "quotient-2", "quotient-3"], &mut rules);
            for i in 1..n {
                for j in (i + 1)..n {
                    let a = Letter::crossing(i, n);
                    let b = Letter::crossing(j, n);
                    push_pair(&mut rules, "quotient-f", vec![a, b], vec![b, a]);
                }
            }
        }
    }
    rules
}

/// Whether two distinct letters trade places under some commutation
/// relation of the context.
pub(crate) fn commutes(context: GroupContext, a: &Letter, b: &Letter) -> bool {
    commute_rule(context, a, b).is_some()
}

/// The oriented rule `[a, b] -> [b, a]`, when the context lets the two
/// letters commute.
pub(crate) fn commute_rule(context: GroupContext, a: &Letter, b: &Letter) -> Option<RewriteRule> {
    if a == b {
        return None;
    }
    let tag = match (context.kind(), a, b) {
        (GroupKind::Plain, _, _) => disjoint_crossings(a, b).then_some("plain-2"),
        (GroupKind::Parity, _, _) => disjoint_crossings(a, b).then_some("parity-2"),
        (GroupKind::QuotientForbidden, _, _) => {
            if disjoint_crossings(a, b) {
                Some("quotient-2")
            } else {
                let d = context.distinguished_strand().expect("quotient context");
                let (pa, pb) = (a.pair()?, b.pair()?);
                (pa.1 == d && pb.1 == d).then_some("quotient-f")
            }
        }
        (GroupKind::Dotted, Letter::Dot(x), Letter::Dot(y)) => (x != y).then_some("dotted-5"),
        (GroupKind::Dotted, Letter::Dot(x), c) | (GroupKind::Dotted, c, Letter::Dot(x)) => {
            let (i, j) = c.pair()?;
            (*x != i && *x != j).then_some("dotted-7")
        }
        (GroupKind::Dotted, _, _) => disjoint_crossings(a, b).then_some("dotted-2"),
    }?;
    let direction = if a < b {
        Direction::Forward
    } else {
        Direction::Backward
    };
    Some(RewriteRule::new(
        tag,
        direction,
        vec![*a, *b],
        vec![*b, *a],
    ))
}

fn disjoint_crossings(a: &Letter, b: &Letter) -> bool {
    match (a.pair(), b.pair()) {
        (Some(p), Some(q)) => disjoint((p.0.get(), p.1.get()), (q.0.get(), q.1.get())),
        _ => false,
    }
}

/// Square deletion or insertion of `letter`, tagged for the context.
pub(crate) fn square_rule(
    context: GroupContext,
    letter: Letter,
    direction: Direction,
) -> RewriteRule {
    let tag = match (context.kind(), &letter) {
        (GroupKind::Plain, _) => "plain-1",
        (GroupKind::Parity, _) => "parity-1",
        (GroupKind::QuotientForbidden, _) => "quotient-1",
        (GroupKind::Dotted, Letter::Dot(_)) => "dotted-4",
        (GroupKind::Dotted, _) => "dotted-1",
    };
    match direction {
        Direction::Forward => RewriteRule::new(tag, direction, vec![letter, letter], vec![]),
        Direction::Backward => RewriteRule::new(tag, direction, vec![], vec![letter, letter]),
    }
}

/// The unwrap orientation `t(x) t(y) a(x,y) t(y) t(x) -> a(x,y)` of the
/// dot conjugation relation, for any ordered pair of distinct strands.
pub(crate) fn unwrap_rule(x: usize, y: usize) -> RewriteRule {
    assert!(x != y);
    let a = Letter::crossing(x, y);
    let (tx, ty) = (Letter::dot(x), Letter::dot(y));
    RewriteRule::new(
        "dotted-6",
        Direction::Forward,
        vec![tx, ty, a, ty, tx],
        vec![a],
    )
}

/// The balanced-shift rule `t(from) a t(from) -> t(to) a t(to)` on the
/// crossing of the two strands.
pub(crate) fn dot_shift_rule(from: usize, to: usize) -> RewriteRule {
    assert!(from != to);
    let a = Letter::crossing(from, to);
    let (tf, tt) = (Letter::dot(from), Letter::dot(to));
    let direction = if from < to {
        Direction::Forward
    } else {
        Direction::Backward
    };
    RewriteRule::new(
        "dotted-6b",
        direction,
        vec![tf, a, tf],
        vec![tt, a, tt],
    )
}

/// Replaces `rule.lhs()` by `rule.rhs()` at `position`, or `None` if
/// the left-hand side does not match there.
pub(crate) fn apply_rule_at(
    letters: &[Letter],
    position: usize,
    rule: &RewriteRule,
) -> Option<Vec<Letter>> {
    let l = rule.lhs().len();
    if position + l > letters.len() || letters[position..position + l] != *rule.lhs() {
        return None;
    }
    let mut out = Vec::with_capacity(letters.len() - l + rule.rhs().len());
    out.extend_from_slice(&letters[..position]);
    out.extend_from_slice(rule.rhs());
    out.extend_from_slice(&letters[position + l..]);
    Some(out)
}

/// One rule application: which rule, where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStep {
    position: usize,
    rule: RewriteRule,
}

impl WitnessStep {
    pub(crate) fn new(position: usize, rule: RewriteRule) -> Self {
        WitnessStep { position, rule }
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn rule(&self) -> &RewriteRule {
        &self.rule
    }

    fn reversed(&self) -> WitnessStep {
        WitnessStep {
            position: self.position,
            rule: self.rule.reversed(),
        }
    }
}

/// A replayable path of single-rule applications.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    steps: Vec<WitnessStep>,
}

impl Witness {
    pub(crate) fn from_steps(steps: Vec<WitnessStep>) -> Self {
        Witness { steps }
    }

    pub fn steps(&self) -> &[WitnessStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of structural steps: commutation shuffles and
    /// balanced-shift relabelings (`dotted-6b`, which moves a wrap from
    /// one strand of its crossing to the other) are excluded from the
    /// count.
    pub fn essential_len(&self) -> usize {
        self.steps.iter().filter(|s| !s.rule.is_shuffle()).count()
    }

    /// The same path walked backwards.
    pub fn reversed(&self) -> Witness {
        Witness {
            steps: self.steps.iter().rev().map(WitnessStep::reversed).collect(),
        }
    }

    pub(crate) fn extend(&mut self, other: Witness) {
        self.steps.extend(other.steps);
    }
}

/// Applies every step of `witness` to `start`; errors if some step's
/// left-hand side does not match.
pub fn replay(start: &Word, witness: &Witness) -> Result<Word> {
    let mut letters = start.letters().to_vec();
    for (k, step) in witness.steps().iter().enumerate() {
        letters = apply_rule_at(&letters, step.position(), step.rule()).ok_or(
            Error::WitnessMismatch {
                step: k,
                position: step.position(),
            },
        )?;
    }
    Word::new(start.context(), letters)
}

/// All one-rule applications on a word, paired with their steps, in
/// deterministic rule-then-position order.
pub(crate) fn neighbor_steps(word: &Word) -> Vec<(WitnessStep, Word)> {
    let rules = rule_set(word.context());
    let mut out = Vec::new();
    for rule in &rules {
        let l = rule.lhs().len();
        if l > word.len() {
            continue;
        }
        for position in 0..=(word.len() - l) {
            if let Some(letters) = apply_rule_at(word.letters(), position, rule) {
                out.push((
                    WitnessStep::new(position, rule.clone()),
                    Word::unchecked(word.context(), letters),
                ));
            }
        }
    }
    out
}

/// All words obtainable by one rule application at one position,
/// square insertions included; sorted and deduplicated.
pub fn neighbors(word: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = neighbor_steps(word).into_iter().map(|(_, w)| w).collect();
    out.sort();
    out.dedup();
    out
}

/// Outcome of the bounded equivalence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivVerdict {
    /// A connecting rule path was found.
    Equivalent(Witness),
    /// An invariant fingerprint separates the words; names the
    /// component. Independent of any search bound.
    Distinct(String),
    /// The search budget was exhausted without a decision.
    Unknown,
}

impl EquivVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivVerdict::Equivalent(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, EquivVerdict::Distinct(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            EquivVerdict::Equivalent(_) => "equivalent",
            EquivVerdict::Distinct(_) => "distinct",
            EquivVerdict::Unknown => "unknown",
        }
    }
}

/// Budgets for [`bounded_equiv`]. `max_len` defaults to
/// `max(|u|, |v|) + 6` when unset and is clamped up to the endpoint
/// lengths; `max_states` caps visited states across both search
/// directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_len: Option<usize>,
    pub max_states: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_len: None,
            max_states: 2_000_000,
        }
    }
}

impl SearchBounds {
    pub(crate) fn effective_max_len(&self, u: &Word, v: &Word) -> usize {
        self.max_len
            .unwrap_or(u.len().max(v.len()) + 6)
            .max(u.len())
            .max(v.len())
    }
}

/// Decides whether `u` and `v` are equal in their group, within
/// bounds. Fingerprints are compared before any search, so `Distinct`
/// never depends on the budget; `Equivalent` always carries a witness
/// that [`replay`] maps `u` to `v`.
pub fn bounded_equiv(u: &Word, v: &Word, bounds: &SearchBounds) -> Result<EquivVerdict> {
    if u.context() != v.context() {
        return Err(Error::ContextMismatch {
            expected: u.context().to_string(),
            got: v.context().to_string(),
        });
    }
    u.validate()?;
    v.validate()?;
    if u == v {
        return Ok(EquivVerdict::Equivalent(Witness::default()));
    }
    if let Some(component) = fingerprint(u).first_difference(&fingerprint(v)) {
        return Ok(EquivVerdict::Distinct(component));
    }
    for (step, w) in neighbor_steps(u) {
        if &w == v {
            return Ok(EquivVerdict::Equivalent(Witness::from_steps(vec![step])));
        }
    }
    if let Some(witness) = constructive_path(u, v)? {
        return Ok(EquivVerdict::Equivalent(witness));
    }
    match search::bidirectional(u, v, bounds) {
        Some(witness) => Ok(EquivVerdict::Equivalent(witness)),
        None => Ok(EquivVerdict::Unknown),
    }
}

/// [`bounded_equiv`] against the identity word.
pub fn bounded_trivial(word: &Word, bounds: &SearchBounds) -> Result<EquivVerdict> {
    bounded_equiv(word, &Word::identity(word.context()), bounds)
}

/// Exact witness construction where a normal form is available: the
/// alternating form decides two-strand parity words, and even-dot words
/// whose parity readings agree letterwise are joined through the block
/// normal form.
fn constructive_path(u: &Word, v: &Word) -> Result<Option<Witness>> {
    match u.context().kind() {
        GroupKind::Parity if u.context().n() == 2 => {
            let (ru, mut wu) = normal::z2z2_witness(u)?;
            let (rv, wv) = normal::z2z2_witness(v)?;
            if ru == rv {
                wu.extend(wv.reversed());
                Ok(Some(wu))
            } else {
                Ok(None)
            }
        }
        GroupKind::Dotted => {
            if !(crate::maps::all_dots_even(u)? && crate::maps::all_dots_even(v)?) {
                return Ok(None);
            }
            let cu = crate::maps::dots_to_parity(u)?;
            let cv = crate::maps::dots_to_parity(v)?;
            if cu != cv {
                return Ok(None);
            }
            let (_, mut wu) = normal::block_form_witness(u)?;
            let (_, wv) = normal::block_form_witness(v)?;
            wu.extend(wv.reversed());
            Ok(Some(wu))
        }
        _ => Ok(None),
    }
}

/// Applies `steps` uniformly chosen neighbor moves with a seeded
/// generator; the result is equal to the input in its group and is
/// identical across runs for a fixed seed.
pub fn random_walk(word: &Word, steps: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = word.clone();
    for _ in 0..steps {
        let nbrs = neighbors(&current);
        if nbrs.is_empty() {
            break;
        }
        current = nbrs[rng.random_range(0..nbrs.len())].clone();
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse;

    fn word(n: usize, kind: GroupKind, text: &str) -> Word {
        parse(text, GroupContext::new(n, kind)).unwrap()
    }

    #[test]
    fn two_strand_plain_rules_are_the_square_only() {
        let rules = rule_set(GroupContext::plain(2));
        assert_eq!(rules.len(), 2);
        assert!(rules.iter().all(|r| r.tag() == "plain-1"));
    }

    #[test]
    fn three_strand_rules_include_the_triangle() {
        let rules = rule_set(GroupContext::plain(3));
        let lhs = word(3, GroupKind::Plain, "a(1,2) a(1,3) a(2,3)");
        let rhs = word(3, GroupKind::Plain, "a(2,3) a(1,3) a(1,2)");
        assert!(rules
            .iter()
            .any(|r| r.lhs() == lhs.letters() && r.rhs() == rhs.letters()
                && r.tag() == "plain-3"));
    }

    #[test]
    fn parity_triangles_respect_the_bit_constraint() {
        let rules = rule_set(GroupContext::parity(3));
        let lhs = word(3, GroupKind::Parity, "a(1,2;1) a(1,3;1) a(2,3;0)");
        let rhs = word(3, GroupKind::Parity, "a(2,3;0) a(1,3;1) a(1,2;1)");
        assert!(rules
            .iter()
            .any(|r| r.lhs() == lhs.letters() && r.rhs() == rhs.letters()));
        // an odd bit sum is never instantiated
        let odd = word(3, GroupKind::Parity, "a(1,2;1) a(1,3;0) a(2,3;0)");
        assert!(!rules.iter().any(|r| r.lhs() == odd.letters()
            && r.tag() == "parity-3"));
    }

    #[test]
    fn neighbors_contain_square_deletion() {
        let w = word(2, GroupKind::Plain, "a(1,2) a(1,2)");
        assert!(neighbors(&w).contains(&Word::identity(GroupContext::plain(2))));
    }

    #[test]
    fn neighbors_contain_triangle_image() {
        let w = word(3, GroupKind::Plain, "a(1,2) a(1,3) a(2,3)");
        let moved = word(3, GroupKind::Plain, "a(2,3) a(1,3) a(1,2)");
        assert!(neighbors(&w).contains(&moved));
    }

    #[test]
    fn neighbors_contain_dot_unwrap() {
        let w = word(2, GroupKind::Dotted, "t(1) t(2) a(1,2) t(2) t(1)");
        let unwrapped = word(2, GroupKind::Dotted, "a(1,2)");
        assert!(neighbors(&w).contains(&unwrapped));
    }

    #[test]
    fn quotient_crossings_on_the_last_strand_commute() {
        let w = parse("a(1,3) a(2,3)", GroupContext::quotient(3)).unwrap();
        let swapped = parse("a(2,3) a(1,3)", GroupContext::quotient(3)).unwrap();
        assert!(neighbors(&w).contains(&swapped));
        // but not in the plain group
        let w = word(3, GroupKind::Plain, "a(1,3) a(2,3)");
        let swapped = word(3, GroupKind::Plain, "a(2,3) a(1,3)");
        assert!(!neighbors(&w).contains(&swapped));
    }

    #[test]
    fn replay_rejects_mismatched_steps() {
        let w = word(2, GroupKind::Plain, "a(1,2) a(1,2)");
        let (step, _) = neighbor_steps(&w).into_iter().next().unwrap();
        let other = word(2, GroupKind::Plain, "a(1,2)");
        assert!(replay(&other, &Witness::from_steps(vec![step])).is_err());
    }

    #[test]
    fn random_walk_is_deterministic_and_stays_in_class() {
        let w = word(3, GroupKind::Plain, "a(1,2) a(1,3)");
        assert_eq!(random_walk(&w, 0, 7), w);
        let a = random_walk(&w, 5, 1);
        let b = random_walk(&w, 5, 1);
        assert_eq!(a, b);
        let verdict = bounded_equiv(&w, &a, &SearchBounds::default()).unwrap();
        assert!(verdict.is_equivalent());
    }

    #[test]
    fn walk_from_identity_preserves_the_identity_class() {
        let id = Word::identity(GroupContext::plain(2));
        let w = random_walk(&id, 5, 1);
        let verdict = bounded_trivial(&w, &SearchBounds::default()).unwrap();
        assert!(verdict.is_equivalent());
    }
}
