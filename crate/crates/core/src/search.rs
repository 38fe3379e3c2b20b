//! Internal equivalence search.
//!
//! States are canonicalized within their commutation class before they
//! are stored: letters that trade places freely are shuffled to the
//! lexicographically least arrangement, with every shuffle recorded as
//! a real commutation step. A bidirectional uniform-cost search then
//! runs over the canonical states; its edges are the non-commutation
//! rules plus a composite move that slides a dot pair through its own
//! crossing, and shuffle steps cost nothing. Witnesses are assembled
//! from the recorded steps, so they always replay as single-rule
//! applications regardless of how the search found them.

use std::collections::HashMap;
use std::rc::Rc;

use crate::rewrite::{
    apply_rule_at, commute_rule, rule_set, square_rule, unwrap_rule, Direction, RewriteRule,
    SearchBounds, Witness, WitnessStep,
};
use crate::word::{GroupContext, GroupKind, Letter, Word};

/// States at most this long get unrestricted square insertions; longer
/// states only admit insertions next to a letter sharing a strand with
/// the inserted generator, which is what balancing paths need.
const FULL_INSERTION_LEN: usize = 6;

type Steps = Vec<WitnessStep>;

/// Lexicographically least arrangement of the word within its
/// commutation class, computed greedily; the returned steps shuffle the
/// input into the canonical arrangement.
pub(crate) fn trace_canonical(
    context: GroupContext,
    letters: &[Letter],
) -> (Vec<Letter>, Steps) {
    let mut work = letters.to_vec();
    let mut steps = Vec::new();
    for front in 0..work.len() {
        let mut best: Option<usize> = None;
        'candidate: for k in front..work.len() {
            for m in front..k {
                if work[m] == work[k] || !crate::rewrite::commutes(context, &work[m], &work[k]) {
                    continue 'candidate;
                }
            }
            if best.is_none_or(|b| work[k] < work[b]) {
                best = Some(k);
            }
        }
        let k = best.expect("the letter already in front is always a candidate");
        for p in (front..k).rev() {
            let rule = commute_rule(context, &work[p], &work[p + 1])
                .expect("bubbled letter commutes with everything it passes");
            steps.push(WitnessStep::new(p, rule));
            work.swap(p, p + 1);
        }
    }
    (work, steps)
}

/// Non-commutation moves available from a canonical state: pattern
/// rules, square insertions (restricted on long states), and the dot
/// pair-slide macro. Each edge carries the steps from the state to the
/// canonical form of its result.
struct EdgeSet {
    context: GroupContext,
    patterns: Vec<RewriteRule>,
    insertions: Vec<RewriteRule>,
    max_len: usize,
}

impl EdgeSet {
    fn new(context: GroupContext, max_len: usize) -> Self {
        let mut patterns = Vec::new();
        let mut insertions = Vec::new();
        for rule in rule_set(context) {
            if rule.is_commutation() {
                continue;
            }
            if rule.lhs().is_empty() {
                insertions.push(rule);
            } else {
                patterns.push(rule);
            }
        }
        EdgeSet {
            context,
            patterns,
            insertions,
            max_len,
        }
    }

    fn expand(&self, state: &[Letter]) -> Vec<(Steps, Vec<Letter>)> {
        let mut out = Vec::new();
        let mut emit = |steps: Steps, letters: Vec<Letter>| {
            if letters.len() <= self.max_len {
                let (canonical, align) = trace_canonical(self.context, &letters);
                let mut all = steps;
                all.extend(align);
                out.push((all, canonical));
            }
        };
        for rule in &self.patterns {
            let l = rule.lhs().len();
            if l > state.len() {
                continue;
            }
            for position in 0..=(state.len() - l) {
                if let Some(next) = apply_rule_at(state, position, rule) {
                    emit(vec![WitnessStep::new(position, rule.clone())], next);
                }
            }
        }
        if state.len() + 2 <= self.max_len {
            for rule in &self.insertions {
                let letter = rule.rhs()[0];
                for position in 0..=state.len() {
                    if state.len() > FULL_INSERTION_LEN
                        && !insertion_touches_neighbor(state, position, &letter)
                    {
                        continue;
                    }
                    let next = apply_rule_at(state, position, rule)
                        .expect("empty left-hand side matches everywhere");
                    emit(vec![WitnessStep::new(position, rule.clone())], next);
                }
            }
        }
        if self.context.kind() == GroupKind::Dotted {
            for (steps, next) in pair_slide_edges(self.context, state) {
                emit(steps, next);
            }
        }
        out
    }
}

fn insertion_touches_neighbor(state: &[Letter], position: usize, letter: &Letter) -> bool {
    let shares = |l: &Letter| match *letter {
        Letter::Dot(s) => l.is_crossing() && l.involves(s),
        Letter::Crossing(i, j) | Letter::ParityCrossing(i, j, _) => {
            l.involves(i) || l.involves(j)
        }
    };
    (position > 0 && shares(&state[position - 1]))
        || (position < state.len() && shares(&state[position]))
}

/// `t(x) t(y) a(x,y) -> a(x,y) t(x) t(y)` and its reverse, expanded to
/// square insertions/deletions around one unwrap/wrap of the dot
/// conjugation relation.
fn pair_slide_edges(context: GroupContext, state: &[Letter]) -> Vec<(Steps, Vec<Letter>)> {
    let mut out = Vec::new();
    for w in 0..state.len().saturating_sub(2) {
        if let (Letter::Dot(x), Letter::Dot(y), c) = (state[w], state[w + 1], state[w + 2]) {
            if c.pair().map(|(i, j)| (i.min(j), i.max(j)))
                == Some((x.min(y), x.max(y)))
            {
                let steps = vec![
                    WitnessStep::new(
                        w + 3,
                        square_rule(context, Letter::Dot(y), Direction::Backward),
                    ),
                    WitnessStep::new(
                        w + 4,
                        square_rule(context, Letter::Dot(x), Direction::Backward),
                    ),
                    WitnessStep::new(w, unwrap_rule(x.get(), y.get())),
                ];
                let mut next = state.to_vec();
                next[w] = c;
                next[w + 1] = Letter::Dot(x);
                next[w + 2] = Letter::Dot(y);
                out.push((steps, next));
            }
        }
        if let (c, Letter::Dot(x), Letter::Dot(y)) = (state[w], state[w + 1], state[w + 2]) {
            if c.pair().map(|(i, j)| (i.min(j), i.max(j)))
                == Some((x.min(y), x.max(y)))
            {
                let steps = vec![
                    WitnessStep::new(w, unwrap_rule(x.get(), y.get()).reversed()),
                    WitnessStep::new(
                        w + 4,
                        square_rule(context, Letter::Dot(x), Direction::Forward),
                    ),
                    WitnessStep::new(
                        w + 3,
                        square_rule(context, Letter::Dot(y), Direction::Forward),
                    ),
                ];
                let mut next = state.to_vec();
                next[w] = Letter::Dot(x);
                next[w + 1] = Letter::Dot(y);
                next[w + 2] = c;
                out.push((steps, next));
            }
        }
    }
    out
}

/// Cost of an edge: its structural steps. Shuffles are free, so found
/// witnesses are minimal in structural moves.
fn edge_cost(steps: &Steps) -> u32 {
    steps.iter().filter(|s| !s.rule().is_shuffle()).count() as u32
}

struct Node {
    parent: Option<usize>,
    /// Steps from the parent's canonical state to this one.
    steps: Steps,
    cost: u32,
    settled: bool,
}

struct Side {
    ids: HashMap<Rc<[Letter]>, usize>,
    nodes: Vec<Node>,
    keys: Vec<Rc<[Letter]>>,
    heap: std::collections::BinaryHeap<std::cmp::Reverse<(u32, u64, usize)>>,
}

impl Side {
    fn new(root: Vec<Letter>, seq: &mut u64) -> Self {
        let key: Rc<[Letter]> = root.into();
        let mut ids = HashMap::new();
        ids.insert(Rc::clone(&key), 0);
        let mut heap = std::collections::BinaryHeap::new();
        heap.push(std::cmp::Reverse((0, *seq, 0)));
        *seq += 1;
        Side {
            ids,
            nodes: vec![Node {
                parent: None,
                steps: Vec::new(),
                cost: 0,
                settled: false,
            }],
            keys: vec![key],
            heap,
        }
    }

    fn top_cost(&self) -> u32 {
        self.heap
            .peek()
            .map(|std::cmp::Reverse((c, _, _))| *c)
            .unwrap_or(u32::MAX)
    }

    /// Steps from the root's canonical state to node `id`.
    fn path(&self, id: usize) -> Steps {
        let mut chain = Vec::new();
        let mut cursor = Some(id);
        while let Some(node) = cursor {
            chain.push(node);
            cursor = self.nodes[node].parent;
        }
        let mut steps = Vec::new();
        for node in chain.into_iter().rev() {
            steps.extend(self.nodes[node].steps.iter().cloned());
        }
        steps
    }
}

/// Meet-in-the-middle search between `u` and `v`, which must share a
/// context and agree on fingerprints. Uniform-cost from both ends with
/// shuffles free; returns a witness from `u` to `v` that is minimal in
/// structural moves, or `None` when the budget runs out or both
/// frontiers die.
pub(crate) fn bidirectional(u: &Word, v: &Word, bounds: &SearchBounds) -> Option<Witness> {
    let context = u.context();
    let max_len = bounds.effective_max_len(u, v);
    let edges = EdgeSet::new(context, max_len);

    let (cu, into_cu) = trace_canonical(context, u.letters());
    let (cv, into_cv) = trace_canonical(context, v.letters());
    if cu == cv {
        return Some(assemble(into_cu, Vec::new(), Vec::new(), into_cv));
    }

    let mut seq = 0u64;
    let mut forward = Side::new(cu, &mut seq);
    let mut backward = Side::new(cv, &mut seq);
    let mut states = 2usize;
    // best known meeting: (total cost, forward node, backward node)
    let mut best: Option<(u32, usize, usize)> = None;

    'search: loop {
        let (tf, tb) = (forward.top_cost(), backward.top_cost());
        if let Some((total, _, _)) = best {
            if total <= tf.saturating_add(tb) {
                break 'search;
            }
        }
        if tf == u32::MAX && tb == u32::MAX {
            return None;
        }
        let expand_forward = tf <= tb;
        let (side, other) = if expand_forward {
            (&mut forward, &mut backward)
        } else {
            (&mut backward, &mut forward)
        };

        let std::cmp::Reverse((cost, _, id)) = side.heap.pop().expect("nonempty side");
        if side.nodes[id].settled {
            continue;
        }
        side.nodes[id].settled = true;
        let state = Rc::clone(&side.keys[id]);
        for (steps, letters) in edges.expand(&state) {
            let tentative = cost + edge_cost(&steps);
            let known = side.ids.get(letters.as_slice()).copied();
            let target = match known {
                Some(existing) => {
                    if side.nodes[existing].cost <= tentative {
                        continue;
                    }
                    side.nodes[existing].parent = Some(id);
                    side.nodes[existing].steps = steps;
                    side.nodes[existing].cost = tentative;
                    existing
                }
                None => {
                    states += 1;
                    if states > bounds.max_states {
                        break 'search;
                    }
                    let key: Rc<[Letter]> = letters.into();
                    let new_id = side.nodes.len();
                    side.ids.insert(Rc::clone(&key), new_id);
                    side.keys.push(Rc::clone(&key));
                    side.nodes.push(Node {
                        parent: Some(id),
                        steps,
                        cost: tentative,
                        settled: false,
                    });
                    new_id
                }
            };
            side.heap.push(std::cmp::Reverse((tentative, seq, target)));
            seq += 1;
            if let Some(&meet) = other.ids.get(&side.keys[target]) {
                let total = tentative + other.nodes[meet].cost;
                let improves = best.is_none_or(|(t, _, _)| total < t);
                if improves {
                    best = Some(if expand_forward {
                        (total, target, meet)
                    } else {
                        (total, meet, target)
                    });
                }
            }
        }
    }
    best.map(|(_, f, b)| assemble(into_cu, forward.path(f), backward.path(b), into_cv))
}

/// Stitches `u -> canonical(u) -> meet -> canonical(v) -> v` into one
/// forward witness.
fn assemble(into_cu: Steps, fwd: Steps, bwd: Steps, into_cv: Steps) -> Witness {
    let mut steps = into_cu;
    steps.extend(fwd);
    let back = Witness::from_steps({
        let mut s = into_cv;
        s.extend(bwd);
        s
    })
    .reversed();
    let witness = Witness::from_steps(steps);
    let mut all = witness;
    all.extend(back);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse;
    use crate::rewrite::replay;

    #[test]
    fn canonicalization_sorts_free_letters() {
        let ctx = GroupContext::dotted(3);
        let w = parse("t(3) a(1,2) t(3)", ctx).unwrap();
        let (canonical, steps) = trace_canonical(ctx, w.letters());
        // t(3) commutes with a(1,2); crossings sort before dots
        let expected = parse("a(1,2) t(3) t(3)", ctx).unwrap();
        assert_eq!(canonical, expected.letters());
        let replayed = replay(&w, &Witness::from_steps(steps)).unwrap();
        assert_eq!(replayed, expected);
    }

    #[test]
    fn canonicalization_respects_blocking_letters() {
        let ctx = GroupContext::dotted(2);
        let w = parse("t(1) a(1,2) t(1)", ctx).unwrap();
        let (canonical, steps) = trace_canonical(ctx, w.letters());
        assert_eq!(canonical, w.letters());
        assert!(steps.is_empty());
    }

    #[test]
    fn pair_slide_macro_replays() {
        let ctx = GroupContext::dotted(2);
        let w = parse("t(1) t(2) a(1,2)", ctx).unwrap();
        let edges = pair_slide_edges(ctx, w.letters());
        assert!(!edges.is_empty());
        let (steps, next) = &edges[0];
        let replayed = replay(&w, &Witness::from_steps(steps.clone())).unwrap();
        assert_eq!(replayed.letters(), next.as_slice());
        assert_eq!(next.as_slice(), parse("a(1,2) t(1) t(2)", ctx).unwrap().letters());
    }
}
