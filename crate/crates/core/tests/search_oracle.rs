//! Cross-validation of the equivalence oracle against ground truth: a
//! plain breadth-first exploration of the one-rule neighbor graph,
//! independent of the library's search machinery.

mod common;

use freebraid::rewrite::{bounded_equiv, replay, EquivVerdict, SearchBounds};
use freebraid::word::GroupContext;
use rand::Rng;

/// On random small pairs, the library verdict and the exhaustive
/// neighbor-graph exploration must tell the same story: Equivalent only
/// when connected (and the witness replays), Distinct never when
/// connected, and no Unknown on a pair the naive exploration joins
/// within the same length cap.
#[test]
fn verdicts_match_exhaustive_exploration_at_small_scale() {
    let mut rng = common::rng(0xC0FFEE);
    let mut equivalent = 0usize;
    let mut distinct = 0usize;
    for trial in 0..150 {
        let context = match rng.random_range(0..4u8) {
            0 => GroupContext::plain(3),
            1 => GroupContext::parity(2),
            2 => GroupContext::dotted(2),
            _ => GroupContext::quotient(3),
        };
        let lu = rng.random_range(0..=4);
        let lv = rng.random_range(0..=4);
        let u = common::random_word(&mut rng, context, lu);
        let v = common::random_word(&mut rng, context, lv);
        let cap = u.len().max(v.len()) + 6;
        let connected = common::naive_connected(&u, &v, cap);
        match bounded_equiv(&u, &v, &SearchBounds::default()).unwrap() {
            EquivVerdict::Equivalent(witness) => {
                assert!(connected, "trial {trial}: spurious equivalence: {u} vs {v}");
                assert_eq!(replay(&u, &witness).unwrap(), v, "trial {trial}");
                equivalent += 1;
            }
            EquivVerdict::Distinct(component) => {
                assert!(
                    !connected,
                    "trial {trial}: {component} separates connected words {u} vs {v}"
                );
                distinct += 1;
            }
            EquivVerdict::Unknown => {
                assert!(
                    !connected,
                    "trial {trial}: undecided on a joinable pair: {u} vs {v}"
                );
            }
        }
    }
    // the sample must exercise both outcomes
    assert!(equivalent > 10, "only {equivalent} equivalent pairs sampled");
    assert!(distinct > 10, "only {distinct} distinct pairs sampled");
}
