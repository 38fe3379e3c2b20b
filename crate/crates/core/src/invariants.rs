//! Class invariants, strand-deletion profiles, and the Brunnian
//! detection pipeline.
//!
//! A [`Fingerprint`] is constant on equivalence classes, so differing
//! fingerprints certify that two words are distinct; the converse
//! direction is delegated to the bounded search. Deleting one strand of
//! a plain word and reading the dot pattern as a parity word gives a
//! family of invariants; a nontrivial parity reading certifies the
//! original braid nontrivial, and a braid whose every strand deletion
//! is trivial after forgetting dots is a Brunnian candidate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Result;
use crate::maps;
use crate::normal;
use crate::rewrite::{bounded_trivial, EquivVerdict, SearchBounds};
use crate::word::{GroupKind, Letter, Parity, Word};

/// Computable data constant on every rewrite rule:
///
/// * occurrence parity of each letter species,
/// * membership in the even-dot subgroup (dotted contexts),
/// * per-pair alternating normal forms (parity contexts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    odd_generators: BTreeSet<Letter>,
    even_dot_membership: Option<bool>,
    pair_profiles: BTreeMap<(usize, usize), Vec<Parity>>,
}

impl Fingerprint {
    pub fn odd_generators(&self) -> &BTreeSet<Letter> {
        &self.odd_generators
    }

    pub fn even_dot_membership(&self) -> Option<bool> {
        self.even_dot_membership
    }

    pub fn pair_profiles(&self) -> &BTreeMap<(usize, usize), Vec<Parity>> {
        &self.pair_profiles
    }

    /// Name of the first component separating `self` from `other`, if
    /// any: `"generator-parity"`, `"h-membership"`, or
    /// `"pair-profile(i,j)"`.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<String> {
        if self.odd_generators != other.odd_generators {
            return Some("generator-parity".to_string());
        }
        if self.even_dot_membership != other.even_dot_membership {
            return Some("h-membership".to_string());
        }
        if self.pair_profiles != other.pair_profiles {
            let pairs: BTreeSet<&(usize, usize)> = self
                .pair_profiles
                .keys()
                .chain(other.pair_profiles.keys())
                .collect();
            for pair in pairs {
                if self.pair_profiles.get(pair) != other.pair_profiles.get(pair) {
                    return Some(format!("pair-profile({},{})", pair.0, pair.1));
                }
            }
        }
        None
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "odd-generators: [")?;
        for (k, l) in self.odd_generators.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")?;
        if let Some(h) = self.even_dot_membership {
            write!(f, " h-membership: {}", if h { 1 } else { 0 })?;
        }
        for (pair, bits) in &self.pair_profiles {
            write!(f, " pair-profile({},{}):", pair.0, pair.1)?;
            for b in bits {
                write!(f, " {b}")?;
            }
        }
        Ok(())
    }
}

/// Computes every fingerprint component applicable to the word's
/// context kind; deterministic.
pub fn fingerprint(word: &Word) -> Fingerprint {
    let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
    for &letter in word.letters() {
        *counts.entry(letter).or_insert(0) += 1;
    }
    let odd_generators = counts
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(l, _)| l)
        .collect();
    let even_dot_membership = match word.context().kind() {
        GroupKind::Dotted => {
            Some(maps::all_dots_even(word).expect("dotted context"))
        }
        _ => None,
    };
    let mut pair_profiles = BTreeMap::new();
    if word.context().kind() == GroupKind::Parity {
        let n = word.context().n();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let projected = normal::pair_projection(word, i, j).expect("parity context");
                let reduced = normal::z2z2_reduce(&projected).expect("two-strand parity word");
                if !reduced.is_empty() {
                    let bits = reduced
                        .letters()
                        .iter()
                        .map(|l| l.parity().expect("parity crossing"))
                        .collect();
                    pair_profiles.insert((i, j), bits);
                }
            }
        }
    }
    Fingerprint {
        odd_generators,
        even_dot_membership,
        pair_profiles,
    }
}

/// Triviality of one image word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    Trivial,
    Nontrivial,
    Unknown,
}

impl Triviality {
    pub fn name(self) -> &'static str {
        match self {
            Triviality::Trivial => "trivial",
            Triviality::Nontrivial => "nontrivial",
            Triviality::Unknown => "unknown",
        }
    }
}

/// Per-strand record of a deletion profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    /// Whether the deletion image lies in the even-dot subgroup.
    pub in_even_subgroup: bool,
    /// Parity reading of the image; present exactly when it does.
    pub parity_image: Option<Word>,
    /// Triviality of the parity reading in its group.
    pub verdict: Triviality,
}

/// Outcomes of deleting each strand of a plain word in turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionProfile {
    entries: BTreeMap<usize, ProfileEntry>,
}

impl DeletionProfile {
    pub fn entries(&self) -> &BTreeMap<usize, ProfileEntry> {
        &self.entries
    }

    pub fn entry(&self, strand: usize) -> Option<&ProfileEntry> {
        self.entries.get(&strand)
    }
}

/// Decides triviality of a parity word: exactly for up to two strands,
/// by fingerprint and bounded search beyond.
fn parity_triviality(word: &Word, bounds: &SearchBounds) -> Triviality {
    let n = word.context().n();
    if n == 1 {
        return Triviality::Trivial;
    }
    if n == 2 {
        let reduced = normal::z2z2_reduce(word).expect("two-strand parity word");
        return if reduced.is_empty() {
            Triviality::Trivial
        } else {
            Triviality::Nontrivial
        };
    }
    let identity = Word::identity(word.context());
    if fingerprint(word).first_difference(&fingerprint(&identity)).is_some() {
        return Triviality::Nontrivial;
    }
    match bounded_trivial(word, bounds).expect("valid word") {
        EquivVerdict::Equivalent(_) => Triviality::Trivial,
        EquivVerdict::Distinct(_) => Triviality::Nontrivial,
        EquivVerdict::Unknown => Triviality::Unknown,
    }
}

/// Decides triviality of a plain word: exactly for up to two strands,
/// by fingerprint and bounded search beyond.
fn plain_triviality(word: &Word, bounds: &SearchBounds) -> Triviality {
    let n = word.context().n();
    if n == 1 {
        return Triviality::Trivial;
    }
    if n == 2 {
        // the two-strand plain group is cyclic of order 2
        return if word.len().is_multiple_of(2) {
            Triviality::Trivial
        } else {
            Triviality::Nontrivial
        };
    }
    let identity = Word::identity(word.context());
    if fingerprint(word).first_difference(&fingerprint(&identity)).is_some() {
        return Triviality::Nontrivial;
    }
    match bounded_trivial(word, bounds).expect("valid word") {
        EquivVerdict::Equivalent(_) => Triviality::Trivial,
        EquivVerdict::Distinct(_) => Triviality::Nontrivial,
        EquivVerdict::Unknown => Triviality::Unknown,
    }
}

/// For each strand `m` of a plain word: delete it, record even-dot
/// membership, and when the image qualifies, its parity reading and the
/// reading's triviality.
pub fn deletion_profile(word: &Word, bounds: &SearchBounds) -> Result<DeletionProfile> {
    let mut entries = BTreeMap::new();
    for m in 1..=word.context().n() {
        let image = maps::delete_strand(word, m)?;
        let in_even = maps::all_dots_even(&image)?;
        let entry = if in_even {
            let reading = maps::dots_to_parity(&image)?;
            let verdict = parity_triviality(&reading, bounds);
            ProfileEntry {
                in_even_subgroup: true,
                parity_image: Some(reading),
                verdict,
            }
        } else {
            ProfileEntry {
                in_even_subgroup: false,
                parity_image: None,
                verdict: Triviality::Unknown,
            }
        };
        entries.insert(m, entry);
    }
    Ok(DeletionProfile { entries })
}

/// Replayable evidence that a plain word is nontrivial: the chain of
/// maps through one strand deletion whose parity reading does not
/// reduce to the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// The deleted strand.
    pub strand: usize,
    /// Image of the deletion in the dotted group.
    pub dotted_image: Word,
    /// Its parity reading.
    pub parity_image: Word,
    /// Reduced form of the reading (alternating form on two strands,
    /// involutive reduction beyond).
    pub reduced_image: Word,
    /// Fingerprint component separating the reading from the identity.
    pub separating: String,
}

/// First strand whose deletion lands in the even-dot subgroup with a
/// nontrivial parity reading, packaged with the intermediate words;
/// `None` when no strand certifies.
pub fn certify_nontrivial(word: &Word, bounds: &SearchBounds) -> Result<Option<Certificate>> {
    let profile = deletion_profile(word, bounds)?;
    for (&m, entry) in profile.entries() {
        if !entry.in_even_subgroup || entry.verdict != Triviality::Nontrivial {
            continue;
        }
        let reading = entry.parity_image.clone().expect("in even subgroup");
        let reduced_image = if reading.context().n() == 2 {
            normal::z2z2_reduce(&reading)?
        } else {
            reading.involutive_reduce()
        };
        let identity = Word::identity(reading.context());
        let separating = fingerprint(&reading)
            .first_difference(&fingerprint(&identity))
            .unwrap_or_else(|| "bounded-search".to_string());
        return Ok(Some(Certificate {
            strand: m,
            dotted_image: maps::delete_strand(word, m)?,
            parity_image: reading,
            reduced_image,
            separating,
        }));
    }
    Ok(None)
}

/// Brunnian candidacy: all strand deletions trivial, some nontrivial,
/// or undecided within bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateVerdict {
    Candidate,
    NotCandidate,
    Unknown,
}

impl CandidateVerdict {
    pub fn name(self) -> &'static str {
        match self {
            CandidateVerdict::Candidate => "candidate",
            CandidateVerdict::NotCandidate => "not-candidate",
            CandidateVerdict::Unknown => "unknown",
        }
    }
}

/// Outcome of the Brunnian pipeline on one plain word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrunnianReport {
    /// Triviality of each strand deletion after forgetting dots.
    pub deletions: BTreeMap<usize, Triviality>,
    /// Candidate when every deletion is trivial.
    pub candidate: CandidateVerdict,
    /// Nontriviality certificate for the word itself, when one exists.
    pub certificate: Option<Certificate>,
}

/// For each strand: delete it, forget the dots, and decide triviality
/// of the residual braid; reports candidacy together with the
/// [`certify_nontrivial`] result, so a braid can be reported as a
/// certified-nontrivial Brunnian candidate.
pub fn brunnian_check(word: &Word, bounds: &SearchBounds) -> Result<BrunnianReport> {
    let mut deletions = BTreeMap::new();
    for m in 1..=word.context().n() {
        let residual = maps::forget_dots(&maps::delete_strand(word, m)?)?;
        deletions.insert(m, plain_triviality(&residual, bounds));
    }
    let candidate = if deletions.values().any(|v| *v == Triviality::Nontrivial) {
        CandidateVerdict::NotCandidate
    } else if deletions.values().all(|v| *v == Triviality::Trivial) {
        CandidateVerdict::Candidate
    } else {
        CandidateVerdict::Unknown
    };
    let certificate = certify_nontrivial(word, bounds)?;
    Ok(BrunnianReport {
        deletions,
        candidate,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse;
    use crate::word::GroupContext;

    fn plain(n: usize, text: &str) -> Word {
        parse(text, GroupContext::plain(n)).unwrap()
    }

    #[test]
    fn square_has_even_generator_parity() {
        let fp = fingerprint(&plain(2, "a(1,2) a(1,2)"));
        assert!(fp.odd_generators().is_empty());
        let fp = fingerprint(&plain(2, "a(1,2)"));
        assert_eq!(fp.odd_generators().len(), 1);
    }

    #[test]
    fn alternating_parity_word_has_a_pair_profile() {
        let w = parse(
            "a(1,2;1) a(1,2;0) a(1,2;1) a(1,2;0)",
            GroupContext::parity(2),
        )
        .unwrap();
        let fp = fingerprint(&w);
        assert!(fp.odd_generators().is_empty());
        let profile = fp.pair_profiles().get(&(1, 2)).unwrap();
        assert_eq!(profile.len(), 4);
        let id = fingerprint(&Word::identity(GroupContext::parity(2)));
        assert_eq!(
            fp.first_difference(&id),
            Some("pair-profile(1,2)".to_string())
        );
    }

    #[test]
    fn single_dot_fails_even_membership() {
        let w = parse("t(1)", GroupContext::dotted(1)).unwrap();
        assert_eq!(fingerprint(&w).even_dot_membership(), Some(false));
    }

    #[test]
    fn single_crossing_profile_certifies_through_strand_two() {
        let w = plain(3, "a(1,3)");
        let profile = deletion_profile(&w, &SearchBounds::default()).unwrap();
        let entry = profile.entry(2).unwrap();
        assert!(entry.in_even_subgroup);
        assert_eq!(
            entry.parity_image,
            Some(parse("a(1,2;0)", GroupContext::parity(2)).unwrap())
        );
        assert_eq!(entry.verdict, Triviality::Nontrivial);
    }

    #[test]
    fn identity_profile_is_all_trivial() {
        let w = Word::identity(GroupContext::plain(3));
        let profile = deletion_profile(&w, &SearchBounds::default()).unwrap();
        for entry in profile.entries().values() {
            assert!(entry.in_even_subgroup);
            assert_eq!(entry.verdict, Triviality::Trivial);
            assert!(entry.parity_image.as_ref().unwrap().is_empty());
        }
        assert!(certify_nontrivial(&w, &SearchBounds::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn squared_crossing_yields_no_certificate() {
        let w = plain(3, "a(1,2) a(1,2)");
        assert!(certify_nontrivial(&w, &SearchBounds::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn single_crossing_is_not_a_brunnian_candidate() {
        let w = plain(3, "a(1,2)");
        let report = brunnian_check(&w, &SearchBounds::default()).unwrap();
        assert_eq!(report.candidate, CandidateVerdict::NotCandidate);
        assert_eq!(report.deletions[&3], Triviality::Nontrivial);
    }
}
