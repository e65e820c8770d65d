use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{ds, Degree};
use crate::constructions::chain;
use crate::error::{Error, Result};
use crate::term::Equation;

/// `[ds(C_2, eq), …, ds(C_max_n, eq)]`.
pub fn chain_degrees(eq: &Equation, max_n: usize) -> Result<Vec<Degree>> {
    if max_n < 2 {
        return Err(Error::InvalidArgument(format!("max_n must be at least 2, got {max_n}")));
    }
    (2..=max_n).map(|n| ds(&chain(n)?, eq)).collect()
}

/// Finite-range evidence for a satisfiability gap among chains.
///
/// The sub-one maximum is taken over the computed range only, so the
/// reported gap is a candidate, never a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapEvidence {
    pub equation: Equation,
    pub max_n: usize,
    /// `sequence[i]` is the degree in `C_{i+2}`.
    pub sequence: Vec<Degree>,
    /// Largest value below 1 and the first chain order attaining it.
    pub sub_one_max: Option<(usize, Degree)>,
    pub monotone_nonincreasing_after_first_sub_one: bool,
}

impl GapEvidence {
    pub fn degree_at(&self, n: usize) -> Option<Degree> {
        n.checked_sub(2).and_then(|i| self.sequence.get(i)).copied()
    }

    /// `1 - sub_one_max`, when some computed degree is below 1.
    pub fn candidate_gap(&self) -> Option<Degree> {
        self.sub_one_max.map(|(_, d)| d.complement())
    }
}

pub fn gap_evidence(eq: &Equation, max_n: usize) -> Result<GapEvidence> {
    if max_n < 3 {
        return Err(Error::InvalidArgument(format!("max_n must be at least 3, got {max_n}")));
    }
    let sequence = chain_degrees(eq, max_n)?;
    let mut sub_one_max: Option<(usize, Degree)> = None;
    for (i, d) in sequence.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        if sub_one_max.is_none_or(|(_, best)| *d > best) {
            sub_one_max = Some((i + 2, *d));
        }
    }
    let monotone = monotone_after_first_sub_one(&sequence);
    Ok(GapEvidence {
        equation: eq.clone(),
        max_n,
        sequence,
        sub_one_max,
        monotone_nonincreasing_after_first_sub_one: monotone,
    })
}

fn monotone_after_first_sub_one(sequence: &[Degree]) -> bool {
    match sequence.iter().position(|d| !d.is_one()) {
        Some(first) => sequence[first..].windows(2).all(|w| w[1] <= w[0]),
        None => true,
    }
}

#[derive(Serialize)]
struct Entry {
    n: usize,
    #[serde(flatten)]
    degree: Degree,
}

#[derive(Serialize)]
struct SubOne {
    n: usize,
    degree: Degree,
}

impl Serialize for GapEvidence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let sequence: Vec<Entry> = self
            .sequence
            .iter()
            .enumerate()
            .map(|(i, d)| Entry { n: i + 2, degree: *d })
            .collect();
        let mut st = s.serialize_struct("GapEvidence", 6)?;
        st.serialize_field("equation", &self.equation)?;
        st.serialize_field("max_n", &self.max_n)?;
        st.serialize_field("sequence", &sequence)?;
        st.serialize_field("sub_one_max", &self.sub_one_max.map(|(n, degree)| SubOne { n, degree }))?;
        st.serialize_field("candidate_gap", &self.candidate_gap())?;
        st.serialize_field(
            "monotone_nonincreasing_after_first_sub_one",
            &self.monotone_nonincreasing_after_first_sub_one,
        )?;
        st.end()
    }
}
