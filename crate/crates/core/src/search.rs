//! Smallest counterexamples to statements within an enumerated class.

use crate::algebra::FiniteAlgebra;
use crate::canon::canonical_form;
use crate::enumerate::{self, EnumerationSpec};
use crate::error::EnumerationError;
use crate::terms::{self, Counterexample, Statement};

#[derive(Clone, Debug)]
pub struct Found {
    pub algebra: FiniteAlgebra,
    pub counterexample: Counterexample,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Smallest failing algebra, ties broken by canonical form.
    pub found: Option<Found>,
    /// Algebras that passed the filters and were tested.
    pub examined: usize,
    /// Algebras of the base corpus rejected by the filters.
    pub filtered: usize,
    /// Sizes searched completely without a hit.
    pub exhausted: Vec<usize>,
    pub spec: EnumerationSpec,
}

impl SearchResult {
    /// One-line human summary.
    pub fn summary(&self) -> String {
        match &self.found {
            Some(f) => format!(
                "found {} (n = {}) at {}; examined {}, filtered {}",
                f.algebra.name(),
                f.algebra.size(),
                f.counterexample.describe(&f.algebra),
                self.examined,
                self.filtered
            ),
            None => format!(
                "exhausted sizes {}..={} without a counterexample; examined {}, filtered {}",
                self.spec.min_size, self.spec.max_size, self.examined, self.filtered
            ),
        }
    }
}

/// Searches sizes `spec.min_size..=spec.max_size` in increasing order and
/// stops at the first size with a failing algebra.
pub fn search_counterexample(target: &Statement, spec: &EnumerationSpec) -> Result<SearchResult, EnumerationError> {
    spec.validate()?;
    let mut result = SearchResult { found: None, examined: 0, filtered: 0, exhausted: Vec::new(), spec: spec.clone() };
    for n in spec.min_size.max(1)..=spec.max_size {
        let corpus = enumerate::enumerate_pbz(n, spec)?;
        result.examined += corpus.len();
        result.filtered += enumerate::base_count(n, spec) - corpus.len();
        let best = corpus
            .into_iter()
            .filter_map(|a| terms::holds_statement(&a, target).err().map(|c| (canonical_form(&a), a, c)))
            .min_by(|x, y| x.0.cmp(&y.0));
        match best {
            Some((_, algebra, counterexample)) => {
                result.found = Some(Found { algebra, counterexample });
                return Ok(result);
            }
            None => result.exhausted.push(n),
        }
    }
    Ok(result)
}
