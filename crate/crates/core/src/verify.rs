//! Exhaustive verification suites over all isomorphism classes up to a size.

use std::fmt;
use std::str::FromStr;

use crate::enumerator::{
    antipode_rhs, coproduct_check, f0_with, f_polynomial, fq_poset_cone_with, opposite_identity_check, product_check,
    ppartitions_bruteforce_with, ppartitions_via_extensions,
};
use crate::error::Result;
use crate::oracle::{euler_flag_identity, face_count_polynomial, fq_integer_points_with, positive_subposet_cross_check, MAX_CROSS_CHECK_N};
use crate::par::{self, Strategy};
use crate::poset::{all_posets, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Oracle,
    Antipode,
    Opposite,
    Hopf,
    PPartition,
    Euler,
    Faces,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Oracle,
        Suite::Antipode,
        Suite::Opposite,
        Suite::Hopf,
        Suite::PPartition,
        Suite::Euler,
        Suite::Faces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Antipode => "antipode",
            Suite::Opposite => "opposite",
            Suite::Hopf => "hopf",
            Suite::PPartition => "ppartition",
            Suite::Euler => "euler",
            Suite::Faces => "faces",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    /// `(n, number of classes checked)` for each size.
    pub checked: Vec<(usize, usize)>,
    /// First failing poset in canonical order, if any.
    pub failure: Option<Poset>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn total(&self) -> usize {
        self.checked.iter().map(|(_, c)| c).sum()
    }
}

/// Checks one poset. `classes[k]` holds the classes of size `k`, used as
/// second factors by the product check.
fn check(suite: Suite, p: &Poset, max_n: usize, trunc_m: usize, classes: &[Vec<Poset>]) -> Result<bool> {
    let seq = Strategy::Sequential;
    Ok(match suite {
        Suite::Oracle => {
            let fq = fq_poset_cone_with(p, seq);
            for m in 1..=trunc_m {
                if fq_integer_points_with(p, m, seq)? != fq.truncate(m) {
                    return Ok(false);
                }
            }
            true
        }
        Suite::Antipode => fq_poset_cone_with(p, seq).antipode() == antipode_rhs(p),
        Suite::Opposite => opposite_identity_check(p),
        Suite::Hopf => {
            coproduct_check(p)
                && classes
                    .iter()
                    .take(max_n.saturating_sub(p.n()) + 1)
                    .skip(1)
                    .flatten()
                    .all(|q| product_check(p, q))
        }
        Suite::PPartition => {
            let f = f0_with(p, seq);
            let labelled = p.well_labelling();
            let via_ext = ppartitions_via_extensions(p);
            for m in 1..=trunc_m {
                if f.truncate(m) != ppartitions_bruteforce_with(&labelled, m, seq)?
                    || via_ext.truncate(m) != ppartitions_bruteforce_with(p, m, seq)?
                {
                    return Ok(false);
                }
            }
            true
        }
        Suite::Euler => euler_flag_identity(p),
        Suite::Faces => {
            f_polynomial(p) == face_count_polynomial(p)
                && (p.n() > MAX_CROSS_CHECK_N || positive_subposet_cross_check(p)?)
        }
    })
}

/// Runs `suite` on every class with `1 ≤ n ≤ max_n`, parallel across posets.
pub fn run_suite(suite: Suite, max_n: usize, trunc_m: usize, strategy: Strategy) -> Result<SuiteReport> {
    let classes: Vec<Vec<Poset>> = (0..=max_n).map(all_posets).collect::<Result<_>>()?;
    let mut checked = Vec::new();
    let mut failure = None;
    for (n, level) in classes.iter().enumerate().skip(1) {
        let results = par::map_collect(strategy, level, |p| check(suite, p, max_n, trunc_m, &classes));
        checked.push((n, level.len()));
        for (p, ok) in level.iter().zip(results) {
            if !ok? {
                failure = Some(p.clone());
                break;
            }
        }
        if failure.is_some() {
            break;
        }
    }
    Ok(SuiteReport { suite, checked, failure })
}
