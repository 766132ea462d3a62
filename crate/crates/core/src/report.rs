//! Named pass/fail checks with concrete witnesses.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactlin::Vector;

/// Where and how a check failed: the basis multi-index and the two sides
/// that should have agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Witness {
    pub fn new(indices: Vec<usize>, lhs: Vector, rhs: Vector) -> Witness {
        Witness { indices, lhs, rhs }
    }

    /// A witness carrying only a location.
    pub fn at(indices: Vec<usize>) -> Witness {
        Witness { indices, lhs: Vec::new(), rhs: Vec::new() }
    }
}

fn fmt_vec(v: &[crate::exactlin::Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}", self.indices)?;
        if !self.lhs.is_empty() || !self.rhs.is_empty() {
            write!(f, ": {} != {}", fmt_vec(&self.lhs), fmt_vec(&self.rhs))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Check {
        Check { name: name.into(), passed: false, witness: Some(witness) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Witness) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    /// Compares `lhs(t)` and `rhs(t)` over `tuples` in order, stopping at the
    /// first disagreement. With lexicographic tuples the witness is the
    /// smallest failing multi-index.
    pub fn exhaustive<I, F>(name: impl Into<String>, tuples: I, mut sides: F) -> Check
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> (Vector, Vector),
    {
        for t in tuples {
            let (lhs, rhs) = sides(&t);
            if lhs != rhs {
                return Check::fail(name, Witness::new(t, lhs, rhs));
            }
        }
        Check::pass(name)
    }
}

/// All multi-indices of `0..dims[0] × 0..dims[1] × …` in lexicographic order.
pub fn tuples(dims: &[usize]) -> MultiIndex {
    MultiIndex {
        dims: dims.to_vec(),
        next: if dims.contains(&0) { None } else { Some(vec![0; dims.len()]) },
    }
}

pub struct MultiIndex {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for MultiIndex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.dims[pos] {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

/// The outcome of a suite of checks.
///
/// `flags` carry informational facts (such as whether the algebra is weak)
/// that do not affect the verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
    pub flags: BTreeMap<String, bool>,
}

impl AxiomReport {
    pub fn new() -> AxiomReport {
        AxiomReport::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn flag(&mut self, name: impl Into<String>, value: bool) {
        self.flags.insert(name.into(), value);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
        self.flags.extend(other.flags);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.failures().map(|c| c.name.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
