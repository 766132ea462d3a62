//! Finite groupoids, their groupoid algebras `kG` and the duals `(kG)*`.
//!
//! Composition `g ∘ h` is defined iff `source(g) = target(h)`; in `kG` the
//! product `g h` is `g ∘ h` when defined and `0` otherwise. Morphisms are
//! ordered by `(source, target, name)` and that order is the basis order of
//! every derived presentation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix};
use crate::report::{tuples, AxiomReport, Check, Witness};
use crate::wha::{
    into_error, require, verify_weak_hopf, AlgebraPresentation, CoalgebraPresentation,
    WeakHopfPresentation,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    pub name: String,
    pub source: String,
    pub target: String,
}

impl Morphism {
    pub fn new(name: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        Morphism { name: name.into(), source: source.into(), target: target.into() }
    }
}

/// A finite groupoid given by tables. The tables may violate the groupoid
/// axioms; [`validate_groupoid`] reports such violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    source: Vec<usize>,
    target: Vec<usize>,
    compose: BTreeMap<(usize, usize), usize>,
    inverse: BTreeMap<usize, usize>,
}

impl FiniteGroupoid {
    /// Builds a groupoid from labelled tables. `compose` holds triples
    /// `(g, h, g∘h)` and `inverses` pairs `(g, g⁻¹)`.
    ///
    /// Fails on duplicate or unknown labels and on conflicting table
    /// entries; axiom violations are left to [`validate_groupoid`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: &[(String, String, String)],
        inverses: &[(String, String)],
    ) -> Result<FiniteGroupoid> {
        let object_set: BTreeSet<&String> = objects.iter().collect();
        if object_set.len() != objects.len() {
            return Err(Error::InvalidInput("duplicate object label".into()));
        }
        let mut morphisms = morphisms;
        morphisms.sort_by(|a, b| {
            (&a.source, &a.target, &a.name).cmp(&(&b.source, &b.target, &b.name))
        });
        let mut index = BTreeMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if index.insert(m.name.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate morphism label {:?}", m.name)));
            }
        }
        let object_index = |label: &String| {
            objects
                .iter()
                .position(|o| o == label)
                .ok_or_else(|| Error::InvalidInput(format!("unknown object {label:?}")))
        };
        let source = morphisms.iter().map(|m| object_index(&m.source)).collect::<Result<Vec<_>>>()?;
        let target = morphisms.iter().map(|m| object_index(&m.target)).collect::<Result<Vec<_>>>()?;
        let morphism_index = |label: &String| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::InvalidInput(format!("unknown morphism {label:?}")))
        };
        let mut table = BTreeMap::new();
        for (g, h, gh) in compose {
            let key = (morphism_index(g)?, morphism_index(h)?);
            let val = morphism_index(gh)?;
            if table.insert(key, val).is_some_and(|old| old != val) {
                return Err(Error::InvalidInput(format!("conflicting composition for ({g}, {h})")));
            }
        }
        let mut inverse = BTreeMap::new();
        for (g, gi) in inverses {
            let (a, b) = (morphism_index(g)?, morphism_index(gi)?);
            if inverse.insert(a, b).is_some_and(|old| old != b) {
                return Err(Error::InvalidInput(format!("conflicting inverse for {g}")));
            }
        }
        Ok(FiniteGroupoid { objects, morphisms, source, target, compose: table, inverse })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    /// Morphisms in basis order.
    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn source(&self, g: usize) -> usize {
        self.source[g]
    }

    pub fn target(&self, g: usize) -> usize {
        self.target[g]
    }

    /// `g ∘ h` from the table.
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose.get(&(g, h)).copied()
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        self.inverse.get(&g).copied()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// The identity morphism at `object`: the endomorphism that is neutral
    /// for every composable morphism.
    pub fn identity(&self, object: usize) -> Option<usize> {
        (0..self.len()).find(|&u| {
            self.source[u] == object
                && self.target[u] == object
                && (0..self.len()).all(|g| {
                    (self.target[g] != object || self.compose(u, g) == Some(g))
                        && (self.source[g] != object || self.compose(g, u) == Some(g))
                })
        })
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.identity(self.source[g]) == Some(g)
    }

    /// Composition table as label triples, in basis order.
    pub fn compose_table(&self) -> Vec<(String, String, String)> {
        self.compose
            .iter()
            .map(|(&(g, h), &gh)| {
                (self.morphisms[g].name.clone(), self.morphisms[h].name.clone(), self.morphisms[gh].name.clone())
            })
            .collect()
    }

    pub fn inverse_table(&self) -> Vec<(String, String)> {
        self.inverse
            .iter()
            .map(|(&g, &gi)| (self.morphisms[g].name.clone(), self.morphisms[gi].name.clone()))
            .collect()
    }

    /// Replaces the inverse of `g`; used to build corrupted inputs.
    pub fn with_inverse(mut self, g: usize, inverse: usize) -> FiniteGroupoid {
        self.inverse.insert(g, inverse);
        self
    }

    fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: impl Fn(&Morphism, &Morphism) -> Option<String>,
        inverse: impl Fn(&Morphism) -> String,
    ) -> FiniteGroupoid {
        let mut table = Vec::new();
        for g in &morphisms {
            for h in &morphisms {
                if let Some(gh) = compose(g, h) {
                    table.push((g.name.clone(), h.name.clone(), gh));
                }
            }
        }
        let inverses: Vec<_> = morphisms.iter().map(|g| (g.name.clone(), inverse(g))).collect();
        FiniteGroupoid::new(objects, morphisms, &table, &inverses).expect("well-formed builtin")
    }

    /// A finite group as a one-object groupoid. `names[0]` is the identity,
    /// `product(i, j)` the index of `names[i] ∘ names[j]`.
    pub fn from_group(names: Vec<String>, product: impl Fn(usize, usize) -> usize) -> FiniteGroupoid {
        let object = "*".to_string();
        let morphisms: Vec<Morphism> =
            names.iter().map(|n| Morphism::new(n.clone(), object.clone(), object.clone())).collect();
        let pos = |m: &Morphism| names.iter().position(|n| *n == m.name).expect("known name");
        let inverse_of = |i: usize| (0..names.len()).find(|&j| product(i, j) == 0).expect("group inverse");
        FiniteGroupoid::from_parts(
            vec![object.clone()],
            morphisms,
            |g, h| Some(names[product(pos(g), pos(h))].clone()),
            |g| names[inverse_of(pos(g))].clone(),
        )
    }

    /// The cyclic group `C_n` as a one-object groupoid.
    pub fn cyclic(n: usize) -> FiniteGroupoid {
        assert!(n > 0, "cyclic group of order zero");
        let width = (n - 1).to_string().len();
        let names = (0..n).map(|i| format!("g{i:0width$}")).collect();
        FiniteGroupoid::from_group(names, |i, j| (i + j) % n)
    }

    /// The symmetric group on `n` letters as a one-object groupoid, with
    /// `(σ ∘ τ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> FiniteGroupoid {
        let mut current: Vec<usize> = (0..n).collect();
        let mut all = Vec::new();
        permutations(n, &mut current, 0, &mut all);
        all.sort();
        let name = |p: &[usize]| format!("s{}", p.iter().map(|x| x.to_string()).collect::<String>());
        let names: Vec<String> = all.iter().map(|p| name(p)).collect();
        FiniteGroupoid::from_group(names, |i, j| {
            let composed: Vec<usize> = (0..n).map(|x| all[i][all[j][x]]).collect();
            all.iter().position(|p| *p == composed).expect("closed under composition")
        })
    }

    /// The pair groupoid on `n` objects: exactly one morphism `m_t_s: s → t`
    /// for every ordered pair of objects.
    pub fn pair(n: usize) -> FiniteGroupoid {
        let width = n.saturating_sub(1).to_string().len();
        let obj = |i: usize| format!("o{i:0width$}");
        let mor = |t: usize, s: usize| format!("m_{t:0width$}_{s:0width$}");
        let objects: Vec<String> = (0..n).map(obj).collect();
        let mut morphisms = Vec::new();
        for t in 0..n {
            for s in 0..n {
                morphisms.push(Morphism::new(mor(t, s), obj(s), obj(t)));
            }
        }
        let idx = |label: &str| objects.iter().position(|o| o == label).expect("known object");
        FiniteGroupoid::from_parts(
            objects.clone(),
            morphisms,
            |g, h| (g.source == h.target).then(|| mor(idx(&g.target), idx(&h.source))),
            |g| mor(idx(&g.source), idx(&g.target)),
        )
    }

    /// Disjoint union; labels are prefixed with `0.` and `1.`.
    pub fn disjoint_union(a: &FiniteGroupoid, b: &FiniteGroupoid) -> FiniteGroupoid {
        let mut objects = Vec::new();
        let mut morphisms = Vec::new();
        let mut compose = Vec::new();
        let mut inverses = Vec::new();
        for (tag, g) in [("0.", a), ("1.", b)] {
            let pre = |s: &str| format!("{tag}{s}");
            objects.extend(g.objects.iter().map(|o| pre(o)));
            morphisms.extend(g.morphisms.iter().map(|m| Morphism::new(pre(&m.name), pre(&m.source), pre(&m.target))));
            compose.extend(g.compose_table().into_iter().map(|(x, y, z)| (pre(&x), pre(&y), pre(&z))));
            inverses.extend(g.inverse_table().into_iter().map(|(x, y)| (pre(&x), pre(&y))));
        }
        FiniteGroupoid::new(objects, morphisms, &compose, &inverses).expect("well-formed union")
    }

    /// The trivial one-object groupoid.
    pub fn point() -> FiniteGroupoid {
        FiniteGroupoid::cyclic(1)
    }
}

fn permutations(n: usize, current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == n {
        out.push(current.clone());
        return;
    }
    for i in k..n {
        current.swap(k, i);
        permutations(n, current, k + 1, out);
        current.swap(k, i);
    }
}

/// The named groupoids used throughout the test corpus.
pub fn builtin_groupoids() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![
        ("C2", FiniteGroupoid::cyclic(2)),
        ("C3", FiniteGroupoid::cyclic(3)),
        ("S3", FiniteGroupoid::symmetric(3)),
        ("pair2", FiniteGroupoid::pair(2)),
        ("pair3", FiniteGroupoid::pair(3)),
        ("C2+point", FiniteGroupoid::disjoint_union(&FiniteGroupoid::cyclic(2), &FiniteGroupoid::point())),
    ]
}

/// Checks the composition domain and endpoints, associativity, identities
/// and inverses on all composable tuples.
pub fn validate_groupoid(g: &FiniteGroupoid) -> AxiomReport {
    let n = g.len();
    let mut report = AxiomReport::new();
    let domain_ok = |a: usize, b: usize| g.compose(a, b).is_some() == (g.source(a) == g.target(b));
    report.push(Check::from_bool(
        "composition_domain",
        tuples(&[n, n]).all(|t| domain_ok(t[0], t[1])),
        || Witness::at(tuples(&[n, n]).find(|t| !domain_ok(t[0], t[1])).unwrap_or_default()),
    ));
    let endpoints_ok = |a: usize, b: usize| match g.compose(a, b) {
        Some(c) => g.source(c) == g.source(b) && g.target(c) == g.target(a),
        None => true,
    };
    report.push(Check::from_bool(
        "composition_endpoints",
        tuples(&[n, n]).all(|t| endpoints_ok(t[0], t[1])),
        || Witness::at(tuples(&[n, n]).find(|t| !endpoints_ok(t[0], t[1])).unwrap_or_default()),
    ));
    let assoc_ok = |a: usize, b: usize, c: usize| {
        let left = g.compose(a, b).and_then(|ab| g.compose(ab, c));
        let right = g.compose(b, c).and_then(|bc| g.compose(a, bc));
        if g.source(a) == g.target(b) && g.source(b) == g.target(c) {
            left.is_some() && left == right
        } else {
            true
        }
    };
    report.push(Check::from_bool(
        "associativity",
        tuples(&[n, n, n]).all(|t| assoc_ok(t[0], t[1], t[2])),
        || Witness::at(tuples(&[n, n, n]).find(|t| !assoc_ok(t[0], t[1], t[2])).unwrap_or_default()),
    ));
    let objects = g.objects().len();
    report.push(Check::from_bool(
        "identities",
        (0..objects).all(|x| g.identity(x).is_some()),
        || Witness::at(vec![(0..objects).find(|&x| g.identity(x).is_none()).unwrap_or_default()]),
    ));
    let inverse_ok = |a: usize| match g.inverse(a) {
        Some(b) => {
            g.compose(a, b).is_some_and(|c| Some(c) == g.identity(g.target(a)))
                && g.compose(b, a).is_some_and(|c| Some(c) == g.identity(g.source(a)))
        }
        None => false,
    };
    report.push(Check::from_bool("inverses", (0..n).all(inverse_ok), || {
        Witness::at(vec![(0..n).find(|&a| !inverse_ok(a)).unwrap_or_default()])
    }));
    report
}

fn checked(p: WeakHopfPresentation) -> Result<WeakHopfPresentation> {
    let report = verify_weak_hopf(&p);
    for c in report.checks {
        into_error(c)?;
    }
    Ok(p)
}

/// The groupoid algebra `kG`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`, and
/// unit the sum of the identity morphisms.
pub fn groupoid_algebra(g: &FiniteGroupoid, field: Field) -> Result<WeakHopfPresentation> {
    require("groupoid_algebra", &validate_groupoid(g))?;
    let n = g.len();
    let mut unit = vector::zeros(field, n);
    for x in 0..g.objects().len() {
        unit[g.identity(x).expect("validated")] = field.one();
    }
    let algebra = AlgebraPresentation::from_products(field, n, unit, |a, b| match g.compose(a, b) {
        Some(c) => vector::unit(field, n, c),
        None => vector::zeros(field, n),
    })?;
    let coalgebra = CoalgebraPresentation::from_coproducts(field, n, vec![field.one(); n], |k| {
        vector::unit(field, n * n, k * n + k)
    })?;
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        antipode[(g.inverse(a).expect("validated"), a)] = field.one();
    }
    checked(WeakHopfPresentation::new(algebra, coalgebra, antipode)?)
}

/// `(kG)*` built directly on the idempotents `p_g`: `p_g p_h = δ_{g,h} p_g`,
/// `Δ(p_g) = Σ_{uv=g} p_u ⊗ p_v`, `ε(p_g) = 1` iff `g` is an identity, and
/// `S(p_g) = p_{g⁻¹}`.
pub fn groupoid_dual_direct(g: &FiniteGroupoid, field: Field) -> Result<WeakHopfPresentation> {
    require("groupoid_dual_direct", &validate_groupoid(g))?;
    let n = g.len();
    let algebra = AlgebraPresentation::from_products(field, n, vec![field.one(); n], |a, b| {
        if a == b {
            vector::unit(field, n, a)
        } else {
            vector::zeros(field, n)
        }
    })?;
    let counit = (0..n).map(|a| if g.is_identity(a) { field.one() } else { field.zero() }).collect();
    let coalgebra = CoalgebraPresentation::from_coproducts(field, n, counit, |k| {
        let mut d = vector::zeros(field, n * n);
        for u in 0..n {
            for v in 0..n {
                if g.compose(u, v) == Some(k) {
                    d[u * n + v] = field.one();
                }
            }
        }
        d
    })?;
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        antipode[(g.inverse(a).expect("validated"), a)] = field.one();
    }
    checked(WeakHopfPresentation::new(algebra, coalgebra, antipode)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for (name, g) in builtin_groupoids() {
            assert!(validate_groupoid(&g).passed(), "{name}");
        }
        assert!(validate_groupoid(&FiniteGroupoid::point()).passed());
    }

    #[test]
    fn pair_groupoid_shape() {
        let g = FiniteGroupoid::pair(2);
        assert_eq!(g.len(), 4);
        let names: Vec<&str> = g.morphisms().iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, ["m_0_0", "m_1_0", "m_0_1", "m_1_1"]);
        assert!(g.is_identity(0) && g.is_identity(3));
        assert_eq!(g.compose(1, 2), Some(3));
        assert_eq!(g.compose(1, 1), None);
    }

    #[test]
    fn corrupted_inverse_is_reported() {
        let g = FiniteGroupoid::pair(2);
        let a = g.index_of("m_1_0").unwrap();
        let bad = g.with_inverse(a, a);
        let report = validate_groupoid(&bad);
        let check = report.get("inverses").unwrap();
        assert!(!check.passed);
        assert_eq!(check.witness.as_ref().unwrap().indices, vec![a]);
        assert!(groupoid_algebra(&bad, Field::Rationals).is_err());
    }

    #[test]
    fn symmetric_group_order() {
        let s3 = FiniteGroupoid::symmetric(3);
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.morphisms()[0].name, "s012");
        // non-abelian
        assert!((0..6).any(|i| (0..6).any(|j| s3.compose(i, j) != s3.compose(j, i))));
    }

    #[test]
    fn unknown_labels_rejected() {
        let r = FiniteGroupoid::new(
            vec!["x".into()],
            vec![Morphism::new("e", "x", "y")],
            &[],
            &[],
        );
        assert!(r.is_err());
    }
}
