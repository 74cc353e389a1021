//! The subobject classifier, exponentials, and the comparison maps `α`, `θ`, `χ`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::MSetError;
use crate::hom::{hom_set_capped, DEFAULT_HOM_CAP};
use crate::monoid::Monoid;
use crate::mset::{product, same_monoid, MSetMorphism, RightMSet};

/// Orders up to which `Ω` is found by testing every subset of `M`.
pub const SUBSET_SCAN_LIMIT: usize = 12;

/// Largest monoid order whose ideals fit the bitset representation.
pub const MAX_OMEGA_ORDER: usize = 64;

/// The right ideals of `M` under the inverse-image action
/// `I·m = {m' : m·m' ∈ I}`.
///
/// Ideals are bitsets (bit `a` set iff `a ∈ I`) sorted by value, so the
/// empty ideal is element 0 and `M` itself is the last element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubobjectClassifier {
    pub omega: RightMSet,
    pub ideals: Vec<u64>,
    pub top: usize,
    pub empty_ideal: usize,
}

fn is_right_ideal(m: &Monoid, bits: u64) -> bool {
    m.elements()
        .filter(|&a| bits >> a & 1 == 1)
        .all(|a| m.row(a).iter().all(|&b| bits >> b & 1 == 1))
}

fn ideal_bits(m: &Monoid, a: usize) -> u64 {
    m.row(a).iter().fold(0, |acc, &b| acc | 1 << b)
}

/// Every right ideal of `M`, sorted by bitset value.
pub fn right_ideals(m: &Monoid) -> Result<Vec<u64>, MSetError> {
    let n = m.order();
    if n > MAX_OMEGA_ORDER {
        return Err(MSetError::CapExceeded {
            what: "monoid elements for the ideal lattice",
            cap: MAX_OMEGA_ORDER,
        });
    }
    let mut ideals: Vec<u64> = if n <= SUBSET_SCAN_LIMIT {
        (0u64..1 << n)
            .filter(|&bits| is_right_ideal(m, bits))
            .collect()
    } else {
        // Every ideal is the union of the principal ideals of its members.
        let principals: Vec<u64> = m.elements().map(|a| ideal_bits(m, a)).collect();
        let mut all = alloc::collections::BTreeSet::from([0u64]);
        for p in principals {
            let grown: Vec<u64> = all.iter().map(|i| i | p).collect();
            all.extend(grown);
        }
        all.into_iter().collect()
    };
    ideals.sort_unstable();
    Ok(ideals)
}

impl SubobjectClassifier {
    pub fn new(monoid: &Arc<Monoid>) -> Result<Self, MSetError> {
        let m = &**monoid;
        let ideals = right_ideals(m)?;
        let n = m.order();
        let mut action = Vec::with_capacity(ideals.len() * n);
        for &i in &ideals {
            for a in m.elements() {
                let pre = m
                    .elements()
                    .filter(|&b| i >> m.mul(a, b) & 1 == 1)
                    .fold(0u64, |acc, b| acc | 1 << b);
                action.push(
                    ideals
                        .binary_search(&pre)
                        .expect("inverse images of ideals are ideals"),
                );
            }
        }
        let omega = RightMSet::new(monoid.clone(), ideals.len(), action)?;
        Ok(Self {
            top: ideals.len() - 1,
            empty_ideal: 0,
            omega,
            ideals,
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, bits: u64) -> Option<usize> {
        self.ideals.binary_search(&bits).ok()
    }

    /// Members of the ideal with the given index.
    pub fn members(&self, index: usize) -> Vec<usize> {
        let bits = self.ideals[index];
        (0..self.omega.monoid().order())
            .filter(|&a| bits >> a & 1 == 1)
            .collect()
    }

    /// The classifying map `A → Ω` of a sub-`M`-set: `a ↦ {m : a·m ∈ sub}`.
    pub fn classify(&self, a: &RightMSet, sub: &[usize]) -> Result<MSetMorphism, MSetError> {
        same_monoid(a.monoid(), self.omega.monoid())?;
        let mut member = vec![false; a.size()];
        for &x in sub {
            a.check_element(x)?;
            member[x] = true;
        }
        if !a.is_closed(&member) {
            return Err(MSetError::NotSubMSet);
        }
        let map = (0..a.size())
            .map(|x| {
                let bits = a
                    .row(x)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| member[y])
                    .fold(0u64, |acc, (m, _)| acc | 1 << m);
                self.index_of(bits)
                    .expect("classifying sets are right ideals")
            })
            .collect();
        Ok(MSetMorphism::from_map_unchecked(map))
    }

    /// The elements sent to the top ideal.
    pub fn pullback_of_top(
        &self,
        a: &RightMSet,
        s: &MSetMorphism,
    ) -> Result<Vec<usize>, MSetError> {
        if s.source_size() != a.size() || s.map().iter().any(|&i| i >= self.len()) {
            return Err(MSetError::EndpointMismatch);
        }
        Ok((0..a.size()).filter(|&x| s.apply(x) == self.top).collect())
    }
}

/// `Ω` for `M`.
pub fn omega(monoid: &Arc<Monoid>) -> Result<SubobjectClassifier, MSetError> {
    SubobjectClassifier::new(monoid)
}

/// The exponential `Q^P`: equivariant maps `M × P → Q` acted on by
/// `(f·m)(n, p) = f(m·n, p)`.
///
/// Each carrier element is an image array indexed by `n·|P| + p`; carrier
/// elements are sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exponential {
    pub base: RightMSet,
    pub target: RightMSet,
    pub object: RightMSet,
    pub maps: Vec<Vec<usize>>,
    /// `ev : Q^P × P → Q`, `(f, p) ↦ f(1, p)`, with `(f, p)` at `f·|P| + p`.
    pub evaluation: MSetMorphism,
}

impl Exponential {
    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.maps.binary_search_by(|f| f.as_slice().cmp(map)).ok()
    }

    /// `f(1, p)` for the carrier element `f`.
    pub fn evaluate(&self, f: usize, p: usize) -> usize {
        self.maps[f][self.object.monoid().identity() * self.base.size() + p]
    }
}

/// `Q^P`, with at most `cap` search nodes spent on the carrier.
pub fn exponential(p: &RightMSet, q: &RightMSet, cap: usize) -> Result<Exponential, MSetError> {
    same_monoid(p.monoid(), q.monoid())?;
    let monoid = p.monoid().clone();
    let mp = product(&RightMSet::regular(&monoid), p)?.object;
    let maps: Vec<Vec<usize>> = hom_set_capped(&mp, q, cap)?
        .into_iter()
        .map(MSetMorphism::into_map)
        .collect();
    let (n, ps) = (monoid.order(), p.size());
    let mut action = Vec::with_capacity(maps.len() * n);
    for f in &maps {
        for m in 0..n {
            let moved: Vec<usize> = (0..n * ps)
                .map(|np| f[monoid.mul(m, np / ps) * ps + np % ps])
                .collect();
            action.push(
                maps.binary_search(&moved)
                    .expect("the carrier is closed under the action"),
            );
        }
    }
    let object = RightMSet::from_action_unchecked(monoid.clone(), maps.len(), action);
    let e = monoid.identity();
    let evaluation = MSetMorphism::from_map_unchecked(
        (0..maps.len() * ps)
            .map(|fp| maps[fp / ps.max(1)][e * ps + fp % ps.max(1)])
            .collect(),
    );
    Ok(Exponential {
        base: p.clone(),
        target: q.clone(),
        object,
        maps,
        evaluation,
    })
}

/// `Q^P` with the default search cap.
pub fn exponential_default(p: &RightMSet, q: &RightMSet) -> Result<Exponential, MSetError> {
    exponential(p, q, DEFAULT_HOM_CAP)
}

/// The transpose `X → Q^P` of `f : X × P → Q`:
/// `x ↦ ((m, p) ↦ f(x·m, p))`.
pub fn exp_transpose(
    x: &RightMSet,
    exp: &Exponential,
    f: &MSetMorphism,
) -> Result<MSetMorphism, MSetError> {
    same_monoid(x.monoid(), exp.object.monoid())?;
    let ps = exp.base.size();
    if f.source_size() != x.size() * ps || f.map().iter().any(|&q| q >= exp.target.size()) {
        return Err(MSetError::ShapeMismatch("expected a map X × P → Q"));
    }
    let n = x.monoid().order();
    let mut out = Vec::with_capacity(x.size());
    for e in 0..x.size() {
        let g: Vec<usize> = (0..n * ps)
            .map(|mp| f.apply(x.act(e, mp / ps) * ps + mp % ps))
            .collect();
        out.push(
            exp.index_of(&g)
                .ok_or(MSetError::NotEquivariant { element: e, by: 0 })?,
        );
    }
    Ok(MSetMorphism::from_map_unchecked(out))
}

/// The inverse of [`exp_transpose`]: `(x, p) ↦ g(x)(1, p)`.
pub fn exp_untranspose(
    x: &RightMSet,
    exp: &Exponential,
    g: &MSetMorphism,
) -> Result<MSetMorphism, MSetError> {
    same_monoid(x.monoid(), exp.object.monoid())?;
    if g.source_size() != x.size() || g.map().iter().any(|&i| i >= exp.object.size()) {
        return Err(MSetError::ShapeMismatch("expected a map X → Q^P"));
    }
    let ps = exp.base.size();
    let map = (0..x.size() * ps)
        .map(|xp| exp.evaluate(g.apply(xp / ps), xp % ps))
        .collect();
    Ok(MSetMorphism::from_map_unchecked(map))
}

/// `α_X : Γ(X) → C(X)`, sending a fixed point to its component.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Alpha {
    pub fixed_points: Vec<usize>,
    /// Component id of each fixed point, in the order of `fixed_points`.
    pub map: Vec<usize>,
    pub components: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl Alpha {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn alpha(x: &RightMSet) -> Alpha {
    let fixed = x.fixed_points();
    let comps = x.connected_components();
    let map: Vec<usize> = fixed.iter().map(|&f| comps.class_of(f)).collect();
    let mut hit = vec![0usize; comps.count()];
    for &c in &map {
        hit[c] += 1;
    }
    Alpha {
        injective: hit.iter().all(|&h| h <= 1),
        surjective: hit.iter().all(|&h| h >= 1),
        fixed_points: fixed,
        map,
        components: comps.count(),
    }
}

/// `θ : C(Q^P) → C(Q)^{C(P)}`, `[g] ↦ ([p] ↦ [g(1, p)])`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Theta {
    /// One function per component of `Q^P`, as component ids of `Q`
    /// indexed by component ids of `P`.
    pub map: Vec<Vec<usize>>,
    pub codomain_size: Option<usize>,
    /// The formula gave the same function for every choice of representatives.
    pub well_defined: bool,
    pub mono: bool,
    pub iso: bool,
}

pub fn theta_for_c(p: &RightMSet, q: &RightMSet, cap: usize) -> Result<Theta, MSetError> {
    let exp = exponential(p, q, cap)?;
    let (cp, cq, ce) = (
        p.connected_components(),
        q.connected_components(),
        exp.object.connected_components(),
    );
    let mut map: Vec<Option<Vec<usize>>> = vec![None; ce.count()];
    let mut well_defined = true;
    for g in 0..exp.object.size() {
        let mut func: Vec<Option<usize>> = vec![None; cp.count()];
        for pe in 0..p.size() {
            let value = cq.class_of(exp.evaluate(g, pe));
            match func[cp.class_of(pe)] {
                None => func[cp.class_of(pe)] = Some(value),
                Some(v) if v != value => well_defined = false,
                _ => {}
            }
        }
        let func: Vec<usize> = func
            .into_iter()
            .map(|v| v.expect("components are nonempty"))
            .collect();
        let slot = &mut map[ce.class_of(g)];
        match slot {
            None => *slot = Some(func),
            Some(prev) if *prev != func => well_defined = false,
            _ => {}
        }
    }
    let map: Vec<Vec<usize>> = map
        .into_iter()
        .map(|f| f.expect("components are nonempty"))
        .collect();
    let mut distinct = map.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mono = distinct.len() == map.len();
    let codomain_size = u32::try_from(cp.count())
        .ok()
        .and_then(|k| cq.count().checked_pow(k));
    let iso = mono && codomain_size == Some(distinct.len());
    Ok(Theta {
        map,
        codomain_size,
        well_defined,
        mono,
        iso,
    })
}

/// `|C(Ω)|`, which is 1 or 2.
pub fn chi_for_c(monoid: &Arc<Monoid>) -> Result<usize, MSetError> {
    Ok(omega(monoid)?.omega.component_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::hom_count;
    use crate::named;

    #[test]
    fn omega_sizes() {
        let sizes: Vec<(usize, usize)> = [
            (named::t1(), 2),
            (named::c2(), 2),
            (named::cyclic(3), 2),
            (named::e2(), 3),
            (named::rz3(), 5),
        ]
        .into_iter()
        .map(|(m, expected)| (omega(&Arc::new(m)).unwrap().len(), expected))
        .collect();
        for (got, expected) in sizes {
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn omega_has_exactly_two_fixed_points() {
        for (_, m) in named::all() {
            let o = omega(&Arc::new(m)).unwrap();
            assert_eq!(o.omega.fixed_points(), vec![o.empty_ideal, o.top]);
        }
    }

    #[test]
    fn lattice_construction_matches_subset_scan() {
        for (_, m) in named::all() {
            let principals: Vec<u64> = m.elements().map(|a| ideal_bits(&m, a)).collect();
            let mut all = alloc::collections::BTreeSet::from([0u64]);
            for p in principals {
                let grown: Vec<u64> = all.iter().map(|i| i | p).collect();
                all.extend(grown);
            }
            let from_lattice: Vec<u64> = all.into_iter().collect();
            assert_eq!(from_lattice, right_ideals(&m).unwrap());
        }
        // Above the scan limit the lattice construction takes over.
        let big = Arc::new(named::cyclic(13));
        assert_eq!(omega(&big).unwrap().len(), 2);
    }

    #[test]
    fn classify_examples() {
        let rz3 = Arc::new(named::rz3());
        let o = omega(&rz3).unwrap();
        let a = RightMSet::regular(&rz3);
        let s = o.classify(&a, &[1]).unwrap();
        assert_eq!(o.members(s.apply(0)), vec![1]);
        assert_eq!(s.apply(1), o.top);
        assert_eq!(s.apply(2), o.empty_ideal);
        assert_eq!(o.pullback_of_top(&a, &s).unwrap(), vec![1]);
        let all = o.classify(&a, &[0, 1, 2]).unwrap();
        assert!(all.map().iter().all(|&i| i == o.top));
        let none = o.classify(&a, &[]).unwrap();
        assert!(none.map().iter().all(|&i| i == o.empty_ideal));
        assert_eq!(o.classify(&a, &[0]), Err(MSetError::NotSubMSet));
    }

    #[test]
    fn exponential_examples() {
        let t1 = Arc::new(named::t1());
        let p = RightMSet::trivial_action(&t1, 2);
        let q = RightMSet::trivial_action(&t1, 3);
        assert_eq!(exponential_default(&p, &q).unwrap().object.size(), 9);

        let c2 = Arc::new(named::c2());
        let reg = RightMSet::regular(&c2);
        let exp = exponential_default(&reg, &reg).unwrap();
        assert_eq!(exp.object.size(), 4);
        // ev is equivariant Q^P × P → Q.
        let ep = product(&exp.object, &reg).unwrap().object;
        assert!(MSetMorphism::new(&ep, &reg, exp.evaluation.map().to_vec()).is_ok());
        // The transpose of ev is the identity of Q^P.
        let t = exp_transpose(&exp.object, &exp, &exp.evaluation).unwrap();
        assert_eq!(t, MSetMorphism::identity(exp.object.size()));
    }

    #[test]
    fn exponential_adjunction_cardinality() {
        for (_, m) in named::all() {
            if m.order() > 4 {
                continue;
            }
            let m = Arc::new(m);
            let sets = [
                RightMSet::terminal(&m),
                RightMSet::trivial_action(&m, 2),
                RightMSet::regular(&m),
            ];
            for x in &sets {
                for p in &sets {
                    for q in &sets {
                        let exp = exponential_default(p, q).unwrap();
                        let xp = product(x, p).unwrap().object;
                        let left = hom_set_capped(&xp, q, DEFAULT_HOM_CAP).unwrap();
                        let right = hom_count(x, &exp.object, DEFAULT_HOM_CAP).unwrap();
                        assert_eq!(left.len(), right);
                        for f in &left {
                            let g = exp_transpose(x, &exp, f).unwrap();
                            assert!(MSetMorphism::new(x, &exp.object, g.map().to_vec()).is_ok());
                            assert_eq!(&exp_untranspose(x, &exp, &g).unwrap(), f);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_examples() {
        let end2 = Arc::new(named::end2());
        let a = alpha(&RightMSet::regular(&end2));
        assert!(a.surjective && !a.injective);
        let e2 = Arc::new(named::e2());
        let a = alpha(&omega(&e2).unwrap().omega);
        assert!(a.injective);
        let a = alpha(&RightMSet::trivial_action(&end2, 3));
        assert!(a.bijective());
    }

    #[test]
    fn theta_examples() {
        let t1 = Arc::new(named::t1());
        let th = theta_for_c(
            &RightMSet::trivial_action(&t1, 2),
            &RightMSet::trivial_action(&t1, 2),
            DEFAULT_HOM_CAP,
        )
        .unwrap();
        assert!(th.iso && th.well_defined);

        let c2 = Arc::new(named::c2());
        let reg = RightMSet::regular(&c2);
        let th = theta_for_c(&reg, &reg, DEFAULT_HOM_CAP).unwrap();
        assert!(th.well_defined);
        // M^M has the free orbit {(0,0), (1,1)} and the fixed points (0,1)
        // and (1,0); all three components go to the one function 1 → 1.
        assert_eq!(th.map.len(), 3);
        assert!(!th.mono);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_for_c(&Arc::new(named::e2())).unwrap(), 2);
        assert_eq!(chi_for_c(&Arc::new(named::rz3())).unwrap(), 1);
        assert_eq!(chi_for_c(&Arc::new(named::cyclic(3))).unwrap(), 2);
    }
}
