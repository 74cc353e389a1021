//! Tensor products, flatness and the category of points.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::enumeration::enumerate_msets_capped;
use crate::error::MSetError;
use crate::hom::{hom_set_capped, is_isomorphic};
use crate::left::{BiSet, LeftMSet};
use crate::monoid::Monoid;
use crate::mset::{same_monoid, MSetMorphism, RightMSet};
use crate::partition::{Partition, UnionFind};
use crate::preservation::{preservation_check, Construct, Functor, InstancePool, Verdict};

/// `A ⊗_M B`: the quotient of `A × B` by `(a·m, b) ~ (a, m·b)`.
///
/// The pair `(a, b)` has index `a·|B| + b` in [`classes`](Self::classes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorResult {
    left_size: usize,
    right_size: usize,
    classes: Partition,
    representatives: Vec<(usize, usize)>,
    /// The induced right action when `B` carries one.
    pub right_action: Option<RightMSet>,
}

impl TensorResult {
    pub fn count(&self) -> usize {
        self.classes.count()
    }

    pub fn classes(&self) -> &Partition {
        &self.classes
    }

    /// The class of `a ⊗ b`.
    #[inline]
    pub fn class_of(&self, a: usize, b: usize) -> usize {
        self.classes.class_of(a * self.right_size + b)
    }

    /// The first pair (in index order) of class `c`.
    pub fn representative(&self, c: usize) -> (usize, usize) {
        self.representatives[c]
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }
}

/// `A ⊗_M B` for a right `M`-set `A` and a left `M`-set `B`.
pub fn tensor(a: &RightMSet, b: &LeftMSet) -> Result<TensorResult, MSetError> {
    same_monoid(a.monoid(), b.monoid())?;
    let (na, nb) = (a.size(), b.size());
    let mut uf = UnionFind::new(na * nb);
    for x in 0..na {
        for m in a.monoid().elements() {
            let xm = a.act(x, m);
            for y in 0..nb {
                uf.union(xm * nb + y, x * nb + b.act(m, y));
            }
        }
    }
    let classes = uf.into_partition();
    let mut representatives = vec![(usize::MAX, 0); classes.count()];
    for i in (0..na * nb).rev() {
        representatives[classes.class_of(i)] = (i / nb, i % nb);
    }
    Ok(TensorResult {
        left_size: na,
        right_size: nb,
        classes,
        representatives,
        right_action: None,
    })
}

/// `A ⊗_M B` with its right `N`-action `(a ⊗ b)·n = a ⊗ (b·n)`.
pub fn tensor_biset(a: &RightMSet, b: &BiSet) -> Result<TensorResult, MSetError> {
    let mut t = tensor(a, b.left())?;
    let n = b.right().monoid();
    let mut action = Vec::with_capacity(t.count() * n.order());
    for c in 0..t.count() {
        let (x, y) = t.representative(c);
        action.extend(n.elements().map(|k| t.class_of(x, b.right().act(y, k))));
    }
    t.right_action = Some(RightMSet::from_action_unchecked(
        n.clone(),
        t.count(),
        action,
    ));
    Ok(t)
}

/// `Hom_N(B, X)` as a right `M`-set under `(φ·m)(b) = φ(m·b)`, with its
/// elements listed in sorted order.
pub fn hom_from_biset(
    b: &BiSet,
    x: &RightMSet,
    cap: usize,
) -> Result<(RightMSet, Vec<MSetMorphism>), MSetError> {
    let homs = hom_set_capped(b.right(), x, cap)?;
    let m = b.left().monoid();
    let mut action = Vec::with_capacity(homs.len() * m.order());
    for phi in &homs {
        for k in m.elements() {
            let moved: Vec<usize> = (0..b.size())
                .map(|y| phi.apply(b.left().act(k, y)))
                .collect();
            let idx = homs
                .binary_search_by(|h| h.map().cmp(&moved))
                .expect("precomposition with a left action is N-equivariant");
            action.push(idx);
        }
    }
    Ok((
        RightMSet::from_action_unchecked(m.clone(), homs.len(), action),
        homs,
    ))
}

/// Outcome of a tensor-hom adjunction check.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AdjunctionVerdict {
    pub samples: usize,
    /// Index of the first sample where the two transposes are not
    /// mutually inverse bijections.
    pub first_failure: Option<usize>,
}

impl AdjunctionVerdict {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `Hom_N(Y ⊗_M B, X) ≅ Hom_M(Y, Hom_N(B, X))` on each sample
/// `(Y, X)`, transposing every map both ways and back.
pub fn tensor_hom_adjunction_check(
    b: &BiSet,
    samples: &[(RightMSet, RightMSet)],
    cap: usize,
) -> Result<AdjunctionVerdict, MSetError> {
    for (i, (y, x)) in samples.iter().enumerate() {
        if !adjunction_holds(b, y, x, cap)? {
            return Ok(AdjunctionVerdict {
                samples: samples.len(),
                first_failure: Some(i),
            });
        }
    }
    Ok(AdjunctionVerdict {
        samples: samples.len(),
        first_failure: None,
    })
}

fn adjunction_holds(
    b: &BiSet,
    y: &RightMSet,
    x: &RightMSet,
    cap: usize,
) -> Result<bool, MSetError> {
    same_monoid(b.right().monoid(), x.monoid())?;
    let t = tensor_biset(y, b)?;
    let ty = t
        .right_action
        .as_ref()
        .expect("tensor_biset sets the action");
    let (hom_bx, phis) = hom_from_biset(b, x, cap)?;
    let left = hom_set_capped(ty, x, cap)?;
    let right = hom_set_capped(y, &hom_bx, cap)?;
    if left.len() != right.len() {
        return Ok(false);
    }
    // h ↦ (y ↦ (b ↦ h(y ⊗ b)))
    let forward = |h: &MSetMorphism| -> Option<Vec<usize>> {
        (0..y.size())
            .map(|e| {
                let phi: Vec<usize> = (0..b.size()).map(|c| h.apply(t.class_of(e, c))).collect();
                phis.binary_search_by(|p| p.map().cmp(&phi)).ok()
            })
            .collect()
    };
    // k ↦ (y ⊗ b ↦ k(y)(b)), defined only if constant on classes.
    let backward = |k: &MSetMorphism| -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; t.count()];
        for e in 0..y.size() {
            for c in 0..b.size() {
                let v = phis[k.apply(e)].apply(c);
                let slot = &mut out[t.class_of(e, c)];
                if *slot != usize::MAX && *slot != v {
                    return None;
                }
                *slot = v;
            }
        }
        Some(out)
    };
    for h in &left {
        let Some(k) = forward(h) else {
            return Ok(false);
        };
        let Ok(k) = MSetMorphism::new(y, &hom_bx, k) else {
            return Ok(false);
        };
        if backward(&k).as_deref() != Some(h.map()) {
            return Ok(false);
        }
    }
    for k in &right {
        let Some(h) = backward(k) else {
            return Ok(false);
        };
        let Ok(h) = MSetMorphism::new(ty, x, h) else {
            return Ok(false);
        };
        if forward(&h).as_deref() != Some(k.map()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evidence from the three filtering conditions on a left `M`-set.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FilteringWitnesses {
    pub nonempty: bool,
    /// `(b1, b2)` with no `c` such that both lie in `M·c`.
    pub connectivity_failure: Option<(usize, usize)>,
    /// `(m1, m2, b)` with `m1·b = m2·b` but no `h, c` with `m1·h = m2·h`
    /// and `h·c = b`.
    pub equalizing_failure: Option<(usize, usize, usize)>,
}

impl FilteringWitnesses {
    pub fn holds(&self) -> bool {
        self.nonempty && self.connectivity_failure.is_none() && self.equalizing_failure.is_none()
    }
}

/// Runs the filtering conditions on `b`.
pub fn filtering(b: &LeftMSet) -> FilteringWitnesses {
    let m = b.monoid();
    let size = b.size();
    let cyclic: Vec<Vec<bool>> = (0..size)
        .map(|c| {
            let mut hit = vec![false; size];
            for k in m.elements() {
                hit[b.act(k, c)] = true;
            }
            hit
        })
        .collect();
    let connectivity_failure = (0..size)
        .flat_map(|b1| (0..size).map(move |b2| (b1, b2)))
        .find(|&(b1, b2)| !cyclic.iter().any(|h| h[b1] && h[b2]));
    let mut equalizing_failure = None;
    'outer: for m1 in m.elements() {
        for m2 in m.elements() {
            let equalizing: Vec<usize> = m
                .elements()
                .filter(|&h| m.mul(m1, h) == m.mul(m2, h))
                .collect();
            for y in 0..size {
                if b.act(m1, y) == b.act(m2, y)
                    && !equalizing
                        .iter()
                        .any(|&h| (0..size).any(|c| b.act(h, c) == y))
                {
                    equalizing_failure = Some((m1, m2, y));
                    break 'outer;
                }
            }
        }
    }
    FilteringWitnesses {
        nonempty: size > 0,
        connectivity_failure,
        equalizing_failure,
    }
}

/// Whether `b` satisfies the filtering conditions, i.e. `− ⊗_M b` preserves
/// finite limits.
pub fn is_flat(b: &LeftMSet) -> bool {
    filtering(b).holds()
}

/// A disagreement between the functional and structural flatness tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ProfileIssue {
    /// A concrete instance fails although the structural rule says it
    /// cannot: an internal error.
    Disagreement(Construct),
    /// The structural rule fails but no instance in the stream shows it.
    Unconfirmed(Construct),
}

/// The preservation verdicts of `− ⊗ B` over the instance stream.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FunctionalVerdicts {
    pub mono: Verdict,
    pub terminal: Verdict,
    pub product: Verdict,
    pub power: Verdict,
    pub equalizer: Verdict,
    pub pullback: Verdict,
}

/// The flatness notions for one left `M`-set.
///
/// `mono_flat`, `fin_product_flat`, `product_flat_bounded` and
/// `equalizer_flat` come from the instance stream. `pullback_flat` and `flat`
/// are structural (every component flat, resp. the filtering conditions) and
/// are cross-checked against the stream in `issues`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FlatnessProfile {
    pub indecomposable: bool,
    pub mono_flat: bool,
    pub fin_product_flat: bool,
    /// Products of up to four factors and `M^{|M|}`.
    pub product_flat_bounded: bool,
    pub equalizer_flat: bool,
    pub pullback_flat: bool,
    pub flat: bool,
    pub projective: bool,
    pub filtering_witnesses: FilteringWitnesses,
    pub functional: FunctionalVerdicts,
    pub issues: Vec<ProfileIssue>,
}

/// Decides every flatness notion for `b`, drawing instances from `pool`.
///
/// The pullback stream is read together with the equalizer stream, since an
/// equalizer of `f, g : X → Y` is the pullback of `⟨f, g⟩` along the
/// diagonal of `Y`.
pub fn flatness_profile(b: &LeftMSet, pool: &InstancePool) -> Result<FlatnessProfile, MSetError> {
    same_monoid(b.monoid(), &pool.monoid)?;
    let functor = Functor::Tensor(b);
    let check = |c| preservation_check(functor, c, pool);
    let functional = FunctionalVerdicts {
        mono: check(Construct::Mono)?,
        terminal: check(Construct::Terminal)?,
        product: check(Construct::Product)?,
        power: check(Construct::Power)?,
        equalizer: check(Construct::Equalizer)?,
        pullback: check(Construct::Pullback)?,
    };
    let filtering_witnesses = filtering(b);
    let indecomposable = b.is_indecomposable();
    let components_flat = b.decompose().iter().all(is_flat);
    let flat = filtering_witnesses.holds();
    let projective = b.is_projective();

    let fin_product_flat = functional.terminal.holds && functional.product.holds;
    let product_flat_bounded = fin_product_flat && functional.power.holds;
    let pullback_functional = functional.pullback.holds && functional.equalizer.holds;
    let flat_functional = pullback_functional && functional.terminal.holds;

    let mut issues = Vec::new();
    let mut compare = |construct, functional: bool, structural: bool| match (functional, structural)
    {
        (false, true) => issues.push(ProfileIssue::Disagreement(construct)),
        (true, false) => issues.push(ProfileIssue::Unconfirmed(construct)),
        _ => {}
    };
    compare(Construct::Pullback, pullback_functional, components_flat);
    compare(Construct::Terminal, flat_functional, flat);
    if flat != (indecomposable && components_flat) {
        issues.push(ProfileIssue::Disagreement(Construct::Terminal));
    }
    // An indecomposable projective `Me` makes `− ⊗ B` evaluation at `e`,
    // which preserves every limit.
    if indecomposable && projective && !product_flat_bounded {
        issues.push(ProfileIssue::Disagreement(Construct::Power));
    }

    Ok(FlatnessProfile {
        indecomposable,
        mono_flat: functional.mono.holds,
        fin_product_flat,
        product_flat_bounded,
        equalizer_flat: functional.equalizer.holds,
        pullback_flat: components_flat,
        flat,
        projective,
        filtering_witnesses,
        functional,
        issues,
    })
}

/// Flat left `M`-sets up to isomorphism and size bound, with all maps
/// between them.
#[derive(Debug, Clone)]
pub struct PointsCategory {
    pub monoid: Arc<Monoid>,
    pub bound: usize,
    pub objects: Vec<LeftMSet>,
    /// `homs[i][j]` lists the maps from object `i` to object `j`.
    pub homs: Vec<Vec<Vec<MSetMorphism>>>,
    pub initial: Option<usize>,
    pub terminal: Option<usize>,
    /// The points `Me`, one per isomorphism class, with the idempotents
    /// giving it.
    pub essential: Vec<EssentialPoint>,
}

#[derive(Debug, Clone)]
pub struct EssentialPoint {
    pub idempotents: Vec<usize>,
    pub set: LeftMSet,
    /// Index into `objects` when `Me` is within the bound.
    pub object: Option<usize>,
}

impl PointsCategory {
    pub fn hom_count(&self, i: usize, j: usize) -> usize {
        self.homs[i][j].len()
    }
}

/// Enumerates flat left `M`-sets of size `1..=bound` and the maps between them.
pub fn enumerate_points(
    monoid: &Arc<Monoid>,
    bound: usize,
    hom_cap: usize,
) -> Result<PointsCategory, MSetError> {
    let op = Arc::new(monoid.opposite());
    let mut objects = Vec::new();
    for k in 1..=bound {
        for inner in enumerate_msets_capped(&op, k, bound)? {
            let left = LeftMSet::from_opposite(monoid.clone(), inner)?;
            if is_flat(&left) {
                objects.push(left);
            }
        }
    }
    let mut homs = Vec::with_capacity(objects.len());
    for x in &objects {
        let mut row = Vec::with_capacity(objects.len());
        for y in &objects {
            row.push(hom_set_capped(x.as_right(), y.as_right(), hom_cap)?);
        }
        homs.push(row);
    }
    let k = objects.len();
    let initial = (0..k).find(|&i| (0..k).all(|j| homs[i][j].len() == 1));
    let terminal = (0..k).find(|&j| (0..k).all(|i| homs[i][j].len() == 1));

    let mut essential: Vec<EssentialPoint> = Vec::new();
    for e in monoid.idempotents() {
        let set = LeftMSet::principal(monoid, e);
        if let Some(p) = essential
            .iter_mut()
            .find(|p| is_isomorphic(p.set.as_right(), set.as_right()))
        {
            p.idempotents.push(e);
            continue;
        }
        let object = objects
            .iter()
            .position(|o| is_isomorphic(o.as_right(), set.as_right()));
        essential.push(EssentialPoint {
            idempotents: vec![e],
            set,
            object,
        });
    }
    Ok(PointsCategory {
        monoid: monoid.clone(),
        bound,
        objects,
        homs,
        initial,
        terminal,
        essential,
    })
}
