//! Evaluates each characterizing condition of the topos properties of
//! `Sets^M` independently and checks that they agree.
//!
//! A condition is either decidable from the multiplication table, or a
//! bounded check over the instance stream of a [`InstancePool`]. Bounded
//! conditions carry a polarity (which verdict is conclusive) and, where the
//! matching proof builds a counterexample from `M` itself, a description of
//! that guaranteed witness. A bounded condition that contradicts the
//! decidable verdict is *refuted* when its verdict is conclusive or its
//! witness is guaranteed, and *unconfirmed* otherwise.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::closure::{congruence_from_pairs, minimal_rf_generating_set, right_factorable_closure};
use crate::enumeration::canonical_form;
use crate::error::MSetError;
use crate::flatness::{enumerate_points, is_flat, PointsCategory};
use crate::hom::{hom_count, hom_set_capped};
use crate::left::LeftMSet;
use crate::monoid::Monoid;
use crate::mset::{coproduct, product, MSetMorphism, RightMSet};
use crate::partition::UnionFind;
use crate::preservation::{
    comparison_holds, identify_right_absorbing, preservation_check, Bounds, Construct, Functor,
    Instance, InstancePool, Witness,
};
use crate::topos::{alpha, chi_for_c, omega, right_ideals, theta_for_c};

/// Topos properties read off the multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PropertyProfile {
    /// `M` is a group: `Sets^M` is Boolean and atomic.
    pub boolean_atomic: bool,
    /// A right absorbing element exists.
    pub local: bool,
    /// A left absorbing element exists.
    pub colocal: bool,
    /// A zero element exists.
    pub bilocal: bool,
    /// Right Ore.
    pub de_morgan: bool,
    /// `M × M` is indecomposable.
    pub strongly_connected: bool,
    /// Right collapsible.
    pub totally_connected: bool,
    /// At least two right absorbing elements.
    pub sufficiently_cohesive: bool,
    /// `α` epic; the same condition as `local`.
    pub punctually_lc: bool,
    /// `α` monic; the same condition as `de_morgan`.
    pub copunctually_lc: bool,
    pub left_cancellative: bool,
    pub right_cancellative: bool,
    pub trivial: bool,
    pub minimal_rf_generating_size: usize,
}

fn regular_square_indecomposable(m: &Arc<Monoid>) -> bool {
    let reg = RightMSet::regular(m);
    product(&reg, &reg)
        .expect("same monoid")
        .object
        .is_indecomposable()
}

pub fn profile(monoid: &Arc<Monoid>) -> PropertyProfile {
    let local = !monoid.right_absorbing().is_empty();
    let de_morgan = monoid.is_right_ore();
    PropertyProfile {
        boolean_atomic: monoid.is_group(),
        local,
        colocal: !monoid.left_absorbing().is_empty(),
        bilocal: monoid.zero().is_some(),
        de_morgan,
        strongly_connected: regular_square_indecomposable(monoid),
        totally_connected: monoid.is_right_collapsible(),
        sufficiently_cohesive: monoid.right_absorbing().len() >= 2,
        punctually_lc: local,
        copunctually_lc: de_morgan,
        left_cancellative: monoid.is_left_cancellative(),
        right_cancellative: monoid.is_right_cancellative(),
        trivial: monoid.is_trivial(),
        minimal_rf_generating_size: minimal_rf_generating_set(monoid).len(),
    }
}

/// Names of the relations between profile flags that fail for `p`.
pub fn profile_violations(p: &PropertyProfile) -> Vec<&'static str> {
    let mut out = Vec::new();
    let mut require = |ok: bool, name| {
        if !ok {
            out.push(name);
        }
    };
    require(
        p.totally_connected == (p.de_morgan && p.strongly_connected),
        "totally_connected = de_morgan and strongly_connected",
    );
    require(
        p.bilocal == (p.local && p.colocal),
        "bilocal = local and colocal",
    );
    require(
        !p.local || p.strongly_connected,
        "local implies strongly_connected",
    );
    require(
        !p.sufficiently_cohesive || !p.bilocal,
        "sufficiently_cohesive excludes bilocal",
    );
    require(
        !p.boolean_atomic || p.de_morgan,
        "boolean_atomic implies de_morgan",
    );
    require(p.punctually_lc == p.local, "punctually_lc = local");
    require(
        p.copunctually_lc == p.de_morgan,
        "copunctually_lc = de_morgan",
    );
    out
}

/// Whether the flags computed on both sides swap under `M ↦ M^op`.
pub fn duality_holds(monoid: &Monoid) -> bool {
    let op = monoid.opposite();
    op.right_absorbing() == monoid.left_absorbing()
        && op.left_absorbing() == monoid.right_absorbing()
        && op.is_left_cancellative() == monoid.is_right_cancellative()
        && op.is_right_cancellative() == monoid.is_left_cancellative()
        && op.is_right_ore() == monoid.is_left_ore()
        && op.is_left_ore() == monoid.is_right_ore()
        && op.zero() == monoid.zero()
        && op.is_group() == monoid.is_group()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Theorem {
    Boolean,
    StronglyCompact,
    Local,
    DeMorgan,
    StronglyConnected,
    TotallyConnected,
    Colocal,
    Bilocal,
    Trivial,
    Cancellativity,
}

/// Which verdict of a bounded check is conclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Polarity {
    /// "For every instance": a failure is a counterexample.
    Universal,
    /// "Some instance": a success is a witness.
    Existential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Evidence {
    Decidable,
    Bounded {
        polarity: Polarity,
        /// The instance the proof provides when the property fails, if it
        /// lies inside the stream.
        guarantee: Option<&'static str>,
    },
}

const fn universal(guarantee: &'static str) -> Evidence {
    Evidence::Bounded {
        polarity: Polarity::Universal,
        guarantee: Some(guarantee),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Status {
    Agrees,
    /// Contradicts the decidable verdict with conclusive or guaranteed evidence.
    Refuted,
    /// Contradicts the decidable verdict, but only for lack of a witness
    /// within the bound.
    Unconfirmed,
}

/// Data that reproduces a condition's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ConditionWitness {
    Elements(Vec<usize>),
    /// Action rows of one `M`-set.
    Object(Vec<Vec<usize>>),
    /// Action rows of several `M`-sets, with maps between them.
    Diagram {
        objects: Vec<Vec<Vec<usize>>>,
        maps: Vec<Vec<usize>>,
    },
    Instance(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionResult {
    pub id: &'static str,
    pub evidence: Evidence,
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TheoremReport {
    pub theorem: Theorem,
    /// The verdict of the first decidable condition.
    pub verdict: bool,
    pub conditions: Vec<ConditionResult>,
    /// No condition is refuted.
    pub agreement: bool,
    pub bounds: Bounds,
}

impl TheoremReport {
    fn new(
        theorem: Theorem,
        bounds: Bounds,
        conditions: Vec<(&'static str, Evidence, bool, Option<ConditionWitness>)>,
    ) -> Self {
        let verdict = conditions
            .iter()
            .find(|c| c.1 == Evidence::Decidable)
            .map(|c| c.2)
            .expect("every theorem has a decidable condition");
        let conditions: Vec<ConditionResult> = conditions
            .into_iter()
            .map(|(id, evidence, holds, witness)| {
                let status = if holds == verdict {
                    Status::Agrees
                } else {
                    match evidence {
                        Evidence::Decidable => Status::Refuted,
                        Evidence::Bounded {
                            polarity,
                            guarantee,
                        } => {
                            let conclusive = match polarity {
                                Polarity::Universal => !holds,
                                Polarity::Existential => holds,
                            };
                            if conclusive || guarantee.is_some() {
                                Status::Refuted
                            } else {
                                Status::Unconfirmed
                            }
                        }
                    }
                };
                ConditionResult {
                    id,
                    evidence,
                    holds,
                    witness,
                    status,
                }
            })
            .collect();
        Self {
            theorem,
            verdict,
            agreement: conditions.iter().all(|c| c.status != Status::Refuted),
            conditions,
            bounds,
        }
    }

    pub fn condition(&self, id: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn refuted(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions
            .iter()
            .filter(|c| c.status == Status::Refuted)
    }

    pub fn unconfirmed(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions
            .iter()
            .filter(|c| c.status == Status::Unconfirmed)
    }
}

/// Everything the checks for one monoid share: the instance pool and the
/// flat left `M`-sets of size at most `|M|`.
#[derive(Debug, Clone)]
pub struct MonoidContext {
    pub monoid: Arc<Monoid>,
    pub pool: InstancePool,
    pub points: PointsCategory,
}

impl MonoidContext {
    pub fn new(monoid: Arc<Monoid>, bounds: Bounds) -> Result<Self, MSetError> {
        let pool = InstancePool::new(&monoid, bounds)?;
        let points = enumerate_points(&monoid, monoid.order(), bounds.hom_cap)?;
        Ok(Self {
            monoid,
            pool,
            points,
        })
    }

    fn bounds(&self) -> Bounds {
        self.pool.bounds
    }
}

type Found = (bool, Option<ConditionWitness>);

/// The first pooled object failing `ok`, as a witness.
fn every_object(ctx: &MonoidContext, ok: impl FnMut(&RightMSet) -> bool) -> Found {
    first_failure(ctx.pool.all(), ok)
}

fn first_failure<'a>(
    mut objects: impl Iterator<Item = &'a RightMSet>,
    mut ok: impl FnMut(&RightMSet) -> bool,
) -> Found {
    match objects.find(|x| !ok(x)) {
        Some(x) => (false, Some(ConditionWitness::Object(x.rows()))),
        None => (true, None),
    }
}

fn verdict_of(
    functor: Functor<'_>,
    construct: Construct,
    ctx: &MonoidContext,
) -> Result<Found, MSetError> {
    let v = preservation_check(functor, construct, &ctx.pool)?;
    Ok((v.holds, v.witness.map(ConditionWitness::Instance)))
}

fn elements(v: Option<(usize, usize)>) -> Option<ConditionWitness> {
    v.map(|(a, b)| ConditionWitness::Elements(vec![a, b]))
}

pub fn check_boolean(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let omega_len = omega(m)?.len();
    let complemented = first_failure(ctx.pool.subobject_hosts(), |x| {
        x.sub_msets(ctx.bounds().carrier_cap)
            .map(|subs| {
                subs.iter().all(|s| {
                    let mut rest = vec![true; x.size()];
                    for &e in s {
                        rest[e] = false;
                    }
                    x.is_closed(&rest)
                })
            })
            .unwrap_or(false)
    });
    Ok(TheoremReport::new(
        Theorem::Boolean,
        ctx.bounds(),
        vec![
            ("group", Evidence::Decidable, m.is_group(), None),
            (
                "omega_has_two_elements",
                Evidence::Decidable,
                omega_len == 2,
                None,
            ),
            (
                "subobjects_complemented",
                universal("a proper principal right ideal of M"),
                complemented.0,
                complemented.1,
            ),
        ],
    ))
}

/// `⟨S⟩⟩` agrees with the `~_S`-class of the identity for every nonempty
/// `S` with at most two elements; returns the first `S` where it does not.
pub fn closure_identity_failure(m: &Monoid) -> Option<Vec<usize>> {
    let mut seeds: Vec<Vec<usize>> = m.elements().map(|a| vec![a]).collect();
    for a in m.elements() {
        for b in a + 1..m.order() {
            seeds.push(vec![a, b]);
        }
    }
    seeds.into_iter().find(|s| {
        let closure = right_factorable_closure(m, s).expect("seed is nonempty and in range");
        let pairs: Vec<(usize, usize)> = s.iter().map(|&x| (x, m.identity())).collect();
        let cong = congruence_from_pairs(m, &pairs).expect("elements are in range");
        let class: Vec<usize> = m
            .elements()
            .filter(|&x| cong.class_of(x) == cong.class_of(m.identity()))
            .collect();
        closure != class
    })
}

pub fn check_strongly_compact(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let gens = minimal_rf_generating_set(m);
    let generated = !gens.is_empty()
        && right_factorable_closure(m, &gens)
            .map_err(|_| MSetError::MonoidMismatch)?
            .len()
            == m.order();
    let failure = closure_identity_failure(m);
    Ok(TheoremReport::new(
        Theorem::StronglyCompact,
        ctx.bounds(),
        vec![
            (
                "right_factorably_finitely_generated",
                Evidence::Decidable,
                generated,
                Some(ConditionWitness::Elements(gens)),
            ),
            (
                "closure_is_identity_class",
                Evidence::Decidable,
                failure.is_none(),
                failure.map(ConditionWitness::Elements),
            ),
        ],
    ))
}

pub fn check_local(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let no_fixed = "M has no fixed point when it has no right absorbing element";
    let fixed = every_object(ctx, |x| x.is_empty() || !x.fixed_points().is_empty());
    let epic = every_object(ctx, |x| alpha(x).surjective);
    let gamma_epi = verdict_of(Functor::Gamma, Construct::Epi, ctx)?;
    let initial = ctx.points.initial;
    Ok(TheoremReport::new(
        Theorem::Local,
        ctx.bounds(),
        vec![
            (
                "right_absorbing_element",
                Evidence::Decidable,
                !m.right_absorbing().is_empty(),
                Some(ConditionWitness::Elements(m.right_absorbing())),
            ),
            (
                "terminal_projective",
                Evidence::Decidable,
                RightMSet::terminal(m).is_projective(),
                None,
            ),
            (
                "every_nonempty_set_has_fixed_point",
                universal(no_fixed),
                fixed.0,
                fixed.1,
            ),
            ("alpha_epic", universal(no_fixed), epic.0, epic.1),
            (
                "gamma_preserves_epis",
                universal("the quotient map M → 1"),
                gamma_epi.0,
                gamma_epi.1,
            ),
            (
                "points_have_initial_object",
                Evidence::Bounded {
                    polarity: Polarity::Existential,
                    guarantee: Some("Me for a right absorbing e has at most |M| elements"),
                },
                initial.is_some(),
                initial.map(|i| ConditionWitness::Object(ctx.points.objects[i].rows())),
            ),
        ],
    ))
}

pub fn check_de_morgan(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let ideal_union = "the union m1·M ∪ m2·M of disjoint principal right ideals";
    let cap = ctx.bounds().carrier_cap;
    let mono = verdict_of(Functor::Components, Construct::Mono, ctx)?;
    let subs = first_failure(ctx.pool.subobject_hosts(), |x| {
        !x.is_indecomposable()
            || x.sub_msets(cap).is_ok_and(|subs| {
                subs.iter()
                    .all(|s| s.is_empty() || x.restrict(s).is_ok_and(|r| r.is_indecomposable()))
            })
    });
    let monic = every_object(ctx, |x| alpha(x).injective);
    Ok(TheoremReport::new(
        Theorem::DeMorgan,
        ctx.bounds(),
        vec![
            (
                "right_ore",
                Evidence::Decidable,
                m.is_right_ore(),
                elements(m.right_ore_failure()),
            ),
            (
                "c_omega_has_two_elements",
                Evidence::Decidable,
                chi_for_c(m)? == 2,
                None,
            ),
            ("c_preserves_monos", universal(ideal_union), mono.0, mono.1),
            (
                "subsets_of_indecomposables_indecomposable",
                universal(ideal_union),
                subs.0,
                subs.1,
            ),
            (
                "alpha_monic",
                universal("M with m1·M and m2·M each collapsed to a point"),
                monic.0,
                monic.1,
            ),
        ],
    ))
}

pub fn check_strongly_connected(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let b = ctx.bounds();
    let square = "M × M";
    let small = ctx.pool.small(b.pair);
    let mut products = (true, None);
    'outer: for &x in small.iter().chain(core::iter::once(&&ctx.pool.regular)) {
        for &y in small.iter().chain(core::iter::once(&&ctx.pool.regular)) {
            if x.is_indecomposable()
                && y.is_indecomposable()
                && !product(x, y)?.object.is_indecomposable()
            {
                products = (
                    false,
                    Some(ConditionWitness::Diagram {
                        objects: vec![x.rows(), y.rows()],
                        maps: vec![],
                    }),
                );
                break 'outer;
            }
        }
    }
    let c_products = verdict_of(Functor::Components, Construct::Product, ctx)?;
    let mut powers = (true, None);
    for &x in core::iter::once(&&ctx.pool.regular).chain(small.iter()) {
        let inst = Instance::Product {
            factors: vec![x, x],
        };
        if !comparison_holds(Functor::Components, &inst, b.carrier_cap)? {
            powers = (false, Some(ConditionWitness::Instance(inst.witness())));
            break;
        }
    }
    Ok(TheoremReport::new(
        Theorem::StronglyConnected,
        ctx.bounds(),
        vec![
            (
                "square_indecomposable",
                Evidence::Decidable,
                regular_square_indecomposable(m),
                None,
            ),
            (
                "products_of_indecomposables_indecomposable",
                universal(square),
                products.0,
                products.1,
            ),
            (
                "c_preserves_binary_products",
                universal(square),
                c_products.0,
                c_products.1,
            ),
            (
                "c_preserves_finite_powers",
                universal(square),
                powers.0,
                powers.1,
            ),
        ],
    ))
}

pub fn check_totally_connected(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let lm = "the left multiplications m1·, m2· : M → M";
    let eq = verdict_of(Functor::Components, Construct::Equalizer, ctx)?;
    let pb = verdict_of(Functor::Components, Construct::Pullback, ctx)?;
    let terminal = ctx.points.terminal;
    Ok(TheoremReport::new(
        Theorem::TotallyConnected,
        ctx.bounds(),
        vec![
            (
                "right_collapsible",
                Evidence::Decidable,
                m.is_right_collapsible(),
                elements(
                    m.elements()
                        .flat_map(|a| m.elements().map(move |b| (a, b)))
                        .find(|&(a, b)| m.collapsing_element(a, b).is_none()),
                ),
            ),
            (
                "terminal_left_set_flat",
                Evidence::Decidable,
                is_flat(&LeftMSet::terminal(m)),
                None,
            ),
            (
                "de_morgan_and_strongly_connected",
                Evidence::Decidable,
                m.is_right_ore() && regular_square_indecomposable(m),
                None,
            ),
            ("c_preserves_equalizers", universal(lm), eq.0, eq.1),
            ("c_preserves_pullbacks", universal(lm), pb.0, pb.1),
            (
                "points_have_terminal_object",
                Evidence::Bounded {
                    polarity: Polarity::Existential,
                    guarantee: Some("the one-element left M-set"),
                },
                terminal.is_some(),
                terminal.map(|i| ConditionWitness::Object(ctx.points.objects[i].rows())),
            ),
        ],
    ))
}

/// A nonempty right ideal of `M` contained in every other one and whose
/// only endomorphism is the identity, if one exists.
pub fn rigid_least_ideal(m: &Arc<Monoid>, cap: usize) -> Result<Option<Vec<usize>>, MSetError> {
    let ideals = right_ideals(m)?;
    let reg = RightMSet::regular(m);
    let Some(&least) = ideals
        .iter()
        .find(|&&i| i != 0 && ideals.iter().all(|&j| j == 0 || j & i == i))
    else {
        return Ok(None);
    };
    let members: Vec<usize> = m.elements().filter(|&x| least >> x & 1 == 1).collect();
    let sub = reg.restrict(&members)?;
    Ok((hom_count(&sub, &sub, cap)? == 1).then_some(members))
}

/// An `l` with `a ~ b ⇔ a·l = b·l` on every pooled object.
fn components_as_orbit_of(ctx: &MonoidContext) -> Option<usize> {
    ctx.monoid.elements().find(|&l| {
        ctx.pool.all().all(|x| {
            let comps = x.connected_components();
            (0..x.size()).all(|a| {
                (0..x.size()).all(|b| {
                    (comps.class_of(a) == comps.class_of(b)) == (x.act(a, l) == x.act(b, l))
                })
            })
        })
    })
}

pub fn check_colocal(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let b = ctx.bounds();
    let big = ctx
        .pool
        .big_power
        .as_ref()
        .ok_or(MSetError::BoundTooSmall("M^|M| exceeds the carrier cap"))?;
    let rigid = rigid_least_ideal(m, b.hom_cap)?;
    let ore = m.is_right_ore();
    let l = components_as_orbit_of(ctx);
    let powers = verdict_of(Functor::Components, Construct::Power, ctx)?;
    let essential = &ctx.points.essential;
    let mut terminal_essential = None;
    for (i, p) in essential.iter().enumerate() {
        let mut unique = true;
        for q in essential {
            unique &= hom_count(q.set.as_right(), p.set.as_right(), b.hom_cap)? == 1;
        }
        if unique {
            terminal_essential = Some(i);
            break;
        }
    }
    // Without the right Ore condition the finite power M^|M| can be
    // indecomposable with no left absorbing element (RZ3), so the power
    // conditions are read together with right Ore.
    let big_power = "M^|M|";
    Ok(TheoremReport::new(
        Theorem::Colocal,
        b,
        vec![
            (
                "left_absorbing_element",
                Evidence::Decidable,
                !m.left_absorbing().is_empty(),
                Some(ConditionWitness::Elements(m.left_absorbing())),
            ),
            (
                "rigid_least_right_ideal",
                Evidence::Decidable,
                rigid.is_some(),
                rigid.map(ConditionWitness::Elements),
            ),
            (
                "essential_points_have_terminal_object",
                Evidence::Decidable,
                terminal_essential.is_some(),
                terminal_essential.map(|i| ConditionWitness::Object(essential[i].set.rows())),
            ),
            (
                "right_ore_and_big_power_indecomposable",
                universal(big_power),
                ore && big.is_indecomposable(),
                None,
            ),
            (
                "components_are_orbits_of_one_element",
                universal("M itself forces l to be left absorbing"),
                l.is_some(),
                l.map(|l| ConditionWitness::Elements(vec![l])),
            ),
            (
                "right_ore_and_c_preserves_powers",
                universal(big_power),
                ore && powers.0,
                powers.1,
            ),
        ],
    ))
}

/// `Γ : Hom(X, Y) → Set(Γ X, Γ Y)` is onto for `x, y`; on failure returns
/// `false`.
fn gamma_full_on(x: &RightMSet, y: &RightMSet, cap: usize) -> Result<bool, MSetError> {
    let (fx, fy) = (x.fixed_points(), y.fixed_points());
    let Some(total) = u32::try_from(fx.len())
        .ok()
        .and_then(|k| fy.len().checked_pow(k))
    else {
        return Ok(false);
    };
    let mut index = vec![usize::MAX; y.size()];
    for (i, &f) in fy.iter().enumerate() {
        index[f] = i;
    }
    let mut images: Vec<Vec<usize>> = hom_set_capped(x, y, cap)?
        .iter()
        .map(|h| fx.iter().map(|&e| index[h.apply(e)]).collect())
        .collect();
    images.sort_unstable();
    images.dedup();
    Ok(images.len() == total)
}

pub fn check_bilocal(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let b = ctx.bounds();
    let p = &ctx.pool;
    let two = RightMSet::trivial_action(m, 2);
    let empty = RightMSet::empty(m);
    let mut full = (true, None);
    let small = p.small(b.pair);
    let sources = p
        .targeted
        .iter()
        .filter(|x| x.size() <= m.order())
        .chain(small.iter().copied());
    'outer: for x in sources {
        for y in [&empty, &two].into_iter().chain(small.iter().copied()) {
            if !gamma_full_on(x, y, b.hom_cap)? {
                full = (
                    false,
                    Some(ConditionWitness::Diagram {
                        objects: vec![x.rows(), y.rows()],
                        maps: vec![],
                    }),
                );
                break 'outer;
            }
        }
    }
    let iso = every_object(ctx, |x| alpha(x).bijective());
    Ok(TheoremReport::new(
        Theorem::Bilocal,
        b,
        vec![
            ("zero_element", Evidence::Decidable, m.zero().is_some(), None),
            (
                "local_and_colocal",
                Evidence::Decidable,
                !m.right_absorbing().is_empty() && !m.left_absorbing().is_empty(),
                None,
            ),
            (
                "local_and_c_preserves_monos",
                Evidence::Decidable,
                !m.right_absorbing().is_empty() && m.is_right_ore(),
                None,
            ),
            (
                "gamma_full",
                universal("the pairs (M, ∅) and (M, Δ(2)), and (Q, Δ(2)) for Q a quotient of M with two fixed points"),
                full.0,
                full.1,
            ),
            (
                "alpha_iso",
                universal("M, or a quotient of M with two fixed points in one component"),
                iso.0,
                iso.1,
            ),
        ],
    ))
}

/// Two copies of `M` glued along its right absorbing elements, with the two
/// inclusions; they agree on every fixed point of `M`.
pub fn doubled_regular(m: &Arc<Monoid>) -> (RightMSet, MSetMorphism, MSetMorphism) {
    let reg = RightMSet::regular(m);
    let sum = coproduct(&reg, &reg).expect("same monoid");
    let n = m.order();
    let mut uf = UnionFind::new(2 * n);
    for r in m.right_absorbing() {
        uf.union(r, n + r);
    }
    let (glued, classes) = sum
        .object
        .quotient(&uf.into_partition())
        .expect("right absorbing elements form a sub-M-set");
    let left = MSetMorphism::from_map_unchecked((0..n).map(|a| classes.class_of(a)).collect());
    let right = MSetMorphism::from_map_unchecked((0..n).map(|a| classes.class_of(n + a)).collect());
    (glued, left, right)
}

pub fn check_trivial(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let b = ctx.bounds();
    let p = &ctx.pool;
    let fixed_image = |h: &MSetMorphism, x: &RightMSet| -> Vec<usize> {
        x.fixed_points().iter().map(|&e| h.apply(e)).collect()
    };

    let (glued, i1, i2) = doubled_regular(m);
    let reg = &p.regular;
    let mut gamma_faithful = (true, None);
    if i1 != i2 && fixed_image(&i1, reg) == fixed_image(&i2, reg) {
        gamma_faithful = (
            false,
            Some(ConditionWitness::Diagram {
                objects: vec![reg.rows(), glued.rows()],
                maps: vec![i1.map().to_vec(), i2.map().to_vec()],
            }),
        );
    }
    let mut c_faithful = (true, None);
    let comps = reg.connected_components();
    let lambdas: Vec<MSetMorphism> = m.elements().map(|a| p.left_multiplication(a)).collect();
    if let Some(a) = (1..lambdas.len()).find(|&a| {
        lambdas[a] != lambdas[0]
            && (0..reg.size())
                .all(|x| comps.class_of(lambdas[a].apply(x)) == comps.class_of(lambdas[0].apply(x)))
    }) {
        c_faithful = (
            false,
            Some(ConditionWitness::Diagram {
                objects: vec![reg.rows()],
                maps: vec![lambdas[0].map().to_vec(), lambdas[a].map().to_vec()],
            }),
        );
    }
    let small = p.small(b.pair);
    for &x in &small {
        for &y in &small {
            if gamma_faithful.0 || c_faithful.0 {
                let homs = hom_set_capped(x, y, b.hom_cap)?;
                let cy = y.connected_components();
                for (i, f) in homs.iter().enumerate() {
                    for g in &homs[i + 1..] {
                        let diagram = || {
                            Some(ConditionWitness::Diagram {
                                objects: vec![x.rows(), y.rows()],
                                maps: vec![f.map().to_vec(), g.map().to_vec()],
                            })
                        };
                        if gamma_faithful.0 && fixed_image(f, x) == fixed_image(g, x) {
                            gamma_faithful = (false, diagram());
                        }
                        if c_faithful.0
                            && (0..x.size())
                                .all(|e| cy.class_of(f.apply(e)) == cy.class_of(g.apply(e)))
                        {
                            c_faithful = (false, diagram());
                        }
                    }
                }
            }
        }
    }
    let mut theta = (true, None);
    let mut pairs: Vec<(&RightMSet, &RightMSet)> = vec![(reg, reg)];
    let tiny = p.small(b.triple);
    for &x in &tiny {
        for &y in &tiny {
            pairs.push((x, y));
        }
    }
    for (x, y) in pairs {
        match theta_for_c(x, y, b.hom_cap) {
            Ok(t) if t.mono => {}
            Ok(_) => {
                theta = (
                    false,
                    Some(ConditionWitness::Diagram {
                        objects: vec![x.rows(), y.rows()],
                        maps: vec![],
                    }),
                );
                break;
            }
            Err(MSetError::CapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let x_r = identify_right_absorbing(m);
    let plus_one = coproduct(reg, &RightMSet::terminal(m))?.object;
    let mut reflects = (true, None);
    for x in [&x_r, &plus_one].into_iter().chain(p.all()) {
        if x.fixed_points().len() == 1 && x.size() != 1 {
            reflects = (false, Some(ConditionWitness::Object(x.rows())));
            break;
        }
    }
    Ok(TheoremReport::new(
        Theorem::Trivial,
        b,
        vec![
            ("trivial_monoid", Evidence::Decidable, m.is_trivial(), None),
            (
                "gamma_faithful",
                universal(
                    "the two inclusions of M into two copies of M glued along its fixed points",
                ),
                gamma_faithful.0,
                gamma_faithful.1,
            ),
            (
                "c_faithful",
                universal("two distinct left multiplications on M"),
                c_faithful.0,
                c_faithful.1,
            ),
            (
                "c_sub_cartesian_closed",
                Evidence::Bounded {
                    polarity: Polarity::Universal,
                    guarantee: None,
                },
                theta.0,
                theta.1,
            ),
            (
                "gamma_reflects_terminal",
                universal("M with its right absorbing elements identified, or M ⊔ 1"),
                reflects.0,
                reflects.1,
            ),
        ],
    ))
}

pub fn check_cancellativity(ctx: &MonoidContext) -> Result<TheoremReport, MSetError> {
    let m = &ctx.monoid;
    let reg = &ctx.pool.regular;
    let decidable_object = (0..reg.size()).all(|a| {
        (0..reg.size()).all(|b| a == b || m.elements().all(|k| reg.act(a, k) != reg.act(b, k)))
    });
    Ok(TheoremReport::new(
        Theorem::Cancellativity,
        ctx.bounds(),
        vec![
            (
                "right_cancellative",
                Evidence::Decidable,
                m.is_right_cancellative(),
                None,
            ),
            (
                "regular_set_decidable",
                Evidence::Decidable,
                decidable_object,
                None,
            ),
            (
                "opposite_left_cancellative",
                Evidence::Decidable,
                m.opposite().is_left_cancellative(),
                None,
            ),
        ],
    ))
}

/// Every check for one monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MonoidReport {
    pub order: usize,
    /// Hex of the canonical table.
    pub canonical: String,
    pub profile: PropertyProfile,
    pub profile_violations: Vec<&'static str>,
    pub duality: bool,
    pub theorems: Vec<TheoremReport>,
}

impl MonoidReport {
    pub fn disagreements(&self) -> usize {
        self.theorems.iter().filter(|t| !t.agreement).count()
            + self.profile_violations.len()
            + usize::from(!self.duality)
    }

    pub fn unconfirmed(&self) -> usize {
        self.theorems.iter().map(|t| t.unconfirmed().count()).sum()
    }
}

pub fn check_monoid(monoid: &Monoid, bounds: Bounds) -> Result<MonoidReport, MSetError> {
    let m = Arc::new(monoid.clone());
    let ctx = MonoidContext::new(m.clone(), bounds)?;
    let profile = profile(&m);
    let theorems = vec![
        check_boolean(&ctx)?,
        check_strongly_compact(&ctx)?,
        check_local(&ctx)?,
        check_de_morgan(&ctx)?,
        check_strongly_connected(&ctx)?,
        check_totally_connected(&ctx)?,
        check_colocal(&ctx)?,
        check_bilocal(&ctx)?,
        check_trivial(&ctx)?,
        check_cancellativity(&ctx)?,
    ];
    Ok(MonoidReport {
        order: m.order(),
        canonical: canonical_form(&m).hex(),
        profile_violations: profile_violations(&profile),
        duality: duality_holds(&m),
        profile,
        theorems,
    })
}

/// Statements left out of every suite run.
pub const OUT_OF_SCOPE: &[&str] = &[
    "infinite monoids and infinite M-sets",
    "Set-indexed (infinite) powers; only finite powers and M^|M| are checked",
    "topological and localic examples, sheaf-side constructions",
    "the reflection clauses of the trivial-monoid theorem beyond the terminal object",
];

/// Aggregated results over every monoid up to an order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SuiteReport {
    pub max_order: usize,
    pub bounds: Bounds,
    pub out_of_scope: Vec<&'static str>,
    /// Reports sorted by order, then canonical table.
    pub monoids: Vec<MonoidReport>,
    /// `counts[order][property]`: how many monoids of that order have it.
    pub counts: BTreeMap<usize, BTreeMap<&'static str, usize>>,
    pub disagreements: usize,
    pub unconfirmed: usize,
}

impl SuiteReport {
    /// Sorts and aggregates per-monoid reports, whatever order they arrive in.
    pub fn from_reports(max_order: usize, bounds: Bounds, mut monoids: Vec<MonoidReport>) -> Self {
        monoids.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
        let mut counts: BTreeMap<usize, BTreeMap<&'static str, usize>> = BTreeMap::new();
        for r in &monoids {
            let p = &r.profile;
            let entry = counts.entry(r.order).or_default();
            for (name, flag) in [
                ("monoids", true),
                ("boolean_atomic", p.boolean_atomic),
                ("local", p.local),
                ("colocal", p.colocal),
                ("bilocal", p.bilocal),
                ("de_morgan", p.de_morgan),
                ("strongly_connected", p.strongly_connected),
                ("totally_connected", p.totally_connected),
                ("sufficiently_cohesive", p.sufficiently_cohesive),
                ("left_cancellative", p.left_cancellative),
                ("right_cancellative", p.right_cancellative),
                ("trivial", p.trivial),
            ] {
                *entry.entry(name).or_default() += usize::from(flag);
            }
        }
        Self {
            max_order,
            bounds,
            out_of_scope: OUT_OF_SCOPE.to_vec(),
            disagreements: monoids.iter().map(MonoidReport::disagreements).sum(),
            unconfirmed: monoids.iter().map(MonoidReport::unconfirmed).sum(),
            monoids,
            counts,
        }
    }
}

/// Checks every monoid of order `1..=max_order`, one after another.
pub fn run_suite(max_order: usize, bounds: Bounds) -> Result<SuiteReport, MSetError> {
    let monoids = crate::enumeration::enumerate_monoids_up_to(max_order).map_err(|_| {
        MSetError::CapExceeded {
            what: "monoid order",
            cap: crate::enumeration::DEFAULT_MONOID_ORDER_CAP,
        }
    })?;
    let reports = monoids
        .iter()
        .map(|m| check_monoid(m, bounds))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport::from_reports(max_order, bounds, reports))
}
