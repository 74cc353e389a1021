//! Bounded checks that a set-valued functor preserves a kind of limit or
//! colimit.
//!
//! The functors are `Γ` (fixed points), `C` (components) and `− ⊗_M B` for a
//! left `M`-set `B`. Each check walks a deterministic stream of instances and
//! tests the canonical comparison map; the first failing instance in stream
//! order is returned as the witness.
//!
//! Streams are built from an [`InstancePool`]: first the targeted objects
//! (regular `M`, its sub-`M`-sets and quotients, `M × M`, `M ⊔ 1`, the set
//! `X_R` obtained from `M` by identifying its right absorbing elements, and
//! `∅`, `1`, `Δ(2)`), then every `M`-set up to the blind size bound in
//! enumeration order.

use core::ops::ControlFlow;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::closure::congruence_from_pairs;
use crate::enumeration::enumerate_msets_capped;
use crate::error::MSetError;
use crate::flatness::{tensor, TensorResult};
use crate::hom::hom_set_capped;
use crate::left::LeftMSet;
use crate::monoid::Monoid;
use crate::mset::{coproduct, equalizer, product, product_of, pullback, MSetMorphism, RightMSet};
use crate::partition::{Partition, UnionFind};

/// Size limits for instance streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bounds {
    /// Largest `M`-set size in the blind enumeration.
    pub blind: usize,
    /// Largest object size used in pairs (products, equalizers).
    pub pair: usize,
    /// Largest object size used in triples (pullback cospans).
    pub triple: usize,
    /// Largest carrier built for products, powers and sub-object lists.
    pub carrier_cap: usize,
    /// Search-node cap for hom-set and exponential computations.
    pub hom_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            blind: crate::enumeration::DEFAULT_MSET_SIZE_CAP,
            pair: 3,
            triple: 2,
            carrier_cap: 4096,
            hom_cap: crate::hom::DEFAULT_HOM_CAP,
        }
    }
}

/// A set-valued functor on right `M`-sets.
#[derive(Debug, Clone, Copy)]
pub enum Functor<'a> {
    Gamma,
    Components,
    Tensor(&'a LeftMSet),
}

/// The kinds of limit and colimit a functor may preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Construct {
    Mono,
    Epi,
    Terminal,
    Product,
    Equalizer,
    Pullback,
    Power,
}

/// `F(X)` together with what is needed to apply `F` to arrows out of `X`.
enum Applied {
    Gamma {
        fixed: Vec<usize>,
        index: Vec<usize>,
    },
    Components(Partition),
    Tensor(TensorResult),
}

impl Applied {
    fn size(&self) -> usize {
        match self {
            Applied::Gamma { fixed, .. } => fixed.len(),
            Applied::Components(p) => p.count(),
            Applied::Tensor(t) => t.count(),
        }
    }
}

impl Functor<'_> {
    fn apply(&self, x: &RightMSet) -> Result<Applied, MSetError> {
        Ok(match self {
            Functor::Gamma => {
                let fixed = x.fixed_points();
                let mut index = vec![usize::MAX; x.size()];
                for (i, &f) in fixed.iter().enumerate() {
                    index[f] = i;
                }
                Applied::Gamma { fixed, index }
            }
            Functor::Components => Applied::Components(x.connected_components()),
            Functor::Tensor(b) => Applied::Tensor(tensor(x, b)?),
        })
    }

    /// `F(f) : F(X) → F(Y)`.
    fn arrow(&self, fx: &Applied, fy: &Applied, f: &MSetMorphism) -> Vec<usize> {
        match (fx, fy) {
            (Applied::Gamma { fixed, .. }, Applied::Gamma { index, .. }) => {
                fixed.iter().map(|&x| index[f.apply(x)]).collect()
            }
            (Applied::Components(px), Applied::Components(py)) => {
                let mut out = vec![0; px.count()];
                for x in (0..px.len()).rev() {
                    out[px.class_of(x)] = py.class_of(f.apply(x));
                }
                out
            }
            (Applied::Tensor(tx), Applied::Tensor(ty)) => (0..tx.count())
                .map(|c| {
                    let (a, b) = tx.representative(c);
                    ty.class_of(f.apply(a), b)
                })
                .collect(),
            _ => unreachable!("one functor produces one kind of image"),
        }
    }
}

/// One instance of a construct, borrowing its objects from a pool.
#[derive(Debug, Clone)]
pub enum Instance<'a> {
    /// The inclusion of the sub-`M`-set `sub` into `x`.
    Mono { x: &'a RightMSet, sub: Vec<usize> },
    /// The quotient map of `x` by a compatible partition.
    Epi {
        x: &'a RightMSet,
        classes: Partition,
    },
    /// The product of the factors; no factors means the terminal object.
    Product { factors: Vec<&'a RightMSet> },
    Equalizer {
        x: &'a RightMSet,
        y: &'a RightMSet,
        f: MSetMorphism,
        g: MSetMorphism,
    },
    Pullback {
        x: &'a RightMSet,
        y: &'a RightMSet,
        z: &'a RightMSet,
        f: MSetMorphism,
        g: MSetMorphism,
    },
}

/// A self-contained description of a failing instance, for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Witness {
    pub construct: Construct,
    /// Action tables (one row per element) of the objects involved.
    pub objects: Vec<Vec<Vec<usize>>>,
    /// Image arrays of the morphisms involved.
    pub maps: Vec<Vec<usize>>,
    /// The sub-`M`-set (mono) or class labels (epi), when relevant.
    pub detail: Vec<usize>,
}

impl Instance<'_> {
    pub fn construct(&self) -> Construct {
        match self {
            Instance::Mono { .. } => Construct::Mono,
            Instance::Epi { .. } => Construct::Epi,
            Instance::Product { factors } if factors.is_empty() => Construct::Terminal,
            Instance::Product { .. } => Construct::Product,
            Instance::Equalizer { .. } => Construct::Equalizer,
            Instance::Pullback { .. } => Construct::Pullback,
        }
    }

    pub fn witness(&self) -> Witness {
        let construct = self.construct();
        let (objects, maps, detail) = match self {
            Instance::Mono { x, sub } => (vec![x.rows()], vec![], sub.clone()),
            Instance::Epi { x, classes } => (vec![x.rows()], vec![], classes.labels().to_vec()),
            Instance::Product { factors } => {
                (factors.iter().map(|f| f.rows()).collect(), vec![], vec![])
            }
            Instance::Equalizer { x, y, f, g } => (
                vec![x.rows(), y.rows()],
                vec![f.map().to_vec(), g.map().to_vec()],
                vec![],
            ),
            Instance::Pullback { x, y, z, f, g } => (
                vec![x.rows(), y.rows(), z.rows()],
                vec![f.map().to_vec(), g.map().to_vec()],
                vec![],
            ),
        };
        Witness {
            construct,
            objects,
            maps,
            detail,
        }
    }
}

fn injective(map: &[usize], target: usize) -> bool {
    let mut seen = vec![false; target];
    map.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
}

/// Whether the comparison map of `functor` at `instance` is an isomorphism
/// (injective for monos, surjective for epis).
pub fn comparison_holds(
    functor: Functor<'_>,
    instance: &Instance<'_>,
    cap: usize,
) -> Result<bool, MSetError> {
    match instance {
        Instance::Mono { x, sub } => {
            let s = x.restrict(sub)?;
            let (fs, fx) = (functor.apply(&s)?, functor.apply(x)?);
            let incl = MSetMorphism::from_map_unchecked(sub.clone());
            Ok(injective(&functor.arrow(&fs, &fx, &incl), fx.size()))
        }
        Instance::Epi { x, classes } => {
            let (q, closed) = x.quotient(classes)?;
            let (fx, fq) = (functor.apply(x)?, functor.apply(&q)?);
            let map = MSetMorphism::from_map_unchecked(closed.labels().to_vec());
            let image = functor.arrow(&fx, &fq, &map);
            let mut hit = vec![false; fq.size()];
            for v in image {
                hit[v] = true;
            }
            Ok(hit.into_iter().all(|h| h))
        }
        Instance::Product { factors } => {
            if factors.is_empty() {
                return Err(MSetError::ShapeMismatch(
                    "use the terminal object explicitly",
                ));
            }
            let p = product_of(factors, cap)?;
            let fp = functor.apply(&p.object)?;
            let mut radix = Vec::with_capacity(factors.len());
            let mut legs = Vec::with_capacity(factors.len());
            for (factor, proj) in factors.iter().zip(&p.maps) {
                let ff = functor.apply(factor)?;
                radix.push(ff.size());
                legs.push(functor.arrow(&fp, &ff, proj));
            }
            let Some(total) = radix.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r)) else {
                return Ok(false);
            };
            if total != fp.size() {
                return Ok(false);
            }
            let codes: Vec<usize> = (0..fp.size())
                .map(|u| {
                    legs.iter()
                        .zip(&radix)
                        .fold(0, |acc, (leg, &r)| acc * r + leg[u])
                })
                .collect();
            Ok(injective(&codes, total))
        }
        Instance::Equalizer { x, y, f, g } => {
            let e = equalizer(x, y, f, g)?;
            let (fe, fx, fy) = (
                functor.apply(&e.object)?,
                functor.apply(x)?,
                functor.apply(y)?,
            );
            let incl = functor.arrow(&fe, &fx, &e.maps[0]);
            let (ff, fg) = (functor.arrow(&fx, &fy, f), functor.arrow(&fx, &fy, g));
            let agree = (0..fx.size()).filter(|&u| ff[u] == fg[u]).count();
            Ok(injective(&incl, fx.size())
                && incl.iter().all(|&u| ff[u] == fg[u])
                && incl.len() == agree)
        }
        Instance::Pullback { x, y, z, f, g } => {
            let pb = pullback(x, y, z, f, g)?;
            let fpb = functor.apply(&pb.object)?;
            let (fx, fy, fz) = (functor.apply(x)?, functor.apply(y)?, functor.apply(z)?);
            let p1 = functor.arrow(&fpb, &fx, &pb.maps[0]);
            let p2 = functor.arrow(&fpb, &fy, &pb.maps[1]);
            let (ff, fg) = (functor.arrow(&fx, &fz, f), functor.arrow(&fy, &fz, g));
            let matching = (0..fx.size())
                .map(|u| (0..fy.size()).filter(|&v| ff[u] == fg[v]).count())
                .sum::<usize>();
            let codes: Vec<usize> = p1
                .iter()
                .zip(&p2)
                .map(|(&u, &v)| u * fy.size() + v)
                .collect();
            Ok(injective(&codes, fx.size() * fy.size())
                && p1.iter().zip(&p2).all(|(&u, &v)| ff[u] == fg[v])
                && codes.len() == matching)
        }
    }
}

/// `F(1)` has exactly one element.
pub fn preserves_terminal(functor: Functor<'_>, monoid: &Arc<Monoid>) -> Result<bool, MSetError> {
    Ok(functor.apply(&RightMSet::terminal(monoid))?.size() == 1)
}

/// Objects from which instance streams are drawn.
#[derive(Debug, Clone)]
pub struct InstancePool {
    pub monoid: Arc<Monoid>,
    pub bounds: Bounds,
    pub regular: RightMSet,
    /// `M^{|M|}` when its carrier fits the cap.
    pub big_power: Option<RightMSet>,
    pub targeted: Vec<RightMSet>,
    pub blind: Vec<RightMSet>,
    /// The quotients of `M` collapsing `m1·M` and `m2·M` to one point each,
    /// for every pair `m1 < m2`.
    pub ore_quotients: Vec<((usize, usize), RightMSet)>,
}

/// `M` with `m1·M` and `m2·M` each collapsed to a point (as a right
/// congruence), and the generating pairs used.
pub fn ore_quotient(monoid: &Arc<Monoid>, m1: usize, m2: usize) -> RightMSet {
    let mut pairs = Vec::new();
    for a in [m1, m2] {
        let row = monoid.row(a);
        for w in row.windows(2) {
            pairs.push((w[0], w[1]));
        }
    }
    let cong = congruence_from_pairs(monoid, &pairs).expect("elements are in range");
    RightMSet::regular(monoid)
        .quotient(&cong)
        .expect("partition covers the carrier")
        .0
}

/// `M` with all right absorbing elements identified.
pub fn identify_right_absorbing(monoid: &Arc<Monoid>) -> RightMSet {
    let r = monoid.right_absorbing();
    let mut uf = UnionFind::new(monoid.order());
    for w in r.windows(2) {
        uf.union(w[0], w[1]);
    }
    RightMSet::regular(monoid)
        .quotient(&uf.into_partition())
        .expect("partition covers the carrier")
        .0
}

impl InstancePool {
    pub fn new(monoid: &Arc<Monoid>, bounds: Bounds) -> Result<Self, MSetError> {
        let regular = RightMSet::regular(monoid);
        let mut targeted = vec![
            RightMSet::empty(monoid),
            RightMSet::terminal(monoid),
            RightMSet::trivial_action(monoid, 2),
            regular.clone(),
        ];
        for sub in regular.sub_msets(bounds.carrier_cap)? {
            if !sub.is_empty() && sub.len() < regular.size() {
                targeted.push(regular.restrict(&sub)?);
            }
        }
        let mut ore_quotients = Vec::new();
        for m1 in monoid.elements() {
            for m2 in m1 + 1..monoid.order() {
                let q = ore_quotient(monoid, m1, m2);
                targeted.push(q.clone());
                ore_quotients.push(((m1, m2), q));
            }
        }
        for x in monoid.elements() {
            for y in x + 1..monoid.order() {
                let cong = congruence_from_pairs(monoid, &[(x, y)]).expect("elements are in range");
                targeted.push(regular.quotient(&cong)?.0);
            }
        }
        targeted.push(identify_right_absorbing(monoid));
        targeted.push(coproduct(&regular, &RightMSet::terminal(monoid))?.object);
        if regular.size() * regular.size() <= bounds.carrier_cap {
            targeted.push(product(&regular, &regular)?.object);
        }
        let big_power = match crate::mset::power(&regular, monoid.order(), bounds.carrier_cap) {
            Ok(p) => Some(p),
            Err(MSetError::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let mut blind = Vec::new();
        for k in 0..=bounds.blind {
            blind.extend(enumerate_msets_capped(monoid, k, bounds.blind)?);
        }
        Ok(Self {
            monoid: monoid.clone(),
            bounds,
            regular,
            big_power,
            targeted,
            blind,
            ore_quotients,
        })
    }

    /// Targeted objects, then the blind enumeration.
    pub fn all(&self) -> impl Iterator<Item = &RightMSet> {
        self.targeted.iter().chain(&self.blind)
    }

    /// Objects whose sub-`M`-sets are listed: those of size at most the blind
    /// bound or `|M| + 1`.
    pub fn subobject_hosts(&self) -> impl Iterator<Item = &RightMSet> {
        let max = self.bounds.blind.max(self.monoid.order() + 1);
        self.all().filter(move |x| x.size() <= max)
    }

    /// Objects of size at most `max`, in stream order.
    pub fn small(&self, max: usize) -> Vec<&RightMSet> {
        self.all().filter(|x| x.size() <= max).collect()
    }

    /// The left multiplications `m·− : M → M`.
    pub fn left_multiplication(&self, m: usize) -> MSetMorphism {
        MSetMorphism::from_map_unchecked(self.monoid.row(m).to_vec())
    }

    /// Streams every instance of `construct`, stopping when `visit` breaks.
    pub fn for_each_instance<'p, F>(
        &'p self,
        construct: Construct,
        mut visit: F,
    ) -> Result<(), MSetError>
    where
        F: FnMut(Instance<'p>) -> Result<ControlFlow<()>, MSetError>,
    {
        macro_rules! emit {
            ($inst:expr) => {
                if visit($inst)?.is_break() {
                    return Ok(());
                }
            };
        }
        let b = self.bounds;
        match construct {
            Construct::Mono => {
                for x in self.subobject_hosts() {
                    for sub in x.sub_msets(b.carrier_cap)? {
                        emit!(Instance::Mono { x, sub });
                    }
                }
            }
            Construct::Epi => {
                for x in self.all().filter(|x| x.size() <= b.blind) {
                    let mut result = Ok(());
                    let mut stop = false;
                    for_each_set_partition(x.size(), &mut |labels| {
                        if stop || result.is_err() {
                            return;
                        }
                        let classes = Partition::from_small_labels(labels, x.size());
                        let compatible = (0..x.size()).all(|e| {
                            (0..x.size()).all(|f| {
                                classes.class_of(e) != classes.class_of(f)
                                    || x.row(e)
                                        .iter()
                                        .zip(x.row(f))
                                        .all(|(&u, &v)| classes.class_of(u) == classes.class_of(v))
                            })
                        });
                        if compatible {
                            match visit(Instance::Epi { x, classes }) {
                                Ok(flow) => stop = flow.is_break(),
                                Err(e) => result = Err(e),
                            }
                        }
                    });
                    result?;
                    if stop {
                        return Ok(());
                    }
                }
            }
            Construct::Terminal => emit!(Instance::Product { factors: vec![] }),
            Construct::Product => {
                emit!(Instance::Product {
                    factors: vec![&self.regular, &self.regular]
                });
                let small = self.small(b.pair);
                for &x in &small {
                    for &y in &small {
                        emit!(Instance::Product {
                            factors: vec![x, y]
                        });
                    }
                }
            }
            Construct::Power => {
                let small = self.small(b.pair);
                for &x in &small {
                    for k in 2..=4 {
                        if x.size()
                            .checked_pow(k as u32)
                            .is_some_and(|s| s <= b.carrier_cap)
                        {
                            emit!(Instance::Product {
                                factors: vec![x; k]
                            });
                        }
                    }
                }
                if self.big_power.is_some() {
                    emit!(Instance::Product {
                        factors: vec![&self.regular; self.monoid.order()]
                    });
                }
            }
            Construct::Equalizer => {
                let reg = &self.regular;
                for m1 in self.monoid.elements() {
                    for m2 in m1 + 1..self.monoid.order() {
                        emit!(Instance::Equalizer {
                            x: reg,
                            y: reg,
                            f: self.left_multiplication(m1),
                            g: self.left_multiplication(m2),
                        });
                    }
                }
                let small = self.small(b.pair);
                for &x in &small {
                    for &y in &small {
                        let homs = hom_set_capped(x, y, b.hom_cap)?;
                        for (i, f) in homs.iter().enumerate() {
                            for g in &homs[i + 1..] {
                                emit!(Instance::Equalizer {
                                    x,
                                    y,
                                    f: f.clone(),
                                    g: g.clone(),
                                });
                            }
                        }
                    }
                }
            }
            Construct::Pullback => {
                let reg = &self.regular;
                let n = self.monoid.order();
                // Binary products as pullbacks over the terminal object.
                let one = &self.targeted[1];
                emit!(Instance::Pullback {
                    x: reg,
                    y: reg,
                    z: one,
                    f: MSetMorphism::to_terminal(n),
                    g: MSetMorphism::to_terminal(n),
                });
                // Equalizers of left multiplications as pullbacks of
                // ⟨m1·, m2·⟩ : M → M × M along the diagonal, when M × M is pooled.
                if let Some(mm) = self.targeted.iter().find(|x| x.size() == n * n && n > 1) {
                    let diag =
                        MSetMorphism::from_map_unchecked((0..n).map(|a| a * n + a).collect());
                    for m1 in self.monoid.elements() {
                        for m2 in m1 + 1..n {
                            let pair = MSetMorphism::from_map_unchecked(
                                (0..n)
                                    .map(|a| self.monoid.mul(m1, a) * n + self.monoid.mul(m2, a))
                                    .collect(),
                            );
                            emit!(Instance::Pullback {
                                x: reg,
                                y: reg,
                                z: mm,
                                f: pair,
                                g: diag.clone(),
                            });
                        }
                    }
                }
                let small = self.small(b.triple);
                for &z in &small {
                    for &x in &small {
                        let fs = hom_set_capped(x, z, b.hom_cap)?;
                        for &y in &small {
                            let gs = hom_set_capped(y, z, b.hom_cap)?;
                            for f in &fs {
                                for g in &gs {
                                    emit!(Instance::Pullback {
                                        x,
                                        y,
                                        z,
                                        f: f.clone(),
                                        g: g.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Calls `visit` with the restricted-growth labels of every set partition of
/// `0..k`.
pub fn for_each_set_partition(k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(i: usize, max: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i == labels.len() {
            visit(labels);
            return;
        }
        for l in 0..=max {
            labels[i] = l;
            go(i + 1, if l == max { max + 1 } else { max }, labels, visit);
        }
    }
    let mut labels = vec![0; k];
    if k == 0 {
        visit(&labels);
        return;
    }
    go(1, 1, &mut labels, visit);
}

/// Outcome of a bounded preservation check.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Verdict {
    /// No instance in the stream failed.
    pub holds: bool,
    pub instances: usize,
    pub witness: Option<Witness>,
}

/// Runs `functor` over the stream for `construct`; the first failure wins.
pub fn preservation_check(
    functor: Functor<'_>,
    construct: Construct,
    pool: &InstancePool,
) -> Result<Verdict, MSetError> {
    let mut instances = 0;
    let mut witness = None;
    pool.for_each_instance(construct, |inst| {
        instances += 1;
        let ok = match inst {
            Instance::Product { ref factors } if factors.is_empty() => {
                preserves_terminal(functor, &pool.monoid)?
            }
            _ => comparison_holds(functor, &inst, pool.bounds.carrier_cap)?,
        };
        if ok {
            Ok(ControlFlow::Continue(()))
        } else {
            witness = Some(inst.witness());
            Ok(ControlFlow::Break(()))
        }
    })?;
    if instances == 0 {
        return Err(MSetError::BoundTooSmall("the instance stream is empty"));
    }
    Ok(Verdict {
        holds: witness.is_none(),
        instances,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn pool(m: Monoid) -> InstancePool {
        let bounds = Bounds {
            blind: 3,
            ..Bounds::default()
        };
        InstancePool::new(&Arc::new(m), bounds).unwrap()
    }

    #[test]
    fn set_partitions_are_counted_by_bell_numbers() {
        for (k, bell) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
            let mut count = 0;
            for_each_set_partition(k, &mut |_| count += 1);
            assert_eq!(count, bell);
        }
    }

    #[test]
    fn components_fail_to_preserve_monos_over_rz3() {
        let p = pool(named::rz3());
        let v = preservation_check(Functor::Components, Construct::Mono, &p).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.construct, Construct::Mono);
    }

    #[test]
    fn gamma_preserves_epis_over_end2() {
        let p = pool(named::end2());
        let v = preservation_check(Functor::Gamma, Construct::Epi, &p).unwrap();
        assert!(v.holds && v.instances > 0);
    }

    #[test]
    fn components_preserve_equalizers_over_max2() {
        let p = pool(named::max2());
        assert!(
            preservation_check(Functor::Components, Construct::Equalizer, &p)
                .unwrap()
                .holds
        );
        assert!(
            preservation_check(Functor::Components, Construct::Pullback, &p)
                .unwrap()
                .holds
        );
        let p = pool(named::c2());
        let v = preservation_check(Functor::Components, Construct::Equalizer, &p).unwrap();
        assert!(!v.holds);
        // The first witness is the pair of left multiplications on C2.
        assert_eq!(v.instances, 1);
    }

    #[test]
    fn groups_do_not_preserve_products_under_components() {
        let p = pool(named::c2());
        let v = preservation_check(Functor::Components, Construct::Product, &p).unwrap();
        assert!(!v.holds);
        assert!(
            preservation_check(Functor::Gamma, Construct::Product, &p)
                .unwrap()
                .holds
        );
        assert!(
            preservation_check(Functor::Gamma, Construct::Terminal, &p)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn ore_quotient_of_rz3_has_two_fixed_points_in_one_component() {
        let rz3 = Arc::new(named::rz3());
        let q = ore_quotient(&rz3, 1, 2);
        assert!(q.is_indecomposable());
        assert_eq!(q.fixed_points().len(), 2);
    }
}
