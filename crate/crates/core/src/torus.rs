//! A-branes on the flat torus `C / (Z + Z tau)` as covering/wrapping data.
//!
//! A morphism from an Azumaya circle is recorded combinatorially: each
//! component covers the circle with degree `d`, wraps the primitive geodesic
//! of class `(p0, q0)` a total of `m` times, sits at an offset, and carries a
//! fiber of rank `fr`. Calibration directions are exact lattice vectors
//! `p0 + q0 tau`, never angles.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::orbit::{orbit_closure_contains, OrbitLabel};
use crate::scalar::{Rational, GR};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusGeometry {
    tau: GR,
}

impl TorusGeometry {
    pub fn new(tau: GR) -> Result<Self> {
        if tau.im() <= &Rational::zero() {
            return Err(Error::InvalidModulus);
        }
        Ok(TorusGeometry { tau })
    }

    pub fn tau(&self) -> &GR {
        &self.tau
    }

    /// Representative of `z` modulo `Z + Z tau` with both lattice coordinates
    /// in `[0, 1)`.
    pub fn reduce(&self, z: &GR) -> GR {
        let y = z.im() / self.tau.im();
        let x = z.re() - &y * self.tau.re();
        let x = &x - x.floor();
        let y = &y - y.floor();
        GR::from_real(x) + GR::from_real(y) * self.tau.clone()
    }
}

/// A class `(p, q)` in `H_1` of the torus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomologyClass {
    pub p: i64,
    pub q: i64,
}

impl HomologyClass {
    pub const ZERO: HomologyClass = HomologyClass { p: 0, q: 0 };

    pub fn new(p: i64, q: i64) -> Self {
        HomologyClass { p, q }
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// `(primitive, m)` with `self = m * primitive`; the zero class gives
    /// `((0, 0), 0)`.
    pub fn primitive(&self) -> (HomologyClass, u64) {
        let g = self.p.gcd(&self.q);
        if g == 0 {
            return (HomologyClass::ZERO, 0);
        }
        (HomologyClass::new(self.p / g, self.q / g), g as u64)
    }

    pub fn scale(&self, k: i64) -> Self {
        HomologyClass::new(self.p * k, self.q * k)
    }
}

impl Add for HomologyClass {
    type Output = HomologyClass;
    fn add(self, o: HomologyClass) -> HomologyClass {
        HomologyClass::new(self.p + o.p, self.q + o.q)
    }
}

impl Neg for HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        HomologyClass::new(-self.p, -self.q)
    }
}

/// A class `(r; p, q)` in `H_1` of the circle times the torus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SurrogateClass {
    pub r: u64,
    pub p: i64,
    pub q: i64,
}

impl SurrogateClass {
    pub fn new(r: u64, p: i64, q: i64) -> Self {
        SurrogateClass { r, p, q }
    }

    pub fn projection(&self) -> HomologyClass {
        HomologyClass::new(self.p, self.q)
    }
}

impl Add for SurrogateClass {
    type Output = SurrogateClass;
    fn add(self, o: SurrogateClass) -> SurrogateClass {
        SurrogateClass::new(self.r + o.r, self.p + o.p, self.q + o.q)
    }
}

/// `p1 q2 - p2 q1`.
pub fn intersection(c1: &HomologyClass, c2: &HomologyClass) -> i64 {
    c1.p * c2.q - c2.p * c1.q
}

/// The primitive lattice vector `p0 + q0 tau` along `c`.
pub fn direction(c: &HomologyClass, g: &TorusGeometry) -> Result<GR> {
    if c.is_zero() {
        return Err(Error::ZeroClass);
    }
    let (prim, _) = c.primitive();
    Ok(GR::from(prim.p) + GR::from(prim.q) * g.tau.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Covering degree over the circle.
    pub d: u64,
    /// Primitive direction, `(0, 0)` for a point brane.
    pub class: HomologyClass,
    /// Number of times the primitive geodesic is traversed.
    pub wrap: u64,
    pub offset: GR,
    pub fiber_rank: u64,
}

impl Component {
    /// Splits `wrap_class` into primitive direction and wrapping number.
    pub fn new(d: u64, wrap_class: HomologyClass, offset: GR, fiber_rank: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidComponent("covering degree must be positive"));
        }
        if fiber_rank == 0 {
            return Err(Error::InvalidComponent("fiber rank must be positive"));
        }
        let (class, wrap) = wrap_class.primitive();
        Ok(Component { d, class, wrap, offset, fiber_rank })
    }

    pub fn wrap_class(&self) -> HomologyClass {
        self.class.scale(self.wrap as i64)
    }

    pub fn is_point(&self) -> bool {
        self.wrap == 0
    }

    /// `(d fr; m fr p0, m fr q0)`.
    pub fn surrogate_class(&self) -> SurrogateClass {
        let w = (self.wrap * self.fiber_rank) as i64;
        SurrogateClass::new(self.d * self.fiber_rank, w * self.class.p, w * self.class.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzCircleMorphism {
    pub geometry: TorusGeometry,
    pub components: Vec<Component>,
    /// Cyclic list alternating interval and junction orbit labels.
    pub profile: Option<Vec<OrbitLabel>>,
}

impl AzCircleMorphism {
    /// Offsets are reduced modulo the lattice.
    pub fn new(geometry: TorusGeometry, components: Vec<Component>) -> Self {
        let components = components
            .into_iter()
            .map(|mut c| {
                c.offset = geometry.reduce(&c.offset);
                c
            })
            .collect();
        AzCircleMorphism { geometry, components, profile: None }
    }

    pub fn empty(geometry: TorusGeometry) -> Self {
        AzCircleMorphism { geometry, components: Vec::new(), profile: None }
    }

    pub fn with_profile(mut self, profile: Vec<OrbitLabel>) -> Self {
        self.profile = Some(profile);
        self
    }

    /// Rank of the fundamental module over the circle, `sum d fr`.
    pub fn rank(&self) -> u64 {
        self.components.iter().map(|c| c.d * c.fiber_rank).sum()
    }
}

/// One geodesic term of a pushforward cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTerm {
    pub class: HomologyClass,
    pub offset: GR,
    /// `m fr`: contribution to the homology class.
    pub winding: u64,
    /// `d fr`: rank of the pushed-forward sheaf along the geodesic.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedCycle {
    pub terms: Vec<CycleTerm>,
    /// `(point, length)` from components with zero class.
    pub points: Vec<(GR, u64)>,
}

impl WeightedCycle {
    pub fn total_class(&self) -> HomologyClass {
        self.terms.iter().fold(HomologyClass::ZERO, |acc, t| acc + t.class.scale(t.winding as i64))
    }

    pub fn total_rank(&self) -> u64 {
        self.terms.iter().map(|t| t.multiplicity).sum::<u64>() + self.points.iter().map(|(_, l)| l).sum::<u64>()
    }

    /// Per primitive direction, `(sum winding, sum multiplicity)`, with all
    /// point lengths pooled under the zero class.
    pub fn normalized(&self) -> BTreeMap<HomologyClass, (u64, u64)> {
        let mut out: BTreeMap<HomologyClass, (u64, u64)> = BTreeMap::new();
        for t in &self.terms {
            let e = out.entry(t.class).or_default();
            e.0 += t.winding;
            e.1 += t.multiplicity;
        }
        for (_, l) in &self.points {
            out.entry(HomologyClass::ZERO).or_default().1 += l;
        }
        out
    }

    /// Equality up to splitting or merging components along a direction.
    pub fn equivalent(&self, other: &WeightedCycle) -> bool {
        self.normalized() == other.normalized()
    }

    /// Term-wise sum.
    pub fn sum(&self, other: &WeightedCycle) -> WeightedCycle {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out.points.extend(other.points.iter().cloned());
        out
    }
}

/// True iff all line components share one primitive direction, orientation
/// included. Point components are allowed.
pub fn is_special_lagrangian(phi: &AzCircleMorphism) -> bool {
    let mut dirs = phi.components.iter().filter(|c| !c.is_point()).map(|c| c.class);
    match dirs.next() {
        None => true,
        Some(first) => dirs.all(|d| d == first),
    }
}

pub fn pushforward_cycle(phi: &AzCircleMorphism) -> WeightedCycle {
    let mut out = WeightedCycle::default();
    for c in &phi.components {
        let multiplicity = c.d * c.fiber_rank;
        if c.is_point() {
            out.points.push((c.offset.clone(), multiplicity));
        } else {
            out.terms.push(CycleTerm {
                class: c.class,
                offset: c.offset.clone(),
                winding: c.wrap * c.fiber_rank,
                multiplicity,
            });
        }
    }
    out
}

/// Disjoint union; the profile is dropped.
pub fn amalgamate(phi1: &AzCircleMorphism, phi2: &AzCircleMorphism) -> Result<AzCircleMorphism> {
    if phi1.geometry != phi2.geometry {
        return Err(Error::GeometryMismatch);
    }
    let mut components = phi1.components.clone();
    components.extend(phi2.components.iter().cloned());
    Ok(AzCircleMorphism { geometry: phi1.geometry.clone(), components, profile: None })
}

pub fn total_class(phi: &AzCircleMorphism) -> (SurrogateClass, HomologyClass) {
    let s = phi.components.iter().fold(SurrogateClass::default(), |acc, c| acc + c.surrogate_class());
    (s, s.projection())
}

/// Canonical special Lagrangian representative of `target`.
///
/// For `(p, q) != 0` and `g0 = gcd(r, p, q)`: `g0` components of degree
/// `r / g0` wrapping `(p, q) / g0`, fiber rank 1, offset 0. For `(p, q) = 0`:
/// one point component of fiber rank `r`.
pub fn slag_representative(target: &SurrogateClass, g: &TorusGeometry) -> Result<AzCircleMorphism> {
    let class = target.projection();
    if target.r == 0 {
        if class.is_zero() {
            return Ok(AzCircleMorphism::empty(g.clone()));
        }
        return Err(Error::EmptyRankNonzeroClass);
    }
    let components = if class.is_zero() {
        vec![Component::new(1, HomologyClass::ZERO, GR::zero(), target.r)?]
    } else {
        let g0 = (target.r as i64).gcd(&class.p).gcd(&class.q);
        let piece = HomologyClass::new(class.p / g0, class.q / g0);
        let d = target.r / g0 as u64;
        (0..g0).map(|_| Component::new(d, piece, GR::zero(), 1)).collect::<Result<Vec<_>>>()?
    };
    Ok(AzCircleMorphism::new(g.clone(), components))
}

/// Replaces `phi` by the special Lagrangian representative of its total class.
pub fn merge_components(phi: &AzCircleMorphism) -> Result<AzCircleMorphism> {
    slag_representative(&total_class(phi).0, &phi.geometry)
}

/// Amalgamate, then deform to the special Lagrangian representative.
pub fn cancel(phi1: &AzCircleMorphism, phi2: &AzCircleMorphism) -> Result<AzCircleMorphism> {
    merge_components(&amalgamate(phi1, phi2)?)
}

/// Every junction label lies in the closure of both neighbouring intervals.
pub fn validate_profile(phi: &AzCircleMorphism) -> Result<bool> {
    let profile = phi.profile.as_ref().ok_or_else(|| Error::MalformedProfile("no profile".into()))?;
    let n = profile.len();
    if n == 0 || n % 2 == 1 {
        return Err(Error::MalformedProfile(format!("expected an even number of labels, found {n}")));
    }
    Ok((0..n / 2).all(|k| {
        let junction = &profile[2 * k + 1];
        orbit_closure_contains(&profile[2 * k], junction) && orbit_closure_contains(&profile[(2 * k + 2) % n], junction)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::Partition;

    fn tau_i() -> TorusGeometry {
        TorusGeometry::new(GR::i()).unwrap()
    }

    fn comp(d: u64, p: i64, q: i64, fr: u64) -> Component {
        Component::new(d, HomologyClass::new(p, q), GR::zero(), fr).unwrap()
    }

    fn morph(cs: Vec<Component>) -> AzCircleMorphism {
        AzCircleMorphism::new(tau_i(), cs)
    }

    #[test]
    fn intersection_examples() {
        let c = |p, q| HomologyClass::new(p, q);
        assert_eq!(intersection(&c(1, 0), &c(0, 1)), 1);
        assert_eq!(intersection(&c(3, -2), &c(3, -2)), 0);
        assert_eq!(intersection(&c(2, 1), &c(1, 1)), 1);
    }

    #[test]
    fn direction_examples() {
        let g = TorusGeometry::new(GR::gauss(1, 3)).unwrap();
        assert_eq!(direction(&HomologyClass::new(1, 0), &g).unwrap(), GR::from(1));
        assert_eq!(direction(&HomologyClass::new(0, 1), &tau_i()).unwrap(), GR::i());
        assert_eq!(direction(&HomologyClass::new(2, 2), &tau_i()).unwrap(), GR::gauss(1, 1));
        assert_eq!(direction(&HomologyClass::ZERO, &tau_i()), Err(Error::ZeroClass));
        assert_eq!(TorusGeometry::new(GR::from(1)), Err(Error::InvalidModulus));
    }

    #[test]
    fn offsets_reduce_mod_lattice() {
        let g = TorusGeometry::new(GR::gauss(1, 2)).unwrap();
        // 3/2 + (1 + 2i) * 5/2 reduces to 1/2 + (1 + 2i) / 2
        let z = GR::frac(3, 2) + GR::gauss(1, 2) * GR::frac(5, 2);
        assert_eq!(g.reduce(&z), GR::frac(1, 2) + GR::gauss(1, 2) * GR::frac(1, 2));
        assert_eq!(g.reduce(&GR::gauss(1, 2)), GR::zero());
    }

    #[test]
    fn special_lagrangian_examples() {
        assert!(is_special_lagrangian(&morph(vec![comp(1, 1, 0, 1)])));
        assert!(!is_special_lagrangian(&morph(vec![comp(1, 1, 0, 1), comp(1, 0, 1, 1)])));
        assert!(is_special_lagrangian(&morph(vec![comp(1, 1, 0, 1), comp(1, 2, 0, 1)])));
        assert!(!is_special_lagrangian(&morph(vec![comp(1, 1, 0, 1), comp(1, -1, 0, 1)])));
        assert!(is_special_lagrangian(&morph(vec![comp(1, 1, 0, 1), comp(2, 0, 0, 1)])));
    }

    #[test]
    fn pushforward_examples() {
        let cyc = pushforward_cycle(&morph(vec![comp(1, 1, 0, 1)]));
        assert_eq!(cyc.terms.len(), 1);
        assert_eq!((cyc.terms[0].class, cyc.terms[0].multiplicity), (HomologyClass::new(1, 0), 1));

        let cyc = pushforward_cycle(&morph(vec![comp(2, 1, 0, 1)]));
        assert_eq!(cyc.terms[0].multiplicity, 2);
        assert_eq!(cyc.total_class(), HomologyClass::new(1, 0));

        let pair = cancel(&morph(vec![comp(1, 2, 1, 1)]), &morph(vec![comp(1, -2, -1, 1)])).unwrap();
        let cyc = pushforward_cycle(&pair);
        assert!(cyc.terms.is_empty());
        assert_eq!(cyc.points, vec![(GR::zero(), 2)]);
    }

    #[test]
    fn amalgamate_examples() {
        let a = morph(vec![comp(1, 1, 0, 1)]);
        let b = morph(vec![comp(1, 0, 1, 1)]);
        let ab = amalgamate(&a, &b).unwrap();
        assert_eq!(total_class(&ab).1, HomologyClass::new(1, 1));
        assert_eq!(pushforward_cycle(&ab).terms.len(), 2);
        assert_eq!(pushforward_cycle(&ab), pushforward_cycle(&a).sum(&pushforward_cycle(&b)));

        assert_eq!(amalgamate(&a, &AzCircleMorphism::empty(tau_i())).unwrap(), a);

        let anti = morph(vec![comp(1, -1, 0, 1)]);
        assert_eq!(total_class(&amalgamate(&a, &anti).unwrap()).1, HomologyClass::ZERO);

        let other = AzCircleMorphism::empty(TorusGeometry::new(GR::gauss(0, 2)).unwrap());
        assert_eq!(amalgamate(&a, &other), Err(Error::GeometryMismatch));
    }

    #[test]
    fn total_class_examples() {
        let merge = morph(vec![comp(1, 1, 0, 1), comp(1, 1, 0, 1), comp(2, 1, 0, 1)]);
        assert_eq!(total_class(&merge).0, SurrogateClass::new(4, 3, 0));
        assert_eq!(total_class(&AzCircleMorphism::empty(tau_i())).0, SurrogateClass::default());
        assert_eq!(total_class(&morph(vec![comp(1, 5, -7, 1)])).0, SurrogateClass::new(1, 5, -7));
    }

    #[test]
    fn slag_examples() {
        let g = tau_i();
        let one = slag_representative(&SurrogateClass::new(1, 1, 1), &g).unwrap();
        assert_eq!(one.components, vec![comp(1, 1, 1, 1)]);
        assert!(is_special_lagrangian(&one));

        let point = slag_representative(&SurrogateClass::new(2, 0, 0), &g).unwrap();
        assert!(pushforward_cycle(&point).terms.is_empty());
        assert_eq!(point.rank(), 2);

        let merged = slag_representative(&SurrogateClass::new(4, 3, 0), &g).unwrap();
        assert_eq!(merged.components[0].class, HomologyClass::new(1, 0));
        assert_eq!(total_class(&merged).0, SurrogateClass::new(4, 3, 0));
        assert!(is_special_lagrangian(&merged));

        let split = slag_representative(&SurrogateClass::new(4, 2, 6), &g).unwrap();
        assert_eq!(split.components.len(), 2);
        assert_eq!(total_class(&split).0, SurrogateClass::new(4, 2, 6));

        assert!(slag_representative(&SurrogateClass::default(), &g).unwrap().components.is_empty());
        assert_eq!(slag_representative(&SurrogateClass::new(0, 1, 0), &g), Err(Error::EmptyRankNonzeroClass));
    }

    #[test]
    fn cycle_equivalence_ignores_splitting() {
        let whole = pushforward_cycle(&morph(vec![comp(2, 2, 0, 1)]));
        let halves = pushforward_cycle(&morph(vec![comp(1, 1, 0, 1), comp(1, 1, 0, 1)]));
        assert!(whole.equivalent(&halves));
        let other = pushforward_cycle(&morph(vec![comp(2, 0, 2, 1)]));
        assert!(!whole.equivalent(&other));
    }

    #[test]
    fn profile_examples() {
        let label = |p: &[usize]| OrbitLabel::at_point(vec![GR::zero()], Partition::new(p.to_vec()).unwrap()).unwrap();
        let base = morph(vec![comp(2, 1, 0, 1)]);
        assert!(validate_profile(&base.clone().with_profile(vec![label(&[2]), label(&[2])])).unwrap());
        let good = vec![label(&[2]), label(&[1, 1]), label(&[1, 1]), label(&[1, 1])];
        assert!(validate_profile(&base.clone().with_profile(good)).unwrap());
        let bad = vec![label(&[1, 1]), label(&[2]), label(&[1, 1]), label(&[1, 1])];
        assert!(!validate_profile(&base.clone().with_profile(bad)).unwrap());
        let odd = vec![label(&[2]), label(&[2]), label(&[2])];
        assert!(matches!(validate_profile(&base.with_profile(odd)), Err(Error::MalformedProfile(_))));
    }
}
