//! Property checks shared by the property suites and the acceptance runner.

use std::cmp::Ordering;

use fdtc::braid::{full_twist_power, BraidWord};
use fdtc::classifier::{self, GeometryTransferInput, GeometryType, HypothesisStatus, NielsenThurston, Prong, Verdict, VerdictStatus};
use fdtc::cover::standard_cyclic;
use fdtc::dehornoy;
use fdtc::fdtc::{dehornoy_floor, fdtc_bounds, FdtcEngine, FdtcValue, PeriodicCertificate, RightVeeringStatus};
use fdtc::rational::Rational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::{artin_images, signed, PeriodicSample};

type Check = Result<(), TestCaseError>;

pub fn left_invariance((a, b, c): (BraidWord, BraidWord, BraidWord)) -> Check {
    let plain = dehornoy::compare(&a, &b).unwrap();
    let shifted = dehornoy::compare(&c.compose(&a).unwrap(), &c.compose(&b).unwrap()).unwrap();
    prop_assert_eq!(plain, shifted);
    Ok(())
}

/// Antisymmetry, reflexivity and transitivity: no cycles in the order.
pub fn acyclicity((a, b, c): (BraidWord, BraidWord, BraidWord)) -> Check {
    let ab = dehornoy::compare(&a, &b).unwrap();
    let bc = dehornoy::compare(&b, &c).unwrap();
    let ac = dehornoy::compare(&a, &c).unwrap();
    prop_assert_eq!(dehornoy::compare(&b, &a).unwrap(), ab.reverse());
    prop_assert_eq!(dehornoy::compare(&a, &a).unwrap(), Ordering::Equal);
    if ab != Ordering::Greater && bc != Ordering::Greater {
        prop_assert_ne!(ac, Ordering::Greater);
    }
    if ab == Ordering::Less && bc == Ordering::Less {
        prop_assert_eq!(ac, Ordering::Less);
    }
    Ok(())
}

/// Every conjugate of a positive generator is σ-positive.
pub fn subword_property((w, i): (BraidWord, u32)) -> Check {
    let n = w.strands();
    let i = (i % (n as u32 - 1)) + 1;
    let gen = BraidWord::from_signed(n, &[i as i32]).unwrap();
    let conj = w.invert().compose(&gen).unwrap().compose(&w).unwrap();
    prop_assert_eq!(dehornoy::sigma_class(&conj).unwrap(), dehornoy::SigmaClass::SigmaPositive);
    Ok(())
}

pub fn reduction_preserves_element(w: BraidWord) -> Check {
    let reduced = dehornoy::handle_reduce(&w).unwrap();
    let n = w.strands();
    prop_assert_eq!(artin_images(n, &signed(&w)), artin_images(n, &signed(&reduced)));
    Ok(())
}

pub fn floor_quasi_additivity((w, k): (BraidWord, i64)) -> Check {
    let shifted = full_twist_power(w.strands(), k).unwrap().compose(&w).unwrap();
    prop_assert_eq!(dehornoy_floor(&shifted).unwrap(), dehornoy_floor(&w).unwrap() + k);
    Ok(())
}

pub fn interval_nesting((w, m1, m2): (BraidWord, u32, u32)) -> Check {
    let (lo, hi) = (m1.min(m2), m1.max(m2));
    let coarse = fdtc_bounds(&w, lo).unwrap();
    let fine = fdtc_bounds(&w, hi).unwrap();
    prop_assert!(coarse.lower() <= fine.lower() && fine.upper() <= coarse.upper(), "{} not inside {}", fine, coarse);
    prop_assert!(fine.lower() <= fine.upper());
    Ok(())
}

/// `c(w²) = 2 c(w)`: the bracket for `w²` holds twice the bracket for `w`.
pub fn homogeneity(w: BraidWord) -> Check {
    let single = fdtc_bounds(&w, 8).unwrap();
    let double = fdtc_bounds(&w.power(2), 4).unwrap();
    let two = Rational::integer(2);
    prop_assert!(double.lower() <= single.lower() * two && single.upper() * two <= double.upper());
    Ok(())
}

pub fn conjugation_invariance(s: PeriodicSample) -> Check {
    let engine = FdtcEngine::default();
    let conj = engine.fdtc(&s.word, 6, 24).unwrap();
    let core = engine.fdtc(&s.core, 6, 24).unwrap();
    prop_assert_eq!(conj.exact_value(), Some(s.expected));
    prop_assert_eq!(core.exact_value(), Some(s.expected));
    Ok(())
}

fn mirror(w: &BraidWord) -> BraidWord {
    let letters: Vec<i32> = signed(w).into_iter().map(|l| -l).collect();
    BraidWord::from_signed(w.strands(), &letters).unwrap()
}

pub fn mirror_antisymmetry(w: BraidWord) -> Check {
    let engine = FdtcEngine::default();
    let v = engine.fdtc(&w, 6, 12).unwrap();
    let m = engine.fdtc(&mirror(&w), 6, 12).unwrap();
    prop_assert_eq!(v.is_exact(), m.is_exact());
    match (v.exact_value(), m.exact_value()) {
        (Some(a), Some(b)) => prop_assert_eq!(a, -b),
        _ => prop_assert!(
            m.lower().max(-v.upper()) <= m.upper().min(-v.lower()),
            "{} and {} are not mirror brackets",
            v,
            m
        ),
    }
    Ok(())
}

pub fn mirror_of_periodic(s: PeriodicSample) -> Check {
    let engine = FdtcEngine::default();
    let m = engine.fdtc(&mirror(&s.word), 6, 24).unwrap();
    prop_assert_eq!(m.exact_value(), Some(-s.expected));
    Ok(())
}

/// Randomized inputs for every rule.
#[derive(Clone, Debug)]
pub struct RuleInputs {
    pub fdtc: FdtcValue,
    pub n: usize,
    pub d: usize,
    pub fully_ramified: bool,
    pub link_geometry: Option<GeometryType>,
    pub lspace: Option<bool>,
    pub prongs: Option<Vec<Prong>>,
    pub pseudo_anosov: bool,
    pub rv: RightVeeringStatus,
    pub nt: Option<NielsenThurston>,
}

pub fn fdtc_value() -> impl Strategy<Value = FdtcValue> {
    prop_oneof![
        (1u64..=6, -18i64..=18).prop_map(|(period, twist)| FdtcValue::exact(PeriodicCertificate { period, twist })),
        (-16i64..=16, 0i64..=6, 1i64..=4).prop_map(|(num, width, den)| FdtcValue::Interval {
            lower: Rational::new(num, den),
            upper: Rational::new(num + width, den),
        }),
    ]
}

fn geometry_type() -> impl Strategy<Value = GeometryType> {
    prop_oneof![Just(GeometryType::SeifertFibered), Just(GeometryType::Toroidal), Just(GeometryType::Hyperbolic)]
}

fn nt_type() -> impl Strategy<Value = NielsenThurston> {
    prop_oneof![Just(NielsenThurston::Periodic), Just(NielsenThurston::Reducible), Just(NielsenThurston::PseudoAnosov)]
}

fn rv_status() -> impl Strategy<Value = RightVeeringStatus> {
    prop_oneof![
        Just(RightVeeringStatus::RightVeering),
        Just(RightVeeringStatus::NotRightVeering),
        Just(RightVeeringStatus::Indeterminate)
    ]
}

pub fn rule_inputs() -> impl Strategy<Value = RuleInputs> {
    (
        fdtc_value(),
        1usize..=7,
        2usize..=5,
        any::<bool>(),
        proptest::option::of(geometry_type()),
        proptest::option::of(any::<bool>()),
        proptest::option::of(prop::collection::vec((-2i64..=5, 0u64..=4).prop_map(|(k, p)| Prong { k, p }), 0..=2)),
        any::<bool>(),
        rv_status(),
        proptest::option::of(nt_type()),
    )
        .prop_map(|(fdtc, n, d, fully_ramified, link_geometry, lspace, prongs, pseudo_anosov, rv, nt)| RuleInputs {
            fdtc,
            n,
            d,
            fully_ramified,
            link_geometry,
            lspace,
            prongs,
            pseudo_anosov,
            rv,
            nt,
        })
}

pub fn evaluate_rules(i: &RuleInputs) -> Vec<Verdict> {
    let geometry = standard_cyclic(i.n, i.d).unwrap().geometry().unwrap();
    vec![
        classifier::rule_geometry_transfer(&GeometryTransferInput {
            fdtc: std::slice::from_ref(&i.fdtc),
            geometry: &geometry,
            fully_ramified: i.fully_ramified,
            base_geometry: i.link_geometry,
        }),
        classifier::rule_lspace_obstruction(&i.fdtc, i.n as u64, i.d as u64, i.link_geometry, i.lspace),
        classifier::rule_universal_tightness(i.prongs.as_deref(), i.pseudo_anosov, i.fully_ramified, Some(&geometry)),
        classifier::rule_looseness(i.rv, i.fully_ramified),
        classifier::rule_virtually_loose(i.rv),
        classifier::rule_overtwisted(&i.fdtc),
        classifier::rule_geometry_from_magnitude(&i.fdtc, i.nt),
    ]
}

/// A verdict is proved exactly when every hypothesis is satisfied.
pub fn verdict_sound(v: &Verdict) -> Check {
    let all = v.hypotheses.iter().all(|h| h.status == HypothesisStatus::Satisfied);
    prop_assert_eq!(v.status == VerdictStatus::Proved, all, "{:?}", v);
    if v.hypotheses.iter().any(|h| h.status == HypothesisStatus::Violated) {
        prop_assert_ne!(v.status, VerdictStatus::Proved);
    }
    Ok(())
}

/// Flipping one boolean input to its hypothesis-breaking value never leaves
/// a proof standing for rules that depend on it.
pub fn flipping_soundness(i: RuleInputs) -> Check {
    for v in evaluate_rules(&i) {
        verdict_sound(&v)?;
    }
    let mut broken = i.clone();
    broken.fully_ramified = false;
    let v = evaluate_rules(&broken);
    for idx in [0, 2, 3] {
        prop_assert_ne!(v[idx].status, VerdictStatus::Proved, "{:?}", v[idx]);
        verdict_sound(&v[idx])?;
    }
    let mut broken = i.clone();
    broken.rv = RightVeeringStatus::RightVeering;
    let v = evaluate_rules(&broken);
    prop_assert_ne!(v[3].status, VerdictStatus::Proved);
    prop_assert_ne!(v[4].status, VerdictStatus::Proved);
    let mut broken = i.clone();
    broken.link_geometry = None;
    let v = evaluate_rules(&broken);
    prop_assert_ne!(v[0].status, VerdictStatus::Proved);
    prop_assert_ne!(v[1].status, VerdictStatus::Proved);
    let mut broken = i;
    broken.pseudo_anosov = false;
    broken.nt = None;
    let v = evaluate_rules(&broken);
    prop_assert_ne!(v[2].status, VerdictStatus::Proved);
    prop_assert_ne!(v[6].status, VerdictStatus::Proved);
    Ok(())
}

/// Shrinking an FDTC bracket never withdraws a proof.
pub fn tightening_monotone((i, shrink_lo, shrink_hi): (RuleInputs, u8, u8)) -> Check {
    let (lo, hi) = (i.fdtc.lower(), i.fdtc.upper());
    let width = hi - lo;
    let a = lo + width * Rational::new(shrink_lo as i64 % 3, 6);
    let b = hi - width * Rational::new(shrink_hi as i64 % 3, 6);
    let mut tight = i.clone();
    tight.fdtc = FdtcValue::Interval { lower: a, upper: b };
    let before = evaluate_rules(&i);
    let after = evaluate_rules(&tight);
    for (x, y) in before.iter().zip(&after) {
        if x.status == VerdictStatus::Proved {
            prop_assert_eq!(y.status, VerdictStatus::Proved, "{:?} then {:?}", x, y);
        }
    }
    Ok(())
}

/// An interval straddling a threshold certifies neither side.
pub fn no_overreach((i, below): (RuleInputs, u8)) -> Check {
    let d = i.d as i64;
    let straddle = FdtcValue::Interval {
        lower: Rational::new(d * 4 - 1 - below as i64 % 3, 4),
        upper: Rational::new(d * 4 + 1, 4),
    };
    let v = classifier::rule_lspace_obstruction(&straddle, i.n as u64, i.d as u64, i.link_geometry, i.lspace);
    prop_assert_ne!(v.status, VerdictStatus::Proved);
    let around_zero = FdtcValue::Interval { lower: Rational::new(-1, 4), upper: Rational::new(below as i64 % 3, 4) };
    prop_assert_ne!(classifier::rule_overtwisted(&around_zero).status, VerdictStatus::Proved);
    let around_one = FdtcValue::Interval { lower: Rational::new(3, 4), upper: Rational::new(5 + below as i64 % 3, 4) };
    prop_assert_ne!(classifier::rule_geometry_from_magnitude(&around_one, i.nt).status, VerdictStatus::Proved);
    Ok(())
}
