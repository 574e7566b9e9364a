use std::collections::BTreeSet;

use crosscap_core::contfrac::eval_ints;
use crosscap_core::d2tree::{
    children, default_t_values, generation, is_edge, is_vertex, mother, slope_path, territory,
};
use crosscap_core::exactfrac::{distance, reduce};
use crosscap_core::oracle::{build_ball, verify_tree};
use crosscap_core::{
    apply_mobius, crosscap_bw, crosscap_new, eval, mobius_of, normalize_lens, std_expand,
    ExtRational,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = ExtRational> {
    (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| reduce(n, d).unwrap())
}

fn extended() -> impl Strategy<Value = ExtRational> {
    prop_oneof![
        9 => finite(),
        1 => Just(ExtRational::infinity()),
    ]
}

fn non_negative() -> impl Strategy<Value = ExtRational> {
    (0i64..100_000, 1i64..100_000).prop_map(|(n, d)| reduce(n, d).unwrap())
}

/// A positive even vertex reached by a random walk of child steps from 2/1.
fn positive_vertex() -> impl Strategy<Value = ExtRational> {
    prop::collection::vec((0usize..8, any::<bool>()), 0..6).prop_map(|steps| {
        let mut x = reduce(2, 1).unwrap();
        for (k, neg) in steps {
            let t = 2 * k as i64 + 3;
            let t = if neg { -t } else { t - 2 };
            x = children(&x, &[BigInt::from(t)]).unwrap().remove(0);
        }
        x
    })
}

fn odd_t() -> impl Strategy<Value = BigInt> {
    (-40i64..40)
        .prop_map(|k| 2 * k + 1)
        .prop_filter("t = -1 names the mother", |&t| t != -1)
        .prop_map(BigInt::from)
}

proptest! {
    #[test]
    fn distance_is_a_symmetric_separating_function(a in extended(), b in extended()) {
        let d = distance(&a, &b);
        prop_assert_eq!(&d, &distance(&b, &a));
        prop_assert_eq!(d.is_zero(), a == b);
    }

    #[test]
    fn reflection_preserves_distance(a in finite(), b in finite()) {
        prop_assert_eq!(distance(&a.neg(), &b.neg()), distance(&a, &b));
    }

    #[test]
    fn normalize_is_idempotent(p in 1i64..500, q in -2000i64..2000) {
        let p = 2 * p;
        if let Ok(l) = normalize_lens(p, q) {
            let again = normalize_lens(p, l.q_normalized.clone()).unwrap();
            prop_assert_eq!(&again.q_normalized, &l.q_normalized);
            prop_assert!(l.q_normalized >= BigInt::one());
            prop_assert!(BigInt::from(2) * &l.q_normalized <= BigInt::from(p));
            let diff = (&l.q - &l.q_normalized).mod_floor(&BigInt::from(p));
            let sum = (&l.q + &l.q_normalized).mod_floor(&BigInt::from(p));
            prop_assert!(diff.is_zero() || sum.is_zero());
        }
    }

    #[test]
    fn expansion_round_trips(x in non_negative()) {
        let cf = std_expand(&x).unwrap();
        prop_assert_eq!(cf.value(), x.clone());
        let t = cf.terms();
        prop_assert!(!t[0].is_negative());
        prop_assert!(t[1..].iter().all(|a| a >= &BigInt::one()));
        if t.len() > 1 || x >= reduce(2, 1).unwrap() {
            prop_assert!(cf.last() >= &BigInt::from(2));
        }
    }

    #[test]
    fn mobius_matches_eval(a in prop::collection::vec(-50i64..50, 0..8), x in extended()) {
        let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
        let m = mobius_of(&a);
        let mut seq: Vec<ExtRational> = a.iter().rev().cloned().map(ExtRational::integer).collect();
        seq.push(x.clone());
        prop_assert_eq!(apply_mobius(&m, &x).unwrap(), eval(&seq).unwrap());
        let n = a.len() as u32;
        prop_assert_eq!(m.det(), BigInt::from(-1).pow(n));
    }

    #[test]
    fn non_negative_terms_give_non_negative_matrix(a in prop::collection::vec(0i64..50, 0..8)) {
        let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
        let m = mobius_of(&a);
        prop_assert!([&m.a11, &m.a12, &m.a21, &m.a22].iter().all(|e| !e.is_negative()));
    }

    #[test]
    fn mother_of_child_is_parent(x in positive_vertex(), t in odd_t()) {
        let c = children(&x, &[t]).unwrap().remove(0);
        prop_assert!(is_vertex(&c));
        prop_assert!(is_edge(&x, &c).unwrap());
        prop_assert_eq!(mother(&c).unwrap(), x.clone());
        prop_assert_eq!(generation(&c).unwrap(), generation(&x).unwrap() + 1);
        prop_assert!(territory(&x).unwrap().contains(&c));
    }

    #[test]
    fn mother_steps_down(x in positive_vertex()) {
        let m = mother(&x).unwrap();
        prop_assert_eq!(distance(&x, &m), 2u32.into());
        prop_assert!(m.size().unwrap() < x.size().unwrap());
        prop_assert!(is_vertex(&m));
        let t = territory(&x).unwrap();
        prop_assert!(t.contains(&x));
        prop_assert!(!t.contains(&m));
        prop_assert_eq!(mother(&x.neg()).unwrap(), m.neg());
    }

    #[test]
    fn territories_nest(x in positive_vertex(), t1 in odd_t(), t2 in odd_t()) {
        prop_assume!(t1 != t2);
        let cs = children(&x, &[t1, t2]).unwrap();
        let tx = territory(&x).unwrap();
        let t1 = territory(&cs[0]).unwrap();
        let t2 = territory(&cs[1]).unwrap();
        prop_assert!(tx.contains_interval(&t1));
        prop_assert!(tx.contains_interval(&t2));
        prop_assert!(!t1.contains(&x));
        prop_assert!(!t2.contains(&x));
        prop_assert!(t1.is_disjoint(&t2));
    }

    #[test]
    fn no_edges_across_the_root(a in finite(), b in finite()) {
        let a = reduce(2 * a.numer().abs(), a.denom_int()).unwrap();
        let b = reduce(-2 * b.numer().abs(), b.denom_int()).unwrap();
        prop_assume!(!a.is_zero() && !b.is_zero() && is_vertex(&a) && is_vertex(&b));
        prop_assert!(!is_edge(&a, &b).unwrap());
    }

    #[test]
    fn path_is_an_edge_path(p in 1i64..300, q in -1000i64..1000) {
        let p = 2 * p;
        prop_assume!(q != 0 && p.gcd(&q) == 1);
        let r = slope_path(p, q).unwrap();
        prop_assert_eq!(&r.slopes[0], &reduce(0, 1).unwrap());
        prop_assert_eq!(r.slopes.last().unwrap(), &reduce(p, q).unwrap());
        for w in r.slopes.windows(2) {
            prop_assert!(is_edge(&w[0], &w[1]).unwrap());
        }
        let distinct: BTreeSet<_> = r.slopes.iter().collect();
        prop_assert_eq!(distinct.len(), r.slopes.len());
        prop_assert_eq!(r.crosscap, r.slopes.len() - 1);
        prop_assert_eq!(r.euler_char, 2 - r.crosscap as i64);
        for (s, e) in r.slopes.iter().zip(&r.expansions) {
            prop_assert_eq!(&e.value(), &if s.is_negative() { s.neg() } else { s.clone() });
        }
        let lens = normalize_lens(p, q).unwrap();
        prop_assert_eq!(BigInt::from(r.crosscap), crosscap_bw(&lens).total);
        prop_assert_eq!(slope_path(p, q + p).unwrap().crosscap, r.crosscap);
        prop_assert_eq!(slope_path(p, -q).unwrap().crosscap, r.crosscap);
    }

    #[test]
    fn big_integers_survive(k in 40u32..120) {
        // p/q with p ≈ 2^k exercises arbitrary precision all the way down.
        let p = BigInt::from(2).pow(k) + BigInt::from(2);
        let q = BigInt::from(3).pow(k / 2);
        prop_assume!(p.gcd(&q).is_one());
        let lens = normalize_lens(p.clone(), q.clone()).unwrap();
        prop_assert_eq!(crosscap_bw(&lens).total, crosscap_new(&lens).total);
    }
}

#[test]
fn even_numerators_propagate_along_distance_two() {
    let mut pts = Vec::new();
    for n in -30i64..=30 {
        for d in 0i64..=30 {
            if n.gcd(&d) == 1 {
                pts.push(reduce(n, d).unwrap());
            }
        }
    }
    for a in pts.iter().filter(|a| a.numer().is_even()) {
        for b in &pts {
            if distance(a, b) == 2u32.into() {
                assert!(b.numer().is_even(), "{a} -> {b}");
            }
        }
    }
}

fn inverse_mod(q: i64, p: i64) -> i64 {
    let e = q.extended_gcd(&p);
    e.x.rem_euclid(p)
}

#[test]
fn formulas_agree_and_are_homeomorphism_invariant() {
    for p in (2i64..=120).step_by(2) {
        for q in (1..p).filter(|q| q.gcd(&p) == 1) {
            let lens = normalize_lens(p, q).unwrap();
            let bw = crosscap_bw(&lens);
            let new = crosscap_new(&lens);
            assert_eq!(bw.total, new.total, "L({p},{q})");
            let sum: BigInt = bw.b.iter().sum();
            assert!(sum.is_even());
            let last = new.alpha_prime.last().unwrap();
            assert!(
                last.is_infinite() || last.numer().is_even(),
                "L({p},{q}) ends at {last}"
            );
            for q2 in [p - q, inverse_mod(q, p)] {
                let other = crosscap_bw(&normalize_lens(p, q2).unwrap()).total;
                assert_eq!(other, bw.total, "L({p},{q}) vs L({p},{q2})");
            }
        }
    }
}

#[test]
fn ball_edges_are_mother_edges() {
    let b = build_ball(150);
    for &(i, j) in &b.edges {
        let (small, big) = if b.size_of(i) < b.size_of(j) {
            (i, j)
        } else {
            (j, i)
        };
        assert_eq!(mother(&b.vertices[big]).unwrap(), b.vertices[small]);
    }
}

#[test]
fn ball_census_is_monotone() {
    let mut prev: BTreeSet<ExtRational> = BTreeSet::new();
    for n in 1..=40 {
        let b = build_ball(n);
        let now: BTreeSet<ExtRational> = b.vertices.iter().cloned().collect();
        assert!(prev.is_subset(&now));
        for v in &now {
            assert!(v.size().unwrap() <= n.into());
        }
        for v in now.difference(&prev) {
            assert_eq!(v.size().unwrap(), n.into());
        }
        assert!(verify_tree(n).passed());
        prev = now;
    }
}

#[test]
fn default_children_stay_in_order() {
    // 1, -3, 3, -5, 5, -7 around 2/1 = [2]
    let x = reduce(2, 1).unwrap();
    let cs = children(&x, &default_t_values(&x, 6)).unwrap();
    let expect: Vec<ExtRational> = [(4, 1), (4, 3), (8, 3), (8, 5), (12, 5), (12, 7)]
        .into_iter()
        .map(|(n, d)| reduce(n, d).unwrap())
        .collect();
    assert_eq!(cs, expect);
    assert_eq!(
        eval_ints(&[BigInt::from(2), BigInt::from(1), BigInt::from(4)]).unwrap(),
        reduce(14, 5).unwrap()
    );
}
