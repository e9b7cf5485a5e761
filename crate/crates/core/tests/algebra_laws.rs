mod common;

use common::{free, hopf_engine, rng, sampler};
use mrba_core::algebra::{universal_map, ScalarMrba, ScaledIdentityMrba, TargetMrba};
use mrba_core::rational::{int, ratio};
use mrba_core::{AElement, Engine, LinComb, Params, Word};

#[test]
fn associativity_random_triples() {
    let e = hopf_engine(int(1), &['a', 'b']);
    let s = sampler(&e, 3, 3);
    let mut r = rng(11);
    for _ in 0..300 {
        let (x, y, z) = (s.word(&mut r), s.word(&mut r), s.word(&mut r));
        let (x, y, z): (LinComb, LinComb, LinComb) = (x.into(), y.into(), z.into());
        let left = e.mul(&e.mul(&x, &y), &z);
        let right = e.mul(&x, &e.mul(&y, &z));
        assert_eq!(left, right, "x = {x}, y = {y}, z = {z}");
    }
}

#[test]
fn products_stay_canonical() {
    let e = hopf_engine(ratio(1, 2), &['a', 'b']);
    let s = sampler(&e, 3, 3);
    let mut r = rng(12);
    for _ in 0..300 {
        let p = e.mul(&s.lincomb(&mut r, 2), &s.lincomb(&mut r, 2));
        assert!(p.words().all(Word::is_canonical));
    }
}

#[test]
fn unit_law_random() {
    let e = hopf_engine(int(2), &['a', 'b']);
    let s = sampler(&e, 3, 3);
    let mut r = rng(13);
    for _ in 0..200 {
        let u = s.lincomb(&mut r, 3);
        assert_eq!(e.mul(&LinComb::unit(), &u), u);
        assert_eq!(e.mul(&u, &LinComb::unit()), u);
    }
}

#[test]
fn mrb_identity_across_weights() {
    let gen = free(&['a', 'b']);
    let settings =
        [Params::hopf(int(1)), Params::hopf(int(2)), Params::hopf(ratio(1, 2)), Params::algebra(int(1), int(3))];
    for (k, params) in settings.into_iter().enumerate() {
        let e = Engine::new(params, gen.clone()).with_cache(true);
        let s = sampler(&e, 2, 3);
        let mut r = rng(20 + k as u64);
        for _ in 0..150 {
            let (u, v) = (s.lincomb(&mut r, 2), s.lincomb(&mut r, 2));
            let res = e.check_mrb(&u, &v);
            assert!(res.is_zero(), "u = {u}, v = {v}, residual = {res}");
        }
    }
}

#[test]
fn product_respects_filtration() {
    let e = hopf_engine(int(1), &['a', 'b']);
    let s = sampler(&e, 3, 3);
    let mut r = rng(14);
    for _ in 0..300 {
        let (u, v) = (s.lincomb(&mut r, 2), s.lincomb(&mut r, 2));
        let bound = e.max_degree(&u).unwrap() + e.max_degree(&v).unwrap();
        for w in e.mul(&u, &v).words() {
            assert!(e.degree(w) <= bound);
        }
    }
}

#[test]
fn universal_map_into_scaled_identity_is_a_morphism() {
    let lambda = ratio(3, 2);
    let e = hopf_engine(lambda.clone(), &['a', 'b']);
    let target = ScaledIdentityMrba { lambda: lambda.clone(), gen: free(&['a', 'b']) };
    let f = |i: &str| AElement::from([(i.to_string(), int(1))]);
    let s = sampler(&e, 3, 3);
    let mut r = rng(15);
    for _ in 0..150 {
        let (u, v) = (s.lincomb(&mut r, 2), s.lincomb(&mut r, 2));
        let fu = universal_map(&e, &target, f, &u).unwrap();
        let fv = universal_map(&e, &target, f, &v).unwrap();
        assert_eq!(universal_map(&e, &target, f, &e.mul(&u, &v)).unwrap(), target.mul(&fu, &fv));
        assert_eq!(universal_map(&e, &target, f, &e.apply_op(&u)).unwrap(), target.op(&fu));
    }
}

#[test]
fn universal_map_extends_generator_map() {
    let lambda = int(2);
    let e = hopf_engine(lambda.clone(), &['a', 'b']);
    let gen = free(&['a', 'b']);
    let target = ScaledIdentityMrba { lambda: lambda.clone(), gen: gen.clone() };
    let scalar = ScalarMrba { lambda };
    for idx in gen.basis_up_to(3) {
        let j = e.embed(&idx).unwrap();
        let img = universal_map(&e, &target, |i| AElement::from([(i.to_string(), int(1))]), &j).unwrap();
        assert_eq!(img, AElement::from([(idx.clone(), int(1))]));
        let eps = universal_map(&e, &scalar, |i| gen.counit(i).unwrap(), &j).unwrap();
        assert_eq!(eps, gen.counit(&idx).unwrap());
    }
}
