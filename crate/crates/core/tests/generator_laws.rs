use std::collections::BTreeMap;

use mrba_core::generator::{mul_elements, AElement, ATensor, UNIT};
use mrba_core::rational::{one, zero};
use mrba_core::{FreePrimitiveGenerator, GeneratorBialgebra, Rational};

fn single(i: &str) -> AElement {
    BTreeMap::from([(i.to_string(), one())])
}

fn add_into<K: Ord>(acc: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    let slot = acc.entry(k).or_insert_with(zero);
    *slot += c;
}

fn clean<K: Ord>(m: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
    m.into_iter().filter(|(_, c)| *c != zero()).collect()
}

fn tensor_mul(gen: &dyn GeneratorBialgebra, s: &ATensor, t: &ATensor) -> ATensor {
    let mut out = BTreeMap::new();
    for ((a, b), c) in s {
        for ((x, y), d) in t {
            for (l, e) in gen.mul(a, x).unwrap() {
                for (r, f) in gen.mul(b, y).unwrap() {
                    add_into(&mut out, (l.clone(), r), c * d * &e * f);
                }
            }
        }
    }
    clean(out)
}

fn alphabets() -> Vec<FreePrimitiveGenerator> {
    [vec!['a'], vec!['a', 'b'], vec!['a', 'b', 'c']]
        .into_iter()
        .map(|a| FreePrimitiveGenerator::new(a).unwrap())
        .collect()
}

#[test]
fn associative_with_unit() {
    for gen in alphabets() {
        let b = gen.basis_up_to(4);
        for x in &b {
            assert_eq!(gen.mul(UNIT, x).unwrap(), single(x));
            assert_eq!(gen.mul(x, UNIT).unwrap(), single(x));
            for y in &b {
                let xy = gen.mul(x, y).unwrap();
                for z in &b {
                    let lhs = mul_elements(&gen, &xy, &single(z)).unwrap();
                    let rhs = mul_elements(&gen, &single(x), &gen.mul(y, z).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn coassociative_and_counital() {
    for gen in alphabets() {
        for x in gen.basis_up_to(4) {
            let d = gen.coproduct(&x).unwrap();
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            let (mut eps_l, mut eps_r) = (BTreeMap::new(), BTreeMap::new());
            for ((a, b), c) in &d {
                for ((p, q), e) in gen.coproduct(a).unwrap() {
                    add_into(&mut left, (p, q, b.clone()), c * e);
                }
                for ((p, q), e) in gen.coproduct(b).unwrap() {
                    add_into(&mut right, (a.clone(), p, q), c * e);
                }
                add_into(&mut eps_l, b.clone(), c * gen.counit(a).unwrap());
                add_into(&mut eps_r, a.clone(), c * gen.counit(b).unwrap());
            }
            assert_eq!(clean(left), clean(right), "x = {x}");
            assert_eq!(clean(eps_l), single(&x));
            assert_eq!(clean(eps_r), single(&x));
        }
    }
}

#[test]
fn coproduct_is_multiplicative() {
    for gen in alphabets() {
        let b = gen.basis_up_to(4);
        for x in &b {
            for y in &b {
                let mut lhs = BTreeMap::new();
                for (z, c) in gen.mul(x, y).unwrap() {
                    for (k, d) in gen.coproduct(&z).unwrap() {
                        add_into(&mut lhs, k, &c * d);
                    }
                }
                let rhs = tensor_mul(&gen, &gen.coproduct(x).unwrap(), &gen.coproduct(y).unwrap());
                assert_eq!(clean(lhs), rhs, "x = {x}, y = {y}");
                let eps = gen.mul(x, y).unwrap().iter().map(|(z, c)| c * gen.counit(z).unwrap()).sum::<Rational>();
                assert_eq!(eps, gen.counit(x).unwrap() * gen.counit(y).unwrap());
            }
        }
    }
}

#[test]
fn filtered_basis() {
    for gen in alphabets() {
        let b = gen.basis_up_to(4);
        let degree_zero: Vec<_> = b.iter().filter(|x| gen.degree(x).unwrap() == 0).collect();
        assert_eq!(degree_zero, vec![UNIT]);
        for x in &b {
            for ((l, r), _) in gen.coproduct(x).unwrap() {
                assert!(gen.degree(&l).unwrap() + gen.degree(&r).unwrap() <= gen.degree(x).unwrap());
            }
            for y in &b {
                for (z, _) in gen.mul(x, y).unwrap() {
                    assert!(gen.degree(&z).unwrap() <= gen.degree(x).unwrap() + gen.degree(y).unwrap());
                }
            }
        }
    }
}
