use std::sync::Arc;

use super::*;
use crate::error::Error;
use crate::generator::FreePrimitiveGenerator;
use crate::rational::{int, ratio};
use crate::word::tests::{br, l, w};
use crate::Params;

fn engine(lambda: Rational) -> Engine {
    let gen = Arc::new(FreePrimitiveGenerator::new(['a', 'b']).unwrap());
    Engine::new(Params::hopf(lambda), gen)
}

fn lw(s: &str) -> Word {
    w(vec![l(s)])
}

fn p1() -> Word {
    Word::bracket(Word::unit())
}

fn t2(terms: Vec<(Word, Word, Rational)>) -> Tensor2 {
    terms.into_iter().map(|(a, b, c)| ([a, b], c)).collect()
}

#[test]
fn counit_examples() {
    for lambda in [int(1), int(2), ratio(1, 2)] {
        let e = engine(lambda.clone());
        assert_eq!(e.counit(&LinComb::unit()), int(1));
        assert_eq!(e.counit(&p1().into()), -lambda.clone());
        assert_eq!(e.counit(&w(vec![l("a"), br(lw("b"))]).into()), int(0));
        assert_eq!(e.counit(&Word::bracket(p1()).into()), &lambda * &lambda);
    }
}

#[test]
fn coproduct_examples() {
    let lambda = ratio(2, 3);
    let e = engine(lambda.clone());
    assert_eq!(e.coproduct(&LinComb::unit()).unwrap(), Tensor2::unit());

    let got = e.coproduct(&p1().into()).unwrap();
    let want = t2(vec![
        (p1(), Word::unit(), int(1)),
        (Word::unit(), p1(), int(1)),
        (Word::unit(), Word::unit(), lambda.clone()),
    ]);
    assert_eq!(got, want);

    let pa = Word::bracket(lw("a"));
    let got = e.coproduct(&pa.clone().into()).unwrap();
    let want = t2(vec![
        (pa.clone(), Word::unit(), int(1)),
        (lw("a"), Word::unit(), lambda.clone()),
        (lw("a"), p1(), int(1)),
        (Word::unit(), pa, int(1)),
    ]);
    assert_eq!(got, want);
}

#[test]
fn coproduct_requires_hopf_weight() {
    let gen = Arc::new(FreePrimitiveGenerator::new(['a']).unwrap());
    let e = Engine::new(Params::algebra(int(1), int(3)), gen);
    assert!(matches!(e.coproduct(&LinComb::unit()), Err(Error::WeightMismatch { .. })));
    assert!(e.tensor2_op(&Tensor2::unit()).is_err());
    assert!(e.tensor3_op(&Tensor3::unit()).is_err());
}

#[test]
fn tensor_mul_examples() {
    let kappa = int(-1);
    let e = engine(int(1));
    let u = lw("a");
    let v = Word::bracket(lw("b"));
    let uv = Tensor2::term(int(1), [u.clone(), v.clone()]);
    assert_eq!(e.tensor2_mul(&Tensor2::unit(), &uv), uv);

    let a1 = Tensor2::term(int(1), [lw("a"), Word::unit()]);
    let b1 = Tensor2::term(int(1), [Word::unit(), lw("b")]);
    assert_eq!(e.tensor2_mul(&a1, &b1), Tensor2::term(int(1), [lw("a"), lw("b")]));

    let pa = Tensor2::term(int(1), [Word::bracket(lw("a")), Word::unit()]);
    let pb = Tensor2::term(int(1), [Word::bracket(lw("b")), Word::unit()]);
    let got = e.tensor2_mul(&pa, &pb);
    let first = e.mul(&Word::bracket(lw("a")).into(), &Word::bracket(lw("b")).into());
    assert_eq!(got, Tensor2::from_factors([&first, &LinComb::unit()]));
    assert_eq!(got.coeff(&[lw("ab"), Word::unit()]), kappa);
}

#[test]
fn tensor2_op_examples() {
    let lambda = int(3);
    let e = engine(lambda.clone());
    let u = Word::unit();
    assert_eq!(
        e.tensor2_op(&Tensor2::unit()).unwrap(),
        t2(vec![(p1(), u.clone(), int(1)), (u.clone(), u.clone(), lambda.clone()), (u.clone(), p1(), int(1))])
    );
    assert_eq!(
        e.tensor2_op(&Tensor2::term(int(1), [lw("a"), u.clone()])).unwrap(),
        t2(vec![
            (Word::bracket(lw("a")), u.clone(), int(1)),
            (lw("a"), u.clone(), lambda.clone()),
            (lw("a"), p1(), int(1))
        ])
    );
    assert_eq!(
        e.tensor2_op(&Tensor2::term(int(1), [u.clone(), lw("a")])).unwrap(),
        Tensor2::term(int(1), [u.clone(), Word::bracket(lw("a"))])
    );
}

#[test]
fn tensor3_op_examples() {
    let lambda = int(2);
    let e = engine(lambda.clone());
    let u = Word::unit();
    let got = e.tensor3_op(&Tensor3::unit()).unwrap();
    let want: Tensor3 = [
        ([p1(), u.clone(), u.clone()], int(1)),
        ([u.clone(), u.clone(), u.clone()], &lambda + &lambda),
        ([u.clone(), p1(), u.clone()], int(1)),
        ([u.clone(), u.clone(), p1()], int(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);

    let got = e.tensor3_op(&Tensor3::term(int(1), [lw("a"), u.clone(), u.clone()])).unwrap();
    assert_eq!(got.coeff(&[Word::bracket(lw("a")), u.clone(), u.clone()]), int(1));
    // λa⊗1⊗1 from the first summand and again from the second, since ε(1) = 1
    assert_eq!(got.coeff(&[lw("a"), u.clone(), u.clone()]), &lambda + &lambda);
    assert_eq!(got.coeff(&[lw("a"), p1(), u.clone()]), int(1));
    assert_eq!(got.len(), 4);

    let got = e.tensor3_op(&Tensor3::term(int(1), [u.clone(), u.clone(), lw("a")])).unwrap();
    assert_eq!(got, Tensor3::term(int(1), [u.clone(), u, Word::bracket(lw("a"))]));
}

#[test]
fn cocycle_golden() {
    let lambda = int(5);
    let e = engine(lambda);
    let u: LinComb = Word::unit().into();
    assert_eq!(e.coproduct(&e.apply_op(&u)).unwrap(), e.cocycle_rhs(&u).unwrap());
    let x: LinComb = w(vec![l("a"), br(lw("b"))]).into();
    assert_eq!(e.coproduct(&e.apply_op(&x)).unwrap(), e.cocycle_rhs(&x).unwrap());
}

#[test]
fn counit_laws_small() {
    let e = engine(ratio(1, 2));
    let x: LinComb = w(vec![br(w(vec![l("a"), br(Word::unit())])), l("b")]).into();
    let d = e.coproduct(&x).unwrap();
    assert_eq!(e.counit_left(&d), x);
    assert_eq!(e.counit_right(&d), x);
}
