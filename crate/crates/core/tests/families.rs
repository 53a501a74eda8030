use cogroupoid::families::*;
use cogroupoid::hopf::*;
use cogroupoid::matrix::{e_q, f_q};
use cogroupoid::normal_form::*;
use cogroupoid::tensor::Tensor;
use cogroupoid::{check_morphism, AlgebraMorphism, Error, ExactMatrix, FreeElement, Scalar, Word};

fn q() -> Scalar {
    Scalar::param("q")
}

fn f3() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[-2, 3, 2], &[-2, 1, 2], &[3, -1, 0]])
}

fn klein_pair() -> Cogroupoid {
    let one = GroupCocycle::trivial(FiniteGroup::klein());
    group_cocycle_cogroupoid(&[("1".into(), one), ("σ".into(), GroupCocycle::klein_bilinear())]).unwrap()
}

#[test]
fn b_of_e_q_invariant() {
    let b = make_b(&e_q(&q()), &e_q(&q()), "O_q(SL2)").unwrap();
    assert!(!b.expect_zero);
    assert_eq!(b.invariants[0].1, &(-&q()) - &q().inv().unwrap());
    assert_eq!(b.algebra.relations().len(), 8);
    let g = make_b(&e_q(&q()), &ExactMatrix::identity(2), "zero").unwrap();
    assert!(g.expect_zero);
}

#[test]
fn h_of_f_q() {
    let h = make_h(&f_q(&q()), &f_q(&q()), "H(q)").unwrap();
    assert!(!h.expect_zero);
    assert_eq!(h.algebra.num_gens(), 8);
    let c = h_cogroupoid(&[("Fq".into(), f_q(&q()))]).unwrap();
    assert!(check_morphism(c.counit(0)).unwrap().passed);
    let bad = make_h(&f_q(&q()), &ExactMatrix::from_ints(&[&[1, 1], &[0, 2]]), "zero").unwrap();
    assert!(bad.expect_zero);
}

#[test]
fn delta_of_b_is_matrix_comultiplication() {
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(2))), ("F".into(), f3())]).unwrap();
    // a_12 in C(E,F) goes to Σ_k a_1k ⊗ a_k2 through F: three summands
    let d = c.delta(0, 1, 1);
    assert_eq!(d.images[1].terms().count(), 3);
    assert!(check_morphism(d).unwrap().passed);
    assert!(check_morphism(c.counit(0)).unwrap().passed);
}

#[test]
fn dropped_summand_is_caught() {
    let c = b_cogroupoid(&[("E".into(), e_q(&q()))]).unwrap();
    let d = c.delta(0, 0, 0);
    let mut img = Tensor::zero();
    for (k, v) in d.images[0].terms().skip(1) {
        img.add_term(k.clone(), v.clone());
    }
    let cert = check_morphism(&d.with_image(0, img)).unwrap();
    assert!(!cert.passed);
    assert!(cert.failures().next().unwrap().residue.is_some());
}

#[test]
fn r_tensor_values() {
    let one = AstMatrix::trivial(1);
    // R^{12}_{21}(1): (k,l,i,j) = (1,2,2,1), 0-based (0,1,1,0)
    assert_eq!(r_tensor(&one, 0, 1, 1, 0), Scalar::int(4));
    assert_eq!(r_tensor(&one, 0, 0, 1, 1), Scalar::zero());
    assert_eq!(r_tensor(&one, 0, 0, 0, 0), Scalar::int(4));
    let m = AstMatrix::signs(2, &[(0, 1)]);
    // i* ≠ l* vanishes
    assert_eq!(r_tensor(&m, 0, 2, 0, 2), Scalar::zero());
}

#[test]
fn ast_preconditions() {
    assert!(matches!(AstMatrix::new(vec![vec![Scalar::one(), Scalar::int(2)], vec![Scalar::int(2), Scalar::one()]]), Err(Error::NotAst(_))));
    let p = AstMatrix::generic(2, "p");
    assert!(!p.is_plus_minus_one());
    assert!(matches!(make_s2n(&p, &p, "O"), Err(Error::NotPlusMinusOne(_))));
    assert_eq!(p.get(1, 0), &Scalar::param("p12").inv().unwrap());
}

#[test]
fn trivial_gl_is_commutative() {
    let one = AstMatrix::trivial(2);
    let o = make_gl_pq(&one, &one, "O(GL2)").unwrap();
    assert_eq!(o.num_gens(), 8);
    assert!(o.relations().len() <= 3 * 16 + 2 * 4);
    let eng = o.engine(2).unwrap();
    for a in 0..8u16 {
        for b in 0..8u16 {
            let ab = FreeElement::word(Word::from_slice(&[a, b]));
            let ba = FreeElement::word(Word::from_slice(&[b, a]));
            assert!(eng.reduce(&ab.sub(&ba)).is_zero());
        }
    }
}

#[test]
fn gl_torus_witness() {
    for n in [2, 3] {
        let p = AstMatrix::generic(n, "p");
        let o = make_gl_pq(&p, &AstMatrix::trivial(n), "O").unwrap();
        let t = quantum_torus(&p).unwrap();
        let cert = quantum_torus_witness(&o, &t, &gl_torus_images(n)).unwrap();
        assert!(cert.passed && cert.exact, "{}", cert.summary_line());
    }
}

#[test]
fn gl_torus_witness_detects_wrong_sign() {
    let p = AstMatrix::generic(2, "p");
    let o = make_gl_pq(&p, &AstMatrix::trivial(2), "O").unwrap();
    let t = quantum_torus(&p).unwrap();
    let mut images = gl_torus_images(2);
    images[0] = images[0].scale(&Scalar::int(-1));
    assert!(!quantum_torus_witness(&o, &t, &images).unwrap().passed);
}

#[test]
fn s4_twisted_witness_and_explicit_relations() {
    let p = AstMatrix::signs(2, &[(0, 1)]);
    let one = AstMatrix::trivial(2);
    let o = make_s2n(&p, &one, "O").unwrap();
    let t = twisted_group_algebra(&p).unwrap();
    assert!(quantum_torus_witness(&o, &t, &s2n_twisted_images(2)).unwrap().passed);
    let swapped = make_s2n(&one, &p, "O").unwrap();
    assert!(quantum_torus_witness(&swapped, &t, &s2n_twisted_images(2)).unwrap().passed);
    let mut images = s2n_twisted_images(2);
    images[1] = images[1].scale(&Scalar::int(-1));
    assert!(!quantum_torus_witness(&o, &t, &images).unwrap().passed);
    // both forms of the exchange relations generate the same ideal
    let ex = make_s2n_explicit(&p, &one, "O").unwrap();
    let (e1, e2) = (o.engine(2).unwrap(), ex.engine(2).unwrap());
    assert!(ex.relations().iter().all(|r| e1.reduce(r).is_zero()));
    assert!(o.relations().iter().all(|r| e2.reduce(r).is_zero()));
}

#[test]
fn trivial_s4_is_commutative() {
    let one = AstMatrix::trivial(2);
    let o = make_s2n(&one, &one, "O(S4)").unwrap();
    let eng = o.engine(2).unwrap();
    let ab = FreeElement::word(Word::from_slice(&[0, 5]));
    let ba = FreeElement::word(Word::from_slice(&[5, 0]));
    assert!(eng.reduce(&ab.sub(&ba)).is_zero());
}

#[test]
fn cocycle_algebras() {
    let g = FiniteGroup::klein();
    let s = GroupCocycle::klein_bilinear();
    let one = GroupCocycle::trivial(g.clone());
    let doi = make_group_cocycle_algebra(&s, &s, "H^σ").unwrap();
    // σ cancels: the group algebra, dimension 4
    let dims = doi.quotient_dims(3).unwrap();
    assert_eq!(dims.iter().sum::<usize>(), 4);
    let twisted = make_group_cocycle_algebra(&s, &one, "σH").unwrap();
    let eng = twisted.engine(3).unwrap();
    assert!(eng.is_complete());
    assert_eq!(eng.normal_words(3).iter().map(|v| v.len()).sum::<usize>(), 4);
    // associativity on all 64 triples of basis elements
    let basis: Vec<Word> = (0..4).map(|a| g.word(a)).collect();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                let l = eng.reduce(&eng.reduce(&FreeElement::word(a.concat(b))).mul(&FreeElement::word(c.clone())));
                let r = eng.reduce(&FreeElement::word(a.clone()).mul(&eng.reduce(&FreeElement::word(b.concat(c)))));
                assert_eq!(l, r);
            }
        }
    }
    let bad = GroupCocycle::new(g.clone(), vec![Scalar::int(2); 16]);
    assert!(matches!(bad, Err(Error::NotACocycle(_))));
}

#[test]
fn quadric_comodule_algebras() {
    let e = e_q(&q());
    let b = b_cogroupoid(&[("E".into(), e.clone())]).unwrap();
    let plane = make_amt(&e, &Scalar::zero(), b.hom(0, 0), "k_q[x,y]").unwrap();
    let x = FreeElement::gen(0);
    let y = FreeElement::gen(1);
    assert!(plane.algebra.equals_in_quotient(&y.mul(&x), &x.mul(&y).scale(&q()), 2).unwrap());
    assert!(plane.check().unwrap().passed);
    let weyl = make_amt(&e, &Scalar::one(), b.hom(0, 0), "A_1^q").unwrap();
    assert!(weyl.algebra.equals_in_quotient(&y.mul(&x), &x.mul(&y).scale(&q()).add(&FreeElement::one()), 2).unwrap());
    assert!(weyl.check().unwrap().passed);
    let r3 = ExactMatrix::from_ints(&[&[2, -1, 3], &[0, 1, 4], &[-2, 5, 1]]);
    let b3 = b_cogroupoid(&[("R".into(), r3.clone())]).unwrap();
    for t in [0, 1] {
        assert!(make_amt(&r3, &Scalar::int(t), b3.hom(0, 0), "A").unwrap().check().unwrap().passed);
    }
}

#[test]
fn b_pair_cogroupoid_axioms() {
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(2))), ("F".into(), f3())]).unwrap();
    assert!(check_structure_maps(&c).unwrap().passed);
    let cert = check_cogroupoid(&c, 2).unwrap();
    assert!(cert.passed, "{}", cert.summary_line());
}

#[test]
fn h_pair_cogroupoid_axioms() {
    let two = Scalar::int(2);
    let e = ExactMatrix::from_rows(vec![
        vec![Scalar::zero(), Scalar::zero(), two.clone()],
        vec![Scalar::one(), Scalar::zero(), Scalar::int(-5)],
        vec![Scalar::zero(), Scalar::one(), Scalar::ratio(5, 2)],
    ]);
    assert_eq!(e.trace(), f_q(&two).trace());
    assert_eq!(e.inverse().unwrap().trace(), f_q(&two).inverse().unwrap().trace());
    let c = h_cogroupoid(&[("Fq".into(), f_q(&two)), ("E".into(), e)]).unwrap();
    let cert = check_cogroupoid(&c, 2).unwrap();
    assert!(cert.passed, "{}", cert.summary_line());
}

#[test]
fn cocycle_cogroupoid_is_exact() {
    let c = klein_pair();
    let cert = check_cogroupoid(&c, 3).unwrap();
    assert!(cert.passed && cert.exact, "{}", cert.summary_line());
}

#[test]
fn multiparametric_cogroupoids() {
    let p = AstMatrix::generic(2, "p");
    let c = gl_cogroupoid(&[("p".into(), p), ("1".into(), AstMatrix::trivial(2))]).unwrap();
    assert!(check_cogroupoid(&c, 2).unwrap().passed);
    let s = AstMatrix::signs(2, &[(0, 1)]);
    let c = s2n_cogroupoid(&[("p".into(), s), ("1".into(), AstMatrix::trivial(2))]).unwrap();
    assert!(check_cogroupoid(&c, 2).unwrap().passed);
}

#[test]
fn hopf_axioms_and_corrupted_antipode() {
    let c = b_cogroupoid(&[("E".into(), e_q(&q()))]).unwrap();
    let h = c.hopf(0);
    assert!(check_hopf(&h, 2).unwrap().passed);
    // S without the transpose: a_12 and a_21 trade images
    let s = &h.antipode;
    let bad = s.with_image(1, s.images[2].clone()).with_image(2, s.images[1].clone());
    let mut broken = c.clone();
    broken.set_antipode(0, 0, bad);
    assert!(!check_cogroupoid(&broken, 2).unwrap().passed);
    let kg = group_cocycle_cogroupoid(&[("1".into(), GroupCocycle::trivial(FiniteGroup::abelian(&[2])))]).unwrap();
    assert!(check_hopf(&kg.hopf(0), 2).unwrap().passed);
}

#[test]
fn antipode_properties() {
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(2))), ("F".into(), f3())]).unwrap();
    assert!(check_antipode_properties(&c, 0, 1, 0, 2).unwrap().passed);
    assert!(check_antipode_properties(&c, 0, 0, 0, 2).unwrap().passed);
    let h = h_cogroupoid(&[("Fq".into(), f_q(&Scalar::int(2)))]).unwrap();
    assert!(check_antipode_properties(&h, 0, 0, 0, 2).unwrap().passed);
}

#[test]
fn delta_retraction_lemma() {
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(2))), ("F".into(), f3())]).unwrap();
    assert!(delta_retraction(&c, 0, 1, 1, &unit_coefficient, 2).unwrap().passed);
    assert!(delta_retraction(&c, 1, 0, 1, &unit_coefficient, 2).unwrap().passed);
    let zero = |_: &Word| Scalar::zero();
    assert!(matches!(delta_retraction(&c, 0, 1, 1, &zero, 2), Err(Error::Precondition(_))));
}

#[test]
fn counit_with_wrong_value_fails() {
    let c = b_cogroupoid(&[("E".into(), e_q(&q()))]).unwrap();
    let eps = AlgebraMorphism::to_field("ε'", c.hom(0, 0).clone(), vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::one()]);
    assert!(!check_morphism(&eps).unwrap().passed);
}
