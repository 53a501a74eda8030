use cogroupoid::families::*;
use cogroupoid::galois::*;
use cogroupoid::hopf::*;
use cogroupoid::matrix::e_q;
use cogroupoid::{ExactMatrix, FreeElement, Scalar};

fn f3() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[-2, 3, 2], &[-2, 1, 2], &[3, -1, 0]])
}

fn b_pair() -> Cogroupoid {
    b_cogroupoid(&[("E".into(), e_q(&Scalar::int(2))), ("F".into(), f3())]).unwrap()
}

fn klein_pair() -> Cogroupoid {
    let one = GroupCocycle::trivial(FiniteGroup::klein());
    group_cocycle_cogroupoid(&[("1".into(), one), ("σ".into(), GroupCocycle::klein_bilinear())]).unwrap()
}

fn fundamental(c: &Cogroupoid, x: usize, n: usize) -> MatrixComodule {
    let coeffs = (0..n * n).map(|k| FreeElement::gen(k as u16)).collect();
    MatrixComodule::new("V", c.hom(x, x).clone(), n, coeffs)
}

#[test]
fn klein_galois_is_exact_on_both_sides() {
    let c = klein_pair();
    for side in [Side::Left, Side::Right] {
        let cert = verify_galois(&c, 0, 1, side, 3).unwrap();
        assert!(cert.passed && cert.exact, "{}", cert.summary_line());
    }
}

#[test]
fn b_pair_left_galois_low_degree() {
    let cert = verify_galois(&b_pair(), 0, 1, Side::Left, 2).unwrap();
    assert!(cert.passed, "{}", cert.summary_line());
    assert!(!cert.exact);
}

#[test]
fn galois_detects_corrupted_antipode() {
    let mut c = klein_pair();
    let s = c.antipode(1, 0).clone();
    let flipped = s.with_image(1, s.images[1].scale(&Scalar::int(-1)));
    c.set_antipode(1, 0, flipped);
    assert!(!verify_galois(&c, 0, 1, Side::Left, 2).unwrap().passed);
}

#[test]
fn cotensor_of_fundamental_comodule() {
    let c = b_pair();
    let v = fundamental(&c, 0, 2);
    assert!(v.check(&c.hopf(0), 2).unwrap().passed);
    let cot = cotensor(&v, &c, 0, 1, 2).unwrap();
    assert!(cot.stabilized);
    assert_eq!(cot.dim(), 3);
    assert_eq!(cleftness_witness(&v, &cot, 2).unwrap(), Cleftness::NonCleft);
}

#[test]
fn cotensor_along_the_identity_is_inconclusive() {
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(2)))]).unwrap();
    let v = fundamental(&c, 0, 2);
    let cot = cotensor(&v, &c, 0, 0, 2).unwrap();
    assert_eq!(cot.dim(), 2);
    assert_eq!(cleftness_witness(&v, &cot, 2).unwrap(), Cleftness::Inconclusive);
}

#[test]
fn coinvariants_match_symmetric_polynomials() {
    // oracle: partitions of k into at most two parts, for two variables
    let one = AstMatrix::trivial(1);
    let o = make_s2n(&one, &one, "O").unwrap();
    let b = make_kpx(&one, &o, "k[x1,x2]").unwrap();
    let ci = coinvariants(&b, 4).unwrap();
    assert_eq!(ci.by_degree, vec![1, 1, 2, 2, 3]);
}

#[test]
fn character_checks() {
    let q = Scalar::int(2);
    let e = e_q(&q);
    let c = b_cogroupoid(&[("E".into(), e.clone()), ("F".into(), f3())]).unwrap();
    // the identity matrix is a character of B(E,E)
    assert!(matrix_character(c.hom(0, 0), &ExactMatrix::identity(2)).unwrap().passed);
    assert!(!matrix_character(c.hom(0, 0), &ExactMatrix::from_ints(&[&[1, 1], &[0, 1]])).unwrap().passed);
    let weyl = make_amt(&e, &Scalar::one(), c.hom(0, 0), "A").unwrap();
    assert!(!character_check(&weyl.algebra, &[Scalar::zero(), Scalar::zero()]).unwrap().passed);
    let plane = make_amt(&e, &Scalar::zero(), c.hom(0, 0), "A").unwrap();
    assert!(character_check(&plane.algebra, &[Scalar::zero(), Scalar::zero()]).unwrap().passed);
    assert!(character_check(&plane.algebra, &[Scalar::zero()]).is_err());
}
