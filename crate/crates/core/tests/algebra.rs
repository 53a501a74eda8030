use cogroupoid::families::make_b;
use cogroupoid::linalg::{rank_kernel_dense, sparse_kernel, sparse_rank, SparseVec};
use cogroupoid::matrix::{asymmetry_trace, e_q, f_q};
use cogroupoid::rewrite::RewriteSystem;
use cogroupoid::scalar::{parse_scalar, specialize_fraction, BigRational, Poly, ScalarError};
use cogroupoid::upoly::UPoly;
use cogroupoid::{ExactMatrix, FreeElement, Presentation, Scalar, Word};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn q() -> Scalar {
    Scalar::param("q")
}

fn at(name: &str, v: i64) -> BTreeMap<String, BigRational> {
    BTreeMap::from([(name.to_string(), BigRational::from_integer(BigInt::from(v)))])
}

fn int_matrix(rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_ints(rows)
}

#[test]
fn evaluation_at_one() {
    let e = &(-&q()) - &q().inv().unwrap();
    assert_eq!(e.specialize(&at("q", 1)).unwrap(), BigRational::from_integer(BigInt::from(-2)));
}

#[test]
fn raw_fraction_with_vanishing_denominator() {
    let x = Poly::var(cogroupoid::scalar::var("q"));
    let one = Poly::one();
    let num = x.mul(&x).sub(&one);
    let den = x.sub(&one);
    assert_eq!(specialize_fraction(&num, &den, &at("q", 1)), Err(ScalarError::DenominatorVanishes));
    // the reduced form is q + 1
    let s = Scalar::from_parts(num, den);
    assert_eq!(s, &q() + &Scalar::one());
    assert_eq!(s.specialize(&at("q", 1)).unwrap(), BigRational::from_integer(BigInt::from(2)));
}

#[test]
fn missing_parameter() {
    assert_eq!(q().specialize(&BTreeMap::new()), Err(ScalarError::MissingParameter("q".into())));
}

#[test]
fn parse_grammar() {
    assert_eq!(parse_scalar("(q^2 - 1)/(q - 1)").unwrap(), &q() + &Scalar::one());
    assert_eq!(parse_scalar("-1/q").unwrap(), -q().inv().unwrap());
    assert_eq!(parse_scalar("q^-2").unwrap(), q().pow(-2));
    assert_eq!(parse_scalar("3/6").unwrap(), Scalar::ratio(1, 2));
    assert_eq!(parse_scalar("p_12 * p_12").unwrap(), Scalar::param("p_12").pow(2));
    assert!(parse_scalar("1+").is_err());
    assert!(parse_scalar("Q").is_err());
    assert!(parse_scalar("(1").is_err());
}

#[test]
fn asymmetry_trace_of_e_q() {
    assert_eq!(asymmetry_trace(&e_q(&q())).unwrap(), &(-&q()) - &q().inv().unwrap());
    assert_eq!(asymmetry_trace(&e_q(&Scalar::int(2))).unwrap(), Scalar::ratio(-5, 2));
    let f = int_matrix(&[&[-2, 3, 2], &[-2, 1, 2], &[3, -1, 0]]);
    assert_eq!(f.det(), Scalar::int(12));
    assert_eq!(asymmetry_trace(&f).unwrap(), Scalar::ratio(-5, 2));
    assert!(asymmetry_trace(&ExactMatrix::zeros(2, 2)).is_err());
}

#[test]
fn f_q_is_diagonal() {
    let f = f_q(&q());
    assert_eq!(f.trace(), &q() + &q().inv().unwrap());
    assert_eq!(f.inverse().unwrap().trace(), f.trace());
}

#[test]
fn small_rank_and_kernel() {
    let s = Scalar::int;
    let (r, k) = rank_kernel_dense(&[vec![s(1), s(0), s(1)], vec![s(0), s(1), s(1)]], 3);
    assert_eq!(r, 2);
    assert_eq!(k, vec![vec![s(-1), s(-1), s(1)]]);
    let v: Vec<SparseVec> = vec![[(0, s(1))].into_iter().collect(), [(1, s(1))].into_iter().collect(), [(0, s(1)), (1, s(1))].into_iter().collect()];
    assert_eq!(sparse_rank(&v), 2);
    assert_eq!(sparse_kernel(&v).len(), 1);
}

#[test]
fn rational_canonical_forms() {
    let i2 = ExactMatrix::identity(2);
    assert_eq!(i2.rational_canonical_form(), i2);
    let xm1 = UPoly::x().sub(&UPoly::constant(Scalar::one()));
    assert_eq!(i2.invariant_factors(), vec![xm1.clone(), xm1]);
    let a = int_matrix(&[&[2, 0], &[1, 3]]);
    let d = int_matrix(&[&[2, 0], &[0, 3]]);
    assert_eq!(a.rational_canonical_form(), d.rational_canonical_form());
    // E_q^{-1} E_q^t = diag(-q, -1/q): one companion block of x² + (q + 1/q)x + 1
    let e = e_q(&q());
    let m = e.inverse().unwrap().mul(&e.transpose());
    assert_eq!(m, ExactMatrix::diag(vec![-q(), -q().inv().unwrap()]));
    let f = m.invariant_factors();
    assert_eq!(f.len(), 1);
    let expect = UPoly::x().mul(&UPoly::x()).add(&UPoly::x().scale(&(&q() + &q().inv().unwrap()))).add(&UPoly::constant(Scalar::one()));
    assert_eq!(f[0], expect);
}

fn plane(q: &Scalar, t: &Scalar) -> Presentation {
    let x = FreeElement::gen(0);
    let y = FreeElement::gen(1);
    let rel = y.mul(&x).sub(&x.mul(&y).scale(q)).sub(&FreeElement::scalar(t.clone()));
    Presentation::with_names("A", vec!["x".into(), "y".into()], vec![rel])
}

#[test]
fn quantum_plane_and_weyl_equalities() {
    let x = FreeElement::gen(0);
    let y = FreeElement::gen(1);
    let p = plane(&q(), &Scalar::zero());
    assert!(p.equals_in_quotient(&y.mul(&x), &x.mul(&y).scale(&q()), 2).unwrap());
    assert!(p.equals_in_quotient(&x, &x, 2).unwrap());
    let w = plane(&q(), &Scalar::one());
    assert!(w.equals_in_quotient(&y.mul(&x), &x.mul(&y).scale(&q()).add(&FreeElement::one()), 2).unwrap());
    assert!(!w.equals_in_quotient(&y.mul(&x), &x.mul(&y).scale(&q()), 2).unwrap());
    assert_eq!(p.ideal_slice(2).unwrap().len(), 1);
    assert_eq!(p.quotient_dims(2).unwrap(), vec![1, 2, 3]);
}

/// PBW oracle for O_q(SL_2): monomials a^i b^j c^k d^l with il = 0, so
/// (n+1)² in exact degree n.
fn sl2_pbw(n: usize) -> usize {
    (n + 1) * (n + 1)
}

#[test]
fn b_of_e_q_matches_pbw_count() {
    let b = make_b(&e_q(&q()), &e_q(&q()), "B").unwrap();
    let a = &b.algebra;
    assert_eq!(a.num_gens(), 4);
    let graded: Vec<usize> = (0..=3).map(sl2_pbw).collect();
    assert_eq!(a.quotient_dims(3).unwrap(), graded);
    assert_eq!(a.quotient_dims_dense(2).unwrap(), graded[..3].to_vec());
    // 21 words of length ≤ 2, 14 survive
    assert_eq!(a.ideal_slice_dense(2).unwrap().len(), 7);
    assert_eq!(a.ideal_slice(2).unwrap().len(), 7);
}

#[test]
fn completion_closes_for_sl2() {
    let b = make_b(&e_q(&Scalar::int(3)), &e_q(&Scalar::int(3)), "B").unwrap();
    assert!(b.algebra.is_complete_at(3));
    assert!(b.algebra.engine(3).unwrap().check_confluence().is_ok());
}

#[test]
fn mismatched_traces_force_the_zero_algebra() {
    let b = make_b(&e_q(&Scalar::int(2)), &ExactMatrix::identity(2), "B").unwrap();
    assert!(b.expect_zero);
    let e = b.algebra.engine(3).unwrap();
    assert!(e.is_zero_algebra());
    // the constant 1 already lies in the degree-2 slice
    assert_eq!(b.algebra.quotient_dims_dense(2).unwrap()[0], 0);
}

#[test]
fn word_cap_is_enforced() {
    let p = Presentation::with_names("free", (0..8).map(|i| format!("x{}", i)).collect(), vec![]).with_word_cap(1000);
    assert!(matches!(p.quotient_dims(4), Err(cogroupoid::Error::DegreeTooLarge { .. })));
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, 0u32..=2, prop::bool::ANY).prop_map(|(n, d, e, inv)| {
        let base = &Scalar::ratio(n, d) + &q().pow(e as i32);
        if inv && !base.is_zero() {
            base.inv().unwrap()
        } else {
            base
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_roundtrips_through_the_parser(a in small_scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn determinant_is_multiplicative(v in prop::collection::vec(-4i64..=4, 18)) {
        let a = ExactMatrix::from_rows(v[..9].chunks(3).map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
        let b = ExactMatrix::from_rows(v[9..].chunks(3).map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        if a.is_invertible() {
            prop_assert_eq!(a.mul(&a.inverse().unwrap()), ExactMatrix::identity(3));
        }
    }

    #[test]
    fn rcf_is_a_similarity_invariant(v in prop::collection::vec(-3i64..=3, 9), p in prop::collection::vec(-2i64..=2, 9)) {
        let a = ExactMatrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
        let p = ExactMatrix::from_rows(p.chunks(3).map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
        prop_assume!(p.is_invertible());
        let b = p.inverse().unwrap().mul(&a).mul(&p);
        prop_assert_eq!(a.rational_canonical_form(), b.rational_canonical_form());
        let rcf = a.rational_canonical_form();
        prop_assert_eq!(rcf.rational_canonical_form(), rcf);
    }

    #[test]
    fn reduction_kills_the_ideal(u in prop::collection::vec(0u16..4, 0..3), w in prop::collection::vec(0u16..4, 0..3)) {
        let b = make_b(&e_q(&Scalar::int(2)), &e_q(&Scalar::int(2)), "B").unwrap();
        let eng = b.algebra.engine(6).unwrap();
        let u = FreeElement::word(Word::from_slice(&u));
        let w = FreeElement::word(Word::from_slice(&w));
        for r in b.algebra.relations() {
            prop_assert!(eng.reduce(&u.mul(r).mul(&w)).is_zero());
        }
        let nf = eng.reduce(&u.mul(&w));
        prop_assert_eq!(eng.reduce(&nf), nf.clone());
    }

    #[test]
    fn commutative_polynomials_have_binomial_dims(n in 1usize..=3) {
        let g = FreeElement::gen;
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                rels.push(g(j as u16).mul(&g(i as u16)).sub(&g(i as u16).mul(&g(j as u16))));
            }
        }
        let rs = RewriteSystem::complete(&vec![1; n], &rels, 4);
        let counts: Vec<usize> = rs.normal_words(4).iter().map(|v| v.len()).collect();
        let binom = |a: usize, b: usize| (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1));
        let expect: Vec<usize> = (0..=4).map(|d| binom(d + n - 1, n - 1)).collect();
        prop_assert_eq!(counts, expect);
    }
}
