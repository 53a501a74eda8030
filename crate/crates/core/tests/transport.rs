use cogroupoid::families::*;
use cogroupoid::hopf::*;
use cogroupoid::matrix::e_q;
use cogroupoid::transport::*;
use cogroupoid::{Error, ExactMatrix, FreeElement, Scalar};

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
    MatrixComodule::new(if x == 0 { "V_E" } else { "V_F" }, c.hom(x, x).clone(), n, coeffs)
}

#[test]
fn fundamental_comodule_transports_to_v_f() {
    let c = b_pair();
    let ve = fundamental(&c, 0, 2);
    let vf = fundamental(&c, 1, 3);
    let t = transport_comodule(&ve, &c, 0, 1, 2).unwrap();
    assert!(t.certificate.passed, "{}", t.certificate.summary_line());
    assert_eq!(t.comodule.dim, 3);
    let nu = certify_nu(&t, &vf, &matrix_nu(2, 3, 0), &c, 0, 1, 2).unwrap();
    assert!(nu.passed, "{}", nu.summary_line());
}

#[test]
fn wrong_nu_is_rejected() {
    let c = b_pair();
    let ve = fundamental(&c, 0, 2);
    let vf = fundamental(&c, 1, 3);
    let t = transport_comodule(&ve, &c, 0, 1, 2).unwrap();
    let mut images = matrix_nu(2, 3, 0);
    images.swap(0, 1);
    assert!(!certify_nu(&t, &vf, &images, &c, 0, 1, 2).map(|c| c.passed).unwrap_or(false));
}

#[test]
fn roundtrip_and_monoidality() {
    let c = b_pair();
    let ve = fundamental(&c, 0, 2);
    assert!(transport_roundtrip(&ve, &c, 0, 1, 2).unwrap().passed);
    assert!(monoidality_check(&ve, &ve, &c, 0, 1, 2).unwrap().passed);
}

#[test]
fn comodule_algebra_transport() {
    let e = e_q(&Scalar::int(2));
    let f = f3();
    let c = b_pair();
    for t in [0, 1] {
        let ae = make_amt(&e, &Scalar::int(t), c.hom(0, 0), "A_E").unwrap();
        let af = make_amt(&f, &Scalar::int(t), c.hom(1, 1), "A_F").unwrap();
        let iota = matrix_iota(&ae, &af, &c, 0, 1);
        let cert = transport_comodule_algebra(&ae, &af, &iota, &c, 0, 1, 2).unwrap();
        assert!(cert.passed, "t={}: {}", t, cert.summary_line());
        // ι with a flipped sign on one generator is no longer colinear
        let bad = iota.with_image(0, iota.images[0].scale(&Scalar::int(-1)));
        assert!(!transport_comodule_algebra(&ae, &af, &bad, &c, 0, 1, 2).unwrap().passed);
    }
}

#[test]
fn klein_yetter_drinfeld_transport() {
    let g = klein_pair();
    let adj = group_adjoint_yd(&g, 0, &FiniteGroup::klein()).unwrap();
    assert!(check_yd(&adj, &g.hopf(0), 1).unwrap().passed);
    let triv = YdModule::trivial(&g.hopf(0));
    for v in [&triv, &adj] {
        let t = yd_transport(v, &g, 0, 1, 1).unwrap();
        assert!(t.certificate.passed && t.certificate.exact, "{}", t.certificate.summary_line());
    }
    let b = braiding_check(&adj, &adj, &g, 0, 1, 1).unwrap();
    assert!(b.passed && b.exact);
}

#[test]
fn quantum_plane_yd_symbolic() {
    let s = Scalar::param("s");
    let c = b_cogroupoid(&[("E".into(), e_q(&(&s * &s)))]).unwrap();
    let v = quantum_plane_yd(&c, 0, &s).unwrap();
    let cert = check_yd(&v, &c.hopf(0), 2).unwrap();
    assert!(cert.passed, "{}", cert.summary_line());
}

#[test]
fn yd_mismatch_is_rejected() {
    let s = Scalar::int(2);
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(4))), ("F".into(), ExactMatrix::from_ints(&[&[-2, 1, -1], &[-2, 0, 2], &[-1, 0, -1]]))]).unwrap();
    let mut v = quantum_plane_yd(&c, 0, &s).unwrap();
    v.action[0] = v.action[0].scale(&Scalar::int(-1));
    assert!(!check_yd(&v, &c.hopf(0), 2).unwrap().passed);
    assert!(matches!(yd_transport(&v, &c, 0, 1, 2), Err(Error::NotYd(_))));
}

#[test]
fn bimodule_transport_and_galois_lemma() {
    let g = klein_pair();
    assert!(bimodule_transport(&g, 0, 1, 1).unwrap().passed);
    for n in [1, 2] {
        let cert = galois_lemma_maps(&g, 0, 1, n, 1).unwrap();
        assert!(cert.passed && cert.exact, "{}", cert.summary_line());
    }
}

#[test]
fn galois_lemma_without_antipode_fails() {
    let mut g = klein_pair();
    // S replaced by the identity on generators of C(σ,1)
    let s = g.antipode(1, 0).clone();
    let mut broken = s.clone();
    for i in 0..broken.images.len() {
        let w = cogroupoid::Word::gen(i as u16);
        broken = broken.with_image(i, cogroupoid::tensor::Tensor::pure(vec![w], Scalar::one()));
    }
    g.set_antipode(1, 0, broken);
    assert!(!galois_lemma_maps(&g, 0, 1, 1, 1).unwrap().passed);
}

#[test]
fn quantum_plane_yd_transport_and_braiding() {
    let s = Scalar::int(2);
    let c = b_cogroupoid(&[("E".into(), e_q(&Scalar::int(4))), ("F".into(), ExactMatrix::from_ints(&[&[-2, 1, -1], &[-2, 0, 2], &[-1, 0, -1]]))]).unwrap();
    let v = quantum_plane_yd(&c, 0, &s).unwrap();
    let t = yd_transport(&v, &c, 0, 1, 2).unwrap();
    assert!(t.certificate.passed, "{}", t.certificate.summary_line());
    assert_eq!(t.module.dim(), 3);
    let b = braiding_check(&v, &v, &c, 0, 1, 2).unwrap();
    assert!(b.passed, "{}", b.summary_line());
}
