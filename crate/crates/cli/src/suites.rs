//! Suite runners. Each returns its certificates in a fixed order.

use crate::spec::{self, FamilyKind, FamilySpec, RunSpec};
use crate::CliError;
use cogroupoid::classify::{build_iso_b, build_iso_h, congruent_test, fusion_check, fusion_dims, similar_test};
use cogroupoid::families::*;
use cogroupoid::galois::{cleftness_witness, coinvariants, verify_galois, Side};
use cogroupoid::homology::{check_dd, check_equivariance, check_exactness, koszul_complex, transport_resolution};
use cogroupoid::hopf::{check_cogroupoid, check_structure_maps, Cogroupoid, MatrixComodule};
use cogroupoid::transport::{certify_nu, matrix_nu, matrix_iota, monoidality_check, transport_comodule, transport_comodule_algebra, transport_roundtrip};
use cogroupoid::weakhopf::{assemble_weak_hopf, check_weak_hopf};
use cogroupoid::{Certificate, ExactMatrix, FreeElement, Gen, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Largest truncation degree accepted on the command line.
pub const MAX_DEGREE: u32 = 10;

pub struct Context<'a> {
    pub spec: &'a RunSpec,
    pub degree: u32,
    pub seed: u64,
}

#[derive(Default)]
pub struct Outcome {
    pub certificates: Vec<Certificate>,
    /// Presentation texts of the algebras involved, by name.
    pub presentations: Vec<(String, String)>,
}

type Job<'a> = Box<dyn FnOnce() -> Result<Vec<Certificate>, CliError> + Send + 'a>;

fn job<'a>(f: impl FnOnce() -> Result<Vec<Certificate>, CliError> + Send + 'a) -> Job<'a> {
    Box::new(f)
}

/// Run jobs on the worker pool; results keep the job order.
fn fan_out(jobs: Vec<Job<'_>>) -> Result<Vec<Certificate>, CliError> {
    let parts: Vec<Vec<Certificate>> = jobs.into_par_iter().map(|j| j()).collect::<Result<_, _>>()?;
    Ok(parts.into_iter().flatten().collect())
}

pub fn run(ctx: &Context) -> Result<Outcome, CliError> {
    if ctx.degree > MAX_DEGREE {
        return Err(CliError::DegreeTooLarge(ctx.degree, MAX_DEGREE));
    }
    match ctx.spec.suite.as_str() {
        "cogroupoid" => cogroupoid_suite(ctx),
        "galois" => galois_suite(ctx),
        "classify" => classify_suite(ctx),
        "transport" => transport_suite(ctx),
        "homology" => homology_suite(ctx),
        "weakhopf" => weakhopf_suite(ctx),
        "fusion" => fusion_suite(ctx),
        "invariants" => invariants_suite(ctx),
        s => Err(CliError::Parse(format!("unknown suite `{}`", s))),
    }
}

pub fn build_cogroupoid(f: &FamilySpec) -> Result<Cogroupoid, CliError> {
    if f.objects.is_empty() {
        return Err(CliError::Parse("family has no objects".into()));
    }
    Ok(match f.kind {
        FamilyKind::B => b_cogroupoid(&f.matrices()?)?,
        FamilyKind::H => h_cogroupoid(&f.matrices()?)?,
        FamilyKind::GL => gl_cogroupoid(&f.ast_matrices()?)?,
        FamilyKind::S2n => s2n_cogroupoid(&f.ast_matrices()?)?,
        FamilyKind::Cocycle => group_cocycle_cogroupoid(&f.cocycles()?)?,
    })
}

fn hom_texts(c: &Cogroupoid) -> Vec<(String, String)> {
    let n = c.len();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| (format!("C({},{})", c.objects[x], c.objects[y]), c.hom(x, y).text()))
        .collect()
}

fn check_pair(c: &Cogroupoid, pair: [usize; 2]) -> Result<(), CliError> {
    if pair.iter().any(|&i| i >= c.len()) {
        return Err(CliError::Parse(format!("object pair {:?} out of range", pair)));
    }
    Ok(())
}

fn cogroupoid_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let c = build_cogroupoid(ctx.spec.family()?)?;
    let d = ctx.degree;
    let certificates = fan_out(vec![
        job(|| Ok(vec![check_structure_maps(&c)?])),
        job(|| Ok(vec![check_cogroupoid(&c, d)?])),
    ])?;
    Ok(Outcome { certificates, presentations: hom_texts(&c) })
}

fn galois_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let c = build_cogroupoid(ctx.spec.family()?)?;
    let g = ctx.spec.galois.clone().unwrap_or(spec::GaloisSpec { pair: [0, 1], sides: vec!["left".into()] });
    check_pair(&c, g.pair)?;
    let [x, y] = g.pair;
    let d = ctx.degree;
    let mut jobs = Vec::new();
    for s in &g.sides {
        let side = match s.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            _ => return Err(CliError::Parse(format!("unknown side `{}`", s))),
        };
        let c = &c;
        jobs.push(job(move || Ok(vec![verify_galois(c, x, y, side, d)?])));
    }
    let certificates = fan_out(jobs)?;
    Ok(Outcome { certificates, presentations: hom_texts(&c) })
}

/// Reflexivity, symmetry and transitivity of a relation on the corpus.
fn equivalence_certificate(name: &str, corpus: &[ExactMatrix], rel: impl Fn(&ExactMatrix, &ExactMatrix) -> Result<bool, CliError>) -> Result<Certificate, CliError> {
    let n = corpus.len();
    let mut table = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = rel(&corpus[i], &corpus[j])?;
        }
    }
    let r = |i: usize, j: usize| table[i * n + j];
    let mut cert = Certificate::new(format!("{} is an equivalence relation", name), corpus.iter().map(|m| m.to_string()).collect(), None, true);
    for i in 0..n {
        cert.record(format!("reflexive at {}", i), None, (!r(i, i)).then(|| format!("{} not related to itself", i)));
    }
    for i in 0..n {
        for j in i + 1..n {
            cert.record(format!("symmetric at ({},{})", i, j), None, (r(i, j) != r(j, i)).then(|| "asymmetric".to_string()));
        }
    }
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r(i, j) && r(j, k) && !r(i, k) {
                    bad.push(format!("({},{},{})", i, j, k));
                }
            }
        }
    }
    cert.record("transitive on all triples", None, (!bad.is_empty()).then(|| bad.join(" ")));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match classes.iter_mut().find(|c| r(c[0], i)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    cert.note(format!("classes: {:?}", classes));
    Ok(cert)
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| Scalar::int(rng.gen_range(-3..=3))).collect()).collect();
        let m = ExactMatrix::from_rows(rows);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Perturb the (0,0) entry until the witness equation breaks.
fn mutate(p: &ExactMatrix) -> ExactMatrix {
    let mut q = p.clone();
    q[(0, 0)] = &q[(0, 0)] + &Scalar::one();
    q
}

fn classify_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let cs = ctx.spec.classify.as_ref().ok_or_else(|| CliError::Parse("suite `classify` needs a [classify] table".into()))?;
    let b_kind = match cs.kind {
        FamilyKind::B => true,
        FamilyKind::H => false,
        _ => return Err(CliError::Parse("classify kind must be B or H".into())),
    };
    let d = ctx.degree;
    let e = spec::invertible(&cs.base, "base")?;
    let corpus = cs.corpus.iter().enumerate().map(|(i, m)| spec::invertible(m, &format!("corpus[{}]", i))).collect::<Result<Vec<_>, _>>()?;
    let base_inv = invariants(&e, b_kind)?;
    let mut witnesses = Vec::new();
    for w in &cs.witnesses {
        if w.index >= corpus.len() {
            return Err(CliError::Parse(format!("witness index {} out of range", w.index)));
        }
        witnesses.push((w.index, spec::invertible(&w.p, "witness")?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for (i, f) in corpus.iter().enumerate() {
        if invariants(f, b_kind)? == base_inv {
            for _ in 0..cs.random_witnesses {
                witnesses.push((i, random_invertible(&mut rng, f.rows())));
            }
        }
    }
    let mut jobs: Vec<Job> = vec![
        job(|| Ok(vec![equivalence_certificate("congruence", &corpus, |a, b| Ok(congruent_test(a, b)?))?])),
        job(|| Ok(vec![equivalence_certificate("similarity", &corpus, |a, b| Ok(similar_test(a, b)))?])),
    ];
    for (i, p) in witnesses {
        let f = corpus[i].clone();
        let e = e.clone();
        jobs.push(job(move || {
            let pinv = p.inverse()?;
            let g = if b_kind { pinv.mul(&f).mul(&pinv.transpose()) } else { pinv.mul(&f).mul(&p) };
            let build = |w: &ExactMatrix| if b_kind { build_iso_b(&e, &f, &g, w, d) } else { build_iso_h(&e, &f, &g, w, d) };
            let iso = build(&p)?;
            let bad = mutate(&p);
            let mut rej = Certificate::new("mutated witness rejected", vec![format!("F = {}", f), format!("P' = {}", bad)], None, true);
            match build(&bad) {
                Err(cogroupoid::Error::CongruenceWitnessInvalid(_)) | Err(cogroupoid::Error::SimilarityWitnessInvalid(_)) => rej.pass("P' rejected", None),
                Err(e) => rej.fail("P' rejected", None, e.to_string()),
                Ok(_) => rej.fail("P' rejected", None, "mutated witness accepted"),
            }
            Ok(vec![iso.certificate, rej])
        }));
    }
    let certificates = fan_out(jobs)?;
    Ok(Outcome { certificates, presentations: Vec::new() })
}

/// The scalar invariants that must agree for a nonzero hom-algebra.
fn invariants(m: &ExactMatrix, b_kind: bool) -> Result<Vec<Scalar>, CliError> {
    let inv = m.inverse()?;
    Ok(if b_kind { vec![inv.mul(&m.transpose()).trace()] } else { vec![m.trace(), inv.trace()] })
}

fn fundamental(c: &Cogroupoid, x: usize, n: usize) -> MatrixComodule {
    let coeffs = (0..n * n).map(|k| FreeElement::gen(k as Gen)).collect();
    MatrixComodule::new(format!("V_{}", c.objects[x]), c.hom(x, x).clone(), n, coeffs)
}

fn transport_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let fam = ctx.spec.family()?;
    if !matches!(fam.kind, FamilyKind::B | FamilyKind::H) {
        return Err(CliError::Parse("transport needs a B or H family".into()));
    }
    let mats = fam.matrices()?;
    let c = build_cogroupoid(fam)?;
    let ts = ctx.spec.transport.clone().unwrap_or(spec::TransportSpec { pair: [0, 1], t: Vec::new() });
    check_pair(&c, ts.pair)?;
    let [x, y] = ts.pair;
    let d = ctx.degree;
    let (m, n) = (mats[x].1.rows(), mats[y].1.rows());
    let ve = fundamental(&c, x, m);
    let vf = fundamental(&c, y, n);
    let c = &c;
    let mut jobs: Vec<Job> = vec![
        job(|| {
            let t = transport_comodule(&ve, c, x, y, d)?;
            let nu = certify_nu(&t, &vf, &matrix_nu(m, n, 0), c, x, y, d)?;
            let mut cert = t.certificate.clone();
            let verdict = cleftness_witness(&ve, &t.cotensor, d)?;
            cert.note(format!("cleftness: {:?} (transported dimension {}, source dimension {})", verdict, t.cotensor.dim(), m));
            Ok(vec![cert, nu])
        }),
        job(|| Ok(vec![transport_roundtrip(&ve, c, x, y, d)?])),
        job(|| Ok(vec![monoidality_check(&ve, &ve, c, x, y, d)?])),
    ];
    if !ts.t.is_empty() && fam.kind != FamilyKind::B {
        return Err(CliError::Parse("comodule-algebra transport needs a B family".into()));
    }
    for t in &ts.t {
        let t = spec::scalar(t)?;
        let (e, f) = (mats[x].1.clone(), mats[y].1.clone());
        jobs.push(job(move || {
            let ae = make_amt(&e, &t, c.hom(x, x), "A_E")?;
            let af = make_amt(&f, &t, c.hom(y, y), "A_F")?;
            let iota = matrix_iota(&ae, &af, c, x, y);
            let mut cert = transport_comodule_algebra(&ae, &af, &iota, c, x, y, d)?;
            cert.note(format!("t = {}", t));
            Ok(vec![cert])
        }));
    }
    let certificates = fan_out(jobs)?;
    Ok(Outcome { certificates, presentations: hom_texts(c) })
}

fn homology_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let hs = ctx.spec.homology.as_ref().ok_or_else(|| CliError::Parse("suite `homology` needs a [homology] table".into()))?;
    let d = ctx.degree;
    let mut jobs: Vec<Job> = Vec::new();
    let mut presentations = Vec::new();
    for cx in &hs.complexes {
        let alpha = spec::invertible(&cx.alpha, &cx.name)?;
        let k = koszul_complex(&alpha, &spec::scalar(&cx.t)?, "A")?;
        presentations.push((cx.name.clone(), k.algebra.text()));
        let name = cx.name.clone();
        jobs.push(job(move || {
            let mut dd = check_dd(&k, d)?;
            dd.note(format!("complex: {}", name));
            let mut ex = check_exactness(&k, d)?.certificate;
            ex.note(format!("complex: {}", name));
            let mut len = Certificate::new("homology vanishes above degree 2", vec![name], None, true);
            let l = k.length();
            len.record("complex has length 2", None, (l != 2).then(|| format!("length {}", l)));
            Ok(vec![dd, ex, len])
        }));
    }
    if let Some(tr) = &hs.transport {
        let e = spec::invertible(&tr.e, "e")?;
        let f = spec::invertible(&tr.f, "f")?;
        let dt = tr.degree.unwrap_or(d).min(d);
        let be = b_cogroupoid(&[("E".into(), e.clone())])?;
        for t in &tr.t {
            let t = spec::scalar(t)?;
            let k = koszul_complex(&e.inverse()?, &t, "A")?;
            let ca = make_amt(&e, &t, be.hom(0, 0), "A")?;
            let (e, f) = (e.clone(), f.clone());
            jobs.push(job(move || {
                let eq = check_equivariance(&k, &ca, dt.min(2))?;
                let tr = transport_resolution(&k, &e, &f, dt)?;
                Ok(vec![eq, tr.certificate])
            }));
        }
    }
    let certificates = fan_out(jobs)?;
    Ok(Outcome { certificates, presentations })
}

fn weakhopf_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let c = build_cogroupoid(ctx.spec.family()?)?;
    let objects: Vec<usize> = (0..c.len()).collect();
    let w = assemble_weak_hopf(&c, &objects, ctx.degree)?;
    let mut cert = check_weak_hopf(&w)?;
    cert.note(format!("dimension {} (finite: {})", w.dim(), w.finite));
    Ok(Outcome { certificates: vec![cert], presentations: hom_texts(&c) })
}

fn fusion_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let n = ctx.spec.fusion.as_ref().map_or(2, |f| f.n);
    let len = ctx.degree as usize;
    let certificates = fan_out(vec![job(move || Ok(vec![fusion_check(len)])), job(move || Ok(vec![fusion_dims(n, len).1]))])?;
    Ok(Outcome { certificates, presentations: Vec::new() })
}

fn invariants_suite(ctx: &Context) -> Result<Outcome, CliError> {
    let is = ctx.spec.invariants.as_ref().ok_or_else(|| CliError::Parse("suite `invariants` needs an [invariants] table".into()))?;
    let p = AstMatrix::new(spec::matrix(&is.p)?.to_rows())?;
    if !p.is_plus_minus_one() {
        return Err(cogroupoid::Error::NotPlusMinusOne("invariants".into()).into());
    }
    let one = AstMatrix::trivial(p.size());
    let d = ctx.degree;
    let setup = |p: &AstMatrix, name: &str| -> Result<ComoduleAlgebra, CliError> {
        let o = make_s2n(p, p, &format!("O_{}", name))?;
        Ok(make_kpx(p, &o, &format!("k_{}[x]", name))?)
    };
    let twisted = setup(&p, "p")?;
    let classical = setup(&one, "1")?;
    let presentations = vec![("k_p[x]".to_string(), twisted.algebra.text()), ("O_p".to_string(), twisted.hopf.text())];
    let (tw, cl) = rayon::join(|| coinvariants(&twisted, d), || coinvariants(&classical, d));
    let (tw, cl) = (tw?, cl?);
    let mut cert = Certificate::new("twisted coinvariants", vec!["k_p[x]".into(), "O_p".into()], Some(d), twisted.algebra.is_complete_at(d) && classical.algebra.is_complete_at(d));
    for k in 0..=d as usize {
        let res = (tw.by_degree[k] != cl.by_degree[k]).then(|| format!("{} twisted vs {} classical", tw.by_degree[k], cl.by_degree[k]));
        cert.record(format!("degree {} coinvariants match p = 1", k), Some(k as u32), res);
    }
    cert.note(format!("dimensions by degree: {:?}", tw.by_degree));
    Ok(Outcome { certificates: vec![twisted.check()?, cert], presentations })
}
