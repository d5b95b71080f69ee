use std::str::FromStr;

use facering::arith::{seeded_rng, FiniteField, RatFunc, Scalar};
use facering::certify::{
    certify_biased_pairing, certify_char2_anisotropy, certify_hall_laman, certify_hard_lefschetz, certify_top_heavy, check_poincare_duality,
    moment_curve_probe, task_seed, verify_compatible_formula, verify_locality, verify_pp_identity, verify_square_derivative_lemma, Certificate,
    ElementMode, LefschetzQuery, Verdict,
};
use facering::exec::{self, Strategy};
use facering::ring::{socle, symbolic_coords, ArtinianAlgebra, CoordMatrix, GorensteinAlgebra, IdealBasis};
use facering::simplicial::{cm_check, cycle_space, fhg_vectors, pseudomanifold_check, Chain, CycleSubspace, Face, SimplicialComplex};
use serde_json::{json, Value};

use crate::corpus;
use crate::document::Input;
use crate::error::{CliError, Result};
use crate::field::FieldChoice;
use crate::report::{Environment, RunReport};
use crate::{with_field, with_prime_subfield};

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub field: FieldChoice,
    pub k: Option<usize>,
    pub gamma: Option<SimplicialComplex>,
}

impl Options {
    pub fn new(seed: u64, field: FieldChoice) -> Self {
        Options { seed, field, k: None, gamma: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Lefschetz,
    TopHeavy,
    Biased,
    HallLaman,
    Anisotropy,
    Identities,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "duality" => Suite::Duality,
            "lefschetz" => Suite::Lefschetz,
            "top-heavy" => Suite::TopHeavy,
            "biased" => Suite::Biased,
            "hall-laman" => Suite::HallLaman,
            "anisotropy" => Suite::Anisotropy,
            "identities" => Suite::Identities,
            other => return Err(CliError::Lookup(other.to_string())),
        })
    }
}

pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    let mut out: Vec<Suite> = Vec::new();
    for s in list.split(',').filter(|s| !s.trim().is_empty()) {
        let s = s.parse()?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("empty suite list".into()));
    }
    Ok(out)
}

fn field_label(field: FieldChoice, symbolic: bool) -> String {
    if symbolic {
        let p = field.characteristic();
        format!("GF({p})(V)")
    } else {
        field.descriptor().to_string()
    }
}

fn mode_error(msg: impl Into<String>) -> CliError {
    facering::Error::Mode(msg.into()).into()
}

/// Rejects requests that cannot run before anything is computed.
fn check_modes(input: &Input, suites: &[Suite], opts: &Options, field: FieldChoice) -> Result<()> {
    let symbolic = input.is_symbolic();
    let d = input.complex.top_size();
    for s in suites {
        match s {
            Suite::Lefschetz | Suite::TopHeavy if symbolic => {
                return Err(mode_error("lefschetz and top-heavy need numeric coordinates over a finite field"));
            }
            Suite::Biased | Suite::HallLaman if opts.gamma.is_none() => {
                return Err(CliError::Usage("biased and hall-laman need --gamma".into()));
            }
            Suite::Anisotropy => {
                if field.characteristic() != 2 {
                    return Err(mode_error(format!("anisotropy needs characteristic two, the field is {}", field.descriptor())));
                }
                if !symbolic && opts.k.is_some_and(|k| 2 * k == d) {
                    return Err(mode_error(
                        "anisotropy at the middle degree is not decidable over a perfect field; use symbolic coordinates over GF(2)(V)",
                    ));
                }
            }
            Suite::Identities => {
                if !symbolic {
                    return Err(mode_error("the identities suite needs symbolic coordinates"));
                }
                if !d.is_multiple_of(2) {
                    return Err(mode_error(format!("the identities live in the middle degree; d = {d} is odd")));
                }
            }
            _ => {}
        }
    }
    Ok(())
}

fn required_cycle<S: Scalar>(input: &Input) -> Result<Chain<S>> {
    input.cycle::<S>()?.ok_or_else(|| {
        facering::Error::Domain(format!("no fundamental class over characteristic {}; give a cycle in the document", S::characteristic())).into()
    })
}

fn anisotropy_degrees(d: usize, k: Option<usize>, symbolic: bool) -> Vec<usize> {
    match k {
        Some(k) => vec![k],
        None => (0..=d / 2).filter(|&k| symbolic || 2 * k < d).collect(),
    }
}

fn numeric_checks<F: FiniteField>(input: &Input, suites: &[Suite], opts: &Options) -> Result<Vec<Certificate>> {
    let c = &input.complex;
    let d = c.top_size();
    let coords: CoordMatrix<F> = input.coords(task_seed(opts.seed, 0))?;
    let mu = required_cycle::<F>(input)?;
    let g = GorensteinAlgebra::new(ArtinianAlgebra::new(c.clone(), coords, d)?, &mu)?;
    let mut out = Vec::new();
    for (i, s) in suites.iter().enumerate() {
        let seed = task_seed(opts.seed, 1 + i as u64);
        match s {
            Suite::Duality => out.push(check_poincare_duality(&g)?),
            Suite::Lefschetz => out.push(certify_hard_lefschetz(&g, &LefschetzQuery { k: opts.k, ell: ElementMode::Generic { seed } })?),
            Suite::TopHeavy => {
                let m = CycleSubspace { generators: cycle_space::<F>(c) };
                let ks = opts.k.map_or_else(|| (0..=d / 2).collect(), |k| vec![k]);
                for k in ks {
                    out.push(certify_top_heavy(g.artinian(), &m, k, seed)?);
                }
            }
            Suite::Biased => out.push(certify_biased_pairing(&g, opts.gamma.as_ref().expect("checked"), opts.k.unwrap_or(d / 2))?),
            Suite::HallLaman => {
                let gamma = opts.gamma.as_ref().expect("checked");
                let ideal = IdealBasis::nonface_ideal(&g, gamma)?;
                let mut rng = seeded_rng(seed, 0);
                let ell = g.linear_form(&(0..c.universe()).map(|_| F::random(&mut rng)).collect::<Vec<_>>())?;
                out.push(certify_hall_laman(&g, &ideal, opts.k.unwrap_or(d / 2), &ell)?);
            }
            Suite::Anisotropy => {
                for k in anisotropy_degrees(d, opts.k, false) {
                    out.push(certify_char2_anisotropy(&g, k)?);
                }
            }
            Suite::Identities => unreachable!("rejected by check_modes"),
        }
    }
    Ok(out)
}

fn symbolic_checks<P: FiniteField>(input: &Input, suites: &[Suite], opts: &Options) -> Result<Vec<Certificate>> {
    let c = &input.complex;
    let d = c.top_size();
    let coords = symbolic_coords::<P>(d, c.universe());
    let width = coords.layout().width();
    let mu = required_cycle::<P>(input)?.convert(|x| RatFunc::constant(*x));
    let g = GorensteinAlgebra::new(ArtinianAlgebra::new(c.clone(), coords, d)?, &mu)?;
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::Duality => out.push(check_poincare_duality(&g)?),
            Suite::Biased => out.push(certify_biased_pairing(&g, opts.gamma.as_ref().expect("checked"), opts.k.unwrap_or(d / 2))?),
            Suite::HallLaman => {
                let gamma = opts.gamma.as_ref().expect("checked");
                let ideal = IdealBasis::nonface_ideal(&g, gamma)?;
                // fresh indeterminates as the coefficients of ℓ
                let ell = g.linear_form(&(0..c.universe()).map(|v| RatFunc::var(width + v)).collect::<Vec<_>>())?;
                out.push(certify_hall_laman(&g, &ideal, opts.k.unwrap_or(d / 2), &ell)?);
            }
            Suite::Anisotropy => {
                for k in anisotropy_degrees(d, opts.k, true) {
                    out.push(certify_char2_anisotropy(&g, k)?);
                }
            }
            Suite::Identities => out.extend(identity_checks(&g)?),
            Suite::Lefschetz | Suite::TopHeavy => unreachable!("rejected by check_modes"),
        }
    }
    Ok(out)
}

/// Square-derivative, pp-identity, compatible formula and locality on the
/// first facet split into halves.
fn identity_checks<P: FiniteField>(g: &GorensteinAlgebra<RatFunc<P>>) -> Result<Vec<Certificate>> {
    let c = g.artinian().complex();
    let d = g.d();
    let k = d / 2;
    let facet = *c.faces_of_size(d).first().ok_or_else(|| facering::Error::Domain("no facet of top size".into()))?;
    let verts = facet.to_vec();
    let sigma = Face::from_vertices(verts[..k].iter().copied());
    let tau = Face::from_vertices(verts[k..].iter().copied());
    let mut out = vec![verify_square_derivative_lemma(g, sigma, tau)?];
    if P::characteristic() == 2 {
        // a sum of basis elements with nonconstant coefficients
        let coeffs = (0..g.dim(k)).map(|i| RatFunc::var(i) + RatFunc::one()).collect();
        let u = facering::ring::AlgebraElement { degree: k, coords: coeffs };
        out.push(verify_pp_identity(g, sigma, &u)?);
    }
    out.push(verify_compatible_formula(g, &vec![(tau, RatFunc::one())], sigma)?);
    if let Some(v) = (0..c.universe()).find(|&v| !facet.contains(v) && !c.contains_face(facet.with(v))) {
        out.push(verify_locality(g, sigma, tau, v)?);
    }
    Ok(out)
}

pub fn certify(input: &Input, suites: &[Suite], opts: &Options) -> Result<RunReport> {
    let field = input.field(opts.field)?;
    check_modes(input, suites, opts, field)?;
    let symbolic = input.is_symbolic();
    let certs = if symbolic {
        with_prime_subfield!(field, P => symbolic_checks::<P>(input, suites, opts))?
    } else {
        with_field!(field, F => numeric_checks::<F>(input, suites, opts))?
    };
    let mut report = RunReport::new("certify", Environment::new(opts.seed, field_label(field, symbolic)));
    for cert in certs {
        report.push(&input.doc.name, cert);
    }
    Ok(report)
}

fn analysis_for<S: Scalar>(c: &SimplicialComplex, coords: CoordMatrix<S>, mu: Option<Chain<S>>) -> Value {
    let d = c.top_size();
    let alg = match ArtinianAlgebra::new(c.clone(), coords, d) {
        Ok(a) => a,
        Err(e) => return json!({ "error": e.to_string() }),
    };
    let mut out = json!({
        "a_dims": alg.dims(),
        "squarefree_spanning": (0..=d).all(|k| alg.squarefree_spanning(k)),
    });
    match socle(&alg) {
        Ok(s) => {
            out["socle"] = json!(s.dims);
            out["level"] = json!(s.is_level);
        }
        Err(e) => out["socle_error"] = json!(e.to_string()),
    }
    if let Some(mu) = mu {
        match GorensteinAlgebra::new(alg, &mu) {
            Ok(g) => out["b_dims"] = json!(g.dims()),
            Err(e) => out["b_error"] = json!(e.to_string()),
        }
    }
    out
}

fn analyze_with<F: FiniteField>(input: &Input, opts: &Options) -> Result<Value> {
    let c = &input.complex;
    let fhg = fhg_vectors(c);
    let pm = pseudomanifold_check::<F>(c);
    let cm = cm_check::<F>(c, 2);
    let mu = input.cycle::<F>()?;
    let algebra = if input.is_symbolic() {
        analysis_for(c, symbolic_coords::<F>(c.top_size(), c.universe()), mu.map(|m| m.convert(|x| RatFunc::constant(*x))))
    } else {
        analysis_for(c, input.coords::<F>(task_seed(opts.seed, 0))?, mu)
    };
    Ok(json!({
        "name": input.doc.name,
        "vertices": c.num_vertices(),
        "dimension": c.dim(),
        "f": fhg.f,
        "h": fhg.h,
        "g": fhg.g,
        "pseudomanifold": pm.is_pseudomanifold,
        "orientable": pm.orientable,
        "connected_fundamental": pm.connected_fundamental,
        "cohen_macaulay": cm.is_cm,
        "doubly_cohen_macaulay": cm.is_s_cm,
        "algebra": algebra,
    }))
}

pub fn analyze(input: &Input, opts: &Options) -> Result<RunReport> {
    let field = input.field(opts.field)?;
    // symbolic coordinates use the prime subfield as constants
    let value = if input.is_symbolic() {
        with_prime_subfield!(field, F => analyze_with::<F>(input, opts))?
    } else {
        with_field!(field, F => analyze_with::<F>(input, opts))?
    };
    let mut report = RunReport::new("analyze", Environment::new(opts.seed, field_label(field, input.is_symbolic())));
    report.analysis = Some(value);
    Ok(report)
}

fn moment_with<F: FiniteField>(input: &Input, params: &[i64], opts: &Options) -> Result<Vec<Certificate>> {
    let mu = required_cycle::<F>(input)?;
    Ok(moment_curve_probe(&input.complex, &mu, params, task_seed(opts.seed, 0))?)
}

/// Report-only duality and Lefschetz probes at moment-curve coordinates.
pub fn experiment_moment_curve(input: &Input, params: &[i64], opts: &Options) -> Result<RunReport> {
    let field = input.field(opts.field)?;
    let certs = with_field!(field, F => moment_with::<F>(input, params, opts))?;
    let mut report = RunReport::new("experiment moment-curve", Environment::new(opts.seed, field_label(field, false)));
    for cert in certs {
        debug_assert_eq!(cert.verdict, Verdict::ReportOnly);
        report.push(&input.doc.name, cert);
    }
    Ok(report)
}

pub fn corpus_list() -> String {
    corpus::corpus().iter().map(|e| format!("{:<20} {}\n", e.name, e.description)).collect()
}

/// Runs one suite on every corpus entry it applies to. Entries without a
/// fundamental class over the field, or of the wrong parity for the
/// identities, are listed as skipped.
pub fn corpus_run(suite: Suite, opts: &Options, strategy: Strategy) -> Result<RunReport> {
    if matches!(suite, Suite::Biased | Suite::HallLaman) {
        return Err(CliError::Usage("biased and hall-laman need a subcomplex; run them with certify".into()));
    }
    let field = match suite {
        Suite::Anisotropy if opts.field.characteristic() != 2 => FieldChoice::Gf2_63,
        _ => opts.field,
    };
    let symbolic = suite == Suite::Identities;
    let entries = corpus::corpus();
    let results = exec::map(strategy, entries, |e| {
        let c = (e.build)();
        let mut input = Input::from_complex(e.name, &c);
        if symbolic {
            if c.top_size() != 2 {
                return (e.name, Err("symbolic identities run on one-dimensional entries only".to_string()));
            }
            input.doc.coordinates = crate::document::CoordSpec::Symbolic;
        }
        let mut opts = opts.clone();
        opts.field = field;
        (e.name, certify(&input, &[suite], &opts).map_err(|err| err.to_string()))
    });
    let mut report = RunReport::new(&format!("corpus run {suite:?}").to_lowercase(), Environment::new(opts.seed, field_label(field, symbolic)));
    for (name, r) in results {
        match r {
            Ok(sub) => {
                for e in sub.entries {
                    report.push(name, e.certificate);
                }
            }
            Err(why) => report.skipped.push((name.to_string(), why)),
        }
    }
    report.canonicalize();
    Ok(report)
}
