use serde_json::json;

use super::{Certificate, InputFingerprint, Timer, Verdict};
use crate::arith::{
    directional_derivative, full_mask, jet_point, random_point, ColumnMove, CoordLayout, ErrorBound, FiniteField, Jet, RatFunc, Scalar,
};
use crate::ring::{lee_square_degree, AlgebraElement, ArtinianAlgebra, CoordMatrix, CoordMode, DegreeFunctional, FaceMonomial, GorensteinAlgebra};
use crate::simplicial::{Chain, Face, SimplicialComplex};
use crate::{Error, Result};

/// Vary column `σ_j` toward `V_{τ_j} + V_{σ_j}`, pairing the vertices of
/// both faces in increasing order.
fn moves(sigma: Face, tau: Face) -> Vec<ColumnMove> {
    sigma.vertices().zip(tau.vertices()).map(|(s, t)| ColumnMove::new(s, vec![t, s])).collect()
}

/// The composed operator `∂_B` for the basis labelled by `σ` and `τ`.
pub fn basis_derivative<F: Scalar>(f: &RatFunc<F>, layout: &CoordLayout, sigma: Face, tau: Face) -> Result<RatFunc<F>> {
    if sigma.len() != tau.len() {
        return Err(Error::Domain("faces of different sizes".into()));
    }
    directional_derivative(f, layout, &moves(sigma, tau))
}

/// `∂_σ^τ f = deg(x_σ x_τ) · ∂_B f`.
pub fn normalized_derivative<F: Scalar>(
    f: &RatFunc<F>,
    layout: &CoordLayout,
    sigma: Face,
    tau: Face,
    deg_sigma_tau: &RatFunc<F>,
) -> Result<RatFunc<F>> {
    Ok(deg_sigma_tau.clone() * basis_derivative(f, layout, sigma, tau)?)
}

/// Sign of the square term: each of the `k` column moves contributes a
/// transposition of two determinant columns, invisible in characteristic two.
pub fn square_term_sign<S: Scalar>(k: usize) -> S {
    if S::characteristic() == 2 || k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

fn check_pair(c: &SimplicialComplex, sigma: Face, tau: Face) -> Result<usize> {
    let d = c.top_size();
    if sigma.len() != tau.len() || 2 * sigma.len() != d {
        return Err(Error::Domain(format!("faces of sizes {} and {} in dimension {d}", sigma.len(), tau.len())));
    }
    if !sigma.is_disjoint(tau) {
        return Err(Error::Domain("faces are not disjoint".into()));
    }
    if !c.contains_face(sigma.union(tau)) {
        return Err(Error::Domain("faces do not lie in a common face".into()));
    }
    Ok(sigma.len())
}

fn degree_of<S: Scalar>(g: &GorensteinAlgebra<S>, m: &FaceMonomial) -> Result<S> {
    g.degree(&g.reduce_monomial(m))
}

fn fingerprint<S: Scalar>(g: &GorensteinAlgebra<S>) -> InputFingerprint {
    InputFingerprint::of_algebra(g.artinian())
}

/// `∂_σ^τ deg(x_τ²) = ± deg(x_τ x_σ)²` as rational functions, the left side
/// from Lee's formula and the right side from the rewriting system.
pub fn verify_square_derivative_lemma<F: Scalar>(g: &GorensteinAlgebra<RatFunc<F>>, sigma: Face, tau: Face) -> Result<Certificate> {
    let timer = Timer::start("square-derivative-lemma");
    let alg = g.artinian();
    let c = alg.complex();
    let k = check_pair(c, sigma, tau)?;
    let layout = alg.coords().layout();
    let mu = g.functionals()[0].cycle();
    let lee = lee_square_degree(c, alg.coords(), mu, tau)?;
    let deg_st = degree_of(g, &FaceMonomial::of_face(sigma.union(tau)))?;
    let lhs = normalized_derivative(&lee, &layout, sigma, tau, &deg_st)?;
    let sign = square_term_sign::<RatFunc<F>>(k);
    let rhs = sign.clone() * deg_st.square();
    let ok = lhs == rhs;
    let witness = json!({
        "sigma": c.face_labels(sigma),
        "tau": c.face_labels(tau),
        "column_order": sigma.vertices().zip(tau.vertices()).map(|(s, t)| [c.label(s), c.label(t)]).collect::<Vec<_>>(),
        "sign": sign.to_string(),
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
    });
    Ok(timer.finish(fingerprint(g), Verdict::from_bool(ok), witness, ErrorBound::ZERO, None))
}

/// The same identity checked at random points: Lee's formula is evaluated
/// on jets to get the derivative, and the right side comes from the numeric
/// algebra at that point.
pub fn verify_square_derivative_lemma_at_points<F: FiniteField>(
    c: &SimplicialComplex,
    mu: &Chain<F>,
    sigma: Face,
    tau: Face,
    seed: u64,
    points: usize,
) -> Result<Certificate> {
    let timer = Timer::start("square-derivative-lemma");
    let k = check_pair(c, sigma, tau)?;
    let d = c.top_size();
    let layout = CoordLayout::new(d, c.universe());
    let mv = moves(sigma, tau);
    let sign = square_term_sign::<F>(k);
    let mut samples = Vec::new();
    let mut ok = true;
    for attempt in 0..points {
        let point: Vec<F> = random_point(layout.width(), seed, attempt);
        let coords = CoordMatrix::from_flat(d, c.universe(), point.clone(), CoordMode::Generic { seed, attempt })?;
        let alg = ArtinianAlgebra::new(c.clone(), coords, d)?;
        let deg = DegreeFunctional::new(&alg, mu)?;
        let deg_st = deg.of_monomial(&alg, &FaceMonomial::of_face(sigma.union(tau)))?;

        let jets = jet_point(&layout, &point, &mv)?;
        let jet_coords = CoordMatrix::from_flat(d, c.universe(), jets, CoordMode::Explicit)?;
        let jet_mu = mu.convert(|x| Jet::constant(*x));
        let lee = lee_square_degree(c, &jet_coords, &jet_mu, tau)?;
        let lhs = deg_st * lee.coeff(full_mask(k));
        let rhs = sign * deg_st * deg_st;
        ok &= lhs == rhs;
        samples.push(json!({ "attempt": attempt, "lhs": lhs.to_string(), "rhs": rhs.to_string() }));
    }
    // a nonzero rational function of numerator and denominator degree at
    // most D vanishes at a uniform point with probability at most D / q;
    // Lee's formula over t facets has D ≤ t (d + 1) d, the derivative at most
    // doubles it and the squared right side adds 2 d (d + 1)
    let facets = c.faces_of_size(d).iter().filter(|f| tau.is_subset(**f)).count();
    let degree = (2 * facets * (d + 1) * d + 2 * d * (d + 1)) as u128;
    let single = ErrorBound::schwartz_zippel(degree, F::order());
    let bound = (1..points).fold(single, |b, _| ErrorBound {
        numerator: b.numerator.saturating_mul(single.numerator),
        denominator: b.denominator.saturating_mul(single.denominator),
    });
    let witness = json!({
        "sigma": c.face_labels(sigma),
        "tau": c.face_labels(tau),
        "sign": sign.to_string(),
        "points": samples,
        "degree_bound": degree.to_string(),
    });
    let fp = InputFingerprint {
        complex: c.fingerprint(),
        field: F::field_label(),
        coordinates: CoordMode::Generic { seed, attempt: 0 },
        seed: Some(seed),
        vertex_order: c.labels().to_vec(),
    };
    Ok(timer.finish(fp, Verdict::from_bool(ok), witness, if ok { bound } else { ErrorBound::ZERO }, Some(seed)))
}

/// `∂_σ^τ deg(u²) = deg(x_σ u)²` in characteristic two, where `τ` is a face
/// of the link of `σ` pairing nontrivially with `x_σ`.
pub fn verify_pp_identity<F: Scalar>(g: &GorensteinAlgebra<RatFunc<F>>, sigma: Face, u: &AlgebraElement<RatFunc<F>>) -> Result<Certificate> {
    let timer = Timer::start("pp-identity");
    if F::characteristic() != 2 {
        return Err(Error::Domain("the identity is stated in characteristic two".into()));
    }
    let alg = g.artinian();
    let c = alg.complex();
    let d = g.d();
    let k = sigma.len();
    if 2 * k != d || u.degree != k {
        return Err(Error::Domain(format!("need |σ| = deg u = d/2, got {k}, {} and d = {d}", u.degree)));
    }
    if !c.contains_face(sigma) {
        return Err(Error::Domain("σ is not a face".into()));
    }
    let link = c.link(sigma)?;
    let mut chosen = None;
    for &t in link.faces_of_size(k) {
        let v = degree_of(g, &FaceMonomial::of_face(sigma.union(t)))?;
        if !v.is_zero() {
            chosen = Some((t, v));
            break;
        }
    }
    let fp = fingerprint(g);
    let Some((tau, deg_st)) = chosen else {
        let witness = json!({ "sigma": c.face_labels(sigma), "reason": "x_σ annihilates the middle degree" });
        return Ok(timer.finish(fp, Verdict::ReportOnly, witness, ErrorBound::ZERO, None));
    };
    let layout = alg.coords().layout();
    let deg_u2 = g.degree(&g.multiply(u, u)?)?;
    let lhs = normalized_derivative(&deg_u2, &layout, sigma, tau, &deg_st)?;
    let x_sigma = g.reduce_monomial(&FaceMonomial::of_face(sigma));
    let rhs = g.degree(&g.multiply(&x_sigma, u)?)?.square();
    let witness = json!({
        "sigma": c.face_labels(sigma),
        "tau": c.face_labels(tau),
        "u": u.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
    });
    Ok(timer.finish(fp, Verdict::from_bool(lhs == rhs), witness, ErrorBound::ZERO, None))
}

/// For `v` outside the star of `σ ∪ τ`, the symbolic `deg(x_τ x_σ)` has no
/// dependence on the column of `v`.
pub fn verify_locality<F: Scalar>(g: &GorensteinAlgebra<RatFunc<F>>, sigma: Face, tau: Face, v: usize) -> Result<Certificate> {
    let timer = Timer::start("locality");
    let alg = g.artinian();
    let c = alg.complex();
    let face = sigma.union(tau);
    if sigma.len() + tau.len() != g.d() || !sigma.is_disjoint(tau) {
        return Err(Error::Domain("σ and τ must be disjoint of total size d".into()));
    }
    if v >= c.universe() || c.contains_face(face.with(v)) || face.contains(v) {
        return Err(Error::Domain(format!("vertex {v} lies in the star of σ ∪ τ")));
    }
    let layout = alg.coords().layout();
    let value = degree_of(g, &FaceMonomial::of_face(face))?;
    let nonzero: Vec<usize> = (0..layout.dim).filter(|&r| !value.partial_derivative(layout.var(r, v)).is_zero()).collect();
    let witness = json!({
        "sigma": c.face_labels(sigma),
        "tau": c.face_labels(tau),
        "vertex": c.label(v),
        "degree": value.to_string(),
        "dependent_rows": nonzero,
    });
    Ok(timer.finish(fingerprint(g), Verdict::from_bool(nonzero.is_empty()), witness, ErrorBound::ZERO, None))
}

/// Squarefree element of the face ring with coefficients in the coordinate
/// function field.
pub type FaceRingElement<F> = Vec<(Face, RatFunc<F>)>;

fn to_algebra<F: Scalar>(g: &GorensteinAlgebra<RatFunc<F>>, k: usize, u: &FaceRingElement<F>) -> Result<AlgebraElement<RatFunc<F>>> {
    let terms: Vec<_> = u.iter().map(|(f, c)| (FaceMonomial::of_face(*f), c.clone())).collect();
    g.reduce(k, &terms)
}

/// Checks the two compatibility clauses; `Err` names the violated one.
fn compatibility<F: Scalar>(c: &SimplicialComplex, layout: &CoordLayout, u: &FaceRingElement<F>, sigma: Face) -> Result<Face, String> {
    let in_star: Vec<&(Face, RatFunc<F>)> = u.iter().filter(|(f, _)| c.contains_face(f.union(sigma))).collect();
    let tau = match in_star.as_slice() {
        [(t, coeff)] if coeff.is_one() => *t,
        [(_, _)] => return Err("the coefficient at the face in the star is not one".into()),
        _ => return Err(format!("the star of σ meets the support in {} faces", in_star.len())),
    };
    for (t, coeff) in u.iter().filter(|(f, _)| *f != tau) {
        // σ_τ' is the largest face of σ inside the star of τ'
        let inside: Vec<usize> = sigma.vertices().filter(|&v| c.contains_face(t.with(v))).collect();
        let sigma_t = Face::from_vertices(inside.iter().copied());
        if !c.contains_face(t.union(sigma_t)) {
            return Err("the star of a support face meets σ in more than one face".into());
        }
        for (s, target) in sigma.vertices().zip(tau.vertices()) {
            if sigma_t.contains(s) {
                continue;
            }
            let dv = directional_derivative(coeff, layout, &[ColumnMove::new(s, vec![target, s])]).map_err(|e| e.to_string())?;
            if !dv.is_zero() {
                return Err(format!("a coefficient outside the star depends on the column of vertex {}", c.label(s)));
            }
        }
    }
    Ok(tau)
}

/// Both the product rule for `deg(u · u')`, where `u'` is `u` with every
/// coordinate replaced by a fresh copy, and its specialization `V' → V`.
pub fn verify_compatible_formula<F: Scalar>(g: &GorensteinAlgebra<RatFunc<F>>, u: &FaceRingElement<F>, sigma: Face) -> Result<Certificate> {
    let timer = Timer::start("compatible-formula");
    let alg = g.artinian();
    let c = alg.complex();
    let d = g.d();
    let k = sigma.len();
    if 2 * k != d || u.iter().any(|(f, _)| f.len() != k) {
        return Err(Error::Domain("u and σ must have degree d/2".into()));
    }
    let layout = alg.coords().layout();
    let fp = fingerprint(g);
    let tau = match compatibility(c, &layout, u, sigma) {
        Ok(t) => t,
        Err(clause) => {
            let witness = json!({ "sigma": c.face_labels(sigma), "violated": clause });
            return Ok(timer.finish(fp, Verdict::ReportOnly, witness, ErrorBound::ZERO, None));
        }
    };
    let shift = layout.width();
    let primed: FaceRingElement<F> = u.iter().map(|(f, x)| (*f, x.map_vars(&|i| i + shift))).collect();
    let deg_st = degree_of(g, &FaceMonomial::of_face(sigma.union(tau)))?;
    let du: FaceRingElement<F> = u.iter().map(|(f, x)| Ok((*f, normalized_derivative(x, &layout, sigma, tau, &deg_st)?))).collect::<Result<_>>()?;

    let (ue, upe, due) = (to_algebra(g, k, u)?, to_algebra(g, k, &primed)?, to_algebra(g, k, &du)?);
    let sign = square_term_sign::<RatFunc<F>>(k);
    let square = sign.clone() * deg_st.square();

    let lhs = normalized_derivative(&g.pair(&ue, &upe)?, &layout, sigma, tau, &deg_st)?;
    let rhs = g.pair(&due, &upe)? + square.clone();
    let eq1 = lhs == rhs;

    let unshift = |i: usize| if i >= shift { i - shift } else { i };
    let lhs_sub = lhs.map_vars(&unshift) - g.pair(&due, &ue)?;
    let corollary = lhs_sub == square;

    // primed and differentiated elements stay in every monomial ideal containing u
    let support = |w: &FaceRingElement<F>| w.iter().filter(|(_, x)| !x.is_zero()).map(|(f, _)| *f).collect::<Vec<_>>();
    let same_support = support(&primed) == support(u) && support(&du).iter().all(|f| support(u).contains(f));

    let witness = json!({
        "sigma": c.face_labels(sigma),
        "tau": c.face_labels(tau),
        "sign": sign.to_string(),
        "product_rule": { "lhs": lhs.to_string(), "rhs": rhs.to_string(), "holds": eq1 },
        "after_substitution": { "lhs": lhs_sub.to_string(), "rhs": square.to_string(), "holds": corollary },
        "support_preserved": same_support,
    });
    Ok(timer.finish(fp, Verdict::from_bool(eq1 && corollary && same_support), witness, ErrorBound::ZERO, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Mersenne61, F2};
    use crate::ring::symbolic_coords;
    use crate::simplicial::{named, pseudomanifold_check};

    fn symbolic<F: FiniteField>(c: &SimplicialComplex) -> GorensteinAlgebra<RatFunc<F>> {
        let mu = pseudomanifold_check::<F>(c).fundamental_class.unwrap().convert(|x| RatFunc::constant(*x));
        let a = ArtinianAlgebra::new(c.clone(), symbolic_coords::<F>(c.top_size(), c.universe()), c.top_size()).unwrap();
        GorensteinAlgebra::new(a, &mu).unwrap()
    }

    fn v(i: usize) -> Face {
        Face::from_vertices([i])
    }

    #[test]
    fn square_derivative_on_the_triangle() {
        let g2 = symbolic::<F2>(&named::boundary_simplex(2));
        let gp = symbolic::<Mersenne61>(&named::boundary_simplex(2));
        for (s, t) in [(0, 1), (1, 0), (0, 2), (2, 1)] {
            assert_eq!(verify_square_derivative_lemma(&g2, v(s), v(t)).unwrap().verdict, Verdict::Pass);
            // odd characteristic picks up the sign -1 for k = 1
            let cert = verify_square_derivative_lemma(&gp, v(s), v(t)).unwrap();
            assert_eq!(cert.verdict, Verdict::Pass);
            assert_ne!(cert.witness["lhs"], json!("0"));
        }
        assert!(verify_square_derivative_lemma(&g2, v(0), v(0)).is_err());
    }

    #[test]
    fn square_derivative_on_the_cross_polytope_at_points() {
        let c = named::cross_polytope_boundary(4);
        let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        // opposite edges of the facet {1, 3, 5, 7}
        let cert = verify_square_derivative_lemma_at_points(&c, &mu, Face::from_vertices([0, 2]), Face::from_vertices([4, 6]), 9, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.witness);
        assert!(cert.witness["points"].as_array().unwrap().iter().all(|p| p["lhs"] != json!("0")));
        assert!(cert.error_probability_bound.log2() < -100.0);
        let cert = verify_square_derivative_lemma_at_points(&c, &mu, Face::from_vertices([1, 4]), Face::from_vertices([2, 7]), 2, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.witness);
        // antipodal vertices never share a face
        assert!(verify_square_derivative_lemma_at_points(&c, &mu, Face::from_vertices([0, 2]), Face::from_vertices([1, 4]), 1, 1).is_err());
    }

    #[test]
    fn locality_of_far_vertices() {
        let g = symbolic::<F2>(&named::polygon(5));
        // vertex 4 is outside the star of the edge {1, 2}
        let cert = verify_locality(&g, v(0), v(1), 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(verify_locality(&g, v(0), v(1), 2).unwrap().verdict, Verdict::Pass);
        assert!(verify_locality(&g, v(0), v(1), 0).is_err());
        let t = symbolic::<Mersenne61>(&named::boundary_simplex(2));
        assert_eq!(verify_locality(&t, v(0), v(1), 2).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn pp_identity_on_the_triangle() {
        let g = symbolic::<F2>(&named::boundary_simplex(2));
        for s in 0..3 {
            for t in 0..3 {
                let u = g.reduce_monomial(&FaceMonomial::var(t));
                assert_eq!(verify_pp_identity(&g, v(s), &u).unwrap().verdict, Verdict::Pass);
            }
        }
        let x = |i| RatFunc::<F2>::var(i);
        let u = g.reduce(1, &[(FaceMonomial::var(0), x(3) + RatFunc::one()), (FaceMonomial::var(2), x(0) * x(5))]).unwrap();
        assert_eq!(verify_pp_identity(&g, v(1), &u).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn compatible_formula_monomial_case() {
        let g = symbolic::<F2>(&named::boundary_simplex(2));
        let u = vec![(v(1), RatFunc::one())];
        let cert = verify_compatible_formula(&g, &u, v(0)).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.witness);
    }

    #[test]
    fn compatible_formula_on_the_square() {
        let c = named::polygon(4);
        let g = symbolic::<F2>(&c);
        let layout = g.artinian().coords().layout();
        // vertex 3 lies outside the star of vertex 1; its coefficient uses the column of vertex 4
        let coeff = RatFunc::var(layout.var(0, 3)) + RatFunc::one();
        let u = vec![(v(1), RatFunc::one()), (v(2), coeff.clone())];
        let cert = verify_compatible_formula(&g, &u, v(0)).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.witness);
        // a coefficient depending on the column of σ violates compatibility
        let bad = vec![(v(1), RatFunc::one()), (v(2), RatFunc::var(layout.var(1, 0)))];
        assert_eq!(verify_compatible_formula(&g, &bad, v(0)).unwrap().verdict, Verdict::ReportOnly);
        // two support faces in the star of σ
        let two = vec![(v(1), RatFunc::one()), (v(3), coeff)];
        assert_eq!(verify_compatible_formula(&g, &two, v(0)).unwrap().verdict, Verdict::ReportOnly);
    }
}
