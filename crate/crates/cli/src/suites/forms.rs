//! Suites on hyperplanes cut by segment-wise alternating forms.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use segrelab_core::instances::{bilinear_hyperplane, grid};
use segrelab_core::linalg::{enumerate_subspaces, MultiForm, PrimeField};
use segrelab_core::pls::{IncidenceStructure, PointLabel};
use segrelab_core::segre::{
    form_zero_locus, grassmann_form_hyperplane, hyperplane_from_form, intersection_hyperplane, polar_product_hyperplane,
    sesquilinear_from_hyperplane, witness_hyperplane_w, FormLocus, PolarOutcome, SegreProduct,
};
use segrelab_core::spaces::{grassmann_space, polar_space, projective_space};
use segrelab_core::PointSet;

use super::common::{form_keys, nonzero_matrices, random_form, symplectic};
use super::{Checks, Ctx, Outcome, SuiteError};

/// A product of Grassmann spaces with the segment shapes of forms on it.
struct Shape {
    name: String,
    prod: SegreProduct,
    field: PrimeField,
    dims: Vec<usize>,
    arities: Vec<usize>,
}

impl Shape {
    fn new(p: u32, factors: &[(usize, usize)]) -> Result<Self, SuiteError> {
        let spaces = factors.iter().map(|&(n, k)| grassmann_space(n, k, p)).collect::<Result<Vec<_>, _>>()?;
        let name = factors
            .iter()
            .map(|&(n, k)| if k == 1 { format!("PG({},{p})", n - 1) } else { format!("G({n},{k},{p})") })
            .collect::<Vec<_>>()
            .join("x");
        Ok(Self {
            name,
            prod: SegreProduct::new(spaces)?,
            field: PrimeField::new(p)?,
            dims: factors.iter().map(|f| f.0).collect(),
            arities: factors.iter().map(|f| f.1).collect(),
        })
    }

    /// A random form whose coefficients are zero with probability `sparsity`.
    fn random(&self, rng: &mut ChaCha8Rng, sparsity: f64) -> Result<MultiForm, SuiteError> {
        let mut mu = MultiForm::zero(self.field, self.dims.clone(), self.arities.clone())?;
        for key in form_keys(&self.dims, &self.arities) {
            if !rng.gen_bool(sparsity) {
                mu.set(key, rng.gen_range(1..self.field.p()))?;
            }
        }
        Ok(mu)
    }
}

fn small_shapes() -> Result<Vec<Shape>, SuiteError> {
    Ok(vec![
        Shape::new(2, &[(2, 1), (3, 1)])?,
        Shape::new(3, &[(2, 1), (2, 1)])?,
        Shape::new(2, &[(2, 1), (2, 1), (2, 1)])?,
        Shape::new(2, &[(4, 2), (2, 1)])?,
        Shape::new(3, &[(3, 1), (2, 1)])?,
    ])
}

/// Seeded forms on each shape: dense, sparse and very sparse ones, plus the zero form.
fn sampled_forms(ctx: &Ctx) -> Result<Vec<(Shape, Vec<MultiForm>)>, SuiteError> {
    let mut rng = ctx.rng();
    small_shapes()?
        .into_iter()
        .map(|shape| {
            let mut forms = vec![MultiForm::zero(shape.field, shape.dims.clone(), shape.arities.clone())?];
            for sparsity in [0.0, 0.6, 0.9] {
                for _ in 0..10 {
                    forms.push(shape.random(&mut rng, sparsity)?);
                }
            }
            Ok((shape, forms))
        })
        .collect()
}

pub fn locus_hyperplane_or_all(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (mut hyperplanes, mut whole) = (0, 0);
    for (shape, forms) in sampled_forms(ctx)? {
        for mu in &forms {
            let locus = form_zero_locus(&shape.prod, mu)?;
            if locus.is_full() {
                whole += 1;
            } else {
                hyperplanes += 1;
                c.expect(&format!("{}: zero locus is a hyperplane or everything", shape.name), shape.prod.carrier().is_hyperplane(&locus), || {
                    json!({ "form": format!("{mu:?}") })
                });
            }
        }
    }
    c.note("hyperplanes", hyperplanes);
    c.note("whole_space", whole);
    Ok(c.finish())
}

pub fn segment_nonzero(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (mut some, mut all) = (0, 0);
    for (shape, forms) in sampled_forms(ctx)? {
        for mu in &forms {
            let nonzero: Vec<bool> = (0..mu.segments()).map(|i| mu.segment_nonzero(i)).collect();
            if !nonzero.iter().any(|&b| b) {
                continue;
            }
            some += 1;
            let locus = form_zero_locus(&shape.prod, mu)?;
            let is_h = !locus.is_full() && shape.prod.carrier().is_hyperplane(&locus);
            c.expect(&format!("{}: non-zero on a segment gives a hyperplane", shape.name), is_h, || json!({ "form": format!("{mu:?}") }));
            if is_h && nonzero.iter().all(|&b| b) {
                all += 1;
                c.expect(&format!("{}: non-zero on all segments gives a non-degenerate hyperplane", shape.name), shape.prod.is_nondegenerate(&locus)?, || {
                    json!({ "form": format!("{mu:?}"), "degenerate_at": shape.prod.degeneracy_witness(&locus) })
                });
            }
        }
    }
    c.note("nonzero_on_some_segment", some);
    c.note("nonzero_on_all_segments", all);
    Ok(c.finish())
}

pub fn nondegenerate_exists(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut rng = ctx.rng();
    // Products whose factors admit forms non-zero on every segment.
    let shapes = [
        Shape::new(2, &[(2, 1), (2, 1)])?,
        Shape::new(3, &[(2, 1), (2, 1)])?,
        Shape::new(2, &[(2, 1), (2, 1), (2, 1)])?,
        Shape::new(2, &[(3, 1), (3, 1)])?,
        Shape::new(3, &[(3, 1), (3, 1)])?,
        Shape::new(2, &[(4, 2), (4, 2)])?,
    ];
    for shape in &shapes {
        let mut found = None;
        for tries in 1..=500 {
            let mu = shape.random(&mut rng, 0.3)?;
            if (0..mu.segments()).all(|i| mu.segment_nonzero(i)) {
                found = Some((tries, mu));
                break;
            }
        }
        let Some((tries, mu)) = found else {
            c.expect(&format!("{}: a form non-zero on all segments exists", shape.name), false, || json!({ "tries": 500 }));
            continue;
        };
        c.note(&format!("{} tries", shape.name), tries);
        let h = match hyperplane_from_form(&shape.prod, &mu)? {
            FormLocus::Hyperplane(h) => h.into_points(),
            FormLocus::AllOfSpace => PointSet::full(shape.prod.num_points()),
        };
        c.expect(&format!("{}: non-degenerate hyperplane", shape.name), !h.is_full() && shape.prod.is_nondegenerate(&h)?, || {
            json!({ "form": format!("{mu:?}") })
        });
    }
    Ok(c.finish())
}

pub fn gkz_iff_spiky(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let primes = ctx.p.map_or(vec![2, 3], |p| vec![p]);
    for p in primes {
        let g = grid(p)?;
        let field = PrimeField::new(p)?;
        let matrices = nonzero_matrices(p, 2, 2);
        let mut spiky = 0;
        for m in &matrices {
            let mu = MultiForm::bilinear(field, m)?;
            let h = bilinear_hyperplane(&g, m)?;
            let is_spiky = g.carrier().is_spiky(&h)?;
            spiky += usize::from(is_spiky);
            c.expect(&format!("PG(1,{p})xPG(1,{p}): GKZ non-degenerate iff spiky"), mu.is_gkz_nondegenerate() == is_spiky, || {
                json!({ "matrix": m, "spiky": is_spiky })
            });
        }
        c.note(&format!("p={p} forms"), matrices.len());
        c.note(&format!("p={p} spiky"), spiky);
    }
    if ctx.p.is_none() {
        let cube = SegreProduct::new(vec![projective_space(2, 2)?; 3])?;
        let field = PrimeField::new(2)?;
        let mut count = 0;
        for bits in 1u32..256 {
            let mu = MultiForm::multilinear(field, vec![2, 2, 2], |idx| bits >> (idx[0] * 4 + idx[1] * 2 + idx[2]) & 1)?;
            count += 1;
            let h = form_zero_locus(&cube, &mu)?;
            let is_spiky = cube.carrier().is_spiky(&h)?;
            c.expect("PG(1,2)^3: GKZ non-degenerate iff spiky", mu.is_gkz_nondegenerate() == is_spiky, || {
                json!({ "coefficients": bits, "spiky": is_spiky })
            });
        }
        c.note("PG(1,2)^3 forms", count);
    }
    Ok(c.finish())
}

fn locus_set(g: &IncidenceStructure, mu: &MultiForm) -> Result<Option<Vec<usize>>, SuiteError> {
    Ok(match grassmann_form_hyperplane(g, mu)? {
        FormLocus::Hyperplane(h) => Some(h.into_points().to_vec()),
        FormLocus::AllOfSpace => None,
    })
}

pub fn grassmann_hyperplanes(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let g = grassmann_space(4, 2, 2)?;
    let field = PrimeField::new(2)?;
    let enumerated: BTreeSet<Vec<usize>> = g.enumerate_hyperplanes()?.iter().map(PointSet::to_vec).collect();
    let keys: Vec<Vec<usize>> = form_keys(&[4], &[2]).into_iter().map(|k| k[0].clone()).collect();
    let mut loci = BTreeSet::new();
    let mut forms = 0;
    for bits in 1u32..(1 << keys.len()) {
        let coeffs: Vec<(Vec<usize>, u32)> = keys.iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).map(|(_, k)| (k.clone(), 1)).collect();
        let mu = MultiForm::alternating(field, 4, 2, &coeffs)?;
        forms += 1;
        match locus_set(&g, &mu)? {
            Some(h) => {
                loci.insert(h);
            }
            None => c.expect("non-zero forms cut hyperplanes", false, || json!({ "coefficients": bits })),
        }
    }
    c.note("forms", forms);
    c.note("enumerated_hyperplanes", enumerated.len());
    c.note("distinct_loci", loci.len());
    c.expect("hyperplanes of G(4,2,2) are exactly the form loci", loci == enumerated, || {
        json!({
            "only_enumerated": enumerated.difference(&loci).take(3).collect::<Vec<_>>(),
            "only_loci": loci.difference(&enumerated).take(3).collect::<Vec<_>>(),
        })
    });
    Ok(c.finish())
}

fn label_vector(s: &IncidenceStructure, x: usize) -> &[u32] {
    &s.label(x).and_then(PointLabel::subspace).expect("projective labels").basis()[0]
}

fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<u32>() % p
}

pub fn polar_hyperplanes(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let p = ctx.prime(3);
    let w = polar_space(&symplectic(4, p)?)?;
    let enumerated: BTreeSet<Vec<usize>> = w.enumerate_hyperplanes()?.iter().map(PointSet::to_vec).collect();
    let mut sections = BTreeSet::new();
    let n = w.num_points();
    for cov in nonzero_matrices(p, 1, 4) {
        let section = PointSet::from_indices(n, (0..n).filter(|&x| dot(label_vector(&w, x), &cov[0], p) == 0));
        if !section.is_full() {
            sections.insert(section.to_vec());
        }
    }
    c.note("instance", format!("W(3,{p})"));
    c.note("enumerated_hyperplanes", enumerated.len());
    c.note("sections", sections.len());
    c.expect("hyperplanes are the sections by projective hyperplanes", sections == enumerated, || {
        json!({
            "only_enumerated": enumerated.difference(&sections).take(3).collect::<Vec<_>>(),
            "only_sections": sections.difference(&enumerated).take(3).collect::<Vec<_>>(),
        })
    });
    Ok(if p == 2 { c.finish_outside_hypothesis("characteristic 2") } else { c.finish() })
}

/// The product of two symplectic polar spaces over GF(p) with the dot-product form and a few
/// seeded bilinear forms.
fn polar_square_forms(ctx: &Ctx, p: u32) -> Result<(SegreProduct, Vec<MultiForm>), SuiteError> {
    let w = polar_space(&symplectic(4, p)?)?;
    let prod = SegreProduct::new(vec![w.clone(), w])?;
    ctx.require_points("square of W(3,p)", prod.num_points())?;
    let field = PrimeField::new(p)?;
    let mut rng = ctx.rng();
    let mut forms = vec![MultiForm::bilinear(field, &segrelab_core::instances::identity(4))?];
    for _ in 0..3 {
        forms.push(random_form(field, &[4, 4], &[1, 1], &mut rng)?);
    }
    Ok((prod, forms))
}

pub fn polar_product_hyperplanes(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let p = ctx.prime(3);
    let (prod, forms) = polar_square_forms(ctx, p)?;
    let xi = symplectic(4, p)?;
    let mut built = 0;
    let mut clauses = Vec::new();
    for mu in &forms {
        match polar_product_hyperplane(&prod, mu, &[xi.clone(), xi.clone()])? {
            PolarOutcome::Hyperplane(h) => {
                built += 1;
                let h = h.into_points();
                c.expect("the section is a non-degenerate hyperplane", prod.carrier().is_hyperplane(&h) && prod.is_nondegenerate(&h)?, || {
                    json!({ "form": format!("{mu:?}") })
                });
            }
            PolarOutcome::HypothesisFailed(clause) => clauses.push(clause),
        }
    }
    c.note("instance", format!("W(3,{p})xW(3,{p})"));
    c.note("hyperplanes_built", built);
    c.note("forms_outside_hypotheses", json!(clauses));
    c.expect("some form meets the hypotheses", built > 0, || json!(null));
    Ok(if p == 2 { c.finish_outside_hypothesis("characteristic 2") } else { c.finish() })
}

/// Seeded forms on small products for the flappiness checks.
fn flappy_cases(ctx: &Ctx) -> Result<Vec<(Shape, Vec<MultiForm>)>, SuiteError> {
    let mut rng = ctx.rng();
    let mut out = Vec::new();
    for (p, factors) in [(2, vec![(4, 2), (2, 1)]), (3, vec![(3, 1), (2, 1)]), (2, vec![(3, 1), (3, 1)]), (3, vec![(2, 1), (2, 1)])] {
        let shape = Shape::new(p, &factors)?;
        let forms = (0..12).map(|_| shape.random(&mut rng, 0.2)).collect::<Result<_, _>>()?;
        out.push((shape, forms));
    }
    Ok(out)
}

pub fn segment_nondegenerate_slices(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut slices = 0;
    for (shape, forms) in flappy_cases(ctx)? {
        for mu in &forms {
            let Some(h) = hyperplane_from_form(&shape.prod, mu)?.hyperplane().map(|h| h.points().clone()) else { continue };
            for i in (0..mu.segments()).filter(|&i| mu.segment_nondegenerate(i)) {
                let f = shape.prod.factor(i);
                let mut seen = BTreeSet::new();
                for a in shape.prod.fibre_bases(i) {
                    let s = shape.prod.slice(&h, a, i);
                    if !seen.insert(s.to_vec()) {
                        continue;
                    }
                    slices += 1;
                    c.expect(&format!("{}: slices in a non-degenerate segment are flappy hyperplanes", shape.name), f.is_hyperplane(&s) && f.is_flappy(&s)?, || {
                        json!({ "form": format!("{mu:?}"), "segment": i, "slice": s.to_vec() })
                    });
                }
            }
        }
    }
    c.note("distinct_slices", slices);
    Ok(c.finish())
}

pub fn segment_nondegenerate_flappy(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut checked = 0;
    let mut check = |c: &mut Checks, name: &str, space: &IncidenceStructure, mu: &MultiForm, h: Option<&PointSet>| -> Result<(), SuiteError> {
        let Some(h) = h else {
            c.expect(&format!("{name}: non-degenerate form cuts a hyperplane"), false, || json!({ "form": format!("{mu:?}") }));
            return Ok(());
        };
        checked += 1;
        c.expect(&format!("{name}: zero locus is flappy"), space.is_flappy(h)?, || {
            json!({ "form": format!("{mu:?}"), "line": space.non_flappy_line(h) })
        });
        Ok(())
    };
    for (shape, forms) in flappy_cases(ctx)? {
        for mu in forms.iter().filter(|mu| (0..mu.segments()).all(|i| mu.segment_nondegenerate(i))) {
            let h = hyperplane_from_form(&shape.prod, mu)?;
            check(&mut c, &shape.name, shape.prod.carrier(), mu, h.hyperplane().map(|h| h.points()))?;
        }
    }
    let p = ctx.prime(3);
    let g = grassmann_space(4, 2, p)?;
    let mut rng = ctx.rng();
    let mut forms = vec![symplectic(4, p)?.to_multiform()?];
    for _ in 0..12 {
        forms.push(random_form(PrimeField::new(p)?, &[4], &[2], &mut rng)?);
    }
    for mu in forms.iter().filter(|mu| mu.segment_nondegenerate(0)) {
        let h = grassmann_form_hyperplane(&g, mu)?;
        check(&mut c, &format!("G(4,2,{p})"), &g, mu, h.hyperplane().map(|h| h.points()))?;
    }
    c.note("forms_nondegenerate_on_all_segments", checked);
    c.expect("some form is non-degenerate on all segments", checked > 0, || json!(null));
    Ok(c.finish())
}

pub fn symplectic_polar_flappy(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let p = ctx.prime(3);
    let (prod, forms) = polar_square_forms(ctx, p)?;
    let xi = symplectic(4, p)?;
    let mut flappy = 0;
    for mu in forms.iter().filter(|mu| (0..2).all(|i| mu.segment_nonzero(i))) {
        if let PolarOutcome::Hyperplane(h) = polar_product_hyperplane(&prod, mu, &[xi.clone(), xi.clone()])? {
            let h = h.into_points();
            let is_flappy = prod.carrier().is_flappy(&h)?;
            flappy += usize::from(is_flappy);
            c.expect("the section is flappy", is_flappy, || {
                json!({ "form": format!("{mu:?}"), "line_not_in_any_point_perp": prod.carrier().non_flappy_line(&h).map(|l| prod.carrier().line(l).to_vec()) })
            });
        }
    }
    c.note("instance", format!("W(3,{p})xW(3,{p})"));
    c.note("flappy_hyperplanes", flappy);
    c.expect("some form gives a hyperplane", flappy > 0 || c.failed(), || json!(null));
    Ok(if p == 2 { c.finish_outside_hypothesis("characteristic 2") } else { c.finish() })
}

fn isotropic_lines(p: u32) -> Result<(IncidenceStructure, PointSet), SuiteError> {
    let g = grassmann_space(4, 2, p)?;
    let mu = symplectic(4, p)?.to_multiform()?;
    match grassmann_form_hyperplane(&g, &mu)? {
        FormLocus::Hyperplane(h) => Ok((g, h.into_points())),
        FormLocus::AllOfSpace => Err(SuiteError::Internal("symplectic form vanishes on every line".into())),
    }
}

pub fn isotropic_lines_flappy(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let p = ctx.prime(3);
    let (g, h) = isotropic_lines(p)?;
    c.note("instance", format!("G(4,2,{p})"));
    c.note("points", g.num_points());
    c.note("hyperplane_size", h.len());
    c.expect("isotropic lines form a hyperplane", g.is_hyperplane(&h), || json!(null));
    c.expect("the hyperplane is flappy", g.is_flappy(&h)?, || json!({ "line": g.non_flappy_line(&h) }));
    if ctx.p.is_none() {
        let (g2, h2) = isotropic_lines(2)?;
        c.note("G(4,2,2) flappy, outside hypothesis", g2.is_flappy(&h2)?);
    }
    Ok(if p == 2 { c.finish_outside_hypothesis("characteristic 2") } else { c.finish() })
}

pub fn projective_pair_bilinear(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let primes = ctx.p.map_or(vec![2, 3, 5], |p| vec![p]);
    let mut cases: Vec<(String, SegreProduct, usize)> = Vec::new();
    for p in primes {
        cases.push((format!("PG(1,{p})xPG(1,{p})"), grid(p)?, 2));
    }
    if ctx.p.is_none() {
        cases.push(("PG(1,2)xPG(2,2)".into(), SegreProduct::new(vec![projective_space(2, 2)?, projective_space(3, 2)?])?, 3));
    }
    for (name, prod, cols) in &cases {
        let rows = prod.factor(0).label(0).and_then(PointLabel::subspace).map_or(0, |u| u.ambient_dim());
        let p = prod.factor(0).label(0).and_then(PointLabel::subspace).map_or(0, |u| u.field().p());
        let hs = prod.carrier().enumerate_hyperplanes()?;
        let expected = nonzero_matrices(p, rows, *cols).len();
        c.expect_eq(&format!("{name}: one hyperplane per form up to scalar"), hs.len(), expected);
        for h in &hs {
            let m = sesquilinear_from_hyperplane(prod, h);
            let ok = m.as_ref().ok().map(|m| bilinear_hyperplane(prod, m)).transpose()?;
            c.expect(&format!("{name}: hyperplane is a bilinear zero locus"), ok.as_ref() == Some(h), || {
                json!({ "hyperplane": h.to_vec(), "error": m.err().map(|e| e.to_string()) })
            });
        }
    }
    Ok(c.finish())
}

/// The determinant-like alternating trilinear form with coefficient `coeffs[s]` on the
/// 3-subset `s` of coordinates.
fn alternating_trilinear(field: PrimeField, n: usize, coeffs: &[(Vec<usize>, u32)]) -> Result<MultiForm, SuiteError> {
    let p = field.p();
    Ok(MultiForm::multilinear(field, vec![n; 3], |idx| {
        if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
            return 0;
        }
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        let c = coeffs.iter().find(|(s, _)| *s == sorted).map_or(0, |&(_, v)| v);
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| idx[i] > idx[j]).count();
        if inversions % 2 == 0 { c } else { (p - c) % p }
    })?)
}

pub fn alternating_not_spiky(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut cases: Vec<(String, SegreProduct, MultiForm)> = Vec::new();
    for p in [2, 3] {
        let cube = SegreProduct::new(vec![projective_space(3, p)?; 3])?;
        if ctx.require_points("cube of the plane", cube.num_points()).is_ok() {
            let det = alternating_trilinear(PrimeField::new(p)?, 3, &[(vec![0, 1, 2], 1)])?;
            cases.push((format!("PG(2,{p})^3 with the determinant"), cube, det));
        }
    }
    let cube = SegreProduct::new(vec![projective_space(4, 2)?; 3])?;
    let triples = form_keys(&[4], &[3]);
    let field = PrimeField::new(2)?;
    for bits in 1u32..16 {
        let coeffs: Vec<(Vec<usize>, u32)> = triples.iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).map(|(_, k)| (k[0].clone(), 1)).collect();
        cases.push((format!("PG(3,2)^3 alternating form {bits:04b}"), cube.clone(), alternating_trilinear(field, 4, &coeffs)?));
    }
    for (name, prod, mu) in &cases {
        match hyperplane_from_form(prod, mu)? {
            FormLocus::Hyperplane(h) => {
                let h = h.into_points();
                c.expect(&format!("{name}: not spiky"), !prod.carrier().is_spiky(&h)?, || json!(null));
                c.expect(&format!("{name}: not flappy"), !prod.carrier().is_flappy(&h)?, || json!(null));
            }
            FormLocus::AllOfSpace => c.expect(&format!("{name}: form cuts a hyperplane"), false, || json!(null)),
        }
    }
    c.note("forms", cases.len());
    Ok(c.finish())
}

pub fn meeting_hyperplanes(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut sizes = Vec::new();
    for (n, k, p, limit) in [(4, 2, 2, usize::MAX), (4, 2, 3, 10), (5, 2, 2, 5), (5, 3, 2, 5)] {
        let g = grassmann_space(n, k, p)?;
        let ws = enumerate_subspaces(n, n - k, PrimeField::new(p)?)?;
        let name = format!("G({n},{k},{p})");
        let mut distinct = BTreeSet::new();
        for w in ws.iter().take(limit) {
            let h = witness_hyperplane_w(&g, w)?.into_points();
            distinct.insert(h.len());
            c.expect(&format!("{name}: H(W) is not spiky"), !g.is_spiky(&h)?, || json!({ "W": w.basis() }));
        }
        sizes.push(json!({ "space": name, "sizes": distinct }));
        if (n, k, p) == (4, 2, 2) {
            c.expect_eq("G(4,2,2): |H(W)|", distinct.into_iter().collect::<Vec<_>>(), vec![19]);
        }
    }
    c.note("hyperplane_sizes", sizes);
    Ok(c.finish())
}

pub fn complementary_pair_hyperplane(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let primes = ctx.p.map_or(vec![2], |p| vec![p]);
    for p in primes {
        let g = grassmann_space(4, 2, p)?;
        let prod = SegreProduct::new(vec![g.clone(), g])?;
        ctx.require_points("square of G(4,2,p)", prod.num_points())?;
        let h = intersection_hyperplane(&prod)?.into_points();
        let name = format!("G(4,2,{p})xG(4,2,{p})");
        c.note(&format!("{name} |H|"), h.len());
        if p == 2 {
            c.expect_eq(&format!("{name}: |H|"), h.len(), 665);
        }
        c.expect(&format!("{name}: non-degenerate"), prod.is_nondegenerate(&h)?, || json!(prod.degeneracy_witness(&h)));
        c.expect(&format!("{name}: not spiky"), !prod.carrier().is_spiky(&h)?, || json!(null));
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_vanishes_on_repeated_points() {
        let f = PrimeField::new(3).unwrap();
        let det = alternating_trilinear(f, 3, &[(vec![0, 1, 2], 1)]).unwrap();
        let e = |i: usize| (0..3).map(|j| u32::from(i == j)).collect::<Vec<u32>>();
        assert_eq!(det.eval(&[vec![e(0)], vec![e(1)], vec![e(2)]]).unwrap(), 1);
        assert_eq!(det.eval(&[vec![e(1)], vec![e(0)], vec![e(2)]]).unwrap(), 2);
        assert_eq!(det.eval(&[vec![e(0)], vec![e(0)], vec![e(2)]]).unwrap(), 0);
    }

    #[test]
    fn sampled_forms_are_deterministic() {
        let ctx = Ctx::default();
        let a: Vec<_> = sampled_forms(&ctx).unwrap().into_iter().map(|(_, f)| f).collect();
        let b: Vec<_> = sampled_forms(&ctx).unwrap().into_iter().map(|(_, f)| f).collect();
        assert_eq!(a, b);
    }
}
