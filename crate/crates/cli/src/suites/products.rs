//! Suites on Segre products and their hyperplanes.

use std::collections::HashMap;

use rand::Rng;
use serde_json::{json, Value};

use segrelab_core::complement::{affine_axiom_counterexample, affinize, check_affine_axiom, AffineAxiom};
use segrelab_core::instances::{grid, projective_square};
use segrelab_core::pls::{find_isomorphism, find_parallel_isomorphism, IncidenceStructure};
use segrelab_core::segre::{correlation_of, degenerate_product_hyperplane, Correlation, ProductParallelism, SegreProduct};
use segrelab_core::spaces::{affine_space, grassmann_space, polar_space, projective_space};
use segrelab_core::PointSet;

use super::common::{constructed_catalogue, same_fibre, symplectic};
use super::{Checks, Ctx, Outcome, SuiteError};

pub fn product_pls(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let products = vec![
        ("PG(2,2)xPG(1,3)", SegreProduct::new(vec![projective_space(3, 2)?, projective_space(2, 3)?])?),
        ("W(3,2)xPG(1,2)", SegreProduct::new(vec![polar_space(&symplectic(4, 2)?)?, projective_space(2, 2)?])?),
        ("G(4,2,2)xPG(1,2)", SegreProduct::new(vec![grassmann_space(4, 2, 2)?, projective_space(2, 2)?])?),
    ];
    for (name, prod) in &products {
        let s = prod.carrier();
        c.expect(&format!("{name} is connected"), s.is_connected(), || json!(s.components().len()));
        let mut triangles = 0usize;
        for t in s.triangles() {
            triangles += 1;
            if !same_fibre(prod, &t) {
                c.expect(&format!("{name}: triangles lie in one fibre"), false, || json!(t));
                break;
            }
        }
        c.note(&format!("{name} triangles"), triangles);
        for x in s.strong_subspaces(true)? {
            if !same_fibre(prod, &x.to_vec()) {
                c.expect(&format!("{name}: strong subspaces lie in one fibre"), false, || json!(x.to_vec()));
                break;
            }
        }
        let gamma = prod.factors().iter().all(IncidenceStructure::is_gamma);
        let veblen = prod.factors().iter().all(IncidenceStructure::is_veblenian);
        c.note(&format!("{name} factors gamma"), gamma);
        c.note(&format!("{name} factors veblenian"), veblen);
        c.expect(&format!("{name}: gamma is inherited"), !gamma || s.is_gamma(), || json!(null));
        c.expect(&format!("{name}: the Veblen property is inherited"), !veblen || s.is_veblenian(), || {
            json!(s.veblen_counterexample())
        });
    }
    Ok(c.finish())
}

fn affine_products() -> Result<Vec<(&'static str, SegreProduct, Vec<segrelab_core::pls::ParallelStructure>)>, SuiteError> {
    let ag2 = affine_space(3, 3)?;
    let ag1 = affine_space(2, 3)?;
    Ok(vec![
        ("AG(2,3)xAG(2,3)", SegreProduct::new(vec![ag2.base().clone(), ag2.base().clone()])?, vec![ag2.clone(), ag2.clone()]),
        ("AG(2,3)xAG(1,3)", SegreProduct::new(vec![ag2.base().clone(), ag1.base().clone()])?, vec![ag2, ag1]),
    ])
}

pub fn product_apls(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for (name, prod, pars) in affine_products()? {
        let a = prod.parallelism(&pars, ProductParallelism::SomeComponent)?;
        c.expect(&format!("{name} is connected"), a.base().is_connected(), || json!(null));
        for ax in AffineAxiom::ALL {
            c.expect(&format!("{name}: {ax:?}"), check_affine_axiom(&a, ax), || json!(affine_axiom_counterexample(&a, ax)));
        }
    }
    Ok(c.finish())
}

pub fn componentwise_not_affine(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for (name, prod, pars) in affine_products()? {
        let a = prod.parallelism(&pars, ProductParallelism::Componentwise)?;
        c.expect(&format!("{name}: partial affine"), check_affine_axiom(&a, AffineAxiom::PartialAffine), || {
            json!(affine_axiom_counterexample(&a, AffineAxiom::PartialAffine))
        });
        let cx = affine_axiom_counterexample(&a, AffineAxiom::AffinePls);
        c.note(&format!("{name}: point and line without a parallel through the point"), &cx);
        c.expect(&format!("{name}: not affine"), cx.is_some(), || json!(null));
    }
    Ok(c.finish())
}

/// Products of two small spaces with hyperplanes: all of them where enumeration is possible,
/// constructed ones otherwise.
pub(super) fn product_catalogue(ctx: &Ctx) -> Result<Vec<(String, SegreProduct, Vec<PointSet>)>, SuiteError> {
    let mut out = Vec::new();
    for (name, prod) in [
        ("PG(1,2)xPG(1,2)", grid(2)?),
        ("PG(1,3)xPG(1,3)", grid(3)?),
        ("PG(1,2)xPG(2,2)", SegreProduct::new(vec![projective_space(2, 2)?, projective_space(3, 2)?])?),
    ] {
        let hs = prod.carrier().enumerate_hyperplanes()?;
        out.push((name.to_string(), prod, hs));
    }
    let constructed = constructed_catalogue(&mut ctx.rng())?;
    let mut it = constructed.into_iter();
    let sq = it.next().expect("projective square entry");
    out.push((sq.name, projective_square(3, 2)?, sq.hyperplanes));
    let gp = it.next().expect("Grassmann product entry");
    out.push((gp.name, SegreProduct::new(vec![grassmann_space(4, 2, 2)?, projective_space(2, 2)?])?, gp.hyperplanes));
    Ok(out)
}

pub fn slice_criterion(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut rng = ctx.rng();
    let g = grid(2)?;
    let mut grid_hyperplanes = 0;
    for mask in 0u32..(1 << 9) {
        let x = PointSet::from_indices(9, (0..9).filter(|&i| mask >> i & 1 == 1));
        let direct = g.carrier().is_hyperplane(&x);
        grid_hyperplanes += usize::from(direct);
        c.expect("3x3 grid: slice criterion agrees with the direct test", g.slice_criterion(&x) == direct, || {
            json!({ "subset": x.to_vec(), "direct": direct })
        });
    }
    c.note("grid_subsets", 512);
    c.note("grid_hyperplanes", grid_hyperplanes);
    let mut tested = 0;
    for (name, prod, hs) in product_catalogue(ctx)?.into_iter().skip(3) {
        let n = prod.num_points();
        for h in &hs {
            let mut candidates = vec![h.clone()];
            let mut toggled = h.clone();
            toggled.toggle(rng.gen_range(0..n));
            candidates.push(toggled);
            candidates.push(PointSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))));
            for x in candidates {
                tested += 1;
                let direct = prod.carrier().is_hyperplane(&x);
                c.expect(&format!("{name}: slice criterion agrees with the direct test"), prod.slice_criterion(&x) == direct, || {
                    json!({ "subset": x.to_vec(), "direct": direct })
                });
            }
        }
    }
    c.note("constructed_and_perturbed_sets", tested);
    Ok(c.finish())
}

pub fn correlation(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut count = 0;
    for (name, prod, hs) in product_catalogue(ctx)?.into_iter().filter(|(_, p, _)| p.arity() == 2) {
        for h in &hs {
            count += 1;
            let corr = correlation_of(&prod, h)?;
            c.expect(&format!("{name}: slice maps are mutually inverse"), corr.is_compatible(), || json!(h.to_vec()));
            c.expect(&format!("{name}: the maps determine the hyperplane"), corr.reconstruct(&prod) == *h, || json!(h.to_vec()));
            c.expect(&format!("{name}: some value is proper"), corr.forward.iter().chain(&corr.backward).any(|s| !s.is_full()), || {
                json!(h.to_vec())
            });
            let rebuilt = Correlation::from_forward(&prod, corr.forward.clone()).map(|(_, hh)| hh.into_points());
            c.expect(&format!("{name}: the forward map alone rebuilds the hyperplane"), rebuilt.as_ref() == Ok(h), || {
                json!(h.to_vec())
            });
        }
    }
    c.note("hyperplanes", count);
    Ok(c.finish())
}

/// Memoised per-factor predicate on slices.
struct SliceTable<'a> {
    prod: &'a SegreProduct,
    cache: HashMap<(usize, Vec<usize>), (bool, bool, bool)>,
}

impl<'a> SliceTable<'a> {
    fn new(prod: &'a SegreProduct) -> Self {
        Self { prod, cache: HashMap::new() }
    }

    /// `(proper, spiky, flappy)` for the slice of `h` through `a` in slot `i`.
    fn get(&mut self, h: &PointSet, a: usize, i: usize) -> Result<(bool, bool, bool), SuiteError> {
        let s = self.prod.slice(h, a, i);
        let key = (i, s.to_vec());
        if let Some(&v) = self.cache.get(&key) {
            return Ok(v);
        }
        let f = self.prod.factor(i);
        let v = if s.is_full() { (false, false, false) } else { (true, f.is_spiky(&s)?, f.is_flappy(&s)?) };
        self.cache.insert(key, v);
        Ok(v)
    }
}

pub fn flappy_spiky_through_slices(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for (name, prod, hs) in product_catalogue(ctx)? {
        let mut table = SliceTable::new(&prod);
        let mut nondegenerate = 0;
        for h in &hs {
            let s = prod.carrier();
            let mut all_flappy = true;
            let mut point_without_spiky_slice = None;
            for a in 0..prod.num_points() {
                let mut some_spiky = false;
                for i in 0..prod.arity() {
                    let (_, spiky, flappy) = table.get(h, a, i)?;
                    all_flappy &= flappy;
                    some_spiky |= spiky;
                }
                if !some_spiky && point_without_spiky_slice.is_none() {
                    point_without_spiky_slice = Some(a);
                }
            }
            let every_point_spiky = point_without_spiky_slice.is_none();
            // Pointwise form: a point of H is off-H adjacent iff in some slot its coordinate has a
            // neighbour off the slice.
            let pointwise = h.iter().all(|a| {
                (0..prod.arity()).any(|i| {
                    let sl = prod.slice(h, a, i);
                    !sl.is_full() && !prod.factor(i).neighbors(prod.coord(a, i)).is_subset(&sl)
                })
            });
            if prod.is_nondegenerate(h)? {
                nondegenerate += 1;
                let flappy = s.is_flappy(h)?;
                c.expect(&format!("{name}: flappy iff all slices flappy"), flappy == all_flappy, || {
                    json!({ "hyperplane": h.to_vec(), "flappy": flappy })
                });
            }
            let spiky = s.is_spiky(h)?;
            c.expect(&format!("{name}: spiky iff every point has a spiky slice"), spiky == every_point_spiky, || {
                let slices: Vec<Value> = point_without_spiky_slice
                    .map(|a| (0..prod.arity()).map(|i| json!(prod.slice(h, a, i).len())).collect())
                    .unwrap_or_default();
                json!({
                    "hyperplane": h.to_vec(),
                    "spiky": spiky,
                    "point_without_spiky_slice": point_without_spiky_slice,
                    "slice_sizes": slices,
                })
            });
            c.expect(&format!("{name}: spiky iff every hyperplane point has an off-slice neighbour in some slot"), spiky == pointwise, || {
                json!({ "hyperplane": h.to_vec(), "spiky": spiky })
            });
        }
        c.note(&format!("{name} hyperplanes"), hs.len());
        c.note(&format!("{name} non-degenerate"), nondegenerate);
    }
    Ok(c.finish())
}

pub fn linear_factors(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for (name, prod, hs) in product_catalogue(ctx)? {
        if !prod.factors().iter().all(IncidenceStructure::is_linear) {
            continue;
        }
        let mut table = SliceTable::new(&prod);
        for h in &hs {
            let s = prod.carrier();
            let nondegenerate = prod.is_nondegenerate(h)?;
            let flappy = s.is_flappy(h)?;
            c.expect(&format!("{name}: flappy iff non-degenerate"), flappy == nondegenerate, || {
                json!({ "hyperplane": h.to_vec(), "flappy": flappy })
            });
            let mut every_point_proper = true;
            for a in 0..prod.num_points() {
                let mut some = false;
                for i in 0..prod.arity() {
                    some |= table.get(h, a, i)?.0;
                }
                every_point_proper &= some;
            }
            let spiky = s.is_spiky(h)?;
            c.expect(&format!("{name}: spiky iff every point has a proper slice"), spiky == every_point_proper, || {
                json!({ "hyperplane": h.to_vec(), "spiky": spiky })
            });
        }
        c.note(&format!("{name} hyperplanes"), hs.len());
    }
    Ok(c.finish())
}

pub fn degenerate_not_flappy(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut degenerate = 0;
    for (name, prod, hs) in product_catalogue(ctx)? {
        for h in &hs {
            if let Some((a, i)) = prod.degeneracy_witness(h) {
                degenerate += 1;
                c.expect(&format!("{name}: degenerate hyperplane is not flappy"), !prod.carrier().is_flappy(h)?, || {
                    json!({ "hyperplane": h.to_vec(), "full_slice_at": [a, i] })
                });
            }
        }
    }
    c.note("degenerate_hyperplanes", degenerate);
    Ok(c.finish())
}

pub fn degenerate_product(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for (name, prod) in [("PG(2,2)xPG(2,2)", projective_square(3, 2)?), ("PG(1,3)xPG(1,3)", grid(3)?)] {
        let f0 = prod.factor(0).enumerate_hyperplanes()?;
        let f1 = prod.factor(1).enumerate_hyperplanes()?;
        let mut sizes = Vec::new();
        for h0 in &f0 {
            for h1 in &f1 {
                let h = degenerate_product_hyperplane(&prod, &[h0.clone(), h1.clone()])?.into_points();
                sizes.push(h.len());
                c.expect(&format!("{name}: degenerate"), prod.degeneracy_witness(&h).is_some(), || json!(h.to_vec()));
                c.expect(&format!("{name}: not spiky"), !prod.carrier().is_spiky(&h)?, || json!(h.to_vec()));
            }
        }
        sizes.sort_unstable();
        sizes.dedup();
        c.note(&format!("{name} hyperplane sizes"), sizes);
    }
    Ok(c.finish())
}

pub fn degenerate_complement(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for (name, prod) in [("PG(2,2)xPG(2,2)", projective_square(3, 2)?), ("PG(1,3)xPG(1,3)", grid(3)?)] {
        let hs: Vec<PointSet> = (0..2).map(|i| prod.factor(i).enumerate_hyperplanes().map(|v| v[0].clone())).collect::<Result<_, _>>()?;
        let h = degenerate_product_hyperplane(&prod, &hs)?.into_points();
        c.note(&format!("{name} |H|"), h.len());
        let a = affinize(prod.carrier(), &h)?;
        let factors: Vec<_> = (0..2).map(|i| affinize(prod.factor(i), &hs[i])).collect::<Result<_, _>>()?;
        let pp = SegreProduct::new(factors.iter().map(|f| f.structure().clone()).collect())?;
        let iso = find_isomorphism(a.structure(), pp.carrier())?;
        c.expect(&format!("{name}: complement is the product of factor complements"), iso.is_some(), || json!(null));
        let pars: Vec<_> = factors.iter().map(|f| f.carrier().clone()).collect();
        let componentwise = pp.parallelism(&pars, ProductParallelism::Componentwise)?;
        let with_par = find_parallel_isomorphism(a.carrier(), &componentwise)?;
        c.expect(&format!("{name}: parallelism is the componentwise one"), with_par.is_some(), || json!(null));
        let some_slot = pp.parallelism(&pars, ProductParallelism::SomeComponent)?;
        let other = find_parallel_isomorphism(a.carrier(), &some_slot)?;
        c.expect(&format!("{name}: parallelism differs from the some-slot one"), other.is_none(), || json!(other));
    }
    Ok(c.finish())
}
