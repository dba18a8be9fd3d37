//! Suites on hyperplane complements: affine axioms, strong subspaces, recovery of the ambient
//! space, parallelism from incidence, and automorphisms.

use std::collections::{BTreeSet, HashMap};

use serde_json::{json, Value};

use segrelab_core::complement::{
    affine_axiom_counterexample, affinize, check_affine_axiom, covering, extend_automorphism, induced_parallel,
    near_flappy_violation, near_plane_line_violation, quadrangle_relations, recover_directions, restrict_automorphism,
    strong_transfer_counterexample, AffineAxiom, AffinizedStructure, NaturalParallelism,
};
use segrelab_core::instances::{grid, grid_perp_hyperplane};
use segrelab_core::pls::{automorphism_group, find_isomorphism, find_parallel_isomorphism, restrict_set, IncidenceStructure, PointLabel};
use segrelab_core::segre::{degenerate_product_hyperplane, ProductParallelism, SegreProduct};
use segrelab_core::spaces::{affine_space, projective_space};
use segrelab_core::PointSet;

use super::common::{
    constructed_catalogue, enumerated_catalogue, gl_order, identity_complement, identity_square, membership_colors,
    plane_and_line, stabiliser_order, Catalogued,
};
use super::products::product_catalogue;
use super::{Checks, Ctx, Outcome, SuiteError};

/// Every catalogued space with lines of at least 3 points, with a thinned sample of the large
/// projective-square family.
fn affinizable_catalogue(ctx: &Ctx) -> Result<Vec<Catalogued>, SuiteError> {
    let mut all = enumerated_catalogue()?;
    for mut cat in constructed_catalogue(&mut ctx.rng())? {
        if cat.hyperplanes.len() > 64 {
            let step = cat.hyperplanes.len() / 64;
            cat.hyperplanes = cat.hyperplanes.into_iter().step_by(step).collect();
        }
        all.push(cat);
    }
    all.retain(|c| c.space.min_line_size() >= 3);
    Ok(all)
}

pub fn affine_reduct(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut complements = 0;
    for cat in affinizable_catalogue(ctx)? {
        let m = &cat.space;
        let linear = m.is_linear();
        let veblen = m.is_veblenian();
        for h in &cat.hyperplanes {
            complements += 1;
            let a = affinize(m, h)?;
            let par = a.carrier();
            let at = |what: &str| format!("{}: {what}", cat.name);
            c.expect(&at("complement is partial affine"), check_affine_axiom(par, AffineAxiom::PartialAffine), || {
                json!({ "hyperplane": h.to_vec(), "counterexample": affine_axiom_counterexample(par, AffineAxiom::PartialAffine) })
            });
            let affine = check_affine_axiom(par, AffineAxiom::AffinePls);
            if m.is_spiky(h)? {
                let all_adjacent = h.iter().all(|x| m.neighbors(x).union(h).is_full());
                c.expect(&at("spiky: affine iff hyperplane points see every outside point"), affine == all_adjacent, || {
                    json!({ "hyperplane": h.to_vec(), "affine": affine })
                });
            }
            if linear {
                c.expect(&at("linear ambient gives an affine linear space"), affine && a.structure().is_linear(), || {
                    json!({ "hyperplane": h.to_vec() })
                });
            }
            if veblen {
                for ax in [AffineAxiom::Tamaschke, AffineAxiom::Parallelogram] {
                    c.expect(&at(&format!("Veblenian ambient gives {ax:?}")), check_affine_axiom(par, ax), || {
                        json!({ "hyperplane": h.to_vec(), "counterexample": affine_axiom_counterexample(par, ax) })
                    });
                }
            }
        }
    }
    c.note("complements", complements);
    Ok(c.finish())
}

pub fn converse_fails(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let pg32 = projective_space(4, 2)?;
    let plane = pg32.enumerate_hyperplanes()?.swap_remove(0);
    for (name, m, h) in [("PG(2,3)", plane_and_line(3)?.0, plane_and_line(3)?.1), ("PG(3,2)", pg32, plane)] {
        let kept: Vec<Vec<usize>> = m.lines().iter().filter(|l| !l.iter().all(|&x| h.contains(x))).cloned().collect();
        let stripped = IncidenceStructure::new(m.num_points(), kept)?;
        c.expect(&format!("{name} without the lines of H is not linear"), !stripped.is_linear(), || json!(null));
        c.expect(&format!("{name}: H is still a hyperplane"), stripped.is_hyperplane(&h), || json!(h.to_vec()));
        let a = affinize(&stripped, &h)?;
        c.expect(&format!("{name}: complement is an affine linear space"), a.structure().is_linear() && check_affine_axiom(a.carrier(), AffineAxiom::AffinePls), || {
            json!(null)
        });
        c.expect(&format!("{name}: complement unchanged"), a.structure() == affinize(&m, &h)?.structure(), || json!(null));
    }
    Ok(c.finish())
}

/// Two planes of the projective 3-space over GF(p) meeting in a line, with that line.
fn two_planes(p: u32) -> Result<(IncidenceStructure, PointSet), SuiteError> {
    let pg = projective_space(4, p)?;
    let coord = |x: usize, i: usize| pg.label(x).and_then(PointLabel::subspace).expect("labelled").basis()[0][i];
    let n = pg.num_points();
    let union = PointSet::from_indices(n, (0..n).filter(|&x| coord(x, 2) == 0 || coord(x, 3) == 0));
    let line = PointSet::from_indices(n, (0..n).filter(|&x| coord(x, 2) == 0 && coord(x, 3) == 0));
    let (s, map) = pg.induced(&union)?;
    Ok((s, restrict_set(&line, &map)))
}

pub fn disconnected_complement(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    for p in [2, 3] {
        let (m, h) = two_planes(p)?;
        let at = |what: &str| format!("two planes over GF({p}): {what}");
        c.expect(&at("strongly connected"), m.is_strongly_connected()?, || json!(null));
        c.expect(&at("Veblenian gamma space"), m.is_veblenian() && m.is_gamma(), || json!(null));
        c.expect(&at("common line is a hyperplane"), m.is_hyperplane(&h), || json!(h.to_vec()));
        c.expect(&at("common line is flappy"), m.is_flappy(&h)?, || json!(m.non_flappy_line(&h)));
        let a = affinize(&m, &h)?;
        let comps = a.structure().components();
        c.note(&format!("GF({p}) complement components"), comps.len());
        c.expect(&at("complement is disconnected"), comps.len() > 1, || json!(comps.len()));
    }
    Ok(c.finish())
}

/// Catalogued spaces and hyperplanes meeting the Veblen, gamma and line-size hypotheses.
fn veblen_gamma_catalogue(ctx: &Ctx, min_line: usize) -> Result<Vec<Catalogued>, SuiteError> {
    let mut all = enumerated_catalogue()?;
    all.extend(constructed_catalogue(&mut ctx.rng())?);
    all.retain(|c| c.space.min_line_size() >= min_line && c.space.is_gamma() && c.space.is_veblenian());
    Ok(all)
}

pub fn strong_transfer(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut names = Vec::new();
    for cat in veblen_gamma_catalogue(ctx, 4)? {
        names.push(cat.name.clone());
        for h in &cat.hyperplanes {
            let a = affinize(&cat.space, h)?;
            let cx = strong_transfer_counterexample(&a)?;
            c.expect(&format!("{}: strong subspaces correspond", cat.name), cx.is_none(), || {
                json!({ "hyperplane": h.to_vec(), "ambient_set": cx.map(|s| s.to_vec()) })
            });
        }
    }
    c.note("spaces", names);
    Ok(c.finish())
}

pub fn recover_hyperplane(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let pg33 = projective_space(4, 3)?;
    let plane = pg33.enumerate_hyperplanes()?.swap_remove(0);
    let a = affinize(&pg33, &plane)?;
    let rec = recover_directions(&a)?;
    c.expect("PG(3,3) minus a plane: classes rebuild the plane", rec.matches_ambient(&a), || json!(null));
    let iso = find_isomorphism(&rec.structure()?, &projective_space(3, 3)?)?;
    c.expect("PG(3,3) minus a plane: rebuilt structure is PG(2,3)", iso.is_some(), || {
        json!({ "points": rec.num_points, "lines": rec.lines.len() })
    });
    let mut recovered = 0;
    for cat in veblen_gamma_catalogue(ctx, 3)? {
        for h in &cat.hyperplanes {
            if !cat.space.is_flappy(h)? {
                continue;
            }
            recovered += 1;
            let a = affinize(&cat.space, h)?;
            let rec = recover_directions(&a)?;
            c.expect(&format!("{}: classes rebuild the hyperplane", cat.name), rec.matches_ambient(&a), || json!(h.to_vec()));
        }
    }
    c.note("flappy_hyperplanes_recovered", recovered);
    Ok(c.finish())
}

/// Checks restriction and extension against each other and compares the group orders.
fn check_extension(c: &mut Checks, name: &str, a: &AffinizedStructure) -> Result<(u128, u128), SuiteError> {
    let m = a.ambient();
    let colors = membership_colors(a.removed());
    let stab = automorphism_group(m, None, Some(&colors))?;
    let aut = automorphism_group(a.structure(), Some(a.carrier()), None)?;
    for g in &stab.generators {
        let f = restrict_automorphism(a, g)?;
        c.expect(&format!("{name}: restriction is an automorphism"), a.structure().is_automorphism(&f) && a.carrier().is_automorphism(&f), || {
            json!({ "generator": g })
        });
        c.expect(&format!("{name}: extending the restriction gives the original"), extend_automorphism(a, &f).as_ref() == Ok(g), || {
            json!({ "generator": g })
        });
    }
    for f in &aut.generators {
        let ext = extend_automorphism(a, f);
        let back = ext.as_ref().ok().map(|e| restrict_automorphism(a, e)).transpose()?;
        c.expect(&format!("{name}: complement automorphism extends"), back.as_ref() == Some(f), || {
            json!({ "generator": f, "error": ext.err().map(|e| e.to_string()) })
        });
    }
    c.expect_eq(&format!("{name}: group orders"), aut.order, stab.order);
    Ok((aut.order, stab.order))
}

pub fn aut_extension(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (pg23, line) = plane_and_line(3)?;
    let pg32 = projective_space(4, 2)?;
    let plane = pg32.enumerate_hyperplanes()?.swap_remove(0);
    let (_, grid3) = identity_complement(2, 3)?;
    let (_, sq) = identity_complement(3, 2)?;
    let cases = vec![
        ("PG(2,3) minus a line", affinize(&pg23, &line)?),
        ("PG(3,2) minus a plane", affinize(&pg32, &plane)?),
        ("PG(1,3)xPG(1,3) minus the identity-form hyperplane", grid3),
        ("PG(2,2)xPG(2,2) minus the identity-form hyperplane", sq),
    ];
    for (name, a) in &cases {
        let (aut, _) = check_extension(&mut c, name, a)?;
        c.note(&format!("{name} |Aut|"), aut.to_string());
    }
    Ok(c.finish())
}

pub fn near_planes(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (mut all, mut flappy) = (0, 0);
    for cat in veblen_gamma_catalogue(ctx, 3)? {
        if cat.space.num_points() > 200 {
            continue;
        }
        for h in &cat.hyperplanes {
            all += 1;
            let v = near_plane_line_violation(&cat.space, h);
            c.expect(&format!("{}: near-planes meet the hyperplane in a line", cat.name), v.is_none(), || {
                json!({ "hyperplane": h.to_vec(), "point_and_line": v })
            });
            if cat.space.is_flappy(h)? {
                flappy += 1;
                let v = near_flappy_violation(&cat.space, h);
                c.expect(&format!("{}: every hyperplane line lies in a near-plane", cat.name), v.is_none(), || {
                    json!({ "hyperplane": h.to_vec(), "line": v })
                });
            }
        }
    }
    c.note("hyperplanes", all);
    c.note("flappy", flappy);
    Ok(c.finish())
}

pub fn aut_extends(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut cases: Vec<(String, IncidenceStructure, PointSet)> = Vec::new();
    let pg33 = projective_space(4, 3)?;
    let plane = pg33.enumerate_hyperplanes()?.swap_remove(0);
    cases.push(("PG(3,3) minus a plane".into(), pg33, plane));
    let (planes, line) = two_planes(2)?;
    cases.push(("two planes of PG(3,2) minus their common line".into(), planes, line));
    for cat in enumerated_catalogue()? {
        if matches!(cat.name.as_str(), "W(3,3)" | "G(4,2,2)") {
            let mut chosen = None;
            for h in &cat.hyperplanes {
                if cat.space.is_flappy(h)? {
                    chosen = Some(h.clone());
                    break;
                }
            }
            if let Some(h) = chosen {
                cases.push((format!("{} minus a flappy hyperplane", cat.name), cat.space, h));
            }
        }
    }
    for (name, m, h) in &cases {
        let a = affinize(m, h)?;
        let (aut, _) = check_extension(&mut c, name, &a)?;
        let plain = automorphism_group(a.structure(), None, None)?.order;
        c.note(&format!("{name} |Aut| with parallelism"), aut.to_string());
        c.note(&format!("{name} |Aut| of the bare incidence structure"), plain.to_string());
    }
    c.note("cases", cases.len());
    Ok(c.finish())
}

pub fn spiky_product_not_affine(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut spiky = 0;
    for (name, prod, hs) in product_catalogue(ctx)? {
        if prod.factors().iter().any(|f| f.num_points() < 3) {
            continue;
        }
        for h in &hs {
            if !prod.carrier().is_spiky(h)? {
                continue;
            }
            spiky += 1;
            let a = affinize(prod.carrier(), h)?;
            c.expect(&format!("{name}: spiky complement is not affine"), !check_affine_axiom(a.carrier(), AffineAxiom::AffinePls), || {
                json!(h.to_vec())
            });
        }
    }
    c.note("spiky_hyperplanes", spiky);
    Ok(c.finish())
}

/// The ambient space rebuilt from the complement: complement points plus one point per parallel
/// class, each line extended by its class, plus the recovered lines on the classes.
fn rebuild(a: &AffinizedStructure) -> Result<IncidenceStructure, SuiteError> {
    let rec = recover_directions(a)?;
    let s = a.structure();
    let par = a.carrier();
    let n = s.num_points();
    let mut lines: Vec<Vec<usize>> = (0..s.num_lines())
        .map(|l| s.line(l).iter().copied().chain([n + par.class_of(l)]).collect())
        .collect();
    lines.extend(rec.lines.iter().map(|l| l.iter().map(|&k| n + k).collect()));
    Ok(IncidenceStructure::new(n + par.classes().len(), lines)?)
}

pub fn product_recovered(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut cases: Vec<(String, SegreProduct, PointSet)> = Vec::new();
    let g2 = grid(2)?;
    let perp = grid_perp_hyperplane(&g2)?;
    cases.push(("PG(1,2)xPG(1,2) perp".into(), g2, perp));
    let (g3, h) = identity_square(2, 3)?;
    cases.push(("PG(1,3)xPG(1,3) identity form".into(), g3, h));
    let (sq, h) = identity_square(3, 2)?;
    cases.push(("PG(2,2)xPG(2,2) identity form".into(), sq, h));
    for (name, prod, hs) in product_catalogue(ctx)? {
        if !name.starts_with("G(4,2,2)") && !name.starts_with("PG(1,2)xPG(2,2)") {
            continue;
        }
        let mut taken = 0;
        for h in hs {
            if taken < 3 && prod.is_nondegenerate(&h)? && prod.carrier().is_flappy(&h)? {
                taken += 1;
                cases.push((name.clone(), prod.clone(), h));
            }
        }
    }
    for (name, prod, h) in &cases {
        let m = prod.carrier();
        c.expect(&format!("{name}: non-degenerate and flappy"), prod.is_nondegenerate(h)? && m.is_flappy(h)?, || json!(h.to_vec()));
        let a = affinize(m, h)?;
        let rebuilt = rebuild(&a)?;
        let iso = find_isomorphism(&rebuilt, m)?;
        c.expect(&format!("{name}: product rebuilt from the complement"), iso.is_some(), || {
            json!({ "points": rebuilt.num_points(), "lines": rebuilt.num_lines() })
        });
    }
    c.note("cases", cases.iter().map(|(n, _, h)| format!("{n} |H|={}", h.len())).collect::<Vec<_>>());
    Ok(c.finish())
}

/// Fails with a hypothesis error when lines would have fewer than 4 points.
fn line_size_gate(ctx: &Ctx) -> Result<u32, SuiteError> {
    let p = ctx.prime(3);
    if p < 3 {
        return Err(SuiteError::Hypothesis(format!("projective lines over GF({p}) have {} < 4 points", p + 1)));
    }
    Ok(p)
}

/// Products of projective spaces over GF(p) with complements: the grid with all its
/// hyperplanes, and the square of the plane with a non-degenerate and a degenerate hyperplane.
fn strong_instances(ctx: &Ctx) -> Result<Vec<(String, SegreProduct, AffinizedStructure)>, SuiteError> {
    let p = line_size_gate(ctx)?;
    let mut out = Vec::new();
    let g = grid(p)?;
    ctx.require_points("grid", g.num_points())?;
    if g.num_points() <= 40 {
        for h in g.carrier().enumerate_hyperplanes()? {
            let a = affinize(g.carrier(), &h)?;
            out.push((format!("PG(1,{p})xPG(1,{p})"), g.clone(), a));
        }
    }
    let (sq, a) = identity_complement(3, p)?;
    ctx.require_points("square of the plane", sq.num_points())?;
    out.push((format!("PG(2,{p})xPG(2,{p}) identity form"), sq.clone(), a));
    let lines = [sq.factor(0).line_set(0), sq.factor(1).line_set(0)];
    let h = degenerate_product_hyperplane(&sq, &lines)?.into_points();
    out.push((format!("PG(2,{p})xPG(2,{p}) union of two line cylinders"), sq.clone(), affinize(sq.carrier(), &h)?));
    Ok(out)
}

pub fn product_strong_transfer(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let instances = strong_instances(ctx)?;
    for (name, _, a) in &instances {
        let cx = strong_transfer_counterexample(a)?;
        c.expect(&format!("{name}: strong subspaces correspond"), cx.is_none(), || {
            json!({ "hyperplane": a.removed().to_vec(), "ambient_set": cx.map(|s| s.to_vec()) })
        });
    }
    c.note("complements", instances.len());
    Ok(c.finish())
}

pub fn product_strong_in_slices(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let instances = strong_instances(ctx)?;
    for (name, prod, a) in &instances {
        let maximal: BTreeSet<Vec<usize>> = a.structure().strong_subspaces(true)?.iter().map(PointSet::to_vec).collect();
        let substituted: BTreeSet<Vec<usize>> = covering(prod, a)?.iter().map(|m| m.points.to_vec()).collect();
        c.expect(&format!("{name}: maximal strong subspaces are substituted slice subspaces"), maximal == substituted, || {
            json!({
                "hyperplane": a.removed().to_vec(),
                "only_in_complement": maximal.difference(&substituted).take(3).collect::<Vec<_>>(),
                "only_substituted": substituted.difference(&maximal).take(3).collect::<Vec<_>>(),
            })
        });
    }
    c.note("complements", instances.len());
    Ok(c.finish())
}

pub fn product_strong_affine(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let instances = strong_instances(ctx)?;
    let mut subspaces = 0;
    for (name, _, a) in &instances {
        let par = a.carrier();
        for ax in [AffineAxiom::Tamaschke, AffineAxiom::Parallelogram] {
            c.expect(&format!("{name}: {ax:?}"), check_affine_axiom(par, ax), || {
                json!({ "hyperplane": a.removed().to_vec(), "counterexample": affine_axiom_counterexample(par, ax) })
            });
        }
        for x in a.structure().strong_subspaces(true)? {
            subspaces += 1;
            let (sub, _) = induced_parallel(par, &x)?;
            for ax in AffineAxiom::ALL {
                c.expect(&format!("{name}: strong subspace satisfies {ax:?}"), check_affine_axiom(&sub, ax), || {
                    json!({ "subspace": x.to_vec(), "counterexample": affine_axiom_counterexample(&sub, ax) })
                });
            }
        }
    }
    c.note("strong_subspaces", subspaces);
    Ok(c.finish())
}

pub fn parallelism_from_incidence_affine(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let ag = affine_space(3, 3)?;
    let prod = SegreProduct::new(vec![ag.base().clone(), ag.base().clone()])?;
    let pars = [ag.clone(), ag];
    let par = prod.parallelism(&pars, ProductParallelism::SomeComponent)?;
    let comp = prod.parallelism(&pars, ProductParallelism::Componentwise)?;
    let s = prod.carrier();
    let ast = quadrangle_relations(s).ast;
    let nl = s.num_lines();
    let veblen: Vec<PointSet> = (0..nl)
        .map(|l| PointSet::from_indices(nl, (0..nl).filter(|&k| segrelab_core::complement::par_veblen(s, l, k))))
        .collect();
    let (mut a_bad, mut b_bad, mut c_bad) = (Vec::new(), Vec::new(), Vec::new());
    for l1 in 0..nl {
        for l2 in 0..nl {
            if comp.parallel(l1, l2) != veblen[l1].contains(l2) {
                a_bad.push((l1, l2));
            }
            if ast[l1].contains(l2) && !par.parallel(l1, l2) {
                b_bad.push((l1, l2));
            }
            let composed = (0..nl).any(|l3| comp.parallel(l1, l3) && (l3 == l2 || ast[l3].contains(l2)));
            if composed != par.parallel(l1, l2) {
                c_bad.push((l1, l2));
            }
        }
    }
    c.note("lines", nl);
    c.note("pairs", nl * nl);
    c.expect("(a) componentwise parallelism equals the Veblen relation", a_bad.is_empty(), || json!(a_bad.first()));
    c.expect("(b) quadrangle-opposite lines are parallel", b_bad.is_empty(), || json!(b_bad.first()));
    c.expect("(c) parallelism is the Veblen relation composed with the quadrangle relation", c_bad.is_empty(), || json!(c_bad.first()));
    Ok(c.finish())
}

/// The product of two planes over GF(p) minus its identity-form hyperplane.
fn oracle_instance(ctx: &Ctx) -> Result<(String, SegreProduct, AffinizedStructure), SuiteError> {
    let p = line_size_gate(ctx)?;
    let n = (p * p + p + 1) as usize;
    ctx.require_points("square of the plane", n * n)?;
    let (prod, a) = identity_complement(3, p)?;
    Ok((format!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane"), prod, a))
}

fn slot_of(prod: &SegreProduct, a: &AffinizedStructure, l: usize) -> usize {
    prod.line_provenance(a.ambient_line(l)).slot
}

/// Pairs of lines through a common hyperplane point in different slots that are not
/// quadrangle-related.
fn cross_slot_gap(prod: &SegreProduct, a: &AffinizedStructure) -> (usize, Vec<(usize, usize)>) {
    let quadr = quadrangle_relations(a.structure()).quadr;
    let nl = a.structure().num_lines();
    let mut pairs = 0;
    let mut missed = Vec::new();
    for l1 in 0..nl {
        for l2 in l1 + 1..nl {
            if a.direction(l1) == a.direction(l2) && slot_of(prod, a, l1) != slot_of(prod, a, l2) {
                pairs += 1;
                if !quadr[l1].contains(l2) {
                    missed.push((l1, l2));
                }
            }
        }
    }
    (pairs, missed)
}

/// The same checks on squares of projective lines over GF(5), where lines have 6 points.
fn supplementary(check: impl Fn(&SegreProduct, &AffinizedStructure) -> Result<Value, SuiteError>) -> Result<Value, SuiteError> {
    let (prod, a) = identity_complement(2, 5)?;
    Ok(json!({ "instance": "PG(1,5)xPG(1,5) minus the identity-form hyperplane", "result": check(&prod, &a)? }))
}

pub fn cross_slot_quadrangles(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (name, prod, a) = oracle_instance(ctx)?;
    let (pairs, missed) = cross_slot_gap(&prod, &a);
    c.note("instance", &name);
    c.note("cross_slot_pairs", pairs);
    c.note("missed", missed.len());
    c.note(
        "supplementary",
        supplementary(|p, a| {
            let (pairs, missed) = cross_slot_gap(p, a);
            Ok(json!({ "cross_slot_pairs": pairs, "missed": missed.len() }))
        })?,
    );
    c.expect(&format!("{name}: cross-slot lines through a hyperplane point are quadrangle-parallel"), missed.is_empty(), || {
        json!({ "first_pair": missed.first(), "missed": missed.len() })
    });
    Ok(c.finish())
}

/// Disagreements between the split rule and the direction oracle.
fn split_rule_disagreements(prod: &SegreProduct, a: &AffinizedStructure) -> Vec<(usize, usize)> {
    let s = a.structure();
    let quadr = quadrangle_relations(s).quadr;
    let h = a.removed();
    let nl = s.num_lines();
    let factor_direction = |l: usize| {
        let pv = prod.line_provenance(a.ambient_line(l));
        let slice = prod.slice(h, pv.base, pv.slot);
        let f = prod.factor(pv.slot);
        f.line(pv.factor_line).iter().copied().find(|&x| slice.contains(x))
    };
    let mut bad = Vec::new();
    for l1 in 0..nl {
        for l2 in l1 + 1..nl {
            let (p1, p2) = (prod.line_provenance(a.ambient_line(l1)), prod.line_provenance(a.ambient_line(l2)));
            let decided = if p1.slot == p2.slot && p1.base == p2.base {
                factor_direction(l1) == factor_direction(l2)
            } else {
                quadr[l1].contains(l2)
            };
            if decided != (a.direction(l1) == a.direction(l2)) {
                bad.push((l1, l2));
            }
        }
    }
    bad
}

pub fn parallelism_split(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (name, prod, a) = oracle_instance(ctx)?;
    let bad = split_rule_disagreements(&prod, &a);
    c.note("instance", &name);
    c.note("disagreements", bad.len());
    c.note("supplementary", supplementary(|p, a| Ok(json!({ "disagreements": split_rule_disagreements(p, a).len() })))?);
    c.expect(&format!("{name}: split rule matches the direction oracle"), bad.is_empty(), || {
        json!({ "first_pair": bad.first(), "disagreements": bad.len() })
    });
    Ok(c.finish())
}

pub fn slice_chains(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (name, prod, a) = oracle_instance(ctx)?;
    let p = ctx.prime(3);
    let (g, ga) = identity_complement(2, p)?;
    for (name, prod, a) in [(name, prod, a), (format!("PG(1,{p})xPG(1,{p}) identity form"), g, ga)] {
        let nat = NaturalParallelism::new(&prod, &a)?;
        let nl = a.structure().num_lines();
        let mut bad = None;
        'scan: for l1 in 0..nl {
            for l2 in l1 + 1..nl {
                let (p1, p2) = (prod.line_provenance(a.ambient_line(l1)), prod.line_provenance(a.ambient_line(l2)));
                let same = p1.slot == p2.slot && p1.base == p2.base;
                if same != nat.same_slice(l1, l2) {
                    bad = Some((l1, l2, same));
                    break 'scan;
                }
            }
        }
        c.expect(&format!("{name}: chains of strong subspaces detect common fibres"), bad.is_none(), || json!(bad));
    }
    Ok(c.finish())
}

pub fn parallelism_global(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (name, prod, a) = oracle_instance(ctx)?;
    let nat = NaturalParallelism::new(&prod, &a)?;
    let bad = nat.disagreements();
    let nl = a.structure().num_lines();
    c.note("instance", &name);
    c.note("line_pairs", nl * (nl - 1) / 2);
    c.note("disagreements", bad.len());
    c.note(
        "cross_slot_disagreements",
        bad.iter().filter(|&&(l1, l2)| slot_of(&prod, &a, l1) != slot_of(&prod, &a, l2)).count(),
    );
    c.note(
        "supplementary",
        supplementary(|p, a| Ok(json!({ "disagreements": NaturalParallelism::new(p, a)?.disagreements().len() })))?,
    );
    c.expect(&format!("{name}: incidence decision matches the direction oracle"), bad.is_empty(), || {
        json!({ "first_pair": bad.first(), "disagreements": bad.len() })
    });
    Ok(c.finish())
}

/// The slot permutation of a map of the product that acts coordinatewise, if it does.
fn product_map_slots(prod: &SegreProduct, f: &[usize]) -> Option<Vec<usize>> {
    let s = prod.carrier();
    let k = prod.arity();
    let mut sigma = vec![usize::MAX; k];
    for l in 0..s.num_lines() {
        let i = prod.line_provenance(l).slot;
        let j = prod.line_provenance(s.map_line(l, f)?).slot;
        if sigma[i] == usize::MAX {
            sigma[i] = j;
        } else if sigma[i] != j {
            return None;
        }
    }
    let mut sorted = sigma.clone();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() {
        return None;
    }
    for (i, &j) in sigma.iter().enumerate() {
        let mut img: HashMap<usize, usize> = HashMap::new();
        for x in 0..s.num_points() {
            let y = prod.coord(f[x], j);
            if *img.entry(prod.coord(x, i)).or_insert(y) != y {
                return None;
            }
        }
    }
    Some(sigma)
}

pub fn product_automorphisms(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let g2 = grid(2)?;
    let perp = grid_perp_hyperplane(&g2)?;
    let mut cases = vec![("PG(1,2)xPG(1,2) perp".to_string(), g2, perp)];
    for (n, p) in [(2, 3), (3, 2)] {
        let (prod, h) = identity_square(n, p)?;
        cases.push((format!("PG({},{p})xPG({},{p}) identity form", n - 1, n - 1), prod, h));
    }
    for (name, prod, h) in &cases {
        let a = affinize(prod.carrier(), h)?;
        check_extension(&mut c, name, &a)?;
        let aut = automorphism_group(a.structure(), Some(a.carrier()), None)?;
        let mut swaps = false;
        for f in &aut.generators {
            let ext = extend_automorphism(&a, f)?;
            let sigma = product_map_slots(prod, &ext);
            swaps |= sigma.as_ref().is_some_and(|s| s[0] != 0);
            c.expect(&format!("{name}: extension acts coordinatewise"), sigma.is_some(), || json!({ "generator": f }));
        }
        c.note(&format!("{name} generators swapping slots"), swaps);
    }
    Ok(c.finish())
}

pub fn covering_suite(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let p = ctx.prime(3);
    let n = (p * p + p + 1) as usize;
    ctx.require_points("square of the plane", n * n)?;
    let (prod, a) = identity_complement(3, p)?;
    let members = covering(&prod, &a)?;
    let total = a.structure().num_points();
    let mut union = PointSet::empty(total);
    for m in &members {
        union.union_with(&m.points);
    }
    c.note("instance", format!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane"));
    c.note("members", members.len());
    c.expect("members cover the complement", union.is_full(), || json!(union.complement().to_vec()));
    let mut bad = None;
    for m in &members {
        let (sub, _) = induced_parallel(a.carrier(), &m.points)?;
        if let Some(ax) = AffineAxiom::ALL.into_iter().find(|&ax| !check_affine_axiom(&sub, ax)) {
            bad = Some((m.points.to_vec(), ax));
            break;
        }
    }
    c.expect("every member is an affine space", bad.is_none(), || json!(bad));
    Ok(c.finish())
}

pub fn not_product_of_affine(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut affine_products = Vec::new();
    for (d1, q1) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        for (d2, q2) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let (a1, a2) = (affine_space(d1, q1)?, affine_space(d2, q2)?);
            let prod = SegreProduct::new(vec![a1.base().clone(), a2.base().clone()])?;
            let par = prod.parallelism(&[a1, a2], ProductParallelism::SomeComponent)?;
            affine_products.push((format!("AG({},{q1})xAG({},{q2})", d1 - 1, d2 - 1), par));
        }
    }
    for (name, par) in &affine_products {
        c.expect(&format!("{name} is affine"), check_affine_axiom(par, AffineAxiom::AffinePls), || json!(null));
    }
    let mut spiky = 0;
    let mut same_size = 0;
    for (name, prod, hs) in product_catalogue(ctx)? {
        if !prod.factors().iter().all(IncidenceStructure::is_linear) {
            continue;
        }
        for h in &hs {
            if !prod.carrier().is_spiky(h)? {
                continue;
            }
            spiky += 1;
            let a = affinize(prod.carrier(), h)?;
            c.expect(&format!("{name}: spiky complement is not affine"), !check_affine_axiom(a.carrier(), AffineAxiom::AffinePls), || {
                json!(h.to_vec())
            });
            for (pname, par) in &affine_products {
                if par.base().num_points() == a.structure().num_points() && par.base().num_lines() == a.structure().num_lines() {
                    same_size += 1;
                    let iso = find_parallel_isomorphism(a.carrier(), par)?;
                    c.expect(&format!("{name}: complement is not isomorphic to {pname}"), iso.is_none(), || json!(h.to_vec()));
                }
            }
        }
    }
    c.note("spiky_hyperplanes", spiky);
    c.note("same_size_comparisons", same_size);
    Ok(c.finish())
}

pub fn final_example(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let g2 = grid(2)?;
    let perp = grid_perp_hyperplane(&g2)?;
    let mut cases = vec![("PG(1,2)xPG(1,2) perp".to_string(), 2u32, 2u32, g2, perp)];
    for (m, p) in [(2u32, 3u32), (3, 2)] {
        let (prod, h) = identity_square(m as usize, p)?;
        cases.push((format!("PG({},{p})xPG({},{p}) identity form", m - 1, m - 1), m, p, prod, h));
    }
    for (name, m, p, prod, h) in &cases {
        let a = affinize(prod.carrier(), h)?;
        let with_par = automorphism_group(a.structure(), Some(a.carrier()), None)?.order;
        let bare = automorphism_group(a.structure(), None, None)?.order;
        let formula = 2 * gl_order(*m, *p) / u128::from(*p - 1);
        let stab = stabiliser_order(prod.carrier(), h)?;
        c.note(&format!("{name} |Aut|"), with_par.to_string());
        c.note(&format!("{name} |Aut| without parallelism"), bare.to_string());
        c.expect_eq(&format!("{name}: |Aut| = 2|GL(m,p)|/(p-1)"), with_par, formula);
        c.expect_eq(&format!("{name}: |Aut| = |stabiliser of H|"), with_par, stab);
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_map_slots_detects_the_swap() {
        let g = grid(2).unwrap();
        let swap: Vec<usize> = (0..9).map(|x| g.encode(&[g.coord(x, 1), g.coord(x, 0)]).unwrap()).collect();
        assert_eq!(product_map_slots(&g, &swap), Some(vec![1, 0]));
        let id: Vec<usize> = (0..9).collect();
        assert_eq!(product_map_slots(&g, &id), Some(vec![0, 1]));
    }

    #[test]
    fn two_planes_share_a_line() {
        let (m, h) = two_planes(2).unwrap();
        assert_eq!(m.num_points(), 11);
        assert_eq!(h.len(), 3);
    }

    #[test]
    fn rebuild_recovers_the_plane() {
        let (pg, line) = plane_and_line(2).unwrap();
        let a = affinize(&pg, &line).unwrap();
        let r = rebuild(&a).unwrap();
        assert!(find_isomorphism(&r, &pg).unwrap().is_some());
    }
}
