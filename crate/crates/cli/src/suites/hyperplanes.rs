//! Suites on hyperplanes of single partial linear spaces.

use std::collections::HashMap;

use serde_json::json;

use segrelab_core::instances::{spiky_non_flappy_example, two_planes_example};
use segrelab_core::linalg::Subspace;
use segrelab_core::pls::{restrict_set, IncidenceStructure};
use segrelab_core::spaces::{grassmann_space, polar_grassmann_space, polar_space, projective_space};
use segrelab_core::PointSet;

use super::common::{constructed_catalogue, enumerated_catalogue, symplectic, Catalogued};
use super::{Checks, Ctx, Outcome, SuiteError};

fn full_catalogue(ctx: &Ctx) -> Result<Vec<Catalogued>, SuiteError> {
    let mut all = enumerated_catalogue()?;
    all.extend(constructed_catalogue(&mut ctx.rng())?);
    Ok(all)
}

pub fn flappy_implies_spiky(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let (mut total, mut flappy) = (0, 0);
    for cat in full_catalogue(ctx)? {
        for (i, h) in cat.hyperplanes.iter().enumerate() {
            total += 1;
            if cat.space.is_flappy(h)? {
                flappy += 1;
                let spiky = cat.space.is_spiky(h)?;
                c.expect(&format!("flappy hyperplane {i} of {} is spiky", cat.name), spiky, || {
                    json!({ "hyperplane": h.to_vec(), "point_without_outside_neighbour": cat.space.non_spiky_point(h) })
                });
            }
        }
    }
    c.note("hyperplanes", total);
    c.note("flappy", flappy);
    Ok(c.finish())
}

pub fn spiky_minimal(ctx: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let mut nested_pairs = 0;
    for cat in full_catalogue(ctx)? {
        let spiky: Vec<bool> = cat.hyperplanes.iter().map(|h| cat.space.is_spiky(h)).collect::<Result<_, _>>()?;
        for (j, h2) in cat.hyperplanes.iter().enumerate().filter(|&(j, _)| spiky[j]) {
            for (i, h1) in cat.hyperplanes.iter().enumerate() {
                if i != j && h1.is_subset(h2) {
                    nested_pairs += 1;
                    c.expect(&format!("no hyperplane of {} strictly inside a spiky one", cat.name), false, || {
                        json!({ "inner": h1.to_vec(), "outer": h2.to_vec() })
                    });
                }
            }
        }
    }
    c.note("nested_pairs_under_spiky", nested_pairs);
    Ok(c.finish())
}

pub fn spiky_non_flappy(_: &Ctx) -> Result<Outcome, SuiteError> {
    let (s, h) = spiky_non_flappy_example()?;
    let mut c = Checks::new();
    c.note("points", s.num_points());
    c.note("lines", s.num_lines());
    c.note("hyperplane_size", h.len());
    c.expect("the plane is a hyperplane of the rewired space", s.is_hyperplane(&h), || json!(h.to_vec()));
    c.expect("the hyperplane is spiky", s.is_spiky(&h)?, || {
        json!({ "point_without_outside_neighbour": s.non_spiky_point(&h) })
    });
    c.expect("the hyperplane is not flappy", !s.is_flappy(&h)?, || json!(null));
    Ok(c.finish())
}

pub fn nested_hyperplanes(_: &Ctx) -> Result<Outcome, SuiteError> {
    let (s, line) = two_planes_example()?;
    let mut c = Checks::new();
    c.expect("the common line is a hyperplane", s.is_hyperplane(&line), || json!(line.to_vec()));
    let over: Vec<PointSet> = s.enumerate_hyperplanes()?.into_iter().filter(|h| line.is_subset(h) && *h != line).collect();
    c.note("hyperplanes_strictly_containing_the_line", over.iter().map(PointSet::to_vec).collect::<Vec<_>>());
    c.expect("a plane is a hyperplane strictly containing the line", over.iter().any(|h| h.len() == 7 && s.is_subspace(h)), || {
        json!(over.iter().map(PointSet::to_vec).collect::<Vec<_>>())
    });
    Ok(c.finish())
}

/// Ambient indices of the points of `sub`, matched by subspace label.
fn embed(ambient: &IncidenceStructure, sub: &IncidenceStructure) -> Result<Vec<usize>, SuiteError> {
    let missing = || SuiteError::Internal("unlabelled structure".into());
    let index: HashMap<&Subspace, usize> = ambient
        .labels()
        .ok_or_else(missing)?
        .iter()
        .enumerate()
        .filter_map(|(i, l)| l.subspace().map(|u| (u, i)))
        .collect();
    sub.labels()
        .ok_or_else(missing)?
        .iter()
        .map(|l| l.subspace().and_then(|u| index.get(u).copied()).ok_or_else(missing))
        .collect()
}

pub fn restricted_hyperplane(_: &Ctx) -> Result<Outcome, SuiteError> {
    let mut c = Checks::new();
    let pg32 = projective_space(4, 2)?;
    let (planes, _) = two_planes_example()?;
    let pg33 = projective_space(4, 3)?;
    let g = grassmann_space(4, 2, 2)?;
    let cases: Vec<(&str, &IncidenceStructure, IncidenceStructure)> = vec![
        ("W(3,2) in PG(3,2)", &pg32, polar_space(&symplectic(4, 2)?)?),
        ("two planes in PG(3,2)", &pg32, planes),
        ("W(3,3) in PG(3,3)", &pg33, polar_space(&symplectic(4, 3)?)?),
        ("isotropic lines in G(4,2,2)", &g, polar_grassmann_space(&symplectic(4, 2)?, 2)?),
    ];
    let mut traces = 0;
    for (name, ambient, sub) in cases {
        let map = embed(ambient, &sub)?;
        let sub_points = PointSet::from_indices(ambient.num_points(), map.iter().copied());
        for h in ambient.enumerate_hyperplanes()? {
            if sub_points.is_subset(&h) {
                continue;
            }
            traces += 1;
            let trace = restrict_set(&h, &map);
            c.expect(&format!("{name}: trace is a hyperplane"), sub.is_hyperplane(&trace), || {
                json!({ "hyperplane": h.to_vec(), "trace": trace.to_vec() })
            });
        }
    }
    c.note("traces_checked", traces);
    Ok(c.finish())
}
