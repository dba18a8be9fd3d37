//! Instances and helpers shared by several suites.

use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use segrelab_core::complement::{affinize, AffinizedStructure};
use segrelab_core::instances::{bilinear_hyperplane, grid, identity, projective_square, spiky_non_flappy_example, two_planes_example};
use segrelab_core::linalg::{BilinearForm, Matrix, MultiForm, PrimeField, SubsetKey};
use segrelab_core::pls::{automorphism_group, IncidenceStructure};
use segrelab_core::segre::{degenerate_product_hyperplane, hyperplane_from_form, FormLocus, SegreProduct};
use segrelab_core::spaces::{affine_space, grassmann_space, polar_space, projective_space};
use segrelab_core::PointSet;

use super::SuiteError;

/// A structure together with a list of its hyperplanes.
pub struct Catalogued {
    pub name: String,
    pub space: IncidenceStructure,
    pub hyperplanes: Vec<PointSet>,
}

pub fn symplectic(n: usize, p: u32) -> Result<BilinearForm, SuiteError> {
    Ok(BilinearForm::symplectic(PrimeField::new(p)?, n)?)
}

/// Small spaces with every hyperplane enumerated.
pub fn enumerated_catalogue() -> Result<Vec<Catalogued>, SuiteError> {
    let mut spaces: Vec<(String, IncidenceStructure)> = vec![
        ("PG(2,2)".into(), projective_space(3, 2)?),
        ("PG(2,3)".into(), projective_space(3, 3)?),
        ("PG(3,2)".into(), projective_space(4, 2)?),
        ("PG(3,3)".into(), projective_space(4, 3)?),
        ("PG(1,2)xPG(1,2)".into(), grid(2)?.carrier().clone()),
        ("PG(1,3)xPG(1,3)".into(), grid(3)?.carrier().clone()),
        ("PG(1,2)xPG(2,2)".into(), SegreProduct::new(vec![projective_space(2, 2)?, projective_space(3, 2)?])?.carrier().clone()),
        ("G(4,2,2)".into(), grassmann_space(4, 2, 2)?),
        ("W(3,2)".into(), polar_space(&symplectic(4, 2)?)?),
        ("W(3,3)".into(), polar_space(&symplectic(4, 3)?)?),
        ("AG(2,3)".into(), affine_space(3, 3)?.base().clone()),
    ];
    spaces.push(("rewired PG(3,2)".into(), spiky_non_flappy_example()?.0));
    spaces.push(("two planes of PG(3,2)".into(), two_planes_example()?.0));
    spaces
        .into_iter()
        .map(|(name, space)| {
            let hyperplanes = space.enumerate_hyperplanes()?;
            Ok(Catalogued { name, space, hyperplanes })
        })
        .collect()
}

/// Hyperplanes built by the product and form constructions on spaces too large to enumerate.
pub fn constructed_catalogue(rng: &mut ChaCha8Rng) -> Result<Vec<Catalogued>, SuiteError> {
    let mut out = Vec::new();

    let sq = projective_square(3, 2)?;
    let mut hs: Vec<PointSet> = nonzero_matrices(2, 3, 3).iter().map(|m| bilinear_hyperplane(&sq, m)).collect::<Result<_, _>>()?;
    let fano = sq.factor(0);
    for l1 in 0..fano.num_lines() {
        for l2 in 0..fano.num_lines() {
            hs.push(degenerate_product_hyperplane(&sq, &[fano.line_set(l1), fano.line_set(l2)])?.into_points());
        }
    }
    out.push(Catalogued { name: "PG(2,2)xPG(2,2)".into(), space: sq.carrier().clone(), hyperplanes: dedup(hs) });

    let gp = SegreProduct::new(vec![grassmann_space(4, 2, 2)?, projective_space(2, 2)?])?;
    let field = PrimeField::new(2)?;
    let mut hs = Vec::new();
    while hs.len() < 24 {
        let mu = random_form(field, &[4, 2], &[2, 1], rng)?;
        if let FormLocus::Hyperplane(h) = hyperplane_from_form(&gp, &mu)? {
            hs.push(h.into_points());
        }
    }
    out.push(Catalogued { name: "G(4,2,2)xPG(1,2)".into(), space: gp.carrier().clone(), hyperplanes: dedup(hs) });

    let g3 = grassmann_space(4, 2, 3)?;
    let mu = symplectic(4, 3)?.to_multiform()?;
    let q2 = match segrelab_core::segre::grassmann_form_hyperplane(&g3, &mu)? {
        FormLocus::Hyperplane(h) => h.into_points(),
        FormLocus::AllOfSpace => return Err(SuiteError::Internal("symplectic form vanishes on all lines".into())),
    };
    out.push(Catalogued { name: "G(4,2,3)".into(), space: g3, hyperplanes: vec![q2] });
    Ok(out)
}

pub fn dedup(mut hs: Vec<PointSet>) -> Vec<PointSet> {
    hs.sort_by_key(PointSet::to_vec);
    hs.dedup();
    hs
}

/// All nonzero `rows × cols` matrices over GF(p) whose first nonzero entry is 1.
pub fn nonzero_matrices(p: u32, rows: usize, cols: usize) -> Vec<Matrix> {
    let cells = rows * cols;
    (0..cells)
        .map(|_| 0..p)
        .multi_cartesian_product()
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .map(|v| v.chunks(cols).map(<[u32]>::to_vec).collect())
        .collect()
}

/// All keys of a form with the given segment shapes.
pub fn form_keys(dims: &[usize], arities: &[usize]) -> Vec<SubsetKey> {
    dims.iter()
        .zip(arities)
        .map(|(&d, &k)| (0..d).combinations(k).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect()
}

/// A form with independent uniform coefficients.
pub fn random_form(field: PrimeField, dims: &[usize], arities: &[usize], rng: &mut ChaCha8Rng) -> Result<MultiForm, SuiteError> {
    let mut mu = MultiForm::zero(field, dims.to_vec(), arities.to_vec())?;
    for key in form_keys(dims, arities) {
        mu.set(key, rng.gen_range(0..field.p()))?;
    }
    Ok(mu)
}

/// The product of two copies of the projective space on GF(p)^n and its identity-form hyperplane.
pub fn identity_square(n: usize, p: u32) -> Result<(SegreProduct, PointSet), SuiteError> {
    let prod = projective_square(n, p)?;
    let h = bilinear_hyperplane(&prod, &identity(n))?;
    Ok((prod, h))
}

pub fn identity_complement(n: usize, p: u32) -> Result<(SegreProduct, AffinizedStructure), SuiteError> {
    let (prod, h) = identity_square(n, p)?;
    let a = affinize(prod.carrier(), &h)?;
    Ok((prod, a))
}

/// The projective plane over GF(p) with one of its lines.
pub fn plane_and_line(p: u32) -> Result<(IncidenceStructure, PointSet), SuiteError> {
    let pg = projective_space(3, p)?;
    let h = pg.line_set(0);
    Ok((pg, h))
}

pub fn membership_colors(h: &PointSet) -> Vec<u32> {
    (0..h.capacity()).map(|x| u32::from(h.contains(x))).collect()
}

/// Order of the stabiliser of `h` in the automorphism group of `m`.
pub fn stabiliser_order(m: &IncidenceStructure, h: &PointSet) -> Result<u128, SuiteError> {
    Ok(automorphism_group(m, None, Some(&membership_colors(h)))?.order)
}

/// `|GL(m, p)|`.
pub fn gl_order(m: u32, p: u32) -> u128 {
    let q = u128::from(p);
    (0..m).map(|i| q.pow(m) - q.pow(i)).product()
}

/// Whether the points all lie in one fibre.
pub fn same_fibre(prod: &SegreProduct, pts: &[usize]) -> bool {
    let moving: Vec<usize> = (0..prod.arity()).filter(|&i| pts.iter().any(|&x| prod.coord(x, i) != prod.coord(pts[0], i))).collect();
    moving.len() <= 1
}
