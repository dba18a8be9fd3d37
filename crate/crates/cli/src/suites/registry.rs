use super::{complements as c, forms as f, hyperplanes as h, products as p, Ctx, Outcome, SuiteError, STATEMENTS};

/// A registered verification suite.
pub struct Suite {
    pub id: &'static str,
    /// Plain description of the checked statement.
    pub statement: &'static str,
    pub instance: fn(&Ctx) -> String,
    pub run: fn(&Ctx) -> Result<Outcome, SuiteError>,
}

type Entry = (&'static str, fn(&Ctx) -> String, fn(&Ctx) -> Result<Outcome, SuiteError>);

macro_rules! fixed {
    ($s:expr) => {{
        fn describe(_: &Ctx) -> String {
            $s.to_string()
        }
        describe as fn(&Ctx) -> String
    }};
}

macro_rules! with_p {
    ($fmt:expr, $default:expr) => {{
        fn describe(ctx: &Ctx) -> String {
            format!($fmt, p = ctx.prime($default))
        }
        describe as fn(&Ctx) -> String
    }};
}

fn entries() -> Vec<Entry> {
    vec![
        ("flappy-hyperplanes-are-spiky", fixed!("all enumerated and constructed catalogue hyperplanes"), h::flappy_implies_spiky),
        ("spiky-non-flappy-example", fixed!("rewired PG(3,2)"), h::spiky_non_flappy),
        ("nested-hyperplanes-example", fixed!("two planes of PG(3,2)"), h::nested_hyperplanes),
        ("spiky-hyperplanes-are-minimal", fixed!("all enumerated and constructed catalogue hyperplanes"), h::spiky_minimal),
        ("restricted-hyperplane", fixed!("enumerated catalogue with subspaces"), h::restricted_hyperplane),
        ("product-is-partial-linear-space", fixed!("PG(2,2)xPG(1,3), W(3,2)xPG(1,2), G(4,2,2)xPG(1,2)"), p::product_pls),
        ("product-of-affine-spaces", fixed!("AG(2,3)xAG(2,3), AG(2,3)xAG(1,3)"), p::product_apls),
        ("componentwise-parallelism-not-affine", fixed!("AG(2,3)xAG(2,3), AG(2,3)xAG(1,3)"), p::componentwise_not_affine),
        ("slice-criterion", fixed!("all subsets of PG(1,2)xPG(1,2); constructed hyperplanes of PG(2,2)xPG(2,2), G(4,2,2)xPG(1,2)"), p::slice_criterion),
        ("hyperplane-as-correlation", fixed!("product catalogue"), p::correlation),
        ("flappy-spiky-through-slices", fixed!("product catalogue"), p::flappy_spiky_through_slices),
        ("linear-factors-flappy-iff-nondegenerate", fixed!("product catalogue, linear factors"), p::linear_factors),
        ("degenerate-hyperplanes-not-flappy", fixed!("product catalogue"), p::degenerate_not_flappy),
        ("product-of-factor-hyperplanes-degenerate", fixed!("PG(2,2)xPG(2,2), PG(1,3)xPG(1,3)"), p::degenerate_product),
        ("degenerate-complement-is-product", fixed!("PG(2,2)xPG(2,2) minus line cylinders"), p::degenerate_complement),
        ("complement-basic-properties", fixed!("affinizable catalogue"), c::affine_reduct),
        ("linear-complement-converse-fails", fixed!("two planes of PG(3,2)"), c::converse_fails),
        ("complement-may-disconnect", fixed!("two planes of PG(3,2), PG(3,3)"), c::disconnected_complement),
        ("strong-subspaces-transfer", fixed!("Veblen gamma catalogue"), c::strong_transfer),
        ("hyperplane-recovered-from-parallel-classes", fixed!("PG(3,3) minus a plane; flappy catalogue hyperplanes"), c::recover_hyperplane),
        ("automorphism-restriction-extension", fixed!("PG(2,3) minus a line, PG(3,2) minus a plane, grid and PG(2,2)xPG(2,2) complements"), c::aut_extension),
        ("near-plane-conditions-in-veblen-gamma-spaces", fixed!("Veblen gamma catalogue"), c::near_planes),
        ("complement-automorphisms-extend", fixed!("PG(3,3) minus a plane, two planes, W(3,3), G(4,2,2)"), c::aut_extends),
        ("spiky-product-complement-not-affine", fixed!("product catalogue, spiky hyperplanes"), c::spiky_product_not_affine),
        ("product-recovered-from-complement", fixed!("product catalogue, flappy hyperplanes"), c::product_recovered),
        ("product-complement-strong-subspaces-transfer", with_p!("PG(1,{p})xPG(1,{p}), PG(2,{p})xPG(2,{p})", 3), c::product_strong_transfer),
        ("product-complement-strong-subspaces-in-slices", with_p!("PG(1,{p})xPG(1,{p}), PG(2,{p})xPG(2,{p})", 3), c::product_strong_in_slices),
        ("product-complement-strong-subspaces-affine", with_p!("PG(1,{p})xPG(1,{p}), PG(2,{p})xPG(2,{p})", 3), c::product_strong_affine),
        ("affine-product-parallelism-from-incidence", fixed!("AG(2,3)xAG(2,3)"), c::parallelism_from_incidence_affine),
        ("cross-slot-parallels-by-quadrangles", with_p!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane", 3), c::cross_slot_quadrangles),
        ("parallelism-split-by-slices", with_p!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane", 3), c::parallelism_split),
        ("same-slice-by-strong-chains", with_p!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane", 3), c::slice_chains),
        ("parallelism-from-product-incidence", with_p!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane", 3), c::parallelism_global),
        ("complement-automorphisms-of-products", fixed!("grid and PG(2,2)xPG(2,2) complements"), c::product_automorphisms),
        ("covering-by-affine-spaces", with_p!("PG(2,{p})xPG(2,{p}) minus the identity-form hyperplane", 3), c::covering_suite),
        ("spiky-complement-not-product-of-affine-spaces", fixed!("PG(1,3)xPG(1,3) minus the perp hyperplane"), c::not_product_of_affine),
        ("perp-complement-automorphism-count", fixed!("PG(1,2)xPG(1,2), PG(1,3)xPG(1,3), PG(2,2)xPG(2,2)"), c::final_example),
        ("form-locus-hyperplane-or-all", fixed!("seeded forms on five small products"), f::locus_hyperplane_or_all),
        ("segment-nonzero-forms-give-hyperplanes", fixed!("seeded forms on five small products"), f::segment_nonzero),
        ("nondegenerate-hyperplane-exists", fixed!("small products and G(4,2,2)xG(4,2,2)"), f::nondegenerate_exists),
        ("gkz-iff-spiky", fixed!("PG(1,p)xPG(1,p), all forms up to scalar; PG(1,2)^3"), f::gkz_iff_spiky),
        ("grassmann-hyperplanes-are-form-loci", fixed!("G(4,2,2)"), f::grassmann_hyperplanes),
        ("polar-hyperplanes-are-form-sections", with_p!("W(3,{p})", 3), f::polar_hyperplanes),
        ("polar-product-form-hyperplane", with_p!("W(3,{p})xW(3,{p})", 3), f::polar_product_hyperplanes),
        ("segment-nondegenerate-slices-flappy", fixed!("seeded forms on small products"), f::segment_nondegenerate_slices),
        ("segment-nondegenerate-forms-flappy", fixed!("seeded forms on small products and G(4,2,3)"), f::segment_nondegenerate_flappy),
        ("symplectic-polar-product-flappy", with_p!("W(3,{p})xW(3,{p})", 3), f::symplectic_polar_flappy),
        ("isotropic-lines-flappy-hyperplane", with_p!("G(4,2,{p})", 3), f::isotropic_lines_flappy),
        ("projective-product-hyperplanes-bilinear", fixed!("PG(1,p)xPG(1,p) for p = 2, 3, 5; PG(1,2)xPG(2,2)"), f::projective_pair_bilinear),
        ("alternating-form-hyperplanes-not-spiky", fixed!("PG(2,p)^3 determinant, PG(3,2)^3 alternating forms"), f::alternating_not_spiky),
        ("meeting-hyperplanes-not-spiky", fixed!("G(4,2,2), G(4,2,3), G(5,2,2), G(5,3,2)"), f::meeting_hyperplanes),
        ("complementary-grassmann-product-hyperplane", with_p!("G(4,2,{p})xG(4,2,{p})", 2), f::complementary_pair_hyperplane),
    ]
}

/// All suites, sorted by id.
pub fn registry() -> Vec<Suite> {
    let mut out: Vec<Suite> = entries()
        .into_iter()
        .map(|(id, instance, run)| {
            let statement = STATEMENTS.iter().find(|(s, _)| *s == id).map_or("", |(_, d)| d);
            Suite { id, statement, instance, run }
        })
        .collect();
    out.sort_by_key(|s| s.id);
    out
}

pub fn find_suite(id: &str) -> Option<Suite> {
    registry().into_iter().find(|s| s.id == id)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn registry_matches_statements_one_to_one() {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let unique: BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(unique.len(), ids.len(), "duplicate suite id");
        let statements: BTreeSet<&str> = STATEMENTS.iter().map(|(id, _)| *id).collect();
        assert_eq!(statements.len(), STATEMENTS.len(), "duplicate statement id");
        assert_eq!(unique, statements);
    }

    #[test]
    fn every_suite_has_a_description() {
        assert!(registry().iter().all(|s| !s.statement.is_empty()));
    }
}
