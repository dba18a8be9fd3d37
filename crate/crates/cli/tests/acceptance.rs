//! Acceptance criteria. Each criterion runs its suites and a few direct recomputations of the
//! pinned numbers, prints one PASS/FAIL line with its time budget, and counts as failed when any
//! check fails or the budget is exceeded.
//!
//! Criteria in `KNOWN_FAILURES` fail for reasons recorded next to them. The process exits
//! non-zero when an unlisted criterion fails or a listed one starts passing.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use segrelab_cli::suites::{find_suite, run_suite, Ctx, Status};
use segrelab_core::complement::{affinize, check_affine_axiom, covering, induced_parallel, AffineAxiom};
use segrelab_core::instances::{bilinear_hyperplane, grid, grid_perp_hyperplane, identity, projective_square};
use segrelab_core::linalg::{BilinearForm, PrimeField};
use segrelab_core::pls::automorphism_group;
use segrelab_core::segre::{degenerate_product_hyperplane, grassmann_form_hyperplane, intersection_hyperplane, witness_hyperplane_w, SegreProduct};
use segrelab_core::spaces::{grassmann_space, projective_space};
use segrelab_core::PointSet;

const KNOWN_FAILURES: &[(u32, &str)] = &[
    (3, "the rewired PG(3,2) of the spiky non-flappy example has a hyperplane point with no neighbour off the hyperplane"),
    (7, "lines of 4 points are too short for the quadrangle rule: 468 cross-slot parallel pairs on PG(2,3)xPG(2,3) have no witness"),
];

/// Outcome of one criterion: a list of named checks.
#[derive(Default)]
struct Verdict {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Verdict {
    fn check(&mut self, name: &str, ok: bool) {
        if !ok {
            self.failures.push(name.to_string());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, actual: T, expected: T) {
        if actual != expected {
            self.failures.push(format!("{name}: got {actual:?}, expected {expected:?}"));
        } else {
            self.notes.push(format!("{name} = {actual:?}"));
        }
    }

    fn suite(&mut self, id: &str, ctx: &Ctx) {
        let suite = find_suite(id).unwrap_or_else(|| panic!("suite {id} is registered"));
        let r = run_suite(&suite, ctx);
        if r.result == Status::Pass {
            self.notes.push(format!("{id}: PASS"));
        } else {
            let first = r.witness.get("failures").and_then(|f| f.get(0)).or_else(|| r.witness.get("error")).or_else(|| r.witness.get("reason"));
            self.failures.push(format!("{id}: {} {}", r.result.as_str(), first.map(ToString::to_string).unwrap_or_default()));
        }
    }
}

type Body = fn() -> Verdict;

fn ctx() -> Ctx {
    Ctx::default()
}

fn c1_slice_criterion() -> Verdict {
    let mut v = Verdict::default();
    v.suite("slice-criterion", &ctx());
    let g = grid(2).unwrap();
    let agree = (0u32..512).all(|bits| {
        let x = PointSet::from_indices(9, (0..9).filter(|&i| bits >> i & 1 == 1));
        g.slice_criterion(&x) == g.carrier().is_hyperplane(&x)
    });
    v.check("all 512 subsets of the 3x3 grid", agree);
    v
}

fn c2_flappy_spiky_minimal() -> Verdict {
    let mut v = Verdict::default();
    v.suite("flappy-hyperplanes-are-spiky", &ctx());
    v.suite("spiky-hyperplanes-are-minimal", &ctx());
    v
}

fn c3_examples() -> Verdict {
    let mut v = Verdict::default();
    v.suite("spiky-non-flappy-example", &ctx());
    v.suite("complement-may-disconnect", &ctx());
    v
}

fn c4_degenerate() -> Verdict {
    let mut v = Verdict::default();
    v.suite("product-of-factor-hyperplanes-degenerate", &ctx());
    v.suite("degenerate-complement-is-product", &ctx());
    let sq = projective_square(3, 2).unwrap();
    let fano = sq.factor(0);
    let h = degenerate_product_hyperplane(&sq, &[fano.line_set(0), fano.line_set(1)]).unwrap().into_points();
    v.eq("|H| on PG(2,2)xPG(2,2)", h.len(), 33);
    v.check("degenerate", !sq.is_nondegenerate(&h).unwrap());
    v.check("not spiky", !sq.carrier().is_spiky(&h).unwrap());
    v
}

fn c5_forms() -> Verdict {
    let mut v = Verdict::default();
    let g = grassmann_space(4, 2, 3).unwrap();
    let mu = BilinearForm::symplectic(PrimeField::new(3).unwrap(), 4).unwrap().to_multiform().unwrap();
    let q2 = grassmann_form_hyperplane(&g, &mu).unwrap().hyperplane().map(|h| h.points().clone());
    match q2 {
        Some(h) => {
            v.eq("points of G(4,2,3)", g.num_points(), 130);
            v.eq("|Q2| in G(4,2,3)", h.len(), 40);
            v.check("Q2 is a hyperplane", g.is_hyperplane(&h));
            v.check("Q2 is flappy", g.is_flappy(&h).unwrap());
        }
        None => v.check("symplectic form cuts a hyperplane", false),
    }
    let p3 = Ctx { p: Some(3), ..ctx() };
    v.suite("isotropic-lines-flappy-hyperplane", &p3);
    v.suite("segment-nonzero-forms-give-hyperplanes", &ctx());
    v.suite("nondegenerate-hyperplane-exists", &ctx());
    v.suite("segment-nondegenerate-forms-flappy", &ctx());
    v
}

fn c6_gkz() -> Verdict {
    let mut v = Verdict::default();
    v.suite("gkz-iff-spiky", &ctx());
    for (p, forms) in [(2u32, 15usize), (3, 40)] {
        let g = grid(p).unwrap();
        let mut count = 0;
        let mut agree = true;
        for m in matrices_up_to_scalar(p) {
            count += 1;
            let mu = segrelab_core::linalg::MultiForm::bilinear(PrimeField::new(p).unwrap(), &m).unwrap();
            let h = bilinear_hyperplane(&g, &m).unwrap();
            agree &= mu.is_gkz_nondegenerate() == g.carrier().is_spiky(&h).unwrap();
        }
        v.eq(&format!("forms up to scalar at p={p}"), count, forms);
        v.check(&format!("GKZ iff spiky at p={p}"), agree);
    }
    v
}

fn matrices_up_to_scalar(p: u32) -> Vec<Vec<Vec<u32>>> {
    (0..p.pow(4))
        .map(|c| (0..4).map(|i| c / p.pow(i) % p).collect::<Vec<u32>>())
        .filter(|e| e.iter().find(|&&x| x != 0) == Some(&1))
        .map(|e| vec![e[..2].to_vec(), e[2..].to_vec()])
        .collect()
}

fn c7_parallelism() -> Verdict {
    let mut v = Verdict::default();
    v.suite("affine-product-parallelism-from-incidence", &ctx());
    v.suite("parallelism-from-product-incidence", &ctx());
    v
}

fn c8_covering() -> Verdict {
    let mut v = Verdict::default();
    v.suite("covering-by-affine-spaces", &ctx());
    let prod = projective_square(3, 3).unwrap();
    let h = bilinear_hyperplane(&prod, &identity(3)).unwrap();
    let a = affinize(prod.carrier(), &h).unwrap();
    let members = covering(&prod, &a).unwrap();
    let mut union = PointSet::empty(a.structure().num_points());
    let mut all_affine = true;
    for m in &members {
        union.union_with(&m.points);
        let (sub, _) = induced_parallel(a.carrier(), &m.points).unwrap();
        all_affine &= AffineAxiom::ALL.iter().all(|&ax| check_affine_axiom(&sub, ax));
    }
    v.check("members cover the complement", union.is_full());
    v.check("every member satisfies the four affine axioms", all_affine);
    v.notes.push(format!("{} members", members.len()));
    v
}

fn c9_recovery() -> Verdict {
    let mut v = Verdict::default();
    v.suite("hyperplane-recovered-from-parallel-classes", &ctx());
    v
}

fn c10_automorphisms() -> Verdict {
    let mut v = Verdict::default();
    v.suite("automorphism-restriction-extension", &ctx());
    v.suite("perp-complement-automorphism-count", &ctx());
    let pg = projective_space(3, 3).unwrap();
    let line = pg.line_set(0);
    let a = affinize(&pg, &line).unwrap();
    let aut = automorphism_group(a.structure(), Some(a.carrier()), None).unwrap().order;
    let colors: Vec<u32> = (0..pg.num_points()).map(|x| u32::from(line.contains(x))).collect();
    let stab = automorphism_group(&pg, None, Some(&colors)).unwrap().order;
    v.eq("|Aut| of PG(2,3) minus a line", aut, 432);
    v.eq("|Stab| of the line in Aut(PG(2,3))", stab, 432);
    let g = grid(2).unwrap();
    let perp = grid_perp_hyperplane(&g).unwrap();
    let a = affinize(g.carrier(), &perp).unwrap();
    v.eq("|Aut| of the 3x3 grid minus perp", automorphism_group(a.structure(), Some(a.carrier()), None).unwrap().order, 12);
    v
}

fn c11_meeting_and_pair() -> Verdict {
    let mut v = Verdict::default();
    v.suite("meeting-hyperplanes-not-spiky", &ctx());
    v.suite("complementary-grassmann-product-hyperplane", &ctx());
    let g = grassmann_space(4, 2, 2).unwrap();
    let w = segrelab_core::linalg::enumerate_subspaces(4, 2, PrimeField::new(2).unwrap()).unwrap().swap_remove(0);
    let hw = witness_hyperplane_w(&g, &w).unwrap().into_points();
    v.eq("|H(W)|", hw.len(), 19);
    v.check("H(W) not spiky", !g.is_spiky(&hw).unwrap());
    let prod = SegreProduct::new(vec![g.clone(), g]).unwrap();
    let h22 = intersection_hyperplane(&prod).unwrap().into_points();
    v.eq("|H_{2,2}|", h22.len(), 665);
    v.check("H_{2,2} non-degenerate", prod.is_nondegenerate(&h22).unwrap());
    v.check("H_{2,2} not spiky", !prod.carrier().is_spiky(&h22).unwrap());
    v
}

fn c12_grassmann_forms() -> Verdict {
    let mut v = Verdict::default();
    v.suite("grassmann-hyperplanes-are-form-loci", &ctx());
    v
}

const CRITERIA: &[(u32, &str, u64, Body)] = &[
    (1, "slice criterion", 5, c1_slice_criterion),
    (2, "flappy implies spiky; spiky hyperplanes are minimal", 30, c2_flappy_spiky_minimal),
    (3, "spiky non-flappy example; flappy hyperplane with disconnected complement", 5, c3_examples),
    (4, "degenerate product hyperplane and its complement", 60, c4_degenerate),
    (5, "form hyperplanes: isotropic lines of G(4,2,3), non-degenerate products", 120, c5_forms),
    (6, "GKZ non-degenerate iff spiky on products of two lines", 120, c6_gkz),
    (7, "parallelism definable from incidence", 600, c7_parallelism),
    (8, "covering of the complement by affine spaces", 120, c8_covering),
    (9, "recovery of the plane from PG(3,3) minus a plane", 120, c9_recovery),
    (10, "automorphism extension and group orders", 120, c10_automorphisms),
    (11, "H(W) and H_{2,2} at n=4, p=2", 60, c11_meeting_and_pair),
    (12, "hyperplanes of G(4,2,2) are alternating form loci", 300, c12_grassmann_forms),
];

fn main() -> ExitCode {
    // libtest-style filtering: any argument that is not a flag selects criteria by number.
    let selected: Vec<u32> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).filter_map(|a| a.parse().ok()).collect();
    let mut unexpected = Vec::new();
    for &(n, name, budget_s, body) in CRITERIA {
        if !selected.is_empty() && !selected.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let mut verdict = body();
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(budget_s) {
            verdict.failures.push(format!("took {:.1}s, over the {budget_s}s budget", elapsed.as_secs_f64()));
        }
        let passed = verdict.failures.is_empty();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        println!(
            "{} criterion {n:>2}: {name} [{:.2}s / {budget_s}s]{}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if !passed && known.is_some() { " (known failure)" } else { "" }
        );
        for f in &verdict.failures {
            println!("       - {f}");
        }
        if std::env::var_os("ACCEPTANCE_VERBOSE").is_some() {
            for note in &verdict.notes {
                println!("       . {note}");
            }
        }
        match (passed, known) {
            (false, None) => unexpected.push(format!("criterion {n} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {n} is listed as a known failure but passed")),
            (false, Some((_, why))) => println!("       known: {why}"),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
