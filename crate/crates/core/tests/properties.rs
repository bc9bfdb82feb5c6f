mod common;

use std::collections::BTreeSet;

use locsolve::stdbasis::spoly;
use locsolve::transform::run_pipeline;
use locsolve::{
    compute_standard_basis, mora_normal_form, reduced_normal_form, vdim, ConstrainedProblem, Limits, PolyRing,
    Polynomial, SolverConfig, TermOrder,
};
use proptest::prelude::*;

use common::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn global_basis_matches_buchberger(seed in 0u64..1_000_000, three in any::<bool>()) {
        let nvars = if three { 3 } else { 2 };
        let (gens, prod) = triangular_ideal(seed, nvars);
        let ring = PolyRing::new(&["a", "b", "c"][..nvars]).unwrap();
        let polys: Vec<Polynomial> = gens.iter().map(|g| from_opoly(g, &ring)).collect();
        let basis = compute_standard_basis(&polys, &TermOrder::degrevlex(nvars)).unwrap();
        let ours: BTreeSet<Vec<u32>> = basis.leading_ideal().iter().map(|m| m.exponents().to_vec()).collect();
        prop_assert_eq!(&ours, &buchberger_leading_ideal(&gens));
        prop_assert_eq!(vdim(&basis).unwrap(), prod);
    }

    #[test]
    fn generators_and_multiples_reduce_to_zero(seed in 0u64..1_000_000) {
        let (problem, _) = constrained_problem(seed);
        let out = run_pipeline(&problem, None, &SolverConfig::default(), Limits::default()).unwrap();
        let order = &out.system.order;
        let g = out.basis.generators();
        let mut r = rng(seed);
        for f in &out.system.generators {
            let h = random_poly(&mut r, &out.system.ring, 2, 3);
            prop_assert!(mora_normal_form(&(&h * f), g, order).is_zero());
        }
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                prop_assert!(mora_normal_form(&spoly(&g[i], &g[j], order), g, order).is_zero());
            }
        }
    }

    #[test]
    fn reduced_normal_form_is_a_projection(seed in 0u64..1_000_000) {
        let (problem, _) = constrained_problem(seed);
        let out = run_pipeline(&problem, None, &SolverConfig::default(), Limits::default()).unwrap();
        let mut r = rng(seed ^ 0x5eed);
        let f = random_poly(&mut r, &out.system.ring, 4, 6);
        let nf = reduced_normal_form(&f, &out.basis).unwrap();
        prop_assert_eq!(reduced_normal_form(&nf, &out.basis).unwrap(), nf.clone());
        // supported on the standard monomials
        prop_assert!(nf.terms().all(|(m, _)| out.order_ideal.contains(m)));
        // and congruent to f in the localization
        let diff = &f - &nf;
        prop_assert!(mora_normal_form(&diff, out.basis.generators(), &out.system.order).is_zero());
    }

    #[test]
    fn constrained_zeros_are_a_sub_multiset(seed in 0u64..1_000_000) {
        let (problem, global) = constrained_problem(seed);
        let cfg = SolverConfig::default();
        let all = ConstrainedProblem::new(problem.base_ring.clone(), problem.ideal.clone(), vec![]).unwrap();
        let full = run_pipeline(&all, None, &cfg, Limits::default()).unwrap();
        prop_assert_eq!(full.vdim(), global);
        prop_assert_eq!(full.zeros.total, global);
        let part = run_pipeline(&problem, None, &cfg, Limits::default()).unwrap();
        prop_assert!(part.vdim() <= global);
        for z in &part.zeros.entries {
            let twin = full.zeros.entries.iter().find(|w| {
                w.coordinates.iter().zip(&z.coordinates).all(|(a, b)| (a - b).norm() < 1e-8)
            });
            prop_assert!(twin.is_some());
            prop_assert_eq!(twin.unwrap().multiplicity, z.multiplicity);
            let g = &problem.constraints[0];
            prop_assert!(g.eval_complex(&z.coordinates).norm() < 1e-8);
        }
        // zeros of I on V(J) that were dropped would contradict the count
        let on_j: usize = full
            .zeros
            .entries
            .iter()
            .filter(|w| problem.constraints[0].eval_complex(&w.coordinates).norm() < 1e-8)
            .map(|w| w.multiplicity as usize)
            .sum();
        prop_assert_eq!(on_j, part.vdim());
    }

    #[test]
    fn matrices_commute_and_local_ones_are_nilpotent(seed in 0u64..1_000_000) {
        let (problem, _) = constrained_problem(seed);
        let out = run_pipeline(&problem, None, &SolverConfig::default(), Limits::default()).unwrap();
        if let Some(m) = &out.matrices {
            prop_assert!(m.commute());
            let mu = out.vdim();
            prop_assert!(m.get(2).pow(mu).is_zero());
            let total: u32 = out.zeros.entries.iter().map(|e| e.multiplicity).sum();
            prop_assert_eq!(total as usize, mu);
        }
    }

    #[test]
    fn seed_does_not_change_the_answer(seed in 0u64..1_000_000, solver_seed in 0u64..1000) {
        let (problem, _) = constrained_problem(seed);
        let a = run_pipeline(&problem, None, &SolverConfig::default(), Limits::default()).unwrap();
        let cfg = SolverConfig { seed: solver_seed, ..SolverConfig::default() };
        let b = run_pipeline(&problem, None, &cfg, Limits::default()).unwrap();
        prop_assert_eq!(a.zeros.len(), b.zeros.len());
        for (x, y) in a.zeros.entries.iter().zip(&b.zeros.entries) {
            prop_assert_eq!(x.multiplicity, y.multiplicity);
            for (p, q) in x.coordinates.iter().zip(&y.coordinates) {
                prop_assert!((p - q).norm() < 1e-8);
            }
        }
    }
}

#[test]
fn local_order_counts_the_origin_only() {
    // (x - 1)(x^2) in a local order keeps only the double zero at 0
    let ring = PolyRing::new(&["x"]).unwrap();
    let f = locsolve::parse_poly("x^3 - x^2", &ring).unwrap();
    let local = TermOrder::new(vec![vec![-1]], 1).unwrap();
    let basis = compute_standard_basis(&[f], &local).unwrap();
    assert_eq!(vdim(&basis).unwrap(), 2);
}
