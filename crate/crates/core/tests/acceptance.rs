//! Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
//! exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use locsolve::matrix::QMatrix;
use locsolve::stdbasis::spoly;
use locsolve::transform::run_pipeline;
use locsolve::{
    chow_form, compute_standard_basis, critical_sum, jacobian_ideal, milnor_report, mora_normal_form, parse_poly,
    reduced_normal_form, vdim, ConstrainedProblem, Limits, PolyRing, Polynomial, SolverConfig, TermOrder,
};
use num_complex::Complex64;
use rand::Rng;

use common::*;

/// Coordinate error allowed for the recovered zeros of the worked example.
const COORD_TOL: f64 = 1e-9;
/// Residual bound for every recovered zero.
const RESIDUAL_TOL: f64 = 1e-6;
/// Relative coefficient error for the Chow form cross-check.
const CHOW_TOL: f64 = 1e-6;
const EXAMPLE_TIME_LIMIT: Duration = Duration::from_secs(1);

const F: &str = "-2x4-2x2y2+5x2y+y3-2y2";

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn example_problem() -> (ConstrainedProblem, Polynomial) {
    let ring = PolyRing::new(&["x", "y"]).unwrap();
    let f = parse_poly(F, &ring).unwrap();
    let p = ConstrainedProblem::new(ring, jacobian_ideal(&f).unwrap(), vec![f.clone()]).unwrap();
    (p, f)
}

fn matrix(rows: &[[(i64, i64); 5]]) -> QMatrix {
    QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(n, d)| qq(n, d)).collect()).collect())
}

fn criterion_1() -> Outcome {
    let (problem, _) = example_problem();
    let order = TermOrder::parse("a(1,1,-1),dp", 3).unwrap();
    let start = Instant::now();
    let out = run_pipeline(&problem, Some(&order), &SolverConfig::default(), Limits::default())
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let ring = &out.system.ring;
    let p = |s: &str| parse_poly(s, ring).unwrap();
    let names = ring.variables();

    ensure!(out.vdim() == 5, "vdim {}", out.vdim());
    let w: Vec<String> = out.order_ideal.monomials().iter().map(|m| m.display(names)).collect();
    ensure!(w == ["1", "y", "x", "y^2", "x*y"], "W = {:?}", w);

    let lead: BTreeSet<String> = out.basis.leading_ideal().iter().map(|m| m.display(names)).collect();
    let want: BTreeSet<String> = ["u", "x^2", "x*y^2", "y^3"].iter().map(|s| s.to_string()).collect();
    ensure!(lead == want, "leading ideal {:?}", lead);
    ensure!(out.basis.is_reduced(), "basis not reduced");

    let bb = out.border_basis.as_ref().ok_or("no border basis")?;
    for h in ["2xy2-3xy", "5x2+y2-4y", "u", "2y3-3y2", "2x2y-y2"] {
        let h = p(h);
        let (lc, _) = out.system.order.leading_term(&h).unwrap();
        let monic = h.scale(&lc.recip());
        ensure!(bb.polynomials().contains(&monic), "border basis lacks {}", monic);
    }

    let m = out.matrices.as_ref().ok_or("no matrices")?;
    let (z, o) = ((0, 1), (1, 1));
    let mx = matrix(&[
        [z, z, o, z, z],
        [z, z, z, z, o],
        [z, (4, 5), z, (-1, 5), z],
        [z, z, z, z, (3, 2)],
        [z, z, z, (1, 2), z],
    ]);
    let my = matrix(&[[z, o, z, z, z], [z, z, z, o, z], [z, z, z, z, o], [z, z, z, (3, 2), z], [z, z, z, z, (3, 2)]]);
    ensure!(*m.get(0) == mx, "M_x = {:?}", m.get(0));
    ensure!(*m.get(1) == my, "M_y = {:?}", m.get(1));
    ensure!(m.get(2).is_zero(), "M_u nonzero");

    let s = 3f64.sqrt() / 2.0;
    let expect = [(-s, 1.5, 1), (0.0, 0.0, 3), (s, 1.5, 1)];
    ensure!(out.zeros.len() == 3, "{} zeros", out.zeros.len());
    let mut worst = 0f64;
    for (e, (x, y, mult)) in out.zeros.entries.iter().zip(expect) {
        ensure!(e.multiplicity == mult, "multiplicity {} at {:?}", e.multiplicity, e.coordinates);
        let err = (e.coordinates[0] - x).norm().max((e.coordinates[1] - y).norm());
        worst = worst.max(err);
    }
    ensure!(worst <= COORD_TOL, "coordinate error {:e}", worst);
    ensure!(elapsed < EXAMPLE_TIME_LIMIT, "took {:?}", elapsed);
    Ok(format!("vdim 5, W/G/H/M_x/M_y exact, zeros err {:.1e}, {:.0?}", worst, elapsed))
}

fn criterion_2() -> Outcome {
    let (problem, _) = example_problem();
    let global = compute_standard_basis(&problem.ideal, &TermOrder::degrevlex(2)).map_err(|e| e.to_string())?;
    let d = vdim(&global).map_err(|e| e.to_string())?;
    ensure!(d == 8, "global vdim {}", d);
    let ring = problem.base_ring.clone();
    let f = parse_poly(F, &ring).unwrap();
    let c = critical_sum(&f).map_err(|e| e.to_string())?;
    ensure!(c == 8, "critical sum {}", c);
    Ok("global vdim 8".into())
}

fn criterion_3() -> Outcome {
    let ring = PolyRing::new(&["x"]).unwrap();
    let p = |s: &str| parse_poly(s, &ring).unwrap();
    let problem = ConstrainedProblem::new(ring.clone(), vec![p("x3")], vec![p("x")]).unwrap();
    let out = run_pipeline(&problem, None, &SolverConfig::default(), Limits::default()).map_err(|e| e.to_string())?;
    ensure!(out.zeros.len() == 1, "{} zeros", out.zeros.len());
    let e = &out.zeros.entries[0];
    ensure!(e.multiplicity == 3, "multiplicity {}", e.multiplicity);
    ensure!(e.exact.as_deref() == Some(&[q(0)][..]), "zero {:?}", e.coordinates);
    Ok("single zero 0 of multiplicity 3".into())
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for seed in 0..20u64 {
        let nvars = 2 + (seed % 2) as usize;
        let (gens, prod) = triangular_ideal(1000 + seed, nvars);
        let names: Vec<String> = ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect();
        let ring = PolyRing::new(&names).unwrap();
        let polys: Vec<Polynomial> = gens.iter().map(|g| from_opoly(g, &ring)).collect();
        let basis = compute_standard_basis(&polys, &TermOrder::degrevlex(nvars)).map_err(|e| e.to_string())?;
        let ours: BTreeSet<Vec<u32>> = basis.leading_ideal().iter().map(|m| m.exponents().to_vec()).collect();
        let oracle = buchberger_leading_ideal(&gens);
        ensure!(ours == oracle, "seed {}: leading ideal {:?} vs oracle {:?}", seed, ours, oracle);
        let d = vdim(&basis).map_err(|e| e.to_string())?;
        let od = staircase_size(&oracle, nvars).ok_or("oracle: not zero-dimensional")?;
        ensure!(d == od && d == prod, "seed {}: vdim {} oracle {} construction {}", seed, d, od, prod);
        checked += 1;
    }
    Ok(format!("{} seeded ideals agree with Buchberger", checked))
}

fn criterion_5() -> Outcome {
    const CASES: u64 = 50;
    let mut worst_residual = 0f64;
    let mut spairs = 0;
    let mut nontrivial = 0;
    for seed in 0..CASES {
        let (problem, _) = constrained_problem(5000 + seed);
        let out = run_pipeline(&problem, None, &SolverConfig { seed, ..SolverConfig::default() }, Limits::default())
            .map_err(|e| format!("seed {}: {}", seed, e))?;
        let order = &out.system.order;
        let g = out.basis.generators();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let nf = mora_normal_form(&spoly(&g[i], &g[j], order), g, order);
                ensure!(nf.is_zero(), "seed {}: S-pair ({}, {}) has normal form {}", seed, i, j, nf);
                spairs += 1;
            }
        }

        let mut r = rng(seed);
        let ring = &out.system.ring;
        let a = random_poly(&mut r, ring, 3, 5);
        let b = random_poly(&mut r, ring, 3, 5);
        let c = q(r.gen_range(-4..=4));
        let nf = |f: &Polynomial| reduced_normal_form(f, &out.basis).unwrap();
        let lhs = nf(&(&a + &b.scale(&c)));
        ensure!(lhs == &nf(&a) + &nf(&b).scale(&c), "seed {}: redNF not linear", seed);
        ensure!(nf(&nf(&a)) == nf(&a), "seed {}: redNF not idempotent", seed);

        let mu = out.vdim();
        ensure!(out.zeros.total == mu, "seed {}: total {} vs vdim {}", seed, out.zeros.total, mu);
        let msum: usize = out.zeros.entries.iter().map(|e| e.multiplicity as usize).sum();
        ensure!(msum == mu, "seed {}: multiplicities sum {} vs vdim {}", seed, msum, mu);
        if let Some(m) = &out.matrices {
            nontrivial += 1;
            let n = problem.base_ring.nvars();
            for i in 0..m.nvars() {
                for j in 0..m.nvars() {
                    ensure!(m.get(i) * m.get(j) == m.get(j) * m.get(i), "seed {}: M_{} M_{} differ", seed, i, j);
                }
            }
            for k in n..m.nvars() {
                ensure!(m.get(k).pow(mu).is_zero(), "seed {}: M_{} not nilpotent", seed, k);
            }
        }
        for e in &out.extended_zeros.entries {
            let res = out.system.generators.iter().map(|g| g.eval_complex(&e.coordinates).norm()).fold(0.0, f64::max);
            worst_residual = worst_residual.max(res);
        }
    }
    ensure!(worst_residual <= RESIDUAL_TOL, "residual {:e}", worst_residual);
    Ok(format!(
        "{} cases ({} with zeros on V(J)), {} S-pairs, max residual {:.1e}",
        CASES, nontrivial, spairs, worst_residual
    ))
}

/// Two distinct weight matrices making x, y global and u local.
fn order_pair(seed: u64) -> (TermOrder, TermOrder) {
    let mut r = rng(seed);
    let mut one = || {
        let mut rows = vec![vec![r.gen_range(1..=5), r.gen_range(1..=5), r.gen_range(-5..=-1)]];
        if r.gen_bool(0.5) {
            rows.push((0..3).map(|_| r.gen_range(-3..=3)).collect());
        }
        TermOrder::new(rows, 3).unwrap()
    };
    let a = one();
    let mut b = one();
    while b == a {
        b = one();
    }
    (a, b)
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for seed in 0..5u64 {
        let (oa, ob) = order_pair(7000 + seed);
        ensure!(oa.signature() == ob.signature(), "signatures differ");
        let problem = if seed == 0 { example_problem().0 } else { constrained_problem(7100 + seed).0 };
        let cfg = SolverConfig::default();
        let ra = run_pipeline(&problem, Some(&oa), &cfg, Limits::default()).map_err(|e| e.to_string())?;
        let rb = run_pipeline(&problem, Some(&ob), &cfg, Limits::default()).map_err(|e| e.to_string())?;
        ensure!(ra.vdim() == rb.vdim(), "seed {}: vdim {} under {} vs {} under {}", seed, ra.vdim(), oa, rb.vdim(), ob);
        for (x, y) in [(&ra, &rb), (&rb, &ra)] {
            if let Some(bb) = &x.border_basis {
                for h in bb.polynomials() {
                    let nf = mora_normal_form(h, y.basis.generators(), &y.system.order);
                    ensure!(nf.is_zero(), "seed {}: {} does not reduce to 0 under {}", seed, h, y.system.order);
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("5 order pairs, {} cross reductions to 0", checked))
}

fn criterion_7() -> Outcome {
    let ring = PolyRing::new(&["x", "y"]).unwrap();
    let p = |s: &str| parse_poly(s, &ring).unwrap();
    let cfg = SolverConfig::default();
    let circle = milnor_report(&p("x2+y2-1"), &cfg).map_err(|e| e.to_string())?;
    ensure!(circle.milnor_sum == 0 && circle.points.is_empty(), "circle sum {}", circle.milnor_sum);

    let cusp = milnor_report(&p("x3-y2"), &cfg).map_err(|e| e.to_string())?;
    // the Jacobian ideal of x^3 - y^2 is the monomial ideal <x^2, y>
    let oracle = staircase_size(&[vec![2, 0], vec![0, 1]].into_iter().collect(), 2).unwrap();
    ensure!(oracle == 2, "oracle {}", oracle);
    ensure!(cusp.milnor_sum == oracle, "cusp sum {}", cusp.milnor_sum);
    ensure!(cusp.points.len() == 1 && cusp.points[0].milnor_number as usize == oracle, "cusp points");
    ensure!(cusp.points[0].coordinates.iter().all(|z| z.norm() <= COORD_TOL), "cusp not at origin");
    Ok("smooth circle 0, cusp 2 at the origin".into())
}

/// `Π (v0 + Σ ζ_i v_{i+1})^m` over the zeros, expanded.
fn product_form(zeros: &[(Vec<Complex64>, u32)], nvars: usize) -> BTreeMap<Vec<u32>, Complex64> {
    let mut acc: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
    acc.insert(vec![0; nvars + 1], Complex64::new(1.0, 0.0));
    for (z, m) in zeros {
        for _ in 0..*m {
            let mut next = BTreeMap::new();
            for (e, c) in &acc {
                for i in 0..=nvars {
                    let coef = if i == 0 { Complex64::new(1.0, 0.0) } else { z[i - 1] };
                    let mut f = e.clone();
                    f[i] += 1;
                    *next.entry(f).or_insert_with(Complex64::default) += c * coef;
                }
            }
            acc = next;
        }
    }
    acc
}

fn criterion_8() -> Outcome {
    let (problem, _) = example_problem();
    let out = run_pipeline(&problem, None, &SolverConfig::default(), Limits::default()).map_err(|e| e.to_string())?;
    let m = out.matrices.as_ref().ok_or("no matrices")?;
    let chow = chow_form(m, &SolverConfig::default()).map_err(|e| e.to_string())?;
    let vring = chow.poly.ring().clone();
    let expected = parse_poly("v0^3*(v0^2 + 3*v0*v2 - 3/4*v1^2 + 9/4*v2^2)", &vring).unwrap();
    ensure!(chow.poly == expected, "Chow form {}", chow.poly);
    ensure!(chow.degree() == 5 && chow.is_homogeneous(), "degree {}", chow.degree());
    ensure!(chow.poly.terms().all(|(e, _)| e.exponents()[3] == 0), "v3 appears");

    let zeros: Vec<(Vec<Complex64>, u32)> =
        out.extended_zeros.entries.iter().map(|e| (e.coordinates.clone(), e.multiplicity)).collect();
    let rebuilt = product_form(&zeros, 3);
    let scale = chow.poly.terms().map(|(_, c)| locsolve::poly::rational_to_f64(c).abs()).fold(0.0, f64::max);
    let mut worst = 0f64;
    let mut keys: BTreeSet<Vec<u32>> = rebuilt.keys().cloned().collect();
    keys.extend(chow.poly.terms().map(|(e, _)| e.exponents().to_vec()));
    for k in keys {
        let exact = locsolve::poly::rational_to_f64(&chow.poly.coeff(&locsolve::Monomial::new(k.clone())));
        let approx = rebuilt.get(&k).copied().unwrap_or_default();
        worst = worst.max((approx - exact).norm() / scale);
    }
    ensure!(worst <= CHOW_TOL, "relative coefficient error {:e}", worst);
    Ok(format!("exact expansion, degree 5, no v3, relative error {:.1e}", worst))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("worked singular-point example", criterion_1),
        ("global critical-point total", criterion_2),
        ("triple root on its constraint", criterion_3),
        ("Buchberger oracle", criterion_4),
        ("property suite", criterion_5),
        ("order-equivalence invariance", criterion_6),
        ("Milnor derived cases", criterion_7),
        ("Chow cross-check", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} ({}): PASS - {}", i + 1, name, detail),
            Err(why) => {
                failures += 1;
                println!("criterion {} ({}): FAIL - {}", i + 1, name, why);
            }
        }
    }
    println!("acceptance: {}/{} passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
