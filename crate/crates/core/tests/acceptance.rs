//! Acceptance list: one PASS/FAIL line per item, non-zero exit on any FAIL.

mod common;

use std::time::Instant;

use common::{corpus_dir, load, point, CORPUS};
use eulerdata::euler::{
    beta_alternating_sum, chi_isolated, milnor_number, sectional_milnor, slice_identity, InvariantReport,
};
use eulerdata::geometry::{generic_linear_form, VarietySpec};
use eulerdata::oracle::{chi_smooth_plane_curve, resultant_point_count, BivariateSystem};
use eulerdata::strat::{check_duality, CheckStatus, StratificationFixture};
use eulerdata::{vars, Config, Ideal, Poly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg() -> Config {
    Config::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(name: &str) -> Result<(VarietySpec, InvariantReport), String> {
    let v = load(name);
    let r = InvariantReport::compute(&v, 0, &cfg(), true).map_err(|e| e.to_string())?;
    Ok((v, r))
}

fn expect_invariants(r: &InvariantReport, alpha: &[usize], eu: i64, chi: i64) -> Result<(), String> {
    ensure(r.alpha.values == alpha, || format!("alpha {:?}, expected {alpha:?}", r.alpha.values))?;
    ensure(r.eu == eu, || format!("eu {}, expected {eu}", r.eu))?;
    ensure(r.chi == Some(chi), || format!("chi {:?}, expected {chi}", r.chi))?;
    ensure(r.agreement, || "internal cross-checks disagree".into())
}

/// Critical points of a generic linear form on a plane curve, and its
/// intersection with a generic line, both counted by resultants.
fn plane_curve_oracle(v: &VarietySpec, seed: u64) -> Result<(usize, usize), String> {
    let f = &v.equations()[0];
    let names = vars(&["x", "y"]);
    let form = generic_linear_form(2, seed, 97).map_err(|e| e.to_string())?;
    let (a, b) = (&form.coefficients[0], &form.coefficients[1]);
    let polar = &f.derivative(1).scale(a) - &f.derivative(0).scale(b);
    let line = Poly::parse("3*x - 5*y - 7", &names).unwrap();
    let critical = resultant_point_count(&BivariateSystem::new(f.clone(), polar).unwrap(), seed, 997)
        .map_err(|e| e.to_string())?;
    let section =
        resultant_point_count(&BivariateSystem::new(f.clone(), line).unwrap(), seed, 997).map_err(|e| e.to_string())?;
    Ok((critical, section))
}

fn criterion_1() -> Outcome {
    let (v, r) = report("smooth_hyperbola")?;
    expect_invariants(&r, &[2, 2], 0, 0)?;
    let (critical, section) = plane_curve_oracle(&v, 1)?;
    ensure((critical, section) == (2, 2), || format!("resultant oracle gives ({critical}, {section})"))?;
    ensure(chi_smooth_plane_curve(2, 2) == 0, || "genus-degree oracle".into())?;
    Ok("alpha (2, 2), eu 0, chi 0; resultant and genus-degree oracles agree".into())
}

fn criterion_2() -> Outcome {
    let (v, r) = report("cuspidal_cubic")?;
    expect_invariants(&r, &[1, 3], 2, 1)?;
    let mu0 = sectional_milnor(&v, &point(&[0, 0]), 2, &cfg()).map_err(|e| e.to_string())?;
    ensure(mu0 == 1, || format!("sectional milnor {mu0}"))?;
    // The polar curve of a x + b y always passes through the cusp; one more
    // critical point lies on the smooth part.
    let (critical, _) = plane_curve_oracle(&v, 3)?;
    ensure(critical == 2, || format!("Lagrange system has {critical} solutions, expected cusp + 1"))?;
    Ok("alpha (1, 3), eu 2, sectional mu at the cusp 1, chi 1 (a topological line)".into())
}

fn criterion_3() -> Outcome {
    let (v, r) = report("nodal_cubic")?;
    expect_invariants(&r, &[2, 3], 1, 0)?;
    let via_beta = beta_alternating_sum(r.beta.as_ref().unwrap());
    let direct = chi_isolated(&v, 7, &cfg()).map_err(|e| e.to_string())?;
    let via_mu = -(direct.sum_mu_sectional as i64);
    ensure(via_beta == -1 && via_mu == -1, || format!("chi - eu: beta route {via_beta}, milnor route {via_mu}"))?;
    Ok("alpha (2, 3), eu 1, chi 0, chi - eu = -1 by both routes".into())
}

fn criterion_4() -> Outcome {
    let (v, r) = report("cone")?;
    expect_invariants(&r, &[0, 2, 2], 0, 1)?;
    let mu1 = sectional_milnor(&v, &point(&[0, 0, 0]), 4, &cfg()).map_err(|e| e.to_string())?;
    ensure(mu1 == 1, || format!("sectional milnor at the vertex {mu1}"))?;
    Ok("alpha (0, 2, 2), eu 0, sectional mu at the vertex 1, chi 1".into())
}

fn criterion_5() -> Outcome {
    let (v, r) = report("smooth_cubic")?;
    expect_invariants(&r, &[6, 3], -3, -3)?;
    ensure(chi_smooth_plane_curve(3, 3) == -3, || "genus-degree oracle".into())?;
    let (critical, section) = plane_curve_oracle(&v, 5)?;
    ensure((critical, section) == (6, 3), || format!("resultant oracle gives ({critical}, {section})"))?;
    Ok("alpha (6, 3), eu = chi = -3, matching the genus-degree formula".into())
}

fn criterion_6() -> Outcome {
    let names = vars(&["x", "y"]);
    let mut seen = Vec::new();
    for k in 1..=5 {
        let f = Poly::parse(&format!("y^2 + x^{}", k + 1), &names).unwrap();
        seen.push(milnor_number(&f, &point(&[0, 0]), &cfg()).map_err(|e| e.to_string())?);
    }
    ensure(seen == [1, 2, 3, 4, 5], || format!("got {seen:?}"))?;
    Ok("mu(y^2 + x^(k+1)) = k for k = 1..5".into())
}

fn criterion_7() -> Outcome {
    for name in CORPUS {
        let id = slice_identity(&load(name), 17, &cfg()).map_err(|e| e.to_string())?;
        ensure(id.holds, || format!("{name}: {id:?}"))?;
    }
    Ok("Eu(V) = Eu(V cap H) + (-1)^d alpha_1(V) on all five corpus varieties".into())
}

fn criterion_8() -> Outcome {
    for name in CORPUS {
        let v = load(name);
        let mut runs = Vec::new();
        for s in 0..3 {
            let r = InvariantReport::compute(&v, s, &cfg(), true).map_err(|e| e.to_string())?;
            runs.push((r.alpha.values, r.eu, r.chi));
        }
        ensure(runs.windows(2).all(|w| w[0] == w[1]), || format!("{name}: {runs:?}"))?;
    }
    Ok("alpha, eu and chi identical under seeds 0, 1, 2".into())
}

fn criterion_9() -> Outcome {
    for name in ["nodal_cubic_strata", "cone_strata"] {
        let f = StratificationFixture::load(&corpus_dir().join(format!("{name}.json")), &cfg())
            .map_err(|e| e.to_string())?;
        let r = check_duality(&f, 0, &cfg());
        ensure(r.all_consistent, || format!("{name}: {:?}", r.rows))?;
        let mut corrupted = f.clone();
        let node = corrupted.strata.iter_mut().find(|s| s.dim == 0).unwrap();
        node.eu_normal = 3;
        let r = check_duality(&corrupted, 0, &cfg());
        let flagged = r.rows.iter().any(|row| row.check == "formula_one" && row.status == CheckStatus::Mismatch);
        ensure(!r.all_consistent && flagged, || format!("{name}: corruption not flagged"))?;
    }
    Ok("both fixtures consistent under formulas one, two and the pencil; corruption flagged".into())
}

fn criterion_10() -> Outcome {
    let systems = common::random_bivariate_systems(20);
    for (i, s) in systems.iter().enumerate() {
        let ideal = Ideal::new(s.p().vars(), vec![s.p().clone(), s.q().clone()]);
        let engine = ideal.distinct_point_count(i as u64, 997).map_err(|e| e.to_string())?.count;
        let oracle = resultant_point_count(s, i as u64, 997).map_err(|e| e.to_string())?;
        ensure(engine == oracle, || format!("system {i}: engine {engine}, resultant {oracle}"))?;
    }
    Ok("20 random systems of degree <= 3: Groebner and resultant counts agree".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("hyperbola", criterion_1),
        ("cuspidal cubic", criterion_2),
        ("nodal cubic", criterion_3),
        ("quadric cone", criterion_4),
        ("smooth cubic", criterion_5),
        ("Milnor closed form", criterion_6),
        ("slice identity", criterion_7),
        ("seed stability", criterion_8),
        ("duality fixtures", criterion_9),
        ("oracle equivalence", criterion_10),
    ];
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{label}] {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{label}] {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
