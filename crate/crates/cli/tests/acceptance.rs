//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;
use weakhopf::duality::{certify_duality, semisimplicity_radical, verify_target_smash};
use weakhopf::exactlin::{Field, Matrix};
use weakhopf::groupoid::{builtin_groupoids, groupoid_algebra, groupoid_dual_direct, FiniteGroupoid};
use weakhopf::smash::{dual_action, trivial_action};
use weakhopf::wha::{
    classify_ordinary_hopf, counital_data, dualize, verify_antipode_properties, verify_counital_identities,
    verify_weak_hopf, WeakHopfPresentation,
};

const Q: Field = Field::Rationals;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn instances() -> Vec<(String, WeakHopfPresentation)> {
    let mut out = Vec::new();
    for (name, g) in builtin_groupoids() {
        let h = groupoid_algebra(&g, Q).expect("builtin groupoid algebra");
        let d = dualize(&h).expect("dual of builtin");
        out.push((name.to_string(), h));
        out.push((format!("{name}*"), d));
    }
    out
}

fn c2_point() -> FiniteGroupoid {
    FiniteGroupoid::disjoint_union(&FiniteGroupoid::cyclic(2), &FiniteGroupoid::point())
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let all = instances();
    for (name, p) in &all {
        for (suite, report) in [
            ("weak Hopf axioms", verify_weak_hopf(p)),
            ("antipode properties", verify_antipode_properties(p)),
            ("counital identities", verify_counital_identities(p)),
        ] {
            ensure(report.passed(), || format!("{name}: {suite} failed {:?}", report.failed_names()))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} instances, 0 failures, {:.2}s", all.len(), elapsed.as_secs_f64()))
}

fn dual_cross_check() -> Outcome {
    let groupoids = builtin_groupoids();
    for (name, g) in &groupoids {
        let direct = groupoid_dual_direct(g, Q).map_err(|e| e.to_string())?;
        let via = dualize(&groupoid_algebra(g, Q).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(direct == via, || format!("{name}: direct dual differs from dualize"))?;
    }
    Ok(format!("{} groupoids, exact tensor equality", groupoids.len()))
}

fn hopf_degeneration() -> Outcome {
    let mut ordinary = 0;
    for (name, g) in builtin_groupoids() {
        let h = groupoid_algebra(&g, Q).map_err(|e| e.to_string())?;
        let c = classify_ordinary_hopf(&h).map_err(|e| format!("{name}: {e}"))?;
        let one_object = g.objects().len() == 1;
        ensure(c.ordinary == one_object, || format!("{name}: ordinary = {}", c.ordinary))?;
        if one_object {
            ordinary += 1;
            let unit = h.unit().to_vec();
            ensure(h.delta_unit() == h.tensor(&unit, &unit), || format!("{name}: Δ(1) ≠ 1⊗1"))?;
            let dim_t = counital_data(&h).map_err(|e| e.to_string())?.target.dim();
            ensure(dim_t == 1, || format!("{name}: dim H_t = {dim_t}"))?;
        }
    }
    Ok(format!("ordinary exactly for the {ordinary} one-object groupoids"))
}

fn certificates() -> Outcome {
    let c2 = groupoid_algebra(&FiniteGroupoid::cyclic(2), Q).unwrap();
    let pair = groupoid_algebra(&FiniteGroupoid::pair(2), Q).unwrap();
    let cp = groupoid_algebra(&c2_point(), Q).unwrap();
    let cases = [
        ("(kC2, H_t)", trivial_action(&c2)),
        ("(kC2, H*)", dual_action(&c2)),
        ("(pair2, H_t)", trivial_action(&pair)),
        ("(pair2, H*)", dual_action(&pair)),
        ("(C2+point, H_t)", trivial_action(&cp)),
    ];
    let mut slowest = Duration::ZERO;
    let mut dims = Vec::new();
    for (name, action) in cases {
        let action = action.map_err(|e| format!("{name}: {e}"))?;
        let start = Instant::now();
        let cert = certify_duality(&action);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(cert.is_valid(), || format!("{name}: failed {:?} {:?}", cert.report.failed_names(), cert.errors))?;
        for check in [
            "alpha_multiplicative",
            "alpha_unital",
            "alpha_image_equals_commutant",
            "beta_alpha_id",
            "alpha_beta_id",
            "dimensions_equal",
        ] {
            ensure(cert.report.get(check).is_some_and(|c| c.passed), || format!("{name}: {check}"))?;
        }
        let (a, b) = (cert.alpha.as_ref().unwrap(), cert.beta.as_ref().unwrap());
        ensure(b.mul(a) == Matrix::identity(Q, a.cols()), || format!("{name}: β∘α ≠ id"))?;
        ensure(a.mul(b) == Matrix::identity(Q, a.rows()), || format!("{name}: α∘β ≠ id"))?;
        ensure(elapsed < Duration::from_secs(30), || format!("{name}: took {elapsed:?}"))?;
        dims.push(format!("{name} {}", cert.iterated_dim.unwrap()));
    }
    Ok(format!("5 valid certificates [{}], slowest {:.2}s", dims.join(", "), slowest.as_secs_f64()))
}

fn target_smash() -> Outcome {
    for (name, g) in [("kC2", FiniteGroupoid::cyclic(2)), ("pair2", FiniteGroupoid::pair(2)), ("C2+point", c2_point())] {
        let h = groupoid_algebra(&g, Q).unwrap();
        let report = verify_target_smash(&h).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.passed(), || format!("{name}: {:?}", report.failed_names()))?;
    }
    Ok("H_t#H ≅ H and (H_t#H)#H* semisimple for kC2, pair2, C2+point".into())
}

fn counital_exhaustive() -> Outcome {
    let all = instances();
    let mut checks = 0;
    for (name, p) in &all {
        let counital = verify_counital_identities(p);
        ensure(counital.passed(), || format!("{name}: {:?}", counital.failed_names()))?;
        checks += counital.checks.len();
        let antipode = verify_antipode_properties(p);
        for sep in [
            "separability_idempotent_in_target",
            "separability_idempotent_multiplication",
            "separability_idempotent_balanced",
        ] {
            ensure(antipode.get(sep).is_some_and(|c| c.passed), || format!("{name}: {sep}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} exhaustive checks over {} instances", all.len()))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_str().unwrap().to_string()
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_weakhopf")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn failing_check_with_witness(stdout: &[u8], name: &str) -> bool {
    let Ok(report) = serde_json::from_slice::<Value>(stdout) else { return false };
    report["checks"]
        .as_array()
        .into_iter()
        .flatten()
        .any(|c| c["name"] == name && c["passed"] == false && c["witness"]["indices"].is_array())
}

fn negative_controls() -> Outcome {
    let controls = [
        ("corrupted antipode", vec!["check".to_string(), data("corrupted_antipode.json")], "antipode_anti_multiplicative"),
        ("non-coassociative", vec!["check".to_string(), data("non_coassociative.json")], "coassociativity"),
        ("zeroed action", vec!["smash".to_string(), data("zero_action.json")], "module_unit"),
    ];
    for (label, args, check) in &controls {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, stdout) = cli(&args);
        ensure(code == 1, || format!("{label}: exit {code}"))?;
        ensure(failing_check_with_witness(&stdout, check), || format!("{label}: no witnessed failure of {check}"))?;
    }
    let (code, stdout) = cli(&["radical", &data("dual_numbers.json")]);
    let report: Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    ensure(code == 1 && report["radical"]["dim"] == 1, || format!("k[x]/(x²): exit {code}, {}", report["radical"]))?;
    // The library agrees with the command line.
    let a = weakhopf::wha::AlgebraPresentation::truncated_polynomial(Q, 2);
    ensure(semisimplicity_radical(&a).map_err(|e| e.to_string())?.dim() == 1, || "library radical".into())?;
    Ok("3 controls exit 1 naming the axiom with a witness; k[x]/(x²) radical dim 1".into())
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("weakhopf-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let runs: Vec<Vec<String>> = vec![
        vec!["check".into(), data("pair2.json")],
        vec!["check".into(), data("corrupted_antipode.json")],
        vec!["dual".into(), data("pair2.json")],
        vec!["certify".into(), data("pair2.json"), "trivial".into()],
        vec!["certify".into(), data("c2.json"), "dual".into()],
        vec!["--format".into(), "text".into(), "certify".into(), data("c2_point.json"), "trivial".into()],
        vec!["radical".into(), data("dual_numbers.json")],
    ];
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        ensure(cli(&args) == cli(&args), || format!("{args:?}: reports differ"))?;
    }
    let mut certs = Vec::new();
    for i in 0..2 {
        let out = dir.join(format!("cert{i}.json"));
        let (code, _) = cli(&["certify", &data("pair2.json"), "dual", "--out", out.to_str().unwrap()]);
        ensure(code == 0, || format!("certify exit {code}"))?;
        certs.push(fs::read(&out).map_err(|e| e.to_string())?);
    }
    let _ = fs::remove_dir_all(&dir);
    ensure(certs[0] == certs[1], || "certificate files differ".into())?;
    Ok(format!("{} reports and 1 certificate byte-identical across reruns", runs.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("axiom suite", axiom_suite),
        ("groupoid dual cross-check", dual_cross_check),
        ("Hopf degeneration", hopf_degeneration),
        ("duality certificates", certificates),
        ("target smash semisimplicity", target_smash),
        ("counital identities exhaustive", counital_exhaustive),
        ("negative controls", negative_controls),
        ("determinism", determinism),
    ];
    let mut passed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => {
                passed += 1;
                println!("PASS criterion {} {title}: {detail}", i + 1);
            }
            Err(why) => println!("FAIL criterion {} {title}: {why}", i + 1),
        }
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
