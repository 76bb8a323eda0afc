//! Acceptance criteria 1-11, one PASS/FAIL line each. Runs without the test
//! harness so the lines always reach the terminal.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use grmeasure::category::FamilyConfig;
use grmeasure::chain::NatChain;
use grmeasure::linalg::PrimeField;
use grmeasure::verify::{
    check_dyadic_embedding, check_lemma_comparison, check_lemma_drop_max, check_random_posets,
    family_checks, random_cases, CheckOutcome, SuiteConfig,
};
use serde_json::Value;

type Check = Result<String, String>;

fn run(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_grmeasure"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "grmeasure {} exited with {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(checks: &[CheckOutcome]) -> Result<usize, String> {
    let mut total = 0;
    for c in checks {
        ensure(c.is_pass(), || c.to_string())?;
        ensure(c.checked > 0, || format!("{}: nothing checked", c.name))?;
        total += c.checked;
    }
    Ok(total)
}

/// Measures by element name from `quiver --format json` output.
fn json_measures(out: &str) -> Result<BTreeMap<String, NatChain>, String> {
    let v: Value = serde_json::from_str(out).map_err(|e| e.to_string())?;
    let elements = v["elements"].as_array().ok_or("no elements array")?;
    elements
        .iter()
        .map(|e| {
            let name = e["name"].as_str().ok_or("element without name")?.to_string();
            let measure: Vec<u32> = e["measure"]
                .as_array()
                .ok_or("element without measure")?
                .iter()
                .map(|n| n.as_u64().map(|n| n as u32).ok_or("non-integer measure"))
                .collect::<Result<_, _>>()?;
            let chain = NatChain::from_elements(measure).map_err(|e| e.to_string())?;
            Ok((name, chain))
        })
        .collect()
}

fn c1_subset_order() -> Check {
    let out = run(&["chains", "table", "--universe", "3"])?;
    let order: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap_or("")).collect();
    let expected = ["-", "3", "2", "2,3", "1", "1,3", "1,2", "1,2,3"];
    ensure(order == expected, || format!("got {order:?}"))?;
    Ok(format!("{}", order.join(" < ")))
}

/// Independent value of `Σ 2^-x` over `{1..12}`: an integer over `2^12`,
/// printed in lowest terms.
fn dyadic_oracle(c: &NatChain) -> String {
    let mut num: u64 = c.elements().iter().map(|&x| 1u64 << (12 - x)).sum();
    let mut den: u64 = 1 << 12;
    if num == 0 {
        return "0".into();
    }
    while num % 2 == 0 && den > 1 {
        num /= 2;
        den /= 2;
    }
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn c2_dyadic() -> Check {
    let check = check_dyadic_embedding(12);
    ensure(check.is_pass(), || check.to_string())?;
    let mut all = NatChain::subsets_of(12);
    ensure(all.len() == 4096, || format!("{} subsets", all.len()))?;
    all.sort();
    let mut seen = BTreeSet::new();
    for c in &all {
        let exact = c.dyadic_value();
        ensure(exact.to_string() == dyadic_oracle(c), || {
            format!("{c}: {exact} vs {}", dyadic_oracle(c))
        })?;
        ensure(seen.insert(exact.clone()), || format!("{c}: repeated value {exact}"))?;
    }
    for w in all.windows(2) {
        ensure(w[0].dyadic_value() < w[1].dyadic_value(), || format!("{} vs {}", w[0], w[1]))?;
    }
    Ok("4096 subsets, distinct exact values, strictly increasing".into())
}

fn poset_checks() -> Result<Vec<CheckOutcome>, String> {
    check_random_posets(0, 100).map_err(|e| e.to_string())
}

fn c3_oracle() -> Check {
    let cases = random_cases(0, 100);
    let max = cases.iter().map(|p| p.len()).max().unwrap_or(0);
    ensure(cases.len() == 100 && max <= 12, || format!("{} cases, largest {max}", cases.len()))?;
    let checks = poset_checks()?;
    let oracle = &checks[0];
    ensure(oracle.name == "recursion equals chain oracle", || oracle.name.clone())?;
    ensure(oracle.is_pass() && oracle.checked == 100, || oracle.to_string())?;
    Ok(format!("100 posets, largest has {max} elements"))
}

fn c4_lemma() -> Check {
    let checks = [check_lemma_drop_max(8), check_lemma_comparison(8)];
    let n = all_pass(&checks)?;
    Ok(format!("{n} instances over subsets of 1..8"))
}

fn c5_axioms() -> Check {
    let checks = poset_checks()?;
    let wanted = ["M1-M3", "C1/C2/C4/C5 and top is length", "P1-P3", "equal-measure corollary"];
    let selected: Vec<CheckOutcome> = checks
        .into_iter()
        .filter(|c| wanted.contains(&c.name.as_str()))
        .collect();
    ensure(selected.len() == wanted.len(), || "missing axiom checks".into())?;
    let n = all_pass(&selected)?;
    let corrupted = grmeasure::verify::check_corrupted_maps();
    ensure(corrupted.is_pass(), || corrupted.to_string())?;
    Ok(format!("{n} axiom instances, {} corrupted maps rejected", corrupted.checked))
}

fn c6_a3() -> Check {
    let expected: BTreeMap<&str, &str> = [
        ("010", "1"),
        ("100", "1"),
        ("001", "1"),
        ("110", "1,2"),
        ("011", "1,2"),
        ("111", "1,3"),
    ]
    .into();
    let mut outputs = Vec::new();
    for p in ["2", "3"] {
        let json = run(&["quiver", "--family", "a3paper", "--field", p, "--format", "json"])?;
        let m = json_measures(&json)?;
        let got: BTreeMap<&str, String> = m.iter().map(|(k, v)| (k.as_str(), v.to_string())).collect();
        let want: BTreeMap<&str, String> = expected.iter().map(|(k, v)| (*k, v.to_string())).collect();
        ensure(got == want, || format!("F{p}: {got:?}"))?;

        let v: Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        let classes: Vec<Vec<&str>> = v["classes"]
            .as_array()
            .ok_or("no classes")?
            .iter()
            .map(|c| c.as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect())
            .collect();
        let class_values: Vec<String> = classes.iter().map(|c| m[c[0]].to_string()).collect();
        ensure(class_values == ["1", "1,3", "1,2"], || format!("F{p}: classes {class_values:?}"))?;

        let dot = run(&["quiver", "--family", "a3paper", "--field", p, "--format", "dot"])?;
        let mut edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).map(str::trim).collect();
        edges.sort();
        let hasse = [
            "\"001\" -> \"011\";",
            "\"001\" -> \"111\";",
            "\"100\" -> \"110\";",
            "\"100\" -> \"111\";",
        ];
        ensure(edges == hasse, || format!("F{p}: edges {edges:?}"))?;
        outputs.push((json, dot));
    }
    ensure(outputs[0] == outputs[1], || "F2 and F3 outputs differ".into())?;
    Ok("6 classes, 4 Hasse edges, {1} < {1,3} < {1,2}, same over F2 and F3".into())
}

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).expect("small prime")
}

fn c7_socle_formula() -> Check {
    let suite = SuiteConfig { cases: 0, ..SuiteConfig::default() };
    let runs = [
        ("a3paper", FamilyConfig { field: field(2), ..Default::default() }),
        ("a3paper", FamilyConfig { field: field(3), ..Default::default() }),
        ("linear-an", FamilyConfig { n: Some(4), ..Default::default() }),
        ("linear-an", FamilyConfig { n: Some(4), field: field(3), ..Default::default() }),
        ("kronecker", FamilyConfig { max_length: Some(3), ..Default::default() }),
        ("kronecker", FamilyConfig { max_length: Some(3), field: field(3), ..Default::default() }),
    ];
    let mut total = 0;
    for (family, config) in runs {
        let checks = family_checks(family, &config, &suite, None).map_err(|e| e.to_string())?;
        let formula: Vec<CheckOutcome> = checks
            .into_iter()
            .filter(|c| c.name.ends_with("socle formula"))
            .collect();
        total += all_pass(&formula)?;
    }
    Ok(format!("{total} indecomposables of length <= 3"))
}

fn kronecker_measures(max_length: &str) -> Result<BTreeMap<String, NatChain>, String> {
    let out = run(&[
        "quiver", "--family", "kronecker", "--field", "2", "--max-length", max_length, "--format",
        "json",
    ])?;
    json_measures(&out)
}

fn c8_kronecker() -> Check {
    let m = kronecker_measures("6")?;
    let get = |k: &str| m.get(k).cloned().ok_or(format!("missing {k}"));
    ensure(get("P1")? == get("Q1")?, || "P1 and Q1 differ".into())?;
    for n in 1..=3 {
        let class: BTreeSet<&NatChain> =
            m.iter().filter(|(k, _)| k.starts_with(&format!("R{n}("))).map(|(_, v)| v).collect();
        ensure(class.len() == 1, || format!("R{n} spread over {class:?}"))?;
    }
    let chain = ["P1", "P2", "P3", "R1(1:0)", "R2(1:0)", "R3(1:0)", "Q3", "Q2"];
    let values: Vec<NatChain> = chain.iter().map(|k| get(k)).collect::<Result<_, _>>()?;
    ensure(values.windows(2).all(|w| w[0] < w[1]), || format!("{values:?}"))?;

    // cross-check against brute-force enumeration of every indecomposable up
    // to length 6, which includes regulars at non-rational points
    let dir = std::env::temp_dir().join(format!("grmeasure-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = dir.join("kronecker.quiver");
    std::fs::write(&file, "v 1\nv 2\na a 1 2\na b 1 2\n").map_err(|e| e.to_string())?;
    let out = run(&[
        "quiver", "--family", "custom", "--file", file.to_str().unwrap(), "--max-length", "6",
        "--format", "tsv",
    ])?;
    let _ = std::fs::remove_dir_all(&dir);
    let enumerated: BTreeSet<(String, String)> = out
        .lines()
        .skip(1)
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            (cols[4].to_string(), cols[2].to_string())
        })
        .collect();
    let dims = |name: &str| -> &str {
        match name.chars().next() {
            Some('P') => ["01", "12", "23"][name[1..].parse::<usize>().unwrap() - 1],
            Some('Q') => ["10", "21", "32"][name[1..].parse::<usize>().unwrap() - 1],
            _ => ["11", "22", "33"][name[1..2].parse::<usize>().unwrap() - 1],
        }
    };
    for (name, value) in &m {
        let key = (dims(name).to_string(), value.to_string());
        ensure(enumerated.contains(&key), || format!("{name} {value} not found by enumeration"))?;
    }
    Ok(format!(
        "{}; {} built-ins, {} classes in the full truncation",
        values
            .iter()
            .zip(chain)
            .map(|(v, k)| format!("{k}={{{v}}}"))
            .collect::<Vec<_>>()
            .join(" < "),
        m.len(),
        out.lines().count() - 1
    ))
}

fn c9_structural() -> Check {
    let suite = SuiteConfig::default();
    let runs = [
        ("a3paper", FamilyConfig::default()),
        ("linear-an", FamilyConfig { n: Some(4), ..Default::default() }),
        ("kronecker", FamilyConfig { max_length: Some(6), ..Default::default() }),
    ];
    let mut total = 0;
    for (family, config) in runs {
        let checks = family_checks(family, &config, &suite, None).map_err(|e| e.to_string())?;
        let wanted: Vec<CheckOutcome> = checks
            .into_iter()
            .filter(|c| {
                ["GR6", "GR7", "GR8 main property", "GR inclusion quotient indecomposable"]
                    .iter()
                    .any(|w| c.name.ends_with(&format!(": {w}")))
            })
            .collect();
        ensure(wanted.len() == 4, || format!("{family}: {} checks", wanted.len()))?;
        total += all_pass(&wanted)?;
    }
    Ok(format!("{total} instances, 0 violations"))
}

fn c10_truncation() -> Check {
    let small = kronecker_measures("4")?;
    let large = kronecker_measures("6")?;
    for (name, value) in &small {
        let other = large.get(name).ok_or(format!("{name} missing at 6"))?;
        ensure(value == other, || format!("{name}: {value} at 4, {other} at 6"))?;
    }
    let expected = large.iter().filter(|(k, _)| {
        let len = match k.chars().next() {
            Some('R') => 2 * k[1..2].parse::<usize>().unwrap(),
            _ => 2 * k[1..].parse::<usize>().unwrap() - 1,
        };
        len <= 4
    });
    ensure(expected.count() == small.len(), || "different object sets".into())?;
    Ok(format!("{} objects agree", small.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Check); 10] = [
        (1, "subset ordering", Duration::from_secs(1), c1_subset_order),
        (2, "dyadic embedding", Duration::from_secs(5), c2_dyadic),
        (3, "oracle equivalence", Duration::from_secs(30), c3_oracle),
        (4, "lemma suite", Duration::from_secs(30), c4_lemma),
        (5, "axiom suites", Duration::from_secs(30), c5_axioms),
        (6, "three-vertex golden", Duration::from_secs(10), c6_a3),
        (7, "length <= 3 formula", Duration::from_secs(60), c7_socle_formula),
        (8, "Kronecker golden", Duration::from_secs(300), c8_kronecker),
        (9, "structural propositions", Duration::from_secs(300), c9_structural),
        (10, "truncation stability", Duration::from_secs(300), c10_truncation),
    ];
    let mut failed = 0;
    let mut passed = BTreeSet::new();
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= limit => Ok(detail),
            Ok(_) => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(detail) => {
                passed.insert(id);
                println!("PASS {id:>2} {name} ({elapsed:.2?}): {detail}");
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {id:>2} {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    // criterion 11 has no computation of its own; it rests on 8 and 9
    if passed.contains(&8) && passed.contains(&9) {
        println!("PASS 11 excluded sections: no desk-scale reproduction; covered by 8 and 9");
    } else {
        failed += 1;
        println!("FAIL 11 excluded sections: indirect coverage by 8 and 9 failed");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
