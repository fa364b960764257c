mod common;

use std::path::{Path, PathBuf};

use invsegal::cli::main_with;
use invsegal::format::parse;

const CASES: &[(&str, &str)] = &[
    ("check_segal_nerve", "check-segal --k 3 nerve_z2.json"),
    ("check_segal_nerve_json", "check-segal --k 2 --json nerve_z2.json"),
    ("check_segal_empty", "check-segal empty.json"),
    ("check_segal_constant", "check-segal constant.json"),
    ("check_bousfield_poset", "check-bousfield --k 2 nerve_poset1.json"),
    ("check_bousfield_poset_paper_index", "check-bousfield --k 2 --bousfield-index paper nerve_poset1.json"),
    ("check_bousfield_nerve", "check-bousfield --k 3 nerve_z2.json"),
    ("check_complete_constant", "check-complete constant.json"),
    ("check_complete_nerve", "check-complete nerve_z2.json"),
    ("check_psi_local_constant", "check-psi-local constant.json"),
    ("check_psi_local_nerve", "check-psi-local nerve_z2.json"),
    ("check_discrete_square", "check-discrete square.json"),
    ("check_discrete_nerve", "check-discrete nerve_z2.json"),
    ("check_dk_x_into_f", "check-dk x_into_f.json"),
    ("check_dk_corpus0", "check-dk corpus0.json"),
    ("check_dk_space_identity", "check-dk nerve_z2_identity.json"),
    ("check_fibration_x_into_f", "check-fibration x_into_f.json"),
    ("check_fibration_corpus1", "check-fibration corpus1.json"),
    ("check_rlp_x_into_f_a", "check-rlp --set A1,A2 x_into_f.json"),
    ("check_rlp_x_into_f_c", "check-rlp --set C1,C2 --with-c1-zero x_into_f.json"),
    ("check_rlp_identity_ic", "check-rlp --set Ic --mmax 1 --nmax 1 nerve_z2_identity.json"),
    ("nerve_groupoid", "nerve --trunc 2 z2.json"),
    ("nerve_category", "nerve --trunc 2 poset1.json"),
    ("reduce_square", "reduce square.json"),
    ("cosk0_simplex", "cosk0 --trunc 2 point.json"),
    ("invert_poset", "invert nerve_poset1.json"),
    ("R_nerve", "R nerve_z2.json"),
    ("T_nerve", "T nerve_z2.json"),
    ("C_simplex", "C --trunc 1 point.json"),
    ("ug_point", "ug point.json"),
    ("pi0_square", "pi0 square.json"),
    ("pi0_sgpd", "pi0 --object G corpus0.json"),
    ("homology_simplex", "homology simplex1.json"),
    ("kan_simplex", "kan simplex1.json"),
    ("kan_boundary_inclusion", "kan boundary2.json"),
    ("localize_nerve", "localize nerve_z2.json"),
    ("localize_poset", "localize nerve_poset1.json"),
    ("verify_ct", "verify-adjunction --pair C-T --instances ct_instances.json"),
    ("verify_invert_restrict", "verify-adjunction --pair invert-restrict --instances inv_instances.json"),
    ("verify_ir", "verify-adjunction --pair I-R --instances ir_instances.json"),
    ("verify_fn", "verify-adjunction --pair F-N --trunc 2 --instances fn_instances.json"),
    ("crosscheck_document", "crosscheck corpus0.json"),
];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run_in(dir: &Path, line: &str) -> invsegal::cli::Output {
    let mut args = vec!["invsegal".to_string()];
    for tok in line.split_whitespace() {
        if tok.ends_with(".json") {
            args.push(dir.join(tok).display().to_string());
        } else {
            args.push(tok.to_string());
        }
    }
    main_with(args)
}

#[test]
fn golden_reports() {
    let dir = common::scratch_dir("golden");
    common::write_corpus(&dir);
    let bless = std::env::var_os("INVSEGAL_BLESS").is_some();
    let mut mismatches = Vec::new();
    for (name, line) in CASES {
        let out = run_in(&dir, line);
        assert!(out.stderr.is_empty(), "{line}: {}", out.stderr);
        let got = format!("$ invsegal {line}\nexit {}\n{}", out.code, out.stdout);
        let path = golden_dir().join(format!("{name}.txt"));
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &got).unwrap();
        } else {
            let want = std::fs::read_to_string(&path).unwrap_or_default();
            if want != got {
                mismatches.push(name.to_string());
            }
        }
    }
    assert!(mismatches.is_empty(), "golden mismatches: {mismatches:?}");
}

#[test]
fn documented_exit_codes() {
    let dir = common::scratch_dir("exit");
    common::write_corpus(&dir);
    let out = run_in(&dir, "check-segal --k 3 nerve_z2.json");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("tier: exact_iso") && !out.stdout.contains("tier: fail"));
    let out = run_in(&dir, "check-bousfield --k 2 nerve_poset1.json");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("4 != 5"), "{}", out.stdout);
    assert_eq!(run_in(&dir, "check-complete constant.json").code, 0);
    assert_eq!(run_in(&dir, "--budget 10 crosscheck corpus0.json").code, 2);
    assert_eq!(run_in(&dir, "check-segal missing.json").code, 3);
    assert_eq!(run_in(&dir, "ug square.json").code, 3);
    assert_eq!(run_in(&dir, "verify-adjunction --pair C-T --instances inv_instances.json").code, 3);
    assert_eq!(run_in(&dir, "no-such-command").code, 3);
    assert_eq!(run_in(&dir, "--help").code, 0);
}

#[test]
fn json_and_text_carry_the_same_content() {
    let dir = common::scratch_dir("json");
    common::write_corpus(&dir);
    let text = run_in(&dir, "check-bousfield --k 3 nerve_poset1.json").stdout;
    let json: serde_json::Value = serde_json::from_str(&run_in(&dir, "check-bousfield --k 3 --json nerve_poset1.json").stdout).unwrap();
    for o in json["outcomes"].as_array().unwrap() {
        assert!(text.contains(&format!("name: {}", o["name"].as_str().unwrap())));
        if let Some(w) = o["witness"].as_str() {
            assert!(text.contains(w));
        }
    }
}

#[test]
fn transforms_emit_parseable_documents() {
    let dir = common::scratch_dir("transforms");
    common::write_corpus(&dir);
    for line in ["reduce square.json", "invert nerve_poset1.json", "R nerve_z2.json", "nerve --trunc 2 z2.json", "ug point.json"] {
        let out = run_in(&dir, line);
        assert_eq!(out.code, 0, "{line}: {}", out.stderr);
        parse(&out.stdout).unwrap_or_else(|e| panic!("{line}: {e}"));
    }
    let target = dir.join("restricted.json");
    let out = main_with([
        "invsegal".to_string(),
        "restrict".into(),
        dir.join("nerve_z2.json").display().to_string(),
        "--output".into(),
        target.display().to_string(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let doc = parse(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(doc.objects[0].1.kind(), "bisset");
}

#[test]
fn reduce_is_idempotent_through_the_tool() {
    let dir = common::scratch_dir("idem");
    common::write_corpus(&dir);
    let once = run_in(&dir, "reduce square.json").stdout;
    std::fs::write(dir.join("once.json"), &once).unwrap();
    let twice = run_in(&dir, "reduce once.json").stdout;
    let a = parse(&once).unwrap();
    let b = parse(&twice).unwrap();
    assert_eq!(a.objects[0].1.diagram().unwrap().sizes(), b.objects[0].1.diagram().unwrap().sizes());
}
