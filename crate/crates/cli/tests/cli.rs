use std::process::Command;

fn nakit(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nakit"))
        .args(args)
        .output()
        .expect("binary runs");
    let mut text = String::from_utf8(out.stdout).unwrap();
    text.push_str(&String::from_utf8(out.stderr).unwrap());
    (out.status.code().unwrap(), text)
}

fn ok(args: &[&str]) -> String {
    let (code, text) = nakit(args);
    assert_eq!(code, 0, "{args:?}: {text}");
    text
}

/// No decimal points, exponents or `inf`/`NaN` anywhere in a number.
fn assert_exact(text: &str) {
    for (i, ch) in text.char_indices() {
        if ch == '.' {
            let digit = |c: Option<char>| c.is_some_and(|c| c.is_ascii_digit());
            let before = digit(text[..i].chars().next_back());
            let after = digit(text[i + 1..].chars().next());
            assert!(!(before && after), "decimal in: {text}");
        }
    }
    assert!(!text.contains("NaN") && !text.contains("inf"), "{text}");
}

#[test]
fn classify_type_two() {
    let text = ok(&["vector", "classify", "1,0,0,0,1,1"]);
    assert_eq!(text.trim(), "dim F_v = 2; contains v_Lad: yes; type II");
}

#[test]
fn anti_associative_corpus_entry_passes() {
    let text = ok(&["check", "--identity", "anti-associative", "corpus:aa3-2"]);
    assert!(text.contains("anti_associative: yes"));
}

#[test]
fn inverse_series() {
    let text = ok(&["series", "inverse", "--", "-1,1/2,-1/3,5/24"]);
    assert!(text.trim().starts_with("-1, 1/2, -1/6"), "{text}");
}

#[test]
fn false_property_exits_one_with_witness() {
    let (code, text) = nakit(&["check", "--identity", "associative", "corpus:octonions"]);
    assert_eq!(code, 1);
    assert!(text.contains("witness"), "{text}");
    let (code, _) = nakit(&[
        "series",
        "koszul",
        "--convention",
        "signed",
        "--",
        "-1,1/2,-1/3",
        "-1,1/2,-1/2",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        &["vector", "classify", "0,0,0,0,0,0"][..],
        &["vector", "classify", "1,2"],
        &["check", "--identity", "no-such-identity", "corpus:aa3-1"],
        &["check", "--identity", "associative", "corpus:no-such-entry"],
        &[
            "check",
            "--identity",
            "associative",
            "/nonexistent/file.alg",
        ],
        &["bogus"],
    ] {
        let (code, text) = nakit(args);
        assert_eq!(code, 2, "{args:?}: {text}");
    }
}

#[test]
fn parameters_and_files() {
    let text = ok(&[
        "check",
        "--identity",
        "anti-associative",
        "--param",
        "a=3",
        "--param",
        "b=-1/2",
        "corpus:aa3-3",
    ]);
    assert!(text.contains("yes"));
    let dir = std::env::temp_dir().join(format!("nakit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.alg");
    std::fs::write(&path, "dim 3\nmul e1 e4 -> e1\n").unwrap();
    let (code, _) = nakit(&["check", "--identity", "associative", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    std::fs::write(&path, "dim 1\nmul e1 e1 -> 1 e1\n").unwrap();
    ok(&[
        "check",
        "--identity",
        "associative",
        "--identity",
        "commutative",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_deterministic_and_exact() {
    let runs: [&[&str]; 8] = [
        &["survey"],
        &["corpus", "check"],
        &["--format", "tsv", "vector", "classify", "2,-1,-1,-1,1,0"],
        &["polarize", "--check", "anti", "corpus:aa3-2"],
        &["cocycles", "--flavor", "anti", "--basis", "corpus:aa3-1"],
        &["deform", "verify", "--flavor", "v:g5", "corpus:g5-pair"],
        &[
            "free",
            "--preset",
            "jacobi-jordan",
            "--gens",
            "2",
            "--max-deg",
            "5",
            "--basis",
        ],
        &[
            "series",
            "koszul",
            "--convention",
            "unsigned",
            "--dims",
            "--order",
            "5",
            "1,2,6,0,0",
            "1,2,6,0,0",
        ],
    ];
    for args in runs {
        let (c1, a) = nakit(args);
        let (c2, b) = nakit(args);
        assert_eq!((c1, &a), (c2, &b), "{args:?}");
        assert!(c1 == 0 || c1 == 1, "{args:?}: {a}");
        assert_exact(&a);
    }
}

#[test]
fn survey_flags_only_the_leibniz_row() {
    let text = ok(&["survey"]);
    let verdicts: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(verdicts.len(), 8, "{text}");
    for line in verdicts {
        let expected = if line.starts_with("Leibniz:") {
            "disagree"
        } else {
            "agree"
        };
        assert!(line.ends_with(&format!(": {expected}")), "{line}");
    }
}

#[test]
fn deformation_commands() {
    let text = ok(&[
        "deform",
        "poisson",
        "--kind",
        "anti-poisson",
        "corpus:anti-center",
    ]);
    assert!(text.contains("Jacobi-Jordan: yes"));
    let text = ok(&[
        "free",
        "--preset",
        "anti-associative",
        "--gens",
        "1",
        "--max-deg",
        "4",
        "--multilinear",
        "4",
    ]);
    assert!(text.contains("= 0"));
}

// Dimensions are read into the series of the requested convention.
#[test]
fn koszul_from_dims_in_both_conventions() {
    for conv in ["signed", "unsigned"] {
        let args = [
            "series",
            "koszul",
            "--convention",
            conv,
            "--dims",
            "--order",
            "5",
            "1,2,6,0,0",
            "1,2,6,0,0",
        ];
        let (code, text) = nakit(&args);
        assert_eq!(code, 1, "{conv}: {text}");
        assert!(text.starts_with("fails at order 5"), "{conv}: {text}");
    }
}
