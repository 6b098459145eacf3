use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn raag(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_raag")).args(args).output().expect("spawn raag");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Compares porcelain output with `tests/golden/<name>.txt`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str], code: i32) {
    let mut full = vec!["--porcelain"];
    full.extend_from_slice(args);
    let run = raag(&full);
    assert_eq!(run.code, code, "{name}: stderr {}", run.stderr);
    let path: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &run.stdout).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(run.stdout, expected, "{name}");
}

#[test]
fn normal_form_of_commuting_pair() {
    let run = raag(&["nf", "--graph", &data("edge.g"), "b a"]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "a b\n"));
}

#[test]
fn word_problem_commutator() {
    let run = raag(&["wp", "--graph", &data("edge.g"), "a b a^-1 b^-1"]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "trivial\n"));
    let run = raag(&["wp", "--graph", &data("p4.g"), "a c a^-1 c^-1"]);
    assert_eq!((run.code, run.stdout.as_str()), (1, "nontrivial\n"));
}

#[test]
fn identity_prints_as_empty_line() {
    let run = raag(&["nf", "--graph", &data("c4.g"), "--word", "a a^-1"]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "\n"));
}

#[test]
fn decompose_square() {
    let run = raag(&["decompose", "--graph", &data("c4.g")]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "a c\nb d\n");
}

#[test]
fn choice_and_length() {
    let run = raag(&["choice", "--graph", &data("c4.g"), "a c", "a b", "b a"]);
    assert_eq!(run.stdout, "b\n");
    let run = raag(&["len", "--graph", &data("p4.g"), "a b a^-1 c"]);
    assert_eq!(run.stdout, "2\n");
}

#[test]
fn conjugacy_exit_codes() {
    let yes = raag(&["conj", "--graph", &data("c5.g"), "a c", "c a"]);
    assert_eq!(yes.code, 0);
    assert!(yes.stdout.starts_with("conjugate\n"));
    let no = raag(&["conj", "--graph", &data("c5.g"), "a c", "a d"]);
    assert_eq!((no.code, no.stdout.as_str()), (1, "not conjugate\n"));
}

#[test]
fn automorphism_commands() {
    assert_eq!(raag(&["aut", "find", "--graph", &data("asym.g")]).code, 1);
    assert_eq!(raag(&["aut", "witness", "--graph", &data("asym.g")]).code, 1);
    assert_eq!(raag(&["aut", "verify-triangular", "--graph", &data("asym.g")]).code, 0);
    assert_eq!(raag(&["aut", "verify-triangular", "--graph", &data("c4.g")]).code, 1);
    let w = raag(&["aut", "witness", "--graph", &data("c5.g")]);
    assert_eq!(w.code, 0);
    assert!(w.stdout.contains("nonabelian true"), "{}", w.stdout);
}

#[test]
fn membership_commands() {
    let fiber = |w: &str| raag(&["member", "fiber", "--weights", "x=0,y=0,t=1", w]).code;
    assert_eq!(fiber("t x t^-1 y"), 0);
    assert_eq!(fiber("t x"), 1);
    let bounded = |w: &str| {
        raag(&["member", "bounded", "--graph", &data("p4.g"), "--gen", "a b", "--gen", "c", "--distortion", "2", w])
    };
    let yes = bounded("c a b c^-1");
    assert_eq!(yes.code, 0, "{}", yes.stderr);
    assert!(yes.stdout.contains("expression: "));
    assert_eq!(bounded("a").code, 1);
    let standard = |w: &str| raag(&["member", "standard", "--graph", &data("c4.g"), "--subset", "a,b", w]).code;
    assert_eq!(standard("b a b^-1 a^-1 a"), 0);
    assert_eq!(standard("a c c^-1 d"), 1);
}

#[test]
fn membership_resource_limit_exits_3() {
    let run = raag(&[
        "member", "bounded", "--graph", &data("c5.g"), "--gen", "a", "--gen", "c", "--gen", "b d",
        "--distortion", "3", "--max-states", "10", "c a c^-1 a^-1",
    ]);
    assert_eq!(run.code, 3, "{}", run.stdout);
}

#[test]
fn secret_sharing_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let deal = raag(&[
        "share", "deal", "--secret", "7", "--n", "4", "--threshold", "3", "--seed", "11", "--coefficient-bound", "3",
        "--outdir", &out,
    ]);
    assert_eq!(deal.code, 0, "{}", deal.stderr);
    let file = |i: u32| dir.path().join(format!("share{i}.txt")).display().to_string();
    for subset in [[1, 2, 3], [4, 2, 1], [2, 3, 4]] {
        let files: Vec<String> = subset.iter().map(|&i| file(i)).collect();
        let mut args = vec!["share", "reconstruct", "--threshold", "3"];
        args.extend(files.iter().map(String::as_str));
        let run = raag(&args);
        assert_eq!((run.code, run.stdout.as_str()), (0, "7\n"), "{subset:?}");
    }
    let too_few = raag(&["share", "reconstruct", "--threshold", "3", &file(1), &file(2)]);
    assert_eq!(too_few.code, 2);
}

#[test]
fn bit_variant_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    // With t = n = 2 the secret is 2·b1 − b2 + 2, so 3 forces both bits to 1.
    let deal = raag(&["share", "deal", "--bits", "--secret", "3", "--n", "2", "--seed", "2", "--outdir", &out]);
    assert_eq!(deal.code, 0, "{}", deal.stderr);
    let files: Vec<String> = (1..=2).map(|i| dir.path().join(format!("share{i}.txt")).display().to_string()).collect();
    for f in &files {
        assert_eq!(raag(&["share", "value", "--bits", f]).stdout, "1\n");
    }
    let mut args = vec!["share", "reconstruct", "--bits", "--threshold", "2"];
    args.extend(files.iter().map(String::as_str));
    assert_eq!(raag(&args).stdout, "3\n");
}

#[test]
fn share_value_of_handwritten_share() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    fs::write(&path, format!("participant 2\n{}", fs::read_to_string(data("c4.g")).unwrap())).unwrap();
    let p = path.display().to_string();
    assert_eq!(raag(&["share", "value", &p]).stdout, "2\n");
    assert_eq!(raag(&["share", "value", "--bits", &p]).stdout, "0\n");
}

#[test]
fn dictionary_commands() {
    assert_eq!(raag(&["dict", "vc", "--graph", &data("c5.g"), "--k", "2"]).code, 1);
    assert_eq!(raag(&["dict", "vc", "--graph", &data("c5.g"), "--k", "3"]).code, 0);
    assert_eq!(raag(&["dict", "induced", "--graph", &data("c5.g"), "--pattern", &data("p4.g")]).code, 0);
    assert_eq!(raag(&["dict", "induced", "--graph", &data("c5.g"), "--pattern", &data("k3.g")]).code, 1);
    assert_eq!(raag(&["dict", "hom", "--graph", &data("c5.g"), "--target", &data("k3.g")]).code, 0);
    assert_eq!(raag(&["dict", "hom", "--graph", &data("k3.g"), "--target", &data("c4.g")]).code, 1);
    let chrom = raag(&["dict", "chrom", "--graph", &data("c5.g")]);
    assert!(chrom.stdout.starts_with("3\n"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(raag(&["nf", "--graph", &data("edge.g"), "z"]).code, 2);
    assert_eq!(raag(&["nf", "--graph", "/nonexistent/graph", "a"]).code, 2);
    assert_eq!(raag(&["frobnicate"]).code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g");
    fs::write(&bad, "v a\ne a a\n").unwrap();
    let run = raag(&["decompose", "--graph", &bad.display().to_string()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.starts_with("error:"));
}

#[test]
fn porcelain_golden() {
    golden("nf", &["nf", "--graph", &data("c5.g"), "c a b^-1 b e"], 0);
    golden("wp", &["wp", "--graph", &data("p4.g"), "a c"], 1);
    golden("conj", &["conj", "--graph", &data("c5.g"), "a c", "c a"], 0);
    golden("decompose", &["decompose", "--graph", &data("c4.g")], 0);
    golden("aut_find", &["aut", "find", "--graph", &data("p4.g")], 0);
    golden("aut_witness", &["aut", "witness", "--graph", &data("edge.g")], 0);
    golden("aut_triangular", &["aut", "verify-triangular", "--graph", &data("asym.g")], 0);
    golden("laurence", &["aut", "laurence", "--graph", &data("p4.g")], 0);
    golden("member_fiber", &["member", "fiber", "--weights", "x=0,y=0,t=1", "t x t^-1"], 0);
    golden("dict_clique", &["dict", "clique", "--graph", &data("c5.g")], 0);
    golden("dict_chrom", &["dict", "chrom", "--graph", &data("c5.g")], 0);
    golden("dict_hom", &["dict", "hom", "--graph", &data("c5.g"), "--target", &data("k3.g")], 0);
}

#[test]
fn dispatch_matches_binary() {
    let r = raag_cli::dispatch(["raag", "nf", "--graph", &data("edge.g"), "b a"]);
    assert_eq!((r.code, r.stdout.as_str(), r.stderr.as_str()), (0, "a b\n", ""));
    let r = raag_cli::dispatch(["raag", "--help"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("decompose"));
}
