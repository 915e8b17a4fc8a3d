use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use srpk::io::{parse_matrix, parse_vector};
use srpk::{star_gauss_jordan, MinPlus, Real};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn srpk(args: &[&str], seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_srpk"));
    cmd.args(args).env_remove("SRPK_SEED");
    if let Some(seed) = seed {
        cmd.env("SRPK_SEED", seed);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn every_algorithm_gives_the_same_shortest_paths() {
    let g = fixture("graph3.txt");
    let want = fs::read_to_string(fixture("graph3_closure_min_plus.txt")).unwrap();
    for alg in ["escalator", "gauss-jordan", "block", "ldm", "nilpotent", "jacobi", "gauss-seidel"] {
        let out =
            srpk(&["closure", "--semiring", "min-plus", "--algorithm", alg, "--graph", g.to_str().unwrap()], None);
        assert_eq!(stdout(&out), want, "{alg}");
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.txt");
    let g = fixture("graph3.txt");
    let out = srpk(
        &["closure", "--semiring", "min-plus", "--graph", g.to_str().unwrap(), "--output", target.to_str().unwrap()],
        None,
    );
    assert_eq!(stdout(&out), "");
    assert_eq!(
        fs::read_to_string(target).unwrap(),
        fs::read_to_string(fixture("graph3_closure_min_plus.txt")).unwrap()
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(dir.path(), "two.txt", "1 1\n2\n");
    let one = fixture("b_one.txt");
    let one = one.to_str().unwrap();

    let out = srpk(&["closure", "--semiring", "real", "--matrix", &two], None);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("srpk: no closure") && err.lines().count() == 1, "{err}");

    let out = srpk(&["solve", "--semiring", "real", "--algorithm", "jacobi", "--matrix", &two, "--rhs", one], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("did not converge"));

    let out = srpk(
        &[
            "solve",
            "--semiring",
            "real",
            "--algorithm",
            "jacobi",
            "--max-iter",
            "3",
            "--matrix",
            &fixture("a_half.txt").to_string_lossy(),
            "--rhs",
            one,
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));

    let bad = write(dir.path(), "bad.txt", "2 2\n1 x\n0 0\n");
    let out = srpk(&["closure", "--semiring", "real", "--matrix", &bad], None);
    assert_eq!(out.status.code(), Some(2));
    let out = srpk(&["closure", "--semiring", "real", "--matrix", "/nonexistent/file"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = srpk(&["closure", "--semiring", "real"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = srpk(&["closure", "--semiring", "min-plus", "--matrix", &two, "--algorithm", "nilpotent"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn runs_are_deterministic_and_reparse() {
    let zeros = [
        ("real", "0"),
        ("max-plus", "-inf"),
        ("min-plus-complete", "inf"),
        ("max-times", "0"),
        ("max-min:-1,1", "-1"),
        ("boolean", "0"),
        ("interval:max-plus", "-inf"),
    ];
    for (semiring, zero) in zeros {
        let args = ["closure", "--semiring", semiring, "--random", "6", "--algorithm", "block"];
        let a = stdout(&srpk(&args, Some("42")));
        let b = stdout(&srpk(&args, Some("42")));
        assert_eq!(a, b, "{semiring}");
        let c = stdout(&srpk(&args, Some("43")));
        // dense random Boolean closures are almost always all ones
        if semiring != "boolean" {
            assert_ne!(a, c, "{semiring}");
        }

        let dir = tempfile::tempdir().unwrap();
        // X = O X + B returns B unchanged
        let b = write(dir.path(), "b.txt", &a);
        let row = [zero; 6].join(" ");
        let o = write(dir.path(), "o.txt", &format!("6 6\n{}", format!("{row}\n").repeat(6)));
        let again = stdout(&srpk(&["solve", "--semiring", semiring, "--matrix", &o, "--rhs", &b], None));
        assert_eq!(again, a, "{semiring}");
    }
    let bad_seed = srpk(&["closure", "--semiring", "boolean", "--random", "2"], Some("x"));
    assert_eq!(bad_seed.status.code(), Some(2));
}

#[test]
fn real_output_round_trips_exactly() {
    let out = stdout(&srpk(&["closure", "--semiring", "real", "--random", "5"], Some("9")));
    let s = Real::nonneg();
    let m = parse_matrix(&s, &out).unwrap();
    assert_eq!(srpk::io::format_matrix(&s, &m), out);
}

#[test]
fn solve_with_matrix_and_row_rhs() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("graph3.txt");
    let rhs = write(dir.path(), "b.txt", "1 3\ninf inf 0\n");
    let out = stdout(&srpk(&["solve", "--semiring", "min-plus", "--graph", g.to_str().unwrap(), "--rhs", &rhs], None));
    assert_eq!(out, "3 1\n3\n2\n0\n");
    let x0 = write(dir.path(), "x0.txt", "3 1\n0\n0\n0\n");
    let out = srpk(
        &[
            "solve",
            "--semiring",
            "min-plus",
            "--graph",
            g.to_str().unwrap(),
            "--rhs",
            &rhs,
            "--algorithm",
            "gauss-seidel",
            "--x0",
            &x0,
        ],
        None,
    );
    // acyclic graph: the solution is unique, so the start does not matter
    assert_eq!(stdout(&out), "3 1\n3\n2\n0\n");
}

#[test]
fn path_command_lists_nodes() {
    let g = fixture("graph3.txt");
    let out = stdout(&srpk(
        &["path", "--semiring", "min-plus", "--graph", g.to_str().unwrap(), "--from", "1", "--to", "3"],
        None,
    ));
    assert_eq!(out, "3 3\n0 1 3\ninf 0 2\ninf inf 0\n# from to value nodes\n1 3 3 1 2 3\n");
    let out = stdout(&srpk(
        &["path", "--semiring", "min-plus", "--graph", g.to_str().unwrap(), "--from", "3", "--to", "1"],
        None,
    ));
    assert!(out.ends_with("3 1 inf none\n"), "{out}");
    let out = srpk(&["path", "--semiring", "real", "--graph", g.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_variants() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "3 3\n5 1 inf\n1 5 1\ninf 1 5\n");
    let run = |extra: &[&str]| {
        let mut args = vec!["decompose", "--semiring", "min-plus", "--matrix", a.as_str()];
        args.extend_from_slice(extra);
        stdout(&srpk(&args, None))
    };
    let packed = run(&[]);
    assert_eq!(packed, "3 3\n5 1 inf\n1 2 1\ninf 1 2\n");
    assert_eq!(run(&["--version", "v2"]), packed);
    assert_eq!(run(&["--symmetric"]), packed);
    assert_eq!(run(&["--symmetric", "--version", "v2"]), packed);
    assert_eq!(run(&["--band", "1,1"]), packed);
    assert_eq!(run(&["--cholesky"]), "3 3\ninf inf inf\n1 inf inf\ninf 1 inf\n");
    let expanded = run(&["--expand"]);
    assert!(expanded.starts_with("# L\n3 3\ninf inf inf\n1 inf inf\n"), "{expanded}");
    let out = srpk(&["decompose", "--semiring", "min-plus", "--matrix", &a, "--band", "0,1"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn toeplitz_commands() {
    let dir = tempfile::tempdir().unwrap();
    let r = write(dir.path(), "r.txt", "2 1\n1\n2\n");
    let b = write(dir.path(), "b.txt", "2 1\n0\ninf\n");
    for variant in ["general", "inverse"] {
        let y = stdout(&srpk(
            &["yule-walker", "--semiring", "min-plus", "--r0", "3", "--r", &r, "--variant", variant],
            None,
        ));
        assert_eq!(y, "2 1\n1\n2\n");
        let x = stdout(&srpk(
            &["toeplitz-solve", "--semiring", "min-plus", "--r0", "3", "--r", &r, "--rhs", &b, "--variant", variant],
            None,
        ));
        assert_eq!(x, "2 1\n0\n1\n");
    }
    let out = srpk(&["yule-walker", "--semiring", "max-min", "--r0", "0.5", "--r", &r], None);
    assert_eq!(out.status.code(), Some(2), "coefficients outside [0, 1]");
    let rmm = write(dir.path(), "rmm.txt", "2 1\n0.5\n0.2\n");
    let out = srpk(&["yule-walker", "--semiring", "max-min", "--r0", "0.3", "--r", &rmm, "--variant", "inverse"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("no inverse"));
}

#[test]
fn random_solve_matches_library() {
    let out = stdout(&srpk(&["solve", "--semiring", "min-plus", "--random", "6"], Some("3")));
    let x = parse_vector(&MinPlus::new(), &out).unwrap();
    assert_eq!(x.len(), 6);
    let closure = stdout(&srpk(&["closure", "--semiring", "min-plus", "--random", "6"], Some("3")));
    let c = parse_matrix(&MinPlus::new(), &closure).unwrap();
    assert_eq!(star_gauss_jordan(&MinPlus::new(), &c).unwrap(), c, "closures are idempotent");
}
