//! Exit codes, format switches and the subgroup mini-language at the CLI
//! boundary.

fn run(args: &[&str]) -> spechtlab::RunOutput {
    let v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    spechtlab::run(&v)
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["jordan", "--p", "3"]).code, 2); // missing args
    // unparseable subgroup spec
    let out = run(&["jordan", "--p", "3", "--n", "6", "--r", "1", "--subgroup", "E(2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("error"));
    // composite modulus
    assert_eq!(run(&["jordan", "--p", "9", "--n", "6", "--r", "1", "--subgroup", "E(2)"]).code, 2);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("spechtlab"));
}

#[test]
fn computed_commands_exit_zero() {
    let out = run(&["brauer", "--p", "3", "--k", "3", "--subgroup", "Q9"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"schema\":\"spechtlab/1\""));
    assert!(out.stdout.ends_with('\n'));
    assert_eq!(out.stdout.lines().count(), 1);
}

#[test]
fn failing_assertion_exits_one() {
    // degree 4 at p=2: the brute-force count matches, so this passes with 0;
    // force a fail is not possible through honest inputs, so instead check
    // the pass path and that status strings are well-formed
    let out = run(&["elem-abelian", "--p", "2", "--n", "4", "--group", "sym", "--brute-force"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"status\":\"pass\""));
}

#[test]
fn alt_with_odd_p_reports_reduction() {
    let out = run(&["elem-abelian", "--p", "3", "--n", "9", "--group", "alt"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("reduces_to"));
}

#[test]
fn tsv_format_renders_tables() {
    let out = run(&["sylow-verify", "--p", "2", "--n", "4", "--group", "sym", "--format", "tsv"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("[forward]"));
    assert!(out.stdout.contains('\t'));
}

#[test]
fn seeds_change_decompose_trajectories_but_not_validity() {
    for seed in ["1", "2", "3"] {
        let out = run(&[
            "decompose",
            "--p",
            "5",
            "--n",
            "10",
            "--r",
            "2",
            "--subgroup",
            "gens:(1,2,3,4,5);(6,7,8,9,10)",
            "--seed",
            seed,
        ]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("\"status\":\"decomposed\""), "seed {}", seed);
    }
}

#[test]
fn expected_murphy_peel_control_finds_no_split() {
    // the degree-6 hook module at p=2 restricted to a full Sylow 2-subgroup:
    // no splitting should ever be found (reported as evidence only)
    let out = run(&["decompose", "--p", "2", "--n", "6", "--r", "2", "--subgroup", "Sylow"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"status\":\"no_split\""));
    // small cyclic control: the module is indecomposable
    let out = run(&["decompose", "--p", "3", "--n", "3", "--r", "1", "--subgroup", "Sylow"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"status\":\"no_split\""));
}

#[test]
fn threads_flag_accepted() {
    let out = run(&["--threads", "2", "brauer", "--p", "3", "--k", "3", "--subgroup", "Q9"]);
    assert_eq!(out.code, 0);
}
