//! Separate binary: it mutates the process environment.

#[test]
fn budget_comes_from_the_environment() {
    std::env::set_var("ARCLAB_BUDGET", "not-a-number");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = arclab::cli::run(["arclab", "gen", "--surface", "crown", "--n", "2"], &mut out, &mut err);
    assert_eq!(code, 2);
    std::env::set_var("ARCLAB_BUDGET", "5");
    let code = arclab::cli::run(["arclab", "gen", "--surface", "crown", "--n", "2"], &mut out, &mut err);
    assert_eq!(code, 0);
}
