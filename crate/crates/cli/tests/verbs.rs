use std::time::Duration;

use lbp_cli::format::{parse_csv_rows, parse_json_rows, parse_json_terms};
use lbp_cli::{run, run_with, RunOutcome, EXIT_COMPUTE, EXIT_INVALID, EXIT_NETWORK};
use lbp_core::families::{lbp_array, FamilyParams};
use lbp_core::{rat, Rat};
use lbp_oeis::{Matcher, OeisError, Transport};

fn lbp(args: &[&str]) -> RunOutcome {
    run(std::iter::once("lbp").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = lbp(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

struct Unreachable;

impl Transport for Unreachable {
    fn search(&self, _query: &str) -> lbp_oeis::Result<String> {
        Err(OeisError::Network("connection refused".into()))
    }
}

fn no_network(_: Duration) -> Matcher {
    Matcher::new(None, Box::new(Unreachable))
}

fn oeis(args: &[&str]) -> RunOutcome {
    run_with(std::iter::once("lbp").chain(args.iter().copied()), &no_network)
}

#[test]
fn inverse_triangle_formats_agree() {
    let base = ["inverse", "--alpha", "1", "--beta", "1", "--rows", "6"];
    let expected = lbp_array(&FamilyParams::ints(1, 1), 6).unwrap().inv().unwrap().triangle().unwrap();
    let csv = ok(&[&base[..], &["--format", "csv"]].concat());
    assert_eq!(parse_csv_rows(&csv).unwrap(), expected.rows());
    let json = ok(&[&base[..], &["--format", "json"]].concat());
    assert_eq!(parse_json_rows(&json).unwrap(), expected.rows());
    assert_eq!(ok(&["triangle", "--alpha", "1", "--beta", "1", "--inverse"]), ok(&base));
}

#[test]
fn orthogonal_inverse_through_raw_riordan() {
    let out = ok(&["riordan", "--g", "1/(1+2*x)", "--f", "x/(1+3*x+2*x^2)", "--inverse", "--format", "csv"]);
    let rows = parse_csv_rows(&out).unwrap();
    assert_eq!(rows[3], ints(&[22, 23, 8, 1]));
    assert_eq!(rows[4], ints(&[90, 107, 49, 11, 1]));
    assert_eq!(rows[5], ints(&[394, 509, 276, 84, 14, 1]));
}

#[test]
fn riordan_sequences_and_production_matrix() {
    let schroeder = ["riordan", "--g", "1/(1+2*x)", "--f", "x/(1+2*x)", "--inverse"];
    // The inverse of (1/(1+2x), x/(1+2x)) is the binomial-like array (1/(1-2x), x/(1-2x)).
    assert_eq!(ok(&[&schroeder[..], &["--show", "a", "--rows", "4"]].concat()), "1,2,0,0\n");
    assert_eq!(ok(&[&schroeder[..], &["--show", "z", "--rows", "4"]].concat()), "2,0,0,0\n");
    let p = ok(&[&schroeder[..], &["--show", "production", "--rows", "3", "--format", "csv"]].concat());
    assert_eq!(parse_csv_rows(&p).unwrap(), vec![ints(&[2, 1, 0]), ints(&[0, 2, 1]), ints(&[0, 0, 2])]);
}

#[test]
fn derivative_detrep_rowsums() {
    let d = parse_csv_rows(&ok(&["derivative", "--alpha", "1", "--beta", "1", "--rows", "3", "--format", "csv"])).unwrap();
    assert_eq!(d[1], ints(&[-4, 2]));
    let det = parse_csv_rows(&ok(&["detrep", "--alpha", "1", "--beta", "1", "--rows", "4", "--format", "csv"])).unwrap();
    assert_eq!(det[2], ints(&[2, -4, 1]));
    assert_eq!(det[3], ints(&[-2, 8, -6, 1]));
    let sums = ok(&["rowsums", "--alpha", "1", "--beta", "1", "--rows", "5", "--inverse", "--format", "json"]);
    assert_eq!(parse_json_terms(&sums).unwrap(), ints(&[1, 3, 11, 45, 197]));
}

#[test]
fn continued_fractions() {
    let schroeder = "1,2,6,22,90,394,1806,8558\n";
    assert_eq!(ok(&["cf", "--alpha", "1", "--beta", "1", "-n", "8"]), schroeder);
    assert_eq!(ok(&["cf", "--type", "t", "--alpha", "1", "--beta", "1", "-n", "8"]), schroeder);
    assert_eq!(ok(&["cf", "--b", "2,3,3,3", "--lam", "2,2,2", "-n", "8"]), schroeder);
    assert_eq!(ok(&["cf", "--type", "t", "--c", "1,1,1,1", "--d", "1,1,1,1", "-n", "4"]), "1,2,6,22\n");
    assert_eq!(ok(&["jfrac-from-moments", "--terms", "1,2,6,22,90,394"]), "b: 2,3,3\nlam: 2,2\n");
    assert_eq!(lbp(&["cf", "--b", "2,3", "--lam", "2", "-n", "8"]).code, EXIT_INVALID);
    assert_eq!(lbp(&["cf", "--b", "2,3", "--lam", "2,2"]).code, EXIT_INVALID);
    assert_eq!(lbp(&["jfrac-from-moments", "--terms", "2,1,1"]).code, EXIT_INVALID);
}

#[test]
fn hankel_from_family_parameters() {
    let out = ok(&["hankel", "--alpha", "1", "--beta", "2", "-n", "4"]);
    // β(α+β) = 6, so h_k = 6^{k(k+1)/2}.
    assert_eq!(out, "1,6,216,46656\n");
    assert_eq!(lbp(&["hankel", "--terms", "1,2,6", "--alpha", "1"]).code, EXIT_INVALID);
    assert_eq!(lbp(&["hankel", "--terms", "1,2,6", "-n", "3"]).code, EXIT_INVALID);
}

#[test]
fn degenerate_generalized_orthogonal_is_invalid() {
    let out = lbp(&["triangle", "--family", "gen-orth", "--alpha", "1", "--beta", "1", "--gamma", "2"]);
    assert_eq!(out.code, EXIT_INVALID, "{}", out.stderr);
}

#[test]
fn oeis_offline_and_network_failure() {
    let found = oeis(&["oeis-match", "--terms", "1,2,6,22,90,394"]);
    assert_eq!(found.code, 0, "{}", found.stderr);
    assert!(found.stdout.starts_with("A006318"), "{}", found.stdout);
    assert_eq!(oeis(&["oeis-match", "--terms", "9,9,9,9", "--format", "csv"]).stdout, "");
    assert_eq!(oeis(&["oeis-match", "--terms", "1,2,6"]).code, EXIT_INVALID);
    let live = oeis(&["oeis-match", "--terms", "1,2,6,22", "--live", "--timeout", "1"]);
    assert_eq!(live.code, EXIT_NETWORK);
    assert!(live.stderr.contains("connection refused"));
    assert_eq!(oeis(&["oeis-match", "--terms", "1,2,6,22", "--format", "bfile"]).code, EXIT_INVALID);
}

#[test]
fn computation_errors_use_code_two() {
    assert_eq!(lbp(&["jfrac-from-moments", "--terms", "1,0,0,0"]).code, EXIT_COMPUTE);
}
