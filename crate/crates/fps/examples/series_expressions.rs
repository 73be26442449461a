//! Parsing series expressions and moving series through JSON and CSV.
//!
//! Run with: cargo run --example series_expressions

use fps::json::DynSeries;
use fps::parse_series_expr;

fn main() {
    // the expression grammar covers rational and imaginary literals, z,
    // + - * ^, parentheses, and a truncation directive @N
    for expr in ["z + z^2 @4", "(1-z)^2 @3", "1/2 + z @2", "(1 + i*z)^3"] {
        let series = parse_series_expr(expr).unwrap();
        println!("{expr:>14}  ->  {series}");
    }

    // series travel as JSON; exact coefficients are "p/q" strings and
    // round-trip bit-identically
    let series = parse_series_expr("3/4 - 2*z + z^3 @4").unwrap();
    let dyn_series = DynSeries::Exact(series);
    let json = dyn_series.to_json();
    println!("\nJSON: {json}");
    let back = DynSeries::from_json(&json).unwrap();
    assert_eq!(back, dyn_series);

    // CSV export, one coefficient per line n,re,im
    println!("\nCSV:\n{}", dyn_series.to_csv());

    // parse errors carry the byte offset
    match parse_series_expr("z + ?") {
        Err(e) => println!("error reporting: {e}"),
        Ok(_) => unreachable!(),
    }
}
