//! Produces the JSON analysis report for a corpus entry and reads it back.

use waist::corpus::corpus_entry;
use waist::report::{analyze, AnalysisReport, Target};
use waist::DEFAULT_CAP;

fn main() -> waist::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ef4".into());
    let target = Target::from_corpus(&corpus_entry(&name)?);
    let report = analyze(&target, DEFAULT_CAP, true);
    let json = report.to_json();
    println!("{json}");
    assert_eq!(AnalysisReport::from_json(&json).expect("valid json"), report);
    Ok(())
}
