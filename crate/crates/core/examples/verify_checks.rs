//! Runs every named check and prints the summary table.
//!
//! Pass `full` to include sizes up to 13 and the Ree closure.

use qlab::verify::{render_table, verify_all, Profile, Verdict};

fn main() -> qlab::Result<()> {
    let profile = match std::env::args().nth(1).as_deref() {
        Some("full") => Profile::Full,
        _ => Profile::Quick,
    };
    let summary = verify_all(profile)?;
    print!("{}", render_table(&summary.reports));
    println!(
        "{} passed, {} failed, {} skipped",
        summary.count(Verdict::Pass),
        summary.count(Verdict::Fail),
        summary.count(Verdict::Skipped)
    );
    Ok(())
}
