//! The minuscule table for every fundamental weight up to rank 8.

fn main() -> lie_meet::Result<()> {
    let rows = lie_meet::cli::report(8)?;
    print!("{}", lie_meet::cli::render_report(&rows));
    Ok(())
}
