//! The scripted monitor scenarios and their event logs.

use acl::harness::monitor_suite::{run_monitor_suite, suite_csv};

fn main() -> acl::Result<()> {
    let results = run_monitor_suite(3, false)?;
    print!("{}", suite_csv(&results));
    for r in &results {
        println!("\n# {}", r.name);
        print!("{}", r.log.render());
    }
    Ok(())
}
