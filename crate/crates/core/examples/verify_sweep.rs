//! Compares the fast products with the smoothing oracle over a box of classes.
//!
//! ```bash
//! cargo run --release --example verify_sweep -- 3 10
//! ```

use std::process::ExitCode;

use torus_skein::oracle::OracleConfig;
use torus_skein::verify::{self, SweepBounds};

fn main() -> ExitCode {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let max_coord = args.next().and_then(Result::ok).unwrap_or(2);
    let max_det = args.next().and_then(Result::ok).unwrap_or(6);
    let bounds = SweepBounds {
        max_coord,
        max_det,
        ..SweepBounds::default()
    };
    match verify::run(&bounds, &OracleConfig::default()) {
        Ok(report) => {
            println!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
