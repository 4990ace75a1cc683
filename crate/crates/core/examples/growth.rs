//! Median extinction time of stars and two-step stars against size. Takes
//! lambda as the first argument (default 0.5: at lambda = 1 the medians of
//! the larger stars run into the millions).

use cpcm::experiments::{growth_experiment, GrowthFamily, GrowthSpec};

fn main() -> cpcm::Result<()> {
    let lambda = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.5);
    let stars = GrowthSpec::new(GrowthFamily::Stars, vec![20, 30, 40, 50, 60], lambda, 400, 1);
    print!("{}", growth_experiment(&stars)?.report());
    let two_step = GrowthSpec::new(GrowthFamily::TwoStepStars { centers: 4 }, vec![10, 20, 30], lambda, 400, 1);
    print!("{}", growth_experiment(&two_step)?.report());
    Ok(())
}
