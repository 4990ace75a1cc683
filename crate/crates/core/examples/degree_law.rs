//! Power-law degree laws: probabilities, the metastable density rho and
//! its small-lambda behaviour, and sampling.

use cpcm::degree_model::{rho_asymptotic, DegreeLaw, DegreeSequence};
use cpcm::rng::SeedTree;

fn main() -> cpcm::Result<()> {
    let n = 10_000;
    let law = DegreeLaw::truncated(1.5, n)?;
    println!("truncated law, a = 1.5, n = {n}");
    for j in [1, 2, 10, 100] {
        println!("  p({j}) = {:.6}   P(D >= {j}) = {:.6}", law.pmf(j), law.tail_mass(j));
    }
    println!("  mean degree {:.3}", law.mean().unwrap());

    println!("rho against its small-lambda comparison:");
    let infinite = DegreeLaw::infinite(1.5)?;
    for lambda in [0.5, 0.1, 0.01, 0.001] {
        let rho = infinite.rho(lambda)?;
        println!(
            "  lambda {lambda:<6} rho {rho:.6}   rho / lambda^(a-1) {:.4}",
            rho / rho_asymptotic(1.5, lambda)?
        );
    }

    let mut rng = SeedTree::new(7).stream("degrees", 0);
    let seq = DegreeSequence::sample(&law.sampler(), n as usize, &mut rng);
    let ones = seq.degrees().iter().filter(|&&d| d == 1).count();
    println!(
        "sample of {n}: total degree {}, {ones} of degree 1 (expected {:.0}), parity adjusted: {}",
        seq.total(),
        law.pmf(1) * n as f64,
        seq.parity_adjusted()
    );
    Ok(())
}
