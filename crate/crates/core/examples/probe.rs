// Temporary measurement probe; removed before ship.
use obs_core::channel::*;
use obs_core::evt::*;
use obs_core::frames::ConstructionSpec;

fn ks_against<F: Fn(f64) -> f64>(samples: &mut [f64], cdf: F) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len();
    samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n as f64)
                .abs()
                .max((f - (i + 1) as f64 / n as f64).abs())
        })
        .fold(0.0, f64::max)
}

fn main() {
    let grass = |users: usize, slots: usize, seed: u64| SimulationConfig {
        construction: ConstructionSpec::Grassmannian,
        n_t: 3,
        n_beams: 7,
        users,
        fading_m: 0.5,
        snr_db: 0.0,
        slots,
        master_seed: seed,
    };

    let t0 = std::time::Instant::now();
    let exact = monte_carlo(&grass(64, 10_000, 42)).unwrap();
    println!(
        "exact loop (3,7) K=64 1e4 slots: mean={:.5} stderr={:.5} occ={:.4}  [{:?}]",
        exact.mean_throughput,
        exact.std_error,
        exact.mean_occupancy,
        t0.elapsed()
    );

    let t0 = std::time::Instant::now();
    let analysis = monte_carlo_analysis_model(&grass(64, 20_000, 42)).unwrap();
    println!(
        "analysis model (3,7) K=64 2e4 slots: mean={:.5} stderr={:.5}  [{:?}]",
        analysis.mean_throughput,
        analysis.std_error,
        t0.elapsed()
    );
    for seed in [43u64, 44, 7] {
        let r = monte_carlo_analysis_model(&grass(64, 20_000, seed)).unwrap();
        println!("  seed {seed}: mean={:.5}", r.mean_throughput);
    }

    let orth = |users: usize, slots: usize, seed: u64| SimulationConfig {
        construction: ConstructionSpec::Orthonormal,
        n_t: 4,
        n_beams: 4,
        users,
        fading_m: 0.5,
        snr_db: 5.0,
        slots,
        master_seed: seed,
    };
    let t0 = std::time::Instant::now();
    let base = monte_carlo(&orth(128, 20_000, 42)).unwrap();
    println!(
        "orthonormal 4x4 K=128 5dB 2e4 slots: mean={:.5} stderr={:.5} occ={:.4}  [{:?}]",
        base.mean_throughput,
        base.std_error,
        base.mean_occupancy,
        t0.elapsed()
    );
    for seed in [43u64, 44, 7] {
        let r = monte_carlo(&orth(128, 20_000, seed)).unwrap();
        println!("  seed {seed}: mean={:.5}", r.mean_throughput);
    }

    // occupancy at K=2048
    let occ = monte_carlo(&grass(2048, 300, 42)).unwrap();
    println!("occupancy K=2048 N=7 300 slots: {:.5}", occ.mean_occupancy);

    // K-monotonicity
    let lo = monte_carlo(&grass(16, 3000, 42)).unwrap();
    let hi = monte_carlo(&grass(256, 3000, 42)).unwrap();
    println!(
        "K=16: {:.4}+-{:.4}  K=256: {:.4}+-{:.4}",
        lo.mean_throughput, lo.std_error, hi.mean_throughput, hi.std_error
    );

    // empirical max SINR samples
    let t0 = std::time::Instant::now();
    let model = SinrModel::new(0.5, 7, 1.0, 4.0 / 3.0).unwrap();
    for users in [1usize, 16, 64, 256, 1024] {
        let mut s = empirical_max_sinr_samples(&grass(users, 1, 42), 10_000).unwrap();
        let ks = if users == 1 {
            ks_against(&mut s, |x| model.cdf(x))
        } else {
            let p = gumbel_params(&model, users as u64).unwrap();
            ks_against(&mut s, |x| extreme_cdf(&p, 1, x))
        };
        println!("KS K={users}: {ks:.5}");
    }
    println!("KS timing: {:?}", t0.elapsed());

    // lower bound bracket vs exact MC
    let lower = throughput_lower_numeric(&model, 64).unwrap();
    let upper = throughput_upper_numeric(&model, 64).unwrap();
    println!(
        "lower={lower:.4} upper={upper:.4} exact_mc={:.4}",
        exact.mean_throughput
    );

    // compare nt=4 m=3 anchor
    let m13 = SinrModel::new(3.0, 13, 10f64.powf(0.5), 2.2499).unwrap();
    for users in [16u64, 64, 128] {
        let cf = throughput_closed_form(&m13, users).unwrap();
        let base = monte_carlo(&SimulationConfig {
            construction: ConstructionSpec::Orthonormal,
            n_t: 4,
            n_beams: 4,
            users: users as usize,
            fading_m: 3.0,
            snr_db: 5.0,
            slots: 4000,
            master_seed: 42,
        })
        .unwrap();
        println!(
            "m=3 K={users}: proposed cf={cf:.4} baseline={:.4}",
            base.mean_throughput
        );
    }
}
