//! Timing harness for the growth-rate claims: merge, heap, and quick sort
//! run in O(N log N) on random input, the specification sort is quadratic,
//! and quick sort degrades to quadratic on sorted input.
//!
//! Records are raw per-repetition wall-clock timings; the reported statistic
//! per (algorithm, variant, n) is the median over repetitions. Runs are
//! strictly sequential on the calling thread so timings do not interfere.

use crate::corpus::bench_list;
use crate::generic::{isort_container, isort_container_acc, BstContainer, HeapContainer, LtreeContainer};
use crate::hsort::{hsort_deforested, hsort_hylo};
use crate::msort::{msort_deforested, msort_hylo};
use crate::ordered::isort;
use crate::qsort::{qsort_deforested, qsort_hylo};
use crate::trees::Key;
use serde::Serialize;
use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Msort,
    Hsort,
    Qsort,
    Isort,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] =
        [Algorithm::Msort, Algorithm::Hsort, Algorithm::Qsort, Algorithm::Isort];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Msort => "msort",
            Algorithm::Hsort => "hsort",
            Algorithm::Qsort => "qsort",
            Algorithm::Isort => "isort",
        }
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Algorithm, String> {
        match s {
            "msort" => Ok(Algorithm::Msort),
            "hsort" => Ok(Algorithm::Hsort),
            "qsort" => Ok(Algorithm::Qsort),
            "isort" => Ok(Algorithm::Isort),
            other => Err(format!("unknown algorithm `{other}` (expected msort|hsort|qsort|isort)")),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the sort is routed through the machinery.
///
/// `Spec` builds the intermediate container right to left and flattens it;
/// `Fold` is the accumulator form of the same build; `Hylo` fuses build and
/// flatten through the virtual tree; `Deforested` is the directly recursive
/// program. For `isort` all variants coincide with the plain insertion sort,
/// which has no intermediate tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Spec,
    Fold,
    Hylo,
    Deforested,
}

impl Variant {
    pub const ALL: [Variant; 4] =
        [Variant::Spec, Variant::Fold, Variant::Hylo, Variant::Deforested];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Spec => "spec",
            Variant::Fold => "fold",
            Variant::Hylo => "hylo",
            Variant::Deforested => "deforested",
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Variant, String> {
        match s {
            "spec" => Ok(Variant::Spec),
            "fold" => Ok(Variant::Fold),
            "hylo" => Ok(Variant::Hylo),
            "deforested" => Ok(Variant::Deforested),
            other => Err(format!("unknown variant `{other}` (expected spec|fold|hylo|deforested)")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The one dispatch point from (algorithm, variant) to a sort of `l`.
pub fn run_sort(algorithm: Algorithm, variant: Variant, l: &[Key]) -> Vec<Key> {
    match (algorithm, variant) {
        (Algorithm::Msort, Variant::Spec) => isort_container::<LtreeContainer>(l),
        (Algorithm::Msort, Variant::Fold) => isort_container_acc::<LtreeContainer>(l),
        (Algorithm::Msort, Variant::Hylo) => msort_hylo(l),
        (Algorithm::Msort, Variant::Deforested) => msort_deforested(l),
        (Algorithm::Hsort, Variant::Spec) => isort_container::<HeapContainer>(l),
        (Algorithm::Hsort, Variant::Fold) => isort_container_acc::<HeapContainer>(l),
        (Algorithm::Hsort, Variant::Hylo) => hsort_hylo(l),
        (Algorithm::Hsort, Variant::Deforested) => hsort_deforested(l),
        (Algorithm::Qsort, Variant::Spec) => isort_container::<BstContainer>(l),
        (Algorithm::Qsort, Variant::Fold) => isort_container_acc::<BstContainer>(l),
        (Algorithm::Qsort, Variant::Hylo) => qsort_hylo(l),
        (Algorithm::Qsort, Variant::Deforested) => qsort_deforested(l),
        (Algorithm::Isort, _) => isort(l),
    }
}

/// What the timed list looks like.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputOrder {
    Random,
    Sorted,
}

impl InputOrder {
    pub fn as_str(self) -> &'static str {
        match self {
            InputOrder::Random => "random",
            InputOrder::Sorted => "sorted",
        }
    }
}

impl FromStr for InputOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<InputOrder, String> {
        match s {
            "random" => Ok(InputOrder::Random),
            "sorted" => Ok(InputOrder::Sorted),
            other => Err(format!("unknown input order `{other}` (expected random|sorted)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub reps: u64,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub variants: Vec<Variant>,
    pub input_order: InputOrder,
}

impl BenchConfig {
    /// The default sweep: the directly recursive form of each tree sort plus
    /// the quadratic reference, on random input.
    pub fn new(sizes: Vec<usize>, reps: u64, seed: u64) -> BenchConfig {
        BenchConfig {
            sizes,
            reps,
            seed,
            algorithms: Algorithm::ALL.to_vec(),
            variants: vec![Variant::Deforested],
            input_order: InputOrder::Random,
        }
    }

    fn validate(&self) -> Result<(), String> {
        if self.sizes.is_empty() {
            return Err("at least one size is required".to_string());
        }
        if self.reps < 3 {
            return Err(format!("reps must be at least 3, got {}", self.reps));
        }
        if self.algorithms.is_empty() {
            return Err("at least one algorithm is required".to_string());
        }
        if self.variants.is_empty() {
            return Err("at least one variant is required".to_string());
        }
        Ok(())
    }
}

/// One timed repetition. `nanos` is absent exactly when `error` explains why
/// the measurement could not run.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BenchRecord {
    pub algorithm: String,
    pub variant: String,
    pub n: usize,
    pub rep: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nanos: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Median per (algorithm, variant, n) with a spread warning when the
/// repetitions disagree by more than 20% of the median.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BenchSummary {
    pub algorithm: String,
    pub variant: String,
    pub n: usize,
    pub median_nanos: u64,
    pub spread_percent: u64,
    pub noisy: bool,
}

/// Best-effort probe that the input and the sort's working set will fit.
fn probe_allocation(n: usize) -> Result<(), String> {
    let mut probe: Vec<Key> = Vec::new();
    probe
        .try_reserve_exact(n.saturating_mul(4))
        .map_err(|e| format!("cannot allocate working set for n={n}: {e}"))?;
    Ok(())
}

fn input_for(config: &BenchConfig, n: usize, rep: u64) -> Vec<Key> {
    match config.input_order {
        InputOrder::Random => bench_list(config.seed, n, rep),
        InputOrder::Sorted => (0..n as Key).collect(),
    }
}

/// Run the sweep. Records come out grouped by algorithm, then variant, then
/// size in the configured order, then repetition, deterministically for a
/// given config. Within one algorithm/variant block the repetitions are
/// MEASURED interleaved across sizes (rep 0 of every size, then rep 1, ...)
/// so that a machine-speed drift during the run lands on all sizes alike
/// instead of skewing their ratios; the records are reordered afterwards.
/// Allocation probes that fail produce error records and the run continues.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, String> {
    config.validate()?;
    let mut records = Vec::new();
    for &algorithm in &config.algorithms {
        for &variant in &config.variants {
            let mut buckets: Vec<Vec<BenchRecord>> = vec![Vec::new(); config.sizes.len()];
            let mut timed = Vec::new();
            for (pos, &n) in config.sizes.iter().enumerate() {
                match probe_allocation(n) {
                    Err(e) => {
                        for rep in 0..config.reps {
                            buckets[pos].push(BenchRecord {
                                algorithm: algorithm.as_str().to_string(),
                                variant: variant.as_str().to_string(),
                                n,
                                rep,
                                nanos: None,
                                error: Some(e.clone()),
                            });
                        }
                    }
                    Ok(()) => {
                        // One untimed pass warms caches and the allocator.
                        let warm = input_for(config, n, 0);
                        black_box(run_sort(algorithm, variant, black_box(&warm)));
                        drop(warm);
                        timed.push((pos, n));
                    }
                }
            }
            for rep in 0..config.reps {
                for &(pos, n) in &timed {
                    let input = input_for(config, n, rep);
                    let start = Instant::now();
                    let out = run_sort(algorithm, variant, black_box(&input));
                    let elapsed = start.elapsed();
                    black_box(&out);
                    buckets[pos].push(BenchRecord {
                        algorithm: algorithm.as_str().to_string(),
                        variant: variant.as_str().to_string(),
                        n,
                        rep,
                        nanos: Some((elapsed.as_nanos() as u64).max(1)),
                        error: None,
                    });
                }
            }
            records.extend(buckets.into_iter().flatten());
        }
    }
    Ok(records)
}

/// Group raw records in their existing order and reduce each group to its
/// median. Groups whose repetitions all failed are skipped.
pub fn summarize(records: &[BenchRecord]) -> Vec<BenchSummary> {
    let mut out: Vec<BenchSummary> = Vec::new();
    let mut i = 0;
    while i < records.len() {
        let j = records[i..]
            .iter()
            .take_while(|r| {
                r.algorithm == records[i].algorithm
                    && r.variant == records[i].variant
                    && r.n == records[i].n
            })
            .count()
            + i;
        let mut nanos: Vec<u64> = records[i..j].iter().filter_map(|r| r.nanos).collect();
        if !nanos.is_empty() {
            nanos.sort_unstable();
            let mid = nanos.len() / 2;
            let median = if nanos.len() % 2 == 1 {
                nanos[mid]
            } else {
                (nanos[mid - 1] + nanos[mid]) / 2
            };
            let spread = nanos[nanos.len() - 1] - nanos[0];
            let spread_percent = spread.saturating_mul(100) / median.max(1);
            out.push(BenchSummary {
                algorithm: records[i].algorithm.clone(),
                variant: records[i].variant.clone(),
                n: records[i].n,
                median_nanos: median,
                spread_percent,
                noisy: spread_percent > 20,
            });
        }
        i = j;
    }
    out
}

/// The machine-readable row format. Failed repetitions carry no duration and
/// are left out; callers report their errors on a side channel.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("algorithm,variant,n,rep,nanos\n");
    for r in records {
        if let Some(nanos) = r.nanos {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.algorithm, r.variant, r.n, r.rep, nanos
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_shape_for_a_single_size() {
        let config = BenchConfig {
            algorithms: vec![Algorithm::Isort],
            ..BenchConfig::new(vec![64], 3, 0)
        };
        let records = run_bench(&config).unwrap();
        assert_eq!(records.len(), 3);
        for (rep, r) in records.iter().enumerate() {
            assert_eq!(r.algorithm, "isort");
            assert_eq!(r.variant, "deforested");
            assert_eq!(r.n, 64);
            assert_eq!(r.rep, rep as u64);
            assert!(r.nanos.unwrap() > 0);
            assert!(r.error.is_none());
        }
    }

    #[test]
    fn metadata_is_deterministic_even_though_timings_jitter() {
        let config = BenchConfig::new(vec![16, 32], 3, 9);
        let a = run_bench(&config).unwrap();
        let b = run_bench(&config).unwrap();
        assert_eq!(a.len(), b.len());
        for (ra, rb) in a.iter().zip(&b) {
            assert_eq!(
                (&ra.algorithm, &ra.variant, ra.n, ra.rep),
                (&rb.algorithm, &rb.variant, rb.n, rb.rep)
            );
        }
    }

    #[test]
    fn preconditions_are_enforced() {
        assert!(run_bench(&BenchConfig::new(vec![], 3, 0)).is_err());
        assert!(run_bench(&BenchConfig::new(vec![8], 2, 0)).is_err());
    }

    #[test]
    fn oversized_inputs_become_error_records_and_the_run_continues() {
        let config = BenchConfig {
            algorithms: vec![Algorithm::Msort],
            ..BenchConfig::new(vec![usize::MAX / 8, 8], 3, 0)
        };
        let records = run_bench(&config).unwrap();
        assert_eq!(records.len(), 6);
        assert!(records[..3].iter().all(|r| r.nanos.is_none() && r.error.is_some()));
        assert!(records[3..].iter().all(|r| r.nanos.is_some() && r.error.is_none()));
        // Errored repetitions contribute no CSV rows and no summary group.
        let csv = to_csv(&records);
        assert_eq!(csv.lines().count(), 4);
        let summary = summarize(&records);
        assert_eq!(summary.len(), 1);
        assert_eq!(summary[0].n, 8);
    }

    #[test]
    fn csv_has_the_exact_contract_columns() {
        let config = BenchConfig {
            algorithms: vec![Algorithm::Qsort],
            variants: vec![Variant::Hylo],
            ..BenchConfig::new(vec![10], 3, 4)
        };
        let records = run_bench(&config).unwrap();
        let csv = to_csv(&records);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("algorithm,variant,n,rep,nanos"));
        let first = lines.next().unwrap();
        let fields: Vec<&str> = first.split(',').collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[0], "qsort");
        assert_eq!(fields[1], "hylo");
        assert_eq!(fields[2], "10");
        assert_eq!(fields[3], "0");
        assert!(fields[4].parse::<u64>().unwrap() > 0);
    }

    #[test]
    fn summaries_take_the_median_and_flag_noise() {
        let mk = |rep: u64, nanos: u64| BenchRecord {
            algorithm: "msort".to_string(),
            variant: "deforested".to_string(),
            n: 100,
            rep,
            nanos: Some(nanos),
            error: None,
        };
        let summary = summarize(&[mk(0, 100), mk(1, 10), mk(2, 40)]);
        assert_eq!(summary.len(), 1);
        assert_eq!(summary[0].median_nanos, 40);
        assert_eq!(summary[0].spread_percent, 225);
        assert!(summary[0].noisy);

        let summary = summarize(&[mk(0, 100), mk(1, 95), mk(2, 105), mk(3, 100)]);
        assert_eq!(summary[0].median_nanos, 100);
        assert!(!summary[0].noisy);
    }

    #[test]
    fn every_dispatch_route_sorts() {
        let l = bench_list(3, 200, 0);
        let want = isort(&l);
        for algorithm in Algorithm::ALL {
            for variant in Variant::ALL {
                assert_eq!(run_sort(algorithm, variant, &l), want, "{algorithm}/{variant}");
            }
        }
    }

    #[test]
    fn sorted_input_order_is_presorted() {
        let config = BenchConfig {
            input_order: InputOrder::Sorted,
            ..BenchConfig::new(vec![8], 3, 0)
        };
        assert_eq!(input_for(&config, 5, 2), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn names_round_trip_through_parsing() {
        for a in Algorithm::ALL {
            assert_eq!(a.as_str().parse::<Algorithm>().unwrap(), a);
        }
        for v in Variant::ALL {
            assert_eq!(v.as_str().parse::<Variant>().unwrap(), v);
        }
        assert!("bogo".parse::<Algorithm>().is_err());
        assert!("magic".parse::<Variant>().is_err());
    }
}
