use std::fs::File;
use std::io::{self, Write};

use serde::Serialize;
use splitpass::{louvain, DetectionReport, Graph};

use crate::args::BenchArgs;
use crate::CliResult;

#[derive(Debug, Default, Serialize)]
struct Row {
    workers: usize,
    total_s: f64,
    local_moving_s: f64,
    splitting_s: f64,
    aggregation_s: f64,
    other_s: f64,
    modularity: Option<f64>,
    disconnected_fraction: f64,
}

impl Row {
    fn accumulate(&mut self, report: &DetectionReport) {
        let t = report.phase_totals;
        self.total_s += report.total_runtime_s;
        self.local_moving_s += t.local_moving_s;
        self.splitting_s += t.splitting_s;
        self.aggregation_s += t.aggregation_s;
        self.other_s += t.other_s;
        self.modularity = report
            .modularity
            .map(|q| q + self.modularity.unwrap_or(0.0));
        self.disconnected_fraction += report.disconnected_fraction;
    }

    fn average(mut self, runs: usize) -> Self {
        let r = runs as f64;
        self.total_s /= r;
        self.local_moving_s /= r;
        self.splitting_s /= r;
        self.aggregation_s /= r;
        self.other_s /= r;
        self.modularity = self.modularity.map(|q| q / r);
        self.disconnected_fraction /= r;
        self
    }
}

pub fn run(args: &BenchArgs) -> CliResult {
    let graph = args.input.load()?;
    let out: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut csv = csv::Writer::from_writer(out);

    // Warm-up run, discarded.
    measure(&graph, args, args.threads[0] as usize, 1)?;
    for &workers in &args.threads {
        let row = measure(&graph, args, workers as usize, args.repeat as usize)?;
        csv.serialize(row)?;
        csv.flush()?;
    }
    Ok(())
}

fn measure(
    graph: &Graph,
    args: &BenchArgs,
    workers: usize,
    runs: usize,
) -> Result<Row, splitpass::Error> {
    let params = args.tuning.params(workers);
    let mut row = Row {
        workers,
        ..Row::default()
    };
    for _ in 0..runs {
        let (_, report) = louvain(graph, &params)?;
        row.accumulate(&report);
    }
    Ok(row.average(runs))
}
