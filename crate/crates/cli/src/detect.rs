use std::fs::File;
use std::io::{BufWriter, Write};

use crate::args::{workers, DetectArgs};
use crate::CliResult;

pub fn run(args: &DetectArgs) -> CliResult {
    let graph = args.input.load()?;
    let params = args.tuning.params(workers(args.threads));
    let (membership, report) = splitpass::louvain(&graph, &params)?;

    if let Some(path) = &args.output {
        membership.write_to_path(path)?;
    }
    if let Some(path) = &args.report {
        let mut out =
            BufWriter::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?);
        serde_json::to_writer_pretty(&mut out, &report)?;
        writeln!(out)?;
        out.flush()?;
    }

    let modularity = report
        .modularity
        .map_or_else(|| "undefined".to_string(), |q| format!("{q:.6}"));
    println!(
        "vertices={} edges={} communities={} modularity={} disconnected_fraction={} passes={} runtime_s={:.6} workers={} split={}",
        report.num_vertices,
        report.num_edges,
        report.num_communities,
        modularity,
        report.disconnected_fraction,
        report.passes,
        report.total_runtime_s,
        report.workers,
        params.split,
    );
    Ok(())
}
