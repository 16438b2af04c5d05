use splitpass::quality::{community_sizes, disconnected_communities, disconnected_fraction};
use splitpass::{split_disconnected, Membership};

use crate::args::{workers, CheckArgs};
use crate::CliResult;

/// Disconnected communities listed by id before the output is truncated.
const LIST_LIMIT: usize = 20;

pub fn run(args: &CheckArgs) -> CliResult {
    let graph = args.input.load()?;
    let membership = Membership::read_from_path(&args.membership, Some(graph.num_vertices()))?;
    let pool = splitpass::parallel::worker_pool(workers(args.threads))?;

    pool.install(|| -> CliResult {
        let sizes = community_sizes(&graph, &membership);
        let communities = sizes.iter().filter(|&&s| s > 0).count();
        let flags = disconnected_communities(&graph, &membership);
        let fraction = disconnected_fraction(&flags, communities)?;
        println!(
            "communities={communities} disconnected={} disconnected_fraction={fraction}",
            flags.count()
        );
        let listed: Vec<String> = flags
            .disconnected()
            .take(LIST_LIMIT)
            .map(|c| c.to_string())
            .collect();
        if !listed.is_empty() {
            let more = if flags.count() > LIST_LIMIT {
                " ..."
            } else {
                ""
            };
            println!("disconnected communities: {}{more}", listed.join(" "));
        }

        if let Some(technique) = args.split {
            let split = split_disconnected(&graph, &membership, technique);
            let after = split.num_communities();
            println!("split={technique} communities_after_split={after}");
            if let Some(path) = &args.output {
                split.write_to_path(path)?;
            }
        }
        Ok(())
    })
}
