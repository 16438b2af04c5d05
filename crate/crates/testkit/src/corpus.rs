//! The desk-scale benchmark corpus: small real networks plus synthetic graphs
//! up to about a million edges. Every graph is generated from a fixed seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{fixtures, generate, Edges};

pub struct CorpusGraph {
    pub name: &'static str,
    pub num_vertices: usize,
    pub edges: Edges,
}

impl CorpusGraph {
    fn new(name: &'static str, (num_vertices, edges): (usize, Edges)) -> Self {
        CorpusGraph {
            name,
            num_vertices,
            edges,
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ten graphs from 32 vertices to roughly 1M edges.
pub fn desk_corpus() -> Vec<CorpusGraph> {
    vec![
        CorpusGraph::new("karate", fixtures::karate()),
        CorpusGraph::new("southern-women", fixtures::southern_women()),
        CorpusGraph::new("les-miserables", fixtures::les_miserables()),
        CorpusGraph::new(
            "erdos-renyi-2k",
            generate::erdos_renyi(2_000, 8_000, &mut rng(101)),
        ),
        CorpusGraph::new(
            "planted-5k",
            generate::planted_partition(5_000, 25, 5, 1, &mut rng(102)),
        ),
        CorpusGraph::new(
            "weighted-planted-10k",
            generate::weighted_planted_partition(10_000, 50, 6, 2, &mut rng(103)),
        ),
        CorpusGraph::new(
            "road-grid-300",
            generate::road_grid(300, 300, &mut rng(104)),
        ),
        CorpusGraph::new(
            "pref-attach-30k",
            generate::preferential_attachment(30_000, 4, &mut rng(105)),
        ),
        CorpusGraph::new("kmer-150k", generate::kmer_chains(150_000, &mut rng(106))),
        large_planted(),
    ]
}

/// Planted partition with 100k vertices and just over 1M edges.
pub fn large_planted() -> CorpusGraph {
    CorpusGraph::new(
        "planted-100k",
        generate::planted_partition(100_000, 500, 9, 2, &mut rng(107)),
    )
}
