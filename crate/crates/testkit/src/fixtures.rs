use std::path::PathBuf;

use crate::Edges;

/// Two unit triangles {0,1,2} and {3,4,5} with no edge between them.
pub fn two_triangles() -> (usize, Edges) {
    (
        6,
        vec![
            (0, 1, 1.0),
            (1, 2, 1.0),
            (0, 2, 1.0),
            (3, 4, 1.0),
            (4, 5, 1.0),
            (3, 5, 1.0),
        ],
    )
}

/// Two unit triangles joined by the bridge edge 2-3.
pub fn two_triangles_bridged() -> (usize, Edges) {
    let (n, mut edges) = two_triangles();
    edges.push((2, 3, 1.0));
    (n, edges)
}

/// A community `{1,2,3,5,6,7}` whose only internal bridge was vertex 4, after
/// vertex 4 has moved to the heavily connected community `{0,4,8,9,10}`.
pub struct StrandedCommunity {
    pub num_vertices: usize,
    pub edges: Edges,
    /// Membership before vertex 4 leaves: C1 = {1..=7}, C3 = {0,8,9,10}.
    pub before_move: Vec<u32>,
    /// Membership after the move: C1 = {1,2,3,5,6,7}, C3 = {0,4,8,9,10}.
    pub after_move: Vec<u32>,
    /// The two connected pieces of C1 after the move.
    pub pieces: [Vec<u32>; 2],
}

pub fn stranded_community() -> StrandedCommunity {
    let mut edges = vec![
        // left piece of C1
        (1, 2, 1.0),
        (2, 3, 1.0),
        (1, 3, 1.0),
        // right piece of C1
        (5, 6, 1.0),
        (6, 7, 1.0),
        (5, 7, 1.0),
        // vertex 4 bridges the two pieces
        (3, 4, 1.0),
        (4, 5, 1.0),
    ];
    // C3 is a heavy clique that 4 is strongly tied to.
    let c3 = [0u32, 8, 9, 10];
    for (a, &u) in c3.iter().enumerate() {
        for &v in &c3[a + 1..] {
            edges.push((u, v, 4.0));
        }
    }
    edges.push((4, 8, 5.0));
    edges.push((4, 9, 5.0));
    let before_move = vec![0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0];
    let mut after_move = before_move.clone();
    after_move[4] = 0;
    StrandedCommunity {
        num_vertices: 11,
        edges,
        before_move,
        after_move,
        pieces: [vec![1, 2, 3], vec![5, 6, 7]],
    }
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

/// Parses one of the bundled symmetric MatrixMarket files into an edge list.
pub fn load_bundled(name: &str) -> (usize, Edges) {
    let text = std::fs::read_to_string(data_path(name)).expect("bundled fixture");
    let mut lines = text
        .lines()
        .filter(|l| !l.starts_with('%') && !l.trim().is_empty());
    let size: Vec<usize> = lines
        .next()
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    let edges = lines
        .map(|l| {
            let t: Vec<&str> = l.split_whitespace().collect();
            let u: u32 = t[0].parse().unwrap();
            let v: u32 = t[1].parse().unwrap();
            let w = t.get(2).map_or(1.0, |w| w.parse().unwrap());
            (u - 1, v - 1, w)
        })
        .collect();
    (size[0], edges)
}

pub fn karate() -> (usize, Edges) {
    load_bundled("karate.mtx")
}

pub fn les_miserables() -> (usize, Edges) {
    load_bundled("lesmis.mtx")
}

pub fn southern_women() -> (usize, Edges) {
    load_bundled("davis.mtx")
}
