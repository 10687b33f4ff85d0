//! Shared fixtures for the benchmark targets.

use alphatau::Graph;

pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .expect("static edge list")
}

pub fn k6_minus_matching() -> Graph {
    let matching = [(0, 1), (2, 3), (4, 5)];
    let edges: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|e| !matching.contains(e))
        .collect();
    Graph::from_edges(6, &edges).expect("static edge list")
}
