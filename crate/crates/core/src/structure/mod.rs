//! Bridges, blocks, the bridge tree, and exact path/cycle structure.

mod blocks;
mod bridges;
mod paths;

pub use blocks::biconnected_blocks;
pub use bridges::{
    build_bridge_tree, find_bridges, max_bridges_at_vertex, two_edge_connected_components,
    BridgeNode, BridgeTree, NodeKind, TreeEdge,
};
pub use paths::{
    dirac_ore_flags, hamiltonian_path, is_hamiltonian_path, path_cycle_profile, DiracOreFlags,
    PathCycleProfile, HAMILTONIAN_MAX_N, PROFILE_MAX_N,
};
