//! Distance and port labels for trees, composed into per-vertex routing
//! state over a tree cover.
//!
//! Each tree is decomposed into heavy paths (the heavy child owns the
//! largest subtree, ties to the smaller vertex id). A vertex's distance
//! label lists, per heavy path on its root path, the path id, the depth at
//! which the path is entered, and the depth at which it is left; two labels
//! meet on their last common path, which pins the lowest common ancestor and
//! hence exact distances. The port label carries the host-graph port to the
//! parent, to the heavy child, and per light edge on the root path the
//! `(parent depth, parent port)` pair, which is enough to emit the next hop
//! toward any target using two labels only.
//!
//! # Binary layout
//!
//! Integers are unsigned LEB128 varints unless stated otherwise. A tree
//! label is `depth, record count, records (path id, entry depth, exit
//! depth), parent port (0 = none), heavy-child port (0 = none), light count,
//! light edges (depth, port)`. A routing label is `vertex (u32 LE), entry
//! count, entries (graph id (u32 LE), tree label)`. The label store file is
//! the magic `HUDGLBL1`, the vertex count (u32 LE), then one
//! length-prefixed (u32 LE) routing label blob per vertex.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::proton::{RootedTree, TreeCover};

/// Magic bytes of the label store format.
pub const LABEL_STORE_MAGIC: &[u8; 8] = b"HUDGLBL1";

/// One heavy path traversed by a vertex's root path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathRecord {
    /// Heavy path id, local to the tree.
    pub path_id: u32,
    /// Depth of the path's head on the root path.
    pub entry_depth: u32,
    /// Depth at which the root path leaves this heavy path; equals the
    /// vertex depth on its own (last) path.
    pub exit_depth: u32,
}

/// Distance and port label of a vertex within one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLabel {
    pub depth: u32,
    /// Heavy paths on the root-to-vertex path; empty for singleton trees.
    pub records: Vec<PathRecord>,
    /// Host-graph port toward the parent, if any.
    pub parent_port: Option<u32>,
    /// Host-graph port toward the heavy child, if any.
    pub heavy_child_port: Option<u32>,
    /// Per light edge on the root path: depth of the parent endpoint and the
    /// parent's port toward the child, sorted by depth.
    pub light_edges: Vec<(u32, u32)>,
}

/// All routing state a vertex stores: one identifiable tree label per tree
/// it belongs to, sorted strictly by graph id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutingLabel {
    pub vertex: u32,
    pub entries: Vec<(u32, TreeLabel)>,
}

impl RoutingLabel {
    /// The label for a given tree, if the vertex belongs to it.
    pub fn entry(&self, graph_id: u32) -> Option<&TreeLabel> {
        self.entries
            .binary_search_by_key(&graph_id, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// Number of trees the vertex belongs to.
    pub fn membership_count(&self) -> usize {
        self.entries.len()
    }
}

/// Builds the labels of every tree member, parallel to `tree.members`.
/// All ports refer to the host graph, so a label emitted for a subtree works
/// unchanged in the full graph.
pub fn build_tree_labels(tree: &RootedTree, graph: &Graph) -> Result<Vec<TreeLabel>> {
    let n_t = tree.len();
    let mut labels = Vec::with_capacity(n_t);
    if n_t == 0 {
        return Ok(labels);
    }
    for &v in &tree.members {
        if v as usize >= graph.vertex_count() {
            return Err(Error::TreeGraphMismatch(format!(
                "tree vertex {v} is not in the host graph"
            )));
        }
    }

    // children and subtree sizes; members are topologically ordered
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); n_t];
    let mut parent_idx: Vec<u32> = vec![UNREACHABLE; n_t];
    #[allow(clippy::needless_range_loop)]
    for i in 1..n_t {
        let p = tree
            .index_of(tree.parent[i])
            .ok_or_else(|| Error::TreeGraphMismatch("parent outside tree".into()))?;
        parent_idx[i] = p;
        children[p as usize].push(i as u32);
    }
    let mut size = vec![1u32; n_t];
    for i in (1..n_t).rev() {
        size[parent_idx[i] as usize] += size[i];
    }
    let mut heavy: Vec<Option<u32>> = vec![None; n_t];
    for i in 0..n_t {
        let mut best: Option<(u32, u32, u32)> = None; // (size, vertex, child idx)
        for &c in &children[i] {
            let key = (size[c as usize], tree.members[c as usize]);
            let better = match best {
                None => true,
                Some((bs, bv, _)) => key.0 > bs || (key.0 == bs && key.1 < bv),
            };
            if better {
                best = Some((key.0, key.1, c));
            }
        }
        heavy[i] = best.map(|(_, _, c)| c);
    }

    // heavy path ids in member order: a new path starts at the root and at
    // every light child
    let mut path_id = vec![0u32; n_t];
    let mut next_path = 0u32;
    for i in 0..n_t {
        let is_head = i == 0 || heavy[parent_idx[i] as usize] != Some(i as u32);
        if is_head {
            path_id[i] = next_path;
            next_path += 1;
        } else {
            path_id[i] = path_id[parent_idx[i] as usize];
        }
    }

    let port = |from: u32, to: u32| -> Result<u32> {
        graph.port_of(from, to).ok_or_else(|| {
            Error::TreeGraphMismatch(format!(
                "tree {} edge ({from}, {to}) is not a host edge",
                tree.graph_id
            ))
        })
    };

    for i in 0..n_t {
        let v = tree.members[i];
        let depth = tree.depth[i];
        let (records, light_edges, parent_port) = if i == 0 {
            let records = if n_t == 1 {
                Vec::new()
            } else {
                vec![PathRecord {
                    path_id: path_id[0],
                    entry_depth: 0,
                    exit_depth: 0,
                }]
            };
            (records, Vec::new(), None)
        } else {
            let p = parent_idx[i] as usize;
            let parent_label: &TreeLabel = &labels[p];
            let mut records = parent_label.records.clone();
            let mut light_edges = parent_label.light_edges.clone();
            if heavy[p] == Some(i as u32) {
                records
                    .last_mut()
                    .expect("non-singleton trees always have a root record")
                    .exit_depth = depth;
            } else {
                records.push(PathRecord {
                    path_id: path_id[i],
                    entry_depth: depth,
                    exit_depth: depth,
                });
                light_edges.push((tree.depth[p], port(tree.parent[i], v)?));
            }
            (records, light_edges, Some(port(v, tree.parent[i])?))
        };
        let heavy_child_port = match heavy[i] {
            Some(c) => Some(port(v, tree.members[c as usize])?),
            None => None,
        };
        labels.push(TreeLabel {
            depth,
            records,
            parent_port,
            heavy_child_port,
            light_edges,
        });
    }
    Ok(labels)
}

/// Depth of the lowest common ancestor encoded by two labels of the same
/// tree: the minimum exit depth on the last heavy path both share.
fn lca_depth(a: &TreeLabel, b: &TreeLabel) -> u32 {
    let m = a.records.len().min(b.records.len());
    if m == 0 {
        // only singleton-tree labels have no records
        return 0;
    }
    let mut last = 0;
    for i in 0..m {
        if a.records[i].path_id != b.records[i].path_id {
            break;
        }
        last = i;
    }
    assert_eq!(
        a.records[last].path_id, b.records[last].path_id,
        "labels come from different trees"
    );
    a.records[last].exit_depth.min(b.records[last].exit_depth)
}

/// Exact hop distance between two vertices of the same tree, from their
/// labels alone.
pub fn tree_distance(a: &TreeLabel, b: &TreeLabel) -> u32 {
    a.depth + b.depth - 2 * lca_depth(a, b)
}

/// The host-graph port of the neighbor of `s` on the tree path toward `t`:
/// the parent when `s` is not an ancestor of `t`, otherwise the child
/// toward `t` (the heavy child from `s`'s own label, or a light child looked
/// up in `t`'s light-edge list). Both labels must come from the same tree
/// and from distinct vertices.
pub fn tree_next_hop_port(s: &TreeLabel, t: &TreeLabel) -> Result<u32> {
    let lca = lca_depth(s, t);
    if lca == s.depth && s.depth == t.depth {
        return Err(Error::InvalidParameter(
            "next hop requires distinct vertices".into(),
        ));
    }
    if lca < s.depth {
        s.parent_port.ok_or_else(|| {
            Error::InvariantViolation("non-root vertex lacks a parent port".into())
        })
    } else {
        match t.light_edges.binary_search_by_key(&s.depth, |e| e.0) {
            Ok(i) => Ok(t.light_edges[i].1),
            Err(_) => s.heavy_child_port.ok_or_else(|| {
                Error::InvariantViolation(
                    "ancestor has no heavy child yet no light edge matches".into(),
                )
            }),
        }
    }
}

/// Builds the routing label of every vertex of the cover's host graph.
pub fn build_cover_labels(graph: &Graph, cover: &TreeCover) -> Result<Vec<RoutingLabel>> {
    let n = graph.vertex_count();
    let mut labels: Vec<RoutingLabel> = (0..n as u32)
        .map(|vertex| RoutingLabel {
            vertex,
            entries: Vec::new(),
        })
        .collect();
    for tree in &cover.trees {
        let tree_labels = build_tree_labels(tree, graph)?;
        for (i, label) in tree_labels.into_iter().enumerate() {
            labels[tree.members[i] as usize]
                .entries
                .push((tree.graph_id, label));
        }
    }
    Ok(labels)
}

/// Minimum tree distance over all trees shared by two labels, with the
/// smallest graph id among the minimizers. `None` when no tree contains
/// both vertices, which only happens across components.
pub fn cover_distance(a: &RoutingLabel, b: &RoutingLabel) -> Option<(u32, u32)> {
    let (mut i, mut j) = (0, 0);
    let mut best: Option<(u32, u32)> = None;
    while i < a.entries.len() && j < b.entries.len() {
        match a.entries[i].0.cmp(&b.entries[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let d = tree_distance(&a.entries[i].1, &b.entries[j].1);
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, a.entries[i].0));
                }
                i += 1;
                j += 1;
            }
        }
    }
    best
}

fn push_varint(buf: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            buf.push(byte);
            break;
        }
        buf.push(byte | 0x80);
    }
}

fn read_varint(bytes: &[u8], pos: &mut usize) -> Result<u64> {
    let mut x = 0u64;
    let mut shift = 0;
    loop {
        let &byte = bytes.get(*pos).ok_or_else(|| Error::Format {
            line: 0,
            message: "truncated varint".into(),
        })?;
        *pos += 1;
        if shift >= 64 {
            return Err(Error::Format {
                line: 0,
                message: "varint overflow".into(),
            });
        }
        x |= u64::from(byte & 0x7f) << shift;
        if byte & 0x80 == 0 {
            return Ok(x);
        }
        shift += 7;
    }
}

fn read_u32(bytes: &[u8], pos: &mut usize) -> Result<u32> {
    let end = *pos + 4;
    let slice = bytes.get(*pos..end).ok_or_else(|| Error::Format {
        line: 0,
        message: "truncated u32".into(),
    })?;
    *pos = end;
    Ok(u32::from_le_bytes(slice.try_into().unwrap()))
}

fn varint_u32(bytes: &[u8], pos: &mut usize, what: &str) -> Result<u32> {
    let x = read_varint(bytes, pos)?;
    u32::try_from(x).map_err(|_| Error::Format {
        line: 0,
        message: format!("{what} out of range: {x}"),
    })
}

fn encode_tree_label(label: &TreeLabel, buf: &mut Vec<u8>) {
    push_varint(buf, label.depth.into());
    push_varint(buf, label.records.len() as u64);
    for r in &label.records {
        push_varint(buf, r.path_id.into());
        push_varint(buf, r.entry_depth.into());
        push_varint(buf, r.exit_depth.into());
    }
    push_varint(buf, label.parent_port.unwrap_or(0).into());
    push_varint(buf, label.heavy_child_port.unwrap_or(0).into());
    push_varint(buf, label.light_edges.len() as u64);
    for &(depth, port) in &label.light_edges {
        push_varint(buf, depth.into());
        push_varint(buf, port.into());
    }
}

fn decode_tree_label(bytes: &[u8], pos: &mut usize) -> Result<TreeLabel> {
    let depth = varint_u32(bytes, pos, "depth")?;
    let record_count = varint_u32(bytes, pos, "record count")? as usize;
    let mut records = Vec::with_capacity(record_count);
    for _ in 0..record_count {
        records.push(PathRecord {
            path_id: varint_u32(bytes, pos, "path id")?,
            entry_depth: varint_u32(bytes, pos, "entry depth")?,
            exit_depth: varint_u32(bytes, pos, "exit depth")?,
        });
    }
    let parent_port = match varint_u32(bytes, pos, "parent port")? {
        0 => None,
        p => Some(p),
    };
    let heavy_child_port = match varint_u32(bytes, pos, "heavy child port")? {
        0 => None,
        p => Some(p),
    };
    let light_count = varint_u32(bytes, pos, "light edge count")? as usize;
    let mut light_edges = Vec::with_capacity(light_count);
    for _ in 0..light_count {
        let depth = varint_u32(bytes, pos, "light edge depth")?;
        let port = varint_u32(bytes, pos, "light edge port")?;
        light_edges.push((depth, port));
    }
    Ok(TreeLabel {
        depth,
        records,
        parent_port,
        heavy_child_port,
        light_edges,
    })
}

/// Serializes a routing label to its binary form.
pub fn encode_routing_label(label: &RoutingLabel) -> Vec<u8> {
    let mut buf = Vec::new();
    buf.extend_from_slice(&label.vertex.to_le_bytes());
    push_varint(&mut buf, label.entries.len() as u64);
    for (graph_id, tree_label) in &label.entries {
        buf.extend_from_slice(&graph_id.to_le_bytes());
        encode_tree_label(tree_label, &mut buf);
    }
    buf
}

/// Parses a routing label; rejects trailing bytes.
pub fn decode_routing_label(bytes: &[u8]) -> Result<RoutingLabel> {
    let mut pos = 0;
    let vertex = read_u32(bytes, &mut pos)?;
    let entry_count = read_varint(bytes, &mut pos)? as usize;
    let mut entries = Vec::with_capacity(entry_count);
    for _ in 0..entry_count {
        let graph_id = read_u32(bytes, &mut pos)?;
        let label = decode_tree_label(bytes, &mut pos)?;
        entries.push((graph_id, label));
    }
    if pos != bytes.len() {
        return Err(Error::Format {
            line: 0,
            message: format!("{} trailing bytes after routing label", bytes.len() - pos),
        });
    }
    Ok(RoutingLabel { vertex, entries })
}

/// Encoded size of a routing label in bits.
pub fn encoded_bits(label: &RoutingLabel) -> usize {
    encode_routing_label(label).len() * 8
}

/// Size and membership statistics over a label set.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelStats {
    pub max_bits: usize,
    pub mean_bits: f64,
    pub total_bytes: usize,
    pub k_max: usize,
    pub k_mean: f64,
}

pub fn label_stats(labels: &[RoutingLabel]) -> LabelStats {
    let mut max_bits = 0;
    let mut total_bits = 0usize;
    let mut k_max = 0;
    let mut k_total = 0usize;
    for label in labels {
        let bits = encoded_bits(label);
        max_bits = max_bits.max(bits);
        total_bits += bits;
        k_max = k_max.max(label.membership_count());
        k_total += label.membership_count();
    }
    let n = labels.len().max(1) as f64;
    LabelStats {
        max_bits,
        mean_bits: total_bits as f64 / n,
        total_bytes: total_bits / 8,
        k_max,
        k_mean: k_total as f64 / n,
    }
}

/// Writes the binary label store for all vertices.
pub fn write_label_store<W: Write>(labels: &[RoutingLabel], mut writer: W) -> Result<()> {
    writer.write_all(LABEL_STORE_MAGIC)?;
    writer.write_all(&(labels.len() as u32).to_le_bytes())?;
    for label in labels {
        let blob = encode_routing_label(label);
        writer.write_all(&(blob.len() as u32).to_le_bytes())?;
        writer.write_all(&blob)?;
    }
    Ok(())
}

/// Reads a label store written by [`write_label_store`].
pub fn read_label_store<R: Read>(mut reader: R) -> Result<Vec<RoutingLabel>> {
    let mut magic = [0u8; 8];
    reader.read_exact(&mut magic)?;
    if &magic != LABEL_STORE_MAGIC {
        return Err(Error::Format {
            line: 0,
            message: "bad label store magic".into(),
        });
    }
    let mut count_bytes = [0u8; 4];
    reader.read_exact(&mut count_bytes)?;
    let n = u32::from_le_bytes(count_bytes) as usize;
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let mut len_bytes = [0u8; 4];
        reader.read_exact(&mut len_bytes)?;
        let len = u32::from_le_bytes(len_bytes) as usize;
        let mut blob = vec![0u8; len];
        reader.read_exact(&mut blob)?;
        let label = decode_routing_label(&blob)?;
        if label.vertex as usize != i {
            return Err(Error::Format {
                line: 0,
                message: format!("expected label for vertex {i}, found {}", label.vertex),
            });
        }
        labels.push(label);
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proton::{compute_tree_cover, ProtonParams, Strategy};

    fn cover_of(graph: &Graph) -> TreeCover {
        let params = ProtonParams::new(2.0, 2.0, Strategy::IdOrder).unwrap();
        compute_tree_cover(graph, None, &params).unwrap()
    }

    #[test]
    fn singleton_label_is_minimal() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let cover = cover_of(&g);
        let labels = build_tree_labels(&cover.trees[0], &g).unwrap();
        assert_eq!(labels.len(), 1);
        assert_eq!(labels[0].depth, 0);
        assert!(labels[0].records.is_empty());
        assert!(labels[0].parent_port.is_none());
        assert_eq!(tree_distance(&labels[0], &labels[0]), 0);
    }

    #[test]
    fn star_leaves_decode_distance_two() {
        let edges: Vec<(u32, u32)> = (1..=6).map(|i| (0, i)).collect();
        let g = Graph::from_edges(7, &edges).unwrap();
        let cover = cover_of(&g);
        assert_eq!(cover.trees.len(), 1);
        let labels = build_cover_labels(&g, &cover).unwrap();
        for u in 1..=6u32 {
            for v in 1..=6u32 {
                let expected = if u == v { 0 } else { 2 };
                let (d, _) = cover_distance(&labels[u as usize], &labels[v as usize]).unwrap();
                assert_eq!(d, expected);
            }
            let (d, _) = cover_distance(&labels[0], &labels[u as usize]).unwrap();
            assert_eq!(d, 1);
        }
    }

    #[test]
    fn next_hop_walks_reach_the_target() {
        // path + a pendant: mixes heavy and light edges
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let cover = cover_of(&g);
        let labels = build_cover_labels(&g, &cover).unwrap();
        for s in 0..6u32 {
            for t in 0..6u32 {
                if s == t {
                    continue;
                }
                let Some((d, id)) = cover_distance(&labels[s as usize], &labels[t as usize])
                else {
                    panic!("no shared tree for ({s}, {t})");
                };
                let mut cur = s;
                for _ in 0..d {
                    let sl = labels[cur as usize].entry(id).unwrap();
                    let tl = labels[t as usize].entry(id).unwrap();
                    let port = tree_next_hop_port(sl, tl).unwrap();
                    let next = g.port_to_neighbor(cur, port).unwrap();
                    assert!(g.has_edge(cur, next));
                    cur = next;
                }
                assert_eq!(cur, t, "walk from {s} to {t} in tree {id}");
            }
        }
    }

    #[test]
    fn path_cover_membership_matches_trace() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let cover = cover_of(&g);
        let labels = build_cover_labels(&g, &cover).unwrap();
        assert_eq!(labels[0].membership_count(), 3);
        for (v, label) in labels.iter().enumerate() {
            assert_eq!(
                label.membership_count(),
                cover.membership[v].len(),
                "vertex {v}"
            );
            assert!(label.entries.windows(2).all(|w| w[0].0 < w[1].0));
        }
        // the endpoints meet in the phase-1 tree rooted at 0 (graph id 4)
        let (d, id) = cover_distance(&labels[0], &labels[4]).unwrap();
        assert_eq!((d, id), (4, 4));
        assert_eq!(cover.tree(id).unwrap().phase, 1);
        assert_eq!(cover.tree(id).unwrap().root, 0);
        // identical labels share distance zero in their first common tree
        assert_eq!(cover_distance(&labels[0], &labels[0]).unwrap(), (0, 1));
    }

    #[test]
    fn distances_match_bfs_on_a_random_tree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let n = 300;
        let mut edges = Vec::new();
        for v in 1..n as u32 {
            edges.push((rng.gen_range(0..v), v));
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let cover = cover_of(&g);
        let labels = build_cover_labels(&g, &cover).unwrap();
        for s in [0u32, 7, 100, 299] {
            let dist = g.bfs_distances(s);
            for t in 0..n as u32 {
                let (d, _) = cover_distance(&labels[s as usize], &labels[t as usize]).unwrap();
                // the tree graph is covered by trees, so some tree is exact
                assert!(d >= dist[t as usize]);
                assert!(d <= dist[t as usize] + 2 || d as f64 <= 3.0 * dist[t as usize] as f64);
            }
        }
    }

    #[test]
    fn routing_labels_round_trip_through_bytes() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let cover = cover_of(&g);
        let labels = build_cover_labels(&g, &cover).unwrap();
        for label in &labels {
            let blob = encode_routing_label(label);
            let back = decode_routing_label(&blob).unwrap();
            assert_eq!(&back, label);
        }
        let mut store = Vec::new();
        write_label_store(&labels, &mut store).unwrap();
        let back = read_label_store(&store[..]).unwrap();
        assert_eq!(back, labels);
        let mut store2 = Vec::new();
        write_label_store(&back, &mut store2).unwrap();
        assert_eq!(store, store2);
    }

    #[test]
    fn cover_distance_is_none_across_components() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let cover = cover_of(&g);
        let labels = build_cover_labels(&g, &cover).unwrap();
        assert_eq!(cover_distance(&labels[0], &labels[3]), None);
        assert!(cover_distance(&labels[0], &labels[1]).is_some());
    }

    #[test]
    fn store_rejects_bad_magic() {
        let err = read_label_store(&b"NOTMAGIC\x00\x00\x00\x00"[..]).unwrap_err();
        assert!(matches!(err, Error::Format { .. }));
    }

    #[test]
    fn label_size_stays_polylogarithmic() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let n = 2000;
        let mut edges = Vec::new();
        for v in 1..n as u32 {
            edges.push((rng.gen_range(0..v), v));
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let cover = cover_of(&g);
        let labels = build_cover_labels(&g, &cover).unwrap();
        let log2n = (n as f64).log2();
        for label in &labels {
            let bits = encoded_bits(label) as f64;
            let k = label.membership_count() as f64;
            let budget = 64.0_f64.max(16.0 * k * (log2n * log2n + k.log2().max(0.0) + log2n));
            assert!(bits <= budget, "vertex {}: {bits} > {budget}", label.vertex);
        }
    }
}
