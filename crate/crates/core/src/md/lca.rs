use crate::graph::Vertex;

use super::{MdTree, NodeId};

/// Lowest common strong modules of all vertex pairs.
///
/// For `u != v`, `M^{u,v}` is the smallest strong module containing both and
/// `M^{u,v}_u` is its child containing `u`.
#[derive(Debug, Clone)]
pub struct LcaTable {
    n: usize,
    /// `toward[u * n + v]` is the child of `M^{u,v}` containing `u`; the leaf
    /// of `u` on the diagonal.
    toward: Vec<u32>,
    parent: Vec<u32>,
}

/// Fills the table in `O(n²)`: each pair is written once, at its lowest
/// common node.
pub fn lca_table(tree: &MdTree) -> LcaTable {
    let n = tree.vertex_count();
    let mut toward = vec![0u32; n * n];
    for v in 0..n {
        toward[v * n + v] = tree.leaf(v).0 as u32;
    }
    // row-major writes only: the transposed entry is filled from the other side
    for id in tree.inner_nodes() {
        let kids = tree.children(id);
        for &a in kids {
            for &u in tree.members(a) {
                let row = &mut toward[u * n..(u + 1) * n];
                for &b in kids.iter().filter(|&&b| b != a) {
                    for &v in tree.members(b) {
                        row[v] = a.0 as u32;
                    }
                }
            }
        }
    }
    let parent = tree.ids().map(|id| tree.parent(id).map_or(u32::MAX, |p| p.0 as u32)).collect();
    LcaTable { n, toward, parent }
}

impl LcaTable {
    /// `M^{u,v}`; the leaf `{u}` when `u == v`.
    #[inline]
    pub fn module(&self, u: Vertex, v: Vertex) -> NodeId {
        let t = self.toward[u * self.n + v];
        if u == v {
            NodeId(t as usize)
        } else {
            NodeId(self.parent[t as usize] as usize)
        }
    }

    /// `(M^{u,v}_u, M^{u,v}_v)` for `u != v`.
    #[inline]
    pub fn children(&self, u: Vertex, v: Vertex) -> (NodeId, NodeId) {
        debug_assert_ne!(u, v);
        (NodeId(self.toward[u * self.n + v] as usize), NodeId(self.toward[v * self.n + u] as usize))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::md::decompose;

    #[test]
    fn lowest_common_modules() {
        let t = decompose(&fixtures::nested_modules());
        let lca = lca_table(&t);
        let m = lca.module(3, 4);
        assert_eq!(t.members(m), &[3, 4]);
        let (a, b) = lca.children(3, 4);
        assert_eq!((t.members(a), t.members(b)), (&[3][..], &[4][..]));

        assert_eq!(lca.module(0, 5), t.root());
        let (a, b) = lca.children(0, 5);
        assert_eq!((t.members(a), t.members(b)), (&[0, 1][..], &[5][..]));

        assert_eq!(lca.module(2, 2), t.leaf(2));
        assert_eq!(t.members(lca.module(2, 4)), &[2, 3, 4]);
    }
}
