#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gp::assoc {

// An n-ribbon tree: a reduced rooted plane tree with n non-root leaves. The
// root leaf hangs off interior vertex 0; interior vertices are stored in
// depth-first preorder and each has at least two children, every child being
// either a leaf (labelled 0..n-1 left to right) or another interior vertex.
class RibbonTree {
  public:
    struct Child {
        bool is_leaf = true;
        int index = 0;  // leaf label or interior vertex index
    };

    RibbonTree() = default;
    // Nested-list encoding: a tree is a list whose entries are leaves or
    // sub-lists, e.g. "((0,1),2,3)". Labels are implicit (left to right).
    static RibbonTree parse(const std::string& encoded);
    static RibbonTree corolla(int n);

    int leaf_count() const { return n_; }
    int interior_vertex_count() const { return int(children_.size()); }
    int interior_edge_count() const { return interior_vertex_count() - 1; }
    // d(v): number of outgoing edges of interior vertex v (degree minus one).
    int out_degree(int v) const { return int(children_[v].size()); }
    const std::vector<Child>& children(int v) const { return children_[v]; }

    // Interior edge k (preorder discovery order): (source vertex, position
    // among the source's children, target vertex).
    struct Edge {
        int source, position, target;
    };
    const std::vector<Edge>& edges() const { return edges_; }

    // Leaf interval [lo, hi] (0-based, inclusive) under interior vertex v.
    std::pair<int, int> leaf_span(int v) const;

    const std::string& encode() const { return encode_; }  // canonical nested-list form
    bool operator==(const RibbonTree& o) const { return encode_ == o.encode_; }
    bool operator<(const RibbonTree& o) const { return encode_ < o.encode_; }

    // Merge target of edge k into its source, splicing the child's outgoing
    // edges at the child's position. Throws on a bad edge index.
    RibbonTree shrink_edge(int k) const;

    void validate() const;

    // Builds from per-vertex child lists (vertex 0 is the root vertex).
    static RibbonTree from_children(std::vector<std::vector<Child>> children);

  private:
    int n_ = 0;
    std::vector<std::vector<Child>> children_;
    std::vector<Edge> edges_;
    std::string encode_;
    void index();
};

// A cyclic bisection of [n]: a contiguous interval [lo, hi] of size between 2
// and n-1.
struct CyclicBisection {
    int n = 0, lo = 0, hi = 0;
    int size() const { return hi - lo + 1; }
    void validate() const;
    bool operator==(const CyclicBisection&) const = default;
    bool operator<(const CyclicBisection& o) const {
        return std::pair(lo, hi) < std::pair(o.lo, o.hi);
    }
};

// Crossed = overlapping without containment.
bool crossed(const CyclicBisection& a, const CyclicBisection& b);

// One bisection per interior edge, in edge order.
std::vector<CyclicBisection> bisections(const RibbonTree& t);

// The unique tree whose bisection set equals the input (throws when two of
// the inputs are crossed).
RibbonTree tree_from_bisections(int n, std::vector<CyclicBisection> bis);

// All n-ribbon trees, canonically ordered.
std::vector<RibbonTree> enumerate_trees(int n);

// The face lattice of the associahedron: faces indexed by ribbon trees,
// codim(F_T) = #interior edges, closure order T' <= T by shrink (reverse
// bisection inclusion).
struct FaceLattice {
    int n = 0;
    std::vector<RibbonTree> faces;              // all faces
    std::vector<int> codim;                     // per face
    std::vector<std::vector<int>> closure_leq;  // face i covers-or-equals: list of j with T_j <= T_i
    std::size_t vertex_count = 0;               // codim n-2 faces
    std::size_t facet_count = 0;                // codim 1 faces
    long euler_characteristic_alt = 0;          // Σ (-1)^codim

    // Closed face as a product of smaller associahedra: the list of d(v).
    std::vector<int> product_factors(int face) const;
    // Regular neighborhoods U_{T1}, U_{T2} intersect iff a common refinement
    // exists, i.e. the union of bisection sets is pairwise uncrossed.
    bool neighborhoods_intersect(int f1, int f2) const;
};
FaceLattice face_lattice(int n);  // 2 <= n <= 10

long catalan(int n);

}  // namespace gp::assoc
