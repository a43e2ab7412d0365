#include "gaugepoly/ribbon_tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gp::assoc {

namespace {

struct Expr {
    bool leaf = true;
    std::vector<Expr> kids;
};

Expr parse_expr(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree encoding");
    if (s[pos] == '(') {
        ++pos;
        Expr e;
        e.leaf = false;
        while (pos < s.size() && s[pos] != ')') {
            e.kids.push_back(parse_expr(s, pos));
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("unbalanced tree encoding");
        ++pos;  // ')'
        return e;
    }
    // a leaf: skip its label (labels are positional)
    while (pos < s.size() && s[pos] != ',' && s[pos] != ')' && s[pos] != '(') ++pos;
    return Expr{};
}

void build(const Expr& e, std::vector<std::vector<RibbonTree::Child>>& out, int& next_leaf,
           int my_index) {
    for (const Expr& kid : e.kids) {
        if (kid.leaf) {
            out[my_index].push_back({true, next_leaf++});
        } else {
            int idx = int(out.size());
            out.emplace_back();
            out[my_index].push_back({false, idx});
            build(kid, out, next_leaf, idx);
        }
    }
}

}  // namespace

RibbonTree RibbonTree::parse(const std::string& encoded) {
    std::size_t pos = 0;
    Expr e = parse_expr(encoded, pos);
    if (e.leaf) throw std::invalid_argument("tree encoding must start with '('");
    std::vector<std::vector<Child>> children(1);
    int next_leaf = 0;
    build(e, children, next_leaf, 0);
    return from_children(std::move(children));
}

RibbonTree RibbonTree::corolla(int n) {
    std::vector<std::vector<Child>> children(1);
    for (int i = 0; i < n; ++i) children[0].push_back({true, i});
    return from_children(std::move(children));
}

RibbonTree RibbonTree::from_children(std::vector<std::vector<Child>> children) {
    RibbonTree t;
    t.children_ = std::move(children);
    t.index();
    t.validate();
    return t;
}

void RibbonTree::index() {
    n_ = 0;
    edges_.clear();
    // preorder edge discovery
    std::vector<int> stack{0};
    // rebuild edges from the structure: walk preorder
    struct Frame {
        int v;
        std::size_t next_child = 0;
    };
    std::vector<Frame> fs{{0, 0}};
    while (!fs.empty()) {
        Frame& f = fs.back();
        if (f.next_child >= children_[f.v].size()) {
            fs.pop_back();
            continue;
        }
        Child c = children_[f.v][f.next_child];
        int pos = int(f.next_child);
        ++f.next_child;
        if (c.is_leaf) {
            ++n_;
        } else {
            edges_.push_back({fs.back().v, pos, c.index});
            fs.push_back({c.index, 0});
        }
    }
    (void)stack;
    // canonical encoding
    std::ostringstream os;
    struct Enc {
        const RibbonTree* t;
        void run(int v, std::ostringstream& o) const {
            o << "(";
            bool first = true;
            for (const Child& c : t->children_[v]) {
                if (!first) o << ",";
                first = false;
                if (c.is_leaf)
                    o << c.index;
                else
                    run(c.index, o);
            }
            o << ")";
        }
    };
    Enc{this}.run(0, os);
    encode_ = os.str();
}

void RibbonTree::validate() const {
    if (children_.empty()) throw std::invalid_argument("empty tree");
    if (n_ < 2) throw std::invalid_argument("a ribbon tree needs at least two non-root leaves");
    for (std::size_t v = 0; v < children_.size(); ++v)
        if (children_[v].size() < 2)
            throw std::invalid_argument("tree not reduced: interior vertex of degree two");
    if (int(edges_.size()) != interior_vertex_count() - 1)
        throw std::invalid_argument("edge/vertex count mismatch");
    // leaves labelled 0..n-1 left to right
    int expect = 0;
    for (std::size_t v = 0; v < children_.size(); ++v) (void)v;
    std::vector<int> seen;
    struct Walk {
        const std::vector<std::vector<Child>>* ch;
        void run(int v, std::vector<int>& out) const {
            for (const Child& c : (*ch)[v]) {
                if (c.is_leaf)
                    out.push_back(c.index);
                else
                    run(c.index, out);
            }
        }
    };
    Walk{&children_}.run(0, seen);
    for (int l : seen)
        if (l != expect++) throw std::invalid_argument("leaf labels must be 0..n-1 in order");
}

std::pair<int, int> RibbonTree::leaf_span(int v) const {
    int lo = -1, hi = -1;
    struct Walk {
        const std::vector<std::vector<Child>>* ch;
        void run(int v, int& lo, int& hi) const {
            for (const Child& c : (*ch)[v]) {
                if (c.is_leaf) {
                    if (lo < 0) lo = c.index;
                    hi = c.index;
                } else {
                    run(c.index, lo, hi);
                }
            }
        }
    };
    Walk{&children_}.run(v, lo, hi);
    return {lo, hi};
}

RibbonTree RibbonTree::shrink_edge(int k) const {
    if (k < 0 || k >= int(edges_.size())) throw std::invalid_argument("no such interior edge");
    Edge e = edges_[k];
    // splice target's children into source's list at the target's position
    std::vector<std::vector<Child>> ch = children_;
    std::vector<Child> merged;
    for (int i = 0; i < int(ch[e.source].size()); ++i) {
        if (i == e.position) {
            for (const Child& c : ch[e.target]) merged.push_back(c);
        } else {
            merged.push_back(ch[e.source][i]);
        }
    }
    ch[e.source] = merged;
    ch[e.target].clear();
    // compact vertex indices
    std::vector<int> remap(ch.size(), -1);
    std::vector<std::vector<Child>> out;
    for (std::size_t v = 0; v < ch.size(); ++v) {
        if (int(v) == e.target) continue;
        remap[v] = int(out.size());
        out.push_back(ch[v]);
    }
    for (auto& kids : out)
        for (auto& c : kids)
            if (!c.is_leaf) c.index = remap[c.index];
    return from_children(std::move(out));
}

void CyclicBisection::validate() const {
    if (lo < 0 || hi >= n || hi - lo < 1 || size() > n - 1)
        throw std::invalid_argument("bad cyclic bisection");
}

bool crossed(const CyclicBisection& a, const CyclicBisection& b) {
    bool disjoint = a.hi < b.lo || b.hi < a.lo;
    bool a_in_b = b.lo <= a.lo && a.hi <= b.hi;
    bool b_in_a = a.lo <= b.lo && b.hi <= a.hi;
    return !(disjoint || a_in_b || b_in_a);
}

std::vector<CyclicBisection> bisections(const RibbonTree& t) {
    std::vector<CyclicBisection> out;
    for (const auto& e : t.edges()) {
        auto [lo, hi] = t.leaf_span(e.target);
        out.push_back({t.leaf_count(), lo, hi});
    }
    return out;
}

RibbonTree tree_from_bisections(int n, std::vector<CyclicBisection> bis) {
    for (auto& b : bis) {
        if (b.n != n) throw std::invalid_argument("bisection ground-set mismatch");
        b.validate();
    }
    for (std::size_t i = 0; i < bis.size(); ++i)
        for (std::size_t j = i + 1; j < bis.size(); ++j) {
            if (bis[i] == bis[j]) throw std::invalid_argument("duplicate bisection");
            if (crossed(bis[i], bis[j]))
                throw std::invalid_argument("crossed bisections do not come from a tree");
        }
    // laminar family of intervals: build by nesting. Sort by (size asc);
    // parent of an interval is the smallest strictly-containing interval,
    // default the root interval [0, n-1].
    std::sort(bis.begin(), bis.end(), [](const CyclicBisection& a, const CyclicBisection& b) {
        return std::pair(a.size(), a.lo) < std::pair(b.size(), b.lo);
    });
    struct Node {
        int lo, hi;
        std::vector<int> kids;  // indices into nodes
    };
    std::vector<Node> nodes;
    nodes.push_back({0, n - 1, {}});  // root interval
    for (const auto& b : bis) nodes.push_back({b.lo, b.hi, {}});
    // attach each interval to its minimal strict superset
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        int best = 0;
        for (std::size_t j = 1; j < nodes.size(); ++j) {
            if (i == j) continue;
            bool strict_super = nodes[j].lo <= nodes[i].lo && nodes[i].hi <= nodes[j].hi &&
                                !(nodes[j].lo == nodes[i].lo && nodes[j].hi == nodes[i].hi);
            if (strict_super &&
                (best == 0 || nodes[j].hi - nodes[j].lo < nodes[best].hi - nodes[best].lo))
                best = int(j);
        }
        nodes[best].kids.push_back(int(i));
    }
    // realize as a ribbon tree: vertex per node; children = leaves not covered
    // by a kid interval, interleaved with kid vertices by position
    std::vector<std::vector<RibbonTree::Child>> children(nodes.size());
    // map node order: keep node 0 as vertex 0; vertices must be preorder, so
    // rebuild recursively.
    struct Build {
        const std::vector<Node>* nodes;
        std::vector<std::vector<RibbonTree::Child>>* out;
        int run(int node) const {
            int my = int(out->size());
            out->emplace_back();
            const Node& nd = (*nodes)[node];
            std::vector<int> kid_of(nd.hi - nd.lo + 1, -1);
            for (int k : nd.kids)
                for (int x = (*nodes)[k].lo; x <= (*nodes)[k].hi; ++x) kid_of[x - nd.lo] = k;
            int x = nd.lo;
            while (x <= nd.hi) {
                if (kid_of[x - nd.lo] < 0) {
                    (*out)[my].push_back({true, x});
                    ++x;
                } else {
                    int k = kid_of[x - nd.lo];
                    int sub = run(k);
                    (*out)[my].push_back({false, sub});
                    x = (*nodes)[k].hi + 1;
                }
            }
            return my;
        }
    };
    std::vector<std::vector<RibbonTree::Child>> out;
    Build{&nodes, &out}.run(0);
    return RibbonTree::from_children(std::move(out));
}

namespace {

void enumerate_rec(int nleaves, std::vector<std::string>& out);

// canonical encodings of all subtree shapes on n leaves ("0" placeholder for
// labels; labels are positional anyway)
std::vector<std::string>& shapes(int n) {
    static std::map<int, std::vector<std::string>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (n == 1) {
        out.push_back("*");
    } else {
        enumerate_rec(n, out);
    }
    return memo[n] = out;
}

void compositions(int n, int parts_left, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (parts_left == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 1; first <= n - parts_left + 1; ++first) {
        cur.push_back(first);
        compositions(n - first, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

void enumerate_rec(int nleaves, std::vector<std::string>& out) {
    for (int parts = 2; parts <= nleaves; ++parts) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(nleaves, parts, cur, comps);
        for (const auto& comp : comps) {
            // cartesian product of child shapes
            std::vector<std::string> acc{""};
            for (int p : comp) {
                std::vector<std::string> next;
                for (const std::string& pre : acc)
                    for (const std::string& s : shapes(p))
                        next.push_back(pre.empty() ? s : pre + "," + s);
                acc = std::move(next);
            }
            for (const std::string& body : acc) out.push_back("(" + body + ")");
        }
    }
}

}  // namespace

std::vector<RibbonTree> enumerate_trees(int n) {
    if (n < 2) throw std::invalid_argument("need at least two leaves");
    std::vector<RibbonTree> out;
    for (const std::string& s : shapes(n)) out.push_back(RibbonTree::parse(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FaceLattice::product_factors(int face) const {
    std::vector<int> d;
    const RibbonTree& t = faces[face];
    for (int v = 0; v < t.interior_vertex_count(); ++v) d.push_back(t.out_degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

bool FaceLattice::neighborhoods_intersect(int f1, int f2) const {
    std::vector<CyclicBisection> a = bisections(faces[f1]);
    std::vector<CyclicBisection> b = bisections(faces[f2]);
    for (const auto& x : a)
        for (const auto& y : b)
            if (crossed(x, y)) return false;
    return true;
}

FaceLattice face_lattice(int n) {
    if (n < 2 || n > 10) throw std::invalid_argument("face_lattice supports 2 <= n <= 10");
    FaceLattice L;
    L.n = n;
    L.faces = enumerate_trees(n);
    std::vector<std::set<CyclicBisection>> bsets;
    for (const auto& t : L.faces) {
        L.codim.push_back(t.interior_edge_count());
        auto b = bisections(t);
        bsets.push_back(std::set<CyclicBisection>(b.begin(), b.end()));
    }
    L.closure_leq.resize(L.faces.size());
    for (std::size_t i = 0; i < L.faces.size(); ++i) {
        for (std::size_t j = 0; j < L.faces.size(); ++j) {
            // T_j <= T_i  iff  bisections(T_j) ⊇ bisections(T_i)
            if (std::includes(bsets[j].begin(), bsets[j].end(), bsets[i].begin(),
                              bsets[i].end()))
                L.closure_leq[i].push_back(int(j));
        }
    }
    for (std::size_t i = 0; i < L.faces.size(); ++i) {
        if (L.codim[i] == n - 2) ++L.vertex_count;
        if (L.codim[i] == 1) ++L.facet_count;
        int dim = (n - 2) - L.codim[i];
        L.euler_characteristic_alt += (dim % 2 == 0) ? 1 : -1;
    }
    return L;
}

long catalan(int n) {
    // C_0 = 1, C_{k+1} = Σ C_i C_{k-i}
    std::vector<long> c{1};
    for (int k = 1; k <= n; ++k) {
        long s = 0;
        for (int i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
        c.push_back(s);
    }
    return c[n];
}

}  // namespace gp::assoc
