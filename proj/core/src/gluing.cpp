#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gaugepoly/arrangement.hpp"

namespace gp::assoc {

namespace {

int edgeindex_of(const RibbonTree& t, int vertex, int position) {
    for (int k = 0; k < t.interior_edge_count(); ++k)
        if (t.edges()[k].source == vertex && t.edges()[k].position == position) return k;
    throw std::logic_error("no interior edge at this child position");
}

struct TaggedPoint {
    Rat pos;
    bool is_leaf;
    int id;  // leaf label or interior edge index
};

struct MergeRecord {
    int edge;
    Rat center;
    Rat r_at_merge;  // recomputed territory radius at merge time
    Rat rho;
};

struct GlueState {
    std::vector<TaggedPoint> points;
    std::vector<MergeRecord> records;
    std::vector<int> skipped_edges;  // infinite parameters
};

Rat min_gap(const std::vector<TaggedPoint>& pts, std::size_t at) {
    if (pts.size() == 1) return Rat(1);  // solo point: unit scale convention
    Rat best;
    bool have = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == at) continue;
        Rat d = rat_abs(pts[i].pos - pts[at].pos);
        if (!have || d < best) {
            best = d;
            have = true;
        }
    }
    return best;
}

GlueState run_merges(const KPoint& p, const std::vector<int>* order, bool allow_infinite) {
    p.validate();
    const RibbonTree& t = p.tree;

    // edge lookup: (vertex, child position) -> edge index
    std::map<std::pair<int, int>, int> edge_at;
    for (int k = 0; k < t.interior_edge_count(); ++k)
        edge_at[{t.edges()[k].source, t.edges()[k].position}] = k;

    auto tags_of = [&](int vertex) {
        std::vector<std::pair<bool, int>> tags;
        for (int pos = 0; pos < t.out_degree(vertex); ++pos) {
            const auto& c = t.children(vertex)[pos];
            if (c.is_leaf)
                tags.push_back({true, c.index});
            else
                tags.push_back({false, edge_at.at({vertex, pos})});
        }
        return tags;
    };

    GlueState st;
    {
        Arrangement root = p.vertex_arrangements[0].canonical();
        auto tags = tags_of(0);
        for (int i = 0; i < root.size(); ++i)
            st.points.push_back({root.x[i], tags[i].first, tags[i].second});
    }

    std::vector<int> edge_order;
    if (order) {
        edge_order = *order;
        if (int(edge_order.size()) != t.interior_edge_count())
            throw std::invalid_argument("processing order must list every interior edge once");
    } else {
        for (int k = 0; k < t.interior_edge_count(); ++k) edge_order.push_back(k);
    }

    for (int k : edge_order) {
        if (k < 0 || k >= t.interior_edge_count())
            throw std::invalid_argument("bad edge index in processing order");
        if (!p.neck_scales[k]) {
            if (!allow_infinite)
                throw std::invalid_argument("infinite neck parameter: the point is a face point");
            st.skipped_edges.push_back(k);
            continue;
        }
        Rat rho = *p.neck_scales[k];
        // locate the pending point for this edge
        std::size_t at = st.points.size();
        for (std::size_t i = 0; i < st.points.size(); ++i)
            if (!st.points[i].is_leaf && st.points[i].id == k) at = i;
        if (at == st.points.size())
            throw std::invalid_argument(
                "processing order merges an edge before its source vertex");
        // an infinite ancestor separates this edge from the main component
        bool separated = false;
        for (int sk : st.skipped_edges) {
            int anc = t.edges()[sk].target;
            // is edge k inside the subtree of anc?
            int v = t.edges()[k].source;
            while (true) {
                if (v == anc) {
                    separated = true;
                    break;
                }
                bool found = false;
                for (const auto& e : t.edges())
                    if (e.target == v) {
                        v = e.source;
                        found = true;
                        break;
                    }
                if (!found) break;
            }
        }
        if (separated) {
            st.skipped_edges.push_back(k);
            continue;
        }

        Rat r = min_gap(st.points, at) / 8;
        Rat center = st.points[at].pos;
        int child = t.edges()[k].target;
        Arrangement ca = p.vertex_arrangements[child].canonical();
        TerritoryBalls cb = territory_section(ca);
        Rat factor = rho * r / cb.parent_radius;

        std::vector<TaggedPoint> next;
        auto ctags = tags_of(child);
        for (std::size_t i = 0; i < st.points.size(); ++i) {
            if (i != at) {
                next.push_back(st.points[i]);
                continue;
            }
            for (int j = 0; j < ca.size(); ++j)
                next.push_back(
                    {center + (ca.x[j] - cb.parent_center) * factor, ctags[j].first,
                     ctags[j].second});
        }
        st.points = std::move(next);
        st.records.push_back({k, center, r, rho});
    }
    return st;
}

}  // namespace

GlueResult glue_arrangements(const KPoint& p, const std::vector<int>* order) {
    GlueResult out;
    if (!p.all_finite()) {
        out.boundary = true;
        out.merged = p.vertex_arrangements[0].canonical();
        return out;
    }
    GlueState st = run_merges(p, order, false);
    Arrangement raw;
    for (const auto& tp : st.points) raw.x.push_back(tp.pos);
    std::sort(raw.x.begin(), raw.x.end());
    out.merged = raw.canonical();
    return out;
}

AnnularDecomposition annular_decomposition(const KPoint& p) {
    AnnularDecomposition ad;
    GlueState st = run_merges(p, nullptr, true);
    const RibbonTree& t = p.tree;

    // final affine normalization applied to every record
    Rat lo = st.points.front().pos, hi = st.points.front().pos;
    for (const auto& tp : st.points) {
        lo = std::min(lo, tp.pos);
        hi = std::max(hi, tp.pos);
    }
    Rat span = (st.points.size() > 1) ? hi - lo : Rat(1);
    auto norm_pos = [&](const Rat& x) -> Rat { return Rat((x - lo) / span); };
    auto norm_rad = [&](const Rat& r) -> Rat { return Rat(r / span); };

    std::vector<TaggedPoint> pts = st.points;
    std::sort(pts.begin(), pts.end(),
              [](const TaggedPoint& a, const TaggedPoint& b) { return a.pos < b.pos; });
    for (const auto& tp : pts) ad.merged.x.push_back(norm_pos(tp.pos));

    // per-edge necks (merged ones) in final coordinates
    std::map<int, MergeRecord> rec_by_edge;
    for (const auto& r : st.records) rec_by_edge[r.edge] = r;

    for (int k = 0; k < t.interior_edge_count(); ++k) {
        AnnularDecomposition::Neck nk;
        nk.edge = k;
        nk.source_vertex = t.edges()[k].source;
        nk.target_vertex = t.edges()[k].target;
        auto it = rec_by_edge.find(k);
        if (it == rec_by_edge.end()) {
            nk.infinite = true;
            // locate the pending point in the final set, if it is in the main
            // component
            for (const auto& tp : pts)
                if (!tp.is_leaf && tp.id == k) {
                    nk.center = norm_pos(tp.pos);
                    Rat r = Rat(1, 8);
                    // recomputed radius in the final main component
                    Arrangement fin;
                    for (const auto& q : pts) fin.x.push_back(norm_pos(q.pos));
                    // min gap at this point
                    Rat best;
                    bool have = false;
                    for (const auto& q : pts) {
                        if (q.pos == tp.pos) continue;
                        Rat d = rat_abs(norm_pos(q.pos) - nk.center);
                        if (!have || d < best) {
                            best = d;
                            have = true;
                        }
                    }
                    if (have) r = best / 8;
                    nk.inner = 0;
                    nk.outer = r / 4;
                }
            ad.necks.push_back(nk);
            continue;
        }
        const MergeRecord& mr = it->second;
        nk.center = norm_pos(mr.center);
        nk.inner = norm_rad(4 * mr.rho * mr.r_at_merge);
        nk.outer = norm_rad(mr.r_at_merge / 4);
        nk.ratio = p.rho0 / mr.rho;
        ad.necks.push_back(nk);
    }

    // which interior vertex owns each final point: walk the tree; a point
    // tagged with leaf label l belongs to the vertex incident to leaf l.
    auto vertex_of_leaf = [&](int leaf) {
        for (int v = 0; v < t.interior_vertex_count(); ++v)
            for (const auto& c : t.children(v))
                if (c.is_leaf && c.index == leaf) return v;
        return -1;
    };

    // leaf ends from final min-gaps
    std::map<int, std::pair<Rat, Rat>> leaf_ball;  // label -> (center, radius)
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].is_leaf) continue;
        Rat r = min_gap(pts, i) / 8;
        AnnularDecomposition::End e;
        e.leaf = pts[i].id;
        e.vertex = vertex_of_leaf(pts[i].id);
        e.center = norm_pos(pts[i].pos);
        e.radius = norm_rad(r);
        leaf_ball[e.leaf] = {e.center, e.radius};
        ad.ends.push_back(e);
    }
    // the root end: outside the final parent ball
    Arrangement fin;
    for (const auto& q : pts) fin.x.push_back(norm_pos(q.pos));
    TerritoryBalls fint = territory_section(fin);
    {
        AnnularDecomposition::End e;
        e.leaf = -1;
        e.vertex = 0;
        e.center = fint.parent_center;
        e.radius = fint.parent_radius;
        ad.ends.push_back(e);
    }

    // fat regions
    std::set<int> merged_vertices{0};
    for (const auto& r : st.records) merged_vertices.insert(t.edges()[r.edge].target);
    for (int v : merged_vertices) {
        AnnularDecomposition::Fat f;
        f.vertex = v;
        if (v == 0) {
            f.center = fint.parent_center;
            f.outer = fint.parent_radius;
        } else {
            // incoming edge of v
            int k = -1;
            for (int e = 0; e < t.interior_edge_count(); ++e)
                if (t.edges()[e].target == v) k = e;
            const MergeRecord& mr = rec_by_edge.at(k);
            f.center = norm_pos(mr.center);
            f.outer = norm_rad(4 * mr.rho * mr.r_at_merge);
        }
        for (int pos = 0; pos < t.out_degree(v); ++pos) {
            const auto& c = t.children(v)[pos];
            if (c.is_leaf) {
                auto [ctr, rad] = leaf_ball.at(c.index);
                f.holes.push_back({ctr, rad});
            } else {
                int k = edgeindex_of(t, v, pos);
                auto it = rec_by_edge.find(k);
                if (it != rec_by_edge.end()) {
                    f.holes.push_back(
                        {norm_pos(it->second.center), norm_rad(it->second.r_at_merge / 4)});
                } else {
                    // stretched edge: the punctured piece B_{r/4} stays a hole
                    for (const auto& nk : ad.necks)
                        if (nk.edge == k && nk.infinite) f.holes.push_back({nk.center, nk.outer});
                }
            }
        }
        ad.fats.push_back(f);
    }

    // exact consistency: holes pairwise disjoint and inside the outer ball
    ad.consistent = true;
    for (const auto& f : ad.fats) {
        for (std::size_t i = 0; i < f.holes.size() && ad.consistent; ++i) {
            if (rat_abs(f.holes[i].first - f.center) + f.holes[i].second > f.outer) {
                ad.consistent = false;
                ad.consistency_note = "hole escapes the fat region of vertex " +
                                      std::to_string(f.vertex);
            }
            for (std::size_t j = i + 1; j < f.holes.size() && ad.consistent; ++j) {
                if (rat_abs(f.holes[i].first - f.holes[j].first) <
                    f.holes[i].second + f.holes[j].second) {
                    ad.consistency_note = "overlapping holes at vertex " +
                                          std::to_string(f.vertex);
                    ad.consistent = false;
                }
            }
        }
    }
    return ad;
}

Rat gamma(const AnnularDecomposition& ad, int vertex, const std::array<Rat, 3>& y) {
    auto dist2_to = [&](const Rat& c) -> Rat {
        Rat dx = y[0] - c;
        return dx * dx + y[1] * y[1] + y[2] * y[2];
    };
    // plateaued rational bump in the squared radius
    auto phi1 = [](const Rat& t) -> Rat {
        if (t <= Rat(1, 3)) return Rat(1);
        if (t >= Rat(2, 3)) return Rat(0);
        return Rat(Rat(2) - Rat(3) * t);
    };

    for (const auto& nk : ad.necks) {
        Rat d2 = dist2_to(nk.center);
        if (nk.infinite) {
            if (d2 > 0 && d2 < nk.outer * nk.outer)
                return vertex == nk.source_vertex ? Rat(1) : Rat(0);
            continue;
        }
        Rat in2 = nk.inner * nk.inner, out2 = nk.outer * nk.outer;
        if (d2 >= in2 && d2 <= out2) {
            Rat t = (d2 - in2) / (out2 - in2);
            if (vertex == nk.target_vertex) return phi1(t);
            if (vertex == nk.source_vertex) return Rat(1) - phi1(t);
            return Rat(0);
        }
    }
    for (const auto& e : ad.ends) {
        Rat d2 = dist2_to(e.center);
        if (e.leaf < 0) {
            if (d2 >= e.radius * e.radius) return vertex == e.vertex ? Rat(1) : Rat(0);
        } else if (d2 > 0 && d2 < e.radius * e.radius) {
            return vertex == e.vertex ? Rat(1) : Rat(0);
        }
    }
    // innermost fat region containing the point
    const AnnularDecomposition::Fat* best = nullptr;
    for (const auto& f : ad.fats) {
        Rat d2 = dist2_to(f.center);
        if (d2 > f.outer * f.outer) continue;
        bool inhole = false;
        for (const auto& h : f.holes) {
            if (dist2_to(h.first) < h.second * h.second) inhole = true;
        }
        if (inhole) continue;
        if (!best || f.outer < best->outer) best = &f;
    }
    if (best) return vertex == best->vertex ? Rat(1) : Rat(0);
    return Rat(0);
}

}  // namespace gp::assoc
