#include <algorithm>
#include <map>
#include <sstream>

#include "abc/catalog.hpp"
#include "abc/ordering.hpp"
#include "abc/verify.hpp"

namespace abc {

namespace {

std::string vertex_pair(int a, int b) {
    std::ostringstream out;
    out << "(" << a << "," << b << ")";
    return out.str();
}

}  // namespace

bool StructureChecklist::all_applicable_pass() const {
    for (const auto& item : items)
        if (item.applicable && !item.pass) return false;
    return true;
}

const ChecklistItem* StructureChecklist::find(const std::string& id) const {
    for (const auto& item : items)
        if (item.id == id) return &item;
    return nullptr;
}

StructureChecklist validate_structure(const Tree& t) {
    StructureChecklist out;
    if (t.n < 3) {
        out.items.push_back({"order", false, false, "checklist needs n >= 3"});
        return out;
    }
    std::vector<int> deg = vertex_degrees(t);
    auto adj = adjacency(t);
    int delta = *std::max_element(deg.begin(), deg.end());
    RootedTree rt = root_by_max_degree(t);
    std::vector<int> h = depths(rt);

    // Leaves sit next to degree-2 vertices.
    {
        ChecklistItem item{"leaf-neighbor-deg2", true, true, ""};
        for (int v = 0; v < t.n && item.pass; ++v) {
            if (deg[v] != 1) continue;
            if (deg[adj[v][0]] != 2) {
                item.pass = false;
                item.witness = "leaf " + std::to_string(v) + " next to degree " +
                               std::to_string(deg[adj[v][0]]);
            }
        }
        out.items.push_back(std::move(item));
    }

    // At most one edge with both ends of degree 2.
    {
        ChecklistItem item{"one-22-edge", true, true, ""};
        int count = 0;
        std::string last;
        for (auto [u, v] : t.edges)
            if (deg[u] == 2 && deg[v] == 2) {
                ++count;
                last = vertex_pair(u, v);
            }
        if (count > 1) {
            item.pass = false;
            item.witness = std::to_string(count) + " such edges, e.g. " + last;
        }
        out.items.push_back(std::move(item));
    }

    // For every k: at most one k-k edge, and only for k = 2 or k = max degree.
    {
        ChecklistItem item{"kk-edges", t.n > 9, true, ""};
        std::map<int, int> kk;
        for (auto [u, v] : t.edges)
            if (deg[u] == deg[v]) ++kk[deg[u]];
        for (auto [k, count] : kk) {
            if (count > 1) {
                item.pass = false;
                item.witness = std::to_string(count) + " edges with both ends of degree " +
                               std::to_string(k);
            } else if (k != 2 && k != delta) {
                item.pass = false;
                item.witness = "equal-degree edge at degree " + std::to_string(k);
            }
        }
        out.items.push_back(std::move(item));
    }

    // Degrees strictly decrease away from the root, except one 2-2 edge
    // (small orders only) and one max-degree edge at the root.
    {
        ChecklistItem item{"degrees-decrease", true, true, ""};
        int used_22 = 0, used_delta = 0;
        for (int v = 0; v < t.n && item.pass; ++v) {
            if (v == rt.root) continue;
            int p = rt.parent[v];
            if (deg[v] < deg[p]) continue;
            if (deg[v] == 2 && deg[p] == 2 && t.n < 415 && used_22 == 0) {
                ++used_22;
                continue;
            }
            if (p == rt.root && deg[v] == delta && used_delta == 0) {
                ++used_delta;
                continue;
            }
            item.pass = false;
            item.witness = "edge " + vertex_pair(p, v) + " degrees " +
                           std::to_string(deg[p]) + "," + std::to_string(deg[v]);
        }
        out.items.push_back(std::move(item));
    }

    // Vertices of degree >= 6 touch the root.
    {
        ChecklistItem item{"deg6-near-root", true, true, ""};
        for (int v = 0; v < t.n && item.pass; ++v)
            if (deg[v] >= 6 && h[v] > 1) {
                item.pass = false;
                item.witness = "vertex " + std::to_string(v) + " of degree " +
                               std::to_string(deg[v]) + " at depth " + std::to_string(h[v]);
            }
        out.items.push_back(std::move(item));
    }

    // Degree counts: at most 11 of degree 3, at most 4 of degree 5, at most
    // one B_5 branch.
    {
        ChecklistItem item{"degree-3-5-counts", true, true, ""};
        int d3 = 0, d5 = 0, b5 = 0;
        for (int v = 0; v < t.n; ++v) {
            if (deg[v] == 3) ++d3;
            if (deg[v] == 5) ++d5;
            if (v != rt.root) {
                auto kind = classify_branch(rt, v);
                if (kind && kind->tag == BranchKind::Tag::B && kind->k == 5) ++b5;
            }
        }
        if (d3 > 11 || d5 > 4 || b5 > 1) {
            item.pass = false;
            item.witness = std::to_string(d3) + " of degree 3, " + std::to_string(d5) +
                           " of degree 5, " + std::to_string(b5) + " B_5 branches";
        }
        out.items.push_back(std::move(item));
    }

    // No non-root vertex of degree 6..15.
    {
        ChecklistItem item{"no-mid-degrees", true, true, ""};
        for (int v = 0; v < t.n && item.pass; ++v)
            if (v != rt.root && deg[v] >= 6 && deg[v] <= 15) {
                item.pass = false;
                item.witness = "vertex " + std::to_string(v) + " of degree " +
                               std::to_string(deg[v]);
            }
        out.items.push_back(std::move(item));
    }

    // Leaves within distance 5 of the root.
    {
        ChecklistItem item{"leaf-depth-5", true, true, ""};
        for (int v = 0; v < t.n && item.pass; ++v)
            if (deg[v] == 1 && h[v] > 5) {
                item.pass = false;
                item.witness = "leaf " + std::to_string(v) + " at depth " + std::to_string(h[v]);
            }
        out.items.push_back(std::move(item));
    }

    // At most one exceptional ending vertex, of maximal degree among them.
    {
        ChecklistItem item{"one-exceptional-ending", true, true, ""};
        std::vector<int> bset;
        std::vector<int> exceptional;
        for (int v = 0; v < t.n; ++v) {
            if (v == rt.root || deg[v] < 3) continue;
            bool has_pendant_pair = false;
            for (int c : rt.children[v])
                if (vertex_degree(rt, c) == 2 && rt.children[c].size() == 1 &&
                    rt.children[rt.children[c][0]].empty())
                    has_pendant_pair = true;
            if (!has_pendant_pair) continue;
            bset.push_back(v);
            auto kind = classify_branch(rt, v);
            if (!kind || kind->tag != BranchKind::Tag::B) exceptional.push_back(v);
        }
        if (exceptional.size() > 1) {
            item.pass = false;
            item.witness = std::to_string(exceptional.size()) + " exceptional ending vertices";
        } else if (exceptional.size() == 1) {
            int maxdeg = 0;
            for (int v : bset) maxdeg = std::max(maxdeg, deg[v]);
            if (deg[exceptional[0]] != maxdeg) {
                item.pass = false;
                item.witness = "exceptional vertex " + std::to_string(exceptional[0]) +
                               " does not have the largest ending degree";
            }
        }
        out.items.push_back(std::move(item));
    }

    return out;
}

}  // namespace abc
