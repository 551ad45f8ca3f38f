#include "abc/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "abc/ordering.hpp"
#include "abc/weights.hpp"

namespace abc {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;  // f(2,x) for every x

int kind_rank(const BranchKind& k) {
    switch (k.tag) {
        case BranchKind::Tag::B1Minus: return 0;
        case BranchKind::Tag::B: return 1;
        case BranchKind::Tag::BStar: return 2;
        case BranchKind::Tag::B3StarStar: return 3;
        case BranchKind::Tag::C: return 4;
    }
    return 5;
}

}  // namespace

BranchKind BranchKind::c_pure(int k) {
    std::vector<BranchKind> comp(k, BranchKind::b(3));
    return BranchKind::c(std::move(comp));
}

bool operator==(const BranchKind& a, const BranchKind& b) {
    return a.tag == b.tag && a.k == b.k && a.comp == b.comp;
}

bool kind_less(const BranchKind& a, const BranchKind& b) {
    if (a.tag != b.tag) return kind_rank(a) < kind_rank(b);
    if (a.k != b.k) return a.k < b.k;
    return std::lexicographical_compare(a.comp.begin(), a.comp.end(), b.comp.begin(),
                                        b.comp.end(), kind_less);
}

long long branch_size(const BranchKind& kind) {
    switch (kind.tag) {
        case BranchKind::Tag::B1Minus: return 2;
        case BranchKind::Tag::B: return 2LL * kind.k + 1;
        case BranchKind::Tag::BStar: return 2LL * kind.k + 2;
        case BranchKind::Tag::B3StarStar: return 10;
        case BranchKind::Tag::C: {
            long long total = 1;
            for (const auto& m : kind.comp) total += branch_size(m);
            return total;
        }
    }
    return 0;
}

int branch_attached_degree(const BranchKind& kind) {
    switch (kind.tag) {
        case BranchKind::Tag::B1Minus: return 2;
        case BranchKind::Tag::B: return kind.k + 1;
        case BranchKind::Tag::BStar: return kind.k + 1;
        case BranchKind::Tag::B3StarStar: return 4;
        case BranchKind::Tag::C: return static_cast<int>(kind.comp.size()) + 1;
    }
    return 0;
}

double branch_inner_weight(const BranchKind& kind) {
    switch (kind.tag) {
        case BranchKind::Tag::B1Minus: return kHalfSqrt2;
        case BranchKind::Tag::B: return 2.0 * kind.k * kHalfSqrt2;
        case BranchKind::Tag::BStar: return (2.0 * kind.k + 1.0) * kHalfSqrt2;
        case BranchKind::Tag::B3StarStar:
            return edge_weight_raw(4, 3) + 8.0 * kHalfSqrt2;
        case BranchKind::Tag::C: {
            double mid = static_cast<double>(kind.comp.size()) + 1.0;
            double total = 0.0;
            for (const auto& m : kind.comp)
                total += edge_weight_raw(mid, branch_attached_degree(m)) +
                         branch_inner_weight(m);
            return total;
        }
    }
    return 0.0;
}

long long FamilyConfig::vertex_count() const {
    long long total = 1;
    for (const auto& [kind, count] : branches) total += count * branch_size(kind);
    return total;
}

long long FamilyConfig::root_degree() const {
    long long total = 0;
    for (const auto& [kind, count] : branches) total += count;
    return total;
}

FamilyConfig normalize_config(FamilyConfig cfg) {
    std::sort(cfg.branches.begin(), cfg.branches.end(),
              [](const auto& a, const auto& b) { return kind_less(a.first, b.first); });
    std::vector<std::pair<BranchKind, long long>> merged;
    for (auto& [kind, count] : cfg.branches) {
        if (count == 0) continue;
        if (count < 0) throw std::invalid_argument("config: negative branch count");
        if (!merged.empty() && merged.back().first == kind)
            merged.back().second += count;
        else
            merged.emplace_back(std::move(kind), count);
    }
    cfg.branches = std::move(merged);
    return cfg;
}

bool kind_in_catalog(const BranchKind& kind, const CatalogLimits& limits) {
    switch (kind.tag) {
        case BranchKind::Tag::B1Minus:
        case BranchKind::Tag::B3StarStar:
            return true;
        case BranchKind::Tag::B:
            return kind.k >= 1 && (limits.unrestricted || kind.k <= 5);
        case BranchKind::Tag::BStar:
            return limits.unrestricted ? kind.k >= 1 : (kind.k == 2 || kind.k == 3);
        case BranchKind::Tag::C: {
            if (kind.comp.empty()) return false;
            int b2 = 0, special = 0;
            for (const auto& m : kind.comp) {
                if (m.tag == BranchKind::Tag::C) return false;  // depth cap
                if (!kind_in_catalog(m, limits)) return false;
                if (limits.unrestricted) continue;
                if (m.tag == BranchKind::Tag::B && m.k == 3) continue;
                if (m.tag == BranchKind::Tag::B && m.k == 2)
                    ++b2;
                else
                    ++special;  // BStar(2), BStar(3), B3StarStar, B(4), B(5)
            }
            if (!limits.unrestricted) {
                if (b2 > 11 || special > 1) return false;
                for (const auto& m : kind.comp)
                    if (m.tag == BranchKind::Tag::B1Minus || (m.tag == BranchKind::Tag::B && m.k == 1))
                        return false;
            }
            return true;
        }
    }
    return false;
}

std::string config_validate(const FamilyConfig& cfg, bool paper_constraints,
                            const CatalogLimits& limits) {
    if (cfg.branches.empty()) return "config has no branches";
    for (const auto& [kind, count] : cfg.branches) {
        if (count <= 0) return "non-positive branch count";
        if (!kind_in_catalog(kind, limits)) return "branch shape outside catalog";
    }
    if (!paper_constraints) return "";

    // Global counts, including members of C branches.
    long long b1m = 0, b2 = 0, b4 = 0, b5 = 0, starred = 0, irregular_c = 0;
    std::vector<long long> c_sizes;
    auto tally = [&](const BranchKind& kind, long long count) {
        switch (kind.tag) {
            case BranchKind::Tag::B1Minus: b1m += count; break;
            case BranchKind::Tag::B:
                if (kind.k == 2) b2 += count;
                if (kind.k == 4) b4 += count;
                if (kind.k == 5) b5 += count;
                break;
            case BranchKind::Tag::BStar: starred += count; break;
            case BranchKind::Tag::B3StarStar: starred += count; break;
            case BranchKind::Tag::C: break;
        }
    };
    for (const auto& [kind, count] : cfg.branches) {
        tally(kind, count);
        if (kind.tag != BranchKind::Tag::C) continue;
        long long b3_members = 0;
        bool irregular = false;
        for (const auto& m : kind.comp) {
            tally(m, count);
            if (m.tag == BranchKind::Tag::B && m.k == 3)
                ++b3_members;
            else
                irregular = true;
        }
        if (irregular) irregular_c += count;
        for (long long i = 0; i < count; ++i) c_sizes.push_back(b3_members);
    }
    if (b2 > 11) return "more than 11 B(2) branches";
    if (b4 > 4) return "more than 4 B(4) branches";
    if (b5 > 1) return "more than one B(5) branch";
    if (starred > 1) return "more than one starred / B3** branch";
    if (b1m > 3) return "more than 3 B1- branches";
    if (irregular_c > 1) return "more than one irregular C branch";
    if (!c_sizes.empty()) {
        auto [lo, hi] = std::minmax_element(c_sizes.begin(), c_sizes.end());
        if (*hi - *lo > 1) return "C branch B(3)-counts differ by more than 1";
    }
    return "";
}

namespace {

// Appends the branch below `attach`, using `next` as the first fresh id.
// Children are laid out succ-descending (B members before chains, etc.).
int append_branch(const BranchKind& kind, int attach, int next,
                  std::vector<std::pair<int, int>>& edges) {
    auto chain = [&](int from, int len) {
        int prev = from;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    };
    switch (kind.tag) {
        case BranchKind::Tag::B1Minus:
            chain(attach, 2);
            return next;
        case BranchKind::Tag::B: {
            int root = next++;
            edges.emplace_back(attach, root);
            for (int i = 0; i < kind.k; ++i) chain(root, 2);
            return next;
        }
        case BranchKind::Tag::BStar: {
            int root = next++;
            edges.emplace_back(attach, root);
            chain(root, 3);  // the extended pendant path first
            for (int i = 1; i < kind.k; ++i) chain(root, 2);
            return next;
        }
        case BranchKind::Tag::B3StarStar: {
            int root = next++;
            edges.emplace_back(attach, root);
            next = append_branch(BranchKind::b(2), root, next, edges);
            chain(root, 2);
            chain(root, 2);
            return next;
        }
        case BranchKind::Tag::C: {
            int root = next++;
            edges.emplace_back(attach, root);
            for (const auto& m : kind.comp) next = append_branch(m, root, next, edges);
            return next;
        }
    }
    return next;
}

}  // namespace

RootedTree build_branch(const BranchKind& kind, const CatalogLimits& limits) {
    if (!kind_in_catalog(kind, limits))
        throw std::invalid_argument("build_branch: shape outside catalog");
    // Build attached to a scratch vertex, then drop it.
    std::vector<std::pair<int, int>> edges;
    int total = append_branch(kind, 0, 1, edges);
    std::vector<std::pair<int, int>> inner;
    for (auto [u, v] : edges)
        if (u != 0 && v != 0) inner.emplace_back(u - 1, v - 1);
    Tree t = make_tree(total - 1, std::move(inner));
    return root_at(t, 0);
}

Tree assemble(const FamilyConfig& cfg) {
    if (cfg.branches.empty()) throw std::invalid_argument("assemble: empty config");
    // succ-descending branch order at the root.
    std::vector<std::pair<Code, const BranchKind*>> keyed;
    for (const auto& [kind, count] : cfg.branches) {
        Code code = canonical_code(build_branch(kind, CatalogLimits{true}));
        for (long long i = 0; i < count; ++i) keyed.emplace_back(code, &kind);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return code_less(b.first, a.first); });
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (const auto& [code, kind] : keyed) next = append_branch(*kind, 0, next, edges);
    return make_tree(next, std::move(edges));
}

double closed_form_abc(const FamilyConfig& cfg) {
    if (cfg.branches.empty()) throw std::invalid_argument("closed_form_abc: empty config");
    double droot = static_cast<double>(cfg.root_degree());
    double total = 0.0;
    for (const auto& [kind, count] : cfg.branches)
        total += static_cast<double>(count) *
                 (edge_weight_raw(droot, branch_attached_degree(kind)) + branch_inner_weight(kind));
    return total;
}

namespace {

// Structural classification of the subtree at v as a branch kind.
std::optional<BranchKind> classify(const RootedTree& rt, int v) {
    const auto& kids = rt.children[v];
    if (kids.empty()) return std::nullopt;

    bool all_leaves = true;
    for (int c : kids)
        if (!rt.children[c].empty()) all_leaves = false;
    if (all_leaves) {
        if (kids.size() == 1) return BranchKind::b1minus();
        return std::nullopt;
    }

    // All children are single-child chains: candidates B(k) / BStar(k).
    bool chain_kids = true;
    for (int c : kids)
        if (rt.children[c].size() != 1) chain_kids = false;
    if (chain_kids) {
        int extended = 0;
        for (int c : kids) {
            int g = rt.children[c][0];
            if (rt.children[g].empty()) continue;
            if (rt.children[g].size() == 1 && rt.children[rt.children[g][0]].empty())
                ++extended;
            else
                return std::nullopt;
        }
        int k = static_cast<int>(kids.size());
        if (extended == 0) return BranchKind::b(k);
        if (extended == 1) return BranchKind::bstar(k);
        return std::nullopt;
    }

    // Mixed children: classify each one; B3** beats the C reading.
    std::vector<BranchKind> members;
    members.reserve(kids.size());
    for (int c : kids) {
        auto m = classify(rt, c);
        if (!m) return std::nullopt;
        if (m->tag == BranchKind::Tag::C) return std::nullopt;  // depth cap
        members.push_back(std::move(*m));
    }
    std::sort(members.begin(), members.end(), kind_less);
    if (members.size() == 3 && members[0] == BranchKind::b1minus() &&
        members[1] == BranchKind::b1minus() && members[2] == BranchKind::b(2))
        return BranchKind::b3starstar();
    return BranchKind::c(std::move(members));
}

std::optional<FamilyConfig> recognize_at(const RootedTree& rt) {
    FamilyConfig cfg;
    for (int c : rt.children[rt.root]) {
        auto m = classify(rt, c);
        if (!m) return std::nullopt;
        cfg.branches.emplace_back(std::move(*m), 1);
    }
    if (cfg.branches.empty()) return std::nullopt;
    return normalize_config(std::move(cfg));
}

}  // namespace

std::optional<BranchKind> classify_branch(const RootedTree& rt, int v) { return classify(rt, v); }

std::optional<FamilyConfig> recognize(const Tree& t) {
    if (t.n < 3) return std::nullopt;
    std::vector<int> candidates;
    if (t.n <= 2048) {
        candidates.resize(t.n);
        for (int v = 0; v < t.n; ++v) candidates[v] = v;
    } else {
        // Large family trees root at the hub or next to it.
        std::vector<int> deg = vertex_degrees(t);
        int hub = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
        candidates.push_back(hub);
        for (auto [u, v] : t.edges) {
            if (u == hub) candidates.push_back(v);
            if (v == hub) candidates.push_back(u);
        }
    }
    for (int root : candidates) {
        auto cfg = recognize_at(root_at(t, root));
        if (cfg) return cfg;
    }
    return std::nullopt;
}

namespace {

nlohmann::json kind_to_json(const BranchKind& kind) {
    nlohmann::json j;
    switch (kind.tag) {
        case BranchKind::Tag::B1Minus: j["kind"] = "B1-"; break;
        case BranchKind::Tag::B:
            j["kind"] = "B";
            j["k"] = kind.k;
            break;
        case BranchKind::Tag::BStar:
            j["kind"] = "B*";
            j["k"] = kind.k;
            break;
        case BranchKind::Tag::B3StarStar: j["kind"] = "B3**"; break;
        case BranchKind::Tag::C: {
            j["kind"] = "C";
            long long b3 = 0;
            auto extras = nlohmann::json::array();
            for (const auto& m : kind.comp) {
                if (m.tag == BranchKind::Tag::B && m.k == 3)
                    ++b3;
                else
                    extras.push_back(kind_to_json(m));
            }
            j["b3"] = b3;
            j["extras"] = extras;
            break;
        }
    }
    return j;
}

BranchKind kind_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "B1-") return BranchKind::b1minus();
    if (kind == "B") return BranchKind::b(j.at("k").get<int>());
    if (kind == "B*") return BranchKind::bstar(j.at("k").get<int>());
    if (kind == "B3**") return BranchKind::b3starstar();
    if (kind == "C") {
        std::vector<BranchKind> comp(j.at("b3").get<long long>(), BranchKind::b(3));
        if (j.contains("extras"))
            for (const auto& e : j.at("extras")) comp.push_back(kind_from_json(e));
        std::sort(comp.begin(), comp.end(), kind_less);
        return BranchKind::c(std::move(comp));
    }
    throw std::invalid_argument("config json: unknown kind " + kind);
}

}  // namespace

std::string config_to_json(const FamilyConfig& cfg) {
    nlohmann::json j;
    auto& arr = j["branches"] = nlohmann::json::array();
    for (const auto& [kind, count] : cfg.branches) {
        nlohmann::json entry = kind_to_json(kind);
        entry["count"] = count;
        arr.push_back(entry);
    }
    return j.dump();
}

FamilyConfig config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FamilyConfig cfg;
    for (const auto& entry : j.at("branches"))
        cfg.branches.emplace_back(kind_from_json(entry),
                                  entry.value("count", static_cast<long long>(1)));
    return normalize_config(std::move(cfg));
}

}  // namespace abc
