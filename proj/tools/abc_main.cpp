#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "abc/catalog.hpp"
#include "abc/enumerate.hpp"
#include "abc/family.hpp"
#include "abc/greedy.hpp"
#include "abc/io.hpp"
#include "abc/ordering.hpp"
#include "abc/parallel.hpp"
#include "abc/transforms.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"
#include "abc/weights.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitFile = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitCounterexample = 5;

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json tree_json(const abc::Tree& t) {
    json j;
    j["n"] = t.n;
    auto& e = j["edges"] = json::array();
    for (auto [u, v] : t.edges) e.push_back({u, v});
    return j;
}

json checklist_json(const abc::StructureChecklist& list) {
    json arr = json::array();
    for (const auto& item : list.items) {
        json j;
        j["id"] = item.id;
        j["applicable"] = item.applicable;
        j["pass"] = item.pass;
        if (!item.witness.empty()) j["witness"] = item.witness;
        arr.push_back(j);
    }
    return arr;
}

json report_json(const abc::SweepReport& rep) {
    json j;
    j["lemma_id"] = rep.lemma_id;
    j["status"] = rep.status;
    j["evaluations"] = rep.evaluations;
    j["escalated"] = rep.escalated;
    j["min_value"] = rep.min_value;
    j["argmin"] = rep.argmin;
    j["elapsed_s"] = rep.elapsed_s;
    auto& ranges = j["ranges"] = json::array();
    for (const auto& r : rep.ranges) {
        json jr;
        jr["name"] = r.name;
        jr["lo"] = r.lo;
        jr["hi"] = r.hi;
        if (r.step != 1) jr["step"] = r.step;
        ranges.push_back(jr);
    }
    if (!rep.counterexamples.empty()) {
        auto& ces = j["counterexamples"] = json::array();
        for (const auto& ce : rep.counterexamples) {
            json jc;
            jc["point"] = ce.point;
            jc["value"] = ce.value;
            ces.push_back(jc);
        }
    }
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

abc::Tree load_tree(const std::string& path) {
    try {
        return abc::read_tree_file(path);
    } catch (const std::exception& e) {
        throw FileError(e.what());
    }
}

std::ostream& output_stream(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw FileError("cannot open output file: " + out_path);
    return file;
}

abc::Tree random_labeled_tree(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random tree needs n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (auto& p : prufer) p = pick(rng);
    std::vector<int> deg(n, 1);
    for (int p : prufer) ++deg[p];
    std::vector<std::pair<int, int>> edges;
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int p : prufer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, p);
        if (--deg[p] == 1) leaves.push(p);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return abc::make_tree(n, std::move(edges));
}

abc::ParamRange parse_param(const std::string& text) {
    auto eq = text.find('=');
    auto dots = text.find("..");
    if (eq == std::string::npos) throw std::invalid_argument("expected name=a..b: " + text);
    abc::ParamRange r;
    r.name = text.substr(0, eq);
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoll(text.substr(eq + 1));
    } else {
        r.lo = std::stoll(text.substr(eq + 1, dots - eq - 1));
        r.hi = std::stoll(text.substr(dots + 2));
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"atom-bond-connectivity index toolkit for trees"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "json";
    std::string out_path;
    int threads = abc::default_thread_count();
    std::uint64_t seed = 1;
    app.add_option("--format", format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--threads", threads, "worker threads");
    app.add_option("--seed", seed, "seed for randomized inputs");

    // index
    auto* cmd_index = app.add_subcommand("index", "ABC index of a tree file");
    std::string index_file;
    cmd_index->add_option("file", index_file)->required();

    // brute
    auto* cmd_brute = app.add_subcommand("brute", "exhaustive minimum over all trees of order n");
    int brute_n = 0;
    bool brute_all = false, brute_structure = false;
    int brute_cap = abc::FreeTreeStream::kDefaultCap;
    cmd_brute->add_option("n", brute_n)->required();
    cmd_brute->add_flag("--all-min", brute_all, "report every witness");
    cmd_brute->add_flag("--check-structure", brute_structure, "attach structural checklists");
    cmd_brute->add_option("--cap", brute_cap, "enumeration capacity");

    // greedy
    auto* cmd_greedy = app.add_subcommand("greedy", "greedy tree of a degree sequence");
    std::vector<int> greedy_degrees;
    cmd_greedy->add_option("degrees", greedy_degrees, "non-increasing degree sequence")
        ->required();

    // family
    auto* cmd_family = app.add_subcommand("family", "best structured family config of order n");
    long long family_n = 0;
    bool family_unconstrained = false;
    std::string family_emit;
    cmd_family->add_option("n", family_n)->required();
    cmd_family->add_flag("--unconstrained", family_unconstrained);
    cmd_family->add_option("--emit-tree", family_emit, "write the assembled tree (json)");

    // gamma
    auto* cmd_gamma = app.add_subcommand("gamma", "asymptotic bounds for a range of n");
    long long gamma_from = 0, gamma_to = 0, gamma_step = 1;
    cmd_gamma->add_option("from", gamma_from)->required();
    cmd_gamma->add_option("to", gamma_to)->required();
    cmd_gamma->add_option("--step", gamma_step);

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "family search over a range, CSV table");
    long long scan_from = 0, scan_to = 0;
    cmd_scan->add_option("from", scan_from)->required();
    cmd_scan->add_option("to", scan_to)->required();

    // local-search
    auto* cmd_local = app.add_subcommand("local-search", "descent over the rewrite moves");
    std::string local_file, local_trace;
    int local_budget = 1000, local_random = 0;
    cmd_local->add_option("file", local_file);
    cmd_local->add_option("--budget", local_budget);
    cmd_local->add_option("--trace", local_trace, "trace file (jsonl)");
    cmd_local->add_option("--random", local_random, "start from a random labeled tree of this order");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "inequality sweep for a registered lemma");
    std::string verify_id;
    std::vector<std::string> verify_params;
    bool verify_full = false, verify_list = false;
    cmd_verify->add_option("lemma", verify_id);
    cmd_verify->add_option("--param", verify_params, "range override name=a..b");
    cmd_verify->add_flag("--full", verify_full, "extended box where available");
    cmd_verify->add_flag("--list", verify_list, "list registered lemmas");

    // compare
    auto* cmd_compare = app.add_subcommand("compare", "compare two trees (index and ordering)");
    std::string cmp_a, cmp_b;
    cmd_compare->add_option("a", cmp_a)->required();
    cmd_compare->add_option("b", cmp_b)->required();

    // export
    auto* cmd_export = app.add_subcommand("export", "convert a tree file");
    std::string export_file;
    bool export_dot = false, export_json = false;
    cmd_export->add_option("file", export_file)->required();
    cmd_export->add_flag("--dot", export_dot);
    cmd_export->add_flag("--json", export_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    std::ofstream out_file;
    try {
        std::ostream& out = output_stream(out_path, out_file);

        if (*cmd_index) {
            abc::Tree t = load_tree(index_file);
            json j;
            j["n"] = t.n;
            j["abc"] = abc::abc_index(t);
            out << j.dump() << "\n";
            return 0;
        }

        if (*cmd_brute) {
            abc::BruteForceOptions opts;
            opts.cap = brute_cap;
            opts.threads = threads;
            abc::SearchResult res = abc::brute_force_min(brute_n, opts);
            json j;
            j["n"] = res.n;
            j["best_value"] = res.best_value;
            j["witness_count"] = res.witnesses.size();
            j["examined"] = res.stats.examined;
            j["elapsed_s"] = res.stats.elapsed_s;
            auto& ws = j["witnesses"] = json::array();
            std::size_t limit = brute_all ? res.witnesses.size() : 1;
            for (std::size_t i = 0; i < res.witnesses.size() && i < limit; ++i) {
                json w;
                w["tree"] = tree_json(res.witnesses[i]);
                if (brute_structure)
                    w["structure"] = checklist_json(abc::validate_structure(res.witnesses[i]));
                ws.push_back(w);
            }
            out << j.dump() << "\n";
            return 0;
        }

        if (*cmd_greedy) {
            abc::RootedTree rt = abc::greedy_tree(abc::DegreeSequence{greedy_degrees});
            json j;
            j["degrees"] = greedy_degrees;
            j["abc"] = abc::abc_index(rt.tree);
            j["tree"] = tree_json(rt.tree);
            out << j.dump() << "\n";
            return 0;
        }

        if (*cmd_family) {
            abc::FamilySearchOptions opts;
            opts.paper_constraints = !family_unconstrained;
            opts.threads = threads;
            abc::FamilySearchResult res = abc::family_search(family_n, opts);
            json j;
            j["n"] = res.n;
            j["r"] = res.r;
            j["s"] = res.s;
            j["best_value"] = res.best_value;
            j["config"] = json::parse(abc::config_to_json(res.best_config));
            if (res.ties.size() > 1) {
                auto& ties = j["ties"] = json::array();
                for (const auto& cfg : res.ties) ties.push_back(json::parse(abc::config_to_json(cfg)));
            }
            if (family_n >= 3) {
                abc::GammaBounds b = abc::gamma_bounds(family_n);
                j["lower"] = b.lower;
                j["upper"] = b.upper;
            }
            out << j.dump() << "\n";
            if (!family_emit.empty())
                abc::write_tree_file(family_emit, abc::assemble(res.best_config), true);
            return 0;
        }

        if (*cmd_gamma) {
            if (format == "csv" || format == "text") {
                out << "n,lower,upper\n";
                for (long long n = gamma_from; n <= gamma_to; n += gamma_step) {
                    abc::GammaBounds b = abc::gamma_bounds(n);
                    out << n << "," << abc::format_real(b.lower) << ","
                        << abc::format_real(b.upper) << "\n";
                }
            } else {
                json rows = json::array();
                for (long long n = gamma_from; n <= gamma_to; n += gamma_step) {
                    abc::GammaBounds b = abc::gamma_bounds(n);
                    json j;
                    j["n"] = n;
                    j["lower"] = b.lower;
                    j["upper"] = b.upper;
                    j["c0"] = b.c0;
                    rows.push_back(j);
                }
                out << rows.dump() << "\n";
            }
            return 0;
        }

        if (*cmd_scan) {
            abc::FamilySearchOptions opts;
            opts.threads = threads;
            auto rows = abc::transition_scan(scan_from, scan_to, opts);
            if (format == "json") {
                json arr = json::array();
                for (const auto& row : rows) {
                    json j;
                    j["n"] = row.n;
                    j["r"] = row.r;
                    j["s"] = row.s;
                    j["best_value"] = row.best_value;
                    j["lower"] = row.lower;
                    j["upper"] = row.upper;
                    arr.push_back(j);
                }
                out << arr.dump() << "\n";
            } else {
                out << "n,r,s,best_value,lower,upper\n";
                for (const auto& row : rows)
                    out << row.n << "," << row.r << "," << row.s << ","
                        << abc::format_real(row.best_value) << ","
                        << abc::format_real(row.lower) << "," << abc::format_real(row.upper)
                        << "\n";
            }
            return 0;
        }

        if (*cmd_local) {
            abc::Tree t = local_random > 0 ? random_labeled_tree(local_random, seed)
                                           : load_tree(local_file);
            double before = abc::abc_index(t);
            abc::LocalSearchResult res = abc::local_search(t, local_budget);
            json j;
            j["n"] = t.n;
            j["abc_start"] = before;
            j["abc"] = res.abc;
            j["moves"] = res.trace.size();
            j["budget_exhausted"] = res.budget_exhausted;
            j["tree"] = tree_json(res.tree);
            out << j.dump() << "\n";
            if (!local_trace.empty()) {
                std::ofstream tf(local_trace);
                if (!tf) throw FileError("cannot open trace file: " + local_trace);
                for (const auto& rec : res.trace) {
                    json r;
                    r["move"] = std::string(abc::move_kind_name(rec.kind));
                    r["abc"] = rec.abc_after;
                    tf << r.dump() << "\n";
                }
            }
            return 0;
        }

        if (*cmd_verify) {
            if (verify_list) {
                json arr = json::array();
                for (const auto& info : abc::lemma_registry()) {
                    json j;
                    j["id"] = info.id;
                    j["summary"] = info.summary;
                    auto& box = j["default_box"] = json::array();
                    for (const auto& r : info.default_box) {
                        json jr;
                        jr["name"] = r.name;
                        jr["lo"] = r.lo;
                        jr["hi"] = r.hi;
                        if (r.step != 1) jr["step"] = r.step;
                        box.push_back(jr);
                    }
                    j["full_box"] = info.has_full_box;
                    arr.push_back(j);
                }
                out << arr.dump() << "\n";
                return 0;
            }
            if (verify_id.empty()) {
                std::cerr << "verify: lemma id required (or --list)\n";
                return kExitUsage;
            }
            if (!abc::lemma_known(verify_id)) {
                std::cerr << "verify: unknown lemma id " << verify_id << "\n";
                return kExitUsage;
            }
            abc::SweepSpec spec;
            spec.lemma_id = verify_id;
            spec.full = verify_full;
            spec.threads = threads;
            for (const auto& p : verify_params) spec.ranges.push_back(parse_param(p));
            abc::SweepReport rep = abc::sweep(spec);
            out << report_json(rep).dump() << "\n";
            return rep.status == "verified" ? 0 : kExitCounterexample;
        }

        if (*cmd_compare) {
            abc::Tree a = load_tree(cmp_a);
            abc::Tree b = load_tree(cmp_b);
            abc::RootedTree ra = abc::root_by_max_degree(a);
            abc::RootedTree rb = abc::root_by_max_degree(b);
            abc::SuccOrder ord = abc::compare_subtrees(ra, rb);
            json j;
            j["abc_a"] = abc::abc_index(a);
            j["abc_b"] = abc::abc_index(b);
            j["succ"] = ord == abc::SuccOrder::Equal ? "=" : (ord == abc::SuccOrder::Greater ? ">" : "<");
            j["isomorphic"] = ord == abc::SuccOrder::Equal;
            out << j.dump() << "\n";
            return 0;
        }

        if (*cmd_export) {
            abc::Tree t = load_tree(export_file);
            if (export_dot)
                out << abc::tree_to_dot(t);
            else if (export_json)
                out << abc::tree_to_json(t) << "\n";
            else
                abc::write_tree_text(out, t);
            return 0;
        }
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    } catch (const abc::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
