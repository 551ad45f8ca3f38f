#include "abc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace abc {

Tree read_tree_text(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "n")
        throw std::runtime_error("tree text: expected header \"n <N>\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i < n - 1; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("tree text: truncated edge list");
        edges.emplace_back(u, v);
    }
    return make_tree(n, std::move(edges));
}

void write_tree_text(std::ostream& out, const Tree& t) {
    out << "n " << t.n << "\n";
    for (auto [u, v] : t.edges) out << u << " " << v << "\n";
}

Tree tree_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_tree(n, std::move(edges));
}

std::string tree_to_json(const Tree& t) {
    nlohmann::json j;
    j["n"] = t.n;
    auto& e = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : t.edges) e.push_back({u, v});
    return j.dump();
}

Tree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tree file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw std::runtime_error("empty tree file: " + path);
    if (text[pos] == '{') return tree_from_json(text);
    std::istringstream ss(text);
    return read_tree_text(ss);
}

void write_tree_file(const std::string& path, const Tree& t, bool json) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tree file: " + path);
    if (json)
        out << tree_to_json(t) << "\n";
    else
        write_tree_text(out, t);
}

std::string tree_to_dot(const Tree& t) {
    std::ostringstream out;
    out << "graph tree {\n";
    for (int v = 0; v < t.n; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : t.edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace abc
