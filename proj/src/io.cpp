#include "exmatch/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "exmatch/errors.hpp"

namespace exmatch {

std::string write_khg(const KGraph& g) {
    std::ostringstream out;
    out << "khg 1\n";
    out << "n=" << g.n() << " k=" << g.k() << "\n";
    for (const VertexSet& e : g.edges()) {
        bool first = true;
        for (int v : e.to_vector()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

void write_khg_file(const KGraph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open for writing: " + path);
    f << write_khg(g);
    if (!f) throw domain_error("write failed: " + path);
}

namespace {

// Next effective (non-comment) line; false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            throw domain_error("line " + std::to_string(lineno) + ": CR line ending");
        if (!line.empty() && line[0] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
    throw domain_error("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

KGraph read_khg(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!next_line(in, line, lineno)) fail(lineno, "missing 'khg 1' header");
    if (line != "khg 1") fail(lineno, "expected 'khg 1' header");

    if (!next_line(in, line, lineno)) fail(lineno, "missing 'n=<n> k=<k>' line");
    int n = 0, k = 0;
    {
        std::istringstream hs(line);
        std::string tn, tk, extra;
        if (!(hs >> tn >> tk) || hs >> extra) fail(lineno, "expected 'n=<n> k=<k>'");
        auto parse_kv = [&](const std::string& tok, const char* key) {
            std::string prefix = std::string(key) + "=";
            if (tok.rfind(prefix, 0) != 0) fail(lineno, "expected '" + prefix + "<int>'");
            try {
                std::size_t used = 0;
                int value = std::stoi(tok.substr(prefix.size()), &used);
                if (used != tok.size() - prefix.size()) throw std::invalid_argument("");
                return value;
            } catch (const std::exception&) {
                fail(lineno, "expected '" + prefix + "<int>'");
            }
        };
        n = parse_kv(tn, "n");
        k = parse_kv(tk, "k");
    }
    if (k < 2 || n < k) fail(lineno, "require n >= k >= 2");

    std::vector<VertexSet> edges;
    bool have_prev = false;
    VertexSet prev;
    while (next_line(in, line, lineno)) {
        std::istringstream es(line);
        VertexSet e;
        int last = 0, v = 0, arity = 0;
        while (es >> v) {
            if (v < 1 || v > n) fail(lineno, "vertex outside [1, n]");
            if (v <= last) fail(lineno, "vertices must be strictly ascending");
            e.set(v);
            last = v;
            ++arity;
        }
        if (!es.eof()) fail(lineno, "malformed edge line");
        if (arity != k) fail(lineno, "edge is not a k-set");
        if (have_prev) {
            if (e == prev) fail(lineno, "duplicate edge");
            if (lex_less_same_card(e, prev)) fail(lineno, "edge lines out of lexicographic order");
        }
        prev = e;
        have_prev = true;
        edges.push_back(e);
    }
    return KGraph::build(n, k, std::move(edges), /*dedupe=*/false);
}

KGraph read_khg(const std::string& text) {
    std::istringstream in(text);
    return read_khg(in);
}

KGraph read_khg_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open for reading: " + path);
    return read_khg(f);
}

}  // namespace exmatch
