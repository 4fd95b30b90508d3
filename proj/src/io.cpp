#include "twdl/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twdl {

namespace {

// Next content line: comments ('#' first non-space char) and blank lines
// are skipped. Returns false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') {
            continue;
        }
        return true;
    }
    return false;
}

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("parse error: " + what);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    return out;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) {
        parse_fail("missing header line \"n m\"");
    }
    long long n = 0;
    long long m = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> m) || n < 0 || m < 0) {
            parse_fail("bad header line \"" + line + "\"");
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) {
            parse_fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        }
        std::istringstream row(line);
        int u = 0;
        int v = 0;
        if (!(row >> u >> v)) {
            parse_fail("bad edge line \"" + line + "\"");
        }
        edges.emplace_back(u, v);
    }
    return build_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_input(path);
    try {
        return read_edge_list(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    auto out = open_output(path);
    write_edge_list(out, g);
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

IntervalModel read_interval_model(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) {
        parse_fail("missing header line \"n\"");
    }
    long long n = 0;
    {
        std::istringstream header(line);
        if (!(header >> n) || n < 0) {
            parse_fail("bad header line \"" + line + "\"");
        }
    }
    std::vector<std::pair<double, double>> spans(static_cast<std::size_t>(n), {0.0, 0.0});
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (long long i = 0; i < n; ++i) {
        if (!next_content_line(in, line)) {
            parse_fail("expected " + std::to_string(n) + " intervals, got " + std::to_string(i));
        }
        std::istringstream row(line);
        long long id = 0;
        double lo = 0;
        double hi = 0;
        if (!(row >> id >> lo >> hi)) {
            parse_fail("bad interval line \"" + line + "\"");
        }
        if (id < 0 || id >= n || seen[static_cast<std::size_t>(id)]) {
            parse_fail("interval id out of range or repeated in \"" + line + "\"");
        }
        seen[static_cast<std::size_t>(id)] = 1;
        spans[static_cast<std::size_t>(id)] = {lo, hi};
    }
    return make_interval_model(spans);
}

IntervalModel read_interval_model_file(const std::string& path) {
    auto in = open_input(path);
    try {
        return read_interval_model(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_interval_model(std::ostream& out, const IntervalModel& m) {
    out << m.size() << '\n';
    out << std::setprecision(17);
    for (int i = 0; i < m.size(); ++i) {
        out << i << ' ' << m.intervals[i].lo << ' ' << m.intervals[i].hi << '\n';
    }
}

void write_interval_model_file(const std::string& path, const IntervalModel& m) {
    auto out = open_output(path);
    write_interval_model(out, m);
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

} // namespace twdl
