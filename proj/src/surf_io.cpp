#include "surfcyc/surf_io.hpp"

#include <fstream>
#include <sstream>

namespace surfcyc {

namespace {

Weight parse_weight(const std::string& tok) {
    if (tok == "inf") return Weight::infinity();
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return Weight(v);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad weight '" + tok + "'");
    }
}

int parse_int(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError,
                    std::string("bad ") + what + " '" + tok + "'");
    }
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

} // namespace

SurfFile parse_surf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        auto toks = tokens(line);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw Error(ErrorKind::ParseError, "empty file");
    if (rows[0].size() != 3)
        throw Error(ErrorKind::ParseError, "header must be 'n m b'");

    SurfFile file;
    GraphSpec& spec = file.spec;
    int n = parse_int(rows[0][0], "n");
    int m = parse_int(rows[0][1], "m");
    int b = parse_int(rows[0][2], "b");
    if (n < 1 || m < 1 || b < 0)
        throw Error(ErrorKind::ParseError, "bad header counts");
    size_t need = 1 + static_cast<size_t>(n) + 2 * static_cast<size_t>(m) +
                  static_cast<size_t>(b);
    if (rows.size() < need) throw Error(ErrorKind::ParseError, "truncated file");

    spec.vertex_count = n;
    spec.rotation.resize(n);
    size_t r = 1;
    for (int v = 0; v < n; ++v, ++r)
        for (const auto& t : rows[r])
            spec.rotation[v].push_back(parse_int(t, "dart id"));

    spec.darts.resize(2 * m);
    for (int i = 0; i < 2 * m; ++i, ++r) {
        const auto& row = rows[r];
        if (row.size() != 5)
            throw Error(ErrorKind::ParseError, "dart line needs 5 fields");
        int id = parse_int(row[0], "dart id");
        if (id < 0 || id >= 2 * m)
            throw Error(ErrorKind::ParseError, "dart id out of range");
        GraphSpec::DartSpec& ds = spec.darts[id];
        ds.origin = parse_int(row[1], "origin");
        ds.head = parse_int(row[2], "head");
        ds.weight = parse_weight(row[3]);
        ds.twin = parse_int(row[4], "twin");
    }
    for (int i = 0; i < b; ++i, ++r) {
        const auto& row = rows[r];
        if (row.size() != 2 || row[0] != "boundary")
            throw Error(ErrorKind::ParseError, "expected 'boundary <dart>'");
        spec.boundary_darts.push_back(parse_int(row[1], "boundary dart"));
    }
    for (; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 4 || row[0] != "pi")
            throw Error(ErrorKind::ParseError, "unexpected trailing line");
        file.pi.push_back(PiEntry{parse_int(row[1], "cover vertex"),
                                  parse_int(row[2], "base vertex"),
                                  parse_int(row[3], "level")});
    }
    return file;
}

std::string serialize_surf(const EmbeddedGraph& g,
                           const std::vector<PiEntry>& pi) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' '
        << g.boundary_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.darts_at(v);
        for (size_t i = 0; i < rot.size(); ++i)
            out << (i ? " " : "") << rot[i];
        out << '\n';
    }
    for (int d = 0; d < g.dart_count(); ++d)
        out << d << ' ' << g.origin(d) << ' ' << g.head(d) << ' '
            << g.weight(d).str() << ' ' << g.twin(d) << '\n';
    for (int f : g.boundary_faces())
        out << "boundary " << g.face_darts(f)[0] << '\n';
    for (const auto& e : pi)
        out << "pi " << e.vertex << ' ' << e.base << ' ' << e.level << '\n';
    return out.str();
}

SurfFile read_surf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_surf(ss.str());
}

void write_surf_file(const std::string& path, const EmbeddedGraph& g,
                     const std::vector<PiEntry>& pi) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << serialize_surf(g, pi);
}

} // namespace surfcyc
