#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cy3/lattice.hpp"

namespace cy3 {

namespace {

// Next non-comment, non-blank line; false at end of stream.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return true;
    }
    return false;
}

LatticePolytope parse_block(std::istream& in, const std::string& header) {
    std::istringstream hs(header);
    long long n = 0, k = 0;
    if (!(hs >> n >> k)) throw ParseError("expected header line \"n k\"");
    std::string trailing;
    if (hs >> trailing) throw ParseError("trailing tokens after header line");
    if (n < 2 || n > 4) throw ParseError("ambient dimension must be 2..4");
    if (k < 1) throw ParseError("point count must be positive");

    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<size_t>(k));
    std::string line;
    for (long long i = 0; i < k; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("unexpected end of input: expected " + std::to_string(k) +
                             " points, got " + std::to_string(i));
        std::istringstream ls(line);
        LatticePoint p(static_cast<size_t>(n));
        for (long long j = 0; j < n; ++j)
            if (!(ls >> p[static_cast<size_t>(j)]))
                throw ParseError("bad point on line: " + line);
        if (ls >> trailing) throw ParseError("too many coordinates on line: " + line);
        pts.push_back(std::move(p));
    }
    return LatticePolytope::hull(std::move(pts), static_cast<int>(n));
}

}  // namespace

LatticePolytope read_polytope(std::istream& in) {
    std::string header;
    if (!next_data_line(in, header)) throw ParseError("empty polytope input");
    return parse_block(in, header);
}

std::vector<LatticePolytope> read_polytopes(std::istream& in) {
    std::vector<LatticePolytope> out;
    std::string header;
    while (next_data_line(in, header)) out.push_back(parse_block(in, header));
    if (out.empty()) throw ParseError("empty polytope input");
    return out;
}

LatticePolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_polytope(in);
}

void write_polytope(std::ostream& out, const LatticePolytope& P) {
    out << P.dim() << ' ' << P.vertices().size() << '\n';
    for (const auto& v : P.vertices()) {
        for (size_t j = 0; j < v.size(); ++j) {
            if (j) out << ' ';
            out << v[j];
        }
        out << '\n';
    }
}

std::string polytope_to_string(const LatticePolytope& P) {
    std::ostringstream os;
    write_polytope(os, P);
    return os.str();
}

}  // namespace cy3
