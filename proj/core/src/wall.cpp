#include "cy3/wall.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "exact.hpp"

namespace cy3 {

namespace {

size_t packed_size(int rank) {
    return static_cast<size_t>(rank) * (rank + 1) * (rank + 2) / 6;
}

size_t packed_index(int rank, int i, int j, int k) {
    std::array<int, 3> s{i, j, k};
    std::sort(s.begin(), s.end());
    size_t idx = 0;
    for (int a = 0; a < rank; ++a)
        for (int b = a; b < rank; ++b)
            for (int c = b; c < rank; ++c) {
                if (a == s[0] && b == s[1] && c == s[2]) return idx;
                ++idx;
            }
    throw PreconditionError("mu index out of range");
}

Int mod(Int v, Int m) {
    Int r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

WallInvariantSystem::WallInvariantSystem(int rank2, long long rank3)
    : rank2_(rank2),
      rank3_(rank3),
      mu_(packed_size(rank2), 0),
      p1_(static_cast<size_t>(rank2), 0) {
    if (rank2 < 0 || rank3 < 0) throw PreconditionError("ranks must be nonnegative");
}

Int WallInvariantSystem::mu(int i, int j, int k) const {
    return mu_[packed_index(rank2_, i, j, k)];
}

void WallInvariantSystem::set_mu(int i, int j, int k, Int value) {
    mu_[packed_index(rank2_, i, j, k)] = value;
}

Int WallInvariantSystem::evaluate_mu(const std::vector<Int>& x, const std::vector<Int>& y,
                                     const std::vector<Int>& z) const {
    detail::Wide acc = 0;
    for (int i = 0; i < rank2_; ++i)
        for (int j = 0; j < rank2_; ++j)
            for (int k = 0; k < rank2_; ++k)
                acc += detail::Wide(mu(i, j, k)) * x[static_cast<size_t>(i)] *
                       y[static_cast<size_t>(j)] * z[static_cast<size_t>(k)];
    return detail::narrow(acc);
}

Int WallInvariantSystem::evaluate_p1(const std::vector<Int>& x) const {
    detail::Wide acc = 0;
    for (int i = 0; i < rank2_; ++i) acc += detail::Wide(p1_[static_cast<size_t>(i)]) * x[static_cast<size_t>(i)];
    return detail::narrow(acc);
}

WallInvariantSystem rank1_system(const Rank1Data& d) {
    WallInvariantSystem s(1, 2 + 2 * d.b);
    s.set_mu(0, 0, 0, d.m);
    s.set_p1(0, -2 * d.c);  // p1 = -2 c2 on a Calabi-Yau threefold
    return s;
}

CongruenceResult check_congruences(const WallInvariantSystem& s) {
    const int r = s.rank2();
    auto basis = [&](int i) {
        std::vector<Int> e(static_cast<size_t>(r), 0);
        e[static_cast<size_t>(i)] = 1;
        return e;
    };

    // mu(x,x,y) + mu(x,y,y) is bilinear mod 2, so basis pairs decide it.
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (mod(s.mu(i, i, k) + s.mu(i, k, k), 2) != 0)
                return {false, CongruenceWitness{"mod2", basis(i), basis(k)}};
        }

    // Given the mod-2 condition, g(x) = 4 mu(x,x,x) - p1(x) is additive
    // mod 24, so basis values decide it.
    for (int i = 0; i < r; ++i) {
        if (mod(4 * s.mu(i, i, i) - s.p1(i), 24) != 0)
            return {false, CongruenceWitness{"mod24", basis(i), std::vector<Int>(static_cast<size_t>(r), 0)}};
    }
    return {true, std::nullopt};
}

IntInterval kw_window(Int m) { return {-36 * m - 80, 6 * m + 40}; }

bool kw_check(const HodgePair& p, Int m) {
    return kw_window(m).contains(static_cast<Int>(p.a - p.b));
}

Rank1MinM rank1_min_m(long long b) {
    if (b < 0) throw PreconditionError("b must be nonnegative");
    auto ceil_of = [](long long num, long long den) {  // den > 0
        long long q = num / den;
        if (num % den > 0) ++q;
        return q;
    };
    Rank1MinM out;
    out.m = ceil_of(b - 81, 36);
    out.discarded_lower = ceil_of(-39 - b, 6);
    return out;
}

Int rank1_max_b(Int m) {
    if (m < 0) throw PreconditionError("m must be nonnegative");
    return 81 + 36 * m;
}

std::vector<Int> rank1_admissible(Int m, long long b, Int c_lo, Int c_hi) {
    if (m < 1) throw PreconditionError("m must be positive");
    if (b < 0) throw PreconditionError("b must be nonnegative");
    if (c_lo > c_hi) throw EmptyRange("empty c range");
    std::vector<Int> out;
    if (b > rank1_max_b(m)) return out;
    if (!kw_check(HodgePair{1, b}, m)) return out;
    for (Int c = c_lo; c <= c_hi; ++c)
        if (mod(2 * m + c, 12) == 0) out.push_back(c);
    return out;
}

namespace {

// Transformed invariants under the basis change x -> U x.
WallInvariantSystem transformed(const WallInvariantSystem& s, const IntMatrix& U) {
    const int r = s.rank2();
    WallInvariantSystem t(r, s.rank3());
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
            for (int k = j; k < r; ++k) {
                detail::Wide acc = 0;
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b)
                        for (int c = 0; c < r; ++c)
                            acc += detail::Wide(s.mu(a, b, c)) *
                                   U[static_cast<size_t>(a)][static_cast<size_t>(i)] *
                                   U[static_cast<size_t>(b)][static_cast<size_t>(j)] *
                                   U[static_cast<size_t>(c)][static_cast<size_t>(k)];
                t.set_mu(i, j, k, detail::narrow(acc));
            }
    for (int i = 0; i < r; ++i) {
        detail::Wide acc = 0;
        for (int a = 0; a < r; ++a)
            acc += detail::Wide(s.p1(a)) * U[static_cast<size_t>(a)][static_cast<size_t>(i)];
        t.set_p1(i, detail::narrow(acc));
    }
    return t;
}

}  // namespace

bool systems_equivalent(const WallInvariantSystem& s, const WallInvariantSystem& t,
                        Int coefficient_bound) {
    if (s.rank2() > 2 || t.rank2() > 2) throw RankTooLarge("equivalence search handles rank2 <= 2");
    if (coefficient_bound < 1) throw PreconditionError("coefficient bound must be >= 1");
    if (s.rank2() != t.rank2() || s.rank3() != t.rank3()) return false;

    if (s.rank2() == 0) return true;
    if (s.rank2() == 1) {
        for (Int u : {Int{1}, Int{-1}}) {
            if (u * s.mu(0, 0, 0) == t.mu(0, 0, 0) && u * s.p1(0) == t.p1(0)) return true;
        }
        return false;
    }

    const Int B = coefficient_bound;
    for (Int a = -B; a <= B; ++a)
        for (Int b = -B; b <= B; ++b)
            for (Int c = -B; c <= B; ++c)
                for (Int d = -B; d <= B; ++d) {
                    Int det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    IntMatrix U{{a, b}, {c, d}};
                    if (transformed(s, U) == t) return true;
                }
    return false;
}

// ---- text format ----

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

WallInvariantSystem read_system(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty invariant-system input");
    std::istringstream hs(line);
    long long rank2 = 0, rank3 = 0;
    if (!(hs >> rank2 >> rank3)) throw ParseError("expected header line \"rank2 rank3\"");
    if (rank2 < 0 || rank2 > 16) throw ParseError("rank2 out of range");
    if (rank3 < 0) throw ParseError("rank3 must be nonnegative");

    WallInvariantSystem s(static_cast<int>(rank2), rank3);
    bool saw_p1 = false;
    while (next_data_line(in, line)) {
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "p1") {
            for (int i = 0; i < s.rank2(); ++i) {
                Int v;
                if (!(ls >> v)) throw ParseError("p1 line needs rank2 entries");
                s.set_p1(i, v);
            }
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens on p1 line");
            saw_p1 = true;
            break;
        }
        long long i = 0, j = 0, k = 0;
        Int v = 0;
        std::istringstream es(line);
        if (!(es >> i >> j >> k >> v)) throw ParseError("bad mu entry line: " + line);
        std::string extra;
        if (es >> extra) throw ParseError("trailing tokens on mu line: " + line);
        if (i < 1 || j < i || k < j || k > rank2)
            throw ParseError("mu indices must satisfy 1 <= i <= j <= k <= rank2");
        s.set_mu(static_cast<int>(i - 1), static_cast<int>(j - 1), static_cast<int>(k - 1), v);
    }
    if (!saw_p1) throw ParseError("missing p1 line");
    return s;
}

WallInvariantSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_system(in);
}

void write_system(std::ostream& out, const WallInvariantSystem& s) {
    out << s.rank2() << ' ' << s.rank3() << '\n';
    for (int i = 0; i < s.rank2(); ++i)
        for (int j = i; j < s.rank2(); ++j)
            for (int k = j; k < s.rank2(); ++k)
                out << (i + 1) << ' ' << (j + 1) << ' ' << (k + 1) << ' ' << s.mu(i, j, k) << '\n';
    out << "p1";
    for (int i = 0; i < s.rank2(); ++i) out << ' ' << s.p1(i);
    out << '\n';
}

}  // namespace cy3
