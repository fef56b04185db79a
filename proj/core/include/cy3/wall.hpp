#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cy3/hodge.hpp"
#include "cy3/types.hpp"

namespace cy3 {

/**
 * The diffeomorphism invariants of a closed simply connected spin 6-manifold
 * with torsion-free cohomology: the ranks of H^2 and H^3, the symmetric
 * trilinear cup form mu on H^2, and the first Pontrjagin pairing p1 as a
 * linear form on H^2. Torsion is outside the data model.
 *
 * mu is stored as the packed multiset of entries with i <= j <= k.
 */
class WallInvariantSystem {
public:
    WallInvariantSystem(int rank2, long long rank3);

    int rank2() const { return rank2_; }
    long long rank3() const { return rank3_; }

    Int mu(int i, int j, int k) const;
    void set_mu(int i, int j, int k, Int value);

    Int p1(int i) const { return p1_[static_cast<size_t>(i)]; }
    void set_p1(int i, Int value) { p1_[static_cast<size_t>(i)] = value; }
    const std::vector<Int>& p1() const { return p1_; }

    /// mu evaluated on integer cohomology classes given in coordinates.
    Int evaluate_mu(const std::vector<Int>& x, const std::vector<Int>& y,
                    const std::vector<Int>& z) const;
    Int evaluate_p1(const std::vector<Int>& x) const;

    const std::vector<Int>& packed_mu() const { return mu_; }

    friend bool operator==(const WallInvariantSystem&, const WallInvariantSystem&) = default;

private:
    int rank2_;
    long long rank3_;
    std::vector<Int> mu_;  // packed over i <= j <= k
    std::vector<Int> p1_;
};

/// Rank-1 data (m, c, b): mu(H,H,H) = m, c2 . H = c, h^{1,2} = b.
struct Rank1Data {
    Int m = 0;
    Int c = 0;
    long long b = 0;
};

/// The rank-1 system of a polarized Calabi-Yau threefold: rank3 = 2 + 2b and
/// p1(H) = -2c.
WallInvariantSystem rank1_system(const Rank1Data& d);

struct CongruenceWitness {
    std::string congruence;  // "mod2" or "mod24"
    std::vector<Int> x;
    std::vector<Int> y;
};

struct CongruenceResult {
    bool pass = false;
    std::optional<CongruenceWitness> witness;  // a violating pair on failure
    explicit operator bool() const { return pass; }
};

/**
 * Decides whether mu(x,x,y) + mu(x,y,y) = 0 (mod 2) and
 * 4 mu(x,x,x) - p1(x) = 0 (mod 24) hold for all integer x, y.
 *
 * Both quantifiers reduce to basis checks: the mod-2 condition is linear in
 * the pair (x,y) mod 2, and once it holds g(x) = 4 mu(x,x,x) - p1(x) is
 * additive mod 24, so it is enough to check g on basis vectors.
 */
CongruenceResult check_congruences(const WallInvariantSystem& s);

struct IntInterval {
    Int lo = 0;
    Int hi = 0;
    bool contains(Int v) const { return lo <= v && v <= hi; }
    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// The closed interval [-36m - 80, 6m + 40] that must contain a - b for a
/// very amply polarized Calabi-Yau threefold with m = mu(H,H,H).
IntInterval kw_window(Int m);

/// True iff a - b lies in kw_window(m). Very-ampleness of the polarization
/// is the caller's responsibility; it is not machine-checkable here.
bool kw_check(const HodgePair& p, Int m);

struct Rank1MinM {
    Int m = 0;  // ceil((b - 81) / 36)
    /// The second bound m >= (-39 - b)/6 from the same inequality chain,
    /// vacuous for b >= 0; reported, never binding.
    Int discarded_lower = 0;
};

/// Smallest integer m compatible with h^{1,2} = b at rank 1.
Rank1MinM rank1_min_m(long long b);

/// Largest b compatible with a given m >= 0 at rank 1: 81 + 36m.
Int rank1_max_b(Int m);

/**
 * All c in [c_lo, c_hi] admissible for a rank-1 system with mu = m and
 * h^{1,2} = b: 2m + c = 0 (mod 12), filtered by kw_check((1,b), m); empty
 * when b exceeds rank1_max_b(m). The mod-2 congruence is automatic at
 * rank 1. Throws EmptyRange when c_lo > c_hi.
 */
std::vector<Int> rank1_admissible(Int m, long long b, Int c_lo, Int c_hi);

/// Exhaustive change-of-basis search with entries bounded by
/// coefficient_bound and determinant +-1. Rank <= 2 only (RankTooLarge).
bool systems_equivalent(const WallInvariantSystem& s, const WallInvariantSystem& t,
                        Int coefficient_bound = 5);

// ---- invariant-system text format ----
// line 1: "rank2 rank3"; then one line "i j k value" per stored mu entry
// (1-based, i <= j <= k; omitted entries are zero); final line
// "p1 v1 ... v_rank2". '#' lines and blank lines are ignored.

WallInvariantSystem read_system(std::istream& in);
WallInvariantSystem read_system_file(const std::string& path);
void write_system(std::ostream& out, const WallInvariantSystem& s);

}  // namespace cy3
