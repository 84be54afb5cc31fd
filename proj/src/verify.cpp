#include "oplab/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "oplab/durfee.hpp"
#include "oplab/frobenius.hpp"
#include "oplab/hook.hpp"
#include "oplab/multiplicity.hpp"
#include "oplab/overpartition.hpp"
#include "oplab/path.hpp"

namespace oplab {

long long CountTable::at(int n, int j, int N) const {
    auto it = cells.find({n, j, N});
    return it == cells.end() ? 0 : it->second;
}

std::map<int, long long> CountTable::weight_marginal() const {
    std::map<int, long long> out;
    for (const auto& [key, v] : cells) out[std::get<0>(key)] += v;
    return out;
}

namespace {

int env_limit(const char* name, int fallback) {
    const char* s = std::getenv(name);
    if (!s) return fallback;
    const int v = std::atoi(s);
    return v > 0 ? v : fallback;
}

}  // namespace

ResourceLimits resource_limits() {
    return ResourceLimits{env_limit("OPLAB_MAX_N", 40), env_limit("OPLAB_MAX_K", 8),
                          env_limit("OPLAB_MAX_QMAX", 120)};
}

namespace {

void guard(int k, int nmax) {
    const ResourceLimits lim = resource_limits();
    if (k > lim.max_k)
        throw resource_limit_error("k=" + std::to_string(k) + " exceeds ceiling " +
                                   std::to_string(lim.max_k));
    if (nmax > lim.max_n)
        throw resource_limit_error("nmax=" + std::to_string(nmax) + " exceeds ceiling " +
                                   std::to_string(lim.max_n));
}

CountTable family_b(int k, int i, int nmax) {
    CountTable t{'B', k, i, nmax, {}};
    for (int n = 0; n <= nmax; ++n)
        for (const Overpartition& op : enumerate_overpartitions(n)) {
            if (!in_b_class(op, k, i)) continue;
            const auto div = multuple_division(multiplicity_sequence(op));
            t.cells[{n, overline_count(op), div.length}] += 1;
        }
    return t;
}

CountTable family_c(int k, int i, int nmax) {
    CountTable t{'C', k, i, nmax, {}};
    for (int n = 0; n <= nmax; ++n)
        for (const FrobeniusSymbol& f : enumerate_frobenius_symbols(n)) {
            if (!ranks_in_window(f, k, i)) continue;
            t.cells[{n, non_overlined_bottom_count(f), f.columns()}] += 1;
        }
    return t;
}

CountTable family_d(int k, int i, int nmax) {
    CountTable t{'D', k, i, nmax, {}};
    for (int n = 0; n <= nmax; ++n)
        for (const Overpartition& op : enumerate_overpartitions(n)) {
            const auto profile = durfee_dissection(op, k, i);
            if (!profile) continue;
            t.cells[{n, overline_count(op), profile->sizes.front()}] += 1;
        }
    return t;
}

CountTable family_e(int k, int i, int nmax) {
    CountTable t{'E', k, i, nmax, {}};
    for (int n = 0; n <= nmax; ++n)
        for (const LatticePath& p : enumerate_paths(k, i, n))
            t.cells[{n, south_count(p), static_cast<int>(peaks(p).size())}] += 1;
    return t;
}

Discrepancy compare_tables(const CountTable& a, const CountTable& b) {
    Discrepancy d;
    std::set<std::tuple<int, int, int>> keys;
    for (const auto& [key, v] : a.cells) keys.insert(key);
    for (const auto& [key, v] : b.cells) keys.insert(key);
    for (const auto& key : keys) {
        const auto [n, j, N] = key;
        const long long va = a.at(n, j, N), vb = b.at(n, j, N);
        if (va != vb) {
            d.found = true;
            d.left = std::string(1, a.family);
            d.right = std::string(1, b.family);
            d.n = n, d.j = j, d.N = N;
            d.left_count = va, d.right_count = vb;
            return d;
        }
    }
    return d;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

}  // namespace

CountTable count_family(char family, int k, int i, int nmax) {
    guard(k, nmax);
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("count_family: need k >= 2, 1 <= i <= k");
    switch (family) {
        case 'B': return family_b(k, i, nmax);
        case 'C': return family_c(k, i, nmax);
        case 'D': return family_d(k, i, nmax);
        case 'E': return family_e(k, i, nmax);
    }
    throw std::invalid_argument("count_family: family must be one of B, C, D, E");
}

VerifyReport verify_main(int k, int i, int nmax) {
    Timer timer;
    VerifyReport rep{"main", k, i, nmax, false, {}, 0.0};
    const CountTable b = count_family('B', k, i, nmax);
    const CountTable c = count_family('C', k, i, nmax);
    const CountTable d = count_family('D', k, i, nmax);
    const CountTable e = count_family('E', k, i, nmax);
    for (const CountTable* other : {&c, &d, &e}) {
        Discrepancy disc = compare_tables(b, *other);
        if (disc.found) {
            rep.first = disc;
            rep.elapsed_ms = timer.ms();
            return rep;
        }
    }
    rep.pass = true;
    rep.elapsed_ms = timer.ms();
    return rep;
}

namespace {

// Partitions of 0..nmax into parts from the given allowed-residue test.
template <typename AllowFn>
std::vector<long long> restricted_partition_counts(int nmax, AllowFn allow) {
    std::vector<long long> dp(static_cast<std::size_t>(nmax) + 1, 0);
    dp[0] = 1;
    for (int v = 1; v <= nmax; ++v) {
        if (!allow(v)) continue;
        for (int n = v; n <= nmax; ++n) dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - v)];
    }
    return dp;
}

// Partitions into distinct parts >= 1.
std::vector<long long> distinct_partition_counts(int nmax) {
    std::vector<long long> dp(static_cast<std::size_t>(nmax) + 1, 0);
    dp[0] = 1;
    for (int v = 1; v <= nmax; ++v)
        for (int n = nmax; n >= v; --n) dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - v)];
    return dp;
}

std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size(), 0);
    for (std::size_t n = 0; n < out.size(); ++n)
        for (std::size_t m = 0; m <= n; ++m) out[n] += a[m] * b[n - m];
    return out;
}

// Overpartitions of n with non-overlined parts not congruent to 0, +-t
// modulo 2k; with_zero adds the optional overlined zero of superpartitions.
std::vector<long long> congruence_overpartition_counts(int nmax, int k, int t, bool with_zero) {
    auto allow = [&](int v) {
        const int r = v % (2 * k);
        return r != 0 && r != t % (2 * k) && r != (2 * k - t % (2 * k)) % (2 * k);
    };
    std::vector<long long> dist = distinct_partition_counts(nmax);
    if (with_zero)
        for (auto& v : dist) v *= 2;
    return convolve(dist, restricted_partition_counts(nmax, allow));
}

bool superpartition_gap_ok(const Superpartition& sp, int k) {
    const auto& parts = sp.parts();
    const int s = static_cast<int>(parts.size());
    for (int l = 0; l + k - 1 < s; ++l) {
        const Part& lo = parts[static_cast<std::size_t>(l + k - 1)];
        const int gap = parts[static_cast<std::size_t>(l)].value - lo.value;
        if (gap < (lo.overlined ? 1 : 2)) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_prop71(int k, int i, int nmax) {
    guard(k, nmax);
    Timer timer;
    VerifyReport rep{"prop71", k, i, nmax, false, {}, 0.0};
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("prop71: need k >= 2, 1 <= i <= k");

    auto allow = [&](int v) {
        if (v % 4 == 2) return false;
        const int r = v % (4 * k);
        const int bad = (2 * i - 1) % (4 * k);
        return r != 0 && r != bad && r != (4 * k - bad) % (4 * k);
    };
    const std::vector<long long> side1 = restricted_partition_counts(nmax, allow);

    std::vector<long long> side2(static_cast<std::size_t>(nmax) + 1, 0);
    for (int n = 0; n <= nmax; ++n) {
        for (const auto& mu : enumerate_partitions(n)) {
            bool ok = true;
            for (std::size_t t = 0; ok && t + 1 < mu.size(); ++t)
                if (mu[t] % 2 == 1 && mu[t] == mu[t + 1]) ok = false;  // repeated odd part
            if (!ok) continue;
            for (std::size_t l = 0; ok && l + static_cast<std::size_t>(k) - 1 < mu.size(); ++l) {
                const int lo = mu[l + static_cast<std::size_t>(k) - 1];
                if (mu[l] - lo < (lo % 2 == 0 ? 3 : 2)) ok = false;
            }
            if (!ok) continue;
            int f12 = 0;
            for (int v : mu) f12 += (v == 1 || v == 2) ? 1 : 0;
            if (f12 < i) side2[static_cast<std::size_t>(n)] += 1;
        }
    }

    // 2-modular diagrams of weight n, through the corner-erasing map: the
    // overpartition of weight w with j marks stands for a diagram of weight
    // 2w - j.
    std::vector<long long> side3(static_cast<std::size_t>(nmax) + 1, 0);
    std::vector<long long> side4(static_cast<std::size_t>(nmax) + 1, 0);
    for (int w = 0; w <= nmax; ++w) {  // diagram weight 2w - j is at least w
        for (const Overpartition& op : enumerate_overpartitions(w)) {
            const int n = 2 * w - overline_count(op);
            if (n > nmax) continue;
            if (ranks_in_window(overpartition_to_frobenius(op), k, i))
                side3[static_cast<std::size_t>(n)] += 1;
            if (durfee_dissection(op, k, i))
                side4[static_cast<std::size_t>(n)] += 1;
        }
    }

    std::vector<long long> side5(static_cast<std::size_t>(nmax) + 1, 0);
    for (int major = 0; major <= nmax; ++major)
        for (const LatticePath& p : enumerate_paths(k, i, major)) {
            const int n = 2 * major - south_count(p);
            if (n <= nmax) side5[static_cast<std::size_t>(n)] += 1;
        }

    const std::vector<const std::vector<long long>*> sides = {&side1, &side2, &side3, &side4,
                                                              &side5};
    const char* names[] = {"congruence", "gap", "modular-ranks", "modular-durfee", "paths"};
    for (int n = 0; n <= nmax; ++n)
        for (std::size_t s = 1; s < sides.size(); ++s)
            if ((*sides[0])[static_cast<std::size_t>(n)] != (*sides[s])[static_cast<std::size_t>(n)]) {
                rep.first.found = true;
                rep.first.left = names[0];
                rep.first.right = names[s];
                rep.first.n = n;
                rep.first.left_count = (*sides[0])[static_cast<std::size_t>(n)];
                rep.first.right_count = (*sides[s])[static_cast<std::size_t>(n)];
                rep.elapsed_ms = timer.ms();
                return rep;
            }
    rep.pass = true;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_thm72(int k, int i, int nmax) {
    guard(k, nmax);
    Timer timer;
    VerifyReport rep{"thm72", k, i, nmax, false, {}, 0.0};
    if (k < 2 || i < 1 || i > k - 1) throw std::invalid_argument("thm72: need 1 <= i <= k-1");
    const auto bi = count_family('B', k, i, nmax).weight_marginal();
    const auto bi1 = count_family('B', k, i + 1, nmax).weight_marginal();
    const auto rhs = congruence_overpartition_counts(nmax, k, i, /*with_zero=*/true);
    for (int n = 0; n <= nmax; ++n) {
        long long lhs = 0;
        if (auto it = bi.find(n); it != bi.end()) lhs += it->second;
        if (auto it = bi1.find(n); it != bi1.end()) lhs += it->second;
        if (lhs != rhs[static_cast<std::size_t>(n)]) {
            rep.first = {true, "class-sum", "superpartitions", n, 0, 0, lhs,
                         rhs[static_cast<std::size_t>(n)]};
            rep.elapsed_ms = timer.ms();
            return rep;
        }
    }
    rep.pass = true;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_thm73(int k, int i, int nmax) {
    guard(k, nmax);
    Timer timer;
    VerifyReport rep{"thm73", k, i, nmax, false, {}, 0.0};
    if (k < 3 || i < 2 || i > k - 1) throw std::invalid_argument("thm73: need 2 <= i <= k-1");
    std::vector<long long> lhs(static_cast<std::size_t>(nmax) + 1, 0);
    for (int n = 0; n <= nmax; ++n)
        for (const Superpartition& sp : enumerate_superpartitions(n)) {
            if (!superpartition_gap_ok(sp, k)) continue;
            int ones = 0;
            for (const Part& p : sp.parts()) {
                if (p.value == 1 && !p.overlined) ++ones;
                if (p.value == 0) ++ones;
            }
            if (ones <= i - 1) lhs[static_cast<std::size_t>(n)] += 1;
        }
    const auto rhs_i = congruence_overpartition_counts(nmax, k, i, /*with_zero=*/false);
    const auto rhs_im1 = congruence_overpartition_counts(nmax, k, i - 1, /*with_zero=*/false);
    for (int n = 0; n <= nmax; ++n) {
        const long long rhs = rhs_i[static_cast<std::size_t>(n)] + rhs_im1[static_cast<std::size_t>(n)];
        if (lhs[static_cast<std::size_t>(n)] != rhs) {
            rep.first = {true, "superpartitions", "congruence-sum", n, 0, 0,
                         lhs[static_cast<std::size_t>(n)], rhs};
            rep.elapsed_ms = timer.ms();
            return rep;
        }
    }
    rep.pass = true;
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerifyReport verify_section7(const std::string& which, int k, int i, int nmax) {
    if (which == "prop71") return verify_prop71(k, i, nmax);
    if (which == "thm72") return verify_thm72(k, i, nmax);
    if (which == "thm73") return verify_thm73(k, i, nmax);
    throw std::invalid_argument("verify_section7: which must be prop71, thm72 or thm73");
}

}  // namespace oplab
