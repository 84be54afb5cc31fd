#include "oplab/frobenius.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oplab {

FrobeniusSymbol::FrobeniusSymbol(std::vector<int> top, std::vector<Part> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.size() != bottom_.size())
        throw std::invalid_argument("frobenius: rows must have equal length");
    for (std::size_t i = 0; i < top_.size(); ++i) {
        if (top_[i] < 0) throw std::invalid_argument("frobenius: negative top entry");
        if (i + 1 < top_.size() && top_[i] <= top_[i + 1])
            throw std::invalid_argument("frobenius: top row not strictly decreasing");
    }
    std::set<int> overlined_values;
    for (std::size_t i = 0; i < bottom_.size(); ++i) {
        const Part& p = bottom_[i];
        if (p.value < 0) throw std::invalid_argument("frobenius: negative bottom entry");
        if (i + 1 < bottom_.size()) {
            const Part& q = bottom_[i + 1];
            if (p.value < q.value)
                throw std::invalid_argument("frobenius: bottom row not nonincreasing");
            if (p.value == q.value && !p.overlined && q.overlined)
                throw std::invalid_argument("frobenius: overline must mark the first occurrence");
        }
        if (p.overlined && !overlined_values.insert(p.value).second)
            throw std::invalid_argument("frobenius: value overlined twice in bottom row");
    }
}

int weight(const FrobeniusSymbol& f) {
    int w = f.columns();
    for (int a : f.top()) w += a;
    for (const Part& b : f.bottom()) w += b.value;
    return w;
}

int non_overlined_bottom_count(const FrobeniusSymbol& f) {
    int j = 0;
    for (const Part& b : f.bottom()) j += b.overlined ? 0 : 1;
    return j;
}

std::string to_string(const FrobeniusSymbol& f) {
    std::string s = "(";
    for (int i = 0; i < f.columns(); ++i) {
        if (i) s += " ";
        s += std::to_string(f.top()[static_cast<std::size_t>(i)]);
    }
    s += " / ";
    for (int i = 0; i < f.columns(); ++i) {
        if (i) s += " ";
        s += std::to_string(f.bottom()[static_cast<std::size_t>(i)].value);
        if (f.bottom()[static_cast<std::size_t>(i)].overlined) s += "~";
    }
    return s + ")";
}

std::vector<int> successive_ranks(const FrobeniusSymbol& f) {
    const int n = f.columns();
    std::vector<int> r(static_cast<std::size_t>(n));
    int non_overlined_right = 0;
    for (int i = n - 1; i >= 0; --i) {
        r[static_cast<std::size_t>(i)] =
            f.top()[static_cast<std::size_t>(i)] - f.bottom()[static_cast<std::size_t>(i)].value -
            non_overlined_right;
        if (!f.bottom()[static_cast<std::size_t>(i)].overlined) ++non_overlined_right;
    }
    return r;
}

bool ranks_in_window(const FrobeniusSymbol& f, int k, int i) {
    for (int r : successive_ranks(f))
        if (r < -i + 2 || r > 2 * k - i - 1) return false;
    return true;
}

namespace {

// Strictly decreasing sequences of `len` nonnegative integers summing to
// `sum`, first entry at most `cap`, largest-first order.
void distinct_rows(int sum, int len, int cap, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    if (len == 0) {
        if (sum == 0) out.push_back(prefix);
        return;
    }
    const int min_tail = (len - 1) * (len - 2) / 2;  // 0+1+...+(len-2)
    for (int v = std::min(sum - min_tail, cap); v >= len - 1; --v) {
        prefix.push_back(v);
        distinct_rows(sum - v, len - 1, v - 1, prefix, out);
        prefix.pop_back();
    }
}

// Nonincreasing sequences of `len` nonnegative integers summing to `sum`.
void bottom_values(int sum, int len, int cap, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    if (len == 0) {
        if (sum == 0) out.push_back(prefix);
        return;
    }
    for (int v = std::min(sum, cap); v >= 0; --v) {
        if (v * len < sum) break;
        prefix.push_back(v);
        bottom_values(sum - v, len - 1, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<FrobeniusSymbol> enumerate_frobenius_symbols(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_frobenius_symbols: n < 0");
    std::vector<FrobeniusSymbol> out;
    if (n == 0) {
        out.push_back(FrobeniusSymbol());
        return out;
    }
    for (int cols = 1; cols + cols * (cols - 1) / 2 <= n; ++cols) {
        const int budget = n - cols;
        for (int top_sum = cols * (cols - 1) / 2; top_sum <= budget; ++top_sum) {
            std::vector<std::vector<int>> tops;
            std::vector<int> prefix;
            distinct_rows(top_sum, cols, top_sum, prefix, tops);
            if (tops.empty()) continue;
            std::vector<std::vector<int>> bottoms;
            bottom_values(budget - top_sum, cols, budget - top_sum, prefix, bottoms);
            for (const auto& top : tops) {
                for (const auto& bvals : bottoms) {
                    // Overline any subset of the distinct bottom values, mark
                    // placed on the first occurrence.
                    std::vector<int> first_pos;
                    for (std::size_t i = 0; i < bvals.size(); ++i)
                        if (i == 0 || bvals[i] != bvals[i - 1])
                            first_pos.push_back(static_cast<int>(i));
                    const unsigned d = static_cast<unsigned>(first_pos.size());
                    for (unsigned mask = 0; mask < (1u << d); ++mask) {
                        std::vector<Part> bottom;
                        bottom.reserve(bvals.size());
                        for (int v : bvals) bottom.push_back({v, false});
                        for (unsigned t = 0; t < d; ++t)
                            if (mask & (1u << t))
                                bottom[static_cast<std::size_t>(first_pos[t])].overlined = true;
                        out.push_back(FrobeniusSymbol(top, std::move(bottom)));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace oplab
