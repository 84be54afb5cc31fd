#include "oplab/overpartition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oplab {

namespace {

void canonicalize(std::vector<Part>& parts) {
    // Nonincreasing by value; overlined copy last among equal values.
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.overlined < b.overlined;
    });
}

void check_overline_multiplicity(const std::vector<Part>& parts) {
    std::set<int> seen;
    for (const Part& p : parts)
        if (p.overlined && !seen.insert(p.value).second)
            throw std::invalid_argument("overpartition: value overlined twice");
}

}  // namespace

Overpartition::Overpartition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (const Part& p : parts_)
        if (p.value <= 0) throw std::invalid_argument("overpartition: parts must be positive");
    canonicalize(parts_);
    check_overline_multiplicity(parts_);
}

int weight(const Overpartition& op) {
    int w = 0;
    for (const Part& p : op.parts()) w += p.value;
    return w;
}

int overline_count(const Overpartition& op) {
    int j = 0;
    for (const Part& p : op.parts()) j += p.overlined ? 1 : 0;
    return j;
}

Overpartition make_overpartition(std::initializer_list<std::pair<int, bool>> parts) {
    std::vector<Part> v;
    v.reserve(parts.size());
    for (const auto& [value, overlined] : parts) v.push_back({value, overlined});
    return Overpartition(std::move(v));
}

std::string to_string(const Overpartition& op) {
    std::string s = "(";
    for (std::size_t i = 0; i < op.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(op.parts()[i].value);
        if (op.parts()[i].overlined) s += "~";
    }
    return s + ")";
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_rec(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
    std::vector<Overpartition> out;
    for (const auto& base : enumerate_partitions(n)) {
        std::vector<int> distinct;  // descending
        for (int v : base)
            if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
        const unsigned d = static_cast<unsigned>(distinct.size());
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<Part> parts;
            parts.reserve(base.size());
            for (int v : base) parts.push_back({v, false});
            // Bit t of the mask overlines the t-th largest distinct value,
            // so the mark on the largest value toggles fastest.
            for (unsigned t = 0; t < d; ++t) {
                if (!(mask & (1u << t))) continue;
                for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
                    if (it->value == distinct[t]) {
                        it->overlined = true;
                        break;
                    }
                }
            }
            out.push_back(Overpartition(std::move(parts)));
        }
    }
    return out;
}

Superpartition::Superpartition(std::vector<Part> parts) : parts_(std::move(parts)) {
    int zeros = 0;
    for (const Part& p : parts_) {
        if (p.value < 0) throw std::invalid_argument("superpartition: negative part");
        if (p.value == 0) {
            if (!p.overlined) throw std::invalid_argument("superpartition: a zero part must be overlined");
            ++zeros;
        }
    }
    if (zeros > 1) throw std::invalid_argument("superpartition: at most one zero part");
    canonicalize(parts_);
    check_overline_multiplicity(parts_);
}

int weight(const Superpartition& sp) {
    int w = 0;
    for (const Part& p : sp.parts()) w += p.value;
    return w;
}

std::vector<Superpartition> enumerate_superpartitions(int n) {
    std::vector<Superpartition> out;
    for (const Overpartition& op : enumerate_overpartitions(n)) {
        out.push_back(Superpartition(op.parts()));
        std::vector<Part> with_zero = op.parts();
        with_zero.push_back({0, true});
        out.push_back(Superpartition(std::move(with_zero)));
    }
    return out;
}

}  // namespace oplab
