#include "oplab/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace oplab {

MultiplicitySequence::MultiplicitySequence(std::vector<Mult> f) : f_(std::move(f)) {
    if (f_.empty()) f_.push_back({0, false});
    if (f_[0].count != 0 || f_[0].overlined)
        throw std::invalid_argument("multiplicity sequence: f_0 must be zero");
    for (const Mult& m : f_) {
        if (m.count < 0) throw std::invalid_argument("multiplicity sequence: negative count");
        if (m.overlined && m.count == 0)
            throw std::invalid_argument("multiplicity sequence: overline on zero count");
    }
    while (f_.size() > 1 && f_.back().count == 0) f_.pop_back();
}

const Mult& MultiplicitySequence::f(int j) const {
    static const Mult zero{};
    if (j < 0) throw std::out_of_range("multiplicity index");
    if (j >= static_cast<int>(f_.size())) return zero;
    return f_[static_cast<std::size_t>(j)];
}

MultiplicitySequence multiplicity_sequence(const Overpartition& op) {
    int maxv = op.empty() ? 0 : op.parts().front().value;
    std::vector<Mult> f(static_cast<std::size_t>(maxv) + 1);
    for (const Part& p : op.parts()) {
        f[static_cast<std::size_t>(p.value)].count += 1;
        if (p.overlined) f[static_cast<std::size_t>(p.value)].overlined = true;
    }
    return MultiplicitySequence(std::move(f));
}

Overpartition overpartition_from_multiplicities(const MultiplicitySequence& ms) {
    std::vector<Part> parts;
    for (int v = ms.max_value(); v >= 1; --v) {
        const Mult& m = ms.f(v);
        for (int c = 0; c < m.count; ++c)
            parts.push_back({v, m.overlined && c == m.count - 1});
    }
    return Overpartition(std::move(parts));
}

int weight(const MultiplicitySequence& ms) {
    int w = 0;
    for (int v = 1; v <= ms.max_value(); ++v) w += v * ms.f(v).count;
    return w;
}

int Multuple::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        w += (start + static_cast<int>(i)) * entries[i].count;
    return w;
}

MultupleDivision multuple_division(const MultiplicitySequence& ms) {
    MultupleDivision div;
    int pos = ms.max_value();
    while (pos >= 1) {
        if (ms.f(pos).count == 0) {
            --pos;
            continue;
        }
        // Close after f_pos; scan left past overlined entries to the anchor.
        int m = pos - 1;
        while (ms.f(m).overlined) --m;  // f_0 is never overlined, so m >= 0
        Multuple mu;
        mu.start = m;
        for (int j = m; j <= pos; ++j) mu.entries.push_back(ms.f(j));
        div.length += mu.length();
        div.multuples.push_back(std::move(mu));
        pos = m - 1;
    }
    std::reverse(div.multuples.begin(), div.multuples.end());
    return div;
}

bool gap_condition_parts(const Overpartition& op, int k) {
    const auto& parts = op.parts();
    const int s = static_cast<int>(parts.size());
    for (int l = 0; l + k - 1 < s; ++l) {
        const Part& lo = parts[static_cast<std::size_t>(l + k - 1)];
        const int gap = parts[static_cast<std::size_t>(l)].value - lo.value;
        if (gap < (lo.overlined ? 1 : 2)) return false;
    }
    return true;
}

bool gap_condition_mults(const MultiplicitySequence& ms, int k) {
    for (int l = 1; l <= ms.max_value(); ++l) {
        const int bound = ms.f(l).overlined ? k + 1 : k;
        if (ms.f(l).count + ms.f(l + 1).count >= bound) return false;
    }
    return true;
}

bool in_b_class(const Overpartition& op, int k, int i) {
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("in_b_class: need k >= 2, 1 <= i <= k");
    MultiplicitySequence ms = multiplicity_sequence(op);
    if (ms.f(1).count >= i) return false;
    return gap_condition_parts(op, k);
}

}  // namespace oplab
