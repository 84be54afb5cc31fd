#include "oplab/uplift.hpp"

#include <algorithm>
#include <stdexcept>

namespace oplab {

namespace {

// Step index of each peak's closing step (S or SE); steps[pos-1] is its NE.
std::vector<std::size_t> closing_positions(const LatticePath& p) {
    std::vector<std::size_t> out;
    for (std::size_t t = 1; t < p.steps.size(); ++t)
        if (p.steps[t - 1] == Step::NE && (p.steps[t] == Step::S || p.steps[t] == Step::SE))
            out.push_back(t);
    return out;
}

bool meets(const Peak& left, const Peak& right) {
    return right.x - left.x == (left.nes ? 1 : 2);
}

}  // namespace

LatticePath volcanic_uplift(const LatticePath& base) {
    LatticePath out;
    out.start_height = base.start_height;
    for (std::size_t t = 0; t < base.steps.size(); ++t) {
        const bool apex = t > 0 && base.steps[t - 1] == Step::NE &&
                          (base.steps[t] == Step::S || base.steps[t] == Step::SE);
        if (apex) {
            out.steps.push_back(Step::NE);
            out.steps.push_back(Step::S);
        }
        out.steps.push_back(base.steps[t]);
    }
    return out;
}

LatticePath prepend_nes_peaks(const LatticePath& p, int count) {
    LatticePath out;
    out.start_height = p.start_height;
    for (int t = 0; t < count; ++t) {
        out.steps.push_back(Step::NE);
        out.steps.push_back(Step::S);
    }
    out.steps.insert(out.steps.end(), p.steps.begin(), p.steps.end());
    return out;
}

LatticePath mark_peaks_nese(const LatticePath& p, const std::vector<int>& lambda) {
    LatticePath out = p;
    auto close = closing_positions(out);
    const int n = static_cast<int>(close.size());
    for (int c : lambda) {
        const int from_right = c + 1;
        if (from_right < 1 || from_right > n)
            throw std::invalid_argument("mark_peaks_nese: lambda entry out of range");
        const std::size_t pos = close[static_cast<std::size_t>(n - from_right)];
        if (out.steps[pos] != Step::S)
            throw std::invalid_argument("mark_peaks_nese: target peak is not NES");
        out.steps[pos] = Step::SE;
    }
    return out;
}

int move_peak_right(LatticePath& p, int idx) {
    std::vector<Peak> pks = peaks(p);
    const int n = static_cast<int>(pks.size());
    if (idx < 0 || idx >= n) throw std::invalid_argument("move_peak_right: bad peak index");
    while (idx + 1 < n && meets(pks[static_cast<std::size_t>(idx)], pks[static_cast<std::size_t>(idx + 1)]))
        ++idx;
    const auto close = closing_positions(p);
    const std::size_t c = close[static_cast<std::size_t>(idx)];
    if (c + 1 == p.steps.size()) {
        // At the very end the unit slides right over a fresh East step.
        p.steps.insert(p.steps.begin() + static_cast<std::ptrdiff_t>(c) - 1, Step::E);
    } else {
        const Step s = p.steps[c + 1];
        p.steps.erase(p.steps.begin() + static_cast<std::ptrdiff_t>(c) + 1);
        p.steps.insert(p.steps.begin() + static_cast<std::ptrdiff_t>(c) - 1, s);
    }
    return idx;
}

int move_peak_left(LatticePath& p, int idx, int k) {
    std::vector<Peak> pks = peaks(p);
    if (idx < 0 || idx >= static_cast<int>(pks.size()))
        throw std::invalid_argument("move_peak_left: bad peak index");
    while (idx - 1 >= 0 && meets(pks[static_cast<std::size_t>(idx - 1)], pks[static_cast<std::size_t>(idx)]))
        --idx;
    const auto close = closing_positions(p);
    const std::size_t c = close[static_cast<std::size_t>(idx)];
    const std::size_t a_in = c - 1;  // the NE entering the apex
    if (a_in == 0) return -1;
    const Step s = p.steps[a_in - 1];
    if (s == Step::S) return -1;  // abutting peak; chains are resolved above
    if (s == Step::SE && pks[static_cast<std::size_t>(idx)].y + 1 > k - 1) return -1;
    if (s == Step::E && c + 1 == p.steps.size()) {
        p.steps.erase(p.steps.begin() + static_cast<std::ptrdiff_t>(a_in) - 1);
        return idx;
    }
    p.steps.erase(p.steps.begin() + static_cast<std::ptrdiff_t>(a_in) - 1);
    p.steps.insert(p.steps.begin() + static_cast<std::ptrdiff_t>(c), s);
    return idx;
}

namespace {

std::vector<int> rel_one_indices(const LatticePath& p) {
    std::vector<int> idx;
    const auto rel = relative_heights(p);
    for (std::size_t t = 0; t < rel.size(); ++t)
        if (rel[t] == 1) idx.push_back(static_cast<int>(t));
    return idx;
}

void validate_certificate(const UpliftCertificate& c) {
    if (c.k < 2 || c.i < 1 || c.i > c.k)
        throw std::invalid_argument("uplift: need k >= 2, 1 <= i <= k");
    const int base_i = std::max(c.i - 1, 1);
    if (!validate(c.base, c.k - 1, base_i) || south_count(c.base) != 0)
        throw std::invalid_argument("uplift: base path not in the no-South shifted class");
    for (std::size_t t = 0; t + 1 < c.b.size(); ++t)
        if (c.b[t] < c.b[t + 1]) throw std::invalid_argument("uplift: b must be nonincreasing");
    if (!c.b.empty() && c.b.back() < 0) throw std::invalid_argument("uplift: b must be nonnegative");
    const int n1 = static_cast<int>(peaks(c.base).size() + c.b.size());
    std::vector<int> l = c.lambda;
    std::sort(l.begin(), l.end());
    for (std::size_t t = 0; t < l.size(); ++t) {
        if (l[t] < 0 || l[t] > n1 - 1) throw std::invalid_argument("uplift: lambda entry out of range");
        if (t + 1 < l.size() && l[t] == l[t + 1])
            throw std::invalid_argument("uplift: lambda entries must be distinct");
    }
}

}  // namespace

LatticePath uplift(const UpliftCertificate& c) {
    validate_certificate(c);
    const int m = static_cast<int>(c.b.size());
    LatticePath p = volcanic_uplift(c.base);
    p = prepend_nes_peaks(p, m);
    if (c.i == 1) {
        p.steps.insert(p.steps.begin(), Step::SE);
        p.start_height += 1;
    }
    p = mark_peaks_nese(p, c.lambda);
    for (int j = 0; j < m; ++j) {
        if (c.b[static_cast<std::size_t>(j)] == 0) continue;
        const auto ones = rel_one_indices(p);
        if (static_cast<int>(ones.size()) != m)
            throw std::logic_error("uplift: relative-height-one count drifted");
        int mover = ones[static_cast<std::size_t>(m - 1 - j)];  // (j+1)-th from the right
        for (int s = 0; s < c.b[static_cast<std::size_t>(j)]; ++s)
            mover = move_peak_right(p, mover);
    }
    if (!validate(p, c.k, c.i)) throw std::logic_error("uplift: result fails (k,i) conditions");
    const int n1 = static_cast<int>(peaks(c.base).size()) + m;
    long long expected = major_index(c.base) + static_cast<long long>(n1) * (n1 + 1) / 2 +
                         (c.i == 1 ? n1 : 0);
    for (int v : c.lambda) expected += v;
    for (int v : c.b) expected += v;
    if (expected != major_index(p)) throw std::logic_error("uplift: major index accounting failed");
    return p;
}

UpliftCertificate uplift_inverse(const LatticePath& path, int k, int i) {
    if (!validate(path, k, i)) throw std::invalid_argument("uplift_inverse: path fails (k,i) conditions");
    LatticePath p = path;
    UpliftCertificate cert;
    cert.k = k;
    cert.i = i;

    // Walk each relative-height-one peak to the front, leftmost first; the
    // journey lengths, reversed, are the parts of b.
    const int m = static_cast<int>(rel_one_indices(p).size());
    std::vector<int> journeys;
    for (int j = 0; j < m; ++j) {
        const auto ones = rel_one_indices(p);
        if (static_cast<int>(ones.size()) != m)
            throw std::logic_error("uplift_inverse: relative-height-one count drifted");
        int mover = ones[static_cast<std::size_t>(j)];
        int count = 0;
        for (;;) {
            const int moved = move_peak_left(p, mover, k);
            if (moved < 0) break;
            mover = moved;
            ++count;
        }
        journeys.push_back(count);
    }
    cert.b.assign(journeys.rbegin(), journeys.rend());
    for (std::size_t t = 0; t + 1 < cert.b.size(); ++t)
        if (cert.b[t] < cert.b[t + 1])
            throw std::logic_error("uplift_inverse: journeys did not produce a partition");

    // Read lambda off the NESE peaks, converting them back to NES.
    {
        auto close = closing_positions(p);
        const int n1 = static_cast<int>(close.size());
        for (int idx = 0; idx < n1; ++idx) {
            const std::size_t pos = close[static_cast<std::size_t>(idx)];
            if (p.steps[pos] == Step::SE) {
                cert.lambda.push_back(n1 - idx - 1);  // (n1-idx)-th from the right
                p.steps[pos] = Step::S;
            }
        }
        std::sort(cert.lambda.begin(), cert.lambda.end(), std::greater<int>());
    }

    if (i == 1) {
        if (p.steps.empty() || p.steps.front() != Step::SE)
            throw std::logic_error("uplift_inverse: missing leading SE");
        p.steps.erase(p.steps.begin());
        p.start_height -= 1;
    }

    for (int t = 0; t < m; ++t) {
        if (p.steps.size() < 2 || p.steps[0] != Step::NE || p.steps[1] != Step::S)
            throw std::logic_error("uplift_inverse: front peaks not parked");
        p.steps.erase(p.steps.begin(), p.steps.begin() + 2);
    }

    // Deflate: drop the NE,S spike at each remaining apex.
    LatticePath base;
    base.start_height = p.start_height;
    for (std::size_t t = 0; t < p.steps.size(); ++t) {
        if (p.steps[t] == Step::S) {
            if (t == 0 || base.steps.empty() || base.steps.back() != Step::NE)
                throw std::logic_error("uplift_inverse: stray South step");
            base.steps.pop_back();
            continue;
        }
        base.steps.push_back(p.steps[t]);
    }
    cert.base = std::move(base);
    if (!validate(cert.base, k - 1, std::max(i - 1, 1)) || south_count(cert.base) != 0)
        throw std::logic_error("uplift_inverse: base not in the no-South shifted class");
    return cert;
}

}  // namespace oplab
