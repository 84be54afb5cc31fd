#include "oplab/ranks.hpp"

#include <algorithm>
#include <stdexcept>

namespace oplab {

FrobeniusSymbol path_to_frobenius(const LatticePath& p, int k, int i) {
    if (!validate(p, k, i)) throw std::invalid_argument("path_to_frobenius: path fails (k,i) conditions");
    const int a = k - i;
    std::vector<Peak> pks = peaks(p);
    std::vector<int> top;
    std::vector<Part> bottom;
    for (auto it = pks.rbegin(); it != pks.rend(); ++it) {
        const Peak& pk = *it;
        int s, t;
        if (pk.east_parity == 0) {
            s = (pk.x + a - pk.y + pk.u) / 2;
            t = (pk.x - a + pk.y - 2 - pk.u) / 2;
            if ((pk.x + a - pk.y + pk.u) % 2 != 0)
                throw std::logic_error("path_to_frobenius: parity violation");
        } else {
            s = (pk.x + a + pk.y - 1 + pk.u) / 2;
            t = (pk.x - a - pk.y - 1 - pk.u) / 2;
            if ((pk.x + a + pk.y - 1 + pk.u) % 2 != 0)
                throw std::logic_error("path_to_frobenius: parity violation");
        }
        top.push_back(s);
        bottom.push_back({t, !pk.nes});
    }
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

LatticePath frobenius_to_path(const FrobeniusSymbol& f, int k, int i) {
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("frobenius_to_path: need 1 <= i <= k");
    const int a = k - i;
    const int n = f.columns();
    const std::vector<int> ranks = successive_ranks(f);

    struct PeakSpec {
        int x, y;
        bool nes;
        int type;
    };
    std::vector<PeakSpec> spec;  // left to right = columns N..1
    for (int col = n - 1; col >= 0; --col) {
        const int r = ranks[static_cast<std::size_t>(col)];
        const int s = f.top()[static_cast<std::size_t>(col)];
        const Part& b = f.bottom()[static_cast<std::size_t>(col)];
        int y, type;
        if (r >= a - k + 2 && r <= a) {
            y = a + 1 - r;
            type = 0;
        } else if (r >= a + 1 && r <= a + k - 1) {
            y = r - a;
            type = 1;
        } else {
            throw rank_out_of_window(col + 1, "frobenius_to_path: rank " + std::to_string(r) +
                                                  " at column " + std::to_string(col + 1) +
                                                  " outside [" + std::to_string(-i + 2) + "," +
                                                  std::to_string(2 * k - i - 1) + "]");
        }
        spec.push_back({s + b.value + 1, y, !b.overlined, type});
    }

    LatticePath path;
    path.start_height = a;
    int cx = 0, cy = a, parity = 0;
    for (const PeakSpec& pk : spec) {
        const int gap = pk.x - cx;
        if (gap < 0) throw std::logic_error("frobenius_to_path: peaks out of order");
        if (parity == pk.type) {
            const int diff = gap + cy - pk.y;
            if (diff % 2 != 0) throw std::logic_error("frobenius_to_path: parity mismatch");
            int down = diff / 2;
            int up = gap - down;
            if (down < 0) throw std::logic_error("frobenius_to_path: negative descent");
            if (down <= cy) {
                if (up < 1) throw std::logic_error("frobenius_to_path: no ascent into peak");
                for (int t = 0; t < down; ++t) path.steps.push_back(Step::SE);
                for (int t = 0; t < up; ++t) path.steps.push_back(Step::NE);
            } else {
                // Forced to touch the axis: an even East run bridges the gap.
                const int run = gap - cy - pk.y;
                if (run < 2 || run % 2 != 0)
                    throw std::logic_error("frobenius_to_path: no legal connector");
                for (int t = 0; t < cy; ++t) path.steps.push_back(Step::SE);
                for (int t = 0; t < run; ++t) path.steps.push_back(Step::E);
                for (int t = 0; t < pk.y; ++t) path.steps.push_back(Step::NE);
            }
        } else {
            const int run = gap - cy - pk.y;
            if (run < 1 || run % 2 != 1)
                throw std::logic_error("frobenius_to_path: no odd East run");
            for (int t = 0; t < cy; ++t) path.steps.push_back(Step::SE);
            for (int t = 0; t < run; ++t) path.steps.push_back(Step::E);
            for (int t = 0; t < pk.y; ++t) path.steps.push_back(Step::NE);
            parity ^= 1;
        }
        path.steps.push_back(pk.nes ? Step::S : Step::SE);
        cx = pk.x + (pk.nes ? 0 : 1);
        cy = pk.y - 1;
    }
    for (int t = 0; t < cy; ++t) path.steps.push_back(Step::SE);
    if (!validate(path, k, i)) throw std::logic_error("frobenius_to_path: reconstruction invalid");
    return path;
}

}  // namespace oplab
