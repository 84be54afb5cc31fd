#include "oplab/burge.hpp"

#include <stdexcept>

namespace oplab {

Multuple burge_f_multuple(const Multuple& mu) {
    Multuple out = mu;
    auto& e = out.entries;
    const std::size_t last = e.size() - 1;
    if (e[last].count == 1 && e[last].overlined) {
        e[last].overlined = false;
        e[0].overlined = true;
    } else if (out.length() > 1) {
        e[last - 1].overlined = false;
        e[0].overlined = true;
    }
    e[last].count -= 1;
    e[0].count += 1;
    if (e[last].count == 0 && e[last].overlined)
        throw std::logic_error("burge move left an overline on a zero count");
    return out;
}

MultiplicitySequence burge_f(const MultiplicitySequence& ms) {
    MultupleDivision div = multuple_division(ms);
    std::vector<Mult> f(static_cast<std::size_t>(ms.max_value()) + 1);
    for (int j = 0; j <= ms.max_value(); ++j) f[static_cast<std::size_t>(j)] = ms.f(j);
    for (const Multuple& mu : div.multuples) {
        Multuple moved = burge_f_multuple(mu);
        for (std::size_t t = 0; t < moved.entries.size(); ++t)
            f[static_cast<std::size_t>(moved.start) + t] = moved.entries[t];
    }
    f[0] = Mult{};  // a part 0 is discarded
    return MultiplicitySequence(std::move(f));
}

AnchoredInfo anchored_multuple_info(const MultiplicitySequence& ms) {
    AnchoredInfo info;
    for (const Multuple& mu : multuple_division(ms).multuples) {
        if (mu.start != 0) continue;
        info.present = true;
        info.length = mu.length();
        const Mult& last = mu.entries.back();
        info.final_is_overlined_one = last.count == 1 && last.overlined;
        break;
    }
    return info;
}

bool has_anchored_multuple(const MultiplicitySequence& ms) {
    return anchored_multuple_info(ms).present;
}

}  // namespace oplab
