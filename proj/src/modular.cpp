#include "oplab/modular.hpp"

#include <stdexcept>

namespace oplab {

int weight(const TwoModularDiagram& d) {
    return 2 * weight(d.shape) - overline_count(d.shape);
}

int ones_count(const TwoModularDiagram& d) { return overline_count(d.shape); }

std::vector<int> row_weights(const TwoModularDiagram& d) {
    std::vector<int> rows;
    rows.reserve(d.shape.parts().size());
    for (const Part& p : d.shape.parts()) rows.push_back(2 * p.value - (p.overlined ? 1 : 0));
    return rows;
}

Overpartition phi_two_modular(const TwoModularDiagram& d) { return d.shape; }

TwoModularDiagram phi_two_modular_inverse(const Overpartition& op) { return TwoModularDiagram{op}; }

TwoModularDiagram diagram_from_row_weights(const std::vector<int>& rows) {
    std::vector<Part> parts;
    parts.reserve(rows.size());
    for (int w : rows) {
        if (w <= 0) throw std::invalid_argument("two-modular diagram: row weight must be positive");
        parts.push_back({(w + 1) / 2, w % 2 == 1});
    }
    return TwoModularDiagram{Overpartition(std::move(parts))};
}

}  // namespace oplab
