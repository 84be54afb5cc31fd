#include "oplab/durfee.hpp"

#include <algorithm>
#include <stdexcept>

namespace oplab {

int generalized_durfee_size(const Overpartition& op) {
    int overlined = overline_count(op);
    int best = 0;
    for (int n = 1; n <= static_cast<int>(op.parts().size()); ++n) {
        int plain_ge = 0;
        for (const Part& p : op.parts())
            if (!p.overlined && p.value >= n) ++plain_ge;
        if (overlined + plain_ge >= n) best = n;
    }
    return best;
}

int n_durfee_size(const Overpartition& op, int n) {
    if (n < 0) throw std::invalid_argument("n_durfee_size: n < 0");
    int big = n;
    for (int cand = n;; ++cand) {
        int lhs = 0;
        for (const Part& p : op.parts()) {
            if (p.overlined && p.value > n) ++lhs;
            if (!p.overlined && p.value >= cand + n) ++lhs;
        }
        if (lhs >= cand - n)
            big = cand;
        else
            break;
    }
    return big;
}

std::vector<Part> stacked_rows(const Overpartition& op) {
    std::vector<Part> rows;
    for (const Part& p : op.parts())
        if (p.overlined) rows.push_back(p);
    for (const Part& p : op.parts())
        if (!p.overlined) rows.push_back(p);
    return rows;
}

namespace {

struct BlockState {
    std::vector<Part> rows;  // stacked; after block 1 all non-overlined
    bool first = true;
};

int overlined_in(const std::vector<Part>& rows) {
    int j = 0;
    for (const Part& p : rows) j += p.overlined ? 1 : 0;
    return j;
}

// Consume one square block; returns its size.
int take_square(BlockState& st) {
    int size = 0;
    if (st.first) {
        const int j = overlined_in(st.rows);
        for (int n = 1; n <= static_cast<int>(st.rows.size()); ++n) {
            int ge = 0;
            for (const Part& p : st.rows)
                if (!p.overlined && p.value >= n) ++ge;
            if (j + ge >= n) size = n;
        }
    } else {
        for (int n = 1; n <= static_cast<int>(st.rows.size()); ++n)
            if (st.rows[static_cast<std::size_t>(n - 1)].value >= n) size = n;
    }
    st.rows.erase(st.rows.begin(), st.rows.begin() + size);
    st.first = false;
    return size;
}

// Consume one rectangle block (d columns, d+1 rows); the row below the
// square part must be a non-overlined part equal to d exactly.  Returns the
// size d, or -1 when the side condition fails.
int take_rectangle(BlockState& st) {
    int size = -1;
    if (st.first) {
        const int j = overlined_in(st.rows);
        size = 0;
        bool any = false;
        for (int n = 0; n <= static_cast<int>(st.rows.size()); ++n) {
            int ge = 0;
            for (const Part& p : st.rows)
                if (!p.overlined && p.value >= n) ++ge;
            if (j + ge >= n + 1) {
                size = n;
                any = true;
            }
        }
        st.first = false;
        if (!any) {
            // No candidate at all: only the empty overpartition passes, as a
            // zero-width rectangle with nothing below it.
            return st.rows.empty() ? 0 : -1;
        }
        const int rows_used = size + 1;
        if (static_cast<int>(st.rows.size()) < rows_used) return -1;
        const Part& last = st.rows[static_cast<std::size_t>(size)];
        if (last.overlined || last.value != size) return -1;
        st.rows.erase(st.rows.begin(), st.rows.begin() + rows_used);
        return size;
    }
    size = 0;
    for (int d = 1; d <= static_cast<int>(st.rows.size()) - 1; ++d)
        if (st.rows[static_cast<std::size_t>(d)].value >= d) size = d;
    if (size == 0) {
        // 0 x 1 rectangle: consumes nothing, requires emptiness to its right.
        return st.rows.empty() ? 0 : -1;
    }
    if (st.rows[static_cast<std::size_t>(size)].value != size) return -1;
    st.rows.erase(st.rows.begin(), st.rows.begin() + size + 1);
    return size;
}

}  // namespace

std::optional<DurfeeProfile> durfee_dissection(const Overpartition& op, int k, int i) {
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("durfee_dissection: need k >= 2, 1 <= i <= k");
    BlockState st{stacked_rows(op), true};
    DurfeeProfile profile;
    profile.k = k;
    for (int b = 1; b <= k - 1; ++b) {
        int size;
        if (b <= i - 1)
            size = take_square(st);
        else
            size = take_rectangle(st);
        if (size < 0) return std::nullopt;
        profile.sizes.push_back(size);
    }
    if (!st.rows.empty()) return std::nullopt;
    return profile;
}

DissectionTrace durfee_blocks(const Overpartition& op, int schedule_squares) {
    BlockState st{stacked_rows(op), true};
    DissectionTrace tr;
    int b = 1;
    while (!st.rows.empty() || b == 1) {
        int size;
        if (schedule_squares < 0 || b <= schedule_squares)
            size = take_square(st);
        else
            size = take_rectangle(st);
        if (size < 0) {
            tr.failed = true;
            break;
        }
        tr.blocks.push_back(size);
        if (size == 0) break;
        ++b;
    }
    for (const Part& p : st.rows) tr.leftover.push_back(p.value);
    return tr;
}

}  // namespace oplab
