#include "oplab/hook.hpp"

#include <algorithm>
#include <stdexcept>

#include "oplab/durfee.hpp"

namespace oplab {

namespace {

std::vector<int> conjugate(const std::vector<int>& mu) {
    std::vector<int> out;
    if (mu.empty()) return out;
    out.resize(static_cast<std::size_t>(mu.front()));
    for (std::size_t j = 0; j < out.size(); ++j) {
        int c = 0;
        for (int v : mu) c += v > static_cast<int>(j) ? 1 : 0;
        out[j] = c;
    }
    return out;
}

void drop_zeros(std::vector<int>& mu) {
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
}

}  // namespace

namespace {

// One column of the hook algorithm; `a` is already incremented by one.
void hook_column(std::vector<int>& alpha, std::vector<int>& beta, int a, const Part& b) {
    if (b.overlined) {
        // h(a, b) onto alpha: needs a > alpha_1 and b >= l(alpha).
        if (!alpha.empty() && a <= alpha.front()) throw std::logic_error("hook: arm too short");
        if (b.value < static_cast<int>(alpha.size()))
            throw std::logic_error("hook: leg too short");
        std::vector<int> merged;
        merged.reserve(static_cast<std::size_t>(b.value) + 1);
        merged.push_back(a);
        for (int v : alpha) merged.push_back(v + 1);
        while (static_cast<int>(merged.size()) < b.value + 1) merged.push_back(1);
        alpha = std::move(merged);
    } else {
        // Part b.value joins the conjugate of alpha; a joins beta.
        for (int j = 0; j < b.value; ++j) {
            if (j < static_cast<int>(alpha.size()))
                alpha[static_cast<std::size_t>(j)] += 1;
            else
                alpha.push_back(1);
        }
        beta.insert(beta.begin(), a);
    }
}

}  // namespace

Overpartition frobenius_to_overpartition(const FrobeniusSymbol& f) {
    std::vector<int> alpha, beta;
    for (int col = f.columns() - 1; col >= 0; --col)
        hook_column(alpha, beta, f.top()[static_cast<std::size_t>(col)] + 1,
                    f.bottom()[static_cast<std::size_t>(col)]);
    std::vector<Part> parts;
    for (int v : alpha) parts.push_back({v, false});
    for (int v : beta) parts.push_back({v, true});
    return Overpartition(std::move(parts));
}

std::vector<HookStep> hook_algorithm_trace(const FrobeniusSymbol& f) {
    std::vector<HookStep> steps;
    std::vector<int> alpha, beta;
    for (int col = f.columns() - 1; col >= 0; --col) {
        hook_column(alpha, beta, f.top()[static_cast<std::size_t>(col)] + 1,
                    f.bottom()[static_cast<std::size_t>(col)]);
        steps.push_back({alpha, beta});
    }
    return steps;
}

FrobeniusSymbol overpartition_to_frobenius(const Overpartition& op) {
    std::vector<int> alpha, beta;
    for (const Part& p : op.parts())
        (p.overlined ? beta : alpha).push_back(p.value);
    // both descending already (canonical part order)

    std::vector<int> top;
    std::vector<Part> bottom;
    while (!alpha.empty() || !beta.empty()) {
        const int hook_arm = alpha.empty() ? -1 : alpha.front();
        const int other = beta.empty() ? -1 : beta.front();
        // On a tie the hook reading would later duplicate a top entry, so the
        // plain branch wins.
        if (hook_arm > other) {
            // Undo a hook merge: emit (alpha_1, l(alpha)-1, overlined).
            top.push_back(alpha.front() - 1);
            bottom.push_back({static_cast<int>(alpha.size()) - 1, true});
            std::vector<int> rest;
            for (std::size_t j = 1; j < alpha.size(); ++j) rest.push_back(alpha[j] - 1);
            drop_zeros(rest);
            alpha = std::move(rest);
        } else {
            top.push_back(beta.front() - 1);
            bottom.push_back({static_cast<int>(alpha.size()), false});
            beta.erase(beta.begin());
            for (int& v : alpha) v -= 1;
            drop_zeros(alpha);
        }
    }
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

DurfeeMapTrace durfee_frobenius_trace(const FrobeniusSymbol& f) {
    const int n = f.columns();
    DurfeeMapTrace tr;
    for (int a : f.top()) tr.beta.push_back(a + 1);
    for (const Part& b : f.bottom()) tr.alpha.push_back(b.value);
    for (int col = 0; col < n; ++col) {
        if (!f.bottom()[static_cast<std::size_t>(col)].overlined) continue;
        for (int j = 0; j < col; ++j) tr.alpha[static_cast<std::size_t>(j)] -= 1;
        tr.delta.push_back(col);  // part col = (col+1)-1
    }
    std::sort(tr.delta.begin(), tr.delta.end(), std::greater<int>());
    drop_zeros(tr.alpha);

    // (beta, delta) -> gamma: overline everything, then each delta part c
    // adds c to the (c+1)-th entry and strips its mark.
    std::vector<Part> gamma;
    for (int v : tr.beta) gamma.push_back({v, true});
    for (int c : tr.delta) {
        gamma[static_cast<std::size_t>(c)].value += c;
        gamma[static_cast<std::size_t>(c)].overlined = false;
    }
    tr.gamma = Overpartition(std::move(gamma));
    return tr;
}

Overpartition durfee_frobenius(const FrobeniusSymbol& f) {
    DurfeeMapTrace tr = durfee_frobenius_trace(f);
    std::vector<Part> parts = tr.gamma.parts();
    for (int v : conjugate(tr.alpha)) parts.push_back({v, false});
    return Overpartition(std::move(parts));
}

namespace {

// Recover (beta, delta) from gamma: find the unique ordering of gamma's
// parts such that stripping position offsets from the non-overlined entries
// leaves a strictly decreasing all-distinct sequence.
bool unscramble(const std::vector<Part>& pool, std::vector<bool>& used, int pos, int prev,
                std::vector<int>& beta, std::vector<int>& delta) {
    const int n = static_cast<int>(pool.size());
    if (pos == n) return true;
    for (int t = 0; t < n; ++t) {
        if (used[static_cast<std::size_t>(t)]) continue;
        // Equal candidates are interchangeable; try the first unused only.
        bool dup = false;
        for (int s = 0; s < t; ++s)
            if (!used[static_cast<std::size_t>(s)] && pool[static_cast<std::size_t>(s)] == pool[static_cast<std::size_t>(t)]) dup = true;
        if (dup) continue;
        const Part& cand = pool[static_cast<std::size_t>(t)];
        const int value = cand.overlined ? cand.value : cand.value - pos;
        if (value < 1 || (prev >= 0 && value >= prev)) continue;
        used[static_cast<std::size_t>(t)] = true;
        beta.push_back(value);
        if (!cand.overlined) delta.push_back(pos);
        if (unscramble(pool, used, pos + 1, value, beta, delta)) return true;
        used[static_cast<std::size_t>(t)] = false;
        beta.pop_back();
        if (!cand.overlined) delta.pop_back();
    }
    return false;
}

}  // namespace

FrobeniusSymbol durfee_frobenius_inverse(const Overpartition& op) {
    const int n = generalized_durfee_size(op);
    std::vector<Part> rows = stacked_rows(op);
    std::vector<Part> gamma(rows.begin(), rows.begin() + n);
    std::vector<int> below;
    for (std::size_t t = static_cast<std::size_t>(n); t < rows.size(); ++t)
        below.push_back(rows[t].value);
    std::vector<int> alpha = conjugate(below);  // at most n parts

    std::vector<bool> used(gamma.size(), false);
    std::vector<int> beta, delta;
    if (!unscramble(gamma, used, 0, -1, beta, delta))
        throw std::logic_error("durfee inverse: no valid ordering");

    // Rebuild the bottom row from alpha and delta, undoing the decrements.
    std::vector<Part> bottom;
    alpha.resize(static_cast<std::size_t>(n), 0);
    for (int col = 0; col < n; ++col) bottom.push_back({alpha[static_cast<std::size_t>(col)], false});
    std::sort(delta.begin(), delta.end());
    for (int c : delta) {
        bottom[static_cast<std::size_t>(c)].overlined = true;
        for (int j = 0; j < c; ++j) bottom[static_cast<std::size_t>(j)].value += 1;
    }
    std::vector<int> top;
    for (int v : beta) top.push_back(v - 1);
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

}  // namespace oplab
