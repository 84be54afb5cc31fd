#include "oplab/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace oplab {

const char* step_name(Step s) {
    switch (s) {
        case Step::NE: return "NE";
        case Step::SE: return "SE";
        case Step::S: return "S";
        case Step::E: return "E";
    }
    throw std::logic_error("bad step");
}

Step step_from_name(const std::string& name) {
    if (name == "NE") return Step::NE;
    if (name == "SE") return Step::SE;
    if (name == "S") return Step::S;
    if (name == "E") return Step::E;
    throw std::invalid_argument("unknown step: " + name);
}

bool structurally_valid(const LatticePath& p) {
    if (p.start_height < 0) return false;
    if (p.empty()) return p.start_height == 0;
    int h = p.start_height;
    for (std::size_t idx = 0; idx < p.steps.size(); ++idx) {
        switch (p.steps[idx]) {
            case Step::NE: h += 1; break;
            case Step::SE:
                h -= 1;
                if (h < 0) return false;
                break;
            case Step::S:
                if (idx == 0 || p.steps[idx - 1] != Step::NE) return false;
                h -= 1;
                if (h < 0) return false;
                break;
            case Step::E:
                if (h != 0) return false;
                break;
        }
    }
    if (h != 0) return false;
    return p.steps.back() == Step::SE || p.steps.back() == Step::S;
}

bool validate(const LatticePath& p, int k, int i) {
    if (k < 1 || i < 1 || i > k) return false;
    if (!structurally_valid(p)) return false;
    if (p.empty()) return k == i;
    return p.start_height == k - i && max_height(p) <= k - 1;
}

int max_height(const LatticePath& p) {
    int h = p.start_height, best = h;
    for (Step s : p.steps) {
        if (s == Step::NE) ++h;
        if (s == Step::SE || s == Step::S) --h;
        best = std::max(best, h);
    }
    return best;
}

std::vector<Peak> peaks(const LatticePath& p) {
    std::vector<Peak> out;
    int x = 0, y = p.start_height, souths = 0, easts = 0;
    for (std::size_t idx = 0; idx < p.steps.size(); ++idx) {
        const Step s = p.steps[idx];
        const bool at_apex = idx > 0 && p.steps[idx - 1] == Step::NE;
        if (at_apex && (s == Step::S || s == Step::SE))
            out.push_back({x, y, souths, s == Step::S, easts & 1});
        switch (s) {
            case Step::NE: ++x, ++y; break;
            case Step::SE: ++x, --y; break;
            case Step::S: --y, ++souths; break;
            case Step::E: ++x, ++easts; break;
        }
    }
    return out;
}

int major_index(const LatticePath& p) {
    int m = 0;
    for (const Peak& pk : peaks(p)) m += pk.x;
    return m;
}

int south_count(const LatticePath& p) {
    int c = 0;
    for (Step s : p.steps) c += s == Step::S ? 1 : 0;
    return c;
}

namespace {

struct Vertex {
    int x, y;
};

std::vector<Vertex> vertices(const LatticePath& p) {
    std::vector<Vertex> v;
    v.reserve(p.steps.size() + 1);
    int x = 0, y = p.start_height;
    v.push_back({x, y});
    for (Step s : p.steps) {
        switch (s) {
            case Step::NE: ++x, ++y; break;
            case Step::SE: ++x, --y; break;
            case Step::S: --y; break;
            case Step::E: ++x; break;
        }
        v.push_back({x, y});
    }
    return v;
}

// Vertex index of each apex, aligned with peaks(p).
std::vector<std::size_t> apex_indices(const LatticePath& p) {
    std::vector<std::size_t> out;
    for (std::size_t idx = 1; idx < p.steps.size(); ++idx)
        if (p.steps[idx - 1] == Step::NE &&
            (p.steps[idx] == Step::S || p.steps[idx] == Step::SE))
            out.push_back(idx);  // verts[idx] is the position after idx steps
    return out;
}

}  // namespace

std::vector<int> relative_heights(const LatticePath& p) {
    const auto verts = vertices(p);
    const auto pks = peaks(p);
    const auto apex = apex_indices(p);

    std::vector<int> rel(pks.size(), 0);
    for (std::size_t pi = 0; pi < pks.size(); ++pi) {
        const Peak& pk = pks[pi];
        for (int h = pk.y; h >= 1; --h) {
            std::size_t left = 0;
            bool has_left = false;
            for (std::size_t vi = apex[pi]; vi-- > 0;) {
                if (verts[vi].y == pk.y - h && verts[vi].x < pk.x) {
                    left = vi;
                    has_left = true;
                    break;
                }
            }
            if (!has_left) continue;
            std::size_t right = 0;
            bool has_right = false;
            for (std::size_t vi = apex[pi] + 1; vi < verts.size(); ++vi) {
                if (verts[vi].y == pk.y - h && verts[vi].x >= pk.x) {
                    right = vi;
                    has_right = true;
                    break;
                }
            }
            if (!has_right) continue;
            bool ok = true;
            for (std::size_t pj = 0; pj < pks.size() && ok; ++pj) {
                if (apex[pj] <= left || apex[pj] >= right) continue;
                if (pks[pj].y > pk.y) ok = false;
                if (pks[pj].y == pk.y && pks[pj].x < pk.x) ok = false;
            }
            if (ok) {
                rel[pi] = h;
                break;
            }
        }
    }
    return rel;
}

std::string to_string(const LatticePath& p) {
    std::string s = "h" + std::to_string(p.start_height) + ":";
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (i) s += ",";
        s += step_name(p.steps[i]);
    }
    return s;
}

namespace {

// Depth-first generation with pruning on the partial major index.  A path's
// suffix after its last closing step is a forced SE descent, so each path is
// recorded exactly once, at the state where the major index reaches the
// target.  The x-extent is bounded by the target plus the start height.
struct PathSearch {
    int k, i, target;
    std::vector<LatticePath> out;
    std::vector<Step> steps;

    void record_with_descent(int h) {
        const std::size_t mark = steps.size();
        for (int t = 0; t < h; ++t) steps.push_back(Step::SE);
        if (steps.empty()) {
            if (k == i) out.push_back({0, {}});
        } else if (steps.back() == Step::SE || steps.back() == Step::S) {
            out.push_back({k - i, steps});
        }
        steps.resize(mark);
    }

    void walk(int x, int h, int major) {
        const bool after_ne = !steps.empty() && steps.back() == Step::NE;
        if (major == target) {
            // No more peaks are affordable; an NE tail cannot avoid one.
            if (!after_ne) record_with_descent(h);
            return;
        }
        const int next_apex = after_ne ? x : x + 1;
        if (major + next_apex > target) return;
        if (after_ne) {
            steps.push_back(Step::S);
            walk(x, h - 1, major + x);
            steps.pop_back();
            steps.push_back(Step::SE);
            walk(x + 1, h - 1, major + x);
            steps.pop_back();
        }
        if (h + 1 <= k - 1) {
            steps.push_back(Step::NE);
            walk(x + 1, h + 1, major);
            steps.pop_back();
        }
        if (h > 0 && !after_ne) {
            steps.push_back(Step::SE);
            walk(x + 1, h - 1, major);
            steps.pop_back();
        }
        if (h == 0 && !after_ne) {
            steps.push_back(Step::E);
            walk(x + 1, 0, major);
            steps.pop_back();
        }
    }
};

}  // namespace

std::vector<LatticePath> enumerate_paths(int k, int i, int n) {
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("enumerate_paths: need 1 <= i <= k");
    if (n < 0) throw std::invalid_argument("enumerate_paths: n < 0");
    PathSearch ps{k, i, n, {}, {}};
    ps.walk(0, k - i, 0);
    return ps.out;
}

}  // namespace oplab
