// Command-line front end: enumeration, statistics, bijections, series
// printing and identity verification, all with JSON on stdin/stdout.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or argument error, 3 resource ceiling exceeded, 4 malformed input.

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "oplab/burge.hpp"
#include "oplab/durfee.hpp"
#include "oplab/hook.hpp"
#include "oplab/io.hpp"
#include "oplab/multiplicity.hpp"
#include "oplab/qformulas.hpp"
#include "oplab/ranks.hpp"
#include "oplab/uplift.hpp"
#include "oplab/verify.hpp"

using namespace oplab;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Fn>
void for_each_json_line(std::istream& in, Fn fn) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        fn(json::parse(line));
    }
}

int run_enumerate(const std::string& object, int n, int k, int i) {
    if (object == "overpartition") {
        for (const Overpartition& op : enumerate_overpartitions(n))
            std::cout << canonical(to_json(op)) << "\n";
    } else if (object == "superpartition") {
        for (const Superpartition& sp : enumerate_superpartitions(n))
            std::cout << canonical(to_json(sp)) << "\n";
    } else if (object == "frobenius") {
        for (const FrobeniusSymbol& f : enumerate_frobenius_symbols(n))
            std::cout << canonical(to_json(f)) << "\n";
    } else if (object == "path") {
        for (const LatticePath& p : enumerate_paths(k, i, n))
            std::cout << canonical(to_json(p)) << "\n";
    } else {
        throw usage_error("unknown object: " + object);
    }
    return 0;
}

int run_stats(const std::string& object, int k, int i, int offset) {
    for_each_json_line(std::cin, [&](const json& j) {
        json out;
        if (object == "overpartition") {
            const Overpartition op = overpartition_from_json(j);
            out["weight"] = weight(op);
            out["overlines"] = overline_count(op);
            const MultiplicitySequence ms = multiplicity_sequence(op);
            out["multiplicities"] = to_json(ms)["mults"];
            out["length"] = multuple_division(ms).length;
            out["durfee"] = generalized_durfee_size(op);
            out["offset_durfee"] = n_durfee_size(op, offset);
            if (k >= 2) {
                const auto profile = durfee_dissection(op, k, i);
                out["dissection"] = profile ? json(profile->sizes) : json(nullptr);
                out["gap_condition"] = in_b_class(op, k, i);
            }
            out["ranks"] = successive_ranks(overpartition_to_frobenius(op));
        } else if (object == "frobenius") {
            const FrobeniusSymbol f = frobenius_from_json(j);
            out["weight"] = weight(f);
            out["columns"] = f.columns();
            out["ranks"] = successive_ranks(f);
            out["plain_bottom"] = non_overlined_bottom_count(f);
        } else if (object == "path") {
            const LatticePath p = path_from_json(j);
            out["major"] = major_index(p);
            out["south"] = south_count(p);
            json pk = json::array();
            for (const Peak& q : peaks(p))
                pk.push_back(json{{"nes", q.nes}, {"u", q.u}, {"x", q.x}, {"y", q.y}});
            out["peaks"] = pk;
            out["relative_heights"] = relative_heights(p);
            if (k >= 1) out["valid"] = validate(p, k, i);
        } else {
            throw usage_error("unknown object: " + object);
        }
        std::cout << canonical(out) << "\n";
    });
    return 0;
}

int run_biject(const std::string& map, const std::string& direction, int k, int i) {
    const bool fwd = direction == "forward";
    if (!fwd && direction != "inverse") throw usage_error("direction must be forward or inverse");
    for_each_json_line(std::cin, [&](const json& j) {
        json out;
        if (map == "frobenius") {
            out = fwd ? to_json(frobenius_to_overpartition(frobenius_from_json(j)))
                      : to_json(overpartition_to_frobenius(overpartition_from_json(j)));
        } else if (map == "durfee") {
            out = fwd ? to_json(durfee_frobenius(frobenius_from_json(j)))
                      : to_json(durfee_frobenius_inverse(overpartition_from_json(j)));
        } else if (map == "ranks") {
            out = fwd ? to_json(path_to_frobenius(path_from_json(j), k, i))
                      : to_json(frobenius_to_path(frobenius_from_json(j), k, i));
        } else if (map == "modular") {
            out = fwd ? to_json(phi_two_modular(diagram_from_json(j)))
                      : to_json(phi_two_modular_inverse(overpartition_from_json(j)));
        } else if (map == "uplift") {
            out = fwd ? to_json(uplift(certificate_from_json(j)))
                      : to_json(uplift_inverse(path_from_json(j), k, i));
        } else if (map == "burge") {
            if (!fwd)
                throw usage_error(
                    "the burge move inverts only relative to a class; forward only");
            out = to_json(burge_f(multiplicity_sequence_from_json(j)));
        } else {
            throw usage_error("unknown map: " + map);
        }
        std::cout << canonical(out) << "\n";
    });
    return 0;
}

ProductFamily family_from_name(const std::string& name) {
    if (name == "andrews-gordon") return ProductFamily::andrews_gordon;
    if (name == "gollnitz-gordon") return ProductFamily::gollnitz_gordon;
    if (name == "gordon-over") return ProductFamily::gordon_overpartitions;
    if (name == "gordon-shifted") return ProductFamily::gordon_shifted;
    throw usage_error("unknown family: " + name);
}

int run_series(const std::string& name, int k, int i, int peaks_n, int qmax, int xmax,
               const std::string& family) {
    const ResourceLimits lim = resource_limits();
    if (qmax > lim.max_qmax)
        throw resource_limit_error("qmax exceeds ceiling " + std::to_string(lim.max_qmax));
    TruncatedSeries s = TruncatedSeries::zero(0);
    if (name == "paths")
        s = path_series(k, i, qmax);
    else if (name == "durfee")
        s = durfee_series(k, i, qmax);
    else if (name == "npeaks")
        s = npeaks_series(k, i, peaks_n, qmax);
    else if (name == "npeaks-aux")
        s = npeaks_aux_series(k, i, peaks_n, qmax);
    else if (name == "j")
        s = j_series(k, i, qmax, xmax > 0 ? xmax : default_xmax(k, qmax));
    else if (name == "h")
        s = h_series(k, i, qmax, xmax > 0 ? xmax : default_xmax(k, qmax));
    else if (name == "product")
        s = product_series(family_from_name(family), k, i, qmax);
    else if (name == "special")
        s = specialized_path_series(family_from_name(family), k, i, qmax);
    else if (name == "overpartitions")
        s = overpartition_gf(qmax);
    else
        throw usage_error("unknown series: " + name);
    std::cout << canonical(to_json(s)) << "\n";
    return 0;
}

int run_verify(const std::string& identity, int k, int i, int nmax, int count, unsigned seed) {
    if (identity == "moves") {
        std::mt19937 rng(seed);
        std::vector<std::pair<std::pair<int, int>, std::vector<LatticePath>>> pool;
        for (int kk = 2; kk <= 4; ++kk)
            for (int ii = 1; ii <= kk; ++ii) {
                std::vector<LatticePath> paths;
                for (int n = 0; n <= 10; ++n)
                    for (LatticePath& p : enumerate_paths(kk, ii, n)) paths.push_back(std::move(p));
                pool.push_back({{kk, ii}, std::move(paths)});
            }
        int performed = 0;
        bool ok = true;
        while (performed < count && ok) {
            const auto& entry = pool[rng() % pool.size()];
            const auto& paths = entry.second;
            const LatticePath& p = paths[rng() % paths.size()];
            const auto rel = relative_heights(p);
            std::vector<int> ones;
            for (std::size_t t = 0; t < rel.size(); ++t)
                if (rel[t] == 1) ones.push_back(static_cast<int>(t));
            if (ones.empty()) continue;
            LatticePath q = p;
            const int idx = ones[rng() % ones.size()];
            if (rng() % 2 == 0) {
                move_peak_right(q, idx);
            } else if (move_peak_left(q, idx, entry.first.first) < 0) {
                continue;
            }
            const auto after = relative_heights(q);
            ok = std::multiset<int>(after.begin(), after.end()) ==
                 std::multiset<int>(rel.begin(), rel.end());
            ++performed;
        }
        json out{{"count", performed}, {"identity", "moves"}, {"pass", ok}, {"seed", seed}};
        std::cout << canonical(out) << "\n";
        return ok ? 0 : 1;
    }
    VerifyReport rep;
    if (identity == "main")
        rep = verify_main(k, i, nmax);
    else if (identity == "prop71" || identity == "thm72" || identity == "thm73")
        rep = verify_section7(identity, k, i, nmax);
    else
        throw usage_error("unknown identity: " + identity);
    std::cout << canonical(to_json(rep)) << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for overpartition identities"};
    app.require_subcommand(1);

    std::string object = "overpartition", map, direction = "forward", series_name,
                family = "andrews-gordon", identity = "main";
    int n = 0, k = 0, i = 1, peaks_n = 0, qmax = 30, xmax = 0, nmax = 14, count = 10000;
    unsigned seed = 1u;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list objects of a given weight");
    enumerate->add_option("--object", object, "overpartition|superpartition|frobenius|path");
    enumerate->add_option("--n", n, "weight / major index")->required();
    enumerate->add_option("--k", k);
    enumerate->add_option("--i", i);

    CLI::App* stats = app.add_subcommand("stats", "statistics of objects read from stdin");
    stats->add_option("--object", object, "overpartition|frobenius|path");
    stats->add_option("--k", k);
    stats->add_option("--i", i);
    int offset = 0;
    stats->add_option("--offset", offset, "offset for the offset Durfee size");

    CLI::App* biject = app.add_subcommand("biject", "apply a correspondence to stdin objects");
    biject->add_option("--map", map, "frobenius|durfee|ranks|modular|uplift|burge")->required();
    biject->add_option("--direction", direction, "forward|inverse");
    biject->add_option("--k", k);
    biject->add_option("--i", i);

    CLI::App* series = app.add_subcommand("series", "print series coefficients as JSON");
    series->add_option("--name", series_name,
                       "paths|durfee|npeaks|npeaks-aux|j|h|product|special|overpartitions")
        ->required();
    series->add_option("--k", k);
    series->add_option("--i", i);
    series->add_option("--N", peaks_n, "peak count for npeaks/npeaks-aux");
    series->add_option("--qmax", qmax);
    series->add_option("--xmax", xmax);
    series->add_option("--family", family,
                       "andrews-gordon|gollnitz-gordon|gordon-over|gordon-shifted");

    CLI::App* verify = app.add_subcommand("verify", "run an identity check; exit 1 on failure");
    verify->add_option("--identity", identity, "main|prop71|thm72|thm73|moves");
    verify->add_option("--k", k);
    verify->add_option("--i", i);
    verify->add_option("--nmax", nmax);
    verify->add_option("--count", count, "number of random moves for --identity moves");
    verify->add_option("--seed", seed, "seed for the randomized move test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(object, n, k == 0 ? 2 : k, i);
        if (stats->parsed()) return run_stats(object, k, i, offset);
        if (biject->parsed()) return run_biject(map, direction, k, i);
        if (series->parsed()) return run_series(series_name, k == 0 ? 2 : k, i, peaks_n, qmax, xmax, family);
        if (verify->parsed()) return run_verify(identity, k == 0 ? 2 : k, i, nmax, count, seed);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
