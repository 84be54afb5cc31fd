#include "oplab/io.hpp"

namespace oplab {

std::string canonical(const json& j) { return j.dump(); }

namespace {

json parts_to_json(const std::vector<Part>& parts) {
    json arr = json::array();
    for (const Part& p : parts) arr.push_back(json{{"o", p.overlined}, {"v", p.value}});
    return arr;
}

std::vector<Part> parts_from_json(const json& arr) {
    std::vector<Part> parts;
    for (const auto& e : arr) parts.push_back({e.at("v").get<int>(), e.at("o").get<bool>()});
    return parts;
}

}  // namespace

json to_json(const Overpartition& op) { return json{{"parts", parts_to_json(op.parts())}}; }

Overpartition overpartition_from_json(const json& j) {
    return Overpartition(parts_from_json(j.at("parts")));
}

json to_json(const Superpartition& sp) { return json{{"parts", parts_to_json(sp.parts())}}; }

Superpartition superpartition_from_json(const json& j) {
    return Superpartition(parts_from_json(j.at("parts")));
}

json to_json(const FrobeniusSymbol& f) {
    return json{{"bottom", parts_to_json(f.bottom())}, {"top", f.top()}};
}

FrobeniusSymbol frobenius_from_json(const json& j) {
    return FrobeniusSymbol(j.at("top").get<std::vector<int>>(),
                           parts_from_json(j.at("bottom")));
}

json to_json(const LatticePath& p) {
    json steps = json::array();
    for (Step s : p.steps) steps.push_back(step_name(s));
    return json{{"start", p.start_height}, {"steps", steps}};
}

LatticePath path_from_json(const json& j) {
    LatticePath p;
    p.start_height = j.at("start").get<int>();
    for (const auto& s : j.at("steps")) p.steps.push_back(step_from_name(s.get<std::string>()));
    return p;
}

json to_json(const MultiplicitySequence& ms) {
    json arr = json::array();
    for (const Mult& m : ms.entries()) arr.push_back(json{{"c", m.count}, {"o", m.overlined}});
    return json{{"mults", arr}};
}

MultiplicitySequence multiplicity_sequence_from_json(const json& j) {
    std::vector<Mult> f;
    for (const auto& e : j.at("mults"))
        f.push_back({e.at("c").get<int>(), e.at("o").get<bool>()});
    return MultiplicitySequence(std::move(f));
}

json to_json(const TwoModularDiagram& d) { return json{{"rows", row_weights(d)}}; }

TwoModularDiagram diagram_from_json(const json& j) {
    return diagram_from_row_weights(j.at("rows").get<std::vector<int>>());
}

json to_json(const UpliftCertificate& c) {
    return json{{"b", c.b},
                {"base", to_json(c.base)},
                {"i", c.i},
                {"k", c.k},
                {"lambda", c.lambda}};
}

UpliftCertificate certificate_from_json(const json& j) {
    UpliftCertificate c;
    c.base = path_from_json(j.at("base"));
    c.lambda = j.at("lambda").get<std::vector<int>>();
    c.b = j.at("b").get<std::vector<int>>();
    c.k = j.at("k").get<int>();
    c.i = j.at("i").get<int>();
    return c;
}

json to_json(const TruncatedSeries& s) {
    json arr = json::array();
    for (int q = 0; q <= s.qmax(); ++q) {
        if (s.coeff(q).zero()) continue;
        json terms = json::array();
        for (const auto& t : s.coeff(q).terms()) {
            json term{{"a", t.a}, {"c", t.c.str()}};
            if (t.x != 0) term["x"] = t.x;
            terms.push_back(term);
        }
        arr.push_back(json{{"q", q}, {"terms", terms}});
    }
    return arr;
}

json to_json(const VerifyReport& r) {
    json out{{"elapsed_ms", r.elapsed_ms}, {"i", r.i},    {"identity", r.identity},
             {"k", r.k},                   {"nmax", r.nmax}, {"pass", r.pass}};
    if (r.first.found) {
        out["first_discrepancy"] = json{{"N", r.first.N},
                                        {"j", r.first.j},
                                        {"left", r.first.left},
                                        {"left_count", r.first.left_count},
                                        {"n", r.first.n},
                                        {"right", r.first.right},
                                        {"right_count", r.first.right_count}};
    } else {
        out["first_discrepancy"] = nullptr;
    }
    return out;
}

}  // namespace oplab
