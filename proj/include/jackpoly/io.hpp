#pragma once

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jackpoly/binomial.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/measures.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/series.hpp"
#include "jackpoly/specialization.hpp"
#include "jackpoly/symfun.hpp"
#include "jackpoly/vk.hpp"

namespace jackpoly {

using json = nlohmann::json;

inline json rat_to_json(const Rat& r) { return rat_str(r); }

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    return parse_rat(j.get<std::string>());
}

inline json parts_to_json(const Parts& p) { return json(p); }

inline Parts parts_from_json(const json& j) { return j.get<Parts>(); }

inline json symfun_to_json(const SymFun& f) {
    json terms = json::array();
    for (const auto& [key, c] : f.terms) terms.push_back({{"m", key}, {"c", rat_to_json(c)}});
    return {{"nvars", f.nvars}, {"terms", terms}};
}

inline SymFun symfun_from_json(const json& j) {
    SymFun f(j.at("nvars").get<long>());
    for (const auto& t : j.at("terms")) f.add_term(parts_from_json(t.at("m")), rat_from_json(t.at("c")));
    return f;
}

inline json multipoly_to_json(const MultiPoly& f) {
    json terms = json::array();
    for (const auto& [key, c] : f.terms) terms.push_back({{"e", key}, {"c", rat_to_json(c)}});
    return {{"nvars", f.nvars}, {"terms", terms}};
}

inline MultiPoly multipoly_from_json(const json& j) {
    MultiPoly f(j.at("nvars").get<long>());
    for (const auto& t : j.at("terms"))
        f.add_term(t.at("e").get<std::vector<long>>(), rat_from_json(t.at("c")));
    return f;
}

inline json series_to_json(const Series& s, const std::string& basis) {
    json c = json::array();
    for (const Rat& v : s.c) c.push_back(rat_to_json(v));
    return {{"order", s.K}, {"basis", basis}, {"coeffs", c}};
}

inline Series series_from_json(const json& j) {
    Series s(j.at("order").get<long>());
    const auto& c = j.at("coeffs");
    for (size_t i = 0; i < c.size() && i < s.c.size(); ++i) s.c[i] = rat_from_json(c[i]);
    return s;
}

inline json measure_to_json(const DiscreteMeasure& m) {
    json mass = json::array();
    for (const auto& [xi, v] : m.mass) mass.push_back({{"xi", xi}, {"mass", rat_to_json(v)}});
    return {{"mass", mass}};
}

inline DiscreteMeasure measure_from_json(const json& j) {
    DiscreteMeasure m;
    for (const auto& t : j.at("mass")) m.mass[t.at("xi").get<long>()] = rat_from_json(t.at("mass"));
    return m;
}

inline json branching_row_to_json(const BranchingRow& row) {
    json children = json::array();
    for (const auto& [mu, w] : row.children)
        children.push_back({{"mu", mu.p}, {"w", rat_to_json(w)}});
    return {{"parent", row.parent.p}, {"children", children}};
}

inline BranchingRow branching_row_from_json(const json& j) {
    BranchingRow row;
    row.parent = Signature(parts_from_json(j.at("parent")));
    for (const auto& t : j.at("children")) {
        const Parts mu = parts_from_json(t.at("mu"));
        row.children.emplace_back(mu.empty() ? Signature{} : Signature(mu),
                                  rat_from_json(t.at("w")));
    }
    return row;
}

inline json binomial_to_json(const BinomialExpansion& ex) {
    json coeffs = json::array();
    for (const auto& [mu, c] : ex.coeffs) coeffs.push_back({{"mu", mu.p}, {"c", rat_to_json(c)}});
    return {{"lambda", ex.lambda.p}, {"n", ex.n},      {"k", ex.k},
            {"laurent_shift", ex.laurent_shift},       {"reduced", ex.reduced.p},
            {"coeffs", coeffs}};
}

inline json extended_params_to_json(const ExtendedParams& p) {
    json a = json::array(), b = json::array();
    for (const Rat& v : p.alpha) a.push_back(rat_to_json(v));
    for (const Rat& v : p.beta) b.push_back(rat_to_json(v));
    return {{"alpha", a}, {"beta", b}, {"gamma", rat_to_json(p.gamma)}};
}

inline ExtendedParams extended_params_from_json(const json& j) {
    ExtendedParams p;
    for (const auto& v : j.at("alpha")) p.alpha.push_back(rat_from_json(v));
    for (const auto& v : j.at("beta")) p.beta.push_back(rat_from_json(v));
    p.gamma = rat_from_json(j.at("gamma"));
    p.validate();
    return p;
}

inline json vk_params_to_json(const VkParams& p) {
    return {{"plus", extended_params_to_json(p.plus)}, {"minus", extended_params_to_json(p.minus)}};
}

inline VkParams vk_params_from_json(const json& j) {
    VkParams p;
    p.plus = extended_params_from_json(j.at("plus"));
    p.minus = extended_params_from_json(j.at("minus"));
    p.validate();
    return p;
}

inline json convergence_table_to_json(const ConvergenceTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json merr = json::array();
        for (const Rat& e : r.moment_error) merr.push_back(rat_to_json(e));
        rows.push_back({{"n", r.n}, {"sup_error", r.sup_error}, {"moment_error", merr}});
    }
    return {{"sequence", t.sequence_name},
            {"theta", rat_to_json(t.theta)},
            {"k", t.k},
            {"seed", t.grid.seed},
            {"grid", {{"roots", t.grid.roots}, {"randoms", t.grid.randoms}}},
            {"params", vk_params_to_json(t.params)},
            {"rows", rows}};
}

inline std::string convergence_table_to_csv(const ConvergenceTable& t) {
    std::ostringstream os;
    os << "# sequence=" << t.sequence_name << " theta=" << rat_str(t.theta) << " k=" << t.k
       << " seed=" << t.grid.seed << "\n";
    os << "n,sup_error";
    const size_t depth = t.rows.empty() ? 4 : t.rows.front().moment_error.size();
    for (size_t j = 1; j <= depth; ++j) os << ",moment_error_" << j;
    os << "\n";
    for (const auto& r : t.rows) {
        os << r.n << "," << r.sup_error;
        for (const Rat& e : r.moment_error) os << "," << to_double(e);
        os << "\n";
    }
    return os.str();
}

inline std::string measure_to_csv(const DiscreteMeasure& m) {
    std::ostringstream os;
    os << "xi,mass\n";
    for (const auto& [xi, v] : m.mass) os << xi << "," << rat_str(v) << "\n";
    return os.str();
}

inline std::string branching_row_to_csv(const BranchingRow& row) {
    std::ostringstream os;
    os << "mu,weight\n";
    for (const auto& [mu, w] : row.children)
        os << "\"" << parts_str(mu.p) << "\"," << rat_str(w) << "\n";
    return os.str();
}

inline std::string symfun_to_csv(const SymFun& f) {
    std::ostringstream os;
    os << "monomial,coefficient\n";
    for (const auto& [key, c] : f.terms)
        os << "\"" << parts_str(key) << "\"," << rat_str(c) << "\n";
    return os.str();
}

}  // namespace jackpoly
