#include "netforge/serialization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace netforge::serialization {

using algebra::AlgebraicElement;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::UniPoly;
using combinat::LatinSquare;
using combinat::OlsPair;
using net::NetIncidence;

json square_to_json(const LatinSquare& L) {
    const int k = L.order();
    json grid = json::array();
    for (int r = 1; r <= k; ++r) {
        json row = json::array();
        for (int c = 1; c <= k; ++c) row.push_back(L.at(r, c));
        grid.push_back(std::move(row));
    }
    return {{"order", k}, {"grid", std::move(grid)}};
}

LatinSquare square_from_json(const json& j) {
    const int k = j.at("order").get<int>();
    const json& grid = j.at("grid");
    if (!grid.is_array() || static_cast<int>(grid.size()) != k)
        throw std::invalid_argument("grid must have `order` rows");
    std::vector<int> flat;
    flat.reserve(k * k);
    for (const json& row : grid) {
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw std::invalid_argument("grid must have `order` columns");
        for (const json& v : row) flat.push_back(v.get<int>());
    }
    return LatinSquare::from_grid(k, std::move(flat));
}

json pair_to_json(const OlsPair& p) {
    return {{"order", p.first.order()},
            {"first", square_to_json(p.first)},
            {"second", square_to_json(p.second)}};
}

OlsPair pair_from_json(const json& j) {
    return OlsPair(square_from_json(j.at("first")), square_from_json(j.at("second")));
}

json incidence_to_json(const NetIncidence& n) {
    json points = json::array();
    for (const net::ChiPoint& p : n.points)
        points.push_back({p.lines[0], p.lines[1], p.lines[2], p.lines[3]});
    return {{"k", n.k}, {"points", std::move(points)}};
}

NetIncidence incidence_from_json(const json& j) {
    NetIncidence n;
    n.k = j.at("k").get<int>();
    for (const json& p : j.at("points")) {
        if (!p.is_array() || p.size() != 4)
            throw std::invalid_argument("each point must list 4 line indices");
        n.points.push_back({{p[0].get<int>(), p[1].get<int>(), p[2].get<int>(), p[3].get<int>()}});
    }
    std::sort(n.points.begin(), n.points.end());
    return n;
}

std::string incidence_to_text(const NetIncidence& n) {
    std::ostringstream out;
    for (const net::ChiPoint& p : n.points)
        out << p.lines[0] << " " << p.lines[1] << " " << p.lines[2] << " " << p.lines[3]
            << "\n";
    return out.str();
}

NetIncidence incidence_from_text(const std::string& text) {
    NetIncidence n;
    std::istringstream in(text);
    std::string line;
    int max_index = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        net::ChiPoint p{};
        for (int i = 0; i < 4; ++i) {
            if (!(ls >> p.lines[i])) throw std::invalid_argument("expected 4 indices per line");
            max_index = std::max(max_index, p.lines[i]);
        }
        n.points.push_back(p);
    }
    n.k = max_index;
    std::sort(n.points.begin(), n.points.end());
    return n;
}

json classification_to_json(const equivalence::Classification& c) {
    json classes = json::array();
    for (const equivalence::EquivalenceClass& cl : c.classes) {
        json rejected = json::object();
        for (const auto& [kind, count] : cl.rejected_moves) rejected[kind] = count;
        classes.push_back({{"class_id", cl.class_id},
                           {"representative", pair_to_json(cl.representative)},
                           {"orbit_size", cl.orbit_size},
                           {"rejected_moves", std::move(rejected)}});
    }
    json out{{"k", c.k}, {"total_pairs", c.total_pairs}, {"classes", std::move(classes)}};
    if (c.candidates_merge) out["candidates_merge"] = *c.candidates_merge;
    if (c.resolved_open_bound) out["resolved_open_bound"] = *c.resolved_open_bound;
    return out;
}

std::string classification_to_csv(const equivalence::Classification& c) {
    std::ostringstream out;
    out << "class_id,orbit_size\n";
    for (const equivalence::EquivalenceClass& cl : c.classes)
        out << cl.class_id << "," << cl.orbit_size << "\n";
    return out.str();
}

json certificate_to_json(const realization::CertificateMatrix& m) {
    json rows = json::array();
    for (const realization::FieldVec& r : m.rows)
        rows.push_back({r[0].to_string(), r[1].to_string(), r[2].to_string()});
    return {{"k", m.k}, {"modulus", m.modulus.to_string()}, {"rows", std::move(rows)}};
}

realization::CertificateMatrix certificate_from_json(const json& j) {
    realization::CertificateMatrix m;
    m.k = j.at("k").get<int>();
    m.modulus = unipoly_from_text(j.at("modulus").get<std::string>(), "x");
    for (const json& row : j.at("rows")) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("certificate rows must have 3 entries");
        realization::FieldVec v{
            AlgebraicElement(unipoly_from_text(row[0].get<std::string>(), "w"), m.modulus),
            AlgebraicElement(unipoly_from_text(row[1].get<std::string>(), "w"), m.modulus),
            AlgebraicElement(unipoly_from_text(row[2].get<std::string>(), "w"), m.modulus)};
        m.rows.push_back(std::move(v));
    }
    return m;
}

std::string outcome_to_string(realization::Outcome o) {
    switch (o) {
        case realization::Outcome::Realizable: return "Realizable";
        case realization::Outcome::Empty: return "Empty";
        case realization::Outcome::Unknown: return "Unknown";
    }
    throw std::logic_error("unreachable");
}

json verdict_to_json(int k, const std::string& class_id,
                     const realization::RealizationVerdict& v) {
    json out{{"k", k},
             {"class_id", class_id},
             {"outcome", outcome_to_string(v.outcome)},
             {"trace", v.trace}};
    if (v.certificate) out["certificate"] = certificate_to_json(*v.certificate);
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

json ideal_to_json(const algebra::Ideal& ideal) {
    json gens = json::array();
    for (const MultiPoly& g : ideal.generators) gens.push_back(g.to_string());
    return {{"variables", *ideal.ring}, {"generators", std::move(gens)}};
}

algebra::Ideal ideal_from_json(const json& j) {
    algebra::Ring ring =
        algebra::make_ring(j.at("variables").get<std::vector<std::string>>());
    std::vector<MultiPoly> gens;
    for (const json& g : j.at("generators"))
        gens.push_back(algebra::parse_poly(ring, g.get<std::string>()));
    return algebra::Ideal(std::move(ring), std::move(gens));
}

UniPoly unipoly_from_text(const std::string& text, const std::string& var) {
    algebra::Ring ring = algebra::make_ring({var});
    MultiPoly p = algebra::parse_poly(ring, text);
    Rational c;
    if (p.is_constant(&c)) return p.is_zero() ? UniPoly() : UniPoly::constant(c);
    auto uni = algebra::as_univariate(p);
    if (!uni) throw std::invalid_argument("expected a univariate polynomial in " + var);
    return uni->second;
}

}  // namespace netforge::serialization
