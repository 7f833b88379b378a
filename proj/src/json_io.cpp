#include "weylcoinv/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "weylcoinv/monomial.hpp"

namespace weylcoinv {

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["arity"] = p.arity();
    Json terms = Json::array();
    MonomialOrder ord = MonomialOrder::natural(OrderKind::Grevlex, p.arity());
    for (const auto& [e, c] : p.sorted_terms(ord)) {
        Json t;
        t["exp"] = e;
        t["coeff"] = rational_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.contains("arity") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON wants arity and terms");
    Polynomial p(j.at("arity").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponent e = t.at("exp").get<Exponent>();
        if (e.size() != static_cast<size_t>(p.arity()))
            throw std::invalid_argument("exponent arity mismatch in polynomial JSON");
        p.add_term(e, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json root_system_to_json(const RootSystem& rs) {
    Json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["cartan"] = rs.cartan;
    Json sym = Json::array();
    for (const auto& d : rs.symmetrizer) sym.push_back(d.get_str());
    j["symmetrizer"] = std::move(sym);
    if (rs.family != Family::Custom) j["group_order"] = rs.weyl_order();
    j["generators"] = rs.generators;
    Json gram = Json::array();
    for (const auto& row : rs.coroot_gram) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational_to_string(v));
        gram.push_back(std::move(r));
    }
    j["coroot_gram"] = std::move(gram);
    return j;
}

std::string dump_deterministic(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << dump_deterministic(j);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return Json::parse(in);
}

}  // namespace weylcoinv
