// Command-line surface for the exact Weyl-group coinvariant toolkit.
//
// Subcommands: rootsys, invariants, coinv-basis, transfer, harmonics,
// decompose, voronoi, verify-paper. All output is deterministic JSON
// (byte-identical across runs for identical requests); --human adds sorted
// monomial strings next to the machine encodings. Exit status is 0 iff every
// check of the request passed; errors emit {"error": ...} on stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "weylcoinv/casestudies.hpp"
#include "weylcoinv/coinvariants.hpp"
#include "weylcoinv/groebner.hpp"
#include "weylcoinv/invariants.hpp"
#include "weylcoinv/json_io.hpp"
#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/reptheory.hpp"
#include "weylcoinv/rootsystem.hpp"

#ifndef WEYLCOINV_DATA_DIR
#define WEYLCOINV_DATA_DIR "data"
#endif

namespace {

using namespace weylcoinv;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << dump_deterministic(j);
    else
        write_json_file(out_path, j);
}

std::vector<std::string> varnames(const std::string& letter, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(letter + std::to_string(i));
    return names;
}

std::string monomial_human(const Exponent& e, const std::string& letter) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += letter + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Json exponent_list_json(const std::vector<Exponent>& exps) {
    Json arr = Json::array();
    for (const auto& e : exps) arr.push_back(e);
    return arr;
}

Json polynomial_list_json(const std::vector<Polynomial>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(polynomial_to_json(p));
    return arr;
}

struct Request {
    std::string type = "A";
    int rank = 0;
    std::string cartan_path;
    std::string order = "grevlex";
    std::string normalization = "orbit-sum";
    std::string action = "multiplicative";
    std::string shift_str;
    std::string map = "none";
    std::string input_path;
    std::string out_path;
    std::string data_dir = WEYLCOINV_DATA_DIR;
    int dilation = 1;
    bool human = false;
};

RootSystem resolve_root_system(const Request& r) {
    std::string t = r.type;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (t == "CUSTOM") {
        if (r.cartan_path.empty())
            throw std::invalid_argument("--type custom requires --cartan FILE");
        Json j = read_json_file(r.cartan_path);
        const Json& arr = j.is_object() && j.contains("cartan") ? j.at("cartan") : j;
        IntMatrix a;
        for (const auto& row : arr) {
            IntVector v;
            for (const auto& entry : row) v.push_back(entry.get<long>());
            a.push_back(v);
        }
        return build_root_system(a);
    }
    if (r.rank <= 0) throw std::invalid_argument("--rank must be a positive integer");
    return build_root_system(family_from_name(t), r.rank);
}

std::vector<Rational> parse_shift(const std::string& s) {
    std::vector<Rational> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        out.push_back(rational_from_string(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

OrderKind parse_order(const std::string& s) {
    if (s == "grevlex") return OrderKind::Grevlex;
    if (s == "lex") return OrderKind::Lex;
    throw std::invalid_argument("--order must be grevlex or lex");
}

Normalization parse_normalization(const std::string& s) {
    if (s == "orbit-sum") return Normalization::OrbitSum;
    if (s == "averaged") return Normalization::GroupAverage;
    throw std::invalid_argument("--normalization must be orbit-sum or averaged");
}

// Laurent Groebner basis with a selectable order on the embedded 2n-variable
// ring (significance x_1 > .. > x_n > z_1 > .. > z_n).
LaurentGB laurent_gb_with_order(const std::vector<Polynomial>& gens, int n, OrderKind kind) {
    std::vector<Polynomial> embedded;
    for (const auto& g : gens) embedded.push_back(g.embed());
    for (int i = 0; i < n; ++i) {
        Polynomial rel(2 * n);
        Exponent e(2 * n, 0);
        e[i] = 1;
        e[n + i] = 1;
        rel.add_term(e, 1);
        rel.add_term(Exponent(2 * n, 0), -1);
        embedded.push_back(rel);
    }
    LaurentGB lgb;
    lgb.n = n;
    lgb.gb = buchberger(embedded, MonomialOrder::natural(kind, 2 * n));
    return lgb;
}

std::vector<Polynomial> load_polynomials(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("--input FILE is required");
    Json j = read_json_file(path);
    const Json& arr = j.is_object() && j.contains("polynomials") ? j.at("polynomials") : j;
    std::vector<Polynomial> out;
    if (arr.is_array()) {
        for (const auto& pj : arr) out.push_back(polynomial_from_json(pj));
    } else {
        out.push_back(polynomial_from_json(arr));
    }
    if (out.empty()) throw std::invalid_argument("input file holds no polynomials");
    return out;
}

int cmd_rootsys(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    Json j = root_system_to_json(rs);
    emit(j, r.out_path);
    return 0;
}

int cmd_invariants(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    Json out;
    out["family"] = family_name(rs.family);
    out["rank"] = rs.rank;
    out["action"] = r.action;
    std::vector<Polynomial> inv;
    std::string letter;
    if (r.action == "additive") {
        inv = additive_fundamental_invariants(rs);
        letter = "X";
    } else if (r.action == "multiplicative") {
        WeylGroup w = generate_weyl_group(rs);
        inv = multiplicative_fundamental_invariants(rs, w, parse_normalization(r.normalization));
        out["normalization"] = r.normalization;
        letter = "x";
    } else {
        throw std::invalid_argument("--action must be additive or multiplicative");
    }
    out["invariants"] = polynomial_list_json(inv);
    if (r.human) {
        Json h = Json::array();
        for (const auto& p : inv) h.push_back(p.to_string(varnames(letter, rs.rank)));
        out["human"] = h;
    }
    emit(out, r.out_path);
    return 0;
}

int cmd_coinv_basis(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    OrderKind kind = parse_order(r.order);
    std::vector<Rational> shift = parse_shift(r.shift_str);
    Json out;
    out["family"] = family_name(rs.family);
    out["rank"] = rs.rank;
    out["action"] = r.action;
    out["order"] = r.order;
    {
        Json sh = Json::array();
        for (const auto& c : shift) sh.push_back(rational_to_string(c));
        out["shift"] = sh;
    }
    std::vector<Exponent> normal;
    std::string letter;
    if (r.action == "multiplicative") {
        WeylGroup w = generate_weyl_group(rs);
        std::vector<Polynomial> gens = multiplicative_fundamental_invariants(rs, w);
        if (!shift.empty()) {
            if (shift.size() != gens.size())
                throw std::invalid_argument("--shift needs one constant per invariant");
            for (size_t i = 0; i < gens.size(); ++i)
                gens[i] -= Polynomial::constant(rs.rank, shift[i]);
        }
        LaurentGB lgb = laurent_gb_with_order(gens, rs.rank, kind);
        normal = laurent_standard_monomials(lgb);
        letter = "x";
    } else if (r.action == "additive") {
        std::vector<Polynomial> gens = additive_fundamental_invariants(rs);
        if (!shift.empty()) {
            if (shift.size() != gens.size())
                throw std::invalid_argument("--shift needs one constant per invariant");
            for (size_t i = 0; i < gens.size(); ++i)
                gens[i] -= Polynomial::constant(rs.rank, shift[i]);
        }
        GroebnerBasis gb = buchberger(gens, MonomialOrder::natural(kind, rs.rank));
        normal = standard_monomials(gb);
        letter = "X";
    } else {
        throw std::invalid_argument("--action must be additive or multiplicative");
    }
    out["dimension"] = normal.size();
    out["normal_set"] = exponent_list_json(normal);
    if (r.human) {
        Json h = Json::array();
        for (const auto& e : normal) h.push_back(monomial_human(e, letter));
        out["human"] = h;
    }
    emit(out, r.out_path);
    return 0;
}

int cmd_transfer(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    std::vector<Polynomial> inputs = load_polynomials(r.input_path);
    if (r.map == "A") {
        for (auto& p : inputs) p = map_A_poly(p);
    } else if (r.map == "C") {
        for (auto& p : inputs) p = map_C_poly(p);
    } else if (r.map != "none") {
        throw std::invalid_argument("--map must be none, A or C");
    }
    AugmentationFiltration filt(rs.rank);
    std::vector<Polynomial> transferred = transfer_basis(inputs, filt);
    WeylGroup w = generate_weyl_group(rs);
    HilbertIdeal hm = build_hilbert_ideal_multiplicative(rs, w);
    RankReport rr = transfer_rank_certificate(transferred, hm);
    bool independent = rr.rank == transferred.size();
    Json out;
    out["family"] = family_name(rs.family);
    out["rank_of_system"] = rs.rank;
    out["transferred"] = polynomial_list_json(transferred);
    out["rank"] = rr.rank;
    out["quotient_dimension"] = rr.expected;
    out["independent_modulo_hilbert_ideal"] = independent;
    out["spans_quotient"] = rr.full_rank();
    if (rr.dependency) {
        Json dep = Json::array();
        for (const auto& c : *rr.dependency) dep.push_back(rational_to_string(c));
        out["dependency"] = dep;
    }
    if (r.human) {
        Json h = Json::array();
        for (const auto& p : transferred) h.push_back(p.to_string(varnames("x", rs.rank)));
        out["human"] = h;
    }
    emit(out, r.out_path);
    return independent ? 0 : 1;
}

int cmd_harmonics(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    WeylGroup w = generate_weyl_group(rs);
    std::vector<Polynomial> basis;
    std::string letter;
    if (r.action == "additive") {
        basis = harmonic_space_additive(rs);
        letter = "X";
    } else if (r.action == "multiplicative") {
        basis = harmonic_space_multiplicative(rs, w);
        letter = "x";
    } else {
        throw std::invalid_argument("--action must be additive or multiplicative");
    }
    Json out;
    out["family"] = family_name(rs.family);
    out["rank"] = rs.rank;
    out["action"] = r.action;
    out["dimension"] = basis.size();
    out["group_order"] = w.size();
    out["basis"] = polynomial_list_json(basis);
    if (r.human) {
        Json h = Json::array();
        for (const auto& p : basis) h.push_back(p.to_string(varnames(letter, rs.rank)));
        out["human"] = h;
    }
    emit(out, r.out_path);
    return basis.size() == w.size() ? 0 : 1;
}

int cmd_decompose(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    std::vector<Polynomial> inputs = load_polynomials(r.input_path);
    AugmentationFiltration filt(rs.rank);
    Json rows = Json::array();
    bool all_sum = true;
    for (const auto& p : inputs) {
        GradedElement ge = graded_decompose(p, filt);
        Json row;
        row["input"] = polynomial_to_json(p);
        row["parts"] = polynomial_list_json(ge.parts);
        bool sums = ge.sum() == p;
        row["parts_sum_to_input"] = sums;
        all_sum = all_sum && sums;
        if (r.human) {
            Json h = Json::array();
            for (const auto& part : ge.parts) h.push_back(part.to_string(varnames("x", rs.rank)));
            row["human"] = h;
        }
        rows.push_back(row);
    }
    Json out;
    out["family"] = family_name(rs.family);
    out["rank"] = rs.rank;
    out["decompositions"] = rows;
    emit(out, r.out_path);
    return all_sum ? 0 : 1;
}

int cmd_voronoi(const Request& r) {
    RootSystem rs = resolve_root_system(r);
    if (r.dilation < 0) throw std::invalid_argument("--dilation must be nonnegative");
    std::vector<IntVector> pts = dilated_voronoi_weights(rs, r.dilation);
    Json out;
    out["family"] = family_name(rs.family);
    out["rank"] = rs.rank;
    out["dilation"] = r.dilation;
    out["count"] = pts.size();
    {
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back(p);
        out["weights"] = arr;
    }
    if (rs.family == Family::A || rs.family == Family::C) {
        WeylGroup w = generate_weyl_group(rs);
        CharacterTable t = character_table(rs, w);
        std::vector<Rational> mult = voronoi_multiplicities(rs, w, r.dilation);
        Json arr = Json::array();
        for (size_t i = 0; i < mult.size(); ++i) {
            Json entry;
            entry["irrep"] = t.row_labels[i];
            entry["multiplicity"] = rational_to_string(mult[i]);
            arr.push_back(entry);
        }
        out["multiplicities"] = arr;
    }
    emit(out, r.out_path);
    return 0;
}

int cmd_verify_paper(const Request& r) {
    TableReport rep = verify_tables(r.data_dir);
    Json rows = Json::array();
    for (const auto& c : rep.checks) {
        Json row;
        row["table"] = c.table;
        row["row"] = c.row;
        row["check"] = c.what;
        row["status"] = c.pass ? "pass" : "fail";
        row["detail"] = c.detail;
        rows.push_back(row);
    }
    Json out;
    out["checks"] = rows;
    out["total"] = rep.checks.size();
    out["failures"] = rep.failures();
    emit(out, r.out_path);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact additive and multiplicative coinvariant computations for Weyl groups"};
    app.require_subcommand(1);

    Request r;

    auto add_rs_options = [&](CLI::App* sub) {
        sub->add_option("--type", r.type, "Root system family: A, B, C, D, G2 or custom");
        sub->add_option("--rank", r.rank, "Rank of the root system");
        sub->add_option("--cartan", r.cartan_path, "JSON file with a custom Cartan matrix");
    };
    auto add_out_options = [&](CLI::App* sub) {
        sub->add_option("--out", r.out_path, "Write the JSON artifact to this file");
        sub->add_flag("--human", r.human, "Add sorted human-readable renderings");
    };

    CLI::App* rootsys = app.add_subcommand("rootsys", "Describe a root system and its generators");
    add_rs_options(rootsys);
    add_out_options(rootsys);

    CLI::App* invariants = app.add_subcommand("invariants", "Fundamental invariants of the action");
    add_rs_options(invariants);
    add_out_options(invariants);
    invariants->add_option("--action", r.action, "additive or multiplicative");
    invariants->add_option("--normalization", r.normalization, "orbit-sum or averaged");

    CLI::App* coinv = app.add_subcommand("coinv-basis", "Normal set of the coinvariant space");
    add_rs_options(coinv);
    add_out_options(coinv);
    coinv->add_option("--action", r.action, "additive or multiplicative");
    coinv->add_option("--order", r.order, "grevlex or lex");
    coinv->add_option("--shift", r.shift_str, "Comma-separated shift constants c1,...,cn");

    CLI::App* transfer = app.add_subcommand("transfer", "Graded transfer of additive basis elements");
    add_rs_options(transfer);
    add_out_options(transfer);
    transfer->add_option("--input", r.input_path, "JSON file with the additive polynomials")->required();
    transfer->add_option("--map", r.map, "Apply the ambient-to-weight coordinate map first: none, A or C");

    CLI::App* harmonics = app.add_subcommand("harmonics", "Harmonic space of the action");
    add_rs_options(harmonics);
    add_out_options(harmonics);
    harmonics->add_option("--action", r.action, "additive or multiplicative");

    CLI::App* decompose = app.add_subcommand("decompose", "Graded decomposition along the augmentation filtration");
    add_rs_options(decompose);
    add_out_options(decompose);
    decompose->add_option("--input", r.input_path, "JSON file with Laurent polynomials")->required();

    CLI::App* voronoi = app.add_subcommand("voronoi", "Weights of the dilated Voronoi cell");
    add_rs_options(voronoi);
    add_out_options(voronoi);
    voronoi->add_option("--dilation", r.dilation, "Dilation factor (default 1)");

    CLI::App* verify = app.add_subcommand("verify-paper", "Verify every bundled table fixture");
    add_out_options(verify);
    verify->add_option("--data", r.data_dir, "Directory holding the table fixtures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(rootsys)) return cmd_rootsys(r);
        if (app.got_subcommand(invariants)) return cmd_invariants(r);
        if (app.got_subcommand(coinv)) return cmd_coinv_basis(r);
        if (app.got_subcommand(transfer)) return cmd_transfer(r);
        if (app.got_subcommand(harmonics)) return cmd_harmonics(r);
        if (app.got_subcommand(decompose)) return cmd_decompose(r);
        if (app.got_subcommand(voronoi)) return cmd_voronoi(r);
        if (app.got_subcommand(verify)) return cmd_verify_paper(r);
    } catch (const std::exception& e) {
        Json err;
        err["error"] = e.what();
        std::cerr << dump_deterministic(err);
        return 2;
    }
    return 2;
}
