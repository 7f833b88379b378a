#include "weylcoinv/rootsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace weylcoinv {

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

IntMatrix family_cartan(Family family, int rank) {
    auto chain = [&](int n) {
        IntMatrix a(n, IntVector(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
        return a;
    };
    switch (family) {
        case Family::A:
            if (rank < 1) throw std::invalid_argument("family A needs rank >= 1");
            return chain(rank);
        case Family::B: {
            if (rank < 2) throw std::invalid_argument("family B needs rank >= 2");
            IntMatrix a = chain(rank);
            a[rank - 2][rank - 1] = -2;
            return a;
        }
        case Family::C: {
            if (rank < 2) throw std::invalid_argument("family C needs rank >= 2");
            IntMatrix a = chain(rank);
            a[rank - 1][rank - 2] = -2;
            return a;
        }
        case Family::D: {
            if (rank < 3) throw std::invalid_argument("family D needs rank >= 3");
            IntMatrix a = chain(rank - 1);
            for (auto& row : a) row.push_back(0);
            a.push_back(IntVector(rank, 0));
            a[rank - 1][rank - 1] = 2;
            a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
            a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
            return a;
        }
        case Family::G:
            if (rank != 2) throw std::invalid_argument("family G needs rank 2");
            return {{2, -1}, {-3, 2}};
        case Family::Custom:
            throw std::invalid_argument("custom family requires an explicit Cartan matrix");
    }
    throw std::logic_error("family_cartan: bad enum");
}

std::vector<Integer> family_symmetrizer(Family family, int rank) {
    std::vector<Integer> d(rank, Integer(1));
    switch (family) {
        case Family::B:
            for (int i = 0; i + 1 < rank; ++i) d[i] = 2;
            break;
        case Family::C:
            d[rank - 1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

void validate_cartan_shape(const IntMatrix& a) {
    size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("Cartan matrix not square");
    for (size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("asymmetric zero pattern in Cartan matrix");
        }
    }
}

// Positive rational diagonal d with A * diag(d) symmetric, scaled to
// coprime integers; found by propagating d_j / d_i = A_ji / A_ij along the
// nonzero entries of each connected component.
std::vector<Integer> find_symmetrizer(const IntMatrix& a) {
    size_t n = a.size();
    std::vector<Rational> d(n, Rational(0));
    for (size_t start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<size_t> stack{start};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rational dj = d[i] * Rational(a[j][i]) / Rational(a[i][j]);
                if (d[j] == 0) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("Cartan matrix not symmetrizable");
                }
            }
        }
    }
    Integer den_lcm(1), num_gcd(0);
    for (const auto& v : d) {
        if (v <= 0) throw std::invalid_argument("non-positive symmetrizer entry");
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    std::vector<Integer> out(n);
    for (size_t i = 0; i < n; ++i) {
        Rational scaled = d[i] * Rational(den_lcm);
        out[i] = scaled.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), out[i].get_mpz_t());
    }
    for (auto& v : out) v /= num_gcd;
    return out;
}

RootSystem finish_root_system(Family family, int rank, IntMatrix cartan) {
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.cartan = std::move(cartan);
    rs.symmetrizer = family == Family::Custom ? find_symmetrizer(rs.cartan)
                                              : family_symmetrizer(family, rank);

    // Coroot Gram G_ij = A_ij / d_i; symmetric because A * diag(d) is, after
    // rescaling rows by 1/(d_i d_j) — positive definiteness is equivalent.
    rs.coroot_gram.assign(rank, QVector(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            rs.coroot_gram[i][j] = Rational(rs.cartan[i][j]) / Rational(rs.symmetrizer[i]);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (rs.coroot_gram[i][j] != rs.coroot_gram[j][i])
                throw std::invalid_argument("symmetrizer does not symmetrize the Cartan matrix");
    if (!is_positive_definite(rs.coroot_gram))
        throw std::invalid_argument("Cartan matrix is not of finite type");
    rs.weight_gram = q_inverse(rs.coroot_gram);

    rs.generators.reserve(rank);
    for (int i = 0; i < rank; ++i) {
        IntMatrix s = int_identity(rank);
        for (int l = 0; l < rank; ++l) s[l][i] = (l == i ? 1 : 0) - rs.cartan[i][l];
        rs.generators.push_back(std::move(s));
    }
    return rs;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G: return "G2";
        case Family::Custom: return "custom";
    }
    throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "G2" || s == "G") return Family::G;
    if (s == "custom") return Family::Custom;
    throw std::invalid_argument("unknown family: " + s);
}

long RootSystem::weyl_order() const {
    switch (family) {
        case Family::A: return factorial(rank + 1);
        case Family::B:
        case Family::C: return (1L << rank) * factorial(rank);
        case Family::D: return (1L << (rank - 1)) * factorial(rank);
        case Family::G: return 12;
        case Family::Custom:
            throw std::domain_error("no closed-form group order for custom root systems");
    }
    throw std::logic_error("weyl_order: bad enum");
}

RootSystem build_root_system(Family family, int rank) {
    return finish_root_system(family, rank, family_cartan(family, rank));
}

RootSystem build_root_system(const IntMatrix& cartan) {
    validate_cartan_shape(cartan);
    return finish_root_system(Family::Custom, static_cast<int>(cartan.size()), cartan);
}

size_t default_element_cap() {
    if (const char* env = std::getenv("WEYL_COINV_ELEMENT_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
    }
    return 1000000;
}

size_t WeylGroup::index_of(const IntMatrix& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || *it != m) throw std::invalid_argument("matrix not in group");
    return static_cast<size_t>(it - elements.begin());
}

WeylGroup generate_weyl_group(const RootSystem& rs, size_t element_cap) {
    if (element_cap == 0) element_cap = default_element_cap();
    std::set<IntMatrix> seen;
    std::vector<IntMatrix> frontier{int_identity(rs.rank)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : rs.generators) {
                IntMatrix prod = int_mul(g, m);
                if (seen.insert(prod).second) {
                    next.push_back(std::move(prod));
                    if (seen.size() > element_cap)
                        throw std::runtime_error(
                            "Weyl group closure exceeded the element cap (set "
                            "WEYL_COINV_ELEMENT_CAP to raise it)");
                }
            }
        frontier = std::move(next);
    }
    WeylGroup w;
    w.elements.assign(seen.begin(), seen.end());
    w.identity_index = w.index_of(int_identity(rs.rank));
    return w;
}

std::vector<IntVector> orbit(const WeylGroup& w, const IntVector& weight) {
    std::set<IntVector> out;
    for (const auto& m : w.elements) out.insert(int_apply(m, weight));
    return {out.begin(), out.end()};
}

Rational pairing(const RootSystem& rs, const QVector& mu, const QVector& nu) {
    if (mu.size() != static_cast<size_t>(rs.rank) || nu.size() != static_cast<size_t>(rs.rank))
        throw std::invalid_argument("pairing: dimension mismatch");
    Rational total(0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) total += mu[i] * rs.weight_gram[i][j] * nu[j];
    return total;
}

Rational norm_sq(const RootSystem& rs, const QVector& mu) { return pairing(rs, mu, mu); }

namespace {

QVector to_q(const IntVector& v) {
    QVector q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

// Integer upper bound for sqrt of a nonnegative rational.
Integer ceil_sqrt_upper(const Rational& r) {
    if (r <= 0) return 0;
    Integer num = r.get_num(), den = r.get_den();
    Integer q = num / den + 1;  // >= r
    Integer root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    if (root * root < q) root += 1;
    return root;
}

Rational coroot_norm_sq(const RootSystem& rs, const IntVector& c) {
    Rational total(0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            total += Rational(c[i]) * rs.coroot_gram[i][j] * Rational(c[j]);
    return total;
}

// All nonzero coroot lattice vectors that can witness a Voronoi violation
// for any dilation: norm at most twice the covering-radius bound rho_up.
std::vector<IntVector> voronoi_witness_candidates(const RootSystem& rs, const Rational& rho_up) {
    int n = rs.rank;
    // |c_i| <= ||lambda|| / sqrt(lambda_min(G)); lambda_min >= det / max_eig^(n-1),
    // max_eig <= max absolute row sum.
    Rational det = q_det(rs.coroot_gram);
    Rational max_row(0);
    for (int i = 0; i < n; ++i) {
        Rational row(0);
        for (int j = 0; j < n; ++j) row += rational_abs(rs.coroot_gram[i][j]);
        max_row = std::max(max_row, row);
    }
    Rational inv_lambda_min_bound(1);
    for (int k = 0; k < n - 1; ++k) inv_lambda_min_bound *= max_row;
    inv_lambda_min_bound /= det;
    Integer box = ceil_sqrt_upper(4 * rho_up * rho_up * inv_lambda_min_bound) + 1;
    if (!box.fits_sint_p()) throw std::overflow_error("Voronoi enumeration box too large");
    int b = static_cast<int>(box.get_si());

    Rational limit = 4 * rho_up * rho_up;
    std::vector<IntVector> out;
    IntVector c(n, -b);
    while (true) {
        bool zero = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
        if (!zero && coroot_norm_sq(rs, c) <= limit) out.push_back(c);
        int i = n - 1;
        while (i >= 0 && c[i] == b) c[i--] = -b;
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

}  // namespace

std::vector<IntVector> dilated_voronoi_weights(const RootSystem& rs, int dilation) {
    if (dilation < 0) throw std::invalid_argument("dilated_voronoi_weights: negative dilation");
    int n = rs.rank;
    if (dilation == 0) return {IntVector(n, 0)};

    // rho_up >= covering radius: (1/2) sum_i ||alpha_i^||.
    Rational rho_up(0);
    for (int i = 0; i < n; ++i) rho_up += Rational(ceil_sqrt_upper(rs.coroot_gram[i][i]));
    rho_up /= 2;

    std::vector<IntVector> lambdas = voronoi_witness_candidates(rs, rho_up);
    std::vector<Rational> lambda_norms;
    lambda_norms.reserve(lambdas.size());
    for (const auto& l : lambdas) lambda_norms.push_back(coroot_norm_sq(rs, l));

    // |m_i| = |<mu, alpha_i^>| <= ||mu|| ||alpha_i^|| <= d rho_up sqrt(G_ii).
    std::vector<long> box(n);
    for (int i = 0; i < n; ++i) {
        Rational bound = Rational(dilation) * rho_up * Rational(ceil_sqrt_upper(rs.coroot_gram[i][i]));
        Integer b = bound.get_num() / bound.get_den() + 1;
        box[i] = b.get_si();
    }

    std::set<IntVector> result;
    IntVector m(n);
    for (int i = 0; i < n; ++i) m[i] = -box[i];
    while (true) {
        bool inside = true;
        for (size_t k = 0; k < lambdas.size() && inside; ++k) {
            long dot = 0;
            for (int i = 0; i < n; ++i) dot += m[i] * lambdas[k][i];
            if (Rational(2 * dot) > Rational(dilation) * lambda_norms[k]) inside = false;
        }
        if (inside) result.insert(m);
        int i = n - 1;
        while (i >= 0 && m[i] == box[i]) {
            m[i] = -box[i];
            --i;
        }
        if (i < 0) break;
        ++m[i];
    }
    return {result.begin(), result.end()};
}

}  // namespace weylcoinv
