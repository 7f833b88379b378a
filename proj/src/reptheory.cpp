#include "weylcoinv/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weylcoinv {

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// Descending lexicographic order: (n) first, (1,..,1) last.
std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

// Ascending lexicographic order on the pair ((), (1,..,1)) first.
std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int a = 0; a <= n; ++a)
        for (const auto& la : partitions_of(a))
            for (const auto& mu : partitions_of(n - a)) out.emplace_back(la, mu);
    std::sort(out.begin(), out.end());
    return out;
}

std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string bipartition_to_string(const Bipartition& bp) {
    return "(" + partition_to_string(bp.first) + "," + partition_to_string(bp.second) + ")";
}

namespace {

// Beta-number set of a partition: distinct values lambda_i + (k - 1 - i),
// kept sorted descending. Removing a border strip of length l moves one
// beta-number down by l; the strip height is the number of beta-numbers
// jumped over.
std::vector<long> beta_set(const Partition& lambda) {
    long k = static_cast<long>(lambda.size());
    std::vector<long> beta(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i)
        beta[i] = lambda[i] + (k - 1 - static_cast<long>(i));
    return beta;
}

long mn_symmetric(std::vector<long>& beta, const Partition& mu, size_t k) {
    if (k == mu.size()) return 1;
    long l = mu[k];
    long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        long target = beta[i] - l;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        long height = 0;
        for (long b : beta)
            if (target < b && b < beta[i]) ++height;
        long saved = beta[i];
        beta[i] = target;
        long sub = mn_symmetric(beta, mu, k + 1);
        beta[i] = saved;
        total += (height % 2 == 0 ? sub : -sub);
    }
    return total;
}

void validate_partition(const Partition& p, const char* what) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument(std::string(what) + ": nonpositive part");
        if (i && p[i] > p[i - 1])
            throw std::invalid_argument(std::string(what) + ": parts must weakly decrease");
    }
}

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

Rational symmetric_character(const Partition& lambda, const Partition& mu) {
    validate_partition(lambda, "lambda");
    validate_partition(mu, "mu");
    if (partition_sum(lambda) != partition_sum(mu))
        throw std::invalid_argument("character: |lambda| != |mu|");
    std::vector<long> beta = beta_set(lambda);
    return Rational(mn_symmetric(beta, mu, 0));
}

namespace {

struct SignedCycle {
    long length;
    int eps;  // +1 or -1
};

long mn_wreath(std::vector<long>& beta0, std::vector<long>& beta1,
               const std::vector<SignedCycle>& cycles, size_t k) {
    if (k == cycles.size()) return 1;
    long l = cycles[k].length;
    int eps = cycles[k].eps;
    long total = 0;
    for (int comp = 0; comp < 2; ++comp) {
        std::vector<long>& beta = comp == 0 ? beta0 : beta1;
        for (size_t i = 0; i < beta.size(); ++i) {
            long target = beta[i] - l;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            long height = 0;
            for (long b : beta)
                if (target < b && b < beta[i]) ++height;
            long saved = beta[i];
            beta[i] = target;
            long sub = mn_wreath(beta0, beta1, cycles, k + 1);
            beta[i] = saved;
            long term = (height % 2 == 0 ? sub : -sub);
            if (comp == 1 && eps == -1) term = -term;
            total += term;
        }
    }
    return total;
}

}  // namespace

Rational hyperoctahedral_character(const Bipartition& index, const Partition& pos,
                                   const Partition& neg) {
    validate_partition(index.first, "lambda");
    validate_partition(index.second, "mu");
    validate_partition(pos, "pos");
    validate_partition(neg, "neg");
    if (partition_sum(index.first) + partition_sum(index.second) !=
        partition_sum(pos) + partition_sum(neg))
        throw std::invalid_argument("character: size mismatch");
    std::vector<SignedCycle> cycles;
    for (int l : pos) cycles.push_back({l, +1});
    for (int l : neg) cycles.push_back({l, -1});
    std::vector<long> beta0 = beta_set(index.first);
    std::vector<long> beta1 = beta_set(index.second);
    return Rational(mn_wreath(beta0, beta1, cycles, 0));
}

namespace {

// The coordinate weights nu_1 = w_1, nu_i = w_i - w_{i-1}, plus
// nu_{n+1} = -w_n for family A: the Weyl group acts on them as permutations
// (family A on n+1 of them) or signed permutations (family C on n of them).
std::vector<IntVector> nu_weights(const RootSystem& rs) {
    int n = rs.rank;
    std::vector<IntVector> nu;
    IntVector first(n, 0);
    first[0] = 1;
    nu.push_back(first);
    for (int i = 1; i < n; ++i) {
        IntVector v(n, 0);
        v[i] = 1;
        v[i - 1] = -1;
        nu.push_back(v);
    }
    if (rs.family == Family::A) {
        IntVector v(n, 0);
        v[n - 1] = -1;
        nu.push_back(v);
    }
    return nu;
}

IntVector negate(const IntVector& v) {
    IntVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// Signed permutation of the nu-weights realized by one group element:
// perm[i] = j and sign[i] = eps when s(nu_i) = eps * nu_j.
void signed_permutation(const std::vector<IntVector>& nu, const IntMatrix& s,
                        std::vector<size_t>& perm, std::vector<int>& sign) {
    size_t m = nu.size();
    perm.assign(m, 0);
    sign.assign(m, 0);
    for (size_t i = 0; i < m; ++i) {
        IntVector image = int_apply(s, nu[i]);
        for (size_t j = 0; j < m; ++j) {
            if (image == nu[j]) {
                perm[i] = j;
                sign[i] = +1;
                break;
            }
            if (image == negate(nu[j])) {
                perm[i] = j;
                sign[i] = -1;
                break;
            }
        }
        if (sign[i] == 0)
            throw std::domain_error("group element does not permute the coordinate weights");
    }
}

// Cycle type of a signed permutation: each cycle carries the product of the
// signs met along it.
void signed_cycle_type(const std::vector<size_t>& perm, const std::vector<int>& sign,
                       Partition& pos, Partition& neg) {
    size_t m = perm.size();
    std::vector<bool> seen(m, false);
    pos.clear();
    neg.clear();
    for (size_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, eps = 1;
        size_t j = i;
        do {
            seen[j] = true;
            eps *= sign[j];
            j = perm[j];
            ++len;
        } while (j != i);
        (eps == 1 ? pos : neg).push_back(len);
    }
    std::sort(pos.begin(), pos.end(), std::greater<int>());
    std::sort(neg.begin(), neg.end(), std::greater<int>());
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const RootSystem& rs, const WeylGroup& w) {
    if (rs.family != Family::A && rs.family != Family::C)
        throw std::domain_error("conjugacy class combinatorics cover families A and C");
    std::vector<IntVector> nu = nu_weights(rs);
    std::map<std::pair<Partition, Partition>, std::vector<size_t>> by_type;  // (neg, pos)
    for (size_t idx = 0; idx < w.size(); ++idx) {
        std::vector<size_t> perm;
        std::vector<int> sign;
        signed_permutation(nu, w.elements[idx], perm, sign);
        Partition pos, neg;
        signed_cycle_type(perm, sign, pos, neg);
        if (rs.family == Family::A && !neg.empty())
            throw std::logic_error("family A element produced a signed cycle");
        by_type[{neg, pos}].push_back(idx);
    }
    // Keyed by (neg, pos), so the identity type ((), (1,..,1)) sorts first.
    std::vector<ConjugacyClass> out;
    for (auto& [key, members] : by_type) {
        ConjugacyClass c;
        c.cycle_type_neg = key.first;
        c.cycle_type_pos = key.second;
        c.label = rs.family == Family::A
                      ? partition_to_string(c.cycle_type_pos)
                      : bipartition_to_string({c.cycle_type_pos, c.cycle_type_neg});
        std::sort(members.begin(), members.end());
        c.representative = members.front();
        c.members = std::move(members);
        out.push_back(std::move(c));
    }
    return out;
}

CharacterTable character_table(const RootSystem& rs, const WeylGroup& w) {
    CharacterTable t;
    t.classes = conjugacy_classes(rs, w);
    if (rs.family == Family::A) {
        int n = rs.rank + 1;
        for (const auto& la : partitions_of(n)) {
            t.row_labels.push_back(partition_to_string(la));
            std::vector<Rational> row;
            for (const auto& c : t.classes) row.push_back(symmetric_character(la, c.cycle_type_pos));
            t.values.push_back(std::move(row));
        }
    } else {
        int n = rs.rank;
        for (const auto& bp : bipartitions_of(n)) {
            t.row_labels.push_back(bipartition_to_string(bp));
            std::vector<Rational> row;
            for (const auto& c : t.classes)
                row.push_back(hyperoctahedral_character(bp, c.cycle_type_pos, c.cycle_type_neg));
            t.values.push_back(std::move(row));
        }
    }
    return t;
}

bool verify_character_table(const CharacterTable& t, const WeylGroup& w) {
    size_t r = t.rows(), k = t.classes.size();
    if (r != k) return false;
    Rational order(static_cast<long>(w.size()));
    size_t covered = 0;
    for (const auto& c : t.classes) covered += c.members.size();
    if (covered != w.size()) return false;
    // Column orthogonality.
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            Rational s(0);
            for (size_t i = 0; i < r; ++i) s += t.values[i][a] * t.values[i][b];
            Rational expect = a == b ? order / Rational(static_cast<long>(t.classes[a].members.size()))
                                     : Rational(0);
            if (s != expect) return false;
        }
    // Row orthogonality.
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            Rational s(0);
            for (size_t a = 0; a < k; ++a)
                s += Rational(static_cast<long>(t.classes[a].members.size())) * t.values[i][a] *
                     t.values[j][a];
            if (s != (i == j ? order : Rational(0))) return false;
        }
    return true;
}

std::vector<Rational> multiplicities(const CharacterTable& t, const WeylGroup& w,
                                     const std::vector<Rational>& rep_character) {
    if (rep_character.size() != t.classes.size())
        throw std::invalid_argument("per-class character values expected");
    std::vector<Rational> out;
    Rational order(static_cast<long>(w.size()));
    for (size_t i = 0; i < t.rows(); ++i) {
        Rational s(0);
        for (size_t a = 0; a < t.classes.size(); ++a)
            s += Rational(static_cast<long>(t.classes[a].members.size())) * t.values[i][a] *
                 rep_character[a];
        out.push_back(s / order);
    }
    return out;
}

std::vector<Rational> weight_multiset_character(const RootSystem& rs, const WeylGroup& w,
                                                const std::vector<ConjugacyClass>& classes,
                                                const std::vector<IntVector>& weights) {
    (void)rs;
    std::vector<Rational> out;
    for (const auto& c : classes) {
        const IntMatrix& s = w.elements[c.representative];
        long fixed = 0;
        for (const auto& mu : weights)
            if (int_apply(s, mu) == mu) ++fixed;
        out.push_back(Rational(fixed));
    }
    return out;
}

std::vector<Polynomial> isotypic_projection(const QuotientSpace& q, const WeylGroup& w,
                                            const CharacterTable& t,
                                            const std::vector<ConjugacyClass>& classes,
                                            size_t irrep_index) {
    size_t dim = q.dimension();
    Rational deg = t.degree(irrep_index);
    QMatrix p(dim, QVector(dim, Rational(0)));
    for (size_t a = 0; a < classes.size(); ++a) {
        Rational chi = t.values[irrep_index][a];
        if (chi == 0) continue;
        for (size_t m : classes[a].members)
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j) p[i][j] += chi * q.action[m][i][j];
    }
    Rational scale = deg / Rational(static_cast<long>(w.size()));
    for (auto& row : p)
        for (auto& v : row) v *= scale;
    // Rows of p^T are the images of the basis monomials; their RREF is the
    // canonical echelon basis of the image.
    QMatrix cols = q_transpose(p);
    size_t rank = rref(cols);
    std::vector<Polynomial> out;
    for (size_t r = 0; r < rank; ++r) {
        Polynomial f(q.basis.empty() ? 0 : static_cast<int>(q.basis[0].size()));
        for (size_t k = 0; k < dim; ++k)
            if (cols[r][k] != 0) f.add_term(q.basis[k], cols[r][k]);
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

void tableaux_rec(const Partition& shape, std::vector<int>& filled, int next, int n,
                  Tableau& cur, std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(cur);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        int c = filled[r];
        if (c >= shape[r]) continue;
        if (r > 0 && filled[r - 1] <= c) continue;
        cur[r][c] = next;
        ++filled[r];
        tableaux_rec(shape, filled, next + 1, n, cur, out);
        --filled[r];
    }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    validate_partition(lambda, "lambda");
    int n = partition_sum(lambda);
    Tableau cur;
    for (int part : lambda) cur.push_back(std::vector<int>(part, 0));
    std::vector<int> filled(lambda.size(), 0);
    std::vector<Tableau> out;
    tableaux_rec(lambda, filled, 1, n, cur, out);
    return out;
}

namespace {

// All permutations of the multiset positions of `vals`, with parity, fed to
// a callback as (mapping old value -> new value applied on top of `sigma`).
void column_perms(const std::vector<std::vector<int>>& columns, size_t col,
                  std::vector<int>& sigma, int sign,
                  const std::function<void(const std::vector<int>&, int)>& emit) {
    if (col == columns.size()) {
        emit(sigma, sign);
        return;
    }
    const std::vector<int>& vals = columns[col];
    std::vector<size_t> idx(vals.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    // Enumerate permutations of this column via sorted index permutations,
    // tracking parity by inversion count.
    std::vector<size_t> p = idx;
    do {
        int inv = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        for (size_t i = 0; i < vals.size(); ++i) sigma[vals[i]] = vals[p[i]];
        column_perms(columns, col + 1, sigma, sign * (inv % 2 == 0 ? 1 : -1), emit);
    } while (std::next_permutation(p.begin(), p.end()));
    for (int v : vals) sigma[v] = v;
}

}  // namespace

Polynomial higher_specht_A(const Tableau& S, const Tableau& T, int n_vars) {
    if (S.size() != T.size()) throw std::invalid_argument("tableaux of different shapes");
    for (size_t r = 0; r < S.size(); ++r)
        if (S[r].size() != T[r].size())
            throw std::invalid_argument("tableaux of different shapes");
    int n = 0;
    size_t ncols = 0;
    for (const auto& row : S) {
        n += static_cast<int>(row.size());
        ncols = std::max(ncols, row.size());
    }
    if (n > n_vars) throw std::invalid_argument("tableau larger than the variable count");

    // Column word of S (bottom to top, left to right) and the charge of each
    // value: charge(1) = 0; charge(k+1) = charge(k) if k+1 occurs later in
    // the word than k, else charge(k) + 1.
    std::vector<int> pos(n + 1, -1);
    int cursor = 0;
    for (size_t c = 0; c < ncols; ++c)
        for (size_t r = S.size(); r-- > 0;)
            if (c < S[r].size()) pos[S[r][c]] = cursor++;
    std::vector<int> charge(n + 1, 0);
    for (int k = 1; k < n; ++k)
        charge[k + 1] = charge[k] + (pos[k + 1] > pos[k] ? 0 : 1);

    // Base exponent vector: variable T[r][c] carries charge(S[r][c]).
    Exponent base(n_vars, 0);
    for (size_t r = 0; r < S.size(); ++r)
        for (size_t c = 0; c < S[r].size(); ++c) base[T[r][c] - 1] = charge[S[r][c]];

    // Antisymmetrize over the column stabilizer of T.
    std::vector<std::vector<int>> columns(ncols);
    for (size_t r = 0; r < T.size(); ++r)
        for (size_t c = 0; c < T[r].size(); ++c) columns[c].push_back(T[r][c]);
    std::vector<int> sigma(n + 1);
    std::iota(sigma.begin(), sigma.end(), 0);

    Polynomial f(n_vars);
    column_perms(columns, 0, sigma, 1, [&](const std::vector<int>& sg, int sign) {
        Exponent e(n_vars, 0);
        for (size_t r = 0; r < T.size(); ++r)
            for (size_t c = 0; c < T[r].size(); ++c) e[sg[T[r][c]] - 1] = base[T[r][c] - 1];
        f.add_term(e, Rational(sign));
    });
    return f;
}

}  // namespace weylcoinv
