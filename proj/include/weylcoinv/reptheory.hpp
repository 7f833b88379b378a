#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylcoinv/coinvariants.hpp"
#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/rootsystem.hpp"

namespace weylcoinv {

using Partition = std::vector<int>;                    // weakly decreasing, positive parts
using Bipartition = std::pair<Partition, Partition>;   // (lambda, mu), |lambda| + |mu| = n

std::vector<Partition> partitions_of(int n);
std::vector<Bipartition> bipartitions_of(int n);
std::string partition_to_string(const Partition& p);
std::string bipartition_to_string(const Bipartition& bp);

// Irreducible symmetric group character chi^lambda(mu) via the
// Murnaghan-Nakayama rule (border strips through beta-number sets).
Rational symmetric_character(const Partition& lambda, const Partition& mu);

// Irreducible hyperoctahedral character indexed by a bipartition, evaluated
// on a signed cycle type (pos, neg): cycles are peeled from the right; a
// negative cycle taken from the second component contributes a -1 factor.
Rational hyperoctahedral_character(const Bipartition& index, const Partition& pos,
                                   const Partition& neg);

// Conjugacy classes of a concrete Weyl group of family A or C (symmetric /
// hyperoctahedral), each with a canonical label, one representative index,
// the full sorted member list, and the combinatorial type used to evaluate
// characters.
struct ConjugacyClass {
    std::string label;
    size_t representative = 0;
    std::vector<size_t> members;
    Partition cycle_type_pos;  // type A: the full cycle type; type C: positive cycles
    Partition cycle_type_neg;  // type C only
};

std::vector<ConjugacyClass> conjugacy_classes(const RootSystem& rs, const WeylGroup& w);

// Exact character table: rows = irreducibles (canonical partition /
// bipartition order), columns = conjugacy classes.
struct CharacterTable {
    std::vector<std::string> row_labels;
    std::vector<ConjugacyClass> classes;
    std::vector<std::vector<Rational>> values;  // values[i][j]

    size_t rows() const { return values.size(); }
    Rational degree(size_t i) const { return values[i][0]; }
};

CharacterTable character_table(const RootSystem& rs, const WeylGroup& w);

// Column-orthogonality self-check: sum_i chi_i(c) conj(chi_i(c')) compared
// against |W| / |class c| * [c == c'] (characters here are rational, so no
// conjugation is needed).
bool verify_character_table(const CharacterTable& t, const WeylGroup& w);

// Multiplicity of each irreducible in a representation given by its
// character values per class: m_i = (1/|W|) sum_c |c| chi_i(c) chi_V(c).
std::vector<Rational> multiplicities(const CharacterTable& t, const WeylGroup& w,
                                     const std::vector<Rational>& rep_character);

// Character of the permutation representation on the span of a finite
// W-stable weight set (s . x^mu = x^{s mu}), evaluated per class: the number
// of fixed weights of a class representative.
std::vector<Rational> weight_multiset_character(const RootSystem& rs, const WeylGroup& w,
                                                const std::vector<ConjugacyClass>& classes,
                                                const std::vector<IntVector>& weights);

// Isotypic projection of a quotient module: P_i = (deg_i / |W|) sum_s
// chi_i(s) A(s), applied to the monomial basis; returns an RREF basis of the
// image expressed as reduced polynomials.
std::vector<Polynomial> isotypic_projection(const QuotientSpace& q, const WeylGroup& w,
                                            const CharacterTable& t,
                                            const std::vector<ConjugacyClass>& classes,
                                            size_t irrep_index);

// Standard Young tableaux of a partition, row representation (filling with
// 1..n increasing along rows and down columns).
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> standard_tableaux(const Partition& lambda);

// Higher Specht polynomial F_T^S for a pair of standard tableaux of the same
// shape, in n ambient variables (symmetric group case): charge exponents
// from S placed in the cells of T, antisymmetrized over the column
// stabilizer of T.
Polynomial higher_specht_A(const Tableau& S, const Tableau& T, int n_vars);

}  // namespace weylcoinv
