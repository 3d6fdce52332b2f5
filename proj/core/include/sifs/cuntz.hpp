#pragma once

// Finite-dimensional side of the representation theory: minimal words,
// permutative actions on eventually-periodic words, Cuntz-relation defects
// on truncated bases, and the exact fixed-point space of the intertwiner map
// between two word representations.

#include <optional>
#include <string>
#include <vector>

#include "sifs/ratmath.hpp"

namespace sifs {

using Word = std::vector<int>;

// True iff the word is not a proper power u^p, p >= 2.
bool is_minimal(const Word& w);
// True iff w2 is a rotation of w1 (equal lengths, substring of w1 w1).
bool cyclic_equivalent(const Word& w1, const Word& w2);
Word rotate_left(Word w, int k = 1);

// An eventually periodic word: finite prefix followed by the tail repeated
// forever. Canonical form absorbs trailing prefix letters that match the
// tail end, so equal infinite words have equal representations.
struct WordState {
    Word prefix;
    Word tail; // minimal, nonempty

    static WordState make(Word prefix, Word tail);
    bool operator==(const WordState& o) const { return prefix == o.prefix && tail == o.tail; }
    bool operator<(const WordState& o) const;
    int first_letter() const { return prefix.empty() ? tail[0] : prefix[0]; }
    std::string str() const;
};

// Forward isometry: prepend the letter. Always defined.
WordState rho_forward(const WordState& s, int letter);
// Adjoint: strips the first letter when it matches, otherwise annihilates.
std::optional<WordState> rho_adjoint(const WordState& s, int letter);

struct TruncatedBasis {
    int alphabet = 0;
    int max_prefix = 0;
    std::vector<WordState> states; // sorted, distinct, adjoint-closed

    std::optional<int> find(const WordState& s) const;
};

// All canonical states with the given tail (up to rotation) and prefix
// length <= max_prefix.
TruncatedBasis permutative_basis(const Word& tail, int alphabet, int max_prefix);

struct CuntzDefects {
    double iso_defect = 0.0;          // max deviation of S_l^* S_{l'} from delta id
    double completeness_defect = 0.0; // max deviation of sum_l S_l S_l^* from id
    std::vector<std::string> skipped; // states excluded from the completeness check
};

// Exact 0/1 bookkeeping on the permutative basis. Throws kBasisNotClosed if
// the basis is not closed under the adjoint action.
CuntzDefects cuntz_defect(const TruncatedBasis& basis);

struct IntertwinerSpace {
    int dimension = 0;
    // Basis of fixed points as p' x p rational matrices (rows indexed by
    // shifts of w', columns by shifts of w).
    std::vector<RatMat> basis;
};

// Exact eigenvalue-1 space of Phi(C) = sum_l V'_l C V_l^* on the span of
// rank-one operators between the two cyclic subspaces. Dimensions certify
// irreducibility (w == w') and disjointness (non-rotations). Throws
// kNotMinimal for non-minimal input.
IntertwinerSpace phi_fixed_space(const Word& w, const Word& w_prime, int alphabet);

// All minimal words of length <= max_len over the alphabet, sorted.
std::vector<Word> minimal_words(int alphabet, int max_len);

std::string word_str(const Word& w);

} // namespace sifs
