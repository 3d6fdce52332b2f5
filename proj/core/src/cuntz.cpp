#include "sifs/cuntz.hpp"

#include <algorithm>
#include <sstream>

namespace sifs {

bool is_minimal(const Word& w) {
    if (w.empty()) fail(ErrorCode::kInvalidInput, "empty word");
    const int n = static_cast<int>(w.size());
    for (int q = 1; q <= n / 2; ++q) {
        if (n % q != 0) continue;
        bool periodic = true;
        for (int i = q; i < n && periodic; ++i) periodic = (w[i] == w[i - q]);
        if (periodic) return false;
    }
    return true;
}

bool cyclic_equivalent(const Word& w1, const Word& w2) {
    if (w1.size() != w2.size()) return false;
    const int n = static_cast<int>(w1.size());
    for (int s = 0; s < n; ++s) {
        bool match = true;
        for (int i = 0; i < n && match; ++i) match = (w1[(s + i) % n] == w2[i]);
        if (match) return true;
    }
    return false;
}

Word rotate_left(Word w, int k) {
    const int n = static_cast<int>(w.size());
    k = ((k % n) + n) % n;
    std::rotate(w.begin(), w.begin() + k, w.end());
    return w;
}

WordState WordState::make(Word prefix, Word tail) {
    if (tail.empty()) fail(ErrorCode::kInvalidInput, "word state needs a nonempty tail");
    if (!is_minimal(tail)) fail(ErrorCode::kNotMinimal, "word state tail must be minimal");
    // Absorb trailing prefix letters into the (rotated) tail.
    while (!prefix.empty() && prefix.back() == tail.back()) {
        prefix.pop_back();
        std::rotate(tail.begin(), tail.end() - 1, tail.end());
    }
    WordState s;
    s.prefix = std::move(prefix);
    s.tail = std::move(tail);
    return s;
}

bool WordState::operator<(const WordState& o) const {
    if (prefix != o.prefix) return prefix < o.prefix;
    return tail < o.tail;
}

std::string WordState::str() const {
    std::ostringstream os;
    os << word_str(prefix) << "(" << word_str(tail) << ")*";
    return os.str();
}

WordState rho_forward(const WordState& s, int letter) {
    Word p;
    p.reserve(s.prefix.size() + 1);
    p.push_back(letter);
    p.insert(p.end(), s.prefix.begin(), s.prefix.end());
    return WordState::make(std::move(p), s.tail);
}

std::optional<WordState> rho_adjoint(const WordState& s, int letter) {
    if (s.first_letter() != letter) return std::nullopt;
    if (!s.prefix.empty()) {
        Word p(s.prefix.begin() + 1, s.prefix.end());
        return WordState::make(std::move(p), s.tail);
    }
    return WordState::make({}, rotate_left(s.tail));
}

std::optional<int> TruncatedBasis::find(const WordState& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it != states.end() && *it == s) return static_cast<int>(it - states.begin());
    return std::nullopt;
}

TruncatedBasis permutative_basis(const Word& tail, int alphabet, int max_prefix) {
    if (!is_minimal(tail)) fail(ErrorCode::kNotMinimal, "basis tail must be minimal");
    for (int letter : tail)
        if (letter < 0 || letter >= alphabet)
            fail(ErrorCode::kInvalidInput, "tail letter outside alphabet");
    TruncatedBasis basis;
    basis.alphabet = alphabet;
    basis.max_prefix = max_prefix;
    const int p = static_cast<int>(tail.size());
    for (int r = 0; r < p; ++r) {
        Word rot = rotate_left(tail, r);
        // Prefixes that do not end with the tail's last letter are canonical.
        std::vector<Word> level{{}};
        basis.states.push_back(WordState::make({}, rot));
        for (int len = 1; len <= max_prefix; ++len) {
            std::vector<Word> next;
            for (const Word& u : level)
                for (int a = 0; a < alphabet; ++a) {
                    Word v = u;
                    v.push_back(a);
                    next.push_back(v);
                }
            for (const Word& u : next)
                if (u.back() != rot.back()) basis.states.push_back(WordState::make(Word(u), rot));
            level = std::move(next);
        }
    }
    std::sort(basis.states.begin(), basis.states.end());
    basis.states.erase(std::unique(basis.states.begin(), basis.states.end()), basis.states.end());
    return basis;
}

CuntzDefects cuntz_defect(const TruncatedBasis& basis) {
    for (const WordState& s : basis.states)
        for (int a = 0; a < basis.alphabet; ++a) {
            auto img = rho_adjoint(s, a);
            if (img && !basis.find(*img))
                fail(ErrorCode::kBasisNotClosed, "adjoint image missing from basis: " + img->str());
        }
    CuntzDefects d;
    for (const WordState& s : basis.states) {
        // Isometry relations S_l^* S_{l'} = delta 1, evaluated state by state.
        for (int l = 0; l < basis.alphabet; ++l)
            for (int lp = 0; lp < basis.alphabet; ++lp) {
                auto back = rho_adjoint(rho_forward(s, lp), l);
                bool expect = (l == lp);
                bool match = expect ? (back && *back == s) : !back;
                if (!match) d.iso_defect = 1.0;
            }
        // Completeness sum_l S_l S_l^*: exactly one letter survives.
        int hits = 0;
        bool wrong = false;
        for (int l = 0; l < basis.alphabet; ++l) {
            auto down = rho_adjoint(s, l);
            if (!down) continue;
            ++hits;
            if (!(rho_forward(*down, l) == s)) wrong = true;
        }
        if (hits != 1 || wrong) d.completeness_defect = 1.0;
    }
    return d;
}

IntertwinerSpace phi_fixed_space(const Word& w, const Word& w_prime, int alphabet) {
    if (!is_minimal(w) || !is_minimal(w_prime))
        fail(ErrorCode::kNotMinimal, "phi_fixed_space needs minimal words");
    for (int letter : w)
        if (letter < 0 || letter >= alphabet) fail(ErrorCode::kInvalidInput, "letter outside alphabet");
    for (int letter : w_prime)
        if (letter < 0 || letter >= alphabet) fail(ErrorCode::kInvalidInput, "letter outside alphabet");
    const int p = static_cast<int>(w.size());
    const int pp = static_cast<int>(w_prime.size());
    const int n = p * pp;
    auto idx = [&](int i, int j) { return i * p + j; }; // i over w' shifts, j over w shifts
    // Fixed-point condition c_{a,b} = delta_{w'[a], w[b]} c_{a+1,b+1}
    // (indices cyclic); each column of Phi has at most one nonzero entry.
    RatMat phi(n, n);
    for (int a = 0; a < pp; ++a)
        for (int b = 0; b < p; ++b)
            if (w_prime[a] == w[b])
                phi.at(idx(a, b), idx((a + 1) % pp, (b + 1) % p)) = 1;
    RatMat system(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) system.at(i, j) = phi.at(i, j) - (i == j ? Rat(1) : Rat(0));
    std::vector<RatVec> null = nullspace(system);
    IntertwinerSpace out;
    out.dimension = static_cast<int>(null.size());
    for (const RatVec& v : null) {
        RatMat c(pp, p);
        for (int i = 0; i < pp; ++i)
            for (int j = 0; j < p; ++j) c.at(i, j) = v[i * p + j];
        out.basis.push_back(std::move(c));
    }
    return out;
}

std::vector<Word> minimal_words(int alphabet, int max_len) {
    std::vector<Word> out;
    std::vector<Word> level{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& u : level)
            for (int a = 0; a < alphabet; ++a) {
                Word v = u;
                v.push_back(a);
                next.push_back(v);
            }
        for (const Word& u : next)
            if (is_minimal(u)) out.push_back(u);
        level = std::move(next);
    }
    return out;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    for (int a : w) os << a;
    return os.str();
}

} // namespace sifs
