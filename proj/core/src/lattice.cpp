#include "sifs/lattice.hpp"

namespace sifs {

namespace {

Int lcm_denoms(const RatMat& g) {
    Int l = 1;
    for (const Rat& q : g.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

Int content(const IntMat& m) {
    Int g = 0;
    for (const Int& v : m.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

} // namespace

LatticeBasis LatticeBasis::from_generators(const RatMat& g) {
    Int s = lcm_denoms(g);
    IntMat m(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) {
            Rat q = g.at(i, j) * Rat(s);
            m.at(i, j) = q.get_num();
        }
    IntMat h = hnf_column_basis(m);
    if (h.cols != g.rows)
        fail(ErrorCode::kInvalidInput, "lattice generators do not have full rank");
    Int c = content(h);
    Int gg;
    mpz_gcd(gg.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    if (gg > 1) {
        for (Int& v : h.a) v /= gg;
        s /= gg;
    }
    LatticeBasis out;
    out.h_ = h;
    out.s_ = s;
    out.inv_ = inverse(out.basis());
    return out;
}

LatticeBasis LatticeBasis::from_generators(const IntMat& g) {
    return from_generators(RatMat::from_int(g));
}

LatticeBasis LatticeBasis::standard(int d) {
    return from_generators(IntMat::identity(d));
}

RatMat LatticeBasis::basis() const {
    RatMat b(h_.rows, h_.cols);
    for (int i = 0; i < h_.rows; ++i)
        for (int j = 0; j < h_.cols; ++j) b.at(i, j) = make_rat(h_.at(i, j), s_);
    return b;
}

bool LatticeBasis::contains(const RatVec& x) const {
    RatVec y = mul(inv_, x);
    for (const Rat& q : y)
        if (!is_integer(q)) return false;
    return true;
}

bool LatticeBasis::contains_lattice(const LatticeBasis& other) const {
    RatMat b = other.basis();
    for (int j = 0; j < b.cols; ++j) {
        RatVec col(b.rows);
        for (int i = 0; i < b.rows; ++i) col[i] = b.at(i, j);
        if (!contains(col)) return false;
    }
    return true;
}

LatticeBasis LatticeBasis::dual() const {
    RatMat bt = basis().transpose();
    return from_generators(inverse(bt));
}

Rat LatticeBasis::determinant() const { return det(basis()); }

} // namespace sifs
