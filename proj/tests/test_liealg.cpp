#include "oracle.hpp"

#include "fmethod/liealg.hpp"

#include <doctest.h>

#include <map>

using namespace fmethod;
using K = LetterKind;

TEST_CASE("basis matrices are symplectic and span sp(2n+2)") {
    for (int n = 1; n <= 3; ++n) {
        const auto basis = lie_basis(n);
        CHECK(static_cast<int>(basis.size()) == lie_dim(n));
        for (const auto& x : basis) {
            CHECK(basis_matrix(n, x).is_symplectic());
            const Expansion e = expand_matrix(basis_matrix(n, x));
            CHECK(e == Expansion{{x, GaussScalar(1)}});
        }
    }
}

TEST_CASE("bracket examples") {
    CHECK(bracket_matrix(1, BasisElem::f(1), BasisElem::g(1)) == Expansion{{BasisElem::c(), GaussScalar(-1)}});
    CHECK(bracket_matrix(1, BasisElem::d(1), BasisElem::e(1)) == Expansion{{BasisElem::a(), GaussScalar(1)}});
    CHECK(bracket_matrix(1, BasisElem::h(), BasisElem::f(1)) == Expansion{{BasisElem::f(1), GaussScalar(-1)}});
    // the Heisenberg relations are the only nonzero ones inside u-bar
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(bracket_matrix(n, BasisElem::f(i), BasisElem::f(j)).empty());
                CHECK(bracket_matrix(n, BasisElem::g(i), BasisElem::g(j)).empty());
                const Expansion fg = bracket_matrix(n, BasisElem::f(i), BasisElem::g(j));
                CHECK(fg == (i == j ? Expansion{{BasisElem::c(), GaussScalar(-1)}} : Expansion{}));
            }
}

TEST_CASE("brackets respect the contact grading and the Jacobi identity") {
    for (int n = 1; n <= 3; ++n) {
        const auto basis = lie_basis(n);
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& [z, c] : bracket_matrix(n, x, y)) CHECK(z.grade() == x.grade() + y.grade());
        if (n > 2) continue;
        std::map<std::pair<BasisElem, BasisElem>, Expansion> table;
        for (const auto& x : basis)
            for (const auto& y : basis) table[{x, y}] = bracket_matrix(n, x, y);
        auto br = [&](const Expansion& a, const BasisElem& y, Expansion& out) {
            for (const auto& [x, c] : a)
                for (const auto& [z, d] : table.at({x, y})) out[z] += c * d;
        };
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    Expansion sum;
                    br(table.at({x, y}), z, sum);
                    br(table.at({y, z}), x, sum);
                    br(table.at({z, x}), y, sum);
                    std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
                    CHECK(sum.empty());
                }
    }
}

TEST_CASE("expand_matrix rejects non-symplectic input") {
    MatG m(1);
    m.at(0, 0) = GaussScalar(1);
    CHECK_THROWS_AS(expand_matrix(m), std::logic_error);
}

TEST_CASE("Heisenberg normal form examples") {
    const int n = 1;
    CHECK(heisenberg_normal_form(n, {{K::g, 1}, {K::f, 1}}) ==
          UbarElem::letter(n, {K::f, 1}) * UbarElem::letter(n, {K::g, 1}) + UbarElem::letter(n, {K::c}));
    CHECK(heisenberg_normal_form(n, {{K::f, 1}, {K::g, 1}}).to_string() == "f1 g1");
    CHECK(heisenberg_normal_form(n, {{K::g, 1}, {K::g, 1}, {K::f, 1}}).to_string() == "(2) g1 c + f1 g1^2");
}

TEST_CASE("normal form matches the rewriting oracle on all short words") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<Letter> alphabet;
        for (int j = 1; j <= n; ++j)
            for (K k : {K::f, K::g, K::q, K::dq}) alphabet.push_back({k, j});
        alphabet.push_back({K::c, 0});
        const std::size_t A = alphabet.size();
        for (int len = 1; len <= 4; ++len) {
            std::vector<std::size_t> idx(len, 0);
            while (true) {
                std::vector<Letter> word;
                oracle::Word ow;
                for (auto i : idx) {
                    word.push_back(alphabet[i]);
                    ow.push_back({alphabet[i].kind, alphabet[i].index});
                }
                CHECK(heisenberg_normal_form(n, word) == oracle::normal_form(n, ow));
                int p = 0;
                while (p < len && ++idx[p] == A) idx[p++] = 0;
                if (p == len) break;
            }
        }
    }
}

TEST_CASE("symmetrization examples and oracle") {
    const int n = 1;
    const SymElem f = SymElem::letter(n, {K::f, 1}), g = SymElem::letter(n, {K::g, 1});
    CHECK(symmetrize_beta(f) == UbarElem::letter(n, {K::f, 1}));
    CHECK(symmetrize_beta(f * g) == UbarElem::letter(n, {K::f, 1}) * UbarElem::letter(n, {K::g, 1}) +
                                         UbarElem::letter(n, {K::c}) * GaussScalar::frac(1, 2));
    for (int nn = 1; nn <= 2; ++nn) {
        std::vector<oracle::Sym> letters;
        for (int j = 1; j <= nn; ++j) {
            letters.push_back({K::f, j});
            letters.push_back({K::g, j});
        }
        // every multiset of size <= 5 over the u-bar letters
        for (int len = 1; len <= 5; ++len) {
            std::vector<std::size_t> idx(len, 0);
            while (true) {
                SymElem mono = SymElem::scalar(nn, GaussScalar(1));
                oracle::Word w;
                for (auto i : idx) {
                    mono = mono * SymElem::letter(nn, {letters[i].kind, letters[i].index});
                    w.push_back(letters[i]);
                }
                const UbarElem b = symmetrize_beta(mono);
                CHECK(b == oracle::beta_all_orderings(nn, w));
                CHECK(b.filtration_degree() == len);
                int p = len - 1;
                while (p >= 0 && ++idx[p] == letters.size()) --p;
                if (p < 0) break;
                for (int r = p + 1; r < len; ++r) idx[r] = idx[p];
            }
        }
    }
}

TEST_CASE("symmetrization leaves the End S factor alone") {
    const int n = 2;
    const SymElem s = SymElem::letter(n, {K::f, 1}) * SymElem::letter(n, {K::dq, 2}) * SymElem::letter(n, {K::q, 2});
    CHECK(symmetrize_beta(s) == as_ubar(s));
}
