#include "fmethod/liealg.hpp"

#include "terms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fmethod {

using detail::accumulate;

std::string BasisElem::name() const {
    auto idx = [](int k) { return std::to_string(k); };
    switch (tag) {
        case GenTag::f: return "f" + idx(i);
        case GenTag::g: return "g" + idx(i);
        case GenTag::c: return "c";
        case GenTag::d: return "d" + idx(i);
        case GenTag::e: return "e" + idx(i);
        case GenTag::a: return "a";
        case GenTag::h: return "h";
        case GenTag::hA: return "hA" + idx(i) + idx(j);
        case GenTag::hB: return "hB" + idx(i) + idx(j);
        case GenTag::hC: return "hC" + idx(i) + idx(j);
    }
    return "?";
}

int BasisElem::grade() const {
    switch (tag) {
        case GenTag::f:
        case GenTag::g: return -1;
        case GenTag::c: return -2;
        case GenTag::d:
        case GenTag::e: return 1;
        case GenTag::a: return 2;
        default: return 0;
    }
}

std::vector<BasisElem> lie_basis(int n) {
    if (n < 1) throw DimensionError("n must be positive");
    std::vector<BasisElem> b;
    for (int i = 1; i <= n; ++i) b.push_back(BasisElem::f(i));
    for (int i = 1; i <= n; ++i) b.push_back(BasisElem::g(i));
    b.push_back(BasisElem::c());
    for (int i = 1; i <= n; ++i) b.push_back(BasisElem::d(i));
    for (int i = 1; i <= n; ++i) b.push_back(BasisElem::e(i));
    b.push_back(BasisElem::a());
    b.push_back(BasisElem::h());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b.push_back(BasisElem::hA(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) b.push_back(BasisElem::hB(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) b.push_back(BasisElem::hC(i, j));
    return b;
}

// ---------------------------------------------------------------------------

MatG MatG::transpose() const {
    MatG t(n_);
    for (int r = 0; r < size(); ++r)
        for (int c = 0; c < size(); ++c) t.at(c, r) = at(r, c);
    return t;
}

MatG& MatG::operator+=(const MatG& o) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

MatG& MatG::operator-=(const MatG& o) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

MatG& MatG::operator*=(const GaussScalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

MatG operator*(const MatG& a, const MatG& b) {
    if (a.n_ != b.n_) throw DimensionError("matrix size mismatch");
    MatG out(a.n_);
    const int s = a.size();
    for (int r = 0; r < s; ++r)
        for (int k = 0; k < s; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < s; ++c)
                if (!b.at(k, c).is_zero()) out.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return out;
}

bool MatG::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const GaussScalar& e) { return e.is_zero(); });
}

MatG symplectic_form(int n) {
    MatG j(n);
    for (int k = 0; k <= n; ++k) {
        j.at(k, n + 1 + k) = GaussScalar(1);
        j.at(n + 1 + k, k) = GaussScalar(-1);
    }
    return j;
}

bool MatG::is_symplectic() const {
    MatG j = symplectic_form(n_);
    return (transpose() * j + j * *this).is_zero();
}

MatG basis_matrix(int n, const BasisElem& x) {
    MatG m(n);
    const GaussScalar one(1), two(2);
    const int t = n + 1;  // first row/column of the third block
    auto check = [n](int k) {
        if (k < 1 || k > n) throw DimensionError("basis index out of range");
    };
    switch (x.tag) {
        case GenTag::f:
            check(x.i);
            m.at(x.i, 0) = one;
            m.at(t, t + x.i) = -one;
            break;
        case GenTag::g:
            check(x.i);
            m.at(t, x.i) = one;
            m.at(t + x.i, 0) = one;
            break;
        case GenTag::c: m.at(t, 0) = two; break;
        case GenTag::d:
            check(x.i);
            m.at(0, x.i) = one;
            m.at(t + x.i, t) = -one;
            break;
        case GenTag::e:
            check(x.i);
            m.at(0, t + x.i) = one;
            m.at(x.i, t) = one;
            break;
        case GenTag::a: m.at(0, t) = two; break;
        case GenTag::h:
            m.at(0, 0) = one;
            m.at(t, t) = -one;
            break;
        case GenTag::hA:
            check(x.i), check(x.j);
            m.at(x.i, x.j) = one;
            m.at(t + x.j, t + x.i) = -one;
            break;
        case GenTag::hB:
            check(x.i), check(x.j);
            m.at(x.i, t + x.j) += one;
            m.at(x.j, t + x.i) += one;
            break;
        case GenTag::hC:
            check(x.i), check(x.j);
            m.at(t + x.i, x.j) += one;
            m.at(t + x.j, x.i) += one;
            break;
    }
    return m;
}

Expansion expand_matrix(const MatG& m) {
    const int n = m.n();
    const int t = n + 1;
    const GaussScalar half = GaussScalar::frac(1, 2);
    Expansion e;
    auto put = [&e](const BasisElem& b, const GaussScalar& v) {
        if (!v.is_zero()) e[b] = v;
    };
    for (int i = 1; i <= n; ++i) {
        put(BasisElem::f(i), m.at(i, 0));
        put(BasisElem::g(i), m.at(t + i, 0));
        put(BasisElem::d(i), m.at(0, i));
        put(BasisElem::e(i), m.at(0, t + i));
        for (int j = 1; j <= n; ++j) put(BasisElem::hA(i, j), m.at(i, j));
        for (int j = i; j <= n; ++j) {
            put(BasisElem::hB(i, j), i == j ? m.at(i, t + j) * half : m.at(i, t + j));
            put(BasisElem::hC(i, j), i == j ? m.at(t + i, j) * half : m.at(t + i, j));
        }
    }
    put(BasisElem::c(), m.at(t, 0) * half);
    put(BasisElem::a(), m.at(0, t) * half);
    put(BasisElem::h(), m.at(0, 0));

    MatG back(n);
    for (const auto& [b, v] : e) back += basis_matrix(n, b) * v;
    if (!(back == m)) throw std::logic_error("matrix is not in sp(2n+2) span of the basis");
    return e;
}

Expansion bracket_matrix(int n, const BasisElem& x, const BasisElem& y) {
    MatG a = basis_matrix(n, x), b = basis_matrix(n, y);
    return expand_matrix(a * b - b * a);
}

std::string to_string(const Expansion& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, v] : e) {
        if (!first) os << " + ";
        first = false;
        if (!v.is_one()) os << detail::coef_string(v) << "*";
        os << b.name();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// PBW algebras

namespace {

// For pairs (p_t, r_t) enumerate s_t <= min(p_t, r_t) with weight
// prod C(p_t,s_t) C(r_t,s_t) s_t!, the reordering rule shared by
// g^p f^r in the Heisenberg algebra and dq^p q^r in the Weyl algebra.
struct Overlap {
    int slot_left;   // exponent that loses s (left factor's g or dq)
    int slot_right;  // exponent that loses s (right factor's f or q)
    int p, r;
    int extra;       // slot gaining s (c), or -1
};

template <class F>
void enumerate_overlaps(const std::vector<Overlap>& ov, F&& emit) {
    std::vector<int> s(ov.size(), 0);
    while (true) {
        mpz_class w = 1;
        for (std::size_t t = 0; t < ov.size(); ++t) {
            if (!s[t]) continue;
            mpz_class b1, b2, f;
            mpz_bin_uiui(b1.get_mpz_t(), ov[t].p, s[t]);
            mpz_bin_uiui(b2.get_mpz_t(), ov[t].r, s[t]);
            mpz_fac_ui(f.get_mpz_t(), s[t]);
            w *= b1 * b2 * f;
        }
        emit(s, w);
        std::size_t t = 0;
        for (; t < ov.size(); ++t) {
            if (s[t] < std::min(ov[t].p, ov[t].r)) {
                ++s[t];
                break;
            }
            s[t] = 0;
        }
        if (t == ov.size()) break;
    }
}

}  // namespace

template <PbwProduct P>
PbwElem<P> PbwElem<P>::scalar(int n, const GaussScalar& s) {
    PbwElem out(n);
    out.add_term(Exps(PbwLayout{n}.size(), 0), s);
    return out;
}

template <PbwProduct P>
PbwElem<P> PbwElem<P>::letter(int n, Letter l) {
    PbwLayout lay{n};
    if (l.kind != LetterKind::c && (l.index < 1 || l.index > n))
        throw DimensionError("letter index out of range");
    Exps k(lay.size(), 0);
    switch (l.kind) {
        case LetterKind::f: k[lay.f(l.index)] = 1; break;
        case LetterKind::g: k[lay.g(l.index)] = 1; break;
        case LetterKind::c: k[lay.c()] = 1; break;
        case LetterKind::q: k[lay.q(l.index)] = 1; break;
        case LetterKind::dq: k[lay.dq(l.index)] = 1; break;
    }
    PbwElem out(n);
    out.add_term(k, GaussScalar(1));
    return out;
}

template <PbwProduct P>
void PbwElem<P>::add_term(const Exps& key, const GaussScalar& c) {
    if (static_cast<int>(key.size()) != layout().size()) throw DimensionError("PBW key size mismatch");
    accumulate(terms_, key, c);
}

template <PbwProduct P>
GaussScalar PbwElem<P>::coeff(const Exps& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussScalar() : it->second;
}

template <PbwProduct P>
PbwElem<P>& PbwElem<P>::operator+=(const PbwElem& o) {
    if (o.n_ != n_) throw DimensionError("PBW rank mismatch");
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

template <PbwProduct P>
PbwElem<P>& PbwElem<P>::operator-=(const PbwElem& o) {
    if (o.n_ != n_) throw DimensionError("PBW rank mismatch");
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

template <PbwProduct P>
PbwElem<P>& PbwElem<P>::operator*=(const GaussScalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

template <PbwProduct P>
PbwElem<P> PbwElem<P>::operator-() const {
    PbwElem out(*this);
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

template <PbwProduct P>
PbwElem<P> PbwElem<P>::multiply(const PbwElem& a, const PbwElem& b) {
    if (a.n_ != b.n_) throw DimensionError("PBW rank mismatch");
    const int n = a.n_;
    const PbwLayout lay{n};
    PbwElem out(n);
    std::vector<Overlap> ov;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Exps base(lay.size());
            for (int s = 0; s < lay.size(); ++s) base[s] = static_cast<std::uint8_t>(ka[s] + kb[s]);
            ov.clear();
            for (int j = 1; j <= n; ++j) {
                if (P == PbwProduct::enveloping && ka[lay.g(j)] && kb[lay.f(j)])
                    ov.push_back({lay.g(j), lay.f(j), ka[lay.g(j)], kb[lay.f(j)], lay.c()});
                if (ka[lay.dq(j)] && kb[lay.q(j)])
                    ov.push_back({lay.dq(j), lay.q(j), ka[lay.dq(j)], kb[lay.q(j)], -1});
            }
            const GaussScalar c = ca * cb;
            enumerate_overlaps(ov, [&](const std::vector<int>& s, const mpz_class& w) {
                Exps key(base);
                for (std::size_t t = 0; t < ov.size(); ++t) {
                    key[ov[t].slot_left] = static_cast<std::uint8_t>(key[ov[t].slot_left] - s[t]);
                    key[ov[t].slot_right] = static_cast<std::uint8_t>(key[ov[t].slot_right] - s[t]);
                    if (ov[t].extra >= 0) key[ov[t].extra] = static_cast<std::uint8_t>(key[ov[t].extra] + s[t]);
                }
                accumulate(out.terms_, std::move(key), c * GaussScalar(Rational(w)));
            });
        }
    }
    return out;
}

template <PbwProduct P>
PbwElem<P> PbwElem<P>::pow(unsigned k) const {
    PbwElem acc = scalar(n_, GaussScalar(1));
    for (unsigned j = 0; j < k; ++j) acc = acc * *this;
    return acc;
}

template <PbwProduct P>
int PbwElem<P>::filtration_degree() const {
    int best = -1;
    for (const auto& [k, c] : terms_) {
        int d = 0;
        for (int s = 0; s <= 2 * n_; ++s) d += k[s];
        best = std::max(best, d);
    }
    return best;
}

template <PbwProduct P>
std::string PbwElem<P>::to_string() const {
    if (terms_.empty()) return "0";
    const PbwLayout lay{n_};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> f;
        auto put = [&f](const std::string& name, int e) {
            if (e) f.push_back(e == 1 ? name : name + "^" + std::to_string(e));
        };
        for (int j = 1; j <= n_; ++j) put("f" + std::to_string(j), k[lay.f(j)]);
        for (int j = 1; j <= n_; ++j) put("g" + std::to_string(j), k[lay.g(j)]);
        put("c", k[lay.c()]);
        for (int j = 1; j <= n_; ++j) put("q" + std::to_string(j), k[lay.q(j)]);
        for (int j = 1; j <= n_; ++j) put("dq" + std::to_string(j), k[lay.dq(j)]);
        if (!first) os << " + ";
        first = false;
        if (f.empty()) {
            os << detail::coef_string(c);
            continue;
        }
        if (!c.is_one()) os << detail::coef_string(c) << " ";
        for (std::size_t t = 0; t < f.size(); ++t) os << (t ? " " : "") << f[t];
    }
    return os.str();
}

template class PbwElem<PbwProduct::enveloping>;
template class PbwElem<PbwProduct::symmetric>;

UbarElem heisenberg_normal_form(int n, const std::vector<Letter>& word) {
    UbarElem acc = UbarElem::scalar(n, GaussScalar(1));
    for (const auto& l : word) acc = acc * UbarElem::letter(n, l);
    return acc;
}

namespace {

// beta(f_j^a g_j^b): average over the distinct arrangements of the word.
// Letters with different j commute, so beta factorizes over j and only
// these single-index shapes need the explicit average.
const UbarElem& beta_single(int n, int j, int a, int b) {
    thread_local std::map<std::tuple<int, int, int, int>, UbarElem> memo;
    auto key = std::make_tuple(n, j, a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<int> word(a, 0);
    word.insert(word.end(), b, 1);  // 0 = f, 1 = g; sorted ascending
    UbarElem sum(n);
    long count = 0;
    do {
        UbarElem prod = UbarElem::scalar(n, GaussScalar(1));
        for (int w : word) prod = prod * UbarElem::letter(n, {w ? LetterKind::g : LetterKind::f, j});
        sum += prod;
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    sum *= GaussScalar::frac(1, count);
    return memo.emplace(key, std::move(sum)).first->second;
}

}  // namespace

UbarElem symmetrize_beta(const SymElem& s) {
    const int n = s.n();
    const PbwLayout lay{n};
    UbarElem out(n);
    for (const auto& [k, coef] : s.terms()) {
        // c and the End S factor pass through unchanged.
        Exps rest(lay.size(), 0);
        rest[lay.c()] = k[lay.c()];
        for (int j = 1; j <= n; ++j) {
            rest[lay.q(j)] = k[lay.q(j)];
            rest[lay.dq(j)] = k[lay.dq(j)];
        }
        UbarElem prod(n);
        prod.add_term(rest, coef);
        for (int j = 1; j <= n; ++j) {
            int a = k[lay.f(j)], b = k[lay.g(j)];
            if (a + b > 1) prod = beta_single(n, j, a, b) * prod;
            else if (a + b == 1) prod = UbarElem::letter(n, {a ? LetterKind::f : LetterKind::g, j}) * prod;
        }
        out += prod;
    }
    return out;
}

UbarElem as_ubar(const SymElem& s) {
    UbarElem u(s.n());
    for (const auto& [k, c] : s.terms()) u.add_term(k, c);
    return u;
}

SymElem as_sym(const UbarElem& u) {
    SymElem s(u.n());
    for (const auto& [k, c] : u.terms()) s.add_term(k, c);
    return s;
}

}  // namespace fmethod
