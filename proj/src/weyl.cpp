#include "fmethod/weyl.hpp"

#include "terms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace fmethod {

using nlohmann::json;

std::string VarSpace::var_name(int slot) const {
    const bool hat = picture == Picture::geometric;
    if (slot < n) return (hat ? "xh" : "x") + std::to_string(slot + 1);
    if (slot < 2 * n) return (hat ? "yh" : "y") + std::to_string(slot - n + 1);
    if (slot == 2 * n) return hat ? "zh" : "z";
    if (slot <= 3 * n) return "q" + std::to_string(slot - 2 * n);
    throw DimensionError("slot out of range");
}

VarSpace fourier_space(int n) {
    if (n < 1) throw DimensionError("n must be positive");
    return {n, Picture::fourier};
}

VarSpace geometric_space(int n) {
    if (n < 1) throw DimensionError("n must be positive");
    return {n, Picture::geometric};
}

void require_same_space(const VarSpace& a, const VarSpace& b) {
    if (!(a == b)) throw DimensionError("operands live in different variable spaces");
}

namespace {

using detail::accumulate;

const char* picture_name(Picture p) { return p == Picture::fourier ? "fourier" : "geometric"; }

Picture picture_from(const std::string& s) {
    if (s == "fourier") return Picture::fourier;
    if (s == "geometric") return Picture::geometric;
    throw ParseError("unknown picture '" + s + "'");
}

struct NameTable {
    std::unordered_map<std::string, std::pair<int, bool>> lookup;  // name -> (slot, is_deriv)
};

NameTable names_for(const VarSpace& s) {
    NameTable t;
    for (int v = 0; v < s.nvars(); ++v) {
        t.lookup[s.var_name(v)] = {v, false};
        t.lookup["d" + s.var_name(v)] = {v, true};
    }
    return t;
}

std::string factor_string(const std::string& name, int e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string coef_prefix(const GaussScalar& c, bool unit_monomial) {
    if (unit_monomial) return "(" + c.to_string() + ")";
    if (c.is_one()) return "";
    return "(" + c.to_string() + ")*";
}

std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> out;
    std::string s(text);
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(" + ", pos);
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return out;
}

// Parses "(coef)*a^2*b" into coefficient and factor list; `body` factors are
// handed to `on_factor(name, exponent)`.
template <class F>
GaussScalar parse_term(std::string term, F&& on_factor) {
    term.erase(std::remove_if(term.begin(), term.end(), [](char c) { return c == ' '; }), term.end());
    GaussScalar coef(1);
    const bool negate = term.size() > 1 && term.front() == '-' && !std::isdigit(static_cast<unsigned char>(term[1]));
    if (negate) term.erase(0, 1);
    std::string rest = term;
    if (!term.empty() && std::isdigit(static_cast<unsigned char>(term.front()))) {
        // bare numeric coefficient, optionally followed by "*factors"
        auto star = term.find('*');
        coef = GaussScalar::parse(term.substr(0, star));
        rest = star == std::string::npos ? std::string() : term.substr(star + 1);
    } else if (!term.empty() && term.front() == '(') {
        auto close = term.find(')');
        if (close == std::string::npos) throw ParseError("unbalanced coefficient in '" + term + "'");
        coef = GaussScalar::parse(term.substr(1, close - 1));
        rest = term.substr(close + 1);
        if (!rest.empty()) {
            if (rest.front() != '*') throw ParseError("expected '*' after coefficient in '" + term + "'");
            rest = rest.substr(1);
        }
    } else if (!term.empty() && term.front() == '-') {
        auto star = term.find('*');
        coef = GaussScalar::parse(term.substr(0, star));
        rest = star == std::string::npos ? std::string() : term.substr(star + 1);
    }
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto star = rest.find('*', pos);
        std::string factor = rest.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        int e = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            e = std::stoi(factor.substr(caret + 1));
            factor = factor.substr(0, caret);
        }
        if (factor.empty() || e < 0) throw ParseError("malformed factor in '" + term + "'");
        on_factor(factor, e);
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return negate ? -coef : coef;
}

// Exponent vectors of total degree d over count variables, first variable
// taking the largest exponent first.
void compose(int d, int count, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (count == 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        compose(d - e, count - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// --------------------------------------------------------------------------
// WeylOp

WeylOp WeylOp::scalar(VarSpace space, const GaussScalar& c) {
    WeylOp op(space);
    op.add_term(Exps(2 * space.nvars(), 0), c);
    return op;
}

WeylOp WeylOp::mul_var(VarSpace space, int slot, unsigned power) {
    Exps key(2 * space.nvars(), 0);
    key.at(slot) = static_cast<std::uint8_t>(power);
    WeylOp op(space);
    op.add_term(key, GaussScalar(1));
    return op;
}

WeylOp WeylOp::deriv(VarSpace space, int slot, unsigned power) {
    Exps key(2 * space.nvars(), 0);
    key.at(space.nvars() + slot) = static_cast<std::uint8_t>(power);
    WeylOp op(space);
    op.add_term(key, GaussScalar(1));
    return op;
}

WeylOp WeylOp::monomial(VarSpace space, const Exps& mult, const Exps& deriv, const GaussScalar& c) {
    const auto nv = static_cast<std::size_t>(space.nvars());
    if (mult.size() != nv || deriv.size() != nv) throw DimensionError("exponent vector size mismatch");
    Exps key(mult);
    key.insert(key.end(), deriv.begin(), deriv.end());
    WeylOp op(space);
    op.add_term(key, c);
    return op;
}

void WeylOp::add_term(const Exps& key, const GaussScalar& c) {
    if (key.size() != static_cast<std::size_t>(2 * space_.nvars()))
        throw DimensionError("monomial key size mismatch");
    accumulate(terms_, key, c);
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    require_same_space(space_, o.space_);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    require_same_space(space_, o.space_);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

WeylOp& WeylOp::operator*=(const GaussScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

WeylOp WeylOp::operator-() const {
    WeylOp r(*this);
    return r *= GaussScalar(-1);
}

namespace {

// Product of two normal-ordered monomials, accumulated into `out`.
void mul_monomials(int nv, const Exps& a, const Exps& b, const GaussScalar& c, Terms& out) {
    // Variables where derivatives of `a` meet multiplications of `b`.
    int overlap[64];
    int overlap_count = 0;
    for (int v = 0; v < nv; ++v)
        if (a[nv + v] && b[v]) overlap[overlap_count++] = v;

    Exps base(2 * nv);
    for (int v = 0; v < nv; ++v) {
        base[v] = static_cast<std::uint8_t>(a[v] + b[v]);
        base[nv + v] = static_cast<std::uint8_t>(a[nv + v] + b[nv + v]);
    }
    if (overlap_count == 0) {
        accumulate(out, std::move(base), c);
        return;
    }

    // d^p x^r = sum_k C(p,k) r!/(r-k)! x^(r-k) d^(p-k), per overlapping variable
    int r[64] = {};
    while (true) {
        mpz_class weight = 1;
        Exps key(base);
        for (int t = 0; t < overlap_count; ++t) {
            int v = overlap[t];
            int k = r[t];
            if (k) {
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), a[nv + v], k);
                weight *= binom;
                for (int j = 0; j < k; ++j) weight *= b[v] - j;
                key[v] = static_cast<std::uint8_t>(key[v] - k);
                key[nv + v] = static_cast<std::uint8_t>(key[nv + v] - k);
            }
        }
        accumulate(out, std::move(key), c * GaussScalar(Rational(weight)));
        int t = 0;
        for (; t < overlap_count; ++t) {
            int v = overlap[t];
            if (r[t] < std::min<int>(a[nv + v], b[v])) {
                ++r[t];
                break;
            }
            r[t] = 0;
        }
        if (t == overlap_count) break;
    }
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    require_same_space(a.space_, b.space_);
    const int nv = a.space_.nvars();
    WeylOp out(a.space_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) mul_monomials(nv, ka, kb, ca * cb, out.terms_);
    return out;
}

WeylOp normal_mul(const WeylOp& p, const WeylOp& q) { return p * q; }

WeylOp commutator(const WeylOp& p, const WeylOp& q) { return p * q - q * p; }

WeylOp WeylOp::pow(unsigned k) const {
    WeylOp acc = identity(space_);
    for (unsigned j = 0; j < k; ++j) acc = acc * *this;
    return acc;
}

std::optional<int> WeylOp::grading_shift() const {
    std::optional<int> shift;
    const int nv = space_.nvars();
    for (const auto& [k, c] : terms_) {
        int s = 0;
        for (int v = 0; v < nv; ++v) {
            int w = v < 2 * space_.n ? 1 : (v == space_.z() ? 2 : 0);
            s += w * (int(k[v]) - int(k[nv + v]));
        }
        if (shift && *shift != s) return std::nullopt;
        shift = s;
    }
    return shift;
}

unsigned WeylOp::max_deriv_order() const {
    unsigned best = 0;
    const int nv = space_.nvars();
    for (const auto& [k, c] : terms_) {
        unsigned d = 0;
        for (int v = 0; v < nv; ++v) d += k[nv + v];
        best = std::max(best, d);
    }
    return best;
}

std::string WeylOp::to_string() const {
    if (terms_.empty()) return "0";
    const int nv = space_.nvars();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> factors;
        for (int v = 0; v < nv; ++v)
            if (k[v]) factors.push_back(factor_string(space_.var_name(v), k[v]));
        for (int v = 0; v < nv; ++v)
            if (k[nv + v]) factors.push_back(factor_string("d" + space_.var_name(v), k[nv + v]));
        if (!first) os << " + ";
        first = false;
        os << coef_prefix(c, factors.empty());
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
    return os.str();
}

WeylOp WeylOp::parse(VarSpace space, std::string_view text) {
    WeylOp op(space);
    if (text == "0") return op;
    const auto table = names_for(space);
    const int nv = space.nvars();
    for (const auto& term : split_terms(text)) {
        Exps key(2 * nv, 0);
        bool seen_deriv = false;
        GaussScalar c = parse_term(term, [&](const std::string& name, int e) {
            auto it = table.lookup.find(name);
            if (it == table.lookup.end()) throw ParseError("unknown variable '" + name + "'");
            auto [slot, is_deriv] = it->second;
            if (!is_deriv && seen_deriv) throw ParseError("operator term not in normal order: '" + term + "'");
            seen_deriv = seen_deriv || is_deriv;
            key[(is_deriv ? nv : 0) + slot] = static_cast<std::uint8_t>(key[(is_deriv ? nv : 0) + slot] + e);
        });
        op.add_term(key, c);
    }
    return op;
}

json WeylOp::to_json() const {
    const int nv = space_.nvars();
    json terms = json::array();
    for (const auto& [k, c] : terms_) {
        terms.push_back({{"coef", c.to_string()},
                         {"mult", std::vector<int>(k.begin(), k.begin() + nv)},
                         {"deriv", std::vector<int>(k.begin() + nv, k.end())}});
    }
    return {{"n", space_.n}, {"picture", picture_name(space_.picture)}, {"terms", terms}};
}

WeylOp WeylOp::from_json(const json& j) {
    VarSpace s{j.at("n").get<int>(), picture_from(j.at("picture").get<std::string>())};
    WeylOp op(s);
    for (const auto& t : j.at("terms")) {
        auto m = t.at("mult").get<std::vector<int>>();
        auto d = t.at("deriv").get<std::vector<int>>();
        Exps mult(m.begin(), m.end()), der(d.begin(), d.end());
        op += monomial(s, mult, der, GaussScalar::parse(t.at("coef").get<std::string>()));
    }
    return op;
}

// --------------------------------------------------------------------------
// PolyVec

PolyVec PolyVec::constant(VarSpace space, const GaussScalar& c) {
    PolyVec v(space);
    v.add_term(Exps(space.nvars(), 0), c);
    return v;
}

PolyVec PolyVec::monomial(VarSpace space, const Exps& exps, const GaussScalar& c) {
    PolyVec v(space);
    v.add_term(exps, c);
    return v;
}

void PolyVec::add_term(const Exps& key, const GaussScalar& c) {
    if (key.size() != static_cast<std::size_t>(space_.nvars()))
        throw DimensionError("polynomial key size mismatch");
    accumulate(terms_, key, c);
}

GaussScalar PolyVec::coeff(const Exps& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussScalar() : it->second;
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
    require_same_space(space_, o.space_);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) {
    require_same_space(space_, o.space_);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

PolyVec& PolyVec::operator*=(const GaussScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

PolyVec PolyVec::operator-() const {
    PolyVec r(*this);
    return r *= GaussScalar(-1);
}

int PolyVec::max_q_degree() const {
    int best = 0;
    for (const auto& [k, c] : terms_) best = std::max(best, q_degree(space_, k));
    return best;
}

int PolyVec::max_z_degree() const {
    int best = 0;
    for (const auto& [k, c] : terms_) best = std::max(best, z_degree(space_, k));
    return best;
}

bool PolyVec::is_homogeneous(int m) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return homogeneity(space_, t.first) == m; });
}

std::string PolyVec::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> factors;
        for (int v = 0; v < space_.nvars(); ++v)
            if (k[v]) factors.push_back(factor_string(space_.var_name(v), k[v]));
        if (!first) os << " + ";
        first = false;
        os << coef_prefix(c, factors.empty());
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
    return os.str();
}

PolyVec PolyVec::parse(VarSpace space, std::string_view text) {
    PolyVec v(space);
    if (text == "0") return v;
    const auto table = names_for(space);
    for (const auto& term : split_terms(text)) {
        Exps key(space.nvars(), 0);
        GaussScalar c = parse_term(term, [&](const std::string& name, int e) {
            auto it = table.lookup.find(name);
            if (it == table.lookup.end() || it->second.second)
                throw ParseError("unknown polynomial variable '" + name + "'");
            key[it->second.first] = static_cast<std::uint8_t>(key[it->second.first] + e);
        });
        v.add_term(key, c);
    }
    return v;
}

json PolyVec::to_json() const {
    json terms = json::array();
    for (const auto& [k, c] : terms_)
        terms.push_back({{"coef", c.to_string()}, {"exps", std::vector<int>(k.begin(), k.end())}});
    return {{"n", space_.n}, {"picture", picture_name(space_.picture)}, {"terms", terms}};
}

PolyVec PolyVec::from_json(const json& j) {
    VarSpace s{j.at("n").get<int>(), picture_from(j.at("picture").get<std::string>())};
    PolyVec v(s);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exps").get<std::vector<int>>();
        v.add_term(Exps(e.begin(), e.end()), GaussScalar::parse(t.at("coef").get<std::string>()));
    }
    return v;
}

PolyVec apply(const WeylOp& p, const PolyVec& v) {
    require_same_space(p.space(), v.space());
    const int nv = p.space().nvars();
    PolyVec out(v.space());
    Terms& acc = out.terms_;
    for (const auto& [kp, cp] : p.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            bool dies = false;
            for (int s = 0; s < nv && !dies; ++s) dies = kv[s] < kp[nv + s];
            if (dies) continue;
            mpz_class weight = 1;
            Exps key(nv);
            for (int s = 0; s < nv; ++s) {
                for (int j = 0; j < kp[nv + s]; ++j) weight *= kv[s] - j;
                key[s] = static_cast<std::uint8_t>(kv[s] - kp[nv + s] + kp[s]);
            }
            accumulate(acc, std::move(key), cp * cv * GaussScalar(Rational(weight)));
        }
    }
    return out;
}

int xy_degree(const VarSpace& s, const Exps& e) {
    int d = 0;
    for (int v = 0; v < 2 * s.n; ++v) d += e[v];
    return d;
}

int z_degree(const VarSpace& s, const Exps& e) { return e[s.z()]; }

int q_degree(const VarSpace& s, const Exps& e) {
    int d = 0;
    for (int i = 1; i <= s.n; ++i) d += e[s.q(i)];
    return d;
}

std::vector<std::vector<int>> compositions(int d, int count) {
    std::vector<std::vector<int>> out;
    if (d < 0) return out;
    if (count == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    compose(d, count, cur, out);
    return out;
}

std::vector<Exps> slice_basis(const VarSpace& space, int m, int q_max) {
    std::vector<Exps> out;
    const int n = space.n;
    for (int qd = 0; qd <= q_max; ++qd) {
        const auto qparts = compositions(qd, n);
        for (int k = 0; 2 * k <= m; ++k) {
            for (const auto& xy : compositions(m - 2 * k, 2 * n)) {
                for (const auto& qp : qparts) {
                    Exps e(space.nvars(), 0);
                    for (int v = 0; v < 2 * n; ++v) e[v] = static_cast<std::uint8_t>(xy[v]);
                    e[space.z()] = static_cast<std::uint8_t>(k);
                    for (int i = 0; i < n; ++i) e[space.q(i + 1)] = static_cast<std::uint8_t>(qp[i]);
                    out.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

}  // namespace fmethod
