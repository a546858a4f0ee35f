#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dekomp/bigint.hpp"
#include "dekomp/errors.hpp"

namespace dekomp {

// ---------------------------------------------------------------------------
// Monomials (exponent vectors aligned with a ring's variable list)
// ---------------------------------------------------------------------------

struct Monomial {
    std::vector<std::int32_t> e;

    int deg() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }
    Monomial mul(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded order: lower total degree first; within a degree, x before y before ...
// (i.e. exponent vectors compared lexicographically, larger first).
inline bool mono_less(const Monomial& a, const Monomial& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    return a.e > b.e;
}

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

inline bool operator<(const Monomial& a, const Monomial& b) { return mono_less(a, b); }

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

// Canonical forms: integer kinds use `z` (reduced into [0,n) for residue
// rings); polynomial kinds use the sparse map `t` with coefficients in [1,p)
// and, for truncated algebras, no monomial of degree >= e.
struct Elem {
    Int z = 0;
    std::map<Monomial, std::int64_t, MonoLess> t;

    bool operator==(const Elem& o) const { return z == o.z && t == o.t; }
    bool operator!=(const Elem& o) const { return !(*this == o); }
    bool operator<(const Elem& o) const {
        if (z != o.z) return z < o.z;
        return std::lexicographical_compare(
            t.begin(), t.end(), o.t.begin(), o.t.end(), [](const auto& x, const auto& y) {
                if (!(x.first == y.first)) return mono_less(x.first, y.first);
                return x.second < y.second;
            });
    }
};

// ---------------------------------------------------------------------------
// Ring descriptors
// ---------------------------------------------------------------------------

class Ring {
public:
    enum class Kind { Integers, IntegersMod, PrimeField, PolyRing, TruncatedLocal };

    static Ring integers() { return Ring(Kind::Integers, 0, 0, {}, 0); }

    static Ring integers_mod(const Int& n) {
        if (n < 2) throw DomainError("Z/n requires n >= 2");
        return Ring(Kind::IntegersMod, n, 0, {}, 0);
    }

    static Ring prime_field(std::int64_t p) {
        require_prime(p);
        return Ring(Kind::PrimeField, p, p, {}, 0);
    }

    static Ring poly_ring(std::int64_t p, std::vector<std::string> vars) {
        require_prime(p);
        require_vars(vars);
        return Ring(Kind::PolyRing, p, p, std::move(vars), 0);
    }

    static Ring truncated_local(std::int64_t p, std::vector<std::string> vars, int e) {
        require_prime(p);
        require_vars(vars);
        if (e < 2) throw DomainError("truncation order e must be >= 2");
        Ring r(Kind::TruncatedLocal, p, p, std::move(vars), e);
        r.build_basis();
        return r;
    }

    Kind kind() const { return kind_; }
    const Int& modulus() const { return n_; }
    std::int64_t p() const { return p_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int trunc() const { return e_; }

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && vars_ == o.vars_ && e_ == o.e_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    // ---- descriptor text ----------------------------------------------------

    std::string to_string() const {
        switch (kind_) {
            case Kind::Integers: return "Z";
            case Kind::IntegersMod: return "Z/" + n_.str();
            case Kind::PrimeField: return "GF(" + std::to_string(p_) + ")";
            case Kind::PolyRing:
            case Kind::TruncatedLocal: {
                std::string s = "GF(" + std::to_string(p_) + ")[";
                for (std::size_t i = 0; i < vars_.size(); ++i) {
                    if (i) s += ",";
                    s += vars_[i];
                }
                s += "]";
                if (kind_ == Kind::TruncatedLocal) s += "/m^" + std::to_string(e_);
                return s;
            }
        }
        return {};
    }

    static Ring parse(const std::string& text);

    // ---- element construction ----------------------------------------------

    Elem zero() const { return Elem{}; }

    Elem one() const { return from_int(1); }

    Elem from_int(const Int& v) const {
        Elem r;
        switch (kind_) {
            case Kind::Integers: r.z = v; break;
            case Kind::IntegersMod: r.z = ((v % n_) + n_) % n_; break;
            case Kind::PrimeField: r.z = ((v % p_) + p_) % p_; break;
            case Kind::PolyRing:
            case Kind::TruncatedLocal: {
                std::int64_t c = std::int64_t(((v % p_) + p_) % p_);
                if (c != 0) r.t[one_mono()] = c;
                break;
            }
        }
        return r;
    }

    Elem var(int i) const {
        if (!is_poly_kind()) throw DomainError("ring has no variables");
        if (i < 0 || i >= int(vars_.size())) throw DomainError("variable index out of range");
        Monomial m;
        m.e.assign(vars_.size(), 0);
        m.e[i] = 1;
        return monomial_elem(m, 1);
    }

    Elem monomial_elem(const Monomial& m, std::int64_t coeff) const {
        if (!is_poly_kind()) throw DomainError("ring has no monomials");
        Elem r;
        coeff = ((coeff % p_) + p_) % p_;
        if (coeff == 0) return r;
        if (kind_ == Kind::TruncatedLocal && m.deg() >= e_) return r;
        r.t[m] = coeff;
        return r;
    }

    bool is_zero(const Elem& a) const { return a.z == 0 && a.t.empty(); }

    bool is_canonical(const Elem& a) const {
        switch (kind_) {
            case Kind::Integers: return a.t.empty();
            case Kind::IntegersMod: return a.t.empty() && a.z >= 0 && a.z < n_;
            case Kind::PrimeField: return a.t.empty() && a.z >= 0 && a.z < p_;
            case Kind::PolyRing:
            case Kind::TruncatedLocal:
                if (a.z != 0) return false;
                for (const auto& [m, c] : a.t) {
                    if (int(m.e.size()) != int(vars_.size())) return false;
                    for (auto x : m.e)
                        if (x < 0) return false;
                    if (c <= 0 || c >= p_) return false;
                    if (kind_ == Kind::TruncatedLocal && m.deg() >= e_) return false;
                }
                return true;
        }
        return false;
    }

    void require_canonical(const Elem& a) const {
        if (!is_canonical(a)) throw DomainError("element not in canonical form for " + to_string());
    }

    // ---- arithmetic ----------------------------------------------------------

    Elem add(const Elem& a, const Elem& b) const {
        require_canonical(a);
        require_canonical(b);
        if (is_integer_kind()) return from_int(a.z + b.z);
        Elem r = a;
        for (const auto& [m, c] : b.t) add_term(r, m, c);
        return r;
    }

    Elem neg(const Elem& a) const {
        require_canonical(a);
        if (is_integer_kind()) return from_int(-a.z);
        Elem r;
        for (const auto& [m, c] : a.t) r.t[m] = p_ - c;
        return r;
    }

    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    Elem mul(const Elem& a, const Elem& b) const {
        require_canonical(a);
        require_canonical(b);
        if (is_integer_kind()) return from_int(a.z * b.z);
        Elem r;
        for (const auto& [ma, ca] : a.t)
            for (const auto& [mb, cb] : b.t) {
                Monomial m = ma.mul(mb);
                if (kind_ == Kind::TruncatedLocal && m.deg() >= e_) continue;
                add_term(r, m, (ca * cb) % p_);
            }
        return r;
    }

    Elem mul_int(const Elem& a, const Int& k) const { return mul(a, from_int(k)); }

    // ---- units ----------------------------------------------------------------

    bool is_unit(const Elem& a) const { return try_invert(a).has_value(); }

    std::optional<Elem> try_invert(const Elem& a) const {
        require_canonical(a);
        switch (kind_) {
            case Kind::Integers:
                if (a.z == 1 || a.z == -1) return a;
                return std::nullopt;
            case Kind::IntegersMod: {
                Int inv;
                if (!mod_inverse(a.z, n_, inv)) return std::nullopt;
                return from_int(inv);
            }
            case Kind::PrimeField: {
                if (a.z == 0) return std::nullopt;
                Int inv;
                mod_inverse(a.z, Int(p_), inv);
                return from_int(inv);
            }
            case Kind::PolyRing: {
                // units are the nonzero constants
                if (a.t.size() != 1 || !a.t.begin()->first.is_one()) return std::nullopt;
                Int inv;
                mod_inverse(Int(a.t.begin()->second), Int(p_), inv);
                return from_int(inv);
            }
            case Kind::TruncatedLocal: {
                // unit iff constant term nonzero; invert by the finite Neumann series
                auto it = a.t.find(one_mono());
                if (it == a.t.end()) return std::nullopt;
                Int cinv_i;
                mod_inverse(Int(it->second), Int(p_), cinv_i);
                Elem cinv = from_int(cinv_i);
                Elem m = sub(mul(cinv, a), one());  // in the maximal ideal
                Elem acc = one();
                Elem pow = one();
                for (int k = 1; k < e_; ++k) {
                    pow = mul(pow, neg(m));
                    acc = add(acc, pow);
                }
                return mul(cinv, acc);
            }
        }
        return std::nullopt;
    }

    // ---- local structure ------------------------------------------------------

    bool is_local() const {
        switch (kind_) {
            case Kind::PrimeField:
            case Kind::TruncatedLocal: return true;
            case Kind::IntegersMod: {
                Int p;
                int k;
                return mod_prime_power(p, k);
            }
            default: return false;
        }
    }

    // For Z/n: n = p^k with k >= 1.
    bool mod_prime_power(Int& p_out, int& k_out) const {
        if (kind_ != Kind::IntegersMod) return false;
        Int m = n_;
        Int p = 2;
        while (p * p <= m) {
            if (m % p == 0) break;
            ++p;
        }
        if (m % p != 0) p = m;  // n prime
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1) return false;
        p_out = p;
        k_out = k;
        return true;
    }

    // Image in the residue field R/m for local rings, as a value in [0,p).
    std::int64_t residue(const Elem& a) const {
        require_canonical(a);
        switch (kind_) {
            case Kind::PrimeField: return std::int64_t(a.z);
            case Kind::TruncatedLocal: {
                auto it = a.t.find(one_mono());
                return it == a.t.end() ? 0 : it->second;
            }
            case Kind::IntegersMod: {
                Int p;
                int k;
                if (!mod_prime_power(p, k)) throw DomainError("residue: ring not local");
                return std::int64_t(a.z % p);
            }
            default: throw DomainError("residue: ring not local");
        }
    }

    // ---- enumeration -----------------------------------------------------------

    bool is_finite() const {
        return kind_ == Kind::IntegersMod || kind_ == Kind::PrimeField ||
               kind_ == Kind::TruncatedLocal;
    }

    Int size() const {
        switch (kind_) {
            case Kind::IntegersMod: return n_;
            case Kind::PrimeField: return p_;
            case Kind::TruncatedLocal: {
                Int s = 1;
                for (std::size_t i = 0; i < basis_.size(); ++i) s *= p_;
                return s;
            }
            default: throw DomainError("size: infinite ring " + to_string());
        }
    }

    // Deterministic enumeration: element_at(i) for i in [0, size()).
    Elem element_at(Int idx) const {
        if (!is_finite()) throw DomainError("enumerate: infinite ring " + to_string());
        if (idx < 0 || idx >= size()) throw DomainError("element index out of range");
        switch (kind_) {
            case Kind::IntegersMod:
            case Kind::PrimeField: return from_int(idx);
            case Kind::TruncatedLocal: {
                Elem r;
                for (const auto& m : basis_) {
                    std::int64_t d = std::int64_t(idx % p_);
                    idx /= p_;
                    if (d != 0) r.t[m] = d;
                }
                return r;
            }
            default: break;
        }
        throw DomainError("unreachable");
    }

    // ---- GF(p)-algebra structure (module engine support) -----------------------

    // True for the kinds whose additive group is an elementary abelian p-group
    // with a canonical monomial basis: GF(p), Z/p (p prime), and truncated
    // local algebras.
    bool is_gfp_algebra() const {
        switch (kind_) {
            case Kind::PrimeField:
            case Kind::TruncatedLocal: return true;
            case Kind::IntegersMod: return is_prime_int(n_) && n_ < (Int(1) << 31);
            default: return false;
        }
    }

    std::int64_t char_p() const {
        if (kind_ == Kind::IntegersMod) {
            if (!is_prime_int(n_)) throw DomainError("char_p: Z/n with n composite");
            return std::int64_t(n_);
        }
        if (p_ == 0) throw DomainError("char_p: characteristic-zero ring");
        return p_;
    }

    int dim() const {  // GF(p)-dimension
        switch (kind_) {
            case Kind::PrimeField: return 1;
            case Kind::IntegersMod:
                if (is_prime_int(n_)) return 1;
                throw DomainError("dim: Z/n with n composite is not a GF(p)-algebra");
            case Kind::TruncatedLocal: return int(basis_.size());
            default: throw DomainError("dim: not a finite GF(p)-algebra");
        }
    }

    // Monomial basis in graded order; basis()[0] is 1. Only for TruncatedLocal.
    const std::vector<Monomial>& basis() const {
        if (kind_ != Kind::TruncatedLocal) throw DomainError("basis: not a truncated algebra");
        return basis_;
    }

    std::vector<std::int64_t> coords(const Elem& a) const {
        require_canonical(a);
        if (kind_ == Kind::TruncatedLocal) {
            std::vector<std::int64_t> c(basis_.size(), 0);
            for (const auto& [m, v] : a.t) c[basis_index(m)] = v;
            return c;
        }
        if (is_gfp_algebra()) return {std::int64_t(a.z)};
        throw DomainError("coords: not a finite GF(p)-algebra");
    }

    Elem from_coords(const std::vector<std::int64_t>& c) const {
        if (kind_ == Kind::TruncatedLocal) {
            Elem r;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                std::int64_t v = ((c[i] % p_) + p_) % p_;
                if (v != 0) r.t[basis_[i]] = v;
            }
            return r;
        }
        if (is_gfp_algebra()) return from_int(c.at(0));
        throw DomainError("from_coords: not a finite GF(p)-algebra");
    }

    int algebra_generator_count() const {
        return kind_ == Kind::TruncatedLocal ? int(vars_.size()) : 0;
    }

    // ---- Euclidean structure (SNF support) --------------------------------------

    bool is_euclidean() const {
        return kind_ == Kind::Integers || (kind_ == Kind::PolyRing && vars_.size() == 1);
    }

    // degree of a univariate polynomial (-1 for zero)
    int degree(const Elem& a) const {
        if (kind_ != Kind::PolyRing || vars_.size() != 1)
            throw DomainError("degree: not univariate");
        if (a.t.empty()) return -1;
        return a.t.rbegin()->first.deg();
    }

    std::int64_t leading_coeff(const Elem& a) const {
        if (a.t.empty()) return 0;
        return a.t.rbegin()->second;
    }

    // a = q*b + r with the usual Euclidean bound (|r| < |b| over Z, deg r < deg b
    // over GF(p)[x]). b must be nonzero.
    void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) const {
        if (is_zero(b)) throw DomainError("divmod by zero");
        if (kind_ == Kind::Integers) {
            Int qq = a.z / b.z;  // truncated division: |r| < |b|
            q = from_int(qq);
            r = from_int(a.z - qq * b.z);
            return;
        }
        if (kind_ == Kind::PolyRing && vars_.size() == 1) {
            q = zero();
            r = a;
            int db = degree(b);
            std::int64_t lb = leading_coeff(b);
            Int lb_inv_i;
            mod_inverse(Int(lb), Int(p_), lb_inv_i);
            std::int64_t lb_inv = std::int64_t(lb_inv_i);
            while (!is_zero(r) && degree(r) >= db) {
                int dr = degree(r);
                std::int64_t lr = leading_coeff(r);
                Monomial m;
                m.e = {std::int32_t(dr - db)};
                Elem t = monomial_elem(m, (lr * lb_inv) % p_);
                q = add(q, t);
                r = sub(r, mul(t, b));
            }
            return;
        }
        throw DomainError("divmod: ring is not Euclidean here");
    }

    // ---- Z/p^k valuation ---------------------------------------------------------

    // p-adic valuation of a in Z/p^k (valuation of 0 is k).
    int pk_valuation(const Elem& a, const Int& p, int k) const {
        if (kind_ != Kind::IntegersMod) throw DomainError("pk_valuation: not Z/n");
        if (a.z == 0) return k;
        Int v = a.z;
        int j = 0;
        while (v % p == 0) {
            v /= p;
            ++j;
        }
        return j;
    }

    // ---- element text --------------------------------------------------------------

    Elem parse_elem(const std::string& text) const;
    std::string format_elem(const Elem& a) const;

    bool is_poly_kind() const {
        return kind_ == Kind::PolyRing || kind_ == Kind::TruncatedLocal;
    }
    bool is_integer_kind() const { return !is_poly_kind(); }

    Monomial one_mono() const {
        Monomial m;
        m.e.assign(vars_.size(), 0);
        return m;
    }

private:
    Ring(Kind k, Int n, std::int64_t p, std::vector<std::string> vars, int e)
        : kind_(k), n_(std::move(n)), p_(p), vars_(std::move(vars)), e_(e) {}

    static void require_prime(std::int64_t p) {
        if (!is_prime_int(Int(p))) throw DomainError(std::to_string(p) + " is not prime");
    }

    static void require_vars(const std::vector<std::string>& vars) {
        if (vars.empty()) throw DomainError("polynomial ring needs at least one variable");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw DomainError("duplicate variable " + vars[i]);
    }

    void build_basis() {
        // all monomials of total degree < e, graded order
        basis_.clear();
        Monomial cur;
        cur.e.assign(vars_.size(), 0);
        std::vector<Monomial> acc;
        gen_monos(acc, cur, 0, 0);
        std::sort(acc.begin(), acc.end(), MonoLess{});
        basis_ = std::move(acc);
    }

    void gen_monos(std::vector<Monomial>& acc, Monomial& cur, std::size_t i, int deg) const {
        if (i == vars_.size()) {
            acc.push_back(cur);
            return;
        }
        for (int d = 0; deg + d < e_; ++d) {
            cur.e[i] = d;
            gen_monos(acc, cur, i + 1, deg + d);
        }
        cur.e[i] = 0;
    }

    int basis_index(const Monomial& m) const {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), m, MonoLess{});
        if (it == basis_.end() || !(*it == m)) throw DomainError("monomial outside basis");
        return int(it - basis_.begin());
    }

    void add_term(Elem& r, const Monomial& m, std::int64_t c) const {
        c = ((c % p_) + p_) % p_;
        if (c == 0) return;
        auto it = r.t.find(m);
        if (it == r.t.end()) {
            r.t[m] = c;
        } else {
            it->second = (it->second + c) % p_;
            if (it->second == 0) r.t.erase(it);
        }
    }

    Kind kind_;
    Int n_;
    std::int64_t p_;
    std::vector<std::string> vars_;
    int e_;
    std::vector<Monomial> basis_;  // TruncatedLocal only
};

// ---------------------------------------------------------------------------
// Descriptor parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in " + what, i);
    }
    Int integer(const char* what) {
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected integer in ") + what, i);
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? Int(-v) : v;
    }
    std::string ident(const char* what) {
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected identifier in ") + what, i);
        std::size_t start = i;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++i;
        return s.substr(start, i - start);
    }
};

}  // namespace detail

inline Ring Ring::parse(const std::string& text) {
    detail::Cursor c{text};
    if (c.eat('Z')) {
        if (c.done()) return integers();
        c.expect('/', "Z/<n>");
        std::size_t npos = c.i;
        Int n = c.integer("Z/<n>");
        if (!c.done()) throw ParseError("trailing input after ring descriptor", c.i);
        if (n < 2) throw ParseError("Z/<n> requires n >= 2", npos);
        return integers_mod(n);
    }
    if (c.peek() == 'G') {
        c.expect('G', "GF(p)");
        c.expect('F', "GF(p)");
        c.expect('(', "GF(p)");
        std::size_t ppos = c.i;
        Int p = c.integer("GF(p)");
        c.expect(')', "GF(p)");
        if (!is_prime_int(p)) throw ParseError(p.str() + " is not prime", ppos);
        if (p >= (Int(1) << 31)) throw ParseError("characteristic too large", ppos);
        std::int64_t pl = std::int64_t(p);
        if (c.done()) return prime_field(pl);
        c.expect('[', "variable list");
        std::vector<std::string> vars;
        vars.push_back(c.ident("variable list"));
        while (c.eat(',')) vars.push_back(c.ident("variable list"));
        c.expect(']', "variable list");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw ParseError("duplicate variable " + vars[i], c.i);
        if (c.done()) return poly_ring(pl, std::move(vars));
        c.expect('/', "/m^<e>");
        c.expect('m', "/m^<e>");
        c.expect('^', "/m^<e>");
        std::size_t epos = c.i;
        Int e = c.integer("/m^<e>");
        if (!c.done()) throw ParseError("trailing input after ring descriptor", c.i);
        if (e < 2) throw ParseError("truncation order must be >= 2", epos);
        if (e > 64) throw ParseError("truncation order too large", epos);
        return truncated_local(pl, std::move(vars), int(e));
    }
    throw ParseError("unrecognized ring descriptor", c.i);
}

// ---------------------------------------------------------------------------
// Element parsing / formatting
// ---------------------------------------------------------------------------

inline Elem Ring::parse_elem(const std::string& text) const {
    detail::Cursor c{text};
    auto parse_factor = [&](bool& /*dummy*/) -> Elem {
        if (std::isdigit(static_cast<unsigned char>(c.peek())))
            return from_int(c.integer("element"));
        std::size_t vpos = c.i;
        std::string name = c.ident("element");
        int vi = -1;
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k] == name) vi = int(k);
        if (vi < 0) throw ParseError("unknown variable '" + name + "'", vpos);
        Int exp = 1;
        if (c.eat('^')) exp = c.integer("exponent");
        if (exp < 0) throw ParseError("negative exponent", vpos);
        Elem r = one();
        for (Int k = 0; k < exp; ++k) r = mul(r, var(vi));
        return r;
    };
    auto parse_term = [&]() -> Elem {
        bool dummy = false;
        Elem r = parse_factor(dummy);
        while (c.eat('*')) r = mul(r, parse_factor(dummy));
        return r;
    };
    bool negate = c.eat('-');
    if (c.done()) throw ParseError("empty element", c.i);
    Elem acc = parse_term();
    if (negate) acc = neg(acc);
    while (!c.done()) {
        if (c.eat('+')) {
            acc = add(acc, parse_term());
        } else if (c.eat('-')) {
            acc = sub(acc, parse_term());
        } else {
            throw ParseError("unexpected character in element", c.i);
        }
    }
    return acc;
}

inline std::string Ring::format_elem(const Elem& a) const {
    require_canonical(a);
    if (is_integer_kind()) return a.z.str();
    if (a.t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, coeff] : a.t) {
        if (!first) out += "+";
        first = false;
        if (m.is_one()) {
            out += std::to_string(coeff);
            continue;
        }
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (coeff != 1) out += std::to_string(coeff) + "*";
        out += mono;
    }
    return out;
}

}  // namespace dekomp
