// multipoly.hpp
//
// Sparse multivariate polynomials over Q. These are the numerators and
// denominators of coefficient-field elements; the variable set is fixed
// per polynomial (index variables first, then parameters). Terms are kept
// in a map under the plain lexicographic exponent order, which doubles as
// the canonical form for equality tests and printing.
//
// gcd() uses integer content / primitive part recursion with the
// subresultant polynomial remainder sequence in the top active variable.

#ifndef DIFFALG_MULTIPOLY_HPP
#define DIFFALG_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/rational.hpp"

namespace diffalg {

class MultiPoly {
public:
    using Exps = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_.emplace(Exps(nvars, 0), c);
        return p;
    }

    static MultiPoly variable(int nvars, int v, int power = 1, const Rational& c = Rational(1)) {
        MultiPoly p(nvars);
        if (v < 0 || v >= nvars) fail(ErrorKind::Internal, "variable index out of range");
        if (power < 0) fail(ErrorKind::Argument, "negative exponent");
        if (c != 0) {
            Exps e(nvars, 0);
            e[v] = power;
            p.terms_.emplace(std::move(e), c);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == Exps(nvars_, 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) fail(ErrorKind::Internal, "constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    const std::map<Exps, Rational>& terms() const { return terms_; }

    // Leading term under the internal lexicographic order.
    const std::pair<const Exps, Rational>& leading() const {
        if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_arity(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_arity(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_arity(o);
        MultiPoly r(std::max(nvars_, o.nvars_));
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exps e(r.nvars_, 0);
                for (int v = 0; v < r.nvars_; ++v) e[v] = ea[v] + eb[v];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Substitutes x_v -> x_v + c (binomial expansion); c may be negative.
    MultiPoly shift_var(int v, long c = 1) const {
        if (c == 0) return *this;
        MultiPoly r(nvars_);
        Integer cc(c);
        for (const auto& [e, coeff] : terms_) {
            int ev = e[v];
            Integer cpow(1);  // cc^(ev-j)
            std::vector<Integer> pows(ev + 1);
            pows[ev] = 1;
            for (int j = ev - 1; j >= 0; --j) pows[j] = pows[j + 1] * cc;
            for (int j = 0; j <= ev; ++j) {
                Exps en = e;
                en[v] = j;
                r.add_term(en, coeff * Rational(binomial(ev, j) * pows[j]));
            }
        }
        return r;
    }

    // Exact division; nullopt if o does not divide *this.
    std::optional<MultiPoly> divide_exact(const MultiPoly& o) const {
        check_arity(o);
        if (o.is_zero()) fail(ErrorKind::Internal, "division by zero polynomial");
        MultiPoly q(nvars_), r = *this;
        const auto& [eb, cb] = o.leading();
        while (!r.is_zero()) {
            const auto& [er, cr] = r.leading();
            Exps e(nvars_, 0);
            for (int v = 0; v < nvars_; ++v) {
                e[v] = er[v] - eb[v];
                if (e[v] < 0) return std::nullopt;
            }
            Rational c = cr / cb;
            MultiPoly t(nvars_);
            t.terms_.emplace(e, c);
            q.add_term(e, c);
            r = r - t * o;
        }
        return q;
    }

    // The unique c in Q* with *this == c * P, P integer, content 1, positive
    // leading (lex) coefficient. Zero polynomial yields c = 0.
    Rational rational_content() const {
        if (terms_.empty()) return Rational(0);
        Integer g(0), l(1);
        for (const auto& [e, c] : terms_) {
            g = int_gcd(g, c.get_num());
            l = int_lcm(l, c.get_den());
        }
        Rational c = make_rational(g, l);
        if (terms_.rbegin()->second < 0) c = -c;
        return c;
    }

    // *this / rational_content(): integer, content 1, positive leading coeff.
    MultiPoly primitive() const {
        if (terms_.empty()) return *this;
        return scaled(Rational(1) / rational_content());
    }

    // ---- univariate views in one variable, coefficients in the others ----

    MultiPoly coeff_of(int v, int k) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (e[v] == k) {
                Exps en = e;
                en[v] = 0;
                r.terms_.emplace(std::move(en), c);
            }
        return r;
    }

    MultiPoly times_power(int v, int k) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exps en = e;
            en[v] += k;
            r.terms_.emplace(std::move(en), c);
        }
        return r;
    }

    // Renders with '*' between factors and '^' for powers; terms descending
    // under the internal order. Intended for coefficient display.
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = false;
            for (int v = 0; v < nvars_; ++v)
                if (e[v] > 0) has_vars = true;
            if (!has_vars || a != 1) out << rational_str(a);
            bool want_star = !has_vars || a != 1;
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                if (want_star) out << "*";
                out << names.at(v);
                if (e[v] > 1) out << "^" << e[v];
                want_star = true;
            }
        }
        return out.str();
    }

    // Canonical machine key (used for completion ledgers).
    std::string key() const {
        std::ostringstream out;
        for (const auto& [e, c] : terms_) {
            for (int x : e) out << x << ",";
            out << "=" << c.get_str() << ";";
        }
        return out.str();
    }

private:
    void check_arity(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) fail(ErrorKind::Internal, "polynomial arity mismatch");
    }

    void add_term(const Exps& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars_;
    std::map<Exps, Rational> terms_;
};

namespace detail {

// Highest variable index occurring in either polynomial, or -1 if both are
// constant in every variable.
inline int top_variable(const MultiPoly& a, const MultiPoly& b) {
    for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v)
        if ((v < a.nvars() && a.degree(v) > 0) || (v < b.nvars() && b.degree(v) > 0)) return v;
    return -1;
}

// lc(b)^(deg a - deg b + 1) * a mod b, working in variable v.
inline MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int v) {
    int db = b.degree(v);
    MultiPoly lb = b.coeff_of(v, db);
    MultiPoly r = a;
    int e = a.degree(v) - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        MultiPoly lr = r.coeff_of(v, dr);
        r = r * lb - (lr * b).times_power(v, dr - db);
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b);

// Content of a with respect to variable v: gcd of the v-coefficients
// (each an integer-primitive polynomial times content already handled by
// callers working with primitive inputs).
inline MultiPoly content_in(const MultiPoly& a, int v) {
    MultiPoly c(a.nvars());
    for (int k = 0; k <= a.degree(v); ++k) {
        MultiPoly ck = a.coeff_of(v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck.primitive() : gcd_primitive(c, ck.primitive());
        if (c.is_constant()) break;
    }
    return c;
}

// gcd of integer-primitive polynomials, returned integer-primitive with
// positive leading coefficient.
inline MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.nvars(), Rational(1));
    int v = top_variable(a, b);
    if (v < 0) return MultiPoly::constant(a.nvars(), Rational(1));

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    MultiPoly cg = gcd_primitive(ca, cb);

    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);

    // Subresultant remainder sequence in v.
    MultiPoly one = MultiPoly::constant(a.nvars(), Rational(1));
    MultiPoly g = one, h = one;
    MultiPoly r0 = pa, r1 = pb;
    for (;;) {
        int delta = r0.degree(v) - r1.degree(v);
        MultiPoly rem = pseudo_rem(r0, r1, v);
        if (rem.is_zero()) break;
        if (rem.degree(v) == 0) {
            r1 = one;  // primitive parts are coprime in v
            break;
        }
        MultiPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        r0 = r1;
        auto q = rem.divide_exact(divisor);
        if (!q) fail(ErrorKind::Internal, "subresultant division failed");
        r1 = *q;
        g = r0.coeff_of(v, r0.degree(v));
        if (delta > 0) {
            MultiPoly hn = g;
            for (int i = 1; i < delta; ++i) hn = hn * g;
            for (int i = 1; i < delta; ++i) {
                auto hq = hn.divide_exact(h);
                if (!hq) fail(ErrorKind::Internal, "subresultant h-update failed");
                hn = *hq;
            }
            h = hn;
        }
    }
    MultiPoly pp = r1.is_constant() ? one : *r1.divide_exact(content_in(r1, v));
    return (cg * pp).primitive();
}

}  // namespace detail

// Canonical gcd: integer coefficients, content 1, positive leading (lex)
// coefficient; gcd(0,0) = 0. Rational contents of the inputs are units and
// do not contribute.
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    return detail::gcd_primitive(a.primitive(), b.primitive());
}

}  // namespace diffalg

#endif
