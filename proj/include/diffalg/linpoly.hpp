// linpoly.hpp
//
// Linear difference polynomials: K-linear combinations of terms plus an
// inhomogeneous constant slot. Terms are stored strictly descending under
// the ranking supplied at construction, so the leading term is O(1);
// operations that merge two polynomials take the ranking explicitly and
// re-sorting under a different ranking is an explicit call.

#ifndef DIFFALG_LINPOLY_HPP
#define DIFFALG_LINPOLY_HPP

#include <algorithm>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/ratfunc.hpp"
#include "diffalg/signature.hpp"
#include "diffalg/term.hpp"

namespace diffalg {

class LinearPoly {
public:
    using TermEntry = std::pair<Term, RationalFunction>;

    LinearPoly() = default;
    explicit LinearPoly(SigPtr sig) : sig_(std::move(sig)) {
        constant_ = RationalFunction::from_rational(static_cast<int>(sig_->num_coeff_vars()), Rational(0));
    }

    static LinearPoly from_terms(SigPtr sig, std::vector<TermEntry> entries, RationalFunction constant,
                                 const Ranking& r) {
        LinearPoly p(std::move(sig));
        for (const auto& [t, c] : entries) p.validate_term(t, c);
        std::stable_sort(entries.begin(), entries.end(),
                         [&](const TermEntry& a, const TermEntry& b) { return r.compare(a.first, b.first) > 0; });
        for (auto& [t, c] : entries) {
            if (c.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().first == t) {
                p.terms_.back().second = p.terms_.back().second + c;
                if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.emplace_back(std::move(t), std::move(c));
            }
        }
        if (!constant.is_zero()) p.constant_ = std::move(constant);
        return p;
    }

    const SigPtr& sig() const { return sig_; }
    const std::vector<TermEntry>& terms() const { return terms_; }
    const RationalFunction& constant() const { return constant_; }
    bool has_terms() const { return !terms_.empty(); }
    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
    size_t num_terms() const { return terms_.size(); }

    const Term& lm() const {
        if (terms_.empty()) fail(ErrorKind::Internal, "leading term of a polynomial without terms");
        return terms_.front().first;
    }
    const RationalFunction& lc() const {
        if (terms_.empty()) fail(ErrorKind::Internal, "leading coefficient of a polynomial without terms");
        return terms_.front().second;
    }

    LinearPoly scaled(const RationalFunction& c) const {
        LinearPoly p(sig_);
        if (c.is_zero()) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& [t, k] : terms_) p.terms_.emplace_back(t, k * c);
        p.constant_ = constant_ * c;
        return p;
    }

    LinearPoly negated() const {
        LinearPoly p(sig_);
        p.terms_.reserve(terms_.size());
        for (const auto& [t, k] : terms_) p.terms_.emplace_back(t, -k);
        p.constant_ = -constant_;
        return p;
    }

    LinearPoly monic() const {
        if (terms_.empty()) fail(ErrorKind::Argument, "cannot normalize a polynomial without terms");
        if (lc().is_one()) return *this;
        return scaled(lc().inverse());
    }

    // theta^beta applied to the whole polynomial: shifts every term and acts
    // on every coefficient (including the constant slot) by the coefficient
    // shift automorphism. Order is preserved by the ranking axioms, so the
    // stored sort survives untouched.
    LinearPoly apply_shift(const ExponentVector& beta) const {
        if (beta.size() != sig_->num_indices()) fail(ErrorKind::Signature, "shift arity mismatch");
        if (beta.is_zero()) return *this;
        LinearPoly p(sig_);
        p.terms_.reserve(terms_.size());
        for (const auto& [t, c] : terms_) p.terms_.emplace_back(shift_term(t, beta), shift_coeff(c, beta.raw()));
        p.constant_ = shift_coeff(constant_, beta.raw());
        return p;
    }

    // Rebuilds the stored order under another ranking.
    LinearPoly resorted(const Ranking& r) const {
        return from_terms(sig_, terms_, constant_, r);
    }

    bool operator==(const LinearPoly& o) const { return terms_ == o.terms_ && constant_ == o.constant_; }
    bool operator!=(const LinearPoly& o) const { return !(*this == o); }

    // Canonical ranking-independent key (ledgers, set membership).
    std::string key() const {
        std::vector<TermEntry> sorted = terms_;
        std::sort(sorted.begin(), sorted.end(),
                  [](const TermEntry& a, const TermEntry& b) { return a.first < b.first; });
        std::ostringstream out;
        for (const auto& [t, c] : sorted) {
            out << t.func << t.shift.str() << "*" << c.key() << "+";
        }
        out << "#" << constant_.key();
        return out.str();
    }

private:
    void validate_term(const Term& t, const RationalFunction& c) const {
        if (t.func < 0 || static_cast<size_t>(t.func) >= sig_->num_functions())
            fail(ErrorKind::Signature, "term function index out of range");
        if (t.shift.size() != sig_->num_indices()) fail(ErrorKind::Signature, "term shift arity mismatch");
        if (!c.is_zero() && c.nvars() != static_cast<int>(sig_->num_coeff_vars()))
            fail(ErrorKind::Signature, "coefficient arity mismatch");
    }

    SigPtr sig_;
    std::vector<TermEntry> terms_;
    RationalFunction constant_;
};

// a + b, both sorted under r.
inline LinearPoly add(const LinearPoly& a, const LinearPoly& b, const Ranking& r) {
    require_same_signature(a.sig(), b.sig());
    LinearPoly p(a.sig());
    std::vector<LinearPoly::TermEntry> merged;
    merged.reserve(a.num_terms() + b.num_terms());
    size_t i = 0, j = 0;
    while (i < a.num_terms() || j < b.num_terms()) {
        if (i == a.num_terms()) {
            merged.push_back(b.terms()[j++]);
        } else if (j == b.num_terms()) {
            merged.push_back(a.terms()[i++]);
        } else {
            int c = r.compare(a.terms()[i].first, b.terms()[j].first);
            if (c > 0) {
                merged.push_back(a.terms()[i++]);
            } else if (c < 0) {
                merged.push_back(b.terms()[j++]);
            } else {
                RationalFunction s = a.terms()[i].second + b.terms()[j].second;
                if (!s.is_zero()) merged.emplace_back(a.terms()[i].first, std::move(s));
                ++i, ++j;
            }
        }
    }
    return LinearPoly::from_terms(a.sig(), std::move(merged), a.constant() + b.constant(), r);
}

inline LinearPoly sub(const LinearPoly& a, const LinearPoly& b, const Ranking& r) { return add(a, b.negated(), r); }

struct ReductionStep {
    size_t elem;            // index into the reducing set
    ExponentVector shift;   // theta^beta applied to the reducer
    RationalFunction coeff; // multiple subtracted (reducers taken monic)
};
using ReductionTrace = std::vector<ReductionStep>;

// Reduction with ordinary theta-divisibility (condition: lm(g) divides the
// monomial). Repeatedly rewrites the highest reducible monomial using the
// first matching reducer, which keeps the procedure deterministic. With
// head_only set, stops as soon as the leading term is irreducible.
inline LinearPoly plain_reduce(const LinearPoly& f, std::span<const LinearPoly> basis, const Ranking& r,
                               bool head_only = false, ReductionTrace* trace = nullptr) {
    LinearPoly h = f;
    size_t safe_prefix = 0;  // terms before this index are known irreducible
    long guard = 0;
    while (h.has_terms()) {
        if (++guard > 20000000) fail(ErrorKind::Internal, "reduction did not terminate");
        bool reduced = false;
        for (size_t idx = safe_prefix; idx < h.num_terms(); ++idx) {
            const auto& [t, c] = h.terms()[idx];
            for (size_t gi = 0; gi < basis.size(); ++gi) {
                const LinearPoly& g = basis[gi];
                if (!g.has_terms()) continue;
                auto beta = term_divides(g.lm(), t);
                if (!beta) continue;
                LinearPoly shifted = g.monic().apply_shift(*beta);
                h = sub(h, shifted.scaled(c), r);
                if (trace) trace->push_back({gi, *beta, c});
                safe_prefix = idx;
                reduced = true;
                break;
            }
            if (reduced) break;
            safe_prefix = idx + 1;
            if (head_only) return h;
        }
        if (!reduced) break;
    }
    return h;
}

}  // namespace diffalg

#endif
