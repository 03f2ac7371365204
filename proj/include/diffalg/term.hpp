// term.hpp
//
// Terms are shifted function symbols: a function index together with the
// exponent vector of the shift monomial applied to it. Rankings are the
// strict total orders used everywhere downstream; they satisfy the two
// difference-ranking axioms (shifting raises a term, and shifting both
// sides of a comparison preserves it).

#ifndef DIFFALG_TERM_HPP
#define DIFFALG_TERM_HPP

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/signature.hpp"

namespace diffalg {

class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(size_t n) : e_(n, 0) {}
    explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {
        for (int x : e_)
            if (x < 0) fail(ErrorKind::Argument, "negative shift exponent");
    }

    static ExponentVector unit(size_t n, size_t i, int k = 1) {
        ExponentVector e(n);
        e.e_.at(i) = k;
        return e;
    }

    size_t size() const { return e_.size(); }
    int operator[](size_t i) const { return e_.at(i); }
    void set(size_t i, int v) {
        if (v < 0) fail(ErrorKind::Argument, "negative shift exponent");
        e_.at(i) = v;
    }

    int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_zero() const {
        for (int x : e_)
            if (x != 0) return false;
        return true;
    }

    ExponentVector operator+(const ExponentVector& o) const {
        check(o);
        ExponentVector r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    // Componentwise subtraction; defined only when the result stays >= 0.
    std::optional<ExponentVector> minus(const ExponentVector& o) const {
        check(o);
        ExponentVector r = *this;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) return std::nullopt;
        }
        return r;
    }

    bool leq(const ExponentVector& o) const {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    static ExponentVector max(const ExponentVector& a, const ExponentVector& b) {
        a.check(b);
        ExponentVector r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }

    bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
    bool operator!=(const ExponentVector& o) const { return !(*this == o); }
    // Structural (ranking-independent) order for canonical containers.
    bool operator<(const ExponentVector& o) const { return e_ < o.e_; }

    const std::vector<int>& raw() const { return e_; }

    std::string str() const {
        std::ostringstream out;
        out << "(";
        for (size_t i = 0; i < e_.size(); ++i) out << (i ? "," : "") << e_[i];
        out << ")";
        return out.str();
    }

private:
    void check(const ExponentVector& o) const {
        if (e_.size() != o.e_.size()) fail(ErrorKind::Signature, "shift arity mismatch");
    }

    std::vector<int> e_;
};

struct Term {
    int func = 0;
    ExponentVector shift;

    Term() = default;
    Term(int f, ExponentVector s) : func(f), shift(std::move(s)) {}

    bool operator==(const Term& o) const { return func == o.func && shift == o.shift; }
    bool operator!=(const Term& o) const { return !(*this == o); }
    // Structural order (function, then exponents); independent of rankings.
    bool operator<(const Term& o) const {
        if (func != o.func) return func < o.func;
        return shift < o.shift;
    }
};

// If dividend = theta^gamma applied to divisor, returns gamma.
inline std::optional<ExponentVector> term_divides(const Term& divisor, const Term& dividend) {
    if (divisor.func != dividend.func) return std::nullopt;
    return dividend.shift.minus(divisor.shift);
}

inline Term shift_term(const Term& t, const ExponentVector& beta) { return Term(t.func, t.shift + beta); }

enum class MonomialOrder { DegRevLex, Lex };
enum class Priority { TermOverPosition, PositionOverTerm };

class Ranking {
public:
    Ranking(MonomialOrder order, Priority priority, std::vector<int> function_order, std::vector<int> index_order)
        : order_(order),
          priority_(priority),
          function_order_(std::move(function_order)),
          index_order_(std::move(index_order)) {
        validate_permutation(function_order_, "function_order");
        validate_permutation(index_order_, "index_order");
        func_rank_.assign(function_order_.size(), 0);
        for (size_t r = 0; r < function_order_.size(); ++r) func_rank_[function_order_[r]] = static_cast<int>(r);
    }

    // Natural orders: functions and indices ranked in signature order.
    static Ranking standard(const RingSignature& sig, MonomialOrder order = MonomialOrder::DegRevLex,
                            Priority priority = Priority::TermOverPosition) {
        std::vector<int> fo(sig.num_functions()), io(sig.num_indices());
        for (size_t i = 0; i < fo.size(); ++i) fo[i] = static_cast<int>(i);
        for (size_t i = 0; i < io.size(); ++i) io[i] = static_cast<int>(i);
        return Ranking(order, priority, std::move(fo), std::move(io));
    }

    MonomialOrder order() const { return order_; }
    Priority priority() const { return priority_; }
    const std::vector<int>& function_order() const { return function_order_; }
    const std::vector<int>& index_order() const { return index_order_; }
    size_t num_indices() const { return index_order_.size(); }
    size_t num_functions() const { return function_order_.size(); }

    // +1 if a is ranked above b, -1 below, 0 equal.
    int compare_shifts(const ExponentVector& a, const ExponentVector& b) const {
        if (a.size() != index_order_.size() || b.size() != index_order_.size())
            fail(ErrorKind::Signature, "shift arity does not match ranking");
        if (order_ == MonomialOrder::DegRevLex) {
            int da = a.total(), db = b.total();
            if (da != db) return da > db ? 1 : -1;
            // Reverse lexicographic tie-break: scan from the least
            // significant coordinate; smaller exponent there ranks higher.
            for (size_t i = index_order_.size(); i-- > 0;) {
                int c = index_order_[i];
                if (a[c] != b[c]) return a[c] < b[c] ? 1 : -1;
            }
            return 0;
        }
        for (int c : index_order_)
            if (a[c] != b[c]) return a[c] > b[c] ? 1 : -1;
        return 0;
    }

    int compare(const Term& a, const Term& b) const {
        if (priority_ == Priority::PositionOverTerm) {
            if (a.func != b.func) return func_rank_.at(a.func) < func_rank_.at(b.func) ? 1 : -1;
            return compare_shifts(a.shift, b.shift);
        }
        int c = compare_shifts(a.shift, b.shift);
        if (c != 0) return c;
        if (a.func != b.func) return func_rank_.at(a.func) < func_rank_.at(b.func) ? 1 : -1;
        return 0;
    }

    bool greater(const Term& a, const Term& b) const { return compare(a, b) > 0; }

private:
    static void validate_permutation(const std::vector<int>& p, const char* what) {
        if (p.empty()) fail(ErrorKind::Argument, std::string(what) + " must not be empty");
        std::vector<bool> seen(p.size(), false);
        for (int x : p) {
            if (x < 0 || static_cast<size_t>(x) >= p.size() || seen[x])
                fail(ErrorKind::Argument, std::string(what) + " is not a permutation");
            seen[x] = true;
        }
    }

    MonomialOrder order_;
    Priority priority_;
    std::vector<int> function_order_;
    std::vector<int> index_order_;
    std::vector<int> func_rank_;
};

inline int compare_terms(const Term& a, const Term& b, const Ranking& r) { return r.compare(a, b); }

}  // namespace diffalg

#endif
