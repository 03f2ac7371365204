// division.hpp
//
// The restricted-divisibility machinery. For a finite set of leading terms
// the shifts of each element are partitioned coordinate by coordinate (in
// the ranking's index order); within a group, an element that is not
// degree-maximal in the current coordinate acquires a "difference power":
// the minimal positive degree gap to a groupmate. Admissible shifts for an
// element are exactly those below all of its difference powers, so the
// cones of distinct elements never overlap and reducers are unique.
//
// Classical Janet division is the special case where every positive gap
// collapses to a power of one (a non-multiplicative coordinate admits no
// shift at all).

#ifndef DIFFALG_DIVISION_HPP
#define DIFFALG_DIVISION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/term.hpp"

namespace diffalg {

enum class DivisionKind { Janet, JanetLike };

struct DifferencePower {
    int coord = 0;  // index coordinate
    int power = 0;  // theta_coord^power is the prolongation step

    bool operator==(const DifferencePower& o) const { return coord == o.coord && power == o.power; }
};

struct DivisionMeta {
    // powers[i] = difference powers of element i, sorted by coordinate.
    std::vector<std::vector<DifferencePower>> powers;
};

namespace detail {

inline void partition_groups(const std::vector<Term>& lms, const std::vector<int>& coord_order, DivisionKind kind,
                             std::vector<size_t> group, size_t depth, DivisionMeta& meta) {
    if (group.size() <= 1 || depth == coord_order.size()) return;
    int c = coord_order[depth];
    std::map<int, std::vector<size_t>> by_degree;
    for (size_t id : group) by_degree[lms[id].shift[c]].push_back(id);
    // Distinct degrees ascending; a member below the maximum gets the gap to
    // the next larger degree as its difference power at this coordinate.
    for (auto it = by_degree.begin(); it != by_degree.end(); ++it) {
        auto next = std::next(it);
        if (next != by_degree.end()) {
            int gap = kind == DivisionKind::Janet ? 1 : next->first - it->first;
            for (size_t id : it->second) meta.powers[id].push_back({c, gap});
        }
        partition_groups(lms, coord_order, kind, it->second, depth + 1, meta);
    }
}

}  // namespace detail

// Difference powers for every element of lms (pairwise distinct terms).
inline DivisionMeta compute_division_meta(const std::vector<Term>& lms, const Ranking& r, DivisionKind kind) {
    DivisionMeta meta;
    meta.powers.assign(lms.size(), {});
    std::map<int, std::vector<size_t>> by_func;
    for (size_t i = 0; i < lms.size(); ++i) {
        for (size_t j = i + 1; j < lms.size(); ++j)
            if (lms[i] == lms[j]) fail(ErrorKind::Internal, "duplicate leading terms in division meta");
        by_func[lms[i].func].push_back(i);
    }
    for (auto& [f, group] : by_func) detail::partition_groups(lms, r.index_order(), kind, group, 0, meta);
    return meta;
}

// Trie over (function, shift degrees in index order). Lookup walks one path:
// at each level take the largest child key not exceeding the query degree;
// sibling keys encode the difference powers, so the element found (if any)
// is the unique restricted divisor.
class JanetTree {
public:
    JanetTree() = default;
    JanetTree(size_t num_functions, std::vector<int> coord_order)
        : coord_order_(std::move(coord_order)), roots_(num_functions) {}

    void clear() {
        for (auto& r : roots_) r = Node{};
        size_ = 0;
    }

    size_t size() const { return size_; }

    void insert(const Term& lm, size_t id) {
        Node* node = &roots_.at(lm.func);
        for (int c : coord_order_) node = &node->kids[lm.shift[c]];
        if (node->elem >= 0) fail(ErrorKind::Internal, "duplicate leading term in tree");
        node->elem = static_cast<long>(id);
        ++size_;
    }

    void remove(const Term& lm) {
        if (!remove_rec(roots_.at(lm.func), lm, 0)) fail(ErrorKind::Internal, "leading term not present in tree");
        --size_;
    }

    // The unique restricted divisor of t, with the admissible shift gamma.
    std::optional<std::pair<size_t, ExponentVector>> lookup(const Term& t, DivisionKind kind) const {
        const Node* node = &roots_.at(t.func);
        ExponentVector gamma(coord_order_.size());
        for (int c : coord_order_) {
            int degree = t.shift[c];
            auto it = node->kids.upper_bound(degree);
            if (it == node->kids.begin()) return std::nullopt;
            --it;  // largest key <= degree
            if (kind == DivisionKind::Janet) {
                // Non-maximal keys admit no shift at all.
                bool is_max = std::next(it) == node->kids.end();
                if (!is_max && it->first != degree) return std::nullopt;
            }
            gamma.set(c, degree - it->first);
            node = &it->second;
        }
        if (node->elem < 0) fail(ErrorKind::Internal, "malformed division tree");
        return std::make_pair(static_cast<size_t>(node->elem), gamma);
    }

private:
    struct Node {
        std::map<int, Node> kids;
        long elem = -1;
    };

    bool remove_rec(Node& node, const Term& lm, size_t depth) {
        if (depth == coord_order_.size()) {
            if (node.elem < 0) return false;
            node.elem = -1;
            return true;
        }
        auto it = node.kids.find(lm.shift[coord_order_[depth]]);
        if (it == node.kids.end()) return false;
        if (!remove_rec(it->second, lm, depth + 1)) return false;
        if (it->second.kids.empty() && it->second.elem < 0) node.kids.erase(it);
        return true;
    }

    std::vector<int> coord_order_;
    std::vector<Node> roots_;
    size_t size_ = 0;
};

}  // namespace diffalg

#endif
