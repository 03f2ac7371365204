// signature.hpp
//
// A ring signature names the ambient difference ring: index variables
// (the coordinates acted on by the commuting shifts), unknown functions,
// and shift-invariant parameters. Coefficient-field variables are the
// index variables followed by the parameters.

#ifndef DIFFALG_SIGNATURE_HPP
#define DIFFALG_SIGNATURE_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diffalg/errors.hpp"

namespace diffalg {

class RingSignature {
public:
    RingSignature(std::vector<std::string> indices,
                  std::vector<std::string> functions,
                  std::vector<std::string> parameters = {})
        : indices_(std::move(indices)), functions_(std::move(functions)), parameters_(std::move(parameters)) {
        if (indices_.empty()) fail(ErrorKind::Argument, "signature needs at least one index variable");
        if (functions_.empty()) fail(ErrorKind::Argument, "signature needs at least one function");
        std::set<std::string> seen;
        auto check = [&](const std::string& name) {
            if (name.empty()) fail(ErrorKind::Argument, "empty name in signature");
            if (!seen.insert(name).second) fail(ErrorKind::Argument, "duplicate name in signature: " + name);
        };
        for (const auto& s : indices_) check(s);
        for (const auto& s : functions_) check(s);
        for (const auto& s : parameters_) check(s);
    }

    size_t num_indices() const { return indices_.size(); }
    size_t num_functions() const { return functions_.size(); }
    size_t num_parameters() const { return parameters_.size(); }
    // Variables of the coefficient field: indices first, then parameters.
    size_t num_coeff_vars() const { return indices_.size() + parameters_.size(); }

    const std::string& index_name(size_t i) const { return indices_.at(i); }
    const std::string& function_name(size_t k) const { return functions_.at(k); }
    const std::string& parameter_name(size_t j) const { return parameters_.at(j); }
    const std::string& coeff_var_name(size_t v) const {
        return v < indices_.size() ? indices_[v] : parameters_.at(v - indices_.size());
    }

    const std::vector<std::string>& indices() const { return indices_; }
    const std::vector<std::string>& functions() const { return functions_; }
    const std::vector<std::string>& parameters() const { return parameters_; }

    std::optional<size_t> find_index(const std::string& name) const { return find_in(indices_, name); }
    std::optional<size_t> find_function(const std::string& name) const { return find_in(functions_, name); }
    std::optional<size_t> find_parameter(const std::string& name) const { return find_in(parameters_, name); }

    bool operator==(const RingSignature& o) const {
        return indices_ == o.indices_ && functions_ == o.functions_ && parameters_ == o.parameters_;
    }
    bool operator!=(const RingSignature& o) const { return !(*this == o); }

private:
    static std::optional<size_t> find_in(const std::vector<std::string>& v, const std::string& name) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == name) return i;
        return std::nullopt;
    }

    std::vector<std::string> indices_;
    std::vector<std::string> functions_;
    std::vector<std::string> parameters_;
};

using SigPtr = std::shared_ptr<const RingSignature>;

inline SigPtr make_signature(std::vector<std::string> indices,
                             std::vector<std::string> functions,
                             std::vector<std::string> parameters = {}) {
    return std::make_shared<const RingSignature>(std::move(indices), std::move(functions), std::move(parameters));
}

inline void require_same_signature(const SigPtr& a, const SigPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) fail(ErrorKind::Signature, "operands belong to different ring signatures");
}

}  // namespace diffalg

#endif
