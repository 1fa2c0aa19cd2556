#pragma once

// Internal helpers shared by the sparse term containers.

#include "fmethod/weyl.hpp"

namespace fmethod::detail {

inline void accumulate(Terms& terms, const Exps& key, const GaussScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

inline void accumulate(Terms& terms, Exps&& key, const GaussScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

inline std::string coef_string(const GaussScalar& c) { return "(" + c.to_string() + ")"; }

}  // namespace fmethod::detail
