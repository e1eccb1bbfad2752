#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "csucb/errors.hpp"

namespace csucb {

// A super-arm: nonempty, sorted, duplicate-free set of base-arm indices.
class SuperArm {
public:
    SuperArm() = default;

    // Normalizes (sorts, checks duplicates/range) on construction.
    static SuperArm of(std::vector<int> members, int k) {
        if (members.empty()) {
            throw ValidationError("super-arm must be nonempty");
        }
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 0 || members[i] >= k) {
                throw ValidationError("super-arm index " + std::to_string(members[i]) +
                                      " out of range [0," + std::to_string(k) + ")");
            }
            if (i > 0 && members[i] == members[i - 1]) {
                throw ValidationError("super-arm contains duplicate index " +
                                      std::to_string(members[i]));
            }
        }
        SuperArm s;
        s.members_ = std::move(members);
        return s;
    }

    // Fast path for callers that already hold a sorted unique index list.
    static SuperArm from_sorted_unchecked(std::vector<int> members) {
        SuperArm s;
        s.members_ = std::move(members);
        return s;
    }

    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(int arm) const {
        return std::binary_search(members_.begin(), members_.end(), arm);
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SuperArm& other) const = default;

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(members_[i]);
        }
        out += "}";
        return out;
    }

private:
    std::vector<int> members_;
};

// True when every index of `sub` appears in the sorted vector `sorted_super`.
inline bool is_subset_of(const SuperArm& sub, const std::vector<int>& sorted_super) {
    return std::includes(sorted_super.begin(), sorted_super.end(), sub.begin(), sub.end());
}

// The full availability set {0, ..., k-1}.
inline std::vector<int> all_arms(int k) {
    std::vector<int> arms(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) arms[static_cast<std::size_t>(i)] = i;
    return arms;
}

}  // namespace csucb
