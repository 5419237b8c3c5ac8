#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

/// Grow-only cache of a sequence defined by a full-history recurrence.
///
/// `next(n, prefix)` computes term n from terms 0..n-1. Access is serialized
/// by a mutex; callers always receive copies.
class MemoTable {
public:
    using Step = std::function<Rational(std::size_t, std::span<const Rational>)>;

    explicit MemoTable(Step next) : next_(std::move(next)) {}

    Rational at(std::size_t n) {
        std::lock_guard lock(mutex_);
        grow(n);
        return values_[n];
    }

    std::vector<Rational> prefix(std::size_t n) {
        std::lock_guard lock(mutex_);
        grow(n);
        return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
    }

    /// Number of cached terms.
    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return values_.size();
    }

private:
    void grow(std::size_t n) {
        values_.reserve(n + 1);
        while (values_.size() <= n) values_.push_back(next_(values_.size(), values_));
    }

    Step next_;
    mutable std::mutex mutex_;
    std::vector<Rational> values_;
};

}  // namespace eulersum
