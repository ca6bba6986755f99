#pragma once

#include <atomic>

#include "cfgspace/errors.hpp"

namespace cfgspace {

/// Cooperative cancellation handle. Long-running loops poll it between
/// outer iterations; a default-constructed token never cancels.
class CancelToken {
public:
    CancelToken() = default;
    explicit CancelToken(const std::atomic_bool* flag) : flag_(flag) {}

    bool cancelled() const { return flag_ != nullptr && flag_->load(std::memory_order_relaxed); }

    void poll() const {
        if (cancelled()) throw CancelledError();
    }

private:
    const std::atomic_bool* flag_ = nullptr;
};

} // namespace cfgspace
