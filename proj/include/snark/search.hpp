// Shared verdict/limit types for the exact search engines. Verdicts are
// three-valued: a negative answer is only ever reported after a completed
// exhaustive search; running out of budget yields Timeout, never No.

#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace snark {

enum class Verdict { Yes, No, Timeout };

struct SearchLimits {
    double time_limit_s = 0; // 0 = unlimited
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
    int threads = 1; // parallel kernels use this; 1 = serial reference path
};

class Deadline {
  public:
    explicit Deadline(double seconds)
        : unlimited_(seconds <= 0),
          end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}

    bool expired() const {
        return !unlimited_ && std::chrono::steady_clock::now() >= end_;
    }

  private:
    bool unlimited_;
    std::chrono::steady_clock::time_point end_;
};

} // namespace snark
