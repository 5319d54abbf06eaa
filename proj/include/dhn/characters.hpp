#pragma once

#include <shared_mutex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dhn/partition.hpp"

namespace dhn {

/// Irreducible S_d characters chi^lambda_mu by the Murnaghan-Nakayama
/// border-strip recursion, stripping the largest part of mu first.
/// Values are memoized; concurrent readers are fine, insertions are
/// serialized (duplicate concurrent computation of the same value is
/// harmless, the results are identical).
class CharacterCache {
  public:
    Integer character(const Partition& lambda, const Partition& mu);

    /// Writes all cached entries with |lambda| == d as versioned JSON.
    void save(const std::string& path, int d) const;
    /// Loads entries from a cache file; silently ignores files with a
    /// different version.  Returns the number of entries loaded.
    int load(const std::string& path);

    size_t size() const;

  private:
    Integer compute(const Partition& lambda, const Partition& mu);

    std::map<std::pair<Partition, Partition>, Integer> memo_;
    mutable std::shared_mutex mutex_;
};

/// eta(lambda) = sum_i C(lambda_i, 2) - sum_i C(conj(lambda)_i, 2); the
/// eigenvalue of the transposition class sum on the lambda-isotypic block.
Integer eta(const Partition& lambda);

/// Coefficients (in y) of prod_i (1 - (-y)^i)^{c_i} truncated to degree
/// d - 1; entry k equals chi^{(d-k, 1^k)}_beta.  Negative c_1 is handled by
/// series division.
std::vector<Integer> hook_character_polynomial(const Partition& beta);

}  // namespace dhn
