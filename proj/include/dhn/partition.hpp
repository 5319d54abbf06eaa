#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dhn/rational.hpp"

namespace dhn {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Immutable value type; equality is structural.
class Partition {
  public:
    Partition() = default;
    /// Accepts parts in any order, sorts them decreasingly.  Throws on
    /// non-positive parts.
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& csv);
    /// Comma-separated decreasing parts, e.g. "8,3"; "" for the empty partition.
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    /// part value -> multiplicity
    std::map<int, int> multiplicities() const;

    Partition conjugate() const;
    Partition scaled(int t) const;
    /// Multiset union with another partition.
    Partition merged(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    long sum_ = 0;
};

/// Partition with trailing zero parts allowed ("theta |-_0 s" in the padded
/// sense): weakly decreasing, fixed declared length.
class PaddedPartition {
  public:
    PaddedPartition() = default;
    explicit PaddedPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long sum() const { return sum_; }

    friend bool operator==(const PaddedPartition&, const PaddedPartition&) = default;
    friend std::strong_ordering operator<=>(const PaddedPartition& a,
                                            const PaddedPartition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    long sum_ = 0;
};

/// All partitions of d in reverse-lexicographic order:
/// (3) > (2,1) > (1,1,1).  d = 0 gives the empty partition.
std::vector<Partition> partitions_of(int d);

/// All weakly decreasing non-negative sequences of length exactly n summing
/// to s, in reverse-lexicographic order.
std::vector<PaddedPartition> padded_partitions(int s, int n);

/// |Aut| = product of factorials of part multiplicities.  For padded
/// partitions zero counts as a part value.
Integer aut_order(const Partition& p);
Integer aut_order(const PaddedPartition& p);

/// |C_pi| = d! / (|Aut pi| * prod parts) in S_d.
Integer conjugacy_class_size(const Partition& p);

/// S_{2j} = -1 + sum_i beta_i^{2j}
Integer shifted_power_sum(const Partition& beta, int two_j);

/// c_1 = N_1 - 1 and c_i = N_i for i >= 2, where N_i is the multiplicity of
/// i in beta.  The key 1 is always present; c_1 may be -1 (beta with no
/// 1-parts), in which case downstream series products use a negative
/// exponent, i.e. division of unit series.
std::map<int, int> hook_content_counts(const Partition& beta);

}  // namespace dhn
