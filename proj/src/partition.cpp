#include "dhn/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dhn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw precondition_error("Partition: parts must be positive");
    std::sort(parts_.rbegin(), parts_.rend());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::parse(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw precondition_error("Partition: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.resize(static_cast<size_t>(parts_[0]));
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<size_t>(j)];
    return Partition(std::move(out));
}

Partition Partition::scaled(int t) const {
    if (t <= 0) throw precondition_error("Partition::scaled: t must be positive");
    std::vector<int> out = parts_;
    for (int& p : out) p *= t;
    return Partition(std::move(out));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(out));
}

PaddedPartition::PaddedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw precondition_error("PaddedPartition: parts must be non-negative");
    std::sort(parts_.rbegin(), parts_.rend());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

namespace {

// Reverse-lexicographic enumeration: first part from largest down.
void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
        acc.push_back(a);
        gen_partitions(remaining - a, a, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw precondition_error("partitions_of: d must be non-negative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(d, d, acc, out);
    if (d == 0) out.assign(1, Partition());
    return out;
}

std::vector<PaddedPartition> padded_partitions(int s, int n) {
    if (s < 0 || n < 1) throw precondition_error("padded_partitions: need s >= 0, n >= 1");
    std::vector<PaddedPartition> out;
    for (const Partition& p : partitions_of(s)) {
        if (p.length() > n) continue;
        std::vector<int> v = p.parts();
        v.resize(static_cast<size_t>(n), 0);
        out.push_back(PaddedPartition(std::move(v)));
    }
    return out;
}

namespace {

template <typename Seq>
Integer aut_of(const Seq& parts) {
    Integer a = 1;
    int run = 1;
    for (size_t i = 1; i <= parts.size(); ++i) {
        if (i < parts.size() && parts[i] == parts[i - 1]) {
            ++run;
        } else {
            a *= factorial(static_cast<unsigned long>(run));
            run = 1;
        }
    }
    return a;
}

}  // namespace

Integer aut_order(const Partition& p) { return aut_of(p.parts()); }
Integer aut_order(const PaddedPartition& p) { return aut_of(p.parts()); }

Integer conjugacy_class_size(const Partition& p) {
    if (p.sum() < 1) throw precondition_error("conjugacy_class_size: |pi| >= 1 required");
    Integer den = aut_order(p);
    for (int part : p.parts()) den *= part;
    return factorial(static_cast<unsigned long>(p.sum())) / den;
}

Integer shifted_power_sum(const Partition& beta, int two_j) {
    if (two_j < 2 || two_j % 2 != 0)
        throw precondition_error("shifted_power_sum: index must be even and positive");
    Integer s = -1;
    for (int b : beta.parts()) s += pow(Integer(b), static_cast<unsigned long>(two_j));
    return s;
}

std::map<int, int> hook_content_counts(const Partition& beta) {
    if (beta.sum() < 1) throw precondition_error("hook_content_counts: |beta| >= 1 required");
    std::map<int, int> c;
    for (auto& [v, n] : beta.multiplicities()) c[v] = n;
    c[1] -= 1;  // inserts 0 first when beta has no 1-parts
    return c;
}

}  // namespace dhn
