#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhn/characters.hpp"
#include "dhn/partition.hpp"
#include "dhn/rational.hpp"

namespace dhn {

/// Index of a coefficient in the double Hurwitz generating series:
/// ramification profiles alpha over 0 and beta over infinity, and r simple
/// branch points.  Genus is derived, g = (r - l(alpha) - l(beta) + 2) / 2,
/// and may be negative for disconnected entries.
struct HurwitzKey {
    Partition alpha, beta;
    int r = 0;

    friend bool operator==(const HurwitzKey&, const HurwitzKey&) = default;
    friend std::strong_ordering operator<=>(const HurwitzKey&, const HurwitzKey&) = default;
};

/// r = -2 + 2g + l(alpha) + l(beta); negative means no covers exist.
int r_value(int g, const Partition& alpha, const Partition& beta);

/// Derived genus of a key, or nullopt when r has the wrong parity.
std::optional<int> genus_of(const HurwitzKey& k);

/// Truncated generating series, connected or disconnected: key ->
/// coefficient of p_alpha q_beta u^{l(beta)} t^r, i.e. the Hurwitz number
/// divided by r! |Aut alpha| |Aut beta|.  Closed under its bounds: every
/// in-range key is present, possibly zero.  Tables are frozen after build;
/// set() exists as a build/test hook.
class SeriesTable {
  public:
    SeriesTable(int d_max, int r_max, bool connected);

    int d_max() const { return d_max_; }
    int r_max() const { return r_max_; }
    bool connected() const { return connected_; }

    /// Throws precondition_error outside the bounds.
    const Rational& coefficient(const HurwitzKey& k) const;
    Rational coefficient(const Partition& alpha, const Partition& beta, int r) const;
    void set(const HurwitzKey& k, Rational v);

    /// log / exp under the convolution product of keys (profiles merge,
    /// r adds); the stored normalization makes these plain power series
    /// operations.  log of the disconnected table is the connected one.
    SeriesTable log() const;
    SeriesTable exp() const;

    const std::map<HurwitzKey, Rational>& entries() const { return coeffs_; }

    /// JSON array of {"alpha","beta","r","coeff"} covering every in-range key.
    void export_json(std::ostream& os) const;

    friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

  private:
    SeriesTable multiply(const SeriesTable& o) const;

    int d_max_, r_max_;
    bool connected_;
    std::map<HurwitzKey, Rational> coeffs_;
};

struct JoinCutReport {
    bool ok = false;
    bool equation_ok = false;
    bool initial_conditions_ok = false;
    long keys_checked = 0;
    std::string first_failure;  // empty when ok
};

/// The four routes to H^g_{alpha,beta} plus the join-cut verification.
/// All values follow the convention of the transitive-factorization count:
/// H = |Aut alpha| |Aut beta| / d! times the number of tuples
/// (sigma, tau_1..tau_r, gamma); divide by |Aut alpha| |Aut beta| for the
/// unlabelled variant (aut_divided flag on compute paths that expose it).
class HurwitzEngine {
  public:
    CharacterCache& characters() { return chars_; }

    void set_work_limit(long long steps) { work_limit_ = steps; }
    void set_brute_degree_limit(int d) { brute_d_limit_ = d; }
    void set_table_bounds(int d_max, int r_max);

    // --- route 1: explicit enumeration of transposition factorizations ---
    Rational brute_force(int g, const Partition& alpha, const Partition& beta,
                         bool connected);

    // --- route 2: character sums and the log transform ---
    /// Possibly-disconnected count via the eta-weighted character sum.
    Rational disconnected_character(const Partition& alpha, const Partition& beta, int r);
    SeriesTable build_series_table(int d_max, int r_max);
    /// Lazily built log of the disconnected table at the configured bounds.
    const SeriesTable& connected_table();
    /// Table-backed connected value; bound error beyond configured bounds.
    Rational connected(int g, const Partition& alpha, const Partition& beta);
    /// Connected value for a single key by inclusion-exclusion over
    /// component splits; no degree bound, preferred for scaled profiles.
    Rational connected_single(int g, const Partition& alpha, const Partition& beta);

    // --- route 3: one-part formulas (alpha = (d)) ---
    /// Evaluates both the sinh-product and the xi/S power-sum form and
    /// checks they agree.
    Rational one_part(int g, const Partition& beta);
    /// Tabulated closed forms for g <= 5.
    Rational one_part_closed(int g, const Partition& beta);
    /// H^g_{(d),(d)} = d^{2g-2} sum of k^{2g} over d centered half-integers.
    Rational diagonal(int g, int d);

    // --- route 4: fixed-shape closed forms ---
    /// Two distinct parts on both sides; orientation is canonicalized
    /// (alpha and beta may be swapped, the count is symmetric).
    Rational two_two(int g, const Partition& alpha, const Partition& beta);
    /// Genus-0 closed form for l(alpha) in {2, 3}.
    Rational genus0_mparts(const Partition& alpha, const Partition& beta);

    JoinCutReport verify_join_cut(int d_max, int r_max);
    static JoinCutReport verify_join_cut_on(const SeriesTable& connected_table);

  private:
    struct Sweep {
        std::vector<long long> connected_counts;     // by index into partitions_of(d)
        std::vector<long long> disconnected_counts;
    };
    const Sweep& brute_sweep(const Partition& beta, int r);

    Rational connected_single_key(const HurwitzKey& k);
    Rational disconnected_key(const HurwitzKey& k);

    CharacterCache chars_;
    long long work_limit_ = 100000000;
    int brute_d_limit_ = 6;
    int table_d_max_ = 6, table_r_max_ = 8;

    std::mutex mutex_;
    std::map<std::pair<Partition, int>, Sweep> sweeps_;
    std::map<HurwitzKey, Rational> disc_memo_;
    std::map<HurwitzKey, Rational> conn_memo_;
    std::optional<SeriesTable> conn_table_;
};

}  // namespace dhn
