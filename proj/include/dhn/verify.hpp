#pragma once

#include <string>
#include <vector>

#include "dhn/hurwitz.hpp"

namespace dhn {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure (both sides' values)
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool ok() const;
    int failures() const;
    void add(std::string name, bool pass, std::string detail = "");
};

// Each suite runs one batch of identities at the given bounds; the defaults
// are the acceptance bounds.
SuiteReport verify_cross_methods(HurwitzEngine& e, int d_max = 5, int r_max = 6);
SuiteReport verify_one_part_suite(HurwitzEngine& e, int d_max = 8, int g_max = 3,
                                  int closed_g_max = 5);
SuiteReport verify_worked_examples(HurwitzEngine& e, int d_max = 11, int g_max = 2);
SuiteReport verify_diagonal_suite(HurwitzEngine& e, int d_max = 8, int g_max = 4);
SuiteReport verify_symbols(int g_max = 3, int n_max = 4, int closed_g_max = 4);
SuiteReport verify_string_dilaton(int g_max = 3, int n_max = 3);
SuiteReport verify_join_cut_criterion(HurwitzEngine& e, int d_max = 5, int r_max = 6);
SuiteReport verify_roundtrip(HurwitzEngine& e, int d_max = 5, int r_max = 6);
SuiteReport verify_ansatz_criterion(HurwitzEngine& e, int ansatz_order = 6,
                                    int wittansx_order = 5);
SuiteReport verify_polynomiality(HurwitzEngine& e, int chamber_range = 8,
                                 int onepart_g_max = 3, int onepart_n_max = 4);
SuiteReport verify_special_series(int j_max = 12);

/// All suites at the acceptance bounds, in criterion order.
std::vector<SuiteReport> verify_all(HurwitzEngine& e);

}  // namespace dhn
