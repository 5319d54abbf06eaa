// Acceptance runner: executes every criterion at its stated bounds with
// exact (tolerance-zero) comparisons and prints one PASS/FAIL line per
// criterion.  Exit status is the number of failed criteria.

#include <chrono>
#include <iostream>

#include "dhn/verify.hpp"

using namespace dhn;

namespace {

int failures_total = 0;

void run(int number, const std::string& label, const SuiteReport& report) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = report.ok();
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    (void)dt;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
              << report.checks.size() - static_cast<size_t>(report.failures()) << "/"
              << report.checks.size() << " checks]\n";
    if (!ok) {
        ++failures_total;
        for (const auto& c : report.checks)
            if (!c.pass)
                std::cout << "      failed: " << c.name
                          << (c.detail.empty() ? "" : " :: " + c.detail) << "\n";
    }
}

}  // namespace

int main() {
    HurwitzEngine engine;

    run(1, "cross-method equivalence, d <= 5, r <= 6",
        verify_cross_methods(engine, 5, 6));
    run(2, "one-part consistency, d <= 8, g <= 3 (closed forms to g <= 5)",
        verify_one_part_suite(engine, 8, 3, 5));
    run(3, "worked power-sum examples and the (2,2) family, d <= 11, g <= 2",
        verify_worked_examples(engine, 11, 2));
    run(4, "diagonal closed form, d <= 8, g <= 4", verify_diagonal_suite(engine, 8, 4));
    run(5, "symbol equivalence, closed forms and special values (g <= 3, n <= 4; "
           "families to g <= 4)",
        verify_symbols(3, 4, 4));
    run(6, "string and dilaton equations, g <= 3, n <= 3", verify_string_dilaton(3, 3));
    run(7, "join-cut equation at (5, 6) with initial conditions",
        verify_join_cut_criterion(engine, 5, 6));
    run(8, "Lagrange forms and genus expansion ansatz (D = 6; expansion to g <= 2 at D = 5)",
        verify_ansatz_criterion(engine, 6, 5));
    run(9, "polynomiality: ray battery, chamber grid d <= 8, one-part window",
        verify_polynomiality(engine, 8, 3, 4));
    run(10, "special series against their series-expansion oracles, index <= 12",
        verify_special_series(12));
    run(11, "exp(log) round trip on the series table at (5, 6)",
        verify_roundtrip(engine, 5, 6));

    std::cout << (failures_total == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED") << " ("
              << failures_total << " criteria failed)\n";
    return failures_total;
}
