// Copyright 2026 The cmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion is not met. Each criterion aggregates the suite checks whose name
// starts with its two-digit number.

#include "oracles.hpp"

#include <cmzv/cmzv.hpp>

#include <cstdio>
#include <string>
#include <vector>

using namespace cmzv;

namespace
{

const char *const kTitles[10] = {
    "Carlitz tower equals brute-force monic products",
    "Omega functional equation with dropped-factor control",
    "pi-tilde by product formula times Omega(theta) is 1",
    "MZV partial sums equal tuple enumeration",
    "period identity L(H)(theta) = Gamma*zeta with perturbed controls",
    "rigid analytic trivialization with full mutant kill",
    "derived motives share the same Psi",
    "block group closure, inverse and commutator",
    "Psi-tilde components telescope to zero",
    "determinism across runs and worker counts",
};

SuiteOracles oracles()
{
    return {[](const GaloisField &f, unsigned i) { return oracle::carlitz_d_product(f, i); },
            [](const GaloisField &f, std::uint64_t q, const Index &s, unsigned B, std::int64_t prec) {
                return oracle::mzv_enumerated(f, q, s, B, prec);
            }};
}

std::string report_bytes(const std::vector<CheckResult> &results, const SuiteConfig &cfg)
{
    return report_json("suite", cfg.to_json(), results, false).dump(2);
}

} // namespace

int main()
{
    SuiteConfig cfg;
    cfg.workers = 1;
    const auto results = run_suite(cfg, oracles());

    // Whole-report comparison on top of the suite's own determinism check.
    SuiteConfig four = cfg;
    four.workers = 4;
    const std::string bytes1 = report_bytes(results, cfg);
    const std::string bytes4 = report_bytes(run_suite(four, oracles()), four);
    const std::string bytes1b = report_bytes(run_suite(cfg, oracles()), cfg);

    bool all = true;
    for (int k = 1; k <= 10; ++k) {
        char prefix[4];
        std::snprintf(prefix, sizeof prefix, "%02d.", k);
        std::size_t n = 0;
        CheckStatus worst = CheckStatus::pass;
        std::string why;
        for (const auto &r : results) {
            if (r.name.rfind(prefix, 0) != 0) {
                continue;
            }
            ++n;
            if (r.status > worst) {
                worst = r.status;
                why = r.name + ": " + r.detail;
            }
        }
        if (k == 10 && (bytes1 != bytes4 || bytes1 != bytes1b)) {
            worst = std::max(worst, CheckStatus::fail);
            why = bytes1 != bytes4 ? "report bytes differ between 1 and 4 workers"
                                   : "report bytes differ between two runs";
        }
        if (n == 0) {
            worst = CheckStatus::error;
            why = "no checks ran";
        }
        const bool pass = worst == CheckStatus::pass;
        all = all && pass;
        std::printf("criterion %2d: %s  %s (%zu check%s)%s%s\n", k, pass ? "PASS" : "FAIL", kTitles[k - 1], n,
                    n == 1 ? "" : "s", pass ? "" : "; ", pass ? "" : (to_string(worst) + " in " + why).c_str());
    }
    return all ? 0 : 1;
}
