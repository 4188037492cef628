// Copyright 2026 The decohere Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "catch2/catch_amalgamated.hpp"

#include "decohere/properties.hpp"

using namespace decohere;

TEST_CASE("property suite holds for several seeds", "[properties]") {
    for (std::uint64_t seed : {1U, 7U, 2026U}) {
        const auto results = run_property_suite({.max_n = 4, .seed = seed, .cases = 30});
        CHECK(results.size() == 19);
        for (const auto &r : results) {
            INFO(r.name << " worst=" << r.worst << " tol=" << r.tolerance << " seed=" << seed);
            CHECK(r.passed());
            CHECK(r.cases > 0);
        }
    }
}

TEST_CASE("PropertyResult bookkeeping", "[properties]") {
    PropertyResult r{"x", 0.0, 1e-8, false, 0};
    r.observe(1e-9);
    CHECK(r.passed());
    r.observe(NAN);
    CHECK(std::isinf(r.worst));
    CHECK_FALSE(r.passed());
    CHECK(r.cases == 2);

    PropertyResult s{"strict", -INFINITY, 0.0, true, 0};
    s.observe(0.0);
    CHECK_FALSE(s.passed());
}

TEST_CASE("suite rejects bad sizes", "[properties]") {
    CHECK_THROWS_AS(run_property_suite({.max_n = 1}), InvalidArgumentError);
    CHECK_THROWS_AS(run_property_suite({.max_n = 12}), CapacityError);
}
