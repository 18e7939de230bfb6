// Copyright 2026 The cqec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqec/analysis.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace cqec;

namespace {

PauliOperator P(const std::string &s, size_t n) {
    return PauliOperator::parse(s, n);
}

GeneratorSet code51() {
    return GeneratorSet(5, {P("XZZXI", 5), P("IXZZX", 5), P("XIXZZ", 5), P("ZXIXZ", 5)});
}

GeneratorSet code41() {
    return GeneratorSet(4, {P("YZZY", 4), P("YZYZ", 4), P("ZYYZ", 4)});
}

}  // namespace

TEST_CASE("distance_by_columns: [[4,1]] gives d=2, dx=2, dz=4") {
    auto d = distance_by_columns(parity_check_from_stabilizers(code41()));
    CHECK(d.d == 2);
    CHECK(d.dx == 2);
    CHECK(d.dz == 4);
}

TEST_CASE("distance_by_columns: [[5,1]] gives d=3, dx=5, dz=5") {
    auto d = distance_by_columns(parity_check_from_stabilizers(code51()));
    CHECK(d.d == 3);
    CHECK(d.dx == 5);
    CHECK(d.dz == 5);
}

TEST_CASE("distance_by_columns: zero column forces distance 1") {
    auto h = parity_check_from_stabilizers(GeneratorSet(2, {P("XI", 2)}));
    // column 2 of both blocks is zero
    auto d = distance_by_columns(h);
    CHECK(d.d == 1);
    CHECK(d.dx == 1);
    CHECK(d.dz == 1);
}

TEST_CASE("distance_by_columns: refuses oversized column families") {
    GeneratorSet big(8);  // 2n = 16 columns > cap
    CHECK_THROWS_AS(distance_by_columns(parity_check_from_stabilizers(big)), ValidationError);
}

TEST_CASE("distance_brute_force: published values") {
    CHECK(distance_brute_force(code41()) == 2);
    CHECK(distance_brute_force(code51()) == 3);
    CHECK(distance_brute_force(GeneratorSet(1)) == 1);
}

TEST_CASE("distance_brute_force agrees with the minimal logical weight") {
    auto [x4, z4] = logical_operators(code41());
    CHECK(static_cast<int>(std::min(x4.weight(), z4.weight())) == distance_brute_force(code41()));
    auto [x5, z5] = logical_operators(code51());
    CHECK(static_cast<int>(std::min(x5.weight(), z5.weight())) == distance_brute_force(code51()));
}

TEST_CASE("hamming_bound: t=1, k=1 first holds at n=5") {
    CHECK(!hamming_bound(2, 1, 1));
    CHECK(!hamming_bound(3, 1, 1));
    CHECK(!hamming_bound(4, 1, 1));
    CHECK(hamming_bound(5, 1, 1));
    CHECK(hamming_bound(6, 1, 1));
}

TEST_CASE("hamming_bound: trivial and edge cases") {
    CHECK(hamming_bound(3, 3, 0));  // n=k, t=0
    CHECK(hamming_bound(0, 0, 0));
    CHECK_THROWS_AS(hamming_bound(1, 2, 0), ValidationError);
    CHECK_THROWS_AS(hamming_bound(2, 1, -1), ValidationError);
}

TEST_CASE("hamming_bound is monotone in n (property)") {
    // Monotone on the meaningful domain n >= t. (At n=0, t>=1 the vanishing
    // binomials make the sum degenerate to 1 <= 1, which n=1 then breaks.)
    for (int k = 0; k <= 2; ++k) {
        for (int t = 0; t <= 3; ++t) {
            bool prev = false;
            for (int n = std::max(k, t); n <= 20; ++n) {
                bool cur = hamming_bound(n, k, t);
                if (prev) {
                    CHECK(cur);
                }
                prev = cur;
            }
        }
    }
}

TEST_CASE("single_error_report: [[4,1]] detects X but cannot correct it") {
    auto rep = single_error_report(code41());
    CHECK(!rep.x_correctable);
    CHECK(rep.x_detectable);
    CHECK(rep.y_correctable);
    CHECK(rep.z_correctable);
    CHECK(!rep.all_correctable);
    // the X1/X2 syndromes collide
    bool found = false;
    for (const auto &c : rep.collisions) {
        if (c.basis_a == 'X' && c.basis_b == 'X' && c.qubit_a == 1 && c.qubit_b == 2) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("single_error_report: [[5,1]] corrects every single-qubit error") {
    auto rep = single_error_report(code51());
    CHECK(rep.x_correctable);
    CHECK(rep.y_correctable);
    CHECK(rep.z_correctable);
    CHECK(rep.all_correctable);
    CHECK(rep.collisions.empty());
}

TEST_CASE("single_error_report: empty set detects nothing") {
    auto rep = single_error_report(GeneratorSet(3));
    CHECK(!rep.x_detectable);
    CHECK(!rep.y_detectable);
    CHECK(!rep.z_detectable);
    CHECK(!rep.all_correctable);
}

TEST_CASE("syndromes of generators vanish and the map is linear (property)") {
    std::mt19937_64 rng(61);
    auto set = code51();
    auto syndrome = [&](const PauliOperator &e) {
        std::vector<int> s;
        for (const auto &g : set) {
            s.push_back(g.commutes_with(e) ? 0 : 1);
        }
        return s;
    };
    for (const auto &g : set) {
        CHECK(syndrome(g) == std::vector<int>{0, 0, 0, 0});
    }
    for (int trial = 0; trial < 50; ++trial) {
        BitVec x1(5), z1(5), x2(5), z2(5);
        for (size_t q = 0; q < 5; ++q) {
            x1.set(q, rng() & 1u);
            z1.set(q, rng() & 1u);
            x2.set(q, rng() & 1u);
            z2.set(q, rng() & 1u);
        }
        PauliOperator e1(x1, z1, 0), e2(x2, z2, 0);
        auto s1 = syndrome(e1), s2 = syndrome(e2), s12 = syndrome(e1 * e2);
        for (size_t i = 0; i < s1.size(); ++i) {
            CHECK(s12[i] == (s1[i] ^ s2[i]));
        }
    }
}

TEST_CASE("analyze_code: consolidated parameters for the published codes") {
    auto a41 = analyze_code(code41());
    CHECK(a41.params.n == 4);
    CHECK(a41.params.k == 1);
    CHECK(a41.params.d == 2);
    CHECK(a41.params.d_columns == 2);
    CHECK(a41.params.dx == 2);
    CHECK(a41.params.dz == 4);
    CHECK(!a41.params.hamming_t1);
    CHECK(!a41.params.saturates_hamming);

    auto a51 = analyze_code(code51());
    CHECK(a51.params.d == 3);
    CHECK(a51.params.hamming_t1);
    CHECK(a51.params.saturates_hamming);  // 16 * 2 == 2^5: the perfect code

    // trivial [[1,1]]: no checks at all
    auto a1 = analyze_code(GeneratorSet(1));
    CHECK(a1.params.d == 1);
}

TEST_CASE("analysis json matches the documented schema") {
    auto j = nlohmann::json::parse(analyze_code(code51()).to_json());
    CHECK(j["n"] == 5);
    CHECK(j["k"] == 1);
    CHECK(j["d"] == 3);
    CHECK(j["dx"] == 5);
    CHECK(j["dz"] == 5);
    CHECK(j["d_bruteforce"] == 3);
    CHECK(j["hamming_t1"] == true);
    CHECK(j["correctable"]["X"] == true);
    CHECK(j["correctable"]["Y"] == true);
    CHECK(j["correctable"]["Z"] == true);
    CHECK(j["collisions"].is_array());
    CHECK(j["collisions"].empty());
}

TEST_CASE("analysis text report mentions the code parameters") {
    auto text = analyze_code(code41()).to_text();
    CHECK(text.find("[[4,1,2]]") != std::string::npos);
    CHECK(text.find("NOT correctable") != std::string::npos);
}
