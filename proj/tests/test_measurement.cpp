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

#include "cqec/measurement.hpp"

#include <doctest.h>

#include <random>

#include "cqec/graph.hpp"
#include "cqec/statevector.hpp"

using namespace cqec;

namespace {

PauliOperator P(const std::string &s, size_t n) {
    return PauliOperator::parse(s, n);
}

GeneratorSet chain3() {
    return cluster_stabilizers(Graph::from_edges(3, {{1, 2}, {2, 3}}));
}

}  // namespace

TEST_CASE("measure: X on the middle chain qubit") {
    for (int s : {0, 1}) {
        BitSource bits(0);
        auto [set, rec] = measure(chain3(), {2, 'X', s}, bits);
        CHECK(rec.outcome == s);
        CHECK(!rec.deterministic);
        CHECK(set.size() == 3);
        // group generated by {(-1)^s Z1Z3, X1X3, (-1)^s X2}
        uint8_t ph = s ? 2 : 0;
        auto expect = GeneratorSet(
            3, {P("ZIZ", 3).with_phase(ph), P("XIX", 3), P("IXI", 3).with_phase(ph)});
        CHECK(group_equal(set, expect));
    }
}

TEST_CASE("measure: Z on the first chain qubit") {
    for (int s : {0, 1}) {
        BitSource bits(0);
        auto [set, rec] = measure(chain3(), {1, 'Z', s}, bits);
        CHECK(!rec.deterministic);
        uint8_t ph = s ? 2 : 0;
        auto expect = GeneratorSet(
            3, {P("IXZ", 3).with_phase(ph), P("IZX", 3), P("ZII", 3).with_phase(ph)});
        CHECK(group_equal(set, expect));
    }
}

TEST_CASE("measure: remeasuring an eigenstate is deterministic") {
    BitSource bits(0);
    auto single = GeneratorSet(1, {P("+Z", 1)});
    auto [set, rec] = measure(single, {1, 'Z', std::nullopt}, bits);
    CHECK(rec.deterministic);
    CHECK(rec.outcome == 0);
    CHECK(group_equal(set, single));

    auto negative = GeneratorSet(1, {P("-Z", 1)});
    auto [set2, rec2] = measure(negative, {1, 'Z', std::nullopt}, bits);
    CHECK(rec2.deterministic);
    CHECK(rec2.outcome == 1);
    CHECK(group_equal(set2, negative));
}

TEST_CASE("measure: forcing against a fixed outcome is a contradiction") {
    BitSource bits(0);
    auto single = GeneratorSet(1, {P("+Z", 1)});
    CHECK_THROWS_AS(measure(single, {1, 'Z', 1}, bits), ContradictionError);
    CHECK_NOTHROW(measure(single, {1, 'Z', 0}, bits));
    CHECK_THROWS_AS(measure(single, {2, 'Z', std::nullopt}, bits), ValidationError);
}

TEST_CASE("measure: post-conditions hold for random clusters (property)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 2 + rng() % 7;
        Graph g(n);
        for (size_t i = 1; i <= n; ++i) {
            for (size_t j = i + 1; j <= n; ++j) {
                if (rng() & 1u) {
                    g.add_edge(i, j);
                }
            }
        }
        auto set = cluster_stabilizers(g);
        MeasurementSpec spec{1 + rng() % n, "XYZ"[rng() % 3], std::nullopt};
        BitSource bits(rng());
        auto [after, rec] = measure(set, spec, bits);
        // generator count, independence, commutation preserved
        CHECK(after.size() == set.size());
        CHECK_NOTHROW(GeneratorSet(n, after.generators()));
        // every generator commutes with the observable and the signed
        // observable is a group element
        auto m = PauliOperator::single(n, spec.qubit, spec.basis);
        for (const auto &gen : after) {
            CHECK(gen.commutes_with(m));
        }
        CHECK(after.contains(m.with_phase(rec.outcome ? 2 : 0)));
        // determinism split: deterministic iff observable in unsigned group
        CHECK(rec.deterministic == set.contains_unsigned(m));
        if (rec.deterministic) {
            CHECK(group_equal(after, set));
        }
    }
}

TEST_CASE("measure: sampled outcomes are fair") {
    BitSource bits(2026);
    int ones = 0;
    const int kSamples = 1000;
    for (int i = 0; i < kSamples; ++i) {
        auto [set, rec] = measure(chain3(), {2, 'X', std::nullopt}, bits);
        ones += rec.outcome;
    }
    // binomial(1000, 1/2): sd ~ 15.8; allow 5 sd
    CHECK(ones > 421);
    CHECK(ones < 579);
}

TEST_CASE("measure: both outcomes reachable when random") {
    bool seen[2] = {false, false};
    for (uint64_t seed = 0; seed < 16; ++seed) {
        BitSource bits(seed);
        auto [set, rec] = measure(chain3(), {2, 'X', std::nullopt}, bits);
        seen[rec.outcome] = true;
    }
    CHECK(seen[0]);
    CHECK(seen[1]);
}

TEST_CASE("measure: underdetermined set grows by the observable") {
    BitSource bits(5);
    auto set = GeneratorSet(2, {P("+ZZ", 2)});
    auto [after, rec] = measure(set, {1, 'Z', 0}, bits);
    CHECK(!rec.deterministic);
    CHECK(after.size() == 2);
    CHECK(after.contains(P("+ZI", 2)));
}

TEST_CASE("measure: oracle agreement up to the oracle's size cap") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 9 + rng() % 2;  // 9..10
        Graph g(n);
        for (size_t v = 2; v <= n; ++v) {
            g.add_edge(v, 1 + rng() % (v - 1));
        }
        auto set = cluster_stabilizers(g);
        auto sv = prepare_cluster(g);
        for (int step = 0; step < 3; ++step) {
            MeasurementSpec spec{1 + rng() % n, "XYZ"[rng() % 3], std::nullopt};
            BitSource bits(rng());
            auto [after, rec] = measure(set, spec, bits);
            auto proj = measure_pauli(sv, spec.basis, spec.qubit, rec.outcome);
            CHECK(rec.deterministic == (proj.probability > 1.0 - 1e-9));
            for (const auto &gen : after) {
                CHECK(is_stabilized(proj.state, gen));
            }
            set = after;
            sv = proj.state;
        }
    }
}

TEST_CASE("pivot choice does not change the group") {
    auto set = cluster_stabilizers(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
    MeasurementSpec spec{2, 'X', 0};
    auto pivots = anticommuting_indices(set, spec);
    REQUIRE(pivots.size() >= 2);
    BitSource bits(0);
    auto [wanted, rec] = measure(set, spec, bits);
    for (size_t piv : pivots) {
        BitSource b2(0);
        auto [alt, rec2] = measure(set, spec, b2, piv);
        CHECK(group_equal(alt, wanted));
    }
    CHECK_THROWS_AS(measure(set, spec, bits, size_t{1}), ValidationError);  // gen 2 commutes
}

TEST_CASE("discard: fused Bell pair after an X measurement") {
    for (int s : {0, 1}) {
        BitSource bits(0);
        auto [set, rec] = measure(chain3(), {2, 'X', s}, bits);
        auto res = discard_qubit(set, 2);
        CHECK(res.set.num_qubits() == 2);
        CHECK(res.new_label == std::vector<size_t>{1, 0, 2});
        uint8_t ph = s ? 2 : 0;
        auto expect = GeneratorSet(2, {P("ZZ", 2).with_phase(ph), P("XX", 2)});
        CHECK(group_equal(res.set, expect));
    }
}

TEST_CASE("discard: cut qubit after a Z measurement") {
    for (int s : {0, 1}) {
        BitSource bits(0);
        auto [set, rec] = measure(chain3(), {1, 'Z', s}, bits);
        auto res = discard_qubit(set, 1);
        CHECK(res.set.num_qubits() == 2);
        CHECK(res.new_label == std::vector<size_t>{0, 1, 2});
        uint8_t ph = s ? 2 : 0;
        auto expect = GeneratorSet(2, {P("XZ", 2).with_phase(ph), P("ZX", 2)});
        CHECK(group_equal(res.set, expect));
    }
}

TEST_CASE("discard: single qubit to empty set") {
    auto res = discard_qubit(GeneratorSet(1, {P("+X", 1)}), 1);
    CHECK(res.set.num_qubits() == 0);
    CHECK(res.set.empty());
}

TEST_CASE("discard: entangled qubit is a state error") {
    CHECK_THROWS_AS(discard_qubit(chain3(), 2), StateError);
    auto bell = GeneratorSet(2, {P("XX", 2), P("ZZ", 2)});
    CHECK_THROWS_AS(discard_qubit(bell, 1), StateError);
    CHECK_THROWS_AS(discard_qubit(GeneratorSet(2, {P("+ZZ", 2)}), 1), StateError);
    CHECK_THROWS_AS(discard_qubit(bell, 3), ValidationError);
}

TEST_CASE("discard: handles presentations without an explicit single-qubit row") {
    // group contains Z1 but presents it only as a product
    auto set = GeneratorSet(2, {P("ZZ", 2), P("IZ", 2)});
    auto res = discard_qubit(set, 1);
    CHECK(res.set.num_qubits() == 1);
    CHECK(group_equal(res.set, GeneratorSet(1, {P("+Z", 1)})));
}

TEST_CASE("correction_frame: identity when signs match") {
    auto s = GeneratorSet(2, {P("+ZZ", 2), P("+XX", 2)});
    CHECK(correction_frame(s, s).is_identity());
}

TEST_CASE("correction_frame: flips only the Z-type sign") {
    auto broken = GeneratorSet(2, {P("-ZZ", 2), P("+XX", 2)});
    auto target = GeneratorSet(2, {P("+ZZ", 2), P("+XX", 2)});
    auto frame = correction_frame(broken, target);
    CHECK(frame.weight() == 1);
    CHECK(frame.str() == "+IX");  // X1 also works; lexicographic tie-break picks X2
    CHECK(group_equal(broken.conjugated_by(frame), target));
}

TEST_CASE("correction_frame: different row spaces rejected") {
    auto a = GeneratorSet(2, {P("+ZZ", 2)});
    auto b = GeneratorSet(2, {P("+XZ", 2)});
    CHECK_THROWS_AS(correction_frame(a, b), FrameError);
    auto c = GeneratorSet(2, {P("+ZZ", 2), P("+XX", 2)});
    CHECK_THROWS_AS(correction_frame(a, c), FrameError);
}

TEST_CASE("correction_frame: random sign patterns are always fixable (property)") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 2 + rng() % 6;
        Graph g(n);
        for (size_t i = 1; i <= n; ++i) {
            for (size_t j = i + 1; j <= n; ++j) {
                if (rng() & 1u) {
                    g.add_edge(i, j);
                }
            }
        }
        auto set = cluster_stabilizers(g);
        std::vector<PauliOperator> flipped;
        for (const auto &gen : set) {
            flipped.push_back(rng() & 1u ? gen.with_phase((gen.phase() + 2) & 3) : gen);
        }
        auto target = GeneratorSet::unchecked(n, flipped);
        auto frame = correction_frame(set, target);
        CHECK(group_equal(set.conjugated_by(frame), target));
    }
}

TEST_CASE("evolve_sequence: empty script echoes the input") {
    BitSource bits(0);
    auto [set, recs] = evolve_sequence(chain3(), {}, bits);
    CHECK(recs.empty());
    CHECK(group_equal(set, chain3()));
}

TEST_CASE("evolve_sequence: X then X on a 4-chain fuses to a Bell-type group") {
    auto chain4 = cluster_stabilizers(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}));
    for (int s2 : {0, 1}) {
        for (int s3 : {0, 1}) {
            BitSource bits(0);
            auto [set, recs] =
                evolve_sequence(chain4, {{2, 'X', s2}, {3, 'X', s3}}, bits);
            REQUIRE(recs.size() == 2);
            auto r1 = discard_qubit(set, 3);
            auto r2 = discard_qubit(r1.set, 2);
            CHECK(r2.set.num_qubits() == 2);
            // Bell-type group: both generators have weight 2 and entangle 1-4
            CHECK(symplectic_rank(r2.set.generators()) == 2);
            for (const auto &gen : r2.set) {
                CHECK(gen.weight() == 2);
            }
        }
    }
}

TEST_CASE("evolve_sequence: Z on both ends isolates the middle") {
    for (int s1 : {0, 1}) {
        for (int s3 : {0, 1}) {
            BitSource bits(0);
            auto [set, recs] = evolve_sequence(chain3(), {{1, 'Z', s1}, {3, 'Z', s3}}, bits);
            auto r1 = discard_qubit(set, 3);
            auto r2 = discard_qubit(r1.set, 1);
            REQUIRE(r2.set.size() == 1);
            CHECK(r2.set[0].weight() == 1);
            CHECK(r2.set[0].letter(0) == 'X');  // +-X stabilizes the survivor
        }
    }
}

TEST_CASE("evolve_sequence: repeated qubits rejected") {
    BitSource bits(0);
    CHECK_THROWS_AS(evolve_sequence(chain3(), {{1, 'Z', 0}, {1, 'X', 0}}, bits),
                    ValidationError);
}

TEST_CASE("measurement script parsing") {
    auto specs = parse_measurement_script("2 X\n# comment\n1 Z 1\n\n3 Y 0\n");
    REQUIRE(specs.size() == 3);
    CHECK(specs[0].qubit == 2);
    CHECK(specs[0].basis == 'X');
    CHECK(!specs[0].forced_outcome);
    CHECK(specs[1].forced_outcome == 1);
    CHECK(specs[2].basis == 'Y');
    CHECK_THROWS_AS(parse_measurement_script("1 Q\n"), ParseError);
    CHECK_THROWS_AS(parse_measurement_script("1 X 2\n"), ParseError);
}

TEST_CASE("measurement record json") {
    MeasurementRecord rec{2, 'X', 1, false};
    CHECK(rec.to_json() == "{\"qubit\":2,\"basis\":\"X\",\"s\":1,\"deterministic\":false}");
}
