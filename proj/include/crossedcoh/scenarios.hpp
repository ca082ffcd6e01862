#pragma once

#include "crossedcoh/braided.hpp"
#include "crossedcoh/crossed_module.hpp"
#include "crossedcoh/h2.hpp"
#include "crossedcoh/hypercoh.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ccoh {

// Shipped crossed-module fixtures. The quaternion example over the real
// Galois group and its two degenerate companions drive most checks.
CrossedModule build_q8_v4();
Braiding build_q8_v4_braided();
CrossedModule build_one_to_v4();
Braiding build_one_to_v4_braided();
CrossedModule build_z2_to_one();
Braiding build_z2_to_one_braided();
CrossedMorphism inclusion_one_v4();     // (1 -> V4) into (Q8 -> V4)
CrossedMorphism kernel_inclusion_z2();  // (Z2 -> 1) into (Q8 -> V4) via the kernel

struct NamedBraiding {
    std::string name;
    Braiding braiding;
};
std::vector<NamedBraiding> shipped_braided_fixtures();

/// Randomized valid braided crossed modules: central quotients H -> H/N with
/// the commutator pairing, plus abelian pairs with the trivial pairing.
/// Every instance fits the enumeration budget and the exhaustive-check caps.
std::vector<NamedBraiding> random_braided_modules(std::uint64_t seed, std::size_t count);

/// The group-law/differential/induced-structure checks for one braided
/// module. Exhaustive where the instance caps allow, seeded sampling above.
ValidationReport braided_structure_checks(const Braiding& b, std::mt19937_64& rng,
                                          const Budget& budget = {});

/// Neutrality is constant on twist orbits of the coboundary output.
ValidationReport neutrality_orbit_checks(const CrossedModule& cm, const Budget& budget = {});

struct CheckLine {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<CheckLine> checks;
    bool pass() const;
    void add(std::string name, std::string expected, std::string computed);
    void add(std::string name, std::string expected, std::string computed, bool pass);
};

nlohmann::json report_json(const ScenarioReport& r);
std::string report_text(const ScenarioReport& r);

/// Scenario runner. `n` is used by the unitary scenario; `seed` by the
/// randomized sweep.
ScenarioReport run_scenario(const std::string& name, int n, std::uint64_t seed,
                            const Budget& budget = {});

}  // namespace ccoh
