#pragma once

#include "spinorqc/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace spinorqc {

struct SuiteOptions {
    int samples = 100;
    std::uint64_t seed = 0;
    Scalar a = Scalar::of_int(1);  // Hamiltonian coefficients
    Scalar b;
    Scalar c;
    int theta_quarter_pi = 1;  // braid angle, in units of pi/4
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    nlohmann::ordered_json report;
};

// Braid generators: Artin relation with its common value, closed forms as
// exponentials, unit norm, group closure of order 48, tensor-power relation,
// basis-state actions, Bell invariance, i-placement equivalences.
SuiteResult run_braid_suite();

// Teleportation identity on random rational inputs plus the correction table.
SuiteResult run_teleport_suite(int samples, std::uint64_t seed);

// Two-site Majorana relations at the given coefficients and braid angle.
// Passes when every relation holds exactly and both oracles agree.
SuiteResult run_majorana_suite(const Scalar& a, const Scalar& b, const Scalar& c,
                               int theta_quarter_pi);

// Supercharge relations. The verdicts record which relations hold; the suite
// passes when the exact and matrix oracles agree on every verdict.
SuiteResult run_susy_suite(const Scalar& a, const Scalar& b, const Scalar& c);

// Involution axioms exactly, norm identities numerically, on random even
// operators.
SuiteResult run_cstar_suite(int samples, std::uint64_t seed);

// Generator-tuple parity rule for n in {1, 2, 3}: 4368 ordered pairs.
SuiteResult run_delta_suite();

// All suites, sorted by name, under one envelope:
//   {"seed": ..., "passed": ..., "suites": [{"name", "passed", "report"}]}
nlohmann::ordered_json run_all_suites(const SuiteOptions& opt);

}  // namespace spinorqc
