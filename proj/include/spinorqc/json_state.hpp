#pragma once

#include "spinorqc/spinor.hpp"

#include <string>

namespace spinorqc {

// State files use one of two JSON shapes.
//
// Single qubit:
//   {"a1": "1/2", "a2": "0", "a3": "1/2*rt2", "a4": "-2/7"}
// with the state (a1 + i a2)|0> + (a3 + i a4)|1>.
//
// General:
//   {"n": 2, "amps": [["re", "im"], ...]}
// with 2^n amplitude pairs in lexicographic bitstring order, slot 1 the most
// significant bit. Component strings are scalar expressions ("p/q",
// "1/2*rt2", "1/2 + 1/2*rt2") evaluated in exact mode.
//
// Readers throw std::runtime_error on malformed input. n is capped at 10.

QubitAmplitudes read_qubit_json(const std::string& text);

// Accepts both shapes; the a1..a4 form reads as n = 1.
MultiQubitAmplitudes read_state_json(const std::string& text);

std::string qubit_json(const QubitAmplitudes& q);

// n = 1 emits the a1..a4 form.
std::string state_json(const MultiQubitAmplitudes& s);

}  // namespace spinorqc
