#pragma once

#include <utility>

#include "testgen/random.hpp"
#include "testgen/testcase/chromosome.hpp"
#include "testgen/testcase/factory.hpp"

namespace testgen::testcase {

enum class MutationKind { Insert, Remove, Change };

struct MutationConfig {
    std::int64_t int_delta_max = 10;
    double float_delta_max = 10.0;
    int max_attempts = 10;  // redraws until the test actually changes
};

// One randomly chosen operator (1/3 each); retried until the test differs
// from the input or the attempts run out. Assertions are dropped.
[[nodiscard]] TestCase mutate(const TestCase& test, const TestFactory& factory, Rng& rng,
                              const MutationConfig& config = {});

// Single operator application; returns false if it had no effect.
bool apply_mutation(TestCase& test, MutationKind kind, const TestFactory& factory, Rng& rng,
                    const MutationConfig& config = {});

// Single-point crossover on test cases: a's prefix followed by b's suffix
// together with the statements of b that suffix depends on. Children that
// would exceed `max_length` are replaced by copies of their first parent.
[[nodiscard]] std::pair<TestCase, TestCase> crossover(const TestCase& a, const TestCase& b, Rng& rng,
                                                      std::size_t max_length = kDefaultMaxLength);

// Suite crossover: one cut c in [0, min(|a|, |b|)], tails exchanged.
[[nodiscard]] std::pair<TestSuiteChromosome, TestSuiteChromosome>
crossover(const TestSuiteChromosome& a, const TestSuiteChromosome& b, Rng& rng);

// Deterministic core of the suite crossover.
[[nodiscard]] std::pair<TestSuiteChromosome, TestSuiteChromosome>
crossover_at(const TestSuiteChromosome& a, const TestSuiteChromosome& b, std::size_t cut);

}  // namespace testgen::testcase
