#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "testgen/analysis/cluster.hpp"
#include "testgen/random.hpp"
#include "testgen/testcase/test_case.hpp"

namespace testgen::testcase {

struct FactoryConfig {
    double reuse_probability = 0.5;
    int max_recursion = 10;
    std::int64_t int_min = -100;
    std::int64_t int_max = 100;
    double float_min = -100.0;
    double float_max = 100.0;
    double boundary_probability = 0.1;  // draw from {0, 1, -1} instead
    std::size_t max_string_length = 10;
    std::size_t max_list_length = 3;
    std::size_t max_length = kDefaultMaxLength;
};

// Builds statements backwards from a target call: every parameter is either
// an existing variable of a fitting type or freshly constructed, recursively.
class TestFactory {
public:
    TestFactory(const analysis::TestCluster& cluster, FactoryConfig config = {});

    // Inserts a call to `callable` together with the statements producing
    // its arguments before position `position`; later references are shifted.
    // Leaves `test` unchanged and returns false if the result would exceed the
    // length cap.
    bool insert_call(TestCase& test, std::size_t callable, std::size_t position, Rng& rng) const;

    // Appends a call to `callable` with its argument fragment.
    bool append_call(TestCase& test, std::size_t callable, Rng& rng) const;

    // A uniformly chosen callable of the module under test plus its arguments.
    // Empty if even the smallest attempt would not fit the length cap.
    [[nodiscard]] TestCase sample_random_test_case(Rng& rng) const;

    [[nodiscard]] PrimitiveValue random_primitive(const std::string& type, Rng& rng) const;
    [[nodiscard]] std::int64_t random_int(Rng& rng) const;
    [[nodiscard]] double random_float(Rng& rng) const;
    [[nodiscard]] std::string random_string(Rng& rng) const;

    [[nodiscard]] const analysis::TestCluster& cluster() const { return cluster_; }
    [[nodiscard]] const FactoryConfig& config() const { return config_; }

private:
    class Fragment;

    const analysis::TestCluster& cluster_;
    FactoryConfig config_;
};

}  // namespace testgen::testcase
