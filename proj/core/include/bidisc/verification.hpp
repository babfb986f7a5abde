#pragma once

// The acceptance suite over a corpus directory:
//
//   <corpus>/maps.json       [{"name", "f1", "f2"}]
//   <corpus>/geodesics.json  [{"name", "g", "orientation", "base"}]
//   <corpus>/scenarios/*.json

#include "bidisc/dynamics.hpp"
#include "bidisc/scenario.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace bidisc {

struct NamedMap {
    std::string name;
    BidiscMap map;
};

struct NamedGeodesic {
    std::string name;
    GeodesicSpec spec;
    Complex base{1.0, 0.0};

    ComplexGeodesic geodesic() const;
};

struct Corpus {
    std::filesystem::path root;
    std::vector<NamedMap> maps;
    std::vector<NamedGeodesic> geodesics;

    const NamedMap& map(std::string_view name) const;
    const NamedGeodesic& geodesic(std::string_view name) const;
    Scenario scenario(std::string_view name) const;
};

Corpus load_corpus(const std::filesystem::path& root);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Ordered key/value pairs; values are already formatted text.
    std::vector<std::pair<std::string, std::string>> metrics;
    std::string detail;
    double seconds = 0.0; // wall time, kept out of the machine output
    double budget = 0.0;  // seconds, 0 when unbounded
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Multiplies every sample count; 1 runs the full suite.
    double scale = 1.0;
    Tolerances tolerances;
};

struct VerificationReport {
    std::string corpus_name;
    VerifyOptions options;
    std::vector<CriterionResult> criteria;

    bool pass() const;
};

using CriterionFn = CriterionResult (*)(const Corpus&, const VerifyOptions&);

/// Criteria 1 to 9 in order.
const std::vector<std::pair<int, CriterionFn>>& criteria_table();

VerificationReport run_verification(const Corpus& corpus, const VerifyOptions& options, const std::vector<int>& only = {});

/// One JSON record per line: a header carrying the version, seed and
/// tolerances, then one record per criterion.
std::string machine_output(const VerificationReport& report);
/// Fixed-width pass/fail table including runtimes.
std::string human_output(const VerificationReport& report);

} // namespace bidisc
