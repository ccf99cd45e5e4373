#pragma once

#include <string>

#include "mirror.hpp"
#include "oracle.hpp"

namespace hms {

// Tolerance, term cap and seed shared by every command.
struct RunConfig {
    double tolerance = 1e-8;
    long max_terms = 100000;
    long min_window = 8;
    unsigned long seed = 1;

    void validate() const;
    SeriesLimits limits() const { return SeriesLimits{max_terms, min_window, false}; }
};

// {"k": int, "tau": {"re","im"}, "cbar": {...}, "c": [...]}; throws
// errc::invalid_argument with a parse message on malformed input.
KaehlerClass parse_kaehler_class(const std::string& text);

// Canonical serializers: keys sorted, numbers in fixed 17-significant-digit
// form, so identical inputs give byte-identical documents.
std::string verify_to_json(const KaehlerClass& kc, const RunConfig& cfg);
std::string tables_to_json(const KaehlerClass& kc, const std::string& side, const RunConfig& cfg);
std::string monodromy_to_json();
std::string oracle_to_json(int k, const RunConfig& cfg);
std::string degeneracy_to_json(const KaehlerClass& kc, const RunConfig& cfg);

std::string certificate_to_json(const Certificate& cert);

}  // namespace hms
