#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "spex/cycles.hpp"
#include "spex/spectral.hpp"
#include "spex/verify.hpp"

namespace spex {

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const IntervalWitness& w);
nlohmann::ordered_json to_json(const SpectralResult& r, bool with_vector = false);
/// [{ell, status, certificate?}, ...] for lengths 3..ell_max.
nlohmann::ordered_json to_json(const CycleSpectrum& s);

inline constexpr const char* kMarginCsvHeader = "check_id,params,margin,value,holds";
/// One CSV row per margin; params are embedded as quoted compact JSON.
void write_margin_rows(std::ostream& os, const VerificationReport& r);

}  // namespace spex
