#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "su11/core.hpp"
#include "su11/resolutions.hpp"
#include "su11/two_photon.hpp"

namespace su11 {

using Json = nlohmann::json;

// {"k": k, "coeffs": [[re, im], ...]}; Fock states omit "k".
Json to_json(const CoefficientState& s);
Json to_json(const FullFockState& s);
Json to_json(const IdentityReport& r);
/// Levels with optional brute-force values (same order, may be shorter).
Json to_json(const SpectrumResult& r, const std::vector<double>& brute = {});

/// Throws IoError on a malformed document.
CoefficientState state_from_json(const Json& j);
FullFockState fock_from_json(const Json& j);

/// Header l,k,n,E_analytic,E_bruteforce,abs_err, 17 significant digits.
void write_spectrum_csv(std::ostream& os, const SpectrumResult& r,
                        const std::vector<double>& brute);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace su11
