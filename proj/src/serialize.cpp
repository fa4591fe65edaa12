#include "su11/serialize.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "su11/errors.hpp"

namespace su11 {

namespace {

Json coeff_array(std::span<const cplx> c) {
  Json a = Json::array();
  for (const auto& x : c) a.push_back({x.real(), x.imag()});
  return a;
}

std::vector<cplx> coeffs_from(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw IoError("state JSON needs a \"coeffs\" array");
  }
  std::vector<cplx> c;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw IoError("each coefficient must be [re, im]");
    }
    c.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  if (c.empty()) throw IoError("state JSON has no coefficients");
  return c;
}

}  // namespace

Json to_json(const CoefficientState& s) {
  return {{"k", s.k().value()}, {"coeffs", coeff_array(s.coeffs())}};
}

Json to_json(const FullFockState& s) { return {{"coeffs", coeff_array(s.coeffs)}}; }

Json to_json(const IdentityReport& r) {
  Json j = {{"k", r.k.value()},
            {"dimension_checked", r.dimension_checked},
            {"max_offdiag", r.max_offdiag},
            {"max_diag_error", r.max_diag_error}};
  Json rows = Json::array();
  for (int m = 0; m < r.dimension_checked; ++m) {
    Json row = Json::array();
    for (int n = 0; n < r.dimension_checked; ++n) {
      const cplx v = r.at(m, n);
      row.push_back({v.real(), v.imag()});
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  j["phase_selftest"] = r.phase_selftest ? Json(*r.phase_selftest) : Json(nullptr);
  return j;
}

Json to_json(const SpectrumResult& r, const std::vector<double>& brute) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    const auto& lv = r.levels[i];
    Json e = {{"l", lv.l}, {"k", lv.k}, {"n", lv.n}, {"E", lv.energy}};
    if (i < brute.size()) e["E_bruteforce"] = brute[i];
    levels.push_back(std::move(e));
  }
  return {{"levels", std::move(levels)},
          {"eta", {r.eta.real(), r.eta.imag()}},
          {"delta", r.delta},
          {"chi", {r.chi.real(), r.chi.imag()}},
          {"s", r.s},
          {"theta", r.theta},
          {"gap", r.gap}};
}

CoefficientState state_from_json(const Json& j) {
  auto c = coeffs_from(j);
  if (!j.contains("k") || !j["k"].is_number()) throw IoError("state JSON needs a numeric \"k\"");
  try {
    return {BargmannIndex{j["k"].get<double>()}, std::move(c)};
  } catch (const DomainError& e) {
    throw IoError(std::string("state JSON: ") + e.what());
  }
}

FullFockState fock_from_json(const Json& j) { return {coeffs_from(j)}; }

void write_spectrum_csv(std::ostream& os, const SpectrumResult& r,
                        const std::vector<double>& brute) {
  const auto old = os.precision(17);
  os << "l,k,n,E_analytic,E_bruteforce,abs_err\n";
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    const auto& lv = r.levels[i];
    os << lv.l << ',' << lv.k << ',' << lv.n << ',' << lv.energy << ',';
    if (i < brute.size()) {
      os << brute[i] << ',' << std::abs(brute[i] - lv.energy);
    } else {
      os << ',';
    }
    os << '\n';
  }
  os.precision(old);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace su11
