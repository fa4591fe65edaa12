#include <gtest/gtest.h>

#include <sstream>

#include "su11/errors.hpp"
#include "su11/serialize.hpp"

using namespace su11;

TEST(Serialize, StateRoundTripIsExact) {
  const auto s = perelomov_coefficients(cplx(0.3, -0.45), BargmannIndex{0.37});
  const auto j = to_json(s);
  EXPECT_EQ(j["k"].get<double>(), 0.37);
  const auto back = state_from_json(Json::parse(j.dump()));
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t n = 0; n < s.size(); ++n) EXPECT_EQ(back[n], s[n]);
}

TEST(Serialize, FockStateOmitsK) {
  const auto psi = squeezed_vacuum(0.5);
  const auto j = to_json(psi);
  EXPECT_FALSE(j.contains("k"));
  const auto back = fock_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.coeffs, psi.coeffs);
}

TEST(Serialize, MalformedInputRaisesIo) {
  EXPECT_THROW(state_from_json(Json::parse(R"({"coeffs": [[1, 0]]})")), IoError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"k": 0.5, "coeffs": [[1]]})")), IoError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"k": -1, "coeffs": [[1, 0]]})")), IoError);
  EXPECT_THROW(fock_from_json(Json::parse(R"({"coeffs": []})")), IoError);
  EXPECT_THROW(read_json_file("/nonexistent/x.json"), IoError);
}

TEST(Serialize, ReportAndSpectrum) {
  const auto r = weak_identity_check(BargmannIndex{0.25}, 3);
  const auto j = to_json(r);
  EXPECT_EQ(j["matrix"].size(), 3u);
  EXPECT_EQ(j["matrix"][1][1][0].get<double>(), r.at(1, 1).real());
  EXPECT_TRUE(j["phase_selftest"].is_number());

  const auto sp = spectrum_analytic({1.0, 0.0, 0.0}, 1);
  std::ostringstream os;
  write_spectrum_csv(os, sp, {0.5, 1.5, 2.5, 3.5});
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "l,k,n,E_analytic,E_bruteforce,abs_err");
  EXPECT_NE(os.str().find("0,0.25,0,0.5,0.5,0\n"), std::string::npos);
  EXPECT_EQ(to_json(sp, {0.5})["levels"][0]["E_bruteforce"].get<double>(), 0.5);
}
