// Command-line front end: states, identity checks, spectra and transforms.
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "su11/analytic_reps.hpp"
#include "su11/errors.hpp"
#include "su11/resolutions.hpp"
#include "su11/serialize.hpp"
#include "su11/two_photon.hpp"

using namespace su11;

namespace {

// "re" or "re,im"
cplx parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw DomainError("not a number: " + text);
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) throw DomainError("complex values are written re,im: " + text);
    in >> std::ws;
    if (!in.eof()) throw DomainError("trailing characters in " + text);
  }
  return {re, im};
}

Json cjson(cplx z) { return {z.real(), z.imag()}; }

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(out, j);
  }
}

struct QuadOpts {
  QuadratureSpec q;
  bool serial = false;

  void add(CLI::App* app) {
    app->add_option("--radial-nodes", q.radial_nodes, "Gauss-Legendre nodes per radial panel");
    app->add_option("--angular-nodes", q.angular_nodes, "trapezoid nodes in the angle");
    app->add_option("--segment-nodes", q.segment_nodes, "nodes per keyhole segment");
    app->add_option("--contour-radius", q.contour_radius, "radius of the loop around t = 1");
    app->add_option("--plane-cutoff", q.plane_cutoff, "outer radius of the plane integral");
    app->add_flag("--serial", serial, "evaluate quadrature nodes on one thread");
  }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

struct StateCmd {
  std::string kind;
  double k = 0.25;
  std::string zeta = "0";
  std::string z = "0";
  std::string alpha = "0";
  int truncation = kDefaultTruncation;
  std::string out;

  int run() const {
    Json j;
    std::ostringstream summary;
    summary.precision(17);
    if (kind == "perelomov" || kind == "bg") {
      const auto s = kind == "perelomov"
                         ? perelomov_coefficients(parse_complex(zeta), BargmannIndex{k}, truncation)
                         : bg_coefficients(parse_complex(z), BargmannIndex{k}, truncation);
      j = to_json(s);
      summary << "norm " << s.norm() << "\nradius_estimate " << radius_estimate(s) << '\n';
    } else {
      FullFockState s;
      if (kind == "squeezed-vacuum") {
        s = squeezed_vacuum(parse_complex(zeta), truncation);
      } else if (kind == "squeezed-one") {
        s = squeezed_one_photon(parse_complex(zeta), truncation);
      } else {
        s = even_odd_coherent(parse_complex(alpha), kind == "even-cat" ? Parity::even : Parity::odd);
      }
      j = to_json(s);
      const auto split = split_even_odd(s);
      summary << "norm " << std::sqrt(s.norm_squared()) << "\nNe " << split.Ne << "\nNo "
              << split.No << '\n';
    }
    emit(j, out);
    (out.empty() ? std::cerr : std::cout) << summary.str();
    return 0;
  }
};

struct CheckCmd {
  std::string which;
  double k = 0.25;
  int M = 6;
  std::string eta = "0";
  QuadOpts quad;
  std::string out;

  int run() const {
    IdentityReport r = [&] {
      if (which == "disk") return disk_identity_check(BargmannIndex{k}, M, quad.q, quad.exec());
      if (which == "bg") return bg_identity_check(BargmannIndex{k}, M, quad.q, quad.exec());
      if (which == "weak") return weak_identity_check(BargmannIndex{k}, M, quad.q, quad.exec());
      return squeezed_resolution_check(M, parse_complex(eta), quad.q, quad.exec());
    }();
    emit(to_json(r), out);
    const bool pass = r.max_offdiag <= 1e-6 && r.max_diag_error <= 1e-6;
    std::ostream& log = out.empty() ? std::cerr : std::cout;
    log.precision(3);
    log << which << " M=" << M << " max_offdiag " << r.max_offdiag << " max_diag_error "
        << r.max_diag_error << (pass ? " PASS" : " FAIL") << '\n';
    return pass ? 0 : 1;
  }
};

struct SpectrumCmd {
  double omega = 1.0;
  double g_re = 0.0, g_im = 0.0, f_re = 0.0, f_im = 0.0;
  int lmax = 5;
  int M = 256;
  std::string out;
  std::string json_out;

  int run() const {
    const HamiltonianParams h{omega, {g_re, g_im}, {f_re, f_im}};
    const auto r = spectrum_analytic(h, lmax);
    const auto bf = brute_force_spectrum(h, M);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.levels.size() && i < bf.size(); ++i) {
      // only the lower quarter of the truncated spectrum is converged
      if (4 * r.levels[i].n <= M) worst = std::max(worst, std::abs(bf[i] - r.levels[i].energy));
    }
    if (out.empty()) {
      write_spectrum_csv(std::cout, r, bf);
    } else {
      std::ofstream f(out);
      if (!f) throw IoError("cannot write " + out);
      write_spectrum_csv(f, r, bf);
    }
    if (!json_out.empty()) write_json_file(json_out, to_json(r, bf));
    std::cerr.precision(3);
    std::cerr << "max |E_analytic - E_bruteforce| " << worst << '\n';
    return worst <= 1e-6 ? 0 : 1;
  }
};

struct TransformCmd {
  std::string direction;
  std::string in;
  int random_terms = 0;
  double k = 0.25;
  std::uint64_t seed = 1;
  std::vector<std::string> points;
  int samples = 5;
  double tau = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  QuadOpts quad;
  std::string out;

  CoefficientState load(std::mt19937_64& g) const {
    if (!in.empty()) return state_from_json(read_json_file(in));
    if (random_terms < 1) throw DomainError("give --in FILE or --random N");
    std::normal_distribution<double> n;
    std::vector<cplx> c(random_terms);
    double s = 0.0;
    for (auto& x : c) {
      x = {n(g), n(g)};
      s += std::norm(x);
    }
    for (auto& x : c) x /= std::sqrt(s);
    return {BargmannIndex{k}, std::move(c)};
  }

  std::vector<cplx> sample_points(std::mt19937_64& g) const {
    std::vector<cplx> p;
    for (const auto& t : points) p.push_back(parse_complex(t));
    if (!p.empty()) return p;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
      if (direction == "F2G") {
        p.emplace_back(1.1 + 2.9 * u(g), -3.0 + 6.0 * u(g));
      } else if (direction == "mobius") {
        p.push_back(std::polar(0.5 * std::sqrt(u(g)), 2.0 * M_PI * u(g)));
      } else {
        p.emplace_back(-2.0 + 4.0 * u(g), -2.0 + 4.0 * u(g));
      }
    }
    return p;
  }

  int run() const {
    std::mt19937_64 g(seed);
    const auto s = load(g);
    const auto pts = sample_points(g);
    const GroupElement el(std::polar(std::cosh(0.5 * tau), psi), std::polar(std::sinh(0.5 * tau), phi));
    Json rows = Json::array();
    double worst = 0.0;
    std::optional<CoefficientState> moved;
    if (direction == "mobius" || direction == "bg-laguerre") moved = mobius_transform_G(s, el);
    for (const cplx x : pts) {
      cplx value;
      cplx cross;
      if (direction == "F2G") {
        value = laplace_F_to_G(s, x, quad.q);
        cross = eval_G(s, 1.0 / x);
      } else if (direction == "G2F") {
        value = inverse_laplace_G_to_F(s, x, quad.q);
        cross = eval_F(s, x);
      } else if (direction == "mobius") {
        value = eval_G(*moved, x);
        cross = eval_G(s, el.mobius(x)) * mobius_multiplier(el, x, s.k().value());
      } else {
        value = std::abs(el.b()) < 1e-14 ? bg_rotation_transform(s, el, x) : bg_su11_transform(s, el, x);
        cross = inverse_laplace_G_to_F(*moved, x, quad.q);
      }
      const double diff = std::abs(value - cross);
      worst = std::max(worst, diff);
      rows.push_back({{"point", cjson(x)}, {"value", cjson(value)}, {"cross_route", cjson(cross)},
                      {"abs_diff", diff}});
    }
    emit({{"direction", direction}, {"k", s.k().value()}, {"max_abs_diff", worst}, {"rows", rows}}, out);
    return worst <= 1e-6 ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Analytic representations of the SU(1,1) positive discrete series.\n"
      "Exit codes: 0 pass, 1 check failed, 2 domain error, 3 convergence error,\n"
      "4 continuous-spectrum regime, 5 I/O error."};
  app.require_subcommand(1);

  StateCmd st;
  auto* state = app.add_subcommand(
      "state",
      "Write a state as JSON {\"k\", \"coeffs\": [[re, im], ...]}.\n"
      "  perelomov        orbit of the lowest state, C_n = (1-|zeta|^2)^k w_n zeta^n\n"
      "  bg               eigenstate of the lowering generator with eigenvalue z\n"
      "  squeezed-vacuum  squeezing operator on |0>, the k=1/4 orbit on even levels\n"
      "  squeezed-one     squeezing operator on |1>, the k=3/4 orbit on odd levels\n"
      "  even-cat/odd-cat normalized |alpha> +- |-alpha>, the lowering eigenstates\n"
      "                   of a^2/2 with eigenvalue alpha^2/2\n"
      "Fock-space states omit \"k\". Complex values are written re,im.");
  state->add_option("kind", st.kind)
      ->required()
      ->check(CLI::IsMember({"perelomov", "bg", "squeezed-vacuum", "squeezed-one", "even-cat", "odd-cat"}));
  state->add_option("--k", st.k, "Bargmann index (perelomov, bg)");
  state->add_option("--zeta", st.zeta, "disk label, |zeta| < 1");
  state->add_option("--z", st.z, "lowering eigenvalue (bg)");
  state->add_option("--alpha", st.alpha, "Glauber amplitude (cats)");
  state->add_option("--N", st.truncation, "initial truncation; grown until the tail is negligible");
  state->add_option("-o,--out", st.out, "output file (default stdout)");

  CheckCmd ck;
  auto* check = app.add_subcommand(
      "check",
      "Resolution of the identity on the first M basis states; exit 0 iff every\n"
      "matrix entry is within 1e-6 of the identity.\n"
      "  disk      ((2k-1)/pi) d^2zeta/(1-|zeta|^2)^2 over the unit disk, k > 1/2\n"
      "  bg        (2/pi) K_{2k-1}(2|z|) I_{2k-1}(2|z|) d^2z over the plane\n"
      "  weak      loop integral in t = |zeta|^2 around the branch point t = 1,\n"
      "            valid for every k with 2k not an integer\n"
      "  squeezed  two-photon loops: k=1/4 with +1/(8 pi), k=3/4 with -1/(8 pi),\n"
      "            displaced by D(eta) on the Fock space");
  check->add_option("which", ck.which)->required()->check(CLI::IsMember({"disk", "bg", "weak", "squeezed"}));
  check->add_option("--k", ck.k, "Bargmann index");
  check->add_option("--M", ck.M, "number of basis states checked");
  check->add_option("--eta", ck.eta, "displacement for the squeezed check");
  ck.quad.add(check);
  check->add_option("-o,--out", ck.out, "report JSON (default stdout)");

  SpectrumCmd sp;
  auto* spectrum = app.add_subcommand(
      "spectrum",
      "Levels of omega(a^dag a + 1/2) + (g/2) a^dag^2 + (g*/2) a^2 + f a^dag + f* a.\n"
      "Closed form E_l(k) = 2 sqrt(omega^2 - |g|^2)(k + l) - delta for k = 1/4, 3/4,\n"
      "compared against diagonalization on M+1 Fock levels. CSV columns\n"
      "l,k,n,E_analytic,E_bruteforce,abs_err. Exit 0 iff the levels with n <= M/4\n"
      "agree within 1e-6; exit 4 when omega <= |g| (continuous spectrum).");
  spectrum->add_option("omega", sp.omega)->required();
  spectrum->add_option("g_re", sp.g_re)->required();
  spectrum->add_option("g_im", sp.g_im)->required();
  spectrum->add_option("f_re", sp.f_re)->required();
  spectrum->add_option("f_im", sp.f_im)->required();
  spectrum->add_option("--lmax", sp.lmax, "largest l");
  spectrum->add_option("--M", sp.M, "Fock truncation for the diagonalization (>= 64)");
  spectrum->add_option("-o,--out", sp.out, "CSV file (default stdout)");
  spectrum->add_option("--json", sp.json_out, "also write the result as JSON");

  TransformCmd tr;
  auto* transform = app.add_subcommand(
      "transform",
      "Evaluate a transform at sample points next to an independent route.\n"
      "  F2G          G(1/rho) from the Laplace integral of z^{2k-1} F(z), points rho\n"
      "               with Re rho > 0, |rho| > 1; cross route: the disk series\n"
      "  G2F          inverse Laplace integral of rho^{-2k} G(1/rho); cross route:\n"
      "               the entire-function series\n"
      "  mobius       G(g.zeta)(b* zeta + a*)^{-2k} from the resampled coefficients;\n"
      "               cross route: direct evaluation\n"
      "  bg-laguerre  transformed F from the Laguerre-polynomial law; cross route:\n"
      "               inverse Laplace of the Mobius-transformed state\n"
      "The group element is a = cosh(tau/2) e^{i psi}, b = sinh(tau/2) e^{i phi}.");
  transform->add_option("direction", tr.direction)
      ->required()
      ->check(CLI::IsMember({"F2G", "G2F", "mobius", "bg-laguerre"}));
  transform->add_option("--in", tr.in, "state JSON file");
  transform->add_option("--random", tr.random_terms, "use a random normalized state with N terms");
  transform->add_option("--k", tr.k, "Bargmann index of the random state");
  transform->add_option("--seed", tr.seed, "seed for random states and points");
  transform->add_option("--point", tr.points, "sample point re,im (repeatable)");
  transform->add_option("--samples", tr.samples, "number of random points when none given");
  transform->add_option("--tau", tr.tau, "hyperbolic rapidity");
  transform->add_option("--phi", tr.phi, "phase of b");
  transform->add_option("--psi", tr.psi, "phase of a");
  tr.quad.add(transform);
  transform->add_option("-o,--out", tr.out, "output JSON (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (state->parsed()) return st.run();
    if (check->parsed()) return ck.run();
    if (spectrum->parsed()) return sp.run();
    return tr.run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}
