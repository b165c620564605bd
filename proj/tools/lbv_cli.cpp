// Command-line front end: verification suite, normal forms, star products,
// truncated cohomology and expression parsing.

#include <lbv/checks.hpp>
#include <lbv/lbv.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

std::optional<lbv::Rational> parseParameter(const std::string& text, const char* name) {
  if (text == "sym") return std::nullopt;
  lbv::Rational r = lbv::parseRational(text);
  if (std::string(name) == "alpha" && r == 0) throw std::domain_error("alpha must be nonzero");
  return r;
}

lbv::ModelParams modelParams(const std::string& alpha, const std::string& hbar) {
  auto a = parseParameter(alpha, "alpha");
  auto h = parseParameter(hbar, "hbar");
  return lbv::ModelParams(a ? lbv::Scalar(*a) : lbv::Scalar::alpha(), h ? lbv::Scalar(*h) : lbv::Scalar::hbar());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice BV quantization toolkit: exact checks for the discrete free scalar field"};
  app.require_subcommand(1);

  std::string alpha = "sym", hbar = "sym";

  auto* check = app.add_subcommand("check", "Run named verification checks");
  bool all = false;
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  std::string format = "text";
  check->add_flag("--all", all, "Run every check");
  check->add_option("--id", ids, "Check id (repeatable)");
  check->add_option("--alpha", alpha, "alpha as p/q, or sym")->capture_default_str();
  check->add_option("--hbar", hbar, "hbar as p/q, or sym")->capture_default_str();
  check->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
  bool tamper = false;
  check->add_flag("--tamper", tamper, "Perturb every certificate before it is rechecked");
  check->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  check->add_flag_callback("--list", [] {
    for (const auto& id : lbv::checkIds()) std::cout << id << "\n";
    std::exit(0);
  }, "List check ids and exit");

  auto* nf = app.add_subcommand("nf", "Reduce an even degree-0 cochain to a two-site window");
  std::string nfExpr, nfInterval = "-4,4", strategy = "right";
  int window = 0;
  nf->add_option("expr", nfExpr, "Cochain expression")->required();
  nf->add_option("--interval", nfInterval, "Ambient interval a,b")->capture_default_str();
  nf->add_option("--window", window, "Window base w (sites w, w+1)")->capture_default_str();
  nf->add_option("--strategy", strategy, "Rewrite order")->check(CLI::IsMember({"right", "left"}))->capture_default_str();
  nf->add_option("--alpha", alpha, "alpha as p/q, or sym")->capture_default_str();
  nf->add_option("--hbar", hbar, "hbar as p/q, or sym")->capture_default_str();

  auto* star = app.add_subcommand("star", "Star product of two degree-0 classes");
  std::string lhs, rhs, geometry = "default";
  star->add_option("x", lhs, "Left factor")->required();
  star->add_option("y", rhs, "Right factor")->required();
  star->add_option("--geometry", geometry, "Interval layout")
      ->check(CLI::IsMember({"default", "massless35"}))
      ->capture_default_str();
  star->add_option("--alpha", alpha, "alpha as p/q, or sym")->capture_default_str();
  star->add_option("--hbar", hbar, "hbar as p/q, or sym")->capture_default_str();

  auto* cohomology = app.add_subcommand("cohomology", "Dimensions of truncated cohomology by exact linear algebra");
  std::string cInterval;
  int maxdeg = 2, mindeg = 0;
  std::string cHbar = "1", cAlpha = "1";
  cohomology->add_option("--interval", cInterval, "Interval a,b")->required();
  cohomology->add_option("--maxdeg", maxdeg, "Polynomial degree bound")->capture_default_str();
  cohomology->add_option("--mindeg", mindeg, "Drop monomials below this degree")->capture_default_str();
  cohomology->add_option("--hbar", cHbar, "hbar as p/q")->capture_default_str();
  cohomology->add_option("--alpha", cAlpha, "alpha as p/q")->capture_default_str();

  auto* parse = app.add_subcommand("parse", "Parse and print a cochain in canonical form");
  std::string parseExpr;
  parse->add_option("expr", parseExpr, "Cochain expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      lbv::CheckConfig cfg;
      cfg.alpha = parseParameter(alpha, "alpha");
      cfg.hbar = parseParameter(hbar, "hbar");
      cfg.seed = seed;
      cfg.tamper = tamper;
      std::vector<std::string> selected = all ? lbv::checkIds() : ids;
      auto results = lbv::runChecks(selected, cfg);
      std::cout << lbv::emitReport(results, lbv::parseReportFormat(format));
      return lbv::exitStatus(results);
    }
    if (*nf) {
      lbv::ModelParams p = modelParams(alpha, hbar);
      auto s = strategy == "left" ? lbv::Strategy::LeftmostOutermost : lbv::Strategy::RightmostOutermost;
      auto cert = lbv::normalForm(lbv::parseCochain(nfExpr), lbv::Interval::parse(nfInterval), lbv::Window{window}, p, s);
      std::cout << lbv::toString(cert) << "\nverified: " << (lbv::witness::recheck(cert, p) ? "yes" : "no") << "\n";
      return 0;
    }
    if (*star) {
      lbv::ModelParams p = modelParams(alpha, hbar);
      lbv::StarGeometry g = lbv::StarGeometry::byName(geometry);
      lbv::H0Class x(lbv::parseCochain(lhs), g.ambient, p), y(lbv::parseCochain(rhs), g.ambient, p);
      lbv::H0Class xy = lbv::starProduct(x, y, g, p);
      std::cout << "class: " << xy.canonical().str() << "\n";
      int degree = std::max(0, xy.canonical().maxPolynomialDegree());
      lbv::WeylIdentification W(p, degree, g);
      std::cout << "weyl: " << W.classToWeyl(xy).str() << "\n";
      return 0;
    }
    if (*cohomology) {
      lbv::TruncationSpec t{lbv::Interval::parse(cInterval), maxdeg, lbv::parseRational(cHbar),
                            lbv::parseRational(cAlpha), mindeg};
      for (auto [k, d] : lbv::cohomologyOracle(t)) std::cout << "H^" << k << ": " << d << "\n";
      return 0;
    }
    if (*parse) {
      std::cout << lbv::parseCochain(parseExpr).str() << "\n";
      return 0;
    }
  } catch (const lbv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
