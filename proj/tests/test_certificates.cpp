#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "support/tamper.hpp"
#include "support/test_graphs.hpp"
#include "trichrome/certificate.hpp"
#include "trichrome/oracle.hpp"
#include "trichrome/solver.hpp"

using namespace trichrome;
namespace tg = trichrome::testgraphs;

TEST_CASE("verify_coloring") {
  SECTION("K3 with three singletons") {
    REQUIRE(verify_coloring(tg::complete(3), {{{0}, {1}, {2}}}).ok);
  }
  SECTION("C5 with classes {0,2},{1,3},{4}") {
    REQUIRE(verify_coloring(tg::cycle(5), {{{0, 2}, {1, 3}, {4}}}).ok);
  }
  SECTION("edge inside a class is rejected with a reason") {
    const auto r = verify_coloring(tg::complete(3), {{{0, 1}, {2}}});
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.reason == "edge inside a class");
  }
  SECTION("malformed certificates are rejected, not thrown") {
    REQUIRE_FALSE(verify_coloring(tg::cycle(4), {{{0}, {1}, {2}}}).ok);  // missing 3
    REQUIRE_FALSE(verify_coloring(tg::cycle(4), {{{0, 1}, {1, 2}, {3}}}).ok);
    REQUIRE_FALSE(verify_coloring(tg::cycle(4), {{{0}, {1}, {2}, {3}}}).ok);
    REQUIRE_FALSE(verify_coloring(tg::cycle(4), {{{0, 2}, {1, 3}, {9}}}).ok);
  }
}

TEST_CASE("verify_uncolorability on hand-built certificates") {
  SECTION("K4 with the empty-step certificate") {
    UncolorabilityCertificate cert;
    cert.k4 = {0, 1, 2, 3};
    REQUIRE(verify_uncolorability(tg::complete(4), cert).ok);
    REQUIRE(certificate_size(cert) == 0);
  }
  SECTION("K112 accepts no certificate") {
    UncolorabilityCertificate cert;
    cert.k4 = {0, 1, 2, 3};
    REQUIRE_FALSE(verify_uncolorability(tg::k112(), cert).ok);
    cert.steps.push_back({0, 1, DiamondJustification{2, 3}});
    cert.k4 = {2, 3, 4, 4};
    REQUIRE_FALSE(verify_uncolorability(tg::k112(), cert).ok);
  }
  SECTION("wheel W5 certificate from the solver replays") {
    const Graph w5 = tg::wheel(5);
    REQUIRE_FALSE(exhaustive_3col(w5));  // chi(W5) = 4
    const auto out = is_3_colorable(w5, 0);
    REQUIRE(out.verdict == Verdict::no);
    const auto r = verify_uncolorability(w5, out.uncolorability());
    REQUIRE(r.ok);
    REQUIRE(r.ops > 0);
  }
  SECTION("failing step index is reported") {
    UncolorabilityCertificate cert;
    cert.steps.push_back({0, 1, DiamondJustification{2, 3}});  // valid on K112
    cert.steps.push_back({2, 3, DiamondJustification{4, 4}});  // 2,3 adjacent
    cert.k4 = {0, 1, 2, 3};
    const auto r = verify_uncolorability(tg::k112(), cert);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.step_path == std::vector<std::size_t>{1});
  }
}

TEST_CASE("certificate size and verification step counts") {
  UncolorabilityCertificate empty;
  empty.k4 = {0, 1, 2, 3};
  REQUIRE(certificate_size(empty) == 0);

  UncolorabilityCertificate one;
  one.steps.push_back({0, 1, DiamondJustification{2, 3}});
  one.k4 = {0, 1, 2, 3};
  REQUIRE(certificate_size(one) == 1);

  UncolorabilityCertificate nested;
  nested.steps.push_back(
      {0, 1, NestedEdgeJustification{
                 std::make_shared<const UncolorabilityCertificate>(empty)}});
  nested.k4 = {0, 1, 2, 3};
  REQUIRE(certificate_size(nested) == 1);

  nested.steps.push_back({2, 3, NestedEdgeJustification{
                                    std::make_shared<const UncolorabilityCertificate>(one)}});
  REQUIRE(certificate_size(nested) == 3);

  const Graph k4 = tg::complete(4);
  REQUIRE(verification_step_count(k4, empty) > 0);
}

TEST_CASE("verifier does not mutate its input") {
  const Graph w5 = tg::wheel(5);
  const Graph copy = w5;
  const auto out = is_3_colorable(w5, 0);
  REQUIRE(verify_uncolorability(w5, out.uncolorability()).ok);
  REQUIRE(w5 == copy);
}

TEST_CASE("soundness: accepted certificates imply the oracle verdict") {
  std::mt19937_64 rng(424242);
  int no_instances = 0, yes_instances = 0, tampered = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 5 + static_cast<int>(rng_below(rng, 8));  // up to 12
    const double d = 2.0 + rng_unit(rng) * 6.0;             // d in [2, 8)
    const int m = std::min<int>(static_cast<int>(d * n / 2), n * (n - 1) / 2);
    const Graph g = tg::random_gnm(n, m, rng);
    const auto truth = exhaustive_3col(g);

    SolveConfig cfg;
    cfg.alpha_max = 6;
    auto [out, oa] = bfs_3col(g, cfg);
    if (out.verdict == Verdict::no) {
      ++no_instances;
      REQUIRE_FALSE(truth.has_value());
      const auto& cert = out.uncolorability();
      REQUIRE(verify_uncolorability(g, cert).ok);

      // every guaranteed-invalid mutation must be rejected
      for (auto kind : {tamper::Kind::witness_flip, tamper::Kind::drop_step,
                        tamper::Kind::wrong_k4, tamper::Kind::adjacent_pair}) {
        if (auto mut = tamper::make_invalid(g, cert, kind, rng)) {
          ++tampered;
          REQUIRE_FALSE(verify_uncolorability(g, mut->first).ok);
        }
        if (auto mut = tamper::make_invalid_nested(g, cert, kind, rng)) {
          ++tampered;
          REQUIRE_FALSE(verify_uncolorability(g, mut->first).ok);
        }
      }
      // swapping two steps must flip the verdict or stay sound
      if (cert.steps.size() >= 2) {
        UncolorabilityCertificate perm = cert;
        const std::size_t i = rng_below(rng, perm.steps.size() - 1);
        std::swap(perm.steps[i], perm.steps[i + 1]);
        if (verify_uncolorability(g, perm).ok) REQUIRE_FALSE(truth.has_value());
      }
    } else if (out.verdict == Verdict::yes) {
      ++yes_instances;
      REQUIRE(truth.has_value());
      REQUIRE(verify_coloring(g, out.coloring()).ok);
      // an uncolorability certificate for a colorable graph must never verify:
      // steal a certificate from a No instance of the same size if available
    }
  }
  REQUIRE(no_instances > 50);
  REQUIRE(yes_instances > 50);
  REQUIRE(tampered > 200);
}

TEST_CASE("verification cost grows polynomially on the odd-wheel family") {
  std::vector<double> xs, ys;
  for (int rim = 5; rim <= 41; rim += 4) {
    const Graph w = tg::wheel(rim);
    const auto out = is_3_colorable(w, 0);
    REQUIRE(out.verdict == Verdict::no);
    const auto& cert = out.uncolorability();
    const double work = static_cast<double>(verification_step_count(w, cert));
    const double size = static_cast<double>(w.vertex_count()) *
                        static_cast<double>(certificate_size(cert));
    xs.push_back(size);
    ys.push_back(work);
  }
  // log-log slope of verifier work against n * certificate_size
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int k = static_cast<int>(xs.size());
  for (int i = 0; i < k; ++i) {
    sx += std::log(xs[i]);
    sy += std::log(ys[i]);
    sxx += std::log(xs[i]) * std::log(xs[i]);
    sxy += std::log(xs[i]) * std::log(ys[i]);
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  REQUIRE(slope <= 3.0);
}
