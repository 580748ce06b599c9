#include "g2grad/selfcheck.hpp"

#include <random>
#include <sstream>

#include "g2grad/derivations.hpp"
#include "g2grad/octonion.hpp"

namespace g2grad {

namespace {

Oct random_oct(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Oct x;
  for (int i = 0; i < kOctDim; ++i)
    x.c[i] = Cyc(make_rational(num(rng), den(rng)));
  return x;
}

}  // namespace

SelfCheckReport run_selfcheck(unsigned seed) {
  SelfCheckReport report;
  report.seed = seed;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.ok = report.ok && ok;
    report.items.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    const TableReport table = check_table();
    std::ostringstream detail;
    if (table.ok)
      detail << table.products_checked << "/" << table.products_checked
             << " table entries verified; identity verified on "
             << table.identity_checked << " basis elements; alternative laws "
             << "verified on " << table.alternative_checked << " pairs";
    else
      detail << table.failures.front();
    add("multiplication table vs Zorn form", table.ok, detail.str());
  }

  {
    bool ok = true;
    for (int i = 0; i < kOctDim && ok; ++i)
      for (int j = 0; j < kOctDim && ok; ++j) {
        const Oct x = Oct::basis(i);
        const Oct y = Oct::basis(j);
        ok = conjugate(oct_mul(x, y)) == oct_mul(conjugate(y), conjugate(x));
      }
    add("conjugation anti-automorphism", ok,
        ok ? "verified on all 64 basis pairs" : "failed on a basis pair");
  }

  {
    std::mt19937 rng(seed);
    bool ok = true;
    size_t random_pairs = 0;
    for (int i = 0; i < kOctDim && ok; ++i)
      for (int j = 0; j < kOctDim && ok; ++j) {
        const Oct x = Oct::basis(i);
        const Oct y = Oct::basis(j);
        ok = oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y);
      }
    for (; random_pairs < 1000 && ok; ++random_pairs) {
      const Oct x = random_oct(rng);
      const Oct y = random_oct(rng);
      const Oct xy = oct_mul(x, y);
      ok = oct_norm(xy) == oct_norm(x) * oct_norm(y) && xy == zorn_mul(x, y);
    }
    std::ostringstream detail;
    if (ok)
      detail << "norm(x*y) = norm(x)*norm(y) on 64 basis pairs and "
             << random_pairs << " random pairs (seed " << seed << ")";
    else
      detail << "failed after " << random_pairs << " random pairs";
    add("norm composition", ok, detail.str());
  }

  {
    const auto& basis = derivation_space();
    const bool ok = basis.dim() == kDerDim;
    std::ostringstream detail;
    detail << "dim Der(C) = " << basis.dim();
    add("derivation space dimension", ok, detail.str());

    bool leibniz = true;
    for (const auto& d : basis.elements())
      leibniz = leibniz && is_derivation(d);
    add("derivation basis Leibniz check", leibniz,
        leibniz ? "14/14 basis elements satisfy the Leibniz rule"
                : "a basis element violates the Leibniz rule");

    bool closed = true;
    size_t brackets = 0;
    for (size_t i = 0; i < basis.dim() && closed; ++i)
      for (size_t j = 0; j < basis.dim() && closed; ++j) {
        ++brackets;
        const Matrix br = bracket(basis.elements()[i], basis.elements()[j]);
        closed = basis.span().contains(flatten(br));
      }
    std::ostringstream closure;
    closure << brackets << "/196 brackets stay inside Der(C)";
    add("bracket closure", closed, closure.str());
  }

  {
    const SpanReport span = span_check();
    std::ostringstream detail;
    detail << "combined dim " << span.combined_dim << "; sl3 block dim "
           << span.sl3_dim << "; inner block dim " << span.inner_e1u_dim
           << (span.equals_derivation_space
                   ? "; equals the Leibniz nullspace"
                   : "; DIFFERS from the Leibniz nullspace");
    add("classical spanning set", span.ok, detail.str());
  }

  {
    const Cyc det = killing_form().det();
    const bool ok = !det.is_zero();
    add("Killing form nondegeneracy", ok,
        ok ? "det = " + det.str() : "Killing form is degenerate");
  }

  return report;
}

}  // namespace g2grad
