#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <map>

#include "doctest.h"
#include "nz/catalog.hpp"
#include "nz/potential.hpp"

using nz::cplx;

TEST_CASE("data directory override") {
  // A broken override fails loudly before anything is cached.
  setenv("NZFORGE_DATA", "/nonexistent-nzforge-data", 1);
  CHECK_THROWS_AS(nz::load(), nz::SchemaError);
  // Loading from the on-disk copies gives the same corpus as the embedded
  // ones used everywhere else.
  setenv("NZFORGE_DATA", NZ_CATALOG_SOURCE_DIR, 1);
  CHECK(nz::load().size() == 24);
  unsetenv("NZFORGE_DATA");
}

TEST_CASE("corpus shape and lookups") {
  const auto& entries = nz::load();
  CHECK(entries.size() == 24);

  const nz::CatalogEntry& fig8 = nz::get("4_1");
  CHECK(fig8.expected_volume == doctest::Approx(2.02988));
  CHECK(fig8.potential.n_vars() == 1);

  const nz::CatalogEntry& k59 = nz::get("K5_9");
  CHECK(k59.aliases == std::vector<std::string>{"10_132"});
  CHECK(k59.expected_volume == doctest::Approx(4.05686));
  CHECK(&nz::get("10_132") == &k59);

  const nz::CatalogEntry& six3 = nz::get("6_3");
  CHECK(six3.expected_volume == doctest::Approx(5.69302));
  REQUIRE(six3.newton_matrix.has_value());
  CHECK(six3.newton_matrix->rows.size() == 15);
  CHECK(six3.newton_matrix->rows[0].size() == 7);

  CHECK(nz::get("10_139").name == "K5_22");
  CHECK_THROWS_AS(nz::get("bogus"), nz::NotFound);

  for (const auto& entry : entries) CHECK(entry.expected_volume > 0);
}

TEST_CASE("printed solutions satisfy the gluing systems") {
  for (const auto& entry : nz::load()) {
    if (entry.printed_solution.empty()) continue;
    INFO(entry.name);
    nz::GluingSystem sys = nz::gluing_equations(entry.potential);
    std::vector<cplx> sol = entry.solution_vector();
    std::map<std::string, cplx> vals;
    for (std::size_t j = 0; j < sys.vars.size(); ++j)
      vals[sys.vars[j]] = sol[j];
    vals["m"] = cplx(1.0);
    for (const auto& eq : sys.equations) {
      double resid = std::abs(eq.eval(vals)) / eq.eval_magnitude(vals);
      CHECK(resid <= 1e-4);
    }
  }
}

TEST_CASE("explicit polynomials agree with the stored matrices") {
  int seen = 0;
  for (const auto& entry : nz::load()) {
    if (!entry.explicit_apoly || !entry.newton_matrix) continue;
    INFO(entry.name);
    ++seen;
    const nz::MultiPoly& poly = entry.explicit_apoly_corrected
                                    ? *entry.explicit_apoly_corrected
                                    : *entry.explicit_apoly;
    CHECK(nz::newton_matrix(poly) == *entry.newton_matrix);
    if (entry.explicit_apoly_corrected) {
      CHECK(entry.suspect_typo);
      CHECK(!(nz::newton_matrix(*entry.explicit_apoly) ==
              *entry.newton_matrix));
    }
  }
  CHECK(seen >= 4);  // 4_1, pretzel, K4_4, K5_1 all carry both forms
}

TEST_CASE("matrix to polynomial round trip on the whole corpus") {
  for (const auto& entry : nz::load()) {
    if (!entry.newton_matrix) continue;
    INFO(entry.name);
    nz::MultiPoly poly = nz::newton_matrix_to_poly(*entry.newton_matrix);
    CHECK(nz::newton_matrix(poly) == *entry.newton_matrix);
  }
}
