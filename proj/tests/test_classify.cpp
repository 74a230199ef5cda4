#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbk3/classify.hpp"

#include <fstream>
#include <set>

using namespace hilbk3;

namespace {

ClassifyOptions fast_options() {
  ClassifyOptions opt;
  opt.scan_bound = 25;
  opt.positivity_bound = 50;
  opt.aux_bound = 500;
  return opt;
}

}  // namespace

TEST_CASE("the degree-4 two-point case in full") {
  auto rep = classify(2, 2);
  CHECK(rep.t == 2);
  CHECK(rep.n == 2);
  CHECK(rep.verdict == Verdict::DerivedNaturalInvolution);
  REQUIRE(rep.pell.has_value());
  CHECK(*rep.pell == PellPair{1, 1, -1});
  REQUIRE(rep.pell_positive.has_value());
  CHECK(*rep.pell_positive == PellPair{3, 2, 1});
  REQUIRE(rep.ns_matrix.has_value());
  CHECK((*rep.ns_matrix)(0, 0) == 3);
  REQUIRE(rep.stability.has_value());
  CHECK(rep.stability->x == make_rat(1, 2));
  CHECK(rep.stability->y == make_rat(-1, 2));
  REQUIRE(!rep.checks.empty());
  for (const auto& [name, ok] : rep.checks) {
    INFO(name);
    CHECK(ok);
  }
  REQUIRE(rep.wall_report.has_value());
  CHECK(rep.wall_report->bound == 100);
  CHECK(rep.wall_report->all_empty());
  REQUIRE(rep.positivity.has_value());
  CHECK_FALSE(rep.positivity->witness.has_value());
  CHECK_FALSE(rep.aux.has_value());  // n = 2 has no auxiliary equation
  REQUIRE(rep.biregularity.has_value());
  CHECK(*rep.biregularity == Biregularity::KnownBiregular);
  CHECK(rep.biregularity_source == "Beauville involution");
  REQUIRE(rep.known_description.has_value());
  CHECK(rep.known_description->find("Beauville") != std::string::npos);
}

TEST_CASE("non-existence verdicts") {
  auto sq = classify(2, 3, fast_options());
  CHECK(sq.verdict == Verdict::NoInvolutionSquare);
  CHECK_FALSE(sq.pell.has_value());
  CHECK_FALSE(sq.ns_matrix.has_value());
  CHECK_FALSE(sq.biregularity.has_value());
  CHECK(sq.checks.empty());

  auto uns = classify(2, 4, fast_options());
  CHECK(uns.verdict == Verdict::NoInvolutionNegPellUnsolvable);
  CHECK_FALSE(uns.biregularity.has_value());
}

TEST_CASE("degree 2 is the natural covering involution") {
  auto rep = classify(1, 5, fast_options());
  CHECK(rep.verdict == Verdict::NaturalCoveringInvolution);
  REQUIRE(rep.biregularity.has_value());
  CHECK(*rep.biregularity == Biregularity::KnownBiregular);
  CHECK_FALSE(rep.pell.has_value());
  std::string text = render(rep, RenderFormat::Text);
  CHECK(text.find("natural covering involution") != std::string::npos);
}

TEST_CASE("higher golden cases") {
  auto opt = fast_options();
  auto r11 = classify(5, 11, opt);
  CHECK(r11.verdict == Verdict::DerivedNaturalInvolution);
  CHECK(*r11.pell == PellPair{7, 1, -1});
  REQUIRE(r11.aux.has_value());
  CHECK_FALSE(r11.aux->witness.has_value());
  CHECK(*r11.biregularity == Biregularity::BirationalCertifiedOnPath);

  auto r14 = classify(5, 14, opt);
  CHECK(*r14.pell == PellPair{8, 1, -1});
  CHECK(r14.wall_report->all_empty());
}

TEST_CASE("flopping profiles feed the biregularity gate") {
  auto opt = fast_options();
  opt.flop_profiles = {{0, 1}, {0, -1}};
  auto rep = classify(5, 2, opt);
  REQUIRE(rep.flopping.size() == 2);
  CHECK(rep.flopping[0].verdict == FloppingVerdict::ExcludedOnPath);
  CHECK(rep.flopping[1].verdict == FloppingVerdict::ExcludedOnPath);
  CHECK(*rep.biregularity == Biregularity::BirationalCertifiedOnPath);

  // profile (1,-3) has on-path classes for t=5, n=2: inconclusive, so the
  // verdict falls back to the external case list
  opt.flop_profiles = {{1, -3}};
  auto rep2 = classify(5, 2, opt);
  REQUIRE(rep2.flopping.size() == 1);
  CHECK(rep2.flopping[0].verdict == FloppingVerdict::Inconclusive);
  CHECK(rep2.flopping[0].hits.size() == 2);
  CHECK(*rep2.biregularity == Biregularity::RequiresExternalCaseList);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(classify(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(batch_sweep(3, 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(batch_sweep(2, 2, 5, 4), std::invalid_argument);
}

TEST_CASE("sweep over a small window") {
  auto res = batch_sweep(2, 3, 2, 3, fast_options());
  REQUIRE(res.cells.size() == 4);
  CHECK(res.cells[0].t == 2);
  CHECK(res.cells[0].n == 2);
  CHECK(res.cells[3].t == 3);
  CHECK(res.cells[3].n == 3);
  CHECK(res.error_count == 0);
  CHECK(res.verdict_counts.at("derived-natural-involution") == 1);
  CHECK(res.verdict_counts.at("no-involution") == 3);
}

TEST_CASE("the degree-10 column matches the worked example list") {
  auto opt = fast_options();
  opt.scan_bound = 10;
  auto res = batch_sweep(5, 5, 2, 14, opt);
  std::set<long> derived;
  for (const auto& cell : res.cells) {
    REQUIRE(cell.report.has_value());
    if (cell.report->verdict == Verdict::DerivedNaturalInvolution)
      derived.insert(cell.n.get_si());
  }
  CHECK(derived == std::set<long>{2, 3, 11, 14});
}

TEST_CASE("JSON round trip") {
  auto opt = fast_options();
  opt.flop_profiles = {{0, 1}, {-1, 2}};
  for (const auto& rep :
       {classify(2, 2, opt), classify(5, 3, opt), classify(2, 3, opt),
        classify(2, 4, opt), classify(1, 3, opt)}) {
    std::string text = render(rep, RenderFormat::Json);
    CHECK(render(rep, RenderFormat::Json) == text);  // deterministic
    auto back = parse_report_json(text);
    CHECK(back == rep);
    CHECK(render(back, RenderFormat::Json) == text);
  }
}

TEST_CASE("JSON carries a schema version and string-encoded integers") {
  auto rep = classify(2, 2, fast_options());
  std::string text = render(rep, RenderFormat::Json);
  CHECK(text.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(text.find("\"t\": \"2\"") != std::string::npos);
  CHECK(text.find("\"degree\": \"4\"") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("known examples table") {
  auto table = load_known_examples(HILBK3_DATA_FILE);
  CHECK(table.size() >= 6);

  auto beauville = known_examples_lookup(2, 2, table);
  REQUIRE(beauville.has_value());
  CHECK(beauville->name.find("Beauville") != std::string::npos);

  auto us = known_examples_lookup(5, 3, table);
  REQUIRE(us.has_value());
  CHECK(us->autoequivalence.find("T_{U_S}") != std::string::npos);

  auto d46 = known_examples_lookup(2, 6, table);
  REQUIRE(d46.has_value());
  CHECK(d46->autoequivalence.find("T_{O_S(-H)}") != std::string::npos);

  CHECK_FALSE(known_examples_lookup(7, 2, table).has_value());
  CHECK_THROWS_AS(load_known_examples("/nonexistent/file.json"), std::runtime_error);
}

TEST_CASE("flop profile files") {
  const std::string path = "flop_profiles_test.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n\n0 1\n0 -1\n  2 3  # trailing comment\n";
  }
  auto profs = parse_flop_profiles(path);
  REQUIRE(profs.size() == 3);
  CHECK(profs[0] == std::pair<Int, Int>{0, 1});
  CHECK(profs[1] == std::pair<Int, Int>{0, -1});
  CHECK(profs[2] == std::pair<Int, Int>{2, 3});

  {
    std::ofstream out(path);
    out << "0 1\nnot numbers\n";
  }
  CHECK_THROWS_WITH_AS(parse_flop_profiles(path), doctest::Contains("line 2"),
                       std::invalid_argument);
  {
    std::ofstream out(path);
    out << "0 1 2\n";
  }
  CHECK_THROWS_AS(parse_flop_profiles(path), std::invalid_argument);
  CHECK_THROWS_AS(parse_flop_profiles("/nonexistent/profiles.txt"), std::runtime_error);
}
