#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "qgraph/datasets.hpp"

using namespace qgraph;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "qgraph_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("two spirals generator") {
  const Dataset d = gen_two_spirals(100, 0.02, 7);
  CHECK(d.size() == 200);
  CHECK(d.dim() == 2);
  REQUIRE(d.has_labels());
  CHECK(d.labels->head(100).sum() == 0);
  CHECK(d.labels->tail(100).sum() == 100);

  // zero jitter puts points exactly on the curves: radius equals parameter t
  const Dataset clean = gen_two_spirals(50, 0.0, 1);
  for (Index i = 0; i < clean.size(); ++i) {
    const double r = clean.samples.row(i).norm();
    CHECK(r >= 0.25 - 1e-12);
    CHECK(r <= 1.0 + 1e-12);
  }

  const Dataset again = gen_two_spirals(100, 0.02, 7);
  CHECK(again.samples.cwiseEqual(d.samples).all());
  const Dataset other = gen_two_spirals(100, 0.02, 8);
  CHECK_FALSE(other.samples.cwiseEqual(d.samples).all());

  CHECK_THROWS_AS(gen_two_spirals(5, 0.0, 0), ConfigError);
}

TEST_CASE("pinwheel generator") {
  const Dataset d = gen_pinwheel(60, 5, 3);
  CHECK(d.size() == 300);
  CHECK(d.dim() == 2);
  REQUIRE(d.has_labels());
  for (int c = 0; c < 5; ++c) CHECK((d.labels->array() == c).count() == 60);

  // arms have distinct mean angles
  std::vector<double> mean_angle(5, 0.0);
  for (Index i = 0; i < d.size(); ++i)
    mean_angle[(*d.labels)[i]] += std::atan2(d.samples(i, 1), d.samples(i, 0)) / 60.0;
  std::set<int> rounded;
  for (double a : mean_angle) rounded.insert(static_cast<int>(std::round(a * 10.0)));
  CHECK(rounded.size() == 5);

  CHECK(gen_pinwheel(60, 5, 3).samples.cwiseEqual(d.samples).all());
  CHECK_THROWS_AS(gen_pinwheel(60, 1, 3), ConfigError);
}

TEST_CASE("add noise") {
  const Dataset base = gen_two_spirals(100, 0.0, 1);

  // fraction 1.0 perturbs every row
  Dataset all = add_noise(base, {0.1, 1.0, 9});
  int changed = 0;
  for (Index i = 0; i < base.size(); ++i)
    if ((all.samples.row(i) - base.samples.row(i)).norm() > 0.0) ++changed;
  CHECK(changed == 200);
  CHECK(all.labels->cwiseEqual(*base.labels).all());

  // fraction 0.25 of 200 rows -> exactly 50 rows differ
  Dataset quarter = add_noise(base, {0.1, 0.25, 9});
  changed = 0;
  for (Index i = 0; i < base.size(); ++i)
    if ((quarter.samples.row(i) - base.samples.row(i)).norm() > 0.0) ++changed;
  CHECK(changed == 50);

  // tiny sigma leaves the data essentially unchanged
  Dataset faint = add_noise(base, {1e-12, 1.0, 9});
  CHECK((faint.samples - base.samples).cwiseAbs().maxCoeff() < 1e-10);

  CHECK(add_noise(base, {0.1, 0.5, 4}).samples.cwiseEqual(add_noise(base, {0.1, 0.5, 4}).samples).all());
  CHECK_THROWS_AS(add_noise(base, {0.0, 0.5, 4}), ConfigError);
  CHECK_THROWS_AS(add_noise(base, {0.1, 0.0, 4}), ConfigError);
}

TEST_CASE("csv load and save") {
  const auto path = temp_file("small.csv");
  {
    std::ofstream out(path);
    out << "1.5,2.5\n-3,0.25\n0,1\n";
  }
  Dataset d = load_csv(path.string());
  CHECK(d.size() == 3);
  CHECK(d.dim() == 2);
  CHECK_FALSE(d.has_labels());
  CHECK(d.samples(1, 0) == doctest::Approx(-3.0));

  // last column as labels
  const auto labeled = temp_file("labeled.csv");
  {
    std::ofstream out(labeled);
    out << "1.0,2.0,0\n3.0,4.0,1\n5.0,6.0,1\n";
  }
  Dataset l = load_csv(labeled.string(), -1);
  CHECK(l.dim() == 2);
  REQUIRE(l.has_labels());
  CHECK((*l.labels)[2] == 1);

  // z-scoring: zero mean, unit variance per column
  Dataset z = load_csv(labeled.string(), -1, true);
  CHECK(z.samples.col(0).mean() == doctest::Approx(0.0));
  CHECK(z.samples.col(0).squaredNorm() / 3.0 == doctest::Approx(1.0));

  // round trip through save_csv
  const auto rt = temp_file("roundtrip.csv");
  save_csv(l, rt.string());
  Dataset back = load_csv(rt.string(), -1);
  CHECK((back.samples - l.samples).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.labels->cwiseEqual(*l.labels).all());
}

TEST_CASE("csv parse errors carry positions") {
  const auto bad = temp_file("bad.csv");
  {
    std::ofstream out(bad);
    out << "1.0,2.0\n3.0,oops\n";
  }
  CHECK_THROWS_WITH_AS(load_csv(bad.string()),
                       doctest::Contains("row 2, column 2"), InputError);

  const auto ragged = temp_file("ragged.csv");
  {
    std::ofstream out(ragged);
    out << "1.0,2.0\n3.0\n";
  }
  CHECK_THROWS_WITH_AS(load_csv(ragged.string()), doctest::Contains("row 2"), InputError);

  CHECK_THROWS_AS(load_csv("/nonexistent/nope.csv"), InputError);
}
