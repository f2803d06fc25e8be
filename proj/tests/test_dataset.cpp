#include <doctest.h>

#include <string>

#include "riskexplain/dataset.hpp"
#include "riskexplain/errors.hpp"

using namespace riskexplain;

namespace {

const char* kSmallCsv =
    "name,version,wmc,dit,cbo,rfc,lcom,loc,bug\n"
    "org.example.Alpha,1.0,4,1,3,5,4,40,0\n"
    "org.example.Beta,1.0,8,2,12,20,30,120,2\n"
    "org.example.Gamma,1.0,2,1,1,6,0,15,1\n";

}  // namespace

TEST_CASE("default mapping loads the PROMISE column layout") {
  auto loaded = data::load_dataset_from_string(kSmallCsv, {}, "example");
  const auto& ds = loaded.dataset;
  REQUIRE(ds.records.size() == 3);
  CHECK(ds.project_name == "example");
  CHECK(ds.version == "1.0");
  CHECK(ds.context_label() == "example 1.0");

  const auto& beta = ds.records[1];
  CHECK(beta.class_name == "org.example.Beta");
  CHECK(beta.bug_count == 2);
  CHECK(beta.metric_value("cbo") == 12.0);
  CHECK(beta.metric_value("rfc") == 20.0);
  CHECK(beta.metric_value("lcom") == 30.0);
  CHECK(beta.metric_value("wmc") == 8.0);
  // unmapped columns (dit, loc) are simply not part of the record
  CHECK_FALSE(beta.metric_value("dit").has_value());
  CHECK(loaded.report.issues.empty());
}

TEST_CASE("version override wins over the version column") {
  auto loaded = data::load_dataset_from_string(kSmallCsv, {}, "example", "9.9");
  CHECK(loaded.dataset.version == "9.9");
}

TEST_CASE("summary counts buggy classes and the exact rate") {
  auto loaded = data::load_dataset_from_string(kSmallCsv, {}, "example");
  auto summary = data::dataset_summary(loaded.dataset);
  CHECK(summary.class_count == 3);
  CHECK(summary.buggy_count == 2);
  CHECK(summary.buggy_rate == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("missing mapped column is an input error naming the column") {
  data::ColumnMapping mapping;
  mapping.set_metric_column("cbo", "coupling");
  try {
    data::load_dataset_from_string(kSmallCsv, mapping, "example");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("coupling") != std::string::npos);
  }
}

TEST_CASE("header lookup falls back to a unique caseless match") {
  const char* csv =
      "Name,Version,WMC,CBO,RFC,LCOM,Bug\n"
      "Foo,2.0,1,2,5,0,0\n";
  auto loaded = data::load_dataset_from_string(csv, {}, "p");
  CHECK(loaded.dataset.records[0].metric_value("cbo") == 2.0);
  CHECK(loaded.dataset.records[0].bug_count == 0);
}

TEST_CASE("malformed metric cell becomes a missing value with an issue") {
  const char* csv =
      "name,version,wmc,cbo,rfc,lcom,bug\n"
      "Foo,1.0,4,not-a-number,5,4,0\n";
  auto loaded = data::load_dataset_from_string(csv, {}, "p");
  REQUIRE(loaded.dataset.records.size() == 1);
  CHECK_FALSE(loaded.dataset.records[0].metric_value("cbo").has_value());
  CHECK(loaded.dataset.records[0].metric_value("wmc") == 4.0);
  CHECK(loaded.report.missing_cells == 1);
  REQUIRE_FALSE(loaded.report.issues.empty());
}

TEST_CASE("malformed bug cell falls back to zero with an issue") {
  const char* csv =
      "name,version,wmc,cbo,rfc,lcom,bug\n"
      "Foo,1.0,4,3,5,4,many\n";
  auto loaded = data::load_dataset_from_string(csv, {}, "p");
  CHECK(loaded.dataset.records[0].bug_count == 0);
  CHECK_FALSE(loaded.report.issues.empty());
}

TEST_CASE("rows with empty names or wrong field counts are skipped") {
  const char* csv =
      "name,version,wmc,cbo,rfc,lcom,bug\n"
      ",1.0,4,3,5,4,0\n"
      "Foo,1.0,4,3\n"
      "Bar,1.0,4,3,5,4,1\n";
  auto loaded = data::load_dataset_from_string(csv, {}, "p");
  REQUIRE(loaded.dataset.records.size() == 1);
  CHECK(loaded.dataset.records[0].class_name == "Bar");
  CHECK(loaded.report.rows_skipped == 2);
  CHECK(loaded.report.rows_loaded == 1);
}

TEST_CASE("zero data rows is an input error") {
  CHECK_THROWS_AS(data::load_dataset_from_string("name,version,wmc,cbo,rfc,lcom,bug\n", {}, "p"),
                  InputError);
}

TEST_CASE("canonical CSV round-trips the records exactly") {
  const char* csv =
      "name,version,wmc,cbo,rfc,lcom,bug\n"
      "Foo,1.0,4.5,bad,5,4,2\n"
      "Bar,1.0,1,2,3,0.125,0\n";
  auto first = data::load_dataset_from_string(csv, {}, "p");
  auto canonical = data::to_canonical_csv(first.dataset);
  auto second = data::load_dataset_from_string(canonical, {}, "p");
  REQUIRE(second.dataset.records.size() == first.dataset.records.size());
  for (std::size_t i = 0; i < first.dataset.records.size(); ++i) {
    const auto& a = first.dataset.records[i];
    const auto& b = second.dataset.records[i];
    CHECK(a.class_name == b.class_name);
    CHECK(a.bug_count == b.bug_count);
    CHECK(a.metrics == b.metrics);
  }
}

TEST_CASE("duplicate class names stay distinct records") {
  const char* csv =
      "name,version,wmc,cbo,rfc,lcom,bug\n"
      "Foo,1.0,1,1,5,0,0\n"
      "Foo,1.0,2,2,6,0,1\n";
  auto loaded = data::load_dataset_from_string(csv, {}, "p");
  REQUIRE(loaded.dataset.records.size() == 2);
  CHECK(loaded.dataset.records[0].row_index == 0);
  CHECK(loaded.dataset.records[1].row_index == 1);
}
